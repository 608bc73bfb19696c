//! Exact combinatorics of weight modules over the Lie superalgebras
//! sl(∞|m), osp(∞|·), p(∞) and q(∞), computed at finite rank.
//!
//! The modules mirror the workflow: [`weight`] and [`roots`] supply the
//! arithmetic, [`diagram`] the gl(n|m) weight-diagram calculus, [`oddref`]
//! odd reflections between Borels, [`catalog`] the classified simple
//! modules, [`characters`] tableau oracles and [`blocks`] Kac modules and
//! Ext¹ between catalog families.

pub mod acceptance;
pub mod blocks;
pub mod catalog;
pub mod characters;
pub mod diagram;
pub mod error;
pub mod oddref;
pub mod parse;
pub mod roots;
pub mod weight;

pub use error::{Error, Result};
pub use roots::{AlgebraFamily, BorelSeq, Root, RootParity};
pub use weight::{Kind, Parity, Slot, Weight, Q};
