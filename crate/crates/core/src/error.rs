use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinate {0} is not an integer")]
    NonIntegralWeight(String),
    #[error("shifted marks are not strictly monotone")]
    NotDominant,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("sign map required for {0}")]
    MissingSignMap(String),
    #[error("sign map not allowed for {0}")]
    UnexpectedSignMap(String),
    #[error("maximal slot {0} is a delta slot with sign -1")]
    IllegalSignOnMaxDeltaSlot(String),
    #[error("slot mismatch: {0}")]
    SlotMismatch(String),
    #[error("bad interval: need b < a, got b={b}, a={a}")]
    BadInterval { b: i64, a: i64 },
    #[error("no integral central shift aligns the weights")]
    NoIntegralAlignment,
    #[error("slots at position {0} and {1} have the same kind")]
    NotOddSimple(usize, usize),
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("rank must be positive: {0}")]
    NonPositiveRank(String),
    #[error("rank {n} too small, need at least {need}")]
    RankTooSmall { n: usize, need: usize },
    #[error("spinor weight must be +-1/2 valued: {0}")]
    BadParity(String),
    #[error("not a root-lattice translate: {0}")]
    NotInRootLatticeTranslate(String),
    #[error("unsupported order rule: {0}")]
    UnsupportedOrderRule(String),
    #[error("enumeration of size {size} exceeds budget {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("diagram admits {0} legal moves, expected at most one")]
    MultipleMoves(usize),
    #[error("window has {0} ranks, need at least 3")]
    WindowTooSmall(usize),
    #[error("verdict changes inside the window at n={0}")]
    UnstableVerdict(usize),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("algebras differ: {0}")]
    AlgebraMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonIntegralWeight(_) => "NonIntegralWeight",
            Error::NotDominant => "NotDominant",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::RankMismatch(_) => "RankMismatch",
            Error::MissingSignMap(_) => "MissingSignMap",
            Error::UnexpectedSignMap(_) => "UnexpectedSignMap",
            Error::IllegalSignOnMaxDeltaSlot(_) => "IllegalSignOnMaxDeltaSlot",
            Error::SlotMismatch(_) => "SlotMismatch",
            Error::BadInterval { .. } => "BadInterval",
            Error::NoIntegralAlignment => "NoIntegralAlignment",
            Error::NotOddSimple(..) => "NotOddSimple",
            Error::BadPartition(_) => "BadPartition",
            Error::NonPositiveRank(_) => "NonPositiveRank",
            Error::RankTooSmall { .. } => "RankTooSmall",
            Error::BadParity(_) => "BadParity",
            Error::NotInRootLatticeTranslate(_) => "NotInRootLatticeTranslate",
            Error::UnsupportedOrderRule(_) => "UnsupportedOrderRule",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::MultipleMoves(_) => "MultipleMoves",
            Error::WindowTooSmall(_) => "WindowTooSmall",
            Error::UnstableVerdict(_) => "UnstableVerdict",
            Error::InvalidFamily(_) => "InvalidFamily",
            Error::AlgebraMismatch(_) => "AlgebraMismatch",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
