//! `superweight`: every library operation behind one command.
//!
//! Exit status is 0 on success, 2 on usage errors (including malformed
//! literals) and 1 on domain errors, which print `Name: message` on stderr.

mod out;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use superweight::blocks::{block_graph, ext1_dim, kac_structure, unique_legal_move, KacStructure};
use superweight::catalog::{
    classify_bounded, dual_family, extend_to_gl, family_highest_weight, highest_weight_at,
    hw_borel_condition, isomorphic, q_hw_space_dim, support_contains, validate_singular_shape,
    FamilySpec, HwBorel, OrderRule, SeqWeight, ShapeCase, SupportSet,
};
use superweight::characters::{
    hook_multiplicities, max_multiplicity_sweep, super_ext_dim, super_sym_dim,
};
use superweight::diagram::{
    atypicality, diagram_of, ext1_nonzero, l_count, legal_moves, weight_of, WeightDiagram,
};
use superweight::oddref::{
    odd_reflect, omega_source, omega_table, transport, HighestWeightState, OmegaArg, OmegaKind,
};
use superweight::parse::{parse_coords, parse_nats, parse_range, parse_shape, parse_weight};
use superweight::roots::{natural_support, parse_order, parse_signs, positive_roots, roots};
use superweight::weight::{
    c_of, central_shift, central_shift_between, pairing, rho, shift, unshift, ShiftedWeight,
};
use superweight::{AlgebraFamily, BorelSeq, Error, Weight, Q};

use out::{diagram_json, parity_json, q_json, weight_json, Out};

#[derive(Parser)]
#[command(
    name = "superweight",
    version,
    about = "Exact weight combinatorics for Lie superalgebras at infinity"
)]
struct Cli {
    /// Emit JSON (sorted keys, `"schema": 1`) instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

type Shape = (usize, usize);
type Range = (usize, usize);

fn weight_arg(s: &str) -> Result<Weight, String> {
    parse_weight(s).map_err(|e| e.to_string())
}
fn shape_arg(s: &str) -> Result<Shape, String> {
    parse_shape(s).map_err(|e| e.to_string())
}
fn range_arg(s: &str) -> Result<Range, String> {
    parse_range(s).map_err(|e| e.to_string())
}
fn algebra_arg(s: &str) -> Result<AlgebraFamily, String> {
    s.parse::<AlgebraFamily>().map_err(|e| e.to_string())
}
/// A partition flag; wrapped so clap takes it as one value.
#[derive(Clone)]
struct Nats(Vec<u64>);

fn nats_arg(s: &str) -> Result<Nats, String> {
    parse_nats(s).map(Nats).map_err(|e| e.to_string())
}
fn rational_arg(s: &str) -> Result<Q, String> {
    superweight::parse::parse_rational(s).map_err(|e| e.to_string())
}
fn omega_arg(s: &str) -> Result<OmegaKind, String> {
    s.parse::<OmegaKind>().map_err(|e| e.to_string())
}
fn borel_arg(s: &str) -> Result<HwBorel, String> {
    match s {
        "b<" | "<" => Ok(HwBorel::Less),
        "b>" | ">" => Ok(HwBorel::Greater),
        _ => Err(format!("borel {s:?} must be b< or b>")),
    }
}

#[derive(Args)]
struct WeightShape {
    /// Weight literal, e.g. "(0^4|-3)".
    #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
    weight: Weight,
    /// Shape `n,m`; must match the literal.
    #[arg(long, value_parser = shape_arg)]
    nm: Shape,
}

#[derive(Args)]
struct FamilyAlg {
    /// Algebra family, e.g. sl:1, sl, q, ospB:k=0, p.
    #[arg(long, value_parser = algebra_arg)]
    algebra: Option<AlgebraFamily>,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the roots of a finite truncation.
    Roots {
        #[arg(long, value_parser = algebra_arg)]
        family: AlgebraFamily,
        /// Number of delta slots (defaults to the family's fixed rank, else 0).
        #[arg(long)]
        nd: Option<usize>,
        /// Number of epsilon slots (defaults to the family's fixed rank, else 0).
        #[arg(long)]
        ne: Option<usize>,
    },
    /// Positive roots of the Borel given by a slot order.
    PositiveRoots {
        #[arg(long, value_parser = algebra_arg)]
        family: AlgebraFamily,
        /// Slots listed Borel-first, e.g. "d2,d1,e1".
        #[arg(long)]
        order: String,
        /// Sign map aligned with the order, e.g. "+,-,+".
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<String>,
    },
    /// Whether a weight lies in the support of the natural module.
    Natural {
        #[arg(long, value_parser = algebra_arg)]
        family: AlgebraFamily,
        #[arg(long, value_parser = weight_arg, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// The rho vector of gl(n|m).
    Rho {
        #[arg(long, value_parser = shape_arg)]
        nm: Shape,
    },
    /// The rho-shifted marks of a weight.
    Shift {
        #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// The weight with given shifted marks.
    Unshift {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Add c to every delta coordinate and subtract it from every epsilon one.
    CentralShift {
        #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
        weight: Weight,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        c: Q,
    },
    /// The central shift taking the first weight to the second, if any.
    CentralShiftBetween {
        #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
        v: Weight,
        #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
        w: Weight,
    },
    /// Pair a weight with a root such as "d1-e1" or "2e1".
    Pairing {
        #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
        weight: Weight,
        #[arg(long, allow_hyphen_values = true)]
        root: String,
    },
    /// The central value c of a weight.
    COf {
        #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Render the weight diagram of a dominant integral weight.
    Diagram(WeightShape),
    /// The weight of a diagram given by its symbol positions.
    WeightOf {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        core_l: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        core_r: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        crosses: String,
        #[arg(long, value_parser = shape_arg)]
        nm: Shape,
    },
    /// Number of crosses in the diagram.
    Atypicality(WeightShape),
    /// The signed count l_{b,a} between two positions.
    LCount {
        #[command(flatten)]
        ws: WeightShape,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
    },
    /// All legal moves, descending.
    LegalMoves(WeightShape),
    /// The legal move when there is at most one.
    UniqueMove(WeightShape),
    /// Whether two weights are one legal move apart.
    Ext1 {
        #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
        v: Weight,
        #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
        w: Weight,
        #[arg(long, value_parser = shape_arg)]
        nm: Shape,
        /// Centrally shift the second weight to match the first.
        #[arg(long)]
        align_central: bool,
    },
    /// One odd reflection at a position of the Borel.
    OddReflect {
        #[arg(long, value_parser = weight_arg, allow_hyphen_values = true)]
        weight: Weight,
        /// Slots listed Borel-first, e.g. "d1,e1".
        #[arg(long)]
        borel: String,
        /// 1-based position of the odd simple root.
        #[arg(long)]
        pos: usize,
    },
    /// Move a highest weight between Borels.
    Transport {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_parser = shape_arg)]
        nm: Shape,
        #[arg(long, value_parser = weight_arg, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Closed-form b(<) weights for O2, O3, O6.
    Omega {
        #[arg(long, value_parser = omega_arg)]
        kind: OmegaKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: usize,
        #[arg(long, conflicts_with = "mu")]
        a: Option<u64>,
        #[arg(long, value_parser = nats_arg)]
        mu: Option<Nats>,
        /// Print the b(>) weight the table is transported from.
        #[arg(long)]
        source: bool,
    },
    /// Highest weight of a catalog family at rank n.
    Hw {
        #[arg(long, allow_hyphen_values = true)]
        family: String,
        #[command(flatten)]
        alg: FamilyAlg,
        #[arg(long)]
        n: usize,
        /// Transport to b< or b> (sl only).
        #[arg(long, value_parser = borel_arg)]
        borel: Option<HwBorel>,
    },
    /// Support membership for a finitely described weight.
    Support {
        /// e.g. "Smu[2,1]", "Lambda[base:evens;xor:2,3]", "SpinorD[all]".
        #[arg(long)]
        set: String,
        /// e.g. "1,1,0", "0,1;repeat:1,0", "eps:<set>", "omega:<set>".
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Whether two families are isomorphic.
    Iso {
        f: String,
        g: String,
        #[command(flatten)]
        alg: FamilyAlg,
    },
    /// The dual family.
    Dual {
        family: String,
        #[command(flatten)]
        alg: FamilyAlg,
    },
    /// The classification of bounded simple modules.
    Classify {
        #[arg(long, value_parser = algebra_arg)]
        algebra: AlgebraFamily,
    },
    /// Whether a family is highest weight for the Borel of an order rule.
    HwBorel {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        alg: FamilyAlg,
        /// Buckets separated by `|`, e.g. "1,2,3|rest" or "evens|odds".
        #[arg(long)]
        order: String,
    },
    /// Check a singular weight against one of the shape cases a..e.
    Shape {
        #[arg(long)]
        case: String,
        #[arg(long, value_parser = weight_arg, allow_hyphen_values = true)]
        weight: Weight,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: usize,
    },
    /// Extend a support weight to gl at the first coordinate.
    Extend {
        /// Root-lattice coordinates, e.g. "1,-1,0".
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        c: Q,
    },
    /// Dimension of a q-type highest weight space.
    Qdim {
        #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Dimension of a super symmetric or exterior power.
    Dim {
        #[arg(long, conflicts_with = "ext", required_unless_present = "ext")]
        sym: Option<u64>,
        #[arg(long)]
        ext: Option<u64>,
        #[arg(long, value_parser = shape_arg)]
        nm: Shape,
    },
    /// Weight multiplicities of S^mu(C^{n|m}).
    SchurMult {
        #[arg(long, value_parser = nats_arg)]
        mu: Nats,
        #[arg(long, value_parser = shape_arg)]
        nm: Shape,
    },
    /// Maximal multiplicity across a range of n.
    Sweep {
        #[arg(long, value_parser = nats_arg)]
        mu: Nats,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = range_arg)]
        n: Range,
    },
    /// Structure of the Kac module over gl(n|1).
    Kac {
        #[arg(long, value_parser = weight_arg, allow_hyphen_values = true)]
        weight: Weight,
        #[arg(long)]
        n: usize,
    },
    /// Ext^1 between two catalog families over a rank window.
    Ext1Cat {
        f: String,
        g: String,
        #[command(flatten)]
        alg: FamilyAlg,
        #[arg(long, value_parser = range_arg)]
        window: Range,
    },
    /// Block graph of the families listed in a file.
    Blocks {
        #[arg(long, value_parser = algebra_arg)]
        algebra: AlgebraFamily,
        /// One family per line; `#` starts a comment.
        #[arg(long)]
        nodes_file: std::path::PathBuf,
        #[arg(long, value_parser = range_arg)]
        window: Range,
    },
    /// Run the acceptance checks.
    Selftest {
        /// Only one group: diagram, oddref, blocks, characters, catalog, roots.
        #[arg(long)]
        only: Option<String>,
    },
}

enum Fail {
    Usage(String),
    Domain(Error),
    Io(String),
    Checks,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        match e {
            Error::Parse(m) => Fail::Usage(format!("Parse: {m}")),
            e => Fail::Domain(e),
        }
    }
}

type Res = Result<Out, Fail>;

fn check_shape(w: &Weight, nm: Shape) -> Result<(), Error> {
    if w.shape() != nm {
        return Err(Error::ShapeMismatch(format!(
            "weight has shape {:?}, --nm says {nm:?}",
            w.shape()
        )));
    }
    Ok(())
}

fn family(s: &str, alg: Option<AlgebraFamily>) -> Result<FamilySpec, Error> {
    FamilySpec::parse(s, alg)
}

fn ints(s: &str) -> Result<Vec<i64>, Error> {
    parse_coords(s)?
        .into_iter()
        .map(|x| {
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(Error::Parse(format!("{x} is not an integer")))
            }
        })
        .collect()
}

/// `"d1-e1"`, `"2e1"`, `"-d2+d1"`.
fn parse_root(s: &str) -> Result<superweight::Root, Error> {
    use superweight::roots::parse_slot;
    let bad = || Error::Parse(format!("bad root {s:?}"));
    let mut terms = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1i8, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ if terms.is_empty() => (1, rest),
            _ => return Err(bad()),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let (tok, tail) = body.split_at(end);
        let digits = tok.bytes().take_while(|b| b.is_ascii_digit()).count();
        let coef: i8 = if digits == 0 {
            1
        } else {
            tok[..digits].parse().map_err(|_| bad())?
        };
        terms.push((parse_slot(&tok[digits..])?, sign * coef));
        rest = tail;
    }
    if terms.is_empty() {
        return Err(bad());
    }
    let kinds: std::collections::BTreeSet<_> = terms.iter().map(|(s, _)| s.kind).collect();
    let odd = kinds.len() == 2
        || terms.iter().all(|(s, _)| s.kind == superweight::Kind::Eps) && terms.len() == 1;
    Ok(if odd {
        superweight::Root::odd(&terms)
    } else {
        superweight::Root::even(&terms)
    })
}

fn run(cli: Cli) -> Res {
    use Cmd::*;
    Ok(match cli.cmd {
        Roots { family, nd, ne } => {
            let nd = nd.or(family.fixed_delta()).unwrap_or(0);
            let ne = ne.or(family.fixed_eps()).unwrap_or(0);
            let rs = roots(family, nd, ne)?;
            let odd = rs.iter().filter(|r| r.is_odd()).count();
            let list: Vec<String> = rs.iter().map(|r| r.to_string()).collect();
            let mut text = list.join("\n");
            if !text.is_empty() {
                text.push('\n');
            }
            text.push_str(&format!(
                "{} roots, {} even, {odd} odd\n",
                rs.len(),
                rs.len() - odd
            ));
            Out::new(
                text,
                json!({"roots": list, "even": rs.len() - odd, "odd": odd}),
            )
        }
        PositiveRoots {
            family,
            order,
            sign,
        } => {
            let slots = parse_order(&order, None)?;
            let b = match sign {
                Some(s) => BorelSeq::with_sign(slots, parse_signs(&s)?),
                None => BorelSeq::new(slots),
            };
            let rs = positive_roots(family, &b)?;
            let list: Vec<String> = rs.iter().map(|r| r.to_string()).collect();
            Out::lines(&list, json!({"roots": list}))
        }
        Natural { family, weight } => {
            let p = natural_support(family).parity(&weight);
            let name = p.map(|p| format!("{p:?}").to_lowercase());
            let text = match &name {
                Some(n) => format!("true {n}\n"),
                None => "false\n".into(),
            };
            Out::new(text, json!({"contains": p.is_some(), "parity": name}))
        }
        Rho { nm } => {
            let w = rho(nm.0, nm.1);
            Out::new(format!("{w}\n"), weight_json(&w))
        }
        Shift { weight } => {
            let s = shift(&weight)?;
            let text = format!("a={:?} b={:?} dominant={}\n", s.a, s.b, s.dominant);
            Out::new(text, json!({"a": s.a, "b": s.b, "dominant": s.dominant}))
        }
        Unshift { a, b } => {
            let w = unshift(&ShiftedWeight::new(ints(&a)?, ints(&b)?))?;
            Out::new(format!("{w}\n"), weight_json(&w))
        }
        CentralShift { weight, c } => {
            let w = central_shift(&weight, c);
            Out::new(format!("{w}\n"), weight_json(&w))
        }
        CentralShiftBetween { v, w } => {
            let c = central_shift_between(&v, &w)?;
            let text = c.map_or("none\n".into(), |c| format!("{c}\n"));
            Out::new(text, json!({"c": c.map(q_json)}))
        }
        Pairing { weight, root } => {
            let v = pairing(&weight, &parse_root(&root)?)?;
            Out::new(format!("{v}\n"), json!({"value": q_json(v)}))
        }
        COf { weight } => {
            let c = c_of(&weight);
            Out::new(format!("{c}\n"), json!({"c": q_json(c)}))
        }
        Diagram(ws) => {
            check_shape(&ws.weight, ws.nm)?;
            let f = diagram_of(&ws.weight)?;
            Out::new(f.render(), diagram_json(&f))
        }
        WeightOf {
            core_l,
            core_r,
            crosses,
            nm,
        } => {
            let f = WeightDiagram::from_sets(&ints(&core_l)?, &ints(&core_r)?, &ints(&crosses)?)?;
            let w = weight_of(&f, nm.0, nm.1)?;
            Out::new(format!("{w}\n"), weight_json(&w))
        }
        Atypicality(ws) => {
            check_shape(&ws.weight, ws.nm)?;
            let k = atypicality(&diagram_of(&ws.weight)?);
            Out::new(format!("{k}\n"), json!({"atypicality": k}))
        }
        LCount { ws, b, a } => {
            check_shape(&ws.weight, ws.nm)?;
            let l = l_count(&diagram_of(&ws.weight)?, b, a)?;
            Out::new(format!("{l}\n"), json!({"l": l}))
        }
        LegalMoves(ws) => {
            check_shape(&ws.weight, ws.nm)?;
            let f = diagram_of(&ws.weight)?;
            let mut lines = Vec::new();
            let mut items = Vec::new();
            for mv in legal_moves(&f) {
                let w = weight_of(&mv.result, ws.nm.0, ws.nm.1)?;
                lines.push(format!("{} -> {}: {w}", mv.a, mv.b));
                items.push(json!({"a": mv.a, "b": mv.b, "weight": weight_json(&w)}));
            }
            Out::lines(&lines, json!({"moves": items}))
        }
        UniqueMove(ws) => {
            check_shape(&ws.weight, ws.nm)?;
            match unique_legal_move(&diagram_of(&ws.weight)?)? {
                None => Out::new("none\n".into(), json!({"move": null})),
                Some(mv) => {
                    let w = weight_of(&mv.result, ws.nm.0, ws.nm.1)?;
                    let text = format!("{} -> {}: {w}\n", mv.a, mv.b);
                    Out::new(
                        text,
                        json!({"move": {"a": mv.a, "b": mv.b, "weight": weight_json(&w)}}),
                    )
                }
            }
        }
        Ext1 {
            v,
            w,
            nm,
            align_central,
        } => {
            check_shape(&v, nm)?;
            check_shape(&w, nm)?;
            let r = ext1_nonzero(&v, &w, align_central)?;
            Out::new(format!("{r}\n"), json!({"nonzero": r}))
        }
        OddReflect { weight, borel, pos } => {
            let slots = parse_order(&borel, Some(weight.shape()))?;
            let s = odd_reflect(&HighestWeightState::new(weight, slots)?, pos)?;
            let b = BorelSeq::new(s.borel.clone()).to_string();
            let text = format!("{} borel {b} parity {}\n", s.weight, s.parity);
            Out::new(
                text,
                json!({"weight": weight_json(&s.weight), "borel": b, "parity": parity_json(s.parity)}),
            )
        }
        Transport {
            from,
            to,
            nm,
            weight,
        } => {
            check_shape(&weight, nm)?;
            let from = BorelSeq::new(parse_order(&from, Some(nm))?);
            let to = BorelSeq::new(parse_order(&to, Some(nm))?);
            let (w, p) = transport(&weight, &from, &to)?;
            Out::new(
                format!("{w} parity {p}\n"),
                json!({"weight": weight_json(&w), "parity": parity_json(p)}),
            )
        }
        Omega {
            kind,
            n,
            x,
            a,
            mu,
            source,
        } => {
            let arg = match (a, mu) {
                (Some(a), None) => OmegaArg::Int(a),
                (None, Some(mu)) => OmegaArg::Partition(mu.0),
                _ => return Err(Fail::Usage("omega needs exactly one of --a or --mu".into())),
            };
            let w = if source {
                omega_source(kind, n, x, &arg)?
            } else {
                omega_table(kind, n, x, &arg)?
            };
            Out::new(format!("{w}\n"), weight_json(&w))
        }
        Hw {
            family: f,
            alg,
            n,
            borel,
        } => {
            let f = family(&f, alg.algebra)?;
            let h = match borel {
                Some(b) => highest_weight_at(&f, n, b)?,
                None => family_highest_weight(&f, n)?,
            };
            let text = format!("{} borel {} parity {}\n", h.weight, h.borel, h.parity);
            Out::new(
                text,
                json!({"weight": weight_json(&h.weight), "borel": h.borel.to_string(), "parity": parity_json(h.parity)}),
            )
        }
        Support { set, weight } => {
            let r = support_contains(&SupportSet::parse(&set)?, &SeqWeight::parse(&weight)?)?;
            Out::new(format!("{r}\n"), json!({"contains": r}))
        }
        Iso { f, g, alg } => {
            let (f, g) = (family(&f, alg.algebra)?, family(&g, alg.algebra)?);
            if f.algebra != g.algebra {
                return Err(
                    Error::AlgebraMismatch(format!("{} vs {}", f.algebra, g.algebra)).into(),
                );
            }
            let r = isomorphic(&f, &g);
            Out::new(format!("{r}\n"), json!({"isomorphic": r}))
        }
        Dual { family: f, alg } => {
            let d = dual_family(&family(&f, alg.algebra)?);
            Out::new(
                format!("{d}\n"),
                json!({"family": d.to_string(), "algebra": d.algebra.to_string()}),
            )
        }
        Classify { algebra } => {
            let c = classify_bounded(algebra);
            let mut lines = Vec::new();
            let mut items = Vec::new();
            for d in &c.families {
                let pi = if d.twist.is_odd() { "!Pi" } else { "" };
                lines.push(
                    format!("{}{pi}\t{}", d.kind.name(), d.parameters)
                        .trim_end()
                        .to_string(),
                );
                items.push(json!({"kind": d.kind.name(), "twist": parity_json(d.twist), "parameters": d.parameters}));
            }
            for n in &c.notes {
                lines.push(format!("note: {n}"));
            }
            Out::lines(
                &lines,
                json!({"algebra": c.algebra.to_string(), "families": items, "notes": c.notes}),
            )
        }
        HwBorel {
            family: f,
            alg,
            order,
        } => {
            let r = hw_borel_condition(&family(&f, alg.algebra)?, &OrderRule::parse(&order)?)?;
            Out::new(format!("{r}\n"), json!({"highest_weight": r}))
        }
        Shape { case, weight, n, x } => {
            let case: ShapeCase = case.parse()?;
            let r = validate_singular_shape(case, &weight, n, x);
            Out::new(format!("{r}\n"), json!({"valid": r}))
        }
        Extend { beta, c } => {
            let v = extend_to_gl(&parse_coords(&beta)?, c)?;
            Out::new(format!("{v}\n"), json!({"value": q_json(v)}))
        }
        Qdim { weight } => {
            let d = q_hw_space_dim(&weight);
            Out::new(format!("{d}\n"), json!({"dim": d}))
        }
        Dim { sym, ext, nm } => {
            let (n, m) = (nm.0 as u64, nm.1 as u64);
            let (kind, d) = match (sym, ext) {
                (Some(a), _) => ("sym", super_sym_dim(a, n, m)),
                (None, Some(a)) => ("ext", super_ext_dim(a, n, m)),
                (None, None) => return Err(Fail::Usage("dim needs --sym or --ext".into())),
            };
            Out::new(
                format!("{d}\n"),
                json!({"kind": kind, "dim": d.to_string()}),
            )
        }
        SchurMult { mu, nm } => {
            let t = hook_multiplicities(&mu.0, nm.0, nm.1)?;
            let mut lines: Vec<String> =
                t.entries.iter().map(|(w, k)| format!("{w} {k}")).collect();
            lines.push(format!(
                "dim {}|{}, max {}",
                t.total_dim.0,
                t.total_dim.1,
                t.max_multiplicity()
            ));
            let entries: Vec<Value> = t
                .entries
                .iter()
                .map(|(w, k)| json!({"weight": weight_json(w), "mult": k}))
                .collect();
            Out::lines(
                &lines,
                json!({
                    "entries": entries,
                    "dim_even": t.total_dim.0.to_string(),
                    "dim_odd": t.total_dim.1.to_string(),
                    "max": t.max_multiplicity(),
                }),
            )
        }
        Sweep { mu, m, n } => {
            let s = max_multiplicity_sweep(&mu.0, n, m)?;
            let lines: Vec<String> = (n.0..=n.1)
                .zip(&s)
                .map(|(k, v)| format!("n={k} {v}"))
                .collect();
            Out::lines(&lines, json!({"n": [n.0, n.1], "max": s}))
        }
        Kac { weight, n } => match kac_structure(&weight, n)? {
            KacStructure::Simple => Out::new("simple\n".into(), json!({"structure": "simple"})),
            KacStructure::Length2 {
                socle_hw,
                parity_twist,
            } => Out::new(
                format!("length2 socle {socle_hw} parity {parity_twist}\n"),
                json!({"structure": "length2", "socle": weight_json(&socle_hw), "parity": parity_json(parity_twist)}),
            ),
        },
        Ext1Cat { f, g, alg, window } => {
            let e = ext1_dim(&family(&f, alg.algebra)?, &family(&g, alg.algebra)?, window)?;
            let text = match e.twist {
                Some(t) => format!("{} twist {t}\n", e.dim),
                None => format!("{}\n", e.dim),
            };
            Out::new(
                text,
                json!({"dim": e.dim, "twist": e.twist.map(parity_json)}),
            )
        }
        Blocks {
            algebra,
            nodes_file,
            window,
        } => {
            let raw = std::fs::read_to_string(&nodes_file)
                .map_err(|e| Fail::Io(format!("{}: {e}", nodes_file.display())))?;
            let nodes = raw
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(|l| family(l, Some(algebra)))
                .collect::<Result<Vec<_>, _>>()?;
            let g = block_graph(&nodes, window)?;
            let name = |i: usize| g.nodes[i].to_string();
            let mut lines = Vec::new();
            for (i, j, t) in &g.edges {
                let tw = t.map_or(String::new(), |t| format!(" twist {t}"));
                lines.push(format!("edge {} -- {}{tw}", name(*i), name(*j)));
            }
            for c in &g.components {
                lines.push(format!(
                    "block {{{}}}",
                    c.iter().map(|&i| name(i)).collect::<Vec<_>>().join(", ")
                ));
            }
            let edges: Vec<Value> = g
                .edges
                .iter()
                .map(|(i, j, t)| json!({"from": i, "to": j, "twist": t.map(parity_json)}))
                .collect();
            let nodes: Vec<String> = g.nodes.iter().map(|f| f.to_string()).collect();
            Out::lines(
                &lines,
                json!({"nodes": nodes, "edges": edges, "components": g.components}),
            )
        }
        Selftest { only } => {
            if let Some(o) = &only {
                if !superweight::acceptance::GROUPS.contains(&o.as_str()) {
                    return Err(Fail::Usage(format!(
                        "unknown group {o:?}, expected one of {}",
                        superweight::acceptance::GROUPS.join(", ")
                    )));
                }
            }
            let res = superweight::acceptance::run_all(only.as_deref());
            let lines: Vec<String> = res.iter().map(|o| o.to_string()).collect();
            let failed = res.iter().filter(|o| !o.passed).count();
            let items: Vec<Value> = res
                .iter()
                .map(|o| json!({"id": o.id, "group": o.group, "name": o.name, "passed": o.passed, "detail": o.detail}))
                .collect();
            let out = Out::lines(&lines, json!({"criteria": items, "failed": failed}));
            if failed > 0 {
                out.emit(cli.json);
                return Err(Fail::Checks);
            }
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            out.emit(json);
            ExitCode::SUCCESS
        }
        Err(Fail::Usage(m)) => {
            eprintln!("{m}");
            ExitCode::from(2)
        }
        Err(Fail::Domain(e)) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(1)
        }
        Err(Fail::Io(m)) => {
            eprintln!("Io: {m}");
            ExitCode::from(1)
        }
        Err(Fail::Checks) => ExitCode::from(1),
    }
}
