use std::fmt::Write as _;
use std::path::Path;

use equik::join::{
    join_k_theory_formula, mayer_vietoris_delta, oracle_consistency, boundary_matrices,
    build_join_complex, reduced_homology,
};
use equik::linalg::{hnf, snf};
use equik::ring::{
    augmentation_ideal, ideal_power, lambda_expansion, regular_class_check, FusionRing,
    FusionTable, RingSpec,
};
use equik::rokhlin::{ActionDescriptor, CommutativeGroup, Report, TensorRule};
use equik::{Error, FgAbelianGroup, IntMatrix};
use num_bigint::Sign;
use serde_json::{json, Value};
use thiserror::Error;

use crate::{GroupCmd, JoinCmd, LinalgCmd, RepCmd, RingArg, RokhlinCmd};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub const FAILED_CHECK: u8 = 1;

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Unsupported(_)) => 3,
            CliError::Core(Error::Certificate(_)) => Self::FAILED_CHECK,
            _ => 2,
        }
    }
}

type CliResult = std::result::Result<Output, CliError>;

/// Rendered text and JSON forms of one command's result.
pub struct Output {
    pub text: String,
    pub json: String,
    /// False when a check ran and failed (validation, oracle).
    pub success: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json: pretty(&json), success: true }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn read(path: &Path) -> std::result::Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn read_matrix(path: &Path) -> std::result::Result<IntMatrix, CliError> {
    let text = read(path)?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())).into())
}

fn parse_group(s: &str) -> std::result::Result<FgAbelianGroup, CliError> {
    Ok(s.parse::<FgAbelianGroup>()?)
}

fn ring_spec(arg: &RingArg) -> std::result::Result<RingSpec, CliError> {
    match (&arg.group, &arg.table) {
        (Some(name), None) => Ok(RingSpec::named(name)?),
        (None, Some(path)) => {
            let text = read(path)?;
            let table: FusionTable = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            Ok(RingSpec::Table(table))
        }
        _ => Err(Error::InvalidInput("give exactly one of --group or --table".into()).into()),
    }
}

fn ring_of(arg: &RingArg) -> std::result::Result<FusionRing, CliError> {
    Ok(ring_spec(arg)?.build()?)
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

fn render_matrix(m: &IntMatrix) -> String {
    if m.is_empty() {
        format!("  ({}x{} empty)\n", m.rows(), m.cols())
    } else {
        indent(&m.to_string())
    }
}

fn join_list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn linalg(cmd: &LinalgCmd) -> CliResult {
    match cmd {
        LinalgCmd::Snf { matrix } => {
            let a = read_matrix(matrix)?;
            let s = snf(&a);
            let factors = s.invariant_factors();
            let text = format!(
                "D =\n{}U =\n{}V =\ninvariant factors: [{}]\nrank {}\n",
                render_matrix(&s.d),
                render_matrix(&s.u),
                join_list(&factors),
                s.rank()
            );
            let text = text.replacen("V =\n", &format!("V =\n{}", render_matrix(&s.v)), 1);
            let json = json!({
                "d": s.d, "u": s.u, "v": s.v,
                "invariant_factors": factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "rank": s.rank(),
            });
            Ok(Output::ok(text, json))
        }
        LinalgCmd::Hnf { matrix } => {
            let a = read_matrix(matrix)?;
            let h = hnf(&a);
            let text = format!(
                "H =\n{}T =\n{}pivots: [{}]\nrank {}\n",
                render_matrix(&h.h),
                render_matrix(&h.transform),
                join_list(&h.pivots),
                h.rank()
            );
            let json = json!({
                "h": h.h, "transform": h.transform, "pivots": h.pivots, "rank": h.rank(),
            });
            Ok(Output::ok(text, json))
        }
    }
}

pub fn group(cmd: &GroupCmd) -> CliResult {
    let (op, a, b) = match cmd {
        GroupCmd::Tensor { a, b } => ("tensor", a, b),
        GroupCmd::Tor { a, b } => ("tor", a, b),
    };
    let (a, b) = (parse_group(a)?, parse_group(b)?);
    let g = if op == "tensor" { a.tensor(&b) } else { a.tor(&b) };
    let text = g.to_string();
    Ok(Output::ok(text, json!({ "op": op, "left": a, "right": b, "result": g })))
}

pub fn rep(cmd: &RepCmd) -> CliResult {
    match cmd {
        RepCmd::Ring(arg) => {
            let ring = ring_of(arg)?;
            ring.based().check_axioms()?;
            let mut text = format!("ring {} of rank {}\n", ring.name(), ring.rank());
            for (label, dim) in ring.labels().iter().zip(ring.dims()) {
                let _ = writeln!(text, "  {label}: dim {dim}");
            }
            for i in 0..ring.rank() {
                for j in i..ring.rank() {
                    let terms: Vec<String> = (0..ring.rank())
                        .filter_map(|k| match ring.coefficient(i, j, k) {
                            0 => None,
                            1 => Some(ring.labels()[k].clone()),
                            c => Some(format!("{c}·{}", ring.labels()[k])),
                        })
                        .collect();
                    let _ = writeln!(
                        text,
                        "  {} ⊗ {} = {}",
                        ring.labels()[i],
                        ring.labels()[j],
                        terms.join(" + ")
                    );
                }
            }
            text.push_str("axioms: ok\n");
            Ok(Output::ok(text, json!({ "table": ring.to_table(), "axioms": "ok" })))
        }
        RepCmd::IdealPowers { ring, max } => {
            if *max == 0 {
                return Err(Error::InvalidInput("--max must be at least 1".into()).into());
            }
            let ring = ring_of(ring)?;
            let based = ring.based();
            let mut text = format!("augmentation filtration of R({})\n", ring.name());
            let mut steps = Vec::new();
            let mut current = augmentation_ideal(based);
            for m in 1..=*max {
                let next = ideal_power(based, m + 1)?;
                let quotient = current.quotient(&next)?;
                let _ = writeln!(text, "I^{m} (rank {}):", current.rank());
                text.push_str(&render_matrix(current.basis()));
                let _ = writeln!(text, "I^{m}/I^{} = {quotient}", m + 1);
                steps.push(json!({
                    "m": m,
                    "basis": current.basis(),
                    "quotient": quotient,
                }));
                current = next;
            }
            Ok(Output::ok(text, json!({ "ring": ring.name(), "powers": steps })))
        }
        RepCmd::Lambda { p } => {
            let coeffs = lambda_expansion(*p)?;
            let mut rhs = String::new();
            for (j, c) in coeffs.iter().enumerate() {
                let sign = if c.sign() == Sign::Minus { '-' } else { '+' };
                if j == 0 {
                    let lead = if sign == '-' { "-" } else { "" };
                    let _ = write!(rhs, "{lead}{}·λ", c.magnitude());
                } else {
                    let _ = write!(rhs, " {sign} {}·λ^{}", c.magnitude(), j + 1);
                }
            }
            let text = format!("λ^{p} = {rhs}\n");
            let json = json!({
                "p": p,
                "coefficients": coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            Ok(Output::ok(text, json))
        }
        RepCmd::Regular(arg) => {
            let ring = ring_of(arg)?;
            let check = regular_class_check(&ring);
            let coeffs: Vec<String> = check.reg.coeffs().iter().map(ToString::to_string).collect();
            let text = format!(
                "regular class of R({}) = ({})\nannihilated by the augmentation ideal: {}\n",
                ring.name(),
                coeffs.join(", "),
                if check.annihilated { "yes" } else { "no" }
            );
            Ok(Output::ok(
                text,
                json!({ "ring": ring.name(), "regular": coeffs, "annihilated": check.annihilated }),
            ))
        }
    }
}

pub fn join(cmd: &JoinCmd) -> CliResult {
    match cmd {
        JoinCmd::Ktheory { set_size, copies, verify_oracle } => {
            let ranks = join_k_theory_formula(*set_size, *copies)?;
            let mut text = format!("K0 rank {}, K1 rank {}", ranks.k0_rank, ranks.k1_rank);
            let mut json = json!({
                "set_size": set_size, "copies": copies,
                "k0_rank": ranks.k0_rank.to_string(), "k1_rank": ranks.k1_rank.to_string(),
            });
            let mut success = true;
            if *verify_oracle {
                let oracle = oracle_consistency(*set_size, *copies)?;
                success = oracle.consistent;
                text.push_str(if success { "; oracle: consistent" } else { "; oracle: INCONSISTENT" });
                json["oracle"] = json!({
                    "consistent": oracle.consistent,
                    "torsion_free": oracle.torsion_free,
                    "homology": oracle.homology,
                });
            }
            text.push('\n');
            Ok(Output { text, json: pretty(&json), success })
        }
        JoinCmd::Homology { set_size, copies } => {
            let complex = build_join_complex(*set_size, *copies)?;
            let table = reduced_homology(&boundary_matrices(&complex));
            let mut text = String::new();
            for (d, g) in table.groups().iter().enumerate() {
                let _ = writeln!(text, "H{d} = {g}");
            }
            Ok(Output::ok(
                text,
                json!({ "set_size": set_size, "copies": copies, "reduced_homology": table }),
            ))
        }
        JoinCmd::MvDelta { l, set_size } => {
            let delta = mayer_vietoris_delta(*l, *set_size)?;
            let text = format!(
                "delta =\n{}kernel rank {}\ncokernel {}\n",
                render_matrix(&delta.matrix),
                delta.kernel_rank,
                delta.cokernel
            );
            Ok(Output::ok(text, json!(delta)))
        }
    }
}

fn render_report(r: &Report) -> String {
    let mut text = r.bound.summary();
    text.push('\n');
    if let Some(outcome) = &r.outcome {
        let _ = writeln!(text, "outcome: {outcome}");
    }
    for c in &r.components {
        let _ = writeln!(text, "{}: {}", c.construction, c.bound.summary());
    }
    for f in &r.findings {
        let _ = writeln!(text, "finding: {f}");
    }
    text
}

fn report_output(r: Report) -> CliResult {
    Ok(Output { text: render_report(&r), json: r.to_json(), success: true })
}

fn named(group: &str) -> std::result::Result<RingSpec, CliError> {
    Ok(RingSpec::named(group)?)
}

pub fn rokhlin(cmd: &RokhlinCmd) -> CliResult {
    let desc = match cmd {
        RokhlinCmd::Z2 { m } => ActionDescriptor::Z2Af { m: *m },
        RokhlinCmd::Circle { d } => ActionDescriptor::CircleAh { d: *d },
        RokhlinCmd::ProductZ2 { m, group } => ActionDescriptor::ProductZ2G { m: *m, group: named(group)? },
        RokhlinCmd::CircleProduct { d, group } => {
            ActionDescriptor::CircleProduct { d: *d, group: named(group)? }
        }
        RokhlinCmd::Z6Collapse { d } => ActionDescriptor::Z6Collapse { d: *d },
        RokhlinCmd::Commutative { group, k } => ActionDescriptor::CommutativeJoin {
            group: group.parse::<CommutativeGroup>()?,
            copies: *k,
        },
        RokhlinCmd::Finite { ring, n } => ActionDescriptor::FiniteGroupAf { group: ring_spec(ring)?, n: *n },
        RokhlinCmd::TensorRule { rule, first, second } => {
            let rule: TensorRule = rule.parse()?;
            let r1 = Report::from_json(&read(first)?)?;
            let r2 = Report::from_json(&read(second)?)?;
            r1.check()?;
            r2.check()?;
            return report_output(Report::tensor_rule(rule, &r1, &r2)?);
        }
    };
    report_output(Report::build(&desc)?)
}

pub fn validate(path: &Path) -> CliResult {
    let report = Report::from_json(&read(path)?)?;
    let verdict = report.check();
    let text = match &verdict {
        Ok(()) => format!("valid: {}\n", report.bound.summary()),
        Err(e) => format!("invalid: {e}\n"),
    };
    let json = json!({
        "construction": report.construction,
        "valid": verdict.is_ok(),
        "reason": verdict.as_ref().err().map(ToString::to_string),
        "witnesses": report.witness_count(),
    });
    Ok(Output { text, json: pretty(&json), success: verdict.is_ok() })
}
