//! Executable forms of the path/cycle bounds, and bounded searches for
//! counterexamples to the two open conjectures.
//!
//! Every check computes the longest p.c. path and the longest p.c. cycle
//! and compares them against the relevant disjunction. A witness proves a
//! branch even when the search was cut short, so `pass` may come from a
//! budgeted run; `fail` never does.

mod hunt;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::generators::{gen_recursive, mono_min_degree, recursive_order};
use crate::graph::EdgeColouredGraph;
use crate::oracle::{longest_pc_cycle, longest_pc_path, OracleError};
use crate::yeo::{certify_acyclic, Acyclicity};

pub use hunt::{conjecture_search, Conjecture, Hit, HuntOptions, HuntOutcome};

pub const REPORT_SCHEMA: &str = "pcpath-report/1";

/// Largest generated instance `prop4` accepts.
pub const PROP_UPPER_MAX_ORDER: usize = 25;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Theorem {
    /// Path of length `2d` or cycle of length at least `d + 1`.
    TwoDPlusOne,
    /// Path of length `k 2^(d - ceil(3k/2) + 4) - 2` or cycle of length at least `k`.
    KLessD(usize),
    /// Path of length `3 2^(d-1) - 2` or any cycle.
    CorK3,
    /// Hamiltonian cycle or path of length `6d/5 - 1`.
    Path,
    /// Hamiltonian cycle or path of length `(10(k-1)δ + 8)/9 - 1`, δ the
    /// least monochromatic degree.
    PathMono,
    /// The recursive construction has longest path `k 2^(d-k+2) - 2` and no
    /// cycle of length `k` or more.
    PropUpper { d: usize, k: usize, p: usize },
    /// Conjectured strengthening of `KLessD`: path `k 2^(d-k+2) - 2` or cycle of
    /// length at least `k`.
    ConjKLessD(usize),
    /// Conjectured: Hamiltonian cycle or path of length `floor(3d/2)`.
    ConjPath,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theorem::TwoDPlusOne => write!(f, "thm2"),
            Theorem::KLessD(k) => write!(f, "thm3:{k}"),
            Theorem::CorK3 => write!(f, "cor3"),
            Theorem::Path => write!(f, "thm6"),
            Theorem::PathMono => write!(f, "thm8"),
            Theorem::PropUpper { d, k, p } => write!(f, "prop4:{d},{k},{p}"),
            Theorem::ConjKLessD(k) => write!(f, "conj5:{k}"),
            Theorem::ConjPath => write!(f, "conj7"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown theorem id `{0}` (expected thm2, thm3:k, cor3, thm6, thm8, prop4:d,k,p, conj5:k or conj7)")]
pub struct UnknownTheorem(String);

impl FromStr for Theorem {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || UnknownTheorem(s.to_string());
        let (head, args) = s.split_once(':').unwrap_or((s, ""));
        let nums = || -> Result<Vec<usize>, UnknownTheorem> {
            args.split(',').map(|a| a.trim().parse().map_err(|_| bad())).collect()
        };
        let one = || -> Result<usize, UnknownTheorem> {
            match nums()?.as_slice() {
                [k] => Ok(*k),
                _ => Err(bad()),
            }
        };
        let bare = |t: Theorem| if args.is_empty() { Ok(t) } else { Err(bad()) };
        match head {
            "thm2" => bare(Theorem::TwoDPlusOne),
            "thm3" => one().map(Theorem::KLessD),
            "cor3" => bare(Theorem::CorK3),
            "thm6" => bare(Theorem::Path),
            "thm8" => bare(Theorem::PathMono),
            "prop4" => match nums()?.as_slice() {
                &[d, k, p] => Ok(Theorem::PropUpper { d, k, p }),
                _ => Err(bad()),
            },
            "conj5" => one().map(Theorem::ConjKLessD),
            "conj7" => bare(Theorem::ConjPath),
            _ => Err(bad()),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Which disjunct established a pass.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Path,
    Cycle,
    Hamiltonian,
    /// Both exact values match the formulas (`prop4`).
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rounding {
    None,
    Ceil,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    /// `path` or `cycle` (closed tuple).
    pub kind: &'static str,
    pub tuple: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub theorem: String,
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub colours: usize,
    pub min_colour_degree: usize,
    pub mono_min_degree: Option<usize>,
    pub longest_path: usize,
    /// `None` when no p.c. cycle was found.
    pub longest_cycle: Option<usize>,
    pub hamiltonian_cycle: bool,
    /// Integer threshold the path length is compared against (for `prop4`,
    /// the exact expected length).
    pub bound: u64,
    /// The bound as stated, when it is not an integer formula.
    pub bound_real: Option<f64>,
    pub rounding: Rounding,
    /// Cycle-length threshold of the cycle branch, if the statement has one.
    pub cycle_bound: Option<usize>,
    pub verdict: Verdict,
    pub branch: Option<Branch>,
    /// Path length equals the bound exactly.
    pub equality: bool,
    pub witness: Option<Witness>,
    pub exact_path: bool,
    pub exact_cycle: bool,
    /// Signed adjustment applied to `bound` (nonzero only in deliberate
    /// falsification runs).
    pub offset: i64,
    pub notes: Vec<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("internal disagreement: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    /// Node budget for each oracle call.
    pub budget: Option<u64>,
    pub offset: i64,
}

fn pow2_times(k: usize, e: usize) -> u64 {
    (k as u64).checked_shl(e as u32).filter(|v| v >> e == k as u64).unwrap_or(u64::MAX)
}

fn offset_bound(b: u64, offset: i64) -> u64 {
    b.saturating_add_signed(offset)
}

fn precondition(ok: bool, msg: impl FnOnce() -> String) -> Result<(), CheckError> {
    if ok {
        Ok(())
    } else {
        Err(CheckError::Precondition(msg()))
    }
}

/// What a statement asks for, once the graph's parameters are known.
struct Shape {
    bound: u64,
    bound_real: Option<f64>,
    /// Some(k): second branch is "cycle of length at least k"; None: the
    /// second branch is a Hamiltonian cycle, tried first.
    cycle_bound: Option<usize>,
    notes: Vec<String>,
}

/// Runs `thm` on `g`. `instance` is echoed into the report.
pub fn check(g: &EdgeColouredGraph, thm: Theorem, instance: &str, opts: &CheckOptions) -> Result<VerificationReport, CheckError> {
    if let Theorem::PropUpper { d, k, p } = thm {
        return check_prop_upper(d, k, p, opts);
    }
    let d = g.min_colour_degree().map_err(|e| CheckError::Precondition(e.to_string()))?;
    let mut mono = None;
    let shape = match thm {
        Theorem::TwoDPlusOne => {
            precondition(d >= 2, || format!("minimum colour degree {d} < 2"))?;
            Shape { bound: 2 * d as u64, bound_real: None, cycle_bound: Some(d + 1), notes: vec![] }
        }
        Theorem::KLessD(k) => {
            let t = (3 * k).div_ceil(2);
            precondition(k >= 3, || format!("k = {k} < 3"))?;
            precondition(d + 3 >= t, || format!("minimum colour degree {d} < ceil(3k/2) - 3 = {}", t - 3))?;
            let bound = pow2_times(k, d + 4 - t).saturating_sub(2);
            Shape { bound, bound_real: None, cycle_bound: Some(k), notes: vec![] }
        }
        Theorem::CorK3 => {
            precondition(d >= 1, || "minimum colour degree 0".into())?;
            Shape { bound: pow2_times(3, d - 1) - 2, bound_real: None, cycle_bound: Some(3), notes: vec![] }
        }
        Theorem::ConjKLessD(k) => {
            precondition(k >= 3, || format!("k = {k} < 3"))?;
            precondition(d + 1 >= k, || format!("minimum colour degree {d} < k - 1"))?;
            let bound = pow2_times(k, d + 2 - k).saturating_sub(2);
            Shape { bound, bound_real: None, cycle_bound: Some(k), notes: vec![] }
        }
        Theorem::Path => {
            precondition(d >= 1, || "minimum colour degree 0".into())?;
            precondition(g.is_connected(), || "graph is not connected".into())?;
            let bound = (6 * d as u64 - 5).div_ceil(5);
            Shape {
                bound,
                bound_real: Some(6.0 * d as f64 / 5.0 - 1.0),
                cycle_bound: None,
                notes: vec!["real bound compared via its ceiling".into()],
            }
        }
        Theorem::PathMono => {
            precondition(g.is_connected(), || "graph is not connected".into())?;
            let k = g.colours().len();
            precondition(k >= 2, || format!("{k} colour(s) present, need 2"))?;
            let delta = mono_min_degree(g).map_err(|e| CheckError::Precondition(e.to_string()))?;
            precondition(delta >= 1, || "monochromatic minimum degree 0".into())?;
            mono = Some(delta);
            let num = 10 * (k as u64 - 1) * delta as u64 + 8;
            Shape {
                bound: (num - 9).div_ceil(9),
                bound_real: Some(num as f64 / 9.0 - 1.0),
                cycle_bound: None,
                notes: vec![
                    "real bound compared via its ceiling".into(),
                    format!(
                        "hypothesis printed with a subscripted degree; delta taken as the least \
                         monochromatic degree ({delta}) over k = {k} colours present"
                    ),
                ],
            }
        }
        Theorem::ConjPath => {
            precondition(d >= 1, || "minimum colour degree 0".into())?;
            precondition(g.is_connected(), || "graph is not connected".into())?;
            Shape { bound: 3 * d as u64 / 2, bound_real: None, cycle_bound: None, notes: vec![] }
        }
        Theorem::PropUpper { .. } => unreachable!(),
    };
    evaluate(g, thm, instance, d, mono, shape, opts)
}

fn evaluate(
    g: &EdgeColouredGraph,
    thm: Theorem,
    instance: &str,
    d: usize,
    mono: Option<usize>,
    shape: Shape,
    opts: &CheckOptions,
) -> Result<VerificationReport, CheckError> {
    let bound = offset_bound(shape.bound, opts.offset);
    let path = longest_pc_path(g, opts.budget)?;
    let cycle = longest_pc_cycle(g, opts.budget)?;
    let plen = path.length();
    let clen = cycle.length();
    let hamiltonian = clen == Some(g.n());

    let path_ok = plen as u64 >= bound;
    let path_witness = || Witness { kind: "path", tuple: path.path.vertices().to_vec() };
    let cycle_witness = || {
        cycle.cycle.as_ref().map(|c| Witness { kind: "cycle", tuple: c.closed_tuple().to_vec() })
    };
    let (branch, witness) = match shape.cycle_bound {
        Some(k) => {
            if path_ok {
                (Some(Branch::Path), Some(path_witness()))
            } else if clen.is_some_and(|c| c >= k) {
                (Some(Branch::Cycle), cycle_witness())
            } else {
                (None, Some(path_witness()))
            }
        }
        None => {
            if hamiltonian {
                (Some(Branch::Hamiltonian), cycle_witness())
            } else if path_ok {
                (Some(Branch::Path), Some(path_witness()))
            } else {
                (None, Some(path_witness()))
            }
        }
    };
    let verdict = match branch {
        Some(_) => Verdict::Pass,
        None if path.exact && cycle.exact => Verdict::Fail,
        None => Verdict::Inconclusive,
    };
    let mut notes = shape.notes;
    if thm == Theorem::CorK3 {
        // Independent confirmation of the cycle branch.
        let acyclic = matches!(certify_acyclic(g), Ok(Acyclicity::Certified(_)));
        if cycle.exact || clen.is_some() {
            if acyclic == clen.is_some() {
                return Err(CheckError::Inconsistent(format!(
                    "oracle cycle {clen:?} but cut-vertex certification says acyclic = {acyclic}"
                )));
            }
            notes.push(format!("cut-vertex certificate agrees (acyclic: {acyclic})"));
        }
    }
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        theorem: thm.to_string(),
        instance: instance.to_string(),
        n: g.n(),
        m: g.edge_count(),
        colours: g.colours().len(),
        min_colour_degree: d,
        mono_min_degree: mono,
        longest_path: plen,
        longest_cycle: clen,
        hamiltonian_cycle: hamiltonian,
        bound,
        bound_real: shape.bound_real,
        rounding: if shape.bound_real.is_some() { Rounding::Ceil } else { Rounding::None },
        cycle_bound: shape.cycle_bound,
        verdict,
        branch,
        equality: plen as u64 == bound,
        witness,
        exact_path: path.exact,
        exact_cycle: cycle.exact,
        offset: opts.offset,
        notes,
    })
}

pub fn check_thm_2dplus1(g: &EdgeColouredGraph, opts: &CheckOptions) -> Result<VerificationReport, CheckError> {
    check(g, Theorem::TwoDPlusOne, "", opts)
}

pub fn check_thm_kd(g: &EdgeColouredGraph, k: usize, opts: &CheckOptions) -> Result<VerificationReport, CheckError> {
    check(g, Theorem::KLessD(k), "", opts)
}

pub fn check_cor_k3(g: &EdgeColouredGraph, opts: &CheckOptions) -> Result<VerificationReport, CheckError> {
    check(g, Theorem::CorK3, "", opts)
}

pub fn check_thm_path(g: &EdgeColouredGraph, opts: &CheckOptions) -> Result<VerificationReport, CheckError> {
    check(g, Theorem::Path, "", opts)
}

pub fn check_thm_mono(g: &EdgeColouredGraph, opts: &CheckOptions) -> Result<VerificationReport, CheckError> {
    check(g, Theorem::PathMono, "", opts)
}

/// Builds `gen_recursive(d, k, p)` and checks that its longest p.c. path
/// has length exactly `k 2^(d-k+2) - 2` and that it has no p.c. cycle of
/// length `k` or more (for `k = 3`: no p.c. cycle at all).
pub fn check_prop_upper(d: usize, k: usize, p: usize, opts: &CheckOptions) -> Result<VerificationReport, CheckError> {
    let thm = Theorem::PropUpper { d, k, p };
    let order = recursive_order(d, k, p);
    precondition(order <= PROP_UPPER_MAX_ORDER, || {
        format!("instance has {order} vertices, more than {PROP_UPPER_MAX_ORDER}")
    })?;
    let g = gen_recursive(d, k, p).map_err(|e| CheckError::Precondition(e.to_string()))?;
    let md = g.min_colour_degree().map_err(|e| CheckError::Precondition(e.to_string()))?;
    let bound = offset_bound(pow2_times(k, d + 2 - k).saturating_sub(2), opts.offset);
    let path = longest_pc_path(&g, opts.budget)?;
    let cycle = longest_pc_cycle(&g, opts.budget)?;
    let plen = path.length();
    let clen = cycle.length();
    let path_matches = plen as u64 == bound;
    let no_long_cycle = clen.is_none_or(|c| c < k);
    let verdict = if !no_long_cycle || (plen as u64) > bound {
        // Witnesses contradict the formula regardless of exactness.
        Verdict::Fail
    } else if path.exact && cycle.exact {
        if path_matches {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    } else {
        Verdict::Inconclusive
    };
    let witness = match (&cycle.cycle, no_long_cycle) {
        (Some(c), false) => Witness { kind: "cycle", tuple: c.closed_tuple().to_vec() },
        _ => Witness { kind: "path", tuple: path.path.vertices().to_vec() },
    };
    let mut notes = vec![format!("longest cycle must be shorter than {k}")];
    if k == 3 {
        notes.push("k = 3: cycle clause read as p.c.-cycle-free".into());
    }
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        theorem: thm.to_string(),
        instance: format!("recursive({d},{k},{p})"),
        n: g.n(),
        m: g.edge_count(),
        colours: g.colours().len(),
        min_colour_degree: md,
        mono_min_degree: None,
        longest_path: plen,
        longest_cycle: clen,
        hamiltonian_cycle: clen == Some(g.n()),
        bound,
        bound_real: None,
        rounding: Rounding::None,
        cycle_bound: Some(k),
        verdict,
        branch: (verdict == Verdict::Pass).then_some(Branch::Exact),
        equality: path_matches,
        witness: Some(witness),
        exact_path: path.exact,
        exact_cycle: cycle.exact,
        offset: opts.offset,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_hat, gen_rainbow_complete, gen_tilde};

    fn run(g: &EdgeColouredGraph, t: Theorem) -> VerificationReport {
        check(g, t, "test", &CheckOptions::default()).unwrap()
    }

    #[test]
    fn parse_ids() {
        for s in ["thm2", "thm3:4", "cor3", "thm6", "thm8", "prop4:3,3,3", "conj5:3", "conj7"] {
            assert_eq!(s.parse::<Theorem>().unwrap().to_string(), s);
        }
        for s in ["thm3", "thm2:1", "prop4:1,2", "nope", "conj5:x"] {
            assert!(s.parse::<Theorem>().is_err(), "{s}");
        }
    }

    #[test]
    fn thm2_examples() {
        let r = run(&gen_tilde(3, 4).unwrap(), Theorem::TwoDPlusOne);
        assert_eq!((r.verdict, r.branch, r.longest_path, r.equality), (Verdict::Pass, Some(Branch::Path), 6, true));
        let r = run(&gen_rainbow_complete(4), Theorem::TwoDPlusOne);
        assert_eq!((r.verdict, r.branch), (Verdict::Pass, Some(Branch::Cycle)));
    }

    #[test]
    fn thm3_and_cor3() {
        let r = run(&gen_tilde(2, 3).unwrap(), Theorem::KLessD(3));
        assert_eq!((r.bound, r.branch), (4, Some(Branch::Path)));
        let r = run(&gen_rainbow_complete(6), Theorem::KLessD(3));
        assert_eq!(r.branch, Some(Branch::Cycle));
        let r = run(&gen_tilde(2, 2).unwrap(), Theorem::CorK3);
        assert_eq!((r.verdict, r.equality, r.longest_cycle), (Verdict::Pass, true, None));
        let r = run(&gen_rainbow_complete(3), Theorem::CorK3);
        assert_eq!(r.branch, Some(Branch::Cycle));
    }

    #[test]
    fn real_bounds() {
        let r = run(&gen_hat(5, 9).unwrap(), Theorem::Path);
        assert_eq!((r.bound, r.branch, r.longest_path), (5, Some(Branch::Path), 7));
        assert_eq!(r.rounding, Rounding::Ceil);
        let r = run(&gen_rainbow_complete(4), Theorem::Path);
        assert_eq!(r.branch, Some(Branch::Hamiltonian));
    }

    #[test]
    fn mono_counterexample_passes() {
        let g = crate::generators::gen_counterexample_mono(3, 1).unwrap();
        let r = run(&g, Theorem::PathMono);
        assert_eq!((r.bound, r.longest_path, r.mono_min_degree), (3, 4, Some(1)));
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.notes.len(), 2);
    }

    #[test]
    fn prop_upper() {
        for (d, k, p, len) in [(2, 3, 3, 4), (3, 3, 3, 10), (2, 3, 5, 4)] {
            let r = check_prop_upper(d, k, p, &CheckOptions::default()).unwrap();
            assert_eq!((r.verdict, r.longest_path, r.longest_cycle), (Verdict::Pass, len, None), "{d},{k},{p}");
        }
        let off = CheckOptions { offset: 1, ..Default::default() };
        assert_eq!(check_prop_upper(2, 3, 3, &off).unwrap().verdict, Verdict::Fail);
        assert!(matches!(check_prop_upper(4, 3, 9, &CheckOptions::default()), Err(CheckError::Precondition(_))));
    }

    #[test]
    fn budget_never_fails() {
        let g = gen_tilde(3, 4).unwrap();
        let opts = CheckOptions { budget: Some(1), offset: 5 };
        let r = check(&g, Theorem::TwoDPlusOne, "", &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn preconditions() {
        let g = gen_tilde(2, 2).unwrap();
        assert!(matches!(check_thm_2dplus1(&gen_rainbow_complete(2), &CheckOptions::default()), Err(CheckError::Precondition(_))));
        assert!(matches!(check_thm_kd(&g, 5, &CheckOptions::default()), Err(CheckError::Precondition(_))));
        assert!(matches!(check_thm_mono(&gen_rainbow_complete(2), &CheckOptions::default()), Err(CheckError::Precondition(_))));
    }
}
