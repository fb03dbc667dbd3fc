//! Bounded counterexample search: every generator family that fits, then
//! seeded random instances, checked with exact oracle runs only.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::generators::{
    gen_counterexample_mono, gen_hat, gen_proper_complete, gen_rainbow_complete, gen_random_min_cdeg, gen_recursive,
    recursive_order, RandomSpec,
};
use crate::graph::EdgeColouredGraph;

use super::{check, CheckError, CheckOptions, Theorem, VerificationReport, Verdict};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Conjecture {
    /// Path `k 2^(d-k+2) - 2` or a cycle of length at least `k`.
    KLessD(usize),
    /// Hamiltonian cycle or path `floor(3d/2)`.
    Path,
}

impl Conjecture {
    pub fn theorem(self) -> Theorem {
        match self {
            Conjecture::KLessD(k) => Theorem::ConjKLessD(k),
            Conjecture::Path => Theorem::ConjPath,
        }
    }
}

#[derive(Clone, Debug)]
pub struct HuntOptions {
    pub max_n: usize,
    /// Instances with larger minimum colour degree are skipped.
    pub max_d: usize,
    pub seed: u64,
    /// Number of candidate instances to generate, families included.
    pub budget: usize,
    /// Node budget per oracle call; runs that hit it are not counted.
    pub oracle_budget: Option<u64>,
    /// Added to the conjectured bound (positive values deliberately
    /// overstate it).
    pub offset: i64,
}

impl Default for HuntOptions {
    fn default() -> Self {
        Self { max_n: 8, max_d: 3, seed: 0, budget: 2000, oracle_budget: None, offset: 0 }
    }
}

#[derive(Clone, Debug)]
pub struct Hit {
    pub index: usize,
    pub instance: String,
    pub graph: EdgeColouredGraph,
    pub report: VerificationReport,
}

#[derive(Clone, Debug, Default)]
pub struct HuntOutcome {
    /// Instances generated.
    pub generated: usize,
    /// Instances that met the hypothesis and were checked exactly.
    pub checked: usize,
    /// Hypothesis not met, or degree above `max_d`.
    pub skipped: usize,
    /// Oracle runs that hit the node budget.
    pub inexact: usize,
    /// First violation in stream order.
    pub counterexample: Option<Hit>,
}

type Candidate = (String, EdgeColouredGraph);

fn families(which: Conjecture, o: &HuntOptions) -> Vec<Candidate> {
    let mut out: Vec<Candidate> = Vec::new();
    let k = match which {
        Conjecture::KLessD(k) => k,
        Conjecture::Path => 3,
    };
    for d in 2..=o.max_d {
        for kk in [k, 3] {
            for p in d..=o.max_n {
                if d + 1 < kk || recursive_order(d, kk, p) > o.max_n {
                    break;
                }
                if let Ok(g) = gen_recursive(d, kk, p) {
                    let name = format!("recursive({d},{kk},{p})");
                    if !out.iter().any(|(n, _)| *n == name) {
                        out.push((name, g));
                    }
                }
            }
        }
    }
    for d in 1..=o.max_d {
        for n in d + 1..=o.max_n {
            if let Ok(g) = gen_hat(d, n) {
                out.push((format!("hat({d},{n})"), g));
            }
        }
    }
    for n in 2..=o.max_n.min(o.max_d + 1) {
        out.push((format!("rainbow-complete({n})"), gen_rainbow_complete(n)));
    }
    for n in 3..=o.max_n.min(o.max_d + 2) {
        if let Ok((g, _)) = gen_proper_complete(n) {
            out.push((format!("proper-complete({n})"), g));
        }
    }
    for kk in 2..=5 {
        if let Ok(g) = gen_counterexample_mono(kk, 1) {
            if g.n() <= o.max_n {
                out.push((format!("mono-counterexample({kk},1)"), g));
            }
        }
    }
    out
}

fn random_candidate(which: Conjecture, o: &HuntOptions, i: usize) -> Option<Candidate> {
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let n = rng.random_range(3..=o.max_n.max(3));
    let lo = match which {
        Conjecture::KLessD(k) => k - 1,
        Conjecture::Path => 1,
    };
    let hi = o.max_d.min(n - 1);
    if lo > hi {
        return None;
    }
    let d = rng.random_range(lo..=hi);
    let colours = rng.random_range(d..=d + 3);
    let spec = RandomSpec {
        n,
        d,
        colours,
        density: rng.random_range(0.0..0.6),
        seed: rng.random(),
        connected: which == Conjecture::Path || rng.random_bool(0.5),
    };
    let g = gen_random_min_cdeg(&spec).ok()?;
    Some((format!("random(n={n},d={d},colours={colours},seed={})", spec.seed), g))
}

enum Outcome {
    Skipped,
    Inexact,
    Holds,
    Violated(Box<VerificationReport>),
}

fn examine(which: Conjecture, o: &HuntOptions, (name, g): &Candidate) -> Outcome {
    if g.min_colour_degree().is_ok_and(|d| d > o.max_d) {
        return Outcome::Skipped;
    }
    let opts = CheckOptions { budget: o.oracle_budget, offset: o.offset };
    match check(g, which.theorem(), name, &opts) {
        Err(CheckError::Precondition(_)) => Outcome::Skipped,
        Err(e) => panic!("{name}: {e}"),
        Ok(r) => match r.verdict {
            Verdict::Pass => Outcome::Holds,
            Verdict::Inconclusive => Outcome::Inexact,
            Verdict::Fail => Outcome::Violated(Box::new(r)),
        },
    }
}

const CHUNK: usize = 128;

/// Streams candidates in a fixed order and returns the first violation.
/// Chunks are checked in parallel on the current rayon pool; the result
/// does not depend on the pool size.
pub fn conjecture_search(which: Conjecture, o: &HuntOptions) -> HuntOutcome {
    let fam = families(which, o);
    let mut out = HuntOutcome::default();
    let mut next_random = 0usize;
    let mut fam_iter = fam.into_iter();
    while out.generated < o.budget {
        let want = CHUNK.min(o.budget - out.generated);
        let mut batch: Vec<Candidate> = fam_iter.by_ref().take(want).collect();
        let mut misses = 0;
        while batch.len() < want && misses < 1000 {
            match random_candidate(which, o, next_random) {
                Some(c) => batch.push(c),
                None => misses += 1,
            }
            next_random += 1;
        }
        if batch.is_empty() {
            break;
        }
        let len = batch.len();
        let results: Vec<Outcome> = batch.par_iter().map(|c| examine(which, o, c)).collect();
        for (offset, (res, cand)) in results.into_iter().zip(batch).enumerate() {
            let index = out.generated + offset;
            match res {
                Outcome::Skipped => out.skipped += 1,
                Outcome::Inexact => out.inexact += 1,
                Outcome::Holds => out.checked += 1,
                Outcome::Violated(report) => {
                    out.checked += 1;
                    out.generated = index + 1;
                    let (instance, graph) = cand;
                    out.counterexample = Some(Hit { index, instance, graph, report: *report });
                    return out;
                }
            }
        }
        out.generated += len;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_conjecture_small() {
        let o = HuntOptions { max_n: 7, budget: 300, ..Default::default() };
        let r = conjecture_search(Conjecture::Path, &o);
        assert!(r.counterexample.is_none());
        assert!(r.checked > 100, "{r:?}");
        assert_eq!(r.inexact, 0);
    }

    #[test]
    fn overstated_bound_is_caught() {
        let o = HuntOptions { max_n: 8, budget: 50, offset: 1, ..Default::default() };
        let r = conjecture_search(Conjecture::KLessD(3), &o);
        let hit = r.counterexample.expect("offset bound must fail on the extremal family");
        assert!(hit.instance.starts_with("recursive("));
        assert_eq!(hit.report.verdict, Verdict::Fail);
    }

    #[test]
    fn deterministic() {
        let o = HuntOptions { max_n: 6, budget: 80, seed: 7, ..Default::default() };
        let a = conjecture_search(Conjecture::KLessD(3), &o);
        let b = conjecture_search(Conjecture::KLessD(3), &o);
        assert_eq!((a.checked, a.skipped), (b.checked, b.skipped));
    }
}
