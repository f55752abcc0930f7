//! Bounded search over tuples of grid elements.
//!
//! A search binds variables left to right. Each variable draws from a domain
//! and may carry an admission filter that sees the tuple bound so far; the
//! filters encode premises. The body is evaluated on every admitted tuple.
//! When the admitted tuples fit in `max_tuples` the search is exhaustive,
//! otherwise it falls back to seeded sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::element::Element;
use crate::error::{CuError, Result};
use crate::report::{Binding, Report, SearchMode};
use crate::sample::SampleSpec;

/// Premise filter over the tuple bound so far (the last entry is the
/// variable being admitted).
pub type Admit<'a> = Box<dyn Fn(&[&Element]) -> bool + Sync + 'a>;

pub struct Var<'a> {
    pub name: String,
    pub domain: &'a [Element],
    pub admit: Option<Admit<'a>>,
}

impl<'a> Var<'a> {
    pub fn new(name: impl Into<String>, domain: &'a [Element]) -> Self {
        Var { name: name.into(), domain, admit: None }
    }

    pub fn admit(mut self, f: impl Fn(&[&Element]) -> bool + Sync + 'a) -> Self {
        self.admit = Some(Box::new(f));
        self
    }

    fn admits(&self, bound: &[&Element]) -> bool {
        self.admit.as_ref().is_none_or(|f| f(bound))
    }
}

const CHUNK: usize = 4096;
const WORK_FACTOR: u64 = 16;
const SMALL_DOMAIN: usize = 64;
const REJECTION_TRIES: usize = 32;
const ATTEMPT_FACTOR: u64 = 4;

/// Runs the search. The body returns `Ok(true)` when the conclusion holds,
/// `Ok(false)` on a violation and `Err(Inconclusive)` when it cannot decide;
/// other errors abort the search.
pub fn search<F>(property: &str, vars: &[Var<'_>], sample: &SampleSpec, body: F) -> Result<Report>
where
    F: Fn(&[&Element]) -> Result<bool> + Sync,
{
    sample.validate()?;
    let (tuples, mode) = match exhaustive(vars, sample.max_tuples) {
        Some(t) => (t, SearchMode::Exhaustive),
        None => (sampled(property, vars, sample), SearchMode::Sampled),
    };
    let searched = tuples.len() as u64;
    if tuples.is_empty() {
        return Ok(match mode {
            SearchMode::Exhaustive => Report::pass(property, *sample, mode, 0)
                .with_note("vacuous: no grid tuple satisfies the premises"),
            SearchMode::Sampled => Report {
                verdict: crate::report::Verdict::Inconclusive,
                ..Report::pass(property, *sample, mode, 0)
            }
            .with_note("sampling found no tuple satisfying the premises"),
        });
    }
    let mut unknown: Option<(usize, String)> = None;
    for (c, chunk) in tuples.chunks(CHUNK).enumerate() {
        let outcomes: Vec<Result<bool>> = chunk
            .par_iter()
            .map(|idx| {
                let bound = resolve(vars, idx);
                body(&bound)
            })
            .collect();
        for (i, outcome) in outcomes.into_iter().enumerate() {
            match outcome {
                Ok(true) => {}
                Ok(false) => {
                    let idx = &chunk[i];
                    let ce = vars
                        .iter()
                        .zip(idx)
                        .map(|(v, &j)| Binding { variable: v.name.clone(), element: v.domain[j as usize].clone() })
                        .collect();
                    return Ok(Report::fail(property, *sample, mode, searched, ce));
                }
                Err(CuError::Inconclusive(why)) => {
                    unknown.get_or_insert((c * CHUNK + i, why));
                }
                Err(e) => return Err(e),
            }
        }
    }
    let report = Report::pass(property, *sample, mode, searched);
    Ok(match unknown {
        Some((_, why)) => Report { verdict: crate::report::Verdict::Inconclusive, ..report }.with_note(why),
        None => report,
    })
}

fn resolve<'a>(vars: &'a [Var<'_>], idx: &[u32]) -> Vec<&'a Element> {
    vars.iter().zip(idx).map(|(v, &j)| &v.domain[j as usize]).collect()
}

/// All admitted index tuples, or `None` once the leaf or work budget is
/// exceeded.
fn exhaustive(vars: &[Var<'_>], max_tuples: u64) -> Option<Vec<Vec<u32>>> {
    struct Dfs<'v, 'a> {
        vars: &'v [Var<'a>],
        out: Vec<Vec<u32>>,
        idx: Vec<u32>,
        bound: Vec<&'v Element>,
        work: u64,
        max_leaves: u64,
        max_work: u64,
    }
    impl<'v, 'a> Dfs<'v, 'a> {
        fn go(&mut self, depth: usize) -> bool {
            if depth == self.vars.len() {
                if self.out.len() as u64 >= self.max_leaves {
                    return false;
                }
                self.out.push(self.idx.clone());
                return true;
            }
            let var = &self.vars[depth];
            for (j, x) in var.domain.iter().enumerate() {
                self.work += 1;
                if self.work > self.max_work {
                    return false;
                }
                self.bound.push(x);
                if var.admits(&self.bound) {
                    self.idx.push(j as u32);
                    let ok = self.go(depth + 1);
                    self.idx.pop();
                    if !ok {
                        self.bound.pop();
                        return false;
                    }
                }
                self.bound.pop();
            }
            true
        }
    }
    let mut dfs = Dfs {
        vars,
        out: Vec::new(),
        idx: Vec::with_capacity(vars.len()),
        bound: Vec::with_capacity(vars.len()),
        work: 0,
        max_leaves: max_tuples,
        max_work: max_tuples.saturating_mul(WORK_FACTOR),
    };
    dfs.go(0).then_some(dfs.out)
}

/// Seeded sampling of admitted tuples.
fn sampled(property: &str, vars: &[Var<'_>], sample: &SampleSpec) -> Vec<Vec<u32>> {
    let mut rng = ChaCha8Rng::seed_from_u64(sample.seed ^ fnv1a(property));
    let target = sample.max_tuples;
    let attempts = target.saturating_mul(ATTEMPT_FACTOR);
    let mut out = Vec::new();
    let mut bound: Vec<&Element> = Vec::with_capacity(vars.len());
    let mut idx: Vec<u32> = Vec::with_capacity(vars.len());
    let mut candidates: Vec<u32> = Vec::new();
    'attempt: for _ in 0..attempts {
        if out.len() as u64 >= target {
            break;
        }
        bound.clear();
        idx.clear();
        for var in vars {
            if var.domain.is_empty() {
                return out;
            }
            let pick = if var.domain.len() <= SMALL_DOMAIN {
                candidates.clear();
                for (j, x) in var.domain.iter().enumerate() {
                    bound.push(x);
                    if var.admits(&bound) {
                        candidates.push(j as u32);
                    }
                    bound.pop();
                }
                if candidates.is_empty() {
                    continue 'attempt;
                }
                candidates[rng.gen_range(0..candidates.len())]
            } else {
                let mut found = None;
                for _ in 0..REJECTION_TRIES {
                    let j = rng.gen_range(0..var.domain.len());
                    bound.push(&var.domain[j]);
                    let ok = var.admits(&bound);
                    bound.pop();
                    if ok {
                        found = Some(j as u32);
                        break;
                    }
                }
                match found {
                    Some(j) => j,
                    None => continue 'attempt,
                }
            };
            bound.push(&var.domain[pick as usize]);
            idx.push(pick);
        }
        out.push(idx.clone());
    }
    out
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// `∃ w ∈ domain` with `pred(w)`.
pub fn exists(domain: &[Element], pred: impl Fn(&Element) -> bool) -> Option<&Element> {
    domain.iter().find(|w| pred(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    fn nats(n: u64) -> Vec<Element> {
        (0..n).map(Element::nat).collect()
    }

    #[test]
    fn exhaustive_pass_counts_admitted_tuples() {
        let d = nats(5);
        let vars = [Var::new("x", &d), Var::new("y", &d).admit(|b| b[0] <= b[1])];
        let r = search("le", &vars, &SampleSpec::default(), |_| Ok(true)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.mode, SearchMode::Exhaustive);
        assert_eq!(r.searched, 15);
    }

    #[test]
    fn first_violation_is_reported() {
        let d = nats(5);
        let vars = [Var::new("x", &d), Var::new("y", &d)];
        let r = search("p", &vars, &SampleSpec::default(), |b| Ok(b[0] <= b[1])).unwrap();
        assert_eq!(r.witness(), vec![Element::nat(1), Element::nat(0)]);
    }

    #[test]
    fn sampling_is_reproducible() {
        let d = nats(100);
        let vars = [Var::new("x", &d), Var::new("y", &d), Var::new("z", &d)];
        let s = SampleSpec::default().with_max_tuples(500).with_seed(7);
        let a = search("p", &vars, &s, |b| Ok(b[0] != &Element::nat(99) || b[1] != b[2])).unwrap();
        let b = search("p", &vars, &s, |b| Ok(b[0] != &Element::nat(99) || b[1] != b[2])).unwrap();
        assert_eq!(a.mode, SearchMode::Sampled);
        assert_eq!(a, b);
    }

    #[test]
    fn inconclusive_body_propagates() {
        let d = nats(3);
        let vars = [Var::new("x", &d)];
        let r = search("p", &vars, &SampleSpec::default(), |_| Err(CuError::Inconclusive("?".into()))).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }
}
