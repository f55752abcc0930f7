//! Covering dimension on grids.
//!
//! `dim(S) ≤ n` asks that whenever `x′ ≪ x ≪ y_1 + … + y_r` there are
//! `z_{j,k}` (`j ≤ r`, `k ≤ n`) with `z_{j,k} ≪ y_j`, `x′ ≪ Σ_{j,k} z_{j,k}`
//! and `Σ_j z_{j,k} ≪ x` for every colour `k`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::element::Element;
use crate::error::{CuError, Result};
use crate::report::{Report, SearchMode, Verdict};
use crate::sample::SampleSpec;
use crate::search::{search, Var};
use crate::semigroup::{Kind, Semigroup};

/// Default largest number of summands `y_j`.
pub const DIM_MAX_SUMMANDS: usize = 3;

/// Largest `n` accepted by [`dim_bracket`].
pub const DIM_MAX_N: u32 = 3;

/// Nodes the witness search may visit per premise tuple before giving up.
const NODE_BUDGET: u64 = 2_000_000;

/// Refinement of the witness grid. Step `1/(2L)` leaves room for `r ≤ 3`
/// strict inequalities between neighbouring grid values `1/L` apart.
const WITNESS_FACTOR: u64 = 2;

/// A filled refinement: `zs[j][k] ≪ y_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimWitness {
    pub x_prime: Element,
    pub x: Element,
    pub ys: Vec<Element>,
    pub zs: Vec<Vec<Element>>,
}

impl DimWitness {
    /// Re-checks the three defining conditions.
    pub fn verify(&self, s: &Semigroup) -> bool {
        let r = self.ys.len();
        if self.zs.len() != r || r == 0 {
            return false;
        }
        let cols = self.zs[0].len();
        if cols == 0 || self.zs.iter().any(|row| row.len() != cols) {
            return false;
        }
        let below = self.zs.iter().zip(&self.ys).all(|(row, y)| row.iter().all(|z| s.wb(z, y)));
        let total = self.zs.iter().flatten().fold(s.zero(), |a, z| s.plus(&a, z));
        let colours = (0..cols).all(|k| {
            let col = self.zs.iter().fold(s.zero(), |a, row| s.plus(&a, &row[k]));
            s.wb(&col, &self.x)
        });
        below && colours && s.wb(&self.x_prime, &total)
    }
}

/// Witness candidates for one instance: the refined grid plus, for each
/// element of the sample grid, the indices of candidates way below it and
/// below it.
struct Candidates {
    s: Semigroup,
    w: Vec<Element>,
    wb_below: HashMap<Element, Vec<u32>>,
    le_below: HashMap<Element, Vec<u32>>,
}

impl Candidates {
    fn new(s: &Semigroup, sample: &SampleSpec) -> Result<Self> {
        let w = s.enumerate_grid(&sample.witness_grid(WITNESS_FACTOR))?;
        let grid = s.enumerate(sample)?;
        let index = |pred: &(dyn Fn(&Element, &Element) -> bool + Sync)| -> HashMap<Element, Vec<u32>> {
            grid.par_iter()
                .map(|y| (y.clone(), (0..w.len() as u32).rev().filter(|&i| pred(&w[i as usize], y)).collect()))
                .collect()
        };
        let wb_below = index(&|z, y| s.wb(z, y));
        let le_below = index(&|z, x| s.le(z, x));
        Ok(Candidates { s: s.clone(), w, wb_below, le_below })
    }

    fn lookup(&self, map: &HashMap<Element, Vec<u32>>, y: &Element, pred: impl Fn(&Element) -> bool) -> Vec<u32> {
        match map.get(y) {
            Some(v) => v.clone(),
            None => (0..self.w.len() as u32).rev().filter(|&i| pred(&self.w[i as usize])).collect(),
        }
    }

    /// Candidates `z ≪ y` with `z ≤ x`, largest first.
    fn for_row(&self, y: &Element, x_below: &[u32]) -> Vec<&Element> {
        let wb = self.lookup(&self.wb_below, y, |z| self.s.wb(z, y));
        // Both lists are sorted by decreasing index.
        let (mut i, mut j, mut out) = (0, 0, Vec::new());
        while i < wb.len() && j < x_below.len() {
            match wb[i].cmp(&x_below[j]) {
                std::cmp::Ordering::Equal => {
                    out.push(&self.w[wb[i] as usize]);
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Greater => i += 1,
                std::cmp::Ordering::Less => j += 1,
            }
        }
        out
    }
}

/// Candidate pools for the `z_{j,k}`, split into summands where the
/// conditions decouple.
enum Pool {
    Whole(Candidates),
    Split(Vec<Pool>),
}

impl Pool {
    fn new(s: &Semigroup, sample: &SampleSpec) -> Result<Pool> {
        match s.kind() {
            Kind::Sum(cs) => Ok(Pool::Split(cs.iter().map(|c| Pool::new(c, sample)).collect::<Result<_>>()?)),
            Kind::SoftPart(a) => match a.kind() {
                Kind::Sum(cs) => Ok(Pool::Split(
                    cs.iter()
                        .map(|c| Pool::new(&Semigroup::soft_part(c.clone())?, sample))
                        .collect::<Result<_>>()?,
                )),
                _ => Ok(Pool::Whole(Candidates::new(s, sample)?)),
            },
            _ => Ok(Pool::Whole(Candidates::new(s, sample)?)),
        }
    }

    fn find(&self, xp: &Element, x: &Element, ys: &[&Element], n: u32) -> Result<Option<Vec<Vec<Element>>>> {
        match self {
            Pool::Whole(c) => {
                let x_below = c.lookup(&c.le_below, x, |z| c.s.le(z, x));
                let cands: Vec<Vec<&Element>> = ys.iter().map(|y| c.for_row(y, &x_below)).collect();
                fill(&c.s, &cands, xp, x, n)
            }
            Pool::Split(parts) => {
                let proj = |e: &Element, i: usize| match e {
                    Element::Tuple(v) => v[i].clone(),
                    _ => unreachable!("sum elements are tuples"),
                };
                let mut pieces = Vec::with_capacity(parts.len());
                for (i, p) in parts.iter().enumerate() {
                    let ys_i: Vec<Element> = ys.iter().map(|y| proj(y, i)).collect();
                    let refs: Vec<&Element> = ys_i.iter().collect();
                    match p.find(&proj(xp, i), &proj(x, i), &refs, n)? {
                        Some(zs) => pieces.push(zs),
                        None => return Ok(None),
                    }
                }
                let r = ys.len();
                let zs = (0..r)
                    .map(|j| {
                        (0..=n as usize)
                            .map(|k| Element::Tuple(pieces.iter().map(|p| p[j][k].clone()).collect()))
                            .collect()
                    })
                    .collect();
                Ok(Some(zs))
            }
        }
    }
}

/// Depth-first search over the matrix, column by column, largest candidates
/// first, pruning on partial column sums.
fn fill(
    s: &Semigroup,
    cands: &[Vec<&Element>],
    xp: &Element,
    x: &Element,
    n: u32,
) -> Result<Option<Vec<Vec<Element>>>> {
    let r = cands.len();
    let cols = n as usize + 1;

    struct State<'a> {
        s: &'a Semigroup,
        cands: &'a [Vec<&'a Element>],
        xp: &'a Element,
        x: &'a Element,
        r: usize,
        cols: usize,
        chosen: Vec<&'a Element>,
        nodes: u64,
    }

    impl<'a> State<'a> {
        fn go(&mut self, pos: usize, col: Element, total: Element) -> Result<bool> {
            if pos == self.r * self.cols {
                return Ok(self.s.wb(self.xp, &total));
            }
            let j = pos % self.r;
            for &z in &self.cands[j] {
                self.nodes += 1;
                if self.nodes > NODE_BUDGET {
                    return Err(CuError::Inconclusive("dimension witness search exceeded its node budget".into()));
                }
                let c = self.s.plus(&col, z);
                if !self.s.le(&c, self.x) {
                    continue;
                }
                let closes = j + 1 == self.r;
                if closes && !self.s.wb(&c, self.x) {
                    continue;
                }
                self.chosen.push(z);
                let next_col = if closes { self.s.zero() } else { c };
                if self.go(pos + 1, next_col, self.s.plus(&total, z))? {
                    return Ok(true);
                }
                self.chosen.pop();
            }
            Ok(false)
        }
    }

    let mut st = State { s, cands, xp, x, r, cols, chosen: Vec::new(), nodes: 0 };
    if !st.go(0, s.zero(), s.zero())? {
        return Ok(None);
    }
    let zs = (0..r).map(|j| (0..cols).map(|k| st.chosen[k * r + j].clone()).collect()).collect();
    Ok(Some(zs))
}

/// Searches for a witness for one premise tuple.
pub fn find_dim_witness(
    s: &Semigroup,
    xp: &Element,
    x: &Element,
    ys: &[Element],
    n: u32,
    sample: &SampleSpec,
) -> Result<Option<DimWitness>> {
    for e in std::iter::once(xp).chain([x]).chain(ys) {
        s.validate(e)?;
    }
    let pool = Pool::new(s, sample)?;
    let refs: Vec<&Element> = ys.iter().collect();
    Ok(pool.find(xp, x, &refs, n)?.map(|zs| DimWitness {
        x_prime: xp.clone(),
        x: x.clone(),
        ys: ys.to_vec(),
        zs,
    }))
}

/// `dim ≤ n` on the grid, for `r = 1, …, DIM_MAX_SUMMANDS`.
pub fn dim_at_most(s: &Semigroup, n: u32, sample: &SampleSpec) -> Result<Report> {
    dim_at_most_with(s, n, DIM_MAX_SUMMANDS, sample)
}

pub fn dim_at_most_with(s: &Semigroup, n: u32, max_summands: usize, sample: &SampleSpec) -> Result<Report> {
    sample.validate()?;
    let id = format!("dim<={n}");
    let all = s.enumerate(sample)?;
    let mut searched = 0;
    let mut mode = SearchMode::Exhaustive;
    let mut unknown = None;
    let pool = Pool::new(s, sample)?;
    for r in 1..=max_summands.max(1) {
        let mut vars = vec![Var::new("x", &all), Var::new("x'", &all).admit(|b| s.wb(b[1], b[0]))];
        for j in 1..=r {
            let name = format!("y{j}");
            let var = Var::new(name, &all);
            let last = j == r;
            vars.push(var.admit(move |b| {
                let i = b.len() - 1;
                let ordered = j == 1 || b[i - 1] <= b[i];
                ordered && (!last || s.wb(b[0], &b[2..].iter().fold(s.zero(), |a, y| s.plus(&a, y))))
            }));
        }
        let report = search(&id, &vars, sample, |b| Ok(pool.find(b[1], b[0], &b[2..], n)?.is_some()))?;
        searched += report.searched;
        if report.mode == SearchMode::Sampled {
            mode = SearchMode::Sampled;
        }
        match report.verdict {
            Verdict::Fail => return Ok(Report { searched, mode, ..report }.with_note(format!("r = {r}"))),
            Verdict::Inconclusive => {
                unknown.get_or_insert(report);
            }
            Verdict::Pass => {}
        }
    }
    let pass = Report::pass(&id, *sample, mode, searched);
    Ok(match unknown {
        Some(u) => Report { verdict: Verdict::Inconclusive, note: u.note, ..pass },
        None if mode == SearchMode::Sampled => pass.with_note("sampled: a pass is evidence, not proof"),
        None => pass,
    })
}

/// Results of `dim ≤ n` for `n = 0, 1, …` up to the first pass.
#[derive(Clone, Debug)]
pub struct DimBracket {
    /// One report per tested `n`, in order.
    pub reports: Vec<Report>,
    /// The least `n` whose check passed, if any.
    pub first_pass: Option<u32>,
}

impl DimBracket {
    /// Every report below the first pass failed with a grid counterexample.
    pub fn lower_bound_certified(&self) -> bool {
        let below = self.first_pass.map_or(self.reports.len(), |n| n as usize);
        self.reports[..below].iter().all(Report::is_fail)
    }
}

/// Runs `dim ≤ n` for `n = 0..=n_max` until one passes. Larger `n` need not
/// be run: padding a witness with a zero colour keeps it a witness.
pub fn dim_bracket(s: &Semigroup, n_max: u32, sample: &SampleSpec) -> Result<DimBracket> {
    if n_max > DIM_MAX_N {
        return Err(CuError::InvalidSample(format!("n_max must be at most {DIM_MAX_N}")));
    }
    let mut reports = Vec::new();
    for n in 0..=n_max {
        let r = dim_at_most(s, n, sample)?;
        let passed = r.is_pass();
        reports.push(r);
        if passed {
            return Ok(DimBracket { reports, first_pass: Some(n) });
        }
    }
    Ok(DimBracket { reports, first_pass: None })
}

/// `dim(S_soft) ≤ dim(S) ≤ dim(S_soft) + 1`, compared at grid level.
#[derive(Clone, Debug)]
pub struct SandwichReport {
    pub report: Report,
    pub ambient: DimBracket,
    pub soft: DimBracket,
}

pub fn verify_dim_sandwich(s: &Semigroup, sample: &SampleSpec) -> Result<SandwichReport> {
    let caps = s.capabilities();
    if !caps.divisible2w {
        return Err(CuError::CapabilityMissing { instance: s.name().to_string(), capability: "divisible2w" });
    }
    if !caps.weakly_cancellative {
        return Err(CuError::CapabilityMissing {
            instance: s.name().to_string(),
            capability: "weaklyCancellative",
        });
    }
    let soft = Semigroup::soft_part(s.clone())?;
    let ambient = dim_bracket(s, DIM_MAX_N, sample)?;
    let soft_b = dim_bracket(&soft, DIM_MAX_N, sample)?;
    let exhaustive = ambient.reports.iter().chain(&soft_b.reports).all(|r| r.mode == SearchMode::Exhaustive);
    let mode = if exhaustive { SearchMode::Exhaustive } else { SearchMode::Sampled };
    let searched = ambient.reports.iter().chain(&soft_b.reports).map(|r| r.searched).sum();
    let note = format!(
        "dim(S) first pass {}, dim(S_soft) first pass {}",
        show(ambient.first_pass),
        show(soft_b.first_pass)
    );
    let report = match (ambient.first_pass, soft_b.first_pass) {
        (Some(a), Some(b)) if b <= a && a <= b + 1 => Report::pass("dim-sandwich", *sample, mode, searched),
        (Some(_), Some(_)) => {
            let offender = ambient.reports.iter().chain(&soft_b.reports).find(|r| r.is_fail());
            let ce = offender.and_then(|r| r.counterexample.clone()).unwrap_or_default();
            let r = Report::fail("dim-sandwich", *sample, mode, searched, ce);
            if exhaustive {
                r
            } else {
                Report { verdict: Verdict::Inconclusive, counterexample: None, ..r }
            }
        }
        _ => Report {
            verdict: Verdict::Inconclusive,
            ..Report::pass("dim-sandwich", *sample, mode, searched)
        },
    };
    Ok(SandwichReport { report: report.with_note(note), ambient, soft: soft_b })
}

fn show(n: Option<u32>) -> String {
    n.map_or_else(|| "none".into(), |n| n.to_string())
}
