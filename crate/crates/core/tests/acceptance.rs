//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the lines always print; exits nonzero if any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use cu_workbench::functionals::{
    duality_laws, eval_softified, functional_family, rank, restrict_to_soft, soft_rank_witness, softify, Functional,
};
use cu_workbench::instances::{GroupAction, Poset};
use cu_workbench::invariants::{
    dim_at_most, dim_bracket, r1_holds, rc_bracket, verify_dim_sandwich, verify_rc_embedding_monotone,
    verify_rc_soft_equality, Embedding,
};
use cu_workbench::laws::fixed_point_audits;
use cu_workbench::regularity::{check_implication, check_property, replay, Implication, Property};
use cu_workbench::soft::{is_strongly_soft, is_strongly_soft_generic, lx_laws, sigma, sigma_laws, sigma_search, sup_lx_prime};
use cu_workbench::{CuError, Element, ExtValue, Rational, Report, SampleSpec, SearchMode, Semigroup};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: cu_workbench::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn all_pass(s: &Semigroup, reports: &[Report], exhaustive: bool) -> Result<usize, String> {
    for r in reports {
        ensure(r.is_pass(), || {
            let w: Vec<String> = r.witness().iter().map(|x| s.literal(x)).collect();
            format!("{} on {}: {:?} at ({}) {}", r.property, s.name(), r.verdict, w.join(", "), r.note.clone().unwrap_or_default())
        })?;
        ensure(!exhaustive || r.mode == SearchMode::Exhaustive, || format!("{} on {} was sampled", r.property, s.name()))?;
    }
    Ok(reports.len())
}

fn z() -> Semigroup {
    Semigroup::jiang_su()
}

fn zz() -> Semigroup {
    Semigroup::sum(vec![z(), z()]).unwrap()
}

fn lsc_q(n: usize) -> Semigroup {
    let names = ["a", "b", "c"];
    Semigroup::lsc_q(Poset::antichain(&names[..n]))
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// sup L′_x on ℕ̄ by brute force over `u′, u, s ≤ 10` and `∞`.
fn sup_lx_prime_by_search(x: ExtValue) -> ExtValue {
    let vals: Vec<ExtValue> = (0..=10).map(ExtValue::nat).chain([ExtValue::Infinite]).collect();
    let wb = |a: ExtValue, b: ExtValue| a <= b && a.is_finite();
    let mut best = ExtValue::zero();
    for &up in &vals {
        for &u in &vals {
            for &s in &vals {
                let below_inf_s = if s.is_zero() { u.is_zero() } else { true };
                if wb(up, u) && below_inf_s && wb(u + s, x) {
                    best = best.max(up);
                }
            }
        }
    }
    // An unbounded set of finite members has supremum ∞.
    if x.is_infinite() {
        ExtValue::Infinite
    } else {
        best
    }
}

fn criterion_1() -> Outcome {
    let n = Semigroup::ext_nat();
    let xs: Vec<ExtValue> = (0..=8).map(ExtValue::nat).chain([ExtValue::Infinite]).collect();
    for x in xs {
        let table = match x {
            ExtValue::Infinite => ExtValue::Infinite,
            v if v.is_zero() => v,
            v => v.saturating_sub(Rational::from_integer(1)),
        };
        let got = match ok(sup_lx_prime(&n, &Element::Scalar(x)))? {
            Element::Scalar(v) => v,
            e => return Err(format!("unexpected {e:?}")),
        };
        ensure(got == table, || format!("sup L′({x}) = {got}, table says {table}"))?;
        ensure(got == sup_lx_prime_by_search(x), || format!("sup L′({x}) = {got} disagrees with the search"))?;
    }
    Ok("0, x−1, ∞ for x = 0..8, ∞".into())
}

/// Every strict order on `n` labelled points, as relation lists.
fn posets(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let rel: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, p)| *p).collect();
        let has = |a, b| rel.contains(&(a, b));
        let antisymmetric = rel.iter().all(|&(a, b)| !has(b, a));
        let transitive = rel.iter().all(|&(a, b)| rel.iter().all(|&(c, d)| c != b || has(a, d)));
        if antisymmetric && transitive {
            out.push(rel);
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let sample = SampleSpec::new(2, 1);
    let names = ["a", "b", "c"];
    let (mut count, mut elements) = (0, 0);
    for n in 0..=3 {
        for rel in posets(n) {
            let atoms = names[..n].iter().map(|s| s.to_string()).collect();
            let s = Semigroup::lsc_nat(Poset::new(atoms, &rel).map_err(|e| e.to_string())?);
            for f in ok(s.enumerate(&sample))? {
                let Element::Lsc(vs) = &f else { return Err("not an Lsc element".into()) };
                let up: Vec<usize> = (0..n).filter(|&i| vs[i].is_infinite()).collect();
                let up_closed = rel.iter().all(|&(a, b)| !up.contains(&a) || up.contains(&b));
                let indicator = vs.iter().all(|v| v.is_zero() || v.is_infinite()) && up_closed;
                let generic = ok(is_strongly_soft_generic(&s, &f, &sample))?;
                ensure(generic == indicator, || format!("{} on poset {rel:?}: soft {generic}", s.literal(&f)))?;
                ensure(ok(is_strongly_soft(&s, &f))? == indicator, || format!("closed form differs on {}", s.literal(&f)))?;
                elements += 1;
            }
            count += 1;
        }
    }
    ensure(count == 1 + 1 + 3 + 19, || format!("{count} labelled posets"))?;
    Ok(format!("{count} posets, {elements} elements"))
}

fn criterion_3() -> Outcome {
    let z = z();
    for n in 1..=8 {
        let s = ok(sigma(&z, &Element::compact(n)))?;
        ensure(s == Element::soft(ExtValue::nat(n)), || format!("σ(compact {n}) = {}", z.literal(&s)))?;
        let searched = ok(sigma_search(&z, &Element::compact(n), &SampleSpec::new(8, 2)))?;
        ensure(searched == s, || format!("grid search gives σ(compact {n}) = {}", z.literal(&searched)))?;
    }
    let mut fixed = 0;
    for x in ok(z.enumerate(&SampleSpec::new(8, 8)))? {
        if ok(is_strongly_soft(&z, &x))? {
            ensure(ok(sigma(&z, &x))? == x, || format!("σ moves {}", z.literal(&x)))?;
            fixed += 1;
        }
    }
    Ok(format!("σ(compact n) = soft n for n ≤ 8; {fixed} soft elements fixed"))
}

fn criterion_4() -> Outcome {
    let full = SampleSpec::default().with_max_tuples(1_000_000);
    let mut checks = 0;
    for s in [z(), Semigroup::ext_q(), lsc_q(1), lsc_q(2), zz()] {
        checks += all_pass(&s, &ok(sigma_laws(&s, &full))?, true)?;
        let grid = ok(s.enumerate(&full))?.len();
        let lx_sample = if grid > 100 { SampleSpec::new(2, 2).with_max_tuples(1_000_000) } else { full };
        checks += all_pass(&s, &ok(lx_laws(&s, &lx_sample))?, true)?;
    }
    Ok(format!("{checks} σ and L_x checks exhaustive, zero violations"))
}

/// The ≤-minimal elements among `xs`.
fn minimal<'a>(s: &Semigroup, xs: &'a [Element]) -> Vec<&'a Element> {
    xs.iter().filter(|x| !xs.iter().any(|y| y != *x && s.leq(y, x).unwrap())).collect()
}

/// Grid elements `x` admitting `x′ ≪ x` with no `y`, `2y ≤ x`, `x′ ≤ ∞y`.
fn div2_failures(s: &Semigroup, sample: &SampleSpec) -> Vec<Element> {
    let g = s.enumerate(sample).unwrap();
    g.iter()
        .filter(|x| {
            g.iter().filter(|xp| s.way_below(xp, x).unwrap()).any(|xp| {
                !g.iter().any(|y| {
                    s.leq(&s.multiple(y, 2).unwrap(), x).unwrap() && s.leq(xp, &s.times_infinity(y).unwrap()).unwrap()
                })
            })
        })
        .cloned()
        .collect()
}

fn criterion_5() -> Outcome {
    let sample = SampleSpec::default().with_max_tuples(1_000_000);
    let small = SampleSpec::new(2, 1);
    let failing = [
        (Semigroup::ext_nat(), sample),
        (Semigroup::lsc_nat(Poset::antichain(&["a"])), sample),
        (Semigroup::lsc_nat(Poset::antichain(&["a", "b"])), small),
        (Semigroup::lsc_nat(Poset::chain(&["a", "b"])), small),
    ];
    for (s, sm) in &failing {
        let r = ok(check_property(s, Property::Divisible2w, sm))?;
        ensure(r.is_fail(), || format!("div2 on {} did not fail", s.name()))?;
        let w = r.witness();
        ensure(ok(replay(s, Property::Divisible2w, sm, &w))?, || format!("div2 witness on {} does not replay", s.name()))?;
        let fails = div2_failures(s, sm);
        ensure(minimal(s, &fails).contains(&&w[0]), || {
            format!("div2 witness x = {} on {} is not minimal", s.literal(&w[0]), s.name())
        })?;
    }
    for (s, sm) in [(z(), sample), (Semigroup::ext_q(), sample), (lsc_q(1), sample), (lsc_q(2), sample)] {
        all_pass(&s, &[ok(check_property(&s, Property::Divisible2w, &sm))?], false)?;
    }
    let mut implications = 0;
    let instances = [
        (Semigroup::ext_nat(), sample),
        (Semigroup::ext_q(), sample),
        (Semigroup::two_point(), sample),
        (z(), sample),
        (Semigroup::lsc_nat(Poset::antichain(&["a", "b"])), small),
        (Semigroup::lsc_nat(Poset::chain(&["a", "b"])), small),
        (lsc_q(2), SampleSpec::new(2, 2)),
    ];
    for (s, sm) in &instances {
        for i in [Implication::WcSepLss, Implication::AuO5Lss] {
            let r = ok(check_implication(s, i, sm))?;
            ensure(r.is_pass(), || format!("{} on {}: {:?} {}", i.id(), s.name(), r.verdict, r.note.clone().unwrap_or_default()))?;
            implications += 1;
        }
    }
    Ok(format!("div2 fails minimally on 4 instances, passes on 4; {implications} implication checks pass"))
}

fn criterion_6() -> Outcome {
    let mut checks = 0;
    for (s, sample) in [
        (z(), SampleSpec::default()),
        (Semigroup::ext_q(), SampleSpec::default()),
        (lsc_q(1), SampleSpec::default()),
        (lsc_q(2), SampleSpec::new(2, 2)),
    ] {
        let reports = ok(duality_laws(&s, &sample))?;
        for id in ["duality:restrict-after-softify", "duality:softify-after-restrict", "duality:sup-over-lx"] {
            ensure(reports.iter().any(|r| r.property == id), || format!("{id} missing on {}", s.name()))?;
        }
        checks += all_pass(&s, &reports, true)?;
    }
    // λ_soft on Z by hand: soft minorants of compact n have values up to n.
    let z = z();
    for f in functional_family(&z, &SampleSpec::default()) {
        let Functional::Scale(c) = &f else { return Err("unexpected functional on Z".into()) };
        let g = ok(softify(&z, &restrict_to_soft(&f), &SampleSpec::default()))?;
        for n in 0..=4u64 {
            let got = ok(eval_softified(&z, &g, &Element::compact(n)))?;
            ensure(got == *c * ExtValue::nat(n), || format!("λ_soft(compact {n}) = {got} for c = {c}"))?;
        }
    }
    Ok(format!("{checks} duality checks exhaustive; λ_soft(compact n) = c·n on Z"))
}

fn criterion_7() -> Outcome {
    let mut elements = 0;
    for (s, sample) in [
        (z(), SampleSpec::default()),
        (Semigroup::ext_q(), SampleSpec::default()),
        (Semigroup::two_point(), SampleSpec::default()),
        (lsc_q(2), SampleSpec::default()),
        (zz(), SampleSpec::default()),
    ] {
        let family = functional_family(&s, &sample);
        for x in ok(s.enumerate(&sample))? {
            let sx = ok(sigma(&s, &x))?;
            ensure(ok(rank(&s, &sx, &family))? == ok(rank(&s, &x, &family))?, || {
                format!("rank of σ({}) differs on {}", s.literal(&x), s.name())
            })?;
            elements += 1;
        }
    }
    match soft_rank_witness(&Semigroup::ext_nat(), &Element::nat(1), &SampleSpec::default()) {
        Err(CuError::NotRealizable(_)) => {}
        other => return Err(format!("ℕ̄ at x = 1 gave {other:?}")),
    }
    Ok(format!("rank(σx) = rank(x) on {elements} elements; ℕ̄ at 1 not realizable"))
}

fn criterion_8() -> Outcome {
    let sample = SampleSpec::default();
    for s in [Semigroup::two_point(), Semigroup::ext_nat(), Semigroup::ext_q()] {
        let b = ok(dim_bracket(&s, 1, &sample))?;
        ensure(b.first_pass == Some(0), || format!("dim bracket of {} starts at {:?}", s.name(), b.first_pass))?;
    }
    let b = ok(dim_bracket(&z(), 1, &sample))?;
    ensure(b.first_pass.is_some_and(|n| n <= 1), || format!("dim bracket of Z: {:?}", b.first_pass))?;
    let zn = b.first_pass.unwrap();
    // A witness for n colours padded with a zero colour is one for n + 1.
    let coarse = SampleSpec::new(2, 2);
    let mut last = false;
    for n in 0..=2 {
        let pass = ok(dim_at_most(&z(), n, &coarse))?.is_pass();
        ensure(!last || pass, || format!("dim ≤ {n} fails on Z after a smaller n passed"))?;
        last = pass;
    }
    for s in [z(), Semigroup::ext_q(), zz()] {
        let r = ok(verify_dim_sandwich(&s, &sample))?.report;
        all_pass(&s, &[r], false)?;
    }
    Ok(format!("dim 0 on {{0,∞}}, ℕ̄, [0,∞]; Z ≤ {zn}; sandwich on Z, [0,∞], Z⊕Z"))
}

fn criterion_9() -> Outcome {
    let sample = SampleSpec::default();
    let z = z();
    let one = Element::compact(1);
    let family = functional_family(&z, &sample);
    let r = ok(r1_holds(&z, &one, q(0, 1), &family, &sample))?;
    let soft_one = Element::soft(ExtValue::nat(1));
    ensure(r.is_fail() && r.witness() == vec![one.clone(), soft_one.clone()], || {
        format!("(R1) at 0: {:?} {:?}", r.verdict, r.witness())
    })?;
    // By hand: compact 1 and soft 1 have the same rank but compact 1 ≰ soft 1.
    ensure(!ok(z.leq(&one, &soft_one))?, || "compact 1 ≤ soft 1".into())?;
    ensure(ok(rank(&z, &one, &family))? == ok(rank(&z, &soft_one, &family))?, || "ranks differ".into())?;
    let b = ok(rc_bracket(&z, &one, q(1, 16), &family, &sample))?;
    ensure(b.contains_interval(q(0, 1), q(1, 16)), || format!("rc bracket [{}, {:?}]", b.lower, b.upper))?;
    for (s, e) in [
        (z.clone(), one.clone()),
        (Semigroup::ext_q(), Element::nat(1)),
        (zz(), Element::Tuple(vec![one.clone(), one.clone()])),
    ] {
        all_pass(&s, &[ok(verify_rc_soft_equality(&s, &e, q(1, 16), &sample))?.report], false)?;
    }
    let zs = ok(Semigroup::soft_part(z.clone()))?;
    let r = ok(verify_rc_embedding_monotone(&zs, &z, Embedding::SoftPart, &soft_one, q(1, 16), &sample))?.report;
    all_pass(&zs, &[r], false)?;
    Ok("(R1) fails at 0 on (compact 1, soft 1); rc(Z, 1) ∈ [0, 1/16]; equality and monotonicity hold".into())
}

fn criterion_10() -> Outcome {
    let swap = GroupAction::new(2, vec![vec![1, 0]]).map_err(|e| e.to_string())?;
    let mut checks = 0;
    for (ambient, sample) in [
        (Semigroup::lsc_nat(Poset::antichain(&["a", "b"])), SampleSpec::default()),
        (lsc_q(2), SampleSpec::new(2, 2)),
    ] {
        let f = ok(Semigroup::fixed(ambient.clone(), swap.clone()))?;
        checks += all_pass(&f, &ok(fixed_point_audits(&f, &sample))?, true)?;
        for p in [Property::O5, Property::O6, Property::O7] {
            checks += all_pass(&f, &[ok(check_property(&f, p, &sample))?], false)?;
        }
        // Φ by hand: the orbit infimum of (u, v) is (min, min).
        for x in ok(ambient.enumerate(&sample))? {
            let Element::Lsc(vs) = &x else { return Err("not an Lsc element".into()) };
            let m = vs[0].min(vs[1]);
            ensure(ok(f.phi(&x))? == Element::Lsc(vec![m, m]), || format!("Φ({})", ambient.literal(&x)))?;
        }
    }
    Ok(format!("{checks} fixed-point audits and O5–O7 checks pass; Φ is the orbit minimum"))
}

fn criterion_11() -> Outcome {
    let spec = Path::new(env!("CARGO_MANIFEST_DIR")).join("specs/catalog.spec");
    let run = |suite: &str| {
        Command::new(env!("CARGO_BIN_EXE_cu"))
            .args(["verify-paper", spec.to_str().unwrap(), "--suite", suite])
            .env_remove("CU_MAX_TUPLES")
            .output()
            .map_err(|e| e.to_string())
    };
    let start = Instant::now();
    let all = run("all")?;
    let took = start.elapsed();
    ensure(all.status.code() == Some(0), || format!("exit {:?}: {}", all.status.code(), String::from_utf8_lossy(&all.stderr)))?;
    let strip = |bytes: &[u8]| -> Result<Vec<serde_json::Value>, String> {
        let mut v: Vec<serde_json::Value> = serde_json::from_slice(bytes).map_err(|e| e.to_string())?;
        for r in &mut v {
            r.as_object_mut().unwrap().remove("elapsedMs");
        }
        Ok(v)
    };
    let first = strip(&all.stdout)?;
    let again = strip(&run("regularity")?.stdout)?;
    let subset: Vec<&serde_json::Value> =
        first.iter().filter(|r| again.iter().any(|a| a["instance"] == r["instance"] && a["check"] == r["check"])).collect();
    ensure(subset.len() == again.len() && subset.iter().zip(&again).all(|(a, b)| *a == b), || {
        "a rerun of the regularity suite differs".into()
    })?;
    Ok(format!("{} reports, exit 0 in {:.1} s; rerun identical", first.len(), took.as_secs_f64()))
}

/// Title, check and runtime budget in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn main() {
    let criteria: [Criterion; 11] = [
        ("ℕ̄ sup L′_x table", criterion_1, 1),
        ("Lsc softness is ∞χ_U for up-sets U", criterion_2, 30),
        ("σ on Z", criterion_3, 1),
        ("σ suite on Z, [0,∞], LscQ, Z⊕Z", criterion_4, 120),
        ("regularity matrix and implications", criterion_5, 120),
        ("functional duality", criterion_6, 60),
        ("rank realization", criterion_7, 30),
        ("dimension", criterion_8, 180),
        ("radius of comparison", criterion_9, 120),
        ("fixed points", criterion_10, 60),
        ("verify-paper end to end", criterion_11, 300),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(m) if took > Duration::from_secs(*budget) => Err(format!("{m}; took {:.1} s, budget {budget} s", took.as_secs_f64())),
            o => o,
        };
        let (tag, detail) = match &outcome {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        println!("criterion {:>2} {tag} {:>7.2}s  {name}: {detail}", i + 1, took.as_secs_f64());
        failed += outcome.is_err() as usize;
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
