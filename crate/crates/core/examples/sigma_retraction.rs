//! The soft retraction `σ` on the divisible instances: its closed form on
//! `Z`, and the law suites for `σ` and the sets `L_x`.

use std::time::Instant;

use cu_workbench::instances::Poset;
use cu_workbench::soft::{lx_laws, sigma, sigma_laws};
use cu_workbench::{Element, Report, SampleSpec, Semigroup};

fn show(s: &Semigroup, reports: &[Report]) {
    for r in reports {
        let ce: Vec<String> =
            r.counterexample.iter().flatten().map(|b| format!("{}={}", b.variable, s.literal(&b.element))).collect();
        println!("    {:<24} {:?} {:?} {} {}", r.property, r.verdict, r.mode, r.searched, ce.join(" "));
    }
}

fn main() -> cu_workbench::Result<()> {
    let z = Semigroup::jiang_su();
    for n in 1..=4 {
        let x = Element::compact(n);
        println!("σ({}) = {}", z.literal(&x), z.literal(&sigma(&z, &x)?));
    }
    let instances = vec![
        (z.clone(), SampleSpec::default()),
        (Semigroup::ext_q(), SampleSpec::default()),
        (Semigroup::lsc_q(Poset::antichain(&["a", "b"])), SampleSpec::default()),
        (Semigroup::sum(vec![z.clone(), z])?, SampleSpec::default()),
    ];
    for (s, sample) in instances {
        let t = Instant::now();
        let laws = sigma_laws(&s, &sample)?;
        println!("{} σ laws ({} ms)", s.name(), t.elapsed().as_millis());
        show(&s, &laws);
        let t = Instant::now();
        let lx_sample = if s.enumerate(&sample)?.len() > 100 { SampleSpec::new(2, 2) } else { sample };
        let laws = lx_laws(&s, &lx_sample)?;
        println!("{} L_x laws at cap {} denom {} ({} ms)", s.name(), lx_sample.value_cap, lx_sample.denominator_cap, t.elapsed().as_millis());
        show(&s, &laws);
    }
    Ok(())
}
