//! Checks the structural laws and the chain semantics of `≪` on every
//! built-in instance.

use std::time::Instant;

use cu_workbench::instances::{GroupAction, Poset};
use cu_workbench::laws::{core_laws, fixed_point_audits, way_below_matches_chains};
use cu_workbench::{SampleSpec, Semigroup};

fn main() -> cu_workbench::Result<()> {
    let ab = Poset::antichain(&["a", "b"]);
    let swap = GroupAction::new(2, vec![vec![1, 0]]).expect("swap");
    let instances = vec![
        (Semigroup::ext_nat(), SampleSpec::default()),
        (Semigroup::ext_q(), SampleSpec::default()),
        (Semigroup::two_point(), SampleSpec::default()),
        (Semigroup::jiang_su(), SampleSpec::default()),
        (Semigroup::lsc_nat(Poset::chain(&["a", "b"])), SampleSpec::new(2, 1)),
        (Semigroup::lsc_q(ab.clone()), SampleSpec::new(2, 2)),
        (Semigroup::sum(vec![Semigroup::jiang_su(), Semigroup::jiang_su()])?, SampleSpec::new(2, 2)),
        (Semigroup::fixed(Semigroup::lsc_nat(ab), swap)?, SampleSpec::new(2, 1)),
    ];
    for (s, sample) in instances {
        let t = Instant::now();
        let mut reports = core_laws(&s, &sample)?;
        reports.push(way_below_matches_chains(&s, &SampleSpec::new(2, 2).with_max_tuples(20_000))?);
        if s.ambient().is_some() {
            reports.extend(fixed_point_audits(&s, &sample)?);
        }
        println!("{} ({} ms)", s.name(), t.elapsed().as_millis());
        for r in reports {
            let ce: Vec<String> = r.counterexample.iter().flatten().map(|b| format!("{}={}", b.variable, s.literal(&b.element))).collect();
            println!("    {:<26} {:?} {:?} {} {}", r.property, r.verdict, r.mode, r.searched, ce.join(" "));
        }
    }
    Ok(())
}
