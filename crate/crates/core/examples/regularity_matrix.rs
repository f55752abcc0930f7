//! Runs every regularity property on a handful of instances and prints the
//! verdict matrix.

use std::time::Instant;

use cu_workbench::instances::Poset;
use cu_workbench::regularity::{check_property, Property};
use cu_workbench::{SampleSpec, Semigroup};

fn main() -> cu_workbench::Result<()> {
    let instances = vec![
        (Semigroup::ext_nat(), SampleSpec::default()),
        (Semigroup::ext_q(), SampleSpec::default()),
        (Semigroup::two_point(), SampleSpec::default()),
        (Semigroup::jiang_su(), SampleSpec::default()),
        (Semigroup::lsc_nat(Poset::chain(&["a", "b"])), SampleSpec::new(2, 1)),
        (Semigroup::lsc_nat(Poset::antichain(&["a", "b"])), SampleSpec::new(2, 1)),
        (Semigroup::lsc_q(Poset::antichain(&["a", "b"])), SampleSpec::new(2, 2)),
    ];
    for (s, sample) in &instances {
        println!("{s}");
        for p in Property::ALL {
            if p == Property::InfSemilattice && !s.capabilities().has_infima {
                continue;
            }
            let t = Instant::now();
            let r = check_property(s, p, sample)?;
            let ce: Vec<String> = r.witness().iter().map(|x| s.literal(x)).collect();
            println!(
                "  {:<14} {:<12} {:>8} tuples {:?} {:>6} ms  {}",
                p.id(),
                format!("{:?}", r.verdict).to_lowercase(),
                r.searched,
                r.mode,
                t.elapsed().as_millis(),
                ce.join(" | ")
            );
        }
    }
    Ok(())
}
