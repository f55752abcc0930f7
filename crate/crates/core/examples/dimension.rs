//! Dimension brackets and the soft-part sandwich on small instances.

use std::time::Instant;

use cu_workbench::invariants::{dim_bracket, verify_dim_sandwich};
use cu_workbench::{SampleSpec, Semigroup};

fn main() -> cu_workbench::Result<()> {
    let sample = SampleSpec::default();
    let z = Semigroup::jiang_su();
    let zz = Semigroup::sum(vec![z.clone(), z.clone()])?;
    for s in [Semigroup::two_point(), Semigroup::ext_nat(), Semigroup::ext_q(), z.clone()] {
        let t = Instant::now();
        let b = dim_bracket(&s, 2, &sample)?;
        let first = b.first_pass.map_or("none".to_string(), |n| format!("≤ {n}"));
        println!("{:<10} dim {first} at grid cap {} denom {}  ({} ms)", s.name(), sample.value_cap, sample.denominator_cap, t.elapsed().as_millis());
        for r in &b.reports {
            let ce: Vec<String> = r.counterexample.iter().flatten().map(|c| format!("{}={}", c.variable, s.literal(&c.element))).collect();
            println!("    {:<8} {:?} {:?} searched {}  {}", r.property, r.verdict, r.mode, r.searched, ce.join(" "));
        }
    }
    for s in [Semigroup::ext_q(), z, zz] {
        let t = Instant::now();
        let sw = verify_dim_sandwich(&s, &sample)?;
        println!("{:<14} sandwich {:?}: {}  ({} ms)", s.name(), sw.report.verdict, sw.report.note.unwrap_or_default(), t.elapsed().as_millis());
    }
    Ok(())
}
