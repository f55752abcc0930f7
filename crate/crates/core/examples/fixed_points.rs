//! The swap action on `Lsc({a, b}, ℕ̄)`: its fixed points, the projection Φ,
//! and the sub-semigroup audits.

use cu_workbench::instances::{GroupAction, Poset};
use cu_workbench::laws::fixed_point_audits;
use cu_workbench::regularity::{check_property, Property};
use cu_workbench::{Element, ExtValue, SampleSpec, Semigroup};

fn main() -> cu_workbench::Result<()> {
    let sample = SampleSpec::default();
    let ambient = Semigroup::lsc_nat(Poset::antichain(&["a", "b"]));
    let swap = GroupAction::from_cycles(2, &[vec![0, 1]]).expect("cycle");
    let f = Semigroup::fixed(ambient.clone(), GroupAction::new(2, vec![swap]).expect("action"))?;

    let x = Element::Lsc(vec![ExtValue::nat(3), ExtValue::nat(1)]);
    println!("Φ({}) = {}", ambient.literal(&x), f.literal(&f.phi(&x)?));
    println!("{} fixed grid elements of {}", f.enumerate(&sample)?.len(), ambient.enumerate(&sample)?.len());

    for r in fixed_point_audits(&f, &sample)? {
        println!("    {:<28} {:?} {:?} {}", r.property, r.verdict, r.mode, r.searched);
    }
    for p in [Property::O5, Property::O6, Property::O7] {
        let r = check_property(&f, p, &sample)?;
        println!("    {:<28} {:?} {:?} {}", p.id(), r.verdict, r.mode, r.searched);
    }
    Ok(())
}
