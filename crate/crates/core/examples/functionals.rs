//! Functionals on `S` and on its soft part: the softification of a
//! functional, both round trips, and rank realization by `σ`.

use std::time::Instant;

use cu_workbench::functionals::{duality_laws, functional_family, rank, soft_rank_witness, Functional};
use cu_workbench::instances::Poset;
use cu_workbench::{Element, ExtValue, SampleSpec, Semigroup};

fn main() -> cu_workbench::Result<()> {
    let z = Semigroup::jiang_su();
    let sample = SampleSpec::default();
    let x = Element::compact(3);
    let f = Functional::Scale(ExtValue::nat(2));
    println!("λ = {f}: λ(compact 3) = {}", f.eval(&x)?);
    let w = soft_rank_witness(&z, &x, &sample)?;
    let family = functional_family(&z, &sample);
    println!("soft rank witness of compact 3: {}", z.literal(&w));
    println!("ranks agree on {} functionals: {}", family.len(), rank(&z, &x, &family)? == rank(&z, &w, &family)?);
    match soft_rank_witness(&Semigroup::ext_nat(), &Element::nat(1), &sample) {
        Err(e) => println!("ext-nat, x = 1: {e}"),
        Ok(w) => println!("ext-nat, x = 1: unexpected witness {w}"),
    }
    // The refined grids behind `L_x` grow quadratically on two-coordinate
    // instances, so those run at a smaller grid.
    let small = SampleSpec::new(2, 2);
    for (s, sample) in [
        (z.clone(), sample),
        (Semigroup::ext_q(), sample),
        (Semigroup::lsc_q(Poset::antichain(&["a", "b"])), small),
        (Semigroup::sum(vec![z.clone(), z.clone()])?, small),
    ] {
        let t = Instant::now();
        let reports = duality_laws(&s, &sample)?;
        println!("{} ({} ms)", s.name(), t.elapsed().as_millis());
        for r in reports {
            let ce: Vec<String> =
                r.counterexample.iter().flatten().map(|b| format!("{}={}", b.variable, s.literal(&b.element))).collect();
            println!("    {:<30} {:?} {:?} {} {}", r.property, r.verdict, r.mode, r.searched, ce.join(" "));
        }
    }
    Ok(())
}
