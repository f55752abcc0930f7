//! Strong softness decided from the definition, with witnesses or a
//! functional obstruction, on `Z` and on `Lsc(P, ℕ̄)` over a V-shaped poset.

use cu_workbench::instances::Poset;
use cu_workbench::soft::{indicator_characterization, soft_certificate, sup_lx_prime, SoftCertificate};
use cu_workbench::{Element, ExtValue, SampleSpec, Semigroup};

fn describe(s: &Semigroup, x: &Element, sample: &SampleSpec) -> cu_workbench::Result<()> {
    match soft_certificate(s, x, sample)? {
        SoftCertificate::Soft(ws) => {
            let w = ws.last().expect("at least one witness");
            println!("{:<24} soft: x′ = {}, t = {}", s.literal(x), s.literal(&w.x_prime), s.literal(&w.t));
        }
        SoftCertificate::NotSoft { x_prime, functional } => {
            println!("{:<24} not soft: λ = {functional} has λ(x′) = λ(x) at x′ = {}", s.literal(x), s.literal(&x_prime));
        }
    }
    Ok(())
}

fn main() -> cu_workbench::Result<()> {
    let sample = SampleSpec::default();
    let z = Semigroup::jiang_su();
    for x in [Element::compact(2), Element::soft(ExtValue::ratio(5, 2)), Element::soft(ExtValue::Infinite)] {
        describe(&z, &x, &sample)?;
    }

    let v = Poset::new(vec!["a".into(), "b".into(), "c".into()], &[(0, 2), (1, 2)]).expect("poset");
    let l = Semigroup::lsc_nat(v);
    let inf = ExtValue::Infinite;
    let zero = ExtValue::zero();
    for vs in [vec![zero, zero, inf], vec![inf, zero, inf], vec![inf, zero, zero], vec![zero, zero, ExtValue::nat(1)]] {
        let x = Element::Lsc(vs);
        if l.contains(&x) {
            describe(&l, &x, &sample)?;
        }
    }
    let r = indicator_characterization(&l, &SampleSpec::new(2, 1))?;
    println!("soft ⇔ ∞χ_U for an up-set U on {} elements: {:?}", r.searched, r.verdict);

    let n = Semigroup::ext_nat();
    let row: Vec<String> = (0..=5)
        .map(Element::nat)
        .chain([Element::infinity()])
        .map(|x| format!("{} ↦ {}", n.literal(&x), n.literal(&sup_lx_prime(&n, &x).expect("ext-nat"))))
        .collect();
    println!("sup L′_x on ℕ̄: {}", row.join(", "));
    Ok(())
}
