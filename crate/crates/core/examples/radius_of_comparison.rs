//! Radius of comparison on `Z`: the failure of (R1) at `r = 0`, the bisection
//! bracket, and its comparison with the soft part.

use cu_workbench::functionals::functional_family;
use cu_workbench::invariants::{r1_holds, rc_bracket, verify_rc_embedding_monotone, verify_rc_soft_equality, Embedding};
use cu_workbench::value::fmt_rational;
use cu_workbench::{Element, ExtValue, Rational, SampleSpec, Semigroup};

fn main() -> cu_workbench::Result<()> {
    let sample = SampleSpec::default();
    let tol = Rational::new(1, 16);
    let z = Semigroup::jiang_su();
    let one = Element::compact(1);
    let family = functional_family(&z, &sample);

    let r = r1_holds(&z, &one, Rational::from_integer(0), &family, &sample)?;
    let w: Vec<String> = r.witness().iter().map(|x| z.literal(x)).collect();
    println!("(R1) at r = 0: {:?} on ({})", r.verdict, w.join(", "));

    let b = rc_bracket(&z, &one, tol, &family, &sample)?;
    let upper = b.upper.as_ref().map_or("none".into(), fmt_rational);
    println!("rc(Z, compact 1) in [{}, {upper}] after {} tests", fmt_rational(&b.lower), b.tested.len());

    let eq = verify_rc_soft_equality(&z, &one, tol, &sample)?;
    println!("soft equality: {:?}, {}", eq.report.verdict, eq.report.note.unwrap_or_default());

    let zs = Semigroup::soft_part(z.clone())?;
    let unit = Element::soft(ExtValue::nat(1));
    let mono = verify_rc_embedding_monotone(&zs, &z, Embedding::SoftPart, &unit, tol, &sample)?;
    println!("monotone under Z_soft ⊂ Z: {:?}, {}", mono.report.verdict, mono.report.note.unwrap_or_default());
    Ok(())
}
