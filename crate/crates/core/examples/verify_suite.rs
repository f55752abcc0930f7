//! Runs one check suite over the bundled catalog and prints a verdict table,
//! the library-side counterpart of `cu verify-paper`.

use cu_workbench::dsl::load;
use cu_workbench::suite::{run_suite, Suite};
use cu_workbench::SampleSpec;

fn main() -> cu_workbench::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("functionals").parse()?;
    let text = include_str!("../specs/catalog.spec");
    let cat = load(text).expect("the bundled catalog resolves");
    for e in run_suite(&cat, suite, &SampleSpec::default())? {
        let r = &e.report;
        println!("{:<4} {:<34} {:<12} {:>6} ms", e.instance, r.property, format!("{:?}", r.verdict), e.elapsed_ms);
    }
    Ok(())
}
