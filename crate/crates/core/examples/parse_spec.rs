//! Loads a spec file, prints it back in canonical form and lists what it
//! defines. Defaults to the bundled catalog.

use cu_workbench::dsl::{load, parse_spec, print_spec};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/specs/catalog.spec").to_string());
    let text = std::fs::read_to_string(&path).expect("readable spec file");
    let spec = match parse_spec(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{path}: {e}");
            std::process::exit(2);
        }
    };
    print!("{}", print_spec(&spec));
    let cat = load(&text).unwrap_or_else(|e| {
        eprintln!("{path}: {e}");
        std::process::exit(2);
    });
    println!();
    for (name, s) in cat.instances() {
        println!("{name:<4} {}", s.describe());
    }
    for e in cat.elements() {
        let s = cat.instance(&e.instance).expect("resolved");
        println!("{} = {} in {}", e.name, s.literal(&e.element), e.instance);
    }
}
