//! Runs the full (heavy) verification suite and prints one line per
//! criterion.

use finite_coxeter::verify::{Options, Suite, Verifier};

#[test]
fn acceptance_criteria() {
    let v = Verifier::new(Options { suite: Suite::Heavy, ..Options::default() });
    let results = v.run_all();
    for r in &results {
        println!("{r}");
        for n in &r.notes {
            println!("       note: {n}");
        }
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    println!("{} of {} criteria passed", results.len() - failed.len(), results.len());
    assert!(failed.is_empty(), "failed: {failed:?}");
}

#[test]
fn corrupted_root_table_is_reported() {
    let v = Verifier::new(Options { corrupt_root_table: true, ..Options::default() });
    let r = v.run(1);
    assert!(!r.passed);
    assert!(r.failures.iter().any(|f| f.starts_with("E6")), "{:?}", r.failures);
}
