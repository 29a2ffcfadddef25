//! The completely-solvable Nakamura algebra with the twist
//! `theta1 = 1/2 mu^1, theta2 = 0`: every twisted Dolbeault group vanishes,
//! yet the twisted del-delbar lemma fails in degree 2, with an explicit
//! witness class that is closed for both twisted operators, exact for their
//! sum, but not del-delbar-exact.
//!
//! Run with: `cargo run --example nakamura_counterexample`

use twisted_hodge::catalog::nakamura_scenario;
use twisted_hodge::cohomology::analyze;

fn main() {
    let sc = nakamura_scenario();
    let tc = twisted_hodge::build_complex(&sc.entry.doc, sc.theta1.clone(), sc.theta2.clone(), false)
        .expect("the catalog scenario validates");
    let report = analyze(&tc, sc.entry.key).expect("analysis succeeds");

    println!("model: {} (n = {})", report.model, tc.spec.n);
    println!(
        "twist: theta1 = [{}], theta2 = [{}]",
        report.twist.theta1.join(", "),
        report.twist.theta2.join(", ")
    );
    println!();
    println!("{:>3} {:>4} {:>4} {:>7} {:>4} {:>4}", "k", "dR", "del", "delbar", "BC", "A");
    for k in 0..report.dims.de_rham.len() {
        println!(
            "{:>3} {:>4} {:>4} {:>7} {:>4} {:>4}",
            k,
            report.dims.de_rham[k],
            report.dims.del[k],
            report.dims.delbar[k],
            report.dims.bott_chern[k],
            report.dims.aeppli[k]
        );
    }
    assert!(report.dims.delbar.iter().all(|&h| h == 0));
    println!();
    println!("every twisted Dolbeault group vanishes, yet:");
    println!("  lemma holds:               {}", report.verdicts.lemma_holds);
    println!(
        "  lemma fails at degrees:    {:?}",
        report.verdicts.lemma_failing_degrees
    );
    println!(
        "  hodge decomposition holds: {}",
        report.verdicts.hodge_decomposition_holds
    );
    assert!(!report.verdicts.lemma_holds);
    assert_eq!(report.verdicts.lemma_failing_degrees[0], sc.failing_degree);

    let w = report.witness.as_ref().expect("a failing lemma yields a witness");
    println!();
    println!("witness (degree {}): {}", w.degree, w.form);
    if let (Some(op), Some(p)) = (&w.primitive_operator, &w.primitive) {
        println!("primitive: {p}  (its image under {op} is the witness)");
    }
    for fact in &w.memberships {
        println!("  re-verified: {fact}");
    }
}
