//! The Frolicher-type inequality
//! `h_BC(k) + h_A(k) >= h_del(k) + h_delbar(k)` per degree, on the Iwasawa
//! algebra (untwisted). With `theta1 = 0` the operators form a double
//! complex, so `h_delbar >= h_dR`, `h_del >= h_dR`, and
//! `h_BC + h_A >= 2 h_dR` are asserted as well; strictness of the last one
//! quantifies the failure of the del-delbar lemma on this algebra.
//!
//! Run with: `cargo run --example frolicher_inequality`

use twisted_hodge::catalog::builtin_model;
use twisted_hodge::cohomology::analyze;
use twisted_hodge::scalar::GaussianRational;

fn main() {
    let entry = builtin_model("iwasawa").expect("iwasawa is built in");
    let z = vec![GaussianRational::zero(); entry.spec.n];
    let tc = twisted_hodge::build_complex(&entry.doc, z.clone(), z, false).unwrap();
    let report = analyze(&tc, entry.key).unwrap();

    println!("model: iwasawa (untwisted)");
    println!();
    println!(
        "{:>3} {:>4} {:>4} {:>7} {:>4} {:>4}   {:>9} {:>13} {:>7}",
        "k", "dR", "del", "delbar", "BC", "A", "h_BC+h_A", "h_del+h_dbar", "2 h_dR"
    );
    let d = &report.dims;
    let mut strict = Vec::new();
    for k in 0..d.de_rham.len() {
        let lhs = d.bott_chern[k] + d.aeppli[k];
        let rhs = d.del[k] + d.delbar[k];
        assert!(lhs >= rhs);
        if lhs > 2 * d.de_rham[k] {
            strict.push(k);
        }
        println!(
            "{:>3} {:>4} {:>4} {:>7} {:>4} {:>4}   {:>9} {:>13} {:>7}",
            k,
            d.de_rham[k],
            d.del[k],
            d.delbar[k],
            d.bott_chern[k],
            d.aeppli[k],
            lhs,
            rhs,
            2 * d.de_rham[k]
        );
    }
    println!();
    println!("h_BC + h_A exceeds 2 h_dR in degrees {strict:?} — the lemma fails here");
    assert!(!strict.is_empty());
    assert!(!report.verdicts.lemma_holds);

    println!();
    println!("asserted audit records:");
    for r in report.inequalities.iter().filter(|r| r.asserted) {
        println!(
            "  {} at degree {}: {} >= {}  [{}]",
            r.name,
            r.degree,
            r.lhs,
            r.rhs,
            if r.holds { "holds" } else { "VIOLATED" }
        );
        assert!(r.holds);
    }

    // theta1 = 0 also yields the bigraded Dolbeault table.
    if let Some(table) = &report.bigraded_delbar {
        println!();
        println!("bigraded h_delbar(p, q):");
        for (p, row) in table.iter().enumerate() {
            println!("  p = {p}: {row:?}");
        }
    }
}
