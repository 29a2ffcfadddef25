//! Built-in validated models: three complex tori, the completely-solvable
//! Nakamura manifold's invariant complex, and the Iwasawa manifold's as a
//! classical non-Lemma control.

use crate::complex::{
    form_add, parse_and_validate, Form, LieComplexSpec, SpecDocument, StructureEquation,
    StructureTerm, TermKind,
};
use crate::error::{EngineError, Result};
use crate::scalar::GaussianRational;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub description: &'static str,
    pub doc: SpecDocument,
    pub spec: LieComplexSpec,
    /// Canonical twist expressions of interest, as `(theta1, theta2)` pairs
    /// in the CLI twist grammar.
    pub interesting_twists: Vec<(&'static str, &'static str)>,
}

pub const CATALOG_KEYS: [&str; 5] = ["torus1", "torus2", "torus3", "nakamura", "iwasawa"];

fn term(coeff: &str, kind: TermKind, i: usize, j: usize) -> StructureTerm {
    StructureTerm {
        coeff: coeff.to_string(),
        kind,
        i,
        j,
    }
}

fn torus_doc(n: usize) -> SpecDocument {
    SpecDocument {
        name: format!("torus{n}"),
        n,
        d: Vec::new(),
    }
}

/// d mu^2 = -1/2 (mu^1 + mubar^1) /\ mu^2, d mu^3 = 1/2 (mu^1 + mubar^1) /\ mu^3.
fn nakamura_doc() -> SpecDocument {
    SpecDocument {
        name: "nakamura".to_string(),
        n: 3,
        d: vec![
            StructureEquation {
                target: 2,
                terms: vec![
                    term("-1/2", TermKind::Holo, 1, 2),
                    term("1/2", TermKind::Mixed, 2, 1),
                ],
            },
            StructureEquation {
                target: 3,
                terms: vec![
                    term("1/2", TermKind::Holo, 1, 3),
                    term("-1/2", TermKind::Mixed, 3, 1),
                ],
            },
        ],
    }
}

/// d mu^3 = -mu^1 /\ mu^2.
fn iwasawa_doc() -> SpecDocument {
    SpecDocument {
        name: "iwasawa".to_string(),
        n: 3,
        d: vec![StructureEquation {
            target: 3,
            terms: vec![term("-1", TermKind::Holo, 1, 2)],
        }],
    }
}

pub fn builtin_model(key: &str) -> Result<CatalogEntry> {
    let (description, doc, twists): (&'static str, SpecDocument, Vec<(&'static str, &'static str)>) =
        match key {
            "torus1" => (
                "complex torus, n = 1 (abelian, Kahler)",
                torus_doc(1),
                vec![("0", "0"), ("1/2*mu1", "0"), ("mu1", "0"), ("0", "i*mu1")],
            ),
            "torus2" => (
                "complex torus, n = 2 (abelian, Kahler)",
                torus_doc(2),
                vec![("0", "0"), ("mu1+1/2i*mu2", "mu2")],
            ),
            "torus3" => (
                "complex torus, n = 3 (abelian, Kahler)",
                torus_doc(3),
                vec![("0", "0"), ("1/3*mu2", "i*mu3")],
            ),
            "nakamura" => (
                "invariant complex of the completely-solvable Nakamura manifold",
                nakamura_doc(),
                vec![("0", "0"), ("1/2*mu1", "0")],
            ),
            "iwasawa" => (
                "invariant complex of the Iwasawa manifold (non-Lemma control)",
                iwasawa_doc(),
                vec![("0", "0")],
            ),
            other => return Err(EngineError::UnknownModel(other.to_string())),
        };
    let spec = parse_and_validate(&doc)?;
    Ok(CatalogEntry {
        key: match key {
            "torus1" => "torus1",
            "torus2" => "torus2",
            "torus3" => "torus3",
            "nakamura" => "nakamura",
            "iwasawa" => "iwasawa",
            _ => unreachable!(),
        },
        description,
        doc,
        spec,
        interesting_twists: twists,
    })
}

/// The worked counterexample scenario: the Nakamura model with twist
/// `(theta1, theta2) = (1/2 mu^1, 0)` and its expected outcome.
#[derive(Debug, Clone)]
pub struct NakamuraScenario {
    pub entry: CatalogEntry,
    pub theta1: Vec<GaussianRational>,
    pub theta2: Vec<GaussianRational>,
    /// The lemma fails exactly at this total degree.
    pub failing_degree: usize,
    /// `1/2 mu^1 /\ mubar^3 + 1/2 mubar^1 /\ mubar^3`.
    pub expected_witness: Form,
    /// `mubar^3`, whose `delbar_tw`-image is the witness.
    pub expected_primitive: Form,
}

pub fn nakamura_scenario() -> NakamuraScenario {
    let entry = builtin_model("nakamura").expect("nakamura is built in");
    let n = entry.spec.n;
    let mut theta1 = vec![GaussianRational::zero(); n];
    theta1[0] = GaussianRational::from_ratio(1, 2);
    let theta2 = vec![GaussianRational::zero(); n];

    let mu1 = 1u16 << 0;
    let mubar1 = 1u16 << n;
    let mubar3 = 1u16 << (n + 2);
    let half = GaussianRational::from_ratio(1, 2);
    let mut expected_witness = Form::new();
    form_add(&mut expected_witness, mu1 | mubar3, half.clone());
    form_add(&mut expected_witness, mubar1 | mubar3, half);
    let mut expected_primitive = Form::new();
    form_add(&mut expected_primitive, mubar3, GaussianRational::one());

    NakamuraScenario {
        entry,
        theta1,
        theta2,
        failing_degree: 2,
        expected_witness,
        expected_primitive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{assemble_untwisted, build_basis};
    use crate::twist::{assemble_twisted, validate_twist};

    #[test]
    fn every_entry_validates() {
        for key in CATALOG_KEYS {
            let entry = builtin_model(key).unwrap();
            assert_eq!(entry.key, key);
        }
        assert!(matches!(
            builtin_model("heisenberg"),
            Err(EngineError::UnknownModel(_))
        ));
    }

    #[test]
    fn torus_dims_are_binomial() {
        for (key, n) in [("torus1", 1usize), ("torus2", 2), ("torus3", 3)] {
            let entry = builtin_model(key).unwrap();
            let basis = build_basis(&entry.spec, false).unwrap();
            let dims = basis.dims();
            // dim Lambda^k = C(2n, k)
            let mut binom = vec![1u64];
            for _ in 0..2 * n {
                let mut next = vec![1u64];
                for w in binom.windows(2) {
                    next.push(w[0] + w[1]);
                }
                next.push(1);
                binom = next;
            }
            assert_eq!(
                dims.iter().map(|&d| d as u64).collect::<Vec<_>>(),
                binom
            );
        }
    }

    #[test]
    fn scenario_primitive_maps_to_witness() {
        let sc = nakamura_scenario();
        let basis = build_basis(&sc.entry.spec, false).unwrap();
        let ops = assemble_untwisted(&sc.entry.spec, &basis);
        let pair = validate_twist(
            &sc.entry.spec,
            &basis,
            &ops,
            sc.theta1.clone(),
            sc.theta2.clone(),
        )
        .unwrap();
        let tc = assemble_twisted(&sc.entry.spec, &basis, &ops, pair);
        let (_, im) = tc
            .delbar_tw
            .apply(1, &basis.coords(1, &sc.expected_primitive));
        assert_eq!(basis.form_from_coords(2, &im), sc.expected_witness);
    }
}
