//! The bigraded exterior complex of a Lie algebra with complex structure:
//! monomial bases, wedge products, and the untwisted operators built from
//! declared structure constants on the (1,0) coframe.
//!
//! Generators are tracked by bit position: bits `0..n` are the (1,0) coframe
//! `mu^1..mu^n`, bits `n..2n` their conjugates. A basis monomial is a subset
//! of generators wedged in increasing bit order, which puts all `mu` factors
//! before all `mubar` factors.

use std::collections::BTreeMap;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{EngineError, Result};
use crate::matrix::ExactMatrix;
use crate::operator::{DegreeMap, GradedOperator, Linearity};
use crate::scalar::GaussianRational;

pub type Mask = u16;

/// A complex-valued invariant form: monomial mask -> coefficient.
pub type Form = BTreeMap<Mask, GaussianRational>;

pub fn form_add(acc: &mut Form, mask: Mask, coeff: GaussianRational) {
    if coeff.is_zero() {
        return;
    }
    let entry = acc.entry(mask).or_insert_with(GaussianRational::zero);
    *entry += &coeff;
    if entry.is_zero() {
        acc.remove(&mask);
    }
}

pub fn form_scale(f: &Form, s: &GaussianRational) -> Form {
    let mut out = Form::new();
    for (m, c) in f {
        form_add(&mut out, *m, c * s);
    }
    out
}

pub fn form_sum(a: &Form, b: &Form) -> Form {
    let mut out = a.clone();
    for (m, c) in b {
        form_add(&mut out, *m, c.clone());
    }
    out
}

/// Sign of merging two disjoint increasing generator lists: parity of
/// `#{(x, y) : x in a, y in b, x > y}`.
fn merge_sign(a: Mask, b: Mask) -> i32 {
    let mut inversions = 0u32;
    let mut bb = b;
    while bb != 0 {
        let y = bb.trailing_zeros();
        bb &= bb - 1;
        let above = a >> (y + 1);
        inversions += above.count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Wedge of two basis monomials: `None` when they share a generator.
pub fn wedge_masks(a: Mask, b: Mask) -> Option<(Mask, i32)> {
    if a & b != 0 {
        return None;
    }
    Some((a | b, merge_sign(a, b)))
}

pub fn wedge(a: &Form, b: &Form) -> Form {
    let mut out = Form::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            if let Some((m, s)) = wedge_masks(*ma, *mb) {
                let mut c = ca * cb;
                if s < 0 {
                    c = -c;
                }
                form_add(&mut out, m, c);
            }
        }
    }
    out
}

pub fn form_conj(n: usize, f: &Form) -> Form {
    let mut out = Form::new();
    for (m, c) in f {
        let (cm, s) = conj_mask(n, *m);
        let mut cc = c.conj();
        if s < 0 {
            cc = -cc;
        }
        form_add(&mut out, cm, cc);
    }
    out
}

/// Conjugate of a monomial: swap the mu and mubar parts; reordering the
/// result back to canonical order contributes `(-1)^(p q)`.
pub fn conj_mask(n: usize, m: Mask) -> (Mask, i32) {
    let lo = m & ((1 << n) - 1);
    let hi = m >> n;
    let p = lo.count_ones();
    let q = hi.count_ones();
    let sign = if (p * q) % 2 == 0 { 1 } else { -1 };
    ((hi | (lo << n)), sign)
}

pub fn mask_bidegree(n: usize, m: Mask) -> (usize, usize) {
    let lo = m & ((1 << n) - 1);
    (lo.count_ones() as usize, (m >> n).count_ones() as usize)
}

// ---------------------------------------------------------------------------
// Structure constants and parsing

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermKind {
    /// Coefficient of `mu^i /\ mu^j` (i < j).
    Holo,
    /// Coefficient of `mu^i /\ mubar^j`.
    Mixed,
    /// Coefficient of `mubar^i /\ mubar^j` (i < j); must vanish for
    /// integrability.
    Anti,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructureTerm {
    pub coeff: String,
    pub kind: TermKind,
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructureEquation {
    /// 1-based generator index k of `d mu^k`.
    pub target: usize,
    pub terms: Vec<StructureTerm>,
}

/// The algebra spec document: complex dimension plus the expansion of `d` on
/// the (1,0) coframe.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecDocument {
    pub name: String,
    pub n: usize,
    #[serde(default)]
    pub d: Vec<StructureEquation>,
}

/// A validated Lie algebra with complex structure: `d` of each (1,0)
/// generator as a form, integrability and `d^2 = 0` already checked.
#[derive(Debug, Clone)]
pub struct LieComplexSpec {
    pub name: String,
    pub n: usize,
    /// `d mu^k` for k in 1..=n, as forms over the generator masks.
    pub d_holo_gen: Vec<Form>,
}

impl LieComplexSpec {
    /// `d mubar^k`, by conjugating the structure equations.
    pub fn d_anti_gen(&self, k: usize) -> Form {
        form_conj(self.n, &self.d_holo_gen[k])
    }

    /// `d` of any single generator by bit index.
    pub fn d_generator(&self, bit: usize) -> Form {
        if bit < self.n {
            self.d_holo_gen[bit].clone()
        } else {
            self.d_anti_gen(bit - self.n)
        }
    }

    /// Differential of a basis monomial by the graded Leibniz rule.
    pub fn d_mask(&self, m: Mask) -> Form {
        let mut out = Form::new();
        let mut seen: Mask = 0;
        let mut rest = m;
        let mut sign_neg = false;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let before: Mask = seen;
            let after: Mask = rest;
            let dgen = self.d_generator(bit);
            for (dm, dc) in &dgen {
                if let Some((m1, s1)) = wedge_masks(before, *dm) {
                    if let Some((m2, s2)) = wedge_masks(m1, after) {
                        let mut c = dc.clone();
                        if (s1 * s2 < 0) ^ sign_neg {
                            c = -c;
                        }
                        form_add(&mut out, m2, c);
                    }
                }
            }
            seen |= 1 << bit;
            sign_neg = !sign_neg;
        }
        out
    }

    pub fn d_form(&self, f: &Form) -> Form {
        let mut out = Form::new();
        for (m, c) in f {
            for (dm, dc) in form_scale(&self.d_mask(*m), c) {
                form_add(&mut out, dm, dc);
            }
        }
        out
    }
}

/// Parse and validate an algebra spec document.
pub fn parse_and_validate(doc: &SpecDocument) -> Result<LieComplexSpec> {
    let n = doc.n;
    if n == 0 {
        return Err(EngineError::ParseError("n must be at least 1".into()));
    }
    if n > 15 {
        return Err(EngineError::ParseError("n too large for mask storage".into()));
    }
    let mut d_holo_gen = vec![Form::new(); n];
    for eq in &doc.d {
        if eq.target == 0 || eq.target > n {
            return Err(EngineError::ParseError(format!(
                "target index {} out of range 1..={n}",
                eq.target
            )));
        }
        let acc = &mut d_holo_gen[eq.target - 1];
        for t in &eq.terms {
            let c = GaussianRational::parse(&t.coeff)?;
            if c.is_zero() {
                continue;
            }
            let check = |idx: usize| -> Result<()> {
                if idx == 0 || idx > n {
                    Err(EngineError::ParseError(format!(
                        "generator index {idx} out of range 1..={n}"
                    )))
                } else {
                    Ok(())
                }
            };
            check(t.i)?;
            check(t.j)?;
            let (mask, ordered) = match t.kind {
                TermKind::Holo => {
                    if t.i >= t.j {
                        return Err(EngineError::ParseError(format!(
                            "holo term needs i < j, got ({}, {})",
                            t.i, t.j
                        )));
                    }
                    ((1 << (t.i - 1)) | (1 << (t.j - 1)), true)
                }
                TermKind::Mixed => (((1 << (t.i - 1)) | (1 << (n + t.j - 1))) as Mask, true),
                TermKind::Anti => {
                    return Err(EngineError::NotIntegrable(format!(
                        "d mu^{} has a (0,2) term mubar^{} /\\ mubar^{}",
                        eq.target, t.i, t.j
                    )));
                }
            };
            debug_assert!(ordered);
            form_add(acc, mask, c);
        }
    }
    let spec = LieComplexSpec {
        name: doc.name.clone(),
        n,
        d_holo_gen,
    };
    // d^2 = 0 on every generator encodes the Jacobi identity.
    for bit in 0..2 * n {
        let residual = spec.d_form(&spec.d_generator(bit));
        if !residual.is_empty() {
            let gen = if bit < n {
                format!("mu^{}", bit + 1)
            } else {
                format!("mubar^{}", bit - n + 1)
            };
            return Err(EngineError::NotALieAlgebra(format!(
                "d^2({gen}) = {} != 0",
                format_form(n, &residual)
            )));
        }
    }
    Ok(spec)
}

/// Render a form in `mu`/`mubar` monomial notation.
pub fn format_form(n: usize, f: &Form) -> String {
    if f.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (m, c) in f {
        let mut gens = Vec::new();
        for bit in 0..2 * n {
            if m & (1 << bit) != 0 {
                if bit < n {
                    gens.push(format!("mu{}", bit + 1));
                } else {
                    gens.push(format!("mubar{}", bit - n + 1));
                }
            }
        }
        let mono = if gens.is_empty() {
            "1".to_string()
        } else {
            gens.join("^")
        };
        parts.push(format!("({c})*{mono}"));
    }
    parts.join(" + ")
}

// ---------------------------------------------------------------------------
// Ordered bases

/// Deterministic monomial bases for every bidegree and total degree.
#[derive(Debug, Clone)]
pub struct FormBasis {
    pub n: usize,
    /// Masks per total degree, ordered by (p, q) lexicographically and within
    /// a bidegree by the index sets.
    pub by_degree: Vec<Vec<Mask>>,
    /// mask -> (degree, position within that degree).
    index: HashMap<Mask, (usize, usize)>,
}

impl FormBasis {
    pub fn top(&self) -> usize {
        2 * self.n
    }

    pub fn dims(&self) -> Vec<usize> {
        self.by_degree.iter().map(|v| v.len()).collect()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.by_degree[k].len()
    }

    pub fn position(&self, mask: Mask) -> (usize, usize) {
        self.index[&mask]
    }

    /// Monomials of one bidegree, in basis order; empty when the bidegree is
    /// out of range.
    pub fn bidegree_masks(&self, p: usize, q: usize) -> Vec<Mask> {
        if p > self.n || q > self.n {
            return Vec::new();
        }
        self.by_degree[p + q]
            .iter()
            .copied()
            .filter(|&m| mask_bidegree(self.n, m) == (p, q))
            .collect()
    }

    /// Coordinates of a homogeneous form in the degree-`k` basis; fails if a
    /// monomial has the wrong degree.
    pub fn coords(&self, k: usize, f: &Form) -> Vec<GaussianRational> {
        let mut v = vec![GaussianRational::zero(); self.dim(k)];
        for (m, c) in f {
            let (deg, pos) = self.position(*m);
            assert_eq!(deg, k, "form is not homogeneous of degree {k}");
            v[pos] = c.clone();
        }
        v
    }

    pub fn form_from_coords(&self, k: usize, v: &[GaussianRational]) -> Form {
        let mut f = Form::new();
        for (pos, c) in v.iter().enumerate() {
            form_add(&mut f, self.by_degree[k][pos], c.clone());
        }
        f
    }

    /// Degree of a nonzero homogeneous form; `None` for the zero form or a
    /// mixed-degree form.
    pub fn degree_of(&self, f: &Form) -> Option<usize> {
        let mut deg = None;
        for m in f.keys() {
            let (d, _) = self.position(*m);
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        deg
    }
}

/// Build the basis; `n` outside 1..=5 is rejected unless `allow_large`.
pub fn build_basis(spec: &LieComplexSpec, allow_large: bool) -> Result<FormBasis> {
    let n = spec.n;
    if !(1..=5).contains(&n) && !allow_large {
        return Err(EngineError::SizeGuard(n));
    }
    let mut by_degree: Vec<Vec<Mask>> = vec![Vec::new(); 2 * n + 1];
    for k in 0..=2 * n {
        for p in 0..=k.min(n) {
            let q = k - p;
            if q > n {
                continue;
            }
            let mut masks: Vec<Mask> = Vec::new();
            for lo in subsets(n, p) {
                for hi in subsets(n, q) {
                    masks.push(lo | (hi << n));
                }
            }
            by_degree[k].extend(masks);
        }
    }
    let mut index = HashMap::new();
    for (k, masks) in by_degree.iter().enumerate() {
        for (pos, &m) in masks.iter().enumerate() {
            index.insert(m, (k, pos));
        }
    }
    Ok(FormBasis { n, by_degree, index })
}

/// Size-`k` subsets of `{0..n}` as masks, in lexicographic index-list order.
fn subsets(n: usize, k: usize) -> Vec<Mask> {
    fn rec(n: usize, k: usize, start: usize, cur: Mask, out: &mut Vec<Mask>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for b in start..=(n - k) {
            rec(n, k - 1, b + 1, cur | (1 << b), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(n, k, 0, 0, &mut out);
    }
    out
}

// ---------------------------------------------------------------------------
// Untwisted operators

/// The untwisted operators on the invariant complex.
#[derive(Debug, Clone)]
pub struct UntwistedOperators {
    pub del: GradedOperator,
    pub delbar: GradedOperator,
    pub d: GradedOperator,
    pub conjugation: GradedOperator,
}

#[derive(Debug, Clone, Copy)]
enum Split {
    Del,
    Delbar,
    Full,
}

fn split_generator_image(spec: &LieComplexSpec, bit: usize, split: Split) -> Form {
    let full = spec.d_generator(bit);
    let n = spec.n;
    let (p0, q0) = if bit < n { (1, 0) } else { (0, 1) };
    full.into_iter()
        .filter(|(m, _)| {
            let (p, q) = mask_bidegree(n, *m);
            match split {
                Split::Full => true,
                Split::Del => (p, q) == (p0 + 1, q0),
                Split::Delbar => (p, q) == (p0, q0 + 1),
            }
        })
        .collect()
}

fn leibniz_operator(basis: &FormBasis, gen_images: &[Form]) -> GradedOperator {
    let top = basis.top();
    let dims = basis.dims();
    let mut op = GradedOperator::zero(top, DegreeMap::Shift(1), Linearity::Linear, &dims);
    for k in 0..=top {
        if k + 1 > top {
            continue;
        }
        let mut block = ExactMatrix::zeros(basis.dim(k + 1), basis.dim(k));
        for (col, &mask) in basis.by_degree[k].iter().enumerate() {
            let image = leibniz_on_mask(gen_images, mask);
            for (m, c) in image {
                let (deg, row) = basis.position(m);
                debug_assert_eq!(deg, k + 1);
                block.set(row, col, c);
            }
        }
        op.blocks[k] = block;
    }
    op
}

/// Extend a degree-+1 derivation from generator images by the graded Leibniz
/// rule.
fn leibniz_on_mask(gen_images: &[Form], m: Mask) -> Form {
    let mut out = Form::new();
    let mut rest = m;
    let mut seen: Mask = 0;
    let mut sign_neg = false;
    while rest != 0 {
        let bit = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        for (dm, dc) in &gen_images[bit] {
            if let Some((m1, s1)) = wedge_masks(seen, *dm) {
                if let Some((m2, s2)) = wedge_masks(m1, rest) {
                    let mut c = dc.clone();
                    if (s1 * s2 < 0) ^ sign_neg {
                        c = -c;
                    }
                    form_add(&mut out, m2, c);
                }
            }
        }
        seen |= 1 << bit;
        sign_neg = !sign_neg;
    }
    out
}

/// Build `del`, `delbar`, `d`, and the anti-linear conjugation, verifying the
/// squared-zero and anticommutator identities exactly. Failures here are
/// construction bugs, hence panics rather than errors.
pub fn assemble_untwisted(spec: &LieComplexSpec, basis: &FormBasis) -> UntwistedOperators {
    let nbits = 2 * spec.n;
    let gen_del: Vec<Form> = (0..nbits)
        .map(|b| split_generator_image(spec, b, Split::Del))
        .collect();
    let gen_delbar: Vec<Form> = (0..nbits)
        .map(|b| split_generator_image(spec, b, Split::Delbar))
        .collect();
    let gen_d: Vec<Form> = (0..nbits)
        .map(|b| split_generator_image(spec, b, Split::Full))
        .collect();

    let del = leibniz_operator(basis, &gen_del);
    let delbar = leibniz_operator(basis, &gen_delbar);
    let d = leibniz_operator(basis, &gen_d);

    assert!(del.add(&delbar) == d, "del + delbar != d");
    assert!(d.compose(&d).is_zero(), "d^2 != 0 after assembly");
    assert!(del.compose(&del).is_zero(), "del^2 != 0");
    assert!(delbar.compose(&delbar).is_zero(), "delbar^2 != 0");
    assert!(
        del.anticommutator(&delbar).is_zero(),
        "del delbar + delbar del != 0"
    );

    let top = basis.top();
    let dims = basis.dims();
    let mut conjugation =
        GradedOperator::zero(top, DegreeMap::Shift(0), Linearity::Antilinear, &dims);
    for k in 0..=top {
        for (col, &mask) in basis.by_degree[k].iter().enumerate() {
            let (cm, s) = conj_mask(spec.n, mask);
            let (deg, row) = basis.position(cm);
            debug_assert_eq!(deg, k);
            let c = if s < 0 {
                GaussianRational::from_int(-1)
            } else {
                GaussianRational::one()
            };
            conjugation.blocks[k].set(row, col, c);
        }
    }
    let conj_sq = conjugation.compose(&conjugation);
    assert!(
        conj_sq == GradedOperator::identity(top, &dims),
        "conjugation^2 != id"
    );
    // conjugation intertwines del and delbar
    assert!(
        conjugation.compose(&del) == delbar.compose(&conjugation),
        "conj o del != delbar o conj"
    );

    UntwistedOperators {
        del,
        delbar,
        d,
        conjugation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn torus_doc(n: usize) -> SpecDocument {
        SpecDocument {
            name: format!("torus{n}"),
            n,
            d: Vec::new(),
        }
    }

    fn nakamura_doc() -> SpecDocument {
        // d mu^2 = -1/2 mu^1 /\ mu^2 + 1/2 mu^2 /\ mubar^1
        // d mu^3 = 1/2 mu^1 /\ mu^3 - 1/2 mu^3 /\ mubar^1
        let term = |coeff: &str, kind, i, j| StructureTerm {
            coeff: coeff.to_string(),
            kind,
            i,
            j,
        };
        SpecDocument {
            name: "nakamura".into(),
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

    #[test]
    fn torus_is_valid_and_abelian() {
        let spec = parse_and_validate(&torus_doc(3)).unwrap();
        assert!(spec.d_holo_gen.iter().all(|f| f.is_empty()));
    }

    #[test]
    fn nakamura_validates() {
        let spec = parse_and_validate(&nakamura_doc()).unwrap();
        // d mu^2 matches the symbolic differentiation of the declared coframe:
        // d mu^2 = -1/2 (mu^1 + mubar^1) /\ mu^2.
        let d2 = &spec.d_holo_gen[1];
        assert_eq!(d2.len(), 2);
    }

    #[test]
    fn anti_term_rejected() {
        let doc = SpecDocument {
            name: "bad".into(),
            n: 2,
            d: vec![StructureEquation {
                target: 1,
                terms: vec![StructureTerm {
                    coeff: "1".into(),
                    kind: TermKind::Anti,
                    i: 1,
                    j: 2,
                }],
            }],
        };
        assert!(matches!(
            parse_and_validate(&doc),
            Err(EngineError::NotIntegrable(_))
        ));
    }

    #[test]
    fn non_jacobi_rejected() {
        // d mu^1 = mu^1 /\ mu^2, d mu^2 = 0 gives d^2 mu^1 != 0? Actually
        // d^2 mu^1 = d(mu^1)/\mu^2 - mu^1/\d(mu^2) = mu^1 mu^2 mu^2... = 0.
        // Use d mu^1 = mu^2 /\ mu^3, d mu^2 = mu^1 /\ mu^2 instead.
        let term = |i, j| StructureTerm {
            coeff: "1".into(),
            kind: TermKind::Holo,
            i,
            j,
        };
        let doc = SpecDocument {
            name: "bad".into(),
            n: 3,
            d: vec![
                StructureEquation {
                    target: 1,
                    terms: vec![term(2, 3)],
                },
                StructureEquation {
                    target: 2,
                    terms: vec![term(1, 2)],
                },
            ],
        };
        assert!(matches!(
            parse_and_validate(&doc),
            Err(EngineError::NotALieAlgebra(_))
        ));
    }

    #[test]
    fn basis_dimensions() {
        let spec = parse_and_validate(&torus_doc(3)).unwrap();
        let basis = build_basis(&spec, false).unwrap();
        assert_eq!(basis.dims(), vec![1, 6, 15, 20, 15, 6, 1]);
        assert_eq!(basis.bidegree_masks(1, 1).len(), 9);
        let spec1 = parse_and_validate(&torus_doc(1)).unwrap();
        let basis1 = build_basis(&spec1, false).unwrap();
        assert_eq!(basis1.dims(), vec![1, 2, 1]);
    }

    #[test]
    fn size_guard() {
        let spec = parse_and_validate(&torus_doc(6)).unwrap();
        assert!(matches!(
            build_basis(&spec, false),
            Err(EngineError::SizeGuard(6))
        ));
        assert!(build_basis(&spec, true).is_ok());
    }

    #[test]
    fn torus_operators_vanish() {
        let spec = parse_and_validate(&torus_doc(2)).unwrap();
        let basis = build_basis(&spec, false).unwrap();
        let ops = assemble_untwisted(&spec, &basis);
        assert!(ops.del.is_zero());
        assert!(ops.delbar.is_zero());
        assert!(ops.d.is_zero());
    }

    #[test]
    fn nakamura_generator_images() {
        let spec = parse_and_validate(&nakamura_doc()).unwrap();
        let basis = build_basis(&spec, false).unwrap();
        let ops = assemble_untwisted(&spec, &basis);
        let n = spec.n;
        let mu = |k: usize| -> Mask { 1 << (k - 1) };
        let mubar = |k: usize| -> Mask { 1 << (n + k - 1) };
        let single = |m: Mask| {
            let mut f = Form::new();
            form_add(&mut f, m, GaussianRational::one());
            f
        };
        // del mu^2 = -1/2 mu^1 /\ mu^2
        let (_, v) = ops.del.apply(1, &basis.coords(1, &single(mu(2))));
        let got = basis.form_from_coords(2, &v);
        let mut want = Form::new();
        form_add(&mut want, mu(1) | mu(2), GaussianRational::from_ratio(-1, 2));
        assert_eq!(got, want);
        // delbar mu^2 = -1/2 mubar^1 /\ mu^2 = +1/2 mu^2 /\ mubar^1
        let (_, v) = ops.delbar.apply(1, &basis.coords(1, &single(mu(2))));
        let got = basis.form_from_coords(2, &v);
        let mut want = Form::new();
        form_add(&mut want, mu(2) | mubar(1), GaussianRational::from_ratio(1, 2));
        assert_eq!(got, want);
        // del mu^3 = 1/2 mu^1 /\ mu^3, delbar mu^3 = -1/2 mu^3 /\ mubar^1
        let (_, v) = ops.del.apply(1, &basis.coords(1, &single(mu(3))));
        let got = basis.form_from_coords(2, &v);
        let mut want = Form::new();
        form_add(&mut want, mu(1) | mu(3), GaussianRational::from_ratio(1, 2));
        assert_eq!(got, want);
    }

    #[test]
    fn del_delbar_bidegree_blocks() {
        let spec = parse_and_validate(&nakamura_doc()).unwrap();
        let basis = build_basis(&spec, false).unwrap();
        let ops = assemble_untwisted(&spec, &basis);
        // del maps (p,q) to (p+1,q): every matrix entry crossing bidegrees
        // other than that must vanish.
        for k in 0..basis.top() {
            for (col, &mc) in basis.by_degree[k].iter().enumerate() {
                let (p, q) = mask_bidegree(spec.n, mc);
                for (row, &mr) in basis.by_degree[k + 1].iter().enumerate() {
                    let (rp, rq) = mask_bidegree(spec.n, mr);
                    if (rp, rq) != (p + 1, q) {
                        assert!(ops.del.block(k).get(row, col).is_zero());
                    }
                    if (rp, rq) != (p, q + 1) {
                        assert!(ops.delbar.block(k).get(row, col).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn wedge_sign_brute_force() {
        // Graded commutativity on random monomial pairs: a /\ b =
        // (-1)^{|a||b|} b /\ a, with the inversion-count oracle.
        let masks: Vec<Mask> = (0u16..64).collect();
        for &a in &masks {
            for &b in &masks {
                if a & b != 0 {
                    continue;
                }
                let (m1, s1) = wedge_masks(a, b).unwrap();
                let (m2, s2) = wedge_masks(b, a).unwrap();
                assert_eq!(m1, m2);
                let pq = (a.count_ones() * b.count_ones()) % 2;
                if pq == 0 {
                    assert_eq!(s1, s2);
                } else {
                    assert_eq!(s1, -s2);
                }
            }
        }
    }

    #[test]
    fn wedge_associative_on_forms() {
        let mk = |m: Mask, a: i64| {
            let mut f = Form::new();
            form_add(&mut f, m, GaussianRational::from_int(a));
            f
        };
        let a = form_sum(&mk(0b0001, 2), &mk(0b0110, 3));
        let b = form_sum(&mk(0b1000, 1), &mk(0b0010, -1));
        let c = mk(0b0100, 5);
        assert_eq!(wedge(&wedge(&a, &b), &c), wedge(&a, &wedge(&b, &c)));
    }
}
