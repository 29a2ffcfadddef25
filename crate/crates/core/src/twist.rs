//! Twist pairs and the twisted differentials built from them.

use crate::complex::{
    form_add, form_conj, form_scale, form_sum, format_form, Form, FormBasis, LieComplexSpec,
    UntwistedOperators,
};
use crate::error::{EngineError, Result};
use crate::matrix::ExactMatrix;
use crate::operator::{DegreeMap, GradedOperator, Linearity};
use crate::scalar::GaussianRational;

/// A validated pair of invariant Bott-Chern classes `(theta1, theta2)` of
/// bidegree (1,0), with the derived closed 1-form
/// `phi = theta1 + conj(theta1) + theta2 - conj(theta2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistPair {
    pub theta1: Vec<GaussianRational>,
    pub theta2: Vec<GaussianRational>,
}

impl TwistPair {
    pub fn untwisted(n: usize) -> Self {
        Self {
            theta1: vec![GaussianRational::zero(); n],
            theta2: vec![GaussianRational::zero(); n],
        }
    }

    pub fn theta1_form(&self) -> Form {
        coeffs_to_form(&self.theta1, 0)
    }

    pub fn theta2_form(&self) -> Form {
        coeffs_to_form(&self.theta2, 0)
    }

    pub fn phi_form(&self, n: usize) -> Form {
        let t1 = self.theta1_form();
        let t2 = self.theta2_form();
        let mut phi = form_sum(&t1, &form_conj(n, &t1));
        for (m, c) in form_sum(&t2, &form_scale(&form_conj(n, &t2), &GaussianRational::from_int(-1)))
        {
            form_add(&mut phi, m, c);
        }
        phi
    }

    /// The dual twist `(-theta1, -theta2)` of the star-duality statements:
    /// conjugating by the anti-linear star negates both twisting forms, since
    /// `del_tw^* = -star o del_{(-theta1,-theta2)} o star` term by term via
    /// `Lambda_alpha = star o L_alpha o star`. Note `phi` of the dual twist
    /// is exactly `-phi`, matching `d_phi^* = -star o d_{-phi} o star`.
    pub fn star_dual(&self) -> Self {
        Self {
            theta1: self.theta1.iter().map(|c| -c).collect(),
            theta2: self.theta2.iter().map(|c| -c).collect(),
        }
    }

    pub fn is_untwisted(&self) -> bool {
        self.theta1.iter().all(|c| c.is_zero()) && self.theta2.iter().all(|c| c.is_zero())
    }
}

fn coeffs_to_form(coeffs: &[GaussianRational], bit_offset: usize) -> Form {
    let mut f = Form::new();
    for (k, c) in coeffs.iter().enumerate() {
        form_add(&mut f, 1 << (k + bit_offset), c.clone());
    }
    f
}

/// Check membership of both thetas in the invariant `H^{1,0}_BC`: closed for
/// both `del` and `delbar`.
pub fn validate_twist(
    spec: &LieComplexSpec,
    basis: &FormBasis,
    ops: &UntwistedOperators,
    theta1: Vec<GaussianRational>,
    theta2: Vec<GaussianRational>,
) -> Result<TwistPair> {
    let n = spec.n;
    if theta1.len() != n || theta2.len() != n {
        return Err(EngineError::DimensionError(format!(
            "twist coefficient vectors must have length {n}"
        )));
    }
    let pair = TwistPair { theta1, theta2 };
    for (name, theta) in [("theta1", pair.theta1_form()), ("theta2", pair.theta2_form())] {
        let coords = basis.coords(1, &theta);
        for (op_name, op) in [("del", &ops.del), ("delbar", &ops.delbar)] {
            let (_, image) = op.apply(1, &coords);
            if image.iter().any(|c| !c.is_zero()) {
                let residual = basis.form_from_coords(2, &image);
                return Err(EngineError::NotBottChernClosed(format!(
                    "{op_name}({name}) = {}",
                    format_form(n, &residual)
                )));
            }
        }
    }
    // phi is d-closed; follows from the above but re-verified.
    let phi = pair.phi_form(n);
    let (_, dphi) = ops.d.apply(1, &basis.coords(1, &phi));
    assert!(dphi.iter().all(|c| c.is_zero()), "d(phi) != 0");
    Ok(pair)
}

/// Matrix of `x -> alpha /\ x` per degree, for homogeneous `alpha`.
/// The zero form is treated as a degree-0 multiplier; use
/// [`left_multiplication_of_degree`] when the shift must be pinned.
pub fn left_multiplication(basis: &FormBasis, alpha: &Form) -> GradedOperator {
    let r = match basis.degree_of(alpha) {
        Some(r) => r,
        None => {
            assert!(alpha.is_empty(), "left_multiplication needs a homogeneous form");
            0
        }
    };
    left_multiplication_of_degree(basis, alpha, r)
}

/// As [`left_multiplication`], with the degree shift given explicitly so the
/// zero form still produces an operator of the right shape.
pub fn left_multiplication_of_degree(basis: &FormBasis, alpha: &Form, r: usize) -> GradedOperator {
    if let Some(actual) = basis.degree_of(alpha) {
        assert_eq!(actual, r, "alpha is not homogeneous of degree {r}");
    }
    let top = basis.top();
    let dims = basis.dims();
    let r = r as i64;
    let mut op = GradedOperator::zero(top, DegreeMap::Shift(r), Linearity::Linear, &dims);
    for k in 0..=top {
        let t = k as i64 + r;
        if t < 0 || t > top as i64 {
            continue;
        }
        let t = t as usize;
        let mut block = ExactMatrix::zeros(basis.dim(t), basis.dim(k));
        for (col, &mask) in basis.by_degree[k].iter().enumerate() {
            for (am, ac) in alpha {
                if let Some((m, s)) = crate::complex::wedge_masks(*am, mask) {
                    let (deg, row) = basis.position(m);
                    debug_assert_eq!(deg, t);
                    let mut c = ac.clone();
                    if s < 0 {
                        c = -c;
                    }
                    let v = block.get(row, col) + &c;
                    block.set(row, col, v);
                }
            }
        }
        op.blocks[k] = block;
    }
    op
}

/// The assembled twisted complex. All identities are verified exactly on
/// construction.
#[derive(Debug, Clone)]
pub struct TwistedComplex {
    pub spec: LieComplexSpec,
    pub basis: FormBasis,
    pub untwisted: UntwistedOperators,
    pub twist: TwistPair,
    pub del_tw: GradedOperator,
    pub delbar_tw: GradedOperator,
    pub d_phi: GradedOperator,
    pub l_phi: GradedOperator,
}

pub fn assemble_twisted(
    spec: &LieComplexSpec,
    basis: &FormBasis,
    ops: &UntwistedOperators,
    twist: TwistPair,
) -> TwistedComplex {
    let n = spec.n;
    let t1 = twist.theta1_form();
    let t2 = twist.theta2_form();
    let t1bar = form_conj(n, &t1);
    let t2bar = form_conj(n, &t2);
    let phi = twist.phi_form(n);

    let l_t1 = left_multiplication_of_degree(basis, &t1, 1);
    let l_t2 = left_multiplication_of_degree(basis, &t2, 1);
    let l_t1bar = left_multiplication_of_degree(basis, &t1bar, 1);
    let l_t2bar = left_multiplication_of_degree(basis, &t2bar, 1);
    let l_phi = left_multiplication_of_degree(basis, &phi, 1);

    // del_tw = del + L_{theta2} + L_{conj theta1}
    let del_tw = ops.del.add(&l_t2).add(&l_t1bar);
    // delbar_tw = delbar - L_{conj theta2} + L_{theta1}
    let delbar_tw = ops.delbar.sub(&l_t2bar).add(&l_t1);
    let d_phi = del_tw.add(&delbar_tw);

    assert!(del_tw.compose(&del_tw).is_zero(), "del_tw^2 != 0");
    assert!(delbar_tw.compose(&delbar_tw).is_zero(), "delbar_tw^2 != 0");
    assert!(
        del_tw.anticommutator(&delbar_tw).is_zero(),
        "del_tw delbar_tw + delbar_tw del_tw != 0"
    );
    assert!(d_phi.compose(&d_phi).is_zero(), "d_phi^2 != 0");
    assert!(d_phi == ops.d.add(&l_phi), "d_phi != d + L_phi");

    TwistedComplex {
        spec: spec.clone(),
        basis: basis.clone(),
        untwisted: ops.clone(),
        twist,
        del_tw,
        delbar_tw,
        d_phi,
        l_phi,
    }
}

impl TwistedComplex {
    /// `del_tw o delbar_tw`, the degree +2 operator of the BC numerator and
    /// A denominator.
    pub fn del_delbar_tw(&self) -> GradedOperator {
        self.del_tw.compose(&self.delbar_tw)
    }
}

/// Graded Leibniz check over the full monomial basis:
/// `[op_tw, L_alpha] = L_{op alpha}` with the graded commutator sign
/// `op o L_alpha - (-1)^{|alpha|} L_alpha o op` for the degree-1 operators.
/// Returns the first failing monomial, if any.
pub fn leibniz_check(tc: &TwistedComplex) -> Option<Form> {
    let basis = &tc.basis;
    for k in 0..=basis.top() {
        for &mask in &basis.by_degree[k] {
            let mut alpha = Form::new();
            form_add(&mut alpha, mask, GaussianRational::one());
            let l_alpha = left_multiplication(basis, &alpha);
            let sign = if k % 2 == 0 {
                GaussianRational::one()
            } else {
                GaussianRational::from_int(-1)
            };
            for (op, untw) in [
                (&tc.del_tw, &tc.untwisted.del),
                (&tc.delbar_tw, &tc.untwisted.delbar),
            ] {
                let (_, im) = untw.apply(k, &basis.coords(k, &alpha));
                let op_alpha = if k + 1 <= basis.top() {
                    basis.form_from_coords(k + 1, &im)
                } else {
                    Form::new()
                };
                let lhs = op
                    .compose(&l_alpha)
                    .sub(&l_alpha.compose(op).scale(&sign));
                let rhs = left_multiplication_of_degree(basis, &op_alpha, k + 1);
                if !(lhs.is_zero() && rhs.is_zero()) && lhs != rhs {
                    return Some(alpha);
                }
            }
        }
    }
    None
}
