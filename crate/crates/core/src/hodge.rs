//! Exact Hodge theory for the twisted complex: Hermitian metrics, Gram
//! matrices, the anti-linear Hodge star, adjoints by two independent routes,
//! the five Laplacians, harmonic spaces, star-duality, and the Kahler
//! identity suite.

use serde::{Deserialize, Serialize};

use crate::complex::{wedge, wedge_masks, Form, Mask};
use crate::error::{EngineError, Result};
use crate::matrix::{determinant, positive_real, ExactMatrix};
use crate::operator::{DegreeMap, GradedOperator, Linearity};
use crate::scalar::GaussianRational;
use crate::subspace::Subspace;
use crate::twist::{assemble_twisted, left_multiplication_of_degree, TwistedComplex};

/// An invariant Hermitian metric, given by the positive-definite Hermitian
/// matrix `h` with `h[j][k] = g(Z_j, conj(Z_k))` on the (1,0) frame dual to
/// the coframe `mu^1..mu^n`.
#[derive(Debug, Clone)]
pub struct MetricSpec {
    pub n: usize,
    pub h: ExactMatrix,
}

impl MetricSpec {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            h: ExactMatrix::identity(n),
        }
    }

    /// Validate a candidate matrix: square of the right size, Hermitian,
    /// positive-definite (all leading principal minors positive).
    pub fn new(n: usize, h: ExactMatrix) -> Result<Self> {
        if h.rows != n || h.cols != n {
            return Err(EngineError::BadMetric(format!(
                "expected a {n} x {n} matrix, got {} x {}",
                h.rows, h.cols
            )));
        }
        if h != h.hermitian_transpose() {
            return Err(EngineError::BadMetric("matrix is not Hermitian".into()));
        }
        for k in 1..=n {
            let minor = ExactMatrix::from_fn(k, k, |r, c| h.get(r, c).clone());
            let det = determinant(&minor);
            if !positive_real(&det) {
                return Err(EngineError::BadMetric(format!(
                    "leading principal minor of order {k} is {det}, not positive"
                )));
            }
        }
        Ok(Self { n, h })
    }
}

/// Gram matrices, fundamental form, volume form, and the anti-linear Hodge
/// star of a metric on a fixed basis. Every structural identity is verified
/// exactly on construction.
#[derive(Debug, Clone)]
pub struct HodgeStructure {
    pub metric: MetricSpec,
    /// Gram matrix of the monomial basis per total degree; Hermitian
    /// positive-definite.
    pub gram: Vec<ExactMatrix>,
    pub gram_inv: Vec<ExactMatrix>,
    /// Fundamental (1,1)-form `omega = (i/2) sum_jk h[j][k] mu^j /\ mubar^k`.
    pub omega: Form,
    /// `omega^n / n!`; a single top-degree monomial of unit norm.
    pub volume: Form,
    /// Whether `d omega = 0` for the untwisted differential.
    pub kahler: bool,
    /// The anti-linear star, degree `k -> 2n - k`, with `x /\ star(y) =
    /// <x, y> vol` and `star(star(x)) = (-1)^k x`.
    pub star: GradedOperator,
}

fn invert(m: &ExactMatrix) -> ExactMatrix {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let aug = m.hstack(&ExactMatrix::identity(n));
    let (rr, pivots) = aug.rref();
    assert_eq!(pivots, (0..n).collect::<Vec<_>>(), "matrix is singular");
    ExactMatrix::from_fn(n, n, |r, c| rr.get(r, n + c).clone())
}

/// Determinant of the submatrix of `m` with rows `ri` and columns `ci`.
fn subdet(m: &ExactMatrix, ri: &[usize], ci: &[usize]) -> GaussianRational {
    assert_eq!(ri.len(), ci.len());
    if ri.is_empty() {
        return GaussianRational::one();
    }
    let sub = ExactMatrix::from_fn(ri.len(), ci.len(), |r, c| m.get(ri[r], ci[c]).clone());
    determinant(&sub)
}

fn mask_indices(n: usize, m: Mask) -> (Vec<usize>, Vec<usize>) {
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for b in 0..n {
        if m & (1 << b) != 0 {
            lo.push(b);
        }
        if m & (1 << (n + b)) != 0 {
            hi.push(b);
        }
    }
    (lo, hi)
}

/// Exact positive-semidefiniteness of a Hermitian matrix by pivoted LDL^H
/// elimination: a zero diagonal entry forces its whole row to vanish.
pub fn hermitian_psd(m: &ExactMatrix) -> bool {
    assert_eq!(m.rows, m.cols);
    debug_assert!(*m == m.hermitian_transpose());
    let mut a = m.clone();
    let mut active: Vec<usize> = (0..a.rows).collect();
    while !active.is_empty() {
        let Some(&p) = active.iter().find(|&&r| !a.get(r, r).is_zero()) else {
            // All remaining diagonal entries vanish: PSD iff the remaining
            // block is zero.
            return active
                .iter()
                .all(|&r| active.iter().all(|&c| a.get(r, c).is_zero()));
        };
        let pivot = a.get(p, p).clone();
        if !positive_real(&pivot) {
            return false;
        }
        let inv = pivot.inv().expect("pivot nonzero");
        active.retain(|&r| r != p);
        for &r in &active {
            let f = a.get(r, p) * &inv;
            if f.is_zero() {
                continue;
            }
            for &c in &active {
                let w = a.get(r, c) - &(&f * a.get(p, c));
                a.set(r, c, w);
            }
        }
    }
    true
}

/// Build the Hodge structure for a validated metric.
pub fn build_hodge(tc: &TwistedComplex, metric: MetricSpec) -> Result<HodgeStructure> {
    let n = tc.spec.n;
    assert_eq!(metric.n, n, "metric dimension mismatch");
    let basis = &tc.basis;
    let top = basis.top();

    // Gram of the (1,0) coframe: <mu^j, mu^k> = 2 (h^{-1})[k][j], the
    // inverse-transpose rule for the metric induced on covectors.
    let h_inv = invert(&metric.h);
    let m_holo = h_inv.transpose().scale(&GaussianRational::from_int(2));
    let m_anti = m_holo.conj();
    assert!(m_holo == m_holo.hermitian_transpose());

    let gram: Vec<ExactMatrix> = (0..=top)
        .map(|k| {
            let masks = &basis.by_degree[k];
            ExactMatrix::from_fn(masks.len(), masks.len(), |r, c| {
                let (ri, rj) = mask_indices(n, masks[r]);
                let (ci, cj) = mask_indices(n, masks[c]);
                if ri.len() != ci.len() {
                    return GaussianRational::zero();
                }
                &subdet(&m_holo, &ri, &ci) * &subdet(&m_anti, &rj, &cj)
            })
        })
        .collect();
    for g in &gram {
        assert!(*g == g.hermitian_transpose(), "Gram matrix not Hermitian");
        assert!(hermitian_psd(g), "Gram matrix not positive semidefinite");
        assert_eq!(invert(g).rows, g.rows); // invertibility: positive definite
    }
    let gram_inv: Vec<ExactMatrix> = gram.iter().map(invert).collect();

    // omega = (i/2) sum h[j][k] mu^j /\ mubar^k
    let half_i = GaussianRational::from_ratios(0, 1, 1, 2);
    let mut omega = Form::new();
    for j in 0..n {
        for k in 0..n {
            let c = &half_i * metric.h.get(j, k);
            crate::complex::form_add(&mut omega, (1 << j) | (1 << (n + k)), c);
        }
    }
    let kahler = {
        let coords = basis.coords(2, &omega);
        let (_, im) = tc.untwisted.d.apply(2, &coords);
        im.iter().all(|c| c.is_zero())
    };

    // volume = omega^n / n!
    let mut volume = Form::new();
    crate::complex::form_add(&mut volume, 0, GaussianRational::one());
    let mut factorial: i64 = 1;
    for k in 1..=n as i64 {
        volume = wedge(&volume, &omega);
        factorial *= k;
    }
    volume = crate::complex::form_scale(
        &volume,
        &GaussianRational::from_ratio(1, factorial),
    );
    let top_mask: Mask = (1 << (2 * n)) - 1;
    assert_eq!(volume.len(), 1, "volume form is not a single monomial");
    let vol_coeff = volume.get(&top_mask).expect("volume at top degree").clone();
    // <vol, vol> = 1
    let g_top = &gram[top];
    let norm = &(&vol_coeff * &vol_coeff.conj()) * g_top.get(0, 0);
    assert!(norm.is_one(), "volume form does not have unit norm");

    // Hodge star per degree: solve W_k S_k = vol_coeff * G_k where
    // e_a /\ e_m = W_k[a][m] * top_monomial.
    let dims = basis.dims();
    let mut star = GradedOperator::zero(top, DegreeMap::Reflect(0), Linearity::Antilinear, &dims);
    for k in 0..=top {
        let src = &basis.by_degree[k];
        let dst = &basis.by_degree[top - k];
        let w = ExactMatrix::from_fn(src.len(), dst.len(), |a, m| {
            match wedge_masks(src[a], dst[m]) {
                Some((full, s)) if full == top_mask => {
                    if s < 0 {
                        GaussianRational::from_int(-1)
                    } else {
                        GaussianRational::one()
                    }
                }
                _ => GaussianRational::zero(),
            }
        });
        star.blocks[k] = invert(&w).mul(&gram[k].scale(&vol_coeff));
    }
    // star(star(x)) = (-1)^k x, exactly.
    let star_sq = star.compose(&star);
    assert_eq!(star_sq.dmap, DegreeMap::Shift(0));
    for k in 0..=top {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let want = ExactMatrix::identity(dims[k]).scale(&GaussianRational::from_int(sign));
        assert!(star_sq.blocks[k] == want, "star^2 != (-1)^k at degree {k}");
    }
    // star is an isometry up to conjugation: <star x, star y> = <y, x> for
    // all x, y, i.e. S_k^T G_{2n-k} conj(S_k) = G_k^T as matrices.
    for k in 0..=top {
        let s = &star.blocks[k];
        let lhs = s.transpose().mul(&gram[top - k]).mul(&s.conj());
        assert!(
            lhs == gram[k].transpose(),
            "<star x, star y> != <y, x> at degree {k}"
        );
    }

    Ok(HodgeStructure {
        metric,
        gram,
        gram_inv,
        omega,
        volume,
        kahler,
        star,
    })
}

impl HodgeStructure {
    /// Gram-route adjoint of a linear shift operator. With the inner product
    /// `<x, y> = x^T G conj(y)` (linear in the first slot, as forced by
    /// `x /\ star(y) = <x, y> vol`), the adjoint of `A_k : degree k -> l` is
    /// `(A^*)_l = conj(G_k)^{-1} A_k^H conj(G_l)`.
    pub fn adjoint(&self, op: &GradedOperator) -> GradedOperator {
        assert_eq!(op.linearity, Linearity::Linear);
        let DegreeMap::Shift(s) = op.dmap else {
            panic!("Gram adjoint is only defined for shift operators");
        };
        let top = op.top;
        let dims: Vec<usize> = self.gram.iter().map(|g| g.rows).collect();
        let mut adj = GradedOperator::zero(top, DegreeMap::Shift(-s), Linearity::Linear, &dims);
        for k in 0..=top as i64 {
            let l = k + s;
            if !(0..=top as i64).contains(&l) {
                continue;
            }
            let (k, l) = (k as usize, l as usize);
            adj.blocks[l] = self.gram_inv[k]
                .conj()
                .mul(&op.blocks[k].hermitian_transpose())
                .mul(&self.gram[l].conj());
        }
        adj
    }

    /// Inner product of two homogeneous coordinate vectors at degree `k`.
    pub fn inner(&self, k: usize, x: &[GaussianRational], y: &[GaussianRational]) -> GaussianRational {
        let gy: Vec<GaussianRational> = self.gram[k]
            .apply(&y.iter().map(|c| c.conj()).collect::<Vec<_>>());
        x.iter()
            .zip(&gy)
            .fold(GaussianRational::zero(), |acc, (a, b)| &acc + &(a * b))
    }
}

/// The assembled Hodge theory of a twisted complex with a chosen metric:
/// adjoints verified by two routes, and the star-dual complex at hand.
#[derive(Debug, Clone)]
pub struct HodgeTheory {
    pub hs: HodgeStructure,
    /// The complex with the dual twist `(-theta1, -theta2)`.
    pub dual: TwistedComplex,
    pub del_star: GradedOperator,
    pub delbar_star: GradedOperator,
    pub d_phi_star: GradedOperator,
    pub lambda_phi: GradedOperator,
    /// Adjoint of wedging with the fundamental form `omega` (any metric; the
    /// Kahler identities additionally require `d omega = 0`).
    pub lambda_omega: GradedOperator,
}

/// Build adjoints by the Gram route and cross-check each against the star
/// route (`op^* = -star o op_dual o star`, `Lambda_phi = star o L_phi o
/// star`). Any disagreement is an `AdjointMismatch`.
pub fn hodge_theory(tc: &TwistedComplex, metric: MetricSpec) -> Result<HodgeTheory> {
    let hs = build_hodge(tc, metric)?;
    let dual = assemble_twisted(
        &tc.spec,
        &tc.basis,
        &tc.untwisted,
        tc.twist.star_dual(),
    );

    let minus_one = GaussianRational::from_int(-1);
    let star_route = |dual_op: &GradedOperator| -> GradedOperator {
        hs.star.compose(dual_op).compose(&hs.star).scale(&minus_one)
    };

    let check = |name: &str, op: &GradedOperator, dual_op: &GradedOperator| -> Result<GradedOperator> {
        let gram_adj = hs.adjoint(op);
        let star_adj = star_route(dual_op);
        if gram_adj != star_adj {
            return Err(EngineError::AdjointMismatch(name.to_string()));
        }
        Ok(gram_adj)
    };

    let del_star = check("del_tw", &tc.del_tw, &dual.del_tw)?;
    let delbar_star = check("delbar_tw", &tc.delbar_tw, &dual.delbar_tw)?;
    let d_phi_star = check("d_phi", &tc.d_phi, &dual.d_phi)?;

    // Lambda_phi = star o L_phi o star, no sign, since phi is a 1-form on an
    // even-real-dimensional space.
    let lambda_gram = hs.adjoint(&tc.l_phi);
    let lambda_star = hs.star.compose(&tc.l_phi).compose(&hs.star);
    if lambda_gram != lambda_star {
        return Err(EngineError::AdjointMismatch("L_phi".to_string()));
    }

    // Consistency: d_phi^* = d^* + Lambda_phi.
    let d_star = hs.adjoint(&tc.untwisted.d);
    if d_phi_star != d_star.add(&lambda_gram) {
        return Err(EngineError::AdjointMismatch("d_phi vs d + L_phi".to_string()));
    }

    let l_omega = left_multiplication_of_degree(&tc.basis, &hs.omega, 2);
    let lambda_omega = hs.adjoint(&l_omega);

    Ok(HodgeTheory {
        hs,
        dual,
        del_star,
        delbar_star,
        d_phi_star,
        lambda_phi: lambda_gram,
        lambda_omega,
    })
}

/// The five Laplacians, all degree-preserving, self-adjoint, and positive
/// semidefinite; those properties are asserted exactly on construction.
#[derive(Debug, Clone)]
pub struct Laplacians {
    pub d_phi: GradedOperator,
    pub del: GradedOperator,
    pub delbar: GradedOperator,
    pub bott_chern: GradedOperator,
    pub aeppli: GradedOperator,
}

pub fn laplacians(tc: &TwistedComplex, ht: &HodgeTheory) -> Laplacians {
    let hs = &ht.hs;
    let lap_d_phi = tc.d_phi.anticommutator(&ht.d_phi_star);
    let lap_del = tc.del_tw.anticommutator(&ht.del_star);
    let lap_delbar = tc.delbar_tw.anticommutator(&ht.delbar_star);

    let dd = tc.del_delbar_tw();
    let dd_star = hs.adjoint(&dd);
    let p = ht.delbar_star.compose(&tc.del_tw);
    let p_star = hs.adjoint(&p);
    let bott_chern = dd
        .compose(&dd_star)
        .add(&dd_star.compose(&dd))
        .add(&p.compose(&p_star))
        .add(&p_star.compose(&p))
        .add(&ht.delbar_star.compose(&tc.delbar_tw))
        .add(&ht.del_star.compose(&tc.del_tw));

    let q = tc.delbar_tw.compose(&ht.del_star);
    let q_star = hs.adjoint(&q);
    let aeppli = tc
        .del_tw
        .compose(&ht.del_star)
        .add(&tc.delbar_tw.compose(&ht.delbar_star))
        .add(&dd_star.compose(&dd))
        .add(&dd.compose(&dd_star))
        .add(&q_star.compose(&q))
        .add(&q.compose(&q_star));

    let all = Laplacians {
        d_phi: lap_d_phi,
        del: lap_del,
        delbar: lap_delbar,
        bott_chern,
        aeppli,
    };
    for (name, lap) in all.named() {
        assert_eq!(lap.dmap, DegreeMap::Shift(0), "{name} does not preserve degree");
        for k in 0..=lap.top {
            // Self-adjointness and positivity of Delta w.r.t. `<x, y> =
            // x^T G conj(y)` are Hermiticity and PSD of `conj(G) Delta`.
            let glap = hs.gram[k].conj().mul(&lap.blocks[k]);
            assert!(
                glap == glap.hermitian_transpose(),
                "{name} is not self-adjoint at degree {k}"
            );
            assert!(
                hermitian_psd(&glap),
                "{name} is not positive semidefinite at degree {k}"
            );
        }
    }
    all
}

impl Laplacians {
    pub fn named(&self) -> [(&'static str, &GradedOperator); 5] {
        [
            ("Laplacian of d_phi", &self.d_phi),
            ("Laplacian of del_tw", &self.del),
            ("Laplacian of delbar_tw", &self.delbar),
            ("Bott-Chern Laplacian", &self.bott_chern),
            ("Aeppli Laplacian", &self.aeppli),
        ]
    }
}

/// Harmonic spaces: kernels of the Laplacians per degree, with their
/// dimensions checked against the corresponding cohomology dimensions.
#[derive(Debug, Clone)]
pub struct HarmonicSpaces {
    /// Kernel subspaces, indexed like [`crate::cohomology::THEORIES`]:
    /// de Rham, del, delbar, Bott-Chern, Aeppli.
    pub kernels: Vec<Vec<Subspace>>,
}

impl HarmonicSpaces {
    pub fn dims(&self, theory_index: usize) -> Vec<usize> {
        self.kernels[theory_index].iter().map(|s| s.dim()).collect()
    }
}

pub fn harmonic_spaces(
    laps: &Laplacians,
    spaces: &crate::cohomology::CohomologySpaces,
) -> Result<HarmonicSpaces> {
    use crate::cohomology::THEORIES;
    let ordered = [
        &laps.d_phi,
        &laps.del,
        &laps.delbar,
        &laps.bott_chern,
        &laps.aeppli,
    ];
    let mut kernels = Vec::with_capacity(5);
    for (lap, &theory) in ordered.iter().zip(THEORIES.iter()) {
        let mut per_degree = Vec::with_capacity(lap.top + 1);
        for k in 0..=lap.top {
            let ker = Subspace::from_columns(&lap.blocks[k].nullspace());
            let h = spaces.pair(theory, k).dim();
            if ker.dim() != h {
                return Err(EngineError::HodgeIsoViolation(format!(
                    "{} at degree {k}: harmonic dimension {} vs cohomology {h}",
                    theory.key(),
                    ker.dim()
                )));
            }
            // Harmonic forms are cocycles of their theory.
            let z = &spaces.pair(theory, k).cocycles;
            assert!(
                z.contains(&ker),
                "harmonic space not contained in cocycles at degree {k}"
            );
            per_degree.push(ker);
        }
        kernels.push(per_degree);
    }
    Ok(HarmonicSpaces { kernels })
}

/// One star-duality check result.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DualityCheck {
    pub name: String,
    pub holds: bool,
}

/// The four Laplacian intertwinings `star o Delta_{X,(t1,t2)} =
/// Delta_{X',(-t1,-t2)} o star` plus the induced dimension dualities
/// `h_X(k; t1, t2) = h_{X'}(2n - k; -t1, -t2)`. Failure of any is a
/// `DualityViolation`.
pub fn star_duality_check(
    tc: &TwistedComplex,
    ht: &HodgeTheory,
    laps: &Laplacians,
) -> Result<Vec<DualityCheck>> {
    let dual_ht = hodge_theory(&ht.dual, ht.hs.metric.clone())?;
    let dual_laps = laplacians(&ht.dual, &dual_ht);
    let star = &ht.hs.star;

    let mut out = Vec::new();
    let pairs = [
        ("star Delta_{d_phi} = Delta_{d_-phi} star", &laps.d_phi, &dual_laps.d_phi),
        ("star Delta_del = Delta_del^dual star", &laps.del, &dual_laps.del),
        (
            "star Delta_delbar = Delta_delbar^dual star",
            &laps.delbar,
            &dual_laps.delbar,
        ),
        (
            "star Delta_BC = Delta_A^dual star",
            &laps.bott_chern,
            &dual_laps.aeppli,
        ),
    ];
    for (name, lap, dual_lap) in pairs {
        let lhs = star.compose(lap);
        let rhs = dual_lap.compose(star);
        if lhs != rhs {
            return Err(EngineError::DualityViolation(name.to_string()));
        }
        out.push(DualityCheck {
            name: name.to_string(),
            holds: true,
        });
    }

    // Dimension dualities, metric-independent, via the cohomology engine.
    let spaces = crate::cohomology::five_cohomologies(tc);
    let dual_spaces = crate::cohomology::five_cohomologies(&ht.dual);
    use crate::cohomology::Theory;
    let top = tc.basis.top();
    let dual_pairs = [
        ("h_dR(k) = h_dR^dual(2n-k)", Theory::DeRham, Theory::DeRham),
        ("h_del(k) = h_del^dual(2n-k)", Theory::Del, Theory::Del),
        ("h_delbar(k) = h_delbar^dual(2n-k)", Theory::Delbar, Theory::Delbar),
        ("h_BC(k) = h_A^dual(2n-k)", Theory::BottChern, Theory::Aeppli),
        ("h_A(k) = h_BC^dual(2n-k)", Theory::Aeppli, Theory::BottChern),
    ];
    for (name, t, td) in dual_pairs {
        let a = spaces.dims(t);
        let b = dual_spaces.dims(td);
        for k in 0..=top {
            if a[k] != b[top - k] {
                return Err(EngineError::DualityViolation(format!(
                    "{name} fails at k = {k}: {} vs {}",
                    a[k],
                    b[top - k]
                )));
            }
        }
        out.push(DualityCheck {
            name: name.to_string(),
            holds: true,
        });
    }
    Ok(out)
}

/// One Kahler-identity check result.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct KahlerCheck {
    pub name: String,
    pub holds: bool,
}

/// The twisted Kahler identity suite. Refuses non-Kahler metrics with
/// `NotKahler`; any identity failure on a Kahler metric is a
/// `KahlerIdentityViolation`.
pub fn kahler_identity_suite(
    tc: &TwistedComplex,
    ht: &HodgeTheory,
    laps: &Laplacians,
) -> Result<Vec<KahlerCheck>> {
    if !ht.hs.kahler {
        return Err(EngineError::NotKahler);
    }
    let lambda_omega = &ht.lambda_omega;
    let i = GaussianRational::i();
    let minus_i = -&i;

    let mut out = Vec::new();
    let mut check = |name: &str, ok: bool| -> Result<()> {
        if !ok {
            return Err(EngineError::KahlerIdentityViolation(name.to_string()));
        }
        out.push(KahlerCheck {
            name: name.to_string(),
            holds: true,
        });
        Ok(())
    };

    check(
        "[Lambda_omega, del_tw] = i delbar_tw^*",
        lambda_omega.commutator(&tc.del_tw) == ht.delbar_star.scale(&i),
    )?;
    check(
        "[Lambda_omega, delbar_tw] = -i del_tw^*",
        lambda_omega.commutator(&tc.delbar_tw) == ht.del_star.scale(&minus_i),
    )?;
    check(
        "[del_tw, delbar_tw^*] = 0",
        tc.del_tw.anticommutator(&ht.delbar_star).is_zero(),
    )?;
    check(
        "[delbar_tw, del_tw^*] = 0",
        tc.delbar_tw.anticommutator(&ht.del_star).is_zero(),
    )?;
    let two = GaussianRational::from_int(2);
    check(
        "Delta_{d_phi} = 2 Delta_del",
        laps.d_phi == laps.del.scale(&two),
    )?;
    check(
        "Delta_{d_phi} = 2 Delta_delbar",
        laps.d_phi == laps.delbar.scale(&two),
    )?;
    let delbar_sq = laps.delbar.compose(&laps.delbar);
    check(
        "Delta_BC = Delta_delbar^2 + del^* del + delbar^* delbar",
        laps.bott_chern
            == delbar_sq
                .add(&ht.del_star.compose(&tc.del_tw))
                .add(&ht.delbar_star.compose(&tc.delbar_tw)),
    )?;
    check(
        "Delta_A = Delta_delbar^2 + del del^* + delbar delbar^*",
        laps.aeppli
            == delbar_sq
                .add(&tc.del_tw.compose(&ht.del_star))
                .add(&tc.delbar_tw.compose(&ht.delbar_star)),
    )?;
    Ok(out)
}
