//! Subspaces of Q(i)^n in canonical column-reduced echelon form, and the
//! subspace calculus (sum, intersection, containment, induced quotient maps)
//! every cohomology in the engine is built from.

use crate::error::{EngineError, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::GaussianRational;

/// A linear subspace, stored via a canonical basis: the columns are the
/// transposed reduced row echelon form of the generators, so two subspaces
/// are equal as sets iff their `basis` matrices are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: ExactMatrix,
}

impl Subspace {
    /// Span of the columns of `gens`.
    pub fn from_columns(gens: &ExactMatrix) -> Self {
        let (rr, pivots) = gens.transpose().rref();
        let cols: Vec<Vec<GaussianRational>> = (0..pivots.len())
            .map(|r| (0..rr.cols).map(|c| rr.get(r, c).clone()).collect())
            .collect();
        Self {
            ambient_dim: gens.rows,
            basis: ExactMatrix::from_columns(gens.rows, &cols),
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::from_columns(&ExactMatrix::zeros(ambient_dim, 0))
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_columns(&ExactMatrix::identity(ambient_dim))
    }

    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    pub fn contains_vector(&self, v: &[GaussianRational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        self.basis.solve(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let stacked = self.basis.hstack(&other.basis);
        stacked.rank() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_columns(&self.basis.hstack(&other.basis)))
    }

    /// Intersection via the nullspace of `[U | V]`: a relation
    /// `U a + V b = 0` identifies the common vector `U a = -V b`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked = self.basis.hstack(&other.basis.neg());
        let ns = stacked.nullspace();
        let mut cols = Vec::with_capacity(ns.cols);
        for c in 0..ns.cols {
            let rel = ns.column(c);
            let a = &rel[..self.dim()];
            cols.push(self.basis.apply(a));
        }
        Ok(Subspace::from_columns(&ExactMatrix::from_columns(
            self.ambient_dim,
            &cols,
        )))
    }

    /// `{ x : map(x) in self }` for a linear map given by its matrix.
    pub fn preimage(&self, map: &ExactMatrix) -> Subspace {
        assert_eq!(map.rows, self.ambient_dim);
        // Rows annihilating the subspace: nullspace of basis^T, transposed.
        let ann = self.basis.transpose().nullspace().transpose();
        if ann.rows == 0 {
            return Subspace::full(map.cols);
        }
        Subspace::from_columns(&ann.mul(map).nullspace())
    }

    /// Image of this subspace under a linear map.
    pub fn image(&self, map: &ExactMatrix) -> Subspace {
        assert_eq!(map.cols, self.ambient_dim);
        Subspace::from_columns(&map.mul(&self.basis))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(EngineError::DimensionError(format!(
                "ambient {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }
}

/// Verdict on a map between quotients `Z1/B1 -> Z2/B2` induced by a carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientMapVerdict {
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl QuotientMapVerdict {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Rank / injectivity / surjectivity of the map `Z1/B1 -> Z2/B2` induced by
/// `carrier`. Preconditions `B1 <= Z1`, `B2 <= Z2`, `carrier(Z1) <= Z2`,
/// `carrier(B1) <= B2` are verified and failure reports `NotAChainMap`.
pub fn induced_quotient_map(
    z1: &Subspace,
    b1: &Subspace,
    z2: &Subspace,
    b2: &Subspace,
    carrier: &ExactMatrix,
) -> Result<QuotientMapVerdict> {
    let chain = |msg: &str| EngineError::NotAChainMap(msg.to_string());
    if !z1.contains(b1) {
        return Err(chain("B1 not contained in Z1"));
    }
    if !z2.contains(b2) {
        return Err(chain("B2 not contained in Z2"));
    }
    let image_z1 = z1.image(carrier);
    if !z2.contains(&image_z1) {
        return Err(chain("carrier(Z1) not contained in Z2"));
    }
    if !b2.contains(&b1.image(carrier)) {
        return Err(chain("carrier(B1) not contained in B2"));
    }

    let target_span = image_z1.sum(b2)?;
    let rank = target_span.dim() - b2.dim();

    // Injective iff Z1 /\ carrier^{-1}(B2) <= B1.
    let pre = b2.preimage(carrier);
    let killed = z1.intersection(&pre)?;
    let injective = b1.contains(&killed);

    let surjective = target_span.contains(z2);

    Ok(QuotientMapVerdict {
        rank,
        injective,
        surjective,
    })
}
