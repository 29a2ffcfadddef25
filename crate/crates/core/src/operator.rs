//! Graded operators on a complex graded by total degree 0..=2n, with
//! first-class anti-linearity. An anti-linear operator stores the matrix `M`
//! of its action on the (real) monomial basis and acts on coordinates by
//! `v -> M * conj(v)`; composition therefore conjugates the inner matrix.

use crate::matrix::ExactMatrix;
use crate::scalar::GaussianRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Linearity {
    Linear,
    Antilinear,
}

impl Linearity {
    /// Parity composition: anti o anti = linear.
    pub fn compose(self, inner: Linearity) -> Linearity {
        if self == inner {
            Linearity::Linear
        } else {
            Linearity::Antilinear
        }
    }
}

/// How source degree maps to target degree. `Shift(s)` sends `k -> k + s`;
/// `Reflect(c)` sends `k -> 2n - k + c` (the Hodge star is `Reflect(0)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMap {
    Shift(i64),
    Reflect(i64),
}

impl DegreeMap {
    pub fn target(self, k: i64, top: i64) -> i64 {
        match self {
            DegreeMap::Shift(s) => k + s,
            DegreeMap::Reflect(c) => top - k + c,
        }
    }

    /// Degree map of `self o inner`.
    pub fn compose(self, inner: DegreeMap) -> DegreeMap {
        match (self, inner) {
            (DegreeMap::Shift(a), DegreeMap::Shift(b)) => DegreeMap::Shift(a + b),
            (DegreeMap::Shift(a), DegreeMap::Reflect(c)) => DegreeMap::Reflect(c + a),
            (DegreeMap::Reflect(c), DegreeMap::Shift(b)) => DegreeMap::Reflect(c - b),
            (DegreeMap::Reflect(c), DegreeMap::Reflect(e)) => DegreeMap::Shift(c - e),
        }
    }
}

/// A degree-respecting operator stored as one matrix block per source degree.
/// Blocks mapping outside 0..=2n have zero target rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedOperator {
    /// Top degree of the complex (2n).
    pub top: usize,
    pub dmap: DegreeMap,
    pub linearity: Linearity,
    /// Block for each source degree 0..=top.
    pub blocks: Vec<ExactMatrix>,
}

impl GradedOperator {
    pub fn zero(top: usize, dmap: DegreeMap, linearity: Linearity, dims: &[usize]) -> Self {
        assert_eq!(dims.len(), top + 1);
        let blocks = (0..=top as i64)
            .map(|k| {
                let t = dmap.target(k, top as i64);
                let trows = if (0..=top as i64).contains(&t) {
                    dims[t as usize]
                } else {
                    0
                };
                ExactMatrix::zeros(trows, dims[k as usize])
            })
            .collect();
        Self {
            top,
            dmap,
            linearity,
            blocks,
        }
    }

    pub fn identity(top: usize, dims: &[usize]) -> Self {
        let blocks = dims.iter().map(|&d| ExactMatrix::identity(d)).collect();
        Self {
            top,
            dmap: DegreeMap::Shift(0),
            linearity: Linearity::Linear,
            blocks,
        }
    }

    pub fn block(&self, k: usize) -> &ExactMatrix {
        &self.blocks[k]
    }

    pub fn target_degree(&self, k: usize) -> i64 {
        self.dmap.target(k as i64, self.top as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    /// `self o rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &GradedOperator) -> GradedOperator {
        assert_eq!(self.top, rhs.top);
        let top = self.top as i64;
        let dmap = self.dmap.compose(rhs.dmap);
        let linearity = self.linearity.compose(rhs.linearity);
        let blocks = (0..=top)
            .map(|k| {
                let mid = rhs.dmap.target(k, top);
                let inner = if self.linearity == Linearity::Antilinear {
                    rhs.blocks[k as usize].conj()
                } else {
                    rhs.blocks[k as usize].clone()
                };
                if (0..=top).contains(&mid) {
                    self.blocks[mid as usize].mul(&inner)
                } else {
                    // rhs lands outside the complex, so the composite block is
                    // zero; give it the shape of the composed target degree.
                    let t = dmap.target(k, top);
                    let trows = if (0..=top).contains(&t) {
                        // dim of degree t, read off the source side of rhs
                        rhs.blocks[t as usize].cols
                    } else {
                        0
                    };
                    ExactMatrix::zeros(trows, inner.cols)
                }
            })
            .collect();
        GradedOperator {
            top: self.top,
            dmap,
            linearity,
            blocks,
        }
    }

    pub fn add(&self, rhs: &GradedOperator) -> GradedOperator {
        assert_eq!(self.top, rhs.top);
        assert_eq!(self.dmap, rhs.dmap, "adding operators of different shift");
        assert_eq!(self.linearity, rhs.linearity);
        let blocks = self
            .blocks
            .iter()
            .zip(&rhs.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        GradedOperator {
            top: self.top,
            dmap: self.dmap,
            linearity: self.linearity,
            blocks,
        }
    }

    pub fn sub(&self, rhs: &GradedOperator) -> GradedOperator {
        self.add(&rhs.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, s: &GaussianRational) -> GradedOperator {
        GradedOperator {
            top: self.top,
            dmap: self.dmap,
            linearity: self.linearity,
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    /// Anticommutator `self o rhs + rhs o self`.
    pub fn anticommutator(&self, rhs: &GradedOperator) -> GradedOperator {
        self.compose(rhs).add(&rhs.compose(self))
    }

    /// Commutator `self o rhs - rhs o self`.
    pub fn commutator(&self, rhs: &GradedOperator) -> GradedOperator {
        self.compose(rhs).sub(&rhs.compose(self))
    }

    /// Apply to coordinates of a form of homogeneous degree `k`; returns the
    /// target degree and coordinates there (empty when out of range).
    pub fn apply(&self, k: usize, coords: &[GaussianRational]) -> (i64, Vec<GaussianRational>) {
        let conj: Vec<GaussianRational>;
        let v = if self.linearity == Linearity::Antilinear {
            conj = coords.iter().map(|x| x.conj()).collect();
            &conj[..]
        } else {
            coords
        };
        (self.target_degree(k), self.blocks[k].apply(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linearity_parity() {
        use Linearity::*;
        assert_eq!(Antilinear.compose(Antilinear), Linear);
        assert_eq!(Antilinear.compose(Linear), Antilinear);
        assert_eq!(Linear.compose(Linear), Linear);
    }

    #[test]
    fn degree_map_composition() {
        use DegreeMap::*;
        let top = 6;
        for a in [Shift(1), Shift(-2), Reflect(0), Reflect(1)] {
            for b in [Shift(2), Reflect(0), Reflect(-1)] {
                for k in 0..=6 {
                    let two_step = a.target(b.target(k, top), top);
                    assert_eq!(a.compose(b).target(k, top), two_step);
                }
            }
        }
    }

    #[test]
    fn antilinear_composition_conjugates() {
        // One-degree complex of dim 1: operator "multiply by i, antilinear"
        // squared must be multiplication by i * conj(i) = 1 (linear).
        let dims = [1usize];
        let mut op = GradedOperator::zero(0, DegreeMap::Shift(0), Linearity::Antilinear, &dims);
        op.blocks[0].set(0, 0, GaussianRational::i());
        let sq = op.compose(&op);
        assert_eq!(sq.linearity, Linearity::Linear);
        assert_eq!(*sq.blocks[0].get(0, 0), GaussianRational::one());
    }

    #[test]
    fn composition_associative() {
        let dims = [2usize, 2];
        let mk = |entries: [[i64; 2]; 2], lin| {
            let mut op = GradedOperator::zero(1, DegreeMap::Shift(0), lin, &dims);
            for r in 0..2 {
                for c in 0..2 {
                    op.blocks[0].set(r, c, GaussianRational::from_int(entries[r][c]));
                    op.blocks[1].set(r, c, GaussianRational::from_int(entries[c][r]));
                }
            }
            op
        };
        let a = mk([[1, 2], [0, 1]], Linearity::Antilinear);
        let b = mk([[0, 1], [1, 0]], Linearity::Linear);
        let c = mk([[3, 0], [1, 1]], Linearity::Antilinear);
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }
}
