//! Quadratic spaces with nondegenerate symmetric bilinear forms, the split
//! block forms used as normalized bases, Mukai completions, and membership
//! and basis computations for the orthogonal Lie algebra of a form.

use crate::matrix::{Rat, RationalMatrix};
use crate::Error;
use num::{One, Zero};

/// A finite-dimensional rational vector space with a nondegenerate
/// symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSpace {
    gram: RationalMatrix,
}

impl QuadraticSpace {
    pub fn new(gram: RationalMatrix) -> Result<Self, Error> {
        if !gram.is_symmetric() {
            return Err(Error::Invalid("Gram matrix must be symmetric".into()));
        }
        if gram.rank() != gram.rows() {
            return Err(Error::Invalid("Gram matrix must be nondegenerate".into()));
        }
        Ok(QuadraticSpace { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &RationalMatrix {
        &self.gram
    }

    /// Pairing of two coordinate vectors under the form.
    pub fn pair(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let gy = self.gram.apply(y);
        x.iter().zip(gy.iter()).map(|(a, b)| a * b).fold(Rat::zero(), |s, t| s + t)
    }

    /// Rescales the form by a nonzero rational.
    pub fn scaled(&self, c: &Rat) -> Result<Self, Error> {
        if c.is_zero() {
            return Err(Error::Invalid("scale factor must be nonzero".into()));
        }
        Ok(QuadraticSpace { gram: self.gram.scale(c) })
    }
}

/// Split Gram matrix in the normalized shape: zero blocks off a pair of
/// identity blocks, with one extra diagonal `1` in the odd case.
///
/// Dimension is `2r` (even) or `2r + 1` (odd), with basis ordered
/// `e_1..e_r, e'_1..e'_r[, e_{r+1}]`.
pub fn standard_bbf_gram(r: usize, odd: bool) -> Result<QuadraticSpace, Error> {
    if r == 0 {
        return Err(Error::Invalid("split form needs r >= 1".into()));
    }
    let dim = 2 * r + usize::from(odd);
    let gram = RationalMatrix::from_fn(dim, dim, |i, j| {
        if i < 2 * r && j < 2 * r && (i + r == j || j + r == i) {
            Rat::one()
        } else if odd && i == 2 * r && j == 2 * r {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    QuadraticSpace::new(gram)
}

/// A quadratic space extended by a hyperbolic plane spanned by `v` and `w`.
/// Basis order: base vectors first, then `v`, then `w`.
#[derive(Clone, Debug)]
pub struct MukaiCompletion {
    base: QuadraticSpace,
    total: QuadraticSpace,
}

impl MukaiCompletion {
    pub fn base(&self) -> &QuadraticSpace {
        &self.base
    }

    pub fn total(&self) -> &QuadraticSpace {
        &self.total
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn v_index(&self) -> usize {
        self.base.dim()
    }

    pub fn w_index(&self) -> usize {
        self.base.dim() + 1
    }

    /// The form that the Lie algebra generated by hard-Lefschetz triples of
    /// the degree-4 model algebra is skew for: the base block enters with
    /// the opposite sign relative to the hyperbolic `v, w` plane.
    pub fn invariant_space(&self) -> QuadraticSpace {
        let n = self.base.dim();
        let gram = RationalMatrix::from_fn(n + 2, n + 2, |i, j| {
            if i < n && j < n {
                -self.base.gram().at(i, j).clone()
            } else {
                self.total.gram().at(i, j).clone()
            }
        });
        QuadraticSpace::new(gram).expect("twisted completion form is nondegenerate")
    }
}

/// Extends `q` by a hyperbolic plane `⟨v,w⟩ = 1`, `⟨v,v⟩ = ⟨w,w⟩ = 0`.
pub fn mukai_completion(q: &QuadraticSpace) -> MukaiCompletion {
    let n = q.dim();
    let gram = RationalMatrix::from_fn(n + 2, n + 2, |i, j| {
        if i < n && j < n {
            q.gram().at(i, j).clone()
        } else if (i == n && j == n + 1) || (i == n + 1 && j == n) {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    MukaiCompletion {
        base: q.clone(),
        total: QuadraticSpace::new(gram).expect("completion of a nondegenerate form"),
    }
}

/// True iff `Nᵀ·gram + gram·N = 0`, i.e. `⟨Nx,y⟩ + ⟨x,Ny⟩ = 0` for all x, y.
pub fn is_in_so(n: &RationalMatrix, q: &QuadraticSpace) -> Result<bool, Error> {
    if !n.is_square() || n.rows() != q.dim() {
        return Err(Error::Dimension(format!(
            "operator is {}x{}, space has dimension {}",
            n.rows(),
            n.cols(),
            q.dim()
        )));
    }
    let lhs = &n.transpose() * q.gram();
    let rhs = q.gram() * n;
    Ok((&lhs + &rhs).is_zero())
}

/// Basis of `so(q)`: the matrices `g⁻¹(E_ij − E_ji)` for `i < j`, which are
/// exactly the solutions of the skewness condition. Count is `d(d−1)/2`.
pub fn so_basis(q: &QuadraticSpace) -> Vec<RationalMatrix> {
    let d = q.dim();
    let ginv = invert(q.gram());
    let mut out = Vec::with_capacity(d * (d - 1) / 2);
    for i in 0..d {
        for j in i + 1..d {
            let a = RationalMatrix::from_fn(d, d, |r, c| {
                if (r, c) == (i, j) {
                    Rat::one()
                } else if (r, c) == (j, i) {
                    -Rat::one()
                } else {
                    Rat::zero()
                }
            });
            out.push(&ginv * &a);
        }
    }
    out
}

/// Exact inverse of a nonsingular matrix via RREF of `[A | I]`.
pub fn invert(m: &RationalMatrix) -> RationalMatrix {
    assert!(m.is_square());
    let n = m.rows();
    let aug = RationalMatrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m.at(r, c).clone()
        } else if c - n == r {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    let (red, pivots) = aug.rref();
    assert_eq!(pivots, (0..n).collect::<Vec<_>>(), "matrix is singular");
    RationalMatrix::from_fn(n, n, |r, c| red.at(r, n + c).clone())
}
