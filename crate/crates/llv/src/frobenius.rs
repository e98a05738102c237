//! Graded Frobenius algebras, hard-Lefschetz sl2 triples, the total Lie
//! algebra generated by them, the degree-4 model algebra on a quadratic
//! space, and the explicit isomorphism onto the orthogonal algebra of the
//! completed form.

use crate::matrix::{rat, vectorize, Rat, RationalMatrix, SpanTracker};
use crate::quad::{MukaiCompletion, QuadraticSpace};
use crate::Error;
use num::{BigUint, One, Zero};
use std::collections::BTreeMap;

/// A finite-dimensional graded algebra `A^0 ⊕ ... ⊕ A^{2d}` with
/// one-dimensional top piece and nondegenerate top-degree pairing.
#[derive(Clone, Debug)]
pub struct GradedFrobeniusAlgebra {
    half_degree: usize,
    dims: Vec<usize>,
    /// multiplication by the a-th basis vector of `A^i` as a map
    /// `A^j -> A^{i+j}`, keyed by `(i, j)`; absent keys are zero maps
    tensors: BTreeMap<(usize, usize), Vec<RationalMatrix>>,
    offsets: Vec<usize>,
    total_dim: usize,
}

impl GradedFrobeniusAlgebra {
    pub fn new(
        half_degree: usize,
        dims: Vec<usize>,
        tensors: BTreeMap<(usize, usize), Vec<RationalMatrix>>,
    ) -> Result<Self, Error> {
        if dims.len() != 2 * half_degree + 1 {
            return Err(Error::Invalid("need one dimension per degree 0..2d".into()));
        }
        if dims[2 * half_degree] != 1 {
            return Err(Error::Invalid("top piece must be one-dimensional".into()));
        }
        let mut offsets = Vec::with_capacity(dims.len());
        let mut acc = 0usize;
        for &d in &dims {
            offsets.push(acc);
            acc += d;
        }
        let alg = GradedFrobeniusAlgebra { half_degree, dims, tensors, offsets, total_dim: acc };
        alg.check_pairing()?;
        alg.check_associativity()?;
        Ok(alg)
    }

    fn check_pairing(&self) -> Result<(), Error> {
        let top = 2 * self.half_degree;
        for i in 0..=self.half_degree {
            let (di, dj) = (self.dims[i], self.dims[top - i]);
            if di != dj {
                return Err(Error::Invalid(format!(
                    "pairing needs dim A^{i} = dim A^{}; got {di} and {dj}",
                    top - i
                )));
            }
            if di == 0 {
                continue;
            }
            let pairing = RationalMatrix::from_fn(di, dj, |a, b| {
                self.mul_basis(i, a, top - i, b)
                    .map(|v| v[0].clone())
                    .unwrap_or_else(Rat::zero)
            });
            if pairing.rank() != di {
                return Err(Error::Invalid(format!(
                    "top-degree pairing degenerates between degrees {i} and {}",
                    top - i
                )));
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<(), Error> {
        let top = 2 * self.half_degree;
        for i in 0..=top {
            for j in 0..=top - i {
                for k in 0..=top - i - j {
                    for a in 0..self.dims[i] {
                        for b in 0..self.dims[j] {
                            let ab = self.basis_product(i, a, j, b);
                            for c in 0..self.dims[k] {
                                let bc = self.basis_product(j, b, k, c);
                                let lhs = self.multiply_graded(i + j, &ab, k, &basis_vec(self.dims[k], c));
                                let rhs = self.multiply_graded(i, &basis_vec(self.dims[i], a), j + k, &bc);
                                if lhs != rhs {
                                    return Err(Error::Invalid(format!(
                                        "associativity fails on basis triple ({i},{a}) ({j},{b}) ({k},{c})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn half_degree(&self) -> usize {
        self.half_degree
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    pub fn offset(&self, degree: usize) -> usize {
        self.offsets[degree]
    }

    /// Product of the a-th basis vector of `A^i` with the b-th of `A^j`,
    /// in coordinates of `A^{i+j}`; `None` means the zero map.
    fn mul_basis(&self, i: usize, a: usize, j: usize, b: usize) -> Option<Vec<Rat>> {
        let t = self.tensors.get(&(i, j))?;
        Some(t[a].col(b))
    }

    fn basis_product(&self, i: usize, a: usize, j: usize, b: usize) -> Vec<Rat> {
        let target = i + j;
        let dim = if target <= 2 * self.half_degree { self.dims[target] } else { 0 };
        self.mul_basis(i, a, j, b).unwrap_or_else(|| vec![Rat::zero(); dim])
    }

    fn multiply_graded(&self, i: usize, x: &[Rat], j: usize, y: &[Rat]) -> Vec<Rat> {
        let target = i + j;
        let dim = if target <= 2 * self.half_degree { self.dims[target] } else { 0 };
        let mut out = vec![Rat::zero(); dim];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let prod = self.basis_product(i, a, j, b);
                for (o, p) in out.iter_mut().zip(prod.iter()) {
                    *o += xa * yb * p;
                }
            }
        }
        out
    }

    /// Cup product by a degree-2 element as a matrix on the whole algebra.
    pub fn e_x(&self, x: &[Rat]) -> RationalMatrix {
        assert_eq!(x.len(), self.dims[2]);
        let top = 2 * self.half_degree;
        let mut out = RationalMatrix::zero(self.total_dim, self.total_dim);
        for j in 0..=top {
            if self.dims[j] == 0 || j + 2 > top {
                continue;
            }
            for b in 0..self.dims[j] {
                let img = self.multiply_graded(2, x, j, &basis_vec(self.dims[j], b));
                for (r, v) in img.iter().enumerate() {
                    if !v.is_zero() {
                        out.set(self.offsets[j + 2] + r, self.offsets[j] + b, v.clone());
                    }
                }
            }
        }
        out
    }

    /// The shifted degree map: multiplication by `i - d` on `A^i`.
    pub fn shifted_degree(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zero(self.total_dim, self.total_dim);
        for (deg, &dim) in self.dims.iter().enumerate() {
            for b in 0..dim {
                let idx = self.offsets[deg] + b;
                out.set(idx, idx, rat(deg as i64 - self.half_degree as i64));
            }
        }
        out
    }

    /// Frobenius pairing of two total-coordinate vectors.
    pub fn frobenius_pairing(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let top = 2 * self.half_degree;
        let mut acc = Rat::zero();
        for i in 0..=top {
            let j = top - i;
            let xi = &x[self.offsets[i]..self.offsets[i] + self.dims[i]];
            let yj = &y[self.offsets[j]..self.offsets[j] + self.dims[j]];
            let prod = self.multiply_graded(i, xi, j, yj);
            if let Some(v) = prod.first() {
                acc += v;
            }
        }
        acc
    }

    /// Hard-Lefschetz test: every power `(e_x)^i : A^{d-i} -> A^{d+i}` is
    /// bijective, checked by exact rank.
    pub fn has_hl(&self, x: &[Rat]) -> bool {
        let d = self.half_degree;
        let e = self.e_x(x);
        let mut power = RationalMatrix::identity(self.total_dim);
        for i in 0..=d {
            if i > 0 {
                power = &power * &e;
            }
            let (src, dst) = (d - i, d + i);
            if self.dims[src] != self.dims[dst] {
                return false;
            }
            if self.dims[src] == 0 {
                continue;
            }
            let block = RationalMatrix::from_fn(self.dims[dst], self.dims[src], |r, c| {
                power.at(self.offsets[dst] + r, self.offsets[src] + c).clone()
            });
            if block.rank() != self.dims[src] {
                return false;
            }
        }
        true
    }

    /// Completes a hard-Lefschetz element to an sl2 triple `(e_x, h, f_x)`
    /// by solving `[e, f] = h` for the graded degree -2 unknown; the
    /// solution is unique and the relations are verified exactly.
    pub fn sl2_complete(&self, x: &[Rat]) -> Result<Sl2Triple, Error> {
        let e = self.e_x(x);
        let h = self.shifted_degree();
        // unknown block positions: maps A^i -> A^{i-2}
        let mut positions = Vec::new();
        let top = 2 * self.half_degree;
        for i in 2..=top {
            for r in 0..self.dims[i - 2] {
                for c in 0..self.dims[i] {
                    positions.push((self.offsets[i - 2] + r, self.offsets[i] + c));
                }
            }
        }
        let cols: Vec<Vec<Rat>> = positions
            .iter()
            .map(|&(r, c)| {
                let mut unit = RationalMatrix::zero(self.total_dim, self.total_dim);
                unit.set(r, c, Rat::one());
                vectorize(&e.commutator(&unit))
            })
            .collect();
        let sys = RationalMatrix::from_cols(&cols);
        let coeffs = sys
            .solve(&vectorize(&h))
            .ok_or_else(|| Error::Invalid("element does not satisfy hard Lefschetz".into()))?;
        let mut f = RationalMatrix::zero(self.total_dim, self.total_dim);
        for (&(r, c), v) in positions.iter().zip(coeffs.iter()) {
            if !v.is_zero() {
                f.set(r, c, v.clone());
            }
        }
        let triple = Sl2Triple { e, h, f };
        triple.verify()?;
        Ok(triple)
    }

    /// Degree-2 elements suitable as generators: basis vectors plus
    /// pairwise sums and differences, kept when their self-pairing under
    /// the Frobenius form is nonzero.
    pub fn default_hl_samples(&self) -> Vec<Vec<Rat>> {
        let n = self.dims[2];
        let mut out = Vec::new();
        let pairing = |x: &[Rat]| {
            let mut total = vec![Rat::zero(); self.total_dim];
            total[self.offsets[2]..self.offsets[2] + n].clone_from_slice(x);
            self.frobenius_pairing(&total, &total)
        };
        let mut push_if_hl = |v: Vec<Rat>| {
            if !pairing(&v).is_zero() && self.has_hl(&v) {
                out.push(v);
            }
        };
        for i in 0..n {
            push_if_hl(basis_vec(n, i));
        }
        for i in 0..n {
            for j in i + 1..n {
                for sign in [1i64, -1] {
                    let mut v = basis_vec(n, i);
                    v[j] = rat(sign);
                    push_if_hl(v);
                }
            }
        }
        out
    }

    /// Lie algebra generated by the sl2 triples of the samples: the span
    /// of all `e_x, f_x, h` closed under brackets, iterated until the
    /// dimension stabilizes.
    pub fn total_lie_algebra(&self, samples: &[Vec<Rat>]) -> Result<Vec<RationalMatrix>, Error> {
        let dim = self.total_dim;
        let mut tracker = SpanTracker::new(dim * dim);
        let mut basis: Vec<RationalMatrix> = Vec::new();
        let add = |tracker: &mut SpanTracker, basis: &mut Vec<RationalMatrix>, m: RationalMatrix| {
            if tracker.add(&vectorize(&m)) {
                basis.push(m);
            }
        };
        for x in samples {
            let triple = self.sl2_complete(x)?;
            add(&mut tracker, &mut basis, triple.e);
            add(&mut tracker, &mut basis, triple.f);
            add(&mut tracker, &mut basis, triple.h);
        }
        let cap = dim * dim;
        for _ in 0..cap {
            let len = basis.len();
            let mut grew = false;
            for i in 0..len {
                for j in i + 1..len {
                    let bracket = basis[i].commutator(&basis[j]);
                    if tracker.add(&vectorize(&bracket)) {
                        basis.push(bracket);
                        grew = true;
                    }
                }
            }
            if !grew {
                return Ok(basis);
            }
        }
        Err(Error::Inconsistent("bracket closure failed to stabilize".into()))
    }
}

fn basis_vec(dim: usize, idx: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[idx] = Rat::one();
    v
}

/// An exact sl2 triple of operators.
#[derive(Clone, Debug)]
pub struct Sl2Triple {
    pub e: RationalMatrix,
    pub h: RationalMatrix,
    pub f: RationalMatrix,
}

impl Sl2Triple {
    pub fn verify(&self) -> Result<(), Error> {
        let ok = self.e.commutator(&self.h) == self.e.scale(&rat(-2))
            && self.f.commutator(&self.h) == self.f.scale(&rat(2))
            && self.e.commutator(&self.f) == self.h;
        if ok {
            Ok(())
        } else {
            Err(Error::Inconsistent("sl2 relations fail".into()))
        }
    }
}

/// The degree-4 model algebra on a quadratic space: one-dimensional bottom
/// and top, the space itself in degree 2, and `x·y = ⟨x,y⟩·w`.
pub fn mukai_toy_algebra(q: &QuadraticSpace) -> Result<GradedFrobeniusAlgebra, Error> {
    let n = q.dim();
    let dims = vec![1, 0, n, 0, 1];
    let mut tensors = BTreeMap::new();
    // unit multiplications
    tensors.insert((0, 0), vec![RationalMatrix::identity(1)]);
    tensors.insert((0, 2), vec![RationalMatrix::identity(n)]);
    tensors.insert((0, 4), vec![RationalMatrix::identity(1)]);
    tensors.insert((2, 0), (0..n).map(|a| {
        RationalMatrix::from_fn(n, 1, |r, _| if r == a { Rat::one() } else { Rat::zero() })
    }).collect::<Vec<_>>());
    tensors.insert((4, 0), vec![RationalMatrix::identity(1)]);
    // degree-2 products hit the top line through the form
    tensors.insert(
        (2, 2),
        (0..n)
            .map(|a| RationalMatrix::from_fn(1, n, |_, c| q.gram().at(a, c).clone()))
            .collect(),
    );
    GradedFrobeniusAlgebra::new(2, dims, tensors)
}

/// The explicit image of a cup-product operator in the orthogonal algebra
/// of the completed space, in basis order (base..., v, w):
/// `v ↦ x`, `w ↦ 0`, `y ↦ ⟨x,y⟩·w`.
pub fn psi_matrix(x: &[Rat], completion: &MukaiCompletion) -> RationalMatrix {
    let n = completion.base().dim();
    assert_eq!(x.len(), n);
    let mut out = RationalMatrix::zero(n + 2, n + 2);
    let gx = completion.base().gram().apply(x);
    for i in 0..n {
        out.set(i, completion.v_index(), x[i].clone());
        out.set(completion.w_index(), i, gx[i].clone());
    }
    out
}

/// The image of the shifted degree map under the same identification:
/// zero on the base, `v ↦ -2v`, `w ↦ 2w`.
pub fn psi_degree_matrix(completion: &MukaiCompletion) -> RationalMatrix {
    let n = completion.base().dim();
    let mut out = RationalMatrix::zero(n + 2, n + 2);
    out.set(completion.v_index(), completion.v_index(), rat(-2));
    out.set(completion.w_index(), completion.w_index(), rat(2));
    out
}

/// Graded dimensions of the subalgebra generated by degree two in the
/// cohomology of a 2n-dimensional space with second Betti number `b2`:
/// the degree-2i piece is the full i-th symmetric power for `i <= n`,
/// mirrored above the middle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerbitskyModel {
    pub n: usize,
    pub b2: usize,
    /// dimensions per cohomological degree 0..=4n (odd degrees zero)
    pub degree_dims: Vec<BigUint>,
}

pub fn verbitsky_graded_model(q: &QuadraticSpace, n: usize) -> Result<VerbitskyModel, Error> {
    if n == 0 {
        return Err(Error::Invalid("model needs n >= 1".into()));
    }
    let b2 = q.dim();
    let mut degree_dims = vec![BigUint::zero(); 4 * n + 1];
    for degree in (0..=4 * n).step_by(2) {
        let i = (degree / 2).min(2 * n - degree / 2);
        degree_dims[degree] = binomial(b2 + i - 1, i);
    }
    Ok(VerbitskyModel { n, b2, degree_dims })
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k.min(n - k) {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat_frac;
    use crate::quad::is_in_so;
    use crate::quad::{mukai_completion, standard_bbf_gram};
    use crate::weights::{grade_and_branch, irrep_dim, HighestWeight, RootSystem};

    fn toy(b2: usize) -> (QuadraticSpace, GradedFrobeniusAlgebra) {
        let q = standard_bbf_gram(b2 / 2, b2 % 2 == 1).unwrap();
        let a = mukai_toy_algebra(&q).unwrap();
        (q, a)
    }

    #[test]
    fn toy_algebra_shape_and_products() {
        let (q, a) = toy(5);
        assert_eq!(a.dims(), &[1, 0, 5, 0, 1]);
        // product of two degree-2 basis vectors is the pairing times w
        let x = basis_vec(5, 0);
        let y = basis_vec(5, 2);
        let prod = a.multiply_graded(2, &x, 2, &y);
        assert_eq!(prod, vec![q.gram().at(0, 2).clone()]);
        // unit acts as identity
        let one = basis_vec(1, 0);
        assert_eq!(a.multiply_graded(0, &one, 2, &y), y);
    }

    #[test]
    fn hl_detection_in_toy_algebra() {
        let (q, a) = toy(4);
        // e_1 + e'_1 has self-pairing 2: hard Lefschetz holds
        let mut x = vec![rat(0); 4];
        x[0] = rat(1);
        x[2] = rat(1);
        assert!(!q.pair(&x, &x).is_zero());
        assert!(a.has_hl(&x));
        // isotropic basis vector: squares to zero on the bottom piece
        let e1 = basis_vec(4, 0);
        assert!(!a.has_hl(&e1));
        // zero never has HL for d >= 1
        assert!(!a.has_hl(&vec![rat(0); 4]));
    }

    #[test]
    fn sl2_completion_exact_and_scaling() {
        let (_, a) = toy(4);
        let mut x = vec![rat(0); 4];
        x[0] = rat(1);
        x[2] = rat(1);
        let triple = a.sl2_complete(&x).unwrap();
        triple.verify().unwrap();
        assert_eq!(triple.h, a.shifted_degree());
        // f scales inversely
        let cx: Vec<Rat> = x.iter().map(|v| v * rat(3)).collect();
        let scaled = a.sl2_complete(&cx).unwrap();
        assert_eq!(scaled.f, triple.f.scale(&rat_frac(1, 3)));
        // non-HL input errors
        assert!(a.sl2_complete(&basis_vec(4, 0)).is_err());
    }

    /// algebra coordinates are ordered (v, base..., w); completion
    /// coordinates are (base..., v, w)
    fn completion_from_algebra_perm(n: usize) -> RationalMatrix {
        RationalMatrix::from_fn(n + 2, n + 2, |r, c| {
            let algebra_index = if r < n { r + 1 } else if r == n { 0 } else { n + 1 };
            if c == algebra_index { rat(1) } else { rat(0) }
        })
    }

    #[test]
    fn total_lie_algebra_matches_orthogonal_dimension() {
        for b2 in 3..=6usize {
            let (q, a) = toy(b2);
            let samples = a.default_hl_samples();
            let basis = a.total_lie_algebra(&samples).unwrap();
            let expected = (b2 + 2) * (b2 + 1) / 2;
            assert_eq!(basis.len(), expected, "b2 = {b2}");
            // every generated element is skew for the twisted completion form
            let completion = mukai_completion(&q);
            let inv = completion.invariant_space();
            let perm = completion_from_algebra_perm(b2);
            let perm_inv = crate::quad::invert(&perm);
            for m in &basis {
                let conj = &(&perm * m) * &perm_inv;
                assert!(is_in_so(&conj, &inv).unwrap(), "b2 = {b2}");
            }
        }
    }

    #[test]
    fn single_sample_gives_one_sl2() {
        let (_, a) = toy(4);
        let mut x = vec![rat(0); 4];
        x[0] = rat(1);
        x[2] = rat(1);
        let basis = a.total_lie_algebra(std::slice::from_ref(&x)).unwrap();
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn psi_matrix_shape_and_skewness() {
        let q = standard_bbf_gram(2, false).unwrap();
        let completion = mukai_completion(&q);
        let inv = completion.invariant_space();

        let zero = psi_matrix(&vec![rat(0); 4], &completion);
        assert!(zero.is_zero());

        let h = psi_degree_matrix(&completion);
        assert!(is_in_so(&h, &inv).unwrap());
        assert_eq!(h.at(4, 4), &rat(-2));
        assert_eq!(h.at(5, 5), &rat(2));

        let e1 = basis_vec(4, 0);
        let psi = psi_matrix(&e1, &completion);
        assert_eq!(psi.at(0, 4), &rat(1));
        assert!(is_in_so(&psi, &inv).unwrap());
        // and psi of e_x is NOT skew for the untwisted completion form
        assert!(!is_in_so(&psi, completion.total()).unwrap());
    }

    #[test]
    fn psi_is_the_tautological_identification_on_the_toy_algebra() {
        // cup product operators of the degree-4 model, reordered to the
        // completion basis, are exactly the psi matrices; brackets of
        // mixed e/f samples then agree on both sides automatically
        let q = standard_bbf_gram(2, false).unwrap();
        let (_, a) = toy(4);
        let completion = mukai_completion(&q);
        let perm = completion_from_algebra_perm(4);
        let perm_inv = crate::quad::invert(&perm);
        let conj = |m: &RationalMatrix| &(&perm * m) * &perm_inv;
        for i in 0..4usize {
            let xi = basis_vec(4, i);
            assert_eq!(conj(&a.e_x(&xi)), psi_matrix(&xi, &completion), "i={i}");
        }
        assert_eq!(conj(&a.shifted_degree()), psi_degree_matrix(&completion));
        // a mixed bracket computed both ways
        let mut x = vec![rat(0); 4];
        x[0] = rat(1);
        x[2] = rat(1);
        let mut y = vec![rat(0); 4];
        y[1] = rat(1);
        y[3] = rat(2);
        let tx = a.sl2_complete(&x).unwrap();
        let ty = a.sl2_complete(&y).unwrap();
        let lhs = conj(&tx.e.commutator(&ty.f));
        let rhs = conj(&tx.e).commutator(&conj(&ty.f));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_operator_twist_identity() {
        // the untwisted degree map acts as i on degree i: h + 2n
        let q = standard_bbf_gram(2, true).unwrap();
        let model = verbitsky_graded_model(&q, 2).unwrap();
        let n = model.n as i64;
        for (degree, dim) in model.degree_dims.iter().enumerate() {
            if dim.is_zero() {
                continue;
            }
            let shifted = degree as i64 - 2 * n;
            assert_eq!(shifted + 2 * n, degree as i64);
        }
    }

    #[test]
    fn verbitsky_model_dimensions() {
        let q5 = standard_bbf_gram(2, true).unwrap();
        let m = verbitsky_graded_model(&q5, 1).unwrap();
        let dims: Vec<u64> = m.degree_dims.iter().map(|d| u64::try_from(d).unwrap()).collect();
        assert_eq!(dims, vec![1, 0, 5, 0, 1]);

        let m2 = verbitsky_graded_model(&q5, 2).unwrap();
        assert_eq!(m2.degree_dims[4], BigUint::from(15u32)); // Sym² of dim 5

        let q23 = standard_bbf_gram(11, true).unwrap();
        let m = verbitsky_graded_model(&q23, 2).unwrap();
        assert_eq!(m.degree_dims[4], BigUint::from(276u32)); // C(24, 2)
    }

    #[test]
    fn verbitsky_model_matches_branching() {
        // graded dims of V_(n) under restriction equal the model dims
        let b2 = 5usize;
        let n = 2usize;
        let q = standard_bbf_gram(2, true).unwrap();
        let model = verbitsky_graded_model(&q, n).unwrap();
        let ambient = RootSystem::for_so(b2 + 2).unwrap();
        let target = RootSystem::for_so(b2).unwrap();
        let mut mu = vec![0i64; ambient.rank];
        mu[0] = n as i64;
        let mu = HighestWeight::from_ints(&mu, &ambient).unwrap();
        let branched = grade_and_branch(&mu, &ambient, &target).unwrap();
        for (h_eig, comps) in &branched {
            let degree = (2 * n as i64 + h_eig) as usize;
            let total: BigUint = comps
                .iter()
                .map(|c| irrep_dim(&c.weight, &target) * BigUint::from(c.mult))
                .fold(BigUint::zero(), |a, b| a + b);
            assert_eq!(total, model.degree_dims[degree], "degree {degree}");
        }
    }
}
