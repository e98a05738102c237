//! Exact Clifford algebras with subset-indexed bases, regular
//! representations, spin modules built from rational isotropic splittings,
//! and the derivation action of skew operators on the wedge-space
//! identification of the algebra.

use crate::matrix::{induced_wedge_power, rat, Rat, RationalMatrix};
use crate::nilpotent::NilpotentOperator;
use crate::quad::{invert, is_in_so, QuadraticSpace};
use crate::Error;
use num::{BigUint, One, Signed, Zero};
use std::collections::BTreeMap;

/// Explicit Clifford matrices are only built up to this many generators
/// (dimension 4096); larger profiles must use the combinatorial path.
pub const MAX_EXPLICIT_GENERATORS: usize = 12;

/// Element of a Clifford algebra: sparse coefficients over subset masks of
/// the orthogonalized generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordElement {
    generators: usize,
    coeffs: BTreeMap<u64, Rat>,
}

impl CliffordElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mask: u64) -> Rat {
        self.coeffs.get(&mask).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.generators, other.generators);
        let mut coeffs = self.coeffs.clone();
        for (&m, c) in &other.coeffs {
            let entry = coeffs.entry(m).or_insert_with(Rat::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        CliffordElement { generators: self.generators, coeffs }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return CliffordElement { generators: self.generators, coeffs: BTreeMap::new() };
        }
        CliffordElement {
            generators: self.generators,
            coeffs: self.coeffs.iter().map(|(&m, c)| (m, c * s)).collect(),
        }
    }
}

/// A `2^m`-dimensional Clifford algebra over the rationals. The input form
/// is orthogonalized internally, so structure constants stay rational;
/// elements are expressed over products of the orthogonal generators.
#[derive(Clone, Debug)]
pub struct CliffordAlgebra {
    base: QuadraticSpace,
    /// columns are the orthogonal basis vectors, in base coordinates
    to_ortho: RationalMatrix,
    from_ortho: RationalMatrix,
    /// ⟨u_i, u_i⟩ of the orthogonal generators
    diag: Vec<Rat>,
}

impl CliffordAlgebra {
    pub fn new(base: QuadraticSpace) -> Result<Self, Error> {
        let m = base.dim();
        if m > MAX_EXPLICIT_GENERATORS {
            return Err(Error::Invalid(format!(
                "explicit Clifford construction is limited to {MAX_EXPLICIT_GENERATORS} \
                 generators (dimension 4096); {m} requested — use the combinatorial path"
            )));
        }
        let (to_ortho, diag) = orthogonalize(&base);
        let from_ortho = invert(&to_ortho);
        Ok(CliffordAlgebra { base, to_ortho, from_ortho, diag })
    }

    pub fn generators(&self) -> usize {
        self.base.dim()
    }

    pub fn dim(&self) -> usize {
        1 << self.base.dim()
    }

    pub fn even_dim(&self) -> usize {
        1 << (self.base.dim() - 1)
    }

    pub fn base(&self) -> &QuadraticSpace {
        &self.base
    }

    /// Orthogonalized basis, columns in base coordinates.
    pub fn ortho_basis(&self) -> &RationalMatrix {
        &self.to_ortho
    }

    /// Norm of the i-th orthogonal generator.
    pub fn generator_norm(&self, i: usize) -> &Rat {
        &self.diag[i]
    }

    pub fn scalar(&self, c: Rat) -> CliffordElement {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        CliffordElement { generators: self.base.dim(), coeffs }
    }

    pub fn one(&self) -> CliffordElement {
        self.scalar(Rat::one())
    }

    pub fn basis_element(&self, mask: u64) -> CliffordElement {
        assert!(mask < (1u64 << self.base.dim()));
        CliffordElement {
            generators: self.base.dim(),
            coeffs: BTreeMap::from([(mask, Rat::one())]),
        }
    }

    /// Degree-one element from coordinates in the original base.
    pub fn vector(&self, x: &[Rat]) -> CliffordElement {
        assert_eq!(x.len(), self.base.dim());
        let y = self.from_ortho.apply(x);
        let mut coeffs = BTreeMap::new();
        for (i, c) in y.into_iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(1u64 << i, c);
            }
        }
        CliffordElement { generators: self.base.dim(), coeffs }
    }

    /// Product in the algebra: subset-merge sign rule with quadratic-form
    /// contraction on common generators.
    pub fn mul(&self, a: &CliffordElement, b: &CliffordElement) -> Result<CliffordElement, Error> {
        let m = self.base.dim();
        if a.generators != m || b.generators != m {
            return Err(Error::Invalid("elements belong to a different Clifford algebra".into()));
        }
        let mut coeffs: BTreeMap<u64, Rat> = BTreeMap::new();
        for (&s, ca) in &a.coeffs {
            for (&t, cb) in &b.coeffs {
                let (mask, factor) = self.mul_basis(s, t);
                if factor.is_zero() {
                    continue;
                }
                let entry = coeffs.entry(mask).or_insert_with(Rat::zero);
                *entry += ca * cb * factor;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(CliffordElement { generators: m, coeffs })
    }

    /// Product of two basis monomials: `(result mask, scalar factor)`.
    fn mul_basis(&self, s: u64, t: u64) -> (u64, Rat) {
        let mut sign_flips = 0u32;
        let mut tt = t;
        while tt != 0 {
            let j = tt.trailing_zeros();
            // generators of s strictly above j must be crossed
            sign_flips += (s >> (j + 1)).count_ones();
            tt &= tt - 1;
        }
        let mut factor = if sign_flips % 2 == 0 { Rat::one() } else { -Rat::one() };
        let mut common = s & t;
        while common != 0 {
            let i = common.trailing_zeros() as usize;
            factor *= &self.diag[i];
            common &= common - 1;
        }
        (s ^ t, factor)
    }

    /// Matrix of `y ↦ x·y` on the subset basis.
    pub fn left_regular_rep(&self, x: &CliffordElement) -> RationalMatrix {
        let dim = self.dim();
        let mut out = RationalMatrix::zero(dim, dim);
        for col in 0..dim as u64 {
            for (&s, c) in &x.coeffs {
                let (mask, factor) = self.mul_basis(s, col);
                if factor.is_zero() {
                    continue;
                }
                let v = out.at(mask as usize, col as usize) + c * &factor;
                out.set(mask as usize, col as usize, v);
            }
        }
        out
    }

    /// Matrix of `y ↦ y·x` on the subset basis.
    pub fn right_regular_rep(&self, x: &CliffordElement) -> RationalMatrix {
        let dim = self.dim();
        let mut out = RationalMatrix::zero(dim, dim);
        for col in 0..dim as u64 {
            for (&t, c) in &x.coeffs {
                let (mask, factor) = self.mul_basis(col, t);
                if factor.is_zero() {
                    continue;
                }
                let v = out.at(mask as usize, col as usize) + c * &factor;
                out.set(mask as usize, col as usize, v);
            }
        }
        out
    }

    /// Verifies that the algebra acting by left multiplication realizes the
    /// full commutant of the right regular action.
    ///
    /// Checked facts: every `L_{e_i}` commutes with every `R_{e_j}` (the
    /// `R_{e_j}` generate all right multiplications), and the left
    /// multiplications are independent since `L_x(1) = x`. Any endomorphism
    /// `M` commuting with all right multiplications satisfies
    /// `M(e_T) = M(1·e_T) = M(1)·e_T`, i.e. `M = L_{M(1)}`, so the
    /// commutant is exactly the `2^m`-dimensional span of left
    /// multiplications.
    pub fn commutant_check(&self) -> Result<(), Error> {
        let m = self.base.dim();
        let dim = self.dim() as u64;
        for i in 0..m {
            let gi = 1u64 << i;
            for j in 0..m {
                let gj = 1u64 << j;
                for t in 0..dim {
                    // L_i(R_j(t)) vs R_j(L_i(t))
                    let (t1, f1) = self.mul_basis(t, gj);
                    let (lhs_mask, lhs_f) = self.mul_basis(gi, t1);
                    let lhs = f1 * lhs_f;
                    let (t2, f2) = self.mul_basis(gi, t);
                    let (rhs_mask, rhs_f) = self.mul_basis(t2, gj);
                    let rhs = f2 * rhs_f;
                    if lhs_mask != rhs_mask || lhs != rhs {
                        return Err(Error::Inconsistent(format!(
                            "left and right multiplications fail to commute at i={i}, j={j}, t={t}"
                        )));
                    }
                }
            }
        }
        for s in 0..dim {
            // evaluation at 1 recovers e_s: independence of the L_{e_S}
            let l = self.left_regular_rep(&self.basis_element(s));
            let mut expected = vec![Rat::zero(); dim as usize];
            expected[s as usize] = Rat::one();
            if l.col(0) != expected {
                return Err(Error::Inconsistent(
                    "left multiplication does not recover e_S at 1".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Symmetric Gram–Schmidt without normalization. Returns the basis change
/// (columns are the new vectors in old coordinates) and the diagonal norms.
/// When the remaining diagonal vanishes an off-diagonal pairing is folded
/// in; nondegeneracy guarantees one exists.
pub(crate) fn orthogonalize(q: &QuadraticSpace) -> (RationalMatrix, Vec<Rat>) {
    let m = q.dim();
    let mut vectors: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut v = vec![Rat::zero(); m];
            v[i] = Rat::one();
            v
        })
        .collect();
    let mut diag = Vec::with_capacity(m);
    for i in 0..m {
        if q.pair(&vectors[i], &vectors[i]).is_zero() {
            if let Some(j) = (i + 1..m).find(|&j| !q.pair(&vectors[j], &vectors[j]).is_zero()) {
                vectors.swap(i, j);
            } else {
                let j = (i + 1..m)
                    .find(|&j| !q.pair(&vectors[i], &vectors[j]).is_zero())
                    .expect("nondegenerate form has a nonzero pairing");
                let vj = vectors[j].clone();
                for (a, b) in vectors[i].iter_mut().zip(vj.iter()) {
                    *a += b;
                }
            }
        }
        let nii = q.pair(&vectors[i], &vectors[i]);
        for j in i + 1..m {
            let f = q.pair(&vectors[i], &vectors[j]) / &nii;
            if f.is_zero() {
                continue;
            }
            let vi = vectors[i].clone();
            for (a, b) in vectors[j].iter_mut().zip(vi.iter()) {
                *a -= &f * b;
            }
        }
        diag.push(nii);
    }
    (RationalMatrix::from_cols(&vectors), diag)
}

/// Rational square root of a non-negative rational, when one exists.
fn rational_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// The spin module of a split quadratic space: dimension `2^⌊m/2⌋`, with
/// creation and annihilation operators from a maximal rational isotropic
/// splitting, and the odd leftover acting as a scaled parity involution.
#[derive(Clone, Debug)]
pub struct SpinModule {
    space: QuadraticSpace,
    pairs: usize,
    /// isotropic pair vectors (all v_i then all w_i) and the odd leftover,
    /// as columns in base coordinates
    splitting: RationalMatrix,
    splitting_inv: RationalMatrix,
    /// action of each splitting basis vector on the module
    basis_action: Vec<RationalMatrix>,
    /// rational square root of the leftover norm, when it exists
    odd_scale: Option<Rat>,
    odd_present: bool,
}

impl SpinModule {
    pub fn dim(&self) -> usize {
        1 << self.pairs
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    /// Action of a vector of the base space on the module. Fails when the
    /// vector involves the odd leftover direction and its norm has no
    /// rational square root.
    pub fn vector_action(&self, x: &[Rat]) -> Result<RationalMatrix, Error> {
        let coords = self.splitting_inv.apply(x);
        let mut out = RationalMatrix::zero(self.dim(), self.dim());
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i == 2 * self.pairs && self.odd_scale.is_none() {
                return Err(Error::Invalid(
                    "leftover generator norm has no rational square root; \
                     only the even-part module is available"
                        .into(),
                ));
            }
            out = &out + &self.basis_action[i].scale(c);
        }
        Ok(out)
    }

    /// Spin action of a skew operator: `N = (1/2) Σ_i d_i⁻¹ R_{Nu_i, u_i}`
    /// over any orthogonal basis maps to the even Clifford element
    /// `θ(N) = (1/4) Σ_i d_i⁻¹ (Nu_i)·u_i`, which then acts on the module.
    pub fn so_action(&self, n: &RationalMatrix) -> Result<RationalMatrix, Error> {
        if !is_in_so(n, &self.space)? {
            return Err(Error::NotSkew);
        }
        let (ortho, diag) = orthogonalize(&self.space);
        let mut out = RationalMatrix::zero(self.dim(), self.dim());
        for i in 0..self.space.dim() {
            let u = ortho.col(i);
            let nu = n.apply(&u);
            if nu.iter().all(|c| c.is_zero()) {
                continue;
            }
            let term = &self.vector_action(&nu)? * &self.vector_action(&u)?;
            out = &out + &term.scale(&(rat(1) / (rat(4) * &diag[i])));
        }
        Ok(out)
    }

    /// Restriction of a parity-preserving operator to the two half-spin
    /// blocks (even and odd creation masks). Errors when the operator
    /// mixes parities.
    pub fn half_spin_blocks(
        &self,
        op: &RationalMatrix,
    ) -> Result<(RationalMatrix, RationalMatrix), Error> {
        let dim = self.dim();
        let evens: Vec<usize> = (0..dim).filter(|i| i.count_ones() % 2 == 0).collect();
        let odds: Vec<usize> = (0..dim).filter(|i| i.count_ones() % 2 == 1).collect();
        for &e in &evens {
            for &o in &odds {
                if !op.at(e, o).is_zero() || !op.at(o, e).is_zero() {
                    return Err(Error::Invalid("operator mixes the half-spin parities".into()));
                }
            }
        }
        let pick = |idx: &[usize]| {
            RationalMatrix::from_fn(idx.len(), idx.len(), |r, c| op.at(idx[r], idx[c]).clone())
        };
        Ok((pick(&evens), pick(&odds)))
    }
}

/// Builds the spin module of a quadratic space that admits a rational
/// maximal isotropic splitting (true for the split block forms).
pub fn spin_rep(base: &QuadraticSpace) -> Result<SpinModule, Error> {
    let m = base.dim();
    let p = m / 2;
    let (vs, ws, leftover) = isotropic_splitting(base)?;
    debug_assert_eq!(vs.len(), p);

    let dim = 1usize << p;
    // creation: v_i sends mask S to S ∪ {i} with the Koszul sign; the
    // annihilation of w_i removes the bit with the same sign, so that
    // c_i a_i + a_i c_i = id on every mask
    let creation = |i: usize| {
        let mut mtx = RationalMatrix::zero(dim, dim);
        for s in 0..dim {
            if s & (1 << i) != 0 {
                continue;
            }
            let sign = ((s as u64) & ((1u64 << i) - 1)).count_ones();
            let val = if sign % 2 == 0 { rat(1) } else { rat(-1) };
            mtx.set(s | (1 << i), s, val);
        }
        mtx
    };
    let annihilation = |i: usize| {
        let mut mtx = RationalMatrix::zero(dim, dim);
        for s in 0..dim {
            if s & (1 << i) == 0 {
                continue;
            }
            let sign = ((s as u64) & ((1u64 << i) - 1)).count_ones();
            let val = if sign % 2 == 0 { rat(1) } else { rat(-1) };
            mtx.set(s & !(1 << i), s, val);
        }
        mtx
    };

    let mut splitting_cols: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut basis_action: Vec<RationalMatrix> = Vec::with_capacity(m);
    for (i, v) in vs.iter().enumerate() {
        splitting_cols.push(v.clone());
        // ⟨v_i, w_i⟩ = 1 and the relation constant is 2⟨·,·⟩
        basis_action.push(creation(i).scale(&rat(2)));
    }
    for (i, w) in ws.iter().enumerate() {
        splitting_cols.push(w.clone());
        basis_action.push(annihilation(i));
    }
    let mut odd_scale = None;
    let odd_present = leftover.is_some();
    if let Some(u) = &leftover {
        let norm = base.pair(u, u);
        odd_scale = rational_sqrt(&norm);
        splitting_cols.push(u.clone());
        let parity = RationalMatrix::from_fn(dim, dim, |r, c| {
            if r == c {
                if r.count_ones() % 2 == 0 {
                    rat(1)
                } else {
                    rat(-1)
                }
            } else {
                rat(0)
            }
        });
        let scaled = match &odd_scale {
            Some(s) => parity.scale(s),
            None => parity, // placeholder; vector_action refuses to use it
        };
        basis_action.push(scaled);
    }
    let splitting = RationalMatrix::from_cols(&splitting_cols);
    let splitting_inv = invert(&splitting);
    let module = SpinModule {
        space: base.clone(),
        pairs: p,
        splitting,
        splitting_inv,
        basis_action,
        odd_scale,
        odd_present,
    };
    verify_clifford_relations(&module)?;
    Ok(module)
}

/// Checks `φ(x)φ(y) + φ(y)φ(x) = 2⟨x,y⟩` on the splitting basis.
fn verify_clifford_relations(module: &SpinModule) -> Result<(), Error> {
    let usable = 2 * module.pairs + usize::from(module.odd_present && module.odd_scale.is_some());
    let id = RationalMatrix::identity(module.dim());
    for i in 0..usable {
        for j in i..usable {
            let (a, b) = (&module.basis_action[i], &module.basis_action[j]);
            let anti = &(a * b) + &(b * a);
            let xi = module.splitting.col(i);
            let xj = module.splitting.col(j);
            let expected = id.scale(&(rat(2) * module.space.pair(&xi, &xj)));
            if anti != expected {
                return Err(Error::Inconsistent(format!(
                    "Clifford relation fails on splitting vectors {i}, {j}"
                )));
            }
        }
    }
    Ok(())
}

/// Finds hyperbolic pairs `(v_i, w_i)` with `⟨v_i, w_j⟩ = δ_ij`, all
/// isotropic and mutually orthogonal, plus the odd leftover vector.
fn isotropic_splitting(
    base: &QuadraticSpace,
) -> Result<(Vec<Vec<Rat>>, Vec<Vec<Rat>>, Option<Vec<Rat>>), Error> {
    let m = base.dim();
    let mut active: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut v = vec![Rat::zero(); m];
            v[i] = Rat::one();
            v
        })
        .collect();
    let mut vs = Vec::new();
    let mut ws = Vec::new();
    while active.len() >= 2 {
        let v = find_isotropic(base, &active).ok_or_else(|| {
            Error::Invalid(format!(
                "no rational isotropic vector found in a {}-dimensional stage; \
                 the form does not split rationally",
                active.len()
            ))
        })?;
        let w_raw = active
            .iter()
            .find(|b| !base.pair(&v, b).is_zero())
            .cloned()
            .expect("nondegenerate restriction pairs v with something");
        let vw = base.pair(&v, &w_raw);
        let ww = base.pair(&w_raw, &w_raw);
        // make w isotropic, then normalize the pairing to 1
        let shift = ww / (rat(2) * &vw);
        let mut w: Vec<Rat> = w_raw.iter().zip(v.iter()).map(|(a, b)| a - &shift * b).collect();
        let scale = rat(1) / base.pair(&v, &w);
        for c in &mut w {
            *c *= &scale;
        }
        // restrict to the orthogonal complement of (v, w) inside the span
        let k = active.len();
        let sys = RationalMatrix::from_fn(2, k, |r, c| {
            if r == 0 {
                base.pair(&v, &active[c])
            } else {
                base.pair(&w, &active[c])
            }
        });
        let kernel = sys.kernel_basis();
        active = kernel
            .iter()
            .map(|coeffs| {
                let mut x = vec![Rat::zero(); m];
                for (c, b) in coeffs.iter().zip(active.iter()) {
                    for (xa, ba) in x.iter_mut().zip(b.iter()) {
                        *xa += c * ba;
                    }
                }
                x
            })
            .collect();
        vs.push(v);
        ws.push(w);
    }
    let leftover = active.into_iter().next();
    Ok((vs, ws, leftover))
}

/// Looks for a rational isotropic vector in the span: a basis vector with
/// vanishing norm, or a combination `b_i + c·b_j` with `c` solving the
/// norm equation with a rational root.
fn find_isotropic(base: &QuadraticSpace, active: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    for b in active {
        if base.pair(b, b).is_zero() {
            return Some(b.clone());
        }
    }
    let k = active.len();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let qii = base.pair(&active[i], &active[i]);
            let qij = base.pair(&active[i], &active[j]);
            let qjj = base.pair(&active[j], &active[j]);
            // q(b_i + c b_j) = qii + 2c qij + c² qjj = 0
            let disc = &qij * &qij - &qii * &qjj;
            let Some(root) = rational_sqrt(&disc) else { continue };
            let c = (-&qij + root) / &qjj;
            let v: Vec<Rat> = active[i]
                .iter()
                .zip(active[j].iter())
                .map(|(a, b)| a + &c * b)
                .collect();
            debug_assert!(base.pair(&v, &v).is_zero());
            return Some(v);
        }
    }
    None
}

/// Derivation action of a skew nilpotent on the degree-k wedge block of
/// the identification `Cl ≅ ⋀•V`.
pub fn so_derivation_action(
    n: &NilpotentOperator,
    wedge_degree: usize,
) -> Result<RationalMatrix, Error> {
    let space = n
        .space()
        .ok_or_else(|| Error::Invalid("derivation action needs an attached quadratic space".into()))?;
    if !is_in_so(n.matrix(), space)? {
        return Err(Error::NotSkew);
    }
    Ok(induced_wedge_power(n.matrix(), wedge_degree))
}

/// Eigenvalue multiset of the Jacobson–Morozov `h` of a nilpotent acting on
/// the even part `Cl⁺ ≅ ⊕ ⋀^{2k} V`, computed blockwise by exact rank.
pub fn cl_plus_h_eigen_multiset(n: &NilpotentOperator) -> Result<BTreeMap<i64, BigUint>, Error> {
    let jm = n.jm_cocharacter()?;
    let m = n.dim();
    let max_eig = jm.eigenvalues.keys().map(|k| k.abs()).max().unwrap_or(0);
    let mut out: BTreeMap<i64, BigUint> = BTreeMap::new();
    for k in (0..=m).step_by(2) {
        let block = induced_wedge_power(&jm.h, k);
        let dim = block.rows();
        let bound = max_eig * k as i64;
        // walk candidates outward from zero; once the eigenspace
        // dimensions account for the whole block the rest must be empty
        let mut candidates = vec![0i64];
        for a in 1..=bound {
            candidates.push(a);
            candidates.push(-a);
        }
        let mut found = 0usize;
        for eig in candidates {
            let shifted = &block - &RationalMatrix::identity(dim).scale(&rat(eig));
            let mult = dim - shifted.rank();
            if mult > 0 {
                *out.entry(eig).or_insert_with(BigUint::zero) += BigUint::from(mult);
                found += mult;
            }
            if found == dim {
                break;
            }
        }
        if found != dim {
            return Err(Error::Inconsistent(format!(
                "wedge block of degree {k} is not semisimple over the integers"
            )));
        }
    }
    Ok(out)
}

/// Sum of the multiplicities of an eigenvalue multiset.
pub fn multiset_total(m: &BTreeMap<i64, BigUint>) -> BigUint {
    m.values().fold(BigUint::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat_frac;
    use crate::nilpotent::{normal_form, NormalFormTag, ReductionType};
    use crate::quad::standard_bbf_gram;

    fn diagonal_space(diag: &[i64]) -> QuadraticSpace {
        let n = diag.len();
        QuadraticSpace::new(RationalMatrix::from_fn(n, n, |r, c| {
            if r == c {
                rat(diag[r])
            } else {
                rat(0)
            }
        }))
        .unwrap()
    }

    #[test]
    fn generator_squares_and_anticommutation() {
        let cl = CliffordAlgebra::new(diagonal_space(&[3, -2, 5])).unwrap();
        let e1 = cl.basis_element(0b001);
        let e2 = cl.basis_element(0b010);
        assert_eq!(cl.mul(&e1, &e1).unwrap(), cl.scalar(rat(3)));
        let e12 = cl.mul(&e1, &e2).unwrap();
        assert_eq!(e12, cl.basis_element(0b011));
        let e21 = cl.mul(&e2, &e1).unwrap();
        assert_eq!(e21, cl.basis_element(0b011).scale(&rat(-1)));
    }

    #[test]
    fn middle_contraction() {
        // (e1 e2)(e2 e3) = ⟨e2,e2⟩ e1 e3
        let cl = CliffordAlgebra::new(diagonal_space(&[1, 7, 1])).unwrap();
        let a = cl.basis_element(0b011);
        let b = cl.basis_element(0b110);
        assert_eq!(cl.mul(&a, &b).unwrap(), cl.basis_element(0b101).scale(&rat(7)));
    }

    #[test]
    fn left_regular_identity_and_generator() {
        let q = standard_bbf_gram(1, false).unwrap(); // hyperbolic plane
        let cl = CliffordAlgebra::new(q).unwrap();
        assert_eq!(cl.left_regular_rep(&cl.one()), RationalMatrix::identity(4));
        let g0 = cl.basis_element(0b01);
        let l = cl.left_regular_rep(&g0);
        let sq = &l * &l;
        assert_eq!(sq, RationalMatrix::identity(4).scale(cl.generator_norm(0)));
    }

    #[test]
    fn left_and_right_regular_commute() {
        let cl = CliffordAlgebra::new(diagonal_space(&[1, -1, 2])).unwrap();
        for s in 0..(1u64 << 3) {
            for t in 0..(1u64 << 3) {
                let l = cl.left_regular_rep(&cl.basis_element(s));
                let r = cl.right_regular_rep(&cl.basis_element(t));
                assert!(l.commutator(&r).is_zero(), "s={s} t={t}");
            }
        }
    }

    #[test]
    fn commutant_check_small() {
        for m in [2usize, 3, 4, 5] {
            let q = standard_bbf_gram(m / 2, m % 2 == 1).unwrap();
            CliffordAlgebra::new(q).unwrap().commutant_check().unwrap();
        }
    }

    #[test]
    fn guard_rejects_large_spaces() {
        let q = standard_bbf_gram(7, false).unwrap(); // 14 generators
        assert!(CliffordAlgebra::new(q).is_err());
    }

    #[test]
    fn orthogonalization_handles_split_forms() {
        let q = standard_bbf_gram(3, true).unwrap();
        let (p, diag) = orthogonalize(&q);
        for i in 0..7 {
            let col = p.col(i);
            assert_eq!(q.pair(&col, &col), diag[i]);
            assert!(!diag[i].is_zero());
            for j in 0..i {
                assert!(q.pair(&col, &p.col(j)).is_zero());
            }
        }
    }

    #[test]
    fn spin_module_dimensions() {
        let plane = standard_bbf_gram(1, false).unwrap();
        assert_eq!(spin_rep(&plane).unwrap().dim(), 2);
        let so7 = standard_bbf_gram(3, true).unwrap();
        assert_eq!(spin_rep(&so7).unwrap().dim(), 8);
        let so6 = standard_bbf_gram(3, false).unwrap();
        assert_eq!(spin_rep(&so6).unwrap().dim(), 8);
    }

    #[test]
    fn spin_rejects_anisotropic_forms() {
        // x² + y² = 0 has no rational solution: no isotropic splitting
        let q = diagonal_space(&[1, 1]);
        assert!(spin_rep(&q).is_err());
    }

    #[test]
    fn spin_vector_action_satisfies_relations() {
        let q = standard_bbf_gram(2, true).unwrap();
        let module = spin_rep(&q).unwrap();
        // relations on the original basis, not just the splitting basis
        let dim = q.dim();
        let basis: Vec<Vec<Rat>> = (0..dim)
            .map(|i| {
                let mut v = vec![rat(0); dim];
                v[i] = rat(1);
                v
            })
            .collect();
        for x in &basis {
            for y in &basis {
                let fx = module.vector_action(x).unwrap();
                let fy = module.vector_action(y).unwrap();
                let anti = &(&fx * &fy) + &(&fy * &fx);
                let expected =
                    RationalMatrix::identity(module.dim()).scale(&(rat(2) * q.pair(x, y)));
                assert_eq!(anti, expected);
            }
        }
    }

    #[test]
    fn so_action_is_lie_homomorphism() {
        let q = standard_bbf_gram(2, false).unwrap();
        let module = spin_rep(&q).unwrap();
        let basis = crate::quad::so_basis(&q);
        for a in basis.iter().take(3) {
            for b in basis.iter().skip(3).take(3) {
                let fa = module.so_action(a).unwrap();
                let fb = module.so_action(b).unwrap();
                let lhs = fa.commutator(&fb);
                let rhs = module.so_action(&a.commutator(b)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn half_spin_split_under_even_part() {
        let q = standard_bbf_gram(3, false).unwrap();
        let module = spin_rep(&q).unwrap();
        let n = normal_form(NormalFormTag { reduction_type: ReductionType::III, b2: 6 }).unwrap();
        let act = module.so_action(n.matrix()).unwrap();
        let (even, odd) = module.half_spin_blocks(&act).unwrap();
        assert_eq!(even.rows(), 4);
        assert_eq!(odd.rows(), 4);
    }

    #[test]
    fn spin_nu_of_normal_forms_so7() {
        let q = standard_bbf_gram(3, true).unwrap();
        let module = spin_rep(&q).unwrap();
        for (t, expected) in [
            (ReductionType::I, 0usize),
            (ReductionType::II, 1),
            (ReductionType::III, 1),
        ] {
            let n = normal_form(NormalFormTag { reduction_type: t, b2: 7 }).unwrap();
            let act = module.so_action(n.matrix()).unwrap();
            assert_eq!(act.nilpotency_index(), Some(expected), "type {t}");
        }
    }

    #[test]
    fn derivation_action_of_zero() {
        let q = standard_bbf_gram(2, false).unwrap();
        let zero = NilpotentOperator::new_in_so(RationalMatrix::zero(4, 4), q).unwrap();
        for k in 0..=4 {
            assert!(so_derivation_action(&zero, k).unwrap().is_zero());
        }
    }

    #[test]
    fn vector_square_is_norm() {
        let q = standard_bbf_gram(2, false).unwrap();
        let cl = CliffordAlgebra::new(q.clone()).unwrap();
        let x = vec![rat(1), rat(2), rat_frac(1, 2), rat(0)];
        let v = cl.vector(&x);
        let sq = cl.mul(&v, &v).unwrap();
        assert_eq!(sq, cl.scalar(q.pair(&x, &x)));
    }
}
