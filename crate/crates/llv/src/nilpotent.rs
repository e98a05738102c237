//! Nilpotent operators: nilpotency index, monodromy (weight) filtration,
//! graded dimensions, Jacobson–Morozov cocharacters, and the normalized
//! degree-two operators attached to the three reduction types.

use crate::matrix::{rat, vectorize, Rat, RationalMatrix, SpanTracker};
use crate::quad::{is_in_so, so_basis, standard_bbf_gram, QuadraticSpace};
use crate::Error;
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// The three reduction types, indexed by the nilpotency index of the
/// degree-two monodromy operator: 0, 1 or 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReductionType {
    I,
    II,
    III,
}

impl ReductionType {
    pub fn nu2(self) -> usize {
        match self {
            ReductionType::I => 0,
            ReductionType::II => 1,
            ReductionType::III => 2,
        }
    }

    /// Eigenvalue cocharacter of the associated sl2 triple on the degree-two
    /// space, written in epsilon coordinates of rank `r`.
    pub fn cocharacter(self, r: usize) -> Vec<i64> {
        let mut h = vec![0i64; r];
        match self {
            ReductionType::I => {}
            ReductionType::II => {
                assert!(r >= 2, "type II cocharacter needs rank >= 2");
                h[0] = 1;
                h[1] = 1;
            }
            ReductionType::III => {
                assert!(r >= 1);
                h[0] = 2;
            }
        }
        h
    }
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionType::I => write!(f, "I"),
            ReductionType::II => write!(f, "II"),
            ReductionType::III => write!(f, "III"),
        }
    }
}

/// Tag selecting a normalized degree-two operator: a reduction type together
/// with the dimension of the degree-two space it acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormTag {
    pub reduction_type: ReductionType,
    pub b2: usize,
}

/// A nilpotent rational matrix, optionally constrained to be skew for a
/// quadratic space. Nilpotence and skewness are checked on construction.
#[derive(Clone, Debug)]
pub struct NilpotentOperator {
    matrix: RationalMatrix,
    space: Option<QuadraticSpace>,
    nu: usize,
}

impl NilpotentOperator {
    pub fn new(matrix: RationalMatrix) -> Result<Self, Error> {
        if !matrix.is_square() {
            return Err(Error::Dimension("nilpotent operator must be square".into()));
        }
        let nu = matrix.nilpotency_index().ok_or(Error::NotNilpotent)?;
        Ok(NilpotentOperator { matrix, space: None, nu })
    }

    pub fn new_in_so(matrix: RationalMatrix, space: QuadraticSpace) -> Result<Self, Error> {
        if !is_in_so(&matrix, &space)? {
            return Err(Error::NotSkew);
        }
        let mut op = Self::new(matrix)?;
        op.space = Some(space);
        Ok(op)
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn space(&self) -> Option<&QuadraticSpace> {
        self.space.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Smallest `m` with `N^(m+1) = 0`.
    pub fn nu(&self) -> usize {
        self.nu
    }

    /// Dimensions `r_i` of the graded pieces of the weight filtration,
    /// computed from Jordan block counts: a block of size `s` contributes
    /// one to each of the weights `s-1, s-3, ..., -(s-1)`.
    pub fn graded_dims(&self) -> BTreeMap<i64, usize> {
        let d = self.dim();
        let mut ranks = vec![d]; // rank of N^0
        let mut p = RationalMatrix::identity(d);
        loop {
            p = &p * &self.matrix;
            let r = p.rank();
            ranks.push(r);
            if r == 0 {
                break;
            }
        }
        ranks.push(0); // one past the vanishing power
        let mut out = BTreeMap::new();
        for s in 1..ranks.len() - 1 {
            let blocks = ranks[s - 1] + ranks[s + 1] - 2 * ranks[s];
            if blocks == 0 {
                continue;
            }
            let mut w = s as i64 - 1;
            while w >= -(s as i64 - 1) {
                *out.entry(w).or_insert(0) += blocks;
                w -= 2;
            }
        }
        if d == 0 {
            return out;
        }
        debug_assert_eq!(out.values().sum::<usize>(), d);
        out
    }

    /// The monodromy weight filtration: the unique centered increasing
    /// filtration with `N·M_i ⊆ M_{i-2}` and `N^i: gr_i ≅ gr_{-i}`.
    pub fn weight_filtration(&self) -> WeightFiltration {
        let chains = self.jordan_chains();
        let d = self.dim();
        let k = self.nu as i64;
        // weight of chain element t in a chain of length s is (s-1) - 2t
        let mut by_weight: BTreeMap<i64, Vec<Vec<Rat>>> = BTreeMap::new();
        for chain in &chains {
            let s = chain.len() as i64;
            for (t, v) in chain.iter().enumerate() {
                by_weight.entry(s - 1 - 2 * t as i64).or_default().push(v.clone());
            }
        }
        let mut levels = BTreeMap::new();
        let mut acc: Vec<Vec<Rat>> = Vec::new();
        for i in -k..=k {
            if let Some(vs) = by_weight.get(&i) {
                acc.extend(vs.iter().cloned());
            }
            levels.insert(i, acc.clone());
        }
        WeightFiltration { dim: d, range: k, levels, graded: self.graded_dims() }
    }

    /// Jordan chains of the operator, each listed top first:
    /// `v, Nv, ..., N^(s-1)v`.
    fn jordan_chains(&self) -> Vec<Vec<Vec<Rat>>> {
        let d = self.dim();
        let maxlen = self.nu + 1;
        // kernels of powers N^0 .. N^maxlen
        let mut kernels: Vec<Vec<Vec<Rat>>> = vec![Vec::new()];
        let mut p = RationalMatrix::identity(d);
        for _ in 1..=maxlen {
            p = &p * &self.matrix;
            kernels.push(p.kernel_basis());
        }
        let mut chains: Vec<Vec<Vec<Rat>>> = Vec::new();
        let mut carried: Vec<Vec<Rat>> = Vec::new();
        for s in (1..=maxlen).rev() {
            let mut span = SpanTracker::new(d);
            for v in &kernels[s - 1] {
                span.add(v);
            }
            for v in &carried {
                span.add(v);
            }
            let mut tops = Vec::new();
            for v in &kernels[s] {
                if span.add(v) {
                    tops.push(v.clone());
                }
            }
            for top in &tops {
                let mut chain = vec![top.clone()];
                for _ in 1..s {
                    chain.push(self.matrix.apply(chain.last().unwrap()));
                }
                chains.push(chain);
            }
            carried = carried
                .iter()
                .chain(tops.iter())
                .map(|v| self.matrix.apply(v))
                .collect();
        }
        chains
    }

    /// An exact Jacobson–Morozov cocharacter: a semisimple `h` in `so` of
    /// the attached space with `[h, N] = 2N`, its integer eigenvalue
    /// multiset, and the multiset written in epsilon coordinates.
    ///
    /// `h` is found by solving `[[N,z], N] = 2N` for `z` in `so(q)` and
    /// taking `h = [N, z]`; such an `h` always completes to an sl2 triple,
    /// so it is semisimple with eigenvalue multiset equal to the graded
    /// dimensions of the weight filtration.
    pub fn jm_cocharacter(&self) -> Result<JmCocharacter, Error> {
        let q = self
            .space
            .as_ref()
            .ok_or_else(|| Error::Invalid("jm_cocharacter needs an attached quadratic space".into()))?;
        let d = self.dim();
        let basis = so_basis(q);
        // columns: vec([[N, B_k], N]); rhs: vec(2N)
        let cols: Vec<Vec<Rat>> = basis
            .iter()
            .map(|b| vectorize(&self.matrix.commutator(b).commutator(&self.matrix)))
            .collect();
        let sys = RationalMatrix::from_cols(&cols);
        let rhs = vectorize(&self.matrix.scale(&rat(2)));
        let z_coords = sys
            .solve(&rhs)
            .ok_or_else(|| Error::Inconsistent("Jacobson-Morozov system has no solution".into()))?;
        let mut z = RationalMatrix::zero(d, d);
        for (c, b) in z_coords.iter().zip(basis.iter()) {
            if !c.is_zero() {
                z = &z + &b.scale(c);
            }
        }
        let h = self.matrix.commutator(&z);
        debug_assert!(is_in_so(&h, q).unwrap());
        debug_assert_eq!(h.commutator(&self.matrix), self.matrix.scale(&rat(2)));
        // h is semisimple with integer eigenvalues; multiplicity of k is
        // the kernel dimension of h - k.
        let mut eigenvalues = BTreeMap::new();
        let mut total = 0usize;
        for k in -(d as i64)..=(d as i64) {
            let shifted = &h - &RationalMatrix::identity(d).scale(&rat(k));
            let mult = d - shifted.rank();
            if mult > 0 {
                eigenvalues.insert(k, mult);
                total += mult;
            }
        }
        if total != d {
            return Err(Error::Inconsistent("cocharacter is not semisimple".into()));
        }
        let mut coords = Vec::new();
        for (&k, &mult) in eigenvalues.iter().rev() {
            if k > 0 {
                coords.extend(std::iter::repeat(k).take(mult));
            }
        }
        coords.resize(d / 2, 0);
        Ok(JmCocharacter { h, eigenvalues, coords })
    }
}

/// Output of [`NilpotentOperator::jm_cocharacter`].
#[derive(Clone, Debug)]
pub struct JmCocharacter {
    /// Explicit semisimple matrix with `[h, N] = 2N`, skew for the form.
    pub h: RationalMatrix,
    /// Integer eigenvalue -> multiplicity; equals the graded dimensions.
    pub eigenvalues: BTreeMap<i64, usize>,
    /// Non-negative eigenvalues in decreasing order, zero-padded to rank.
    pub coords: Vec<i64>,
}

/// Centered increasing filtration `M_{-k} ⊆ ... ⊆ M_k` given by bases.
#[derive(Clone, Debug)]
pub struct WeightFiltration {
    dim: usize,
    range: i64,
    levels: BTreeMap<i64, Vec<Vec<Rat>>>,
    graded: BTreeMap<i64, usize>,
}

impl WeightFiltration {
    pub fn range(&self) -> i64 {
        self.range
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Basis of `M_i` (empty below `-range`, full above `range`).
    pub fn level_basis(&self, i: i64) -> &[Vec<Rat>] {
        static EMPTY: Vec<Vec<Rat>> = Vec::new();
        if i < -self.range {
            return &EMPTY;
        }
        let i = i.min(self.range);
        &self.levels[&i]
    }

    pub fn level_dim(&self, i: i64) -> usize {
        self.level_basis(i).len()
    }

    pub fn graded_dims(&self) -> &BTreeMap<i64, usize> {
        &self.graded
    }
}

const TYPE_II_MIN_B2: usize = 5;
const TYPE_III_MIN_B2: usize = 4;
const TYPE_I_MIN_B2: usize = 3;

/// The normalized degree-two nilpotent for a reduction type, acting on the
/// split form of [`standard_bbf_gram`].
///
/// Type I is zero. Type II sends `e_1 -> e'_2`, `e_2 -> -e'_1`. Type III
/// sends `e_1 -> e_2 + e'_2`, `e_2 -> -e'_1`, `e'_2 -> -e'_1`.
pub fn normal_form(tag: NormalFormTag) -> Result<NilpotentOperator, Error> {
    let b2 = tag.b2;
    match tag.reduction_type {
        ReductionType::I if b2 < TYPE_I_MIN_B2 => {
            return Err(Error::Invalid(format!("type I normal form needs b2 >= 3, got {b2}")))
        }
        ReductionType::II if b2 < TYPE_II_MIN_B2 => {
            return Err(Error::Invalid(format!("type II reduction forces b2 >= 5, got {b2}")))
        }
        ReductionType::III if b2 < TYPE_III_MIN_B2 => {
            return Err(Error::Invalid(format!("type III reduction forces b2 >= 4, got {b2}")))
        }
        _ => {}
    }
    let r = b2 / 2;
    let space = standard_bbf_gram(r, b2 % 2 == 1)?;
    let matrix = match tag.reduction_type {
        ReductionType::I => RationalMatrix::zero(b2, b2),
        ReductionType::II => type_ii_matrix(b2),
        ReductionType::III => type_iii_matrix(b2),
    };
    NilpotentOperator::new_in_so(matrix, space)
}

/// The type II matrix shape on a split space of the given dimension,
/// without the `b2 >= 5` constraint; realizes the two-string primitive
/// profile (two weight-1 pairs) on any split space of dimension >= 4.
pub fn type_ii_matrix(dim: usize) -> RationalMatrix {
    let r = dim / 2;
    assert!(r >= 2);
    let mut m = RationalMatrix::zero(dim, dim);
    m.set(r + 1, 0, rat(1)); // e_1 -> e'_2
    m.set(r, 1, rat(-1)); // e_2 -> -e'_1
    m
}

/// The type III matrix shape on a split space of the given dimension;
/// realizes the length-3-string primitive profile (weights 2, 0, -2).
pub fn type_iii_matrix(dim: usize) -> RationalMatrix {
    let r = dim / 2;
    assert!(r >= 2);
    let mut m = RationalMatrix::zero(dim, dim);
    m.set(1, 0, rat(1)); // e_1 -> e_2 + e'_2
    m.set(r + 1, 0, rat(1));
    m.set(r, 1, rat(-1)); // e_2 -> -e'_1
    m.set(r, r + 1, rat(-1)); // e'_2 -> -e'_1
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat;

    fn jordan_block(size: usize) -> RationalMatrix {
        RationalMatrix::from_fn(size, size, |r, c| if r == c + 1 { rat(1) } else { rat(0) })
    }

    #[test]
    fn nu_basics() {
        let zero = NilpotentOperator::new(RationalMatrix::zero(4, 4)).unwrap();
        assert_eq!(zero.nu(), 0);
        let ii = normal_form(NormalFormTag { reduction_type: ReductionType::II, b2: 5 }).unwrap();
        assert_eq!(ii.nu(), 1);
        let iii = normal_form(NormalFormTag { reduction_type: ReductionType::III, b2: 4 }).unwrap();
        assert_eq!(iii.nu(), 2);
        assert!(NilpotentOperator::new(RationalMatrix::identity(3)).is_err());
    }

    #[test]
    fn graded_dims_examples() {
        let j3 = NilpotentOperator::new(jordan_block(3)).unwrap();
        assert_eq!(j3.graded_dims(), BTreeMap::from([(2, 1), (0, 1), (-2, 1)]));

        let ii = normal_form(NormalFormTag { reduction_type: ReductionType::II, b2: 5 }).unwrap();
        assert_eq!(ii.graded_dims(), BTreeMap::from([(1, 2), (0, 1), (-1, 2)]));

        let iii = normal_form(NormalFormTag { reduction_type: ReductionType::III, b2: 4 }).unwrap();
        assert_eq!(iii.graded_dims(), BTreeMap::from([(2, 1), (0, 2), (-2, 1)]));
    }

    #[test]
    fn graded_dims_symmetric_and_nu_support() {
        let ii = normal_form(NormalFormTag { reduction_type: ReductionType::II, b2: 8 }).unwrap();
        let g = ii.graded_dims();
        for (&i, &c) in &g {
            assert_eq!(g.get(&-i), Some(&c));
        }
        assert_eq!(*g.keys().max().unwrap() as usize, ii.nu());
    }

    #[test]
    fn filtration_zero_operator() {
        let z = NilpotentOperator::new(RationalMatrix::zero(5, 5)).unwrap();
        let f = z.weight_filtration();
        assert_eq!(f.level_dim(-1), 0);
        assert_eq!(f.level_dim(0), 5);
        assert_eq!(f.graded_dims(), &BTreeMap::from([(0, 5)]));
    }

    #[test]
    fn filtration_single_block() {
        let j3 = NilpotentOperator::new(jordan_block(3)).unwrap();
        let f = j3.weight_filtration();
        let dims: Vec<usize> = (-3..=3).map(|i| f.level_dim(i)).collect();
        assert_eq!(dims, vec![0, 1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn filtration_type_ii() {
        let ii = normal_form(NormalFormTag { reduction_type: ReductionType::II, b2: 5 }).unwrap();
        let f = ii.weight_filtration();
        let dims: Vec<usize> = (-2..=1).map(|i| f.level_dim(i)).collect();
        assert_eq!(dims, vec![0, 2, 3, 5]);
    }

    #[test]
    fn filtration_invariants_on_normal_forms() {
        for (t, b2) in [(ReductionType::II, 6), (ReductionType::III, 7)] {
            let n = normal_form(NormalFormTag { reduction_type: t, b2 }).unwrap();
            let f = n.weight_filtration();
            let k = f.range();
            for i in -k..=k {
                // N M_i ⊆ M_{i-2}
                let mut span = SpanTracker::new(n.dim());
                for v in f.level_basis(i - 2) {
                    span.add(v);
                }
                for v in f.level_basis(i) {
                    assert!(span.contains(&n.matrix().apply(v)), "type {t} i={i}");
                }
            }
            // graded dims agree with the Jordan-count computation
            assert_eq!(f.graded_dims(), &n.graded_dims());
        }
    }

    #[test]
    fn self_duality_of_filtration() {
        // M_i is the q-orthogonal complement of M_{-i-1}
        for (t, b2) in [(ReductionType::II, 5), (ReductionType::III, 4), (ReductionType::III, 7)] {
            let n = normal_form(NormalFormTag { reduction_type: t, b2 }).unwrap();
            let q = n.space().unwrap().clone();
            let f = n.weight_filtration();
            for i in -f.range()..=f.range() {
                let other = f.level_basis(-i - 1);
                // pairing matrix of M_i against M_{-i-1} must vanish, and
                // dim M_i + dim M_{-i-1} = dim (complement exactness)
                for v in f.level_basis(i) {
                    for w in other {
                        assert!(q.pair(v, w).is_zero(), "type {t} b2={b2} i={i}");
                    }
                }
                assert_eq!(f.level_dim(i) + f.level_dim(-i - 1), n.dim());
            }
        }
    }

    #[test]
    fn jm_cocharacter_type_ii_and_iii() {
        let ii = normal_form(NormalFormTag { reduction_type: ReductionType::II, b2: 5 }).unwrap();
        let jm = ii.jm_cocharacter().unwrap();
        assert_eq!(jm.eigenvalues, BTreeMap::from([(1, 2), (0, 1), (-1, 2)]));
        assert_eq!(jm.coords, vec![1, 1]);
        assert!(is_in_so(&jm.h, ii.space().unwrap()).unwrap());
        assert_eq!(jm.h.commutator(ii.matrix()), ii.matrix().scale(&rat(2)));

        let iii = normal_form(NormalFormTag { reduction_type: ReductionType::III, b2: 6 }).unwrap();
        let jm = iii.jm_cocharacter().unwrap();
        assert_eq!(jm.eigenvalues, BTreeMap::from([(2, 1), (0, 4), (-2, 1)]));
        assert_eq!(jm.coords, vec![2, 0, 0]);
    }

    #[test]
    fn jm_cocharacter_zero() {
        let q = standard_bbf_gram(2, false).unwrap();
        let z = NilpotentOperator::new_in_so(RationalMatrix::zero(4, 4), q).unwrap();
        let jm = z.jm_cocharacter().unwrap();
        assert!(jm.h.is_zero());
        assert_eq!(jm.coords, vec![0, 0]);
    }

    #[test]
    fn normal_form_examples() {
        let i7 = normal_form(NormalFormTag { reduction_type: ReductionType::I, b2: 7 }).unwrap();
        assert!(i7.matrix().is_zero());
        assert_eq!(i7.dim(), 7);

        let ii5 = normal_form(NormalFormTag { reduction_type: ReductionType::II, b2: 5 }).unwrap();
        assert_eq!(ii5.nu(), 1);
        assert_eq!(ii5.matrix().rank(), 2);
        assert_eq!(ii5.matrix().kernel_basis().len(), 3);

        let iii4 = normal_form(NormalFormTag { reduction_type: ReductionType::III, b2: 4 }).unwrap();
        assert_eq!(iii4.nu(), 2);
        assert_eq!(iii4.matrix().rank(), 2);
        assert_eq!(iii4.matrix().pow(2).rank(), 1);

        assert!(normal_form(NormalFormTag { reduction_type: ReductionType::II, b2: 4 }).is_err());
        assert!(normal_form(NormalFormTag { reduction_type: ReductionType::III, b2: 3 }).is_err());
    }

    #[test]
    fn rank_two_space_admits_no_nonzero_nilpotent() {
        // the degenerate case b2 = 3: on the 2-dimensional primitive part,
        // every nilpotent skew operator vanishes
        let q = standard_bbf_gram(1, false).unwrap();
        let n = RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(NilpotentOperator::new_in_so(n, q.clone()).is_err());
        for b in so_basis(&q) {
            if !b.is_zero() {
                assert!(b.nilpotency_index().is_none());
            }
        }
    }
}
