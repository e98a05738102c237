//! The combinatorial consistency engine behind the reduction-type
//! trichotomy: eigenvalue multisets of Clifford/wedge spaces via
//! generating-polynomial dynamic programming, graded dimensions of
//! endomorphism algebras, and the exhaustive enumeration showing that only
//! three profile pairs are consistent.

use crate::matrix::Rat;
use crate::par;
use crate::Error;
use num::{rational::Ratio, BigUint, One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Subset-size parity selector for eigenvalue multisets: even-size subsets
/// model the even Clifford algebra, all subsets the full one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetParity {
    Even,
    All,
}

/// Symmetric graded dimension profile (`counts[i] = counts[-i]`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedProfile {
    counts: BTreeMap<i64, u64>,
}

impl GradedProfile {
    pub fn new(counts: BTreeMap<i64, u64>) -> Result<Self, Error> {
        let counts: BTreeMap<i64, u64> =
            counts.into_iter().filter(|&(_, c)| c > 0).collect();
        for (&i, &c) in &counts {
            if counts.get(&-i).copied().unwrap_or(0) != c {
                return Err(Error::Invalid(format!(
                    "graded profile is not symmetric at weight {i}"
                )));
            }
        }
        Ok(GradedProfile { counts })
    }

    pub fn from_pairs(pairs: &[(i64, u64)]) -> Result<Self, Error> {
        Self::new(pairs.iter().copied().collect())
    }

    pub fn counts(&self) -> &BTreeMap<i64, u64> {
        &self.counts
    }

    pub fn count(&self, i: i64) -> u64 {
        self.counts.get(&i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn max_support(&self) -> i64 {
        self.counts.keys().map(|k| k.abs()).max().unwrap_or(0)
    }

    /// Multiset expansion: each weight repeated by its count.
    pub fn expand(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.total() as usize);
        for (&i, &c) in &self.counts {
            out.extend(std::iter::repeat(i).take(c as usize));
        }
        out
    }
}

/// Occurrence counts of every subset-sum of the multiset `beta`, restricted
/// to even-size subsets or taken over all subsets. Computed as coefficient
/// extraction from `∏_j (1 + t·x^{β_j})`, never materializing the space.
///
/// Totals are `2^{m-1}` for the even selection and `2^m` over all subsets.
pub fn wedge_eigen_multiset(
    beta: &GradedProfile,
    parity: SubsetParity,
) -> BTreeMap<i64, BigUint> {
    let elements = beta.expand();
    // DP over (subset-size parity, sum)
    let mut even: BTreeMap<i64, BigUint> = BTreeMap::from([(0, BigUint::one())]);
    let mut odd: BTreeMap<i64, BigUint> = BTreeMap::new();
    for &b in &elements {
        let mut new_even = even.clone();
        let mut new_odd = odd.clone();
        for (&s, c) in &odd {
            let e = new_even.entry(s + b).or_insert_with(BigUint::zero);
            *e += c;
        }
        for (&s, c) in &even {
            let e = new_odd.entry(s + b).or_insert_with(BigUint::zero);
            *e += c;
        }
        even = new_even;
        odd = new_odd;
    }
    match parity {
        SubsetParity::Even => even,
        SubsetParity::All => {
            for (s, c) in odd {
                let e = even.entry(s).or_insert_with(BigUint::zero);
                *e += c;
            }
            even
        }
    }
}

/// Graded dimensions of `End(H)` for a simple factor with profile `s`:
/// the convolution `gr_i = Σ_{i'+i''=i} s_{i'}·s_{-i''}`. Total is the
/// square of the dimension of `H`.
pub fn end_graded_dims(s: &GradedProfile) -> BTreeMap<i64, BigUint> {
    let mut out = BTreeMap::new();
    for (&a, &ca) in s.counts() {
        for (&b, &cb) in s.counts() {
            let e = out.entry(a - b).or_insert_with(BigUint::zero);
            *e += BigUint::from(ca) * BigUint::from(cb);
        }
    }
    out
}

/// Case labels of the consistency enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseLabel {
    A,
    B,
    C,
    D,
    Other,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::A => "(a)",
            CaseLabel::B => "(b)",
            CaseLabel::C => "(c)",
            CaseLabel::D => "(d)",
            CaseLabel::Other => "(?)",
        }
    }
}

/// A consistent pair of profiles: the degree-two side on the primitive
/// part, and the weight-one side of the simple Clifford module factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistentCase {
    pub label: CaseLabel,
    pub x_profile: GradedProfile,
    pub a_profile: GradedProfile,
    /// `r_1(A) / b_1(A)`, reported as a ratio to avoid committing to the
    /// Kuga–Satake dimension: one of 0, 1/4, 1/2.
    pub a_ratio: Ratio<u64>,
}

fn classify(x: &GradedProfile, b2: usize) -> CaseLabel {
    let (r2, r1, r0) = (x.count(2), x.count(1), x.count(0));
    if r2 == 0 && r1 == 0 && r0 == (b2 - 1) as u64 {
        CaseLabel::A
    } else if r2 == 0 && r1 == 2 && r0 == (b2 as u64).saturating_sub(5) {
        CaseLabel::B
    } else if r2 == 1 && r1 == 0 && r0 == (b2 - 3) as u64 {
        CaseLabel::C
    } else if r2 == 0 && r1 == 1 && r0 == (b2 - 3) as u64 {
        CaseLabel::D
    } else {
        CaseLabel::Other
    }
}

/// Candidate profiles on the primitive part: symmetric, support in
/// [-2, 2], arising from a partition into strings of length at most 3
/// (so `r_0 >= r_2`).
pub fn candidate_x_profiles(b2: usize) -> Vec<GradedProfile> {
    let dim = (b2 - 1) as u64;
    let mut out = Vec::new();
    let mut n3 = 0u64;
    while 3 * n3 <= dim {
        let mut n2 = 0u64;
        while 3 * n3 + 2 * n2 <= dim {
            let n1 = dim - 3 * n3 - 2 * n2;
            let profile = GradedProfile::from_pairs(&[
                (2, n3),
                (1, n2),
                (0, n1 + n3),
                (-1, n2),
                (-2, n3),
            ])
            .expect("string profiles are symmetric");
            out.push(profile);
            n2 += 1;
        }
        n3 += 1;
    }
    out
}

/// Exhaustive consistency enumeration for a given second Betti number:
/// every candidate degree-two profile is matched against every symmetric
/// weight-one profile of the simple module `H` by comparing the graded
/// dimensions of the even (or full, for odd `b2`) Clifford algebra with
/// those of `End(H)`. Exactly the cases (a), (c) survive for `b2 = 4` and
/// (a), (b), (c) for `b2 >= 5`.
pub fn enumerate_reduction_cases(b2: usize) -> Result<Vec<ConsistentCase>, Error> {
    if b2 < 4 {
        return Err(Error::Invalid(format!("enumeration needs b2 >= 4, got {b2}")));
    }
    let parity = if b2 % 2 == 0 { SubsetParity::Even } else { SubsetParity::All };
    // dim H = 2^{(b2-2)/2} for even b2 (even Clifford algebra comparison),
    // 2^{(b2-1)/2} for odd b2 (full Clifford algebra)
    let m: u64 = 1 << ((b2 - 2 + b2 % 2) / 2);

    let candidates = candidate_x_profiles(b2);
    let per_candidate = par::map_collect(candidates, |x| {
        let cl_side = wedge_eigen_multiset(&x, parity);
        let mut matches = Vec::new();
        for s1 in 0..=m / 2 {
            let s0 = m - 2 * s1;
            let a = GradedProfile::from_pairs(&[(1, s1), (0, s0), (-1, s1)])
                .expect("weight-one profiles are symmetric");
            if end_graded_dims(&a) == cl_side {
                matches.push(a);
            }
        }
        (x, matches)
    });

    let mut out = Vec::new();
    for (x, matches) in per_candidate {
        let label = classify(&x, b2);
        for a in matches {
            let ratio = Ratio::new(a.count(1), m);
            out.push(ConsistentCase { label, x_profile: x.clone(), a_profile: a, a_ratio: ratio });
        }
    }
    out.sort_by_key(|c| c.label);
    Ok(out)
}

/// Verifies the enumeration output for one `b2` against the expected case
/// set and graded values; returns the cases on success.
pub fn verify_cases(b2: usize) -> Result<Vec<ConsistentCase>, Error> {
    let cases = enumerate_reduction_cases(b2)?;
    let labels: Vec<CaseLabel> = cases.iter().map(|c| c.label).collect();
    let expected: Vec<CaseLabel> = if b2 == 4 {
        vec![CaseLabel::A, CaseLabel::C]
    } else {
        vec![CaseLabel::A, CaseLabel::B, CaseLabel::C]
    };
    if labels != expected {
        return Err(Error::Inconsistent(format!(
            "b2 = {b2}: consistent case set {labels:?} differs from expected {expected:?}"
        )));
    }
    for case in &cases {
        let (x, a) = (&case.x_profile, &case.a_profile);
        let ok = match case.label {
            CaseLabel::A => {
                x.count(0) == (b2 - 1) as u64
                    && a.count(1) == 0
                    && case.a_ratio == Ratio::new(0, 1)
            }
            CaseLabel::B => {
                x.count(1) == 2
                    && x.count(0) == (b2 - 5) as u64
                    && case.a_ratio == Ratio::new(1, 4)
            }
            CaseLabel::C => {
                x.count(2) == 1
                    && x.count(0) == (b2 - 3) as u64
                    && a.count(0) == 0
                    && case.a_ratio == Ratio::new(1, 2)
            }
            _ => false,
        };
        if !ok {
            return Err(Error::Inconsistent(format!(
                "b2 = {b2}: case {} has unexpected graded values",
                case.label.as_str()
            )));
        }
    }
    Ok(cases)
}

/// Convenience conversion for reporting ratios as exact rationals.
pub fn ratio_to_rat(r: &Ratio<u64>) -> Rat {
    crate::matrix::rat_frac(*r.numer() as i64, *r.denom() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn multiset(pairs: &[(i64, u64)]) -> BTreeMap<i64, BigUint> {
        pairs.iter().map(|&(k, v)| (k, BigUint::from(v))).collect()
    }

    #[test]
    fn wedge_multiset_all_zero_profile() {
        for m in 1..=8u64 {
            let beta = GradedProfile::from_pairs(&[(0, m)]).unwrap();
            let even = wedge_eigen_multiset(&beta, SubsetParity::Even);
            assert_eq!(even, multiset(&[(0, 1 << (m - 1))]));
            let all = wedge_eigen_multiset(&beta, SubsetParity::All);
            assert_eq!(all, multiset(&[(0, 1 << m)]));
        }
    }

    #[test]
    fn wedge_multiset_type_iii_b4() {
        let beta = GradedProfile::from_pairs(&[(2, 1), (0, 1), (-2, 1)]).unwrap();
        let even = wedge_eigen_multiset(&beta, SubsetParity::Even);
        assert_eq!(even, multiset(&[(-2, 1), (0, 2), (2, 1)]));
    }

    #[test]
    fn wedge_multiset_type_ii_b5() {
        let beta = GradedProfile::from_pairs(&[(1, 2), (-1, 2)]).unwrap();
        let even = wedge_eigen_multiset(&beta, SubsetParity::Even);
        assert_eq!(even, multiset(&[(-2, 1), (0, 6), (2, 1)]));
    }

    #[test]
    fn wedge_multiset_totals_and_symmetry() {
        let beta = GradedProfile::from_pairs(&[(2, 2), (1, 3), (0, 4), (-1, 3), (-2, 2)]).unwrap();
        let m = beta.total();
        let even = wedge_eigen_multiset(&beta, SubsetParity::Even);
        assert_eq!(crate::clifford::multiset_total(&even), BigUint::from(1u64 << (m - 1)));
        let all = wedge_eigen_multiset(&beta, SubsetParity::All);
        assert_eq!(crate::clifford::multiset_total(&all), BigUint::from(1u64 << m));
        for (k, v) in &all {
            assert_eq!(all.get(&-k), Some(v), "asymmetric at {k}");
        }
    }

    #[test]
    fn end_dims_examples() {
        let s = GradedProfile::from_pairs(&[(0, 5)]).unwrap();
        assert_eq!(end_graded_dims(&s), multiset(&[(0, 25)]));

        let s = GradedProfile::from_pairs(&[(1, 1), (-1, 1)]).unwrap();
        assert_eq!(end_graded_dims(&s), multiset(&[(-2, 1), (0, 2), (2, 1)]));

        let s = GradedProfile::from_pairs(&[(1, 1), (0, 2), (-1, 1)]).unwrap();
        assert_eq!(
            end_graded_dims(&s),
            multiset(&[(-2, 1), (-1, 4), (0, 6), (1, 4), (2, 1)])
        );
    }

    #[test]
    fn enumeration_b5() {
        let cases = verify_cases(5).unwrap();
        assert_eq!(cases.len(), 3);
        let b = cases.iter().find(|c| c.label == CaseLabel::B).unwrap();
        assert_eq!(b.x_profile.count(1), 2);
        assert_eq!(b.x_profile.count(0), 0);
        assert_eq!(b.a_profile.count(1), 1);
        assert_eq!(b.a_profile.count(0), 2);
    }

    #[test]
    fn enumeration_b4_lacks_case_b() {
        let cases = verify_cases(4).unwrap();
        assert_eq!(cases.len(), 2);
        assert!(cases.iter().all(|c| c.label != CaseLabel::B));
    }

    #[test]
    fn candidate_d_always_inconsistent() {
        for b2 in 4..=12usize {
            let cases = enumerate_reduction_cases(b2).unwrap();
            assert!(
                cases.iter().all(|c| c.label != CaseLabel::D),
                "case (d) matched at b2 = {b2}"
            );
            // (d) really is among the candidates
            assert!(candidate_x_profiles(b2)
                .iter()
                .any(|x| classify(x, b2) == CaseLabel::D));
        }
    }

    #[test]
    fn small_b2_rejected() {
        assert!(enumerate_reduction_cases(3).is_err());
    }

    #[test]
    fn asymmetric_profile_rejected() {
        assert!(GradedProfile::from_pairs(&[(1, 2), (-1, 1)]).is_err());
    }
}
