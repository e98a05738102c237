//! Dominant weights for the orthogonal root systems of types B and D:
//! Weyl-orbit maximization over signed permutations, the nilpotency index
//! of a nilpotent acting on an irreducible highest-weight module,
//! Freudenthal weight multiplicities, and the grade-and-branch restriction
//! from the rank r+1 system to the rank r one.

use crate::matrix::{Rat, rat_frac};
use crate::Error;
use num::{BigInt, BigUint, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Root-system family: `B` models odd orthogonal algebras, `D` even ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    B,
    D,
}

/// A root system of type B_r or D_r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let min = match family {
            Family::B => 1,
            Family::D => 2,
        };
        if rank < min {
            return Err(Error::Invalid(format!("{family:?}-type needs rank >= {min}, got {rank}")));
        }
        Ok(RootSystem { family, rank })
    }

    /// The root system of `so(n)` for a space of dimension `n`.
    pub fn for_so(space_dim: usize) -> Result<Self, Error> {
        if space_dim % 2 == 1 {
            Self::new(Family::B, space_dim / 2)
        } else {
            Self::new(Family::D, space_dim / 2)
        }
    }

    /// Dimension of the defining quadratic space.
    pub fn space_dim(&self) -> usize {
        match self.family {
            Family::B => 2 * self.rank + 1,
            Family::D => 2 * self.rank,
        }
    }

    /// Positive roots in doubled epsilon coordinates.
    pub fn positive_roots_doubled(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut roots = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                for sign in [1i64, -1] {
                    let mut root = vec![0i64; r];
                    root[i] = 2;
                    root[j] = 2 * sign;
                    roots.push(root);
                }
            }
        }
        if self.family == Family::B {
            for i in 0..r {
                let mut root = vec![0i64; r];
                root[i] = 2;
                roots.push(root);
            }
        }
        roots
    }

    /// Half the sum of positive roots, in doubled coordinates.
    pub fn rho_doubled(&self) -> Vec<i64> {
        let r = self.rank as i64;
        match self.family {
            Family::B => (0..r).map(|i| 2 * (r - i) - 1).collect(),
            Family::D => (0..r).map(|i| 2 * (r - i - 1)).collect(),
        }
    }
}

/// Dominance check in the sense of the B/D parametrization: coordinates are
/// half-integers with pairwise integer differences, weakly decreasing, with
/// the last coordinate non-negative (B) or bounded by the previous one in
/// absolute value (D).
pub fn is_dominant(coords: &[Rat], rs: &RootSystem) -> bool {
    if coords.len() != rs.rank {
        return false;
    }
    let Some(doubled) = to_doubled(coords) else {
        return false;
    };
    is_dominant_doubled(&doubled, rs)
}

fn to_doubled(coords: &[Rat]) -> Option<Vec<i64>> {
    let two = BigInt::from(2);
    let mut out = Vec::with_capacity(coords.len());
    for c in coords {
        let d = c.numer() * &two;
        if !(&d % c.denom()).is_zero() {
            return None; // not a half-integer
        }
        let q: BigInt = d / c.denom();
        out.push(i64::try_from(&q).ok()?);
    }
    Some(out)
}

fn is_dominant_doubled(d: &[i64], rs: &RootSystem) -> bool {
    if d.len() != rs.rank {
        return false;
    }
    if !d.iter().all(|x| (x - d[0]) % 2 == 0) {
        return false; // mixed parity
    }
    let r = d.len();
    for i in 0..r.saturating_sub(1) {
        if d[i] < d[i + 1] {
            return false;
        }
    }
    match rs.family {
        Family::B => d[r - 1] >= 0,
        Family::D => r < 2 || d[r - 2] >= d[r - 1].abs(),
    }
}

/// A dominant weight, stored in doubled coordinates so that half-integral
/// spin weights stay exact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HighestWeight {
    doubled: Vec<i64>,
}

impl HighestWeight {
    pub fn new(coords: &[Rat], rs: &RootSystem) -> Result<Self, Error> {
        let doubled = to_doubled(coords)
            .ok_or_else(|| Error::Invalid("weight coordinates must be half-integers".into()))?;
        Self::from_doubled(doubled, rs)
    }

    pub fn from_doubled(doubled: Vec<i64>, rs: &RootSystem) -> Result<Self, Error> {
        if !is_dominant_doubled(&doubled, rs) {
            return Err(Error::Invalid(format!(
                "not a dominant {family:?}{rank} weight: {doubled:?} (doubled coordinates)",
                family = rs.family,
                rank = rs.rank
            )));
        }
        Ok(HighestWeight { doubled })
    }

    /// Integer-coordinate convenience constructor.
    pub fn from_ints(coords: &[i64], rs: &RootSystem) -> Result<Self, Error> {
        Self::from_doubled(coords.iter().map(|c| 2 * c).collect(), rs)
    }

    pub fn zero(rank: usize) -> Self {
        HighestWeight { doubled: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.doubled.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn coords(&self) -> Vec<Rat> {
        self.doubled.iter().map(|&d| rat_frac(d, 2)).collect()
    }

    /// Coordinate as a rational; zero beyond the rank (trailing zeros are
    /// conventionally omitted from weight labels).
    pub fn coord(&self, i: usize) -> Rat {
        rat_frac(self.doubled.get(i).copied().unwrap_or(0), 2)
    }

    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|d| d % 2 == 0)
    }

    pub fn is_half_integral(&self) -> bool {
        self.doubled.iter().all(|d| d % 2 != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(|&d| d == 0)
    }

    /// Mirror weight with the last coordinate negated (D-type ambiguity).
    pub fn mirror(&self) -> Self {
        let mut d = self.doubled.clone();
        if let Some(last) = d.last_mut() {
            *last = -*last;
        }
        HighestWeight { doubled: d }
    }

    /// Representative with non-negative last coordinate, plus whether the
    /// weight was mirrored to get there.
    pub fn normalized(&self) -> (Self, bool) {
        if self.doubled.last().is_some_and(|&l| l < 0) {
            (self.mirror(), true)
        } else {
            (self.clone(), false)
        }
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.coords().iter().map(crate::matrix::format_rat).collect();
        format!("({})", parts.join(","))
    }
}

/// Parity of a cohomological degree; even degrees carry integral weights,
/// odd degrees strictly half-integral ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeParity {
    Even,
    Odd,
}

/// True iff the weight's coordinate parity matches the degree parity.
pub fn parity_check(weight: &HighestWeight, parity: DegreeParity) -> bool {
    match parity {
        DegreeParity::Even => weight.is_integral(),
        DegreeParity::Odd => weight.is_half_integral(),
    }
}

/// `max_w ⟨w(λ), h⟩` over the Weyl group of signed permutations
/// (unrestricted signs for B, an even number of sign changes for D).
///
/// For B the maximum pairs the sorted absolute values of λ and h. For D the
/// same value is attained unless every coordinate of both vectors is
/// nonzero and the optimal signing has odd parity, in which case the
/// smallest product in the sorted pairing is flipped.
pub fn weyl_orbit_max(lambda: &HighestWeight, h: &[i64], rs: &RootSystem) -> Result<Rat, Error> {
    if lambda.rank() != rs.rank || h.len() != rs.rank {
        return Err(Error::Dimension(format!(
            "weight rank {}, cocharacter length {}, system rank {}",
            lambda.rank(),
            h.len(),
            rs.rank
        )));
    }
    let mut a: Vec<i64> = lambda.doubled().iter().map(|x| x.abs()).collect();
    let mut b: Vec<i64> = h.iter().map(|x| x.abs()).collect();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    let mut value: i64 = a.iter().zip(b.iter()).map(|(x, y)| x * y).sum();
    if rs.family == Family::D {
        let all_nonzero =
            lambda.doubled().iter().all(|&x| x != 0) && h.iter().all(|&x| x != 0);
        if all_nonzero {
            let negatives = lambda.doubled().iter().filter(|&&x| x < 0).count()
                + h.iter().filter(|&&x| x < 0).count();
            if negatives % 2 == 1 {
                let r = rs.rank;
                value -= 2 * a[r - 1] * b[r - 1];
            }
        }
    }
    Ok(rat_frac(value, 2))
}

/// Nilpotency index of the image of a nilpotent with the given
/// Jacobson–Morozov cocharacter on the irreducible module `V_λ`: the
/// maximal h-weight of the module, i.e. the Weyl-orbit maximum.
///
/// For the type II cocharacter `(1,1,0,...)` and integral λ this is
/// exactly `λ_1 + λ_2`.
pub fn nu_on_irrep(lambda: &HighestWeight, h: &[i64], rs: &RootSystem) -> Result<Rat, Error> {
    weyl_orbit_max(lambda, h, rs)
}

type MultTable = HashMap<Vec<i64>, u128>;

fn mult_cache() -> &'static Mutex<HashMap<(Family, usize, Vec<i64>), Arc<MultTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<(Family, usize, Vec<i64>), Arc<MultTable>>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Dominant weight of the Weyl orbit of an arbitrary doubled weight vector.
fn dominantize(v: &[i64], family: Family) -> Vec<i64> {
    let mut abs: Vec<i64> = v.iter().map(|x| x.abs()).collect();
    abs.sort_unstable_by(|x, y| y.cmp(x));
    if family == Family::D {
        let negatives = v.iter().filter(|&&x| x < 0).count();
        let has_zero = abs.last().is_some_and(|&x| x == 0);
        if negatives % 2 == 1 && !has_zero {
            if let Some(last) = abs.last_mut() {
                *last = -*last;
            }
        }
    }
    abs
}

/// Coefficients of `λ - μ` over the simple roots; `None` when `μ ≰ λ`.
fn dominance_coefficients(lam: &[i64], mu: &[i64], rs: &RootSystem) -> Option<Vec<i64>> {
    let r = rs.rank;
    let delta: Vec<i64> = lam.iter().zip(mu.iter()).map(|(a, b)| a - b).collect();
    let mut partial = Vec::with_capacity(r);
    let mut s = 0i64;
    for d in &delta {
        s += d;
        partial.push(s);
    }
    let mut c = Vec::with_capacity(r);
    match rs.family {
        Family::B => {
            // simple roots e_i - e_{i+1} and e_r; doubled partial sums are
            // twice the coefficients
            for &p in &partial {
                if p < 0 || p % 2 != 0 {
                    return None;
                }
                c.push(p / 2);
            }
        }
        Family::D => {
            for &p in partial.iter().take(r.saturating_sub(2)) {
                if p < 0 || p % 2 != 0 {
                    return None;
                }
                c.push(p / 2);
            }
            let s_pre = partial[r - 2];
            let d_last = delta[r - 1];
            let (num_a, num_b) = (s_pre - d_last, s_pre + d_last);
            if num_a < 0 || num_b < 0 || num_a % 4 != 0 || num_b % 4 != 0 {
                return None;
            }
            c.push(num_a / 4);
            c.push(num_b / 4);
        }
    }
    Some(c)
}

/// All dominant weights `μ ≤ λ` (doubled coordinates) with the height of
/// `λ - μ` attached.
fn dominant_weights_below(lam: &[i64], rs: &RootSystem) -> Vec<(Vec<i64>, i64)> {
    let r = rs.rank;
    let parity = lam[0].rem_euclid(2);
    let mut prefix_lam = Vec::with_capacity(r);
    let mut s = 0i64;
    for &x in lam {
        s += x;
        prefix_lam.push(s);
    }
    let mut out = Vec::new();
    let mut cur: Vec<i64> = Vec::with_capacity(r);

    fn rec(
        lam: &[i64],
        prefix_lam: &[i64],
        rs: &RootSystem,
        parity: i64,
        cur: &mut Vec<i64>,
        sum: i64,
        out: &mut Vec<(Vec<i64>, i64)>,
    ) {
        let r = rs.rank;
        let pos = cur.len();
        if pos == r {
            if let Some(c) = dominance_coefficients(lam, cur, rs) {
                out.push((cur.clone(), c.iter().sum()));
            }
            return;
        }
        let hi = if pos == 0 { lam[0].abs() } else { cur[pos - 1] };
        let is_last = pos + 1 == r;
        let mut v = hi - (hi - parity).rem_euclid(2);
        while v >= 0 {
            // prefix-sum pruning: partial sums of λ dominate those of μ
            let needed_prefix = if is_last && rs.family == Family::D {
                // the last D coordinate is constrained by two conditions
                // checked in dominance_coefficients; no pruning here
                true
            } else {
                sum + v <= prefix_lam[pos]
            };
            if needed_prefix {
                cur.push(v);
                rec(lam, prefix_lam, rs, parity, cur, sum + v, out);
                cur.pop();
                if is_last && v > 0 && rs.family == Family::D {
                    cur.push(-v);
                    rec(lam, prefix_lam, rs, parity, cur, sum - v, out);
                    cur.pop();
                }
            }
            v -= 2;
        }
    }
    rec(lam, &prefix_lam, rs, parity, &mut cur, 0, &mut out);
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Freudenthal's recursion: multiplicities of all dominant weights of the
/// irreducible module with highest weight λ, keyed by doubled coordinates.
fn multiplicity_table(lam: &[i64], rs: &RootSystem) -> Arc<MultTable> {
    let key = (rs.family, rs.rank, lam.to_vec());
    if let Some(t) = mult_cache().lock().unwrap().get(&key) {
        return Arc::clone(t);
    }
    let rho = rs.rho_doubled();
    let roots = rs.positive_roots_doubled();
    let lam_rho: Vec<i64> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let lam_rho_norm = dot(&lam_rho, &lam_rho);

    let mut below = dominant_weights_below(lam, rs);
    below.sort_by_key(|(w, h)| (*h, w.clone()));

    let mut table: MultTable = HashMap::new();
    for (mu, height) in &below {
        if *height == 0 {
            table.insert(mu.clone(), 1);
            continue;
        }
        let mu_rho: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let denom = lam_rho_norm - dot(&mu_rho, &mu_rho);
        debug_assert!(denom > 0);
        let mut rhs: i128 = 0;
        for alpha in &roots {
            let mut k = 1i64;
            loop {
                let shifted: Vec<i64> =
                    mu.iter().zip(alpha).map(|(m, a)| m + k * a).collect();
                let rep = dominantize(&shifted, rs.family);
                let Some(&m) = table.get(&rep) else { break };
                rhs += 2 * (m as i128) * (dot(&shifted, alpha) as i128);
                k += 1;
            }
        }
        debug_assert_eq!(rhs % denom as i128, 0, "Freudenthal division must be exact");
        let m = (rhs / denom as i128) as u128;
        debug_assert!(m >= 1);
        table.insert(mu.clone(), m);
    }
    let arc = Arc::new(table);
    mult_cache().lock().unwrap().insert(key, Arc::clone(&arc));
    arc
}

/// Multiplicities of the dominant weights of `V_λ`.
pub fn weight_multiplicities(
    lambda: &HighestWeight,
    rs: &RootSystem,
) -> Result<BTreeMap<HighestWeight, BigUint>, Error> {
    if lambda.rank() != rs.rank {
        return Err(Error::Dimension("weight rank does not match the root system".into()));
    }
    let table = multiplicity_table(lambda.doubled(), rs);
    Ok(table
        .iter()
        .map(|(w, &m)| (HighestWeight { doubled: w.clone() }, BigUint::from(m)))
        .collect())
}

/// Size of the Weyl orbit of a dominant weight.
pub fn orbit_size(weight: &HighestWeight, rs: &RootSystem) -> BigUint {
    let d = weight.doubled();
    let r = rs.rank;
    let zeros = d.iter().filter(|&&x| x == 0).count();
    let mut counts: HashMap<i64, usize> = HashMap::new();
    for &x in d {
        if x != 0 {
            *counts.entry(x.abs()).or_insert(0) += 1;
        }
    }
    let mut size = factorial(r);
    size /= factorial(zeros);
    for &c in counts.values() {
        size /= factorial(c);
    }
    let mut flips = r - zeros;
    if rs.family == Family::D && zeros == 0 && flips > 0 {
        flips -= 1;
    }
    size * BigUint::from(2u32).pow(flips as u32)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Dimension of `V_λ` by the Weyl dimension formula.
pub fn irrep_dim(lambda: &HighestWeight, rs: &RootSystem) -> BigUint {
    let rho = rs.rho_doubled();
    let lam_rho: Vec<i64> = lambda.doubled().iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in rs.positive_roots_doubled() {
        num *= BigInt::from(dot(&lam_rho, &alpha));
        den *= BigInt::from(dot(&rho, &alpha));
    }
    let q = num / den;
    q.to_biguint().expect("Weyl dimension is positive")
}

/// Total dimension recomputed from a multiplicity table and orbit sizes.
pub fn dim_from_multiplicities(
    mults: &BTreeMap<HighestWeight, BigUint>,
    rs: &RootSystem,
) -> BigUint {
    mults
        .iter()
        .map(|(w, m)| orbit_size(w, rs) * m)
        .fold(BigUint::zero(), |a, b| a + b)
}

/// One irreducible constituent of a graded restriction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchComponent {
    /// Target-dominant weight as peeled (the last coordinate may be
    /// negative in type D).
    pub weight: HighestWeight,
    pub mult: u64,
}

/// Restriction of the ambient irreducible `V_μ` (rank r+1) to the rank-r
/// subsystem, graded by the eigenvalue of the degree operator `h`.
///
/// Keys are h-eigenvalues: the weight with first coordinate `c` sits at
/// eigenvalue `-2c`, so the extreme piece is at `-2μ_0` and degree `2i`
/// of a module centered at `2n` corresponds to eigenvalue `2i - 2n`.
pub fn grade_and_branch(
    mu: &HighestWeight,
    ambient: &RootSystem,
    target: &RootSystem,
) -> Result<BTreeMap<i64, Vec<BranchComponent>>, Error> {
    if ambient.family != target.family || ambient.rank != target.rank + 1 {
        return Err(Error::Invalid(format!(
            "branching needs matching families and rank drop one: {:?}{} -> {:?}{}",
            ambient.family, ambient.rank, target.family, target.rank
        )));
    }
    if mu.rank() != ambient.rank {
        return Err(Error::Dimension("weight rank does not match the ambient system".into()));
    }
    let table = multiplicity_table(mu.doubled(), ambient);

    // restrict each ambient orbit to the vectors whose tail is
    // target-dominant, bucketed by the first coordinate
    let mut graded: BTreeMap<i64, HashMap<Vec<i64>, i128>> = BTreeMap::new();
    for (omega, &mult) in table.iter() {
        let omega_negatives = omega.iter().filter(|&&x| x < 0).count();
        let mut abs: Vec<i64> = omega.iter().map(|x| x.abs()).collect();
        abs.sort_unstable_by(|x, y| y.cmp(x));
        let mut seen_values: Vec<i64> = Vec::new();
        for slot in 0..abs.len() {
            let v = abs[slot];
            if seen_values.contains(&v) {
                continue;
            }
            seen_values.push(v);
            let mut tail: Vec<i64> = Vec::with_capacity(abs.len() - 1);
            tail.extend_from_slice(&abs[..slot]);
            tail.extend_from_slice(&abs[slot + 1..]);
            let signs: &[i64] = if v == 0 { &[1] } else { &[1, -1] };
            for &s in signs {
                let gamma = s * v;
                let mut tails: Vec<Vec<i64>> = vec![tail.clone()];
                if target.family == Family::D && tail.last().is_some_and(|&l| l != 0) {
                    let mut m = tail.clone();
                    *m.last_mut().unwrap() *= -1;
                    tails.push(m);
                }
                for t in tails {
                    if ambient.family == Family::D {
                        let any_zero = gamma == 0 || t.iter().any(|&x| x == 0);
                        if !any_zero {
                            let negs = usize::from(gamma < 0)
                                + t.iter().filter(|&&x| x < 0).count();
                            if negs % 2 != omega_negatives % 2 {
                                continue; // not in the ambient Weyl orbit
                            }
                        }
                    }
                    // h-eigenvalue of a weight with first coordinate gamma/2
                    let h_eig = -gamma;
                    *graded.entry(h_eig).or_default().entry(t).or_insert(0) += mult as i128;
                }
            }
        }
    }

    let mut out = BTreeMap::new();
    for (h_eig, residual) in graded {
        out.insert(h_eig, peel(residual, target)?);
    }
    Ok(out)
}

/// Decomposes a target-dominant character table into irreducibles by
/// repeated highest-weight subtraction.
fn peel(mut residual: HashMap<Vec<i64>, i128>, target: &RootSystem) -> Result<Vec<BranchComponent>, Error> {
    let rho = target.rho_doubled();
    let mut components = Vec::new();
    loop {
        residual.retain(|_, m| *m != 0);
        if residual.is_empty() {
            break;
        }
        // maximal |w + rho|^2 entry is a genuine component
        let top = residual
            .keys()
            .max_by_key(|w| {
                let wr: Vec<i64> = w.iter().zip(&rho).map(|(a, b)| a + b).collect();
                (dot(&wr, &wr), (*w).clone())
            })
            .cloned()
            .expect("nonempty residual");
        let mult = residual[&top];
        if mult < 0 {
            return Err(Error::Inconsistent(format!(
                "negative residual multiplicity {mult} at {top:?} while peeling"
            )));
        }
        let table = multiplicity_table(&top, target);
        for (w, &m) in table.iter() {
            let entry = residual.entry(w.clone()).or_insert(0);
            *entry -= mult * m as i128;
            if *entry < 0 {
                return Err(Error::Inconsistent(format!(
                    "character peeling went negative at {w:?}"
                )));
            }
        }
        components.push(BranchComponent {
            weight: HighestWeight { doubled: top },
            mult: u64::try_from(mult).map_err(|_| {
                Error::Inconsistent("component multiplicity exceeds u64".into())
            })?,
        });
    }
    components.sort_by(|a, b| b.weight.cmp(&a.weight));
    Ok(components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat;

    fn bsys(r: usize) -> RootSystem {
        RootSystem::new(Family::B, r).unwrap()
    }

    fn dsys(r: usize) -> RootSystem {
        RootSystem::new(Family::D, r).unwrap()
    }

    fn w(coords: &[i64], rs: &RootSystem) -> HighestWeight {
        HighestWeight::from_ints(coords, rs).unwrap()
    }

    fn half(doubled: &[i64], rs: &RootSystem) -> HighestWeight {
        HighestWeight::from_doubled(doubled.to_vec(), rs).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(is_dominant(&[rat(2), rat(1), rat(0)], &bsys(3)));
        assert!(is_dominant(&[rat(1), rat(1), rat(-1)], &dsys(3)));
        assert!(!is_dominant(&[rat(1), rat(2)], &bsys(2)));
        assert!(!is_dominant(&[rat(1), rat(-1)], &bsys(2)));
        // mixed parity rejected
        assert!(!is_dominant(&[rat(1), rat_frac(1, 2)], &bsys(2)));
        assert!(HighestWeight::new(&[rat(1), rat_frac(1, 2)], &bsys(2)).is_err());
    }

    // brute force over the full signed-permutation Weyl group
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    pub(crate) fn brute_force_orbit_max(lambda: &HighestWeight, h: &[i64], rs: &RootSystem) -> Rat {
        let r = rs.rank;
        let d = lambda.doubled();
        let mut best: Option<i64> = None;
        for perm in permutations(r) {
            for mask in 0u32..(1 << r) {
                if rs.family == Family::D && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let mut value = 0i64;
                for i in 0..r {
                    let sign = if mask & (1 << i) != 0 { -1 } else { 1 };
                    value += sign * d[perm[i]] * h[i];
                }
                best = Some(best.map_or(value, |b: i64| b.max(value)));
            }
        }
        rat_frac(best.unwrap(), 2)
    }

    #[test]
    fn weyl_orbit_max_examples() {
        let rs = bsys(3);
        let lam = w(&[4, 0, 0], &rs);
        assert_eq!(weyl_orbit_max(&lam, &[1, 1, 0], &rs).unwrap(), rat(4));
        assert_eq!(weyl_orbit_max(&lam, &[0, 0, 0], &rs).unwrap(), rat(0));

        // D2 parity blocks the unrestricted value 2
        let d2 = dsys(2);
        let lam = w(&[1, 1], &d2);
        assert_eq!(weyl_orbit_max(&lam, &[1, -1], &d2).unwrap(), rat(0));
        assert_eq!(weyl_orbit_max(&lam, &[1, 1], &d2).unwrap(), rat(2));
    }

    #[test]
    fn weyl_orbit_max_matches_brute_force() {
        let mut cases = Vec::new();
        for family in [Family::B, Family::D] {
            for r in 2..=4usize {
                let rs = RootSystem::new(family, r).unwrap();
                // a spread of weights and cocharacters incl. zeros and the
                // negative-last-coordinate D weights
                let mut lams = vec![vec![3, 1, 0, 0], vec![2, 2, 1, 0], vec![1, 1, 1, 1], vec![5, 0, 0, 0]];
                if family == Family::D {
                    lams.push(vec![2, 1, 1, -1]);
                    lams.push(vec![3, 2, 1, -1]);
                }
                let hs = [
                    vec![1, 1, 0, 0],
                    vec![2, 0, 0, 0],
                    vec![3, -1, 2, 1],
                    vec![-1, -1, -1, -1],
                    vec![0, 2, -2, 1],
                ];
                for lam in &lams {
                    let lam = &lam[..r];
                    if !is_dominant_doubled(&lam.iter().map(|x| 2 * x).collect::<Vec<_>>(), &rs) {
                        continue;
                    }
                    for h in &hs {
                        cases.push((rs, w(lam, &rs), h[..r].to_vec()));
                    }
                }
            }
        }
        for (rs, lam, h) in cases {
            let fast = weyl_orbit_max(&lam, &h, &rs).unwrap();
            let slow = brute_force_orbit_max(&lam, &h, &rs);
            assert_eq!(fast, slow, "{:?} lam {:?} h {:?}", rs, lam, h);
        }
    }

    #[test]
    fn nu_on_irrep_examples() {
        let b3 = bsys(3);
        // λ = (n): type II cocharacter gives n
        for n in 0..=5 {
            let lam = w(&[n, 0, 0], &b3);
            assert_eq!(nu_on_irrep(&lam, &[1, 1, 0], &b3).unwrap(), rat(n));
        }
        // spin weight with the type III cocharacter
        let spin = half(&[1, 1, 1], &b3);
        assert_eq!(nu_on_irrep(&spin, &[2, 0, 0], &b3).unwrap(), rat(1));
        assert_eq!(nu_on_irrep(&spin, &[1, 1, 0], &b3).unwrap(), rat(1));
        let zero = HighestWeight::zero(3);
        assert_eq!(nu_on_irrep(&zero, &[1, 1, 0], &b3).unwrap(), rat(0));
    }

    #[test]
    fn lemma_type_ii_identity_random_integral() {
        // ν on V_λ under the (1,1,0,..) cocharacter equals λ1 + λ2
        for r in 2..=5usize {
            let rs = bsys(r);
            let mut h = vec![0i64; r];
            h[0] = 1;
            h[1] = 1;
            let samples: Vec<Vec<i64>> = vec![
                vec![4, 2, 1, 1, 0],
                vec![3, 3, 2, 0, 0],
                vec![2, 0, 0, 0, 0],
                vec![5, 1, 1, 1, 1],
            ];
            for s in samples {
                let lam = w(&s[..r], &rs);
                let got = nu_on_irrep(&lam, &h, &rs).unwrap();
                assert_eq!(got, rat(s[0] + s[1]));
            }
        }
    }

    #[test]
    fn multiplicities_standard_rep() {
        let rs = bsys(3);
        let std = w(&[1, 0, 0], &rs);
        let m = weight_multiplicities(&std, &rs).unwrap();
        assert_eq!(m.len(), 2); // (1,0,0) and (0,0,0)
        assert_eq!(m[&std], BigUint::one());
        assert_eq!(m[&HighestWeight::zero(3)], BigUint::one());
        assert_eq!(dim_from_multiplicities(&m, &rs), BigUint::from(7u32));
        assert_eq!(irrep_dim(&std, &rs), BigUint::from(7u32));
    }

    #[test]
    fn multiplicities_adjoint_b3() {
        let rs = bsys(3);
        let adj = w(&[1, 1, 0], &rs);
        let m = weight_multiplicities(&adj, &rs).unwrap();
        assert_eq!(m[&HighestWeight::zero(3)], BigUint::from(3u32));
        assert_eq!(irrep_dim(&adj, &rs), BigUint::from(21u32));
        assert_eq!(dim_from_multiplicities(&m, &rs), BigUint::from(21u32));
    }

    #[test]
    fn multiplicities_spin_b3() {
        let rs = bsys(3);
        let spin = half(&[1, 1, 1], &rs);
        let m = weight_multiplicities(&spin, &rs).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[&spin], BigUint::one());
        assert_eq!(orbit_size(&spin, &rs), BigUint::from(8u32));
        assert_eq!(irrep_dim(&spin, &rs), BigUint::from(8u32));
    }

    #[test]
    fn dims_agree_with_weyl_formula() {
        for (rs, lam) in [
            (bsys(2), vec![3, 1]),
            (bsys(4), vec![2, 2, 1, 0]),
            (dsys(3), vec![2, 1, -1]),
            (dsys(4), vec![3, 1, 1, 1]),
        ] {
            let lam = w(&lam, &rs);
            let m = weight_multiplicities(&lam, &rs).unwrap();
            assert_eq!(dim_from_multiplicities(&m, &rs), irrep_dim(&lam, &rs), "{rs:?} {lam:?}");
        }
        // half-integral cases
        for (rs, lam) in [(bsys(3), vec![3, 1, 1]), (dsys(3), vec![3, 1, -1]), (dsys(4), vec![5, 3, 1, 1])] {
            let lam = half(&lam, &rs);
            let m = weight_multiplicities(&lam, &rs).unwrap();
            assert_eq!(dim_from_multiplicities(&m, &rs), irrep_dim(&lam, &rs), "{rs:?} {lam:?}");
        }
    }

    #[test]
    fn branch_verbitsky_n2() {
        // V_(2,0,0) of so(7) restricted to so(5), graded
        let ambient = bsys(3);
        let target = bsys(2);
        let mu = w(&[2, 0, 0], &ambient);
        let g = grade_and_branch(&mu, &ambient, &target).unwrap();
        let eigs: Vec<i64> = g.keys().copied().collect();
        assert_eq!(eigs, vec![-4, -2, 0, 2, 4]);
        let labels = |h: i64| -> Vec<(Vec<i64>, u64)> {
            g[&h].iter().map(|c| (c.weight.doubled().to_vec(), c.mult)).collect()
        };
        assert_eq!(labels(-4), vec![(vec![0, 0], 1)]);
        assert_eq!(labels(-2), vec![(vec![2, 0], 1)]);
        assert_eq!(labels(0), vec![(vec![4, 0], 1), (vec![0, 0], 1)]);
        assert_eq!(labels(2), vec![(vec![2, 0], 1)]);
        assert_eq!(labels(4), vec![(vec![0, 0], 1)]);
    }

    #[test]
    fn branch_trivial_and_standard() {
        let ambient = bsys(3);
        let target = bsys(2);
        let zero = HighestWeight::zero(3);
        let g = grade_and_branch(&zero, &ambient, &target).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[&0][0].weight, HighestWeight::zero(2));

        let std = w(&[1, 0, 0], &ambient);
        let g = grade_and_branch(&std, &ambient, &target).unwrap();
        assert_eq!(g.keys().copied().collect::<Vec<_>>(), vec![-2, 0, 2]);
        assert_eq!(g[&-2][0].weight, HighestWeight::zero(2));
        assert_eq!(g[&0][0].weight, w(&[1, 0], &target));
        assert_eq!(g[&2][0].weight, HighestWeight::zero(2));
    }

    #[test]
    fn branch_grade_symmetry_and_dimension() {
        for (ambient, target, mu) in [
            (bsys(3), bsys(2), w(&[2, 1, 0], &bsys(3))),
            (dsys(4), dsys(3), w(&[2, 1, 1, 0], &dsys(4))),
            (bsys(4), bsys(3), half(&[3, 1, 1, 1], &bsys(4))),
        ] {
            let g = grade_and_branch(&mu, &ambient, &target).unwrap();
            // mirror symmetry of grades, comparing normalized multisets
            for (&h, comps) in &g {
                let other = &g[&-h];
                let norm = |cs: &Vec<BranchComponent>| {
                    let mut v: Vec<(Vec<i64>, u64)> = cs
                        .iter()
                        .map(|c| (c.weight.normalized().0.doubled().to_vec(), c.mult))
                        .collect();
                    v.sort();
                    v
                };
                assert_eq!(norm(comps), norm(other), "h = {h}");
            }
            // dimensions add up to the ambient module
            let total: BigUint = g
                .values()
                .flatten()
                .map(|c| irrep_dim(&c.weight, &target) * BigUint::from(c.mult))
                .fold(BigUint::zero(), |a, b| a + b);
            assert_eq!(total, irrep_dim(&mu, &ambient));
        }
    }

    #[test]
    fn branch_top_grade_contains_truncated_weight() {
        let ambient = bsys(4);
        let target = bsys(3);
        let mu = w(&[3, 2, 1, 0], &ambient);
        let g = grade_and_branch(&mu, &ambient, &target).unwrap();
        let lowest = g.keys().next().copied().unwrap();
        assert_eq!(lowest, -6); // -2 μ0
        let tops: Vec<Vec<i64>> = g[&lowest].iter().map(|c| c.weight.doubled().to_vec()).collect();
        assert!(tops.contains(&vec![4, 2, 0]));
    }

    #[test]
    fn parity_examples() {
        let b3 = bsys(3);
        assert!(parity_check(&w(&[2, 1, 0], &b3), DegreeParity::Even));
        assert!(parity_check(&half(&[1, 1, 1], &b3), DegreeParity::Odd));
        assert!(!parity_check(&w(&[2, 1, 0], &b3), DegreeParity::Odd));
    }

    #[test]
    fn orbit_sizes() {
        // B2: (1,0) has orbit ±e1, ±e2
        assert_eq!(orbit_size(&w(&[1, 0], &bsys(2)), &bsys(2)), BigUint::from(4u32));
        // D2 all-nonzero orbits are half of the B2 count
        assert_eq!(orbit_size(&w(&[1, 1], &dsys(2)), &dsys(2)), BigUint::from(2u32));
        assert_eq!(orbit_size(&w(&[1, 1], &bsys(2)), &bsys(2)), BigUint::from(4u32));
    }
}
