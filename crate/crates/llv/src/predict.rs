//! Per-degree nilpotency predictions from a decomposition of cohomology
//! into irreducible modules: the even-degree tables for the three
//! reduction types, odd-degree values and bounds, and the equivalence
//! check between the degree-wise criterion and the weight bound.

use crate::matrix::{rat, Rat};
use crate::nilpotent::ReductionType;
use crate::par;
use crate::weights::{
    grade_and_branch, nu_on_irrep, parity_check, DegreeParity, HighestWeight, RootSystem,
};
use crate::Error;
use num::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// The four known deformation types and their fixed Betti data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeformationKind {
    K3n,
    Kumn,
    OG6,
    OG10,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationTypeData {
    pub kind: DeformationKind,
    pub n: usize,
    pub b2: usize,
    pub has_odd: bool,
    pub b3: usize,
}

impl DeformationTypeData {
    pub fn k3n(n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::Invalid("K3-n data needs n >= 2".into()));
        }
        Ok(DeformationTypeData { kind: DeformationKind::K3n, n, b2: 23, has_odd: false, b3: 0 })
    }

    pub fn kumn(n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::Invalid("Kummer-n data needs n >= 2".into()));
        }
        Ok(DeformationTypeData { kind: DeformationKind::Kumn, n, b2: 7, has_odd: true, b3: 8 })
    }

    pub fn og6() -> Self {
        DeformationTypeData { kind: DeformationKind::OG6, n: 3, b2: 8, has_odd: false, b3: 0 }
    }

    pub fn og10() -> Self {
        DeformationTypeData { kind: DeformationKind::OG10, n: 5, b2: 24, has_odd: false, b3: 0 }
    }
}

/// One irreducible summand of a decomposition: an ambient highest weight,
/// a multiplicity, and the degree parity it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LlvComponent {
    pub mu: HighestWeight,
    pub mult: u64,
    pub parity: DegreeParity,
}

/// A decomposition of the full cohomology of a 2n-dimensional space into
/// irreducible modules of the Lie algebra of the completed degree-2 form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LlvDecomposition {
    pub n: usize,
    pub b2: usize,
    pub components: Vec<LlvComponent>,
}

impl LlvDecomposition {
    pub fn new(n: usize, b2: usize, components: Vec<LlvComponent>) -> Result<Self, Error> {
        if n == 0 || b2 < 3 {
            return Err(Error::Invalid("decomposition needs n >= 1 and b2 >= 3".into()));
        }
        let ambient = RootSystem::for_so(b2 + 2)?;
        for c in &components {
            if c.mu.rank() != ambient.rank {
                return Err(Error::Dimension(format!(
                    "component {} has rank {}, ambient system has rank {}",
                    c.mu.label(),
                    c.mu.rank(),
                    ambient.rank
                )));
            }
        }
        Ok(LlvDecomposition { n, b2, components })
    }

    pub fn ambient_system(&self) -> RootSystem {
        RootSystem::for_so(self.b2 + 2).expect("b2 >= 3 makes the ambient system valid")
    }

    pub fn target_system(&self) -> RootSystem {
        RootSystem::for_so(self.b2).expect("b2 >= 3 makes the reduced system valid")
    }

    /// The Verbitsky-only decomposition: the single component `(n)`.
    pub fn verbitsky_only(n: usize, b2: usize) -> Result<Self, Error> {
        let ambient = RootSystem::for_so(b2 + 2)?;
        let mut coords = vec![0i64; ambient.rank];
        coords[0] = n as i64;
        let mu = HighestWeight::from_ints(&coords, &ambient)?;
        LlvDecomposition::new(n, b2, vec![LlvComponent { mu, mult: 1, parity: DegreeParity::Even }])
    }

    fn even_components(&self) -> impl Iterator<Item = &LlvComponent> {
        self.components.iter().filter(|c| c.parity == DegreeParity::Even)
    }
}

/// A named violation of the decomposition invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub component: Option<String>,
    pub rule: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.component {
            Some(c) => write!(f, "component {}: {}", c, self.rule),
            None => write!(f, "{}", self.rule),
        }
    }
}

/// Checks the decomposition invariants: coordinate parity must match the
/// declared degree parity, multiplicities are positive, and the
/// degree-two-generated component `(n)` must be present.
pub fn validate_decomposition(d: &LlvDecomposition) -> Vec<Violation> {
    let mut out = Vec::new();
    let ambient = d.ambient_system();
    let mut verbitsky_coords = vec![0i64; ambient.rank];
    verbitsky_coords[0] = d.n as i64;
    let verbitsky = HighestWeight::from_ints(&verbitsky_coords, &ambient)
        .expect("(n,0,...,0) is dominant");
    let mut verbitsky_present = false;
    for c in &d.components {
        if c.mult == 0 {
            out.push(Violation {
                component: Some(c.mu.label()),
                rule: "multiplicity must be positive".into(),
            });
        }
        if !parity_check(&c.mu, c.parity) {
            out.push(Violation {
                component: Some(c.mu.label()),
                rule: format!(
                    "coordinate parity does not match {:?}-degree placement",
                    c.parity
                ),
            });
        }
        if c.mu == verbitsky && c.parity == DegreeParity::Even && c.mult >= 1 {
            verbitsky_present = true;
        }
    }
    if !verbitsky_present {
        out.push(Violation {
            component: None,
            rule: format!("the degree-two component {} is missing", verbitsky.label()),
        });
    }
    out
}

/// The weight-bound criterion: every even component satisfies
/// `μ_0 + μ_1 + μ_2 <= n`.
pub fn gklr_condition(d: &LlvDecomposition) -> bool {
    d.even_components().all(|c| {
        let sum = c.mu.coord(0) + c.mu.coord(1) + c.mu.coord(2);
        sum <= rat(d.n as i64)
    })
}

fn rat_to_u64(x: &Rat) -> Result<u64, Error> {
    if !x.denom().to_u64().is_some_and(|d| d == 1) {
        return Err(Error::Inconsistent(format!(
            "expected an integer nilpotency index, got {x}"
        )));
    }
    x.numer()
        .to_u64()
        .ok_or_else(|| Error::Inconsistent(format!("negative or huge index {x}")))
}

/// Representation-theoretic nilpotency indices in even degrees 0..2n.
///
/// Type I is zero in every degree. For types II and III, each even
/// component is branched to the reduced system; the value in degree `2i`
/// is the largest index of the cocharacter nilpotent on the constituents
/// sitting at degree-operator eigenvalue `2i - 2n`.
pub fn predict_nu_even(
    d: &LlvDecomposition,
    t: ReductionType,
) -> Result<BTreeMap<usize, u64>, Error> {
    let violations = validate_decomposition(d);
    if !violations.is_empty() {
        return Err(Error::Invalid(format!("invalid decomposition: {}", violations[0])));
    }
    let mut out = BTreeMap::new();
    if t == ReductionType::I {
        for i in 0..=d.n {
            out.insert(i, 0);
        }
        return Ok(out);
    }
    if t == ReductionType::II && d.b2 < 5 {
        return Err(Error::Invalid("type II reduction forces b2 >= 5".into()));
    }
    let ambient = d.ambient_system();
    let target = d.target_system();
    let cochar = t.cocharacter(target.rank);

    let mut mus: Vec<HighestWeight> = d.even_components().map(|c| c.mu.clone()).collect();
    mus.sort();
    mus.dedup();
    let branched = par::map_collect(mus.clone(), |mu| grade_and_branch(&mu, &ambient, &target));
    let mut by_mu = BTreeMap::new();
    for (mu, res) in mus.into_iter().zip(branched) {
        by_mu.insert(mu, res?);
    }

    for i in 0..=d.n {
        let h_eig = 2 * i as i64 - 2 * d.n as i64;
        let mut best: u64 = 0;
        for table in by_mu.values() {
            let Some(comps) = table.get(&h_eig) else { continue };
            for c in comps {
                let value = nu_on_irrep(&c.weight, &cochar, &target)?;
                best = best.max(rat_to_u64(&value)?);
            }
        }
        out.insert(i, best);
    }
    Ok(out)
}

/// An exact predicted index, or an upper bound where the value is open.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NuEntry {
    Exact(u64),
    AtMost(u64),
}

impl NuEntry {
    pub fn value(&self) -> u64 {
        match self {
            NuEntry::Exact(v) | NuEntry::AtMost(v) => *v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, NuEntry::Exact(_))
    }
}

impl fmt::Display for NuEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NuEntry::Exact(v) => write!(f, "{v}"),
            NuEntry::AtMost(v) => write!(f, "<= {v}"),
        }
    }
}

/// Odd-degree indices for deformation data with odd cohomology: zero for
/// type I; degree three is pinned to 1 for types II and III; higher odd
/// degrees are exact `2i - 1` for type III and only bounded for type II.
pub fn predict_nu_odd(
    data: &DeformationTypeData,
    t: ReductionType,
) -> Result<BTreeMap<usize, NuEntry>, Error> {
    if !data.has_odd || data.b3 == 0 {
        return Err(Error::Invalid(
            "odd-degree predictions need data with nonvanishing odd cohomology".into(),
        ));
    }
    let mut out = BTreeMap::new();
    for i in 1..data.n {
        let degree = 2 * i + 1;
        let entry = match t {
            ReductionType::I => NuEntry::Exact(0),
            ReductionType::II => {
                if degree == 3 {
                    NuEntry::Exact(1)
                } else {
                    NuEntry::AtMost((2 * i - 1) as u64)
                }
            }
            ReductionType::III => NuEntry::Exact((2 * i - 1) as u64),
        };
        out.insert(degree, entry);
    }
    Ok(out)
}

/// Odd-degree indices from explicitly supplied reduced-system components
/// per odd degree; values are computed through the orbit maximum with
/// half-integral weights and validated against the `2i - 1` bound.
pub fn predict_nu_odd_from_components(
    n: usize,
    b2: usize,
    per_degree: &BTreeMap<usize, Vec<(HighestWeight, u64)>>,
    t: ReductionType,
) -> Result<BTreeMap<usize, NuEntry>, Error> {
    let target = RootSystem::for_so(b2)?;
    let cochar_rank = target.rank;
    let mut out = BTreeMap::new();
    for (&degree, comps) in per_degree {
        if degree % 2 == 0 || degree < 3 || degree > 2 * n - 1 {
            return Err(Error::Invalid(format!(
                "odd components must sit in odd degrees 3..={}, got {degree}",
                2 * n - 1
            )));
        }
        let i = (degree - 1) / 2;
        for (w, _) in comps {
            if !w.is_half_integral() {
                return Err(Error::Invalid(format!(
                    "odd component {} must have strictly half-integral coordinates",
                    w.label()
                )));
            }
        }
        let entry = match t {
            ReductionType::I => NuEntry::Exact(0),
            _ => {
                let cochar = t.cocharacter(cochar_rank);
                let mut best = Rat::zero();
                for (w, _) in comps {
                    let v = nu_on_irrep(w, &cochar, &target)?;
                    if v > best {
                        best = v;
                    }
                }
                let value = rat_to_u64(&best)?;
                if value > (2 * i - 1) as u64 {
                    return Err(Error::Inconsistent(format!(
                        "computed index {value} in degree {degree} exceeds the bound {}",
                        2 * i - 1
                    )));
                }
                NuEntry::Exact(value)
            }
        };
        out.insert(degree, entry);
    }
    Ok(out)
}

/// The reduced-system components of the third cohomology of the
/// generalized Kummer deformations: a single spin module.
pub fn kummer_odd_components(n: usize) -> Result<BTreeMap<usize, Vec<(HighestWeight, u64)>>, Error> {
    if n < 2 {
        return Err(Error::Invalid("Kummer data needs n >= 2".into()));
    }
    let target = RootSystem::for_so(7)?;
    let spin = HighestWeight::from_doubled(vec![1, 1, 1], &target)?;
    Ok(BTreeMap::from([(3, vec![(spin, 1)])]))
}

/// Full-range table of predicted indices, degrees 0..=4n, with the upper
/// half filled in by duality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuTable {
    pub reduction_type: ReductionType,
    pub n: usize,
    pub entries: BTreeMap<usize, NuEntry>,
}

impl NuTable {
    /// Builds the table from predicted lower-half values, mirroring
    /// degrees above the middle, and checks the structural bounds.
    pub fn assemble(
        reduction_type: ReductionType,
        n: usize,
        even: &BTreeMap<usize, u64>,
        odd: Option<&BTreeMap<usize, NuEntry>>,
    ) -> Result<Self, Error> {
        let mut entries = BTreeMap::new();
        for (&i, &v) in even {
            entries.insert(2 * i, NuEntry::Exact(v));
            entries.insert(4 * n - 2 * i, NuEntry::Exact(v));
        }
        if let Some(odd) = odd {
            for (&degree, &e) in odd {
                entries.insert(degree, e);
                entries.insert(4 * n - degree, e);
            }
        }
        let table = NuTable { reduction_type, n, entries };
        table.validate()?;
        Ok(table)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let n = self.n;
        let get = |d: usize| self.entries.get(&d);
        if let Some(e) = get(0) {
            if e.value() != 0 {
                return Err(Error::Inconsistent("degree 0 must have index 0".into()));
            }
        }
        for (&d, e) in &self.entries {
            if d > 4 * n {
                return Err(Error::Inconsistent(format!("degree {d} exceeds 4n")));
            }
            if let Some(mirror) = get(4 * n - d) {
                if mirror != e {
                    return Err(Error::Inconsistent(format!(
                        "duality mismatch between degrees {d} and {}",
                        4 * n - d
                    )));
                }
            }
            let low = d.min(4 * n - d);
            let bound = if d % 2 == 0 { low as u64 } else { (low as u64).saturating_sub(2) };
            if e.value() > bound {
                return Err(Error::Inconsistent(format!(
                    "index {} in degree {d} exceeds the bound {bound}",
                    e.value()
                )));
            }
        }
        Ok(())
    }
}

/// Result of the equivalence check between the degree-wise criterion and
/// the weight bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem71Report {
    /// every even degree 2i has predicted type II index exactly i
    pub condition1: bool,
    /// every even component satisfies the weight bound
    pub condition2: bool,
    pub agree: bool,
    pub predicted: BTreeMap<usize, u64>,
}

/// Evaluates both conditions on a decomposition with `b2 >= 5`; the two
/// are provably equivalent, so `agree` failing flags bad input or a bug.
pub fn theorem71_check(d: &LlvDecomposition) -> Result<Theorem71Report, Error> {
    if d.b2 < 5 {
        return Err(Error::Invalid("the criterion needs b2 >= 5".into()));
    }
    let predicted = predict_nu_even(d, ReductionType::II)?;
    let condition1 = predicted.iter().all(|(&i, &v)| v == i as u64);
    let condition2 = gklr_condition(d);
    Ok(Theorem71Report { condition1, condition2, agree: condition1 == condition2, predicted })
}
