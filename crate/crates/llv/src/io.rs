//! JSON schemas for the file formats: rationals are always serialized as
//! strings `"p/q"` (or `"p"`), matrices as row-major arrays of such
//! strings, and weights carry their family and rank.

use crate::matrix::{format_rat, parse_rat, RationalMatrix};
use crate::nilpotent::{normal_form, NilpotentOperator, NormalFormTag, ReductionType};
use crate::predict::{LlvComponent, LlvDecomposition};
use crate::quad::{standard_bbf_gram, QuadraticSpace};
use crate::weights::{DegreeParity, Family, HighestWeight, RootSystem};
use crate::Error;
use serde::{Deserialize, Serialize};

pub fn matrix_to_json(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| format_rat(m.at(r, c))).collect())
        .collect()
}

pub fn matrix_from_json(rows: &[Vec<String>]) -> Result<RationalMatrix, Error> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Parse("matrix rows have unequal lengths".into()));
    }
    let mut out = RationalMatrix::zero(nrows, ncols);
    for (r, row) in rows.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            out.set(r, c, parse_rat(s)?);
        }
    }
    Ok(out)
}

/// `{"r": 2, "odd": false}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BbfSpec {
    pub r: usize,
    pub odd: bool,
}

/// Either an explicit Gram matrix or a split block form.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuadSpaceJson {
    Bbf { bbf: BbfSpec },
    Explicit { dim: usize, gram: Vec<Vec<String>> },
}

impl QuadSpaceJson {
    pub fn to_space(&self) -> Result<QuadraticSpace, Error> {
        match self {
            QuadSpaceJson::Bbf { bbf } => standard_bbf_gram(bbf.r, bbf.odd),
            QuadSpaceJson::Explicit { dim, gram } => {
                let m = matrix_from_json(gram)?;
                if m.rows() != *dim {
                    return Err(Error::Parse("gram size does not match dim".into()));
                }
                QuadraticSpace::new(m)
            }
        }
    }

    pub fn from_space(q: &QuadraticSpace) -> Self {
        QuadSpaceJson::Explicit { dim: q.dim(), gram: matrix_to_json(q.gram()) }
    }
}

/// `{"type": "II", "b2": 5}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NormalFormJson {
    #[serde(rename = "type")]
    pub reduction_type: ReductionType,
    pub b2: usize,
}

/// Either an explicit matrix (with an optional space it must be skew for)
/// or a normal-form tag.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NilpotentJson {
    NormalForm { normal_form: NormalFormJson },
    Matrix {
        matrix: Vec<Vec<String>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        space: Option<QuadSpaceJson>,
    },
}

impl NilpotentJson {
    pub fn to_operator(&self) -> Result<NilpotentOperator, Error> {
        match self {
            NilpotentJson::NormalForm { normal_form: nf } => normal_form(NormalFormTag {
                reduction_type: nf.reduction_type,
                b2: nf.b2,
            }),
            NilpotentJson::Matrix { matrix, space } => {
                let m = matrix_from_json(matrix)?;
                match space {
                    Some(s) => NilpotentOperator::new_in_so(m, s.to_space()?),
                    None => NilpotentOperator::new(m),
                }
            }
        }
    }
}

/// `{"family": "B", "rank": 3, "coords": ["1/2", "1/2", "1/2"]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeightJson {
    pub family: Family,
    pub rank: usize,
    pub coords: Vec<String>,
}

impl WeightJson {
    pub fn to_weight(&self) -> Result<(HighestWeight, RootSystem), Error> {
        let rs = RootSystem::new(self.family, self.rank)?;
        let coords = self
            .coords
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((HighestWeight::new(&coords, &rs)?, rs))
    }

    pub fn from_weight(w: &HighestWeight, rs: &RootSystem) -> Self {
        WeightJson {
            family: rs.family,
            rank: rs.rank,
            coords: w.coords().iter().map(format_rat).collect(),
        }
    }
}

/// One component of a decomposition: `{"mu": ["2","0","0"], "mult": 1,
/// "parity": "even"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentJson {
    pub mu: Vec<String>,
    pub mult: u64,
    pub parity: DegreeParity,
}

/// `{"n": 2, "b2": 5, "components": [...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub n: usize,
    pub b2: usize,
    pub components: Vec<ComponentJson>,
}

impl DecompositionJson {
    pub fn to_decomposition(&self) -> Result<LlvDecomposition, Error> {
        let ambient = RootSystem::for_so(self.b2 + 2)?;
        let components = self
            .components
            .iter()
            .map(|c| {
                let coords = c
                    .mu
                    .iter()
                    .map(|s| parse_rat(s))
                    .collect::<Result<Vec<_>, _>>()?;
                // trailing zero components may be omitted from labels
                let mut padded = coords;
                if padded.len() > ambient.rank {
                    return Err(Error::Parse(format!(
                        "weight has {} coordinates, ambient rank is {}",
                        padded.len(),
                        ambient.rank
                    )));
                }
                padded.resize(ambient.rank, crate::matrix::rat(0));
                let mu = HighestWeight::new(&padded, &ambient)?;
                Ok(LlvComponent { mu, mult: c.mult, parity: c.parity })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        LlvDecomposition::new(self.n, self.b2, components)
    }

    pub fn from_decomposition(d: &LlvDecomposition) -> Self {
        DecompositionJson {
            n: d.n,
            b2: d.b2,
            components: d
                .components
                .iter()
                .map(|c| ComponentJson {
                    mu: c.mu.coords().iter().map(format_rat).collect(),
                    mult: c.mult,
                    parity: c.parity,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat;

    #[test]
    fn matrix_roundtrip() {
        let m = RationalMatrix::from_rows(vec![
            vec![rat(1), crate::matrix::rat_frac(-3, 7)],
            vec![rat(0), rat(2)],
        ]);
        let json = matrix_to_json(&m);
        assert_eq!(json[0][1], "-3/7");
        assert_eq!(matrix_from_json(&json).unwrap(), m);
    }

    #[test]
    fn quad_space_inputs() {
        let explicit: QuadSpaceJson = serde_json::from_str(
            r#"{"dim": 2, "gram": [["0","1"],["1","0"]]}"#,
        )
        .unwrap();
        assert_eq!(explicit.to_space().unwrap().dim(), 2);
        let bbf: QuadSpaceJson = serde_json::from_str(r#"{"bbf": {"r": 2, "odd": true}}"#).unwrap();
        assert_eq!(bbf.to_space().unwrap().dim(), 5);
    }

    #[test]
    fn nilpotent_inputs() {
        let nf: NilpotentJson =
            serde_json::from_str(r#"{"normal_form": {"type": "III", "b2": 4}}"#).unwrap();
        assert_eq!(nf.to_operator().unwrap().nu(), 2);
        let raw: NilpotentJson =
            serde_json::from_str(r#"{"matrix": [["0","1"],["0","0"]]}"#).unwrap();
        assert_eq!(raw.to_operator().unwrap().nu(), 1);
        let bad: NilpotentJson =
            serde_json::from_str(r#"{"matrix": [["1","0"],["0","1"]]}"#).unwrap();
        assert!(bad.to_operator().is_err());
    }

    #[test]
    fn weight_and_decomposition_roundtrip() {
        let w: WeightJson = serde_json::from_str(
            r#"{"family": "B", "rank": 3, "coords": ["1/2", "1/2", "1/2"]}"#,
        )
        .unwrap();
        let (weight, rs) = w.to_weight().unwrap();
        assert!(weight.is_half_integral());
        let back = WeightJson::from_weight(&weight, &rs);
        assert_eq!(back.coords, vec!["1/2", "1/2", "1/2"]);

        let d: DecompositionJson = serde_json::from_str(
            r#"{"n": 2, "b2": 5, "components": [{"mu": ["2","0","0"], "mult": 1, "parity": "even"}]}"#,
        )
        .unwrap();
        let dec = d.to_decomposition().unwrap();
        assert_eq!(dec.components.len(), 1);
        let back = DecompositionJson::from_decomposition(&dec);
        let json = serde_json::to_string(&back).unwrap();
        let reparsed: DecompositionJson = serde_json::from_str(&json).unwrap();
        assert_eq!(reparsed.to_decomposition().unwrap(), dec);
    }
}
