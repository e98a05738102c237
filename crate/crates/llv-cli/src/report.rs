//! Report types shared by all subcommands, with Markdown and CSV table
//! rendering. Every report serializes to JSON with rationals as strings
//! and parses back through serde.

use llv::clifford::{spin_rep, CliffordAlgebra};
use llv::frobenius::mukai_toy_algebra;
use llv::io::matrix_to_json;
use llv::nilpotent::{NilpotentOperator, ReductionType};
use llv::predict::{NuTable, Theorem71Report};
use llv::quad::QuadraticSpace;
use llv::reduction::ConsistentCase;
use llv::weights::{grade_and_branch, HighestWeight, RootSystem};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A rendered table: header row plus data rows of equal width.
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("| {} |\n", self.headers.join(" | ")));
        out.push_str(&format!(
            "|{}\n",
            self.headers.iter().map(|_| " --- |").collect::<String>()
        ));
        for row in &self.rows {
            out.push_str(&format!("| {} |\n", row.join(" | ")));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.headers.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

pub trait Tabular {
    fn table(&self) -> Table;
}

fn dims_row(map: &BTreeMap<i64, usize>) -> (Vec<String>, Vec<String>) {
    let headers = map.keys().map(|k| format!("{k}")).collect();
    let values = map.values().map(|v| format!("{v}")).collect();
    (headers, values)
}

#[derive(Serialize, Deserialize)]
pub struct NuReport {
    pub dim: usize,
    pub nu: usize,
    pub graded_dims: BTreeMap<i64, usize>,
    pub filtration_dims: BTreeMap<i64, usize>,
}

impl NuReport {
    pub fn build(op: &NilpotentOperator) -> Self {
        let f = op.weight_filtration();
        let k = f.range();
        let filtration_dims = (-k - 1..=k).map(|i| (i, f.level_dim(i))).collect();
        NuReport {
            dim: op.dim(),
            nu: op.nu(),
            graded_dims: op.graded_dims(),
            filtration_dims,
        }
    }
}

impl Tabular for NuReport {
    fn table(&self) -> Table {
        let (gh, gv) = dims_row(&self.graded_dims);
        let mut headers = vec!["dim".to_string(), "nu".to_string()];
        headers.extend(gh.iter().map(|h| format!("r_{h}")));
        let mut row = vec![format!("{}", self.dim), format!("{}", self.nu)];
        row.extend(gv);
        Table { headers, rows: vec![row] }
    }
}

#[derive(Serialize, Deserialize)]
pub struct FiltrationReport {
    pub dim: usize,
    pub range: i64,
    pub level_dims: BTreeMap<i64, usize>,
    pub graded_dims: BTreeMap<i64, usize>,
}

impl FiltrationReport {
    pub fn build(op: &NilpotentOperator) -> Self {
        let f = op.weight_filtration();
        let k = f.range();
        FiltrationReport {
            dim: op.dim(),
            range: k,
            level_dims: (-k - 1..=k).map(|i| (i, f.level_dim(i))).collect(),
            graded_dims: op.graded_dims(),
        }
    }
}

impl Tabular for FiltrationReport {
    fn table(&self) -> Table {
        let headers = vec!["level".to_string(), "dim M_i".to_string(), "gr_i".to_string()];
        let rows = self
            .level_dims
            .iter()
            .map(|(&i, &d)| {
                vec![
                    format!("{i}"),
                    format!("{d}"),
                    format!("{}", self.graded_dims.get(&i).copied().unwrap_or(0)),
                ]
            })
            .collect();
        Table { headers, rows }
    }
}

#[derive(Serialize, Deserialize)]
pub struct NormalFormReport {
    pub reduction_type: ReductionType,
    pub b2: usize,
    pub nu: usize,
    pub rank: usize,
    pub matrix: Vec<Vec<String>>,
}

impl NormalFormReport {
    pub fn build(t: ReductionType, b2: usize, op: &NilpotentOperator) -> Self {
        NormalFormReport {
            reduction_type: t,
            b2,
            nu: op.nu(),
            rank: op.matrix().rank(),
            matrix: matrix_to_json(op.matrix()),
        }
    }
}

impl Tabular for NormalFormReport {
    fn table(&self) -> Table {
        let headers = vec![
            "type".to_string(),
            "b2".to_string(),
            "nu".to_string(),
            "rank".to_string(),
            "matrix".to_string(),
        ];
        let rows = vec![vec![
            self.reduction_type.to_string(),
            format!("{}", self.b2),
            format!("{}", self.nu),
            format!("{}", self.rank),
            self.matrix
                .iter()
                .map(|r| format!("[{}]", r.join(" ")))
                .collect::<Vec<_>>()
                .join(" "),
        ]];
        Table { headers, rows }
    }
}

#[derive(Serialize, Deserialize)]
pub struct CliffordReport {
    pub space_dim: usize,
    pub algebra_dim: usize,
    pub even_dim: usize,
    pub commutant_ok: bool,
    pub spin_dim: usize,
}

impl CliffordReport {
    pub fn build(q: &QuadraticSpace) -> Result<Self, llv::Error> {
        let cl = CliffordAlgebra::new(q.clone())?;
        cl.commutant_check()?;
        let spin = spin_rep(q)?;
        Ok(CliffordReport {
            space_dim: q.dim(),
            algebra_dim: cl.dim(),
            even_dim: cl.even_dim(),
            commutant_ok: true,
            spin_dim: spin.dim(),
        })
    }
}

impl Tabular for CliffordReport {
    fn table(&self) -> Table {
        Table {
            headers: vec![
                "space dim".into(),
                "algebra dim".into(),
                "even dim".into(),
                "commutant".into(),
                "spin dim".into(),
            ],
            rows: vec![vec![
                format!("{}", self.space_dim),
                format!("{}", self.algebra_dim),
                format!("{}", self.even_dim),
                if self.commutant_ok { "ok".into() } else { "FAILED".into() },
                format!("{}", self.spin_dim),
            ]],
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct CaseRow {
    pub b2: usize,
    pub case: String,
    pub r2: u64,
    pub r1: u64,
    pub r0: u64,
    pub a_ratio: String,
}

impl CaseRow {
    pub fn build(b2: usize, case: &ConsistentCase) -> Self {
        CaseRow {
            b2,
            case: case.label.as_str().to_string(),
            r2: case.x_profile.count(2),
            r1: case.x_profile.count(1),
            r0: case.x_profile.count(0),
            a_ratio: llv::format_rat(&llv::reduction::ratio_to_rat(&case.a_ratio)),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct CaseTable {
    pub rows: Vec<CaseRow>,
}

impl Tabular for CaseTable {
    fn table(&self) -> Table {
        Table {
            headers: vec![
                "b2".into(),
                "case".into(),
                "r2".into(),
                "r1".into(),
                "r0".into(),
                "r1(A)/b1(A)".into(),
            ],
            rows: self
                .rows
                .iter()
                .map(|r| {
                    vec![
                        format!("{}", r.b2),
                        r.case.clone(),
                        format!("{}", r.r2),
                        format!("{}", r.r1),
                        format!("{}", r.r0),
                        r.a_ratio.clone(),
                    ]
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct WeylMaxReport {
    pub value: String,
}

impl Tabular for WeylMaxReport {
    fn table(&self) -> Table {
        Table { headers: vec!["value".into()], rows: vec![vec![self.value.clone()]] }
    }
}

#[derive(Serialize, Deserialize)]
pub struct BranchRow {
    pub h_eigenvalue: i64,
    pub components: Vec<BranchEntry>,
}

#[derive(Serialize, Deserialize)]
pub struct BranchEntry {
    pub weight: Vec<String>,
    pub mult: u64,
    pub mirrored: bool,
}

#[derive(Serialize, Deserialize)]
pub struct BranchReport {
    pub b2: usize,
    pub rows: Vec<BranchRow>,
}

impl BranchReport {
    pub fn build(input: &crate::BranchInput) -> Result<Self, llv::Error> {
        let ambient = RootSystem::for_so(input.b2 + 2)?;
        let target = RootSystem::for_so(input.b2)?;
        let mut coords = input
            .mu
            .iter()
            .map(|s| llv::parse_rat(s))
            .collect::<Result<Vec<_>, _>>()?;
        coords.resize(ambient.rank, llv::rat(0));
        let mu = HighestWeight::new(&coords, &ambient)?;
        let branched = grade_and_branch(&mu, &ambient, &target)?;
        let rows = branched
            .into_iter()
            .map(|(h, comps)| BranchRow {
                h_eigenvalue: h,
                components: comps
                    .into_iter()
                    .map(|c| {
                        let (normalized, mirrored) = c.weight.normalized();
                        BranchEntry {
                            weight: normalized.coords().iter().map(llv::format_rat).collect(),
                            mult: c.mult,
                            mirrored,
                        }
                    })
                    .collect(),
            })
            .collect();
        Ok(BranchReport { b2: input.b2, rows })
    }
}

impl Tabular for BranchReport {
    fn table(&self) -> Table {
        Table {
            headers: vec!["h".into(), "components".into()],
            rows: self
                .rows
                .iter()
                .map(|r| {
                    let comps = r
                        .components
                        .iter()
                        .map(|c| {
                            let star = if c.mirrored { "*" } else { "" };
                            format!("({}){}x{}", c.weight.join(","), star, c.mult)
                        })
                        .collect::<Vec<_>>()
                        .join(" ");
                    vec![format!("{}", r.h_eigenvalue), comps]
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct CriterionReport {
    pub condition1: bool,
    pub condition2: bool,
    pub agree: bool,
    pub predicted: BTreeMap<usize, u64>,
}

impl CriterionReport {
    pub fn build(r: &Theorem71Report) -> Self {
        CriterionReport {
            condition1: r.condition1,
            condition2: r.condition2,
            agree: r.agree,
            predicted: r.predicted.clone(),
        }
    }
}

impl Tabular for CriterionReport {
    fn table(&self) -> Table {
        Table {
            headers: vec!["condition1".into(), "condition2".into(), "agree".into()],
            rows: vec![vec![
                format!("{}", self.condition1),
                format!("{}", self.condition2),
                format!("{}", self.agree),
            ]],
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct PredictRow {
    pub degree: usize,
    pub nu: String,
    pub exact: bool,
    pub bound: u64,
}

#[derive(Serialize, Deserialize)]
pub struct PredictReport {
    pub reduction_type: ReductionType,
    pub n: usize,
    pub rows: Vec<PredictRow>,
}

impl PredictReport {
    pub fn build(table: &NuTable) -> Self {
        let n = table.n;
        let rows = table
            .entries
            .iter()
            .map(|(&degree, entry)| {
                let low = degree.min(4 * n - degree) as u64;
                let bound = if degree % 2 == 0 { low } else { low.saturating_sub(2) };
                PredictRow {
                    degree,
                    nu: entry.to_string(),
                    exact: entry.is_exact(),
                    bound,
                }
            })
            .collect();
        PredictReport { reduction_type: table.reduction_type, n, rows }
    }
}

impl Tabular for PredictReport {
    fn table(&self) -> Table {
        Table {
            headers: vec!["degree".into(), "nu".into(), "bound".into()],
            rows: self
                .rows
                .iter()
                .map(|r| vec![format!("{}", r.degree), r.nu.clone(), format!("{}", r.bound)])
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct LlvToyReport {
    pub b2: usize,
    pub generated_dim: usize,
    pub target_dim: usize,
    pub matches: bool,
}

impl LlvToyReport {
    pub fn build(b2: usize) -> Result<Self, llv::Error> {
        if b2 < 3 {
            return Err(llv::Error::Invalid("the model needs b2 >= 3".into()));
        }
        let q = llv::quad::standard_bbf_gram(b2 / 2, b2 % 2 == 1)?;
        let algebra = mukai_toy_algebra(&q)?;
        let samples = algebra.default_hl_samples();
        let basis = algebra.total_lie_algebra(&samples)?;
        let target = (b2 + 2) * (b2 + 1) / 2;
        Ok(LlvToyReport {
            b2,
            generated_dim: basis.len(),
            target_dim: target,
            matches: basis.len() == target,
        })
    }
}

impl Tabular for LlvToyReport {
    fn table(&self) -> Table {
        Table {
            headers: vec!["b2".into(), "generated dim".into(), "so target".into(), "match".into()],
            rows: vec![vec![
                format!("{}", self.b2),
                format!("{}", self.generated_dim),
                format!("{}", self.target_dim),
                format!("{}", self.matches),
            ]],
        }
    }
}
