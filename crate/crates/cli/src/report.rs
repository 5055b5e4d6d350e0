//! `ReportFile`: the machine-readable analysis report, plus a one-row CSV
//! render of the same data.

use std::collections::BTreeMap;

use kroncode::analyze::{AnalysisReport, Packing, SyndromeProfile};
use kroncode::CodeSpec;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::codefile::family_params;
use crate::error::{CliError, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub completely_regular: bool,
    /// Same question answered through coset weight distributions.
    pub distribution_regular: bool,
    pub uniformly_packed: bool,
    pub rho_equals_s: bool,
    pub macwilliams_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayData {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub a: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileData {
    pub syndrome: Vec<u32>,
    pub down: u64,
    pub same: u64,
    pub up: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessData {
    pub depth: u32,
    pub first: ProfileData,
    pub second: ProfileData,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub format_version: u32,
    pub family: String,
    pub family_params: BTreeMap<String, usize>,
    pub params: CodeParams,
    pub rho: usize,
    pub s: usize,
    pub verdicts: Verdicts,
    /// Cosets of weight 0..=rho.
    pub depth_sizes: Vec<u64>,
    pub intersection_array: Option<ArrayData>,
    pub witness: Option<WitnessData>,
    /// α_0..α_rho as `[numerator, denominator]`, lowest terms.
    pub alpha: Option<Vec<[i128; 2]>>,
    pub dual_weights: Vec<usize>,
    pub weight_distribution: Vec<u128>,
    pub dual_distribution: Vec<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

fn profile(p: &SyndromeProfile) -> ProfileData {
    ProfileData {
        syndrome: p.syndrome.iter().map(|&x| x as u32).collect(),
        down: p.neighbor_counts.down,
        same: p.neighbor_counts.same,
        up: p.neighbor_counts.up,
    }
}

impl ReportFile {
    pub fn new(spec: &CodeSpec, r: &AnalysisReport) -> Result<Self> {
        let alpha = match &r.packing {
            Packing::UniformlyPacked(alpha) => Some(
                alpha
                    .iter()
                    .map(|x| {
                        // BigRational is kept reduced with a positive denominator
                        match (x.numer().to_i128(), x.denom().to_i128()) {
                            (Some(n), Some(d)) => Ok([n, d]),
                            _ => Err(CliError::Format(format!("alpha {x} exceeds 128 bits"))),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
            Packing::NotUniformlyPacked => None,
        };
        Ok(Self {
            format_version: FORMAT_VERSION,
            family: spec.family().name().to_string(),
            family_params: family_params(spec.family()),
            params: CodeParams {
                q: r.q,
                n: r.n,
                k: r.k,
                d: r.d,
            },
            rho: r.rho,
            s: r.s,
            verdicts: Verdicts {
                completely_regular: r.completely_regular(),
                distribution_regular: r.distribution_regular,
                uniformly_packed: r.uniformly_packed(),
                rho_equals_s: r.rho == r.s,
                macwilliams_agrees: r.macwilliams_agrees,
            },
            depth_sizes: r.depth_sizes.clone(),
            intersection_array: r.intersection_array.as_ref().map(|a| ArrayData {
                b: a.b.clone(),
                c: a.c.clone(),
                a: a.a.clone(),
            }),
            witness: r.cr_witness.as_ref().map(|w| WitnessData {
                depth: w.depth,
                first: profile(&w.first),
                second: profile(&w.second),
            }),
            alpha,
            dual_weights: r.dual_weights.clone(),
            weight_distribution: r.weight_distribution.clone(),
            dual_distribution: r.dual_distribution.clone(),
            timing_ms: None,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub const CSV_HEADER: &'static str =
        "family,q,n,k,d,rho,s,completely_regular,uniformly_packed,b,c,a,alpha,dual_weights";

    /// One CSV row; list-valued cells are `;`-separated.
    pub fn csv_row(&self) -> String {
        fn join<T: ToString>(xs: &[T]) -> String {
            xs.iter().map(T::to_string).collect::<Vec<_>>().join(";")
        }
        let (b, c, a) = match &self.intersection_array {
            Some(arr) => (join(&arr.b), join(&arr.c), join(&arr.a)),
            None => Default::default(),
        };
        let alpha = self
            .alpha
            .as_ref()
            .map(|v| {
                v.iter()
                    .map(|[n, d]| format!("{n}/{d}"))
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.params.q,
            self.params.n,
            self.params.k,
            self.params.d.map(|d| d.to_string()).unwrap_or_default(),
            self.rho,
            self.s,
            self.verdicts.completely_regular,
            self.verdicts.uniformly_packed,
            b,
            c,
            a,
            alpha,
            join(&self.dual_weights),
        )
    }

    pub fn to_csv(&self) -> String {
        format!("{}\n{}\n", Self::CSV_HEADER, self.csv_row())
    }
}
