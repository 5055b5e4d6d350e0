//! Parameter sweeps comparing computed code properties with the closed-form
//! predictions for each family.

use kroncode::analyze::{analyze, hamming_product_array, AnalysisConfig, IntersectionArray};
use kroncode::construct::{hamming_length, min_distance_is_3};
use kroncode::{kron_cr_code, kron_up_code, CodeSpec, Family};

use crate::error::{CliError, Result};

pub const DEFAULT_CR_GRID: [(u32, usize, usize); 7] = [
    (2, 2, 2),
    (2, 2, 3),
    (2, 3, 3),
    (3, 2, 2),
    (3, 2, 3),
    (4, 2, 2),
    (5, 2, 2),
];

pub const DEFAULT_UP_GRID: [(u32, usize, usize); 4] = [(2, 4, 3), (2, 4, 4), (3, 3, 2), (3, 4, 2)];

/// Observable properties compared in a sweep. `None` fields are not checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Properties {
    pub n: usize,
    pub k: usize,
    pub d3: bool,
    pub rho: usize,
    pub s: Option<usize>,
    pub cr: bool,
    pub up: Option<bool>,
    pub array: Option<IntersectionArray>,
}

impl Properties {
    fn render(&self) -> String {
        let mut out = format!("n={} k={} d3={} rho={}", self.n, self.k, self.d3, self.rho);
        if let Some(s) = self.s {
            out += &format!(" s={s}");
        }
        if let Some(up) = self.up {
            out += &format!(" UP={up}");
        }
        out += &format!(" CR={}", self.cr);
        if let Some(a) = &self.array {
            let join = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            out += &format!(" b=({}) c=({})", join(&a.b), join(&a.c));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub instance: String,
    pub expected: Properties,
    pub computed: Properties,
}

impl VerifyRow {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

fn expected_for(spec: &CodeSpec) -> Result<Properties> {
    let q = spec.q();
    Ok(match spec.family() {
        Family::KronCr { m_a, m_b } => {
            let n = hamming_length(q, m_a) * hamming_length(q, m_b);
            Properties {
                n,
                k: n - m_a * m_b,
                d3: true,
                rho: m_a.min(m_b),
                s: None,
                cr: true,
                up: None,
                array: Some(hamming_product_array(q as u64, m_a, m_b)?),
            }
        }
        Family::KronUp { n_a, m } => {
            let n_b = hamming_length(q, m);
            Properties {
                n: n_a * n_b,
                k: n_a * n_b - m * (n_a - 1),
                d3: true,
                rho: n_a - 1,
                s: Some(n_a - 1),
                cr: q == 2 && n_b == 3,
                up: Some(true),
                array: None,
            }
        }
        Family::Hamming { m } => {
            let n = hamming_length(q, m);
            Properties {
                n,
                k: n - m,
                d3: true,
                rho: 1,
                s: Some(1),
                cr: true,
                up: Some(true),
                array: Some(IntersectionArray {
                    b: vec![(q as u64 - 1) * n as u64],
                    c: vec![1],
                    a: vec![0, (q as u64 - 1) * n as u64 - 1],
                }),
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "no closed-form expectations for family `{}`",
                other.name()
            )))
        }
    })
}

/// Analyzes `spec` and compares against its family's predictions.
pub fn verify_spec(spec: &CodeSpec, budget: u64) -> Result<VerifyRow> {
    let expected = expected_for(spec)?;
    let r = analyze(spec, &AnalysisConfig { budget })?;
    let computed = Properties {
        n: r.n,
        k: r.k,
        d3: min_distance_is_3(spec),
        rho: r.rho,
        s: expected.s.map(|_| r.s),
        cr: r.completely_regular(),
        up: expected.up.map(|_| r.uniformly_packed()),
        array: if expected.array.is_some() {
            r.intersection_array.clone()
        } else {
            None
        },
    };
    Ok(VerifyRow {
        instance: format!("GF({}) {}", spec.q(), spec.family()),
        expected,
        computed,
    })
}

pub fn sweep_cr(grid: &[(u32, usize, usize)], budget: u64) -> Result<Vec<VerifyRow>> {
    grid.iter()
        .map(|&(q, ma, mb)| verify_spec(&kron_cr_code(q, ma, mb)?, budget))
        .collect()
}

pub fn sweep_up(grid: &[(u32, usize, usize)], budget: u64) -> Result<Vec<VerifyRow>> {
    grid.iter()
        .map(|&(q, na, m)| verify_spec(&kron_up_code(q, na, m)?, budget))
        .collect()
}

/// Parses `"2,2,2;2,2,3"`.
pub fn parse_grid(s: &str) -> Result<Vec<(u32, usize, usize)>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let parts: Vec<&str> = t.split(',').map(str::trim).collect();
            let bad = || CliError::Usage(format!("grid entry `{t}` is not q,x,y"));
            if parts.len() != 3 {
                return Err(bad());
            }
            Ok((
                parts[0].parse().map_err(|_| bad())?,
                parts[1].parse().map_err(|_| bad())?,
                parts[2].parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

pub fn render_table(rows: &[VerifyRow]) -> String {
    let mut out = String::new();
    for row in rows {
        let status = if row.passed() { "PASS" } else { "FAIL" };
        out += &format!("{status}  {}\n", row.instance);
        out += &format!("      expected: {}\n", row.expected.render());
        out += &format!("      computed: {}\n", row.computed.render());
    }
    let failed = rows.iter().filter(|r| !r.passed()).count();
    out += &format!("{} instances, {} failed\n", rows.len(), failed);
    out
}

pub fn render_csv(rows: &[VerifyRow]) -> String {
    let mut out = String::from("instance,status,expected,computed\n");
    for row in rows {
        out += &format!(
            "\"{}\",{},\"{}\",\"{}\"\n",
            row.instance,
            if row.passed() { "pass" } else { "fail" },
            row.expected.render(),
            row.computed.render()
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use kroncode::hamming_check;

    #[test]
    fn grid_parsing() {
        assert_eq!(
            parse_grid("2,2,2; 3,2,3").unwrap(),
            vec![(2, 2, 2), (3, 2, 3)]
        );
        assert!(parse_grid("2,2").is_err());
        assert!(parse_grid("a,b,c").is_err());
    }

    #[test]
    fn cr_sweep_passes() {
        let rows = sweep_cr(&DEFAULT_CR_GRID[..3], 1 << 22).unwrap();
        assert!(
            rows.iter().all(VerifyRow::passed),
            "{}",
            render_table(&rows)
        );
    }

    #[test]
    fn hamming_rows() {
        let row = verify_spec(&hamming_check(3, 3).unwrap(), 1 << 22).unwrap();
        assert!(row.passed(), "{row:?}");
    }

    #[test]
    fn custom_codes_have_no_expectations() {
        let spec = CodeSpec::custom(hamming_check(2, 3).unwrap().check_matrix().clone());
        assert!(matches!(
            verify_spec(&spec, 1 << 20),
            Err(CliError::Usage(_))
        ));
    }
}
