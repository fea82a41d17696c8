//! Uniform grid sweeps over `[0, π/4]²` and their CSV/JSON encodings.
//!
//! Rows are ordered row-major: `r_b` is the outer index, `r_c` the inner.
//! Columns are `r_b, r_c` followed by the requested quantity groups in the
//! fixed order corrected, legacy, numeric, deltas, series, whatever order
//! they were requested in.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::format::format_number;
use crate::tangles::{
    delta_pi_series, delta_surfaces, one_tangle_corrected, one_tangle_legacy, pi_tangle, Family,
    TangleReport, Vertex,
};
use crate::unruh::AccelPair;

pub const CSV_MAGIC: &str = "# unruh-tangle sweep v1";
pub const MAX_GRID: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    Corrected,
    Legacy,
    Numeric,
    Deltas,
    Series,
}

impl Quantity {
    pub const ALL: [Quantity; 5] = [
        Quantity::Corrected,
        Quantity::Legacy,
        Quantity::Numeric,
        Quantity::Deltas,
        Quantity::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Corrected => "corrected",
            Quantity::Legacy => "legacy",
            Quantity::Numeric => "numeric",
            Quantity::Deltas => "deltas",
            Quantity::Series => "series",
        }
    }

    pub fn columns(self) -> &'static [&'static str] {
        match self {
            Quantity::Corrected => &["n_a", "n_bi", "n_ci", "pi_corrected"],
            Quantity::Legacy => &["n_a_legacy", "n_bi_legacy", "n_ci_legacy", "pi_legacy"],
            Quantity::Numeric => &["n_a_numeric", "n_bi_numeric", "n_ci_numeric", "pi_numeric"],
            Quantity::Deltas => &["delta_n_a", "delta_n_bi", "delta_n_ci", "delta_pi"],
            Quantity::Series => &["delta_pi_series"],
        }
    }

    fn values(self, p: AccelPair, out: &mut Vec<f64>) -> Result<()> {
        match self {
            Quantity::Corrected => {
                out.extend(Vertex::ALL.map(|v| one_tangle_corrected(p, v)));
                out.push(pi_tangle(p, Family::Corrected)?);
            }
            Quantity::Legacy => {
                out.extend(Vertex::ALL.map(|v| one_tangle_legacy(p, v)));
                out.push(pi_tangle(p, Family::Legacy)?);
            }
            Quantity::Numeric => {
                let r = TangleReport::compute(p)?;
                out.extend([r.n_a_numeric, r.n_bi_numeric, r.n_ci_numeric, r.pi_numeric]);
            }
            Quantity::Deltas => {
                let d = delta_surfaces(p);
                out.extend([d.n_a, d.n_bi, d.n_ci, d.pi]);
            }
            Quantity::Series => out.push(delta_pi_series(p)),
        }
        Ok(())
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                format!("unknown quantity `{s}` (expected corrected, legacy, numeric, deltas or series)")
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(format!("unknown format `{s}` (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub grid_n: usize,
    pub output_format: OutputFormat,
    pub output_path: PathBuf,
    pub quantities: Vec<Quantity>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_n < 2 || self.grid_n > MAX_GRID {
            return Err(Error::InvalidConfig(format!(
                "grid size {} outside [2, {MAX_GRID}]",
                self.grid_n
            )));
        }
        if self.quantities.is_empty() {
            return Err(Error::InvalidConfig("no quantities requested".into()));
        }
        Ok(())
    }
}

/// `n` equally spaced values over `[0, π/4]`, both ends included exactly.
pub fn grid_axis(n: usize) -> Vec<f64> {
    assert!(n >= 2, "a grid axis needs at least two points");
    let last = (n - 1) as f64;
    (0..n)
        .map(|i| std::f64::consts::FRAC_PI_4 * (i as f64 / last))
        .collect()
}

/// All `n²` grid points, `r_b` outer and `r_c` inner.
pub fn grid_points(n: usize) -> Vec<AccelPair> {
    let axis = grid_axis(n);
    axis.iter()
        .flat_map(|&b| {
            axis.iter()
                .map(move |&c| AccelPair::new(b, c).expect("grid axis stays in range"))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub grid_n: usize,
    pub quantities: Vec<Quantity>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

fn canonical(quantities: &[Quantity]) -> Vec<Quantity> {
    let mut q = quantities.to_vec();
    q.sort();
    q.dedup();
    q
}

fn row(p: AccelPair, quantities: &[Quantity]) -> Result<Vec<f64>> {
    let mut values = vec![p.r_b(), p.r_c()];
    for q in quantities {
        q.values(p, &mut values)?;
    }
    Ok(values)
}

impl SweepTable {
    /// Evaluates the grid in parallel; rows come back in grid order.
    pub fn evaluate(grid_n: usize, quantities: &[Quantity]) -> Result<Self> {
        Self::build(grid_n, quantities, true)
    }

    pub fn evaluate_sequential(grid_n: usize, quantities: &[Quantity]) -> Result<Self> {
        Self::build(grid_n, quantities, false)
    }

    fn build(grid_n: usize, quantities: &[Quantity], parallel: bool) -> Result<Self> {
        if !(2..=MAX_GRID).contains(&grid_n) {
            return Err(Error::InvalidConfig(format!(
                "grid size {grid_n} outside [2, {MAX_GRID}]"
            )));
        }
        let quantities = canonical(quantities);
        if quantities.is_empty() {
            return Err(Error::InvalidConfig("no quantities requested".into()));
        }
        let points = grid_points(grid_n);
        let rows = if parallel {
            points
                .par_iter()
                .map(|&p| row(p, &quantities))
                .collect::<Result<Vec<_>>>()?
        } else {
            points
                .iter()
                .map(|&p| row(p, &quantities))
                .collect::<Result<Vec<_>>>()?
        };
        let mut columns = vec!["r_b", "r_c"];
        for q in &quantities {
            columns.extend_from_slice(q.columns());
        }
        Ok(Self {
            grid_n,
            quantities,
            columns,
            rows,
        })
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{CSV_MAGIC}")?;
        writeln!(w, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|&x| format_number(x)).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        w.flush()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, &x)| ((*c).to_string(), json!(x)))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        json!({
            "grid_n": self.grid_n,
            "quantities": self.quantities.iter().map(|q| q.name()).collect::<Vec<_>>(),
            "rows": rows,
        })
    }

    pub fn write_json<W: Write>(&self, mut w: W) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut w, &self.to_json())?;
        writeln!(w)?;
        w.flush()
    }

    pub fn write_to(&self, path: &Path, format: OutputFormat) -> io::Result<()> {
        let w = BufWriter::new(File::create(path)?);
        match format {
            OutputFormat::Csv => self.write_csv(w),
            OutputFormat::Json => self.write_json(w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

    #[test]
    fn axis_hits_both_endpoints_exactly() {
        let axis = grid_axis(33);
        assert_eq!(axis[0], 0.0);
        assert_eq!(axis[32], FRAC_PI_4);
        assert_eq!(grid_axis(3)[1], FRAC_PI_8);
    }

    #[test]
    fn points_are_row_major_in_r_b() {
        let pts = grid_points(3);
        assert_eq!(pts.len(), 9);
        assert_eq!((pts[1].r_b(), pts[1].r_c()), (0.0, FRAC_PI_8));
        assert_eq!((pts[3].r_b(), pts[3].r_c()), (FRAC_PI_8, 0.0));
        assert_eq!((pts[4].r_b(), pts[4].r_c()), (FRAC_PI_8, FRAC_PI_8));
    }

    #[test]
    fn quantities_parse_and_order() {
        assert_eq!("Deltas".parse::<Quantity>(), Ok(Quantity::Deltas));
        assert!("tangle".parse::<Quantity>().is_err());
        let t = SweepTable::evaluate(2, &[Quantity::Series, Quantity::Corrected, Quantity::Series])
            .unwrap();
        assert_eq!(t.quantities, vec![Quantity::Corrected, Quantity::Series]);
        assert_eq!(
            t.columns,
            vec!["r_b", "r_c", "n_a", "n_bi", "n_ci", "pi_corrected", "delta_pi_series"]
        );
    }

    #[test]
    fn deltas_on_the_two_point_grid() {
        let t = SweepTable::evaluate(2, &[Quantity::Deltas]).unwrap();
        assert_eq!(t.rows.len(), 4);
        let dpi = t.column("delta_pi").unwrap();
        assert_eq!(dpi[0], 0.0);
        assert!((dpi[3] - 0.011_224_175_097_420_32).abs() < 1e-15);
    }

    #[test]
    fn invalid_configs() {
        let cfg = |grid_n, quantities: Vec<Quantity>| SweepConfig {
            grid_n,
            output_format: OutputFormat::Csv,
            output_path: "out.csv".into(),
            quantities,
        };
        assert!(cfg(1, vec![Quantity::Corrected]).validate().is_err());
        assert!(cfg(4097, vec![Quantity::Corrected]).validate().is_err());
        assert!(cfg(4, vec![]).validate().is_err());
        assert!(cfg(4096, vec![Quantity::Legacy]).validate().is_ok());
        assert!(SweepTable::evaluate(1, &[Quantity::Corrected]).is_err());
    }

    #[test]
    fn csv_layout() {
        let t = SweepTable::evaluate(2, &[Quantity::Series]).unwrap();
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.split('\n').collect();
        assert_eq!(lines[0], CSV_MAGIC);
        assert_eq!(lines[1], "r_b,r_c,delta_pi_series");
        assert_eq!(lines[2], "0,0,0");
        assert_eq!(lines.len(), 7);
        assert!(!text.contains('\r'));
    }
}
