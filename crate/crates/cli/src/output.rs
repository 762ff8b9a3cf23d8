//! The structured output document. Its JSON form is the stable interface;
//! the text form is for people.

use std::fmt::Write as _;

use exphilbert::identities::IdentityReport;
use exphilbert::{BigRational, HilbertData, RationalPolynomial, RootSystem};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    pub request: Request,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Analysis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<Series>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Roots>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<Report>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Request {
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Analysis {
    pub dim_variety: usize,
    pub embedding_degree: String,
    pub dim_irrep: String,
    /// Coefficients of p(x), lowest degree first.
    pub exp_polynomial: Vec<String>,
    pub hilbert_polynomial: Vec<String>,
    pub hs_numerator: Vec<String>,
    pub hs_pole_order: usize,
    /// c_λ(α) in the order of the positive roots.
    pub c_values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub exp_polynomial: Vec<String>,
    pub table: Vec<SeriesRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub n: u64,
    pub dim: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Roots {
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    pub count: usize,
    pub positive_roots: Vec<RootEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootEntry {
    pub coords: Vec<u32>,
    pub height: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    pub parameter_range: String,
    pub checked: usize,
    pub verified: bool,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub parameters: String,
    pub lhs: String,
    pub rhs: String,
}

/// `"a/b"` in lowest terms with `b > 0`, or `"a"` for integers.
pub fn rational(q: &BigRational) -> String {
    q.to_string()
}

pub fn coefficients(p: &RationalPolynomial) -> Vec<String> {
    p.coeffs().iter().map(rational).collect()
}

impl OutputDocument {
    pub fn new(command: &str, request: Request) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            request,
            analysis: None,
            series: None,
            roots: None,
            verification: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output document always serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let r = &self.request;
        if let (Some(f), Some(rank)) = (&r.family, r.rank) {
            let _ = write!(out, "type {f}{rank}");
            if let Some(w) = &r.weight {
                let w: Vec<_> = w.iter().map(u64::to_string).collect();
                let _ = write!(out, ", weight ({})", w.join(","));
            }
            out.push('\n');
        }
        if let Some(a) = &self.analysis {
            let _ = writeln!(out, "dim X            {}", a.dim_variety);
            let _ = writeln!(out, "deg embedding    {}", a.embedding_degree);
            let _ = writeln!(out, "dim L(λ)         {}", a.dim_irrep);
            let _ = writeln!(out, "p(x)             {}", poly_text(&a.exp_polynomial, "x"));
            let _ = writeln!(out, "H(t)             {}", poly_text(&a.hilbert_polynomial, "t"));
            let _ = writeln!(
                out,
                "HS(x)            ({}) / (1-x)^{}",
                poly_text(&a.hs_numerator, "x"),
                a.hs_pole_order
            );
        }
        if let Some(s) = &self.series {
            let _ = writeln!(out, "p(x) = {}", poly_text(&s.exp_polynomial, "x"));
            let _ = writeln!(out, "{:>4}  dim L(nλ)", "n");
            for row in &s.table {
                let _ = writeln!(out, "{:>4}  {}", row.n, row.dim);
            }
        }
        if let Some(roots) = &self.roots {
            let _ = writeln!(out, "cartan matrix");
            for row in &roots.cartan {
                let cells: Vec<_> = row.iter().map(|a| format!("{a:>3}")).collect();
                let _ = writeln!(out, "  {}", cells.join(""));
            }
            let _ = writeln!(out, "symmetrizers {:?}", roots.symmetrizers);
            let _ = writeln!(out, "{} positive roots", roots.count);
            for root in &roots.positive_roots {
                let _ = writeln!(out, "  {:>3}  {:?}", root.height, root.coords);
            }
        }
        if let Some(reports) = &self.verification {
            for rep in reports {
                let status = if rep.verified { "ok" } else { "FAILED" };
                let _ = writeln!(
                    out,
                    "{:<20}{:<8}{} checks  ({})",
                    rep.identity, status, rep.checked, rep.parameter_range
                );
                for f in &rep.failures {
                    let _ = writeln!(out, "    {}: {} != {}", f.parameters, f.lhs, f.rhs);
                }
            }
        }
        out
    }
}

fn poly_text(coeffs: &[String], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.as_str() != "0")
        .map(|(k, c)| (k, if k > 0 && c.contains('/') { format!("({c})") } else { c.clone() }))
        .map(|(k, c)| match k {
            0 => c,
            1 => format!("{c}{var}"),
            _ => format!("{c}{var}^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub fn analysis(data: &HilbertData, c_values: &[BigRational]) -> Analysis {
    Analysis {
        dim_variety: data.dim_variety,
        embedding_degree: data.embedding_degree.to_string(),
        dim_irrep: data.dim_irrep.to_string(),
        exp_polynomial: coefficients(data.exp_polynomial.polynomial()),
        hilbert_polynomial: coefficients(&data.hilbert_polynomial),
        hs_numerator: coefficients(&data.hs_numerator),
        hs_pole_order: data.dim_variety + 1,
        c_values: c_values.iter().map(rational).collect(),
    }
}

pub fn series(p: &RationalPolynomial, dims: &[BigUint]) -> Series {
    Series {
        exp_polynomial: coefficients(p),
        table: dims
            .iter()
            .enumerate()
            .map(|(n, d)| SeriesRow {
                n: n as u64,
                dim: d.to_string(),
            })
            .collect(),
    }
}

pub fn roots(system: &RootSystem) -> Roots {
    Roots {
        cartan: system.cartan().to_vec(),
        symmetrizers: system.symmetrizers().to_vec(),
        count: system.positive_roots().len(),
        positive_roots: system
            .positive_roots()
            .iter()
            .map(|r| RootEntry {
                coords: r.coords().to_vec(),
                height: r.height(),
            })
            .collect(),
    }
}

pub fn report(r: &IdentityReport) -> Report {
    Report {
        identity: r.identity_name.clone(),
        parameter_range: r.parameter_range.clone(),
        checked: r.checked_count,
        verified: r.verified(),
        failures: r
            .failures
            .iter()
            .map(|f| Failure {
                parameters: f.parameters.clone(),
                lhs: f.lhs.clone(),
                rhs: f.rhs.clone(),
            })
            .collect(),
    }
}
