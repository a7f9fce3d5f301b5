//! CSV rows for scans.

use serde::Serialize;

use crate::toi::{format_exponent, Verdict};

/// One measured quantity with its predicted value and bound, when known.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRecord {
    pub family: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub p: f64,
    pub epsilon: f64,
    pub measured: f64,
    pub predicted: Option<f64>,
    pub bound: Option<f64>,
    pub verdict: Option<Verdict>,
}

impl ScanRecord {
    pub const CSV_HEADER: &'static str = "family,N,p,epsilon,measured,predicted,bound,verdict";

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| format!("{x:.16e}")).unwrap_or_default();
        format!(
            "{},{},{},{:.16e},{:.16e},{},{},{}",
            self.family,
            self.n,
            format_exponent(self.p),
            self.epsilon,
            self.measured,
            opt(self.predicted),
            opt(self.bound),
            self.verdict.map(|v| v.to_string()).unwrap_or_default()
        )
    }

    pub fn failed(&self) -> bool {
        self.verdict == Some(Verdict::Fail)
    }
}

/// Header plus one line per record, newline terminated.
pub fn records_to_csv(records: &[ScanRecord]) -> String {
    let mut out = String::from(ScanRecord::CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// `Pass` when `measured` matches `predicted` to relative tolerance `tol`.
pub fn relative_verdict(measured: f64, predicted: f64, tol: f64) -> Verdict {
    let scale = predicted.abs().max(f64::MIN_POSITIVE);
    if (measured - predicted).abs() <= tol * scale {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Least-squares slope of `log y` against `log x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (lx, ly): (Vec<f64>, Vec<f64>) = points.iter().map(|&(x, y)| (x.ln(), y.ln())).unzip();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
