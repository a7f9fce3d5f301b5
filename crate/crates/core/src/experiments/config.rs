//! Run configuration shared by the command-line front end.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::random::DEFAULT_SEED;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub n_list: Vec<usize>,
    /// Schatten exponents; `inf` in files and flags is the operator norm.
    #[serde(with = "exponent_list")]
    pub p_list: Vec<f64>,
    pub epsilon_list: Vec<f64>,
    pub seed: u64,
    pub trials: usize,
    pub dims: usize,
    pub tolerance: f64,
    /// Directory receiving output files; standard output only when absent.
    pub out_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n_list: vec![4, 16, 64, 256],
            p_list: vec![1.0, 2.0, 4.0, f64::INFINITY],
            epsilon_list: vec![1.0, 0.5, 0.25],
            seed: DEFAULT_SEED,
            trials: 200,
            dims: 8,
            tolerance: 1e-8,
            out_dir: None,
        }
    }
}

impl RunConfig {
    pub fn from_json(s: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> crate::Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Parses a Schatten exponent, accepting `inf`.
pub fn parse_exponent(s: &str) -> Option<f64> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("inf") {
        return Some(f64::INFINITY);
    }
    t.parse::<f64>().ok().filter(|p| *p > 0.0)
}

mod exponent_list {
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    use super::parse_exponent;
    use crate::toi::format_exponent;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Item {
        Num(f64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(ps: &[f64], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(ps.iter().map(|&p| format_exponent(p)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
        Vec::<Item>::deserialize(d)?
            .into_iter()
            .map(|item| match item {
                Item::Num(p) if p > 0.0 => Ok(p),
                Item::Num(p) => Err(D::Error::custom(format!("invalid exponent {p}"))),
                Item::Text(t) => parse_exponent(&t).ok_or_else(|| D::Error::custom(format!("invalid exponent '{t}'"))),
            })
            .collect()
    }
}
