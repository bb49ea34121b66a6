//! Session configuration: a single JSON document fixing the backend, the
//! weight, the truncation box and the output format. CLI flags override
//! individual fields; reports echo a digest of the effective configuration
//! so outputs are self-describing.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::heis::SupportBox;
use crate::parse;
use crate::scalar::{Context, ScalarConfig};
use crate::verma::Weight;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum BackendConfig {
    Rational,
    Cyclotomic { order: u32, exponents: Vec<Vec<i64>> },
    Generic,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct LambdaConfig {
    /// Scalar literal for the value on `h`.
    #[serde(default = "zero_literal")]
    pub h: String,
    /// Scalar literals for the central values `c_1..c_n`.
    #[serde(default)]
    pub c: Vec<String>,
    /// Scalar literals for the derivation values `d_1..d_n`; zero when
    /// omitted.
    #[serde(default)]
    pub d: Vec<String>,
}

impl Default for LambdaConfig {
    fn default() -> Self {
        LambdaConfig { h: zero_literal(), c: Vec::new(), d: Vec::new() }
    }
}

fn zero_literal() -> String {
    "0".into()
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct BoxConfig {
    pub bound: i64,
    pub maxlen: usize,
}

impl Default for BoxConfig {
    fn default() -> Self {
        BoxConfig { bound: 2, maxlen: 3 }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Tsv,
}

/// The full session document.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SessionConfig {
    pub n: usize,
    pub backend: BackendConfig,
    #[serde(default)]
    pub lambda: LambdaConfig,
    #[serde(rename = "box", default)]
    pub support: BoxConfig,
    #[serde(default = "default_raise_bound")]
    pub raise_bound: i64,
    #[serde(default)]
    pub output: OutputFormat,
}

fn default_raise_bound() -> i64 {
    2
}

impl SessionConfig {
    pub fn from_json(text: &str) -> Result<SessionConfig> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    fn scalar_config(&self) -> ScalarConfig {
        match &self.backend {
            BackendConfig::Rational => ScalarConfig::rational(self.n),
            BackendConfig::Generic => ScalarConfig::generic(self.n),
            BackendConfig::Cyclotomic { order, exponents } => {
                ScalarConfig::cyclotomic(self.n, *order, exponents.clone())
            }
        }
    }

    /// Validate everything and build the computation context, the weight
    /// and the box.
    pub fn build(&self) -> Result<(Context, Weight, SupportBox)> {
        let ctx = Context::new(self.scalar_config())?;
        if !self.lambda.c.is_empty() && self.lambda.c.len() != self.n {
            return Err(Error::Config(format!(
                "lambda.c has {} entries, rank is {}",
                self.lambda.c.len(),
                self.n
            )));
        }
        if !self.lambda.d.is_empty() && self.lambda.d.len() != self.n {
            return Err(Error::Config(format!(
                "lambda.d has {} entries, rank is {}",
                self.lambda.d.len(),
                self.n
            )));
        }
        let h = parse::parse_scalar(&ctx, &self.lambda.h)?;
        let mut c = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let lit = self.lambda.c.get(i).map(String::as_str).unwrap_or("0");
            c.push(parse::parse_scalar(&ctx, lit)?);
        }
        let mut d = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let lit = self.lambda.d.get(i).map(String::as_str).unwrap_or("0");
            d.push(parse::parse_scalar(&ctx, lit)?);
        }
        let weight = Weight::new(&ctx, h, c, d)?;
        let support = SupportBox::new(self.support.bound, self.support.maxlen)?;
        if self.raise_bound < 1 {
            return Err(Error::Config("raise_bound must be at least 1".into()));
        }
        Ok((ctx, weight, support))
    }

    /// Short digest of the effective configuration, echoed by every report.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_string(self).expect("config serializes");
        let hash = Sha256::digest(canonical.as_bytes());
        let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
        hex[..16].to_string()
    }
}
