//! Pair and set files (JSON) and the `re:im` complex codec.
//!
//! Numeric fields round-trip losslessly: complex entries are serialized as
//! `re:im` with shortest-round-trip decimal formatting, everything else as
//! JSON numbers.

use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{Grid, SampledFunction};
use crate::steppairs::StepVector;
use crate::verify::{FunctionPair, PairData, ParamValue, Provenance};

pub const SCHEMA_VERSION: u32 = 1;

/// `re:im` with shortest round-trip decimals; a bare real stays bare.
pub fn format_complex(z: Complex64) -> String {
    format!("{}:{}", z.re, z.im)
}

/// Parse `re:im`; a bare `re` is taken as real.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let s = s.trim();
    let parse_part = |p: &str| -> Result<f64> {
        p.trim()
            .parse::<f64>()
            .map_err(|_| Error::contract(format!("cannot parse '{p}' as a number")))
    };
    match s.split_once(':') {
        Some((re, im)) => Ok(Complex64::new(parse_part(re)?, parse_part(im)?)),
        None => Ok(Complex64::new(parse_part(s)?, 0.0)),
    }
}

/// Parse a comma-separated list of `re:im` entries.
pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>> {
    s.split(',').map(parse_complex).collect()
}

fn encode_values(values: &[Complex64]) -> Vec<String> {
    values.iter().map(|&z| format_complex(z)).collect()
}

fn decode_values(values: &[String]) -> Result<Vec<Complex64>> {
    values.iter().map(|s| parse_complex(s)).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepData {
    pub left: Vec<String>,
    pub right: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampledData {
    pub grid: Grid,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<(f64, f64)>,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

/// On-disk form of a candidate pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairFile {
    pub schema_version: u32,
    /// "step" or "sampled".
    pub kind: String,
    pub construction: String,
    pub parameters: BTreeMap<String, ParamValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step: Option<StepData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampled: Option<SampledData>,
}

impl PairFile {
    pub fn from_pair(pair: &FunctionPair) -> Self {
        let (kind, step, sampled) = match &pair.data {
            PairData::Step { left, right } => (
                "step".to_string(),
                Some(StepData {
                    left: encode_values(&left.entries),
                    right: encode_values(&right.entries),
                }),
                None,
            ),
            PairData::Sampled { left, right } => (
                "sampled".to_string(),
                None,
                Some(SampledData {
                    grid: left.grid,
                    support: left.support_hint,
                    left: encode_values(&left.values),
                    right: encode_values(&right.values),
                }),
            ),
        };
        PairFile {
            schema_version: SCHEMA_VERSION,
            kind,
            construction: pair.provenance.construction.clone(),
            parameters: pair.provenance.parameters.clone(),
            step,
            sampled,
        }
    }

    pub fn to_pair(&self) -> Result<FunctionPair> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::contract(format!(
                "unsupported schema_version {}",
                self.schema_version
            )));
        }
        let mut provenance = Provenance::new(self.construction.clone());
        provenance.parameters = self.parameters.clone();
        match (self.kind.as_str(), &self.step, &self.sampled) {
            ("step", Some(data), _) => FunctionPair::step(
                StepVector::new(decode_values(&data.left)?)?,
                StepVector::new(decode_values(&data.right)?)?,
                provenance,
            ),
            ("sampled", _, Some(data)) => FunctionPair::sampled(
                SampledFunction::new(data.grid, decode_values(&data.left)?, data.support)?,
                SampledFunction::new(data.grid, decode_values(&data.right)?, data.support)?,
                provenance,
            ),
            _ => Err(Error::contract(format!(
                "pair file of kind '{}' is missing its data section",
                self.kind
            ))),
        }
    }
}

/// On-disk form of a function set (explicit step vectors, or the recipe for
/// a reproducible UZD construction).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SetFile {
    pub schema_version: u32,
    /// "step-set", "uzd-line" or "uzd-periodic".
    pub kind: String,
    pub parameters: BTreeMap<String, ParamValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vec<Vec<String>>>,
}

impl SetFile {
    pub fn step_set(vectors: &[StepVector]) -> Self {
        SetFile {
            schema_version: SCHEMA_VERSION,
            kind: "step-set".to_string(),
            parameters: BTreeMap::new(),
            vectors: Some(vectors.iter().map(|v| encode_values(&v.entries)).collect()),
        }
    }

    pub fn uzd_line(m: usize) -> Self {
        let mut parameters = BTreeMap::new();
        parameters.insert("m".to_string(), ParamValue::Num(m as f64));
        SetFile {
            schema_version: SCHEMA_VERSION,
            kind: "uzd-line".to_string(),
            parameters,
            vectors: None,
        }
    }

    pub fn uzd_periodic(n: u32) -> Self {
        let mut parameters = BTreeMap::new();
        parameters.insert("n".to_string(), ParamValue::Num(n as f64));
        SetFile {
            schema_version: SCHEMA_VERSION,
            kind: "uzd-periodic".to_string(),
            parameters,
            vectors: None,
        }
    }

    pub fn step_vectors(&self) -> Result<Vec<StepVector>> {
        let vectors = self
            .vectors
            .as_ref()
            .ok_or_else(|| Error::contract("set file carries no step vectors"))?;
        vectors
            .iter()
            .map(|v| StepVector::new(decode_values(v)?))
            .collect()
    }

    pub fn num_param(&self, key: &str) -> Result<f64> {
        match self.parameters.get(key) {
            Some(ParamValue::Num(v)) => Ok(*v),
            _ => Err(Error::contract(format!("set file is missing parameter '{key}'"))),
        }
    }
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let body = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Format { path: path.to_path_buf(), message: e.to_string() })?;
    std::fs::write(path, body + "\n")
        .map_err(|e| Error::Io { path: path.to_path_buf(), source: e })
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let body = std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.to_path_buf(), source: e })?;
    serde_json::from_str(&body)
        .map_err(|e| Error::Format { path: path.to_path_buf(), message: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn complex_codec_parses_bare_reals_and_pairs() {
        assert_eq!(parse_complex("1.5").unwrap(), Complex64::new(1.5, 0.0));
        assert_eq!(parse_complex("-2:0.25").unwrap(), Complex64::new(-2.0, 0.25));
        assert_eq!(
            parse_complex_list("1,0:1,-1:0").unwrap(),
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(-1.0, 0.0)
            ]
        );
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1:2:3").is_err());
    }

    #[test]
    fn pair_file_round_trip_is_bit_identical() {
        let left = StepVector::new(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.1 + 0.2, -1.0 / 3.0),
        ])
        .unwrap();
        let right = StepVector::new(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(std::f64::consts::PI, 1e-17),
        ])
        .unwrap();
        let pair = FunctionPair::step(
            left.clone(),
            right.clone(),
            Provenance::new("test").with_num("p", 0.30000000000000004),
        )
        .unwrap();
        let file = PairFile::from_pair(&pair);
        let json = serde_json::to_string(&file).unwrap();
        let back: PairFile = serde_json::from_str(&json).unwrap();
        let pair2 = back.to_pair().unwrap();
        let PairData::Step { left: l2, right: r2 } = &pair2.data else { panic!() };
        assert_eq!(left.entries, l2.entries);
        assert_eq!(right.entries, r2.entries);
        assert_eq!(file.parameters, back.parameters);
    }

    proptest! {
        #[test]
        fn complex_codec_round_trips(re in any::<f64>(), im in any::<f64>()) {
            prop_assume!(re.is_finite() && im.is_finite());
            let z = Complex64::new(re, im);
            let back = parse_complex(&format_complex(z)).unwrap();
            prop_assert!(back.re == z.re || (back.re.is_nan() && z.re.is_nan()));
            prop_assert!(back.im == z.im || (back.im.is_nan() && z.im.is_nan()));
        }
    }
}
