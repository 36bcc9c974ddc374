//! Cumulant specification: a positive rational `theta` together with a map
//! from nonempty partitions to rational coefficients.
//!
//! Wire format (JSON, rationals as `"p/q"` strings, entries sorted by
//! partition):
//!
//! ```json
//! {
//!   "theta": "1/1",
//!   "c": [
//!     { "partition": [2], "value": "1/1" }
//!   ]
//! }
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::partition::Partition;
use crate::error::{Error, Result};
use crate::rational::{parse_ratio, ratio_to_string, Ratio};

/// Inputs of the moment formulas: `theta > 0` and coefficients `c_nu`
/// indexed by partitions with at least one part.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulantSpec {
    theta: Ratio,
    c: BTreeMap<Partition, Ratio>,
}

#[derive(Serialize, Deserialize)]
struct RawEntry {
    partition: Vec<u32>,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    theta: String,
    c: Vec<RawEntry>,
}

impl CumulantSpec {
    pub fn new(theta: Ratio, entries: Vec<(Partition, Ratio)>) -> Result<Self> {
        if theta <= Ratio::zero() {
            return Err(Error::InvalidParameter(format!(
                "theta must be positive, got {}",
                ratio_to_string(&theta)
            )));
        }
        let mut c = BTreeMap::new();
        for (nu, value) in entries {
            if nu.is_empty() {
                return Err(Error::SpecFormat(
                    "coefficient keyed by the empty partition".to_string(),
                ));
            }
            c.insert(nu, value);
        }
        Ok(CumulantSpec { theta, c })
    }

    pub fn theta(&self) -> &Ratio {
        &self.theta
    }

    pub fn coeff(&self, nu: &Partition) -> Ratio {
        self.c.get(nu).cloned().unwrap_or_else(Ratio::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &Ratio)> {
        self.c.iter()
    }

    /// Largest partition weight carrying a nonzero coefficient.
    pub fn max_weight(&self) -> usize {
        self.c
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(nu, _)| nu.weight())
            .max()
            .unwrap_or(0)
    }

    pub fn to_json_string(&self) -> String {
        let raw = RawSpec {
            theta: ratio_to_string(&self.theta),
            c: self
                .c
                .iter()
                .map(|(nu, v)| RawEntry {
                    partition: nu.parts().to_vec(),
                    value: ratio_to_string(v),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("spec serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: RawSpec = serde_json::from_str(s)?;
        let theta = parse_ratio(&raw.theta)?;
        let mut entries = Vec::with_capacity(raw.c.len());
        for e in raw.c {
            let nu = Partition::new(e.partition)
                .map_err(|err| Error::SpecFormat(err.to_string()))?;
            entries.push((nu, parse_ratio(&e.value)?));
        }
        CumulantSpec::new(theta, entries)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text)
    }
}
