use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Hard cap on the degree of spin (t-free) sweeps.
pub const SPIN_DEGREE_CAP: u32 = 14;
/// Hard cap on the degree of sweeps that keep `t` symbolic.
pub const SYMBOLIC_DEGREE_CAP: u32 = 10;

/// Parameters shared by the verification suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub s_values: Vec<u32>,
    pub k_max: u32,
    pub degree_max: u32,
    pub parallel: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { s_values: vec![1, 2, 3, 5], k_max: SPIN_DEGREE_CAP, degree_max: SPIN_DEGREE_CAP, parallel: true }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.degree_max > SPIN_DEGREE_CAP {
            return Err(Error::Config(format!("degree_max {} exceeds the cap {}", self.degree_max, SPIN_DEGREE_CAP)));
        }
        if self.s_values.contains(&0) {
            return Err(Error::Config("s_values must be positive".into()));
        }
        Ok(())
    }

    /// Degree bound for sweeps in Q(t).
    pub fn symbolic_degree(&self) -> u32 {
        self.degree_max.min(SYMBOLIC_DEGREE_CAP)
    }

    pub fn odd_s(&self) -> impl Iterator<Item = u32> + '_ {
        self.s_values.iter().copied().filter(|s| s % 2 == 1)
    }
}

impl FromStr for SweepConfig {
    type Err = Error;

    /// `key = value` lines; `#` starts a comment. Unset keys keep their defaults.
    fn from_str(text: &str) -> Result<Self> {
        let mut cfg = SweepConfig::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", n + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| Error::Config(format!("line {}: {what} {value:?}", n + 1));
            match key {
                "s_values" => {
                    cfg.s_values = value
                        .split(',')
                        .map(|x| x.trim().parse::<u32>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| bad("invalid s_values"))?;
                }
                "k_max" => cfg.k_max = value.parse().map_err(|_| bad("invalid k_max"))?,
                "degree_max" => cfg.degree_max = value.parse().map_err(|_| bad("invalid degree_max"))?,
                "parallel" => cfg.parallel = value.parse().map_err(|_| bad("invalid parallel"))?,
                other => return Err(Error::Config(format!("line {}: unknown key {other:?}", n + 1))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}
