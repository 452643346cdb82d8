//! Experiment configuration: a versioned JSON schema with strict fields.

use serde::{Deserialize, Serialize};

use crate::boundary::BoundarySamples;
use crate::error::{Error, Result};
use crate::poly::TaylorPoly;
use num_complex::Complex64;

pub const SCHEMA_VERSION: u32 = 1;

/// Kernel specification: an explicit coefficient list or a named family.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum KernelSpec {
    /// Analytic polynomial by [re, im] coefficient pairs (index = frequency).
    Coeffs { values: Vec<[f64; 2]> },
    /// Boundary function with analytic part `pos` (frequencies 0, 1, ...)
    /// and anti-analytic part `neg` (frequencies -1, -2, ...).
    Boundary {
        pos: Vec<[f64; 2]>,
        neg: Vec<[f64; 2]>,
    },
    /// Truncated geometric series 1/(1 - ratio·z) up to the given degree.
    Geometric { ratio: f64, degree: usize },
    /// Seeded random polynomial; the seed comes from the experiment config.
    Random { degree: usize },
}

impl KernelSpec {
    /// Stable identifier used in report rows (never contains commas).
    pub fn id(&self) -> String {
        match self {
            KernelSpec::Coeffs { values } => format!("coeffs-d{}", values.len().saturating_sub(1)),
            KernelSpec::Boundary { pos, neg } => {
                format!("boundary-p{}-n{}", pos.len(), neg.len())
            }
            KernelSpec::Geometric { ratio, degree } => format!("geom-{ratio}-d{degree}"),
            KernelSpec::Random { degree } => format!("random-d{degree}"),
        }
    }

    pub fn to_poly(&self) -> Result<TaylorPoly> {
        match self {
            KernelSpec::Coeffs { values } => Ok(TaylorPoly::new(
                values.iter().map(|&[re, im]| Complex64::new(re, im)).collect(),
            )),
            KernelSpec::Geometric { ratio, degree } => Ok(TaylorPoly::new(
                (0..=*degree)
                    .map(|n| Complex64::new(ratio.powi(n as i32), 0.0))
                    .collect(),
            )),
            _ => Err(Error::Config(
                "kernel spec does not describe an analytic polynomial".into(),
            )),
        }
    }

    pub fn to_samples(&self, m: usize) -> Result<BoundarySamples> {
        match self {
            KernelSpec::Boundary { pos, neg } => BoundarySamples::from_fn(m, |theta| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (n, &[re, im]) in pos.iter().enumerate() {
                    acc += Complex64::new(re, im) * Complex64::from_polar(1.0, n as f64 * theta);
                }
                for (n, &[re, im]) in neg.iter().enumerate() {
                    acc += Complex64::new(re, im)
                        * Complex64::from_polar(1.0, -((n + 1) as f64) * theta);
                }
                acc
            }),
            _ => BoundarySamples::from_poly(&self.to_poly()?, m),
        }
    }
}

/// One experiment run. Unknown JSON fields are rejected.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub schema_version: u32,
    pub experiment: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<KernelSpec>,
    /// Angular grid size (power of two).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_m: Option<usize>,
    /// Radial quadrature order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corpus_size: Option<usize>,
    /// Radial cutoff for cone quadrature in sweep experiments.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone_r_min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out_dir: Option<String>,
}

impl ExperimentConfig {
    pub fn named(experiment: &str) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            experiment: experiment.to_string(),
            p: None,
            q: None,
            kernel: None,
            grid_m: None,
            grid_r: None,
            degree_cap: None,
            tol: None,
            seed: None,
            corpus_size: None,
            cone_r_min: None,
            out_dir: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig = serde_json::from_str(text)?;
        if cfg.schema_version != SCHEMA_VERSION {
            return Err(Error::Config(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                cfg.schema_version
            )));
        }
        Ok(cfg)
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(7)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrips_losslessly() {
        let mut cfg = ExperimentConfig::named("duality");
        cfg.p = Some(4.0);
        cfg.seed = Some(99);
        cfg.kernel = Some(KernelSpec::Boundary {
            pos: vec![[1.0, 0.0]],
            neg: vec![[0.5, -0.25]],
        });
        let text = serde_json::to_string(&cfg).unwrap();
        let back = ExperimentConfig::from_json(&text).unwrap();
        assert_eq!(cfg, back);
    }

    #[test]
    fn rejects_unknown_fields() {
        let text = r#"{"schema_version":1,"experiment":"duality","bogus":3}"#;
        assert!(ExperimentConfig::from_json(text).is_err());
    }

    #[test]
    fn rejects_wrong_schema_version() {
        let text = r#"{"schema_version":2,"experiment":"duality"}"#;
        assert!(ExperimentConfig::from_json(text).is_err());
    }

    #[test]
    fn kernel_ids_have_no_commas() {
        for spec in [
            KernelSpec::Coeffs {
                values: vec![[1.0, 0.0], [0.5, 0.5]],
            },
            KernelSpec::Boundary {
                pos: vec![[1.0, 0.0]],
                neg: vec![[0.0, 1.0]],
            },
            KernelSpec::Geometric {
                ratio: 0.5,
                degree: 30,
            },
            KernelSpec::Random { degree: 12 },
        ] {
            assert!(!spec.id().contains(','));
        }
    }

    #[test]
    fn geometric_kernel_values() {
        let spec = KernelSpec::Geometric {
            ratio: 0.5,
            degree: 3,
        };
        let p = spec.to_poly().unwrap();
        assert_eq!(p.degree(), 3);
        assert!((p.coeff(2).re - 0.25).abs() < 1e-15);
    }
}
