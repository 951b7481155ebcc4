//! Tolerances, sample counts and grid sizes for the verification suites.
//!
//! The file format is flat `key = value` TOML; every key is optional and
//! unknown keys are rejected so typos do not silently fall back to a
//! default.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyConfig {
    // schwarzian
    pub nehari_tol: f64,
    pub closed_form_tol: f64,
    pub closed_form_samples: usize,
    pub kra_maskit_samples: usize,
    pub pointwise_l2_samples: usize,
    pub invariance_samples: usize,
    pub invariance_tol: f64,
    pub cocycle_tol: f64,
    pub sup_norm_max_radius: f64,
    pub sup_norm_radial_steps: usize,
    pub sup_norm_angular_steps: usize,
    // anderson
    pub anderson_samples: usize,
    pub anderson_slack: f64,
    pub local_anderson_samples: usize,
    pub witness_tol: f64,
    // epstein
    pub flow_samples: usize,
    pub flow_tol: f64,
    pub tangency_tol: f64,
    pub curvature_law_tol: f64,
    pub curvature_order_min: f64,
    pub koebe_curvature_tol: f64,
    pub curvature_step: f64,
    pub richardson_step: f64,
    pub convexity_margin: f64,
    // dome
    pub dome_samples: usize,
    pub dome_identity_tol: f64,
    pub dome_identity_disk_tol: f64,
    pub lipschitz_pairs: usize,
    pub lipschitz_disk_tol: f64,
    pub lipschitz_slit_slack: f64,
    pub thurston_lipschitz_slack: f64,
    pub bending_angle_tol: f64,
    pub continuity_tol: f64,
    // wvolume
    pub ball_radii: Vec<f64>,
    pub wvolume_ball_tol: f64,
    pub scaling_tol: f64,
    pub mean_curvature_spindle_tol: f64,
    pub mean_curvature_ball_tol: f64,
    pub spindle_agreement_tol: f64,
    pub metric_flow_tol: f64,
    pub pairing_tol: f64,
    pub linearity_tol: f64,
    // bounds
    pub slope_rel_tol: f64,
    pub gk_rate_rel_tol: f64,
    pub exact_tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            nehari_tol: 1e-6,
            closed_form_tol: 1e-10,
            closed_form_samples: 200,
            kra_maskit_samples: 1000,
            pointwise_l2_samples: 200,
            invariance_samples: 200,
            invariance_tol: 1e-9,
            cocycle_tol: 1e-10,
            sup_norm_max_radius: 8.0,
            sup_norm_radial_steps: 64,
            sup_norm_angular_steps: 96,
            anderson_samples: 100,
            anderson_slack: 1e-6,
            local_anderson_samples: 20,
            witness_tol: 1e-9,
            flow_samples: 1000,
            flow_tol: 1e-9,
            tangency_tol: 1e-9,
            curvature_law_tol: 1e-6,
            curvature_order_min: 1.8,
            koebe_curvature_tol: 1e-3,
            curvature_step: 1e-3,
            richardson_step: 2e-3,
            convexity_margin: 1e-3,
            dome_samples: 100,
            dome_identity_tol: 1e-6,
            dome_identity_disk_tol: 1e-9,
            lipschitz_pairs: 400,
            lipschitz_disk_tol: 1e-3,
            lipschitz_slit_slack: 1e-2,
            thurston_lipschitz_slack: 1e-3,
            bending_angle_tol: 1e-9,
            continuity_tol: 1e-6,
            ball_radii: vec![0.1, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0],
            wvolume_ball_tol: 1e-6,
            scaling_tol: 1e-5,
            mean_curvature_spindle_tol: 1e-5,
            mean_curvature_ball_tol: 1e-9,
            spindle_agreement_tol: 1e-5,
            metric_flow_tol: 1e-6,
            pairing_tol: 1e-6,
            linearity_tol: 1e-12,
            slope_rel_tol: 0.01,
            gk_rate_rel_tol: 0.02,
            exact_tol: 0.0,
        }
    }
}

impl VerifyConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    /// The configuration as `key = value` lines, in declaration order.
    pub fn echo(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_defaults() {
        let c = VerifyConfig::parse("flow_samples = 10\nnehari_tol = 1e-5\n").unwrap();
        assert_eq!(c.flow_samples, 10);
        assert_eq!(c.nehari_tol, 1e-5);
        assert_eq!(c.dome_samples, VerifyConfig::default().dome_samples);
    }

    #[test]
    fn unknown_and_malformed_keys_rejected() {
        assert!(matches!(VerifyConfig::parse("nehari_tl = 1"), Err(Error::Config(_))));
        assert!(matches!(VerifyConfig::parse("flow_samples = \"many\""), Err(Error::Config(_))));
    }

    #[test]
    fn echo_round_trips() {
        let c = VerifyConfig::default();
        assert_eq!(VerifyConfig::parse(&c.echo()).unwrap(), c);
    }
}
