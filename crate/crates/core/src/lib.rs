#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN.

pub mod bounds;
pub mod cli;
pub mod config;
pub mod dome;
pub mod epstein;
pub mod error;
pub mod halfspace;
pub mod mesh;
pub mod metrics;
pub mod optimize;
pub mod quadrature;
pub mod schwarzian;
pub mod sphere;
pub mod tables;
pub mod verify;
pub mod wvolume;
