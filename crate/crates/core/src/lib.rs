//! Exact evaluation and verification of determinants of matrices built from
//! Pascal-triangle-type recurrences and binomial coefficients.

pub mod cli;
pub mod closedform;
pub mod detengine;
pub mod exactalg;
pub mod factorid;
pub mod hyper;
pub mod luwitness;
pub mod matrix;
pub mod recmatrix;
pub mod report;
pub mod series2d;
