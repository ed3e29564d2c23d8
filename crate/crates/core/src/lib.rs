pub mod coeff;
pub mod algebra;
pub mod bialgebra;
pub mod report;
pub mod poisson;
pub mod lm;
pub mod hopf;
pub mod rmatrix;
pub mod suite;
pub mod cli;
