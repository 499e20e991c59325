pub mod cli;
pub mod congruence;
pub mod exec;
pub mod geom;
pub mod logic;
pub mod report;
pub mod scenarios;
pub mod ssa;
pub mod suite;
