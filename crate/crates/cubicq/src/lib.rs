pub mod report;
pub mod ring;
pub mod words;
pub mod freealg;
pub mod expr;
pub mod rewrite;
pub mod hecke;
pub mod h3reps;
pub mod q3struct;
pub mod a4tilde;
pub mod vogel;
pub mod weights;
pub mod verify;
pub mod cli;
