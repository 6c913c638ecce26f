//! Command-line front end, text formats and law verification for the
//! brace algebras in `cha-core`.

pub mod bialgebra_file;
pub mod cli;
pub mod front;
pub mod parse;
pub mod render;
pub mod verify;
