pub mod baseline;
pub mod engine;
pub mod evaluation;
pub mod fixtures;
pub mod lexbuild;
pub mod lexfmt;
pub mod script;
