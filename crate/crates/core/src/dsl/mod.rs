//! Scenario description language.

pub mod ast;
mod diagnostic;
mod lexer;
mod parser;
mod printer;

pub use ast::*;
pub use diagnostic::{Diagnostic, SourceSpan};
pub use parser::{parse, parse_scenario};
pub use printer::print;
