//! Expression language and corpus format.

mod ast;
mod corpus;
mod lexer;
mod parser;

pub(crate) use ast::at;
pub use ast::{eval_const, eval_expr, Expr, ExprKind};
pub use corpus::{
    bundled, is_zero_endpoint, parse_corpus, rational_endpoint, Bound, Corpus, IdentitySpec,
    InequalitySpec, Relation, SequenceSpec, BUNDLED_CORPUS,
};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse_expression;
