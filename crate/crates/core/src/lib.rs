//! Code ideals of linear codes over prime fields.
//!
//! A linear `[n, k]` code `C` over `F_p` defines the binomial ideal
//! `I_C = <x^c - x^c' | c - c' in C> + <x_i^p - 1>`. This crate builds its
//! reduced Gröbner bases (in closed form for lex orders, and by a binomial
//! Buchberger algorithm for any order), its circuits and Graver basis, and for
//! binary codes the universal Gröbner basis and the Singleton-code test.

pub mod bases;
pub mod binomial;
pub mod code;
pub mod error;
pub mod field;
pub mod groebner;
pub mod render;

pub use bases::{
    circuits, graver, is_primitive, is_singleton_code, rank_condition, universal_gb_binary,
    verify_chain, BasisKind, BasisSet, ChainReport, SingletonVerdict,
};
pub use binomial::{
    all_splits, Binomial, CodewordSplit, ExponentVector, MonomialOrder, VariableNames,
};
pub use code::{
    parse_code_file, Codeword, LinearCode, WeightDistribution, DEFAULT_ENUMERATION_CAP,
};
pub use error::{Error, Result};
pub use field::{Echelon, FpElement, MatrixFp, Prime};
pub use groebner::{
    buchberger, closed_form_gb, is_member, reduce, BinomialIdealPresentation, CodeIdeal,
    GroebnerBasis, NormalForm,
};
