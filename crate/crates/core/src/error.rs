use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31]")]
    NotPrime(u64),
    #[error("mixed moduli: {0} and {1}")]
    ModulusMismatch(u64, u64),
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("value {value} is not a canonical residue modulo {modulus}")]
    NotCanonical { value: u64, modulus: u64 },
    #[error("matrix shape error: {0}")]
    Shape(String),
    #[error("column index {index} out of range for {cols} columns")]
    IndexOutOfRange { index: usize, cols: usize },
    #[error("duplicate index {0} in column set")]
    DuplicateIndex(usize),
    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("generator matrix has a zero column at index {0}")]
    ZeroColumn(usize),
    #[error("column set has {got} indices, expected {expected}")]
    WrongCardinality { expected: usize, got: usize },
    #[error("column set {0:?} is not an information set")]
    NotInformationSet(Vec<usize>),
    #[error("vector is not a codeword")]
    NotACodeword,
    #[error("enumeration of {work} items exceeds the cap of {cap}")]
    TooLarge { work: u128, cap: u64 },
    #[error("operation requires a nonzero word")]
    ZeroWord,
    #[error("exponent vectors have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("binomial sides must be distinct with disjoint supports")]
    NotPure,
    #[error("binomial is not in the code ideal")]
    NotInIdeal,
    #[error("operation requires a binary code, got p = {0}")]
    NotBinary(u64),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
