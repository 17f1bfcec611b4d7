//! Monomials, monomial orders and pure binomials `x^u - x^v`, plus the maps
//! between codewords and binomials.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::Codeword;
use crate::error::{Error, Result};
use crate::field::Prime;

/// Exponent vector `u` of the monomial `x^u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(exps: Vec<u64>) -> Self {
        ExponentVector(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize, e: u64) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        ExponentVector(v)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        crate::code::support(&self.0)
    }

    /// `x^self | x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn disjoint(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// `self - other`; caller guarantees `other` divides `self`.
    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }
}

impl From<Vec<u64>> for ExponentVector {
    fn from(v: Vec<u64>) -> Self {
        ExponentVector(v)
    }
}

/// A total multiplicative order on monomials.
///
/// `priority` lists variable indices from most to least significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex {
        priority: Vec<usize>,
    },
    GrLex {
        priority: Vec<usize>,
    },
    GrevLex {
        priority: Vec<usize>,
    },
    Weighted {
        weights: Vec<u64>,
        tie_break: Box<MonomialOrder>,
    },
}

fn check_permutation(priority: &[usize]) -> Result<()> {
    let mut seen = vec![false; priority.len()];
    for &i in priority {
        if i >= priority.len() || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidOrder(format!(
                "{priority:?} is not a permutation of 0..{}",
                priority.len()
            )));
        }
    }
    Ok(())
}

impl MonomialOrder {
    pub fn lex(n: usize) -> Self {
        MonomialOrder::Lex {
            priority: (0..n).collect(),
        }
    }

    pub fn grlex(n: usize) -> Self {
        MonomialOrder::GrLex {
            priority: (0..n).collect(),
        }
    }

    pub fn grevlex(n: usize) -> Self {
        MonomialOrder::GrevLex {
            priority: (0..n).collect(),
        }
    }

    pub fn lex_with(priority: Vec<usize>) -> Result<Self> {
        check_permutation(&priority)?;
        Ok(MonomialOrder::Lex { priority })
    }

    pub fn grlex_with(priority: Vec<usize>) -> Result<Self> {
        check_permutation(&priority)?;
        Ok(MonomialOrder::GrLex { priority })
    }

    pub fn grevlex_with(priority: Vec<usize>) -> Result<Self> {
        check_permutation(&priority)?;
        Ok(MonomialOrder::GrevLex { priority })
    }

    pub fn weighted(weights: Vec<u64>, tie_break: MonomialOrder) -> Result<Self> {
        if weights.len() != tie_break.num_vars() {
            return Err(Error::LengthMismatch(weights.len(), tie_break.num_vars()));
        }
        Ok(MonomialOrder::Weighted {
            weights,
            tie_break: Box::new(tie_break),
        })
    }

    /// Lex order in which the variables of `first` dominate, in the given
    /// order, followed by the remaining variables ascending.
    pub fn lex_block(n: usize, first: &[usize]) -> Result<Self> {
        let mut priority = first.to_vec();
        priority.extend((0..n).filter(|i| !first.contains(i)));
        Self::lex_with(priority)
    }

    pub fn num_vars(&self) -> usize {
        match self {
            MonomialOrder::Lex { priority }
            | MonomialOrder::GrLex { priority }
            | MonomialOrder::GrevLex { priority } => priority.len(),
            MonomialOrder::Weighted { weights, .. } => weights.len(),
        }
    }

    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
        let n = self.num_vars();
        if a.len() != n || b.len() != n {
            let bad = if a.len() != n { a.len() } else { b.len() };
            return Err(Error::LengthMismatch(bad, n));
        }
        Ok(self.cmp_unchecked(a.as_slice(), b.as_slice()))
    }

    pub(crate) fn cmp_unchecked(&self, a: &[u64], b: &[u64]) -> Ordering {
        match self {
            MonomialOrder::Lex { priority } => lex_cmp(priority, a, b),
            MonomialOrder::GrLex { priority } => degree(a)
                .cmp(&degree(b))
                .then_with(|| lex_cmp(priority, a, b)),
            MonomialOrder::GrevLex { priority } => {
                degree(a).cmp(&degree(b)).then_with(|| {
                    // Smaller exponent in the last differing variable wins.
                    priority
                        .iter()
                        .rev()
                        .map(|&i| b[i].cmp(&a[i]))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                })
            }
            MonomialOrder::Weighted { weights, tie_break } => {
                let wa: u128 = a
                    .iter()
                    .zip(weights)
                    .map(|(&e, &w)| e as u128 * w as u128)
                    .sum();
                let wb: u128 = b
                    .iter()
                    .zip(weights)
                    .map(|(&e, &w)| e as u128 * w as u128)
                    .sum();
                wa.cmp(&wb).then_with(|| tie_break.cmp_unchecked(a, b))
            }
        }
    }
}

fn degree(a: &[u64]) -> u64 {
    a.iter().sum()
}

fn lex_cmp(priority: &[usize], a: &[u64], b: &[u64]) -> Ordering {
    priority
        .iter()
        .map(|&i| a[i].cmp(&b[i]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// A pure binomial `x^plus - x^minus`: the two sides are distinct and have
/// disjoint supports. The zero polynomial is never a `Binomial`; operations
/// that can cancel return `Option<Binomial>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawBinomial", into = "RawBinomial")]
pub struct Binomial {
    plus: ExponentVector,
    minus: ExponentVector,
}

#[derive(Serialize, Deserialize)]
struct RawBinomial {
    plus: Vec<u64>,
    minus: Vec<u64>,
}

impl TryFrom<RawBinomial> for Binomial {
    type Error = Error;

    fn try_from(raw: RawBinomial) -> Result<Self> {
        Binomial::new(raw.plus.into(), raw.minus.into())
    }
}

impl From<Binomial> for RawBinomial {
    fn from(b: Binomial) -> Self {
        RawBinomial {
            plus: b.plus.0,
            minus: b.minus.0,
        }
    }
}

impl Binomial {
    pub fn new(plus: ExponentVector, minus: ExponentVector) -> Result<Self> {
        if plus.len() != minus.len() {
            return Err(Error::LengthMismatch(plus.len(), minus.len()));
        }
        if plus == minus || !plus.disjoint(&minus) {
            return Err(Error::NotPure);
        }
        Ok(Binomial { plus, minus })
    }

    pub fn from_vecs(plus: Vec<u64>, minus: Vec<u64>) -> Result<Self> {
        Self::new(plus.into(), minus.into())
    }

    /// `x^a - x^b` with the common factor removed, or `None` if `a == b`.
    pub fn from_difference(a: &ExponentVector, b: &ExponentVector) -> Option<Self> {
        if a == b {
            return None;
        }
        let g = a.gcd(b);
        Some(Binomial {
            plus: a.sub(&g),
            minus: b.sub(&g),
        })
    }

    /// `x_i^e - 1`.
    pub fn power_minus_one(n: usize, i: usize, e: u64) -> Self {
        Binomial {
            plus: ExponentVector::unit(n, i, e),
            minus: ExponentVector::zero(n),
        }
    }

    pub fn plus(&self) -> &ExponentVector {
        &self.plus
    }

    pub fn minus(&self) -> &ExponentVector {
        &self.minus
    }

    pub fn num_vars(&self) -> usize {
        self.plus.len()
    }

    /// `x^minus - x^plus`.
    pub fn swapped(&self) -> Binomial {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// One side is the constant monomial `1`.
    pub fn is_one_sided(&self) -> bool {
        self.plus.is_zero() || self.minus.is_zero()
    }

    /// Whether this is `x_i^e - 1` (in either orientation) for `e = p`.
    pub fn is_field_relation(&self, p: u64) -> bool {
        let check = |a: &ExponentVector, b: &ExponentVector| {
            b.is_zero() && a.support().len() == 1 && a.degree() == p
        };
        check(&self.plus, &self.minus) || check(&self.minus, &self.plus)
    }

    /// `supp(plus) ∪ supp(minus)`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.num_vars())
            .filter(|&i| self.plus.0[i] != 0 || self.minus.0[i] != 0)
            .collect()
    }

    /// Orients so that `plus ≻ minus`; the flag reports a sign flip.
    pub fn orient(&self, order: &MonomialOrder) -> (Binomial, bool) {
        match order.cmp_unchecked(self.plus.as_slice(), self.minus.as_slice()) {
            Ordering::Less => (self.swapped(), true),
            _ => (self.clone(), false),
        }
    }

    pub fn oriented(&self, order: &MonomialOrder) -> Binomial {
        self.orient(order).0
    }

    /// Orientation-free representative: the grevlex-oriented form. Two
    /// binomials are equal up to sign iff their canonical forms are equal.
    pub fn canonical(&self) -> Binomial {
        self.oriented(&MonomialOrder::grevlex(self.num_vars()))
    }

    /// Number of orientations this unordered element contributes to an
    /// oriented count: one for `x^u - 1` forms, two otherwise.
    pub fn orientation_count(&self) -> usize {
        if self.is_one_sided() {
            1
        } else {
            2
        }
    }

    /// `(plus - minus) mod p` as a vector over `F_p`.
    pub fn word(&self, p: Prime) -> Codeword {
        let coords = self
            .plus
            .0
            .iter()
            .zip(&self.minus.0)
            .map(|(&a, &b)| p.sub(a % p.get(), b % p.get()))
            .collect();
        Codeword::candidate(coords, p)
    }

    pub fn display(&self, names: VariableNames) -> BinomialDisplay<'_> {
        BinomialDisplay { b: self, names }
    }

    /// Parses the text syntax `x1^2*x3 - x2` (or `a^2*c - b` with aliases).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let err = |m: String| Error::Parse {
            line: 1,
            message: m,
        };
        let (lhs, rhs) = text
            .split_once(" - ")
            .ok_or_else(|| err(format!("`{text}` is not of the form `lhs - rhs`")))?;
        let plus = parse_monomial(lhs.trim(), n).map_err(err)?;
        let minus = parse_monomial(rhs.trim(), n).map_err(err)?;
        Binomial::new(plus, minus).map_err(|e| err(e.to_string()))
    }
}

fn parse_monomial(text: &str, n: usize) -> std::result::Result<ExponentVector, String> {
    let mut exps = vec![0u64; n];
    if text == "1" {
        return Ok(ExponentVector(exps));
    }
    for factor in text.split('*') {
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => (
                v,
                e.parse::<u64>()
                    .map_err(|_| format!("bad exponent in `{factor}`"))?,
            ),
            None => (factor, 1),
        };
        let idx = if let Some(num) = var.strip_prefix('x').filter(|s| !s.is_empty()) {
            num.parse::<usize>()
                .ok()
                .filter(|&i| i >= 1)
                .map(|i| i - 1)
                .ok_or_else(|| format!("bad variable `{var}`"))?
        } else {
            let mut chars = var.chars();
            match (chars.next(), chars.next()) {
                (Some(c @ 'a'..='z'), None) => (c as u8 - b'a') as usize,
                _ => return Err(format!("bad variable `{var}`")),
            }
        };
        if idx >= n {
            return Err(format!("variable `{var}` out of range for {n} variables"));
        }
        exps[idx] += exp;
    }
    Ok(ExponentVector(exps))
}

/// Variable naming in text output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VariableNames {
    /// `x1, ..., xn`.
    #[default]
    Indexed,
    /// `a, b, c, ...`; falls back to indexed names beyond 26 variables.
    Alphabetic,
}

fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    e: &ExponentVector,
    names: VariableNames,
) -> fmt::Result {
    if e.is_zero() {
        return write!(f, "1");
    }
    let alpha = names == VariableNames::Alphabetic && e.len() <= 26;
    let mut first = true;
    for (i, &x) in e.0.iter().enumerate() {
        if x == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if alpha {
            write!(f, "{}", (b'a' + i as u8) as char)?;
        } else {
            write!(f, "x{}", i + 1)?;
        }
        if x != 1 {
            write!(f, "^{x}")?;
        }
    }
    Ok(())
}

pub struct BinomialDisplay<'a> {
    b: &'a Binomial,
    names: VariableNames,
}

impl fmt::Display for BinomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.b.plus, self.names)?;
        write!(f, " - ")?;
        write_monomial(f, &self.b.minus, self.names)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(VariableNames::Indexed).fmt(f)
    }
}

/// A codeword together with the coordinates placed on the `+` side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodewordSplit {
    word: Codeword,
    plus_side: Vec<usize>,
}

impl CodewordSplit {
    /// `plus_side` must be a subset of the word's support.
    pub fn new(word: Codeword, plus_side: Vec<usize>) -> Result<Self> {
        if word.is_zero() {
            return Err(Error::ZeroWord);
        }
        if let Some(&i) = plus_side
            .iter()
            .find(|&&i| i >= word.len() || word.coords()[i] == 0)
        {
            return Err(Error::IndexOutOfRange {
                index: i,
                cols: word.len(),
            });
        }
        Ok(CodewordSplit { word, plus_side })
    }

    pub fn word(&self) -> &Codeword {
        &self.word
    }

    pub fn plus_side(&self) -> &[usize] {
        &self.plus_side
    }

    /// `plus_i = c_i` on the plus side, `minus_i = p - c_i` on the rest of
    /// the support.
    pub fn binomial(&self) -> Binomial {
        let p = self.word.modulus().get();
        let n = self.word.len();
        let mut plus = vec![0; n];
        let mut minus = vec![0; n];
        for i in self.word.support() {
            let c = self.word.coords()[i];
            if self.plus_side.contains(&i) {
                plus[i] = c;
            } else {
                minus[i] = p - c;
            }
        }
        Binomial {
            plus: ExponentVector(plus),
            minus: ExponentVector(minus),
        }
    }
}

/// All binomials associated with a nonzero word, one per subset of its support
/// placed on the `+` side (subsets ordered by bitmask). Without the trivial
/// splits this yields `2^s - 2` binomials for a word of weight `s`.
pub fn all_splits(word: &Codeword, include_trivial: bool) -> Result<Vec<Binomial>> {
    if word.is_zero() {
        return Err(Error::ZeroWord);
    }
    let supp = word.support();
    let s = supp.len();
    let p = word.modulus().get();
    let full = (1u64 << s) - 1;
    let n = word.len();
    let mut out = Vec::with_capacity(1 << s);
    for mask in 0..=full {
        if !include_trivial && (mask == 0 || mask == full) {
            continue;
        }
        let mut plus = vec![0; n];
        let mut minus = vec![0; n];
        for (bit, &i) in supp.iter().enumerate() {
            let c = word.coords()[i];
            if mask >> bit & 1 == 1 {
                plus[i] = c;
            } else {
                minus[i] = p - c;
            }
        }
        out.push(Binomial {
            plus: ExponentVector(plus),
            minus: ExponentVector(minus),
        });
    }
    Ok(out)
}
