//! Circuits, primitive binomials and the Graver basis of a code ideal, the
//! universal Gröbner basis of a binary code, and the Singleton-code test.
//!
//! Set-valued results are orientation-free: `x^u - x^v` and `x^v - x^u` are
//! one element, stored in [`Binomial::canonical`] form.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binomial::{all_splits, Binomial};
use crate::code::{Codeword, LinearCode};
use crate::error::{Error, Result};
use crate::groebner::{closed_form_gb, CodeIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Circuits,
    Graver,
    Universal,
    Reduced,
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisKind::Circuits => "circuits",
            BasisKind::Graver => "graver",
            BasisKind::Universal => "universal",
            BasisKind::Reduced => "reduced",
        };
        f.write_str(s)
    }
}

/// A labeled set of binomials of one code ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSet {
    kind: BasisKind,
    p: u64,
    n: usize,
    k: usize,
    elements: Vec<Binomial>,
}

impl BasisSet {
    /// Set-valued basis; elements are canonicalized, deduplicated and sorted.
    pub fn from_unordered(
        kind: BasisKind,
        code: &LinearCode,
        elements: impl IntoIterator<Item = Binomial>,
    ) -> Self {
        let set: BTreeSet<Binomial> = elements.into_iter().map(|b| b.canonical()).collect();
        BasisSet {
            kind,
            p: code.p(),
            n: code.length(),
            k: code.dimension(),
            elements: set.into_iter().collect(),
        }
    }

    /// Keeps the given elements, orientation and order as they are.
    pub fn from_oriented(kind: BasisKind, code: &LinearCode, elements: Vec<Binomial>) -> Self {
        BasisSet {
            kind,
            p: code.p(),
            n: code.length(),
            k: code.dimension(),
            elements,
        }
    }

    pub(crate) fn from_parts(
        kind: BasisKind,
        p: u64,
        n: usize,
        k: usize,
        elements: Vec<Binomial>,
    ) -> Self {
        BasisSet {
            kind,
            p,
            n,
            k,
            elements,
        }
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn unordered_count(&self) -> usize {
        self.elements.len()
    }

    /// Two orientations per two-sided element, one per `x^u - 1` form.
    pub fn oriented_count(&self) -> usize {
        self.elements.iter().map(Binomial::orientation_count).sum()
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        let c = b.canonical();
        self.elements.iter().any(|e| e.canonical() == c)
    }

    /// Orientation-free view of the elements.
    pub fn unordered_set(&self) -> BTreeSet<Binomial> {
        self.elements.iter().map(Binomial::canonical).collect()
    }
}

/// The primitive relations `x_i^p - 1`: those with `e_i` not a codeword.
fn field_relations(code: &LinearCode) -> impl Iterator<Item = Binomial> + '_ {
    let n = code.length();
    (0..n)
        .filter(move |&i| !code.contains(&unit_word(n, i)))
        .map(move |i| Binomial::power_minus_one(n, i, code.p()))
}

fn unit_word(n: usize, i: usize) -> Vec<u64> {
    let mut w = vec![0; n];
    w[i] = 1;
    w
}

/// Splits of a binary codeword used by the bases: the nontrivial ones, or
/// `x_i - 1` for a weight-one word.
fn binary_splits(word: &Codeword) -> Result<Vec<Binomial>> {
    all_splits(word, word.weight() == 1)
}

/// Primitivity test against a prepared membership oracle.
///
/// `b` is primitive when no other binomial `x^u - x^u'` of the ideal has
/// `x^u | x^plus` and `x^u' | x^minus`, with `(u, u') != (0, 0)`. For binary
/// codes `x^c - 1` with `wt(c) >= 2` is not primitive by convention: it is a
/// multiple of the split binomials of `c` up to units.
pub fn is_primitive_in(ideal: &CodeIdeal, b: &Binomial) -> Result<bool> {
    if !ideal.contains(b) {
        return Err(Error::NotInIdeal);
    }
    let p = ideal.p();
    let plus = b.plus().as_slice();
    let minus = b.minus().as_slice();
    if b.is_field_relation(p) {
        // x_i^p - 1 is primitive unless x_i - 1 is in the ideal.
        let mut unit = vec![0; plus.len()];
        unit[b.support()[0]] = 1;
        return Ok(!ideal.contains_difference(&unit, &vec![0; plus.len()]));
    }
    if p == 2 && b.is_one_sided() && b.plus().degree() >= 2 {
        return Ok(false);
    }
    // An exponent >= p is divisible by a side of x_i^p - 1.
    if plus.iter().chain(minus).any(|&e| e >= p) {
        return Ok(false);
    }
    Ok(!has_proper_divisor(ideal, plus, minus))
}

/// Searches all `(u, u') <= (plus, minus)` other than `(0, 0)` and
/// `(plus, minus)` for a member `x^u - x^u'` of the ideal.
fn has_proper_divisor(ideal: &CodeIdeal, plus: &[u64], minus: &[u64]) -> bool {
    let bounds: Vec<(usize, u64)> = plus
        .iter()
        .chain(minus)
        .copied()
        .enumerate()
        .filter(|&(_, e)| e > 0)
        .collect();
    let n = plus.len();
    let mut digits = vec![0u64; bounds.len()];
    let mut u = vec![0u64; n];
    let mut v = vec![0u64; n];
    loop {
        // Odometer step over the digits; stop after the full box.
        let mut carry = true;
        for (d, &(pos, max)) in digits.iter_mut().zip(&bounds) {
            let slot = if pos < n {
                &mut u[pos]
            } else {
                &mut v[pos - n]
            };
            if *d < max {
                *d += 1;
                *slot = *d;
                carry = false;
                break;
            }
            *d = 0;
            *slot = 0;
        }
        if carry {
            return false;
        }
        if u == plus && v == minus {
            continue;
        }
        if ideal.contains_difference(&u, &v) {
            return true;
        }
    }
}

/// Whether `b` is a primitive binomial of the code ideal.
pub fn is_primitive(b: &Binomial, code: &LinearCode) -> Result<bool> {
    is_primitive_in(&CodeIdeal::new(code), b)
}

fn check_basis_work(code: &LinearCode) -> Result<()> {
    let splits = 1u128.checked_shl(code.length() as u32).unwrap_or(u128::MAX);
    code.check_work(code.size().saturating_mul(splits))
}

/// Every primitive split of a nonzero codeword. For binary codes only the
/// splits from `binary_splits` are considered.
fn primitive_splits(code: &LinearCode, ideal: &CodeIdeal) -> Result<BTreeSet<Binomial>> {
    let binary = code.field().is_binary();
    let mut out = BTreeSet::new();
    for word in code.nonzero_codewords()? {
        let splits = if binary {
            binary_splits(&word)?
        } else {
            all_splits(&word, true)?
        };
        for b in splits {
            let c = b.canonical();
            if out.contains(&c) {
                continue;
            }
            if is_primitive_in(ideal, &b)? {
                out.insert(c);
            }
        }
    }
    Ok(out)
}

/// All primitive binomials of the code ideal, including `x_i^p - 1`.
pub fn graver(code: &LinearCode) -> Result<BasisSet> {
    check_basis_work(code)?;
    let ideal = CodeIdeal::new(code);
    let mut set = primitive_splits(code, &ideal)?;
    set.extend(field_relations(code));
    Ok(BasisSet::from_unordered(BasisKind::Graver, code, set))
}

/// Inclusion-minimal members of a family of supports, as indices.
fn minimal_indices(supports: &[Vec<usize>]) -> Vec<usize> {
    let is_subset = |a: &[usize], b: &[usize]| a.iter().all(|i| b.contains(i));
    (0..supports.len())
        .filter(|&i| {
            !supports
                .iter()
                .any(|other| other.len() < supports[i].len() && is_subset(other, &supports[i]))
        })
        .collect()
}

/// Circuits of the code ideal.
///
/// Binary codes: the splits from `binary_splits` of codewords whose support is
/// inclusion-minimal. Otherwise: primitive binomials with both
/// sides nonconstant whose support `supp(plus) ∪ supp(minus)` is minimal among
/// the supports of all such binomials.
pub fn circuits(code: &LinearCode) -> Result<BasisSet> {
    check_basis_work(code)?;
    let elements: Vec<Binomial> = if code.field().is_binary() {
        let words: Vec<Codeword> = code.nonzero_codewords()?.collect();
        let supports: Vec<Vec<usize>> = words.iter().map(Codeword::support).collect();
        let mut out = Vec::new();
        for i in minimal_indices(&supports) {
            out.extend(binary_splits(&words[i])?);
        }
        out
    } else {
        let ideal = CodeIdeal::new(code);
        let two_sided: Vec<Binomial> = primitive_splits(code, &ideal)?
            .into_iter()
            .filter(|b| !b.is_one_sided())
            .collect();
        let supports: Vec<Vec<usize>> = two_sided.iter().map(Binomial::support).collect();
        minimal_indices(&supports)
            .into_iter()
            .map(|i| two_sided[i].clone())
            .collect()
    };
    Ok(BasisSet::from_unordered(
        BasisKind::Circuits,
        code,
        elements,
    ))
}

fn complement_of_support(code: &LinearCode, word: &Codeword) -> Vec<usize> {
    let supp = word.support();
    (0..code.length()).filter(|i| !supp.contains(i)).collect()
}

/// `rank(G restricted to the zero positions of c) == k - 1`.
pub fn rank_condition(code: &LinearCode, word: &Codeword) -> Result<bool> {
    if word.len() != code.length() {
        return Err(Error::LengthMismatch(word.len(), code.length()));
    }
    if word.is_zero() {
        return Err(Error::ZeroWord);
    }
    let rank = code
        .generator()
        .rank_of_columns(&complement_of_support(code, word))?;
    Ok(rank + 1 == code.dimension())
}

fn meets_singleton_conditions(code: &LinearCode, word: &Codeword) -> Result<bool> {
    Ok(word.weight() <= code.singleton_bound() && rank_condition(code, word)?)
}

fn require_binary(code: &LinearCode) -> Result<()> {
    if code.field().is_binary() {
        Ok(())
    } else {
        Err(Error::NotBinary(code.p()))
    }
}

/// Universal Gröbner basis of a binary code: the splits from `binary_splits`
/// of codewords of weight at most `n - k + 1` satisfying the rank condition,
/// together with `x_i^2 - 1` for every `i` with `e_i` not a codeword.
pub fn universal_gb_binary(code: &LinearCode) -> Result<BasisSet> {
    require_binary(code)?;
    check_basis_work(code)?;
    let mut elements: Vec<Binomial> = field_relations(code).collect();
    for word in code.nonzero_codewords()? {
        if meets_singleton_conditions(code, &word)? {
            elements.extend(binary_splits(&word)?);
        }
    }
    Ok(BasisSet::from_unordered(
        BasisKind::Universal,
        code,
        elements,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingletonVerdict {
    pub is_singleton: bool,
    /// A nonzero codeword of weight at most `n - k + 1` failing the rank
    /// condition, when one exists.
    pub witness: Option<Codeword>,
}

/// Whether every nonzero codeword of weight at most `n - k + 1` satisfies the
/// rank condition.
pub fn is_singleton_code(code: &LinearCode) -> Result<SingletonVerdict> {
    require_binary(code)?;
    for word in code.nonzero_codewords()? {
        if word.weight() <= code.singleton_bound() && !rank_condition(code, &word)? {
            return Ok(SingletonVerdict {
                is_singleton: false,
                witness: Some(word),
            });
        }
    }
    Ok(SingletonVerdict {
        is_singleton: true,
        witness: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub unordered: usize,
    pub oriented: usize,
}

impl From<&BasisSet> for Counts {
    fn from(b: &BasisSet) -> Self {
        Counts {
            unordered: b.unordered_count(),
            oriented: b.oriented_count(),
        }
    }
}

/// Outcome of [`verify_chain`].
#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub p: u64,
    pub n: usize,
    pub k: usize,
    pub circuits: Counts,
    pub graver: Counts,
    pub universal: Option<Counts>,
    pub violations: Vec<String>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ChainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}, {}] code over F_{}", self.n, self.k, self.p)?;
        let line = |f: &mut fmt::Formatter<'_>, name: &str, c: &Counts| {
            writeln!(
                f,
                "{name}: {} unordered, {} oriented",
                c.unordered, c.oriented
            )
        };
        line(f, "circuits", &self.circuits)?;
        if let Some(u) = &self.universal {
            line(f, "universal", u)?;
        }
        line(f, "graver", &self.graver)?;
        for v in &self.violations {
            writeln!(f, "VIOLATION: {v}")?;
        }
        write!(
            f,
            "{}",
            if self.holds() {
                "chain holds"
            } else {
                "chain FAILS"
            }
        )
    }
}

/// Checks the inclusion chain circuits ⊆ universal ⊆ Graver.
///
/// Binary codes: circuits ∪ {x_i^2 - 1}, the Graver basis and the universal
/// basis must coincide, and the primitive two-sided binomials must be exactly
/// the splits of codewords meeting the weight and rank conditions. Other
/// primes: circuits ⊆ Graver, and every closed-form lex basis (one per
/// information set) lies in the Graver basis.
pub fn verify_chain(code: &LinearCode) -> Result<ChainReport> {
    let circ = circuits(code)?;
    let grav = graver(code)?;
    let grav_set = grav.unordered_set();
    let circ_set = circ.unordered_set();
    let mut violations = Vec::new();
    let mut universal = None;

    if code.field().is_binary() {
        let ugb = universal_gb_binary(code)?;
        universal = Some(Counts::from(&ugb));
        let ugb_set = ugb.unordered_set();
        let mut circ_sq = circ_set.clone();
        circ_sq.extend(field_relations(code).map(|b| b.canonical()));
        if circ_sq != grav_set {
            violations.push(format!(
                "circuits ∪ squares ({}) differs from Graver ({})",
                circ_sq.len(),
                grav_set.len()
            ));
        }
        if ugb_set != grav_set {
            violations.push(format!(
                "universal basis ({}) differs from Graver ({})",
                ugb_set.len(),
                grav_set.len()
            ));
        }
        violations.extend(primitive_characterization_violations(code, &grav_set)?);
    } else {
        for b in circ_set.difference(&grav_set) {
            violations.push(format!("circuit {b} is not in the Graver basis"));
        }
    }

    for info_set in code.information_sets() {
        for g in closed_form_gb(code, &info_set)?.elements() {
            if !grav_set.contains(&g.canonical()) {
                violations.push(format!(
                    "reduced lex element {g} for information set {info_set:?} is not primitive"
                ));
            }
        }
    }

    Ok(ChainReport {
        p: code.p(),
        n: code.length(),
        k: code.dimension(),
        circuits: Counts::from(&circ),
        graver: Counts::from(&grav),
        universal,
        violations,
    })
}

/// For a binary code, compares the primitive binomials other than
/// `x_i^2 - 1` (found by divisor search) with the splits of codewords meeting the weight bound and
/// rank condition, and checks that no primitive binomial exceeds the weight
/// bound.
pub fn primitive_characterization_violations(
    code: &LinearCode,
    graver_set: &BTreeSet<Binomial>,
) -> Result<Vec<String>> {
    require_binary(code)?;
    let p = code.field();
    let primitive: BTreeSet<Binomial> = graver_set
        .iter()
        .filter(|b| !b.is_field_relation(2))
        .cloned()
        .collect();
    let mut characterized = BTreeSet::new();
    for word in code.nonzero_codewords()? {
        if meets_singleton_conditions(code, &word)? {
            characterized.extend(binary_splits(&word)?.iter().map(Binomial::canonical));
        }
    }
    let mut violations = Vec::new();
    for b in primitive.difference(&characterized) {
        violations.push(format!(
            "primitive {b} fails the weight/rank characterization"
        ));
    }
    for b in characterized.difference(&primitive) {
        violations.push(format!(
            "{b} meets the weight/rank conditions but is not primitive"
        ));
    }
    for b in &primitive {
        if b.word(p).weight() > code.singleton_bound() {
            violations.push(format!("primitive {b} exceeds the Singleton bound"));
        }
    }
    Ok(violations)
}
