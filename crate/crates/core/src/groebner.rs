//! Binomial Buchberger algorithm, normal forms and ideal membership for code
//! ideals `I_C = <x^c - x^c' | c - c' in C> + <x_i^p - 1>`.
//!
//! Every polynomial handled here is a difference of two monomials, so no
//! coefficient arithmetic is needed: an S-polynomial or a reduction step of
//! two such differences is again a difference of two monomials, or zero when
//! the monomials coincide.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use crate::binomial::{Binomial, CodewordSplit, ExponentVector, MonomialOrder};
use crate::code::{Codeword, LinearCode};
use crate::error::{Error, Result};

/// `x^lead - x^trail` with `lead ≻ trail`; sides need not be coprime.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Pair {
    lead: Vec<u64>,
    trail: Vec<u64>,
}

impl Pair {
    /// Orients `x^a - x^b`, or `None` if the two monomials are equal.
    fn new(a: Vec<u64>, b: Vec<u64>, order: &MonomialOrder) -> Option<Pair> {
        match order.cmp_unchecked(&a, &b) {
            Ordering::Greater => Some(Pair { lead: a, trail: b }),
            Ordering::Less => Some(Pair { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    fn from_binomial(b: &Binomial, order: &MonomialOrder) -> Pair {
        let o = b.oriented(order);
        Pair {
            lead: o.plus().as_slice().to_vec(),
            trail: o.minus().as_slice().to_vec(),
        }
    }

    fn cancel_common_factor(&mut self) {
        for (a, b) in self.lead.iter_mut().zip(self.trail.iter_mut()) {
            let m = (*a).min(*b);
            *a -= m;
            *b -= m;
        }
    }
}

#[inline]
fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `m / lead * trail` for `lead | m`.
#[inline]
fn rewrite(m: &[u64], lead: &[u64], trail: &[u64]) -> Vec<u64> {
    m.iter()
        .zip(lead)
        .zip(trail)
        .map(|((&x, &l), &t)| x - l + t)
        .collect()
}

fn coprime(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

fn lcm(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

/// Full reduction of `x^lead - x^trail` by `basis`: the leading term first,
/// then the trailing term. Divisors are tried in basis order. With `saturate`
/// the common factor of the two sides is cancelled after every step, which
/// is sound because every variable is a unit modulo a code ideal.
fn reduce_pair(mut p: Pair, basis: &[Pair], order: &MonomialOrder, saturate: bool) -> Option<Pair> {
    if saturate {
        p.cancel_common_factor();
    }
    while let Some(g) = basis.iter().find(|g| divides(&g.lead, &p.lead)) {
        let lead = rewrite(&p.lead, &g.lead, &g.trail);
        p = Pair::new(lead, p.trail, order)?;
        if saturate {
            p.cancel_common_factor();
        }
    }
    while let Some(g) = basis.iter().find(|g| divides(&g.lead, &p.trail)) {
        p.trail = rewrite(&p.trail, &g.lead, &g.trail);
    }
    Some(p)
}

/// Remainder of a binomial on division by a set of binomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalForm {
    Zero,
    /// `x^lead - x^trail`, oriented under the division order. The two sides
    /// may share a common factor.
    NonZero {
        lead: ExponentVector,
        trail: ExponentVector,
    },
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        matches!(self, NormalForm::Zero)
    }
}

/// Normal form of `b` modulo `basis` under `order`. The basis elements are
/// oriented under `order` before use.
pub fn reduce(b: &Binomial, basis: &[Binomial], order: &MonomialOrder) -> NormalForm {
    let pairs: Vec<Pair> = basis
        .iter()
        .map(|g| Pair::from_binomial(g, order))
        .collect();
    match reduce_pair(Pair::from_binomial(b, order), &pairs, order, false) {
        None => NormalForm::Zero,
        Some(p) => NormalForm::NonZero {
            lead: p.lead.into(),
            trail: p.trail.into(),
        },
    }
}

/// Generating set of a code ideal: one binomial per row of the RREF
/// generator, with the pivot coordinate on the `+` side, and `x_i^p - 1` for
/// every coordinate.
#[derive(Debug, Clone)]
pub struct BinomialIdealPresentation {
    pub generators: Vec<Binomial>,
    pub num_vars: usize,
}

impl BinomialIdealPresentation {
    pub fn of_code(code: &LinearCode) -> Self {
        let n = code.length();
        let ech = code.generator().rref();
        let mut generators: Vec<Binomial> = ech
            .pivots
            .iter()
            .enumerate()
            .map(|(r, &pivot)| {
                let word = Codeword::candidate(ech.reduced.row(r).to_vec(), code.field());
                CodewordSplit::new(word, vec![pivot])
                    .expect("pivot lies in the row support")
                    .binomial()
            })
            .collect();
        generators.extend((0..n).map(|i| Binomial::power_minus_one(n, i, code.p())));
        BinomialIdealPresentation {
            generators,
            num_vars: n,
        }
    }
}

/// A Gröbner basis, kept sorted by leading monomial (largest first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Binomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    fn from_pairs(pairs: Vec<Pair>, order: MonomialOrder, reduced: bool) -> Self {
        let mut elements: Vec<Binomial> = pairs
            .into_iter()
            .map(|p| {
                let (lead, trail) = (ExponentVector::new(p.lead), ExponentVector::new(p.trail));
                debug_assert!(lead.disjoint(&trail), "reduced elements are pure");
                Binomial::from_difference(&lead, &trail).expect("nonzero element")
            })
            .collect();
        elements.sort_by(|a, b| order.cmp_unchecked(b.plus().as_slice(), a.plus().as_slice()));
        GroebnerBasis {
            elements,
            order,
            reduced,
        }
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements as a set of oriented binomials.
    pub fn to_set(&self) -> BTreeSet<Binomial> {
        self.elements.iter().cloned().collect()
    }

    pub fn reduce(&self, b: &Binomial) -> NormalForm {
        reduce(b, &self.elements, &self.order)
    }

    /// Checks the defining properties of a reduced basis: distinct leading
    /// monomials that do not divide each other, and no trailing monomial
    /// divisible by any leading monomial.
    pub fn satisfies_reduced_conditions(&self) -> bool {
        let leads: Vec<&ExponentVector> = self.elements.iter().map(Binomial::plus).collect();
        self.elements.iter().enumerate().all(|(i, g)| {
            self.order
                .cmp_unchecked(g.plus().as_slice(), g.minus().as_slice())
                .is_gt()
                && leads
                    .iter()
                    .enumerate()
                    .all(|(j, l)| !l.divides(g.minus()) && (i == j || !l.divides(g.plus())))
        })
    }
}

/// Reduced Gröbner basis of the code ideal under `order`, by Buchberger's
/// algorithm with the normal selection strategy and the coprime criterion.
pub fn buchberger(
    pres: &BinomialIdealPresentation,
    order: &MonomialOrder,
) -> Result<GroebnerBasis> {
    if order.num_vars() != pres.num_vars {
        return Err(Error::LengthMismatch(order.num_vars(), pres.num_vars));
    }
    let mut basis: Vec<Pair> = Vec::new();
    // Unprocessed pairs with the lcm of their leading monomials.
    let mut pending: Vec<(usize, usize, Vec<u64>)> = Vec::new();
    let mut is_pending: HashSet<(usize, usize)> = HashSet::new();

    let add = |p: Pair,
               basis: &mut Vec<Pair>,
               pending: &mut Vec<(usize, usize, Vec<u64>)>,
               is_pending: &mut HashSet<(usize, usize)>| {
        let idx = basis.len();
        for (j, g) in basis.iter().enumerate() {
            if !coprime(&g.lead, &p.lead) {
                pending.push((j, idx, lcm(&g.lead, &p.lead)));
                is_pending.insert((j, idx));
            }
        }
        basis.push(p);
    };

    for g in &pres.generators {
        let p = Pair::from_binomial(g, order);
        if let Some(p) = reduce_pair(p, &basis, order, true) {
            add(p, &mut basis, &mut pending, &mut is_pending);
        }
    }

    while !pending.is_empty() {
        // Normal strategy: smallest lcm of leading monomials first.
        let pos = (0..pending.len())
            .min_by(|&a, &b| order.cmp_unchecked(&pending[a].2, &pending[b].2))
            .expect("non-empty");
        let (i, j, l) = pending.swap_remove(pos);
        is_pending.remove(&(i, j));
        // Chain criterion: the pair is redundant if some third leading
        // monomial divides the lcm and both its pairs are already handled.
        // Pairs with coprime leads never enter `pending` and count as handled.
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chained = basis.iter().enumerate().any(|(k, h)| {
            k != i
                && k != j
                && divides(&h.lead, &l)
                && !is_pending.contains(&key(i, k))
                && !is_pending.contains(&key(j, k))
        });
        if chained {
            continue;
        }
        let (f, g) = (&basis[i], &basis[j]);
        let Some(s) = Pair::new(
            rewrite(&l, &f.lead, &f.trail),
            rewrite(&l, &g.lead, &g.trail),
            order,
        ) else {
            continue;
        };
        if let Some(h) = reduce_pair(s, &basis, order, true) {
            add(h, &mut basis, &mut pending, &mut is_pending);
        }
    }

    Ok(GroebnerBasis::from_pairs(
        interreduce(basis),
        order.clone(),
        true,
    ))
}

/// Minimalize then fully reduce a Gröbner basis.
fn interreduce(basis: Vec<Pair>) -> Vec<Pair> {
    let mut minimal: Vec<Pair> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && divides(&h.lead, &g.lead) && (h.lead != g.lead || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    (0..minimal.len())
        .map(|i| {
            let others: Vec<Pair> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let mut g = minimal[i].clone();
            while let Some(h) = others.iter().find(|h| divides(&h.lead, &g.trail)) {
                g.trail = rewrite(&g.trail, &h.lead, &h.trail);
            }
            g
        })
        .collect()
}

/// Reduced lex Gröbner basis read off from the generator matrix reduced with
/// respect to an information set `J` (given in the desired variable order):
/// `{x_{J_t} - x^{-m_t}} ∪ {x_l^p - 1 : l ∉ J}`, where row `t` of the reduced
/// generator is `e_{J_t} + m_t`. The order is lex with the `J` variables
/// first, in the given order, and the rest ascending.
pub fn closed_form_gb(code: &LinearCode, info_set: &[usize]) -> Result<GroebnerBasis> {
    let n = code.length();
    let not_info = || Error::NotInformationSet(info_set.to_vec());
    match code.is_information_set(info_set) {
        Ok(true) => {}
        Ok(false) | Err(Error::WrongCardinality { .. }) => return Err(not_info()),
        Err(e) => return Err(e),
    }
    let p = code.field();
    let ech = code.generator().rref_wrt(info_set)?;
    let mut pairs = Vec::with_capacity(n);
    for (t, &pivot) in info_set.iter().enumerate() {
        let row = ech.reduced.row(t);
        debug_assert_eq!(row[pivot], 1);
        let mut lead = vec![0; n];
        lead[pivot] = 1;
        let trail: Vec<u64> = row
            .iter()
            .enumerate()
            .map(|(i, &v)| if i == pivot { 0 } else { p.neg(v) })
            .collect();
        pairs.push(Pair { lead, trail });
    }
    for l in (0..n).filter(|l| !info_set.contains(l)) {
        let mut lead = vec![0; n];
        lead[l] = p.get();
        pairs.push(Pair {
            lead,
            trail: vec![0; n],
        });
    }
    let order = MonomialOrder::lex_block(n, info_set)?;
    Ok(GroebnerBasis::from_pairs(pairs, order, true))
}

/// Membership oracle for one code ideal, reusing the lex basis of the first
/// information set.
#[derive(Debug, Clone)]
pub struct CodeIdeal {
    basis: GroebnerBasis,
    pairs: Vec<Pair>,
    num_vars: usize,
    p: u64,
}

impl CodeIdeal {
    pub fn new(code: &LinearCode) -> Self {
        let basis = closed_form_gb(code, &code.first_information_set())
            .expect("first information set is valid");
        let pairs = basis
            .elements()
            .iter()
            .map(|b| Pair::from_binomial(b, basis.order()))
            .collect();
        CodeIdeal {
            basis,
            pairs,
            num_vars: code.length(),
            p: code.p(),
        }
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        b.num_vars() == self.num_vars
            && self.contains_difference(b.plus().as_slice(), b.minus().as_slice())
    }

    /// Whether `x^a - x^b` lies in the ideal (true when `a == b`).
    pub fn contains_difference(&self, a: &[u64], b: &[u64]) -> bool {
        let order = self.basis.order();
        match Pair::new(a.to_vec(), b.to_vec(), order) {
            None => true,
            Some(pair) => reduce_pair(pair, &self.pairs, order, true).is_none(),
        }
    }
}

/// Whether `b` lies in the code ideal, by reduction modulo the closed-form
/// lex basis of the first information set.
pub fn is_member(b: &Binomial, code: &LinearCode) -> bool {
    CodeIdeal::new(code).contains(b)
}
