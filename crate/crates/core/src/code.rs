//! Linear `[n, k]` codes over `F_p`.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::{MatrixFp, Prime};

/// Default bound on the number of items any enumerating operation may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

/// A validated linear code given by a full-rank generator matrix without zero
/// columns. The generator is stored verbatim.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: MatrixFp,
    parity_check: MatrixFp,
    cap: u64,
}

impl LinearCode {
    pub fn from_generator(generator: MatrixFp) -> Result<Self> {
        let rows = generator.rows();
        if rows == 0 {
            return Err(Error::Shape("generator matrix has no rows".into()));
        }
        if let Some(c) = (0..generator.cols()).find(|&c| generator.column_is_zero(c)) {
            return Err(Error::ZeroColumn(c));
        }
        let ech = generator.rref();
        if ech.rank != rows {
            return Err(Error::RankDeficient {
                rank: ech.rank,
                rows,
            });
        }
        // Kernel of the RREF: for each non-pivot column q, 1 at q and
        // -R[j][q] at the j-th pivot column.
        let parity_check = generator.kernel_basis();
        Ok(LinearCode {
            generator,
            parity_check,
            cap: DEFAULT_ENUMERATION_CAP,
        })
    }

    pub fn from_rows(rows: &[Vec<u64>], p: u64) -> Result<Self> {
        Self::from_generator(MatrixFp::from_rows(rows, Prime::new(p)?)?)
    }

    pub fn with_enumeration_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn enumeration_cap(&self) -> u64 {
        self.cap
    }

    pub fn field(&self) -> Prime {
        self.generator.modulus()
    }

    pub fn p(&self) -> u64 {
        self.field().get()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &MatrixFp {
        &self.generator
    }

    /// Parity check matrix `H` with `G H^T = 0` and rank `n - k`.
    ///
    /// For a systematic generator `(I_k | M)` this is exactly `(-M^T | I_{n-k})`.
    pub fn parity_check(&self) -> &MatrixFp {
        &self.parity_check
    }

    /// `n - k + 1`, the Singleton bound on the minimum distance.
    pub fn singleton_bound(&self) -> usize {
        self.length() - self.dimension() + 1
    }

    pub fn contains(&self, coords: &[u64]) -> bool {
        coords.len() == self.length()
            && self
                .parity_check
                .mul_vec(coords)
                .map(|s| s.iter().all(|&v| v == 0))
                .unwrap_or(false)
    }

    /// Checked codeword constructor.
    pub fn codeword(&self, coords: Vec<u64>) -> Result<Codeword> {
        let p = self.p();
        if let Some(&v) = coords.iter().find(|&&v| v >= p) {
            return Err(Error::NotCanonical {
                value: v,
                modulus: p,
            });
        }
        if !self.contains(&coords) {
            return Err(Error::NotACodeword);
        }
        Ok(Codeword::unchecked(coords, self.field()))
    }

    /// Encodes a message `m` of length `k` as `m G`.
    pub fn encode(&self, message: &[u64]) -> Result<Codeword> {
        if message.len() != self.dimension() {
            return Err(Error::WrongCardinality {
                expected: self.dimension(),
                got: message.len(),
            });
        }
        let p = self.field();
        let m: Vec<u64> = message.iter().map(|&v| v % p.get()).collect();
        Ok(Codeword::unchecked(self.generator.vec_mul(&m), p))
    }

    /// Dual code, generated by the parity check matrix.
    pub fn dual(&self) -> Result<LinearCode> {
        Ok(LinearCode::from_generator(self.parity_check.clone())?.with_enumeration_cap(self.cap))
    }

    /// Whether both codes have the same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field() == other.field()
            && self.length() == other.length()
            && self.dimension() == other.dimension()
            && (0..other.dimension()).all(|r| self.contains(other.generator.row(r)))
    }

    pub fn is_information_set(&self, columns: &[usize]) -> Result<bool> {
        if columns.len() != self.dimension() {
            return Err(Error::WrongCardinality {
                expected: self.dimension(),
                got: columns.len(),
            });
        }
        Ok(self.generator.rank_of_columns(columns)? == self.dimension())
    }

    /// All information sets as ascending index lists, in lexicographic order.
    pub fn information_sets(&self) -> Vec<Vec<usize>> {
        (0..self.length())
            .combinations(self.dimension())
            .filter(|j| self.generator.rank_of_columns(j) == Ok(self.dimension()))
            .collect()
    }

    /// Lexicographically first information set.
    pub fn first_information_set(&self) -> Vec<usize> {
        (0..self.length())
            .combinations(self.dimension())
            .find(|j| self.generator.rank_of_columns(j) == Ok(self.dimension()))
            .expect("a full-rank generator has an information set")
    }

    /// Information set picked greedily along `priority`: a column is kept when
    /// it raises the rank of the columns kept so far. `priority` must list
    /// distinct columns and reach full rank.
    pub fn greedy_information_set(&self, priority: &[usize]) -> Result<Vec<usize>> {
        let mut kept = Vec::with_capacity(self.dimension());
        for &c in priority {
            kept.push(c);
            if self.generator.rank_of_columns(&kept)? < kept.len() {
                kept.pop();
            }
        }
        if kept.len() < self.dimension() {
            return Err(Error::NotInformationSet(priority.to_vec()));
        }
        Ok(kept)
    }

    /// `p^k`, the number of codewords.
    pub fn size(&self) -> u128 {
        (self.p() as u128).saturating_pow(self.dimension() as u32)
    }

    pub(crate) fn check_work(&self, work: u128) -> Result<()> {
        if work > self.cap as u128 {
            Err(Error::TooLarge {
                work,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// Every codeword exactly once, ordered lexicographically by message.
    pub fn codewords(&self) -> Result<Codewords<'_>> {
        self.check_work(self.size())?;
        Ok(Codewords {
            code: self,
            message: vec![0; self.dimension()],
            done: false,
        })
    }

    pub fn nonzero_codewords(&self) -> Result<impl Iterator<Item = Codeword> + '_> {
        Ok(self.codewords()?.filter(|c| !c.is_zero()))
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let mut counts = vec![0u64; self.length() + 1];
        for c in self.codewords()? {
            counts[c.weight()] += 1;
        }
        Ok(WeightDistribution(counts))
    }

    pub fn minimum_distance(&self) -> Result<usize> {
        Ok(self
            .nonzero_codewords()?
            .map(|c| c.weight())
            .min()
            .expect("k >= 1 gives a nonzero codeword"))
    }

    /// Serializes in the `p k n` text format.
    pub fn to_code_file(&self) -> String {
        let mut out = format!("{} {} {}\n", self.p(), self.dimension(), self.length());
        out.push_str(&self.generator.to_string());
        out
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] code over F_{}",
            self.length(),
            self.dimension(),
            self.p()
        )
    }
}

/// Parses the code file format: `#` comment lines, a `p k n` header, then `k`
/// rows of `n` residues.
pub fn parse_code_file(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_ints = |line: usize, l: &str| -> Result<Vec<u64>> {
        l.split_whitespace()
            .map(|t| {
                t.parse::<u64>().map_err(|_| Error::Parse {
                    line,
                    message: format!("expected a non-negative integer, found `{t}`"),
                })
            })
            .collect()
    };

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `p k n` header".into(),
    })?;
    let header = parse_ints(hline, header)?;
    let [p, k, n] = header[..] else {
        return Err(Error::Parse {
            line: hline,
            message: format!("header must have 3 integers, found {}", header.len()),
        });
    };
    let prime = Prime::new(p).map_err(|e| Error::Parse {
        line: hline,
        message: e.to_string(),
    })?;
    if k == 0 || n == 0 || k > n {
        return Err(Error::Parse {
            line: hline,
            message: format!("need 1 <= k <= n, got k = {k}, n = {n}"),
        });
    }

    let mut rows = Vec::with_capacity(k as usize);
    let mut last_line = hline;
    for _ in 0..k {
        let (lno, l) = lines.next().ok_or(Error::Parse {
            line: last_line + 1,
            message: format!("expected {k} generator rows, found {}", rows.len()),
        })?;
        last_line = lno;
        let row = parse_ints(lno, l)?;
        if row.len() as u64 != n {
            return Err(Error::Parse {
                line: lno,
                message: format!("expected {n} entries, found {}", row.len()),
            });
        }
        if let Some(v) = row.iter().find(|&&v| v >= p) {
            return Err(Error::Parse {
                line: lno,
                message: format!("entry {v} is not in [0, {p})"),
            });
        }
        rows.push(row);
    }
    if let Some((lno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lno,
            message: "unexpected trailing content".into(),
        });
    }
    LinearCode::from_generator(MatrixFp::from_rows(&rows, prime)?)
}

/// A codeword of some code, or a plain vector over `F_p` when produced by
/// [`Codeword::candidate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    coords: Vec<u64>,
    modulus: Prime,
}

impl Codeword {
    pub(crate) fn unchecked(coords: Vec<u64>, modulus: Prime) -> Self {
        Codeword { coords, modulus }
    }

    /// A vector over `F_p` whose membership in any code is not asserted.
    pub fn candidate(coords: Vec<u64>, modulus: Prime) -> Self {
        let coords = coords.into_iter().map(|v| v % modulus.get()).collect();
        Codeword { coords, modulus }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&v| v == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        support(&self.coords)
    }

    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|&&v| v != 0).count()
    }

    pub fn neg(&self) -> Codeword {
        let p = self.modulus;
        Codeword::unchecked(self.coords.iter().map(|&v| p.neg(v)).collect(), p)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.iter().join(","))
    }
}

pub fn support(v: &[u64]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, _)| i)
        .collect()
}

/// Streams all codewords; see [`LinearCode::codewords`].
pub struct Codewords<'a> {
    code: &'a LinearCode,
    message: Vec<u64>,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.done {
            return None;
        }
        let word = Codeword::unchecked(
            self.code.generator.vec_mul(&self.message),
            self.code.field(),
        );
        let p = self.code.p();
        // Odometer increment, last position fastest.
        self.done = true;
        for digit in self.message.iter_mut().rev() {
            *digit += 1;
            if *digit < p {
                self.done = false;
                break;
            }
            *digit = 0;
        }
        Some(word)
    }
}

/// `A_0, ..., A_n`: the number of codewords of each Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution(pub Vec<u64>);

impl WeightDistribution {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn minimum_distance(&self) -> Option<usize> {
        self.0.iter().skip(1).position(|&a| a > 0).map(|i| i + 1)
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A: {}", self.0.iter().join(" "))
    }
}
