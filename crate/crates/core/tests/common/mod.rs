#![allow(dead_code)]

use codeal::{Binomial, LinearCode, MatrixFp, Prime};
use itertools::Itertools;
use rand::Rng;

pub fn ex1() -> LinearCode {
    LinearCode::from_rows(&[vec![0, 1, 1], vec![1, 3, 0]], 7).unwrap()
}

pub fn hamming74() -> LinearCode {
    LinearCode::from_rows(
        &[
            vec![1, 0, 0, 0, 0, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 1, 1, 1, 1],
        ],
        2,
    )
    .unwrap()
}

/// Binary Hamming code of redundancy `r`, as the dual of the simplex code.
pub fn hamming(r: usize) -> LinearCode {
    simplex(r).dual().unwrap()
}

/// Binary simplex code: columns are all nonzero vectors of F_2^r.
pub fn simplex(r: usize) -> LinearCode {
    let n = (1 << r) - 1;
    let rows: Vec<Vec<u64>> = (0..r)
        .map(|bit| {
            (1..=n)
                .map(|col: usize| ((col >> bit) & 1) as u64)
                .collect()
        })
        .collect();
    LinearCode::from_rows(&rows, 2).unwrap()
}

/// First-order Reed-Muller code RM(1, m): the all-ones row plus the
/// coordinate functions over F_2^m.
pub fn reed_muller_1(m: usize) -> LinearCode {
    let n = 1 << m;
    let mut rows = vec![vec![1u64; n]];
    for bit in 0..m {
        rows.push((0..n).map(|x: usize| ((x >> bit) & 1) as u64).collect());
    }
    LinearCode::from_rows(&rows, 2).unwrap()
}

/// Binary `[n, n-1]` even-weight code.
pub fn parity_code(n: usize) -> LinearCode {
    let rows: Vec<Vec<u64>> = (0..n - 1)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r[n - 1] = 1;
            r
        })
        .collect();
    LinearCode::from_rows(&rows, 2).unwrap()
}

pub fn full_code(n: usize, p: u64) -> LinearCode {
    LinearCode::from_generator(MatrixFp::identity(n, Prime::new(p).unwrap())).unwrap()
}

/// Every RREF generator matrix over `F_p` of size `k x n` whose row space has
/// no zero coordinate. RREF is unique, so each code appears once.
pub fn all_codes(p: u64, n: usize, k: usize) -> Vec<LinearCode> {
    let prime = Prime::new(p).unwrap();
    let mut out = Vec::new();
    for pivots in (0..n).combinations(k) {
        // Free positions: (row, col) with col > pivot of row and col not a pivot.
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pivots = &pivots;
                (pivots[r] + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let total = (p as usize).pow(free.len() as u32);
        for mut idx in 0..total {
            let mut rows = vec![vec![0u64; n]; k];
            for (r, &c) in pivots.iter().enumerate() {
                rows[r][c] = 1;
            }
            for &(r, c) in &free {
                rows[r][c] = (idx % p as usize) as u64;
                idx /= p as usize;
            }
            if let Ok(code) = LinearCode::from_generator(MatrixFp::from_rows(&rows, prime).unwrap())
            {
                out.push(code);
            }
        }
    }
    out
}

/// All binary codes with `1 <= k <= n <= max_n` and no zero column.
pub fn binary_corpus(max_n: usize) -> Vec<LinearCode> {
    (1..=max_n)
        .flat_map(|n| (1..=n).flat_map(move |k| all_codes(2, n, k)))
        .collect()
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, p: u64) -> MatrixFp {
    let data: Vec<Vec<u64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..p)).collect())
        .collect();
    MatrixFp::from_rows(&data, Prime::new(p).unwrap()).unwrap()
}

pub fn random_invertible<R: Rng>(rng: &mut R, size: usize, p: u64) -> MatrixFp {
    loop {
        let m = random_matrix(rng, size, size, p);
        if m.rank() == size {
            return m;
        }
    }
}

/// Random code with the requested parameters, or `None` after a few misses.
pub fn random_code<R: Rng>(rng: &mut R, p: u64, n: usize, k: usize) -> Option<LinearCode> {
    (0..50).find_map(|_| LinearCode::from_generator(random_matrix(rng, k, n, p)).ok())
}

/// The same code under the generator `R * G`.
pub fn transformed(code: &LinearCode, r: &MatrixFp) -> LinearCode {
    LinearCode::from_generator(r.mul(code.generator()).unwrap()).unwrap()
}

pub fn parse_set(items: &[&str], n: usize) -> Vec<Binomial> {
    items
        .iter()
        .map(|s| Binomial::parse(s, n).unwrap())
        .collect()
}
