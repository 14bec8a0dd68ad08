//! Exact dense linear algebra over a prime field F_p, p < 2^31. Products of
//! residues fit in a u64, so no bignum arithmetic is needed anywhere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::face::Face;

/// A residue together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FpScalar {
    pub value: u64,
    pub p: u64,
}

impl FpScalar {
    pub fn new(value: u64, p: u64) -> FpScalar {
        FpScalar { value: value % p, p }
    }
}

#[inline]
fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue via Fermat.
fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow(a, p - 2, p)
}

/// Dense row-major matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    entries: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(rows: usize, cols: usize, p: u64) -> FpMatrix {
        FpMatrix {
            rows,
            cols,
            p,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u64) -> FpMatrix {
        let mut m = FpMatrix::zero(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>, p: u64) -> FpMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        debug_assert!(rows.iter().all(|row| row.len() == c));
        let entries = rows.into_iter().flatten().map(|x| x % p).collect();
        FpMatrix {
            rows: r,
            cols: c,
            p,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.p;
    }

    /// Writes `-1 mod p` — convenience for boundary matrices.
    pub fn set_signed(&mut self, r: usize, c: usize, positive: bool) {
        let v = if positive { 1 } else { self.p - 1 };
        self.entries[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zero(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut a = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let pivot = (rank..rows).find(|&r| a[r * cols + col] != 0);
            let Some(pr) = pivot else { continue };
            swap_rows(&mut a, pr, rank, cols);
            let piv_inv = inv(a[rank * cols + col], p);
            for r in rank + 1..rows {
                let factor = a[r * cols + col];
                if factor == 0 {
                    continue;
                }
                let scale = mul(factor, piv_inv, p);
                for c in col..cols {
                    let delta = mul(scale, a[rank * cols + c], p);
                    a[r * cols + c] = sub(a[r * cols + c], delta, p);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Determinant of the square submatrix picked out by `rows` and `cols`
    /// (both taken in increasing order), via Gaussian elimination — exact
    /// over F_p. The empty minor is 1.
    pub fn minor(&self, rows: Face, cols: Face) -> Result<FpScalar> {
        let k = rows.cardinality();
        if k != cols.cardinality() {
            return Err(Error::SizeMismatch {
                rows: k,
                cols: cols.cardinality(),
            });
        }
        let p = self.p;
        if k == 0 {
            return Ok(FpScalar::new(1, p));
        }
        let ri: Vec<usize> = rows.to_vec();
        let ci: Vec<usize> = cols.to_vec();
        debug_assert!(ri.iter().all(|&r| r < self.rows));
        debug_assert!(ci.iter().all(|&c| c < self.cols));
        let mut a: Vec<u64> = Vec::with_capacity(k * k);
        for &r in &ri {
            for &c in &ci {
                a.push(self.get(r, c));
            }
        }
        let mut det = 1u64;
        for col in 0..k {
            let pivot = (col..k).find(|&r| a[r * k + col] != 0);
            let Some(pr) = pivot else {
                return Ok(FpScalar::new(0, p));
            };
            if pr != col {
                swap_rows(&mut a, pr, col, k);
                det = sub(0, det, p); // row swap flips the sign
            }
            let piv = a[col * k + col];
            det = mul(det, piv, p);
            let piv_inv = inv(piv, p);
            for r in col + 1..k {
                let factor = a[r * k + col];
                if factor == 0 {
                    continue;
                }
                let scale = mul(factor, piv_inv, p);
                for c in col..k {
                    let delta = mul(scale, a[col * k + c], p);
                    a[r * k + c] = sub(a[r * k + c], delta, p);
                }
            }
        }
        Ok(FpScalar::new(det, p))
    }
}

fn swap_rows(a: &mut [u64], r1: usize, r2: usize, cols: usize) {
    if r1 == r2 {
        return;
    }
    for c in 0..cols {
        a.swap(r1 * cols + c, r2 * cols + c);
    }
}

/// An n×n matrix with entries from a seeded PRNG, resampled until
/// invertible. Deterministic in `(n, seed, p)`.
pub fn random_invertible(n: usize, seed: u64, p: u64) -> FpMatrix {
    assert!(n >= 1, "random_invertible needs n >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut m = FpMatrix::zero(n, n, p);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, rng.gen_range(0..p));
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}

/// Incremental row-independence queries: rows offered in any order are
/// absorbed exactly when they are independent of the rows kept so far.
/// Internally kept in reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct RankTracker {
    ambient: usize,
    p: u64,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl RankTracker {
    pub fn new(ambient: usize, p: u64) -> RankTracker {
        RankTracker {
            ambient,
            p,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Returns true and absorbs the row iff it is independent of everything
    /// absorbed so far; on false the tracker is unchanged.
    pub fn offer(&mut self, row: &[u64]) -> Result<bool> {
        if row.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: row.len(),
            });
        }
        let p = self.p;
        let mut v: Vec<u64> = row.iter().map(|&x| x % p).collect();
        for (basis, &piv) in self.rows.iter().zip(&self.pivots) {
            let coef = v[piv];
            if coef == 0 {
                continue;
            }
            for c in 0..self.ambient {
                let delta = mul(coef, basis[c], p);
                v[c] = sub(v[c], delta, p);
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return Ok(false);
        };
        let scale = inv(v[pivot], p);
        for x in v.iter_mut() {
            *x = mul(*x, scale, p);
        }
        // keep earlier rows reduced against the new pivot
        for basis in self.rows.iter_mut() {
            let coef = basis[pivot];
            if coef == 0 {
                continue;
            }
            for c in 0..self.ambient {
                let delta = mul(coef, v[c], p);
                basis[c] = sub(basis[c], delta, p);
            }
        }
        self.rows.push(v);
        self.pivots.push(pivot);
        Ok(true)
    }
}
