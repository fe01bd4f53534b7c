//! Sparse rational matrices and exact rank.
//!
//! The exact rank clears denominators row by row and runs fraction-free
//! elimination over big integers, dividing each reduced row by its content.
//! An independent elimination modulo [`RANK_PRIME`] gives a second rank that
//! can only be smaller; a strict drop means the prime divides every maximal
//! nonzero minor and is reported, never hidden.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::Rational;

/// The Mersenne prime `2^61 - 1`.
pub const RANK_PRIME: u64 = (1u64 << 61) - 1;

/// Row-major sparse matrix over the rationals. No explicit zeros are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrixQ {
    num_cols: usize,
    rows: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrixQ {
    pub fn new(num_cols: usize) -> Self {
        SparseMatrixQ { num_cols, rows: Vec::new() }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.num_cols
    }

    /// Appends a row given as `(column, value)` pairs; repeated columns add up.
    pub fn push_row<I: IntoIterator<Item = (usize, Rational)>>(&mut self, entries: I) {
        let mut row = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.num_cols, "column {c} out of range");
            let slot = row.entry(c).or_insert_with(Rational::zero);
            *slot += v;
            if slot.is_zero() {
                row.remove(&c);
            }
        }
        self.rows.push(row);
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, Rational> {
        &self.rows[i]
    }

    pub fn rows(&self) -> impl Iterator<Item = &BTreeMap<usize, Rational>> {
        self.rows.iter()
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrixQ::new(cols);
        for r in rows {
            m.push_row(r.iter().cloned().enumerate());
        }
        m
    }

    pub fn transpose(&self) -> SparseMatrixQ {
        let mut cols: Vec<Vec<(usize, Rational)>> = alloc::vec![Vec::new(); self.num_cols];
        for (i, row) in self.rows.iter().enumerate() {
            for (&c, v) in row {
                cols[c].push((i, v.clone()));
            }
        }
        let mut t = SparseMatrixQ::new(self.rows.len());
        for c in cols {
            t.push_row(c);
        }
        t
    }

    /// Rows of `self` followed by rows of `other` (same column count).
    pub fn stacked(&self, other: &SparseMatrixQ) -> SparseMatrixQ {
        assert_eq!(self.num_cols, other.num_cols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        SparseMatrixQ { num_cols: self.num_cols, rows }
    }

    /// Row `i` scaled to a primitive integer vector.
    fn integer_row(&self, i: usize) -> BTreeMap<usize, BigInt> {
        let row = &self.rows[i];
        let lcm = row.values().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let mut out: BTreeMap<usize, BigInt> =
            row.iter().map(|(&c, v)| (c, v.numer() * (&lcm / v.denom()))).collect();
        make_primitive(&mut out);
        out
    }
}

fn make_primitive(row: &mut BTreeMap<usize, BigInt>) {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

/// Exact rank by fraction-free elimination over big integers.
pub fn exact_rank(m: &SparseMatrixQ) -> usize {
    // pivot column -> reduced row whose leading column it is
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
    for i in 0..m.num_rows() {
        let mut row = m.integer_row(i);
        while let Some((&lead, _)) = row.iter().next() {
            let Some(prow) = pivots.get(&lead) else {
                pivots.insert(lead, row);
                break;
            };
            let a = prow[&lead].clone();
            let b = row[&lead].clone();
            // row <- a*row - b*prow, which cancels the leading entry
            let mut next = BTreeMap::new();
            for (&c, v) in &row {
                next.insert(c, v * &a);
            }
            for (&c, v) in prow {
                let slot = next.entry(c).or_insert_with(BigInt::zero);
                *slot -= v * &b;
                if slot.is_zero() {
                    next.remove(&c);
                }
            }
            make_primitive(&mut next);
            row = next;
        }
    }
    pivots.len()
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % RANK_PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, RANK_PRIME - 2)
}

fn reduce(v: &BigInt) -> u64 {
    let p = BigInt::from(RANK_PRIME);
    let r = v.mod_floor(&p);
    debug_assert!(r.sign() != BigSign::Minus);
    r.to_u64().expect("residue fits")
}

/// Rank over `GF(RANK_PRIME)` of the integer-scaled rows of `m`.
pub fn modular_rank(m: &SparseMatrixQ) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
    for i in 0..m.num_rows() {
        let mut row: BTreeMap<usize, u64> = m
            .integer_row(i)
            .iter()
            .map(|(&c, v)| (c, reduce(v)))
            .filter(|(_, v)| *v != 0)
            .collect();
        while let Some((&lead, &lv)) = row.iter().next() {
            let Some(prow) = pivots.get(&lead) else {
                let inv = inv_mod(lv);
                for v in row.values_mut() {
                    *v = mul_mod(*v, inv);
                }
                pivots.insert(lead, row);
                break;
            };
            // prow is monic at `lead`
            for (&c, &pv) in prow {
                let sub = mul_mod(pv, lv);
                let slot = row.entry(c).or_insert(0);
                *slot = (*slot + RANK_PRIME - sub) % RANK_PRIME;
                if *slot == 0 {
                    row.remove(&c);
                }
            }
        }
    }
    pivots.len()
}

/// Exact rank together with the independent modular recomputation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub exact: usize,
    pub modular: usize,
}

impl RankCertificate {
    /// Both computations agree.
    pub fn consistent(&self) -> bool {
        self.exact == self.modular
    }
}

/// Exact rank of `m`, cross-checked modulo [`RANK_PRIME`].
///
/// Panics if the modular rank exceeds the exact rank, which is impossible
/// for a correct elimination.
pub fn rational_rank(m: &SparseMatrixQ) -> RankCertificate {
    let exact = exact_rank(m);
    let modular = modular_rank(m);
    assert!(modular <= exact, "modular rank {modular} exceeds exact rank {exact}");
    RankCertificate { exact, modular }
}

/// Inverse of a square rational matrix by Gauss–Jordan elimination, or
/// `None` when it is singular.
pub fn inverse_dense(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix is not square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
