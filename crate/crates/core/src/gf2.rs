//! Dense bit-packed linear algebra over the two-element field.
//!
//! Vectors store one coordinate per bit in `u64` words. Bit `i` lives in word
//! `i / 64` at position `i % 64`. Every routine here is a pure function of its
//! inputs; elimination works on private copies.
//!
//! Canonical coset representatives are taken with respect to a basis in
//! reduced row echelon form whose pivots are the lowest set bit of each row,
//! in ascending column order. Reducing a vector clears every pivot column, so
//! two vectors in the same coset reduce to bit-identical outputs.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    /// Parses a string of `0`/`1` characters; character `i` is coordinate `i`.
    pub fn from_bit_str(s: &str) -> Self {
        let bits: Vec<bool> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => false,
                '1' => true,
                other => panic!("invalid bit character {other:?}"),
            })
            .collect();
        Self::from_bits(&bits)
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD_BITS + t)
                }
            })
        })
    }

    /// `self += other`, word by word.
    pub fn add_assign(&mut self, other: &Gf2Vector) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn sum(&self, other: &Gf2Vector) -> Gf2Vector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn dot(&self, other: &Gf2Vector) -> bool {
        assert_eq!(self.len, other.len, "vector length mismatch");
        let parity: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        parity & 1 == 1
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({})", self.to_bit_string())
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

/// A row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![Gf2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| Gf2Vector::unit(n, i)).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Gf2Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    /// Builds a matrix from its columns, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Gf2Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Dimension {
                    expected: rows,
                    found: c.len(),
                });
            }
            for i in c.ones() {
                m.rows[i].set(j, true);
            }
        }
        Ok(m)
    }

    /// Parses rows written as `0`/`1` strings.
    pub fn from_bit_strs(cols: usize, rows: &[&str]) -> Result<Self> {
        Self::from_rows(cols, rows.iter().map(|s| Gf2Vector::from_bit_str(s)).collect())
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        let mut c = Gf2Vector::zeros(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(j) {
                c.set(i, true);
            }
        }
        c
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    /// `self · v`.
    pub fn apply(&self, v: &Gf2Vector) -> Result<Gf2Vector> {
        if v.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = Gf2Vector::zeros(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(v) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// `self · other`.
    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if other.num_rows() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: other.num_rows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = Gf2Vector::zeros(other.cols);
                for k in r.ones() {
                    acc.add_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(Gf2Matrix {
            cols: other.cols,
            rows,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Gf2Vector::is_zero)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Rows in reduced echelon form together with their pivot columns.
///
/// Pivots are strictly increasing and every pivot column is zero in all
/// other rows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Echelon {
    len: usize,
    rows: Vec<Gf2Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Echelonizes the span of `vectors`.
    pub fn from_vectors<'a, I>(len: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Gf2Vector>,
    {
        let mut e = Self::new(len);
        for v in vectors {
            e.insert(v.clone())?;
        }
        Ok(e)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_rows(self) -> Vec<Gf2Vector> {
        self.rows
    }

    fn check(&self, v: &Gf2Vector) -> Result<()> {
        if v.len() != self.len {
            return Err(Error::Dimension {
                expected: self.len,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: &Gf2Vector) -> Result<Gf2Vector> {
        self.check(v)?;
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out.get(p) {
                out.add_assign(row);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &Gf2Vector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Adds `v` to the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, v: Gf2Vector) -> Result<bool> {
        let r = self.reduce(&v)?;
        let Some(p) = r.first_one() else {
            return Ok(false);
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.add_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        Ok(true)
    }
}

/// Gaussian elimination on a copy of `m`, recording which original rows were
/// combined into each echelon row.
struct Elimination {
    rank: usize,
    pivot_cols: Vec<usize>,
    reduced: Vec<Gf2Vector>,
}

fn eliminate(m: &Gf2Matrix) -> Elimination {
    let mut rows = m.rows.clone();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(found) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.get(col) {
                row.add_assign(&pivot);
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Elimination {
        rank,
        pivot_cols,
        reduced: rows,
    }
}

/// The rank of `m` over GF(2).
pub fn rank(m: &Gf2Matrix) -> usize {
    eliminate(m).rank
}

/// A basis of the null space `{v : m·v = 0}`, one vector per free column.
pub fn kernel_basis(m: &Gf2Matrix) -> Vec<Gf2Vector> {
    let e = eliminate(m);
    let mut is_pivot = vec![false; m.cols];
    for &c in &e.pivot_cols {
        is_pivot[c] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = Gf2Vector::unit(m.cols, free);
            for (row, &pc) in e.reduced.iter().zip(&e.pivot_cols) {
                if row.get(free) {
                    v.set(pc, true);
                }
            }
            v
        })
        .collect()
}

/// A basis of the column span of `m`, as vectors of length `rows(m)`, in
/// reduced echelon form.
pub fn image_basis(m: &Gf2Matrix) -> Vec<Gf2Vector> {
    let t = m.transpose();
    eliminate(&t).reduced
}

/// Canonical representative of `v` modulo the span of `subspace_basis`.
///
/// The basis is echelonized first, so it need not be reduced on input.
pub fn coset_reduce(v: &Gf2Vector, subspace_basis: &[Gf2Vector]) -> Result<Gf2Vector> {
    let e = Echelon::from_vectors(v.len(), subspace_basis)?;
    e.reduce(v)
}
