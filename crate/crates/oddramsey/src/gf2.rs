//! Bit-packed linear algebra over the two-element field.
//!
//! Vectors pack coordinate `i` (1-based, matching vertex labels) into bit
//! `i - 1` of a `u64` word array, so a vector doubles as the integer whose
//! binary expansion it is. Codes are stored as a basis in reduced row-echelon
//! form, which makes equality of codes a plain bit comparison and keeps
//! search output canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest code dimension that full codeword enumeration will accept.
pub const ENUMERATION_CAP: usize = 28;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("row of length {found} does not match matrix width {expected}")]
    RowLengthMismatch { expected: usize, found: usize },
    #[error("dimension {dim} exceeds the enumeration cap of {cap}")]
    EnumerationCapExceeded { dim: usize, cap: usize },
    #[error("invalid bit character {found:?} at position {pos}")]
    InvalidBitChar { found: char, pos: usize },
    #[error("declared dimension {declared} does not match {found} basis rows")]
    DimensionMismatch { declared: usize, found: usize },
    #[error("basis rows are not in reduced row-echelon form")]
    NotReducedRowEchelon,
}

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS).max(1)
}

// ---------------------------------------------------------------------------
// Gf2Vec
// ---------------------------------------------------------------------------

/// A vector over GF(2) with a fixed length of up to a few thousand bits.
///
/// Coordinates are 1-based in the public API; padding bits past the length
/// are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vec {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vec {
    pub fn zeros(len: usize) -> Self {
        Gf2Vec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Gf2Vec {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.mask_tail();
        v
    }

    /// The standard basis vector with a single 1 at `coord` (1-based).
    pub fn unit(len: usize, coord: usize) -> Self {
        assert!(
            (1..=len).contains(&coord),
            "coordinate {coord} out of range 1..={len}"
        );
        let mut v = Gf2Vec::zeros(len);
        v.set(coord, true);
        v
    }

    /// Characteristic vector of a set of 1-based coordinates.
    pub fn from_support(len: usize, coords: &[usize]) -> Self {
        let mut v = Gf2Vec::zeros(len);
        for &c in coords {
            v.set(c, true);
        }
        v
    }

    /// Parses a string of `'0'`/`'1'` characters, coordinate 1 first.
    pub fn from_bitstring(s: &str) -> Result<Self, Gf2Error> {
        let mut v = Gf2Vec::zeros(s.len());
        for (idx, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(idx + 1, true),
                found => return Err(Gf2Error::InvalidBitChar { found, pos: idx }),
            }
        }
        Ok(v)
    }

    /// Builds a vector of length `len` from the low `len` bits of `bits`
    /// (bit `i - 1` holds coordinate `i`).
    pub fn from_word(len: usize, bits: u64) -> Self {
        assert!(len <= WORD_BITS);
        let mut v = Gf2Vec::zeros(len);
        v.words[0] = bits;
        v.mask_tail();
        v
    }

    fn mask_tail(&mut self) {
        let used = self.len % WORD_BITS;
        if used != 0 {
            let last = words_for(self.len) - 1;
            self.words[last] &= (1u64 << used) - 1;
        }
        if self.len == 0 {
            self.words[0] = 0;
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn get(&self, coord: usize) -> bool {
        assert!(
            (1..=self.len).contains(&coord),
            "coordinate {coord} out of range 1..={}",
            self.len
        );
        let bit = coord - 1;
        self.words[bit / WORD_BITS] >> (bit % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, coord: usize, value: bool) {
        assert!(
            (1..=self.len).contains(&coord),
            "coordinate {coord} out of range 1..={}",
            self.len
        );
        let bit = coord - 1;
        if value {
            self.words[bit / WORD_BITS] |= 1u64 << (bit % WORD_BITS);
        } else {
            self.words[bit / WORD_BITS] &= !(1u64 << (bit % WORD_BITS));
        }
    }

    pub fn xor_assign(&mut self, other: &Gf2Vec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Gf2Vec) -> Gf2Vec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// GF(2) dot product.
    pub fn dot(&self, other: &Gf2Vec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot product");
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    /// 1-based coordinates of the nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(wi * WORD_BITS + b + 1);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Smallest 1-based coordinate with a nonzero entry.
    pub fn first_support(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize + 1);
            }
        }
        None
    }

    /// The same vector with `extra` zero coordinates appended.
    pub fn extended(&self, extra: usize) -> Gf2Vec {
        let mut out = Gf2Vec::zeros(self.len + extra);
        out.words[..self.words.len()].copy_from_slice(&self.words);
        out
    }

    /// Restriction to the given 1-based coordinates, in the order given.
    pub fn restricted_to(&self, coords: &[usize]) -> Gf2Vec {
        let mut out = Gf2Vec::zeros(coords.len());
        for (idx, &c) in coords.iter().enumerate() {
            if self.get(c) {
                out.set(idx + 1, true);
            }
        }
        out
    }

    /// Low 64 bits as an integer (coordinate `i` at bit `i - 1`).
    pub fn low_word(&self) -> u64 {
        self.words[0]
    }

    pub fn to_bitstring(&self) -> String {
        (1..=self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for Gf2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vec({})", self.to_bitstring())
    }
}

impl fmt::Display for Gf2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl Ord for Gf2Vec {
    /// Numeric order of the packed integer value (coordinate `i` is bit
    /// `i - 1`, so coordinate 1 is the least significant bit).
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Gf2Vec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// ---------------------------------------------------------------------------
// Gf2Matrix
// ---------------------------------------------------------------------------

/// A row matrix over GF(2); all rows share the same length.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    ncols: usize,
    rows: Vec<Gf2Vec>,
}

impl Gf2Matrix {
    pub fn new(ncols: usize) -> Self {
        Gf2Matrix {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<Gf2Vec>) -> Result<Self, Gf2Error> {
        for r in &rows {
            if r.len() != ncols {
                return Err(Gf2Error::RowLengthMismatch {
                    expected: ncols,
                    found: r.len(),
                });
            }
        }
        Ok(Gf2Matrix { ncols, rows })
    }

    pub fn push_row(&mut self, row: Gf2Vec) -> Result<(), Gf2Error> {
        if row.len() != self.ncols {
            return Err(Gf2Error::RowLengthMismatch {
                expected: self.ncols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Gf2Vec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Gf2Vec {
        &self.rows[i]
    }

    /// The unique reduced row-echelon form of the row space. Zero rows are
    /// dropped, so the result has exactly `rank` rows with strictly
    /// increasing pivot columns, each pivot column containing a single 1.
    pub fn rref(&self) -> Gf2Matrix {
        self.rref_with_pivots().0
    }

    pub fn rref_with_pivots(&self) -> (Gf2Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 1..=self.ncols {
            let Some(pos) = (next..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(next, pos);
            let pivot_row = rows[next].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != next && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            next += 1;
        }
        rows.truncate(next);
        (
            Gf2Matrix {
                ncols: self.ncols,
                rows,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().nrows()
    }

    /// Whether the rows already form a reduced row-echelon basis.
    pub fn is_rref(&self) -> bool {
        let canonical = self.rref();
        canonical.rows == self.rows
    }

    /// An RREF basis of the right kernel `{x : every row r has r·x = 0}`.
    pub fn kernel_basis(&self) -> Gf2Matrix {
        let (reduced, pivots) = self.rref_with_pivots();
        let mut generators = Vec::new();
        let mut is_pivot = vec![false; self.ncols + 1];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        #[allow(clippy::needless_range_loop)] // free is a 1-based column index
        for free in 1..=self.ncols {
            if is_pivot[free] {
                continue;
            }
            let mut v = Gf2Vec::zeros(self.ncols);
            v.set(free, true);
            for (i, &p) in pivots.iter().enumerate() {
                if reduced.row(i).get(free) {
                    v.set(p, true);
                }
            }
            generators.push(v);
        }
        Gf2Matrix {
            ncols: self.ncols,
            rows: generators,
        }
        .rref()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix({}x{})", self.nrows(), self.ncols)?;
        for r in &self.rows {
            writeln!(f, "  {}", r.to_bitstring())?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// LinearCode
// ---------------------------------------------------------------------------

/// A binary linear code, stored as an RREF basis. Two codes are equal as
/// subspaces exactly when their `LinearCode` values compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    length: usize,
    basis: Gf2Matrix,
}

impl LinearCode {
    /// The code spanned by the rows of `m` (any spanning set).
    pub fn from_span(m: &Gf2Matrix) -> Self {
        LinearCode {
            length: m.ncols(),
            basis: m.rref(),
        }
    }

    /// Wraps a matrix that is already a reduced row-echelon basis.
    pub fn from_rref_basis(m: Gf2Matrix) -> Result<Self, Gf2Error> {
        if !m.is_rref() {
            return Err(Gf2Error::NotReducedRowEchelon);
        }
        Ok(LinearCode {
            length: m.ncols(),
            basis: m,
        })
    }

    /// The zero code {0} of length `n`.
    pub fn zero(n: usize) -> Self {
        LinearCode {
            length: n,
            basis: Gf2Matrix::new(n),
        }
    }

    /// The full space of length `n`.
    pub fn full(n: usize) -> Self {
        let rows = (1..=n).map(|i| Gf2Vec::unit(n, i)).collect();
        LinearCode {
            length: n,
            basis: Gf2Matrix { ncols: n, rows },
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &Gf2Matrix {
        &self.basis
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains(&self, v: &Gf2Vec) -> bool {
        assert_eq!(v.len(), self.length, "length mismatch in membership test");
        let mut rem = v.clone();
        for row in self.basis.rows() {
            let pivot = row.first_support().expect("RREF basis has no zero rows");
            if rem.get(pivot) {
                rem.xor_assign(row);
            }
        }
        rem.is_zero()
    }

    /// The dual (orthogonal complement) code.
    pub fn dual(&self) -> LinearCode {
        let kernel = self.basis.kernel_basis();
        debug_assert_eq!(kernel.nrows(), self.length - self.dim());
        LinearCode {
            length: self.length,
            basis: kernel,
        }
    }

    /// Streams all `2^dim` codewords in Gray-code order: word 0 is the zero
    /// vector and each step XORs a single basis row. The order is stable.
    pub fn codewords(&self) -> Result<CodewordIter<'_>, Gf2Error> {
        self.codewords_capped(ENUMERATION_CAP)
    }

    pub fn codewords_capped(&self, cap: usize) -> Result<CodewordIter<'_>, Gf2Error> {
        if self.dim() > cap {
            return Err(Gf2Error::EnumerationCapExceeded {
                dim: self.dim(),
                cap,
            });
        }
        Ok(CodewordIter {
            code: self,
            index: 0,
            total: 1u64 << self.dim(),
            current: Gf2Vec::zeros(self.length),
        })
    }

    /// Histogram weight -> number of codewords of that weight.
    pub fn weight_distribution(&self) -> Result<BTreeMap<usize, u64>, Gf2Error> {
        let mut dist = BTreeMap::new();
        for w in self.codewords()? {
            *dist.entry(w.weight()).or_insert(0u64) += 1;
        }
        Ok(dist)
    }

    /// Smallest weight of a nonzero codeword, or `None` for the zero code.
    pub fn min_nonzero_weight(&self) -> Result<Option<usize>, Gf2Error> {
        let mut best: Option<usize> = None;
        for w in self.codewords()? {
            if !w.is_zero() {
                let wt = w.weight();
                best = Some(best.map_or(wt, |b| b.min(wt)));
            }
        }
        Ok(best)
    }

    /// Whether every codeword has even weight (all basis rows even).
    pub fn is_even(&self) -> bool {
        self.basis.rows().iter().all(|r| r.weight() % 2 == 0)
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[n={}, k={}]", self.length, self.dim())
    }
}

/// Gray-code codeword stream, see [`LinearCode::codewords`].
pub struct CodewordIter<'a> {
    code: &'a LinearCode,
    index: u64,
    total: u64,
    current: Gf2Vec,
}

impl Iterator for CodewordIter<'_> {
    type Item = Gf2Vec;

    fn next(&mut self) -> Option<Gf2Vec> {
        if self.index == self.total {
            return None;
        }
        if self.index > 0 {
            // Gray step: flip the basis row indexed by the lowest set bit.
            let flip = self.index.trailing_zeros() as usize;
            self.current.xor_assign(self.code.basis.row(flip));
        }
        self.index += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.total - self.index) as usize;
        (rem, Some(rem))
    }
}

// ---------------------------------------------------------------------------
// Linear systems
// ---------------------------------------------------------------------------

/// Affine solution set of a consistent linear system: one particular
/// solution plus an RREF basis of the kernel.
#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub particular: Gf2Vec,
    pub kernel: Gf2Matrix,
}

/// Solves `a · x = b` over GF(2).
///
/// Returns `None` when the system is inconsistent. Panics if `b` does not
/// have one coordinate per row of `a`.
pub fn solve_linear_system(a: &Gf2Matrix, b: &Gf2Vec) -> Option<AffineSolution> {
    assert_eq!(
        a.nrows(),
        b.len(),
        "rhs must have one coordinate per equation"
    );
    let n = a.ncols();
    // Augment with b as an extra column and reduce.
    let mut aug = Gf2Matrix::new(n + 1);
    for (i, row) in a.rows().iter().enumerate() {
        let mut ext = row.extended(1);
        if b.get(i + 1) {
            ext.set(n + 1, true);
        }
        aug.push_row(ext).expect("augmented row has matching width");
    }
    let (reduced, pivots) = aug.rref_with_pivots();
    if pivots.contains(&(n + 1)) {
        return None;
    }
    let mut particular = Gf2Vec::zeros(n);
    for (i, &p) in pivots.iter().enumerate() {
        if reduced.row(i).get(n + 1) {
            particular.set(p, true);
        }
    }
    Some(AffineSolution {
        particular,
        kernel: a.kernel_basis(),
    })
}

// ---------------------------------------------------------------------------
// JSON form: {"n": int, "k": int, "basis": ["0101...", ...]}
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct CodeJson {
    n: usize,
    k: usize,
    basis: Vec<String>,
}

impl Serialize for LinearCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CodeJson {
            n: self.length,
            k: self.dim(),
            basis: self
                .basis
                .rows()
                .iter()
                .map(Gf2Vec::to_bitstring)
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LinearCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = CodeJson::deserialize(deserializer)?;
        let mut rows = Vec::with_capacity(raw.basis.len());
        for s in &raw.basis {
            let v = Gf2Vec::from_bitstring(s).map_err(D::Error::custom)?;
            if v.len() != raw.n {
                return Err(D::Error::custom(Gf2Error::RowLengthMismatch {
                    expected: raw.n,
                    found: v.len(),
                }));
            }
            rows.push(v);
        }
        if rows.len() != raw.k {
            return Err(D::Error::custom(Gf2Error::DimensionMismatch {
                declared: raw.k,
                found: rows.len(),
            }));
        }
        let m = Gf2Matrix::from_rows(raw.n, rows).map_err(D::Error::custom)?;
        LinearCode::from_rref_basis(m).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn vec_of(s: &str) -> Gf2Vec {
        Gf2Vec::from_bitstring(s).unwrap()
    }

    fn matrix_of(rows: &[&str]) -> Gf2Matrix {
        let ncols = rows[0].len();
        Gf2Matrix::from_rows(ncols, rows.iter().map(|s| vec_of(s)).collect()).unwrap()
    }

    fn random_matrix(rng: &mut StdRng, nrows: usize, ncols: usize) -> Gf2Matrix {
        let mut m = Gf2Matrix::new(ncols);
        for _ in 0..nrows {
            let mut v = Gf2Vec::zeros(ncols);
            for c in 1..=ncols {
                if rng.gen::<bool>() {
                    v.set(c, true);
                }
            }
            m.push_row(v).unwrap();
        }
        m
    }

    fn random_code(rng: &mut StdRng, maxlen: usize) -> LinearCode {
        let n = rng.gen_range(1..=maxlen);
        let k = rng.gen_range(0..=n);
        LinearCode::from_span(&random_matrix(rng, k, n))
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = matrix_of(&["100", "010", "001"]);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_drops_dependent_row() {
        // Rank 2: the third row is the sum of the first two. The reduced
        // form clears pivot column 2 out of the first row.
        let m = matrix_of(&["110", "011", "101"]);
        let r = m.rref();
        assert_eq!(r, matrix_of(&["101", "011"]));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rref_is_idempotent_on_random_matrices() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_matrix(&mut rng, 6, 10);
            let once = m.rref();
            assert_eq!(once.rref(), once);
        }
    }

    #[test]
    fn rref_is_canonical_over_row_operations() {
        // Shuffling rows and adding rows onto each other preserves the row
        // space, so the RREF must be bit-identical.
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let m = random_matrix(&mut rng, 5, 9);
            let mut scrambled = m.clone();
            for _ in 0..20 {
                let i = rng.gen_range(0..scrambled.nrows());
                let j = rng.gen_range(0..scrambled.nrows());
                if i != j {
                    let other = scrambled.row(j).clone();
                    let mut rows: Vec<Gf2Vec> = scrambled.rows().to_vec();
                    rows[i].xor_assign(&other);
                    rows.swap(i, j);
                    scrambled = Gf2Matrix::from_rows(9, rows).unwrap();
                }
            }
            assert_eq!(m.rref(), scrambled.rref());
        }
    }

    #[test]
    fn dual_of_zero_code_is_full_space() {
        for n in 1..=8 {
            let d = LinearCode::zero(n).dual();
            assert_eq!(d.dim(), n);
            assert_eq!(d, LinearCode::full(n));
        }
    }

    #[test]
    fn dual_of_repetition_code_is_even_weight_code() {
        let rep = LinearCode::from_span(&matrix_of(&["1111"]));
        let d = rep.dual();
        assert_eq!(d.dim(), 3);
        for w in d.codewords().unwrap() {
            assert_eq!(w.weight() % 2, 0);
        }
        assert_eq!(d.weight_distribution().unwrap(), [(0, 1), (2, 6), (4, 1)].into());
    }

    #[test]
    fn dual_is_an_involution() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let c = random_code(&mut rng, 20);
            assert_eq!(c.dual().dual(), c);
            assert_eq!(c.dual().dim() + c.dim(), c.length());
        }
    }

    #[test]
    fn dual_basis_vectors_are_orthogonal() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..30 {
            let c = random_code(&mut rng, 16);
            let d = c.dual();
            for a in c.basis().rows() {
                for b in d.basis().rows() {
                    assert!(!a.dot(b));
                }
            }
        }
    }

    #[test]
    fn enumeration_of_dim_zero_yields_only_zero() {
        let c = LinearCode::zero(6);
        let words: Vec<_> = c.codewords().unwrap().collect();
        assert_eq!(words, vec![Gf2Vec::zeros(6)]);
    }

    #[test]
    fn enumeration_of_small_span() {
        let c = LinearCode::from_span(&matrix_of(&["11000", "00110"]));
        let words: std::collections::BTreeSet<String> = c
            .codewords()
            .unwrap()
            .map(|w| w.to_bitstring())
            .collect();
        let expected: std::collections::BTreeSet<String> =
            ["00000", "11000", "00110", "11110"]
                .iter()
                .map(|s| s.to_string())
                .collect();
        assert_eq!(words, expected);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let c = LinearCode::full(30);
        let err = c.codewords().map(|_| ()).unwrap_err();
        assert_eq!(
            err,
            Gf2Error::EnumerationCapExceeded {
                dim: 30,
                cap: ENUMERATION_CAP
            }
        );
    }

    #[test]
    fn gray_order_changes_one_basis_row_per_step() {
        let c = LinearCode::from_span(&matrix_of(&["1100", "0110", "0011"]));
        let words: Vec<Gf2Vec> = c.codewords().unwrap().collect();
        assert_eq!(words.len(), 8);
        for pair in words.windows(2) {
            let diff = pair[0].xor(&pair[1]);
            assert!(c.basis().rows().contains(&diff));
        }
        // Exactly once each.
        let set: std::collections::HashSet<_> =
            words.iter().map(Gf2Vec::to_bitstring).collect();
        assert_eq!(set.len(), 8);
    }

    #[test]
    fn weight_distribution_of_repetition_code() {
        let c = LinearCode::from_span(&matrix_of(&["1111"]));
        assert_eq!(c.weight_distribution().unwrap(), [(0, 1), (4, 1)].into());
    }

    #[test]
    fn closure_under_addition_by_enumeration() {
        let mut rng = StdRng::seed_from_u64(13);
        let mut small = 0;
        for _ in 0..40 {
            let c = random_code(&mut rng, 14);
            if c.dim() <= 6 {
                // Every pair, exhaustively.
                small += 1;
                let words: Vec<Gf2Vec> = c.codewords().unwrap().collect();
                for u in &words {
                    for w in &words {
                        assert!(c.contains(&u.xor(w)));
                    }
                }
            } else if c.dim() <= 12 {
                // Sampled pairs at larger dimensions.
                let words: Vec<Gf2Vec> = c.codewords().unwrap().collect();
                for _ in 0..2000 {
                    let u = &words[rng.gen_range(0..words.len())];
                    let w = &words[rng.gen_range(0..words.len())];
                    assert!(c.contains(&u.xor(w)));
                }
            }
        }
        assert!(small > 0);
    }

    #[test]
    fn even_iff_all_one_in_dual() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..50 {
            let c = random_code(&mut rng, 14);
            let ones = Gf2Vec::ones(c.length());
            assert_eq!(c.is_even(), c.dual().contains(&ones));
        }
    }

    #[test]
    fn solve_identity_system() {
        let a = matrix_of(&["100", "010", "001"]);
        let b = vec_of("101");
        let sol = solve_linear_system(&a, &b).unwrap();
        assert_eq!(sol.particular, b);
        assert_eq!(sol.kernel.nrows(), 0);
    }

    #[test]
    fn solve_zero_system_has_full_kernel() {
        let a = Gf2Matrix::from_rows(4, vec![Gf2Vec::zeros(4); 2]).unwrap();
        let sol = solve_linear_system(&a, &Gf2Vec::zeros(2)).unwrap();
        assert!(sol.particular.is_zero());
        assert_eq!(sol.kernel.nrows(), 4);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = Gf2Matrix::from_rows(3, vec![Gf2Vec::zeros(3)]).unwrap();
        let b = vec_of("1");
        assert!(solve_linear_system(&a, &b).is_none());
    }

    #[test]
    fn solutions_satisfy_the_system() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..30 {
            let a = random_matrix(&mut rng, 8, 12);
            // Take b in the column space so the system is consistent.
            let mut x = Gf2Vec::zeros(12);
            for c in 1..=12 {
                if rng.gen::<bool>() {
                    x.set(c, true);
                }
            }
            let mut b = Gf2Vec::zeros(8);
            for (i, row) in a.rows().iter().enumerate() {
                if row.dot(&x) {
                    b.set(i + 1, true);
                }
            }
            let sol = solve_linear_system(&a, &b).expect("consistent by construction");
            for _ in 0..100 {
                let mut candidate = sol.particular.clone();
                for krow in sol.kernel.rows() {
                    if rng.gen::<bool>() {
                        candidate.xor_assign(krow);
                    }
                }
                for (i, row) in a.rows().iter().enumerate() {
                    assert_eq!(row.dot(&candidate), b.get(i + 1));
                }
            }
        }
    }

    #[test]
    fn multi_word_lengths_work() {
        // Lengths past one machine word, up to 1024 coordinates.
        let n = 1024;
        let ones = Gf2Vec::ones(n);
        assert_eq!(ones.weight(), n);
        let rep = LinearCode::from_span(&Gf2Matrix::from_rows(n, vec![ones.clone()]).unwrap());
        let dual = rep.dual();
        assert_eq!(dual.dim(), n - 1);
        assert!(dual.contains(&Gf2Vec::from_support(n, &[1, 1000])));
        assert!(!dual.contains(&Gf2Vec::unit(n, 513)));
        assert_eq!(rep.dual().dual(), rep);

        let mut v = Gf2Vec::zeros(130);
        v.set(64, true);
        v.set(65, true);
        v.set(130, true);
        assert_eq!(v.weight(), 3);
        assert_eq!(v.support(), vec![64, 65, 130]);
        let w = Gf2Vec::from_bitstring(&v.to_bitstring()).unwrap();
        assert_eq!(w, v);
    }

    #[test]
    fn code_json_round_trip_is_bit_exact() {
        let c = LinearCode::from_span(&matrix_of(&["100110", "011001"]));
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(
            json,
            r#"{"n":6,"k":2,"basis":["100110","011001"]}"#
        );
        let back: LinearCode = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn code_json_rejects_non_rref_basis() {
        let bad = r#"{"n":3,"k":2,"basis":["111","011"]}"#;
        assert!(serde_json::from_str::<LinearCode>(bad).is_err());
    }

    proptest! {
        #[test]
        fn weight_parity_is_additive(a in proptest::collection::vec(any::<bool>(), 1..80),
                                     b in proptest::collection::vec(any::<bool>(), 1..80)) {
            let n = a.len().min(b.len());
            let mut u = Gf2Vec::zeros(n);
            let mut w = Gf2Vec::zeros(n);
            for i in 0..n {
                u.set(i + 1, a[i]);
                w.set(i + 1, b[i]);
            }
            let sum = u.xor(&w);
            prop_assert_eq!(sum.weight() % 2, (u.weight() + w.weight()) % 2);
        }

        #[test]
        fn bitstring_round_trip(bits in "[01]{1,100}") {
            let v = Gf2Vec::from_bitstring(&bits).unwrap();
            prop_assert_eq!(v.to_bitstring(), bits);
        }
    }
}
