//! Bit-packed vectors and matrices over GF(2).
//!
//! Coordinates are 0-based here; user-facing layers present them 1-based.
//! Coordinate 0 is the leftmost character of the `{0,1}`-string rendering.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::Error;

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A vector over GF(2), packed 64 coordinates per word.
///
/// Coordinate `i` lives in bit `i % 64` of word `i / 64`. Bits past `len`
/// in the last word are kept zero so that equality, hashing and ordering
/// can work word-wise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector of length `len <= 64` whose coordinate `i` is bit `i`
    /// of `counter`. This is the canonical enumeration order used by every
    /// exhaustive sweep in the crate.
    pub fn from_counter(len: usize, counter: u64) -> Self {
        debug_assert!(len <= 64);
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = if len == 64 {
                counter
            } else {
                counter & ((1u64 << len) - 1)
            };
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
        assert!(i < self.len, "coordinate {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "coordinate {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of mismatched lengths");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn or_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "or of mismatched lengths");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn and_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "and of mismatched lengths");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// 0-based indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// The sub-vector at the given 0-based positions, in the given order.
    pub fn restrict(&self, positions: &[usize]) -> BitVec {
        let mut out = BitVec::zeros(positions.len());
        for (j, &p) in positions.iter().enumerate() {
            if self.get(p) {
                out.set(j, true);
            }
        }
        out
    }
}

/// GF(2) inner product: the parity of the coordinate-wise AND.
pub fn dot(a: &BitVec, b: &BitVec) -> bool {
    assert_eq!(a.len, b.len, "dot of mismatched lengths");
    a.words
        .iter()
        .zip(&b.words)
        .fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones())
        & 1
        == 1
}

impl Ord for BitVec {
    fn cmp(&self, other: &Self) -> Ordering {
        // Lexicographic in coordinate order. Reversing each word puts
        // coordinate 0 in the most significant position.
        match self.len.cmp(&other.len) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.words.iter().zip(&other.words) {
            match a.reverse_bits().cmp(&b.reverse_bits()) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl FromStr for BitVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut v = BitVec::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => {
                    return Err(Error::Format {
                        at: i + 1,
                        msg: format!("position {}: expected '0' or '1', found {c:?}", i + 1),
                    })
                }
            }
        }
        Ok(v)
    }
}

/// A dense matrix over GF(2) with word-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    row_words: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix must be at least 1x1");
        let row_words = words_for(cols);
        Self {
            rows,
            cols,
            row_words,
            words: vec![0; rows * row_words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows(rows: &[BitVec]) -> Result<Self, Error> {
        let first = rows.first().ok_or_else(|| Error::Shape("no rows".into()))?;
        if first.is_empty() {
            return Err(Error::Shape("rows of length 0".into()));
        }
        if rows.iter().any(|r| r.len() != first.len()) {
            return Err(Error::Shape("rows of unequal length".into()));
        }
        let mut m = Self::zeros(rows.len(), first.len());
        for (i, row) in rows.iter().enumerate() {
            let start = i * m.row_words;
            m.words[start..start + m.row_words].copy_from_slice(&row.words);
        }
        Ok(m)
    }

    /// Builds a matrix from a row-major slice of `{0,1}` entries.
    pub fn from_entries(rows: usize, cols: usize, entries: &[u8]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        let mut m = Self::zeros(rows, cols);
        for (idx, &e) in entries.iter().enumerate() {
            assert!(e <= 1, "entries must be 0 or 1");
            if e == 1 {
                m.set(idx / cols, idx % cols, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.words[r * self.row_words + c / WORD_BITS] >> (c % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let mask = 1u64 << (c % WORD_BITS);
        let w = r * self.row_words + c / WORD_BITS;
        if value {
            self.words[w] |= mask;
        } else {
            self.words[w] &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> BitVec {
        assert!(r < self.rows);
        let start = r * self.row_words;
        BitVec {
            len: self.cols,
            words: self.words[start..start + self.row_words].to_vec(),
        }
    }

    pub fn column(&self, c: usize) -> BitVec {
        assert!(c < self.cols);
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn transposed(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (a, b) = (src * self.row_words, dst * self.row_words);
        for w in 0..self.row_words {
            self.words[b + w] ^= self.words[a + w];
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.row_words {
            self.words.swap(a * self.row_words + w, b * self.row_words + w);
        }
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec, Error> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "matrix has {} columns, vector has length {}",
                self.cols,
                v.len()
            )));
        }
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let start = r * self.row_words;
            let parity = self.words[start..start + self.row_words]
                .iter()
                .zip(&v.words)
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
            if parity & 1 == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// XOR of the rows selected by `coeffs` (one coefficient per row).
    pub fn row_combination(&self, coeffs: &BitVec) -> Result<BitVec, Error> {
        if coeffs.len() != self.rows {
            return Err(Error::Shape(format!(
                "matrix has {} rows, coefficient vector has length {}",
                self.rows,
                coeffs.len()
            )));
        }
        let mut out = BitVec::zeros(self.cols);
        for r in 0..self.rows {
            if coeffs.get(r) {
                out.xor_assign(&self.row(r));
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(hit) = (pivot_row..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(pivot_row, hit);
            for r in 0..m.rows {
                if r != pivot_row && m.get(r, col) {
                    m.xor_row_into(pivot_row, r);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves `M x = b` for one canonical solution (free variables zero).
    /// Returns `Ok(None)` when the system is inconsistent.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>, Error> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!(
                "matrix has {} rows, right-hand side has length {}",
                self.rows,
                b.len()
            )));
        }
        let mut aug = BitMatrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            let start = r * aug.row_words;
            for w in 0..self.row_words {
                aug.words[start + w] = self.words[r * self.row_words + w];
            }
            if b.get(r) {
                aug.set(r, self.cols, true);
            }
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = BitVec::zeros(self.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            if red.get(i, self.cols) {
                x.set(pc, true);
            }
        }
        Ok(Some(x))
    }

    /// A basis of the kernel `{v : M v = 0}`, one vector per free column,
    /// ordered by ascending free column.
    pub fn nullspace_basis(&self) -> Vec<BitVec> {
        let (red, pivots) = self.rref();
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        let mut next_pivot = 0;
        for free in 0..self.cols {
            if next_pivot < pivots.len() && pivots[next_pivot] == free {
                next_pivot += 1;
                continue;
            }
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (i, &pc) in pivots.iter().enumerate() {
                if red.get(i, free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix({}x{})[{self}]", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BitMatrix {
        let rows: Vec<BitVec> = rows.iter().map(|r| r.parse().unwrap()).collect();
        BitMatrix::from_rows(&rows).unwrap()
    }

    fn v(s: &str) -> BitVec {
        s.parse().unwrap()
    }

    // Schoolbook oracle: result_i = XOR_j M[i][j] * v[j].
    fn mat_vec_oracle(mat: &BitMatrix, x: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(mat.rows());
        for i in 0..mat.rows() {
            let mut acc = false;
            for j in 0..mat.cols() {
                acc ^= mat.get(i, j) && x.get(j);
            }
            out.set(i, acc);
        }
        out
    }

    #[test]
    fn mul_vec_examples() {
        let h = m(&["110", "101"]);
        assert_eq!(h.mul_vec(&v("000")).unwrap(), v("00"));
        assert_eq!(h.mul_vec(&v("111")).unwrap(), v("00"));
        assert_eq!(h.mul_vec(&v("101")).unwrap(), v("10"));
        for counter in 0..8 {
            let x = BitVec::from_counter(3, counter);
            assert_eq!(h.mul_vec(&x).unwrap(), mat_vec_oracle(&h, &x));
        }
    }

    #[test]
    fn mul_vec_shape_error() {
        let h = m(&["110", "101"]);
        assert!(matches!(h.mul_vec(&v("10")), Err(Error::Shape(_))));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::zeros(2, 3).rank(), 0);
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        // Third row is the sum of the first two.
        assert_eq!(m(&["110", "101", "011"]).rank(), 2);
    }

    #[test]
    fn rank_matches_row_combination_oracle() {
        // rank = log2 of the number of distinct row combinations.
        let mat = m(&["110", "101", "011"]);
        let mut seen = std::collections::BTreeSet::new();
        for counter in 0..8u64 {
            let coeffs = BitVec::from_counter(3, counter);
            seen.insert(mat.row_combination(&coeffs).unwrap());
        }
        assert_eq!(seen.len(), 1 << mat.rank());
    }

    #[test]
    fn solve_examples() {
        assert_eq!(
            BitMatrix::identity(2).solve(&v("10")).unwrap(),
            Some(v("10"))
        );

        let h = m(&["110", "101"]);
        let x = h.solve(&v("10")).unwrap().unwrap();
        assert_eq!(h.mul_vec(&x).unwrap(), v("10"));

        // Contradictory rows.
        let singular = m(&["11", "11"]);
        assert_eq!(singular.solve(&v("10")).unwrap(), None);

        assert!(matches!(h.solve(&v("1")), Err(Error::Shape(_))));
    }

    #[test]
    fn solve_is_deterministic_with_free_vars_zero() {
        let h = m(&["110", "101"]);
        let a = h.solve(&v("10")).unwrap().unwrap();
        let b = h.solve(&v("10")).unwrap().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn nullspace_examples() {
        assert!(BitMatrix::identity(3).nullspace_basis().is_empty());

        let h = m(&["110", "101"]);
        assert_eq!(h.nullspace_basis(), vec![v("111")]);

        let z = BitMatrix::zeros(2, 3);
        let basis = z.nullspace_basis();
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn nullspace_matches_brute_force() {
        // Kernel size from the basis must equal the brute-force kernel size.
        for mat in [m(&["110", "101"]), m(&["1111"]), m(&["1010", "0101", "1111"])] {
            let n = mat.cols();
            let brute: Vec<BitVec> = (0..1u64 << n)
                .map(|c| BitVec::from_counter(n, c))
                .filter(|x| mat.mul_vec(x).unwrap().is_zero())
                .collect();
            let basis = mat.nullspace_basis();
            assert_eq!(brute.len(), 1 << basis.len());
            for b in &basis {
                assert!(mat.mul_vec(b).unwrap().is_zero());
            }
            // The basis spans the kernel: every combination lands in `brute`.
            for counter in 0..1u64 << basis.len() {
                let mut x = BitVec::zeros(n);
                for (j, b) in basis.iter().enumerate() {
                    if counter >> j & 1 == 1 {
                        x.xor_assign(b);
                    }
                }
                assert!(brute.contains(&x));
            }
        }
    }

    #[test]
    fn bitvec_parse_and_display_round_trip() {
        let s = "0110101";
        assert_eq!(v(s).to_string(), s);
        let err = "x0k".parse::<BitVec>().unwrap_err();
        assert!(matches!(err, Error::Format { at: 1, .. }));
    }

    #[test]
    fn bitvec_ord_is_lexicographic() {
        assert!(v("011") < v("101"));
        assert!(v("101") < v("110"));
        assert!(v("0001111") < v("0110011"));
        // A long prefix-equal pair across the first word boundary: they
        // first differ at coordinate 68, where only b is set.
        let mut a = BitVec::zeros(70);
        let mut b = BitVec::zeros(70);
        a.set(69, true);
        b.set(68, true);
        assert!(a < b);
    }

    #[test]
    fn restrict_and_support() {
        let x = v("10110");
        assert_eq!(x.support(), vec![0, 2, 3]);
        assert_eq!(x.restrict(&[0, 4]), v("10"));
        assert_eq!(x.restrict(&[]), BitVec::zeros(0));
    }

    #[test]
    fn dot_parity() {
        assert!(dot(&v("110"), &v("010")));
        assert!(!dot(&v("110"), &v("110")));
    }
}
