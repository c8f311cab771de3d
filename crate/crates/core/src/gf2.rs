//! Linear algebra over GF(2).
//!
//! A CNOT circuit on `n` wires is an invertible `n × n` bit matrix: the gate
//! `CNOT(c → t)` XORs row `c` into row `t`. Everything downstream (rewriting,
//! placement, routing) is checked against [`circuit_matrix`], which simulates
//! a gate list and returns its linear map.
//!
//! Indices are 0-based in the API and 1-based in every text format.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Square matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "BitMatrix dimension must be positive");
        let stride = n.div_ceil(WORD);
        Self { n, stride, words: vec![0; n * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidParams("matrix must have at least one row".into()));
        }
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            for (j, &bit) in row.iter().enumerate() {
                match bit {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => return Err(Error::InvalidParams(format!("entry ({i}, {j}) is {bit}, not a bit"))),
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        (self.words[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.n && j < self.n);
        let w = &mut self.words[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    /// `row[target] ^= row[source]`.
    pub fn xor_row_into(&mut self, target: usize, source: usize) {
        assert_ne!(target, source);
        let s = self.stride;
        let (t0, s0) = (target * s, source * s);
        for k in 0..s {
            let v = self.words[s0 + k];
            self.words[t0 + k] ^= v;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for k in 0..s {
            self.words.swap(a * s + k, b * s + k);
        }
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Weight of `row[a] ^ row[b]`.
    pub(crate) fn xor_weight(&self, a: usize, b: usize) -> usize {
        self.row(a).iter().zip(self.row(b)).map(|(x, y)| (x ^ y).count_ones() as usize).sum()
    }

    pub fn row_bits(&self, i: usize) -> Vec<u8> {
        (0..self.n).map(|j| self.get(i, j) as u8).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// Matrix product over GF(2). Row `i` of the result is the XOR of the rows
    /// of `rhs` selected by row `i` of `self`.
    pub fn mul(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { left: self.n, right: rhs.n });
        }
        let mut out = Self::zeros(self.n);
        let s = self.stride;
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    for k in 0..s {
                        out.words[i * s + k] ^= rhs.words[j * s + k];
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..self.n {
            let Some(pivot) = (rank..self.n).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            for r in 0..self.n {
                if r != rank && m.get(r, col) {
                    m.xor_row_into(r, rank);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    pub fn inverse(&self) -> Result<BitMatrix> {
        let ops = gauss_jordan(self)?;
        let mut inv = Self::identity(self.n);
        for op in &ops {
            op.apply_in_place(&mut inv);
        }
        Ok(inv)
    }

    /// Returns `matrix(op) · self`.
    pub fn apply_op(&self, op: ElementaryOp) -> Result<BitMatrix> {
        op.check(self.n)?;
        let mut out = self.clone();
        op.apply_in_place(&mut out);
        Ok(out)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix({})", self.n)?;
        for i in 0..self.n {
            let row: String = (0..self.n).map(|j| if self.get(i, j) { '1' } else { '.' }).collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// `matrix <n>` followed by `n` rows of `n` space-separated digits.
impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matrix {}", self.n)?;
        for i in 0..self.n {
            let row: Vec<&str> = (0..self.n).map(|j| if self.get(i, j) { "1" } else { "0" }).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for BitMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = significant_lines(text);
        let (lineno, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["matrix", n] => n
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::parse(lineno, format!("bad dimension `{n}`")))?,
            _ => return Err(Error::parse(lineno, "expected `matrix <n>`")),
        };
        let mut m = BitMatrix::zeros(n);
        let mut rows = 0;
        for (lineno, line) in lines {
            if rows == n {
                return Err(Error::parse(lineno, format!("more than {n} rows")));
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != n {
                return Err(Error::parse(lineno, format!("expected {n} entries, found {}", tokens.len())));
            }
            for (j, tok) in tokens.iter().enumerate() {
                match *tok {
                    "0" => {}
                    "1" => m.set(rows, j, true),
                    other => return Err(Error::parse(lineno, format!("non-binary token `{other}`"))),
                }
            }
            rows += 1;
        }
        if rows != n {
            return Err(Error::parse(0, format!("expected {n} rows, found {rows}")));
        }
        Ok(m)
    }
}

/// Yields `(1-based line number, trimmed line)`, skipping blanks and `#` comments.
pub(crate) fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// One elementary row operation.
///
/// `RowAdd { target: i, source: j }` is `E(i+j)`: the identity with row `j`
/// added into row `i`. `Swap(i, j)` is `E(i↔j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementaryOp {
    RowAdd { target: usize, source: usize },
    Swap(usize, usize),
}

impl ElementaryOp {
    pub const fn add(target: usize, source: usize) -> Self {
        ElementaryOp::RowAdd { target, source }
    }

    pub const fn swap(a: usize, b: usize) -> Self {
        ElementaryOp::Swap(a, b)
    }

    pub fn indices(&self) -> (usize, usize) {
        match *self {
            ElementaryOp::RowAdd { target, source } => (target, source),
            ElementaryOp::Swap(a, b) => (a, b),
        }
    }

    pub fn is_swap(&self) -> bool {
        matches!(self, ElementaryOp::Swap(..))
    }

    pub fn check(&self, n: usize) -> Result<()> {
        let (a, b) = self.indices();
        for index in [a, b] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, size: n });
            }
        }
        if a == b {
            return Err(Error::InvalidParams(format!("operation {self} uses the same row twice")));
        }
        Ok(())
    }

    /// Relabels both indices through `f`.
    pub fn map_indices(self, f: impl Fn(usize) -> usize) -> Self {
        match self {
            ElementaryOp::RowAdd { target, source } => ElementaryOp::RowAdd { target: f(target), source: f(source) },
            ElementaryOp::Swap(a, b) => ElementaryOp::Swap(f(a), f(b)),
        }
    }

    pub(crate) fn apply_in_place(&self, m: &mut BitMatrix) {
        match *self {
            ElementaryOp::RowAdd { target, source } => m.xor_row_into(target, source),
            ElementaryOp::Swap(a, b) => m.swap_rows(a, b),
        }
    }

    pub fn matrix(&self, n: usize) -> Result<BitMatrix> {
        BitMatrix::identity(n).apply_op(*self)
    }
}

impl fmt::Display for ElementaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ElementaryOp::RowAdd { target, source } => {
                write!(f, "add {} {}", target + 1, source + 1)
            }
            ElementaryOp::Swap(a, b) => write!(f, "swap {} {}", a + 1, b + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CnotGate {
    pub control: usize,
    pub target: usize,
}

impl CnotGate {
    pub const fn new(control: usize, target: usize) -> Self {
        Self { control, target }
    }

    /// The row operation this gate performs on the state matrix.
    pub fn as_op(&self) -> ElementaryOp {
        ElementaryOp::add(self.target, self.control)
    }

    pub fn check(&self, n: usize) -> Result<()> {
        self.as_op().check(n)
    }
}

impl fmt::Display for CnotGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cnot {} {}", self.control + 1, self.target + 1)
    }
}

/// Bijection on `0..n`; `image[v]` is where `v` maps to.
///
/// Its matrix has a 1 at `(i, image[i])`, so `matrix(σ) · x` reads
/// `x[σ(i)]` into slot `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, size: n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParams(format!("image repeats {}", v + 1)));
            }
        }
        Ok(Self { image })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.image.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Self { image: inv }
    }

    pub fn matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.len().max(1));
        for (i, &v) in self.image.iter().enumerate() {
            m.set(i, v, true);
        }
        m
    }

    /// The permutation whose matrix is `matrix(self) · matrix(rhs)`.
    pub fn then_matrix(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.len(), rhs.len());
        Permutation { image: self.image.iter().map(|&v| rhs.image[v]).collect() }
    }

    /// Returns `matrix(self) · m` without forming the permutation matrix.
    pub fn permute_rows(&self, m: &BitMatrix) -> Result<BitMatrix> {
        if m.n() != self.len() {
            return Err(Error::DimensionMismatch { left: self.len(), right: m.n() });
        }
        let mut out = BitMatrix::zeros(m.n());
        let s = m.stride;
        for (i, &v) in self.image.iter().enumerate() {
            out.words[i * s..(i + 1) * s].copy_from_slice(m.row(v));
        }
        Ok(out)
    }
}

/// `perm <image list>` with 1-based entries.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm")?;
        for v in &self.image {
            write!(f, " {}", v + 1)?;
        }
        Ok(())
    }
}

/// Parses a 1-based image list (without the keyword).
pub(crate) fn parse_image(tokens: &[&str], line: usize) -> Result<Permutation> {
    let image = tokens
        .iter()
        .map(|t| match t.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(Error::parse(line, format!("bad permutation entry `{t}`"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_image(image).map_err(|e| Error::parse(line, e.to_string()))
}

pub fn mat_mul(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
    a.mul(b)
}

pub fn apply_op(m: &BitMatrix, op: ElementaryOp) -> Result<BitMatrix> {
    m.apply_op(op)
}

/// Full Gauss-Jordan reduction to the identity.
///
/// Returns `O₁ … O_m` such that applying them to `a` in order yields `I`.
/// Columns are processed left to right; a swap is emitted only when the
/// diagonal entry is 0, with the smallest-index row below carrying a 1.
pub fn gauss_jordan(a: &BitMatrix) -> Result<Vec<ElementaryOp>> {
    let n = a.n();
    let mut m = a.clone();
    let mut ops = Vec::new();
    for col in 0..n {
        if !m.get(col, col) {
            let pivot = (col + 1..n).find(|&r| m.get(r, col)).ok_or(Error::SingularMatrix)?;
            m.swap_rows(col, pivot);
            ops.push(ElementaryOp::swap(col, pivot));
        }
        for r in 0..n {
            if r != col && m.get(r, col) {
                m.xor_row_into(r, col);
                ops.push(ElementaryOp::add(r, col));
            }
        }
    }
    debug_assert!(m.is_identity());
    Ok(ops)
}

/// The σ with `m[i][σ(i)] = 1` when `m` is a permutation matrix.
pub fn permutation_of(m: &BitMatrix) -> Option<Permutation> {
    let n = m.n();
    let mut image = Vec::with_capacity(n);
    for i in 0..n {
        if m.row_weight(i) != 1 {
            return None;
        }
        image.push((0..n).find(|&j| m.get(i, j))?);
    }
    Permutation::from_image(image).ok()
}

/// Simulates `gates` in time order on `n` wires and returns the linear map.
pub fn circuit_matrix(gates: &[CnotGate], n: usize) -> Result<BitMatrix> {
    let mut m = BitMatrix::identity(n);
    for g in gates {
        g.check(n)?;
        m.xor_row_into(g.target, g.control);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fixture_a() -> BitMatrix {
        BitMatrix::from_rows(&[[1, 1, 0, 1, 1], [0, 0, 1, 1, 0], [1, 0, 1, 0, 1], [1, 1, 0, 1, 0], [1, 1, 1, 1, 0]])
            .unwrap()
    }

    fn fixture_a_prime() -> BitMatrix {
        BitMatrix::from_rows(&[[0, 0, 0, 0, 1], [0, 0, 0, 1, 0], [1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0]])
            .unwrap()
    }

    fn add1(i: usize, j: usize) -> ElementaryOp {
        ElementaryOp::add(i - 1, j - 1)
    }

    #[test]
    fn identity_times_a() {
        let a = fixture_a();
        assert_eq!(mat_mul(&BitMatrix::identity(5), &a).unwrap(), a);
    }

    #[test]
    fn fixture_product_reconstructs_a() {
        // Factors in product order; the rightmost (E(2+4)) acts first.
        let factors = [(3, 2), (5, 2), (1, 3), (1, 5), (2, 1), (4, 3), (2, 4)];
        let mut m = fixture_a_prime();
        for (i, j) in factors {
            m = mat_mul(&m, &add1(i, j).matrix(5).unwrap()).unwrap();
        }
        assert_eq!(m, fixture_a());
    }

    #[test]
    fn row_add_is_self_inverse() {
        let e = add1(1, 2).matrix(5).unwrap();
        assert!(mat_mul(&e, &e).unwrap().is_identity());
    }

    #[test]
    fn mul_dimension_mismatch() {
        let err = mat_mul(&BitMatrix::identity(2), &BitMatrix::identity(3)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 3 });
    }

    #[test]
    fn apply_op_on_identity() {
        let m = apply_op(&BitMatrix::identity(5), add1(1, 2)).unwrap();
        let mut expect = BitMatrix::identity(5);
        expect.set(0, 1, true);
        assert_eq!(m, expect);
    }

    #[test]
    fn apply_op_on_fixture_row_three() {
        let m = apply_op(&fixture_a(), add1(3, 2)).unwrap();
        assert_eq!(m.row_bits(2), vec![1, 0, 0, 1, 1]);
        for r in [0, 1, 3, 4] {
            assert_eq!(m.row_bits(r), fixture_a().row_bits(r));
        }
    }

    #[test]
    fn apply_op_out_of_range() {
        let err = apply_op(&BitMatrix::identity(3), ElementaryOp::add(0, 3)).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { index: 3, size: 3 });
    }

    #[test]
    fn gauss_jordan_identity_is_empty() {
        assert!(gauss_jordan(&BitMatrix::identity(7)).unwrap().is_empty());
    }

    #[test]
    fn gauss_jordan_fixture_reconstructs() {
        let a = fixture_a();
        let ops = gauss_jordan(&a).unwrap();
        // a = O₁ · O₂ · … · O_m since every factor is an involution
        let mut m = BitMatrix::identity(5);
        for op in &ops {
            m = mat_mul(&m, &op.matrix(5).unwrap()).unwrap();
        }
        assert_eq!(m, a);
    }

    #[test]
    fn gauss_jordan_singular() {
        assert_eq!(gauss_jordan(&BitMatrix::zeros(4)), Err(Error::SingularMatrix));
        let rank_deficient = BitMatrix::from_rows(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap();
        assert_eq!(gauss_jordan(&rank_deficient), Err(Error::SingularMatrix));
    }

    #[test]
    fn permutation_of_fixture_a_prime() {
        let p = permutation_of(&fixture_a_prime()).unwrap();
        assert_eq!(p.image(), &[4, 3, 0, 1, 2]);
        assert_eq!(p.to_string(), "perm 5 4 1 2 3");
        assert_eq!(p.matrix(), fixture_a_prime());
    }

    #[test]
    fn permutation_of_identity_and_non_permutation() {
        assert!(permutation_of(&BitMatrix::identity(6)).unwrap().is_identity());
        assert!(permutation_of(&fixture_a()).is_none());
        // weight-one rows but a repeated column
        let m = BitMatrix::from_rows(&[[1, 0], [1, 0]]).unwrap();
        assert!(permutation_of(&m).is_none());
    }

    #[test]
    fn permutation_products_match_matrices() {
        let p = Permutation::from_image(vec![2, 0, 3, 1]).unwrap();
        let q = Permutation::from_image(vec![1, 3, 0, 2]).unwrap();
        assert_eq!(p.then_matrix(&q).matrix(), p.matrix().mul(&q.matrix()).unwrap());
        assert_eq!(p.then_matrix(&p.inverse()), Permutation::identity(4));
        let m = BitMatrix::from_rows(&[[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [1, 0, 0, 1]]).unwrap();
        assert_eq!(p.permute_rows(&m).unwrap(), p.matrix().mul(&m).unwrap());
    }

    #[test]
    fn circuit_matrix_single_cnot() {
        let m = circuit_matrix(&[CnotGate::new(0, 1)], 2).unwrap();
        assert_eq!(m, BitMatrix::from_rows(&[[1, 0], [1, 1]]).unwrap());
    }

    #[test]
    fn circuit_matrix_three_cnot_swap() {
        let gates = [CnotGate::new(0, 1), CnotGate::new(1, 0), CnotGate::new(0, 1)];
        let m = circuit_matrix(&gates, 2).unwrap();
        assert_eq!(m, BitMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap());
    }

    #[test]
    fn circuit_matrix_empty_and_errors() {
        assert!(circuit_matrix(&[], 4).unwrap().is_identity());
        assert!(matches!(circuit_matrix(&[CnotGate::new(0, 4)], 4), Err(Error::IndexOutOfRange { .. })));
        assert!(circuit_matrix(&[CnotGate::new(2, 2)], 4).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let a = fixture_a();
        assert!(a.mul(&a.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn wide_matrices_use_multiple_words() {
        let mut m = BitMatrix::identity(130);
        m.xor_row_into(129, 0);
        m.xor_row_into(3, 128);
        assert!(m.get(129, 0) && m.get(3, 128));
        assert!(m.is_invertible());
        let ops = gauss_jordan(&m).unwrap();
        assert_eq!(ops.len(), 2);
    }

    #[test]
    fn text_format_round_trip() {
        let a = fixture_a();
        let text = a.to_string();
        assert!(text.starts_with("matrix 5\n1 1 0 1 1\n"));
        assert_eq!(text.parse::<BitMatrix>().unwrap(), a);
    }

    #[test]
    fn text_format_rejects_bad_input() {
        assert!("matrix 2\n1 0\n".parse::<BitMatrix>().is_err());
        assert!("matrix 2\n1 0\n0 2\n".parse::<BitMatrix>().is_err());
        assert!("matrix 2\n1 0 1\n0 1\n".parse::<BitMatrix>().is_err());
        assert!("matrix 2\n1 0\n0 1\n1 1\n".parse::<BitMatrix>().is_err());
        assert!("matrix 0\n".parse::<BitMatrix>().is_err());
        assert!("mat 2\n1 0\n0 1\n".parse::<BitMatrix>().is_err());
    }
}
