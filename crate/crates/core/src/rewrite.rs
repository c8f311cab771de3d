//! Decomposition of a matrix into `A = P · E₁ · … · E_k` and shortening of
//! the row-addition sequence with the identities R1–R7.
//!
//! Sequences are kept in product order: the leftmost factor acts last, so a
//! circuit executes `E_k` first.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf2::{self, parse_image, significant_lines, BitMatrix, ElementaryOp, Permutation};

/// Elementary operations in product order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OpSequence(pub Vec<ElementaryOp>);

impl OpSequence {
    pub fn new(ops: Vec<ElementaryOp>) -> Self {
        Self(ops)
    }

    pub fn ops(&self) -> &[ElementaryOp] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_swap_free(&self) -> bool {
        !self.0.iter().any(ElementaryOp::is_swap)
    }

    /// `matrix(O₁) · … · matrix(O_k)` on `n` rows.
    pub fn product(&self, n: usize) -> Result<BitMatrix> {
        // Build right to left: each new factor multiplies on the left.
        let mut m = BitMatrix::identity(n);
        for op in self.0.iter().rev() {
            m = m.apply_op(*op)?;
        }
        Ok(m)
    }
}

impl FromIterator<ElementaryOp> for OpSequence {
    fn from_iter<T: IntoIterator<Item = ElementaryOp>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// `A = matrix(perm) · product(seq)` with a swap-free `seq`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub perm: Permutation,
    pub seq: OpSequence,
}

impl Decomposition {
    pub fn identity(n: usize) -> Self {
        Self { perm: Permutation::identity(n), seq: OpSequence::default() }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn product(&self) -> Result<BitMatrix> {
        self.perm.permute_rows(&self.seq.product(self.n())?)
    }

    pub fn row_add_count(&self) -> usize {
        self.seq.0.iter().filter(|op| !op.is_swap()).count()
    }
}

/// `perm …` line followed by one operation per line, in product order.
impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.perm)?;
        for op in self.seq.ops() {
            writeln!(f, "{op}")?;
        }
        Ok(())
    }
}

impl FromStr for Decomposition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = significant_lines(text);
        let (lineno, first) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let tokens: Vec<&str> = first.split_whitespace().collect();
        if tokens.first() != Some(&"perm") || tokens.len() < 2 {
            return Err(Error::parse(lineno, "expected `perm <image list>`"));
        }
        let perm = parse_image(&tokens[1..], lineno)?;
        let n = perm.len();
        let mut ops = Vec::new();
        for (lineno, line) in lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let idx = |t: &str| match t.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                _ => Err(Error::parse(lineno, format!("bad row index `{t}`"))),
            };
            let op = match tokens.as_slice() {
                ["add", i, j] => ElementaryOp::add(idx(i)?, idx(j)?),
                ["swap", i, j] => ElementaryOp::swap(idx(i)?, idx(j)?),
                _ => return Err(Error::parse(lineno, format!("unrecognised line `{line}`"))),
            };
            op.check(n).map_err(|e| Error::parse(lineno, e.to_string()))?;
            ops.push(op);
        }
        Ok(Self { perm, seq: OpSequence(ops) })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Sym {
    I,
    J,
    K,
}

type Pair = (Sym, Sym);

/// The seven product identities over GF(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
}

use Sym::{I, J, K};

impl Rule {
    pub const ALL: [Rule; 7] = [Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5, Rule::R6, Rule::R7];
    const SHORTENING: [Rule; 6] = [Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5, Rule::R6];

    fn lhs_pattern(self) -> &'static [Pair] {
        match self {
            Rule::R1 => &[(K, I), (K, J), (I, J)],
            Rule::R2 => &[(I, K), (K, J), (I, J)],
            Rule::R3 => &[(I, K), (J, K), (I, J)],
            Rule::R4 => &[(J, K), (I, K), (I, J)],
            Rule::R5 => &[(K, J), (K, I), (I, J)],
            Rule::R6 => &[(K, J), (I, K), (I, J)],
            Rule::R7 => &[(J, I), (I, J)],
        }
    }

    /// Right-hand side; R7's leading factor is the swap `E(i↔j)`.
    fn rhs_pattern(self) -> &'static [Pair] {
        match self {
            Rule::R1 => &[(I, J), (K, I)],
            Rule::R2 => &[(K, J), (I, K)],
            Rule::R3 => &[(I, J), (J, K)],
            Rule::R4 => &[(I, J), (J, K)],
            Rule::R5 => &[(I, J), (K, I)],
            Rule::R6 => &[(I, K), (K, J)],
            Rule::R7 => &[(J, I)],
        }
    }

    pub fn lhs(self, i: usize, j: usize, k: usize) -> Vec<ElementaryOp> {
        let b = Binding { i, j, k };
        self.lhs_pattern().iter().map(|&p| b.op(p)).collect()
    }

    pub fn rhs(self, i: usize, j: usize, k: usize) -> Vec<ElementaryOp> {
        let b = Binding { i, j, k };
        let mut out = Vec::new();
        if self == Rule::R7 {
            out.push(ElementaryOp::swap(i, j));
        }
        out.extend(self.rhs_pattern().iter().map(|&p| b.op(p)));
        out
    }

    /// Checks the identity by multiplying both sides for every choice of
    /// distinct `i, j, k` in `0..n`. Returns the number of failing triples.
    pub fn count_failures(self, n: usize) -> usize {
        let mut failures = 0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let lhs = OpSequence(self.lhs(i, j, k)).product(n);
                    let rhs = OpSequence(self.rhs(i, j, k)).product(n);
                    if lhs.is_err() || lhs != rhs {
                        failures += 1;
                    }
                }
            }
        }
        failures
    }
}

#[derive(Clone, Copy)]
struct Binding {
    i: usize,
    j: usize,
    k: usize,
}

impl Binding {
    fn get(&self, s: Sym) -> usize {
        match s {
            I => self.i,
            J => self.j,
            K => self.k,
        }
    }

    fn op(&self, (t, s): Pair) -> ElementaryOp {
        ElementaryOp::add(self.get(t), self.get(s))
    }

    /// Binds symbols against concrete `(target, source)` pairs. Returns
    /// `None` on conflict or when the bound indices are not distinct.
    fn unify(pattern: &[Pair], ops: &[(usize, usize)]) -> Option<Binding> {
        let mut slots: [Option<usize>; 3] = [None; 3];
        for (&(ps, pt), &(t, s)) in pattern.iter().zip(ops) {
            for (sym, v) in [(ps, t), (pt, s)] {
                let slot = &mut slots[sym as usize];
                match *slot {
                    None => *slot = Some(v),
                    Some(w) if w == v => {}
                    Some(_) => return None,
                }
            }
        }
        let [i, j, k] = slots;
        let (i, j) = (i?, j?);
        let k = k.unwrap_or(usize::MAX);
        if i == j || i == k || j == k {
            return None;
        }
        Some(Binding { i, j, k })
    }
}

fn validate_rules_once() {
    static CHECKED: OnceLock<()> = OnceLock::new();
    CHECKED.get_or_init(|| {
        for rule in Rule::ALL {
            assert_eq!(rule.count_failures(4), 0, "rewrite identity {rule:?} does not hold");
        }
    });
}

/// Moves every swap to the front, conjugating the row additions it passes:
/// `O · E(i↔j) = E(i↔j) · τ(O)` where τ exchanges `i` and `j`.
pub fn push_swaps_left(seq: &OpSequence, n: usize) -> Decomposition {
    let mut perm = Permutation::identity(n);
    let mut out: Vec<ElementaryOp> = Vec::with_capacity(seq.len());
    for op in seq.ops() {
        match *op {
            ElementaryOp::Swap(a, b) => {
                let tau = |v: usize| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                };
                for prev in out.iter_mut() {
                    *prev = prev.map_indices(tau);
                }
                perm = perm.then_matrix(&Permutation::transposition(n, a, b));
            }
            add => out.push(add),
        }
    }
    Decomposition { perm, seq: OpSequence(out) }
}

#[inline]
fn commutes(x: (usize, usize), y: (usize, usize)) -> bool {
    x.0 != y.1 && y.0 != x.1
}

/// True when the op at `idx` can be carried left to sit right after `anchor`,
/// passing every op strictly between them except those at `skip`.
fn movable(seq: &[(usize, usize)], anchor: usize, idx: usize, skip: Option<usize>) -> bool {
    (anchor + 1..idx).all(|m| Some(m) == skip || commutes(seq[idx], seq[m]))
}

enum Rewrite {
    Cancel {
        q: usize,
    },
    Shorten {
        q: usize,
        r: usize,
        ops: [(usize, usize); 2],
    },
    /// `R7` at anchor `p` with partner `q`; swaps `(i, j)`.
    Swap {
        q: usize,
        i: usize,
        j: usize,
    },
}

fn find_rewrite(seq: &[(usize, usize)], p: usize) -> Option<Rewrite> {
    let a = seq[p];
    let len = seq.len();
    let movable_partners: Vec<usize> = (p + 1..len).filter(|&q| movable(seq, p, q, None)).collect();

    for &q in &movable_partners {
        let b = seq[q];
        if b == a {
            return Some(Rewrite::Cancel { q });
        }
        if b == (a.1, a.0) {
            // E(j+i)·E(i+j) with a = (j, i)
            return Some(Rewrite::Swap { q, i: a.1, j: a.0 });
        }
    }

    for &q in &movable_partners {
        let b = seq[q];
        let candidates: Vec<(Rule, Binding, (usize, usize))> = Rule::SHORTENING
            .iter()
            .filter_map(|&rule| {
                let pat = rule.lhs_pattern();
                let bind = Binding::unify(&pat[..2], &[a, b])?;
                let (t, s) = pat[2];
                Some((rule, bind, (bind.get(t), bind.get(s))))
            })
            .collect();
        if candidates.is_empty() {
            continue;
        }
        for r in q + 1..len {
            let Some(&(rule, bind, _)) = candidates.iter().find(|c| c.2 == seq[r]) else {
                continue;
            };
            if !movable(seq, p, r, Some(q)) {
                continue;
            }
            let rhs = rule.rhs_pattern();
            let to_pair = |(t, s): Pair| (bind.get(t), bind.get(s));
            return Some(Rewrite::Shorten { q, r, ops: [to_pair(rhs[0]), to_pair(rhs[1])] });
        }
    }
    None
}

/// Applies R1–R7 (and cancellation of equal commuting pairs) until none
/// matches. The scan is leftmost-first: the first anchor with a matching
/// window is rewritten and the scan restarts from the front. Ops that
/// commute with everything they pass may be brought next to the anchor.
///
/// Swaps produced by R7 are pushed into the returned permutation.
pub fn rewrite_optimize(seq: &OpSequence, n: usize) -> Decomposition {
    if cfg!(debug_assertions) {
        validate_rules_once();
    }
    let Decomposition { mut perm, seq } = push_swaps_left(seq, n);
    let mut ops: Vec<(usize, usize)> = seq.0.iter().map(ElementaryOp::indices).collect();

    'scan: loop {
        for p in 0..ops.len() {
            let Some(rewrite) = find_rewrite(&ops, p) else {
                continue;
            };
            match rewrite {
                Rewrite::Cancel { q } => {
                    ops.remove(q);
                    ops.remove(p);
                }
                Rewrite::Shorten { q, r, ops: new } => {
                    ops.remove(r);
                    ops.remove(q);
                    ops[p] = new[1];
                    ops.insert(p, new[0]);
                }
                Rewrite::Swap { q, i, j } => {
                    ops.remove(q);
                    let tau = |v: usize| {
                        if v == i {
                            j
                        } else if v == j {
                            i
                        } else {
                            v
                        }
                    };
                    for prev in &mut ops[..p] {
                        *prev = (tau(prev.0), tau(prev.1));
                    }
                    perm = perm.then_matrix(&Permutation::transposition(n, i, j));
                }
            }
            continue 'scan;
        }
        break;
    }

    Decomposition { perm, seq: ops.into_iter().map(|(t, s)| ElementaryOp::add(t, s)).collect() }
}

/// Gauss-Jordan elimination followed by swap normalisation and rewriting.
pub fn decompose(a: &BitMatrix) -> Result<Decomposition> {
    let n = a.n();
    // Every elementary matrix is an involution, so a = O₁ · O₂ · … · O_m.
    let d = normalize(gf2::gauss_jordan(a)?, n);
    debug_assert!(verify_decomposition(a, &d).unwrap_or(false));
    Ok(d)
}

/// Swap pushing and the rewrite pass over any product-order sequence.
pub fn normalize(ops: Vec<ElementaryOp>, n: usize) -> Decomposition {
    let pushed = push_swaps_left(&OpSequence(ops), n);
    let rewritten = rewrite_optimize(&pushed.seq, n);
    Decomposition { perm: pushed.perm.then_matrix(&rewritten.perm), seq: rewritten.seq }
}

pub fn verify_decomposition(a: &BitMatrix, d: &Decomposition) -> Result<bool> {
    if a.n() != d.n() {
        return Err(Error::DimensionMismatch { left: a.n(), right: d.n() });
    }
    Ok(d.product()? == *a)
}
