//! Greedy synthesis: shrink a matrix toward a permutation with whichever row
//! or column addition removes the most ones per unit of cost.
//!
//! Gaussian elimination ignores the structure of sparse matrices; this pass
//! often finds much shorter sequences for them and gives the pipeline more
//! candidate decompositions to place.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2::{gauss_jordan, permutation_of, BitMatrix, ElementaryOp};
use crate::rewrite::{normalize, Decomposition};

/// Which side of the matrix additions are applied on.
///
/// Column additions land at the execution start of the circuit with their
/// indices unchanged. Row additions are relabeled by the final permutation,
/// so a locality-aware `cost` is only exact for [`Sides::Columns`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sides {
    Rows,
    Columns,
    Both,
}

/// Per-row weight score the greedy step drives down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    /// Number of ones.
    Ones,
    /// Sum of `ln(weight)`; favors finishing rows that are nearly unit.
    Log,
    /// Sum of squared weights; favors thinning the heaviest rows.
    Square,
}

impl Metric {
    fn score(self, w: usize) -> f64 {
        match self {
            Metric::Ones => w as f64,
            Metric::Log => (w as f64).ln(),
            Metric::Square => (w * w) as f64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct Move {
    column: bool,
    target: usize,
    source: usize,
    delta: f64,
    cost: f64,
}

/// Metric and cost lookups for one synthesis run.
struct Scorer {
    n: usize,
    sides: Sides,
    score: Vec<f64>,
    row_cost: Vec<f64>,
    col_cost: Vec<f64>,
}

impl Scorer {
    fn new(n: usize, params: &GreedyParams<'_>) -> Self {
        let (sides, metric, cost, rows_to) = (params.sides, params.metric, params.cost, params.row_labels);
        let score = (0..=n).map(|w| metric.score(w)).collect();
        let table = |map: &dyn Fn(usize) -> usize| -> Vec<f64> {
            (0..n * n)
                .map(|k| match (k / n, k % n) {
                    (t, s) if t == s => 1.0,
                    (t, s) => (cost(map(t), map(s)).max(1) as f64).powf(params.cost_power),
                })
                .collect()
        };
        let col_cost = table(&|i| i);
        let row_cost = match rows_to {
            Some(sigma) => table(&|i| sigma[i]),
            None => col_cost.clone(),
        };
        Self { n, sides, score, row_cost, col_cost }
    }
}

/// The working matrix, kept in both orientations so row and column moves
/// are scored the same way.
#[derive(Clone)]
struct State {
    rows: BitMatrix,
    cols: BitMatrix,
}

impl State {
    fn is_permutation(&self) -> bool {
        (0..self.rows.n()).all(|i| self.rows.row_weight(i) == 1)
    }

    /// Every addition with its change in `Σ f(row weight) + Σ f(column weight)`.
    /// Scoring both orientations with one potential keeps row and column
    /// moves from undoing each other.
    fn moves(&self, sc: &Scorer, out: &mut Vec<Move>) {
        out.clear();
        let n = sc.n;
        let f = |w: usize| sc.score[w];
        let mut scan = |m: &BitMatrix, other: &BitMatrix, column: bool| {
            let cost = if column { &sc.col_cost } else { &sc.row_cost };
            let other_w: Vec<usize> = (0..n).map(|j| other.row_weight(j)).collect();
            let support: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| m.get(i, j)).collect()).collect();
            let mut gain = vec![0.0; n];
            for t in 0..n {
                let wt = f(m.row_weight(t));
                // flipping entry (t, j) moves the crossing weight by ±1
                for (j, g) in gain.iter_mut().enumerate() {
                    let w = other_w[j];
                    *g = if m.get(t, j) { f(w - 1) - f(w) } else { f(w + 1) - f(w) };
                }
                for s in (0..n).filter(|&s| s != t) {
                    let cross: f64 = support[s].iter().map(|&j| gain[j]).sum();
                    let delta = f(m.xor_weight(t, s)) - wt + cross;
                    out.push(Move { column, target: t, source: s, delta, cost: cost[t * n + s] });
                }
            }
        };
        if sc.sides != Sides::Columns {
            scan(&self.rows, &self.cols, false);
        }
        if sc.sides != Sides::Rows {
            scan(&self.cols, &self.rows, true);
        }
    }

    fn apply(&mut self, mv: &Move) {
        let (major, minor) =
            if mv.column { (&mut self.cols, &mut self.rows) } else { (&mut self.rows, &mut self.cols) };
        major.xor_row_into(mv.target, mv.source);
        for j in 0..major.n() {
            if major.get(mv.source, j) {
                let v = minor.get(j, mv.target);
                minor.set(j, mv.target, !v);
            }
        }
    }
}

const EPS: f64 = 1e-9;

/// The improving moves that share the most negative score.
fn best_of<'a>(moves: impl Iterator<Item = (&'a Move, f64)>) -> Vec<Move> {
    let mut best = f64::INFINITY;
    let mut ties = Vec::new();
    for (mv, score) in moves.filter(|(_, s)| *s < -EPS) {
        if score < best - EPS {
            best = score;
            ties.clear();
        }
        if score <= best + EPS {
            ties.push(*mv);
        }
    }
    ties
}

/// Settings for one greedy run.
#[derive(Clone, Copy)]
pub struct GreedyParams<'a> {
    pub sides: Sides,
    pub metric: Metric,
    /// Cost of an addition between final indices `i` and `j`.
    pub cost: &'a dyn Fn(usize, usize) -> usize,
    /// Guess of where each working row ends up, used to price row additions
    /// by their final indices. Usually the `row_labels` of an earlier run.
    pub row_labels: Option<&'a [usize]>,
    /// Moves are scored by `Δmetric / cost^cost_power`.
    pub cost_power: f64,
}

impl<'a> GreedyParams<'a> {
    pub fn new(sides: Sides, metric: Metric, cost: &'a dyn Fn(usize, usize) -> usize) -> Self {
        Self { sides, metric, cost, row_labels: None, cost_power: 1.0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Greedy {
    /// Elementary ops in product order (swaps allowed) whose product is the input.
    pub ops: Vec<ElementaryOp>,
    /// Final index of every row addition's working row: `σ` of the permutation
    /// the working matrix was reduced to.
    pub row_labels: Vec<usize>,
}

/// Reduces `a` to a permutation with additions on either side.
///
/// Each step takes the move with the most negative `Δmetric / cost`. When no
/// single move helps, the best improving pair of moves is taken instead, and
/// when no pair helps either the remainder is finished by Gauss–Jordan. Ties
/// go to the first move in scan order, or to a uniformly random one when
/// `rng` is given.
pub fn greedy_ops(a: &BitMatrix, params: &GreedyParams<'_>, mut rng: Option<&mut ChaCha8Rng>) -> Result<Greedy> {
    if !a.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let mut state = State { rows: a.clone(), cols: a.transpose() };
    // rows = L_m · … · L_1 · a · R_1 · … · R_k
    let mut left = Vec::new();
    let mut right = Vec::new();
    let sc = Scorer::new(a.n(), params);
    let mut moves = Vec::new();
    let mut second = Vec::new();

    while !state.is_permutation() {
        state.moves(&sc, &mut moves);
        let mut ties: Vec<Vec<Move>> =
            best_of(moves.iter().map(|m| (m, m.delta / m.cost))).into_iter().map(|m| vec![m]).collect();
        if ties.is_empty() {
            // two-step lookahead from the neutral moves; the pair is committed
            // together so the first move cannot simply be undone next step
            let mut pairs: Vec<(Move, Move, f64)> = Vec::new();
            for first in moves.iter().filter(|m| m.delta <= EPS) {
                let mut next = state.clone();
                next.apply(first);
                next.moves(&sc, &mut second);
                let same = |m: &Move| m.column == first.column && m.target == first.target && m.source == first.source;
                let Some((m2, score)) = second
                    .iter()
                    .filter(|m| !same(m))
                    .map(|m| (*m, (first.delta + m.delta) / (first.cost + m.cost)))
                    .min_by(|x, y| x.1.total_cmp(&y.1))
                else {
                    continue;
                };
                pairs.push((*first, m2, score));
            }
            let best = pairs.iter().map(|p| p.2).fold(f64::INFINITY, f64::min);
            if best < -EPS {
                ties = pairs.iter().filter(|p| p.2 <= best + EPS).map(|p| vec![p.0, p.1]).collect();
            }
        }
        let chosen = match (rng.as_deref_mut(), ties.len()) {
            (_, 0) => break,
            (Some(r), len) => ties.swap_remove(r.gen_range(0..len)),
            (None, _) => ties.swap_remove(0),
        };
        for mv in chosen {
            state.apply(&mv);
            if mv.column {
                // column `target` += column `source`: a · E(source + target)
                right.push(ElementaryOp::add(mv.source, mv.target));
            } else {
                left.push(ElementaryOp::add(mv.target, mv.source));
            }
        }
    }

    // a = L_1 · … · L_m · rows · R_k · … · R_1
    let row_labels = match permutation_of(&state.rows) {
        Some(p) => p.image().to_vec(),
        None => (0..a.n()).collect(),
    };
    let mut ops = left;
    ops.extend(gauss_jordan(&state.rows)?);
    ops.extend(right.into_iter().rev());
    Ok(Greedy { ops, row_labels })
}

/// Greedy synthesis followed by swap pushing and the rewrite pass.
pub fn greedy_decompose(
    a: &BitMatrix,
    params: &GreedyParams<'_>,
    rng: Option<&mut ChaCha8Rng>,
) -> Result<(Decomposition, Vec<usize>)> {
    let g = greedy_ops(a, params, rng)?;
    Ok((normalize(g.ops, a.n()), g.row_labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::{decompose, push_swaps_left, verify_decomposition, OpSequence};
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn unit(_: usize, _: usize) -> usize {
        1
    }

    fn run(a: &BitMatrix, sides: Sides) -> Decomposition {
        greedy_decompose(a, &GreedyParams::new(sides, Metric::Ones, &unit), None).unwrap().0
    }

    fn random_invertible(n: usize, adds: &[(usize, usize)]) -> BitMatrix {
        let mut m = BitMatrix::identity(n);
        for &(t, s) in adds {
            if t % n != s % n {
                m.xor_row_into(t % n, s % n);
            }
        }
        m
    }

    #[test]
    fn identity_and_permutation_need_no_additions() {
        let d = run(&BitMatrix::identity(6), Sides::Both);
        assert!(d.seq.is_empty() && d.perm.is_identity());
        let mut p = BitMatrix::identity(4);
        p.swap_rows(0, 3);
        p.swap_rows(1, 2);
        let d = run(&p, Sides::Both);
        assert!(d.seq.is_empty());
        assert!(verify_decomposition(&p, &d).unwrap());
    }

    #[test]
    fn single_addition_is_found() {
        let mut a = BitMatrix::identity(5);
        a.xor_row_into(3, 1);
        let d = run(&a, Sides::Rows);
        assert_eq!(d.seq, OpSequence::new(vec![ElementaryOp::add(3, 1)]));
    }

    #[test]
    fn singular_is_rejected() {
        let params = GreedyParams::new(Sides::Rows, Metric::Ones, &unit);
        assert_eq!(greedy_ops(&BitMatrix::zeros(3), &params, None).unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn never_worse_than_needed_on_fixture() {
        let a = BitMatrix::from_rows(&[
            [1, 1, 0, 1, 1],
            [0, 0, 1, 1, 0],
            [1, 0, 1, 0, 1],
            [1, 1, 0, 1, 0],
            [1, 1, 1, 1, 0],
        ])
        .unwrap();
        let g = run(&a, Sides::Both);
        assert!(verify_decomposition(&a, &g).unwrap());
        assert!(g.seq.len() <= decompose(&a).unwrap().seq.len() + 3);
    }

    proptest! {
        #[test]
        fn greedy_reproduces_matrix(
            n in 2usize..12,
            adds in prop::collection::vec((0usize..12, 0usize..12), 0..60),
            side in 0usize..3,
            seed in any::<u64>(),
        ) {
            let a = random_invertible(n, &adds);
            let sides = [Sides::Rows, Sides::Columns, Sides::Both][side];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let skew = |i: usize, j: usize| 1 + (i + 2 * j) % 3;
            let params = GreedyParams::new(sides, Metric::Log, &skew);
            let (d, labels) = greedy_decompose(&a, &params, Some(&mut rng)).unwrap();
            prop_assert!(verify_decomposition(&a, &d).unwrap());
            let guided = GreedyParams { row_labels: Some(&labels), ..params };
            let (d2, _) = greedy_decompose(&a, &guided, Some(&mut rng)).unwrap();
            prop_assert!(verify_decomposition(&a, &d2).unwrap());
        }

        #[test]
        fn row_labels_predict_pushed_indices(
            n in 2usize..10,
            adds in prop::collection::vec((0usize..10, 0usize..10), 0..40),
        ) {
            let a = random_invertible(n, &adds);
            let g = greedy_ops(&a, &GreedyParams::new(Sides::Rows, Metric::Ones, &unit), None).unwrap();
            let swaps = g.ops.iter().filter(|o| o.is_swap()).count();
            // a pure permutation remainder leaves no additions after the swaps
            prop_assume!(g.ops.iter().skip_while(|o| !o.is_swap()).all(|o| o.is_swap()));
            let left: Vec<ElementaryOp> = g.ops.iter().copied().filter(|o| !o.is_swap()).collect();
            let pushed = push_swaps_left(&OpSequence::new(g.ops.clone()), n);
            let expected: Vec<ElementaryOp> = left.iter().map(|o| o.map_indices(|i| g.row_labels[i])).collect();
            prop_assert_eq!(pushed.seq.ops(), &expected[..], "{} swaps", swaps);
        }
    }
}
