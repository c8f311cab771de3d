//! Placement of logical qubits onto device vertices.
//!
//! The cost of a placement is the number of nearest-neighbour CNOTs needed
//! to realise every row addition of a decomposition: an addition between
//! qubits at distance `d` costs [`cost_s`]`(d)`. Minimising the weighted sum
//! is a quadratic assignment problem. Three routes are provided: local search
//! over permutations of small vertex subsets, exhaustive enumeration for
//! small instances, and export to an LP-format MILP for external solvers.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arch::DistanceTable;
use crate::error::{Error, Result};
use crate::gf2::significant_lines;
use crate::rewrite::Decomposition;

/// Gates needed for one CNOT between qubits at distance `d`.
pub fn cost_s(d: usize) -> Result<usize> {
    match d {
        0 => Err(Error::InvalidDistance(d)),
        1 => Ok(1),
        d => Ok(4 * d - 4),
    }
}

#[inline]
pub(crate) fn cost_unchecked(d: usize) -> usize {
    if d == 1 {
        1
    } else {
        4 * d - 4
    }
}

/// Multigraph with one unit of weight per row addition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InteractionGraph {
    n: usize,
    weights: BTreeMap<(usize, usize), usize>,
}

impl InteractionGraph {
    pub fn new(n: usize) -> Self {
        Self { n, weights: BTreeMap::new() }
    }

    /// Adds one unit of weight on the unordered pair `{u, v}`.
    pub fn add(&mut self, u: usize, v: usize) -> Result<()> {
        for index in [u, v] {
            if index >= self.n {
                return Err(Error::IndexOutOfRange { index, size: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidParams(format!("self-pair on qubit {}", u + 1)));
        }
        *self.weights.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        Ok(())
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in pairs {
            g.add(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `((u, v), weight)` with `u < v`, in ascending pair order.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.weights.iter().map(|(&k, &w)| (k, w))
    }

    pub fn weight(&self, u: usize, v: usize) -> usize {
        self.weights.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    pub fn num_pairs(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> usize {
        self.weights.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    fn neighbour_lists(&self) -> Vec<Vec<(usize, usize)>> {
        let mut lists = vec![Vec::new(); self.n];
        for (&(u, v), &w) in &self.weights {
            lists[u].push((v, w));
            lists[v].push((u, w));
        }
        lists
    }
}

pub fn interaction_graph(d: &Decomposition) -> Result<InteractionGraph> {
    let mut g = InteractionGraph::new(d.n());
    for op in d.seq.ops() {
        if op.is_swap() {
            return Err(Error::InvalidParams("decomposition sequence contains a swap".into()));
        }
        let (t, s) = op.indices();
        g.add(t, s)?;
    }
    Ok(g)
}

/// Injective map from logical qubits to physical vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    assign: Vec<usize>,
    n_physical: usize,
}

impl Placement {
    pub fn new(assign: Vec<usize>, n_physical: usize) -> Result<Self> {
        let mut used = vec![false; n_physical];
        for (v, &p) in assign.iter().enumerate() {
            if p >= n_physical {
                return Err(Error::InvalidPlacement(format!(
                    "logical {} mapped to vertex {} of {n_physical}",
                    v + 1,
                    p + 1
                )));
            }
            if std::mem::replace(&mut used[p], true) {
                return Err(Error::InvalidPlacement(format!("vertex {} used twice", p + 1)));
            }
        }
        Ok(Self { assign, n_physical })
    }

    /// Logical `v` on vertex `v`.
    pub fn identity(n_logical: usize, n_physical: usize) -> Result<Self> {
        if n_logical > n_physical {
            return Err(Error::TooManyQubits { logical: n_logical, physical: n_physical });
        }
        Ok(Self { assign: (0..n_logical).collect(), n_physical })
    }

    pub fn n_logical(&self) -> usize {
        self.assign.len()
    }

    pub fn n_physical(&self) -> usize {
        self.n_physical
    }

    #[inline]
    pub fn get(&self, logical: usize) -> usize {
        self.assign[logical]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assign
    }

    /// Physical vertex → logical qubit, `None` for empty slots.
    pub fn occupants(&self) -> Vec<Option<usize>> {
        let mut occ = vec![None; self.n_physical];
        for (v, &p) in self.assign.iter().enumerate() {
            occ[p] = Some(v);
        }
        occ
    }

    fn check_against(&self, ig: &InteractionGraph, t: &DistanceTable) -> Result<()> {
        if self.n_physical != t.n() {
            return Err(Error::InvalidPlacement(format!(
                "placement targets {} vertices, architecture has {}",
                self.n_physical,
                t.n()
            )));
        }
        if self.n_logical() != ig.n() {
            return Err(Error::InvalidPlacement(format!(
                "placement covers {} logical qubits, circuit has {}",
                self.n_logical(),
                ig.n()
            )));
        }
        Ok(())
    }
}

/// One `assign <logical> <physical>` line per qubit, 1-based.
impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, &p) in self.assign.iter().enumerate() {
            writeln!(f, "assign {} {}", v + 1, p + 1)?;
        }
        Ok(())
    }
}

/// Weighted sum of `cost_s(dist(x_u, x_v))` over the interaction pairs.
pub fn objective(p: &Placement, ig: &InteractionGraph, t: &DistanceTable) -> Result<usize> {
    p.check_against(ig, t)?;
    Ok(ig.pairs().map(|((u, v), w)| w * cost_unchecked(t.dist(p.get(u), p.get(v)))).sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSearchParams {
    /// Number of vertices permuted together in one move.
    pub k: usize,
    /// Run one extra sweep with `k + 1` after converging, then re-converge.
    pub polish: bool,
    /// Additional random starting placements beyond the initial one.
    pub restarts: usize,
    pub seed: u64,
    /// Upper bound on full sweeps per start.
    pub max_rounds: usize,
}

impl Default for LocalSearchParams {
    fn default() -> Self {
        Self { k: 2, polish: true, restarts: 0, seed: 0, max_rounds: 1000 }
    }
}

struct SearchState<'a> {
    adj: &'a [Vec<(usize, usize)>],
    t: &'a DistanceTable,
    slot_of: Vec<usize>,
    occupant: Vec<Option<usize>>,
    cost: usize,
}

impl SearchState<'_> {
    fn full_cost(&self) -> usize {
        let mut total = 0;
        for (u, list) in self.adj.iter().enumerate() {
            for &(v, w) in list {
                if u < v {
                    total += w * cost_unchecked(self.t.dist(self.slot_of[u], self.slot_of[v]));
                }
            }
        }
        total
    }

    /// Cost of every pair touching a qubit in `moved`, each pair once.
    fn local_cost(&self, moved: &[usize]) -> usize {
        let mut total = 0;
        for (idx, &u) in moved.iter().enumerate() {
            for &(v, w) in &self.adj[u] {
                // pairs inside `moved` are counted from their first member
                if let Some(pos) = moved.iter().position(|&m| m == v) {
                    if pos < idx {
                        continue;
                    }
                }
                total += w * cost_unchecked(self.t.dist(self.slot_of[u], self.slot_of[v]));
            }
        }
        total
    }

    /// One sweep over all `k`-subsets of vertices and all rearrangements of
    /// their contents, accepting strict improvements as they are found.
    fn sweep(&mut self, k: usize) -> bool {
        let n = self.occupant.len();
        let k = k.min(n);
        let mut improved = false;
        if k < 2 {
            return false;
        }
        let mut moved = Vec::with_capacity(k);
        for subset in (0..n).combinations(k) {
            moved.clear();
            moved.extend(subset.iter().filter_map(|&s| self.occupant[s]));
            if moved.is_empty() || moved.iter().all(|&u| self.adj[u].is_empty()) {
                continue;
            }
            let contents: Vec<Option<usize>> = subset.iter().map(|&s| self.occupant[s]).collect();
            let before = self.local_cost(&moved);
            let mut best: Option<(usize, Vec<Option<usize>>)> = None;
            for perm in (0..k).permutations(k) {
                if perm.iter().enumerate().all(|(i, &p)| i == p) {
                    continue;
                }
                for (slot_pos, &src) in perm.iter().enumerate() {
                    if let Some(u) = contents[src] {
                        self.slot_of[u] = subset[slot_pos];
                    }
                }
                let after = self.local_cost(&moved);
                if after < before && best.as_ref().is_none_or(|(c, _)| after < *c) {
                    best = Some((after, perm.iter().map(|&src| contents[src]).collect()));
                }
                // restore
                for (slot_pos, &u) in contents.iter().enumerate() {
                    if let Some(u) = u {
                        self.slot_of[u] = subset[slot_pos];
                    }
                }
                if best.is_some() {
                    break;
                }
            }
            if let Some((after, arrangement)) = best {
                for (slot_pos, u) in arrangement.into_iter().enumerate() {
                    self.occupant[subset[slot_pos]] = u;
                    if let Some(u) = u {
                        self.slot_of[u] = subset[slot_pos];
                    }
                }
                self.cost = self.cost - before + after;
                debug_assert_eq!(self.cost, self.full_cost());
                improved = true;
            }
        }
        improved
    }

    fn converge(&mut self, k: usize, max_rounds: usize) -> usize {
        let mut rounds = 0;
        while rounds < max_rounds && self.sweep(k) {
            rounds += 1;
        }
        rounds
    }
}

fn search_from(
    start: &Placement,
    adj: &[Vec<(usize, usize)>],
    t: &DistanceTable,
    params: &LocalSearchParams,
) -> (Placement, usize) {
    let mut state = SearchState { adj, t, slot_of: start.assign.clone(), occupant: start.occupants(), cost: 0 };
    state.cost = state.full_cost();
    let mut budget = params.max_rounds;
    loop {
        budget = budget.saturating_sub(state.converge(params.k, budget));
        if !params.polish || budget == 0 || !state.sweep(params.k + 1) {
            break;
        }
        budget -= 1;
    }
    let cost = state.cost;
    (Placement { assign: state.slot_of, n_physical: start.n_physical }, cost)
}

/// Strict-improvement local search over permutations of `k` vertices at a
/// time. Starts from `warm_start` (or the identity) and, when
/// `params.restarts > 0`, from that many seeded random placements as well;
/// the cheapest result wins, earliest start on ties.
pub fn local_search_place(
    ig: &InteractionGraph,
    t: &DistanceTable,
    params: &LocalSearchParams,
    warm_start: Option<&Placement>,
) -> Result<Placement> {
    if ig.n() > t.n() {
        return Err(Error::TooManyQubits { logical: ig.n(), physical: t.n() });
    }
    if params.k < 2 {
        return Err(Error::InvalidParams("local search needs k >= 2".into()));
    }
    let initial = match warm_start {
        Some(p) => {
            p.check_against(ig, t)?;
            p.clone()
        }
        None => Placement::identity(ig.n(), t.n())?,
    };
    if ig.is_empty() {
        return Ok(initial);
    }
    let adj = ig.neighbour_lists();
    let mut starts = vec![initial];
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for _ in 0..params.restarts {
        let mut slots: Vec<usize> = (0..t.n()).collect();
        slots.shuffle(&mut rng);
        slots.truncate(ig.n());
        starts.push(Placement { assign: slots, n_physical: t.n() });
    }
    let results: Vec<(Placement, usize)> = starts.par_iter().map(|s| search_from(s, &adj, t, params)).collect();
    let (best, _) = results.into_iter().min_by_key(|(_, c)| *c).expect("at least one start");
    Ok(best)
}

pub const DEFAULT_EXHAUSTIVE_BOUND: u128 = 10_000_000;

/// Number of injective maps from `m` items into `n` slots.
pub fn placement_count(m: usize, n: usize) -> u128 {
    if m > n {
        return 0;
    }
    ((n - m + 1)..=n).fold(1u128, |acc, x| acc.saturating_mul(x as u128))
}

/// Global minimum by enumeration (with partial-cost pruning), lexicographically
/// smallest assignment among minimisers.
pub fn exhaustive_place(ig: &InteractionGraph, t: &DistanceTable, bound: u128) -> Result<(Placement, usize)> {
    let (m, n) = (ig.n(), t.n());
    if m > n {
        return Err(Error::TooManyQubits { logical: m, physical: n });
    }
    let count = placement_count(m, n);
    if count > bound {
        return Err(Error::InstanceTooLarge { count, bound });
    }
    // Only pairs to already-placed (lower-index) qubits are charged at each depth.
    let mut back: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for ((u, v), w) in ig.pairs() {
        back[v].push((u, w));
    }

    struct Search<'a> {
        back: &'a [Vec<(usize, usize)>],
        t: &'a DistanceTable,
        assign: Vec<usize>,
        used: Vec<bool>,
        best: Option<(Vec<usize>, usize)>,
    }

    impl Search<'_> {
        fn go(&mut self, depth: usize, partial: usize) {
            if let Some((_, b)) = &self.best {
                if partial >= *b {
                    return;
                }
            }
            if depth == self.back.len() {
                self.best = Some((self.assign.clone(), partial));
                return;
            }
            for p in 0..self.used.len() {
                if self.used[p] {
                    continue;
                }
                let add: usize =
                    self.back[depth].iter().map(|&(u, w)| w * cost_unchecked(self.t.dist(self.assign[u], p))).sum();
                self.used[p] = true;
                self.assign.push(p);
                self.go(depth + 1, partial + add);
                self.assign.pop();
                self.used[p] = false;
            }
        }
    }

    let mut s = Search { back: &back, t, assign: Vec::with_capacity(m), used: vec![false; n], best: None };
    s.go(0, 0);
    let (assign, cost) = s.best.expect("m <= n guarantees a feasible placement");
    Ok((Placement { assign, n_physical: n }, cost))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Eq,
    Le,
    Ge,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Eq => "=",
            Sense::Le => "<=",
            Sense::Ge => ">=",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub name: String,
    /// `(coefficient, variable index)`
    pub terms: Vec<(i64, usize)>,
    pub sense: Sense,
    pub rhs: i64,
}

/// Assignment-variable linearisation of the placement objective.
///
/// `y[v][p] = 1` places logical `v` on vertex `p`; for every interaction pair
/// `{u, v}` and ordered vertex pair `(p, q)`, `p ≠ q`, the binary
/// `z ≥ y[u][p] + y[v][q] − 1` is charged `weight · cost_s(dist(p, q))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilpModel {
    pub variables: Vec<String>,
    pub objective: Vec<(i64, usize)>,
    pub constraints: Vec<LinearConstraint>,
    pub n_logical: usize,
    pub n_physical: usize,
}

impl MilpModel {
    pub fn y_name(v: usize, p: usize) -> String {
        format!("y_{}_{}", v + 1, p + 1)
    }

    pub fn num_y(&self) -> usize {
        self.n_logical * self.n_physical
    }

    pub fn num_z(&self) -> usize {
        self.variables.len() - self.num_y()
    }

    /// CPLEX LP text.
    pub fn to_lp_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "\\ qubit placement: {} logical on {} physical", self.n_logical, self.n_physical);
        out.push_str("Minimize\n obj:");
        if self.objective.is_empty() {
            // LP readers reject an empty objective row
            let _ = write!(out, " 0 {}", self.variables[0]);
        }
        write_terms(&mut out, &self.objective, &self.variables);
        out.push_str("\nSubject To\n");
        for c in &self.constraints {
            let _ = write!(out, " {}:", c.name);
            write_terms(&mut out, &c.terms, &self.variables);
            let _ = writeln!(out, " {} {}", c.sense, c.rhs);
        }
        out.push_str("Binary\n");
        for chunk in self.variables.chunks(10) {
            let _ = writeln!(out, " {}", chunk.join(" "));
        }
        out.push_str("End\n");
        out
    }
}

fn write_terms(out: &mut String, terms: &[(i64, usize)], names: &[String]) {
    for (idx, &(c, var)) in terms.iter().enumerate() {
        // wrap long rows; LP readers accept continuation lines
        if idx > 0 && idx % 8 == 0 {
            out.push_str("\n   ");
        }
        let sign = if c < 0 { '-' } else { '+' };
        if idx == 0 && c >= 0 {
            let _ = write!(out, " {} {}", c, names[var]);
        } else {
            let _ = write!(out, " {sign} {} {}", c.abs(), names[var]);
        }
    }
}

pub fn export_milp(ig: &InteractionGraph, t: &DistanceTable) -> Result<MilpModel> {
    let (m, n) = (ig.n(), t.n());
    if m > n {
        return Err(Error::TooManyQubits { logical: m, physical: n });
    }
    if m == 0 {
        return Err(Error::InvalidParams("no logical qubits to place".into()));
    }
    let mut variables = Vec::with_capacity(m * n);
    for v in 0..m {
        for p in 0..n {
            variables.push(MilpModel::y_name(v, p));
        }
    }
    let y = |v: usize, p: usize| v * n + p;

    let mut constraints = Vec::new();
    for v in 0..m {
        constraints.push(LinearConstraint {
            name: format!("assign_{}", v + 1),
            terms: (0..n).map(|p| (1, y(v, p))).collect(),
            sense: Sense::Eq,
            rhs: 1,
        });
    }
    for p in 0..n {
        constraints.push(LinearConstraint {
            name: format!("slot_{}", p + 1),
            terms: (0..m).map(|v| (1, y(v, p))).collect(),
            sense: Sense::Le,
            rhs: 1,
        });
    }

    let mut objective = Vec::new();
    for ((u, v), w) in ig.pairs() {
        for p in 0..n {
            for q in 0..n {
                if p == q {
                    continue;
                }
                let z = variables.len();
                variables.push(format!("z_{}_{}_{}_{}", u + 1, v + 1, p + 1, q + 1));
                let coeff = (w * cost_s(t.dist(p, q))?) as i64;
                objective.push((coeff, z));
                constraints.push(LinearConstraint {
                    name: format!("link_{}_{}_{}_{}", u + 1, v + 1, p + 1, q + 1),
                    terms: vec![(1, z), (-1, y(u, p)), (-1, y(v, q))],
                    sense: Sense::Ge,
                    rhs: -1,
                });
            }
        }
    }
    Ok(MilpModel { variables, objective, constraints, n_logical: m, n_physical: n })
}

/// Reads `assign <v> <p>` lines, or a solver listing of `y_<v>_<p> <value>`
/// entries (values above 0.5 count as set). Other variables are ignored.
pub fn import_solution(text: &str, ig: &InteractionGraph, t: &DistanceTable) -> Result<Placement> {
    let (m, n) = (ig.n(), t.n());
    let mut assign: Vec<Option<usize>> = vec![None; m];
    let mut set = |lineno: usize, v: usize, p: usize| -> Result<()> {
        if v == 0 || v > m {
            return Err(Error::parse(lineno, format!("logical qubit {v} out of range 1..={m}")));
        }
        if p == 0 || p > n {
            return Err(Error::InvalidPlacement(format!("vertex {p} out of range 1..={n}")));
        }
        if assign[v - 1].replace(p - 1).is_some() {
            return Err(Error::parse(lineno, format!("logical qubit {v} assigned twice")));
        }
        Ok(())
    };
    for (lineno, line) in significant_lines(text) {
        let tokens: Vec<&str> = line.split(|c: char| c.is_whitespace() || c == '=').filter(|t| !t.is_empty()).collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| Error::parse(lineno, format!("bad number `{t}`")));
        match tokens.as_slice() {
            ["assign", v, p] => set(lineno, num(v)?, num(p)?)?,
            [name, .., value] if name.starts_with("y_") => {
                let value: f64 = value.parse().map_err(|_| Error::parse(lineno, format!("bad value `{value}`")))?;
                if value > 0.5 {
                    let (v, p) = name[2..]
                        .split_once('_')
                        .ok_or_else(|| Error::parse(lineno, format!("bad variable `{name}`")))?;
                    set(lineno, num(v)?, num(p)?)?;
                }
            }
            [name, ..] if name.starts_with("z_") => {}
            _ => return Err(Error::parse(lineno, format!("unrecognised line `{line}`"))),
        }
    }
    let assign = assign
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| Error::parse(0, format!("no assignment for logical qubit {}", v + 1))))
        .collect::<Result<Vec<_>>>()?;
    Placement::new(assign, n)
}


#[cfg(test)]
mod proptests {
    use super::*;
    use crate::arch::{all_pairs_distances, builtin_architecture};
    use proptest::prelude::*;

    type Cell = fn(usize, usize) -> (usize, usize);

    fn arb_instance(n_logical: usize) -> impl Strategy<Value = InteractionGraph> {
        proptest::collection::vec((0..n_logical, 1..n_logical), 0..12).prop_map(move |pairs| {
            InteractionGraph::from_pairs(n_logical, pairs.into_iter().map(|(u, d)| (u, (u + d) % n_logical))).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn local_search_never_beats_exhaustive(g in arb_instance(5), seed in 0u64..100) {
            let t = all_pairs_distances(&builtin_architecture("grid-2x3").unwrap()).unwrap();
            let params = LocalSearchParams { seed, restarts: 2, ..Default::default() };
            let local = local_search_place(&g, &t, &params, None).unwrap();
            let (_, best) = exhaustive_place(&g, &t, DEFAULT_EXHAUSTIVE_BOUND).unwrap();
            prop_assert!(objective(&local, &g, &t).unwrap() >= best);
        }

        #[test]
        fn local_search_never_worse_than_start(g in arb_instance(9), perm in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
            let t = all_pairs_distances(&builtin_architecture("9q-square").unwrap()).unwrap();
            let start = Placement::new(perm, 9).unwrap();
            let before = objective(&start, &g, &t).unwrap();
            let p = local_search_place(&g, &t, &LocalSearchParams::default(), Some(&start)).unwrap();
            prop_assert!(objective(&p, &g, &t).unwrap() <= before);
        }

        #[test]
        fn objective_invariant_under_grid_automorphisms(g in arb_instance(9), perm in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
            let t = all_pairs_distances(&builtin_architecture("9q-square").unwrap()).unwrap();
            let p = Placement::new(perm.clone(), 9).unwrap();
            let base = objective(&p, &g, &t).unwrap();
            let automorphisms: [Cell; 3] = [
                |r, c| (r, 2 - c),
                |r, c| (2 - r, c),
                |r, c| (c, r),
            ];
            for phi in automorphisms {
                let mapped: Vec<usize> = perm.iter().map(|&x| { let (r, c) = phi(x / 3, x % 3); r * 3 + c }).collect();
                let q = Placement::new(mapped, 9).unwrap();
                prop_assert_eq!(objective(&q, &g, &t).unwrap(), base);
            }
        }
    }
}
