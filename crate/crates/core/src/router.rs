//! Expansion of placed row additions into nearest-neighbour CNOT chains.

use std::fmt;
use std::str::FromStr;

use crate::arch::DistanceTable;
use crate::error::{Error, Result};
use crate::gf2::{circuit_matrix, parse_image, significant_lines, BitMatrix, CnotGate, Permutation};
use crate::placer::Placement;
use crate::rewrite::Decomposition;

/// A CNOT list in time order, optionally with an output relabelling.
///
/// Text form: `qubits <n>`, then `cnot <control> <target>` lines (1-based),
/// then an optional `relabel <image list>` trailer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    pub n: usize,
    pub gates: Vec<CnotGate>,
    pub relabel: Option<Permutation>,
}

impl Circuit {
    pub fn new(n: usize, gates: Vec<CnotGate>) -> Self {
        Self { n, gates, relabel: None }
    }

    pub fn matrix(&self) -> Result<BitMatrix> {
        circuit_matrix(&self.gates, self.n)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits {}", self.n)?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        if let Some(r) = &self.relabel {
            let image: Vec<String> = r.image().iter().map(|v| (v + 1).to_string()).collect();
            writeln!(f, "relabel {}", image.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = significant_lines(text);
        let (lineno, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["qubits", n] => n
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::parse(lineno, format!("bad qubit count `{n}`")))?,
            _ => return Err(Error::parse(lineno, "expected `qubits <n>`")),
        };
        let mut gates = Vec::new();
        let mut relabel = None;
        for (lineno, line) in lines {
            if relabel.is_some() {
                return Err(Error::parse(lineno, "nothing may follow the relabel line"));
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["cnot", c, t] => {
                    let wire = |s: &str| match s.parse::<usize>() {
                        Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                        _ => Err(Error::parse(lineno, format!("bad wire `{s}`"))),
                    };
                    let gate = CnotGate::new(wire(c)?, wire(t)?);
                    if gate.control == gate.target {
                        return Err(Error::parse(lineno, "control equals target"));
                    }
                    gates.push(gate);
                }
                ["relabel", rest @ ..] => {
                    let p = parse_image(rest, lineno)?;
                    if p.len() != n {
                        return Err(Error::parse(lineno, format!("relabel has {} entries, expected {n}", p.len())));
                    }
                    relabel = Some(p);
                }
                _ => return Err(Error::parse(lineno, format!("unrecognised line `{line}`"))),
            }
        }
        Ok(Self { n, gates, relabel })
    }
}

/// Device-level circuit produced by [`route_circuit`].
///
/// After the gates run, logical output `i` sits on physical wire
/// `output_relabel(placement(i))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoutedCircuit {
    pub n_physical: usize,
    pub gates: Vec<CnotGate>,
    pub output_relabel: Permutation,
    pub placement: Placement,
}

impl RoutedCircuit {
    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    /// ASAP layering depth.
    pub fn depth(&self) -> usize {
        circuit_depth(&self.gates, self.n_physical)
    }

    /// Physical wire carrying logical output `i`.
    pub fn output_wire(&self, i: usize) -> usize {
        self.output_relabel.apply(self.placement.get(i))
    }

    pub fn to_circuit(&self) -> Circuit {
        Circuit {
            n: self.n_physical,
            gates: self.gates.clone(),
            relabel: (!self.output_relabel.is_identity()).then(|| self.output_relabel.clone()),
        }
    }
}

pub fn circuit_depth(gates: &[CnotGate], n: usize) -> usize {
    let mut level = vec![0usize; n];
    let mut depth = 0;
    for g in gates {
        let l = level[g.control].max(level[g.target]) + 1;
        level[g.control] = l;
        level[g.target] = l;
        depth = depth.max(l);
    }
    depth
}

/// CNOT from `path[0]` onto `path[last]` using only consecutive-vertex gates.
///
/// For distance `d > 1` this emits four sweeps along the path, `4d − 4`
/// gates in all, leaving every interior wire as it was.
pub fn expand_long_cnot(path: &[usize], t: &DistanceTable) -> Result<Vec<CnotGate>> {
    if path.len() < 2 {
        return Err(Error::InvalidPath("a path needs at least two vertices".into()));
    }
    if let Some(w) = path.windows(2).find(|w| w[0] >= t.n() || w[1] >= t.n() || !t.is_adjacent(w[0], w[1])) {
        return Err(Error::InvalidPath(format!("{} and {} are not adjacent", w[0] + 1, w[1] + 1)));
    }
    Ok(expand_along(path))
}

fn expand_along(path: &[usize]) -> Vec<CnotGate> {
    let d = path.len() - 1;
    // step(j) is CNOT(path[j] → path[j+1]) in 1-based path positions
    let step = |j: usize| CnotGate::new(path[j - 1], path[j]);
    if d == 1 {
        return vec![step(1)];
    }
    let mut gates = Vec::with_capacity(4 * d - 4);
    gates.extend((1..=d).rev().map(step));
    gates.extend((2..=d).map(step));
    gates.extend((1..d).rev().map(step));
    gates.extend((2..d).map(step));
    gates
}

fn long_cnot(control: usize, target: usize, t: &DistanceTable) -> Result<Vec<CnotGate>> {
    let path = t.shortest_path(control, target)?;
    Ok(expand_along(&path))
}

/// Routes a swap-free decomposition under a placement.
///
/// Operations run rightmost factor first. `RowAdd(i, j)` becomes a CNOT from
/// the vertex holding `j` to the vertex holding `i`. The permutation factor
/// is absorbed into `output_relabel` unless `emit_swaps` is set, in which
/// case it is realised with three routed CNOTs per transposition.
pub fn route_circuit(d: &Decomposition, p: &Placement, t: &DistanceTable, emit_swaps: bool) -> Result<RoutedCircuit> {
    if p.n_logical() != d.n() {
        return Err(Error::InvalidPlacement(format!(
            "placement covers {} qubits, decomposition has {}",
            p.n_logical(),
            d.n()
        )));
    }
    if p.n_physical() != t.n() {
        return Err(Error::InvalidPlacement(format!(
            "placement targets {} vertices, architecture has {}",
            p.n_physical(),
            t.n()
        )));
    }
    let mut gates = Vec::new();
    for op in d.seq.ops().iter().rev() {
        if op.is_swap() {
            return Err(Error::InvalidParams("routing needs a swap-free sequence".into()));
        }
        let (target, source) = op.indices();
        gates.extend(long_cnot(p.get(source), p.get(target), t)?);
    }

    // Logical output i is row σ(i) of the sequence product, found on the
    // wire holding σ(i).
    let mut relabel: Vec<usize> = (0..t.n()).collect();
    for i in 0..d.n() {
        relabel[p.get(i)] = p.get(d.perm.apply(i));
    }
    let mut output_relabel = Permutation::from_image(relabel)?;

    if emit_swaps && !output_relabel.is_identity() {
        // loc[w]: wire currently holding what must end up on w
        let mut loc = output_relabel.image().to_vec();
        for w in 0..t.n() {
            let y = loc[w];
            if y == w {
                continue;
            }
            gates.extend(long_cnot(w, y, t)?);
            gates.extend(long_cnot(y, w, t)?);
            gates.extend(long_cnot(w, y, t)?);
            let x = loc.iter().position(|&l| l == w).expect("loc is a bijection");
            loc[x] = y;
            loc[w] = w;
        }
        output_relabel = Permutation::identity(t.n());
    }

    Ok(RoutedCircuit { n_physical: t.n(), gates, output_relabel, placement: p.clone() })
}

/// Simulates the routed gates and checks them against `a` on the placed
/// wires; unplaced wires must come back untouched and every gate must act
/// on adjacent vertices.
pub fn verify_routed(rc: &RoutedCircuit, a: &BitMatrix, t: &DistanceTable) -> Result<bool> {
    if rc.placement.n_logical() != a.n() {
        return Err(Error::DimensionMismatch { left: rc.placement.n_logical(), right: a.n() });
    }
    if rc.n_physical != t.n() || rc.output_relabel.len() != t.n() {
        return Err(Error::DimensionMismatch { left: rc.n_physical, right: t.n() });
    }
    if rc.gates.iter().any(|g| g.control >= t.n() || g.target >= t.n() || !t.is_adjacent(g.control, g.target)) {
        return Ok(false);
    }
    let m = circuit_matrix(&rc.gates, rc.n_physical)?;
    let occupants = rc.placement.occupants();
    for i in 0..a.n() {
        let row = rc.output_wire(i);
        for (p, occ) in occupants.iter().enumerate() {
            let expect = occ.is_some_and(|j| a.get(i, j));
            if m.get(row, p) != expect {
                return Ok(false);
            }
        }
    }
    for (p, occ) in occupants.iter().enumerate() {
        if occ.is_none() {
            if rc.output_relabel.apply(p) != p {
                return Ok(false);
            }
            if (0..rc.n_physical).any(|q| m.get(p, q) != (p == q)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arch::{all_pairs_distances, builtin_architecture, parse_architecture};
    use crate::gf2::ElementaryOp;
    use crate::placer::{interaction_graph, objective};
    use crate::rewrite::{decompose, OpSequence};

    fn fixture_a() -> BitMatrix {
        BitMatrix::from_rows(&[[1, 1, 0, 1, 1], [0, 0, 1, 1, 0], [1, 0, 1, 0, 1], [1, 1, 0, 1, 0], [1, 1, 1, 1, 0]])
            .unwrap()
    }

    fn t_table() -> DistanceTable {
        all_pairs_distances(&parse_architecture("qubits 5\nedge 1 2\nedge 2 3\nedge 3 4\nedge 3 5").unwrap()).unwrap()
    }

    fn line(n: usize) -> DistanceTable {
        all_pairs_distances(&builtin_architecture(&format!("line-{n}")).unwrap()).unwrap()
    }

    #[test]
    fn expand_distance_one() {
        let t = line(2);
        assert_eq!(expand_long_cnot(&[0, 1], &t).unwrap(), vec![CnotGate::new(0, 1)]);
    }

    #[test]
    fn expand_distance_two() {
        let t = line(3);
        let gates = expand_long_cnot(&[0, 1, 2], &t).unwrap();
        assert_eq!(gates, vec![CnotGate::new(1, 2), CnotGate::new(0, 1), CnotGate::new(1, 2), CnotGate::new(0, 1)]);
        let m = circuit_matrix(&gates, 3).unwrap();
        assert_eq!(m, circuit_matrix(&[CnotGate::new(0, 2)], 3).unwrap());
    }

    #[test]
    fn expand_distance_four_has_twelve_gates() {
        let t = line(5);
        let gates = expand_long_cnot(&[0, 1, 2, 3, 4], &t).unwrap();
        assert_eq!(gates.len(), 12);
        assert_eq!(circuit_depth(&gates, 5), 12);
        assert_eq!(circuit_matrix(&gates, 5).unwrap(), circuit_matrix(&[CnotGate::new(0, 4)], 5).unwrap());
    }

    #[test]
    fn expand_rejects_bad_paths() {
        let t = line(4);
        assert!(matches!(expand_long_cnot(&[0, 2], &t), Err(Error::InvalidPath(_))));
        assert!(matches!(expand_long_cnot(&[0], &t), Err(Error::InvalidPath(_))));
    }

    #[test]
    fn fixture_routes_to_sixteen_gates() {
        let a = fixture_a();
        let t = t_table();
        let d = decompose(&a).unwrap();
        let ig = interaction_graph(&d).unwrap();
        let (p, best) = crate::placer::exhaustive_place(&ig, &t, crate::placer::DEFAULT_EXHAUSTIVE_BOUND).unwrap();
        assert_eq!(best, 16);
        let rc = route_circuit(&d, &p, &t, false).unwrap();
        assert_eq!(rc.gate_count(), 16);
        assert!(verify_routed(&rc, &a, &t).unwrap());
    }

    #[test]
    fn fixture_with_optimal_placement() {
        // hand-written decomposition, product order
        let a = fixture_a();
        let t = t_table();
        let perm = Permutation::from_image(vec![4, 3, 0, 1, 2]).unwrap();
        let seq: OpSequence = [(3, 2), (5, 2), (1, 3), (1, 5), (2, 1), (4, 3), (2, 4)]
            .iter()
            .map(|&(i, j)| ElementaryOp::add(i - 1, j - 1))
            .collect();
        let d = Decomposition { perm, seq };
        let p = Placement::new(vec![1, 2, 4, 3, 0], 5).unwrap();
        let rc = route_circuit(&d, &p, &t, false).unwrap();
        assert_eq!(rc.gate_count(), 16);
        assert_eq!(objective(&p, &interaction_graph(&d).unwrap(), &t), Ok(16));
        assert!(verify_routed(&rc, &a, &t).unwrap());
    }

    #[test]
    fn tampering_is_detected() {
        let a = fixture_a();
        let t = t_table();
        let d = decompose(&a).unwrap();
        let p = Placement::identity(5, 5).unwrap();
        let rc = route_circuit(&d, &p, &t, false).unwrap();
        assert!(verify_routed(&rc, &a, &t).unwrap());

        let mut dropped = rc.clone();
        dropped.gates.remove(dropped.gates.len() / 2);
        assert!(!verify_routed(&dropped, &a, &t).unwrap());

        let mut relabeled = rc.clone();
        relabeled.output_relabel = relabeled.output_relabel.then_matrix(&Permutation::transposition(5, 0, 1));
        assert!(!verify_routed(&relabeled, &a, &t).unwrap());

        let mut nonadjacent = rc.clone();
        nonadjacent.gates.push(CnotGate::new(0, 4));
        nonadjacent.gates.push(CnotGate::new(0, 4));
        assert!(!verify_routed(&nonadjacent, &a, &t).unwrap());
    }

    #[test]
    fn empty_sequence_routes_to_relabel_only() {
        let t = t_table();
        let perm = Permutation::from_image(vec![1, 0, 2, 3, 4]).unwrap();
        let d = Decomposition { perm: perm.clone(), seq: OpSequence::default() };
        let p = Placement::new(vec![4, 3, 2, 1, 0], 5).unwrap();
        let rc = route_circuit(&d, &p, &t, false).unwrap();
        assert_eq!(rc.gate_count(), 0);
        // logical 0's output is logical 1's wire
        assert_eq!(rc.output_wire(0), 3);
        assert!(verify_routed(&rc, &perm.matrix(), &t).unwrap());
    }

    #[test]
    fn adjacent_single_op_costs_one_gate() {
        let t = t_table();
        let d = Decomposition { perm: Permutation::identity(5), seq: OpSequence(vec![ElementaryOp::add(0, 1)]) };
        let rc = route_circuit(&d, &Placement::identity(5, 5).unwrap(), &t, false).unwrap();
        assert_eq!(rc.gates, vec![CnotGate::new(1, 0)]);
    }

    #[test]
    fn emit_swaps_gives_identity_relabel() {
        let a = fixture_a();
        let t = t_table();
        let d = decompose(&a).unwrap();
        let p = Placement::new(vec![1, 2, 4, 3, 0], 5).unwrap();
        let rc = route_circuit(&d, &p, &t, true).unwrap();
        assert!(rc.output_relabel.is_identity());
        assert!(verify_routed(&rc, &a, &t).unwrap());
    }

    #[test]
    fn partial_placement_on_larger_device() {
        let a = fixture_a();
        let g = builtin_architecture("9q-square").unwrap();
        let t = all_pairs_distances(&g).unwrap();
        let d = decompose(&a).unwrap();
        let p = Placement::new(vec![8, 0, 4, 2, 6], 9).unwrap();
        let rc = route_circuit(&d, &p, &t, false).unwrap();
        assert_eq!(rc.gate_count(), objective(&p, &interaction_graph(&d).unwrap(), &t).unwrap());
        assert!(verify_routed(&rc, &a, &t).unwrap());
        let swapped = route_circuit(&d, &p, &t, true).unwrap();
        assert!(verify_routed(&swapped, &a, &t).unwrap());
    }

    #[test]
    fn circuit_text_round_trip() {
        let c = Circuit {
            n: 3,
            gates: vec![CnotGate::new(0, 1), CnotGate::new(2, 1)],
            relabel: Some(Permutation::from_image(vec![1, 0, 2]).unwrap()),
        };
        let text = c.to_string();
        assert_eq!(text, "qubits 3\ncnot 1 2\ncnot 3 2\nrelabel 2 1 3\n");
        assert_eq!(text.parse::<Circuit>().unwrap(), c);
        assert!("qubits 2\ncnot 1 1\n".parse::<Circuit>().is_err());
        assert!("qubits 2\ncnot 1 3\n".parse::<Circuit>().is_err());
        assert!("qubits 2\nrelabel 1 2\ncnot 1 2\n".parse::<Circuit>().is_err());
        assert!("qubits 2\nrelabel 1 2 3\n".parse::<Circuit>().is_err());
    }
}
