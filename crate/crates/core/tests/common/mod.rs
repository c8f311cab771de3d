//! Reference implementations kept separate from the library code they check.

#![allow(dead_code)]

use topocnot::arch::ArchitectureGraph;
use topocnot::gf2::{BitMatrix, CnotGate, ElementaryOp};
use topocnot::router::RoutedCircuit;

pub type Dense = Vec<Vec<u8>>;

pub fn identity(n: usize) -> Dense {
    (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect()
}

pub fn mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(0, |acc, k| acc ^ (a[i][k] & b[k][j]))).collect()).collect()
}

pub fn elementary(op: ElementaryOp, n: usize) -> Dense {
    let mut m = identity(n);
    match op {
        ElementaryOp::RowAdd { target, source } => m[target][source] = 1,
        ElementaryOp::Swap(a, b) => m.swap(a, b),
    }
    m
}

/// Left-to-right product of the factors.
pub fn product(ops: &[ElementaryOp], n: usize) -> Dense {
    ops.iter().fold(identity(n), |acc, &op| mul(&acc, &elementary(op, n)))
}

/// State matrix after running the gates in order on `n` wires.
pub fn simulate(gates: &[CnotGate], n: usize) -> Dense {
    let mut m = identity(n);
    for g in gates {
        let control = m[g.control].clone();
        for (t, c) in m[g.target].iter_mut().zip(control) {
            *t ^= c;
        }
    }
    m
}

pub fn dense(m: &BitMatrix) -> Dense {
    (0..m.n()).map(|i| (0..m.n()).map(|j| u8::from(m.get(i, j))).collect()).collect()
}

/// ASAP layer count.
pub fn depth(gates: &[CnotGate], n: usize) -> usize {
    let mut level = vec![0; n];
    for g in gates {
        let l = level[g.control].max(level[g.target]) + 1;
        level[g.control] = l;
        level[g.target] = l;
    }
    level.into_iter().max().unwrap_or(0)
}

/// Every gate on a coupling, and output wire `out(i)` holds row `i` of `a`
/// over the placed inputs with no contribution from unplaced wires.
pub fn routed_implements(rc: &RoutedCircuit, a: &BitMatrix, arch: &ArchitectureGraph) -> bool {
    let n = rc.n_physical;
    if rc.gates.iter().any(|g| !arch.has_edge(g.control, g.target)) {
        return false;
    }
    let m = simulate(&rc.gates, n);
    let placed: Vec<usize> = (0..a.n()).map(|j| rc.placement.get(j)).collect();
    (0..a.n()).all(|i| {
        let row = &m[rc.output_wire(i)];
        (0..n).all(|c| match placed.iter().position(|&p| p == c) {
            Some(j) => row[c] == u8::from(a.get(i, j)),
            None => row[c] == 0,
        })
    })
}
