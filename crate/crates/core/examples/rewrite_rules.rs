//! Check the product rules, then shorten a hand-written sequence with them.

use topocnot::gf2::ElementaryOp;
use topocnot::rewrite::{push_swaps_left, rewrite_optimize, OpSequence, Rule};

fn main() -> topocnot::Result<()> {
    for rule in Rule::ALL {
        let lhs: Vec<String> = rule.lhs(0, 1, 2).iter().map(ToString::to_string).collect();
        let rhs: Vec<String> = rule.rhs(0, 1, 2).iter().map(ToString::to_string).collect();
        println!("{rule:?}: [{}] = [{}]  failures on n=5: {}", lhs.join(", "), rhs.join(", "), rule.count_failures(5));
    }

    // E(1+2) E(2+1) E(1+2) is a swap of rows 1 and 2.
    let n = 3;
    let seq = OpSequence::new(vec![
        ElementaryOp::add(0, 1),
        ElementaryOp::add(1, 0),
        ElementaryOp::add(0, 1),
        ElementaryOp::add(2, 0),
        ElementaryOp::swap(0, 2),
        ElementaryOp::add(1, 2),
    ]);
    let pushed = push_swaps_left(&seq, n);
    let short = rewrite_optimize(&seq, n);
    println!("\ninput: {} ops, product\n{}", seq.len(), seq.product(n)?);
    println!("swaps pushed left:\n{pushed}");
    println!("rewritten ({} additions):\n{short}", short.seq.len());
    assert_eq!(short.product()?, seq.product(n)?);
    Ok(())
}
