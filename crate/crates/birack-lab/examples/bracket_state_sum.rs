//! Evaluate bracket state sums: a Z5 bracket on the trefoil and a
//! Gaussian-integer bracket on a framed Hopf link.

use birack_lab::birack::FiniteBirack;
use birack_lab::bracket::{self, BirackBracket};
use birack_lab::diagram::FramedDiagram;
use birack_lab::homset;

fn main() {
    // Three-element birack with constant action; B = A over Z5.
    let birack = FiniteBirack::from_tables(
        vec![vec![2, 2, 2], vec![3, 3, 3], vec![1, 1, 1]],
        vec![vec![3, 3, 3], vec![1, 1, 1], vec![2, 2, 2]],
    )
    .unwrap();
    let bracket = BirackBracket::from_text(&birack, "Z5\n1 2 1 1 2 1\n3 1 3 3 1 3\n3 1 3 3 1 3\n")
        .unwrap();
    println!("Z5 bracket: delta = {}", bracket.ring().format(bracket.delta()));

    let trefoil = FramedDiagram::parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
    for coloring in homset::enumerate_colorings(&trefoil, &birack) {
        let value = bracket::state_sum(&trefoil, &birack, &bracket, &coloring).unwrap();
        println!("  coloring {:?} -> {}", coloring, bracket.ring().format(&value));
    }
    let multiset = bracket::bracket_multiset(&trefoil, &birack, &bracket).unwrap();
    println!("  invariant polynomial: {}", multiset.polynomial_string());

    // A Gaussian-integer bracket on a framed Hopf link (one positive kink
    // on each component). The multiset separates into 4i and 4 classes.
    let hopf = FramedDiagram::parse_gauss_code("O1+ U2+ O3+ U3+ / U1+ O2+ O4+ U4+").unwrap();
    let swap_birack = FiniteBirack::from_tables(
        vec![vec![2, 2, 1], vec![1, 1, 2], vec![3, 3, 3]],
        vec![vec![1, 1, 2], vec![2, 2, 1], vec![3, 3, 3]],
    )
    .unwrap();
    let gauss_bracket = BirackBracket::from_text(
        &swap_birack,
        "GAUSS\n1 1 -1 -1 -1 1\n-1 -1 -1 1 1 1\ni -i -1 -i i 1\n",
    )
    .unwrap();
    let m = bracket::bracket_multiset(&hopf, &swap_birack, &gauss_bracket).unwrap();
    println!("framed Hopf over Z[i]: {}", m.polynomial_string());
}
