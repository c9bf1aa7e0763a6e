//! Sweep framings of one knot and print the invariant per framing: the
//! bracket polynomial changes with the writhe, with period equal to the
//! birack rank.

use birack_lab::birack::FiniteBirack;
use birack_lab::bracket::{self, BirackBracket};
use birack_lab::diagram::FramedDiagram;

fn main() {
    let base = FramedDiagram::parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
    let birack = FiniteBirack::from_tables(
        vec![vec![2, 2, 2], vec![3, 3, 3], vec![1, 1, 1]],
        vec![vec![3, 3, 3], vec![1, 1, 1], vec![2, 2, 2]],
    )
    .unwrap();
    let bracket = BirackBracket::from_text(&birack, "Z5\n1 2 1 1 2 1\n3 1 3 3 1 3\n3 1 3 3 1 3\n")
        .unwrap();

    println!("birack rank (kink-map order): {}", birack.rank());
    println!("framing | invariant polynomial");
    for k in -3i64..=3 {
        let d = base.add_kinks(0, k);
        let m = bracket::bracket_multiset(&d, &birack, &bracket).unwrap();
        println!("{:>7} | {}", d.writhe(), m.polynomial_string());
    }
}
