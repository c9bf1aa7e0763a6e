//! Enumerate birack colorings of framed diagrams and watch the counting
//! invariant react to framing changes.

use birack_lab::birack::FiniteBirack;
use birack_lab::diagram::FramedDiagram;
use birack_lab::homset;

fn main() {
    let trefoil = FramedDiagram::parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
    let birack = FiniteBirack::from_tables(
        vec![vec![2, 2, 2], vec![3, 3, 3], vec![1, 1, 1]],
        vec![vec![3, 3, 3], vec![1, 1, 1], vec![2, 2, 2]],
    )
    .unwrap();

    let colorings = homset::enumerate_colorings(&trefoil, &birack);
    println!("trefoil (writhe +3): {} colorings", colorings.len());
    for c in &colorings {
        println!("  semiarc colors {:?}", c);
    }

    // One extra positive kink shifts the framing and kills every coloring:
    // the invariant sees the framing, not just the underlying knot.
    let framed_up = trefoil.add_kinks(0, 1);
    println!(
        "trefoil (writhe +4): {} colorings",
        homset::counting_invariant(&framed_up, &birack)
    );

    // The kink map drives this: its order here is 3, so framings that
    // differ by 3 color identically.
    println!("birack rank: {}", birack.rank());
    let framed_way_up = trefoil.add_kinks(0, 3);
    println!(
        "trefoil (writhe +6): {} colorings",
        homset::counting_invariant(&framed_way_up, &birack)
    );
}
