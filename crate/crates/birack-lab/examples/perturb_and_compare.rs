//! Apply random framed moves to a diagram and verify by recomputation
//! that the bracket invariant does not budge.

use birack_lab::birack::FiniteBirack;
use birack_lab::bracket::{self, BirackBracket};
use birack_lab::diagram::{FramedDiagram, FramedMove};

fn main() {
    let base = FramedDiagram::parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
    let birack = FiniteBirack::from_tables(
        vec![vec![2, 2, 2], vec![3, 3, 3], vec![1, 1, 1]],
        vec![vec![3, 3, 3], vec![1, 1, 1], vec![2, 2, 2]],
    )
    .unwrap();
    let bracket = BirackBracket::from_text(&birack, "Z5\n1 2 1 1 2 1\n3 1 3 3 1 3\n3 1 3 3 1 3\n")
        .unwrap();

    let reference = bracket::bracket_multiset(&base, &birack, &bracket).unwrap();
    println!("reference invariant: {}", reference.polynomial_string());

    for (mv, label) in [
        (FramedMove::FramedR1Pair, "framed R1 pair"),
        (FramedMove::R2, "R2 push"),
        (FramedMove::Detour, "detour/relabel"),
    ] {
        for seed in 0..3u64 {
            let moved = base.reidemeister_perturb(mv, seed);
            let m = bracket::bracket_multiset(&moved, &birack, &bracket).unwrap();
            assert_eq!(m, reference, "framed move changed the invariant");
            println!(
                "{:<16} seed {}: {} crossings, invariant {}",
                label,
                seed,
                moved.crossing_count(),
                m.polynomial_string()
            );
        }
    }
    println!("all perturbed diagrams agree with the reference");
}
