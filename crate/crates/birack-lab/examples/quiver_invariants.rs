//! Build a bracket-weighted coloring quiver and decategorify it three
//! ways; also emit DOT for rendering.

use birack_lab::birack::FiniteBirack;
use birack_lab::bracket::BirackBracket;
use birack_lab::diagram::FramedDiagram;
use birack_lab::quiver::{self, DegreeMode, PathLength};

fn main() {
    let trefoil = FramedDiagram::parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
    let birack = FiniteBirack::from_tables(
        vec![vec![2, 2, 2], vec![3, 3, 3], vec![1, 1, 1]],
        vec![vec![3, 3, 3], vec![1, 1, 1], vec![2, 2, 2]],
    )
    .unwrap();
    let bracket = BirackBracket::from_text(&birack, "Z5\n1 2 1 1 2 1\n3 1 3 3 1 3\n3 1 3 3 1 3\n")
        .unwrap();

    // One endomorphism: the cycle 1 -> 2 -> 3 -> 1.
    let sigma = vec![2, 3, 1];
    let q = quiver::build_quiver(&trefoil, &birack, &[sigma], Some(&bracket)).unwrap();
    println!("quiver: {} vertices, {} edges", q.vertices().len(), q.edges().len());

    let deg = quiver::degree_polynomial(&q, DegreeMode::In).unwrap();
    let two = quiver::two_variable_polynomial(&q).unwrap();
    let mp = quiver::maximal_path_polynomial(&q, PathLength::Edges, quiver::DEFAULT_MAX_PATHS)
        .unwrap();
    println!("in-degree polynomial:     {}", deg.display("u", "v"));
    println!("two-variable polynomial:  {}", two.display("s", "t"));
    println!("maximal-path polynomial:  {}", mp.display("x", "y"));

    println!("\nDOT:\n{}", quiver::export_dot(&q));
}
