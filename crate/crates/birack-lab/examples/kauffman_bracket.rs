//! The classical Kauffman bracket is the one-element specialization:
//! A = q, B = q^{-1}, so each coloring is trivial and the state sum is the
//! unreduced bracket polynomial.

use birack_lab::birack::FiniteBirack;
use birack_lab::bracket::{self, BirackBracket};
use birack_lab::diagram::FramedDiagram;

fn main() {
    let point = FiniteBirack::from_tables(vec![vec![1]], vec![vec![1]]).unwrap();
    let kauffman = BirackBracket::from_text(&point, "LAURENT q\nq q^-1\n").unwrap();
    let ring = kauffman.ring().clone();
    println!("loop value delta = {}", ring.format(kauffman.delta()));

    for (name, code) in [
        ("unknot with one curl", "O1+ U1+"),
        ("positive trefoil", "O1+ U2+ O3+ U1+ O2+ U3+"),
        ("figure-eight", "O1+ U4- O2- U1+ O3+ U2- O4- U3+"),
    ] {
        let d = FramedDiagram::parse_gauss_code(code).unwrap();
        let coloring = vec![1; d.semiarc_count()];
        let value = bracket::state_sum(&d, &point, &kauffman, &coloring).unwrap();
        println!("<{}> = {}", name, ring.format(&value));
    }
}
