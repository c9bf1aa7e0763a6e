//! Search all bracket coefficient matrices over a finite ring, with the
//! axioms pruning the assignment tree.

use birack_lab::birack::FiniteBirack;
use birack_lab::ring::{RElem, RingSpec};
use birack_lab::search::{search_brackets, SearchConfig};

fn main() {
    let birack = FiniteBirack::from_tables(
        vec![vec![2, 2, 2], vec![3, 3, 3], vec![1, 1, 1]],
        vec![vec![3, 3, 3], vec![1, 1, 1], vec![2, 2, 2]],
    )
    .unwrap();

    let all = search_brackets(&birack, &SearchConfig::exhaustive(RingSpec::zn(5))).unwrap();
    println!("brackets over Z5 on the 3-element constant-action birack: {}", all.len());
    println!("first two, as [A|B] blocks:\n");
    for bracket in all.iter().take(2) {
        println!("{}", bracket.to_text());
    }

    // Filters: fix the loop value, or keep only homogeneous brackets
    // (all writhe weights equal).
    let mut cfg = SearchConfig::exhaustive(RingSpec::zn(5));
    cfg.delta_filter = Some(RElem::Zn(3));
    cfg.homogeneous_only = true;
    let filtered = search_brackets(&birack, &cfg).unwrap();
    println!("with delta = 3 and homogeneous weights: {}", filtered.len());
}
