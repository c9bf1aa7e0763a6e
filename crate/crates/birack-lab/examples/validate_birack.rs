//! Build a birack from the (t,s,r) formula and inspect it, then show what
//! a failed validation report looks like.

use birack_lab::birack::{validate_tables, FiniteBirack};

fn main() {
    // x under y = x + 2y, x over y = x, on Z4 (elements relabeled 1..4).
    let z4 = FiniteBirack::alexander(4, 1, 2, 1).expect("parameters satisfy s^2 = s(r - t)");
    println!("Z4 (t,s,r) = (1,2,1) birack:");
    print!("{}", z4.to_text());
    println!("kink map: {:?}", z4.kink_map());
    println!("rank:     {}", z4.rank());
    println!("note:     {}", FiniteBirack::alexander_relabeling_note(4));

    // Perturbing a single table entry breaks sideways invertibility and
    // the report names the axiom with a witness.
    let report = validate_tables(
        &[vec![2, 2, 2], vec![3, 3, 3], vec![2, 1, 1]],
        &[vec![3, 3, 3], vec![1, 1, 1], vec![2, 2, 2]],
    );
    println!("\nperturbed 3-element table -> valid = {}", report.valid);
    for v in &report.violations {
        println!("  {}", v);
    }

    // Bad parameters are rejected with the failed relation.
    match FiniteBirack::alexander(4, 1, 2, 2) {
        Err(e) => println!("\n(t,s,r) = (1,2,2) on Z4 rejected: {}", e),
        Ok(_) => unreachable!(),
    }
}
