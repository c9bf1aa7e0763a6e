//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS/FAIL line (run with `cargo test --test acceptance -- --nocapture`
//! to see every line).
//!
//! Criteria 7 and 8 assert reference values whose source tables are
//! internally inconsistent (their coefficient matrix has loop value 0
//! mod 5, which axiom (ii) forbids, their endomorphism list does not
//! preserve their own operation tables, and the claimed coloring counts
//! are unreachable for any orientation of the named diagrams). Those two
//! tests are expected to stay red; their failure messages carry the
//! verified details.

use birack_lab::birack::FiniteBirack;
use birack_lab::bracket::{self, BirackBracket};
use birack_lab::diagram::{FramedDiagram, FramedMove, SmoothingState};
use birack_lab::homset;
use birack_lab::quiver::{self, PathLength};
use birack_lab::ring::{RElem, RingSpec};
use birack_lab::search::{self, SearchConfig};

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{}", env!("CARGO_MANIFEST_DIR"), name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {}", path, e))
}

fn birack(name: &str) -> FiniteBirack {
    FiniteBirack::from_text(&fixture(name)).unwrap()
}

fn diagram(name: &str) -> FramedDiagram {
    let text = fixture(name);
    let t = text.trim();
    if t.starts_with('X') || t.starts_with("PD") {
        FramedDiagram::parse_pd_code(t).unwrap()
    } else {
        FramedDiagram::parse_gauss_code(t).unwrap()
    }
}

fn bracket_file(birack: &FiniteBirack, name: &str) -> BirackBracket {
    BirackBracket::from_text(birack, &fixture(name)).unwrap()
}

fn pass(n: u32, detail: &str) {
    println!("criterion {:>2}: PASS — {}", n, detail);
}

fn fail(n: u32, detail: &str) -> ! {
    println!("criterion {:>2}: FAIL — {}", n, detail);
    panic!("criterion {} failed: {}", n, detail);
}

#[test]
fn criterion_01_alexander_z4_kink_map() {
    let x = match FiniteBirack::alexander(4, 1, 2, 1) {
        Ok(x) => x,
        Err(e) => fail(1, &format!("construction rejected: {}", e)),
    };
    // pi(residue) = 3*residue mod 4, i.e. images [1,4,3,2] after the
    // +1 relabeling.
    if x.kink_map() != [1, 4, 3, 2] {
        fail(1, &format!("kink map {:?} != [1,4,3,2]", x.kink_map()));
    }
    if x.rank() != 2 {
        fail(1, &format!("rank {} != 2", x.rank()));
    }
    pass(1, "Z4 (t,s,r)=(1,2,1) valid, kink map x->3x, rank 2");
}

#[test]
fn criterion_02_trefoil_homset() {
    let d = diagram("trefoil3.gauss");
    let x = birack("cyclic3.brk");
    let cols = homset::enumerate_colorings(&d, &x);
    if cols.len() != 3 {
        fail(2, &format!("counting invariant {} != 3", cols.len()));
    }
    let mut triples: Vec<(usize, usize, usize)> = cols
        .iter()
        .map(|c| {
            (
                c[d.ports(0).under_in],
                c[d.ports(1).under_in],
                c[d.ports(2).under_in],
            )
        })
        .collect();
    triples.sort_unstable();
    let expected = vec![(1, 2, 3), (2, 3, 1), (3, 1, 2)];
    if triples != expected {
        fail(2, &format!("coloring triples {:?} != {:?}", triples, expected));
    }
    pass(2, "trefoil homset = 3 with triples {(2,3,1),(3,1,2),(1,2,3)}");
}

#[test]
fn criterion_03_z5_bracket_state_sum() {
    let d = diagram("trefoil3.gauss");
    let x = birack("cyclic3.brk");
    let bk = bracket_file(&x, "cyclic3_z5.bbr");
    if bk.delta() != &RElem::Zn(3) {
        fail(3, &format!("delta {:?} != 3", bk.delta()));
    }
    for c in homset::enumerate_colorings(&d, &x) {
        let v = bracket::state_sum(&d, &x, &bk, &c).unwrap();
        if v != RElem::Zn(1) {
            fail(3, &format!("state sum {:?} != 1 for coloring {:?}", v, c));
        }
    }
    let m = bracket::bracket_multiset(&d, &x, &bk).unwrap();
    if m.polynomial_string() != "3u" {
        fail(3, &format!("polynomial {:?} != \"3u\"", m.polynomial_string()));
    }
    pass(3, "Z5 bracket valid with delta 3; multiset {1,1,1}; polynomial 3u");
}

#[test]
fn criterion_04_framing_sensitivity() {
    let d = diagram("trefoil4.gauss");
    let x = birack("cyclic3.brk");
    let bk = bracket_file(&x, "cyclic3_z5.bbr");
    if homset::counting_invariant(&d, &x) != 0 {
        fail(4, "writhe-4 trefoil has colorings");
    }
    let m = bracket::bracket_multiset(&d, &x, &bk).unwrap();
    if m.polynomial_string() != "0" {
        fail(4, &format!("polynomial {:?} != \"0\"", m.polynomial_string()));
    }
    pass(4, "writhe-4 trefoil: empty homset, polynomial 0");
}

#[test]
fn criterion_05_gaussian_hopf_invariant() {
    let d = diagram("hopf_framed.gauss");
    let x = birack("swapfix3.brk");
    let bk = bracket_file(&x, "swapfix3_gauss.bbr");
    let cols = homset::enumerate_colorings(&d, &x);
    if cols.len() != 9 {
        fail(5, &format!("homset size {} != 9", cols.len()));
    }
    let m = bracket::bracket_multiset(&d, &x, &bk).unwrap();
    if m.polynomial_string() != "4u^{4i}+5u^4" {
        fail(5, &format!("polynomial {:?} != \"4u^{{4i}}+5u^4\"", m.polynomial_string()));
    }
    pass(5, "framed Hopf: homset 9, polynomial 4u^{4i}+5u^4 (signs frozen in fixture)");
}

#[test]
fn criterion_06_quiver_three_cycle() {
    let d = diagram("trefoil3.gauss");
    let x = birack("cyclic3.brk");
    let bk = bracket_file(&x, "cyclic3_z5.bbr");
    let q = quiver::build_quiver(&d, &x, &[vec![2, 3, 1]], Some(&bk)).unwrap();
    if q.vertices().len() != 3 || q.edges().len() != 3 {
        fail(6, "quiver is not a 3-vertex, 3-edge cycle");
    }
    for v in 0..3 {
        if q.weight(v) != Some(&RElem::Zn(1)) {
            fail(6, &format!("vertex {} weight != 1", v));
        }
    }
    // The single endomorphism must act as one 3-cycle.
    let mut next = [0usize; 3];
    for (s, t, _) in q.edges() {
        next[*s] = *t;
    }
    if next[next[next[0]]] != 0 || next[0] == 0 {
        fail(6, "edges do not form a single directed 3-cycle");
    }
    let deg = quiver::in_degree_polynomial(&q).unwrap().display("u", "v");
    let two = quiver::two_variable_polynomial(&q).unwrap().display("s", "t");
    if deg != "3uv" {
        fail(6, &format!("degree polynomial {:?} != \"3uv\"", deg));
    }
    if two != "3st" {
        fail(6, &format!("two-variable polynomial {:?} != \"3st\"", two));
    }
    pass(6, "weighted 3-cycle with polynomials 3uv and 3st");
}

#[test]
fn criterion_07_four_element_birack_tables() {
    let x = birack("parity4.brk");
    let mut problems: Vec<String> = Vec::new();

    let expected_endos =
        vec![vec![1, 2, 3, 4], vec![1, 3, 2, 4], vec![4, 2, 3, 1], vec![4, 3, 2, 1]];
    let endos = x.endomorphisms();
    if endos == expected_endos {
        println!("criterion  7: endomorphism list reproduced");
    } else {
        problems.push(format!(
            "endomorphism set is {:?}, reference lists {:?} (e.g. f=[4,2,3,1] gives f(under(1,1))=f(2)=2 but under(f(1),f(1))=under(4,4)=1, so it does not preserve these tables)",
            endos, expected_endos
        ));
    }

    let (ring, a, b) = bracket::parse_block_matrix(&fixture("parity4_degenerate.bbr")).unwrap();
    let report = bracket::validate_bracket(&x, &a, &b, &ring);
    if report.valid {
        let bk = BirackBracket::new(&x, a, b, ring).unwrap();
        let endos = x.endomorphisms();
        for (name, file, want) in [
            ("L2a1", "l2a1.pd", "16u^4v^4"),
            ("L4a1", "l4a1.pd", "16u^4v^4+32u^3v^4+16uv^4"),
        ] {
            let d = diagram(file);
            let q = quiver::build_quiver(&d, &x, &endos, Some(&bk)).unwrap();
            let got = quiver::two_variable_polynomial(&q).unwrap().display("u", "v");
            if got != want {
                problems.push(format!("{}: {} != {}", name, got, want));
            }
        }
    } else {
        problems.push(format!(
            "reference coefficient matrix does not satisfy the bracket axioms: {} (B = 2A entry-wise forces loop value -(2^-1 + 2) = 0 mod 5)",
            report.violations[0]
        ));
    }

    if problems.is_empty() {
        pass(7, "endomorphism set and table-link polynomials reproduced");
    }
    fail(7, &problems.join("; "));
}

#[test]
fn criterion_08_framing_table() {
    let x = birack("parity4.brk");
    let (ring, a, b) = bracket::parse_block_matrix(&fixture("parity4_degenerate.bbr")).unwrap();
    let report = bracket::validate_bracket(&x, &a, &b, &ring);
    if !report.valid {
        fail(
            8,
            &format!(
                "the framing table needs the same coefficient matrix as criterion 7, which cannot validate: {}; additionally the table's odd-framing coloring counts (2) are unreachable: every color transport of this birack lies in a fixed-point-free Klein action, so per-component counts are 0 or 4 (our framings -4..4 give counts [4,0,4,0,4,0,4,0,4])",
                report.violations[0]
            ),
        );
    }
    let bk = BirackBracket::new(&x, a, b, ring).unwrap();
    let fig8 = diagram("fig8.gauss");
    let endos = x.endomorphisms();
    let expected: &[(i64, &str)] = &[
        (-4, "8u^3v^4+8u^2v^4"),
        (-3, "8u^2v^4"),
        (-2, "8u^2v^4+8uv^4"),
        (-1, "8u^2v^4"),
        (0, "16u^2v^4"),
        (1, "8u^2v^4"),
        (2, "8u^4v^4+8u^2v^4"),
        (3, "8u^2v^4"),
        (4, "8u^3v^4+8u^2v^4"),
    ];
    for (k, want) in expected {
        let d = fig8.add_kinks(0, *k);
        let q = quiver::build_quiver(&d, &x, &endos, Some(&bk)).unwrap();
        let got = quiver::two_variable_polynomial(&q).unwrap().display("u", "v");
        if got != *want {
            fail(8, &format!("framing {}: {} != {}", k, got, want));
        }
    }
    pass(8, "figure-eight framing table reproduced");
}

#[test]
fn criterion_09_bracket_search() {
    let x = birack("cyclic3.brk");
    let found = search::search_brackets(&x, &SearchConfig::exhaustive(RingSpec::zn(5))).unwrap();
    let target = [[1u64, 2, 1], [3, 1, 3], [3, 1, 3]];
    let hit = found.iter().any(|bk| {
        (1..=3).all(|r: usize| {
            (1..=3).all(|c: usize| {
                bk.a(r, c) == &RElem::Zn(target[r - 1][c - 1])
                    && bk.b(r, c) == &RElem::Zn(target[r - 1][c - 1])
            })
        })
    });
    if !hit {
        fail(9, &format!("exhaustive Z5 search ({} results) does not emit the reference matrix", found.len()));
    }
    println!("criterion  9: exhaustive search emits the reference matrix ({} brackets total)", found.len());

    let mut problems = Vec::new();
    // Seeded validation of the two fully specified matrices.
    let sec3 = birack("mixed3.brk");
    let (ring3, a3, b3) = bracket::parse_block_matrix(&fixture("mixed3_z5.bbr")).unwrap();
    let seed = |m: &Vec<Vec<RElem>>| -> Vec<Vec<Option<RElem>>> {
        m.iter().map(|r| r.iter().cloned().map(Some).collect()).collect()
    };
    let cfg = SearchConfig {
        ring: ring3,
        limit: 1,
        delta_filter: None,
        homogeneous_only: false,
        seed_a: Some(seed(&a3)),
        seed_b: Some(seed(&b3)),
    };
    match search::search_brackets(&sec3, &cfg) {
        Ok(res) if res.len() == 1 => {
            println!("criterion  9: seeded validation accepts the 3x3 Z5 matrix");
        }
        Ok(_) | Err(_) => problems.push("seeded validation rejects the 3x3 Z5 matrix".to_string()),
    }

    let e6 = birack("parity4.brk");
    let (ring6, a6, b6) = bracket::parse_block_matrix(&fixture("parity4_degenerate.bbr")).unwrap();
    let cfg6 = SearchConfig {
        ring: ring6,
        limit: 1,
        delta_filter: None,
        homogeneous_only: false,
        seed_a: Some(seed(&a6)),
        seed_b: Some(seed(&b6)),
    };
    match search::search_brackets(&e6, &cfg6) {
        Ok(res) if res.len() == 1 => {
            println!("criterion  9: seeded validation accepts the 4x4 Z5 matrix");
        }
        _ => problems.push(
            "seeded validation rejects the 4x4 reference matrix (its loop value is 0 mod 5, so no search over axiom-satisfying matrices can emit it)"
                .to_string(),
        ),
    }
    if problems.is_empty() {
        pass(9, "search emits and validates all reference matrices");
    }
    fail(9, &problems.join("; "));
}

// ---------------------------------------------------------------------------
// Criterion 10: property suites
// ---------------------------------------------------------------------------

fn perturbed(d: &FramedDiagram, seed: u64) -> FramedDiagram {
    let mut current = d.clone();
    for step in 0..=(seed % 2) {
        let mv = match (seed + step) % 3 {
            0 => FramedMove::FramedR1Pair,
            1 => FramedMove::R2,
            _ => FramedMove::Detour,
        };
        current = current.reidemeister_perturb(mv, seed.wrapping_mul(0x9E37).wrapping_add(step));
    }
    current
}

#[test]
fn criterion_10a_multiset_move_invariance() {
    let setups: Vec<(&str, FiniteBirack, BirackBracket)> = vec![
        ("Z5", birack("cyclic3.brk"), {
            let x = birack("cyclic3.brk");
            bracket_file(&x, "cyclic3_z5.bbr")
        }),
        ("Gaussian", birack("swapfix3.brk"), {
            let x = birack("swapfix3.brk");
            bracket_file(&x, "swapfix3_gauss.bbr")
        }),
        ("Laurent", birack("trivial1.brk"), {
            let x = birack("trivial1.brk");
            bracket_file(&x, "kauffman.bbr")
        }),
    ];
    for file in ["trefoil3.gauss", "hopf_framed.gauss", "fig8.gauss"] {
        let d = diagram(file);
        for (label, x, bk) in &setups {
            let base = bracket::bracket_multiset(&d, x, bk).unwrap();
            for seed in 0..200u64 {
                let p = perturbed(&d, seed);
                let m = bracket::bracket_multiset(&p, x, bk).unwrap();
                if m != base {
                    fail(
                        10,
                        &format!(
                            "multiset changed under framed moves: {} over {} seed {}",
                            file, label, seed
                        ),
                    );
                }
            }
        }
    }
    pass(10, "(a) multiset invariant under 200 framed-move perturbations per diagram");
}

#[test]
fn criterion_10b_backtracker_equals_brute_force() {
    let codes = [
        "O1+ U1+",
        "O1- U1-",
        "O1+ U1+ O2- U2-",
        "O1+ O2+ / U1+ U2+",
        "O1+ O2+ / U1+ U2+ / 0",
        "O1+ U2- O2- U1+",
        "O1+ U2+ O3+ U1+ O2+ U3+",
    ];
    let biracks = [birack("cyclic3.brk"), birack("swapfix3.brk"), birack("tau3.brk")];
    for code in codes {
        let d = FramedDiagram::parse_gauss_code(code).unwrap();
        assert!(d.semiarc_count() <= 8, "oracle bound");
        for x in &biracks {
            let fast = homset::enumerate_colorings(&d, x);
            let slow = homset::brute_force_colorings(&d, x);
            if fast != slow {
                fail(10, &format!("backtracker != brute force on {:?}", code));
            }
        }
    }
    pass(10, "(b) backtracking homset matches the brute-force oracle");
}

/// Independent Kauffman-style evaluator: walks smoothed diagrams as a
/// degree-2 adjacency graph (no union-find) and multiplies coefficients
/// directly.
fn oracle_kauffman(d: &FramedDiagram, ring: &RingSpec) -> RElem {
    let q = ring.monomial(birack_lab::ring::GaussInt::ONE, 1).unwrap();
    let qinv = ring.monomial(birack_lab::ring::GaussInt::ONE, -1).unwrap();
    let delta = ring
        .sub(&ring.zero(), &ring.add(&ring.pow(&q, 2).unwrap(), &ring.pow(&qinv, 2).unwrap()).unwrap())
        .unwrap();
    let c = d.crossing_count();
    let mut total = ring.zero();
    for bits in 0..(1u64 << c) {
        // Coefficient: q at oriented/positive and disoriented/negative,
        // q^-1 otherwise.
        let mut coeff = ring.one();
        for id in 0..c {
            let oriented = bits >> id & 1 == 0;
            let positive = d.sign(id) > 0;
            let f = if oriented == positive { &q } else { &qinv };
            coeff = ring.mul(&coeff, f).unwrap();
        }
        // Loop count by walking an explicit adjacency structure.
        let loops = oracle_loops(d, bits);
        let term = ring.mul(&coeff, &ring.pow(&delta, loops as i64).unwrap()).unwrap();
        total = ring.add(&total, &term).unwrap();
    }
    total
}

fn oracle_loops(d: &FramedDiagram, bits: u64) -> usize {
    // Endpoint graph: node 2s = tail of semiarc s, 2s+1 = head. Each
    // semiarc contributes the edge tail-head; smoothings pair ports.
    let n = d.semiarc_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    for s in 0..n {
        adj[2 * s].push(2 * s + 1);
        adj[2 * s + 1].push(2 * s);
    }
    for id in 0..d.crossing_count() {
        let p = d.ports(id);
        // A strand leaves its "in" semiarc at the head end and enters the
        // "out" semiarc at its tail end.
        let (ui, uo, oi, oo) = (
            2 * p.under_in + 1,
            2 * p.under_out,
            2 * p.over_in + 1,
            2 * p.over_out,
        );
        let pairs = if bits >> id & 1 == 0 {
            [(ui, oo), (oi, uo)]
        } else {
            [(ui, oi), (uo, oo)]
        };
        for (x, y) in pairs {
            adj[x].push(y);
            adj[y].push(x);
        }
    }
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..2 * n {
        if seen[start] || adj[start].len() < 2 {
            continue;
        }
        loops += 1;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            for &w in &adj[v] {
                stack.push(w);
            }
        }
    }
    // Free loops have a single tail-head edge and still close up.
    loops += d.free_loop_semiarcs().len();
    loops
}

#[test]
fn criterion_10c_kauffman_oracle_equivalence() {
    let x = birack("trivial1.brk");
    let bk = bracket_file(&x, "kauffman.bbr");
    let ring = bk.ring().clone();
    let diagrams = [
        "0",
        "O1+ U1+",
        "O1- U1-",
        "O1+ U1+ O2- U2-",
        "O1+ O2+ / U1+ U2+",
        "O1- O2- / U1- U2-",
        "O1+ U2+ O3+ U1+ O2+ U3+",
        "O1- U2- O3- U1- O2- U3-",
        "O1+ U4- O2- U1+ O3+ U2- O4- U3+",
        // Five crossings: trefoil with an inserted opposite-sign pair.
        "O1+ U2+ O3+ O4+ U5- U1+ O2+ U4+ O5- U3+",
    ];
    for code in diagrams {
        let d = FramedDiagram::parse_gauss_code(code).unwrap();
        assert!(d.crossing_count() <= 5);
        let coloring = vec![1usize; d.semiarc_count()];
        let got = bracket::state_sum(&d, &x, &bk, &coloring).unwrap();
        let want = oracle_kauffman(&d, &ring);
        if got != want {
            fail(
                10,
                &format!(
                    "Kauffman mismatch on {:?}: {} != {}",
                    code,
                    ring.format(&got),
                    ring.format(&want)
                ),
            );
        }
    }
    // Frozen hand values.
    let trefoil = FramedDiagram::parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
    let v = bracket::state_sum(&trefoil, &x, &bk, &vec![1; 6]).unwrap();
    if ring.format(&v) != "q^7+q^3+q^-1-q^-9" {
        fail(10, &format!("trefoil Kauffman value {} unexpected", ring.format(&v)));
    }
    let fig8 = diagram("fig8.gauss");
    let v8 = bracket::state_sum(&fig8, &x, &bk, &vec![1; 8]).unwrap();
    if ring.format(&v8) != "-q^10-q^-10" {
        fail(10, &format!("figure-eight Kauffman value {} unexpected", ring.format(&v8)));
    }
    pass(10, "(c) state sum matches the independent Kauffman evaluator on all small diagrams");
}

#[test]
fn criterion_10d_search_completeness_micro() {
    let two_swap = FiniteBirack::from_tables(
        vec![vec![2, 2], vec![1, 1]],
        vec![vec![2, 2], vec![1, 1]],
    )
    .unwrap();
    let trivial2 = FiniteBirack::from_tables(
        vec![vec![1, 1], vec![2, 2]],
        vec![vec![1, 1], vec![2, 2]],
    )
    .unwrap();
    let trivial1 = birack("trivial1.brk");
    let ring = RingSpec::zn(5);
    for (label, x) in [("n=1 trivial", &trivial1), ("n=2 trivial", &trivial2), ("n=2 swap", &two_swap)] {
        let found = search::search_brackets(x, &SearchConfig::exhaustive(ring.clone())).unwrap();
        let brute = search::brute_force_brackets(x, &ring);
        let n = x.size();
        let mut found_pairs: Vec<_> = found
            .iter()
            .map(|bk| {
                let a: Vec<Vec<RElem>> =
                    (1..=n).map(|r| (1..=n).map(|c| bk.a(r, c).clone()).collect()).collect();
                let b: Vec<Vec<RElem>> =
                    (1..=n).map(|r| (1..=n).map(|c| bk.b(r, c).clone()).collect()).collect();
                (a, b)
            })
            .collect();
        found_pairs.sort();
        let mut brute_sorted = brute;
        brute_sorted.sort();
        if found_pairs != brute_sorted {
            fail(10, &format!("pruned search differs from brute force on {}", label));
        }
    }
    pass(10, "(d) pruned bracket search complete vs unpruned brute force (n <= 2, Z5)");
}

#[test]
fn criterion_10e_quiver_structure() {
    let setups: Vec<(FramedDiagram, FiniteBirack, BirackBracket)> = vec![
        (diagram("trefoil3.gauss"), birack("cyclic3.brk"), {
            let x = birack("cyclic3.brk");
            bracket_file(&x, "cyclic3_z5.bbr")
        }),
        (diagram("hopf_framed.gauss"), birack("swapfix3.brk"), {
            let x = birack("swapfix3.brk");
            bracket_file(&x, "swapfix3_gauss.bbr")
        }),
    ];
    for (d, x, bk) in &setups {
        let all = x.endomorphisms();
        let subsets: Vec<Vec<Vec<usize>>> =
            vec![all.clone(), vec![all[0].clone()], all[..2.min(all.len())].to_vec()];
        for endos in subsets {
            let q = quiver::build_quiver(d, x, &endos, Some(bk)).unwrap();
            for v in 0..q.vertices().len() {
                if q.out_degree(v) != endos.len() {
                    fail(10, "out-degree != |S|");
                }
            }
            let paths = quiver::maximal_paths(&q, quiver::DEFAULT_MAX_PATHS).unwrap();
            for p in &paths {
                let tail = *p.last().unwrap();
                for (s, t, _) in q.edges() {
                    if *s == tail && !p.contains(t) {
                        fail(10, "maximal path tail has a successor outside the path");
                    }
                }
            }
            // Exercise the polynomial extraction as well.
            let _ = quiver::maximal_path_polynomial(&q, PathLength::Edges, quiver::DEFAULT_MAX_PATHS)
                .unwrap();
        }
    }
    pass(10, "(e) out-degree = |S| and maximal-path tail closure on every built quiver");
}

#[test]
fn criterion_11_laurent_bracket_validation() {
    let x = birack("tau3.brk");
    // The corrected matrix (one sign restored for a constant loop value)
    // must pass the axioms; the two stated maps must be endomorphisms.
    let bk = match BirackBracket::from_text(&x, &fixture("tau3_laurent.lbr")) {
        Ok(bk) => bk,
        Err(e) => fail(11, &format!("Laurent matrix rejected: {}", e)),
    };
    let ring = bk.ring().clone();
    if ring.format(bk.delta()) != "q+q^-1" {
        fail(11, &format!("delta {} != q+q^-1", ring.format(bk.delta())));
    }
    for f in [vec![3, 3, 3], vec![2, 1, 3]] {
        if !x.check_homomorphism(&f).unwrap() {
            fail(11, &format!("{:?} is not an endomorphism", f));
        }
    }
    // The one-sign story is pinned: in the uncorrected matrix the loop
    // value flips at pair (1,3) and validation rejects.
    let (ring_u, a_u, b_u) =
        bracket::parse_block_matrix(&fixture("tau3_laurent_uncorrected.lbr")).unwrap();
    let uncorrected = bracket::validate_bracket(&x, &a_u, &b_u, &ring_u);
    if uncorrected.valid {
        fail(11, "unexpected: the uncorrected matrix validates");
    }
    pass(
        11,
        "Laurent bracket (sign-corrected at one entry) passes all axioms with delta q+q^-1; both maps are endomorphisms; path-polynomial half stays disabled (source diagrams unavailable)",
    );
}

#[test]
fn crossing_number_limits_are_enforced() {
    // Not a numbered criterion, but the acceptance surface promises the
    // resource guard. Exercised here so the suite pins it.
    let d = diagram("trefoil3.gauss");
    let x = birack("cyclic3.brk");
    let bk = bracket_file(&x, "cyclic3_z5.bbr");
    let cols = homset::enumerate_colorings(&d, &x);
    let err = bracket::state_sum_with_limit(&d, &x, &bk, &cols[0], 2).unwrap_err();
    assert!(matches!(err, bracket::BracketError::Resource { .. }));
    let s = SmoothingState::from_bits(2, 0);
    assert!(d.state_loop_count(&s).is_err());
}
