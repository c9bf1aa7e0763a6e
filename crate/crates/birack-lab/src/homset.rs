//! Enumeration of birack colorings of a framed diagram.
//!
//! A coloring assigns a birack element to every semiarc so that each
//! crossing relation holds. At a positive crossing the under-in color `a`
//! and over-out color `b` determine the other two ends:
//!
//! ```text
//!   under-out = a under b        over-in = b over a
//! ```
//!
//! and a negative crossing is the inverse system (swap ins and outs on
//! both strands). Axiom (ii) makes every crossing relation solvable from
//! any adjacent pair of known ends, so enumeration is backtracking over
//! seed colors with deterministic propagation in between.

use crate::birack::FiniteBirack;
use crate::diagram::{CrossingPorts, FramedDiagram};

/// A coloring: semiarc index to birack element in `1..=n`.
pub type Coloring = Vec<usize>;

/// True iff the assignment satisfies every crossing relation.
pub fn satisfies(diagram: &FramedDiagram, birack: &FiniteBirack, coloring: &[usize]) -> bool {
    if coloring.len() != diagram.semiarc_count() {
        return false;
    }
    (0..diagram.crossing_count()).all(|id| {
        let p = diagram.ports(id);
        let (ui, uo, oi, oo) = (
            coloring[p.under_in],
            coloring[p.under_out],
            coloring[p.over_in],
            coloring[p.over_out],
        );
        if diagram.sign(id) > 0 {
            uo == birack.under(ui, oo) && oi == birack.over(oo, ui)
        } else {
            ui == birack.under(uo, oi) && oo == birack.over(oi, uo)
        }
    })
}

/// All colorings, each reported once, sorted lexicographically.
pub fn enumerate_colorings(diagram: &FramedDiagram, birack: &FiniteBirack) -> Vec<Coloring> {
    let colors: Vec<Option<usize>> = vec![None; diagram.semiarc_count()];
    let mut out = Vec::new();
    search(diagram, birack, &colors, &mut out);
    out.sort_unstable();
    out
}

/// Homset cardinality.
pub fn counting_invariant(diagram: &FramedDiagram, birack: &FiniteBirack) -> usize {
    enumerate_colorings(diagram, birack).len()
}

/// Post-compose every color with an endomorphism image list.
pub fn apply_endo(coloring: &[usize], endo: &[usize]) -> Coloring {
    coloring.iter().map(|&c| endo[c - 1]).collect()
}

fn search(
    diagram: &FramedDiagram,
    birack: &FiniteBirack,
    colors: &[Option<usize>],
    out: &mut Vec<Coloring>,
) {
    let mut snapshot = colors.to_vec();
    if !propagate(diagram, birack, &mut snapshot) {
        return;
    }
    match snapshot.iter().position(|c| c.is_none()) {
        None => {
            let full: Vec<usize> = snapshot.iter().map(|c| c.unwrap()).collect();
            debug_assert!(satisfies(diagram, birack, &full));
            out.push(full);
        }
        Some(free) => {
            for v in 1..=birack.size() {
                let mut branch = snapshot.clone();
                branch[free] = Some(v);
                search(diagram, birack, &branch, out);
            }
        }
    }
}

/// Deterministic closure; false on conflict.
fn propagate(
    diagram: &FramedDiagram,
    birack: &FiniteBirack,
    colors: &mut [Option<usize>],
) -> bool {
    loop {
        let mut progress = false;
        for id in 0..diagram.crossing_count() {
            let p = diagram.ports(id);
            match fill_crossing(diagram.sign(id), p, birack, colors) {
                Fill::Conflict => return false,
                Fill::Progress => progress = true,
                Fill::None => {}
            }
        }
        if !progress {
            return true;
        }
    }
}

enum Fill {
    None,
    Progress,
    Conflict,
}

fn assign(colors: &mut [Option<usize>], semiarc: usize, value: usize, progress: &mut bool) -> bool {
    match colors[semiarc] {
        None => {
            colors[semiarc] = Some(value);
            *progress = true;
            true
        }
        Some(v) => v == value,
    }
}

fn fill_crossing(
    sign: i8,
    p: CrossingPorts,
    birack: &FiniteBirack,
    colors: &mut [Option<usize>],
) -> Fill {
    let ui = colors[p.under_in];
    let uo = colors[p.under_out];
    let oi = colors[p.over_in];
    let oo = colors[p.over_out];
    let mut progress = false;
    // Determine the pair (x, y) playing the roles (under-side, over-side)
    // of the forward relation, then write all four ends back.
    let solved = if sign > 0 {
        match (ui, oo, oi, uo) {
            (Some(x), Some(y), _, _) => Some((x, y)),
            (Some(x), None, Some(b), _) => Some((x, birack.over_col_inv(x, b))),
            (None, Some(y), _, Some(u)) => Some((birack.under_col_inv(y, u), y)),
            (None, None, Some(b), Some(u)) => Some(birack.pair_inv(u, b)),
            _ => None,
        }
    } else {
        // Negative: relations run from (under-out, over-in).
        match (uo, oi, oo, ui) {
            (Some(x), Some(y), _, _) => Some((x, y)),
            (Some(x), None, Some(b), _) => Some((x, birack.over_col_inv(x, b))),
            (None, Some(y), _, Some(u)) => Some((birack.under_col_inv(y, u), y)),
            (None, None, Some(b), Some(u)) => Some(birack.pair_inv(u, b)),
            _ => None,
        }
    };
    let Some((x, y)) = solved else { return Fill::None };
    let u = birack.under(x, y);
    let o = birack.over(y, x);
    let ok = if sign > 0 {
        assign(colors, p.under_in, x, &mut progress)
            && assign(colors, p.over_out, y, &mut progress)
            && assign(colors, p.under_out, u, &mut progress)
            && assign(colors, p.over_in, o, &mut progress)
    } else {
        assign(colors, p.under_out, x, &mut progress)
            && assign(colors, p.over_in, y, &mut progress)
            && assign(colors, p.under_in, u, &mut progress)
            && assign(colors, p.over_out, o, &mut progress)
    };
    if !ok {
        Fill::Conflict
    } else if progress {
        Fill::Progress
    } else {
        Fill::None
    }
}

/// Exhaustive oracle: filter all `n^semiarcs` assignments. Test-sized
/// diagrams only.
pub fn brute_force_colorings(diagram: &FramedDiagram, birack: &FiniteBirack) -> Vec<Coloring> {
    let n = birack.size();
    let m = diagram.semiarc_count();
    let mut out = Vec::new();
    let total = (n as u64).checked_pow(m as u32).expect("oracle domain too large");
    for code in 0..total {
        let mut c = code;
        let assignment: Vec<usize> = (0..m)
            .map(|_| {
                let v = (c % n as u64) as usize + 1;
                c /= n as u64;
                v
            })
            .collect();
        if satisfies(diagram, birack, &assignment) {
            out.push(assignment);
        }
    }
    out.sort_unstable();
    out
}
