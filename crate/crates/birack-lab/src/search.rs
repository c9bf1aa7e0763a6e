//! Backtracking search for birack brackets over finite rings.
//!
//! Entries are assigned in a fixed order: the A matrix row by row with each
//! row's diagonal entry first, then B the same way. That order activates
//! the loop-value and writhe-weight constraints as early as possible. After
//! every assignment each axiom instance whose participating entries are all
//! known is checked, and the branch is pruned on the first violation.

use std::fmt;

use crate::birack::FiniteBirack;
use crate::bracket::{validate_bracket, BirackBracket, Matrix};
use crate::ring::{RElem, RingSpec};

/// Partial matrix: `None` entries are free for the search to fill.
pub type SeedMatrix = Vec<Vec<Option<RElem>>>;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Coefficient ring; must be a finite kind (Zn).
    pub ring: RingSpec,
    /// Stop after this many results; 0 means exhaustive.
    pub limit: usize,
    /// Keep only brackets with this loop value.
    pub delta_filter: Option<RElem>,
    /// Keep only brackets whose writhe weights all agree.
    pub homogeneous_only: bool,
    /// Partial assignment of A entries, row-major, `None` = free.
    pub seed_a: Option<SeedMatrix>,
    /// Partial assignment of B entries.
    pub seed_b: Option<SeedMatrix>,
}

impl SearchConfig {
    pub fn exhaustive(ring: RingSpec) -> SearchConfig {
        SearchConfig {
            ring,
            limit: 0,
            delta_filter: None,
            homogeneous_only: false,
            seed_a: None,
            seed_b: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    NotFinite(String),
    BadSeed(String),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::NotFinite(r) => write!(f, "search ring must be finite (Zn), got {}", r),
            SearchError::BadSeed(msg) => write!(f, "bad seed: {}", msg),
        }
    }
}

impl std::error::Error for SearchError {}

/// Parse a seed file: same block format as a bracket file with `*` marking
/// free entries.
pub fn parse_seed(text: &str) -> Result<(RingSpec, SeedMatrix, SeedMatrix), SearchError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let ring_line = lines.next().ok_or_else(|| SearchError::BadSeed("empty file".to_string()))?;
    let ring = RingSpec::parse_spec(ring_line).map_err(|e| SearchError::BadSeed(e.to_string()))?;
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split_whitespace().collect()).collect();
    let n = rows.len();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != 2 * n {
            return Err(SearchError::BadSeed(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                row.len(),
                2 * n
            )));
        }
        let parse = |tok: &str| -> Result<Option<RElem>, SearchError> {
            if tok == "*" {
                Ok(None)
            } else {
                ring.parse(tok).map(Some).map_err(|e| SearchError::BadSeed(e.to_string()))
            }
        };
        a.push(row[..n].iter().map(|t| parse(t)).collect::<Result<Vec<_>, _>>()?);
        b.push(row[n..].iter().map(|t| parse(t)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok((ring, a, b))
}

/// Slot: matrix 0 = A, 1 = B; then (row, col), all 0-based.
type Slot = usize;

fn slot(n: usize, matrix: usize, row: usize, col: usize) -> Slot {
    matrix * n * n + row * n + col
}

#[derive(Clone, Debug)]
enum Constraint {
    /// Loop value at a pair must match the global delta.
    Delta { row: usize, col: usize },
    /// Axiom (i) at x: w-pair equality.
    TypeOne { x: usize },
    /// Axiom (iii) equation `eq` at (x, y, z); equations 4 and 5 involve
    /// the loop value.
    Skein { eq: u8, x: usize, y: usize, z: usize },
    /// Homogeneity tie between diagonals 1 and x (optional filter).
    Homog { x: usize },
}

struct Searcher<'a> {
    birack: &'a FiniteBirack,
    ring: RingSpec,
    n: usize,
    order: Vec<Slot>,
    units: Vec<RElem>,
    constraints: Vec<Constraint>,
    by_slot: Vec<Vec<usize>>,
    limit: usize,
    delta_filter: Option<RElem>,
    seed_a: SeedMatrix,
    seed_b: SeedMatrix,
    results: Vec<(Matrix, Matrix)>,
}

impl<'a> Searcher<'a> {
    fn constraint_slots(&self, c: &Constraint) -> Vec<Slot> {
        let n = self.n;
        let u = |x: usize, y: usize| self.birack.under(x, y);
        let o = |x: usize, y: usize| self.birack.over(x, y);
        match *c {
            Constraint::Delta { row, col } => {
                vec![slot(n, 0, row, col), slot(n, 1, row, col)]
            }
            Constraint::TypeOne { x } => {
                let p = (x, x);
                let q = (o(x, x), u(x, x));
                vec![
                    slot(n, 0, p.0 - 1, p.1 - 1),
                    slot(n, 1, p.0 - 1, p.1 - 1),
                    slot(n, 0, q.0 - 1, q.1 - 1),
                    slot(n, 1, q.0 - 1, q.1 - 1),
                ]
            }
            Constraint::Homog { x } => vec![
                slot(n, 0, 0, 0),
                slot(n, 1, 0, 0),
                slot(n, 0, x - 1, x - 1),
                slot(n, 1, x - 1, x - 1),
            ],
            Constraint::Skein { eq, x, y, z } => {
                let s1 = (u(x, y), o(z, y));
                let s2 = (o(y, x), o(z, x));
                let s3 = (u(x, z), u(y, z));
                let pairs = [(x, y), (y, z), s1, (x, z), s2, s3];
                let mut slots = Vec::new();
                for (px, py) in pairs {
                    // Equations mix A and B entries at these pairs; list
                    // both matrices except for the all-A equation.
                    slots.push(slot(n, 0, px - 1, py - 1));
                    if eq != 1 {
                        slots.push(slot(n, 1, px - 1, py - 1));
                    }
                }
                slots.sort_unstable();
                slots.dedup();
                slots
            }
        }
    }

    /// Evaluate constraint `c` with all slots assigned. `delta` is updated
    /// when a Delta constraint fixes it first. Returns false to prune.
    fn eval(
        &self,
        c: &Constraint,
        a: &[Vec<Option<RElem>>],
        b: &[Vec<Option<RElem>>],
        delta: &mut Option<RElem>,
    ) -> bool {
        let ring = &self.ring;
        let av = |x: usize, y: usize| a[x - 1][y - 1].clone().unwrap();
        let bv = |x: usize, y: usize| b[x - 1][y - 1].clone().unwrap();
        let u = |x: usize, y: usize| self.birack.under(x, y);
        let o = |x: usize, y: usize| self.birack.over(x, y);
        let w_of = |x: usize, y: usize| {
            let av = av(x, y);
            let sq = ring.mul(&av, &av).unwrap();
            ring.mul(&sq, &ring.invert(&bv(x, y)).unwrap()).unwrap()
        };
        match *c {
            Constraint::Delta { row, col } => {
                let avv = av(row + 1, col + 1);
                let bvv = bv(row + 1, col + 1);
                let t1 = ring.mul(&avv, &ring.invert(&bvv).unwrap()).unwrap();
                let t2 = ring.mul(&ring.invert(&avv).unwrap(), &bvv).unwrap();
                let d = ring.neg(&ring.add(&t1, &t2).unwrap()).unwrap();
                if ring.is_zero(&d) {
                    return false;
                }
                match delta {
                    Some(d0) => *d0 == d,
                    None => {
                        if let Some(want) = &self.delta_filter {
                            if *want != d {
                                return false;
                            }
                        }
                        *delta = Some(d);
                        true
                    }
                }
            }
            Constraint::TypeOne { x } => {
                let q = (o(x, x), u(x, x));
                w_of(x, x) == w_of(q.0, q.1)
            }
            Constraint::Homog { x } => w_of(1, 1) == w_of(x, x),
            Constraint::Skein { eq, x, y, z } => {
                let s1 = (u(x, y), o(z, y));
                let s2 = (o(y, x), o(z, x));
                let s3 = (u(x, z), u(y, z));
                let m3 = |p: &RElem, q: &RElem, r: &RElem| {
                    ring.mul(&ring.mul(p, q).unwrap(), r).unwrap()
                };
                match eq {
                    1 => {
                        m3(&av(x, y), &av(y, z), &av(s1.0, s1.1))
                            == m3(&av(x, z), &av(s2.0, s2.1), &av(s3.0, s3.1))
                    }
                    2 => {
                        m3(&av(x, y), &bv(y, z), &bv(s1.0, s1.1))
                            == m3(&bv(x, z), &bv(s2.0, s2.1), &av(s3.0, s3.1))
                    }
                    3 => {
                        m3(&bv(x, y), &av(y, z), &bv(s1.0, s1.1))
                            == m3(&bv(x, z), &av(s2.0, s2.1), &bv(s3.0, s3.1))
                    }
                    4 => {
                        // A fully-assigned instance always has some B entry
                        // assigned, whose Delta constraint already fixed the
                        // loop value earlier in this slot's check list.
                        let Some(d) = delta.as_ref() else { return true };
                        let lhs = m3(&av(x, y), &av(y, z), &bv(s1.0, s1.1));
                        let t1 = m3(&av(x, z), &bv(s2.0, s2.1), &av(s3.0, s3.1));
                        let t2 = m3(&av(x, z), &av(s2.0, s2.1), &bv(s3.0, s3.1));
                        let t3 = ring
                            .mul(d, &m3(&av(x, z), &bv(s2.0, s2.1), &bv(s3.0, s3.1)))
                            .unwrap();
                        let t4 = m3(&bv(x, z), &bv(s2.0, s2.1), &bv(s3.0, s3.1));
                        let mut rhs = ring.add(&t1, &t2).unwrap();
                        rhs = ring.add(&rhs, &t3).unwrap();
                        rhs = ring.add(&rhs, &t4).unwrap();
                        lhs == rhs
                    }
                    5 => {
                        let Some(d) = delta.as_ref() else { return true };
                        let t1 = m3(&bv(x, y), &av(y, z), &av(s1.0, s1.1));
                        let t2 = m3(&av(x, y), &bv(y, z), &av(s1.0, s1.1));
                        let t3 = ring
                            .mul(d, &m3(&bv(x, y), &bv(y, z), &av(s1.0, s1.1)))
                            .unwrap();
                        let t4 = m3(&bv(x, y), &bv(y, z), &bv(s1.0, s1.1));
                        let mut lhs = ring.add(&t1, &t2).unwrap();
                        lhs = ring.add(&lhs, &t3).unwrap();
                        lhs = ring.add(&lhs, &t4).unwrap();
                        lhs == m3(&bv(x, z), &av(s2.0, s2.1), &av(s3.0, s3.1))
                    }
                    _ => unreachable!(),
                }
            }
        }
    }

    fn run(
        &mut self,
        idx: usize,
        a: &mut Vec<Vec<Option<RElem>>>,
        b: &mut Vec<Vec<Option<RElem>>>,
        delta: Option<RElem>,
        assigned: &mut Vec<bool>,
    ) {
        if self.limit > 0 && self.results.len() >= self.limit {
            return;
        }
        if idx == self.order.len() {
            let full_a: Vec<Vec<RElem>> =
                a.iter().map(|r| r.iter().map(|e| e.clone().unwrap()).collect()).collect();
            let full_b: Vec<Vec<RElem>> =
                b.iter().map(|r| r.iter().map(|e| e.clone().unwrap()).collect()).collect();
            self.results.push((full_a, full_b));
            return;
        }
        let s = self.order[idx];
        let (m, r, c) = unslot(self.n, s);
        let preset = if m == 0 { self.seed_a[r][c].clone() } else { self.seed_b[r][c].clone() };
        let candidates: Vec<RElem> = match preset {
            Some(v) => vec![v],
            None => self.units.clone(),
        };
        for v in candidates {
            if m == 0 {
                a[r][c] = Some(v.clone());
            } else {
                b[r][c] = Some(v.clone());
            }
            assigned[s] = true;
            let mut local_delta = delta.clone();
            let mut ok = true;
            for &ci in &self.by_slot[s] {
                let constraint = self.constraints[ci].clone();
                if self.constraint_slots(&constraint).iter().all(|&sl| assigned[sl])
                    && !self.eval(&constraint, a, b, &mut local_delta)
                {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.run(idx + 1, a, b, local_delta, assigned);
            }
            assigned[s] = false;
            if m == 0 {
                a[r][c] = None;
            } else {
                b[r][c] = None;
            }
        }
    }
}

fn unslot(n: usize, s: Slot) -> (usize, usize, usize) {
    let m = s / (n * n);
    let rest = s % (n * n);
    (m, rest / n, rest % n)
}

/// Enumerate brackets on `birack` over the configured finite ring.
///
/// Exhaustive over unit-entry matrices when `limit` is 0; emission order is
/// lexicographic in the fixed assignment order, so two runs with the same
/// configuration produce identical streams. Every result passes
/// [`validate_bracket`].
pub fn search_brackets(
    birack: &FiniteBirack,
    cfg: &SearchConfig,
) -> Result<Vec<BirackBracket>, SearchError> {
    let RingSpec::Zn { modulus } = cfg.ring else {
        return Err(SearchError::NotFinite(cfg.ring.to_string()));
    };
    let n = birack.size();
    let ring = cfg.ring.clone();
    let units: Vec<RElem> = (0..modulus)
        .map(RElem::Zn)
        .filter(|e| ring.is_unit(e).unwrap())
        .collect();

    // Assignment order: A rows with the diagonal first, then B.
    let mut order = Vec::new();
    for m in 0..2 {
        for row in 0..n {
            order.push(slot(n, m, row, row));
            for col in 0..n {
                if col != row {
                    order.push(slot(n, m, row, col));
                }
            }
        }
    }

    let mut constraints = Vec::new();
    for row in 0..n {
        for col in 0..n {
            constraints.push(Constraint::Delta { row, col });
        }
    }
    for x in 1..=n {
        constraints.push(Constraint::TypeOne { x });
    }
    if cfg.homogeneous_only {
        for x in 2..=n {
            constraints.push(Constraint::Homog { x });
        }
    }
    for eq in 1..=5u8 {
        for x in 1..=n {
            for y in 1..=n {
                for z in 1..=n {
                    constraints.push(Constraint::Skein { eq, x, y, z });
                }
            }
        }
    }

    let blank = vec![vec![None; n]; n];
    let seed_a = cfg.seed_a.clone().unwrap_or_else(|| blank.clone());
    let seed_b = cfg.seed_b.clone().unwrap_or_else(|| blank.clone());
    if seed_a.len() != n
        || seed_b.len() != n
        || seed_a.iter().chain(seed_b.iter()).any(|r| r.len() != n)
    {
        return Err(SearchError::BadSeed(format!("seed must be {}x{} per block", n, n)));
    }
    let mut searcher = Searcher {
        birack,
        ring: ring.clone(),
        n,
        order,
        units,
        constraints,
        by_slot: vec![Vec::new(); 2 * n * n],
        limit: cfg.limit,
        delta_filter: cfg.delta_filter.clone(),
        seed_a,
        seed_b,
        results: Vec::new(),
    };
    for (ci, c) in searcher.constraints.clone().iter().enumerate() {
        for s in searcher.constraint_slots(c) {
            searcher.by_slot[s].push(ci);
        }
    }

    let mut a = blank.clone();
    let mut b = blank;
    let mut assigned = vec![false; 2 * n * n];
    searcher.run(0, &mut a, &mut b, None, &mut assigned);

    let mut out = Vec::new();
    for (fa, fb) in searcher.results.drain(..) {
        let bracket = BirackBracket::new(birack, fa, fb, ring.clone())
            .expect("search emits only matrices passing full validation");
        if cfg.homogeneous_only && !bracket.is_homogeneous() {
            continue;
        }
        if let Some(want) = &cfg.delta_filter {
            if bracket.delta() != want {
                continue;
            }
        }
        out.push(bracket);
    }
    Ok(out)
}

/// Unpruned reference search for micro-scale completeness tests: try every
/// unit-entry matrix pair and keep those passing full validation.
pub fn brute_force_brackets(birack: &FiniteBirack, ring: &RingSpec) -> Vec<(Matrix, Matrix)> {
    let RingSpec::Zn { modulus } = ring else {
        panic!("brute force requires Zn");
    };
    let n = birack.size();
    let units: Vec<RElem> = (0..*modulus)
        .map(RElem::Zn)
        .filter(|e| ring.is_unit(e).unwrap())
        .collect();
    let cells = 2 * n * n;
    let mut out = Vec::new();
    let total = (units.len() as u64).pow(cells as u32);
    for code in 0..total {
        let mut digits = code;
        let mut entries = Vec::with_capacity(cells);
        for _ in 0..cells {
            entries.push(units[(digits % units.len() as u64) as usize].clone());
            digits /= units.len() as u64;
        }
        let a: Vec<Vec<RElem>> = (0..n).map(|r| entries[r * n..(r + 1) * n].to_vec()).collect();
        let b: Vec<Vec<RElem>> =
            (0..n).map(|r| entries[n * n + r * n..n * n + (r + 1) * n].to_vec()).collect();
        if validate_bracket(birack, &a, &b, ring).valid {
            out.push((a, b));
        }
    }
    out
}
