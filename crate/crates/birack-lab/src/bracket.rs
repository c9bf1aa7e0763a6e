//! Birack brackets: coefficient matrices for the skein state sum, their
//! axioms, and the resulting multiset/polynomial invariant.
//!
//! A bracket over a birack of size n is a pair of n x n matrices A, B of
//! ring units. The loop value `delta = -A_{xy} B_{xy}^{-1} - A_{xy}^{-1}
//! B_{xy}` must be one and the same nonzero ring element for every pair;
//! the state sum is otherwise ill-defined. Each crossing of a colored
//! diagram contributes A or B (inverted at negative crossings) indexed by
//! the colors at which its skein relation evaluates, and each state
//! contributes `delta^loops`.

use std::collections::HashMap;
use std::fmt;

use crate::birack::FiniteBirack;
use crate::diagram::{FramedDiagram, SmoothingState};
use crate::homset::{self, Coloring};
use crate::ring::{RElem, RingError, RingSpec};

/// Default cap on `2^c` state enumeration.
pub const DEFAULT_MAX_CROSSINGS: usize = 24;

/// An n x n coefficient matrix, row-major for elements `1..=n`.
pub type Matrix = Vec<Vec<RElem>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketViolation {
    /// Matrix dimensions do not match the birack.
    Shape(String),
    /// Entry is not a unit of the ring.
    NonUnit { matrix: &'static str, x: usize, y: usize },
    /// Loop value differs between two index pairs.
    DeltaInconsistent { first: (usize, usize), second: (usize, usize) },
    /// Loop value is zero.
    DeltaZero { at: (usize, usize) },
    /// Writhe-weight compatibility (axiom i) fails at x.
    TypeOne { x: usize },
    /// One of the five skein-coherence equations (axiom iii) fails.
    Skein { eq: u8, x: usize, y: usize, z: usize },
}

impl fmt::Display for BracketViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketViolation::Shape(msg) => write!(f, "shape: {}", msg),
            BracketViolation::NonUnit { matrix, x, y } => {
                write!(f, "entry {}[{},{}] is not a unit", matrix, x, y)
            }
            BracketViolation::DeltaInconsistent { first, second } => write!(
                f,
                "loop value differs between pairs ({},{}) and ({},{})",
                first.0, first.1, second.0, second.1
            ),
            BracketViolation::DeltaZero { at } => {
                write!(f, "loop value vanishes at pair ({},{})", at.0, at.1)
            }
            BracketViolation::TypeOne { x } => write!(f, "axiom (i) fails at x={}", x),
            BracketViolation::Skein { eq, x, y, z } => {
                write!(f, "axiom (iii) equation {} fails at (x,y,z)=({},{},{})", eq, x, y, z)
            }
        }
    }
}

/// Everything validation finds out about a candidate bracket.
#[derive(Clone, Debug)]
pub struct BracketReport {
    pub valid: bool,
    pub delta: Option<RElem>,
    pub w: Vec<RElem>,
    pub homogeneous: bool,
    pub violations: Vec<BracketViolation>,
}

#[derive(Clone, Debug)]
pub enum BracketError {
    Invalid(BracketReport),
    Ring(RingError),
    /// Coloring fails a crossing relation.
    BadColoring,
    /// Too many crossings for state enumeration.
    Resource { crossings: usize, limit: usize },
    Parse(String),
}

impl fmt::Display for BracketError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketError::Invalid(report) => {
                write!(f, "invalid bracket:")?;
                for v in &report.violations {
                    write!(f, " [{}]", v)?;
                }
                Ok(())
            }
            BracketError::Ring(e) => write!(f, "{}", e),
            BracketError::BadColoring => write!(f, "assignment is not a valid coloring"),
            BracketError::Resource { crossings, limit } => {
                write!(f, "{} crossings exceeds the state-sum limit {}", crossings, limit)
            }
            BracketError::Parse(msg) => write!(f, "parse error: {}", msg),
        }
    }
}

impl std::error::Error for BracketError {}

impl From<RingError> for BracketError {
    fn from(e: RingError) -> Self {
        BracketError::Ring(e)
    }
}

/// A validated birack bracket.
#[derive(Clone, Debug)]
pub struct BirackBracket {
    ring: RingSpec,
    n: usize,
    a: Vec<Vec<RElem>>,
    b: Vec<Vec<RElem>>,
    delta: RElem,
    w: Vec<RElem>,
    homogeneous: bool,
}

/// Check the bracket axioms for `a`, `b` (0-based n x n matrices of rows
/// for elements 1..=n) over `ring` on `birack`.
pub fn validate_bracket(
    birack: &FiniteBirack,
    a: &[Vec<RElem>],
    b: &[Vec<RElem>],
    ring: &RingSpec,
) -> BracketReport {
    let n = birack.size();
    let mut report = BracketReport {
        valid: false,
        delta: None,
        w: Vec::new(),
        homogeneous: false,
        violations: Vec::new(),
    };
    for (name, m) in [("A", a), ("B", b)] {
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            report
                .violations
                .push(BracketViolation::Shape(format!("{} must be {}x{}", name, n, n)));
            return report;
        }
    }
    let at = |m: &[Vec<RElem>], x: usize, y: usize| m[x - 1][y - 1].clone();
    // Units.
    for (name, m) in [("A", a), ("B", b)] {
        for x in 1..=n {
            for y in 1..=n {
                if !ring.is_unit(&at(m, x, y)).unwrap_or(false) {
                    report.violations.push(BracketViolation::NonUnit { matrix: name, x, y });
                }
            }
        }
    }
    if !report.violations.is_empty() {
        return report;
    }
    // Loop value: constant and nonzero over all pairs.
    let delta_at = |x: usize, y: usize| -> Result<RElem, RingError> {
        let av = at(a, x, y);
        let bv = at(b, x, y);
        let t1 = ring.mul(&av, &ring.invert(&bv)?)?;
        let t2 = ring.mul(&ring.invert(&av)?, &bv)?;
        ring.neg(&ring.add(&t1, &t2)?)
    };
    let mut delta: Option<(RElem, (usize, usize))> = None;
    for x in 1..=n {
        for y in 1..=n {
            let d = match delta_at(x, y) {
                Ok(d) => d,
                Err(_) => {
                    report.violations.push(BracketViolation::NonUnit { matrix: "A|B", x, y });
                    continue;
                }
            };
            match &delta {
                None => {
                    if ring.is_zero(&d) {
                        report.violations.push(BracketViolation::DeltaZero { at: (x, y) });
                        return report;
                    }
                    delta = Some((d, (x, y)));
                }
                Some((d0, first)) => {
                    if *d0 != d {
                        report.violations.push(BracketViolation::DeltaInconsistent {
                            first: *first,
                            second: (x, y),
                        });
                        return report;
                    }
                }
            }
        }
    }
    let (delta, _) = delta.expect("n >= 1");
    report.delta = Some(delta.clone());

    // Writhe weights w_x = A_{xx}^2 B_{xx}^{-1} and axiom (i).
    let w_of = |x: usize, y: usize| -> RElem {
        let av = at(a, x, y);
        let bv = at(b, x, y);
        let sq = ring.mul(&av, &av).unwrap();
        ring.mul(&sq, &ring.invert(&bv).unwrap()).unwrap()
    };
    for x in 1..=n {
        report.w.push(w_of(x, x));
    }
    for x in 1..=n {
        let px = birack.over(x, x);
        let py = birack.under(x, x);
        if w_of(x, x) != w_of(px, py) {
            report.violations.push(BracketViolation::TypeOne { x });
        }
    }
    report.homogeneous = report.w.windows(2).all(|p| p[0] == p[1]);

    // Axiom (iii): the five skein-coherence equations over all triples.
    let u = |x: usize, y: usize| birack.under(x, y);
    let o = |x: usize, y: usize| birack.over(x, y);
    let mul3 = |p: &RElem, q: &RElem, r: &RElem| -> RElem {
        ring.mul(&ring.mul(p, q).unwrap(), r).unwrap()
    };
    for x in 1..=n {
        for y in 1..=n {
            for z in 1..=n {
                let s1 = (u(x, y), o(z, y));
                let s2 = (o(y, x), o(z, x));
                let s3 = (u(x, z), u(y, z));
                let (a_xy, b_xy) = (at(a, x, y), at(b, x, y));
                let (a_yz, b_yz) = (at(a, y, z), at(b, y, z));
                let (a_xz, b_xz) = (at(a, x, z), at(b, x, z));
                let (a1, b1) = (at(a, s1.0, s1.1), at(b, s1.0, s1.1));
                let (a2, b2) = (at(a, s2.0, s2.1), at(b, s2.0, s2.1));
                let (a3, b3) = (at(a, s3.0, s3.1), at(b, s3.0, s3.1));

                if mul3(&a_xy, &a_yz, &a1) != mul3(&a_xz, &a2, &a3) {
                    report.violations.push(BracketViolation::Skein { eq: 1, x, y, z });
                }
                if mul3(&a_xy, &b_yz, &b1) != mul3(&b_xz, &b2, &a3) {
                    report.violations.push(BracketViolation::Skein { eq: 2, x, y, z });
                }
                if mul3(&b_xy, &a_yz, &b1) != mul3(&b_xz, &a2, &b3) {
                    report.violations.push(BracketViolation::Skein { eq: 3, x, y, z });
                }
                let lhs4 = mul3(&a_xy, &a_yz, &b1);
                let rhs4 = {
                    let t1 = mul3(&a_xz, &b2, &a3);
                    let t2 = mul3(&a_xz, &a2, &b3);
                    let t3 = ring.mul(&delta, &mul3(&a_xz, &b2, &b3)).unwrap();
                    let t4 = mul3(&b_xz, &b2, &b3);
                    let s = ring.add(&t1, &t2).unwrap();
                    let s = ring.add(&s, &t3).unwrap();
                    ring.add(&s, &t4).unwrap()
                };
                if lhs4 != rhs4 {
                    report.violations.push(BracketViolation::Skein { eq: 4, x, y, z });
                }
                let lhs5 = {
                    let t1 = mul3(&b_xy, &a_yz, &a1);
                    let t2 = mul3(&a_xy, &b_yz, &a1);
                    let t3 = ring.mul(&delta, &mul3(&b_xy, &b_yz, &a1)).unwrap();
                    let t4 = mul3(&b_xy, &b_yz, &b1);
                    let s = ring.add(&t1, &t2).unwrap();
                    let s = ring.add(&s, &t3).unwrap();
                    ring.add(&s, &t4).unwrap()
                };
                let rhs5 = mul3(&b_xz, &a2, &a3);
                if lhs5 != rhs5 {
                    report.violations.push(BracketViolation::Skein { eq: 5, x, y, z });
                }
            }
        }
    }
    report.valid = report.violations.is_empty();
    report
}

impl BirackBracket {
    /// Validate and construct.
    pub fn new(
        birack: &FiniteBirack,
        a: Vec<Vec<RElem>>,
        b: Vec<Vec<RElem>>,
        ring: RingSpec,
    ) -> Result<Self, BracketError> {
        let report = validate_bracket(birack, &a, &b, &ring);
        if !report.valid {
            return Err(BracketError::Invalid(report));
        }
        Ok(BirackBracket {
            n: birack.size(),
            delta: report.delta.clone().unwrap(),
            w: report.w.clone(),
            homogeneous: report.homogeneous,
            ring,
            a,
            b,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn a(&self, x: usize, y: usize) -> &RElem {
        &self.a[x - 1][y - 1]
    }

    pub fn b(&self, x: usize, y: usize) -> &RElem {
        &self.b[x - 1][y - 1]
    }

    pub fn delta(&self) -> &RElem {
        &self.delta
    }

    pub fn w(&self) -> &[RElem] {
        &self.w
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Parse the bracket text format: line 1 a ring spec (`Z5`, `GAUSS`,
    /// `LAURENT q`), then n rows of 2n whitespace-separated entries [A|B].
    pub fn from_text(birack: &FiniteBirack, text: &str) -> Result<Self, BracketError> {
        let (ring, a, b) = parse_block_matrix(text).map_err(BracketError::Parse)?;
        Self::new(birack, a, b, ring)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.ring);
        for x in 1..=self.n {
            let mut row: Vec<String> = (1..=self.n).map(|y| self.ring.format(self.a(x, y))).collect();
            row.extend((1..=self.n).map(|y| self.ring.format(self.b(x, y))));
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parse `[A|B]` block text; shared with the search seed format.
pub fn parse_block_matrix(text: &str) -> Result<(RingSpec, Matrix, Matrix), String> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let ring_line = lines.next().ok_or("empty bracket file")?;
    let ring = RingSpec::parse_spec(ring_line).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split_whitespace().collect()).collect();
    let n = rows.len();
    if n == 0 {
        return Err("no matrix rows".to_string());
    }
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != 2 * n {
            return Err(format!("row {} has {} entries, expected {}", i + 1, row.len(), 2 * n));
        }
        let parse = |tok: &str| ring.parse(tok).map_err(|e| format!("row {}: {}", i + 1, e));
        let mut ar = Vec::with_capacity(n);
        let mut br = Vec::with_capacity(n);
        for tok in &row[..n] {
            ar.push(parse(tok)?);
        }
        for tok in &row[n..] {
            br.push(parse(tok)?);
        }
        a.push(ar);
        b.push(br);
    }
    Ok((ring, a, b))
}

// ---------------------------------------------------------------------------
// State sum
// ---------------------------------------------------------------------------

/// The skein state sum of one coloring: over all `2^c` Kauffman states,
/// the product of per-crossing smoothing coefficients times
/// `delta^loops`.
pub fn state_sum(
    diagram: &FramedDiagram,
    birack: &FiniteBirack,
    bracket: &BirackBracket,
    coloring: &Coloring,
) -> Result<RElem, BracketError> {
    state_sum_with_limit(diagram, birack, bracket, coloring, DEFAULT_MAX_CROSSINGS)
}

pub fn state_sum_with_limit(
    diagram: &FramedDiagram,
    birack: &FiniteBirack,
    bracket: &BirackBracket,
    coloring: &Coloring,
    max_crossings: usize,
) -> Result<RElem, BracketError> {
    let c = diagram.crossing_count();
    if c > max_crossings {
        return Err(BracketError::Resource { crossings: c, limit: max_crossings });
    }
    if !homset::satisfies(diagram, birack, coloring) {
        return Err(BracketError::BadColoring);
    }
    let ring = &bracket.ring;
    // Per crossing, the oriented and disoriented coefficients at this
    // coloring. Positive crossings read (under-in, over-out); negative
    // crossings read (under-out, over-in) and invert.
    let mut coeffs = Vec::with_capacity(c);
    for id in 0..c {
        let p = diagram.ports(id);
        let (x, y) = if diagram.sign(id) > 0 {
            (coloring[p.under_in], coloring[p.over_out])
        } else {
            (coloring[p.under_out], coloring[p.over_in])
        };
        let (or, dis) = if diagram.sign(id) > 0 {
            (bracket.a(x, y).clone(), bracket.b(x, y).clone())
        } else {
            (ring.invert(bracket.a(x, y))?, ring.invert(bracket.b(x, y))?)
        };
        coeffs.push((or, dis));
    }
    // delta powers up to the maximum possible loop count.
    let max_loops = c + diagram.component_count();
    let mut delta_pow = Vec::with_capacity(max_loops + 1);
    delta_pow.push(ring.one());
    for i in 1..=max_loops {
        delta_pow.push(ring.mul(&delta_pow[i - 1], &bracket.delta)?);
    }
    let mut total = ring.zero();
    for bits in 0..(1u64 << c) {
        let state = SmoothingState::from_bits(c, bits);
        let loops = diagram.state_loop_count(&state).expect("state covers all crossings");
        let mut term = delta_pow[loops].clone();
        for (id, pair) in coeffs.iter().enumerate() {
            let f = if bits >> id & 1 == 0 { &pair.0 } else { &pair.1 };
            term = ring.mul(&term, f)?;
        }
        total = ring.add(&total, &term)?;
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// Multiset invariant
// ---------------------------------------------------------------------------

/// Multiset of state-sum values over the homset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMultiset {
    ring: RingSpec,
    /// (value, multiplicity) in canonical descending value order.
    counts: Vec<(RElem, usize)>,
}

impl InvariantMultiset {
    pub fn from_values(ring: &RingSpec, values: Vec<RElem>) -> InvariantMultiset {
        let mut tally: HashMap<RElem, usize> = HashMap::new();
        for v in values {
            *tally.entry(v).or_insert(0) += 1;
        }
        let mut counts: Vec<(RElem, usize)> = tally.into_iter().collect();
        counts.sort_by(|p, q| ring.canonical_cmp(&p.0, &q.0));
        InvariantMultiset { ring: ring.clone(), counts }
    }

    pub fn counts(&self) -> &[(RElem, usize)] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Polynomial form of the multiset: each value becomes `mult * u^value`.
    pub fn polynomial_string(&self) -> String {
        if self.counts.is_empty() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .counts
            .iter()
            .map(|(v, m)| {
                let mult = if *m == 1 { String::new() } else { m.to_string() };
                format!("{}u{}", mult, exponent_suffix(&self.ring.format(v)))
            })
            .collect();
        terms.join("+")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (v, m) in &self.counts {
            map.insert(self.ring.format(v), serde_json::json!(m));
        }
        serde_json::Value::Object(map)
    }
}

/// `u`-exponent rendering: `1` is omitted, single characters go bare after
/// `^`, anything longer is braced.
pub fn exponent_suffix(exp: &str) -> String {
    if exp == "1" {
        String::new()
    } else if exp.chars().count() == 1 {
        format!("^{}", exp)
    } else {
        format!("^{{{}}}", exp)
    }
}

/// The multiset of state sums over all colorings.
pub fn bracket_multiset(
    diagram: &FramedDiagram,
    birack: &FiniteBirack,
    bracket: &BirackBracket,
) -> Result<InvariantMultiset, BracketError> {
    bracket_multiset_jobs(diagram, birack, bracket, 1)
}

/// Same, with state sums evaluated on up to `jobs` worker threads.
pub fn bracket_multiset_jobs(
    diagram: &FramedDiagram,
    birack: &FiniteBirack,
    bracket: &BirackBracket,
    jobs: usize,
) -> Result<InvariantMultiset, BracketError> {
    let colorings = homset::enumerate_colorings(diagram, birack);
    let values = if jobs <= 1 || colorings.len() < 2 {
        let mut vs = Vec::with_capacity(colorings.len());
        for c in &colorings {
            vs.push(state_sum(diagram, birack, bracket, c)?);
        }
        vs
    } else {
        let workers = jobs.min(colorings.len());
        let chunk = colorings.len().div_ceil(workers);
        let results: Vec<Result<Vec<RElem>, BracketError>> = std::thread::scope(|scope| {
            let handles: Vec<_> = colorings
                .chunks(chunk)
                .map(|slice| {
                    scope.spawn(move || {
                        slice
                            .iter()
                            .map(|c| state_sum(diagram, birack, bracket, c))
                            .collect::<Result<Vec<_>, _>>()
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        let mut vs = Vec::with_capacity(colorings.len());
        for r in results {
            vs.extend(r?);
        }
        vs
    };
    Ok(InvariantMultiset::from_values(&bracket.ring, values))
}

#[cfg(test)]
pub mod fixtures {
    use super::*;
    use crate::birack::fixtures as biracks;
    use crate::ring::GaussInt;

    /// Bracket over Z5 on the constant-action 3-element birack, with B = A.
    pub fn z5_constant_action_bracket() -> (FiniteBirack, BirackBracket) {
        let x = biracks::constant_action_3();
        let ring = RingSpec::zn(5);
        let rows = [[1u64, 2, 1], [3, 1, 3], [3, 1, 3]];
        let a: Vec<Vec<RElem>> =
            rows.iter().map(|r| r.iter().map(|&v| RElem::Zn(v)).collect()).collect();
        let bracket = BirackBracket::new(&x, a.clone(), a, ring).unwrap();
        (x, bracket)
    }

    /// Gaussian bracket on the swap-or-fix birack. `B = -A` throughout.
    pub fn gaussian_swap_or_fix_bracket() -> (FiniteBirack, BirackBracket) {
        let x = biracks::swap_or_fix_3();
        let ring = RingSpec::gaussian();
        let g = |re: i64, im: i64| RElem::Gauss(GaussInt::new(re, im));
        let a = vec![
            vec![g(1, 0), g(1, 0), g(-1, 0)],
            vec![g(-1, 0), g(-1, 0), g(-1, 0)],
            vec![g(0, 1), g(0, -1), g(-1, 0)],
        ];
        let b = vec![
            vec![g(-1, 0), g(-1, 0), g(1, 0)],
            vec![g(1, 0), g(1, 0), g(1, 0)],
            vec![g(0, -1), g(0, 1), g(1, 0)],
        ];
        let bracket = BirackBracket::new(&x, a, b, ring).unwrap();
        (x, bracket)
    }

    /// Kauffman specialization on the trivial 1-element birack:
    /// `A = q`, `B = q^{-1}`.
    pub fn kauffman_bracket() -> (FiniteBirack, BirackBracket) {
        let x = biracks::trivial_1();
        let ring = RingSpec::laurent();
        let a = vec![vec![ring.monomial(GaussInt::ONE, 1).unwrap()]];
        let b = vec![vec![ring.monomial(GaussInt::ONE, -1).unwrap()]];
        let bracket = BirackBracket::new(&x, a, b, ring).unwrap();
        (x, bracket)
    }
}
