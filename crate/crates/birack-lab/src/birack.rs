//! Finite biracks presented by a pair of operation tables.
//!
//! Elements are `1..=n`, matching the usual table conventions. The two
//! operations are written `under(x, y)` for the under-operation and
//! `over(x, y)` for the over-operation. Validation checks, in order:
//! table format, sideways invertibility (axiom ii), the exchange laws
//! (axiom iii) and the framed type-I compatibility (axiom i), reporting
//! every violation with a witness rather than stopping at the first.

use std::fmt;

/// A validated finite birack with derived kink map and rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBirack {
    n: usize,
    /// `under[x][y] = x under y`, 1-based with a dummy row/column 0.
    under: Vec<Vec<usize>>,
    /// `over[x][y] = x over y`, 1-based.
    over: Vec<Vec<usize>>,
    kink: Vec<usize>,
    rank: usize,
    /// `under_col_inv[y][v] = x` with `under(x, y) = v`.
    under_col_inv: Vec<Vec<usize>>,
    /// `over_col_inv[x][v] = y` with `over(y, x) = v`.
    over_col_inv: Vec<Vec<usize>>,
    /// Inverse of `(x, y) -> (under(x, y), over(y, x))`.
    pair_inv: Vec<Vec<(usize, usize)>>,
}

/// One axiom violation with a concrete witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Malformed input: non-square table or entry out of `1..=n`.
    Format(String),
    /// A column of one of the tables is not a bijection.
    ColumnNotBijective { table: &'static str, column: usize },
    /// The combined map `(x, y) -> (over(y, x), under(x, y))` repeats a value.
    PairMapNotBijective { first: (usize, usize), second: (usize, usize) },
    /// One of the three exchange laws fails at `(x, y, z)`.
    ExchangeLaw { law: u8, x: usize, y: usize, z: usize },
    /// The framed type-I axiom fails at `x`.
    TypeOne { x: usize },
    /// No unique kink bijection solves `under(x, pi(x)) = over(pi(x), x)`.
    KinkMap(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Format(msg) => write!(f, "format: {}", msg),
            Violation::ColumnNotBijective { table, column } => {
                write!(f, "axiom (ii): column {} of the {} table is not a bijection", column, table)
            }
            Violation::PairMapNotBijective { first, second } => write!(
                f,
                "axiom (ii): S collides at ({},{}) and ({},{})",
                first.0, first.1, second.0, second.1
            ),
            Violation::ExchangeLaw { law, x, y, z } => {
                write!(f, "axiom (iii): exchange law {} fails at (x,y,z)=({},{},{})", law, x, y, z)
            }
            Violation::TypeOne { x } => write!(f, "axiom (i): fails at x={}", x),
            Violation::KinkMap(msg) => write!(f, "kink map: {}", msg),
        }
    }
}

/// Outcome of validating a pair of tables.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BirackError {
    Invalid(Vec<Violation>),
    /// A (t,s,r)-parameter relation failed.
    Constraint(String),
    /// Malformed text input.
    Parse(String),
    /// Homomorphism image list has wrong length or out-of-range entries.
    BadMap(String),
}

impl fmt::Display for BirackError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BirackError::Invalid(vs) => {
                write!(f, "invalid birack:")?;
                for v in vs {
                    write!(f, " [{}]", v)?;
                }
                Ok(())
            }
            BirackError::Constraint(msg) => write!(f, "parameter constraint: {}", msg),
            BirackError::Parse(msg) => write!(f, "parse error: {}", msg),
            BirackError::BadMap(msg) => write!(f, "bad map: {}", msg),
        }
    }
}

impl std::error::Error for BirackError {}

fn check_format(under: &[Vec<usize>], over: &[Vec<usize>]) -> Result<usize, Violation> {
    let n = under.len();
    if n == 0 {
        return Err(Violation::Format("empty table".to_string()));
    }
    if over.len() != n {
        return Err(Violation::Format(format!(
            "table sizes differ: {} vs {}",
            n,
            over.len()
        )));
    }
    for (name, table) in [("under", under), ("over", over)] {
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Violation::Format(format!(
                    "{} table row {} has {} entries, expected {}",
                    name,
                    i + 1,
                    row.len(),
                    n
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v < 1 || v > n {
                    return Err(Violation::Format(format!(
                        "{} table entry ({},{}) = {} out of range 1..={}",
                        name,
                        i + 1,
                        j + 1,
                        v,
                        n
                    )));
                }
            }
        }
    }
    Ok(n)
}

/// Check the framed birack axioms on raw `n x n` tables (0-based outer
/// vectors holding rows for elements `1..=n`).
pub fn validate_tables(under: &[Vec<usize>], over: &[Vec<usize>]) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = match check_format(under, over) {
        Ok(n) => n,
        Err(v) => {
            report.violations.push(v);
            return report;
        }
    };
    let u = |x: usize, y: usize| under[x - 1][y - 1];
    let o = |x: usize, y: usize| over[x - 1][y - 1];

    // Axiom (ii): columns of each table are bijections.
    for y in 1..=n {
        let mut seen = vec![false; n + 1];
        let mut ok = true;
        for x in 1..=n {
            let v = u(x, y);
            if seen[v] {
                ok = false;
            }
            seen[v] = true;
        }
        if !ok {
            report.violations.push(Violation::ColumnNotBijective { table: "under", column: y });
        }
    }
    for x in 1..=n {
        let mut seen = vec![false; n + 1];
        let mut ok = true;
        for y in 1..=n {
            let v = o(y, x);
            if seen[v] {
                ok = false;
            }
            seen[v] = true;
        }
        if !ok {
            report.violations.push(Violation::ColumnNotBijective { table: "over", column: x });
        }
    }
    // Axiom (ii): S(x,y) = (over(y,x), under(x,y)) is a bijection of pairs.
    let mut seen_pair = vec![vec![None; n + 1]; n + 1];
    'outer: for x in 1..=n {
        for y in 1..=n {
            let img = (o(y, x), u(x, y));
            if let Some(prev) = seen_pair[img.0][img.1] {
                report.violations.push(Violation::PairMapNotBijective { first: prev, second: (x, y) });
                break 'outer;
            }
            seen_pair[img.0][img.1] = Some((x, y));
        }
    }
    // Axiom (iii): the three exchange laws.
    for x in 1..=n {
        for y in 1..=n {
            for z in 1..=n {
                if u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)) {
                    report.violations.push(Violation::ExchangeLaw { law: 1, x, y, z });
                }
                if o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)) {
                    report.violations.push(Violation::ExchangeLaw { law: 2, x, y, z });
                }
                if o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)) {
                    report.violations.push(Violation::ExchangeLaw { law: 3, x, y, z });
                }
            }
        }
    }
    // Axiom (i).
    for x in 1..=n {
        if o(u(x, x), o(x, x)) != u(o(x, x), u(x, x)) {
            report.violations.push(Violation::TypeOne { x });
        }
    }
    report.valid = report.violations.is_empty();
    report
}

/// Find the unique bijection with `under(x, pi(x)) = over(pi(x), x)`.
fn solve_kink_map(
    n: usize,
    u: &dyn Fn(usize, usize) -> usize,
    o: &dyn Fn(usize, usize) -> usize,
) -> Result<Vec<usize>, Violation> {
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (x, cands) in candidates.iter_mut().enumerate().skip(1) {
        for c in 1..=n {
            if u(x, c) == o(c, x) {
                cands.push(c);
            }
        }
        if cands.is_empty() {
            return Err(Violation::KinkMap(format!("no candidate value at x={}", x)));
        }
    }
    // Backtracking over bijective selections; a valid birack has exactly one.
    let mut solutions: Vec<Vec<usize>> = Vec::new();
    let mut current = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    fn rec(
        x: usize,
        n: usize,
        candidates: &[Vec<usize>],
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        solutions: &mut Vec<Vec<usize>>,
    ) {
        if solutions.len() > 1 {
            return;
        }
        if x > n {
            solutions.push(current[1..].to_vec());
            return;
        }
        for &c in &candidates[x] {
            if !used[c] {
                used[c] = true;
                current[x] = c;
                rec(x + 1, n, candidates, current, used, solutions);
                used[c] = false;
            }
        }
    }
    rec(1, n, &candidates, &mut current, &mut used, &mut solutions);
    match solutions.len() {
        1 => Ok(solutions.pop().unwrap()),
        0 => Err(Violation::KinkMap("no bijective selection".to_string())),
        _ => Err(Violation::KinkMap("kink map not unique".to_string())),
    }
}

fn permutation_order(perm: &[usize]) -> usize {
    // perm is 1-based images in a 0-based slice: perm[x-1] = pi(x).
    let n = perm.len();
    let mut rank = 1usize;
    let mut seen = vec![false; n + 1];
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = perm[cur - 1];
            len += 1;
        }
        rank = lcm(rank, len);
    }
    rank
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl FiniteBirack {
    /// Validate tables and build the birack with its derived data.
    pub fn from_tables(under: Vec<Vec<usize>>, over: Vec<Vec<usize>>) -> Result<Self, BirackError> {
        let report = validate_tables(&under, &over);
        if !report.valid {
            return Err(BirackError::Invalid(report.violations));
        }
        let n = under.len();
        let u = |x: usize, y: usize| under[x - 1][y - 1];
        let o = |x: usize, y: usize| over[x - 1][y - 1];
        let kink = solve_kink_map(n, &u, &o).map_err(|v| BirackError::Invalid(vec![v]))?;
        let rank = permutation_order(&kink);

        let mut under_col_inv = vec![vec![0usize; n + 1]; n + 1];
        let mut over_col_inv = vec![vec![0usize; n + 1]; n + 1];
        for y in 1..=n {
            for x in 1..=n {
                under_col_inv[y][u(x, y)] = x;
            }
        }
        for x in 1..=n {
            for y in 1..=n {
                over_col_inv[x][o(y, x)] = y;
            }
        }
        let mut pair_inv = vec![vec![(0usize, 0usize); n + 1]; n + 1];
        for x in 1..=n {
            for y in 1..=n {
                pair_inv[u(x, y)][o(y, x)] = (x, y);
            }
        }

        let mut under1 = vec![vec![0usize; n + 1]];
        for row in &under {
            let mut r = vec![0usize];
            r.extend_from_slice(row);
            under1.push(r);
        }
        let mut over1 = vec![vec![0usize; n + 1]];
        for row in &over {
            let mut r = vec![0usize];
            r.extend_from_slice(row);
            over1.push(r);
        }
        Ok(FiniteBirack {
            n,
            under: under1,
            over: over1,
            kink,
            rank,
            under_col_inv,
            over_col_inv,
            pair_inv,
        })
    }

    /// The (t,s,r)-birack on Z_m, relabeled so residue k is element k+1.
    ///
    /// Requires t and r to be units mod m, `s^2 = s(r - t)` and `r - s`
    /// a unit (which makes the kink map `x -> (r-s) t^{-1} x` bijective).
    pub fn alexander(m: u64, t: u64, s: u64, r: u64) -> Result<Self, BirackError> {
        if m < 1 {
            return Err(BirackError::Constraint("modulus must be >= 1".to_string()));
        }
        let t = t % m;
        let s = s % m;
        let r = r % m;
        let unit = |v: u64| -> bool { num_gcd(v.max(1), m) == 1 && (v != 0 || m == 1) };
        if !unit(t) {
            return Err(BirackError::Constraint(format!("t = {} is not a unit mod {}", t, m)));
        }
        if !unit(r) {
            return Err(BirackError::Constraint(format!("r = {} is not a unit mod {}", r, m)));
        }
        let lhs = (s * s) % m;
        let rhs = (s * ((r + m - t) % m)) % m;
        if lhs != rhs {
            return Err(BirackError::Constraint(format!(
                "s^2 = s(r - t) fails mod {}: {} != {}",
                m, lhs, rhs
            )));
        }
        let r_minus_s = (r + m - s) % m;
        if !unit(r_minus_s) {
            return Err(BirackError::Constraint(format!(
                "r - s = {} is not a unit mod {}, so the kink map is not bijective",
                r_minus_s, m
            )));
        }
        let n = m as usize;
        let mut under = vec![vec![0usize; n]; n];
        let mut over = vec![vec![0usize; n]; n];
        for x in 0..m {
            for y in 0..m {
                under[x as usize][y as usize] = ((t * x + s * y) % m) as usize + 1;
                over[x as usize][y as usize] = ((r * x) % m) as usize + 1;
            }
        }
        Self::from_tables(under, over)
    }

    /// Note describing the residue relabeling used by [`alexander`].
    pub fn alexander_relabeling_note(m: u64) -> String {
        format!("elements 1..{} stand for residues 0..{} mod {}", m, m - 1, m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn under(&self, x: usize, y: usize) -> usize {
        self.under[x][y]
    }

    #[inline]
    pub fn over(&self, x: usize, y: usize) -> usize {
        self.over[x][y]
    }

    /// Inverse of the column map `x -> under(x, y)`.
    #[inline]
    pub fn under_col_inv(&self, y: usize, v: usize) -> usize {
        self.under_col_inv[y][v]
    }

    /// Inverse of the column map `y -> over(y, x)`.
    #[inline]
    pub fn over_col_inv(&self, x: usize, v: usize) -> usize {
        self.over_col_inv[x][v]
    }

    /// Inverse of `(x, y) -> (under(x, y), over(y, x))`.
    #[inline]
    pub fn pair_inv(&self, u: usize, o: usize) -> (usize, usize) {
        self.pair_inv[u][o]
    }

    /// The kink map as 1-based images: `kink_map()[x-1] = pi(x)`.
    pub fn kink_map(&self) -> &[usize] {
        &self.kink
    }

    /// Order of the kink map in the symmetric group.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_biquandle(&self) -> bool {
        (1..=self.n).all(|x| self.kink[x - 1] == x)
    }

    /// True iff `f` preserves both operations; errors on malformed lists.
    pub fn check_homomorphism(&self, f: &[usize]) -> Result<bool, BirackError> {
        if f.len() != self.n {
            return Err(BirackError::BadMap(format!(
                "image list has length {}, expected {}",
                f.len(),
                self.n
            )));
        }
        if let Some(&bad) = f.iter().find(|&&v| v < 1 || v > self.n) {
            return Err(BirackError::BadMap(format!("image {} out of range 1..={}", bad, self.n)));
        }
        for x in 1..=self.n {
            for y in 1..=self.n {
                if f[self.under(x, y) - 1] != self.under(f[x - 1], f[y - 1]) {
                    return Ok(false);
                }
                if f[self.over(x, y) - 1] != self.over(f[x - 1], f[y - 1]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All endomorphisms, sorted lexicographically by image list.
    ///
    /// Brute force over the `n^n` candidate maps with early rejection as
    /// soon as an assigned prefix breaks a preservation equation.
    pub fn endomorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut out = Vec::new();
        let mut f = vec![0usize; n + 1];
        self.endo_rec(1, &mut f, &mut out);
        out
    }

    fn endo_rec(&self, k: usize, f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = self.n;
        if k > n {
            out.push(f[1..].to_vec());
            return;
        }
        'next: for img in 1..=n {
            f[k] = img;
            for x in 1..=k {
                for y in 1..=k {
                    let uxy = self.under(x, y);
                    if uxy <= k && f[uxy] != self.under(f[x], f[y]) {
                        continue 'next;
                    }
                    let oxy = self.over(x, y);
                    if oxy <= k && f[oxy] != self.over(f[x], f[y]) {
                        continue 'next;
                    }
                }
            }
            self.endo_rec(k + 1, f, out);
        }
        f[k] = 0;
    }

    /// Parse the birack text format: line 1 is `n`, then n rows for the
    /// under table, a blank line, and n rows for the over table.
    pub fn from_text(text: &str) -> Result<Self, BirackError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| BirackError::Parse("empty input".to_string()))?
            .parse()
            .map_err(|_| BirackError::Parse("line 1 must be the element count".to_string()))?;
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (lineno, line) in lines.enumerate() {
            if line.is_empty() {
                continue;
            }
            let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| {
                BirackError::Parse(format!("line {}: expected integers", lineno + 2))
            })?;
            rows.push(row);
        }
        if rows.len() != 2 * n {
            return Err(BirackError::Parse(format!(
                "expected {} table rows, found {}",
                2 * n,
                rows.len()
            )));
        }
        let over = rows.split_off(n);
        Self::from_tables(rows, over)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for x in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|y| self.under(x, y).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out.push('\n');
        for x in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|y| self.over(x, y).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}
