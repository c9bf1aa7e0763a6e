//! Combinatorial framed oriented link diagrams.
//!
//! A diagram is a list of signed crossings plus, per component, the cyclic
//! sequence of passes (crossing, over/under) along the orientation. Semiarcs
//! are the edges between consecutive passes; a crossing-free component is a
//! single closed semiarc. Virtual crossings are never recorded: a signed
//! Gauss code carries everything colorings and state loop counts depend on.

use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Over,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pass {
    pub crossing: usize,
    pub role: Role,
}

/// Semiarc endpoints of one crossing's four strand-ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingPorts {
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedDiagram {
    /// Sign per crossing id, +1 or -1.
    signs: Vec<i8>,
    /// Cyclic pass sequences; an empty sequence is a crossing-free loop.
    components: Vec<Vec<Pass>>,
    semiarc_count: usize,
    ports: Vec<CrossingPorts>,
    /// Semiarc ids of crossing-free components.
    free_loops: Vec<usize>,
    /// component index of each semiarc.
    semiarc_component: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    /// A crossing id is not visited exactly once over and once under.
    Structure { crossing: usize, msg: String },
    /// Conflicting signs for the same crossing.
    SignConflict { crossing: usize },
    /// Bad token in a Gauss or PD code.
    Parse { pos: usize, msg: String },
    /// State does not cover every crossing.
    IncompleteState,
    /// No legal site for a requested move.
    NoLegalSite(&'static str),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::Structure { crossing, msg } => {
                write!(f, "crossing {}: {}", crossing, msg)
            }
            DiagramError::SignConflict { crossing } => {
                write!(f, "crossing {}: conflicting signs", crossing)
            }
            DiagramError::Parse { pos, msg } => write!(f, "parse error at offset {}: {}", pos, msg),
            DiagramError::IncompleteState => write!(f, "smoothing state does not cover all crossings"),
            DiagramError::NoLegalSite(mv) => write!(f, "no legal site for move {}", mv),
        }
    }
}

impl std::error::Error for DiagramError {}

impl FramedDiagram {
    /// Build and validate a diagram from pass sequences and signs.
    ///
    /// `components[i]` lists the passes of component `i` in orientation
    /// order; crossing ids must be `0..signs.len()`.
    pub fn new(components: Vec<Vec<Pass>>, signs: Vec<i8>) -> Result<Self, DiagramError> {
        let c = signs.len();
        let mut over_seen = vec![0usize; c];
        let mut under_seen = vec![0usize; c];
        for comp in &components {
            for p in comp {
                if p.crossing >= c {
                    return Err(DiagramError::Structure {
                        crossing: p.crossing + 1,
                        msg: "crossing id out of range".to_string(),
                    });
                }
                match p.role {
                    Role::Over => over_seen[p.crossing] += 1,
                    Role::Under => under_seen[p.crossing] += 1,
                }
            }
        }
        for id in 0..c {
            if over_seen[id] != 1 || under_seen[id] != 1 {
                return Err(DiagramError::Structure {
                    crossing: id + 1,
                    msg: format!(
                        "visited {} times over and {} times under; expected once each",
                        over_seen[id], under_seen[id]
                    ),
                });
            }
            if signs[id] != 1 && signs[id] != -1 {
                return Err(DiagramError::Structure {
                    crossing: id + 1,
                    msg: "sign must be +1 or -1".to_string(),
                });
            }
        }

        // Assign semiarc ids: within a component, semiarc j follows pass j.
        let mut ports = vec![
            CrossingPorts { under_in: 0, under_out: 0, over_in: 0, over_out: 0 };
            c
        ];
        let mut free_loops = Vec::new();
        let mut semiarc_component = Vec::new();
        let mut next = 0usize;
        for (ci, comp) in components.iter().enumerate() {
            let k = comp.len();
            if k == 0 {
                free_loops.push(next);
                semiarc_component.push(ci);
                next += 1;
                continue;
            }
            let base = next;
            for (j, p) in comp.iter().enumerate() {
                let incoming = base + (j + k - 1) % k;
                let outgoing = base + j;
                match p.role {
                    Role::Under => {
                        ports[p.crossing].under_in = incoming;
                        ports[p.crossing].under_out = outgoing;
                    }
                    Role::Over => {
                        ports[p.crossing].over_in = incoming;
                        ports[p.crossing].over_out = outgoing;
                    }
                }
                semiarc_component.push(ci);
            }
            next += k;
        }
        Ok(FramedDiagram {
            signs,
            components,
            semiarc_count: next,
            ports,
            free_loops,
            semiarc_component,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn semiarc_count(&self) -> usize {
        self.semiarc_count
    }

    pub fn sign(&self, crossing: usize) -> i8 {
        self.signs[crossing]
    }

    pub fn ports(&self, crossing: usize) -> CrossingPorts {
        self.ports[crossing]
    }

    pub fn components(&self) -> &[Vec<Pass>] {
        &self.components
    }

    pub fn free_loop_semiarcs(&self) -> &[usize] {
        &self.free_loops
    }

    pub fn semiarc_component(&self, semiarc: usize) -> usize {
        self.semiarc_component[semiarc]
    }

    /// Blackboard framing: the sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// Writhe restricted to crossings with both passes on one component.
    pub fn self_writhe(&self, component: usize) -> i64 {
        let mut seen = HashMap::new();
        for p in &self.components[component] {
            *seen.entry(p.crossing).or_insert(0usize) += 1;
        }
        seen.iter()
            .filter(|(_, &count)| count == 2)
            .map(|(&id, _)| self.signs[id] as i64)
            .sum()
    }
}

// ---------------------------------------------------------------------------
// Gauss codes
// ---------------------------------------------------------------------------

impl FramedDiagram {
    /// Parse a signed Gauss code: components separated by `/`, passes like
    /// `O1+` or `U3-` separated by whitespace or commas, a bare `0` for a
    /// crossing-free component.
    pub fn parse_gauss_code(text: &str) -> Result<Self, DiagramError> {
        let mut id_map: HashMap<u64, usize> = HashMap::new();
        let mut signs: Vec<Option<i8>> = Vec::new();
        let mut components = Vec::new();
        let mut offset = 0usize;
        for comp_text in text.split('/') {
            let mut passes = Vec::new();
            let mut is_free_loop = false;
            for token in comp_text.split(|ch: char| ch.is_whitespace() || ch == ',') {
                if token.is_empty() {
                    continue;
                }
                // Tokens are subslices of the input, so pointer offsets
                // give byte positions directly.
                let pos = token.as_ptr() as usize - text.as_ptr() as usize;
                if token == "0" {
                    is_free_loop = true;
                    continue;
                }
                let mut chars = token.chars();
                let role = match chars.next() {
                    Some('O') => Role::Over,
                    Some('U') => Role::Under,
                    _ => {
                        return Err(DiagramError::Parse {
                            pos,
                            msg: format!("pass must start with O or U: {:?}", token),
                        })
                    }
                };
                let rest: String = chars.collect();
                let (digits, sign_ch) = rest.split_at(rest.len().saturating_sub(1));
                let sign = match sign_ch {
                    "+" => 1i8,
                    "-" => -1i8,
                    _ => {
                        return Err(DiagramError::Parse {
                            pos,
                            msg: format!("pass must end with + or -: {:?}", token),
                        })
                    }
                };
                let label: u64 = digits.parse().map_err(|_| DiagramError::Parse {
                    pos,
                    msg: format!("bad crossing id in {:?}", token),
                })?;
                let id = *id_map.entry(label).or_insert_with(|| {
                    signs.push(None);
                    signs.len() - 1
                });
                match signs[id] {
                    None => signs[id] = Some(sign),
                    Some(s) if s == sign => {}
                    Some(_) => return Err(DiagramError::SignConflict { crossing: label as usize }),
                }
                passes.push(Pass { crossing: id, role });
            }
            if is_free_loop && !passes.is_empty() {
                return Err(DiagramError::Parse {
                    pos: offset,
                    msg: "a 0 token cannot mix with passes in one component".to_string(),
                });
            }
            if passes.is_empty() && !is_free_loop {
                return Err(DiagramError::Parse {
                    pos: offset,
                    msg: "empty component (use a bare 0 for a crossing-free loop)".to_string(),
                });
            }
            components.push(passes);
            offset += comp_text.len() + 1;
        }
        let signs: Vec<i8> = signs.into_iter().map(|s| s.unwrap()).collect();
        FramedDiagram::new(components, signs)
    }

    /// Canonical Gauss code with crossings renumbered in first-visit order.
    pub fn to_gauss_code(&self) -> String {
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut comps = Vec::new();
        for comp in &self.components {
            if comp.is_empty() {
                comps.push("0".to_string());
                continue;
            }
            let mut toks = Vec::new();
            for p in comp {
                let next_label = relabel.len() + 1;
                let label = *relabel.entry(p.crossing).or_insert(next_label);
                let role = match p.role {
                    Role::Over => 'O',
                    Role::Under => 'U',
                };
                let sign = if self.signs[p.crossing] > 0 { '+' } else { '-' };
                toks.push(format!("{}{}{}", role, label, sign));
            }
            comps.push(toks.join(" "));
        }
        comps.join(" / ")
    }
}

// ---------------------------------------------------------------------------
// PD codes
// ---------------------------------------------------------------------------

impl FramedDiagram {
    /// Parse an oriented PD code: `X[a,b,c,d]` tuples with `a` the incoming
    /// under-edge and `b,c,d` counterclockwise. Edge orientations are
    /// recovered by head/tail propagation, falling back to consecutive edge
    /// numbering along each component where propagation cannot decide.
    pub fn parse_pd_code(text: &str) -> Result<Self, DiagramError> {
        let tuples = parse_pd_tuples(text)?;
        if tuples.is_empty() {
            // An empty PD code is a single crossing-free unknot.
            return FramedDiagram::new(vec![vec![]], vec![]);
        }
        let c = tuples.len();
        // occurrences[edge] = list of (crossing, slot).
        let mut occurrences: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for (ci, t) in tuples.iter().enumerate() {
            for (slot, &e) in t.iter().enumerate() {
                occurrences.entry(e).or_default().push((ci, slot));
            }
        }
        for (e, occ) in &occurrences {
            if occ.len() != 2 {
                return Err(DiagramError::Parse {
                    pos: 0,
                    msg: format!("edge {} appears {} times, expected 2", e, occ.len()),
                });
            }
        }

        // Orientation state per occurrence: true = into the crossing.
        // Slot 0 (a) is always in; slot 2 (c) always out.
        let mut into: HashMap<(usize, usize), bool> = HashMap::new();
        for ci in 0..c {
            into.insert((ci, 0), true);
            into.insert((ci, 2), false);
        }
        let components = pd_components(&tuples);
        let successor = pd_successors(&components);
        loop {
            let mut progress = false;
            // Each edge has one head and one tail.
            for occ in occurrences.values() {
                let known: Vec<bool> = occ.iter().filter_map(|o| into.get(o).copied()).collect();
                if known.len() == 1 {
                    for o in occ {
                        if !into.contains_key(o) {
                            into.insert(*o, !known[0]);
                            progress = true;
                        }
                    }
                }
            }
            // Each crossing's over pair has one in and one out.
            for ci in 0..c {
                let b = into.get(&(ci, 1)).copied();
                let d = into.get(&(ci, 3)).copied();
                match (b, d) {
                    (Some(v), None) => {
                        into.insert((ci, 3), !v);
                        progress = true;
                    }
                    (None, Some(v)) => {
                        into.insert((ci, 1), !v);
                        progress = true;
                    }
                    _ => {}
                }
            }
            if into.len() == 4 * c {
                break;
            }
            if !progress {
                // Disambiguate one crossing by consecutive numbering and
                // let propagation continue from there.
                let ci = (0..c)
                    .find(|ci| !into.contains_key(&(*ci, 1)))
                    .expect("undetermined crossing must exist");
                let b = tuples[ci][1];
                let d = tuples[ci][3];
                let over_in = if successor.get(&b) == Some(&d) {
                    1
                } else if successor.get(&d) == Some(&b) {
                    3
                } else {
                    return Err(DiagramError::Parse {
                        pos: 0,
                        msg: format!("cannot orient over strand at crossing {}", ci + 1),
                    });
                };
                into.insert((ci, over_in), true);
                into.insert((ci, if over_in == 1 { 3 } else { 1 }), false);
            }
        }

        // Check the over directions against each crossing's pair structure.
        let mut signs = vec![0i8; c];
        for ci in 0..c {
            let b_in = into[&(ci, 1)];
            let d_in = into[&(ci, 3)];
            if b_in == d_in {
                return Err(DiagramError::Parse {
                    pos: 0,
                    msg: format!("over strand at crossing {} has two heads", ci + 1),
                });
            }
            // Positive crossing: incoming over strand at slot d.
            signs[ci] = if d_in { 1 } else { -1 };
        }

        // Walk components following edge directions to build pass lists.
        let mut edge_head: HashMap<usize, (usize, usize)> = HashMap::new();
        for (e, occ) in &occurrences {
            for o in occ {
                if into[o] {
                    edge_head.insert(*e, *o);
                }
            }
        }
        let mut visited: HashMap<usize, bool> = HashMap::new();
        let mut comps: Vec<Vec<Pass>> = Vec::new();
        let mut all_edges: Vec<usize> = occurrences.keys().copied().collect();
        all_edges.sort_unstable();
        for &start in &all_edges {
            if visited.get(&start).copied().unwrap_or(false) {
                continue;
            }
            let mut passes = Vec::new();
            let mut e = start;
            loop {
                visited.insert(e, true);
                let (ci, slot) = edge_head[&e];
                let role = if slot == 0 { Role::Under } else { Role::Over };
                passes.push(Pass { crossing: ci, role });
                let out_slot = match slot {
                    0 => 2,
                    1 => 3,
                    3 => 1,
                    _ => unreachable!(),
                };
                e = tuples[ci][out_slot];
                if e == start {
                    break;
                }
            }
            comps.push(passes);
        }
        FramedDiagram::new(comps, signs)
    }
}

fn parse_pd_tuples(text: &str) -> Result<Vec<[usize; 4]>, DiagramError> {
    let mut tuples = Vec::new();
    let mut rest = text.trim();
    if let Some(stripped) = rest.strip_prefix("PD") {
        rest = stripped.trim_start();
        rest = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')).unwrap_or(rest);
    }
    let bytes = rest.as_bytes();
    let mut i = 0usize;
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' | b',' => i += 1,
            b'X' => {
                let open = rest[i..].find('[').ok_or(DiagramError::Parse {
                    pos: i,
                    msg: "expected [ after X".to_string(),
                })? + i;
                let close = rest[open..].find(']').ok_or(DiagramError::Parse {
                    pos: open,
                    msg: "unclosed X[...]".to_string(),
                })? + open;
                let inner = &rest[open + 1..close];
                let parts: Result<Vec<usize>, _> =
                    inner.split(',').map(|p| p.trim().parse::<usize>()).collect();
                let parts = parts.map_err(|_| DiagramError::Parse {
                    pos: open,
                    msg: format!("bad edge labels in X[{}]", inner),
                })?;
                if parts.len() != 4 {
                    return Err(DiagramError::Parse {
                        pos: open,
                        msg: "X tuple needs exactly 4 edges".to_string(),
                    });
                }
                tuples.push([parts[0], parts[1], parts[2], parts[3]]);
                i = close + 1;
            }
            _ => {
                return Err(DiagramError::Parse {
                    pos: i,
                    msg: format!("unexpected character {:?}", rest[i..].chars().next().unwrap()),
                })
            }
        }
    }
    Ok(tuples)
}

/// Orientation-free component structure: edges glued by the under pair
/// `(a, c)` and over pair `(b, d)` of each tuple.
fn pd_components(tuples: &[[usize; 4]]) -> Vec<Vec<usize>> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for t in tuples {
        adj.entry(t[0]).or_default().push(t[2]);
        adj.entry(t[2]).or_default().push(t[0]);
        adj.entry(t[1]).or_default().push(t[3]);
        adj.entry(t[3]).or_default().push(t[1]);
    }
    let mut seen: HashMap<usize, bool> = HashMap::new();
    let mut comps = Vec::new();
    let mut keys: Vec<usize> = adj.keys().copied().collect();
    keys.sort_unstable();
    for &start in &keys {
        if seen.get(&start).copied().unwrap_or(false) {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        while let Some(e) = stack.pop() {
            if seen.get(&e).copied().unwrap_or(false) {
                continue;
            }
            seen.insert(e, true);
            comp.push(e);
            for &next in &adj[&e] {
                stack.push(next);
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Successor of each edge label under consecutive numbering with wraparound
/// inside its component, when the labels are consecutive.
fn pd_successors(components: &[Vec<usize>]) -> HashMap<usize, usize> {
    let mut succ = HashMap::new();
    for comp in components {
        let lo = *comp.first().unwrap();
        let hi = *comp.last().unwrap();
        if hi - lo + 1 != comp.len() {
            continue;
        }
        for &e in comp {
            succ.insert(e, if e == hi { lo } else { e + 1 });
        }
    }
    succ
}

// ---------------------------------------------------------------------------
// Framing changes and orientation reversal
// ---------------------------------------------------------------------------

impl FramedDiagram {
    /// Insert `|k|` kinks of sign `sgn(k)` consecutively on a component.
    /// Each kink is an over-then-under curl, so the writhe grows by `k`.
    pub fn add_kinks(&self, component: usize, k: i64) -> FramedDiagram {
        let mut components = self.components.clone();
        let mut signs = self.signs.clone();
        let sign = if k >= 0 { 1i8 } else { -1i8 };
        for _ in 0..k.unsigned_abs() {
            let id = signs.len();
            signs.push(sign);
            components[component].push(Pass { crossing: id, role: Role::Over });
            components[component].push(Pass { crossing: id, role: Role::Under });
        }
        FramedDiagram::new(components, signs).expect("kink insertion keeps the diagram well-formed")
    }

    /// Same framing change with under-then-over curls; framed-isotopic to
    /// [`add_kinks`] output.
    pub fn add_kinks_reversed_curl(&self, component: usize, k: i64) -> FramedDiagram {
        let mut components = self.components.clone();
        let mut signs = self.signs.clone();
        let sign = if k >= 0 { 1i8 } else { -1i8 };
        for _ in 0..k.unsigned_abs() {
            let id = signs.len();
            signs.push(sign);
            components[component].push(Pass { crossing: id, role: Role::Under });
            components[component].push(Pass { crossing: id, role: Role::Over });
        }
        FramedDiagram::new(components, signs).expect("kink insertion keeps the diagram well-formed")
    }

    /// Reverse the orientation of one component. Crossings between the
    /// reversed component and the rest flip sign; self-crossings and
    /// crossings not on the component keep theirs.
    pub fn reverse_component(&self, component: usize) -> FramedDiagram {
        let mut components = self.components.clone();
        components[component].reverse();
        let mut on_comp = vec![0usize; self.signs.len()];
        for p in &self.components[component] {
            on_comp[p.crossing] += 1;
        }
        let signs = self
            .signs
            .iter()
            .enumerate()
            .map(|(id, &s)| if on_comp[id] == 1 { -s } else { s })
            .collect();
        FramedDiagram::new(components, signs).expect("orientation reversal keeps the diagram well-formed")
    }

    /// Disjoint union with another diagram (components concatenated).
    pub fn disjoint_union(&self, other: &FramedDiagram) -> FramedDiagram {
        let offset = self.signs.len();
        let mut components = self.components.clone();
        for comp in &other.components {
            components.push(
                comp.iter()
                    .map(|p| Pass { crossing: p.crossing + offset, role: p.role })
                    .collect(),
            );
        }
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        FramedDiagram::new(components, signs).expect("disjoint union keeps the diagram well-formed")
    }

    /// The 0-crossing unknot.
    pub fn unknot() -> FramedDiagram {
        FramedDiagram::new(vec![vec![]], vec![]).unwrap()
    }
}

// ---------------------------------------------------------------------------
// Kauffman states and loop counting
// ---------------------------------------------------------------------------

/// Per-crossing smoothing choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothing {
    /// Orientation-respecting smoothing: under-in joins over-out and
    /// over-in joins under-out.
    Oriented,
    /// Disoriented smoothing: inputs join each other, outputs join each
    /// other.
    Disoriented,
}

/// A Kauffman state: one smoothing per crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothingState {
    pub choices: Vec<Smoothing>,
}

impl SmoothingState {
    pub fn from_bits(crossings: usize, bits: u64) -> SmoothingState {
        SmoothingState {
            choices: (0..crossings)
                .map(|i| {
                    if bits >> i & 1 == 0 {
                        Smoothing::Oriented
                    } else {
                        Smoothing::Disoriented
                    }
                })
                .collect(),
        }
    }

    pub fn disoriented_count(&self) -> usize {
        self.choices.iter().filter(|s| matches!(s, Smoothing::Disoriented)).count()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

impl FramedDiagram {
    /// Number of closed loops after smoothing every crossing per the state.
    /// Loops are counted unoriented through semiarcs; crossing-free
    /// components each contribute one loop.
    pub fn state_loop_count(&self, state: &SmoothingState) -> Result<usize, DiagramError> {
        if state.choices.len() != self.crossing_count() {
            return Err(DiagramError::IncompleteState);
        }
        let mut uf = UnionFind::new(self.semiarc_count);
        for (id, choice) in state.choices.iter().enumerate() {
            let p = self.ports[id];
            match choice {
                Smoothing::Oriented => {
                    uf.union(p.under_in, p.over_out);
                    uf.union(p.over_in, p.under_out);
                }
                Smoothing::Disoriented => {
                    uf.union(p.under_in, p.over_in);
                    uf.union(p.under_out, p.over_out);
                }
            }
        }
        let mut roots: Vec<usize> = (0..self.semiarc_count).map(|i| uf.find(i)).collect();
        roots.sort_unstable();
        roots.dedup();
        Ok(roots.len())
    }

    /// Loop count of the all-oriented state: the Seifert circle count.
    pub fn seifert_circles(&self) -> usize {
        let state = SmoothingState::from_bits(self.crossing_count(), 0);
        self.state_loop_count(&state).expect("all-oriented state covers every crossing")
    }
}

// ---------------------------------------------------------------------------
// Random framed moves for invariance testing
// ---------------------------------------------------------------------------

/// Framed moves available to [`FramedDiagram::reidemeister_perturb`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FramedMove {
    /// Insert a +1 and a -1 curl adjacently; writhe preserved.
    FramedR1Pair,
    /// Push one strand over another: two new crossings of opposite sign.
    R2,
    /// Re-encode the diagram: rotate components, relabel crossings,
    /// permute component order.
    Detour,
}

/// SplitMix64; deterministic across platforms.
pub struct Prng {
    state: u64,
}

impl Prng {
    pub fn new(seed: u64) -> Self {
        Prng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n.max(1) as u64) as usize
    }
}

impl FramedDiagram {
    /// Apply one random framed move at a seeded random site. The result is
    /// a diagram of the same framed link type with the same writhe.
    pub fn reidemeister_perturb(&self, mv: FramedMove, seed: u64) -> FramedDiagram {
        let mut rng = Prng::new(seed);
        match mv {
            FramedMove::FramedR1Pair => self.perturb_r1_pair(&mut rng),
            FramedMove::R2 => self.perturb_r2(&mut rng),
            FramedMove::Detour => self.perturb_detour(&mut rng),
        }
    }

    fn perturb_r1_pair(&self, rng: &mut Prng) -> FramedDiagram {
        let comp = rng.below(self.components.len());
        let pos = rng.below(self.components[comp].len() + 1);
        let s: i8 = if rng.below(2) == 0 { 1 } else { -1 };
        let mut components = self.components.clone();
        let mut signs = self.signs.clone();
        let a = signs.len();
        let b = a + 1;
        signs.push(s);
        signs.push(-s);
        let insert = [
            Pass { crossing: a, role: Role::Over },
            Pass { crossing: a, role: Role::Under },
            Pass { crossing: b, role: Role::Under },
            Pass { crossing: b, role: Role::Over },
        ];
        components[comp].splice(pos..pos, insert);
        FramedDiagram::new(components, signs).expect("R1 pair keeps the diagram well-formed")
    }

    fn perturb_r2(&self, rng: &mut Prng) -> FramedDiagram {
        let over_comp = rng.below(self.components.len());
        let under_comp = rng.below(self.components.len());
        let s: i8 = if rng.below(2) == 0 { 1 } else { -1 };
        let mut components = self.components.clone();
        let mut signs = self.signs.clone();
        let a = signs.len();
        let b = a + 1;
        signs.push(s);
        signs.push(-s);
        let over_insert = [
            Pass { crossing: a, role: Role::Over },
            Pass { crossing: b, role: Role::Over },
        ];
        let under_insert = [
            Pass { crossing: a, role: Role::Under },
            Pass { crossing: b, role: Role::Under },
        ];
        if over_comp == under_comp {
            let len = components[over_comp].len();
            let p1 = rng.below(len + 1);
            let p2 = rng.below(len + 1);
            let (first_pos, first_ins, second_pos, second_ins) = if p1 <= p2 {
                (p2, under_insert, p1, over_insert)
            } else {
                (p1, over_insert, p2, under_insert)
            };
            components[over_comp].splice(first_pos..first_pos, first_ins);
            components[over_comp].splice(second_pos..second_pos, second_ins);
        } else {
            let p_over = rng.below(components[over_comp].len() + 1);
            let p_under = rng.below(components[under_comp].len() + 1);
            components[over_comp].splice(p_over..p_over, over_insert);
            components[under_comp].splice(p_under..p_under, under_insert);
        }
        FramedDiagram::new(components, signs).expect("R2 insertion keeps the diagram well-formed")
    }

    fn perturb_detour(&self, rng: &mut Prng) -> FramedDiagram {
        let mut components = self.components.clone();
        for comp in components.iter_mut() {
            if comp.len() > 1 {
                let shift = rng.below(comp.len());
                comp.rotate_left(shift);
            }
        }
        // Random crossing relabeling.
        let c = self.signs.len();
        let mut perm: Vec<usize> = (0..c).collect();
        for i in (1..c).rev() {
            let j = rng.below(i + 1);
            perm.swap(i, j);
        }
        let mut signs = vec![0i8; c];
        for (old, &new) in perm.iter().enumerate() {
            signs[new] = self.signs[old];
        }
        for comp in components.iter_mut() {
            for p in comp.iter_mut() {
                p.crossing = perm[p.crossing];
            }
        }
        // Random component permutation.
        let m = components.len();
        for i in (1..m).rev() {
            let j = rng.below(i + 1);
            components.swap(i, j);
        }
        FramedDiagram::new(components, signs).expect("detour keeps the diagram well-formed")
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_structure() {
        let d = fixtures::trefoil();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.semiarc_count(), 6);
        assert_eq!(d.writhe(), 3);
    }

    #[test]
    fn one_kink_unknot() {
        let d = FramedDiagram::parse_gauss_code("O1+ U1+").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.semiarc_count(), 2);
        assert_eq!(d.writhe(), 1);
    }

    #[test]
    fn hopf_two_components() {
        let d = fixtures::hopf_doubly_over();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe(), 2);
    }

    #[test]
    fn double_visit_same_role_rejected() {
        let err = FramedDiagram::parse_gauss_code("O1+ O1+ / U2+ U2+").unwrap_err();
        assert!(matches!(err, DiagramError::Structure { .. }));
    }

    #[test]
    fn sign_conflict_rejected() {
        let err = FramedDiagram::parse_gauss_code("O1+ U1-").unwrap_err();
        assert!(matches!(err, DiagramError::SignConflict { crossing: 1 }));
    }

    #[test]
    fn free_loop_component() {
        let d = FramedDiagram::parse_gauss_code("O1+ U1+ / 0").unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.semiarc_count(), 3);
        assert_eq!(d.free_loop_semiarcs().len(), 1);
    }

    #[test]
    fn stray_separators_and_empty_input_rejected() {
        assert!(matches!(
            FramedDiagram::parse_gauss_code("O1+ U1+ /"),
            Err(DiagramError::Parse { .. })
        ));
        assert!(matches!(FramedDiagram::parse_gauss_code(""), Err(DiagramError::Parse { .. })));
        // Error positions point at the offending token.
        match FramedDiagram::parse_gauss_code("O1+ X2+") {
            Err(DiagramError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn gauss_round_trip() {
        for code in ["O1+ U2+ O3+ U1+ O2+ U3+", "O1+ O2+ / U1+ U2+", "O1- U1- / 0"] {
            let d = FramedDiagram::parse_gauss_code(code).unwrap();
            let d2 = FramedDiagram::parse_gauss_code(&d.to_gauss_code()).unwrap();
            assert_eq!(d.to_gauss_code(), d2.to_gauss_code());
        }
    }

    #[test]
    fn unknot_with_opposite_kinks_has_writhe_zero() {
        let d = FramedDiagram::parse_gauss_code("O1+ U1+ O2- U2-").unwrap();
        assert_eq!(d.writhe(), 0);
    }

    #[test]
    fn add_kinks_changes_writhe() {
        let d = FramedDiagram::unknot().add_kinks(0, 1);
        assert_eq!(d.to_gauss_code(), "O1+ U1+");
        let e = fixtures::trefoil().add_kinks(0, -2);
        assert_eq!(e.writhe(), 1);
        let same = fixtures::trefoil().add_kinks(0, 0);
        assert_eq!(same, fixtures::trefoil());
    }

    #[test]
    fn trefoil_state_loop_counts() {
        let d = fixtures::trefoil();
        // All-oriented: 2 loops (the Seifert circles of the trefoil).
        assert_eq!(d.state_loop_count(&SmoothingState::from_bits(3, 0b000)).unwrap(), 2);
        // All-disoriented: 3 loops.
        assert_eq!(d.state_loop_count(&SmoothingState::from_bits(3, 0b111)).unwrap(), 3);
        // Exactly one disoriented: 1 loop, whichever crossing it is.
        for bits in [0b001, 0b010, 0b100] {
            assert_eq!(d.state_loop_count(&SmoothingState::from_bits(3, bits)).unwrap(), 1);
        }
        assert_eq!(d.seifert_circles(), 2);
    }

    #[test]
    fn unknot_empty_state_one_loop() {
        let d = FramedDiagram::unknot();
        assert_eq!(d.state_loop_count(&SmoothingState::from_bits(0, 0)).unwrap(), 1);
    }

    #[test]
    fn figure8_structure() {
        let d = fixtures::figure8();
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.seifert_circles(), 3);
        for k in [-4i64, -1, 2] {
            assert_eq!(d.add_kinks(0, k).writhe(), k);
        }
    }

    #[test]
    fn l2a1_pd_is_the_negative_hopf() {
        let d = fixtures::l2a1_pd();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe(), -2);
        assert_eq!(d.seifert_circles(), 2);
    }

    #[test]
    fn l4a1_pd_structure() {
        let d = fixtures::l4a1_pd();
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe().abs(), 4);
    }

    #[test]
    fn pd_trefoil_matches_gauss_trefoil_loops() {
        // The table PD of the trefoil is the left-handed diagram; loop
        // counts of states are independent of handedness.
        let pd = FramedDiagram::parse_pd_code("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]").unwrap();
        assert_eq!(pd.crossing_count(), 3);
        assert_eq!(pd.writhe(), -3);
        let gauss = fixtures::trefoil();
        for bits in 0..8u64 {
            let s = SmoothingState::from_bits(3, bits);
            assert_eq!(
                pd.state_loop_count(&s).unwrap(),
                gauss.state_loop_count(&s).unwrap(),
            );
        }
    }

    #[test]
    fn empty_pd_is_unknot() {
        let d = FramedDiagram::parse_pd_code("").unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn pd_component_with_no_underpasses_uses_numbering_fallback() {
        // One component passes over at both crossings, so head/tail
        // propagation stalls and consecutive edge numbering decides the
        // over directions.
        let d = FramedDiagram::parse_pd_code("X[3,2,4,1], X[4,1,3,2]").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe(), -2);
        // The same diagram with non-consecutive labels on the all-over
        // component cannot be oriented at all.
        let err = FramedDiagram::parse_pd_code("X[3,5,4,1], X[4,1,3,5]").unwrap_err();
        assert!(matches!(err, DiagramError::Parse { .. }));
    }

    #[test]
    fn loop_count_bounds_hold_under_perturbation() {
        let d = fixtures::trefoil();
        let mut current = d;
        for seed in 0..30u64 {
            let mv = match seed % 3 {
                0 => FramedMove::FramedR1Pair,
                1 => FramedMove::R2,
                _ => FramedMove::Detour,
            };
            current = current.reidemeister_perturb(mv, seed);
            assert_eq!(current.writhe(), 3);
            let c = current.crossing_count();
            for _ in 0..10 {
                let bits = Prng::new(seed).next_u64() & ((1 << c) - 1);
                let k = current.state_loop_count(&SmoothingState::from_bits(c, bits)).unwrap();
                assert!(k >= 1 && k <= c + current.component_count());
            }
        }
    }

    #[test]
    fn detour_preserves_loop_counts_up_to_relabeling() {
        let d = fixtures::trefoil();
        let e = d.reidemeister_perturb(FramedMove::Detour, 7);
        assert_eq!(e.crossing_count(), 3);
        assert_eq!(e.writhe(), 3);
        // Loop-count multiset over all states is relabeling-invariant.
        let mut counts_d: Vec<usize> = (0..8)
            .map(|b| d.state_loop_count(&SmoothingState::from_bits(3, b)).unwrap())
            .collect();
        let mut counts_e: Vec<usize> = (0..8)
            .map(|b| e.state_loop_count(&SmoothingState::from_bits(3, b)).unwrap())
            .collect();
        counts_d.sort_unstable();
        counts_e.sort_unstable();
        assert_eq!(counts_d, counts_e);
    }

    #[test]
    fn reverse_component_flips_linking_signs() {
        let d = fixtures::l2a1_pd();
        let r = d.reverse_component(1);
        assert_eq!(r.writhe(), 2);
        let rr = r.reverse_component(1);
        assert_eq!(rr.writhe(), -2);
    }

    #[test]
    fn disjoint_union_adds_loop() {
        let d = fixtures::trefoil().disjoint_union(&FramedDiagram::unknot());
        assert_eq!(d.component_count(), 2);
        for bits in 0..8u64 {
            let s = SmoothingState::from_bits(3, bits);
            assert_eq!(
                d.state_loop_count(&s).unwrap(),
                fixtures::trefoil().state_loop_count(&s).unwrap() + 1
            );
        }
    }
}
