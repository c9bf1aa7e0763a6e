//! Coloring quivers and their decategorified polynomials.
//!
//! Vertices are the colorings of a diagram; for every endomorphism in the
//! chosen set S there is one labeled edge from each coloring to its
//! post-composition. With a bracket attached, vertices carry state-sum
//! weights and the quiver decategorifies to the in-degree, two-variable
//! and maximal-path polynomials.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::birack::FiniteBirack;
use crate::bracket::{self, exponent_suffix, BirackBracket, BracketError};
use crate::diagram::FramedDiagram;
use crate::homset::{self, Coloring};
use crate::ring::{RElem, RingSpec};

pub const DEFAULT_MAX_PATHS: usize = 1_000_000;

#[derive(Clone, Debug)]
pub enum QuiverError {
    /// A supplied map is not an endomorphism of the birack.
    NotEndomorphism { index: usize },
    /// Polynomial extraction needs vertex weights.
    Unweighted,
    /// Maximal-path enumeration exceeded the configured limit.
    Resource { paths: usize, limit: usize },
    Bracket(BracketError),
}

impl fmt::Display for QuiverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverError::NotEndomorphism { index } => {
                write!(f, "map {} is not a birack endomorphism", index)
            }
            QuiverError::Unweighted => write!(f, "quiver has no bracket weights"),
            QuiverError::Resource { paths, limit } => {
                write!(f, "maximal-path enumeration hit {} paths (limit {})", paths, limit)
            }
            QuiverError::Bracket(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for QuiverError {}

impl From<BracketError> for QuiverError {
    fn from(e: BracketError) -> Self {
        QuiverError::Bracket(e)
    }
}

/// A coloring quiver, optionally weighted by bracket values.
#[derive(Clone, Debug, PartialEq)]
pub struct ColoringQuiver {
    vertices: Vec<Coloring>,
    weights: Option<(RingSpec, Vec<RElem>)>,
    /// (source, target, endomorphism index).
    edges: Vec<(usize, usize, usize)>,
    endos: Vec<Vec<usize>>,
}

impl ColoringQuiver {
    pub fn vertices(&self) -> &[Coloring] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn endos(&self) -> &[Vec<usize>] {
        &self.endos
    }

    pub fn weight(&self, v: usize) -> Option<&RElem> {
        self.weights.as_ref().map(|(_, w)| &w[v])
    }

    pub fn ring(&self) -> Option<&RingSpec> {
        self.weights.as_ref().map(|(r, _)| r)
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|(s, _, _)| *s == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|(_, t, _)| *t == v).count()
    }
}

/// Build the coloring quiver of a diagram for an endomorphism set, with
/// vertex weights from `bracket` when one is given.
pub fn build_quiver(
    diagram: &FramedDiagram,
    birack: &FiniteBirack,
    endos: &[Vec<usize>],
    bracket: Option<&BirackBracket>,
) -> Result<ColoringQuiver, QuiverError> {
    for (i, f) in endos.iter().enumerate() {
        if !birack.check_homomorphism(f).unwrap_or(false) {
            return Err(QuiverError::NotEndomorphism { index: i });
        }
    }
    let vertices = homset::enumerate_colorings(diagram, birack);
    let index: HashMap<&Coloring, usize> = vertices.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut edges = Vec::with_capacity(vertices.len() * endos.len());
    for (vi, coloring) in vertices.iter().enumerate() {
        for (ei, endo) in endos.iter().enumerate() {
            let image = homset::apply_endo(coloring, endo);
            let ti = *index
                .get(&image)
                .expect("homset is closed under post-composition with endomorphisms");
            edges.push((vi, ti, ei));
        }
    }
    let weights = match bracket {
        None => None,
        Some(bk) => {
            let mut w = Vec::with_capacity(vertices.len());
            for c in &vertices {
                w.push(bracket::state_sum(diagram, birack, bk, c)?);
            }
            Some((bk.ring().clone(), w))
        }
    };
    Ok(ColoringQuiver { vertices, weights, edges, endos: endos.to_vec() })
}

// ---------------------------------------------------------------------------
// Decategorified polynomials
// ---------------------------------------------------------------------------

/// Which vertex degree the degree polynomial reads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeMode {
    In,
    Out,
}

/// How the length of a maximal path is counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathLength {
    Edges,
    Vertices,
}

/// A two-exponent polynomial with multiplicities, kept in canonical
/// descending term order.
#[derive(Clone, Debug, PartialEq)]
pub enum DecatPolynomial {
    /// Terms ((weight, degree), multiplicity).
    Degree { ring: RingSpec, terms: Vec<((RElem, usize), usize)> },
    /// Terms ((source weight, target weight), multiplicity).
    TwoVariable { ring: RingSpec, terms: Vec<((RElem, RElem), usize)> },
    /// Terms ((path weight sum, path length), multiplicity).
    MaximalPath { ring: RingSpec, terms: Vec<((RElem, usize), usize)> },
}

impl DecatPolynomial {
    /// Render with the given variable pair, e.g. `("u", "v")` or
    /// `("s", "t")`.
    pub fn display(&self, var1: &str, var2: &str) -> String {
        let term_strings: Vec<String> = match self {
            DecatPolynomial::Degree { ring, terms } | DecatPolynomial::MaximalPath { ring, terms } => terms
                .iter()
                .map(|((w, d), m)| {
                    format!(
                        "{}{}{}{}{}",
                        if *m == 1 { String::new() } else { m.to_string() },
                        var1,
                        exponent_suffix(&ring.format(w)),
                        var2,
                        exponent_suffix(&d.to_string()),
                    )
                })
                .collect(),
            DecatPolynomial::TwoVariable { ring, terms } => terms
                .iter()
                .map(|((s, t), m)| {
                    format!(
                        "{}{}{}{}{}",
                        if *m == 1 { String::new() } else { m.to_string() },
                        var1,
                        exponent_suffix(&ring.format(s)),
                        var2,
                        exponent_suffix(&ring.format(t)),
                    )
                })
                .collect(),
        };
        if term_strings.is_empty() {
            "0".to_string()
        } else {
            term_strings.join("+")
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut arr = Vec::new();
        match self {
            DecatPolynomial::Degree { ring, terms } | DecatPolynomial::MaximalPath { ring, terms } => {
                for ((w, d), m) in terms {
                    arr.push(serde_json::json!({
                        "exp1": ring.format(w),
                        "exp2": d,
                        "mult": m,
                    }));
                }
            }
            DecatPolynomial::TwoVariable { ring, terms } => {
                for ((s, t), m) in terms {
                    arr.push(serde_json::json!({
                        "exp1": ring.format(s),
                        "exp2": ring.format(t),
                        "mult": m,
                    }));
                }
            }
        }
        serde_json::Value::Array(arr)
    }
}

fn require_weights(q: &ColoringQuiver) -> Result<(&RingSpec, &Vec<RElem>), QuiverError> {
    match &q.weights {
        Some((ring, w)) => Ok((ring, w)),
        None => Err(QuiverError::Unweighted),
    }
}

/// Degree polynomial: one term `u^{weight(v)} v^{degree(v)}` per vertex.
/// `DegreeMode::In` is the default reading; `Out` is the variant.
pub fn degree_polynomial(q: &ColoringQuiver, mode: DegreeMode) -> Result<DecatPolynomial, QuiverError> {
    let (ring, w) = require_weights(q)?;
    let mut tally: HashMap<(RElem, usize), usize> = HashMap::new();
    for (v, weight) in w.iter().enumerate() {
        let deg = match mode {
            DegreeMode::In => q.in_degree(v),
            DegreeMode::Out => q.out_degree(v),
        };
        *tally.entry((weight.clone(), deg)).or_insert(0) += 1;
    }
    let mut terms: Vec<((RElem, usize), usize)> = tally.into_iter().collect();
    terms.sort_by(|((w1, d1), _), ((w2, d2), _)| {
        ring.canonical_cmp(w1, w2).then(d2.cmp(d1))
    });
    Ok(DecatPolynomial::Degree { ring: ring.clone(), terms })
}

pub fn in_degree_polynomial(q: &ColoringQuiver) -> Result<DecatPolynomial, QuiverError> {
    degree_polynomial(q, DegreeMode::In)
}

/// Two-variable polynomial: one term `s^{weight(source)} t^{weight(target)}`
/// per edge.
pub fn two_variable_polynomial(q: &ColoringQuiver) -> Result<DecatPolynomial, QuiverError> {
    let (ring, w) = require_weights(q)?;
    let mut tally: HashMap<(RElem, RElem), usize> = HashMap::new();
    for (s, t, _) in &q.edges {
        *tally.entry((w[*s].clone(), w[*t].clone())).or_insert(0) += 1;
    }
    let mut terms: Vec<((RElem, RElem), usize)> = tally.into_iter().collect();
    terms.sort_by(|((s1, t1), _), ((s2, t2), _)| {
        ring.canonical_cmp(s1, s2).then(ring.canonical_cmp(t1, t2))
    });
    Ok(DecatPolynomial::TwoVariable { ring: ring.clone(), terms })
}

// ---------------------------------------------------------------------------
// Maximal non-repeating paths
// ---------------------------------------------------------------------------

/// All maximal non-repeating directed paths: simple vertex paths that
/// cannot be extended at either end. Single vertices count as length-0
/// paths (a self-loop blocks its own extension).
pub fn maximal_paths(q: &ColoringQuiver, limit: usize) -> Result<Vec<Vec<usize>>, QuiverError> {
    let n = q.vertices.len();
    let mut succ: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    let mut pred: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for (s, t, _) in &q.edges {
        succ[*s].insert(*t);
        pred[*t].insert(*s);
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for start in 0..n {
        let mut path = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        extend(
            &succ,
            &pred,
            &mut path,
            &mut on_path,
            &mut out,
            &mut seen,
            limit,
        )?;
    }
    out.sort_unstable();
    Ok(out)
}

fn extend(
    succ: &[HashSet<usize>],
    pred: &[HashSet<usize>],
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    seen: &mut HashSet<Vec<usize>>,
    limit: usize,
) -> Result<(), QuiverError> {
    let tail = *path.last().unwrap();
    let mut extended = false;
    for &next in &succ[tail] {
        if !on_path[next] {
            extended = true;
            path.push(next);
            on_path[next] = true;
            extend(succ, pred, path, on_path, out, seen, limit)?;
            on_path[next] = false;
            path.pop();
        }
    }
    if !extended {
        // Tail-maximal; keep only head-maximal paths.
        let head = path[0];
        if pred[head].iter().all(|p| on_path[*p]) && seen.insert(path.clone()) {
            out.push(path.clone());
            if out.len() > limit {
                return Err(QuiverError::Resource { paths: out.len(), limit });
            }
        }
    }
    Ok(())
}

/// Maximal-path polynomial: one term `x^{sum of vertex weights} y^{length}`
/// per maximal path.
pub fn maximal_path_polynomial(
    q: &ColoringQuiver,
    length: PathLength,
    limit: usize,
) -> Result<DecatPolynomial, QuiverError> {
    let (ring, w) = require_weights(q)?;
    let paths = maximal_paths(q, limit)?;
    let mut tally: HashMap<(RElem, usize), usize> = HashMap::new();
    for p in &paths {
        let mut sum = ring.zero();
        for &v in p {
            sum = ring.add(&sum, &w[v]).map_err(BracketError::Ring)?;
        }
        let len = match length {
            PathLength::Edges => p.len() - 1,
            PathLength::Vertices => p.len(),
        };
        *tally.entry((sum, len)).or_insert(0) += 1;
    }
    let mut terms: Vec<((RElem, usize), usize)> = tally.into_iter().collect();
    terms.sort_by(|((w1, d1), _), ((w2, d2), _)| {
        ring.canonical_cmp(w1, w2).then(d2.cmp(d1))
    });
    Ok(DecatPolynomial::MaximalPath { ring: ring.clone(), terms })
}

// ---------------------------------------------------------------------------
// Export and canonical form
// ---------------------------------------------------------------------------

/// Deterministic DOT rendering: vertex labels carry the coloring id and
/// weight, edge labels the endomorphism index.
pub fn export_dot(q: &ColoringQuiver) -> String {
    if q.vertices.is_empty() {
        return "digraph { }".to_string();
    }
    let mut out = String::from("digraph {\n");
    for (i, _) in q.vertices.iter().enumerate() {
        let label = match (&q.weights, q.ring()) {
            (Some((ring, w)), _) => format!("v{} \u{03b2}={}", i, ring.format(&w[i])),
            _ => format!("v{}", i),
        };
        out.push_str(&format!("  v{} [label=\"{}\"];\n", i, label));
    }
    for (s, t, e) in &q.edges {
        out.push_str(&format!("  v{} -> v{} [label=\"s{}\"];\n", s, t, e + 1));
    }
    out.push('}');
    out
}

/// Quiver JSON dump: vertices with colorings and weights, edge triples.
pub fn to_json(q: &ColoringQuiver) -> serde_json::Value {
    let vertices: Vec<serde_json::Value> = q
        .vertices
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut obj = serde_json::Map::new();
            obj.insert("coloring".to_string(), serde_json::json!(c));
            if let Some((ring, w)) = &q.weights {
                obj.insert("weight".to_string(), serde_json::json!(ring.format(&w[i])));
            }
            serde_json::Value::Object(obj)
        })
        .collect();
    serde_json::json!({
        "vertices": vertices,
        "edges": q.edges.iter().map(|(s, t, e)| serde_json::json!([s, t, e])).collect::<Vec<_>>(),
    })
}

/// Isomorphism-invariant canonical form via color refinement over the
/// weighted, edge-labeled adjacency structure. Equal strings for
/// isomorphic quivers; used by the move-invariance tests.
pub fn canonical_form(q: &ColoringQuiver) -> String {
    let n = q.vertices.len();
    let mut colors: Vec<String> = (0..n)
        .map(|v| match (&q.weights, ()) {
            (Some((ring, w)), _) => ring.format(&w[v]),
            _ => String::new(),
        })
        .collect();
    for _ in 0..n.max(1) {
        let mut next: Vec<String> = Vec::with_capacity(n);
        for v in 0..n {
            let mut outs: Vec<String> = q
                .edges
                .iter()
                .filter(|(s, _, _)| *s == v)
                .map(|(_, t, e)| format!("o{}:{}", e, colors[*t]))
                .collect();
            outs.sort();
            let mut ins: Vec<String> = q
                .edges
                .iter()
                .filter(|(_, t, _)| *t == v)
                .map(|(s, _, e)| format!("i{}:{}", e, colors[*s]))
                .collect();
            ins.sort();
            next.push(format!("[{}|{}|{}]", colors[v], outs.join(","), ins.join(",")));
        }
        if next == colors {
            break;
        }
        colors = next;
    }
    let mut sorted = colors;
    sorted.sort();
    sorted.join(";")
}
