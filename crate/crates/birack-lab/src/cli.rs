//! Command-line interface: file-based access to every library operation.
//!
//! Exit codes: 0 success, 1 domain error (axiom violation, parse failure),
//! 2 usage error.

use std::collections::HashMap;
use std::fs;

use crate::birack::{validate_tables, FiniteBirack};
use crate::bracket::{self, BirackBracket};
use crate::diagram::{FramedDiagram, FramedMove};
use crate::homset;
use crate::quiver::{self, DegreeMode, PathLength};
use crate::ring::RingSpec;
use crate::search::{self, SearchConfig};

const USAGE: &str = "usage: birack-lab <command> [flags]

commands:
  validate-birack <file> | --birack <file>
      check the framed birack axioms; report kink map and rank
  endos --birack <file>
      list all endomorphisms as image lists
  color --diagram <file> --birack <file> [--count] [--format text|json]
      enumerate colorings (the homset) or just count them
  validate-bracket --birack <file> --bracket <file> [--format text|json]
      check the bracket axioms; report delta, writhe weights, homogeneity
  bracket --diagram <file> --birack <file> --bracket <file>
          [--format text|json] [--jobs N]
      evaluate the state-sum multiset invariant and its polynomial
  search-brackets --birack <file> --ring Z<n> [--limit N] [--delta V]
          [--homogeneous] [--seed <file>]
      enumerate coefficient matrices satisfying the bracket axioms
  quiver --diagram <file> --birack <file> [--bracket <file>]
          [--endos all|L1;L2;...] [--poly deg|two|mp] [--degree in|out]
          [--path-length edges|vertices] [--vars st|uv]
          [--format text|json|dot]
      build the coloring quiver and extract polynomials or DOT
  perturb --diagram <file> --move r1pair|r2|detour --seed <n>
      apply one random framed move; print the resulting Gauss code

diagram files hold a signed Gauss code (O1+ U2+ ... , components
separated by /) or a PD code (X[a,b,c,d], ...). birack files: n, the
under table, a blank line, the over table. bracket files: a ring line
(Z5, GAUSS, LAURENT q) then n rows of 2n entries [A|B].
";

pub fn run(args: &[String]) -> i32 {
    match dispatch(args) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("{}", msg);
            eprint!("{}", USAGE);
            2
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("{}", msg);
            1
        }
    }
}

enum CliError {
    Usage(String),
    Domain(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

struct Flags {
    values: HashMap<String, String>,
    switches: Vec<String>,
    positional: Vec<String>,
}

const VALUE_FLAGS: &[&str] = &[
    "--diagram", "--birack", "--bracket", "--ring", "--limit", "--delta", "--seed", "--endos",
    "--poly", "--degree", "--path-length", "--vars", "--format", "--move", "--jobs",
];
const SWITCH_FLAGS: &[&str] = &["--count", "--homogeneous"];

fn parse_flags(args: &[String]) -> Result<Flags, CliError> {
    let mut flags = Flags { values: HashMap::new(), switches: Vec::new(), positional: Vec::new() };
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        if VALUE_FLAGS.contains(&arg.as_str()) {
            let value = args
                .get(i + 1)
                .ok_or_else(|| usage(format!("{} needs a value", arg)))?
                .clone();
            flags.values.insert(arg.clone(), value);
            i += 2;
        } else if SWITCH_FLAGS.contains(&arg.as_str()) {
            flags.switches.push(arg.clone());
            i += 1;
        } else if arg.starts_with("--") {
            return Err(usage(format!("unknown flag {}", arg)));
        } else {
            flags.positional.push(arg.clone());
            i += 1;
        }
    }
    Ok(flags)
}

impl Flags {
    fn value(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(|s| s.as_str())
    }

    fn required(&self, name: &str) -> Result<&str, CliError> {
        self.value(name).ok_or_else(|| usage(format!("missing {}", name)))
    }

    fn has(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }

    fn format(&self) -> &str {
        self.value("--format").unwrap_or("text")
    }

    fn jobs(&self) -> usize {
        self.value("--jobs")
            .map(str::to_string)
            .or_else(|| std::env::var("BIRACK_LAB_JOBS").ok())
            .and_then(|s| s.parse().ok())
            .unwrap_or(1)
    }
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Domain(format!("{}: {}", path, e)))
}

fn load_birack(path: &str) -> Result<FiniteBirack, CliError> {
    FiniteBirack::from_text(&read(path)?).map_err(|e| CliError::Domain(format!("{}: {}", path, e)))
}

fn load_diagram(path: &str) -> Result<FramedDiagram, CliError> {
    let text = read(path)?;
    let trimmed = text.trim();
    let result = if trimmed.starts_with('X') || trimmed.starts_with("PD") {
        FramedDiagram::parse_pd_code(trimmed)
    } else {
        FramedDiagram::parse_gauss_code(trimmed)
    };
    result.map_err(|e| CliError::Domain(format!("{}: {}", path, e)))
}

fn load_bracket(path: &str, birack: &FiniteBirack) -> Result<BirackBracket, CliError> {
    BirackBracket::from_text(birack, &read(path)?)
        .map_err(|e| CliError::Domain(format!("{}: {}", path, e)))
}

fn dispatch(args: &[String]) -> Result<(), CliError> {
    let Some(command) = args.first() else {
        return Err(usage("no command given"));
    };
    let flags = parse_flags(&args[1..])?;
    match command.as_str() {
        "validate-birack" => cmd_validate_birack(&flags),
        "endos" => cmd_endos(&flags),
        "color" => cmd_color(&flags),
        "validate-bracket" => cmd_validate_bracket(&flags),
        "bracket" => cmd_bracket(&flags),
        "search-brackets" => cmd_search(&flags),
        "quiver" => cmd_quiver(&flags),
        "perturb" => cmd_perturb(&flags),
        "help" | "--help" | "-h" => {
            print!("{}", USAGE);
            Ok(())
        }
        other => Err(usage(format!("unknown command {:?}", other))),
    }
}

fn cmd_validate_birack(flags: &Flags) -> Result<(), CliError> {
    let path = flags
        .value("--birack")
        .or_else(|| flags.positional.first().map(|s| s.as_str()))
        .ok_or_else(|| usage("validate-birack needs a birack file"))?;
    let text = read(path)?;
    // Parse tables without the validity requirement so reports can show
    // every violation.
    let (under, over) =
        split_tables(&text).map_err(|e| CliError::Domain(format!("{}: {}", path, e)))?;
    let report = validate_tables(&under, &over);
    if !report.valid {
        for v in &report.violations {
            eprintln!("{}: {}", path, v);
        }
        return Err(CliError::Domain(format!(
            "{}: {} axiom violation(s)",
            path,
            report.violations.len()
        )));
    }
    let birack = FiniteBirack::from_tables(under, over)
        .map_err(|e| CliError::Domain(format!("{}: {}", path, e)))?;
    if flags.format() == "json" {
        let value = serde_json::json!({
            "valid": true,
            "size": birack.size(),
            "kink_map": birack.kink_map(),
            "rank": birack.rank(),
            "biquandle": birack.is_biquandle(),
        });
        println!("{}", value);
    } else {
        println!("valid birack on {} elements", birack.size());
        println!("kink map: {:?}", birack.kink_map());
        println!("rank: {}", birack.rank());
        if birack.is_biquandle() {
            println!("biquandle: yes");
        }
    }
    Ok(())
}

type TablePair = (Vec<Vec<usize>>, Vec<Vec<usize>>);

fn split_tables(text: &str) -> Result<TablePair, String> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or("empty input")?
        .parse()
        .map_err(|_| "line 1 must be the element count".to_string())?;
    let rows: Vec<Vec<usize>> = lines
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse().map_err(|_| format!("bad integer {:?}", t)))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if rows.len() != 2 * n {
        return Err(format!("expected {} table rows, found {}", 2 * n, rows.len()));
    }
    let mut under = rows;
    let over = under.split_off(n);
    Ok((under, over))
}

fn cmd_endos(flags: &Flags) -> Result<(), CliError> {
    let birack = load_birack(flags.required("--birack")?)?;
    let endos = birack.endomorphisms();
    if flags.format() == "json" {
        println!("{}", serde_json::json!(endos));
    } else {
        for f in endos {
            let images: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            println!("[{}]", images.join(","));
        }
    }
    Ok(())
}

fn cmd_color(flags: &Flags) -> Result<(), CliError> {
    let diagram = load_diagram(flags.required("--diagram")?)?;
    let birack = load_birack(flags.required("--birack")?)?;
    let colorings = homset::enumerate_colorings(&diagram, &birack);
    if flags.has("--count") {
        println!("{}", colorings.len());
        return Ok(());
    }
    if flags.format() == "json" {
        let arr: Vec<serde_json::Value> = colorings
            .iter()
            .map(|c| {
                let map: serde_json::Map<String, serde_json::Value> = c
                    .iter()
                    .enumerate()
                    .map(|(s, v)| (s.to_string(), serde_json::json!(v)))
                    .collect();
                serde_json::Value::Object(map)
            })
            .collect();
        println!("{}", serde_json::Value::Array(arr));
    } else {
        println!("{} coloring(s) of {} semiarcs", colorings.len(), diagram.semiarc_count());
        for c in &colorings {
            let cols: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            println!("({})", cols.join(","));
        }
    }
    Ok(())
}

fn cmd_validate_bracket(flags: &Flags) -> Result<(), CliError> {
    let birack = load_birack(flags.required("--birack")?)?;
    let path = flags.required("--bracket")?;
    let (ring, a, b) = bracket::parse_block_matrix(&read(path)?)
        .map_err(|e| CliError::Domain(format!("{}: {}", path, e)))?;
    let report = bracket::validate_bracket(&birack, &a, &b, &ring);
    if !report.valid {
        for v in &report.violations {
            eprintln!("{}: {}", path, v);
        }
        return Err(CliError::Domain(format!(
            "{}: {} bracket axiom violation(s)",
            path,
            report.violations.len()
        )));
    }
    let delta = report.delta.as_ref().unwrap();
    if flags.format() == "json" {
        let value = serde_json::json!({
            "valid": true,
            "delta": ring.format(delta),
            "w": report.w.iter().map(|w| ring.format(w)).collect::<Vec<_>>(),
            "homogeneous": report.homogeneous,
        });
        println!("{}", value);
    } else {
        println!("valid bracket over {}", ring);
        println!("delta: {}", ring.format(delta));
        let w: Vec<String> = report.w.iter().map(|w| ring.format(w)).collect();
        println!("w: [{}]", w.join(", "));
        println!("homogeneous: {}", report.homogeneous);
    }
    Ok(())
}

fn cmd_bracket(flags: &Flags) -> Result<(), CliError> {
    let diagram = load_diagram(flags.required("--diagram")?)?;
    let birack = load_birack(flags.required("--birack")?)?;
    let bracket = load_bracket(flags.required("--bracket")?, &birack)?;
    let multiset = bracket::bracket_multiset_jobs(&diagram, &birack, &bracket, flags.jobs())
        .map_err(|e| CliError::Domain(e.to_string()))?;
    if flags.format() == "json" {
        let ring = bracket.ring();
        let value = serde_json::json!({
            "delta": ring.format(bracket.delta()),
            "w": bracket.w().iter().map(|w| ring.format(w)).collect::<Vec<_>>(),
            "homogeneous": bracket.is_homogeneous(),
            "multiset": multiset.to_json(),
            "polynomial": multiset.polynomial_string(),
        });
        println!("{}", value);
    } else {
        println!("{}", multiset.polynomial_string());
    }
    Ok(())
}

fn cmd_search(flags: &Flags) -> Result<(), CliError> {
    let birack = load_birack(flags.required("--birack")?)?;
    let ring = RingSpec::parse_spec(flags.required("--ring")?)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    let limit: usize = flags
        .value("--limit")
        .map(|s| s.parse().map_err(|_| usage("--limit must be an integer")))
        .transpose()?
        .unwrap_or(0);
    let delta_filter = flags
        .value("--delta")
        .map(|s| ring.parse(s).map_err(|e| CliError::Domain(e.to_string())))
        .transpose()?;
    let (seed_a, seed_b) = match flags.value("--seed") {
        None => (None, None),
        Some(path) => {
            let (seed_ring, a, b) = search::parse_seed(&read(path)?)
                .map_err(|e| CliError::Domain(format!("{}: {}", path, e)))?;
            if seed_ring != ring {
                return Err(CliError::Domain(format!(
                    "{}: seed ring {} does not match --ring {}",
                    path, seed_ring, ring
                )));
            }
            (Some(a), Some(b))
        }
    };
    let cfg = SearchConfig {
        ring,
        limit,
        delta_filter,
        homogeneous_only: flags.has("--homogeneous"),
        seed_a,
        seed_b,
    };
    let results =
        search::search_brackets(&birack, &cfg).map_err(|e| CliError::Domain(e.to_string()))?;
    let mut first = true;
    for bracket in &results {
        if !first {
            println!();
        }
        first = false;
        print!("{}", bracket.to_text());
    }
    eprintln!("{} bracket(s)", results.len());
    Ok(())
}

fn cmd_quiver(flags: &Flags) -> Result<(), CliError> {
    let diagram = load_diagram(flags.required("--diagram")?)?;
    let birack = load_birack(flags.required("--birack")?)?;
    let bracket = flags.value("--bracket").map(|p| load_bracket(p, &birack)).transpose()?;
    let endos = match flags.value("--endos").unwrap_or("all") {
        "all" => birack.endomorphisms(),
        list => parse_endo_list(list, birack.size())?,
    };
    let q = quiver::build_quiver(&diagram, &birack, &endos, bracket.as_ref())
        .map_err(|e| CliError::Domain(e.to_string()))?;
    match flags.format() {
        "dot" => {
            println!("{}", quiver::export_dot(&q));
            return Ok(());
        }
        "json" if flags.value("--poly").is_none() => {
            println!("{}", quiver::to_json(&q));
            return Ok(());
        }
        _ => {}
    }
    let Some(kind) = flags.value("--poly") else {
        println!("{} vertices, {} edges", q.vertices().len(), q.edges().len());
        return Ok(());
    };
    let poly = match kind {
        "deg" => {
            let mode = match flags.value("--degree").unwrap_or("in") {
                "in" => DegreeMode::In,
                "out" => DegreeMode::Out,
                other => return Err(usage(format!("--degree must be in|out, got {:?}", other))),
            };
            quiver::degree_polynomial(&q, mode)
        }
        "two" => quiver::two_variable_polynomial(&q),
        "mp" => {
            let len = match flags.value("--path-length").unwrap_or("edges") {
                "edges" => PathLength::Edges,
                "vertices" => PathLength::Vertices,
                other => {
                    return Err(usage(format!(
                        "--path-length must be edges|vertices, got {:?}",
                        other
                    )))
                }
            };
            quiver::maximal_path_polynomial(&q, len, quiver::DEFAULT_MAX_PATHS)
        }
        other => return Err(usage(format!("--poly must be deg|two|mp, got {:?}", other))),
    }
    .map_err(|e| CliError::Domain(e.to_string()))?;
    let (v1, v2) = match (kind, flags.value("--vars")) {
        ("two", Some("uv")) => ("u", "v"),
        ("two", _) => ("s", "t"),
        ("mp", _) => ("x", "y"),
        _ => ("u", "v"),
    };
    if flags.format() == "json" {
        println!("{}", poly.to_json());
    } else {
        println!("{}", poly.display(v1, v2));
    }
    Ok(())
}

fn parse_endo_list(text: &str, n: usize) -> Result<Vec<Vec<usize>>, CliError> {
    // Accept "2,3,1" for one map or "[2,3,1];[1,2,3]" for several.
    let mut out = Vec::new();
    for part in text.split(';') {
        let cleaned = part.trim().trim_start_matches('[').trim_end_matches(']');
        let images: Result<Vec<usize>, _> =
            cleaned.split(',').map(|t| t.trim().parse::<usize>()).collect();
        let images = images.map_err(|_| usage(format!("bad endomorphism list {:?}", part)))?;
        if images.len() != n {
            return Err(CliError::Domain(format!(
                "endomorphism {:?} has {} images, expected {}",
                part,
                images.len(),
                n
            )));
        }
        out.push(images);
    }
    Ok(out)
}

fn cmd_perturb(flags: &Flags) -> Result<(), CliError> {
    let diagram = load_diagram(flags.required("--diagram")?)?;
    let mv = match flags.required("--move")? {
        "r1pair" => FramedMove::FramedR1Pair,
        "r2" => FramedMove::R2,
        "detour" => FramedMove::Detour,
        other => return Err(usage(format!("--move must be r1pair|r2|detour, got {:?}", other))),
    };
    let seed: u64 = flags
        .required("--seed")?
        .parse()
        .map_err(|_| usage("--seed must be an integer"))?;
    let out = diagram.reidemeister_perturb(mv, seed);
    println!("{}", out.to_gauss_code());
    Ok(())
}
