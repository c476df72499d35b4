//! Text formats and structured documents.
//!
//! * Graphs: a header `p <n> <m>` and `m` lines `e <u> <v>` (0-based ids).
//! * Grid embeddings: `v <id> <x> <y>` lines appended to a graph.
//! * Interval models: `i <id> <lo_num> <lo_den> <hi_num> <hi_den>` lines with
//!   exact rational endpoints; without a `p` header the graph is the
//!   intersection graph of the model.
//! * 3-CNF formulas in DIMACS form (`p cnf <n> <m>`, clauses ending in `0`).
//! * JSON sidecars for generated instances and JSON result documents, with
//!   keys in a fixed order.
//!
//! In the line formats blank lines and lines starting with `c` are comments.
//! Every parser reports the 1-based line of the first offending line.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::SolveResult;
use crate::graph::{build_graph, Graph, GraphError, VertexId};
use crate::grid::GridEmbedding;
use crate::reductions::intervals::{intersection_graph, ClosedInterval};
use crate::reductions::rational::Rational;
use crate::reductions::sat::{CnfFormula, IntervalInstance, Track};
use crate::reductions::vc::GridPrecursor;

/// Parse and consistency failures of the text formats.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no `p` header and no interval lines")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCount { declared: usize, found: usize },
    #[error("{what} given for some but not all vertices (missing id {missing})")]
    Incomplete { what: &'static str, missing: usize },
    #[error("the interval model does not match the listed edges")]
    ModelMismatch,
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("invalid formula: {0}")]
    Formula(String),
    #[error("malformed JSON document: {0}")]
    Json(String),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-comment lines with their 1-based numbers, split into tokens.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens.first() {
            None => None,
            Some(t) if t.starts_with('c') => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

fn field<T: FromStr>(line: usize, tokens: &[&str], k: usize, what: &str) -> Result<T, FormatError> {
    let t = tokens.get(k).ok_or_else(|| syntax(line, format!("missing {what}")))?;
    t.parse().map_err(|_| syntax(line, format!("bad {what} {t:?}")))
}

fn arity(line: usize, tokens: &[&str], k: usize) -> Result<(), FormatError> {
    if tokens.len() == k {
        Ok(())
    } else {
        Err(syntax(line, format!("expected {k} fields, found {}", tokens.len())))
    }
}

/// A parsed instance file: a graph plus whatever representation came with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub embedding: Option<GridEmbedding>,
    pub intervals: Option<Vec<ClosedInterval>>,
}

/// Fills `slot[id]` once, reporting duplicates and out-of-range ids.
fn place<T>(slots: &mut Vec<Option<T>>, id: usize, value: T, line: usize, n: Option<usize>) -> Result<(), FormatError> {
    if n.is_some_and(|n| id >= n) {
        return Err(syntax(line, format!("id {id} out of range")));
    }
    if slots.len() <= id {
        slots.resize_with(id + 1, || None);
    }
    if slots[id].is_some() {
        return Err(syntax(line, format!("id {id} listed twice")));
    }
    slots[id] = Some(value);
    Ok(())
}

fn complete<T>(slots: Vec<Option<T>>, n: usize, what: &'static str) -> Result<Vec<T>, FormatError> {
    if slots.len() > n {
        return Err(FormatError::Incomplete { what, missing: n });
    }
    let mut out = Vec::with_capacity(n);
    for (id, s) in slots.into_iter().chain(std::iter::repeat_with(|| None)).take(n).enumerate() {
        out.push(s.ok_or(FormatError::Incomplete { what, missing: id })?);
    }
    Ok(out)
}

/// Parses a graph with an optional embedding and an optional interval model.
pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut coords: Vec<Option<(i64, i64)>> = Vec::new();
    let mut intervals: Vec<Option<ClosedInterval>> = Vec::new();
    for (line, t) in records(text) {
        let n = header.map(|h| h.0);
        match t[0] {
            "p" => {
                arity(line, &t, 3)?;
                if header.is_some() {
                    return Err(syntax(line, "second header"));
                }
                header = Some((field(line, &t, 1, "vertex count")?, field(line, &t, 2, "edge count")?));
            }
            "e" => {
                arity(line, &t, 3)?;
                let n = n.ok_or_else(|| syntax(line, "edge before the `p` header"))?;
                let (u, v): (usize, usize) = (field(line, &t, 1, "endpoint")?, field(line, &t, 2, "endpoint")?);
                if u >= n || v >= n {
                    return Err(syntax(line, format!("endpoint out of range for {n} vertices")));
                }
                if u == v {
                    return Err(syntax(line, format!("self-loop at {u}")));
                }
                edges.push((u, v));
            }
            "v" => {
                arity(line, &t, 4)?;
                let id = field(line, &t, 1, "vertex id")?;
                let xy = (field(line, &t, 2, "x coordinate")?, field(line, &t, 3, "y coordinate")?);
                place(&mut coords, id, xy, line, n)?;
            }
            "i" => {
                arity(line, &t, 6)?;
                let id = field(line, &t, 1, "vertex id")?;
                let rat = |k: usize| -> Result<Rational, FormatError> {
                    let num: BigInt = field(line, &t, k, "numerator")?;
                    let den: BigInt = field(line, &t, k + 1, "denominator")?;
                    Rational::new(num, den).ok_or_else(|| syntax(line, "zero denominator"))
                };
                let iv = ClosedInterval::new(rat(2)?, rat(4)?).ok_or_else(|| syntax(line, "left end exceeds right end"))?;
                place(&mut intervals, id, iv, line, n)?;
            }
            other => return Err(syntax(line, format!("unknown record type {other:?}"))),
        }
    }
    let intervals = (!intervals.is_empty()).then_some(intervals);
    let (graph, intervals) = match (header, intervals) {
        (None, None) => return Err(FormatError::MissingHeader),
        (None, Some(slots)) => {
            let n = slots.len();
            let rep = complete(slots, n, "intervals")?;
            (intersection_graph(&rep), Some(rep))
        }
        (Some((n, m)), slots) => {
            let g = build_graph(n, &edges)?;
            if edges.len() != m || g.m() != m {
                return Err(FormatError::EdgeCount {
                    declared: m,
                    found: g.m(),
                });
            }
            let rep = slots.map(|s| complete(s, n, "intervals")).transpose()?;
            if rep.as_ref().is_some_and(|r| intersection_graph(r) != g) {
                return Err(FormatError::ModelMismatch);
            }
            (g, rep)
        }
    };
    let embedding = if coords.is_empty() {
        None
    } else {
        Some(GridEmbedding {
            coords: complete(coords, graph.n(), "coordinates")?,
        })
    };
    Ok(Instance {
        graph,
        embedding,
        intervals,
    })
}

/// Parses an instance file and keeps only its graph.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    parse_instance(text).map(|i| i.graph)
}

/// `p`/`e` lines, edges in increasing order.
pub fn emit_graph(g: &Graph) -> String {
    let mut s = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").expect("writing to a String");
    }
    s
}

/// The graph followed by its `v` lines.
pub fn emit_embedded_graph(g: &Graph, emb: &GridEmbedding) -> String {
    let mut s = emit_graph(g);
    for (id, (x, y)) in emb.coords.iter().enumerate() {
        writeln!(s, "v {id} {x} {y}").expect("writing to a String");
    }
    s
}

/// `i` lines in id order, endpoints in lowest terms.
pub fn emit_intervals(rep: &[ClosedInterval]) -> String {
    let mut s = String::new();
    for (id, iv) in rep.iter().enumerate() {
        writeln!(
            s,
            "i {id} {} {} {} {}",
            iv.lo.numer(),
            iv.lo.denom(),
            iv.hi.numer(),
            iv.hi.denom()
        )
        .expect("writing to a String");
    }
    s
}

/// Parses DIMACS CNF; every clause must have exactly three literals.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[i32; 3]> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut current_line = 0;
    for (line, t) in records(text) {
        if t[0] == "%" {
            break;
        }
        if t[0] == "p" {
            arity(line, &t, 4)?;
            if t[1] != "cnf" {
                return Err(syntax(line, format!("expected `p cnf`, found format {:?}", t[1])));
            }
            if header.is_some() {
                return Err(syntax(line, "second header"));
            }
            header = Some((field(line, &t, 2, "variable count")?, field(line, &t, 3, "clause count")?));
            continue;
        }
        let (n, _) = header.ok_or_else(|| syntax(line, "clause before the `p cnf` header"))?;
        for k in 0..t.len() {
            let lit: i32 = field(line, &t, k, "literal")?;
            if current.is_empty() {
                current_line = line;
            }
            if lit == 0 {
                let clause: [i32; 3] = current.as_slice().try_into().map_err(|_| {
                    syntax(current_line, format!("clause has {} literals, exactly 3 are required", current.len()))
                })?;
                clauses.push(clause);
                current.clear();
            } else if lit.unsigned_abs() as usize > n {
                return Err(syntax(line, format!("literal {lit} exceeds the {n} declared variables")));
            } else {
                current.push(lit);
            }
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader)?;
    if !current.is_empty() {
        return Err(syntax(current_line, "clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(FormatError::ClauseCount {
            declared: m,
            found: clauses.len(),
        });
    }
    CnfFormula::new(n, clauses).map_err(|e| FormatError::Formula(e.to_string()))
}

/// DIMACS text of a formula.
pub fn emit_dimacs(f: &CnfFormula) -> String {
    let mut s = format!("p cnf {} {}\n", f.n(), f.m());
    for c in f.clauses() {
        writeln!(s, "{} {} {} 0", c[0], c[1], c[2]).expect("writing to a String");
    }
    s
}

/// A named interval in the sidecar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedId {
    pub name: String,
    pub id: usize,
}

/// Self-describing metadata of a generated 3-SAT interval instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatSidecar {
    pub variables: usize,
    pub clauses: usize,
    pub epsilon: Rational,
    pub expected_bound: usize,
    pub interval_count: usize,
    pub point_intervals: usize,
    pub track_count: usize,
    /// Semantic names, sorted by name.
    pub names: Vec<NamedId>,
    /// Gadget label of every interval, by id.
    pub labels: Vec<String>,
    pub tracks: Vec<Track>,
    /// All track roots, ascending.
    pub roots: Vec<usize>,
}

impl SatSidecar {
    /// Collects the metadata of an instance.
    pub fn from_instance(inst: &IntervalInstance) -> Self {
        let mut names: Vec<NamedId> = inst
            .named
            .iter()
            .map(|(k, &id)| NamedId { name: k.to_string(), id })
            .collect();
        names.sort_by(|a, b| a.name.cmp(&b.name).then(a.id.cmp(&b.id)));
        let roots: BTreeSet<usize> = inst.tracks.iter().flat_map(|t| t.roots.iter().copied()).collect();
        SatSidecar {
            variables: inst.n(),
            clauses: inst.m(),
            epsilon: inst.epsilon.clone(),
            expected_bound: inst.expected_bound(),
            interval_count: inst.intervals.len(),
            point_intervals: inst.point_intervals().len(),
            track_count: inst.tracks.len(),
            names,
            labels: inst.intervals.iter().map(|r| r.label.to_string()).collect(),
            tracks: inst.tracks.clone(),
            roots: roots.into_iter().collect(),
        }
    }
}

/// Vertex names of a partial-grid precursor, by id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelSidecar {
    pub source_vertices: usize,
    pub labels: Vec<NamedId>,
}

impl LabelSidecar {
    /// Collects the gadget names of a precursor graph.
    pub fn from_precursor(p: &GridPrecursor) -> Self {
        LabelSidecar {
            source_vertices: p.source.n(),
            labels: p
                .labels
                .iter()
                .enumerate()
                .map(|(id, l)| NamedId { name: l.to_string(), id })
                .collect(),
        }
    }
}

/// Counts attached to a result on a generated instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceStats {
    pub tracks: usize,
    pub point_intervals: usize,
    pub expected_bound: usize,
}

/// Machine-readable outcome of a solver run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub method: String,
    pub size: usize,
    pub vertices: Vec<VertexId>,
    pub optimal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<usize>,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance_stats: Option<InstanceStats>,
}

impl ResultDocument {
    /// The document for a solver result.
    pub fn from_result(r: &SolveResult) -> Self {
        ResultDocument {
            method: r.method.to_string(),
            size: r.size,
            vertices: r.set.to_vec(),
            optimal: r.optimal,
            lower_bound: None,
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
            instance_stats: None,
        }
    }
}

/// Pretty JSON with a trailing newline; keys follow field order.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// Parses a JSON document.
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::full_grid;

    #[test]
    fn graph_round_trip_and_comments() {
        let text = "c a path\np 3 2\n\ne 0 1\nc middle\ne 2 1\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(emit_graph(&g), "p 3 2\ne 0 1\ne 1 2\n");
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        assert_eq!(parse_graph("p 2 1\ne 0 5\n").unwrap_err().to_string(), "line 2: endpoint out of range for 2 vertices");
        assert!(matches!(parse_graph("e 0 1\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("p 2 1\nx\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph("p 3 1\ne 0 1\ne 1 2\n"), Err(FormatError::EdgeCount { .. })));
        assert!(matches!(parse_graph("p 3 2\ne 0 1\ne 1 0\n"), Err(FormatError::EdgeCount { .. })));
        assert!(matches!(parse_graph("p 2 1\ne 1 1\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert_eq!(parse_graph(""), Err(FormatError::MissingHeader));
    }

    #[test]
    fn embedding_round_trip() {
        let (g, emb) = full_grid(3, 2);
        let text = emit_embedded_graph(&g, &emb);
        let inst = parse_instance(&text).unwrap();
        assert_eq!(inst.graph, g);
        assert_eq!(inst.embedding, Some(emb));
        assert!(matches!(
            parse_instance("p 2 1\ne 0 1\nv 0 0 0\n"),
            Err(FormatError::Incomplete { missing: 1, .. })
        ));
        assert!(matches!(parse_instance("p 2 1\ne 0 1\nv 0 0 0\nv 0 1 0\n"), Err(FormatError::Syntax { line: 4, .. })));
    }

    #[test]
    fn interval_round_trip() {
        let rep = vec![
            ClosedInterval::new(Rational::new(-1, 3).unwrap(), Rational::integer(2)).unwrap(),
            ClosedInterval::point(Rational::new(3, 2).unwrap()),
        ];
        let text = emit_intervals(&rep);
        assert_eq!(text, "i 0 -1 3 2 1\ni 1 3 2 3 2\n");
        let inst = parse_instance(&text).unwrap();
        assert_eq!(inst.intervals.as_deref(), Some(&rep[..]));
        assert_eq!(inst.graph.edges(), vec![(0, 1)]);
        // With an explicit graph, the model must agree with it.
        let both = format!("p 2 1\ne 0 1\n{text}");
        assert_eq!(parse_instance(&both).unwrap().intervals, Some(rep));
        assert_eq!(parse_instance(&format!("p 2 0\n{text}")), Err(FormatError::ModelMismatch));
        assert!(matches!(parse_instance("i 0 1 0 2 1\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_instance("i 0 3 1 2 1\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_instance("i 1 0 1 1 1\n"), Err(FormatError::Incomplete { missing: 0, .. })));
    }

    #[test]
    fn dimacs() {
        let f = parse_dimacs("c demo\np cnf 3 2\n1 -2 3 0\n-1 2\n -3 0\n%\n0\n").unwrap();
        assert_eq!(f.clauses(), &[[1, -2, 3], [-1, 2, -3]]);
        assert_eq!(parse_dimacs(&emit_dimacs(&f)).unwrap(), f);
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 2 0\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 2 4 0\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), Err(FormatError::ClauseCount { .. })));
        assert!(matches!(parse_dimacs("p cnf 3 1\n1 2 3\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_dimacs("p dnf 3 1\n"), Err(FormatError::Syntax { line: 1, .. })));
    }

    #[test]
    fn sidecar_reports_counts_and_round_trips() {
        use crate::reductions::sat::{expected_bound, sat_to_intervals};
        let f = CnfFormula::new(1, vec![[1, 1, -1]]).unwrap();
        let inst = sat_to_intervals(&f).unwrap();
        let side = SatSidecar::from_instance(&inst);
        assert_eq!(side.expected_bound, 69);
        assert_eq!(side.expected_bound, expected_bound(1, 1));
        assert_eq!(side.track_count, 2 + 4 + 35);
        assert_eq!(side.point_intervals, 4 + 6 + 52);
        assert!(side.names.windows(2).all(|w| w[0].name <= w[1].name));
        let text = to_json(&side);
        assert_eq!(from_json::<SatSidecar>(&text).unwrap(), side);
        assert_eq!(to_json(&from_json::<SatSidecar>(&text).unwrap()), text);
    }

    #[test]
    fn result_document_round_trips() {
        let doc = ResultDocument {
            method: "brute".into(),
            size: 2,
            vertices: vec![0, 4],
            optimal: true,
            lower_bound: Some(2),
            elapsed_ms: 0.25,
            instance_stats: None,
        };
        let text = to_json(&doc);
        assert!(text.find("\"method\"").unwrap() < text.find("\"size\"").unwrap());
        assert!(!text.contains("instance_stats"));
        assert_eq!(from_json::<ResultDocument>(&text).unwrap(), doc);
    }
}
