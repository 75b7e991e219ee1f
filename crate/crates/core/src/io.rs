//! Line-oriented graph files, catalog lookup and JSON rendering.
//!
//! ```text
//! # comment
//! vertex s1
//! vertex s2
//! vertex s3
//! edge s1 s2 3
//! edge s2 s3 inf
//! ```
//!
//! Declaration order of `vertex` lines is the vertex order. Pairs without an
//! `edge` line have label 2.

use std::collections::BTreeMap;

use serde::ser::{Serialize, Serializer};
use serde::Serialize as DeriveSerialize;

use crate::error::{GraphError, ParseError};
use crate::graph::{from_catalog, CoxeterGraph, CoxeterLabel};
use crate::invariants::{AbelianDescriptor, CorollaryConditions, HomologySummary, StabilityReport};
use crate::words::{abelianize, OmegaSets};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

/// A parsed graph file together with where each declaration came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub source: String,
    pub graph: CoxeterGraph,
    pub vertex_positions: Vec<Position>,
    pub edge_positions: Vec<Position>,
}

fn parse_label(token: &str, line: usize) -> Result<CoxeterLabel, ParseError> {
    if token == "inf" {
        return Ok(CoxeterLabel::Infinity);
    }
    let bad = || ParseError::BadLabel {
        line,
        token: token.to_string(),
    };
    if !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let m: u32 = token.parse().map_err(|_| bad())?;
    CoxeterLabel::finite(m).map_err(|_| bad())
}

pub fn parse_document(text: &str) -> Result<GraphDocument, ParseError> {
    let mut graph = CoxeterGraph::empty();
    let mut seen = BTreeMap::new();
    let mut vertex_positions = Vec::new();
    let mut edge_positions = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let position = Position {
            line,
            column: raw.len() - raw.trim_start().len() + 1,
        };
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let graph_err = |source: GraphError| ParseError::Graph { line, source };
        match tokens[0] {
            "vertex" => {
                if tokens.len() != 2 {
                    return Err(ParseError::Syntax {
                        line,
                        message: "expected `vertex <name>`".into(),
                    });
                }
                graph
                    .push_vertex(tokens[1].to_string())
                    .map_err(graph_err)?;
                vertex_positions.push(position);
            }
            "edge" => {
                if tokens.len() != 4 {
                    return Err(ParseError::Syntax {
                        line,
                        message: "expected `edge <u> <v> <m>`".into(),
                    });
                }
                let label = parse_label(tokens[3], line)?;
                graph
                    .insert_edge(&mut seen, tokens[1], tokens[2], label)
                    .map_err(graph_err)?;
                edge_positions.push(position);
            }
            other => {
                return Err(ParseError::Syntax {
                    line,
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    Ok(GraphDocument {
        source: text.to_string(),
        graph,
        vertex_positions,
        edge_positions,
    })
}

pub fn parse_graph(text: &str) -> Result<CoxeterGraph, ParseError> {
    parse_document(text).map(|d| d.graph)
}

pub fn parse_catalog(name: &str) -> Result<CoxeterGraph, GraphError> {
    from_catalog(name)
}

/// Text form accepted by [`parse_graph`]; label-2 pairs are omitted.
pub fn render_graph(g: &CoxeterGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str("vertex ");
        out.push_str(v);
        out.push('\n');
    }
    for (p, l) in g.edges() {
        out.push_str(&format!(
            "edge {} {} {}\n",
            g.name(p.lo()),
            g.name(p.hi()),
            l
        ));
    }
    out
}

impl Serialize for CoxeterLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            CoxeterLabel::Finite(m) => serializer.serialize_u32(*m),
            CoxeterLabel::Infinity => serializer.serialize_str("inf"),
        }
    }
}

#[derive(DeriveSerialize)]
struct EdgeJson<'a> {
    u: &'a str,
    v: &'a str,
    m: CoxeterLabel,
}

#[derive(DeriveSerialize)]
struct HowlettJson {
    n1: usize,
    n2: usize,
    n3: usize,
    n4: usize,
}

#[derive(DeriveSerialize)]
struct SummaryJson<'a> {
    vertices: &'a [String],
    edges: Vec<EdgeJson<'a>>,
    p: usize,
    q1: usize,
    q2: usize,
    q3: usize,
    q: usize,
    n: HowlettJson,
    howlett_identity: bool,
    h1_artin_free_rank: usize,
    h2_orbit: AbelianDescriptor,
    h2_coxeter: AbelianDescriptor,
    h2_artin_mod2_rank: usize,
    corollary: CorollaryConditions,
    h2_artin_integral: Option<AbelianDescriptor>,
}

fn edges_json(g: &CoxeterGraph) -> Vec<EdgeJson<'_>> {
    g.edges()
        .map(|(p, m)| EdgeJson {
            u: g.name(p.lo()),
            v: g.name(p.hi()),
            m,
        })
        .collect()
}

/// Compact JSON for the invariant profile and homology summary, with a
/// fixed key order.
pub fn render_json(g: &CoxeterGraph, summary: &HomologySummary) -> String {
    let pr = &summary.profile;
    let doc = SummaryJson {
        vertices: g.vertices(),
        edges: edges_json(g),
        p: pr.p,
        q1: pr.q1,
        q2: pr.q2,
        q3: pr.q3,
        q: pr.q,
        n: HowlettJson {
            n1: pr.n1,
            n2: pr.n2,
            n3: pr.n3,
            n4: pr.n4,
        },
        howlett_identity: pr.howlett_identity_holds(),
        h1_artin_free_rank: pr.h1_artin_free_rank,
        h2_orbit: summary.h2_orbit,
        h2_coxeter: summary.h2_coxeter,
        h2_artin_mod2_rank: summary.h2_artin_mod2_rank,
        corollary: summary.corollary,
        h2_artin_integral: summary.h2_artin_integral,
    };
    serde_json::to_string(&doc).expect("summary serializes")
}

fn describe(d: &AbelianDescriptor) -> String {
    let mut parts = Vec::new();
    if d.free_rank > 0 {
        parts.push(if d.free_rank == 1 {
            "Z".to_string()
        } else {
            format!("Z^{}", d.free_rank)
        });
    }
    if d.torsion2_rank > 0 {
        parts.push(if d.torsion2_rank == 1 {
            "Z_2".to_string()
        } else {
            format!("Z_2^{}", d.torsion2_rank)
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Human-readable version of [`render_json`].
pub fn render_text(g: &CoxeterGraph, summary: &HomologySummary) -> String {
    let pr = &summary.profile;
    let c = &summary.corollary;
    let mut out = String::new();
    out.push_str(&format!(
        "vertices: {} ({} edges)\n",
        g.vertex_count(),
        g.edge_count()
    ));
    out.push_str(&format!(
        "p = {}, q1 = {}, q2 = {}, q3 = {}, q = {}\n",
        pr.p, pr.q1, pr.q2, pr.q3, pr.q
    ));
    out.push_str(&format!(
        "n1 = {}, n2 = {}, n3 = {}, n4 = {} (identity {})\n",
        pr.n1,
        pr.n2,
        pr.n3,
        pr.n4,
        if pr.howlett_identity_holds() {
            "holds"
        } else {
            "FAILS"
        }
    ));
    out.push_str(&format!(
        "H1(A; Z)   = {}\n",
        describe(&AbelianDescriptor {
            free_rank: pr.h1_artin_free_rank,
            torsion2_rank: 0
        })
    ));
    out.push_str(&format!("H2(N; Z)   = {}\n", describe(&summary.h2_orbit)));
    out.push_str(&format!("H2(W; Z)   = {}\n", describe(&summary.h2_coxeter)));
    out.push_str(&format!(
        "H2(A; Z_2) = {}\n",
        describe(&AbelianDescriptor {
            free_rank: 0,
            torsion2_rank: summary.h2_artin_mod2_rank
        })
    ));
    out.push_str(&format!(
        "H2(A; Z)   = {}\n",
        summary
            .h2_artin_integral
            .as_ref()
            .map_or_else(|| "unknown".to_string(), describe)
    ));
    out.push_str(&format!(
        "integral criterion: all_torsion={} odd_equals_gamma={} tree={} applies={}\n",
        c.all_torsion, c.odd_equals_gamma, c.tree, c.applies
    ));
    out
}

#[derive(DeriveSerialize)]
struct OmegaWordJson {
    source: String,
    word: String,
    abelianization_zero: bool,
}

#[derive(DeriveSerialize)]
struct OmegaJson<'a> {
    vertices: &'a [String],
    flavor: String,
    omega1: Vec<OmegaWordJson>,
    omega2: Vec<OmegaWordJson>,
    omega3: Vec<OmegaWordJson>,
    total: usize,
}

fn omega_entries(g: &CoxeterGraph, om: &OmegaSets) -> [Vec<OmegaWordJson>; 3] {
    let names = g.vertices();
    let entry = |source: String, w: &crate::words::Word| OmegaWordJson {
        source,
        word: w.render(names),
        abelianization_zero: abelianize(w, g.vertex_count()).is_zero(),
    };
    let pair = |p: &crate::graph::VertexPair| format!("{{{},{}}}", g.name(p.lo()), g.name(p.hi()));
    let omega1 = om
        .omega1_pairs
        .iter()
        .zip(&om.omega1)
        .map(|(p, w)| entry(format!("commutator {}", pair(p)), w))
        .collect();
    let omega2 = om
        .omega2_pairs
        .iter()
        .zip(&om.omega2)
        .map(|(p, w)| entry(format!("relator {}", pair(p)), w))
        .collect();
    let omega3 = om
        .omega3_exponents
        .iter()
        .zip(&om.omega3_square_exponents)
        .zip(&om.omega3)
        .map(|((ex, sq), w)| {
            let mut terms: Vec<String> = om
                .odd_edges
                .iter()
                .zip(ex)
                .filter(|(_, &k)| k != 0)
                .map(|(p, k)| format!("{}^{}", pair(p), k))
                .collect();
            terms.extend(
                sq.iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(|(s, k)| format!("({}^2)^{}", g.name(s), k)),
            );
            entry(format!("cycle {}", terms.join(" ")), w)
        })
        .collect();
    [omega1, omega2, omega3]
}

pub fn render_generators_json(g: &CoxeterGraph, om: &OmegaSets) -> String {
    let [omega1, omega2, omega3] = omega_entries(g, om);
    let doc = OmegaJson {
        vertices: g.vertices(),
        flavor: om.flavor.to_string(),
        omega1,
        omega2,
        omega3,
        total: om.total(),
    };
    serde_json::to_string(&doc).expect("generators serialize")
}

pub fn render_generators_text(g: &CoxeterGraph, om: &OmegaSets) -> String {
    let mut out = format!("flavor: {}\n", om.flavor);
    for (label, entries) in ["omega1", "omega2", "omega3"]
        .iter()
        .zip(omega_entries(g, om))
    {
        out.push_str(&format!("{label} ({}):\n", entries.len()));
        for e in entries {
            out.push_str(&format!(
                "  {}  [{}]  abelianizes to zero: {}\n",
                e.word,
                e.source,
                if e.abelianization_zero { "yes" } else { "NO" }
            ));
        }
    }
    out.push_str(&format!("total: {}\n", om.total()));
    out
}

#[derive(DeriveSerialize)]
struct StabilityJson<'a> {
    ranks: Vec<RankJson>,
    stable: bool,
    seed_vertices: &'a [String],
}

#[derive(DeriveSerialize)]
struct RankJson {
    n: usize,
    rank: usize,
}

pub fn render_stability_json(seed: &CoxeterGraph, report: &StabilityReport) -> String {
    let doc = StabilityJson {
        ranks: report
            .ranks
            .iter()
            .map(|&(n, rank)| RankJson { n, rank })
            .collect(),
        stable: report.stable,
        seed_vertices: seed.vertices(),
    };
    serde_json::to_string(&doc).expect("stability report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::homology_summary;

    #[test]
    fn parse_a2() {
        let g = parse_graph("vertex s1\nvertex s2\nedge s1 s2 3").unwrap();
        assert_eq!(g, from_catalog("A2").unwrap());
    }

    #[test]
    fn parse_errors() {
        let e = parse_graph("vertex a\nedge a a 3").unwrap_err();
        assert_eq!(
            e,
            ParseError::Graph {
                line: 2,
                source: GraphError::SelfLoop("a".into())
            }
        );
        assert!(matches!(
            parse_graph("vertex a\nvertex b\nedge a b 1"),
            Err(ParseError::BadLabel { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("vertex a\nvertex b\nedge a b 3.5"),
            Err(ParseError::BadLabel { .. })
        ));
        assert!(matches!(
            parse_graph("vertex a\nvertex b\nedge a b -3"),
            Err(ParseError::BadLabel { .. })
        ));
        assert!(matches!(
            parse_graph("vertex a b"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("\n\nnode a"),
            Err(ParseError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("vertex a\nvertex a"),
            Err(ParseError::Graph {
                source: GraphError::DuplicateVertex(_),
                ..
            })
        ));
        assert!(matches!(
            parse_graph("vertex a\nedge a b 3"),
            Err(ParseError::Graph {
                source: GraphError::UnknownVertex(_),
                ..
            })
        ));
        assert!(matches!(
            parse_graph("vertex a\nvertex b\nedge a b 3\nedge b a 5"),
            Err(ParseError::Graph {
                line: 4,
                source: GraphError::ConflictingLabel { .. }
            })
        ));
    }

    #[test]
    fn parse_infinity_and_comments() {
        let doc = parse_document("# dihedral\n\nvertex a\n  vertex b\nedge a b inf\n").unwrap();
        assert_eq!(doc.graph.label(0, 1), CoxeterLabel::Infinity);
        assert_eq!(doc.vertex_positions[1], Position { line: 4, column: 3 });
        assert_eq!(doc.edge_positions[0].line, 5);
    }

    #[test]
    fn render_round_trip() {
        for name in ["~D4", "I2(inf)", "B5", "~A3"] {
            let g = from_catalog(name).unwrap();
            assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
        }
    }

    #[test]
    fn catalog_parse() {
        assert_eq!(
            parse_catalog("I2(inf)").unwrap().label(0, 1),
            CoxeterLabel::Infinity
        );
        assert!(matches!(
            parse_catalog("A0"),
            Err(GraphError::InvalidParameter { .. })
        ));
    }

    #[test]
    fn json_affine_e6() {
        let g = from_catalog("~E6").unwrap();
        let json = render_json(&g, &homology_summary(&g));
        assert!(json.contains(r#""p":1,"#));
        assert!(json.contains(r#""q":0,"#));
        assert!(json.contains(r#""h2_artin_mod2_rank":1,"#));
        assert!(json.contains(r#""h2_artin_integral":{"free_rank":0,"torsion2_rank":1}"#));
    }

    #[test]
    fn json_i2_4_and_key_order() {
        let g = from_catalog("I2(4)").unwrap();
        let json = render_json(&g, &homology_summary(&g));
        assert!(json.ends_with(r#""h2_artin_integral":null}"#));
        assert!(json.contains(r#""h2_artin_mod2_rank":1"#));
        assert!(json.contains(r#""edges":[{"u":"s1","v":"s2","m":4}]"#));
        let keys = [
            "\"vertices\"",
            "\"edges\"",
            "\"p\"",
            "\"q1\"",
            "\"q2\"",
            "\"q3\"",
            "\"q\"",
            "\"n\"",
            "\"howlett_identity\"",
            "\"h1_artin_free_rank\"",
            "\"h2_orbit\"",
            "\"h2_coxeter\"",
            "\"h2_artin_mod2_rank\"",
            "\"corollary\"",
            "\"h2_artin_integral\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn json_infinite_label() {
        let g = from_catalog("I2(inf)").unwrap();
        let json = render_json(&g, &homology_summary(&g));
        assert!(json.contains(r#""m":"inf""#));
    }

    #[test]
    fn json_empty_graph() {
        let g = CoxeterGraph::empty();
        let json = render_json(&g, &homology_summary(&g));
        assert_eq!(
            json,
            concat!(
                r#"{"vertices":[],"edges":[],"p":0,"q1":0,"q2":0,"q3":0,"q":0,"#,
                r#""n":{"n1":0,"n2":0,"n3":0,"n4":0},"howlett_identity":true,"h1_artin_free_rank":0,"#,
                r#""h2_orbit":{"free_rank":0,"torsion2_rank":0},"h2_coxeter":{"free_rank":0,"torsion2_rank":0},"#,
                r#""h2_artin_mod2_rank":0,"corollary":{"all_torsion":true,"odd_equals_gamma":true,"tree":true,"applies":true},"#,
                r#""h2_artin_integral":{"free_rank":0,"torsion2_rank":0}}"#
            )
        );
    }
}
