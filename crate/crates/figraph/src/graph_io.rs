//! Concrete-graph interchange: DIMACS edge lists and a labeled JSON format.
//!
//! DIMACS carries no vertex labels, so imported vertices are labeled
//! `v:1 .. v:|V|`. The JSON format round-trips labels exactly.

use crate::expand::{ConcreteGraph, Payload, VertexLabel};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphIoError {
    #[error("line {line}: {message}")]
    Dimacs { line: usize, message: String },
    #[error("malformed graph document: {0}")]
    Json(String),
    #[error("edge ({u}, {v}) out of range for {vertices} vertices")]
    EdgeOutOfRange { u: u32, v: u32, vertices: usize },
    #[error("input is neither a DIMACS edge list nor a graph JSON document")]
    UnknownFormat,
}

// ============================================================================
// DIMACS
// ============================================================================

/// Writes the `p edge V E` format with 1-based `e u v` lines.
pub fn write_dimacs(g: &ConcreteGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "p edge {} {}\n",
        g.vertex_count(),
        g.edge_count()
    ));
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Reads the `p edge` format. Comment (`c`) lines are ignored; vertices get
/// labels `v:1 .. v:|V|` and `n` is set to the vertex count.
pub fn read_dimacs(text: &str) -> Result<ConcreteGraph, GraphIoError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            Some(&"p") => {
                if declared.is_some() {
                    return Err(GraphIoError::Dimacs {
                        line: lineno,
                        message: "duplicate problem line".into(),
                    });
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(GraphIoError::Dimacs {
                        line: lineno,
                        message: format!("expected \"p edge V E\", got {line:?}"),
                    });
                }
                let v = fields[2].parse::<usize>().map_err(|_| GraphIoError::Dimacs {
                    line: lineno,
                    message: "bad vertex count".into(),
                })?;
                let e = fields[3].parse::<usize>().map_err(|_| GraphIoError::Dimacs {
                    line: lineno,
                    message: "bad edge count".into(),
                })?;
                declared = Some((v, e));
            }
            Some(&"e") => {
                let (v, _) = declared.ok_or(GraphIoError::Dimacs {
                    line: lineno,
                    message: "edge before problem line".into(),
                })?;
                if fields.len() != 3 {
                    return Err(GraphIoError::Dimacs {
                        line: lineno,
                        message: format!("expected \"e u v\", got {line:?}"),
                    });
                }
                let parse = |s: &str| {
                    s.parse::<u32>().map_err(|_| GraphIoError::Dimacs {
                        line: lineno,
                        message: format!("bad vertex index {s:?}"),
                    })
                };
                let (a, b) = (parse(fields[1])?, parse(fields[2])?);
                if a == 0 || b == 0 || a as usize > v || b as usize > v {
                    return Err(GraphIoError::Dimacs {
                        line: lineno,
                        message: format!("vertex index out of range 1..={v}"),
                    });
                }
                if a == b {
                    return Err(GraphIoError::Dimacs {
                        line: lineno,
                        message: "self-loop".into(),
                    });
                }
                let (a, b) = (a - 1, b - 1);
                let edge = (a.min(b), a.max(b));
                if !edges.contains(&edge) {
                    edges.push(edge);
                }
            }
            _ => {
                return Err(GraphIoError::Dimacs {
                    line: lineno,
                    message: format!("unrecognized line {line:?}"),
                })
            }
        }
    }
    let (v, declared_e) = declared.ok_or(GraphIoError::Dimacs {
        line: 0,
        message: "missing problem line".into(),
    })?;
    if edges.len() != declared_e {
        return Err(GraphIoError::Dimacs {
            line: 0,
            message: format!(
                "problem line declares {declared_e} edges, found {}",
                edges.len()
            ),
        });
    }
    Ok(raw_graph(v, &edges))
}

/// Graph on `v` unlabeled vertices (labels default to `v:1 .. v:|V|`).
pub fn raw_graph(v: usize, edges: &[(u32, u32)]) -> ConcreteGraph {
    let vertices: Vec<VertexLabel> = (1..=v as u32)
        .map(|i| VertexLabel {
            orbit: "v".to_string(),
            payload: Payload::Element(i),
        })
        .collect();
    ConcreteGraph::from_edges(v as u32, vertices, edges)
}

// ============================================================================
// JSON
// ============================================================================

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: u32,
    vertices: Vec<VertexLabel>,
    edges: Vec<(u32, u32)>,
}

/// JSON graph export with explicit vertex labels; edges are 0-based index
/// pairs into `vertices`.
pub fn write_json(g: &ConcreteGraph) -> String {
    let doc = GraphDoc {
        n: g.n(),
        vertices: g.vertices().to_vec(),
        edges: g.edges(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph doc serializes");
    s.push('\n');
    s
}

pub fn read_json(text: &str) -> Result<ConcreteGraph, GraphIoError> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| GraphIoError::Json(e.to_string()))?;
    let v = doc.vertices.len();
    for &(a, b) in &doc.edges {
        if a as usize >= v || b as usize >= v {
            return Err(GraphIoError::EdgeOutOfRange {
                u: a,
                v: b,
                vertices: v,
            });
        }
    }
    Ok(ConcreteGraph::from_edges(doc.n, doc.vertices, &doc.edges))
}

/// Reads either format, sniffing JSON by a leading `{`.
pub fn read_auto(text: &str) -> Result<ConcreteGraph, GraphIoError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        read_json(text)
    } else if trimmed.starts_with('c') || trimmed.starts_with('p') {
        read_dimacs(text)
    } else {
        Err(GraphIoError::UnknownFormat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expand::expand;
    use crate::model::{family, Family};

    #[test]
    fn dimacs_round_trip() {
        let g = expand(&family(&Family::Kneser2).unwrap(), 4).unwrap();
        let text = write_dimacs(&g);
        assert!(text.starts_with("p edge 6 3\n"));
        let back = read_dimacs(&text).unwrap();
        assert_eq!(back.vertex_count(), 6);
        assert_eq!(back.edges(), g.edges());
        // Round-tripping the unlabeled form again is byte-identical.
        assert_eq!(write_dimacs(&back), text);
    }

    #[test]
    fn dimacs_rejects_malformed_input() {
        assert!(read_dimacs("e 1 2\n").is_err());
        assert!(read_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(read_dimacs("p edge 2 1\ne 1 1\n").is_err());
        assert!(read_dimacs("p edge 2 2\ne 1 2\n").is_err());
        assert!(read_dimacs("p edge x 1\n").is_err());
    }

    #[test]
    fn json_round_trip_keeps_labels() {
        let g = expand(&family(&Family::CompleteBipartite).unwrap(), 3).unwrap();
        let text = write_json(&g);
        let back = read_json(&text).unwrap();
        assert_eq!(back.vertex_count(), g.vertex_count());
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.vertices(), g.vertices());
        assert_eq!(back.n(), 3);
    }

    #[test]
    fn auto_detection() {
        let g = expand(&family(&Family::Johnson2).unwrap(), 3).unwrap();
        assert!(read_auto(&write_json(&g)).is_ok());
        assert!(read_auto(&write_dimacs(&g)).is_ok());
        assert!(matches!(
            read_auto("orbits galore"),
            Err(GraphIoError::UnknownFormat)
        ));
    }
}
