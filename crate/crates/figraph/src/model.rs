//! Classification graphs: finite encodings of entire graph families.
//!
//! A classification graph is a small labeled multigraph whose nodes stand for
//! symmetric-group orbits of vertices and whose labeled loops/edges state the
//! adjacency rule between orbit members. Expanding one at a parameter `n`
//! (see [`crate::expand`]) produces the concrete member `G_n` of the family.
//!
//! Three orbit kinds are supported:
//!
//! * [`OrbitKind::Pair`] — vertices labeled by unordered pairs from `[n]`
//!   (`C(n,2)` vertices; conventional notation `v^(2)`),
//! * [`OrbitKind::Linear`] — vertices labeled by the numbers `1..=n`
//!   (`v^(3)`),
//! * [`OrbitKind::Singleton`] — one invariant vertex (`v^(4)`).
//!
//! Ordered-pair orbits (`v^(1)`) are intentionally unsupported and are
//! rejected at parse time: the unordered-pair case already covers every
//! family this crate targets, and the ordered case multiplies the label
//! alphabet without adding new phenomena at this scale.
//!
//! # Edge label alphabet
//!
//! | Label            | Notation    | Endpoints           | Rule (labels of the two vertices) |
//! |------------------|-------------|---------------------|-----------------------------------|
//! | `PairDisjoint`   | `e_1^(2)`   | loop on pair orbit  | share 0 numbers                   |
//! | `PairShare1`     | `e_2^(2)`   | loop on pair orbit  | share exactly 1 number            |
//! | `LinComplete`    | `e_1^(3)`   | loop on linear orbit| every two vertices adjacent       |
//! | `PPShare0/1/2`   | `e_j^(2,2)` | pair - pair         | share exactly j-1 numbers (j=1,2,3) |
//! | `PLShare0/1`     | `e_j^(2,3)` | pair - linear       | share exactly j-1 numbers (j=1,2) |
//! | `LLShare0/1`     | `e_j^(3,3)` | linear - linear     | share exactly j-1 numbers (j=1,2) |
//! | `AllToSingleton` | `e_1^(x,4)` | any - singleton     | singleton adjacent to the whole other orbit |
//!
//! Loops on singletons are forbidden (a one-vertex orbit of a simple graph
//! has no internal edge). Between two linear orbits both `LLShare0` and
//! `LLShare1` are admitted; joining them both yields complete bipartite
//! families such as `K_{n,n}`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

// ============================================================================
// Orbit and label vocabulary
// ============================================================================

/// Growth class of one orbit node.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum OrbitKind {
    /// Unordered pairs from `[n]`; contributes `C(n,2)` vertices.
    Pair,
    /// The numbers `1..=n`; contributes `n` vertices.
    Linear,
    /// One invariant vertex.
    Singleton,
}

impl OrbitKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OrbitKind::Pair => "pair",
            OrbitKind::Linear => "linear",
            OrbitKind::Singleton => "singleton",
        }
    }
}

/// Semantic adjacency-rule label carried by a loop or cross edge.
///
/// Variant order is the canonical sort order used by serialization.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum EdgeLabel {
    /// Loop on a pair orbit: pairs with disjoint labels are adjacent (`e_1^(2)`).
    PairDisjoint,
    /// Loop on a pair orbit: pairs sharing exactly one number are adjacent (`e_2^(2)`).
    PairShare1,
    /// Loop on a linear orbit: the orbit forms a complete graph (`e_1^(3)`).
    LinComplete,
    /// Pair - pair: labels share 0 numbers (`e_1^(2,2)`).
    PPShare0,
    /// Pair - pair: labels share exactly 1 number (`e_2^(2,2)`).
    PPShare1,
    /// Pair - pair: labels share both numbers (`e_3^(2,2)`).
    PPShare2,
    /// Pair - linear: the number does not occur in the pair (`e_1^(2,3)`).
    PLShare0,
    /// Pair - linear: the number occurs in the pair (`e_2^(2,3)`).
    PLShare1,
    /// Linear - linear: different numbers (`e_1^(3,3)`).
    LLShare0,
    /// Linear - linear: equal numbers (`e_2^(3,3)`).
    LLShare1,
    /// Any orbit - singleton: the singleton sees the whole other orbit (`e_1^(x,4)`).
    AllToSingleton,
}

impl EdgeLabel {
    pub const ALL: [EdgeLabel; 11] = [
        EdgeLabel::PairDisjoint,
        EdgeLabel::PairShare1,
        EdgeLabel::LinComplete,
        EdgeLabel::PPShare0,
        EdgeLabel::PPShare1,
        EdgeLabel::PPShare2,
        EdgeLabel::PLShare0,
        EdgeLabel::PLShare1,
        EdgeLabel::LLShare0,
        EdgeLabel::LLShare1,
        EdgeLabel::AllToSingleton,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeLabel::PairDisjoint => "PairDisjoint",
            EdgeLabel::PairShare1 => "PairShare1",
            EdgeLabel::LinComplete => "LinComplete",
            EdgeLabel::PPShare0 => "PPShare0",
            EdgeLabel::PPShare1 => "PPShare1",
            EdgeLabel::PPShare2 => "PPShare2",
            EdgeLabel::PLShare0 => "PLShare0",
            EdgeLabel::PLShare1 => "PLShare1",
            EdgeLabel::LLShare0 => "LLShare0",
            EdgeLabel::LLShare1 => "LLShare1",
            EdgeLabel::AllToSingleton => "AllToSingleton",
        }
    }

    /// Conventional `e_j^(x,y)` notation for this label.
    pub fn notation(self) -> &'static str {
        match self {
            EdgeLabel::PairDisjoint => "e_1^(2)",
            EdgeLabel::PairShare1 => "e_2^(2)",
            EdgeLabel::LinComplete => "e_1^(3)",
            EdgeLabel::PPShare0 => "e_1^(2,2)",
            EdgeLabel::PPShare1 => "e_2^(2,2)",
            EdgeLabel::PPShare2 => "e_3^(2,2)",
            EdgeLabel::PLShare0 => "e_1^(2,3)",
            EdgeLabel::PLShare1 => "e_2^(2,3)",
            EdgeLabel::LLShare0 => "e_1^(3,3)",
            EdgeLabel::LLShare1 => "e_2^(3,3)",
            EdgeLabel::AllToSingleton => "e_1^(x,4)",
        }
    }
}

/// Loop labels admissible on an orbit of the given kind.
pub fn admissible_loop_labels(kind: OrbitKind) -> &'static [EdgeLabel] {
    match kind {
        OrbitKind::Pair => &[EdgeLabel::PairDisjoint, EdgeLabel::PairShare1],
        OrbitKind::Linear => &[EdgeLabel::LinComplete],
        OrbitKind::Singleton => &[],
    }
}

/// Edge labels admissible between two distinct orbits of the given kinds.
pub fn admissible_edge_labels(a: OrbitKind, b: OrbitKind) -> &'static [EdgeLabel] {
    use OrbitKind::*;
    match (a.min(b), a.max(b)) {
        (Pair, Pair) => &[EdgeLabel::PPShare0, EdgeLabel::PPShare1, EdgeLabel::PPShare2],
        (Pair, Linear) => &[EdgeLabel::PLShare0, EdgeLabel::PLShare1],
        (Linear, Linear) => &[EdgeLabel::LLShare0, EdgeLabel::LLShare1],
        (_, Singleton) => &[EdgeLabel::AllToSingleton],
        _ => unreachable!("kind pairs are normalized by Ord"),
    }
}

// ============================================================================
// Classification graph
// ============================================================================

/// One orbit node: a unique id plus its growth kind.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orbit {
    pub id: String,
    pub kind: OrbitKind,
}

/// A classification graph: orbit nodes, labeled loops, labeled cross edges.
///
/// Orbit declaration order is preserved (it fixes vertex order in
/// expansions); [`ClassificationGraph::canonicalize`] sorts everything for
/// serialization and hashing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassificationGraph {
    orbits: Vec<Orbit>,
    loops: Vec<(String, EdgeLabel)>,
    edges: Vec<(String, String, EdgeLabel)>,
}

/// Invariant violation detected by [`ClassificationGraph::validate`].
///
/// Rule numbers referenced in messages:
/// 1. orbit ids are distinct;
/// 2. loops and edges reference declared orbits;
/// 3. singletons carry no loops;
/// 4. loop labels match their orbit kind;
/// 5. edge labels match their endpoint kinds (and an edge never joins an
///    orbit to itself - that would be a loop);
/// 6. no duplicate loop label on one orbit;
/// 7. no duplicate edge label between one endpoint pair.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ValidationError {
    #[error("rule 1: duplicate orbit id {orbit:?}")]
    DuplicateOrbitId { orbit: String },
    #[error("rule 2: {context} references unknown orbit {orbit:?}")]
    UnknownOrbitRef { orbit: String, context: String },
    #[error("rule 3: loop {label:?} not allowed on singleton orbit {orbit:?}")]
    LoopOnSingleton { orbit: String, label: EdgeLabel },
    #[error("rule {rule}: label {label:?} incompatible with {context}")]
    IncompatibleLabel {
        rule: u8,
        label: EdgeLabel,
        context: String,
    },
    #[error("rule {rule}: duplicate label {label:?} on {context}")]
    DuplicateLabel {
        rule: u8,
        label: EdgeLabel,
        context: String,
    },
}

impl ClassificationGraph {
    /// Builds and validates.
    pub fn new(
        orbits: Vec<(String, OrbitKind)>,
        loops: Vec<(String, EdgeLabel)>,
        edges: Vec<(String, String, EdgeLabel)>,
    ) -> Result<Self, ValidationError> {
        let c = Self::from_parts(orbits, loops, edges);
        c.validate()?;
        Ok(c)
    }

    /// Builds without validating. Useful for exercising `validate` itself.
    pub fn from_parts(
        orbits: Vec<(String, OrbitKind)>,
        loops: Vec<(String, EdgeLabel)>,
        edges: Vec<(String, String, EdgeLabel)>,
    ) -> Self {
        ClassificationGraph {
            orbits: orbits
                .into_iter()
                .map(|(id, kind)| Orbit { id, kind })
                .collect(),
            loops,
            edges,
        }
    }

    pub fn empty() -> Self {
        ClassificationGraph {
            orbits: Vec::new(),
            loops: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn loops(&self) -> &[(String, EdgeLabel)] {
        &self.loops
    }

    pub fn edges(&self) -> &[(String, String, EdgeLabel)] {
        &self.edges
    }

    pub fn orbit_kind(&self, id: &str) -> Option<OrbitKind> {
        self.orbits.iter().find(|o| o.id == id).map(|o| o.kind)
    }

    /// Loop labels attached to one orbit, in canonical label order.
    pub fn loop_labels(&self, id: &str) -> Vec<EdgeLabel> {
        let mut labels: Vec<EdgeLabel> = self
            .loops
            .iter()
            .filter(|(o, _)| o == id)
            .map(|&(_, l)| l)
            .collect();
        labels.sort();
        labels
    }

    /// Counts of (pair, linear, singleton) orbits.
    pub fn orbit_counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for o in &self.orbits {
            match o.kind {
                OrbitKind::Pair => counts.0 += 1,
                OrbitKind::Linear => counts.1 += 1,
                OrbitKind::Singleton => counts.2 += 1,
            }
        }
        counts
    }

    /// Checks every structural invariant; `Ok(())` iff the graph is valid.
    pub fn validate(&self) -> Result<(), ValidationError> {
        // Rule 1: distinct ids.
        for (i, o) in self.orbits.iter().enumerate() {
            if self.orbits[..i].iter().any(|p| p.id == o.id) {
                return Err(ValidationError::DuplicateOrbitId {
                    orbit: o.id.clone(),
                });
            }
        }
        // Loops: rules 2, 3, 4, 6.
        for (i, (orbit, label)) in self.loops.iter().enumerate() {
            let kind = self.orbit_kind(orbit).ok_or_else(|| {
                ValidationError::UnknownOrbitRef {
                    orbit: orbit.clone(),
                    context: format!("loop {label:?}"),
                }
            })?;
            if kind == OrbitKind::Singleton {
                return Err(ValidationError::LoopOnSingleton {
                    orbit: orbit.clone(),
                    label: *label,
                });
            }
            if !admissible_loop_labels(kind).contains(label) {
                return Err(ValidationError::IncompatibleLabel {
                    rule: 4,
                    label: *label,
                    context: format!("loop on {} orbit {orbit:?}", kind.as_str()),
                });
            }
            if self.loops[..i].iter().any(|(o, l)| o == orbit && l == label) {
                return Err(ValidationError::DuplicateLabel {
                    rule: 6,
                    label: *label,
                    context: format!("orbit {orbit:?}"),
                });
            }
        }
        // Edges: rules 2, 5, 7.
        for (i, (a, b, label)) in self.edges.iter().enumerate() {
            let ka = self.orbit_kind(a).ok_or_else(|| {
                ValidationError::UnknownOrbitRef {
                    orbit: a.clone(),
                    context: format!("edge {label:?}"),
                }
            })?;
            let kb = self.orbit_kind(b).ok_or_else(|| {
                ValidationError::UnknownOrbitRef {
                    orbit: b.clone(),
                    context: format!("edge {label:?}"),
                }
            })?;
            if a == b {
                return Err(ValidationError::IncompatibleLabel {
                    rule: 5,
                    label: *label,
                    context: format!("edge from orbit {a:?} to itself (loops go in \"loops\")"),
                });
            }
            if !admissible_edge_labels(ka, kb).contains(label) {
                return Err(ValidationError::IncompatibleLabel {
                    rule: 5,
                    label: *label,
                    context: format!(
                        "edge between {} orbit {a:?} and {} orbit {b:?}",
                        ka.as_str(),
                        kb.as_str()
                    ),
                });
            }
            if self.edges[..i].iter().any(|(x, y, l)| {
                l == label && ((x == a && y == b) || (x == b && y == a))
            }) {
                return Err(ValidationError::DuplicateLabel {
                    rule: 7,
                    label: *label,
                    context: format!("edge {a:?} -- {b:?}"),
                });
            }
        }
        Ok(())
    }

    /// Canonical form: orbits sorted by id, loop and edge lists sorted,
    /// edge endpoints in ascending id order.
    pub fn canonicalize(&self) -> ClassificationGraph {
        let mut orbits = self.orbits.clone();
        orbits.sort_by(|a, b| a.id.cmp(&b.id));
        let mut loops = self.loops.clone();
        loops.sort();
        let mut edges: Vec<(String, String, EdgeLabel)> = self
            .edges
            .iter()
            .map(|(a, b, l)| {
                if a <= b {
                    (a.clone(), b.clone(), *l)
                } else {
                    (b.clone(), a.clone(), *l)
                }
            })
            .collect();
        edges.sort();
        ClassificationGraph {
            orbits,
            loops,
            edges,
        }
    }

    /// SHA-256 of the canonical serialization, as lowercase hex.
    pub fn digest(&self) -> String {
        let bytes = self.serialize();
        let mut hasher = Sha256::new();
        hasher.update(&bytes);
        hex_string(&hasher.finalize())
    }

    /// True iff some pair orbit carries no loop at all. Such an orbit is an
    /// independent set of size `C(n,2)` on its own, which forces quadratic
    /// growth of the independence number.
    pub fn has_quadratic_independent_orbit(&self) -> bool {
        self.orbits
            .iter()
            .filter(|o| o.kind == OrbitKind::Pair)
            .any(|o| self.loop_labels(&o.id).is_empty())
    }

    /// True iff some pair orbit's loop set is exactly `{PairShare1}`, i.e.
    /// the orbit alone expands to a Johnson graph `J_{n,2}`.
    pub fn has_johnson_orbit(&self) -> bool {
        self.orbits
            .iter()
            .filter(|o| o.kind == OrbitKind::Pair)
            .any(|o| self.loop_labels(&o.id) == [EdgeLabel::PairShare1])
    }

    /// Stricter reading of [`Self::has_johnson_orbit`]: the Johnson-like pair
    /// orbit additionally has no cross edges to any other orbit.
    pub fn has_isolated_johnson_orbit(&self) -> bool {
        self.orbits
            .iter()
            .filter(|o| o.kind == OrbitKind::Pair)
            .any(|o| {
                self.loop_labels(&o.id) == [EdgeLabel::PairShare1]
                    && !self
                        .edges
                        .iter()
                        .any(|(a, b, _)| *a == o.id || *b == o.id)
            })
    }

    /// Ids of pair orbits without loops (witnesses for quadratic growth).
    pub fn loop_free_pair_orbits(&self) -> Vec<String> {
        self.orbits
            .iter()
            .filter(|o| o.kind == OrbitKind::Pair && self.loop_labels(&o.id).is_empty())
            .map(|o| o.id.clone())
            .collect()
    }

    /// Ids of pair orbits whose loop set is exactly `{PairShare1}`.
    pub fn johnson_orbits(&self) -> Vec<String> {
        self.orbits
            .iter()
            .filter(|o| {
                o.kind == OrbitKind::Pair && self.loop_labels(&o.id) == [EdgeLabel::PairShare1]
            })
            .map(|o| o.id.clone())
            .collect()
    }
}

pub(crate) fn hex_string(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

// ============================================================================
// JSON document format
// ============================================================================

/// Errors from [`parse`]. Structural problems surface as
/// [`ParseError::Invalid`] after the document itself reads fine.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("orbit {orbit:?}: ordered-pair orbits are not supported")]
    OrderedPairUnsupported { orbit: String },
    #[error("orbit {orbit:?}: unknown kind {kind:?} (expected pair|linear|singleton)")]
    UnknownKind { orbit: String, kind: String },
    #[error("unknown edge label {label:?}")]
    UnknownLabel { label: String },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

#[derive(Serialize, Deserialize)]
struct OrbitDoc {
    id: String,
    kind: String,
}

#[derive(Serialize, Deserialize)]
struct LoopDoc {
    orbit: String,
    label: String,
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    a: String,
    b: String,
    label: String,
}

#[derive(Serialize, Deserialize)]
struct ClassificationDoc {
    orbits: Vec<OrbitDoc>,
    #[serde(default)]
    loops: Vec<LoopDoc>,
    #[serde(default)]
    edges: Vec<EdgeDoc>,
}

fn label_from_str(s: &str) -> Result<EdgeLabel, ParseError> {
    EdgeLabel::ALL
        .into_iter()
        .find(|l| l.as_str() == s)
        .ok_or_else(|| ParseError::UnknownLabel {
            label: s.to_string(),
        })
}

/// Parses the JSON document format and validates the result.
///
/// Document shape:
/// ```json
/// {
///   "orbits": [{"id": "p1", "kind": "pair"}],
///   "loops":  [{"orbit": "p1", "label": "PairDisjoint"}],
///   "edges":  [{"a": "p1", "b": "p2", "label": "PPShare1"}]
/// }
/// ```
pub fn parse(text: &[u8]) -> Result<ClassificationGraph, ParseError> {
    let doc: ClassificationDoc =
        serde_json::from_slice(text).map_err(|e| ParseError::Malformed(e.to_string()))?;
    let mut orbits = Vec::with_capacity(doc.orbits.len());
    for o in &doc.orbits {
        let kind = match o.kind.as_str() {
            "pair" => OrbitKind::Pair,
            "linear" => OrbitKind::Linear,
            "singleton" => OrbitKind::Singleton,
            "ordered-pair" | "ordered_pair" | "ordered" => {
                return Err(ParseError::OrderedPairUnsupported {
                    orbit: o.id.clone(),
                })
            }
            other => {
                return Err(ParseError::UnknownKind {
                    orbit: o.id.clone(),
                    kind: other.to_string(),
                })
            }
        };
        orbits.push((o.id.clone(), kind));
    }
    let mut loops = Vec::with_capacity(doc.loops.len());
    for l in &doc.loops {
        loops.push((l.orbit.clone(), label_from_str(&l.label)?));
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in &doc.edges {
        edges.push((e.a.clone(), e.b.clone(), label_from_str(&e.label)?));
    }
    Ok(ClassificationGraph::new(orbits, loops, edges)?)
}

impl ClassificationGraph {
    /// Canonical JSON serialization (sorted orbits/loops/edges, pretty
    /// printed, trailing newline). `parse(serialize(c))` equals
    /// `c.canonicalize()`.
    pub fn serialize(&self) -> Vec<u8> {
        let canon = self.canonicalize();
        let doc = ClassificationDoc {
            orbits: canon
                .orbits
                .iter()
                .map(|o| OrbitDoc {
                    id: o.id.clone(),
                    kind: o.kind.as_str().to_string(),
                })
                .collect(),
            loops: canon
                .loops
                .iter()
                .map(|(orbit, label)| LoopDoc {
                    orbit: orbit.clone(),
                    label: label.as_str().to_string(),
                })
                .collect(),
            edges: canon
                .edges
                .iter()
                .map(|(a, b, label)| EdgeDoc {
                    a: a.clone(),
                    b: b.clone(),
                    label: label.as_str().to_string(),
                })
                .collect(),
        };
        let mut bytes = serde_json::to_vec_pretty(&doc).expect("classification doc serializes");
        bytes.push(b'\n');
        bytes
    }
}

// ============================================================================
// Named families
// ============================================================================

/// Built-in classification graphs for the families with known closed forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Family {
    /// Complete graphs `K_n`: one linear orbit with a `LinComplete` loop.
    Complete,
    /// Kneser graphs `KG_{n,2}`: one pair orbit with a `PairDisjoint` loop.
    Kneser2,
    /// Johnson graphs `J_{n,2}`: one pair orbit with a `PairShare1` loop.
    Johnson2,
    /// Complete bipartite `K_{n,n}`: two linear orbits joined by
    /// `LLShare0` and `LLShare1`.
    CompleteBipartite,
    /// `k` singleton vertices each joined to one loop-free linear orbit;
    /// alpha is `max(k, n)`.
    SingletonsVsOrbit { k: u32 },
    /// `k` copies of `K_n`, same-label vertices joined across copies;
    /// alpha is `min(n, k)`.
    CopiesOfComplete { k: u32 },
    /// `k` copies of `KG_{n,2}` with non-disjoint labels joined across
    /// copies; alpha is `n` when `n <= 3k` and `3 | n`, else `n - 1`.
    CopiesOfKneser2 { k: u32 },
    /// `k` disjoint copies of another family (no cross edges).
    DisjointUnion { k: u32, inner: Box<Family> },
    /// Two Johnson-type pair orbits plus a complete linear orbit attached to
    /// one of them by `PLShare1`; expands to `J_{n,2} + J_{n+1,2}`, whose
    /// alpha is exactly `n` - period 1 despite the Johnson orbits.
    JohnsonUnionShifted,
}

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("unknown family name {0:?}")]
    UnknownName(String),
    #[error("family {family}: invalid parameter k = {k} (need k >= 1)")]
    InvalidParam { family: String, k: u32 },
}

impl Family {
    /// Parses the CLI syntax: a kebab-case name, with `:k` for parametrized
    /// families and `:k:inner` for `disjoint-union`.
    ///
    /// Examples: `kneser2`, `copies-of-kneser2:2`, `disjoint-union:3:johnson2`.
    pub fn parse_spec(spec: &str) -> Result<Family, FamilyError> {
        let mut parts = spec.splitn(3, ':');
        let name = parts.next().unwrap_or("");
        let arg = parts.next();
        let rest = parts.next();
        let parse_k = |name: &str, arg: Option<&str>| -> Result<u32, FamilyError> {
            arg.and_then(|a| a.parse::<u32>().ok())
                .ok_or_else(|| FamilyError::UnknownName(format!("{name} (missing :k)")))
        };
        let fam = match name {
            "complete" => Family::Complete,
            "kneser2" => Family::Kneser2,
            "johnson2" => Family::Johnson2,
            "complete-bipartite" => Family::CompleteBipartite,
            "singletons-vs-orbit" => Family::SingletonsVsOrbit {
                k: parse_k(name, arg)?,
            },
            "copies-of-complete" => Family::CopiesOfComplete {
                k: parse_k(name, arg)?,
            },
            "copies-of-kneser2" => Family::CopiesOfKneser2 {
                k: parse_k(name, arg)?,
            },
            "disjoint-union" => {
                let k = parse_k(name, arg)?;
                let inner = rest.ok_or_else(|| {
                    FamilyError::UnknownName("disjoint-union (missing :k:inner)".to_string())
                })?;
                Family::DisjointUnion {
                    k,
                    inner: Box::new(Family::parse_spec(inner)?),
                }
            }
            "johnson-union-shifted" => Family::JohnsonUnionShifted,
            other => return Err(FamilyError::UnknownName(other.to_string())),
        };
        Ok(fam)
    }
}

fn padded_id(prefix: &str, i: u32, k: u32) -> String {
    let width = k.to_string().len();
    format!("{prefix}{:0width$}", i + 1)
}

/// Builds the classification graph of a named family. Output always passes
/// [`ClassificationGraph::validate`].
pub fn family(f: &Family) -> Result<ClassificationGraph, FamilyError> {
    use EdgeLabel::*;
    use OrbitKind::*;
    let check_k = |name: &str, k: u32| -> Result<(), FamilyError> {
        if k < 1 {
            Err(FamilyError::InvalidParam {
                family: name.to_string(),
                k,
            })
        } else {
            Ok(())
        }
    };
    let c = match f {
        Family::Complete => ClassificationGraph::new(
            vec![("lin".into(), Linear)],
            vec![("lin".into(), LinComplete)],
            vec![],
        ),
        Family::Kneser2 => ClassificationGraph::new(
            vec![("pairs".into(), Pair)],
            vec![("pairs".into(), PairDisjoint)],
            vec![],
        ),
        Family::Johnson2 => ClassificationGraph::new(
            vec![("pairs".into(), Pair)],
            vec![("pairs".into(), PairShare1)],
            vec![],
        ),
        Family::CompleteBipartite => ClassificationGraph::new(
            vec![("left".into(), Linear), ("right".into(), Linear)],
            vec![],
            vec![
                ("left".into(), "right".into(), LLShare0),
                ("left".into(), "right".into(), LLShare1),
            ],
        ),
        Family::SingletonsVsOrbit { k } => {
            check_k("singletons-vs-orbit", *k)?;
            let mut orbits = vec![("lin".to_string(), Linear)];
            let mut edges = Vec::new();
            for i in 0..*k {
                let id = padded_id("s", i, *k);
                orbits.push((id.clone(), Singleton));
                edges.push((id, "lin".to_string(), AllToSingleton));
            }
            ClassificationGraph::new(orbits, vec![], edges)
        }
        Family::CopiesOfComplete { k } => {
            check_k("copies-of-complete", *k)?;
            let ids: Vec<String> = (0..*k).map(|i| padded_id("l", i, *k)).collect();
            let orbits = ids.iter().map(|id| (id.clone(), Linear)).collect();
            let loops = ids.iter().map(|id| (id.clone(), LinComplete)).collect();
            let mut edges = Vec::new();
            for i in 0..ids.len() {
                for j in i + 1..ids.len() {
                    edges.push((ids[i].clone(), ids[j].clone(), LLShare1));
                }
            }
            ClassificationGraph::new(orbits, loops, edges)
        }
        Family::CopiesOfKneser2 { k } => {
            check_k("copies-of-kneser2", *k)?;
            let ids: Vec<String> = (0..*k).map(|i| padded_id("p", i, *k)).collect();
            let orbits = ids.iter().map(|id| (id.clone(), Pair)).collect();
            let loops = ids.iter().map(|id| (id.clone(), PairDisjoint)).collect();
            let mut edges = Vec::new();
            for i in 0..ids.len() {
                for j in i + 1..ids.len() {
                    edges.push((ids[i].clone(), ids[j].clone(), PPShare1));
                    edges.push((ids[i].clone(), ids[j].clone(), PPShare2));
                }
            }
            ClassificationGraph::new(orbits, loops, edges)
        }
        Family::DisjointUnion { k, inner } => {
            check_k("disjoint-union", *k)?;
            let base = family(inner)?;
            let mut orbits = Vec::new();
            let mut loops = Vec::new();
            let mut edges = Vec::new();
            for i in 0..*k {
                let prefix = padded_id("c", i, *k);
                for o in base.orbits() {
                    orbits.push((format!("{prefix}_{}", o.id), o.kind));
                }
                for (orbit, label) in base.loops() {
                    loops.push((format!("{prefix}_{orbit}"), *label));
                }
                for (a, b, label) in base.edges() {
                    edges.push((format!("{prefix}_{a}"), format!("{prefix}_{b}"), *label));
                }
            }
            ClassificationGraph::new(orbits, loops, edges)
        }
        Family::JohnsonUnionShifted => ClassificationGraph::new(
            vec![
                ("pa".into(), Pair),
                ("pb".into(), Pair),
                ("lin".into(), Linear),
            ],
            vec![
                ("pa".into(), PairShare1),
                ("pb".into(), PairShare1),
                ("lin".into(), LinComplete),
            ],
            vec![("pb".into(), "lin".into(), PLShare1)],
        ),
    };
    Ok(c.expect("family construction is valid by definition"))
}

// ============================================================================
// Random generation
// ============================================================================

/// Inclusive count range, sampled uniformly.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CountRange {
    pub min: u32,
    pub max: u32,
}

impl CountRange {
    pub fn exact(n: u32) -> Self {
        CountRange { min: n, max: n }
    }

    pub fn new(min: u32, max: u32) -> Self {
        CountRange { min, max }
    }
}

/// Parameters of [`random`]: orbit counts, an independent inclusion
/// probability applied to every admissible loop/edge label, and a seed.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct RandomGenParams {
    pub pair_orbits: CountRange,
    pub linear_orbits: CountRange,
    pub singletons: CountRange,
    /// Probability in `[0, 1]` that each admissible label is present.
    pub edge_probability: f64,
    pub seed: u64,
}

#[derive(Debug, Error)]
pub enum RandomGenError {
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("count range has min {min} > max {max}")]
    BadRange { min: u32, max: u32 },
}

/// Draws a random classification graph. Deterministic in the seed, and the
/// output is valid by construction: labels are only ever drawn from the
/// admissible set for their endpoints.
pub fn random(params: &RandomGenParams) -> Result<ClassificationGraph, RandomGenError> {
    if !(0.0..=1.0).contains(&params.edge_probability) {
        return Err(RandomGenError::BadProbability(params.edge_probability));
    }
    for r in [params.pair_orbits, params.linear_orbits, params.singletons] {
        if r.min > r.max {
            return Err(RandomGenError::BadRange {
                min: r.min,
                max: r.max,
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut sample = |r: CountRange| -> u32 {
        if r.min == r.max {
            r.min
        } else {
            rng.random_range(r.min..=r.max)
        }
    };
    let pairs = sample(params.pair_orbits);
    let linears = sample(params.linear_orbits);
    let singles = sample(params.singletons);

    let mut orbits: Vec<(String, OrbitKind)> = Vec::new();
    for i in 0..pairs {
        orbits.push((padded_id("p", i, pairs.max(1)), OrbitKind::Pair));
    }
    for i in 0..linears {
        orbits.push((padded_id("l", i, linears.max(1)), OrbitKind::Linear));
    }
    for i in 0..singles {
        orbits.push((padded_id("s", i, singles.max(1)), OrbitKind::Singleton));
    }

    let mut loops = Vec::new();
    let mut edges = Vec::new();
    let p = params.edge_probability;
    for (id, kind) in &orbits {
        for label in admissible_loop_labels(*kind) {
            if rng.random_bool(p) {
                loops.push((id.clone(), *label));
            }
        }
    }
    for i in 0..orbits.len() {
        for j in i + 1..orbits.len() {
            let (ida, ka) = &orbits[i];
            let (idb, kb) = &orbits[j];
            for label in admissible_edge_labels(*ka, *kb) {
                if rng.random_bool(p) {
                    edges.push((ida.clone(), idb.clone(), *label));
                }
            }
        }
    }

    let c = ClassificationGraph::from_parts(orbits, loops, edges);
    debug_assert!(c.validate().is_ok());
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn kneser2() -> ClassificationGraph {
        family(&Family::Kneser2).unwrap()
    }

    #[test]
    fn validate_accepts_kneser2() {
        assert!(kneser2().validate().is_ok());
    }

    #[test]
    fn validate_accepts_empty_graph() {
        assert!(ClassificationGraph::empty().validate().is_ok());
    }

    #[test]
    fn validate_rejects_loop_on_singleton() {
        let c = ClassificationGraph::from_parts(
            vec![("s".into(), OrbitKind::Singleton)],
            vec![("s".into(), EdgeLabel::AllToSingleton)],
            vec![],
        );
        assert!(matches!(
            c.validate(),
            Err(ValidationError::LoopOnSingleton { .. })
        ));
    }

    #[test]
    fn validate_rejects_duplicate_loop_label() {
        let c = ClassificationGraph::from_parts(
            vec![("p".into(), OrbitKind::Pair)],
            vec![
                ("p".into(), EdgeLabel::PairDisjoint),
                ("p".into(), EdgeLabel::PairDisjoint),
            ],
            vec![],
        );
        assert!(matches!(
            c.validate(),
            Err(ValidationError::DuplicateLabel { rule: 6, .. })
        ));
    }

    #[test]
    fn validate_rejects_duplicate_edge_label_either_orientation() {
        let c = ClassificationGraph::from_parts(
            vec![("a".into(), OrbitKind::Linear), ("b".into(), OrbitKind::Linear)],
            vec![],
            vec![
                ("a".into(), "b".into(), EdgeLabel::LLShare0),
                ("b".into(), "a".into(), EdgeLabel::LLShare0),
            ],
        );
        assert!(matches!(
            c.validate(),
            Err(ValidationError::DuplicateLabel { rule: 7, .. })
        ));
    }

    #[test]
    fn validate_rejects_incompatible_labels() {
        let c = ClassificationGraph::from_parts(
            vec![("p".into(), OrbitKind::Pair)],
            vec![("p".into(), EdgeLabel::LinComplete)],
            vec![],
        );
        assert!(matches!(
            c.validate(),
            Err(ValidationError::IncompatibleLabel { rule: 4, .. })
        ));
        let c = ClassificationGraph::from_parts(
            vec![("p".into(), OrbitKind::Pair), ("l".into(), OrbitKind::Linear)],
            vec![],
            vec![("p".into(), "l".into(), EdgeLabel::LLShare0)],
        );
        assert!(matches!(
            c.validate(),
            Err(ValidationError::IncompatibleLabel { rule: 5, .. })
        ));
    }

    #[test]
    fn validate_rejects_unknown_orbit_and_duplicate_id() {
        let c = ClassificationGraph::from_parts(
            vec![("p".into(), OrbitKind::Pair)],
            vec![("q".into(), EdgeLabel::PairDisjoint)],
            vec![],
        );
        assert!(matches!(
            c.validate(),
            Err(ValidationError::UnknownOrbitRef { .. })
        ));
        let c = ClassificationGraph::from_parts(
            vec![("p".into(), OrbitKind::Pair), ("p".into(), OrbitKind::Linear)],
            vec![],
            vec![],
        );
        assert!(matches!(
            c.validate(),
            Err(ValidationError::DuplicateOrbitId { .. })
        ));
    }

    #[test]
    fn parse_kneser_document() {
        let doc = br#"{
            "orbits": [{"id": "pairs", "kind": "pair"}],
            "loops": [{"orbit": "pairs", "label": "PairDisjoint"}]
        }"#;
        let c = parse(doc).unwrap();
        assert_eq!(c, kneser2());
        let (p, l, s) = c.orbit_counts();
        assert_eq!((p, l, s), (1, 0, 0));
        assert_eq!(c.loops().len(), 1);
    }

    #[test]
    fn parse_rejects_ordered_pair_kind() {
        let doc = br#"{"orbits": [{"id": "o", "kind": "ordered-pair"}]}"#;
        assert!(matches!(
            parse(doc),
            Err(ParseError::OrderedPairUnsupported { .. })
        ));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(parse(b"not json"), Err(ParseError::Malformed(_))));
        let doc = br#"{"orbits": [{"id": "o", "kind": "blob"}]}"#;
        assert!(matches!(parse(doc), Err(ParseError::UnknownKind { .. })));
        let doc = br#"{"orbits": [{"id": "p", "kind": "pair"}],
                       "loops": [{"orbit": "p", "label": "Nope"}]}"#;
        assert!(matches!(parse(doc), Err(ParseError::UnknownLabel { .. })));
    }

    #[test]
    fn serialize_parse_round_trip_is_canonical_identity() {
        let knn = family(&Family::CompleteBipartite).unwrap();
        let bytes = knn.serialize();
        let back = parse(&bytes).unwrap();
        assert_eq!(back, knn.canonicalize());
        // A second round trip is byte-equal: canonical form is a fixed point.
        assert_eq!(back.serialize(), bytes);
    }

    #[test]
    fn family_complete_bipartite_shape() {
        let c = family(&Family::CompleteBipartite).unwrap();
        assert_eq!(c.orbit_counts(), (0, 2, 0));
        let labels: Vec<EdgeLabel> = c.edges().iter().map(|e| e.2).collect();
        assert_eq!(labels, vec![EdgeLabel::LLShare0, EdgeLabel::LLShare1]);
    }

    #[test]
    fn family_copies_of_kneser2_shape() {
        let c = family(&Family::CopiesOfKneser2 { k: 2 }).unwrap();
        assert_eq!(c.orbit_counts(), (2, 0, 0));
        assert_eq!(c.loops().len(), 2);
        assert!(c
            .loops()
            .iter()
            .all(|(_, l)| *l == EdgeLabel::PairDisjoint));
        let mut labels: Vec<EdgeLabel> = c.edges().iter().map(|e| e.2).collect();
        labels.sort();
        assert_eq!(labels, vec![EdgeLabel::PPShare1, EdgeLabel::PPShare2]);
    }

    #[test]
    fn family_rejects_zero_k() {
        assert!(matches!(
            family(&Family::CopiesOfComplete { k: 0 }),
            Err(FamilyError::InvalidParam { .. })
        ));
    }

    #[test]
    fn family_spec_parsing() {
        assert_eq!(Family::parse_spec("kneser2").unwrap(), Family::Kneser2);
        assert_eq!(
            Family::parse_spec("copies-of-kneser2:3").unwrap(),
            Family::CopiesOfKneser2 { k: 3 }
        );
        assert_eq!(
            Family::parse_spec("disjoint-union:2:johnson2").unwrap(),
            Family::DisjointUnion {
                k: 2,
                inner: Box::new(Family::Johnson2)
            }
        );
        assert!(Family::parse_spec("nope").is_err());
        assert!(Family::parse_spec("copies-of-complete").is_err());
    }

    #[test]
    fn predicates_on_named_families() {
        let kneser = kneser2();
        assert!(!kneser.has_quadratic_independent_orbit());
        assert!(!kneser.has_johnson_orbit());
        let johnson = family(&Family::Johnson2).unwrap();
        assert!(!johnson.has_quadratic_independent_orbit());
        assert!(johnson.has_johnson_orbit());
        assert!(johnson.has_isolated_johnson_orbit());
        let bare = ClassificationGraph::new(vec![("p".into(), OrbitKind::Pair)], vec![], vec![])
            .unwrap();
        assert!(bare.has_quadratic_independent_orbit());
        assert!(!bare.has_johnson_orbit());
    }

    #[test]
    fn johnson_union_shifted_has_non_isolated_johnson_orbit() {
        let c = family(&Family::JohnsonUnionShifted).unwrap();
        assert!(c.has_johnson_orbit());
        assert_eq!(c.johnson_orbits().len(), 2);
        // "pa" has no cross edges, so the strict reading also fires for it.
        assert!(c.has_isolated_johnson_orbit());
    }

    #[test]
    fn random_is_deterministic_per_seed() {
        let params = RandomGenParams {
            pair_orbits: CountRange::new(0, 2),
            linear_orbits: CountRange::new(0, 2),
            singletons: CountRange::new(0, 2),
            edge_probability: 0.5,
            seed: 42,
        };
        let a = random(&params).unwrap();
        let b = random(&params).unwrap();
        assert_eq!(a, b);
        assert!(a.validate().is_ok());
    }

    #[test]
    fn random_seeds_give_distinct_outputs() {
        // Fixed counts keep the label space at 2^23 possibilities, so 100
        // draws collide with negligible probability.
        let mut digests = HashSet::new();
        for seed in 0..100 {
            let params = RandomGenParams {
                pair_orbits: CountRange::exact(2),
                linear_orbits: CountRange::exact(2),
                singletons: CountRange::exact(1),
                edge_probability: 0.5,
                seed,
            };
            digests.insert(random(&params).unwrap().digest());
        }
        assert!(digests.len() >= 99, "only {} distinct outputs", digests.len());
    }

    #[test]
    fn random_with_zero_pairs_is_vertex_linear() {
        let params = RandomGenParams {
            pair_orbits: CountRange::exact(0),
            linear_orbits: CountRange::new(1, 3),
            singletons: CountRange::new(0, 2),
            edge_probability: 0.7,
            seed: 7,
        };
        let c = random(&params).unwrap();
        assert_eq!(c.orbit_counts().0, 0);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn random_with_p_one_includes_every_admissible_label() {
        let params = RandomGenParams {
            pair_orbits: CountRange::exact(2),
            linear_orbits: CountRange::exact(0),
            singletons: CountRange::exact(1),
            edge_probability: 1.0,
            seed: 0,
        };
        let c = random(&params).unwrap();
        // Independent enumeration of the admissible table for 2 pair orbits
        // and 1 singleton: 2 loops per pair orbit, 3 pair-pair labels, and
        // one all-to-singleton edge per pair orbit.
        assert_eq!(c.loops().len(), 4);
        let pp = c
            .edges()
            .iter()
            .filter(|e| {
                matches!(
                    e.2,
                    EdgeLabel::PPShare0 | EdgeLabel::PPShare1 | EdgeLabel::PPShare2
                )
            })
            .count();
        let to_singleton = c
            .edges()
            .iter()
            .filter(|e| e.2 == EdgeLabel::AllToSingleton)
            .count();
        assert_eq!(pp, 3);
        assert_eq!(to_singleton, 2);
        assert_eq!(c.edges().len(), 5);
    }

    #[test]
    fn random_rejects_bad_params() {
        let mut params = RandomGenParams {
            pair_orbits: CountRange::exact(1),
            linear_orbits: CountRange::exact(0),
            singletons: CountRange::exact(0),
            edge_probability: 1.5,
            seed: 0,
        };
        assert!(matches!(
            random(&params),
            Err(RandomGenError::BadProbability(_))
        ));
        params.edge_probability = 0.5;
        params.pair_orbits = CountRange { min: 2, max: 1 };
        assert!(matches!(random(&params), Err(RandomGenError::BadRange { .. })));
    }

    #[test]
    fn digest_is_stable_under_reordering() {
        let a = ClassificationGraph::new(
            vec![("a".into(), OrbitKind::Linear), ("b".into(), OrbitKind::Linear)],
            vec![],
            vec![
                ("a".into(), "b".into(), EdgeLabel::LLShare1),
                ("a".into(), "b".into(), EdgeLabel::LLShare0),
            ],
        )
        .unwrap();
        let b = ClassificationGraph::new(
            vec![("b".into(), OrbitKind::Linear), ("a".into(), OrbitKind::Linear)],
            vec![],
            vec![
                ("b".into(), "a".into(), EdgeLabel::LLShare0),
                ("a".into(), "b".into(), EdgeLabel::LLShare1),
            ],
        )
        .unwrap();
        assert_eq!(a.digest(), b.digest());
    }
}
