//! Edge ideals of labeled graphs.
//!
//! Every vertex contributes one polynomial variable; every edge contributes
//! the square-free degree-2 monomial on its endpoints. For such ideals the
//! minimal primes of the quotient are generated by minimal vertex covers, so
//! the Krull dimension of the quotient ring equals `|V| - tau` where `tau`
//! is the minimum vertex cover size. Since `alpha + tau = |V|`, the Krull
//! dimension computed this way must equal the independence number - and
//! because the cover comes from its own exhaustive search, comparing the two
//! numbers cross-checks two independent solvers.

use crate::expand::{ConcreteGraph, Payload};
use crate::solver::{alpha_bruteforce, min_vertex_cover, CoverMethod, SolverError};
use serde::Serialize;

/// The edge ideal of a graph: variables, degree-2 generators, and the Krull
/// dimension of the quotient ring.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeIdealPresentation {
    /// One variable per vertex, in vertex order, e.g. `x_{1,2}`.
    pub variables: Vec<String>,
    /// Generator monomials as vertex index pairs `(u, v)`, `u < v`, ascending.
    pub generators: Vec<(u32, u32)>,
    /// Krull dimension of the quotient ring, `|V| - tau`.
    pub krull_dim: usize,
    /// How `tau` was obtained (exhaustive cover search vs. alpha complement).
    pub method: CoverMethod,
}

/// Variable names for the vertices of `g`.
///
/// Subscripts are the combinatorial labels; the orbit id is prefixed only
/// when the graph has more than one orbit, so `K_5` reads `x_1..x_5` and a
/// single pair orbit reads `x_{1,2}, x_{1,3}, ...`.
pub fn variable_names(g: &ConcreteGraph) -> Vec<String> {
    let single_orbit = g
        .vertices()
        .windows(2)
        .all(|w| w[0].orbit == w[1].orbit);
    g.vertices()
        .iter()
        .map(|label| {
            let numbers = match &label.payload {
                Payload::Pair { a, b } => format!("{a},{b}"),
                Payload::Element(c) => format!("{c}"),
                Payload::Unit => String::new(),
                Payload::Set(s) => s
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            };
            let subscript = match (single_orbit, numbers.is_empty()) {
                (true, false) => numbers,
                (true, true) => label.orbit.clone(),
                (false, false) => format!("{},{}", label.orbit, numbers),
                (false, true) => label.orbit.clone(),
            };
            if subscript.len() == 1 {
                format!("x_{subscript}")
            } else {
                format!("x_{{{subscript}}}")
            }
        })
        .collect()
}

/// Builds the edge ideal presentation of `g`, computing the Krull dimension
/// through the vertex-cover route.
pub fn edge_ideal(g: &ConcreteGraph) -> EdgeIdealPresentation {
    let cover = min_vertex_cover(g);
    EdgeIdealPresentation {
        variables: variable_names(g),
        generators: g.edges(),
        krull_dim: g.vertex_count() - cover.size,
        method: cover.method,
    }
}

/// Krull dimension of the quotient by the edge ideal: `|V| - tau`, with
/// `tau` from the exhaustive cover search up to
/// [`crate::solver::BRUTE_LIMIT`] vertices and from the alpha complement
/// beyond that.
pub fn krull_dimension(g: &ConcreteGraph) -> usize {
    g.vertex_count() - min_vertex_cover(g).size
}

impl EdgeIdealPresentation {
    /// `Q[x_1, x_2, ...]`
    pub fn ring_string(&self) -> String {
        format!("Q[{}]", self.variables.join(", "))
    }

    /// Renders the generator of edge `(u, v)` with its two variables in
    /// name order, e.g. `x_{1,4}x_{2,3}`.
    pub fn monomial(&self, u: u32, v: u32) -> String {
        let a = &self.variables[u as usize];
        let b = &self.variables[v as usize];
        if a <= b {
            format!("{a}{b}")
        } else {
            format!("{b}{a}")
        }
    }

    /// `(x_1x_2, x_1x_3, ...)`, or `(0)` for the edgeless graph.
    pub fn ideal_string(&self) -> String {
        if self.generators.is_empty() {
            return "(0)".to_string();
        }
        let monomials: Vec<String> = self
            .generators
            .iter()
            .map(|&(u, v)| self.monomial(u, v))
            .collect();
        format!("({})", monomials.join(", "))
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            variables: &'a [String],
            generators: Vec<String>,
            krull_dim: usize,
            method: CoverMethod,
        }
        let doc = Doc {
            variables: &self.variables,
            generators: self
                .generators
                .iter()
                .map(|&(u, v)| self.monomial(u, v))
                .collect(),
            krull_dim: self.krull_dim,
            method: self.method,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("presentation serializes");
        s.push('\n');
        s
    }
}

/// Result of checking `dim R/I = alpha` with the two sides computed by
/// independent searches.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DimAlphaReport {
    pub krull_dim: usize,
    pub alpha: usize,
    pub equal: bool,
}

/// Compares the vertex-cover Krull dimension against the brute-force
/// independence number. Capped at [`crate::solver::BRUTE_LIMIT`] vertices
/// because both independent routes are exhaustive.
pub fn check_dim_equals_alpha(g: &ConcreteGraph) -> Result<DimAlphaReport, SolverError> {
    let alpha = alpha_bruteforce(g)?;
    let krull_dim = krull_dimension(g);
    Ok(DimAlphaReport {
        krull_dim,
        alpha,
        equal: krull_dim == alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expand::expand;
    use crate::graph_io::raw_graph;
    use crate::model::{family, Family};
    use crate::solver::random_graph;

    #[test]
    fn k5_presentation() {
        let g = expand(&family(&Family::Complete).unwrap(), 5).unwrap();
        let ideal = edge_ideal(&g);
        assert_eq!(ideal.variables, vec!["x_1", "x_2", "x_3", "x_4", "x_5"]);
        assert_eq!(ideal.generators.len(), 10);
        assert_eq!(ideal.krull_dim, 1);
        assert_eq!(ideal.ring_string(), "Q[x_1, x_2, x_3, x_4, x_5]");
        assert!(ideal.ideal_string().starts_with("(x_1x_2, x_1x_3"));
    }

    #[test]
    fn kneser_4_2_presentation() {
        let g = expand(&family(&Family::Kneser2).unwrap(), 4).unwrap();
        let ideal = edge_ideal(&g);
        assert_eq!(ideal.generators.len(), 3);
        assert_eq!(ideal.krull_dim, 3);
        assert_eq!(
            ideal.ideal_string(),
            "(x_{1,2}x_{3,4}, x_{1,3}x_{2,4}, x_{1,4}x_{2,3})"
        );
    }

    #[test]
    fn edgeless_graph_has_zero_generators_and_full_dimension() {
        let g = raw_graph(6, &[]);
        let ideal = edge_ideal(&g);
        assert!(ideal.generators.is_empty());
        assert_eq!(ideal.ideal_string(), "(0)");
        assert_eq!(ideal.krull_dim, 6);
    }

    #[test]
    fn single_vertex_check() {
        let g = raw_graph(1, &[]);
        let report = check_dim_equals_alpha(&g).unwrap();
        assert!(report.equal);
        assert_eq!(report.krull_dim, 1);
        assert_eq!(report.alpha, 1);
    }

    #[test]
    fn dimension_equals_alpha_on_random_graphs() {
        for seed in 0..30u64 {
            let v = 5 + (seed % 9) as usize;
            let p = 0.2 + 0.6 * ((seed % 5) as f64 / 4.0);
            let g = random_graph(v, p, seed.wrapping_mul(7919));
            let report = check_dim_equals_alpha(&g).unwrap();
            assert!(
                report.equal,
                "seed {seed}: dim {} != alpha {}",
                report.krull_dim, report.alpha
            );
        }
    }

    #[test]
    fn generator_count_matches_edge_count() {
        for seed in 0..10u64 {
            let g = random_graph(10, 0.5, seed);
            let ideal = edge_ideal(&g);
            assert_eq!(ideal.generators.len(), g.edge_count());
            assert_eq!(ideal.variables.len(), g.vertex_count());
        }
    }

    #[test]
    fn multi_orbit_variables_carry_orbit_prefix() {
        let g = expand(&family(&Family::CompleteBipartite).unwrap(), 2).unwrap();
        let names = variable_names(&g);
        assert_eq!(
            names,
            vec!["x_{left,1}", "x_{left,2}", "x_{right,1}", "x_{right,2}"]
        );
    }

    #[test]
    fn check_rejects_oversized_graphs() {
        let g = raw_graph(26, &[]);
        assert!(check_dim_equals_alpha(&g).is_err());
    }
}
