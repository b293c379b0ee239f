//! Simple undirected graphs with bitset adjacency, the commuting and super
//! commuting graph constructors, and DOT / edge-list export.

use std::fmt::Write as _;

use thiserror::Error;

use crate::group::{Group, Partition};

/// A simple undirected graph on vertices `0..n`. Adjacency is kept as one
/// bitset row per vertex; the diagonal stays empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices (`n = 0` gives the empty graph).
    pub fn edgeless(n: usize) -> Graph {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            labels: None,
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::edgeless(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no self-loops in a simple graph");
        assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.bits[v * self.words..(v + 1) * self.words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn n_edges(&self) -> u64 {
        let total: u64 = self.degrees().iter().map(|&d| d as u64).sum();
        total / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Vertices adjacent to every other vertex.
    pub fn dominant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == self.n - 1).collect()
    }

    /// True when every edge of `self` is an edge of `other` (same vertex
    /// count required).
    pub fn is_edge_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n
            && self
                .bits
                .iter()
                .zip(&other.bits)
                .all(|(a, b)| a & !b == 0)
    }

    /// Subgraph induced on `verts`, which become `0..verts.len()` in the
    /// given order; labels are inherited.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::edgeless(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            assert!(u < self.n, "vertex {u} out of range");
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(verts.iter().map(|&u| labels[u].clone()).collect());
        }
        g
    }

    /// Join: both graphs side by side plus all edges between them.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..self.n + other.n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::edgeless(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    fn label_of(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// DOT rendering: every vertex declared, then one line per edge, labels
    /// quoted.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  \"{}\";", self.label_of(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.label_of(u), self.label_of(v));
        }
        out.push_str("}\n");
        out
    }

    /// Edge-list rendering: `# vertices N` header, then `u v` pairs with
    /// `u < v`, ascending, 0-based.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# vertices {}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list format. Blank lines and extra `#` comment lines
    /// are ignored; endpoints may come in either order.
    pub fn from_edge_list(text: &str) -> Result<Graph, EdgeListError> {
        let mut g: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('#') {
                let mut it = rest.split_whitespace();
                if g.is_none() {
                    if it.next() != Some("vertices") {
                        return Err(EdgeListError {
                            line,
                            message: "first line must be '# vertices N'".into(),
                        });
                    }
                    let n: usize = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(EdgeListError {
                            line,
                            message: "missing vertex count".into(),
                        })?;
                    if it.next().is_some() {
                        return Err(EdgeListError {
                            line,
                            message: "trailing tokens after vertex count".into(),
                        });
                    }
                    g = Some(Graph::edgeless(n));
                }
                continue;
            }
            let g = g.as_mut().ok_or(EdgeListError {
                line,
                message: "edge before '# vertices N' header".into(),
            })?;
            let mut it = trimmed.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, EdgeListError> {
                tok.and_then(|t| t.parse().ok()).ok_or(EdgeListError {
                    line,
                    message: "expected 'u v' with integer endpoints".into(),
                })
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(EdgeListError {
                    line,
                    message: "trailing tokens after edge".into(),
                });
            }
            if u == v {
                return Err(EdgeListError {
                    line,
                    message: format!("self-loop at vertex {u}"),
                });
            }
            if u >= g.n || v >= g.n {
                return Err(EdgeListError {
                    line,
                    message: format!("endpoint out of range for {} vertices", g.n),
                });
            }
            g.add_edge(u, v);
        }
        g.ok_or(EdgeListError {
            line: 0,
            message: "empty file".into(),
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("malformed edge list (line {line}): {message}")]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("partition covers {found} elements but the group has {expected}")]
    PartitionMismatch { expected: usize, found: usize },
    #[error("composition host has {host} vertices but {parts} part graphs were given")]
    ArityMismatch { host: usize, parts: usize },
}

/// The commuting graph: group elements, edges between distinct commuting
/// pairs.
pub fn commuting_graph(g: &Group) -> Graph {
    let n = g.size();
    let mut graph = Graph::edgeless(n);
    for x in 0..n {
        for y in (x + 1)..n {
            if g.commutes(x, y) {
                graph.add_edge(x, y);
            }
        }
    }
    graph
}

/// The super commuting graph over a partition: distinct `x`, `y` are adjacent
/// iff they share a block or some members of their blocks commute. Adjacency
/// between distinct blocks is decided once per block pair and broadcast.
pub fn super_commuting_graph(g: &Group, p: &Partition) -> Result<Graph, GraphError> {
    if p.n_elements() != g.size() {
        return Err(GraphError::PartitionMismatch {
            expected: g.size(),
            found: p.n_elements(),
        });
    }
    let blocks = p.blocks();
    let nb = blocks.len();
    let mut block_adj = vec![false; nb * nb];
    for i in 0..nb {
        for j in (i + 1)..nb {
            let adjacent = blocks[i]
                .iter()
                .any(|&x| blocks[j].iter().any(|&y| g.commutes(x, y)));
            block_adj[i * nb + j] = adjacent;
            block_adj[j * nb + i] = adjacent;
        }
    }
    let n = g.size();
    let mut graph = Graph::edgeless(n);
    for x in 0..n {
        let bx = p.block_of(x);
        for y in (x + 1)..n {
            let by = p.block_of(y);
            if bx == by || block_adj[bx * nb + by] {
                graph.add_edge(x, y);
            }
        }
    }
    Ok(graph)
}

/// Schwenk's generalized composition `H[parts]`: each vertex `i` of the host
/// is replaced by `parts[i]`, with complete bipartite connections along host
/// edges.
pub fn generalized_composition(host: &Graph, parts: &[Graph]) -> Result<Graph, GraphError> {
    if parts.len() != host.n_vertices() {
        return Err(GraphError::ArityMismatch {
            host: host.n_vertices(),
            parts: parts.len(),
        });
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut total = 0;
    for part in parts {
        offsets.push(total);
        total += part.n_vertices();
    }
    let mut g = Graph::edgeless(total);
    for (i, part) in parts.iter().enumerate() {
        for (u, v) in part.edges() {
            g.add_edge(offsets[i] + u, offsets[i] + v);
        }
    }
    for (i, j) in host.edges() {
        for u in 0..parts[i].n_vertices() {
            for v in 0..parts[j].n_vertices() {
                g.add_edge(offsets[i] + u, offsets[j] + v);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate_group;
    use crate::presentation::{Family, FamilySpec, Presentation};

    fn family_group(family: Family, params: &[u64]) -> Group {
        let spec = FamilySpec::new(family, params).unwrap();
        enumerate_group(&spec.presentation(), Some(spec.expected_order() as usize)).unwrap()
    }

    #[test]
    fn commuting_graph_of_abelian_group_is_complete() {
        let p = Presentation::parse("<a | a^5>").unwrap();
        let g = enumerate_group(&p, Some(5)).unwrap();
        assert_eq!(commuting_graph(&g), Graph::complete(5));
    }

    #[test]
    fn commuting_graph_of_trivial_group_is_k1() {
        let g = enumerate_group(&Presentation::parse("<a | a>").unwrap(), Some(1)).unwrap();
        let c = commuting_graph(&g);
        assert_eq!(c.n_vertices(), 1);
        assert_eq!(c.n_edges(), 0);
    }

    #[test]
    fn commuting_graph_of_d6() {
        let g = family_group(Family::Dihedral, &[3]);
        let c = commuting_graph(&g);
        let center = g.center();
        assert_eq!(center, vec![0]);
        for v in 1..g.size() {
            assert!(c.has_edge(0, v));
        }
        let b = g.generator("b").unwrap();
        let a = g.generator("a").unwrap();
        let ab = g.mul(a, b);
        assert!(!c.has_edge(b, ab));
        // noncentral part: the two rotations commute, reflections are isolated
        let noncentral: Vec<usize> = (1..6).collect();
        let sub = c.induced_subgraph(&noncentral);
        assert_eq!(sub.n_edges(), 1);
    }

    #[test]
    fn one_block_partition_gives_complete_graph() {
        let g = family_group(Family::Quaternion, &[2]);
        let p = Partition::from_blocks(vec![(0..8).collect()], 8).unwrap();
        assert_eq!(super_commuting_graph(&g, &p).unwrap(), Graph::complete(8));
    }

    #[test]
    fn oscom_q8_is_complete() {
        let g = family_group(Family::Quaternion, &[2]);
        let graph = super_commuting_graph(&g, &g.order_partition()).unwrap();
        assert_eq!(graph, Graph::complete(8));
    }

    #[test]
    fn partition_mismatch_is_reported() {
        let g = family_group(Family::Dihedral, &[3]);
        let p = Partition::from_blocks(vec![vec![0, 1]], 2).unwrap();
        assert_eq!(
            super_commuting_graph(&g, &p),
            Err(GraphError::PartitionMismatch {
                expected: 6,
                found: 2
            })
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.induced_subgraph(&[0, 2, 4]), Graph::complete(3));
        let empty = k5.induced_subgraph(&[]);
        assert_eq!(empty.n_vertices(), 0);
        assert_eq!(empty.n_edges(), 0);
    }

    #[test]
    fn join_and_union_examples() {
        assert_eq!(Graph::complete(2).join(&Graph::complete(3)), Graph::complete(5));
        let two_k1 = Graph::edgeless(1).disjoint_union(&Graph::edgeless(1));
        assert_eq!(two_k1.n_vertices(), 2);
        assert_eq!(two_k1.n_edges(), 0);
        assert_eq!(Graph::complete(0).n_vertices(), 0);
    }

    #[test]
    fn composition_of_cliques() {
        let k2 = Graph::complete(2);
        let got = generalized_composition(&k2, &[Graph::complete(1), Graph::complete(2)]).unwrap();
        assert_eq!(got, Graph::complete(3));

        let two_k1 = Graph::edgeless(2);
        let got =
            generalized_composition(&two_k1, &[Graph::complete(2), Graph::complete(3)]).unwrap();
        assert_eq!(got, Graph::complete(2).disjoint_union(&Graph::complete(3)));
    }

    #[test]
    fn composition_arity_mismatch() {
        assert_eq!(
            generalized_composition(&Graph::complete(2), &[Graph::complete(1)]),
            Err(GraphError::ArityMismatch { host: 2, parts: 1 })
        );
    }

    #[test]
    fn escom_equals_center_join_noncentral_commuting() {
        for (family, params) in [
            (Family::Dihedral, vec![3]),
            (Family::Dihedral, vec![4]),
            (Family::Quaternion, vec![3]),
            (Family::U6n, vec![2]),
            (Family::V8n, vec![2]),
        ] {
            let g = family_group(family, &params);
            let escom = super_commuting_graph(&g, &g.equality_partition()).unwrap();
            let center = g.center();
            let noncentral: Vec<usize> =
                (0..g.size()).filter(|v| !center.contains(v)).collect();
            let rebuilt = Graph::complete(center.len())
                .join(&commuting_graph(&g).induced_subgraph(&noncentral));
            // relabel: centre first, then the noncentral elements in order
            let mut order = center.clone();
            order.extend(&noncentral);
            let relabeled = escom.induced_subgraph(&order);
            assert_eq!(relabeled, rebuilt);
        }
    }

    #[test]
    fn central_elements_dominate_every_super_graph() {
        let g = family_group(Family::Quaternion, &[3]);
        for partition in [
            g.equality_partition(),
            g.conjugacy_partition(),
            g.order_partition(),
        ] {
            let graph = super_commuting_graph(&g, &partition).unwrap();
            let dom = graph.dominant_vertices();
            for z in g.center() {
                assert!(dom.contains(&z));
            }
        }
    }

    #[test]
    fn blocks_induce_cliques_and_edges_grow_with_coarsening() {
        let g = family_group(Family::SemiDihedral, &[2]);
        let eq = g.equality_partition();
        let conj = g.conjugacy_partition();
        let ord = g.order_partition();
        let escom = super_commuting_graph(&g, &eq).unwrap();
        let cscom = super_commuting_graph(&g, &conj).unwrap();
        let oscom = super_commuting_graph(&g, &ord).unwrap();
        assert!(commuting_graph(&g).is_edge_subgraph_of(&escom));
        assert!(escom.is_edge_subgraph_of(&cscom));
        assert!(cscom.is_edge_subgraph_of(&oscom));
        for (graph, partition) in [(&cscom, &conj), (&oscom, &ord)] {
            for block in partition.blocks() {
                for (i, &x) in block.iter().enumerate() {
                    for &y in &block[i + 1..] {
                        assert!(graph.has_edge(x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn dot_output_shape() {
        let mut g = Graph::edgeless(3);
        g.add_edge(0, 2);
        g.set_labels(vec!["x".into(), "y".into(), "z".into()]);
        assert_eq!(
            g.to_dot(),
            "graph G {\n  \"x\";\n  \"y\";\n  \"z\";\n  \"x\" -- \"z\";\n}\n"
        );
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::complete(2).disjoint_union(&Graph::complete(3));
        let text = g.to_edge_list();
        assert_eq!(text, "# vertices 5\n0 1\n2 3\n2 4\n3 4\n");
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_rejects_malformed_input() {
        assert!(Graph::from_edge_list("").is_err());
        assert!(Graph::from_edge_list("0 1\n").is_err());
        assert!(Graph::from_edge_list("# vertices 3\n0 3\n").is_err());
        assert!(Graph::from_edge_list("# vertices 3\n1 1\n").is_err());
        assert!(Graph::from_edge_list("# vertices 3\n0 x\n").is_err());
        let err = Graph::from_edge_list("# vertices 2\n0 1 2\n").unwrap_err();
        assert_eq!(err.line, 2);
    }
}
