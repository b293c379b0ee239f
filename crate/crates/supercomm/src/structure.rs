//! Clique-join graphs `K_a v (K_p1 + ... + K_pk)`: canonical form, linear-time
//! recognition via dominant-vertex stripping, and the catalog of predicted
//! forms for every family and relation.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::group::Relation;
use crate::presentation::{Family, FamilySpec};

/// Canonical form of a graph `K_a v (K_p1 + K_p2 + ...)`: the size of the
/// joined complete part plus the multiset of clique sizes. Normalized so that
/// zero-size parts are dropped and a lone part folds into `a` (a join of two
/// cliques is a clique); `parts` is kept sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliqueJoinForm {
    a: usize,
    parts: Vec<usize>,
}

impl CliqueJoinForm {
    /// Builds the normalized form from raw `(a, parts)`.
    pub fn new(a: usize, parts: impl IntoIterator<Item = usize>) -> CliqueJoinForm {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        if parts.len() == 1 {
            return CliqueJoinForm {
                a: a + parts[0],
                parts: Vec::new(),
            };
        }
        CliqueJoinForm { a, parts }
    }

    /// The complete graph `K_n` as a form.
    pub fn complete(n: usize) -> CliqueJoinForm {
        CliqueJoinForm {
            a: n,
            parts: Vec::new(),
        }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    /// Clique sizes, sorted descending.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_complete(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of vertices.
    pub fn total(&self) -> usize {
        self.a + self.parts.iter().sum::<usize>()
    }

    /// Builds the graph: dominant block first, then the parts in descending
    /// size order.
    pub fn build(&self) -> Graph {
        let n = self.total();
        let mut g = Graph::edgeless(n);
        for u in 0..self.a {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        let mut offset = self.a;
        for &p in &self.parts {
            for u in offset..offset + p {
                for v in (u + 1)..offset + p {
                    g.add_edge(u, v);
                }
            }
            offset += p;
        }
        g
    }
}

impl fmt::Display for CliqueJoinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "K_{}", self.a);
        }
        let parts: Vec<String> = self
            .parts
            .iter()
            .rev()
            .map(|p| format!("K_{p}"))
            .collect();
        write!(f, "K_{} v ({})", self.a, parts.join(" + "))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("the empty graph has no clique-join form")]
    EmptyGraph,
    #[error("not a clique join: the component containing vertex {witness} is not a clique")]
    NotCliqueJoin { witness: usize },
}

/// Recognizes `K_a v (disjoint cliques)`: strip the dominant vertices, then
/// every connected component of the rest must be a clique.
pub fn recognize_form(g: &Graph) -> Result<CliqueJoinForm, RecognizeError> {
    let n = g.n_vertices();
    if n == 0 {
        return Err(RecognizeError::EmptyGraph);
    }
    let dominant = g.dominant_vertices();
    let mut is_dominant = vec![false; n];
    for &v in &dominant {
        is_dominant[v] = true;
    }
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if is_dominant[start] || seen[start] {
            continue;
        }
        let mut component = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < component.len() {
            let u = component[head];
            head += 1;
            for v in 0..n {
                if !is_dominant[v] && !seen[v] && g.has_edge(u, v) {
                    seen[v] = true;
                    component.push(v);
                }
            }
        }
        for (i, &u) in component.iter().enumerate() {
            for &v in &component[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(RecognizeError::NotCliqueJoin { witness: u });
                }
            }
        }
        parts.push(component.len());
    }
    Ok(CliqueJoinForm::new(dominant.len(), parts))
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no cataloged structure for {family} under the {relation} relation")]
pub struct NotInCatalog {
    pub family: Family,
    pub relation: Relation,
}

/// The predicted clique-join form of the super commuting graph for a family
/// member under a relation, including every parity case split.
pub fn predicted_form(
    spec: &FamilySpec,
    relation: Relation,
) -> Result<CliqueJoinForm, NotInCatalog> {
    use Relation::*;
    let n = spec.n() as usize;
    let form = match (spec.family(), relation) {
        (Family::Dihedral, Equality) => {
            if n % 2 == 1 {
                CliqueJoinForm::new(1, std::iter::repeat_n(1, n).chain([n - 1]))
            } else {
                CliqueJoinForm::new(2, std::iter::repeat_n(2, n / 2).chain([n - 2]))
            }
        }
        (Family::Dihedral, Conjugacy) => {
            if n % 2 == 1 {
                CliqueJoinForm::new(1, [n - 1, n])
            } else if (n / 2).is_multiple_of(2) {
                CliqueJoinForm::new(2, [n - 2, n / 2, n / 2])
            } else {
                CliqueJoinForm::new(2, [n - 2, n])
            }
        }
        (Family::Dihedral, Order) => {
            if n.is_multiple_of(2) {
                CliqueJoinForm::complete(2 * n)
            } else {
                CliqueJoinForm::new(1, [n - 1, n])
            }
        }
        (Family::Quaternion, Equality) => {
            CliqueJoinForm::new(2, std::iter::repeat_n(2, n).chain([2 * n - 2]))
        }
        (Family::Quaternion, Conjugacy) => {
            if n.is_multiple_of(2) {
                CliqueJoinForm::new(2, [2 * n - 2, n, n])
            } else {
                CliqueJoinForm::new(2, [2 * n - 2, 2 * n])
            }
        }
        (Family::Quaternion, Order) => {
            if n.is_multiple_of(2) {
                CliqueJoinForm::complete(4 * n)
            } else {
                CliqueJoinForm::new(2, [2 * n, 2 * n - 2])
            }
        }
        (Family::V8n, Equality) => {
            if n.is_multiple_of(2) {
                CliqueJoinForm::new(4, std::iter::repeat_n(4, n).chain([4 * n - 4]))
            } else {
                CliqueJoinForm::new(2, std::iter::repeat_n(2, 2 * n).chain([4 * n - 2]))
            }
        }
        (Family::V8n, Conjugacy) => {
            if n.is_multiple_of(2) {
                CliqueJoinForm::new(4, [4 * n - 4, 2 * n, 2 * n])
            } else {
                CliqueJoinForm::new(2, [4 * n - 2, 2 * n, 2 * n])
            }
        }
        (Family::V8n, Order) => {
            if n.is_multiple_of(2) {
                CliqueJoinForm::complete(8 * n)
            } else {
                CliqueJoinForm::new(2 * n + 4, [2 * n, 4 * n - 4])
            }
        }
        (Family::SemiDihedral, Equality) => {
            if n.is_multiple_of(2) {
                CliqueJoinForm::new(2, std::iter::repeat_n(2, 2 * n).chain([4 * n - 2]))
            } else {
                CliqueJoinForm::new(4, std::iter::repeat_n(4, n).chain([4 * n - 4]))
            }
        }
        (Family::SemiDihedral, Conjugacy) => {
            if n.is_multiple_of(2) {
                CliqueJoinForm::new(2, [4 * n - 2, 2 * n, 2 * n])
            } else {
                CliqueJoinForm::new(4, [4 * n - 4, 4 * n])
            }
        }
        (Family::SemiDihedral, Order) => CliqueJoinForm::complete(8 * n),
        (Family::QuasiDihedral, relation) => {
            let half = 1usize << (spec.m() - 3);
            if relation == Order {
                CliqueJoinForm::complete(1 << spec.m())
            } else {
                let sd = FamilySpec::new(Family::SemiDihedral, &[half as u64])
                    .expect("m >= 4 gives n >= 2");
                return predicted_form(&sd, relation);
            }
        }
        (Family::U6n, Equality) => {
            CliqueJoinForm::new(n, [2 * n, n, n, n])
        }
        (Family::U6n, Conjugacy) => CliqueJoinForm::new(n, [2 * n, 3 * n]),
        (Family::U6n, Order) => {
            // a central element of order 3 joins the order class of b
            // whenever 3 | n, which makes the whole graph complete
            if n.is_multiple_of(3) {
                CliqueJoinForm::complete(6 * n)
            } else {
                CliqueJoinForm::new(n, [2 * n, 3 * n])
            }
        }
        (Family::M2mn, Equality) => {
            let m = spec.m() as usize;
            if m % 2 == 1 {
                CliqueJoinForm::new(n, std::iter::repeat_n(n, m).chain([(m - 1) * n]))
            } else {
                CliqueJoinForm::new(
                    2 * n,
                    std::iter::repeat_n(2 * n, m / 2)
                        .chain([(m / 2 - 1) * 2 * n]),
                )
            }
        }
        (Family::M2mn, Conjugacy) => {
            let m = spec.m() as usize;
            if m % 2 == 1 {
                CliqueJoinForm::new(n, [m * n - n, m * n])
            } else if (m / 2).is_multiple_of(2) {
                CliqueJoinForm::new(2 * n, [m * n / 2, m * n / 2, m * n - 2 * n])
            } else {
                CliqueJoinForm::new(2 * n, [m * n, m * n - 2 * n])
            }
        }
        (Family::M2mn, Order) => {
            return Err(NotInCatalog {
                family: spec.family(),
                relation,
            })
        }
    };
    Ok(form)
}
