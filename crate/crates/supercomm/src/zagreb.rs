//! First and second Zagreb indices, computed exactly: directly from a graph,
//! in closed form from a clique-join shape, and from the per-family
//! polynomial catalog. The `M2/|e| >= M1/|v|` comparison is done
//! cross-multiplied in 128-bit integers, never in floating point.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::group::Relation;
use crate::presentation::{Family, FamilySpec};
use crate::structure::{CliqueJoinForm, NotInCatalog};

/// First Zagreb index: sum of squared degrees.
pub fn m1(g: &Graph) -> i128 {
    g.degrees().iter().map(|&d| (d as i128) * (d as i128)).sum()
}

/// Second Zagreb index: sum of `deg(u) * deg(v)` over edges `uv`.
pub fn m2(g: &Graph) -> i128 {
    let degrees = g.degrees();
    g.edges()
        .iter()
        .map(|&(u, v)| degrees[u] as i128 * degrees[v] as i128)
        .sum()
}

fn choose2(x: i128) -> i128 {
    x * (x - 1) / 2
}

/// Closed-form `(M1, M2)` for `K_a v (K_p1 + ...)`: a dominant vertex has
/// degree `N-1`, a vertex in a part of size `p` has degree `a+p-1`.
pub fn zagreb_closed_form(f: &CliqueJoinForm) -> (i128, i128) {
    let a = f.a() as i128;
    let total = f.total() as i128;
    let dom_deg = total - 1;
    let mut m1 = a * dom_deg * dom_deg;
    let mut m2 = choose2(a) * dom_deg * dom_deg;
    for &p in f.parts() {
        let p = p as i128;
        let part_deg = a + p - 1;
        m1 += p * part_deg * part_deg;
        m2 += a * p * dom_deg * part_deg;
        m2 += choose2(p) * part_deg * part_deg;
    }
    (m1, m2)
}

/// Edge count of the built form: `C(a,2) + a * sum(p) + sum C(p,2)`.
pub fn edge_count_form(f: &CliqueJoinForm) -> i128 {
    let a = f.a() as i128;
    let rest: i128 = f.parts().iter().map(|&p| p as i128).sum();
    choose2(a) + a * rest + f.parts().iter().map(|&p| choose2(p as i128)).sum::<i128>()
}

/// Exact verdict on `M2/|e| >= M1/|v|` for one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZagrebReport {
    pub n_vertices: usize,
    pub n_edges: u64,
    pub m1: i128,
    pub m2: i128,
    /// `m2 * |v| - m1 * |e|`; the inequality holds iff this is >= 0.
    pub margin_numerator: i128,
    pub holds: bool,
    pub strict: bool,
}

impl Serialize for ZagrebReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ZagrebReport", 7)?;
        s.serialize_field("n_vertices", &self.n_vertices)?;
        s.serialize_field("n_edges", &self.n_edges)?;
        s.serialize_field("m1", &self.m1.to_string())?;
        s.serialize_field("m2", &self.m2.to_string())?;
        s.serialize_field("margin_numerator", &self.margin_numerator.to_string())?;
        s.serialize_field("holds", &self.holds)?;
        s.serialize_field("strict", &self.strict)?;
        s.end()
    }
}

impl ZagrebReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Checks the `M2/|e| >= M1/|v|` inequality exactly. An edgeless graph makes
/// the left side undefined; it is reported as vacuously holding with margin 0.
pub fn hansen_check(g: &Graph) -> ZagrebReport {
    assert!(g.n_vertices() >= 1, "needs at least one vertex");
    let e = g.n_edges();
    let (m1v, m2v) = (m1(g), m2(g));
    let margin = if e == 0 {
        0
    } else {
        m2v * g.n_vertices() as i128 - m1v * e as i128
    };
    ZagrebReport {
        n_vertices: g.n_vertices(),
        n_edges: e,
        m1: m1v,
        m2: m2v,
        margin_numerator: margin,
        holds: margin >= 0,
        strict: margin > 0,
    }
}

/// `(M1, M2, |v|, |e|)` evaluated from the per-family polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PaperValues {
    pub m1: i128,
    pub m2: i128,
    pub v: i128,
    pub e: i128,
}

fn exact_div(num: i128, den: i128) -> i128 {
    debug_assert_eq!(num % den, 0, "{num} not divisible by {den}");
    num / den
}

fn complete_values(v: i128) -> PaperValues {
    PaperValues {
        m1: v * (v - 1) * (v - 1),
        m2: choose2(v) * (v - 1) * (v - 1),
        v,
        e: choose2(v),
    }
}

/// Evaluates the cataloged Zagreb polynomials for a family member and
/// relation. The two-parameter family has no order-relation entry.
pub fn paper_polynomials(
    spec: &FamilySpec,
    relation: Relation,
) -> Result<PaperValues, NotInCatalog> {
    use Relation::*;
    let n = spec.n() as i128;
    let values = match (spec.family(), relation) {
        (Family::Dihedral, Equality) => {
            if n % 2 == 1 {
                PaperValues {
                    m1: n.pow(3) + n.pow(2),
                    m2: exact_div(n.pow(4) - n.pow(3) + 3 * n.pow(2) - n, 2),
                    v: 2 * n,
                    e: exact_div(n.pow(2) + n, 2),
                }
            } else {
                PaperValues {
                    m1: n.pow(3) + 4 * n.pow(2) + 6 * n,
                    m2: exact_div(n.pow(4) + n.pow(3) + 21 * n.pow(2), 2),
                    v: 2 * n,
                    e: exact_div(n.pow(2) + 4 * n, 2),
                }
            }
        }
        (Family::Dihedral, Conjugacy) => dihedral_conjugacy(n),
        (Family::Dihedral, Order) => {
            if n % 2 == 0 {
                complete_values(2 * n)
            } else {
                dihedral_conjugacy(n)
            }
        }
        (Family::Quaternion, Equality) => PaperValues {
            m1: 8 * n.pow(3) + 16 * n.pow(2) + 12 * n,
            m2: 8 * n.pow(4) + 4 * n.pow(3) + 42 * n.pow(2),
            v: 4 * n,
            e: 2 * n.pow(2) + 4 * n,
        },
        (Family::Quaternion, Conjugacy) => quaternion_conjugacy(n),
        (Family::Quaternion, Order) => {
            if n % 2 == 0 {
                complete_values(4 * n)
            } else {
                quaternion_conjugacy(n)
            }
        }
        (Family::V8n, Equality) => v8n_equality(n, n % 2 == 0),
        (Family::V8n, Conjugacy) => v8n_conjugacy(n, n % 2 == 0),
        (Family::V8n, Order) => {
            if n % 2 == 0 {
                complete_values(8 * n)
            } else {
                PaperValues {
                    m1: 304 * n.pow(3) + 80 * n.pow(2) + 8 * n,
                    m2: 960 * n.pow(4) + 312 * n.pow(3) + 128 * n.pow(2) - 28 * n,
                    v: 8 * n,
                    e: 24 * n.pow(2) + 4 * n,
                }
            }
        }
        // the semidihedral equality/conjugacy graphs share the V8n shapes
        // with the parity cases swapped
        (Family::SemiDihedral, Equality) => v8n_equality(n, n % 2 == 1),
        (Family::SemiDihedral, Conjugacy) => {
            if n % 2 == 0 {
                v8n_conjugacy(n, false)
            } else {
                PaperValues {
                    m1: 128 * n.pow(3) + 256 * n.pow(2) + 8 * n,
                    m2: 256 * n.pow(4) + 832 * n.pow(3) + 336 * n.pow(2) - 52 * n,
                    v: 8 * n,
                    e: 16 * n.pow(2) + 12 * n,
                }
            }
        }
        (Family::SemiDihedral, Order) => complete_values(8 * n),
        (Family::QuasiDihedral, relation) => {
            if relation == Order {
                complete_values(1i128 << spec.m())
            } else {
                let sd = FamilySpec::new(Family::SemiDihedral, &[1u64 << (spec.m() - 3)])
                    .expect("m >= 4 gives n >= 2");
                return paper_polynomials(&sd, relation);
            }
        }
        (Family::U6n, Equality) => PaperValues {
            m1: 66 * n.pow(3) - 36 * n.pow(2) + 6 * n,
            m2: exact_div(228 * n.pow(4) - 198 * n.pow(3) + 54 * n.pow(2) - 6 * n, 2),
            v: 6 * n,
            e: exact_div(18 * n.pow(2) - 6 * n, 2),
        },
        (Family::U6n, Conjugacy) => u6n_conjugacy(n),
        (Family::U6n, Order) => {
            if n % 3 == 0 {
                complete_values(6 * n)
            } else {
                u6n_conjugacy(n)
            }
        }
        (Family::M2mn, Equality) => {
            let m = spec.m() as i128;
            if m % 2 == 1 {
                PaperValues {
                    m1: m.pow(3) * n.pow(3) - 2 * m.pow(2) * n.pow(2) + 2 * m * n
                        + 3 * m.pow(2) * n.pow(3)
                        - 6 * m * n.pow(2)
                        + 4 * m * n.pow(3),
                    m2: exact_div(
                        m.pow(4) * n.pow(4) - 3 * m.pow(3) * n.pow(3) + 9 * m * n.pow(2)
                            + 2 * m.pow(3) * n.pow(4)
                            - 9 * m.pow(2) * n.pow(3)
                            + 9 * m.pow(2) * n.pow(4)
                            - 12 * m * n.pow(3)
                            + 3 * m.pow(2) * n.pow(2)
                            - 2 * m * n
                            + 4 * m * n.pow(4),
                        2,
                    ),
                    v: 2 * m * n,
                    e: exact_div(m.pow(2) * n.pow(2) + 3 * m * n.pow(2) - 2 * m * n, 2),
                }
            } else {
                PaperValues {
                    m1: m.pow(3) * n.pow(3) - 2 * m.pow(2) * n.pow(2)
                        + 6 * m.pow(2) * n.pow(3)
                        + 16 * m * n.pow(3)
                        - 12 * m * n.pow(2)
                        + 2 * m * n,
                    m2: exact_div(
                        m.pow(4) * n.pow(4) - 3 * m.pow(3) * n.pow(3) + 18 * m * n.pow(2)
                            + 4 * m.pow(3) * n.pow(4)
                            - 18 * m.pow(2) * n.pow(3)
                            + 36 * m.pow(2) * n.pow(4)
                            - 48 * m * n.pow(3)
                            + 3 * m.pow(2) * n.pow(2)
                            - 2 * m * n
                            + 32 * m * n.pow(4),
                        2,
                    ),
                    v: 2 * m * n,
                    e: exact_div(m.pow(2) * n.pow(2) + 6 * m * n.pow(2) - 2 * m * n, 2),
                }
            }
        }
        (Family::M2mn, Conjugacy) => {
            let m = spec.m() as i128;
            if m % 2 == 1 {
                PaperValues {
                    m1: 2 * m.pow(3) * n.pow(3) + 5 * m.pow(2) * n.pow(3)
                        - 4 * m.pow(2) * n.pow(2)
                        + m * n.pow(3)
                        - 4 * m * n.pow(2)
                        + 2 * m * n,
                    m2: exact_div(
                        2 * m.pow(4) * n.pow(4) - 6 * m.pow(3) * n.pow(3) + 6 * m * n.pow(2)
                            + 8 * m.pow(3) * n.pow(4)
                            - 15 * m.pow(2) * n.pow(3)
                            + 6 * m.pow(2) * n.pow(4)
                            - 3 * m * n.pow(3)
                            + 6 * m.pow(2) * n.pow(2)
                            - 2 * m * n,
                        2,
                    ),
                    v: 2 * m * n,
                    e: m.pow(2) * n.pow(2) + m * n.pow(2) - m * n,
                }
            } else if (m / 2) % 2 == 0 {
                PaperValues {
                    m1: exact_div(5 * m.pow(3) * n.pow(3), 4) - 3 * m.pow(2) * n.pow(2)
                        + 8 * m.pow(2) * n.pow(3)
                        + 4 * m * n.pow(3)
                        - 8 * m * n.pow(2)
                        + 2 * m * n,
                    m2: exact_div(9 * m.pow(4) * n.pow(4), 16)
                        - exact_div(15 * m.pow(3) * n.pow(3), 8)
                        + 6 * m * n.pow(2)
                        + exact_div(9 * m.pow(3) * n.pow(4), 2)
                        - 12 * m.pow(2) * n.pow(3)
                        + 11 * m.pow(2) * n.pow(4)
                        - 6 * m * n.pow(3)
                        + exact_div(9 * m.pow(2) * n.pow(2), 4)
                        - m * n,
                    v: 2 * m * n,
                    e: exact_div(3 * m.pow(2) * n.pow(2), 4) + 2 * m * n.pow(2) - m * n,
                }
            } else {
                PaperValues {
                    m1: 2 * m.pow(3) * n.pow(3) + 10 * m.pow(2) * n.pow(3)
                        - 4 * m.pow(2) * n.pow(2)
                        + 4 * m * n.pow(3)
                        - 8 * m * n.pow(2)
                        + 2 * m * n,
                    m2: m.pow(4) * n.pow(4) - 3 * m.pow(3) * n.pow(3) + 6 * m * n.pow(2)
                        + 8 * m.pow(3) * n.pow(4)
                        - 15 * m.pow(2) * n.pow(3)
                        + 12 * m.pow(2) * n.pow(4)
                        - 6 * m * n.pow(3)
                        + 3 * m.pow(2) * n.pow(2)
                        - m * n,
                    v: 2 * m * n,
                    e: m.pow(2) * n.pow(2) + 2 * m * n.pow(2) - m * n,
                }
            }
        }
        (Family::M2mn, Order) => {
            return Err(NotInCatalog {
                family: spec.family(),
                relation,
            })
        }
    };
    Ok(values)
}

fn dihedral_conjugacy(n: i128) -> PaperValues {
    if n % 2 == 1 {
        PaperValues {
            m1: 2 * n.pow(3) + n.pow(2) - n,
            m2: exact_div(2 * n.pow(4) + 2 * n.pow(3) - 3 * n.pow(2) + n, 2),
            v: 2 * n,
            e: n.pow(2),
        }
    } else if (n / 2) % 2 == 0 {
        PaperValues {
            m1: exact_div(5 * n.pow(3), 4) + 5 * n.pow(2) - 2 * n,
            m2: exact_div(9 * n.pow(4), 16) + exact_div(21 * n.pow(3), 8)
                + exact_div(5 * n.pow(2), 4)
                - n,
            v: 2 * n,
            e: exact_div(3 * n.pow(2), 4) + n,
        }
    } else {
        PaperValues {
            m1: 2 * n.pow(3) + 6 * n.pow(2) - 2 * n,
            m2: n.pow(4) + 5 * n.pow(3) - n,
            v: 2 * n,
            e: n.pow(2) + n,
        }
    }
}

fn quaternion_conjugacy(n: i128) -> PaperValues {
    if n % 2 == 0 {
        PaperValues {
            m1: 10 * n.pow(3) + 20 * n.pow(2) - 4 * n,
            m2: 9 * n.pow(4) + 21 * n.pow(3) + 5 * n.pow(2) - 2 * n,
            v: 4 * n,
            e: 3 * n.pow(2) + 2 * n,
        }
    } else {
        PaperValues {
            m1: 16 * n.pow(3) + 24 * n.pow(2) - 4 * n,
            m2: 16 * n.pow(4) + 40 * n.pow(3) - 2 * n,
            v: 4 * n,
            e: 4 * n.pow(2) + 2 * n,
        }
    }
}

fn v8n_equality(n: i128, even_shape: bool) -> PaperValues {
    if even_shape {
        PaperValues {
            m1: 64 * n.pow(3) + 160 * n.pow(2) + 168 * n,
            m2: 128 * n.pow(4) + 160 * n.pow(3) + 888 * n.pow(2) + 196 * n,
            v: 8 * n,
            e: 8 * n.pow(2) + 20 * n,
        }
    } else {
        PaperValues {
            m1: 64 * n.pow(3) + 64 * n.pow(2) + 24 * n,
            m2: 128 * n.pow(4) + 32 * n.pow(3) + 168 * n.pow(2),
            v: 8 * n,
            e: 8 * n.pow(2) + 8 * n,
        }
    }
}

fn v8n_conjugacy(n: i128, even_shape: bool) -> PaperValues {
    if even_shape {
        PaperValues {
            m1: 80 * n.pow(3) + 208 * n.pow(2) + 8 * n,
            m2: 144 * n.pow(4) + 456 * n.pow(3) + 356 * n.pow(2) - 52 * n,
            v: 8 * n,
            e: 12 * n.pow(2) + 12 * n,
        }
    } else {
        PaperValues {
            m1: 80 * n.pow(3) + 80 * n.pow(2) - 8 * n,
            m2: 144 * n.pow(4) + 168 * n.pow(3) + 20 * n.pow(2) - 4 * n,
            v: 8 * n,
            e: 12 * n.pow(2) + 4 * n,
        }
    }
}

fn u6n_conjugacy(n: i128) -> PaperValues {
    PaperValues {
        m1: 102 * n.pow(3) - 48 * n.pow(2) + 6 * n,
        m2: exact_div(432 * n.pow(4) - 306 * n.pow(3) + 72 * n.pow(2) - 6 * n, 2),
        v: 6 * n,
        e: 12 * n.pow(2) - 3 * n,
    }
}
