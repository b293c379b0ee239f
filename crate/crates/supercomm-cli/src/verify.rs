//! The verification sweep: for every family member up to a group-order bound
//! and every relation, compare the constructed super commuting graph against
//! the cataloged form and Zagreb polynomials, and check the `M2/|e| >= M1/|v|`
//! inequality exactly.

use std::fmt::Write as _;

use serde_json::json;
use supercomm::graph::super_commuting_graph;
use supercomm::group::{enumerate_group_with_budget, EnumerationError, DEFAULT_MAX_COSETS};
use supercomm::structure::{predicted_form, recognize_form};
use supercomm::zagreb::{hansen_check, paper_polynomials, PaperValues};
use supercomm::{Family, FamilySpec, Relation};

pub const DEFAULT_MAX_ORDER: u64 = 400;

/// One row of the verification report.
#[derive(Clone, Debug)]
pub struct VerificationRecord {
    pub family: Family,
    pub params: String,
    pub relation: Relation,
    /// Cataloged form, or `not-in-catalog` where no theorem is stated.
    pub predicted_form: String,
    /// Recognized form of the constructed graph, or `not-clique-join`.
    pub observed_form: String,
    pub forms_match: bool,
    pub v: u64,
    pub e: u64,
    pub m1: i128,
    pub m2: i128,
    pub paper: Option<PaperValues>,
    pub values_match: bool,
    pub conjecture_holds: bool,
    pub margin_numerator: i128,
}

impl VerificationRecord {
    pub fn passes(&self) -> bool {
        self.forms_match && self.values_match && self.conjecture_holds
    }
}

/// All members of a family with group order at most `max_order`, smallest
/// parameters first.
pub fn family_members(family: Family, max_order: u64) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    match family {
        Family::M2mn => {
            for m in 3.. {
                if m == 4 {
                    continue;
                }
                if 2 * m > max_order {
                    break;
                }
                for n in 1.. {
                    if 2 * m * n > max_order {
                        break;
                    }
                    out.push(FamilySpec::new(family, &[m, n]).expect("bounds checked"));
                }
            }
        }
        _ => {
            let start = match family {
                Family::Dihedral => 3,
                Family::QuasiDihedral => 4,
                Family::U6n => 1,
                _ => 2,
            };
            for p in start.. {
                let Ok(spec) = FamilySpec::new(family, &[p]) else {
                    break;
                };
                if spec.expected_order() > max_order {
                    break;
                }
                out.push(spec);
            }
        }
    }
    out
}

/// The full sweep ordering: families in catalog order, parameters ascending,
/// relations equality / conjugacy / order.
pub fn sweep_specs(family_filter: Option<Family>, max_order: u64) -> Vec<FamilySpec> {
    Family::ALL
        .into_iter()
        .filter(|f| family_filter.is_none_or(|want| want == *f))
        .flat_map(|f| family_members(f, max_order))
        .collect()
}

/// Builds one verification record. Enumeration failures bubble up.
pub fn verify_one(
    spec: &FamilySpec,
    relation: Relation,
    max_cosets: usize,
) -> Result<VerificationRecord, EnumerationError> {
    let group = enumerate_group_with_budget(
        &spec.presentation(),
        Some(spec.expected_order() as usize),
        max_cosets,
    )?;
    let partition = relation.partition(&group);
    let graph = super_commuting_graph(&group, &partition).expect("partition covers the group");

    let observed = recognize_form(&graph);
    let predicted = predicted_form(spec, relation);
    let (predicted_text, forms_match) = match (&predicted, &observed) {
        (Ok(want), Ok(got)) => (want.to_string(), want == got),
        (Ok(want), Err(_)) => (want.to_string(), false),
        (Err(_), _) => ("not-in-catalog".to_string(), true),
    };
    let observed_text = match &observed {
        Ok(got) => got.to_string(),
        Err(_) => "not-clique-join".to_string(),
    };

    let report = hansen_check(&graph);
    let paper = paper_polynomials(spec, relation).ok();
    let values_match = paper.is_none_or(|p| {
        p.m1 == report.m1
            && p.m2 == report.m2
            && p.v == report.n_vertices as i128
            && p.e == report.n_edges as i128
    });

    Ok(VerificationRecord {
        family: spec.family(),
        params: spec.params_label(),
        relation,
        predicted_form: predicted_text,
        observed_form: observed_text,
        forms_match,
        v: report.n_vertices as u64,
        e: report.n_edges,
        m1: report.m1,
        m2: report.m2,
        paper,
        values_match,
        conjecture_holds: report.holds,
        margin_numerator: report.margin_numerator,
    })
}

pub struct SweepOptions {
    pub family: Option<Family>,
    pub relation: Option<Relation>,
    pub max_order: u64,
    pub max_cosets: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            family: None,
            relation: None,
            max_order: DEFAULT_MAX_ORDER,
            max_cosets: DEFAULT_MAX_COSETS,
        }
    }
}

pub fn run_sweep(opts: &SweepOptions) -> Result<Vec<VerificationRecord>, EnumerationError> {
    let mut records = Vec::new();
    for spec in sweep_specs(opts.family, opts.max_order) {
        for relation in Relation::ALL {
            if opts.relation.is_none_or(|want| want == relation) {
                records.push(verify_one(&spec, relation, opts.max_cosets)?);
            }
        }
    }
    Ok(records)
}

pub const CSV_HEADER: &str =
    "family,params,relation,predicted,observed,forms_match,v,e,m1,m2,paper_match,conjecture,margin";

pub fn to_csv(records: &[VerificationRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.family,
            r.params,
            r.relation,
            r.predicted_form,
            r.observed_form,
            r.forms_match,
            r.v,
            r.e,
            r.m1,
            r.m2,
            r.values_match,
            r.conjecture_holds,
            r.margin_numerator,
        );
    }
    out
}

pub fn to_json(records: &[VerificationRecord]) -> String {
    let values: Vec<serde_json::Value> = records
        .iter()
        .map(|r| {
            json!({
                "family": r.family.name(),
                "params": r.params,
                "relation": r.relation.name(),
                "predicted_form": r.predicted_form,
                "observed_form": r.observed_form,
                "forms_match": r.forms_match,
                "v": r.v,
                "e": r.e,
                "m1": r.m1.to_string(),
                "m2": r.m2.to_string(),
                "paper_m1": r.paper.map(|p| p.m1.to_string()),
                "paper_m2": r.paper.map(|p| p.m2.to_string()),
                "paper_v": r.paper.map(|p| p.v.to_string()),
                "paper_e": r.paper.map(|p| p.e.to_string()),
                "values_match": r.values_match,
                "conjecture_holds": r.conjecture_holds,
                "margin_numerator": r.margin_numerator.to_string(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&values).expect("records serialize")
}
