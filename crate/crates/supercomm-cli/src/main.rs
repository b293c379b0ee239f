use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use supercomm::graph::super_commuting_graph;
use supercomm::group::{enumerate_group_with_budget, DEFAULT_MAX_COSETS};
use supercomm::structure::{predicted_form, recognize_form};
use supercomm::zagreb::{hansen_check, m1, m2};
use supercomm::{Family, FamilySpec, Graph, Presentation, Relation};
use supercomm_cli::verify::{self, SweepOptions};

#[derive(Parser)]
#[command(
    name = "supercomm",
    about = "Build super commuting graphs of finite group families, verify their \
             clique-join structure and Zagreb indices, and check the M2/|e| >= M1/|v| \
             inequality on arbitrary graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyOpt {
    Dihedral,
    Quaternion,
    Semidihedral,
    Qd,
    V8n,
    U6n,
    M2mn,
    All,
}

impl FamilyOpt {
    fn single(self) -> Option<Family> {
        match self {
            FamilyOpt::Dihedral => Some(Family::Dihedral),
            FamilyOpt::Quaternion => Some(Family::Quaternion),
            FamilyOpt::Semidihedral => Some(Family::SemiDihedral),
            FamilyOpt::Qd => Some(Family::QuasiDihedral),
            FamilyOpt::V8n => Some(Family::V8n),
            FamilyOpt::U6n => Some(Family::U6n),
            FamilyOpt::M2mn => Some(Family::M2mn),
            FamilyOpt::All => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RelationOpt {
    Equality,
    Conjugacy,
    Order,
    All,
}

impl RelationOpt {
    fn single(self) -> Option<Relation> {
        match self {
            RelationOpt::Equality => Some(Relation::Equality),
            RelationOpt::Conjugacy => Some(Relation::Conjugacy),
            RelationOpt::Order => Some(Relation::Order),
            RelationOpt::All => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Edges,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and print its order, center size, and class sizes
    Group {
        #[arg(long, value_enum)]
        family: Option<FamilyOpt>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        /// A presentation string such as "<a,b | a^3=b^2=1, bab^-1=a^-1>"
        #[arg(long, conflicts_with_all = ["family", "n", "m"])]
        present: Option<String>,
    },
    /// Emit the super commuting graph of a family member
    Graph {
        #[arg(long, value_enum)]
        family: FamilyOpt,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, value_enum)]
        relation: RelationOpt,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        /// Fail (exit 3) when the catalog states no structure for this pair
        #[arg(long)]
        expect_catalog: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep family members and verify structure, Zagreb values, and the
    /// conjecture; nonzero exit on any mismatch
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        family: FamilyOpt,
        #[arg(long, value_enum, default_value = "all")]
        relation: RelationOpt,
        #[arg(long, default_value_t = verify::DEFAULT_MAX_ORDER)]
        max_order: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the M2/|e| >= M1/|v| inequality on an edge-list file
    CheckGraph { path: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn max_cosets_from_env() -> Result<usize, String> {
    match std::env::var("SUPERCOMM_MAX_COSETS") {
        Ok(text) => text
            .parse()
            .map_err(|_| format!("SUPERCOMM_MAX_COSETS must be a positive integer, got '{text}'")),
        Err(_) => Ok(DEFAULT_MAX_COSETS),
    }
}

fn build_spec(family: FamilyOpt, n: Option<u64>, m: Option<u64>) -> Result<FamilySpec, String> {
    let family = family
        .single()
        .ok_or("--family all is only valid for 'verify'")?;
    let params: Vec<u64> = match family {
        Family::M2mn => {
            let m = m.ok_or("m2mn needs --m")?;
            let n = n.ok_or("m2mn needs --n")?;
            vec![m, n]
        }
        Family::QuasiDihedral => {
            if n.is_some() {
                return Err("qd takes --m only".into());
            }
            vec![m.ok_or("qd needs --m")?]
        }
        _ => {
            if m.is_some() {
                return Err(format!("{family} takes --n only"));
            }
            vec![n.ok_or_else(|| format!("{family} needs --n"))?]
        }
    };
    FamilySpec::new(family, &params).map_err(|e| e.to_string())
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    let max_cosets = max_cosets_from_env()?;
    match command {
        Command::Group {
            family,
            n,
            m,
            present,
        } => {
            let group = match present {
                Some(text) => {
                    let p = Presentation::parse(&text).map_err(|e| e.to_string())?;
                    enumerate_group_with_budget(&p, None, max_cosets).map_err(|e| e.to_string())?
                }
                None => {
                    let family = family.ok_or("need --family or --present")?;
                    let spec = build_spec(family, n, m)?;
                    enumerate_group_with_budget(
                        &spec.presentation(),
                        Some(spec.expected_order() as usize),
                        max_cosets,
                    )
                    .map_err(|e| e.to_string())?
                }
            };
            println!("order: {}", group.size());
            println!("center: {}", group.center().len());
            println!(
                "conjugacy classes: {:?}",
                group.conjugacy_partition().block_sizes()
            );
            println!("order classes: {:?}", group.order_partition().block_sizes());
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph {
            family,
            n,
            m,
            relation,
            format,
            expect_catalog,
            out,
        } => {
            let spec = build_spec(family, n, m)?;
            let relation = relation
                .single()
                .ok_or("'graph' needs a single --relation")?;
            if expect_catalog {
                if let Err(e) = predicted_form(&spec, relation) {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(3));
                }
            }
            let group = enumerate_group_with_budget(
                &spec.presentation(),
                Some(spec.expected_order() as usize),
                max_cosets,
            )
            .map_err(|e| e.to_string())?;
            let graph = super_commuting_graph(&group, &relation.partition(&group))
                .expect("partition covers the group");
            let content = match format {
                GraphFormat::Dot => graph.to_dot(),
                GraphFormat::Edges => graph.to_edge_list(),
                GraphFormat::Json => {
                    let form = match recognize_form(&graph) {
                        Ok(f) => f.to_string(),
                        Err(_) => "not-clique-join".to_string(),
                    };
                    let value = json!({
                        "family": spec.family().name(),
                        "params": spec.params_label(),
                        "relation": relation.name(),
                        "n_vertices": graph.n_vertices(),
                        "n_edges": graph.n_edges(),
                        "form": form,
                        "m1": m1(&graph).to_string(),
                        "m2": m2(&graph).to_string(),
                    });
                    let mut text = serde_json::to_string_pretty(&value).expect("serializes");
                    text.push('\n');
                    text
                }
            };
            write_output(out.as_ref(), &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            family,
            relation,
            max_order,
            format,
            out,
        } => {
            if max_order < 6 {
                return Err("--max-order must be at least 6".into());
            }
            let opts = SweepOptions {
                family: family.single(),
                relation: relation.single(),
                max_order,
                max_cosets,
            };
            let records = verify::run_sweep(&opts).map_err(|e| e.to_string())?;
            let content = match format {
                ReportFormat::Csv => verify::to_csv(&records),
                ReportFormat::Json => verify::to_json(&records),
            };
            write_output(out.as_ref(), &content)?;
            let failing = records.iter().filter(|r| !r.passes()).count();
            eprintln!("verified {} records, {failing} failing", records.len());
            Ok(if failing == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::CheckGraph { path } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let graph = Graph::from_edge_list(&text).map_err(|e| e.to_string())?;
            if graph.n_vertices() == 0 {
                return Err("graph needs at least one vertex".into());
            }
            let report = hansen_check(&graph);
            println!("{}", report.to_json());
            Ok(if report.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
