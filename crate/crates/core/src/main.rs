use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use finite_coxeter::coxgroup::{CoxeterType, RootSystem, DEFAULT_LIMIT};
use finite_coxeter::cubes::{maximal_cubes, Cube};
use finite_coxeter::modp::{e7_model, e8_model};
use finite_coxeter::quaternion::{identify_type, BinaryGroup, GroupKind};
use finite_coxeter::report::{build_report, class_entries, cube_count_table, degree_table, h_poly_table, Table};
use finite_coxeter::verify::{check_id, Options, Suite, Verifier, CHECKS};

const USAGE: u8 = 2;
const FAILURE: u8 = 1;

#[derive(Parser)]
#[command(name = "coxeter", version, about = "Finite Coxeter groups: involutions, cubes and their models")]
struct Cli {
    /// Largest group order enumerated element by element.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT)]
    limit: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, reflections, h-polynomial, involution classes and cubes of a type.
    Report {
        /// A type such as E7, B5, I2(7) or A2xA2.
        r#type: String,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
        /// Include the wall-clock time (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Run the verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Core)]
        suite: SuiteArg,
        /// Run only these checks (name or number); repeatable.
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print a summary table.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        csv: bool,
    },
    /// Write data as JSON.
    Export {
        #[command(subcommand)]
        what: ExportKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Core,
    Heavy,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    HPoly,
    CubeCounts,
    Degrees,
}

#[derive(Subcommand)]
enum ExportKind {
    /// Exact root coordinates and Coxeter matrix.
    Roots { r#type: String },
    /// Conjugacy classes of involutions.
    Classes { r#type: String },
    /// Cube counts by rank and maximal-cube data.
    Census { r#type: String },
    /// Steiner blocks of the first maximal cube of E8.
    Steiner,
    /// Fano lines on the first maximal cube of E7.
    Fano,
    /// Coxeter matrices of the quaternionic constructions.
    Quaternion,
}

fn parse_type(s: &str) -> Result<CoxeterType, ExitCode> {
    s.parse().map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(USAGE)
    })
}

fn build(ty: &CoxeterType) -> Result<RootSystem, ExitCode> {
    RootSystem::build(ty).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(FAILURE)
    })
}

/// Writes to stdout, treating a closed pipe as a normal end of output.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(s.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn print_json<T: Serialize>(v: &T) {
    emit(&(serde_json::to_string_pretty(v).expect("serializable") + "\n"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}

fn run(cli: Cli) -> Result<(), ExitCode> {
    match cli.command {
        Command::Report { r#type, json, text: _, timing } => {
            let ty = parse_type(&r#type)?;
            let report = build_report(&ty, cli.limit, timing).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(FAILURE)
            })?;
            if json {
                print_json(&report);
            } else {
                emit(&report.to_text());
            }
            if report.h_mismatch {
                return Err(ExitCode::from(FAILURE));
            }
        }
        Command::Verify { suite, checks, json, inject_fault } => {
            let suite = match suite {
                SuiteArg::Core => Suite::Core,
                SuiteArg::Heavy => Suite::Heavy,
            };
            let ids = if checks.is_empty() {
                CHECKS.iter().map(|&(id, _)| id).collect()
            } else {
                checks
                    .iter()
                    .map(|s| {
                        check_id(s).ok_or_else(|| {
                            eprintln!("error: unknown check {s:?}");
                            ExitCode::from(USAGE)
                        })
                    })
                    .collect::<Result<Vec<usize>, _>>()?
            };
            let v = Verifier::new(Options { suite, limit: cli.limit, corrupt_root_table: inject_fault });
            let results: Vec<_> = ids.iter().map(|&id| v.run(id)).collect();
            let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
            if json {
                print_json(&results);
            } else {
                for r in &results {
                    emit(&format!("{r}\n"));
                }
                if failed.is_empty() {
                    emit(&format!("all {} checks passed\n", results.len()));
                } else {
                    emit(&format!("{} of {} checks failed: {}\n", failed.len(), results.len(), failed.join(", ")));
                }
            }
            if !failed.is_empty() {
                return Err(ExitCode::from(FAILURE));
            }
        }
        Command::Table { kind, csv } => {
            let table: Table = match kind {
                TableKind::HPoly => h_poly_table(),
                TableKind::CubeCounts => cube_count_table().map_err(|e| {
                    eprintln!("error: {e}");
                    ExitCode::from(FAILURE)
                })?,
                TableKind::Degrees => degree_table().map_err(|e| {
                    eprintln!("error: {e}");
                    ExitCode::from(FAILURE)
                })?,
            };
            emit(&if csv { table.to_csv() } else { table.to_text() });
        }
        Command::Export { what } => export(what)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct CensusExport {
    r#type: String,
    rank: usize,
    count: usize,
    by_rank: Vec<usize>,
    per_extremity_class: Vec<(usize, String, usize)>,
    phi_order: Option<usize>,
}

#[derive(Serialize)]
struct CubeBlocks {
    base: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

fn mask_points(m: u32, k: usize) -> Vec<usize> {
    (0..k).filter(|i| m >> i & 1 == 1).collect()
}

fn first_maximal_cube(rs: &RootSystem) -> Result<Cube, ExitCode> {
    maximal_cubes(rs).into_iter().next().ok_or(ExitCode::from(FAILURE))
}

fn export(what: ExportKind) -> Result<(), ExitCode> {
    match what {
        ExportKind::Roots { r#type } => print_json(&build(&parse_type(&r#type)?)?.to_export()),
        ExportKind::Classes { r#type } => print_json(&class_entries(&build(&parse_type(&r#type)?)?)),
        ExportKind::Census { r#type } => {
            let rs = build(&parse_type(&r#type)?)?;
            let cen = finite_coxeter::cubes::census(&rs);
            let per_class = class_entries(&rs).into_iter().map(|c| (c.degree, c.class_key, c.cubes_with_extremity));
            print_json(&CensusExport {
                r#type: rs.ty().to_string(),
                rank: rs.ty().reduced_rank(),
                count: cen.maximal_count(),
                by_rank: cen.by_rank.clone(),
                per_extremity_class: per_class.collect(),
                phi_order: finite_coxeter::cubes::phi_group(&rs).ok().map(|p| p.order()),
            });
        }
        ExportKind::Steiner => {
            let rs = build(&CoxeterType::E8)?;
            let m = e8_model(&rs).map_err(|_| ExitCode::from(FAILURE))?;
            let c = first_maximal_cube(&rs)?;
            let blocks = m.blocks(&c).into_iter().map(|b| mask_points(b, 8)).collect();
            print_json(&CubeBlocks { base: c.base().to_vec(), blocks });
        }
        ExportKind::Fano => {
            let rs = build(&CoxeterType::E7)?;
            let m = e7_model(&rs).map_err(|_| ExitCode::from(FAILURE))?;
            let c = first_maximal_cube(&rs)?;
            let blocks = m.fano_lines(&c).into_iter().map(|l| l.to_vec()).collect();
            print_json(&CubeBlocks { base: c.base().to_vec(), blocks });
        }
        ExportKind::Quaternion => {
            let kinds = [
                GroupKind::Cyclic(5),
                GroupKind::BinaryDihedral(3),
                GroupKind::Tetrahedral,
                GroupKind::Octahedral,
                GroupKind::Icosahedral,
            ];
            let mut out = Vec::new();
            for k in kinds {
                let g = BinaryGroup::build(k).map_err(|_| ExitCode::from(FAILURE))?;
                out.push(identify_type(&g).map_err(|_| ExitCode::from(FAILURE))?);
            }
            print_json(&out);
        }
    }
    Ok(())
}
