use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use easycat::linalg::{brauer_check, BrauerReport};
use easycat::render::{render_ascii, render_svg};
use easycat::scan::intermediate_scan;
use easycat::sphere::{sphere_sweep, SphereSeedReport};
use easycat::torus::{
    free_pair, freeness_witness, presentation_text, separate_tori, torus_relation_instances, torus_relations,
};
use easycat::{enumerate_pairings, ClassName, ClosureBudget, ColoredWord, Error, Geometry, PartitionDiagram};

#[derive(Parser)]
#[command(name = "easycat", version, about = "Two-colored partition categories, their linear maps and group models")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the main output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    /// Drawing formats, `render` only.
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// List the pairings of a class between two words.
    Enumerate {
        #[arg(long, default_value = "-")]
        upper: String,
        #[arg(long, default_value = "-")]
        lower: String,
        #[arg(long)]
        class: String,
    },
    /// Close a geometry's generators and print the table.
    Closure {
        #[arg(long)]
        geometry: String,
        #[arg(long, env = "EASYCAT_BUDGET", default_value_t = 8)]
        budget: usize,
    },
    /// Test whether a diagram lies in a geometry's category.
    Member {
        #[arg(long)]
        geometry: String,
        #[arg(long)]
        diagram: String,
        #[arg(long, env = "EASYCAT_BUDGET", default_value_t = 8)]
        budget: usize,
    },
    /// Classify the categories generated by each crossing pairing.
    ScanIntermediate {
        #[arg(long, env = "EASYCAT_BUDGET", default_value_t = 8)]
        budget: usize,
    },
    /// Compare diagram spans with sampled intertwiner spaces.
    Brauer {
        #[arg(long)]
        geometry: String,
        #[arg(long = "N", short = 'N', default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        budget: usize,
        /// Number of disjoint seed sets.
        #[arg(long, default_value_t = 3)]
        seeds: usize,
        /// Explicit base seeds, overriding `--seeds`.
        #[arg(long, value_delimiter = ',')]
        seed_list: Vec<u64>,
    },
    /// Torus relations read off a geometry's category.
    TorusRelations {
        #[arg(long)]
        geometry: String,
        #[arg(long = "N", short = 'N', default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        budget: usize,
        /// Print only relations that do not hold in the free group.
        #[arg(long)]
        nontrivial: bool,
        /// List literal instances instead of deduplicating up to free reduction.
        #[arg(long)]
        instances: bool,
    },
    /// Check that `h1⁻¹h2` and `z h1 h2⁻¹ z⁻¹` generate a free group up to a word length.
    Freeness {
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        #[arg(long = "N", short = 'N', default_value_t = 2)]
        n: usize,
    },
    /// Evaluate `[g1 g2⁻¹, g1⁻¹ g2]` in the monomial model and in `Z * Z^N`.
    SeparateTori {
        #[arg(long = "N", short = 'N', default_value_t = 2)]
        n: usize,
    },
    /// Exact checks of the antidiagonal sphere model.
    SphereModel {
        #[arg(long = "N", short = 'N', default_value_t = 3)]
        n: usize,
        /// Number of seeds, `0..seeds`.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long, value_delimiter = ',')]
        seed_list: Vec<u64>,
    },
    /// Draw a diagram (`--format ascii` or `svg`).
    Render { diagram: String },
}

enum Failure {
    Usage(String),
    Overflow(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) | Error::SizeOverflow { .. } | Error::NotSaturated => Failure::Overflow(e.to_string()),
            Error::MalformedPartition(_)
            | Error::ColorMismatch { .. }
            | Error::UnknownGeometry(_)
            | Error::UnknownClass(_)
            | Error::Parse(_)
            | Error::InvalidArgument(_)
            | Error::NoSampler(_)
            | Error::NotAPairing(_)
            | Error::EmptyUpperRow => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<(String, bool), Failure>;

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_csv(format: Format) -> Result<(), Failure> {
    match format {
        Format::Csv => Err(Failure::Usage("CSV output is only offered for brauer".into())),
        Format::Ascii | Format::Svg => Err(Failure::Usage("ascii and svg are render formats".into())),
        _ => Ok(()),
    }
}

fn budget(points: usize) -> Result<ClosureBudget, Failure> {
    Ok(ClosureBudget::new(points, easycat::closure::DEFAULT_MAX_ROUNDS)?)
}

fn run(cli: &Cli) -> CmdResult {
    let format = cli.format;
    match &cli.command {
        Command::Enumerate { upper, lower, class } => {
            no_csv(format)?;
            let upper: ColoredWord = upper.parse()?;
            let lower: ColoredWord = lower.parse()?;
            let class: ClassName = class.parse()?;
            let ds = enumerate_pairings(&upper, &lower, class);
            Ok(match format {
                Format::Json => (json(&serde_json::json!({ "class": class, "count": ds.len(), "diagrams": ds })), true),
                _ => {
                    let mut s: String = ds.iter().map(|d| format!("{d}\n")).collect();
                    s.push_str(&format!("count: {}\n", ds.len()));
                    (s, true)
                }
            })
        }
        Command::Closure { geometry, budget: b } => {
            no_csv(format)?;
            let g: Geometry = geometry.parse()?;
            let c = g.spec().close(budget(*b)?)?;
            Ok(match format {
                Format::Json => (json(&c.to_json()), true),
                _ => {
                    let mut s = format!(
                        "geometry: {g}\nbudget: {b}\nsaturated: {}\nrounds: {}\nsize: {}\n",
                        c.saturated(),
                        c.rounds(),
                        c.len()
                    );
                    if let Some(class) = g.spec().class_predicate {
                        let cmp = c.compare_with_class(class, *b)?;
                        s.push_str(&format!(
                            "equals {} up to {b} points: {}\n",
                            class.name(),
                            cmp.equal()
                        ));
                    }
                    (s, true)
                }
            })
        }
        Command::Member { geometry, diagram, budget: b } => {
            no_csv(format)?;
            let g: Geometry = geometry.parse()?;
            let d: PartitionDiagram = diagram.parse()?;
            let c = g.spec().close(budget((*b).max(d.num_points()))?)?;
            let m = c.contains(&d)?;
            Ok(match format {
                Format::Json => (json(&serde_json::json!({ "geometry": g, "diagram": d, "membership": m.label() })), true),
                _ => (format!("{}\n", m.label()), true),
            })
        }
        Command::ScanIntermediate { budget: b } => {
            no_csv(format)?;
            let r = intermediate_scan(budget(*b)?)?;
            let ok = r.other_count == 0;
            Ok(match format {
                Format::Json => (json(&r), ok),
                _ => {
                    let mut s: String = r
                        .entries
                        .iter()
                        .map(|e| format!("{:<40} {}\n", e.diagram.to_string(), e.classification.label()))
                        .collect();
                    s.push_str(&format!(
                        "P2*: {}  P2: {}  OTHER: {}\n",
                        r.p2star_count, r.p2_count, r.other_count
                    ));
                    (s, ok)
                }
            })
        }
        Command::Brauer {
            geometry,
            n,
            budget: b,
            seeds,
            seed_list,
        } => {
            if format == Format::Ascii || format == Format::Svg {
                return Err(Failure::Usage("ascii and svg are render formats".into()));
            }
            let g: Geometry = geometry.parse()?;
            let seeds: Vec<u64> = if seed_list.is_empty() {
                (0..*seeds as u64).map(|i| 1000 * i + 1).collect()
            } else {
                seed_list.clone()
            };
            let r = brauer_check(&g.spec(), *n, budget(*b)?, &seeds)?;
            let ok = r.passed();
            Ok((brauer_output(&r, format), ok))
        }
        Command::TorusRelations {
            geometry,
            n,
            budget: b,
            nontrivial,
            instances,
        } => {
            no_csv(format)?;
            let g: Geometry = geometry.parse()?;
            let c = g.spec().close(budget(*b)?)?;
            let mut rels = if *instances {
                torus_relation_instances(&c, *n, *b)?
            } else {
                torus_relations(&c, *n)?
            };
            if *nontrivial {
                rels.retain(|r| !r.is_trivial());
            }
            Ok(match format {
                Format::Json => (json(&rels), true),
                _ => (presentation_text(&rels, *n), true),
            })
        }
        Command::Freeness { max_len, n } => {
            no_csv(format)?;
            let r = freeness_witness(&free_pair(*n), *max_len)?;
            let ok = r.passed();
            Ok(match format {
                Format::Json => (json(&r), ok),
                _ => {
                    let verdict = match &r.offending {
                        None => "PASS".to_string(),
                        Some(w) => format!("FAIL at {w}"),
                    };
                    (format!("{verdict}\nwords checked: {}\nby length: {:?}\n", r.checked, r.per_length), ok)
                }
            })
        }
        Command::SeparateTori { n } => {
            no_csv(format)?;
            let r = separate_tori(*n)?;
            let ok = r.separates();
            Ok(match format {
                Format::Json => (json(&r), ok),
                _ => (
                    format!(
                        "word: {}\nmonomial model: {} ({})\nzh image: {} ({})\n",
                        r.word,
                        r.monomial,
                        json(&r.monomial_verdict).trim().trim_matches('"'),
                        r.zh_image,
                        json(&r.zh_verdict).trim().trim_matches('"')
                    ),
                    ok,
                ),
            })
        }
        Command::SphereModel { n, seeds, seed_list } => {
            no_csv(format)?;
            let seeds: Vec<u64> = if seed_list.is_empty() { (0..*seeds).collect() } else { seed_list.clone() };
            let rs = sphere_sweep(*n, &seeds)?;
            let ok = rs.iter().all(SphereSeedReport::passed);
            Ok(match format {
                Format::Json => (json(&rs), ok),
                _ => {
                    let mut s = String::from("seed  blocks  half-comm  abc=cba  rescaled  normalized  witness\n");
                    for r in &rs {
                        s.push_str(&format!(
                            "{:<5} {:<7} {:<10} {:<8} {:<9} {:<11} {}\n",
                            r.seed,
                            r.block_formulae,
                            r.half_commutation,
                            r.starstar_relations,
                            r.rescaled,
                            r.normalization,
                            r.witness.map_or("none".into(), |(i, j)| format!("({i},{j})"))
                        ));
                    }
                    s.push_str(if ok { "PASS\n" } else { "FAIL\n" });
                    (s, ok)
                }
            })
        }
        Command::Render { diagram } => {
            let d: PartitionDiagram = diagram.parse()?;
            match format {
                Format::Text | Format::Ascii => Ok((render_ascii(&d), true)),
                Format::Svg => Ok((render_svg(&d), true)),
                _ => Err(Failure::Usage("render supports ascii and svg".into())),
            }
        }
    }
}

fn word(w: &ColoredWord) -> String {
    if w.is_empty() {
        "-".into()
    } else {
        w.to_string()
    }
}

fn brauer_output(r: &BrauerReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let mut s = String::from("upper,lower,diagrams,span_rank,sampled_dims,verdict,seed_consistent\n");
            for e in &r.entries {
                let dims: Vec<String> = e.outcomes.iter().map(|o| o.sampled_dimension.to_string()).collect();
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    word(&e.upper),
                    word(&e.lower),
                    e.diagrams,
                    e.span_rank,
                    dims.join(";"),
                    e.verdict.label(),
                    e.seed_consistent
                ));
            }
            s
        }
        _ => {
            let mut s = format!(
                "geometry: {}  sampler: {}  N: {}  words up to {} points  closure budget {}\n",
                r.geometry,
                r.kind.name(),
                r.n,
                r.max_points,
                r.closure_points
            );
            s.push_str("upper    lower    #diag  rank  sampled   verdict\n");
            for e in &r.entries {
                let dims: Vec<String> = e.outcomes.iter().map(|o| o.sampled_dimension.to_string()).collect();
                s.push_str(&format!(
                    "{:<8} {:<8} {:<6} {:<5} {:<9} {}{}\n",
                    word(&e.upper),
                    word(&e.lower),
                    e.diagrams,
                    e.span_rank,
                    dims.join("/"),
                    e.verdict.label(),
                    if e.seed_consistent { "" } else { " (seed-inconsistent)" }
                ));
            }
            if r.containment_only {
                s.push_str(&format!(
                    "SPAN ⊆ SAMPLED: {}\nequality (experimental): {}\n",
                    r.all_contained(),
                    r.all_equal()
                ));
            } else {
                s.push_str(&format!("all EQUAL: {}\n", r.all_equal() && r.seed_consistent()));
            }
            s
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Overflow(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
