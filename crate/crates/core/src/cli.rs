//! Command-line front end: relate, matrix, skyline, thresholds and
//! overlap-report over region datasets.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::connection::{ConnectionConfig, NearnessParams};
use crate::dataset::{
    assign_support_radii, classified_geojson, load_regions, overlap_report,
    threshold_classification, write_text, Dataset, RadiusAssignment,
};
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRegion, Grade, TNormKind};
use crate::geometry::Geometry;
use crate::rcc::{relation_vector, Relation};
use crate::skyline::{build_candidates, crisp_skyline, fuzzy_skyline, SkylineMode, SkylineQuery};

#[derive(Debug, Parser)]
#[command(name = "fuzzy-rcc", version, about = "Graded RCC relations and fuzzy skylines over vague regions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print all relation grades between two regions.
    Relate {
        dataset: PathBuf,
        id_a: i64,
        id_b: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Pairwise grade matrix of one relation as CSV.
    Matrix {
        dataset: PathBuf,
        relation: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Skyline of the dataset's regions against one or more targets.
    Skyline {
        dataset: PathBuf,
        /// Target region ids from the dataset (removed from the candidates).
        #[arg(long, value_delimiter = ',', required_unless_present = "target_file")]
        targets: Vec<i64>,
        /// Region file whose regions are the targets.
        #[arg(long, conflicts_with = "targets")]
        target_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Distance)]
        mode: ModeArg,
        /// Print the crisp skyline instead.
        #[arg(long)]
        crisp: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Classify regions by their connection to a seed region.
    Thresholds {
        dataset: PathBuf,
        seed_id: i64,
        /// Strictly descending thresholds in (0, 1].
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        thresholds: Vec<f64>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Rank regions by overlap with a layer and correlate with attributes.
    OverlapReport {
        dataset: PathBuf,
        /// Region file; all its polygons form one layer.
        layer: PathBuf,
        #[arg(long, value_delimiter = ',')]
        attributes: Vec<String>,
        /// Support radius of the layer.
        #[arg(long, default_value_t = 0.0)]
        layer_sr: f64,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Distance,
    Connection,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.01)]
    pub beta: f64,
    /// Grid divisions per axis.
    #[arg(long, default_value_t = 8)]
    pub dd: usize,
    #[arg(long, default_value_t = TNormKind::Lukasiewicz)]
    pub tnorm: TNormKind,
    #[arg(long, default_value_t = 0.01)]
    pub min_c: f64,
    /// Give every region this support radius.
    #[arg(long, conflicts_with = "sr_random")]
    pub sr_uniform: Option<f64>,
    /// Draw support radii uniformly from [LO, HI] (seeded by --seed).
    #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
    pub sr_random: Option<Vec<f64>>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Decimal places in printed grades.
    #[arg(long, default_value_t = 4)]
    pub precision: usize,
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl RunArgs {
    fn config(&self) -> Result<ConnectionConfig> {
        ConnectionConfig::new(NearnessParams::new(self.alpha, self.beta)?, self.tnorm, self.dd)
    }

    fn radii(&self) -> Option<RadiusAssignment> {
        match (&self.sr_uniform, &self.sr_random) {
            (Some(r), _) => Some(RadiusAssignment::Uniform(*r)),
            (None, Some(v)) => Some(RadiusAssignment::SeededRandom {
                lo: v[0],
                hi: v[1],
                seed: self.seed,
            }),
            (None, None) => None,
        }
    }

    fn load(&self, path: &Path) -> Result<Dataset> {
        let ds = load_regions(path)?;
        eprintln!("note: {}: {}", path.display(), ds.units_note);
        match self.radii() {
            Some(mode) => assign_support_radii(&ds, mode),
            None => Ok(ds),
        }
    }

    fn emit(&self, text: &str, stdout: &mut dyn Write) -> Result<()> {
        match &self.out {
            Some(path) => write_text(path, text),
            None => stdout.write_all(text.as_bytes()).map_err(|source| Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
        }
    }
}

fn fmt_grade(g: Grade, precision: usize) -> String {
    format!("{:.precision$}", g.value())
}

/// Runs a parsed command, writing primary output to `stdout` unless
/// `--out` redirects it.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Relate {
            dataset,
            id_a,
            id_b,
            run,
        } => {
            let cfg = run.config()?;
            let ds = run.load(&dataset)?;
            let (a, b) = (ds.get(id_a)?, ds.get(id_b)?);
            let v = relation_vector(&a.fuzzy, &b.fuzzy, &cfg)?;
            let mut s = String::new();
            for (r, g) in v.iter() {
                writeln!(s, "{r},{}", fmt_grade(g, run.precision)).unwrap();
            }
            run.emit(&s, stdout)
        }
        Command::Matrix {
            dataset,
            relation,
            run,
        } => {
            let rel: Relation = relation.parse()?;
            let cfg = run.config()?;
            let ds = run.load(&dataset)?;
            let n = ds.len();
            let grades = (0..n * n)
                .into_par_iter()
                .map(|k| {
                    let (a, b) = (&ds.records[k / n], &ds.records[k % n]);
                    Ok(relation_vector(&a.fuzzy, &b.fuzzy, &cfg)?.get(rel))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut s = String::from("id");
            for r in &ds.records {
                write!(s, ",{}", r.id).unwrap();
            }
            s.push('\n');
            for (i, r) in ds.records.iter().enumerate() {
                write!(s, "{}", r.id).unwrap();
                for g in &grades[i * n..(i + 1) * n] {
                    write!(s, ",{}", fmt_grade(*g, run.precision)).unwrap();
                }
                s.push('\n');
            }
            run.emit(&s, stdout)
        }
        Command::Skyline {
            dataset,
            targets,
            target_file,
            mode,
            crisp,
            run,
        } => {
            let cfg = run.config()?;
            let min_c = Grade::new(run.min_c)?;
            let ds = run.load(&dataset)?;
            let (target_ids, target_regions, candidates) = match &target_file {
                Some(path) => {
                    let tds = run.load(path)?;
                    (
                        tds.records.iter().map(|r| r.id).collect::<Vec<_>>(),
                        tds.records.into_iter().map(|r| r.fuzzy).collect::<Vec<_>>(),
                        ds.records,
                    )
                }
                None => {
                    let regions = targets
                        .iter()
                        .map(|id| Ok(ds.get(*id)?.fuzzy.clone()))
                        .collect::<Result<Vec<_>>>()?;
                    let rest = ds
                        .records
                        .into_iter()
                        .filter(|r| !targets.contains(&r.id))
                        .collect();
                    (targets.clone(), regions, rest)
                }
            };
            if candidates.is_empty() {
                return Err(Error::InvalidParameter(
                    "no candidates left after removing the targets".into(),
                ));
            }
            let q = SkylineQuery {
                targets: target_regions,
                mode: match mode {
                    ModeArg::Distance => SkylineMode::DistanceOnly,
                    ModeArg::Connection => SkylineMode::ConnectionBased,
                },
                params: cfg.params,
                min_c,
                tnorm: cfg.tnorm,
                cfg,
            };
            let cands = build_candidates(&candidates, &q)?;
            let rows: Vec<(i64, Grade, Vec<f64>)> = if crisp {
                let ids = crisp_skyline(&cands)?;
                let mut rows: Vec<_> = cands
                    .iter()
                    .filter(|c| ids.contains(&c.region_id))
                    .map(|c| (c.region_id, Grade::ONE, c.values.clone()))
                    .collect();
                rows.sort_by_key(|r| r.0);
                rows
            } else {
                fuzzy_skyline(&cands, &q)?
                    .entries
                    .into_iter()
                    .map(|e| (e.region_id, e.grade, e.values))
                    .collect()
            };
            let p = run.precision;
            let mut s = String::from("id,grade");
            for id in &target_ids {
                write!(s, ",target_{id}").unwrap();
            }
            s.push('\n');
            for (id, g, values) in rows {
                write!(s, "{id},{}", fmt_grade(g, p)).unwrap();
                for v in values {
                    write!(s, ",{v:.p$}").unwrap();
                }
                s.push('\n');
            }
            run.emit(&s, stdout)
        }
        Command::Thresholds {
            dataset,
            seed_id,
            thresholds,
            run,
        } => {
            let cfg = run.config()?;
            let ts = thresholds
                .iter()
                .map(|t| Grade::new(*t))
                .collect::<Result<Vec<_>>>()?;
            let ds = run.load(&dataset)?;
            let cls = threshold_classification(&ds, seed_id, &cfg, &ts)?;
            let mut s = classified_geojson(&ds, &cls);
            s.push('\n');
            run.emit(&s, stdout)
        }
        Command::OverlapReport {
            dataset,
            layer,
            attributes,
            layer_sr,
            run,
        } => {
            let cfg = run.config()?;
            let ds = run.load(&dataset)?;
            let lds = load_regions(&layer)?;
            let polys = lds
                .records
                .iter()
                .flat_map(|r| r.fuzzy.core().polygons().iter().cloned())
                .collect();
            let layer = FuzzyRegion::new(Geometry::multi_polygon(polys)?, layer_sr)?;
            let rep = overlap_report(&ds, &layer, &cfg, &attributes)?;
            let mut buf = Vec::new();
            rep.write_csv(&mut buf, run.precision)?;
            let csv = String::from_utf8(buf).expect("csv output is UTF-8");
            let summary = rep.summary(run.precision);
            run.emit(&csv, stdout)?;
            if run.out.is_some() {
                stdout.write_all(summary.as_bytes())
            } else {
                io::stderr().write_all(summary.as_bytes())
            }
            .map_err(|source| Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })
        }
    }
}

/// Parses arguments and runs; exit code 0 on success, 1 for I/O and parse
/// failures, 2 for usage and semantic errors.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_semantic() { 2 } else { 1 })
        }
    }
}
