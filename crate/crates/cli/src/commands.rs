//! Subcommand registry. Each entry contributes its own clap arguments and
//! produces an [`Output`].

use std::path::PathBuf;

use clap::{ArgMatches, Args, FromArgMatches, ValueEnum};

use ginbetti::field::FieldMode;
use ginbetti::fixtures::match_published;
use ginbetti::gin::{DEFAULT_SEED, DEFAULT_TRIALS};
use ginbetti::report::{render_table, Report};
use ginbetti::tailing::{analyze, analyze_published, PublishedVector};

use crate::corpus;
use crate::error::{exit, CliError};
use crate::pipeline::{self, GinSettings, Loaded};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// What a subcommand hands back to `main`.
pub struct Output {
    pub json: String,
    pub table: String,
    pub code: u8,
}

impl Output {
    pub fn report(report: &Report) -> Self {
        Output {
            json: report.to_json(),
            table: render_table(report),
            code: exit::OK,
        }
    }
}

pub trait Subcommand: Send + Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn args(&self, cmd: clap::Command) -> clap::Command;
    fn run(&self, matches: &ArgMatches) -> Result<Output, CliError>;
}

pub fn registry() -> Vec<Box<dyn Subcommand>> {
    vec![
        Box::new(Gb),
        Box::new(Gin),
        Box::new(Betti),
        Box::new(Invariants),
        Box::new(Nd1),
        Box::new(Tailing),
        Box::new(Hilbert),
        Box::new(Corpus),
    ]
}

// Flags shared by every command that reads an ideal file.
#[derive(Args, Debug, Clone)]
pub struct IdealArgs {
    /// Ideal file
    pub file: PathBuf,
    #[command(flatten)]
    pub gin: GinArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GinArgs {
    /// Master seed for the random coordinate changes
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Independent trials that must agree (at least 2)
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    /// Coefficient field: q, fp or fp:<prime> (overrides the file header)
    #[arg(long)]
    pub field: Option<FieldMode>,
    /// Saturate the input before computing
    #[arg(long)]
    pub saturate: bool,
}

impl GinArgs {
    fn settings(&self) -> GinSettings {
        GinSettings {
            seed: self.seed,
            trials: self.trials,
            saturate: self.saturate,
        }
    }
}

impl IdealArgs {
    fn load(&self) -> Result<Loaded, CliError> {
        pipeline::load(&self.file, self.gin.field)
    }
}

fn parse<T: FromArgMatches>(m: &ArgMatches) -> Result<T, CliError> {
    T::from_arg_matches(m).map_err(|e| CliError::Usage(e.to_string()))
}

macro_rules! ideal_command {
    ($ty:ident, $name:literal, $about:literal, $args:ty, $body:expr) => {
        pub struct $ty;

        impl Subcommand for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn about(&self) -> &'static str {
                $about
            }

            fn args(&self, cmd: clap::Command) -> clap::Command {
                <$args>::augment_args(cmd)
            }

            fn run(&self, matches: &ArgMatches) -> Result<Output, CliError> {
                let args: $args = parse(matches)?;
                let f: fn(&$args) -> Result<Output, CliError> = $body;
                f(&args)
            }
        }
    };
}

ideal_command!(Gb, "gb", "Reduced Groebner basis (grevlex)", IdealArgs, |a| {
    let loaded = a.load()?;
    let mut report = Report::new("gb", loaded.name(), loaded.mode);
    report.groebner = Some(pipeline::groebner(&loaded, a.gin.settings())?);
    Ok(Output::report(&report))
});

ideal_command!(Gin, "gin", "Generic initial ideal with its certificate", IdealArgs, |a| {
    let loaded = a.load()?;
    let (cert, notes) = pipeline::gin(&loaded, a.gin.settings())?;
    Ok(Output::report(&pipeline::gin_report("gin", &loaded, &cert, notes)))
});

ideal_command!(
    Betti,
    "betti",
    "Eliahou-Kervaire Betti table of the Gin, tailing region marked",
    IdealArgs,
    |a| {
        let loaded = a.load()?;
        let (cert, notes) = pipeline::gin(&loaded, a.gin.settings())?;
        let mut report = pipeline::gin_report("betti", &loaded, &cert, notes);
        let profile = pipeline::profile(&cert).ok();
        report.betti = Some(pipeline::betti(&cert, profile.as_ref())?);
        Ok(Output::report(&report))
    }
);

ideal_command!(
    Invariants,
    "invariants",
    "Dimension, degree, regularity, depth and Hilbert polynomial",
    IdealArgs,
    |a| {
        let loaded = a.load()?;
        let (cert, notes) = pipeline::gin(&loaded, a.gin.settings())?;
        let mut report = pipeline::gin_report("invariants", &loaded, &cert, notes);
        let profile = pipeline::profile(&cert)?;
        report.betti = Some(pipeline::betti(&cert, Some(&profile))?);
        report.nd1 = Some(profile.nd1.clone());
        report.profile = Some(profile);
        Ok(Output::report(&report))
    }
);

ideal_command!(
    Nd1,
    "nd1",
    "ND(1) verdict for the general section of each dimension",
    IdealArgs,
    |a| {
        let loaded = a.load()?;
        let (cert, notes) = pipeline::gin(&loaded, a.gin.settings())?;
        let mut report = pipeline::gin_report("nd1", &loaded, &cert, notes);
        let profile = pipeline::profile(&cert)?;
        report.nd1 = Some(profile.nd1.clone());
        report.profile = Some(profile);
        Ok(Output::report(&report))
    }
);

#[derive(Args, Debug, Clone)]
pub struct HilbertArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    /// Hilbert function engine: pivot, dense or ek
    #[arg(long, default_value = "pivot")]
    pub method: String,
}

ideal_command!(
    Hilbert,
    "hilbert",
    "Hilbert function and the Hilbert polynomial by both routes",
    HilbertArgs,
    |a| {
        let loaded = a.ideal.load()?;
        let (cert, notes) = pipeline::gin(&loaded, a.ideal.gin.settings())?;
        let mut report = pipeline::gin_report("hilbert", &loaded, &cert, notes);
        let profile = pipeline::profile(&cert)?;
        report.hilbert = Some(pipeline::hilbert_routes(&cert, &profile, &a.method)?);
        report.profile = Some(profile);
        Ok(Output::report(&report))
    }
);

#[derive(Args, Debug, Clone)]
pub struct TailingArgs {
    /// Ideal file (omit when passing --b or --h)
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub gin: GinArgs,
    /// Apply the formulas even when the hypotheses fail (report is watermarked)
    #[arg(long)]
    pub force: bool,
    /// Tailing Betti numbers beta_(e,2), ..., beta_(n,2)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["h", "file"])]
    pub b: Option<Vec<i128>>,
    /// Sectional 1-normalities h_e, ..., h_n
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "file")]
    pub h: Option<Vec<i128>>,
    /// Ambient dimension (published-vector mode)
    #[arg(long)]
    pub n: Option<usize>,
    /// Codimension (published-vector mode)
    #[arg(long)]
    pub e: Option<usize>,
}

ideal_command!(
    Tailing,
    "tailing",
    "Tailing Betti numbers, sectional normalities and what they determine",
    TailingArgs,
    |a| {
        let published = match (&a.b, &a.h) {
            (Some(b), None) => Some(PublishedVector::Betti(b.clone())),
            (None, Some(h)) => Some(PublishedVector::Normality(h.clone())),
            _ => None,
        };
        if let Some(input) = published {
            let (Some(n), Some(e)) = (a.n, a.e) else {
                return Err(CliError::Usage("--b/--h need both --n and --e".into()));
            };
            let tailing = analyze_published(&input, n, e)?;
            let mut report = Report::new("tailing", None, FieldMode::Rationals);
            if let Some(p) = match_published(n, e, &tailing.b) {
                report.name = Some(p.name.to_string());
                report.warn(p.discrepancy.map(|d| format!("published-value discrepancy: {d}")));
            }
            report.warn(tailing.warnings.iter().cloned());
            report.tailing = Some(tailing);
            return Ok(Output::report(&report));
        }
        if a.n.is_some() || a.e.is_some() {
            return Err(CliError::Usage("--n/--e are only used with --b or --h".into()));
        }
        let Some(file) = &a.file else {
            return Err(CliError::Usage("give an ideal file or --b/--h".into()));
        };
        let loaded = pipeline::load(file, a.gin.field)?;
        let (cert, notes) = pipeline::gin(&loaded, a.gin.settings())?;
        let mut report = pipeline::gin_report("tailing", &loaded, &cert, notes);
        let profile = pipeline::profile(&cert)?;
        let tailing = analyze(&cert.gin, &profile, a.force)?;
        report.betti = Some(pipeline::betti(&cert, Some(&profile))?);
        report.nd1 = Some(profile.nd1.clone());
        report.profile = Some(profile);
        if tailing.forced {
            report.certified = false;
        }
        report.warn(tailing.watermark.iter().cloned());
        report.warn(tailing.warnings.iter().cloned());
        report.tailing = Some(tailing);
        Ok(Output::report(&report))
    }
);

#[derive(Args, Debug, Clone)]
pub struct CorpusArgs {
    /// Directory of ideal files (default: the bundled fixtures)
    pub dir: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
}

ideal_command!(
    Corpus,
    "corpus",
    "Run every fixture against its expected values",
    CorpusArgs,
    |a| corpus::run(a.dir.as_deref(), a.seed, a.trials)
);
