//! Field dispatch and the computations shared by the subcommands.

use std::path::Path;

use num_rational::BigRational;

use ginbetti::field::{Field, FieldMode, Fp};
use ginbetti::gin::{compute_gin, GinCertificate, GinOptions, DEFAULT_ENTRY_BOUND};
use ginbetti::groebner::{buchberger, saturate_by_general_linear_form};
use ginbetti::hilbert;
use ginbetti::invariants::{scheme_profile, SchemeProfile};
use ginbetti::parse::IdealFile;
use ginbetti::report::{BettiSummary, GinSummary, GroebnerSummary, HilbertRoutes, Report};
use ginbetti::tailing::{hilbert_from_tailing, hypothesis_failures, CONNECTEDNESS_NOTE};

use crate::error::CliError;

pub struct Loaded {
    pub file: IdealFile,
    pub mode: FieldMode,
}

impl Loaded {
    pub fn name(&self) -> Option<String> {
        self.file.metadata.get("name").cloned()
    }
}

pub fn load(path: &Path, field: Option<FieldMode>) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    load_text(&text, field)
}

pub fn load_text(text: &str, field: Option<FieldMode>) -> Result<Loaded, CliError> {
    let file = IdealFile::parse(text)?;
    let mode = file.field_mode(field);
    Ok(Loaded { file, mode })
}

#[derive(Clone, Copy, Debug)]
pub struct GinSettings {
    pub seed: u64,
    pub trials: usize,
    pub saturate: bool,
}

const SATURATED_NOTE: &str = "input was saturated before computing the Gin";

fn gin_in<K: Field>(
    loaded: &Loaded,
    s: GinSettings,
) -> ginbetti::Result<(GinCertificate, Vec<String>)> {
    let mut ideal = loaded.file.to_ideal::<K>(loaded.mode)?;
    let mut notes = Vec::new();
    if s.saturate {
        ideal = saturate_by_general_linear_form(&ideal, s.seed)?;
        notes.push(SATURATED_NOTE.to_string());
    }
    let opts = GinOptions {
        seed: s.seed,
        trials: s.trials,
        bound: DEFAULT_ENTRY_BOUND,
    };
    Ok((compute_gin(&ideal, opts)?, notes))
}

/// Gin certificate plus notes about preprocessing.
pub fn gin(loaded: &Loaded, s: GinSettings) -> Result<(GinCertificate, Vec<String>), CliError> {
    Ok(match loaded.mode {
        FieldMode::Rationals => gin_in::<BigRational>(loaded, s)?,
        FieldMode::PrimeField(_) => gin_in::<Fp>(loaded, s)?,
    })
}

fn groebner_in<K: Field>(loaded: &Loaded, s: GinSettings) -> ginbetti::Result<GroebnerSummary> {
    let mut ideal = loaded.file.to_ideal::<K>(loaded.mode)?;
    if s.saturate {
        ideal = saturate_by_general_linear_form(&ideal, s.seed)?;
    }
    Ok(GroebnerSummary::from_basis(&buchberger(&ideal)))
}

pub fn groebner(loaded: &Loaded, s: GinSettings) -> Result<GroebnerSummary, CliError> {
    Ok(match loaded.mode {
        FieldMode::Rationals => groebner_in::<BigRational>(loaded, s)?,
        FieldMode::PrimeField(_) => groebner_in::<Fp>(loaded, s)?,
    })
}

/// A report seeded with the Gin section and its warnings.
pub fn gin_report(
    command: &str,
    loaded: &Loaded,
    cert: &GinCertificate,
    notes: Vec<String>,
) -> Report {
    let mut report = Report::new(command, loaded.name(), loaded.mode);
    report.gin = Some(GinSummary::from_certificate(cert));
    report.warn(notes);
    report.warn(cert.warnings.iter().cloned());
    report
}

pub fn betti(cert: &GinCertificate, profile: Option<&SchemeProfile>) -> Result<BettiSummary, CliError> {
    let mut table = cert.gin.ek_betti()?;
    if let Some(p) = profile {
        table = table.with_codim_marker(p.e);
    }
    Ok(BettiSummary::from_table(&table))
}

pub fn profile(cert: &GinCertificate) -> Result<SchemeProfile, CliError> {
    Ok(scheme_profile(&cert.gin)?)
}

pub fn hilbert_routes(
    cert: &GinCertificate,
    profile: &SchemeProfile,
    method: &str,
) -> Result<HilbertRoutes, CliError> {
    let engine = hilbert::engine(method)?;
    let values = (0..=profile.reg + 2)
        .map(|t| engine.hilbert_function(&cert.gin, t))
        .collect::<ginbetti::Result<Vec<_>>>()?;
    let from_gin = profile.hilbert_polynomial.clone();
    let mut notes = vec![CONNECTEDNESS_NOTE.to_string()];
    let failures = hypothesis_failures(&cert.gin, profile);
    if !failures.is_empty() {
        notes.push(format!("tailing route outside its hypotheses: {}", failures.join("; ")));
    }
    let b = ginbetti::tailing::tailing_from_gin(&cert.gin, profile.e)?;
    let from_tailing = hilbert_from_tailing(&b, profile.n, profile.e)?;
    Ok(HilbertRoutes {
        engine: engine.name().to_string(),
        values,
        agree: Some(from_tailing == from_gin),
        from_gin,
        from_tailing: Some(from_tailing),
        note: Some(notes.join("; ")),
    })
}
