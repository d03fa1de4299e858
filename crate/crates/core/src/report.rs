//! The machine-readable report and its plain-table rendering.
//!
//! Every section is optional and serialized as `null` when absent.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::borel::{BettiTable, MonomialIdeal};
use crate::error::Result;
use crate::field::{Field, FieldMode};
use crate::gin::{GinCertificate, GinProvenance};
use crate::groebner::GroebnerBasis;
use crate::invariants::{HilbertPolynomial, Nd1Verdict, SchemeProfile};
use crate::tailing::{Rigidity, TailingReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// The `name` metadata of the input file, if any.
    pub name: Option<String>,
    /// `q` or `fp:<p>`.
    pub field: String,
    /// False over prime fields and for forced tailing reports.
    pub certified: bool,
    pub groebner: Option<GroebnerSummary>,
    pub profile: Option<SchemeProfile>,
    pub gin: Option<GinSummary>,
    pub betti: Option<BettiSummary>,
    pub nd1: Option<Vec<Nd1Verdict>>,
    pub hilbert: Option<HilbertRoutes>,
    pub tailing: Option<TailingReport>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &str, name: Option<String>, field: FieldMode) -> Self {
        Report {
            command: command.to_string(),
            name,
            field: field.to_string(),
            certified: field.is_certified(),
            groebner: None,
            profile: None,
            gin: None,
            betti: None,
            nd1: None,
            hilbert: None,
            tailing: None,
            warnings: Vec::new(),
        }
    }

    /// Append warnings, skipping exact duplicates.
    pub fn warn<I: IntoIterator<Item = String>>(&mut self, warnings: I) {
        for w in warnings {
            if !self.warnings.contains(&w) {
                self.warnings.push(w);
            }
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::Error::InvalidArgument(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerSummary {
    /// Reduced basis, ascending by leading monomial. Coefficients are exact
    /// (`num/den` over Q).
    pub basis: Vec<String>,
    pub leading_monomials: Vec<String>,
}

impl GroebnerSummary {
    pub fn from_basis<K: Field>(gb: &GroebnerBasis<K>) -> Self {
        GroebnerSummary {
            basis: gb.elements().iter().map(|g| g.to_string()).collect(),
            leading_monomials: gb.leading_monomials().iter().map(|m| m.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GinSummary {
    pub num_vars: usize,
    pub generators: Vec<String>,
    pub exponents: Vec<Vec<u32>>,
    pub trial_seeds: Vec<u64>,
    pub agreements: usize,
    pub borel_verified: bool,
    pub provenance: GinProvenance,
}

impl GinSummary {
    pub fn from_certificate(cert: &GinCertificate) -> Self {
        GinSummary {
            num_vars: cert.num_vars(),
            generators: cert.gin.generators().iter().map(|m| m.to_string()).collect(),
            exponents: cert
                .gin
                .generators()
                .iter()
                .map(|m| m.exponents().to_vec())
                .collect(),
            trial_seeds: cert.trial_seeds.clone(),
            agreements: cert.agreements,
            borel_verified: cert.borel_verified,
            provenance: cert.provenance,
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let exps: Vec<&[u32]> = self.exponents.iter().map(Vec::as_slice).collect();
        MonomialIdeal::from_exponents(self.num_vars, &exps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiSummary {
    /// `rows[d][i] = beta_(i,d)`.
    pub rows: Vec<Vec<u64>>,
    /// Row 2 columns `>= codim` form the tailing region.
    pub codim: Option<usize>,
    /// `beta_(i,2)` for `i >= codim`.
    pub tailing: Option<Vec<u64>>,
}

impl BettiSummary {
    pub fn from_table(table: &BettiTable) -> Self {
        let tailing = table.codim_marker().map(|e| {
            let n = table.num_vars() - 1;
            (e..=n).map(|i| table.get(i, 2)).collect()
        });
        BettiSummary {
            rows: table.rows(),
            codim: table.codim_marker(),
            tailing,
        }
    }
}

/// The Hilbert polynomial by two routes: fitted to the Gin's Hilbert
/// function, and reconstructed from the tailing vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertRoutes {
    pub engine: String,
    /// `HF(R/I, t)` for `t = 0..=reg + 2`.
    pub values: Vec<u64>,
    pub from_gin: HilbertPolynomial,
    pub from_tailing: Option<HilbertPolynomial>,
    pub agree: Option<bool>,
    /// Why the tailing route is absent or unreliable.
    pub note: Option<String>,
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn hp_line(hp: &HilbertPolynomial) -> String {
    let chis = hp.chis_descending();
    let r = chis.len().saturating_sub(1);
    let mut poly = String::new();
    for (k, c) in chis.iter().enumerate() {
        let j = r - k;
        if *c == 0 {
            continue;
        }
        let basis = match j {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("C(t+{},{j})", j - 1),
        };
        let mag = c.unsigned_abs();
        let term = match (mag, basis.is_empty()) {
            (_, true) => mag.to_string(),
            (1, false) => basis,
            (_, false) => format!("{mag}*{basis}"),
        };
        match (poly.is_empty(), *c < 0) {
            (true, true) => poly.push_str(&format!("-{term}")),
            (true, false) => poly.push_str(&term),
            (false, true) => poly.push_str(&format!(" - {term}")),
            (false, false) => poly.push_str(&format!(" + {term}")),
        }
    }
    if poly.is_empty() {
        poly.push('0');
    }
    format!("chi = ({})   P(t) = {poly}", join(&chis))
}

/// Aligned plain-text rendering.
pub fn render_table(report: &Report) -> String {
    let mut out = String::new();
    let title = report.name.as_deref().unwrap_or("-");
    let _ = writeln!(
        out,
        "{}  [{}]  field {}  certified {}",
        report.command, title, report.field, report.certified
    );
    if let Some(g) = &report.groebner {
        let _ = writeln!(out, "\nreduced Groebner basis ({} elements)", g.basis.len());
        for p in &g.basis {
            let _ = writeln!(out, "  {p}");
        }
    }
    if let Some(g) = &report.gin {
        let _ = writeln!(out, "\nGin ({} generators)", g.generators.len());
        for m in &g.generators {
            let _ = writeln!(out, "  {m}");
        }
        let _ = writeln!(
            out,
            "  provenance {:?}  agreements {}  seeds [{}]  Borel fixed {}",
            g.provenance,
            g.agreements,
            join(&g.trial_seeds),
            g.borel_verified
        );
    }
    if let Some(p) = &report.profile {
        let _ = writeln!(out, "\nprofile");
        let rows = [
            ("n", p.n.to_string()),
            ("dim", p.dim.to_string()),
            ("codim e", p.e.to_string()),
            ("degree", p.degree.to_string()),
            ("reg", p.reg.to_string()),
            ("depth", p.depth.to_string()),
            ("pd", p.pd.to_string()),
            ("3-regular", p.is_3regular.to_string()),
            ("ND(1)", p.nd1_holds().to_string()),
        ];
        for (k, v) in rows {
            let _ = writeln!(out, "  {k:<10} {v}");
        }
        let _ = writeln!(out, "  {}", hp_line(&p.hilbert_polynomial));
    }
    if let Some(b) = &report.betti {
        let _ = writeln!(out, "\nBetti table of the Gin");
        let width = b.rows.first().map_or(1, Vec::len);
        let cell = b
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len() + 1)
            .max()
            .unwrap_or(1)
            .max(width.to_string().len())
            + 1;
        let mut header = format!("{:>4}|", "");
        for i in 0..width {
            let _ = write!(header, "{i:>cell$}");
        }
        let _ = writeln!(out, "{header}");
        let _ = writeln!(out, "{}", "-".repeat(header.len()));
        for (d, row) in b.rows.iter().enumerate() {
            let _ = write!(out, "{d:>4}|");
            for (i, v) in row.iter().enumerate() {
                let mark = d == 2 && b.codim.is_some_and(|e| i >= e);
                let text = match (*v, mark) {
                    (0, _) => ".".to_string(),
                    (v, true) => format!("{v}*"),
                    (v, false) => v.to_string(),
                };
                let _ = write!(out, "{text:>cell$}");
            }
            let _ = writeln!(out);
        }
        if let Some(e) = b.codim {
            let _ = writeln!(out, "  * tailing entries beta_(i,2), i >= {e}");
        }
    }
    if let Some(v) = &report.nd1 {
        let _ = writeln!(out, "\nND(1) by section dimension");
        for s in v {
            let verdict = if s.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "  dim {:<3} {verdict}  linear forms {}", s.dim, s.linear_forms);
        }
    }
    if let Some(h) = &report.hilbert {
        let _ = writeln!(out, "\nHilbert function ({} engine)", h.engine);
        let _ = writeln!(out, "  HF(0..) = {}", join(&h.values));
        let _ = writeln!(out, "  from Gin:     {}", hp_line(&h.from_gin));
        match &h.from_tailing {
            Some(t) => {
                let _ = writeln!(out, "  from tailing: {}", hp_line(t));
            }
            None => {
                let _ = writeln!(out, "  from tailing: -");
            }
        }
        if let Some(a) = h.agree {
            let _ = writeln!(out, "  agree {a}");
        }
        if let Some(n) = &h.note {
            let _ = writeln!(out, "  note: {n}");
        }
    }
    if let Some(t) = &report.tailing {
        render_tailing(&mut out, t);
    }
    if !report.warnings.is_empty() {
        let _ = writeln!(out, "\nwarnings");
        for w in &report.warnings {
            let _ = writeln!(out, "  - {w}");
        }
    }
    out
}

fn render_tailing(out: &mut String, t: &TailingReport) {
    let _ = writeln!(out, "\ntailing (n = {}, e = {}, source {:?})", t.n, t.e, t.source);
    if let Some(w) = &t.watermark {
        let _ = writeln!(out, "  !! {w}");
    }
    let idx: Vec<usize> = (t.e..=t.n).collect();
    let _ = writeln!(out, "  i           {}", join(&idx));
    let _ = writeln!(out, "  b = beta_i2 {}", join(&t.b));
    let _ = writeln!(out, "  h           {}", join(&t.h));
    let _ = writeln!(out, "  b = Xi h    {}", t.consistency);
    let _ = writeln!(out, "  Xi(n,e)\n{}", indent(&t.xi.to_string()));
    let _ = writeln!(out, "  Xi(n,e)^-1\n{}", indent(&t.xi_inverse.to_string()));
    let dg = &t.degree_genus;
    let _ = writeln!(out, "  degree      {}", dg.degree);
    if let Some(g) = dg.arithmetic_genus {
        let _ = writeln!(out, "  p_a         {g}");
    }
    if let Some(q) = dg.irregularity {
        let _ = writeln!(out, "  q           {q}");
    }
    if let Some(g) = t.sectional_genus {
        let _ = writeln!(out, "  sectional genus {g}");
    }
    let _ = writeln!(out, "  {}", hp_line(&t.hilbert_from_tailing));
    if let Some(a) = t.hilbert_agrees {
        let _ = writeln!(out, "  agrees with Gin route {a}");
    }
    let c = &t.cohomology;
    let _ = writeln!(out, "  h1(I(1))    {}", c.h1);
    if let Some(h2) = c.h2 {
        let _ = writeln!(out, "  h2(I)       {h2}");
    }
    if let (Some(lo), Some(hi)) = (c.h3_lower, c.h3_upper) {
        let _ = writeln!(out, "  h3(I(-1))   in [{lo}, {hi}]");
    }
    match &t.rigidity {
        Rigidity::TwoRegular { confirmed } => {
            let _ = writeln!(out, "  rigidity    2-regular (confirmed {confirmed:?})");
        }
        Rigidity::LowerBounds { pd, checks } => {
            let _ = writeln!(out, "  lower bounds C({}, i+1):", pd + 1);
            for ch in checks {
                let _ = writeln!(
                    out,
                    "    i = {:<3} beta {:<8} bound {:<8} slack {}",
                    ch.i, ch.value, ch.bound, ch.slack
                );
            }
        }
    }
    if let Some(s) = &t.structure {
        let verdict = if s.pass() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "  generator decomposition {verdict}");
        for l in &s.levels {
            for f in &l.failures {
                let _ = writeln!(out, "    dim {}: {f}", l.dim);
            }
        }
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}
