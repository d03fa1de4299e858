//! Tailing Betti numbers `beta_(i,2)`, `i >= e`, of 3-regular ND(1) schemes
//! and the quantities they determine.
//!
//! Vectors are indexed from `e`: `b[k] = beta_(e+k, 2)` and
//! `h[k] = h^1(I_(X ∩ Λ)(1))` for a general linear space `Λ` of dimension
//! `e + k`. The two are related by `b = Xi(n, e) h`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binomial::binomial;
use crate::borel::MonomialIdeal;
use crate::error::{Error, Result};
use crate::gin::generic_section_gin;
use crate::invariants::{h1_oracle, HilbertPolynomial, SchemeProfile};
use crate::ring::Monomial;

pub const FORCED_WATERMARK: &str = "formulas applied outside certified hypotheses";

pub const CONNECTEDNESS_NOTE: &str =
    "the Hilbert polynomial reconstruction assumes a connected reduced scheme; \
     this is not verified";

/// Unit upper-triangular binomial matrix (or its inverse).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiMatrix {
    pub n: usize,
    pub e: usize,
    pub entries: Vec<Vec<i128>>,
}

impl XiMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn apply(&self, v: &[i128]) -> Result<Vec<i128>> {
        if v.len() != self.size() {
            return Err(Error::InvalidArgument(format!(
                "vector of length {} does not match a {}x{} matrix",
                v.len(),
                self.size(),
                self.size()
            )));
        }
        self.entries
            .iter()
            .map(|row| {
                row.iter().zip(v).try_fold(0i128, |acc, (a, x)| {
                    a.checked_mul(*x)
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::Overflow("matrix product"))
                })
            })
            .collect()
    }

    pub fn mul(&self, other: &XiMatrix) -> Result<Vec<Vec<i128>>> {
        let m = self.size();
        let mut out = vec![vec![0i128; m]; m];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                for k in 0..m {
                    let p = self.entries[r][k]
                        .checked_mul(other.entries[k][c])
                        .ok_or(Error::Overflow("matrix product"))?;
                    *cell = cell.checked_add(p).ok_or(Error::Overflow("matrix product"))?;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for XiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>w$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

fn xi_entries(n: usize, e: usize, signed: bool) -> Result<XiMatrix> {
    if e > n {
        return Err(Error::InvalidArgument(format!("codimension {e} exceeds n = {n}")));
    }
    let m = n - e + 1;
    let mut entries = vec![vec![0i128; m]; m];
    for (r, row) in entries.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate().skip(r) {
            let v = binomial((e + c) as i64, (e + r) as i64)?;
            *cell = if signed && (c - r) % 2 == 1 { -v } else { v };
        }
    }
    Ok(XiMatrix { n, e, entries })
}

/// `Xi(n, e)[r][c] = C(e + c, e + r)`.
pub fn xi_matrix(n: usize, e: usize) -> Result<XiMatrix> {
    xi_entries(n, e, false)
}

/// `Xi(n, e)^-1[r][c] = (-1)^(c - r) C(e + c, e + r)`.
pub fn xi_inverse(n: usize, e: usize) -> Result<XiMatrix> {
    xi_entries(n, e, true)
}

pub fn betti_from_normality(h: &[i128], n: usize, e: usize) -> Result<Vec<i128>> {
    xi_matrix(n, e)?.apply(h)
}

pub fn normality_from_betti(b: &[i128], n: usize, e: usize) -> Result<Vec<i128>> {
    xi_inverse(n, e)?.apply(b)
}

/// `beta_(i,2)` from an `e`-indexed vector; zero outside `e..=n`.
fn beta(b: &[i128], e: usize, i: i64) -> i128 {
    if i < e as i64 {
        return 0;
    }
    b.get(i as usize - e).copied().unwrap_or(0)
}

fn check_len(b: &[i128], n: usize, e: usize) -> Result<()> {
    if e > n || b.len() != n - e + 1 {
        return Err(Error::InvalidArgument(format!(
            "expected a vector of length n - e + 1 = {}, got {}",
            (n + 1).saturating_sub(e),
            b.len()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeGenus {
    pub degree: i128,
    /// Absent for zero-dimensional schemes.
    pub arithmetic_genus: Option<i128>,
    /// Irregularity reading, surfaces only.
    pub irregularity: Option<i128>,
}

fn signed_sum<I: Iterator<Item = Result<i128>>>(terms: I) -> Result<i128> {
    terms.sum::<Result<i128>>()
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("tailing formula"))
}

/// `deg X = e + 1 + sum_(i=e..n) (-1)^(i-e) C(i, e) beta_(i,2)`.
fn degree_from_tailing(b: &[i128], n: usize, e: usize) -> Result<i128> {
    let s = signed_sum((e..=n).map(|i| {
        let t = mul(binomial(i as i64, e as i64)?, beta(b, e, i as i64))?;
        Ok(if (i - e) % 2 == 1 { -t } else { t })
    }))?;
    Ok(e as i128 + 1 + s)
}

pub fn degree_genus_from_tailing(b: &[i128], n: usize, e: usize) -> Result<DegreeGenus> {
    check_len(b, n, e)?;
    let r = n - e;
    let degree = degree_from_tailing(b, n, e)?;
    let top = mul(n as i128 + 1, beta(b, e, n as i64))? - beta(b, e, n as i64 - 1);
    let arithmetic_genus = (r >= 1).then(|| if r % 2 == 1 { -top } else { top });
    let irregularity = (r == 2).then_some(-top);
    Ok(DegreeGenus {
        degree,
        arithmetic_genus,
        irregularity,
    })
}

/// Hilbert polynomial from the tailing vector:
/// `chi_r = deg X` and, for `i < r`,
/// `chi_i = 1 - beta_(n-i-1) + sum_(j=n-i..n) (-1)^(j-n+i) C(j+1, n-i) beta_j`.
pub fn hilbert_from_tailing(b: &[i128], n: usize, e: usize) -> Result<HilbertPolynomial> {
    check_len(b, n, e)?;
    let r = n - e;
    let mut chis = Vec::with_capacity(r + 1);
    for i in 0..r {
        let s = signed_sum((n - i..=n).map(|j| {
            let t = mul(
                binomial(j as i64 + 1, (n - i) as i64)?,
                beta(b, e, j as i64),
            )?;
            Ok(if (j + i - n) % 2 == 1 { -t } else { t })
        }))?;
        chis.push(1 - beta(b, e, (n - i) as i64 - 1) + s);
    }
    chis.push(degree_from_tailing(b, n, e)?);
    Ok(HilbertPolynomial::from_chis(chis))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReading {
    /// `h^1(I(1))`.
    pub h1: i128,
    /// `h^2(I)`; needs `beta_(n-1,2)` to be a tailing entry.
    pub h2: Option<i128>,
    /// Lower bound for `h^3(I(-1))` as computed, possibly negative.
    pub h3_lower_raw: Option<i128>,
    /// The same bound clamped at zero.
    pub h3_lower: Option<i128>,
    pub h3_upper: Option<i128>,
}

pub fn cohomology_from_tailing(b: &[i128], n: usize, e: usize) -> Result<CohomologyReading> {
    check_len(b, n, e)?;
    let r = n - e;
    let bn = beta(b, e, n as i64);
    let bn1 = beta(b, e, n as i64 - 1);
    let bn2 = beta(b, e, n as i64 - 2);
    let n1 = n as i128 + 1;
    let h2 = if r >= 1 { Some(bn1 - mul(n1, bn)?) } else { None };
    let (lower, upper) = if r >= 2 {
        let c2 = binomial(n as i64 + 2, 2)?;
        let c1 = binomial(n as i64 + 1, 2)?;
        (
            Some(bn2 - mul(n1, bn1)? + mul(c2, bn)?),
            Some(bn2 - mul(n as i128, bn1)? + mul(c1, bn)?),
        )
    } else {
        (None, None)
    };
    Ok(CohomologyReading {
        h1: bn,
        h2,
        h3_lower_raw: lower,
        h3_lower: lower.map(|v| v.max(0)),
        h3_upper: upper,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub i: usize,
    pub value: i128,
    pub bound: i128,
    pub slack: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum Rigidity {
    /// `beta_(e,2) = 0`, so the scheme is 2-regular. `confirmed` compares
    /// against the Gin regularity when one is available.
    TwoRegular { confirmed: Option<bool> },
    /// Lower bounds `beta_(i,2) >= C(l0 + 1, i + 1)`, `e <= i <= l0`.
    LowerBounds { pd: usize, checks: Vec<BoundCheck> },
}

impl Rigidity {
    pub fn violations(&self) -> Vec<String> {
        match self {
            Rigidity::TwoRegular { confirmed: Some(false) } => {
                vec!["beta_(e,2) = 0 but the Gin is not 2-regular".into()]
            }
            Rigidity::TwoRegular { .. } => Vec::new(),
            Rigidity::LowerBounds { checks, .. } => checks
                .iter()
                .filter(|c| c.slack < 0)
                .map(|c| format!("beta_({},2) = {} is below its bound {}", c.i, c.value, c.bound))
                .collect(),
        }
    }
}

/// `pd` is the projective dimension `l0`; `reg` the Gin regularity when
/// known.
pub fn rigidity_and_bounds(
    b: &[i128],
    n: usize,
    e: usize,
    pd: usize,
    reg: Option<u32>,
) -> Result<Rigidity> {
    check_len(b, n, e)?;
    if b[0] == 0 {
        return Ok(Rigidity::TwoRegular {
            confirmed: reg.map(|r| r <= 2),
        });
    }
    let top = pd.min(n);
    let checks = (e..=top)
        .map(|i| {
            let value = beta(b, e, i as i64);
            let bound = binomial(pd as i64 + 1, i as i64 + 1)?;
            Ok(BoundCheck {
                i,
                value,
                bound,
                slack: value - bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Rigidity::LowerBounds { pd, checks })
}

/// The largest index with a nonzero tailing entry; this is the projective
/// dimension when only published vectors are available.
pub fn last_nonzero_index(b: &[i128], e: usize) -> usize {
    b.iter().rposition(|v| *v != 0).map_or(e, |k| e + k)
}

/// `b[k] = beta_(e+k,2)` of the Gin's Eliahou-Kervaire table.
pub fn tailing_from_gin(gin: &MonomialIdeal, e: usize) -> Result<Vec<i128>> {
    let table = gin.ek_betti()?;
    let n = gin.num_vars() - 1;
    Ok((e..=n).map(|i| table.get(i, 2) as i128).collect())
}

/// `h[k] = |M_(a-1)(3, Gin of the section of dimension a)|` with `a = e + k`,
/// each entry cross-checked against [`h1_oracle`] on the section.
pub fn sectional_normality(gin: &MonomialIdeal, e: usize) -> Result<Vec<i128>> {
    let n = gin.num_vars() - 1;
    (e..=n)
        .map(|a| {
            if a == 0 {
                return Ok(0);
            }
            let section = generic_section_gin(gin, a)?;
            let count = section.stratum(3, a - 1).len() as u64;
            let oracle = h1_oracle(&section, 2)?;
            if count != oracle {
                return Err(Error::Internal(format!(
                    "section of dimension {a}: stratum count {count}, oracle {oracle}"
                )));
            }
            Ok(count as i128)
        })
        .collect()
}

/// Failed hypotheses for the tailing formulas, empty when all hold.
pub fn hypothesis_failures(gin: &MonomialIdeal, profile: &SchemeProfile) -> Vec<String> {
    let mut out = Vec::new();
    if !profile.is_3regular {
        out.push(format!("regularity {} exceeds 3", profile.reg));
    }
    for dim in profile.nd1_failures() {
        out.push(format!("ND(1) fails for the general section of dimension {dim}"));
    }
    if gin.involves_last_variable() {
        out.push("the ideal is not saturated".into());
    }
    out
}

/// One level of the generator-set decomposition check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureLevel {
    /// Ambient dimension of the scheme at this level.
    pub dim: usize,
    /// `|M_(dim-1)(3, ·)|`.
    pub r: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureVerdict {
    pub levels: Vec<StructureLevel>,
}

impl StructureVerdict {
    pub fn pass(&self) -> bool {
        self.levels.iter().all(|l| l.failures.is_empty())
    }
}

fn as_set<'a, I: Iterator<Item = &'a Monomial>>(it: I, nv: usize) -> BTreeSet<Vec<u32>> {
    it.map(|m| m.extend_to(nv).exponents().to_vec()).collect()
}

fn show(set: &BTreeSet<Vec<u32>>) -> String {
    let v: Vec<String> = set
        .iter()
        .map(|e| Monomial::new(e).to_string())
        .collect();
    format!("{{{}}}", v.join(", "))
}

/// Check the degree-2 and degree-3 generator decomposition between the Gin
/// at every level `dim = n, n-1, ..., e+1` of the section tower and the Gin
/// of its hyperplane section. With `M_(dim-1)(3, J) = {T_k x_(dim-1)}`:
/// (a) `max(T_k) <= e - 1`;
/// (c) `G(S)_2 = G(J)_2 ⊔ {T_k}`;
/// (d) `G(S)_3 ⊆ G(J)_3`;
/// (e) `M_i(3, J) = M_i(3, S) ⊔ {T_k x_i}` for `e - 1 <= i <= dim - 1`.
pub fn structure_check(gin: &MonomialIdeal, e: usize) -> Result<StructureVerdict> {
    let n = gin.num_vars() - 1;
    let mut levels = Vec::new();
    for dim in (e + 1..=n).rev() {
        let j = generic_section_gin(gin, dim)?;
        let s = generic_section_gin(&j, dim - 1)?;
        let nv = dim + 1;
        let mut failures = Vec::new();

        let ts: Vec<Monomial> = j
            .stratum(3, dim - 1)
            .members
            .iter()
            .map(|m| m.div_var(dim - 1).expect("max index divides"))
            .collect();
        let t_set = as_set(ts.iter(), nv);

        for t in &ts {
            if t.max_index().is_some_and(|i| i + 1 > e) {
                failures.push(format!("(a) max({t}) exceeds e - 1 = {}", e as i64 - 1));
            }
        }

        let g2_j = as_set(j.generators_of_degree(2), nv);
        let g2_s = as_set(s.generators_of_degree(2), nv);
        let overlap: BTreeSet<_> = g2_j.intersection(&t_set).cloned().collect();
        let union: BTreeSet<_> = g2_j.union(&t_set).cloned().collect();
        if !overlap.is_empty() || union != g2_s || t_set.len() != ts.len() {
            failures.push(format!(
                "(c) G(S)_2 = {} but G(J)_2 ⊔ T = {} ⊔ {}",
                show(&g2_s),
                show(&g2_j),
                show(&t_set)
            ));
        }

        let g3_j = as_set(j.generators_of_degree(3), nv);
        let g3_s = as_set(s.generators_of_degree(3), nv);
        if !g3_s.is_subset(&g3_j) {
            failures.push(format!(
                "(d) G(S)_3 = {} is not contained in G(J)_3 = {}",
                show(&g3_s),
                show(&g3_j)
            ));
        }

        for i in e.saturating_sub(1)..dim {
            let mi_j = as_set(j.stratum(3, i).members.iter(), nv);
            let mi_s = as_set(s.stratum(3, i).members.iter(), nv);
            let txi: BTreeSet<Vec<u32>> = ts
                .iter()
                .map(|t| t.extend_to(nv).mul_var(i).exponents().to_vec())
                .collect();
            let disjoint = mi_s.is_disjoint(&txi);
            let union: BTreeSet<_> = mi_s.union(&txi).cloned().collect();
            if !disjoint || union != mi_j {
                failures.push(format!(
                    "(e) at i = {i}: M_i(3, J) = {} but M_i(3, S) ⊔ T x_i = {} ⊔ {}",
                    show(&mi_j),
                    show(&mi_s),
                    show(&txi)
                ));
            }
        }

        levels.push(StructureLevel {
            dim,
            r: ts.len(),
            failures,
        });
    }
    Ok(StructureVerdict { levels })
}

/// Where the tailing vector came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TailingSource {
    Gin,
    PublishedBetti,
    PublishedNormality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailingReport {
    pub source: TailingSource,
    pub n: usize,
    pub e: usize,
    pub b: Vec<i128>,
    pub h: Vec<i128>,
    /// `h` clamped at zero (differs from `h` only on inconsistent input).
    pub h_clamped: Vec<i128>,
    /// `b = Xi h`, with `b` and `h` computed independently when possible.
    pub consistency: bool,
    pub xi: XiMatrix,
    pub xi_inverse: XiMatrix,
    pub degree_genus: DegreeGenus,
    /// `h_e - h_(e+1)`, the genus of the general curve section.
    pub sectional_genus: Option<i128>,
    pub hilbert_from_tailing: HilbertPolynomial,
    pub hilbert_from_gin: Option<HilbertPolynomial>,
    pub hilbert_agrees: Option<bool>,
    pub cohomology: CohomologyReading,
    pub rigidity: Rigidity,
    pub structure: Option<StructureVerdict>,
    pub profile: Option<SchemeProfile>,
    pub forced: bool,
    pub watermark: Option<String>,
    pub warnings: Vec<String>,
}

fn derived_fields(
    b: &[i128],
    n: usize,
    e: usize,
) -> Result<(XiMatrix, XiMatrix, DegreeGenus, HilbertPolynomial, CohomologyReading)> {
    Ok((
        xi_matrix(n, e)?,
        xi_inverse(n, e)?,
        degree_genus_from_tailing(b, n, e)?,
        hilbert_from_tailing(b, n, e)?,
        cohomology_from_tailing(b, n, e)?,
    ))
}

fn sectional_genus(h: &[i128]) -> Option<i128> {
    (h.len() >= 2).then(|| h[0] - h[1])
}

/// Full analysis of a Gin. Refuses input outside the hypotheses unless
/// `force` is set, in which case the report is watermarked.
pub fn analyze(gin: &MonomialIdeal, profile: &SchemeProfile, force: bool) -> Result<TailingReport> {
    let failures = hypothesis_failures(gin, profile);
    if !failures.is_empty() && !force {
        return Err(Error::Hypothesis(failures.join("; ")));
    }
    let forced = !failures.is_empty();
    let (n, e) = (profile.n, profile.e);
    let b = tailing_from_gin(gin, e)?;
    let h = sectional_normality(gin, e)?;
    let consistency = betti_from_normality(&h, n, e)? == b;
    let (xi, xi_inv, degree_genus, hp, cohomology) = derived_fields(&b, n, e)?;
    let rigidity = rigidity_and_bounds(&b, n, e, profile.pd, Some(profile.reg))?;
    let structure = structure_check(gin, e)?;

    let mut warnings = vec![CONNECTEDNESS_NOTE.to_string()];
    if !forced {
        if !consistency {
            return Err(Error::Internal("b differs from Xi h on certified input".into()));
        }
        let violations = rigidity.violations();
        if !violations.is_empty() {
            let gaps = vanishing_sections(&h, e, profile.pd.min(n));
            if gaps.is_empty() {
                return Err(Error::Internal(violations.join("; ")));
            }
            warnings.extend(violations);
            warnings.push(format!(
                "lower bounds need h1 >= 1 on every section up to the projective dimension; \
                 it vanishes in dimension {}",
                gaps.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
            ));
        }
        if degree_genus.degree != profile.degree {
            return Err(Error::Internal(format!(
                "degree {} from tailing differs from degree {} of the Gin",
                degree_genus.degree, profile.degree
            )));
        }
    } else {
        warnings.extend(failures.iter().map(|f| format!("hypothesis not met: {f}")));
        warnings.extend(rigidity.violations());
        if !structure.pass() {
            warnings.push("generator decomposition check failed".into());
        }
    }
    let hilbert_agrees = Some(hp == profile.hilbert_polynomial);
    Ok(TailingReport {
        source: TailingSource::Gin,
        n,
        e,
        h_clamped: h.iter().map(|v| (*v).max(0)).collect(),
        sectional_genus: sectional_genus(&h),
        b,
        h,
        consistency,
        xi,
        xi_inverse: xi_inv,
        degree_genus,
        hilbert_from_tailing: hp,
        hilbert_from_gin: Some(profile.hilbert_polynomial.clone()),
        hilbert_agrees,
        cohomology,
        rigidity,
        structure: Some(structure),
        profile: Some(profile.clone()),
        forced,
        watermark: forced.then(|| FORCED_WATERMARK.to_string()),
        warnings,
    })
}

/// Section dimensions `e..=top` whose `h1(I(1))` vanishes. When this is
/// empty, `b = Xi h` forces the lower bounds; otherwise they can fail, which
/// happens for schemes with embedded components.
pub fn vanishing_sections(h: &[i128], e: usize, top: usize) -> Vec<usize> {
    (e..=top).filter(|a| h.get(a - e).is_some_and(|v| *v <= 0)).collect()
}

/// A literal vector supplied instead of an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PublishedVector {
    Betti(Vec<i128>),
    Normality(Vec<i128>),
}

/// Pure transform mode: derive everything from a given `b` or `h`.
pub fn analyze_published(input: &PublishedVector, n: usize, e: usize) -> Result<TailingReport> {
    let (source, b, h) = match input {
        PublishedVector::Betti(b) => {
            check_len(b, n, e)?;
            (TailingSource::PublishedBetti, b.clone(), normality_from_betti(b, n, e)?)
        }
        PublishedVector::Normality(h) => {
            check_len(h, n, e)?;
            (TailingSource::PublishedNormality, betti_from_normality(h, n, e)?, h.clone())
        }
    };
    if b.iter().chain(&h).any(|v| *v < 0) && matches!(input, PublishedVector::Normality(_)) {
        return Err(Error::InvalidArgument("normality entries must be nonnegative".into()));
    }
    if b.iter().any(|v| *v < 0) {
        return Err(Error::InvalidArgument("Betti entries must be nonnegative".into()));
    }
    let consistency = betti_from_normality(&h, n, e)? == b;
    let (xi, xi_inv, degree_genus, hp, cohomology) = derived_fields(&b, n, e)?;
    let pd = last_nonzero_index(&b, e);
    let rigidity = rigidity_and_bounds(&b, n, e, pd, None)?;
    let mut warnings = vec![
        CONNECTEDNESS_NOTE.to_string(),
        "published-vector mode: hypotheses are taken on trust; the projective \
         dimension is read as the last nonzero tailing index"
            .to_string(),
    ];
    if h.iter().any(|v| *v < 0) {
        warnings.push("negative sectional normality: input is inconsistent with the theory".into());
    }
    warnings.extend(rigidity.violations());
    Ok(TailingReport {
        source,
        n,
        e,
        h_clamped: h.iter().map(|v| (*v).max(0)).collect(),
        sectional_genus: sectional_genus(&h),
        b,
        h,
        consistency,
        xi,
        xi_inverse: xi_inv,
        degree_genus,
        hilbert_from_tailing: hp,
        hilbert_from_gin: None,
        hilbert_agrees: None,
        cohomology,
        rigidity,
        structure: None,
        profile: None,
        forced: false,
        watermark: None,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_xi_matrices() {
        assert_eq!(xi_matrix(9, 8).unwrap().entries, vec![vec![1, 9], vec![0, 1]]);
        assert_eq!(
            xi_inverse(10, 5).unwrap().entries[0],
            vec![1, -6, 21, -56, 126, -252]
        );
        assert_eq!(xi_matrix(4, 4).unwrap().entries, vec![vec![1]]);
        assert!(xi_matrix(3, 4).is_err());
    }

    #[test]
    fn xi_times_inverse_is_identity() {
        for n in 0..=16 {
            for e in 0..=n {
                let p = xi_matrix(n, e).unwrap().mul(&xi_inverse(n, e).unwrap()).unwrap();
                for (r, row) in p.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        assert_eq!(*v, i128::from(r == c), "n={n} e={e}");
                    }
                }
            }
        }
    }

    #[test]
    fn two_regular_vector() {
        let b = vec![0, 0];
        let hp = hilbert_from_tailing(&b, 3, 2).unwrap();
        assert_eq!(hp.chis(), &[1, 3]);
        let c = cohomology_from_tailing(&b, 3, 2).unwrap();
        assert_eq!((c.h1, c.h2), (0, Some(0)));
        assert_eq!(c.h3_lower, None);
        assert_eq!(
            rigidity_and_bounds(&b, 3, 2, 2, Some(2)).unwrap(),
            Rigidity::TwoRegular { confirmed: Some(true) }
        );
    }

    #[test]
    fn length_mismatch_is_rejected() {
        assert!(betti_from_normality(&[1, 2, 3], 3, 2).is_err());
        assert!(hilbert_from_tailing(&[1], 3, 2).is_err());
    }

    #[test]
    fn embedded_point_breaks_lower_bounds() {
        // a double line in P2 with an embedded point
        let gin = MonomialIdeal::from_exponents(3, &[&[3, 0, 0], &[2, 1, 0]]).unwrap();
        let profile = crate::invariants::scheme_profile(&gin).unwrap();
        let report = analyze(&gin, &profile, false).unwrap();
        assert_eq!((report.b.clone(), report.h.clone()), (vec![2, 1], vec![0, 1]));
        assert_eq!(report.rigidity.violations().len(), 1);
        assert!(report.warnings.iter().any(|w| w.ends_with("dimension 1")));
        assert!(report.consistency && report.watermark.is_none());
    }
}
