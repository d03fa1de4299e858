//! Scheme invariants read off a Gin: Hilbert polynomial, dimension, degree,
//! regularity, depth, ND(1) verdicts and the `h^1` twists of the ideal sheaf.

use serde::{Deserialize, Serialize};

use crate::binomial::binomial_poly;
use crate::borel::MonomialIdeal;
use crate::error::{Error, Result};
use crate::gin::generic_section_gin;

/// `P(t) = sum_j chi_j C(t + j - 1, j)`, stored by `j` ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertPolynomial {
    chis: Vec<i128>,
}

impl HilbertPolynomial {
    /// From `chi_0, ..., chi_r` (trailing zeros are trimmed).
    pub fn from_chis(mut chis: Vec<i128>) -> Self {
        while chis.len() > 1 && chis.last() == Some(&0) {
            chis.pop();
        }
        if chis.is_empty() {
            chis.push(0);
        }
        HilbertPolynomial { chis }
    }

    /// `chi_0, ..., chi_r`.
    pub fn chis(&self) -> &[i128] {
        &self.chis
    }

    /// `chi_r, ..., chi_0`, the order used in reports.
    pub fn chis_descending(&self) -> Vec<i128> {
        self.chis.iter().rev().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.chis.iter().all(|c| *c == 0)
    }

    /// Dimension `r` (index of the top coefficient).
    pub fn dim(&self) -> usize {
        self.chis.len() - 1
    }

    /// Degree `chi_r`.
    pub fn degree(&self) -> i128 {
        *self.chis.last().expect("nonempty")
    }

    /// `chi_0`, the Euler characteristic of the structure sheaf.
    pub fn euler_characteristic(&self) -> i128 {
        self.chis[0]
    }

    pub fn eval(&self, t: i64) -> Result<i128> {
        let mut acc: i128 = 0;
        for (j, c) in self.chis.iter().enumerate() {
            let b = binomial_poly(t + j as i64 - 1, j as u32)?;
            acc = c
                .checked_mul(b)
                .and_then(|v| acc.checked_add(v))
                .ok_or(Error::Overflow("Hilbert polynomial"))?;
        }
        Ok(acc)
    }
}

/// Fit `chi_0..chi_n` to `values[k] = P(start + k)`, `k = 0..=n + 1`.
///
/// With `D` the backward difference, `D C(t + j - 1, j) = C(t + j - 2, j - 1)`
/// and the basis polynomials vanish at `t = 0` except for `j = 0`, so
/// `chi_k = (D^k P)(0)`. The differences are taken at the last sample and
/// walked back to zero with `(D^k P)(t - 1) = (D^k P)(t) - (D^(k+1) P)(t)`.
fn fit_chis(start: i64, values: &[i128]) -> Result<Vec<i128>> {
    let m = values.len();
    let last = start + m as i64 - 1;
    // diffs[k] = (D^k P)(last)
    let mut row: Vec<i128> = values.to_vec();
    let mut diffs = Vec::with_capacity(m);
    for _ in 0..m {
        diffs.push(*row.last().expect("nonempty"));
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
        if row.is_empty() {
            break;
        }
    }
    if *diffs.last().expect("nonempty") != 0 && m > 1 {
        return Err(Error::Internal(
            "Hilbert function samples do not fit a polynomial of the expected degree".into(),
        ));
    }
    let mut t = last;
    while t > 0 {
        for k in 0..diffs.len() - 1 {
            diffs[k] -= diffs[k + 1];
        }
        t -= 1;
    }
    while t < 0 {
        // not reached for nonnegative starts; kept for completeness
        for k in (0..diffs.len() - 1).rev() {
            diffs[k] += diffs[k + 1];
        }
        t += 1;
    }
    Ok(diffs)
}

/// Hilbert polynomial of `R/J`, fitted on `t = reg .. reg + n + 1` and
/// re-fitted one step later as a guard.
pub fn hilbert_polynomial(gin: &MonomialIdeal) -> Result<HilbertPolynomial> {
    let n = gin.num_vars() - 1;
    let reg = gin.max_generator_degree().unwrap_or(0) as i64;
    let sample = |start: i64| -> Result<Vec<i128>> {
        let values: Vec<i128> = (start..=start + n as i64 + 1)
            .map(|t| gin.hilbert_function(t as u32) as i128)
            .collect();
        fit_chis(start, &values)
    };
    let chis = sample(reg)?;
    if sample(reg + 1)? != chis {
        return Err(Error::Internal(
            "Hilbert polynomial fit is not stable past the regularity".into(),
        ));
    }
    let hp = HilbertPolynomial::from_chis(chis);
    for t in reg..=reg + 5 {
        if hp.eval(t)? != gin.hilbert_function(t as u32) as i128 {
            return Err(Error::Internal(format!(
                "Hilbert polynomial disagrees with the Hilbert function at {t}"
            )));
        }
    }
    Ok(hp)
}

/// Castelnuovo-Mumford regularity of a Borel-fixed ideal: its top generator
/// degree.
pub fn regularity(gin: &MonomialIdeal) -> Result<u32> {
    if !gin.is_borel_fixed() {
        return Err(Error::NotBorelFixed);
    }
    Ok(gin.max_generator_degree().unwrap_or(0))
}

/// `(depth, pd)` of `R/J` for Borel-fixed `J`; `depth + pd = n + 1`.
pub fn depth_pd(gin: &MonomialIdeal) -> Result<(usize, usize)> {
    if !gin.is_borel_fixed() {
        return Err(Error::NotBorelFixed);
    }
    let pd = gin
        .generators()
        .iter()
        .map(|g| g.max_index().map_or(0, |i| i + 1))
        .max()
        .unwrap_or(0);
    Ok((gin.num_vars() - pd, pd))
}

/// ND(1) verdict for the general section of one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Nd1Verdict {
    pub dim: usize,
    pub pass: bool,
    /// Linear forms in the section ideal (degree-one Gin generators).
    pub linear_forms: usize,
}

/// ND(1) verdicts for every section dimension `e..=n`.
pub fn nd1_check(gin: &MonomialIdeal, e: usize) -> Result<Vec<Nd1Verdict>> {
    let n = gin.num_vars() - 1;
    (e..=n)
        .map(|dim| {
            let section = generic_section_gin(gin, dim)?;
            let linear_forms = section.generators_of_degree(1).count();
            Ok(Nd1Verdict {
                dim,
                pass: linear_forms == 0,
                linear_forms,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeProfile {
    pub n: usize,
    pub dim: usize,
    pub e: usize,
    pub degree: i128,
    pub reg: u32,
    pub depth: usize,
    pub pd: usize,
    pub hilbert_polynomial: HilbertPolynomial,
    pub nd1: Vec<Nd1Verdict>,
    pub is_3regular: bool,
}

impl SchemeProfile {
    pub fn nd1_holds(&self) -> bool {
        self.nd1.iter().all(|v| v.pass)
    }

    pub fn nd1_failures(&self) -> Vec<usize> {
        self.nd1.iter().filter(|v| !v.pass).map(|v| v.dim).collect()
    }
}

/// Profile of the scheme cut out by a saturated ideal with the given Gin.
pub fn scheme_profile(gin: &MonomialIdeal) -> Result<SchemeProfile> {
    if gin.is_unit() {
        return Err(Error::EmptyScheme);
    }
    let n = gin.num_vars() - 1;
    let reg = regularity(gin)?;
    let (depth, pd) = depth_pd(gin)?;
    let hp = hilbert_polynomial(gin)?;
    if hp.is_zero() {
        return Err(Error::EmptyScheme);
    }
    let dim = hp.dim();
    if dim > n {
        return Err(Error::Internal(format!("dimension {dim} exceeds n = {n}")));
    }
    let e = n - dim;
    let nd1 = nd1_check(gin, e)?;
    Ok(SchemeProfile {
        n,
        dim,
        e,
        degree: hp.degree(),
        reg,
        depth,
        pd,
        hilbert_polynomial: hp,
        nd1,
        is_3regular: reg <= 3,
    })
}

fn require_regularity(gin: &MonomialIdeal, d: u32) -> Result<()> {
    let reg = gin.max_generator_degree().unwrap_or(0);
    if reg > d + 1 {
        return Err(Error::Regularity {
            required: d as usize + 1,
            actual: reg as usize,
        });
    }
    Ok(())
}

/// `h^1(I(d - 1)) = |M_(n-1)(d + 1, Gin)|` for `(d + 1)`-regular input.
pub fn h1_twist(gin: &MonomialIdeal, d: u32) -> Result<u64> {
    require_regularity(gin, d)?;
    let n = gin.num_vars() - 1;
    if n == 0 {
        return Ok(0);
    }
    Ok(gin.stratum(d + 1, n - 1).len() as u64)
}

/// Independent route to the same number: with `K = J|_(x_n -> 0)` in
/// `n` variables, `HF(R'/K, d) - HF(R'/K|_(x_(n-1) -> 1), d)`.
pub fn h1_oracle(gin: &MonomialIdeal, d: u32) -> Result<u64> {
    require_regularity(gin, d)?;
    if gin.num_vars() < 2 {
        return Ok(0);
    }
    let restricted = gin.restrict_last_to_zero()?;
    let saturated = restricted.saturate_last();
    let a = restricted.hilbert_function(d);
    let b = saturated.hilbert_function(d);
    a.checked_sub(b)
        .ok_or_else(|| Error::Internal("saturation enlarged the Hilbert function".into()))
}

/// `beta_(n,d)` of the Gin's Eliahou-Kervaire table, checked against
/// [`h1_twist`]; for a saturated `(d + 1)`-regular ideal this is the Betti
/// number of `R/I` itself.
pub fn marginal_betti(gin: &MonomialIdeal, d: u32) -> Result<u64> {
    let twist = h1_twist(gin, d)?;
    let n = gin.num_vars() - 1;
    let entry = gin.ek_betti()?.get(n, d as usize);
    if entry != twist {
        return Err(Error::Internal(format!(
            "marginal Betti number {entry} differs from h1 count {twist}"
        )));
    }
    Ok(entry)
}
