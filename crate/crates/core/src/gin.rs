//! Generic initial ideals in grevlex, certified by agreement of independent
//! random coordinate changes.

use rand::Rng;
use rayon::prelude::*;

use crate::borel::MonomialIdeal;
use crate::error::{Error, Result};
use crate::field::{Field, FieldMode};
use crate::groebner::buchberger;
use crate::ring::{Matrix, PolyIdeal};
use crate::seeds::{rng, sub_seed};

pub const DEFAULT_ENTRY_BOUND: i64 = 1000;
pub const DEFAULT_TRIALS: usize = 2;
pub const DEFAULT_SEED: u64 = 42;
const MAX_DRAWS: usize = 100;

pub const PROBABILISTIC_WARNING: &str =
    "genericity certified probabilistically by agreement of independent random trials";

/// Random integer matrix with entries in `[-bound, bound]`, redrawn until
/// invertible. Deterministic in `seed`.
pub fn random_generic_change<K: Field>(
    num_vars: usize,
    seed: u64,
    bound: i64,
    mode: FieldMode,
) -> Result<Matrix<K>> {
    if bound < 1 {
        return Err(Error::InvalidArgument(format!("entry bound {bound} must be positive")));
    }
    let mut gen = rng(seed);
    for _ in 0..MAX_DRAWS {
        let rows: Vec<Vec<i64>> = (0..num_vars)
            .map(|_| (0..num_vars).map(|_| gen.gen_range(-bound..=bound)).collect())
            .collect();
        let m = Matrix::from_integers(&rows, mode)?;
        if m.is_invertible() {
            return Ok(m);
        }
    }
    Err(Error::Internal(format!(
        "no invertible matrix after {MAX_DRAWS} draws (seed {seed})"
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GinOptions {
    pub seed: u64,
    pub trials: usize,
    pub bound: i64,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            bound: DEFAULT_ENTRY_BOUND,
        }
    }
}

/// How the Gin was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GinProvenance {
    /// Independent random trials agreed.
    RandomTrials,
    /// The input was a Borel-fixed monomial ideal, which is its own Gin.
    BorelFixedInput,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinCertificate {
    pub gin: MonomialIdeal,
    pub trial_seeds: Vec<u64>,
    /// Number of trials whose initial ideals coincided (all of them).
    pub agreements: usize,
    pub borel_verified: bool,
    pub field_mode: FieldMode,
    pub provenance: GinProvenance,
    pub warnings: Vec<String>,
}

impl GinCertificate {
    /// Certificate for a monomial ideal already known to be Borel fixed.
    pub fn from_borel_fixed(gin: MonomialIdeal, field_mode: FieldMode) -> Result<Self> {
        if !gin.is_borel_fixed() {
            return Err(Error::NotBorelFixed);
        }
        let mut warnings = Vec::new();
        if gin.involves_last_variable() {
            warnings.push(saturation_warning());
        }
        Ok(GinCertificate {
            gin,
            trial_seeds: Vec::new(),
            agreements: 0,
            borel_verified: true,
            field_mode,
            provenance: GinProvenance::BorelFixedInput,
            warnings,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.gin.num_vars()
    }

    /// `n` for `P^n`.
    pub fn n(&self) -> usize {
        self.gin.num_vars() - 1
    }

    pub fn section(&self, dim: usize) -> Result<MonomialIdeal> {
        generic_section_gin(&self.gin, dim)
    }
}

fn saturation_warning() -> String {
    "saturation defect: a minimal Gin generator involves the last variable, \
     so the input is not saturated"
        .to_string()
}

/// Gin of a homogeneous ideal.
///
/// Each trial applies its own random coordinate change (sub-seeded from
/// `options.seed` by trial index), computes a reduced basis and takes the
/// initial ideal. All trials must agree and the result must be Borel fixed;
/// its Hilbert function is checked against the initial ideal in the original
/// coordinates up to `reg + 2`. The input is not saturated automatically: a
/// generator involving the last variable produces a warning.
pub fn compute_gin<K: Field>(ideal: &PolyIdeal<K>, options: GinOptions) -> Result<GinCertificate> {
    if options.trials < 2 {
        return Err(Error::InvalidArgument(format!(
            "at least 2 trials are required, got {}",
            options.trials
        )));
    }
    let ring = ideal.ring();
    let mode = ring.field();

    if let Some(monomial) = as_monomial_ideal(ideal)? {
        if monomial.is_borel_fixed() {
            return GinCertificate::from_borel_fixed(monomial, mode);
        }
    }

    let seeds: Vec<u64> = (0..options.trials as u64)
        .map(|k| sub_seed(options.seed, k))
        .collect();
    let results = seeds
        .par_iter()
        .map(|&s| {
            let change = random_generic_change::<K>(ring.num_vars(), s, options.bound, mode)?;
            Ok(buchberger(&ideal.apply_linear_change(&change)?).initial_ideal())
        })
        .collect::<Result<Vec<MonomialIdeal>>>()?;

    let gin = results[0].clone();
    if results.iter().any(|r| *r != gin) {
        return Err(Error::Genericity {
            reason: "trials produced different initial ideals".into(),
            seeds,
        });
    }
    if !gin.is_borel_fixed() {
        return Err(Error::Genericity {
            reason: "agreed initial ideal is not Borel fixed".into(),
            seeds,
        });
    }

    let original = buchberger(ideal).initial_ideal();
    let reg = gin.max_generator_degree().unwrap_or(0);
    for t in 0..=reg + 2 {
        let (a, b) = (gin.hilbert_function(t), original.hilbert_function(t));
        if a != b {
            return Err(Error::Internal(format!(
                "Hilbert function mismatch at degree {t}: Gin {a}, input {b}"
            )));
        }
    }

    let mut warnings = vec![PROBABILISTIC_WARNING.to_string()];
    if !mode.is_certified() {
        warnings.push(format!(
            "computed over {mode}; results are advisory (the theory assumes characteristic 0)"
        ));
    }
    if gin.involves_last_variable() {
        warnings.push(saturation_warning());
    }
    Ok(GinCertificate {
        gin,
        agreements: seeds.len(),
        trial_seeds: seeds,
        borel_verified: true,
        field_mode: mode,
        provenance: GinProvenance::RandomTrials,
        warnings,
    })
}

/// The generators as a monomial ideal, when every generator is a monomial.
fn as_monomial_ideal<K: Field>(ideal: &PolyIdeal<K>) -> Result<Option<MonomialIdeal>> {
    if ideal.generators().iter().any(|g| g.len() != 1) {
        return Ok(None);
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero").clone());
    MonomialIdeal::new(ideal.ring().num_vars(), gens).map(Some)
}

/// Gin of a general linear section of dimension `dim`: set
/// `x_(dim+1), ..., x_n` to zero, then saturate in `x_dim`. For `dim = n`
/// the ideal is returned unchanged.
pub fn generic_section_gin(gin: &MonomialIdeal, dim: usize) -> Result<MonomialIdeal> {
    let n = gin.num_vars() - 1;
    if dim > n {
        return Err(Error::InvalidArgument(format!(
            "section dimension {dim} exceeds ambient dimension {n}"
        )));
    }
    if dim == n {
        return Ok(gin.clone());
    }
    let mut section = gin.clone();
    while section.num_vars() > dim + 1 {
        section = section.restrict_last_to_zero()?;
    }
    Ok(section.saturate_last())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Polynomial, RingCtx};
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    fn x(i: usize, n: usize) -> P {
        P::var(i, n, FieldMode::Rationals).unwrap()
    }

    #[test]
    fn random_change_is_deterministic_and_invertible() {
        let a = random_generic_change::<BigRational>(4, 9, 1000, FieldMode::Rationals).unwrap();
        let b = random_generic_change::<BigRational>(4, 9, 1000, FieldMode::Rationals).unwrap();
        assert_eq!(a, b);
        assert!(a.is_invertible());
        let c = random_generic_change::<BigRational>(4, 10, 1000, FieldMode::Rationals).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn twisted_cubic_gin() {
        let n = 4;
        let q1 = x(0, n).mul(&x(2, n)).sub(&x(1, n).pow(2));
        let q2 = x(0, n).mul(&x(3, n)).sub(&x(1, n).mul(&x(2, n)));
        let q3 = x(1, n).mul(&x(3, n)).sub(&x(2, n).pow(2));
        let ring = RingCtx::new(n, FieldMode::Rationals).unwrap();
        let ideal = PolyIdeal::new(ring, vec![q1, q2, q3]).unwrap();
        let cert = compute_gin(&ideal, GinOptions::default()).unwrap();
        let expected =
            MonomialIdeal::from_exponents(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[0, 2, 0, 0]])
                .unwrap();
        assert_eq!(cert.gin, expected);
        assert_eq!(cert.agreements, 2);
        assert!(cert.borel_verified);
        assert_eq!(cert.provenance, GinProvenance::RandomTrials);
    }

    #[test]
    fn borel_fixed_monomial_input_is_its_own_gin() {
        let n = 4;
        let gens = vec![
            x(0, n).pow(3),
            x(0, n).pow(2).mul(&x(1, n)),
            x(0, n).mul(&x(1, n).pow(2)),
            x(1, n).pow(3),
            x(0, n).pow(2).mul(&x(2, n)),
        ];
        let ring = RingCtx::new(n, FieldMode::Rationals).unwrap();
        let cert = compute_gin(&PolyIdeal::new(ring, gens).unwrap(), GinOptions::default()).unwrap();
        assert_eq!(cert.provenance, GinProvenance::BorelFixedInput);
        assert_eq!(cert.gin.generators().len(), 5);
    }

    #[test]
    fn one_trial_is_rejected() {
        let ring = RingCtx::new(2, FieldMode::Rationals).unwrap();
        let ideal = PolyIdeal::new(ring, vec![x(0, 2).mul(&x(1, 2))]).unwrap();
        let opts = GinOptions {
            trials: 1,
            ..GinOptions::default()
        };
        assert!(matches!(compute_gin(&ideal, opts), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn section_of_example_monomial_ideal() {
        let j = MonomialIdeal::from_exponents(
            4,
            &[&[3, 0, 0, 0], &[2, 1, 0, 0], &[1, 2, 0, 0], &[0, 3, 0, 0], &[2, 0, 1, 0]],
        )
        .unwrap();
        let expected =
            MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 2, 0], &[0, 3, 0]]).unwrap();
        assert_eq!(generic_section_gin(&j, 2).unwrap(), expected);
        assert_eq!(generic_section_gin(&j, 3).unwrap(), j);
        assert!(generic_section_gin(&j, 4).is_err());
    }
}
