//! Independent oracles shared by the integration tests. Nothing here goes
//! through Gröbner bases, Eliahou-Kervaire sums or generator strata unless
//! stated.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ginbetti::borel::{borel_closure, MonomialIdeal};
use ginbetti::field::{Field, FieldMode};
use ginbetti::groebner::{buchberger, saturate_by_general_linear_form};
use ginbetti::hilbert::{dense_hilbert_function, for_each_monomial};
use ginbetti::ring::{Monomial, PolyIdeal, Polynomial, RingCtx};

pub type Q = BigRational;
pub const QM: FieldMode = FieldMode::Rationals;

pub fn monomials(nv: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for_each_monomial(nv, d, &mut |m| out.push(m.clone()));
    out
}

const ORACLE_PRIME: u128 = (1 << 61) - 1;

fn pow_mod(mut b: u128, mut e: u128) -> u128 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % ORACLE_PRIME;
        }
        b = b * b % ORACLE_PRIME;
        e >>= 1;
    }
    acc
}

fn reduce(q: &Q) -> u128 {
    let p = BigInt::from(ORACLE_PRIME as u64);
    let residue = |n: &BigInt| ((n % &p + &p) % &p).to_u64().unwrap() as u128;
    let den = residue(q.denom());
    assert!(den != 0, "denominator vanishes modulo the oracle prime");
    residue(q.numer()) * pow_mod(den, ORACLE_PRIME - 2) % ORACLE_PRIME
}

/// Rank of rational rows computed modulo `2^61 - 1`. This equals the rank
/// over Q unless the prime divides every maximal nonzero minor, which does
/// not happen for the small-coefficient inputs used here.
fn rank(rows: Vec<BTreeMap<usize, Q>>, cols: usize) -> usize {
    let mut m: Vec<Vec<u128>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![0u128; cols];
            for (k, v) in r {
                dense[*k] = reduce(v);
            }
            dense
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][col], ORACLE_PRIME - 2);
        for v in &mut m[rank][col..] {
            *v = *v * inv % ORACLE_PRIME;
        }
        let (done, rest) = m.split_at_mut(rank + 1);
        let prow = &done[rank];
        for row in rest {
            let c = row[col];
            if c == 0 {
                continue;
            }
            for (v, pv) in row[col..].iter_mut().zip(&prow[col..]) {
                *v = (*v + ORACLE_PRIME - c * pv % ORACLE_PRIME) % ORACLE_PRIME;
            }
        }
        rank += 1;
    }
    rank
}

/// `HF(R/I, t)` as `dim R_t - rank I_t`, with `I_t` spanned by all
/// monomial multiples of the generators.
pub fn rank_hilbert_function(ideal: &PolyIdeal<Q>, t: u32) -> u64 {
    let nv = ideal.ring().num_vars();
    let basis = monomials(nv, t);
    let index: BTreeMap<Monomial, usize> =
        basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let dg = g.degree().expect("nonzero");
        if dg > t {
            continue;
        }
        for m in monomials(nv, t - dg) {
            let row: BTreeMap<usize, Q> = g
                .terms()
                .iter()
                .map(|(gm, c)| (index[&gm.mul(&m)], c.clone()))
                .collect();
            rows.push(row);
        }
    }
    (basis.len() - rank(rows, basis.len())) as u64
}

/// Value at `target` of the polynomial interpolating `values` at
/// `start, start + 1, ...` (Newton forward differences).
pub fn extrapolate(start: i64, values: &[i128], target: i64) -> i128 {
    let mut diffs = vec![values.to_vec()];
    while diffs.last().unwrap().len() > 1 {
        let prev = diffs.last().unwrap();
        diffs.push(prev.windows(2).map(|w| w[1] - w[0]).collect());
    }
    let s = target - start;
    let mut total = 0i128;
    let mut coeff = 1i128; // C(s, k) built up incrementally
    for (k, row) in diffs.iter().enumerate() {
        total += coeff * row[0];
        coeff = coeff * (s as i128 - k as i128) / (k as i128 + 1);
    }
    total
}

/// `HF(R/J, t)` of a monomial ideal by brute-force enumeration.
pub fn monomial_hf(j: &MonomialIdeal, t: u32) -> u64 {
    dense_hilbert_function(j, t)
}

/// `P(1)` of `R/J` for a monomial ideal, by interpolation far past any
/// generator degree.
pub fn hilbert_polynomial_at(j: &MonomialIdeal, at: i64) -> i128 {
    let nv = j.num_vars();
    let start = j.max_generator_degree().unwrap_or(0) as i64 + 8;
    let values: Vec<i128> = (start..start + nv as i64 + 1)
        .map(|t| monomial_hf(j, t as u32) as i128)
        .collect();
    extrapolate(start, &values, at)
}

fn random_linear_images(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Vec<Q>> {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| Q::from_integer(rng.gen_range(-50i64..=50).into()))
                .collect()
        })
        .collect()
}

/// `h^1(I_(X ∩ Λ)(1))` for a random linear space `Λ` of dimension `a`,
/// computed as `P(1) - HF(1)` of the saturated restriction. Valid for
/// 3-regular saturated input, where `h^i(O(1)) = 0` for `i > 0` on every
/// general section.
pub fn section_h1(ideal: &PolyIdeal<Q>, a: usize, seed: u64) -> i128 {
    let n = ideal.ring().num_vars() - 1;
    let mut rng = ginbetti::seeds::rng(seed);
    let restricted = if a == n {
        ideal.clone()
    } else {
        let images = random_linear_images(&mut rng, n + 1, a + 1);
        let gens: Vec<Polynomial<Q>> = ideal
            .generators()
            .iter()
            .map(|g| g.substitute_linear(&images, a + 1))
            .filter(|g| !g.is_zero())
            .collect();
        let ring = RingCtx::new(a + 1, QM).unwrap();
        let cut = PolyIdeal::new(ring, gens).unwrap();
        saturate_by_general_linear_form(&cut, seed ^ 0x5eed).unwrap()
    };
    let init = buchberger(&restricted).initial_ideal();
    hilbert_polynomial_at(&init, 1) - monomial_hf(&init, 1) as i128
}

/// Borel closure of `count` random monomials with degrees in `degrees`
/// in the first `avail` of `nv` variables.
pub fn random_borel(
    rng: &mut ChaCha8Rng,
    nv: usize,
    avail: usize,
    degrees: std::ops::RangeInclusive<u32>,
    count: usize,
) -> MonomialIdeal {
    let gens: Vec<Monomial> = (0..count)
        .map(|_| {
            let d = rng.gen_range(degrees.clone());
            let mut exps = vec![0u32; nv];
            for _ in 0..d {
                exps[rng.gen_range(0..avail)] += 1;
            }
            Monomial::new(&exps)
        })
        .collect();
    borel_closure(nv, &gens).unwrap()
}

/// A random homogeneous ideal with small integer coefficients.
pub fn random_ideal(rng: &mut ChaCha8Rng, nv: usize, degrees: &[u32], terms: usize) -> PolyIdeal<Q> {
    let gens = degrees
        .iter()
        .map(|&d| {
            let basis = monomials(nv, d);
            loop {
                let picked: Vec<(Monomial, Q)> = (0..terms)
                    .map(|_| {
                        let m = basis[rng.gen_range(0..basis.len())].clone();
                        (m, Q::from_integer(rng.gen_range(-5i64..=5).into()))
                    })
                    .collect();
                let p = Polynomial::from_terms(nv, picked);
                if !p.is_zero() {
                    break p;
                }
            }
        })
        .collect();
    PolyIdeal::new(RingCtx::new(nv, QM).unwrap(), gens).unwrap()
}

/// The monomial ideal as a polynomial ideal.
pub fn as_poly_ideal<K: Field>(j: &MonomialIdeal, mode: FieldMode) -> PolyIdeal<K> {
    let one = K::from_i64(1, mode).unwrap();
    let gens = j
        .generators()
        .iter()
        .map(|m| Polynomial::monomial(m.clone(), one.clone()))
        .collect();
    PolyIdeal::new(RingCtx::new(j.num_vars(), mode).unwrap(), gens).unwrap()
}
