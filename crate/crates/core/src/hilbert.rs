//! Hilbert functions of `R/J` for monomial ideals `J`.
//!
//! Three interchangeable engines are registered by name:
//! `pivot` (splitting recursion, the default), `dense` (enumerate all
//! monomials of the degree) and `ek` (alternating sum over the
//! Eliahou-Kervaire table, Borel-fixed input only).

use std::collections::HashMap;

use crate::binomial::binomial;
use crate::borel::MonomialIdeal;
use crate::error::{Error, Result};
use crate::ring::Monomial;

pub trait HilbertEngine: Send + Sync {
    fn name(&self) -> &'static str;
    fn hilbert_function(&self, ideal: &MonomialIdeal, t: u32) -> Result<u64>;
}

pub struct PivotEngine;
pub struct DenseEngine;
pub struct EkEngine;

impl HilbertEngine for PivotEngine {
    fn name(&self) -> &'static str {
        "pivot"
    }

    fn hilbert_function(&self, ideal: &MonomialIdeal, t: u32) -> Result<u64> {
        Ok(pivot_hilbert_function(ideal, t))
    }
}

impl HilbertEngine for DenseEngine {
    fn name(&self) -> &'static str {
        "dense"
    }

    fn hilbert_function(&self, ideal: &MonomialIdeal, t: u32) -> Result<u64> {
        Ok(dense_hilbert_function(ideal, t))
    }
}

impl HilbertEngine for EkEngine {
    fn name(&self) -> &'static str {
        "ek"
    }

    fn hilbert_function(&self, ideal: &MonomialIdeal, t: u32) -> Result<u64> {
        let v = ideal.ek_betti()?.hilbert_function(t)?;
        u64::try_from(v).map_err(|_| Error::Internal(format!("negative Hilbert value {v}")))
    }
}

/// All registered engines, default first.
pub fn engines() -> Vec<Box<dyn HilbertEngine>> {
    vec![Box::new(PivotEngine), Box::new(DenseEngine), Box::new(EkEngine)]
}

pub fn engine(name: &str) -> Result<Box<dyn HilbertEngine>> {
    engines()
        .into_iter()
        .find(|e| e.name() == name)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown Hilbert engine {name:?}")))
}

/// Number of monomials of degree `t` in `nv` variables.
fn monomial_count(nv: usize, t: u32) -> u64 {
    if nv == 0 {
        return u64::from(t == 0);
    }
    binomial(nv as i64 - 1 + t as i64, t as i64)
        .ok()
        .and_then(|v| u64::try_from(v).ok())
        .expect("monomial count fits in u64")
}

/// `HF(R/J, t)` via `HF(J, t) = HF(J + (x), t) + HF(J : x, t - 1)` with
/// memoization on the generator set.
pub fn pivot_hilbert_function(ideal: &MonomialIdeal, t: u32) -> u64 {
    let mut memo = HashMap::new();
    pivot(ideal.num_vars(), ideal.generators().to_vec(), t, &mut memo)
}

fn pivot(
    nv: usize,
    gens: Vec<Monomial>,
    t: u32,
    memo: &mut HashMap<(Vec<Monomial>, u32), u64>,
) -> u64 {
    if gens.iter().any(|g| g.degree() == 0) {
        return 0;
    }
    if gens.is_empty() {
        return monomial_count(nv, t);
    }
    if gens.iter().all(|g| g.degree() == 1) {
        return monomial_count(nv - gens.len(), t);
    }
    let key = (gens, t);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (gens, _) = &key;
    // pivot on a variable of a nonlinear generator; prefer the most used one
    let mut usage = vec![0usize; nv];
    for g in gens.iter().filter(|g| g.degree() > 1) {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                usage[i] += 1;
            }
        }
    }
    let x = (0..nv).max_by_key(|&i| (usage[i], std::cmp::Reverse(i))).expect("nv > 0");
    let var = Monomial::var(x, nv);

    let plus = minimal(gens.iter().cloned().chain(std::iter::once(var)));
    let colon = minimal(
        gens.iter()
            .map(|g| g.div_var(x).unwrap_or_else(|| g.clone())),
    );
    let mut v = pivot(nv, plus, t, memo);
    if t > 0 {
        v += pivot(nv, colon, t - 1, memo);
    }
    memo.insert(key.clone(), v);
    v
}

fn minimal<I: Iterator<Item = Monomial>>(gens: I) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens.collect();
    all.sort();
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for m in all {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

/// `HF(R/J, t)` by listing every monomial of degree `t`.
pub fn dense_hilbert_function(ideal: &MonomialIdeal, t: u32) -> u64 {
    let mut count = 0;
    for_each_monomial(ideal.num_vars(), t, &mut |m| {
        if !ideal.contains(m) {
            count += 1;
        }
    });
    count
}

/// Visit every monomial of degree `d` in `nv` variables.
pub fn for_each_monomial<F: FnMut(&Monomial)>(nv: usize, d: u32, f: &mut F) {
    let mut exps = vec![0u32; nv];
    fill(&mut exps, 0, d, f);
}

fn fill<F: FnMut(&Monomial)>(exps: &mut [u32], pos: usize, left: u32, f: &mut F) {
    if pos + 1 == exps.len() {
        exps[pos] = left;
        f(&Monomial::new(exps));
        exps[pos] = 0;
        return;
    }
    if exps.is_empty() {
        return;
    }
    for e in (0..=left).rev() {
        exps[pos] = e;
        fill(exps, pos + 1, left - e, f);
    }
    exps[pos] = 0;
}
