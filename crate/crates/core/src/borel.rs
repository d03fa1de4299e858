//! Monomial ideals, with the combinatorics of Borel-fixed ideals: degree
//! strata `M_i(d, J)`, restriction and saturation in the last variable, the
//! Eliahou-Kervaire resolution and Hilbert functions.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::ring::Monomial;

/// A monomial ideal stored by its minimal generating set `G(J)`.
///
/// Generators are kept sorted ascending in grevlex. The zero ideal has no
/// generators; the unit ideal is representable (it arises when sections of
/// zero-dimensional schemes are saturated) and is flagged by
/// [`MonomialIdeal::is_unit`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    min_gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            min_gens: Vec::new(),
        }
    }

    /// Minimalize an arbitrary generating set.
    pub fn minimalize<I>(num_vars: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        for m in &all {
            if m.num_vars() != num_vars {
                return Err(Error::RingMismatch {
                    expected: num_vars,
                    found: m.num_vars(),
                });
            }
        }
        all.sort();
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            // ascending order: any divisor of m has already been seen
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        Ok(MonomialIdeal {
            num_vars,
            min_gens: kept,
        })
    }

    /// Like [`minimalize`](Self::minimalize) but rejects the unit ideal, as
    /// required for ideals supplied by callers.
    pub fn new<I>(num_vars: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let j = Self::minimalize(num_vars, gens)?;
        if j.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(j)
    }

    /// Build from exponent vectors (tests, fixtures).
    pub fn from_exponents(num_vars: usize, gens: &[&[u32]]) -> Result<Self> {
        let ms = gens
            .iter()
            .map(|e| Monomial::from_exponents(e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(num_vars, ms)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn is_zero(&self) -> bool {
        self.min_gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.min_gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.min_gens.iter().any(|g| g.divides(m))
    }

    /// `G(J)_d`.
    pub fn generators_of_degree(&self, d: u32) -> impl Iterator<Item = &Monomial> {
        self.min_gens.iter().filter(move |g| g.degree() == d)
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.min_gens.iter().map(Monomial::degree).max()
    }

    /// True when some minimal generator has degree one.
    pub fn has_linear_generator(&self) -> bool {
        self.min_gens.iter().any(|g| g.degree() == 1)
    }

    /// True when some minimal generator involves the last variable.
    pub fn involves_last_variable(&self) -> bool {
        let last = self.num_vars - 1;
        self.min_gens.iter().any(|g| g.exponent(last) > 0)
    }

    /// Borel-fixedness (characteristic zero): for each minimal generator `u`,
    /// each `x_i | u` and each `j < i`, `(u / x_i) x_j` lies in `J`.
    pub fn is_borel_fixed(&self) -> bool {
        self.min_gens.iter().all(|u| {
            (1..self.num_vars).all(|i| match u.div_var(i) {
                None => true,
                Some(v) => (0..i).all(|j| self.contains(&v.mul_var(j))),
            })
        })
    }

    /// `J|_{x_n -> 0}`: drop generators involving the last variable and the
    /// variable itself.
    pub fn restrict_last_to_zero(&self) -> Result<Self> {
        if self.num_vars < 2 {
            return Err(Error::InvalidArgument(
                "cannot drop the only variable".into(),
            ));
        }
        let gens = self.min_gens.iter().filter_map(Monomial::drop_last);
        Self::minimalize(self.num_vars - 1, gens)
    }

    /// `J|_{x_n -> 1}`: strip every power of the last variable.
    pub fn saturate_last(&self) -> Self {
        let gens = self.min_gens.iter().map(Monomial::strip_last);
        Self::minimalize(self.num_vars, gens).expect("same ring")
    }

    /// `J : x_i`.
    pub fn colon_var(&self, i: usize) -> Self {
        let gens = self
            .min_gens
            .iter()
            .map(|g| g.div_var(i).unwrap_or_else(|| g.clone()));
        Self::minimalize(self.num_vars, gens).expect("same ring")
    }

    /// `M_i(d, J)`: minimal generators of degree `d` with `max = i`.
    pub fn stratum(&self, d: u32, i: usize) -> GeneratorStratum {
        let members = self
            .generators_of_degree(d)
            .filter(|g| g.max_index() == Some(i))
            .cloned()
            .collect();
        GeneratorStratum { d, i, members }
    }

    /// Reinterpret in a ring with fewer variables; fails if a dropped
    /// variable occurs.
    pub fn truncate_to(&self, num_vars: usize) -> Option<Self> {
        let gens = self
            .min_gens
            .iter()
            .map(|g| g.truncate_to(num_vars))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::minimalize(num_vars, gens).expect("same ring"))
    }

    /// Eliahou-Kervaire Betti table of `R/J`; requires `J` Borel fixed.
    pub fn ek_betti(&self) -> Result<BettiTable> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !self.is_borel_fixed() {
            return Err(Error::NotBorelFixed);
        }
        let mut table = BettiTable::new(self.num_vars);
        table.set(0, 0, 1);
        for g in &self.min_gens {
            let max = g.max_index().unwrap_or(0);
            let row = g.degree() as usize - 1;
            for i in 1..=max + 1 {
                let c = binomial(max as i64, i as i64 - 1)?;
                let c = u64::try_from(c).map_err(|_| Error::Overflow("Betti number"))?;
                table.add(i, row, c);
            }
        }
        Ok(table)
    }

    /// `HF(R/J, t)` by the pivot recursion.
    pub fn hilbert_function(&self, t: u32) -> u64 {
        crate::hilbert::pivot_hilbert_function(self, t)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.min_gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// `M_i(d, J)` together with its indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorStratum {
    pub d: u32,
    pub i: usize,
    pub members: BTreeSet<Monomial>,
}

impl GeneratorStratum {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Graded Betti numbers `beta_{i,d}` laid out Macaulay2-style: column `i`
/// (homological degree), row `d`, internal degree `i + d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    num_vars: usize,
    entries: BTreeMap<(usize, usize), u64>,
    /// Codimension marker: columns `>= e` in row 2 are the tailing region.
    codim_marker: Option<usize>,
}

impl BettiTable {
    pub fn new(num_vars: usize) -> Self {
        BettiTable {
            num_vars,
            entries: BTreeMap::new(),
            codim_marker: None,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn get(&self, i: usize, d: usize) -> u64 {
        self.entries.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, d: usize, v: u64) {
        if v == 0 {
            self.entries.remove(&(i, d));
        } else {
            self.entries.insert((i, d), v);
        }
    }

    fn add(&mut self, i: usize, d: usize, v: u64) {
        let cur = self.get(i, d);
        self.set(i, d, cur + v);
    }

    pub fn with_codim_marker(mut self, e: usize) -> Self {
        self.codim_marker = Some(e);
        self
    }

    pub fn codim_marker(&self) -> Option<usize> {
        self.codim_marker
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Largest row index with a nonzero entry (regularity of `R/J`).
    pub fn max_row(&self) -> usize {
        self.entries.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// Row-major dense layout: `rows()[d][i] = beta_{i,d}`.
    pub fn rows(&self) -> Vec<Vec<u64>> {
        let width = self.projective_dimension() + 1;
        (0..=self.max_row())
            .map(|d| (0..width).map(|i| self.get(i, d)).collect())
            .collect()
    }

    /// Alternating-sum Hilbert function
    /// `sum_i (-1)^i sum_d beta_{i,d} C(N - 1 + t - i - d, N - 1)`.
    pub fn hilbert_function(&self, t: u32) -> Result<i128> {
        let nv = self.num_vars as i64;
        let mut total: i128 = 0;
        for ((i, d), v) in self.entries() {
            let c = binomial(nv - 1 + t as i64 - i as i64 - d as i64, nv - 1)?;
            let term = c
                .checked_mul(v as i128)
                .ok_or(Error::Overflow("Hilbert function"))?;
            if i % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        Ok(total)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        let width = rows.first().map_or(1, Vec::len);
        let cell = rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(width.to_string().len())
            + 1;
        write!(f, "{:>4}|", "")?;
        for i in 0..width {
            write!(f, "{:>cell$}", i)?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat(5 + cell * width + 1))?;
        for (d, row) in rows.iter().enumerate() {
            write!(f, "{:>4}|", d)?;
            for (i, v) in row.iter().enumerate() {
                let tailing = d == 2 && self.codim_marker.is_some_and(|e| i >= e);
                let text = if *v == 0 {
                    ".".to_string()
                } else if tailing {
                    format!("{v}*")
                } else {
                    v.to_string()
                };
                write!(f, "{:>cell$}", text)?;
            }
            writeln!(f)?;
        }
        if let Some(e) = self.codim_marker {
            writeln!(f, "(* marks tailing entries beta_(i,2), i >= e = {e})")?;
        }
        Ok(())
    }
}

/// Borel closure: the smallest Borel-fixed ideal containing `gens`.
pub fn borel_closure(num_vars: usize, gens: &[Monomial]) -> Result<MonomialIdeal> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut stack: Vec<Monomial> = gens.to_vec();
    while let Some(m) = stack.pop() {
        if !seen.insert(m.clone()) {
            continue;
        }
        for i in 1..num_vars {
            if let Some(v) = m.div_var(i) {
                for j in 0..i {
                    let w = v.mul_var(j);
                    if !seen.contains(&w) {
                        stack.push(w);
                    }
                }
            }
        }
    }
    MonomialIdeal::minimalize(num_vars, seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    /// Gin of the rational quintic curve in P^3.
    pub(crate) fn quintic_gin() -> MonomialIdeal {
        MonomialIdeal::from_exponents(
            4,
            &[&[2, 0, 0, 0], &[1, 3, 0, 0], &[0, 4, 0, 0], &[1, 2, 1, 0], &[0, 3, 1, 0]],
        )
        .unwrap()
    }

    #[test]
    fn minimalize_example() {
        let j = MonomialIdeal::new(
            2,
            vec![m(&[3, 0]), m(&[2, 1]), m(&[1, 2]), m(&[0, 3]), m(&[2, 0])],
        )
        .unwrap();
        // ascending grevlex: x1^3 < x0*x1^2
        assert_eq!(j.generators(), &[m(&[2, 0]), m(&[0, 3]), m(&[1, 2])]);
        let single = MonomialIdeal::new(1, vec![m(&[1])]).unwrap();
        assert_eq!(single.generators().len(), 1);
    }

    #[test]
    fn borel_examples() {
        assert!(quintic_gin().is_borel_fixed());
        assert!(!MonomialIdeal::from_exponents(2, &[&[0, 1]]).unwrap().is_borel_fixed());
        let two_planes = MonomialIdeal::from_exponents(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        )
        .unwrap();
        assert!(!two_planes.is_borel_fixed());
    }

    #[test]
    fn restriction_examples() {
        let q = quintic_gin();
        let r = q.restrict_last_to_zero().unwrap();
        assert_eq!(r.num_vars(), 3);
        assert_eq!(r.generators().len(), 5);
        let j = MonomialIdeal::from_exponents(3, &[&[1, 1, 0], &[0, 1, 1]]).unwrap();
        assert_eq!(
            j.restrict_last_to_zero().unwrap(),
            MonomialIdeal::from_exponents(2, &[&[1, 1]]).unwrap()
        );
    }

    #[test]
    fn saturation_example() {
        let j = MonomialIdeal::from_exponents(
            3,
            &[&[3, 0, 0], &[2, 1, 0], &[1, 2, 0], &[0, 3, 0], &[2, 0, 1]],
        )
        .unwrap();
        let expected =
            MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 2, 0], &[0, 3, 0]]).unwrap();
        let sat = j.saturate_last();
        assert_eq!(sat, expected);
        assert_eq!(sat.saturate_last(), sat);
        assert_eq!(expected.saturate_last(), expected);
    }

    #[test]
    fn quintic_stratum() {
        let s = quintic_gin().stratum(4, 2);
        assert_eq!(s.len(), 2);
        assert!(s.members.contains(&m(&[0, 3, 1, 0])));
        assert!(s.members.contains(&m(&[1, 2, 1, 0])));
        assert!(quintic_gin().stratum(5, 1).is_empty());
    }

    #[test]
    fn quintic_ek_table() {
        let t = quintic_gin().ek_betti().unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 1), 1);
        assert_eq!(t.get(1, 3), 4);
        assert_eq!(t.get(2, 3), 6);
        assert_eq!(t.get(3, 3), 2);
        assert_eq!(t.projective_dimension(), 3);
        assert_eq!(t.max_row(), 3);
    }

    #[test]
    fn single_variable_table() {
        let t = MonomialIdeal::from_exponents(3, &[&[1, 0, 0]]).unwrap().ek_betti().unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1), ((1, 0), 1)]);
    }

    #[test]
    fn ci222_gin_table() {
        let j = MonomialIdeal::from_exponents(
            5,
            &[
                &[2, 0, 0, 0, 0],
                &[1, 1, 0, 0, 0],
                &[0, 2, 0, 0, 0],
                &[1, 0, 2, 0, 0],
                &[0, 1, 2, 0, 0],
                &[0, 0, 4, 0, 0],
            ],
        )
        .unwrap();
        let t = j.ek_betti().unwrap();
        assert_eq!(t.rows()[1][1..4], [3, 2, 0]);
        assert_eq!(t.rows()[2][1..4], [2, 4, 2]);
        assert_eq!(t.rows()[3][1..4], [1, 2, 1]);
    }

    #[test]
    fn non_borel_rejected_by_ek() {
        let j = MonomialIdeal::from_exponents(2, &[&[0, 1]]).unwrap();
        assert_eq!(j.ek_betti(), Err(Error::NotBorelFixed));
    }

    #[test]
    fn unit_ideal_rejected_at_construction() {
        assert_eq!(
            MonomialIdeal::from_exponents(2, &[&[0, 0]]),
            Err(Error::UnitIdeal)
        );
        let sat = MonomialIdeal::from_exponents(2, &[&[0, 2]]).unwrap().saturate_last();
        assert!(sat.is_unit());
    }

    #[test]
    fn borel_closure_of_x1_squared() {
        let j = borel_closure(3, &[m(&[0, 2, 0])]).unwrap();
        assert_eq!(j.generators(), &[m(&[0, 2, 0]), m(&[1, 1, 0]), m(&[2, 0, 0])]);
        assert!(j.is_borel_fixed());
    }
}
