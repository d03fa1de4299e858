//! Exact multivariate polynomial arithmetic in `k[x0, ..., xn]` with the
//! degree reverse lexicographic order (`x0 > x1 > ... > xn`).
//!
//! Polynomials are kept in canonical form: terms sorted strictly descending in
//! grevlex, no zero coefficients. The leading term is therefore `terms[0]`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{Field, FieldMode};

/// The ambient ring: `num_vars` variables `x0..x(num_vars-1)` over a field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingCtx {
    num_vars: usize,
    field: FieldMode,
}

impl RingCtx {
    pub fn new(num_vars: usize, field: FieldMode) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        if let FieldMode::PrimeField(p) = field {
            FieldMode::prime(p)?;
        }
        Ok(RingCtx { num_vars, field })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Projective dimension `n` of the ambient space (`num_vars - 1`).
    pub fn n(&self) -> usize {
        self.num_vars - 1
    }

    pub fn field(&self) -> FieldMode {
        self.field
    }
}

type Exps = SmallVec<[u32; 12]>;

/// A monomial `x^K`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, num_vars),
            degree: 0,
        }
    }

    pub fn var(index: usize, num_vars: usize) -> Self {
        let mut m = Self::one(num_vars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        let mut degree: u32 = 0;
        for &e in exps {
            if e > i32::MAX as u32 {
                return Err(Error::ExponentOverflow);
            }
            degree = degree.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        if degree > i32::MAX as u32 {
            return Err(Error::ExponentOverflow);
        }
        Ok(Monomial {
            exps: SmallVec::from_slice(exps),
            degree,
        })
    }

    /// Shorthand for tests and fixtures; panics on overflow.
    pub fn new(exps: &[u32]) -> Self {
        Self::from_exponents(exps).expect("exponent overflow")
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// `max(x^K)`: the largest index with a positive exponent.
    pub fn max_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.num_vars() != other.num_vars() {
            return Err(Error::RingMismatch {
                expected: self.num_vars(),
                found: other.num_vars(),
            });
        }
        let mut exps = Exps::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            let s = a.checked_add(*b).ok_or(Error::ExponentOverflow)?;
            exps.push(s);
        }
        Monomial::from_exponents(&exps)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m.degree += 1;
        m
    }

    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        m.degree -= 1;
        Some(m)
    }

    /// Drop the last variable, which must not occur.
    pub fn drop_last(&self) -> Option<Monomial> {
        let last = *self.exps.last()?;
        if last != 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps.pop();
        Some(Monomial {
            exps,
            degree: self.degree,
        })
    }

    /// Set the last variable to 1 (strip its factor) without changing the ring.
    pub fn strip_last(&self) -> Monomial {
        let mut m = self.clone();
        if let Some(last) = m.exps.last_mut() {
            m.degree -= *last;
            *last = 0;
        }
        m
    }

    /// Embed into a ring with more variables (new exponents are zero).
    pub fn extend_to(&self, num_vars: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(num_vars, 0);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Restrict to the first `num_vars` variables when the rest do not occur.
    pub fn truncate_to(&self, num_vars: usize) -> Option<Monomial> {
        if self.exps[num_vars..].iter().any(|&e| e > 0) {
            return None;
        }
        let mut exps = self.exps.clone();
        exps.truncate(num_vars);
        Some(Monomial {
            exps,
            degree: self.degree,
        })
    }
}

/// Grevlex comparison with an explicit ring check.
pub fn compare_grevlex(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.num_vars() != b.num_vars() {
        return Err(Error::RingMismatch {
            expected: a.num_vars(),
            found: b.num_vars(),
        });
    }
    Ok(a.cmp(b))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            if a != b {
                // smaller exponent in the last differing variable wins
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse polynomial in canonical grevlex-descending form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<K: Field> {
    num_vars: usize,
    terms: Vec<(Monomial, K)>,
}

impl<K: Field> Polynomial<K> {
    pub fn zero(num_vars: usize) -> Self {
        Polynomial {
            num_vars,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: K, num_vars: usize) -> Self {
        Self::from_terms(num_vars, vec![(Monomial::one(num_vars), c)])
    }

    pub fn monomial(m: Monomial, c: K) -> Self {
        let n = m.num_vars();
        Self::from_terms(n, vec![(m, c)])
    }

    pub fn var(index: usize, num_vars: usize, mode: FieldMode) -> Result<Self> {
        if index >= num_vars {
            return Err(Error::InvalidArgument(format!(
                "variable x{index} outside ring with {num_vars} variables"
            )));
        }
        Ok(Self::monomial(Monomial::var(index, num_vars), K::from_i64(1, mode)?))
    }

    /// Build from arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(num_vars: usize, terms: Vec<(Monomial, K)>) -> Self {
        let mut acc: HashMap<Monomial, K> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.num_vars(), num_vars);
            match acc.get_mut(&m) {
                Some(existing) => *existing = existing.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { num_vars, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &[(Monomial, K)] {
        &self.terms
    }

    /// Wrap terms that are already strictly descending with nonzero
    /// coefficients.
    pub(crate) fn from_sorted_terms(num_vars: usize, terms: Vec<(Monomial, K)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial { num_vars, terms }
    }

    /// Everything but the leading term.
    pub(crate) fn tail(&self) -> Self {
        Polynomial {
            num_vars: self.num_vars,
            terms: self.terms.get(1..).unwrap_or(&[]).to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, K)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&K> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree of the leading term (the degree when homogeneous).
    pub fn degree(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::RingMismatch {
                expected: self.num_vars,
                found: other.num_vars,
            });
        }
        Ok(())
    }

    /// Merge two sorted term lists, `self + scale * other`.
    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { t.1.neg() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            num_vars: self.num_vars,
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("ring mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("ring mismatch")
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        Polynomial {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    /// `c * m * self`; multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        Polynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.mul(c)))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.checked_mul(m2)?, c1.mul(c2)));
            }
        }
        Ok(Self::from_terms(self.num_vars, terms))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("ring mismatch or exponent overflow")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = match self.terms.first() {
            Some((_, c)) => Self::constant(c.one_like(), self.num_vars),
            None => return self.clone(),
        };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide every coefficient by the leading one.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Strip common content (primitive integer form over Q; no-op over F_p).
    pub fn primitive(&self) -> Self {
        match K::content(self.terms.iter().map(|t| &t.1)) {
            Some(c) => self.scale(&c.inv().expect("nonzero content")),
            None => self.clone(),
        }
    }

    /// Largest `k` with `x_i^k` dividing every term.
    pub fn var_power_dividing(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(i)).min().unwrap_or(0)
    }

    /// Divide by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((t.div(m)?, c.clone()));
        }
        // division by a common monomial preserves grevlex order
        Some(Polynomial {
            num_vars: self.num_vars,
            terms,
        })
    }

    /// Substitute `x_i -> sum_j matrix[i][j] x_j`.
    pub fn apply_linear_change(&self, matrix: &Matrix<K>) -> Result<Self> {
        if matrix.size() != self.num_vars {
            return Err(Error::RingMismatch {
                expected: self.num_vars,
                found: matrix.size(),
            });
        }
        if !matrix.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.substitute_linear(matrix.rows(), self.num_vars))
    }

    /// Substitute `x_i -> images[i]` where each image is a linear form in a
    /// ring with `target_vars` variables (given as a coefficient row).
    pub fn substitute_linear(&self, images: &[Vec<K>], target_vars: usize) -> Self {
        let n = self.num_vars;
        let forms: Vec<Polynomial<K>> = images
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .map(|(j, c)| (Monomial::var(j, target_vars), c.clone()))
                    .collect();
                Polynomial::from_terms(target_vars, terms)
            })
            .collect();
        let max_exp: Vec<u32> = (0..n)
            .map(|i| self.terms.iter().map(|(m, _)| m.exponent(i)).max().unwrap_or(0))
            .collect();
        let one = match self.terms.first() {
            Some((_, c)) => c.one_like(),
            None => return Polynomial::zero(target_vars),
        };
        let powers: Vec<Vec<Polynomial<K>>> = forms
            .iter()
            .zip(&max_exp)
            .map(|(form, &top)| {
                let mut ps = vec![Polynomial::constant(one.clone(), target_vars)];
                for k in 1..=top as usize {
                    let next = ps[k - 1].mul(form);
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut acc: HashMap<Monomial, K> = HashMap::new();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(c.clone(), target_vars);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&powers[i][e as usize]);
                }
            }
            for (t, a) in prod.terms {
                match acc.get_mut(&t) {
                    Some(x) => *x = x.add(&a),
                    None => {
                        acc.insert(t, a);
                    }
                }
            }
        }
        Polynomial::from_terms(target_vars, acc.into_iter().collect())
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> Option<&K> {
        self.terms
            .binary_search_by(|t| m.cmp(&t.0))
            .ok()
            .map(|i| &self.terms[i].1)
    }
}

impl<K: Field> Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut s = c.to_exact_string();
            let negative = s.starts_with('-');
            if negative {
                s.remove(0);
            }
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{s}")?;
            } else if s == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{s}*{m}")?;
            }
        }
        Ok(())
    }
}

/// A square matrix over a field, used for coordinate changes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<K: Field> {
    rows: Vec<Vec<K>>,
}

impl<K: Field> Matrix<K> {
    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix must be square and nonempty".into()));
        }
        Ok(Matrix { rows })
    }

    pub fn from_integers(rows: &[Vec<i64>], mode: FieldMode) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| K::from_i64(v, mode)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn identity(n: usize, mode: FieldMode) -> Result<Self> {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| K::from_i64((i == j) as i64, mode)).collect())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<K>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.rows[i][j]
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.size();
        let zero = self.rows[0][0].zero_like();
        let one = zero.one_like();
        let mut a = self.rows.clone();
        let mut inv: Vec<Vec<K>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { one.clone() } else { zero.clone() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p_inv = a[col][col].inv().expect("nonzero pivot");
            for j in 0..n {
                a[col][j] = a[col][j].mul(&p_inv);
                inv[col][j] = inv[col][j].mul(&p_inv);
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..n {
                    let t = a[col][j].mul(&factor);
                    a[r][j] = a[r][j].sub(&t);
                    let t = inv[col][j].mul(&factor);
                    inv[r][j] = inv[r][j].sub(&t);
                }
            }
        }
        Ok(Matrix { rows: inv })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        let zero = self.rows[0][0].zero_like();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(zero.clone(), |acc, k| {
                            acc.add(&self.rows[i][k].mul(&other.rows[k][j]))
                        })
                    })
                    .collect()
            })
            .collect();
        Matrix { rows }
    }
}

/// A homogeneous ideal given by a nonempty list of nonzero generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIdeal<K: Field> {
    ring: RingCtx,
    generators: Vec<Polynomial<K>>,
}

impl<K: Field> PolyIdeal<K> {
    pub fn new(ring: RingCtx, generators: Vec<Polynomial<K>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for (index, g) in generators.iter().enumerate() {
            if g.num_vars() != ring.num_vars() {
                return Err(Error::RingMismatch {
                    expected: ring.num_vars(),
                    found: g.num_vars(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator { index });
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous { index });
            }
            if g.degree() == Some(0) {
                return Err(Error::UnitIdeal);
            }
            if let Some(c) = g.leading_coefficient() {
                if c.mode() != ring.field() {
                    return Err(Error::InvalidRing(format!(
                        "coefficient field {} does not match ring field {}",
                        c.mode(),
                        ring.field()
                    )));
                }
            }
        }
        Ok(PolyIdeal { ring, generators })
    }

    pub fn ring(&self) -> RingCtx {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.generators
    }

    pub fn apply_linear_change(&self, matrix: &Matrix<K>) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.apply_linear_change(matrix))
            .collect::<Result<Vec<_>>>()?;
        PolyIdeal::new(self.ring, gens)
    }

    /// The restriction to a hyperplane `x_n = sum_{i<n} coeffs[i] x_i`, as an
    /// ideal of `k[x0..x(n-1)]`. Generators that vanish are dropped.
    pub fn restrict_to_hyperplane(&self, coeffs: &[K]) -> Result<Self> {
        let n = self.ring.num_vars();
        if n < 2 || coeffs.len() != n - 1 {
            return Err(Error::InvalidArgument(
                "hyperplane needs one coefficient per remaining variable".into(),
            ));
        }
        let mode = self.ring.field();
        let images: Vec<Vec<K>> = (0..n)
            .map(|i| {
                if i + 1 < n {
                    (0..n - 1)
                        .map(|j| K::from_i64((i == j) as i64, mode))
                        .collect::<Result<Vec<_>>>()
                } else {
                    Ok(coeffs.to_vec())
                }
            })
            .collect::<Result<_>>()?;
        let gens: Vec<_> = self
            .generators
            .iter()
            .map(|g| g.substitute_linear(&images, n - 1))
            .filter(|g| !g.is_zero())
            .collect();
        let ring = RingCtx::new(n - 1, mode)?;
        PolyIdeal::new(ring, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    fn x(i: usize, n: usize) -> P {
        P::var(i, n, FieldMode::Rationals).unwrap()
    }

    #[test]
    fn grevlex_examples() {
        let x0x3 = Monomial::new(&[1, 0, 0, 1]);
        let x1x2 = Monomial::new(&[0, 1, 1, 0]);
        assert_eq!(compare_grevlex(&x0x3, &x1x2).unwrap(), Ordering::Less);
        let sq = Monomial::new(&[2, 0, 0, 0]);
        assert_eq!(compare_grevlex(&sq, &sq.clone()).unwrap(), Ordering::Equal);
        assert!(compare_grevlex(&sq, &Monomial::new(&[2, 0])).is_err());
    }

    #[test]
    fn leading_monomial_of_binomial() {
        let f = x(1, 4).mul(&x(2, 4)).sub(&x(0, 4).mul(&x(3, 4)));
        assert_eq!(f.leading_monomial().unwrap(), &Monomial::new(&[0, 1, 1, 0]));
    }

    #[test]
    fn difference_of_squares() {
        let a = x(0, 2).add(&x(1, 2));
        let b = x(0, 2).sub(&x(1, 2));
        let expected = x(0, 2).pow(2).sub(&x(1, 2).pow(2));
        assert_eq!(a.mul(&b), expected);
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn linear_change_identity_and_swap() {
        let mode = FieldMode::Rationals;
        let f = x(0, 2).pow(2).add(&x(1, 2).scale(&rational(3, 2)));
        let id = Matrix::<BigRational>::identity(2, mode).unwrap();
        assert_eq!(f.apply_linear_change(&id).unwrap(), f);
        let swap = Matrix::<BigRational>::from_integers(&[vec![0, 1], vec![1, 0]], mode).unwrap();
        assert_eq!(x(0, 2).apply_linear_change(&swap).unwrap(), x(1, 2));
    }

    #[test]
    fn singular_change_rejected() {
        let m = Matrix::<BigRational>::from_integers(&[vec![1, 2], vec![2, 4]], FieldMode::Rationals)
            .unwrap();
        assert_eq!(x(0, 2).apply_linear_change(&m), Err(Error::SingularMatrix));
    }

    #[test]
    fn inhomogeneous_generator_rejected() {
        let ring = RingCtx::new(2, FieldMode::Rationals).unwrap();
        let f = x(0, 2).pow(2).add(&x(1, 2));
        assert_eq!(
            PolyIdeal::new(ring, vec![f]).unwrap_err(),
            Error::Inhomogeneous { index: 0 }
        );
    }

    #[test]
    fn display_round_trip_shape() {
        let f = x(1, 4).mul(&x(2, 4)).sub(&x(0, 4).mul(&x(3, 4)).scale(&rational(1, 2)));
        assert_eq!(f.to_string(), "x1*x2 - 1/2*x0*x3");
    }
}
