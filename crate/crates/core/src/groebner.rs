//! Buchberger's algorithm in grevlex, with normal forms, initial ideals and
//! saturation by a general linear form.

use std::collections::{BTreeSet, HashSet};

use crate::borel::MonomialIdeal;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::gin::{random_generic_change, DEFAULT_ENTRY_BOUND};
use crate::ring::{Monomial, PolyIdeal, Polynomial, RingCtx};

/// How often (in reduction steps) fraction-free reduction strips content.
const CONTENT_INTERVAL: usize = 10;

/// A Gröbner basis in grevlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<K: Field> {
    ring: RingCtx,
    elements: Vec<Polynomial<K>>,
    reduced: bool,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn ring(&self) -> RingCtx {
        self.ring
    }

    pub fn elements(&self) -> &[Polynomial<K>] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &Polynomial<K>) -> Polynomial<K> {
        reduce(f, &self.elements)
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial<K>) -> bool {
        self.reduce(f).is_zero()
    }

    /// The initial ideal, minimalized.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.ring.num_vars(), self.leading_monomials())
            .expect("leading monomials live in the basis ring")
    }

    /// Post-hoc certificate: every S-polynomial reduces to zero.
    pub fn is_groebner_basis(&self) -> bool {
        let g = &self.elements;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| reduce_scaled(&s_polynomial(&g[i], &g[j]), g).is_zero())
        })
    }

    /// The basis as an ideal (generators in primitive form).
    pub fn to_ideal(&self) -> Result<PolyIdeal<K>> {
        let gens = self.elements.iter().map(Polynomial::primitive).collect();
        PolyIdeal::new(self.ring, gens)
    }
}

/// Exact normal form: the remainder of `f` on division by `divisors`, tried
/// in list order, leading term first. No term of the result is divisible by
/// a leading monomial of `divisors`, and `f - r` lies in their ideal.
pub fn reduce<K: Field>(f: &Polynomial<K>, divisors: &[Polynomial<K>]) -> Polynomial<K> {
    normal_form(f, divisors, false)
}

/// Normal form up to a nonzero scalar, computed without division. Used by
/// Buchberger, where only the ideal generated by the result matters.
fn reduce_scaled<K: Field>(f: &Polynomial<K>, divisors: &[Polynomial<K>]) -> Polynomial<K> {
    normal_form(f, divisors, true)
}

fn normal_form<K: Field>(
    f: &Polynomial<K>,
    divisors: &[Polynomial<K>],
    fraction_free: bool,
) -> Polynomial<K> {
    let n = f.num_vars();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, K)> = Vec::new();
    let mut steps = 0usize;
    while let Some((lm, lc)) = p.leading_term().cloned() {
        let divisor = divisors
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|m| m.divides(&lm)));
        let Some(g) = divisor else {
            rem.push((lm, lc));
            p = p.tail();
            continue;
        };
        let (gm, gc) = g.leading_term().expect("nonzero divisor");
        let quotient = lm.div(gm).expect("divisibility checked");
        if fraction_free {
            let (s, t) = K::cancel_factors(gc, &lc);
            if !s.is_one() {
                p = p.scale(&s);
                for term in &mut rem {
                    term.1 = term.1.mul(&s);
                }
            }
            p = p.sub(&g.mul_term(&quotient, &t));
            steps += 1;
            if steps.is_multiple_of(CONTENT_INTERVAL) {
                strip_joint_content(&mut p, &mut rem);
            }
        } else {
            let t = lc.div(gc).expect("nonzero leading coefficient");
            p = p.sub(&g.mul_term(&quotient, &t));
        }
    }
    Polynomial::from_sorted_terms(n, rem)
}

fn strip_joint_content<K: Field>(p: &mut Polynomial<K>, rem: &mut [(Monomial, K)]) {
    let coeffs = p.terms().iter().chain(rem.iter()).map(|t| &t.1);
    if let Some(c) = K::content(coeffs) {
        let inv = c.inv().expect("content is nonzero");
        *p = p.scale(&inv);
        for term in rem.iter_mut() {
            term.1 = term.1.mul(&inv);
        }
    }
}

/// S-polynomial, scaled so that no division is needed over Q: a nonzero
/// multiple of `(L / lt f) f - (L / lt g) g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial<K: Field>(f: &Polynomial<K>, g: &Polynomial<K>) -> Polynomial<K> {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let (s, t) = K::cancel_factors(fc, gc);
    // s * gc == t * fc
    let left = f.mul_term(&l.div(fm).expect("lcm"), &t);
    let right = g.mul_term(&l.div(gm).expect("lcm"), &s);
    left.sub(&right)
}

/// Pair bookkeeping for the normal selection strategy.
struct PairQueue {
    queue: BTreeSet<(Monomial, usize, usize)>,
    pending: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue {
            queue: BTreeSet::new(),
            pending: HashSet::new(),
        }
    }

    fn push(&mut self, lcm: Monomial, i: usize, j: usize) {
        self.pending.insert((i, j));
        self.queue.insert((lcm, i, j));
    }

    fn pop(&mut self) -> Option<(Monomial, usize, usize)> {
        let first = self.queue.pop_first()?;
        self.pending.remove(&(first.1, first.2));
        Some(first)
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }
}

/// Reduced Gröbner basis in grevlex.
///
/// Pairs are processed by increasing lcm (degree first, then grevlex), with
/// the coprime-leading-monomial and chain criteria.
pub fn buchberger<K: Field>(ideal: &PolyIdeal<K>) -> GroebnerBasis<K> {
    let mut basis: Vec<Polynomial<K>> = Vec::new();
    let mut pairs = PairQueue::new();

    let mut gens: Vec<Polynomial<K>> = ideal.generators().to_vec();
    gens.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in gens {
        let r = reduce_scaled(&g, &basis);
        if !r.is_zero() {
            add_element(&mut basis, &mut pairs, normalize(r));
        }
    }

    while let Some((lcm, i, j)) = pairs.pop() {
        let (mi, mj) = (lm(&basis[i]), lm(&basis[j]));
        if mi.is_coprime(mj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&lcm)
                && !pairs.is_pending(i, k)
                && !pairs.is_pending(j, k)
        });
        if chain {
            continue;
        }
        let r = reduce_scaled(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            add_element(&mut basis, &mut pairs, normalize(r));
        }
    }

    GroebnerBasis {
        ring: ideal.ring(),
        elements: reduce_basis(basis),
        reduced: true,
    }
}

fn lm<K: Field>(p: &Polynomial<K>) -> &Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

fn normalize<K: Field>(p: Polynomial<K>) -> Polynomial<K> {
    p.primitive()
}

fn add_element<K: Field>(basis: &mut Vec<Polynomial<K>>, pairs: &mut PairQueue, p: Polynomial<K>) {
    let new = basis.len();
    let m = lm(&p).clone();
    for (i, g) in basis.iter().enumerate() {
        pairs.push(lm(g).lcm(&m), i, new);
    }
    basis.push(p);
}

/// Minimalize, interreduce, make monic, sort by leading monomial.
fn reduce_basis<K: Field>(basis: Vec<Polynomial<K>>) -> Vec<Polynomial<K>> {
    let mut minimal: Vec<Polynomial<K>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let m = lm(g);
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let hm = lm(h);
            l != k && hm.divides(m) && (hm != m || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| lm(a).cmp(lm(b)));
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let g = &minimal[k];
        let others: Vec<Polynomial<K>> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, h)| h.clone())
            .collect();
        // leading term is irreducible by the others, so only the tail changes
        let head = Polynomial::monomial(lm(g).clone(), g.leading_coefficient().unwrap().clone());
        let tail = reduce(&g.tail(), &others);
        out.push(head.add(&tail).monic());
    }
    out
}

/// `I : L^infinity` for a seeded random linear form `L`; for general `L`
/// this is the saturation of `I` by the irrelevant ideal.
///
/// Implementation: move `L` to the last variable with a random coordinate
/// change `M`, compute the grevlex basis, divide every element by the
/// largest power of `x_n` dividing it (the result is a basis of the
/// quotient by `x_n^infinity`), then undo `M`. The output is checked under a
/// fresh coordinate change: its initial ideal must not involve `x_n`.
pub fn saturate_by_general_linear_form<K: Field>(
    ideal: &PolyIdeal<K>,
    seed: u64,
) -> Result<PolyIdeal<K>> {
    let ring = ideal.ring();
    let mode = ring.field();
    let last = ring.num_vars() - 1;
    let change = random_generic_change::<K>(ring.num_vars(), seed, DEFAULT_ENTRY_BOUND, mode)?;
    let moved = ideal.apply_linear_change(&change)?;
    let gb = buchberger(&moved);
    let divided: Vec<Polynomial<K>> = gb
        .elements()
        .iter()
        .map(|g| {
            let k = g.var_power_dividing(last);
            let mut e = vec![0u32; ring.num_vars()];
            e[last] = k;
            g.div_monomial(&Monomial::new(&e)).expect("x_n^k divides")
        })
        .collect();
    if divided.iter().any(|g| g.degree() == Some(0)) {
        return Err(Error::EmptyScheme);
    }
    let back = change.inverse()?;
    let gens = divided
        .iter()
        .map(|g| g.apply_linear_change(&back).map(normalize))
        .collect::<Result<Vec<_>>>()?;
    let saturated = PolyIdeal::new(ring, gens)?;
    let result = PolyIdeal::new(ring, buchberger(&saturated).to_ideal()?.generators().to_vec())?;

    let check_seed = crate::seeds::sub_seed(seed, u64::MAX);
    let check = random_generic_change::<K>(ring.num_vars(), check_seed, DEFAULT_ENTRY_BOUND, mode)?;
    let initial = buchberger(&result.apply_linear_change(&check)?).initial_ideal();
    if initial.involves_last_variable() {
        return Err(Error::Genericity {
            reason: "saturation left generators involving the last variable".into(),
            seeds: vec![seed, check_seed],
        });
    }
    Ok(result)
}
