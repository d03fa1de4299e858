//! Bundled example ideals and published tailing vectors.
//!
//! Each fixture renders to an ideal file whose `#! expect-*` metadata lines
//! hold the regression values checked by the `corpus` command.

use num_rational::BigRational;
use rand::Rng;

use crate::error::Result;
use crate::field::{Field, FieldMode};
use crate::hilbert::for_each_monomial;
use crate::parse::render_ideal;
use crate::ring::{PolyIdeal, Polynomial, RingCtx};
use crate::seeds::rng;

/// Seed for the random forms in the generated fixtures.
pub const FIXTURE_SEED: u64 = 2014;
const FORM_BOUND: i64 = 9;

/// A random form of degree `d` with every coefficient drawn from
/// `[-bound, bound]`.
pub fn random_form<K: Field>(
    num_vars: usize,
    d: u32,
    seed: u64,
    bound: i64,
    mode: FieldMode,
) -> Result<Polynomial<K>> {
    let mut gen = rng(seed);
    loop {
        let mut terms = Vec::new();
        let mut err = None;
        for_each_monomial(num_vars, d, &mut |m| {
            let c: i64 = gen.gen_range(-bound..=bound);
            if c != 0 {
                match K::from_i64(c, mode) {
                    Ok(k) if !k.is_zero() => terms.push((m.clone(), k)),
                    Ok(_) => {}
                    Err(e) => err = Some(e),
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        let p = Polynomial::from_terms(num_vars, terms);
        if !p.is_zero() {
            return Ok(p);
        }
    }
}

fn x<K: Field>(i: usize, nv: usize, mode: FieldMode) -> Polynomial<K> {
    Polynomial::var(i, nv, mode).expect("index in range")
}

fn ideal<K: Field>(nv: usize, mode: FieldMode, gens: Vec<Polynomial<K>>) -> Result<PolyIdeal<K>> {
    PolyIdeal::new(RingCtx::new(nv, mode)?, gens)
}

/// The degree-5 rational curve `[s^5, s^4 t, s t^4, t^5]` in `P^3`.
pub fn quintic<K: Field>(mode: FieldMode) -> Result<PolyIdeal<K>> {
    let v = |i| x::<K>(i, 4, mode);
    ideal(
        4,
        mode,
        vec![
            v(1).mul(&v(2)).sub(&v(0).mul(&v(3))),
            v(2).pow(4).sub(&v(1).mul(&v(3).pow(3))),
            v(0).mul(&v(2).pow(3)).sub(&v(1).pow(2).mul(&v(3).pow(2))),
            v(0).pow(2).mul(&v(2).pow(2)).sub(&v(1).pow(3).mul(&v(3))),
            v(1).pow(4).sub(&v(0).pow(3).mul(&v(2))),
        ],
    )
}

/// Complete intersection of three random quadrics in `P^4`.
pub fn ci222<K: Field>(seed: u64, mode: FieldMode) -> Result<PolyIdeal<K>> {
    let gens = (0..3)
        .map(|k| random_form(5, 2, crate::seeds::sub_seed(seed, k), FORM_BOUND, mode))
        .collect::<Result<Vec<_>>>()?;
    ideal(5, mode, gens)
}

/// Non-reduced curve `(x0^3, x0^2 x1, x0 x1^2, x1^3, x0^2 x2)` in `P^3`.
pub fn monomial_curve<K: Field>(mode: FieldMode) -> Result<PolyIdeal<K>> {
    let v = |i| x::<K>(i, 4, mode);
    ideal(
        4,
        mode,
        vec![
            v(0).pow(3),
            v(0).pow(2).mul(&v(1)),
            v(0).mul(&v(1).pow(2)),
            v(1).pow(3),
            v(0).pow(2).mul(&v(2)),
        ],
    )
}

/// Five lines and a point in `P^3`, all components degenerate:
/// `(L1 L2 L3, L1 L2 L4, L1 L4 L5, L4 L5 L6, L1 L2 L7)` for random linear
/// forms `L1..L7`.
pub fn five_lines<K: Field>(seed: u64, mode: FieldMode) -> Result<PolyIdeal<K>> {
    let l = (0..7)
        .map(|k| random_form::<K>(4, 1, crate::seeds::sub_seed(seed, k), FORM_BOUND, mode))
        .collect::<Result<Vec<_>>>()?;
    let prod = |a: usize, b: usize, c: usize| l[a - 1].mul(&l[b - 1]).mul(&l[c - 1]);
    ideal(
        4,
        mode,
        vec![prod(1, 2, 3), prod(1, 2, 4), prod(1, 4, 5), prod(4, 5, 6), prod(1, 2, 7)],
    )
}

/// Two planes in `P^4` meeting in a point: `(x0, x1) ∩ (x2, x3)`.
pub fn two_planes<K: Field>(mode: FieldMode) -> Result<PolyIdeal<K>> {
    let v = |i| x::<K>(i, 5, mode);
    ideal(
        5,
        mode,
        vec![v(0).mul(&v(2)), v(0).mul(&v(3)), v(1).mul(&v(2)), v(1).mul(&v(3))],
    )
}

/// Three concurrent lines in the plane `x2 = 0` with an embedded point at
/// their meeting point:
/// `(x0, x2) ∩ (x1, x2) ∩ (x0 - x1, x2) ∩ (x0, x1, x2)^2`.
pub fn concurrent_lines<K: Field>(mode: FieldMode) -> Result<PolyIdeal<K>> {
    let v = |i| x::<K>(i, 4, mode);
    ideal(
        4,
        mode,
        vec![
            v(0).mul(&v(2)),
            v(1).mul(&v(2)),
            v(2).pow(2),
            v(0).pow(2).mul(&v(1)).sub(&v(0).mul(&v(1).pow(2))),
        ],
    )
}

/// The twisted cubic in `P^3`.
pub fn twisted_cubic<K: Field>(mode: FieldMode) -> Result<PolyIdeal<K>> {
    let v = |i| x::<K>(i, 4, mode);
    ideal(
        4,
        mode,
        vec![
            v(0).mul(&v(2)).sub(&v(1).pow(2)),
            v(0).mul(&v(3)).sub(&v(1).mul(&v(2))),
            v(1).mul(&v(3)).sub(&v(2).pow(2)),
        ],
    )
}

/// A bundled fixture: its file name stem, description and expected values
/// as `(key, value)` metadata.
pub struct Fixture {
    pub name: &'static str,
    pub about: &'static str,
    pub expect: &'static [(&'static str, &'static str)],
    build: fn() -> Result<PolyIdeal<BigRational>>,
}

impl Fixture {
    pub fn ideal(&self) -> Result<PolyIdeal<BigRational>> {
        (self.build)()
    }

    /// The fixture as an ideal file.
    pub fn render(&self) -> Result<String> {
        let mut meta: Vec<(&str, &str)> = vec![("name", self.name), ("about", self.about)];
        meta.extend(self.expect.iter().copied());
        Ok(render_ideal(&self.ideal()?, &meta))
    }
}

const Q: FieldMode = FieldMode::Rationals;

/// Expected values use these keys: `expect-gin` (generators, `, `-separated),
/// `expect-betti` (rows `/`-separated, entries `,`-separated), `expect-reg`,
/// `expect-degree`, `expect-nd1` (`pass` or `fail:<dims>`), `expect-b`,
/// `expect-h` and `expect-watermark` (`yes`/`no`).
pub fn corpus() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "quintic",
            about: "rational quintic curve in P^3",
            expect: &[
                ("expect-gin", "x0^2, x1^4, x0*x1^3, x1^3*x2, x0*x1^2*x2"),
                ("expect-betti", "1,0,0,0/0,1,0,0/0,0,0,0/0,4,6,2"),
                ("expect-reg", "4"),
                ("expect-degree", "5"),
            ],
            build: || quintic(Q),
        },
        Fixture {
            name: "twisted_cubic",
            about: "twisted cubic curve in P^3",
            expect: &[
                ("expect-gin", "x0^2, x0*x1, x1^2"),
                ("expect-betti", "1,0,0/0,3,2"),
                ("expect-reg", "2"),
                ("expect-degree", "3"),
                ("expect-nd1", "pass"),
                ("expect-b", "0,0"),
                ("expect-h", "0,0"),
            ],
            build: || twisted_cubic(Q),
        },
        Fixture {
            name: "ci222",
            about: "complete intersection of three random quadrics in P^4",
            expect: &[
                ("expect-betti", "1,0,0,0/0,3,2,0/0,2,4,2/0,1,2,1"),
                ("expect-reg", "4"),
                ("expect-degree", "8"),
            ],
            build: || ci222(FIXTURE_SEED, Q),
        },
        Fixture {
            name: "monomial_curve",
            about: "non-reduced monomial curve in P^3 with ND(1)",
            expect: &[
                ("expect-gin", "x0^2*x2, x0^3, x0^2*x1, x0*x1^2, x1^3"),
                ("expect-reg", "3"),
                ("expect-nd1", "pass"),
            ],
            build: || monomial_curve(Q),
        },
        Fixture {
            name: "five_lines",
            about: "five degenerate lines and a point in P^3",
            expect: &[
                ("expect-gin", "x0^3, x0^2*x1, x0*x1^2, x1^3, x0^2*x2"),
                ("expect-betti", "1,0,0,0/0,0,0,0/0,5,5,1"),
                ("expect-reg", "3"),
                ("expect-degree", "5"),
                ("expect-nd1", "pass"),
                ("expect-b", "5,1"),
                ("expect-h", "2,1"),
                ("expect-watermark", "no"),
            ],
            build: || five_lines(FIXTURE_SEED, Q),
        },
        Fixture {
            name: "two_planes",
            about: "two planes in P^4 meeting in a point",
            expect: &[
                ("expect-betti", "1,0,0,0/0,4,4,1"),
                ("expect-reg", "2"),
                ("expect-degree", "2"),
                ("expect-nd1", "fail:2"),
            ],
            build: || two_planes(Q),
        },
        Fixture {
            name: "concurrent_lines",
            about: "three coplanar concurrent lines with an embedded point in P^3",
            expect: &[
                ("expect-gin", "x0^2, x0*x1, x0*x2, x1^3"),
                ("expect-betti", "1,0,0,0/0,3,3,1/0,1,1,0"),
                ("expect-reg", "3"),
                ("expect-nd1", "fail:2"),
                ("expect-b", "1,0"),
                ("expect-h", "1,0"),
                ("expect-watermark", "yes"),
            ],
            build: || concurrent_lines(Q),
        },
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    corpus().into_iter().find(|f| f.name == name)
}

/// A tailing vector reported for a scheme that is not rebuilt here, with the
/// values that follow from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublishedExample {
    pub name: &'static str,
    pub about: &'static str,
    pub n: usize,
    pub e: usize,
    pub b: &'static [i128],
    pub h: &'static [i128],
    pub degree: i128,
    /// Disagreement between a published value and the formulas.
    pub discrepancy: Option<&'static str>,
}

pub const SURFACE_CHI1_DISCREPANCY: &str =
    "the published Hilbert polynomial of this surface has linear coefficient +3; \
     the tailing formula gives -3, which matches chi(O(t)) = (2t+1)(3t) of the \
     product of a conic and a plane cubic";

pub fn published_examples() -> Vec<PublishedExample> {
    vec![
        PublishedExample {
            name: "rational_curve_13",
            about: "smooth rational curve of degree 13 in P^9",
            n: 9,
            e: 8,
            b: &[40, 4],
            h: &[4, 4],
            degree: 13,
            discrepancy: None,
        },
        PublishedExample {
            name: "conic_times_cubic",
            about: "Segre product of a conic and a plane cubic in P^8",
            n: 8,
            e: 6,
            b: &[12, 1, 0],
            h: &[5, 1, 0],
            degree: 12,
            discrepancy: Some(SURFACE_CHI1_DISCREPANCY),
        },
        PublishedExample {
            name: "segre_5fold",
            about: "generic projection of P^2 x P^3 to P^10",
            n: 10,
            e: 5,
            b: &[465, 330, 165, 55, 11, 1],
            h: &[4, 1, 1, 1, 1, 1],
            degree: 10,
            discrepancy: None,
        },
    ]
}

/// The published example with this exact `(n, e, b)`, if any.
pub fn match_published(n: usize, e: usize, b: &[i128]) -> Option<PublishedExample> {
    published_examples()
        .into_iter()
        .find(|p| p.n == n && p.e == e && p.b == b)
}
