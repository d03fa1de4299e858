//! The eight acceptance criteria, one PASS/FAIL line each.

mod common;

use std::process::ExitCode;

use rand::Rng;

use common::{as_poly_ideal, random_borel, rank_hilbert_function, section_h1, Q, QM};
use ginbetti::borel::MonomialIdeal;
use ginbetti::fixtures::{self, match_published, FIXTURE_SEED};
use ginbetti::gin::{compute_gin, generic_section_gin, GinCertificate, GinOptions};
use ginbetti::invariants::{h1_oracle, h1_twist, marginal_betti, nd1_check, scheme_profile};
use ginbetti::ring::{Monomial, PolyIdeal};
use ginbetti::tailing::{
    analyze, analyze_published, betti_from_normality, hilbert_from_tailing, rigidity_and_bounds,
    sectional_normality, structure_check, tailing_from_gin, PublishedVector, Rigidity,
    FORCED_WATERMARK,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn gin_of(ideal: &PolyIdeal<Q>) -> Result<GinCertificate, String> {
    compute_gin(ideal, GinOptions::default()).map_err(|e| e.to_string())
}

fn mono(nv: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(nv, gens).unwrap()
}

fn s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let cert = gin_of(&fixtures::quintic(QM).map_err(s)?)?;
    let expected = mono(
        4,
        &[&[2, 0, 0, 0], &[1, 3, 0, 0], &[0, 4, 0, 0], &[1, 2, 1, 0], &[0, 3, 1, 0]],
    );
    ensure!(cert.gin == expected, "Gin {} != {}", cert.gin, expected);
    ensure!(cert.agreements == 2 && cert.borel_verified, "certificate incomplete");
    let t = cert.gin.ek_betti().map_err(s)?;
    let got = [t.get(1, 1), t.get(1, 3), t.get(2, 3), t.get(3, 3)];
    ensure!(got == [1, 4, 6, 2], "EK entries {got:?}");
    let p = scheme_profile(&cert.gin).map_err(s)?;
    ensure!(p.reg == 4, "regularity {}", p.reg);
    let m2 = cert.gin.stratum(4, 2).len() as u64;
    let tw = h1_twist(&cert.gin, 3).map_err(s)?;
    let or = h1_oracle(&cert.gin, 3).map_err(s)?;
    let mb = marginal_betti(&cert.gin, 3).map_err(s)?;
    ensure!([m2, tw, or, mb] == [2, 2, 2, 2], "|M_2(4)|, twist, oracle, marginal = {:?}", [m2, tw, or, mb]);
    Ok(format!("Gin {}, reg 4, h1(I(2)) = 2 by four routes", cert.gin))
}

fn criterion_2() -> Outcome {
    let seeds = [1u64, 2, 3, 4, 5, 6];
    for seed in seeds {
        let cert = gin_of(&fixtures::ci222(seed, QM).map_err(s)?)?;
        let rows = cert.gin.ek_betti().map_err(s)?.rows();
        let cols = |d: usize| rows.get(d).map(|r| (1..=3).map(|i| r.get(i).copied().unwrap_or(0)).collect::<Vec<_>>());
        let got = [cols(1), cols(2), cols(3)];
        let want = [Some(vec![3, 2, 0]), Some(vec![2, 4, 2]), Some(vec![1, 2, 1])];
        ensure!(got == want, "seed {seed}: rows {got:?}");
        ensure!(rows.len() == 4, "seed {seed}: {} rows", rows.len());
    }
    Ok(format!("{} seeds give rows (3,2,0)/(2,4,2)/(1,2,1)", seeds.len()))
}

fn criterion_3() -> Outcome {
    let cert = gin_of(&fixtures::monomial_curve(QM).map_err(s)?)?;
    let section = generic_section_gin(&cert.gin, 2).map_err(s)?;
    let want = mono(3, &[&[2, 0, 0], &[1, 2, 0], &[0, 3, 0]]);
    ensure!(section == want, "section {section} != {want}");
    let nd1 = nd1_check(&cert.gin, 2).map_err(s)?;
    let dims: Vec<(usize, bool)> = nd1.iter().map(|v| (v.dim, v.pass)).collect();
    ensure!(dims == [(2, true), (3, true)], "monomial_curve ND(1) {dims:?}");

    let cert = gin_of(&fixtures::two_planes(QM).map_err(s)?)?;
    let p = scheme_profile(&cert.gin).map_err(s)?;
    ensure!(p.nd1_failures() == [2], "two planes ND(1) failures {:?}", p.nd1_failures());
    ensure!(p.degree == 2 && p.e == 2 && p.degree < p.e as i128 + 1, "degree {} e {}", p.degree, p.e);
    let b31 = cert.gin.ek_betti().map_err(s)?.get(3, 1);
    ensure!(b31 == 1, "beta_(3,1) = {b31}");
    Ok("section (x0^2, x0*x1^2, x1^3); ND(1) pass at 2,3; two planes fail at 2, degree 2, beta_31 = 1".into())
}

fn criterion_4() -> Outcome {
    let ideal = fixtures::five_lines(FIXTURE_SEED, QM).map_err(s)?;
    let cert = gin_of(&ideal)?;
    let p = scheme_profile(&cert.gin).map_err(s)?;
    ensure!(p.is_3regular && p.nd1_holds(), "reg {} ND(1) {:?}", p.reg, p.nd1_failures());
    let table = cert.gin.ek_betti().map_err(s)?;
    let row2: Vec<u64> = (1..=3).map(|i| table.get(i, 2)).collect();
    ensure!(row2 == [5, 5, 1], "row 2 {row2:?}");
    let b = tailing_from_gin(&cert.gin, p.e).map_err(s)?;
    ensure!(b == [5, 1], "b {b:?}");
    let h = sectional_normality(&cert.gin, p.e).map_err(s)?;
    let oracle: Vec<i128> = (p.e..=p.n).map(|a| section_h1(&ideal, a, 77 + a as u64)).collect();
    ensure!(h == [2, 1] && oracle == [2, 1], "h {h:?}, section oracle {oracle:?}");
    ensure!(betti_from_normality(&h, p.n, p.e).map_err(s)? == b, "b != Xi h");
    let st = structure_check(&cert.gin, p.e).map_err(s)?;
    ensure!(st.pass(), "structure check {:?}", st.levels);
    match rigidity_and_bounds(&b, p.n, p.e, p.pd, Some(p.reg)).map_err(s)? {
        Rigidity::LowerBounds { checks, .. } => {
            let bounds: Vec<(usize, i128, i128)> = checks.iter().map(|c| (c.i, c.value, c.bound)).collect();
            ensure!(bounds == [(2, 5, 4), (3, 1, 1)], "bounds {bounds:?}");
        }
        other => return Err(format!("unexpected rigidity {other:?}")),
    }
    let report = analyze(&cert.gin, &p, false).map_err(s)?;
    ensure!(report.watermark.is_none() && report.consistency, "report not certified");
    Ok("b = (5,1), h = (2,1) by strata and by section oracle, b = Xi h, decomposition holds".into())
}

fn criterion_5() -> Outcome {
    let a = analyze_published(&PublishedVector::Normality(vec![4, 4]), 9, 8).map_err(s)?;
    ensure!(a.b == [40, 4], "Xi(9,8) (4,4) = {:?}", a.b);
    ensure!(a.degree_genus.degree == 13 && a.degree_genus.arithmetic_genus == Some(0), "{:?}", a.degree_genus);

    let c = analyze_published(&PublishedVector::Betti(vec![465, 330, 165, 55, 11, 1]), 10, 5).map_err(s)?;
    ensure!(c.h == [4, 1, 1, 1, 1, 1], "h {:?}", c.h);
    ensure!(c.degree_genus.degree == 10, "degree {}", c.degree_genus.degree);
    ensure!(c.sectional_genus == Some(3), "sectional genus {:?}", c.sectional_genus);
    let chis = c.hilbert_from_tailing.chis_descending();
    ensure!(chis == [10, -2, 1, 1, 1, 1], "chi {chis:?}");
    ensure!(c.hilbert_from_tailing.euler_characteristic() == 1, "chi(O_X)");
    let co = &c.cohomology;
    ensure!(
        co.h1 == 1 && co.h2 == Some(0) && co.h3_upper == Some(0) && co.h3_lower == Some(0),
        "cohomology {co:?}"
    );

    let b = analyze_published(&PublishedVector::Betti(vec![12, 1, 0]), 8, 6).map_err(s)?;
    ensure!(b.degree_genus.degree == 12 && b.degree_genus.irregularity == Some(1), "{:?}", b.degree_genus);
    let co = &b.cohomology;
    ensure!(
        co.h1 == 0 && co.h2 == Some(1) && co.h3_lower == Some(3) && co.h3_upper == Some(4),
        "cohomology {co:?}"
    );
    let hp = &b.hilbert_from_tailing;
    ensure!(hp.chis() == [0, -3, 12], "chi {:?}", hp.chis());
    for t in -3..=10i64 {
        let product = (2 * t as i128 + 1) * (3 * t as i128);
        ensure!(hp.eval(t).map_err(s)? == product, "P({t}) != (2t+1)(3t)");
    }
    let flag = match_published(8, 6, &b.b).and_then(|p| p.discrepancy);
    ensure!(flag.is_some(), "missing discrepancy flag");
    Ok("three published vectors reproduced; linear coefficient -3 flagged".into())
}

fn criterion_6() -> Outcome {
    let mut rng = ginbetti::seeds::rng(6);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 60 {
        attempts += 1;
        ensure!(attempts < 20_000, "only {accepted} admissible ideals found");
        let nv = rng.gen_range(4..=7);
        let count = rng.gen_range(1..=4);
        let j = random_borel(&mut rng, nv, nv - 1, 2..=3, count);
        let Ok(p) = scheme_profile(&j) else { continue };
        if !p.is_3regular || !p.nd1_holds() || p.e == 0 {
            continue;
        }
        accepted += 1;
        let b = tailing_from_gin(&j, p.e).map_err(s)?;
        let h = sectional_normality(&j, p.e).map_err(s)?;
        ensure!(betti_from_normality(&h, p.n, p.e).map_err(s)? == b, "{j}: b {b:?} != Xi {h:?}");
        let hp = hilbert_from_tailing(&b, p.n, p.e).map_err(s)?;
        ensure!(hp == p.hilbert_polynomial, "{j}: P from tailing {:?} vs {:?}", hp.chis(), p.hilbert_polynomial.chis());
        ensure!(p.depth + p.pd == p.n + 1, "{j}: depth + pd");
        ensure!(p.degree > p.e as i128, "{j}: degree {} < e + 1", p.degree);
        let t = j.ek_betti().map_err(s)?;
        for i in p.e + 1..=p.n + 1 {
            ensure!(t.get(i, 1) == 0, "{j}: beta_({i},1) != 0");
        }
    }
    Ok(format!("{accepted} random 3-regular ND(1) Borel ideals ({attempts} drawn)"))
}

/// For random `T` outside `J` and `j >= max(T)`: if `T x_j` lies in `J`
/// (or, with `strong`, is a minimal generator), then every `T x_i` with
/// `max(T) <= i <= j` is a minimal generator. Returns how many times the
/// hypothesis held.
fn closure_instances(j: &MonomialIdeal, rng: &mut rand_chacha::ChaCha8Rng, strong: bool) -> Result<usize, String> {
    let nv = j.num_vars();
    let mut hits = 0;
    for _ in 0..40 {
        let d = rng.gen_range(1..=3u32);
        let mut exps = vec![0u32; nv];
        for _ in 0..d {
            exps[rng.gen_range(0..nv)] += 1;
        }
        let t = Monomial::new(&exps);
        if j.contains(&t) {
            continue;
        }
        let top = t.max_index().unwrap_or(0);
        let is_gen = |m: &Monomial| j.generators().contains(m);
        for jx in top..nv {
            let tx = t.mul_var(jx);
            let hyp = if strong { is_gen(&tx) } else { j.contains(&tx) };
            if !hyp {
                continue;
            }
            hits += 1;
            for i in top..=jx {
                ensure!(is_gen(&t.mul_var(i)), "{j}: T = {t}, j = {jx}, T*x{i} not a minimal generator");
            }
        }
    }
    Ok(hits)
}

fn criterion_7() -> Outcome {
    for f in fixtures::corpus() {
        let ideal = f.ideal().map_err(s)?;
        let a = gin_of(&ideal)?;
        let b = gin_of(&ideal)?;
        ensure!(a == b, "{}: Gin not reproducible", f.name);
        let reg = a.gin.max_generator_degree().unwrap_or(0);
        for t in 0..=reg + 2 {
            let lhs = rank_hilbert_function(&ideal, t);
            let rhs = a.gin.hilbert_function(t);
            ensure!(lhs == rhs, "{}: HF({t}) = {lhs} but Gin gives {rhs}", f.name);
        }
    }
    let mut rng = ginbetti::seeds::rng(7);
    let (mut weak, mut strong, mut ideals) = (0, 0, 0);
    while weak < 200 || strong < 200 {
        ideals += 1;
        ensure!(ideals < 10_000, "too few closure instances ({weak}, {strong})");
        let nv = rng.gen_range(2..=5);
        let count = rng.gen_range(1..=4);
        let j = random_borel(&mut rng, nv, nv, 1..=4, count);
        weak += closure_instances(&j, &mut rng, false)?;
        strong += closure_instances(&j, &mut rng, true)?;
    }
    // reproducibility across representations: the Gin of a disguised Gin
    let quintic = gin_of(&fixtures::quintic(QM).map_err(s)?)?;
    let moved = as_poly_ideal::<Q>(&quintic.gin, QM)
        .apply_linear_change(&ginbetti::gin::random_generic_change(4, 5, 20, QM).map_err(s)?)
        .map_err(s)?;
    ensure!(gin_of(&moved)?.gin == quintic.gin, "Gin of a moved Gin differs");
    Ok(format!(
        "HF(R/I) = HF(R/Gin) on {} fixtures; reproducible; closure {weak} (membership) and {strong} (generator) instances over {ideals} ideals",
        fixtures::corpus().len()
    ))
}

fn criterion_8() -> Outcome {
    let ideal = fixtures::concurrent_lines(QM).map_err(s)?;
    let cert = gin_of(&ideal)?;
    let p = scheme_profile(&cert.gin).map_err(s)?;
    ensure!(!p.nd1_holds(), "ND(1) unexpectedly holds");
    let b = tailing_from_gin(&cert.gin, p.e).map_err(s)?;
    ensure!(b == [1, 0], "beta_(2,2), beta_(3,2) = {b:?}");
    let h1 = h1_twist(&cert.gin, 2).map_err(s)?;
    let section = generic_section_gin(&cert.gin, p.e).map_err(s)?;
    let h1s = h1_oracle(&section, 2).map_err(s)?;
    let oracle = (section_h1(&ideal, 3, 31), section_h1(&ideal, 2, 32));
    ensure!(h1 == 0 && h1s == 1 && oracle == (0, 1), "h1(I(1)) {h1}, section {h1s}, oracle {oracle:?}");
    let h = sectional_normality(&cert.gin, p.e).map_err(s)?;
    ensure!(betti_from_normality(&h, p.n, p.e).map_err(s)? == b, "b != Xi h");
    ensure!(
        matches!(analyze(&cert.gin, &p, false), Err(ginbetti::Error::Hypothesis(_))),
        "unforced analysis was not refused"
    );
    let forced = analyze(&cert.gin, &p, true).map_err(s)?;
    ensure!(forced.forced && forced.watermark.as_deref() == Some(FORCED_WATERMARK), "no watermark");
    Ok("beta_22 = 1, beta_32 = 0, h = (1,0), b = Xi h holds; forced report watermarked".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("quintic Gin end to end", criterion_1),
        ("CI(2,2,2) Gin Betti table", criterion_2),
        ("monomial fixtures", criterion_3),
        ("five lines tailing", criterion_4),
        ("published-vector transforms", criterion_5),
        ("tailing relation property suite", criterion_6),
        ("engine invariants", criterion_7),
        ("forced non-ND(1) example", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.1}s): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.1}s): {why}", k + 1);
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
