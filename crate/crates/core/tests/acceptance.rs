//! Acceptance criteria 1-9, each run under the working prime and the check
//! prime. Prints one PASS/FAIL line per (criterion, prime) and exits nonzero
//! if any fails. All comparisons are exact equalities over F_p.
//!
//! Run with `cargo test -p nlclass-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nlclass::annihilator::{
    annihilator, annihilator_acm, annihilator_apolar, classes_equal, liaison_pool, perfect_check, reconstruct_check,
    AnnihilatorClass,
};
use nlclass::geometry::{
    acm_bound_holds, catalog, lattice_classification, n0_of_degree, random_surface_containing,
    reconstruction_criterion, residual, CatalogName, CurveModel, SurfaceModel,
};
use nlclass::ideal::{IdealHandle, PolyMatrix};
use nlclass::resolution::{build_psi, hilbert_burch};
use nlclass::ring::{basis, dim_r, Polynomial, PrimeField, DEFAULT_CHECK_PRIME, DEFAULT_PRIME};

const TC_TRIALS: u64 = 20;
const RQ_TRIALS: u64 = 10;
const TC_BUDGET: Duration = Duration::from_secs(5);
const RQ_BUDGET: Duration = Duration::from_secs(10);

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

// ---------------------------------------------------------------------------
// oracles independent of the library's echelon and determinant code

/// Rank of a dense matrix mod `p` by plain Gaussian elimination.
fn rank_mod_p(p: u64, mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let inv = |a: u64| {
        let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else { continue };
        rows.swap(rank, pivot);
        let s = inv(rows[rank][col]);
        for v in rows[rank].iter_mut() {
            *v = *v * s % p;
        }
        let prow = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] % p != 0 {
                let c = row[col];
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v = (*v + p * p - c * pv % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rows_of(polys: &[Polynomial], n: usize) -> Vec<Vec<u64>> {
    polys.iter().map(|f| f.to_dense(n).into_iter().map(u64::from).collect()).collect()
}

fn span_dim(k: PrimeField, polys: &[Polynomial], n: usize) -> usize {
    rank_mod_p(k.prime() as u64, rows_of(polys, n))
}

/// All products `m * g` in degree `n`: the Macaulay matrix of `gens`.
fn macaulay_rows(gens: &[Polynomial], n: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for g in gens {
        let d = g.degree().unwrap();
        if d <= n {
            for m in basis(n - d).monomials() {
                out.push(g.mul_term(1, m));
            }
        }
    }
    out
}

/// Determinant by cofactor expansion along the first row.
fn laplace_det(m: &[Vec<Polynomial>], k: PrimeField) -> Polynomial {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(k);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect()).collect();
        let term = &m[0][j] * &laplace_det(&minor, k);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn matrix_entries(m: &PolyMatrix) -> Vec<Vec<Polynomial>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.entry(i, j).clone()).collect()).collect()
}

/// Gorenstein check written against the raw dimension table.
fn gorenstein(a: &AnnihilatorClass) -> Result<Vec<usize>, String> {
    let e = 2 * a.s - 4;
    let hf: Vec<usize> = (0..=e).map(|n| dim_r(n as i64) - a.dim(n)).collect();
    ensure!(hf[e] == 1, "socle dimension {} in degree {e}", hf[e]);
    ensure!((0..=e).all(|n| hf[n] == hf[e - n]), "quotient HF {hf:?} not symmetric");
    ensure!(a.dim(e + 1) == dim_r(e as i64 + 1), "I_alpha not everything past the socle");
    Ok(hf)
}

// ---------------------------------------------------------------------------
// shared fixtures

struct TcTrial {
    c: CurveModel,
    s: SurfaceModel,
    acm: AnnihilatorClass,
    apolar: AnnihilatorClass,
}

fn tc_trial(k: PrimeField, seed: u64) -> Result<TcTrial, String> {
    let c = catalog(k, CatalogName::TwistedCubic).map_err(err)?;
    let s = random_surface_containing(&c, 4, seed).map_err(err)?;
    let acm = annihilator_acm(&c, &s).map_err(err)?;
    let apolar = annihilator_apolar(&c, &s).map_err(err)?;
    Ok(TcTrial { c, s, acm, apolar })
}

struct CiSextic {
    c: CurveModel,
    s: SurfaceModel,
    acm: AnnihilatorClass,
    apolar: AnnihilatorClass,
}

fn ci_sextic(k: PrimeField) -> Result<CiSextic, String> {
    let c = catalog(k, CatalogName::CompleteIntersection(2, 2)).map_err(err)?;
    let s = random_surface_containing(&c, 6, 7).map_err(err)?;
    let acm = annihilator_acm(&c, &s).map_err(err)?;
    let apolar = annihilator_apolar(&c, &s).map_err(err)?;
    Ok(CiSextic { c, s, acm, apolar })
}

struct RqTrial {
    c: CurveModel,
    d0: CurveModel,
    s: SurfaceModel,
    alpha: AnnihilatorClass,
}

fn rq_trial(k: PrimeField, seed: u64) -> Result<RqTrial, String> {
    let c = catalog(k, CatalogName::RationalQuartic31).map_err(err)?;
    let s = random_surface_containing(&c, 4, seed).map_err(err)?;
    let quadrics = c.ideal.graded_piece(2).polys();
    ensure!(quadrics.len() == 1, "expected a unique quadric, got {}", quadrics.len());
    let d0 = residual(&c, &s, &quadrics[0]).map_err(err)?;
    let alpha = annihilator(&c, &s).map_err(err)?;
    Ok(RqTrial { c, d0, s, alpha })
}

// ---------------------------------------------------------------------------
// criteria

fn c1_twisted_cubic_reconstruction(k: PrimeField) -> Outcome {
    let mut slowest = Duration::ZERO;
    for seed in 1..=TC_TRIALS {
        let t = Instant::now();
        let tr = tc_trial(k, seed)?;
        let a = &tr.acm;
        ensure!(a.dim(1) == 0, "seed {seed}: dim I_alpha,1 = {}", a.dim(1));
        let ic2 = tr.c.ideal.graded_piece(2);
        ensure!(a.dim(2) == 3 && ic2.dim() == 3, "seed {seed}: dims {} / {}", a.dim(2), ic2.dim());
        // the quadrics of I_alpha are exactly those of I_C
        let both: Vec<Polynomial> = a.piece(2).polys().into_iter().chain(ic2.polys()).collect();
        ensure!(span_dim(k, &both, 2) == 3, "seed {seed}: I_alpha,2 != I_C,2");
        let quadrics = IdealHandle::new(k, a.piece(2).polys()).map_err(err)?;
        ensure!(quadrics.saturation().equals(&tr.c.ideal), "seed {seed}: saturation differs from I_C");
        let v = reconstruct_check(&tr.c, a, 2).map_err(err)?;
        ensure!(v.reconstructed, "seed {seed}: reconstruct_check says no");
        let dt = t.elapsed();
        ensure!(dt < TC_BUDGET, "seed {seed}: {dt:?} over budget");
        slowest = slowest.max(dt);
    }
    Ok(format!("{TC_TRIALS} quartics, dims (0,3), saturation = I_C, slowest {:.0} ms", slowest.as_secs_f64() * 1e3))
}

fn c2_path_agreement(k: PrimeField) -> Outcome {
    for seed in 1..=TC_TRIALS {
        let tr = tc_trial(k, seed)?;
        for n in 0..=4 {
            ensure!(tr.acm.piece(n) == tr.apolar.piece(n), "twisted cubic seed {seed}: degree {n} differs");
        }
        ensure!(classes_equal(&tr.acm, &tr.apolar).map_err(err)?, "seed {seed}: hyperplanes differ");
    }
    let ci = ci_sextic(k)?;
    for n in 0..=8 {
        ensure!(ci.acm.piece(n) == ci.apolar.piece(n), "complete_intersection(2,2): degree {n} differs");
    }
    Ok(format!("{TC_TRIALS} quartic instances in degrees 0..4, CI(2,2) sextic in degrees 0..8"))
}

fn c3_gorenstein(k: PrimeField) -> Outcome {
    let mut checked = 0;
    for seed in 1..=TC_TRIALS {
        let tr = tc_trial(k, seed)?;
        for a in [&tr.acm, &tr.apolar] {
            let hf = gorenstein(a).map_err(|e| format!("twisted cubic seed {seed}: {e}"))?;
            ensure!(hf == [1, 4, 7, 4, 1], "twisted cubic seed {seed}: HF {hf:?}");
            checked += 1;
        }
    }
    let ci = ci_sextic(k)?;
    for a in [&ci.acm, &ci.apolar] {
        gorenstein(a).map_err(|e| format!("CI(2,2): {e}"))?;
        checked += 1;
    }
    for seed in 1..=RQ_TRIALS {
        let tr = rq_trial(k, seed)?;
        gorenstein(&tr.alpha).map_err(|e| format!("rational quartic seed {seed}: {e}"))?;
        let b = annihilator(&tr.d0, &tr.s).map_err(err)?;
        gorenstein(&b).map_err(|e| format!("residual seed {seed}: {e}"))?;
        checked += 2;
    }
    Ok(format!("{checked} nonzero classes symmetric with 1-dim socle; twisted cubic HF (1,4,7,4,1)"))
}

fn c4_rational_quartic_ledger(k: PrimeField) -> Outcome {
    let mut slowest = Duration::ZERO;
    let mut totals = Vec::new();
    for seed in 1..=RQ_TRIALS {
        let t = Instant::now();
        let tr = rq_trial(k, seed)?;
        let ic3 = tr.c.ideal.graded_piece(3).polys();
        let id3 = tr.d0.ideal.graded_piece(3).polys();
        let js3 = tr.s.jacobian.graded_piece(3).polys();
        let dim_c = span_dim(k, &ic3, 3);
        let dim_d = span_dim(k, &id3, 3);
        let sum_cd: Vec<Polynomial> = ic3.iter().chain(&id3).cloned().collect();
        let dim_sum = span_dim(k, &sum_cd, 3);
        let dim_cap = dim_c + dim_d - dim_sum;
        let dim_j = span_dim(k, &js3, 3);
        let all: Vec<Polynomial> = sum_cd.iter().chain(&js3).cloned().collect();
        let dim_total = span_dim(k, &all, 3);
        let dim_alpha = tr.alpha.dim(3);
        ensure!(dim_c == 7 && dim_d == 7, "seed {seed}: dim I_C,3 = {dim_c}, dim I_D0,3 = {dim_d}");
        ensure!(dim_cap == 4 && dim_sum == 10, "seed {seed}: intersection {dim_cap}, sum {dim_sum}");
        // the library's own intersection agrees with the rank count
        let cap = tr.c.ideal.graded_piece(3).intersect(&tr.d0.ideal.graded_piece(3)).map_err(err)?;
        ensure!(cap.dim() == 4, "seed {seed}: library intersection {}", cap.dim());
        ensure!(dim_j == 4, "seed {seed}: dim J_S,3 = {dim_j}");
        ensure!(dim_total <= 14, "seed {seed}: dim(I_C,3 + I_D0,3 + J_S,3) = {dim_total}");
        ensure!(dim_alpha == 16, "seed {seed}: dim I_alpha,3 = {dim_alpha}");
        let pool = vec![tr.c.clone(), tr.d0.clone()];
        let v = perfect_check(&tr.alpha, &pool, &tr.s, 3).map_err(err)?;
        ensure!(v.rejected.is_empty(), "seed {seed}: pool rejected {:?}", v.rejected);
        ensure!(!v.perfect, "seed {seed}: verdict PERFECT");
        ensure!(v.ledger[3].total == dim_total, "seed {seed}: ledger total {} vs {dim_total}", v.ledger[3].total);
        let dt = t.elapsed();
        ensure!(dt < RQ_BUDGET, "seed {seed}: {dt:?} over budget");
        slowest = slowest.max(dt);
        totals.push(dim_total);
    }
    totals.dedup();
    Ok(format!(
        "{RQ_TRIALS} quartics: 7 + 7 - 4 = 10, J_S,3 = 4, total {totals:?} < 16, NOT PERFECT, slowest {:.0} ms",
        slowest.as_secs_f64() * 1e3
    ))
}

fn c5_class_equality(k: PrimeField) -> Outcome {
    for seed in 1..=RQ_TRIALS {
        let tr = rq_trial(k, seed)?;
        let b = annihilator(&tr.d0, &tr.s).map_err(err)?;
        let (hc, hd) = (tr.alpha.kernel_hyperplane.as_ref(), b.kernel_hyperplane.as_ref());
        ensure!(hc.is_some() && hd.is_some(), "seed {seed}: a class is zero");
        ensure!(hc == hd, "seed {seed}: hyperplanes of C and D0 differ");
        ensure!(classes_equal(&tr.alpha, &b).map_err(err)?, "seed {seed}: classes_equal(C, D0) false");
        let zero = AnnihilatorClass::zero(&tr.s, tr.alpha.path);
        ensure!(!classes_equal(&tr.alpha, &zero).map_err(err)?, "seed {seed}: class of C equals zero");
    }
    // an ACM link, where both classes come from their own determinantal data
    let tr = tc_trial(k, 1)?;
    let pool = liaison_pool(&tr.c, &tr.s, 2).map_err(err)?;
    ensure!(!pool.is_empty(), "twisted cubic: empty liaison pool");
    for d in &pool {
        let b = annihilator_acm(d, &tr.s).map_err(err)?;
        ensure!(classes_equal(&tr.acm, &b).map_err(err)?, "twisted cubic vs {}: classes differ", d.name);
    }
    Ok(format!(
        "{RQ_TRIALS} quartics: ker alpha(C) = ker alpha(D0) != zero; twisted cubic = {} residual quintics by minors",
        pool.len()
    ))
}

fn c6_lattice(_k: PrimeField) -> Outcome {
    let det = |x: i64, y: i64, q: i64| x * x + 4 * x * y - 2 * y * y - 24 * q;
    ensure!(det(4, -2, -1) == 0, "(4,-2,-1) off the quadric");
    ensure!(det(4, 10, -1) == 0, "(4,10,-1) off the quadric");
    let sols = lattice_classification(6);
    ensure!(sols.len() == 1, "{} survivors", sols.len());
    let s = sols[0];
    ensure!(s.a == Some(1) && (s.x, s.y, s.q) == (4, 10, -1), "survivor {s:?}");
    ensure!(det(s.x, s.y, s.q) == 0, "survivor off the quadric");
    // kernel vector of the intersection matrix
    let m = [[4, 4, s.x], [4, -2, s.y], [s.x, s.y, 2 * s.q]];
    let v = [s.p, s.m, s.n];
    ensure!(m.iter().all(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() == 0), "(p,m,n) not in kernel");
    Ok(format!("x <= 6 leaves only a = 1: (x,y,q) = (4,10,-1), (p,m,n) = ({},{},{})", s.p, s.m, s.n))
}

fn c7_acm_perfectness(k: PrimeField) -> Outcome {
    let tr = tc_trial(k, 1)?;
    let mut pool = vec![tr.c.clone()];
    pool.extend(liaison_pool(&tr.c, &tr.s, 2).map_err(err)?);
    let v = perfect_check(&tr.acm, &pool, &tr.s, 4).map_err(err)?;
    ensure!(v.rejected.is_empty(), "twisted cubic: rejected {:?}", v.rejected);
    ensure!(v.perfect, "twisted cubic: NOT PERFECT at 4");
    ensure!(v.ledger.iter().all(|r| r.total == r.alpha), "twisted cubic ledger disagrees");

    let ci = ci_sextic(k)?;
    let mut pool = vec![ci.c.clone()];
    pool.extend(liaison_pool(&ci.c, &ci.s, 2).map_err(err)?);
    let w = perfect_check(&ci.acm, &pool, &ci.s, 8).map_err(err)?;
    ensure!(w.rejected.is_empty(), "CI(2,2): rejected {:?}", w.rejected);
    ensure!(w.perfect, "CI(2,2): NOT PERFECT at 8");
    Ok(format!(
        "twisted cubic PERFECT to 4 with {} curves, CI(2,2) PERFECT to 8 with {} curves",
        v.accepted.len(),
        w.accepted.len()
    ))
}

fn c8_criteria(k: PrimeField) -> Outcome {
    let tr = tc_trial(k, 1)?;
    let r = reconstruction_criterion(&tr.c, &tr.s, 2).map_err(err)?;
    ensure!(r.holds, "twisted cubic criterion at p = 2 fails: {r:?}");

    let ci = ci_sextic(k)?;
    let e = ci.c.e_c.ok_or("CI(2,2) has no e(C)")?;
    let bound = 2 * e + 8 - ci.c.s_c as i64;
    ensure!(e == 0 && bound == 6, "e = {e}, bound = {bound}");
    ensure!(acm_bound_holds(&ci.c, 6).map_err(err)?, "acm_bound_holds false at s = 6");
    let level = (e + 3) as usize;
    ensure!(reconstruct_check(&ci.c, &ci.acm, level).map_err(err)?.reconstructed, "CI(2,2) not reconstructed at {level}");

    ensure!(n0_of_degree(3).map_err(err)?.0 == 1 && n0_of_degree(4).map_err(err)?.0 == 2, "n0(3), n0(4)");
    for d in 3..=50i64 {
        let formula = ((6 * d - 2) as f64).sqrt().ceil() as i64 - 3;
        let (n0, _) = n0_of_degree(d).map_err(err)?;
        ensure!(n0 == formula, "d = {d}: scan {n0}, closed form {formula}");
    }
    Ok("criterion holds at (twisted cubic, 4, 2); CI(2,2) bound 6 <= 6, reconstructed at 3; n0 agrees for d = 3..50".into())
}

fn c9_oracles(k: PrimeField) -> Outcome {
    let names = [
        CatalogName::Line,
        CatalogName::Conic,
        CatalogName::TwistedCubic,
        CatalogName::RationalQuartic31,
        CatalogName::CompleteIntersection(2, 2),
        CatalogName::CompleteIntersection(2, 3),
        CatalogName::CompleteIntersection(1, 4),
    ];
    let mut pieces = 0;
    let mut hb_checked = 0;
    for name in names {
        let c = catalog(k, name).map_err(err)?;
        for n in 0..=8 {
            let gb_dim = c.ideal.graded_piece(n).dim();
            let mac = span_dim(k, &macaulay_rows(c.ideal.generators(), n), n);
            ensure!(gb_dim == mac, "{name} degree {n}: Groebner {gb_dim}, Macaulay {mac}");
            pieces += 1;
        }
        match hilbert_burch(&c.ideal) {
            Ok(hb) => {
                let minors: Vec<Polynomial> = (0..hb.phi.rows()).map(|i| hb.signed_minor(i)).collect();
                for (i, (m, h)) in minors.iter().zip(&hb.generators).enumerate() {
                    let want = if i % 2 == 0 { h.clone() } else { -h };
                    ensure!(*m == want, "{name}: minor {i} is not (-1)^i h_i");
                }
                let regenerated = IdealHandle::new(k, minors).map_err(err)?;
                ensure!(regenerated.equals(&c.ideal), "{name}: minors do not regenerate I_C");
                for seed in [1, 2] {
                    let s = c.s_c.max(2) + 2;
                    let surface = random_surface_containing(&c, s, seed).map_err(err)?;
                    let psi = build_psi(&hb, &surface.f).map_err(err)?;
                    let det = laplace_det(&matrix_entries(&psi.psi), k);
                    ensure!(det == surface.f, "{name} seed {seed}: det psi != f");
                }
                hb_checked += 1;
            }
            Err(_) => ensure!(!c.acm, "{name}: marked ACM without a Hilbert-Burch matrix"),
        }
    }
    Ok(format!(
        "{pieces} graded pieces match Macaulay ranks; {hb_checked} ACM ideals regenerated by minors, det psi = f"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn(PrimeField) -> Outcome); 9] = [
        ("twisted cubic reconstruction", c1_twisted_cubic_reconstruction),
        ("path agreement", c2_path_agreement),
        ("Gorenstein structure", c3_gorenstein),
        ("rational quartic non-perfectness ledger", c4_rational_quartic_ledger),
        ("class equality via liaison", c5_class_equality),
        ("lattice classification", c6_lattice),
        ("ACM perfectness", c7_acm_perfectness),
        ("criterion predicates", c8_criteria),
        ("oracle suite", c9_oracles),
    ];
    let mut failed = 0;
    for p in [DEFAULT_PRIME, DEFAULT_CHECK_PRIME] {
        let k = PrimeField::new(p).expect("prime");
        for (i, (name, f)) in criteria.iter().enumerate() {
            let t = Instant::now();
            let outcome = f(k);
            let ms = t.elapsed().as_secs_f64() * 1e3;
            match outcome {
                Ok(detail) => println!("PASS criterion {} [p={p}] {name}: {detail} ({ms:.0} ms)", i + 1),
                Err(why) => {
                    failed += 1;
                    println!("FAIL criterion {} [p={p}] {name}: {why} ({ms:.0} ms)", i + 1);
                }
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 2 * criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
