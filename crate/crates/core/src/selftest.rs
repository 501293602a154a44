//! The acceptance grid as a single run, for `evolutes selftest`.

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::bundle::{reference, BundleSpace};
use crate::chow::{CurveInvariants, CurveModel, SurfaceChernNumbers, SurfaceModel};
use crate::closed_forms;
use crate::error::EngineError;
use crate::pipelines::{
    curve_report, hypersurface_report, oracle_report, osculating_report, salmon_consistency,
    sigma_degrees, surface_in_p3_report, virtual_product_check,
};
use crate::poly::GradedClass;

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn outcome(id: u32, name: &'static str, run: impl FnOnce() -> Result<String, String>) -> Outcome {
    match run() {
        Ok(detail) => Outcome { id, name, passed: true, detail },
        Err(detail) => Outcome { id, name, passed: false, detail },
    }
}

fn err(e: EngineError) -> String {
    e.to_string()
}

/// The curve grid: `n` in 3..=5, `d <= 8`, `g <= 4`, `k0 <= 3`.
pub fn curve_grid() -> Vec<CurveInvariants> {
    let mut out = Vec::new();
    for n in 3..=5 {
        for d in 1..=8 {
            for g in 0..=4 {
                for k0 in 0..=3 {
                    out.push(CurveInvariants::new(n, d, g, &[k0]).expect("grid is valid"));
                }
            }
        }
    }
    out
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn twisted_cubic() -> Result<String, String> {
    let start = Instant::now();
    let inv = CurveInvariants::new(3, 3, 0, &[0]).map_err(err)?;
    let m = CurveModel::new(&inv).map_err(err)?;
    let b = BundleSpace::new(&m.variety, &m.normal).map_err(err)?;
    let degs = sigma_degrees(&b, 3).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(degs == [big(12), big(15), big(16)], || format!("got {degs:?}"))?;
    ensure(elapsed.as_secs_f64() < 0.1, || format!("took {elapsed:?}"))?;
    Ok(format!("12, 15, 16 in {:.1} ms", elapsed.as_secs_f64() * 1e3))
}

fn quadric() -> Result<String, String> {
    let r = surface_in_p3_report(2).map_err(err)?;
    let got: Vec<String> = r.results.iter().take(3).map(|x| x.engine_degree.to_string()).collect();
    ensure(got == ["12", "24", "32"] && r.passed(), || format!("got {got:?}"))?;
    Ok("12, 24, 32".into())
}

fn surfaces() -> Result<String, String> {
    let bad: Vec<i64> = (2..=10)
        .into_par_iter()
        .filter(|&d| {
            let Ok(r) = surface_in_p3_report(d) else { return true };
            let poly = closed_forms::surface_in_p3(d);
            !(1..=3).all(|k| Some(&r.results[k - 1].engine_degree) == poly.get(k as u32))
        })
        .collect();
    ensure(bad.is_empty(), || format!("mismatch at d = {bad:?}"))?;
    Ok("27 values".into())
}

fn hypersurfaces() -> Result<String, String> {
    let cases: Vec<(u32, i64)> = (2..=6).flat_map(|n| (2..=6).map(move |d| (n, d))).collect();
    let bad: Vec<(u32, i64)> = cases
        .par_iter()
        .copied()
        .filter(|&(n, d)| {
            let Ok(r) = hypersurface_report(n, d) else { return true };
            let e = &r.results[0].engine_degree;
            *e != closed_forms::trifogli(n, d)
                || (d == 2 && *e != big(6 * (n as i64 - 1)))
                || !r.passed()
        })
        .collect();
    ensure(bad.is_empty(), || format!("mismatch at (n, d) = {bad:?}"))?;
    Ok(format!("{} cases", cases.len()))
}

fn curves() -> Result<String, String> {
    let grid = curve_grid();
    let bad: Vec<String> = grid
        .par_iter()
        .filter_map(|inv| {
            let r = match curve_report(inv) {
                Ok(r) => r,
                Err(e) => return Some(format!("{inv:?}: {e}")),
            };
            let closed = closed_forms::curve(inv);
            let ok = (1..=3).all(|k| Some(&r.results[k - 1].engine_degree) == closed.get(k as u32))
                && r.passed();
            (!ok).then(|| format!("{inv:?}"))
        })
        .collect();
    ensure(bad.is_empty(), || format!("{} failures, first {}", bad.len(), bad[0]))?;
    Ok(format!("{} grid points", grid.len()))
}

fn salmon() -> Result<String, String> {
    let mut grid = Vec::new();
    for d in 1..=8 {
        for g in 0..=4 {
            for k0 in 0..=3 {
                for k1 in 0..=3 {
                    grid.push(CurveInvariants::new(3, d, g, &[k0, k1]).expect("valid"));
                }
            }
        }
    }
    let bad = grid
        .par_iter()
        .filter(|inv| !salmon_consistency(inv).is_ok_and(|r| r.passed()))
        .count();
    ensure(bad == 0, || format!("{bad} failures"))?;
    Ok(format!("{} grid points", grid.len()))
}

fn osculating() -> Result<String, String> {
    for n in 3..=6 {
        let inv = CurveInvariants::rational_normal(n).map_err(err)?;
        let r = osculating_report(&inv).map_err(err)?;
        let env = &r.result("osculating_hyperplane_envelope").unwrap().engine_degree;
        let top = &r.result("hyperosculating_points").unwrap().engine_degree;
        ensure(*env == big(2 * (n as i64 - 1)) && *top == big(0), || {
            format!("rational normal curve in P^{n}: envelope {env}, k_(n-1) {top}")
        })?;
    }
    let tc = osculating_report(&CurveInvariants::rational_normal(3).map_err(err)?).map_err(err)?;
    let d1 = &tc.results[0].engine_degree;
    ensure(*d1 == big(4), || format!("twisted cubic deg D^1 = {d1}"))?;
    let bad = curve_grid()
        .par_iter()
        .filter(|inv| !osculating_report(inv).is_ok_and(|r| r.passed()))
        .count();
    ensure(bad == 0, || format!("{bad} grid failures"))?;
    Ok("rational normal n = 3..6 and curve grid".into())
}

fn closed_form_regressions() -> Result<String, String> {
    let mut count = 0;
    for r in 1..=3 {
        for n in r + 1..=6 {
            let b = BundleSpace::formal(r, n).map_err(err)?;
            let cb = b.virtual_chern(3);
            let t = b.tangent_chern();
            let ok = reference::tangent_chern(&b)
                .iter()
                .enumerate()
                .all(|(i, c)| t.homogeneous_part(i as u32 + 1) == *c)
                && cb[..3] == reference::virtual_chern(&b)
                && cb[..3] == reference::virtual_chern_expanded(&b)
                && virtual_product_check(&b, n.min(4));
            ensure(ok, || format!("formal base r = {r}, n = {n}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} symbolic (r, n) instances"))
}

fn algebra() -> Result<String, String> {
    let surface = SurfaceModel::new(4, &SurfaceChernNumbers::in_p3(5)).map_err(err)?;
    let b = BundleSpace::new(&surface.variety, &surface.normal).map_err(err)?;
    let x = &surface.variety;
    let (k, h) = (x.class("K").map_err(err)?, x.class("H").map_err(err)?);
    // Whitney
    let sum = surface.principal_parts.direct_sum(&surface.conormal).map_err(err)?;
    ensure(sum.total_chern() == &GradedClass::one(x.table()), || "Whitney on 0 -> K1 -> V -> P1".into())?;
    // series inverse
    let c = surface.normal.total_chern();
    let inv = c.series_inverse().map_err(err)?;
    ensure((c * &inv) == GradedClass::one(x.table()), || "c * c^-1 != 1".into())?;
    // projection formula and the pushforward basis
    let z = b.zeta();
    for a in [k.clone(), h.clone(), &k * &h] {
        for j in 0..=4 {
            let lhs = b.pushforward(&(&b.pullback(&a) * &z.pow(j))).map_err(err)?;
            let rhs = &a * &b.pushforward(&z.pow(j)).map_err(err)?;
            ensure(lhs == rhs, || format!("projection formula fails for {a} z^{j}"))?;
        }
    }
    for i in 0..=2 {
        let s = b.pushforward(&z.pow(2 + i)).map_err(err)?;
        ensure(s == surface.normal.segre(i), || format!("pi_* z^{} != s_{i}", 2 + i))?;
    }
    Ok("Whitney, inverse, projection formula, Segre basis".into())
}

fn oracle() -> Result<String, String> {
    let ellipse = oracle_report("x^2/4 + y^2 - 1", 0, 0, Some(2)).map_err(err)?;
    let e = &ellipse.results[0].engine_degree;
    ensure(*e == big(6) && ellipse.passed(), || format!("ellipse degree {e}"))?;
    let cubic = oracle_report("x^3 - 2*y^3 + x*y + 3*x - y + 1", 1, 0, Some(3)).map_err(err)?;
    let c = &cubic.results[0].engine_degree;
    ensure(*c == big(18) && cubic.passed(), || format!("cubic degree {c}"))?;
    let circle = oracle_report("x^2 + y^2 - 1", 0, 0, Some(2)).map_err(err)?;
    ensure(
        circle.results[0].closed_form.is_none()
            && circle.flags.iter().any(|f| f.starts_with("excluded")),
        || "circle not flagged".into(),
    )?;
    Ok("ellipse 6, cubic 18, circle excluded".into())
}

fn salmon_reference() -> Result<String, String> {
    let s = closed_forms::salmon_reference(2);
    ensure(
        [s.evolute_class, s.ed_degree, s.umbilics] == [big(4), big(6), big(12)],
        || "d = 2 reference values".into(),
    )?;
    for d in 2..=6 {
        let s = closed_forms::salmon_reference(d);
        let expect = [
            2 * d * d * d - 2 * d * d - 2 * d,
            d * d * d - d * d + d,
            10 * d * d * d - 28 * d * d + 22 * d,
        ];
        ensure([s.evolute_class, s.ed_degree, s.umbilics] == expect.map(big), || format!("d = {d}"))?;
    }
    Ok("4, 6, 12 at d = 2; d <= 6".into())
}

/// Runs all eleven criteria.
pub fn run() -> Vec<Outcome> {
    vec![
        outcome(1, "twisted cubic 12, 15, 16", twisted_cubic),
        outcome(2, "quadric surface 12, 24, 32", quadric),
        outcome(3, "surfaces in P^3, d = 2..10", surfaces),
        outcome(4, "hypersurfaces vs Trifogli", hypersurfaces),
        outcome(5, "curve grid vs closed forms", curves),
        outcome(6, "Salmon consistency", salmon),
        outcome(7, "osculating hyperplanes", osculating),
        outcome(8, "Chern class closed forms", closed_form_regressions),
        outcome(9, "algebra properties", algebra),
        outcome(10, "elimination oracle", oracle),
        outcome(11, "Salmon reference values", salmon_reference),
    ]
}

pub fn render(outcomes: &[Outcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{mark}] {:>2}. {:<32} {}\n", o.id, o.name, o.detail));
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    out.push_str(&format!("{passed}/{} criteria passed\n", outcomes.len()));
    out
}
