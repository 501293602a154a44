//! Acceptance grid. Runs without the libtest harness so that each criterion
//! prints exactly one PASS/FAIL line; exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use evolute_elimination::{oracle_check, PlaneCurve, Sparse, Verdict};
use evolutes::bundle::{reference, BundleSpace};
use evolutes::chow::{
    CurveInvariants, CurveModel, SheafData, SurfaceChernNumbers, SurfaceModel, VarietyDescriptor,
};
use evolutes::pipelines::{
    hypersurface_report, osculating_report, salmon_consistency, sigma_degrees,
    surface_in_p3_report,
};
use evolutes::poly::{GeneratorTable, GradedClass, Rational};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn int(v: &BigInt) -> i64 {
    i64::try_from(v).expect("degrees fit in i64")
}

fn engine_curve(inv: &CurveInvariants, k: u32) -> Result<Vec<i64>, String> {
    let m = CurveModel::new(inv).map_err(|e| e.to_string())?;
    let b = BundleSpace::new(&m.variety, &m.normal).map_err(|e| e.to_string())?;
    let d = sigma_degrees(&b, k).map_err(|e| e.to_string())?;
    Ok(d.iter().map(int).collect())
}

fn c1_twisted_cubic() -> Check {
    let inv = CurveInvariants::new(3, 3, 0, &[0]).unwrap();
    let start = Instant::now();
    let got = engine_curve(&inv, 3)?;
    let took = start.elapsed();
    ensure(got == [12, 15, 16], || format!("degrees {got:?}"))?;
    ensure(took.as_secs_f64() < 0.1, || format!("took {took:?}"))?;
    Ok(format!("12, 15, 16 in {:.2} ms", took.as_secs_f64() * 1e3))
}

// Degree polynomials for smooth surfaces in P^3.
fn surface_p3(d: i64) -> [i64; 3] {
    [2 * d * (d - 1) * (2 * d - 1), 2 * d * (d - 1) * (11 * d - 16), 4 * d * (30 * d * d - 97 * d + 78)]
}

fn engine_surface(d: i64) -> Result<Vec<i64>, String> {
    let s = SurfaceModel::new(3, &SurfaceChernNumbers::in_p3(d)).map_err(|e| e.to_string())?;
    let b = BundleSpace::new(&s.variety, &s.normal).map_err(|e| e.to_string())?;
    Ok(sigma_degrees(&b, 3).map_err(|e| e.to_string())?.iter().map(int).collect())
}

fn c2_quadric() -> Check {
    let got = engine_surface(2)?;
    ensure(got[0] == 12, || format!("evolute degree {}", got[0]))?;
    ensure(got == surface_p3(2), || format!("got {got:?}, polynomials give {:?}", surface_p3(2)))?;
    let report = surface_in_p3_report(2).map_err(|e| e.to_string())?;
    ensure(report.passed(), || "report comparisons fail".into())?;
    Ok("12, 24, 32".into())
}

fn c3_surfaces() -> Check {
    let mut count = 0;
    for d in 2..=10 {
        let got = engine_surface(d)?;
        let want = surface_p3(d);
        ensure(got == want, || format!("d = {d}: engine {got:?}, closed form {want:?}"))?;
        count += 3;
    }
    Ok(format!("{count} values"))
}

// Focal locus degree of a smooth degree-d hypersurface in P^n.
fn trifogli(n: i64, d: i64) -> i64 {
    let e = d - 1;
    let sum: i64 = (0..=n - 2).map(|i| e.pow(i as u32)).sum();
    d * e * ((n - 1) * e.pow((n - 2) as u32) + 2 * sum)
}

fn c4_hypersurfaces() -> Check {
    let mut count = 0;
    for n in 2..=6u32 {
        for d in 2..=6 {
            let r = hypersurface_report(n, d).map_err(|e| e.to_string())?;
            let e = int(&r.results[0].engine_degree);
            let want = trifogli(n as i64, d);
            ensure(e == want, || format!("(n, d) = ({n}, {d}): engine {e}, closed form {want}"))?;
            if d == 2 {
                ensure(e == 6 * (n as i64 - 1), || format!("quadric in P^{n}: {e}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} cases"))
}

fn curve_closed(d: i64, g: i64, k0: i64) -> [i64; 3] {
    [6 * (d + g - 1) - 2 * k0, 3 * (3 * d + 4 * g - 4 - k0), 4 * (3 * d + 5 * g - 5 - k0)]
}

fn c5_curve_grid() -> Check {
    let mut count = 0;
    for n in 3..=5 {
        for d in 1..=8 {
            for g in 0..=4 {
                for k0 in 0..=3 {
                    let inv = CurveInvariants::new(n, d, g, &[k0]).unwrap();
                    let got = engine_curve(&inv, 3)?;
                    let want = curve_closed(d, g, k0);
                    ensure(got == want, || format!("{inv:?}: engine {got:?}, closed {want:?}"))?;
                    if n == 3 {
                        let [e, c, k] = [got[0], got[1], got[2]];
                        ensure(e == 2 * c + 2 * g - 2 - k, || format!("identity fails at {inv:?}"))?;
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} grid points"))
}

fn c6_salmon() -> Check {
    let mut count = 0;
    for d in 1..=8 {
        for g in 0..=4 {
            for k0 in 0..=3 {
                for k1 in 0..=3 {
                    let inv = CurveInvariants::new(3, d, g, &[k0, k1]).unwrap();
                    // characters of a space curve, k2 by Plücker
                    let k2 = 4 * (d + 3 * (g - 1)) - 3 * k0 - 2 * k1;
                    let (m, n_s, theta) = (d, 3 * (d + 2 * g - 2) - 2 * k0 - k1, k1);
                    let [env, cusp, _] = curve_closed(d, g, k0);
                    ensure(3 * m + n_s + theta == env, || format!("first identity at {inv:?}"))?;
                    ensure(5 * m + 2 * k1 + k2 == cusp, || format!("second identity at {inv:?}"))?;
                    let got = engine_curve(&inv, 2)?;
                    ensure(got == [env, cusp], || format!("engine {got:?} at {inv:?}"))?;
                    let r = salmon_consistency(&inv).map_err(|e| e.to_string())?;
                    ensure(r.passed(), || format!("report fails at {inv:?}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} grid points"))
}

fn c7_osculating() -> Check {
    for n in 3..=6u32 {
        let inv = CurveInvariants::rational_normal(n).unwrap();
        let r = osculating_report(&inv).map_err(|e| e.to_string())?;
        let env = int(&r.result("osculating_hyperplane_envelope").unwrap().engine_degree);
        let top = int(&r.result("hyperosculating_points").unwrap().engine_degree);
        ensure(env == 2 * (n as i64 - 1), || format!("P^{n}: envelope {env}"))?;
        ensure(top == 0, || format!("P^{n}: k_(n-1) = {top}"))?;
    }
    let tc = osculating_report(&CurveInvariants::rational_normal(3).unwrap()).map_err(|e| e.to_string())?;
    let d1 = int(&tc.results[0].engine_degree);
    ensure(tc.results[0].k == 1 && d1 == 4, || format!("twisted cubic D^1 = {d1}"))?;
    let mut count = 0;
    for n in 3..=5u32 {
        for d in 1..=8 {
            for g in 0..=4 {
                for k0 in 0..=3 {
                    let inv = CurveInvariants::new(n, d, g, &[k0]).unwrap();
                    let r = osculating_report(&inv).map_err(|e| e.to_string())?;
                    let rows: Vec<i64> = r
                        .results
                        .iter()
                        .filter(|x| x.locus == "osculating_developable")
                        .map(|x| int(&x.engine_degree))
                        .collect();
                    let env = int(&r.result("osculating_hyperplane_envelope").unwrap().engine_degree);
                    let top = int(&r.result("hyperosculating_points").unwrap().engine_degree);
                    // D^m sits at index m - 1
                    let dn2 = rows[n as usize - 3];
                    ensure(env == dn2 + top, || format!("{inv:?}: {env} != {dn2} + {top}"))?;
                    // k_(n-1) from Plücker, written out here
                    let ni = n as i64;
                    let plucker = (ni + 1) * (d + ni * (g - 1)) - ni * k0;
                    ensure(top == plucker, || format!("{inv:?}: k_(n-1) {top} vs {plucker}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("rational normal n = 3..6, {count} grid points"))
}

// Random base of dimension r: generators h (deg 1), e (deg 2), t (deg 3) as
// the dimension allows.
fn random_table(r: u32) -> Arc<GeneratorTable> {
    let gens: Vec<(&str, u32)> = [("h", 1), ("e", 2), ("t", 3)].into_iter().take(r as usize).collect();
    GeneratorTable::new(&gens, r).unwrap()
}

fn random_part(rng: &mut ChaCha8Rng, table: &Arc<GeneratorTable>, deg: u32, rational: bool) -> GradedClass {
    GradedClass::from_terms(
        table,
        table.monomials_of_degree(deg).into_iter().map(|m| {
            let num = rng.gen_range(-3i64..=3);
            let den = if rational { rng.gen_range(1i64..=3) } else { 1 };
            (m, Rational::new(num.into(), den.into()))
        }),
    )
}

fn random_total(rng: &mut ChaCha8Rng, table: &Arc<GeneratorTable>, top: u32, rational: bool) -> GradedClass {
    (1..=top).fold(GradedClass::one(table), |acc, i| &acc + &random_part(rng, table, i, rational))
}

fn random_bundle(rng: &mut ChaCha8Rng, rational: bool) -> BundleSpace {
    let r = rng.gen_range(1..=3u32);
    let n = rng.gen_range(r + 1..=6);
    let table = random_table(r);
    let omega = random_total(rng, &table, r, rational);
    let rank = n - r + 1;
    let f = random_total(rng, &table, r.min(rank), rational);
    let base = VarietyDescriptor::formal(r, n, table, omega).unwrap();
    BundleSpace::new(&base, &SheafData::new(rank, f).unwrap()).unwrap()
}

fn truncated(a: &GradedClass, top: u32) -> GradedClass {
    (0..=top).fold(GradedClass::zero(a.table()), |acc, i| &acc + &a.homogeneous_part(i))
}

fn c8_closed_forms() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for case in 0..100 {
        let b = random_bundle(&mut rng, false);
        let t = b.tangent_chern();
        for (i, c) in reference::tangent_chern(&b).iter().enumerate() {
            ensure(t.homogeneous_part(i as u32 + 1) == *c, || format!("case {case}: c_{} of T", i + 1))?;
        }
        let cb = b.virtual_chern(4);
        let closed = reference::virtual_chern(&b);
        let expanded = reference::virtual_chern_expanded(&b);
        for i in 0..3 {
            ensure(cb[i] == closed[i] && cb[i] == expanded[i], || format!("case {case}: cbar_{}", i + 1))?;
        }
        let sum = cb.iter().fold(b.one(), |acc, c| &acc + c);
        let target = (&b.one() + &b.zeta()).pow(b.dim() + 1);
        ensure(truncated(&(&sum * &t), 4) == truncated(&target, 4), || {
            format!("case {case}: cbar * c(T) != (1 + z)^(n+1)")
        })?;
    }
    Ok("100 random instances".into())
}

// Grothendieck relation for quotients: sum_i (-1)^i c_i(F) z^(e-i) = 0 on P(F).
fn relation(b: &BundleSpace) -> GradedClass {
    let e = b.sheaf().rank();
    let c = b.pullback(b.sheaf().total_chern());
    (0..=e).fold(GradedClass::zero(b.table()), |acc, i| {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        &acc + &(&c.homogeneous_part(i) * &b.zeta().pow(e - i)).scale_int(sign)
    })
}

fn c9_algebra() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for case in 0..1000 {
        let b = random_bundle(&mut rng, true);
        let base = b.base().table().clone();
        let r = b.base().dim();
        let one = GradedClass::one(&base);
        // Whitney: twisting a split sheaf twists each summand
        let [l1, l2, l] = [(); 3].map(|_| random_part(&mut rng, &base, 1, true));
        let split = SheafData::line(&l1).unwrap().direct_sum(&SheafData::line(&l2).unwrap()).unwrap();
        let twisted = split.twist_by_line(&l).unwrap();
        let expect = &(&(&one + &l1) + &l) * &(&(&one + &l2) + &l);
        ensure(*twisted.total_chern() == expect, || format!("case {case}: Whitney"))?;
        // series inverse
        let c = random_total(&mut rng, &base, r, true);
        let inv = c.series_inverse().unwrap();
        ensure(&c * &inv == one, || format!("case {case}: c * c^-1"))?;
        // projection formula
        let a = random_total(&mut rng, &base, r, true);
        let j = rng.gen_range(0..=b.dim());
        let lhs = b.pushforward(&(&b.pullback(&a) * &b.zeta().pow(j))).unwrap();
        let rhs = &a * &b.pushforward(&b.zeta().pow(j)).unwrap();
        ensure(lhs == rhs, || format!("case {case}: projection formula at z^{j}"))?;
        // pushforward basis: pi_* z^(e-1) = 1, lower powers vanish, and the
        // tautological relation pushes forward to zero in every degree
        let e = b.sheaf().rank();
        for k in 0..e - 1 {
            ensure(b.pushforward(&b.zeta().pow(k)).unwrap().is_zero(), || format!("case {case}: z^{k}"))?;
        }
        ensure(b.pushforward(&b.zeta().pow(e - 1)).unwrap() == one, || format!("case {case}: fiber"))?;
        let rel = relation(&b);
        for k in 0..=r {
            let pushed = b.pushforward(&(&rel * &b.zeta().pow(k))).unwrap();
            ensure(pushed.is_zero(), || format!("case {case}: relation times z^{k}"))?;
        }
    }
    Ok("1000 random cases".into())
}

fn c10_oracle() -> Check {
    let ellipse = oracle_check(&PlaneCurve::parse("x^2/4 + y^2 - 1", 0, 0).unwrap()).map_err(|e| e.to_string())?;
    let poly = Sparse::<2>::from_nested(&ellipse.elimination.evolute, 1);
    let deg = poly.total_degree().unwrap_or(0) as i64;
    ensure(deg == 6 && deg == curve_closed(2, 0, 0)[0] && deg == trifogli(2, 2), || {
        format!("ellipse evolute has total degree {deg}")
    })?;
    ensure(ellipse.verdict() == Verdict::Match, || "ellipse verdict".into())?;
    let inv = CurveInvariants::new(2, 2, 0, &[0]).unwrap();
    ensure(engine_curve(&inv, 1)? == [6], || "engine conic envelope".into())?;

    let cubic = PlaneCurve::parse("x^3 - 2*y^3 + x*y + 3*x - y + 1", 1, 0).unwrap();
    let cubic = oracle_check(&cubic).map_err(|e| e.to_string())?;
    let deg = Sparse::<2>::from_nested(&cubic.elimination.evolute, 1).total_degree().unwrap_or(0);
    ensure(deg == 18 && cubic.verdict() == Verdict::Match, || format!("cubic evolute degree {deg}"))?;

    let circle = oracle_check(&PlaneCurve::parse("x^2 + y^2 - 1", 0, 0).unwrap()).map_err(|e| e.to_string())?;
    ensure(circle.verdict() == Verdict::Excluded, || format!("circle verdict {:?}", circle.verdict()))?;
    ensure(circle.genericity.through_circular_points, || "circle not flagged as isotropic".into())?;

    let manifest = include_str!("../../elimination/Cargo.toml");
    let mut deps = manifest
        .lines()
        .skip_while(|l| !l.starts_with("[dependencies]"))
        .skip(1)
        .take_while(|l| !l.starts_with('['))
        .filter_map(|l| l.split('=').next().map(str::trim));
    ensure(!deps.any(|k| k == "evolutes"), || "oracle crate depends on the engine".into())?;
    Ok("ellipse 6, cubic 18, circle excluded, oracle crate independent".into())
}

fn c11_salmon_reference() -> Check {
    for d in 2..=6i64 {
        let s = evolutes::closed_forms::salmon_reference(d);
        let want = [2 * d * (d * d - d - 1), d * (d * d - d + 1), 2 * d * (5 * d * d - 14 * d + 11)];
        let got = [int(&s.evolute_class), int(&s.ed_degree), int(&s.umbilics)];
        ensure(got == want, || format!("d = {d}: {got:?} vs {want:?}"))?;
        if d == 2 {
            ensure(got == [4, 6, 12], || format!("quadric values {got:?}"))?;
        }
    }
    Ok("4, 6, 12 at d = 2; d = 2..6".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("twisted cubic 12, 15, 16", c1_twisted_cubic),
        ("quadric surface 12, 24, 32", c2_quadric),
        ("surfaces in P^3, d = 2..10", c3_surfaces),
        ("hypersurfaces vs Trifogli", c4_hypersurfaces),
        ("curve grid vs closed forms", c5_curve_grid),
        ("Salmon consistency", c6_salmon),
        ("osculating hyperplanes", c7_osculating),
        ("Chern closed forms, 100 instances", c8_closed_forms),
        ("algebra properties, 1000 cases", c9_algebra),
        ("elimination oracle", c10_oracle),
        ("Salmon reference values", c11_salmon_reference),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({detail}; {secs:.2} s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} ({detail})", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
