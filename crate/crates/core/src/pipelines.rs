//! Degree computations on concrete bases, each paired with the closed form
//! it should reproduce.

use evolute_elimination::{oracle_check, PlaneCurve, Verdict};
use num_bigint::BigInt;

use crate::bundle::BundleSpace;
use crate::chow::{
    CurveInvariants, CurveModel, HypersurfaceModel, SheafData, SurfaceChernNumbers, SurfaceModel,
    VarietyDescriptor,
};
use crate::closed_forms::{self, LocusDegrees};
use crate::error::EngineError;
use crate::poly::{GradedClass, Rational};
use crate::report::{EnumerativeReport, IdentityCheck, LocusResult};
use crate::thom::{thom_class, ThomProfile};

pub const LOCUS_NAMES: [&str; 4] = ["envelope", "cuspidal_edge", "kappa", "sigma_1111"];

pub const CITE_THOM: &str = "Thom polynomials of Sigma^1, Sigma^{1,1}, Sigma^{1,1,1} in the \
     virtual Chern classes (Porteous; Ronga)";
pub const CITE_GPR: &str = "Thom polynomial of Sigma^{1,1,1,1} (Gaffney, Porteous, Ronga)";
pub const CITE_CURVE: &str = "curve focal loci: envelope 6(d+g-1)-2k0, cuspidal edge \
     3(3d+4g-4-k0), cusps 4(3d+5g-5-k0)";
pub const CITE_TRIFOGLI: &str = "Trifogli: focal locus of a smooth hypersurface, \
     d(d-1)((n-1)(d-1)^(n-2) + 2 sum_(i<=n-2) (d-1)^i)";
pub const CITE_SURFACE: &str = "surface focal loci linear in K^2, c2, KH, H^2; in P^3: \
     2d(d-1)(2d-1), 2d(d-1)(11d-16), 4d(30d^2-97d+78)";
pub const CITE_SALMON: &str = "Salmon: characters of space curves and the evolute, Euclidean \
     distance degree and umbilics of surfaces";
pub const CITE_OSCULATING: &str = "osculating developables: deg D^m = C(m+1,2)(2g-2) + (m+1)d - \
     sum_(i<m)(m-i)k_i; Plücker formula for k_(n-1)";
pub const CITE_RIMANYI: &str = "Thom polynomials in codimensions 5 to 8 (Rimányi)";

pub const FLAG_OUTSIDE: &str = "input outside generic validity: some loci are degenerate or \
     empty and the polynomial formulas need not count them";

fn integral(v: Rational, what: &str) -> Result<BigInt, EngineError> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(EngineError::NonIntegral(format!("degree of {what} came out as {v}")))
    }
}

/// Class on `P(F)` of the `Sigma^{1^k}` locus.
pub fn sigma_class(b: &BundleSpace, k: u32) -> Result<GradedClass, EngineError> {
    let profile = ThomProfile::new(k)?;
    thom_class(profile, &b.virtual_chern(k))
}

fn check_k(b: &BundleSpace, k: u32) -> Result<ThomProfile, EngineError> {
    let profile = ThomProfile::new(k)?;
    if k > b.dim() {
        return Err(EngineError::OutOfRange(format!(
            "Sigma^{{1^{k}}} in P^{}; need k <= n",
            b.dim()
        )));
    }
    Ok(profile)
}

/// Degree of the `(n-k)`-dimensional image of `Sigma^{1^k}` in `P^n`.
pub fn sigma_degree(b: &BundleSpace, k: u32) -> Result<BigInt, EngineError> {
    check_k(b, k)?;
    Ok(sigma_degrees(b, k)?.pop().expect("k >= 1"))
}

/// `pi_*(TP_k z^(n-k))` on the base; its degree is `sigma_degree`.
pub fn sigma_pushforward(b: &BundleSpace, k: u32) -> Result<GradedClass, EngineError> {
    check_k(b, k)?;
    Ok(sigma_pushforwards(b, k)?.pop().expect("k >= 1"))
}

fn sigma_pushforwards(b: &BundleSpace, k: u32) -> Result<Vec<GradedClass>, EngineError> {
    let cbars = b.virtual_chern(k);
    (1..=k)
        .map(|j| {
            let class = thom_class(ThomProfile::new(j)?, &cbars)?;
            b.pushforward(&(&class * &b.zeta().pow(b.dim() - j)))
        })
        .collect()
}

/// `sigma_degree(b, j)` for `j = 1..=k`, sharing the virtual classes.
pub fn sigma_degrees(b: &BundleSpace, k: u32) -> Result<Vec<BigInt>, EngineError> {
    check_k(b, k)?;
    sigma_pushforwards(b, k)?
        .iter()
        .enumerate()
        .map(|(j, c)| integral(b.base().integrate(c)?, &format!("Sigma^(1^{})", j + 1)))
        .collect()
}

fn locus_rows(
    report: &mut EnumerativeReport,
    b: &BundleSpace,
    closed: impl Fn(u32) -> Option<BigInt>,
) -> Result<Vec<BigInt>, EngineError> {
    let n = b.dim();
    let r = b.base().dim();
    let top = n.min(4);
    let degrees = sigma_degrees(b, top)?;
    report.cite(CITE_THOM);
    if top == 4 {
        report.cite(CITE_GPR);
    }
    for (j, deg) in (1..=top).zip(&degrees) {
        let mut row = LocusResult::new(LOCUS_NAMES[j as usize - 1], j, deg.clone(), closed(j));
        if j == n - r {
            row = row.with_role("evolute");
        }
        report.results.push(row);
    }
    Ok(degrees)
}

fn evolute_codimension(base: &VarietyDescriptor) -> Result<(), EngineError> {
    let k = base.ambient() - base.dim();
    if k > 4 {
        return Err(EngineError::UnsupportedCodimension { k });
    }
    Ok(())
}

fn echo_curve(report: &mut EnumerativeReport, inv: &CurveInvariants) {
    report.echo("n", inv.n);
    report.echo("d", inv.d);
    report.echo("g", inv.g);
    let ks: Vec<String> = inv.k.iter().map(i64::to_string).collect();
    report.echo("k", ks.join(","));
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Focal loci of a curve from its Euclidean normal bundle.
pub fn curve_report(inv: &CurveInvariants) -> Result<EnumerativeReport, EngineError> {
    let model = CurveModel::new(inv)?;
    evolute_codimension(&model.variety)?;
    let b = BundleSpace::new(&model.variety, &model.normal)?;
    let closed = closed_forms::curve(inv);
    let mut report = EnumerativeReport::new("curve");
    echo_curve(&mut report, inv);
    report.cite(CITE_CURVE);
    let n = inv.n;
    let degrees = locus_rows(&mut report, &b, |k| match k {
        1 | 2 => closed.get(k).cloned(),
        3 if n >= 3 => closed.get(3).cloned(),
        _ => None,
    })?;
    if inv.d == 1 || closed.cuspidal_edge.sign() == num_bigint::Sign::Minus {
        report.flag(FLAG_OUTSIDE);
    }
    if n == 3 {
        report.identities.push(curve_identity(inv, &degrees));
        let (a, b) = salmon_identities(inv, &degrees[0], &degrees[1]);
        report.identities.extend([a, b]);
        report.cite(CITE_SALMON);
    }
    Ok(report)
}

fn curve_identity(inv: &CurveInvariants, degrees: &[BigInt]) -> IdentityCheck {
    // the cuspidal edge has the genus of the curve
    IdentityCheck::new(
        "envelope = 2 cuspidal_edge + 2g - 2 - kappa",
        degrees[0].clone(),
        2 * &degrees[1] + big(2 * inv.g - 2) - &degrees[2],
    )
}

/// At `n = 3`: engine envelope and cuspidal degrees against the identity.
pub fn curve_identity_check(inv: &CurveInvariants) -> Result<IdentityCheck, EngineError> {
    require_space_curve(inv)?;
    let model = CurveModel::new(inv)?;
    let b = BundleSpace::new(&model.variety, &model.normal)?;
    Ok(curve_identity(inv, &sigma_degrees(&b, 3)?))
}

fn require_space_curve(inv: &CurveInvariants) -> Result<(), EngineError> {
    if inv.n != 3 {
        return Err(EngineError::OutOfRange(format!(
            "space-curve identities need n = 3, got n = {}",
            inv.n
        )));
    }
    Ok(())
}

fn salmon_identities(
    inv: &CurveInvariants,
    envelope: &BigInt,
    cuspidal: &BigInt,
) -> (IdentityCheck, IdentityCheck) {
    let ch = closed_forms::salmon_characters(inv);
    (
        IdentityCheck::new("3m + n_S + theta = envelope", 3 * &ch.m + &ch.n_s + &ch.theta, envelope.clone()),
        IdentityCheck::new("5m + alpha = cuspidal_edge", 5 * &ch.m + &ch.alpha, cuspidal.clone()),
    )
}

/// Salmon's characters of a space curve and the two identities, checked
/// against both the closed forms and the engine.
pub fn salmon_consistency(inv: &CurveInvariants) -> Result<EnumerativeReport, EngineError> {
    require_space_curve(inv)?;
    let closed = closed_forms::curve(inv);
    let model = CurveModel::new(inv)?;
    let b = BundleSpace::new(&model.variety, &model.normal)?;
    let engine = sigma_degrees(&b, 2)?;
    let ch = closed_forms::salmon_characters(inv);
    let mut report = EnumerativeReport::new("salmon-curve");
    echo_curve(&mut report, inv);
    report.cite(CITE_SALMON);
    report.cite(CITE_CURVE);
    let (a, b) = salmon_identities(inv, &closed.envelope, &closed.cuspidal_edge);
    let (ea, eb) = salmon_identities(inv, &engine[0], &engine[1]);
    for (mut check, suffix) in [(a, ""), (b, ""), (ea, " (engine)"), (eb, " (engine)")] {
        check.name.push_str(suffix);
        report.identities.push(check);
    }
    for (k, v) in [("m", &ch.m), ("n_S", &ch.n_s), ("theta", &ch.theta), ("alpha", &ch.alpha), ("k2", &ch.k2)] {
        report.values.insert(k.into(), v.to_string());
    }
    Ok(report)
}

/// Classical reference numbers for a general surface of degree `d` in `P^3`.
pub fn salmon_reference_report(d: i64) -> Result<EnumerativeReport, EngineError> {
    if d < 2 {
        return Err(EngineError::InvalidInvariants(format!("surface degree {d} < 2")));
    }
    let s = closed_forms::salmon_reference(d);
    let mut report = EnumerativeReport::new("salmon-surface");
    report.echo("d", d);
    report.cite(CITE_SALMON);
    report.values.insert("evolute_class".into(), s.evolute_class.to_string());
    report.values.insert("ed_degree".into(), s.ed_degree.to_string());
    report.values.insert("umbilics".into(), s.umbilics.to_string());
    Ok(report)
}

/// Focal loci of a surface with the given Chern numbers in `P^n`.
pub fn surface_report(n: u32, numbers: &SurfaceChernNumbers) -> Result<EnumerativeReport, EngineError> {
    let model = SurfaceModel::new(n, numbers)?;
    evolute_codimension(&model.variety)?;
    let b = BundleSpace::new(&model.variety, &model.normal)?;
    let closed = closed_forms::surface(numbers);
    let mut report = EnumerativeReport::new("surface");
    report.echo("n", n);
    report.echo("K2", numbers.k2);
    report.echo("c2", numbers.c2);
    report.echo("KH", numbers.kh);
    report.echo("H2", numbers.h2);
    report.cite(CITE_SURFACE);
    locus_rows(&mut report, &b, |k| closed.get(k).cloned())?;
    if numbers.h2 <= 1 {
        report.flag(FLAG_OUTSIDE);
    }
    Ok(report)
}

/// A smooth surface of degree `d` in `P^3`; adds the degree polynomials and
/// Salmon's reference numbers.
pub fn surface_in_p3_report(d: i64) -> Result<EnumerativeReport, EngineError> {
    if d < 1 {
        return Err(EngineError::InvalidInvariants(format!("degree {d} < 1")));
    }
    let mut report = surface_report(3, &SurfaceChernNumbers::in_p3(d))?;
    report.echo("d", d);
    let poly: LocusDegrees = closed_forms::surface_in_p3(d);
    for k in 1..=3 {
        let engine = report.results[k - 1].engine_degree.clone();
        let name = format!("{} = degree polynomial in d", LOCUS_NAMES[k - 1]);
        report.identities.push(IdentityCheck::new(&name, engine, poly.get(k as u32).unwrap().clone()));
    }
    if d >= 2 {
        let s = closed_forms::salmon_reference(d);
        report.cite(CITE_SALMON);
        report.values.insert("evolute_class".into(), s.evolute_class.to_string());
        report.values.insert("ed_degree".into(), s.ed_degree.to_string());
        report.values.insert("umbilics".into(), s.umbilics.to_string());
    }
    Ok(report)
}

/// Focal loci of a smooth hypersurface of degree `d` in `P^n`. The evolute
/// is the envelope (`k = 1`).
pub fn hypersurface_report(n: u32, d: i64) -> Result<EnumerativeReport, EngineError> {
    let model = HypersurfaceModel::new(n, d)?;
    let b = BundleSpace::new(&model.variety, &model.normal)?;
    let mut report = EnumerativeReport::new("hypersurface");
    report.echo("n", n);
    report.echo("d", d);
    report.cite(CITE_TRIFOGLI);
    let trifogli = closed_forms::trifogli(n, d);
    let degrees = locus_rows(&mut report, &b, |k| (k == 1).then(|| trifogli.clone()))?;

    let alt = BundleSpace::new(&model.variety, &model.normal_from_principal_parts()?)?;
    let alt_degrees = sigma_degrees(&alt, n.min(4))?;
    for (j, (a, b)) in degrees.iter().zip(&alt_degrees).enumerate() {
        let name = format!("{} via principal parts", LOCUS_NAMES[j]);
        report.identities.push(IdentityCheck::new(&name, a.clone(), b.clone()));
    }
    if n == 2 {
        let g = (d - 1) * (d - 2) / 2;
        let plane = closed_forms::curve(&CurveInvariants::new(2, d, g, &[0])?);
        report.cite(CITE_CURVE);
        report.identities.push(IdentityCheck::new(
            "Trifogli = plane curve envelope",
            trifogli,
            plane.envelope,
        ));
    }
    if d == 1 {
        report.flag(FLAG_OUTSIDE);
    }
    Ok(report)
}

/// Osculating developables, the dual, and the envelope of osculating
/// hyperplanes of a curve.
pub fn osculating_report(inv: &CurveInvariants) -> Result<EnumerativeReport, EngineError> {
    let model = CurveModel::new(inv)?;
    let x = &model.variety;
    let n = inv.n;
    let mut report = EnumerativeReport::new("osculating");
    echo_curve(&mut report, inv);
    report.cite(CITE_OSCULATING);

    let mut developable = vec![big(inv.d)];
    for m in 1..n {
        let c1 = model.osculating_bundle(m)?.chern_class(1);
        let deg = integral(x.integrate(&c1)?, "osculating developable")?;
        report.results.push(LocusResult::new(
            "osculating_developable",
            m,
            deg.clone(),
            Some(closed_forms::osculating_developable(inv, m)),
        ));
        developable.push(deg);
    }
    report.results.push(LocusResult::new(
        "dual_variety",
        1,
        developable[1].clone(),
        Some(closed_forms::curve_rank(inv)),
    ));

    // c1(P^n) without its S_(n-1) term: V -> P^n drops rank at k_(n-1) points.
    let mut c1 = &x.class("K")?.scale_int(n as i64 * (n as i64 + 1) / 2)
        + &x.class("H")?.scale_int(n as i64 + 1);
    for i in 0..n - 1 {
        c1 = &c1 - &x.class(&format!("S{i}"))?.scale_int((n - i) as i64);
    }
    let top = integral(x.integrate(&c1)?, "hyperosculating points")?;
    report.results.push(LocusResult::new(
        "hyperosculating_points",
        n - 1,
        top.clone(),
        Some(big(inv.top_stationary())),
    ));

    let hyperplanes = SheafData::new(n, model.osculating_bundle(n - 1)?.total_chern().clone())?;
    let b = BundleSpace::new(x, &hyperplanes)?;
    let env = sigma_degree(&b, 1)?;
    report.cite(CITE_THOM);
    report.results.push(LocusResult::new(
        "osculating_hyperplane_envelope",
        1,
        env.clone(),
        Some(closed_forms::osculating_hyperplane_envelope(inv)),
    ));
    report.identities.push(IdentityCheck::new(
        "hyperplane envelope = deg D^(n-2) + k_(n-1)",
        env,
        &developable[n as usize - 2] + &top,
    ));
    report.flag(
        "the hyperplane envelope is compared with D^(n-2) plus the hyperosculating \
         hyperplanes by degree only",
    );
    Ok(report)
}

/// Vertices of a curve in `P^n`: the degree of `Sigma^{1^n}` on its normal bundle.
pub fn vertices_count(inv: &CurveInvariants) -> Result<BigInt, EngineError> {
    if inv.n > 4 {
        return Err(EngineError::UnsupportedCodimension { k: inv.n });
    }
    let model = CurveModel::new(inv)?;
    let b = BundleSpace::new(&model.variety, &model.normal)?;
    sigma_degree(&b, inv.n)
}

pub const CITE_ORACLE: &str = "plane evolute by elimination: normal-line resultant, foot \
     discriminant, extraneous factors stripped and logged";

/// Runs the elimination oracle on a plane curve and compares its degree with
/// the curve closed form, Trifogli at `n = 2`, and the engine.
pub fn oracle_report(
    equation: &str,
    g: i64,
    k0: i64,
    declared_degree: Option<u32>,
) -> Result<EnumerativeReport, EngineError> {
    let mut curve = PlaneCurve::parse(equation, g, k0)?;
    if let Some(d) = declared_degree {
        curve = curve.with_declared_degree(d)?;
    }
    let result = oracle_check(&curve)?;
    let d = curve.degree() as i64;
    let mut report = EnumerativeReport::new("oracle");
    report.echo("curve", &result.curve);
    report.echo("d", d);
    report.echo("g", g);
    report.echo("k0", k0);
    report.cite(CITE_ORACLE);
    report.cite(CITE_CURVE);
    let oracle = big(result.degree as i64);
    let excluded = result.verdict() == Verdict::Excluded;
    let closed = (!excluded).then(|| big(result.expected_degree));
    report.results.push(LocusResult::new("evolute", 1, oracle.clone(), closed).with_role("oracle"));
    if excluded {
        for reason in result.genericity.reasons() {
            report.flag(reason);
        }
        report.flag("excluded: general-position hypotheses fail, the degree is not compared");
    } else {
        let inv = CurveInvariants::new(2, d, g, &[k0])?;
        let engine = curve_report(&inv)?.results[0].engine_degree.clone();
        report.identities.push(IdentityCheck::new("oracle = engine envelope", oracle.clone(), engine));
        if k0 == 0 && 2 * g == (d - 1) * (d - 2) {
            report.cite(CITE_TRIFOGLI);
            report.identities.push(IdentityCheck::new(
                "oracle = Trifogli at n = 2",
                oracle,
                closed_forms::trifogli(2, d),
            ));
        }
    }
    for line in &result.elimination.log {
        report.flag(&format!("elimination: {line}"));
    }
    report.evolute_polynomial = Some(result.polynomial_text());
    Ok(report)
}

/// `(sum cbar_i) c(T_P(F))` against `(1 + z)^(n+1)` through degree `up_to`.
pub fn virtual_product_check(b: &BundleSpace, up_to: u32) -> bool {
    let mut total = GradedClass::one(b.table());
    for c in b.virtual_chern(up_to) {
        total = &total + &c;
    }
    let product = &total * &b.tangent_chern();
    let target = b.target_tangent_chern();
    (0..=up_to).all(|i| product.homogeneous_part(i) == target.homogeneous_part(i))
}
