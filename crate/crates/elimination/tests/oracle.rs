use evolute_elimination::sparse::{VX, VY};
use evolute_elimination::{
    center_of_curvature_system, clear_denominators, eliminate, oracle_check, parse_curve,
    Disposition, EliminationError, PlaneCurve, Sparse, Verdict,
};
use num_bigint::BigInt;
use num_rational::BigRational;

fn curve(src: &str, genus: i64, cusps: i64) -> PlaneCurve {
    PlaneCurve::parse(src, genus, cusps).unwrap()
}

fn int(v: i64) -> Sparse<2> {
    Sparse::constant(BigInt::from(v))
}

/// Reads back a logged factor written in `X`, `Y`.
fn factor_poly(text: &str) -> Sparse<2> {
    clear_denominators(&parse_curve(&text.replace('X', "x").replace('Y', "y")).unwrap())
}

#[test]
fn ellipse_evolute_is_the_lame_sextic() {
    let c = curve("x^2 + 4*y^2 - 4", 0, 0);
    assert!(c.genericity().is_generic());
    let r = oracle_check(&c).unwrap();
    assert_eq!(r.expected_degree, 6);
    assert_eq!(r.degree, 6);
    assert_eq!(r.verdict(), Verdict::Match);
    // (aX)^(2/3) + (bY)^(2/3) = (a^2 - b^2)^(2/3) with a = 2, b = 1, cleared of radicals
    let (x, y) = (Sparse::<2>::var(0), Sparse::<2>::var(1));
    let inner = int(4).mul(&x).mul(&x).add(&y.mul(&y)).sub(&int(9));
    let expected = inner.mul(&inner).mul(&inner).add(&int(972).mul(&x).mul(&x).mul(&y).mul(&y));
    let got = Sparse::<2>::from_nested(&r.elimination.evolute, 1);
    assert!(got == expected || got == expected.neg(), "{}", r.polynomial_text());
}

#[test]
fn ellipse_vertex_center_of_curvature() {
    // vertex (a, 0) of x^2/a^2 + y^2/b^2 = 1 has center ((a^2 - b^2)/a, 0)
    let c = curve("x^2/4 + y^2 - 1", 0, 0);
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    assert_eq!(c.center_of_curvature(&q(2, 1), &q(0, 1)), Some((q(3, 2), q(0, 1))));
    // co-vertex (0, b): center (0, -(a^2 - b^2)/b)
    assert_eq!(c.center_of_curvature(&q(0, 1), &q(1, 1)), Some((q(0, 1), q(-3, 1))));
    let evolute = oracle_check(&c).unwrap().elimination.evolute;
    let on = |x: i64, y: i64| {
        Sparse::<2>::from_nested(&evolute, 1).eval(&BigInt::from(x), &BigInt::from(y))
    };
    // (3/2, 0) scaled: evaluate 2^6 G(3/2, 0) through the homogeneous trick is awkward,
    // so check the integral cusp (0, -3) instead.
    assert_eq!(on(0, -3), BigInt::from(0));
    assert_ne!(on(1, 1), BigInt::from(0));
}

#[test]
fn circle_is_flagged_not_failed() {
    let c = curve("x^2 + y^2 - 1", 0, 0);
    let g = c.genericity();
    assert!(g.through_circular_points);
    assert!(!g.is_generic());
    let r = oracle_check(&c).unwrap();
    assert_eq!(r.verdict(), Verdict::Excluded);
    assert_eq!(r.degree, 0);
    assert!(r
        .elimination
        .factors
        .iter()
        .any(|f| f.disposition == Disposition::Isotropic && f.polynomial.contains("X^2 + Y^2")));
    // every center of curvature is the origin
    let q = |n: i64| BigRational::from_integer(n.into());
    assert_eq!(c.center_of_curvature(&q(1), &q(0)), Some((q(0), q(0))));
}

#[test]
fn line_has_zero_curvature() {
    let c = curve("x", 0, 0);
    assert!(c.genericity().linear);
    let s = center_of_curvature_system(&c).unwrap();
    assert!(s.zero_curvature);
    let r = oracle_check(&c).unwrap();
    assert_eq!(r.degree, 0);
    assert_eq!(r.verdict(), Verdict::Excluded);
}

#[test]
fn invalid_inputs() {
    assert!(matches!(PlaneCurve::parse("7", 0, 0), Err(EliminationError::DegenerateInput(_))));
    assert!(matches!(PlaneCurve::parse("x^2 + * y", 0, 0), Err(EliminationError::Parse(_))));
    assert!(matches!(
        PlaneCurve::parse("(x^2 + y^2 - 1)^2", 0, 0),
        Err(EliminationError::NotSquarefree)
    ));
    assert!(matches!(
        curve("x^2 + 4*y^2 - 4", 0, 0).with_declared_degree(3),
        Err(EliminationError::DegreeMismatch { declared: 3, actual: 2 })
    ));
    assert!(matches!(PlaneCurve::parse("x^2 + y - 1", -1, 0), Err(EliminationError::InvalidInvariants(_))));
}

#[test]
fn normal_line_identity() {
    // Q N = Fy G1 - Fx G2
    let c = curve("x^3 - 2*y^3 + x*y + 3*x - y + 1", 1, 0);
    let s = center_of_curvature_system(&c).unwrap();
    let f = c.equation();
    let (fx, fy) = (f.derivative(0), f.derivative(1));
    let (fxx, fxy, fyy) = (fx.derivative(0), fx.derivative(1), fy.derivative(1));
    let q = fy.mul(&fy).mul(&fxx).sub(&int(2).mul(&fx).mul(&fy).mul(&fxy)).add(&fx.mul(&fx).mul(&fyy));
    let lift = |p: &Sparse<2>| p.embed::<4>([VX, VY]);
    let lhs = lift(&q).mul(&s.normal);
    let rhs = lift(&fy).mul(&s.g1).sub(&lift(&fx).mul(&s.g2));
    assert_eq!(lhs, rhs);
}

fn check_factor_log(src: &str, g: i64) {
    let r = oracle_check(&curve(src, g, 0)).unwrap();
    let e = &r.elimination;
    let mut product = Sparse::constant(e.discriminant_constant.clone());
    for f in &e.factors {
        let p = factor_poly(&f.polynomial);
        assert_eq!(p.total_degree(), Some(f.degree as u32), "{}", f.polynomial);
        for _ in 0..f.multiplicity {
            product = product.mul(&p);
        }
    }
    let disc = Sparse::<2>::from_nested(&e.discriminant, 1);
    assert!(product == disc || product == disc.neg(), "factor log of {src} does not multiply back");
    let evolutes: Vec<_> = e.factors.iter().filter(|f| f.disposition == Disposition::Evolute).collect();
    assert_eq!(evolutes.len(), 1);
    assert_eq!(evolutes[0].degree, r.degree);
}

#[test]
fn factor_log_multiplies_back_to_the_discriminant() {
    check_factor_log("x^2 + 4*y^2 - 4", 0);
    check_factor_log("x^2 + 3*y^2 + x*y - 2*x + y - 5", 0);
    check_factor_log("x^2 - y^2 + 2*x*y + y - 3", 0);
}

#[test]
fn elimination_is_deterministic() {
    let c = curve("2*x^2 + 5*y^2 - x*y + 3*x - 7", 0, 0);
    let s = center_of_curvature_system(&c).unwrap();
    let a = eliminate(&s).unwrap();
    let b = eliminate(&s).unwrap();
    assert_eq!(a.evolute, b.evolute);
    assert_eq!(a.log, b.log);
    assert_eq!(a.degree, 6);
}

#[test]
fn generic_conics_have_sextic_evolutes() {
    for src in ["x^2 + 3*y^2 + x*y - 2*x + y - 5", "x^2 - y^2 + 2*x*y + y - 3", "x^2/9 - y^2/4 - 1"] {
        let r = oracle_check(&curve(src, 0, 0)).unwrap();
        assert_eq!(r.verdict(), Verdict::Match, "{src}: {:?}", r.elimination.log);
        assert_eq!(r.degree, 6);
    }
}

#[test]
fn generic_cubic_has_degree_18() {
    let c = curve("x^3 - 2*y^3 + x*y + 3*x - y + 1", 1, 0);
    assert!(c.genericity().is_generic());
    let r = oracle_check(&c).unwrap();
    assert_eq!(r.expected_degree, 18);
    assert_eq!(r.degree, 18);
    assert_eq!(r.verdict(), Verdict::Match);
    assert!(r.elimination.factors.iter().any(|f| f.disposition == Disposition::Repeated && f.multiplicity == 2));
}

/// Exploratory: a nodal cubic, which is also tangent to the line at infinity
/// (flex at `(0:1:0)`). The node appears as a fixed double foot and is
/// removed before the discriminant; the remaining evolute has degree 6,
/// against 12 from the smooth-curve closed form with g = 0. Recorded only.
#[test]
fn nodal_cubic_is_exploratory() {
    let c = curve("y^2 - x^2*(x + 1)", 0, 0);
    let r = oracle_check(&c).unwrap();
    eprintln!(
        "nodal cubic: degree {} (closed form {}), genericity {:?}, log {:#?}",
        r.degree, r.expected_degree, r.genericity, r.elimination.log
    );
    assert!(r.elimination.log.iter().any(|l| l.contains("x^2") && l.contains("singular feet")));
    assert_eq!(r.verdict(), Verdict::Excluded);
    assert_eq!(r.degree, 6);
}

/// About 3.5 minutes in release; run with `cargo test --release -- --ignored`.
#[test]
#[ignore]
fn generic_quartic_has_degree_36() {
    let c = curve("x^4 + 2*y^4 - 3*x^2*y + x*y^2 - 5*x + 2*y - 1", 3, 0);
    assert!(c.genericity().is_generic());
    let r = oracle_check(&c).unwrap();
    assert_eq!(r.expected_degree, 36);
    assert_eq!(r.degree, 36);
    assert_eq!(r.verdict(), Verdict::Match);
}
