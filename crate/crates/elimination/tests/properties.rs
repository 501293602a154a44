use std::sync::OnceLock;

use evolute_elimination::bivariate::{gcd2, squarefree2};
use evolute_elimination::ring::Ring;
use evolute_elimination::{clear_denominators, oracle_check, parse_curve, PlaneCurve, Sparse, ZPoly2};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn sparse(terms: Vec<((u32, u32), i64)>) -> Sparse<2> {
    Sparse::from_terms(terms.into_iter().map(|((a, b), c)| ([a, b], BigInt::from(c))))
}

fn small_poly(max_deg: u32) -> impl Strategy<Value = Sparse<2>> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), -4i64..=4), 1..5)
        .prop_map(sparse)
        .prop_filter("nonconstant", |p| p.total_degree().unwrap_or(0) > 0)
}

fn nested(p: &Sparse<2>) -> ZPoly2 {
    p.to_nested(1)
}

fn same_up_to_sign(a: &Sparse<2>, b: &Sparse<2>) -> bool {
    a == b || *a == b.neg()
}

// integer content only; the Z[x][y] content would also strip factors in x
fn primitive(p: &Sparse<2>) -> Sparse<2> {
    let content = p.terms().fold(BigInt::from(0), |g, (_, c)| Integer::gcd(&g, c));
    Sparse::from_terms(p.terms().map(|(e, c)| (*e, c / &content)))
}

fn ellipse_evolute() -> &'static Sparse<2> {
    static CELL: OnceLock<Sparse<2>> = OnceLock::new();
    CELL.get_or_init(|| {
        let c = PlaneCurve::parse("x^2/4 + y^2 - 1", 0, 0).unwrap();
        Sparse::<2>::from_nested(&oracle_check(&c).unwrap().elimination.evolute, 1)
    })
}

fn eval_q(p: &Sparse<2>, x: &BigRational, y: &BigRational) -> BigRational {
    p.terms().fold(BigRational::zero(), |acc, (e, c)| {
        acc + BigRational::from_integer(c.clone())
            * num_traits::pow(x.clone(), e[0] as usize)
            * num_traits::pow(y.clone(), e[1] as usize)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_round_trips_through_the_parser(p in small_poly(4)) {
        let back = clear_denominators(&parse_curve(&p.to_text(["x", "y"])).unwrap());
        prop_assert!(same_up_to_sign(&back, &primitive(&p)));
    }

    #[test]
    fn centers_of_curvature_lie_on_the_evolute(t in -40i64..=40, s in 1i64..=9) {
        // rational point of x^2/4 + y^2 = 1 from the parametrization by slope t/s
        let t = BigRational::new(t.into(), s.into());
        let one = BigRational::one();
        let den = &one + &t * &t;
        let two = BigRational::from_integer(2.into());
        let x = &two * (&one - &t * &t) / &den;
        let y = &two * &t / &den;
        let c = PlaneCurve::parse("x^2/4 + y^2 - 1", 0, 0).unwrap();
        let (cx, cy) = c.center_of_curvature(&x, &y).unwrap();
        prop_assert!(eval_q(ellipse_evolute(), &cx, &cy).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn common_factor_divides_the_gcd(a in small_poly(2), b in small_poly(2), c in small_poly(2)) {
        let (na, nb, nc) = (nested(&a), nested(&b), nested(&c));
        let g = gcd2(&na.mul(&nc), &nb.mul(&nc));
        prop_assert!(g.div_exact_poly(&nc.primitive_part()).is_some());
        prop_assert!(na.mul(&nc).div_exact_poly(&g).is_some());
        prop_assert!(nb.mul(&nc).div_exact_poly(&g).is_some());
    }

    #[test]
    fn squarefree_split_multiplies_back(a in small_poly(2), b in small_poly(2)) {
        let f = nested(&a).mul(&nested(&b)).mul(&nested(&b));
        let mut product: ZPoly2 = <ZPoly2 as Ring>::one();
        for (fac, mult) in squarefree2(&f) {
            prop_assert!(mult >= 1);
            for _ in 0..mult {
                product = product.mul(&fac);
            }
        }
        let f = Sparse::<2>::from_nested(&f.primitive_part(), 1);
        prop_assert!(same_up_to_sign(&Sparse::<2>::from_nested(&product, 1), &f));
    }
}
