//! Evolutes of plane curves by elimination.
//!
//! For an implicit curve `F(x, y) = 0` the center of curvature at a smooth
//! point is
//!
//! ```text
//! (X, Y) = (x, y) - |grad F|^2 / Q * grad F,
//! Q = Fy^2 Fxx - 2 Fx Fy Fxy + Fx^2 Fyy.
//! ```
//!
//! The evolute is recovered as the envelope of the normal lines
//! `N = (X - x) Fy - (Y - y) Fx`: eliminate `y` with `Res_y(F, N)`, which is the
//! polynomial in `x` whose roots are the feet of the normals through `(X, Y)`,
//! then take its discriminant in `x`. Centers of curvature are the simple
//! component of that discriminant. Pairs of curve points sharing an
//! `x`-coordinate give a doubled extraneous component, which the squarefree
//! decomposition separates off.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bivariate::{gcd2, squarefree2};
use crate::error::EliminationError;
use crate::linalg::{bareiss_determinant, integral_poly, interpolate, sylvester};
use crate::parse::{clear_denominators, parse_curve};
use crate::poly::{swap_vars, total_degree, Poly, ZPoly, ZPoly2};
use crate::ring::Ring;
use crate::sparse::{to_nested4, Nested3, Sparse, CX, CY, VX, VY};

/// An affine plane curve with the invariants the closed-form degree needs.
#[derive(Clone, Debug)]
pub struct PlaneCurve {
    equation: Sparse<2>,
    degree: u32,
    genus: i64,
    cusps: i64,
}

impl PlaneCurve {
    pub fn new(equation: Sparse<2>, genus: i64, cusps: i64) -> Result<Self, EliminationError> {
        let degree = equation
            .total_degree()
            .ok_or_else(|| EliminationError::DegenerateInput("zero polynomial".into()))?;
        if degree == 0 {
            return Err(EliminationError::DegenerateInput("constant polynomial".into()));
        }
        if genus < 0 || cusps < 0 {
            return Err(EliminationError::InvalidInvariants(format!(
                "genus {genus} and cusp count {cusps} must be non-negative"
            )));
        }
        let by_y = equation.to_nested(1);
        if !by_y.content().is_squarefree() || !by_y.primitive_part().is_squarefree() {
            return Err(EliminationError::NotSquarefree);
        }
        Ok(PlaneCurve { equation, degree, genus, cusps })
    }

    /// Parse `src` (variables `x`, `y`, rational coefficients).
    pub fn parse(src: &str, genus: i64, cusps: i64) -> Result<Self, EliminationError> {
        Self::new(clear_denominators(&parse_curve(src)?), genus, cusps)
    }

    pub fn with_declared_degree(self, declared: u32) -> Result<Self, EliminationError> {
        if declared != self.degree {
            return Err(EliminationError::DegreeMismatch { declared, actual: self.degree });
        }
        Ok(self)
    }

    pub fn equation(&self) -> &Sparse<2> {
        &self.equation
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn cusps(&self) -> i64 {
        self.cusps
    }

    /// `6(d + g - 1) - 2 k0`, the degree the evolute should have.
    pub fn expected_evolute_degree(&self) -> i64 {
        6 * (self.degree as i64 + self.genus - 1) - 2 * self.cusps
    }

    pub fn genericity(&self) -> Genericity {
        let top = self.equation.homogeneous_part(self.degree);
        // top(1, i): powers of i cycle through 1, i, -1, -i.
        let (mut re, mut im) = (BigInt::default(), BigInt::default());
        for (e, c) in top.terms() {
            match e[1] % 4 {
                0 => re += c,
                1 => im += c,
                2 => re -= c,
                _ => im -= c,
            }
        }
        let through_circular_points = Zero::is_zero(&re) && Zero::is_zero(&im);

        // Points at infinity are the roots of top(x, 1), plus x-direction
        // multiplicity d - deg top(x, 1) at (1 : 0 : 0).
        let dehom: ZPoly = Poly::new({
            let mut c = vec![BigInt::default(); self.degree as usize + 1];
            for (e, v) in top.terms() {
                c[e[0] as usize] += v;
            }
            c
        });
        let at_x_infinity = self.degree as usize - dehom.degree().unwrap_or(0);
        let tangent_to_line_at_infinity = at_x_infinity >= 2 || !dehom.is_squarefree();

        Genericity {
            through_circular_points,
            tangent_to_line_at_infinity,
            linear: self.degree == 1,
        }
    }

    /// Center of curvature at a rational point of the curve, `None` where the
    /// curvature vanishes or the point is singular.
    pub fn center_of_curvature(
        &self,
        x: &BigRational,
        y: &BigRational,
    ) -> Option<(BigRational, BigRational)> {
        let eval = |p: &Sparse<2>| eval_rational(p, x, y);
        let f = &self.equation;
        let (fx, fy) = (f.derivative(0), f.derivative(1));
        let (gx, gy) = (eval(&fx), eval(&fy));
        let q = eval(&curvature_form(f));
        if q.is_zero() {
            return None;
        }
        let norm = &gx * &gx + &gy * &gy;
        Some((x - &gx * &norm / &q, y - &gy * &norm / &q))
    }
}

fn eval_rational(p: &Sparse<2>, x: &BigRational, y: &BigRational) -> BigRational {
    p.terms()
        .map(|(e, c)| {
            BigRational::from_integer(c.clone())
                * num_traits::pow(x.clone(), e[0] as usize)
                * num_traits::pow(y.clone(), e[1] as usize)
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `Fy^2 Fxx - 2 Fx Fy Fxy + Fx^2 Fyy`
fn curvature_form(f: &Sparse<2>) -> Sparse<2> {
    let (fx, fy) = (f.derivative(0), f.derivative(1));
    let (fxx, fxy, fyy) = (fx.derivative(0), fx.derivative(1), fy.derivative(1));
    fy.mul(&fy)
        .mul(&fxx)
        .sub(&fx.mul(&fy).mul(&fxy).scale(&BigInt::from(2)))
        .add(&fx.mul(&fx).mul(&fyy))
}

/// Position of the curve relative to the line at infinity and the circular points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Genericity {
    /// The curve passes through `(1 : ±i : 0)`; circles do.
    pub through_circular_points: bool,
    pub tangent_to_line_at_infinity: bool,
    pub linear: bool,
}

impl Genericity {
    pub fn is_generic(&self) -> bool {
        !(self.through_circular_points || self.tangent_to_line_at_infinity || self.linear)
    }

    pub fn reasons(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.through_circular_points {
            out.push("curve passes through the circular points at infinity (isotropic conic genericity violated)");
        }
        if self.tangent_to_line_at_infinity {
            out.push("curve is not transverse to the line at infinity");
        }
        if self.linear {
            out.push("curve is a line (zero curvature, no evolute)");
        }
        out
    }
}

/// The equations `F = 0`, `G1 = 0`, `G2 = 0` in `(x, y, X, Y)` whose solutions
/// project to centers of curvature.
#[derive(Clone, Debug)]
pub struct CurvatureSystem {
    pub curve: Sparse<4>,
    /// `Q (X - x) + Fx (Fx^2 + Fy^2)`
    pub g1: Sparse<4>,
    /// `Q (Y - y) + Fy (Fx^2 + Fy^2)`
    pub g2: Sparse<4>,
    /// `(X - x) Fy - (Y - y) Fx`; satisfies `Q N = Fy G1 - Fx G2`.
    pub normal: Sparse<4>,
    pub zero_curvature: bool,
}

pub fn center_of_curvature_system(curve: &PlaneCurve) -> Result<CurvatureSystem, EliminationError> {
    let f = curve.equation();
    let (fx, fy) = (f.derivative(0), f.derivative(1));
    if fx.is_zero() && fy.is_zero() {
        return Err(EliminationError::DegenerateInput("gradient vanishes identically".into()));
    }
    let q = curvature_form(f);
    let lift = |p: &Sparse<2>| p.embed::<4>([VX, VY]);
    let (f4, fx4, fy4, q4) = (lift(f), lift(&fx), lift(&fy), lift(&q));
    let dx = Sparse::<4>::var(CX).sub(&Sparse::var(VX));
    let dy = Sparse::<4>::var(CY).sub(&Sparse::var(VY));
    let norm = fx4.mul(&fx4).add(&fy4.mul(&fy4));
    Ok(CurvatureSystem {
        g1: q4.mul(&dx).add(&fx4.mul(&norm)),
        g2: q4.mul(&dy).add(&fy4.mul(&norm)),
        normal: dx.mul(&fy4).sub(&dy.mul(&fx4)),
        curve: f4,
        zero_curvature: q.is_zero(),
    })
}

/// Why a factor of the discriminant was kept or removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Disposition {
    Evolute,
    /// Depends on one coordinate only.
    CoordinateOnly,
    /// Appears with multiplicity above one (pairs of feet sharing a coordinate).
    Repeated,
    /// Union of isotropic lines.
    Isotropic,
}

#[derive(Clone, Debug)]
pub struct FactorLog {
    pub polynomial: String,
    pub degree: usize,
    pub multiplicity: usize,
    pub disposition: Disposition,
}

#[derive(Clone, Debug)]
pub struct Elimination {
    /// Evolute equation in `Z[X][Y]`, outer variable `Y`.
    pub evolute: ZPoly2,
    pub degree: usize,
    /// `Res_y(F, N)` as a polynomial in `x` over `Z[X][Y]`.
    pub foot_polynomial: Nested3,
    /// Discriminant in `x` of the foot polynomial.
    pub discriminant: ZPoly2,
    pub discriminant_constant: BigInt,
    pub factors: Vec<FactorLog>,
    pub log: Vec<String>,
}

impl Elimination {
    pub fn evolute_text(&self) -> String {
        bivariate_text(&self.evolute)
    }
}

/// Canonical text of a polynomial in `Z[X][Y]` with positive leading term.
pub fn bivariate_text(p: &ZPoly2) -> String {
    let s = Sparse::<2>::from_nested(p, 1);
    let lead_negative = s
        .terms()
        .max_by(|(a, _), (b, _)| (a[0] + a[1], a[0]).cmp(&(b[0] + b[1], b[0])))
        .is_some_and(|(_, c)| c.is_negative());
    let s = if lead_negative { s.neg() } else { s };
    s.to_text(["X", "Y"])
}

fn d_dx(p: &ZPoly2) -> ZPoly2 {
    p.map_coeffs(|c| c.derivative())
}

fn lift_x(p: &ZPoly) -> ZPoly2 {
    Poly::constant(p.clone())
}

fn lift_y(p: &ZPoly) -> ZPoly2 {
    p.map_coeffs(|c| Poly::constant(c.clone()))
}

/// Eliminate `(x, y)` from the system, returning the evolute equation with
/// every removed factor logged.
pub fn eliminate(system: &CurvatureSystem) -> Result<Elimination, EliminationError> {
    let mut log = Vec::new();
    let mut factors = Vec::new();

    let f4 = to_nested4(&system.curve);
    let n4 = to_nested4(&system.normal);
    let mut feet: Nested3 = f4.resultant(&n4);
    if feet.is_zero() {
        return Err(EliminationError::Inconclusive("Res_y(F, N) vanishes identically".into()));
    }
    let common = feet.content();
    if !common.is_constant() {
        log.push(format!(
            "removed factor {} common to all coefficients of Res_y(F, N)",
            bivariate_text(&common)
        ));
        feet = feet.div_exact_scalar(&common).expect("content divides");
    }
    let fixed = fixed_feet(&feet);
    if fixed.degree().unwrap_or(0) > 0 {
        let text = Sparse::<2>::from_nested(&lift_x(&fixed), 1).to_text(["x", "y"]);
        log.push(format!("removed factor {text} of Res_y(F, N) free of X and Y (singular feet)"));
        let lifted: Nested3 = fixed.map_coeffs(|c| Poly::constant(Poly::constant(c.clone())));
        feet = feet.div_exact_poly(&lifted).expect("fixed-feet factor divides");
    }
    let m = feet.degree().unwrap_or(0);
    log.push(format!("Res_y(F, N) has degree {m} in x"));

    let discriminant = if m <= 1 {
        Poly::one()
    } else {
        foot_discriminant(&feet, m)?
    };
    if discriminant.is_zero() {
        return Err(EliminationError::Inconclusive(
            "discriminant of the foot polynomial vanishes identically".into(),
        ));
    }
    let disc_degree = total_degree(&discriminant).unwrap_or(0);
    log.push(format!("discriminant in x has total degree {disc_degree}"));

    // Factors in one coordinate only.
    let x_content = discriminant.content();
    let discriminant_constant = x_content.content();
    let x_only = x_content.primitive_part();
    let y_only = swap_vars(&discriminant).content().primitive_part();
    for (p, lift, name) in [(&x_only, lift_x as fn(&ZPoly) -> ZPoly2, "X"), (&y_only, lift_y, "Y")] {
        for (fac, mult) in p.squarefree_decomposition() {
            let fac2 = lift(&fac);
            factors.push(FactorLog {
                polynomial: bivariate_text(&fac2),
                degree: fac.degree().unwrap_or(0),
                multiplicity: mult,
                disposition: Disposition::CoordinateOnly,
            });
            log.push(format!(
                "stripped factor ({})^{mult} depending on {name} only",
                bivariate_text(&fac2)
            ));
        }
    }
    let core = discriminant
        .div_exact_poly(&lift_x(&x_only))
        .and_then(|p| p.div_exact_poly(&lift_y(&y_only)))
        .expect("coordinate contents divide the discriminant")
        .primitive_part();

    let mut simple = Poly::one();
    for (fac, mult) in squarefree2(&core) {
        let degree = total_degree(&fac).unwrap_or(0);
        if mult == 1 {
            simple = fac;
        } else {
            log.push(format!("stripped repeated factor of degree {degree} with multiplicity {mult}"));
            factors.push(FactorLog {
                polynomial: bivariate_text(&fac),
                degree,
                multiplicity: mult,
                disposition: Disposition::Repeated,
            });
        }
    }

    // Isotropic lines are exactly the factors p with p | (p*lap(p) - |grad p|^2).
    let (sx, sy) = (d_dx(&simple), simple.derivative());
    let laplacian = d_dx(&sx).add(&sy.derivative());
    let w = simple.mul(&laplacian).sub(&sx.mul(&sx)).sub(&sy.mul(&sy));
    let isotropic = if w.is_zero() { simple.clone() } else { gcd2(&simple, &w) };
    let evolute = if total_degree(&isotropic).unwrap_or(0) > 0 {
        let degree = total_degree(&isotropic).unwrap_or(0);
        log.push(format!(
            "stripped isotropic-line factor {} of degree {degree}",
            bivariate_text(&isotropic)
        ));
        factors.push(FactorLog {
            polynomial: bivariate_text(&isotropic),
            degree,
            multiplicity: 1,
            disposition: Disposition::Isotropic,
        });
        simple.div_exact_poly(&isotropic).expect("gcd divides").primitive_part()
    } else {
        simple
    };
    let degree = total_degree(&evolute).unwrap_or(0);
    if degree > 0 {
        factors.push(FactorLog {
            polynomial: bivariate_text(&evolute),
            degree,
            multiplicity: 1,
            disposition: Disposition::Evolute,
        });
    }
    log.push(format!("evolute has total degree {degree}"));

    Ok(Elimination {
        evolute,
        degree,
        foot_polynomial: feet,
        discriminant,
        discriminant_constant,
        factors,
        log,
    })
}

/// Largest factor of the foot polynomial depending on `x` alone: feet that
/// stay put as the center moves, i.e. singular points of the curve.
fn fixed_feet(feet: &Nested3) -> ZPoly {
    let len = feet.coeffs().len();
    let mut columns: BTreeMap<(usize, usize), Vec<BigInt>> = BTreeMap::new();
    for (i, in_y) in feet.coeffs().iter().enumerate() {
        for (b, in_x) in in_y.coeffs().iter().enumerate() {
            for (a, c) in in_x.coeffs().iter().enumerate() {
                if !Zero::is_zero(c) {
                    columns.entry((b, a)).or_insert_with(|| vec![BigInt::default(); len])[i] = c.clone();
                }
            }
        }
    }
    let mut g: ZPoly = Poly::zero();
    for column in columns.into_values() {
        g = g.gcd_poly(&Poly::new(column));
        if g.degree() == Some(0) {
            break;
        }
    }
    g.primitive_part()
}

/// Discriminant in `x` of `feet` (degree `m >= 2`), computed by evaluating
/// `Res_x(R, R')` on a grid of integer centers, interpolating, and dividing
/// by the leading coefficient.
fn foot_discriminant(feet: &Nested3, m: usize) -> Result<ZPoly2, EliminationError> {
    let deg_y = feet.coeffs().iter().filter_map(|c| c.degree()).max().unwrap_or(0);
    let deg_x = feet
        .coeffs()
        .iter()
        .flat_map(|c| c.coeffs().iter().filter_map(|p| p.degree()))
        .max()
        .unwrap_or(0);
    let bound_x = (2 * m - 1) * deg_x;
    let bound_y = (2 * m - 1) * deg_y;
    let nodes = |bound: usize| -> Vec<BigInt> {
        (0..=bound).map(|i| BigInt::from(i as i64 - (bound as i64) / 2)).collect()
    };
    let xs = nodes(bound_x);
    let ys = nodes(bound_y);

    // values[j][i] = Res(R, R') at (X, Y) = (xs[i], ys[j])
    let mut rows_in_x: Vec<Vec<BigRational>> = Vec::with_capacity(ys.len());
    for y in &ys {
        // Specialize Y first; each x-coefficient becomes a polynomial in X.
        let at_y: Vec<ZPoly> = feet
            .coeffs()
            .iter()
            .map(|c| {
                let mut acc = Poly::zero();
                for p in c.coeffs().iter().rev() {
                    acc = acc.mul(&Poly::constant(y.clone())).add(p);
                }
                acc
            })
            .collect();
        let values: Vec<BigRational> = xs
            .iter()
            .map(|x| {
                let r: Vec<BigInt> = at_y.iter().map(|p| p.eval(x)).collect();
                let dr: Vec<BigInt> = r
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, c)| c * BigInt::from(k))
                    .collect();
                BigRational::from_integer(bareiss_determinant(sylvester(&r, m, &dr, m - 1)))
            })
            .collect();
        rows_in_x.push(interpolate(&xs, &values));
    }
    let mut by_y: Vec<ZPoly> = vec![Poly::zero(); bound_y + 1];
    let mut x_coeffs: Vec<Vec<BigInt>> = vec![vec![BigInt::default(); bound_x + 1]; bound_y + 1];
    for e in 0..=bound_x {
        let column: Vec<BigRational> = rows_in_x.iter().map(|row| row[e].clone()).collect();
        let in_y = integral_poly(&interpolate(&ys, &column)).ok_or_else(|| {
            EliminationError::Inconclusive("interpolated resultant is not integral".into())
        })?;
        for (t, c) in in_y.coeffs().iter().enumerate() {
            x_coeffs[t][e] = c.clone();
        }
    }
    for (t, row) in x_coeffs.into_iter().enumerate() {
        by_y[t] = Poly::new(row);
    }
    let res: ZPoly2 = Poly::new(by_y);
    res.div_exact_poly(&feet.lc()).ok_or_else(|| {
        EliminationError::Inconclusive("leading coefficient does not divide Res(R, R')".into())
    })
}

/// Outcome of one oracle run.
#[derive(Clone, Debug)]
pub struct EvoluteResult {
    pub curve: String,
    pub degree: usize,
    pub expected_degree: i64,
    pub genericity: Genericity,
    pub elimination: Elimination,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    /// Input outside the general-position hypotheses; not a failure.
    Excluded,
}

impl EvoluteResult {
    pub fn matches(&self) -> bool {
        self.degree as i64 == self.expected_degree
    }

    pub fn verdict(&self) -> Verdict {
        if !self.genericity.is_generic() {
            Verdict::Excluded
        } else if self.matches() {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }

    pub fn polynomial_text(&self) -> String {
        self.elimination.evolute_text()
    }
}

/// Full pipeline: system, elimination, comparison with `6(d + g - 1) - 2 k0`.
pub fn oracle_check(curve: &PlaneCurve) -> Result<EvoluteResult, EliminationError> {
    let genericity = curve.genericity();
    let system = center_of_curvature_system(curve)?;
    let elimination = if system.zero_curvature {
        let mut log = vec!["curvature form vanishes identically; no evolute".to_string()];
        log.extend(genericity.reasons().iter().map(|r| r.to_string()));
        Elimination {
            evolute: Poly::one(),
            degree: 0,
            foot_polynomial: Poly::zero(),
            discriminant: Poly::one(),
            discriminant_constant: BigInt::from(1),
            factors: Vec::new(),
            log,
        }
    } else {
        eliminate(&system)?
    };
    Ok(EvoluteResult {
        curve: curve.equation().to_text(["x", "y"]),
        degree: elimination.degree,
        expected_degree: curve.expected_evolute_degree(),
        genericity,
        elimination,
    })
}
