//! Dense univariate polynomials over a [`Ring`].
//!
//! Nesting gives multivariate rings: `Poly<Poly<BigInt>>` is `Z[t][s]`, and so on.
//! Coefficients are stored lowest degree first with no trailing zeros.

use num_bigint::BigInt;

use crate::ring::Ring;

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Integer polynomials in one variable.
pub type ZPoly = Poly<BigInt>;
/// Integer polynomials in two variables, outer variable first.
pub type ZPoly2 = Poly<ZPoly>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map_coeffs(|a| a.mul(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&R::from_int(i as i64)))
                .collect(),
        )
    }

    fn shifted(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `lc(divisor)^(deg self - deg divisor + 1) * self mod divisor`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("pseudo-remainder by zero polynomial");
        let Some(ds) = self.degree() else {
            return self.clone();
        };
        if ds < dd {
            return self.clone();
        }
        let lcd = divisor.lc();
        let mut rem = self.clone();
        let mut steps = ds - dd + 1;
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let lead = rem.lc();
            rem = rem.scale(&lcd).sub(&divisor.scale(&lead).shifted(dr - dd));
            steps -= 1;
        }
        if steps > 0 {
            rem = rem.scale(&lcd.pow(steps as u32));
        }
        rem
    }

    /// Exact polynomial division, `None` if the divisor does not divide.
    pub fn div_exact_poly(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let lcd = divisor.lc();
        let mut rem = self.clone();
        let Some(ds) = rem.degree() else {
            return Some(Self::new(Vec::new()));
        };
        if ds < dd {
            return None;
        }
        let mut quot = vec![R::zero(); ds - dd + 1];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                return None;
            }
            let q = rem.lc().div_exact(&lcd)?;
            rem = rem.sub(&divisor.scale(&q).shifted(dr - dd));
            quot[dr - dd] = q;
        }
        Some(Self::new(quot))
    }

    /// Divide every coefficient exactly by `c`.
    pub fn div_exact_scalar(&self, c: &R) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.div_exact(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(coeffs))
    }

    /// Unit-normal gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g.normalized()
    }

    /// Primitive part with positive leading sign.
    pub fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let c = self.content();
        let pp = self
            .div_exact_scalar(&c)
            .expect("content divides every coefficient");
        pp.normalized()
    }

    /// Resultant with respect to the polynomial variable, by the subresultant
    /// remainder sequence.
    pub fn resultant(&self, other: &Self) -> R {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return R::zero();
        };
        if da == 0 {
            return self.lc().pow(db as u32);
        }
        if db == 0 {
            return other.lc().pow(da as u32);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut sign_negative = false;
        if da < db {
            std::mem::swap(&mut a, &mut b);
            if da % 2 == 1 && db % 2 == 1 {
                sign_negative = true;
            }
        }
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let delta = da - db;
            if da % 2 == 1 && db % 2 == 1 {
                sign_negative = !sign_negative;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            if r.coeffs.is_empty() {
                return R::zero();
            }
            let divisor = g.mul(&h.pow(delta as u32));
            b = r
                .div_exact_scalar(&divisor)
                .expect("subresultant division is exact");
            g = a.lc();
            if delta > 0 {
                h = g
                    .pow(delta as u32)
                    .div_exact(&h.pow(delta as u32 - 1))
                    .expect("subresultant h update is exact");
            }
            if b.degree() == Some(0) {
                let da = a.degree().unwrap() as u32;
                let res = b
                    .lc()
                    .pow(da)
                    .div_exact(&h.pow(da - 1))
                    .expect("subresultant final step is exact");
                return if sign_negative { res.neg() } else { res };
            }
        }
    }

    /// Gcd by the primitive remainder sequence, unit-normalized.
    pub fn gcd_poly(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() {
            return other.primitive_part().scale(&other.content());
        }
        if other.coeffs.is_empty() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content()).normalized();
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.coeffs.is_empty() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    /// Squarefree decomposition of a primitive polynomial by Yun's algorithm.
    /// Returns `(factor, multiplicity)` pairs with non-constant factors only.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let f = self.primitive_part();
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let fp = f.derivative();
        let a0 = f.gcd_poly(&fp);
        let mut b = f.div_exact_poly(&a0).expect("gcd divides f");
        let mut c = fp.div_exact_poly(&a0).expect("gcd divides f'");
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd_poly(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.primitive_part(), i));
            }
            b = b.div_exact_poly(&a).expect("Yun step divides b");
            c = d.div_exact_poly(&a).expect("Yun step divides d");
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree_decomposition().iter().all(|(_, m)| *m == 1)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(R::one())
    }

    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(out)
    }

    fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.div_exact_poly(other)
    }

    fn gcd(&self, other: &Self) -> Self {
        self.gcd_poly(other)
    }

    fn leading_sign(&self) -> i32 {
        self.coeffs.last().map_or(0, |c| c.leading_sign())
    }
}

/// Exchange the two variables of a bivariate polynomial.
pub fn swap_vars(p: &ZPoly2) -> ZPoly2 {
    let inner_len = p.coeffs().iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
    Poly::new(
        (0..inner_len)
            .map(|j| Poly::new(p.coeffs().iter().map(|c| c.coeff(j)).collect()))
            .collect(),
    )
}

/// Total degree of a bivariate polynomial, `None` for zero.
pub fn total_degree(p: &ZPoly2) -> Option<usize> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.degree().map(|j| i + j))
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(coeffs: &[i64]) -> ZPoly {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(x - 1, x - 2) = -1
        assert_eq!(z(&[-1, 1]).resultant(&z(&[-2, 1])), BigInt::from(-1));
        // Res(x^2 - 1, x - 3) = 8
        assert_eq!(z(&[-1, 0, 1]).resultant(&z(&[-3, 1])), BigInt::from(8));
        // common root
        assert_eq!(z(&[-1, 0, 1]).resultant(&z(&[1, 1])), BigInt::from(0));
    }

    #[test]
    fn resultant_matches_root_product() {
        // a = 2(x-1)(x-2)(x+3), b = x^2 + 1
        // Res(a, b) = 2^2 * b(1) b(2) b(-3) = 4 * 2 * 5 * 10
        let a = z(&[12, -14, 0, 2]);
        let b = z(&[1, 0, 1]);
        assert_eq!(a.resultant(&b), BigInt::from(400));
        // Res(b, a) = (-1)^(3*2) Res(a, b)
        assert_eq!(b.resultant(&a), BigInt::from(400));
        let c = z(&[0, 1, 0, 1]);
        let d = z(&[2, 0, 1]);
        // Res(x^3+x, x^2+2): roots of d are ±i√2, c(r) = r(r^2+1) = -r, product = r1 r2 = 2
        assert_eq!(d.resultant(&c), BigInt::from(2));
        assert_eq!(c.resultant(&d), BigInt::from(2));
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let f = z(&[2, -3, 0, 1]);
        let g = z(&[-1, 1]).mul(&z(&[3, 1]));
        assert_eq!(f.gcd_poly(&g), z(&[-1, 1]));
        let parts = f.squarefree_decomposition();
        assert_eq!(parts, vec![(z(&[2, 1]), 1), (z(&[-1, 1]), 2)]);
        assert!(!f.is_squarefree());
        assert!(g.is_squarefree());
    }

    #[test]
    fn bivariate_gcd() {
        // (x + y)(x - y) and (x + y)^2 over Z[y][x]
        let y = |c: &[i64]| z(c);
        let xpy: ZPoly2 = Poly::new(vec![y(&[0, 1]), y(&[1])]);
        let xmy: ZPoly2 = Poly::new(vec![y(&[0, -1]), y(&[1])]);
        let g = xpy.mul(&xmy).gcd_poly(&xpy.mul(&xpy));
        assert_eq!(g, xpy);
        let sq = xpy.mul(&xpy).mul(&xmy).squarefree_decomposition();
        assert_eq!(sq, vec![(xmy, 1), (xpy, 2)]);
    }

    #[test]
    fn exact_division() {
        let f = z(&[2, -3, 0, 1]);
        assert_eq!(f.div_exact_poly(&z(&[-1, 1])), Some(z(&[-2, 1, 1])));
        assert_eq!(f.div_exact_poly(&z(&[-3, 1])), None);
        assert_eq!(z(&[2, 4]).div_exact_poly(&z(&[0, 3])), None);
    }

    #[test]
    fn swap_is_involution() {
        let p: ZPoly2 = Poly::new(vec![z(&[1, 2]), z(&[0, 0, 3]), z(&[4])]);
        assert_eq!(swap_vars(&swap_vars(&p)), p);
        assert_eq!(total_degree(&p), Some(3));
    }
}
