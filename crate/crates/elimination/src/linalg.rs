use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{Poly, ZPoly};

/// Determinant of a square integer matrix by fraction-free Bareiss elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sylvester matrix of `a` and `b` taken with formal degrees `da` and `db`
/// (leading coefficients may vanish).
pub fn sylvester(a: &[BigInt], da: usize, b: &[BigInt], db: usize) -> Vec<Vec<BigInt>> {
    let n = da + db;
    let coeff = |p: &[BigInt], i: usize| p.get(i).cloned().unwrap_or_default();
    let mut rows = Vec::with_capacity(n);
    for shift in 0..db {
        let mut row = vec![BigInt::zero(); n];
        for i in 0..=da {
            row[shift + i] = coeff(a, da - i);
        }
        rows.push(row);
    }
    for shift in 0..da {
        let mut row = vec![BigInt::zero(); n];
        for i in 0..=db {
            row[shift + i] = coeff(b, db - i);
        }
        rows.push(row);
    }
    rows
}

/// Newton interpolation through `(points[i], values[i])` with distinct integer
/// nodes. Returns the coefficients of the unique polynomial of degree
/// `< points.len()`, low degree first.
pub fn interpolate(points: &[BigInt], values: &[BigRational]) -> Vec<BigRational> {
    let n = points.len();
    let mut dd: Vec<BigRational> = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = BigRational::from_integer(&points[i] - &points[i - level]);
            dd[i] = (&dd[i] - &dd[i - 1]) / denom;
        }
    }
    // Horner expansion of the Newton form.
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs <- coeffs * (t - points[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for j in 0..n {
            if coeffs[j].is_zero() {
                continue;
            }
            if j + 1 < n {
                next[j + 1] += &coeffs[j];
            }
            next[j] -= &coeffs[j] * BigRational::from_integer(points[i].clone());
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

/// Integer polynomial from rational coefficients that must be integral.
pub fn integral_poly(coeffs: &[BigRational]) -> Option<ZPoly> {
    coeffs
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect::<Option<Vec<_>>>()
        .map(Poly::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bareiss_small() {
        let m = vec![big(&[2, 0, 1]), big(&[1, 3, 2]), big(&[1, 1, 2])];
        assert_eq!(bareiss_determinant(m), BigInt::from(6));
        let m = vec![big(&[0, 1]), big(&[1, 0])];
        assert_eq!(bareiss_determinant(m), BigInt::from(-1));
        let m = vec![big(&[1, 2]), big(&[2, 4])];
        assert_eq!(bareiss_determinant(m), BigInt::from(0));
    }

    #[test]
    fn sylvester_resultant_matches_prs() {
        let a = big(&[12, -14, 0, 2]);
        let b = big(&[1, 0, 1]);
        let det = bareiss_determinant(sylvester(&a, 3, &b, 2));
        assert_eq!(det, Poly::new(a).resultant(&Poly::new(b)));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = |t: i64| 3 * t * t * t - 2 * t + 7;
        let pts: Vec<BigInt> = (-2..2).map(BigInt::from).collect();
        let vals: Vec<BigRational> = (-2..2).map(|t| BigRational::from_integer(p(t).into())).collect();
        let c = integral_poly(&interpolate(&pts, &vals)).unwrap();
        assert_eq!(c, Poly::new(big(&[7, -2, 0, 3])));
    }
}
