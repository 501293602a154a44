//! Sparse integer polynomials in a fixed number of variables.
//!
//! Used to build the center-of-curvature system symbolically before it is
//! converted to the dense nested form the resultant code works on.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Sparse<const N: usize> {
    terms: BTreeMap<[u32; N], BigInt>,
}

impl<const N: usize> Sparse<N> {
    pub fn zero() -> Self {
        Sparse { terms: BTreeMap::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(c, [0; N])
    }

    pub fn term(c: BigInt, exps: [u32; N]) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Sparse { terms }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::term(BigInt::one(), e)
    }

    pub fn from_terms(iter: impl IntoIterator<Item = ([u32; N], BigInt)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: [u32; N], c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Sparse {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c * k)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = [0; N];
                for i in 0..N {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
            let mut e2 = *e;
            e2[var] -= 1;
            (e2, c * BigInt::from(e[var]))
        }))
    }

    /// Homogeneous component of the given total degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Sparse {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == degree)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Embed into `M >= N` variables; variable `i` goes to slot `slots[i]`.
    pub fn embed<const M: usize>(&self, slots: [usize; N]) -> Sparse<M> {
        Sparse::from_terms(self.terms.iter().map(|(e, c)| {
            let mut e2 = [0; M];
            for i in 0..N {
                e2[slots[i]] += e[i];
            }
            (e2, c.clone())
        }))
    }
}

impl Sparse<2> {
    /// Dense form, `outer` is the main variable.
    pub fn to_nested(&self, outer: usize) -> Poly<Poly<BigInt>> {
        let inner = 1 - outer;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (e, c) in &self.terms {
            let (i, j) = (e[outer] as usize, e[inner] as usize);
            if rows.len() <= i {
                rows.resize(i + 1, Vec::new());
            }
            if rows[i].len() <= j {
                rows[i].resize(j + 1, BigInt::zero());
            }
            rows[i][j] += c;
        }
        Poly::new(rows.into_iter().map(Poly::new).collect())
    }

    pub fn from_nested(p: &Poly<Poly<BigInt>>, outer: usize) -> Self {
        let mut out = Self::zero();
        for (i, row) in p.coeffs().iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                let mut e = [0; 2];
                e[outer] = i as u32;
                e[1 - outer] = j as u32;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| c * num_traits::pow(x.clone(), e[0] as usize) * num_traits::pow(y.clone(), e[1] as usize))
            .sum()
    }

    /// Canonical text: terms by descending total degree, then descending power of
    /// the first variable.
    pub fn to_text(&self, names: [&str; 2]) -> String {
        let mut keys: Vec<&[u32; 2]> = self.terms.keys().collect();
        keys.sort_by(|a, b| (b[0] + b[1], b[0]).cmp(&(a[0] + a[1], a[0])));
        if keys.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let negative = c < &BigInt::zero();
            let abs = if negative { -c } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (k, name) in names.iter().enumerate() {
                match e[k] {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    p => factors.push(format!("{name}^{p}")),
                }
            }
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&factors.join("*"));
            } else {
                out.push_str(&format!("{}*{}", abs, factors.join("*")));
            }
        }
        out
    }
}

/// Variable slots of the four-variable system: curve point `(x, y)` and
/// candidate center `(X, Y)`.
pub const VX: usize = 0;
pub const VY: usize = 1;
pub const CX: usize = 2;
pub const CY: usize = 3;

/// Nested dense form `Z[X][Y][x][y]`, outermost variable `y`.
pub type Nested4 = Poly<Poly<Poly<Poly<BigInt>>>>;
/// `Z[X][Y][x]`, outermost `x`.
pub type Nested3 = Poly<Poly<Poly<BigInt>>>;

pub fn to_nested4(p: &Sparse<4>) -> Nested4 {
    let mut grid: BTreeMap<[u32; 4], BigInt> = BTreeMap::new();
    for (e, c) in p.terms() {
        grid.insert(*e, c.clone());
    }
    let dy = p.degree_in(VY).unwrap_or(0) as usize;
    let dx = p.degree_in(VX).unwrap_or(0) as usize;
    let dcy = p.degree_in(CY).unwrap_or(0) as usize;
    let dcx = p.degree_in(CX).unwrap_or(0) as usize;
    Poly::new(
        (0..=dy)
            .map(|iy| {
                Poly::new(
                    (0..=dx)
                        .map(|ix| {
                            Poly::new(
                                (0..=dcy)
                                    .map(|icy| {
                                        Poly::new(
                                            (0..=dcx)
                                                .map(|icx| {
                                                    let mut e = [0; 4];
                                                    e[VX] = ix as u32;
                                                    e[VY] = iy as u32;
                                                    e[CX] = icx as u32;
                                                    e[CY] = icy as u32;
                                                    grid.get(&e).cloned().unwrap_or_default()
                                                })
                                                .collect(),
                                        )
                                    })
                                    .collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_is_canonical() {
        let x = Sparse::<2>::var(0);
        let y = Sparse::<2>::var(1);
        let p = x.mul(&x).add(&y.mul(&y).scale(&BigInt::from(4))).sub(&Sparse::constant(BigInt::from(4)));
        assert_eq!(p.to_text(["x", "y"]), "x^2 + 4*y^2 - 4");
        assert_eq!(p.derivative(1).to_text(["x", "y"]), "8*y");
    }

    #[test]
    fn nested_round_trip() {
        let x = Sparse::<2>::var(0);
        let y = Sparse::<2>::var(1);
        let p = x.mul(&y).mul(&y).add(&x).sub(&Sparse::constant(BigInt::from(3)));
        for outer in 0..2 {
            assert_eq!(Sparse::<2>::from_nested(&p.to_nested(outer), outer), p);
        }
    }
}
