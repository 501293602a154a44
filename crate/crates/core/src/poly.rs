//! Graded polynomial classes over exact rationals.
//!
//! A [`GradedClass`] is a sparse polynomial in the generators of a
//! [`GeneratorTable`], each generator carrying a positive degree. Products
//! drop every monomial above the table's truncation bound.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::EngineError;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Named generators with degrees, and the truncation bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTable {
    names: Vec<String>,
    degrees: Vec<u32>,
    truncation: u32,
    /// Monomials whose degree in the first `.0` generators exceeds `.1` vanish.
    /// Used on projective bundles, where base classes above the base
    /// dimension are zero.
    base_bound: Option<(usize, u32)>,
}

impl GeneratorTable {
    pub fn new(
        generators: &[(&str, u32)],
        truncation: u32,
    ) -> Result<Arc<GeneratorTable>, EngineError> {
        let names: Vec<String> = generators.iter().map(|(n, _)| n.to_string()).collect();
        let degrees: Vec<u32> = generators.iter().map(|(_, d)| *d).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(EngineError::InvalidInput(format!("duplicate generator {n}")));
            }
        }
        if let Some(d) = degrees.iter().find(|&&d| d == 0 || d > truncation) {
            return Err(EngineError::InvalidInput(format!(
                "generator degree {d} outside 1..={truncation}"
            )));
        }
        Ok(Arc::new(GeneratorTable { names, degrees, truncation, base_bound: None }))
    }

    /// Append generators to `self` and bound the degree carried by the
    /// original ones by `base_bound`.
    pub fn extend(
        &self,
        extra: &[(&str, u32)],
        truncation: u32,
        base_bound: u32,
    ) -> Result<Arc<GeneratorTable>, EngineError> {
        let mut gens: Vec<(&str, u32)> =
            self.names.iter().map(String::as_str).zip(self.degrees.iter().copied()).collect();
        gens.extend_from_slice(extra);
        let table = GeneratorTable::new(&gens, truncation)?;
        let mut table = Arc::try_unwrap(table).expect("fresh table");
        table.base_bound = Some((self.names.len(), base_bound));
        Ok(Arc::new(table))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn weight(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.degrees).map(|(e, d)| e * d).sum()
    }

    fn admissible(&self, exps: &[u32]) -> bool {
        if self.weight(exps) > self.truncation {
            return false;
        }
        match self.base_bound {
            Some((count, bound)) => self.weight_prefix(exps, count) <= bound,
            None => true,
        }
    }

    fn weight_prefix(&self, exps: &[u32], count: usize) -> u32 {
        exps[..count].iter().zip(&self.degrees).map(|(e, d)| e * d).sum()
    }

    /// All exponent vectors of weighted degree exactly `k`.
    pub fn monomials_of_degree(&self, k: u32) -> Vec<Vec<u32>> {
        fn rec(degs: &[u32], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == degs.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let d = degs[cur.len()];
            for e in 0..=left / d {
                cur.push(e);
                rec(degs, left - e * d, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.degrees, k, &mut Vec::new(), &mut out);
        out
    }
}

/// A class in the truncated graded ring of a generator table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedClass {
    table: Arc<GeneratorTable>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl GradedClass {
    pub fn zero(table: &Arc<GeneratorTable>) -> Self {
        GradedClass { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(table: &Arc<GeneratorTable>, c: Rational) -> Self {
        Self::monomial(table, vec![0; table.len()], c)
    }

    pub fn one(table: &Arc<GeneratorTable>) -> Self {
        Self::constant(table, Rational::one())
    }

    pub fn monomial(table: &Arc<GeneratorTable>, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), table.len(), "exponent vector width");
        let mut out = Self::zero(table);
        if !c.is_zero() && table.admissible(&exps) {
            out.terms.insert(exps, c);
        }
        out
    }

    /// The generator `name`.
    pub fn generator(table: &Arc<GeneratorTable>, name: &str) -> Result<Self, EngineError> {
        let i = table
            .index_of(name)
            .ok_or_else(|| EngineError::InvalidInput(format!("unknown generator {name}")))?;
        Ok(Self::generator_at(table, i))
    }

    pub fn generator_at(table: &Arc<GeneratorTable>, i: usize) -> Self {
        let mut e = vec![0; table.len()];
        e[i] = 1;
        Self::monomial(table, e, Rational::one())
    }

    pub fn from_terms(
        table: &Arc<GeneratorTable>,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Self {
        let mut out = Self::zero(table);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() || !self.table.admissible(&e) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.table.len()])
    }

    /// Largest weighted degree present, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| self.table.weight(e)).max()
    }

    fn check_table(&self, other: &Self) -> Result<(), EngineError> {
        if Arc::ptr_eq(&self.table, &other.table) || self.table == other.table {
            Ok(())
        } else {
            Err(EngineError::TableMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, EngineError> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, EngineError> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, EngineError> {
        self.check_table(other)?;
        let mut out = Self::zero(&self.table);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(&self.table);
        }
        GradedClass {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&rat(k))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.table);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of the monomials of weighted degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        GradedClass {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| self.table.weight(e) == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiply the degree-`k` part by `(-1)^k`; the total Chern class of the
    /// dual bundle.
    pub fn graded_dual(&self) -> Self {
        GradedClass {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let c = if self.table.weight(e) % 2 == 1 { -c } else { c.clone() };
                    (e.clone(), c)
                })
                .collect(),
        }
    }

    /// `b` with `self * b = 1` up to truncation.
    pub fn series_inverse(&self) -> Result<Self, EngineError> {
        if self.constant_term() != Rational::one() {
            return Err(EngineError::NotInvertible(self.to_string()));
        }
        // 1 / (1 + x) = sum (-x)^j, and x is nilpotent after truncation.
        let x = self - &Self::one(&self.table);
        let neg_x = -&x;
        let mut term = Self::one(&self.table);
        let mut acc = Self::one(&self.table);
        for _ in 0..self.table.truncation() {
            term = &term * &neg_x;
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// `(1 + x)^e` for any integer `e`, where `self = x` has no constant term.
    pub fn one_plus_pow(&self, e: i64) -> Result<Self, EngineError> {
        let base = self + &Self::one(&self.table);
        if e >= 0 {
            Ok(base.pow(e as u32))
        } else {
            Ok(base.pow((-e) as u32).series_inverse()?)
        }
    }

    /// Move to another table; generator `i` of `self` becomes generator
    /// `map[i]` of `table`.
    pub fn reembed(&self, table: &Arc<GeneratorTable>, map: &[usize]) -> Self {
        Self::from_terms(
            table,
            self.terms.iter().map(|(e, c)| {
                let mut e2 = vec![0; table.len()];
                for (i, &k) in e.iter().enumerate() {
                    e2[map[i]] += k;
                }
                (e2, c.clone())
            }),
        )
    }
}

fn op_or_panic(r: Result<GradedClass, EngineError>) -> GradedClass {
    r.unwrap_or_else(|e| panic!("{e}"))
}

impl Add for &GradedClass {
    type Output = GradedClass;
    fn add(self, rhs: &GradedClass) -> GradedClass {
        op_or_panic(self.try_add(rhs))
    }
}

impl Sub for &GradedClass {
    type Output = GradedClass;
    fn sub(self, rhs: &GradedClass) -> GradedClass {
        op_or_panic(self.try_sub(rhs))
    }
}

impl Mul for &GradedClass {
    type Output = GradedClass;
    fn mul(self, rhs: &GradedClass) -> GradedClass {
        op_or_panic(self.try_mul(rhs))
    }
}

impl Neg for &GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        self.scale(&-Rational::one())
    }
}

impl Add for GradedClass {
    type Output = GradedClass;
    fn add(self, rhs: GradedClass) -> GradedClass {
        &self + &rhs
    }
}

impl Sub for GradedClass {
    type Output = GradedClass;
    fn sub(self, rhs: GradedClass) -> GradedClass {
        &self - &rhs
    }
}

impl Mul for GradedClass {
    type Output = GradedClass;
    fn mul(self, rhs: GradedClass) -> GradedClass {
        &self * &rhs
    }
}

impl Neg for GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        -&self
    }
}

impl fmt::Display for GradedClass {
    /// Terms by ascending degree, e.g. `1 - K + 3*H*z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by_key(|e| (self.table.weight(e), std::cmp::Reverse((*e).clone())));
        for (idx, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let sign = if c.is_negative() { "-" } else { "+" };
            match idx {
                0 if c.is_negative() => write!(f, "-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let n = &self.table.names()[i];
                    if k == 1 {
                        n.clone()
                    } else {
                        format!("{n}^{k}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: u32) -> Arc<GeneratorTable> {
        GeneratorTable::new(&[("c1", 1), ("c2", 2), ("z", 1)], n).unwrap()
    }

    #[test]
    fn add_identities() {
        let t = table(3);
        let z = GradedClass::generator(&t, "z").unwrap();
        let k = GradedClass::generator(&t, "c1").unwrap();
        assert_eq!(&GradedClass::zero(&t) + &z, z);
        assert!((&z.scale_int(3) + &z.scale_int(-3)).is_zero());
        assert_eq!(&(&z + &k) + &z, &z.scale_int(2) + &k);
    }

    #[test]
    fn mul_truncates() {
        let t = GeneratorTable::new(&[("z", 1)], 1).unwrap();
        let z = GradedClass::generator(&t, "z").unwrap();
        assert!((&z * &z).is_zero());
        assert_eq!(&GradedClass::one(&t) * &z, z);

        let t = table(2);
        let c1 = GradedClass::generator(&t, "c1").unwrap();
        let one = GradedClass::one(&t);
        let lhs = &one + &c1;
        let rhs = &(&one - &c1) + &c1.pow(2);
        assert_eq!(&lhs * &rhs, one);
    }

    #[test]
    fn inverse_examples() {
        let t = table(3);
        let one = GradedClass::one(&t);
        assert_eq!(one.series_inverse().unwrap(), one);
        let c1 = GradedClass::generator(&t, "c1").unwrap();
        let c2 = GradedClass::generator(&t, "c2").unwrap();
        let inv = (&one + &c1).series_inverse().unwrap();
        let expected = &(&(&one - &c1) + &c1.pow(2)) - &c1.pow(3);
        assert_eq!(inv, expected);
        let inv = (&(&one + &c1) + &c2).series_inverse().unwrap();
        assert_eq!(inv.homogeneous_part(2), &c1.pow(2) - &c2);
        assert!(c1.series_inverse().is_err());
    }

    #[test]
    fn homogeneous_parts() {
        let t = table(4);
        let one = GradedClass::one(&t);
        let z = GradedClass::generator(&t, "z").unwrap();
        assert_eq!((&(&one + &z) + &z.pow(2)).homogeneous_part(1), z);
        assert!(z.homogeneous_part(0).is_zero());
        assert_eq!((&one + &z).pow(4).homogeneous_part(2), z.pow(2).scale_int(6));
    }

    #[test]
    fn table_mismatch_is_an_error() {
        let a = GradedClass::one(&table(2));
        let b = GradedClass::one(&table(3));
        assert_eq!(a.try_add(&b), Err(EngineError::TableMismatch));
        assert_eq!(a.try_mul(&b), Err(EngineError::TableMismatch));
    }

    #[test]
    fn base_bound_kills_high_base_degree() {
        let base = GeneratorTable::new(&[("K", 1)], 1).unwrap();
        let t = base.extend(&[("z", 1)], 3, 1).unwrap();
        let k = GradedClass::generator(&t, "K").unwrap();
        let z = GradedClass::generator(&t, "z").unwrap();
        assert!((&k * &k).is_zero());
        assert!(!(&k * &z.pow(2)).is_zero());
        assert!((&k * &z.pow(3)).is_zero());
    }

    #[test]
    fn negative_powers() {
        let t = table(3);
        let z = GradedClass::generator(&t, "z").unwrap();
        let inv = z.one_plus_pow(-2).unwrap();
        assert_eq!(&inv * &z.one_plus_pow(2).unwrap(), GradedClass::one(&t));
        assert_eq!(inv.homogeneous_part(1), z.scale_int(-2));
    }

    #[test]
    fn display_is_readable() {
        let t = table(3);
        let z = GradedClass::generator(&t, "z").unwrap();
        let c1 = GradedClass::generator(&t, "c1").unwrap();
        let x = &(&GradedClass::one(&t) - &c1) + &(&c1 * &z.pow(2)).scale_int(3);
        assert_eq!(x.to_string(), "1 - c1 + 3*c1*z^2");
    }
}
