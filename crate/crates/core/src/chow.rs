//! Base varieties, their integration functional, and Chern calculus of
//! locally free sheaves on them.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::EngineError;
use crate::poly::{rat, GeneratorTable, GradedClass, Rational};

/// A smooth projective variety `X` of dimension `r` in `P^n`, known only
/// through its generator table, its cotangent Chern class, the hyperplane
/// class, and the values of top-degree monomials.
#[derive(Clone, Debug)]
pub struct VarietyDescriptor {
    dim: u32,
    ambient: u32,
    table: Arc<GeneratorTable>,
    cotangent: GradedClass,
    hyperplane: Option<GradedClass>,
    integration: Option<BTreeMap<Vec<u32>, BigInt>>,
}

impl VarietyDescriptor {
    pub fn new(
        dim: u32,
        ambient: u32,
        table: Arc<GeneratorTable>,
        cotangent: GradedClass,
        hyperplane: GradedClass,
        integration: BTreeMap<Vec<u32>, BigInt>,
    ) -> Result<Self, EngineError> {
        let mut v = Self::formal(dim, ambient, table, cotangent)?;
        for m in v.table.monomials_of_degree(dim) {
            if !integration.contains_key(&m) {
                return Err(EngineError::IncompleteDescriptor(monomial_name(&v.table, &m)));
            }
        }
        v.hyperplane = Some(hyperplane);
        v.integration = Some(integration);
        Ok(v)
    }

    /// A base without integration values, for symbolic computations.
    pub fn formal(
        dim: u32,
        ambient: u32,
        table: Arc<GeneratorTable>,
        cotangent: GradedClass,
    ) -> Result<Self, EngineError> {
        if dim == 0 || dim >= ambient {
            return Err(EngineError::OutOfRange(format!(
                "dimension {dim} in ambient dimension {ambient}"
            )));
        }
        if table.truncation() != dim {
            return Err(EngineError::InvalidInput(format!(
                "truncation {} differs from dimension {dim}",
                table.truncation()
            )));
        }
        if cotangent.table() != &table || cotangent.constant_term() != rat(1) {
            return Err(EngineError::InvalidInput(
                "cotangent class must live on the base table with constant term 1".into(),
            ));
        }
        Ok(VarietyDescriptor { dim, ambient, table, cotangent, hyperplane: None, integration: None })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    /// Total Chern class of the cotangent sheaf.
    pub fn cotangent(&self) -> &GradedClass {
        &self.cotangent
    }

    pub fn hyperplane(&self) -> Option<&GradedClass> {
        self.hyperplane.as_ref()
    }

    pub fn class(&self, name: &str) -> Result<GradedClass, EngineError> {
        GradedClass::generator(&self.table, name)
    }

    /// Degree of the top-dimensional part of `a`.
    pub fn integrate(&self, a: &GradedClass) -> Result<Rational, EngineError> {
        if a.table() != &self.table {
            return Err(EngineError::TableMismatch);
        }
        let table = self
            .integration
            .as_ref()
            .ok_or_else(|| EngineError::IncompleteDescriptor("formal base".into()))?;
        let mut total = Rational::zero();
        for (e, c) in a.homogeneous_part(self.dim).terms() {
            let v = table
                .get(e)
                .ok_or_else(|| EngineError::IncompleteDescriptor(monomial_name(&self.table, e)))?;
            total += c * Rational::from_integer(v.clone());
        }
        Ok(total)
    }
}

fn monomial_name(table: &GeneratorTable, e: &[u32]) -> String {
    GradedClass::monomial(&Arc::new(table.clone()), e.to_vec(), rat(1)).to_string()
}

/// A locally free sheaf: rank and total Chern class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheafData {
    rank: u32,
    chern: GradedClass,
}

impl SheafData {
    pub fn new(rank: u32, chern: GradedClass) -> Result<Self, EngineError> {
        if rank == 0 {
            return Err(EngineError::InvalidInput("sheaf rank must be positive".into()));
        }
        if chern.constant_term() != rat(1) {
            return Err(EngineError::InvalidInput(format!(
                "total Chern class {chern} must have constant term 1"
            )));
        }
        Ok(SheafData { rank, chern })
    }

    pub fn trivial(table: &Arc<GeneratorTable>, rank: u32) -> Result<Self, EngineError> {
        Self::new(rank, GradedClass::one(table))
    }

    /// The line bundle with first Chern class `l`.
    pub fn line(l: &GradedClass) -> Result<Self, EngineError> {
        Self::new(1, &GradedClass::one(l.table()) + l)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn total_chern(&self) -> &GradedClass {
        &self.chern
    }

    pub fn chern_class(&self, i: u32) -> GradedClass {
        self.chern.homogeneous_part(i)
    }

    pub fn dual(&self) -> Self {
        SheafData { rank: self.rank, chern: self.chern.graded_dual() }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, EngineError> {
        Ok(SheafData { rank: self.rank + other.rank, chern: self.chern.try_mul(&other.chern)? })
    }

    /// `F (x) L` for a line bundle with first Chern class `l`:
    /// `c(F (x) L) = sum_i c_i(F) (1 + l)^(rank - i)`.
    pub fn twist_by_line(&self, l: &GradedClass) -> Result<Self, EngineError> {
        if l.table() != self.chern.table() {
            return Err(EngineError::TableMismatch);
        }
        if &l.homogeneous_part(1) != l {
            return Err(EngineError::InvalidInput(format!("{l} is not of degree 1")));
        }
        let top = self.chern.degree().unwrap_or(0);
        let mut total = GradedClass::zero(self.chern.table());
        for i in 0..=top {
            let ci = self.chern.homogeneous_part(i);
            if ci.is_zero() {
                continue;
            }
            total = &total + &(&ci * &l.one_plus_pow(self.rank as i64 - i as i64)?);
        }
        Self::new(self.rank, total)
    }

    /// The kernel of a surjection from the trivial sheaf of rank
    /// `ambient_rank` onto `quotient`.
    pub fn kernel_from_trivial(ambient_rank: u32, quotient: &Self) -> Result<Self, EngineError> {
        if ambient_rank <= quotient.rank {
            return Err(EngineError::OutOfRange(format!(
                "trivial rank {ambient_rank} onto a quotient of rank {}",
                quotient.rank
            )));
        }
        Self::new(ambient_rank - quotient.rank, quotient.chern.series_inverse()?)
    }

    /// Total Segre class `1 / c(F^dual)`, so that `s_1 = c_1` and
    /// `s_2 = c_1^2 - c_2`.
    pub fn segre_total(&self) -> GradedClass {
        self.chern
            .graded_dual()
            .series_inverse()
            .expect("total Chern classes are invertible")
    }

    pub fn segre(&self, i: u32) -> GradedClass {
        self.segre_total().homogeneous_part(i)
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Degree, genus and stationary indices of a curve in `P^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveInvariants {
    pub n: u32,
    pub d: i64,
    pub g: i64,
    /// `k_0, ..., k_(n-2)`; missing entries are zero and `k_(n-1)` is derived.
    pub k: Vec<i64>,
}

impl CurveInvariants {
    pub fn new(n: u32, d: i64, g: i64, k: &[i64]) -> Result<Self, EngineError> {
        if n < 2 {
            return Err(EngineError::InvalidInvariants(format!("ambient dimension {n} < 2")));
        }
        if d < 1 {
            return Err(EngineError::InvalidInvariants(format!("degree {d} < 1")));
        }
        if g < 0 {
            return Err(EngineError::InvalidInvariants(format!("genus {g} < 0")));
        }
        if let Some(bad) = k.iter().find(|&&v| v < 0) {
            return Err(EngineError::InvalidInvariants(format!("stationary index {bad} < 0")));
        }
        if k.len() > n as usize - 1 {
            return Err(EngineError::InvalidInvariants(format!(
                "{} stationary indices given; k_0..k_{} are independent and k_{} is derived",
                k.len(),
                n - 2,
                n - 1
            )));
        }
        let mut k = k.to_vec();
        k.resize(n as usize - 1, 0);
        Ok(CurveInvariants { n, d, g, k })
    }

    /// The rational normal curve of degree `n` in `P^n`.
    pub fn rational_normal(n: u32) -> Result<Self, EngineError> {
        Self::new(n, n as i64, 0, &[])
    }

    pub fn stationary(&self, i: usize) -> i64 {
        if i + 1 == self.n as usize {
            self.top_stationary()
        } else {
            self.k.get(i).copied().unwrap_or(0)
        }
    }

    /// `k_(n-1) = (n+1)(d + n(g-1)) - sum_(i<=n-2) (n-i) k_i`
    pub fn top_stationary(&self) -> i64 {
        let n = self.n as i64;
        (n + 1) * (self.d + n * (self.g - 1))
            - self.k.iter().enumerate().map(|(i, k)| (n - i as i64) * k).sum::<i64>()
    }
}

/// A curve base with its osculating bundles and Euclidean normal bundle.
#[derive(Clone, Debug)]
pub struct CurveModel {
    pub invariants: CurveInvariants,
    pub variety: VarietyDescriptor,
    /// `P^m` for `m = 1, ..., n-1` at index `m - 1`.
    pub osculating: Vec<SheafData>,
    /// `K^1 = ker(V -> P^1)`.
    pub conormal: SheafData,
    /// `E = (K^1)^dual + O(1)`.
    pub normal: SheafData,
}

impl CurveModel {
    pub fn new(inv: &CurveInvariants) -> Result<Self, EngineError> {
        let n = inv.n;
        let names: Vec<String> = ["K".to_string(), "H".to_string()]
            .into_iter()
            .chain((0..n - 1).map(|i| format!("S{i}")))
            .collect();
        let gens: Vec<(&str, u32)> = names.iter().map(|s| (s.as_str(), 1)).collect();
        let table = GeneratorTable::new(&gens, 1)?;
        let mut integration = BTreeMap::new();
        let unit = |i: usize| {
            let mut e = vec![0; names.len()];
            e[i] = 1;
            e
        };
        integration.insert(unit(0), BigInt::from(2 * inv.g - 2));
        integration.insert(unit(1), BigInt::from(inv.d));
        for i in 0..n as usize - 1 {
            integration.insert(unit(2 + i), BigInt::from(inv.k[i]));
        }
        let k = GradedClass::generator_at(&table, 0);
        let h = GradedClass::generator_at(&table, 1);
        let one = GradedClass::one(&table);
        let variety = VarietyDescriptor::new(1, n, table.clone(), &one + &k, h, integration)?;

        let osculating = (1..n)
            .map(|m| {
                let m = m as i64;
                let mut c1 = &k.scale_int(binomial(m + 1, 2)) + &variety.class("H")?.scale_int(m + 1);
                for i in 0..m {
                    c1 = &c1 - &GradedClass::generator_at(&table, 2 + i as usize).scale_int(m - i);
                }
                SheafData::new(m as u32 + 1, &one + &c1)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let conormal = SheafData::kernel_from_trivial(n + 1, &osculating[0])?;
        let normal = conormal.dual().direct_sum(&SheafData::line(&variety.class("H")?)?)?;
        Ok(CurveModel { invariants: inv.clone(), variety, osculating, conormal, normal })
    }

    /// `P^m`, `1 <= m <= n-1`.
    pub fn osculating_bundle(&self, m: u32) -> Result<&SheafData, EngineError> {
        if m == 0 || m >= self.invariants.n {
            return Err(EngineError::OutOfRange(format!(
                "osculating order {m} (allowed 1..={})",
                self.invariants.n - 1
            )));
        }
        Ok(&self.osculating[m as usize - 1])
    }
}

/// The four Chern numbers of a surface in `P^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceChernNumbers {
    /// `K^2`
    pub k2: i64,
    /// `c_2(Omega)`
    pub c2: i64,
    /// `K H`
    pub kh: i64,
    /// `H^2`, the degree
    pub h2: i64,
}

impl SurfaceChernNumbers {
    /// A smooth surface of degree `d` in `P^3`, where `K = (d-4)H` and
    /// `c_2 = (d^2 - 4d + 6) H^2`.
    pub fn in_p3(d: i64) -> Self {
        SurfaceChernNumbers {
            k2: d * (d - 4) * (d - 4),
            c2: d * (d * d - 4 * d + 6),
            kh: d * (d - 4),
            h2: d,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SurfaceModel {
    pub variety: VarietyDescriptor,
    /// `P^1(1)`, rank 3.
    pub principal_parts: SheafData,
    pub conormal: SheafData,
    pub normal: SheafData,
}

impl SurfaceModel {
    pub fn new(n: u32, numbers: &SurfaceChernNumbers) -> Result<Self, EngineError> {
        if n < 3 {
            return Err(EngineError::OutOfRange(format!("surface in P^{n}; need n >= 3")));
        }
        let table = GeneratorTable::new(&[("K", 1), ("H", 1), ("C2", 2)], 2)?;
        let integration = BTreeMap::from([
            (vec![2, 0, 0], BigInt::from(numbers.k2)),
            (vec![1, 1, 0], BigInt::from(numbers.kh)),
            (vec![0, 2, 0], BigInt::from(numbers.h2)),
            (vec![0, 0, 1], BigInt::from(numbers.c2)),
        ]);
        let k = GradedClass::generator_at(&table, 0);
        let h = GradedClass::generator_at(&table, 1);
        let c2 = GradedClass::generator_at(&table, 2);
        let one = GradedClass::one(&table);
        let cotangent = &(&one + &k) + &c2;
        let variety = VarietyDescriptor::new(2, n, table, cotangent.clone(), h.clone(), integration)?;
        let omega = SheafData::new(2, cotangent)?;
        let principal_parts = omega.twist_by_line(&h)?.direct_sum(&SheafData::line(&h)?)?;
        let conormal = SheafData::kernel_from_trivial(n + 1, &principal_parts)?;
        let normal = conormal.dual().direct_sum(&SheafData::line(&h)?)?;
        Ok(SurfaceModel { variety, principal_parts, conormal, normal })
    }
}

#[derive(Clone, Debug)]
pub struct HypersurfaceModel {
    pub degree: i64,
    pub variety: VarietyDescriptor,
    /// `O(d-1) + O(1)`
    pub normal: SheafData,
}

impl HypersurfaceModel {
    pub fn new(n: u32, d: i64) -> Result<Self, EngineError> {
        if n < 2 {
            return Err(EngineError::OutOfRange(format!("hypersurface in P^{n}; need n >= 2")));
        }
        if d < 1 {
            return Err(EngineError::InvalidInvariants(format!("degree {d} < 1")));
        }
        let r = n - 1;
        let table = GeneratorTable::new(&[("H", 1)], r)?;
        let h = GradedClass::generator_at(&table, 0);
        // c(Omega_X) = (1 - H)^(n+1) / (1 - dH)
        let cotangent = &(-&h).one_plus_pow(n as i64 + 1)? * &h.scale_int(-d).one_plus_pow(-1)?;
        let integration = BTreeMap::from([(vec![r], BigInt::from(d))]);
        let variety = VarietyDescriptor::new(r, n, table, cotangent, h.clone(), integration)?;
        let normal = SheafData::line(&h.scale_int(d - 1))?.direct_sum(&SheafData::line(&h)?)?;
        Ok(HypersurfaceModel { degree: d, variety, normal })
    }

    /// `E` rebuilt from the cotangent class through the principal parts
    /// sequence instead of the splitting `O(d-1) + O(1)`.
    pub fn normal_from_principal_parts(&self) -> Result<SheafData, EngineError> {
        let h = self.variety.class("H")?;
        let omega = SheafData::new(self.variety.dim(), self.variety.cotangent().clone())?;
        let p1 = omega.twist_by_line(&h)?.direct_sum(&SheafData::line(&h)?)?;
        let k1 = SheafData::kernel_from_trivial(self.variety.ambient() + 1, &p1)?;
        k1.dual().direct_sum(&SheafData::line(&h)?)
    }
}
