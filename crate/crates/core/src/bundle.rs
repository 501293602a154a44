//! The projective bundle `pi: P(F) -> X` of a sheaf of rank `n - r + 1`,
//! mapping to `P^n`, with `z = c_1(O_P(F)(1))`.

use std::sync::Arc;

use crate::chow::{SheafData, VarietyDescriptor};
use crate::error::EngineError;
use crate::poly::{GeneratorTable, GradedClass, Rational};

pub const ZETA: &str = "z";

#[derive(Clone, Debug)]
pub struct BundleSpace {
    base: VarietyDescriptor,
    sheaf: SheafData,
    table: Arc<GeneratorTable>,
    zeta: usize,
    segre: Vec<GradedClass>,
}

impl BundleSpace {
    pub fn new(base: &VarietyDescriptor, sheaf: &SheafData) -> Result<Self, EngineError> {
        let (n, r) = (base.ambient(), base.dim());
        if sheaf.rank() != n - r + 1 {
            return Err(EngineError::InvalidInput(format!(
                "sheaf of rank {} over a base of dimension {r} does not map to P^{n} \
                 (rank must be {})",
                sheaf.rank(),
                n - r + 1
            )));
        }
        if sheaf.total_chern().table() != base.table() {
            return Err(EngineError::TableMismatch);
        }
        let table = base.table().extend(&[(ZETA, 1)], n, r)?;
        let segre_total = sheaf.segre_total();
        let segre = (0..=r).map(|i| segre_total.homogeneous_part(i)).collect();
        Ok(BundleSpace {
            base: base.clone(),
            sheaf: sheaf.clone(),
            zeta: table.len() - 1,
            table,
            segre,
        })
    }

    /// A symbolic base of dimension `r` in `P^n`: `c(Omega_X) = 1 + K + C2 + C3`
    /// and `c(F) = 1 + f1 + f2 + f3`, truncated to what the dimensions allow.
    pub fn formal(r: u32, n: u32) -> Result<Self, EngineError> {
        if r == 0 || r >= n {
            return Err(EngineError::OutOfRange(format!("dimension {r} in P^{n}")));
        }
        let rank = n - r + 1;
        let mut gens: Vec<(String, u32)> = (1..=r.min(3))
            .map(|i| (if i == 1 { "K".to_string() } else { format!("C{i}") }, i))
            .collect();
        gens.extend((1..=r.min(rank).min(3)).map(|i| (format!("f{i}"), i)));
        let named: Vec<(&str, u32)> = gens.iter().map(|(s, d)| (s.as_str(), *d)).collect();
        let table = GeneratorTable::new(&named, r)?;
        let total = |prefix: &dyn Fn(u32) -> String, top: u32| {
            (1..=top).fold(GradedClass::one(&table), |acc, i| {
                &acc + &GradedClass::generator(&table, &prefix(i)).expect("declared above")
            })
        };
        let omega = total(&|i| if i == 1 { "K".into() } else { format!("C{i}") }, r.min(3));
        let f = total(&|i| format!("f{i}"), r.min(rank).min(3));
        let base = VarietyDescriptor::formal(r, n, table, omega)?;
        Self::new(&base, &SheafData::new(rank, f)?)
    }

    pub fn base(&self) -> &VarietyDescriptor {
        &self.base
    }

    pub fn sheaf(&self) -> &SheafData {
        &self.sheaf
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    /// `n`, the dimension of `P(F)` and of the target projective space.
    pub fn dim(&self) -> u32 {
        self.base.ambient()
    }

    pub fn fiber_dim(&self) -> u32 {
        self.base.ambient() - self.base.dim()
    }

    pub fn zeta(&self) -> GradedClass {
        GradedClass::generator_at(&self.table, self.zeta)
    }

    pub fn one(&self) -> GradedClass {
        GradedClass::one(&self.table)
    }

    /// `pi^* a`
    pub fn pullback(&self, a: &GradedClass) -> GradedClass {
        let map: Vec<usize> = (0..self.base.table().len()).collect();
        a.reembed(&self.table, &map)
    }

    /// `pi_*(alpha z^k) = alpha s_(k - (n - r))(F)`
    pub fn pushforward(&self, a: &GradedClass) -> Result<GradedClass, EngineError> {
        if a.table() != &self.table {
            return Err(EngineError::TableMismatch);
        }
        let base_table = self.base.table();
        let shift = self.fiber_dim();
        let mut out = GradedClass::zero(base_table);
        for (e, c) in a.terms() {
            let k = e[self.zeta];
            if k < shift {
                continue;
            }
            let Some(s) = self.segre.get((k - shift) as usize) else {
                continue;
            };
            let mut base_exps = e.clone();
            base_exps.remove(self.zeta);
            let alpha = GradedClass::monomial(base_table, base_exps, c.clone());
            out = &out + &(&alpha * s);
        }
        Ok(out)
    }

    /// Degree of a class on `P(F)`: integrate its pushforward over `X`.
    pub fn integrate(&self, a: &GradedClass) -> Result<Rational, EngineError> {
        self.base.integrate(&self.pushforward(a)?)
    }

    /// `c(Omega_P(F)) = pi^* c(Omega_X) c(pi^* F (x) O(-1))`
    pub fn cotangent_chern(&self) -> GradedClass {
        let f = SheafData::new(self.sheaf.rank(), self.pullback(self.sheaf.total_chern()))
            .expect("pullback keeps constant term");
        let twisted = f.twist_by_line(&-&self.zeta()).expect("z has degree 1");
        &self.pullback(self.base.cotangent()) * twisted.total_chern()
    }

    /// Total Chern class of the tangent bundle of `P(F)`.
    pub fn tangent_chern(&self) -> GradedClass {
        self.cotangent_chern().graded_dual()
    }

    /// `psi^* c(T_P^n) = (1 + z)^(n+1)`
    pub fn target_tangent_chern(&self) -> GradedClass {
        (&self.one() + &self.zeta()).pow(self.dim() + 1)
    }

    /// Total virtual class `psi^* c(T_P^n) / c(T_P(F))`.
    pub fn virtual_total(&self) -> GradedClass {
        let inv = self
            .tangent_chern()
            .series_inverse()
            .expect("tangent Chern class has constant term 1");
        &self.target_tangent_chern() * &inv
    }

    /// `[cbar_1, ..., cbar_up_to]`
    pub fn virtual_chern(&self, up_to: u32) -> Vec<GradedClass> {
        let total = self.virtual_total();
        (1..=up_to).map(|i| total.homogeneous_part(i)).collect()
    }
}

/// Closed forms for `cbar_i` and the tangent Chern classes, written out term
/// by term as an independent path to the series computation above.
pub mod reference {
    use super::BundleSpace;
    use crate::poly::GradedClass;

    fn binom(n: i64, k: i64) -> i64 {
        if k < 0 || n < k {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Pulled-back base classes used by the closed forms.
    pub struct Symbols {
        pub z: GradedClass,
        pub k: [GradedClass; 4],
        pub f: [GradedClass; 4],
    }

    impl Symbols {
        pub fn of(b: &BundleSpace) -> Self {
            let omega = b.pullback(b.base().cotangent());
            let f = b.pullback(b.sheaf().total_chern());
            Symbols {
                z: b.zeta(),
                k: [0, 1, 2, 3].map(|i| omega.homogeneous_part(i)),
                f: [0, 1, 2, 3].map(|i| f.homogeneous_part(i)),
            }
        }
    }

    /// `psi^* c_i' = C(n+1, i) z^i`
    pub fn target_chern(b: &BundleSpace, i: u32) -> GradedClass {
        b.zeta().pow(i).scale_int(binom(b.dim() as i64 + 1, i as i64))
    }

    /// `c_k(pi^* F (x) O(-1)) = sum_i (-1)^(k-i) C(n-r+1-i, k-i) c_i(F) z^(k-i)`
    fn twisted_f(b: &BundleSpace, s: &Symbols, k: usize) -> GradedClass {
        let top = b.fiber_dim() as i64 + 1;
        let mut acc = GradedClass::zero(b.table());
        for i in 0..=k {
            let sign = if (k - i).is_multiple_of(2) { 1 } else { -1 };
            let coeff = sign * binom(top - i as i64, (k - i) as i64);
            acc = &acc + &(&s.f[i] * &s.z.pow((k - i) as u32)).scale_int(coeff);
        }
        acc
    }

    /// `c_1, c_2, c_3` of the tangent bundle of `P(F)`.
    pub fn tangent_chern(b: &BundleSpace) -> [GradedClass; 3] {
        let s = Symbols::of(b);
        let (n, r) = (b.dim() as i64, b.base().dim() as i64);
        let (z, k, f) = (&s.z, &s.k, &s.f);
        let c1 = &(&-&k[1] - &f[1]) + &z.scale_int(n - r + 1);
        let c2 = &(&(&(&(&k[2] + &f[2]) + &(&k[1] * &f[1]))
            - &(&k[1] * z).scale_int(n - r + 1))
            - &(&f[1] * z).scale_int(n - r))
            + &z.pow(2).scale_int(binom(n - r + 1, 2));
        let mut c3 = -&twisted_f(b, &s, 3);
        c3 = &c3 - &(&k[1] * &twisted_f(b, &s, 2));
        c3 = &c3 - &(&k[2] * &twisted_f(b, &s, 1));
        c3 = &c3 - &k[3];
        [c1, c2, c3]
    }

    /// `cbar_1, cbar_2, cbar_3` from the target and source tangent classes.
    pub fn virtual_chern(b: &BundleSpace) -> [GradedClass; 3] {
        let [c1, c2, c3] = tangent_chern(b);
        let [t1, t2, t3] = [1, 2, 3].map(|i| target_chern(b, i));
        let cb1 = &t1 - &c1;
        let cb2 = &(&(&t2 - &c2) - &(&t1 * &c1)) + &c1.pow(2);
        let cb3 = &(&(&(&(&(&t3 - &c3) - &(&t2 * &c1)) - &(&t1 * &c2)) + &(&t1 * &c1.pow(2)))
            + &(&c1 * &c2).scale_int(2))
            - &c1.pow(3);
        [cb1, cb2, cb3]
    }

    /// `cbar_1, cbar_2, cbar_3` expanded in `z`, `K = c_1(Omega_X)` and the
    /// Chern classes of `F`.
    pub fn virtual_chern_expanded(b: &BundleSpace) -> [GradedClass; 3] {
        let s = Symbols::of(b);
        let r = b.base().dim() as i64;
        let (z, k, f) = (&s.z, &s.k, &s.f);
        let cb1 = &z.scale_int(r) + &(&k[1] + &f[1]);
        let cb2 = &(&z.pow(2).scale_int(binom(r, 2))
            + &(&(&k[1].scale_int(r) + &f[1].scale_int(r - 1)) * z))
            + &(&(&(&(&k[1].pow(2) + &(&k[1] * &f[1])) + &f[1].pow(2)) - &k[2]) - &f[2]);
        let lin = &(&(&(&(&k[1].pow(2).scale_int(r) + &(&k[1] * &f[1]).scale_int(r - 1))
            + &f[1].pow(2).scale_int(r - 2))
            - &k[2].scale_int(r))
            - &f[2].scale_int(r - 2))
            * z;
        let constant = [
            f[3].clone(),
            k[3].clone(),
            &k[1] * &f[2],
            (&k[1] * &k[2]).scale_int(-2),
            (&k[1] * &f[2]).scale_int(-2),
            // constant term is 1/(c(T_X) c(F^dual)), so C2 f1 enters once
            -(&k[2] * &f[1]),
            (&f[1] * &f[2]).scale_int(-2),
            k[1].pow(3),
            &k[1].pow(2) * &f[1],
            &k[1] * &f[1].pow(2),
            f[1].pow(3),
        ]
        .into_iter()
        .fold(GradedClass::zero(b.table()), |a, t| &a + &t);
        let cb3 = &(&(&z.pow(3).scale_int(binom(r, 3))
            + &(&(&k[1].scale_int(binom(r, 2)) + &f[1].scale_int(binom(r - 1, 2))) * &z.pow(2)))
            + &lin)
            + &constant;
        [cb1, cb2, cb3]
    }

    /// Closed form of `cbar_1^2 + cbar_2`, the cuspidal-edge class on `P(F)`.
    pub fn cuspidal_class(b: &BundleSpace) -> GradedClass {
        let s = Symbols::of(b);
        let r = b.base().dim() as i64;
        let (z, k, f) = (&s.z, &s.k, &s.f);
        let base = &(&(&(&k[1].pow(2).scale_int(2) + &(&k[1] * &f[1]).scale_int(3))
            + &f[1].pow(2).scale_int(2))
            - &k[2])
            - &f[2];
        let linear = &(&f[1] * z).scale_int(3 * r - 1) + &(&k[1] * z).scale_int(3 * r);
        // (3r^2 - r)/2 is always an integer
        &(&base + &linear) + &z.pow(2).scale_int((3 * r * r - r) / 2)
    }

    /// Closed form of `cbar_1^3 + 3 cbar_1 cbar_2 + 2 cbar_3`.
    pub fn kappa_class(b: &BundleSpace) -> GradedClass {
        let s = Symbols::of(b);
        let r = b.base().dim() as i64;
        let (z, k, f) = (&s.z, &s.k, &s.f);
        [
            z.pow(3).scale_int(17 * binom(r, 3) + 12 * binom(r, 2) + r),
            (&k[1] * &z.pow(2)).scale_int(17 * binom(r, 2) + 6 * r),
            (&f[1] * &z.pow(2)).scale_int(17 * binom(r, 2) + r + 2),
            (&k[1].pow(2) * z).scale_int(11 * r),
            (&(&k[1] * &f[1]) * z).scale_int(17 * r - 5),
            (&f[1].pow(2) * z).scale_int(11 * r - 7),
            (&k[2] * z).scale_int(-5 * r),
            (&f[2] * z).scale_int(-(5 * r - 4)),
            k[1].pow(3).scale_int(6),
            (&k[1].pow(2) * &f[1]).scale_int(11),
            (&k[1] * &f[1].pow(2)).scale_int(11),
            f[1].pow(3).scale_int(6),
            (&k[1] * &k[2]).scale_int(-7),
            (&k[2] * &f[1]).scale_int(-5),
            (&k[1] * &f[2]).scale_int(-5),
            (&f[1] * &f[2]).scale_int(-7),
            k[3].scale_int(2),
            f[3].scale_int(2),
        ]
        .into_iter()
        .fold(GradedClass::zero(b.table()), |a, t| &a + &t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::{CurveInvariants, CurveModel};
    use crate::poly::rat;

    fn twisted_cubic() -> BundleSpace {
        let m = CurveModel::new(&CurveInvariants::new(3, 3, 0, &[0]).unwrap()).unwrap();
        BundleSpace::new(&m.variety, &m.normal).unwrap()
    }

    #[test]
    fn pushforward_of_zeta_powers() {
        let b = twisted_cubic();
        let z = b.zeta();
        let base_one = GradedClass::one(b.base().table());
        assert_eq!(b.pushforward(&z.pow(2)).unwrap(), base_one);
        assert!(b.pushforward(&z).unwrap().is_zero());
        assert_eq!(b.pushforward(&z.pow(3)).unwrap(), b.sheaf().chern_class(1));
    }

    #[test]
    fn rank_must_match_fiber() {
        let m = CurveModel::new(&CurveInvariants::new(3, 3, 0, &[0]).unwrap()).unwrap();
        assert!(BundleSpace::new(&m.variety, &m.conormal).is_err());
    }

    #[test]
    fn tangent_c1_on_curve() {
        let b = twisted_cubic();
        let s = reference::Symbols::of(&b);
        let expected = &(&-&s.k[1] - &s.f[1]) + &b.zeta().scale_int(3);
        assert_eq!(b.tangent_chern().homogeneous_part(1), expected);
    }

    #[test]
    fn virtual_leading_terms() {
        let b = twisted_cubic();
        let cb = b.virtual_chern(3);
        let s = reference::Symbols::of(&b);
        assert_eq!(cb[0], &b.zeta() + &(&s.k[1] + &s.f[1]));
        // r = 1: C(1,2) = C(1,3) = 0, so no pure z^2, z^3 terms.
        assert_eq!(cb[1].coefficient(&[0, 0, 0, 0, 2]), rat(0));
        assert_eq!(cb[2].coefficient(&[0, 0, 0, 0, 3]), rat(0));
    }

    #[test]
    fn engine_matches_reference_on_twisted_cubic() {
        let b = twisted_cubic();
        let tangent = b.tangent_chern();
        for (i, c) in reference::tangent_chern(&b).iter().enumerate() {
            assert_eq!(&tangent.homogeneous_part(i as u32 + 1), c);
        }
        let cb = b.virtual_chern(3);
        assert_eq!(cb.as_slice(), reference::virtual_chern(&b).as_slice());
        assert_eq!(cb.as_slice(), reference::virtual_chern_expanded(&b).as_slice());
    }

    #[test]
    fn locus_classes_match_formal_thom_classes() {
        for r in 1..=3 {
            for n in r + 1..=6 {
                let b = BundleSpace::formal(r, n).unwrap();
                let cb = b.virtual_chern(3);
                let tp2 = &cb[0].pow(2) + &cb[1];
                let tp3 = &(&cb[0].pow(3) + &(&cb[0] * &cb[1]).scale_int(3)) + &cb[2].scale_int(2);
                assert_eq!(reference::cuspidal_class(&b), tp2, "r={r} n={n}");
                assert_eq!(reference::kappa_class(&b), tp3, "r={r} n={n}");
                assert_eq!(cb.as_slice(), reference::virtual_chern_expanded(&b).as_slice());
            }
        }
    }
}
