//! Closed-form degree formulas, kept independent of the Chow engine so the
//! two paths can check each other.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chow::{CurveInvariants, SurfaceChernNumbers};

fn b(v: i64) -> BigInt {
    BigInt::from(v)
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * b(n - i) / b(i + 1))
}

/// Degrees of the envelope, its cuspidal edge and the cusps of that edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusDegrees {
    #[serde(with = "crate::decimal")]
    pub envelope: BigInt,
    #[serde(with = "crate::decimal")]
    pub cuspidal_edge: BigInt,
    #[serde(with = "crate::decimal")]
    pub kappa: BigInt,
}

impl LocusDegrees {
    pub fn get(&self, k: u32) -> Option<&BigInt> {
        match k {
            1 => Some(&self.envelope),
            2 => Some(&self.cuspidal_edge),
            3 => Some(&self.kappa),
            _ => None,
        }
    }
}

/// Envelope of normal hyperplanes of a curve and its iterated cuspidal loci.
pub fn curve(inv: &CurveInvariants) -> LocusDegrees {
    let (d, g, k0) = (b(inv.d), b(inv.g), b(inv.stationary(0)));
    LocusDegrees {
        envelope: 6 * (&d + &g - 1) - 2 * &k0,
        cuspidal_edge: 3 * (3 * &d + 4 * &g - 4 - &k0),
        kappa: 4 * (3 * &d + 5 * &g - 5 - &k0),
    }
}

/// Trifogli's degree of the focal locus of a smooth degree-`d` hypersurface in `P^n`.
pub fn trifogli(n: u32, d: i64) -> BigInt {
    let e = b(d - 1);
    let geometric: BigInt = (0..=n as i64 - 2).map(|i| num_traits::pow(e.clone(), i as usize)).sum();
    let lead = b(n as i64 - 1) * num_traits::pow(e.clone(), n as usize - 2);
    b(d) * &e * (lead + 2 * geometric)
}

/// Focal loci of a surface, linear in its Chern numbers; valid in any `P^n`, `n >= 3`.
pub fn surface(c: &SurfaceChernNumbers) -> LocusDegrees {
    let (k2, c2, kh, h2) = (b(c.k2), b(c.c2), b(c.kh), b(c.h2));
    LocusDegrees {
        envelope: 2 * &k2 + 2 * &c2 + 18 * &kh + 30 * &h2,
        cuspidal_edge: 17 * &k2 + 5 * &c2 + 102 * &kh + 138 * &h2,
        kappa: 2 * (55 * &k2 + 5 * &c2 + 266 * &kh + 310 * &h2),
    }
}

/// The same three degrees for a smooth surface of degree `d` in `P^3`.
pub fn surface_in_p3(d: i64) -> LocusDegrees {
    let d = b(d);
    LocusDegrees {
        envelope: 2 * &d * (&d - 1) * (2 * &d - 1),
        cuspidal_edge: 2 * &d * (&d - 1) * (11 * &d - 16),
        kappa: 4 * &d * (30 * &d * &d - 97 * &d + 78),
    }
}

/// Classical values for a general surface of degree `d` in `P^3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SalmonReference {
    #[serde(with = "crate::decimal")]
    pub evolute_class: BigInt,
    #[serde(with = "crate::decimal")]
    pub ed_degree: BigInt,
    #[serde(with = "crate::decimal")]
    pub umbilics: BigInt,
}

pub fn salmon_reference(d: i64) -> SalmonReference {
    let d = b(d);
    SalmonReference {
        evolute_class: 2 * &d * (&d * &d - &d - 1),
        ed_degree: &d * (&d * &d - &d + 1),
        umbilics: 2 * &d * (5 * &d * &d - 14 * &d + 11),
    }
}

/// Salmon's characters of a space curve: order `m`, class of the strict
/// dual `n_S`, and the counts `theta`, `alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SalmonCharacters {
    #[serde(with = "crate::decimal")]
    pub m: BigInt,
    #[serde(with = "crate::decimal")]
    pub n_s: BigInt,
    #[serde(with = "crate::decimal")]
    pub theta: BigInt,
    #[serde(with = "crate::decimal")]
    pub alpha: BigInt,
    #[serde(with = "crate::decimal")]
    pub k2: BigInt,
}

/// Requires `n = 3`; reads `k_0`, `k_1` and derives `k_2`.
pub fn salmon_characters(inv: &CurveInvariants) -> SalmonCharacters {
    let (d, g, k0, k1) = (b(inv.d), b(inv.g), b(inv.stationary(0)), b(inv.stationary(1)));
    let k2 = 4 * (&d + 3 * (&g - 1)) - 3 * &k0 - 2 * &k1;
    SalmonCharacters {
        n_s: 3 * (&d + 2 * &g - 2) - 2 * &k0 - &k1,
        theta: k1.clone(),
        alpha: 2 * &k1 + &k2,
        m: d,
        k2,
    }
}

/// `deg D^m = C(m+1,2)(2g-2) + (m+1)d - sum_(i<m) (m-i) k_i`; `D^0` is the curve.
pub fn osculating_developable(inv: &CurveInvariants, m: u32) -> BigInt {
    let m = m as i64;
    let stationary: BigInt = (0..m).map(|i| b(m - i) * b(inv.stationary(i as usize))).sum();
    binom(m + 1, 2) * b(2 * inv.g - 2) + b(m + 1) * b(inv.d) - stationary
}

/// Rank of a curve (degree of its tangent developable), by Plücker.
pub fn curve_rank(inv: &CurveInvariants) -> BigInt {
    2 * (b(inv.d) + b(inv.g) - 1) - b(inv.stationary(0))
}

/// Envelope of the osculating hyperplanes of a curve in `P^n`.
pub fn osculating_hyperplane_envelope(inv: &CurveInvariants) -> BigInt {
    let n = inv.n as i64;
    let stationary: BigInt = (0..=n - 2).map(|i| b(n - 1 - i) * b(inv.stationary(i as usize))).sum();
    2 * (b(n * inv.d) + b(n * n - n + 1) * b(inv.g - 1) - stationary)
}
