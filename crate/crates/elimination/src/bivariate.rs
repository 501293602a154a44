//! Gcd and squarefree decomposition in `Z[X][Y]` by evaluation at integer
//! values of `X` and interpolation of the monic univariate images.
//!
//! A shear `X -> X + lambda Y` first makes the leading coefficient in `Y`
//! constant, so that every factor is monic up to a constant and the images of
//! the gcd need no leading-coefficient correction.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::modular;
use crate::poly::{total_degree, Poly, ZPoly2};
use crate::ring::Ring;

/// `p(X + lambda Y, Y)`
pub fn shear(p: &ZPoly2, lambda: i64) -> ZPoly2 {
    if lambda == 0 {
        return p.clone();
    }
    let lam = BigInt::from(lambda);
    let mut out: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for (j, row) in p.coeffs().iter().enumerate() {
        for (i, c) in row.coeffs().iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            // (X + lam Y)^i = sum_k C(i, k) X^k (lam Y)^(i - k)
            let mut binom = BigInt::from(1);
            for k in (0..=i).rev() {
                let term = c * &binom * num_traits::pow(lam.clone(), i - k);
                *out.entry((j + i - k, k)).or_default() += term;
                // C(i, k-1) = C(i, k) * k / (i - k + 1)
                binom = binom * BigInt::from(k) / BigInt::from(i - k + 1);
            }
        }
    }
    let deg_y = out.keys().map(|&(j, _)| j).max().unwrap_or(0);
    let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); deg_y + 1];
    for ((j, i), c) in out {
        if rows[j].len() <= i {
            rows[j].resize(i + 1, BigInt::default());
        }
        rows[j][i] = c;
    }
    Poly::new(rows.into_iter().map(Poly::new).collect())
}


fn lambdas() -> impl Iterator<Item = i64> {
    (0..).map(|k: i64| if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 })
}

fn shear_to_monic(p: &ZPoly2) -> (i64, ZPoly2) {
    let total = total_degree(p).unwrap_or(0);
    lambdas()
        .map(|l| (l, shear(p, l)))
        .find(|(_, s)| s.degree() == Some(total))
        .expect("some shear makes the Y-leading coefficient constant")
}

/// Gcd in `Z[X][Y]`, primitive with positive leading coefficient.
pub fn gcd2(p: &ZPoly2, q: &ZPoly2) -> ZPoly2 {
    if p.is_zero() {
        return q.primitive_part();
    }
    if q.is_zero() {
        return p.primitive_part();
    }
    if total_degree(p) == Some(0) || total_degree(q) == Some(0) {
        return Poly::one();
    }
    let (lambda, ps) = shear_to_monic(p);
    let qs = shear(q, lambda);
    let g = monic_gcd(&ps, &qs);
    shear(&g, -lambda).primitive_part()
}

/// Gcd when `lc_Y(p)` is a nonzero integer `L`.
///
/// The gcd `G` divides `p`, so `lc_Y(G)` divides `L` and `L G / lc_Y(G)` has
/// integer coefficients. Its images modulo primes are `L` times the monic gcds
/// of the specializations at `X = a`, interpolated in `X`.
fn monic_gcd(p: &ZPoly2, q: &ZPoly2) -> ZPoly2 {
    let lead = p.lc().lc();
    let deg_x = p.coeffs().iter().filter_map(|c| c.degree()).max().unwrap_or(0);
    let reduce_all = |f: &ZPoly2, m: u64| -> Vec<Vec<u64>> {
        f.coeffs()
            .iter()
            .map(|c| c.coeffs().iter().map(|v| modular::reduce(v, m)).collect())
            .collect()
    };
    let mut best: Option<usize> = None;
    let mut acc: Vec<Vec<BigInt>> = Vec::new();
    let mut modulus = BigInt::from(1);
    let mut previous: Option<ZPoly2> = None;
    for prime in modular::primes() {
        if modular::is_zero_mod(&lead, prime) {
            continue;
        }
        let (pp, qp) = (reduce_all(p, prime), reduce_all(q, prime));
        let lead_p = modular::reduce(&lead, prime);
        let mut k_best: Option<usize> = None;
        let mut nodes = Vec::new();
        let mut images: Vec<Vec<u64>> = Vec::new();
        let mut a = 0u64;
        while nodes.len() < deg_x + 1 {
            let u: Vec<u64> = pp.iter().map(|c| modular::eval(c, a, prime)).collect();
            let v: Vec<u64> = qp.iter().map(|c| modular::eval(c, a, prime)).collect();
            a += 1;
            if modular::trim(v.clone()).is_empty() {
                continue;
            }
            let g = modular::gcd(&u, &v, prime);
            let k = g.len() - 1;
            if k == 0 {
                return Poly::one();
            }
            match k_best {
                Some(b) if k > b => continue,
                Some(b) if k == b => {}
                _ => {
                    k_best = Some(k);
                    nodes.clear();
                    images.clear();
                }
            }
            nodes.push(a - 1);
            images.push(g.iter().map(|&c| modular::mul(c, lead_p, prime)).collect());
        }
        let k = k_best.expect("at least one sample");
        match best {
            Some(b) if k > b => continue,
            Some(b) if k == b => {}
            _ => {
                best = Some(k);
                acc = vec![vec![BigInt::default(); deg_x + 1]; k + 1];
                modulus = BigInt::from(1);
                previous = None;
            }
        }
        for (j, row) in acc.iter_mut().enumerate() {
            let values: Vec<u64> = images.iter().map(|img| img[j]).collect();
            let coeffs = modular::interpolate(&nodes, &values, prime);
            for (i, slot) in row.iter_mut().enumerate() {
                *slot = modular::crt(slot, &modulus, coeffs[i], prime);
            }
        }
        modulus *= prime;
        let candidate: ZPoly2 = Poly::new(
            acc.iter()
                .map(|row| Poly::new(row.iter().map(|c| modular::symmetric(c, &modulus)).collect()))
                .collect(),
        );
        if previous.as_ref() == Some(&candidate) {
            let g = candidate.primitive_part();
            if p.div_exact_poly(&g).is_some() && q.div_exact_poly(&g).is_some() {
                return g;
            }
        }
        previous = Some(candidate);
    }
    unreachable!("prime supply is exhausted only after 2^60 candidates")
}

/// Squarefree decomposition (Yun) of a polynomial whose content in `Z[X]` is one.
pub fn squarefree2(f: &ZPoly2) -> Vec<(ZPoly2, usize)> {
    let f = f.primitive_part();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let a0 = gcd2(&f, &fp);
    let mut b = f.div_exact_poly(&a0).expect("gcd divides f");
    let mut c = fp.div_exact_poly(&a0).expect("gcd divides f'");
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = gcd2(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_exact_poly(&a).expect("Yun step divides b");
        c = d.div_exact_poly(&a).expect("Yun step divides d");
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}
