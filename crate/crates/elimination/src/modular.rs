//! Arithmetic modulo word-sized primes, used to compute gcd images that are
//! lifted back to the integers by Chinese remaindering.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

pub type PolyP = Vec<u64>;

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &WITNESSES {
        let mut x = pow(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^62`, largest first.
pub fn primes() -> impl Iterator<Item = u64> {
    ((1u64 << 61)..(1u64 << 62)).rev().step_by(2).filter(|&n| is_prime(n))
}

pub fn reduce(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in a word")
}

pub fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| add(mul(acc, x, p), c, p))
}

fn rem(mut a: PolyP, b: &[u64], p: u64) -> PolyP {
    let db = b.len() - 1;
    let lead_inv = inv(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let q = mul(a[top], lead_inv, p);
        if q != 0 {
            for i in 0..=db {
                a[top - db + i] = sub(a[top - db + i], mul(q, b[i], p), p);
            }
        }
        a.pop();
        a = trim(a);
    }
    a
}

/// Monic gcd; empty for two zero inputs.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let li = inv(lead, p);
        for c in a.iter_mut() {
            *c = mul(*c, li, p);
        }
    }
    a
}

/// Newton interpolation through distinct nodes; low degree first.
pub fn interpolate(nodes: &[u64], values: &[u64], p: u64) -> PolyP {
    let n = nodes.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = sub(nodes[i], nodes[i - level], p);
            dd[i] = mul(sub(dd[i], dd[i - 1], p), inv(denom, p), p);
        }
    }
    let mut coeffs = vec![0u64; n];
    for i in (0..n).rev() {
        let mut next = vec![0u64; n];
        for j in 0..n {
            if coeffs[j] == 0 {
                continue;
            }
            if j + 1 < n {
                next[j + 1] = add(next[j + 1], coeffs[j], p);
            }
            next[j] = sub(next[j], mul(coeffs[j], nodes[i], p), p);
        }
        next[0] = add(next[0], dd[i], p);
        coeffs = next;
    }
    coeffs
}

/// Combine `r mod m` with `v mod p` into a residue modulo `m p`.
pub fn crt(r: &BigInt, m: &BigInt, v: u64, p: u64) -> BigInt {
    let r_p = reduce(r, p);
    let m_inv = inv(reduce(m, p), p);
    let t = mul(sub(v, r_p, p), m_inv, p);
    r + m * BigInt::from(t)
}

/// Representative of `r mod m` in `(-m/2, m/2]`.
pub fn symmetric(r: &BigInt, m: &BigInt) -> BigInt {
    let r = r.mod_floor(m);
    if (&r * 2u32) > *m {
        r - m
    } else {
        r
    }
}

pub fn is_zero_mod(c: &BigInt, p: u64) -> bool {
    c.sign() == Sign::NoSign || reduce(c, p).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert!(ps.iter().all(|&p| p > (1 << 61)));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn gcd_mod_p() {
        let p = 1_000_000_007;
        // (x - 1)(x - 2) and (x - 1)(x + 5)
        let a = vec![2, p - 3, 1];
        let b = vec![p - 5, 4, 1];
        assert_eq!(gcd(&a, &b, p), vec![p - 1, 1]);
    }

    #[test]
    fn crt_lifts_negative() {
        let (p, q) = (1_000_000_007u64, 998_244_353u64);
        let x = BigInt::from(-123_456_789_012i64);
        let r = crt(&BigInt::from(reduce(&x, p)), &BigInt::from(p), reduce(&x, q), q);
        assert_eq!(symmetric(&r, &(BigInt::from(p) * q)), x);
    }
}
