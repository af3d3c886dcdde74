//! Dense polynomials over the prime field `GF(p)`, used when choosing and
//! validating the defining modulus of an extension.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(out)
}

/// Remainder of `a` modulo `m` (`m` nonzero).
pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let k = r.len() - 1;
        let factor = r[k] * lead_inv % p;
        if factor != 0 {
            for i in 0..=dm {
                let j = k - dm + i;
                r[j] = (r[j] + p - factor * m[i] % p) % p;
            }
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(&out, m, p)
}

fn pow_poly_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(&r, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    r
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `t^(p^k) mod m` by `k` successive `p`-th powers.
fn frobenius_power_of_t(k: usize, m: &[u64], p: u64) -> Vec<u64> {
    let mut x = rem(&[0, 1], m, p);
    for _ in 0..k {
        x = pow_poly_mod(&x, p, m, p);
    }
    x
}

/// Rabin's test: `m` monic of degree `d` is irreducible iff `t^(p^d) = t mod m`
/// and `gcd(t^(p^(d/r)) - t, m) = 1` for every prime `r | d`.
pub(crate) fn is_irreducible(m: &[u64], p: u64) -> bool {
    let d = m.len() - 1;
    if d == 0 {
        return false;
    }
    let t = rem(&[0, 1], m, p);
    if frobenius_power_of_t(d, m, p) != t {
        return false;
    }
    for r in prime_factors(d as u64) {
        let h = frobenius_power_of_t(d / r as usize, m, p);
        let g = gcd(m, &sub(&h, &[0, 1], p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `d`: candidates are
/// ordered by their non-leading coefficients read from `t^(d-1)` down to `t^0`.
pub(crate) fn smallest_irreducible(d: usize, p: u64) -> Vec<u64> {
    let count = p.pow(d as u32);
    for code in 0..count {
        let mut m = vec![0u64; d + 1];
        let mut c = code;
        for slot in m.iter_mut().take(d) {
            *slot = c % p;
            c /= p;
        }
        m[d] = 1;
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_quadratic() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert!(!is_irreducible(&[1, 0, 1], 2));
    }

    #[test]
    fn counts_irreducible_quartics_over_gf2() {
        // (2^4 - 2^2) / 4 = 3
        let n = (0..16u64)
            .filter(|code| {
                let m = [
                    code & 1,
                    (code >> 1) & 1,
                    (code >> 2) & 1,
                    (code >> 3) & 1,
                    1,
                ];
                is_irreducible(&m, 2)
            })
            .count();
        assert_eq!(n, 3);
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(528), vec![2, 3, 11]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
    }
}
