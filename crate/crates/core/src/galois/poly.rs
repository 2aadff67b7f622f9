//! Dense polynomials over the prime field F_p, little-endian coefficients.
//!
//! Only what field construction needs: reduction, products modulo a monic
//! modulus, and an exhaustive irreducibility test for small degrees.

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is prime and small, Fermat is enough.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Remainder of `a` modulo `m` (m need not be monic, only nonzero).
pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = inv_mod_p(m[dm], p) as u64;
    let mut r: Vec<u32> = a.to_vec();
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let factor = r[dr] as u64 * lead_inv % p as u64;
        let shift = dr - dm;
        for (i, &c) in m.iter().enumerate().take(dm + 1) {
            let sub = factor * c as u64 % p as u64;
            let cur = r[i + shift] as u64;
            r[i + shift] = ((cur + p as u64 - sub) % p as u64) as u32;
        }
    }
    r
}

/// Product of two residues modulo the monic `modulus`, returned fixed-width
/// with `modulus.len() - 1` coefficients.
pub(crate) fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    let mut r = rem(&prod, modulus, p);
    r.resize(k.max(r.len()), 0);
    r.truncate(k);
    r
}

/// Exhaustive check: no monic factor of degree 1..=deg/2 divides `f`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let Some(n) = degree(f) else {
        return false;
    };
    if n == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = digits(idx, p, d);
            g.push(1);
            if degree(&rem(f, &g, p)).is_none() {
                return false;
            }
        }
    }
    true
}

/// Little-endian base-`p` digits of `n`, exactly `width` of them.
pub(crate) fn digits(mut n: u64, p: u32, width: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(width);
    for _ in 0..width {
        out.push((n % p as u64) as u32);
        n /= p as u64;
    }
    out
}

/// First monic irreducible of degree `k`, ordering candidates by comparing
/// coefficients from the constant term upwards.
pub(crate) fn smallest_irreducible(p: u32, k: usize) -> Vec<u32> {
    let count = (p as u64).pow(k as u32);
    for n in 0..count {
        // Reverse the digits so c0 is the most significant position.
        let mut lower = digits(n, p, k);
        lower.reverse();
        lower.push(1);
        if is_irreducible(&lower, p) {
            return lower;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn irreducibility_small_cases() {
        // t^2 + t + 1 over F2
        assert!(is_irreducible(&[1, 1, 1], 2));
        // t^2 + 1 = (t + 1)^2 over F2
        assert!(!is_irreducible(&[1, 0, 1], 2));
        // t^2 + 1 over F3 has no root
        assert!(is_irreducible(&[1, 0, 1], 3));
        // t^2 + 1 over F5: 2^2 = 4 = -1
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // t^4 + t^2 + 1 = (t^2 + t + 1)^2 over F2 has no roots but factors
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn smallest_moduli() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
        // t^2 + t + 1 has discriminant -3 = 2, a non-square mod 5
        assert_eq!(smallest_irreducible(5, 2), vec![1, 1, 1]);
        // t^4 + t^3 + 1 precedes t^4 + t + 1 when c0 is compared first
        assert_eq!(smallest_irreducible(2, 4), vec![1, 0, 0, 1, 1]);
    }

    #[test]
    fn mul_mod_reduces() {
        // t * t = t + 1 mod t^2 + t + 1 over F2
        assert_eq!(mul_mod(&[0, 1], &[0, 1], &[1, 1, 1], 2), vec![1, 1]);
    }
}
