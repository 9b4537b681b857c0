//! Integer helpers: primality, factoring, and multiplicative orders modulo prime powers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors by trial division, ascending.
pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Euler's phi of `p^n` for an odd prime `p`. `phi(p^0) = 1`.
pub fn phi_prime_power(p: u64, n: u32) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    BigUint::from(p).pow(n - 1) * BigUint::from(p - 1)
}

/// Order of the unit `u` in `(Z/p^n Z)^*`.
///
/// `u` must be coprime to `p`. At `n = 0` the unit group is trivial and the order is 1.
pub fn unit_order(u: &BigUint, p: u64, n: u32) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let mut primes = distinct_prime_factors(p - 1);
    if n >= 2 && !primes.contains(&p) {
        primes.push(p);
    }
    if let (Some(m), Some(u)) = (p.checked_pow(n), u.to_u64()) {
        let mut order = p.pow(n - 1) * (p - 1);
        for q in primes {
            while order.is_multiple_of(q) && pow_mod(u, order / q, m) == 1 {
                order /= q;
            }
        }
        return BigUint::from(order);
    }
    let modulus = BigUint::from(p).pow(n);
    let mut order = phi_prime_power(p, n);
    for q in primes {
        let q = BigUint::from(q);
        while order.is_multiple_of(&q) {
            let candidate = &order / &q;
            if u.modpow(&candidate, &modulus).is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    order
}

pub fn lcm(a: &BigUint, b: &BigUint) -> BigUint {
    if a.is_zero() || b.is_zero() {
        return BigUint::zero();
    }
    a.lcm(b)
}

/// Smallest primitive root modulo `p^n` (`n ≥ 1`, `p` odd prime).
///
/// A primitive root `g` mod `p` lifts to one mod every `p^n` unless
/// `g^(p-1) ≡ 1 (mod p^2)`, in which case `g + p` does.
pub fn primitive_root(p: u64, n: u32) -> BigUint {
    let factors = distinct_prime_factors(p - 1);
    let g = (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every odd prime has a primitive root");
    if n == 1 {
        return BigUint::from(g);
    }
    let p2 = BigUint::from(p).pow(2);
    let g_big = BigUint::from(g);
    if g_big.modpow(&BigUint::from(p - 1), &p2).is_one() {
        BigUint::from(g) + BigUint::from(p)
    } else {
        g_big
    }
}
