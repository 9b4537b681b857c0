//! Prime-power levels and characters of `(Z/p^n Z)^2`.
//!
//! A character is stored as a residue pair `(a, b)` through the fixed
//! self-duality `(a, b) ↦ [(s, t) ↦ a·s + b·t mod p^n]`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};

/// An odd prime `p`, a level `n`, and `p^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    n: u32,
    value: BigUint,
}

impl PrimePower {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if p < 3 || !arith::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(PrimePower {
            p,
            n,
            value: BigUint::from(p).pow(n),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `p^n`.
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// `p^k` for an arbitrary exponent.
    pub fn p_pow(&self, k: u32) -> BigUint {
        BigUint::from(self.p).pow(k)
    }

    /// Number of characters, `p^(2n)`.
    pub fn character_count(&self) -> BigUint {
        &self.value * &self.value
    }

    /// `|(Z/p^n Z)^*|`.
    pub fn unit_count(&self) -> BigUint {
        arith::phi_prime_power(self.p, self.n)
    }

    /// The same prime one level down. `None` at `n = 0`.
    pub fn parent(&self) -> Option<PrimePower> {
        self.n.checked_sub(1).map(|n| PrimePower {
            p: self.p,
            n,
            value: BigUint::from(self.p).pow(n),
        })
    }

    pub(crate) fn value_u64(&self) -> Option<u64> {
        self.value.to_u64()
    }

    pub(crate) fn check_same(&self, other: &PrimePower) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::LevelMismatch {
                expected: self.value.clone(),
                found: other.value.clone(),
            })
        }
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.n)
    }
}

/// Largest `k ≤ n` with `p^k | x`, taking `v(0) = n`.
pub fn p_adic_valuation(x: &BigUint, level: &PrimePower) -> u32 {
    if x.is_zero() {
        return level.n;
    }
    if let Some(mut v) = x.to_u64() {
        let mut k = 0;
        while k < level.n && v % level.p == 0 {
            v /= level.p;
            k += 1;
        }
        return k;
    }
    let p = BigUint::from(level.p);
    let mut k = 0;
    let mut rest = x.clone();
    while k < level.n {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        rest = q;
        k += 1;
    }
    k
}

/// A character of `Θ^n = (Z/p^n Z)^2`, given by the pair `(a, b)`.
///
/// Ordering is lexicographic on `(a, b)`; characters at different levels
/// compare by level first so the order stays total.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    level: PrimePower,
    a: BigUint,
    b: BigUint,
}

impl Character {
    pub fn new(level: &PrimePower, a: impl Into<BigUint>, b: impl Into<BigUint>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        for v in [&a, &b] {
            if v >= level.value() {
                return Err(Error::ResidueOutOfRange {
                    value: v.clone(),
                    modulus: level.value().clone(),
                });
            }
        }
        Ok(Character {
            level: level.clone(),
            a,
            b,
        })
    }

    /// Builds a character from arbitrary integers, reducing them mod `p^n`.
    pub fn reduced(level: &PrimePower, a: impl Into<BigUint>, b: impl Into<BigUint>) -> Self {
        Character {
            a: a.into() % level.value(),
            b: b.into() % level.value(),
            level: level.clone(),
        }
    }

    pub fn trivial(level: &PrimePower) -> Self {
        Character {
            level: level.clone(),
            a: BigUint::zero(),
            b: BigUint::zero(),
        }
    }

    pub(crate) fn from_u64(level: &PrimePower, a: u64, b: u64) -> Self {
        Character {
            level: level.clone(),
            a: BigUint::from(a),
            b: BigUint::from(b),
        }
    }

    pub fn level(&self) -> &PrimePower {
        &self.level
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    /// Evaluates the character at `(s, t)`, returning `a·s + b·t mod p^n`.
    pub fn evaluate(&self, s: &BigUint, t: &BigUint) -> BigUint {
        (&self.a * s + &self.b * t) % self.level.value()
    }

    pub fn is_trivial(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `min(v(a), v(b))`.
    pub fn valuation(&self) -> u32 {
        p_adic_valuation(&self.a, &self.level).min(p_adic_valuation(&self.b, &self.level))
    }

    /// `k` such that the character has exact order `p^k`.
    pub fn order_exponent(&self) -> u32 {
        self.level.n - self.valuation()
    }

    pub(crate) fn as_u64_pair(&self) -> Option<(u64, u64)> {
        Some((self.a.to_u64()?, self.b.to_u64()?))
    }
}

impl PartialOrd for Character {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Character {
    fn cmp(&self, other: &Self) -> Ordering {
        self.level
            .value
            .cmp(&other.level.value)
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) mod {}", self.a, self.b, self.level.value)
    }
}

/// Exact order of `chi` in the dual group: `p^n / p^min(v(a), v(b))`.
pub fn char_exact_order(chi: &Character) -> BigUint {
    chi.level.p_pow(chi.order_exponent())
}

/// Whether `chi` is trivial on `B = ker(Θ^n → Θ^(n-1))`.
///
/// `B` is generated by `p^(n-1)·Θ^n`, so this holds exactly when the order of
/// `chi` divides `p^(n-1)`.
pub fn is_trivial_on_b(chi: &Character) -> Result<bool> {
    if chi.level.n == 0 {
        return Err(Error::LevelZero);
    }
    Ok(chi.order_exponent() < chi.level.n)
}

/// Number of characters of exact order `p^n`: `p^(2n) - p^(2(n-1))`.
pub fn primitive_character_count(level: &PrimePower) -> Result<BigUint> {
    let parent = level.parent().ok_or(Error::LevelZero)?;
    Ok(level.character_count() - parent.character_count())
}
