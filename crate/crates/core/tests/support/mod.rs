//! Brute-force reference implementations used as test oracles.
//!
//! Nothing here calls into the library's group or tower code paths: groups
//! are built by repeated multiplication, orbits by applying every group
//! element, and fixed-space dimensions by averaging induced characters in
//! exact cyclotomic arithmetic.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Odd prime powers `p^n` (with `n ≥ 1`) up to `bound`, as `(p, n, p^n)`.
pub fn odd_prime_powers(bound: u64) -> Vec<(u64, u32, u64)> {
    let is_prime = |x: u64| x >= 2 && (2..x).take_while(|d| d * d <= x).all(|d| !x.is_multiple_of(d));
    let mut out = Vec::new();
    for p in (3..=bound).filter(|&p| is_prime(p)) {
        let mut n = 1;
        let mut m = p;
        while m <= bound {
            out.push((p, n, m));
            n += 1;
            m *= p;
        }
    }
    out.sort_by_key(|&(_, _, m)| m);
    out
}

pub fn units(m: u64) -> Vec<u64> {
    (1..m).filter(|&u| gcd(u, m) == 1).collect()
}

pub fn unit_order(u: u64, m: u64) -> u64 {
    let mut k = 1;
    let mut x = u % m;
    while x != 1 {
        x = x * u % m;
        k += 1;
    }
    k
}

/// Closure of `gens` under multiplication mod `m`, sorted.
pub fn scalar_group(gens: &[u64], m: u64) -> Vec<u64> {
    let mut seen = BTreeSet::from([1 % m]);
    let mut frontier = vec![1 % m];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x * g % m;
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// One generator per subgroup of the cyclic group `(Z/m)^*`: `g^(phi/d)` for each divisor `d`.
pub fn all_scalar_subgroup_generators(m: u64) -> Vec<u64> {
    let us = units(m);
    let phi = us.len() as u64;
    let g = *us.iter().find(|&&u| unit_order(u, m) == phi).expect("cyclic unit group");
    (1..=phi)
        .filter(|d| phi.is_multiple_of(*d))
        .map(|d| {
            let e = phi / d;
            (0..e).fold(1 % m, |acc, _| acc * g % m)
        })
        .collect()
}

/// Smallest `k ≥ 1` with `k·(a, b) ≡ 0 (mod m)`.
pub fn exact_order(a: u64, b: u64, m: u64) -> u64 {
    (1..=m).find(|k| (k * a).is_multiple_of(m) && (k * b).is_multiple_of(m)).unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteOrbit {
    pub representative: (u64, u64),
    pub size: u64,
    pub stabilizer: u64,
}

/// Orbits under the scalar group `group`, computed by applying every element.
pub fn scalar_orbits(group: &[u64], m: u64) -> Vec<BruteOrbit> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if seen.contains(&(a, b)) {
                continue;
            }
            let orbit: BTreeSet<(u64, u64)> = group.iter().map(|&u| (u * a % m, u * b % m)).collect();
            let stabilizer = group.iter().filter(|&&u| u * a % m == a && u * b % m == b).count() as u64;
            out.push(BruteOrbit {
                representative: *orbit.iter().next().unwrap(),
                size: orbit.len() as u64,
                stabilizer,
            });
            seen.extend(orbit);
        }
    }
    out
}

/// Number of lattice points `(a, b)` with `a, b ≥ 0` and `a + b ≤ d - 3`
/// (the holomorphic differentials `x^a y^b dx / y^(d-1)` on the Fermat curve).
pub fn lattice_count(d: u64) -> u64 {
    let mut count = 0;
    for a in 0..d {
        for b in 0..d {
            if a + b + 3 <= d {
                count += 1;
            }
        }
    }
    count
}

/// Integer polynomials, lowest degree first.
pub type Poly = Vec<i64>;

fn trim(mut f: Poly) -> Poly {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

fn poly_mul(f: &Poly, g: &Poly) -> Poly {
    let mut out = vec![0; f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(out)
}

/// Quotient and remainder by a monic divisor.
fn poly_divmod(f: &Poly, g: &Poly) -> (Poly, Poly) {
    let g = trim(g.clone());
    assert_eq!(*g.last().unwrap(), 1, "divisor must be monic");
    let mut r = trim(f.clone());
    if r.len() < g.len() {
        return (vec![0], r);
    }
    let mut q = vec![0; r.len() - g.len() + 1];
    while r.len() >= g.len() && !(r.len() == 1 && r[0] == 0) {
        let shift = r.len() - g.len();
        let lead = *r.last().unwrap();
        q[shift] = lead;
        for (i, c) in g.iter().enumerate() {
            r[shift + i] -= lead * c;
        }
        r = trim(r);
        if r.len() < g.len() {
            break;
        }
    }
    (trim(q), r)
}

/// The `n`-th cyclotomic polynomial, from `x^n - 1 = Π_{d | n} Φ_d`.
pub fn cyclotomic(n: usize, cache: &mut HashMap<usize, Poly>) -> Poly {
    if let Some(f) = cache.get(&n) {
        return f.clone();
    }
    let mut xn1 = vec![0; n + 1];
    xn1[0] = -1;
    xn1[n] = 1;
    let mut divisor: Poly = vec![1];
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        divisor = poly_mul(&divisor, &cyclotomic(d, cache));
    }
    let (q, r) = poly_divmod(&xn1, &divisor);
    assert!(r.iter().all(|&c| c == 0));
    cache.insert(n, q.clone());
    q
}

/// Fixed-space dimension of every `Ind_{H_i}^H psi_j` for the stabilizer `H_i` of `chi`,
/// computed as `(1/|H|) Σ_h trace(h)` in `Z[ζ_N]`, `N = |H_i|`.
///
/// `psi_j(g^k) = ζ^(jk)` for a fixed generator `g` of the cyclic group `H_i`.
/// Returns `(numerator, denominator)` pairs indexed by `j`.
pub fn induced_fixed_dims(group: &[u64], m: u64, chi: (u64, u64), cache: &mut HashMap<usize, Poly>) -> Vec<(i64, i64)> {
    let (a, b) = chi;
    let stab: Vec<u64> = group
        .iter()
        .copied()
        .filter(|&u| u * a % m == a && u * b % m == b)
        .collect();
    let n = stab.len();
    let gen = *stab
        .iter()
        .find(|&&u| unit_order(u, m) as usize == n)
        .expect("stabilizers of scalar actions are cyclic");
    let mut dlog = BTreeMap::new();
    let mut x = 1 % m;
    for k in 0..n {
        dlog.insert(x, k);
        x = x * gen % m;
    }

    let inverse: BTreeMap<u64, u64> = group
        .iter()
        .map(|&x| (x, *group.iter().find(|&&y| x * y % m == 1 % m).unwrap()))
        .collect();

    // weight[k] = #{(h, x) ∈ H × H : x h x^{-1} = g^k}
    let mut weight = vec![0i64; n];
    for &h in group {
        for &x in group {
            let conj = x * h % m * inverse[&x] % m;
            if let Some(&k) = dlog.get(&conj) {
                weight[k] += 1;
            }
        }
    }

    let phi_n = cyclotomic(n, cache);
    (0..n)
        .map(|j| {
            // Σ_h trace(h) · |H_i| = Σ_k weight[k] ζ^{jk}
            let mut f = vec![0i64; n];
            for (k, w) in weight.iter().enumerate() {
                f[j * k % n] += w;
            }
            let (_, r) = poly_divmod(&f, &phi_n);
            assert!(r[1..].iter().all(|&c| c == 0), "trace average is not rational: {r:?}");
            (r[0], (group.len() * n) as i64)
        })
        .collect()
}
