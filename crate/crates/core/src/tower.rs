//! The Fermat tower ladder: genera, Jacobian dimensions and new parts, and
//! the degrees of the cyclotomic fields `F_i = K(μ_{p^i})` (with `F_0 = F = K(ζ_p)`).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::character::PrimePower;
use crate::error::{Error, Result};
use crate::rational::{from_uint, ratio};

/// Genus `(d-1)(d-2)/2` of the smooth plane Fermat curve of degree `d`.
pub fn fermat_genus(d: &BigUint) -> Result<BigUint> {
    if d.is_zero() {
        return Err(Error::InvalidArgument("curve degree must be at least 1".into()));
    }
    let two = BigUint::from(2u32);
    if d <= &two {
        return Ok(BigUint::zero());
    }
    Ok((d - 1u32) * (d - 2u32) / two)
}

/// One rung of the tower: the curve `x^d + y^d + z^d = 0` with `d = p^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerLevel {
    pub level: PrimePower,
    pub degree: BigUint,
    pub genus: BigUint,
    pub dim_j: BigUint,
    /// `dim J'_n = dim J_n - dim J_{n-1}`, and 0 at `n = 0`.
    pub dim_jprime: BigUint,
}

pub fn tower_level(p: u64, n: u32) -> Result<TowerLevel> {
    let level = PrimePower::new(p, n)?;
    let genus = fermat_genus(level.value())?;
    let dim_jprime = match level.parent() {
        Some(parent) => &genus - fermat_genus(parent.value())?,
        None => BigUint::zero(),
    };
    Ok(TowerLevel {
        degree: level.value().clone(),
        dim_j: genus.clone(),
        genus,
        dim_jprime,
        level,
    })
}

/// Absolute degrees `[F_i : Q]` for `i = 0..=n`, plus `[K : Q]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDegrees {
    p: u64,
    k_degree: BigUint,
    over_q: Vec<BigUint>,
}

impl FieldDegrees {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// `[K : Q]`.
    pub fn k_degree(&self) -> &BigUint {
        &self.k_degree
    }

    /// `[F : Q]` with `F = K(ζ_p)`.
    pub fn f_degree(&self) -> &BigUint {
        &self.over_q[0]
    }

    /// Highest level covered.
    pub fn max_level(&self) -> u32 {
        (self.over_q.len() - 1) as u32
    }

    /// `[F_i : Q]`.
    pub fn over_q(&self, i: u32) -> Result<&BigUint> {
        self.over_q.get(i as usize).ok_or(Error::DegreesTooShort {
            covered: self.max_level(),
            requested: i,
        })
    }

    /// `[F_i : K]`.
    pub fn over_k(&self, i: u32) -> Result<BigUint> {
        Ok(self.over_q(i)? / &self.k_degree)
    }

    /// `[F_i : F]`.
    pub fn over_f(&self, i: u32) -> Result<BigUint> {
        Ok(self.over_q(i)? / self.f_degree())
    }

    fn check_covers(&self, p: u64, n: u32) -> Result<()> {
        if p != self.p {
            return Err(Error::InvalidArgument(format!(
                "field degrees were built for p = {}, not p = {p}",
                self.p
            )));
        }
        self.over_q(n).map(|_| ())
    }
}

/// Builds `[F_i : Q]` for `i = 0..=n`.
///
/// When `linearly_disjoint` is set, `K` is assumed disjoint from `Q(μ_{p^∞})`,
/// giving `[F : Q] = [K : Q]·(p-1)` and `[F_i : F] = p^max(i-1, 0)`. Otherwise
/// `overrides` must supply every level. Overrides always win, and the result
/// must satisfy: `[K:Q] | [F_i:Q]`, `[F:K] | p-1`, `F_1 = F`, and
/// `[F_{i+1} : F_i] ∈ {1, p}`.
pub fn field_degrees(
    p: u64,
    n: u32,
    k_degree: &BigUint,
    linearly_disjoint: bool,
    overrides: &BTreeMap<u32, BigUint>,
) -> Result<FieldDegrees> {
    PrimePower::new(p, 0)?;
    if k_degree.is_zero() {
        return Err(Error::InvalidArgument("[K:Q] must be at least 1".into()));
    }
    if let Some((&i, _)) = overrides.range(n + 1..).next() {
        return Err(Error::InconsistentDegrees(format!("override for level {i} beyond n = {n}")));
    }
    let pp = BigUint::from(p);
    let base = k_degree * BigUint::from(p - 1);
    let mut over_q = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let degree = match overrides.get(&i) {
            Some(d) => d.clone(),
            None if linearly_disjoint => &base * pp.pow(i.saturating_sub(1)),
            None => {
                return Err(Error::InconsistentDegrees(format!(
                    "K is not linearly disjoint and no degree was given for level {i}"
                )))
            }
        };
        over_q.push(degree);
    }

    let inconsistent = |msg: String| Err(Error::InconsistentDegrees(msg));
    for (i, d) in over_q.iter().enumerate() {
        if d.is_zero() || !d.is_multiple_of(k_degree) {
            return inconsistent(format!("[F_{i}:Q] = {d} is not a positive multiple of [K:Q] = {k_degree}"));
        }
    }
    let f_over_k = &over_q[0] / k_degree;
    if !BigUint::from(p - 1).is_multiple_of(&f_over_k) {
        return inconsistent(format!("[F:K] = {f_over_k} does not divide p - 1 = {}", p - 1));
    }
    for i in 1..over_q.len() {
        let (lo, hi) = (&over_q[i - 1], &over_q[i]);
        let step_ok = if i == 1 {
            hi == lo
        } else {
            hi == lo || *hi == lo * &pp
        };
        if !step_ok {
            return inconsistent(format!(
                "[F_{i}:F_{}] = {hi}/{lo} must be {}",
                i - 1,
                if i == 1 { "1" } else { "1 or p" }
            ));
        }
    }
    Ok(FieldDegrees {
        p,
        k_degree: k_degree.clone(),
        over_q,
    })
}

/// `S_n = Σ_{i=0}^{n} dim J'_i / [F_i : K]`, exactly.
pub fn rank_sum(p: u64, n: u32, degrees: &FieldDegrees) -> Result<BigRational> {
    degrees.check_covers(p, n)?;
    let mut sum = BigRational::zero();
    for i in 0..=n {
        let rung = tower_level(p, i)?;
        sum += ratio(&rung.dim_jprime, &degrees.over_k(i)?);
    }
    Ok(sum)
}

/// `S_n / p^n`.
pub fn sum_growth_ratio(p: u64, n: u32, degrees: &FieldDegrees) -> Result<BigRational> {
    let s = rank_sum(p, n, degrees)?;
    Ok(s / from_uint(&BigUint::from(p).pow(n)))
}

/// The ladder for levels `0..=n` together with the running sums `S_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerTable {
    pub levels: Vec<TowerLevel>,
    pub degrees: FieldDegrees,
    pub partial_sums: Vec<BigRational>,
}

impl TowerTable {
    /// `S_i / p^i` for every level.
    pub fn growth_ratios(&self) -> Vec<BigRational> {
        self.levels
            .iter()
            .zip(&self.partial_sums)
            .map(|(l, s)| s / from_uint(&l.degree))
            .collect()
    }
}

pub fn tower_table(p: u64, n: u32, degrees: &FieldDegrees) -> Result<TowerTable> {
    degrees.check_covers(p, n)?;
    let mut levels = Vec::with_capacity(n as usize + 1);
    let mut partial_sums = Vec::with_capacity(n as usize + 1);
    let mut running = BigRational::zero();
    for i in 0..=n {
        let rung = tower_level(p, i)?;
        running += ratio(&rung.dim_jprime, &degrees.over_k(i)?);
        partial_sums.push(running.clone());
        levels.push(rung);
    }
    Ok(TowerTable {
        levels,
        degrees: degrees.clone(),
        partial_sums,
    })
}

/// `(p+1) / (2(p-1))`, the limit of `S_n / p^n` under maximal degree growth with `K = Q`.
pub fn growth_constant(p: u64) -> BigRational {
    ratio(&BigUint::from(p + 1), &BigUint::from(2 * (p - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rational_degrees(p: u64, n: u32) -> FieldDegrees {
        field_degrees(p, n, &big(1), true, &BTreeMap::new()).unwrap()
    }

    // #{(a, b) : a, b ≥ 0, a + b ≤ d - 3}
    fn lattice_count(d: u64) -> u64 {
        if d < 3 {
            return 0;
        }
        (0..=d - 3).map(|a| d - 3 - a + 1).sum()
    }

    #[test]
    fn genus_examples() {
        assert_eq!(fermat_genus(&big(1)).unwrap(), big(0));
        assert_eq!(fermat_genus(&big(3)).unwrap(), big(1));
        assert_eq!(fermat_genus(&big(9)).unwrap(), big(28));
        assert!(fermat_genus(&big(0)).is_err());
        for d in 1..=60 {
            assert_eq!(fermat_genus(&big(d)).unwrap(), big(lattice_count(d)));
        }
    }

    #[test]
    fn tower_level_examples() {
        let l = tower_level(3, 2).unwrap();
        assert_eq!((l.genus, l.dim_jprime), (big(28), big(27)));
        let l = tower_level(3, 0).unwrap();
        assert_eq!((l.genus, l.dim_jprime), (big(0), big(0)));
        let l = tower_level(3, 3).unwrap();
        assert_eq!((l.genus, l.dim_jprime), (big(325), big(297)));
        assert!(tower_level(4, 1).is_err());
    }

    #[test]
    fn default_degrees() {
        let d = rational_degrees(3, 3);
        let got: Vec<_> = (0..=3).map(|i| d.over_q(i).unwrap().clone()).collect();
        assert_eq!(got, vec![big(2), big(2), big(6), big(18)]);
        assert_eq!(rational_degrees(5, 2).over_q(2).unwrap(), &big(20));
        for p in [3, 5, 7, 11] {
            assert_eq!(rational_degrees(p, 4).over_f(0).unwrap(), big(1));
        }
        let k3 = field_degrees(5, 2, &big(3), true, &BTreeMap::new()).unwrap();
        assert_eq!(k3.over_q(2).unwrap(), &big(60));
        assert_eq!(k3.over_k(2).unwrap(), big(20));
    }

    #[test]
    fn degree_overrides() {
        // K = Q(sqrt(-3)) = Q(ζ_3): F = K, degrees 2, 2, 6, 18 with [K:Q] = 2
        let overrides = BTreeMap::from([(0, big(2)), (1, big(2)), (2, big(6)), (3, big(18))]);
        let d = field_degrees(3, 3, &big(2), false, &overrides).unwrap();
        assert_eq!(d.over_k(3).unwrap(), big(9));

        let missing = BTreeMap::from([(0, big(2))]);
        assert!(matches!(
            field_degrees(3, 2, &big(2), false, &missing),
            Err(Error::InconsistentDegrees(_))
        ));
        for bad in [
            BTreeMap::from([(2, big(5))]),
            BTreeMap::from([(2, big(4))]),
            BTreeMap::from([(1, big(6))]),
            BTreeMap::from([(0, big(4))]),
            BTreeMap::from([(4, big(54))]),
        ] {
            assert!(
                matches!(field_degrees(3, 3, &big(1), true, &bad), Err(Error::InconsistentDegrees(_))),
                "{bad:?}"
            );
        }
        assert!(field_degrees(3, 3, &big(0), true, &BTreeMap::new()).is_err());
    }

    #[test]
    fn rank_sum_examples() {
        assert_eq!(rank_sum(3, 3, &rational_degrees(3, 3)).unwrap(), q(43, 2));
        assert_eq!(rank_sum(3, 6, &rational_degrees(3, 6)).unwrap(), q(719, 1));
        assert_eq!(rank_sum(3, 0, &rational_degrees(3, 0)).unwrap(), q(0, 1));
        assert_eq!(sum_growth_ratio(3, 3, &rational_degrees(3, 3)).unwrap(), q(43, 54));
        assert_eq!(sum_growth_ratio(3, 6, &rational_degrees(3, 6)).unwrap(), q(719, 729));
        assert_eq!(sum_growth_ratio(3, 0, &rational_degrees(3, 0)).unwrap(), q(0, 1));
        assert!(matches!(
            rank_sum(3, 4, &rational_degrees(3, 3)),
            Err(Error::DegreesTooShort { covered: 3, requested: 4 })
        ));
        assert!(rank_sum(5, 2, &rational_degrees(3, 3)).is_err());
    }

    #[test]
    fn table_sums_are_monotone() {
        let t = tower_table(3, 6, &rational_degrees(3, 6)).unwrap();
        assert_eq!(t.partial_sums[3], q(43, 2));
        assert_eq!(t.partial_sums[6], q(719, 1));
        assert!(t.partial_sums.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(t.growth_ratios()[6], q(719, 729));
    }
}
