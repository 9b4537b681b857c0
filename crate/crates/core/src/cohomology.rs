//! H^1-dimension bookkeeping and assembly of the Mordell-Weil rank bounds.
//!
//! Arithmetic inputs that cannot be computed here (`dim H^1(G_T(F), F_p)`,
//! the Iwasawa constant `C`) are parameters, and every hypothesis the bounds
//! depend on is an explicit flag that must be asserted by the caller.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Hypothesis, Result};
use crate::rational::{from_uint, ratio};
use crate::tower::{rank_sum, tower_level, FieldDegrees};

/// Successive quotient ranks `r_0, …, r_{N-1}` of a filtration with trivial-action quotients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiltrationData {
    ranks: Vec<BigUint>,
}

impl FiltrationData {
    pub fn new<I, T>(ranks: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        FiltrationData {
            ranks: ranks.into_iter().map(Into::into).collect(),
        }
    }

    pub fn ranks(&self) -> &[BigUint] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `dim V = Σ r_i`.
    pub fn total_dim(&self) -> BigUint {
        self.ranks.iter().sum()
    }

    /// Stacks `other` beneath `self`.
    pub fn concat(&self, other: &FiltrationData) -> FiltrationData {
        FiltrationData {
            ranks: self.ranks.iter().chain(&other.ranks).cloned().collect(),
        }
    }
}

/// `(Σ_{j ≥ start} r_j) · h1`, the bound on `dim H^1(G_T(F), V_{start})`.
pub fn filtration_h1_bound(filtration: &FiltrationData, h1: &BigUint, start: usize) -> Result<BigUint> {
    if start > filtration.len() {
        return Err(Error::InvalidArgument(format!(
            "start index {start} exceeds filtration length {}",
            filtration.len()
        )));
    }
    let tail: BigUint = filtration.ranks[start..].iter().sum();
    Ok(tail * h1)
}

/// `dim V · h1` for a subquotient `V`.
pub fn subquotient_h1_bound(dim_v: &BigUint, h1: &BigUint) -> BigUint {
    dim_v * h1
}

fn require(asserted: bool, hypothesis: Hypothesis) -> Result<()> {
    if asserted {
        Ok(())
    } else {
        Err(Error::HypothesisNotAsserted(hypothesis))
    }
}

fn require_positive(x: &BigUint, what: &str) -> Result<()> {
    if x.is_zero() {
        Err(Error::InvalidArgument(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

/// `rank A(F) ≤ 2 · h1 · dim A`: `A[p]` has dimension `2·dim A` and is a
/// subquotient of `V_n`, and the rank is bounded by `dim H^1(G_T(F), A[p])`.
pub fn theorem_main_bound(dim_a: &BigUint, h1: &BigUint, triviality_asserted: bool) -> Result<BigUint> {
    require(triviality_asserted, Hypothesis::TrivialH1Action)?;
    require_positive(dim_a, "dim A")?;
    Ok(subquotient_h1_bound(&(dim_a * 2u32), h1))
}

/// [`theorem_main_bound`] with a rational upper estimate for `h1`.
pub fn theorem_main_bound_rational(
    dim_a: &BigUint,
    h1_estimate: &BigRational,
    triviality_asserted: bool,
) -> Result<BigRational> {
    require(triviality_asserted, Hypothesis::TrivialH1Action)?;
    require_positive(dim_a, "dim A")?;
    Ok(from_uint(&(dim_a * 2u32)) * h1_estimate)
}

/// `dim H^1(G_T(F_n), F_p) = 1 + dim H^1(G_T(F_∞), F_p)^{Gal(F_∞/F_n)}`.
pub fn h1_level_from_infinity(dim_infinity_fixed: &BigUint) -> BigUint {
    dim_infinity_fixed + 1u32
}

/// Arithmetic inputs to the Iwasawa-theoretic bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomParams {
    /// `dim_{F_p} H^1(G_T(F), F_p)`.
    pub h1_base: BigUint,
    /// `[F : Q]`.
    pub f_degree_over_q: BigUint,
    /// The constant `C` absorbing the cotorsion part.
    pub iwasawa_c: BigRational,
    pub mu_zero_asserted: bool,
}

impl CohomParams {
    pub fn new(
        h1_base: BigUint,
        f_degree_over_q: BigUint,
        iwasawa_c: BigRational,
        mu_zero_asserted: bool,
    ) -> Result<Self> {
        require_positive(&f_degree_over_q, "[F:Q]")?;
        if iwasawa_c.is_negative() {
            return Err(Error::InvalidArgument(format!("C = {iwasawa_c} must be non-negative")));
        }
        Ok(CohomParams {
            h1_base,
            f_degree_over_q,
            iwasawa_c,
            mu_zero_asserted,
        })
    }

    /// Placeholder inputs `h1_base = 1`, `C = 0`. Not arithmetic data.
    pub fn illustrative(f_degree_over_q: BigUint) -> Self {
        CohomParams {
            h1_base: BigUint::one(),
            f_degree_over_q,
            iwasawa_c: BigRational::zero(),
            mu_zero_asserted: false,
        }
    }

    /// `r_2(F) = [F:Q] / 2`, since `F ⊇ μ_p` is totally complex.
    pub fn r2(&self) -> BigRational {
        ratio(&self.f_degree_over_q, &BigUint::from(2u32))
    }
}

/// `dim H^1(G_T(F_n), F_p) ≤ (1/2)([F_n : Q] + C)`.
pub fn iwasawa_h1_bound(params: &CohomParams, fn_degree_over_q: &BigUint) -> Result<BigRational> {
    require(params.mu_zero_asserted, Hypothesis::MuZero)?;
    require_positive(fn_degree_over_q, "[F_n:Q]")?;
    Ok((from_uint(fn_degree_over_q) + &params.iwasawa_c) / BigRational::from_integer(BigInt::from(2)))
}

/// `rank A(F_n) ≤ dim A · ([F_n : Q] + C)`.
pub fn prop_fnrank_bound(
    dim_a: &BigUint,
    fn_degree_over_q: &BigUint,
    c: &BigRational,
    mu_zero_asserted: bool,
) -> Result<BigRational> {
    require(mu_zero_asserted, Hypothesis::MuZero)?;
    require_positive(dim_a, "dim A")?;
    require_positive(fn_degree_over_q, "[F_n:Q]")?;
    if c.is_negative() {
        return Err(Error::InvalidArgument(format!("C = {c} must be non-negative")));
    }
    Ok(from_uint(dim_a) * (from_uint(fn_degree_over_q) + c))
}

/// `rank J_n(K) ≤ [K:Q] · dim J_n + C · S_n`.
pub fn fermat_rank_bound_exact(
    p: u64,
    n: u32,
    degrees: &FieldDegrees,
    c: &BigRational,
    mu_zero_asserted: bool,
) -> Result<BigRational> {
    require(mu_zero_asserted, Hypothesis::MuZero)?;
    if c.is_negative() {
        return Err(Error::InvalidArgument(format!("C = {c} must be non-negative")));
    }
    let s = rank_sum(p, n, degrees)?;
    let dim_j = tower_level(p, n)?.dim_j;
    Ok(from_uint(&(degrees.k_degree() * dim_j)) + c * s)
}

/// `[K:Q] · dim J_n + C' · p^n` over a range of levels.
///
/// `C'` is `C` times the largest `S_n / p^n` seen for `1 ≤ n ≤ n_max`. This is a
/// value consistent with the computed range, not a proven constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticBound {
    pub c_prime: BigRational,
    /// The level attaining the largest ratio (the lowest such level on ties).
    pub argmax_level: u32,
    /// Bounds for levels `0..=n_max`.
    pub per_level: Vec<BigRational>,
}

pub fn fermat_rank_bound_asymptotic(
    p: u64,
    n_max: u32,
    degrees: &FieldDegrees,
    c: &BigRational,
    mu_zero_asserted: bool,
) -> Result<AsymptoticBound> {
    require(mu_zero_asserted, Hypothesis::MuZero)?;
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    if c.is_negative() {
        return Err(Error::InvalidArgument(format!("C = {c} must be non-negative")));
    }
    let mut sup = BigRational::zero();
    let mut argmax_level = 1;
    for n in 1..=n_max {
        let r = crate::tower::sum_growth_ratio(p, n, degrees)?;
        if r > sup {
            sup = r;
            argmax_level = n;
        }
    }
    let c_prime = c * sup;
    let per_level = (0..=n_max)
        .map(|n| {
            let dim_j = tower_level(p, n)?.dim_j;
            Ok(from_uint(&(degrees.k_degree() * dim_j)) + &c_prime * from_uint(&BigUint::from(p).pow(n)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AsymptoticBound {
        c_prime,
        argmax_level,
        per_level,
    })
}

/// `rank_bound < dim J`.
pub fn chabauty_check(rank_bound: &BigRational, dim_j: &BigUint) -> bool {
    rank_bound < &from_uint(dim_j)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    /// `rank J_n(F) ≤ 2·h1·dim J_n`.
    TheoremMain,
    /// `rank J_n(F_n) ≤ dim J_n·([F_n:Q] + C)`.
    PropFnrank,
    /// `rank J_n(K) ≤ [K:Q]·dim J_n + C·S_n`.
    FermatExact,
    /// `rank J_n(K) ≤ [K:Q]·dim J_n + C'·p^n`.
    FermatAsymptotic,
}

impl BoundKind {
    pub fn tag(&self) -> &'static str {
        match self {
            BoundKind::TheoremMain => "theorem-main",
            BoundKind::PropFnrank => "prop-fnrank",
            BoundKind::FermatExact => "fermat-exact",
            BoundKind::FermatAsymptotic => "fermat-asymptotic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundValue {
    pub kind: BoundKind,
    pub value: BigRational,
    /// `value < dim J_n`.
    pub chabauty: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelBounds {
    pub n: u32,
    pub dim_j: BigUint,
    pub bounds: Vec<BoundValue>,
}

impl LevelBounds {
    pub fn get(&self, kind: BoundKind) -> Option<&BoundValue> {
        self.bounds.iter().find(|b| b.kind == kind)
    }
}

/// All four bounds for levels `0..=n_max`, with their inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub p: u64,
    pub degrees: FieldDegrees,
    pub params: CohomParams,
    pub triviality_asserted: bool,
    pub c_prime: BigRational,
    pub levels: Vec<LevelBounds>,
}

/// Assembles a [`BoundReport`]. Both hypotheses must be asserted.
///
/// At `n = 0` the curve is a line (`dim J_0 = 0`), where the theorem-main and
/// prop-fnrank bounds are reported as 0.
pub fn bound_report(
    p: u64,
    n_max: u32,
    degrees: &FieldDegrees,
    params: &CohomParams,
    triviality_asserted: bool,
) -> Result<BoundReport> {
    require(triviality_asserted, Hypothesis::TrivialH1Action)?;
    require(params.mu_zero_asserted, Hypothesis::MuZero)?;
    if &params.f_degree_over_q != degrees.f_degree() {
        return Err(Error::InvalidArgument(format!(
            "[F:Q] = {} disagrees with the field degrees ({})",
            params.f_degree_over_q,
            degrees.f_degree()
        )));
    }
    let c = &params.iwasawa_c;
    let asymptotic = fermat_rank_bound_asymptotic(p, n_max, degrees, c, true)?;
    let mut levels = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let dim_j = tower_level(p, n)?.dim_j;
        let (main, fnrank) = if dim_j.is_zero() {
            (BigRational::zero(), BigRational::zero())
        } else {
            (
                from_uint(&theorem_main_bound(&dim_j, &params.h1_base, true)?),
                prop_fnrank_bound(&dim_j, degrees.over_q(n)?, c, true)?,
            )
        };
        let values = [
            (BoundKind::TheoremMain, main),
            (BoundKind::PropFnrank, fnrank),
            (BoundKind::FermatExact, fermat_rank_bound_exact(p, n, degrees, c, true)?),
            (BoundKind::FermatAsymptotic, asymptotic.per_level[n as usize].clone()),
        ];
        let bounds = values
            .into_iter()
            .map(|(kind, value)| BoundValue {
                chabauty: chabauty_check(&value, &dim_j),
                kind,
                value,
            })
            .collect();
        levels.push(LevelBounds { n, dim_j, bounds });
    }
    Ok(BoundReport {
        p,
        degrees: degrees.clone(),
        params: params.clone(),
        triviality_asserted,
        c_prime: asymptotic.c_prime,
        levels,
    })
}
