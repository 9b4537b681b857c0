//! Irreducible representations of `G = Θ^n ⋊ H` for abelian `H`.
//!
//! Each irreducible is induced from `Θ^n·H_i`, where `H_i` stabilizes a
//! character `chi_i`, by extending `chi_i` and twisting with a character `psi`
//! of `H_i`. Its dimension is `[H : H_i]` (the orbit size) and its space of
//! `H`-invariants is one-dimensional exactly when `psi` is trivial. Only the
//! triviality of `psi` matters for the bounds, so `psi` is carried as an
//! index in `0..|H_i|` with index 0 reserved for the trivial character.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::action::{all_orbits, GaloisActionSpec, Orbit};
use crate::character::{is_trivial_on_b, PrimePower};
use crate::error::{Error, Result};
use crate::rational::{from_uint, ratio};

/// One irreducible `rho_{i,psi}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepDatum {
    orbit: Orbit,
    psi_index: u64,
    dim: BigUint,
    fixed_dim: u32,
}

impl IrrepDatum {
    /// The irreducible attached to `orbit` and the `psi_index`-th character of its stabilizer.
    pub fn new(orbit: Orbit, psi_index: u64) -> Result<Self> {
        if BigUint::from(psi_index) >= orbit.stabilizer_order {
            return Err(Error::InvalidArgument(format!(
                "psi index {psi_index} out of range for a stabilizer of order {}",
                orbit.stabilizer_order
            )));
        }
        Ok(IrrepDatum {
            dim: orbit.size.clone(),
            fixed_dim: u32::from(psi_index == 0),
            orbit,
            psi_index,
        })
    }

    pub fn orbit(&self) -> &Orbit {
        &self.orbit
    }

    pub fn psi_index(&self) -> u64 {
        self.psi_index
    }

    pub fn psi_is_trivial(&self) -> bool {
        self.psi_index == 0
    }

    pub fn dim(&self) -> &BigUint {
        &self.dim
    }

    /// `[H : H_i]`.
    pub fn index(&self) -> &BigUint {
        &self.orbit.size
    }

    pub fn level(&self) -> &PrimePower {
        self.orbit.representative.level()
    }
}

/// Every irreducible of `Θ^n ⋊ H`, ordered by orbit representative and then `psi` index.
pub fn enumerate_irreps(action: &GaloisActionSpec) -> Result<Vec<IrrepDatum>> {
    if !action.is_abelian() {
        return Err(Error::NonAbelian);
    }
    let mut out = Vec::new();
    for orbit in all_orbits(action)? {
        let count = orbit
            .stabilizer_order
            .to_u64()
            .expect("stabilizer order is bounded by the enumeration limit");
        for j in 0..count {
            out.push(IrrepDatum::new(orbit.clone(), j)?);
        }
    }
    Ok(out)
}

/// `dim (rho_{i,psi})^H`: 1 when `psi` is trivial, 0 otherwise.
pub fn fixed_space_dim(irrep: &IrrepDatum) -> u32 {
    irrep.fixed_dim
}

/// `[H : H_i]^{-1} · dim rho_{i,psi}`.
pub fn fixed_dim_bound(irrep: &IrrepDatum) -> BigRational {
    ratio(&irrep.dim, irrep.index())
}

/// `|H|^{-1} · dim W'`, the bound on `dim (W')^H` when every constituent of `W'` has trivial stabilizer.
pub fn new_part_fixed_bound(new_part_dim: &BigUint, h_order: &BigUint) -> Result<BigRational> {
    if h_order.is_zero() {
        return Err(Error::InvalidArgument("|H| must be positive".into()));
    }
    Ok(ratio(new_part_dim, h_order))
}

/// A finite-dimensional `G`-representation given by its irreducible constituents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpectrum {
    action: GaloisActionSpec,
    constituents: Vec<(IrrepDatum, BigUint)>,
}

impl RepSpectrum {
    pub fn new(action: &GaloisActionSpec) -> Self {
        RepSpectrum {
            action: action.clone(),
            constituents: Vec::new(),
        }
    }

    /// Adds `multiplicity` copies of `irrep`.
    pub fn push(&mut self, irrep: IrrepDatum, multiplicity: impl Into<BigUint>) -> Result<()> {
        self.action.level().check_same(irrep.level())?;
        self.constituents.push((irrep, multiplicity.into()));
        Ok(())
    }

    pub fn level(&self) -> &PrimePower {
        self.action.level()
    }

    pub fn action(&self) -> &GaloisActionSpec {
        &self.action
    }

    pub fn constituents(&self) -> &[(IrrepDatum, BigUint)] {
        &self.constituents
    }

    pub fn is_empty(&self) -> bool {
        self.constituents.is_empty()
    }

    /// `Σ multiplicity · dim`.
    pub fn total_dim(&self) -> BigUint {
        self.constituents.iter().map(|(r, m)| m * r.dim()).sum()
    }

    /// `dim W^H = Σ multiplicity · fixed_space_dim`.
    pub fn fixed_dim(&self) -> BigUint {
        self.constituents
            .iter()
            .map(|(r, m)| m * BigUint::from(fixed_space_dim(r)))
            .sum()
    }

    /// `Σ multiplicity · fixed_dim_bound`, the termwise upper bound on [`fixed_dim`](Self::fixed_dim).
    pub fn fixed_dim_bound(&self) -> BigRational {
        self.constituents
            .iter()
            .map(|(r, m)| fixed_dim_bound(r) * from_uint(m))
            .sum()
    }
}

/// Splits a spectrum into the constituents on which `B = ker(Θ^n → Θ^(n-1))`
/// acts trivially and the remainder (the new part).
///
/// `B` acts nontrivially exactly on irreducibles whose orbit consists of
/// characters of exact order `p^n`.
pub fn split_by_b(spectrum: &RepSpectrum) -> Result<(RepSpectrum, RepSpectrum)> {
    if spectrum.level().n() == 0 {
        return Err(Error::LevelZero);
    }
    let mut invariant = RepSpectrum::new(&spectrum.action);
    let mut new_part = RepSpectrum::new(&spectrum.action);
    for (irrep, mult) in &spectrum.constituents {
        let target = if is_trivial_on_b(&irrep.orbit.representative)? {
            &mut invariant
        } else {
            &mut new_part
        };
        target.constituents.push((irrep.clone(), mult.clone()));
    }
    Ok((invariant, new_part))
}
