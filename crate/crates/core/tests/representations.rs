mod support;

use std::collections::HashMap;

use fermat_tower::rational::{from_uint, ratio};
use fermat_tower::{
    enumerate_irreps, fixed_dim_bound, fixed_space_dim, is_trivial_on_b, new_part_fixed_bound, split_by_b,
    stabilizer_order, GaloisActionSpec, IrrepDatum, PrimePower, RepSpectrum,
};
use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn pair(irrep: &IrrepDatum) -> (u64, u64) {
    let chi = &irrep.orbit().representative;
    (u64::try_from(chi.a()).unwrap(), u64::try_from(chi.b()).unwrap())
}

#[test]
fn sum_of_squares_for_every_scalar_subgroup() {
    for (p, n, m) in support::odd_prime_powers(125) {
        let level = PrimePower::new(p, n).unwrap();
        for g in support::all_scalar_subgroup_generators(m) {
            let action = GaloisActionSpec::scalar(&level, vec![big(g)]).unwrap();
            let irreps = enumerate_irreps(&action).unwrap();
            let squares: BigUint = irreps.iter().map(|r| r.dim() * r.dim()).sum();
            assert_eq!(squares, big(m * m) * action.order(), "g={g} mod {m}");
        }
    }
}

#[test]
fn fixed_dims_agree_with_frobenius_oracle() {
    let mut cache = HashMap::new();
    let mut checked = 0usize;
    for (p, n, m) in support::odd_prime_powers(125) {
        let level = PrimePower::new(p, n).unwrap();
        for g in support::all_scalar_subgroup_generators(m) {
            let action = GaloisActionSpec::scalar(&level, vec![big(g)]).unwrap();
            let group = support::scalar_group(&[g], m);
            let irreps = enumerate_irreps(&action).unwrap();
            let mut i = 0;
            while i < irreps.len() {
                let chi = pair(&irreps[i]);
                let expected = support::induced_fixed_dims(&group, m, chi, &mut cache);
                assert_eq!(expected.len() as u64, u64::try_from(&irreps[i].orbit().stabilizer_order).unwrap());
                for (j, (num, den)) in expected.iter().enumerate() {
                    let rho = &irreps[i + j];
                    assert_eq!(pair(rho), chi);
                    assert_eq!(rho.psi_index(), j as u64);
                    assert_eq!(num % den, 0, "non-integral average for {chi:?} mod {m}");
                    assert_eq!(i64::from(fixed_space_dim(rho)), num / den, "{chi:?} mod {m}, psi {j}");
                    assert_eq!(fixed_dim_bound(rho), ratio(&big(1), &big(1)));
                    checked += 1;
                }
                i += expected.len();
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn primitive_orbits_have_trivial_stabilizer() {
    for (p, n, m) in support::odd_prime_powers(125) {
        let level = PrimePower::new(p, n).unwrap();
        let action = GaloisActionSpec::full_units(&level);
        let group = support::scalar_group(&support::units(m), m);
        for rho in enumerate_irreps(&action).unwrap() {
            let chi = &rho.orbit().representative;
            if is_trivial_on_b(chi).unwrap() {
                continue;
            }
            let (a, b) = pair(&rho);
            let brute = group.iter().filter(|&&u| u * a % m == a && u * b % m == b).count();
            assert_eq!(brute, 1);
            assert!(stabilizer_order(chi, &action).unwrap().is_one());
            assert_eq!(rho.dim(), action.order());
        }
    }
}

#[test]
fn random_spectra_respect_fixed_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let level = PrimePower::new(3, 2).unwrap();
    let units = GaloisActionSpec::full_units(&level);
    let mut actions = vec![units.clone()];
    for g in support::all_scalar_subgroup_generators(9) {
        actions.push(GaloisActionSpec::scalar(&level, vec![big(g)]).unwrap());
    }
    let catalogues: Vec<Vec<IrrepDatum>> = actions.iter().map(|a| enumerate_irreps(a).unwrap()).collect();

    for round in 0..1000 {
        let which = if round % 2 == 0 { 0 } else { rng.gen_range(0..actions.len()) };
        let (action, catalogue) = (&actions[which], &catalogues[which]);
        let mut spectrum = RepSpectrum::new(action);
        for _ in 0..rng.gen_range(0..12) {
            let rho = catalogue[rng.gen_range(0..catalogue.len())].clone();
            spectrum.push(rho, rng.gen_range(0u32..6)).unwrap();
        }

        assert!(from_uint(&spectrum.fixed_dim()) <= spectrum.fixed_dim_bound());
        for (rho, _) in spectrum.constituents() {
            assert!(from_uint(&BigUint::from(fixed_space_dim(rho))) <= fixed_dim_bound(rho));
        }

        let (invariant, new_part) = split_by_b(&spectrum).unwrap();
        assert_eq!(invariant.total_dim() + new_part.total_dim(), spectrum.total_dim());
        assert_eq!(
            invariant.constituents().len() + new_part.constituents().len(),
            spectrum.constituents().len()
        );
        for (rho, _) in invariant.constituents() {
            assert!(is_trivial_on_b(&rho.orbit().representative).unwrap());
        }
        for (rho, _) in new_part.constituents() {
            assert!(!is_trivial_on_b(&rho.orbit().representative).unwrap());
        }

        if which == 0 {
            let bound = new_part_fixed_bound(&new_part.total_dim(), units.order()).unwrap();
            assert!(from_uint(&new_part.fixed_dim()) <= bound);
        }
    }
}
