//! Galois actions on the character lattice and their orbit decomposition.
//!
//! Scalar actions (a subgroup of `(Z/p^n Z)^*` multiplying both coordinates)
//! are handled in closed form wherever possible: the group order is the lcm of
//! the generator orders, and the stabilizer of a character of exact order `p^k`
//! is the kernel of reduction `H → (Z/p^k Z)^*`. Matrix actions are always
//! enumerated, so they are bounded by the enumeration limit.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{self, mul_mod};
use crate::character::{Character, PrimePower};
use crate::error::{Error, Result};

/// Default cap on brute-force enumeration sizes (`p^(2n)`, `|H|`, orbit sizes).
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1_000_000;

/// A 2×2 matrix `[[w, x], [y, z]]` stored row-major, acting on `(a, b)` as a column vector.
pub type Matrix2 = [u64; 4];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionKind {
    /// Multiplication of both coordinates by units from the generated subgroup.
    Scalar(Vec<BigUint>),
    /// Left multiplication by matrices from the generated subgroup of `GL_2(Z/p^n Z)`.
    Matrix(Vec<Matrix2>),
}

/// A single element of the acting group, with residues reduced mod `p^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Scalar(u64),
    Matrix(Matrix2),
}

impl GroupElement {
    #[inline]
    pub fn apply(&self, (a, b): (u64, u64), m: u64) -> (u64, u64) {
        match *self {
            GroupElement::Scalar(u) => (mul_mod(u, a, m), mul_mod(u, b, m)),
            GroupElement::Matrix([w, x, y, z]) => (
                add_mod(mul_mod(w, a, m), mul_mod(x, b, m), m),
                add_mod(mul_mod(y, a, m), mul_mod(z, b, m), m),
            ),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupElement, m: u64) -> GroupElement {
        match (*self, *other) {
            (GroupElement::Scalar(u), GroupElement::Scalar(v)) => GroupElement::Scalar(mul_mod(u, v, m)),
            (GroupElement::Matrix(l), GroupElement::Matrix(r)) => GroupElement::Matrix(mat_mul(&l, &r, m)),
            _ => unreachable!("mixed scalar and matrix elements"),
        }
    }

    pub fn act(&self, chi: &Character) -> Character {
        let m = chi.level().value_u64().expect("enumerated levels fit in u64");
        let pair = chi.as_u64_pair().expect("residues fit in u64");
        let (a, b) = self.apply(pair, m);
        Character::from_u64(chi.level(), a, b)
    }
}

#[inline]
fn add_mod(x: u64, y: u64, m: u64) -> u64 {
    ((x as u128 + y as u128) % m as u128) as u64
}

fn mat_mul(l: &Matrix2, r: &Matrix2, m: u64) -> Matrix2 {
    let add = |x, y| add_mod(x, y, m);
    [
        add(mul_mod(l[0], r[0], m), mul_mod(l[1], r[2], m)),
        add(mul_mod(l[0], r[1], m), mul_mod(l[1], r[3], m)),
        add(mul_mod(l[2], r[0], m), mul_mod(l[3], r[2], m)),
        add(mul_mod(l[2], r[1], m), mul_mod(l[3], r[3], m)),
    ]
}

/// A finite group `H` acting on the characters of `(Z/p^n Z)^2`.
#[derive(Clone, Debug)]
pub struct GaloisActionSpec {
    level: PrimePower,
    kind: ActionKind,
    order: BigUint,
    limit: u64,
    elements: OnceLock<Vec<GroupElement>>,
    // |H mod p^k| for k = 0..=n, filled on demand
    image_orders: Vec<OnceLock<BigUint>>,
}

impl PartialEq for GaloisActionSpec {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level && self.kind == other.kind && self.order == other.order
    }
}

impl Eq for GaloisActionSpec {}

impl GaloisActionSpec {
    /// The subgroup of `(Z/p^n Z)^*` generated by `generators`, acting by scalars.
    pub fn scalar(level: &PrimePower, generators: Vec<BigUint>) -> Result<Self> {
        let m = level.value();
        let p = BigUint::from(level.p());
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            let g = g % m;
            // every residue is a unit mod 1
            if level.n() > 0 && (&g % &p).is_zero() {
                return Err(Error::NotInvertible(g.to_string()));
            }
            gens.push(g);
        }
        let order = gens
            .iter()
            .map(|g| arith::unit_order(g, level.p(), level.n()))
            .fold(BigUint::one(), |acc, o| arith::lcm(&acc, &o));
        Ok(GaloisActionSpec {
            level: level.clone(),
            kind: ActionKind::Scalar(gens),
            order,
            limit: DEFAULT_ENUMERATION_LIMIT,
            elements: OnceLock::new(),
            image_orders: (0..=level.n()).map(|_| OnceLock::new()).collect(),
        })
    }

    /// All of `(Z/p^n Z)^*`, generated by a primitive root.
    pub fn full_units(level: &PrimePower) -> Self {
        let gens = if level.n() == 0 {
            Vec::new()
        } else {
            vec![arith::primitive_root(level.p(), level.n())]
        };
        Self::scalar(level, gens).expect("primitive roots are units")
    }

    /// The trivial group.
    pub fn trivial(level: &PrimePower) -> Self {
        Self::scalar(level, Vec::new()).expect("empty generator list")
    }

    /// The subgroup of `GL_2(Z/p^n Z)` generated by `generators`.
    ///
    /// The group is enumerated eagerly, so its order must not exceed the default limit.
    pub fn matrix(level: &PrimePower, generators: Vec<Matrix2>) -> Result<Self> {
        Self::matrix_with_limit(level, generators, DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn matrix_with_limit(level: &PrimePower, generators: Vec<Matrix2>, limit: u64) -> Result<Self> {
        let m = level
            .value_u64()
            .ok_or_else(|| Error::ModulusTooLarge(level.value().clone()))?;
        let p = level.p();
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            let g = g.map(|e| e % m);
            let det = (mul_mod(g[0], g[3], m) as i128 - mul_mod(g[1], g[2], m) as i128).rem_euclid(m as i128);
            if level.n() > 0 && (det as u64).is_multiple_of(p) {
                return Err(Error::NotInvertible(format!("{:?}", g)));
            }
            gens.push(g);
        }
        let elements = closure(
            &gens.iter().map(|&g| GroupElement::Matrix(g)).collect::<Vec<_>>(),
            GroupElement::Matrix([1 % m, 0, 0, 1 % m]),
            m,
            limit,
        )?;
        let order = BigUint::from(elements.len());
        Ok(GaloisActionSpec {
            level: level.clone(),
            kind: ActionKind::Matrix(gens),
            order,
            limit,
            elements: OnceLock::from(elements),
            image_orders: Vec::new(),
        })
    }

    /// Replaces the enumeration limit used by the brute-force paths.
    pub fn with_limit(mut self, limit: u64) -> Self {
        self.limit = limit;
        self
    }

    pub fn level(&self) -> &PrimePower {
        &self.level
    }

    pub fn kind(&self) -> &ActionKind {
        &self.kind
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `|H|`.
    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn is_scalar(&self) -> bool {
        matches!(self.kind, ActionKind::Scalar(_))
    }

    /// Whether `H` is abelian. Scalar groups always are; matrix groups are
    /// abelian exactly when their generators pairwise commute.
    pub fn is_abelian(&self) -> bool {
        match &self.kind {
            ActionKind::Scalar(_) => true,
            ActionKind::Matrix(gens) => {
                let m = self.modulus_u64().expect("matrix levels fit in u64");
                gens.iter().enumerate().all(|(i, g)| {
                    gens[i + 1..].iter().all(|h| mat_mul(g, h, m) == mat_mul(h, g, m))
                })
            }
        }
    }

    fn modulus_u64(&self) -> Result<u64> {
        self.level
            .value_u64()
            .ok_or_else(|| Error::ModulusTooLarge(self.level.value().clone()))
    }

    fn generator_elements(&self) -> Result<Vec<GroupElement>> {
        Ok(match &self.kind {
            ActionKind::Scalar(gens) => gens
                .iter()
                .map(|g| g.to_u64().map(GroupElement::Scalar))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::ModulusTooLarge(self.level.value().clone()))?,
            ActionKind::Matrix(gens) => gens.iter().map(|&g| GroupElement::Matrix(g)).collect(),
        })
    }

    fn check_budget(&self, required: &BigUint) -> Result<()> {
        if required > &BigUint::from(self.limit) {
            Err(Error::BudgetExceeded {
                required: required.clone(),
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    /// Every element of `H`, sorted. Enumerated on first use.
    pub fn elements(&self) -> Result<&[GroupElement]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        self.check_budget(&self.order)?;
        let m = self.modulus_u64()?;
        let identity = match self.kind {
            ActionKind::Scalar(_) => GroupElement::Scalar(1 % m),
            ActionKind::Matrix(_) => GroupElement::Matrix([1 % m, 0, 0, 1 % m]),
        };
        let elems = closure(&self.generator_elements()?, identity, m, self.limit)?;
        debug_assert_eq!(BigUint::from(elems.len()), self.order);
        Ok(self.elements.get_or_init(|| elems))
    }
}

fn closure(gens: &[GroupElement], identity: GroupElement, m: u64, limit: u64) -> Result<Vec<GroupElement>> {
    let mut seen: HashSet<GroupElement> = HashSet::from([identity]);
    let mut queue = vec![identity];
    while let Some(e) = queue.pop() {
        for g in gens {
            let next = g.compose(&e, m);
            if seen.insert(next) {
                if seen.len() as u64 > limit {
                    return Err(Error::BudgetExceeded {
                        required: BigUint::from(seen.len()),
                        limit,
                    });
                }
                queue.push(next);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// An orbit of characters under `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically least member.
    pub representative: Character,
    pub size: BigUint,
    pub stabilizer_order: BigUint,
}

impl Orbit {
    /// `p^k` where `p^k` is the common exact order of the orbit's members.
    pub fn exact_order(&self) -> BigUint {
        crate::character::char_exact_order(&self.representative)
    }
}

/// `|H_chi| = |{h ∈ H : h·chi = chi}|`.
///
/// For scalar actions this is `|H| / |H mod p^k|` where `p^k` is the order of
/// `chi`, computed without enumerating `H`.
pub fn stabilizer_order(chi: &Character, action: &GaloisActionSpec) -> Result<BigUint> {
    action.level.check_same(chi.level())?;
    match &action.kind {
        ActionKind::Scalar(gens) => {
            let k = chi.order_exponent();
            if k == 0 {
                return Ok(action.order.clone());
            }
            let image_order = action.image_orders[k as usize].get_or_init(|| {
                let modulus = action.level.p_pow(k);
                gens.iter()
                    .map(|g| arith::unit_order(&(g % &modulus), action.level.p(), k))
                    .fold(BigUint::one(), |acc, o| arith::lcm(&acc, &o))
            });
            Ok(&action.order / image_order)
        }
        ActionKind::Matrix(_) => {
            let m = action.modulus_u64()?;
            let pair = chi.as_u64_pair().expect("residues below a u64 modulus");
            let fixed = action.elements()?.iter().filter(|h| h.apply(pair, m) == pair).count();
            Ok(BigUint::from(fixed))
        }
    }
}

/// The orbit containing `chi`, with its least member as representative.
pub fn orbit_of(chi: &Character, action: &GaloisActionSpec) -> Result<Orbit> {
    let stab = stabilizer_order(chi, action)?;
    let size = &action.order / &stab;
    action.check_budget(&size)?;
    let m = action.modulus_u64()?;
    let gens = action.generator_elements()?;
    let start = chi.as_u64_pair().expect("residues below a u64 modulus");
    let mut seen: HashSet<(u64, u64)> = HashSet::from([start]);
    let mut queue = vec![start];
    let mut least = start;
    while let Some(x) = queue.pop() {
        for g in &gens {
            let y = g.apply(x, m);
            if seen.insert(y) {
                least = least.min(y);
                queue.push(y);
            }
        }
    }
    debug_assert_eq!(BigUint::from(seen.len()), size);
    Ok(Orbit {
        representative: Character::from_u64(chi.level(), least.0, least.1),
        size,
        stabilizer_order: stab,
    })
}

/// Decomposes all `p^(2n)` characters into orbits, sorted by representative.
pub fn all_orbits(action: &GaloisActionSpec) -> Result<Vec<Orbit>> {
    let level = &action.level;
    action.check_budget(&level.character_count())?;
    let m = action.modulus_u64()?;
    let gens = action.generator_elements()?;
    let idx = |(a, b): (u64, u64)| (a * m + b) as usize;
    let mut visited = vec![false; (m * m) as usize];
    let mut orbits = Vec::new();
    let mut queue = Vec::new();
    // Scanning in lexicographic order makes the first unvisited member of
    // each orbit its least element, and emits orbits already sorted.
    for a in 0..m {
        for b in 0..m {
            if visited[idx((a, b))] {
                continue;
            }
            visited[idx((a, b))] = true;
            queue.push((a, b));
            let mut size = 1u64;
            while let Some(x) = queue.pop() {
                for g in &gens {
                    let y = g.apply(x, m);
                    if !visited[idx(y)] {
                        visited[idx(y)] = true;
                        size += 1;
                        queue.push(y);
                    }
                }
            }
            let size = BigUint::from(size);
            let (stabilizer_order, rem) = action.order.div_rem(&size);
            debug_assert!(rem.is_zero());
            orbits.push(Orbit {
                representative: Character::from_u64(level, a, b),
                size,
                stabilizer_order,
            });
        }
    }
    Ok(orbits)
}
