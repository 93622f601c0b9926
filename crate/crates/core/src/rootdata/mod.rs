//! Root systems, weight lattices and level-ℓ alcoves of the simple Lie
//! algebras.
//!
//! Conventions:
//!
//! * Bourbaki numbering of simple roots for every family.
//! * Cartan matrix entries `a[i][j] = <α_i^∨, α_j>`, so the Dynkin labels of
//!   the simple root `α_j` are column `j`.
//! * The invariant form is normalized so that long roots have squared length
//!   2; in particular `(θ, θ) = 2` for the highest root `θ`.
//! * Weights are integer vectors of Dynkin labels (coordinates in the basis of
//!   fundamental weights) and are ordered lexicographically.
//!
//! All lattice arithmetic is exact. Root data for an algebra is built once and
//! shared through a process-wide registry.

mod build;
mod character;
mod weyl;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Ratio;

use crate::error::{Error, Result};

pub use build::Root;
pub(crate) use build::RootData;

/// Exact rationals used by the lattice layer.
pub type Rational = Ratio<i64>;

/// Family letter of a simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A validated (family, rank) pair.
///
/// Low-rank coincidences are canonicalized: `B1` and `C1` become `A1`, `D3`
/// becomes `A3`. `D1` and `D2` are rejected because they are not simple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidAlgebra {
            family: family.letter(),
            rank,
            reason,
        };
        if rank == 0 {
            return Err(invalid("rank must be positive"));
        }
        let (family, rank) = match (family, rank) {
            (Family::B | Family::C, 1) => (Family::A, 1),
            (Family::D, 3) => (Family::A, 3),
            (Family::D, 1 | 2) => return Err(invalid("D1 and D2 are not simple")),
            (Family::E, 6..=8) => (family, rank),
            (Family::E, _) => return Err(invalid("E requires rank 6, 7 or 8")),
            (Family::F, 4) => (family, rank),
            (Family::F, _) => return Err(invalid("F requires rank 4")),
            (Family::G, 2) => (family, rank),
            (Family::G, _) => return Err(invalid("G requires rank 2")),
            other => other,
        };
        Ok(CartanType { family, rank })
    }

    /// The orthogonal algebra so(n), canonicalized (so(3) is A1, so(6) is A3).
    pub fn orthogonal(n: usize) -> Result<Self> {
        match n {
            0..=2 | 4 => Err(Error::InvalidAlgebra {
                family: 'D',
                rank: n / 2,
                reason: "so(n) is not simple for n = 1, 2, 4",
            }),
            n if n % 2 == 1 => CartanType::new(Family::B, (n - 1) / 2),
            n => CartanType::new(Family::D, n / 2),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts `A2`, `e8`, and the classical aliases `sl3`, `so8`, `sp4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "algebra",
            token: s.to_string(),
        };
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        let number = |digits: &str| digits.parse::<usize>().map_err(|_| bad());
        if let Some(n) = lower.strip_prefix("sl") {
            let n = number(n)?;
            if n < 2 {
                return Err(bad());
            }
            return CartanType::new(Family::A, n - 1);
        }
        if let Some(n) = lower.strip_prefix("so") {
            return CartanType::orthogonal(number(n)?);
        }
        if let Some(n) = lower.strip_prefix("sp") {
            let n = number(n)?;
            if n < 2 || n % 2 == 1 {
                return Err(bad());
            }
            return CartanType::new(Family::C, n / 2);
        }
        let mut chars = t.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        CartanType::new(family, number(chars.as_str())?)
    }
}

/// A weight in Dynkin-label coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_i` (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, other: &Weight, k: i64) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `1,0,2`, `(1,0,2)` or `0` (the empty string is rank-0 zero).
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|_| Error::Parse {
                what: "weight",
                token: s.to_string(),
            })
    }
}

/// A dominant weight together with a level at which it is integrable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeveledWeight {
    weight: Weight,
    level: u32,
}

impl LeveledWeight {
    /// Checks rank, dominance and the alcove bound `(λ, θ) ≤ level`.
    pub fn new(g: &SimpleLieAlgebra, weight: Weight, level: u32) -> Result<Self> {
        g.check_dominant(&weight)?;
        if g.theta_pairing(&weight) > level as i64 {
            return Err(Error::AlcoveViolation {
                weight: weight.to_string(),
                level,
            });
        }
        Ok(LeveledWeight { weight, level })
    }

    /// The vacuum `ω₀` at the given level.
    pub fn vacuum(g: &SimpleLieAlgebra, level: u32) -> Self {
        LeveledWeight {
            weight: Weight::zero(g.rank()),
            level,
        }
    }

    pub(crate) fn new_unchecked(weight: Weight, level: u32) -> Self {
        LeveledWeight { weight, level }
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn into_weight(self) -> Weight {
        self.weight
    }
}

impl fmt::Display for LeveledWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.weight, self.level)
    }
}

/// A simple Lie algebra with its (shared, lazily built) root data.
#[derive(Clone)]
pub struct SimpleLieAlgebra {
    ty: CartanType,
    data: Arc<RootData>,
}

impl fmt::Debug for SimpleLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleLieAlgebra({})", self.ty)
    }
}

impl fmt::Display for SimpleLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ty.fmt(f)
    }
}

impl PartialEq for SimpleLieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty
    }
}

impl Eq for SimpleLieAlgebra {}

fn registry() -> &'static Mutex<HashMap<CartanType, Arc<RootData>>> {
    static REGISTRY: OnceLock<Mutex<HashMap<CartanType, Arc<RootData>>>> = OnceLock::new();
    REGISTRY.get_or_init(Default::default)
}

impl SimpleLieAlgebra {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::from_type(CartanType::new(family, rank)?))
    }

    pub fn from_type(ty: CartanType) -> Self {
        if let Some(data) = registry().lock().unwrap().get(&ty) {
            return SimpleLieAlgebra {
                ty,
                data: data.clone(),
            };
        }
        // Built outside the lock: large ranks take a moment and other
        // algebras should not wait on them.
        let built = Arc::new(RootData::build(ty));
        let data = registry()
            .lock()
            .unwrap()
            .entry(ty)
            .or_insert(built)
            .clone();
        SimpleLieAlgebra { ty, data }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn family(&self) -> Family {
        self.ty.family
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub(crate) fn data(&self) -> &RootData {
        &self.data
    }

    /// Finite-type Cartan matrix in Bourbaki numbering.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.data.cartan
    }

    /// Affine Cartan matrix, node 0 first.
    pub fn affine_cartan_matrix(&self) -> &[Vec<i64>] {
        &self.data.affine_cartan
    }

    /// Half squared lengths `(α_i, α_i)/2` of the simple roots.
    pub fn root_length_ratios(&self) -> &[Rational] {
        &self.data.sym
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_rank(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(())
    }

    /// The normalized invariant form `(λ, μ)`.
    pub fn normalized_form(&self, lambda: &Weight, mu: &Weight) -> Result<Rational> {
        self.check_rank(lambda)?;
        self.check_rank(mu)?;
        Ok(Rational::new(self.form_scaled(lambda, mu), self.form_scale()))
    }

    /// `form_scale() * (λ, μ)`, always an integer.
    pub fn form_scaled(&self, lambda: &Weight, mu: &Weight) -> i64 {
        let g = &self.data.form_int;
        let mut acc = 0i64;
        for (i, &a) in lambda.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = &g[i];
            let mut s = 0i64;
            for (j, &b) in mu.0.iter().enumerate() {
                s += row[j] * b;
            }
            acc += a * s;
        }
        acc
    }

    /// Common denominator of the form on the weight lattice.
    pub fn form_scale(&self) -> i64 {
        self.data.scale
    }

    /// Positive roots ordered by height, then by simple-root coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.data.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.data.positive_roots.len()
    }

    pub fn highest_root(&self) -> &Weight {
        &self.data.theta
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// `h∨ = 1 + (ρ, θ)`.
    pub fn dual_coxeter(&self) -> u32 {
        self.data.dual_coxeter
    }

    /// Comarks `a_1^∨ .. a_n^∨` from the null vector of the affine Cartan
    /// matrix (with `a_0^∨ = 1`).
    pub fn comarks(&self) -> &[i64] {
        &self.data.comarks
    }

    /// Marks: simple-root coordinates of `θ`.
    pub fn marks(&self) -> &[i64] {
        &self.data.marks
    }

    pub fn dim(&self) -> u64 {
        (self.rank() + 2 * self.num_positive_roots()) as u64
    }

    /// `(λ, θ)`, the minimal level at which `λ` is integrable.
    pub fn theta_pairing(&self, lambda: &Weight) -> i64 {
        lambda
            .0
            .iter()
            .zip(&self.data.comarks)
            .map(|(a, c)| a * c)
            .sum()
    }

    /// Dynkin labels of the simple root `α_i`.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.data.cartan.iter().map(|row| row[i]).collect())
    }

    /// Dynkin labels of the simple coroot `α_i^∨`, identified with a weight
    /// through the normalized form.
    pub fn simple_coroot(&self, i: usize) -> &Weight {
        &self.data.coroots[i]
    }

    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank() as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family() {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Dimension of the irreducible module `V_λ` (Weyl dimension formula).
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u128> {
        self.check_dominant(lambda)?;
        character::weyl_dimension(self, lambda)
    }

    /// All dominant `λ` with `(λ, θ) ≤ level`, in lexicographic order.
    pub fn alcove(&self, level: u32) -> Vec<LeveledWeight> {
        let comarks = &self.data.comarks;
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.rank()];
        fn rec(
            i: usize,
            budget: i64,
            comarks: &[i64],
            cur: &mut Vec<i64>,
            level: u32,
            out: &mut Vec<LeveledWeight>,
        ) {
            if i == cur.len() {
                out.push(LeveledWeight::new_unchecked(Weight(cur.clone()), level));
                return;
            }
            let mut v = 0;
            while v * comarks[i] <= budget {
                cur[i] = v;
                rec(i + 1, budget - v * comarks[i], comarks, cur, level, out);
                v += 1;
            }
            cur[i] = 0;
        }
        rec(0, level as i64, comarks, &mut cur, level, &mut out);
        out
    }

    /// Number of weights in the level-ℓ alcove, without materializing them.
    pub fn alcove_size(&self, level: u32) -> u128 {
        // Coin-change count over the comarks.
        let l = level as usize;
        let mut ways = vec![0u128; l + 1];
        ways[0] = 1;
        for &c in &self.data.comarks {
            let c = c as usize;
            for s in c..=l {
                ways[s] = ways[s].saturating_add(ways[s - c]);
            }
        }
        ways.iter().fold(0u128, |a, b| a.saturating_add(*b))
    }
}

impl FromStr for SimpleLieAlgebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(SimpleLieAlgebra::from_type(s.parse()?))
    }
}

#[cfg(test)]
mod tests;
