//! Fusion rings at fixed level, Kac–Peterson S-matrices and Verlinde
//! dimensions of conformal blocks.
//!
//! Two routes compute every dimension: the numeric Verlinde sum over the
//! S-matrix, and an exact recursion that lowers the genus by inserting
//! `(μ, μ†)` pairs and evaluates genus zero by iterated fusion.

mod ring;
mod smatrix;
mod tensor;
mod verlinde;


use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootdata::{LeveledWeight, SimpleLieAlgebra, Weight};

pub use ring::FusionRing;
pub use smatrix::{fusion_from_s_matrix, s_matrix, s_matrix_with, SMatrix, INTEGRALITY_TOLERANCE};
pub use tensor::tensor_decompose;
pub use verlinde::{verlinde_dim, verlinde_dim_exact, verlinde_sum, VerlindeProblem};

/// Environment variable overriding [`Config::max_alcove`].
pub const MAX_ALCOVE_ENV: &str = "BLOCKCOUNT_MAX_ALCOVE";

/// Resource limits for level-ℓ computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest alcove for which S-matrices and fusion tables are built.
    pub max_alcove: u128,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_alcove: 20_000 }
    }
}

impl Config {
    /// Defaults, with `BLOCKCOUNT_MAX_ALCOVE` applied when set.
    pub fn from_env() -> Result<Self> {
        let mut c = Config::default();
        if let Ok(v) = std::env::var(MAX_ALCOVE_ENV) {
            c.max_alcove = v.trim().parse().map_err(|_| Error::Parse {
                what: "alcove cap",
                token: v.clone(),
            })?;
        }
        Ok(c)
    }

    pub(crate) fn check_alcove(&self, g: &SimpleLieAlgebra, level: u32) -> Result<()> {
        let size = g.alcove_size(level);
        if size > self.max_alcove {
            return Err(Error::CapExceeded {
                what: "alcove size",
                value: size,
                cap: self.max_alcove,
            });
        }
        Ok(())
    }
}

/// A non-negative integer combination of integrable weights at one level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FusionVector {
    level: u32,
    entries: BTreeMap<Weight, u64>,
}

impl FusionVector {
    pub fn new(level: u32) -> Self {
        FusionVector {
            level,
            entries: BTreeMap::new(),
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Multiplicity of `λ`; zero when absent.
    pub fn coefficient(&self, lambda: &Weight) -> u64 {
        self.entries.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (LeveledWeight, u64)> + '_ {
        self.entries
            .iter()
            .map(|(w, m)| (LeveledWeight::new_unchecked(w.clone(), self.level), *m))
    }

    pub fn entries(&self) -> &BTreeMap<Weight, u64> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub(crate) fn add(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.entries.entry(w).or_insert(0) += m;
        }
    }
}

impl fmt::Display for FusionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m != 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Kac–Walton straightening at shifted level `k = ℓ + h∨`.
///
/// Moves `λ+ρ` into the fundamental alcove with finite reflections and the
/// affine reflection `v ↦ v − ((v,θ) − k)θ`. Returns the folded weight and
/// the sign of the affine Weyl element, or `None` if `λ+ρ` lies on a wall.
pub(crate) fn kac_walton_fold(
    g: &SimpleLieAlgebra,
    lambda: &Weight,
    level: u32,
) -> Option<(Weight, i32)> {
    let k = level as i64 + g.dual_coxeter() as i64;
    let theta = g.highest_root();
    let mut v = lambda.add(&g.rho());
    let mut sign = 1;
    loop {
        if let Some(i) = v.0.iter().position(|&x| x < 0) {
            g.reflect(&mut v, i);
            sign = -sign;
            continue;
        }
        let p = g.theta_pairing(&v);
        if p > k {
            v = v.add_scaled(theta, -(p - k));
            sign = -sign;
            continue;
        }
        if p == k || v.0.contains(&0) {
            return None;
        }
        return Some((v.sub(&g.rho()), sign));
    }
}

/// Level-ℓ fusion product of two integrable weights.
pub fn fuse(g: &SimpleLieAlgebra, lambda: &LeveledWeight, mu: &LeveledWeight) -> Result<FusionVector> {
    let level = lambda.level();
    if mu.level() != level {
        return Err(Error::LevelMismatch {
            expected: level,
            got: mu.level(),
        });
    }
    // revalidate against this algebra
    LeveledWeight::new(g, lambda.weight().clone(), level)?;
    LeveledWeight::new(g, mu.weight().clone(), level)?;
    let product = tensor_decompose(g, lambda.weight(), mu.weight())?;
    let mut folded: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in product {
        if let Some((w, sign)) = kac_walton_fold(g, &nu, level) {
            *folded.entry(w).or_insert(0) += sign as i64 * m as i64;
        }
    }
    let mut out = FusionVector::new(level);
    for (w, m) in folded {
        if m < 0 {
            return Err(Error::CrossCheck(format!(
                "negative fusion coefficient {m} for {w} in {lambda} × {mu}"
            )));
        }
        out.add(w, m as u64);
    }
    Ok(out)
}

/// The conjugate weight `λ† = −w₀(λ)` at the same level.
pub fn dual_weight(g: &SimpleLieAlgebra, lambda: &LeveledWeight) -> Result<LeveledWeight> {
    let lw = LeveledWeight::new(g, lambda.weight().clone(), lambda.level())?;
    Ok(LeveledWeight::new_unchecked(g.dual(lw.weight()), lw.level()))
}
