//! Truncated graded characters of integrable highest-weight modules over
//! untwisted affine algebras, their restriction along the adjoint
//! embedding `𝔤 ↪ so(𝔤)`, and the resulting branching decomposition.

mod branching;
mod freudenthal;
mod restrict;
mod weylkac;

#[cfg(test)]
mod tests;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootdata::{LeveledWeight, SimpleLieAlgebra, Weight};

pub use branching::{branch_decompose, branch_decompose_with, BranchingResult, BranchingTerm};
pub use restrict::{restrict_character, restrict_weight};

/// Limits on character computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest truncation depth.
    pub max_depth: usize,
    /// Largest `dim 𝔤` accepted by [`branch_decompose`].
    pub max_branch_dim: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_depth: 6,
            max_branch_dim: 28,
        }
    }
}

impl Config {
    pub(crate) fn check_depth(&self, depth: usize) -> Result<()> {
        if depth > self.max_depth {
            return Err(Error::CapExceeded {
                what: "character depth",
                value: depth as u128,
                cap: self.max_depth as u128,
            });
        }
        Ok(())
    }
}

/// Which construction to use for [`graded_character_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Weyl–Kac numerator over the coroot lattice divided by the expanded
    /// affine denominator.
    WeylKac,
    /// Freudenthal's recursion with the affine root system.
    Freudenthal,
}

/// Weight multiplicities of a module graded by `L₀`, degrees `0..=depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    algebra: SimpleLieAlgebra,
    level: u32,
    highest_weight: Weight,
    layers: Vec<BTreeMap<Weight, u64>>,
}

impl GradedCharacter {
    pub(crate) fn new(
        algebra: SimpleLieAlgebra,
        level: u32,
        highest_weight: Weight,
        layers: Vec<BTreeMap<Weight, u64>>,
    ) -> Self {
        GradedCharacter {
            algebra,
            level,
            highest_weight,
            layers,
        }
    }

    pub fn algebra(&self) -> &SimpleLieAlgebra {
        &self.algebra
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Highest weight of the module; for a restricted character, the image
    /// of the original highest weight.
    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    /// All weights of degree `d` with multiplicities.
    pub fn layer(&self, d: usize) -> &BTreeMap<Weight, u64> {
        &self.layers[d]
    }

    pub fn layers(&self) -> &[BTreeMap<Weight, u64>] {
        &self.layers
    }

    /// Dominant part of layer `d`.
    pub fn dominant_layer(&self, d: usize) -> BTreeMap<Weight, u64> {
        self.layers[d]
            .iter()
            .filter(|(w, _)| w.is_dominant())
            .map(|(w, m)| (w.clone(), *m))
            .collect()
    }

    /// Total dimension of each layer.
    pub fn dimensions(&self) -> Vec<u128> {
        self.layers
            .iter()
            .map(|l| l.values().map(|&m| m as u128).sum())
            .collect()
    }
}

/// Truncated graded character of `𝓗_{λ,ℓ}` through degree `depth`, by the
/// affine Freudenthal recursion.
pub fn graded_character(
    g: &SimpleLieAlgebra,
    lambda: &LeveledWeight,
    depth: usize,
) -> Result<GradedCharacter> {
    graded_character_with(g, lambda, depth, Algorithm::Freudenthal, &Config::default())
}

pub fn graded_character_with(
    g: &SimpleLieAlgebra,
    lambda: &LeveledWeight,
    depth: usize,
    algorithm: Algorithm,
    config: &Config,
) -> Result<GradedCharacter> {
    config.check_depth(depth)?;
    let lw = LeveledWeight::new(g, lambda.weight().clone(), lambda.level())?;
    let layers = match algorithm {
        Algorithm::Freudenthal => {
            let dominant = freudenthal::dominant_layers(g, &lw, depth)?;
            dominant
                .iter()
                .map(|layer| {
                    let mut full = BTreeMap::new();
                    for (mu, m) in layer {
                        for w in g.weyl_orbit(mu) {
                            full.insert(w, *m);
                        }
                    }
                    full
                })
                .collect()
        }
        Algorithm::WeylKac => weylkac::layers(g, &lw, depth)?,
    };
    Ok(GradedCharacter::new(
        g.clone(),
        lw.level(),
        lw.weight().clone(),
        layers,
    ))
}

/// Converts signed layers to multiplicities, rejecting negative entries.
pub(crate) fn non_negative(
    layers: Vec<BTreeMap<Weight, i64>>,
) -> Result<Vec<BTreeMap<Weight, u64>>> {
    layers
        .into_iter()
        .enumerate()
        .map(|(d, layer)| {
            let mut out = BTreeMap::new();
            for (w, m) in layer {
                if m < 0 {
                    return Err(Error::NegativeMultiplicity {
                        weight: w.to_string(),
                        degree: d,
                        multiplicity: m,
                    });
                }
                if m > 0 {
                    out.insert(w, m as u64);
                }
            }
            Ok(out)
        })
        .collect()
}
