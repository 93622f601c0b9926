use std::collections::BTreeMap;

use crate::embeddings::{conformal_weight, EmbeddingSpec};
use crate::error::{Error, Result};
use crate::rootdata::{LeveledWeight, Rational, SimpleLieAlgebra, Weight};

use super::{graded_character_with, restrict_character, Algorithm, Config};

/// One summand `𝓗_{μ, h∨}(𝔤)` of a branching, starting at target degree
/// `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingTerm {
    pub weight: LeveledWeight,
    /// `h_μ − h_Λ`: where the summand's top layer sits in the target.
    pub offset: Rational,
    pub multiplicity: u64,
}

/// Outcome of peeling a restricted level-one so(𝔤) character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingResult {
    pub terms: Vec<BranchingTerm>,
    /// Dimension left unexplained at each degree.
    pub residual: Vec<u128>,
    pub depth: usize,
}

impl BranchingResult {
    /// No residual through the computed depth.
    pub fn is_exact(&self) -> bool {
        self.residual.iter().all(|&r| r == 0)
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.terms
            .iter()
            .filter(|t| t.weight.weight() == mu)
            .map(|t| t.multiplicity)
            .sum()
    }
}

/// Splits a Weyl-invariant weight multiset into irreducible characters.
/// The dominant weight of largest norm (ties: lexicographically largest)
/// is always a highest weight of a constituent.
fn finite_decompose(
    g: &SimpleLieAlgebra,
    layer: &BTreeMap<Weight, i64>,
    degree: usize,
) -> Result<Vec<(Weight, i64)>> {
    let mut rest = layer.clone();
    rest.retain(|_, m| *m != 0);
    let mut out = Vec::new();
    while !rest.is_empty() {
        let (top, m) = rest
            .iter()
            .filter(|(w, _)| w.is_dominant())
            .max_by(|a, b| {
                g.form_scaled(a.0, a.0)
                    .cmp(&g.form_scaled(b.0, b.0))
                    .then_with(|| a.0.cmp(b.0))
            })
            .map(|(w, m)| (w.clone(), *m))
            .ok_or_else(|| Error::CrossCheck("layer is not Weyl invariant".into()))?;
        if m < 0 {
            return Err(Error::NegativeMultiplicity {
                weight: top.to_string(),
                degree,
                multiplicity: m,
            });
        }
        for (w, c) in g.character(&top)? {
            let e = rest.entry(w.clone()).or_insert(0);
            *e -= m * c as i64;
            if *e == 0 {
                rest.remove(&w);
            }
        }
        out.push((top, m));
    }
    Ok(out)
}

/// Decomposes the level-one so(𝔤) module `𝓗_{Λ,1}` into `𝓗_{μ,h∨}(𝔤)`
/// modules through degree `depth`.
///
/// Layers are processed in increasing degree. At degree `d` the remaining
/// restricted character is split into finite irreducibles; a constituent
/// `V_μ` is the top of a summand when `μ` is integrable at level `h∨` and
/// `h_μ − h_Λ = d`, and then the whole truncated character of `𝓗_μ` is
/// removed. Anything else is reported as residual.
pub fn branch_decompose(
    g: &SimpleLieAlgebra,
    target: &LeveledWeight,
    depth: usize,
) -> Result<BranchingResult> {
    branch_decompose_with(g, target, depth, &Config::default())
}

pub fn branch_decompose_with(
    g: &SimpleLieAlgebra,
    target: &LeveledWeight,
    depth: usize,
    config: &Config,
) -> Result<BranchingResult> {
    config.check_depth(depth)?;
    if g.dim() > config.max_branch_dim {
        return Err(Error::CapExceeded {
            what: "algebra dimension for branching",
            value: g.dim() as u128,
            cap: config.max_branch_dim as u128,
        });
    }
    let e = EmbeddingSpec::adjoint(g)?;
    let so = e.target();
    if target.level() != 1 {
        return Err(Error::LevelMismatch {
            expected: 1,
            got: target.level(),
        });
    }
    let h_target = conformal_weight(so, target)?;
    let big = graded_character_with(so, target, depth, Algorithm::Freudenthal, config)?;
    let restricted = restrict_character(&big, &e)?;
    let level = restricted.level();

    let mut remaining: Vec<BTreeMap<Weight, i64>> = restricted
        .layers()
        .iter()
        .map(|l| l.iter().map(|(w, m)| (w.clone(), *m as i64)).collect())
        .collect();
    let mut terms = Vec::new();
    let mut residual = vec![0u128; depth + 1];
    for d in 0..=depth {
        for (mu, m) in finite_decompose(g, &remaining[d], d)? {
            let candidate = LeveledWeight::new(g, mu.clone(), level).ok();
            let matched = match &candidate {
                Some(lw) => {
                    let offset = conformal_weight(g, lw)? - h_target;
                    (offset == Rational::from_integer(d as i64)).then_some((lw.clone(), offset))
                }
                None => None,
            };
            match matched {
                Some((lw, offset)) => {
                    let sub = graded_character_with(g, &lw, depth - d, Algorithm::Freudenthal, config)?;
                    for (j, layer) in sub.layers().iter().enumerate() {
                        let target_layer = &mut remaining[d + j];
                        for (w, c) in layer {
                            *target_layer.entry(w.clone()).or_insert(0) -= m * *c as i64;
                        }
                    }
                    terms.push(BranchingTerm {
                        weight: lw,
                        offset,
                        multiplicity: m as u64,
                    });
                }
                None => {
                    residual[d] += g.weyl_dim(&mu)? * m as u128;
                    for (w, c) in g.character(&mu)? {
                        *remaining[d].entry(w).or_insert(0) -= m * c as i64;
                    }
                }
            }
        }
    }
    terms.sort_by(|a, b| a.offset.cmp(&b.offset).then_with(|| a.weight.cmp(&b.weight)));
    Ok(BranchingResult {
        terms,
        residual,
        depth,
    })
}
