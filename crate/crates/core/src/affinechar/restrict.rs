use std::collections::BTreeMap;

use crate::embeddings::{dynkin_index_embedding, EmbeddingSpec};
use crate::error::{Error, Result};
use crate::rootdata::{Family, SimpleLieAlgebra, Weight};

use super::GradedCharacter;

/// Orthonormal coordinates of an so(N) weight, doubled so that spinor
/// weights stay integral. `ω_i = e_1+…+e_i` except for the spin nodes:
/// `½(e_1+…+e_n)` for B_n and D_n, and `½(e_1+…+e_{n−1}−e_n)` for D_n.
fn doubled_orthonormal(family: Family, w: &Weight) -> Vec<i64> {
    let n = w.rank();
    let mut e = vec![0i64; n];
    for (i, &c) in w.0.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let spin = match family {
            Family::B => i == n - 1,
            _ => i >= n - 2,
        };
        if !spin {
            for x in e.iter_mut().take(i + 1) {
                *x += 2 * c;
            }
        } else {
            for x in e.iter_mut().take(n - 1) {
                *x += c;
            }
            let last = if family == Family::D && i == n - 2 { -c } else { c };
            e[n - 1] += last;
        }
    }
    e
}

fn check_adjoint(e: &EmbeddingSpec) -> Result<()> {
    let g = e.source();
    let so = e.target();
    let is_adjoint = e.branching() == [(g.highest_root().clone(), 1)]
        && matches!(so.family(), Family::B | Family::D)
        && so.rank() == g.num_positive_roots() + g.rank() / 2;
    if !is_adjoint {
        return Err(Error::InconsistentEmbedding(format!(
            "restriction is implemented for the adjoint embedding only, got {g} → {so}"
        )));
    }
    Ok(())
}

/// Image of an so(𝔤) weight in the weight lattice of `𝔤` under the
/// adjoint embedding: `e_i` goes to the `i`-th positive root for
/// `i < |Δ₊|` and to zero otherwise, so the vector module restricts to the
/// adjoint module.
pub fn restrict_weight(e: &EmbeddingSpec, w: &Weight) -> Result<Weight> {
    check_adjoint(e)?;
    e.target().check_rank(w)?;
    Ok(restrict_unchecked(e.source(), e.target().family(), w))
}

fn restrict_unchecked(g: &SimpleLieAlgebra, family: Family, w: &Weight) -> Weight {
    let coords = doubled_orthonormal(family, w);
    let mut out = vec![0i64; g.rank()];
    for (c, root) in coords.iter().zip(g.positive_roots()) {
        for (o, l) in out.iter_mut().zip(&root.labels.0) {
            *o += c * l;
        }
    }
    Weight(out.into_iter().map(|x| x / 2).collect())
}

/// Restriction of an so(𝔤) character to `𝔤` along the adjoint embedding.
/// The level multiplies by the Dynkin index `h∨(𝔤)`.
pub fn restrict_character(c: &GradedCharacter, e: &EmbeddingSpec) -> Result<GradedCharacter> {
    check_adjoint(e)?;
    if c.algebra().cartan_type() != e.target().cartan_type() {
        return Err(Error::InconsistentEmbedding(format!(
            "character of {} cannot be restricted along an embedding into {}",
            c.algebra(),
            e.target()
        )));
    }
    let g = e.source();
    let family = e.target().family();
    let index = dynkin_index_embedding(e)?;
    if !index.is_integer() {
        return Err(Error::InconsistentEmbedding(format!("non-integral index {index}")));
    }
    let level = c.level() * index.to_integer() as u32;
    let layers = c
        .layers()
        .iter()
        .map(|layer| {
            let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
            for (w, m) in layer {
                *out.entry(restrict_unchecked(g, family, w)).or_insert(0) += m;
            }
            out
        })
        .collect();
    let top = restrict_unchecked(g, family, c.highest_weight());
    Ok(GradedCharacter::new(g.clone(), level, top, layers))
}
