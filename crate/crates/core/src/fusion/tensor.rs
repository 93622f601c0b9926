use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootdata::{SimpleLieAlgebra, Weight};

/// Tensor product multiplicities `V_λ ⊗ V_μ = ⊕ c_ν V_ν` (Brauer–Klimyk).
///
/// Every weight `ν` of the smaller factor contributes `±mult(ν)` to the dot
/// straightening of `ν + (larger highest weight)`.
pub fn tensor_decompose(
    g: &SimpleLieAlgebra,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BTreeMap<Weight, u64>> {
    let (small, big) = if g.weyl_dim(lambda)? <= g.weyl_dim(mu)? {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in g.character(small)? {
        if let Some((w, sign)) = g.dot_dominant(&big.add(&nu)) {
            *acc.entry(w).or_insert(0) += sign as i64 * m as i64;
        }
    }
    let mut out = BTreeMap::new();
    for (w, m) in acc {
        match m {
            0 => {}
            m if m < 0 => {
                return Err(Error::CrossCheck(format!(
                    "negative tensor multiplicity {m} for {w} in {lambda} ⊗ {mu}"
                )))
            }
            m => {
                out.insert(w, m as u64);
            }
        }
    }
    Ok(out)
}
