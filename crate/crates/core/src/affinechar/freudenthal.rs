use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::rootdata::{LeveledWeight, SimpleLieAlgebra, Weight};

/// Dominant weight multiplicities of `𝓗_{λ,ℓ}` at degrees `0..=depth`.
///
/// A weight at degree `D` is `μ + ℓΛ₀ − Dδ` relative to the top, and
/// Freudenthal's formula for it reads
///
/// `(|λ+ρ|² − |μ+ρ|² + 2(ℓ+h∨)D) m(μ,D) = 2 Σ_{α̂>0} mult(α̂) Σ_{j≥1} (μ̂+jα̂, α̂) m(μ̂+jα̂)`
///
/// over the positive affine roots `α` (`α>0`), `α+nδ` (`α ∈ Δ`, `n ≥ 1`) and
/// `nδ` (multiplicity `rank`). Every weight at degree `D` lies below
/// `λ + Dθ`, which bounds all the sums.
pub(super) fn dominant_layers(
    g: &SimpleLieAlgebra,
    lambda: &LeveledWeight,
    depth: usize,
) -> Result<Vec<BTreeMap<Weight, u64>>> {
    let s = g.form_scale();
    let level = lambda.level() as i64;
    let k = level + g.dual_coxeter() as i64;
    let rank = g.rank() as i64;
    let rho = g.rho();
    let top = lambda.weight();
    let top_r = top.add(&rho);
    let top_norm = g.form_scaled(&top_r, &top_r);
    let theta = g.highest_root();
    let theta_height = g.positive_roots().last().map_or(0, |r| r.height);

    // all roots with heights, positive first
    let mut roots: Vec<(Weight, i64)> = Vec::new();
    for r in g.positive_roots() {
        roots.push((r.labels.clone(), r.height));
    }
    for r in g.positive_roots() {
        roots.push((r.labels.neg(), -r.height));
    }
    let npos = g.num_positive_roots();

    let mut layers: Vec<HashMap<Weight, u64>> = Vec::with_capacity(depth + 1);
    for d in 0..=depth {
        let di = d as i64;
        let lookup = |layers: &[HashMap<Weight, u64>], cur: &HashMap<Weight, u64>, nu: &Weight, at: usize| {
            let (dom, _) = g.to_dominant(nu);
            if at == d {
                cur.get(&dom).copied().unwrap_or(0)
            } else {
                layers[at].get(&dom).copied().unwrap_or(0)
            }
        };
        let head = top.add_scaled(theta, di);
        let mut cur: HashMap<Weight, u64> = HashMap::new();
        for (mu, height) in g.dominant_weights_below(&head) {
            if d == 0 && height == 0 {
                cur.insert(mu, 1);
                continue;
            }
            let mr = mu.add(&rho);
            let lhs = top_norm - g.form_scaled(&mr, &mr) + 2 * k * di * s;
            if lhs <= 0 {
                continue;
            }
            let mut rhs: i128 = 0;
            // finite positive roots, same degree
            for (alpha, ht) in &roots[..npos] {
                let mut j = 1;
                while height - j * ht >= 0 {
                    let nu = mu.add_scaled(alpha, j);
                    let m = lookup(&layers, &cur, &nu, d);
                    if m > 0 {
                        rhs += (g.form_scaled(&nu, alpha) as i128) * m as i128;
                    }
                    j += 1;
                }
            }
            // real roots α + nδ
            for n in 1..=di {
                for (alpha, ht) in &roots {
                    let mut j = 1;
                    while j * n <= di && height - j * (n * theta_height + ht) >= 0 {
                        let nu = mu.add_scaled(alpha, j);
                        let m = lookup(&layers, &cur, &nu, (di - j * n) as usize);
                        if m > 0 {
                            let pairing = g.form_scaled(&nu, alpha) + level * n * s;
                            rhs += pairing as i128 * m as i128;
                        }
                        j += 1;
                    }
                }
                // imaginary roots nδ
                let mut j = 1;
                while j * n <= di {
                    let m = lookup(&layers, &cur, &mu, (di - j * n) as usize);
                    rhs += (rank * level * n * s) as i128 * m as i128;
                    j += 1;
                }
            }
            rhs *= 2;
            if rhs % lhs as i128 != 0 {
                return Err(Error::CrossCheck(format!(
                    "affine Freudenthal quotient for {mu} at degree {d} is not integral"
                )));
            }
            let m = rhs / lhs as i128;
            if m < 0 {
                return Err(Error::NegativeMultiplicity {
                    weight: mu.to_string(),
                    degree: d,
                    multiplicity: m as i64,
                });
            }
            if m > 0 {
                cur.insert(mu, u64::try_from(m).map_err(|_| Error::Overflow("affine multiplicity"))?);
            }
        }
        layers.push(cur);
    }
    Ok(layers.into_iter().map(|l| l.into_iter().collect()).collect())
}
