use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootdata::{LeveledWeight, SimpleLieAlgebra, Weight};

/// Elements `β = Σ b_i α_i^∨` of the coroot lattice whose translation moves
/// `λ̂+ρ̂` down by at most `depth`, with that degree
/// `(λ+ρ, β) + k|β|²/2`.
fn translations(g: &SimpleLieAlgebra, lambda: &Weight, k: i64, depth: usize) -> Result<Vec<(Vec<i64>, i64)>> {
    let n = g.rank();
    let s = g.form_scale();
    let gram: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| g.form_scaled(g.simple_coroot(i), g.simple_coroot(j))).collect())
        .collect();
    // Bounding box of the ellipsoid |β + x/k|² ≤ R², x = M⁻¹(λ+ρ).
    let m: Vec<Vec<f64>> = gram
        .iter()
        .map(|r| r.iter().map(|&v| v as f64 / s as f64).collect())
        .collect();
    let minv = invert_f64(&m);
    let lr: Vec<f64> = lambda.0.iter().map(|&v| v as f64 + 1.0).collect();
    let x: Vec<f64> = (0..n).map(|i| (0..n).map(|j| minv[i][j] * lr[j]).sum()).collect();
    let lr_norm: f64 = (0..n).map(|i| x[i] * lr[i]).sum();
    let kf = k as f64;
    let r2 = (2.0 * depth as f64 + lr_norm / kf) / kf;
    let ranges: Vec<(i64, i64)> = (0..n)
        .map(|i| {
            let c = -x[i] / kf;
            let r = (r2 * minv[i][i]).max(0.0).sqrt() + 1e-9;
            ((c - r).ceil() as i64, (c + r).floor() as i64)
        })
        .collect();

    let mut out = Vec::new();
    let mut b: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    if ranges.iter().any(|r| r.0 > r.1) {
        return Ok(out);
    }
    loop {
        let lin: i64 = (0..n).map(|i| b[i] * (lambda.0[i] + 1)).sum();
        let quad: i64 = (0..n)
            .map(|i| (0..n).map(|j| b[i] * gram[i][j] * b[j]).sum::<i64>())
            .sum();
        if (k * quad) % (2 * s) != 0 {
            return Err(Error::CrossCheck("coroot lattice is not even".into()));
        }
        let d = lin + k * quad / (2 * s);
        if d <= depth as i64 {
            if d < 0 {
                return Err(Error::CrossCheck(format!("translation {b:?} raises the top weight")));
            }
            out.push((b.clone(), d));
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            if b[i] < ranges[i].1 {
                b[i] += 1;
                break;
            }
            b[i] = ranges[i].0;
            i += 1;
        }
    }
}

fn invert_f64(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .max_by(|&x, &y| a[x][c].abs().partial_cmp(&a[y][c].abs()).unwrap())
            .unwrap();
        a.swap(c, p);
        let piv = a[c][c];
        for v in a[c].iter_mut() {
            *v /= piv;
        }
        for r in 0..n {
            if r != c {
                let f = a[r][c];
                if f != 0.0 {
                    for j in 0..2 * n {
                        a[r][j] -= f * a[c][j];
                    }
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Weyl–Kac: `Σ_{β∈Q^∨} q^{(λ+ρ,β)+k|β|²/2} χ_{λ+kβ}` divided by
/// `Π_{n≥1} (1−qⁿ)^rank Π_{α∈Δ} (1−qⁿe^α)`, where `χ_ν` is the finite
/// character straightened by the dot action.
pub(super) fn layers(
    g: &SimpleLieAlgebra,
    lambda: &LeveledWeight,
    depth: usize,
) -> Result<Vec<BTreeMap<Weight, u64>>> {
    let k = lambda.level() as i64 + g.dual_coxeter() as i64;
    let top = lambda.weight();
    let mut series: Vec<BTreeMap<Weight, i64>> = vec![BTreeMap::new(); depth + 1];
    for (b, d) in translations(g, top, k, depth)? {
        let mut nu = top.clone();
        for (i, &bi) in b.iter().enumerate() {
            nu = nu.add_scaled(g.simple_coroot(i), k * bi);
        }
        if let Some((mu, sign)) = g.dot_dominant(&nu) {
            for (w, m) in g.character(&mu)? {
                *series[d as usize].entry(w).or_insert(0) += sign as i64 * m as i64;
            }
        }
    }
    for layer in series.iter_mut() {
        layer.retain(|_, m| *m != 0);
    }

    // 1/(1 − qⁿX) = Σ_j q^{nj} X^j, applied in place in ascending degree.
    let mut roots: Vec<Weight> = g.positive_roots().iter().map(|r| r.labels.clone()).collect();
    roots.extend(g.positive_roots().iter().map(|r| r.labels.neg()));
    for n in 1..=depth {
        for _ in 0..g.rank() {
            for d in n..=depth {
                let lower = series[d - n].clone();
                for (w, m) in lower {
                    *series[d].entry(w).or_insert(0) += m;
                }
            }
        }
        for alpha in &roots {
            for d in n..=depth {
                let lower = series[d - n].clone();
                for (w, m) in lower {
                    *series[d].entry(w.add(alpha)).or_insert(0) += m;
                }
            }
        }
    }
    super::non_negative(series)
}
