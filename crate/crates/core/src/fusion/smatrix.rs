use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rootdata::{CartanType, LeveledWeight, SimpleLieAlgebra, Weight};

use super::{Config, FusionVector};

/// Tolerance for rounding S-matrix sums to integers.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

/// Weyl groups up to this order are summed over directly; beyond it the
/// Weyl character formula evaluates the same quotient.
const WEYL_SUM_LIMIT: u128 = 100_000;

/// The modular S-matrix of the level-ℓ WZW model, indexed by the alcove
/// order.
#[derive(Debug, Clone)]
pub struct SMatrix {
    basis: Vec<Weight>,
    entries: Vec<Complex64>,
}

impl SMatrix {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.len() + j]
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        let n = self.len();
        &self.entries[i * n..(i + 1) * n]
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.basis.iter().position(|b| b == w)
    }

    /// Largest entry of `|S S† − I|`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    s += self.get(i, k) * self.get(j, k).conj();
                }
                if i == j {
                    s -= 1.0;
                }
                worst = worst.max(s.norm());
            }
        }
        worst
    }
}

fn cache() -> &'static Mutex<HashMap<(CartanType, u32), Arc<SMatrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<(CartanType, u32), Arc<SMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `exp(−2πi (ν, x) / k)` with the pairing reduced exactly before rounding.
struct Phases {
    modulus: i64,
}

impl Phases {
    fn new(g: &SimpleLieAlgebra, level: u32) -> Self {
        let k = level as i64 + g.dual_coxeter() as i64;
        Phases {
            modulus: g.form_scale() * k,
        }
    }

    fn at(&self, scaled_pairing: i64) -> Complex64 {
        let r = scaled_pairing.rem_euclid(self.modulus) as f64 / self.modulus as f64;
        Complex64::from_polar(1.0, -2.0 * PI * r)
    }
}

/// Unnormalized Kac–Peterson matrix `Σ_w ε(w) exp(−2πi (w(λ+ρ), μ+ρ)/k)`.
pub(crate) fn kac_peterson_raw(g: &SimpleLieAlgebra, level: u32, basis: &[Weight]) -> Vec<Complex64> {
    let n = basis.len();
    let rho = g.rho();
    let ph = Phases::new(g, level);
    let shifted: Vec<Weight> = basis.iter().map(|w| w.add(&rho)).collect();
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        let orbit = g.signed_regular_orbit(&shifted[i]);
        for j in i..n {
            let mut s = Complex64::new(0.0, 0.0);
            for (w, sign) in &orbit {
                s += ph.at(g.form_scaled(w, &shifted[j])) * *sign as f64;
            }
            out[i * n + j] = s;
            out[j * n + i] = s;
        }
    }
    out
}

/// The same quotient through the Weyl character and denominator formulas:
/// `S_{0μ} ∝ Π_{α>0} sin(π(α, μ+ρ)/k)` and `S_{λμ}/S_{0μ} = χ_λ(−2πi(μ+ρ)/k)`.
pub(crate) fn weyl_character_raw(
    g: &SimpleLieAlgebra,
    level: u32,
    basis: &[Weight],
) -> Result<Vec<Complex64>> {
    let n = basis.len();
    let rho = g.rho();
    let ph = Phases::new(g, level);
    let k = (level + g.dual_coxeter()) as f64;
    let shifted: Vec<Weight> = basis.iter().map(|w| w.add(&rho)).collect();
    let vacuum_row: Vec<f64> = shifted
        .iter()
        .map(|x| {
            g.positive_roots()
                .iter()
                .map(|a| {
                    let p = g.form_scaled(&a.labels, x) as f64 / g.form_scale() as f64;
                    (PI * p / k).sin()
                })
                .product()
        })
        .collect();
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        let chi = g.character(&basis[i])?;
        for j in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for (nu, m) in &chi {
                s += ph.at(g.form_scaled(nu, &shifted[j])) * *m as f64;
            }
            out[i * n + j] = s * vacuum_row[j];
        }
    }
    Ok(out)
}

/// Fixes the overall phase by making `S_00` positive and the scale by
/// making row 0 a unit vector.
fn normalize(raw: &mut [Complex64], n: usize) -> Result<()> {
    let s00 = raw[0];
    if s00.norm() == 0.0 {
        return Err(Error::CrossCheck("vanishing S_00".into()));
    }
    let phase = s00 / s00.norm();
    let row_norm: f64 = raw[..n].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in raw.iter_mut() {
        *z /= phase * row_norm;
    }
    Ok(())
}

/// The S-matrix at level `ℓ`, with the alcove cap from the environment.
pub fn s_matrix(g: &SimpleLieAlgebra, level: u32) -> Result<Arc<SMatrix>> {
    s_matrix_with(g, level, &Config::from_env()?)
}

pub fn s_matrix_with(g: &SimpleLieAlgebra, level: u32, config: &Config) -> Result<Arc<SMatrix>> {
    config.check_alcove(g, level)?;
    let key = (g.cartan_type(), level);
    if let Some(s) = cache().lock().unwrap().get(&key) {
        return Ok(s.clone());
    }
    let basis: Vec<Weight> = g.alcove(level).into_iter().map(|w| w.into_weight()).collect();
    let n = basis.len();
    let mut raw = if g.weyl_group_order() <= WEYL_SUM_LIMIT {
        kac_peterson_raw(g, level, &basis)
    } else {
        weyl_character_raw(g, level, &basis)?
    };
    normalize(&mut raw, n)?;
    let s = Arc::new(SMatrix {
        basis,
        entries: raw,
    });
    Ok(cache().lock().unwrap().entry(key).or_insert(s).clone())
}

pub(crate) fn round_checked(z: Complex64) -> Result<u128> {
    let r = z.re.round();
    if (z.re - r).abs() > INTEGRALITY_TOLERANCE
        || z.im.abs() > INTEGRALITY_TOLERANCE
        || r < 0.0
        || !r.is_finite()
    {
        return Err(Error::NonIntegral {
            value: format!("{z}"),
            tolerance: INTEGRALITY_TOLERANCE,
        });
    }
    Ok(r as u128)
}

/// Fusion coefficients `N_{λμ}^ν = Σ_σ S_{λσ} S_{μσ} S̄_{νσ} / S_{0σ}`.
pub fn fusion_from_s_matrix(
    g: &SimpleLieAlgebra,
    lambda: &LeveledWeight,
    mu: &LeveledWeight,
) -> Result<FusionVector> {
    let level = lambda.level();
    if mu.level() != level {
        return Err(Error::LevelMismatch {
            expected: level,
            got: mu.level(),
        });
    }
    let s = s_matrix(g, level)?;
    let idx = |w: &LeveledWeight| {
        LeveledWeight::new(g, w.weight().clone(), level)?;
        Ok::<_, Error>(s.index_of(w.weight()).expect("alcove member"))
    };
    let (a, b) = (idx(lambda)?, idx(mu)?);
    let mut out = FusionVector::new(level);
    for c in 0..s.len() {
        let mut z = Complex64::new(0.0, 0.0);
        for sigma in 0..s.len() {
            z += s.get(a, sigma) * s.get(b, sigma) * s.get(c, sigma).conj() / s.get(0, sigma);
        }
        let m = round_checked(z)?;
        out.add(s.basis()[c].clone(), m as u64);
    }
    Ok(out)
}
