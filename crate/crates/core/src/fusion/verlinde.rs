use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rootdata::{LeveledWeight, SimpleLieAlgebra, Weight};

use super::smatrix::round_checked;
use super::{dual_weight, s_matrix, Config, FusionRing};

/// A conformal-block dimension query: genus, level and marked weights.
#[derive(Debug, Clone)]
pub struct VerlindeProblem {
    algebra: SimpleLieAlgebra,
    level: u32,
    genus: u32,
    insertions: Vec<LeveledWeight>,
}

impl VerlindeProblem {
    pub fn new(
        algebra: SimpleLieAlgebra,
        level: u32,
        genus: u32,
        insertions: Vec<Weight>,
    ) -> Result<Self> {
        let insertions = insertions
            .into_iter()
            .map(|w| LeveledWeight::new(&algebra, w, level))
            .collect::<Result<Vec<_>>>()?;
        Ok(VerlindeProblem {
            algebra,
            level,
            genus,
            insertions,
        })
    }

    pub fn algebra(&self) -> &SimpleLieAlgebra {
        &self.algebra
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn insertions(&self) -> &[LeveledWeight] {
        &self.insertions
    }

    /// The same problem with one more marked point.
    pub fn with_insertion(&self, w: LeveledWeight) -> Result<Self> {
        let w = LeveledWeight::new(&self.algebra, w.into_weight(), self.level)?;
        let mut p = self.clone();
        p.insertions.push(w);
        Ok(p)
    }

    /// The genus-(g−1) problems with `(μ, μ†)` appended, one per `μ` in the
    /// alcove. Their dimensions sum to the dimension of `self`.
    pub fn factorization_terms(&self) -> Result<Vec<VerlindeProblem>> {
        if self.genus == 0 {
            return Err(Error::Degenerate("genus-zero problem has no handle to cut"));
        }
        let mut out = Vec::new();
        for mu in self.algebra.alcove(self.level) {
            let dual = dual_weight(&self.algebra, &mu)?;
            let mut p = self.with_insertion(mu)?.with_insertion(dual)?;
            p.genus -= 1;
            out.push(p);
        }
        Ok(out)
    }
}

/// The complex Verlinde sum `Σ_μ Π_i (S_{λ_i μ}/S_{0μ}) · S_{0μ}^{2−2g}`.
pub fn verlinde_sum(p: &VerlindeProblem) -> Result<Complex64> {
    let s = s_matrix(&p.algebra, p.level)?;
    let rows = p
        .insertions
        .iter()
        .map(|w| s.index_of(w.weight()).expect("alcove member"))
        .collect::<Vec<_>>();
    let exponent = 2 - 2 * p.genus as i32;
    let mut total = Complex64::new(0.0, 0.0);
    for mu in 0..s.len() {
        let s0 = s.get(0, mu);
        let mut term = Complex64::new(s0.re.powi(exponent), 0.0);
        for &r in &rows {
            term *= s.get(r, mu) / s0;
        }
        total += term;
    }
    Ok(total)
}

/// Dimension from the Verlinde formula, rounded; errors when the sum is not
/// within `1e-6` of a non-negative integer.
pub fn verlinde_dim(p: &VerlindeProblem) -> Result<u128> {
    round_checked(verlinde_sum(p)?)
}

/// Exact dimension by factorization and iterated fusion.
///
/// Cutting all handles gives `Σ_{μ_1..μ_g} N(λ⃗, μ_1, μ_1†, …, μ_g, μ_g†)`
/// at genus zero; the genus-zero dimension is the vacuum coefficient of the
/// iterated fusion product. The sum over `μ_j` is carried out on the partial
/// products, which share their prefix.
pub fn verlinde_dim_exact(p: &VerlindeProblem) -> Result<u128> {
    let ring = FusionRing::get(&p.algebra, p.level, &Config::from_env()?)?;
    let vac = ring.index_of(&Weight::zero(p.algebra.rank()))?;
    let mut x = vec![0u128; ring.len()];
    x[vac] = 1;
    for w in &p.insertions {
        x = ring.multiply(&x, ring.index_of(w.weight())?)?;
    }
    for _ in 0..p.genus {
        x = ring.add_handle(&x)?;
    }
    Ok(x[vac])
}
