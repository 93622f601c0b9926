use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::rootdata::{CartanType, LeveledWeight, SimpleLieAlgebra, Weight};

use super::{fuse, Config};

type Product = Arc<Vec<(usize, u64)>>;

/// The level-ℓ fusion ring with basis indexed by the alcove order.
///
/// Structure constants are computed on demand and memoized.
pub struct FusionRing {
    algebra: SimpleLieAlgebra,
    level: u32,
    basis: Vec<Weight>,
    index: HashMap<Weight, usize>,
    duals: Vec<usize>,
    products: Mutex<HashMap<(usize, usize), Product>>,
}

fn rings() -> &'static Mutex<HashMap<(CartanType, u32), Arc<FusionRing>>> {
    static RINGS: OnceLock<Mutex<HashMap<(CartanType, u32), Arc<FusionRing>>>> = OnceLock::new();
    RINGS.get_or_init(Default::default)
}

impl FusionRing {
    /// The shared ring for `(g, ℓ)`.
    pub fn get(g: &SimpleLieAlgebra, level: u32, config: &Config) -> Result<Arc<FusionRing>> {
        config.check_alcove(g, level)?;
        let key = (g.cartan_type(), level);
        if let Some(r) = rings().lock().unwrap().get(&key) {
            return Ok(r.clone());
        }
        let basis: Vec<Weight> = g.alcove(level).into_iter().map(|w| w.into_weight()).collect();
        let index: HashMap<Weight, usize> =
            basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let duals = basis.iter().map(|w| index[&g.dual(w)]).collect();
        let ring = Arc::new(FusionRing {
            algebra: g.clone(),
            level,
            basis,
            index,
            duals,
            products: Mutex::new(HashMap::new()),
        });
        Ok(rings().lock().unwrap().entry(key).or_insert(ring).clone())
    }

    pub fn algebra(&self) -> &SimpleLieAlgebra {
        &self.algebra
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Position of `λ` in the alcove order.
    pub fn index_of(&self, lambda: &Weight) -> Result<usize> {
        self.index
            .get(lambda)
            .copied()
            .ok_or_else(|| Error::AlcoveViolation {
                weight: lambda.to_string(),
                level: self.level,
            })
    }

    pub fn dual_index(&self, i: usize) -> usize {
        self.duals[i]
    }

    /// Structure constants `N_{ab}^c` as a sparse list of `(c, N)`.
    pub fn product(&self, a: usize, b: usize) -> Result<Product> {
        let key = (a.min(b), a.max(b));
        if let Some(p) = self.products.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let lw = |i: usize| LeveledWeight::new_unchecked(self.basis[i].clone(), self.level);
        let v = fuse(&self.algebra, &lw(key.0), &lw(key.1))?;
        let mut sparse = Vec::with_capacity(v.len());
        for (w, m) in v.entries() {
            sparse.push((self.index_of(w)?, *m));
        }
        let p = Arc::new(sparse);
        self.products.lock().unwrap().insert(key, p.clone());
        Ok(p)
    }

    /// `x · e_a` for `x` given in the alcove basis.
    pub fn multiply(&self, x: &[u128], a: usize) -> Result<Vec<u128>> {
        let mut out = vec![0u128; self.len()];
        for (b, &xb) in x.iter().enumerate() {
            if xb == 0 {
                continue;
            }
            for &(c, n) in self.product(a, b)?.iter() {
                let term = xb.checked_mul(n as u128).ok_or(Error::Overflow("fusion product"))?;
                out[c] = out[c].checked_add(term).ok_or(Error::Overflow("fusion product"))?;
            }
        }
        Ok(out)
    }

    /// The handle operator `x ↦ Σ_μ x · μ · μ†`.
    pub fn add_handle(&self, x: &[u128]) -> Result<Vec<u128>> {
        let mut out = vec![0u128; self.len()];
        for mu in 0..self.len() {
            let y = self.multiply(&self.multiply(x, mu)?, self.duals[mu])?;
            for (o, v) in out.iter_mut().zip(y) {
                *o = o.checked_add(v).ok_or(Error::Overflow("fusion product"))?;
            }
        }
        Ok(out)
    }
}
