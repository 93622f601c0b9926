//! Characters of finite-dimensional irreducible modules.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::{SimpleLieAlgebra, Weight};

/// Adds the prime factorization of `n` (with sign `dir`) to `exps`.
fn factor_into(mut n: u64, dir: i64, exps: &mut BTreeMap<u64, i64>) {
    let mut p = 2u64;
    while p * p <= n {
        while n % p == 0 {
            *exps.entry(p).or_insert(0) += dir;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *exps.entry(n).or_insert(0) += dir;
    }
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α^∨) / (ρ, α^∨)`, evaluated through
/// prime exponents so that rank-100 algebras do not need big integers.
pub(super) fn weyl_dimension(g: &SimpleLieAlgebra, lambda: &Weight) -> Result<u128> {
    let mut exps = BTreeMap::new();
    for root in g.positive_roots() {
        let mut num = 0i64;
        let mut den = 0i64;
        for (c, l) in root.coroot_coords.iter().zip(&lambda.0) {
            let c = *c as i64;
            num += c * (l + 1);
            den += c;
        }
        factor_into(num as u64, 1, &mut exps);
        factor_into(den as u64, -1, &mut exps);
    }
    let mut acc: u128 = 1;
    for (p, e) in exps {
        if e < 0 {
            return Err(Error::CrossCheck(format!(
                "Weyl dimension of {lambda} is not an integer"
            )));
        }
        for _ in 0..e {
            acc = acc
                .checked_mul(p as u128)
                .ok_or(Error::Overflow("Weyl dimension"))?;
        }
    }
    Ok(acc)
}

impl SimpleLieAlgebra {
    /// Dominant weights of `V_λ` with their multiplicities (Freudenthal's
    /// formula), sorted by distance below `λ` then lexicographically.
    pub fn dominant_character(&self, lambda: &Weight) -> Result<Arc<Vec<(Weight, u64)>>> {
        self.check_dominant(lambda)?;
        if let Some(c) = self.data().char_cache.lock().unwrap().get(lambda) {
            return Ok(c.clone());
        }
        let computed = Arc::new(self.freudenthal(lambda)?);
        self.data()
            .char_cache
            .lock()
            .unwrap()
            .insert(lambda.clone(), computed.clone());
        Ok(computed)
    }

    /// Full weight multiplicities of `V_λ`.
    pub fn character(&self, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
        let dom = self.dominant_character(lambda)?;
        let mut out = BTreeMap::new();
        for (mu, m) in dom.iter() {
            for w in self.weyl_orbit(mu) {
                out.insert(w, *m);
            }
        }
        Ok(out)
    }

    /// Dominant weights `μ ≤ top`, each with its depth `ht(top - μ)`,
    /// sorted by depth. Subtracting positive roots while staying dominant
    /// reaches all of them.
    pub(crate) fn dominant_weights_below(&self, top: &Weight) -> Vec<(Weight, i64)> {
        let mut depth: HashMap<Weight, i64> = HashMap::from([(top.clone(), 0)]);
        let mut order = vec![top.clone()];
        let mut next = 0;
        while next < order.len() {
            let cur = order[next].clone();
            next += 1;
            let d = depth[&cur];
            for root in self.positive_roots() {
                let w = cur.sub(&root.labels);
                if w.is_dominant() && !depth.contains_key(&w) {
                    depth.insert(w.clone(), d + root.height);
                    order.push(w);
                }
            }
        }
        let mut out: Vec<(Weight, i64)> = order
            .into_iter()
            .map(|w| {
                let d = depth[&w];
                (w, d)
            })
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
        out
    }

    fn freudenthal(&self, lambda: &Weight) -> Result<Vec<(Weight, u64)>> {
        let rho = self.rho();
        let lr = lambda.add(&rho);
        let top_norm = self.form_scaled(&lr, &lr);
        let candidates = self.dominant_weights_below(lambda);
        let mut mult: HashMap<Weight, u64> = HashMap::new();
        let mut out = Vec::with_capacity(candidates.len());
        for (mu, depth) in candidates {
            let m = if depth == 0 {
                1
            } else {
                let mr = mu.add(&rho);
                let denom = top_norm - self.form_scaled(&mr, &mr);
                let mut num: i64 = 0;
                for root in self.positive_roots() {
                    let mut k = 1;
                    while depth - k * root.height >= 0 {
                        let nu = mu.add_scaled(&root.labels, k);
                        let (dom, _) = self.to_dominant(&nu);
                        if let Some(&m) = mult.get(&dom) {
                            num += self.form_scaled(&nu, &root.labels) * m as i64;
                        }
                        k += 1;
                    }
                }
                num *= 2;
                if denom <= 0 || num % denom != 0 {
                    return Err(Error::CrossCheck(format!(
                        "Freudenthal recursion for {lambda} at {mu}: {num}/{denom}"
                    )));
                }
                (num / denom) as u64
            };
            if m > 0 {
                mult.insert(mu.clone(), m);
                out.push((mu, m));
            }
        }
        Ok(out)
    }
}
