//! Finite Weyl group acting on Dynkin labels.

use std::collections::{HashMap, HashSet};

use super::{SimpleLieAlgebra, Weight};

impl SimpleLieAlgebra {
    /// Simple reflection `s_i` in place: `λ ↦ λ - λ_i α_i`.
    pub fn reflect(&self, w: &mut Weight, i: usize) {
        let li = w.0[i];
        if li == 0 {
            return;
        }
        for (j, row) in self.data().cartan.iter().enumerate() {
            w.0[j] -= li * row[i];
        }
    }

    /// The dominant element of the orbit of `w`, and the parity (+1/-1) of
    /// the number of reflections used to get there.
    pub fn to_dominant(&self, w: &Weight) -> (Weight, i32) {
        let mut w = w.clone();
        let mut sign = 1;
        while let Some(i) = w.0.iter().position(|&x| x < 0) {
            self.reflect(&mut w, i);
            sign = -sign;
        }
        (w, sign)
    }

    /// Dot-action straightening: returns `(μ, ε)` with `w(λ+ρ)-ρ = μ`
    /// dominant and `ε = det w`, or `None` when `λ+ρ` lies on a wall.
    pub fn dot_dominant(&self, w: &Weight) -> Option<(Weight, i32)> {
        let shifted = Weight(w.0.iter().map(|x| x + 1).collect());
        let (d, sign) = self.to_dominant(&shifted);
        if d.0.iter().any(|&x| x == 0) {
            return None;
        }
        Some((Weight(d.0.iter().map(|x| x - 1).collect()), sign))
    }

    /// `−w₀(λ)`: the highest weight of the dual module.
    pub fn dual(&self, w: &Weight) -> Weight {
        self.to_dominant(&w.neg()).0
    }

    /// The Weyl orbit of a weight.
    pub fn weyl_orbit(&self, w: &Weight) -> Vec<Weight> {
        let start = self.to_dominant(w).0;
        let mut seen: HashSet<Weight> = HashSet::from([start.clone()]);
        let mut out = vec![start];
        let mut next = 0;
        while next < out.len() {
            let cur = out[next].clone();
            next += 1;
            for i in 0..self.rank() {
                // Lowering only: from a dominant start this reaches the whole
                // orbit.
                if cur.0[i] > 0 {
                    let mut r = cur.clone();
                    self.reflect(&mut r, i);
                    if seen.insert(r.clone()) {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    /// Orbit of a regular weight with the sign `det w` of the element
    /// carrying the dominant representative to each point. The map to the
    /// Weyl group is a bijection, so this enumerates `W` with signs.
    pub fn signed_regular_orbit(&self, w: &Weight) -> Vec<(Weight, i32)> {
        let (start, _) = self.to_dominant(w);
        assert!(
            start.0.iter().all(|&x| x > 0),
            "signed_regular_orbit needs a regular weight"
        );
        let mut seen: HashMap<Weight, i32> = HashMap::from([(start.clone(), 1)]);
        let mut out = vec![(start, 1)];
        let mut next = 0;
        while next < out.len() {
            let (cur, sign) = out[next].clone();
            next += 1;
            for i in 0..self.rank() {
                if cur.0[i] > 0 {
                    let mut r = cur.clone();
                    self.reflect(&mut r, i);
                    if !seen.contains_key(&r) {
                        seen.insert(r.clone(), -sign);
                        out.push((r, -sign));
                    }
                }
            }
        }
        out
    }
}
