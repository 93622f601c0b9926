//! The center of the simply connected group as automorphisms of the affine
//! Dynkin diagram, acting on integrable weights.

use std::fmt;

use crate::error::Result;
use crate::rootdata::{LeveledWeight, SimpleLieAlgebra, Weight};

/// A center element, stored as a permutation `σ` of the affine nodes
/// `0..=rank` (`perm[i] = σ(i)`).
#[derive(Clone)]
pub struct CenterElement {
    algebra: SimpleLieAlgebra,
    perm: Vec<usize>,
}

impl CenterElement {
    pub fn algebra(&self) -> &SimpleLieAlgebra {
        &self.algebra
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &CenterElement) -> CenterElement {
        CenterElement {
            algebra: self.algebra.clone(),
            perm: other.perm.iter().map(|&j| self.perm[j]).collect(),
        }
    }

    pub fn inverse(&self) -> CenterElement {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        CenterElement {
            algebra: self.algebra.clone(),
            perm: inv,
        }
    }

    pub fn order(&self) -> usize {
        let mut cur = self.clone();
        let mut n = 1;
        while !cur.is_identity() {
            cur = cur.compose(self);
            n += 1;
        }
        n
    }
}

impl PartialEq for CenterElement {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.cartan_type() == other.algebra.cartan_type() && self.perm == other.perm
    }
}

impl Eq for CenterElement {}

impl fmt::Debug for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CenterElement({}, {:?})", self.algebra, self.perm)
    }
}

impl fmt::Display for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<String> = self
            .perm
            .iter()
            .enumerate()
            .filter(|(i, p)| i != *p)
            .map(|(i, p)| format!("{i}→{p}"))
            .collect();
        if moved.is_empty() {
            f.write_str("id")
        } else {
            f.write_str(&moved.join(" "))
        }
    }
}

/// The center with its multiplication table.
#[derive(Debug, Clone)]
pub struct CenterGroup {
    elements: Vec<CenterElement>,
    /// `table[a][b]` is the index of `elements[a] ∘ elements[b]`.
    table: Vec<Vec<usize>>,
}

impl CenterGroup {
    /// Elements, identity first, then by permutation.
    pub fn elements(&self) -> &[CenterElement] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> &CenterElement {
        &self.elements[0]
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|e| e.order() == self.order())
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// The element sending node 0 to node 1, if any. For orthogonal
    /// algebras it exchanges the vacuum and the vector at level one.
    pub fn swap_element(&self) -> Option<&CenterElement> {
        self.elements.iter().find(|e| e.perm.get(1) == Some(&0) && e.perm[0] == 1)
    }

    /// Short description such as `Z4` or `Z2×Z2`.
    pub fn structure(&self) -> String {
        let n = self.order();
        if self.is_cyclic() {
            format!("Z{n}")
        } else if n == 4 {
            "Z2×Z2".to_string()
        } else {
            format!("order {n}")
        }
    }
}

/// All permutations of the affine nodes preserving the affine Cartan matrix.
fn diagram_automorphisms(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    fn rec(a: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let i = perm.len();
        if i == a.len() {
            out.push(perm.clone());
            return;
        }
        for t in 0..a.len() {
            if used[t] {
                continue;
            }
            let ok = (0..i).all(|j| a[i][j] == a[t][perm[j]] && a[j][i] == a[perm[j]][t]);
            if ok {
                used[t] = true;
                perm.push(t);
                rec(a, perm, used, out);
                perm.pop();
                used[t] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(a, &mut Vec::new(), &mut vec![false; a.len()], &mut out);
    out
}

/// Finite part of `σ(Λ_i)` for the level-zero action:
/// `ω_i ↦ ω_{σ(i)} − a_i^∨ ω_{σ(0)}`, with `ω_0 = 0`.
fn linear_part(g: &SimpleLieAlgebra, perm: &[usize]) -> Vec<Weight> {
    let n = g.rank();
    let omega = |i: usize| {
        if i == 0 {
            Weight::zero(n)
        } else {
            Weight::fundamental(n, i - 1)
        }
    };
    (1..=n)
        .map(|i| omega(perm[i]).add_scaled(&omega(perm[0]), -g.comarks()[i - 1]))
        .collect()
}

/// Whether the linear map sending `ω_i` to `images[i]` is a Weyl group
/// element: carry the image of `ρ` back to `ρ` and check the same
/// reflections undo every image.
fn is_weyl_element(g: &SimpleLieAlgebra, images: &[Weight]) -> bool {
    let mut rho_image = Weight::zero(g.rank());
    for w in images {
        rho_image = rho_image.add(w);
    }
    let mut steps = Vec::new();
    while let Some(i) = rho_image.0.iter().position(|&x| x < 0) {
        g.reflect(&mut rho_image, i);
        steps.push(i);
    }
    if rho_image != g.rho() {
        return false;
    }
    images.iter().enumerate().all(|(k, w)| {
        let mut w = w.clone();
        for &i in &steps {
            g.reflect(&mut w, i);
        }
        w == Weight::fundamental(g.rank(), k)
    })
}

/// The center `Z(G̃)` as a group of affine-diagram automorphisms.
pub fn center_group(g: &SimpleLieAlgebra) -> CenterGroup {
    let mut perms: Vec<Vec<usize>> = diagram_automorphisms(g.affine_cartan_matrix())
        .into_iter()
        .filter(|p| is_weyl_element(g, &linear_part(g, p)))
        .collect();
    perms.sort();
    let elements: Vec<CenterElement> = perms
        .into_iter()
        .map(|perm| CenterElement {
            algebra: g.clone(),
            perm,
        })
        .collect();
    let table = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| {
                    let c = a.compose(b);
                    elements.iter().position(|e| *e == c).expect("center is closed")
                })
                .collect()
        })
        .collect();
    CenterGroup { elements, table }
}

/// Affine Dynkin labels `(ℓ − (λ,θ), λ_1, …, λ_n)`.
pub fn affine_labels(g: &SimpleLieAlgebra, lambda: &LeveledWeight) -> Vec<i64> {
    let mut out = vec![lambda.level() as i64 - g.theta_pairing(lambda.weight())];
    out.extend_from_slice(lambda.weight().labels());
    out
}

/// `σ·λ`: push the affine labels forward along `σ`,
/// `(σλ̂)_{σ(i)} = λ̂_i`.
pub fn act(sigma: &CenterElement, lambda: &LeveledWeight) -> Result<LeveledWeight> {
    let g = &sigma.algebra;
    let lw = LeveledWeight::new(g, lambda.weight().clone(), lambda.level())?;
    let hat = affine_labels(g, &lw);
    let mut out = vec![0i64; hat.len()];
    for (i, &v) in hat.iter().enumerate() {
        out[sigma.perm[i]] = v;
    }
    LeveledWeight::new(g, Weight(out[1..].to_vec()), lw.level())
}
