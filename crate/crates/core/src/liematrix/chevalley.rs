//! Chevalley bases as explicit matrices.
//!
//! Simply-laced algebras come from the Frenkel–Kac sign cocycle on the
//! root lattice. The other types are fixed points of diagram automorphisms
//! (`C_n ⊂ A_{2n−1}`, `B_n ⊂ D_{n+1}`, `G2 ⊂ D4`, `F4 ⊂ E6`), generated by
//! orbit sums of Chevalley generators inside the adjoint representation of
//! the simply-laced algebra.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{CartanType, Family, Rational, SimpleLieAlgebra};

/// Sparse square matrix, one map per row.
#[derive(Clone, Debug, PartialEq)]
pub(super) struct Sparse {
    rows: Vec<BTreeMap<usize, Rational>>,
}

impl Sparse {
    fn zeros(n: usize) -> Self {
        Sparse {
            rows: vec![BTreeMap::new(); n],
        }
    }

    fn add_entry(&mut self, r: usize, c: usize, v: Rational) {
        if v.is_zero() {
            return;
        }
        let e = self.rows[r].entry(c).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            self.rows[r].remove(&c);
        }
    }

    fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    fn mul(&self, other: &Sparse) -> Sparse {
        let mut out = Sparse::zeros(self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for (&k, a) in row {
                for (&c, b) in &other.rows[k] {
                    out.add_entry(r, c, a * b);
                }
            }
        }
        out
    }

    fn axpy(&mut self, a: Rational, x: &Sparse) {
        for (r, row) in x.rows.iter().enumerate() {
            for (&c, v) in row {
                self.add_entry(r, c, a * v);
            }
        }
    }

    fn scaled(&self, a: Rational) -> Sparse {
        let mut out = Sparse::zeros(self.rows.len());
        out.axpy(a, self);
        out
    }

    fn commutator(&self, other: &Sparse) -> Sparse {
        let mut out = self.mul(other);
        out.axpy(-Rational::one(), &other.mul(self));
        out
    }

    fn first_entry(&self) -> Option<(usize, usize, Rational)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().next().map(|(&c, v)| (r, c, *v)))
    }

    /// `λ` with `self = λ·other`, if any.
    fn ratio_to(&self, other: &Sparse) -> Option<Rational> {
        let (r, c, v) = other.first_entry()?;
        let lambda = self.rows[r].get(&c).copied().unwrap_or_else(Rational::zero) / v;
        (*self == other.scaled(lambda)).then_some(lambda)
    }
}

/// Frenkel–Kac realization of a simply-laced algebra in its adjoint
/// representation; returns the matrices of `e_i`, `f_i`, `h_i`.
fn simply_laced_generators(g: &SimpleLieAlgebra) -> (Vec<Sparse>, Vec<Sparse>, Vec<Sparse>) {
    let r = g.rank();
    let a = g.cartan_matrix();
    let mut roots: Vec<Vec<i32>> = g.positive_roots().iter().map(|x| x.coords.clone()).collect();
    roots.extend(
        g.positive_roots()
            .iter()
            .map(|x| x.coords.iter().map(|c| -c).collect::<Vec<_>>()),
    );
    let nroots = roots.len();
    let n = nroots + r;
    let index: HashMap<Vec<i32>, usize> = roots.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    // ε(α_i, α_j) = −1 for i = j and for linked i < j
    let eps = |x: &[i32], y: &[i32]| {
        let mut parity = 0i64;
        for i in 0..r {
            for j in i..r {
                if i == j || a[i][j] == -1 {
                    parity += (x[i] * y[j]) as i64;
                }
            }
        }
        if parity.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    };
    let bracket = |p: usize, q: usize| -> Vec<(usize, i64)> {
        match (p < nroots, q < nroots) {
            (false, false) => vec![],
            (false, true) => {
                let i = p - nroots;
                let v: i64 = (0..r).map(|j| roots[q][j] as i64 * a[i][j]).sum();
                if v == 0 {
                    vec![]
                } else {
                    vec![(q, v)]
                }
            }
            (true, false) => {
                let i = q - nroots;
                let v: i64 = (0..r).map(|j| roots[p][j] as i64 * a[i][j]).sum();
                if v == 0 {
                    vec![]
                } else {
                    vec![(p, -v)]
                }
            }
            (true, true) => {
                let s: Vec<i32> = (0..r).map(|j| roots[p][j] + roots[q][j]).collect();
                if s.iter().all(|&x| x == 0) {
                    // [E_α, E_{−α}] = ε(α,−α) H_α = −H_α
                    (0..r)
                        .filter(|&j| roots[p][j] != 0)
                        .map(|j| (nroots + j, -(roots[p][j] as i64)))
                        .collect()
                } else if let Some(&k) = index.get(&s) {
                    vec![(k, eps(&roots[p], &roots[q]))]
                } else {
                    vec![]
                }
            }
        }
    };
    let ad = |p: usize| {
        let mut m = Sparse::zeros(n);
        for q in 0..n {
            for (k, v) in bracket(p, q) {
                m.add_entry(k, q, Rational::from_integer(v));
            }
        }
        m
    };
    let simple = |i: usize, sign: i32| {
        let mut c = vec![0i32; r];
        c[i] = sign;
        index[&c]
    };
    let e = (0..r).map(|i| ad(simple(i, 1))).collect();
    let f = (0..r).map(|i| ad(simple(i, -1)).scaled(-Rational::one())).collect();
    let h = (0..r).map(|i| ad(nroots + i)).collect();
    (e, f, h)
}

/// Simply-laced algebra and node orbits whose sums generate `ty`.
fn folding(ty: CartanType) -> Result<(CartanType, Vec<Vec<usize>>)> {
    let n = ty.rank();
    let single = |k: usize| (0..k).map(|i| vec![i]).collect::<Vec<_>>();
    Ok(match ty.family() {
        Family::A | Family::D | Family::E => (ty, single(n)),
        Family::C => {
            let m = 2 * n - 1;
            let mut orbits: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, m - 1 - i]).collect();
            orbits.push(vec![n - 1]);
            (CartanType::new(Family::A, m)?, orbits)
        }
        // D3 is stored as A3, whose middle node is the vector node
        Family::B if n == 2 => (CartanType::new(Family::A, 3)?, vec![vec![1], vec![0, 2]]),
        Family::B => {
            let mut orbits = single(n - 1);
            orbits.push(vec![n - 1, n]);
            (CartanType::new(Family::D, n + 1)?, orbits)
        }
        Family::G => (CartanType::new(Family::D, 4)?, vec![vec![0, 2, 3], vec![1]]),
        Family::F => (
            CartanType::new(Family::E, 6)?,
            vec![vec![1], vec![3], vec![2, 4], vec![0, 5]],
        ),
    })
}

/// Chevalley basis of `g` as matrices: positive root vectors, then the
/// coroots `h_i`, then negative root vectors. Each element carries its
/// weight in simple-root coordinates.
pub(super) struct MatrixBasis {
    pub elements: Vec<Sparse>,
    pub weights: Vec<Vec<i32>>,
    pub num_positive: usize,
}

pub(super) fn chevalley_basis(g: &SimpleLieAlgebra) -> Result<MatrixBasis> {
    let (source_ty, orbits) = folding(g.cartan_type())?;
    let source = SimpleLieAlgebra::from_type(source_ty);
    let (se, sf, sh) = simply_laced_generators(&source);
    let n = se[0].rows.len();
    let r = g.rank();
    let orbit_sum = |ms: &[Sparse], orbit: &[usize]| {
        let mut m = Sparse::zeros(n);
        for &i in orbit {
            m.axpy(Rational::one(), &ms[i]);
        }
        m
    };
    let e: Vec<Sparse> = orbits.iter().map(|o| orbit_sum(&se, o)).collect();
    let f: Vec<Sparse> = orbits.iter().map(|o| orbit_sum(&sf, o)).collect();
    let h: Vec<Sparse> = orbits.iter().map(|o| orbit_sum(&sh, o)).collect();

    // Serre-type relations with the target Cartan matrix
    let a = g.cartan_matrix();
    for i in 0..r {
        for j in 0..r {
            let want = Rational::from_integer(a[i][j]);
            if h[i].commutator(&e[j]) != e[j].scaled(want) {
                return Err(Error::CrossCheck(format!("[h_{i}, e_{j}] ≠ a_ij e_j")));
            }
            let ef = e[i].commutator(&f[j]);
            let ok = if i == j { ef == h[i] } else { ef.is_zero() };
            if !ok {
                return Err(Error::CrossCheck(format!("[e_{i}, f_{j}] ≠ δ_ij h_i")));
            }
        }
    }

    let roots = g.positive_roots();
    let index: HashMap<&[i32], usize> = roots.iter().enumerate().map(|(i, x)| (&x.coords[..], i)).collect();
    let mut pos: Vec<Sparse> = Vec::with_capacity(roots.len());
    let mut neg: Vec<Sparse> = Vec::with_capacity(roots.len());
    for root in roots {
        if root.height == 1 {
            let i = root.coords.iter().position(|&c| c == 1).unwrap();
            pos.push(e[i].clone());
            neg.push(f[i].clone());
            continue;
        }
        // ξ = α_i + β with β a root of lower height
        let (i, beta) = (0..r)
            .find_map(|i| {
                let mut b = root.coords.clone();
                b[i] -= 1;
                index.get(&b[..]).map(|&k| (i, k))
            })
            .ok_or_else(|| Error::CrossCheck("root string is broken".into()))?;
        // p = largest integer with β − pα_i a root
        let mut p = 0;
        loop {
            let mut b = roots[beta].coords.clone();
            b[i] -= p + 1;
            if index.contains_key(&b[..]) {
                p += 1;
            } else {
                break;
            }
        }
        let ex = e[i].commutator(&pos[beta]).scaled(Rational::new(1, (p + 1) as i64));
        let fx = f[i].commutator(&neg[beta]);
        let mut hx = Sparse::zeros(n);
        for (j, &c) in root.coroot_coords.iter().enumerate() {
            hx.axpy(Rational::from_integer(c as i64), &h[j]);
        }
        let m = ex
            .commutator(&fx)
            .ratio_to(&hx)
            .filter(|m| !m.is_zero())
            .ok_or_else(|| Error::CrossCheck("[e_ξ, f_ξ] is not a coroot".into()))?;
        pos.push(ex);
        neg.push(fx.scaled(m.recip()));
    }

    let mut weights: Vec<Vec<i32>> = roots.iter().map(|x| x.coords.clone()).collect();
    weights.extend((0..r).map(|_| vec![0; r]));
    weights.extend(roots.iter().map(|x| x.coords.iter().map(|c| -c).collect()));
    let num_positive = pos.len();
    let mut elements = pos;
    elements.extend(h);
    elements.extend(neg);
    Ok(MatrixBasis {
        elements,
        weights,
        num_positive,
    })
}

/// Structure constants `[x_a, x_b] = Σ_k c_ab^k x_k` read off from the
/// matrices, using weights to locate the only possible targets.
pub(super) fn structure_table(
    g: &SimpleLieAlgebra,
    basis: &MatrixBasis,
) -> Result<Vec<Vec<Vec<(usize, Rational)>>>> {
    let d = basis.elements.len();
    let r = g.rank();
    let np = basis.num_positive;
    let by_weight: HashMap<&[i32], usize> = basis
        .weights
        .iter()
        .enumerate()
        .filter(|(_, w)| w.iter().any(|&x| x != 0))
        .map(|(i, w)| (&w[..], i))
        .collect();
    let mut table = vec![vec![Vec::new(); d]; d];
    for a in 0..d {
        for b in 0..d {
            let br = basis.elements[a].commutator(&basis.elements[b]);
            if br.is_zero() {
                continue;
            }
            let w: Vec<i32> = (0..r).map(|j| basis.weights[a][j] + basis.weights[b][j]).collect();
            let entry = if w.iter().all(|&x| x == 0) {
                // a root vector against its opposite: a multiple of the coroot
                let (root, sign) = if a < np { (a, 1) } else { (b, -1) };
                let coroot = &g.positive_roots()[root].coroot_coords;
                let mut hx = Sparse::zeros(br.rows.len());
                for (j, &c) in coroot.iter().enumerate() {
                    hx.axpy(Rational::from_integer(c as i64), &basis.elements[np + j]);
                }
                let m = br
                    .ratio_to(&hx)
                    .filter(|m| *m == Rational::from_integer(sign))
                    .ok_or_else(|| Error::CrossCheck(format!("[x_{a}, x_{b}] is not ±h")))?;
                coroot
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(j, &c)| (np + j, m * Rational::from_integer(c as i64)))
                    .collect()
            } else {
                let k = *by_weight
                    .get(&w[..])
                    .ok_or_else(|| Error::CrossCheck(format!("[x_{a}, x_{b}] has a non-root weight")))?;
                let m = br
                    .ratio_to(&basis.elements[k])
                    .ok_or_else(|| Error::CrossCheck(format!("[x_{a}, x_{b}] is not a root vector")))?;
                vec![(k, m)]
            };
            table[a][b] = entry;
        }
    }
    Ok(table)
}
