use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{CartanType, Family, Rational, Weight};

/// A positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the basis of simple roots.
    pub coords: Vec<i32>,
    /// Coordinates of the coroot in the basis of simple coroots.
    pub coroot_coords: Vec<i32>,
    /// Dynkin labels.
    pub labels: Weight,
    pub height: i64,
    /// `form_scale * (α, α)`.
    pub norm_scaled: i64,
}

impl Root {
    pub fn is_long(&self, long_norm_scaled: i64) -> bool {
        self.norm_scaled == long_norm_scaled
    }
}

pub(crate) struct RootData {
    pub cartan: Vec<Vec<i64>>,
    pub affine_cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i) / 2`, long roots normalized to 1.
    pub sym: Vec<Rational>,
    /// Integer Gram matrix of fundamental weights, scaled by `scale`.
    pub form_int: Vec<Vec<i64>>,
    pub scale: i64,
    pub positive_roots: Vec<Root>,
    pub theta: Weight,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
    pub dual_coxeter: u32,
    /// Dynkin labels of the simple coroots.
    pub coroots: Vec<Weight>,
    pub(super) char_cache: Mutex<HashMap<Weight, Arc<Vec<(Weight, u64)>>>>,
}

pub(crate) fn cartan_matrix(ty: CartanType) -> Vec<Vec<i64>> {
    let n = ty.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match ty.family() {
        Family::A | Family::B | Family::C => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::G => link(0, 1),
    }
    match ty.family() {
        // α_n short
        Family::B => a[n - 1][n - 2] = -2,
        // α_n long
        Family::C => a[n - 2][n - 1] = -2,
        // α_3, α_4 short
        Family::F => a[2][1] = -2,
        // α_1 short
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// Exact inverse of an integer matrix by fraction-free (Bareiss)
/// Gauss-Jordan elimination; every intermediate entry is a minor of
/// `[A | I]`, so the arithmetic stays integral (and, for Cartan matrices,
/// small).
pub(crate) fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<i64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<i64> = row.to_vec();
            r.extend((0..n).map(|j| (i == j) as i64));
            r
        })
        .collect();
    let mut prev = 1i64;
    for k in 0..n {
        let pivot = (k..n).find(|&r| a[r][k] != 0)?;
        a.swap(k, pivot);
        let pk = a[k][k];
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = a[i][k];
            for j in 0..2 * n {
                if j != k {
                    let v = pk
                        .checked_mul(a[i][j])
                        .zip(f.checked_mul(a[k][j]))
                        .and_then(|(x, y)| x.checked_sub(y))
                        .expect("Bareiss minor overflows i64");
                    a[i][j] = v / prev;
                }
            }
            a[i][k] = 0;
        }
        prev = pk;
    }
    // now a = [d·I | d·A⁻¹] with d = ±det A
    let d = prev;
    Some(
        a.iter()
            .map(|row| (0..n).map(|j| Rational::new(row[n + j], d)).collect())
            .collect(),
    )
}

impl RootData {
    pub(crate) fn build(ty: CartanType) -> Self {
        let n = ty.rank();
        let cartan = cartan_matrix(ty);

        // Symmetrizer: a_ij d_i = a_ji d_j along the (connected) diagram.
        let mut sym = vec![Rational::zero(); n];
        sym[0] = Rational::one();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && sym[j].is_zero() {
                    sym[j] = sym[i] * Rational::new(cartan[i][j], cartan[j][i]);
                    queue.push_back(j);
                }
            }
        }
        let longest = *sym.iter().max().unwrap();
        for d in &mut sym {
            *d /= longest;
        }

        let inv = invert(&cartan).expect("finite-type Cartan matrices are invertible");

        // (ω_i, ω_k) = (A^{-1})_{ki} d_k
        let form: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|k| inv[k][i] * sym[k]).collect())
            .collect();
        let scale = form
            .iter()
            .flatten()
            .fold(1i64, |acc, q| acc.lcm(q.denom()));
        let form_int: Vec<Vec<i64>> = form
            .iter()
            .map(|r| r.iter().map(|q| (q * scale).to_integer()).collect())
            .collect();

        let positive_roots = positive_roots(&cartan, &sym, scale);
        let top = positive_roots.last().expect("at least one positive root");
        let theta = top.labels.clone();
        let marks: Vec<i64> = top.coords.iter().map(|&c| c as i64).collect();

        // Affine extension with α_0 = δ - θ.
        let mut affine_cartan = vec![vec![0i64; n + 1]; n + 1];
        affine_cartan[0][0] = 2;
        for j in 0..n {
            affine_cartan[0][j + 1] = -(sym[j] * theta.0[j]).to_integer();
            affine_cartan[j + 1][0] = -theta.0[j];
            for i in 0..n {
                affine_cartan[i + 1][j + 1] = cartan[i][j];
            }
        }
        // Left null vector c of the affine matrix with c_0 = 1:
        // A^T c = -(row 0 restricted to finite nodes).
        let comarks: Vec<i64> = (0..n)
            .map(|i| {
                let v: Rational = (0..n)
                    .map(|j| inv[j][i] * Rational::from_integer(-affine_cartan[0][j + 1]))
                    .sum();
                assert!(v.is_integer(), "comark {i} of {ty} is not integral");
                v.to_integer()
            })
            .collect();

        // h∨ = 1 + (ρ, θ)
        let rho_theta: i64 = (0..n)
            .map(|i| (0..n).map(|j| form_int[i][j] * theta.0[j]).sum::<i64>())
            .sum();
        assert_eq!(rho_theta % scale, 0);
        let dual_coxeter = (1 + rho_theta / scale) as u32;

        // α_i^∨ = α_i / d_i has labels a_ji / d_i.
        let coroots = (0..n)
            .map(|i| {
                Weight(
                    (0..n)
                        .map(|j| (Rational::from_integer(cartan[j][i]) / sym[i]).to_integer())
                        .collect(),
                )
            })
            .collect();

        RootData {
            cartan,
            affine_cartan,
            sym,
            form_int,
            scale,
            positive_roots,
            theta,
            marks,
            comarks,
            dual_coxeter,
            coroots,
            char_cache: Mutex::new(HashMap::new()),
        }
    }
}

/// Positive roots by the string algorithm, layer by layer in height.
fn positive_roots(cartan: &[Vec<i64>], sym: &[Rational], scale: i64) -> Vec<Root> {
    let n = cartan.len();
    let mut coords: Vec<Vec<i32>> = Vec::new();
    let mut labels: Vec<Vec<i64>> = Vec::new();
    // Roots are indexed by the linear fingerprint Σ c_j r_j, so shifting by
    // a multiple of α_i updates the key in O(1). Hits are confirmed on the
    // coordinates.
    let mult: Vec<u64> = (0..n as u64)
        .map(|j| (j + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1)
        .collect();
    let mut fingerprints: Vec<u64> = Vec::new();
    let mut index: HashMap<u64, Vec<usize>> = HashMap::new();
    let find = |index: &HashMap<u64, Vec<usize>>,
                coords: &[Vec<i32>],
                key: u64,
                base: &[i32],
                i: usize,
                shift: i32| {
        index.get(&key).is_some_and(|hits| {
            hits.iter().any(|&h| {
                coords[h]
                    .iter()
                    .enumerate()
                    .all(|(j, &x)| x == base[j] + if j == i { shift } else { 0 })
            })
        })
    };
    for i in 0..n {
        let mut c = vec![0i32; n];
        c[i] = 1;
        index.entry(mult[i]).or_default().push(coords.len());
        fingerprints.push(mult[i]);
        coords.push(c);
        labels.push(cartan.iter().map(|row| row[i]).collect());
    }
    let mut next = 0;
    while next < coords.len() {
        let beta = coords[next].clone();
        let beta_labels = labels[next].clone();
        let fp = fingerprints[next];
        next += 1;
        let is_simple = beta.iter().map(|&c| c as i64).sum::<i64>() == 1;
        for i in 0..n {
            if is_simple && beta[i] == 1 {
                continue;
            }
            // Strings are unbroken, so the α_i-string below β has length
            // p > l_i exactly when β - (l_i + 1)α_i is a root.
            let l = beta_labels[i];
            let extends = l < 0 || {
                let k = l as i32 + 1;
                beta[i] >= k
                    && find(
                        &index,
                        &coords,
                        fp.wrapping_sub((k as u64).wrapping_mul(mult[i])),
                        &beta,
                        i,
                        -k,
                    )
            };
            let up_fp = fp.wrapping_add(mult[i]);
            if extends && !find(&index, &coords, up_fp, &beta, i, 1) {
                let mut up = beta.clone();
                up[i] += 1;
                index.entry(up_fp).or_default().push(coords.len());
                fingerprints.push(up_fp);
                coords.push(up);
                labels.push(
                    beta_labels
                        .iter()
                        .zip(cartan)
                        .map(|(l, row)| l + row[i])
                        .collect(),
                );
            }
        }
    }

    // d_j scaled to integers; D_j = L d_j.
    let l_sym = sym.iter().fold(1i64, |acc, d| acc.lcm(d.denom()));
    let d_int: Vec<i64> = sym.iter().map(|d| (d * l_sym).to_integer()).collect();
    let mut roots: Vec<Root> = coords
        .into_iter()
        .zip(labels)
        .map(|(c, l)| {
            // L(α, α) = Σ c_j l_j D_j
            let norm_l: i64 = (0..n).map(|j| c[j] as i64 * l[j] * d_int[j]).sum();
            let norm_scaled = norm_l * scale / l_sym;
            // coroot coordinates c_j d_j / d_α with d_α = (α,α)/2
            let coroot_coords = (0..n)
                .map(|j| {
                    let num = 2 * c[j] as i64 * d_int[j];
                    debug_assert_eq!(num % norm_l, 0);
                    (num / norm_l) as i32
                })
                .collect();
            Root {
                height: c.iter().map(|&x| x as i64).sum(),
                coords: c,
                coroot_coords,
                labels: Weight(l),
                norm_scaled,
            }
        })
        .collect();
    roots.sort_by(|a, b| a.height.cmp(&b.height).then_with(|| a.coords.cmp(&b.coords)));
    roots
}
