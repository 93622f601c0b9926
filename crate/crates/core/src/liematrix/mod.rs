//! Exact matrix realizations: Chevalley structure constants, the adjoint
//! embedding `𝔤 ↪ gl(𝔤)`, the Killing form, the trace-orthogonal
//! projection `gl(𝔤) → 𝔤`, the complement of `𝔤` in `sl(𝔤)` and the
//! Casimir tensor.

mod chevalley;
pub mod linalg;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootdata::{Rational, SimpleLieAlgebra};

pub use linalg::{QMatrix, Q};

/// Largest rank for explicit construction.
pub const MAX_RANK: usize = 4;

fn big(r: &Rational) -> Q {
    Q::new((*r.numer()).into(), (*r.denom()).into())
}

/// `[x_i, x_j] = Σ_k c_ij^k x_k` in a fixed basis.
#[derive(Clone)]
pub struct StructureConstants {
    labels: Vec<String>,
    table: Vec<Vec<Vec<(usize, Rational)>>>,
}

impl fmt::Debug for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StructureConstants(dim {})", self.dim())
    }
}

impl StructureConstants {
    /// Structure constants from a sparse table; checks antisymmetry and
    /// the Jacobi identity.
    pub fn new(labels: Vec<String>, table: Vec<Vec<Vec<(usize, Rational)>>>) -> Result<Self> {
        let d = labels.len();
        if table.len() != d || table.iter().any(|r| r.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: table.len(),
            });
        }
        let sc = StructureConstants { labels, table };
        sc.check_antisymmetry()?;
        sc.check_jacobi()?;
        Ok(sc)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `[x_i, x_j]` as sparse coordinates.
    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i][j]
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Rational {
        self.table[i][j]
            .iter()
            .find(|e| e.0 == k)
            .map_or_else(Rational::zero, |e| e.1)
    }

    fn bracket_vec(&self, x: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, c) in &self.table[i][j] {
                out[*k] += xi * c;
            }
        }
        out
    }

    pub fn check_antisymmetry(&self) -> Result<()> {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for k in 0..self.dim() {
                    if self.coefficient(i, j, k) != -self.coefficient(j, i, k) {
                        return Err(Error::CrossCheck(format!(
                            "antisymmetry fails for ({i}, {j})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `[[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] = 0`.
    pub fn check_jacobi(&self) -> Result<()> {
        let d = self.dim();
        let dense = |i: usize, j: usize| {
            let mut v = vec![Rational::zero(); d];
            for (k, c) in &self.table[i][j] {
                v[*k] = *c;
            }
            v
        };
        for i in 0..d {
            for j in i + 1..d {
                let ij = dense(i, j);
                for k in j + 1..d {
                    let a = self.bracket_vec(&ij, k);
                    let b = self.bracket_vec(&dense(j, k), i);
                    let c = self.bracket_vec(&dense(k, i), j);
                    if (0..d).any(|m| !(a[m] + b[m] + c[m]).is_zero()) {
                        return Err(Error::CrossCheck(format!(
                            "Jacobi identity fails for ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `ad x_i` with `(ad x_i)_{kj} = c_ij^k`.
    pub fn ad(&self, i: usize) -> QMatrix {
        let d = self.dim();
        let mut m = QMatrix::zeros(d, d);
        for j in 0..d {
            for (k, c) in &self.table[i][j] {
                m[(*k, j)] = big(c);
            }
        }
        m
    }
}

/// Chevalley-basis structure constants of `g`, ordered as positive root
/// vectors `e_α`, coroots `h_i`, negative root vectors `f_α` (roots in the
/// rootdata order). For `sl₂` this is `e, h, f`.
pub fn structure_constants(g: &SimpleLieAlgebra) -> Result<StructureConstants> {
    if g.rank() > MAX_RANK {
        return Err(Error::CapExceeded {
            what: "rank for explicit matrices",
            value: g.rank() as u128,
            cap: MAX_RANK as u128,
        });
    }
    let basis = chevalley::chevalley_basis(g)?;
    let table = chevalley::structure_table(g, &basis)?;
    let coords = |w: &[i32]| w.iter().map(|c| c.abs().to_string()).collect::<Vec<_>>().join("");
    let mut labels: Vec<String> = Vec::with_capacity(basis.elements.len());
    for w in &basis.weights[..basis.num_positive] {
        labels.push(format!("e{}", coords(w)));
    }
    for i in 1..=g.rank() {
        labels.push(format!("h{i}"));
    }
    for w in &basis.weights[basis.num_positive + g.rank()..] {
        labels.push(format!("f{}", coords(w)));
    }
    StructureConstants::new(labels, table)
}

/// `K(x, y) = tr(ad x · ad y)`; errors when degenerate.
pub fn killing_form(sc: &StructureConstants) -> Result<QMatrix> {
    let d = sc.dim();
    let ads: Vec<QMatrix> = (0..d).map(|i| sc.ad(i)).collect();
    let mut k = QMatrix::zeros(d, d);
    for a in 0..d {
        for b in a..d {
            let v = trace_of_product(&ads[a], &ads[b]);
            k[(a, b)] = v.clone();
            k[(b, a)] = v;
        }
    }
    if k.rank() < d {
        return Err(Error::Degenerate("Killing form"));
    }
    Ok(k)
}

fn trace_of_product(a: &QMatrix, b: &QMatrix) -> Q {
    let n = a.rows();
    let mut t = Q::zero();
    for i in 0..n {
        for j in 0..n {
            let x = &a[(i, j)];
            if !x.is_zero() {
                let y = &b[(j, i)];
                if !y.is_zero() {
                    t += x * y;
                }
            }
        }
    }
    t
}

/// The map `gl(𝔤) → 𝔤` orthogonal for `A⊗B ↦ tr(AB)`, as a
/// `d × d²` matrix acting on row-major flattened `d × d` matrices.
#[derive(Debug, Clone)]
pub struct ProjectionOperator {
    dim: usize,
    matrix: QMatrix,
}

impl ProjectionOperator {
    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    /// Coordinates in `𝔤` of the projection of `a ∈ gl(𝔤)`.
    pub fn apply(&self, a: &QMatrix) -> Vec<Q> {
        let flat: Vec<Q> = (0..self.dim)
            .flat_map(|r| (0..self.dim).map(move |c| (r, c)))
            .map(|(r, c)| a[(r, c)].clone())
            .collect();
        self.matrix.mul_vec(&flat)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// `T_{b,(k,l)} = tr(ad x_b · E_kl) = (ad x_b)_{lk}`: the trace pairing of
/// the basis of `𝔤` with the elementary matrices.
fn trace_pairing(sc: &StructureConstants) -> QMatrix {
    let d = sc.dim();
    let mut t = QMatrix::zeros(d, d * d);
    for b in 0..d {
        let ad = sc.ad(b);
        for k in 0..d {
            for l in 0..d {
                t[(b, k * d + l)] = ad[(l, k)].clone();
            }
        }
    }
    t
}

/// `P = K⁻¹ T`, so that `P(ad x) = x`.
pub fn adjoint_projection(sc: &StructureConstants) -> Result<ProjectionOperator> {
    let k = killing_form(sc)?;
    let kinv = k.inverse().ok_or(Error::Degenerate("Killing form"))?;
    Ok(ProjectionOperator {
        dim: sc.dim(),
        matrix: kinv.mul(&trace_pairing(sc)),
    })
}

/// A basis of `𝔤⊥ ⊂ sl(𝔤)`: traceless matrices trace-orthogonal to every
/// `ad x`. Vectors are sparse over row-major flattened `d × d` matrices.
pub fn orthogonal_complement(sc: &StructureConstants) -> Vec<Vec<(usize, Q)>> {
    let d = sc.dim();
    let t = trace_pairing(sc);
    let mut constraints = QMatrix::zeros(d + 1, d * d);
    for i in 0..d {
        constraints[(0, i * d + i)] = linalg::q(1);
    }
    for b in 0..d {
        for c in 0..d * d {
            constraints[(b + 1, c)] = t[(b, c)].clone();
        }
    }
    constraints.nullspace()
}

/// `dim 𝔤⊥` in `sl(𝔤)`, counted from an explicit basis.
pub fn orthogonal_complement_dim(sc: &StructureConstants) -> usize {
    orthogonal_complement(sc).len()
}

/// `γ = Σ K^{ab} x_a ⊗ x_b` as the matrix of coefficients `K^{ab}`.
#[derive(Debug, Clone)]
pub struct CasimirTensor {
    pub coefficients: QMatrix,
}

pub fn casimir_tensor(sc: &StructureConstants) -> Result<CasimirTensor> {
    let k = killing_form(sc)?;
    let coefficients = k.inverse().ok_or(Error::Degenerate("Killing form"))?;
    Ok(CasimirTensor { coefficients })
}

impl CasimirTensor {
    /// Lowering with `K` then raising with `γ`: should be the identity.
    pub fn contraction(&self, killing: &QMatrix) -> QMatrix {
        self.coefficients.mul(killing)
    }

    /// `(ad x ⊗ 1 + 1 ⊗ ad x) γ` as a coefficient matrix.
    pub fn ad_action(&self, ad_x: &QMatrix) -> QMatrix {
        ad_x.mul(&self.coefficients)
            .add(&self.coefficients.mul(&ad_x.transpose()))
    }
}

#[cfg(test)]
mod tests;
