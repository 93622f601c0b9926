//! Theta characteristics as quadratic refinements of a symplectic form on
//! `F₂^{2g}`: Arf invariants, parity counts and the torsor action of
//! characters.
//!
//! Vectors are bitmasks; bit `i` is the coordinate on the `i`-th basis
//! vector. In the standard space the basis is `a_1, b_1, …, a_g, b_g` with
//! `a_i` at bit `2i` and `b_i` at bit `2i+1`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest genus for which all refinements are enumerated.
pub const MAX_ENUMERATION_GENUS: usize = 6;

/// `F₂^{2g}` with a non-degenerate alternating pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticSpaceF2 {
    genus: usize,
    /// Row `i` of the pairing matrix as a bitmask.
    rows: Vec<u64>,
    basis: Vec<(u64, u64)>,
}

impl SymplecticSpaceF2 {
    /// The hyperbolic pairing `⟨a_i, b_j⟩ = δ_ij`.
    pub fn standard(genus: usize) -> Result<Self> {
        let mut rows = vec![0u64; 2 * genus];
        for i in 0..genus {
            rows[2 * i] = 1 << (2 * i + 1);
            rows[2 * i + 1] = 1 << (2 * i);
        }
        Self::from_rows(genus, rows)
    }

    /// A space with an arbitrary pairing matrix over F₂ (entries 0/1).
    pub fn new(genus: usize, matrix: &[Vec<u8>]) -> Result<Self> {
        let n = 2 * genus;
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: matrix.len(),
            });
        }
        let rows = matrix
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &v)| acc | (((v & 1) as u64) << j))
            })
            .collect();
        Self::from_rows(genus, rows)
    }

    fn from_rows(genus: usize, rows: Vec<u64>) -> Result<Self> {
        if genus == 0 || 2 * genus > 64 {
            return Err(Error::CapExceeded {
                what: "genus",
                value: genus as u128,
                cap: 32,
            });
        }
        let n = 2 * genus;
        for i in 0..n {
            if rows[i] >> i & 1 == 1 {
                return Err(Error::Degenerate("pairing is not alternating"));
            }
            for j in 0..n {
                if (rows[i] >> j & 1) != (rows[j] >> i & 1) {
                    return Err(Error::Degenerate("pairing is not symmetric"));
                }
            }
        }
        let mut space = SymplecticSpaceF2 {
            genus,
            rows,
            basis: Vec::new(),
        };
        space.basis = space.find_symplectic_basis()?;
        Ok(space)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dimension(&self) -> usize {
        2 * self.genus
    }

    /// Number of vectors, `2^{2g}`.
    pub fn cardinality(&self) -> u128 {
        1u128 << self.dimension()
    }

    /// `⟨x, y⟩`.
    pub fn pair(&self, x: u64, y: u64) -> u8 {
        let mut acc = 0u32;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc ^= (self.rows[i] & y).count_ones() & 1;
            bits &= bits - 1;
        }
        acc as u8
    }

    /// A basis `(a_i, b_i)` with `⟨a_i, b_j⟩ = δ_ij` and all other
    /// pairings zero.
    pub fn symplectic_basis(&self) -> &[(u64, u64)] {
        &self.basis
    }

    fn find_symplectic_basis(&self) -> Result<Vec<(u64, u64)>> {
        let mut rest: Vec<u64> = (0..self.dimension()).map(|i| 1u64 << i).collect();
        let mut out = Vec::with_capacity(self.genus);
        while let Some(a) = rest.pop() {
            if a == 0 {
                continue;
            }
            let Some(pos) = rest.iter().position(|&b| self.pair(a, b) == 1) else {
                return Err(Error::Degenerate("pairing is degenerate"));
            };
            let b = rest.remove(pos);
            for v in rest.iter_mut() {
                // project onto the orthogonal complement of span(a, b)
                let va = self.pair(*v, a);
                let vb = self.pair(*v, b);
                if vb == 1 {
                    *v ^= a;
                }
                if va == 1 {
                    *v ^= b;
                }
            }
            out.push((a, b));
        }
        if out.len() != self.genus {
            return Err(Error::Degenerate("pairing is degenerate"));
        }
        out.reverse();
        Ok(out)
    }

    fn all_vectors(&self) -> impl Iterator<Item = u64> {
        0..(1u64 << self.dimension())
    }
}

/// A function `q: F₂^{2g} → F₂` with `q(x+y) = q(x) + q(y) + ⟨x,y⟩`,
/// determined by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticFormF2 {
    space: Arc<SymplecticSpaceF2>,
    values: u64,
}

impl QuadraticFormF2 {
    /// The refinement with `q(e_i)` given by bit `i` of `values`.
    pub fn new(space: Arc<SymplecticSpaceF2>, values: u64) -> Self {
        let mask = if space.dimension() == 64 {
            u64::MAX
        } else {
            (1u64 << space.dimension()) - 1
        };
        QuadraticFormF2 {
            space,
            values: values & mask,
        }
    }

    pub fn space(&self) -> &SymplecticSpaceF2 {
        &self.space
    }

    /// Values on the basis as a bitmask.
    pub fn basis_values(&self) -> u64 {
        self.values
    }

    /// `q(Σ x_i e_i) = Σ x_i q(e_i) + Σ_{i<j} x_i x_j ⟨e_i, e_j⟩`.
    pub fn eval(&self, x: u64) -> u8 {
        let mut acc = (self.values & x).count_ones() & 1;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            // pairs (i, j) with j > i
            acc ^= (self.space.rows[i] & bits).count_ones() & 1;
        }
        acc as u8
    }

    /// Checks the polarization identity on all pairs. Only sensible for
    /// small genus.
    pub fn validate_exhaustive(&self) -> Result<()> {
        if self.space.genus > 4 {
            return Err(Error::CapExceeded {
                what: "genus for exhaustive validation",
                value: self.space.genus as u128,
                cap: 4,
            });
        }
        for x in self.space.all_vectors() {
            for y in self.space.all_vectors() {
                if self.eval(x ^ y) != self.eval(x) ^ self.eval(y) ^ self.space.pair(x, y) {
                    return Err(Error::CrossCheck(format!(
                        "polarization fails at ({x:#b}, {y:#b})"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for QuadraticFormF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.space.dimension() {
            write!(f, "{}", self.values >> i & 1)?;
        }
        Ok(())
    }
}

/// All `2^{2g}` quadratic refinements, ordered by their basis values.
pub fn enumerate_theta(space: &Arc<SymplecticSpaceF2>) -> Result<Vec<QuadraticFormF2>> {
    if space.genus > MAX_ENUMERATION_GENUS {
        return Err(Error::CapExceeded {
            what: "genus for enumeration",
            value: space.genus as u128,
            cap: MAX_ENUMERATION_GENUS as u128,
        });
    }
    Ok((0..1u64 << space.dimension())
        .map(|v| QuadraticFormF2::new(space.clone(), v))
        .collect())
}

/// Arf invariant `Σ q(a_i) q(b_i)` over the space's symplectic basis.
pub fn arf(q: &QuadraticFormF2) -> u8 {
    q.space
        .basis
        .iter()
        .fold(0, |acc, &(a, b)| acc ^ (q.eval(a) & q.eval(b)))
}

/// Arf invariant computed in a caller-supplied symplectic basis.
pub fn arf_with_basis(q: &QuadraticFormF2, basis: &[(u64, u64)]) -> Result<u8> {
    let s = &q.space;
    if basis.len() != s.genus {
        return Err(Error::DimensionMismatch {
            expected: s.genus,
            got: basis.len(),
        });
    }
    for (i, &(a, b)) in basis.iter().enumerate() {
        for (j, &(c, d)) in basis.iter().enumerate() {
            let want = (i == j) as u8;
            if s.pair(a, d) != want || s.pair(a, c) != 0 || s.pair(b, d) != 0 {
                return Err(Error::Degenerate("basis is not symplectic"));
            }
        }
    }
    Ok(basis
        .iter()
        .fold(0, |acc, &(a, b)| acc ^ (q.eval(a) & q.eval(b))))
}

/// `(χ·q)(x) = q(x) + ⟨χ, x⟩`.
pub fn act_character(chi: u64, q: &QuadraticFormF2) -> QuadraticFormF2 {
    let s = &q.space;
    let shift = (0..s.dimension()).fold(0u64, |acc, i| acc | ((s.pair(chi, 1 << i) as u64) << i));
    QuadraticFormF2::new(q.space.clone(), q.values ^ shift)
}

/// Numbers of even and odd theta characteristics, by enumeration.
pub fn parity_counts(genus: usize) -> Result<(u64, u64)> {
    let space = Arc::new(SymplecticSpaceF2::standard(genus)?);
    let forms = enumerate_theta(&space)?;
    let even = forms.iter().filter(|q| arf(q) == 0).count() as u64;
    Ok((even, forms.len() as u64 - even))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn std_space(g: usize) -> Arc<SymplecticSpaceF2> {
        Arc::new(SymplecticSpaceF2::standard(g).unwrap())
    }

    #[test]
    fn enumeration_sizes() {
        for (g, n) in [(1, 4), (2, 16), (3, 64)] {
            assert_eq!(enumerate_theta(&std_space(g)).unwrap().len(), n);
        }
        assert!(matches!(
            enumerate_theta(&std_space(7)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn parity_counts_match_closed_form() {
        for g in 1..=5u32 {
            let (even, odd) = parity_counts(g as usize).unwrap();
            assert_eq!(even, (1 << (g - 1)) * ((1 << g) + 1), "g={g}");
            assert_eq!(odd, (1 << (g - 1)) * ((1 << g) - 1), "g={g}");
        }
        assert_eq!(parity_counts(2).unwrap(), (10, 6));
        assert_eq!(parity_counts(3).unwrap(), (36, 28));
    }

    #[test]
    fn split_form_is_even() {
        let s = std_space(3);
        assert_eq!(arf(&QuadraticFormF2::new(s.clone(), 0)), 0);
        // q(a_1) = q(b_1) = 1 is the odd one in genus one
        assert_eq!(arf(&QuadraticFormF2::new(std_space(1), 0b11)), 1);
    }

    #[test]
    fn evaluation_matches_truth_table_from_polarization() {
        for g in 1..=3 {
            let s = std_space(g);
            for q in enumerate_theta(&s).unwrap() {
                q.validate_exhaustive().unwrap();
            }
        }
    }

    #[test]
    fn torsor_is_free_and_transitive() {
        for g in 1..=3 {
            let s = std_space(g);
            let forms = enumerate_theta(&s).unwrap();
            let q0 = &forms[0];
            let orbit: HashSet<u64> = (0..1u64 << (2 * g))
                .map(|chi| act_character(chi, q0).basis_values())
                .collect();
            assert_eq!(orbit.len(), forms.len());
            for q in &forms {
                assert_eq!(act_character(0, q), *q);
                for chi in 0..1u64 << (2 * g) {
                    let moved = act_character(chi, q);
                    assert_eq!(arf(&moved) ^ arf(q), q.eval(chi));
                    for x in 0..1u64 << (2 * g) {
                        assert_eq!(moved.eval(x), q.eval(x) ^ s.pair(chi, x));
                    }
                }
            }
        }
    }

    #[test]
    fn nonstandard_pairing() {
        // ⟨e0,e1⟩ = ⟨e0,e2⟩ = ⟨e2,e3⟩ = 1 is non-degenerate
        let m = vec![
            vec![0, 1, 1, 0],
            vec![1, 0, 0, 0],
            vec![1, 0, 0, 1],
            vec![0, 0, 1, 0],
        ];
        let s = Arc::new(SymplecticSpaceF2::new(2, &m).unwrap());
        let forms = enumerate_theta(&s).unwrap();
        assert_eq!(forms.iter().filter(|q| arf(q) == 0).count(), 10);
        let hyperbolic = vec![vec![0, 1], vec![1, 0]];
        assert!(SymplecticSpaceF2::new(1, &hyperbolic).is_ok());
        let zero = vec![vec![0, 0], vec![0, 0]];
        assert!(matches!(
            SymplecticSpaceF2::new(1, &zero),
            Err(Error::Degenerate(_))
        ));
        let diag = vec![vec![1, 1], vec![1, 0]];
        assert!(SymplecticSpaceF2::new(1, &diag).is_err());
    }

    proptest! {
        #[test]
        fn arf_is_basis_independent(
            g in 1usize..5,
            values in any::<u64>(),
            transvections in prop::collection::vec(any::<u64>(), 1..12),
        ) {
            let s = std_space(g);
            let q = QuadraticFormF2::new(s.clone(), values);
            let mask = (1u64 << (2 * g)) - 1;
            let mut basis = s.symplectic_basis().to_vec();
            for v in transvections {
                let v = v & mask;
                // T_v(x) = x + ⟨x,v⟩v preserves the pairing
                let t = |x: u64| if s.pair(x, v) == 1 { x ^ v } else { x };
                basis = basis.into_iter().map(|(a, b)| (t(a), t(b))).collect();
            }
            prop_assert_eq!(arf_with_basis(&q, &basis).unwrap(), arf(&q));
        }
    }
}
