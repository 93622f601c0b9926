//! Dynkin indices, Sugawara central charges, conformal weights and the
//! conformal-embedding criterion.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rootdata::{CartanType, Family, LeveledWeight, Rational, SimpleLieAlgebra, Weight};

/// Exact rational `num / den` from wide intermediates.
fn reduce(num: i128, den: i128, what: &'static str) -> Result<Rational> {
    let g = num.gcd(&den);
    let (n, d) = (num / g, den / g);
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Ok(Rational::new(n, d)),
        _ => Err(Error::Overflow(what)),
    }
}

/// Casimir-type pairing `(λ, λ+2ρ)`.
pub fn casimir_eigenvalue(g: &SimpleLieAlgebra, lambda: &Weight) -> Rational {
    let shifted = lambda.add(&g.rho().scaled(2));
    Rational::new(g.form_scaled(lambda, &shifted), g.form_scale())
}

/// Dynkin index of the irreducible module `V_λ`:
/// `dim V_λ · (λ, λ+2ρ) / (2 dim 𝔤)`.
pub fn dynkin_index_irrep(g: &SimpleLieAlgebra, lambda: &Weight) -> Result<Rational> {
    let dim = g.weyl_dim(lambda)?;
    let shifted = lambda.add(&g.rho().scaled(2));
    let c = g.form_scaled(lambda, &shifted) as i128;
    let dim = i128::try_from(dim).map_err(|_| Error::Overflow("Dynkin index"))?;
    let num = dim.checked_mul(c).ok_or(Error::Overflow("Dynkin index"))?;
    reduce(num, 2 * g.dim() as i128 * g.form_scale() as i128, "Dynkin index")
}

/// Highest weight of the defining representation used to normalize indices
/// of embeddings into an algebra of the given type.
///
/// | family | weight | dimension | index |
/// |--------|--------|-----------|-------|
/// | A_n    | ω₁     | n+1       | 1/2   |
/// | B_n    | ω₁     | 2n+1      | 1     |
/// | C_n    | ω₁     | 2n        | 1/2   |
/// | D_n    | ω₁     | 2n        | 1     |
/// | E6     | ω₁     | 27        | 3     |
/// | E7     | ω₇     | 56        | 6     |
/// | E8     | ω₈     | 248       | 30    |
/// | F4     | ω₄     | 26        | 3     |
/// | G2     | ω₁     | 7         | 1     |
pub fn defining_weight(ty: CartanType) -> Weight {
    let n = ty.rank();
    let i = match (ty.family(), n) {
        (Family::E, 7) => 6,
        (Family::E, 8) => 7,
        (Family::F, _) => 3,
        _ => 0,
    };
    Weight::fundamental(n, i)
}

/// Highest weight of the vector representation of so(n), after the rootdata
/// canonicalization (so(3) = A1, so(6) = A3).
pub fn vector_weight(n: usize) -> Result<Weight> {
    let ty = CartanType::orthogonal(n)?;
    Ok(match (ty.family(), ty.rank()) {
        (Family::A, 1) => Weight(vec![2]),
        (Family::A, 3) => Weight(vec![0, 1, 0]),
        (_, r) => Weight::fundamental(r, 0),
    })
}

/// An embedding `source ↪ target` described by how the target's defining
/// representation restricts to the source.
#[derive(Debug, Clone)]
pub struct EmbeddingSpec {
    source: SimpleLieAlgebra,
    target: SimpleLieAlgebra,
    target_module: Weight,
    branching: Vec<(Weight, u64)>,
}

impl EmbeddingSpec {
    /// Restriction of the target's defining representation.
    pub fn new(
        source: SimpleLieAlgebra,
        target: SimpleLieAlgebra,
        branching: Vec<(Weight, u64)>,
    ) -> Result<Self> {
        let module = defining_weight(target.cartan_type());
        Self::with_target_module(source, target, module, branching)
    }

    /// Restriction of an arbitrary faithful target module `V_module`.
    pub fn with_target_module(
        source: SimpleLieAlgebra,
        target: SimpleLieAlgebra,
        target_module: Weight,
        branching: Vec<(Weight, u64)>,
    ) -> Result<Self> {
        let want = target.weyl_dim(&target_module)?;
        let mut have = 0u128;
        for (mu, m) in &branching {
            have += source.weyl_dim(mu)? * *m as u128;
        }
        if have != want {
            return Err(Error::InconsistentEmbedding(format!(
                "branching of {target}{target_module} into {source} has total dimension {have}, expected {want}"
            )));
        }
        Ok(EmbeddingSpec {
            source,
            target,
            target_module,
            branching,
        })
    }

    /// The adjoint representation `𝔤 ↪ so(𝔤)`.
    ///
    /// For `sl₂` the target so(3) coincides with sl₂ itself and the index
    /// depends on how so(3) is normalized, so it is refused.
    pub fn adjoint(g: &SimpleLieAlgebra) -> Result<Self> {
        let n = g.dim() as usize;
        if n < 8 {
            return Err(Error::ConventionDependent(format!(
                "adjoint embedding of {g} into so({n})"
            )));
        }
        let target = SimpleLieAlgebra::from_type(CartanType::orthogonal(n)?);
        let branching = vec![(g.highest_root().clone(), 1)];
        Self::with_target_module(g.clone(), target, vector_weight(n)?, branching)
    }

    /// The adjoint representation `𝔤 ↪ sl(𝔤)`.
    pub fn adjoint_into_special(g: &SimpleLieAlgebra) -> Result<Self> {
        let target = SimpleLieAlgebra::new(Family::A, g.dim() as usize - 1)?;
        Self::new(g.clone(), target, vec![(g.highest_root().clone(), 1)])
    }

    /// The natural embedding `so(n) ↪ sl(n)`.
    pub fn orthogonal_into_special(n: usize) -> Result<Self> {
        let source = SimpleLieAlgebra::from_type(CartanType::orthogonal(n)?);
        let target = SimpleLieAlgebra::new(Family::A, n - 1)?;
        Self::new(source, target, vec![(vector_weight(n)?, 1)])
    }

    pub fn source(&self) -> &SimpleLieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &SimpleLieAlgebra {
        &self.target
    }

    pub fn target_module(&self) -> &Weight {
        &self.target_module
    }

    pub fn branching(&self) -> &[(Weight, u64)] {
        &self.branching
    }
}

/// Dynkin index of an embedding: index of the restricted module over the
/// index of the module itself.
pub fn dynkin_index_embedding(e: &EmbeddingSpec) -> Result<Rational> {
    let mut restricted = Rational::from_integer(0);
    for (mu, m) in &e.branching {
        restricted += dynkin_index_irrep(&e.source, mu)? * Rational::from_integer(*m as i64);
    }
    Ok(restricted / dynkin_index_irrep(&e.target, &e.target_module)?)
}

/// Virasoro central charge of the Sugawara construction at level `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CentralCharge(pub Rational);

impl fmt::Display for CentralCharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `ℓ · dim 𝔤 / (ℓ + h∨)`.
pub fn central_charge(g: &SimpleLieAlgebra, level: Rational) -> CentralCharge {
    let dim = Rational::from_integer(g.dim() as i64);
    let hv = Rational::from_integer(g.dual_coxeter() as i64);
    CentralCharge(level * dim / (level + hv))
}

/// Outcome of the conformality test, with both sides of the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConformalCheck {
    pub conformal: bool,
    pub index: Rational,
    pub source_charge: Rational,
    pub target_charge: Rational,
}

/// Compares the central charge of the source at level `d_φ` with that of the
/// target at level one.
pub fn is_conformal(e: &EmbeddingSpec) -> Result<ConformalCheck> {
    let index = dynkin_index_embedding(e)?;
    let lhs = central_charge(&e.source, index).0;
    let rhs = central_charge(&e.target, Rational::from_integer(1)).0;
    Ok(ConformalCheck {
        conformal: lhs == rhs,
        index,
        source_charge: lhs,
        target_charge: rhs,
    })
}

/// `L₀` eigenvalue on the highest-weight vector: `(λ, λ+2ρ) / (2(ℓ + h∨))`.
pub fn conformal_weight(g: &SimpleLieAlgebra, lw: &LeveledWeight) -> Result<Rational> {
    // revalidate: the weight may come from another algebra
    let lw = LeveledWeight::new(g, lw.weight().clone(), lw.level())?;
    let k = lw.level() as i64 + g.dual_coxeter() as i64;
    Ok(casimir_eigenvalue(g, lw.weight()) / Rational::from_integer(2 * k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alg(s: &str) -> SimpleLieAlgebra {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn irrep_indices() {
        let a1 = alg("A1");
        assert_eq!(dynkin_index_irrep(&a1, &Weight(vec![1])).unwrap(), q(1, 2));
        assert_eq!(dynkin_index_irrep(&a1, &Weight(vec![2])).unwrap(), q(2, 1));
        assert_eq!(dynkin_index_irrep(&alg("E8"), &Weight::zero(8)).unwrap(), q(0, 1));
        for g in ["A3", "B4", "C3", "D5", "E6", "F4", "G2"] {
            let g = alg(g);
            assert_eq!(
                dynkin_index_irrep(&g, g.highest_root()).unwrap(),
                q(g.dual_coxeter() as i64, 1)
            );
        }
    }

    #[test]
    fn defining_representation_table() {
        let table: &[(&str, u128, Rational)] = &[
            ("A4", 5, q(1, 2)),
            ("B3", 7, q(1, 1)),
            ("C3", 6, q(1, 2)),
            ("D5", 10, q(1, 1)),
            ("E6", 27, q(3, 1)),
            ("E7", 56, q(6, 1)),
            ("E8", 248, q(30, 1)),
            ("F4", 26, q(3, 1)),
            ("G2", 7, q(1, 1)),
        ];
        for (name, dim, index) in table {
            let g = alg(name);
            let wt = defining_weight(g.cartan_type());
            assert_eq!(g.weyl_dim(&wt).unwrap(), *dim, "{name}");
            assert_eq!(dynkin_index_irrep(&g, &wt).unwrap(), *index, "{name}");
        }
    }

    #[test]
    fn embedding_indices() {
        let ad = EmbeddingSpec::adjoint(&alg("A2")).unwrap();
        assert_eq!(ad.target().to_string(), "D4");
        assert_eq!(dynkin_index_embedding(&ad).unwrap(), q(3, 1));
        let ad = EmbeddingSpec::adjoint(&alg("G2")).unwrap();
        assert_eq!(ad.target().to_string(), "D7");
        assert_eq!(dynkin_index_embedding(&ad).unwrap(), q(4, 1));
        for n in [7, 8, 14, 28] {
            let e = EmbeddingSpec::orthogonal_into_special(n).unwrap();
            assert_eq!(dynkin_index_embedding(&e).unwrap(), q(2, 1), "so({n})");
        }
        // composite index is multiplicative through so(𝔤)
        let g = alg("B2");
        let via_sl = dynkin_index_embedding(&EmbeddingSpec::adjoint_into_special(&g).unwrap()).unwrap();
        assert_eq!(via_sl, q(2 * g.dual_coxeter() as i64, 1));
    }

    #[test]
    fn inconsistent_branching_is_rejected() {
        let err = EmbeddingSpec::new(alg("A2"), alg("D4"), vec![(Weight(vec![1, 0]), 1)]);
        assert!(matches!(err, Err(Error::InconsistentEmbedding(_))));
        assert!(matches!(
            EmbeddingSpec::adjoint(&alg("A1")),
            Err(Error::ConventionDependent(_))
        ));
    }

    #[test]
    fn central_charges() {
        let one = Rational::from_integer(1);
        assert_eq!(central_charge(&alg("A1"), one).0, q(1, 1));
        assert_eq!(central_charge(&alg("D4"), one).0, q(4, 1));
        assert_eq!(central_charge(&alg("A2"), Rational::from_integer(3)).0, q(4, 1));
        assert_eq!(central_charge(&alg("E8"), one).0, q(8, 1));
    }

    #[test]
    fn conformality() {
        let c = is_conformal(&EmbeddingSpec::adjoint(&alg("A2")).unwrap()).unwrap();
        assert!(c.conformal);
        assert_eq!((c.source_charge, c.target_charge), (q(4, 1), q(4, 1)));
        // E8 at level 30 against so(248) at level 1: both sides equal 124
        let c = is_conformal(&EmbeddingSpec::adjoint(&alg("E8")).unwrap()).unwrap();
        assert!(c.conformal);
        assert_eq!(c.source_charge, q(124, 1));
        for g in ["A2", "G2"] {
            let c = is_conformal(&EmbeddingSpec::adjoint_into_special(&alg(g)).unwrap()).unwrap();
            assert!(!c.conformal, "{g}");
        }
    }

    #[test]
    fn conformal_weights() {
        let a1 = alg("A1");
        let vac = LeveledWeight::vacuum(&a1, 2);
        assert_eq!(conformal_weight(&a1, &vac).unwrap(), q(0, 1));
        let lw = LeveledWeight::new(&a1, Weight(vec![2]), 2).unwrap();
        assert_eq!(conformal_weight(&a1, &lw).unwrap(), q(1, 2));
        let d4 = alg("D4");
        let v = LeveledWeight::new(&d4, Weight(vec![1, 0, 0, 0]), 1).unwrap();
        assert_eq!(conformal_weight(&d4, &v).unwrap(), q(1, 2));
        // A1 weight (3) is not integrable at level 2
        let bad = LeveledWeight::new(&a1, Weight(vec![3]), 2);
        assert!(matches!(bad, Err(Error::AlcoveViolation { .. })));
    }

    proptest! {
        #[test]
        fn central_charge_increases_with_level(level in 1i64..40) {
            for name in ["A1", "B3", "G2", "E6"] {
                let g = alg(name);
                let c = central_charge(&g, Rational::from_integer(level)).0;
                let c_next = central_charge(&g, Rational::from_integer(level + 1)).0;
                prop_assert!(c > Rational::from_integer(0));
                prop_assert!(c < c_next);
                prop_assert!(c_next <= Rational::from_integer(g.dim() as i64));
            }
        }

        #[test]
        fn index_is_additive_over_direct_sums(a in 0i64..3, b in 0i64..3, c in 0i64..3, d in 0i64..3) {
            let g = alg("A2");
            let (x, y) = (Weight(vec![a, b]), Weight(vec![c, d]));
            let ix = dynkin_index_irrep(&g, &x).unwrap();
            let iy = dynkin_index_irrep(&g, &y).unwrap();
            let dim = g.weyl_dim(&x).unwrap() + g.weyl_dim(&y).unwrap();
            // Restriction of sl(dim) fundamental along V_x ⊕ V_y.
            let target = SimpleLieAlgebra::new(Family::A, dim as usize - 1).unwrap();
            let e = EmbeddingSpec::new(g.clone(), target, vec![(x, 1), (y, 1)]).unwrap();
            prop_assert_eq!(dynkin_index_embedding(&e).unwrap(), (ix + iy) * Rational::from_integer(2));
        }
    }
}
