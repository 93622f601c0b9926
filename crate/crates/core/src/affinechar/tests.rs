use std::collections::BTreeMap;

use super::*;
use crate::embeddings::EmbeddingSpec;
use crate::rootdata::Rational;

fn alg(s: &str) -> SimpleLieAlgebra {
    s.parse().unwrap()
}

fn lw(g: &SimpleLieAlgebra, v: &[i64], level: u32) -> LeveledWeight {
    LeveledWeight::new(g, Weight(v.to_vec()), level).unwrap()
}

/// Coefficients of `Π_{m≥1} (1−q^m)^{−colors}` through `q^n`.
fn colored_partitions(colors: usize, n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for _ in 0..colors {
        for m in 1..=n {
            for d in m..=n {
                p[d] += p[d - m];
            }
        }
    }
    p
}

/// Level-one vacuum modules of simply-laced algebras are lattice modules:
/// the weight `v` of the root lattice sits at degree `|v|²/2 + j` with
/// multiplicity `p_rank(j)`. Root-lattice vectors are enumerated in
/// orthonormal coordinates and converted to Dynkin labels by `to_labels`.
fn lattice_oracle(
    rank: usize,
    depth: usize,
    vectors: &[Vec<i64>],
    to_labels: impl Fn(&[i64]) -> Weight,
    half_norm: impl Fn(&[i64]) -> i64,
) -> Vec<BTreeMap<Weight, u64>> {
    let p = colored_partitions(rank, depth);
    let mut layers = vec![BTreeMap::new(); depth + 1];
    for v in vectors {
        let h = half_norm(v);
        for d in h.max(0) as usize..=depth {
            if h as usize <= d {
                layers[d].insert(to_labels(v), p[d - h as usize]);
            }
        }
    }
    layers
}

fn int_box(dim: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-r..=r).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn sl2_level_one_vacuum_is_a_lattice_module() {
    let g = alg("A1");
    let depth = 6;
    let c = graded_character(&g, &LeveledWeight::vacuum(&g, 1), depth).unwrap();
    // weight nα has labels (2n) and half-norm n²
    let vectors: Vec<Vec<i64>> = (-3..=3).map(|n| vec![n]).collect();
    let want = lattice_oracle(1, depth, &vectors, |v| Weight(vec![2 * v[0]]), |v| v[0] * v[0]);
    assert_eq!(c.layers(), &want[..]);
    assert_eq!(c.dimensions(), vec![1, 3, 4, 7, 13, 19, 29]);
}

#[test]
fn d4_level_one_vacuum_is_a_lattice_module() {
    let g = alg("D4");
    let depth = 3;
    let c = graded_character(&g, &LeveledWeight::vacuum(&g, 1), depth).unwrap();
    let vectors: Vec<Vec<i64>> = int_box(4, 3)
        .into_iter()
        .filter(|v| v.iter().sum::<i64>() % 2 == 0)
        .collect();
    let to_labels = |v: &[i64]| Weight(vec![v[0] - v[1], v[1] - v[2], v[2] - v[3], v[2] + v[3]]);
    let half = |v: &[i64]| v.iter().map(|x| x * x).sum::<i64>() / 2;
    let want = lattice_oracle(4, depth, &vectors, to_labels, half);
    assert_eq!(c.layers(), &want[..]);
}

#[test]
fn a2_level_one_vacuum_is_a_lattice_module() {
    let g = alg("A2");
    let depth = 4;
    let c = graded_character(&g, &LeveledWeight::vacuum(&g, 1), depth).unwrap();
    // root lattice a α1 + b α2: labels (2a−b, 2b−a), half-norm a² − ab + b²
    let vectors = int_box(2, 4);
    let want = lattice_oracle(
        2,
        depth,
        &vectors,
        |v| Weight(vec![2 * v[0] - v[1], 2 * v[1] - v[0]]),
        |v| v[0] * v[0] - v[0] * v[1] + v[1] * v[1],
    );
    assert_eq!(c.layers(), &want[..]);
}

#[test]
fn top_layer_is_the_finite_module() {
    for (name, level) in [("A2", 2), ("B3", 1), ("C2", 2), ("G2", 1), ("D4", 1)] {
        let g = alg(name);
        for top in g.alcove(level) {
            let c = graded_character(&g, &top, 1).unwrap();
            assert_eq!(c.layer(0), &g.character(top.weight()).unwrap(), "{name} {top}");
            for layer in c.layers() {
                for (w, m) in layer {
                    let (dom, _) = g.to_dominant(w);
                    assert_eq!(layer.get(&dom), Some(m));
                }
            }
        }
    }
}

#[test]
fn sl2_level_one_first_layer_is_adjoint() {
    let g = alg("A1");
    let c = graded_character(&g, &LeveledWeight::vacuum(&g, 1), 1).unwrap();
    assert_eq!(c.dimensions(), vec![1, 3]);
    assert_eq!(c.level(), 1);
}

#[test]
fn weyl_kac_agrees_with_freudenthal() {
    let cases: &[(&str, u32, usize)] = &[
        ("A1", 1, 6),
        ("A1", 2, 6),
        ("A1", 3, 4),
        ("A2", 1, 4),
        ("A2", 2, 3),
        ("B2", 1, 3),
        ("G2", 1, 3),
        ("B3", 1, 4),
        ("D4", 1, 4),
    ];
    let config = Config::default();
    for &(name, level, depth) in cases {
        let g = alg(name);
        for top in g.alcove(level) {
            let a = graded_character_with(&g, &top, depth, Algorithm::WeylKac, &config).unwrap();
            let b = graded_character_with(&g, &top, depth, Algorithm::Freudenthal, &config).unwrap();
            assert_eq!(a, b, "{name} level {level} {top}");
        }
    }
}

#[test]
fn depth_cap() {
    let g = alg("A1");
    let err = graded_character(&g, &LeveledWeight::vacuum(&g, 1), 7);
    assert!(matches!(err, Err(Error::CapExceeded { .. })));
}

#[test]
fn vector_restricts_to_adjoint() {
    let a2 = alg("A2");
    let e = EmbeddingSpec::adjoint(&a2).unwrap();
    let so8 = e.target().clone();
    let vector = lw(&so8, &[1, 0, 0, 0], 1);
    let c = graded_character(&so8, &vector, 0).unwrap();
    let r = restrict_character(&c, &e).unwrap();
    assert_eq!(r.layer(0), &a2.character(&Weight(vec![1, 1])).unwrap());
    assert_eq!(r.dimensions(), vec![8]);
    assert_eq!(r.level(), 3);
    let vac = graded_character(&so8, &LeveledWeight::vacuum(&so8, 1), 0).unwrap();
    let r = restrict_character(&vac, &e).unwrap();
    assert_eq!(r.layer(0), &BTreeMap::from([(Weight::zero(2), 1)]));
}

#[test]
fn restriction_of_finite_modules_preserves_dimension() {
    for name in ["A2", "B2", "G2", "A3"] {
        let g = alg(name);
        let e = EmbeddingSpec::adjoint(&g).unwrap();
        let so = e.target().clone();
        for i in 0..so.rank().min(3) {
            let top = Weight::fundamental(so.rank(), i);
            let image: u128 = so
                .character(&top)
                .unwrap()
                .iter()
                .map(|(w, m)| {
                    let r = restrict_weight(&e, w).unwrap();
                    assert_eq!(r.rank(), g.rank());
                    *m as u128
                })
                .sum();
            assert_eq!(image, so.weyl_dim(&top).unwrap());
        }
        // second exterior power of the vector is so(𝔤) ⊃ 𝔤: restricted
        // character contains the adjoint character
        let wedge2 = Weight::fundamental(so.rank(), 1);
        let mut restricted: BTreeMap<Weight, i64> = BTreeMap::new();
        for (w, m) in so.character(&wedge2).unwrap() {
            *restricted.entry(restrict_weight(&e, &w).unwrap()).or_insert(0) += m as i64;
        }
        for (w, m) in g.character(g.highest_root()).unwrap() {
            assert!(restricted[&w] >= m as i64, "{name}");
        }
    }
}

#[test]
fn restriction_rejects_other_embeddings() {
    let e = EmbeddingSpec::orthogonal_into_special(8).unwrap();
    let g = alg("A7");
    let c = graded_character(&g, &LeveledWeight::vacuum(&g, 1), 0).unwrap();
    assert!(matches!(
        restrict_character(&c, &e),
        Err(Error::InconsistentEmbedding(_))
    ));
    let e = EmbeddingSpec::adjoint(&alg("A2")).unwrap();
    let d5 = alg("D5");
    let c = graded_character(&d5, &LeveledWeight::vacuum(&d5, 1), 0).unwrap();
    assert!(restrict_character(&c, &e).is_err());
}

#[test]
fn a2_vacuum_branching() {
    let g = alg("A2");
    let so8 = alg("D4");
    let r = branch_decompose(&g, &LeveledWeight::vacuum(&so8, 1), 2).unwrap();
    assert!(r.is_exact(), "{r:?}");
    let got: Vec<(Weight, Rational, u64)> = r
        .terms
        .iter()
        .map(|t| (t.weight.weight().clone(), t.offset, t.multiplicity))
        .collect();
    let one = Rational::from_integer(1);
    assert_eq!(
        got,
        vec![
            (Weight(vec![0, 0]), Rational::from_integer(0), 1),
            (Weight(vec![0, 3]), one, 1),
            (Weight(vec![3, 0]), one, 1),
        ]
    );
    assert_eq!(r.multiplicity(&Weight(vec![0, 0])), 1);
}

#[test]
fn branching_is_finite_and_conserves_dimension() {
    let g = alg("A2");
    let so8 = alg("D4");
    for class in so8.alcove(1) {
        let mut seen = None;
        for depth in 1..=3 {
            let r = branch_decompose(&g, &class, depth).unwrap();
            assert!(r.is_exact(), "{class} depth {depth}");
            let weights: Vec<_> = r.terms.iter().map(|t| t.weight.clone()).collect();
            if let Some(prev) = &seen {
                assert_eq!(&weights, prev, "{class}");
            }
            seen = Some(weights);
            let target = graded_character(&so8, &class, depth).unwrap().dimensions();
            let mut sum = vec![0u128; depth + 1];
            for t in &r.terms {
                let start = t.offset.to_integer() as usize;
                let dims = graded_character(&g, &t.weight, depth - start).unwrap().dimensions();
                for (j, d) in dims.iter().enumerate() {
                    sum[start + j] += d * t.multiplicity as u128;
                }
            }
            assert_eq!(sum, target, "{class} depth {depth}");
        }
    }
}

#[test]
fn branching_caps() {
    let e6 = alg("E6");
    let d39 = SimpleLieAlgebra::new(crate::Family::D, 39).unwrap();
    assert!(matches!(
        branch_decompose(&e6, &LeveledWeight::vacuum(&d39, 1), 1),
        Err(Error::CapExceeded { .. })
    ));
}
