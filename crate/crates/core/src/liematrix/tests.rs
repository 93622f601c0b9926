use num_traits::{One, Zero};

use super::linalg::q;
use super::*;

fn alg(s: &str) -> SimpleLieAlgebra {
    s.parse().unwrap()
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

#[test]
fn sl2_relations() {
    let sc = structure_constants(&alg("A1")).unwrap();
    assert_eq!(sc.labels(), &["e1", "h1", "f1"]);
    let (e, h, f) = (0, 1, 2);
    assert_eq!(sc.bracket(h, e), &[(e, r(2))]);
    assert_eq!(sc.bracket(h, f), &[(f, r(-2))]);
    assert_eq!(sc.bracket(e, f), &[(h, r(1))]);
}

#[test]
fn every_type_up_to_rank_four() {
    let names = [
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4",
    ];
    for name in names {
        let g = alg(name);
        let sc = structure_constants(&g).unwrap();
        assert_eq!(sc.dim() as u64, g.dim(), "{name}");
        let n = g.num_positive_roots();
        let rank = g.rank();
        // Chevalley relations: [h_i, e_α] = ⟨α, α_i^∨⟩ e_α, [e_i, f_i] = h_i
        for (k, root) in g.positive_roots().iter().enumerate() {
            for i in 0..rank {
                let v: i64 = (0..rank)
                    .map(|j| root.coords[j] as i64 * g.cartan_matrix()[i][j])
                    .sum();
                assert_eq!(sc.coefficient(n + i, k, k), r(v), "{name}");
            }
        }
        for i in 0..rank {
            let e = g.positive_roots().iter().position(|x| x.height == 1 && x.coords[i] == 1).unwrap();
            assert_eq!(sc.bracket(e, n + rank + e), &[(n + i, r(1))], "{name}");
        }
        // [e_α, e_β] = ±(p+1) e_{α+β}: all structure constants are integers
        for a in 0..sc.dim() {
            for b in 0..sc.dim() {
                for (_, c) in sc.bracket(a, b) {
                    assert!(c.is_integer(), "{name}");
                }
            }
        }
    }
    assert!(matches!(
        structure_constants(&alg("A5")),
        Err(Error::CapExceeded { .. })
    ));
}

#[test]
fn killing_form_examples() {
    let sc = structure_constants(&alg("A1")).unwrap();
    let k = killing_form(&sc).unwrap();
    assert_eq!(k[(1, 1)], q(8));
    assert_eq!(k[(0, 2)], q(4));
    assert_eq!(k[(0, 0)], q(0));
    for name in ["A1", "A2", "B2", "G2"] {
        let sc = structure_constants(&alg(name)).unwrap();
        let k = killing_form(&sc).unwrap();
        assert_eq!(k, k.transpose());
        assert_eq!(k.rank(), sc.dim());
    }
}

#[test]
fn killing_form_is_proportional_to_normalized_form() {
    // K(h_i, h_j) = 2h∨ (α_i^∨, α_j^∨)
    for name in ["A2", "B3", "C3", "G2", "F4"] {
        let g = alg(name);
        let sc = structure_constants(&g).unwrap();
        let k = killing_form(&sc).unwrap();
        let n = g.num_positive_roots();
        let hv = 2 * g.dual_coxeter() as i64;
        for i in 0..g.rank() {
            for j in 0..g.rank() {
                let form = g.normalized_form(g.simple_coroot(i), g.simple_coroot(j)).unwrap();
                let want = Q::new((form.numer() * hv).into(), (*form.denom()).into());
                assert_eq!(k[(n + i, n + j)], want, "{name}");
            }
        }
    }
}

#[test]
fn degenerate_input_is_rejected() {
    // the two-dimensional non-abelian algebra [x, y] = y
    let table = vec![
        vec![vec![], vec![(1, r(1))]],
        vec![vec![(1, r(-1))], vec![]],
    ];
    let sc = StructureConstants::new(vec!["x".into(), "y".into()], table).unwrap();
    assert!(matches!(killing_form(&sc), Err(Error::Degenerate(_))));
    let bad = vec![vec![vec![], vec![(1, r(1))]], vec![vec![(1, r(1))], vec![]]];
    assert!(StructureConstants::new(vec!["x".into(), "y".into()], bad).is_err());
}

#[test]
fn projection_inverts_ad() {
    for name in ["A1", "A2", "B2", "G2"] {
        let sc = structure_constants(&alg(name)).unwrap();
        let p = adjoint_projection(&sc).unwrap();
        let d = sc.dim();
        for x in 0..d {
            let got = p.apply(&sc.ad(x));
            for (y, v) in got.iter().enumerate() {
                assert_eq!(*v, if x == y { Q::one() } else { Q::zero() }, "{name}");
            }
        }
        assert!(p.apply(&QMatrix::identity(d)).iter().all(|v| v.is_zero()));
        assert_eq!(p.rank(), d);
    }
}

#[test]
fn projection_is_idempotent_on_gl() {
    let sc = structure_constants(&alg("A2")).unwrap();
    let p = adjoint_projection(&sc).unwrap();
    let d = sc.dim();
    // a few arbitrary integer matrices
    for seed in 1..4i64 {
        let mut a = QMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                a[(i, j)] = q((i as i64 * 7 + j as i64 * 3 + seed * 11) % 5 - 2);
            }
        }
        let x = p.apply(&a);
        let mut ad_x = QMatrix::zeros(d, d);
        for (b, c) in x.iter().enumerate() {
            let ad = sc.ad(b);
            for i in 0..d {
                for j in 0..d {
                    ad_x[(i, j)] += &ad[(i, j)] * c;
                }
            }
        }
        assert_eq!(p.apply(&ad_x), x);
    }
}

#[test]
fn complement_dimensions() {
    for (name, want) in [("A1", 5), ("A2", 55), ("B2", 89)] {
        let sc = structure_constants(&alg(name)).unwrap();
        let basis = orthogonal_complement(&sc);
        assert_eq!(basis.len(), want, "{name}");
        let d = sc.dim();
        assert_eq!(basis.len(), d * d - 1 - d);
        // exact orthogonality to ad(𝔤) and tracelessness
        for v in &basis {
            let tr: Q = v.iter().filter(|(i, _)| i % (d + 1) == 0).map(|(_, x)| x.clone()).sum();
            assert!(tr.is_zero());
            for b in 0..d {
                let ad = sc.ad(b);
                let s: Q = v
                    .iter()
                    .map(|(i, x)| &ad[(i % d, i / d)] * x)
                    .sum();
                assert!(s.is_zero());
            }
        }
    }
}

#[test]
fn casimir_identities() {
    for name in ["A1", "A2", "B2", "G2"] {
        let sc = structure_constants(&alg(name)).unwrap();
        let k = killing_form(&sc).unwrap();
        let gamma = casimir_tensor(&sc).unwrap();
        assert_eq!(gamma.contraction(&k), QMatrix::identity(sc.dim()));
        assert_eq!(gamma.coefficients, gamma.coefficients.transpose());
        for x in 0..sc.dim() {
            assert!(gamma.ad_action(&sc.ad(x)).is_zero(), "{name}");
        }
    }
    // sl₂: K = [[0,0,4],[0,8,0],[4,0,0]] so γ = [[0,0,1/4],[0,1/8,0],[1/4,0,0]]
    let sc = structure_constants(&alg("A1")).unwrap();
    let gamma = casimir_tensor(&sc).unwrap().coefficients;
    let quarter = Q::new(1.into(), 4.into());
    assert_eq!(gamma[(0, 2)], quarter);
    assert_eq!(gamma[(2, 0)], quarter);
    assert_eq!(gamma[(1, 1)], Q::new(1.into(), 8.into()));
    assert!(gamma[(0, 0)].is_zero() && gamma[(1, 0)].is_zero());
}
