use super::*;
use proptest::prelude::*;

fn alg(s: &str) -> SimpleLieAlgebra {
    s.parse().unwrap()
}

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn all_small() -> Vec<SimpleLieAlgebra> {
    [
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D4", "D5",
        "D6", "E6", "E7", "E8", "F4", "G2",
    ]
    .iter()
    .map(|s| alg(s))
    .collect()
}

#[test]
fn cartan_matrices_bourbaki() {
    assert_eq!(alg("A1").cartan_matrix(), &[vec![2]]);
    assert_eq!(alg("A2").cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
    assert_eq!(alg("B2").cartan_matrix(), &[vec![2, -1], vec![-2, 2]]);
    assert_eq!(alg("C2").cartan_matrix(), &[vec![2, -2], vec![-1, 2]]);
    assert_eq!(alg("G2").cartan_matrix(), &[vec![2, -3], vec![-1, 2]]);
}

/// Leading principal minors of the symmetrized matrix `(α_i, α_j)`.
fn symmetrized_positive_definite(g: &SimpleLieAlgebra) -> bool {
    let n = g.rank();
    let a = g.cartan_matrix();
    let d = g.root_length_ratios();
    let b: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| d[i] * a[i][j]).collect())
        .collect();
    for i in 0..n {
        for j in 0..n {
            if b[i][j] != b[j][i] {
                return false;
            }
        }
    }
    // Gaussian elimination without pivoting: all pivots positive.
    let mut m = b;
    for k in 0..n {
        if m[k][k] <= Rational::from_integer(0) {
            return false;
        }
        for i in k + 1..n {
            let f = m[i][k] / m[k][k];
            for j in k..n {
                let t = m[k][j];
                m[i][j] -= f * t;
            }
        }
    }
    true
}

#[test]
fn cartan_matrices_are_finite_type() {
    for g in all_small() {
        let a = g.cartan_matrix();
        for i in 0..g.rank() {
            assert_eq!(a[i][i], 2);
            for j in 0..g.rank() {
                if i != j {
                    assert!(a[i][j] <= 0);
                    assert_eq!(a[i][j] == 0, a[j][i] == 0);
                }
            }
        }
        assert!(symmetrized_positive_definite(&g), "{g}");
    }
}

#[test]
fn normalized_form_examples() {
    let a1 = alg("A1");
    assert_eq!(
        a1.normalized_form(&w(&[1]), &w(&[1])).unwrap(),
        Rational::new(1, 2)
    );
    for g in all_small() {
        let theta = g.highest_root().clone();
        assert_eq!(
            g.normalized_form(&theta, &theta).unwrap(),
            Rational::from_integer(2),
            "{g}"
        );
        let zero = Weight::zero(g.rank());
        assert_eq!(
            g.normalized_form(&zero, &g.rho()).unwrap(),
            Rational::from_integer(0)
        );
    }
    assert!(matches!(
        a1.normalized_form(&w(&[1, 0]), &w(&[1])),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn highest_roots() {
    assert_eq!(alg("A2").highest_root(), &w(&[1, 1]));
    assert_eq!(alg("A1").highest_root(), &w(&[2]));
    assert_eq!(alg("D4").highest_root(), &w(&[0, 1, 0, 0]));
    assert_eq!(alg("B3").highest_root(), &w(&[0, 1, 0]));
    assert_eq!(alg("C3").highest_root(), &w(&[2, 0, 0]));
    assert_eq!(alg("G2").highest_root(), &w(&[0, 1]));
    assert_eq!(alg("F4").highest_root(), &w(&[1, 0, 0, 0]));
    assert_eq!(alg("E8").highest_root(), &w(&[0, 0, 0, 0, 0, 0, 0, 1]));
}

#[test]
fn dual_coxeter_and_dimension_tables() {
    let table: &[(&str, u32, u64)] = &[
        ("A1", 2, 3),
        ("A2", 3, 8),
        ("A5", 6, 35),
        ("B2", 3, 10),
        ("B3", 5, 21),
        ("B5", 9, 55),
        ("C3", 4, 21),
        ("C5", 6, 55),
        ("D4", 6, 28),
        ("D6", 10, 66),
        ("E6", 12, 78),
        ("E7", 18, 133),
        ("E8", 30, 248),
        ("F4", 9, 52),
        ("G2", 4, 14),
    ];
    for &(name, hv, dim) in table {
        let g = alg(name);
        assert_eq!(g.dual_coxeter(), hv, "{name}");
        assert_eq!(g.dim(), dim, "{name}");
    }
}

#[test]
fn dual_coxeter_matches_comark_sum() {
    for g in all_small() {
        let from_comarks = 1 + g.comarks().iter().sum::<i64>();
        assert_eq!(from_comarks, g.dual_coxeter() as i64, "{g}");
        // and (λ,θ) via comarks agrees with the form
        let rho = g.rho();
        let via_form = g.normalized_form(&rho, g.highest_root()).unwrap();
        assert_eq!(via_form, Rational::from_integer(g.theta_pairing(&rho)));
    }
}

#[test]
fn weyl_dimension_examples() {
    assert_eq!(alg("A2").weyl_dim(&w(&[1, 1])).unwrap(), 8);
    assert_eq!(alg("A1").weyl_dim(&w(&[3])).unwrap(), 4);
    assert_eq!(alg("E8").weyl_dim(&Weight::zero(8)).unwrap(), 1);
    assert_eq!(alg("E8").weyl_dim(&w(&[1, 0, 0, 0, 0, 0, 0, 0])).unwrap(), 3875);
    assert_eq!(alg("E7").weyl_dim(&w(&[0, 0, 0, 0, 0, 0, 1])).unwrap(), 56);
    assert_eq!(alg("E6").weyl_dim(&w(&[1, 0, 0, 0, 0, 0])).unwrap(), 27);
    assert_eq!(alg("F4").weyl_dim(&w(&[0, 0, 0, 1])).unwrap(), 26);
    assert_eq!(alg("G2").weyl_dim(&w(&[1, 0])).unwrap(), 7);
    assert_eq!(alg("B3").weyl_dim(&w(&[0, 0, 1])).unwrap(), 8);
    assert!(matches!(
        alg("A2").weyl_dim(&w(&[-1, 0])),
        Err(Error::NotDominant(_))
    ));
}

#[test]
fn adjoint_dimension_is_algebra_dimension() {
    for g in all_small() {
        assert_eq!(g.weyl_dim(g.highest_root()).unwrap(), g.dim() as u128, "{g}");
    }
}

#[test]
fn alcove_examples() {
    let a1 = alg("A1");
    let l1: Vec<_> = a1.alcove(1).into_iter().map(|x| x.into_weight()).collect();
    assert_eq!(l1, vec![w(&[0]), w(&[1])]);
    let l2: Vec<_> = a1.alcove(2).into_iter().map(|x| x.into_weight()).collect();
    assert_eq!(l2, vec![w(&[0]), w(&[1]), w(&[2])]);
    let b3: Vec<_> = alg("B3").alcove(1).into_iter().map(|x| x.into_weight()).collect();
    assert_eq!(b3, vec![w(&[0, 0, 0]), w(&[0, 0, 1]), w(&[1, 0, 0])]);
    for g in all_small() {
        for l in 1..4 {
            assert_eq!(g.alcove(l).len() as u128, g.alcove_size(l));
        }
    }
}

#[test]
fn alcove_brute_force() {
    // Independent scan of a box using the form directly.
    for g in [alg("B3"), alg("G2"), alg("C3"), alg("A3")] {
        for level in 1..=3u32 {
            let mut expected = Vec::new();
            let n = g.rank();
            let total = 4usize.pow(n as u32);
            for code in 0..total {
                let labels: Vec<i64> = (0..n).map(|i| ((code / 4usize.pow(i as u32)) % 4) as i64).collect();
                let lw = Weight(labels);
                let pair = g.normalized_form(&lw, g.highest_root()).unwrap();
                if pair <= Rational::from_integer(level as i64) {
                    expected.push(lw);
                }
            }
            expected.sort();
            let got: Vec<_> = g.alcove(level).into_iter().map(|x| x.into_weight()).collect();
            assert_eq!(got, expected, "{g} level {level}");
        }
    }
}

#[test]
fn root_lengths_are_two_or_two_over_lacing() {
    for g in all_small() {
        let lacing = match g.family() {
            Family::B | Family::C | Family::F => 2,
            Family::G => 3,
            _ => 1,
        };
        let s = g.form_scale();
        for r in g.positive_roots() {
            let norm = Rational::new(r.norm_scaled, s);
            assert!(
                norm == Rational::from_integer(2) || norm == Rational::new(2, lacing),
                "{g}: {norm}"
            );
        }
    }
}

#[test]
fn freudenthal_dimensions_agree_with_weyl() {
    let cases: &[(&str, &[i64])] = &[
        ("A2", &[2, 1]),
        ("B3", &[1, 0, 1]),
        ("C3", &[0, 1, 1]),
        ("D4", &[1, 1, 0, 0]),
        ("G2", &[1, 1]),
        ("F4", &[0, 0, 0, 1]),
        ("E6", &[0, 1, 0, 0, 0, 0]),
    ];
    for &(name, lab) in cases {
        let g = alg(name);
        let lam = w(lab);
        let total: u64 = g.character(&lam).unwrap().values().sum();
        assert_eq!(total as u128, g.weyl_dim(&lam).unwrap(), "{name} {lam}");
    }
    // adjoint of A2: six roots and a doubly degenerate zero weight
    let ch = alg("A2").character(&w(&[1, 1])).unwrap();
    assert_eq!(ch.len(), 7);
    assert_eq!(ch[&w(&[0, 0])], 2);
}

#[test]
fn aliases_canonicalize() {
    assert_eq!("B1".parse::<CartanType>().unwrap().to_string(), "A1");
    assert_eq!("C1".parse::<CartanType>().unwrap().to_string(), "A1");
    assert_eq!("D3".parse::<CartanType>().unwrap().to_string(), "A3");
    assert!("D2".parse::<CartanType>().is_err());
    assert_eq!("so8".parse::<CartanType>().unwrap().to_string(), "D4");
    assert_eq!("so7".parse::<CartanType>().unwrap().to_string(), "B3");
    assert_eq!("sl3".parse::<CartanType>().unwrap().to_string(), "A2");
    assert_eq!("sp4".parse::<CartanType>().unwrap().to_string(), "C2");
    assert_eq!("e8".parse::<CartanType>().unwrap().to_string(), "E8");
    assert!("E9".parse::<CartanType>().is_err());
    assert!("X2".parse::<CartanType>().is_err());
    assert!("so4".parse::<CartanType>().is_err());
}

#[test]
fn dual_weights() {
    assert_eq!(alg("A2").dual(&w(&[1, 0])), w(&[0, 1]));
    assert_eq!(alg("A1").dual(&w(&[1])), w(&[1]));
    assert_eq!(alg("D5").dual(&w(&[0, 0, 0, 1, 0])), w(&[0, 0, 0, 0, 1]));
    assert_eq!(alg("D4").dual(&w(&[0, 0, 1, 0])), w(&[0, 0, 1, 0]));
    assert_eq!(alg("E6").dual(&w(&[1, 0, 0, 0, 0, 0])), w(&[0, 0, 0, 0, 0, 1]));
}

#[test]
fn weyl_group_order_matches_regular_orbit() {
    for name in ["A1", "A3", "B3", "C3", "D4", "G2", "F4"] {
        let g = alg(name);
        let orbit = g.signed_regular_orbit(&g.rho());
        assert_eq!(orbit.len() as u128, g.weyl_group_order(), "{name}");
        let sum: i32 = orbit.iter().map(|(_, s)| s).sum();
        assert_eq!(sum, 0);
    }
}

proptest! {
    #[test]
    fn form_is_symmetric(a in proptest::collection::vec(-5i64..6, 4), b in proptest::collection::vec(-5i64..6, 4)) {
        for name in ["B4", "C4", "D4", "F4", "A4"] {
            let g = alg(name);
            let (x, y) = (Weight(a.clone()), Weight(b.clone()));
            prop_assert_eq!(g.normalized_form(&x, &y).unwrap(), g.normalized_form(&y, &x).unwrap());
        }
    }

    #[test]
    fn alcoves_are_nested(level in 1u32..5) {
        for g in all_small().into_iter().filter(|g| g.rank() <= 5) {
            let small = g.alcove(level);
            let big = g.alcove(level + 1);
            prop_assert!(small.len() <= big.len());
            for lw in &small {
                prop_assert!(big.iter().any(|b| b.weight() == lw.weight()));
            }
        }
    }

    #[test]
    fn reflections_preserve_the_form(a in proptest::collection::vec(-4i64..5, 3), i in 0usize..3) {
        for name in ["B3", "C3", "A3"] {
            let g = alg(name);
            let x = Weight(a.clone());
            let mut y = x.clone();
            g.reflect(&mut y, i);
            prop_assert_eq!(g.form_scaled(&x, &x), g.form_scaled(&y, &y));
            g.reflect(&mut y, i);
            prop_assert_eq!(y, x);
        }
    }
}
