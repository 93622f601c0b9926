//! End-to-end checks of the toolkit, one per numbered criterion. Shared by
//! the `acceptance` test target and `blockcount selftest`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};

use crate::affinechar::{
    branch_decompose, graded_character_with, Algorithm, Config as CharConfig,
};
use crate::center::{act, center_group};
use crate::embeddings::{dynkin_index_embedding, is_conformal, EmbeddingSpec};
use crate::error::Result;
use crate::fusion::{
    dual_weight, fuse, fusion_from_s_matrix, verlinde_dim, verlinde_dim_exact, verlinde_sum,
    VerlindeProblem, INTEGRALITY_TOLERANCE,
};
use crate::liematrix::{
    adjoint_projection, casimir_tensor, killing_form, structure_constants, QMatrix,
};
use crate::rootdata::{Family, LeveledWeight, Rational, SimpleLieAlgebra, Weight};
use crate::thetachar::{act_character, arf, enumerate_theta, parity_counts, SymplecticSpaceF2};

/// Criterion numbers with a one-line title.
pub const CRITERIA: [(u8, &str); 10] = [
    (1, "so level-1 Verlinde counts"),
    (2, "adjoint embeddings are conformal"),
    (3, "adjoint into sl is not conformal"),
    (4, "Kac-Walton vs S-matrix, numeric vs exact Verlinde"),
    (5, "factorization and propagation of vacua"),
    (6, "A2 branching into so8 level 1"),
    (7, "Weyl-Kac vs affine Freudenthal"),
    (8, "theta characteristics vs Verlinde"),
    (9, "adjoint projection and Casimir contraction"),
    (10, "center action"),
];

#[derive(Debug, Clone)]
pub struct Report {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} criterion {:>2}: {} ({}; {:.3}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Outcome of one check: `Ok(detail)` on success, `Err(detail)` otherwise.
type Outcome = std::result::Result<String, String>;

fn alg(family: Family, rank: usize) -> std::result::Result<SimpleLieAlgebra, String> {
    SimpleLieAlgebra::new(family, rank).map_err(|e| e.to_string())
}

fn ok<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Runs criterion `id`; `None` for an unknown number.
pub fn run(id: u8) -> Option<Report> {
    let (_, title) = CRITERIA.iter().find(|c| c.0 == id)?;
    let check: fn() -> Outcome = match id {
        1 => so_level_one_counts,
        2 => adjoint_conformal,
        3 => adjoint_special_not_conformal,
        4 => oracle_equivalence,
        5 => factorization_propagation,
        6 => a2_branching,
        7 => character_algorithms,
        8 => theta_vs_verlinde,
        9 => projection_and_casimir,
        10 => center_action,
        _ => unreachable!(),
    };
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(Report {
        id,
        title,
        passed,
        detail,
        elapsed,
    })
}

pub fn run_all() -> Vec<Report> {
    CRITERIA.iter().filter_map(|c| run(c.0)).collect()
}

fn so_level_one_counts() -> Outcome {
    let d4 = alg(Family::D, 4)?;
    let b3 = alg(Family::B, 3)?;
    let limit = Duration::from_secs(1);
    let mut slowest = Duration::ZERO;
    for genus in 1..=4u32 {
        let cases = [
            (&d4, 1u128 << (2 * genus)),
            (&b3, (1u128 << (genus - 1)) * ((1u128 << genus) + 1)),
        ];
        for (g, want) in cases {
            let start = Instant::now();
            let p = ok(VerlindeProblem::new(g.clone(), 1, genus, vec![]))?;
            let got = ok(verlinde_dim(&p))?;
            let t = start.elapsed();
            slowest = slowest.max(t);
            if got != want {
                return Err(format!("{g} genus {genus}: got {got}, expected {want}"));
            }
            if t > limit {
                return Err(format!("{g} genus {genus} took {:.3}s", t.as_secs_f64()));
            }
        }
    }
    Ok(format!("8 queries, slowest {:.3}s", slowest.as_secs_f64()))
}

fn adjoint_sweep() -> std::result::Result<Vec<SimpleLieAlgebra>, String> {
    let mut out = Vec::new();
    for r in 2..=5 {
        out.push(alg(Family::A, r)?);
    }
    for r in 2..=4 {
        out.push(alg(Family::B, r)?);
    }
    out.push(alg(Family::C, 3)?);
    out.push(alg(Family::D, 4)?);
    out.push(alg(Family::D, 5)?);
    out.push(alg(Family::G, 2)?);
    out.push(alg(Family::F, 4)?);
    for r in 6..=8 {
        out.push(alg(Family::E, r)?);
    }
    Ok(out)
}

fn adjoint_conformal() -> Outcome {
    let start = Instant::now();
    let sweep = adjoint_sweep()?;
    for g in &sweep {
        let e = ok(EmbeddingSpec::adjoint(g))?;
        let check = ok(is_conformal(&e))?;
        if !check.conformal || check.source_charge != check.target_charge {
            return Err(format!(
                "{g}: charges {} vs {}",
                check.source_charge, check.target_charge
            ));
        }
        let index = ok(dynkin_index_embedding(&e))?;
        let hv = Rational::from_integer(g.dual_coxeter() as i64);
        if index != hv || check.index != hv {
            return Err(format!("{g}: index {index}, dual Coxeter {hv}"));
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(1) {
        return Err(format!("sweep took {:.3}s", t.as_secs_f64()));
    }
    Ok(format!("{} algebras", sweep.len()))
}

fn adjoint_special_not_conformal() -> Outcome {
    let mut parts = Vec::new();
    for g in [alg(Family::A, 2)?, alg(Family::G, 2)?] {
        let e = ok(EmbeddingSpec::adjoint_into_special(&g))?;
        let check = ok(is_conformal(&e))?;
        if check.conformal {
            return Err(format!("{g} → {} reported conformal", e.target()));
        }
        parts.push(format!(
            "{g}: {} ≠ {}",
            check.source_charge, check.target_charge
        ));
    }
    Ok(parts.join(", "))
}

fn grid_algebras() -> std::result::Result<Vec<SimpleLieAlgebra>, String> {
    Ok(vec![
        alg(Family::A, 1)?,
        alg(Family::A, 2)?,
        alg(Family::B, 3)?,
        alg(Family::D, 4)?,
    ])
}

/// All multisets of at most `n` alcove weights.
fn insertion_sets(alcove: &[LeveledWeight], n: usize) -> Vec<Vec<LeveledWeight>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<(usize, Vec<LeveledWeight>)> = vec![(0, vec![])];
    for _ in 0..n {
        let mut next = Vec::new();
        for (start, set) in &frontier {
            for (i, w) in alcove.iter().enumerate().skip(*start) {
                let mut s = set.clone();
                s.push(w.clone());
                out.push(s.clone());
                next.push((i, s));
            }
        }
        frontier = next;
    }
    out
}

/// Every grid problem: `{A1,A2,B3,D4} × ℓ ∈ {1,2} × genus ≤ 3 × ≤ 3 insertions`.
fn grid() -> std::result::Result<Vec<VerlindeProblem>, String> {
    let mut out = Vec::new();
    for g in grid_algebras()? {
        for level in 1..=2 {
            let sets = insertion_sets(&g.alcove(level), 3);
            for genus in 0..=3 {
                for set in &sets {
                    let weights = set.iter().map(|w| w.weight().clone()).collect();
                    out.push(ok(VerlindeProblem::new(g.clone(), level, genus, weights))?);
                }
            }
        }
    }
    Ok(out)
}

fn describe(p: &VerlindeProblem) -> String {
    let ws: Vec<String> = p.insertions().iter().map(|w| w.weight().to_string()).collect();
    format!(
        "{} ℓ={} genus {} [{}]",
        p.algebra(),
        p.level(),
        p.genus(),
        ws.join(" ")
    )
}

fn oracle_equivalence() -> Outcome {
    let mut pairs = 0;
    for (g, max_level) in [(alg(Family::A, 1)?, 4), (alg(Family::A, 2)?, 3)] {
        for level in 1..=max_level {
            let alcove = g.alcove(level);
            for a in &alcove {
                for b in &alcove {
                    let kw = ok(fuse(&g, a, b))?;
                    let sv = ok(fusion_from_s_matrix(&g, a, b))?;
                    if kw != sv {
                        return Err(format!(
                            "{g} ℓ={level} {} × {}: Kac-Walton {kw}, S-matrix {sv}",
                            a.weight(),
                            b.weight()
                        ));
                    }
                    pairs += 1;
                }
            }
        }
    }
    let problems = grid()?;
    let mut worst = 0.0f64;
    for p in &problems {
        let exact = ok(verlinde_dim_exact(p))?;
        let z = ok(verlinde_sum(p))?;
        let err = (z.re - exact as f64).abs().max(z.im.abs());
        worst = worst.max(err);
        if err > INTEGRALITY_TOLERANCE {
            return Err(format!("{}: numeric {z}, exact {exact}", describe(p)));
        }
        let rounded = ok(verlinde_dim(p))?;
        if rounded != exact {
            return Err(format!("{}: rounded {rounded}, exact {exact}", describe(p)));
        }
    }
    Ok(format!(
        "{pairs} fusion products, {} grid points, max deviation {worst:.1e}",
        problems.len()
    ))
}

fn factorization_propagation() -> Outcome {
    let problems = grid()?;
    for p in &problems {
        let dim = ok(verlinde_dim_exact(p))?;
        if p.genus() > 0 {
            let mut sum = 0u128;
            for t in ok(p.factorization_terms())? {
                sum += ok(verlinde_dim_exact(&t))?;
            }
            if sum != dim {
                return Err(format!("{}: factorization {sum} ≠ {dim}", describe(p)));
            }
        }
        let vac = LeveledWeight::vacuum(p.algebra(), p.level());
        let with_vac = ok(verlinde_dim_exact(&ok(p.with_insertion(vac))?))?;
        if with_vac != dim {
            return Err(format!("{}: with vacuum {with_vac} ≠ {dim}", describe(p)));
        }
        // the dual weight of a single insertion must be an allowed partner
        if let [w] = p.insertions() {
            let d = ok(dual_weight(p.algebra(), w))?;
            let pair = ok(VerlindeProblem::new(
                p.algebra().clone(),
                p.level(),
                0,
                vec![w.weight().clone(), d.into_weight()],
            ))?;
            if ok(verlinde_dim_exact(&pair))? != 1 {
                return Err(format!("{}: two-point function is not 1", describe(p)));
            }
        }
    }
    Ok(format!("{} grid points", problems.len()))
}

fn a2_branching() -> Outcome {
    let start = Instant::now();
    let g = alg(Family::A, 2)?;
    let e = ok(EmbeddingSpec::adjoint(&g))?;
    let vacuum = LeveledWeight::vacuum(e.target(), 1);
    let result = ok(branch_decompose(&g, &vacuum, 2))?;
    let t = start.elapsed();
    let m = result.multiplicity(&Weight::zero(2));
    let vac_term = result
        .terms
        .iter()
        .find(|term| term.weight.weight().is_zero())
        .ok_or("no vacuum summand")?;
    if m != 1 || vac_term.weight.level() != 3 || !vac_term.offset.is_zero() {
        return Err(format!("vacuum multiplicity {m}"));
    }
    if !result.is_exact() {
        return Err(format!("residual {:?}", result.residual));
    }
    if t > Duration::from_secs(60) {
        return Err(format!("took {:.1}s", t.as_secs_f64()));
    }
    let listed: Vec<String> = result
        .terms
        .iter()
        .map(|t| format!("{}@{}×{}", t.weight.weight(), t.offset, t.multiplicity))
        .collect();
    Ok(format!("terms {}, residual 0", listed.join(" ")))
}

fn character_algorithms() -> Outcome {
    let config = CharConfig::default();
    let depth = 4;
    let mut cases = Vec::new();
    let a1 = alg(Family::A, 1)?;
    for level in 0..=2 {
        for lw in a1.alcove(level) {
            cases.push((a1.clone(), lw));
        }
    }
    let d4 = alg(Family::D, 4)?;
    for lw in d4.alcove(1) {
        cases.push((d4.clone(), lw));
    }
    for (g, lw) in &cases {
        let wk = ok(graded_character_with(g, lw, depth, Algorithm::WeylKac, &config))?;
        let fr = ok(graded_character_with(g, lw, depth, Algorithm::Freudenthal, &config))?;
        for d in 0..=depth {
            if wk.layer(d) != fr.layer(d) {
                return Err(format!(
                    "{g} ℓ={} {}: layer {d} differs",
                    lw.level(),
                    lw.weight()
                ));
            }
        }
    }
    Ok(format!("{} modules through depth {depth}", cases.len()))
}

fn theta_vs_verlinde() -> Outcome {
    let b3 = alg(Family::B, 3)?;
    for genus in 1..=5usize {
        let (even, odd) = ok(parity_counts(genus))?;
        let want = (1u64 << (genus - 1)) * ((1u64 << genus) + 1);
        if even != want || odd != (1u64 << (genus - 1)) * ((1u64 << genus) - 1) {
            return Err(format!("genus {genus}: {even} even, {odd} odd"));
        }
        if genus <= 4 {
            let p = ok(VerlindeProblem::new(b3.clone(), 1, genus as u32, vec![]))?;
            let v = ok(verlinde_dim(&p))?;
            if v != even as u128 {
                return Err(format!("genus {genus}: {even} even, Verlinde {v}"));
            }
        }
    }
    for genus in 1..=3usize {
        let space = Arc::new(ok(SymplecticSpaceF2::standard(genus))?);
        let forms = ok(enumerate_theta(&space))?;
        let all: BTreeSet<u64> = forms.iter().map(|q| q.basis_values()).collect();
        let chars = 1u64 << (2 * genus);
        for q in &forms {
            let orbit: BTreeSet<u64> = (0..chars)
                .map(|chi| act_character(chi, q).basis_values())
                .collect();
            // free: 2^{2g} distinct images; transitive: they exhaust the forms
            if orbit.len() as u64 != chars || orbit != all {
                return Err(format!("genus {genus}: orbit of {q} has {} forms", orbit.len()));
            }
            let shifted = act_character(0, q);
            if &shifted != q || arf(&shifted) != arf(q) {
                return Err(format!("genus {genus}: trivial character moves {q}"));
            }
        }
    }
    Ok("counts for genus 1..5, torsor for genus 1..3".into())
}

fn projection_and_casimir() -> Outcome {
    for g in [alg(Family::A, 1)?, alg(Family::A, 2)?, alg(Family::B, 2)?] {
        let sc = ok(structure_constants(&g))?;
        let d = sc.dim();
        let p = ok(adjoint_projection(&sc))?;
        for i in 0..d {
            let v = p.apply(&sc.ad(i));
            let unit = (0..d).all(|j| if j == i { v[j].is_one() } else { v[j].is_zero() });
            if !unit {
                return Err(format!("{g}: P(ad {}) ≠ {}", sc.labels()[i], sc.labels()[i]));
            }
        }
        let k = ok(killing_form(&sc))?;
        let gamma = ok(casimir_tensor(&sc))?;
        if gamma.contraction(&k) != QMatrix::identity(d) {
            return Err(format!("{g}: Casimir contraction is not the identity"));
        }
        for i in 0..d {
            if !gamma.ad_action(&sc.ad(i)).is_zero() {
                return Err(format!("{g}: Casimir not invariant under {}", sc.labels()[i]));
            }
        }
    }
    Ok("A1, A2, B2 exact".into())
}

fn center_action() -> Outcome {
    for (g, vector) in [(alg(Family::D, 4)?, 1), (alg(Family::B, 3)?, 1)] {
        let group = center_group(&g);
        let swap = group.swap_element().ok_or(format!("{g}: no swap element"))?;
        let vac = LeveledWeight::vacuum(&g, 1);
        let vec_w = ok(LeveledWeight::new(&g, Weight::fundamental(g.rank(), vector - 1), 1))?;
        if ok(act(swap, &vac))? != vec_w || ok(act(swap, &vec_w))? != vac {
            return Err(format!("{g}: swap does not exchange vacuum and vector"));
        }
    }
    let mut algebras = Vec::new();
    for r in 1..=5 {
        algebras.push(alg(Family::A, r)?);
    }
    for r in 2..=5 {
        algebras.push(alg(Family::B, r)?);
    }
    for r in 3..=5 {
        algebras.push(alg(Family::C, r)?);
    }
    for r in 4..=5 {
        algebras.push(alg(Family::D, r)?);
    }
    algebras.push(alg(Family::G, 2)?);
    algebras.push(alg(Family::F, 4)?);
    let mut checked = 0usize;
    for g in &algebras {
        let group = center_group(g);
        let els = group.elements();
        for level in 0..=3 {
            let alcove = g.alcove(level);
            let members: BTreeSet<&LeveledWeight> = alcove.iter().collect();
            for lw in &alcove {
                if &ok(act(group.identity(), lw))? != lw {
                    return Err(format!("{g}: identity moves {}", lw.weight()));
                }
            }
            for s in els {
                let mut image = BTreeSet::new();
                for lw in &alcove {
                    let moved = ok(act(s, lw))?;
                    if !members.contains(&moved) {
                        return Err(format!("{g}: {s} leaves the alcove"));
                    }
                    if &ok(act(&s.inverse(), &moved))? != lw {
                        return Err(format!("{g}: {s} inverse fails on {}", lw.weight()));
                    }
                    for t in els {
                        let lhs = ok(act(&s.compose(t), lw))?;
                        let rhs = ok(act(s, &ok(act(t, lw))?))?;
                        if lhs != rhs {
                            return Err(format!("{g}: ({s})∘({t}) on {}", lw.weight()));
                        }
                        checked += 1;
                    }
                    image.insert(moved);
                }
                if image.len() != alcove.len() {
                    return Err(format!("{g}: {s} is not a bijection at level {level}"));
                }
            }
        }
    }
    Ok(format!("{} algebras, {checked} composition checks", algebras.len()))
}
