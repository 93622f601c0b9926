use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use blockcount::affinechar::{branch_decompose, graded_character_with, Algorithm, Config};
use blockcount::center::{act, affine_labels, center_group};
use blockcount::embeddings::{
    central_charge, conformal_weight, defining_weight, dynkin_index_irrep, is_conformal,
    EmbeddingSpec,
};
use blockcount::fusion::{
    fuse, fusion_from_s_matrix, verlinde_dim, verlinde_dim_exact, verlinde_sum, VerlindeProblem,
};
use blockcount::liematrix::{
    adjoint_projection, casimir_tensor, killing_form, orthogonal_complement_dim,
    structure_constants, QMatrix,
};
use blockcount::thetachar::{arf, enumerate_theta, parity_counts, SymplecticSpaceF2};
use blockcount::{acceptance, Error, LeveledWeight, Rational, SimpleLieAlgebra, Weight};

const SCHEMA: &str = "1";

#[derive(Parser)]
#[command(name = "blockcount", version, about = "Level alcoves, fusion rings, Verlinde dimensions and affine characters")]
struct Cli {
    /// Emit a JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrable weights at a level.
    Alcove {
        algebra: String,
        #[arg(long)]
        level: u32,
    },
    /// Dynkin index of an irreducible module (default: the defining one).
    Index {
        algebra: String,
        #[arg(long)]
        weight: Option<String>,
    },
    /// Compare Sugawara central charges across an embedding.
    ConformalCheck {
        embedding: EmbeddingKind,
        algebra: String,
    },
    /// Sugawara central charge at a (possibly fractional) level.
    Charge {
        algebra: String,
        #[arg(long)]
        level: String,
    },
    /// Fusion product of two integrable weights.
    Fuse {
        algebra: String,
        #[arg(long)]
        level: u32,
        lambda: String,
        mu: String,
        #[arg(long, value_enum, default_value_t = FuseMethod::KacWalton)]
        method: FuseMethod,
    },
    /// Dimension of the space of conformal blocks.
    Verlinde {
        algebra: String,
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        /// Marked weight; repeat for several points.
        #[arg(long = "insert")]
        insertions: Vec<String>,
        #[arg(long, value_enum, default_value_t = VerlindeMethod::Both)]
        method: VerlindeMethod,
    },
    /// Center of the simply connected group as diagram automorphisms.
    Center {
        algebra: String,
        #[arg(long)]
        level: Option<u32>,
        /// Act on this weight (requires --level).
        #[arg(long)]
        weight: Option<String>,
    },
    /// Truncated graded character of an integrable highest-weight module.
    Character {
        algebra: String,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = CharAlgorithm::Freudenthal)]
        algorithm: CharAlgorithm,
    },
    /// Decompose a level-one so(g) module under the adjoint embedding.
    Branch {
        algebra: String,
        /// `vacuum`, `vector`, or Dynkin labels of an so(g) weight.
        #[arg(long, default_value = "vacuum")]
        target: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Theta characteristics of a genus-g symplectic space over F2.
    Theta {
        #[arg(long)]
        genus: usize,
        /// List every quadratic form with its Arf invariant.
        #[arg(long)]
        list: bool,
    },
    /// Killing form, adjoint projection and Casimir identities.
    Casimir {
        algebra: String,
        /// Include the Killing form and Casimir coefficients.
        #[arg(long)]
        matrix: bool,
    },
    /// Run the acceptance checks.
    Selftest {
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EmbeddingKind {
    /// g ⊂ so(g)
    Ad,
    /// g ⊂ sl(g)
    AdSl,
    /// so(n) ⊂ sl(n); the algebra must be orthogonal
    SoSl,
}

#[derive(Clone, Copy, ValueEnum)]
enum FuseMethod {
    KacWalton,
    SMatrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerlindeMethod {
    Exact,
    SMatrix,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharAlgorithm {
    Freudenthal,
    WeylKac,
}

enum Failure {
    Parse(String),
    Domain(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Domain(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidAlgebra { .. } => Failure::Parse(e.to_string()),
            e if e.is_internal() => Failure::Internal(e.to_string()),
            e => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

struct Output {
    query: Map<String, Value>,
    result: Value,
    exact: bool,
    provenance: &'static str,
    text: String,
    /// Set by `selftest` when a check fails.
    failed: bool,
}

impl Output {
    fn new(query: Map<String, Value>, result: Value, provenance: &'static str, text: String) -> Self {
        Output {
            query,
            result,
            exact: true,
            provenance,
            text,
            failed: false,
        }
    }
}

fn algebra(s: &str) -> Outcome<SimpleLieAlgebra> {
    Ok(s.parse()?)
}

fn weight(s: &str) -> Outcome<Weight> {
    Ok(s.parse()?)
}

fn leveled(g: &SimpleLieAlgebra, s: &str, level: u32) -> Outcome<LeveledWeight> {
    Ok(LeveledWeight::new(g, weight(s)?, level)?)
}

/// Integers as JSON numbers when they fit, strings otherwise.
fn big(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn query(sub: &str, g: Option<&SimpleLieAlgebra>) -> Map<String, Value> {
    let mut q = Map::new();
    q.insert("subcommand".into(), sub.into());
    if let Some(g) = g {
        q.insert("algebra".into(), g.to_string().into());
    }
    q
}

fn matrix_json(m: &QMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(|x| x.to_string().into()).collect()))
            .collect(),
    )
}

fn run(cmd: Command) -> Outcome<Output> {
    match cmd {
        Command::Alcove { algebra: a, level } => {
            let g = algebra(&a)?;
            let mut q = query("alcove", Some(&g));
            q.insert("level".into(), level.into());
            let mut rows = Vec::new();
            let mut text = String::new();
            for lw in g.alcove(level) {
                let h = conformal_weight(&g, &lw)?;
                text.push_str(&format!("{}  h = {h}\n", lw.weight()));
                rows.push(json!({"weight": lw.weight().to_string(), "conformal_weight": rat(&h)}));
            }
            let result = json!({"count": rows.len(), "weights": rows});
            Ok(Output::new(q, result, "alcove-enumeration", text))
        }
        Command::Index { algebra: a, weight: w } => {
            let g = algebra(&a)?;
            let lambda = match w {
                Some(w) => weight(&w)?,
                None => defining_weight(g.cartan_type()),
            };
            g.check_dominant(&lambda)?;
            let index = dynkin_index_irrep(&g, &lambda)?;
            let dim = g.weyl_dim(&lambda)?;
            let mut q = query("index", Some(&g));
            q.insert("weight".into(), lambda.to_string().into());
            let result = json!({"index": rat(&index), "dimension": big(dim)});
            let text = format!("{index}\n");
            Ok(Output::new(q, result, "weyl-dimension-casimir", text))
        }
        Command::ConformalCheck { embedding, algebra: a } => {
            let g = algebra(&a)?;
            let (e, name) = match embedding {
                EmbeddingKind::Ad => (EmbeddingSpec::adjoint(&g)?, "ad"),
                EmbeddingKind::AdSl => (EmbeddingSpec::adjoint_into_special(&g)?, "ad-sl"),
                EmbeddingKind::SoSl => {
                    let n = orthogonal_size(&g)?;
                    (EmbeddingSpec::orthogonal_into_special(n)?, "so-sl")
                }
            };
            let check = is_conformal(&e)?;
            let relation = if check.conformal { "=" } else { "≠" };
            let witness = format!("{} {relation} {}", check.source_charge, check.target_charge);
            let mut q = query("conformal-check", Some(&g));
            q.insert("embedding".into(), name.into());
            let result = json!({
                "conformal": check.conformal,
                "witness": witness,
                "index": rat(&check.index),
                "source": e.source().to_string(),
                "target": e.target().to_string(),
                "source_charge": rat(&check.source_charge),
                "target_charge": rat(&check.target_charge),
            });
            let text = format!(
                "{}\nwitness: {witness}\nindex: {}\nembedding: {} → {}\n",
                check.conformal,
                check.index,
                e.source(),
                e.target()
            );
            Ok(Output::new(q, result, "dynkin-index-sugawara", text))
        }
        Command::Charge { algebra: a, level } => {
            let g = algebra(&a)?;
            let l: Rational = level.trim().parse().map_err(|_| {
                Failure::Parse(format!("cannot parse level: {level:?}"))
            })?;
            if l < Rational::from_integer(0) {
                return Err(Failure::Domain(format!("negative level {l}")));
            }
            let c = central_charge(&g, l);
            let mut q = query("charge", Some(&g));
            q.insert("level".into(), rat(&l));
            let result = json!({"central_charge": rat(&c.0)});
            Ok(Output::new(q, result, "sugawara", format!("{c}\n")))
        }
        Command::Fuse {
            algebra: a,
            level,
            lambda,
            mu,
            method,
        } => {
            let g = algebra(&a)?;
            let l = leveled(&g, &lambda, level)?;
            let m = leveled(&g, &mu, level)?;
            let (v, provenance, exact) = match method {
                FuseMethod::KacWalton => (fuse(&g, &l, &m)?, "kac-walton", true),
                FuseMethod::SMatrix => (fusion_from_s_matrix(&g, &l, &m)?, "s-matrix-verlinde", false),
            };
            let mut q = query("fuse", Some(&g));
            q.insert("level".into(), level.into());
            q.insert("lambda".into(), l.weight().to_string().into());
            q.insert("mu".into(), m.weight().to_string().into());
            let terms: Vec<Value> = v
                .iter()
                .map(|(w, n)| json!({"weight": w.weight().to_string(), "multiplicity": n}))
                .collect();
            let result = json!({"terms": terms, "total": v.total()});
            let mut out = Output::new(q, result, provenance, format!("{v}\n"));
            out.exact = exact;
            Ok(out)
        }
        Command::Verlinde {
            algebra: a,
            level,
            genus,
            insertions,
            method,
        } => {
            let g = algebra(&a)?;
            let ws = insertions.iter().map(|s| weight(s)).collect::<Outcome<Vec<_>>>()?;
            let p = VerlindeProblem::new(g.clone(), level, genus, ws)?;
            let mut q = query("verlinde", Some(&g));
            q.insert("level".into(), level.into());
            q.insert("genus".into(), genus.into());
            q.insert(
                "insertions".into(),
                p.insertions().iter().map(|w| Value::from(w.weight().to_string())).collect(),
            );
            let (dim, provenance, exact, numeric) = match method {
                VerlindeMethod::Exact => (verlinde_dim_exact(&p)?, "factorization-fusion", true, None),
                VerlindeMethod::SMatrix => {
                    let z = verlinde_sum(&p)?;
                    (verlinde_dim(&p)?, "s-matrix-sum", false, Some(z.re))
                }
                VerlindeMethod::Both => {
                    let exact = verlinde_dim_exact(&p)?;
                    let numeric = verlinde_dim(&p)?;
                    if exact != numeric {
                        return Err(Failure::Internal(format!(
                            "Verlinde routes disagree: exact {exact}, S-matrix {numeric}"
                        )));
                    }
                    let z = verlinde_sum(&p)?;
                    (exact, "s-matrix-sum+factorization-fusion", true, Some(z.re))
                }
            };
            let mut result = json!({"dimension": big(dim)});
            if let Some(x) = numeric {
                result["numeric"] = Value::String(format!("{x:.9}"));
            }
            let mut out = Output::new(q, result, provenance, format!("{dim}\n"));
            out.exact = exact;
            Ok(out)
        }
        Command::Center {
            algebra: a,
            level,
            weight: w,
        } => {
            let g = algebra(&a)?;
            let group = center_group(&g);
            let mut q = query("center", Some(&g));
            let mut text = format!("{} (order {})\n", group.structure(), group.order());
            let mut elements = Vec::new();
            for s in group.elements() {
                elements.push(json!({
                    "permutation": s.permutation(),
                    "order": s.order(),
                    "description": s.to_string(),
                }));
            }
            for s in group.elements() {
                text.push_str(&format!("  {s}  (order {})\n", s.order()));
            }
            let mut result = json!({
                "structure": group.structure(),
                "order": group.order(),
                "elements": elements,
                "table": group.table(),
            });
            match (level, w) {
                (Some(level), w) => {
                    q.insert("level".into(), level.into());
                    let targets = match w {
                        Some(w) => vec![leveled(&g, &w, level)?],
                        None => g.alcove(level),
                    };
                    let mut orbits = Vec::new();
                    for lw in &targets {
                        let images = group
                            .elements()
                            .iter()
                            .map(|s| act(s, lw))
                            .collect::<Result<Vec<_>, _>>()?;
                        text.push_str(&format!(
                            "{} ↦ {}\n",
                            lw.weight(),
                            images.iter().map(|i| i.weight().to_string()).collect::<Vec<_>>().join(" ")
                        ));
                        orbits.push(json!({
                            "weight": lw.weight().to_string(),
                            "affine_labels": affine_labels(&g, lw),
                            "images": images.iter().map(|i| i.weight().to_string()).collect::<Vec<_>>(),
                        }));
                    }
                    if let Some(w) = targets.first().filter(|_| targets.len() == 1) {
                        q.insert("weight".into(), w.weight().to_string().into());
                    }
                    result["actions"] = Value::Array(orbits);
                }
                (None, Some(_)) => {
                    return Err(Failure::Parse("--weight requires --level".into()));
                }
                (None, None) => {}
            }
            Ok(Output::new(q, result, "affine-diagram-automorphisms", text))
        }
        Command::Character {
            algebra: a,
            level,
            weight: w,
            depth,
            algorithm,
        } => {
            let g = algebra(&a)?;
            let lw = match w {
                Some(w) => leveled(&g, &w, level)?,
                None => LeveledWeight::vacuum(&g, level),
            };
            let (alg, provenance) = match algorithm {
                CharAlgorithm::Freudenthal => (Algorithm::Freudenthal, "affine-freudenthal"),
                CharAlgorithm::WeylKac => (Algorithm::WeylKac, "weyl-kac"),
            };
            let c = graded_character_with(&g, &lw, depth, alg, &Config::default())?;
            let mut q = query("character", Some(&g));
            q.insert("level".into(), level.into());
            q.insert("weight".into(), lw.weight().to_string().into());
            q.insert("depth".into(), depth.into());
            let dims = c.dimensions();
            let mut layers = Vec::new();
            let mut text = String::new();
            for d in 0..=depth {
                let dominant = c.dominant_layer(d);
                text.push_str(&format!("{d}: dim {}", dims[d]));
                for (w, m) in &dominant {
                    text.push_str(&format!("  {w}×{m}"));
                }
                text.push('\n');
                layers.push(json!({
                    "degree": d,
                    "dimension": big(dims[d]),
                    "dominant": dominant
                        .iter()
                        .map(|(w, m)| json!({"weight": w.to_string(), "multiplicity": m}))
                        .collect::<Vec<_>>(),
                }));
            }
            let h = conformal_weight(&g, &lw)?;
            let result = json!({"conformal_weight": rat(&h), "layers": layers});
            Ok(Output::new(q, result, provenance, text))
        }
        Command::Branch {
            algebra: a,
            target,
            depth,
        } => {
            let g = algebra(&a)?;
            let e = EmbeddingSpec::adjoint(&g)?;
            let so = e.target();
            let t = match target.as_str() {
                "vacuum" => LeveledWeight::vacuum(so, 1),
                "vector" => LeveledWeight::new(so, Weight::fundamental(so.rank(), 0), 1)?,
                labels => leveled(so, labels, 1)?,
            };
            let r = branch_decompose(&g, &t, depth)?;
            let mut q = query("branch", Some(&g));
            q.insert("target_algebra".into(), so.to_string().into());
            q.insert("target".into(), t.weight().to_string().into());
            q.insert("depth".into(), depth.into());
            let mut text = String::new();
            let mut terms = Vec::new();
            for term in &r.terms {
                text.push_str(&format!(
                    "{}×H({}, {}) at {}\n",
                    term.multiplicity,
                    term.weight.weight(),
                    term.weight.level(),
                    term.offset
                ));
                terms.push(json!({
                    "weight": term.weight.weight().to_string(),
                    "level": term.weight.level(),
                    "offset": rat(&term.offset),
                    "multiplicity": term.multiplicity,
                }));
            }
            let residual: Vec<String> = r.residual.iter().map(|x| x.to_string()).collect();
            text.push_str(&format!("residual: {}\n", residual.join(" ")));
            let result = json!({
                "terms": terms,
                "residual": r.residual.iter().map(|&x| big(x)).collect::<Vec<_>>(),
                "complete": r.is_exact(),
            });
            Ok(Output::new(q, result, "restriction+layer-peeling", text))
        }
        Command::Theta { genus, list } => {
            let (even, odd) = parity_counts(genus)?;
            let mut q = query("theta", None);
            q.insert("genus".into(), genus.into());
            let mut text = format!("even {even}\nodd {odd}\n");
            let mut result = json!({"even": even, "odd": odd, "total": even + odd});
            if list {
                let space = Arc::new(SymplecticSpaceF2::standard(genus)?);
                let forms = enumerate_theta(&space)?;
                let mut rows = Vec::new();
                for f in &forms {
                    text.push_str(&format!("{f} arf {}\n", arf(f)));
                    rows.push(json!({"basis_values": f.to_string(), "arf": arf(f)}));
                }
                result["forms"] = Value::Array(rows);
            }
            Ok(Output::new(q, result, "arf-enumeration", text))
        }
        Command::Casimir { algebra: a, matrix } => {
            let g = algebra(&a)?;
            let sc = structure_constants(&g)?;
            let d = sc.dim();
            let k = killing_form(&sc)?;
            let p = adjoint_projection(&sc)?;
            let projection_identity = (0..d).all(|i| {
                let v = p.apply(&sc.ad(i));
                (0..d).all(|j| v[j] == if i == j { one() } else { zero() })
            });
            let gamma = casimir_tensor(&sc)?;
            let contraction_identity = gamma.contraction(&k) == QMatrix::identity(d);
            let invariant = (0..d).all(|i| gamma.ad_action(&sc.ad(i)).is_zero());
            if !(projection_identity && contraction_identity && invariant) {
                return Err(Failure::Internal(format!(
                    "{g}: projection {projection_identity}, contraction {contraction_identity}, invariance {invariant}"
                )));
            }
            let complement = orthogonal_complement_dim(&sc);
            let mut q = query("casimir", Some(&g));
            q.insert("matrix".into(), matrix.into());
            let mut result = json!({
                "dimension": d,
                "basis": sc.labels(),
                "projection_identity": projection_identity,
                "contraction_identity": contraction_identity,
                "casimir_invariant": invariant,
                "complement_dimension": complement,
            });
            let mut text = format!(
                "dim {d}\nP∘ad = id: {projection_identity}\nγ contraction = id: {contraction_identity}\nγ invariant: {invariant}\ncomplement in sl: {complement}\n"
            );
            if matrix {
                result["killing_form"] = matrix_json(&k);
                result["casimir"] = matrix_json(&gamma.coefficients);
                text.push_str(&format!("basis: {}\n", sc.labels().join(" ")));
            }
            Ok(Output::new(q, result, "killing-form-exact", text))
        }
        Command::Selftest { criterion } => {
            let reports = match criterion {
                Some(id) => vec![acceptance::run(id)
                    .ok_or_else(|| Failure::Parse(format!("unknown criterion {id}")))?],
                None => acceptance::run_all(),
            };
            let mut q = query("selftest", None);
            if let Some(id) = criterion {
                q.insert("criterion".into(), id.into());
            }
            let mut text = String::new();
            let mut rows = Vec::new();
            for r in &reports {
                // timings vary between runs; keep them out of the JSON
                text.push_str(&format!("{r}\n"));
                rows.push(json!({
                    "criterion": r.id,
                    "title": r.title,
                    "passed": r.passed,
                    "detail": r.detail,
                }));
            }
            let failed = reports.iter().any(|r| !r.passed);
            let result = json!({"passed": !failed, "criteria": rows});
            let mut out = Output::new(q, result, "acceptance", text);
            out.failed = failed;
            Ok(out)
        }
    }
}

fn one() -> blockcount::liematrix::Q {
    blockcount::liematrix::Q::from_integer(1.into())
}

fn zero() -> blockcount::liematrix::Q {
    blockcount::liematrix::Q::from_integer(0.into())
}

/// `n` for an algebra given as so(n).
fn orthogonal_size(g: &SimpleLieAlgebra) -> Outcome<usize> {
    use blockcount::Family;
    let r = g.rank();
    match g.family() {
        Family::B => Ok(2 * r + 1),
        Family::D => Ok(2 * r),
        _ => Err(Failure::Domain(format!("{g} is not an orthogonal algebra"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                let doc = json!({
                    "schema": SCHEMA,
                    "query": Value::Object(out.query),
                    "result": out.result,
                    "exact": out.exact,
                    "provenance": out.provenance,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
            } else {
                print!("{}", out.text);
            }
            if out.failed {
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_classes() {
        let parse = Error::Parse {
            what: "weight",
            token: "x".into(),
        };
        assert_eq!(Failure::from(parse).code(), 2);
        let domain = Error::AlcoveViolation {
            weight: "(2)".into(),
            level: 1,
        };
        assert_eq!(Failure::from(domain).code(), 3);
        let internal = Error::NonIntegral {
            value: "2.5".into(),
            tolerance: 1e-6,
        };
        assert_eq!(Failure::from(internal).code(), 4);
        assert_eq!(Failure::from(Error::CrossCheck("x".into())).code(), 4);
    }
}
