use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use affine_semigroup::enumerate::{enumerate_tree, with_frobenius, with_multiplicities};
use affine_semigroup::fastmember::FastContext;
use affine_semigroup::format::{parse_point, parse_point_list, Representation, SemigroupFile};
use affine_semigroup::ideal::{isemigroup_from_ideal, Ideal, ISemigroup};
use affine_semigroup::lattice::{MonomialOrder, Point};
use affine_semigroup::med::{
    decompose, is_med_definition, is_med_pairwise, med_construct, med_type2_check, med_via_theorem, Type2Verdict,
    DEFAULT_BOX_GRADE,
};
use affine_semigroup::plot::{plot_ascii, plot_svg, PlotWindow};
use affine_semigroup::semigroup::{AperyContext, GenSemigroup, Membership, DEFAULT_BUDGET};
use affine_semigroup::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "affsg", version, about = "Affine semigroups, their ideals and I(S)-semigroups")]
struct Cli {
    /// Monomial order, overriding the one in the file (default deglex).
    #[arg(long, global = true, value_enum)]
    order: Option<OrderArg>,
    /// Coordinate priority for the order, e.g. "1,0".
    #[arg(long, global = true)]
    priority: Option<String>,
    /// Largest grade explored when computing gaps (default: $SEMIGROUP_BUDGET or 512).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Deglex,
    Degrevlex,
}

#[derive(Subcommand)]
enum Command {
    /// Gap set and genus.
    Gaps { file: PathBuf },
    /// Minimal generating set.
    Msg { file: PathBuf },
    /// Membership by the generator oracle.
    Member { file: PathBuf, point: String },
    /// Membership through the Apery core.
    FastMember {
        file: PathBuf,
        point: String,
        /// Processing order of the ray elements, e.g. "5,1;6,2".
        #[arg(long)]
        ray_order: Option<String>,
    },
    /// Intersection of the Apery sets of M (default: the ray multiplicities).
    Apery {
        file: PathBuf,
        #[arg(long)]
        m: Option<String>,
    },
    /// The Γ-set of M (default: the ray multiplicities).
    Gamma {
        file: PathBuf,
        #[arg(long)]
        m: Option<String>,
    },
    /// Pseudo-Frobenius elements.
    Pf { file: PathBuf },
    /// The ideal X + S.
    Ideal {
        file: PathBuf,
        #[arg(long = "x")]
        x: String,
    },
    /// All I(S)-semigroups up to a genus.
    Tree {
        file: PathBuf,
        #[arg(long)]
        max_genus: usize,
        /// Only report counts.
        #[arg(long)]
        summary: bool,
    },
    /// All I(S)-semigroups with a given Frobenius element.
    FrobeniusFixed {
        file: PathBuf,
        #[arg(long = "f")]
        f: String,
    },
    /// All I(S)-semigroups with given ray multiplicities.
    MultFixed {
        file: PathBuf,
        #[arg(long)]
        m: String,
        #[arg(long)]
        verify_multiplicities: bool,
    },
    /// MED predicates, optionally the construction (M + S) ∪ {0}.
    Med {
        file: PathBuf,
        #[arg(long)]
        m: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BOX_GRADE)]
        box_grade: i64,
    },
    /// The decomposition S = S₀ ∪ ⋃ (nᵢ + Sᵢ).
    Decompose {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOX_GRADE)]
        box_grade: i64,
    },
    /// SVG (or ASCII) diagram of a planar semigroup.
    Plot {
        file: PathBuf,
        #[arg(long)]
        ascii: bool,
        /// "x_min,x_max,y_min,y_max".
        #[arg(long)]
        window: Option<String>,
        /// Plot (M + S) ∪ {0} instead of S.
        #[arg(long)]
        m: Option<String>,
    },
}

enum Failure {
    Lib(Error),
    Other { kind: &'static str, message: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

enum Output {
    Json(Value),
    Text(String),
}

type Outcome = Result<Output, Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Json(v)) => {
            emit(&format!("{v}\n"));
            ExitCode::SUCCESS
        }
        Ok(Output::Text(t)) => {
            emit(&t);
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (kind, message, code) = match f {
                Failure::Lib(e) => (e.kind(), e.to_string(), if e.is_inconclusive() { 3 } else { 2 }),
                Failure::Other { kind, message } => (kind, message, 2),
            };
            emit(&format!("{}\n", json!({"error": {"kind": kind, "message": message}})));
            ExitCode::from(code)
        }
    }
}

// A closed pipe (e.g. `| head`) is not an error worth reporting.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn load(path: &PathBuf) -> Result<SemigroupFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Other {
        kind: "io",
        message: format!("{}: {e}", path.display()),
    })?;
    Ok(SemigroupFile::from_json(&text)?)
}

fn budget(cli: &Cli) -> Result<u64, Failure> {
    if let Some(b) = cli.budget {
        return Ok(b);
    }
    match std::env::var("SEMIGROUP_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Other {
            kind: "invalid_budget",
            message: format!("SEMIGROUP_BUDGET={v:?} is not a non-negative integer"),
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn order(cli: &Cli, file: &SemigroupFile) -> Result<MonomialOrder, Failure> {
    let base = match cli.order {
        None => file.order_or_default(),
        Some(OrderArg::Lex) => MonomialOrder::lex(),
        Some(OrderArg::Deglex) => MonomialOrder::deglex(),
        Some(OrderArg::Degrevlex) => MonomialOrder::degrevlex(),
    };
    let o = match &cli.priority {
        None => base,
        Some(p) => {
            let pr = p
                .split(',')
                .map(|c| c.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidOrder(format!("bad priority {p:?}: {e}")))?;
            if pr.len() != file.dim() {
                return Err(Error::InvalidOrder(format!("priority must list all {} coordinates", file.dim())).into());
            }
            MonomialOrder::with_priority(base.kind(), pr)?
        }
    };
    o.check_dim(file.dim())?;
    Ok(o)
}

fn order_name(o: &MonomialOrder) -> Value {
    json!({"kind": o.kind(), "priority": o.priority()})
}

fn points_or_rays(m: &Option<String>, s: &GenSemigroup) -> Result<Vec<Point>, Failure> {
    Ok(match m {
        Some(text) => parse_point_list(text)?,
        None => s.ray_elements().to_vec(),
    })
}

fn isemigroup_json(t: &ISemigroup) -> Value {
    json!({"genus": t.genus(), "gaps": t.gaps(), "imsg": t.imsg()})
}

fn type2_json(v: &Type2Verdict) -> Value {
    let mut out = match v {
        Type2Verdict::Vacuous => json!({"verdict": "vacuous"}),
        Type2Verdict::Certified { ray_element } => json!({"verdict": "certified", "ray_element": ray_element}),
        Type2Verdict::ClosedOnBox { ray_element } => json!({"verdict": "closed_on_box", "ray_element": ray_element}),
        Type2Verdict::HypothesisFails { generator } => json!({"verdict": "hypothesis_fails", "generator": generator}),
        Type2Verdict::NotClosed { ray_element, x, y } => {
            json!({"verdict": "not_closed", "ray_element": ray_element, "x": x, "y": y})
        }
        Type2Verdict::MixedRays => json!({"verdict": "mixed_rays"}),
    };
    out["holds"] = json!(v.holds());
    out
}

fn parse_window(text: &str) -> Result<PlotWindow, Failure> {
    let v = text
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Error::Parse(format!("bad window {text:?}: {e}")))?;
    match v[..] {
        [a, b, c, d] => Ok(PlotWindow::new(a, b, c, d)),
        _ => Err(Error::Parse(format!("window {text:?} needs four integers")).into()),
    }
}

fn run(cli: &Cli) -> Outcome {
    let json = |v: Value| Ok(Output::Json(v));
    match &cli.command {
        Command::Gaps { file } => {
            let f = load(file)?;
            let order = order(cli, &f)?;
            let s = f.gap_semigroup(budget(cli)?)?;
            json(json!({
                "genus": s.genus(),
                "gaps": s.gaps(),
                "rays": s.cone().rays(),
                "frobenius": s.frobenius(&order).ok(),
                "order": order_name(&order),
            }))
        }
        Command::Msg { file } => {
            let s = load(file)?.generated();
            json(json!({"generators": s.generators(), "ray_elements": s.ray_elements()}))
        }
        Command::Member { file, point } => {
            let s = load(file)?.generated();
            let x = parse_point(point)?;
            let witness = s.oracle_member(&x)?;
            json(json!({
                "member": witness.is_some(),
                "witness": witness.map(|w| json!({"generators": s.generators(), "coefficients": w})),
            }))
        }
        Command::FastMember { file, point, ray_order } => {
            let s = load(file)?.generated();
            let ctx = match ray_order {
                Some(r) => FastContext::with_ray_order(&s, &parse_point_list(r)?)?,
                None => FastContext::precompute(&s)?,
            };
            let answer = ctx.fast_member(&parse_point(point)?)?;
            json(serde_json::to_value(answer).expect("answers serialize"))
        }
        Command::Apery { file, m } => {
            let s = load(file)?.generated();
            let ctx = AperyContext::new(&s, &points_or_rays(m, &s)?)?;
            json(json!({"m": ctx.m(), "generators": ctx.generators(), "q": ctx.q(), "apery": ctx.apery()}))
        }
        Command::Gamma { file, m } => {
            let s = load(file)?.generated();
            let ctx = AperyContext::new(&s, &points_or_rays(m, &s)?)?;
            json(json!({
                "m": ctx.m(),
                "generators": ctx.generators(),
                "q": ctx.q(),
                "size": ctx.gamma().len(),
                "gamma": ctx.gamma(),
            }))
        }
        Command::Pf { file } => {
            let s = load(file)?.gap_semigroup(budget(cli)?)?;
            json(json!({"pseudo_frobenius": s.pseudo_frobenius(), "gaps": s.gaps()}))
        }
        Command::Ideal { file, x } => {
            let base = Arc::new(load(file)?.gap_semigroup(budget(cli)?)?);
            let ideal = Ideal::from_set(base, &parse_point_list(x)?)?;
            let c = ideal.is_c_semigroup();
            let t = if c { Some(isemigroup_json(&isemigroup_from_ideal(&ideal)?)) } else { None };
            json(json!({"imsg": ideal.imsg(), "is_c_semigroup": c, "isemigroup": t}))
        }
        Command::Tree { file, max_genus, summary } => {
            let f = load(file)?;
            let order = order(cli, &f)?;
            let s = Arc::new(f.gap_semigroup(budget(cli)?)?);
            let tree = enumerate_tree(s, *max_genus, &order)?;
            let levels: Vec<Value> = tree
                .levels
                .iter()
                .map(|l| json!({"genus": l.first().map(|n| n.genus), "count": l.len()}))
                .collect();
            let mut out = json!({
                "order": order_name(&order),
                "max_genus": max_genus,
                "total": tree.total(),
                "levels": levels,
            });
            if !summary {
                out["nodes"] = tree
                    .nodes()
                    .map(|n| {
                        let mut v = isemigroup_json(&n.semigroup);
                        v["removed"] = json!(n.removed);
                        v
                    })
                    .collect();
            }
            json(out)
        }
        Command::FrobeniusFixed { file, f } => {
            let sf = load(file)?;
            let order = order(cli, &sf)?;
            let s = Arc::new(sf.gap_semigroup(budget(cli)?)?);
            let fibre = with_frobenius(s, &parse_point(f)?, &order)?;
            let results: Vec<Value> = fibre
                .results
                .iter()
                .zip(&fibre.x_parts)
                .map(|(t, x)| json!({"x_part": x, "genus": t.genus(), "gaps": t.gaps()}))
                .collect();
            json(json!({
                "f": fibre.f,
                "order": order_name(&order),
                "l": fibre.l,
                "a_s_f": fibre.a_s_f,
                "b": fibre.b,
                "count": results.len(),
                "results": results,
            }))
        }
        Command::MultFixed { file, m, verify_multiplicities } => {
            let s = Arc::new(load(file)?.gap_semigroup(budget(cli)?)?);
            let fibre = with_multiplicities(s, &parse_point_list(m)?, *verify_multiplicities)?;
            let results: Vec<Value> = fibre.results.iter().map(isemigroup_json).collect();
            json(json!({
                "m": fibre.m,
                "b": fibre.b,
                "subsets_scanned": fibre.subsets_scanned,
                "distinct": fibre.distinct,
                "distinct_nonempty_x": fibre.distinct_nonempty,
                "strict": fibre.strict,
                "verified": fibre.verified,
                "count": results.len(),
                "results": results,
            }))
        }
        Command::Med { file, m, box_grade } => {
            let s = load(file)?.generated();
            let report = is_med_definition(&s)?;
            let (pairwise, _) = is_med_pairwise(&s);
            let theorem = med_via_theorem(&s, budget(cli)?)?;
            let mut out = json!({
                "is_med_definition": report.is_med,
                "is_med_pairwise": pairwise,
                "med_via_theorem": theorem,
                "apery_core": report.apery_core,
                "a_part": report.a_part,
                "witness": report.witness,
                "type2": type2_json(&med_type2_check(&s, *box_grade)?),
            });
            if let Some(m) = m {
                let c = med_construct(&s, &parse_point_list(m)?)?;
                out["construction"] = json!({
                    "m": c.context.m(),
                    "generators": c.minimal_generators(),
                    "is_med": is_med_definition(&c.semigroup)?.is_med,
                });
            }
            json(out)
        }
        Command::Decompose { file, box_grade } => {
            let s = load(file)?.generated();
            let d = decompose(&s)?;
            json(json!({
                "ray_elements": d.ray_elements(),
                "s0": d.s0(),
                "box_grade": box_grade,
                "union_identity": d.verify_union(*box_grade),
                "corollary_generators": d.corollary_generators(*box_grade),
                "corollary_identity": d.verify_corollary(*box_grade),
            }))
        }
        Command::Plot { file, ascii, window, m } => {
            let f = load(file)?;
            let constructed;
            let target: &dyn Membership;
            let rays: Vec<Point>;
            let generated;
            let gaps;
            match (m, &f.semigroup) {
                (Some(m), _) => {
                    constructed = med_construct(&f.generated(), &parse_point_list(m)?)?.semigroup;
                    rays = constructed.ray_elements().to_vec();
                    target = &constructed;
                }
                (None, Representation::Generated(s)) => {
                    generated = s.clone();
                    rays = generated.ray_elements().to_vec();
                    target = &generated;
                }
                (None, Representation::Gaps(s)) => {
                    gaps = s.clone();
                    rays = gaps.ray_elements().to_vec();
                    target = &gaps;
                }
            }
            let w = match window {
                Some(w) => parse_window(w)?,
                None => PlotWindow::around(&rays),
            };
            let text = if *ascii { plot_ascii(target, &w)? } else { plot_svg(target, &w)? };
            Ok(Output::Text(text))
        }
    }
}

