//! `equimod`: batch front end with exact JSON output.

mod render;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use equimod::field::{congruence_check, is_algebraic_integer, is_unit, min_poly, norm_trace, FieldElement, NumberField};
use equimod::heights::{
    enumerate_bounded_height, height_algebraic, projective_height_rational, search_equal_modulus_units,
    unit_ratio_heights, AlgebraicNumber, EnumerationOptions, HeightValue, DEFAULT_ENUMERATION_BUDGET,
};
use equimod::poly::{parse_int_poly, parse_rational, IntPoly, DEFAULT_DEGREE_CAP};
use equimod::roots::PrecisionContext;
use equimod::theorem::{
    dubickas_feasible, lck_admissible, main_theorem_audit, signature_case_analysis, AuditStatus, SignaturePair,
};
use equimod::units::{
    analyze_subgroup, is_equal_conjugates, is_equal_modulus, is_totally_positive, log_embedding, RealValue,
    UnitSubgroup,
};
use equimod::{Error, Result};
use rug::{Integer, Rational};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "equimod", version, about = "Exact number-field, unit and height computations")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Config {
    /// Working precision in decimal digits
    #[arg(long, global = true, default_value_t = 64)]
    precision: u32,
    /// Ceiling for automatic precision escalation
    #[arg(long, global = true, default_value_t = 4096)]
    max_digits: u32,
    /// Largest degree handed to the factorizer
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    degree_cap: usize,
    /// JSON objects, or `key: value` lines and TSV for enumeration
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Report heights relative to a field of this degree (H^D)
    #[arg(long, global = true)]
    relative_to_degree: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Output {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Defining polynomial, signature, discriminant and embeddings
    Field {
        #[command(subcommand)]
        action: FieldAction,
    },
    /// Exact invariants of a field element
    Element {
        action: ElementAction,
        poly: String,
        /// coefficients in the power basis, as a JSON array or a polynomial in x
        element: String,
    },
    /// Archimedean decisions about a unit
    Unit {
        action: UnitAction,
        poly: String,
        element: String,
        /// modulus for `congruence`
        alpha: Option<String>,
    },
    /// Absolute Weil heights
    Height {
        #[command(subcommand)]
        action: HeightAction,
    },
    /// Minimal polynomials of bounded degree and height
    Enumerate {
        #[arg(long)]
        deg: usize,
        #[arg(long)]
        bound: String,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u128,
    },
    /// Rank and per-generator decisions for a unit subgroup
    Subgroup {
        #[command(subcommand)]
        action: SubgroupAction,
    },
    /// Admissibility of a unit subgroup for an LCK structure
    Lck {
        #[command(subcommand)]
        action: LckAction,
    },
    /// Smallest (m, q) with s = (2t + 2m) q - 2t
    Feasible { s: usize, t: usize },
    /// Subfield signatures compatible with an admissible subgroup
    Cases { s: usize, t: usize },
    /// Check an admissibility verdict against lck => t = 1
    Audit {
        poly: String,
        /// generators, or `-` to read one per line from stdin
        gens: Vec<String>,
    },
    /// Products of generators within an exponent box that have equal moduli
    Search {
        poly: String,
        #[arg(long = "box", default_value_t = 3)]
        exponent_box: u32,
        gens: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum FieldAction {
    Info { poly: String },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ElementAction {
    Minpoly,
    Norm,
    Integer,
    Unit,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum UnitAction {
    Logvec,
    Equalmod,
    Equalconj,
    Totpos,
    Congruence,
}

#[derive(Subcommand, Debug)]
enum HeightAction {
    /// Height of a rational, a root of an irreducible polynomial, or a field element
    Algebraic {
        /// a rational, a minimal polynomial, or a defining polynomial followed by an element
        target: String,
        element: Option<String>,
        /// which root of the minimal polynomial (embedding order)
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Height of a point with rational coordinates
    Projective { coords: Vec<String> },
    /// Height of [sigma_{s+1}(u) : ... : sigma_{s+t}(u)] through its ratios
    Unitpoint { poly: String, element: String },
}

#[derive(Subcommand, Debug)]
enum SubgroupAction {
    Analyze { poly: String, gens: Vec<String> },
}

#[derive(Subcommand, Debug)]
enum LckAction {
    Check { poly: String, gens: Vec<String> },
}

enum Reply {
    Json(Value),
    /// enumeration records, one per line
    Lines(Vec<String>),
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::PrecisionExhausted { .. } | Error::BoundaryTie { .. } => 3,
        Error::BudgetExceeded { .. } | Error::DegreeCapExceeded { .. } => 4,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn context(cfg: &Config) -> Result<PrecisionContext> {
    PrecisionContext::new(cfg.precision, 2, cfg.max_digits)
}

fn field(cfg: &Config, poly: &str) -> Result<Arc<NumberField>> {
    NumberField::new(&parse_int_poly(poly)?, context(cfg)?, cfg.degree_cap)
}

fn element(k: &Arc<NumberField>, s: &str) -> Result<FieldElement> {
    let t = s.trim();
    if t.starts_with('{') {
        if let Ok(Value::Object(map)) = serde_json::from_str::<Value>(t) {
            if let Some(Value::String(e)) = map.get("element") {
                return FieldElement::parse(k, e);
            }
        }
    }
    FieldElement::parse(k, t)
}

fn generators(k: &Arc<NumberField>, gens: &[String]) -> Result<Vec<FieldElement>> {
    if gens.len() == 1 && gens[0] == "-" {
        let mut out = Vec::new();
        for line in io::stdin().lock().lines() {
            let line = line.map_err(|e| Error::InvalidInput(e.to_string()))?;
            if !line.trim().is_empty() {
                out.push(element(k, &line)?);
            }
        }
        return Ok(out);
    }
    gens.iter().map(|g| element(k, g)).collect()
}

fn places(cfg: &Config) -> usize {
    (cfg.precision as usize).clamp(10, 40)
}

fn eps(cfg: &Config) -> Rational {
    Rational::from((1, Integer::from(Integer::u_pow_u(10, cfg.precision.saturating_sub(10).max(10)))))
}

fn height_json(cfg: &Config, h: &HeightValue) -> Value {
    let (h, rel) = match cfg.relative_to_degree {
        Some(d) => (h.pow(d), Some(d)),
        None => (h.clone(), None),
    };
    let s = h.summary(places(cfg));
    let mut v = json!({"height": s.value, "error": s.error, "exact": s.exact});
    if let Some(d) = rel {
        v["relative_to_degree"] = json!(d);
    }
    v
}

fn run(cli: &Cli) -> Result<Reply> {
    let cfg = &cli.config;
    let reply = match &cli.command {
        Command::Field { action: FieldAction::Info { poly } } => Reply::Json(to_value(&field(cfg, poly)?.summary(places(cfg)))),
        Command::Element { action, poly, element: e } => {
            let k = field(cfg, poly)?;
            let a = element(&k, e)?;
            Reply::Json(match action {
                ElementAction::Minpoly => {
                    let m = min_poly(&a);
                    json!({
                        "min_poly": m.primitive_integer().to_string(),
                        "coeffs": m.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "degree": m.degree(),
                    })
                }
                ElementAction::Norm => {
                    let (n, t) = norm_trace(&a);
                    json!({"norm": n.to_string(), "trace": t.to_string()})
                }
                ElementAction::Integer => json!({"integral": is_algebraic_integer(&a)}),
                ElementAction::Unit => json!({"unit": is_unit(&a)?}),
            })
        }
        Command::Unit { action, poly, element: e, alpha } => {
            let k = field(cfg, poly)?;
            let u = element(&k, e)?;
            Reply::Json(match action {
                UnitAction::Logvec => {
                    let (digits, v) = log_embedding(&u)?;
                    let sum = v.iter().skip(1).fold(v[0].clone(), |acc, x| acc.add(x));
                    json!({
                        "precision_digits": digits,
                        "log_embedding": v.iter().map(|x| RealValue::from_interval(x, places(cfg))).collect::<Vec<_>>(),
                        "sum": RealValue::from_interval(&sum, places(cfg)),
                    })
                }
                UnitAction::Equalmod => to_value(&is_equal_modulus(&u)?),
                UnitAction::Equalconj => to_value(&is_equal_conjugates(&u)?),
                UnitAction::Totpos => to_value(&is_totally_positive(&u)?),
                UnitAction::Congruence => {
                    let alpha = alpha.as_ref().ok_or_else(|| Error::InvalidInput("congruence needs <alpha>".into()))?;
                    let a = element(&k, alpha)?;
                    json!({"congruent": congruence_check(&u, &a)?})
                }
            })
        }
        Command::Height { action } => Reply::Json(match action {
            HeightAction::Algebraic { target, element: e, root } => match e {
                Some(e) => {
                    let k = field(cfg, target)?;
                    let a = element(&k, e)?;
                    let mut v = height_json(cfg, &height_algebraic(&a, &eps(cfg))?);
                    v["min_poly"] = json!(min_poly(&a).primitive_integer().to_string());
                    v
                }
                None => {
                    let f = match parse_rational(target) {
                        Ok(q) => IntPoly::new(vec![Integer::from(-q.numer()), q.denom().clone()]),
                        Err(_) => parse_int_poly(target)?,
                    };
                    let a = AlgebraicNumber::new(&f, *root)?;
                    let mut v = height_json(cfg, &height_algebraic(&a, &eps(cfg))?);
                    v["min_poly"] = json!(a.min_poly.to_string());
                    v
                }
            },
            HeightAction::Projective { coords } => {
                let q = coords.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
                let h = projective_height_rational(&q)?;
                let h = match cfg.relative_to_degree {
                    Some(d) => Integer::from(rug::ops::Pow::pow(&h, d)),
                    None => h,
                };
                json!({"height": h.to_string()})
            }
            HeightAction::Unitpoint { poly, element: e } => {
                let k = field(cfg, poly)?;
                let u = element(&k, e)?;
                let ratios = unit_ratio_heights(&u, &eps(cfg), cfg.degree_cap)?;
                let mut items: Vec<Value> = ratios
                    .iter()
                    .enumerate()
                    .map(|(i, (h, g))| {
                        let mut v = height_json(cfg, h);
                        v["ratio"] = json!(format!("sigma_{}/sigma_{}", i + 2, 1));
                        v["ratio_min_poly"] = json!(g.to_string());
                        v
                    })
                    .collect();
                if items.len() == 1 {
                    items.remove(0)
                } else {
                    json!({"ratios": items})
                }
            }
        }),
        Command::Enumerate { deg, bound, budget } => {
            let h = parse_rational(bound)?;
            let opts = EnumerationOptions { budget: *budget, ctx: context(cfg)?, ..Default::default() };
            let entries = enumerate_bounded_height(*deg, &h, &opts)?;
            let lines = entries
                .iter()
                .map(|e| match cfg.output {
                    Output::Text => e.line(places(cfg)),
                    Output::Json => {
                        let s = e.height.summary(places(cfg));
                        json!({
                            "coeffs": e.poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                            "height": s.value,
                            "error": s.error,
                            "root_of_unity": e.root_of_unity,
                        })
                        .to_string()
                    }
                })
                .collect();
            Reply::Lines(lines)
        }
        Command::Subgroup { action: SubgroupAction::Analyze { poly, gens } } => {
            let k = field(cfg, poly)?;
            let u = UnitSubgroup::new(&k, generators(&k, gens)?)?;
            Reply::Json(to_value(&analyze_subgroup(&u)?))
        }
        Command::Lck { action: LckAction::Check { poly, gens } } => {
            let k = field(cfg, poly)?;
            Reply::Json(to_value(&lck_admissible(&k, &generators(&k, gens)?)?))
        }
        Command::Feasible { s, t } => Reply::Json(match dubickas_feasible(SignaturePair::new(*s, *t))? {
            Some((m, q)) => json!({"feasible": true, "m": m, "q": q}),
            None => json!({"feasible": false}),
        }),
        Command::Cases { s, t } => {
            let cases = signature_case_analysis(SignaturePair::new(*s, *t));
            Reply::Json(json!({"signature": [s, t], "cases": cases}))
        }
        Command::Audit { poly, gens } => {
            let k = field(cfg, poly)?;
            let report = main_theorem_audit(&k, &generators(&k, gens)?, cfg.degree_cap)?;
            if report.status == AuditStatus::Inconsistent {
                return Err(Error::Internal(format!("audit inconsistent: {}", to_value(&report))));
            }
            Reply::Json(to_value(&report))
        }
        Command::Search { poly, exponent_box, gens } => {
            let k = field(cfg, poly)?;
            let u = UnitSubgroup::new(&k, generators(&k, gens)?)?;
            let found = search_equal_modulus_units(&u, *exponent_box)?;
            Reply::Json(json!({
                "count": found.len(),
                "elements": found.iter().map(|e| e.to_strings()).collect::<Vec<_>>(),
            }))
        }
    };
    Ok(reply)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli) {
        Ok(Reply::Json(v)) => {
            let text = match cli.config.output {
                Output::Json => v.to_string(),
                Output::Text => render::text(&v),
            };
            let _ = writeln!(out, "{text}");
            ExitCode::SUCCESS
        }
        Ok(Reply::Lines(lines)) => {
            for l in lines {
                let _ = writeln!(out, "{l}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let v = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
            eprintln!("{v}");
            ExitCode::from(exit_code(&e))
        }
    }
}
