use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use webflat::catalog::{self, FixtureKind};
use webflat::limits::{self, Exhausted};
use webflat::{AffineOneForm, Chart, HomFoliation, ImplicitWeb};

const DEFAULT_MAX_TERMS: usize = 5_000_000;

#[derive(Parser)]
#[command(name = "webflat", version, about = "Legendre webs of plane foliations and their curvature")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Abort with exit code 3 after this many seconds.
    #[arg(long, global = true, value_name = "SECS")]
    timeout_seconds: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Legendre transform of a foliation in a dual chart.
    Legendre(FormChart),
    /// Curvature of a 3-web, given directly or as the Legendre transform of a foliation.
    Curvature(Source),
    /// Whether the 3-web is flat.
    Flat {
        #[command(flatten)]
        src: Source,
        /// Exit with code 1 when the web is not flat.
        #[arg(long)]
        assert: bool,
    },
    /// Singular points, invariant lines and inflection divisor of a foliation.
    Analyze(FormOnly),
    /// Invariants of a homogeneous foliation.
    Homog(FormOnly),
    /// Recompute the expectations of the fixture catalog.
    VerifyCatalog {
        /// Include the auxiliary families.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Args)]
struct FormOnly {
    /// 1-form such as "y^3*dx - x^3*dy".
    #[arg(long)]
    form: String,
}

#[derive(Args)]
struct FormChart {
    #[arg(long)]
    form: String,
    /// Dual chart: 1 is y = p x - q, 2 is p x - q y = 1, 3 is p y - q x = 1.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
    chart: u8,
}

#[derive(Args)]
struct Source {
    /// 1-form of a cubic foliation; its Legendre transform is used.
    #[arg(long, required_unless_present = "web", conflicts_with = "web")]
    form: Option<String>,
    /// Implicit web F(x, y, p) = 0 with p = dy/dx.
    #[arg(long)]
    web: Option<String>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
    chart: u8,
}

/// Failure classes, mapped to exit codes.
enum Failure {
    Math(String),
    Usage(String),
}

impl Failure {
    fn math(e: impl std::fmt::Display) -> Self {
        Failure::Math(e.to_string())
    }

    fn usage(e: impl std::fmt::Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn chart(n: u8) -> Chart {
    n.to_string().parse().expect("chart range checked by clap")
}

fn parse_form(s: &str) -> Result<AffineOneForm, Failure> {
    AffineOneForm::parse(s).map_err(Failure::usage)
}

fn web_of(src: &Source) -> Result<ImplicitWeb, Failure> {
    match (&src.form, &src.web) {
        (Some(f), None) => {
            let fol = parse_form(f)?.to_foliation().map_err(Failure::math)?;
            ImplicitWeb::legendre(&fol, chart(src.chart)).map_err(Failure::math)
        }
        (None, Some(w)) => ImplicitWeb::parse(w).map_err(Failure::usage),
        _ => Err(Failure::usage("exactly one of --form and --web is required")),
    }
}

fn vars(w: &ImplicitWeb) -> Vec<String> {
    w.ring().names()[..3].to_vec()
}

fn cmd_legendre(a: &FormChart) -> Result<Output, Failure> {
    let fol = parse_form(&a.form)?.to_foliation().map_err(Failure::math)?;
    let w = ImplicitWeb::legendre(&fol, chart(a.chart)).map_err(Failure::math)?;
    let v = vars(&w);
    Ok(Output {
        text: format!("chart: {}\nvariables: {}, {}; fiber: {}\nweb: {}", w.chart(), v[0], v[1], v[2], w),
        json: json!({"chart": w.chart().to_string(), "variables": v, "k": w.k(), "web": w.to_string()}),
        ok: true,
    })
}

fn cmd_curvature(src: &Source) -> Result<Output, Failure> {
    let w = web_of(src)?;
    let k = w.curvature().map_err(Failure::math)?;
    let (num, den) = k.reduced();
    let flat = k.is_zero();
    Ok(Output {
        text: format!("chart: {}\nnumerator: {}\ndenominator: {}\nflat: {}", w.chart(), num, den, flat),
        json: json!({
            "chart": w.chart().to_string(),
            "variables": vars(&w),
            "numerator": num.to_string(),
            "denominator": den.to_string(),
            "flat": flat,
        }),
        ok: true,
    })
}

fn cmd_flat(src: &Source, assert: bool) -> Result<Output, Failure> {
    let w = web_of(src)?;
    let flat = w.is_flat().map_err(Failure::math)?;
    Ok(Output {
        text: format!("flat: {}", flat),
        json: json!({"chart": w.chart().to_string(), "flat": flat}),
        ok: flat || !assert,
    })
}

fn cmd_analyze(a: &FormOnly) -> Result<Output, Failure> {
    let fol = parse_form(&a.form)?.to_foliation().map_err(Failure::math)?;
    let rep = fol.analyze().map_err(Failure::math)?.0;
    let mut t = vec![format!("degree: {}", rep["degree"])];
    let sing = rep["singularities"].as_array().cloned().unwrap_or_default();
    t.push(format!("singular points: {}", sing.len()));
    for s in &sing {
        let opt = |v: &Value| match v {
            Value::Null => "?".to_string(),
            Value::String(s) => s.clone(),
            v => v.to_string(),
        };
        let mut line = format!(
            "  {}  nu={} tau={} milnor={} bb={}",
            opt(&s["point"]),
            opt(&s["nu"]),
            opt(&s["tau"]),
            opt(&s["milnor"]),
            opt(&s["bb"])
        );
        for c in s["cs"].as_array().into_iter().flatten() {
            line.push_str(&format!(" cs({})={}", opt(&c["line"]), opt(&c["value"])));
        }
        t.push(line);
    }
    for u in rep["unsplit"].as_array().into_iter().flatten() {
        t.push(format!("  unsplit: {}", u.as_str().unwrap_or_default()));
    }
    let lines: Vec<&str> = rep["invariant_lines"].as_array().into_iter().flatten().filter_map(|l| l.as_str()).collect();
    t.push(format!("invariant lines: {}", lines.len()));
    for l in &lines {
        t.push(format!("  {}", l));
    }
    t.push(format!("convex: {}", rep["convex"]));
    for tr in rep["inflection"]["tr"].as_array().into_iter().flatten() {
        t.push(format!("  transverse inflection: ({})^{}", tr["factor"].as_str().unwrap_or_default(), tr["order"]));
    }
    Ok(Output { text: t.join("\n"), json: rep, ok: true })
}

fn cmd_homog(a: &FormOnly) -> Result<Output, Failure> {
    let h = HomFoliation::from_affine(&parse_form(&a.form)?).map_err(Failure::math)?;
    let ty = h.hom_type().map_err(Failure::math)?;
    let cs = h.cs_polynomial().map(|p| p.to_string()).map_err(|e| e.to_string());
    let crit = if h.degree() == 3 { Some(h.flat_homog3().map_err(Failure::math)?) } else { None };
    let mut t = vec![
        format!("degree: {}", h.degree()),
        format!("cone tangent: {}", h.cone_tangent()),
        format!("transverse form: {}", h.d_transverse()),
        format!("type: {}", ty),
    ];
    match &cs {
        Ok(p) => t.push(format!("cs polynomial: {}", p)),
        Err(e) => t.push(format!("cs polynomial: unavailable ({})", e)),
    }
    if let Some(f) = crit {
        t.push(format!("flat: {}", f));
    }
    Ok(Output {
        text: t.join("\n"),
        json: json!({
            "degree": h.degree(),
            "cone_tangent": h.cone_tangent().to_string(),
            "d_transverse": h.d_transverse().to_string(),
            "type": ty.to_string(),
            "convex": ty.is_convex(),
            "cs_polynomial": cs.ok(),
            "flat": crit,
        }),
        ok: true,
    })
}

fn cmd_verify(all: bool) -> Result<Output, Failure> {
    let fixtures: Vec<_> = catalog::load_catalog().into_iter().filter(|f| all || f.kind == FixtureKind::Primary).collect();
    let reports = catalog::verify_all(&fixtures);
    let passed = reports.iter().filter(|r| r.passed()).count();
    let mut t: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
    t.push(format!("{}/{} PASS", passed, reports.len()));
    let rj: Vec<Value> = reports
        .iter()
        .map(|r| {
            let fails: Vec<Value> = r
                .failures()
                .map(|c| json!({"field": c.field, "expected": c.expected, "computed": c.computed}))
                .collect();
            json!({"id": r.id, "pass": r.passed(), "checks": r.checks.len(), "failures": fails})
        })
        .collect();
    Ok(Output {
        text: t.join("\n"),
        json: json!({"fixtures": rj, "passed": passed, "total": reports.len()}),
        ok: passed == reports.len(),
    })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Legendre(a) => cmd_legendre(a),
        Command::Curvature(s) => cmd_curvature(s),
        Command::Flat { src, assert } => cmd_flat(src, *assert),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Homog(a) => cmd_homog(a),
        Command::VerifyCatalog { all } => cmd_verify(*all),
    }
}

fn max_terms() -> Result<usize, String> {
    match std::env::var("WEBFLAT_MAX_TERMS") {
        Err(_) => Ok(DEFAULT_MAX_TERMS),
        Ok(s) => s.trim().parse().map_err(|_| format!("WEBFLAT_MAX_TERMS must be a positive integer, got `{}`", s)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match max_terms() {
        Ok(n) => limits::set_max_terms(n),
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    }
    if let Some(t) = cli.timeout_seconds {
        if !(t.is_finite() && t > 0.0) {
            eprintln!("error: --timeout-seconds must be positive");
            return ExitCode::from(2);
        }
        limits::set_timeout(Some(Duration::from_secs_f64(t)));
    }

    let default_hook = panic::take_hook();
    panic::set_hook(Box::new(move |info| {
        if info.payload().downcast_ref::<Exhausted>().is_none() {
            default_hook(info);
        }
    }));

    let result = match panic::catch_unwind(AssertUnwindSafe(|| run(&cli))) {
        Ok(r) => r,
        Err(payload) => match payload.downcast_ref::<Exhausted>() {
            Some(Exhausted::Deadline) => {
                eprintln!("error: timed out");
                return ExitCode::from(3);
            }
            Some(Exhausted::Terms(n)) => {
                eprintln!("error: intermediate polynomial with {} terms exceeds WEBFLAT_MAX_TERMS", n);
                return ExitCode::from(3);
            }
            None => panic::resume_unwind(payload),
        },
    };
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
        Err(Failure::Math(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(1)
        }
    }
}
