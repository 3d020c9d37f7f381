//! Command-line driver for the Onsager algebra kernel: element construction,
//! bracket computation, decomposition, center solving, relation-suite
//! verification, q -> 1 limit checks and the spanning oracle.
//!
//! Exit codes: 0 when everything in scope passes, 1 when a check fails
//! (with JSON detail on stdout), 2 for usage errors.

mod config;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use config::Defaults;
use onsager_ace::dsl;
use onsager_ace::gaussian::GaussianRational;
use onsager_ace::loop_algebra::{bracket, fam, FamilyName, FamilyTag};
use onsager_ace::ncpoly::NcPoly;
use onsager_ace::qlimit::{
    ace_relation_legs, dolan_grady_residual, eval_coeffs_at_one, pbw_limit_identity,
    q_dolan_grady, relation_weight, rescale_limit, validate_on_matrices, PbwRoot, RelationSide,
};
use onsager_ace::report::{sort_reports, CheckReport};
use onsager_ace::structure::{center_solver, closure_span, decompose, CenterSpace};
use onsager_ace::window::Window;
use serde_json::json;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "onsager-ace", version, about = "Exact verification harness for the Onsager algebra and its alternating central extension")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family element, e.g. `elem cB[2]`.
    Elem { name: String },
    /// Print the bracket of two family elements.
    Bracket { x: String, y: String },
    /// Split an element of the extended algebra into its Onsager-algebra
    /// part and its central part.
    Decompose { x: String },
    /// Print a basis of the center of the windowed extended algebra.
    Center {
        #[arg(long)]
        window: Option<usize>,
        /// Restrict to the trace-zero (Onsager) case instead.
        #[arg(long)]
        trace_zero: bool,
    },
    /// Run a relation suite (.lrel) against the matrix families.
    Verify {
        suite: PathBuf,
        #[arg(long)]
        kmax: Option<i64>,
        /// Override a family binding, e.g. --bind G=cG (repeatable).
        #[arg(long = "bind", value_name = "NAME=TAG")]
        bind: Vec<String>,
    },
    /// Run q -> 1 limit checks.
    Limit {
        #[arg(value_enum)]
        target: LimitTarget,
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Verify that the bracket closure of the generators spans the window.
    Span {
        #[arg(value_enum)]
        algebra: SpanAlgebra,
        #[arg(long)]
        window: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LimitTarget {
    /// The two q-deformed Dolan/Grady relations.
    Dg,
    /// The eleven defining relations of the extended q-algebra.
    Ace,
    /// The PBW recursion limits, validated on matrices.
    Pbw,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpanAlgebra {
    /// The Onsager algebra, generated by W[0], W[1].
    O,
    /// The extension, generated by cW[0], cW[1] and the central prefix.
    Ace,
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: &Cli) -> Result<i32> {
    let defaults = Defaults::load()?;
    match &cli.command {
        Command::Elem { name } => {
            let elem = parse_element(name)?;
            match cli.format {
                Format::Text => println!("{elem}"),
                Format::Json => println!("{}", elem.to_json()),
            }
            Ok(0)
        }
        Command::Bracket { x, y } => {
            let result = bracket(&parse_element(x)?, &parse_element(y)?);
            match cli.format {
                Format::Text => println!("{result}"),
                Format::Json => println!("{}", result.to_json()),
            }
            Ok(0)
        }
        Command::Decompose { x } => {
            let parts = decompose(&parse_element(x)?)
                .map_err(|e| anyhow!("{x}: {e}"))?;
            match cli.format {
                Format::Text => {
                    println!("o_part: {}", parts.o_part);
                    println!("z_part: {}", parts.z_part);
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "o_part": parts.o_part.to_json(),
                        "z_part": parts.z_part.to_json(),
                    })
                ),
            }
            Ok(0)
        }
        Command::Center { window, trace_zero } => {
            let bound = window.unwrap_or(defaults.window);
            let space = if *trace_zero {
                CenterSpace::TraceZero
            } else {
                CenterSpace::Ace
            };
            let basis = center_solver(Window::new(bound), space);
            match cli.format {
                Format::Text => {
                    println!("center basis in window {bound}: {} elements", basis.len());
                    for v in &basis {
                        println!("  {}", v.to_element());
                    }
                }
                Format::Json => {
                    let items: Vec<_> =
                        basis.iter().map(|v| v.to_element().to_json()).collect();
                    println!("{}", json!({ "window": bound, "basis": items }));
                }
            }
            Ok(0)
        }
        Command::Verify { suite, kmax, bind } => {
            let text = std::fs::read_to_string(suite)
                .with_context(|| format!("reading {}", suite.display()))?;
            let ast = dsl::parse(&text).map_err(|e| anyhow!("{}: {e}", suite.display()))?;
            let mut bindings = dsl::Bindings::identity_for(&ast).or_else(|_| {
                if bind.is_empty() {
                    Err(anyhow!("suite declares families with no default binding; use --bind"))
                } else {
                    Ok(dsl::Bindings::new())
                }
            })?;
            for spec in bind {
                let (name, tag) = spec
                    .split_once('=')
                    .ok_or_else(|| anyhow!("--bind expects NAME=TAG, got {spec:?}"))?;
                let tag = FamilyTag::by_name(tag)
                    .ok_or_else(|| anyhow!("unknown family tag {tag:?}"))?;
                bindings = bindings.bind(name, tag);
            }
            let report = dsl::instantiate_and_check(&ast, &bindings, kmax.unwrap_or(defaults.kmax))
                .map_err(|e| anyhow!("{e}"))?;
            emit_suite_report(cli.format, &report);
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Limit { target, bound } => {
            let bound = bound.unwrap_or(defaults.bound);
            let reports = match target {
                LimitTarget::Dg => limit_dg_reports(),
                LimitTarget::Ace => limit_ace_reports(bound),
                LimitTarget::Pbw => limit_pbw_reports(bound),
            };
            emit_check_reports(cli.format, reports)
        }
        Command::Span {
            algebra,
            window,
            depth,
        } => {
            let bound = window.unwrap_or(defaults.window);
            let depth = depth.unwrap_or(defaults.depth);
            let report = span_report(*algebra, bound, depth);
            emit_check_reports(cli.format, vec![report])
        }
    }
}

fn parse_element(text: &str) -> Result<onsager_ace::LoopElement> {
    let name: FamilyName = text
        .parse()
        .map_err(|e| anyhow!("{text:?}: {e}"))?;
    name.element().map_err(|e| anyhow!("{e}"))
}

fn emit_suite_report(format: Format, report: &dsl::SuiteReport) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => {
            let pass = report.count(dsl::InstanceStatus::Pass);
            let fail = report.count(dsl::InstanceStatus::Fail);
            let skipped = report.count(dsl::InstanceStatus::Skipped);
            println!("{pass} passed, {fail} failed, {skipped} skipped");
            if fail > 0 {
                // Failures always come with machine-readable detail.
                let detail: Vec<_> = report.failures().collect();
                println!("{}", serde_json::to_value(detail).expect("serializable"));
            }
        }
    }
}

fn emit_check_reports(format: Format, mut reports: Vec<CheckReport>) -> Result<i32> {
    sort_reports(&mut reports);
    let all_passed = reports.iter().all(|r| r.passed());
    match format {
        Format::Json => println!("{}", serde_json::to_value(&reports).expect("serializable")),
        Format::Text => {
            for r in &reports {
                let params = r
                    .parameters
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                let status = if r.passed() { "ok" } else { "FAIL" };
                println!("{status:4} {} [{params}] {}", r.check_id, r.identity);
            }
            if !all_passed {
                let failing: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
                println!("{}", serde_json::to_value(&failing).expect("serializable"));
            }
        }
    }
    Ok(if all_passed { 0 } else { 1 })
}

fn limit_dg_reports() -> Vec<CheckReport> {
    (1u8..=2)
        .map(|which| {
            let check_id = format!("q_dolan_grady_{which}_limit");
            let identity =
                "rescaled q-relation at q = 1 equals the classical relation".to_string();
            let outcome = rescale_limit(&q_dolan_grady(which).expect("valid index"), 4);
            let classical = dolan_grady_residual::<GaussianRational>(which).expect("valid index");
            match outcome {
                Ok(lim) if lim == classical => CheckReport::pass(&check_id, &identity),
                Ok(lim) => CheckReport::fail(&check_id, &identity, format!("limit {lim}")),
                Err(e) => CheckReport::fail(&check_id, &identity, e.to_string()),
            }
            .with_param("which", which as i64)
        })
        .collect()
}

fn limit_ace_reports(bound: u32) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    for id in 1u8..=11 {
        let weight = relation_weight(id).expect("valid id");
        let legs = ace_relation_legs(id, 0, 0, RelationSide::Q)
            .expect("valid id")
            .len();
        for leg in 0..legs {
            let check_id = format!("ace_relation_{id}_leg_{leg}_limit");
            let identity =
                "rescaled defining relation at q = 1 equals its classical form".to_string();
            let mut witness = None;
            'outer: for k in 0..=bound as i64 {
                for l in 0..=bound as i64 {
                    let q = &ace_relation_legs(id, k, l, RelationSide::Q).expect("in range")[leg];
                    let c = &ace_relation_legs(id, k, l, RelationSide::Classical)
                        .expect("in range")[leg];
                    let ok = match (rescale_limit(q, weight), eval_coeffs_at_one(c)) {
                        (Ok(lim), Ok(classical)) => lim == classical,
                        _ => false,
                    };
                    if !ok {
                        witness = Some(format!("first mismatch at (k, l) = ({k}, {l})"));
                        break 'outer;
                    }
                }
            }
            let report = match witness {
                None => CheckReport::pass(&check_id, &identity),
                Some(w) => CheckReport::fail(&check_id, &identity, w),
            };
            reports.push(
                report
                    .with_param("id", id as i64)
                    .with_param("leg", leg as i64)
                    .with_param("bound", bound as i64),
            );
        }
    }
    reports
}

fn limit_pbw_reports(bound: u32) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    for root in [PbwRoot::Alpha0, PbwRoot::Alpha1, PbwRoot::Delta] {
        for n in 0..=bound {
            if root == PbwRoot::Delta && n == 0 {
                continue;
            }
            let root_name = match root {
                PbwRoot::Alpha0 => "alpha0",
                PbwRoot::Alpha1 => "alpha1",
                PbwRoot::Delta => "delta",
            };
            let check_id = format!("pbw_limit_{root_name}_{n}");
            let identity =
                "substituted recursion at q = 1 vanishes on the matrices".to_string();
            let report = match pbw_limit_identity(n, root) {
                Ok(id_poly) => {
                    if validate_on_matrices(&id_poly) {
                        CheckReport::pass(&check_id, &identity)
                    } else {
                        CheckReport::fail(&check_id, &identity, residual_witness(&id_poly))
                    }
                }
                Err(e) => CheckReport::fail(&check_id, &identity, e.to_string()),
            };
            reports.push(report.with_param("n", n as i64));
        }
    }
    reports
}

fn residual_witness(p: &NcPoly<GaussianRational>) -> String {
    format!("nonzero residual {p}")
}

fn span_report(algebra: SpanAlgebra, bound: usize, depth: usize) -> CheckReport {
    let window = Window::new(bound);
    let (check_id, identity, generators, expected) = match algebra {
        SpanAlgebra::O => (
            "span_onsager",
            "two generators span the windowed algebra",
            vec![fam(FamilyTag::W, 0), fam(FamilyTag::W, 1)],
            3 * bound + 1,
        ),
        SpanAlgebra::Ace => {
            let mut gens = vec![fam(FamilyTag::CW, 0), fam(FamilyTag::CW, 1)];
            let half = GaussianRational::ratio(1, 2);
            for k in 1..=bound as i64 {
                gens.push((&fam(FamilyTag::CB, k) + &fam(FamilyTag::CB, -k)).scale(&half));
            }
            (
                "span_extension",
                "generators plus central prefix span the windowed algebra",
                gens,
                4 * bound + 1,
            )
        }
    };
    let rank = closure_span(&generators, depth, window);
    let report = if rank == expected {
        CheckReport::pass(check_id, identity)
    } else {
        CheckReport::fail(
            check_id,
            identity,
            format!("rank {rank}, expected {expected}"),
        )
    };
    report
        .with_param("window", bound as i64)
        .with_param("depth", depth as i64)
        .with_param("rank", rank as i64)
}
