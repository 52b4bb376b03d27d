//! `hopfo` — a command-line workbench for exact Hopfological algebra.
//!
//! Exit codes: 0 = all checks passed, 1 = a check failed, 2 = input error.

mod report;
mod selectors;

use std::process::ExitCode;

use hopfo::suites::{run_suite, SuiteConfig, SUITE_NAMES};

use report::{emit, Format, Report};
use selectors::{load_hopf, parse_equivariant, parse_module};

const HELP: &str = r#"hopfo — exact computations in Hopfological algebra

USAGE:
    hopfo validate <files...>
    hopfo compute <what> [options]
    hopfo suite <name|all> [options]

COMMANDS:
    validate    Validate hopf.json / module.json / hmodcat.json / eqmod.json
                files; diagnostics go to stderr.
    compute     One computation. <what> is one of:
                    integral homology stablehom cone suspend ext1 smash jordan
    suite       A verification suite. <name> is one of:
                    hopf-axioms homology-basics stablehom-agreement cone-lemmas
                    adjunctions a-split-lemmas les hovey cntr-pair
                or `all`. Suites fan out over a worker pool sized by
                HOPFO_THREADS (default 1).

OPTIONS:
    --hopf <name|file>   Hopf algebra: catalog shorthand or a hopf.json path.
                         Catalog grammar: divided_power:p, group:n1xn2..:p|q,
                         taft:n:p, sweedler:p.
    --a <name>           Module category: k (default), truncpoly:n, a2.
    --module, -m <sel>   Module selector (see below).
    -n <sel>             Second module selector (stablehom, ext1).
    --window <w>         Suspension window for Σ-predicates (default 3).
    --seed <s>           PRNG seed echoed into reports (default 0).
    --format <fmt>       json | table (default table).
    --out <path>         Write the report to a file instead of stdout.

MODULE SELECTORS:
    k, H (= regular), kereps, hmodlambda, J<k> (divided_power only),
    char<a> (taft/sweedler characters), sums with `+` (e.g. J2+J1),
    a path to a module.json / eqmod.json file, or — when --a is given —
    a named member of the built-in (A, H) catalog.

EXIT CODES:
    0 all checks passed     1 a check failed     2 input error
"#;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

struct Options {
    hopf: Option<String>,
    cat: Option<String>,
    module: Option<String>,
    second: Option<String>,
    window: u32,
    seed: u64,
    format: Format,
    out: Option<String>,
    positional: Vec<String>,
}

fn parse_options(args: &[String]) -> Result<Options, String> {
    let mut o = Options {
        hopf: None,
        cat: None,
        module: None,
        second: None,
        window: 3,
        seed: 0,
        format: Format::Table,
        out: None,
        positional: Vec::new(),
    };
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let mut value = |what: &str| -> Result<String, String> {
            it.next()
                .map(|s| s.to_string())
                .ok_or_else(|| format!("{what} needs a value"))
        };
        match a.as_str() {
            "--hopf" => o.hopf = Some(value("--hopf")?),
            "--a" => o.cat = Some(value("--a")?),
            "--module" | "--m" | "-m" => o.module = Some(value("--module")?),
            "--n" | "-n" => o.second = Some(value("-n")?),
            "--window" => {
                o.window = value("--window")?
                    .parse()
                    .map_err(|_| "--window must be a nonnegative integer".to_string())?;
                if o.window < 1 {
                    return Err("--window must be at least 1".into());
                }
            }
            "--seed" => {
                o.seed = value("--seed")?
                    .parse()
                    .map_err(|_| "--seed must be a 64-bit unsigned integer".to_string())?
            }
            "--format" => {
                o.format = match value("--format")?.as_str() {
                    "json" => Format::Json,
                    "table" => Format::Table,
                    other => return Err(format!("unknown format `{other}`")),
                }
            }
            "--out" => o.out = Some(value("--out")?),
            other if other.starts_with('-') => {
                return Err(format!("unknown option `{other}`"))
            }
            other => o.positional.push(other.to_string()),
        }
    }
    Ok(o)
}

fn run(args: &[String]) -> Result<bool, String> {
    let Some(command) = args.first() else {
        print!("{HELP}");
        return Ok(true);
    };
    match command.as_str() {
        "help" | "--help" | "-h" => {
            print!("{HELP}");
            Ok(true)
        }
        "version" | "--version" => {
            println!("hopfo {}", env!("CARGO_PKG_VERSION"));
            Ok(true)
        }
        "validate" => cmd_validate(&args[1..]),
        "compute" => cmd_compute(&args[1..]),
        "suite" => cmd_suite(&args[1..]),
        other => Err(format!("unknown command `{other}`; try `hopfo help`")),
    }
}

fn cmd_validate(args: &[String]) -> Result<bool, String> {
    let o = parse_options(args)?;
    if o.positional.is_empty() {
        return Err("validate needs at least one file".into());
    }
    let mut all_valid = true;
    for path in &o.positional {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
        let obj = value
            .as_object()
            .ok_or_else(|| format!("{path}: expected a JSON object"))?;
        let outcome = if obj.contains_key("antipode") {
            hopfo::hopfcore::hopf_from_json(&value).map(|h| format!("hopf algebra, dim {}", h.dim()))
        } else if obj.contains_key("compose") {
            hopfo::equivariant::category_from_json(&value)
                .map(|c| format!("module category, dim {}", c.total_dim()))
        } else if obj.contains_key("a_action") {
            hopfo::equivariant::eqmod_from_json(&value)
                .map(|m| format!("equivariant module, dim {}", m.dim()))
        } else if obj.contains_key("action") {
            hopfo::hmodules::hmodule_from_json(&value, None)
                .map(|m| format!("H-module, dim {}", m.dim()))
        } else {
            return Err(format!("{path}: unrecognized schema"));
        };
        match outcome {
            Ok(desc) => println!("{path}: valid ({desc})"),
            Err(e) => {
                eprintln!("{path}: INVALID: {e}");
                all_valid = false;
            }
        }
    }
    Ok(all_valid)
}

fn cmd_compute(args: &[String]) -> Result<bool, String> {
    let o = parse_options(args)?;
    let what = o
        .positional
        .first()
        .ok_or("compute needs a target, e.g. `hopfo compute homology ...`")?
        .clone();
    let hopf_name = o.hopf.clone().ok_or("compute needs --hopf")?;
    let hopf = load_hopf(&hopf_name)?;
    let mut rep = Report::new(&format!("compute {what}"), o.seed, o.window);

    match what.as_str() {
        "integral" => {
            let lambda = hopf.left_integral();
            let terms: Vec<String> = lambda
                .iter()
                .zip(hopf.basis_labels())
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, l)| format!("{c}·{l}"))
                .collect();
            rep.value("lambda", &terms.join(" + "));
            rep.value(
                "semisimple",
                &(!hopf.counit_of_element(hopf.left_integral()).is_zero()).to_string(),
            );
        }
        "homology" => {
            let sel = o.module.clone().ok_or("homology needs --module")?;
            let m = parse_module(&hopf, &sel)?;
            let hd = hopfo::hmodules::homology(&m);
            rep.value("dim_Z", &hd.z().dim().to_string());
            rep.value("dim_B", &hd.b().dim().to_string());
            rep.value("dim_H", &hd.dim_h().to_string());
        }
        "jordan" => {
            let sel = o.module.clone().ok_or("jordan needs --module")?;
            let m = parse_module(&hopf, &sel)?;
            let blocks = hopfo::hmodules::jordan_decompose(&m).map_err(|e| e.to_string())?;
            let bs: Vec<String> = blocks.iter().map(|b| b.to_string()).collect();
            rep.value("blocks", &format!("[{}]", bs.join(", ")));
        }
        "cone" | "suspend" => {
            let sel = o.module.clone().ok_or("cone/suspend needs --module")?;
            let m = parse_module(&hopf, &sel)?;
            let out = if what == "cone" {
                hopfo::hmodules::cone(&m)
            } else {
                hopfo::hmodules::suspend(&m)
            };
            rep.value("dim", &out.dim().to_string());
            rep.value(
                "dim_H",
                &hopfo::hmodules::homology(&out).dim_h().to_string(),
            );
            if let Some(path) = &o.out {
                let json = hopfo::hmodules::hmodule_to_json(&out);
                std::fs::write(path, serde_json::to_string_pretty(&json).unwrap())
                    .map_err(|e| e.to_string())?;
                rep.value("written", path);
            }
        }
        "stablehom" => {
            let cat_name = o.cat.clone().unwrap_or_else(|| "k".to_string());
            let msel = o.module.clone().ok_or("stablehom needs --module")?;
            let nsel = o.second.clone().ok_or("stablehom needs -n")?;
            let m = parse_equivariant(&hopf, &cat_name, &msel)?;
            let n = parse_equivariant(&hopf, &cat_name, &nsel)?;
            let sh = hopfo::homotopy::stable_hom(&m, &n);
            rep.value("dim", &sh.dim.to_string());
            rep.value("dim_hom", &sh.hom.dim().to_string());
        }
        "ext1" => {
            let cat_name = o.cat.clone().unwrap_or_else(|| "k".to_string());
            let msel = o.module.clone().ok_or("ext1 needs --module")?;
            let nsel = o.second.clone().ok_or("ext1 needs -n")?;
            let m = parse_equivariant(&hopf, &cat_name, &msel)?;
            let n = parse_equivariant(&hopf, &cat_name, &nsel)?;
            let e = hopfo::cotorsion::ext1(&m, &n);
            rep.value("dim", &e.dim.to_string());
        }
        "smash" => {
            let cat_name = o.cat.clone().unwrap_or_else(|| "k".to_string());
            let cat = std::sync::Arc::new(
                hopfo::equivariant::category_by_name(&cat_name, &hopf)
                    .map_err(|e| e.to_string())?,
            );
            let sm = hopfo::equivariant::smash(&cat).map_err(|e| e.to_string())?;
            rep.value("dim", &sm.total_dim().to_string());
            if let Some(path) = &o.out {
                let json = hopfo::equivariant::category_to_json(sm.algebra());
                std::fs::write(path, serde_json::to_string_pretty(&json).unwrap())
                    .map_err(|e| e.to_string())?;
                rep.value("written", path);
            }
        }
        other => return Err(format!("unknown compute target `{other}`")),
    }
    emit(&rep, o.format, o.out.as_deref().filter(|_| what != "cone" && what != "suspend" && what != "smash"))?;
    Ok(true)
}

fn cmd_suite(args: &[String]) -> Result<bool, String> {
    let o = parse_options(args)?;
    let name = o
        .positional
        .first()
        .ok_or("suite needs a name, e.g. `hopfo suite hovey`")?
        .clone();
    let mut config = SuiteConfig {
        window: o.window,
        seed: o.seed,
        pairs: None,
        algebras: None,
    };
    if let Some(h) = &o.hopf {
        let a = o.cat.clone().unwrap_or_else(|| "k".to_string());
        config.pairs = Some(vec![(a, h.clone())]);
        config.algebras = Some(vec![o.hopf.clone().unwrap()]);
    }

    let names: Vec<&str> = if name == "all" {
        SUITE_NAMES.to_vec()
    } else {
        if !SUITE_NAMES.contains(&name.as_str()) {
            return Err(format!(
                "unknown suite `{name}`; known: {}",
                SUITE_NAMES.join(", ")
            ));
        }
        vec![SUITE_NAMES
            .iter()
            .find(|s| **s == name)
            .copied()
            .expect("checked")]
    };

    let reports = run_parallel(&names, &config)?;
    let mut all_pass = true;
    for rep in &reports {
        let mut out = Report::new(&format!("suite {}", rep.suite), rep.seed, rep.window);
        for row in &rep.rows {
            out.check(&row.check, &row.subject, row.pass, &row.detail);
        }
        all_pass &= rep.all_pass();
        emit(&out, o.format, o.out.as_deref())?;
    }
    Ok(all_pass)
}

/// Fan a list of suites across a worker pool sized by HOPFO_THREADS
/// (default 1); results come back in input order.
fn run_parallel(
    names: &[&str],
    config: &SuiteConfig,
) -> Result<Vec<hopfo::suites::SuiteReport>, String> {
    let threads: usize = std::env::var("HOPFO_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1)
        .max(1);
    if threads == 1 || names.len() == 1 {
        return names
            .iter()
            .map(|n| run_suite(n, config).map_err(|e| e.to_string()))
            .collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results: Vec<std::sync::Mutex<Option<Result<hopfo::suites::SuiteReport, String>>>> =
        names.iter().map(|_| std::sync::Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..threads.min(names.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= names.len() {
                    break;
                }
                let r = run_suite(names[i], config).map_err(|e| e.to_string());
                *results[i].lock().expect("poisoned") = Some(r);
            });
        }
    });
    results
        .into_iter()
        .map(|m| m.into_inner().expect("poisoned").expect("filled"))
        .collect()
}
