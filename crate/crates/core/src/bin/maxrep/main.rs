mod render;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use maxrep::critical::{critical_from_orderings, local_period_report, local_periods};
use maxrep::density::{count_lroots_in, lroot_report, max_lroot_density, witness_word};
use maxrep::harness::{
    cross_validate, run_checks_on, run_sweep, Check, CheckStatus, Outcome, SweepConfig, SweepReport,
};
use maxrep::runs::{
    assign_all, enumerate_runs, enumerate_runs_naive, Run, RunStructure, DEFAULT_ORACLE_CAP,
};
use maxrep::word::smallest_period;
use maxrep::{Error, Interval, Word};

use render::{annotate, bar, ruler};

#[derive(Parser, Debug)]
#[command(
    name = "maxrep",
    version,
    about = "Runs, Lyndon roots and critical positions of words"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Read one word per line from standard input instead of the WORD
    /// argument.
    #[arg(long, global = true)]
    stdin: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Lroot,
    Oroot,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the runs of a word.
    Runs {
        word: Option<String>,
        /// Use the quadratic reference enumeration.
        #[arg(long)]
        naive: bool,
    },
    /// Assigned position of every run.
    Assign { word: Option<String> },
    /// Lroots and Oroots of every run.
    Roots {
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = KindArg::Both)]
        kind: KindArg,
    },
    /// Local periods and critical cuts.
    Critical {
        word: Option<String>,
        #[arg(long)]
        cut: Option<usize>,
    },
    /// Lroot density of an interval, or the densest interval.
    Density {
        word: Option<String>,
        #[arg(long, num_args = 2, value_names = ["START", "END"])]
        interval: Option<Vec<usize>>,
    },
    /// Exhaustive verification sweep.
    Sweep(SweepArgs),
    /// The k-th word of the dense Lroot family.
    Witness { k: usize },
}

#[derive(clap::Args, Debug)]
struct SweepArgs {
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
    #[arg(long, default_value_t = 1)]
    min_len: usize,
    #[arg(long, default_value_t = 12)]
    max_len: usize,
    /// `all` or a comma separated list of check names.
    #[arg(long, default_value = "all", value_parser = parse_checks)]
    checks: CheckList,
    #[arg(long)]
    jobs: Option<usize>,
    /// Visit one word per letter-renaming class where the check allows it.
    #[arg(long)]
    canonical: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    max_examples: usize,
    /// Compare fast routines with their reference implementations instead
    /// of running checks.
    #[arg(long)]
    cross_validate: bool,
    #[arg(long, default_value_t = 10_000)]
    random_words: usize,
    #[arg(long, default_value_t = 200)]
    random_max_len: usize,
    #[arg(long, default_value_t = 4)]
    random_max_alphabet: usize,
    #[arg(long)]
    list_checks: bool,
}

#[derive(Clone, Debug)]
struct CheckList(Vec<Check>);

fn parse_checks(text: &str) -> Result<CheckList, String> {
    Check::parse_list(text).map(CheckList).map_err(|e| {
        let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
        format!("{e}; known checks: all, {}", names.join(", "))
    })
}

enum CliError {
    /// Bad arguments or input; exit 2.
    Usage(String),
    /// A check failed or a counterexample was found; exit 1.
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(_) | Error::OracleMismatch { .. } => {
                CliError::Failed(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// One command result in all three formats.
struct Rendered {
    json: Value,
    csv_header: Vec<&'static str>,
    csv_rows: Vec<Vec<String>>,
    text: Vec<String>,
    /// Set when the command found a violation; the output is still printed.
    failure: Option<String>,
}

impl Rendered {
    fn ok(
        json: Value,
        csv_header: Vec<&'static str>,
        csv_rows: Vec<Vec<String>>,
        text: Vec<String>,
    ) -> Self {
        Rendered {
            json,
            csv_header,
            csv_rows,
            text,
            failure: None,
        }
    }
}

fn parse_word(text: &str) -> Result<Word, CliError> {
    Word::parse(text).map_err(|e| CliError::Usage(format!("cannot parse word {text:?}: {e}")))
}

const INDENT: usize = 2;

fn word_header(w: &Word) -> Vec<String> {
    let mut lines = ruler(w.len(), INDENT);
    lines.push(format!("{}{w}", " ".repeat(INDENT)));
    lines
}

#[derive(Serialize)]
struct RunsDoc<'a> {
    word: String,
    n: usize,
    runs: &'a [Run],
}

fn cmd_runs(w: &Word, naive: bool) -> Result<Rendered, CliError> {
    let runs = if naive {
        enumerate_runs_naive(w, DEFAULT_ORACLE_CAP)?
    } else {
        enumerate_runs(w)
    };
    let n = w.len();
    let mut text = word_header(w);
    for r in &runs {
        text.push(annotate(
            INDENT,
            n,
            &bar(n, &[(r.interval(), '=')]),
            &r.to_string(),
        ));
    }
    text.push(format!("{} runs", runs.len()));
    let rows = runs
        .iter()
        .map(|r| {
            vec![
                w.to_string(),
                r.start.to_string(),
                r.end.to_string(),
                r.period.to_string(),
            ]
        })
        .collect();
    let doc = RunsDoc {
        word: w.to_string(),
        n,
        runs: &runs,
    };
    Ok(Rendered::ok(
        serde_json::to_value(doc).unwrap(),
        vec!["word", "start", "end", "period"],
        rows,
        text,
    ))
}

fn cmd_assign(w: &Word) -> Result<Rendered, CliError> {
    let rs = RunStructure::of(w.symbols());
    let failure = assign_all(w).err().map(|e| e.to_string());
    let n = w.len();
    let mut text = word_header(w);
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for a in &rs.assignments {
        let r = a.run;
        let suffix = Interval::new(a.k, r.end)?;
        text.push(annotate(
            INDENT,
            n,
            &bar(n, &[(r.interval(), '-'), (suffix, '=')]),
            &format!("{r} k={} {}", a.k, a.order),
        ));
        rows.push(vec![
            w.to_string(),
            r.start.to_string(),
            r.end.to_string(),
            r.period.to_string(),
            a.k.to_string(),
            a.order.to_string(),
        ]);
        items.push(json!({
            "start": r.start,
            "end": r.end,
            "period": r.period,
            "k": a.k,
            "ordering": a.order,
        }));
    }
    let mut ks: Vec<usize> = rs.assignments.iter().map(|a| a.k).collect();
    ks.sort_unstable();
    text.push(format!("assigned positions: {ks:?}"));
    let distinct = failure.is_none();
    Ok(Rendered {
        json: json!({"word": w.to_string(), "n": n, "distinct": distinct, "assignments": items}),
        csv_header: vec!["word", "start", "end", "period", "k", "ordering"],
        csv_rows: rows,
        text,
        failure,
    })
}

fn cmd_roots(w: &Word, kind: KindArg) -> Result<Rendered, CliError> {
    let rs = RunStructure::of(w.symbols());
    let n = w.len();
    let mut text = word_header(w);
    let mut rows = Vec::new();
    let mut items = Vec::new();
    let wanted: Vec<_> = match kind {
        KindArg::Lroot => rs.lroots.iter().collect(),
        KindArg::Oroot => rs.oroots.iter().collect(),
        KindArg::Both => rs
            .lroots
            .iter()
            .zip(&rs.oroots)
            .flat_map(|(l, o)| [l, o])
            .collect(),
    };
    for root in wanted {
        let r = root.run;
        let mark = match root.kind {
            maxrep::runs::RootKind::Lroot => 'L',
            maxrep::runs::RootKind::Oroot => 'O',
        };
        text.push(annotate(
            INDENT,
            n,
            &bar(n, &[(r.interval(), '-'), (root.interval, mark)]),
            &format!("{} {} of {r} ({})", root.kind, root.interval, root.order),
        ));
        rows.push(vec![
            w.to_string(),
            root.kind.to_string(),
            root.interval.start.to_string(),
            root.interval.end.to_string(),
            root.order.to_string(),
            r.start.to_string(),
            r.end.to_string(),
            r.period.to_string(),
        ]);
        items.push(json!({
            "kind": root.kind,
            "start": root.interval.start,
            "end": root.interval.end,
            "ordering": root.order,
            "run": r,
        }));
    }
    Ok(Rendered::ok(
        json!({"word": w.to_string(), "n": n, "roots": items}),
        vec![
            "word",
            "kind",
            "start",
            "end",
            "ordering",
            "run_start",
            "run_end",
            "period",
        ],
        rows,
        text,
    ))
}

fn cmd_critical(w: &Word, cut: Option<usize>) -> Result<Rendered, CliError> {
    let s = w.symbols();
    let period = smallest_period(s)?;
    let reports = match cut {
        Some(c) => vec![local_period_report(s, c)?],
        None => local_periods(s)?,
    };
    let mut text = vec![format!("word {w}, period {period}")];
    text.push(format!("{:>5}  {:>12}  critical", "cut", "local_period"));
    for r in &reports {
        text.push(format!(
            "{:>5}  {:>12}  {}",
            r.cut,
            r.local_period,
            if r.critical { "yes" } else { "no" }
        ));
    }
    let from_orderings = if cut.is_none() && s.len() >= 2 {
        let c = critical_from_orderings(s)?;
        text.push(format!("later greatest-suffix start: cut {c}"));
        Some(c)
    } else {
        None
    };
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                w.to_string(),
                r.cut.to_string(),
                r.local_period.to_string(),
                r.critical.to_string(),
            ]
        })
        .collect();
    let mut doc = json!({"word": w.to_string(), "n": s.len(), "period": period, "cuts": reports});
    if let Some(c) = from_orderings {
        doc["critical_from_orderings"] = json!(c);
    }
    Ok(Rendered::ok(
        doc,
        vec!["word", "cut", "local_period", "critical"],
        rows,
        text,
    ))
}

fn cmd_density(w: &Word, interval: Option<&[usize]>) -> Result<Rendered, CliError> {
    let report = match interval {
        Some(&[start, end]) => lroot_report(w, Interval::new(start, end)?)?,
        Some(_) => return Err(CliError::Usage("--interval takes START and END".into())),
        None => max_lroot_density(w)?,
    };
    let n = w.len();
    let iv = report.interval();
    let rs = RunStructure::of(w.symbols());
    let mut text = word_header(w);
    text.push(annotate(
        INDENT,
        n,
        &bar(n, &[(iv, '#')]),
        &format!("interval {iv}"),
    ));
    for l in rs.lroots.iter().filter(|l| iv.contains(&l.interval)) {
        text.push(annotate(
            INDENT,
            n,
            &bar(n, &[(l.interval, '=')]),
            &format!("Lroot of {}", l.run),
        ));
    }
    text.push(format!(
        "count {} in length {}, ratio {}, factor {}",
        report.count,
        iv.len(),
        report.ratio,
        report.factor
    ));
    let row = vec![
        report.word.clone(),
        report.start.to_string(),
        report.end.to_string(),
        report.count.to_string(),
        report.ratio.to_string(),
        report.factor.clone(),
    ];
    Ok(Rendered::ok(
        serde_json::to_value(&report).unwrap(),
        vec!["word", "start", "end", "count", "ratio", "factor"],
        vec![row],
        text,
    ))
}

fn cmd_witness(k: usize) -> Result<Rendered, CliError> {
    let (w, iv) = witness_word(k)?;
    let count = count_lroots_in(&w, iv)?;
    Ok(Rendered::ok(
        json!({"k": k, "word": w.to_string(), "start": iv.start, "end": iv.end, "count": count}),
        vec!["k", "word", "start", "end", "count"],
        vec![vec![
            k.to_string(),
            w.to_string(),
            iv.start.to_string(),
            iv.end.to_string(),
            count.to_string(),
        ]],
        vec![w.to_string()],
    ))
}

fn sweep_config(args: &SweepArgs) -> SweepConfig {
    let checks = args.checks.0.clone();
    let defaults = SweepConfig::default();
    SweepConfig {
        alphabet: args.alphabet,
        min_len: args.min_len,
        max_len: args.max_len,
        canonicalize: args.canonical,
        checks,
        jobs: args.jobs.unwrap_or(defaults.jobs),
        seed: args.seed,
        max_examples: args.max_examples,
        random_words: args.random_words,
        random_max_len: args.random_max_len,
        random_max_alphabet: args.random_max_alphabet,
        ..defaults
    }
}

fn status_name(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Holds => "holds",
        CheckStatus::Falsified => "falsified",
        CheckStatus::VerifiedAtScale => "verified-at-scale",
        CheckStatus::Counterexample => "counterexample",
    }
}

fn render_sweep(report: &SweepReport) -> Rendered {
    let cfg = &report.config;
    let mut text = vec![format!(
        "sweep over {} letters, lengths {}..={}{}: {} words",
        cfg.alphabet,
        cfg.min_len,
        cfg.max_len,
        if cfg.canonicalize {
            " (canonical where allowed)"
        } else {
            ""
        },
        report.words
    )];
    text.push(format!(
        "{:<26} {:<10} {:<18} {:>10} {:>10}",
        "check", "class", "status", "words", "violations"
    ));
    let mut rows = Vec::new();
    for c in &report.checks {
        let class = match c.class {
            maxrep::harness::CheckClass::Theorem => "theorem",
            maxrep::harness::CheckClass::Conjecture => "conjecture",
        };
        text.push(format!(
            "{:<26} {:<10} {:<18} {:>10} {:>10}",
            c.check.name(),
            class,
            status_name(c.status),
            c.words,
            c.violations
        ));
        let first = c.examples.first();
        rows.push(vec![
            c.check.name().to_string(),
            class.to_string(),
            status_name(c.status).to_string(),
            c.canonical.to_string(),
            c.words.to_string(),
            c.violations.to_string(),
            first.map(|v| v.word.clone()).unwrap_or_default(),
            first
                .and_then(|v| v.interval)
                .map(|iv| iv.to_string())
                .unwrap_or_default(),
            first.map(|v| v.detail.clone()).unwrap_or_default(),
        ]);
        for v in c.examples.iter().take(3) {
            let at = v.interval.map(|iv| format!(" {iv}")).unwrap_or_default();
            text.push(format!("    {:?}{at}: {}", v.word, v.detail));
        }
    }
    match &report.outcome {
        Outcome::Completed => text.push("outcome: completed".into()),
        Outcome::Falsified {
            last_len,
            counterexample,
        } => text.push(format!(
            "outcome: stopped after length {last_len}, {} fails on {:?}",
            counterexample.check, counterexample.word
        )),
    }
    let ex = &report.extremal;
    if let Some(r) = &ex.max_runs_ratio {
        text.push(format!("max runs/n: {}/{} on {:?}", r.runs, r.n, r.word));
    }
    if let Some(d) = &ex.max_lroot_density {
        text.push(format!(
            "max Lroot density: {} in [{}..{}] of {:?}",
            d.count, d.start, d.end, d.word
        ));
    }
    if !ex.lroot_max_by_length.is_empty() {
        let per: Vec<String> = ex
            .lroot_max_by_length
            .iter()
            .map(|m| format!("{}:{}", m.len, m.count))
            .collect();
        text.push(format!("max Lroots by interval length: {}", per.join(" ")));
    }
    let failure = (!report.is_clean()).then(|| {
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.violations > 0)
            .map(|c| c.check.name())
            .collect();
        format!("violations found: {}", failing.join(", "))
    });
    Rendered {
        json: serde_json::to_value(report).unwrap(),
        csv_header: vec![
            "check",
            "class",
            "status",
            "canonical",
            "words",
            "violations",
            "first_word",
            "first_interval",
            "first_detail",
        ],
        csv_rows: rows,
        text,
        failure,
    }
}

fn cmd_sweep(args: &SweepArgs, words: Option<Vec<Word>>) -> Result<Rendered, CliError> {
    if args.list_checks {
        let text = Check::ALL
            .iter()
            .map(|c| format!("{:<26} {}", c.name(), c.about()))
            .collect();
        let items: Vec<Value> = Check::ALL
            .iter()
            .map(|c| json!({"check": c, "class": c.class(), "about": c.about()}))
            .collect();
        let rows = Check::ALL
            .iter()
            .map(|c| vec![c.name().to_string(), c.about().to_string()])
            .collect();
        return Ok(Rendered::ok(
            Value::Array(items),
            vec!["check", "about"],
            rows,
            text,
        ));
    }
    let cfg = sweep_config(args);
    let started = Instant::now();
    let rendered = if args.cross_validate {
        match cross_validate(&cfg) {
            Ok(r) => {
                let text = vec![format!(
                    "cross validation passed: {} exhaustive, {} random, {} local-period words",
                    r.exhaustive_words, r.random_words, r.local_period_words
                )];
                let row = vec![
                    r.exhaustive_words.to_string(),
                    r.random_words.to_string(),
                    r.local_period_words.to_string(),
                ];
                Rendered::ok(
                    serde_json::to_value(&r).unwrap(),
                    vec!["exhaustive_words", "random_words", "local_period_words"],
                    vec![row],
                    text,
                )
            }
            Err(e @ Error::OracleMismatch { .. }) => {
                let msg = e.to_string();
                Rendered {
                    json: json!({"mismatch": msg}),
                    csv_header: vec!["mismatch"],
                    csv_rows: vec![vec![msg.clone()]],
                    text: vec![msg.clone()],
                    failure: Some(msg),
                }
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        let report = match words {
            Some(words) => run_checks_on(&words, &cfg)?,
            None => run_sweep(&cfg)?,
        };
        render_sweep(&report)
    };
    eprintln!("elapsed {:.3}s", started.elapsed().as_secs_f64());
    Ok(rendered)
}

fn read_stdin_words() -> Result<Vec<Word>, CliError> {
    let mut words = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line.map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
        let line = line.trim();
        if !line.is_empty() {
            words.push(parse_word(line)?);
        }
    }
    Ok(words)
}

fn emit(format: Format, outputs: &[Rendered], batch: bool) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |e: io::Error| CliError::Failed(format!("cannot write output: {e}"));
    match format {
        Format::Json => {
            let doc = if batch {
                Value::Array(outputs.iter().map(|o| o.json.clone()).collect())
            } else {
                outputs
                    .first()
                    .map(|o| o.json.clone())
                    .unwrap_or(Value::Null)
            };
            serde_json::to_writer_pretty(&mut out, &doc)
                .map_err(|e| CliError::Failed(e.to_string()))?;
            writeln!(out).map_err(io_err)?;
        }
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(out);
            if let Some(first) = outputs.first() {
                wtr.write_record(&first.csv_header)
                    .map_err(|e| CliError::Failed(e.to_string()))?;
            }
            for o in outputs {
                for row in &o.csv_rows {
                    wtr.write_record(row)
                        .map_err(|e| CliError::Failed(e.to_string()))?;
                }
            }
            wtr.flush().map_err(io_err)?;
        }
        Format::Text => {
            for (i, o) in outputs.iter().enumerate() {
                if i > 0 {
                    writeln!(out).map_err(io_err)?;
                }
                for line in &o.text {
                    writeln!(out, "{line}").map_err(io_err)?;
                }
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Option<String>, CliError> {
    let words: Vec<Word> = match &cli.command {
        Command::Witness { .. } => Vec::new(),
        Command::Sweep(_) if !cli.stdin => Vec::new(),
        _ if cli.stdin => read_stdin_words()?,
        Command::Runs { word, .. }
        | Command::Assign { word }
        | Command::Roots { word, .. }
        | Command::Critical { word, .. }
        | Command::Density { word, .. } => match word {
            Some(text) => vec![parse_word(text)?],
            None => return Err(CliError::Usage("missing WORD (or pass --stdin)".into())),
        },
        Command::Sweep(_) => unreachable!(),
    };
    let outputs: Vec<Rendered> = match &cli.command {
        Command::Witness { k } => vec![cmd_witness(*k)?],
        Command::Sweep(args) => vec![cmd_sweep(args, cli.stdin.then_some(words))?],
        command => words
            .iter()
            .map(|w| match command {
                Command::Runs { naive, .. } => cmd_runs(w, *naive),
                Command::Assign { .. } => cmd_assign(w),
                Command::Roots { kind, .. } => cmd_roots(w, *kind),
                Command::Critical { cut, .. } => cmd_critical(w, *cut),
                Command::Density { interval, .. } => cmd_density(w, interval.as_deref()),
                Command::Sweep(_) | Command::Witness { .. } => unreachable!(),
            })
            .collect::<Result<_, _>>()?,
    };
    let batch = cli.stdin && !matches!(cli.command, Command::Sweep(_));
    emit(cli.format, &outputs, batch)?;
    let failures: Vec<String> = outputs.into_iter().filter_map(|o| o.failure).collect();
    Ok((!failures.is_empty()).then(|| failures.join("; ")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(failure)) => {
            eprintln!("maxrep: {failure}");
            ExitCode::from(1)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("maxrep: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("maxrep: {msg}");
            ExitCode::from(2)
        }
    }
}
