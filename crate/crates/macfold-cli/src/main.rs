//! Command-line front end: statistics, coefficient tables, class listings,
//! folding traces, Schur-side utilities, and the verification suites.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 unsupported shape,
//! 3 verification failure, 4 invariant violation.

mod render;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use macfold::dual_equiv::{
    class_fund_gf, enumerate_classes, super_standard_representative, uses_twisted, EquivClass,
    GeneratorKind,
};
use macfold::expansion::FundExpansion;
use macfold::filling::{ShapeGeometry, ShapedFilling};
use macfold::fold::{phi_mu, phi_mu_with_trace};
use macfold::macdonald::{
    compare_methods, kostka_macdonald_folding, kostka_macdonald_oracle, macdonald_fund,
    EnumerationBudget, Method,
};
use macfold::partition::Partition;
use macfold::perm::Permutation;
use macfold::schur::{decompose_to_schur, enumerate_syt, syt_count, SchurContext};
use macfold::stats::{
    enumerate_super_standard, inverse_descents, is_super_standard, mu_descent_cells,
    mu_inversion_pairs, stats_mu,
};
use macfold::verify::{run_suite, Suite, VerifyConfig};
use macfold::Error;

use render::{fund_table, partition_label, schur_table, weight_monomial, OutputFormat};

#[derive(Parser)]
#[command(name = "macfold", version, about = "Macdonald polynomial combinatorics on permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format where applicable
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Worker threads for the parallel enumerations (RAYON_NUM_THREADS is
    /// honored when absent)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write the rendered output to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct BudgetArg {
    /// Largest n for which full enumerations may run
    #[arg(long, default_value_t = EnumerationBudget::DEFAULT_MAX_N)]
    budget: usize,
}

impl BudgetArg {
    fn get(&self) -> EnumerationBudget {
        EnumerationBudget::with_max_n(self.budget)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Shape statistics of one filled diagram
    Stats {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        word: Permutation,
    },
    /// The full polynomial of a shape in the fundamental or Schur basis
    Hmu {
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value = "fundamental")]
        basis: Basis,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Coefficient tables by the enumeration route, the folding route, or both
    Kostka {
        #[arg(long)]
        mu: Partition,
        #[arg(long, value_enum, default_value = "oracle")]
        method: MethodArg,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Equivalence classes of S_n under one involution family
    Classes {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "standard")]
        kind: KindArg,
        #[arg(long)]
        mu: Option<Partition>,
        /// Write the class graph in DOT format to this path
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Fold a word from the column shape to the given shape
    Fold {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        word: Permutation,
        /// Print every intermediate step
        #[arg(long)]
        trace: bool,
    },
    /// Schur-side utilities: tableaux of a shape, basis decomposition
    Schur {
        /// Enumerate the standard tableaux of this shape
        #[arg(long)]
        syt: Option<Partition>,
        /// Decompose a fundamental expansion given as JSON (or - for stdin)
        #[arg(long)]
        decompose: Option<String>,
    },
    /// Super-standard permutations by weight
    Superstandard {
        /// List the super-standard permutations of this weight
        #[arg(long)]
        lambda: Option<Partition>,
        /// Tabulate counts for every weight of this size
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run the verification suites
    Verify {
        /// Suite to run (all when absent)
        #[arg(long)]
        suite: Option<Suite>,
        /// Override the exhaustive size bounds
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
enum Basis {
    Fundamental,
    Schur,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
enum MethodArg {
    Oracle,
    Folding,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
enum KindArg {
    Standard,
    Twisted,
    Mu,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::UnsupportedShape { .. } => 2,
                Error::InvariantViolation(_) | Error::NotSymmetric(_) => 4,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    match &cli.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidPermutation(format!("cannot write {}: {e}", path.display()))),
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Stats { mu, word } => {
            let text = stats_command(mu, word, cli.format)?;
            emit(cli, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Hmu { mu, basis, budget } => {
            let text = match basis {
                Basis::Fundamental => {
                    let f = macdonald_fund(mu, budget.get())?;
                    fund_table(&f, cli.format)
                }
                Basis::Schur => {
                    let table = kostka_macdonald_oracle(mu, budget.get())?;
                    schur_table(&table.entries, cli.format)
                }
            };
            emit(cli, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Kostka { mu, method, budget } => kostka_command(cli, mu, *method, budget.get()),
        Command::Classes {
            n,
            kind,
            mu,
            dot,
            budget,
        } => classes_command(cli, *n, *kind, mu.as_ref(), dot.as_deref(), budget.get()),
        Command::Fold { mu, word, trace } => {
            let text = fold_command(mu, word, *trace, cli.format)?;
            emit(cli, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Schur { syt, decompose } => {
            let text = match (syt, decompose) {
                (Some(shape), None) => syt_command(shape, cli.format),
                (None, Some(input)) => {
                    let json = if input == "-" {
                        let mut buf = String::new();
                        std::io::stdin()
                            .read_to_string(&mut buf)
                            .map_err(|e| Error::InvalidPermutation(e.to_string()))?;
                        buf
                    } else {
                        input.clone()
                    };
                    let f: FundExpansion = serde_json::from_str(&json)
                        .map_err(|e| Error::NotSymmetric(format!("bad expansion JSON: {e}")))?;
                    let s = decompose_to_schur(&f)?;
                    schur_table(&s, cli.format)
                }
                _ => {
                    return Err(Error::InvalidPermutation(
                        "pass exactly one of --syt or --decompose".into(),
                    ))
                }
            };
            emit(cli, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Superstandard { lambda, n } => {
            let text = superstandard_command(lambda.as_ref(), *n, cli.format)?;
            emit(cli, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max_n } => {
            let cfg = VerifyConfig { max_n: *max_n };
            let suites: Vec<Suite> = match suite {
                Some(s) => vec![*s],
                None => Suite::all().to_vec(),
            };
            let mut all_passed = true;
            let mut text = String::new();
            for s in suites {
                let outcomes = run_suite(s, &cfg);
                let mut passed = 0;
                for o in &outcomes {
                    let dots = ".".repeat(46usize.saturating_sub(o.name.len()).max(1));
                    text.push_str(&format!(
                        "[{}] {} {} {} ({}, {:.2}s)\n",
                        o.suite,
                        o.name,
                        dots,
                        if o.passed { "PASS" } else { "FAIL" },
                        o.detail,
                        o.elapsed.as_secs_f64()
                    ));
                    if o.passed {
                        passed += 1;
                    } else {
                        all_passed = false;
                    }
                }
                text.push_str(&format!("suite {s}: {passed}/{} passed\n", outcomes.len()));
            }
            emit(cli, &text)?;
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
    }
}

fn stats_command(mu: &Partition, word: &Permutation, format: OutputFormat) -> Result<String, Error> {
    let filling = ShapedFilling::new(mu.clone(), word.clone())?;
    let ides = inverse_descents(word);
    let cells = mu_descent_cells(&filling);
    let pairs = mu_inversion_pairs(&filling);
    let (inv, maj) = stats_mu(&filling);
    let weight = weight_monomial(inv, maj);
    match format {
        OutputFormat::Json => {
            let cells_json: Vec<serde_json::Value> = cells
                .iter()
                .map(|&c| {
                    serde_json::json!({
                        "row": c.row,
                        "col": c.col,
                        "entry": filling.entry(c).expect("descent cell"),
                    })
                })
                .collect();
            let value = serde_json::json!({
                "mu": mu,
                "word": word,
                "ides": ides,
                "descent_cells": cells_json,
                "inversion_pairs": pairs,
                "maj": maj,
                "inv": inv,
                "weight": weight,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&value).expect("json")))
        }
        _ => {
            let cell_text = cells
                .iter()
                .map(|&c| format!("{c}={}", filling.entry(c).expect("descent cell")))
                .collect::<Vec<_>>()
                .join(" ");
            let pair_text = pairs
                .iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect::<Vec<_>>()
                .join(" ");
            Ok(format!(
                "mu:              {mu}\nword:            {word}\niDes:            {ides}\n\
                 descent cells:   {cell_text}\ninversion pairs: {pair_text}\n\
                 maj:             {maj}\ninv:             {inv}\nweight:          {weight}\n"
            ))
        }
    }
}

fn kostka_command(
    cli: &Cli,
    mu: &Partition,
    method: MethodArg,
    budget: EnumerationBudget,
) -> Result<ExitCode, Error> {
    match method {
        MethodArg::Oracle => {
            let table = kostka_macdonald_oracle(mu, budget)?;
            emit(cli, &schur_table(&table.entries, cli.format))?;
            Ok(ExitCode::SUCCESS)
        }
        MethodArg::Folding => {
            let table = kostka_macdonald_folding(mu, budget)?;
            emit(cli, &schur_table(&table.entries, cli.format))?;
            Ok(ExitCode::SUCCESS)
        }
        MethodArg::Both => {
            let cmp = compare_methods(mu, budget)?;
            let mut text = schur_table(&cmp.oracle.entries, cli.format);
            if cmp.equal() {
                if cli.format == OutputFormat::Text {
                    text.push_str("methods agree\n");
                }
                emit(cli, &text)?;
                Ok(ExitCode::SUCCESS)
            } else {
                text.push_str(&format!("methods disagree on {} entries:\n", cmp.diffs.len()));
                for diff in &cmp.diffs {
                    text.push_str(&format!(
                        "  ({}): {} = {} vs {} = {}\n",
                        diff.lambda,
                        Method::Oracle,
                        diff.oracle,
                        Method::Folding,
                        diff.folding
                    ));
                }
                emit(cli, &text)?;
                Ok(ExitCode::from(3))
            }
        }
    }
}

fn class_schur(class: &EquivClass, ctx: &SchurContext) -> Result<String, Error> {
    let gf = class_fund_gf(class, None)?;
    let schur = ctx.decompose(&gf)?;
    Ok(schur
        .terms()
        .map(|(lambda, coeff)| {
            if coeff == &macfold::QtPolynomial::one() {
                format!("s({lambda})")
            } else {
                format!("({coeff})*s({lambda})")
            }
        })
        .collect::<Vec<_>>()
        .join(" + "))
}

fn classes_command(
    cli: &Cli,
    n: Option<usize>,
    kind: KindArg,
    mu: Option<&Partition>,
    dot: Option<&std::path::Path>,
    budget: EnumerationBudget,
) -> Result<ExitCode, Error> {
    let kind = match kind {
        KindArg::Standard => GeneratorKind::Standard,
        KindArg::Twisted => GeneratorKind::Twisted,
        KindArg::Mu => GeneratorKind::Mu(
            mu.cloned()
                .ok_or_else(|| Error::InvalidPartition("--kind mu requires --mu".into()))?,
        ),
    };
    let n = match (n, &kind) {
        (Some(n), _) => n,
        (None, GeneratorKind::Mu(mu)) => mu.n(),
        (None, _) => return Err(Error::InvalidPermutation("--n is required".into())),
    };
    if let GeneratorKind::Mu(mu) = &kind {
        if mu.n() != n {
            return Err(Error::SizeMismatch {
                shape: mu.to_string(),
                shape_n: mu.n(),
                word_n: n,
            });
        }
    }
    budget.check(n)?;
    let classes = enumerate_classes(n, &kind)?;
    let ctx = SchurContext::new(n);
    let geom = match &kind {
        GeneratorKind::Mu(mu) => Some(ShapeGeometry::new(mu)),
        _ => None,
    };

    if let Some(path) = dot {
        let text = dot_graph(n, &kind)?;
        std::fs::write(path, text)
            .map_err(|e| Error::InvalidPermutation(format!("cannot write {}: {e}", path.display())))?;
    }

    match cli.format {
        OutputFormat::Json => {
            let items: Vec<serde_json::Value> = classes
                .iter()
                .map(|class| {
                    let mut value = serde_json::json!({
                        "representative": class.representative(),
                        "size": class.size(),
                        "members": class.members(),
                        "schur": class_schur(class, &ctx)?,
                    });
                    if let Some(geom) = &geom {
                        let (inv, maj) = geom.stats(class.representative().letters());
                        value["inv"] = inv.into();
                        value["maj"] = maj.into();
                    }
                    if kind == GeneratorKind::Standard {
                        let rep = super_standard_representative(class)?;
                        value["super_standard"] = serde_json::json!(rep);
                        value["type"] = serde_json::json!(is_super_standard(&rep).expect("weight"));
                    }
                    Ok(value)
                })
                .collect::<Result<_, Error>>()?;
            let value = serde_json::json!({
                "n": n,
                "kind": kind.to_string(),
                "count": classes.len(),
                "classes": items,
            });
            emit(cli, &format!("{}\n", serde_json::to_string_pretty(&value).expect("json")))?;
        }
        _ => {
            let mut text = format!("{} classes of S_{n} under {kind} moves\n", classes.len());
            for (idx, class) in classes.iter().enumerate() {
                let members = class
                    .members()
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                text.push_str(&format!(
                    "class {:>3}: size {:>3}",
                    idx + 1,
                    class.size()
                ));
                if let Some(geom) = &geom {
                    let (inv, maj) = geom.stats(class.representative().letters());
                    text.push_str(&format!(", inv {inv}, maj {maj}"));
                }
                text.push_str(&format!(", schur {}", class_schur(class, &ctx)?));
                if kind == GeneratorKind::Standard {
                    let rep = super_standard_representative(class)?;
                    let weight = is_super_standard(&rep).expect("weight");
                    text.push_str(&format!(", super-standard {rep} of type ({weight})"));
                }
                text.push_str(&format!("\n  members: {members}\n"));
            }
            emit(cli, &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn dot_graph(n: usize, kind: &GeneratorKind) -> Result<String, Error> {
    use macfold::dual_equiv::{d, d_twisted};
    let mut out = String::from("graph classes {\n");
    let mut emit_edge = |w: &Permutation, img: &Permutation, label: String| {
        if w < img {
            out.push_str(&format!("  \"{w}\" -- \"{img}\" [label=\"{label}\"];\n"));
        }
    };
    let mut words = Vec::new();
    macfold::perm::for_each_permutation(n, |w| {
        words.push(Permutation::new(w.to_vec()).expect("permutation"));
    });
    for w in &words {
        for i in 2..n {
            match kind {
                GeneratorKind::Standard => {
                    let img = d(i, w)?;
                    if &img != w {
                        emit_edge(w, &img, format!("d{i}"));
                    }
                }
                GeneratorKind::Twisted => {
                    let img = d_twisted(i, w)?;
                    if &img != w {
                        emit_edge(w, &img, format!("d~{i}"));
                    }
                }
                GeneratorKind::Mu(mu) => {
                    let filling = ShapedFilling::new(mu.clone(), w.clone())?;
                    let twisted = uses_twisted(i, &filling)?;
                    let img = macfold::dual_equiv::d_mu(i, &filling)?;
                    if img.perm() != w {
                        let label = if twisted { format!("d~{i}") } else { format!("d{i}") };
                        emit_edge(w, img.perm(), label);
                    }
                }
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

fn fold_command(
    mu: &Partition,
    word: &Permutation,
    trace: bool,
    format: OutputFormat,
) -> Result<String, Error> {
    if !trace {
        let result = phi_mu(mu, word)?;
        return Ok(match format {
            OutputFormat::Json => format!(
                "{}\n",
                serde_json::json!({"mu": mu, "word": word, "result": result})
            ),
            _ => format!("{result}\n"),
        });
    }
    let (result, trace) = phi_mu_with_trace(mu, word)?;
    match format {
        OutputFormat::Json => {
            let steps: Vec<serde_json::Value> = trace
                .steps
                .iter()
                .map(|s| {
                    let geom = ShapeGeometry::new(&s.shape);
                    let (inv, maj) = geom.stats(s.word.letters());
                    serde_json::json!({
                        "label": s.label,
                        "word": s.word,
                        "shape": s.shape,
                        "inv": inv,
                        "maj": maj,
                        "ides": inverse_descents(&s.word),
                    })
                })
                .collect();
            Ok(format!(
                "{}\n",
                serde_json::to_string_pretty(
                    &serde_json::json!({"mu": mu, "word": word, "result": result, "steps": steps})
                )
                .expect("json")
            ))
        }
        _ => {
            let mut rows = vec![(
                "step".to_string(),
                "word".to_string(),
                "shape".to_string(),
                "inv".to_string(),
                "maj".to_string(),
                "iDes".to_string(),
            )];
            for s in &trace.steps {
                let geom = ShapeGeometry::new(&s.shape);
                let (inv, maj) = geom.stats(s.word.letters());
                rows.push((
                    s.label.clone(),
                    s.word.to_string(),
                    format!("({})", s.shape),
                    inv.to_string(),
                    maj.to_string(),
                    inverse_descents(&s.word).to_string(),
                ));
            }
            let mut widths = [0usize; 6];
            for row in &rows {
                let cols = [&row.0, &row.1, &row.2, &row.3, &row.4, &row.5];
                for (w, c) in widths.iter_mut().zip(cols) {
                    *w = (*w).max(c.len());
                }
            }
            let mut text = String::new();
            for row in &rows {
                let cols = [&row.0, &row.1, &row.2, &row.3, &row.4, &row.5];
                let line = cols
                    .iter()
                    .zip(widths)
                    .map(|(c, w)| format!("{c:w$}"))
                    .collect::<Vec<_>>()
                    .join("  ");
                text.push_str(line.trim_end());
                text.push('\n');
            }
            text.push_str(&format!("result: {result}\n"));
            Ok(text)
        }
    }
}

fn syt_command(shape: &Partition, format: OutputFormat) -> String {
    let tableaux = enumerate_syt(shape);
    match format {
        OutputFormat::Json => {
            let items: Vec<serde_json::Value> = tableaux
                .iter()
                .map(|t| {
                    serde_json::json!({
                        "reading_word": t.reading_word(),
                        "rows": t.rows(),
                    })
                })
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&serde_json::json!({
                    "shape": shape,
                    "count": tableaux.len(),
                    "tableaux": items,
                }))
                .expect("json")
            )
        }
        _ => {
            let mut text = format!(
                "{} standard tableaux of shape ({shape}), hook-length count {}\n",
                tableaux.len(),
                syt_count(shape)
            );
            for t in &tableaux {
                text.push_str(&format!("reading word {}\n", t.reading_word()));
                for row in t.rows().iter().rev() {
                    let line = row
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ");
                    text.push_str(&format!("  {line}\n"));
                }
            }
            text
        }
    }
}

fn superstandard_command(
    lambda: Option<&Partition>,
    n: Option<usize>,
    format: OutputFormat,
) -> Result<String, Error> {
    match (lambda, n) {
        (Some(lambda), None) => {
            let members = enumerate_super_standard(lambda);
            Ok(match format {
                OutputFormat::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "lambda": lambda,
                        "count": members.len(),
                        "members": members,
                    }))
                    .expect("json")
                ),
                _ => {
                    let mut text = format!(
                        "{} super-standard permutations of weight ({lambda})\n",
                        members.len()
                    );
                    for m in &members {
                        text.push_str(&format!("{m}\n"));
                    }
                    text
                }
            })
        }
        (None, Some(n)) => {
            let by_weight = macfold::stats::super_standard_by_weight(n);
            Ok(match format {
                OutputFormat::Csv => {
                    let mut text = String::from("lambda,count\n");
                    for lambda in Partition::all_of(n) {
                        let count = by_weight.get(&lambda).map_or(0, |v| v.len());
                        text.push_str(&format!("{},{count}\n", partition_label(&lambda)));
                    }
                    text
                }
                OutputFormat::Json => {
                    let items: Vec<serde_json::Value> = Partition::all_of(n)
                        .iter()
                        .map(|lambda| {
                            serde_json::json!({
                                "lambda": lambda,
                                "count": by_weight.get(lambda).map_or(0, |v| v.len()),
                            })
                        })
                        .collect();
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&serde_json::json!({"n": n, "weights": items}))
                            .expect("json")
                    )
                }
                _ => {
                    let mut text = format!("{:10} | count\n", "lambda");
                    for lambda in Partition::all_of(n) {
                        let count = by_weight.get(&lambda).map_or(0, |v| v.len());
                        text.push_str(&format!("{:10} | {count}\n", format!("({lambda})")));
                    }
                    text
                }
            })
        }
        _ => Err(Error::InvalidPartition(
            "pass exactly one of --lambda or --n".into(),
        )),
    }
}
