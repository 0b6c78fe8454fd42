//! `derange-lab`: enumeration, identity verification, involution tracing
//! and table generation on the command line.
//!
//! Exit codes: 0 success, 2 usage, 3 budget exceeded, 4 domain violation.
//! A failed verification of a proven identity exits 1.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use derangelab::identity::{self, VerificationResult};
use derangelab::involution::psi_case_census;
use derangelab::{
    beta, enumerate_biderangements, enumerate_derangement_sef, enumerate_derangements,
    enumerate_sef, enumerate_sn, iota, is_decisive, kappa, psi, psi_hat, zeta, Biderangement,
    Budget, Error, Permutation, StatReport, SubexcedantFunction,
};

#[derive(Parser)]
#[command(
    name = "derange-lab",
    version,
    about = "Permutation statistics, sign-reversing involutions, and brute-force identity certification"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Budget / table extent override (hard ceiling 10, or 6 for
    /// biderangement commands).
    #[arg(long, global = true)]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run an identity verifier (or probe) over a range of n.
    Verify {
        /// Which identity to check.
        #[arg(value_enum)]
        identity: IdentityName,
        /// Range "a..b" (inclusive) or a single n.
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
    },
    /// Apply one involution to one input word and print the trace.
    Trace {
        /// Input word (permutation, subexcedant function, or biderangement,
        /// depending on the map).
        word: String,
        /// Which map to apply.
        #[arg(value_enum)]
        map: MapName,
    },
    /// Emit a census table.
    Table {
        /// Which table.
        #[arg(value_enum)]
        name: TableName,
    },
    /// Print every statistic of a permutation.
    Stats {
        /// Permutation in one-line notation.
        word: String,
    },
    /// Stream a family of objects, one word per line.
    Enumerate {
        /// Which family.
        #[arg(value_enum)]
        what: EnumerateWhat,
        /// Size of the ground set.
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityName {
    MainValues,
    MainIndices,
    MrCount,
    ExcSn,
    ExcFixed,
    DerExc,
    RlmSn,
    RlmDer,
    Bider,
    Conjecture,
    SingleCycle,
    RlmTable,
    FixRlmProbe,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    Psi,
    PsiHat,
    Iota,
    Kappa,
    Zeta,
    Beta,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableName {
    RlmDer,
    CaseTransitions,
    DecisiveCounts,
    BiderCounts,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateWhat {
    Sn,
    Der,
    Sef,
    DerSef,
    Bider,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse_one = |part: &str| {
        part.trim()
            .parse::<usize>()
            .map_err(|_| format!("\"{part}\" is not a nonnegative integer"))
    };
    if let Some((lo, hi)) = s.split_once("..") {
        let (lo, hi) = (parse_one(lo)?, parse_one(hi)?);
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok((lo, hi))
    } else {
        let v = parse_one(s)?;
        Ok((v, v))
    }
}

/// Which resource family a command draws on.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    Perm,
    Bider,
}

/// CLI-facing budget: sweeps default to 8, biderangements to 5; `--max-n`
/// raises the relevant family up to its hard ceiling (10 / 6).
fn budget_for(family: Family, max_n: Option<usize>) -> Result<Budget, Error> {
    let mut budget = Budget {
        max_enum_n: 8,
        max_sweep_n: 8,
        max_bider_n: 5,
    };
    if let Some(m) = max_n {
        let ceiling = match family {
            Family::Perm => 10,
            Family::Bider => 6,
        };
        if m > ceiling {
            return Err(Error::BudgetExceeded {
                what: "--max-n (hard ceiling)",
                requested: m,
                max: ceiling,
            });
        }
        match family {
            Family::Perm => {
                budget.max_enum_n = m.max(budget.max_enum_n);
                budget.max_sweep_n = m;
            }
            Family::Bider => budget.max_bider_n = m,
        }
    }
    Ok(budget)
}

fn main() -> ExitCode {
    // die quietly when the reader of a pipe goes away (e.g. `... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(all_verified) => {
            if all_verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::BudgetExceeded { .. } => ExitCode::from(3),
                Error::Domain(_) | Error::InvalidWord { .. } => ExitCode::from(4),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Verify { identity, n } => cmd_verify(*identity, *n, cli),
        Command::Trace { word, map } => {
            cmd_trace(word, *map, cli.format)?;
            Ok(true)
        }
        Command::Table { name } => {
            cmd_table(*name, cli)?;
            Ok(true)
        }
        Command::Stats { word } => {
            cmd_stats(word, cli.format)?;
            Ok(true)
        }
        Command::Enumerate { what, n } => {
            cmd_enumerate(*what, *n, cli)?;
            Ok(true)
        }
    }
}

fn set_tokens(s: &BTreeSet<usize>) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn set_braces(s: &BTreeSet<usize>) -> String {
    format!(
        "{{{}}}",
        s.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn emit_verification(r: &VerificationResult, format: Format) {
    match format {
        Format::Text => {
            let status = if r.equal { "equal" } else { "NOT EQUAL" };
            let mut line = format!(
                "{} n={}: {status} (lhs {} terms, rhs {} terms)",
                r.identity,
                r.n,
                r.lhs.term_count(),
                r.rhs.term_count()
            );
            if let Some((m, a, b)) = &r.first_discrepancy {
                line.push_str(&format!("; first discrepancy at {m}: {a} vs {b}"));
            }
            println!("{line}");
        }
        Format::Json => {
            let discrepancy = r.first_discrepancy.as_ref().map(|(m, a, b)| {
                json!({
                    "monomial": m.to_string(),
                    "lhs": a.to_string(),
                    "rhs": b.to_string(),
                })
            });
            println!(
                "{}",
                json!({
                    "identity": r.identity,
                    "n": r.n,
                    "equal": r.equal,
                    "lhs_terms": r.lhs.term_count(),
                    "rhs_terms": r.rhs.term_count(),
                    "first_discrepancy": discrepancy,
                    "elapsed_ms": r.elapsed.as_millis() as u64,
                })
            );
        }
        Format::Csv => {
            println!(
                "{},{},{},{},{}",
                r.identity,
                r.n,
                r.equal,
                r.lhs.term_count(),
                r.rhs.term_count()
            );
        }
    }
}

fn cmd_verify(identity: IdentityName, (lo, hi): (usize, usize), cli: &Cli) -> Result<bool, Error> {
    let family = if identity == IdentityName::Bider {
        Family::Bider
    } else {
        Family::Perm
    };
    let budget = budget_for(family, cli.max_n)?;
    let format = cli.format;
    let mut all_equal = true;

    for n in lo..=hi {
        match identity {
            IdentityName::MainValues => {
                let r = identity::main_theorem_values(n, &budget)?;
                all_equal &= r.equal;
                emit_verification(&r, format);
            }
            IdentityName::MainIndices => {
                let r = identity::main_theorem_indices(n, &budget)?;
                all_equal &= r.equal;
                emit_verification(&r, format);
            }
            IdentityName::ExcSn => {
                let r = identity::exc_sum_sn(n, &budget)?;
                all_equal &= r.equal;
                emit_verification(&r, format);
            }
            IdentityName::DerExc => {
                let r = identity::derangement_exc_mono(n, &budget)?;
                all_equal &= r.equal;
                emit_verification(&r, format);
            }
            IdentityName::RlmSn => {
                let r = identity::rlm_sum_sn(n, &budget)?;
                all_equal &= r.equal;
                emit_verification(&r, format);
            }
            IdentityName::RlmDer => {
                let r = identity::rlm_derangement_sum(n, &budget)?;
                all_equal &= r.equal;
                emit_verification(&r, format);
            }
            IdentityName::Bider => {
                let r = identity::biderangement_identity(n, &budget)?;
                all_equal &= r.equal;
                emit_verification(&r, format);
            }
            IdentityName::MrCount => {
                for k in 1..n.max(1) {
                    let value = identity::mr_counting(n, k, &budget)?;
                    let expected = if (n - 1) % 2 == 0 { 1 } else { -1 };
                    let equal = value == expected;
                    all_equal &= equal;
                    match format {
                        Format::Text => println!(
                            "mr-count n={n} k={k}: {value:+} (expected {expected:+})"
                        ),
                        Format::Json => println!(
                            "{}",
                            json!({
                                "identity": "mr-count",
                                "n": n,
                                "k": k,
                                "value": value,
                                "expected": expected,
                                "equal": equal,
                            })
                        ),
                        Format::Csv => println!("mr-count,{n},{k},{value},{expected},{equal}"),
                    }
                }
            }
            IdentityName::ExcFixed => {
                let subjects = identity::exc_fixed_subjects(n);
                let mut failures = 0usize;
                let mut first_failure: Option<String> = None;
                for t in &subjects {
                    let r = identity::exc_sum_fixed(n, t, &budget)?;
                    if !r.equal {
                        failures += 1;
                        first_failure.get_or_insert_with(|| format!("{t:?}"));
                    }
                }
                let equal = failures == 0;
                all_equal &= equal;
                match format {
                    Format::Text => println!(
                        "exc-fixed n={n}: {} subsets, {}",
                        subjects.len(),
                        if equal {
                            "all equal".to_string()
                        } else {
                            format!("{failures} failures (first at T={})", first_failure.unwrap())
                        }
                    ),
                    Format::Json => println!(
                        "{}",
                        json!({
                            "identity": "exc-fixed",
                            "n": n,
                            "subsets": subjects.len(),
                            "equal": equal,
                            "failures": failures,
                        })
                    ),
                    Format::Csv => {
                        println!("exc-fixed,{n},{},{equal},{failures}", subjects.len())
                    }
                }
            }
            IdentityName::Conjecture => {
                for k in 1..=n {
                    let probe = identity::type_restricted_sum(n, k, &budget)?;
                    match format {
                        Format::Text => println!(
                            "conjecture n={n} k={k}: {} terms, nonneg={}, single-signed={}",
                            probe.sum.term_count(),
                            probe.all_nonneg,
                            probe.single_signed
                        ),
                        Format::Json => println!(
                            "{}",
                            json!({
                                "identity": "conjecture",
                                "n": n,
                                "k": k,
                                "terms": probe.sum.term_count(),
                                "all_nonneg": probe.all_nonneg,
                                "single_signed": probe.single_signed,
                            })
                        ),
                        Format::Csv => println!(
                            "conjecture,{n},{k},{},{},{}",
                            probe.sum.term_count(),
                            probe.all_nonneg,
                            probe.single_signed
                        ),
                    }
                }
            }
            IdentityName::SingleCycle => {
                let census = identity::single_cycle_census(n, &budget)?;
                let expected = identity::SINGLE_CYCLE_TERM_COUNTS.get(n - 1).copied();
                let matches = expected.map(|e| e == census.distinct_terms);
                match format {
                    Format::Text => println!(
                        "single-cycle n={n}: {} distinct terms{}",
                        census.distinct_terms,
                        match (expected, matches) {
                            (Some(e), Some(m)) =>
                                format!(" (sequence value {e}, match={m})"),
                            _ => String::new(),
                        }
                    ),
                    Format::Json => println!(
                        "{}",
                        json!({
                            "identity": "single-cycle",
                            "n": n,
                            "distinct_terms": census.distinct_terms,
                            "sequence_value": expected,
                            "matches": matches,
                        })
                    ),
                    Format::Csv => println!(
                        "single-cycle,{n},{},{},{}",
                        census.distinct_terms,
                        expected.map(|e| e.to_string()).unwrap_or_default(),
                        matches.map(|m| m.to_string()).unwrap_or_default()
                    ),
                }
            }
            IdentityName::RlmTable => {
                if n < 2 {
                    continue;
                }
                let rows = identity::rlm_derangement_table(n, &budget)?;
                let row = rows.last().expect("at least one row");
                let counts: Vec<String> = row.counts.iter().map(|c| c.to_string()).collect();
                match format {
                    Format::Text => {
                        let mut line =
                            format!("rlm-table n={n}: {}", counts.join(" "));
                        if let Some(rec) = row.first_col_recursion {
                            line.push_str(&format!(
                                "; a(n,1) recursion predicted {} observed {} match={}",
                                rec.predicted, rec.observed, rec.matches
                            ));
                        }
                        line.push_str(&format!(
                            "; last-column formula predicted {} observed {} match={}",
                            row.last_col_as_printed.predicted,
                            row.last_col_as_printed.observed,
                            row.last_col_as_printed.matches
                        ));
                        if let Some(shifted) = row.next_to_last_shifted {
                            line.push_str(&format!(
                                "; shifted formula predicted {} observed {} match={}",
                                shifted.predicted, shifted.observed, shifted.matches
                            ));
                        }
                        println!("{line}");
                    }
                    Format::Json => println!(
                        "{}",
                        json!({
                            "identity": "rlm-table",
                            "n": n,
                            "counts": row.counts,
                            "first_col_recursion": row.first_col_recursion.map(|c| json!({
                                "observed": c.observed,
                                "predicted": c.predicted,
                                "matches": c.matches,
                            })),
                            "last_col_as_printed": {
                                "observed": row.last_col_as_printed.observed,
                                "predicted": row.last_col_as_printed.predicted,
                                "matches": row.last_col_as_printed.matches,
                            },
                            "next_to_last_shifted": row.next_to_last_shifted.map(|c| json!({
                                "observed": c.observed,
                                "predicted": c.predicted,
                                "matches": c.matches,
                            })),
                        })
                    ),
                    Format::Csv => println!("rlm-table,{n},{}", counts.join(",")),
                }
            }
            IdentityName::FixRlmProbe => {
                for t in identity::exc_fixed_subjects(n) {
                    let probe = identity::fixed_rlm_probe(n, &t, &budget)?;
                    let t_text = set_tokens(&t);
                    match format {
                        Format::Text => match &probe.factored {
                            Some(f) => println!(
                                "fix-rlm-probe n={n} T={{{t_text}}}: {} = {f}",
                                probe.sum
                            ),
                            None => println!(
                                "fix-rlm-probe n={n} T={{{t_text}}}: {} (no unit factorization)",
                                probe.sum
                            ),
                        },
                        Format::Json => println!(
                            "{}",
                            json!({
                                "identity": "fix-rlm-probe",
                                "n": n,
                                "T": t.iter().copied().collect::<Vec<_>>(),
                                "poly": probe.sum.to_string(),
                                "factored": probe.factored.map(|f| json!({
                                    "sign": f.sign,
                                    "t_power": f.t_power,
                                    "plus_power": f.plus_power,
                                    "minus_power": f.minus_power,
                                    "display": f.to_string(),
                                })),
                            })
                        ),
                        Format::Csv => println!(
                            "fix-rlm-probe,{n},{},{},{}",
                            t_text.replace(' ', ";"),
                            probe.sum,
                            probe
                                .factored
                                .map(|f| f.to_string())
                                .unwrap_or_else(|| "raw".into())
                        ),
                    }
                }
            }
        }
    }
    Ok(all_equal)
}

fn cmd_trace(word: &str, map: MapName, format: Format) -> Result<(), Error> {
    match map {
        MapName::Psi => {
            let f: SubexcedantFunction = word.parse()?;
            let trace = psi(&f)?;
            match format {
                Format::Text => {
                    println!(
                        "{} -> {} case={} image_case={} touched={}",
                        trace.input,
                        trace.output,
                        trace.case,
                        trace.image_case,
                        trace
                            .touched_position
                            .map(|p| p.to_string())
                            .unwrap_or_else(|| "none".into())
                    );
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "input": trace.input.to_string(),
                        "output": trace.output.to_string(),
                        "case": trace.case.to_string(),
                        "image_case": trace.image_case.to_string(),
                        "touched_position": trace.touched_position,
                    })
                ),
                Format::Csv => println!(
                    "{},{},{},{},{}",
                    trace.input,
                    trace.output,
                    trace.case,
                    trace.image_case,
                    trace
                        .touched_position
                        .map(|p| p.to_string())
                        .unwrap_or_default()
                ),
            }
        }
        MapName::PsiHat | MapName::Iota | MapName::Kappa | MapName::Zeta => {
            let p: Permutation = word.parse()?;
            let output = match map {
                MapName::PsiHat => psi_hat(&p)?,
                MapName::Iota => iota(&p),
                MapName::Kappa => kappa(&p),
                MapName::Zeta => zeta(&p),
                _ => unreachable!(),
            };
            emit_simple_trace(&p.to_string(), &output.to_string(), format);
        }
        MapName::Beta => {
            let w: Biderangement = word.parse()?;
            let output = beta(&w);
            emit_simple_trace(&w.to_string(), &output.to_string(), format);
        }
    }
    Ok(())
}

fn emit_simple_trace(input: &str, output: &str, format: Format) {
    match format {
        Format::Text => println!("{input} -> {output}"),
        Format::Json => println!(
            "{}",
            json!({ "input": input, "output": output })
        ),
        Format::Csv => println!("{input},{output}"),
    }
}

fn cmd_table(name: TableName, cli: &Cli) -> Result<(), Error> {
    let format = cli.format;
    match name {
        TableName::RlmDer => {
            let budget = budget_for(Family::Perm, cli.max_n)?;
            let extent = cli.max_n.unwrap_or(8);
            let rows = identity::rlm_derangement_table(extent, &budget)?;
            for row in rows {
                let counts: Vec<String> = row.counts.iter().map(|c| c.to_string()).collect();
                match format {
                    Format::Text => println!("n={}: {}", row.n, counts.join(" ")),
                    Format::Json => println!(
                        "{}",
                        json!({ "table": "rlm-der", "n": row.n, "counts": row.counts })
                    ),
                    Format::Csv => println!("{},{}", row.n, counts.join(",")),
                }
            }
        }
        TableName::CaseTransitions => {
            let budget = budget_for(Family::Perm, cli.max_n)?;
            let extent = cli.max_n.unwrap_or(7).min(budget.max_sweep_n);
            for n in 2..=extent {
                for ((case, image), count) in psi_case_census(n, &budget)? {
                    match format {
                        Format::Text => println!("n={n}: {case} -> {image} ({count})"),
                        Format::Json => println!(
                            "{}",
                            json!({
                                "table": "case-transitions",
                                "n": n,
                                "case": case.to_string(),
                                "image_case": image.to_string(),
                                "count": count,
                            })
                        ),
                        Format::Csv => println!("{n},{case},{image},{count}"),
                    }
                }
            }
        }
        TableName::DecisiveCounts => {
            let budget = budget_for(Family::Perm, cli.max_n)?;
            let extent = cli.max_n.unwrap_or(8).min(budget.max_sweep_n);
            for n in 1..=extent {
                let mut by_minima = vec![0u64; n + 1];
                for p in enumerate_sn(n, &budget)? {
                    if is_decisive(&p) {
                        by_minima[p.stats().rlm()] += 1;
                    }
                }
                for (k, &count) in by_minima.iter().enumerate().skip(1) {
                    if count == 0 {
                        continue;
                    }
                    let sign: i64 = if (n - k) % 2 == 0 { 1 } else { -1 };
                    match format {
                        Format::Text => {
                            println!("n={n} k={k}: {count} decisive, sign {sign:+}")
                        }
                        Format::Json => println!(
                            "{}",
                            json!({
                                "table": "decisive-counts",
                                "n": n,
                                "k": k,
                                "count": count,
                                "sign": sign,
                            })
                        ),
                        Format::Csv => println!("{n},{k},{count},{sign}"),
                    }
                }
            }
        }
        TableName::BiderCounts => {
            let budget = budget_for(Family::Bider, cli.max_n)?;
            let extent = cli.max_n.unwrap_or(5).min(budget.max_bider_n);
            for n in 1..=extent {
                let count = enumerate_biderangements(n, &budget)?.count();
                match format {
                    Format::Text => println!("n={n}: {count}"),
                    Format::Json => println!(
                        "{}",
                        json!({ "table": "bider-counts", "n": n, "count": count })
                    ),
                    Format::Csv => println!("{n},{count}"),
                }
            }
        }
    }
    Ok(())
}

fn cmd_stats(word: &str, format: Format) -> Result<(), Error> {
    let p: Permutation = word.parse()?;
    let s: StatReport = p.stats();
    match format {
        Format::Text => {
            println!("word: {p}");
            println!("n: {}", p.n());
            println!("inv: {}", s.inv);
            println!("sign: {:+}", s.sign);
            println!("exc_idx: {}", set_braces(&s.exc_idx));
            println!("exc_val: {}", set_braces(&s.exc_val));
            println!("rlm_idx: {}", set_braces(&s.rlm_idx));
            println!("rlm_val: {}", set_braces(&s.rlm_val));
            println!("fix: {}", set_braces(&s.fix));
            println!(
                "cycle_type: [{}]",
                s.cycle_type
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
        }
        Format::Json => println!(
            "{}",
            json!({
                "word": p.to_string(),
                "n": p.n(),
                "inv": s.inv,
                "sign": s.sign,
                "exc_idx": s.exc_idx.iter().copied().collect::<Vec<_>>(),
                "exc_val": s.exc_val.iter().copied().collect::<Vec<_>>(),
                "rlm_idx": s.rlm_idx.iter().copied().collect::<Vec<_>>(),
                "rlm_val": s.rlm_val.iter().copied().collect::<Vec<_>>(),
                "fix": s.fix.iter().copied().collect::<Vec<_>>(),
                "cycle_type": s.cycle_type,
            })
        ),
        Format::Csv => println!(
            "{},{},{},{},{},{},{},{},{},{}",
            p,
            p.n(),
            s.inv,
            s.sign,
            set_tokens(&s.exc_idx),
            set_tokens(&s.exc_val),
            set_tokens(&s.rlm_idx),
            set_tokens(&s.rlm_val),
            set_tokens(&s.fix),
            s.cycle_type
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ),
    }
    Ok(())
}

fn cmd_enumerate(what: EnumerateWhat, n: usize, cli: &Cli) -> Result<(), Error> {
    let family = if what == EnumerateWhat::Bider {
        Family::Bider
    } else {
        Family::Perm
    };
    let budget = budget_for(family, cli.max_n)?;
    // raw enumerators allow up to 10; the CLI keeps its own default of 8
    if family == Family::Perm && n > budget.max_sweep_n {
        return Err(Error::BudgetExceeded {
            what: "enumeration",
            requested: n,
            max: budget.max_sweep_n,
        });
    }
    let words: Box<dyn Iterator<Item = String>> = match what {
        EnumerateWhat::Sn => Box::new(enumerate_sn(n, &budget)?.map(|p| p.to_string())),
        EnumerateWhat::Der => {
            Box::new(enumerate_derangements(n, &budget)?.map(|p| p.to_string()))
        }
        EnumerateWhat::Sef => Box::new(enumerate_sef(n, &budget)?.map(|f| f.to_string())),
        EnumerateWhat::DerSef => {
            Box::new(enumerate_derangement_sef(n, &budget)?.map(|f| f.to_string()))
        }
        EnumerateWhat::Bider => {
            Box::new(enumerate_biderangements(n, &budget)?.map(|w| w.to_string()))
        }
    };
    for word in words {
        match cli.format {
            Format::Text | Format::Csv => println!("{word}"),
            Format::Json => println!("{}", json!({ "word": word })),
        }
    }
    Ok(())
}
