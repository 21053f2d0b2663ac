use std::time::Instant;

use hexchain_core::{
    average_wiener, build_chain, compute_report, count_chains, enumerate_chains, parse_code,
    rank_extremal, wiener_bfs, wiener_closed, wiener_recurrence, ChainKind, CodeWord, Direction,
    Method,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;
use crate::output::RecordWriter;
use crate::{BenchArgs, ComputeArgs, EnumerateArgs, ExtremalArgs, VerifyArgs};

#[derive(Serialize)]
struct ComputeRecord {
    code: String,
    kind: ChainKind,
    n: usize,
    vertices: usize,
    edges: usize,
    w_bfs: Option<i64>,
    w_recurrence: Option<i64>,
    w_closed: Option<i64>,
    w_polynomial: Option<i64>,
    agree: bool,
}

pub fn compute(args: &ComputeArgs) -> Result<(), CliError> {
    let code = parse_code(&args.code, args.n)?;
    let methods = if args.methods.is_empty() {
        let mut m = vec![Method::Bfs, Method::Recurrence, Method::Closed];
        if code.is_constant() {
            m.push(Method::Polynomial);
        }
        m
    } else {
        args.methods.clone()
    };
    let report = compute_report(args.kind, &code, &methods)?;
    let mut out = RecordWriter::new(args.format, None)?;
    out.record(&ComputeRecord {
        code: report.code.to_string(),
        kind: report.kind,
        n: report.n,
        vertices: report.vertices,
        edges: report.edges,
        w_bfs: report.w_bfs,
        w_recurrence: report.w_recurrence,
        w_closed: report.w_closed,
        w_polynomial: report.w_polynomial,
        agree: report.agree,
    })?;
    out.finish()?;
    if !report.agree {
        let values: Vec<String> = report
            .values()
            .map(|(m, w)| format!("{}={w}", m.as_str()))
            .collect();
        return Err(CliError::Check(format!(
            "methods disagree: {}",
            values.join(" ")
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct ChainRow {
    code: String,
    kind: ChainKind,
    n: usize,
    w_closed: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    w_bfs: Option<i64>,
}

pub fn enumerate(args: &EnumerateArgs, limit: usize) -> Result<(), CliError> {
    let chains = enumerate_chains(args.n, limit)?;
    let census = count_chains(args.n)?;
    let expected_mean = average_wiener(args.kind, args.n)?;

    let mut out = RecordWriter::new(args.format, args.output.as_deref())?;
    let mut count: u64 = 0;
    let mut sum: i128 = 0;
    let mut mismatch = None;
    for code in chains {
        let w_closed = wiener_closed(args.kind, &code)?;
        let w_bfs = if args.with_bfs {
            let w = wiener_bfs(&build_chain(args.kind, &code).graph)?;
            if w != w_closed && mismatch.is_none() {
                mismatch = Some(format!("{code}: bfs {w} != closed {w_closed}"));
            }
            Some(w)
        } else {
            None
        };
        out.record(&ChainRow {
            code: code.to_string(),
            kind: args.kind,
            n: code.n(),
            w_closed,
            w_bfs,
        })?;
        count += 1;
        sum += w_closed as i128;
    }

    let mean = if sum % count as i128 == 0 {
        (sum / count as i128).to_string()
    } else {
        format!("{sum}/{count}")
    };
    out.comment(&format!(
        "count={count} sum={sum} mean={mean} expected_count={} expected_mean={expected_mean}",
        census.distinct
    ))?;
    out.finish()?;

    if let Some(m) = mismatch {
        return Err(CliError::Check(m));
    }
    if count != census.distinct || sum != expected_mean as i128 * count as i128 {
        return Err(CliError::Check(format!(
            "summary mismatch: count {count} (expected {}), mean {mean} (expected {expected_mean})",
            census.distinct
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct ExtremalRow {
    kind: ChainKind,
    n: usize,
    direction: Direction,
    rank: usize,
    code: String,
    w: i64,
    predicted: Option<String>,
    matches_theorem: Option<bool>,
    note: Option<String>,
}

pub fn extremal(args: &ExtremalArgs, limit: usize) -> Result<(), CliError> {
    let direction = if args.max {
        Direction::Max
    } else {
        Direction::Min
    };
    let ranking = rank_extremal(args.kind, args.n, direction, args.top, limit)?;
    let mut out = RecordWriter::new(args.format, None)?;
    for e in &ranking.entries {
        let check = ranking.check(e.rank);
        out.record(&ExtremalRow {
            kind: ranking.kind,
            n: ranking.n,
            direction,
            rank: e.rank,
            code: e.code.to_string(),
            w: e.w,
            predicted: check.map(|c| c.predicted.to_string()),
            matches_theorem: check.map(|c| c.matches),
            note: check.and_then(|c| c.note.clone()),
        })?;
    }
    out.finish()
}

pub fn verify(args: &VerifyArgs, limit: usize) -> Result<(), CliError> {
    let start = Instant::now();
    let report = hexchain_core::verify(args.max_n, limit);
    println!(
        "# verify max_n={} oracle_max_n={} limit={limit}",
        report.max_n,
        report.oracle_max_n.map_or("none".into(), |n| n.to_string())
    );
    if let Some(r) = &report.refusal {
        println!("# refused: {r}");
    }
    for (name, tally) in &report.invariants {
        let status = if tally.failed == 0 { "PASS" } else { "FAIL" };
        println!(
            "{status} {name} passed={} failed={}",
            tally.passed, tally.failed
        );
        for f in &tally.failures {
            println!("  {name}: {f}");
        }
    }
    println!("# elapsed={:.3}s", start.elapsed().as_secs_f64());
    if report.all_passed() {
        println!("# result=PASS");
        Ok(())
    } else {
        let failed: Vec<&str> = report
            .invariants
            .iter()
            .filter(|(_, t)| t.failed > 0)
            .map(|(n, _)| *n)
            .collect();
        println!("# result=FAIL");
        Err(CliError::Check(format!(
            "invariants failed: {}",
            failed.join(", ")
        )))
    }
}

#[derive(Serialize)]
struct BenchRow {
    method: &'static str,
    kind: ChainKind,
    n: usize,
    sample: usize,
    seed: u64,
    w: Option<i64>,
    nanos: Option<u128>,
    note: Option<String>,
}

pub fn bench(args: &BenchArgs) -> Result<(), CliError> {
    if let Some(&bad) = args.n.iter().find(|&&n| n < 1) {
        return Err(CliError::Input(format!(
            "chain length must be at least 1, got {bad}"
        )));
    }
    if args.methods.contains(&Method::Polynomial) {
        return Err(CliError::Input(
            "bench supports closed, recurrence and bfs".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut out = RecordWriter::new(args.format, None)?;
    out.comment(&format!("seed={}", args.seed))?;
    let mut disagreement = None;
    for &n in &args.n {
        for sample in 0..args.samples {
            let code = CodeWord::random(n, &mut rng)?;
            let mut seen: Option<i64> = None;
            for &method in &args.methods {
                let mut row = BenchRow {
                    method: method.as_str(),
                    kind: args.kind,
                    n,
                    sample,
                    seed: args.seed,
                    w: None,
                    nanos: None,
                    note: None,
                };
                if method == Method::Bfs && n > args.bfs_max_n {
                    row.note = Some(format!("skipped: n > bfs-max-n {}", args.bfs_max_n));
                    out.record(&row)?;
                    continue;
                }
                let start = Instant::now();
                let w = match method {
                    Method::Closed => wiener_closed(args.kind, &code)?,
                    Method::Recurrence => wiener_recurrence(args.kind, &code)?,
                    Method::Bfs => wiener_bfs(&build_chain(args.kind, &code).graph)?,
                    Method::Polynomial => unreachable!("rejected above"),
                };
                row.nanos = Some(start.elapsed().as_nanos());
                row.w = Some(w);
                match seen {
                    Some(prev) if prev != w && disagreement.is_none() => {
                        disagreement = Some(format!(
                            "n={n} sample={sample}: {} gives {w}, expected {prev}",
                            method.as_str()
                        ));
                    }
                    None => seen = Some(w),
                    _ => {}
                }
                out.record(&row)?;
            }
        }
    }
    out.finish()?;
    match disagreement {
        Some(d) => Err(CliError::Check(d)),
        None => Ok(()),
    }
}
