//! Invariant suite over every chain up to a given length.
//!
//! Checks come in two tiers. The oracle tier builds graphs, runs BFS and
//! enumerates chains, so it is bounded by the exhaustive limit. The formula
//! tier only evaluates closed forms and polynomials and runs for any length.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::code::{CodeWord, Letter};
use crate::enumeration::{
    average_wiener, count_chains, enumerate_chains_par, family_mean, rank_extremal, Direction,
};
use crate::error::Result;
use crate::graph::{build_chain, squeeze_graph, ChainGraph, ChainKind};
use crate::wiener::{
    f_weight, g_weight, squeeze_relation, vertex_distance_sum, wiener_bfs, wiener_closed,
    wiener_homogeneous, wiener_recurrence,
};

/// Graph-level squeeze and the handshake identity are checked up to here.
const SQUEEZE_GRAPH_MAX_N: usize = 7;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InvariantTally {
    pub passed: u64,
    pub failed: u64,
    /// First few failures, as `"<subject>: <detail>"`.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub max_n: usize,
    /// Largest length covered by the oracle tier, if it ran at all.
    pub oracle_max_n: Option<usize>,
    pub refusal: Option<String>,
    pub invariants: BTreeMap<&'static str, InvariantTally>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.invariants.values().all(|t| t.failed == 0)
    }

    fn record(&mut self, name: &'static str, ok: bool, subject: impl FnOnce() -> String) {
        let tally = self.invariants.entry(name).or_default();
        if ok {
            tally.passed += 1;
        } else {
            tally.failed += 1;
            if tally.failures.len() < 5 {
                tally.failures.push(subject());
            }
        }
    }

    fn record_result(
        &mut self,
        name: &'static str,
        r: Result<bool>,
        subject: impl FnOnce() -> String,
    ) {
        match r {
            Ok(ok) => self.record(name, ok, subject),
            Err(e) => self.record(name, false, || format!("{}: {e}", subject())),
        }
    }
}

/// Runs every invariant for chain lengths `1..=max_n`. The oracle tier is
/// limited to `exhaustive_limit`; beyond it only the formula tier runs.
pub fn verify(max_n: usize, exhaustive_limit: usize) -> VerifyReport {
    let mut report = VerifyReport {
        max_n,
        ..VerifyReport::default()
    };
    let oracle_max = max_n.min(exhaustive_limit);
    if max_n > exhaustive_limit {
        report.refusal = Some(format!(
            "oracle tier limited to n <= {exhaustive_limit} (requested {max_n}); formula tier covers all n <= {max_n}"
        ));
    }
    if oracle_max >= 1 {
        report.oracle_max_n = Some(oracle_max);
        for n in 1..=oracle_max {
            oracle_tier(&mut report, n, exhaustive_limit);
        }
    }
    for n in 1..=max_n {
        formula_tier(&mut report, n);
    }
    report
}

#[derive(Debug)]
struct ChainFacts {
    code: CodeWord,
    kind: ChainKind,
    sizes_ok: bool,
    degrees_ok: bool,
    exits_ok: bool,
    bfs: Result<i64>,
    recurrence: Result<i64>,
    closed: Result<i64>,
    closed_reversed: Result<i64>,
    degree_seq_reversal_ok: bool,
    handshake: Option<Result<bool>>,
    squeeze_graph: Option<Result<bool>>,
}

fn expected_size(kind: ChainKind, n: usize) -> (usize, usize) {
    match kind {
        ChainKind::Spiro => (5 * n + 1, 6 * n),
        ChainKind::Polyphenyl => (6 * n, 7 * n - 1),
    }
}

fn degrees_ok(chain: &ChainGraph) -> bool {
    let (special, degree): (Vec<usize>, usize) = match chain.kind {
        ChainKind::Spiro => (chain.cut_vertices.clone(), 4),
        ChainKind::Polyphenyl => (
            chain
                .attach_pairs
                .iter()
                .flat_map(|&(t, c)| [t, c])
                .collect(),
            3,
        ),
    };
    (0..chain.vertex_count()).all(|v| {
        let want = if special.contains(&v) { degree } else { 2 };
        chain.graph.degree(v) == want
    })
}

fn chain_facts(kind: ChainKind, code: CodeWord) -> ChainFacts {
    let n = code.n();
    let chain = build_chain(kind, &code);
    let reversed = build_chain(kind, &code.reversed());
    let sizes_ok = (chain.vertex_count(), chain.edge_count()) == expected_size(kind, n);
    let exits_ok = code.letters().iter().enumerate().all(|(i, l)| {
        chain.graph.distance(chain.entry(i + 1), chain.exit(i + 1)) == Some(l.ring_distance())
    });
    let bfs = wiener_bfs(&chain.graph);
    let small = n <= SQUEEZE_GRAPH_MAX_N;
    let handshake = small.then(|| {
        let mut sum = 0i64;
        for v in 0..chain.vertex_count() {
            sum += vertex_distance_sum(&chain.graph, v)?;
        }
        Ok(Some(sum) == bfs.as_ref().ok().map(|w| 2 * w))
    });
    let squeeze = (small && kind == ChainKind::Polyphenyl).then(|| {
        let squeezed = squeeze_graph(&chain);
        let spiro = build_chain(ChainKind::Spiro, &code);
        Ok(squeezed.vertex_count() == spiro.vertex_count()
            && squeezed.edge_count() == spiro.edge_count()
            && squeezed.graph.degree_sequence() == spiro.graph.degree_sequence()
            && wiener_bfs(&squeezed.graph)? == wiener_bfs(&spiro.graph)?)
    });
    ChainFacts {
        kind,
        sizes_ok,
        degrees_ok: degrees_ok(&chain),
        exits_ok,
        bfs,
        recurrence: wiener_recurrence(kind, &code),
        closed: wiener_closed(kind, &code),
        closed_reversed: wiener_closed(kind, &code.reversed()),
        degree_seq_reversal_ok: chain.graph.degree_sequence() == reversed.graph.degree_sequence(),
        handshake,
        squeeze_graph: squeeze,
        code,
    }
}

fn subject(kind: ChainKind, code: &CodeWord) -> String {
    format!("{kind} n={} code=\"{code}\"", code.n())
}

fn oracle_tier(report: &mut VerifyReport, n: usize, limit: usize) {
    let codes = match enumerate_chains_par(n, limit) {
        Ok(c) => c,
        Err(e) => {
            report.record("census", false, || format!("n={n}: {e}"));
            return;
        }
    };
    report.record_result(
        "census",
        count_chains(n).map(|c| c.distinct == codes.len() as u64),
        || format!("n={n}: enumerated {}", codes.len()),
    );

    let facts: Vec<ChainFacts> = ChainKind::ALL
        .into_iter()
        .flat_map(|kind| codes.iter().map(move |c| (kind, c.clone())))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(kind, code)| chain_facts(kind, code))
        .collect();

    for f in &facts {
        let s = || subject(f.kind, &f.code);
        report.record("graph_size", f.sizes_ok, s);
        report.record("degrees", f.degrees_ok, s);
        report.record("exit_distance", f.exits_ok, s);
        let eq = match (&f.bfs, &f.recurrence, &f.closed) {
            (Ok(b), Ok(r), Ok(c)) => Ok(b == r && r == c),
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => Err(e.clone()),
        };
        report.record_result("oracle_equivalence", eq, || {
            format!(
                "{}: bfs={:?} recurrence={:?} closed={:?}",
                s(),
                f.bfs,
                f.recurrence,
                f.closed
            )
        });
        report.record(
            "reversal_invariance",
            f.closed == f.closed_reversed && f.degree_seq_reversal_ok,
            s,
        );
        if let Some(h) = &f.handshake {
            report.record_result("handshake", h.clone(), s);
        }
        if let Some(q) = &f.squeeze_graph {
            report.record_result("squeeze_graph", q.clone(), s);
        }
    }

    // squeeze relation per chain, pairing the two kinds through the code
    let spiro: BTreeMap<&CodeWord, &Result<i64>> = facts
        .iter()
        .filter(|f| f.kind == ChainKind::Spiro)
        .map(|f| (&f.code, &f.closed))
        .collect();
    for f in facts.iter().filter(|f| f.kind == ChainKind::Polyphenyl) {
        let r = match (spiro[&f.code], &f.closed) {
            (Ok(ws), Ok(wp)) => squeeze_relation(n, *ws).map(|x| x == *wp),
            (Err(e), _) | (_, Err(e)) => Err(e.clone()),
        };
        report.record_result("squeeze_relation", r, || subject(f.kind, &f.code));
    }

    for kind in ChainKind::ALL {
        let ws: Vec<i64> = facts
            .iter()
            .filter(|f| f.kind == kind)
            .filter_map(|f| f.closed.as_ref().ok().copied())
            .collect();
        let sum: i128 = ws.iter().map(|&w| w as i128).sum();
        let count = ws.len() as i128;
        let avg = average_wiener(kind, n);
        let meta = wiener_homogeneous(kind, Letter::M, n);
        report.record(
            "exhaustive_average",
            ws.len() == codes.len()
                && sum % count == 0
                && avg.as_ref().ok().map(|&a| a as i128) == Some(sum / count)
                && avg == meta,
            || format!("{kind} n={n}: sum={sum} count={count} formula={avg:?} meta={meta:?}"),
        );
        if n >= 4 {
            extremal_checks(report, kind, n, limit, &facts);
        }
    }
}

fn extremal_checks(
    report: &mut VerifyReport,
    kind: ChainKind,
    n: usize,
    limit: usize,
    facts: &[ChainFacts],
) {
    for direction in [Direction::Min, Direction::Max] {
        let ranking = match rank_extremal(kind, n, direction, 3, limit) {
            Ok(r) => r,
            Err(e) => {
                report.record("extremal_ranks", false, || format!("{kind} n={n}: {e}"));
                continue;
            }
        };
        for check in &ranking.checks {
            let s = || {
                format!(
                    "{kind} n={n} {direction:?} rank {}: {:?}",
                    check.rank, check.note
                )
            };
            if n == 4 && check.rank == 3 {
                // OP and MM tie at rank 3 in both directions; the predicted
                // chain OM already holds rank 2
                let pinned = check
                    .group
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>();
                let w = ranking.group(3).map(|e| e.w).next();
                let w_ok = match kind {
                    ChainKind::Spiro => w == Some(848),
                    ChainKind::Polyphenyl => w == squeeze_relation(4, 848).ok(),
                };
                report.record(
                    "extremal_n4_tie",
                    !check.matches && pinned == ["OP", "MM"] && w_ok,
                    s,
                );
            } else {
                report.record("extremal_ranks", check.matches, s);
            }
        }
        // strict sandwich between the two constant chains
        let lo = wiener_homogeneous(kind, Letter::O, n);
        let hi = wiener_homogeneous(kind, Letter::P, n);
        if direction == Direction::Min {
            for f in facts.iter().filter(|f| f.kind == kind) {
                let extremal = f.code.constant_letter().is_some_and(|l| l != Letter::M);
                if extremal {
                    continue;
                }
                let ok = match (&lo, &f.closed, &hi) {
                    (Ok(lo), Ok(w), Ok(hi)) => lo < w && w < hi,
                    _ => false,
                };
                report.record("extremal_sandwich", ok, || subject(kind, &f.code));
            }
        }
    }
}

fn formula_tier(report: &mut VerifyReport, n: usize) {
    for kind in ChainKind::ALL {
        for l in Letter::ALL {
            let r = CodeWord::constant(l, n)
                .and_then(|c| Ok(wiener_closed(kind, &c)? == wiener_homogeneous(kind, l, n)?));
            report.record_result("homogeneous_polynomial", r, || format!("{kind} {l}_{n}"));
        }
        let r = (|| {
            let avg = average_wiener(kind, n)?;
            Ok(avg == wiener_homogeneous(kind, Letter::M, n)? && avg == family_mean(kind, n)?)
        })();
        report.record_result("average_identities", r, || format!("{kind} n={n}"));
    }

    let r = (|| {
        let spiro = average_wiener(ChainKind::Spiro, n)?;
        let poly = average_wiener(ChainKind::Polyphenyl, n)?;
        Ok(squeeze_relation(n, spiro)? == poly)
    })();
    report.record_result("average_relation", r, || format!("n={n}"));

    for l in Letter::ALL {
        let r = (|| {
            let ws = wiener_homogeneous(ChainKind::Spiro, l, n)?;
            Ok(squeeze_relation(n, ws)? == wiener_homogeneous(ChainKind::Polyphenyl, l, n)?)
        })();
        report.record_result("squeeze_relation_families", r, || format!("{l}_{n}"));
    }

    let n_i = n as i64;
    report.record(
        "quadratic_parity",
        (45 * n_i * n_i + 9 * n_i) % 2 == 0,
        || format!("n={n}"),
    );

    if n >= 2 {
        let k = n;
        let r = (|| {
            let mut ok = true;
            for l in Letter::ALL {
                ok &= 5 * g_weight(l, k)? == 6 * f_weight(l, k)? + 30 * k as i64 - 39;
            }
            Ok(ok)
        })();
        report.record_result("weight_bridge", r, || format!("k={k}"));
        let r = (|| {
            let f: Vec<i64> = Letter::ALL
                .iter()
                .map(|&l| f_weight(l, k))
                .collect::<Result<_>>()?;
            let g: Vec<i64> = Letter::ALL
                .iter()
                .map(|&l| g_weight(l, k))
                .collect::<Result<_>>()?;
            Ok(f[0] < f[1] && f[1] < f[2] && g[0] < g[1] && g[1] < g[2])
        })();
        report.record_result("weight_monotone", r, || format!("k={k}"));
    }
}
