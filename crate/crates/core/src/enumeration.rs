//! Exhaustive enumeration of chains, extremal rankings and averages.
//!
//! Every chain of length `n` has `3^(n-2)` codes; a chain and its reversal
//! are the same graph, so each chain is listed once through its canonical
//! (lexicographically smaller) code. Enumeration walks all codes in
//! lexicographic order and keeps the canonical ones; the closed-form census
//! is checked against that walk rather than used to drive it.

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{CodeWord, Letter};
use crate::error::{Error, Result};
use crate::graph::ChainKind;
use crate::wiener::{cubic, wiener_closed, wiener_homogeneous};

/// Largest `n` enumerated without an explicit override.
pub const DEFAULT_MAX_N: usize = 14;

/// Number of leading letters used to split the code space between workers.
const PARTITION_PREFIX: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainCensus {
    pub n: usize,
    pub total_codes: u64,
    pub palindromic: u64,
    pub distinct: u64,
}

fn pow3(e: usize) -> Option<u64> {
    3u64.checked_pow(u32::try_from(e).ok()?)
}

/// Number of distinct chains of length `n`, `(3^(n-2) + 3^⌊(n-1)/2⌋) / 2`.
///
/// Lengths 1 and 2 each admit a single chain.
pub fn count_chains(n: usize) -> Result<ChainCensus> {
    if n < 1 {
        return Err(Error::ChainTooShort { n, min: 1 });
    }
    if n <= 2 {
        return Ok(ChainCensus {
            n,
            total_codes: 1,
            palindromic: 1,
            distinct: 1,
        });
    }
    let overflow = || Error::Overflow("chain census");
    let total_codes = pow3(n - 2).ok_or_else(overflow)?;
    let palindromic = pow3((n - 1) / 2).ok_or_else(overflow)?;
    let distinct = total_codes.checked_add(palindromic).ok_or_else(overflow)? / 2;
    Ok(ChainCensus {
        n,
        total_codes,
        palindromic,
        distinct,
    })
}

fn check_limit(n: usize, max_n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::ChainTooShort { n, min: 1 });
    }
    if n > max_n {
        return Err(Error::LimitExceeded { n, limit: max_n });
    }
    Ok(())
}

/// Decodes `index` as a base-3 word of `len` letters, most significant first.
fn decode(mut index: u64, len: usize) -> Vec<Letter> {
    let mut letters = vec![Letter::O; len];
    for slot in letters.iter_mut().rev() {
        *slot = Letter::from_digit(index % 3);
        index /= 3;
    }
    letters
}

/// Lazily yields the canonical code of every chain of one length, in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct Chains {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for Chains {
    type Item = CodeWord;

    fn next(&mut self) -> Option<CodeWord> {
        if self.n <= 2 {
            if self.next < self.end {
                self.next = self.end;
                return CodeWord::short(self.n).ok();
            }
            return None;
        }
        while self.next < self.end {
            let code = CodeWord::new(decode(self.next, self.n - 2));
            self.next += 1;
            if code.is_canonical() {
                return Some(code);
            }
        }
        None
    }
}

/// Canonical codes of all chains of length `n`, refusing `n > max_n`.
pub fn enumerate_chains(n: usize, max_n: usize) -> Result<Chains> {
    check_limit(n, max_n)?;
    let end = if n <= 2 {
        1
    } else {
        pow3(n - 2).ok_or(Error::Overflow("code space"))?
    };
    Ok(Chains { n, next: 0, end })
}

/// Same sequence as [`enumerate_chains`], computed in parallel over blocks of
/// codes sharing a fixed prefix and concatenated in prefix order.
pub fn enumerate_chains_par(n: usize, max_n: usize) -> Result<Vec<CodeWord>> {
    let whole = enumerate_chains(n, max_n)?;
    if n <= 2 {
        return Ok(whole.collect());
    }
    let len = n - 2;
    let prefix = len.min(PARTITION_PREFIX);
    let blocks = pow3(prefix).unwrap_or(1);
    let block_size = whole.end / blocks;
    let parts: Vec<Vec<CodeWord>> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            Chains {
                n,
                next: b * block_size,
                end: (b + 1) * block_size,
            }
            .collect()
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

impl Direction {
    fn extreme_letter(self) -> Letter {
        match self {
            Direction::Min => Letter::O,
            Direction::Max => Letter::P,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankEntry {
    #[serde(serialize_with = "serialize_code")]
    pub code: CodeWord,
    pub w: i64,
    /// 1-based; tied chains share a rank and ranks are contiguous.
    pub rank: usize,
}

fn serialize_code<S: serde::Serializer>(
    code: &CodeWord,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(code)
}

/// Comparison of one rank group with the chain predicted to occupy it alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCheck {
    pub rank: usize,
    pub predicted: CodeWord,
    pub group: Vec<CodeWord>,
    /// The group consists of exactly the predicted chain.
    pub matches: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalRanking {
    pub kind: ChainKind,
    pub n: usize,
    pub direction: Direction,
    pub entries: Vec<RankEntry>,
    pub checks: Vec<RankCheck>,
}

impl ExtremalRanking {
    pub fn group(&self, rank: usize) -> impl Iterator<Item = &RankEntry> {
        self.entries.iter().filter(move |e| e.rank == rank)
    }

    pub fn check(&self, rank: usize) -> Option<&RankCheck> {
        self.checks.iter().find(|c| c.rank == rank)
    }
}

/// Chain expected to hold `rank` (1..=3) in the given direction, for
/// `n >= 4`: `x…x`, `x…xM` and `x…xMx` with `x = O` for minima and `x = P`
/// for maxima, canonicalized.
pub fn predicted_extremal(direction: Direction, n: usize, rank: usize) -> Option<CodeWord> {
    if n < 4 {
        return None;
    }
    let x = direction.extreme_letter();
    let len = n - 2;
    let mut letters = vec![x; len];
    match rank {
        1 => {}
        2 => letters[len - 1] = Letter::M,
        3 => letters[len - 2] = Letter::M,
        _ => return None,
    }
    Some(CodeWord::new(letters).canonicalize())
}

/// Wiener index (closed form) of every chain of length `n`, in enumeration
/// order.
pub fn wiener_census(kind: ChainKind, n: usize, max_n: usize) -> Result<Vec<(CodeWord, i64)>> {
    enumerate_chains_par(n, max_n)?
        .into_par_iter()
        .map(|code| {
            let w = wiener_closed(kind, &code)?;
            Ok((code, w))
        })
        .collect()
}

/// Ranks all chains of length `n` by Wiener index and keeps the first `top`
/// rank groups. Ranks 1 to 3 are compared against [`predicted_extremal`].
pub fn rank_extremal(
    kind: ChainKind,
    n: usize,
    direction: Direction,
    top: usize,
    max_n: usize,
) -> Result<ExtremalRanking> {
    let mut all = wiener_census(kind, n, max_n)?;
    match direction {
        Direction::Min => all.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0))),
        Direction::Max => all.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0))),
    }

    let mut entries: Vec<RankEntry> = Vec::new();
    let mut rank = 0;
    for (code, w) in all {
        if entries.last().is_none_or(|e| e.w != w) {
            rank += 1;
            if rank > top {
                break;
            }
        }
        entries.push(RankEntry { code, w, rank });
    }

    let checks = (1..=rank.min(top).min(3))
        .filter_map(|r| {
            let predicted = predicted_extremal(direction, n, r)?;
            let group: Vec<CodeWord> = entries
                .iter()
                .filter(|e| e.rank == r)
                .map(|e| e.code.clone())
                .collect();
            let matches = group.len() == 1 && group[0] == predicted;
            let note = (!matches).then(|| {
                let mut parts = Vec::new();
                if group.len() > 1 {
                    let names: Vec<String> = group.iter().map(ToString::to_string).collect();
                    parts.push(format!("rank {r} is a tie among {}", names.join(", ")));
                }
                if let Some(e) = entries.iter().find(|e| e.code == predicted) {
                    if e.rank != r {
                        parts.push(format!("predicted chain {predicted} holds rank {}", e.rank));
                    }
                } else if !group.contains(&predicted) {
                    parts.push(format!("predicted chain {predicted} is not in rank {r}"));
                }
                parts.join("; ")
            });
            Some(RankCheck {
                rank: r,
                predicted,
                group,
                matches,
                note,
            })
        })
        .collect();

    Ok(ExtremalRanking {
        kind,
        n,
        direction,
        entries,
        checks,
    })
}

/// Average Wiener index over all chains of length `n`:
/// `(25n³ + 60n² - 4n) / 3` for spiro chains, `18n³ + 18n² - 9n` for
/// polyphenyl chains.
pub fn average_wiener(kind: ChainKind, n: usize) -> Result<i64> {
    if n < 1 {
        return Err(Error::ChainTooShort { n, min: 1 });
    }
    match kind {
        ChainKind::Spiro => cubic(n, [25, 60, -4], 3, "spiro average"),
        ChainKind::Polyphenyl => cubic(n, [18, 18, -9], 1, "polyphenyl average"),
    }
}

/// Mean of the three constant chains `O_n`, `M_n`, `P_n`.
pub fn family_mean(kind: ChainKind, n: usize) -> Result<i64> {
    let mut sum = 0i64;
    for l in Letter::ALL {
        sum = sum
            .checked_add(wiener_homogeneous(kind, l, n)?)
            .ok_or(Error::Overflow("family mean"))?;
    }
    if sum % 3 != 0 {
        return Err(Error::NotDivisible {
            what: "family mean",
            numerator: sum as i128,
            divisor: 3,
        });
    }
    Ok(sum / 3)
}

/// Aggregate of the Wiener index over every chain of one length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExhaustiveSummary {
    pub kind: ChainKind,
    pub n: usize,
    pub count: u64,
    pub sum: i128,
    pub min: i64,
    pub max: i64,
}

impl ExhaustiveSummary {
    /// The mean, if it is an integer.
    pub fn exact_mean(&self) -> Option<i64> {
        let count = self.count as i128;
        (count > 0 && self.sum % count == 0).then(|| (self.sum / count) as i64)
    }
}

pub fn summarize(kind: ChainKind, n: usize, max_n: usize) -> Result<ExhaustiveSummary> {
    let all = wiener_census(kind, n, max_n)?;
    Ok(ExhaustiveSummary {
        kind,
        n,
        count: all.len() as u64,
        sum: all.iter().map(|&(_, w)| w as i128).sum(),
        min: all.iter().map(|&(_, w)| w).min().unwrap_or(0),
        max: all.iter().map(|&(_, w)| w).max().unwrap_or(0),
    })
}
