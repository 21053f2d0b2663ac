//! Wiener indices of spiro and polyphenyl chains.
//!
//! Four routes are provided and kept independent of each other:
//!
//! * [`wiener_bfs`]: breadth-first search from every vertex of an explicit
//!   graph. Works on any connected graph and is the reference the other
//!   routes are checked against.
//! * [`wiener_recurrence`]: the coupled recurrence on `W(G_k)` and the
//!   distance sum of the last cut-vertex (or tail), one hexagon at a time.
//! * [`wiener_closed`]: the weighted sum `Σ (n-k) w(c_k)` over cut-vertex
//!   weights plus a quadratic term.
//! * [`wiener_homogeneous`]: cubic polynomials for the constant codes.
//!
//! All arithmetic is exact `i64` with checked overflow; fractional
//! coefficients are cleared by multiplying first and dividing once with a
//! divisibility check.

use serde::Serialize;

use crate::code::{CodeWord, Letter};
use crate::error::{Error, Result};
use crate::graph::{build_chain, ChainKind, Graph};

/// Compressed adjacency used by the BFS routines.
struct Csr {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Csr {
    fn new(graph: &Graph) -> Csr {
        let n = graph.vertex_count();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(2 * graph.edge_count());
        offsets.push(0);
        for v in 0..n {
            targets.extend(graph.neighbors(v).iter().map(|&w| w as u32));
            offsets.push(targets.len() as u32);
        }
        Csr { offsets, targets }
    }

    /// Distance sum from `source`, or `None` if some vertex is unreachable.
    /// `dist` and `queue` are scratch buffers of length `n`.
    fn distance_sum(&self, source: usize, dist: &mut [u32], queue: &mut [u32]) -> Option<u64> {
        dist.fill(u32::MAX);
        dist[source] = 0;
        queue[0] = source as u32;
        let (mut head, mut tail) = (0usize, 1usize);
        let mut sum = 0u64;
        while head < tail {
            let u = queue[head] as usize;
            head += 1;
            let du = dist[u];
            sum += du as u64;
            let (lo, hi) = (self.offsets[u] as usize, self.offsets[u + 1] as usize);
            for &w in &self.targets[lo..hi] {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = du + 1;
                    queue[tail] = w as u32;
                    tail += 1;
                }
            }
        }
        (tail == dist.len()).then_some(sum)
    }
}

fn to_i64(x: u64, what: &'static str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(what))
}

/// Wiener index by breadth-first search from every vertex.
pub fn wiener_bfs(graph: &Graph) -> Result<i64> {
    let n = graph.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let csr = Csr::new(graph);
    let mut dist = vec![0u32; n];
    let mut queue = vec![0u32; n];
    let mut total = 0u64;
    for v in 0..n {
        let s = csr
            .distance_sum(v, &mut dist, &mut queue)
            .ok_or(Error::Disconnected)?;
        total = total.checked_add(s).ok_or(Error::Overflow("wiener_bfs"))?;
    }
    // each unordered pair was counted from both ends
    to_i64(total / 2, "wiener_bfs")
}

/// Sum of distances from `v` to every other vertex.
pub fn vertex_distance_sum(graph: &Graph, v: usize) -> Result<i64> {
    let n = graph.vertex_count();
    if v >= n {
        return Err(Error::InvalidVertex {
            vertex: v,
            vertex_count: n,
        });
    }
    let csr = Csr::new(graph);
    let mut dist = vec![0u32; n];
    let mut queue = vec![0u32; n];
    let s = csr
        .distance_sum(v, &mut dist, &mut queue)
        .ok_or(Error::Disconnected)?;
    to_i64(s, "vertex_distance_sum")
}

fn k_as_i64(k: usize) -> Result<i64> {
    if k < 1 {
        return Err(Error::InvalidWeightIndex(k));
    }
    i64::try_from(k).map_err(|_| Error::Overflow("weight index"))
}

fn weight(step: i64, k: usize, what: &'static str) -> Result<i64> {
    let k = k_as_i64(k)?;
    if k == 1 {
        return Ok(9);
    }
    step.checked_mul(k - 1)
        .and_then(|x| x.checked_add(9))
        .ok_or(Error::Overflow(what))
}

/// Spiro cut-vertex weight `f(c_k)`: `5d(k-1) + 9` for ring distance `d`,
/// and 9 for `k = 1` regardless of letter.
pub fn f_weight(letter: Letter, k: usize) -> Result<i64> {
    weight(5 * letter.ring_distance() as i64, k, "f_weight")
}

/// Polyphenyl tail weight `g(t_k)`: `6(d+1)(k-1) + 9`, and 9 for `k = 1`.
pub fn g_weight(letter: Letter, k: usize) -> Result<i64> {
    weight(6 * (letter.ring_distance() as i64 + 1), k, "g_weight")
}

/// Per-kind constants of the recurrence and closed form.
struct KindRules {
    kind: ChainKind,
    /// vertices added per hexagon beyond the attachment point
    new_vertices: i64,
    weight: fn(Letter, usize) -> Result<i64>,
}

impl KindRules {
    fn of(kind: ChainKind) -> KindRules {
        match kind {
            ChainKind::Spiro => KindRules {
                kind,
                new_vertices: 5,
                weight: f_weight,
            },
            ChainKind::Polyphenyl => KindRules {
                kind,
                new_vertices: 6,
                weight: g_weight,
            },
        }
    }

    /// Additive term of the recurrence at step `m`: `45m - 18` or `90m - 63`.
    fn step_term(&self, m: i64) -> Option<i64> {
        match self.kind {
            ChainKind::Spiro => m.checked_mul(45)?.checked_sub(18),
            ChainKind::Polyphenyl => m.checked_mul(90)?.checked_sub(63),
        }
    }

    /// Quadratic term of the closed form: `(45n² + 9n)/2` or `45n² - 18n`.
    fn closed_term(&self, n: i64) -> Result<i64> {
        let sq = n.checked_mul(n).and_then(|x| x.checked_mul(45));
        match self.kind {
            ChainKind::Spiro => {
                let num = sq
                    .and_then(|x| x.checked_add(n.checked_mul(9)?))
                    .ok_or(Error::Overflow("closed form"))?;
                exact_div(num, 2, "45n^2 + 9n")
            }
            ChainKind::Polyphenyl => sq
                .and_then(|x| x.checked_sub(n.checked_mul(18)?))
                .ok_or(Error::Overflow("closed form")),
        }
    }
}

fn exact_div(numerator: i64, divisor: i64, what: &'static str) -> Result<i64> {
    if numerator % divisor != 0 {
        return Err(Error::NotDivisible {
            what,
            numerator: numerator as i128,
            divisor: divisor as i128,
        });
    }
    Ok(numerator / divisor)
}

/// Weight of the `k`-th cut-vertex (or tail) of the chain named by `code`.
fn cut_weight(rules: &KindRules, code: &CodeWord, k: usize) -> Result<i64> {
    match code.letter_for_cut(k) {
        Some(letter) => (rules.weight)(letter, k),
        // only c_1 / t_1 lacks a letter, and its weight is letter independent
        None => (rules.weight)(Letter::O, k),
    }
}

fn n_as_i64(n: usize) -> Result<i64> {
    i64::try_from(n).map_err(|_| Error::Overflow("chain length"))
}

/// Wiener index by iterating the hexagon-by-hexagon recurrence.
pub fn wiener_recurrence(kind: ChainKind, code: &CodeWord) -> Result<i64> {
    let rules = KindRules::of(kind);
    let n = code.n();
    let overflow = || Error::Overflow("recurrence");
    // W(G_1) and the distance sum of c_1 (or t_1) within G_1
    let mut w: i64 = 27;
    let mut w_cut: i64 = 9;
    for m in 2..=n {
        let m_i = n_as_i64(m)?;
        w = rules
            .new_vertices
            .checked_mul(w_cut)
            .and_then(|x| x.checked_add(w))
            .and_then(|x| x.checked_add(rules.step_term(m_i)?))
            .ok_or_else(overflow)?;
        if m < n {
            w_cut = w_cut
                .checked_add(cut_weight(&rules, code, m)?)
                .ok_or_else(overflow)?;
        }
    }
    Ok(w)
}

/// Wiener index by the closed form `c Σ_{k=1}^{n-1} (n-k) w(c_k) + q(n)`.
pub fn wiener_closed(kind: ChainKind, code: &CodeWord) -> Result<i64> {
    let rules = KindRules::of(kind);
    let n = code.n();
    let n_i = n_as_i64(n)?;
    let overflow = || Error::Overflow("closed form");
    let mut weighted = 0i64;
    for k in 1..n {
        let term = cut_weight(&rules, code, k)?
            .checked_mul(n_i - k as i64)
            .ok_or_else(overflow)?;
        weighted = weighted.checked_add(term).ok_or_else(overflow)?;
    }
    weighted
        .checked_mul(rules.new_vertices)
        .and_then(|x| x.checked_add(rules.closed_term(n_i).ok()?))
        .ok_or_else(overflow)
}

pub fn wiener_spiro_recurrence(code: &CodeWord) -> Result<i64> {
    wiener_recurrence(ChainKind::Spiro, code)
}

pub fn wiener_spiro_closed(code: &CodeWord) -> Result<i64> {
    wiener_closed(ChainKind::Spiro, code)
}

pub fn wiener_poly_recurrence(code: &CodeWord) -> Result<i64> {
    wiener_recurrence(ChainKind::Polyphenyl, code)
}

pub fn wiener_poly_closed(code: &CodeWord) -> Result<i64> {
    wiener_closed(ChainKind::Polyphenyl, code)
}

/// Evaluates `(a n³ + b n² + c n) / d` exactly.
pub(crate) fn cubic(n: usize, [a, b, c]: [i64; 3], d: i64, what: &'static str) -> Result<i64> {
    let n = n_as_i64(n)?;
    let overflow = || Error::Overflow(what);
    let n2 = n.checked_mul(n).ok_or_else(overflow)?;
    let n3 = n2.checked_mul(n).ok_or_else(overflow)?;
    let num = a
        .checked_mul(n3)
        .and_then(|x| x.checked_add(b.checked_mul(n2)?))
        .and_then(|x| x.checked_add(c.checked_mul(n)?))
        .ok_or_else(overflow)?;
    exact_div(num, d, what)
}

/// Wiener index of the constant chain `x x ... x` of length `n` from its
/// cubic polynomial.
pub fn wiener_homogeneous(kind: ChainKind, family: Letter, n: usize) -> Result<i64> {
    if n < 1 {
        return Err(Error::ChainTooShort { n, min: 1 });
    }
    let (coeffs, d) = match (kind, family) {
        (ChainKind::Spiro, Letter::O) => ([25, 195, -58], 6),
        (ChainKind::Spiro, Letter::M) => ([25, 60, -4], 3),
        (ChainKind::Spiro, Letter::P) => ([25, 15, 14], 2),
        (ChainKind::Polyphenyl, Letter::O) => ([12, 36, -21], 1),
        (ChainKind::Polyphenyl, Letter::M) => ([18, 18, -9], 1),
        (ChainKind::Polyphenyl, Letter::P) => ([24, 0, 3], 1),
    };
    cubic(n, coeffs, d, "homogeneous polynomial")
}

/// Polyphenyl Wiener index from the Wiener index of its hexagonal squeeze:
/// `(36 W + 150n³ - 270n² - 177n) / 25`.
///
/// A remainder mod 25 means `w_spiro` cannot be the Wiener index of a spiro
/// chain of length `n`.
pub fn squeeze_relation(n: usize, w_spiro: i64) -> Result<i64> {
    let n_i = n_as_i64(n)?;
    let overflow = || Error::Overflow("squeeze relation");
    let n2 = n_i.checked_mul(n_i).ok_or_else(overflow)?;
    let n3 = n2.checked_mul(n_i).ok_or_else(overflow)?;
    let num = w_spiro
        .checked_mul(36)
        .and_then(|x| x.checked_add(n3.checked_mul(150)?))
        .and_then(|x| x.checked_sub(n2.checked_mul(270)?))
        .and_then(|x| x.checked_sub(n_i.checked_mul(177)?))
        .ok_or_else(overflow)?;
    exact_div(num, 25, "squeeze relation")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Bfs,
    Recurrence,
    Closed,
    Polynomial,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Bfs,
        Method::Recurrence,
        Method::Closed,
        Method::Polynomial,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Bfs => "bfs",
            Method::Recurrence => "recurrence",
            Method::Closed => "closed",
            Method::Polynomial => "polynomial",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// Wiener index of one chain as obtained by each requested method.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WienerReport {
    #[serde(serialize_with = "serialize_code")]
    pub code: CodeWord,
    pub kind: ChainKind,
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub w_bfs: Option<i64>,
    pub w_recurrence: Option<i64>,
    pub w_closed: Option<i64>,
    pub w_polynomial: Option<i64>,
    pub agree: bool,
}

fn serialize_code<S: serde::Serializer>(
    code: &CodeWord,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(code)
}

impl WienerReport {
    pub fn values(&self) -> impl Iterator<Item = (Method, i64)> + '_ {
        [
            (Method::Bfs, self.w_bfs),
            (Method::Recurrence, self.w_recurrence),
            (Method::Closed, self.w_closed),
            (Method::Polynomial, self.w_polynomial),
        ]
        .into_iter()
        .filter_map(|(m, v)| Some((m, v?)))
    }
}

/// Computes the Wiener index of `code` with each of `methods` and records
/// whether they agree. The code is canonicalized first.
///
/// [`Method::Polynomial`] is only defined for constant codes.
pub fn compute_report(
    kind: ChainKind,
    code: &CodeWord,
    methods: &[Method],
) -> Result<WienerReport> {
    let code = code.canonicalize();
    let n = code.n();
    let mut report = WienerReport {
        code: code.clone(),
        kind,
        n,
        vertices: match kind {
            ChainKind::Spiro => 5 * n + 1,
            ChainKind::Polyphenyl => 6 * n,
        },
        edges: match kind {
            ChainKind::Spiro => 6 * n,
            ChainKind::Polyphenyl => 7 * n - 1,
        },
        w_bfs: None,
        w_recurrence: None,
        w_closed: None,
        w_polynomial: None,
        agree: true,
    };
    for &method in methods {
        match method {
            Method::Bfs => {
                let chain = build_chain(kind, &code);
                report.vertices = chain.vertex_count();
                report.edges = chain.edge_count();
                report.w_bfs = Some(wiener_bfs(&chain.graph)?);
            }
            Method::Recurrence => report.w_recurrence = Some(wiener_recurrence(kind, &code)?),
            Method::Closed => report.w_closed = Some(wiener_closed(kind, &code)?),
            Method::Polynomial => {
                if !code.is_constant() {
                    return Err(Error::NonConstantCode(code.to_string()));
                }
                let family = code.constant_letter().unwrap_or(Letter::M);
                report.w_polynomial = Some(wiener_homogeneous(kind, family, n)?);
            }
        }
    }
    let values: Vec<i64> = report.values().map(|(_, v)| v).collect();
    report.agree = values.windows(2).all(|w| w[0] == w[1]);
    Ok(report)
}
