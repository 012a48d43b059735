use std::time::Duration;

use crate::canon::{canonical_key, CanonicalKey};
use crate::error::VerifyError;
use crate::family;
use crate::goodness::is_good;
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::sigma::{sigma1_recursive, sigma_bruteforce, MemoTable};
use crate::traversal::{bridges, cut_vertices, has_cycle};

use super::corpus::GraphCorpus;
use super::par_map;
use super::report::{ClaimVerdict, Counterexample, Statement, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckOptions {
    /// Worker threads, 0 for one per core.
    pub workers: usize,
    /// Fraction of graphs whose recursive `σ1` is re-checked by brute force.
    pub audit_fraction: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            workers: 0,
            audit_fraction: 0.01,
        }
    }
}

/// The `σ1` lower bound for connected graphs with a cycle: `n` at `n = 3`,
/// `2n - 4` from `n = 4` on. No cyclic graphs exist below order 3.
pub fn bound_for_cyclic(n: usize) -> Option<u64> {
    match n {
        0..=2 => None,
        3 => Some(3),
        _ => Some(2 * n as u64 - 4),
    }
}

#[cfg(not(target_arch = "wasm32"))]
struct Stopwatch(std::time::Instant);

#[cfg(not(target_arch = "wasm32"))]
impl Stopwatch {
    fn start() -> Self {
        Stopwatch(std::time::Instant::now())
    }
    fn elapsed(&self) -> Duration {
        self.0.elapsed()
    }
}

#[cfg(target_arch = "wasm32")]
struct Stopwatch;

#[cfg(target_arch = "wasm32")]
impl Stopwatch {
    fn start() -> Self {
        Stopwatch
    }
    fn elapsed(&self) -> Duration {
        Duration::ZERO
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Deterministic audit selection from the graph's position in its corpus.
fn audited(order: usize, index: usize, fraction: f64) -> bool {
    if fraction <= 0.0 {
        return false;
    }
    if fraction >= 1.0 {
        return true;
    }
    let h = splitmix((order as u64) << 32 ^ index as u64);
    (h as f64) < fraction * u64::MAX as f64
}

/// What one checker concluded about one graph.
#[derive(Default)]
struct Outcome {
    witness: bool,
    failures: Vec<String>,
    claims: Vec<(char, bool)>,
}

impl Outcome {
    fn fail(&mut self, observed: String) {
        self.failures.push(observed);
    }
}

struct Run {
    report: VerificationReport,
    witnesses: Vec<Graph>,
}

fn run<F>(
    statement: Statement,
    corpus: &GraphCorpus,
    opts: &CheckOptions,
    check: F,
) -> Result<Run, VerifyError>
where
    F: Fn(&Graph, u64) -> Outcome + Sync + Send,
{
    let clock = Stopwatch::start();
    let n = corpus.order();
    let outcomes = par_map(corpus.graphs(), opts.workers, |i, g| {
        let sigma1 = sigma1_recursive(g, &mut MemoTable::new())?.value;
        let mut outcome = check(g, sigma1);
        if audited(n, i, opts.audit_fraction) {
            let brute = sigma_bruteforce(g, 1)?.value;
            if brute != sigma1 {
                outcome.fail(format!("audit;recursive={sigma1};brute={brute}"));
            }
        }
        Ok::<_, VerifyError>(outcome)
    });

    let mut report = VerificationReport::new(statement, n);
    report.graphs_checked = corpus.len();
    let mut witnesses = Vec::new();
    for (g, outcome) in corpus.graphs().iter().zip(outcomes) {
        let outcome = outcome?;
        if outcome.witness || !outcome.failures.is_empty() {
            let g6 = to_graph6(g)?;
            if outcome.witness {
                report.witnesses.push(g6.clone());
                witnesses.push(g.clone());
            }
            for observed in outcome.failures {
                report.counterexamples.push(Counterexample {
                    graph6: g6.clone(),
                    observed,
                });
            }
        }
        for (claim, failed) in outcome.claims {
            let entry = match report.claims.iter_mut().position(|c| c.claim == claim) {
                Some(i) => &mut report.claims[i],
                None => {
                    report.claims.push(ClaimVerdict {
                        claim,
                        applicable: 0,
                        failures: 0,
                    });
                    report.claims.last_mut().expect("just pushed")
                }
            };
            entry.applicable += 1;
            entry.failures += usize::from(failed);
        }
    }
    report.normalize();
    report.elapsed = clock.elapsed();
    Ok(Run { report, witnesses })
}

/// Requires the equality witnesses to be exactly the graph `expected`, up to
/// isomorphism.
fn require_unique_witness(run: &mut Run, expected: &Graph) -> Result<(), VerifyError> {
    let want = canonical_key(expected)?;
    let mut found = false;
    for g in &run.witnesses {
        if canonical_key(g)? == want {
            found = true;
        } else {
            run.report.counterexamples.push(Counterexample {
                graph6: to_graph6(g)?,
                observed: "unexpected-equality".into(),
            });
        }
    }
    if !found {
        run.report.counterexamples.push(Counterexample {
            graph6: to_graph6(expected)?,
            observed: "missing-equality".into(),
        });
    }
    run.report.normalize();
    Ok(())
}

/// `σ1(G) >= m` for every connected `G`, with equality exactly when `G` is good.
pub fn verify_sigma1_at_least_m(
    corpus: &GraphCorpus,
    opts: &CheckOptions,
) -> Result<VerificationReport, VerifyError> {
    let run = run(Statement::Sigma1AtLeastM, corpus, opts, |g, s| {
        let m = g.size() as u64;
        let good = is_good(g);
        let mut out = Outcome {
            witness: s == m,
            ..Outcome::default()
        };
        if s < m {
            out.fail(format!("sigma1={s};m={m}"));
        } else if (s == m) != good {
            out.fail(format!("sigma1={s};m={m};good={good}"));
        }
        out
    })?;
    Ok(run.report)
}

/// `σ1(G) >= n - 1`, with the star as the only graph attaining it.
pub fn verify_star_minimum(
    corpus: &GraphCorpus,
    opts: &CheckOptions,
) -> Result<VerificationReport, VerifyError> {
    let n = corpus.order();
    let bound = n as u64 - 1;
    let mut run = run(Statement::StarMinimum, corpus, opts, |_, s| {
        let mut out = Outcome {
            witness: s == bound,
            ..Outcome::default()
        };
        if s < bound {
            out.fail(format!("sigma1={s};bound={bound}"));
        }
        out
    })?;
    let star = if n == 1 { Graph::empty(1)? } else { family::star(n)? };
    require_unique_witness(&mut run, &star)?;
    Ok(run.report)
}

fn good_cyclic_lemma<F>(
    statement: Statement,
    corpus: &GraphCorpus,
    opts: &CheckOptions,
    offending: F,
) -> Result<VerificationReport, VerifyError>
where
    F: Fn(&Graph) -> Option<String> + Sync + Send,
{
    let run = run(statement, corpus, opts, |g, _| {
        let mut out = Outcome::default();
        if is_good(g) && has_cycle(g) {
            match offending(g) {
                Some(observed) => out.fail(observed),
                None => out.witness = true,
            }
        }
        out
    })?;
    Ok(run.report)
}

/// Good graphs containing a cycle have no bridge.
pub fn verify_good_cyclic_no_bridge(
    corpus: &GraphCorpus,
    opts: &CheckOptions,
) -> Result<VerificationReport, VerifyError> {
    good_cyclic_lemma(Statement::GoodCyclicNoBridge, corpus, opts, |g| {
        let b = bridges(g);
        (!b.is_empty()).then(|| format!("bridges={}", b.len()))
    })
}

/// Good graphs containing a cycle have no cut vertex.
pub fn verify_good_cyclic_no_cutvertex(
    corpus: &GraphCorpus,
    opts: &CheckOptions,
) -> Result<VerificationReport, VerifyError> {
    good_cyclic_lemma(Statement::GoodCyclicNoCutVertex, corpus, opts, |g| {
        let c = cut_vertices(g);
        (!c.is_empty()).then(|| format!("cut_vertices={}", c.len()))
    })
}

/// The lower bound on `σ1` over connected graphs with a cycle, attained only
/// by `K_3` at `n = 3` and by `K_{2,n-2}` from `n = 4` on.
pub fn verify_main_theorem(
    corpus: &GraphCorpus,
    opts: &CheckOptions,
) -> Result<VerificationReport, VerifyError> {
    let n = corpus.order();
    let bound = bound_for_cyclic(n);
    let mut run = run(Statement::MainTheorem, corpus, opts, |g, s| {
        let mut out = Outcome::default();
        if let (true, Some(b)) = (has_cycle(g), bound) {
            out.witness = s == b;
            if s < b {
                out.fail(format!("sigma1={s};bound={b}"));
            }
        }
        out
    })?;
    if bound.is_some() {
        let extremal = if n == 3 {
            family::complete(3)?
        } else {
            family::complete_bipartite(2, n - 2)?
        };
        require_unique_witness(&mut run, &extremal)?;
    }
    Ok(run.report)
}

/// The five claims behind the main theorem, for `n >= 4`:
///
/// * (a) cyclic with `Δ = n - 1` implies `σ1 > 2n - 4`;
/// * (b) cyclic with `δ >= 3` implies `σ1 > 2n - 4`;
/// * (c) good with `δ = 2` implies `Δ >= n - 2`;
/// * (d) good with `δ = 2`, `Δ = n - 2`: every degree-2 vertex is an
///   `(n-2, n-2)`-vertex;
/// * (e) good with `δ = 2`, `Δ = n - 2`: every degree is `2` or `n - 2`.
///
/// Witnesses are the graphs meeting the hypotheses of (d) and (e).
pub fn verify_structural_claims(
    corpus: &GraphCorpus,
    opts: &CheckOptions,
) -> Result<VerificationReport, VerifyError> {
    let n = corpus.order();
    let run = run(Statement::StructuralClaims, corpus, opts, |g, s| {
        let mut out = Outcome::default();
        if n < 4 {
            return out;
        }
        let bound = 2 * n as u64 - 4;
        let (Ok(min_deg), Ok(max_deg)) = (g.min_degree(), g.max_degree()) else {
            return out;
        };
        let cyclic = has_cycle(g);
        let mut claim = |id: char, holds: bool, observed: String| {
            out.claims.push((id, !holds));
            if !holds {
                out.failures.push(format!("claim={id};{observed}"));
            }
        };
        if cyclic && max_deg == n - 1 {
            claim('a', s > bound, format!("sigma1={s};bound={bound}"));
        }
        if cyclic && min_deg >= 3 {
            claim('b', s > bound, format!("sigma1={s};bound={bound}"));
        }
        let good = is_good(g);
        if good && min_deg == 2 {
            claim('c', max_deg + 2 >= n, format!("max_degree={max_deg}"));
        }
        if good && min_deg == 2 && max_deg == n - 2 {
            let bad_profile = (0..n).find(|&v| {
                g.degree(v) == 2
                    && !g
                        .degree_profile(v)
                        .map(|p| p.all_neighbors_have_degree(n - 2))
                        .unwrap_or(false)
            });
            claim(
                'd',
                bad_profile.is_none(),
                format!("vertex={}", bad_profile.unwrap_or(0)),
            );
            let off = (0..n).find(|&v| g.degree(v) != 2 && g.degree(v) != n - 2);
            claim('e', off.is_none(), format!("vertex={}", off.unwrap_or(0)));
            out.witness = true;
        }
        out
    })?;
    let mut report = run.report;
    for id in ['a', 'b', 'c', 'd', 'e'] {
        if !report.claims.iter().any(|c| c.claim == id) {
            report.claims.push(ClaimVerdict {
                claim: id,
                applicable: 0,
                failures: 0,
            });
        }
    }
    report.normalize();
    Ok(report)
}

/// Dispatches to the checker for `statement`.
pub fn verify_statement(
    statement: Statement,
    corpus: &GraphCorpus,
    opts: &CheckOptions,
) -> Result<VerificationReport, VerifyError> {
    match statement {
        Statement::Sigma1AtLeastM => verify_sigma1_at_least_m(corpus, opts),
        Statement::StarMinimum => verify_star_minimum(corpus, opts),
        Statement::GoodCyclicNoBridge => verify_good_cyclic_no_bridge(corpus, opts),
        Statement::GoodCyclicNoCutVertex => verify_good_cyclic_no_cutvertex(corpus, opts),
        Statement::MainTheorem => verify_main_theorem(corpus, opts),
        Statement::StructuralClaims => verify_structural_claims(corpus, opts),
    }
}

/// Minimum `σ1` over the graphs passing `filter`, with every graph attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremum {
    pub value: u64,
    pub witnesses: Vec<Graph>,
    pub keys: Vec<CanonicalKey>,
}

pub fn find_minimum<F>(corpus: &GraphCorpus, filter: F) -> Result<Extremum, VerifyError>
where
    F: Fn(&Graph) -> bool + Sync + Send,
{
    let values = par_map(corpus.graphs(), 0, |_, g| {
        if filter(g) {
            sigma1_recursive(g, &mut MemoTable::new()).map(|c| Some(c.value))
        } else {
            Ok(None)
        }
    });
    let mut best: Option<Extremum> = None;
    for ((g, key), value) in corpus.graphs().iter().zip(corpus.keys()).zip(values) {
        let Some(v) = value? else { continue };
        match &mut best {
            Some(b) if v > b.value => {}
            Some(b) if v == b.value => {
                b.witnesses.push(g.clone());
                b.keys.push(*key);
            }
            _ => {
                best = Some(Extremum {
                    value: v,
                    witnesses: vec![g.clone()],
                    keys: vec![*key],
                })
            }
        }
    }
    best.ok_or(VerifyError::NoGraphs)
}
