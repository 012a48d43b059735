//! Exhaustive corpora of small connected graphs and one checker per
//! statement about `σ1`.

mod checks;
mod corpus;
mod report;

pub use checks::{
    bound_for_cyclic, find_minimum, verify_good_cyclic_no_bridge, verify_good_cyclic_no_cutvertex,
    verify_main_theorem, verify_sigma1_at_least_m, verify_star_minimum, verify_statement,
    verify_structural_claims, CheckOptions, Extremum,
};
pub use corpus::{
    enumerate_connected, enumerate_connected_with, GeneratorConfig, GraphCorpus, Provenance,
    Strategy, MAX_BUILTIN_ORDER,
};
pub use report::{ClaimVerdict, Counterexample, Statement, Verdict, VerificationReport};

/// Maps `f` over `items` on `workers` threads (0 = one per core), keeping
/// input order in the output.
#[cfg(feature = "parallel")]
pub(crate) fn par_map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    if workers == 1 || items.len() < 2 {
        return items.iter().enumerate().map(|(i, t)| f(i, t)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    pool.install(|| items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect())
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T, R, F>(items: &[T], _workers: usize, f: F) -> Vec<R>
where
    F: Fn(usize, &T) -> R,
{
    items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
}
