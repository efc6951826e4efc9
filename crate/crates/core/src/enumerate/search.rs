use crate::error::{domain, Result};
use crate::graph::{canonical_tree_relabel, to_graph6, Graph};
use crate::spectral::{radius_isolator, RadiusEnclosure, RootIsolator};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::time::{Duration, Instant};

/// Work done by a search; excluded from serialisation so reports stay
/// reproducible.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RuntimeStats {
    pub elapsed: Duration,
    pub chunks: usize,
}

/// All graphs attaining the smallest spectral radius in a class.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchResult {
    /// graph6 strings, canonical for trees, sorted.
    pub minimizers: Vec<String>,
    pub rho: RadiusEnclosure,
    pub class_size: usize,
    #[serde(skip)]
    pub runtime_stats: RuntimeStats,
}

impl SearchResult {
    pub fn minimizer_graphs(&self) -> Vec<Graph> {
        self.minimizers
            .iter()
            .map(|s| crate::graph::from_graph6(s).expect("stored graph6 is valid"))
            .collect()
    }
}

/// Running arg-min under exact comparison.
struct Best {
    iso: RootIsolator,
    graphs: Vec<Graph>,
    seen: usize,
}

impl Best {
    fn single(g: Graph) -> Result<Self> {
        Ok(Best {
            iso: radius_isolator(&g)?,
            graphs: vec![g],
            seen: 1,
        })
    }

    fn merge(mut self, mut other: Best) -> Best {
        let seen = self.seen + other.seen;
        let mut out = match self.iso.compare(&mut other.iso) {
            Ordering::Less => self,
            Ordering::Greater => other,
            Ordering::Equal => {
                self.graphs.append(&mut other.graphs);
                self
            }
        };
        out.seen = seen;
        out
    }
}

fn canonical_string(g: &Graph) -> String {
    match canonical_tree_relabel(g) {
        Some(c) => to_graph6(&c),
        None => to_graph6(g),
    }
}

fn finish(best: Option<Best>, chunks: usize, start: Instant) -> Result<SearchResult> {
    let Some(mut best) = best else {
        return domain("cannot minimise over an empty class");
    };
    let mut minimizers: Vec<String> = best.graphs.iter().map(canonical_string).collect();
    minimizers.sort();
    minimizers.dedup();
    best.iso.refine(&crate::spectral::default_tol());
    Ok(SearchResult {
        minimizers,
        rho: best.iso.enclosure(),
        class_size: best.seen,
        runtime_stats: RuntimeStats {
            elapsed: start.elapsed(),
            chunks,
        },
    })
}

fn fold<I: Iterator<Item = Graph>>(graphs: I) -> Result<Option<Best>> {
    let mut best: Option<Best> = None;
    for g in graphs {
        let next = Best::single(g)?;
        best = Some(match best {
            None => next,
            Some(b) => b.merge(next),
        });
    }
    Ok(best)
}

/// Exact minimum of `ρ` over a class of connected graphs, scanned in order.
pub fn find_minimizer<I: IntoIterator<Item = Graph>>(class: I) -> Result<SearchResult> {
    let start = Instant::now();
    let best = fold(class.into_iter())?;
    finish(best, 1, start)
}

/// Same result as [`find_minimizer`], with the stream cut into contiguous
/// chunks that are reduced on the rayon pool.
pub fn find_minimizer_parallel<I: IntoIterator<Item = Graph>>(
    class: I,
    chunk: usize,
) -> Result<SearchResult> {
    let start = Instant::now();
    let chunk = chunk.max(1);
    let mut iter = class.into_iter();
    let mut best: Option<Best> = None;
    let mut chunks = 0;
    loop {
        let batch: Vec<Graph> = iter
            .by_ref()
            .take(chunk * rayon::current_num_threads())
            .collect();
        if batch.is_empty() {
            break;
        }
        let parts: Vec<Option<Best>> = batch
            .par_chunks(chunk)
            .map(|c| fold(c.iter().cloned()))
            .collect::<Result<_>>()?;
        chunks += parts.len();
        for part in parts.into_iter().flatten() {
            best = Some(match best {
                None => part,
                Some(b) => b.merge(part),
            });
        }
    }
    finish(best, chunks, start)
}
