use std::fmt;
use std::sync::Arc;
use std::time::Duration;

use crate::grassmann::{FerrersDiagram, IdentifyingVector};

/// Emitted after every swept cell.
#[derive(Clone, Debug)]
pub struct CellProgress {
    pub idvec: IdentifyingVector,
    pub accepted: usize,
    pub examined: u64,
    pub code_size: usize,
    pub elapsed: Duration,
}

pub type ProgressFn = Arc<dyn Fn(&CellProgress) + Send + Sync>;

/// Knobs that change how much work a search does, never its result.
#[derive(Clone)]
pub struct SearchOptions {
    /// Threads for the candidate checks; 1 keeps everything on the caller.
    pub workers: usize,
    /// Re-check every `n`-th acceptance against the whole code with the
    /// reference distance; 0 turns this off.
    pub spot_check_every: usize,
    pub progress: Option<ProgressFn>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { workers: 1, spot_check_every: 100, progress: None }
    }
}

impl fmt::Debug for SearchOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SearchOptions")
            .field("workers", &self.workers)
            .field("spot_check_every", &self.spot_check_every)
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellReport {
    pub idvec: IdentifyingVector,
    pub size: usize,
    /// Words that came from a seed rather than the sweep.
    pub seeded: usize,
}

#[derive(Clone, Debug, Default)]
pub struct SearchReport {
    pub cells: Vec<CellReport>,
    pub examined: u64,
    pub rank_checks: u64,
    /// Candidate/codeword pairs never compared because the identifying
    /// vectors were already at Hamming distance `d` or more.
    pub prefilter_skipped: u64,
    pub cells_swept: usize,
    pub pruned_first: usize,
    pub pruned_second: usize,
    pub spot_checks: u64,
    pub spot_check_failures: u64,
    pub dualized: bool,
    pub wall: Duration,
    pub notes: Vec<String>,
}

impl SearchReport {
    pub fn total(&self) -> usize {
        self.cells.iter().map(|c| c.size).sum()
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.cells.first().map_or(1, |c| c.idvec.len()).max(6);
        writeln!(f, "{:>4}  {:<width$}  {:>5}  {:>8}  {:>8}", "i", "idvec", "|F|", "size", "seeded")?;
        for (i, c) in self.cells.iter().enumerate() {
            writeln!(
                f,
                "{:>4}  {:<width$}  {:>5}  {:>8}  {:>8}",
                i + 1,
                c.idvec.to_string(),
                FerrersDiagram::from_idvec(&c.idvec).size(),
                c.size,
                c.seeded
            )?;
        }
        writeln!(f, "M = {}", self.total())?;
        writeln!(
            f,
            "examined {}  rank checks {}  prefilter-skipped pairs {}",
            self.examined, self.rank_checks, self.prefilter_skipped
        )?;
        writeln!(
            f,
            "cells swept {}  pruned (first seed) {}  pruned (second seed) {}",
            self.cells_swept, self.pruned_first, self.pruned_second
        )?;
        writeln!(f, "spot checks {} ({} failed)", self.spot_checks, self.spot_check_failures)?;
        if self.dualized {
            writeln!(f, "searched the dual parameters and complemented the result")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        write!(f, "wall {:.3}s", self.wall.as_secs_f64())
    }
}
