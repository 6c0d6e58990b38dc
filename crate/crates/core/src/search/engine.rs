//! The greedy sweep shared by the plain and seeded lexicodes.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::algebra::{FieldSpec, Matrix};
use crate::distance::distance_rank;
use crate::distance::kernel::Kernel;
use crate::grassmann::{echelon_skeleton, IdentifyingVector, Subspace};

use super::report::{CellProgress, SearchOptions, SearchReport};
use super::SubspaceCode;

/// Below this many words to compare against, a candidate is checked on the
/// calling thread.
const PAR_THRESHOLD: usize = 2048;

struct Active {
    store: usize,
    same_cell: bool,
    /// Smallest admissible rank.
    need: usize,
}

pub(crate) struct Sweep<'a, K: Kernel> {
    kernel: K,
    d: usize,
    field: FieldSpec,
    code: SubspaceCode,
    // parallel to `code.subcodes()`
    stores: Vec<(IdentifyingVector, Vec<K::Word>)>,
    seeded: Vec<usize>,
    report: SearchReport,
    opts: &'a SearchOptions,
    pool: Option<rayon::ThreadPool>,
    accepted: u64,
    started: Instant,
}

impl<'a, K: Kernel> Sweep<'a, K> {
    pub(crate) fn new(kernel: K, code: SubspaceCode, opts: &'a SearchOptions) -> Self {
        let pool = (opts.workers > 1)
            .then(|| rayon::ThreadPoolBuilder::new().num_threads(opts.workers).build().expect("thread pool"));
        let params = code.params().clone();
        let mut sweep = Self {
            kernel,
            d: params.d(),
            field: params.field().clone(),
            code: SubspaceCode::new(params),
            stores: Vec::new(),
            seeded: Vec::new(),
            report: SearchReport::default(),
            opts,
            pool,
            accepted: 0,
            started: Instant::now(),
        };
        for s in code.iter() {
            sweep.add_seed(s.clone());
        }
        sweep
    }

    fn store_index(&mut self, v: &IdentifyingVector) -> usize {
        match self.code.subcodes().get_index_of(v) {
            Some(i) => i,
            None => {
                self.stores.push((*v, Vec::new()));
                self.seeded.push(0);
                self.stores.len() - 1
            }
        }
    }

    /// Adds a codeword without any distance check.
    pub(crate) fn add_seed(&mut self, s: Subspace) {
        let i = self.store_index(s.idvec());
        self.stores[i].1.push(self.kernel.pack(&s));
        self.seeded[i] += 1;
        self.code.push_unchecked(s);
    }

    pub(crate) fn code(&self) -> &SubspaceCode {
        &self.code
    }

    pub(crate) fn report_mut(&mut self) -> &mut SearchReport {
        &mut self.report
    }

    /// Greedy pass over the cell of `v`, trying fillings in lexicographic
    /// order of the dots listed in `positions` (absolute matrix coordinates,
    /// most significant first). Candidates in `skip` are not considered.
    pub(crate) fn sweep_cell(
        &mut self,
        v: &IdentifyingVector,
        positions: &[(usize, usize)],
        skip: Option<&HashSet<Matrix>>,
    ) -> usize {
        let d = self.d;
        let mut active: Vec<Active> = Vec::new();
        let mut skipped_per_candidate = 0u64;
        for (i, (w, words)) in self.stores.iter().enumerate() {
            let dh = w.hamming(v);
            if dh < d {
                active.push(Active { store: i, same_cell: dh == 0, need: (d - dh).div_ceil(2) });
            } else {
                skipped_per_candidate += words.len() as u64;
            }
        }
        let mut own = self.code.subcodes().get_index_of(v);

        let q = self.field.size();
        let mut current = echelon_skeleton(v);
        let mut examined = 0u64;
        let mut accepted = 0usize;
        loop {
            examined += 1;
            if !skip.is_some_and(|set| set.contains(&current)) {
                let s = Subspace::from_parts(&self.field, current.clone(), *v);
                let w = self.kernel.pack(&s);
                let (ok, checks) = self.admissible(&w, &active);
                self.report.rank_checks += checks;
                if ok {
                    let i = match own {
                        Some(i) => i,
                        None => {
                            let i = self.store_index(v);
                            own = Some(i);
                            active.push(Active { store: i, same_cell: true, need: d / 2 });
                            i
                        }
                    };
                    self.stores[i].1.push(w);
                    self.accept(s);
                    accepted += 1;
                }
            }
            // odometer: the least significant dot moves fastest
            let mut carried = true;
            for &(r, c) in positions.iter().rev() {
                let x = current.get(r, c);
                if u32::from(x) + 1 < q {
                    current.set(r, c, x + 1);
                    carried = false;
                    break;
                }
                current.set(r, c, 0);
            }
            if carried {
                break;
            }
        }
        self.report.examined += examined;
        self.report.prefilter_skipped += examined * skipped_per_candidate;
        self.report.cells_swept += 1;
        if let Some(cb) = &self.opts.progress {
            cb(&CellProgress {
                idvec: *v,
                accepted,
                examined,
                code_size: self.code.len(),
                elapsed: self.started.elapsed(),
            });
        }
        accepted
    }

    fn accept(&mut self, s: Subspace) {
        self.accepted += 1;
        let every = self.opts.spot_check_every as u64;
        if every > 0 && self.accepted.is_multiple_of(every) {
            let ok = self.code.iter().all(|y| distance_rank(&s, y).expect("same space") >= self.d);
            if !ok {
                self.report.spot_check_failures += 1;
            }
            self.report.spot_checks += 1;
        }
        self.code.push_unchecked(s);
    }

    /// Whether `w` is far enough from every active word, and the number of
    /// rank computations spent.
    fn admissible(&self, w: &K::Word, active: &[Active]) -> (bool, u64) {
        let total: usize = active.iter().map(|a| self.stores[a.store].1.len()).sum();
        let pass = |a: &Active, y: &K::Word| {
            let r = if a.same_cell { self.kernel.same_cell_rank(w, y) } else { self.kernel.cross_rank(w, y) };
            r >= a.need
        };
        match &self.pool {
            Some(pool) if total >= PAR_THRESHOLD => {
                let checks = AtomicU64::new(0);
                let ok = pool.install(|| {
                    active.par_iter().all(|a| {
                        self.stores[a.store].1.par_iter().all(|y| {
                            checks.fetch_add(1, Ordering::Relaxed);
                            pass(a, y)
                        })
                    })
                });
                (ok, checks.into_inner())
            }
            _ => {
                let mut checks = 0u64;
                let ok = active.iter().all(|a| {
                    self.stores[a.store].1.iter().rev().all(|y| {
                        checks += 1;
                        pass(a, y)
                    })
                });
                (ok, checks)
            }
        }
    }

    pub(crate) fn finish(mut self) -> (SubspaceCode, SearchReport) {
        self.report.cells = self
            .stores
            .iter()
            .zip(&self.seeded)
            .map(|((v, words), &seeded)| super::CellReport { idvec: *v, size: words.len(), seeded })
            .collect();
        self.report.wall = self.started.elapsed();
        (self.code, self.report)
    }
}
