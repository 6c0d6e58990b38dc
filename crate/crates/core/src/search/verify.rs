use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::distance::kernel::{with_kernel, Kernel};
use crate::grassmann::Subspace;

use super::SubspaceCode;

/// A closest pair, by position in [`SubspaceCode::iter`] order.
#[derive(Clone, Debug)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub first: Subspace,
    pub second: Subspace,
    pub distance: usize,
}

#[derive(Clone, Debug)]
pub struct Verification {
    /// `None` for codes with fewer than two words.
    pub min_distance: Option<usize>,
    /// The first closest pair, reported when the minimum is below `d`.
    pub witness: Option<Witness>,
    pub pairs: u64,
    pub pairs_computed: u64,
}

impl Verification {
    pub fn meets(&self, d: usize) -> bool {
        self.min_distance.is_none_or(|m| m >= d)
    }
}

/// Exact minimum distance over all pairs, on rayon's global pool.
pub fn verify(c: &SubspaceCode) -> Verification {
    with_kernel!(c.params().field(), k => run(k, c))
}

/// [`verify`] on a dedicated pool of `workers` threads.
pub fn verify_with_workers(c: &SubspaceCode, workers: usize) -> Verification {
    match rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build() {
        Ok(pool) => pool.install(|| verify(c)),
        Err(_) => verify(c),
    }
}

fn run<K: Kernel>(kernel: K, c: &SubspaceCode) -> Verification {
    let subs: Vec<&Subspace> = c.iter().collect();
    let words: Vec<K::Word> = subs.par_iter().map(|s| kernel.pack(s)).collect();
    let ids: Vec<u64> = subs.iter().map(|s| s.idvec().bits()).collect();
    let m = subs.len();
    let global = AtomicUsize::new(usize::MAX);
    let computed = AtomicUsize::new(0);

    // per row: the least distance and the first column reaching it; pairs
    // whose Hamming bound already exceeds the global best are skipped
    let best = (0..m)
        .into_par_iter()
        .filter_map(|i| {
            let mut local: Option<(usize, usize)> = None;
            let mut count = 0usize;
            for j in i + 1..m {
                let dh = (ids[i] ^ ids[j]).count_ones() as usize;
                let local_best = local.map_or(usize::MAX, |(d, _)| d);
                if dh >= local_best || dh > global.load(Ordering::Relaxed) {
                    continue;
                }
                count += 1;
                let d = if dh == 0 {
                    2 * kernel.same_cell_rank(&words[i], &words[j])
                } else {
                    dh + 2 * kernel.cross_rank(&words[i], &words[j])
                };
                if local.is_none_or(|(b, _)| d < b) {
                    local = Some((d, j));
                    global.fetch_min(d, Ordering::Relaxed);
                }
            }
            computed.fetch_add(count, Ordering::Relaxed);
            local.map(|(d, j)| (d, i, j))
        })
        .min();

    let d = c.params().d();
    Verification {
        min_distance: best.map(|(d, _, _)| d),
        witness: best.filter(|&(dist, _, _)| dist < d).map(|(distance, i, j)| Witness {
            i,
            j,
            first: subs[i].clone(),
            second: subs[j].clone(),
            distance,
        }),
        pairs: (m as u64) * (m.saturating_sub(1) as u64) / 2,
        pairs_computed: computed.into_inner() as u64,
    }
}
