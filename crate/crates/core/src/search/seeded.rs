use std::collections::HashSet;

use crate::distance::kernel::{with_kernel, Kernel};
use crate::grassmann::{enumerate_idvecs, tableau_positions, FerrersDiagram, IdentifyingVector};
use crate::rankmetric::{dimension_bound, gabidulin_mrd, lift, rank_lexicode, EntryOrder};

use super::engine::Sweep;
use super::{cell_reports, dualize, verify, CodeParams, SearchError, SearchOptions, SearchReport, SubspaceCode};

/// Configuration of [`lexicode_with_seed`].
#[derive(Clone, Debug)]
pub struct SeedConfig {
    /// Dot order for the rank lexicode in the second seed cell; `None` uses
    /// the tableau order.
    pub step2_order: Option<EntryOrder>,
    /// More seeded cells, each filled greedily in the given dot order against
    /// the code built so far, before the main sweep.
    pub extra_cells: Vec<(IdentifyingVector, EntryOrder)>,
    /// A verified code that replaces the two seed cells; the sweep then
    /// revisits every cell the pruning rules leave.
    pub extra_seed: Option<SubspaceCode>,
    pub prune: bool,
}

impl Default for SeedConfig {
    fn default() -> Self {
        Self { step2_order: None, extra_cells: Vec::new(), extra_seed: None, prune: true }
    }
}

/// `1^{k-δ} 0^δ 1^δ 0^{n-k-δ}`, defined when `δ - 1 <= k - δ`.
pub fn second_seed_idvec(params: &CodeParams) -> Option<IdentifyingVector> {
    let (n, k, delta) = (params.n(), params.k(), params.delta());
    if delta > k || delta - 1 > k - delta || k + delta > n {
        return None;
    }
    let ones: Vec<usize> = (0..k - delta).chain(k..k + delta).collect();
    IdentifyingVector::from_positions(n, &ones).ok()
}

/// Whether the cell of `v` can hold no codeword once the cell `1^k 0^{n-k}`
/// holds a full MRD code.
pub fn prune_by_first_seed(v: &IdentifyingVector, params: &CodeParams, seed_full: bool) -> bool {
    let dh = v.hamming(&IdentifyingVector::leading_ones(params.n(), params.k()));
    seed_full && dh > 0 && dh < params.d()
}

/// Whether the cell of `v` can hold no codeword once the second seed cell
/// reaches the dimension bound: `v` must have ones at positions
/// `k..k+δ` and be closer than `d` to the second seed vector.
pub fn prune_by_second_seed(v: &IdentifyingVector, params: &CodeParams, seed2_full: bool) -> bool {
    let Some(v2) = second_seed_idvec(params) else {
        return false;
    };
    let (k, delta) = (params.k(), params.delta());
    let dh = v.hamming(&v2);
    seed2_full && (k..k + delta).all(|i| v.get(i)) && dh > 0 && dh < params.d()
}

/// Seeds the two most productive cells with rank-metric codes, then runs
/// the lexicode sweep over the remaining cells with both pruning rules.
pub fn lexicode_with_seed(
    params: &CodeParams,
    config: &SeedConfig,
    opts: &SearchOptions,
) -> Result<(SubspaceCode, SearchReport), SearchError> {
    if params.needs_dual() {
        let mut dual_config = config.clone();
        dual_config.extra_seed = config.extra_seed.as_ref().map(dualize);
        let (c, mut r) = lexicode_with_seed(&params.dual(), &dual_config, opts)?;
        r.dualized = true;
        let c = dualize(&c);
        r.cells = cell_reports(&c);
        return Ok((c, r));
    }
    with_kernel!(params.field(), k => run(k, params, config, opts))
}

fn run<K: Kernel>(
    kernel: K,
    params: &CodeParams,
    config: &SeedConfig,
    opts: &SearchOptions,
) -> Result<(SubspaceCode, SearchReport), SearchError> {
    let (n, k, delta) = (params.n(), params.k(), params.delta());
    let field = params.field();
    let q = u128::from(params.q());
    let v1 = IdentifyingVector::leading_ones(n, k);
    let v2 = second_seed_idvec(params);

    let mut done: HashSet<IdentifyingVector> = HashSet::new();
    let mut skip_words = None;
    let mut notes = Vec::new();
    let mut sweep;
    if let Some(seed) = &config.extra_seed {
        let sp = seed.params();
        if sp.n() != n || sp.k() != k || sp.field() != field {
            return Err(SearchError::SeedMismatch(format!(
                "seed is an (n={}, k={}, q={}) code",
                sp.n(),
                sp.k(),
                sp.q()
            )));
        }
        let check = verify(seed);
        if !check.meets(params.d()) {
            let w = check.witness.expect("a pair below d");
            return Err(SearchError::SeedFailsVerify(w.distance, Box::new(w)));
        }
        let mut start = SubspaceCode::new(params.clone());
        for s in seed.iter() {
            start.push_unchecked(s.clone());
        }
        skip_words = Some(start.rref_set());
        sweep = Sweep::new(kernel, start, opts);
        notes.push(format!("extended a seed of {} codewords; every unpruned cell revisited", seed.len()));
    } else {
        sweep = Sweep::new(kernel, SubspaceCode::new(params.clone()), opts);
        let mrd = gabidulin_mrd(k, n - k, delta, field)?;
        for s in lift(&mrd, &v1)? {
            sweep.add_seed(s);
        }
        done.insert(v1);
        if let Some(v2) = v2 {
            let d2 = FerrersDiagram::from_idvec(&v2);
            let order = config.step2_order.clone().unwrap_or_else(|| EntryOrder::identity(d2.size()));
            let rc = rank_lexicode(&d2, delta, field, &order)?;
            let bound = dimension_bound(&d2, delta)?;
            let attained = rc.dimension().map_or(format!("{} words", rc.len()), |e| format!("q^{e}"));
            notes.push(format!("second seed {v2}: {attained}, bound q^{bound}"));
            if rc.dimension() != Some(bound) {
                notes.push(format!("second seed {v2} is short of the dimension bound"));
            }
            for s in lift(&rc, &v2)? {
                sweep.add_seed(s);
            }
            done.insert(v2);
        }
    }

    for (v, order) in &config.extra_cells {
        if v.len() != n || v.weight() != k {
            return Err(SearchError::Params(format!("extra cell {v} is not of length {n} and weight {k}")));
        }
        if !done.insert(*v) {
            return Err(SearchError::Params(format!("cell {v} is seeded twice")));
        }
        if order.len() != FerrersDiagram::from_idvec(v).size() {
            return Err(SearchError::Params(format!("dot order for {v} has the wrong length")));
        }
        let pos = tableau_positions(v);
        let positions: Vec<(usize, usize)> = order.as_slice().iter().map(|&i| pos[i]).collect();
        let got = sweep.sweep_cell(v, &positions, skip_words.as_ref());
        notes.push(format!("extra cell {v}: {got} codewords"));
    }

    let full1 = q.checked_pow(((k - delta + 1) * (n - k)) as u32);
    let seed_full = Some(sweep.code().subcode(&v1).len() as u128) == full1;
    let seed2_full = v2.is_some_and(|v2| {
        let e = (k - delta + 1) * (n - k) - delta * delta;
        Some(sweep.code().subcode(&v2).len() as u128) == q.checked_pow(e as u32)
    });

    let (mut pruned_first, mut pruned_second) = (0, 0);
    for v in enumerate_idvecs(n, k)? {
        if done.contains(&v) {
            continue;
        }
        if config.prune && prune_by_first_seed(&v, params, seed_full) {
            pruned_first += 1;
            continue;
        }
        if config.prune && prune_by_second_seed(&v, params, seed2_full) {
            pruned_second += 1;
            continue;
        }
        sweep.sweep_cell(&v, &tableau_positions(&v), skip_words.as_ref());
    }
    let r = sweep.report_mut();
    r.pruned_first = pruned_first;
    r.pruned_second = pruned_second;
    r.notes.extend(notes);
    Ok(sweep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p8() -> CodeParams {
        CodeParams::new(8, 4, 4, 2).unwrap()
    }

    #[test]
    fn first_seed_pruning() {
        let p = p8();
        assert!(prune_by_first_seed(&"11101000".parse().unwrap(), &p, true));
        assert!(!prune_by_first_seed(&"11101000".parse().unwrap(), &p, false));
        assert!(!prune_by_first_seed(&"11110000".parse().unwrap(), &p, true));
        assert!(!prune_by_first_seed(&"11001100".parse().unwrap(), &p, true));
    }

    #[test]
    fn second_seed_pruning() {
        let p = p8();
        assert_eq!(second_seed_idvec(&p).unwrap().to_string(), "11001100");
        assert!(prune_by_second_seed(&"10101100".parse().unwrap(), &p, true));
        assert!(!prune_by_second_seed(&"10101100".parse().unwrap(), &p, false));
        assert!(!prune_by_second_seed(&"11001100".parse().unwrap(), &p, true));
        assert!(!prune_by_second_seed(&"01011010".parse().unwrap(), &p, true));
    }

    #[test]
    fn second_seed_vectors() {
        let p = CodeParams::new(7, 3, 4, 3).unwrap();
        assert_eq!(second_seed_idvec(&p).unwrap().to_string(), "1001100");
        let p = CodeParams::new(10, 5, 6, 2).unwrap();
        assert_eq!(second_seed_idvec(&p).unwrap().to_string(), "1100011100");
        // delta - 1 > k - delta
        let p = CodeParams::new(8, 3, 6, 2).unwrap();
        assert_eq!(second_seed_idvec(&p), None);
    }

    #[test]
    fn pruning_does_not_change_the_code() {
        let p = CodeParams::new(7, 3, 4, 2).unwrap();
        let opts = SearchOptions::default();
        let (a, ra) = lexicode_with_seed(&p, &SeedConfig::default(), &opts).unwrap();
        let off = SeedConfig { prune: false, ..SeedConfig::default() };
        let (b, rb) = lexicode_with_seed(&p, &off, &opts).unwrap();
        assert_eq!(a.iter().collect::<Vec<_>>(), b.iter().collect::<Vec<_>>());
        assert!(ra.pruned_first > 0);
        assert_eq!(rb.pruned_first + rb.pruned_second, 0);
        assert!(verify(&a).meets(4));
    }

    #[test]
    fn broken_seed_is_rejected() {
        let p = CodeParams::new(6, 3, 4, 2).unwrap();
        let (c, _) = super::super::lexicode(&p, &SearchOptions::default()).unwrap();
        let mut words: Vec<_> = c.iter().cloned().collect();
        words.push(words[3].clone());
        let bad = SubspaceCode::from_subspaces(p.clone(), words).unwrap();
        let cfg = SeedConfig { extra_seed: Some(bad), ..SeedConfig::default() };
        assert!(matches!(
            lexicode_with_seed(&p, &cfg, &SearchOptions::default()),
            Err(SearchError::SeedFailsVerify(0, _))
        ));
    }

    #[test]
    fn extending_a_maximal_code_adds_nothing() {
        let p = CodeParams::new(6, 3, 4, 2).unwrap();
        let (c, _) = super::super::lexicode(&p, &SearchOptions::default()).unwrap();
        let cfg = SeedConfig { extra_seed: Some(c.clone()), ..SeedConfig::default() };
        let (e, _) = lexicode_with_seed(&p, &cfg, &SearchOptions::default()).unwrap();
        assert!(e.same_set(&c));
    }
}
