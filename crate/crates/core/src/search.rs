//! Brute-force and heuristic search for large minimal t-fold blocking sets.
//!
//! The exhaustive search walks subsets in canonical point order with
//! branch-and-bound pruning: a branch dies as soon as some block can no
//! longer reach t points, the candidate exceeds the plane bound, or it can
//! no longer tie the best size found. Work is partitioned over the first few
//! points' membership patterns; partitions are merged in pattern order, so
//! results are identical no matter how many threads run them.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::blocking::{
    covers_with_t_secants, is_t_fold_blocking, main_bound, secant_spectrum, BlockingMode,
    BoundReport, IncidenceGeometry, PointSet,
};
use crate::geometry::ProjectiveSpace;

/// Default cap on point count for exhaustive enumeration.
pub const MAX_EXHAUSTIVE_POINTS: usize = 25;
/// Maximum number of witnesses kept per search.
pub const WITNESS_CAP: usize = 100;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("geometry with {points} points exceeds the exhaustive limit {limit}")]
    TooLarge { points: usize, limit: usize },
}

/// Outcome of a search run.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub best_size: usize,
    /// Up to [`WITNESS_CAP`] sets of the best size found.
    pub witnesses: Vec<PointSet>,
    /// Number of search-tree nodes (exhaustive) or move attempts
    /// (heuristic) examined.
    pub explored: u64,
    pub exhaustive: bool,
    pub seed: Option<u64>,
}

/// Exact maximum size of a minimal t-fold blocking set, by enumeration over
/// subsets with pruning. `size_cap` optionally restricts the search further;
/// on a projective plane the Theorem-1.1 bound always prunes.
pub fn exhaustive_max_minimal<G: IncidenceGeometry + ?Sized>(
    g: &G,
    t: usize,
    size_cap: Option<usize>,
) -> Result<SearchResult, SearchError> {
    let v = g.point_count();
    if v > MAX_EXHAUSTIVE_POINTS {
        return Err(SearchError::TooLarge {
            points: v,
            limit: MAX_EXHAUSTIVE_POINTS,
        });
    }
    let mut cap = size_cap.unwrap_or(v).min(v);
    if let Some(n) = g.plane_order() {
        if t as u64 <= n {
            let bound = main_bound(n, t as u64).expect("plane bound in range").bound;
            cap = cap.min(bound.floor() as usize);
        }
    }

    let prefix_len = v.min(3);
    let patterns: Vec<u32> = (0..1u32 << prefix_len).collect();
    let parts: Vec<Partition> = patterns
        .par_iter()
        .map(|&pattern| {
            let mut state = DfsState::new(g, t, cap);
            let mut part = Partition::default();
            let mut feasible = true;
            for i in 0..prefix_len {
                part.explored += 1;
                let include = pattern >> i & 1 == 1;
                if !state.decide(i, include) {
                    feasible = false;
                    break;
                }
            }
            if feasible {
                state.dfs(prefix_len, &mut part);
            }
            part
        })
        .collect();

    let mut best = 0usize;
    let mut witnesses: Vec<PointSet> = Vec::new();
    let mut explored = 0u64;
    let mut found = false;
    for part in parts {
        explored += part.explored;
        if let Some(size) = part.best {
            if !found || size > best {
                found = true;
                best = size;
                witnesses.clear();
            }
            if size == best {
                for w in part.witnesses {
                    if witnesses.len() < WITNESS_CAP {
                        witnesses.push(PointSet::from_bits(w));
                    }
                }
            }
        }
    }
    Ok(SearchResult {
        best_size: best,
        witnesses,
        explored,
        exhaustive: true,
        seed: None,
    })
}

#[derive(Default)]
struct Partition {
    best: Option<usize>,
    witnesses: Vec<FixedBitSet>,
    explored: u64,
}

struct DfsState<'g, G: IncidenceGeometry + ?Sized> {
    g: &'g G,
    t: usize,
    cap: usize,
    v: usize,
    /// Included points so far, per block.
    count: Vec<u32>,
    /// Undecided points remaining, per block.
    undecided: Vec<u32>,
    chosen: FixedBitSet,
    chosen_len: usize,
}

impl<'g, G: IncidenceGeometry + ?Sized> DfsState<'g, G> {
    fn new(g: &'g G, t: usize, cap: usize) -> Self {
        let blocks = g.block_list();
        DfsState {
            g,
            t,
            cap,
            v: g.point_count(),
            count: vec![0; blocks.len()],
            undecided: blocks.iter().map(|b| b.count_ones(..) as u32).collect(),
            chosen: FixedBitSet::with_capacity(g.point_count()),
            chosen_len: 0,
        }
    }

    /// Apply the decision for point `i`; false when the branch is dead
    /// (some block can no longer reach t). The state is left consistent
    /// either way, so `undo` must be called exactly once per `decide`.
    fn decide(&mut self, i: usize, include: bool) -> bool {
        let mut alive = true;
        for b in self.g.pencil_list()[i].ones() {
            self.undecided[b] -= 1;
            if include {
                self.count[b] += 1;
            } else if (self.count[b] + self.undecided[b]) < self.t as u32 {
                alive = false;
            }
        }
        if include {
            self.chosen.insert(i);
            self.chosen_len += 1;
            if self.chosen_len > self.cap {
                alive = false;
            }
        }
        alive
    }

    fn undo(&mut self, i: usize, include: bool) {
        for b in self.g.pencil_list()[i].ones() {
            self.undecided[b] += 1;
            if include {
                self.count[b] -= 1;
            }
        }
        if include {
            self.chosen.remove(i);
            self.chosen_len -= 1;
        }
    }

    fn dfs(&mut self, depth: usize, part: &mut Partition) {
        // cannot tie the best size any more
        if self.chosen_len + (self.v - depth) < part.best.unwrap_or(0) {
            return;
        }
        if depth == self.v {
            self.leaf(part);
            return;
        }
        for include in [true, false] {
            part.explored += 1;
            if self.decide(depth, include) {
                self.dfs(depth + 1, part);
            }
            self.undo(depth, include);
        }
    }

    fn leaf(&self, part: &mut Partition) {
        let t = self.t as u32;
        // potential pruning guarantees count >= t everywhere
        debug_assert!(self.count.iter().all(|&c| c >= t));
        if !self.count.iter().any(|&c| c == t) {
            return;
        }
        let pencils = self.g.pencil_list();
        let minimal = self
            .chosen
            .ones()
            .all(|p| pencils[p].ones().any(|b| self.count[b] == t));
        if !minimal {
            return;
        }
        let size = self.chosen_len;
        match part.best {
            Some(best) if size < best => {}
            Some(best) if size == best => {
                if part.witnesses.len() < WITNESS_CAP {
                    part.witnesses.push(self.chosen.clone());
                }
            }
            _ => {
                part.best = Some(size);
                part.witnesses.clear();
                part.witnesses.push(self.chosen.clone());
            }
        }
    }
}

const STALL_LIMIT: u64 = 500;
const LOOKAHEAD_LIMIT: usize = 200;

/// Restart hill-climbing for large minimal t-fold blocking sets. Moves are
/// point additions, removals, and swaps, each followed by a repair pass that
/// deletes points all of whose blocks exceed t until the set is minimal
/// again. Deterministic for a fixed seed; restart r draws from the stream
/// seeded with seed + r.
pub fn heuristic_max_minimal<G: IncidenceGeometry + ?Sized>(
    g: &G,
    t: usize,
    budget: u64,
    seed: u64,
    initial: Option<&PointSet>,
) -> SearchResult {
    let v = g.point_count();
    let blocks = g.block_list();
    let mut result = SearchResult {
        best_size: 0,
        witnesses: Vec::new(),
        explored: 0,
        exhaustive: false,
        seed: Some(seed),
    };
    // if even the full set fails, no t-fold blocking set exists
    if blocks.iter().any(|b| b.count_ones(..) < t) {
        return result;
    }

    let mut restart = 0u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = match initial {
        Some(init) if init.bits().len() == v => {
            let mut state = Climber::from_bits(g, t, init.bits().clone());
            if state.is_t_fold() {
                state.repair(&mut rng);
                state
            } else {
                Climber::full(g, t, &mut rng)
            }
        }
        _ => Climber::full(g, t, &mut rng),
    };
    record_best(&mut result, &current);

    let mut stall = 0u64;
    while result.explored < budget {
        result.explored += 1;
        let improved = current.try_move(&mut rng);
        if improved > result.best_size {
            stall = 0;
        } else {
            stall += 1;
        }
        record_best(&mut result, &current);
        if stall >= STALL_LIMIT {
            restart += 1;
            stall = 0;
            rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(restart));
            current = Climber::full(g, t, &mut rng);
            record_best(&mut result, &current);
        }
    }
    result
}

fn record_best<G: IncidenceGeometry + ?Sized>(result: &mut SearchResult, climber: &Climber<'_, G>) {
    let size = climber.size;
    if size > result.best_size {
        result.best_size = size;
        result.witnesses.clear();
    }
    if size == result.best_size && result.best_size > 0 {
        let set = PointSet::from_bits(climber.bits.clone());
        if result.witnesses.len() < WITNESS_CAP && !result.witnesses.contains(&set) {
            result.witnesses.push(set);
        }
    }
}

struct Climber<'g, G: IncidenceGeometry + ?Sized> {
    g: &'g G,
    t: usize,
    bits: FixedBitSet,
    count: Vec<u32>,
    size: usize,
}

impl<'g, G: IncidenceGeometry + ?Sized> Climber<'g, G> {
    fn from_bits(g: &'g G, t: usize, bits: FixedBitSet) -> Self {
        let mut count = vec![0u32; g.block_list().len()];
        for p in bits.ones() {
            for b in g.pencil_list()[p].ones() {
                count[b] += 1;
            }
        }
        let size = bits.count_ones(..);
        Climber {
            g,
            t,
            bits,
            count,
            size,
        }
    }

    /// Start from the whole point set, reduced to a minimal set. Small
    /// geometries afford a one-step lookahead that strongly biases the
    /// reduction toward large minimal sets; beyond that the reduction is
    /// uniformly random.
    fn full(g: &'g G, t: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut bits = FixedBitSet::with_capacity(g.point_count());
        bits.insert_range(..);
        let mut state = Self::from_bits(g, t, bits);
        if g.point_count() <= LOOKAHEAD_LIMIT {
            state.reduce_lookahead(rng);
        } else {
            state.repair(rng);
        }
        state
    }

    /// Greedy reduction that at each step deletes the removable point
    /// leaving the fewest removable points behind, ties broken at random.
    fn reduce_lookahead(&mut self, rng: &mut ChaCha8Rng) {
        loop {
            let removable: Vec<usize> = self.bits.ones().filter(|&p| self.removable(p)).collect();
            if removable.is_empty() {
                return;
            }
            let mut best_score = usize::MAX;
            let mut ties: Vec<usize> = Vec::new();
            for &p in &removable {
                self.remove(p);
                let after = self.bits.ones().filter(|&x| self.removable(x)).count();
                self.add(p);
                if after < best_score {
                    best_score = after;
                    ties.clear();
                }
                if after == best_score {
                    ties.push(p);
                }
            }
            let p = ties[rng.gen_range(0..ties.len())];
            self.remove(p);
        }
    }

    fn is_t_fold(&self) -> bool {
        self.count.iter().all(|&c| c >= self.t as u32)
    }

    fn add(&mut self, p: usize) {
        debug_assert!(!self.bits.contains(p));
        self.bits.insert(p);
        self.size += 1;
        for b in self.g.pencil_list()[p].ones() {
            self.count[b] += 1;
        }
    }

    fn remove(&mut self, p: usize) {
        debug_assert!(self.bits.contains(p));
        self.bits.remove(p);
        self.size -= 1;
        for b in self.g.pencil_list()[p].ones() {
            self.count[b] -= 1;
        }
    }

    fn removable(&self, p: usize) -> bool {
        self.g.pencil_list()[p]
            .ones()
            .all(|b| self.count[b] > self.t as u32)
    }

    /// Delete removable points (uniformly at random among them) until the
    /// set is a minimal t-fold blocking set.
    fn repair(&mut self, rng: &mut ChaCha8Rng) {
        loop {
            let removable: Vec<usize> = self.bits.ones().filter(|&p| self.removable(p)).collect();
            if removable.is_empty() {
                return;
            }
            let p = removable[rng.gen_range(0..removable.len())];
            self.remove(p);
        }
    }

    /// One hill-climbing step; keeps the candidate when it is at least as
    /// large as the current set. Returns the size after the step.
    fn try_move(&mut self, rng: &mut ChaCha8Rng) -> usize {
        let v = self.g.point_count();
        let before_bits = self.bits.clone();
        let before_count = self.count.clone();
        let before_size = self.size;

        let kind = rng.gen_range(0..10u32);
        let outside: Option<usize> = {
            let candidates: Vec<usize> = (0..v).filter(|&p| !self.bits.contains(p)).collect();
            if candidates.is_empty() {
                None
            } else {
                Some(candidates[rng.gen_range(0..candidates.len())])
            }
        };
        let inside: Option<usize> = {
            let members: Vec<usize> = self.bits.ones().collect();
            if members.is_empty() {
                None
            } else {
                Some(members[rng.gen_range(0..members.len())])
            }
        };

        let feasible = match kind {
            // add
            0..=5 => match outside {
                Some(p) => {
                    self.add(p);
                    self.repair(rng);
                    true
                }
                None => false,
            },
            // swap
            6..=8 => match (outside, inside) {
                (Some(p), Some(q)) => {
                    self.add(p);
                    if self.g.pencil_list()[q]
                        .ones()
                        .all(|b| self.count[b] > self.t as u32)
                    {
                        self.remove(q);
                        self.repair(rng);
                        true
                    } else {
                        self.remove(p);
                        false
                    }
                }
                _ => false,
            },
            // remove (only ever fires on non-minimal intermediate states)
            _ => match inside {
                Some(q) if self.removable(q) => {
                    self.remove(q);
                    self.repair(rng);
                    true
                }
                _ => false,
            },
        };

        if feasible && self.size >= before_size {
            self.size
        } else {
            self.bits = before_bits;
            self.count = before_count;
            self.size = before_size;
            self.size
        }
    }
}

/// Full verification record for a candidate point set.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub t: u64,
    pub size: u64,
    /// t-fold blocking per the strict definition.
    pub blocking: bool,
    /// Every point lies on a t-secant.
    pub covered_by_t_secants: bool,
    /// The verdict under the requested mode.
    pub valid: bool,
    pub spectrum: BTreeMap<usize, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundReport>,
    /// Within the applicable bound (exact test); true when no bound applies.
    pub within_bound: bool,
}

/// Verify a point set in a projective space against the t-fold definitions
/// and the applicable bound.
pub fn verify_point_set(
    space: &ProjectiveSpace,
    set: &PointSet,
    t: u64,
    mode: BlockingMode,
) -> VerificationReport {
    let blocking = is_t_fold_blocking(space, set, t as usize);
    let covered = covers_with_t_secants(space, set, t as usize);
    let valid = match mode {
        BlockingMode::Paper => blocking && covered,
        BlockingMode::Tangency => covered,
    };
    let size = set.len() as u64;
    let bound = if space.dim() == 2 {
        main_bound(space.order(), t)
            .ok()
            .map(|b| b.with_achieved(size))
    } else {
        crate::blocking::hyperplane_tfold_bound(space.dim(), space.order(), t)
            .ok()
            .map(|b| b.with_achieved(size))
    };
    let within_bound = bound.as_ref().map(|b| b.admits(size)).unwrap_or(true);
    VerificationReport {
        t,
        size,
        blocking,
        covered_by_t_secants: covered,
        valid,
        spectrum: secant_spectrum(space, set).counts().clone(),
        bound,
        within_bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::galois::Field;
    use std::sync::Arc;

    fn pg(n: u32, p: u64, k: u32) -> ProjectiveSpace {
        ProjectiveSpace::new(n, Arc::new(Field::new(p, k).unwrap())).unwrap()
    }

    /// Plain enumeration over all subsets, no pruning: the independence
    /// oracle for the branch-and-bound path.
    fn naive_max_minimal(space: &ProjectiveSpace, t: usize) -> (usize, u64) {
        let v = space.point_count();
        let mut best = 0usize;
        let mut count = 0u64;
        for mask in 0u64..(1 << v) {
            let set = PointSet::from_indices(v, (0..v).filter(|&i| mask >> i & 1 == 1));
            if is_t_fold_blocking(space, &set, t) && covers_with_t_secants(space, &set, t) {
                if set.len() > best {
                    best = set.len();
                    count = 1;
                } else if set.len() == best {
                    count += 1;
                }
            }
        }
        (best, count)
    }

    #[test]
    fn fano_exhaustive_t1_line() {
        let space = pg(2, 2, 1);
        let result = exhaustive_max_minimal(&space, 1, None).unwrap();
        assert_eq!(result.best_size, 3);
        assert!(result.exhaustive);
        // every witness is a line
        for w in &result.witnesses {
            let pts: Vec<usize> = w.iter().collect();
            let line = space.span_line(pts[0], pts[1]).unwrap();
            let line_pts: Vec<usize> = space.hyperplane_points(line).ones().collect();
            assert_eq!(pts, line_pts);
        }
    }

    #[test]
    fn fano_exhaustive_t2_plane_minus_point() {
        let space = pg(2, 2, 1);
        let result = exhaustive_max_minimal(&space, 2, None).unwrap();
        assert_eq!(result.best_size, 6);
        assert_eq!(result.witnesses.len(), 7);
    }

    #[test]
    fn pg23_exhaustive_t3() {
        let space = pg(2, 3, 1);
        let result = exhaustive_max_minimal(&space, 3, None).unwrap();
        assert_eq!(result.best_size, 12);
    }

    #[test]
    fn pruned_matches_naive_on_fano() {
        let space = pg(2, 2, 1);
        for t in 1..=2usize {
            let (naive_best, naive_count) = naive_max_minimal(&space, t);
            let pruned = exhaustive_max_minimal(&space, t, None).unwrap();
            assert_eq!(pruned.best_size, naive_best, "t={t}");
            assert_eq!(pruned.witnesses.len() as u64, naive_count, "t={t}");
        }
    }

    #[test]
    fn size_cap_restricts_search() {
        let space = pg(2, 2, 1);
        let result = exhaustive_max_minimal(&space, 1, Some(3)).unwrap();
        assert_eq!(result.best_size, 3);
        let result = exhaustive_max_minimal(&space, 1, Some(2)).unwrap();
        assert_eq!(result.best_size, 0);
        assert!(result.witnesses.is_empty());
    }

    #[test]
    fn too_large_rejected() {
        let space = pg(2, 5, 1);
        assert!(matches!(
            exhaustive_max_minimal(&space, 1, None).unwrap_err(),
            SearchError::TooLarge { .. }
        ));
    }

    #[test]
    fn heuristic_matches_exhaustive_on_small_planes() {
        for (q, t) in [(2u64, 1usize), (2, 2), (3, 2), (3, 3)] {
            let space = pg(2, q, 1);
            let exact = exhaustive_max_minimal(&space, t, None).unwrap();
            let heur = heuristic_max_minimal(&space, t, 4000, 1, None);
            assert_eq!(
                heur.best_size, exact.best_size,
                "heuristic diverges at q={q}, t={t}"
            );
        }
    }

    #[test]
    fn heuristic_is_deterministic() {
        let space = pg(2, 3, 1);
        let a = heuristic_max_minimal(&space, 2, 2000, 42, None);
        let b = heuristic_max_minimal(&space, 2, 2000, 42, None);
        assert_eq!(a.best_size, b.best_size);
        assert_eq!(a.explored, b.explored);
        assert_eq!(a.witnesses.len(), b.witnesses.len());
        for (x, y) in a.witnesses.iter().zip(b.witnesses.iter()) {
            assert_eq!(x, y);
        }
    }

    #[test]
    fn heuristic_finds_unital_size_in_pg24() {
        let space = pg(2, 2, 2);
        let result = heuristic_max_minimal(&space, 1, 20_000, 3, None);
        assert_eq!(result.best_size, 9, "bound is 9 and unitals exist");
    }

    #[test]
    fn heuristic_line_floor_in_pg25() {
        let space = pg(2, 5, 1);
        let result = heuristic_max_minimal(&space, 1, 2000, 0, None);
        assert!(result.best_size >= 6, "a line is a minimal blocking set");
    }

    #[test]
    fn heuristic_seeded_with_construction() {
        let space = pg(2, 3, 2);
        let seed_set = constructions::pavese_2fold(&space).unwrap();
        let result = heuristic_max_minimal(&space, 2, 1000, 42, Some(&seed_set));
        assert!(result.best_size >= 36);
    }

    #[test]
    fn verification_report_hermitian() {
        let space = pg(2, 2, 2);
        let curve = constructions::hermitian_curve(&space).unwrap();
        let report = verify_point_set(&space, &curve, 1, BlockingMode::Paper);
        assert!(report.valid && report.blocking && report.within_bound);
        assert_eq!(report.bound.as_ref().unwrap().equality, Some(true));

        let at_two = verify_point_set(&space, &curve, 2, BlockingMode::Paper);
        assert!(!at_two.valid && !at_two.blocking);
    }
}
