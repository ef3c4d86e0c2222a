//! Abstract 2-(v,k,λ) designs and the spectral incidence bound.
//!
//! The bound compares the deviation of the incidence count i(S,𝓛) from its
//! expectation r|S||𝓛|/b against √(r−λ)·√(|S||𝓛|(1−|S|/v)(1−|𝓛|/b)). Both
//! sides are nonnegative, so the comparison is done on exact rational
//! squares; no floating point is involved anywhere in the verdict.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::geometry::{GeometryError, ProjectiveSpace};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DesignError {
    #[error("blocks must be nonempty and of uniform size")]
    NonUniformBlocks,
    #[error("pair coverage is not constant: pairs ({0},{1}) and ({2},{3}) differ")]
    NonConstantLambda(usize, usize, usize, usize),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("not a non-degenerate equality instance of the incidence bound")]
    NotEqualityCase,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A validated 2-(v,k,λ) design with blocks stored as point bit sets.
#[derive(Debug, Clone)]
pub struct Design {
    v: usize,
    blocks: Vec<FixedBitSet>,
    blocks_through: Vec<FixedBitSet>,
    k: usize,
    lambda: u64,
    r: u64,
    b: usize,
}

impl Design {
    /// Validate a block list as a 2-design: uniform block size and constant
    /// pair coverage, checked exhaustively.
    pub fn from_blocks(v: usize, raw_blocks: &[Vec<usize>]) -> Result<Design, DesignError> {
        let blocks: Vec<FixedBitSet> = raw_blocks
            .iter()
            .map(|pts| {
                let mut bits = FixedBitSet::with_capacity(v);
                for &p in pts {
                    if p >= v {
                        return Err(DesignError::IndexOutOfRange(p));
                    }
                    bits.insert(p);
                }
                Ok(bits)
            })
            .collect::<Result<_, _>>()?;
        Self::from_bitsets(v, blocks)
    }

    pub fn from_bitsets(v: usize, blocks: Vec<FixedBitSet>) -> Result<Design, DesignError> {
        if blocks.is_empty() || v < 2 {
            return Err(DesignError::NonUniformBlocks);
        }
        let k = blocks[0].count_ones(..);
        if k < 2 || blocks.iter().any(|b| b.count_ones(..) != k) {
            return Err(DesignError::NonUniformBlocks);
        }
        let b = blocks.len();

        let mut blocks_through = vec![FixedBitSet::with_capacity(b); v];
        for (i, block) in blocks.iter().enumerate() {
            for p in block.ones() {
                blocks_through[p].insert(i);
            }
        }

        let lambda = blocks_through[0].intersection_count(&blocks_through[1]) as u64;
        for x in 0..v {
            for y in x + 1..v {
                let l = blocks_through[x].intersection_count(&blocks_through[y]) as u64;
                if l != lambda {
                    return Err(DesignError::NonConstantLambda(0, 1, x, y));
                }
            }
        }
        if lambda == 0 {
            return Err(DesignError::NonConstantLambda(0, 1, 0, 1));
        }

        // double-counting identities r(k-1) = λ(v-1) and bk = vr
        let r = lambda * (v as u64 - 1) / (k as u64 - 1);
        debug_assert_eq!(r * (k as u64 - 1), lambda * (v as u64 - 1));
        debug_assert_eq!(b as u64 * k as u64, v as u64 * r);
        debug_assert!(blocks_through
            .iter()
            .all(|bt| bt.count_ones(..) as u64 == r));

        Ok(Design {
            v,
            blocks,
            blocks_through,
            k,
            lambda,
            r,
            b,
        })
    }

    /// The design of points and k-dimensional subspaces of PG(n,q).
    pub fn from_geometry(space: &ProjectiveSpace, k_dim: u32) -> Result<Design, DesignError> {
        let blocks = space.k_subspaces(k_dim)?;
        Ok(Self::from_bitsets(space.point_count(), blocks)
            .expect("subspaces of PG(n,q) always form a 2-design"))
    }

    pub fn v(&self) -> usize {
        self.v
    }
    pub fn b(&self) -> usize {
        self.b
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn lambda(&self) -> u64 {
        self.lambda
    }
    /// Replication number r = λ(v−1)/(k−1).
    pub fn r(&self) -> u64 {
        self.r
    }
    pub fn is_symmetric(&self) -> bool {
        self.b == self.v
    }
    pub fn blocks(&self) -> &[FixedBitSet] {
        &self.blocks
    }
    pub fn blocks_through(&self) -> &[FixedBitSet] {
        &self.blocks_through
    }

    /// Number of incidences between a point subset and a block subset.
    pub fn incidence_count(&self, s: &FixedBitSet, l: &FixedBitSet) -> u64 {
        l.ones()
            .map(|i| self.blocks[i].intersection_count(s) as u64)
            .sum()
    }

    /// Exact-rational comparison of squared deviation against the squared
    /// right-hand side of the incidence bound.
    pub fn mixing_bound_check(&self, s: &FixedBitSet, l: &FixedBitSet) -> MixingReport {
        let ns = s.count_ones(..) as i64;
        let nl = l.count_ones(..) as i64;
        let i = self.incidence_count(s, l);

        let rat = |n: i64| BigRational::from_integer(BigInt::from(n));
        let one = || BigRational::from_integer(BigInt::from(1));
        let v = rat(self.v as i64);
        let b = rat(self.b as i64);
        let expected = rat(self.r as i64) * rat(ns) * rat(nl) / b.clone();
        let deviation = rat(i as i64) - expected.clone();
        let deviation_sq = deviation.clone() * deviation;
        let rhs_sq = rat(self.r as i64 - self.lambda as i64)
            * rat(ns)
            * rat(nl)
            * (one() - rat(ns) / v)
            * (one() - rat(nl) / b);

        let degenerate = ns == 0 || ns == self.v as i64 || nl == 0 || nl == self.b as i64;
        MixingReport {
            incidences: i,
            holds: deviation_sq <= rhs_sq,
            equality: deviation_sq == rhs_sq,
            degenerate,
            expected,
            deviation_sq,
            rhs_sq,
        }
    }

    /// Equality clause of the incidence bound: on a non-degenerate equality
    /// instance, point degrees and block intersections must be constant on
    /// each of S, its complement, 𝓛 and its complement.
    pub fn equality_regularity_check(
        &self,
        s: &FixedBitSet,
        l: &FixedBitSet,
    ) -> Result<bool, DesignError> {
        let report = self.mixing_bound_check(s, l);
        if !report.equality || report.degenerate {
            return Err(DesignError::NotEqualityCase);
        }
        let mut s_comp = s.clone();
        s_comp.toggle_range(..);
        let mut l_comp = l.clone();
        l_comp.toggle_range(..);

        for s_part in [s, &s_comp] {
            for l_part in [l, &l_comp] {
                let mut degree = None;
                for p in s_part.ones() {
                    let d = self.blocks_through[p].intersection_count(l_part);
                    if *degree.get_or_insert(d) != d {
                        return Ok(false);
                    }
                }
                let mut meet = None;
                for blk in l_part.ones() {
                    let m = self.blocks[blk].intersection_count(s_part);
                    if *meet.get_or_insert(m) != m {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Scan subset pairs with the incidence bound; exhaustive over all
    /// 2^v × 2^b pairs. Only sensible for tiny designs.
    pub fn exhaustive_mixing_scan(&self) -> MixingScan {
        assert!(self.v <= 20 && self.b <= 20, "scan space too large");
        let subsets = 1u64 << self.v;
        let results: Vec<MixingScan> = (0..subsets)
            .into_par_iter()
            .map(|s_mask| {
                let s = mask_to_bits(s_mask, self.v);
                let mut local = MixingScan::default();
                for l_mask in 0..(1u64 << self.b) {
                    let l = mask_to_bits(l_mask, self.b);
                    self.scan_pair(&s, &l, &mut local);
                }
                local
            })
            .collect();
        let mut total = MixingScan::default();
        for part in results {
            total.merge(part);
        }
        total
    }

    /// Check `count` pseudorandom subset pairs, deterministic in `seed`.
    pub fn random_mixing_scan(&self, count: u64, seed: u64) -> MixingScan {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut scan = MixingScan::default();
        for _ in 0..count {
            let mut s = FixedBitSet::with_capacity(self.v);
            for i in 0..self.v {
                if rng.gen_bool(0.5) {
                    s.insert(i);
                }
            }
            let mut l = FixedBitSet::with_capacity(self.b);
            for i in 0..self.b {
                if rng.gen_bool(0.5) {
                    l.insert(i);
                }
            }
            self.scan_pair(&s, &l, &mut scan);
        }
        scan
    }

    fn scan_pair(&self, s: &FixedBitSet, l: &FixedBitSet, scan: &mut MixingScan) {
        let report = self.mixing_bound_check(s, l);
        scan.pairs += 1;
        if !report.holds {
            scan.violations += 1;
            if scan.violation_witness.is_none() {
                scan.violation_witness = Some((s.ones().collect(), l.ones().collect()));
            }
        }
        if report.equality && !report.degenerate {
            scan.nondegenerate_equalities += 1;
            if !self
                .equality_regularity_check(s, l)
                .expect("checked equality and non-degeneracy")
            {
                scan.regularity_failures += 1;
            }
        }
    }
}

/// Outcome of checking one (S, 𝓛) pair against the incidence bound.
#[derive(Debug, Clone, PartialEq)]
pub struct MixingReport {
    pub incidences: u64,
    pub expected: BigRational,
    pub deviation_sq: BigRational,
    pub rhs_sq: BigRational,
    pub holds: bool,
    pub equality: bool,
    pub degenerate: bool,
}

impl MixingReport {
    /// |i(S,𝓛) − expected| as an exact rational.
    pub fn deviation(&self) -> BigRational {
        let dev = BigRational::from_integer(BigInt::from(self.incidences)) - self.expected.clone();
        if dev < BigRational::zero() {
            -dev
        } else {
            dev
        }
    }
}

/// Aggregate result of a subset-pair scan.
#[derive(Debug, Default, Clone)]
pub struct MixingScan {
    pub pairs: u64,
    pub violations: u64,
    pub nondegenerate_equalities: u64,
    pub regularity_failures: u64,
    pub violation_witness: Option<(Vec<usize>, Vec<usize>)>,
}

impl MixingScan {
    fn merge(&mut self, other: MixingScan) {
        self.pairs += other.pairs;
        self.violations += other.violations;
        self.nondegenerate_equalities += other.nondegenerate_equalities;
        self.regularity_failures += other.regularity_failures;
        if self.violation_witness.is_none() {
            self.violation_witness = other.violation_witness;
        }
    }
}

fn mask_to_bits(mask: u64, len: usize) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(len);
    for i in 0..len {
        if mask >> i & 1 == 1 {
            bits.insert(i);
        }
    }
    bits
}
