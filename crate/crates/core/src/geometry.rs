//! PG(n,q) as an explicit incidence structure.
//!
//! Points and hyperplanes are normalized homogeneous coordinate tuples (first
//! nonzero coordinate 1) enumerated in lexicographic order on the integer
//! encodings, so indices are stable across runs. Incidence is stored as one
//! bit set of point indices per hyperplane, which is what the spectrum and
//! search code needs for word-wide intersection counting.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::galois::{Field, GaloisError};

/// Default cap on the number of points of an enumerated space.
pub const DEFAULT_MAX_POINTS: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("geometry too large: {size} exceeds limit {limit}")]
    TooLarge { size: u128, limit: u64 },
    #[error("points must be distinct")]
    EqualPoints,
    #[error("field order is not a square")]
    NotSquareOrder,
    #[error("dimension {dim} not supported for this operation")]
    BadDimension { dim: u32 },
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error(transparent)]
    Field(#[from] GaloisError),
}

/// A projective point with its canonical index and normalized coordinates
/// (integer encodings).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub index: usize,
    pub coords: Vec<u32>,
}

/// A hyperplane with its canonical index and normalized coefficient tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub index: usize,
    pub coeffs: Vec<u32>,
}

/// θ_m(q) = (q^m − 1)/(q − 1), the number of points of PG(m−1, q).
pub fn theta(m: u32, q: u64) -> u128 {
    let mut acc: u128 = 0;
    let mut pow: u128 = 1;
    for _ in 0..m {
        acc += pow;
        pow *= q as u128;
    }
    acc
}

/// Gaussian binomial coefficient [a choose b]_q via the q-Pascal recurrence.
pub fn gaussian_coefficient(a: u32, b: u32, q: u64) -> BigUint {
    assert!(b <= a, "gaussian_coefficient requires b <= a");
    let b = b.min(a - b);
    // row-by-row recurrence [m k] = [m-1 k-1] + q^k [m-1 k]
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=a {
        let width = b.min(m) as usize;
        let mut next: Vec<BigUint> = Vec::with_capacity(width + 1);
        next.push(BigUint::one());
        for k in 1..=width {
            let left = &row[k - 1];
            let right = if k < row.len() {
                row[k].clone() * BigUint::from(q).pow(k as u32)
            } else {
                BigUint::ZERO
            };
            next.push(left + right);
        }
        row = next;
    }
    row[b as usize].clone()
}

/// PG(n, q), fully enumerated. Immutable after construction.
#[derive(Debug)]
pub struct ProjectiveSpace {
    field: Arc<Field>,
    dim: u32,
    /// Normalized coordinate tuples, shared by points and hyperplanes.
    reps: Vec<Vec<u32>>,
    index_of: HashMap<Vec<u32>, u32>,
    /// Per-hyperplane bit set over point indices.
    incidence: Vec<FixedBitSet>,
    /// Per-point bit set over hyperplane indices.
    pencils: Vec<FixedBitSet>,
}

impl ProjectiveSpace {
    pub fn new(dim: u32, field: Arc<Field>) -> Result<Self, GeometryError> {
        Self::with_max_points(dim, field, DEFAULT_MAX_POINTS)
    }

    pub fn with_max_points(
        dim: u32,
        field: Arc<Field>,
        limit: u64,
    ) -> Result<Self, GeometryError> {
        assert!(dim >= 2, "projective dimension must be at least 2");
        let q = field.order() as u64;
        let count = theta(dim + 1, q);
        if count > limit as u128 {
            return Err(GeometryError::TooLarge { size: count, limit });
        }
        let count = count as usize;

        // Enumerate normalized representatives in lex order: representatives
        // with the leading 1 further right are lex-smaller.
        let w = dim as usize + 1;
        let mut reps: Vec<Vec<u32>> = Vec::with_capacity(count);
        for lead in (0..w).rev() {
            let free = w - lead - 1;
            let mut suffix = vec![0u32; free];
            loop {
                let mut tuple = vec![0u32; w];
                tuple[lead] = 1;
                tuple[lead + 1..].copy_from_slice(&suffix);
                reps.push(tuple);
                if !odometer(&mut suffix, q as u32) {
                    break;
                }
            }
        }
        debug_assert_eq!(reps.len(), count);

        let index_of: HashMap<Vec<u32>, u32> = reps
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i as u32))
            .collect();

        let mut incidence = vec![FixedBitSet::with_capacity(count); count];
        let mut pencils = vec![FixedBitSet::with_capacity(count); count];
        for (h, coeffs) in reps.iter().enumerate() {
            let row = &mut incidence[h];
            for (p, coords) in reps.iter().enumerate() {
                if dot(&field, coords, coeffs) == 0 {
                    row.insert(p);
                }
            }
        }
        for (h, row) in incidence.iter().enumerate() {
            for p in row.ones() {
                pencils[p].insert(h);
            }
        }

        Ok(ProjectiveSpace {
            field,
            dim,
            reps,
            index_of,
            incidence,
            pencils,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<Field> {
        Arc::clone(&self.field)
    }

    /// Projective dimension n.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Field order q.
    pub fn order(&self) -> u64 {
        self.field.order() as u64
    }

    pub fn point_count(&self) -> usize {
        self.reps.len()
    }

    pub fn hyperplane_count(&self) -> usize {
        self.reps.len()
    }

    pub fn point(&self, index: usize) -> Point {
        Point {
            index,
            coords: self.reps[index].clone(),
        }
    }

    pub fn hyperplane(&self, index: usize) -> Hyperplane {
        Hyperplane {
            index,
            coeffs: self.reps[index].clone(),
        }
    }

    pub fn point_coords(&self, index: usize) -> &[u32] {
        &self.reps[index]
    }

    pub fn hyperplane_coeffs(&self, index: usize) -> &[u32] {
        &self.reps[index]
    }

    /// Index of a point given arbitrary (not necessarily normalized)
    /// homogeneous coordinates.
    pub fn point_index(&self, coords: &[u32]) -> Option<usize> {
        let normalized = self.normalize(coords)?;
        self.index_of.get(&normalized).map(|&i| i as usize)
    }

    fn normalize(&self, coords: &[u32]) -> Option<Vec<u32>> {
        if coords.len() != self.dim as usize + 1 {
            return None;
        }
        if coords.iter().any(|&c| c >= self.field.order()) {
            return None;
        }
        let lead = coords.iter().position(|&c| c != 0)?;
        let inv = self.field.inv_raw(coords[lead]);
        Some(
            coords
                .iter()
                .map(|&c| self.field.mul_raw(c, inv))
                .collect(),
        )
    }

    /// Points of hyperplane `h` as a bit set.
    pub fn hyperplane_points(&self, h: usize) -> &FixedBitSet {
        &self.incidence[h]
    }

    /// All per-hyperplane point bit sets, indexed by hyperplane.
    pub fn incidence(&self) -> &[FixedBitSet] {
        &self.incidence
    }

    /// Hyperplanes through point `p` as a bit set.
    pub fn pencil(&self, p: usize) -> &FixedBitSet {
        &self.pencils[p]
    }

    pub fn pencils(&self) -> &[FixedBitSet] {
        &self.pencils
    }

    pub fn incident(&self, p: usize, h: usize) -> bool {
        self.incidence[h].contains(p)
    }

    /// The unique line through two distinct points of a projective plane,
    /// as a hyperplane index.
    pub fn span_line(&self, p: usize, q: usize) -> Result<usize, GeometryError> {
        if self.dim != 2 {
            return Err(GeometryError::BadDimension { dim: self.dim });
        }
        if p == q {
            return Err(GeometryError::EqualPoints);
        }
        let (a, b) = (&self.reps[p], &self.reps[q]);
        let f = &self.field;
        let minor =
            |i: usize, j: usize| f.add_raw(f.mul_raw(a[i], b[j]), f.neg_raw(f.mul_raw(a[j], b[i])));
        let coeffs = vec![minor(1, 2), f.neg_raw(minor(0, 2)), minor(0, 1)];
        let normalized = self.normalize(&coeffs).ok_or(GeometryError::EqualPoints)?;
        Ok(self.index_of[&normalized] as usize)
    }

    /// Point indices of the line through two distinct points, in any
    /// dimension.
    pub fn line_through(&self, p: usize, q: usize) -> Result<Vec<usize>, GeometryError> {
        if p == q {
            return Err(GeometryError::EqualPoints);
        }
        let f = &self.field;
        let (a, b) = (&self.reps[p], &self.reps[q]);
        let mut out = Vec::with_capacity(f.order() as usize + 1);
        out.push(q);
        for lambda in 0..f.order() {
            let coords: Vec<u32> = a
                .iter()
                .zip(b.iter())
                .map(|(&x, &y)| f.add_raw(x, f.mul_raw(lambda, y)))
                .collect();
            let normalized = self.normalize(&coords).expect("combination is nonzero");
            out.push(self.index_of[&normalized] as usize);
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// All k-dimensional subspaces as point bit sets, enumerated from
    /// row-reduced representative matrices.
    pub fn k_subspaces(&self, k: u32) -> Result<Vec<FixedBitSet>, GeometryError> {
        self.k_subspaces_with_limit(k, DEFAULT_MAX_POINTS)
    }

    pub fn k_subspaces_with_limit(
        &self,
        k: u32,
        limit: u64,
    ) -> Result<Vec<FixedBitSet>, GeometryError> {
        assert!(k < self.dim, "k must be at most n-1");
        let q = self.order();
        let count = gaussian_coefficient(self.dim + 1, k + 1, q);
        if count > BigUint::from(limit) {
            return Err(GeometryError::TooLarge {
                size: u128::MAX,
                limit,
            });
        }
        let rows = k as usize + 1;
        let cols = self.dim as usize + 1;
        let mut out = Vec::new();
        let mut pivots = (0..rows).collect::<Vec<usize>>();
        loop {
            // free positions of the RREF pattern for this pivot choice
            let mut free = Vec::new();
            for (r, &pr) in pivots.iter().enumerate() {
                for c in pr + 1..cols {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let mut assignment = vec![0u32; free.len()];
            loop {
                let mut mat = vec![vec![0u32; cols]; rows];
                for (r, &pr) in pivots.iter().enumerate() {
                    mat[r][pr] = 1;
                }
                for (&(r, c), &v) in free.iter().zip(assignment.iter()) {
                    mat[r][c] = v;
                }
                out.push(self.span_points(&mat));
                if !odometer(&mut assignment, q as u32) {
                    break;
                }
            }
            if !next_combination(&mut pivots, cols) {
                break;
            }
        }
        debug_assert_eq!(BigUint::from(out.len() as u64), count);
        Ok(out)
    }

    /// Bit set of the points spanned by the rows of a full-rank matrix.
    fn span_points(&self, mat: &[Vec<u32>]) -> FixedBitSet {
        let f = &self.field;
        let cols = self.dim as usize + 1;
        let mut bits = FixedBitSet::with_capacity(self.point_count());
        let mut coeffs = vec![0u32; mat.len()];
        while odometer(&mut coeffs, f.order()) {
            let mut v = vec![0u32; cols];
            for (row, &c) in mat.iter().zip(coeffs.iter()) {
                if c == 0 {
                    continue;
                }
                for (slot, &x) in v.iter_mut().zip(row.iter()) {
                    *slot = f.add_raw(*slot, f.mul_raw(c, x));
                }
            }
            if let Some(normalized) = self.normalize(&v) {
                bits.insert(self.index_of[&normalized] as usize);
            }
        }
        bits
    }

    /// Unitary polarity: point index ↦ polar hyperplane index. Requires
    /// square field order. The same map sends a hyperplane to its pole.
    pub fn unitary_polar(&self, index: usize) -> Result<usize, GeometryError> {
        let s = self
            .field
            .sqrt_order()
            .ok_or(GeometryError::NotSquareOrder)?;
        let coords: Vec<u32> = self.reps[index]
            .iter()
            .map(|&c| self.field.pow_raw(c, s as u64))
            .collect();
        let normalized = self.normalize(&coords).expect("polar of a nonzero tuple");
        Ok(self.index_of[&normalized] as usize)
    }

    /// Points lying on their own polar hyperplane.
    pub fn absolute_points(&self) -> Result<FixedBitSet, GeometryError> {
        let mut bits = FixedBitSet::with_capacity(self.point_count());
        for p in 0..self.point_count() {
            if self.incidence[self.unitary_polar(p)?].contains(p) {
                bits.insert(p);
            }
        }
        Ok(bits)
    }
}

fn dot(f: &Field, a: &[u32], b: &[u32]) -> u32 {
    let mut acc = 0u32;
    for (&x, &y) in a.iter().zip(b.iter()) {
        acc = f.add_raw(acc, f.mul_raw(x, y));
    }
    acc
}

/// Advance a mixed-radix counter (all digits base `base`), last digit
/// fastest; returns false after wrapping back to all zeros.
fn odometer(digits: &mut [u32], base: u32) -> bool {
    let mut pos = digits.len();
    loop {
        if pos == 0 {
            return false;
        }
        pos -= 1;
        digits[pos] += 1;
        if digits[pos] < base {
            return true;
        }
        digits[pos] = 0;
    }
}

/// Advance a strictly increasing index combination below `bound`; returns
/// false after the last combination.
fn next_combination(comb: &mut [usize], bound: usize) -> bool {
    let r = comb.len();
    let mut i = r;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        if comb[i] < bound - (r - i) {
            comb[i] += 1;
            for j in i + 1..r {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pg(n: u32, p: u64, k: u32) -> ProjectiveSpace {
        ProjectiveSpace::new(n, Arc::new(Field::new(p, k).unwrap())).unwrap()
    }

    #[test]
    fn point_counts() {
        assert_eq!(pg(2, 2, 1).point_count(), 7);
        assert_eq!(pg(2, 2, 2).point_count(), 21);
        assert_eq!(pg(3, 3, 1).point_count(), 40);
    }

    #[test]
    fn fano_enumeration_is_frozen() {
        let space = pg(2, 2, 1);
        let expected: Vec<Vec<u32>> = vec![
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![1, 0, 0],
            vec![1, 0, 1],
            vec![1, 1, 0],
            vec![1, 1, 1],
        ];
        let got: Vec<Vec<u32>> = (0..7).map(|i| space.point_coords(i).to_vec()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumeration_is_stable() {
        let a = pg(2, 3, 1);
        let b = pg(2, 3, 1);
        for i in 0..a.point_count() {
            assert_eq!(a.point_coords(i), b.point_coords(i));
            assert_eq!(a.hyperplane_points(i), b.hyperplane_points(i));
        }
    }

    #[test]
    fn plane_line_sizes() {
        for (p, k) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
            let space = pg(2, p, k);
            let q = space.order() as usize;
            for h in 0..space.hyperplane_count() {
                assert_eq!(space.hyperplane_points(h).count_ones(..), q + 1);
            }
            for pt in 0..space.point_count() {
                assert_eq!(space.pencil(pt).count_ones(..), q + 1);
            }
        }
    }

    #[test]
    fn two_points_common_hyperplanes() {
        // any two distinct points lie in exactly θ_{n-1}(q) common hyperplanes
        let space = pg(3, 2, 1);
        let expect = theta(2, 2) as usize;
        for p in 0..space.point_count() {
            for q in p + 1..space.point_count() {
                let common = space.pencil(p).intersection_count(space.pencil(q));
                assert_eq!(common, expect);
            }
        }
        let plane = pg(2, 3, 1);
        for p in 0..plane.point_count() {
            for q in p + 1..plane.point_count() {
                assert_eq!(plane.pencil(p).intersection_count(plane.pencil(q)), 1);
            }
        }
    }

    #[test]
    fn span_line_fano_axes() {
        let space = pg(2, 2, 1);
        let p = space.point_index(&[1, 0, 0]).unwrap();
        let q = space.point_index(&[0, 1, 0]).unwrap();
        let line = space.span_line(p, q).unwrap();
        assert_eq!(space.hyperplane_coeffs(line), &[0, 0, 1]);
        assert_eq!(space.span_line(q, p).unwrap(), line);
        assert_eq!(
            space.span_line(p, p).unwrap_err(),
            GeometryError::EqualPoints
        );
    }

    #[test]
    fn span_line_symmetry_and_incidence() {
        let space = pg(2, 3, 1);
        for p in 0..space.point_count() {
            for q in p + 1..space.point_count() {
                let line = space.span_line(p, q).unwrap();
                assert_eq!(space.span_line(q, p).unwrap(), line);
                assert!(space.incident(p, line));
                assert!(space.incident(q, line));
            }
        }
    }

    #[test]
    fn line_through_matches_span() {
        let space = pg(2, 2, 2);
        for (p, q) in [(0usize, 1usize), (3, 17), (5, 12)] {
            let pts = space.line_through(p, q).unwrap();
            assert_eq!(pts.len(), space.order() as usize + 1);
            let h = space.span_line(p, q).unwrap();
            let expected: Vec<usize> = space.hyperplane_points(h).ones().collect();
            assert_eq!(pts, expected);
        }
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gaussian_coefficient(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian_coefficient(3, 2, 4), BigUint::from(21u32));
        for a in 1..6u32 {
            for q in [2u64, 3, 4, 5] {
                assert_eq!(gaussian_coefficient(a, 1, q), BigUint::from(theta(a, q)));
            }
        }
        assert_eq!(gaussian_coefficient(5, 0, 7), BigUint::one());
    }

    #[test]
    fn k_subspace_enumeration() {
        let space = pg(3, 2, 1);
        let lines = space.k_subspaces(1).unwrap();
        assert_eq!(lines.len(), 35);
        for line in &lines {
            assert_eq!(line.count_ones(..), 3);
        }

        // k = n-1 coincides with the hyperplane enumeration as a set
        let plane = pg(2, 3, 1);
        let mut from_subspaces: Vec<Vec<usize>> = plane
            .k_subspaces(1)
            .unwrap()
            .iter()
            .map(|b| b.ones().collect())
            .collect();
        let mut from_hyperplanes: Vec<Vec<usize>> = plane
            .incidence()
            .iter()
            .map(|b| b.ones().collect())
            .collect();
        from_subspaces.sort();
        from_hyperplanes.sort();
        assert_eq!(from_subspaces, from_hyperplanes);

        let solid = pg(3, 3, 1);
        assert_eq!(solid.k_subspaces(2).unwrap().len(), 40);
    }

    #[test]
    fn unitary_polarity_involution_and_reciprocity() {
        let space = pg(2, 2, 2);
        let i = space.point_index(&[0, 1, 1]).unwrap();
        let polar = space.unitary_polar(i).unwrap();
        assert_eq!(space.hyperplane_coeffs(polar), &[0, 1, 1]);
        assert!(space.incident(i, polar), "point (0:1:1) is absolute");

        for p in 0..space.point_count() {
            let h = space.unitary_polar(p).unwrap();
            assert_eq!(space.unitary_polar(h).unwrap(), p);
        }
        // reciprocity: P ∈ Q^⊥ iff Q ∈ P^⊥
        for p in 0..space.point_count() {
            for q in 0..space.point_count() {
                let in_q = space.incidence[space.unitary_polar(q).unwrap()].contains(p);
                let in_p = space.incidence[space.unitary_polar(p).unwrap()].contains(q);
                assert_eq!(in_q, in_p);
            }
        }
    }

    #[test]
    fn absolute_point_counts() {
        for (p, k, expect) in [(2u64, 2u32, 9usize), (3, 2, 28)] {
            let space = pg(2, p, k);
            assert_eq!(space.absolute_points().unwrap().count_ones(..), expect);
        }
    }

    #[test]
    fn polarity_requires_square_order() {
        let space = pg(2, 3, 1);
        assert_eq!(
            space.unitary_polar(0).unwrap_err(),
            GeometryError::NotSquareOrder
        );
    }

    #[test]
    fn incidence_sum_over_lines() {
        use rand::{Rng, SeedableRng};
        let space = pg(2, 5, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let mut s = FixedBitSet::with_capacity(space.point_count());
            for i in 0..space.point_count() {
                if rng.gen_bool(0.5) {
                    s.insert(i);
                }
            }
            let total: usize = space
                .incidence()
                .iter()
                .map(|line| line.intersection_count(&s))
                .sum();
            assert_eq!(total, s.count_ones(..) * (space.order() as usize + 1));
        }
    }

    #[test]
    fn too_large_is_rejected() {
        let field = Arc::new(Field::new(2, 1).unwrap());
        assert!(matches!(
            ProjectiveSpace::with_max_points(2, field, 5).unwrap_err(),
            GeometryError::TooLarge { .. }
        ));
    }
}
