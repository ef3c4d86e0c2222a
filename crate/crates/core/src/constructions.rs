//! Explicit extremal point-set constructions, each returned as a verified
//! candidate for the blocking-set machinery.
//!
//! Base points and line choices are canonical (lowest index first) so every
//! construction is reproducible; where a choice is free, an explicit
//! selection can be passed in.

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::blocking::PointSet;
use crate::geometry::{GeometryError, ProjectiveSpace};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("field order is not a square")]
    NotSquareOrder,
    #[error("t = {t} out of range, need {min} <= t <= {max}")]
    TOutOfRange { t: u64, min: u64, max: u64 },
    #[error("construction requires dimension {expected}, space has {got}")]
    BadDimension { expected: u32, got: u32 },
    #[error("invalid line choice: {0}")]
    BadLineChoice(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

fn require_dim(space: &ProjectiveSpace, expected: u32) -> Result<(), ConstructionError> {
    if space.dim() != expected {
        return Err(ConstructionError::BadDimension {
            expected,
            got: space.dim(),
        });
    }
    Ok(())
}

/// The non-degenerate Hermitian curve of PG(2,q), q square: the zero set of
/// the norm form N(x) + N(y) + N(z).
pub fn hermitian_curve(space: &ProjectiveSpace) -> Result<PointSet, ConstructionError> {
    require_dim(space, 2)?;
    hermitian_variety(space)
}

/// Zero set of the norm form in any dimension.
fn hermitian_variety(space: &ProjectiveSpace) -> Result<PointSet, ConstructionError> {
    let field = space.field();
    if field.sqrt_order().is_none() {
        return Err(ConstructionError::NotSquareOrder);
    }
    let mut bits = FixedBitSet::with_capacity(space.point_count());
    for p in 0..space.point_count() {
        let mut acc = 0u32;
        for &c in space.point_coords(p) {
            acc = field.add_raw(acc, field.relative_norm_raw(c).expect("square order"));
        }
        if acc == 0 {
            bits.insert(p);
        }
    }
    Ok(PointSet::from_bits(bits))
}

/// The t-fold blocking set H ∪ L₁ ∪ … ∪ L_{t−1} ∪ {L₁^⊥, …, L_{t−1}^⊥}
/// built from a Hermitian curve, t−1 secants through a base curve point,
/// and their poles on the tangent at that point.
///
/// `line_choice`, when given, lists t−1 distinct secant-line indices through
/// the base point; the default takes the lowest-indexed secants.
pub fn hermitian_tfold(
    space: &ProjectiveSpace,
    t: u64,
    line_choice: Option<&[usize]>,
) -> Result<PointSet, ConstructionError> {
    require_dim(space, 2)?;
    let curve = hermitian_curve(space)?;
    let s = space.field().sqrt_order().expect("checked square") as u64;
    if t < 2 || t > s + 1 {
        return Err(ConstructionError::TOutOfRange {
            t,
            min: 2,
            max: s + 1,
        });
    }

    let base = curve.iter().next().expect("curve is nonempty");
    let tangent = space.unitary_polar(base)?;
    debug_assert_eq!(
        space
            .hyperplane_points(tangent)
            .intersection_count(curve.bits()),
        1
    );
    let secants: Vec<usize> = space
        .pencil(base)
        .ones()
        .filter(|&h| h != tangent)
        .collect();

    let chosen: Vec<usize> = match line_choice {
        None => secants.iter().copied().take(t as usize - 1).collect(),
        Some(choice) => {
            if choice.len() != t as usize - 1 {
                return Err(ConstructionError::BadLineChoice(format!(
                    "expected {} lines, got {}",
                    t - 1,
                    choice.len()
                )));
            }
            let mut seen = std::collections::HashSet::new();
            for &h in choice {
                if !secants.contains(&h) {
                    return Err(ConstructionError::BadLineChoice(format!(
                        "line {h} is not a secant through the base point"
                    )));
                }
                if !seen.insert(h) {
                    return Err(ConstructionError::BadLineChoice(format!(
                        "line {h} repeated"
                    )));
                }
            }
            choice.to_vec()
        }
    };

    let mut bits = curve.bits().clone();
    for &line in &chosen {
        bits.union_with(space.hyperplane_points(line));
        bits.insert(space.unitary_polar(line)?);
    }
    Ok(PointSet::from_bits(bits))
}

/// The 2-fold blocking set H ∪ L ∖ {P}: swap the tangent point for the rest
/// of its tangent line.
pub fn pavese_2fold(space: &ProjectiveSpace) -> Result<PointSet, ConstructionError> {
    require_dim(space, 2)?;
    let curve = hermitian_curve(space)?;
    let base = curve.iter().next().expect("curve is nonempty");
    let tangent = space.unitary_polar(base)?;
    let mut bits = curve.bits().clone();
    bits.union_with(space.hyperplane_points(tangent));
    bits.remove(base);
    Ok(PointSet::from_bits(bits))
}

/// The canonical Baer subplane: points whose normalized coordinates all lie
/// in GF(√q).
pub fn baer_subplane(space: &ProjectiveSpace) -> Result<PointSet, ConstructionError> {
    require_dim(space, 2)?;
    let field = space.field();
    let s = field
        .sqrt_order()
        .ok_or(ConstructionError::NotSquareOrder)? as u64;
    let mut bits = FixedBitSet::with_capacity(space.point_count());
    for p in 0..space.point_count() {
        if space
            .point_coords(p)
            .iter()
            .all(|&c| field.pow_raw(c, s) == c)
        {
            bits.insert(p);
        }
    }
    Ok(PointSet::from_bits(bits))
}

/// Complement of the canonical Baer subplane: the extremal (q−√q)-fold
/// blocking set.
pub fn baer_complement(space: &ProjectiveSpace) -> Result<PointSet, ConstructionError> {
    Ok(baer_subplane(space)?.complement())
}

/// The plane with its first point removed: the extremal q-fold blocking set.
pub fn plane_minus_point(space: &ProjectiveSpace) -> Result<PointSet, ConstructionError> {
    require_dim(space, 2)?;
    let mut set = PointSet::full(space.point_count());
    set.remove(0);
    Ok(set)
}

/// The elliptic quadric x₀x₁ + f(x₂,x₃) = 0 in PG(3,q), with f the
/// lexicographically first irreducible binary quadratic.
pub fn elliptic_quadric_ovoid(space: &ProjectiveSpace) -> Result<PointSet, ConstructionError> {
    require_dim(space, 3)?;
    let field = space.field();
    let q = field.order();
    let (c, d) = (0..q)
        .flat_map(|c| (0..q).map(move |d| (c, d)))
        .find(|&(c, d)| {
            (0..q).all(|x| {
                let val = field.add_raw(
                    field.add_raw(field.mul_raw(x, x), field.mul_raw(c, x)),
                    d,
                );
                val != 0
            })
        })
        .expect("an irreducible quadratic exists over every finite field");

    let mut bits = FixedBitSet::with_capacity(space.point_count());
    for p in 0..space.point_count() {
        let x = space.point_coords(p);
        let f = field.add_raw(
            field.add_raw(
                field.mul_raw(x[2], x[2]),
                field.mul_raw(c, field.mul_raw(x[2], x[3])),
            ),
            field.mul_raw(d, field.mul_raw(x[3], x[3])),
        );
        if field.add_raw(field.mul_raw(x[0], x[1]), f) == 0 {
            bits.insert(p);
        }
    }
    Ok(PointSet::from_bits(bits))
}

/// Ovoid plus t−1 tangent lines through a base ovoid point, minus the base
/// point: a minimal t-fold blocking set with respect to planes, of size
/// q² + (t−1)q.
pub fn ovoid_tfold(space: &ProjectiveSpace, t: u64) -> Result<PointSet, ConstructionError> {
    require_dim(space, 3)?;
    let q = space.order();
    if t < 2 || t > q {
        return Err(ConstructionError::TOutOfRange { t, min: 2, max: q });
    }
    let ovoid = elliptic_quadric_ovoid(space)?;
    let base = ovoid.iter().next().expect("ovoid is nonempty");

    // tangent lines at the base point, in line-enumeration order
    let lines = space.k_subspaces(1)?;
    let tangents: Vec<&FixedBitSet> = lines
        .iter()
        .filter(|l| l.contains(base) && l.intersection_count(ovoid.bits()) == 1)
        .collect();
    debug_assert_eq!(tangents.len() as u64, q + 1);

    let mut bits = ovoid.bits().clone();
    for line in tangents.iter().take(t as usize - 1) {
        bits.union_with(line);
    }
    bits.remove(base);
    Ok(PointSet::from_bits(bits))
}

/// The Hermitian surface of PG(3,q), q square: a minimal (q√q+1)-fold
/// blocking set with respect to planes.
pub fn hermitian_surface(space: &ProjectiveSpace) -> Result<PointSet, ConstructionError> {
    require_dim(space, 3)?;
    hermitian_variety(space)
}
