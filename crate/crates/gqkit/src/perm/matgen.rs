//! Matrix-to-permutation induction for classical groups acting on projective
//! points. Generator matrices ship in a data file and are verified to
//! preserve the relevant form before any permutation is emitted.

use super::{Perm, PermGroup, PermError};
use crate::ff::{Fe, Field};
use crate::geometry::{normalize, ProjectiveSpace};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatGenError {
    #[error("no shipped generators for family {family} in dimension {dim} over GF({q})")]
    NotShipped { family: String, dim: usize, q: u64 },
    #[error("bad generator file: {0}")]
    BadFile(String),
    #[error("matrix {index} does not preserve the symplectic form")]
    FormNotPreserved { index: usize },
    #[error("matrix {index} is singular")]
    Singular { index: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

const SHIPPED: &str = include_str!("../../data/classical_generators.txt");

/// Parses a MAT v1 record for (family, dim, q); entries are field element
/// codes in lexicographic element order.
pub fn load_matrices(
    family: &str,
    dim: usize,
    q: u64,
) -> Result<Vec<Vec<Vec<Fe>>>, MatGenError> {
    let mut lines = SHIPPED.lines().filter(|l| !l.trim_start().starts_with('#'));
    while let Some(line) = lines.next() {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() == 6 && parts[0] == "mat" && parts[1] == "1" {
            let (fam, d, qq, n): (&str, usize, u64, usize) = (
                parts[2],
                parts[3].parse().map_err(|e| MatGenError::BadFile(format!("{e}")))?,
                parts[4].parse().map_err(|e| MatGenError::BadFile(format!("{e}")))?,
                parts[5].parse().map_err(|e| MatGenError::BadFile(format!("{e}")))?,
            );
            let mut mats = Vec::with_capacity(n);
            for _ in 0..n {
                let row = lines
                    .next()
                    .ok_or_else(|| MatGenError::BadFile("truncated record".into()))?;
                let codes: Result<Vec<u16>, _> =
                    row.split_whitespace().map(|w| w.parse::<u16>()).collect();
                let codes = codes.map_err(|e| MatGenError::BadFile(format!("{e}")))?;
                if codes.len() != d * d {
                    return Err(MatGenError::BadFile(format!(
                        "expected {} entries, found {}",
                        d * d,
                        codes.len()
                    )));
                }
                let mat: Vec<Vec<Fe>> =
                    (0..d).map(|i| (0..d).map(|j| Fe(codes[i * d + j])).collect()).collect();
                mats.push(mat);
            }
            if fam == family && d == dim && qq == q {
                return Ok(mats);
            }
        }
    }
    Err(MatGenError::NotShipped { family: family.into(), dim, q })
}

/// B(x,y) = x0 y_{n} - x_{n} y0 + x1 y_{n-1} - ... for the antidiagonal
/// symplectic Gram used by the W(3,q) construction.
fn symplectic_bilinear(field: &Field, x: &[Fe], y: &[Fe]) -> Fe {
    let n = x.len() - 1;
    let mut acc = field.zero();
    for i in 0..(n + 1) / 2 {
        let j = n - i;
        acc = field.add(acc, field.sub(field.mul(x[i], y[j]), field.mul(x[j], y[i])));
    }
    acc
}

fn mat_vec(field: &Field, v: &[Fe], m: &[Vec<Fe>]) -> Vec<Fe> {
    // row vector times matrix
    let d = v.len();
    (0..d)
        .map(|j| {
            let mut acc = field.zero();
            for (i, &vi) in v.iter().enumerate() {
                acc = field.add(acc, field.mul(vi, m[i][j]));
            }
            acc
        })
        .collect()
}

/// Checks B(xM, yM) = B(x, y) on a spanning set (all pairs of unit vectors).
pub fn preserves_symplectic_form(field: &Field, m: &[Vec<Fe>]) -> bool {
    let d = m.len();
    let unit = |i: usize| -> Vec<Fe> {
        (0..d).map(|j| if i == j { field.one() } else { field.zero() }).collect()
    };
    for i in 0..d {
        for j in 0..d {
            let ei = unit(i);
            let ej = unit(j);
            let lhs = symplectic_bilinear(field, &mat_vec(field, &ei, m), &mat_vec(field, &ej, m));
            if lhs != symplectic_bilinear(field, &ei, &ej) {
                return false;
            }
        }
    }
    true
}

/// Permutation induced on the points of a projective space by x -> x M.
pub fn perm_from_matrix(
    space: &ProjectiveSpace,
    m: &[Vec<Fe>],
) -> Result<Perm, MatGenError> {
    let mut images = Vec::with_capacity(space.points.len());
    for p in &space.points {
        let image = mat_vec(&space.field, p, m);
        if image.iter().all(|c| space.field.is_zero(*c)) {
            return Err(MatGenError::Singular { index: 0 });
        }
        let norm = normalize(&space.field, &image);
        images.push(space.index_of(&norm) as u32);
    }
    Perm::from_images(images).map_err(MatGenError::from)
}

/// The symplectic group Sp(4,q) acting on the points of PG(3,q), from the
/// shipped transvection matrices. For odd q the induced permutation group is
/// the projective image PSp(4,q).
pub fn symplectic_point_group(q: u64) -> Result<(ProjectiveSpace, PermGroup), MatGenError> {
    let mats = load_matrices("Sp", 4, q)?;
    let space = ProjectiveSpace::new(3, q)
        .map_err(|e| MatGenError::BadFile(format!("field construction: {e}")))?;
    let mut gens = Vec::new();
    for (i, m) in mats.iter().enumerate() {
        if !preserves_symplectic_form(&space.field, m) {
            return Err(MatGenError::FormNotPreserved { index: i });
        }
        gens.push(perm_from_matrix(&space, m)?);
    }
    let group = PermGroup::new(space.points.len(), gens)?;
    Ok((space, group))
}

/// Extends a point action to the point+line vertex set of an incidence
/// structure whose points carry the same indexing.
pub fn extend_to_incidence_graph(
    inc: &crate::incidence::IncidenceStructure,
    point_perm: &Perm,
) -> Result<Perm, PermError> {
    let n_p = inc.n_points();
    let mut line_index = std::collections::HashMap::new();
    for (li, line) in inc.lines().iter().enumerate() {
        line_index.insert(line.clone(), li);
    }
    let mut images = vec![0u32; n_p + inc.n_lines()];
    for p in 0..n_p {
        images[p] = point_perm.apply(p) as u32;
    }
    for (li, line) in inc.lines().iter().enumerate() {
        let mut mapped: Vec<usize> = line.iter().map(|&p| point_perm.apply(p)).collect();
        mapped.sort_unstable();
        let target = line_index.get(&mapped).ok_or(PermError::NotAnAutomorphism {
            gen_index: 0,
            u: line[0],
            v: line[1],
        })?;
        images[n_p + li] = (n_p + target) as u32;
    }
    Perm::from_images(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn sp4_2_acts_transitively_with_order_720() {
        let (space, group) = symplectic_point_group(2).unwrap();
        assert_eq!(space.points.len(), 15);
        // |Sp(4,2)| = 2^4 (2^2-1)(2^4-1) = 720 by the order formula oracle
        assert_eq!(group.order(), BigUint::from(720u32));
        assert_eq!(group.orbit(0).unwrap().len(), 15);
    }

    #[test]
    fn sp4_3_projective_image_is_psp() {
        let (space, group) = symplectic_point_group(3).unwrap();
        assert_eq!(space.points.len(), 40);
        // |PSp(4,3)| = |Sp(4,3)| / 2 = 25920
        assert_eq!(group.order(), BigUint::from(25920u32));
    }

    #[test]
    fn unknown_family_is_an_error() {
        assert!(matches!(load_matrices("SU", 4, 2), Err(MatGenError::NotShipped { .. })));
    }
}
