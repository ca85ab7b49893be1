//! Projective spaces over small fields, classical sesquilinear/quadratic
//! forms, the five classical generalized quadrangle families, and the
//! T2*(O) model of the unique GQ of order (3,5).
//!
//! Coordinates are fixed once and for all (antidiagonal Gram shapes, a fixed
//! hyperoval) so that point enumeration, line sets and exported files are
//! identical across runs.

use crate::ff::{Fe, Field, FfError};
use crate::incidence::IncidenceStructure;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Field(#[from] FfError),
    #[error("form is degenerate: radical vector {0:?}")]
    DegenerateForm(Vec<u64>),
    #[error("family {family} is not defined for q = {q}: {reason}")]
    BadParameters { family: String, q: u64, reason: String },
    #[error("construction produced an invalid structure: {0}")]
    BadStructure(String),
}

/// A projective point: normalized homogeneous coordinates (first nonzero
/// coordinate is 1).
pub type ProjPoint = Vec<Fe>;

/// Points of PG(n, q) in a fixed deterministic order.
pub struct ProjectiveSpace {
    pub field: Field,
    pub n: usize,
    pub points: Vec<ProjPoint>,
}

/// Normalizes homogeneous coordinates so the first nonzero entry is 1.
/// Panics on the zero vector.
pub fn normalize(field: &Field, v: &[Fe]) -> ProjPoint {
    let lead = v.iter().position(|&c| !field.is_zero(c)).expect("zero vector has no normalization");
    let inv = field.inv(v[lead]);
    v.iter().map(|&c| field.mul(inv, c)).collect()
}

impl ProjectiveSpace {
    /// Enumerates the (q^(n+1) - 1)/(q - 1) normalized points, ordered by the
    /// position of the leading 1 and then lexicographically by the remaining
    /// coordinates.
    pub fn new(n: usize, q: u64) -> Result<ProjectiveSpace, GeometryError> {
        let field = Field::gf(q)?;
        let mut points = Vec::new();
        let one = field.one();
        for lead in 0..=n {
            let free = n - lead;
            let mut counters = vec![0u16; free];
            loop {
                let mut v = vec![field.zero(); n + 1];
                v[lead] = one;
                for (i, &c) in counters.iter().enumerate() {
                    v[lead + 1 + i] = Fe(c);
                }
                points.push(v);
                // increment base-q counter, last coordinate fastest
                let mut i = free;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    counters[i] += 1;
                    if (counters[i] as u64) < q {
                        break;
                    }
                    counters[i] = 0;
                    if i == 0 {
                        counters.clear();
                        break;
                    }
                }
                if counters.is_empty() || counters.iter().all(|&c| c == 0) {
                    break;
                }
            }
            if n == lead {
                break;
            }
        }
        Ok(ProjectiveSpace { field, n, points })
    }

    pub fn index_of(&self, v: &[Fe]) -> usize {
        let p = normalize(&self.field, v);
        self.points.binary_search_by(|c| cmp_point(c, &p)).expect("point must exist")
    }
}

fn cmp_point(a: &[Fe], b: &[Fe]) -> std::cmp::Ordering {
    // points are enumerated leading-one-first then lexicographically, which
    // coincides with comparing (leading position, tail) tuples
    let la = a.iter().position(|c| c.0 != 0).unwrap();
    let lb = b.iter().position(|c| c.0 != 0).unwrap();
    la.cmp(&lb).then_with(|| a.cmp(b))
}

pub fn proj_point_count(n: usize, q: u64) -> u64 {
    (0..=n as u32).map(|i| q.pow(i)).sum()
}

/// The five classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GqFamily {
    W3,
    Q4,
    Q5Minus,
    H3,
    H4,
}

impl GqFamily {
    pub fn parse(name: &str) -> Option<GqFamily> {
        match name.to_ascii_uppercase().as_str() {
            "W3" => Some(GqFamily::W3),
            "Q4" => Some(GqFamily::Q4),
            "Q5MINUS" | "Q5-" | "Q5M" => Some(GqFamily::Q5Minus),
            "H3" => Some(GqFamily::H3),
            "H4" => Some(GqFamily::H4),
            _ => None,
        }
    }

    /// Table order: W3 -> (q,q); Q4 -> (q,q); Q5minus -> (q,q^2);
    /// H3 -> (q^2,q); H4 -> (q^2,q^3).
    pub fn expected_order(&self, q: u64) -> (u64, u64) {
        match self {
            GqFamily::W3 | GqFamily::Q4 => (q, q),
            GqFamily::Q5Minus => (q, q * q),
            GqFamily::H3 => (q * q, q),
            GqFamily::H4 => (q * q, q * q * q),
        }
    }
}

/// Kinds of classical forms on PG(n, q).
enum Form {
    /// Alternating bilinear form given by an antidiagonal Gram with signs.
    Symplectic,
    /// Quadratic form x0*x_n + x1*x_{n-1} + ... with an optional middle
    /// square (parabolic) or irreducible binary block (elliptic, with
    /// parameter c).
    Parabolic,
    Elliptic { c: Fe },
    /// Hermitian form with antidiagonal Gram over GF(q^2).
    Hermitian,
}

struct FormSpace {
    space: ProjectiveSpace,
    form: Form,
}

impl FormSpace {
    fn bilinear(&self, x: &[Fe], y: &[Fe]) -> Fe {
        let k = &self.space.field;
        let n = self.space.n;
        match &self.form {
            Form::Symplectic => {
                // B(x,y) = sum over antidiagonal pairs (i, n-i) of
                // x_i y_{n-i} - x_{n-i} y_i
                let mut acc = k.zero();
                for i in 0..(n + 1) / 2 {
                    let j = n - i;
                    let a = k.mul(x[i], y[j]);
                    let b = k.mul(x[j], y[i]);
                    acc = k.add(acc, k.sub(a, b));
                }
                acc
            }
            Form::Parabolic | Form::Elliptic { .. } => {
                // polarization B(x,y) = Q(x+y) - Q(x) - Q(y)
                let sum: Vec<Fe> = (0..=n).map(|i| k.add(x[i], y[i])).collect();
                let q = self.quadratic(&sum);
                k.sub(k.sub(q, self.quadratic(x)), self.quadratic(y))
            }
            Form::Hermitian => {
                // H(x,y) = sum x_i * conj(y_{n-i})
                let mut acc = k.zero();
                for i in 0..=n {
                    acc = k.add(acc, k.mul(x[i], k.conjugate(y[n - i])));
                }
                acc
            }
        }
    }

    fn quadratic(&self, x: &[Fe]) -> Fe {
        let k = &self.space.field;
        let n = self.space.n;
        match &self.form {
            Form::Parabolic => {
                // Q(x) = x0 x_n + x1 x_{n-1} + ... + x_m^2 (n = 2m even dim count)
                let mut acc = k.zero();
                let m = n / 2;
                for i in 0..m {
                    acc = k.add(acc, k.mul(x[i], x[n - i]));
                }
                k.add(acc, k.mul(x[m], x[m]))
            }
            Form::Elliptic { c } => {
                // Q(x) = x0 x_n + x1 x_{n-1} + ... + (x_m^2 + x_m x_{m+1} + c x_{m+1}^2)
                let mut acc = k.zero();
                let m = (n - 1) / 2;
                for i in 0..m {
                    acc = k.add(acc, k.mul(x[i], x[n - i]));
                }
                let u = x[m];
                let v = x[m + 1];
                let block = k.add(k.add(k.mul(u, u), k.mul(u, v)), k.mul(*c, k.mul(v, v)));
                k.add(acc, block)
            }
            Form::Symplectic | Form::Hermitian => unreachable!("no quadratic part"),
        }
    }

    fn is_singular_point(&self, x: &[Fe]) -> bool {
        let k = &self.space.field;
        match &self.form {
            Form::Symplectic => true,
            Form::Parabolic | Form::Elliptic { .. } => k.is_zero(self.quadratic(x)),
            Form::Hermitian => k.is_zero(self.bilinear(x, x)),
        }
    }

    /// Exhaustive nondegeneracy check: no nonzero vector orthogonal to all of
    /// the space (and, for quadratic forms, singular in the radical).
    fn check_nondegenerate(&self) -> Result<(), GeometryError> {
        let k = &self.space.field;
        for pt in &self.space.points {
            let orthogonal_to_all = self
                .space
                .points
                .iter()
                .all(|other| k.is_zero(self.bilinear(pt, other)));
            if orthogonal_to_all {
                let singular = match self.form {
                    Form::Symplectic | Form::Hermitian => true,
                    Form::Parabolic | Form::Elliptic { .. } => self.is_singular_point(pt),
                };
                if singular {
                    return Err(GeometryError::DegenerateForm(
                        pt.iter().map(|c| c.0 as u64).collect(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Builds one of the classical families over the appropriate field
/// (GF(q^2) for the Hermitian ones). Points are the totally singular
/// 1-spaces; lines are the totally singular 2-spaces as point sets.
pub fn build_classical_gq(family: GqFamily, q: u64) -> Result<IncidenceStructure, GeometryError> {
    let (dim, field_order) = match family {
        GqFamily::W3 => (3, q),
        GqFamily::Q4 => (4, q),
        GqFamily::Q5Minus => (5, q),
        GqFamily::H3 => (3, q * q),
        GqFamily::H4 => (4, q * q),
    };
    let space = ProjectiveSpace::new(dim, field_order)?;
    let form = match family {
        GqFamily::W3 => Form::Symplectic,
        GqFamily::Q4 => Form::Parabolic,
        GqFamily::Q5Minus => {
            let c = elliptic_parameter(&space.field).ok_or_else(|| GeometryError::BadParameters {
                family: "Q5minus".into(),
                q,
                reason: "no irreducible binary quadratic block found".into(),
            })?;
            Form::Elliptic { c }
        }
        GqFamily::H3 | GqFamily::H4 => Form::Hermitian,
    };
    let fs = FormSpace { space, form };
    fs.check_nondegenerate()?;

    let singular: Vec<usize> = (0..fs.space.points.len())
        .filter(|&i| fs.is_singular_point(&fs.space.points[i]))
        .collect();

    // A 2-space spanned by singular/isotropic points u, v is totally
    // singular iff additionally B(u, v) = 0.
    let mut lines: Vec<Vec<usize>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let k_field = &fs.space.field;
    for (ai, &a) in singular.iter().enumerate() {
        for &b in singular.iter().skip(ai + 1) {
            let pa = &fs.space.points[a];
            let pb = &fs.space.points[b];
            if !k_field.is_zero(fs.bilinear(pa, pb)) {
                continue;
            }
            // span points: pa, pb + lambda*pa for all lambda
            let mut line: Vec<usize> = vec![a, b];
            for lam in k_field.elements().skip(1) {
                let v: Vec<Fe> =
                    (0..=fs.space.n).map(|i| k_field.add(pb[i], k_field.mul(lam, pa[i]))).collect();
                line.push(fs.space.index_of(&v));
            }
            line.sort_unstable();
            line.dedup();
            if seen.insert(line.clone()) {
                // verify total singularity of every member pair (exhaustive)
                for (ii, &pi) in line.iter().enumerate() {
                    if !fs.is_singular_point(&fs.space.points[pi]) {
                        return Err(GeometryError::BadStructure(
                            "line contains a non-singular point".into(),
                        ));
                    }
                    for &pj in line.iter().skip(ii + 1) {
                        if !k_field
                            .is_zero(fs.bilinear(&fs.space.points[pi], &fs.space.points[pj]))
                        {
                            return Err(GeometryError::BadStructure(
                                "line is not totally singular".into(),
                            ));
                        }
                    }
                }
                lines.push(line);
            }
        }
    }

    // re-index points to the singular ones only
    let mut point_index = vec![usize::MAX; fs.space.points.len()];
    for (new, &old) in singular.iter().enumerate() {
        point_index[old] = new;
    }
    let lines: Vec<Vec<usize>> =
        lines.into_iter().map(|l| l.into_iter().map(|p| point_index[p]).collect()).collect();
    IncidenceStructure::new(singular.len(), lines)
        .map_err(|e| GeometryError::BadStructure(e.to_string()))
}

/// Smallest c (in element order) making t^2 + t + c irreducible over GF(q).
fn elliptic_parameter(field: &Field) -> Option<Fe> {
    field.elements().find(|&c| {
        field.elements().all(|t| !field.is_zero(field.add(field.add(field.mul(t, t), t), c)))
    })
}

/// The fixed hyperoval of PG(2,4): the conic {(1, t, t^2)} plus (0,0,1) and
/// the nucleus (0,1,0). Returned as normalized coordinate triples.
pub fn hyperoval_pg24() -> Result<(Field, Vec<Vec<Fe>>), GeometryError> {
    let k = Field::gf(4)?;
    let one = k.one();
    let mut pts: Vec<Vec<Fe>> = k.elements().map(|t| vec![one, t, k.mul(t, t)]).collect();
    pts.push(vec![k.zero(), k.zero(), one]);
    pts.push(vec![k.zero(), one, k.zero()]);
    Ok((k, pts))
}

/// Checks that no three of the given PG(2,q) points are collinear, by
/// exhausting all triples and testing 3x3 determinants.
pub fn is_arc_no_three_collinear(field: &Field, pts: &[Vec<Fe>]) -> bool {
    let det3 = |a: &[Fe], b: &[Fe], c: &[Fe]| -> Fe {
        let k = field;
        let m01 = k.sub(k.mul(b[1], c[2]), k.mul(b[2], c[1]));
        let m11 = k.sub(k.mul(b[0], c[2]), k.mul(b[2], c[0]));
        let m21 = k.sub(k.mul(b[0], c[1]), k.mul(b[1], c[0]));
        let t1 = k.mul(a[0], m01);
        let t2 = k.mul(a[1], m11);
        let t3 = k.mul(a[2], m21);
        k.add(k.sub(t1, t2), t3)
    };
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for l in j + 1..pts.len() {
                if field.is_zero(det3(&pts[i], &pts[j], &pts[l])) {
                    return false;
                }
            }
        }
    }
    true
}

/// T2*(O) over the fixed hyperoval: points are the 64 vectors of AG(3,4);
/// lines are the affine lines whose direction lies in O. Produces the unique
/// generalized quadrangle of order (3,5).
pub fn build_gq35() -> IncidenceStructure {
    let (k, hyperoval) = hyperoval_pg24().expect("GF(4) is shipped");
    debug_assert!(is_arc_no_three_collinear(&k, &hyperoval));
    let q = 4usize;
    let encode = |a: Fe, b: Fe, c: Fe| -> usize {
        (a.0 as usize * q + b.0 as usize) * q + c.0 as usize
    };
    let n_points = q * q * q;
    let mut lines = Vec::new();
    let mut covered = vec![false; n_points * hyperoval.len()];
    for (di, dir) in hyperoval.iter().enumerate() {
        for a in k.elements() {
            for b in k.elements() {
                for c in k.elements() {
                    let base = encode(a, b, c);
                    if covered[base * hyperoval.len() + di] {
                        continue;
                    }
                    let mut line = Vec::with_capacity(q);
                    for lam in k.elements() {
                        let p = encode(
                            k.add(a, k.mul(lam, dir[0])),
                            k.add(b, k.mul(lam, dir[1])),
                            k.add(c, k.mul(lam, dir[2])),
                        );
                        covered[p * hyperoval.len() + di] = true;
                        line.push(p);
                    }
                    line.sort_unstable();
                    lines.push(line);
                }
            }
        }
    }
    IncidenceStructure::new(n_points, lines).expect("T2*(O) construction is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_point_counts() {
        assert_eq!(ProjectiveSpace::new(3, 2).unwrap().points.len() as u64, 15);
        assert_eq!(proj_point_count(3, 2), 15);
        assert_eq!(ProjectiveSpace::new(2, 4).unwrap().points.len() as u64, 21);
        assert_eq!(proj_point_count(2, 4), 21);
        assert_eq!(ProjectiveSpace::new(4, 3).unwrap().points.len() as u64, 121);
        assert_eq!(proj_point_count(4, 3), 121);
    }

    #[test]
    fn points_are_normalized_and_deduplicated() {
        let pg = ProjectiveSpace::new(2, 3).unwrap();
        let k = &pg.field;
        for p in &pg.points {
            let lead = p.iter().position(|c| c.0 != 0).unwrap();
            assert_eq!(p[lead], k.one());
        }
        // scale invariance: lambda * v normalizes to the same point
        for p in &pg.points {
            for lam in k.elements().skip(1) {
                let scaled: Vec<Fe> = p.iter().map(|&c| k.mul(lam, c)).collect();
                assert_eq!(normalize(k, &scaled), *p);
            }
        }
    }

    #[test]
    fn w3_2_is_gq_2_2() {
        let gq = build_classical_gq(GqFamily::W3, 2).unwrap();
        assert_eq!(gq.n_points(), 15);
        assert_eq!(gq.n_lines(), 15);
        let params = gq.verify_gq_axiom().unwrap();
        assert_eq!((params.s, params.t), (2, 2));
    }

    #[test]
    fn q5minus_2_is_gq_2_4() {
        let gq = build_classical_gq(GqFamily::Q5Minus, 2).unwrap();
        assert_eq!(gq.n_points(), 27);
        assert_eq!(gq.n_lines(), 45);
        let params = gq.verify_gq_axiom().unwrap();
        assert_eq!((params.s, params.t), (2, 4));
    }

    #[test]
    fn h3_2_is_gq_4_2() {
        let gq = build_classical_gq(GqFamily::H3, 2).unwrap();
        assert_eq!(gq.n_points(), 45);
        assert_eq!(gq.n_lines(), 27);
        let params = gq.verify_gq_axiom().unwrap();
        assert_eq!((params.s, params.t), (4, 2));
        // dual has order (2,4)
        let dual = gq.dualize().verify_gq_axiom().unwrap();
        assert_eq!((dual.s, dual.t), (2, 4));
    }

    #[test]
    fn hyperoval_is_an_arc() {
        let (k, o) = hyperoval_pg24().unwrap();
        assert_eq!(o.len(), 6);
        assert!(is_arc_no_three_collinear(&k, &o));
        // dropping the nucleus and adding a conic-external point breaks it
        let mut bad = o.clone();
        bad[5] = vec![k.one(), k.zero(), k.zero()]; // (1,0,0) is on the conic's chords
        assert!(!is_arc_no_three_collinear(&k, &bad));
    }

    #[test]
    fn gq35_has_the_right_shape() {
        let gq = build_gq35();
        assert_eq!(gq.n_points(), 64);
        assert_eq!(gq.n_lines(), 96);
        let params = gq.verify_gq_axiom().unwrap();
        assert_eq!((params.s, params.t), (3, 5));
        for line in gq.lines() {
            assert_eq!(line.len(), 4);
        }
        for p in 0..gq.n_points() {
            assert_eq!(gq.lines_through(p).len(), 6);
        }
        // dual has order (5,3) with 96 points
        let dual = gq.dualize();
        assert_eq!(dual.n_points(), 96);
        assert_eq!(dual.verify_gq_axiom().unwrap().s, 5);
    }

    #[test]
    fn divisibility_lemma_on_constructed_examples() {
        // s + t divides st(s+1)(t+1) on every constructed example
        for (fam, q) in [
            (GqFamily::W3, 2),
            (GqFamily::W3, 3),
            (GqFamily::Q4, 2),
            (GqFamily::Q5Minus, 2),
            (GqFamily::H3, 2),
        ] {
            let gq = build_classical_gq(fam, q).unwrap();
            let p = gq.verify_gq_axiom().unwrap();
            assert_eq!(p.s * p.t * (p.s + 1) * (p.t + 1) % (p.s + p.t), 0);
            assert_eq!(p.n_points, (p.s + 1) * (p.s * p.t + 1));
            assert_eq!(p.n_lines, (p.t + 1) * (p.s * p.t + 1));
            assert_eq!(p.n_flags, (p.s + 1) * (p.t + 1) * (p.s * p.t + 1));
        }
    }
}
