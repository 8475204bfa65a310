//! Exact vertex enumeration of covering polyhedra and the minimally
//! nonideal tests.
//!
//! Q(A) = {x : Ax >= 1, x >= 0} is unbounded, so it is homogenised to a
//! pointed cone in one extra dimension and enumerated with the double
//! description method starting from the nonnegative orthant; the cover rows
//! are inserted in lexicographic order. Vertices are the rays with a
//! positive homogenising coordinate, scaled back; the others are reported as
//! recession-cone rays.

use crate::clutters::Clutter;
use crate::exactmat::{Rational, RationalMatrix};
use crate::lehman::{BipartiteGraph, LehmanCertificate};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("matrix is not 0/1")]
    NotZeroOne,
    #[error("row {0}'s support contains row {1}'s")]
    NotClutter(usize, usize),
    #[error("polyhedron lacks the nonnegativity rows of a covering shape")]
    NotCoveringShape,
    #[error("dimension 0 polyhedron")]
    ZeroDimension,
    #[error("{0} constraints exceed the supported 63")]
    TooManyConstraints(usize),
    #[error("ground set of size {0} exceeds the cap {1} for exhaustive minor work")]
    TooLarge(usize, usize),
    #[error("input matrix did not certify as a Lehman matrix")]
    NotCertified,
}

/// Half-space description: rows mean `coeffs . x >= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolyhedron {
    pub dimension: usize,
    pub inequalities: Vec<(Vec<Rational>, Rational)>,
}

impl HPolyhedron {
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.inequalities.iter().all(|(coeffs, bound)| {
            let lhs: Rational = coeffs.iter().zip(x).map(|(c, xi)| c * xi).sum();
            lhs >= *bound
        })
    }
}

/// Exact vertex/ray description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRep {
    pub vertices: Vec<Vec<Rational>>,
    pub rays: Vec<Vec<Rational>>,
}

/// Ground-set cap for the exhaustive idealness check.
pub const IDEAL_GROUND_CAP: usize = 16;
/// Ground-set cap for the exhaustive one-level minor check.
pub const MNI_GROUND_CAP: usize = 14;

/// Q(A) for a 0/1 clutter matrix: one cover row per matrix row plus the
/// nonnegativity rows.
pub fn covering_polyhedron(a: &RationalMatrix) -> Result<HPolyhedron, PolyError> {
    if !a.is_zero_one() {
        return Err(PolyError::NotZeroOne);
    }
    let (m, n) = (a.rows(), a.cols());
    if n == 0 {
        return Err(PolyError::ZeroDimension);
    }
    let support = |i: usize| -> u64 {
        (0..n).filter(|&j| a.get(i, j).is_one()).fold(0u64, |s, j| s | 1 << j)
    };
    for i in 0..m {
        for i2 in 0..m {
            if i != i2 {
                let (si, si2) = (support(i), support(i2));
                if si & si2 == si2 && si != si2 {
                    return Err(PolyError::NotClutter(i, i2));
                }
            }
        }
    }
    let mut inequalities = Vec::with_capacity(m + n);
    for i in 0..m {
        inequalities.push((a.row(i).to_vec(), Rational::one()));
    }
    for j in 0..n {
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[j] = Rational::one();
        inequalities.push((coeffs, Rational::zero()));
    }
    Ok(HPolyhedron { dimension: n, inequalities })
}

struct Ray {
    v: Vec<BigInt>,
    tight: u64,
}

fn normalise(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact double description on the homogenised cone.
pub fn enumerate_vertices(h: &HPolyhedron) -> Result<VRep, PolyError> {
    let d = h.dimension;
    if d == 0 {
        return Err(PolyError::ZeroDimension);
    }
    // The covering shape provides x_j >= 0 for every coordinate; find them.
    let mut has_nonneg = vec![false; d];
    let mut covers: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for (coeffs, bound) in &h.inequalities {
        let support: Vec<usize> = (0..d).filter(|&j| !coeffs[j].is_zero()).collect();
        if bound.is_zero() && support.len() == 1 && coeffs[support[0]].is_one() {
            has_nonneg[support[0]] = true;
        } else {
            covers.push((coeffs.clone(), bound.clone()));
        }
    }
    if has_nonneg.iter().any(|&b| !b) {
        return Err(PolyError::NotCoveringShape);
    }
    let total = 1 + d + covers.len();
    if total > 63 {
        return Err(PolyError::TooManyConstraints(total));
    }
    covers.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));

    // Homogeneous constraint rows: index 0 is x0 >= 0, then the coordinate
    // rows, then the cover rows as coeffs.x - bound*x0 >= 0.
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(total);
    let mut unit = vec![BigInt::zero(); d + 1];
    unit[0] = BigInt::one();
    rows.push(unit);
    for j in 0..d {
        let mut r = vec![BigInt::zero(); d + 1];
        r[j + 1] = BigInt::one();
        rows.push(r);
    }
    for (coeffs, bound) in &covers {
        let mut l = BigInt::one();
        l = l.lcm(bound.denom());
        for c in coeffs {
            l = l.lcm(c.denom());
        }
        let mut r = Vec::with_capacity(d + 1);
        r.push(-(bound.numer() * (&l / bound.denom())));
        for c in coeffs {
            r.push(c.numer() * (&l / c.denom()));
        }
        rows.push(r);
    }

    // Initial cone: the nonnegative orthant of R^{d+1}.
    let mut rays: Vec<Ray> = (0..=d)
        .map(|i| {
            let mut v = vec![BigInt::zero(); d + 1];
            v[i] = BigInt::one();
            let mut tight = 0u64;
            for (ci, row) in rows.iter().enumerate().take(d + 1) {
                if dot(row, &v).is_zero() {
                    tight |= 1 << ci;
                }
            }
            Ray { v, tight }
        })
        .collect();

    for ci in d + 1..total {
        let row = rows[ci].clone();
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(&row, &r.v)).collect();
        let mut keep: Vec<Ray> = Vec::new();
        let mut pos: Vec<(usize, BigInt)> = Vec::new();
        let mut neg: Vec<(usize, BigInt)> = Vec::new();
        for (i, val) in vals.iter().enumerate() {
            match val.sign() {
                num_bigint::Sign::Plus => pos.push((i, val.clone())),
                num_bigint::Sign::Minus => neg.push((i, val.clone())),
                num_bigint::Sign::NoSign => {}
            }
        }
        let mut new_rays: Vec<Ray> = Vec::new();
        for &(p, ref vp) in &pos {
            for &(q, ref vq) in &neg {
                let common = rays[p].tight & rays[q].tight;
                // Rank filter, then the combinatorial adjacency test.
                if (common.count_ones() as usize) < d.saturating_sub(1) {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == q || r.tight & common != common);
                if !adjacent {
                    continue;
                }
                let mut v: Vec<BigInt> = (0..=d)
                    .map(|i| vp.clone() * &rays[q].v[i] - vq.clone() * &rays[p].v[i])
                    .collect();
                normalise(&mut v);
                let mut tight = 0u64;
                for (cj, r) in rows.iter().enumerate().take(ci + 1) {
                    if dot(r, &v).is_zero() {
                        tight |= 1 << cj;
                    }
                }
                new_rays.push(Ray { v, tight });
            }
        }
        for (i, ray) in rays.drain(..).enumerate() {
            if !vals[i].is_negative() {
                let mut ray = ray;
                if vals[i].is_zero() {
                    ray.tight |= 1 << ci;
                }
                keep.push(ray);
            }
        }
        keep.extend(new_rays);
        rays = keep;
    }

    let mut vertices: Vec<Vec<Rational>> = Vec::new();
    let mut dirs: Vec<Vec<Rational>> = Vec::new();
    for r in &rays {
        let x0 = &r.v[0];
        if x0.is_zero() {
            dirs.push(r.v[1..].iter().map(|x| Rational::from_integer(x.clone())).collect());
        } else {
            vertices
                .push(r.v[1..].iter().map(|x| Rational::new(x.clone(), x0.clone())).collect());
        }
    }
    vertices.sort();
    vertices.dedup();
    dirs.sort();
    dirs.dedup();
    Ok(VRep { vertices, rays: dirs })
}

/// Vertices with at least one non-integer coordinate.
pub fn fractional_vertices(v: &VRep) -> Vec<Vec<Rational>> {
    v.vertices
        .iter()
        .filter(|x| x.iter().any(|c| !c.is_integer()))
        .cloned()
        .collect()
}

/// True iff Q(A) has exactly one fractional vertex. This is the operational
/// test applied to square matrices; for a certified Lehman matrix the
/// fractional vertex in question is necessarily (1/r, ..., 1/r).
pub fn has_unique_fractional_vertex(a: &RationalMatrix) -> Result<bool, PolyError> {
    let v = enumerate_vertices(&covering_polyhedron(a)?)?;
    Ok(fractional_vertices(&v).len() == 1)
}

/// The square minimally-nonideal test for certified Lehman matrices: true
/// iff (1/r)*1 is the only fractional vertex of Q(A).
pub fn mni_test_square(g: &BipartiteGraph, cert: &LehmanCertificate) -> Result<bool, PolyError> {
    if crate::lehman::certify(g, cert.ty.k).as_ref() != Some(cert) {
        return Err(PolyError::NotCertified);
    }
    let v = enumerate_vertices(&covering_polyhedron(&g.to_matrix())?)?;
    let fracs = fractional_vertices(&v);
    let centre = vec![Rational::new(BigInt::one(), BigInt::from(cert.ty.r as i64)); g.n()];
    Ok(fracs.len() == 1 && fracs[0] == centre)
}

/// Idealness: every vertex of Q(A) is integral. Exhaustive, capped.
pub fn is_ideal(c: &Clutter) -> Result<bool, PolyError> {
    let ground = c.ground_size();
    if ground > IDEAL_GROUND_CAP {
        return Err(PolyError::TooLarge(ground, IDEAL_GROUND_CAP));
    }
    if ground == 0 || c.edge_count() == 0 {
        return Ok(true);
    }
    let v = enumerate_vertices(&covering_polyhedron(&c.incidence_matrix())?)?;
    Ok(fractional_vertices(&v).is_empty())
}

/// Minimal nonidealness by definition: not ideal, while every single-vertex
/// deletion and contraction is ideal (idealness is minor-closed, so one
/// level suffices).
pub fn is_mni_exact(c: &Clutter) -> Result<bool, PolyError> {
    let ground = c.ground_size();
    if ground > MNI_GROUND_CAP {
        return Err(PolyError::TooLarge(ground, MNI_GROUND_CAP));
    }
    if is_ideal(c)? {
        return Ok(false);
    }
    for v in c.ground_vertices() {
        if !is_ideal(&c.delete(v).expect("in ground"))? {
            return Ok(false);
        }
        if !is_ideal(&c.contract(v).expect("in ground"))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::clutters::build_j;
    use crate::exactmat::{rat, ratio};
    use crate::lehman::certify;

    fn triangle_clutter() -> Clutter {
        Clutter::new(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn covering_polyhedron_shapes() {
        let i2 = RationalMatrix::identity(2);
        let h = covering_polyhedron(&i2).unwrap();
        assert_eq!(h.inequalities.len(), 4);
        let (fano, _) = atlas::fano_pair();
        assert_eq!(covering_polyhedron(&fano).unwrap().inequalities.len(), 14);
        let nested = RationalMatrix::from_01(2, 3, &[1, 1, 0, 1, 1, 1]);
        assert!(matches!(covering_polyhedron(&nested), Err(PolyError::NotClutter(1, 0))));
    }

    #[test]
    fn identity_polyhedron_vertex() {
        let h = covering_polyhedron(&RationalMatrix::identity(2)).unwrap();
        let v = enumerate_vertices(&h).unwrap();
        assert_eq!(v.vertices, vec![vec![rat(1), rat(1)]]);
        assert_eq!(v.rays.len(), 2);
        assert!(fractional_vertices(&v).is_empty());
    }

    #[test]
    fn triangle_polyhedron_vertices() {
        let h = covering_polyhedron(&triangle_clutter().incidence_matrix()).unwrap();
        let v = enumerate_vertices(&h).unwrap();
        let expect: Vec<Vec<Rational>> = vec![
            vec![rat(0), rat(1), rat(1)],
            vec![ratio(1, 2), ratio(1, 2), ratio(1, 2)],
            vec![rat(1), rat(0), rat(1)],
            vec![rat(1), rat(1), rat(0)],
        ];
        assert_eq!(v.vertices, expect);
        assert_eq!(fractional_vertices(&v), vec![vec![ratio(1, 2); 3]]);
        assert_eq!(v.rays.len(), 3);
    }

    #[test]
    fn fano_polyhedron_unique_fractional_vertex() {
        let (a, _) = atlas::fano_pair();
        let v = enumerate_vertices(&covering_polyhedron(&a).unwrap()).unwrap();
        let fracs = fractional_vertices(&v);
        assert_eq!(fracs, vec![vec![ratio(1, 3); 7]]);
        // Rays of a covering polyhedron are the coordinate directions.
        assert_eq!(v.rays.len(), 7);
        let mut units: Vec<Vec<Rational>> = (0..7)
            .map(|i| (0..7).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
            .collect();
        units.sort();
        assert_eq!(v.rays, units);
    }

    #[test]
    fn enumeration_matches_brute_force_small() {
        let i2 = covering_polyhedron(&RationalMatrix::identity(2)).unwrap();
        let tri = covering_polyhedron(&triangle_clutter().incidence_matrix()).unwrap();
        let (fa, _) = atlas::fano_pair();
        let fano = covering_polyhedron(&fa).unwrap();
        for h in [i2, tri, fano] {
            let dd = enumerate_vertices(&h).unwrap();
            let brute = crate::reference::vertices_brute(&h);
            assert_eq!(dd.vertices, brute.vertices);
        }
    }

    #[test]
    fn every_vertex_tight_on_enough_constraints() {
        let (a, _) = atlas::fano_pair();
        let h = covering_polyhedron(&a).unwrap();
        let v = enumerate_vertices(&h).unwrap();
        for x in &v.vertices {
            assert!(h.contains(x));
            let tight: Vec<usize> = h
                .inequalities
                .iter()
                .enumerate()
                .filter(|(_, (c, b))| {
                    let lhs: Rational = c.iter().zip(x).map(|(ci, xi)| ci * xi).sum();
                    lhs == *b
                })
                .map(|(i, _)| i)
                .collect();
            let rows: Vec<Vec<Rational>> =
                tight.iter().map(|&i| h.inequalities[i].0.clone()).collect();
            let m = RationalMatrix::from_rows(rows);
            assert_eq!(m.rank(), h.dimension);
        }
    }

    #[test]
    fn moebius_matrix_is_mni() {
        let g = atlas::moebius_ladder(5);
        let cert = certify(&g, 1).unwrap();
        assert!(mni_test_square(&g, &cert).unwrap());
    }

    #[test]
    fn idealness_cases() {
        let i3 = Clutter::from_matrix(&RationalMatrix::identity(3)).unwrap();
        assert!(is_ideal(&i3).unwrap());
        assert!(!is_ideal(&triangle_clutter()).unwrap());
        assert!(!is_ideal(&build_j(2)).unwrap());
    }

    #[test]
    fn minors_of_ideal_clutters_stay_ideal() {
        let mut state = 0x5a5a5a5au64;
        let mut next = move |m: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % m
        };
        let mut checked = 0;
        for _ in 0..40 {
            let n = 3 + next(3) as usize;
            let mut edges: Vec<Vec<usize>> = Vec::new();
            for _ in 0..2 + next(3) {
                let size = 1 + next(3) as usize;
                let mut e: Vec<usize> = (0..size).map(|_| next(n as u64) as usize).collect();
                e.sort_unstable();
                e.dedup();
                edges.push(e);
            }
            let Ok(c) = Clutter::new(n, &edges) else { continue };
            if !is_ideal(&c).unwrap() {
                continue;
            }
            for v in c.ground_vertices() {
                assert!(is_ideal(&c.delete(v).unwrap()).unwrap());
                assert!(is_ideal(&c.contract(v).unwrap()).unwrap());
            }
            checked += 1;
        }
        assert!(checked > 3);
    }

    #[test]
    fn mni_exact_on_known_instances() {
        assert!(is_mni_exact(&build_j(2)).unwrap());
        assert!(is_mni_exact(&build_j(3)).unwrap());
        let fano = Clutter::from_matrix(&atlas::fano_pair().0).unwrap();
        assert!(is_mni_exact(&fano).unwrap());
        assert!(is_mni_exact(&triangle_clutter()).unwrap());
        // A non-example: the clutter of single vertices is ideal.
        let i3 = Clutter::from_matrix(&RationalMatrix::identity(3)).unwrap();
        assert!(!is_mni_exact(&i3).unwrap());
    }

    #[test]
    fn square_test_agrees_with_exact_test() {
        // Fano and the (5,3,2) matrix through the certified square test.
        let g = atlas::moebius_ladder(5);
        let cert = certify(&g, 1).unwrap();
        let square = mni_test_square(&g, &cert).unwrap();
        let exact =
            is_mni_exact(&Clutter::from_matrix(&g.to_matrix()).unwrap()).unwrap();
        assert_eq!(square, exact);

        let heawood = atlas::heawood();
        let hcert = certify(&heawood, 2).unwrap();
        let square = mni_test_square(&heawood, &hcert).unwrap();
        let exact =
            is_mni_exact(&Clutter::from_matrix(&heawood.to_matrix()).unwrap()).unwrap();
        assert_eq!(square, exact);

        // J_3 is not square-regular, so the methodology entry point is the
        // unique-fractional-vertex test.
        let j3 = build_j(3);
        assert_eq!(
            has_unique_fractional_vertex(&j3.incidence_matrix()).unwrap(),
            is_mni_exact(&j3).unwrap()
        );
    }
}
