//! Small projective planes built from cyclic difference sets, their
//! triangles, blocking sets, and the triangle-minor checks used for the
//! geometry of minimally nonideal cores.

use super::{Clutter, ClutterError};

/// A projective plane of order q as a clutter of lines over q^2+q+1 points.
#[derive(Debug, Clone)]
pub struct ProjectivePlane {
    pub q: usize,
    pub points: usize,
    pub lines: Clutter,
}

/// Builds PG(2,2) or PG(2,3) from the cyclic difference sets {1,2,4} mod 7
/// and {0,1,3,9} mod 13, and validates the plane axioms.
pub fn build_plane(q: usize) -> Result<ProjectivePlane, ClutterError> {
    let diff: &[usize] = match q {
        2 => &[1, 2, 4],
        3 => &[0, 1, 3, 9],
        _ => return Err(ClutterError::UnsupportedOrder(q)),
    };
    let v = q * q + q + 1;
    let lines: Vec<Vec<usize>> =
        (0..v).map(|i| diff.iter().map(|&d| (d + i) % v).collect()).collect();
    let clutter = Clutter::new(v, &lines)?;
    let plane = ProjectivePlane { q, points: v, lines: clutter };
    assert!(plane.axioms_hold(), "difference set failed the plane axioms");
    Ok(plane)
}

impl ProjectivePlane {
    pub fn line_masks(&self) -> &[u32] {
        self.lines.edge_masks()
    }

    fn axioms_hold(&self) -> bool {
        let masks = self.line_masks();
        if masks.len() != self.points {
            return false;
        }
        // Every line has q+1 points; two lines meet in exactly one point.
        for (i, &a) in masks.iter().enumerate() {
            if a.count_ones() as usize != self.q + 1 {
                return false;
            }
            for &b in &masks[i + 1..] {
                if (a & b).count_ones() != 1 {
                    return false;
                }
            }
        }
        // Two points lie on exactly one common line.
        for p in 0..self.points {
            for r in p + 1..self.points {
                let m = (1u32 << p) | (1 << r);
                if masks.iter().filter(|&&l| l & m == m).count() != 1 {
                    return false;
                }
            }
        }
        true
    }
}

/// A triangle: three lines with no common point. Corner `corners[i]` is the
/// meet of the two lines other than `lines[i]`, and `sides[i]` holds the
/// non-corner points of `lines[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub lines: [usize; 3],
    pub corners: [usize; 3],
    pub sides: [u32; 3],
}

impl Triangle {
    pub fn point_set(&self) -> u32 {
        self.sides[0]
            | self.sides[1]
            | self.sides[2]
            | self.corners.iter().fold(0u32, |m, &c| m | 1 << c)
    }
}

/// All unordered non-copunctual line triples with their corner and side
/// decomposition.
pub fn triangles(p: &ProjectivePlane) -> Vec<Triangle> {
    let masks = p.line_masks();
    let mut out = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            for k in j + 1..masks.len() {
                if masks[i] & masks[j] & masks[k] != 0 {
                    continue;
                }
                let corner = |a: u32, b: u32| (a & b).trailing_zeros() as usize;
                let corners = [corner(masks[j], masks[k]), corner(masks[i], masks[k]), corner(masks[i], masks[j])];
                let cmask: u32 = corners.iter().fold(0, |m, &c| m | 1 << c);
                let sides = [masks[i] & !cmask, masks[j] & !cmask, masks[k] & !cmask];
                out.push(Triangle { lines: [i, j, k], corners, sides });
            }
        }
    }
    out
}

/// The 0-corner of a triangle: the union of its three sides.
pub fn zero_corner(t: &Triangle) -> u32 {
    t.sides[0] | t.sides[1] | t.sides[2]
}

/// All blocking sets of the plane: minimal point sets meeting every line
/// and containing none, by exhaustive search.
pub fn blocking_sets(p: &ProjectivePlane) -> Result<Vec<u32>, ClutterError> {
    if p.q > 3 {
        return Err(ClutterError::UnsupportedOrder(p.q));
    }
    let masks = p.line_masks();
    let v = p.points;
    let mut out = Vec::new();
    'subsets: for s in 0u32..1 << v {
        for &l in masks {
            if l & s == 0 || l & s == l {
                continue 'subsets;
            }
        }
        // Minimal among sets meeting every line and containing none: any
        // proper subset that still meets every line would witness
        // non-minimality (it cannot contain a line either).
        let mut m = s;
        while m != 0 {
            let x = m.trailing_zeros();
            m &= m - 1;
            let sv = s & !(1 << x);
            if masks.iter().all(|&l| l & sv != 0) {
                continue 'subsets;
            }
        }
        out.push(s);
    }
    Ok(out)
}

/// Classification of a subset of a triangle by which corners it holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CornerClass {
    /// One of the triangle's three lines.
    Line,
    /// The union of the three sides, no corners.
    ZeroCorner,
    /// One corner plus the two opposite sides plus a non-empty part of the
    /// corner's own side; `base` is the held corner.
    OneCorner { base: usize },
    /// All three corners plus proper subsets of the sides.
    ThreeCorner,
    /// None of the above.
    Invalid,
}

/// Classifies `r` (a subset of the triangle's points) against the possible
/// shapes of a hyperedge contained in a triangle.
pub fn corner_classify(t: &Triangle, r: u32) -> Result<CornerClass, ClutterError> {
    let pts = t.point_set();
    if r & !pts != 0 {
        return Err(ClutterError::NotInGround((r & !pts).trailing_zeros() as usize));
    }
    let cmask = |i: usize| 1u32 << t.corners[i];
    let line = |i: usize| t.sides[i] | cmask((i + 1) % 3) | cmask((i + 2) % 3);
    for i in 0..3 {
        if r == line(i) {
            return Ok(CornerClass::Line);
        }
    }
    let held: Vec<usize> = (0..3).filter(|&i| r & cmask(i) != 0).collect();
    match held.len() {
        0 => {
            if r == zero_corner(t) {
                Ok(CornerClass::ZeroCorner)
            } else {
                Ok(CornerClass::Invalid)
            }
        }
        1 => {
            let i = held[0];
            let j = (i + 1) % 3;
            let k = (i + 2) % 3;
            let own = r & t.sides[i];
            let rest = cmask(i) | (r & t.sides[i]) | t.sides[j] | t.sides[k];
            if own != 0 && r & t.sides[j] == t.sides[j] && r & t.sides[k] == t.sides[k] && r == rest
            {
                Ok(CornerClass::OneCorner { base: t.corners[i] })
            } else {
                Ok(CornerClass::Invalid)
            }
        }
        3 => {
            let proper = (0..3).all(|i| r & t.sides[i] != t.sides[i]);
            let shape = cmask(0) | cmask(1) | cmask(2) | (r & (t.sides[0] | t.sides[1] | t.sides[2]));
            if proper && r == shape {
                Ok(CornerClass::ThreeCorner)
            } else {
                Ok(CornerClass::Invalid)
            }
        }
        _ => Ok(CornerClass::Invalid),
    }
}

/// A copunctual-triple-plus-line configuration in PG(2,3) used by the
/// Fano-minor check: three lines through a common point x, a fourth line
/// avoiding x, and one extra point a_i chosen on each of the three lines.
#[derive(Debug, Clone, Copy)]
pub struct FanoMinorConfig {
    pub through: [usize; 3],
    pub cross: usize,
    pub extra_choice: [usize; 3],
}

/// Builds the clutter of PG(2,3) lines plus all triangle 0-corners, applies
/// the deletion/contraction recipe of the given configuration, and checks
/// the minor against the Fano clutter.
pub fn verify_fano_minor_with(cfg: &FanoMinorConfig, include_corners: bool) -> bool {
    let p = build_plane(3).expect("plane exists");
    let masks = p.line_masks().to_vec();
    let mut edges: Vec<Vec<usize>> = p.lines.edge_sets();
    if include_corners {
        for t in triangles(&p) {
            edges.push(mask_vec(zero_corner(&t)));
        }
    }
    let c = match Clutter::new(p.points, &edges) {
        Ok(c) => c,
        Err(_) => return false,
    };

    let l: [u32; 3] = [masks[cfg.through[0]], masks[cfg.through[1]], masks[cfg.through[2]]];
    let l4 = masks[cfg.cross];
    let x_mask = l[0] & l[1] & l[2];
    if x_mask.count_ones() != 1 || l4 & x_mask != 0 {
        return false;
    }
    let union = l[0] | l[1] | l[2] | l4;
    let mut keep = x_mask;
    for i in 0..3 {
        let yi = l[i] & l4;
        keep |= yi;
        // a_i: a point of l_i other than x and y_i, selected by index.
        let mut others = mask_vec(l[i] & !x_mask & !yi);
        others.sort_unstable();
        let Some(&ai) = others.get(cfg.extra_choice[i]) else { return false };
        keep |= 1 << ai;
    }
    let deletes = mask_vec(!union & full(p.points));
    let contracts = mask_vec(union & !keep);
    let Ok(minor) = c.minor(&deletes, &contracts) else { return false };
    let fano = Clutter::from_matrix(&crate::atlas::fano_pair().0).expect("fano clutter");
    super::are_isomorphic(&minor, &fano)
}

/// The published recipe applied to the default configuration.
///
/// Caution: this check is false, and exhaustive search shows it is false for
/// every configuration and extra-point choice. In an order-3 plane the
/// configuration's point union contains two further lines through the
/// leftover point of the crossing line; they survive the deletion and
/// contract onto proper subsets of {a_1, a_2, a_3}, which destroys
/// minimality of the seven intended sets. (For orders >= 6 no such line
/// fits inside the union and the recipe does produce the Fano plane.) The
/// sound computational content of the underlying claim is
/// [`ternary_augmented_has_mni_minor`].
pub fn verify_fano_minor_in_augmented_ternary() -> bool {
    let cfg = fano_minor_default_config();
    verify_fano_minor_with(&cfg, true)
}

/// The seven designated images of the recipe (the four configuration lines
/// and the three 0-corners of its triangles, restricted to the kept points)
/// do form a Fano plane; this is the structure the recipe aims at, before
/// the surviving extra lines enter the minor.
pub fn verify_designated_sets_form_fano(cfg: &FanoMinorConfig) -> bool {
    let p = build_plane(3).expect("plane exists");
    let masks = p.line_masks();
    let l: [u32; 3] = [masks[cfg.through[0]], masks[cfg.through[1]], masks[cfg.through[2]]];
    let l4 = masks[cfg.cross];
    let x_mask = l[0] & l[1] & l[2];
    if x_mask.count_ones() != 1 || l4 & x_mask != 0 {
        return false;
    }
    let mut keep = x_mask;
    let mut a = [0u32; 3];
    for i in 0..3 {
        let yi = l[i] & l4;
        keep |= yi;
        let mut others = mask_vec(l[i] & !x_mask & !yi);
        others.sort_unstable();
        let Some(&ai) = others.get(cfg.extra_choice[i]) else { return false };
        a[i] = 1 << ai;
        keep |= a[i];
    }
    // Restrict the four lines and the three triangle 0-corners to `keep`.
    let mut images: Vec<u32> = vec![l4 & keep];
    for i in 0..3 {
        images.push(l[i] & keep);
    }
    for i in 0..3 {
        // 0-corner of the triangle omitting line i: sides minus corners.
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let corners = x_mask | (l[j] & l4) | (l[k] & l4);
        let zc = (l[j] | l[k] | l4) & !corners;
        images.push(zc & keep);
    }
    let kept = mask_vec(keep);
    let pos = |v: usize| kept.iter().position(|&k| k == v).expect("kept point");
    let sets: Vec<Vec<usize>> = images
        .iter()
        .map(|&m| mask_vec(m).into_iter().map(pos).collect())
        .collect();
    let Ok(c) = Clutter::new(kept.len(), &sets) else { return false };
    let fano = Clutter::from_matrix(&crate::atlas::fano_incidence()).expect("fano clutter");
    super::are_isomorphic(&c, &fano)
}

/// Sound replacement for the broken recipe: the clutter of PG(2,3) lines
/// plus all triangle 0-corners has a proper minor isomorphic to the
/// degenerate projective plane J_2, so it cannot be minimally nonideal.
/// Returns the witness minor.
pub fn ternary_augmented_clutter() -> Clutter {
    let p = build_plane(3).expect("plane exists");
    let mut edges: Vec<Vec<usize>> = p.lines.edge_sets();
    for t in triangles(&p) {
        edges.push(mask_vec(zero_corner(&t)));
    }
    edges.sort();
    edges.dedup();
    Clutter::new(p.points, &edges).expect("lines and 0-corners form an antichain")
}

pub fn ternary_augmented_has_mni_minor() -> Option<Clutter> {
    let c = ternary_augmented_clutter();
    // Witness found by exhaustive search over 3-point minors.
    let minor = c.minor(&[0, 1, 5, 6, 7, 9], &[2, 3, 4, 8]).ok()?;
    if super::is_degenerate_plane(&minor) == Some(2) {
        Some(minor)
    } else {
        None
    }
}

pub fn fano_minor_default_config() -> FanoMinorConfig {
    let p = build_plane(3).expect("plane exists");
    let masks = p.line_masks();
    let through: Vec<usize> =
        (0..masks.len()).filter(|&i| masks[i] & 1 == 1).take(3).collect();
    let cross = (0..masks.len()).find(|&i| masks[i] & 1 == 0).expect("line avoiding 0");
    FanoMinorConfig {
        through: [through[0], through[1], through[2]],
        cross,
        extra_choice: [0, 0, 0],
    }
}

fn mask_vec(mut m: u32) -> Vec<usize> {
    let mut v = Vec::new();
    while m != 0 {
        v.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    v
}

fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_plane_matches_figure_matrix() {
        let p = build_plane(2).unwrap();
        // Row-permutation equivalent to the reference incidence matrix: the
        // sorted row masks agree.
        let fig = Clutter::from_matrix(&crate::atlas::fano_pair().0).unwrap();
        let mut a: Vec<u32> = p.lines.edge_masks().to_vec();
        let mut b: Vec<u32> = fig.edge_masks().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn plane_sizes() {
        let p2 = build_plane(2).unwrap();
        assert_eq!((p2.points, p2.lines.edge_count()), (7, 7));
        for &l in p2.line_masks() {
            assert_eq!(l.count_ones(), 3);
        }
        let p3 = build_plane(3).unwrap();
        assert_eq!((p3.points, p3.lines.edge_count()), (13, 13));
        for &l in p3.line_masks() {
            assert_eq!(l.count_ones(), 4);
        }
        assert!(build_plane(4).is_err());
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(triangles(&build_plane(2).unwrap()).len(), 28);
        assert_eq!(triangles(&build_plane(3).unwrap()).len(), 234);
    }

    #[test]
    fn zero_corner_sizes() {
        let p = build_plane(3).unwrap();
        for t in triangles(&p) {
            assert_eq!(zero_corner(&t).count_ones(), 6); // 3(q-1)
        }
        let p2 = build_plane(2).unwrap();
        for t in triangles(&p2) {
            assert_eq!(zero_corner(&t).count_ones(), 3);
        }
    }

    #[test]
    fn fano_has_no_blocking_sets() {
        assert!(blocking_sets(&build_plane(2).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn ternary_blocking_sets_are_zero_corners() {
        let p = build_plane(3).unwrap();
        let mut bs = blocking_sets(&p).unwrap();
        let mut zc: Vec<u32> = triangles(&p).iter().map(zero_corner).collect();
        bs.sort_unstable();
        zc.sort_unstable();
        zc.dedup();
        assert_eq!(bs.len(), 234);
        assert_eq!(bs, zc);
        for &s in &bs {
            assert_eq!(s.count_ones(), 6);
            for &l in p.line_masks() {
                assert_ne!(l & s, 0);
                assert_ne!(l & s, l);
            }
        }
    }

    #[test]
    fn corner_classification() {
        let p = build_plane(3).unwrap();
        let t = &triangles(&p)[0];
        assert_eq!(corner_classify(t, zero_corner(t)).unwrap(), CornerClass::ZeroCorner);
        let line0 = t.sides[0] | (1 << t.corners[1]) | (1 << t.corners[2]);
        assert_eq!(corner_classify(t, line0).unwrap(), CornerClass::Line);
        // x-based 1-corner: corner 0, both opposite sides, part of side 0.
        let x = t.corners[0];
        let part = 1u32 << t.sides[0].trailing_zeros();
        let r = (1 << x) | t.sides[1] | t.sides[2] | part;
        assert_eq!(corner_classify(t, r).unwrap(), CornerClass::OneCorner { base: x });
        // Vertices outside the triangle are rejected.
        let outside = (0..13).find(|&v| t.point_set() >> v & 1 == 0).unwrap();
        assert!(corner_classify(t, 1 << outside).is_err());
    }

    #[test]
    fn blocker_restricted_to_non_lines_equals_blocking_sets() {
        for q in [2usize, 3] {
            let p = build_plane(q).unwrap();
            let blocker = p.lines.blocker().unwrap();
            let mut non_lines: Vec<u32> = blocker
                .edge_masks()
                .iter()
                .copied()
                .filter(|m| !p.line_masks().contains(m))
                .collect();
            let mut bs = blocking_sets(&p).unwrap();
            non_lines.sort_unstable();
            bs.sort_unstable();
            assert_eq!(non_lines, bs);
        }
    }

    #[test]
    fn classification_is_exhaustive_on_ternary_transversals() {
        // Every minimal transversal of PG(2,3) contained in a triangle is a
        // line or a 0-corner; nothing classifies as Invalid.
        let p = build_plane(3).unwrap();
        let blocker = p.lines.blocker().unwrap();
        for t in triangles(&p) {
            let pts = t.point_set();
            for &tr in blocker.edge_masks() {
                if tr & !pts == 0 {
                    let class = corner_classify(&t, tr).unwrap();
                    assert_ne!(class, CornerClass::Invalid);
                }
            }
        }
    }

    #[test]
    fn fano_minor_recipe_fails_but_designated_sets_and_witness_hold() {
        // The published recipe does not reach the Fano clutter (see the
        // doc comment on verify_fano_minor_in_augmented_ternary).
        assert!(!verify_fano_minor_in_augmented_ternary());
        // Without the 0-corners it certainly does not either.
        assert!(!verify_fano_minor_with(&fano_minor_default_config(), false));
        // The seven designated sets do form a Fano plane,
        assert!(verify_designated_sets_form_fano(&fano_minor_default_config()));
        // and the augmented clutter has a proper J_2 minor, which is the
        // fact the recipe was after.
        let witness = ternary_augmented_has_mni_minor().expect("witness minor");
        assert!(!crate::polyhedra::is_ideal(&witness).unwrap());
        assert!(crate::polyhedra::is_mni_exact(&witness).unwrap());
    }

    #[test]
    fn fano_triangle_minor_mechanics() {
        // Deleting the points outside a Fano triangle and contracting its
        // non-corner points collapses to the dominating empty edge (the
        // 0-corner of a Fano triangle is itself a line). For PG(2,3) the
        // same recipe yields J_2.
        let p2 = build_plane(2).unwrap();
        let t = &triangles(&p2)[0];
        let outside = mask_vec(full(7) & !t.point_set());
        let minor2 = p2.lines.minor(&outside, &mask_vec(zero_corner(t))).unwrap();
        assert_eq!(minor2.edge_masks(), &[0]);

        let p3 = build_plane(3).unwrap();
        let t3 = &triangles(&p3)[0];
        let outside3 = mask_vec(full(13) & !t3.point_set());
        let minor3 = p3.lines.minor(&outside3, &mask_vec(zero_corner(t3))).unwrap();
        assert_eq!(super::super::is_degenerate_plane(&minor3), Some(2));
    }
}
