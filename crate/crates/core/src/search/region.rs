//! The untiled part of the target: simple polygons with counterclockwise
//! boundary, split into components as tiles are removed.

use std::cmp::Ordering;

use super::geom::{orient, Point};
use crate::exactnum::{QRoot3, Vec2};

/// A simple polygon, counterclockwise, without collinear vertices, listed
/// from its lexicographically least vertex. Equal regions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Region {
    boundary: Vec<Point>,
}

/// Interior angle data at one boundary vertex.
#[derive(Clone, Debug)]
pub struct CornerView {
    pub index: usize,
    /// The outgoing edge.
    pub out: Vec2,
    /// `(cos θ, sin θ)` of the interior angle θ, measured counterclockwise
    /// from the outgoing edge to the reversed incoming edge. When these are
    /// not in ℚ(√3) the vector is left unnormalized; it still orders
    /// correctly but matches no tile angle.
    pub rel: Vec2,
}

impl CornerView {
    pub fn is_convex(&self) -> bool {
        self.rel.y.is_positive()
    }
}

/// `(cos, sin)` of the counterclockwise angle from `u` to `w`, scaled by
/// `|u|·|w|`.
pub fn relative(u: &Vec2, w: &Vec2) -> Vec2 {
    Vec2::new(u.dot(w), u.cross(w))
}

impl Region {
    /// Normalizes a counterclockwise loop. Panics on a loop with no area,
    /// which the subtraction never produces.
    pub fn new(mut pts: Vec<Point>) -> Region {
        loop {
            let n = pts.len();
            let drop = (0..n).find(|&i| orient(&pts[(i + n - 1) % n], &pts[i], &pts[(i + 1) % n]).is_zero());
            match drop {
                Some(i) => {
                    pts.remove(i);
                }
                None => break,
            }
        }
        assert!(pts.len() >= 3, "degenerate loop");
        let start = (0..pts.len()).min_by(|&i, &j| pts[i].cmp(&pts[j])).expect("nonempty");
        pts.rotate_left(start);
        let r = Region { boundary: pts };
        assert!(r.area2().is_positive(), "loop is not counterclockwise: {:?}", r.boundary);
        r
    }

    pub fn boundary(&self) -> &[Point] {
        &self.boundary
    }

    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.boundary.len();
        (0..n).map(move |i| (&self.boundary[i], &self.boundary[(i + 1) % n]))
    }

    /// Twice the area.
    pub fn area2(&self) -> QRoot3 {
        let o = &self.boundary[0];
        self.boundary.windows(2).skip(1).fold(QRoot3::zero(), |acc, w| &acc + &orient(o, &w[0], &w[1]))
    }

    pub fn corner(&self, i: usize) -> CornerView {
        let n = self.boundary.len();
        let v = &self.boundary[i];
        let out = &self.boundary[(i + 1) % n] - v;
        let back = &self.boundary[(i + n - 1) % n] - v;
        let raw = relative(&out, &back);
        let rel = match raw.norm2().sqrt_exact().and_then(|l| l.inv()) {
            Some(k) => raw.scale(&k),
            None => raw,
        };
        CornerView { index: i, rel, out }
    }

    pub fn corners(&self) -> Vec<CornerView> {
        (0..self.boundary.len()).map(|i| self.corner(i)).collect()
    }

    /// The convex corner with the smallest angle; ties go to the
    /// lexicographically smaller vertex.
    pub fn fill_corner(&self) -> CornerView {
        self.corners()
            .into_iter()
            .filter(CornerView::is_convex)
            .min_by(|a, b| a.rel.cmp_angle(&b.rel).then_with(|| self.boundary[a.index].cmp(&self.boundary[b.index])))
            .expect("a simple polygon has a convex corner")
    }

    /// The components left after removing the CCW triangle `t`, which must
    /// lie inside the region. Components are ordered by their least vertex.
    pub fn subtract(&self, t: &[Point; 3]) -> Vec<Region> {
        let own: Vec<(Point, Point)> = self.edges().map(|(a, b)| (a.clone(), b.clone())).collect();
        let tri: Vec<(Point, Point)> = (0..3).map(|i| (t[(i + 1) % 3].clone(), t[i].clone())).collect();
        let mut edges = Vec::new();
        for (s, e) in &own {
            split_into(s, e, t.iter(), &mut edges);
        }
        let mut extra = Vec::new();
        for (s, e) in &tri {
            split_into(s, e, self.boundary.iter(), &mut extra);
        }
        // Shared pieces appear in both lists with opposite directions.
        for (s, e) in extra {
            match edges.iter().position(|(a, b)| *a == e && *b == s) {
                Some(k) => {
                    edges.swap_remove(k);
                }
                None => edges.push((s, e)),
            }
        }
        let mut out: Vec<Region> = trace_loops(edges).into_iter().map(Region::new).collect();
        out.sort();
        out
    }
}

/// Pushes `s → e` cut at every point of `cuts` strictly inside it.
fn split_into<'a>(s: &Point, e: &Point, cuts: impl Iterator<Item = &'a Point>, out: &mut Vec<(Point, Point)>) {
    let d = e - s;
    let len2 = d.norm2();
    let mut inner: Vec<(QRoot3, Point)> = cuts
        .filter(|p| orient(s, e, p).is_zero())
        .filter_map(|p| {
            let t = (p - s).dot(&d);
            (t.is_positive() && t < len2).then(|| (t, p.clone()))
        })
        .collect();
    inner.sort_by(|a, b| a.0.cmp(&b.0));
    inner.dedup_by(|a, b| a.0 == b.0);
    let mut prev = s.clone();
    for (_, p) in inner {
        out.push((prev, p.clone()));
        prev = p;
    }
    out.push((prev, e.clone()));
}

/// Splits directed edges into closed loops, turning as sharply left as
/// possible at shared vertices so that pinched components separate.
fn trace_loops(edges: Vec<(Point, Point)>) -> Vec<Vec<Point>> {
    let mut used = vec![false; edges.len()];
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by(|&i, &j| edges[i].cmp(&edges[j]));
    let mut loops = Vec::new();
    for &start in &order {
        if used[start] {
            continue;
        }
        let mut pts = Vec::new();
        let mut cur = start;
        loop {
            used[cur] = true;
            let (p, q) = &edges[cur];
            pts.push(p.clone());
            let back = p - q;
            let next = (0..edges.len())
                .filter(|&k| edges[k].0 == *q && (!used[k] || k == start))
                .min_by(|&i, &j| {
                    let ri = relative(&(&edges[i].1 - q), &back);
                    let rj = relative(&(&edges[j].1 - q), &back);
                    ri.cmp_angle(&rj).then(Ordering::Equal)
                })
                .unwrap_or_else(|| panic!("open boundary chain at {q:?}"));
            if next == start {
                break;
            }
            cur = next;
        }
        loops.push(pts);
    }
    loops
}
