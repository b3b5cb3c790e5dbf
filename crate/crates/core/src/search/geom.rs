//! Exact plane predicates and tile placement.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::{QRoot3, Vec2};
use crate::tilealgebra::TileShape;

pub type Point = Vec2;

/// Which tile angle sits at the filled corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TileCorner {
    Alpha,
    Beta,
    Gamma,
}

/// A placed copy of the tile, vertices counterclockwise.
///
/// A direct copy lists its corners as (A, B, C), so the sides run c, a, b.
/// A mirrored copy lists (A, C, B) and its sides run b, a, c.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    pub v: [Point; 3],
    pub mirrored: bool,
}

#[derive(Serialize, Deserialize)]
struct PlacementRepr {
    v: [[String; 2]; 3],
    mirrored: bool,
}

impl Serialize for Placement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v = self.v.clone().map(|p| [p.x.to_string(), p.y.to_string()]);
        PlacementRepr { v, mirrored: self.mirrored }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Placement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = PlacementRepr::deserialize(d)?;
        let num = |s: &str| QRoot3::parse(s).ok_or_else(|| serde::de::Error::custom(format!("bad coordinate {s:?}")));
        let mut pts = Vec::with_capacity(3);
        for [x, y] in &r.v {
            pts.push(Vec2::new(num(x)?, num(y)?));
        }
        Ok(Placement { v: [pts[0].clone(), pts[1].clone(), pts[2].clone()], mirrored: r.mirrored })
    }
}

impl Placement {
    /// Twice the signed area.
    pub fn area2(&self) -> QRoot3 {
        orient(&self.v[0], &self.v[1], &self.v[2])
    }

    pub fn edges(&self) -> [(&Point, &Point); 3] {
        [(&self.v[0], &self.v[1]), (&self.v[1], &self.v[2]), (&self.v[2], &self.v[0])]
    }

    pub fn translate(&self, d: &Vec2) -> Placement {
        Placement { v: self.v.clone().map(|p| &p + d), mirrored: self.mirrored }
    }
}

/// `cross(b − a, c − a)`: positive when a, b, c turn left.
pub fn orient(a: &Point, b: &Point, c: &Point) -> QRoot3 {
    (b - a).cross(&(c - a))
}

/// Unit vector along `v`. Every direction that arises is a tile-angle
/// rotation of a side of the target, so the length stays in ℚ(√3).
pub fn unit(v: &Vec2) -> Vec2 {
    let len = v.norm2().sqrt_exact().unwrap_or_else(|| panic!("direction {v:?} has length outside Q(sqrt3)"));
    let inv = len.inv().expect("nonzero edge");
    v.scale(&inv)
}

pub fn length(v: &Vec2) -> QRoot3 {
    v.norm2().sqrt_exact().unwrap_or_else(|| panic!("edge {v:?} has length outside Q(sqrt3)"))
}

/// The copy of `tile` with the chosen corner at `at` and one of its two
/// sides there running along the unit vector `u`; the copy lies to the left
/// of `u`.
pub fn place(tile: &TileShape, at: &Point, u: &Vec2, corner: TileCorner, mirrored: bool) -> Placement {
    let ray = |len: &QRoot3, angle: Option<crate::exactnum::ExactAngle>| {
        let d = match angle {
            None => u.clone(),
            Some(t) => u.rotate(t.cos(), t.sin()),
        };
        at + &d.scale(len)
    };
    let (a, b, c) = (&tile.a, &tile.b, &tile.c);
    // Direct copies put c, a, b along u at A, B, C respectively; mirrored
    // copies put the other side there.
    let v = match (corner, mirrored) {
        (TileCorner::Alpha, false) => [at.clone(), ray(c, None), ray(b, Some(tile.alpha()))],
        (TileCorner::Beta, false) => [ray(c, Some(tile.beta())), at.clone(), ray(a, None)],
        (TileCorner::Gamma, false) => [ray(b, None), ray(a, Some(tile.gamma())), at.clone()],
        (TileCorner::Alpha, true) => [at.clone(), ray(b, None), ray(c, Some(tile.alpha()))],
        (TileCorner::Beta, true) => [ray(c, None), ray(a, Some(tile.beta())), at.clone()],
        (TileCorner::Gamma, true) => [ray(b, Some(tile.gamma())), at.clone(), ray(a, None)],
    };
    Placement { v, mirrored }
}

/// Whether the closed segment `p0 p1` meets the open triangle `t` (CCW).
pub fn segment_meets_open_triangle(p0: &Point, p1: &Point, t: &[Point; 3]) -> bool {
    // Clip the parameter interval [0, 1] against the three open half-planes.
    // Bounds coming from the half-planes are strict.
    let zero = QRoot3::zero();
    let one = QRoot3::one();
    let (mut lo, mut hi) = (zero.clone(), one);
    let mut strict = false;
    for i in 0..3 {
        let (a, b) = (&t[i], &t[(i + 1) % 3]);
        let f0 = orient(a, b, p0);
        let f1 = orient(a, b, p1);
        let (s0, s1) = (f0.sign(), f1.sign());
        if s0 <= 0 && s1 <= 0 {
            return false;
        }
        if s0 > 0 && s1 > 0 {
            continue;
        }
        let tc = &f0 / &(&f0 - &f1);
        strict = true;
        if s0 > 0 {
            if tc < hi {
                hi = tc;
            }
        } else if tc > lo {
            lo = tc;
        }
    }
    if strict {
        lo < hi
    } else {
        true
    }
}

/// Whether two CCW triangles share an interior point. Convex sets are
/// interior-disjoint exactly when some edge line weakly separates them.
pub fn triangles_overlap(s: &[Point; 3], t: &[Point; 3]) -> bool {
    let separated = |p: &[Point; 3], q: &[Point; 3]| {
        (0..3).any(|i| {
            let (a, b) = (&p[i], &p[(i + 1) % 3]);
            q.iter().all(|w| orient(a, b, w).sign() <= 0)
        })
    };
    !(separated(s, t) || separated(t, s))
}

/// Closed-triangle membership for a CCW triangle.
pub fn in_closed_triangle(p: &Point, t: &[Point; 3]) -> bool {
    (0..3).all(|i| orient(&t[i], &t[(i + 1) % 3], p).sign() >= 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn p(x: i64, y: i64) -> Point {
        Vec2::new(x.into(), y.into())
    }

    fn tri() -> [Point; 3] {
        [p(0, 0), p(4, 0), p(0, 4)]
    }

    #[test]
    fn clipping() {
        let t = tri();
        assert!(segment_meets_open_triangle(&p(1, 1), &p(10, 10), &t));
        assert!(segment_meets_open_triangle(&p(-1, 1), &p(5, 1), &t));
        // Along an edge, or touching a corner only.
        assert!(!segment_meets_open_triangle(&p(-1, 0), &p(5, 0), &t));
        assert!(!segment_meets_open_triangle(&p(4, 0), &p(8, -3), &t));
        assert!(!segment_meets_open_triangle(&p(2, 2), &p(0, 4), &t));
        assert!(!segment_meets_open_triangle(&p(3, 3), &p(5, 5), &t));
        // Cutting the corner at the origin.
        assert!(segment_meets_open_triangle(&p(-1, 2), &p(2, -1), &t));
        assert!(!segment_meets_open_triangle(&p(-1, 1), &p(1, -1), &t));
    }

    #[test]
    fn overlap() {
        let t = tri();
        assert!(!triangles_overlap(&t, &[p(4, 0), p(0, 4), p(4, 4)]));
        assert!(triangles_overlap(&t, &[p(1, 1), p(5, 1), p(1, 5)]));
        assert!(!triangles_overlap(&t, &[p(4, 0), p(8, 0), p(4, 4)]));
        assert!(triangles_overlap(&t, &t));
    }

    #[test]
    fn placements_are_congruent() {
        let tile = TileShape::from_ints(3, 5, 7).unwrap();
        let u = Vec2::new(QRoot3::from_int(0), QRoot3::from_int(-1));
        for corner in [TileCorner::Alpha, TileCorner::Beta, TileCorner::Gamma] {
            for mirrored in [false, true] {
                let pl = place(&tile, &p(2, 3), &u, corner, mirrored);
                assert!(pl.area2().is_positive(), "{corner:?} {mirrored}");
                let sides: Vec<QRoot3> = pl.edges().iter().map(|(a, b)| (*b - *a).norm2()).collect();
                let want: Vec<QRoot3> = if mirrored { vec![25.into(), 9.into(), 49.into()] } else { vec![49.into(), 9.into(), 25.into()] };
                assert_eq!(sides, want);
                assert_eq!(pl.area2(), tile.area.scale(&int(2)));
            }
        }
    }
}
