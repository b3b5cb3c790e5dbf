//! Necessary conditions checked at every node.

use std::collections::{HashMap, HashSet};

use num_traits::Signed;

use super::geom::{length, orient, place, unit, segment_meets_open_triangle, Placement, Point, TileCorner};
use super::region::{CornerView, Region};
use crate::constraints::{row_solutions, TriangleSpec};
use crate::exactnum::{int, ExactAngle, QRoot3, Vec2};
use crate::tilealgebra::TileShape;

/// Tile angle data and the target, shared by all workers.
#[derive(Clone, Debug)]
pub struct Rules {
    pub tile: TileShape,
    pub allow_mirror: bool,
    /// Directions `(cos θ, sin θ)` of every angle θ in (0, 2π) that is a
    /// nonnegative integer combination of α, β, γ.
    angles: HashSet<Vec2>,
    tile_area2: QRoot3,
    /// With the opt-in pruning on: for each target side, the edge counts it
    /// may still be built from.
    side_rows: Option<Vec<([Point; 2], Vec<[u64; 3]>)>>,
}

fn dir(a: &ExactAngle) -> Vec2 {
    a.dir.clone()
}

impl Rules {
    pub fn new(tile: &TileShape, target: &TriangleSpec, allow_mirror: bool, paper_pruning: bool) -> Rules {
        let mut angles = HashSet::new();
        for k in 0..3u32 {
            for i in 0.. {
                let base = tile.combo(i, 0, k);
                if base.turns > 0 {
                    break;
                }
                for j in 0.. {
                    let a = tile.combo(i, j, k);
                    if a.turns > 0 {
                        break;
                    }
                    if !a.is_zero() {
                        angles.insert(dir(&a));
                    }
                }
            }
        }
        let side_rows = (paper_pruning && target.lemma10_applies(tile)).then(|| {
            let [a, b, c] = target.vertices(tile);
            // Sides X = BC, Y = CA, Z = AB.
            [(b.clone(), c.clone(), &target.sides[0]), (c, a.clone(), &target.sides[1]), (a, b, &target.sides[2])]
                .into_iter()
                .map(|(p, q, len)| ([p, q], row_solutions(tile, len).into_iter().filter(|r| r[2] > 0).collect()))
                .collect()
        });
        Rules { tile: tile.clone(), allow_mirror, angles, tile_area2: tile.area.scale(&int(2)), side_rows }
    }

    pub fn paper_pruning_active(&self) -> bool {
        self.side_rows.is_some()
    }

    pub fn angle_ok(&self, rel: &Vec2) -> bool {
        self.angles.contains(rel)
    }

    /// Candidate copies of the tile at the region's fill corner, in the
    /// canonical order α, β, γ with the direct copy first. Copies that fail
    /// the angle test or cross the boundary are dropped.
    pub fn candidates(&self, region: &Region) -> Vec<Placement> {
        let c = region.fill_corner();
        let at = &region.boundary()[c.index];
        let mut out: Vec<Placement> = Vec::new();
        let mut u = None;
        for corner in [TileCorner::Alpha, TileCorner::Beta, TileCorner::Gamma] {
            let ang = match corner {
                TileCorner::Alpha => self.tile.alpha(),
                TileCorner::Beta => self.tile.beta(),
                TileCorner::Gamma => self.tile.gamma(),
            };
            if !self.fits(&c, &ang) {
                continue;
            }
            for mirrored in [false, true] {
                if mirrored && !self.allow_mirror {
                    continue;
                }
                let u = u.get_or_insert_with(|| unit(&c.out));
                let pl = place(&self.tile, at, u, corner, mirrored);
                let mut key = pl.v.to_vec();
                key.sort();
                if out.iter().any(|q| {
                    let mut k2 = q.v.to_vec();
                    k2.sort();
                    k2 == key
                }) {
                    continue;
                }
                if region.edges().any(|(s, e)| segment_meets_open_triangle(s, e, &pl.v)) {
                    continue;
                }
                out.push(pl);
            }
        }
        out
    }

    /// The tile angle fits in the corner and leaves an achievable angle.
    fn fits(&self, c: &CornerView, ang: &ExactAngle) -> bool {
        let d = dir(ang);
        match d.cmp_angle(&c.rel) {
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => true,
            std::cmp::Ordering::Less => self.angle_ok(&c.rel.rotate(&d.x, &-&d.y)),
        }
    }
}

/// Per-solver memo for length representability.
#[derive(Default)]
pub struct LengthMemo {
    free: HashMap<QRoot3, bool>,
}

impl LengthMemo {
    fn representable(&mut self, tile: &TileShape, len: &QRoot3) -> bool {
        if let Some(&b) = self.free.get(len) {
            return b;
        }
        let ok = !row_solutions(tile, len).is_empty();
        self.free.insert(len.clone(), ok);
        ok
    }
}

fn bounded_ok(tile: &TileShape, len: &QRoot3, rows: &[[u64; 3]]) -> bool {
    row_solutions(tile, len).iter().any(|s| rows.iter().any(|r| s[0] <= r[0] && s[1] <= r[1] && s[2] <= r[2]))
}

impl Rules {
    /// Area, corner-angle and side-length conditions on a region.
    pub fn feasible(&self, region: &Region, memo: &mut LengthMemo) -> bool {
        let q = &region.area2() / &self.tile_area2;
        match q.as_rational() {
            Some(r) if r.is_integer() && r.is_positive() => {}
            _ => return false,
        }
        let corners = region.corners();
        for c in &corners {
            let ok = if c.is_convex() { self.angle_ok(&c.rel) } else { self.angle_ok(&c.rel) || self.angle_ok(&-&c.rel) };
            if !ok {
                return false;
            }
        }
        let n = corners.len();
        let pts = region.boundary();
        for i in 0..n {
            let j = (i + 1) % n;
            let edge = &pts[j] - &pts[i];
            if corners[i].is_convex() && corners[j].is_convex() {
                let len = length(&edge);
                if !memo.representable(&self.tile, &len) {
                    return false;
                }
            }
            if let Some(sides) = &self.side_rows {
                for ([p, q], rows) in sides {
                    if orient(p, q, &pts[i]).is_zero() && orient(p, q, &pts[j]).is_zero() && !bounded_ok(&self.tile, &length(&edge), rows) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
