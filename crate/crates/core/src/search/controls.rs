//! Hand-built tilings with known N, used as oracles for the search and the
//! checker.

use super::certificate::Certificate;
use super::geom::{Placement, Point};
use crate::constraints::TriangleSpec;
use crate::exactnum::{rat, QRoot3};
use crate::tilealgebra::{tile_from_sides, TileShape};

fn is_rotation(seq: &[QRoot3; 3], pat: &[QRoot3; 3]) -> Option<usize> {
    (0..3).find(|&k| (0..3).all(|i| seq[(i + k) % 3] == pat[i]))
}

/// Orders three counterclockwise points as a placement of `tile`.
pub fn placement_from_points(tile: &TileShape, pts: [Point; 3]) -> Option<Placement> {
    let seq = [0, 1, 2].map(|i| (&pts[(i + 1) % 3] - &pts[i]).norm2());
    let (a2, b2, c2) = (tile.a.square(), tile.b.square(), tile.c.square());
    let direct = [c2.clone(), a2.clone(), b2.clone()];
    let mirror = [c2, b2, a2];
    for (pat, mirrored) in [(&direct, false), (&mirror, true)] {
        if let Some(k) = is_rotation(&seq, pat) {
            let v = [0, 1, 2].map(|i| pts[(i + k) % 3].clone());
            return Some(Placement { v, mirrored });
        }
    }
    None
}

fn mid(p: &Point, q: &Point) -> Point {
    (p + q).scale(&QRoot3::from_rational(rat(1, 2)))
}

fn centroid(t: &[Point; 3]) -> Point {
    (&(&t[0] + &t[1]) + &t[2]).scale(&QRoot3::from_rational(rat(1, 3)))
}

/// The four corner-and-middle pieces of a triangle, each counterclockwise.
fn medial(t: &[Point; 3]) -> [[Point; 3]; 4] {
    let [a, b, c] = t;
    let (mab, mbc, mca) = (mid(a, b), mid(b, c), mid(c, a));
    [
        [a.clone(), mab.clone(), mca.clone()],
        [mab.clone(), b.clone(), mbc.clone()],
        [mca.clone(), mbc.clone(), c.clone()],
        [mbc, mca, mab],
    ]
}

/// Cuts an equilateral triangle into three copies from its center.
fn fan(t: &[Point; 3]) -> [[Point; 3]; 3] {
    let o = centroid(t);
    [0, 1, 2].map(|i| [t[i].clone(), t[(i + 1) % 3].clone(), o.clone()])
}

fn build(tile: TileShape, target: &str, pieces: Vec<[Point; 3]>) -> Certificate {
    let spec = TriangleSpec::parse(target, &tile).expect("control target");
    let ps = pieces.into_iter().map(|p| placement_from_points(&tile, p).expect("control piece is a tile")).collect();
    Certificate::new(tile, spec, true, ps)
}

pub fn obtuse_isosceles() -> TileShape {
    tile_from_sides(1.into(), 1.into(), QRoot3::sqrt3()).expect("valid tile")
}

/// Three copies of the (1, 1, √3) tile in the equilateral triangle of side √3.
pub fn equilateral_3() -> Certificate {
    let tile = obtuse_isosceles();
    let t = TriangleSpec::parse("equilateral:sqrt3", &tile).unwrap().vertices(&tile);
    build(tile, "equilateral:sqrt3", fan(&t).to_vec())
}

/// Four copies of (3, 5, 7) in (6, 10, 14), by midpoint subdivision.
pub fn quadratic_357() -> Certificate {
    let tile = TileShape::from_ints(3, 5, 7).unwrap();
    let t = TriangleSpec::parse("triangle:6,10,14", &tile).unwrap().vertices(&tile);
    build(tile, "triangle:6,10,14", medial(&t).to_vec())
}

/// Twelve copies of (1, 1, √3) in the equilateral triangle of side 2√3.
pub fn equilateral_12() -> Certificate {
    let tile = obtuse_isosceles();
    let target = "equilateral:2*sqrt3";
    let t = TriangleSpec::parse(target, &tile).unwrap().vertices(&tile);
    let pieces = medial(&t).iter().flat_map(fan).collect();
    build(tile, target, pieces)
}
