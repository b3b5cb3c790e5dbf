//! Edge relations read off a tiling: along every maximal segment made of
//! tile edges, the edges on its two sides must have the same total length.

use std::collections::BTreeMap;

use super::certificate::Certificate;
use super::geom::unit;
use crate::exactnum::{QRoot3, Vec2};
use crate::tilealgebra::{EdgeRelation, RelationKind};

/// Builds the relation `Σ left = Σ right` from per-side counts of a-, b-
/// and c-edges. The variable that appears alone on one side is written on
/// the left of the relation, preferring b, then a, then c.
pub fn relation_from_counts(left: [u64; 3], right: [u64; 3]) -> Option<EdgeRelation> {
    let d: [i64; 3] = [0, 1, 2].map(|i| left[i] as i64 - right[i] as i64);
    if d.iter().all(|&x| x == 0) || d.iter().all(|&x| x >= 0) || d.iter().all(|&x| x <= 0) {
        return None;
    }
    let alone = |i: usize| d[i] != 0 && d.iter().enumerate().all(|(k, &x)| k == i || x == 0 || x.signum() != d[i].signum());
    let m = d.map(|x| x.unsigned_abs());
    let [a, b, c] = m;
    if alone(1) {
        EdgeRelation::new(RelationKind::BSide, b, a, c)
    } else if alone(0) {
        EdgeRelation::new(RelationKind::ASide, a, b, c)
    } else if alone(2) {
        EdgeRelation::new(RelationKind::CSide, c, a, b)
    } else {
        None
    }
}

struct Piece {
    lo: QRoot3,
    hi: QRoot3,
    counts: [[u64; 2]; 3],
}

/// Relations realized by a valid tiling, sorted and deduplicated.
pub fn extract_edge_relations(cert: &Certificate) -> Vec<EdgeRelation> {
    let t = &cert.tile;
    let (a2, b2) = (t.a.square(), t.b.square());
    // (direction, offset) → intervals along the line with side and kind.
    let mut lines: BTreeMap<(Vec2, QRoot3), Vec<(QRoot3, QRoot3, usize, usize)>> = BTreeMap::new();
    for p in &cert.placements {
        for (s, e) in p.edges() {
            let d = e - s;
            let l2 = d.norm2();
            let kind = if l2 == a2 { 0 } else if l2 == b2 { 1 } else { 2 };
            let mut u = unit(&d);
            // The tile lies left of s→e; flip to a canonical direction.
            let side = if u.y.is_negative() || (u.y.is_zero() && u.x.is_negative()) {
                u = -&u;
                1
            } else {
                0
            };
            let off = u.cross(s);
            let (t0, t1) = (u.dot(s), u.dot(e));
            let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
            lines.entry((u, off)).or_default().push((lo, hi, side, kind));
        }
    }
    let mut out = Vec::new();
    for (_, mut iv) in lines {
        iv.sort_by(|x, y| x.0.cmp(&y.0));
        let mut pieces: Vec<Piece> = Vec::new();
        for (lo, hi, side, kind) in iv {
            match pieces.last_mut() {
                Some(pc) if lo <= pc.hi => {
                    if hi > pc.hi {
                        pc.hi = hi;
                    }
                    pc.counts[kind][side] += 1;
                }
                _ => {
                    let mut counts = [[0; 2]; 3];
                    counts[kind][side] = 1;
                    pieces.push(Piece { lo, hi, counts });
                }
            }
        }
        for pc in pieces {
            debug_assert!(pc.lo < pc.hi);
            let left = pc.counts.map(|c| c[0]);
            let right = pc.counts.map(|c| c[1]);
            if left.iter().all(|&x| x == 0) || right.iter().all(|&x| x == 0) || left == right {
                continue;
            }
            if let Some(r) = relation_from_counts(left, right) {
                out.push(r);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_to_relation() {
        // 5 b-edges against 3 a-edges and 2 c-edges.
        let r = relation_from_counts([0, 5, 0], [3, 0, 2]).unwrap();
        assert_eq!((r.kind, r.j, r.u, r.v), (RelationKind::BSide, 5, 3, 2));
        assert_eq!(relation_from_counts([3, 0, 2], [0, 5, 0]), Some(r));
        // Common edges cancel.
        assert_eq!(relation_from_counts([1, 6, 1], [4, 1, 3]), Some(r));
        let r = relation_from_counts([2, 0, 0], [0, 1, 0]).unwrap();
        assert_eq!((r.kind, r.j, r.u, r.v), (RelationKind::BSide, 1, 2, 0));
        let r = relation_from_counts([0, 0, 2], [1, 3, 0]).unwrap();
        assert_eq!((r.kind, r.j, r.u, r.v), (RelationKind::CSide, 2, 1, 3));
        assert_eq!(relation_from_counts([1, 1, 1], [1, 1, 1]), None);
        assert_eq!(relation_from_counts([2, 1, 0], [1, 0, 0]), None);
    }
}
