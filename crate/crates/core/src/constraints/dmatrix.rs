use serde::Serialize;

use super::TriangleSpec;
use crate::exactnum::rational::is_integer;
use crate::exactnum::{int, QRoot3};
use crate::tilealgebra::TileShape;

/// Rows `(p, d, e)`, `(g, m, f)`, `(h, ℓ, r)`: the counts of a-, b- and
/// c-edges along X = BC, Y = AC and Z = AB.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DMatrix {
    pub rows: [[u64; 3]; 3],
}

impl DMatrix {
    pub fn apply(&self, tile: &TileShape) -> [QRoot3; 3] {
        self.rows.map(|[i, j, k]| {
            let n = |k: u64| int(k as i64);
            &(&tile.a.scale(&n(i)) + &tile.b.scale(&n(j))) + &tile.c.scale(&n(k))
        })
    }

    /// True when one of `e`, `f`, `r` (the c-edge counts) vanishes.
    pub fn lemma10_violation(&self) -> bool {
        self.rows.iter().any(|row| row[2] == 0)
    }
}

/// All `(i, j, k) ≥ 0` with `i·a + j·b + k·c = len`, in lexicographic order.
pub fn row_solutions(tile: &TileShape, len: &QRoot3) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    let mut i = 0u64;
    loop {
        let rest = len - &tile.a.scale(&int(i as i64));
        if rest.is_negative() {
            break;
        }
        let mut j = 0u64;
        loop {
            let rest2 = &rest - &tile.b.scale(&int(j as i64));
            if rest2.is_negative() {
                break;
            }
            if let Some(k) = (&rest2 / &tile.c).as_rational() {
                if is_integer(k) {
                    out.push([i, j, k.to_integer().try_into().expect("edge count fits in u64")]);
                }
            }
            j += 1;
        }
        i += 1;
    }
    out
}

/// Cartesian product of the per-side solutions.
pub fn enumerate_dmatrices(tile: &TileShape, tri: &TriangleSpec) -> Vec<DMatrix> {
    let [x, y, z] = &tri.sides;
    let (rx, ry, rz) = (row_solutions(tile, x), row_solutions(tile, y), row_solutions(tile, z));
    let mut out = Vec::with_capacity(rx.len() * ry.len() * rz.len());
    for a in &rx {
        for b in &ry {
            for c in &rz {
                out.push(DMatrix { rows: [*a, *b, *c] });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tilealgebra::tile_from_sides;
    use proptest::prelude::*;

    #[test]
    fn equilateral_15() {
        let t = TileShape::from_ints(3, 5, 7).unwrap();
        let rows = row_solutions(&t, &15.into());
        assert_eq!(rows, vec![[0, 3, 0], [1, 1, 1], [5, 0, 0]]);
        let tri = TriangleSpec::parse("equilateral:15", &t).unwrap();
        let ms = enumerate_dmatrices(&t, &tri);
        assert_eq!(ms.len(), 27);
        assert_eq!(ms.iter().filter(|m| !m.lemma10_violation()).count(), 1);
    }

    #[test]
    fn quadratic_boundary() {
        let t = TileShape::from_ints(3, 5, 7).unwrap();
        let tri = TriangleSpec::parse("triangle:6,10,14", &t).unwrap();
        let ms = enumerate_dmatrices(&t, &tri);
        // X = 14 = 2c, Y = 10 = 2b, Z = 6 = 2a
        assert!(ms.contains(&DMatrix { rows: [[0, 0, 2], [0, 2, 0], [2, 0, 0]] }));
        let iso = tile_from_sides(1.into(), 1.into(), QRoot3::sqrt3()).unwrap();
        let tri = TriangleSpec::parse("equilateral:2*sqrt3", &iso).unwrap();
        let ms = enumerate_dmatrices(&iso, &tri);
        assert_eq!(ms, vec![DMatrix { rows: [[0, 0, 2]; 3] }]);
    }

    proptest! {
        #[test]
        fn rows_match_brute_force(len in 1i64..60) {
            let t = TileShape::from_ints(3, 5, 7).unwrap();
            let mut expect = Vec::new();
            for i in 0..=len {
                for j in 0..=len {
                    for k in 0..=len {
                        if 3 * i + 5 * j + 7 * k == len {
                            expect.push([i as u64, j as u64, k as u64]);
                        }
                    }
                }
            }
            let got = row_solutions(&t, &len.into());
            prop_assert_eq!(&got, &expect);
            for r in got {
                let m = DMatrix { rows: [r; 3] };
                prop_assert_eq!(m.apply(&t)[0].clone(), QRoot3::from_int(len));
            }
        }
    }
}
