//! Tiles with a 120° angle: exact side triples, edge relations between
//! the sides, and recovering a tile's shape from one relation.

mod relation;
mod tile;

pub use relation::{relation_from_shape, relations_for_tile, shape_from_relation, EdgeRelation, RelationKind, ShapeRoot};
pub use tile::{classify_tile, cos_ratio, eisenstein_parameters, eisenstein_triple, tile_from_sides, TileClass, TileShape};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TileError {
    #[error("tile sides must be positive")]
    NonPositive,
    #[error("sides ({a}, {b}, {c}) violate c^2 = a^2 + b^2 + ab")]
    LawOfCosines { a: String, b: String, c: String },
    #[error("{0}")]
    BadParameters(String),
    #[error("side ratios are not rational")]
    NotRational,
    #[error("no valid shape: no root of the shape quadratic lies in (0, 1)")]
    NoValidShape,
}
