//! Two-colored partition diagrams, their categories, and the linear maps,
//! groups and matrix models attached to them.

pub mod classes;
pub mod closure;
pub mod color;
pub mod diagram;
pub mod error;
pub mod geometry;
pub mod linalg;
mod packed;
pub mod relation;
pub mod render;
pub mod scan;
pub mod sphere;
pub mod torus;

pub use classes::{enumerate_pairings, is_in_class, ClassName};
pub use closure::{close, contains, equals_up_to, CategoryClosure, ClosureBudget, Membership};
pub use color::{Color, ColoredWord};
pub use diagram::{InvolutionConvention, PartitionDiagram, Point};
pub use error::{Error, Result};
pub use geometry::{named_geometry, Geometry, GeometrySpec};
pub use relation::{implication_check, relation_to_diagram, Implication, RelationSpec};
pub use scan::{intermediate_scan, ScanClass, ScanReport};
pub use torus::{
    check_relation_in_image, embed_zh, freeness_witness, monomial_eval, reduce_free_product, separate_tori,
    torus_relations, FreeProductElement, GroupRelation, MonomialElement, TorusWord,
};
pub use sphere::{
    build_model, check_block_formulae, check_half_commutation, check_starstar_relations, noncommutativity_witness,
    Block2, ModelPoint,
};
