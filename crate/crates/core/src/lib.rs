//! Ideal triangulations of infinite-type surfaces.
//!
//! A surface is presented as a lazy pants graph (`surface`). Windows of the
//! graph are decomposed into one-ended flute pieces (`decomp`), each piece is
//! triangulated through a decorated Farey tessellation (`farey`, `assemble`),
//! and the pieces are glued back along the decomposition curves. The result is
//! a combinatorial map (`trimap`) whose faces are ideal triangles and one-holed
//! monogons. `multiarc` completes a given arc system into such a triangulation
//! when its crossing numbers allow it, and `render` draws disk-model pictures.

pub mod assemble;
pub mod decomp;
pub mod farey;
pub mod multiarc;
pub mod render;
pub mod surface;
pub mod trimap;

pub use assemble::{assemble_surface, decorate_flute, triangulate_flute, Decoration};
pub use decomp::{flute_decomposition, spanning_tree, Decomposition, DualGraph, FlutePiece};
pub use farey::{FareyTriangle, FareyVertex};
pub use multiarc::{check_completable, complete, crossing_count, Curve, MultiArc, TracedArc};
pub use surface::{preset, window, End, PantsGraph, Preset, Slot, VertexId, Window};
pub use trimap::{Face, FaceKind, IdealArc, Triangulation, ValidationReport};
