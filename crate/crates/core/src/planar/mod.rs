//! Planar realization of a candidate monodromy.
//!
//! From σ a chord diagram on a disk is built, closed up into a 4-regular
//! plane map G with a chess colouring, and the radial map R_b(G) is the
//! plane map whose outer face has z-monodromy σ.

pub mod arrangement;
pub mod matching;
pub mod quad;
pub mod radial;
pub mod realize;

pub use arrangement::{arrange_chords, Arrangement, Chord, Crossing};
pub use matching::{boundary_order, closed_curves, matching_from_sigma, ChordMatching, CurveSystem, Point};
pub use quad::{assemble_quad_map, AssemblyError, MarkedQuadMap, VertexRole};
pub use radial::{
    central_circuits, chess_coloring, chess_coloring_with, extract_radial, medial,
    zigzags_match_central_circuits, CentralCircuit, ChessColoring, Color, Radial, RadialError,
};
pub use realize::{realize_planar, Realization, RealizeError};
