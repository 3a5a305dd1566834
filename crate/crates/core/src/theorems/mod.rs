//! Extremal search, two-hub structure witnesses, path-system
//! transformations and per-theorem verification reports.

pub mod search;
pub mod transform;
pub mod verify;
pub mod witness;

pub use search::{
    paper_family, spex_search, GraphRho, SearchOptions, SearchReport, DEFAULT_TIE_TOL,
};
pub use transform::{
    transformation_path, verify_lemma9, PathSystem, TransformComparison, TransformStep,
    GAIN_RESOLUTION,
};
pub use verify::{verify_theorem, SearchObservation, Theorem, TheoremReport, VerifyOptions};
pub use witness::{structure_witness, ComponentKind, RClass, RComponent, StructureWitness};
