//! Finite Coxeter systems with exact geometric root data.

pub mod classify;
pub mod datum;
pub mod element;
pub mod fixed;
pub mod parabolic;
pub mod table;
pub mod types;

pub use classify::{product_label, Component};
pub use datum::CoxeterDatum;
pub use element::GroupElement;
pub use fixed::{standardize_subsystem, FixedSpaceGroup};
pub use parabolic::{
    conjugating_element, coset_twist, longest_element, min_coset_reps, min_double_coset_reps, normalizer_complement,
    parabolic_classes, CosetSide, ParabolicClass, ParabolicRef,
};
pub use table::ElementTable;
pub use types::CoxType;
