//! Right keys, Demazure characters and Demazure tableaux.
//!
//! Tableaux are stored column by column and addressed `(col, row)` from 1.
//! The scanning method computes right keys directly; [`jdt`] recomputes them
//! by jeu de taquin as an independent reference.

pub mod convexity;
pub mod demazure;
pub mod enumerate;
pub mod error;
pub mod jdt;
pub mod permutation;
pub mod poly;
pub mod scanning;
pub mod shape;
pub mod tableau;

pub use convexity::{
    convexity_report, counterexample_segment, demazure_equals_order_ideal, embed,
    has_312_containing_gap, is_convex_lattice_set, order_ideal_inequalities, staircase,
    verify_convexity_theorem, ConvexityEntry, ConvexityReport, LatticePointSet, Ratio,
    SegmentWitness,
};
pub use demazure::{
    enumerate_demazure, is_demazure, is_demazure_by_key, local_condition_set, scan_bounds,
    IntervalSet, LocalConditionSet, ScanBounds,
};
pub use enumerate::{enumerate_ssyt, fill_southwest, PartialTableau};
pub use error::{Error, Result};
pub use jdt::{frank_filling, is_frank, length_swap, rectify, right_key_jdt, SkewTableau};
pub use permutation::{key_of_composition, key_of_permutation, CompositionKey, Permutation};
pub use poly::{
    demazure_character_ops, demazure_character_tableaux, key_polynomial, pi, schur_polynomial,
    SparsePoly,
};
pub use scanning::{
    ewis, left_key, right_key, scan_column, scanning_tableau, ScanPath, ScanResult,
};
pub use shape::{Cell, Partition};
pub use tableau::Tableau;
