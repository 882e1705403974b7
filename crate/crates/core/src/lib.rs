//! Exact-arithmetic toolkit for 2-step nilpotent Lie algebras carrying
//! almost complex structures: classification of bracket/structure pairs,
//! conjugation and (anti)complexification, Pfaffian-form invariants with
//! real-form obstructions, curvature and Gray identities, and nilsoliton /
//! minimal-metric certificates with an exact-or-float split.

pub mod acs;
pub mod catalog;
pub mod exact;
pub mod invariants;
pub mod lie;
pub mod metric;
pub mod soliton;
