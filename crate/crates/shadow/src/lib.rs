//! Combinatorial shadows of the ring, boot and flower arrangements.
//!
//! A [`Shadow`] is a 4-valent plane graph given by a rotation system: each
//! component lists its crossings in traversal order, and each crossing lists
//! its four arc-ends counterclockwise. The family generators list every
//! component counterclockwise, so a component whose word letter is `1`
//! (counterclockwise) is traversed in listed order and a `0` reverses it.

mod diagram;
mod error;
mod families;
mod iso;
mod pd;
mod shadow;

pub use diagram::{orient_positive, PositiveDiagram};
pub use error::ShadowError;
pub use families::{boot_shadow, family_shadow, flower_shadow, flower_shadow_experimental, ring_shadow, Wiring};
pub use iso::{isomorphic, isomorphic_labeled};
pub use pd::PDCode;
pub use shadow::{Check, Crossing, CrossingKey, End, Family, Shadow, ValidationReport, Visit};
