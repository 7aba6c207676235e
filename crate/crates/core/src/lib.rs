//! Planar van Kampen maps and small-cancellation conditions.
//!
//! Maps are rotation systems on darts ([`map::CombinatorialMap`]). On top of
//! them sit the region conditions and detectors in [`conditions`], word and
//! presentation handling in [`presentation`], exhaustive enumeration and
//! theorem campaigns in [`verify`], and text formats in [`io`].

pub mod conditions;
pub mod map;
pub mod presentation;
pub mod io;
pub mod cli;
pub mod verify;
