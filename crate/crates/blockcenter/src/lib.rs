//! IO, reporting and the end-to-end verification pipeline on top of the
//! exact-arithmetic core crate.  The binary target wires these modules to a
//! command-line interface; they are exposed as a library so integration
//! tests can drive the same pipeline in-process.

pub mod data;
pub mod formats;
pub mod report;
pub mod verify;
