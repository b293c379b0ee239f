//! Verification sweep machinery shared by the `supercomm` binary and the
//! acceptance tests.

pub mod verify;
