//! Instance format shared by the `arbocut` binary and its integration tests.

pub mod instance;
