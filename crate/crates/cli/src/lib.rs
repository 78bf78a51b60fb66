//! Command-line front end for `afx-core`: JSON input and output, the
//! subcommands, and the verification suites behind `afx verify`.

pub mod commands;
pub mod io;
pub mod verify;
