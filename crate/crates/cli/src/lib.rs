//! Readers, writers and settings shared by the `avg-sfde` command.

pub mod config;
pub mod grid;
pub mod table;
