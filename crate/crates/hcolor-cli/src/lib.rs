//! IO, file formats, and campaign machinery behind the `hcolor` binary.

pub mod campaign;
pub mod format;
pub mod report;

/// Vertex labels for the two built-in tightness figures.
pub const FIGURE1_LABELS: [&str; 4] = ["a", "b", "c", "d"];
pub const FIGURE2_LABELS: [&str; 7] = ["r", "s", "t", "u", "v", "w", "x"];
