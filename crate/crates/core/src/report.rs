//! Report assembly (placeholder).
