//! CLI support (stub).
