//! Model persistence and the unified score response.
