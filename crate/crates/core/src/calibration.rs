//! Platt scaling, reliability diagrams, the display scale, and the
//! maximum-accuracy classification threshold.
