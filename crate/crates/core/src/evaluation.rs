//! Cross-validation, AUC, and the generalization matrix.
