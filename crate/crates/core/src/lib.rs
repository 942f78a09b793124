//! Bot-detection scoring and probability calibration.
//!
//! The pipeline turns a labeled account corpus into an interpretable score
//! stack for any account:
//!
//! 1. [`forest`] — a random-forest ensemble whose raw score is the fraction
//!    of trees voting "bot", plus six per-feature-class subscores and a
//!    language-independent score;
//! 2. [`calibration`] — Platt scaling of raw scores into probability-like
//!    calibrated scores, reliability diagrams, and the `[0, 5]` display
//!    scale;
//! 3. [`posterior`] — Bernstein-polynomial likelihood densities over raw
//!    scores and the Bayesian Complete Automation Probability (CAP), which
//!    folds in a background prior for how common bots are;
//! 4. [`evaluation`] — cross-validation, AUC, and the cross-dataset
//!    generalization matrix experiment.
//!
//! [`synth`] generates seeded synthetic corpora standing in for real
//! labeled datasets at desk scale; [`corpus`] and [`bundle`] handle file
//! formats and model persistence.
//!
//! With the default `parallel` feature, feature extraction, tree training,
//! and batch scoring run on a rayon pool; results are bit-identical to the
//! sequential fallback (`--no-default-features`).

pub mod account;
pub mod bundle;
pub mod calibration;
pub mod corpus;
pub mod error;
pub mod evaluation;
pub mod features;
pub mod forest;
pub mod posterior;
pub mod seeding;
pub mod sentiment;
pub mod synth;

pub use account::{Account, Label, LabeledCorpus, NeighborRelation, NeighborSummary, Post};
pub use bundle::{load_model, save_model, score_account, ModelBundle, ScoreResponse};
pub use calibration::{Calibrator, DisplayScore, ReliabilityCurve};
pub use error::{Error, Result};
pub use evaluation::{FoldPlan, GeneralizationMatrix, Metrics};
pub use features::{FeatureGroup, FeatureSchema, FeatureVector};
pub use forest::{ForestModel, ForestParams, ModelSet, RawScore, ScoreBundle};
pub use posterior::{BernsteinDensity, CapModel, Prior};
pub use synth::{Archetype, ArchetypeMix, SynthConfig};
