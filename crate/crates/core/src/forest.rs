//! Random-forest ensemble: training, raw scores, subscores, and the
//! language-independent score.
//!
//! The raw bot score of an account is the fraction of trees voting "bot",
//! so every score is an exact multiple of `1/n_trees`. Trees are grown CART
//! style on bootstrap resamples with Gini impurity; split-gain comparisons
//! use exact integer arithmetic so argmax ties resolve identically on every
//! platform (lowest feature index, then lowest threshold). With the
//! `parallel` feature, trees train on a rayon pool; every tree draws from
//! its own seeded RNG stream, so parallel and sequential runs produce the
//! same model.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::account::{Account, Label, LabeledCorpus};
use crate::error::{Error, Result};
use crate::features::{extract, extract_all, FeatureGroup, FeatureSchema, FeatureVector};
use crate::seeding::derive_seed;

/// Training hyperparameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForestParams {
    pub n_trees: usize,
    pub seed: u64,
    /// Stop splitting once a node holds this many samples or fewer.
    pub min_leaf: usize,
    /// Candidate features per split; `None` means `ceil(sqrt(d))`.
    pub features_per_split: Option<usize>,
    /// Grow each tree on a bootstrap resample (the default). Disabling it
    /// makes a 1-tree forest coincide with plain CART on the training set.
    pub bootstrap: bool,
}

impl Default for ForestParams {
    fn default() -> Self {
        ForestParams {
            n_trees: 100,
            seed: 0,
            min_leaf: 1,
            features_per_split: None,
            bootstrap: true,
        }
    }
}

impl ForestParams {
    fn validate(&self) -> Result<()> {
        if self.n_trees == 0 {
            return Err(Error::Validation("n_trees must be at least 1".into()));
        }
        if self.features_per_split == Some(0) {
            return Err(Error::Validation(
                "features_per_split must be at least 1".into(),
            ));
        }
        Ok(())
    }

    fn splits_for(&self, dims: usize) -> usize {
        match self.features_per_split {
            Some(k) => k.min(dims).max(1),
            None => (dims as f64).sqrt().ceil() as usize,
        }
    }
}

/// One node of a decision tree, stored in an arena indexed by `u32`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Node {
    Split {
        feature: u32,
        threshold: f64,
        left: u32,
        right: u32,
    },
    Leaf {
        vote: Label,
    },
}

/// Binary CART tree; values `<= threshold` descend left.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionTree {
    nodes: Vec<Node>,
}

impl DecisionTree {
    pub fn predict(&self, values: &[f64]) -> Label {
        let mut at = 0usize;
        loop {
            match &self.nodes[at] {
                Node::Leaf { vote } => return *vote,
                Node::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } => {
                    at = if values[*feature as usize] <= *threshold {
                        *left as usize
                    } else {
                        *right as usize
                    };
                }
            }
        }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }
}

/// Raw classifier output: the fraction of trees voting bot, always an exact
/// multiple of `1/n_trees`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RawScore(pub f64);

impl RawScore {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Provenance recorded with each trained forest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainingMeta {
    pub seed: u64,
    pub corpus_names: Vec<String>,
    /// Optional timestamp supplied by the caller; kept out of the default
    /// path so that identical inputs produce identical model files.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trained_at: Option<String>,
}

/// A trained ensemble over one feature space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForestModel {
    trees: Vec<DecisionTree>,
    n_trees: usize,
    schema_fingerprint: u64,
    pub meta: TrainingMeta,
}

impl ForestModel {
    pub fn n_trees(&self) -> usize {
        self.n_trees
    }

    pub fn trees(&self) -> &[DecisionTree] {
        &self.trees
    }

    pub fn schema_fingerprint(&self) -> u64 {
        self.schema_fingerprint
    }

    /// Raw score: fraction of trees voting bot.
    pub fn score(&self, vec: &FeatureVector) -> Result<RawScore> {
        if vec.schema_fingerprint() != self.schema_fingerprint {
            return Err(Error::SchemaMismatch {
                model: self.schema_fingerprint,
                vector: vec.schema_fingerprint(),
            });
        }
        let bots = self
            .trees
            .iter()
            .filter(|t| t.predict(vec.values()) == Label::Bot)
            .count();
        Ok(RawScore(bots as f64 / self.n_trees as f64))
    }
}

/// A group submodel together with the projection from the full schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubModel {
    pub model: ForestModel,
    /// Indices into the full schema that form this submodel's feature space.
    pub indices: Vec<usize>,
    pub schema: Arc<FeatureSchema>,
}

impl SubModel {
    fn score_full(&self, full: &FeatureVector) -> Result<RawScore> {
        let projected = full.project(&self.indices, Arc::clone(&self.schema));
        self.model.score(&projected)
    }
}

/// The full model plus the six group submodels and the language-independent
/// submodel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSet {
    pub schema: Arc<FeatureSchema>,
    pub full: ForestModel,
    pub subscores: BTreeMap<FeatureGroup, SubModel>,
    pub language_independent: SubModel,
    /// Groups skipped because the schema had no features for them.
    pub warnings: Vec<String>,
}

/// Raw score, six subscores, and the language-independent score.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreBundle {
    pub raw: RawScore,
    pub subscores: BTreeMap<FeatureGroup, RawScore>,
    pub language_independent: RawScore,
}

impl ModelSet {
    /// Scores one account: extracts features once, then evaluates the full
    /// model and every submodel on projections of the same vector.
    pub fn score_bundle(&self, account: &Account) -> Result<ScoreBundle> {
        let full_vec = extract(account, &self.schema);
        self.score_bundle_from_vector(&full_vec)
    }

    pub fn score_bundle_from_vector(&self, full_vec: &FeatureVector) -> Result<ScoreBundle> {
        let raw = self.full.score(full_vec)?;
        let mut subscores = BTreeMap::new();
        for (group, sub) in &self.subscores {
            subscores.insert(*group, sub.score_full(full_vec)?);
        }
        let language_independent = self.language_independent.score_full(full_vec)?;
        Ok(ScoreBundle {
            raw,
            subscores,
            language_independent,
        })
    }
}

/// Column-projected training matrix.
struct TrainData {
    /// Row-major, `n_rows x n_cols`.
    values: Vec<f64>,
    n_cols: usize,
    labels: Vec<Label>,
}

impl TrainData {
    fn from_vectors(vectors: &[FeatureVector], labels: &[Label], columns: Option<&[usize]>) -> Self {
        let n_cols = columns.map_or_else(
            || vectors.first().map_or(0, |v| v.values().len()),
            |c| c.len(),
        );
        let mut values = Vec::with_capacity(vectors.len() * n_cols);
        for v in vectors {
            match columns {
                Some(cols) => values.extend(cols.iter().map(|&c| v.values()[c])),
                None => values.extend_from_slice(v.values()),
            }
        }
        TrainData {
            values,
            n_cols,
            labels: labels.to_vec(),
        }
    }

    fn n_rows(&self) -> usize {
        self.labels.len()
    }

    fn at(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.n_cols + col]
    }
}

/// Candidate split quality. Gini gain ordering is decided with exact integer
/// arithmetic: maximizing the weighted Gini decrease is equivalent to
/// maximizing `q / (n_l * n_r)` with
/// `q = (b_l^2 + h_l^2) * n_r + (b_r^2 + h_r^2) * n_l`.
#[derive(Clone, Copy)]
struct SplitQuality {
    q: u128,
    denom: u128,
}

impl SplitQuality {
    fn new(b_l: u64, h_l: u64, b_r: u64, h_r: u64) -> Self {
        let n_l = b_l + h_l;
        let n_r = b_r + h_r;
        let q = u128::from(b_l * b_l + h_l * h_l) * u128::from(n_r)
            + u128::from(b_r * b_r + h_r * h_r) * u128::from(n_l);
        SplitQuality {
            q,
            denom: u128::from(n_l) * u128::from(n_r),
        }
    }

    fn better_than(&self, other: &SplitQuality) -> bool {
        self.q * other.denom > other.q * self.denom
    }

    /// True when the split strictly reduces impurity relative to a parent
    /// with class counts (b, h).
    fn improves_on(&self, b: u64, h: u64) -> bool {
        let n = b + h;
        self.q * u128::from(n) > u128::from(b * b + h * h) * self.denom
    }
}

struct TreeBuilder<'a> {
    data: &'a TrainData,
    params: &'a ForestParams,
    splits_per_node: usize,
    nodes: Vec<Node>,
}

impl TreeBuilder<'_> {
    fn class_counts(&self, rows: &[u32]) -> (u64, u64) {
        let bots = rows
            .iter()
            .filter(|&&r| self.data.labels[r as usize] == Label::Bot)
            .count() as u64;
        (bots, rows.len() as u64 - bots)
    }

    fn majority(&self, bots: u64, humans: u64) -> Label {
        // Ties vote human.
        if bots > humans {
            Label::Bot
        } else {
            Label::Human
        }
    }

    fn grow(&mut self, rows: Vec<u32>, rng: &mut ChaCha8Rng) -> u32 {
        let (bots, humans) = self.class_counts(&rows);
        let pure = bots == 0 || humans == 0;
        if pure || rows.len() <= self.params.min_leaf {
            return self.push(Node::Leaf {
                vote: self.majority(bots, humans),
            });
        }

        // Sample candidate features, then scan them in ascending index
        // order so gain ties resolve to the lowest feature index.
        let mut candidates =
            rand::seq::index::sample(rng, self.data.n_cols, self.splits_per_node.min(self.data.n_cols))
                .into_vec();
        candidates.sort_unstable();

        let mut best: Option<(SplitQuality, usize, f64)> = None;
        let mut column: Vec<(f64, Label)> = Vec::with_capacity(rows.len());
        for &feature in &candidates {
            column.clear();
            column.extend(rows.iter().map(|&r| {
                (
                    self.data.at(r as usize, feature),
                    self.data.labels[r as usize],
                )
            }));
            column.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite features"));

            let mut b_l = 0u64;
            let mut h_l = 0u64;
            for i in 1..column.len() {
                match column[i - 1].1 {
                    Label::Bot => b_l += 1,
                    Label::Human => h_l += 1,
                }
                let (lo, hi) = (column[i - 1].0, column[i].0);
                if lo == hi {
                    continue;
                }
                let quality = SplitQuality::new(b_l, h_l, bots - b_l, humans - h_l);
                if !quality.improves_on(bots, humans) {
                    continue;
                }
                let replace = match &best {
                    Some((q, _, _)) => quality.better_than(q),
                    None => true,
                };
                if replace {
                    // Midpoint, nudged down when rounding would collide with
                    // the upper value so `<= threshold` keeps the prefix.
                    let mid = (lo + hi) / 2.0;
                    let threshold = if mid < hi { mid } else { lo };
                    best = Some((quality, feature, threshold));
                }
            }
        }

        let Some((_, feature, threshold)) = best else {
            // No improving split among the candidates.
            return self.push(Node::Leaf {
                vote: self.majority(bots, humans),
            });
        };

        let (left_rows, right_rows): (Vec<u32>, Vec<u32>) = rows
            .iter()
            .copied()
            .partition(|&r| self.data.at(r as usize, feature) <= threshold);
        debug_assert!(!left_rows.is_empty() && !right_rows.is_empty());

        let at = self.push(Node::Split {
            feature: feature as u32,
            threshold,
            left: 0,
            right: 0,
        });
        let left = self.grow(left_rows, rng);
        let right = self.grow(right_rows, rng);
        if let Node::Split {
            left: l, right: r, ..
        } = &mut self.nodes[at as usize]
        {
            *l = left;
            *r = right;
        }
        at
    }

    fn push(&mut self, node: Node) -> u32 {
        self.nodes.push(node);
        (self.nodes.len() - 1) as u32
    }
}

fn grow_tree(data: &TrainData, params: &ForestParams, tree_seed: u64) -> DecisionTree {
    let mut rng = ChaCha8Rng::seed_from_u64(tree_seed);
    let n = data.n_rows();
    let rows: Vec<u32> = if params.bootstrap {
        (0..n).map(|_| rng.random_range(0..n) as u32).collect()
    } else {
        (0..n as u32).collect()
    };
    let mut builder = TreeBuilder {
        data,
        params,
        splits_per_node: params.splits_for(data.n_cols),
        nodes: Vec::new(),
    };
    let root = builder.grow(rows, &mut rng);
    debug_assert_eq!(root, 0);
    DecisionTree {
        nodes: builder.nodes,
    }
}

fn train_forest_on(
    data: &TrainData,
    params: &ForestParams,
    schema_fingerprint: u64,
    corpus_name: &str,
    sequential: bool,
) -> Result<ForestModel> {
    params.validate()?;
    let has_bot = data.labels.iter().any(|&l| l == Label::Bot);
    let has_human = data.labels.iter().any(|&l| l == Label::Human);
    if !has_bot || !has_human {
        return Err(Error::SingleClass(format!(
            "training data for {corpus_name:?} holds only {}",
            if has_bot { "bots" } else { "humans" }
        )));
    }

    let seeds: Vec<u64> = (0..params.n_trees)
        .map(|t| derive_seed(params.seed, "tree", t as u64))
        .collect();

    let trees: Vec<DecisionTree> = if sequential {
        seeds.iter().map(|&s| grow_tree(data, params, s)).collect()
    } else {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            seeds
                .par_iter()
                .map(|&s| grow_tree(data, params, s))
                .collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            seeds.iter().map(|&s| grow_tree(data, params, s)).collect()
        }
    };

    Ok(ForestModel {
        trees,
        n_trees: params.n_trees,
        schema_fingerprint,
        meta: TrainingMeta {
            seed: params.seed,
            corpus_names: vec![corpus_name.to_string()],
            trained_at: None,
        },
    })
}

fn train_set_impl(
    corpus: &LabeledCorpus,
    schema: &Arc<FeatureSchema>,
    params: &ForestParams,
    sequential: bool,
) -> Result<ModelSet> {
    corpus.require_both_classes()?;
    params.validate()?;

    let accounts: Vec<Account> = corpus.entries.iter().map(|(a, _)| a.clone()).collect();
    let labels: Vec<Label> = corpus.entries.iter().map(|(_, l)| *l).collect();
    let vectors = if sequential {
        crate::features::extract_all_sequential(&accounts, schema)
    } else {
        extract_all(&accounts, schema)
    };

    let full_data = TrainData::from_vectors(&vectors, &labels, None);
    let full = train_forest_on(&full_data, params, schema.fingerprint(), &corpus.name, sequential)?;

    let mut warnings = Vec::new();
    let mut subscores = BTreeMap::new();
    for (gi, group) in FeatureGroup::ALL.into_iter().enumerate() {
        let indices = schema.group_indices(group);
        if indices.is_empty() {
            warnings.push(format!("schema has no {group} features; subscore omitted"));
            continue;
        }
        let sub_schema = schema.group_slice(group);
        let data = TrainData::from_vectors(&vectors, &labels, Some(&indices));
        let sub_params = ForestParams {
            seed: derive_seed(params.seed, "group", gi as u64),
            features_per_split: None,
            ..params.clone()
        };
        let model = train_forest_on(
            &data,
            &sub_params,
            sub_schema.fingerprint(),
            &corpus.name,
            sequential,
        )?;
        subscores.insert(
            group,
            SubModel {
                model,
                indices,
                schema: sub_schema,
            },
        );
    }

    let li_indices = schema.non_linguistic_indices();
    let li_schema = schema.strip_linguistic()?;
    let li_data = TrainData::from_vectors(&vectors, &labels, Some(&li_indices));
    let li_params = ForestParams {
        seed: derive_seed(params.seed, "lang_independent", 0),
        features_per_split: None,
        ..params.clone()
    };
    let language_independent = SubModel {
        model: train_forest_on(
            &li_data,
            &li_params,
            li_schema.fingerprint(),
            &corpus.name,
            sequential,
        )?,
        indices: li_indices,
        schema: li_schema,
    };

    Ok(ModelSet {
        schema: Arc::clone(schema),
        full,
        subscores,
        language_independent,
        warnings,
    })
}

/// Trains the full model plus the 6+1 submodels. Uses the rayon pool when
/// the `parallel` feature is enabled; results are identical either way.
pub fn train_model_set(
    corpus: &LabeledCorpus,
    schema: &Arc<FeatureSchema>,
    params: &ForestParams,
) -> Result<ModelSet> {
    train_set_impl(corpus, schema, params, false)
}

/// Sequential reference path for [`train_model_set`].
pub fn train_model_set_sequential(
    corpus: &LabeledCorpus,
    schema: &Arc<FeatureSchema>,
    params: &ForestParams,
) -> Result<ModelSet> {
    train_set_impl(corpus, schema, params, true)
}

/// Trains a forest on the full schema only (no submodels); the unit used by
/// cross-validation folds.
pub fn train_forest(
    corpus: &LabeledCorpus,
    schema: &Arc<FeatureSchema>,
    params: &ForestParams,
) -> Result<ForestModel> {
    corpus.require_both_classes()?;
    let accounts: Vec<Account> = corpus.entries.iter().map(|(a, _)| a.clone()).collect();
    let labels: Vec<Label> = corpus.entries.iter().map(|(_, l)| *l).collect();
    let vectors = extract_all(&accounts, schema);
    let data = TrainData::from_vectors(&vectors, &labels, None);
    train_forest_on(&data, params, schema.fingerprint(), &corpus.name, false)
}

/// Scores a batch of accounts against one forest, in parallel when enabled.
pub fn score_accounts(
    model: &ForestModel,
    accounts: &[Account],
    schema: &Arc<FeatureSchema>,
) -> Result<Vec<RawScore>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        accounts
            .par_iter()
            .map(|a| model.score(&extract(a, schema)))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        score_accounts_sequential(model, accounts, schema)
    }
}

/// Sequential reference path for [`score_accounts`].
pub fn score_accounts_sequential(
    model: &ForestModel,
    accounts: &[Account],
    schema: &Arc<FeatureSchema>,
) -> Result<Vec<RawScore>> {
    accounts
        .iter()
        .map(|a| model.score(&extract(a, schema)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::{generate_synthetic, SynthConfig};
    use chrono::{TimeZone, Utc};

    fn tiny_params(seed: u64) -> ForestParams {
        ForestParams {
            n_trees: 20,
            seed,
            ..ForestParams::default()
        }
    }

    fn synth(seed: u64, n: usize) -> LabeledCorpus {
        generate_synthetic(&SynthConfig {
            seed,
            n_humans: n / 2,
            n_bots: n.div_ceil(2),
            ..SynthConfig::default()
        })
        .unwrap()
    }

    /// Single nonzero feature, perfectly separable with a wide margin.
    fn separable_corpus() -> LabeledCorpus {
        let epoch = Utc.with_ymd_and_hms(2025, 1, 1, 0, 0, 0).unwrap();
        let mut entries = Vec::new();
        for i in 0..40u64 {
            let bot = i % 2 == 1;
            // followers_count drives followers_log1p; humans cluster low,
            // bots high, everything else identical.
            let followers = if bot { 100_000 + i } else { 5 + i };
            let account = Account {
                id: format!("a{i}"),
                screen_name: "same_name".into(),
                created_at: epoch,
                followers_count: followers,
                friends_count: 10,
                statuses_count: 0,
                description: String::new(),
                lang: "en".into(),
                tz_offset_minutes: None,
                posts: vec![],
                neighbors: vec![],
            };
            entries.push((
                account,
                if bot { Label::Bot } else { Label::Human },
            ));
        }
        LabeledCorpus::new("separable", entries).unwrap()
    }

    #[test]
    fn perfectly_separable_corpus_trains_to_perfect_accuracy() {
        let corpus = separable_corpus();
        let schema = FeatureSchema::standard();
        let params = ForestParams {
            n_trees: 30,
            seed: 5,
            features_per_split: Some(1),
            ..ForestParams::default()
        };
        let model = train_forest(&corpus, &schema, &params).unwrap();
        for (account, label) in &corpus.entries {
            let s = model.score(&extract(account, &schema)).unwrap().value();
            let predicted = if s > 0.5 { Label::Bot } else { Label::Human };
            assert_eq!(predicted, *label, "score {s}");
        }
    }

    #[test]
    fn training_is_deterministic_given_seed() {
        let corpus = synth(21, 60);
        let schema = FeatureSchema::standard();
        let a = train_model_set(&corpus, &schema, &tiny_params(9)).unwrap();
        let b = train_model_set(&corpus, &schema, &tiny_params(9)).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        let c = train_model_set(&corpus, &schema, &tiny_params(10)).unwrap();
        assert_ne!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&c).unwrap()
        );
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_training_matches_sequential() {
        let corpus = synth(33, 50);
        let schema = FeatureSchema::standard();
        let par = train_model_set(&corpus, &schema, &tiny_params(3)).unwrap();
        let seq = train_model_set_sequential(&corpus, &schema, &tiny_params(3)).unwrap();
        assert_eq!(
            serde_json::to_string(&par).unwrap(),
            serde_json::to_string(&seq).unwrap()
        );
    }

    #[test]
    fn single_class_corpus_is_rejected() {
        let mut corpus = synth(2, 20);
        corpus.entries.retain(|(_, l)| *l == Label::Human);
        let err = train_model_set(&corpus, &FeatureSchema::standard(), &tiny_params(0));
        assert!(matches!(err, Err(Error::SingleClass(_))));
    }

    #[test]
    fn score_is_fraction_of_bot_votes() {
        // Hand-built forest: 3 of 10 trees vote bot unconditionally.
        let schema = FeatureSchema::standard();
        let trees: Vec<DecisionTree> = (0..10)
            .map(|i| DecisionTree {
                nodes: vec![Node::Leaf {
                    vote: if i < 3 { Label::Bot } else { Label::Human },
                }],
            })
            .collect();
        let model = ForestModel {
            trees,
            n_trees: 10,
            schema_fingerprint: schema.fingerprint(),
            meta: TrainingMeta {
                seed: 0,
                corpus_names: vec!["hand".into()],
                trained_at: None,
            },
        };
        let corpus = synth(1, 2);
        let vec = extract(&corpus.entries[0].0, &schema);
        assert_eq!(model.score(&vec).unwrap().value(), 0.3);
    }

    #[test]
    fn one_tree_scores_are_zero_or_one() {
        let corpus = synth(8, 30);
        let schema = FeatureSchema::standard();
        let params = ForestParams {
            n_trees: 1,
            seed: 4,
            ..ForestParams::default()
        };
        let model = train_forest(&corpus, &schema, &params).unwrap();
        let probe = synth(9, 40);
        for (account, _) in &probe.entries {
            let s = model.score(&extract(account, &schema)).unwrap().value();
            assert!(s == 0.0 || s == 1.0, "got {s}");
        }
    }

    #[test]
    fn scores_are_multiples_of_one_over_n_trees() {
        let corpus = synth(14, 60);
        let schema = FeatureSchema::standard();
        let params = ForestParams {
            n_trees: 100,
            seed: 2,
            ..ForestParams::default()
        };
        let model = train_forest(&corpus, &schema, &params).unwrap();
        let probe = synth(15, 200);
        for (account, _) in &probe.entries {
            let s = model.score(&extract(account, &schema)).unwrap().value();
            let scaled = s * 100.0;
            assert!(
                (scaled - scaled.round()).abs() < 1e-9,
                "score {s} is not a multiple of 1/100"
            );
        }
    }

    #[test]
    fn schema_mismatch_names_both_fingerprints() {
        let corpus = synth(3, 30);
        let schema = FeatureSchema::standard();
        let model = train_forest(&corpus, &schema, &tiny_params(1)).unwrap();
        let sliced = extract(&corpus.entries[0].0, &schema).group_slice(FeatureGroup::Temporal);
        match model.score(&sliced) {
            Err(Error::SchemaMismatch { model: m, vector: v }) => {
                assert_eq!(m, schema.fingerprint());
                assert_eq!(v, sliced.schema_fingerprint());
            }
            other => panic!("expected schema mismatch, got {other:?}"),
        }
    }

    #[test]
    fn score_bundle_covers_postless_accounts() {
        let corpus = synth(44, 60);
        let schema = FeatureSchema::standard();
        let set = train_model_set(&corpus, &schema, &tiny_params(6)).unwrap();
        assert!(set.warnings.is_empty());
        assert_eq!(set.subscores.len(), 6);

        let epoch = Utc.with_ymd_and_hms(2025, 1, 1, 0, 0, 0).unwrap();
        let bare = Account {
            id: "empty".into(),
            screen_name: "no_posts".into(),
            created_at: epoch,
            followers_count: 0,
            friends_count: 0,
            statuses_count: 0,
            description: String::new(),
            lang: String::new(),
            tz_offset_minutes: None,
            posts: vec![],
            neighbors: vec![],
        };
        let bundle = set.score_bundle(&bare).unwrap();
        assert!((0.0..=1.0).contains(&bundle.raw.value()));
        assert!((0.0..=1.0).contains(&bundle.language_independent.value()));
        assert_eq!(bundle.subscores.len(), 6);
        for score in bundle.subscores.values() {
            assert!((0.0..=1.0).contains(&score.value()));
        }
    }

    #[test]
    fn language_independent_score_ignores_post_text() {
        let corpus = synth(50, 60);
        let schema = FeatureSchema::standard();
        let set = train_model_set(&corpus, &schema, &tiny_params(7)).unwrap();

        let mut a = corpus.entries[0].0.clone();
        a.id = "x1".into();
        let mut b = a.clone();
        for p in &mut b.posts {
            p.text = format!("{} scrambled", p.text);
        }
        let ba = set.score_bundle(&a).unwrap();
        let bb = set.score_bundle(&b).unwrap();
        assert_eq!(
            ba.language_independent.value(),
            bb.language_independent.value()
        );
    }

    #[test]
    fn empty_group_is_omitted_with_warning() {
        // Schema restricted to two groups: the other four are omitted.
        let standard = FeatureSchema::standard();
        let defs: Vec<_> = standard
            .features()
            .iter()
            .filter(|d| {
                matches!(d.group, FeatureGroup::UserMeta | FeatureGroup::Temporal)
            })
            .cloned()
            .collect();
        let schema = std::sync::Arc::new(FeatureSchema::new("two-groups", defs));
        let corpus = synth(61, 40);
        let set = train_model_set(&corpus, &schema, &tiny_params(2)).unwrap();
        assert_eq!(set.subscores.len(), 2);
        assert_eq!(set.warnings.len(), 4);
    }
}
