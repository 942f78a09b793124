//! Feature extraction: maps an [`Account`] to a named, grouped numeric
//! vector.
//!
//! The roster is partitioned into six feature classes (user metadata, friend
//! metadata, network, content & language, sentiment, temporal), and every
//! feature carries a `linguistic` flag marking whether it is derived from
//! post text or language fields. Slicing by group backs the per-class
//! subscores; stripping linguistic features backs the language-independent
//! score.
//!
//! Extraction is total: any account that passes record validation yields a
//! finite value for every feature, with missing inputs (no posts, no
//! neighbors, absent timezone) imputed per schema defaults.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use chrono::{Datelike, Timelike};
use serde::{Deserialize, Serialize};

use crate::account::{Account, NeighborRelation};
use crate::error::{Error, Result};
use crate::sentiment;

/// The six feature classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FeatureGroup {
    UserMeta,
    FriendMeta,
    Network,
    ContentLanguage,
    Sentiment,
    Temporal,
}

impl FeatureGroup {
    pub const ALL: [FeatureGroup; 6] = [
        FeatureGroup::UserMeta,
        FeatureGroup::FriendMeta,
        FeatureGroup::Network,
        FeatureGroup::ContentLanguage,
        FeatureGroup::Sentiment,
        FeatureGroup::Temporal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FeatureGroup::UserMeta => "user_meta",
            FeatureGroup::FriendMeta => "friend_meta",
            FeatureGroup::Network => "network",
            FeatureGroup::ContentLanguage => "content_language",
            FeatureGroup::Sentiment => "sentiment",
            FeatureGroup::Temporal => "temporal",
        }
    }
}

impl fmt::Display for FeatureGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FeatureGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FeatureGroup::ALL
            .iter()
            .copied()
            .find(|g| g.name() == s.trim())
            .ok_or_else(|| Error::Validation(format!("unknown feature group {s:?}")))
    }
}

/// One schema entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureDef {
    pub name: String,
    pub group: FeatureGroup,
    /// True when the feature is derived from post text or language fields.
    pub linguistic: bool,
    /// Value imputed when the underlying inputs are missing.
    pub default: f64,
}

/// Ordered feature roster with a version tag and a content fingerprint.
///
/// The fingerprint is recomputed from the roster on construction (including
/// deserialization), so it always reflects the actual content.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "SchemaDoc", into = "SchemaDoc")]
pub struct FeatureSchema {
    version: String,
    features: Vec<FeatureDef>,
    fingerprint: u64,
}

#[derive(Clone, Serialize, Deserialize)]
struct SchemaDoc {
    version: String,
    features: Vec<FeatureDef>,
}

impl From<SchemaDoc> for FeatureSchema {
    fn from(doc: SchemaDoc) -> Self {
        FeatureSchema::new(doc.version, doc.features)
    }
}

impl From<FeatureSchema> for SchemaDoc {
    fn from(s: FeatureSchema) -> Self {
        SchemaDoc {
            version: s.version,
            features: s.features,
        }
    }
}

const SCHEMA_VERSION: &str = "fs1";

impl FeatureSchema {
    pub fn new(version: impl Into<String>, features: Vec<FeatureDef>) -> Self {
        let version = version.into();
        let fingerprint = fingerprint_of(&version, &features);
        FeatureSchema {
            version,
            features,
            fingerprint,
        }
    }

    /// The standard 42-feature roster.
    pub fn standard() -> Arc<FeatureSchema> {
        let features = ROSTER
            .iter()
            .map(|&(name, group, linguistic, default)| FeatureDef {
                name: name.to_string(),
                group,
                linguistic,
                default,
            })
            .collect();
        Arc::new(FeatureSchema::new(SCHEMA_VERSION, features))
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn features(&self) -> &[FeatureDef] {
        &self.features
    }

    pub fn len(&self) -> usize {
        self.features.len()
    }

    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }

    /// Content fingerprint; pinned into trained models.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Indices of the features tagged with `group`, in schema order.
    pub fn group_indices(&self, group: FeatureGroup) -> Vec<usize> {
        self.features
            .iter()
            .enumerate()
            .filter(|(_, d)| d.group == group)
            .map(|(i, _)| i)
            .collect()
    }

    /// Indices of the non-linguistic features, in schema order.
    pub fn non_linguistic_indices(&self) -> Vec<usize> {
        self.features
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.linguistic)
            .map(|(i, _)| i)
            .collect()
    }

    /// Derived schema containing exactly one group, original order kept.
    pub fn group_slice(&self, group: FeatureGroup) -> Arc<FeatureSchema> {
        let features = self
            .group_indices(group)
            .into_iter()
            .map(|i| self.features[i].clone())
            .collect();
        Arc::new(FeatureSchema::new(
            format!("{}/{}", self.version, group.name()),
            features,
        ))
    }

    /// Derived schema with every linguistic feature removed.
    ///
    /// Errors when nothing would remain (a language-independent model would
    /// be impossible).
    pub fn strip_linguistic(&self) -> Result<Arc<FeatureSchema>> {
        let indices = self.non_linguistic_indices();
        if indices.is_empty() {
            return Err(Error::Validation(
                "all schema features are linguistic; cannot build a language-independent view"
                    .into(),
            ));
        }
        let features = indices
            .into_iter()
            .map(|i| self.features[i].clone())
            .collect();
        let version = if self.version.ends_with("/nonlinguistic") {
            self.version.clone()
        } else {
            format!("{}/nonlinguistic", self.version)
        };
        Ok(Arc::new(FeatureSchema::new(version, features)))
    }

    /// Roster as CSV (`name,group,linguistic,default`), for documentation
    /// and pinning in tests.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,group,linguistic,default\n");
        for d in &self.features {
            out.push_str(&format!(
                "{},{},{},{}\n",
                d.name, d.group, d.linguistic, d.default
            ));
        }
        out
    }
}

fn fingerprint_of(version: &str, features: &[FeatureDef]) -> u64 {
    // FNV-1a, stable across platforms and runs.
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            hash ^= u64::from(b);
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    eat(version.as_bytes());
    for d in features {
        eat(b"|");
        eat(d.name.as_bytes());
        eat(d.group.name().as_bytes());
        eat(&[u8::from(d.linguistic)]);
        eat(&d.default.to_bits().to_le_bytes());
    }
    hash
}

/// A named feature vector tied to the schema it was extracted under.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    schema: Arc<FeatureSchema>,
    values: Vec<f64>,
}

impl FeatureVector {
    pub fn schema(&self) -> &Arc<FeatureSchema> {
        &self.schema
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn schema_fingerprint(&self) -> u64 {
        self.schema.fingerprint()
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.schema
            .features
            .iter()
            .position(|d| d.name == name)
            .map(|i| self.values[i])
    }

    /// Restriction to one group, original order preserved. Idempotent.
    pub fn group_slice(&self, group: FeatureGroup) -> FeatureVector {
        let indices = self.schema.group_indices(group);
        FeatureVector {
            values: indices.iter().map(|&i| self.values[i]).collect(),
            schema: self.schema.group_slice(group),
        }
    }

    /// Removes every linguistic feature. Idempotent; errors when nothing
    /// would remain.
    pub fn strip_linguistic(&self) -> Result<FeatureVector> {
        let indices = self.schema.non_linguistic_indices();
        let schema = self.schema.strip_linguistic()?;
        Ok(FeatureVector {
            values: indices.iter().map(|&i| self.values[i]).collect(),
            schema,
        })
    }

    /// Projects onto a precomputed index list with its derived schema;
    /// used when scoring group submodels without re-deriving schemas.
    pub(crate) fn project(&self, indices: &[usize], schema: Arc<FeatureSchema>) -> FeatureVector {
        FeatureVector {
            values: indices.iter().map(|&i| self.values[i]).collect(),
            schema,
        }
    }
}

/// Standard roster: (name, group, linguistic, imputation default).
///
/// Imputation families: rates/counts/entropies default to 0, bounded
/// fractions to the neutral 0.5; `has_*` flags carry the missingness signal.
const ROSTER: [(&str, FeatureGroup, bool, f64); 42] = [
    ("age_days", FeatureGroup::UserMeta, false, 0.0),
    ("followers_log1p", FeatureGroup::UserMeta, false, 0.0),
    ("friends_log1p", FeatureGroup::UserMeta, false, 0.0),
    ("statuses_log1p", FeatureGroup::UserMeta, false, 0.0),
    ("follower_friend_ratio", FeatureGroup::UserMeta, false, 1.0),
    ("screen_name_length", FeatureGroup::UserMeta, false, 0.0),
    ("screen_name_digit_count", FeatureGroup::UserMeta, false, 0.0),
    ("description_length", FeatureGroup::UserMeta, false, 0.0),
    ("lifetime_post_rate", FeatureGroup::UserMeta, false, 0.0),
    ("deletion_mismatch_log1p", FeatureGroup::UserMeta, false, 0.0),
    ("has_description", FeatureGroup::UserMeta, false, 0.0),
    ("has_timezone", FeatureGroup::UserMeta, false, 0.0),
    ("neighbor_count", FeatureGroup::FriendMeta, false, 0.0),
    ("neighbor_lang_match_mean", FeatureGroup::FriendMeta, true, 0.5),
    ("neighbor_lang_match_median", FeatureGroup::FriendMeta, true, 0.5),
    ("timezone_mismatch", FeatureGroup::FriendMeta, false, 0.0),
    ("follower_relation_fraction", FeatureGroup::FriendMeta, false, 0.5),
    ("repost_fraction", FeatureGroup::Network, false, 0.5),
    ("mention_rate", FeatureGroup::Network, false, 0.0),
    ("distinct_mention_ratio", FeatureGroup::Network, true, 0.5),
    ("hashtag_rate", FeatureGroup::Network, false, 0.0),
    ("words_per_post_mean", FeatureGroup::ContentLanguage, true, 0.0),
    ("words_per_post_std", FeatureGroup::ContentLanguage, true, 0.0),
    ("chars_per_post_mean", FeatureGroup::ContentLanguage, true, 0.0),
    ("chars_per_post_std", FeatureGroup::ContentLanguage, true, 0.0),
    ("url_rate", FeatureGroup::ContentLanguage, false, 0.0),
    ("lexical_diversity", FeatureGroup::ContentLanguage, true, 0.5),
    ("duplicate_post_fraction", FeatureGroup::ContentLanguage, true, 0.5),
    ("post_lang_entropy", FeatureGroup::ContentLanguage, true, 0.0),
    ("post_lang_match_fraction", FeatureGroup::ContentLanguage, true, 0.5),
    ("valence_mean", FeatureGroup::Sentiment, true, 0.0),
    ("valence_std", FeatureGroup::Sentiment, true, 0.0),
    ("positive_post_fraction", FeatureGroup::Sentiment, true, 0.5),
    ("negative_post_fraction", FeatureGroup::Sentiment, true, 0.5),
    ("gap_log_mean", FeatureGroup::Temporal, false, 0.0),
    ("gap_log_std", FeatureGroup::Temporal, false, 0.0),
    ("gap_log_min", FeatureGroup::Temporal, false, 0.0),
    ("gap_cv", FeatureGroup::Temporal, false, 0.0),
    ("hour_entropy", FeatureGroup::Temporal, false, 0.0),
    ("weekday_entropy", FeatureGroup::Temporal, false, 0.0),
    ("recent_post_rate", FeatureGroup::Temporal, false, 0.0),
    ("source_entropy", FeatureGroup::Temporal, false, 0.0),
];

/// Minimum effective time span (days) used as a denominator floor.
const MIN_SPAN_DAYS: f64 = 1.0 / 24.0;

fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        0.0
    } else {
        xs.iter().sum::<f64>() / xs.len() as f64
    }
}

fn pop_std(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    (xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / xs.len() as f64).sqrt()
}

/// Shannon entropy (bits) of a symbol histogram.
fn entropy_bits<T: Ord>(symbols: impl Iterator<Item = T>) -> f64 {
    let mut counts: BTreeMap<T, usize> = BTreeMap::new();
    let mut total = 0usize;
    for s in symbols {
        *counts.entry(s).or_insert(0) += 1;
        total += 1;
    }
    if total == 0 {
        return 0.0;
    }
    let total = total as f64;
    let mut h = 0.0;
    for &c in counts.values() {
        let p = c as f64 / total;
        h -= p * p.log2();
    }
    h.max(0.0)
}

fn age_days_of(account: &Account) -> Option<f64> {
    let newest = account.newest_post_at()?;
    let secs = (newest - account.created_at).num_seconds() as f64;
    Some(secs / 86_400.0)
}

fn recent_span_days(account: &Account) -> Option<f64> {
    if account.posts.len() < 2 {
        return None;
    }
    let newest = account.posts.first().unwrap().created_at;
    let oldest = account.posts.last().unwrap().created_at;
    Some((newest - oldest).num_seconds() as f64 / 86_400.0)
}

/// Fraction of neighbors whose language tag equals the account's
/// (case-insensitive); 0.5 when the account language is empty or there are
/// no neighbors.
pub fn neighbor_language_match(account: &Account) -> f64 {
    if account.lang.is_empty() || account.neighbors.is_empty() {
        return 0.5;
    }
    let lang = account.lang.to_ascii_lowercase();
    let matches = account
        .neighbors
        .iter()
        .filter(|n| n.lang.to_ascii_lowercase() == lang)
        .count();
    matches as f64 / account.neighbors.len() as f64
}

fn neighbor_language_match_median(account: &Account) -> f64 {
    if account.lang.is_empty() || account.neighbors.is_empty() {
        return 0.5;
    }
    let lang = account.lang.to_ascii_lowercase();
    let mut indicators: Vec<f64> = account
        .neighbors
        .iter()
        .map(|n| f64::from(n.lang.to_ascii_lowercase() == lang))
        .collect();
    indicators.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = indicators.len();
    if n % 2 == 1 {
        indicators[n / 2]
    } else {
        (indicators[n / 2 - 1] + indicators[n / 2]) / 2.0
    }
}

/// Offset difference beyond which a neighbor timezone counts as mismatched.
const TZ_MISMATCH_MINUTES: i32 = 120;

/// Fraction of offset-bearing neighbors whose timezone differs from the
/// account's by more than two hours; 0.0 when the account or all neighbors
/// lack offsets.
pub fn timezone_mismatch(account: &Account) -> f64 {
    let Some(own) = account.tz_offset_minutes else {
        return 0.0;
    };
    let offsets: Vec<i32> = account
        .neighbors
        .iter()
        .filter_map(|n| n.tz_offset_minutes)
        .collect();
    if offsets.is_empty() {
        return 0.0;
    }
    let far = offsets
        .iter()
        .filter(|&&o| (o - own).abs() > TZ_MISMATCH_MINUTES)
        .count();
    far as f64 / offsets.len() as f64
}

/// Ratio of the recent posting rate (over the window spanned by `posts`) to
/// the lifetime rate implied by `statuses_count` and the account age, with
/// the lifetime rate floored at one post per lifetime. Large values flag
/// accounts that post heavily but report few lifetime statuses, a proxy for
/// content deletion. 0.0 when fewer than two recent posts are available.
pub fn deletion_mismatch(account: &Account) -> f64 {
    let (Some(age), Some(span)) = (age_days_of(account), recent_span_days(account)) else {
        return 0.0;
    };
    let age = age.max(MIN_SPAN_DAYS);
    let span = span.max(MIN_SPAN_DAYS);
    let lifetime_rate = (account.statuses_count.max(1)) as f64 / age;
    let recent_rate = account.posts.len() as f64 / span;
    recent_rate / lifetime_rate
}

/// Entropy (bits) of the distribution of client/device labels over posts.
pub fn source_entropy(account: &Account) -> f64 {
    entropy_bits(account.posts.iter().map(|p| p.source.as_str()))
}

fn mention_handles(text: &str) -> impl Iterator<Item = String> + '_ {
    text.split_whitespace().filter_map(|tok| {
        let tok = tok.strip_prefix('@')?;
        let handle: String = tok
            .chars()
            .take_while(|c| c.is_alphanumeric() || *c == '_')
            .collect();
        if handle.is_empty() {
            None
        } else {
            Some(handle.to_ascii_lowercase())
        }
    })
}

/// Computes the full standard feature table for one account.
fn compute_standard(account: &Account) -> BTreeMap<&'static str, f64> {
    let posts = &account.posts;
    let n_posts = posts.len();
    let mut out = BTreeMap::new();
    let mut put = |name: &'static str, value: f64| {
        out.insert(name, value);
    };

    // user_meta
    let age = age_days_of(account);
    put("age_days", age.unwrap_or(0.0));
    put("followers_log1p", (account.followers_count as f64).ln_1p());
    put("friends_log1p", (account.friends_count as f64).ln_1p());
    put("statuses_log1p", (account.statuses_count as f64).ln_1p());
    put(
        "follower_friend_ratio",
        (account.followers_count as f64 + 1.0) / (account.friends_count as f64 + 1.0),
    );
    put("screen_name_length", account.screen_name.chars().count() as f64);
    put(
        "screen_name_digit_count",
        account
            .screen_name
            .chars()
            .filter(|c| c.is_ascii_digit())
            .count() as f64,
    );
    put("description_length", account.description.chars().count() as f64);
    put(
        "lifetime_post_rate",
        match age {
            Some(a) => account.statuses_count as f64 / a.max(MIN_SPAN_DAYS),
            None => 0.0,
        },
    );
    put("deletion_mismatch_log1p", deletion_mismatch(account).ln_1p());
    put("has_description", f64::from(!account.description.is_empty()));
    put("has_timezone", f64::from(account.tz_offset_minutes.is_some()));

    // friend_meta
    put("neighbor_count", account.neighbors.len() as f64);
    put("neighbor_lang_match_mean", neighbor_language_match(account));
    put(
        "neighbor_lang_match_median",
        neighbor_language_match_median(account),
    );
    put("timezone_mismatch", timezone_mismatch(account));
    put(
        "follower_relation_fraction",
        if account.neighbors.is_empty() {
            0.5
        } else {
            account
                .neighbors
                .iter()
                .filter(|n| n.relation == NeighborRelation::Follower)
                .count() as f64
                / account.neighbors.len() as f64
        },
    );

    // network
    put(
        "repost_fraction",
        if n_posts == 0 {
            0.5
        } else {
            posts.iter().filter(|p| p.is_repost).count() as f64 / n_posts as f64
        },
    );
    put(
        "mention_rate",
        if n_posts == 0 {
            0.0
        } else {
            posts.iter().map(|p| f64::from(p.mention_count)).sum::<f64>() / n_posts as f64
        },
    );
    put(
        "distinct_mention_ratio",
        if n_posts == 0 {
            0.5
        } else {
            let distinct: BTreeSet<String> =
                posts.iter().flat_map(|p| mention_handles(&p.text)).collect();
            distinct.len() as f64 / n_posts as f64
        },
    );
    put(
        "hashtag_rate",
        if n_posts == 0 {
            0.0
        } else {
            posts.iter().map(|p| f64::from(p.hashtag_count)).sum::<f64>() / n_posts as f64
        },
    );

    // content_language
    let word_counts: Vec<f64> = posts
        .iter()
        .map(|p| p.text.split_whitespace().count() as f64)
        .collect();
    put("words_per_post_mean", mean(&word_counts));
    put("words_per_post_std", pop_std(&word_counts));
    let char_counts: Vec<f64> = posts.iter().map(|p| p.text.chars().count() as f64).collect();
    put("chars_per_post_mean", mean(&char_counts));
    put("chars_per_post_std", pop_std(&char_counts));
    put(
        "url_rate",
        if n_posts == 0 {
            0.0
        } else {
            posts.iter().map(|p| f64::from(p.url_count)).sum::<f64>() / n_posts as f64
        },
    );
    put("lexical_diversity", {
        let mut total = 0usize;
        let mut distinct = BTreeSet::new();
        for p in posts {
            for tok in p.text.split_whitespace() {
                total += 1;
                distinct.insert(tok.to_ascii_lowercase());
            }
        }
        if total == 0 {
            0.5
        } else {
            distinct.len() as f64 / total as f64
        }
    });
    put(
        "duplicate_post_fraction",
        if n_posts == 0 {
            0.5
        } else {
            let distinct: BTreeSet<&str> = posts.iter().map(|p| p.text.as_str()).collect();
            1.0 - distinct.len() as f64 / n_posts as f64
        },
    );
    put(
        "post_lang_entropy",
        entropy_bits(posts.iter().map(|p| p.lang.to_ascii_lowercase())),
    );
    put(
        "post_lang_match_fraction",
        if n_posts == 0 || account.lang.is_empty() {
            0.5
        } else {
            let lang = account.lang.to_ascii_lowercase();
            posts
                .iter()
                .filter(|p| p.lang.to_ascii_lowercase() == lang)
                .count() as f64
                / n_posts as f64
        },
    );

    // sentiment
    let valences: Vec<f64> = posts.iter().map(|p| sentiment::text_valence(&p.text)).collect();
    put("valence_mean", mean(&valences));
    put("valence_std", pop_std(&valences));
    put(
        "positive_post_fraction",
        if n_posts == 0 {
            0.5
        } else {
            valences.iter().filter(|&&v| v > 0.0).count() as f64 / n_posts as f64
        },
    );
    put(
        "negative_post_fraction",
        if n_posts == 0 {
            0.5
        } else {
            valences.iter().filter(|&&v| v < 0.0).count() as f64 / n_posts as f64
        },
    );

    // temporal
    let gaps: Vec<f64> = posts
        .windows(2)
        .map(|w| (w[0].created_at - w[1].created_at).num_seconds().max(0) as f64)
        .collect();
    let log_gaps: Vec<f64> = gaps.iter().map(|g| g.ln_1p()).collect();
    put("gap_log_mean", mean(&log_gaps));
    put("gap_log_std", pop_std(&log_gaps));
    put(
        "gap_log_min",
        if log_gaps.is_empty() {
            0.0
        } else {
            log_gaps.iter().copied().fold(f64::INFINITY, f64::min)
        },
    );
    put("gap_cv", {
        let m = mean(&gaps);
        if gaps.is_empty() || m <= 0.0 {
            0.0
        } else {
            pop_std(&gaps) / m
        }
    });
    put(
        "hour_entropy",
        entropy_bits(posts.iter().map(|p| p.created_at.hour())),
    );
    put(
        "weekday_entropy",
        entropy_bits(posts.iter().map(|p| p.created_at.weekday().num_days_from_monday())),
    );
    put(
        "recent_post_rate",
        match recent_span_days(account) {
            Some(span) => n_posts as f64 / span.max(MIN_SPAN_DAYS),
            None => 0.0,
        },
    );
    put("source_entropy", source_entropy(account));

    out
}

/// Extracts the feature vector for `account` under `schema`.
///
/// Total on valid accounts: unknown schema names and non-finite intermediate
/// values fall back to the schema default.
pub fn extract(account: &Account, schema: &Arc<FeatureSchema>) -> FeatureVector {
    let computed = compute_standard(account);
    let values = schema
        .features()
        .iter()
        .map(|d| {
            let v = computed.get(d.name.as_str()).copied().unwrap_or(d.default);
            if v.is_finite() {
                v
            } else {
                d.default
            }
        })
        .collect();
    FeatureVector {
        schema: Arc::clone(schema),
        values,
    }
}

/// Extracts features for a batch of accounts, in parallel when the
/// `parallel` feature is enabled.
pub fn extract_all(accounts: &[Account], schema: &Arc<FeatureSchema>) -> Vec<FeatureVector> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        accounts
            .par_iter()
            .map(|a| extract(a, schema))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        extract_all_sequential(accounts, schema)
    }
}

/// Sequential reference path for [`extract_all`].
pub fn extract_all_sequential(
    accounts: &[Account],
    schema: &Arc<FeatureSchema>,
) -> Vec<FeatureVector> {
    accounts.iter().map(|a| extract(a, schema)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::account::{Account, NeighborSummary, Post};
    use approx::assert_abs_diff_eq;
    use chrono::{DateTime, TimeZone, Utc};

    fn ts(secs: i64) -> DateTime<Utc> {
        Utc.timestamp_opt(secs, 0).unwrap()
    }

    fn post_at(secs: i64, source: &str) -> Post {
        Post {
            text: "just a plain update".into(),
            created_at: ts(secs),
            source: source.into(),
            lang: "en".into(),
            url_count: 0,
            hashtag_count: 0,
            mention_count: 0,
            is_repost: false,
        }
    }

    fn bare_account(posts: Vec<Post>) -> Account {
        Account {
            id: "t".into(),
            screen_name: "tester_01".into(),
            created_at: ts(0),
            followers_count: 10,
            friends_count: 10,
            statuses_count: posts.len() as u64,
            description: "hello".into(),
            lang: "en".into(),
            tz_offset_minutes: None,
            posts,
            neighbors: vec![],
        }
    }

    fn neighbor(lang: &str, tz: Option<i32>, relation: NeighborRelation) -> NeighborSummary {
        NeighborSummary {
            lang: lang.into(),
            tz_offset_minutes: tz,
            relation,
        }
    }

    #[test]
    fn source_entropy_single_source_is_zero() {
        let a = bare_account(vec![post_at(3000, "web"), post_at(2000, "web"), post_at(1000, "web")]);
        assert_eq!(source_entropy(&a), 0.0);
    }

    #[test]
    fn source_entropy_uniform_two_sources_is_one_bit() {
        let a = bare_account(vec![
            post_at(4000, "web"),
            post_at(3000, "api"),
            post_at(2000, "web"),
            post_at(1000, "api"),
        ]);
        assert_abs_diff_eq!(source_entropy(&a), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn deletion_mismatch_matches_direct_rate_arithmetic() {
        // 500 recent posts spanning exactly two days; account created 1825
        // days before the newest post; 2325 lifetime statuses.
        let newest = 1825 * 86_400;
        let span = 2 * 86_400;
        let mut posts = Vec::new();
        for i in 0..500i64 {
            let t = newest - (span * i) / 499;
            posts.push(post_at(t, "web"));
        }
        let mut account = bare_account(posts);
        account.created_at = ts(0);
        account.statuses_count = 2325;

        // Oracle: recent rate 500/2 per day, lifetime 2325/1825 per day.
        let lifetime = 2325.0 / 1825.0;
        let recent = 500.0 / 2.0;
        let expected = recent / lifetime;
        assert_abs_diff_eq!(expected, 196.23655913978494, epsilon = 1e-9);
        assert_abs_diff_eq!(deletion_mismatch(&account), expected, epsilon = 1e-9);

        let vec = extract(&account, &FeatureSchema::standard());
        assert_abs_diff_eq!(
            vec.get("deletion_mismatch_log1p").unwrap(),
            expected.ln_1p(),
            epsilon = 1e-9
        );
    }

    #[test]
    fn neighbor_language_match_counts_fractions() {
        let mut a = bare_account(vec![]);
        a.neighbors = (0..10)
            .map(|_| neighbor("en", None, NeighborRelation::Friend))
            .collect();
        assert_eq!(neighbor_language_match(&a), 1.0);

        a.neighbors = vec![
            neighbor("en", None, NeighborRelation::Friend),
            neighbor("ru", None, NeighborRelation::Friend),
            neighbor("es", None, NeighborRelation::Follower),
            neighbor("fr", None, NeighborRelation::Follower),
        ];
        assert_eq!(neighbor_language_match(&a), 0.25);

        a.neighbors.clear();
        assert_eq!(neighbor_language_match(&a), 0.5);

        a.neighbors = vec![neighbor("en", None, NeighborRelation::Friend)];
        a.lang = String::new();
        assert_eq!(neighbor_language_match(&a), 0.5);
    }

    #[test]
    fn timezone_mismatch_thresholds_at_two_hours() {
        let mut a = bare_account(vec![]);
        a.tz_offset_minutes = Some(-300);
        a.neighbors = (0..5)
            .map(|_| neighbor("en", Some(180), NeighborRelation::Friend))
            .collect();
        assert_eq!(timezone_mismatch(&a), 1.0);

        a.tz_offset_minutes = Some(0);
        a.neighbors = (0..5)
            .map(|_| neighbor("en", Some(0), NeighborRelation::Friend))
            .collect();
        assert_eq!(timezone_mismatch(&a), 0.0);

        a.neighbors = vec![
            neighbor("en", Some(60), NeighborRelation::Friend),
            neighbor("en", Some(600), NeighborRelation::Friend),
        ];
        assert_eq!(timezone_mismatch(&a), 0.5);

        a.tz_offset_minutes = None;
        assert_eq!(timezone_mismatch(&a), 0.0);
        a.tz_offset_minutes = Some(0);
        a.neighbors = vec![neighbor("en", None, NeighborRelation::Friend)];
        assert_eq!(timezone_mismatch(&a), 0.0);
    }

    #[test]
    fn group_slices_partition_the_schema() {
        let schema = FeatureSchema::standard();
        let a = bare_account(vec![post_at(2000, "web"), post_at(1000, "api")]);
        let full = extract(&a, &schema);

        let mut seen = std::collections::BTreeSet::new();
        let mut total = 0usize;
        for group in FeatureGroup::ALL {
            let slice = full.group_slice(group);
            for d in slice.schema().features() {
                assert_eq!(d.group, group);
                assert!(seen.insert(d.name.clone()), "{} in two groups", d.name);
            }
            total += slice.schema().len();
            // Idempotence.
            let twice = slice.group_slice(group);
            assert_eq!(twice.values(), slice.values());
            assert_eq!(twice.schema().len(), slice.schema().len());
        }
        assert_eq!(total, schema.len());
    }

    #[test]
    fn sentiment_slice_of_postless_account_is_all_defaults() {
        let mut a = bare_account(vec![]);
        a.statuses_count = 0;
        let full = extract(&a, &FeatureSchema::standard());
        let slice = full.group_slice(FeatureGroup::Sentiment);
        assert!(!slice.schema().is_empty());
        for (d, v) in slice.schema().features().iter().zip(slice.values()) {
            assert_eq!(*v, d.default, "{} should be imputed", d.name);
        }
    }

    #[test]
    fn strip_linguistic_removes_exactly_the_flagged_features() {
        let schema = FeatureSchema::standard();
        let a = bare_account(vec![post_at(2000, "web"), post_at(1000, "web")]);
        let full = extract(&a, &schema);
        let stripped = full.strip_linguistic().unwrap();
        assert!(stripped.schema().features().iter().all(|d| !d.linguistic));
        let expected = schema.features().iter().filter(|d| !d.linguistic).count();
        assert_eq!(stripped.schema().len(), expected);

        // Idempotent, including the schema version/fingerprint.
        let twice = stripped.strip_linguistic().unwrap();
        assert_eq!(twice.values(), stripped.values());
        assert_eq!(
            twice.schema_fingerprint(),
            stripped.schema_fingerprint()
        );

        // Temporal and user_meta are untouched.
        for group in [FeatureGroup::Temporal, FeatureGroup::UserMeta] {
            let before = full.group_slice(group).schema().len();
            let after = stripped.group_slice(group).schema().len();
            assert_eq!(before, after);
        }
    }

    #[test]
    fn stripped_vectors_ignore_post_text() {
        let schema = FeatureSchema::standard();
        let mut a = bare_account(vec![post_at(2000, "web"), post_at(1000, "web")]);
        let mut b = a.clone();
        b.posts[0].text = "completely different wonderful text @someone".into();
        b.posts[1].text = "yet another one".into();
        a.validate().unwrap();
        b.validate().unwrap();

        let sa = extract(&a, &schema).strip_linguistic().unwrap();
        let sb = extract(&b, &schema).strip_linguistic().unwrap();
        assert_eq!(sa.values(), sb.values());
    }

    #[test]
    fn all_linguistic_schema_cannot_be_stripped() {
        let defs: Vec<FeatureDef> = FeatureSchema::standard()
            .features()
            .iter()
            .filter(|d| d.linguistic)
            .cloned()
            .collect();
        let schema = FeatureSchema::new("test", defs);
        assert!(schema.strip_linguistic().is_err());
    }

    #[test]
    fn schema_fingerprint_tracks_content() {
        let standard = FeatureSchema::standard();
        let again = FeatureSchema::standard();
        assert_eq!(standard.fingerprint(), again.fingerprint());

        let mut defs: Vec<FeatureDef> = standard.features().to_vec();
        defs[0].default = 123.0;
        let tweaked = FeatureSchema::new(standard.version().to_string(), defs);
        assert_ne!(standard.fingerprint(), tweaked.fingerprint());

        // Fingerprint survives serialization because it is recomputed.
        let json = serde_json::to_string(&*standard).unwrap();
        let back: FeatureSchema = serde_json::from_str(&json).unwrap();
        assert_eq!(back.fingerprint(), standard.fingerprint());
    }

    #[test]
    fn unknown_group_name_fails_to_parse() {
        assert!("user_meta".parse::<FeatureGroup>().is_ok());
        assert!("user-meta".parse::<FeatureGroup>().is_err());
        assert!("timing".parse::<FeatureGroup>().is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_post(newest: i64) -> impl Strategy<Value = (i64, Post)> {
            (
                0..newest,
                "[ @a-z0-9#]{0,40}",
                proptest::sample::select(vec!["web", "api", "scheduler", ""]),
                proptest::sample::select(vec!["en", "es", "", "EN"]),
                0u32..5,
                0u32..5,
                0u32..5,
                any::<bool>(),
            )
                .prop_map(
                    |(t, text, source, lang, urls, tags, mentions, repost)| {
                        (
                            t,
                            Post {
                                text,
                                created_at: Utc.timestamp_opt(t, 0).unwrap(),
                                source: source.into(),
                                lang: lang.into(),
                                url_count: urls,
                                hashtag_count: tags,
                                mention_count: mentions,
                                is_repost: repost,
                            },
                        )
                    },
                )
        }

        fn arb_account() -> impl Strategy<Value = Account> {
            let newest = 400 * 86_400i64;
            (
                proptest::collection::vec(arb_post(newest), 0..12),
                0u64..100_000,
                0u64..100_000,
                0u64..1_000_000,
                proptest::option::of(-720i32..720),
                proptest::collection::vec(
                    (
                        proptest::sample::select(vec!["en", "ru", ""]),
                        proptest::option::of(-720i32..720),
                        any::<bool>(),
                    ),
                    0..8,
                ),
                "[a-z0-9_]{1,15}",
                proptest::sample::select(vec!["en", ""]),
            )
                .prop_map(
                    |(mut stamped, followers, friends, statuses, tz, neighbors, name, lang)| {
                        stamped.sort_by_key(|(t, _)| std::cmp::Reverse(*t));
                        let posts: Vec<Post> = stamped.into_iter().map(|(_, p)| p).collect();
                        let statuses_count = statuses.max(posts.len() as u64);
                        Account {
                            id: "prop".into(),
                            screen_name: name,
                            created_at: Utc.timestamp_opt(0, 0).unwrap(),
                            followers_count: followers,
                            friends_count: friends,
                            statuses_count,
                            description: String::new(),
                            lang: lang.into(),
                            tz_offset_minutes: tz,
                            posts,
                            neighbors: neighbors
                                .into_iter()
                                .map(|(l, t, f)| NeighborSummary {
                                    lang: l.into(),
                                    tz_offset_minutes: t,
                                    relation: if f {
                                        NeighborRelation::Follower
                                    } else {
                                        NeighborRelation::Friend
                                    },
                                })
                                .collect(),
                        }
                    },
                )
        }

        proptest! {
            #[test]
            fn extraction_is_total_and_finite(account in arb_account()) {
                account.validate().unwrap();
                let schema = FeatureSchema::standard();
                let vec = extract(&account, &schema);
                prop_assert_eq!(vec.values().len(), schema.len());
                for (d, v) in schema.features().iter().zip(vec.values()) {
                    prop_assert!(v.is_finite(), "{} = {}", d.name, v);
                }
                // Determinism.
                let again = extract(&account, &schema);
                prop_assert_eq!(vec.values(), again.values());
            }

            #[test]
            fn entropies_respect_symbol_count_bounds(account in arb_account()) {
                let schema = FeatureSchema::standard();
                let vec = extract(&account, &schema);
                let posts = &account.posts;

                let distinct_sources = posts
                    .iter()
                    .map(|p| p.source.as_str())
                    .collect::<std::collections::BTreeSet<_>>()
                    .len()
                    .max(1);
                let h = vec.get("source_entropy").unwrap();
                prop_assert!(h >= 0.0 && h <= (distinct_sources as f64).log2() + 1e-9);

                let distinct_hours = posts
                    .iter()
                    .map(|p| p.created_at.hour())
                    .collect::<std::collections::BTreeSet<_>>()
                    .len()
                    .max(1);
                let h = vec.get("hour_entropy").unwrap();
                prop_assert!(h >= 0.0 && h <= (distinct_hours as f64).log2() + 1e-9);

                let distinct_langs = posts
                    .iter()
                    .map(|p| p.lang.to_ascii_lowercase())
                    .collect::<std::collections::BTreeSet<_>>()
                    .len()
                    .max(1);
                let h = vec.get("post_lang_entropy").unwrap();
                prop_assert!(h >= 0.0 && h <= (distinct_langs as f64).log2() + 1e-9);
            }
        }
    }
}
