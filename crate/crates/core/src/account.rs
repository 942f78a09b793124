//! Account records and labeled corpora.
//!
//! An [`Account`] is a snapshot of one social-media account: profile
//! metadata, its most recent posts (newest first), and optional summaries of
//! its neighborhood (friends and followers). This is the minimal subset of
//! platform data the feature extractor consumes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Class label attached to a training account.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Human,
    Bot,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Human => "human",
            Label::Bot => "bot",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = Error;

    /// Case-insensitive; only `human` and `bot` are valid.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "human" => Ok(Label::Human),
            "bot" => Ok(Label::Bot),
            other => Err(Error::Validation(format!(
                "unknown label {other:?}: expected \"human\" or \"bot\""
            ))),
        }
    }
}

/// One recent post by an account.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Post {
    pub text: String,
    pub created_at: DateTime<Utc>,
    /// Client or device label the post was published through.
    pub source: String,
    /// Language tag of the post, or empty when unknown.
    #[serde(default)]
    pub lang: String,
    pub url_count: u32,
    pub hashtag_count: u32,
    pub mention_count: u32,
    pub is_repost: bool,
}

/// Relation of a neighbor to the account under examination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NeighborRelation {
    /// The account follows the neighbor.
    Friend,
    /// The neighbor follows the account.
    Follower,
}

/// Compressed view of one friend or follower.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NeighborSummary {
    #[serde(default)]
    pub lang: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tz_offset_minutes: Option<i32>,
    pub relation: NeighborRelation,
}

/// One social-media account with profile metadata, recent posts (most recent
/// first), and optional neighbor summaries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Account {
    pub id: String,
    pub screen_name: String,
    pub created_at: DateTime<Utc>,
    pub followers_count: u64,
    pub friends_count: u64,
    /// Lifetime post total reported by the platform, which may exceed the
    /// number of posts retained in `posts`.
    pub statuses_count: u64,
    #[serde(default)]
    pub description: String,
    /// IANA-style language tag, or empty when unknown.
    #[serde(default)]
    pub lang: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tz_offset_minutes: Option<i32>,
    #[serde(default)]
    pub posts: Vec<Post>,
    #[serde(default)]
    pub neighbors: Vec<NeighborSummary>,
}

impl Account {
    /// Checks the record-level invariants: posts sorted non-increasing by
    /// timestamp, and the account created no later than its newest post.
    pub fn validate(&self) -> Result<()> {
        if let Some(newest) = self.posts.first() {
            if self.created_at > newest.created_at {
                return Err(Error::Validation(format!(
                    "account {:?}: created_at {} is after newest post {}",
                    self.id, self.created_at, newest.created_at
                )));
            }
        }
        for pair in self.posts.windows(2) {
            if pair[0].created_at < pair[1].created_at {
                return Err(Error::Validation(format!(
                    "account {:?}: posts are not sorted newest-first",
                    self.id
                )));
            }
        }
        Ok(())
    }

    /// Newest post timestamp, when any posts are present.
    pub fn newest_post_at(&self) -> Option<DateTime<Utc>> {
        self.posts.first().map(|p| p.created_at)
    }
}

/// A named set of labeled accounts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledCorpus {
    pub name: String,
    pub entries: Vec<(Account, Label)>,
}

impl LabeledCorpus {
    /// Builds a corpus, enforcing unique account ids.
    pub fn new(name: impl Into<String>, entries: Vec<(Account, Label)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (account, _) in &entries {
            if !seen.insert(account.id.as_str()) {
                return Err(Error::Validation(format!(
                    "duplicate account id {:?} in corpus",
                    account.id
                )));
            }
        }
        Ok(LabeledCorpus {
            name: name.into(),
            entries,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Count of (humans, bots).
    pub fn class_counts(&self) -> (usize, usize) {
        let bots = self
            .entries
            .iter()
            .filter(|(_, l)| *l == Label::Bot)
            .count();
        (self.entries.len() - bots, bots)
    }

    /// Errors unless both classes are present.
    pub fn require_both_classes(&self) -> Result<()> {
        let (humans, bots) = self.class_counts();
        if humans == 0 {
            Err(Error::SingleClass(format!(
                "corpus {:?} contains only bots",
                self.name
            )))
        } else if bots == 0 {
            Err(Error::SingleClass(format!(
                "corpus {:?} contains only humans",
                self.name
            )))
        } else {
            Ok(())
        }
    }
}
