//! Seeded synthetic corpus generator.
//!
//! Stands in for real labeled account collections at desk scale. Humans are
//! drawn from one base behavioral profile; each bot archetype is a second
//! profile, and `separation` linearly interpolates every generation
//! parameter between the two. At `separation = 0` bots are sampled from the
//! exact human profile, so the classes are statistically indistinguishable;
//! at `separation = 1` each archetype sits at its extreme.
//!
//! Generation is a pure function of [`SynthConfig`]: every account draws
//! from its own counter-based RNG stream.

use std::fmt;
use std::str::FromStr;

use chrono::{DateTime, TimeZone, Utc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, LogNormal, Normal, Poisson};
use serde::{Deserialize, Serialize};

use crate::account::{Account, Label, LabeledCorpus, NeighborRelation, NeighborSummary, Post};
use crate::error::{Error, Result};
use crate::sentiment;

/// Fixed generation epoch: all synthetic timestamps are relative to this
/// instant, keeping output byte-stable across runs and machines.
pub fn generation_epoch() -> DateTime<Utc> {
    Utc.with_ymd_and_hms(2025, 1, 1, 0, 0, 0).unwrap()
}

/// Bot behavioral archetypes, mirroring the kinds of labeled bot
/// collections commonly shared for training.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Archetype {
    /// Burst posting, heavy URLs and hashtags, duplicated text, one client.
    Spam,
    /// Near-zero posts, huge friend count, sparse profile.
    FakeFollower,
    /// Very few posts but realistic profile details, link-heavy content.
    PornLike,
    /// Repost amplification with timezone and audience-language mismatch.
    Political,
}

impl Archetype {
    pub const ALL: [Archetype; 4] = [
        Archetype::Spam,
        Archetype::FakeFollower,
        Archetype::PornLike,
        Archetype::Political,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Archetype::Spam => "spam",
            Archetype::FakeFollower => "fake_follower",
            Archetype::PornLike => "porn_like",
            Archetype::Political => "political",
        }
    }
}

impl fmt::Display for Archetype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Archetype {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "spam" => Ok(Archetype::Spam),
            "fake_follower" => Ok(Archetype::FakeFollower),
            "porn_like" => Ok(Archetype::PornLike),
            "political" => Ok(Archetype::Political),
            other => Err(Error::Validation(format!("unknown archetype {other:?}"))),
        }
    }
}

/// Nonnegative weights over the four archetypes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArchetypeMix {
    pub spam: f64,
    pub fake_follower: f64,
    pub porn_like: f64,
    pub political: f64,
}

impl Default for ArchetypeMix {
    fn default() -> Self {
        ArchetypeMix {
            spam: 0.25,
            fake_follower: 0.25,
            porn_like: 0.25,
            political: 0.25,
        }
    }
}

impl ArchetypeMix {
    /// A mix concentrated on a single archetype.
    pub fn only(archetype: Archetype) -> Self {
        let mut mix = ArchetypeMix {
            spam: 0.0,
            fake_follower: 0.0,
            porn_like: 0.0,
            political: 0.0,
        };
        mix.set(archetype, 1.0);
        mix
    }

    pub fn set(&mut self, archetype: Archetype, weight: f64) {
        match archetype {
            Archetype::Spam => self.spam = weight,
            Archetype::FakeFollower => self.fake_follower = weight,
            Archetype::PornLike => self.porn_like = weight,
            Archetype::Political => self.political = weight,
        }
    }

    fn weights(&self) -> [f64; 4] {
        [self.spam, self.fake_follower, self.porn_like, self.political]
    }

    fn validate(&self, n_bots: usize) -> Result<()> {
        let w = self.weights();
        if w.iter().any(|&x| x < 0.0 || !x.is_finite()) {
            return Err(Error::Validation(
                "archetype weights must be finite and nonnegative".into(),
            ));
        }
        if n_bots > 0 && w.iter().sum::<f64>() <= 0.0 {
            return Err(Error::Validation(
                "archetype weights must sum to a positive value when bots are requested".into(),
            ));
        }
        Ok(())
    }

    fn pick(&self, u: f64) -> Archetype {
        let w = self.weights();
        let total: f64 = w.iter().sum();
        let mut acc = 0.0;
        for (i, &wi) in w.iter().enumerate() {
            acc += wi / total;
            if u < acc {
                return Archetype::ALL[i];
            }
        }
        Archetype::Political
    }
}

/// Configuration for [`generate_synthetic`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub seed: u64,
    pub n_humans: usize,
    pub n_bots: usize,
    pub mix: ArchetypeMix,
    /// Class distinguishability in `[0, 1]`; 0 draws both classes from the
    /// identical distribution.
    pub separation: f64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            seed: 0,
            n_humans: 0,
            n_bots: 0,
            mix: ArchetypeMix::default(),
            separation: 0.8,
        }
    }
}

/// Every distribution parameter the account sampler consumes. Bots use a
/// fieldwise interpolation between [`StyleParams::human`] and one archetype.
#[derive(Debug, Clone, Copy)]
struct StyleParams {
    followers_ln_mu: f64,
    followers_ln_sd: f64,
    friends_ln_mu: f64,
    friends_ln_sd: f64,
    /// Lifetime posts per day implied by `statuses_count`.
    lifetime_rate: f64,
    age_min_days: f64,
    age_max_days: f64,
    n_posts_mean: f64,
    /// ln(hours) location/scale of inter-post gaps.
    gap_ln_mu: f64,
    gap_ln_sd: f64,
    url_rate: f64,
    hashtag_rate: f64,
    mention_rate: f64,
    /// Size of the per-account pool of distinct handles used in mentions.
    mention_pool: f64,
    repost_prob: f64,
    dup_prob: f64,
    desc_prob: f64,
    name_digit_prob: f64,
    name_digit_count: f64,
    post_lang_match_prob: f64,
    neighbor_count_mean: f64,
    neighbor_lang_match_prob: f64,
    neighbor_tz_far_prob: f64,
    follower_relation_prob: f64,
    tz_present_prob: f64,
    neighbor_tz_present_prob: f64,
    positive_word_rate: f64,
    negative_word_rate: f64,
    /// Probability a post is published through the account's bot client.
    bot_source_prob: f64,
}

impl StyleParams {
    fn human() -> Self {
        StyleParams {
            followers_ln_mu: 4.6,
            followers_ln_sd: 1.4,
            friends_ln_mu: 4.8,
            friends_ln_sd: 1.1,
            lifetime_rate: 2.2,
            age_min_days: 200.0,
            age_max_days: 3000.0,
            n_posts_mean: 28.0,
            gap_ln_mu: 2.2,
            gap_ln_sd: 1.1,
            url_rate: 0.12,
            hashtag_rate: 0.35,
            mention_rate: 0.55,
            mention_pool: 40.0,
            repost_prob: 0.25,
            dup_prob: 0.03,
            desc_prob: 0.85,
            name_digit_prob: 0.25,
            name_digit_count: 2.0,
            post_lang_match_prob: 0.92,
            neighbor_count_mean: 18.0,
            neighbor_lang_match_prob: 0.85,
            neighbor_tz_far_prob: 0.15,
            follower_relation_prob: 0.5,
            tz_present_prob: 0.75,
            neighbor_tz_present_prob: 0.7,
            positive_word_rate: 0.18,
            negative_word_rate: 0.10,
            bot_source_prob: 0.0,
        }
    }

    fn archetype(a: Archetype) -> Self {
        let h = StyleParams::human();
        match a {
            Archetype::Spam => StyleParams {
                followers_ln_mu: 2.8,
                friends_ln_mu: 6.3,
                lifetime_rate: 1.8,
                n_posts_mean: 40.0,
                gap_ln_mu: -2.8,
                gap_ln_sd: 0.15,
                url_rate: 2.4,
                hashtag_rate: 2.8,
                mention_rate: 0.9,
                mention_pool: 6.0,
                repost_prob: 0.05,
                dup_prob: 0.85,
                desc_prob: 0.4,
                name_digit_prob: 0.85,
                name_digit_count: 4.0,
                neighbor_lang_match_prob: 0.6,
                tz_present_prob: 0.35,
                positive_word_rate: 0.45,
                negative_word_rate: 0.04,
                bot_source_prob: 0.97,
                ..h
            },
            Archetype::FakeFollower => StyleParams {
                followers_ln_mu: 1.2,
                followers_ln_sd: 0.8,
                friends_ln_mu: 8.6,
                friends_ln_sd: 0.5,
                lifetime_rate: 0.02,
                n_posts_mean: 0.4,
                desc_prob: 0.1,
                name_digit_prob: 0.95,
                name_digit_count: 4.0,
                neighbor_count_mean: 30.0,
                follower_relation_prob: 0.05,
                tz_present_prob: 0.2,
                bot_source_prob: 0.9,
                ..h
            },
            Archetype::PornLike => StyleParams {
                followers_ln_mu: 4.0,
                friends_ln_mu: 5.5,
                lifetime_rate: 0.5,
                n_posts_mean: 3.5,
                gap_ln_mu: 3.0,
                url_rate: 1.9,
                hashtag_rate: 1.4,
                dup_prob: 0.3,
                desc_prob: 0.97,
                name_digit_prob: 0.6,
                name_digit_count: 3.0,
                positive_word_rate: 0.5,
                bot_source_prob: 0.9,
                ..h
            },
            Archetype::Political => StyleParams {
                lifetime_rate: 6.0,
                n_posts_mean: 42.0,
                gap_ln_mu: -0.5,
                gap_ln_sd: 0.5,
                hashtag_rate: 1.8,
                mention_rate: 2.6,
                mention_pool: 4.0,
                repost_prob: 0.93,
                dup_prob: 0.25,
                post_lang_match_prob: 0.75,
                neighbor_lang_match_prob: 0.08,
                neighbor_tz_far_prob: 0.92,
                tz_present_prob: 0.9,
                neighbor_tz_present_prob: 0.85,
                negative_word_rate: 0.35,
                bot_source_prob: 0.5,
                ..h
            },
        }
    }

    /// Fieldwise `h + t * (a - h)`.
    fn lerp(h: &StyleParams, a: &StyleParams, t: f64) -> StyleParams {
        let f = |x: f64, y: f64| x + t * (y - x);
        StyleParams {
            followers_ln_mu: f(h.followers_ln_mu, a.followers_ln_mu),
            followers_ln_sd: f(h.followers_ln_sd, a.followers_ln_sd),
            friends_ln_mu: f(h.friends_ln_mu, a.friends_ln_mu),
            friends_ln_sd: f(h.friends_ln_sd, a.friends_ln_sd),
            lifetime_rate: f(h.lifetime_rate, a.lifetime_rate),
            age_min_days: f(h.age_min_days, a.age_min_days),
            age_max_days: f(h.age_max_days, a.age_max_days),
            n_posts_mean: f(h.n_posts_mean, a.n_posts_mean),
            gap_ln_mu: f(h.gap_ln_mu, a.gap_ln_mu),
            gap_ln_sd: f(h.gap_ln_sd, a.gap_ln_sd),
            url_rate: f(h.url_rate, a.url_rate),
            hashtag_rate: f(h.hashtag_rate, a.hashtag_rate),
            mention_rate: f(h.mention_rate, a.mention_rate),
            mention_pool: f(h.mention_pool, a.mention_pool),
            repost_prob: f(h.repost_prob, a.repost_prob),
            dup_prob: f(h.dup_prob, a.dup_prob),
            desc_prob: f(h.desc_prob, a.desc_prob),
            name_digit_prob: f(h.name_digit_prob, a.name_digit_prob),
            name_digit_count: f(h.name_digit_count, a.name_digit_count),
            post_lang_match_prob: f(h.post_lang_match_prob, a.post_lang_match_prob),
            neighbor_count_mean: f(h.neighbor_count_mean, a.neighbor_count_mean),
            neighbor_lang_match_prob: f(h.neighbor_lang_match_prob, a.neighbor_lang_match_prob),
            neighbor_tz_far_prob: f(h.neighbor_tz_far_prob, a.neighbor_tz_far_prob),
            follower_relation_prob: f(h.follower_relation_prob, a.follower_relation_prob),
            tz_present_prob: f(h.tz_present_prob, a.tz_present_prob),
            neighbor_tz_present_prob: f(h.neighbor_tz_present_prob, a.neighbor_tz_present_prob),
            positive_word_rate: f(h.positive_word_rate, a.positive_word_rate),
            negative_word_rate: f(h.negative_word_rate, a.negative_word_rate),
            bot_source_prob: f(h.bot_source_prob, a.bot_source_prob),
        }
    }
}

const NAME_POOL: [&str; 24] = [
    "alder", "birch", "cedar", "dahlia", "elm", "fern", "garnet", "hazel", "iris", "juniper",
    "kestrel", "lark", "maple", "nettle", "oriole", "poplar", "quartz", "rowan", "sorrel",
    "thistle", "umber", "violet", "willow", "yarrow",
];

const VOCAB: [&str; 72] = [
    "about", "after", "again", "around", "because", "before", "between", "coffee", "could",
    "daily", "during", "evening", "every", "family", "found", "friend", "garden", "heard",
    "house", "laugh", "light", "little", "lunch", "market", "maybe", "money", "month", "morning",
    "music", "never", "night", "often", "other", "people", "photo", "place", "plan", "point",
    "radio", "rain", "reading", "right", "river", "road", "same", "school", "show", "since",
    "sleep", "small", "some", "song", "start", "still", "story", "street", "summer", "there",
    "thing", "think", "those", "today", "together", "train", "under", "until", "walk", "watch",
    "weather", "weekend", "while", "window",
];

const FOREIGN_LANGS: [&str; 4] = ["es", "fr", "ru", "de"];
const TZ_POOL: [i32; 12] = [-480, -420, -360, -300, -240, -180, 0, 60, 120, 180, 330, 540];
const HUMAN_SOURCES: [&str; 4] = ["web", "android", "iphone", "tablet"];
const HUMAN_SOURCE_WEIGHTS: [f64; 4] = [0.45, 0.30, 0.20, 0.05];
const BOT_SOURCES: [&str; 4] = ["autopost-api", "bulkposter", "scheduler-pro", "growthsuite"];
const HANDLE_POOL: [&str; 16] = [
    "newsfeed", "dailybrief", "trendwatch", "localvoice", "citydesk", "openmic", "fieldnotes",
    "nightowl", "sunriseclub", "bikelane", "parkbench", "bookclub", "filmreel", "matchday",
    "stargazer", "breadbaker",
];

struct Sampler<'a> {
    rng: &'a mut ChaCha8Rng,
}

impl Sampler<'_> {
    fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    fn chance(&mut self, p: f64) -> bool {
        self.uniform() < p.clamp(0.0, 1.0)
    }

    fn normal(&mut self, mu: f64, sd: f64) -> f64 {
        Normal::new(mu, sd.max(1e-9)).unwrap().sample(self.rng)
    }

    fn log_normal(&mut self, mu: f64, sd: f64) -> f64 {
        LogNormal::new(mu, sd.max(1e-9)).unwrap().sample(self.rng)
    }

    fn poisson(&mut self, mean: f64) -> u64 {
        if mean <= 1e-9 {
            return 0;
        }
        Poisson::new(mean).unwrap().sample(self.rng) as u64
    }

    fn pick<'b, T: Copy>(&mut self, pool: &'b [T]) -> T {
        pool[self.rng.random_range(0..pool.len())]
    }

    fn pick_weighted<'b>(&mut self, pool: &'b [&'static str], weights: &[f64]) -> &'static str {
        let total: f64 = weights.iter().sum();
        let mut u = self.uniform() * total;
        for (item, w) in pool.iter().zip(weights) {
            if u < *w {
                return item;
            }
            u -= w;
        }
        pool[pool.len() - 1]
    }
}

fn sample_account(id: String, params: &StyleParams, rng: &mut ChaCha8Rng) -> Account {
    let epoch = generation_epoch();
    let mut s = Sampler { rng };

    let age_days = s.uniform() * (params.age_max_days - params.age_min_days) + params.age_min_days;
    let created_at = epoch - chrono::Duration::seconds((age_days * 86_400.0).round() as i64);

    let n_posts = (s.poisson(params.n_posts_mean) as usize).min(60);

    // Account-level style choices.
    let account_lang = if s.chance(0.05) { "" } else { "en" }.to_string();
    let tz_offset = if s.chance(params.tz_present_prob) {
        Some(s.pick(&TZ_POOL))
    } else {
        None
    };
    let base_name = s.pick(&NAME_POOL);
    let second = s.pick(&NAME_POOL);
    let mut screen_name = format!("{base_name}_{second}");
    if s.chance(params.name_digit_prob) {
        let digits = (params.name_digit_count + s.normal(0.0, 1.0))
            .round()
            .clamp(1.0, 8.0) as usize;
        for _ in 0..digits {
            let d = s.rng.random_range(0..10u32);
            screen_name.push(char::from_digit(d, 10).unwrap());
        }
    }
    let description = if s.chance(params.desc_prob) {
        let k = 3 + s.poisson(5.0).min(8) as usize;
        (0..k).map(|_| s.pick(&VOCAB)).collect::<Vec<_>>().join(" ")
    } else {
        String::new()
    };
    let bot_source = s.pick(&BOT_SOURCES);
    let canned: Vec<String> = (0..2)
        .map(|_| {
            let k = 4 + s.poisson(3.0).min(6) as usize;
            (0..k).map(|_| s.pick(&VOCAB)).collect::<Vec<_>>().join(" ")
        })
        .collect();
    let pool_size = params.mention_pool.round().clamp(1.0, 16.0) as usize;
    let handles: Vec<&'static str> = (0..pool_size).map(|_| s.pick(&HANDLE_POOL)).collect();

    // Post timeline, newest first.
    let mut posts = Vec::with_capacity(n_posts);
    if n_posts > 0 {
        let mut t = epoch - chrono::Duration::seconds(s.rng.random_range(0..86_400));
        for i in 0..n_posts {
            if i > 0 {
                let gap_hours = s.log_normal(params.gap_ln_mu, params.gap_ln_sd);
                let gap_secs = (gap_hours * 3600.0).round().max(1.0) as i64;
                t -= chrono::Duration::seconds(gap_secs);
            }
            if t <= created_at {
                break;
            }
            let is_repost = s.chance(params.repost_prob);
            let source = if s.chance(params.bot_source_prob) {
                bot_source
            } else {
                s.pick_weighted(&HUMAN_SOURCES, &HUMAN_SOURCE_WEIGHTS)
            };
            let mut text = if s.chance(params.dup_prob) {
                canned[i % canned.len()].clone()
            } else {
                let k = 3 + s.poisson(6.0).min(14) as usize;
                (0..k).map(|_| s.pick(&VOCAB)).collect::<Vec<_>>().join(" ")
            };
            if s.chance(params.positive_word_rate) {
                text.push(' ');
                text.push_str(s.pick(sentiment::positive_words()));
            }
            if s.chance(params.negative_word_rate) {
                text.push(' ');
                text.push_str(s.pick(sentiment::negative_words()));
            }
            let mention_count = s.poisson(params.mention_rate).min(6) as u32;
            for _ in 0..mention_count {
                let h = handles[s.rng.random_range(0..handles.len())];
                text.push_str(" @");
                text.push_str(h);
            }
            let lang = if s.chance(params.post_lang_match_prob) {
                if account_lang.is_empty() { "en" } else { account_lang.as_str() }.to_string()
            } else {
                s.pick(&FOREIGN_LANGS).to_string()
            };
            posts.push(Post {
                text,
                created_at: t,
                source: source.to_string(),
                lang,
                url_count: s.poisson(params.url_rate).min(6) as u32,
                hashtag_count: s.poisson(params.hashtag_rate).min(8) as u32,
                mention_count,
                is_repost,
            });
        }
    }

    let statuses_count = {
        let drift = s.normal(0.0, 0.15).exp();
        let implied = (params.lifetime_rate * age_days * drift).round().max(0.0) as u64;
        implied.max(posts.len() as u64)
    };
    let followers_count = s
        .log_normal(params.followers_ln_mu, params.followers_ln_sd)
        .round()
        .clamp(0.0, 5e7) as u64;
    let friends_count = s
        .log_normal(params.friends_ln_mu, params.friends_ln_sd)
        .round()
        .clamp(0.0, 5e7) as u64;

    let n_neighbors = (s.poisson(params.neighbor_count_mean) as usize).min(60);
    let base_offset = tz_offset.unwrap_or(0);
    let neighbors = (0..n_neighbors)
        .map(|_| {
            let lang = if s.chance(params.neighbor_lang_match_prob) {
                if account_lang.is_empty() { "en" } else { account_lang.as_str() }.to_string()
            } else {
                s.pick(&FOREIGN_LANGS).to_string()
            };
            let tz = if s.chance(params.neighbor_tz_present_prob) {
                let offset = if s.chance(params.neighbor_tz_far_prob) {
                    let sign = if s.chance(0.5) { 1 } else { -1 };
                    base_offset + sign * s.rng.random_range(180..=720)
                } else {
                    base_offset + s.pick(&[-60, 0, 0, 60])
                };
                Some(offset)
            } else {
                None
            };
            let relation = if s.chance(params.follower_relation_prob) {
                NeighborRelation::Follower
            } else {
                NeighborRelation::Friend
            };
            NeighborSummary {
                lang,
                tz_offset_minutes: tz,
                relation,
            }
        })
        .collect();

    Account {
        id,
        screen_name,
        created_at,
        followers_count,
        friends_count,
        statuses_count,
        description,
        lang: account_lang,
        tz_offset_minutes: tz_offset,
        posts,
        neighbors,
    }
}

/// Generates a labeled corpus deterministically from `cfg`.
pub fn generate_synthetic(cfg: &SynthConfig) -> Result<LabeledCorpus> {
    if cfg.n_humans + cfg.n_bots == 0 {
        return Err(Error::Validation(
            "zero-size corpus: n_humans + n_bots must be at least 1".into(),
        ));
    }
    if !(0.0..=1.0).contains(&cfg.separation) {
        return Err(Error::Validation(format!(
            "separation must lie in [0, 1], got {}",
            cfg.separation
        )));
    }
    cfg.mix.validate(cfg.n_bots)?;

    let human = StyleParams::human();
    let mut entries = Vec::with_capacity(cfg.n_humans + cfg.n_bots);

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..cfg.n_humans {
        rng.set_stream(2 * i as u64);
        let account = sample_account(format!("h{i:06}"), &human, &mut rng);
        entries.push((account, Label::Human));
    }
    for i in 0..cfg.n_bots {
        rng.set_stream(2 * i as u64 + 1);
        let archetype = cfg.mix.pick(rng.random::<f64>());
        let params = StyleParams::lerp(
            &human,
            &StyleParams::archetype(archetype),
            cfg.separation,
        );
        let account = sample_account(format!("b{i:06}"), &params, &mut rng);
        entries.push((account, Label::Bot));
    }

    LabeledCorpus::new(format!("synth-{}", cfg.seed), entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_given_config() {
        let cfg = SynthConfig {
            seed: 99,
            n_humans: 20,
            n_bots: 20,
            ..SynthConfig::default()
        };
        let a = generate_synthetic(&cfg).unwrap();
        let b = generate_synthetic(&cfg).unwrap();
        let ja = serde_json::to_string(&a).unwrap();
        let jb = serde_json::to_string(&b).unwrap();
        assert_eq!(ja, jb);
    }

    #[test]
    fn zero_size_corpus_is_an_error() {
        let cfg = SynthConfig {
            seed: 1,
            n_humans: 0,
            n_bots: 0,
            ..SynthConfig::default()
        };
        assert!(generate_synthetic(&cfg).is_err());
    }

    #[test]
    fn negative_mix_weight_is_an_error() {
        let mut cfg = SynthConfig {
            seed: 1,
            n_humans: 1,
            n_bots: 1,
            ..SynthConfig::default()
        };
        cfg.mix.spam = -0.5;
        assert!(generate_synthetic(&cfg).is_err());
    }

    #[test]
    fn accounts_satisfy_record_invariants() {
        let cfg = SynthConfig {
            seed: 4242,
            n_humans: 60,
            n_bots: 60,
            separation: 1.0,
            ..SynthConfig::default()
        };
        let corpus = generate_synthetic(&cfg).unwrap();
        assert_eq!(corpus.len(), 120);
        for (account, _) in &corpus.entries {
            account.validate().unwrap();
            assert!(account.statuses_count >= account.posts.len() as u64);
        }
    }

    #[test]
    fn labels_split_as_requested() {
        let cfg = SynthConfig {
            seed: 7,
            n_humans: 5,
            n_bots: 9,
            ..SynthConfig::default()
        };
        let corpus = generate_synthetic(&cfg).unwrap();
        let (humans, bots) = corpus.class_counts();
        assert_eq!((humans, bots), (5, 9));
    }
}
