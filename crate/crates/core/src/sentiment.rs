//! Small embedded valence lexicon for post-level sentiment features.
//!
//! Word list and weights are deliberately compact; the contract is only that
//! valence is deterministic, bounded in `[-3, 3]` per word, and zero for
//! out-of-vocabulary tokens.

/// (word, valence) pairs. Kept sorted by word for binary lookup.
const LEXICON: [(&str, i8); 56] = [
    ("amazing", 3),
    ("angry", -2),
    ("annoying", -2),
    ("awesome", 3),
    ("awful", -3),
    ("bad", -2),
    ("beautiful", 2),
    ("best", 2),
    ("boring", -1),
    ("broken", -2),
    ("calm", 1),
    ("cheerful", 2),
    ("cruel", -3),
    ("delight", 2),
    ("disaster", -3),
    ("dull", -1),
    ("enjoy", 2),
    ("excellent", 3),
    ("fail", -2),
    ("fantastic", 3),
    ("fear", -2),
    ("fine", 1),
    ("fraud", -3),
    ("friendly", 2),
    ("fun", 2),
    ("glad", 2),
    ("good", 2),
    ("great", 2),
    ("happy", 2),
    ("hate", -3),
    ("horrible", -3),
    ("hurt", -2),
    ("kind", 2),
    ("lie", -2),
    ("lonely", -2),
    ("love", 3),
    ("lovely", 2),
    ("lucky", 2),
    ("mess", -1),
    ("nice", 2),
    ("pain", -2),
    ("perfect", 3),
    ("pleasant", 2),
    ("poor", -1),
    ("proud", 2),
    ("sad", -2),
    ("scam", -3),
    ("smile", 2),
    ("terrible", -3),
    ("thanks", 2),
    ("tired", -1),
    ("ugly", -2),
    ("warm", 1),
    ("win", 2),
    ("wonderful", 3),
    ("worst", -3),
];

/// Valence of a lowercase token, 0 when not in the lexicon.
pub fn word_valence(token: &str) -> f64 {
    match LEXICON.binary_search_by(|(w, _)| w.cmp(&token)) {
        Ok(i) => f64::from(LEXICON[i].1),
        Err(_) => 0.0,
    }
}

/// Mean valence over the lexicon words appearing in `text`; 0 when none do.
/// Tokens are lowercased and stripped of leading/trailing punctuation.
pub fn text_valence(text: &str) -> f64 {
    let mut sum = 0.0;
    let mut hits = 0usize;
    for raw in text.split_whitespace() {
        let token = raw
            .trim_matches(|c: char| !c.is_alphanumeric())
            .to_ascii_lowercase();
        if token.is_empty() {
            continue;
        }
        let v = word_valence(&token);
        if v != 0.0 {
            sum += v;
            hits += 1;
        }
    }
    if hits == 0 {
        0.0
    } else {
        sum / hits as f64
    }
}

/// Positive lexicon entries, for the synthetic generator.
pub fn positive_words() -> &'static [&'static str] {
    const POS: [&str; 12] = [
        "amazing", "awesome", "excellent", "fantastic", "good", "great", "happy", "love",
        "nice", "perfect", "thanks", "wonderful",
    ];
    &POS
}

/// Negative lexicon entries, for the synthetic generator.
pub fn negative_words() -> &'static [&'static str] {
    const NEG: [&str; 12] = [
        "angry", "awful", "bad", "disaster", "fail", "fraud", "hate", "horrible", "sad",
        "scam", "terrible", "worst",
    ];
    &NEG
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicon_is_sorted_for_binary_search() {
        for pair in LEXICON.windows(2) {
            assert!(pair[0].0 < pair[1].0, "{:?} out of order", pair[1].0);
        }
    }

    #[test]
    fn valence_averages_lexicon_hits() {
        assert_eq!(text_valence("such a great, wonderful day"), 2.5);
        assert_eq!(text_valence("the worst scam"), -3.0);
        assert_eq!(text_valence("neutral words only"), 0.0);
        assert_eq!(text_valence(""), 0.0);
    }

    #[test]
    fn generator_word_pools_are_in_lexicon() {
        for w in positive_words() {
            assert!(word_valence(w) > 0.0, "{w} should be positive");
        }
        for w in negative_words() {
            assert!(word_valence(w) < 0.0, "{w} should be negative");
        }
    }
}
