//! Ground-truth engine: decides whether a word is (or contains) an instance
//! of a pattern under a non-erasing substitution, and exhaustively counts
//! avoiding words and exact instances at desk scale. Everything here is
//! independent of the series machinery so the two sides can check each other.
//!
//! Words are slices of letter indices (0-based) over an alphabet of declared
//! size m.

use crate::error::{Error, Result};
use crate::pattern::Pattern;

/// Default node budget for the exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A substitution witnessing that a word is an instance of a pattern:
/// one non-empty image per variable, concatenated in pattern order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    images: Vec<Vec<u8>>,
}

impl Assignment {
    /// Image of variable `v` (indexed as in the pattern).
    pub fn image(&self, v: usize) -> &[u8] {
        &self.images[v]
    }

    pub fn images(&self) -> &[Vec<u8>] {
        &self.images
    }

    /// Concatenate the images along the pattern.
    pub fn apply(&self, p: &Pattern) -> Vec<u8> {
        let mut out = Vec::new();
        for &s in p.symbols() {
            out.extend_from_slice(&self.images[s as usize]);
        }
        out
    }
}

/// Convert a lowercase ASCII word to letter indices (a=0, b=1, ...).
pub fn text_to_word(text: &str) -> Result<Vec<u8>> {
    text.chars()
        .enumerate()
        .map(|(pos, ch)| {
            if ch.is_ascii_lowercase() {
                Ok(ch as u8 - b'a')
            } else {
                Err(Error::BadSymbol(pos))
            }
        })
        .collect()
}

/// Render letter indices as lowercase ASCII (inverse of `text_to_word`).
pub fn word_to_text(word: &[u8]) -> String {
    word.iter().map(|&a| (b'a' + a) as char).collect()
}

struct InstanceSearch<'a> {
    word: &'a [u8],
    pat: &'a [u8],
    /// Span of `word` bound to each variable, if any.
    bound: Vec<Option<(usize, usize)>>,
}

impl<'a> InstanceSearch<'a> {
    /// Minimum word length the pattern suffix starting at `t` still needs:
    /// bound variables cost their image length, unbound ones at least 1.
    fn min_remaining(&self, t: usize) -> usize {
        self.pat[t..]
            .iter()
            .map(|&s| match self.bound[s as usize] {
                Some((a, b)) => b - a,
                None => 1,
            })
            .sum()
    }

    /// Match pattern position `t` against `word[pos..]`. Unbound variables
    /// are bound at their first occurrence, trying image lengths in
    /// ascending order, which makes the first witness found the
    /// lexicographically least by binding-order image lengths.
    fn search(&mut self, t: usize, pos: usize) -> bool {
        if t == self.pat.len() {
            return pos == self.word.len();
        }
        let v = self.pat[t] as usize;
        if let Some((a, b)) = self.bound[v] {
            let len = b - a;
            if pos + len > self.word.len() || self.word[pos..pos + len] != self.word[a..b] {
                return false;
            }
            return self.search(t + 1, pos + len);
        }
        let mut len = 1;
        while pos + len <= self.word.len() {
            self.bound[v] = Some((pos, pos + len));
            if pos + len + self.min_remaining(t + 1) <= self.word.len()
                && self.search(t + 1, pos + len)
            {
                return true;
            }
            len += 1;
        }
        self.bound[v] = None;
        false
    }
}

/// Witness that `word` is exactly an instance of `p`, if it is one. The
/// witness is deterministic: image lengths are minimized left-to-right in
/// first-occurrence order.
pub fn find_instance(word: &[u8], p: &Pattern) -> Option<Assignment> {
    if word.len() < p.len() {
        return None;
    }
    let mut search = InstanceSearch {
        word,
        pat: p.symbols(),
        bound: vec![None; p.variable_count()],
    };
    if search.search(0, 0) {
        let images = search
            .bound
            .iter()
            .map(|span| {
                let (a, b) = span.expect("all variables bound in a full match");
                word[a..b].to_vec()
            })
            .collect();
        Some(Assignment { images })
    } else {
        None
    }
}

/// Whether any factor of `word` is an instance of `p`.
pub fn contains_instance(word: &[u8], p: &Pattern) -> bool {
    let min = p.len(); // non-erasing images make instances at least this long
    for start in 0..word.len() {
        for end in (start + min)..=word.len() {
            if find_instance(&word[start..end], p).is_some() {
                return true;
            }
        }
    }
    false
}

/// Incremental form of `contains_instance` for a word whose proper prefix is
/// already known to avoid `p`: only factors ending at the last letter can be
/// new instances, so only suffixes are checked. Returns true when the word
/// still avoids `p`.
pub fn extension_safe(word: &[u8], p: &Pattern) -> bool {
    let min = p.len();
    if word.len() < min {
        return true;
    }
    for start in 0..=(word.len() - min) {
        if find_instance(&word[start..], p).is_some() {
            return false;
        }
    }
    true
}

/// Exact avoider counts per length for one pattern over an m-letter alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    m: u32,
    pattern: Pattern,
    counts: Vec<u64>,
}

impl CountTable {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    /// counts[n] = number of length-n words over m letters avoiding the
    /// pattern; index 0 is the empty word.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// CSV rendering: header `n,count`, one row per length.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (n, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{n},{c}\n"));
        }
        out
    }
}

/// Count the words of each length 0..=n_max over m letters that avoid `p`,
/// by depth-first extension: a word is expanded only while it still avoids
/// the pattern (prefixes of avoiders are avoiders). Every appended letter is
/// one search node; exceeding `budget` nodes aborts with an error rather
/// than running unbounded.
pub fn count_avoiders(m: u32, p: &Pattern, n_max: usize, budget: u64) -> Result<CountTable> {
    if m == 0 {
        return Err(Error::InvalidArgument("alphabet size must be >= 1".into()));
    }
    if m > 26 {
        return Err(Error::InvalidArgument("alphabet size must be <= 26".into()));
    }
    let mut counts = vec![0u64; n_max + 1];
    counts[0] = 1;
    let mut word = Vec::with_capacity(n_max);
    let mut visited = 0u64;
    extend(m, p, n_max, budget, &mut word, &mut visited, &mut counts)?;
    Ok(CountTable { m, pattern: p.clone(), counts })
}

fn extend(
    m: u32,
    p: &Pattern,
    n_max: usize,
    budget: u64,
    word: &mut Vec<u8>,
    visited: &mut u64,
    counts: &mut [u64],
) -> Result<()> {
    if word.len() == n_max {
        return Ok(());
    }
    for a in 0..m as u8 {
        *visited += 1;
        if *visited > budget {
            return Err(Error::BudgetExceeded { visited: *visited, budget });
        }
        word.push(a);
        if extension_safe(word, p) {
            counts[word.len()] += 1;
            extend(m, p, n_max, budget, word, visited, counts)?;
        }
        word.pop();
    }
    Ok(())
}

/// Number of length-n words over m letters that are exact instances of `p`,
/// by full enumeration of all m^n words. Errors out up front when that
/// enumeration exceeds `budget` words.
pub fn count_instances(m: u32, p: &Pattern, n: usize, budget: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidArgument("alphabet size must be >= 1".into()));
    }
    if m > 26 {
        return Err(Error::InvalidArgument("alphabet size must be <= 26".into()));
    }
    (0..n).try_fold(1u64, |words, _| {
        words
            .checked_mul(m as u64)
            .filter(|&t| t <= budget)
            .ok_or(Error::BudgetExceeded { visited: budget, budget })
    })?;
    let mut word = vec![0u8; n];
    let mut count = 0u64;
    loop {
        if find_instance(&word, p).is_some() {
            count += 1;
        }
        // odometer increment in base m
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(count);
            }
            i -= 1;
            word[i] += 1;
            if word[i] < m as u8 {
                break;
            }
            word[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(text: &str) -> Pattern {
        Pattern::parse(text).unwrap()
    }

    fn w(text: &str) -> Vec<u8> {
        text_to_word(text).unwrap()
    }

    #[test]
    fn word_text_round_trip() {
        assert_eq!(w("abz"), vec![0, 1, 25]);
        assert_eq!(word_to_text(&[0, 1, 25]), "abz");
        assert_eq!(text_to_word("aB"), Err(Error::BadSymbol(1)));
    }

    #[test]
    fn square_witness_is_the_half() {
        let a = find_instance(&w("abab"), &pat("xx")).unwrap();
        assert_eq!(a.image(0), w("ab"));
        assert_eq!(a.apply(&pat("xx")), w("abab"));
    }

    #[test]
    fn non_square_has_no_witness() {
        assert_eq!(find_instance(&w("aab"), &pat("xx")), None);
        assert_eq!(find_instance(&w("abc"), &pat("xx")), None);
    }

    #[test]
    fn witness_minimizes_earlier_images_first() {
        let a = find_instance(&w("abba"), &pat("xyx")).unwrap();
        assert_eq!(a.image(0), w("a"));
        assert_eq!(a.image(1), w("bb"));
    }

    #[test]
    fn witness_images_are_non_empty_and_reproduce_word() {
        let p = pat("xyxy");
        let word = w("abcabc");
        let a = find_instance(&word, &p).unwrap();
        assert!(a.images().iter().all(|img| !img.is_empty()));
        assert_eq!(a.apply(&p), word);
    }

    #[test]
    fn word_shorter_than_pattern_is_never_an_instance() {
        assert_eq!(find_instance(&w("ab"), &pat("xyz")), None);
        assert_eq!(find_instance(&[], &pat("x")), None);
    }

    #[test]
    fn contains_scans_all_factors() {
        assert!(contains_instance(&w("aa"), &pat("xx")));
        assert!(!contains_instance(&w("aba"), &pat("xx")));
        assert!(contains_instance(&w("abcba"), &pat("xyx")));
        assert!(!contains_instance(&w("abc"), &pat("xyx")));
    }

    #[test]
    fn extension_checks_match_spec_examples() {
        assert!(extension_safe(&w("ab"), &pat("xx")));
        assert!(!extension_safe(&w("abab"), &pat("xx")));
        assert!(extension_safe(&w("aab"), &pat("xxx")));
    }

    #[test]
    fn extension_agrees_with_contains_on_fresh_extensions() {
        // exhaustively: whenever word[..len-1] avoids p, the suffix-only
        // check must equal the full-factor check
        for p in [pat("xx"), pat("xxx"), pat("xyx"), pat("xyxy")] {
            for len in 1..=7usize {
                for code in 0..(1u32 << len) {
                    let word: Vec<u8> =
                        (0..len).map(|i| ((code >> i) & 1) as u8).collect();
                    if contains_instance(&word[..len - 1], &p) {
                        continue;
                    }
                    assert_eq!(
                        extension_safe(&word, &p),
                        !contains_instance(&word, &p),
                        "disagreement on {:?} for {}",
                        word,
                        p
                    );
                }
            }
        }
    }

    #[test]
    fn squarefree_ternary_counts() {
        let t = count_avoiders(3, &pat("xx"), 5, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.counts(), &[1, 3, 6, 12, 18, 30]);
    }

    #[test]
    fn squarefree_binary_counts_die_out() {
        let t = count_avoiders(2, &pat("xx"), 6, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.counts(), &[1, 2, 2, 2, 0, 0, 0]);
    }

    #[test]
    fn cubefree_binary_counts() {
        let t = count_avoiders(2, &pat("xxx"), 6, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.counts(), &[1, 2, 4, 6, 10, 16, 24]);
    }

    #[test]
    fn degenerate_single_letter_alphabet() {
        let t = count_avoiders(1, &pat("xx"), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.counts(), &[1, 1, 0, 0]);
    }

    #[test]
    fn count_table_invariants_hold() {
        for (m, p) in [(2, pat("xxx")), (3, pat("xx")), (2, pat("xyxy"))] {
            let t = count_avoiders(m, &p, 6, DEFAULT_BUDGET).unwrap();
            let c = t.counts();
            assert_eq!(c[0], 1);
            assert_eq!(c[1], m as u64, "single letters avoid {}", p);
            for n in 1..c.len() {
                assert!(c[n] <= m as u64 * c[n - 1], "extension bound at n={n}");
            }
        }
    }

    #[test]
    fn avoider_counts_agree_with_unpruned_recount() {
        // independent recount: filter all m^n words by contains_instance
        for (m, p) in [(2u32, pat("xxx")), (3, pat("xx")), (2, pat("xyx"))] {
            let table = count_avoiders(m, &p, 5, DEFAULT_BUDGET).unwrap();
            for n in 0..=5usize {
                let mut brute = 0u64;
                let mut word = vec![0u8; n];
                'words: loop {
                    if !contains_instance(&word, &p) {
                        brute += 1;
                    }
                    let mut i = n;
                    loop {
                        if i == 0 {
                            break 'words;
                        }
                        i -= 1;
                        word[i] += 1;
                        if word[i] < m as u8 {
                            break;
                        }
                        word[i] = 0;
                    }
                }
                assert_eq!(table.counts()[n], brute, "m={m} p={p} n={n}");
            }
        }
    }

    #[test]
    fn budget_aborts_enumeration() {
        let err = count_avoiders(3, &pat("xx"), 10, 5).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 5, .. }));
    }

    #[test]
    fn instance_counts_match_hand_enumeration() {
        assert_eq!(count_instances(2, &pat("xx"), 4, DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(count_instances(2, &pat("xyx"), 3, DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(count_instances(2, &pat("xx"), 3, DEFAULT_BUDGET).unwrap(), 0);
    }

    #[test]
    fn instance_count_budget_is_checked_up_front() {
        let err = count_instances(2, &pat("xx"), 40, 1000).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn csv_format_is_stable() {
        let t = count_avoiders(2, &pat("xxx"), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.to_csv(), "n,count\n0,1\n1,2\n2,4\n3,6\n");
    }
}
