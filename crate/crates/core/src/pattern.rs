//! Patterns over a variable alphabet, Parikh prefix vectors, and the
//! balanced-factor extraction that drives the certification pipeline.
//!
//! A pattern is a non-empty word whose letters are variables. Internally
//! variables are dense indices in first-occurrence order; the original
//! letters are kept only for display.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Canonical variable names in first-occurrence order: x, y, z, w, then a, b, ...
/// and the same sequence uppercased. 52 names cover every parseable pattern.
const CANONICAL_NAMES: &[u8] = b"xyzwabcdefghijklmnopqrstuvXYZWABCDEFGHIJKLMNOPQRSTUV";

/// A non-empty word over a variable alphabet.
///
/// `symbols` holds variable indices (0-based, densely assigned in order of
/// first appearance), `names` maps each index back to the letter it was
/// parsed from, and `counts[v]` is the number of occurrences of variable `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    symbols: Vec<u8>,
    names: Vec<char>,
    counts: Vec<usize>,
}

impl Pattern {
    /// Parse a pattern from text. Every character must be an ASCII letter
    /// (case-sensitive); each distinct letter is a variable.
    pub fn parse(text: &str) -> Result<Pattern> {
        if text.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let mut names: Vec<char> = Vec::new();
        let mut index: HashMap<char, u8> = HashMap::new();
        let mut symbols = Vec::with_capacity(text.len());
        for (pos, ch) in text.chars().enumerate() {
            if !ch.is_ascii_alphabetic() {
                return Err(Error::BadSymbol(pos));
            }
            let v = *index.entry(ch).or_insert_with(|| {
                names.push(ch);
                (names.len() - 1) as u8
            });
            symbols.push(v);
        }
        let mut counts = vec![0usize; names.len()];
        for &s in &symbols {
            counts[s as usize] += 1;
        }
        Ok(Pattern { symbols, names, counts })
    }

    /// The sesquipower on `k` variables: Z_1 = x_1, Z_n = Z_{n-1} x_n Z_{n-1}.
    /// Has exactly `k` variables and length 2^k - 1.
    pub fn zimin(k: u32) -> Result<Pattern> {
        if k == 0 {
            return Err(Error::InvalidArgument("zimin index must be >= 1".into()));
        }
        // length 2^k - 1 symbols; 26 already means a 64M-symbol pattern
        if k > 26 {
            return Err(Error::InvalidArgument(format!(
                "zimin index {k} too large (max 26)"
            )));
        }
        let mut symbols: Vec<u8> = vec![0];
        for v in 1..k {
            let mut next = symbols.clone();
            next.push(v as u8);
            next.extend_from_slice(&symbols);
            symbols = next;
        }
        let names = (0..k as usize).map(|v| CANONICAL_NAMES[v] as char).collect();
        let mut counts = vec![0usize; k as usize];
        for &s in &symbols {
            counts[s as usize] += 1;
        }
        Ok(Pattern { symbols, names, counts })
    }

    /// Variable indices in pattern order.
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Number of distinct variables.
    pub fn variable_count(&self) -> usize {
        self.names.len()
    }

    /// Variable letters in first-occurrence order.
    pub fn variable_names(&self) -> &[char] {
        &self.names
    }

    /// Occurrence count of each variable, in first-occurrence order.
    pub fn occurrence_counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // patterns are non-empty by construction
    }

    /// Smallest occurrence count over all variables. The pattern is doubled
    /// iff this is at least 2.
    pub fn min_occurrence(&self) -> usize {
        self.counts.iter().copied().min().expect("pattern is non-empty")
    }

    pub fn is_doubled(&self) -> bool {
        self.min_occurrence() >= 2
    }

    /// Render with canonical variable names (x, y, z, w, a, b, ... in
    /// first-occurrence order). Inverse of `parse` up to variable renaming.
    pub fn render(&self) -> String {
        self.symbols
            .iter()
            .map(|&s| CANONICAL_NAMES[s as usize] as char)
            .collect()
    }

    /// The factor `span` of this pattern, re-parsed as a pattern of its own:
    /// its variable set is the variables appearing in the span, re-indexed
    /// by first occurrence within the span.
    pub fn factor(&self, span: FactorSpan) -> Result<Pattern> {
        if span.start >= span.end || span.end > self.symbols.len() {
            return Err(Error::OutOfRange {
                start: span.start,
                end: span.end,
                len: self.symbols.len(),
            });
        }
        let mut remap: HashMap<u8, u8> = HashMap::new();
        let mut names = Vec::new();
        let mut symbols = Vec::with_capacity(span.end - span.start);
        for &s in &self.symbols[span.start..span.end] {
            let v = *remap.entry(s).or_insert_with(|| {
                names.push(self.names[s as usize]);
                (names.len() - 1) as u8
            });
            symbols.push(v);
        }
        let mut counts = vec![0usize; names.len()];
        for &s in &symbols {
            counts[s as usize] += 1;
        }
        Ok(Pattern { symbols, names, counts })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Half-open index range `[start, end)` of a non-empty factor of a host word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactorSpan {
    pub start: usize,
    pub end: usize,
}

impl FactorSpan {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start >= self.end
    }
}

/// Per-letter occurrence counts of a word, optionally reduced mod m.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParikhVector {
    counts: Vec<u32>,
    modulus: Option<u32>,
}

impl ParikhVector {
    /// Raw (unreduced) counts of `word` over a `k`-letter alphabet.
    /// Letters are indices and must be < k.
    pub fn of(word: &[u8], k: usize) -> ParikhVector {
        let mut counts = vec![0u32; k];
        for &a in word {
            counts[a as usize] += 1;
        }
        ParikhVector { counts, modulus: None }
    }

    /// Counts of `word` reduced mod `m`.
    pub fn of_mod(word: &[u8], k: usize, m: u32) -> ParikhVector {
        let mut v = Self::of(word, k);
        for c in &mut v.counts {
            *c %= m;
        }
        v.modulus = Some(m);
        v
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn modulus(&self) -> Option<u32> {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Componentwise difference mod m. Both vectors must share the modulus.
    pub fn sub_mod(&self, other: &ParikhVector) -> ParikhVector {
        assert_eq!(self.modulus, other.modulus, "mismatched moduli");
        assert_eq!(self.counts.len(), other.counts.len(), "mismatched alphabets");
        let m = self.modulus.expect("sub_mod requires a modulus");
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| (a + m - b) % m)
            .collect();
        ParikhVector { counts, modulus: self.modulus }
    }
}

/// Mod-m Parikh vectors of all |word|+1 prefixes, starting with the all-zero
/// vector of the empty prefix. Letters are indices into a declared k-letter
/// alphabet (absent letters still count toward k).
pub fn parikh_prefixes(word: &[u8], k: usize, m: u32) -> Vec<ParikhVector> {
    assert!(m >= 2, "modulus must be >= 2");
    assert!(k >= 1, "alphabet must have at least one letter");
    let mut out = Vec::with_capacity(word.len() + 1);
    let mut counts = vec![0u32; k];
    out.push(ParikhVector { counts: counts.clone(), modulus: Some(m) });
    for &a in word {
        assert!((a as usize) < k, "letter {a} outside declared alphabet of size {k}");
        counts[a as usize] = (counts[a as usize] + 1) % m;
        out.push(ParikhVector { counts: counts.clone(), modulus: Some(m) });
    }
    out
}

/// First factor of `word` in which every letter count is a multiple of `m`:
/// scans prefix vectors v_1, v_2, ... and stops at the first j whose vector
/// collided with some earlier v_i, taking the smallest such i. Guaranteed to
/// find one when |word| >= m^k (pigeonhole on the m^k possible vectors);
/// returns None only when no collision exists.
pub fn balanced_factor(word: &[u8], k: usize, m: u32) -> Option<FactorSpan> {
    balanced_factors(word, k, m).into_iter().next()
}

/// All collision spans of the prefix-vector scan, in order of increasing end:
/// for each j whose vector was seen before, the span (i, j) with the earliest
/// such i. Every returned factor has all letter counts ≡ 0 mod m; the first
/// entry is the `balanced_factor` span.
pub fn balanced_factors(word: &[u8], k: usize, m: u32) -> Vec<FactorSpan> {
    let prefixes = parikh_prefixes(word, k, m);
    let mut first_seen: HashMap<&ParikhVector, usize> = HashMap::new();
    let mut spans = Vec::new();
    for (j, v) in prefixes.iter().enumerate() {
        match first_seen.get(v) {
            Some(&i) => spans.push(FactorSpan { start: i, end: j }),
            None => {
                first_seen.insert(v, j);
            }
        }
    }
    spans
}
