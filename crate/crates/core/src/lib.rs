//! Avoidability certification for word patterns.
//!
//! A pattern is a word over variables (`xyxy`, `xxxyyy`); a word over a
//! finite alphabet is an instance when some non-erasing substitution of the
//! variables produces it, and a word avoids the pattern when no factor is an
//! instance. This crate decides avoidability questions two independent ways:
//!
//! * a power-series route: an exact lower-bound series for the number of
//!   avoiding words per length, whose non-negativity certifies avoidability
//!   ([`series`]), driven end-to-end by the certification pipeline in
//!   [`certify`];
//! * an exhaustive route: backtracking enumeration of avoiders and instances
//!   at small sizes ([`matcher`]), used as ground truth against the series.
//!
//! The `avoid` binary exposes both as a command line tool.

pub mod certify;
pub mod error;
pub mod matcher;
pub mod pattern;
pub mod series;

pub use certify::{
    analyze, approx_decimal, certify, compare, comparison_csv, comparison_json, Analysis,
    Certificate, ComparisonRow, Method, Thresholds, Verdict,
};
pub use error::{Error, Result};
pub use matcher::{
    contains_instance, count_avoiders, count_instances, extension_safe, find_instance,
    text_to_word, word_to_text, Assignment, CountTable, DEFAULT_BUDGET,
};
pub use pattern::{
    balanced_factor, balanced_factors, parikh_prefixes, FactorSpan, ParikhVector, Pattern,
};
pub use series::{
    default_lambda, golod_series, growth_closed_form, instance_series, min_growth_ratio,
    ratio_check, ClosedFormCheck, GrowthCheck, TruncatedSeries,
};
