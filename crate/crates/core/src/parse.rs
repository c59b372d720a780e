//! Text inputs: comma-separated lists on the command line, JSON in files.
//!
//! Every `parse_*` function accepts either form. Input starting with `[` or
//! a JSON object is read as JSON, anything else as a comma-separated list,
//! optionally wrapped in `(...)` or `{...}`.

use std::ops::RangeInclusive;

use serde::de::DeserializeOwned;

use crate::ds::DSMatrix;
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use crate::skolem::{DifferenceMultiset, Pairing, SkolemSequence};
use crate::xray::{Permutation, XRay};

fn parse_err(what: &'static str, input: &str) -> Error {
    Error::Parse {
        what,
        input: input.chars().take(200).collect(),
    }
}

fn is_json(s: &str) -> bool {
    let s = s.trim_start();
    match s.as_bytes().first() {
        Some(b'[') => true,
        Some(b'{') => matches!(s[1..].trim_start().as_bytes().first(), Some(b'"' | b'}')),
        _ => false,
    }
}

fn from_json<T: DeserializeOwned>(what: &'static str, s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse {
        what,
        input: format!("{e}"),
    })
}

fn split_list<T>(what: &'static str, s: &str, item: impl Fn(&str) -> Option<T>) -> Result<Vec<T>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .or_else(|| s.strip_prefix('{').and_then(|t| t.strip_suffix('}')))
        .unwrap_or(s);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| item(tok.trim()).ok_or_else(|| parse_err(what, tok)))
        .collect()
}

pub fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    if is_json(s) {
        return from_json("integer list", s);
    }
    split_list("integer list", s, |t| t.parse().ok())
}

pub fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    if is_json(s) {
        return from_json("integer list", s);
    }
    split_list("integer list", s, |t| t.parse().ok())
}

pub fn parse_permutation(s: &str) -> Result<Permutation> {
    if is_json(s) {
        return from_json("permutation", s);
    }
    Permutation::new(parse_usize_list(s)?)
}

pub fn parse_multiset(s: &str) -> Result<DifferenceMultiset> {
    if is_json(s) {
        return from_json("difference multiset", s);
    }
    DifferenceMultiset::new(parse_u64_list(s)?)
}

pub fn parse_sequence(s: &str) -> Result<SkolemSequence> {
    if is_json(s) {
        return from_json("skolem sequence", s);
    }
    SkolemSequence::new(parse_u64_list(s)?)
}

/// JSON `[[s,t],...]` or a list such as `1-7,2-6,3-8,4-5`.
pub fn parse_pairing(s: &str) -> Result<Pairing> {
    if is_json(s) {
        return from_json("pairing", s);
    }
    let pairs = split_list("pairing", s, |t| {
        let (a, b) = t.split_once('-')?;
        Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
    })?;
    Pairing::new(pairs)
}

/// Integers or `p/q` rationals, comma-separated, or the JSON X-ray form.
pub fn parse_xray(s: &str) -> Result<XRay> {
    if is_json(s) {
        return from_json("x-ray", s);
    }
    let sums: Vec<Rational> = split_list("x-ray", s, |t| parse_rational(t).ok())?;
    XRay::new(sums)
}

pub fn parse_ds_matrix(s: &str) -> Result<DSMatrix> {
    from_json("doubly stochastic matrix", s)
}

/// `"4"` or `"1..4"` (inclusive).
pub fn parse_order_range(s: &str) -> Result<RangeInclusive<usize>> {
    let s = s.trim();
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| parse_err("order range", s))?;
    let hi: usize = hi.trim().parse().map_err(|_| parse_err("order range", s))?;
    if lo == 0 || lo > hi {
        return Err(parse_err("order range", s));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations() {
        assert_eq!(
            parse_permutation("3,2,4,1").unwrap().images(),
            &[3, 2, 4, 1]
        );
        assert_eq!(
            parse_permutation(" [3, 2, 4, 1] ").unwrap().images(),
            &[3, 2, 4, 1]
        );
        assert!(parse_permutation("3,2,2").is_err());
        assert!(parse_permutation("").is_err());
        assert!(parse_permutation("1,,2").is_err());
    }

    #[test]
    fn multisets_and_sequences() {
        assert_eq!(parse_multiset("6,1,5,4").unwrap().diffs(), &[1, 4, 5, 6]);
        assert_eq!(parse_multiset("[4,4,4,8,8,8]").unwrap().len(), 6);
        assert!(parse_multiset("0,1").is_err());
        assert_eq!(parse_multiset("{4, 4, 8}").unwrap().diffs(), &[4, 4, 8]);
        assert_eq!(
            parse_sequence("4,2,3,2,4,3,1,1").unwrap().symbols().len(),
            8
        );
        assert!(parse_sequence("1,2,1").is_err());
    }

    #[test]
    fn pairings() {
        let p = parse_pairing("4-5,2-6,3-8,1-7").unwrap();
        assert_eq!(p, parse_pairing("[[1,7],[2,6],[3,8],[4,5]]").unwrap());
        assert!(parse_pairing("1-2-3").is_err());
    }

    #[test]
    fn xrays() {
        assert_eq!(
            parse_xray("1,0,1,0,1").unwrap().counts().unwrap(),
            vec![1, 0, 1, 0, 1]
        );
        assert_eq!(parse_xray("(1,0,1)").unwrap().order(), 2);
        let x = parse_xray("1/2,1,1/2").unwrap();
        assert_eq!(x, parse_xray(r#"["1/2",1,"1/2"]"#).unwrap());
        assert!(parse_xray("1,1").is_err());
        assert!(parse_xray("1,x,0").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_order_range("4").unwrap(), 4..=4);
        assert_eq!(parse_order_range("1..4").unwrap(), 1..=4);
        assert_eq!(parse_order_range("1..=3").unwrap(), 1..=3);
        assert!(parse_order_range("0..2").is_err());
        assert!(parse_order_range("5..2").is_err());
        assert!(parse_order_range("a").is_err());
    }

    #[test]
    fn ds_matrices() {
        let d = parse_ds_matrix(r#"{"n":2,"entries":[["0","1"],["1","0"]]}"#).unwrap();
        assert_eq!(d.order(), 2);
        assert!(parse_ds_matrix("1,0").is_err());
    }
}
