//! Pattern specifications: the chord shorthand `C<n>(+<u>-<v>)*`, graph6
//! strings (optionally forced with a `g6:` prefix), or a path to a JSON
//! graph file.

use crate::{CliError, CliResult};
use ramsey_core::graph::{build_chorded_cycle, from_graph6, ChordSet, SimpleGraph};
use std::path::Path;

/// Parses a pattern spec. Resolution order: the chord shorthand grammar,
/// then an existing `.json` file, then graph6.
pub fn parse_pattern(input: &str) -> CliResult<SimpleGraph> {
    if let Some(rest) = input.strip_prefix("g6:") {
        return from_graph6(rest).map_err(|e| CliError::InvalidInput(format!("graph6: {e}")));
    }
    if let Some(parsed) = try_shorthand(input)? {
        return Ok(parsed);
    }
    if Path::new(input).exists() {
        let text = std::fs::read_to_string(input)?;
        return serde_json::from_str(&text)
            .map_err(|e| CliError::InvalidInput(format!("graph json: {e}")));
    }
    from_graph6(input).map_err(|e| {
        CliError::InvalidInput(format!(
            "not a chord shorthand, existing file, or graph6 string: {e}"
        ))
    })
}

/// `C<n>` optionally followed by `+<u>-<v>` chord segments, 0-based on the
/// canonical cycle. Returns `Ok(None)` when the input does not look like
/// shorthand at all.
fn try_shorthand(input: &str) -> CliResult<Option<SimpleGraph>> {
    let Some(rest) = input.strip_prefix('C') else {
        return Ok(None);
    };
    let digits_end = rest.find('+').unwrap_or(rest.len());
    let (num, chord_part) = rest.split_at(digits_end);
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
        return Ok(None);
    }
    let n: usize = num
        .parse()
        .map_err(|_| CliError::InvalidInput(format!("cycle length in {input:?}")))?;
    let mut chords = Vec::new();
    for seg in chord_part.split('+').filter(|s| !s.is_empty()) {
        let (u, v) = seg
            .split_once('-')
            .ok_or_else(|| CliError::InvalidInput(format!("chord segment {seg:?}")))?;
        let u: usize = u
            .parse()
            .map_err(|_| CliError::InvalidInput(format!("chord endpoint {u:?}")))?;
        let v: usize = v
            .parse()
            .map_err(|_| CliError::InvalidInput(format!("chord endpoint {v:?}")))?;
        chords.push((u, v));
    }
    let set = ChordSet::new(n, chords)
        .map_err(|e| CliError::InvalidInput(format!("chord set: {e}")))?;
    let g = build_chorded_cycle(n, &set)
        .map_err(|e| CliError::InvalidInput(format!("chorded cycle: {e}")))?;
    Ok(Some(g))
}

/// The chord set of a shorthand spec, when the input is shorthand.
pub fn shorthand_chords(input: &str) -> Option<ChordSet> {
    let rest = input.strip_prefix('C')?;
    let digits_end = rest.find('+').unwrap_or(rest.len());
    let (num, chord_part) = rest.split_at(digits_end);
    let n: usize = num.parse().ok()?;
    let mut chords = Vec::new();
    for seg in chord_part.split('+').filter(|s| !s.is_empty()) {
        let (u, v) = seg.split_once('-')?;
        chords.push((u.parse().ok()?, v.parse().ok()?));
    }
    ChordSet::new(n, chords).ok()
}
