//! Cross-checks of computed prefixes against stored reference b-files.
//!
//! Each sequence ships with a fixture in `fixtures/`, regenerated with the
//! command line's `seq --format bfile` and spot-checked by hand before
//! being committed. `crosscheck_against` also accepts externally fetched
//! text, and aligns indices automatically because published conventions
//! for the first index differ from ours for some sequences.

use crate::error::{Error, Result};
use crate::sequences::{self, SequenceId};
use crate::verify::bfile;

pub fn fixture_text(id: SequenceId) -> &'static str {
    match id {
        SequenceId::LargeSchroeder => include_str!("../../fixtures/large-schroeder.bfile"),
        SequenceId::SmallSchroeder => include_str!("../../fixtures/small-schroeder.bfile"),
        SequenceId::Fine => include_str!("../../fixtures/fine.bfile"),
        SequenceId::Catalan => include_str!("../../fixtures/catalan.bfile"),
        SequenceId::U => include_str!("../../fixtures/u.bfile"),
        SequenceId::A137398 => include_str!("../../fixtures/a137398.bfile"),
        SequenceId::A134425 => include_str!("../../fixtures/a134425.bfile"),
        SequenceId::A225887 => include_str!("../../fixtures/a225887.bfile"),
        SequenceId::A114710 => include_str!("../../fixtures/a114710.bfile"),
        SequenceId::A030238 => include_str!("../../fixtures/a030238.bfile"),
    }
}

/// How many terms we are willing to recompute for a comparison. The
/// enumeration-backed diagonal sum is the only genuinely expensive one.
fn compare_len(id: SequenceId) -> usize {
    match id {
        SequenceId::A030238 => 13,
        SequenceId::A225887 | SequenceId::A114710 => 21,
        SequenceId::U | SequenceId::A137398 | SequenceId::A134425 => 25,
        _ => 31,
    }
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub index: i64,
    pub ours: String,
    pub theirs: String,
}

#[derive(Clone, Debug)]
pub struct CrosscheckOutcome {
    pub id: SequenceId,
    /// Terms actually compared.
    pub compared: usize,
    /// `their_index = our_index + index_delta` for the alignment that
    /// matched (0 when conventions agree).
    pub index_delta: i64,
    pub pass: bool,
    /// Filled against the zero-delta alignment when nothing matches.
    pub mismatches: Vec<Mismatch>,
}

/// Compares our computation of `id` against reference b-file text.
pub fn crosscheck_against(id: SequenceId, text: &str) -> Result<CrosscheckOutcome> {
    let theirs = bfile::parse_bfile(text)?;
    bfile::check_contiguous(&theirs)?;
    if theirs.is_empty() {
        return Err(Error::Parse("reference b-file has no entries".into()));
    }
    let ours = sequences::prefix(id, compare_len(id))?;
    let their_first = theirs[0].0;

    let overlap_at = |delta: i64| -> Vec<(usize, usize)> {
        // pairs of (our position, their position) sharing an index
        (0..ours.values.len())
            .filter_map(|k| {
                let their_idx = ours.first_index as i64 + k as i64 + delta - their_first;
                if (0..theirs.len() as i64).contains(&their_idx) {
                    Some((k, their_idx as usize))
                } else {
                    None
                }
            })
            .collect()
    };

    let min_overlap = 10.min(theirs.len()).min(ours.values.len());
    let mut deltas: Vec<i64> = vec![0];
    deltas.extend((-3..=3).filter(|&d| d != 0));
    for delta in deltas {
        let pairs = overlap_at(delta);
        if pairs.len() < min_overlap {
            continue;
        }
        if pairs
            .iter()
            .all(|&(k, t)| ours.values[k] == theirs[t].1)
        {
            return Ok(CrosscheckOutcome {
                id,
                compared: pairs.len(),
                index_delta: delta,
                pass: true,
                mismatches: Vec::new(),
            });
        }
    }

    let pairs = overlap_at(0);
    let mismatches = pairs
        .iter()
        .filter(|&&(k, t)| ours.values[k] != theirs[t].1)
        .map(|&(k, t)| Mismatch {
            index: ours.first_index as i64 + k as i64,
            ours: ours.values[k].to_string(),
            theirs: theirs[t].1.to_string(),
        })
        .collect();
    Ok(CrosscheckOutcome {
        id,
        compared: pairs.len(),
        index_delta: 0,
        pass: false,
        mismatches,
    })
}

/// Compares against the shipped fixture.
pub fn crosscheck_fixture(id: SequenceId) -> Result<CrosscheckOutcome> {
    crosscheck_against(id, fixture_text(id))
}
