//! The two-column "n value" text format used for sequence exchange.
//!
//! Lines hold an index and a value separated by whitespace. Blank lines
//! and lines starting with '#' are ignored on input and never produced on
//! output. Line endings are LF.

use crate::error::{Error, Result};
use crate::numeric::{int_from_decimal, Integer};
use crate::sequences::SequencePrefix;

pub fn write_bfile(prefix: &SequencePrefix) -> String {
    let mut out = String::new();
    for (i, v) in prefix.values.iter().enumerate() {
        out.push_str(&format!("{} {}\n", prefix.first_index + i, v));
    }
    out
}

/// Parses into (index, value) pairs, reporting the 1-based line number of
/// anything malformed.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, Integer)>> {
    let mut entries = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse(format!(
                "line {}: expected 'index value', got {line:?}",
                lineno + 1
            )));
        };
        let idx: i64 = idx
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad index {idx:?}", lineno + 1)))?;
        let val = int_from_decimal(val)
            .map_err(|_| Error::Parse(format!("line {}: bad value {val:?}", lineno + 1)))?;
        entries.push((idx, val));
    }
    Ok(entries)
}

/// Checks that indices increase by one with no gaps.
pub fn check_contiguous(entries: &[(i64, Integer)]) -> Result<()> {
    for pair in entries.windows(2) {
        if pair[1].0 != pair[0].0 + 1 {
            return Err(Error::Parse(format!(
                "index gap between {} and {}",
                pair[0].0, pair[1].0
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{self, SequenceId};

    #[test]
    fn round_trip() {
        let prefix = sequences::prefix(SequenceId::Catalan, 5).unwrap();
        let text = write_bfile(&prefix);
        assert_eq!(text, "0 1\n1 1\n2 2\n3 5\n4 14\n");
        let parsed = parse_bfile(&text).unwrap();
        assert_eq!(parsed.len(), 5);
        assert_eq!(parsed[0], (0, Integer::from(1)));
        assert_eq!(parsed[4], (4, Integer::from(14)));
        check_contiguous(&parsed).unwrap();
    }

    #[test]
    fn offset_sequences_start_at_their_first_index() {
        let prefix = sequences::prefix(SequenceId::U, 3).unwrap();
        assert_eq!(write_bfile(&prefix), "1 1\n2 1\n3 2\n");
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# header\n\n0 1\n1 -3\n\n# trailing\n";
        let parsed = parse_bfile(text).unwrap();
        assert_eq!(parsed, vec![(0, Integer::from(1)), (1, Integer::from(-3))]);
    }

    #[test]
    fn malformed_lines_name_their_line_number() {
        let err = parse_bfile("0 1\nbogus\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = parse_bfile("0 1 2 3\n").unwrap_err().to_string();
        assert!(err.contains("line 1"), "{err}");
        let err = parse_bfile("0 x\n").unwrap_err().to_string();
        assert!(err.contains("bad value"), "{err}");
        let gap = parse_bfile("0 1\n2 2\n").unwrap();
        assert!(check_contiguous(&gap).is_err());
    }
}
