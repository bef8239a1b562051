//! Parsing of the comma-separated integer lists accepted on the command line.

use crate::error::{Error, Result};
use crate::numsg::Sequence;

/// `"4, 5,6"` → `[4, 5, 6]`. Empty items and non-numeric tokens are rejected.
pub fn parse_list(text: &str) -> Result<Vec<u64>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            item.parse::<u64>()
                .map_err(|e| Error::Parse(format!("{item:?}: {e}")))
        })
        .collect()
}

/// A strictly increasing list of positive integers.
pub fn parse_sequence(text: &str) -> Result<Sequence> {
    Sequence::new(parse_list(text)?)
}

/// Shift offsets `0 = c_1 < c_2 < ... < c_n`.
pub fn parse_offsets(text: &str) -> Result<Vec<u64>> {
    let offsets = parse_list(text)?;
    if offsets[0] != 0 {
        return Err(Error::InvalidSequence("offsets must start with 0".into()));
    }
    if offsets.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSequence("offsets must be strictly increasing".into()));
    }
    Ok(offsets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(parse_list("4,5,6").unwrap(), vec![4, 5, 6]);
        assert_eq!(parse_list(" 4 , 5 ").unwrap(), vec![4, 5]);
        assert!(parse_list("").is_err());
        assert!(parse_list("4,,5").is_err());
        assert!(parse_list("4,-5").is_err());
        assert!(parse_list("99999999999999999999999").is_err());
    }

    #[test]
    fn sequences_and_offsets() {
        assert_eq!(parse_sequence("4,9,10").unwrap().d(), 10);
        assert!(matches!(parse_sequence("5,4"), Err(Error::InvalidSequence(_))));
        assert!(matches!(parse_sequence("0,4"), Err(Error::InvalidSequence(_))));
        assert_eq!(parse_offsets("0,1,2").unwrap(), vec![0, 1, 2]);
        assert!(parse_offsets("1,2").is_err());
    }
}
