//! Comma-separated text forms for partitions and compositions: `3,1`, with
//! `[]` (or `0`) for the empty sequence.

use symkron::{Composition, Partition};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid {what} {input:?}: {reason}")]
pub struct TextError {
    pub what: &'static str,
    pub input: String,
    pub reason: String,
}

fn parse_parts(input: &str, what: &'static str) -> Result<Vec<usize>, TextError> {
    let trimmed = input.trim();
    let body = trimmed
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .unwrap_or(trimmed)
        .trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|piece| {
            piece.trim().parse::<usize>().map_err(|e| TextError {
                what,
                input: input.to_owned(),
                reason: format!("{:?} is not a nonnegative integer ({e})", piece.trim()),
            })
        })
        .collect()
}

pub fn parse_composition(input: &str) -> Result<Composition, TextError> {
    let parts = parse_parts(input, "composition")?;
    Ok(if parts == [0] {
        Composition::new(Vec::new())
    } else {
        Composition::new(parts)
    })
}

pub fn parse_partition(input: &str) -> Result<Partition, TextError> {
    let mut parts = parse_parts(input, "partition")?;
    if parts == [0] {
        parts.clear();
    }
    let err = |reason: &str| TextError {
        what: "partition",
        input: input.to_owned(),
        reason: reason.to_owned(),
    };
    if parts.contains(&0) {
        return Err(err("partition parts must be positive"));
    }
    Partition::new(parts).map_err(|_| err("partition parts must be weakly decreasing"))
}

pub fn render_parts(parts: &[usize]) -> String {
    if parts.is_empty() {
        "[]".to_owned()
    } else {
        parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("3,1").unwrap().parts(), &[3, 1]);
        assert_eq!(parse_partition(" 2, 2 ,1").unwrap().parts(), &[2, 2, 1]);
        assert_eq!(parse_partition("[4,1]").unwrap().parts(), &[4, 1]);
        assert!(parse_partition("[]").unwrap().is_empty());
        assert!(parse_partition("0").unwrap().is_empty());
        assert!(parse_partition("").unwrap().is_empty());
        let e = parse_partition("1,2").unwrap_err();
        assert!(e.to_string().contains("weakly decreasing"));
        assert!(parse_partition("2,0").is_err());
        assert!(parse_partition("2,x").is_err());
        assert!(parse_partition("-1").is_err());
    }

    #[test]
    fn compositions() {
        assert_eq!(parse_composition("1,0,3").unwrap().parts(), &[1, 0, 3]);
        assert!(parse_composition("[]").unwrap().is_empty());
        assert!(parse_composition("1,,2").is_err());
    }

    #[test]
    fn render_round_trip() {
        for parts in [vec![], vec![3, 1], vec![1, 1, 1]] {
            let text = render_parts(&parts);
            assert_eq!(parse_partition(&text).unwrap().parts(), &parts[..]);
        }
    }
}
