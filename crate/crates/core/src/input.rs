//! Parsing of element input: generator words and one-line notation.

use crate::coxeter::{Canonical, ElementId, Group};
use crate::error::{Error, Result};

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Generator labels from a word such as `"s2 s1 s3 s2"`, `"s2s1s3s2"`,
/// `"2 1 3 2"` or `"2,1,3,2"`. The empty string (or `"e"`) is the identity.
/// Positions in errors are byte offsets into `s`.
pub fn parse_word(s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    let bytes = s.as_bytes();
    let mut labels = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() || c == b',' || c == b'*' || c == b'.' {
            i += 1;
            continue;
        }
        let start = i;
        if c == b's' || c == b'S' {
            i += 1;
        }
        let digits = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if digits == i {
            return Err(parse_err(
                start,
                format!(
                    "expected a generator like s1, found {:?}",
                    &s[start..=start.max(i.min(s.len() - 1))]
                ),
            ));
        }
        let label = s[digits..i]
            .parse::<u32>()
            .map_err(|_| parse_err(digits, "generator index too large"))?;
        labels.push(label);
    }
    Ok(labels)
}

/// Signed one-line notation: `"3412"` (single digits), or entries
/// separated by commas or spaces such as `"-2,1,3"` or `"[10 1 2 ...]"`.
pub fn parse_one_line(s: &str) -> Result<Vec<i8>> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let offset = s.find(inner).unwrap_or(0);
    if inner.is_empty() {
        return Err(parse_err(offset, "empty one-line notation"));
    }
    let separated = inner.contains([',', ' ']) || inner.contains('-');
    let mut out = Vec::new();
    if separated {
        let mut pos = offset;
        for tok in inner.split([',', ' ']) {
            if !tok.is_empty() {
                let v = tok
                    .parse::<i8>()
                    .map_err(|_| parse_err(pos, format!("bad entry {tok:?}")))?;
                out.push(v);
            }
            pos += tok.len() + 1;
        }
    } else {
        for (k, c) in inner.char_indices() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| parse_err(offset + k, format!("unexpected {c:?}")))?;
            out.push(d as i8);
        }
    }
    Ok(out)
}

/// The element with the given generator word.
pub fn element_from_word(g: &Group, s: &str) -> Result<ElementId> {
    g.apply_labels(&parse_word(s)?)
}

/// The element with the given one-line notation (types A, B and D).
pub fn element_from_one_line(g: &Group, s: &str) -> Result<ElementId> {
    let v = parse_one_line(s)?;
    let c = Canonical::Perm(v.clone());
    g.lookup(&c).ok_or_else(|| {
        Error::InvalidPermutation(format!("{v:?} is not an element of {}", g.system().name()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;

    #[test]
    fn words() {
        assert_eq!(parse_word("s2 s1 s3 s2").unwrap(), [2, 1, 3, 2]);
        assert_eq!(parse_word("s2s1s3s2").unwrap(), [2, 1, 3, 2]);
        assert_eq!(parse_word("2,1, 3 2").unwrap(), [2, 1, 3, 2]);
        assert_eq!(parse_word("").unwrap(), Vec::<u32>::new());
        assert_eq!(parse_word(" e ").unwrap(), Vec::<u32>::new());
        assert!(matches!(
            parse_word("s2 x1"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_word("s2 s"),
            Err(Error::Parse { position: 3, .. })
        ));
    }

    #[test]
    fn one_line() {
        assert_eq!(parse_one_line("3412").unwrap(), [3, 4, 1, 2]);
        assert_eq!(parse_one_line("[-2,-1,3]").unwrap(), [-2, -1, 3]);
        assert_eq!(parse_one_line("-2 1").unwrap(), [-2, 1]);
        assert!(matches!(
            parse_one_line("34x2"),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn lookup() {
        let g = Group::enumerate(CoxeterSystem::type_a(3)).unwrap();
        let w = element_from_word(&g, "s2 s1 s3 s2").unwrap();
        assert_eq!(element_from_one_line(&g, "3412").unwrap(), w);
        assert!(element_from_one_line(&g, "3413").is_err());
        assert!(element_from_word(&g, "s4").is_err());
        let d = Group::enumerate(CoxeterSystem::type_d(4)).unwrap();
        let s0 = element_from_word(&d, "s0").unwrap();
        assert_eq!(element_from_one_line(&d, "-2,-1,3,4").unwrap(), s0);
        let b = Group::enumerate(CoxeterSystem::type_b(2)).unwrap();
        assert!(element_from_word(&b, "s0").is_err());
    }
}
