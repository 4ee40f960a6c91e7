use super::{ComponentType, DynkinGraph, RangeError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("malformed component token `{0}`")]
    Malformed(String),
    #[error("token `{token}`: {source}")]
    OutOfRange {
        token: String,
        #[source]
        source: RangeError,
    },
    #[error("token `{0}`: multiplicity must be at least 1")]
    ZeroMultiplicity(String),
}

pub(super) fn parse_name(text: &str) -> Result<DynkinGraph, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "(empty)" {
        return Ok(DynkinGraph::empty());
    }
    let mut components = Vec::new();
    for token in compact.split('+') {
        let (count, ty) = parse_token(token)?;
        components.extend(std::iter::repeat_n(ty, count));
    }
    Ok(DynkinGraph::new(components))
}

fn parse_token(token: &str) -> Result<(usize, ComponentType), ParseError> {
    let malformed = || ParseError::Malformed(token.to_string());
    let split = token.find(|c: char| !c.is_ascii_digit()).ok_or_else(malformed)?;
    let (mult, rest) = token.split_at(split);
    let count = if mult.is_empty() {
        1
    } else {
        let n: usize = mult.parse().map_err(|_| malformed())?;
        if n == 0 {
            return Err(ParseError::ZeroMultiplicity(token.to_string()));
        }
        n
    };

    let (letters, digits) = match rest.find(|c: char| c.is_ascii_digit() || c == '_') {
        Some(i) => rest.split_at(i),
        None => return Err(malformed()),
    };
    let digits = digits.strip_prefix('_').unwrap_or(digits);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let subscript: u32 = digits.parse().map_err(|_| malformed())?;
    let range = |source| ParseError::OutOfRange {
        token: token.to_string(),
        source,
    };
    let ty = match letters {
        "A" => ComponentType::a(subscript).map_err(range)?,
        "D" => ComponentType::d(subscript).map_err(range)?,
        "E" => ComponentType::e(subscript).map_err(range)?,
        "G" => match subscript {
            1 => ComponentType::G1,
            2 => ComponentType::G2,
            _ => {
                return Err(range(RangeError {
                    letter: 'G',
                    subscript,
                }))
            }
        },
        "BC" if subscript == 1 => ComponentType::BC1,
        _ => return Err(malformed()),
    };
    Ok((count, ty))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(text: &str) -> String {
        parse_name(text).unwrap().canonical_name()
    }

    #[test]
    fn parses_subscripted_names() {
        assert_eq!(names("A7+A4"), "A7+A4");
        assert_eq!(names("A4 + A7"), "A7+A4");
        assert_eq!(names("E8+G2"), "E8+G2");
        assert_eq!(names("E_7+BC_1"), "E7+BC1");
        assert_eq!(names("2A1"), "A1+A1");
        assert_eq!(names("2A3+D4"), "D4+A3+A3");
        assert_eq!(names(""), "");
        assert_eq!(names("(empty)"), "");
    }

    #[test]
    fn rejects_bad_tokens() {
        for bad in ["D3", "E5", "E9", "A0", "G3", "BC2", "B3", "A", "A7+", "+A1", "A-1", "0A2", "F4"] {
            let err = parse_name(bad).unwrap_err();
            let msg = err.to_string();
            assert!(msg.contains('`'), "{bad}: {msg}");
        }
        let err = parse_name("A2+D3").unwrap_err();
        assert!(err.to_string().contains("D3"), "{err}");
        assert!(matches!(err, ParseError::OutOfRange { .. }));
    }
}
