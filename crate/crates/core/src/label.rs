//! Point labels. Labels are metadata: the search kernels work on dense
//! indices, while constructors and reports use labels to expose the
//! combinatorics (2-subsets of a base set, multisets over {a,b,c}, ...).

use std::fmt;

/// A point label.
///
/// * `Pair{x,y}` — a 2-subset of an integer base set.
/// * `Multiset{a,b,c}` — exponents of a multiset `a^i b^j c^m`.
/// * `Tuple(x,i)` — an ordered pair, used before pair identification.
/// * `Atom` — an opaque name.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointLabel {
    Pair(u32, u32),
    Multiset { a: u32, b: u32, c: u32 },
    Tuple(u32, u32),
    Atom(String),
}

impl PointLabel {
    /// A pair label; the two elements are stored sorted.
    pub fn pair(x: u32, y: u32) -> Self {
        assert_ne!(x, y, "pair labels need two distinct elements");
        PointLabel::Pair(x.min(y), x.max(y))
    }

    pub fn as_pair(&self) -> Option<(u32, u32)> {
        match *self {
            PointLabel::Pair(x, y) => Some((x, y)),
            _ => None,
        }
    }

    /// Parses the textual form, falling back to `Atom` when no structured
    /// grammar matches.
    pub fn parse(text: &str) -> Self {
        if let Some(l) = Self::parse_pair(text) {
            return l;
        }
        if let Some(l) = Self::parse_tuple(text) {
            return l;
        }
        if let Some(l) = Self::parse_multiset(text) {
            return l;
        }
        PointLabel::Atom(text.to_string())
    }

    fn parse_pair(text: &str) -> Option<Self> {
        let inner = text.strip_prefix('{')?.strip_suffix('}')?;
        let (x, y) = inner.split_once(',')?;
        let x: u32 = x.trim().parse().ok()?;
        let y: u32 = y.trim().parse().ok()?;
        if x == y {
            return None;
        }
        Some(PointLabel::pair(x, y))
    }

    fn parse_tuple(text: &str) -> Option<Self> {
        let inner = text.strip_prefix('(')?.strip_suffix(')')?;
        let (x, y) = inner.split_once(',')?;
        Some(PointLabel::Tuple(
            x.trim().parse().ok()?,
            y.trim().parse().ok()?,
        ))
    }

    /// Multisets render as words in exponent form: `a3`, `a2b`, `abc`.
    fn parse_multiset(text: &str) -> Option<Self> {
        if text.is_empty() {
            return None;
        }
        let mut exps = [0u32; 3];
        let mut chars = text.chars().peekable();
        let mut last_letter: i32 = -1;
        while let Some(ch) = chars.next() {
            let idx = match ch {
                'a' => 0,
                'b' => 1,
                'c' => 2,
                _ => return None,
            };
            if idx as i32 <= last_letter {
                return None;
            }
            last_letter = idx as i32;
            let mut digits = String::new();
            while let Some(d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(*d);
                    chars.next();
                } else {
                    break;
                }
            }
            exps[idx] = if digits.is_empty() {
                1
            } else {
                digits.parse().ok()?
            };
            if exps[idx] == 0 {
                return None;
            }
        }
        Some(PointLabel::Multiset {
            a: exps[0],
            b: exps[1],
            c: exps[2],
        })
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Pair(x, y) => write!(f, "{{{x},{y}}}"),
            PointLabel::Multiset { a, b, c } => {
                for (letter, e) in [('a', a), ('b', b), ('c', c)] {
                    match e {
                        0 => {}
                        1 => write!(f, "{letter}")?,
                        _ => write!(f, "{letter}{e}")?,
                    }
                }
                Ok(())
            }
            PointLabel::Tuple(x, y) => write!(f, "({x},{y})"),
            PointLabel::Atom(s) => f.write_str(s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_round_trip() {
        let l = PointLabel::pair(5, 2);
        assert_eq!(l.to_string(), "{2,5}");
        assert_eq!(PointLabel::parse("{2,5}"), l);
    }

    #[test]
    fn multiset_round_trip() {
        for (text, a, b, c) in [
            ("a3", 3, 0, 0),
            ("a2b", 2, 1, 0),
            ("abc", 1, 1, 1),
            ("bc2", 0, 1, 2),
            ("c3", 0, 0, 3),
        ] {
            let l = PointLabel::Multiset { a, b, c };
            assert_eq!(l.to_string(), text);
            assert_eq!(PointLabel::parse(text), l, "{text}");
        }
    }

    #[test]
    fn unstructured_text_becomes_atom() {
        assert_eq!(
            PointLabel::parse("p7"),
            PointLabel::Atom("p7".to_string())
        );
        // out-of-order or repeated letters are not multisets
        assert_eq!(
            PointLabel::parse("ba"),
            PointLabel::Atom("ba".to_string())
        );
        assert_eq!(
            PointLabel::parse("{3,3}"),
            PointLabel::Atom("{3,3}".to_string())
        );
    }

    #[test]
    fn tuple_round_trip() {
        let l = PointLabel::Tuple(4, 1);
        assert_eq!(l.to_string(), "(4,1)");
        assert_eq!(PointLabel::parse("(4,1)"), l);
    }
}
