//! graph6 encoding of undirected simple graphs.
//!
//! The order `n` comes first: one byte `63 + n` for `n <= 62`, `~` plus three
//! 6-bit groups for `n <= 258047`, `~~` plus six groups beyond that. Then the
//! upper triangle in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) is
//! packed big-endian into 6-bit groups, zero-padded, each offset by 63.

use std::fmt;

use turan_core::Graph;

pub const HEADER: &str = ">>graph6<<";

/// Largest order the encoding can express.
pub const MAX_ORDER: usize = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("graph6 byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    OutOfRange(u8),
    Truncated { expected: usize, found: usize },
    Trailing,
    NonZeroPadding,
    TooLarge(usize),
}

impl fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6ErrorKind::Empty => write!(f, "empty input"),
            Graph6ErrorKind::OutOfRange(b) => write!(f, "character {b:#04x} outside 63..=126"),
            Graph6ErrorKind::Truncated { expected, found } => {
                write!(f, "expected {expected} edge bytes, found {found}")
            }
            Graph6ErrorKind::Trailing => write!(f, "trailing characters after the edge bytes"),
            Graph6ErrorKind::NonZeroPadding => write!(f, "padding bits are not zero"),
            Graph6ErrorKind::TooLarge(n) => write!(f, "order {n} is not supported"),
        }
    }
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_ORDER, "order {n} exceeds the graph6 range");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(b'~');
        push_groups(&mut out, n as u64, 3);
    } else {
        out.extend_from_slice(b"~~");
        push_groups(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn push_groups(out: &mut Vec<u8>, value: u64, groups: u32) {
    for k in (0..groups).rev() {
        out.push(63 + (value >> (6 * k) & 63) as u8);
    }
}

/// Decodes one graph. A leading `>>graph6<<` header and one trailing newline
/// are accepted; offsets count from the start of `text`.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let mut start = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        start = HEADER.len();
    }
    let mut end = bytes.len();
    if bytes[start..end].ends_with(b"\n") {
        end -= 1;
        if bytes[start..end].ends_with(b"\r") {
            end -= 1;
        }
    }
    let body = &bytes[start..end];
    if body.is_empty() {
        return Err(err(start, Graph6ErrorKind::Empty));
    }
    if let Some(i) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(start + i, Graph6ErrorKind::OutOfRange(body[i])));
    }
    let sextet = |i: usize| -> Result<u64, Graph6Error> {
        match body.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
            Some(&b) => Err(err(start + i, Graph6ErrorKind::OutOfRange(b))),
            None => Err(err(
                start + i,
                Graph6ErrorKind::Truncated {
                    expected: 1,
                    found: 0,
                },
            )),
        }
    };
    let read_groups = |from: usize, groups: usize| -> Result<u64, Graph6Error> {
        (from..from + groups).try_fold(0u64, |acc, i| Ok(acc << 6 | sextet(i)?))
    };
    let (n, mut pos) = if body[0] != b'~' {
        (sextet(0)? as usize, 1)
    } else if body.get(1) != Some(&b'~') {
        (read_groups(1, 3)? as usize, 4)
    } else {
        (read_groups(2, 6)? as usize, 8)
    };
    // Edge bits are held in a dense bitset, so keep n within reason.
    if n > crate::MAX_GRAPH_ORDER {
        return Err(err(start, Graph6ErrorKind::TooLarge(n)));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let available = body.len() - pos;
    if available < expected {
        return Err(err(
            start + body.len(),
            Graph6ErrorKind::Truncated {
                expected,
                found: available,
            },
        ));
    }
    if available > expected {
        return Err(err(start + pos + expected, Graph6ErrorKind::Trailing));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    let mut current = 0;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                current = sextet(pos)?;
                pos += 1;
            }
            if current >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 && current & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(err(start + pos - 1, Graph6ErrorKind::NonZeroPadding));
    }
    Ok(g)
}
