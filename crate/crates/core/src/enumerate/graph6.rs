//! graph6 text encoding of labeled simple graphs.
//!
//! `N(n)` header (one byte `n + 63` for `n <= 62`, `~` plus three bytes up
//! to 258047, `~~` plus six bytes beyond), then the upper triangle of the
//! adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`,
//! six bits per byte, most significant first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | u8::from(col.contains(i));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    let push_bits = |out: &mut Vec<u8>, value: usize, groups: u32| {
        for k in (0..groups).rev() {
            out.push(((value >> (6 * k)) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_MAX {
        out.push(b'~');
        push_bits(out, n, 3);
    } else {
        out.extend_from_slice(b"~~");
        push_bits(out, n, 6);
    }
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let (bytes, base) = match s.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (s.as_bytes(), 0),
    };
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: base + offset,
        reason: reason.into(),
    };

    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(err(
                i,
                &format!("byte 0x{b:02x} outside the printable range 63..=126"),
            ));
        }
    }
    let digits = |from: usize, count: usize| -> Result<usize> {
        if bytes.len() < from + count {
            return Err(err(bytes.len(), "truncated vertex count"));
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize))
    };
    let (n, mut pos) = match bytes {
        [] => return Err(err(0, "empty string")),
        [b'~', b'~', ..] => (digits(2, 6)?, 8),
        [b'~', ..] => (digits(1, 3)?, 4),
        [b, ..] => ((b - BIAS) as usize, 1),
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos < need {
        return Err(err(
            bytes.len(),
            &format!("expected {need} adjacency bytes for n={n}"),
        ));
    }
    if bytes.len() - pos > need {
        return Err(err(pos + need, "trailing bytes after adjacency data"));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - BIAS;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    pos += need;
    if nbits % 6 != 0 {
        let last = bytes[pos - 1] - BIAS;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}
