//! graph6 text codec, short form only (n ≤ 62).
//!
//! Layout: one header byte `n + 63`, then the upper triangle of the adjacency
//! matrix read column by column — bit order x(0,1), x(0,2), x(1,2), x(0,3), … —
//! packed big-endian into 6-bit groups, each offset by 63. Padding bits in the
//! final group must be zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_SHORT_N: usize = 62;

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_N {
        return Err(Error::Size(format!(
            "graph6 short form encodes at most {MAX_SHORT_N} vertices, got {n}"
        )));
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let mut out = Vec::with_capacity(1 + (nbits + 5) / 6);
    out.push(OFFSET + n as u8);
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn parse_graph6(s: &str) -> Result<Graph> {
    let b = s.as_bytes();
    if b.is_empty() {
        return Err(Error::Parse { offset: 0, msg: "empty graph6 string".into() });
    }
    for (i, &c) in b.iter().enumerate() {
        if !(OFFSET..=126).contains(&c) {
            return Err(Error::Parse {
                offset: i,
                msg: format!("byte {c:#04x} outside graph6 range 63..=126"),
            });
        }
    }
    if b[0] == 126 {
        return Err(Error::Parse {
            offset: 0,
            msg: "long-form graph6 (n > 62) is not supported".into(),
        });
    }
    let n = (b[0] - OFFSET) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = 1 + (nbits + 5) / 6;
    if b.len() != need {
        return Err(Error::Parse {
            offset: b.len().min(need),
            msg: format!("expected {need} bytes for n={n}, got {}", b.len()),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = b[1 + idx / 6] - OFFSET;
            let bit = byte >> (5 - idx % 6) & 1;
            if bit == 1 {
                g = g.add_edge(i, j).expect("triangle indices are in range");
            }
            idx += 1;
            if idx == nbits {
                break 'cols;
            }
        }
    }
    // Trailing padding bits must be zero.
    if nbits % 6 != 0 {
        let last = b[b.len() - 1] - OFFSET;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse {
                offset: b.len() - 1,
                msg: "nonzero padding bits".into(),
            });
        }
    }
    Ok(g)
}
