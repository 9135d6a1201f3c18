//! graph6 codec: the compact newline-friendly text encoding used for all
//! graph interchange in this crate. Bits of the upper triangle are taken
//! column by column ((0,1), (0,2), (1,2), (0,3), ...), packed big-endian
//! six per byte, each byte offset by 63.

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

const OFFSET: u8 = 63;
const LONG_MARK: u8 = 126;
const MAX_SHORT: usize = 62;
const MAX_LONG: usize = 258_047;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= MAX_SHORT {
        out.push(n as u8 + OFFSET);
    } else {
        assert!(n <= MAX_LONG, "graph6 long form supports n <= {MAX_LONG}");
        out.push(LONG_MARK);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=LONG_MARK).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..126")));
    }
    let (n, body) = if bytes[0] == LONG_MARK {
        if bytes.len() >= 2 && bytes[1] == LONG_MARK {
            return Err(Error::Graph6("n >= 258048 is unsupported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated long-form header".into()));
        }
        let n = ((bytes[1] - OFFSET) as usize) << 12
            | ((bytes[2] - OFFSET) as usize) << 6
            | (bytes[3] - OFFSET) as usize;
        (n, &bytes[4..])
    } else {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    if body.len() != expect {
        return Err(Error::Graph6(format!(
            "expected {expect} edge bytes for n={n}, got {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let bit = body[idx / 6] - OFFSET >> (5 - idx % 6) & 1;
            if bit == 1 {
                g = g.add_edge(u, v).expect("fresh pair");
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    // padding bits beyond the triangle must be zero
    if nbits % 6 != 0 {
        let pad = body[expect - 1] - OFFSET;
        let mask = (1u8 << (6 - nbits % 6)) - 1;
        if pad & mask != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(encode(&Graph::complete(3)), "Bw");
        assert_eq!(encode(&Graph::complete(4)), "C~");
        assert_eq!(decode("@").unwrap(), Graph::complete(1));
    }

    #[test]
    fn roundtrip_small() {
        for g in [
            Graph::path(5),
            Graph::cycle(6).unwrap(),
            Graph::star(7),
            Graph::complete(2).copies(3),
            Graph::empty(1),
        ] {
            assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn long_form() {
        let g = Graph::path(63);
        let text = encode(&g);
        assert_eq!(text.as_bytes()[0], 126);
        assert_eq!(decode(&text).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(decode(""), Err(Error::Graph6(_))));
        assert!(matches!(decode("B"), Err(Error::Graph6(_))));   // missing edge byte
        assert!(matches!(decode("Bww"), Err(Error::Graph6(_)))); // trailing garbage
        assert!(matches!(decode("B\x1f"), Err(Error::Graph6(_))));
        assert!(matches!(decode("Bx"), Err(Error::Graph6(_))));  // nonzero padding
    }
}
