//! Bitstream codec for the anti-uniform code.
//!
//! Symbol `i` (1-based, `i < n`) encodes as `i-1` ones followed by a zero;
//! symbol `n` encodes as `n-1` ones. The Kraft sum of these lengths is
//! exactly one. Bits pack MSB-first into bytes; the framed byte format is an
//! 8-byte little-endian symbol count followed by the packed payload.

use crate::error::{Error, Result};
use crate::profile::LengthProfile;

/// A bit string packed MSB-first with an exact bit length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bitstream {
    bytes: Vec<u8>,
    bit_len: usize,
}

impl Bitstream {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut s = Self::new();
        for &b in bits {
            s.push(b);
        }
        s
    }

    pub fn push(&mut self, bit: bool) {
        if self.bit_len % 8 == 0 {
            self.bytes.push(0);
        }
        if bit {
            let byte = self.bytes.last_mut().expect("just pushed");
            *byte |= 0x80 >> (self.bit_len % 8);
        }
        self.bit_len += 1;
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        if i >= self.bit_len {
            return None;
        }
        Some(self.bytes[i / 8] & (0x80 >> (i % 8)) != 0)
    }

    pub fn len(&self) -> usize {
        self.bit_len
    }

    pub fn is_empty(&self) -> bool {
        self.bit_len == 0
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.bit_len).map(|i| self.get(i).expect("in range"))
    }
}

fn check_alphabet(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::BadParam(format!(
            "codec needs an alphabet of at least 2 symbols, got {n}"
        )));
    }
    Ok(())
}

/// Codeword lengths of the code: the anti-uniform profile for `n`.
pub fn codeword_lengths(n: u32) -> Result<LengthProfile> {
    check_alphabet(n)?;
    Ok(LengthProfile::auh(n as usize))
}

/// Encodes 1-based symbols into a bitstream.
pub fn encode(symbols: &[u32], n: u32) -> Result<Bitstream> {
    check_alphabet(n)?;
    let mut out = Bitstream::new();
    for &s in symbols {
        if s == 0 || s > n {
            return Err(Error::InvalidSymbol { symbol: s, n });
        }
        let ones = if s == n { n - 1 } else { s - 1 };
        for _ in 0..ones {
            out.push(true);
        }
        if s < n {
            out.push(false);
        }
    }
    Ok(out)
}

/// Decodes a bitstream produced by [`encode`]; the exact bit length of the
/// stream delimits it, so no symbol count is needed.
pub fn decode(stream: &Bitstream, n: u32) -> Result<Vec<u32>> {
    check_alphabet(n)?;
    let mut out = Vec::new();
    let mut ones = 0u32;
    for bit in stream.iter() {
        if bit {
            ones += 1;
            if ones == n - 1 {
                out.push(n);
                ones = 0;
            }
        } else {
            out.push(ones + 1);
            ones = 0;
        }
    }
    if ones != 0 {
        return Err(Error::TruncatedStream);
    }
    Ok(out)
}

/// Framed byte format: `count: u64` little-endian, then packed bits. Padding
/// bits after the last codeword are ignored on read.
pub fn encode_framed(symbols: &[u32], n: u32) -> Result<Vec<u8>> {
    let bits = encode(symbols, n)?;
    let mut out = Vec::with_capacity(8 + bits.as_bytes().len());
    out.extend_from_slice(&(symbols.len() as u64).to_le_bytes());
    out.extend_from_slice(bits.as_bytes());
    Ok(out)
}

/// Inverse of [`encode_framed`].
pub fn decode_framed(bytes: &[u8], n: u32) -> Result<Vec<u32>> {
    check_alphabet(n)?;
    if bytes.len() < 8 {
        return Err(Error::TruncatedStream);
    }
    let count = u64::from_le_bytes(bytes[..8].try_into().expect("checked len"));
    let payload = &bytes[8..];
    let total_bits = payload.len() * 8;
    let mut out = Vec::with_capacity(count as usize);
    let mut pos = 0usize;
    let bit_at = |i: usize| payload[i / 8] & (0x80 >> (i % 8)) != 0;
    while (out.len() as u64) < count {
        let mut ones = 0u32;
        loop {
            if pos >= total_bits {
                return Err(Error::TruncatedStream);
            }
            let bit = bit_at(pos);
            pos += 1;
            if bit {
                ones += 1;
                if ones == n - 1 {
                    out.push(n);
                    break;
                }
            } else {
                out.push(ones + 1);
                break;
            }
        }
    }
    Ok(out)
}
