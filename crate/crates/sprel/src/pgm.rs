//! Binary greyscale PGM (`P5`) depth maps.
//!
//! 16-bit samples are big-endian; files with `maxval < 256` use one byte per
//! sample. Sample values are read as closeness (larger is nearer).

use sprel_core::DepthMap;

use crate::{Error, Result};

fn bad(msg: impl Into<String>) -> Error {
    Error::Pgm(msg.into())
}

/// Reads the next header token, skipping whitespace and `#` comments.
fn token<'a>(data: &'a [u8], pos: &mut usize) -> Result<&'a [u8]> {
    loop {
        while *pos < data.len() && data[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        if *pos < data.len() && data[*pos] == b'#' {
            while *pos < data.len() && data[*pos] != b'\n' {
                *pos += 1;
            }
        } else {
            break;
        }
    }
    let start = *pos;
    while *pos < data.len() && !data[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
    if start == *pos {
        return Err(bad("truncated header"));
    }
    Ok(&data[start..*pos])
}

fn number(data: &[u8], pos: &mut usize, what: &str) -> Result<usize> {
    let t = token(data, pos)?;
    std::str::from_utf8(t)
        .ok()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad(format!("bad {what}")))
}

pub fn decode(data: &[u8]) -> Result<DepthMap> {
    let mut pos = 0;
    if token(data, &mut pos)? != b"P5" {
        return Err(bad("missing P5 magic"));
    }
    let width = number(data, &mut pos, "width")?;
    let height = number(data, &mut pos, "height")?;
    let maxval = number(data, &mut pos, "maxval")?;
    if width == 0 || height == 0 {
        return Err(bad("zero dimension"));
    }
    if maxval == 0 || maxval > 65535 {
        return Err(bad("maxval must lie in 1..=65535"));
    }
    // exactly one whitespace byte separates the header from the raster
    pos += 1;
    let bytes_per = if maxval < 256 { 1 } else { 2 };
    let need = width * height * bytes_per;
    let raster = data.get(pos..pos + need).ok_or_else(|| {
        bad(format!(
            "raster holds {} bytes, expected {need}",
            data.len().saturating_sub(pos)
        ))
    })?;
    let values = if bytes_per == 1 {
        raster.iter().map(|&b| f64::from(b)).collect()
    } else {
        raster
            .chunks_exact(2)
            .map(|c| f64::from(u16::from_be_bytes([c[0], c[1]])))
            .collect()
    };
    Ok(DepthMap::new(width, height, values)?)
}

/// Encodes a 16-bit `P5` image, row-major.
pub fn encode16(width: usize, height: usize, samples: &[u16]) -> Result<Vec<u8>> {
    if samples.len() != width * height {
        return Err(bad("sample count does not match dimensions"));
    }
    let mut out = format!("P5\n{width} {height}\n65535\n").into_bytes();
    out.reserve(samples.len() * 2);
    for s in samples {
        out.extend_from_slice(&s.to_be_bytes());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_bit_round_trip() {
        let samples: Vec<u16> = (0..12).map(|i| i * 5000).collect();
        let bytes = encode16(4, 3, &samples).unwrap();
        let map = decode(&bytes).unwrap();
        assert_eq!((map.width(), map.height()), (4, 3));
        assert_eq!(map.get(3, 2), Some(55000.0));
        assert_eq!(map.get(1, 0), Some(5000.0));
    }

    #[test]
    fn eight_bit_with_comments() {
        let mut bytes = b"P5 # depth\n2 2\n# max\n255\n".to_vec();
        bytes.extend_from_slice(&[1, 2, 3, 255]);
        let map = decode(&bytes).unwrap();
        assert_eq!(map.values(), &[1.0, 2.0, 3.0, 255.0]);
    }

    #[test]
    fn rejects_truncated_and_wrong_magic() {
        let bytes = encode16(4, 3, &[0; 12]).unwrap();
        assert!(decode(&bytes[..bytes.len() - 1]).is_err());
        assert!(decode(b"P2\n1 1\n255\n0").is_err());
        assert!(decode(b"P5\n1 1\n70000\n\0\0").is_err());
    }
}
