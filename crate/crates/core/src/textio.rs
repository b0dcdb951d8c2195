//! Text file formats. Every element is lowercase hex, whitespace separated;
//! files open with a field descriptor line and, where relevant, a code
//! descriptor line. Blank lines and `#` comments are skipped on input.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::Matrix;
use crate::recovery::RecoveryTransform;

pub fn format_elem(e: Elem) -> String {
    format!("{:x}", e.0)
}

pub fn parse_elem(s: &str) -> Result<Elem> {
    u16::from_str_radix(s, 16)
        .map(Elem)
        .map_err(|_| Error::Parse(format!("bad element {s:?}")))
}

pub fn format_vector(v: &[Elem]) -> String {
    v.iter().map(|&e| format_elem(e)).collect::<Vec<_>>().join(" ")
}

pub fn parse_vector(line: &str) -> Result<Vec<Elem>> {
    line.split_whitespace().map(parse_elem).collect()
}

/// `field m=<int> poly=0x<hex> n=<int>`
pub fn parse_field_descriptor(line: &str) -> Result<(u32, u32, usize)> {
    let rest = line
        .trim()
        .strip_prefix("field")
        .ok_or_else(|| Error::Parse(format!("expected field descriptor, got {line:?}")))?;
    let kv = parse_kv_tokens(rest)?;
    let m = kv_int(&kv, "m")? as u32;
    let poly_str = kv
        .get("poly")
        .ok_or_else(|| Error::Parse("field descriptor missing poly".into()))?;
    let poly_hex = poly_str
        .strip_prefix("0x")
        .ok_or_else(|| Error::Parse(format!("poly must be 0x-prefixed hex: {poly_str:?}")))?;
    let poly = u32::from_str_radix(poly_hex, 16)
        .map_err(|_| Error::Parse(format!("bad poly {poly_str:?}")))?;
    let n = kv_int(&kv, "n")? as usize;
    Ok((m, poly, n))
}

/// `rscode n=<int> k=<int> b=<int>`
pub fn parse_code_descriptor(line: &str) -> Result<(usize, usize, usize)> {
    let rest = line
        .trim()
        .strip_prefix("rscode")
        .ok_or_else(|| Error::Parse(format!("expected code descriptor, got {line:?}")))?;
    let kv = parse_kv_tokens(rest)?;
    Ok((
        kv_int(&kv, "n")? as usize,
        kv_int(&kv, "k")? as usize,
        kv_int(&kv, "b")? as usize,
    ))
}

fn parse_kv_tokens(s: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for tok in s.split([' ', '\t', ',']).filter(|t| !t.is_empty()) {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {tok:?}")))?;
        out.insert(key.to_string(), val.to_string());
    }
    Ok(out)
}

fn kv_int(kv: &BTreeMap<String, String>, key: &str) -> Result<u64> {
    let v = kv
        .get(key)
        .ok_or_else(|| Error::Parse(format!("missing {key}")))?;
    v.parse()
        .map_err(|_| Error::Parse(format!("bad integer {key}={v}")))
}

/// `matrix <rows> <cols>` header, then one line of hex elements per row.
pub fn format_matrix(m: &Matrix) -> String {
    let mut out = format!("matrix {} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        out.push_str(&format_vector(m.row(i)));
        out.push('\n');
    }
    out
}

/// Reads one matrix block from the front of `lines`, consuming the lines it
/// uses. Skips blank and comment lines before the header.
pub fn parse_matrix<'a>(lines: &mut impl Iterator<Item = &'a str>) -> Result<Matrix> {
    let header = next_content_line(lines)
        .ok_or_else(|| Error::Parse("missing matrix header".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 || parts[0] != "matrix" {
        return Err(Error::Parse(format!("bad matrix header {header:?}")));
    }
    let rows: usize = parts[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad row count {:?}", parts[1])))?;
    let cols: usize = parts[2]
        .parse()
        .map_err(|_| Error::Parse(format!("bad col count {:?}", parts[2])))?;
    let mut data = Vec::with_capacity(rows * cols);
    while data.len() < rows * cols {
        let line = next_content_line(lines)
            .ok_or_else(|| Error::Parse("matrix body ended early".into()))?;
        data.extend(parse_vector(line)?);
    }
    if data.len() != rows * cols {
        return Err(Error::Parse("matrix body has trailing elements".into()));
    }
    Ok(Matrix::new(rows, cols, data))
}

pub fn next_content_line<'a>(lines: &mut impl Iterator<Item = &'a str>) -> Option<&'a str> {
    lines
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Transform export: field and code descriptors, the recovery matrix B, then
/// the four factors for audit. The W diagonal block is omitted when b = 1.
pub fn format_transform(field: &Field, t: &RecoveryTransform) -> String {
    let mut out = String::new();
    out.push_str(&field.descriptor());
    out.push('\n');
    out.push_str(&format!("rscode n={} k={} b={}\n", t.n(), t.k(), t.b()));
    out.push_str("# recovery matrix B\n");
    out.push_str(&format_matrix(t.b_matrix()));
    out.push_str("# factor (A^T)^-1\n");
    out.push_str(&format_matrix(t.a_inv_t()));
    if t.b() != 1 {
        out.push_str("# factor diag (W_kk)^-1\n");
        out.push_str(&format_matrix(&Matrix::new(1, t.k(), t.w_inv().to_vec())));
    }
    out.push_str("# factor (F^-1_kk)^-1\n");
    out.push_str(&format_matrix(t.f_inv_kk_inv()));
    out.push_str("# factor diag (D_kk)^-1\n");
    out.push_str(&format_matrix(&Matrix::new(1, t.k(), t.d_inv().to_vec())));
    out
}

/// Parses a transform export and re-verifies the recomposition before
/// returning the field and transform.
pub fn parse_transform(text: &str) -> Result<(Field, RecoveryTransform)> {
    let mut lines = text.lines();
    let fd = next_content_line(&mut lines)
        .ok_or_else(|| Error::Parse("empty transform file".into()))?;
    let (m, poly, fn_) = parse_field_descriptor(fd)?;
    let field = Field::new(m, poly, fn_)?;
    let cd = next_content_line(&mut lines)
        .ok_or_else(|| Error::Parse("missing code descriptor".into()))?;
    let (n, k, b) = parse_code_descriptor(cd)?;
    if n != field.n() {
        return Err(Error::Parse(format!(
            "code length {n} does not match field order {}",
            field.n()
        )));
    }

    let b_matrix = parse_matrix(&mut lines)?;
    let a_inv_t = parse_matrix(&mut lines)?;
    let w_inv = if b != 1 {
        let w = parse_matrix(&mut lines)?;
        expect_diag_block(&w, k, "W")?
    } else {
        vec![Elem::ONE; k]
    };
    let f_inv_kk_inv = parse_matrix(&mut lines)?;
    let d = parse_matrix(&mut lines)?;
    let d_inv = expect_diag_block(&d, k, "D")?;

    for (mat, name) in [(&b_matrix, "B"), (&a_inv_t, "(A^T)^-1"), (&f_inv_kk_inv, "(F^-1_kk)^-1")] {
        if mat.rows() != k || mat.cols() != k {
            return Err(Error::Parse(format!(
                "{name} block is {}x{}, expected {k}x{k}",
                mat.rows(),
                mat.cols()
            )));
        }
    }

    let t = RecoveryTransform::from_parts(
        &field, n, k, b, a_inv_t, w_inv, f_inv_kk_inv, d_inv, b_matrix,
    )?;
    Ok((field, t))
}

fn expect_diag_block(m: &Matrix, k: usize, name: &str) -> Result<Vec<Elem>> {
    if m.rows() != 1 || m.cols() != k {
        return Err(Error::Parse(format!(
            "{name} diagonal block is {}x{}, expected 1x{k}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m.row(0).to_vec())
}

/// Config files mirror the CLI flags: one `key = value` per line.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, val) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key = value, got {line:?}")))?;
        out.insert(key.trim().to_string(), val.trim().to_string());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_code;
    use crate::gfft::GfftPlan;
    use crate::recovery::precompute;

    #[test]
    fn descriptors_round_trip() {
        let f = Field::new(3, 0b1011, 7).unwrap();
        assert_eq!(f.descriptor(), "field m=3 poly=0xb n=7");
        assert_eq!(parse_field_descriptor(&f.descriptor()).unwrap(), (3, 0xb, 7));
        assert_eq!(
            parse_code_descriptor("rscode n=7 k=4 b=2").unwrap(),
            (7, 4, 2)
        );
    }

    #[test]
    fn matrix_round_trip() {
        let m = Matrix::new(2, 3, (0..6).map(|i| Elem(i as u16 + 9)).collect());
        let text = format_matrix(&m);
        let parsed = parse_matrix(&mut text.lines()).unwrap();
        assert_eq!(parsed, m);
    }

    #[test]
    fn transform_round_trip_b2_and_b1() {
        let f = Field::new(3, 0b1011, 7).unwrap();
        let plan = GfftPlan::new(&f);
        for b in [1usize, 2] {
            let spec = build_code(&f, 7, 4, b).unwrap();
            let g = spec.generator_matrix();
            let t = precompute(&f, &spec, &g, &plan).unwrap();
            let text = format_transform(&f, &t);
            // b=1 export omits the W factor block
            assert_eq!(text.contains("W_kk"), b != 1);
            let (f2, t2) = parse_transform(&text).unwrap();
            assert_eq!(f2.descriptor(), f.descriptor());
            assert_eq!(t2, t);
        }
    }

    #[test]
    fn corrupted_transform_rejected() {
        let f = Field::new(3, 0b1011, 7).unwrap();
        let plan = GfftPlan::new(&f);
        let spec = build_code(&f, 7, 4, 2).unwrap();
        let t = precompute(&f, &spec, &spec.generator_matrix(), &plan).unwrap();
        let text = format_transform(&f, &t);
        // flip the first element of the B block; recomposition must fail
        let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
        let b_row = lines
            .iter()
            .position(|l| l == "# recovery matrix B")
            .unwrap()
            + 2;
        let mut toks: Vec<&str> = lines[b_row].split_whitespace().collect();
        let flipped = if toks[0] == "0" { "1" } else { "0" };
        toks[0] = flipped;
        lines[b_row] = toks.join(" ");
        let mangled = lines.join("\n");
        assert!(parse_transform(&mangled).is_err());
    }

    #[test]
    fn config_file_parse() {
        let text = "# experiment\nfield = m=3,poly=0xb,n=7\ntrials = 100\n\nseed= 42\n";
        let kv = parse_config_file(text).unwrap();
        assert_eq!(kv["field"], "m=3,poly=0xb,n=7");
        assert_eq!(kv["trials"], "100");
        assert_eq!(kv["seed"], "42");
    }
}
