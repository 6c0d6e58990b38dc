use std::fmt::Write as _;

use crate::algebra::{prime_power, FieldSpec, Matrix};
use crate::grassmann::Subspace;
use crate::search::{CodeParams, SubspaceCode};

use super::{lines, parse_err, IoError};

/// A code with the comment lines that head its file.
///
/// The header line reads `q=2 n=8 k=4 d=4 M=4605`, with a trailing
/// `modulus=...` (coefficients lowest degree first) when the field is not
/// the default one for `q`. Each codeword follows as its RREF rows, one row
/// of digits per line, after a blank line.
#[derive(Clone, Debug)]
pub struct CodeFile {
    pub comments: Vec<String>,
    pub code: SubspaceCode,
}

fn header(p: &CodeParams, m: usize) -> String {
    let mut h = format!("q={} n={} k={} d={} M={m}", p.q(), p.n(), p.k(), p.d());
    let default = FieldSpec::new(p.q()).ok();
    if default.as_ref() != Some(p.field()) {
        let digits: String = p.field().modulus().iter().map(|c| char::from(b'0' + c)).collect();
        let _ = write!(h, " modulus={digits}");
    }
    h
}

impl CodeFile {
    pub fn new(code: SubspaceCode) -> Self {
        Self { comments: Vec::new(), code }
    }

    pub fn with_comments(code: SubspaceCode, comments: Vec<String>) -> Self {
        Self { comments, code }
    }

    pub fn check_writable(code: &SubspaceCode) -> Result<(), IoError> {
        if code.params().q() > 9 {
            return Err(parse_err(0, format!("q={} needs more than one digit per entry", code.params().q())));
        }
        Ok(())
    }

    /// The file text; fails only for fields too large for single digits.
    pub fn render(&self) -> Result<String, IoError> {
        Self::check_writable(&self.code)?;
        let mut out = String::new();
        for c in &self.comments {
            out.push('#');
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&header(self.code.params(), self.code.len()));
        out.push('\n');
        for s in self.code.iter() {
            out.push('\n');
            for row in s.rref().iter_rows() {
                out.extend(row.iter().map(|&x| char::from(b'0' + x)));
                out.push('\n');
            }
        }
        Ok(out)
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        let mut comments = Vec::new();
        let mut params: Option<(CodeParams, usize)> = None;
        let mut code: Option<SubspaceCode> = None;
        let mut block: Vec<(usize, &str)> = Vec::new();
        let mut last = 0;

        let flush = |block: &mut Vec<(usize, &str)>, code: &mut Option<SubspaceCode>| -> Result<(), IoError> {
            if block.is_empty() {
                return Ok(());
            }
            let c = code.as_mut().expect("header precedes records");
            let word = parse_record(c.params(), block)?;
            c.push(word).map_err(|e| parse_err(block[0].0, e.to_string()))?;
            block.clear();
            Ok(())
        };

        for (no, line) in lines(text)? {
            last = no;
            if let Some(rest) = line.strip_prefix('#') {
                if params.is_none() {
                    comments.push(rest.to_string());
                }
                continue;
            }
            let t = line.trim();
            if params.is_none() {
                if t.is_empty() {
                    continue;
                }
                let (p, m) = parse_header(no, t)?;
                code = Some(SubspaceCode::new(p.clone()));
                params = Some((p, m));
            } else if t.is_empty() {
                flush(&mut block, &mut code)?;
            } else {
                block.push((no, t));
            }
        }
        flush(&mut block, &mut code)?;
        let (Some((_, m)), Some(code)) = (params, code) else {
            return Err(parse_err(last.max(1), "missing header line"));
        };
        if code.len() != m {
            return Err(parse_err(last, format!("header says M={m}, found {} records", code.len())));
        }
        Ok(Self { comments, code })
    }
}

fn parse_header(no: usize, t: &str) -> Result<(CodeParams, usize), IoError> {
    let mut vals: [Option<u64>; 5] = [None; 5];
    let mut modulus: Option<Vec<u8>> = None;
    for tok in t.split_whitespace() {
        let (key, val) = tok.split_once('=').ok_or_else(|| parse_err(no, format!("bad header field {tok:?}")))?;
        if key == "modulus" {
            if !val.bytes().all(|b| b.is_ascii_digit()) || val.is_empty() {
                return Err(parse_err(no, format!("bad modulus {val:?}")));
            }
            modulus = Some(val.bytes().map(|b| b - b'0').collect());
            continue;
        }
        let slot = ["q", "n", "k", "d", "M"]
            .iter()
            .position(|&k| k == key)
            .ok_or_else(|| parse_err(no, format!("unknown header field {key:?}")))?;
        if vals[slot].is_some() {
            return Err(parse_err(no, format!("repeated header field {key:?}")));
        }
        vals[slot] = Some(val.parse().map_err(|_| parse_err(no, format!("bad value for {key}: {val:?}")))?);
    }
    let get = |i: usize, name: &str| vals[i].ok_or_else(|| parse_err(no, format!("header lacks {name}")));
    let (q, n, k, d, m) = (get(0, "q")?, get(1, "n")?, get(2, "k")?, get(3, "d")?, get(4, "M")?);
    if q > 9 {
        return Err(parse_err(no, format!("q={q} needs more than one digit per entry")));
    }
    let q = q as u32;
    let field = match modulus {
        None => FieldSpec::new(q),
        Some(m) => {
            let (p, e) = prime_power(q).ok_or_else(|| parse_err(no, format!("q={q} is not a prime power")))?;
            FieldSpec::with_modulus(p, e, &m)
        }
    }
    .map_err(|e| parse_err(no, e.to_string()))?;
    let params =
        CodeParams::with_field(n as usize, k as usize, d as usize, &field).map_err(|e| parse_err(no, e.to_string()))?;
    Ok((params, m as usize))
}

fn parse_record(p: &CodeParams, block: &[(usize, &str)]) -> Result<Subspace, IoError> {
    let first = block[0].0;
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(p.k());
    for &(no, line) in block {
        for tok in line.split_whitespace() {
            if tok.len() != p.n() {
                return Err(parse_err(no, format!("row {tok:?} has {} digits, expected {}", tok.len(), p.n())));
            }
            let row: Option<Vec<u8>> =
                tok.bytes().map(|b| b.checked_sub(b'0').filter(|&x| u32::from(x) < p.q())).collect();
            rows.push(row.ok_or_else(|| parse_err(no, format!("row {tok:?} has a digit outside 0..{}", p.q())))?);
        }
    }
    if rows.len() != p.k() {
        return Err(parse_err(first, format!("record has {} rows, expected {}", rows.len(), p.k())));
    }
    let m = Matrix::from_rows(p.n(), &rows).map_err(|e| parse_err(first, e.to_string()))?;
    Subspace::from_rref(p.field(), m).map_err(|e| parse_err(first, e.to_string()))
}
