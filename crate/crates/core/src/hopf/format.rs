//! The `.hsc` structure-constant text format.
//!
//! ```text
//! # Sweedler's algebra
//! field Q
//! dim 4
//! label 0 1
//! mult 1 1 0 1        # e_1 e_1 = 1·e_0
//! comult 2 2 0 1      # Δe_2 ∋ 1·e_2⊗e_0
//! unit 0 1
//! counit 0 1
//! antipode 2 3 -1     # S(e_3) ∋ −1·e_2
//! pointed 0           # e_0 is a certified grouplike
//! ```
//!
//! Coefficients take the rest of the line and use the scalar literal syntax.
//! Absent entries are zero; repeated entries add up.

use std::fmt::Write as _;

use super::data::HopfAlgebraData;
use crate::error::{Error, Result};
use crate::scalar::{Field, FieldDescriptor};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

pub fn parse_hsc(text: &str) -> Result<HopfAlgebraData> {
    let mut field: Option<Field> = None;
    let mut h: Option<HopfAlgebraData> = None;
    let mut certificate: Vec<usize> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(col, kw)) = toks.first() else {
            continue;
        };
        let idx = |k: usize, bound: usize| -> Result<usize> {
            let &(c, t) = toks
                .get(k)
                .ok_or_else(|| err(ln, line.chars().count() + 1, format!("{kw}: missing index")))?;
            let i: usize = t.parse().map_err(|_| err(ln, c, format!("bad index {t:?}")))?;
            if i >= bound {
                return Err(err(ln, c, format!("index {i} out of range (dim {bound})")));
            }
            Ok(i)
        };
        match kw {
            "field" => {
                if field.is_some() {
                    return Err(err(ln, col, "field given twice"));
                }
                let &(c, t) = toks.get(1).ok_or_else(|| err(ln, col, "field: missing descriptor"))?;
                let desc: FieldDescriptor = t.parse().map_err(|e: Error| err(ln, c, e.to_string()))?;
                field = Some(Field::new(desc).map_err(|e| err(ln, c, e.to_string()))?);
            }
            "dim" => {
                let f = field.as_ref().ok_or_else(|| err(ln, col, "dim before field"))?;
                if h.is_some() {
                    return Err(err(ln, col, "dim given twice"));
                }
                let d = idx(1, usize::MAX)?;
                if d == 0 {
                    return Err(err(ln, toks[1].0, "dim must be positive"));
                }
                h = Some(HopfAlgebraData::empty(f, d, (0..d).map(|i| format!("e{i}")).collect()));
            }
            _ => {
                let h = h.as_mut().ok_or_else(|| err(ln, col, format!("{kw} before dim")))?;
                let d = h.dim;
                let nidx = match kw {
                    "label" | "unit" | "counit" | "pointed" => 1,
                    "antipode" => 2,
                    "mult" | "comult" => 3,
                    _ => return Err(err(ln, col, format!("unknown record {kw:?}"))),
                };
                let ix: Vec<usize> = (1..=nidx).map(|k| idx(k, d)).collect::<Result<_>>()?;
                if kw == "pointed" {
                    if toks.len() > 2 {
                        return Err(err(ln, toks[2].0, "trailing input"));
                    }
                    certificate.push(ix[0]);
                    continue;
                }
                let Some(&(rest_col, _)) = toks.get(nidx + 1) else {
                    return Err(err(ln, line.chars().count() + 1, format!("{kw}: missing value")));
                };
                let rest_byte = line.char_indices().nth(rest_col - 1).map_or(line.len(), |(b, _)| b);
                let rest = line[rest_byte..].trim();
                if kw == "label" {
                    h.labels[ix[0]] = rest.to_string();
                    continue;
                }
                let c = h
                    .field
                    .parse_scalar(rest)
                    .map_err(|e| match e {
                        Error::Parse { column, message, .. } => err(ln, rest_col + column.saturating_sub(1), message),
                        other => err(ln, rest_col, other.to_string()),
                    })?;
                match kw {
                    "mult" => h.mult[ix[0] * d + ix[1]].add_term(ix[2], c),
                    "comult" => h.comult[ix[0]].add_term((ix[1], ix[2]), c),
                    "unit" => h.unit[ix[0]] = &h.unit[ix[0]] + &c,
                    "counit" => h.counit[ix[0]] = &h.counit[ix[0]] + &c,
                    "antipode" => h.antipode[ix[1]].add_term(ix[0], c),
                    _ => unreachable!(),
                }
            }
        }
    }
    let mut h = h.ok_or_else(|| err(text.lines().count().max(1), 1, "missing dim record"))?;
    if !certificate.is_empty() {
        h.pointed_certificate = Some(certificate.iter().map(|&i| h.basis_vector(i)).collect());
    }
    Ok(h)
}

/// Serializes to `.hsc`. A pointedness certificate is written only when it
/// consists of basis vectors.
pub fn write_hsc(h: &HopfAlgebraData) -> String {
    let d = h.dim;
    let mut s = String::new();
    let _ = writeln!(s, "field {}", h.field.descriptor());
    let _ = writeln!(s, "dim {d}");
    for (i, l) in h.labels.iter().enumerate() {
        let _ = writeln!(s, "label {i} {l}");
    }
    for i in 0..d {
        for j in 0..d {
            for (k, c) in h.mul_basis(i, j).iter() {
                let _ = writeln!(s, "mult {i} {j} {k} {c}");
            }
        }
    }
    for (k, v) in h.comult.iter().enumerate() {
        for ((i, j), c) in v.iter() {
            let _ = writeln!(s, "comult {k} {i} {j} {c}");
        }
    }
    for (i, c) in crate::hopf::nonzeros(&h.unit) {
        let _ = writeln!(s, "unit {i} {c}");
    }
    for (i, c) in crate::hopf::nonzeros(&h.counit) {
        let _ = writeln!(s, "counit {i} {c}");
    }
    for (j, v) in h.antipode.iter().enumerate() {
        for (i, c) in v.iter() {
            let _ = writeln!(s, "antipode {i} {j} {c}");
        }
    }
    if let Some(cert) = &h.pointed_certificate {
        let basis: Option<Vec<usize>> = cert
            .iter()
            .map(|g| {
                let nz: Vec<_> = crate::hopf::nonzeros(g).collect();
                (nz.len() == 1 && nz[0].1.is_one()).then_some(nz[0].0)
            })
            .collect();
        if let Some(b) = basis {
            for i in b {
                let _ = writeln!(s, "pointed {i}");
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{small_quantum_sl2, sweedler, taft};

    #[test]
    fn round_trip() {
        let q = Field::rationals();
        let h = sweedler(&q).unwrap();
        let text = write_hsc(&h);
        let back = parse_hsc(&text).unwrap();
        assert_eq!(back, h);
        let t = taft(3, &Field::cyclotomic(3).unwrap()).unwrap();
        assert_eq!(parse_hsc(&write_hsc(&t)).unwrap(), t);
    }

    #[test]
    fn round_trip_small_quantum() {
        let u = small_quantum_sl2(3, &Field::cyclotomic(3).unwrap()).unwrap();
        assert_eq!(parse_hsc(&write_hsc(&u)).unwrap(), u);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_hsc("field Q\ndim 2\nmult 0 5 0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, column: 8, .. }), "{e:?}");
        let e = parse_hsc("field Q\ndim 2\nmult 0 0 0 1/0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = parse_hsc("dim 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 1, .. }), "{e:?}");
        let e = parse_hsc("field Q\ndim 2\n  frob 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, column: 3, .. }), "{e:?}");
    }

    #[test]
    fn comments_and_corruption() {
        let q = Field::rationals();
        let text = write_hsc(&sweedler(&q).unwrap());
        let commented = format!("# header\n{}", text.replace("dim 4", "dim 4   # four"));
        assert_eq!(parse_hsc(&commented).unwrap(), sweedler(&q).unwrap());
        // x·x = 1 breaks associativity: (xg)x ≠ x(gx)
        let broken = format!("{text}mult 2 2 0 1\n");
        let h = parse_hsc(&broken).unwrap();
        let report = h.verify_axioms().unwrap();
        assert!(!report.all_pass());
        assert_eq!(report.failures().next().unwrap().name, "associativity");
    }
}
