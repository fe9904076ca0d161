//! Burmeister `.cxt` files.
//!
//! ```text
//! B
//!
//! 2
//! 3
//!
//! g1
//! g2
//! a
//! b
//! c
//! XX.
//! .XX
//! ```
//!
//! The writer always leaves the name line empty and uses `X`/`.`; the
//! reader also accepts a name, lowercase `x` and CRLF line ends.

use std::io::{BufRead, Write};

use super::formal::FormalContext;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub fn write_burmeister<W: Write>(k: &FormalContext, mut out: W) -> Result<()> {
    for label in k.objects().iter().chain(k.attributes()) {
        if label.contains(['\n', '\r']) {
            return Err(Error::InvalidParameter(format!("label {label:?} spans lines")));
        }
    }
    write!(out, "B\n\n{}\n{}\n\n", k.object_count(), k.attribute_count())?;
    for label in k.objects().iter().chain(k.attributes()) {
        writeln!(out, "{label}")?;
    }
    let mut line = String::with_capacity(k.attribute_count() + 1);
    for row in k.rows() {
        line.clear();
        line.extend((0..k.attribute_count()).map(|m| if row.contains(m) { 'X' } else { '.' }));
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_burmeister_string(k: &FormalContext) -> Result<String> {
    let mut buf = Vec::new();
    write_burmeister(k, &mut buf)?;
    Ok(String::from_utf8(buf).expect("labels are strings"))
}

pub fn read_burmeister<R: BufRead>(reader: R) -> Result<FormalContext> {
    let mut lines = reader.lines().enumerate().map(|(i, l)| {
        l.map(|mut s| {
            if s.ends_with('\r') {
                s.pop();
            }
            (i as u64 + 1, s)
        })
    });
    let mut next = |what: &str| -> Result<(u64, String)> {
        lines
            .next()
            .transpose()?
            .ok_or_else(|| Error::format(0, format!("unexpected end of file, expected {what}")))
    };
    let (line, magic) = next("header")?;
    if magic != "B" {
        return Err(Error::format(line, format!("expected \"B\", got {magic:?}")));
    }
    next("name line")?;
    let mut count = |what: &str| -> Result<usize> {
        let (line, text) = next(what)?;
        text.trim()
            .parse()
            .map_err(|_| Error::format(line, format!("expected {what}, got {text:?}")))
    };
    let n = count("object count")?;
    let m = count("attribute count")?;
    let (line, blank) = next("blank line")?;
    if !blank.trim().is_empty() {
        return Err(Error::format(line, "expected blank line after counts"));
    }
    let objects = (0..n)
        .map(|_| next("object label").map(|(_, l)| l))
        .collect::<Result<Vec<_>>>()?;
    let attributes = (0..m)
        .map(|_| next("attribute label").map(|(_, l)| l))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, text) = next("incidence row")?;
        if text.chars().count() != m {
            return Err(Error::format(
                line,
                format!("row has {} cells, expected {m}", text.chars().count()),
            ));
        }
        let mut row = BitSet::new(m);
        for (i, c) in text.chars().enumerate() {
            match c {
                'X' | 'x' => {
                    row.insert(i);
                }
                '.' => {}
                other => return Err(Error::format(line, format!("unexpected cell {other:?}"))),
            }
        }
        rows.push(row);
    }
    for extra in lines {
        let (line, text) = extra?;
        if !text.trim().is_empty() {
            return Err(Error::format(line, "trailing content after incidence rows"));
        }
    }
    FormalContext::from_rows(objects, attributes, rows).map_err(|e| Error::format(0, e.to_string()))
}
