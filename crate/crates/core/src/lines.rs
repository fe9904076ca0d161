use std::io::BufRead;

use crate::error::Result;

/// Non-empty lines with `#` comments stripped, paired with 1-based line numbers.
pub fn content_lines<R: BufRead>(reader: R) -> Result<Vec<(u64, String)>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if !content.is_empty() {
            out.push((i as u64 + 1, content.to_owned()));
        }
    }
    Ok(out)
}
