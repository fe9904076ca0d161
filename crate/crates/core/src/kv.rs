//! Flat `key=value` files: context sidecars and run manifests.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KeyValues {
    entries: BTreeMap<String, String>,
}

impl KeyValues {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.entries.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    /// Keys in sorted order; values are written verbatim with newlines
    /// replaced by spaces.
    pub fn write<W: Write>(&self, mut out: W) -> Result<()> {
        for (k, v) in &self.entries {
            writeln!(out, "{k}={}", v.replace(['\n', '\r'], " "))?;
        }
        Ok(())
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let mut meta = KeyValues::new();
        for (i, text) in reader.lines().enumerate() {
            let text = text?;
            let text = text.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let line = i as u64 + 1;
            let (k, v) = text
                .split_once('=')
                .ok_or_else(|| Error::format(line, format!("expected key=value, got {text:?}")))?;
            meta.set(k.trim(), v.trim());
        }
        Ok(meta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_sorted() {
        let mut meta = KeyValues::new();
        meta.set("problem", "directed")
            .set("dump", "family.json.gz")
            .set("objects", 4);
        let mut buf = Vec::new();
        meta.write(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf.clone()).unwrap(),
            "dump=family.json.gz\nobjects=4\nproblem=directed\n"
        );
        assert_eq!(KeyValues::read(buf.as_slice()).unwrap(), meta);
        assert!(KeyValues::read("novalue\n".as_bytes()).is_err());
        let with_hash = KeyValues::read("# built by kgfca\nout=ctx#1.cxt\n".as_bytes()).unwrap();
        assert_eq!(with_hash.get("out"), Some("ctx#1.cxt"));
    }
}
