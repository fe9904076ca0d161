//! Streaming reader for line-oriented entity dumps.
//!
//! A dump is a JSON array written one entity per line. An opening `[` line
//! is followed by comma-terminated records and a closing `]` line. Plain JSON-lines
//! files without the brackets are read as well. Only one line is held in
//! memory at a time.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::de::IgnoredAny;
use serde::{Deserialize, Deserializer};
use serde_json::Value;

use super::id::EntityId;
use super::statement::{Rank, Snak, Statement};
use super::value::{DataValue, Degrees, EARTH};
use crate::error::{Error, Result};

/// Which statements a reader emits.
#[derive(Clone, Debug, Default)]
pub enum Selection {
    #[default]
    All,
    Only(HashSet<EntityId>),
}

impl Selection {
    pub fn only<I: IntoIterator<Item = EntityId>>(props: I) -> Self {
        Selection::Only(props.into_iter().collect())
    }

    pub fn contains(&self, p: &EntityId) -> bool {
        match self {
            Selection::All => true,
            Selection::Only(set) => set.contains(p),
        }
    }
}

/// One decoded entity line.
#[derive(Clone, Debug, PartialEq)]
pub struct EntityRecord {
    pub id: EntityId,
    pub statements: Vec<Statement>,
    /// 1-based line number in the dump.
    pub line: u64,
    /// Size of the raw record in bytes.
    pub bytes: usize,
}

/// Opens a dump file, decompressing by suffix (`.gz`, `.bz2`).
pub fn open_dump(path: &Path) -> Result<Box<dyn BufRead + Send>> {
    let file = File::open(path)?;
    let name = path.to_string_lossy();
    let reader: Box<dyn BufRead + Send> = if name.ends_with(".gz") {
        Box::new(BufReader::new(flate2::read::MultiGzDecoder::new(file)))
    } else if name.ends_with(".bz2") {
        Box::new(BufReader::new(bzip2::read::MultiBzDecoder::new(file)))
    } else {
        Box::new(BufReader::new(file))
    };
    Ok(reader)
}

/// Lazily decodes records in stream order.
///
/// Malformed lines yield [`Error::Record`] and reading continues; I/O
/// failures and a missing closing bracket yield a fatal error after which the
/// iterator is exhausted.
pub struct DumpReader<R> {
    reader: R,
    selection: Selection,
    buf: String,
    line: u64,
    opened: bool,
    closed: bool,
    done: bool,
}

pub fn parse_dump<R: BufRead>(reader: R, selection: Selection) -> DumpReader<R> {
    DumpReader {
        reader,
        selection,
        buf: String::new(),
        line: 0,
        opened: false,
        closed: false,
        done: false,
    }
}

impl<R: BufRead> DumpReader<R> {
    /// Lines consumed so far.
    pub fn line(&self) -> u64 {
        self.line
    }

    /// Skips recoverable errors, counting them; fatal errors still surface.
    pub fn skip_malformed(self) -> SkipMalformed<R> {
        SkipMalformed {
            inner: self,
            skipped: 0,
        }
    }
}

impl<R: BufRead> Iterator for DumpReader<R> {
    type Item = Result<EntityRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            self.buf.clear();
            let n = match self.reader.read_line(&mut self.buf) {
                Ok(n) => n,
                Err(e) => {
                    self.done = true;
                    return Some(Err(e.into()));
                }
            };
            if n == 0 {
                self.done = true;
                if self.opened && !self.closed {
                    return Some(Err(Error::Truncated { line: self.line }));
                }
                return None;
            }
            self.line += 1;
            let text = self.buf.trim();
            let text = text.strip_suffix(',').unwrap_or(text).trim_end();
            match text {
                "" => continue,
                "[" if !self.opened && self.line == 1 => {
                    self.opened = true;
                    continue;
                }
                "]" if !self.closed => {
                    self.closed = true;
                    continue;
                }
                _ => {}
            }
            let line = self.line;
            if self.closed {
                return Some(Err(Error::Record {
                    line,
                    message: "data after closing bracket".into(),
                }));
            }
            let bytes = self.buf.len();
            let parsed = serde_json::from_str::<RawEntity>(text)
                .map_err(|e| e.to_string())
                .and_then(|raw| decode_entity(raw, &self.selection));
            match parsed {
                Ok(Some((id, statements))) => {
                    return Some(Ok(EntityRecord {
                        id,
                        statements,
                        line,
                        bytes,
                    }))
                }
                // lexemes and other entity types are not modelled
                Ok(None) => continue,
                Err(message) => return Some(Err(Error::Record { line, message })),
            }
        }
        None
    }
}

pub struct SkipMalformed<R> {
    inner: DumpReader<R>,
    skipped: u64,
}

impl<R> SkipMalformed<R> {
    pub fn skipped(&self) -> u64 {
        self.skipped
    }
}

impl<R: BufRead> Iterator for SkipMalformed<R> {
    type Item = Result<EntityRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            match self.inner.next()? {
                Err(e) if e.is_recoverable() => self.skipped += 1,
                other => return Some(other),
            }
        }
    }
}

#[derive(Deserialize)]
struct RawEntity {
    id: String,
    #[serde(default, deserialize_with = "map_or_empty_list")]
    claims: BTreeMap<String, Vec<RawClaim>>,
}

#[derive(Deserialize)]
struct RawClaim {
    mainsnak: RawSnak,
    #[serde(default, deserialize_with = "map_or_empty_list")]
    qualifiers: BTreeMap<String, Vec<RawSnak>>,
    #[serde(default)]
    rank: Option<String>,
    #[serde(default)]
    references: Vec<IgnoredAny>,
}

#[derive(Deserialize)]
struct RawSnak {
    snaktype: String,
    property: String,
    #[serde(default)]
    datavalue: Option<RawDataValue>,
    #[serde(default)]
    datatype: Option<String>,
}

#[derive(Deserialize)]
struct RawDataValue {
    #[serde(rename = "type")]
    kind: String,
    value: Value,
}

/// Empty maps are sometimes serialized as `[]`.
fn map_or_empty_list<'de, D, V>(deserializer: D) -> std::result::Result<BTreeMap<String, V>, D::Error>
where
    D: Deserializer<'de>,
    V: Deserialize<'de>,
{
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum MapOrList<V> {
        Map(BTreeMap<String, V>),
        List(Vec<IgnoredAny>),
    }
    match MapOrList::<V>::deserialize(deserializer)? {
        MapOrList::Map(m) => Ok(m),
        MapOrList::List(l) if l.is_empty() => Ok(BTreeMap::new()),
        MapOrList::List(_) => Err(serde::de::Error::custom("expected an object")),
    }
}

type Decoded = Option<(EntityId, Vec<Statement>)>;

fn decode_entity(raw: RawEntity, selection: &Selection) -> std::result::Result<Decoded, String> {
    let Ok(id) = raw.id.parse::<EntityId>() else {
        if raw.id.is_empty() {
            return Err("empty entity id".into());
        }
        return Ok(None);
    };
    let mut statements = Vec::new();
    for (key, claims) in raw.claims {
        let property: EntityId = key.parse().map_err(|e: Error| e.to_string())?;
        if !property.is_property() {
            return Err(format!("claim key {key} is not a property"));
        }
        if !selection.contains(&property) {
            continue;
        }
        for claim in claims {
            statements.push(decode_claim(id, property, claim)?);
        }
    }
    statements.sort_by_key(|s| s.property);
    Ok(Some((id, statements)))
}

fn decode_claim(subject: EntityId, property: EntityId, claim: RawClaim) -> std::result::Result<Statement, String> {
    let value = decode_snak_value(&claim.mainsnak)?;
    let mut annotation = BTreeSet::new();
    for (key, snaks) in claim.qualifiers {
        let qprop: EntityId = key.parse().map_err(|e: Error| e.to_string())?;
        for snak in snaks {
            annotation.insert(Snak {
                property: qprop,
                value: decode_snak_value(&snak)?,
            });
        }
    }
    let rank = match claim.rank.as_deref() {
        None => Rank::Normal,
        Some(r) => r.parse().map_err(|e: Error| e.to_string())?,
    };
    Ok(Statement {
        subject,
        property,
        value,
        annotation,
        rank,
        reference_count: claim.references.len() as u32,
    })
}

fn decode_snak_value(snak: &RawSnak) -> std::result::Result<DataValue, String> {
    match snak.snaktype.as_str() {
        "somevalue" => return Ok(DataValue::SomeValue),
        "novalue" => return Ok(DataValue::NoValue),
        "value" => {}
        other => return Err(format!("unknown snaktype {other:?} on {}", snak.property)),
    }
    let dv = snak
        .datavalue
        .as_ref()
        .ok_or_else(|| format!("value snak on {} without datavalue", snak.property))?;
    let v = &dv.value;
    let field = |name: &str| v.get(name).ok_or_else(|| format!("{} value lacks {name:?}", dv.kind));
    let text = |name: &str| -> std::result::Result<String, String> {
        field(name)?
            .as_str()
            .map(str::to_owned)
            .ok_or_else(|| format!("{} field {name:?} is not a string", dv.kind))
    };
    let number = |name: &str| -> std::result::Result<f64, String> {
        field(name)?
            .as_f64()
            .ok_or_else(|| format!("{} field {name:?} is not a number", dv.kind))
    };
    let value = match dv.kind.as_str() {
        "wikibase-entityid" => {
            let id = match v.get("id").and_then(Value::as_str) {
                Some(id) => id.to_owned(),
                None => {
                    let n = field("numeric-id")?.as_u64().ok_or("numeric-id is not an integer")?;
                    match v.get("entity-type").and_then(Value::as_str) {
                        Some("property") => format!("P{n}"),
                        Some("item") | None => format!("Q{n}"),
                        Some(other) => format!("{other}:{n}"),
                    }
                }
            };
            match id.parse::<EntityId>() {
                Ok(e) => DataValue::Entity(e),
                // lexemes, forms and senses are kept as opaque text
                Err(_) => DataValue::String(id),
            }
        }
        "string" => {
            let s = v.as_str().ok_or("string value is not a string")?.to_owned();
            if snak.datatype.as_deref() == Some("url") {
                DataValue::Uri(s)
            } else {
                DataValue::String(s)
            }
        }
        "monolingualtext" => DataValue::MonolingualText {
            text: text("text")?,
            language: text("language")?,
        },
        "quantity" => {
            let unit = text("unit").unwrap_or_else(|_| "1".into());
            DataValue::quantity(&text("amount")?, EntityId::from_uri(&unit))
        }
        "time" => {
            let precision = field("precision")?.as_u64().ok_or("time precision is not an integer")?;
            DataValue::time(text("time")?, precision.min(u8::MAX as u64) as u8)
        }
        "globecoordinate" => DataValue::Coordinate {
            latitude: Degrees(number("latitude")?),
            longitude: Degrees(number("longitude")?),
            globe: v
                .get("globe")
                .and_then(Value::as_str)
                .and_then(EntityId::from_uri)
                .unwrap_or(EARTH),
        },
        _ => DataValue::String(v.to_string()),
    };
    Ok(value)
}
