use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntityKind {
    Item,
    Property,
}

/// Identifier of an item (`Q42`) or a property (`P31`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntityId {
    kind: EntityKind,
    number: u64,
}

impl EntityId {
    /// Returns `None` for `number == 0`.
    pub fn new(kind: EntityKind, number: u64) -> Option<Self> {
        (number >= 1).then_some(EntityId { kind, number })
    }

    /// Panics on zero; for constants.
    pub const fn item(number: u64) -> Self {
        assert!(number >= 1);
        EntityId {
            kind: EntityKind::Item,
            number,
        }
    }

    pub const fn property(number: u64) -> Self {
        assert!(number >= 1);
        EntityId {
            kind: EntityKind::Property,
            number,
        }
    }

    pub fn kind(&self) -> EntityKind {
        self.kind
    }

    pub fn number(&self) -> u64 {
        self.number
    }

    pub fn is_property(&self) -> bool {
        self.kind == EntityKind::Property
    }

    pub fn is_item(&self) -> bool {
        self.kind == EntityKind::Item
    }

    /// Accepts the bare id or a concept URI such as
    /// `http://www.wikidata.org/entity/Q2`.
    pub fn from_uri(text: &str) -> Option<Self> {
        let tail = text.rsplit('/').next().unwrap_or(text);
        tail.parse().ok()
    }
}

impl fmt::Display for EntityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind {
            EntityKind::Item => 'Q',
            EntityKind::Property => 'P',
        };
        write!(f, "{prefix}{}", self.number)
    }
}

impl FromStr for EntityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let invalid = || Error::InvalidId(s.to_owned());
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('Q') => EntityKind::Item,
            Some('P') => EntityKind::Property,
            _ => return Err(invalid()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid());
        }
        let number = digits.parse().map_err(|_| invalid())?;
        EntityId::new(kind, number).ok_or_else(invalid)
    }
}

impl Serialize for EntityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EntityId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = <std::borrow::Cow<'de, str>>::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text() {
        assert_eq!(EntityId::item(5).to_string(), "Q5");
        assert_eq!(EntityId::property(31).to_string(), "P31");
        assert_eq!("Q34851".parse::<EntityId>().unwrap(), EntityId::item(34851));
        assert_eq!("P26".parse::<EntityId>().unwrap(), EntityId::property(26));
    }

    #[test]
    fn rejects_invalid() {
        for bad in ["Q0", "Q", "X5", "Q05", "q5", "Q5a", "L1", "", "P-3"] {
            assert!(bad.parse::<EntityId>().is_err(), "{bad}");
        }
        assert!(EntityId::new(EntityKind::Item, 0).is_none());
    }

    #[test]
    fn uri_tail() {
        assert_eq!(
            EntityId::from_uri("http://www.wikidata.org/entity/Q11573"),
            Some(EntityId::item(11573))
        );
        assert_eq!(EntityId::from_uri("1"), None);
    }
}
