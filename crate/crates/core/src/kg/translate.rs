//! Rewriting of retired properties into their current equivalents.
//!
//! File format, one rule per line (`#` comments allowed):
//!
//! ```text
//! P7 -> P3373
//! P45 -> P1038 qualifier P1039=Q167918
//! P70 -> P171 companion P105=Q36602
//! ```
//!
//! `qualifier` adds a snak to the rewritten statement's annotation;
//! `companion` adds a statement `object --PROP--> VALUE` on the original
//! statement's object.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};

use super::id::EntityId;
use super::statement::{Snak, Statement};
use super::value::DataValue;
use crate::error::{Error, Result};
use crate::lines::content_lines;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Translation {
    pub target: EntityId,
    pub qualifier: Option<Snak>,
    pub companion: Option<Snak>,
}

impl Translation {
    pub fn to(target: EntityId) -> Self {
        Translation {
            target,
            qualifier: None,
            companion: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TranslationMap {
    rules: BTreeMap<EntityId, Translation>,
}

pub mod ids {
    use crate::kg::EntityId;

    pub const BROTHER: EntityId = EntityId::property(7);
    pub const SISTER: EntityId = EntityId::property(9);
    pub const SIBLING: EntityId = EntityId::property(3373);
    pub const GRANDPARENT: EntityId = EntityId::property(45);
    pub const RELATIVE: EntityId = EntityId::property(1038);
    pub const TYPE_OF_KINSHIP: EntityId = EntityId::property(1039);
    pub const GRANDPARENT_ITEM: EntityId = EntityId::item(167918);
    pub const ORDER: EntityId = EntityId::property(70);
    pub const FAMILY: EntityId = EntityId::property(71);
    pub const PARENT_TAXON: EntityId = EntityId::property(171);
    pub const TAXON_RANK: EntityId = EntityId::property(105);
    pub const ORDER_ITEM: EntityId = EntityId::item(36602);
    pub const FAMILY_ITEM: EntityId = EntityId::item(35409);
    pub const MAIN_TYPE_GND: EntityId = EntityId::property(107);
    pub const ADMINISTRATIVE_ENTITY: EntityId = EntityId::property(132);
    pub const LANGUAGE_FAMILY: EntityId = EntityId::property(133);
    pub const INSTANCE_OF: EntityId = EntityId::property(31);
    pub const SUBCLASS_OF: EntityId = EntityId::property(279);
}

impl TranslationMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Replacements for eight retired Wikidata properties.
    pub fn wikidata_default() -> Self {
        use ids::*;
        let mut map = TranslationMap::new();
        map.insert(BROTHER, Translation::to(SIBLING));
        map.insert(SISTER, Translation::to(SIBLING));
        map.insert(
            GRANDPARENT,
            Translation {
                target: RELATIVE,
                qualifier: Some(Snak::new(TYPE_OF_KINSHIP, GRANDPARENT_ITEM)),
                companion: None,
            },
        );
        map.insert(
            ORDER,
            Translation {
                target: PARENT_TAXON,
                qualifier: None,
                companion: Some(Snak::new(TAXON_RANK, ORDER_ITEM)),
            },
        );
        map.insert(
            FAMILY,
            Translation {
                target: PARENT_TAXON,
                qualifier: None,
                companion: Some(Snak::new(TAXON_RANK, FAMILY_ITEM)),
            },
        );
        map.insert(MAIN_TYPE_GND, Translation::to(INSTANCE_OF));
        map.insert(ADMINISTRATIVE_ENTITY, Translation::to(INSTANCE_OF));
        map.insert(LANGUAGE_FAMILY, Translation::to(SUBCLASS_OF));
        map
    }

    pub fn insert(&mut self, source: EntityId, translation: Translation) {
        self.rules.insert(source, translation);
    }

    pub fn get(&self, source: &EntityId) -> Option<&Translation> {
        self.rules.get(source)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&EntityId, &Translation)> {
        self.rules.iter()
    }

    /// Properties that rewritten statements may carry.
    pub fn targets(&self) -> impl Iterator<Item = EntityId> + '_ {
        self.rules
            .values()
            .flat_map(|t| std::iter::once(t.target).chain(t.companion.as_ref().map(|c| c.property)))
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let mut map = TranslationMap::new();
        for (line, text) in content_lines(reader)? {
            let (source, translation) = parse_rule(&text).map_err(|m| Error::format(line, m))?;
            map.insert(source, translation);
        }
        Ok(map)
    }

    pub fn write<W: Write>(&self, mut out: W) -> Result<()> {
        for (source, t) in &self.rules {
            writeln!(out, "{source} -> {t}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Translation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.target)?;
        if let Some(q) = &self.qualifier {
            write!(f, " qualifier {q}")?;
        }
        if let Some(c) = &self.companion {
            write!(f, " companion {c}")?;
        }
        Ok(())
    }
}

fn parse_rule(text: &str) -> std::result::Result<(EntityId, Translation), String> {
    let (source, rest) = text
        .split_once("->")
        .ok_or_else(|| format!("expected `SRC -> TGT`, got {text:?}"))?;
    let source = parse_property(source.trim())?;
    let mut words = rest.split_whitespace();
    let target = parse_property(words.next().ok_or("missing target property")?)?;
    let mut translation = Translation::to(target);
    while let Some(keyword) = words.next() {
        let snak = parse_snak(words.next().ok_or_else(|| format!("{keyword} needs PROP=VALUE"))?)?;
        let slot = match keyword {
            "qualifier" => &mut translation.qualifier,
            "companion" => &mut translation.companion,
            other => return Err(format!("unknown keyword {other:?}")),
        };
        if slot.replace(snak).is_some() {
            return Err(format!("duplicate {keyword}"));
        }
    }
    Ok((source, translation))
}

fn parse_property(text: &str) -> std::result::Result<EntityId, String> {
    let id: EntityId = text.parse().map_err(|e: Error| e.to_string())?;
    if id.is_property() {
        Ok(id)
    } else {
        Err(format!("{id} is not a property"))
    }
}

fn parse_snak(text: &str) -> std::result::Result<Snak, String> {
    let (p, v) = text
        .split_once('=')
        .ok_or_else(|| format!("expected PROP=VALUE, got {text:?}"))?;
    let value = match v.parse::<EntityId>() {
        Ok(id) => DataValue::Entity(id),
        Err(_) => DataValue::String(v.to_owned()),
    };
    Ok(Snak::new(parse_property(p)?, value))
}

/// Rewrites one statement. Statements whose property is not translated come
/// back unchanged as a singleton.
pub fn apply_property_translations(s: &Statement, map: &TranslationMap) -> Vec<Statement> {
    let Some(t) = map.get(&s.property) else {
        return vec![s.clone()];
    };
    let mut rewritten = s.clone();
    rewritten.property = t.target;
    if let Some(q) = &t.qualifier {
        rewritten.annotation.insert(q.clone());
    }
    let mut out = vec![rewritten];
    if let (Some(c), Some(object)) = (&t.companion, s.object_entity()) {
        out.push(Statement::new(object, c.property, c.value.clone()));
    }
    out
}
