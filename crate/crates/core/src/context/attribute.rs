use std::collections::BTreeSet;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kg::{EntityId, Rank, Snak};
use crate::lines::content_lines;

/// Whether an entity takes part in a statement as subject or as object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Subject,
    Object,
}

impl Direction {
    pub const BOTH: [Direction; 2] = [Direction::Subject, Direction::Object];

    pub fn as_str(&self) -> &'static str {
        match self {
            Direction::Subject => "subj",
            Direction::Object => "obj",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "subj" | "subject" => Ok(Direction::Subject),
            "obj" | "object" => Ok(Direction::Object),
            other => Err(Error::InvalidParameter(format!("unknown direction {other:?}"))),
        }
    }
}

/// One element of a statement's annotation as seen by the qualified
/// incidence: a qualifier snak, or the statement rank as a pseudo-qualifier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Qualifier {
    Snak(Snak),
    Rank(Rank),
}

impl Qualifier {
    /// Grouping key for per-qualifier value caps; `None` is the rank slot.
    pub fn key(&self) -> Option<EntityId> {
        match self {
            Qualifier::Snak(s) => Some(s.property),
            Qualifier::Rank(_) => None,
        }
    }
}

impl fmt::Display for Qualifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Qualifier::Snak(s) => write!(f, "{s}"),
            Qualifier::Rank(r) => write!(f, "rank={r}"),
        }
    }
}

/// An attribute of one of the four incidence schemes.
///
/// The text form is the attribute's name in context files:
/// `P26`, `P26@subj`, `P26@subj?P580=+1964`, `P26@obj:Q5`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AttributeSpec {
    Plain(EntityId),
    Directed(EntityId, Direction),
    Qualified(EntityId, Direction, Qualifier),
    Classified(EntityId, Direction, EntityId),
}

impl fmt::Display for AttributeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttributeSpec::Plain(p) => write!(f, "{p}"),
            AttributeSpec::Directed(p, d) => write!(f, "{p}@{d}"),
            AttributeSpec::Qualified(p, d, q) => write!(f, "{p}@{d}?{q}"),
            AttributeSpec::Classified(p, d, c) => write!(f, "{p}@{d}:{c}"),
        }
    }
}

/// A line of a property-selection file: `P26` (both directions where a
/// direction is needed) or `P26@subj` / `P26@obj`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropertySelector {
    pub property: EntityId,
    pub direction: Option<Direction>,
}

impl FromStr for PropertySelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, d) = match s.split_once('@') {
            Some((p, d)) => (p, Some(d.parse()?)),
            None => (s, None),
        };
        let property: EntityId = p.trim().parse()?;
        if !property.is_property() {
            return Err(Error::InvalidId(p.to_owned()));
        }
        Ok(PropertySelector { property, direction: d })
    }
}

impl fmt::Display for PropertySelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Some(d) => write!(f, "{}@{d}", self.property),
            None => write!(f, "{}", self.property),
        }
    }
}

pub fn read_property_selection<R: BufRead>(reader: R) -> Result<Vec<PropertySelector>> {
    content_lines(reader)?
        .into_iter()
        .map(|(line, text)| text.parse().map_err(|e: Error| Error::format(line, e.to_string())))
        .collect()
}

pub fn plain_properties(selectors: &[PropertySelector]) -> BTreeSet<EntityId> {
    selectors.iter().map(|s| s.property).collect()
}

/// Directed properties; an undirected selector stands for both directions.
pub fn directed_properties(selectors: &[PropertySelector]) -> BTreeSet<(EntityId, Direction)> {
    selectors
        .iter()
        .flat_map(|s| {
            let dirs: &[Direction] = match &s.direction {
                Some(d) => std::slice::from_ref(d),
                None => &Direction::BOTH,
            };
            dirs.iter().map(move |d| (s.property, *d))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kg::DataValue;

    #[test]
    fn canonical_names() {
        let p26 = EntityId::property(26);
        assert_eq!(AttributeSpec::Plain(p26).to_string(), "P26");
        assert_eq!(AttributeSpec::Directed(p26, Direction::Subject).to_string(), "P26@subj");
        assert_eq!(AttributeSpec::Directed(p26, Direction::Object).to_string(), "P26@obj");
        let q = Qualifier::Snak(Snak::new(EntityId::property(580), DataValue::year(1964)));
        assert_eq!(
            AttributeSpec::Qualified(p26, Direction::Subject, q).to_string(),
            "P26@subj?P580=+1964"
        );
        assert_eq!(
            AttributeSpec::Qualified(p26, Direction::Object, Qualifier::Rank(Rank::Preferred)).to_string(),
            "P26@obj?rank=preferred"
        );
        assert_eq!(
            AttributeSpec::Classified(p26, Direction::Object, EntityId::item(5)).to_string(),
            "P26@obj:Q5"
        );
    }

    #[test]
    fn selection_file() {
        let text = "# family\nP25\nP1321@subj  # godparent\n\nP40@obj\n";
        let sel = read_property_selection(text.as_bytes()).unwrap();
        assert_eq!(sel.len(), 3);
        assert_eq!(sel[1].to_string(), "P1321@subj");
        let directed = directed_properties(&sel);
        assert_eq!(directed.len(), 4);
        assert!(directed.contains(&(EntityId::property(25), Direction::Object)));
        assert!(!directed.contains(&(EntityId::property(40), Direction::Subject)));
        assert!(read_property_selection("P25\nQ5\n".as_bytes()).is_err());
        assert!(read_property_selection("P25@up\n".as_bytes()).is_err());
    }
}
