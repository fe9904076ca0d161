use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::id::EntityId;
use super::value::DataValue;
use crate::error::Error;

/// A (property, value) pair; qualifiers of a statement are snaks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Snak {
    pub property: EntityId,
    pub value: DataValue,
}

impl Snak {
    pub fn new(property: EntityId, value: impl Into<DataValue>) -> Self {
        debug_assert!(property.is_property());
        Snak {
            property,
            value: value.into(),
        }
    }
}

impl fmt::Display for Snak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.property, self.value)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank {
    Deprecated,
    #[default]
    Normal,
    Preferred,
}

impl Rank {
    pub fn as_str(&self) -> &'static str {
        match self {
            Rank::Deprecated => "deprecated",
            Rank::Normal => "normal",
            Rank::Preferred => "preferred",
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rank {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "deprecated" => Ok(Rank::Deprecated),
            "normal" => Ok(Rank::Normal),
            "preferred" => Ok(Rank::Preferred),
            other => Err(Error::InvalidParameter(format!("unknown rank {other:?}"))),
        }
    }
}

/// One `p`-statement on `subject` with `value` and an annotation set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Statement {
    pub subject: EntityId,
    pub property: EntityId,
    pub value: DataValue,
    pub annotation: BTreeSet<Snak>,
    pub rank: Rank,
    pub reference_count: u32,
}

impl Statement {
    pub fn new(subject: EntityId, property: EntityId, value: impl Into<DataValue>) -> Self {
        Statement {
            subject,
            property,
            value: value.into(),
            annotation: BTreeSet::new(),
            rank: Rank::Normal,
            reference_count: 0,
        }
    }

    pub fn with_qualifier(mut self, property: EntityId, value: impl Into<DataValue>) -> Self {
        self.annotation.insert(Snak::new(property, value));
        self
    }

    pub fn with_rank(mut self, rank: Rank) -> Self {
        self.rank = rank;
        self
    }

    /// The object position, when it holds an entity.
    pub fn object_entity(&self) -> Option<EntityId> {
        self.value.as_entity()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Keep,
    Drop,
}

/// Load-time filter: drops deprecated statements and any statement whose
/// value or qualifier values are unknown-value / no-value.
pub fn filter_statement(s: &Statement) -> Verdict {
    let special = s.value.is_special() || s.annotation.iter().any(|q| q.value.is_special());
    if s.rank == Rank::Deprecated || special {
        Verdict::Drop
    } else {
        Verdict::Keep
    }
}

pub fn is_kept(s: &Statement) -> bool {
    filter_statement(s) == Verdict::Keep
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    Subject,
    Object,
    Annotation,
}

/// An element of a projected relation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Projected {
    Subject(EntityId),
    Object(DataValue),
    Annotation(BTreeSet<Snak>),
}

/// Element-wise projection of a relation onto one of its three positions.
pub fn project<'a, I>(rel: I, which: Projection) -> BTreeSet<Projected>
where
    I: IntoIterator<Item = &'a Statement>,
{
    rel.into_iter()
        .map(|t| match which {
            Projection::Subject => Projected::Subject(t.subject),
            Projection::Object => Projected::Object(t.value.clone()),
            Projection::Annotation => Projected::Annotation(t.annotation.clone()),
        })
        .collect()
}

pub fn subjects<'a, I: IntoIterator<Item = &'a Statement>>(rel: I) -> BTreeSet<EntityId> {
    rel.into_iter().map(|t| t.subject).collect()
}

pub fn objects<'a, I: IntoIterator<Item = &'a Statement>>(rel: I) -> BTreeSet<DataValue> {
    rel.into_iter().map(|t| t.value.clone()).collect()
}

/// Entity-valued objects only; data values cannot be context objects.
pub fn object_entities<'a, I: IntoIterator<Item = &'a Statement>>(rel: I) -> BTreeSet<EntityId> {
    rel.into_iter().filter_map(|t| t.object_entity()).collect()
}

pub fn annotations<'a, I: IntoIterator<Item = &'a Statement>>(rel: I) -> BTreeSet<BTreeSet<Snak>> {
    rel.into_iter().map(|t| t.annotation.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kg::fixtures;

    #[test]
    fn deprecated_pluto_is_dropped() {
        assert_eq!(filter_statement(&fixtures::pluto_planet()), Verdict::Drop);
    }

    #[test]
    fn preferred_population_is_kept() {
        assert_eq!(filter_statement(&fixtures::frankfurt_population()), Verdict::Keep);
    }

    #[test]
    fn special_values_drop() {
        let some = Statement::new(EntityId::item(1), EntityId::property(22), DataValue::SomeValue);
        assert_eq!(filter_statement(&some), Verdict::Drop);
        let qualified = Statement::new(EntityId::item(1), EntityId::property(22), EntityId::item(2))
            .with_qualifier(EntityId::property(582), DataValue::NoValue);
        assert_eq!(filter_statement(&qualified), Verdict::Drop);
        let normal = Statement::new(EntityId::item(1), EntityId::property(22), EntityId::item(2));
        assert_eq!(filter_statement(&normal), Verdict::Keep);
    }

    #[test]
    fn projections() {
        let spouse = fixtures::taylor_spouse_statements();
        assert_eq!(subjects(&spouse), BTreeSet::from([EntityId::item(34851)]));
        assert_eq!(
            project(&spouse, Projection::Subject),
            BTreeSet::from([Projected::Subject(EntityId::item(34851))])
        );
        assert!(project(&[] as &[Statement], Projection::Object).is_empty());
        let pop = fixtures::frankfurt_population();
        let ann = annotations([&pop]);
        assert_eq!(ann, BTreeSet::from([pop.annotation.clone()]));
        assert_eq!(pop.annotation.len(), 2);
    }

    #[test]
    fn filter_is_idempotent() {
        let all = fixtures::mixed_statements();
        let once: Vec<_> = all.iter().filter(|s| is_kept(s)).cloned().collect();
        let twice: Vec<_> = once.iter().filter(|s| is_kept(s)).cloned().collect();
        assert_eq!(once, twice);
    }

    use proptest::prelude::*;

    fn arb_statement() -> impl Strategy<Value = Statement> {
        (
            1u64..6,
            1u64..4,
            1u64..6,
            0u8..3,
            proptest::collection::vec((1u64..4, 1u64..4), 0..3),
        )
            .prop_map(|(s, p, o, r, quals)| {
                let mut st = Statement::new(EntityId::item(s), EntityId::property(p), EntityId::item(o));
                st.rank = [Rank::Deprecated, Rank::Normal, Rank::Preferred][r as usize];
                for (qp, qv) in quals {
                    st = st.with_qualifier(EntityId::property(qp), EntityId::item(qv));
                }
                st
            })
    }

    proptest! {
        #[test]
        fn projection_sizes(rel in proptest::collection::vec(arb_statement(), 0..20)) {
            prop_assert!(subjects(&rel).len() <= rel.len());
            prop_assert!(objects(&rel).len() <= rel.len());
            prop_assert!(annotations(&rel).len() <= rel.len());
            if rel.is_empty() {
                prop_assert!(project(&rel, Projection::Annotation).is_empty());
            }
        }
    }
}
