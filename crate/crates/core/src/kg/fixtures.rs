//! Small hand-built statement sets shared by unit, integration and
//! acceptance tests.

use super::id::EntityId;
use super::statement::{Rank, Statement};
use super::value::{precision, DataValue};

pub const INSTANCE_OF: EntityId = EntityId::property(31);
pub const MOTHER: EntityId = EntityId::property(25);
pub const FATHER: EntityId = EntityId::property(22);
pub const SPOUSE: EntityId = EntityId::property(26);
pub const CHILD: EntityId = EntityId::property(40);
pub const GODPARENT: EntityId = EntityId::property(1321);
pub const START_TIME: EntityId = EntityId::property(580);
pub const END_TIME: EntityId = EntityId::property(582);
pub const POINT_IN_TIME: EntityId = EntityId::property(585);
pub const POPULATION: EntityId = EntityId::property(1082);
pub const DETERMINATION_METHOD: EntityId = EntityId::property(459);

pub const HUMAN: EntityId = EntityId::item(5);
pub const TAYLOR: EntityId = EntityId::item(34851);
pub const BURTON: EntityId = EntityId::item(151973);
pub const PLUTO: EntityId = EntityId::item(339);
pub const PLANET: EntityId = EntityId::item(634);
pub const DWARF_PLANET: EntityId = EntityId::item(5107);
pub const FRANKFURT: EntityId = EntityId::item(1794);
pub const ESTIMATION: EntityId = EntityId::item(791801);

pub const ANGELINA_JOLIE: EntityId = EntityId::item(13909);
pub const MILEY_CYRUS: EntityId = EntityId::item(4235);
pub const NAOMI_WATTS: EntityId = EntityId::item(132616);
pub const VICTORIA: EntityId = EntityId::item(9439);

/// The two marriages of Taylor and Burton, with start/end qualifiers.
pub fn taylor_spouse_statements() -> Vec<Statement> {
    [(1964, 1974), (1983, 1984)]
        .into_iter()
        .map(|(start, end)| {
            Statement::new(TAYLOR, SPOUSE, BURTON)
                .with_qualifier(START_TIME, DataValue::year(start))
                .with_qualifier(END_TIME, DataValue::year(end))
        })
        .collect()
}

/// Preferred population estimate for Frankfurt.
pub fn frankfurt_population() -> Statement {
    Statement::new(FRANKFURT, POPULATION, DataValue::quantity("+736414", None))
        .with_qualifier(DETERMINATION_METHOD, ESTIMATION)
        .with_qualifier(POINT_IN_TIME, DataValue::time("+2016-12-31T00:00:00Z", precision::DAY))
        .with_rank(Rank::Preferred)
}

/// Pluto as a planet, deprecated since the 2006 redefinition.
pub fn pluto_planet() -> Statement {
    Statement::new(PLUTO, INSTANCE_OF, PLANET)
        .with_qualifier(END_TIME, DataValue::time("+2006-09-13T00:00:00Z", precision::DAY))
        .with_rank(Rank::Deprecated)
}

/// Mother/godparent statements whose directed context is the
/// isMother/godparent/mother cross table:
///
/// ```text
///               ^mother godparent mother
/// AngelinaJolie    x        x        x
/// MileyCyrus       .        x        x
/// NaomiWatts       x        .        x
/// Victoria         x        x        x
/// ```
pub fn family_records() -> Vec<(EntityId, Vec<Statement>)> {
    vec![
        (
            ANGELINA_JOLIE,
            vec![
                Statement::new(ANGELINA_JOLIE, MOTHER, VICTORIA),
                Statement::new(ANGELINA_JOLIE, GODPARENT, MILEY_CYRUS),
            ],
        ),
        (
            MILEY_CYRUS,
            vec![
                Statement::new(MILEY_CYRUS, MOTHER, ANGELINA_JOLIE),
                Statement::new(MILEY_CYRUS, GODPARENT, VICTORIA),
            ],
        ),
        (NAOMI_WATTS, vec![Statement::new(NAOMI_WATTS, MOTHER, ANGELINA_JOLIE)]),
        (
            VICTORIA,
            vec![
                Statement::new(VICTORIA, MOTHER, NAOMI_WATTS),
                Statement::new(VICTORIA, GODPARENT, ANGELINA_JOLIE),
            ],
        ),
    ]
}

/// A mix of kept and dropped statements.
pub fn mixed_statements() -> Vec<Statement> {
    let mut out = taylor_spouse_statements();
    out.push(frankfurt_population());
    out.push(pluto_planet());
    out.push(Statement::new(PLUTO, INSTANCE_OF, DWARF_PLANET));
    out.push(Statement::new(MILEY_CYRUS, FATHER, DataValue::SomeValue));
    out.push(Statement::new(VICTORIA, CHILD, DataValue::NoValue));
    out.push(Statement::new(BURTON, SPOUSE, TAYLOR).with_qualifier(END_TIME, DataValue::NoValue));
    out
}

pub fn mixed_records() -> Vec<(EntityId, Vec<Statement>)> {
    let mut records: Vec<(EntityId, Vec<Statement>)> = Vec::new();
    for s in mixed_statements() {
        match records.iter_mut().find(|(id, _)| *id == s.subject) {
            Some((_, list)) => list.push(s),
            None => records.push((s.subject, vec![s])),
        }
    }
    records
}
