use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::id::EntityId;

/// Earth, the default globe for coordinates that do not name one.
pub const EARTH: EntityId = EntityId::item(2);

/// Time precision levels as used by the dump format (9 = year, 11 = day).
pub mod precision {
    pub const YEAR: u8 = 9;
    pub const MONTH: u8 = 10;
    pub const DAY: u8 = 11;
    pub const HOUR: u8 = 12;
    pub const MINUTE: u8 = 13;
    pub const SECOND: u8 = 14;
}

/// Angle in degrees with total equality and ordering on its bit pattern.
#[derive(Clone, Copy, Debug)]
pub struct Degrees(pub f64);

impl PartialEq for Degrees {
    fn eq(&self, other: &Self) -> bool {
        self.0.to_bits() == other.0.to_bits()
    }
}

impl Eq for Degrees {}

impl PartialOrd for Degrees {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degrees {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl Hash for Degrees {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValueTag {
    Entity,
    Quantity,
    Time,
    Coordinate,
    String,
    MonolingualText,
    Uri,
    SomeValue,
    NoValue,
}

/// The value slot of a statement or qualifier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DataValue {
    Entity(EntityId),
    Quantity {
        /// Shortest exact decimal form, see [`normalize_decimal`].
        amount: String,
        unit: Option<EntityId>,
    },
    Time {
        /// Full timestamp as given in the dump, e.g. `+1964-00-00T00:00:00Z`.
        timestamp: String,
        precision: u8,
    },
    Coordinate {
        latitude: Degrees,
        longitude: Degrees,
        globe: EntityId,
    },
    String(String),
    MonolingualText {
        text: String,
        language: String,
    },
    Uri(String),
    SomeValue,
    NoValue,
}

impl DataValue {
    pub fn quantity(amount: &str, unit: Option<EntityId>) -> Self {
        DataValue::Quantity {
            amount: normalize_decimal(amount),
            unit,
        }
    }

    pub fn time(timestamp: impl Into<String>, precision: u8) -> Self {
        DataValue::Time {
            timestamp: timestamp.into(),
            precision,
        }
    }

    /// Year-precision time, the form used for start/end qualifiers in fixtures.
    pub fn year(year: i64) -> Self {
        let sign = if year < 0 { '-' } else { '+' };
        DataValue::time(
            format!("{sign}{:04}-00-00T00:00:00Z", year.unsigned_abs()),
            precision::YEAR,
        )
    }

    pub fn tag(&self) -> ValueTag {
        match self {
            DataValue::Entity(_) => ValueTag::Entity,
            DataValue::Quantity { .. } => ValueTag::Quantity,
            DataValue::Time { .. } => ValueTag::Time,
            DataValue::Coordinate { .. } => ValueTag::Coordinate,
            DataValue::String(_) => ValueTag::String,
            DataValue::MonolingualText { .. } => ValueTag::MonolingualText,
            DataValue::Uri(_) => ValueTag::Uri,
            DataValue::SomeValue => ValueTag::SomeValue,
            DataValue::NoValue => ValueTag::NoValue,
        }
    }

    /// True for the two special values that carry no payload.
    pub fn is_special(&self) -> bool {
        matches!(self, DataValue::SomeValue | DataValue::NoValue)
    }

    pub fn as_entity(&self) -> Option<EntityId> {
        match self {
            DataValue::Entity(id) => Some(*id),
            _ => None,
        }
    }
}

impl From<EntityId> for DataValue {
    fn from(id: EntityId) -> Self {
        DataValue::Entity(id)
    }
}

/// Canonical text form, used verbatim inside attribute names.
impl fmt::Display for DataValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DataValue::Entity(id) => write!(f, "{id}"),
            DataValue::Quantity { amount, unit } => {
                f.write_str(amount)?;
                if let Some(unit) = unit {
                    write!(f, "~{unit}")?;
                }
                Ok(())
            }
            DataValue::Time { timestamp, precision } => f.write_str(&canonical_time(timestamp, *precision)),
            DataValue::Coordinate {
                latitude,
                longitude,
                globe,
            } => write!(f, "{},{}@{globe}", fixed6(latitude.0), fixed6(longitude.0)),
            DataValue::String(s) | DataValue::Uri(s) => f.write_str(s),
            DataValue::MonolingualText { text, language } => write!(f, "{text}@{language}"),
            DataValue::SomeValue => f.write_str("somevalue"),
            DataValue::NoValue => f.write_str("novalue"),
        }
    }
}

fn fixed6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_owned()
    } else {
        s
    }
}

/// Shortest exact decimal form: no leading `+`, no redundant zeros, no `-0`.
/// Inputs that are not plain decimals are returned trimmed and unchanged.
pub fn normalize_decimal(raw: &str) -> String {
    let raw = raw.trim();
    let (negative, body) = match raw.as_bytes().first() {
        Some(b'+') => (false, &raw[1..]),
        Some(b'-') => (true, &raw[1..]),
        _ => (false, raw),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let is_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if (int_part.is_empty() && frac_part.is_empty()) || !is_digits(int_part) || !is_digits(frac_part) {
        return raw.to_owned();
    }
    let int_part = int_part.trim_start_matches('0');
    let frac_part = frac_part.trim_end_matches('0');
    let int_part = if int_part.is_empty() { "0" } else { int_part };
    let zero = int_part == "0" && frac_part.is_empty();
    let mut out = String::with_capacity(body.len() + 1);
    if negative && !zero {
        out.push('-');
    }
    out.push_str(int_part);
    if !frac_part.is_empty() {
        out.push('.');
        out.push_str(frac_part);
    }
    out
}

/// Truncates an ISO-8601 style timestamp to its precision, keeping the sign.
pub fn canonical_time(timestamp: &str, precision: u8) -> String {
    let (sign, rest) = match timestamp.as_bytes().first() {
        Some(b'-') => ('-', &timestamp[1..]),
        Some(b'+') => ('+', &timestamp[1..]),
        _ => ('+', timestamp),
    };
    let (date, clock) = rest.split_once('T').unwrap_or((rest, ""));
    let mut date_parts = date.splitn(3, '-');
    let year = date_parts.next().unwrap_or("");
    let month = date_parts.next().unwrap_or("00");
    let day = date_parts.next().unwrap_or("00");
    let clock = clock.trim_end_matches('Z');
    let mut clock_parts = clock.splitn(3, ':');
    let hour = clock_parts.next().filter(|s| !s.is_empty()).unwrap_or("00");
    let minute = clock_parts.next().unwrap_or("00");
    let second = clock_parts.next().unwrap_or("00");
    match precision {
        p if p <= precision::YEAR => format!("{sign}{year}"),
        precision::MONTH => format!("{sign}{year}-{month}"),
        precision::DAY => format!("{sign}{year}-{month}-{day}"),
        precision::HOUR => format!("{sign}{year}-{month}-{day}T{hour}"),
        precision::MINUTE => format!("{sign}{year}-{month}-{day}T{hour}:{minute}"),
        _ => format!("{sign}{year}-{month}-{day}T{hour}:{minute}:{second}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals() {
        assert_eq!(normalize_decimal("+736414"), "736414");
        assert_eq!(normalize_decimal("+1.500"), "1.5");
        assert_eq!(normalize_decimal("-0.0"), "0");
        assert_eq!(normalize_decimal("+0.001"), "0.001");
        assert_eq!(normalize_decimal("-0012.10"), "-12.1");
        assert_eq!(normalize_decimal("abc"), "abc");
    }

    #[test]
    fn time_truncation() {
        assert_eq!(canonical_time("+1964-00-00T00:00:00Z", 9), "+1964");
        assert_eq!(canonical_time("+2006-09-13T00:00:00Z", 11), "+2006-09-13");
        assert_eq!(canonical_time("+2016-12-31T00:00:00Z", 10), "+2016-12");
        assert_eq!(canonical_time("-13798000000-00-00T00:00:00Z", 3), "-13798000000");
        assert_eq!(canonical_time("+2001-01-02T03:04:05Z", 14), "+2001-01-02T03:04:05");
        assert_eq!(canonical_time("+2001-01-02T03:04:05Z", 13), "+2001-01-02T03:04");
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(DataValue::Entity(EntityId::item(5)).to_string(), "Q5");
        assert_eq!(DataValue::quantity("+736414", None).to_string(), "736414");
        assert_eq!(
            DataValue::quantity("+5.0", Some(EntityId::item(11573))).to_string(),
            "5~Q11573"
        );
        assert_eq!(DataValue::year(1964).to_string(), "+1964");
        let c = DataValue::Coordinate {
            latitude: Degrees(50.11),
            longitude: Degrees(-0.0),
            globe: EARTH,
        };
        assert_eq!(c.to_string(), "50.110000,0.000000@Q2");
        let m = DataValue::MonolingualText {
            text: "Frankfurt".into(),
            language: "de".into(),
        };
        assert_eq!(m.to_string(), "Frankfurt@de");
        assert_eq!(DataValue::SomeValue.to_string(), "somevalue");
    }
}
