use std::collections::{HashMap, HashSet};

use num_rational::Ratio;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A formal context `(G, M, I)` with labelled objects and attributes.
///
/// Incidence is stored twice: as one bit row per object (over attributes)
/// and one bit column per attribute (over objects). Extents are column
/// intersections, intents are row intersections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    rows: Vec<BitSet>,
    columns: Vec<BitSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContextStats {
    pub objects: usize,
    pub attributes: usize,
    pub incidences: usize,
    /// `incidences / (objects × attributes)`; zero for an empty context.
    pub density: Rational,
}

fn check_distinct(labels: &[String], what: &str) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::InvalidParameter(format!("duplicate {what} label {l:?}")));
        }
    }
    Ok(())
}

impl FormalContext {
    /// Builds a context from `(object, attribute)` index pairs.
    pub fn new<I>(objects: Vec<String>, attributes: Vec<String>, incidence: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let (n, m) = (objects.len(), attributes.len());
        let mut rows = vec![BitSet::new(m); n];
        for (g, a) in incidence {
            if g >= n || a >= m {
                return Err(Error::InvalidParameter(format!(
                    "incidence ({g}, {a}) outside {n}×{m} context"
                )));
            }
            rows[g].insert(a);
        }
        Self::from_rows(objects, attributes, rows)
    }

    pub fn from_rows(objects: Vec<String>, attributes: Vec<String>, rows: Vec<BitSet>) -> Result<Self> {
        check_distinct(&objects, "object")?;
        check_distinct(&attributes, "attribute")?;
        if rows.len() != objects.len() || rows.iter().any(|r| r.universe() != attributes.len()) {
            return Err(Error::InvalidParameter("row shape does not match labels".into()));
        }
        let mut columns = vec![BitSet::new(objects.len()); attributes.len()];
        for (g, row) in rows.iter().enumerate() {
            for m in row {
                columns[m].insert(g);
            }
        }
        Ok(FormalContext {
            objects,
            attributes,
            rows,
            columns,
        })
    }

    /// Convenience for tests and fixtures: rows written as `"x.x"` strings.
    pub fn from_cross_table(objects: &[&str], attributes: &[&str], rows: &[&str]) -> Result<Self> {
        let mut bits = Vec::with_capacity(rows.len());
        for row in rows {
            if row.chars().count() != attributes.len() {
                return Err(Error::InvalidParameter(format!("row {row:?} has wrong width")));
            }
            bits.push(BitSet::from_indices(
                attributes.len(),
                row.chars()
                    .enumerate()
                    .filter(|(_, c)| matches!(c, 'x' | 'X'))
                    .map(|(i, _)| i),
            ));
        }
        Self::from_rows(
            objects.iter().map(|s| s.to_string()).collect(),
            attributes.iter().map(|s| s.to_string()).collect(),
            bits,
        )
    }

    pub fn empty() -> Self {
        FormalContext {
            objects: Vec::new(),
            attributes: Vec::new(),
            rows: Vec::new(),
            columns: Vec::new(),
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn row(&self, g: usize) -> &BitSet {
        &self.rows[g]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn column(&self, m: usize) -> &BitSet {
        &self.columns[m]
    }

    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    pub fn incidence_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    pub fn attribute_index(&self, label: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == label)
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    /// Attribute set from labels; unknown labels are an error.
    pub fn attribute_set<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> Result<BitSet> {
        let mut set = BitSet::new(self.attribute_count());
        for l in labels {
            let i = self
                .attribute_index(l)
                .ok_or_else(|| Error::UnknownAttribute(l.to_owned()))?;
            set.insert(i);
        }
        Ok(set)
    }

    pub fn object_set<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> Result<BitSet> {
        let mut set = BitSet::new(self.object_count());
        for l in labels {
            let i = self
                .object_index(l)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown object {l:?}")))?;
            set.insert(i);
        }
        Ok(set)
    }

    /// Restriction to the given objects and attributes, order preserved.
    pub fn restrict(&self, keep_objects: &BitSet, keep_attributes: &BitSet) -> FormalContext {
        let attr_idx: Vec<usize> = keep_attributes.iter().collect();
        let objects: Vec<String> = keep_objects.iter().map(|g| self.objects[g].clone()).collect();
        let attributes: Vec<String> = attr_idx.iter().map(|&m| self.attributes[m].clone()).collect();
        let rows = keep_objects
            .iter()
            .map(|g| {
                BitSet::from_indices(
                    attr_idx.len(),
                    attr_idx
                        .iter()
                        .enumerate()
                        .filter(|(_, &m)| self.rows[g].contains(m))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        FormalContext::from_rows(objects, attributes, rows).expect("restriction keeps labels distinct")
    }

    /// Drops objects without attributes and attributes without objects,
    /// repeated until nothing changes.
    pub fn prune_empty(&self) -> FormalContext {
        let mut current = self.clone();
        loop {
            let keep_objects = BitSet::from_indices(
                current.object_count(),
                (0..current.object_count()).filter(|&g| !current.rows[g].is_empty()),
            );
            let keep_attributes = BitSet::from_indices(
                current.attribute_count(),
                (0..current.attribute_count()).filter(|&m| !current.columns[m].is_empty()),
            );
            if keep_objects.is_full() && keep_attributes.is_full() {
                return current;
            }
            current = current.restrict(&keep_objects, &keep_attributes);
        }
    }

    pub fn stats(&self) -> ContextStats {
        let (objects, attributes) = (self.object_count(), self.attribute_count());
        let incidences = self.incidence_count();
        let cells = (objects * attributes) as u64;
        ContextStats {
            objects,
            attributes,
            incidences,
            density: if cells == 0 {
                Ratio::from_integer(0)
            } else {
                Ratio::new(incidences as u64, cells)
            },
        }
    }
}

/// Point-wise union: objects and attributes are merged by label (first
/// context's order, then the second's new labels), incidences are united.
pub fn union_contexts(a: &FormalContext, b: &FormalContext) -> FormalContext {
    fn merge(first: &[String], second: &[String]) -> (Vec<String>, Vec<usize>) {
        let mut labels = first.to_vec();
        let mut index: HashMap<&str, usize> = first.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut map = Vec::with_capacity(second.len());
        for l in second {
            let i = *index.entry(l.as_str()).or_insert_with(|| {
                labels.push(l.clone());
                labels.len() - 1
            });
            map.push(i);
        }
        (labels, map)
    }
    let (objects, obj_map) = merge(&a.objects, &b.objects);
    let (attributes, attr_map) = merge(&a.attributes, &b.attributes);
    let mut rows = vec![BitSet::new(attributes.len()); objects.len()];
    for (g, row) in a.rows.iter().enumerate() {
        for m in row {
            rows[g].insert(m);
        }
    }
    for (g, row) in b.rows.iter().enumerate() {
        for m in row {
            rows[obj_map[g]].insert(attr_map[m]);
        }
    }
    FormalContext::from_rows(objects, attributes, rows).expect("merged labels are distinct")
}
