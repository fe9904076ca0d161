//! Rule files.
//!
//! Text, one rule per line after an attribute header:
//!
//! ```text
//! # attributes: isMother,godparent,mother
//! -> mother    # supp=1 conf=1
//! godparent,mother -> isMother    # supp=1/2 conf=2/3
//! ```
//!
//! The metrics trailer is separated from the rule by a tab.
//! Conclusions are written without the premise attributes. Labels escape
//! `\`, `,`, `#`, `>` and edge spaces with a backslash, and newlines as `\n`.
//! Other `#` lines are comments.
//!
//! Structured form is JSON lines: an `{"attributes":[..]}` header, then one
//! `{"premise":[..],"conclusion":[..],"support":"1/2","confidence":"2/3"}`
//! record per rule, metrics as exact fractions.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::implication::{Implication, ImplicationBase};
use crate::bitset::{AttributeSet, BitSet};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

const HEADER: &str = "# attributes:";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub premise: AttributeSet,
    pub conclusion: AttributeSet,
    pub support: Option<Rational>,
    pub confidence: Option<Rational>,
}

impl Rule {
    pub fn implication(&self) -> Implication {
        Implication::new(self.premise.clone(), self.conclusion.clone())
    }
}

/// Stores the conclusion without the premise attributes, as files do.
impl From<Implication> for Rule {
    fn from(imp: Implication) -> Self {
        Rule {
            conclusion: imp.proper_conclusion(),
            premise: imp.premise,
            support: None,
            confidence: None,
        }
    }
}

/// Rules together with the attribute names they refer to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet {
    pub attributes: Vec<String>,
    pub rules: Vec<Rule>,
}

impl RuleSet {
    pub fn new(attributes: Vec<String>) -> Self {
        RuleSet {
            attributes,
            rules: Vec::new(),
        }
    }

    pub fn from_base(attributes: Vec<String>, base: &ImplicationBase) -> Self {
        assert_eq!(attributes.len(), base.universe(), "labels do not match the base");
        RuleSet {
            attributes,
            rules: base.iter().cloned().map(Rule::from).collect(),
        }
    }

    pub fn base(&self) -> ImplicationBase {
        ImplicationBase::from_rules(self.attributes.len(), self.rules.iter().map(Rule::implication))
    }

    /// Attribute indices for `labels`; unknown names are an error.
    pub fn attribute_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<AttributeSet> {
        let index = self.index();
        resolve(&index, self.attributes.len(), labels)
    }

    pub fn labels<'a>(&'a self, set: &'a AttributeSet) -> impl Iterator<Item = &'a str> + 'a {
        set.iter().map(|i| self.attributes[i].as_str())
    }

    fn index(&self) -> HashMap<&str, usize> {
        self.attributes
            .iter()
            .enumerate()
            .map(|(i, a)| (a.as_str(), i))
            .collect()
    }

    fn check_labels(&self) -> Result<()> {
        match self.attributes.iter().find(|a| a.is_empty()) {
            Some(_) => Err(Error::InvalidParameter("empty attribute label".into())),
            None => Ok(()),
        }
    }

    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        self.check_labels()?;
        let mut line = String::from(HEADER);
        if !self.attributes.is_empty() {
            line.push(' ');
            line.push_str(&join_escaped(self.attributes.iter().map(String::as_str)));
        }
        writeln!(out, "{line}")?;
        for r in &self.rules {
            line.clear();
            line.push_str(&join_escaped(self.labels(&r.premise)));
            if !r.premise.is_empty() {
                line.push(' ');
            }
            line.push_str("->");
            let conclusion = r.conclusion.difference(&r.premise);
            if !conclusion.is_empty() {
                line.push(' ');
                line.push_str(&join_escaped(self.labels(&conclusion)));
            }
            let metrics: Vec<String> = [("supp", r.support), ("conf", r.confidence)]
                .into_iter()
                .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
                .collect();
            if !metrics.is_empty() {
                let _ = write!(line, "\t# {}", metrics.join(" "));
            }
            writeln!(out, "{line}")?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_text(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_text(&mut buf)?;
        Ok(String::from_utf8(buf).expect("labels are strings"))
    }

    /// Without a header, attributes are taken in order of first mention.
    pub fn read_text<R: BufRead>(reader: R) -> Result<Self> {
        let mut attributes: Option<Vec<String>> = None;
        let mut parsed = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = i as u64 + 1;
            let trimmed = line.trim_start();
            if let Some(rest) = trimmed.strip_prefix(HEADER) {
                if attributes.is_some() || !parsed.is_empty() {
                    return Err(Error::format(lineno, "attribute header must come first"));
                }
                attributes = Some(split_labels(rest).map_err(|m| Error::format(lineno, m))?);
                continue;
            }
            if trimmed.trim_end().is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let rule = parse_rule_line(&line).map_err(|m| Error::format(lineno, m))?;
            parsed.push((lineno, rule));
        }
        let mut attributes = attributes.unwrap_or_else(|| {
            let mut seen = Vec::new();
            for (_, (p, c, _, _)) in &parsed {
                for l in p.iter().chain(c) {
                    if !seen.contains(l) {
                        seen.push(l.clone());
                    }
                }
            }
            seen
        });
        check_distinct(&mut attributes)?;
        let mut set = RuleSet::new(attributes);
        let index = set.index();
        let m = set.attributes.len();
        let mut rules = Vec::with_capacity(parsed.len());
        for (lineno, (p, c, support, confidence)) in &parsed {
            let premise = resolve(&index, m, p).map_err(|e| Error::format(*lineno, e.to_string()))?;
            let mut conclusion = resolve(&index, m, c).map_err(|e| Error::format(*lineno, e.to_string()))?;
            conclusion.difference_with(&premise);
            rules.push(Rule {
                premise,
                conclusion,
                support: *support,
                confidence: *confidence,
            });
        }
        drop(index);
        set.rules = rules;
        Ok(set)
    }

    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer(
            &mut out,
            &Header {
                attributes: &self.attributes,
            },
        )
        .map_err(json_error)?;
        out.write_all(b"\n")?;
        for r in &self.rules {
            let record = Record {
                premise: self.labels(&r.premise).map(str::to_owned).collect(),
                conclusion: self
                    .labels(&r.conclusion.difference(&r.premise))
                    .map(str::to_owned)
                    .collect(),
                support: r.support.map(|s| s.to_string()),
                confidence: r.confidence.map(|c| c.to_string()),
            };
            serde_json::to_writer(&mut out, &record).map_err(json_error)?;
            out.write_all(b"\n")?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn read_jsonl<R: BufRead>(reader: R) -> Result<Self> {
        let mut set: Option<RuleSet> = None;
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = i as u64 + 1;
            if line.trim().is_empty() {
                continue;
            }
            let bad = |e: serde_json::Error| Error::format(lineno, e.to_string());
            match &mut set {
                None => {
                    let h: OwnedHeader = serde_json::from_str(&line).map_err(bad)?;
                    let mut attributes = h.attributes;
                    check_distinct(&mut attributes)?;
                    set = Some(RuleSet::new(attributes));
                }
                Some(set) => {
                    let r: Record = serde_json::from_str(&line).map_err(bad)?;
                    let m = set.attributes.len();
                    let index = set.index();
                    let premise = resolve(&index, m, &r.premise).map_err(|e| Error::format(lineno, e.to_string()))?;
                    let mut conclusion =
                        resolve(&index, m, &r.conclusion).map_err(|e| Error::format(lineno, e.to_string()))?;
                    conclusion.difference_with(&premise);
                    let metric = |v: Option<String>| -> Result<Option<Rational>> {
                        v.map(|s| parse_rational(&s).map_err(|e| Error::format(lineno, e.to_string())))
                            .transpose()
                    };
                    let rule = Rule {
                        premise,
                        conclusion,
                        support: metric(r.support)?,
                        confidence: metric(r.confidence)?,
                    };
                    drop(index);
                    set.rules.push(rule);
                }
            }
        }
        set.ok_or_else(|| Error::format(0, "missing attribute header"))
    }
}

#[derive(Serialize)]
struct Header<'a> {
    attributes: &'a [String],
}

#[derive(Deserialize)]
struct OwnedHeader {
    attributes: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct Record {
    premise: Vec<String>,
    conclusion: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    support: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    confidence: Option<String>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Io(e.into())
}

fn check_distinct(attributes: &mut [String]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for a in attributes.iter() {
        if !seen.insert(a.as_str()) {
            return Err(Error::InvalidParameter(format!("duplicate attribute {a:?}")));
        }
    }
    Ok(())
}

fn resolve<S: AsRef<str>>(index: &HashMap<&str, usize>, m: usize, labels: &[S]) -> Result<AttributeSet> {
    let mut set = BitSet::new(m);
    for l in labels {
        let l = l.as_ref();
        set.insert(*index.get(l).ok_or_else(|| Error::UnknownAttribute(l.to_owned()))?);
    }
    Ok(set)
}

pub fn escape_label(label: &str) -> String {
    let mut out = String::with_capacity(label.len());
    let last = label.chars().count().saturating_sub(1);
    for (i, c) in label.chars().enumerate() {
        match c {
            '\\' | ',' | '#' | '>' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            ' ' if i == 0 || i == last => out.push_str("\\ "),
            _ => out.push(c),
        }
    }
    out
}

fn join_escaped<'a>(labels: impl Iterator<Item = &'a str>) -> String {
    labels.map(escape_label).collect::<Vec<_>>().join(",")
}

/// A character of a rule line with its escape status.
#[derive(Clone, Copy)]
struct Tok {
    c: char,
    escaped: bool,
}

fn tokenize(text: &str) -> std::result::Result<Vec<Tok>, String> {
    let mut out = Vec::with_capacity(text.len());
    let mut chars = text.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            let e = chars.next().ok_or("dangling backslash")?;
            out.push(Tok {
                c: if e == 'n' { '\n' } else { e },
                escaped: true,
            });
        } else {
            out.push(Tok { c, escaped: false });
        }
    }
    Ok(out)
}

/// Splits a comma-separated label list; unescaped edge whitespace is dropped.
fn split_tokens(toks: &[Tok]) -> Vec<String> {
    let is_blank = |t: &Tok| !t.escaped && t.c.is_whitespace();
    let start = toks.iter().position(|t| !is_blank(t)).unwrap_or(toks.len());
    let end = toks.iter().rposition(|t| !is_blank(t)).map_or(start, |e| e + 1);
    let toks = &toks[start..end];
    if toks.is_empty() {
        return Vec::new();
    }
    toks.split(|t| !t.escaped && t.c == ',')
        .map(|part| {
            let s = part.iter().position(|t| !is_blank(t)).unwrap_or(part.len());
            let e = part.iter().rposition(|t| !is_blank(t)).map_or(s, |e| e + 1);
            part[s..e].iter().map(|t| t.c).collect()
        })
        .collect()
}

fn split_labels(text: &str) -> std::result::Result<Vec<String>, String> {
    let labels = split_tokens(&tokenize(text)?);
    if labels.iter().any(String::is_empty) {
        return Err("empty attribute label".into());
    }
    Ok(labels)
}

type ParsedRule = (Vec<String>, Vec<String>, Option<Rational>, Option<Rational>);

fn parse_rule_line(line: &str) -> std::result::Result<ParsedRule, String> {
    let toks = tokenize(line)?;
    let (body, comment) = match toks.iter().position(|t| !t.escaped && t.c == '#') {
        Some(i) => (&toks[..i], Some(toks[i + 1..].iter().map(|t| t.c).collect::<String>())),
        None => (&toks[..], None),
    };
    let (premise, conclusion) = split_arrow(body).ok_or("expected `PREMISE -> CONCLUSION`")?;
    let (premise, conclusion) = (split_tokens(premise), split_tokens(conclusion));
    if premise.iter().chain(&conclusion).any(String::is_empty) {
        return Err("empty attribute label".into());
    }
    let (mut support, mut confidence) = (None, None);
    for word in comment.as_deref().unwrap_or("").split_whitespace() {
        let slot = match word.split_once('=') {
            Some(("supp", v)) => Some((&mut support, v)),
            Some(("conf", v)) => Some((&mut confidence, v)),
            _ => None,
        };
        if let Some((slot, v)) = slot {
            *slot = Some(parse_rational(v).map_err(|e| e.to_string())?);
        }
    }
    Ok((premise, conclusion, support, confidence))
}

/// Splits at the first unescaped `->` or `=>`.
fn split_arrow(toks: &[Tok]) -> Option<(&[Tok], &[Tok])> {
    let i = toks
        .windows(2)
        .position(|w| !w[0].escaped && !w[1].escaped && matches!(w[0].c, '-' | '=') && w[1].c == '>')?;
    Some((&toks[..i], &toks[i + 2..]))
}

/// Parses `A,B -> C` (or `=>`) against known attribute names.
pub fn parse_implication(text: &str, attributes: &[String]) -> Result<Implication> {
    let (p, c, _, _) = parse_rule_line(text).map_err(|m| Error::format(1, m))?;
    let index: HashMap<&str, usize> = attributes.iter().enumerate().map(|(i, a)| (a.as_str(), i)).collect();
    Ok(Implication::new(
        resolve(&index, attributes.len(), &p)?,
        resolve(&index, attributes.len(), &c)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;
    use proptest::prelude::*;

    fn family_rules() -> RuleSet {
        let mut set = RuleSet::new(vec!["isMother".into(), "godparent".into(), "mother".into()]);
        set.rules.push(Rule {
            premise: BitSet::new(3),
            conclusion: BitSet::from_indices(3, [2]),
            support: Some(Ratio::from_integer(1)),
            confidence: None,
        });
        set.rules.push(Rule {
            premise: BitSet::from_indices(3, [1, 2]),
            conclusion: BitSet::from_indices(3, [0]),
            support: Some(Ratio::new(1, 2)),
            confidence: Some(Ratio::new(2, 3)),
        });
        set
    }

    #[test]
    fn text_layout() {
        let text = family_rules().to_text().unwrap();
        assert_eq!(
            text,
            "# attributes: isMother,godparent,mother\n-> mother\t# supp=1\ngodparent,mother -> isMother\t# supp=1/2 conf=2/3\n"
        );
        assert_eq!(RuleSet::read_text(text.as_bytes()).unwrap(), family_rules());
    }

    #[test]
    fn conclusions_drop_premise_attributes() {
        let mut set = RuleSet::new(vec!["a".into(), "b".into()]);
        set.rules.push(Rule::from(Implication::new(
            BitSet::from_indices(2, [0]),
            BitSet::full(2),
        )));
        let text = set.to_text().unwrap();
        assert!(text.ends_with("a -> b\n"));
        let back = RuleSet::read_text(text.as_bytes()).unwrap();
        assert_eq!(back.base().rules(), set.base().rules());
    }

    #[test]
    fn jsonl_layout() {
        let mut buf = Vec::new();
        family_rules().write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(
            text.lines().collect::<Vec<_>>(),
            [
                r#"{"attributes":["isMother","godparent","mother"]}"#,
                r#"{"premise":[],"conclusion":["mother"],"support":"1"}"#,
                r#"{"premise":["godparent","mother"],"conclusion":["isMother"],"support":"1/2","confidence":"2/3"}"#,
            ]
        );
        assert_eq!(RuleSet::read_jsonl(buf.as_slice()).unwrap(), family_rules());
    }

    #[test]
    fn headerless_and_errors() {
        let set = RuleSet::read_text("# plain comment\na -> b\nb,c -> a\n".as_bytes()).unwrap();
        assert_eq!(set.attributes, ["a", "b", "c"]);
        assert!(RuleSet::read_text("# attributes: a\na -> b\n".as_bytes()).is_err());
        assert!(RuleSet::read_text("a b\n".as_bytes()).is_err());
        assert!(RuleSet::read_text("# attributes: a,a\n".as_bytes()).is_err());
        assert!(RuleSet::read_jsonl("".as_bytes()).is_err());
    }

    #[test]
    fn queries() {
        let attrs: Vec<String> = vec!["isMother".into(), "godparent".into(), "mother".into()];
        let q = parse_implication("godparent => mother", &attrs).unwrap();
        assert_eq!(q.premise, BitSet::from_indices(3, [1]));
        assert_eq!(q.conclusion, BitSet::from_indices(3, [2]));
        assert!(matches!(
            parse_implication("P9999 -> mother", &attrs),
            Err(Error::UnknownAttribute(_))
        ));
    }

    #[test]
    fn hostile_labels() {
        let labels = [
            "a,b",
            " lead",
            "trail ",
            "x->y",
            "#tag",
            "back\\slash",
            "two\nlines",
            "P26@subj?P580=+1964",
        ];
        let mut set = RuleSet::new(labels.iter().map(|s| s.to_string()).collect());
        set.rules.push(Rule::from(Implication::new(
            BitSet::from_indices(8, [0, 1, 2]),
            BitSet::from_indices(8, [3, 4]),
        )));
        set.rules.push(Rule::from(Implication::new(
            BitSet::from_indices(8, [5]),
            BitSet::from_indices(8, [6, 7]),
        )));
        let text = set.to_text().unwrap();
        assert_eq!(text.lines().count(), 3);
        let back = RuleSet::read_text(text.as_bytes()).unwrap();
        assert_eq!(back, set);
        assert_eq!(back.to_text().unwrap(), text);
    }

    fn arb_label() -> impl Strategy<Value = String> {
        "[a-z ,#>\\\\\\-=@?\n]{1,6}"
    }

    proptest! {
        #[test]
        fn round_trips(
            labels in proptest::collection::btree_set(arb_label(), 0..6),
            rules in proptest::collection::vec((any::<u8>(), any::<u8>(), 0u64..5, 1u64..5), 0..6),
        ) {
            let labels: Vec<String> = labels.into_iter().collect();
            let m = labels.len();
            let mut set = RuleSet::new(labels);
            for (p, c, num, den) in rules {
                let p = BitSet::from_indices(m, (0..m).filter(|i| p >> i & 1 == 1));
                let c = BitSet::from_indices(m, (0..m).filter(|i| c >> i & 1 == 1)).difference(&p);
                set.rules.push(Rule { premise: p, conclusion: c, support: Some(Ratio::new(num, den)), confidence: None });
            }
            let text = set.to_text().unwrap();
            let back = RuleSet::read_text(text.as_bytes()).unwrap();
            prop_assert_eq!(&back, &set);
            prop_assert_eq!(back.to_text().unwrap(), text);
            let mut json = Vec::new();
            set.write_jsonl(&mut json).unwrap();
            prop_assert_eq!(RuleSet::read_jsonl(json.as_slice()).unwrap(), set);
        }
    }
}
