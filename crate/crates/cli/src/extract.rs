//! Dump ingestion for the `context` command.

use std::collections::{BTreeSet, HashSet};
use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use kgfca::context::{directed_properties, plain_properties, read_property_selection, PropertySelector};
use kgfca::kg::{open_dump, GraphBuilder, GraphConfig, LoadStats, Selection, TranslationMap};
use kgfca::{
    build_classified, build_directed, build_plain, build_qualified, select_properties_by_class, union_contexts,
    EntityId, FormalContext, KeyValues, KnowledgeGraph, QualifiedOptions,
};

use crate::args::{ContextArgs, Problem};
use crate::Failure;

pub struct Extraction {
    pub context: FormalContext,
    pub graph_stats: LoadStats,
    pub skipped: u64,
    pub selectors: Vec<PropertySelector>,
}

fn parse_ids(list: &[String]) -> Result<BTreeSet<EntityId>, Failure> {
    list.iter()
        .map(|s| s.trim().parse::<EntityId>().map_err(Failure::from))
        .collect()
}

fn translations(arg: &Option<String>) -> Result<Option<TranslationMap>, Failure> {
    match arg.as_deref() {
        None => Ok(None),
        Some("default") => Ok(Some(TranslationMap::wikidata_default())),
        Some(path) => {
            let file = File::open(path).map_err(|e| Failure::io(e).context(format!("reading {path}")))?;
            Ok(Some(
                TranslationMap::read(BufReader::new(file)).map_err(|e| Failure::from(e).context(path))?,
            ))
        }
    }
}

/// Streams the dump once, keeping statements of `wanted` properties (and of
/// any retired property translated into one of them).
fn load_graph(
    dump: &Path,
    wanted: &BTreeSet<EntityId>,
    map: Option<&TranslationMap>,
    strict: bool,
) -> Result<(KnowledgeGraph, u64), Failure> {
    let mut selected: HashSet<EntityId> = wanted.iter().copied().collect();
    if let Some(map) = map {
        for (source, t) in map.iter() {
            if wanted.contains(&t.target) || t.companion.as_ref().is_some_and(|c| wanted.contains(&c.property)) {
                selected.insert(*source);
            }
        }
    }
    let reader = open_dump(dump).map_err(|e| Failure::from(e).context(format!("opening {}", dump.display())))?;
    let mut builder = GraphBuilder::new(GraphConfig::default(), map.cloned());
    let records = kgfca::parse_dump(reader, Selection::Only(selected));
    let mut add = |r: kgfca::Result<kgfca::kg::EntityRecord>| -> Result<(), Failure> {
        let r = r.map_err(|e| Failure::from(e).context(dump.display()))?;
        builder.add_record(r.id, r.statements);
        Ok(())
    };
    let skipped = if strict {
        for r in records {
            add(r)?;
        }
        0
    } else {
        let mut lenient = records.skip_malformed();
        for r in lenient.by_ref() {
            add(r)?;
        }
        lenient.skipped()
    };
    Ok((builder.finish(), skipped))
}

fn build(
    problem: Problem,
    g: &KnowledgeGraph,
    sel: &[PropertySelector],
    args: &ContextArgs,
) -> Result<FormalContext, Failure> {
    let directed = directed_properties(sel);
    Ok(match problem {
        Problem::Plain => build_plain(g, &plain_properties(sel)),
        Problem::Directed => build_directed(g, &directed),
        Problem::Qualified => {
            let opts = QualifiedOptions {
                qualifier_filter: args.qualifier_props.as_deref().map(parse_ids).transpose()?,
                max_values_per_qualifier: args.max_qualifier_values,
                include_rank: args.include_rank,
            };
            build_qualified(g, &directed, &opts)
        }
        Problem::Classified => {
            let filter = args.class_filter.as_deref().map(parse_ids).transpose()?;
            build_classified(g, &directed, filter.as_ref())
        }
        Problem::Union => {
            let mut k = FormalContext::empty();
            for p in &args.union_of {
                if *p == Problem::Union {
                    return Err(Failure::usage(anyhow::anyhow!("--union-of cannot contain union")));
                }
                k = union_contexts(&k, &build(*p, g, sel, args)?);
            }
            k
        }
    })
}

fn uses(problem: Problem, args: &ContextArgs, p: Problem) -> bool {
    problem == p || (problem == Problem::Union && args.union_of.contains(&p))
}

pub fn extract(args: &ContextArgs) -> Result<Extraction, Failure> {
    let map = translations(&args.translations)?;
    let instance_of = GraphConfig::default().instance_of;
    let selectors = match (&args.properties, &args.property_class) {
        (Some(path), None) => {
            let file = File::open(path).map_err(|e| Failure::io(e).context(format!("reading {}", path.display())))?;
            read_property_selection(BufReader::new(file)).map_err(|e| Failure::from(e).context(path.display()))?
        }
        (None, Some(class)) => {
            let class: EntityId = class.parse()?;
            // first pass: which properties are instances of the class
            let (g, _) = load_graph(&args.dump, &BTreeSet::from([instance_of]), map.as_ref(), args.strict)?;
            let props = select_properties_by_class(&g, &class);
            if props.is_empty() {
                return Err(Failure::usage(anyhow::anyhow!(
                    "no property in the dump is an instance of {class}"
                )));
            }
            props
                .into_iter()
                .map(|property| PropertySelector {
                    property,
                    direction: None,
                })
                .collect()
        }
        _ => {
            return Err(Failure::usage(anyhow::anyhow!(
                "exactly one of --properties and --property-class is required"
            )))
        }
    };
    let mut wanted = plain_properties(&selectors);
    if uses(args.problem, args, Problem::Classified) {
        wanted.insert(instance_of);
    }
    let (g, skipped) = load_graph(&args.dump, &wanted, map.as_ref(), args.strict)?;
    let context = build(args.problem, &g, &selectors, args)?;
    Ok(Extraction {
        context,
        graph_stats: g.stats(),
        skipped,
        selectors,
    })
}

impl Extraction {
    pub fn metadata(&self, args: &ContextArgs) -> KeyValues {
        let stats = self.context.stats();
        let mut kv = KeyValues::new();
        let selection: Vec<String> = self.selectors.iter().map(ToString::to_string).collect();
        kv.set("problem", format!("{:?}", args.problem).to_lowercase())
            .set("dump", args.dump.display())
            .set("properties", selection.join(","))
            .set("objects", stats.objects)
            .set("attributes", stats.attributes)
            .set("incidences", stats.incidences)
            .set("density", stats.density)
            .set("records", self.graph_stats.records)
            .set("statements_seen", self.graph_stats.statements_seen)
            .set("statements_kept", self.graph_stats.statements_kept)
            .set("skipped_records", self.skipped)
            .set("strict", args.strict)
            .set("include_rank", args.include_rank);
        if args.problem == Problem::Union {
            let parts: Vec<String> = args.union_of.iter().map(|p| format!("{p:?}").to_lowercase()).collect();
            kv.set("union_of", parts.join(","));
        }
        if let Some(t) = &args.translations {
            kv.set("translations", t);
        }
        if let Some(q) = &args.qualifier_props {
            kv.set("qualifier_props", q.join(","));
        }
        if let Some(n) = args.max_qualifier_values {
            kv.set("max_qualifier_values", n);
        }
        if let Some(c) = &args.class_filter {
            kv.set("class_filter", c.join(","));
        }
        kv
    }
}
