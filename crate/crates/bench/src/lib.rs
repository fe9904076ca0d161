//! Input generators for the benchmarks under `benches/`.

use kgfca::{BitSet, FormalContext, Implication, ImplicationBase};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random context with independent crosses of the given density.
pub fn random_context(seed: u64, objects: usize, attributes: usize, density: f64) -> FormalContext {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for g in 0..objects {
        for m in 0..attributes {
            if rng.gen_bool(density) {
                pairs.push((g, m));
            }
        }
    }
    FormalContext::new(
        (0..objects).map(|i| format!("g{i}")).collect(),
        (0..attributes).map(|i| format!("m{i}")).collect(),
        pairs,
    )
    .expect("labels are distinct")
}

/// Random implications with small premises and conclusions.
pub fn random_base(seed: u64, attributes: usize, rules: usize) -> ImplicationBase {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick = |n: usize| BitSet::from_indices(attributes, (0..n).map(|_| rng.gen_range(0..attributes)));
    let rules: Vec<Implication> = (0..rules)
        .map(|_| {
            let p = pick(2);
            let c = pick(2);
            Implication::new(p, c)
        })
        .collect();
    ImplicationBase::from_rules(attributes, rules)
}

/// A bracketed dump of `records` items, each with a few spouse, mother and
/// instance-of statements.
pub fn synthetic_dump(seed: u64, records: usize) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::from("[\n");
    for id in 1..=records {
        let mut claims = Vec::new();
        for p in [26u32, 25, 31] {
            let values: Vec<String> = (0..rng.gen_range(0..3))
                .map(|_| {
                    let q = rng.gen_range(1..records as u64 + 1);
                    format!(
                        r#"{{"mainsnak":{{"snaktype":"value","property":"P{p}","datavalue":{{"value":{{"entity-type":"item","id":"Q{q}"}},"type":"wikibase-entityid"}}}},"type":"statement","rank":"normal","qualifiers":{{"P580":[{{"snaktype":"value","property":"P580","datavalue":{{"value":{{"time":"+1990-01-01T00:00:00Z","precision":11}},"type":"time"}}}}]}}}}"#
                    )
                })
                .collect();
            claims.push(format!("\"P{p}\":[{}]", values.join(",")));
        }
        let sep = if id == records { "" } else { "," };
        out.push_str(&format!(
            "{{\"type\":\"item\",\"id\":\"Q{id}\",\"claims\":{{{}}}}}{sep}\n",
            claims.join(",")
        ));
    }
    out.push_str("]\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_context(1, 5, 4, 0.5), random_context(1, 5, 4, 0.5));
        assert_eq!(synthetic_dump(3, 10), synthetic_dump(3, 10));
        assert_eq!(random_base(2, 6, 5).len(), 5);
    }

    #[test]
    fn synthetic_dump_parses() {
        let dump = synthetic_dump(3, 50);
        let records = kgfca::parse_dump(dump.as_bytes(), Default::default())
            .collect::<kgfca::Result<Vec<_>>>()
            .unwrap();
        assert_eq!(records.len(), 50);
    }
}
