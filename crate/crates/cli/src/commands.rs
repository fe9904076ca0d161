use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::anyhow;
use kgfca::assoc::AssociationRule;
use kgfca::fca::{parse_implication, CanonicalBase, LinClosure, Rule};
use kgfca::pac::{horn_distance, horn_distance_sampled, pac_basis_run, EXACT_DISTANCE_CAP};
use kgfca::rational::to_f64;
use kgfca::{
    count_supported, extent, luxenburger_base, parse_rational, read_burmeister, write_burmeister, FormalContext,
    ImplicationBase, PacParams, Rational, RuleSet,
};

use crate::args::{BaseArgs, ContextArgs, EntailsArgs, LuxenburgerArgs, PacArgs};
use crate::extract::extract;
use crate::{Failure, Outcome};

/// Samples for the Horn distance estimate when exact enumeration is too wide.
const VALIDATION_SAMPLES: u64 = 100_000;

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::io(e).context(format!("creating {}", path.display())))
}

/// Writes to `path`, or to standard output when no path is given.
fn emit(path: Option<&Path>, write: impl FnOnce(&mut dyn Write) -> kgfca::Result<()>) -> Result<(), Failure> {
    match path {
        Some(p) => {
            let mut out = create(p)?;
            write(&mut out).map_err(|e| Failure::from(e).context(p.display()))?;
            out.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            write(&mut out)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn load_context(path: &Path) -> Result<FormalContext, Failure> {
    let file = File::open(path).map_err(|e| Failure::io(e).context(format!("reading {}", path.display())))?;
    read_burmeister(BufReader::new(file)).map_err(|e| Failure::from(e).context(path.display()))
}

fn rational(flag: &str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| Failure::from(e).context(format!("--{flag}")))
}

/// Text rules to `out`, rule records to `out.jsonl`.
fn write_rules(rules: &RuleSet, out: Option<&Path>) -> Result<(), Failure> {
    emit(out, |w| rules.write_text(w))?;
    if let Some(p) = out {
        emit(Some(&with_suffix(p, ".jsonl")), |w| rules.write_jsonl(w))?;
    }
    Ok(())
}

pub fn context(args: ContextArgs) -> Outcome {
    let ex = extract(&args)?;
    let stats = ex.context.stats();
    eprintln!(
        "records={} statements_kept={} skipped={}",
        ex.graph_stats.records, ex.graph_stats.statements_kept, ex.skipped
    );
    eprintln!(
        "objects={} attributes={} incidences={} density={:.6}",
        stats.objects,
        stats.attributes,
        stats.incidences,
        to_f64(&stats.density)
    );
    if stats.attributes == 0 || stats.objects == 0 {
        return Err(Failure::usage(anyhow!(
            "empty context: no incidences for the selected properties"
        )));
    }
    emit(args.out.as_deref(), |w| write_burmeister(&ex.context, w))?;
    if let Some(p) = &args.out {
        let meta = ex.metadata(&args);
        emit(Some(&with_suffix(p, ".meta")), |w| meta.write(w))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn premise_support(k: &FormalContext, rule: &Rule) -> Option<Rational> {
    (k.object_count() > 0).then(|| Rational::new(extent(k, &rule.premise).count() as u64, k.object_count() as u64))
}

pub fn base(args: BaseArgs) -> Outcome {
    let k = load_context(&args.context)?;
    let budget = match args.wall_clock_budget {
        Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(Failure::usage(anyhow!("--wall-clock-budget must be positive, got {s}"))),
        None => None,
    };
    let start = Instant::now();
    let mut base = ImplicationBase::new(k.attribute_count());
    let mut walk = CanonicalBase::new(&k);
    for rule in walk.by_ref() {
        base.push(rule);
        if budget.is_some_and(|b| start.elapsed() > b) {
            eprintln!(
                "budget exhausted after {:.1?}: {} rules found, {} sets visited; nothing written",
                start.elapsed(),
                base.len(),
                walk.visited()
            );
            return Ok(ExitCode::from(1));
        }
    }
    let supported = count_supported(&k, &base);
    let mut rules = RuleSet::from_base(k.attributes().to_vec(), &base);
    for r in &mut rules.rules {
        r.support = premise_support(&k, r);
    }
    if args.only_supported {
        rules
            .rules
            .retain(|r| r.support.is_some_and(|s| s > Rational::from_integer(0)));
    }
    write_rules(&rules, args.out.as_deref())?;
    eprintln!(
        "base={} supported={} visited={} time={:.2?}",
        base.len(),
        supported,
        walk.visited(),
        start.elapsed()
    );
    Ok(ExitCode::SUCCESS)
}

pub fn luxenburger(args: LuxenburgerArgs) -> Outcome {
    let k = load_context(&args.context)?;
    let minsupp = rational("minsupp", &args.minsupp)?;
    let minconf = rational("minconf", &args.minconf)?;
    if minsupp > Rational::from_integer(1) {
        return Err(Failure::usage(anyhow!("--minsupp must lie in [0, 1]")));
    }
    let mined = luxenburger_base(&k, minsupp, minconf);
    let rules = RuleSet {
        attributes: k.attributes().to_vec(),
        rules: mined.iter().map(Rule::from).collect(),
    };
    write_rules(&rules, args.out.as_deref())?;
    let mean = if mined.is_empty() {
        0.0
    } else {
        mined
            .iter()
            .map(|r: &AssociationRule| to_f64(&r.confidence))
            .sum::<f64>()
            / mined.len() as f64
    };
    eprintln!("rules={} mean_confidence={mean:.4}", mined.len());
    Ok(ExitCode::SUCCESS)
}

pub fn pac(args: PacArgs) -> Outcome {
    let k = load_context(&args.context)?;
    let params = PacParams::new(
        rational("epsilon", &args.epsilon)?,
        rational("delta", &args.delta)?,
        args.seed,
    )?;
    let run = pac_basis_run(&k, &params);
    let mut manifest = run.manifest();
    manifest
        .set("context", args.context.display())
        .set("objects", k.object_count())
        .set("attributes", k.attribute_count())
        .set("supported", count_supported(&k, &run.base));
    let mut within = true;
    if args.validate {
        if k.attribute_count() <= EXACT_DISTANCE_CAP {
            let d = horn_distance(&run.base, &k)?;
            within = d <= params.epsilon;
            manifest.set("horn_distance", d);
            eprintln!("horn_distance={d} ({:.6}) epsilon={}", to_f64(&d), params.epsilon);
        } else {
            let est = horn_distance_sampled(&run.base, &k, VALIDATION_SAMPLES, args.seed ^ 0x5eed)?;
            within = est.estimate <= to_f64(&params.epsilon);
            manifest
                .set("horn_distance_estimate", format!("{:.6}", est.estimate))
                .set("horn_distance_std_error", format!("{:.6}", est.std_error))
                .set("horn_distance_samples", est.samples);
            eprintln!(
                "horn_distance~{:.6} ± {:.6} epsilon={}",
                est.estimate, est.std_error, params.epsilon
            );
        }
        manifest.set("within_epsilon", within);
    }
    let mut rules = RuleSet::from_base(k.attributes().to_vec(), &run.base);
    for r in &mut rules.rules {
        r.support = premise_support(&k, r);
    }
    write_rules(&rules, args.out.as_deref())?;
    if let Some(p) = &args.out {
        emit(Some(&with_suffix(p, ".manifest")), |w| manifest.write(w))?;
    }
    eprintln!(
        "rules={} equivalence_checks={} samples={}",
        run.base.len(),
        run.equivalence_checks,
        run.samples_drawn
    );
    Ok(if within { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

pub fn entails(args: EntailsArgs) -> Outcome {
    let path = &args.rules;
    let file = File::open(path).map_err(|e| Failure::io(e).context(format!("reading {}", path.display())))?;
    let reader = BufReader::new(file);
    let rules = if path.extension().is_some_and(|e| e == "jsonl") {
        RuleSet::read_jsonl(reader)
    } else {
        RuleSet::read_text(reader)
    }
    .map_err(|e| Failure::from(e).context(path.display()))?;
    let query = parse_implication(&args.query, &rules.attributes).map_err(|e| match e {
        kgfca::Error::Format { message, .. } => Failure::usage(anyhow!("query {:?}: {message}", args.query)),
        other => Failure::from(other).context(format!("query {:?}", args.query)),
    })?;
    let closed = LinClosure::from_base(&rules.base()).close(&query.premise);
    let names = |s| rules.labels(s).collect::<Vec<_>>().join(",");
    let missing = query.conclusion.difference(&closed);
    if missing.is_empty() {
        println!("entailed; closure: {{{}}}", names(&closed));
        Ok(ExitCode::SUCCESS)
    } else {
        println!("not entailed; missing: {{{}}}", names(&missing));
        Ok(ExitCode::from(1))
    }
}
