use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "kgfca",
    version,
    about = "Implication and association-rule bases from knowledge-graph dumps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Extract a formal context from a dump.
    Context(ContextArgs),
    /// Canonical base of a context file.
    Base(BaseArgs),
    /// Luxenburger base of association rules.
    Luxenburger(LuxenburgerArgs),
    /// PAC implication base.
    Pac(PacArgs),
    /// Decide whether a rules file entails a query such as "a,b => c".
    Entails(EntailsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Plain,
    Directed,
    Qualified,
    Classified,
    Union,
}

#[derive(Args, Debug)]
pub struct ContextArgs {
    /// Entity dump, one record per line; `.gz` and `.bz2` are decompressed.
    #[arg(long)]
    pub dump: PathBuf,
    #[arg(long, value_enum, default_value = "directed")]
    pub problem: Problem,
    /// Property selection file: one `P26`, `P26@subj` or `P26@obj` per line.
    #[arg(long, conflicts_with = "property_class", required_unless_present = "property_class")]
    pub properties: Option<PathBuf>,
    /// Select every property that is an instance of this class.
    #[arg(long, value_name = "QID")]
    pub property_class: Option<String>,
    /// Problems combined by `--problem union`.
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "plain,directed,qualified,classified"
    )]
    pub union_of: Vec<Problem>,
    /// Only these qualifier properties become qualified attributes.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    pub qualifier_props: Option<Vec<String>>,
    /// Keep only the N most frequent values per qualifier property.
    #[arg(long, value_name = "N")]
    pub max_qualifier_values: Option<usize>,
    /// Only these classes become classified attributes.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    pub class_filter: Option<Vec<String>>,
    /// Expose statement ranks as qualified attributes.
    #[arg(long)]
    pub include_rank: bool,
    /// Property translation file; `default` selects the built-in map.
    #[arg(long, value_name = "FILE|default")]
    pub translations: Option<String>,
    /// Fail on the first malformed record instead of skipping it.
    #[arg(long)]
    pub strict: bool,
    /// Context file to write; a `.meta` sidecar is written next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BaseArgs {
    #[arg(long)]
    pub context: PathBuf,
    /// Keep only rules whose premise has positive support.
    #[arg(long)]
    pub only_supported: bool,
    /// Give up after this many seconds.
    #[arg(long, value_name = "SECONDS")]
    pub wall_clock_budget: Option<f64>,
    /// Rules file; rule records go to `<out>.jsonl`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct LuxenburgerArgs {
    #[arg(long)]
    pub context: PathBuf,
    #[arg(long, default_value = "0.0001")]
    pub minsupp: String,
    #[arg(long, default_value = "0.6")]
    pub minconf: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PacArgs {
    #[arg(long)]
    pub context: PathBuf,
    #[arg(long)]
    pub epsilon: String,
    #[arg(long)]
    pub delta: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Check the Horn distance of the result against epsilon.
    #[arg(long)]
    pub validate: bool,
    /// Rules file; a `.manifest` run record is written next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EntailsArgs {
    /// Rules file, text or `.jsonl`.
    #[arg(long)]
    pub rules: PathBuf,
    #[arg(allow_hyphen_values = true)]
    pub query: String,
}
