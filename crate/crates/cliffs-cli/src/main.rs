//! Command line front end for the cliffs library.
//!
//! Every subcommand assembles its whole output as a string and then either
//! prints it or writes it to `--out`, so runs are deterministic and
//! byte-identical for identical invocations. Exit codes: 0 on success, 1 for
//! domain errors (non-members, size guards, bounds outside a check's scope),
//! 2 for usage errors (bad flags, unparseable specs or words).

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cliffs::algebra::generators::{freeness_evidence, generator_counts};
use cliffs::algebra::product::{associativity_check, over, product_f, under};
use cliffs::algebra::quotient::{interval_condition_check, quotient_wellformed};
use cliffs::algebra::{Basis, Element};
use cliffs::doubling::{contraction_sequence, nested_check};
use cliffs::families::{
    canyon_to_hill, hill_to_input_wing, hill_to_output_wing, input_wing_to_butterfly,
    input_wing_to_hill, output_wing_to_hill, Family,
};
use cliffs::perm::{from_lehmer_code, lehmer_code, Permutation};
use cliffs::poset::{build_poset, lattice_checks, subset_predicates, DEFAULT_SIZE_GUARD};
use cliffs::shelling::el_labeling_check;
use cliffs::subset::{elevation, elevation_inverse, FullBox, GradedSubset};
use cliffs::{CliffError, RangeMap, Word};

#[derive(Parser)]
#[command(name = "cliffs", version, about = "Bounded word families and their graded algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the members of a family slice
    Enumerate(EnumerateArgs),
    /// Hasse diagram of a family slice under the componentwise order
    Hasse(HasseArgs),
    /// Multiply basis elements, left to right
    Product(ProductArgs),
    /// Run one structural check suite and report its verdicts
    Check(CheckArgs),
    /// Exact generator counts of a graded algebra, by size
    Generators(GeneratorsArgs),
    /// Generator tables for the staircase hill and canyon quotients
    Tables(TablesArgs),
    /// Apply a recoding map to words or permutations
    Bijection(BijectionArgs),
}

/// Bound map selection shared by most subcommands.
#[derive(Args)]
struct DeltaOpt {
    /// Bound map spec, e.g. `m(2)` or `seq[2,3];const(1)`
    #[arg(long, value_name = "SPEC")]
    delta: Option<String>,
    /// Staircase shorthand: `--m K` means `--delta m(K)`
    #[arg(long, value_name = "LEVEL", conflicts_with = "delta")]
    m: Option<u32>,
}

impl DeltaOpt {
    fn resolve(&self) -> Result<RangeMap, Failure> {
        match (&self.delta, self.m) {
            (Some(spec), _) => Ok(RangeMap::parse(spec)?),
            (None, Some(m)) => Ok(RangeMap::staircase(m)),
            (None, None) => Err(usage(
                "a bound map is required: pass --delta SPEC or --m LEVEL",
            )),
        }
    }

    /// The staircase level, for maps that are only defined at staircase bounds.
    fn level(&self) -> Result<u32, Failure> {
        match (&self.delta, self.m) {
            (None, Some(m)) => Ok(m),
            _ => Err(usage("this map is tied to a staircase bound: pass --m LEVEL")),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Cliff,
    Av,
    Hi,
    Ca,
}

impl FamilyArg {
    fn build(self, delta: RangeMap) -> Family {
        match self {
            FamilyArg::Cliff => Family::cliff(delta),
            FamilyArg::Av => Family::avalanche(delta),
            FamilyArg::Hi => Family::hill(delta),
            FamilyArg::Ca => Family::canyon(delta),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "E", alias = "e")]
    E,
    #[value(name = "H", alias = "h")]
    H,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    delta: DeltaOpt,
    #[arg(long, value_enum, default_value = "cliff")]
    family: FamilyArg,
    /// Word size
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HasseArgs {
    #[command(flatten)]
    delta: DeltaOpt,
    #[arg(long, value_enum, default_value = "cliff")]
    family: FamilyArg,
    /// Word size
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "dot")]
    format: FormatArg,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ProductArgs {
    #[command(flatten)]
    delta: DeltaOpt,
    #[arg(long, value_enum, default_value = "cliff")]
    family: FamilyArg,
    /// Basis to multiply in; E and H need the full box
    #[arg(long, value_enum, default_value = "F")]
    basis: BasisArg,
    /// Factors as comma-separated words, e.g. `0,0 0,1,1`
    #[arg(required = true, num_args = 2..)]
    words: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    /// Order shape of the bound map itself
    Classify,
    /// Structural predicates of the family, sizes up to --max-n
    Predicates,
    /// Lattice and stability checks of one slice against its box
    Lattice,
    /// Edge labeling: increasing and decreasing maximal chains per interval
    Shelling,
    /// Nestedness of each slice, sizes up to --max-n
    Nested,
    /// Contraction by interval doublings starting at size --n
    Contraction,
    /// Prefix and reduced-suffix closure, sizes up to --max-n
    Quotient,
    /// Are all products supported on intervals, degrees up to --max-n
    Interval,
    /// Associativity of the F product, degrees up to --max-n
    Associativity,
    /// Generator counts against the quasi-inverse of the Hilbert series
    Freeness,
}

#[derive(Args)]
struct CheckArgs {
    /// Which suite to run
    #[arg(value_enum)]
    suite: SuiteArg,
    #[command(flatten)]
    delta: DeltaOpt,
    #[arg(long, value_enum, default_value = "cliff")]
    family: FamilyArg,
    /// Single size, for the suites that need one slice
    #[arg(long)]
    n: Option<usize>,
    /// Size or degree bound for the graded suites [default: 5]
    #[arg(long)]
    max_n: Option<usize>,
    /// Position probed by the domination predicate
    #[arg(long, default_value_t = 1)]
    j: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GeneratorsArgs {
    #[command(flatten)]
    delta: DeltaOpt,
    #[arg(long, value_enum, default_value = "cliff")]
    family: FamilyArg,
    /// Largest size counted
    #[arg(long)]
    max_n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TablesArgs {
    /// Largest size counted
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichMap {
    /// Permutation to its code word
    Lehmer,
    /// Code word back to its permutation
    LehmerInverse,
    /// Recode each letter as its rank among member continuations
    Elevation,
    /// Decode ranks back to letters, failing off the image
    ElevationInverse,
    /// Elevate a canyon, then decode the ranks in the hill family
    CanyonToHill,
    /// Recode an output wing into a hill one staircase level down
    OutputWingToHill,
    /// Inverse recoding, hill back to output wing
    HillToOutputWing,
    /// Recode an input wing into a hill one staircase level down
    InputWingToHill,
    /// Inverse recoding, hill back to input wing
    HillToInputWing,
    /// Recode an input wing into a butterfly one level up
    InputWingToButterfly,
}

#[derive(Args)]
struct BijectionArgs {
    /// Which map to apply
    #[arg(value_enum)]
    which: WhichMap,
    #[command(flatten)]
    delta: DeltaOpt,
    /// Family searched by the elevation maps
    #[arg(long, value_enum, default_value = "cliff")]
    family: FamilyArg,
    /// Inputs, mapped one per output line
    #[arg(required = true, num_args = 1..)]
    words: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failed run, split by which exit code it maps to.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<CliffError> for Failure {
    fn from(e: CliffError) -> Self {
        match e {
            CliffError::BadRangeMapSpec { .. }
            | CliffError::EmptyPeriod
            | CliffError::BadWord { .. }
            | CliffError::BadPermutation { .. }
            | CliffError::BadElement { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Enumerate(args) => run_enumerate(args),
        Command::Hasse(args) => run_hasse(args),
        Command::Product(args) => run_product(args),
        Command::Check(args) => run_check(args),
        Command::Generators(args) => run_generators(args),
        Command::Tables(args) => run_tables(args),
        Command::Bijection(args) => run_bijection(args),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_pretty(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("value has no non-string keys");
    s.push('\n');
    s
}

fn ambient_name(family: &Family) -> String {
    format!("{};{}", family.kind().name(), family.delta())
}

fn parse_words(inputs: &[String]) -> Result<Vec<Word>, Failure> {
    inputs
        .iter()
        .map(|s| Word::parse(s).map_err(Failure::from))
        .collect()
}

fn join_display<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Slice cardinalities up to `max_n`, behind the enumeration guard.
fn guarded_dims(family: &Family, max_n: usize) -> Result<Vec<usize>, Failure> {
    (0..=max_n)
        .map(|n| Ok(family.elements_guarded(n, DEFAULT_SIZE_GUARD)?.len()))
        .collect()
}

fn run_enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let family = args.family.build(args.delta.resolve()?);
    let words = family.elements_guarded(args.n, DEFAULT_SIZE_GUARD)?;
    let content = match args.format {
        FormatArg::Text => {
            let mut s = String::new();
            for w in &words {
                let _ = writeln!(s, "{w}");
            }
            s
        }
        FormatArg::Csv => {
            let mut s = String::from("word\n");
            for w in &words {
                let _ = writeln!(s, "{}", csv_field(&w.to_string()));
            }
            s
        }
        FormatArg::Json => json_pretty(serde_json::json!({
            "family": family.kind().name(),
            "delta": family.delta().to_string(),
            "n": args.n,
            "words": words.iter().map(Word::to_string).collect::<Vec<_>>(),
        })),
        FormatArg::Dot => return Err(usage("dot output is only defined for `hasse`")),
    };
    emit(&args.out, &content)
}

fn run_hasse(args: HasseArgs) -> Result<(), Failure> {
    let family = args.family.build(args.delta.resolve()?);
    let poset = build_poset(&family, args.n, None)?;
    let mut edges = poset.cover_edges();
    edges.sort_unstable();
    let content = match args.format {
        FormatArg::Dot => poset.dot(&format!("{}_{}", family.kind().name(), args.n)),
        FormatArg::Text => {
            let mut s = String::from("nodes\n");
            for w in poset.elements() {
                let _ = writeln!(s, "  {w}");
            }
            s.push_str("edges\n");
            for &(i, j) in &edges {
                let _ = writeln!(s, "  {} < {}", poset.element(i), poset.element(j));
            }
            s
        }
        FormatArg::Json => json_pretty(serde_json::json!({
            "family": family.kind().name(),
            "delta": family.delta().to_string(),
            "n": args.n,
            "nodes": poset.elements().iter().map(Word::to_string).collect::<Vec<_>>(),
            "edges": edges
                .iter()
                .map(|&(i, j)| {
                    serde_json::json!([
                        poset.element(i).to_string(),
                        poset.element(j).to_string()
                    ])
                })
                .collect::<Vec<_>>(),
        })),
        FormatArg::Csv => return Err(usage("hasse supports text, dot, and json output")),
    };
    emit(&args.out, &content)
}

fn run_product(args: ProductArgs) -> Result<(), Failure> {
    let delta = args.delta.resolve()?;
    let family = args.family.build(delta.clone());
    let words = parse_words(&args.words)?;
    let element = match args.basis {
        BasisArg::F => {
            let mut acc = Element::basis_word(family.clone(), Basis::F, words[0].clone())?;
            for w in &words[1..] {
                let rhs = Element::basis_word(family.clone(), Basis::F, w.clone())?;
                acc = product_f(&acc, &rhs)?;
            }
            acc
        }
        BasisArg::E => {
            let family = cliff_only(args.family, &delta, &words, Basis::E)?;
            let mut acc = Some(words[0].clone());
            for w in &words[1..] {
                acc = acc.and_then(|u| over(&delta, &u, w));
            }
            match acc {
                Some(w) => Element::basis_word(family, Basis::E, w)?,
                None => Element::zero(family, Basis::E),
            }
        }
        BasisArg::H => {
            let family = cliff_only(args.family, &delta, &words, Basis::H)?;
            let mut acc = words[0].clone();
            for w in &words[1..] {
                acc = under(&delta, &acc, w).reduce(&delta);
            }
            Element::basis_word(family, Basis::H, acc)?
        }
    };
    let content = match args.format {
        FormatArg::Text => format!("{element}\n"),
        FormatArg::Csv => {
            let mut s = String::from("basis,word,coefficient\n");
            for (w, c) in element.terms() {
                let _ = writeln!(
                    s,
                    "{},{},{}",
                    element.basis(),
                    csv_field(&w.to_string()),
                    csv_field(&c.to_string())
                );
            }
            s
        }
        FormatArg::Json => json_pretty(serde_json::json!({
            "family": family.kind().name(),
            "delta": family.delta().to_string(),
            "basis": element.basis().to_string(),
            "element": element.to_string(),
            "terms": element
                .terms()
                .iter()
                .map(|(w, c)| {
                    serde_json::json!({
                        "word": w.to_string(),
                        "coefficient": c.to_string(),
                    })
                })
                .collect::<Vec<_>>(),
        })),
        FormatArg::Dot => return Err(usage("dot output is only defined for `hasse`")),
    };
    emit(&args.out, &content)
}

/// The monomial bases only exist over the full box; also validates that each
/// factor is a box member before any folding starts.
fn cliff_only(
    family: FamilyArg,
    delta: &RangeMap,
    words: &[Word],
    basis: Basis,
) -> Result<Family, Failure> {
    if family != FamilyArg::Cliff {
        return Err(usage(
            "the E and H bases are only defined over the full box (--family cliff)",
        ));
    }
    let fam = Family::cliff(delta.clone());
    for w in words {
        Element::basis_word(fam.clone(), basis, w.clone())?;
    }
    Ok(fam)
}

fn run_check(args: CheckArgs) -> Result<(), Failure> {
    if args.format != FormatArg::Text {
        return Err(usage("check reports are plain text"));
    }
    let delta = args.delta.resolve()?;
    let family = args.family.build(delta.clone());
    let max_n = args.max_n.unwrap_or(5);
    let need_n = |suite: &str| {
        args.n
            .ok_or_else(|| usage(format!("the {suite} suite needs --n")))
    };
    let mut s = String::new();
    match args.suite {
        SuiteArg::Classify => {
            let c = delta.classify(delta.required_horizon(), args.j)?;
            let _ = writeln!(s, "weakly_increasing: {}", c.weakly_increasing);
            let _ = writeln!(s, "increasing: {}", c.increasing);
            let _ = writeln!(s, "valley_free: {}", c.valley_free);
            let _ = writeln!(s, "dominated_at_{}: {}", args.j, c.j_dominated);
        }
        SuiteArg::Predicates => {
            let e = subset_predicates(&family, max_n)?;
            let _ = writeln!(s, "straight: {}", e.straight);
            let _ = writeln!(s, "coated: {}", e.coated);
            let _ = writeln!(s, "closed_by_prefix: {}", e.closed_by_prefix);
            let _ = writeln!(s, "min_extendable: {}", e.min_extendable);
            let _ = writeln!(s, "max_extendable: {}", e.max_extendable);
        }
        SuiteArg::Lattice => {
            let n = need_n("lattice")?;
            let poset = build_poset(&family, n, None)?;
            let box_poset = build_poset(&FullBox::new(delta.clone()), n, None)?;
            let c = lattice_checks(&poset, &box_poset)?;
            let opt = |b: Option<bool>| match b {
                Some(v) => v.to_string(),
                None => "n/a".to_string(),
            };
            let _ = writeln!(s, "is_lattice: {}", c.is_lattice);
            let _ = writeln!(s, "meet_semisub: {}", c.is_meet_semisub);
            let _ = writeln!(s, "join_semisub: {}", c.is_join_semisub);
            let _ = writeln!(s, "meet_stable: {}", opt(c.is_meet_stable));
            let _ = writeln!(s, "join_stable: {}", opt(c.is_join_stable));
        }
        SuiteArg::Shelling => {
            let n = need_n("shelling")?;
            let poset = build_poset(&family, n, None)?;
            let r = el_labeling_check(&poset)?;
            let _ = writeln!(s, "el_labeling: {}", r.is_el_labeling);
            let _ = writeln!(s, "at_most_one_decreasing: {}", r.at_most_one_decreasing);
            let _ = writeln!(s, "bounded: {}", r.bounded);
            match &r.bad_interval {
                Some((u, v)) => {
                    let _ = writeln!(s, "bad_interval: [{u}, {v}]");
                }
                None => {
                    let _ = writeln!(s, "bad_interval: none");
                }
            }
        }
        SuiteArg::Nested => {
            for k in 0..=max_n {
                let _ = writeln!(s, "size {k}: {}", nested_check(&family, k));
            }
        }
        SuiteArg::Contraction => {
            let n = need_n("contraction")?;
            let steps = contraction_sequence(&family, n)?;
            let _ = writeln!(s, "steps: {}", steps.len());
            for (i, st) in steps.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "step {}: size {}, {} -> {} elements, doubled interval of {}",
                    i + 1,
                    st.size,
                    st.before.len(),
                    st.after.len(),
                    st.interval.len()
                );
            }
        }
        SuiteArg::Quotient => {
            let _ = writeln!(s, "well_formed: {}", quotient_wellformed(&family, max_n));
        }
        SuiteArg::Interval => match interval_condition_check(&family, max_n) {
            None => {
                let _ = writeln!(s, "interval_condition: true");
            }
            Some((u, v)) => {
                let _ = writeln!(s, "interval_condition: false");
                let _ = writeln!(s, "witness: ({u}) * ({v})");
            }
        },
        SuiteArg::Associativity => match associativity_check(&delta, max_n) {
            None => {
                let _ = writeln!(s, "associative: true up to degree {max_n}");
            }
            Some((u, v, w)) => {
                let _ = writeln!(s, "associative: false");
                let _ = writeln!(s, "counterexample: ({u}) * ({v}) * ({w})");
            }
        },
        SuiteArg::Freeness => {
            let ev = freeness_evidence(&family, max_n)?;
            let _ = writeln!(s, "hilbert: {}", join_display(&ev.hilbert));
            let _ = writeln!(s, "generators: {}", join_display(&ev.generators));
            let _ = writeln!(s, "free_consistent: {}", ev.free_consistent);
        }
    }
    emit(&args.out, &s)
}

fn run_generators(args: GeneratorsArgs) -> Result<(), Failure> {
    let family = args.family.build(args.delta.resolve()?);
    let dims = guarded_dims(&family, args.max_n)?;
    let counts = generator_counts(&family, args.max_n)?;
    let content = render_counts(&[(family, dims, counts)], args.format)?;
    emit(&args.out, &content)
}

fn run_tables(args: TablesArgs) -> Result<(), Failure> {
    let ambients = [
        Family::hill(RangeMap::staircase(1)),
        Family::hill(RangeMap::staircase(2)),
        Family::canyon(RangeMap::staircase(1)),
        Family::canyon(RangeMap::staircase(2)),
    ];
    let mut rows = Vec::new();
    for family in ambients {
        let dims = guarded_dims(&family, args.max_n)?;
        let counts = generator_counts(&family, args.max_n)?;
        rows.push((family, dims, counts));
    }
    let content = render_counts(&rows, args.format)?;
    emit(&args.out, &content)
}

fn render_counts(
    rows: &[(Family, Vec<usize>, Vec<u64>)],
    format: FormatArg,
) -> Result<String, Failure> {
    Ok(match format {
        FormatArg::Text => {
            let mut s = String::new();
            for (family, _, counts) in rows {
                let _ = writeln!(s, "{}: {}", ambient_name(family), join_display(counts));
            }
            s
        }
        FormatArg::Csv => {
            let mut s = String::from("ambient,n,dim,generators\n");
            for (family, dims, counts) in rows {
                let ambient = csv_field(&ambient_name(family));
                for (n, (dim, g)) in dims.iter().zip(counts).enumerate() {
                    let _ = writeln!(s, "{ambient},{n},{dim},{g}");
                }
            }
            s
        }
        FormatArg::Json => json_pretty(serde_json::Value::Array(
            rows.iter()
                .map(|(family, dims, counts)| {
                    serde_json::json!({
                        "family": family.kind().name(),
                        "delta": family.delta().to_string(),
                        "dims": dims,
                        "generators": counts,
                    })
                })
                .collect(),
        )),
        FormatArg::Dot => return Err(usage("dot output is only defined for `hasse`")),
    })
}

fn run_bijection(args: BijectionArgs) -> Result<(), Failure> {
    let mut pairs: Vec<(String, String)> = Vec::new();
    match args.which {
        WhichMap::Lehmer => {
            for input in &args.words {
                let sigma = parse_permutation(input)?;
                let code = lehmer_code(&sigma);
                pairs.push((sigma.to_string(), code.to_string()));
            }
        }
        WhichMap::LehmerInverse => {
            for w in parse_words(&args.words)? {
                let sigma = from_lehmer_code(&w)?;
                pairs.push((w.to_string(), sigma.to_string()));
            }
        }
        WhichMap::Elevation | WhichMap::ElevationInverse => {
            let family = args.family.build(args.delta.resolve()?);
            for w in parse_words(&args.words)? {
                let image = if args.which == WhichMap::Elevation {
                    elevation(&family, &w)?
                } else {
                    elevation_inverse(&family, &w)?
                };
                pairs.push((w.to_string(), image.to_string()));
            }
        }
        WhichMap::CanyonToHill => {
            let delta = args.delta.resolve()?;
            for w in parse_words(&args.words)? {
                let image = canyon_to_hill(&delta, &w)?;
                pairs.push((w.to_string(), image.to_string()));
            }
        }
        WhichMap::OutputWingToHill
        | WhichMap::HillToOutputWing
        | WhichMap::InputWingToHill
        | WhichMap::HillToInputWing
        | WhichMap::InputWingToButterfly => {
            let m = args.delta.level()?;
            let map = match args.which {
                WhichMap::OutputWingToHill => output_wing_to_hill,
                WhichMap::HillToOutputWing => hill_to_output_wing,
                WhichMap::InputWingToHill => input_wing_to_hill,
                WhichMap::HillToInputWing => hill_to_input_wing,
                _ => input_wing_to_butterfly,
            };
            for w in parse_words(&args.words)? {
                let image = map(m, &w)?;
                pairs.push((w.to_string(), image.to_string()));
            }
        }
    }
    let which_name = args
        .which
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let content = match args.format {
        FormatArg::Text => {
            let mut s = String::new();
            for (from, to) in &pairs {
                let _ = writeln!(s, "{from} -> {to}");
            }
            s
        }
        FormatArg::Csv => {
            let mut s = String::from("input,output\n");
            for (from, to) in &pairs {
                let _ = writeln!(s, "{},{}", csv_field(from), csv_field(to));
            }
            s
        }
        FormatArg::Json => json_pretty(serde_json::json!({
            "which": which_name,
            "pairs": pairs
                .iter()
                .map(|(from, to)| serde_json::json!([from, to]))
                .collect::<Vec<_>>(),
        })),
        FormatArg::Dot => return Err(usage("dot output is only defined for `hasse`")),
    };
    emit(&args.out, &content)
}

fn parse_permutation(input: &str) -> Result<Permutation, Failure> {
    let word = Word::parse(input)?;
    Ok(Permutation::new(word.letters().to_vec())?)
}
