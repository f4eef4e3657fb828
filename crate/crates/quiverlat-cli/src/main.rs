//! Command-line front end: compute twist-knot sequences from quiver
//! generating series, count lattice paths, evaluate Raney closed forms,
//! and cross-check the three against each other.
//!
//! Every table goes to stdout as TSV under '#' comment headers that record
//! the convention flags and the seed checksum, so emitted artifacts are
//! self-describing and byte-stable across runs and worker counts.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use quiverlat::quiver::AugmentedQuiver;
use quiverlat::seed::{load_seed, serialize_seed};
use quiverlat::series::{
    compute_sequence, make_substitution, partition_series, ratio_y, AMode, Conventions,
    QExpConvention, SubstKind, TruncatedXSeries,
};
use quiverlat::tower::{
    build_tower, builtin_seed_4_1, tower_steps, KnotFamily, KnotFamilySpec, Node0Rule, TargetRule,
};
use quiverlat::{
    count_paths, family_path_model, family_raney_params, raney, tabulated_framings,
    torus_path_model, ALaurent, Error, Strictness,
};
use sha2::{Digest, Sha256};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "quiverlat", version, about = "Quiver series and lattice paths for twist knots")]
struct Cli {
    /// Worker threads for the series expansion (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the quiver generating series and print the sequence N_k
    Seq(SeqArgs),
    /// Count lattice paths under the family's rational-slope line
    Paths(PathsArgs),
    /// Evaluate the family's Raney closed form
    Raney(RaneyArgs),
    /// Cross-check quiver series, closed form, and path counts per cell
    Verify(VerifyArgs),
    /// Inspect quivers
    Quiver {
        #[command(subcommand)]
        cmd: QuiverCmd,
    },
    /// Inspect towers of unlinking operations
    Tower {
        #[command(subcommand)]
        cmd: TowerCmd,
    },
}

#[derive(Subcommand)]
enum QuiverCmd {
    /// Print a quiver (a seed, or a tower result) in the seed file format
    Show(ShowArgs),
}

#[derive(Subcommand)]
enum TowerCmd {
    /// Print the unlink plan that grows the family member from its seed
    Build(TowerBuildArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyOpt {
    #[value(name = "neg-twist")]
    NegTwist,
    #[value(name = "pos-twist")]
    PosTwist,
    #[value(name = "double-twist-3")]
    DoubleTwist3,
    #[value(name = "torus-2")]
    Torus2,
}

impl From<FamilyOpt> for KnotFamily {
    fn from(f: FamilyOpt) -> KnotFamily {
        match f {
            FamilyOpt::NegTwist => KnotFamily::NegTwist,
            FamilyOpt::PosTwist => KnotFamily::PosTwist,
            FamilyOpt::DoubleTwist3 => KnotFamily::DoubleTwist3,
            FamilyOpt::Torus2 => KnotFamily::Torus2,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeOpt {
    /// Integer sequence at a = 0, q = 1
    A0q1,
    /// Laurent coefficients N_k(a, q)
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QExpOpt {
    Qbar,
    QbarMinusDiag,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Node0Opt {
    Shifted,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TowerRuleOpt {
    Explicit,
    Formula,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StepsOpt {
    #[value(name = "EN")]
    En,
    #[value(name = "END")]
    End,
}

#[derive(Args)]
struct FamilyArgs {
    /// Knot family
    #[arg(long, value_enum)]
    family: FamilyOpt,
    /// Twist parameter p
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
}

#[derive(Args)]
struct ConvArgs {
    /// Node q-exponent fed to the series specialization
    #[arg(long, value_enum, default_value_t = QExpOpt::Qbar)]
    q_exp_convention: QExpOpt,
    /// Whether node 0's monomial carries the diagonal shift
    #[arg(long, value_enum, default_value_t = Node0Opt::Shifted)]
    node0_rule: Node0Opt,
    /// How unlink targets are chosen after the first tower step
    #[arg(long, value_enum, default_value_t = TowerRuleOpt::Explicit)]
    tower_rule: TowerRuleOpt,
}

impl ConvArgs {
    fn conventions(&self) -> Conventions {
        Conventions {
            q_exp: match self.q_exp_convention {
                QExpOpt::Qbar => QExpConvention::QBar,
                QExpOpt::QbarMinusDiag => QExpConvention::QBarMinusDiag,
            },
            node0: match self.node0_rule {
                Node0Opt::Shifted => Node0Rule::Shifted,
                Node0Opt::Plain => Node0Rule::Plain,
            },
            tower_rule: match self.tower_rule {
                TowerRuleOpt::Explicit => TargetRule::Explicit,
                TowerRuleOpt::Formula => TargetRule::Formula,
            },
        }
    }
}

#[derive(Args)]
struct StrictArgs {
    /// Strict inequality against the line at every visited point
    #[arg(long, conflicts_with = "weak")]
    strict: bool,
    /// Weak inequality (the default)
    #[arg(long)]
    weak: bool,
}

impl StrictArgs {
    fn strictness(&self) -> Strictness {
        if self.strict {
            Strictness::Strict
        } else {
            Strictness::Weak
        }
    }

    fn label(&self) -> &'static str {
        match self.strictness() {
            Strictness::Strict => "strict",
            Strictness::Weak => "weak",
        }
    }
}

#[derive(Args)]
struct SeqArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Framing added to every entry of the unreduced matrix
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    framing: i64,
    /// Largest x-order to expand
    #[arg(long, default_value_t = 4)]
    kmax: usize,
    /// Seed file; defaults to QUIVERLAT_SEED_DIR, then the built-in seed
    #[arg(long)]
    seed: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ModeOpt::A0q1)]
    mode: ModeOpt,
    #[command(flatten)]
    conv: ConvArgs,
    /// Compute framings outside the tabulated range (no cross-check then)
    #[arg(long)]
    allow_untabulated: bool,
}

#[derive(Args)]
struct PathsArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    framing: i64,
    #[arg(long, default_value_t = 4)]
    kmax: u64,
    #[command(flatten)]
    strictness: StrictArgs,
    /// Step set; END applies to the torus-2 model only
    #[arg(long, value_enum, default_value_t = StepsOpt::En)]
    steps: StepsOpt,
    #[arg(long)]
    allow_untabulated: bool,
}

#[derive(Args)]
struct RaneyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    framing: i64,
    #[arg(long, default_value_t = 4)]
    kmax: u64,
    #[arg(long)]
    allow_untabulated: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Single framing to check; defaults to every tabulated framing
    #[arg(long, allow_negative_numbers = true)]
    framing: Option<i64>,
    #[arg(long, default_value_t = 4)]
    kmax: usize,
    #[arg(long)]
    seed: Option<PathBuf>,
    #[command(flatten)]
    conv: ConvArgs,
    #[arg(long)]
    allow_untabulated: bool,
}

#[derive(Args)]
struct ShowArgs {
    /// Knot family; with --p, grows the tower before printing
    #[arg(long, value_enum)]
    family: Option<FamilyOpt>,
    /// Twist parameter p
    #[arg(long, allow_negative_numbers = true, requires = "family")]
    p: Option<i64>,
    #[arg(long)]
    seed: Option<PathBuf>,
    #[command(flatten)]
    conv: ConvArgs,
}

#[derive(Args)]
struct TowerBuildArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    seed: Option<PathBuf>,
    #[command(flatten)]
    conv: ConvArgs,
}

enum CmdErr {
    Lib(Error),
    Cli(String),
}

impl From<Error> for CmdErr {
    fn from(e: Error) -> CmdErr {
        CmdErr::Lib(e)
    }
}

fn cli_err(msg: impl Into<String>) -> CmdErr {
    CmdErr::Cli(msg.into())
}

struct ResolvedSeed {
    label: String,
    name: String,
    quiver: AugmentedQuiver,
}

fn family_seed_name(family: KnotFamily) -> Option<&'static str> {
    match family {
        KnotFamily::NegTwist => Some("4_1"),
        KnotFamily::PosTwist => Some("5_2"),
        KnotFamily::DoubleTwist3 => Some("7_4"),
        KnotFamily::Torus2 => None,
    }
}

/// Seed lookup order: explicit --seed path, then QUIVERLAT_SEED_DIR, then
/// the built-in figure-eight data (negative twist family only). Ok(None)
/// means no seed exists anywhere, which verify treats as a missing leg.
fn try_resolve_seed(
    flag: &Option<PathBuf>,
    family: KnotFamily,
) -> Result<Option<ResolvedSeed>, Error> {
    if let Some(path) = flag {
        let loaded = load_seed(path)?;
        for w in &loaded.warnings {
            eprintln!("warning: {w}");
        }
        return Ok(Some(ResolvedSeed {
            label: path.display().to_string(),
            name: loaded.name,
            quiver: loaded.quiver,
        }));
    }
    let Some(base) = family_seed_name(family) else {
        return Ok(None);
    };
    if let Some(dir) = std::env::var_os("QUIVERLAT_SEED_DIR") {
        let candidate = PathBuf::from(dir).join(format!("{base}.qseed"));
        if candidate.is_file() {
            let loaded = load_seed(&candidate)?;
            for w in &loaded.warnings {
                eprintln!("warning: {w}");
            }
            return Ok(Some(ResolvedSeed {
                label: candidate.display().to_string(),
                name: loaded.name,
                quiver: loaded.quiver,
            }));
        }
    }
    if family == KnotFamily::NegTwist {
        return Ok(Some(ResolvedSeed {
            label: "builtin:4_1".to_string(),
            name: "4_1".to_string(),
            quiver: builtin_seed_4_1(),
        }));
    }
    Ok(None)
}

fn resolve_seed(flag: &Option<PathBuf>, family: KnotFamily) -> Result<ResolvedSeed, Error> {
    match try_resolve_seed(flag, family)? {
        Some(seed) => Ok(seed),
        None => {
            let base = family_seed_name(family).unwrap_or("a");
            Err(std::io::Error::new(
                std::io::ErrorKind::NotFound,
                format!(
                    "no {base}.qseed available for {}: pass --seed or set QUIVERLAT_SEED_DIR",
                    family.name()
                ),
            )
            .into())
        }
    }
}

fn seed_checksum(name: &str, quiver: &AugmentedQuiver) -> String {
    let canonical = serialize_seed(name, quiver);
    let digest = Sha256::digest(canonical.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    hex[..16].to_string()
}

/// Gate on the published framing ranges. Ok(true) means the row is
/// tabulated and carries cross-checks; Ok(false) means the caller opted
/// into an untabulated row.
fn framing_gate(spec: &KnotFamilySpec, f: i64, allow: bool) -> Result<bool, Error> {
    match tabulated_framings(spec) {
        Some(range) if range.contains(&f) => Ok(true),
        Some(_) if allow => Ok(false),
        Some(range) => Err(Error::UntabulatedFraming {
            family: spec.family.name().to_string(),
            framing: f,
            lo: *range.start(),
            hi: *range.end(),
        }),
        None if allow => Ok(false),
        None => Err(Error::FamilyParam {
            family: spec.family.name().to_string(),
            msg: format!(
                "no tabulated rows for p = {}; pass --allow-untabulated to compute anyway",
                spec.p
            ),
        }),
    }
}

fn conv_line(conv: &Conventions) -> String {
    let node0 = match conv.node0 {
        Node0Rule::Shifted => "shifted",
        Node0Rule::Plain => "plain",
    };
    let rule = match conv.tower_rule {
        TargetRule::Explicit => "explicit",
        TargetRule::Formula => "formula",
    };
    format!(
        "q-exp-convention={} node0-rule={node0} tower-rule={rule}",
        conv.q_exp.label()
    )
}

fn match_label(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "match",
        Some(false) => "MISMATCH",
        None => "untabulated",
    }
}

fn format_qlaurent(low: i64, coeffs: &[BigInt]) -> String {
    use num_bigint::Sign;
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.sign() == Sign::NoSign {
            continue;
        }
        let e = low + i as i64;
        let mag = c.magnitude();
        if s.is_empty() {
            if c.sign() == Sign::Minus {
                s.push('-');
            }
        } else if c.sign() == Sign::Minus {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        let unit = mag == &1u32.into();
        match (e, unit) {
            (0, _) => s.push_str(&mag.to_string()),
            (1, true) => s.push('q'),
            (1, false) => s.push_str(&format!("{mag}*q")),
            (_, true) => s.push_str(&format!("q^{e}")),
            (_, false) => s.push_str(&format!("{mag}*q^{e}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn format_alaurent(c: &ALaurent) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (&a_exp, rat) in c.iter() {
        let body = match rat.to_laurent() {
            Some((low, coeffs)) => format_qlaurent(low, &coeffs),
            None => format!("({})/({})", rat.numerator(), rat.denominator()),
        };
        parts.push(match a_exp {
            0 => format!("({body})"),
            1 => format!("a*({body})"),
            e => format!("a^{e}*({body})"),
        });
    }
    parts.join(" + ")
}

/// The full-mode pipeline: same tower and specialization as
/// compute_sequence, but keeping every a-slot of the ratio coefficients.
fn full_series(
    seed: &AugmentedQuiver,
    spec: &KnotFamilySpec,
    framing: i64,
    kmax: usize,
    conv: &Conventions,
) -> Result<TruncatedXSeries, Error> {
    let steps = spec.steps_from_seed()?;
    let aug = build_tower(seed, spec, steps, conv.tower_rule, conv.node0)?;
    let unreduced = aug.drop_auxiliary().double_unreduced().frame(framing);
    let (p1, p2) = spec
        .double_twist_params()
        .expect("tower families carry double twist parameters");
    let subst = make_substitution(SubstKind::Sp2 {
        quiver: &unreduced,
        p1,
        p2,
        convention: conv.q_exp,
    });
    let series = partition_series(&unreduced.matrix, &subst, kmax, AMode::Full)?;
    Ok(ratio_y(&series))
}

fn cmd_seq(args: &SeqArgs) -> Result<(), CmdErr> {
    let spec = KnotFamilySpec::new(args.family.family.into(), args.family.p)?;
    spec.steps_from_seed()?;
    let tabulated = framing_gate(&spec, args.framing, args.allow_untabulated)?;
    let seed = resolve_seed(&args.seed, spec.family)?;
    let conv = args.conv.conventions();
    let mode = match args.mode {
        ModeOpt::A0q1 => "a0q1",
        ModeOpt::Full => "full",
    };
    println!("# quiverlat seq");
    println!(
        "# family={} p={} knot={} framing={} kmax={}",
        spec.family.name(),
        spec.p,
        spec.knot_name(),
        args.framing,
        args.kmax
    );
    println!("# mode={mode} {}", conv_line(&conv));
    println!(
        "# seed={} checksum=sha256:{}",
        seed.label,
        seed_checksum(&seed.name, &seed.quiver)
    );
    match args.mode {
        ModeOpt::A0q1 => {
            let mut report =
                compute_sequence(&seed.quiver, &spec, args.framing, args.kmax, &conv)?;
            if tabulated {
                let params = family_raney_params(&spec, args.framing)?;
                let mut closed = true;
                let mut paths = true;
                for (k, value) in report.values.iter().enumerate() {
                    if raney(params.m, params.n, k as u64)? != *value {
                        closed = false;
                    }
                    let model = family_path_model(&spec, args.framing, k as u64)?;
                    if count_paths(&model) != *value {
                        paths = false;
                    }
                }
                report.closed_form_match = Some(closed);
                report.path_count_match = Some(paths);
            }
            println!(
                "# closed-form={} path-count={}",
                match_label(report.closed_form_match),
                match_label(report.path_count_match)
            );
            println!("k\tN_k");
            for (k, v) in report.values.iter().enumerate() {
                println!("{k}\t{v}");
            }
        }
        ModeOpt::Full => {
            let y = full_series(&seed.quiver, &spec, args.framing, args.kmax, &conv)?;
            println!("k\tN_k(a,q)");
            for l in 0..=args.kmax {
                println!("{l}\t{}", format_alaurent(y.coeff(l)));
            }
        }
    }
    Ok(())
}

fn cmd_paths(args: &PathsArgs) -> Result<(), CmdErr> {
    let spec = KnotFamilySpec::new(args.family.family.into(), args.family.p)?;
    let strictness = args.strictness.strictness();
    if spec.family == KnotFamily::Torus2 {
        if args.framing != 0 {
            return Err(cli_err(
                "the torus-2 model has no framing parameter; omit --framing",
            ));
        }
        let steps = match args.steps {
            StepsOpt::En => "EN",
            StepsOpt::End => "END",
        };
        println!("# quiverlat paths");
        println!(
            "# family=torus-2 p={} knot={} kmax={}",
            spec.p,
            spec.knot_name(),
            args.kmax
        );
        println!("# steps={steps} strictness={}", args.strictness.label());
        println!("k\tcount");
        for k in 0..=args.kmax {
            let mut model = torus_path_model(spec.p, k, args.steps == StepsOpt::End);
            model.strictness = strictness;
            println!("{k}\t{}", count_paths(&model));
        }
        return Ok(());
    }
    if args.steps == StepsOpt::End {
        return Err(cli_err(
            "the twist-family models admit E and N steps only; --steps END applies to torus-2",
        ));
    }
    framing_gate(&spec, args.framing, args.allow_untabulated)?;
    println!("# quiverlat paths");
    println!(
        "# family={} p={} knot={} framing={} kmax={}",
        spec.family.name(),
        spec.p,
        spec.knot_name(),
        args.framing,
        args.kmax
    );
    println!("# steps=EN strictness={}", args.strictness.label());
    println!("k\tcount");
    for k in 0..=args.kmax {
        let mut model = family_path_model(&spec, args.framing, k)?;
        model.strictness = strictness;
        println!("{k}\t{}", count_paths(&model));
    }
    Ok(())
}

fn cmd_raney(args: &RaneyArgs) -> Result<(), CmdErr> {
    let spec = KnotFamilySpec::new(args.family.family.into(), args.family.p)?;
    let params = family_raney_params(&spec, args.framing)?;
    framing_gate(&spec, args.framing, args.allow_untabulated)?;
    println!("# quiverlat raney");
    println!(
        "# family={} p={} knot={} framing={} kmax={}",
        spec.family.name(),
        spec.p,
        spec.knot_name(),
        args.framing,
        args.kmax
    );
    println!("# closed form R_({},{})", params.m, params.n);
    println!("k\tR");
    for k in 0..=args.kmax {
        println!("{k}\t{}", raney(params.m, params.n, k)?);
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, CmdErr> {
    let spec = KnotFamilySpec::new(args.family.family.into(), args.family.p)?;
    if spec.family == KnotFamily::Torus2 {
        return Err(Error::FamilyParam {
            family: "torus-2".to_string(),
            msg: "verify covers the twist families; use paths for the torus model".to_string(),
        }
        .into());
    }
    let framings: Vec<i64> = match args.framing {
        Some(f) => {
            framing_gate(&spec, f, args.allow_untabulated)?;
            vec![f]
        }
        None => match tabulated_framings(&spec) {
            Some(range) => range.collect(),
            None => {
                return Err(Error::FamilyParam {
                    family: spec.family.name().to_string(),
                    msg: format!("no tabulated framings for p = {}; pass --framing", spec.p),
                }
                .into())
            }
        },
    };
    let conv = args.conv.conventions();
    let seed = try_resolve_seed(&args.seed, spec.family)?;
    println!("# quiverlat verify");
    println!(
        "# family={} p={} knot={} kmax={} framings={}",
        spec.family.name(),
        spec.p,
        spec.knot_name(),
        args.kmax,
        framings
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    println!("# {}", conv_line(&conv));
    match &seed {
        Some(s) => println!(
            "# seed={} checksum=sha256:{}",
            s.label,
            seed_checksum(&s.name, &s.quiver)
        ),
        None => println!("# seed=none (quiver leg unavailable; comparing closed form to paths)"),
    }

    let mut header = String::from("f\\k");
    for k in 0..=args.kmax {
        header.push_str(&format!("\t{k}"));
    }
    println!("{header}");

    let mut mismatches: Vec<String> = Vec::new();
    for &f in &framings {
        let quiver_values: Option<Vec<BigInt>> = match &seed {
            Some(s) => Some(compute_sequence(&s.quiver, &spec, f, args.kmax, &conv)?.values),
            None => None,
        };
        let params = family_raney_params(&spec, f)?;
        let mut row = f.to_string();
        for k in 0..=args.kmax {
            let closed = raney(params.m, params.n, k as u64)?;
            let path = count_paths(&family_path_model(&spec, f, k as u64)?);
            let quiver = quiver_values.as_ref().map(|v| v[k].clone());
            let agree = closed == path && quiver.as_ref().map_or(true, |qv| *qv == closed);
            row.push_str(if agree { "\t\u{2713}" } else { "\t\u{2717}" });
            if !agree {
                let qs = quiver.map_or("-".to_string(), |v| v.to_string());
                mismatches.push(format!(
                    "# cell f={f} k={k}: quiver={qs} closed={closed} paths={path}"
                ));
            }
        }
        println!("{row}");
    }
    for line in &mismatches {
        println!("{line}");
    }
    if mismatches.is_empty() {
        println!("# verdict: all cells agree");
        Ok(true)
    } else {
        println!("# verdict: {} cells disagree", mismatches.len());
        Ok(false)
    }
}

fn cmd_quiver_show(args: &ShowArgs) -> Result<(), CmdErr> {
    let conv = args.conv.conventions();
    let (name, quiver, header) = match (args.family, args.p) {
        (Some(family), Some(p)) => {
            let spec = KnotFamilySpec::new(family.into(), p)?;
            let steps = spec.steps_from_seed()?;
            let seed = resolve_seed(&args.seed, spec.family)?;
            let aug = build_tower(&seed.quiver, &spec, steps, conv.tower_rule, conv.node0)?;
            let header = format!(
                "# family={} p={} steps={} {}\n# seed={} checksum=sha256:{}",
                spec.family.name(),
                spec.p,
                steps,
                conv_line(&conv),
                seed.label,
                seed_checksum(&seed.name, &seed.quiver)
            );
            (spec.knot_name(), aug, header)
        }
        (None, _) => {
            let Some(path) = &args.seed else {
                return Err(cli_err("pass --seed, or --family with --p"));
            };
            let loaded = load_seed(path)?;
            for w in &loaded.warnings {
                eprintln!("warning: {w}");
            }
            let header = format!(
                "# seed={} checksum=sha256:{}",
                path.display(),
                seed_checksum(&loaded.name, &loaded.quiver)
            );
            (loaded.name, loaded.quiver, header)
        }
        (Some(_), None) => return Err(cli_err("--family needs --p")),
    };
    println!("# quiverlat quiver show");
    println!("{header}");
    print!("{}", serialize_seed(&name, &quiver));
    Ok(())
}

fn cmd_tower_build(args: &TowerBuildArgs) -> Result<(), CmdErr> {
    let spec = KnotFamilySpec::new(args.family.family.into(), args.family.p)?;
    let steps = spec.steps_from_seed()?;
    let conv = args.conv.conventions();
    let seed = resolve_seed(&args.seed, spec.family)?;
    let plan = tower_steps(&spec, seed.quiver.size(), steps, conv.tower_rule);
    println!("# quiverlat tower build");
    println!(
        "# family={} p={} knot={} tower-rule={}",
        spec.family.name(),
        spec.p,
        spec.knot_name(),
        match conv.tower_rule {
            TargetRule::Explicit => "explicit",
            TargetRule::Formula => "formula",
        }
    );
    println!(
        "# seed={} nodes={} checksum=sha256:{}",
        seed.label,
        seed.quiver.size(),
        seed_checksum(&seed.name, &seed.quiver)
    );
    println!("step\ttargets\tsize-after");
    let mut size = seed.quiver.size();
    for (i, step) in plan.iter().enumerate() {
        size += step.targets.len();
        let targets = step
            .targets
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(",");
        println!("{}\t{targets}\t{size}", i + 1);
    }
    if plan.is_empty() {
        println!("# no operations: the seed already is {}", spec.knot_name());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error[cli]: could not size the worker pool: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match &cli.command {
        Command::Seq(args) => cmd_seq(args).map(|()| true),
        Command::Paths(args) => cmd_paths(args).map(|()| true),
        Command::Raney(args) => cmd_raney(args).map(|()| true),
        Command::Verify(args) => cmd_verify(args),
        Command::Quiver { cmd: QuiverCmd::Show(args) } => cmd_quiver_show(args).map(|()| true),
        Command::Tower { cmd: TowerCmd::Build(args) } => cmd_tower_build(args).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CmdErr::Lib(e)) => {
            eprintln!("error[{}]: {e}", e.stage());
            ExitCode::from(2)
        }
        Err(CmdErr::Cli(msg)) => {
            eprintln!("error[cli]: {msg}");
            ExitCode::from(2)
        }
    }
}
