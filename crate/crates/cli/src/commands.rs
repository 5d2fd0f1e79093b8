//! Command-line grammar and the handlers behind each subcommand.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crossbial::cross::{
    bat_to_hopf_datum, build_cross_product, decompose, hopf_datum_to_bat, split_system,
    trivalent_verdicts, System, VERDICT_AGREE,
};
use crossbial::datum::{
    build_bialgebra, check_hopf_datum, classify, recursion_order, trivalence, HopfDatum,
};
use crossbial::scalar::Rational;
use crossbial::structures::{
    check_axioms, classify_morphism, morphism_report, CheckReport, HopfAlgebraData, StructureKind,
};
use crossbial::twisting::{
    double_biproduct, double_biproduct_preconditions, matched_pair_from_pairing,
    pairing_inverse_report, twist, twist_hopf, validate_cocycle, validate_pairing,
};
use crossbial::zoo::{
    bicharacter_cocycle, bicross_datum, dual_group_algebra, group_algebra, group_double,
    group_tensor_datum, ore_finite, radford, s3_factorization, s4_factorization,
    sweedler_crossed_modules, sweedler_double, sweedler_rho, yd_c3_double, OreParams, PairedDouble,
    RadfordParams, SplitHopf,
};
use crossbial::{Error, Result, Scalar};

use crate::report::Outcome;
use crate::workspace::Workspace;

pub const MAX_DIM_VAR: &str = "CROSSBIAL_MAX_DIM";
pub const DEFAULT_MAX_DIM: usize = 64;

#[derive(Parser, Debug)]
#[command(
    name = "crossbial",
    version,
    about = "Exact verification of Hopf data, cross product bialgebras and cocycle twists"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Add wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List or build the example structures.
    #[command(subcommand)]
    Zoo(ZooCmd),
    /// Check the axioms of a structure or a morphism.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Hopf datum checks, recursion order, classification and assembly.
    #[command(subcommand)]
    Datum(DatumCmd),
    /// Cross products of admissible tuples and their decomposition.
    #[command(subcommand)]
    Cross(CrossCmd),
    /// 2-cocycles and twisted structures.
    #[command(subcommand)]
    Twist(TwistCmd),
    /// Pairings and the matched pairs they induce.
    #[command(subcommand)]
    Pairing(PairingCmd),
    /// The twisted double biproduct of two crossed-module bialgebras.
    #[command(subcommand, name = "double-biproduct")]
    DoubleBiproduct(DoubleBiproductCmd),
}

#[derive(Args, Debug)]
pub struct Input {
    /// Workspace file.
    #[arg(id = "in", long = "in", value_name = "FILE")]
    pub path: PathBuf,
}

#[derive(Args, Debug)]
pub struct Output {
    /// File to write the workspace to.
    #[arg(id = "out", short = 'o', long = "out", value_name = "FILE")]
    pub path: PathBuf,
}

#[derive(Args, Debug)]
pub struct OptOutput {
    /// Write the input workspace together with the new entries to this file.
    #[arg(id = "out", short = 'o', long = "out", value_name = "FILE")]
    pub path: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum ZooCmd {
    /// Names of the available builders.
    List,
    /// Build an example and write it as a workspace.
    #[command(subcommand)]
    Build(ZooBuild),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GroupChoice {
    S3,
    S4,
}

#[derive(Subcommand, Debug)]
pub enum ZooBuild {
    /// Radford's algebra H_{n,q,N,ν} with q = ζ_n^{q-exp}, split over kC_N.
    Radford {
        #[arg(long)]
        n: u32,
        #[arg(long = "q-exp", allow_hyphen_values = true)]
        q_exp: i64,
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long)]
        nu: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Group algebra of the cyclic group C_N.
    Group {
        #[arg(long = "N")]
        big_n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Dual of the group algebra of C_N.
    DualGroup {
        #[arg(long = "N")]
        big_n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Finite Ore-type Hopf algebra from a parameter file {orders, g, g_star}.
    Ore {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Tensor product datum of two cyclic group algebras.
    Tensor {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Matched pair of kC_N and its dual.
    GroupDouble {
        #[arg(long = "N")]
        big_n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Matched pair of Sweedler's algebra and its dual.
    SweedlerDouble {
        #[command(flatten)]
        out: Output,
    },
    /// Pairing of two braided bialgebras over kC_3.
    YdC3Double {
        #[command(flatten)]
        out: Output,
    },
    /// Bicrossed product datum of a group factorization.
    Bicross {
        #[arg(long, value_enum)]
        group: GroupChoice,
        #[command(flatten)]
        out: Output,
    },
    /// Bicharacter cocycle on the group algebra of C_N × C_N.
    Bicharacter {
        #[arg(long = "N")]
        big_n: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Crossed-module bialgebras over kC_2 for the double biproduct.
    SweedlerCrossedModules {
        /// ρ(x⊗x), as an integer or a fraction p/q.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
pub struct StructureArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub structure: Option<String>,
    /// Braiding entry for the compatibility axiom; the flip by default.
    #[arg(long)]
    pub braiding: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    /// Associativity and unit axioms.
    Algebra(StructureArgs),
    /// Coassociativity and counit axioms.
    Coalgebra(StructureArgs),
    /// Algebra and coalgebra axioms plus their compatibility.
    Bialgebra(StructureArgs),
    /// Bialgebra axioms plus the antipode identities.
    Hopf(StructureArgs),
    /// Whether a map is an algebra and a coalgebra morphism.
    Morphism {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        map: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
}

#[derive(Args, Debug)]
pub struct DatumArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub datum: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum DatumCmd {
    /// Every defining identity of a Hopf datum.
    Check(DatumArgs),
    /// Least n with Φ^n∘(Id − P) = 0.
    Order {
        #[command(flatten)]
        args: DatumArgs,
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
    },
    /// Trivalence pattern and family.
    Classify(DatumArgs),
    /// Assemble the cross product bialgebra and add it to the workspace.
    Build {
        #[command(flatten)]
        args: DatumArgs,
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand, Debug)]
pub enum CrossCmd {
    /// Cross product of a tuple, or of the tuple induced by a datum.
    Build {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "datum")]
        tuple: Option<String>,
        #[arg(long)]
        datum: Option<String>,
        #[command(flatten)]
        out: OptOutput,
    },
    /// Split a bialgebra along a projection or idempotent system.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        system: Option<String>,
        #[command(flatten)]
        out: OptOutput,
    },
    /// Compare the three characterizations of trivalence.
    VerifyTrivalent {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        system: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct CocycleArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub cocycle: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum TwistCmd {
    /// The 2-cocycle conditions.
    Validate(CocycleArgs),
    /// Twist the host by the cocycle and re-check the result.
    Apply {
        #[command(flatten)]
        args: CocycleArgs,
        #[command(flatten)]
        out: OptOutput,
    },
}

#[derive(Args, Debug)]
pub struct PairingArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub pairing: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum PairingCmd {
    /// The pairing conditions and, given antipodes, its convolution inverse.
    Check(PairingArgs),
    /// Actions induced by the pairing and the matched-pair relations.
    MatchedPair(PairingArgs),
}

#[derive(Subcommand, Debug)]
pub enum DoubleBiproductCmd {
    /// Build Z = C⊗H⊗B, twist it by ρ̂ and compare with the direct formula.
    Build {
        #[command(flatten)]
        input: Input,
        /// Double biproduct input entry.
        #[arg(long)]
        entry: Option<String>,
        /// Map B⊗C → k to use as ρ instead of the entry's own.
        #[arg(long)]
        rho: Option<String>,
        #[command(flatten)]
        out: OptOutput,
    },
}

/// Whether an error stems from the input rather than from a verified
/// mathematical failure.
pub fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::Configuration(_)
            | Error::Shape { .. }
            | Error::Parameter(_)
            | Error::Unsupported(_)
            | Error::Domain(_)
            | Error::ConductorMismatch(..)
            | Error::InvalidPrimitivity { .. }
    )
}

pub fn max_dim() -> Result<usize> {
    match std::env::var(MAX_DIM_VAR) {
        Err(_) => Ok(DEFAULT_MAX_DIM),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&d| d > 0)
            .ok_or_else(|| {
                Error::Configuration(format!("{MAX_DIM_VAR} = {v:?} is not a positive integer"))
            }),
    }
}

fn cap(dim: usize, what: &str) -> Result<()> {
    let limit = max_dim()?;
    if dim > limit {
        return Err(Error::Configuration(format!(
            "{what} has total dimension {dim}, above {MAX_DIM_VAR} = {limit}"
        )));
    }
    Ok(())
}

fn load(input: &Input) -> Result<Workspace> {
    let ws = Workspace::load(&input.path)?;
    let limit = max_dim()?;
    if let Some(s) = ws.spaces.iter().find(|s| s.dim > limit) {
        return Err(Error::Configuration(format!(
            "space `{}` has dimension {}, above {MAX_DIM_VAR} = {limit}",
            s.name, s.dim
        )));
    }
    Ok(ws)
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Zoo(c) => zoo(c),
        Command::Check(c) => check(c),
        Command::Datum(c) => datum(c),
        Command::Cross(c) => cross(c),
        Command::Twist(c) => twist_cmd(c),
        Command::Pairing(c) => pairing(c),
        Command::DoubleBiproduct(c) => double(c),
    }
}

const BUILDERS: &[(&str, &str)] = &[
    (
        "radford",
        "Radford's Hopf algebra with its projection system and datum",
    ),
    ("group", "group algebra kC_N"),
    ("dual-group", "dual group algebra k^{C_N}"),
    ("ore", "finite Ore-type Hopf algebra with its datum"),
    ("tensor", "tensor product datum of kC_n1 and kC_n2"),
    ("group-double", "matched pair of kC_N and its dual"),
    (
        "sweedler-double",
        "matched pair of Sweedler's algebra and its dual",
    ),
    ("yd-c3-double", "pairing of braided bialgebras over kC_3"),
    (
        "bicross",
        "bicrossed product datum of S3 = C3·C2 or S4 = S3·C4",
    ),
    ("bicharacter", "bicharacter 2-cocycle on k[C_N × C_N]"),
    (
        "sweedler-crossed-modules",
        "input of the double biproduct over kC_2",
    ),
];

fn zoo(c: &ZooCmd) -> Result<Outcome> {
    let b = match c {
        ZooCmd::List => {
            let mut o = Outcome::default();
            let list: serde_json::Map<String, serde_json::Value> = BUILDERS
                .iter()
                .map(|(k, v)| (k.to_string(), (*v).into()))
                .collect();
            o.set("builders", list);
            return Ok(o);
        }
        ZooCmd::Build(b) => b,
    };
    let mut ws = Workspace::new();
    let (kind, out) = match b {
        ZooBuild::Radford {
            n,
            q_exp,
            big_n,
            nu,
            out,
        } => {
            let p = RadfordParams::new(*n, *q_exp, *big_n, *nu);
            p.validate()?;
            cap(p.r() * *big_n as usize, "Radford's algebra")?;
            add_split(&mut ws, &radford(p)?)?;
            ("radford", out)
        }
        ZooBuild::Group { big_n, out } => {
            cap(*big_n, "kC_N")?;
            let h = group_algebra(*big_n)?;
            add_hopf(&mut ws, &h)?;
            ("group", out)
        }
        ZooBuild::DualGroup { big_n, out } => {
            cap(*big_n, "k^{C_N}")?;
            let h = dual_group_algebra(*big_n)?;
            add_hopf(&mut ws, &h)?;
            ("dual-group", out)
        }
        ZooBuild::Ore { spec, out } => {
            let text = std::fs::read_to_string(spec).map_err(|e| {
                Error::Configuration(format!("cannot read {}: {e}", spec.display()))
            })?;
            let p: OreParams = serde_json::from_str(&text).map_err(|e| Error::Parse {
                pointer: String::new(),
                message: e.to_string(),
            })?;
            p.validate()?;
            let split = ore_finite(&p)?;
            cap(split.h.dim(), "the Ore-type algebra")?;
            add_split(&mut ws, &split)?;
            ("ore", out)
        }
        ZooBuild::Tensor { n1, n2, out } => {
            cap(n1 * n2, "kC_n1 ⊗ kC_n2")?;
            add_datum(&mut ws, &group_tensor_datum(*n1, *n2)?)?;
            ("tensor", out)
        }
        ZooBuild::GroupDouble { big_n, out } => {
            cap(big_n * big_n, "the group double")?;
            add_paired(&mut ws, &group_double(*big_n)?)?;
            ("group-double", out)
        }
        ZooBuild::SweedlerDouble { out } => {
            add_paired(&mut ws, &sweedler_double()?)?;
            ("sweedler-double", out)
        }
        ZooBuild::YdC3Double { out } => {
            add_paired(&mut ws, &yd_c3_double()?)?;
            ("yd-c3-double", out)
        }
        ZooBuild::Bicross { group, out } => {
            let f = match group {
                GroupChoice::S3 => s3_factorization()?,
                GroupChoice::S4 => s4_factorization()?,
            };
            cap(f.group.order(), "the bicrossed product")?;
            add_datum(&mut ws, &bicross_datum(&f)?)?;
            ("bicross", out)
        }
        ZooBuild::Bicharacter { big_n, out } => {
            cap((*big_n as usize).pow(2), "k[C_N × C_N]")?;
            let (h, c) = bicharacter_cocycle(*big_n)?;
            add_hopf(&mut ws, &h)?;
            ws.add_cocycle("cocycle", &c)?;
            ws.set_default("cocycles", "cocycle");
            ("bicharacter", out)
        }
        ZooBuild::SweedlerCrossedModules { alpha, out } => {
            let mut input = sweedler_crossed_modules()?;
            if let Some(a) = alpha {
                let a: Rational = a.parse()?;
                input.rho = Some(sweedler_rho(&input, &Scalar::Rat(a))?);
            }
            ws.add_double_biproduct("input", &input)?;
            ws.set_default("double_biproducts", "input");
            ("sweedler-crossed-modules", out)
        }
    };
    ws.save(&out.path)?;
    let mut o = Outcome::default();
    o.set("builder", kind).set("written", display(&out.path));
    for table in [
        "structures",
        "data",
        "systems",
        "cocycles",
        "pairings",
        "double_biproducts",
    ] {
        let names = ws.names(table)?;
        if !names.is_empty() {
            o.set(table, names);
        }
    }
    Ok(o)
}

fn add_hopf(ws: &mut Workspace, h: &HopfAlgebraData) -> Result<()> {
    let name = h.space().name.clone();
    ws.add_structure(&name, &h.bialgebra, Some(&h.antipode))?;
    ws.set_default("structures", &name);
    Ok(())
}

fn add_datum(ws: &mut Workspace, d: &HopfDatum) -> Result<()> {
    ws.add_datum("datum", d)?;
    ws.set_default("data", "datum");
    Ok(())
}

fn add_split(ws: &mut Workspace, s: &SplitHopf) -> Result<()> {
    add_hopf(ws, &s.h)?;
    ws.add_system("system", &s.system)?;
    ws.set_default("systems", "system");
    add_datum(ws, &s.datum)
}

fn add_paired(ws: &mut Workspace, d: &PairedDouble) -> Result<()> {
    ws.add_pairing("pairing", &d.pairing, &d.braiding)?;
    ws.set_default("pairings", "pairing");
    add_datum(ws, &d.datum)
}

fn check(c: &CheckCmd) -> Result<Outcome> {
    let (args, kind) = match c {
        CheckCmd::Algebra(a) => (a, StructureKind::Algebra),
        CheckCmd::Coalgebra(a) => (a, StructureKind::Coalgebra),
        CheckCmd::Bialgebra(a) => (a, StructureKind::Bialgebra),
        CheckCmd::Hopf(a) => (a, StructureKind::Hopf),
        CheckCmd::Morphism {
            input,
            map,
            from,
            to,
        } => {
            let ws = load(input)?;
            let f = ws.map(map)?;
            let src = ws.bialgebra(from)?;
            let dst = ws.bialgebra(to)?;
            let mut o = Outcome::default();
            o.check(
                format!("morphism `{map}`: `{from}` → `{to}`"),
                morphism_report(&f, &src, &dst)?,
            );
            o.set("class", classify_morphism(&f, &src, &dst)?);
            return Ok(o);
        }
    };
    let ws = load(&args.input)?;
    let name = ws.pick("structures", args.structure.as_deref())?;
    let (s, antipode) = ws.structure(&name)?;
    let bp = ws.braiding_or_flip(args.braiding.as_deref())?;
    let antipode =
        match kind {
            StructureKind::Hopf => Some(antipode.ok_or_else(|| {
                Error::Configuration(format!("structure `{name}` has no antipode"))
            })?),
            _ => None,
        };
    let label = serde_json::to_value(kind).expect("kind serializes");
    let label = label.as_str().unwrap_or("structure");
    let mut o = Outcome::default();
    o.check(
        format!("{label} axioms of `{name}`"),
        check_axioms(&s, antipode.as_ref(), kind, &bp)?,
    );
    o.set("structure", &name).set("dim", s.dim());
    Ok(o)
}

fn load_datum(args: &DatumArgs) -> Result<(Workspace, String, HopfDatum)> {
    let ws = load(&args.input)?;
    let name = ws.pick("data", args.datum.as_deref())?;
    let d = ws.datum(&name)?;
    cap(d.b1.dim() * d.b2.dim(), "the datum")?;
    Ok((ws, name, d))
}

fn datum_checks(o: &mut Outcome, name: &str, d: &HopfDatum) -> Result<bool> {
    let r = check_hopf_datum(d)?;
    let ok = r.passed();
    o.set("datum", name).set("dims", [d.b1.dim(), d.b2.dim()]);
    o.check(format!("Hopf datum axioms of `{name}`"), r);
    Ok(ok)
}

fn datum(c: &DatumCmd) -> Result<Outcome> {
    let mut o = Outcome::default();
    match c {
        DatumCmd::Check(args) => {
            let (_, name, d) = load_datum(args)?;
            if datum_checks(&mut o, &name, &d)? {
                o.set("pattern", trivalence(&d)?.pattern.code());
            }
        }
        DatumCmd::Order { args, max_n } => {
            let (_, name, d) = load_datum(args)?;
            if datum_checks(&mut o, &name, &d)? {
                let r = recursion_order(&d, *max_n)?;
                o.set("order", r.order());
                o.set("max_n", max_n);
                o.require(r.order().is_some() && r.stabilizes != Some(false));
                o.set("recursion", r);
            }
        }
        DatumCmd::Classify(args) => {
            let (_, name, d) = load_datum(args)?;
            if datum_checks(&mut o, &name, &d)? {
                let t = trivalence(&d)?;
                o.set("trivalent", t.trivalent);
                o.set("classification", classify(&d)?);
            }
        }
        DatumCmd::Build { args, name, out } => {
            let (mut ws, dname, d) = load_datum(args)?;
            let b = build_bialgebra(&d)?;
            let sname = name.clone().unwrap_or_else(|| format!("{dname}.cross"));
            ws.add_structure(&sname, &b, None)?;
            ws.save(&out.path)?;
            o.set("datum", &dname)
                .set("structure", &sname)
                .set("dim", b.dim())
                .set("written", display(&out.path));
        }
    }
    Ok(o)
}

fn cross(c: &CrossCmd) -> Result<Outcome> {
    let mut o = Outcome::default();
    match c {
        CrossCmd::Build {
            input,
            tuple,
            datum,
            out,
        } => {
            let mut ws = load(input)?;
            let (name, t) = match datum {
                Some(dn) => (dn.clone(), hopf_datum_to_bat(&ws.datum(dn)?)?),
                None => {
                    let n = ws.pick("tuples", tuple.as_deref())?;
                    let t = ws.tuple(&n)?;
                    (n, t)
                }
            };
            cap(t.b1.dim() * t.b2.dim(), "the cross product")?;
            let b = build_cross_product(&t)?;
            let d = bat_to_hopf_datum(&t)?;
            o.set("source", &name)
                .set("dim", b.dim())
                .set("pattern", trivalence(&d)?.pattern.code());
            if let Some(path) = &out.path {
                let sname = format!("{name}.cross");
                ws.add_structure(&sname, &b, None)?;
                if datum.is_none() {
                    ws.add_datum(&format!("{name}.datum"), &d)?;
                }
                ws.save(path)?;
                o.set("written", display(path));
            }
        }
        CrossCmd::Decompose { input, system, out } => {
            let mut ws = load(input)?;
            let name = ws.pick("systems", system.as_deref())?;
            let sys = ws.system(&name)?;
            cap(system_dim(&sys), "the split bialgebra")?;
            let dec = decompose(&sys)?;
            let d = bat_to_hopf_datum(&dec.bat)?;
            o.set("system", &name)
                .set("dims", [dec.bat.b1.dim(), dec.bat.b2.dim()])
                .set("pattern", trivalence(&d)?.pattern.code());
            if let Some(path) = &out.path {
                ws.add_tuple(&format!("{name}.tuple"), &dec.bat)?;
                ws.add_datum(&format!("{name}.datum"), &d)?;
                ws.add_map(&format!("{name}.iso"), &dec.iso)?;
                ws.save(path)?;
                o.set("written", display(path));
            }
        }
        CrossCmd::VerifyTrivalent { input, system } => {
            let ws = load(input)?;
            let name = ws.pick("systems", system.as_deref())?;
            let sys = ws.system(&name)?;
            cap(system_dim(&sys), "the split bialgebra")?;
            let ps = match sys {
                System::Projection(p) => p,
                System::Idempotent(i) => split_system(&i)?,
            };
            let v = trivalent_verdicts(&ps)?;
            let mut r = CheckReport::new();
            r.push_flag(VERDICT_AGREE, v.agree());
            o.check(format!("trivalence characterizations of `{name}`"), r);
            o.set("system", &name).set("verdicts", v);
        }
    }
    Ok(o)
}

fn system_dim(s: &System) -> usize {
    match s {
        System::Projection(p) => p.a.dim(),
        System::Idempotent(i) => i.a.dim(),
    }
}

fn twist_cmd(c: &TwistCmd) -> Result<Outcome> {
    let args = match c {
        TwistCmd::Validate(a) => a,
        TwistCmd::Apply { args, .. } => args,
    };
    let mut ws = load(&args.input)?;
    let name = ws.pick("cocycles", args.cocycle.as_deref())?;
    let cocycle = ws.cocycle(&name)?;
    cap(cocycle.host.dim(), "the cocycle host")?;
    let mut o = Outcome::default();
    let report = validate_cocycle(&cocycle)?;
    let valid = report.passed();
    o.set("cocycle", &name);
    o.check(format!("2-cocycle conditions of `{name}`"), report);
    let TwistCmd::Apply { out, .. } = c else {
        return Ok(o);
    };
    if !valid {
        return Ok(o);
    }
    let host_name = &ws.cocycles[&name].host;
    let (twisted, antipode) = match ws.structure(host_name)?.1 {
        Some(s) => {
            let h = HopfAlgebraData::new(cocycle.host.clone(), s)?;
            let t = twist_hopf(&h, &cocycle)?;
            (t.bialgebra, Some(t.antipode))
        }
        None => (twist(&cocycle.host, &cocycle)?, None),
    };
    let kind = if antipode.is_some() {
        StructureKind::Hopf
    } else {
        StructureKind::Bialgebra
    };
    o.check(
        "axioms of the twisted structure",
        check_axioms(&twisted, antipode.as_ref(), kind, &cocycle.braiding)?,
    );
    o.set("multiplication_changed", twisted.m != cocycle.host.m);
    if let Some(path) = &out.path {
        let sname = format!("{name}.twisted");
        ws.add_structure(&sname, &twisted, antipode.as_ref())?;
        ws.save(path)?;
        o.set("written", display(path));
    }
    Ok(o)
}

fn pairing(c: &PairingCmd) -> Result<Outcome> {
    let args = match c {
        PairingCmd::Check(a) | PairingCmd::MatchedPair(a) => a,
    };
    let ws = load(&args.input)?;
    let name = ws.pick("pairings", args.pairing.as_deref())?;
    let (p, bp) = ws.pairing(&name)?;
    cap(p.h.dim() * p.a.dim(), "the pairing")?;
    let entry = &ws.pairings[&name];
    let mut o = Outcome::default();
    o.set("pairing", &name);
    match c {
        PairingCmd::Check(_) => {
            o.check(
                format!("pairing conditions of `{name}`"),
                validate_pairing(&p, &bp)?,
            );
            let s_h = ws.structure(&entry.h)?.1;
            let s_a = ws.structure(&entry.a)?.1;
            if let (Some(s_h), Some(s_a)) = (s_h, s_a) {
                o.check(
                    "convolution inverse of the pairing",
                    pairing_inverse_report(&p, &s_h, &s_a, &bp)?,
                );
            }
        }
        PairingCmd::MatchedPair(_) => {
            let m = matched_pair_from_pairing(&p, &bp)?;
            o.set("is_matched_pair", m.is_matched_pair)
                .set("braiding_involutive", m.braiding_involutive)
                .set("agree", m.is_matched_pair == m.braiding_involutive);
            o.require(m.is_matched_pair);
            o.check("matched pair relations", m.report);
        }
    }
    Ok(o)
}

fn double(c: &DoubleBiproductCmd) -> Result<Outcome> {
    let DoubleBiproductCmd::Build {
        input,
        entry,
        rho,
        out,
    } = c;
    let mut ws = load(input)?;
    let name = ws.pick("double_biproducts", entry.as_deref())?;
    let mut inp = ws.double_biproduct(&name)?;
    if let Some(r) = rho {
        inp.rho = Some(ws.map(r)?);
    }
    if inp.rho.is_none() {
        return Err(Error::Configuration(format!(
            "`{name}` has no ρ: B⊗C → k; pass --rho"
        )));
    }
    cap(inp.c.dim() * inp.h.dim() * inp.b.dim(), "Z = C⊗H⊗B")?;
    let mut o = Outcome::default();
    o.set("entry", &name);
    let pre = double_biproduct_preconditions(&inp)?;
    let ok = pre.passed();
    o.check("preconditions", pre);
    if !ok {
        return Ok(o);
    }
    let db = double_biproduct(&inp)?;
    let agree = db.z_twisted.m == db.direct_multiplication;
    o.set("dim", db.z.dim())
        .set("twisted_equals_direct", agree)
        .set("multiplication_changed", db.z_twisted.m != db.z.m);
    o.require(agree);
    o.check("double biproduct", db.report.clone());
    if let Some(path) = &out.path {
        ws.add_structure(&format!("{name}.Z"), &db.z, None)?;
        ws.add_structure(&format!("{name}.Z-twisted"), &db.z_twisted, None)?;
        ws.add_cocycle(&format!("{name}.rho-hat"), &db.rho_hat)?;
        ws.save(path)?;
        o.set("written", display(path));
    }
    Ok(o)
}
