//! Command-line interface.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::coxeter::{parabolic_classes, CoxeterDatum};
use crate::error::{Error, Result};
use crate::gha::{assemble_presentation, class_params, quadratic_param};
use crate::hecke::HeckeAlgebra;
use crate::repdata::findim::parse_rational;
use crate::repdata::{calibrate, parabolic_factors, FinDimTable, LowestWeightLabel, RepContext};
use crate::simplecount::{analyze, count_supports, kz_node_params, AlgebraTable, Limits, DEFAULT_DIM_BOUND};
use crate::zelt::z_pair;

#[derive(Parser, Debug)]
#[command(name = "hcseries", version, about = "Harish-Chandra series computations for rational Cherednik algebras")]
pub struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coxeter group data
    Cox {
        #[command(subcommand)]
        cmd: CoxCmd,
    },
    /// Hecke algebra arithmetic with generic parameters
    Hecke {
        #[command(subcommand)]
        cmd: HeckeCmd,
    },
    /// z-elements of a corank-one pair
    Zelt(PairArgs),
    /// Normalized quadratic parameter of z_top on a lowest weight
    Qparam(LabelArgs),
    /// Generalized Hecke algebra presentation
    Gha(LabelArgs),
    /// Simple modules and radical of H(W) or of a generalized Hecke algebra
    CountSimples(CountArgs),
    /// Simple modules of O_c by support
    CountSupports(SupportArgs),
    /// Check the content convention against linear characters
    Calibrate {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CoxCmd {
    Info {
        #[arg(long = "type")]
        ty: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum HeckeCmd {
    Mul {
        #[arg(long = "type")]
        ty: String,
        /// Word in the generators, e.g. "s1 s2"
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long = "type")]
    pub ty: String,
    /// Class label (e.g. D4, A3#2) or generator list (e.g. "s2 s3")
    #[arg(long)]
    pub parabolic: String,
    /// Specialize at KZ parameters of these c values
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
}

#[derive(Args, Debug)]
pub struct LabelArgs {
    #[arg(long = "type")]
    pub ty: String,
    #[arg(long)]
    pub parabolic: String,
    /// One value per reflection class, comma separated; a single value is used for all classes
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
    #[arg(long, default_value = "triv")]
    pub lambda: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Bounds {
    #[arg(long, default_value_t = DEFAULT_DIM_BOUND)]
    pub dim_bound: usize,
    /// Allow ambient Hecke algebras above the standard size (F4)
    #[arg(long)]
    pub extended: bool,
}

impl Bounds {
    fn limits(&self) -> Limits {
        Limits { dim_bound: self.dim_bound, extended: self.extended }
    }
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long = "type")]
    pub ty: String,
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
    /// Count for the generalized Hecke algebra of (parabolic, lambda) instead of H(W)
    #[arg(long)]
    pub parabolic: Option<String>,
    #[arg(long, default_value = "triv")]
    pub lambda: String,
    #[command(flatten)]
    pub bounds: Bounds,
}

#[derive(Args, Debug)]
pub struct SupportArgs {
    #[arg(long = "type")]
    pub ty: String,
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
    /// Finite-dimensional lowest weight table (default: $HC_DATA_DIR/findim.tsv)
    #[arg(long)]
    pub findim: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also list the presentation used for every lowest weight
    #[arg(long)]
    pub verbose: bool,
    #[command(flatten)]
    pub bounds: Bounds,
}

/// Data directory: $HC_DATA_DIR, else ./data, else the source tree copy.
pub fn data_dir() -> PathBuf {
    if let Some(d) = std::env::var_os("HC_DATA_DIR") {
        return PathBuf::from(d);
    }
    let local = PathBuf::from("data");
    if local.join("findim.tsv").is_file() {
        return local;
    }
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn rep_context(dir: &Path) -> Result<RepContext> {
    let plugins = dir.join("plugins");
    if plugins.is_dir() {
        RepContext::load_dir(&plugins)
    } else {
        Ok(RepContext::new())
    }
}

fn datum(ty: &str) -> Result<Arc<CoxeterDatum>> {
    Ok(Arc::new(CoxeterDatum::build(ty)?))
}

/// c values, one per reflection class; a single value is broadcast.
pub fn parse_params(datum: &CoxeterDatum, s: &str) -> Result<Vec<BigRational>> {
    let vals: Vec<BigRational> = s.split(',').map(|x| parse_rational(x.trim())).collect::<Result<_>>()?;
    let n = datum.num_classes();
    match vals.len() {
        1 => Ok(vec![vals[0].clone(); n]),
        k if k == n => Ok(vals),
        k => Err(Error::Invalid(format!("{} has {n} reflection classes but {k} values of c were given", datum.name))),
    }
}

/// A parabolic by class label ("D4", "A3#2") or by generators ("s2 s3 s4").
pub fn resolve_parabolic(datum: &Arc<CoxeterDatum>, spec: &str) -> Result<Vec<usize>> {
    let spec = spec.trim();
    let classes = parabolic_classes(datum)?;
    if let Some(c) = classes.iter().find(|c| c.label == spec) {
        return Ok(c.subset.clone());
    }
    let prefixed: Vec<_> = classes.iter().filter(|c| c.label.split('#').next() == Some(spec)).collect();
    match prefixed.len() {
        1 => return Ok(prefixed[0].subset.clone()),
        0 => {}
        _ => {
            let names: Vec<&str> = prefixed.iter().map(|c| c.label.as_str()).collect();
            return Err(Error::Invalid(format!("{spec} is ambiguous in {}: one of {}", datum.name, names.join(", "))));
        }
    }
    let words = spec.replace(',', " ");
    match datum.parse_word(&words) {
        Ok(mut j) => {
            j.sort_unstable();
            j.dedup();
            Ok(j)
        }
        Err(_) => {
            let names: Vec<&str> = classes.iter().map(|c| c.label.as_str()).collect();
            Err(Error::Invalid(format!("unknown parabolic `{spec}` of {}; classes are {}", datum.name, names.join(", "))))
        }
    }
}

fn labels_for(datum: &Arc<CoxeterDatum>, j: &[usize], lambda: &str) -> Result<Vec<crate::repdata::FactorLabel>> {
    let n = parabolic_factors(datum, j)?.len();
    LowestWeightLabel::parse(lambda)?.resolve(n)
}

/// Provenance footer: crate version and the calibration hash.
pub fn footer() -> Result<String> {
    let cal = calibrate(3)?;
    Ok(format!("# hcseries {} calibration {}", env!("CARGO_PKG_VERSION"), cal.hash()))
}

/// Runs a parsed command and returns its output, footer included.
pub fn run(cli: &Cli) -> Result<String> {
    let body = match &cli.command {
        Command::Cox { cmd: CoxCmd::Info { ty } } => cox_info(ty)?,
        Command::Hecke { cmd: HeckeCmd::Mul { ty, left, right } } => {
            let d = datum(ty)?;
            let h = HeckeAlgebra::generic(&d)?;
            let a = h.t_word(&d.parse_word(left)?);
            let b = h.t_word(&d.parse_word(right)?);
            format!("{}\n", a.multiply(&b)?)
        }
        Command::Zelt(a) => zelt(a)?,
        Command::Qparam(a) => {
            let d = datum(&a.ty)?;
            let j = resolve_parabolic(&d, &a.parabolic)?;
            let c = parse_params(&d, &a.c)?;
            let labels = labels_for(&d, &j, &a.lambda)?;
            let ctx = rep_context(&data_dir())?;
            let rel = quadratic_param(&d, &j, &c, &labels, &ctx)?;
            format!(
                "{}\nrelation: T^2 = ({})·T + ({})\nstrategy: {}\nscalar source: {:?}\n",
                rel.param, rel.linear, rel.constant, rel.strategy, rel.source
            )
        }
        Command::Gha(a) => {
            let d = datum(&a.ty)?;
            let j = resolve_parabolic(&d, &a.parabolic)?;
            let c = parse_params(&d, &a.c)?;
            let labels = labels_for(&d, &j, &a.lambda)?;
            let ctx = rep_context(&data_dir())?;
            let p = assemble_presentation(&d, &j, &c, &labels, &ctx)?;
            let mut out = format!("{}\ndimension: {}\n|N(W_J, λ)/W_J|: {}\n", p.text(), p.dimension(), p.normalizer_order);
            for r in &p.rays {
                out.push_str(&format!("  {} : {} [{}]\n", r.overgroup, r.relation.param, r.relation.strategy));
            }
            out
        }
        Command::CountSimples(a) => {
            let d = datum(&a.ty)?;
            let c = parse_params(&d, &a.c)?;
            let limits = a.bounds.limits();
            let (name, alg) = match &a.parabolic {
                Some(spec) => {
                    let j = resolve_parabolic(&d, spec)?;
                    let labels = labels_for(&d, &j, &a.lambda)?;
                    let ctx = rep_context(&data_dir())?;
                    let p = assemble_presentation(&d, &j, &c, &labels, &ctx)?;
                    (p.text(), AlgebraTable::from_presentation(&p, &limits)?)
                }
                None => {
                    (format!("H({})", d.name), AlgebraTable::hecke(&d, &kz_node_params(&d, &c)?, &limits)?)
                }
            };
            let r = analyze(&alg)?;
            format!("{name}\ndimension: {}\nradical dimension: {}\nsimple modules: {}\n", r.dim, r.radical_dim, r.simples)
        }
        Command::CountSupports(a) => {
            let d = datum(&a.ty)?;
            let c = parse_params(&d, &a.c)?;
            let dir = data_dir();
            let path = a.findim.clone().unwrap_or_else(|| dir.join("findim.tsv"));
            let fd = FinDimTable::load(&path)?;
            let ctx = rep_context(&dir)?;
            let t = count_supports(&d, &c, &fd, &ctx, &a.bounds.limits())?;
            match a.format {
                Format::Csv => t.csv()?,
                Format::Text => {
                    let mut out = t.text();
                    if a.verbose {
                        for (class, label, text) in &t.presentations {
                            out.push_str(&format!("  {class} {label}: {text}\n"));
                        }
                    }
                    out
                }
            }
        }
        Command::Calibrate { max_n } => {
            let cal = calibrate(*max_n)?;
            let mut out = format!("orientation: {:?}\n", cal.orientation);
            for c in &cal.checks {
                out.push_str(&format!("  {c}\n"));
            }
            out.push_str(&format!("hash: {}\n", cal.hash()));
            out
        }
    };
    Ok(format!("{body}{}\n", footer()?))
}

fn cox_info(ty: &str) -> Result<String> {
    let d = datum(ty)?;
    let mut out = format!("{}\nrank: {}\norder: {}\nreflections: {}\n", d.name, d.rank(), d.order(), d.num_roots() / 2);
    out.push_str(&format!("generators: {}\n", d.gen_names.join(" ")));
    let classes: Vec<String> = (0..d.num_classes())
        .map(|k| {
            let nodes: Vec<&str> = (0..d.rank()).filter(|&s| d.node_class[s] == k).map(|s| d.gen_names[s].as_str()).collect();
            format!("{} ({})", d.class_names[k], nodes.join(" "))
        })
        .collect();
    out.push_str(&format!("reflection classes: {}\n", classes.join(", ")));
    out.push_str("coxeter matrix:\n");
    for row in &d.coxeter_matrix {
        let cells: Vec<String> = row.iter().map(|m| format!("{m:>2}")).collect();
        out.push_str(&format!("  {}\n", cells.join(" ")));
    }
    out.push_str(&format!("irreducible characters: {}\n", crate::simplecount::irr_count(&d)));
    let pcs = parabolic_classes(&d)?;
    out.push_str(&format!("parabolic classes: {}\n", pcs.len()));
    for p in &pcs {
        let gens: Vec<&str> = p.subset.iter().map(|&s| d.gen_names[s].as_str()).collect();
        out.push_str(&format!("  {:<10} {{{}}}\n", p.label, gens.join(" ")));
    }
    Ok(out)
}

fn zelt(a: &PairArgs) -> Result<String> {
    let d = datum(&a.ty)?;
    let j = resolve_parabolic(&d, &a.parabolic)?;
    let mut out = String::new();
    match &a.c {
        None => {
            let h = HeckeAlgebra::generic(&d)?;
            let z = z_pair(&h, &j)?;
            out.push_str(&format!("l(x) by class: {:?}\nsigma: {:?}\nz_1 = {}\nz_top = {}\n", z.l_vector, z.sigma, z.z_1, z.z_top));
        }
        Some(c) => {
            let c = parse_params(&d, c)?;
            let cl: Vec<_> = class_params(&d, &c)?.into_iter().map(|x| x.1).collect();
            let h = HeckeAlgebra::specialized(&d, &cl)?;
            let z = z_pair(&h, &j)?;
            out.push_str(&format!("l(x) by class: {:?}\nsigma: {:?}\nz_1 = {}\nz_top = {}\n", z.l_vector, z.sigma, z.z_1, z.z_top));
        }
    }
    Ok(out)
}

/// Process exit code for an error: usage 2, data 3, resource 4, internal 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invalid(_) | Error::UnknownType(_) => 2,
        Error::Data(_) | Error::Parse { .. } | Error::Io(_) | Error::NoStrategy(_) => 3,
        Error::Resource(_) => 4,
        Error::Invariant(_) => 1,
    }
}
