use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use fibercover::catalog::{self, CatalogItem};
use fibercover::fiber::{self, tensor_components};
use fibercover::growth::{growth_table, G1Family};
use fibercover::nielsen::{self, Mode, NielsenClassSpec, NielsenElement};
use fibercover::{limits, Cover, Error, ErrorKind, PairedCover};

const EXIT_VALIDATION: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_BAD_INPUT: u8 = 4;

const CAP_VARS: [(&str, fn(u64)); 4] = [
    ("FIBERCOVER_ORDER_CAP", limits::set_order_cap),
    ("FIBERCOVER_ENUMERATION_CAP", limits::set_enumeration_cap),
    ("FIBERCOVER_NORMALIZER_DEGREE", limits::set_normalizer_degree),
    ("FIBERCOVER_ELEMENT_LIST_CAP", limits::set_element_list_cap),
];

/// Branched covers of the line given by branch cycles: genus, fiber
/// products, Nielsen classes and screening.
///
/// Inputs named INPUT are JSON files, or catalog keys when no file of
/// that name exists. Caps can be raised through FIBERCOVER_ORDER_CAP,
/// FIBERCOVER_ENUMERATION_CAP, FIBERCOVER_NORMALIZER_DEGREE and
/// FIBERCOVER_ELEMENT_LIST_CAP.
#[derive(Parser, Debug)]
#[command(name = "fibercover", version)]
struct Cli {
    /// Emit a JSON report with command echo, input digest and notes.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check product-one and transitivity; exit 2 when invalid.
    Validate { input: String },
    /// Genus of the cover.
    Genus { input: String },
    /// Genus of the Galois closure.
    GaloisGenus { input: String },
    /// Orbifold characteristic as an exact rational.
    Ochar { input: String },
    /// Components of the fiber product of a paired cover.
    Fiber {
        input: String,
        /// Also write the full JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    #[command(subcommand)]
    Nielsen(NielsenCmd),
    /// Screening flags for composing prW with g1.
    Screen {
        prw: String,
        g1: String,
        #[arg(long)]
        joint: Option<String>,
    },
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Genus of W x g1 for g1 in a family of growing degree.
    Growth {
        #[arg(long)]
        pair: String,
        #[arg(long = "g1-family", default_value = "dihedral")]
        g1_family: String,
        #[arg(long = "max-degree", default_value_t = 6)]
        max_degree: usize,
        /// Restrict to one component, numbered from 1.
        #[arg(long)]
        component: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum NielsenCmd {
    /// Count reduced representatives.
    Enum {
        input: String,
        #[arg(long)]
        mode: Option<Mode>,
        /// Print every representative.
        #[arg(long)]
        list: bool,
    },
    /// Braid orbit lengths on the reduced class.
    BraidOrbits {
        input: String,
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Merge entries i and i+1 of a tuple such as "(1 2), (1 2)".
    Coalesce {
        element: String,
        /// 1-based position of the first merged entry.
        #[arg(long)]
        at: usize,
        /// Degree; defaults to the largest letter.
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List,
    Get { key: String },
}

struct Outcome {
    text: String,
    result: Value,
    notes: Vec<String>,
    inputs: Vec<u8>,
    exit: u8,
}

impl Outcome {
    fn new(text: String, result: Value, inputs: Vec<u8>) -> Self {
        Outcome {
            text,
            result,
            notes: Vec::new(),
            inputs,
            exit: 0,
        }
    }
}

fn apply_env_caps(notes: &mut Vec<String>) -> Result<()> {
    for (var, set) in CAP_VARS {
        if let Ok(v) = std::env::var(var) {
            let n: u64 = v
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("{var} must be a non-negative integer, got {v:?}")))?;
            set(n);
            notes.push(format!("{var}={n}"));
        }
    }
    Ok(())
}

/// Raw bytes of an input argument and whether it came from the catalog.
fn load(arg: &str) -> Result<(Vec<u8>, Option<CatalogItem>)> {
    let path = Path::new(arg);
    if path.is_file() {
        let bytes = std::fs::read(path).with_context(|| format!("reading {arg}"))?;
        Ok((bytes, None))
    } else {
        let entry = catalog::get(arg)?;
        Ok((arg.as_bytes().to_vec(), Some(entry.item)))
    }
}

fn load_cover(arg: &str) -> Result<(Cover, Vec<u8>)> {
    let (bytes, item) = load(arg)?;
    let cover = match item {
        Some(CatalogItem::Cover(c)) => c,
        Some(CatalogItem::Pair(p)) => p.sigma().clone(),
        Some(_) => return Err(Error::Input(format!("{arg} is not a cover")).into()),
        None => {
            let s = String::from_utf8(bytes.clone()).map_err(|e| Error::Input(e.to_string()))?;
            match Cover::from_json_str(&s) {
                Ok(c) => c,
                Err(e) => PairedCover::from_json_str(&s)
                    .map(|p| p.sigma().clone())
                    .map_err(|_| e)?,
            }
        }
    };
    Ok((cover, bytes))
}

fn load_pair(arg: &str) -> Result<(PairedCover, Vec<u8>)> {
    let (bytes, item) = load(arg)?;
    let pair = match item {
        Some(CatalogItem::Pair(p)) => p,
        Some(_) => return Err(Error::Input(format!("{arg} is not a paired cover")).into()),
        None => PairedCover::from_json_str(std::str::from_utf8(&bytes).map_err(|e| Error::Input(e.to_string()))?)?,
    };
    Ok((pair, bytes))
}

fn load_spec(arg: &str) -> Result<(NielsenClassSpec, Vec<u8>)> {
    let (bytes, item) = load(arg)?;
    let spec = match item {
        Some(CatalogItem::Nielsen(s)) => s,
        Some(_) => return Err(Error::Input(format!("{arg} is not a Nielsen class spec")).into()),
        None => NielsenClassSpec::from_json_str(std::str::from_utf8(&bytes).map_err(|e| Error::Input(e.to_string()))?)?,
    };
    Ok((spec, bytes))
}

fn infer_degree(text: &str) -> usize {
    text.split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .unwrap_or(1)
}

fn run(cmd: &Command) -> Result<Outcome> {
    Ok(match cmd {
        Command::Validate { input } => {
            let (c, bytes) = load_cover(input)?;
            let r = c.validate();
            let ok = r.is_valid();
            let text = format!(
                "degree {}\nproduct-one {}\ntransitive {}\nidentity entries {}\ncycle types {}\nvalid {}",
                r.degree,
                r.product_one,
                r.transitive,
                r.identity_entries,
                r.cycle_types.join(" "),
                ok
            );
            let mut o = Outcome::new(text, serde_json::to_value(&r)?, bytes);
            if !ok {
                o.exit = EXIT_VALIDATION;
            }
            o
        }
        Command::Genus { input } => {
            let (c, bytes) = load_cover(input)?;
            let g = c.genus()?;
            let mut o = Outcome::new(g.to_string(), json!({"genus": g, "index_sum": c.index_sum()}), bytes);
            o.notes.push(format!("index sum {}", c.index_sum()));
            o
        }
        Command::GaloisGenus { input } => {
            let (c, bytes) = load_cover(input)?;
            let g = c.galois_closure_genus()?;
            let order = c.group()?.order();
            Outcome::new(g.to_string(), json!({"galois_genus": g.to_string(), "group_order": order.to_string()}), bytes)
        }
        Command::Ochar { input } => {
            let (c, bytes) = load_cover(input)?;
            let q = c.orbifold_char()?.to_string();
            Outcome::new(q.clone(), json!({"ochar": q}), bytes)
        }
        Command::Fiber { input, report } => {
            let (pc, bytes) = load_pair(input)?;
            let r = fiber::fiber_report(&pc)?;
            let mut text = format!("m {} n {} group order {}\n", r.m, r.n, r.group_order);
            for (idx, c) in r.components.iter().enumerate() {
                text.push_str(&format!(
                    "component {}: deg_z {} k {} l {} genus {} (method I) {} (method II) index {} J {:?} I {:?}\n",
                    idx + 1,
                    c.deg_z,
                    c.k,
                    c.l,
                    c.genus_m1,
                    c.genus_m2,
                    c.subgroup_index,
                    c.j,
                    c.i
                ));
            }
            let value = serde_json::to_value(&r)?;
            let mut o = Outcome::new(text.trim_end().to_string(), value.clone(), bytes);
            if let Some(path) = report {
                std::fs::write(path, serde_json::to_string_pretty(&value)? + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
                o.notes.push(format!("report written to {}", path.display()));
            }
            o
        }
        Command::Nielsen(NielsenCmd::Enum { input, mode, list }) => {
            let (spec, bytes) = load_spec(input)?;
            let mode = mode.unwrap_or(spec.mode());
            let e = nielsen::enumerate_in_mode(&spec, mode)?;
            let mut text = e.elements.len().to_string();
            if *list {
                for el in &e.elements {
                    text.push('\n');
                    text.push_str(&el.to_string());
                }
            }
            let mut o = Outcome::new(
                text,
                json!({
                    "count": e.elements.len(),
                    "raw_count": e.raw_count,
                    "mode": e.mode.to_string(),
                    "equivalence": e.equivalence,
                    "equivalence_order": e.equivalence_order.to_string(),
                    "elements": e.elements.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                }),
                bytes,
            );
            o.notes.push(format!("mode {} via {}", e.mode, e.equivalence));
            o
        }
        Command::Nielsen(NielsenCmd::BraidOrbits { input, mode }) => {
            let (spec, bytes) = load_spec(input)?;
            let spec = match mode {
                Some(m) => spec.with_mode(*m),
                None => spec,
            };
            let b = nielsen::braid_orbits(&spec)?;
            let lengths = b.lengths();
            let text = lengths.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
            let mut o = Outcome::new(text, json!({"orbit_lengths": lengths, "mode": spec.mode().to_string()}), bytes);
            o.notes.push(format!("mode {}", spec.mode()));
            o
        }
        Command::Nielsen(NielsenCmd::Coalesce { element, at, degree }) => {
            let d = degree.unwrap_or_else(|| infer_degree(element));
            let e = NielsenElement::parse(element, d)?;
            let c = nielsen::coalesce(&e, *at)?;
            let text = format!("{}\nrestricted {}", c.element, c.restricted);
            Outcome::new(
                text,
                json!({
                    "element": c.element.to_string(),
                    "restricted": c.restricted,
                    "dropped_identity": c.dropped_identity,
                }),
                element.as_bytes().to_vec(),
            )
        }
        Command::Screen { prw, g1, joint } => {
            let (p, mut bytes) = load_cover(prw)?;
            let (g, b2) = load_cover(g1)?;
            bytes.extend(b2);
            let j = match joint {
                Some(a) => {
                    let (pc, b3) = load_pair(a)?;
                    bytes.extend(b3);
                    Some(pc)
                }
                None => None,
            };
            let r = fiber::screen_g1(&p, &g, j.as_ref())?;
            let value = serde_json::to_value(&r)?;
            Outcome::new(serde_json::to_string_pretty(&value)?, value, bytes)
        }
        Command::Catalog(CatalogCmd::List) => {
            let keys = catalog::list();
            let width = keys.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            let text = keys
                .iter()
                .map(|(k, d)| format!("{k:width$}  {d}"))
                .collect::<Vec<_>>()
                .join("\n");
            let value = Value::Array(keys.iter().map(|(k, d)| json!({"key": k, "description": d})).collect());
            Outcome::new(text, value, Vec::new())
        }
        Command::Catalog(CatalogCmd::Get { key }) => {
            let entry = catalog::get(key)?;
            let value = entry.to_json();
            let data = serde_json::to_string_pretty(&value["data"])?;
            Outcome::new(data, value, key.as_bytes().to_vec())
        }
        Command::Growth {
            pair,
            g1_family,
            max_degree,
            component,
        } => {
            let (pc, bytes) = load_pair(pair)?;
            let family: G1Family = g1_family.parse()?;
            let comps = tensor_components(&pc);
            let chosen: Vec<usize> = match component {
                Some(i) if (1..=comps.len()).contains(i) => vec![i - 1],
                Some(i) => return Err(Error::Input(format!("no component {i}; there are {}", comps.len())).into()),
                None => (0..comps.len()).collect(),
            };
            let mut text = String::new();
            let mut tables = Vec::new();
            for idx in chosen {
                let prw = fiber::pry_branch_cycles(&pc, &comps[idx])?;
                let t = growth_table(&prw, family, *max_degree)?;
                text.push_str(&format!(
                    "component {} (prW degree {}, fail2a {})\n",
                    idx + 1,
                    t.prw_degree,
                    t.fail2a
                ));
                text.push_str("  d  placements  genus-0 component  min unflagged genus\n");
                for r in &t.rows {
                    let min = r.min_unflagged_genus.map(|g| g.to_string()).unwrap_or_else(|| "-".into());
                    text.push_str(&format!(
                        "  {:<2} {:<11} {:<18} {}\n",
                        r.degree,
                        r.placements.len(),
                        r.has_genus0_component,
                        min
                    ));
                }
                text.push_str(&format!("  strictly increasing {}\n", t.strictly_increasing()));
                tables.push(json!({"component": idx + 1, "table": serde_json::to_value(&t)?}));
            }
            Outcome::new(text.trim_end().to_string(), Value::Array(tables), bytes)
        }
    })
}

fn command_echo() -> Vec<String> {
    std::env::args().skip(1).collect()
}

fn exit_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(e) => match e.kind() {
            ErrorKind::Validation => EXIT_VALIDATION,
            ErrorKind::Cap => EXIT_CAP,
            ErrorKind::BadInput => EXIT_BAD_INPUT,
        },
        None => EXIT_BAD_INPUT,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut notes = Vec::new();
    let outcome = apply_env_caps(&mut notes).map_err(|e| anyhow!(e)).and_then(|_| run(&cli.command));
    match outcome {
        Ok(mut o) => {
            notes.append(&mut o.notes);
            if cli.json {
                let report = json!({
                    "command": command_echo(),
                    "version": env!("CARGO_PKG_VERSION"),
                    "inputs_sha256": hex(&Sha256::digest(&o.inputs)),
                    "result": o.result,
                    "notes": notes,
                });
                emit(&serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                emit(&o.text);
            }
            ExitCode::from(o.exit)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_for(&e))
        }
    }
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
