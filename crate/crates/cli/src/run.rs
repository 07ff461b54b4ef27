//! Argument surface and the five pipelines behind it.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgAction, Args, Parser, Subcommand};
use serde::Serialize;

use supertwist_core::family::{presets, FamilyAlgebra, FamilyDatum};
use supertwist_core::hopf::twist::twist_equation_check;
use supertwist_core::hopf::verify::{verify_bialgebra, verify_hopf, verify_triangular};
use supertwist_core::invariants::cohomology::{hochschild_table_capped, HOCHSCHILD_CAP};
use supertwist_core::invariants::moduli::ModuliPoint;
use supertwist_core::invariants::{
    clifford::verify_clifford_blocks, coalgebra_type, grouplike_census, is_pointed,
    skew_primitive_space,
};
use supertwist_core::scalar::CycScalar;

use crate::config::{parse_lambda, RunConfig};
use crate::report::{
    CohomologyDoc, CohomologyRow, GrouplikeEntry, InvariantsDoc, ModuliDoc, PairEntry,
    Section, SourceDesc, TripleEntry, VerifyDoc,
};
use crate::serial::{to_document, to_structure, BuildDoc};
use crate::Failure;

#[derive(Parser)]
#[command(
    name = "supertwist",
    about = "Exact construction and verification of twisted supergroup Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SourceArgs {
    /// Family config file (TOML).
    #[arg(long, value_name = "PATH", conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Named 32-dimensional preset: case1, case2 or case3.
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
    /// Lifting triple "l1,l2,l3"; entries are scalar expressions.
    #[arg(long, value_name = "TRIPLE")]
    lambda: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Emit the report as a JSON document.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member and write its serialized structure.
    Build {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run every structural check on a family member, or re-audit a
    /// previously serialized structure.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        /// Audit this serialized structure instead of building one.
        #[arg(
            long,
            value_name = "FILE",
            conflicts_with_all = ["config", "preset", "lambda"]
        )]
        structure: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Report the coalgebra type, pointedness and primitive censuses.
    Invariants {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Canonical forms and pairwise equivalence of lifting triples.
    Moduli {
        /// A lifting triple "l1,l2,l3"; repeat for pairwise verdicts.
        #[arg(
            long = "lambda",
            value_name = "TRIPLE",
            action = ArgAction::Append,
            required = true
        )]
        lambdas: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hochschild cohomology of the supergroup algebra against the
    /// symmetric-invariant comparison column.
    Cohomology {
        #[command(flatten)]
        source: SourceArgs,
        /// Highest degree to compute.
        #[arg(long, value_name = "N", default_value_t = 2)]
        max_degree: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Everything a datum-driven pipeline needs from its source arguments.
struct LoadedFamily {
    datum: FamilyDatum,
    desc: SourceDesc,
    capacity: Option<usize>,
}

fn load_family(source: &SourceArgs) -> Result<LoadedFamily, Failure> {
    let lambda: Option<[CycScalar; 3]> = match &source.lambda {
        Some(text) => Some(parse_lambda(text)?),
        None => None,
    };
    match (&source.config, &source.preset) {
        (Some(path), None) => {
            let cfg = RunConfig::load(path)?;
            let datum = cfg.to_datum(lambda.as_ref())?;
            let desc = SourceDesc::new(&datum, None, lambda.as_ref());
            Ok(LoadedFamily {
                datum,
                desc,
                capacity: cfg.limits.capacity,
            })
        }
        (None, Some(name)) => {
            let triple = lambda.unwrap_or_else(|| {
                [CycScalar::one(), CycScalar::one(), CycScalar::one()]
            });
            let datum = presets::by_name(name, &triple)?;
            let desc = SourceDesc::new(&datum, Some(name), Some(&triple));
            Ok(LoadedFamily {
                datum,
                desc,
                capacity: None,
            })
        }
        (None, None) => Err(Failure::Parse(
            "pick a family: --config PATH or --preset NAME".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

fn emit<T: Serialize>(
    doc: &T,
    plain: String,
    output: &OutputArgs,
) -> Result<(), Failure> {
    let text = if output.json {
        let mut s = serde_json::to_string_pretty(doc)
            .map_err(|e| Failure::Verify(format!("cannot serialize the report: {e}")))?;
        s.push('\n');
        s
    } else {
        plain
    };
    write_text(&text, output.out.as_deref())
}

fn write_text(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            Failure::Parse(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Parse(format!("cannot write the report: {e}")))
        }
    }
}

/// How the build folds the twisted supergroup coproduct back into an
/// ordinary one; recorded in every artifact so downstream readers know
/// which of the two symmetric choices the tables follow.
const FOLD_CONVENTION: &str =
    "fold(x⊗y) = x·u^p(y) ⊗ y: the central involution corrects the first \
     tensor leg when the second is odd";

fn cmd_build(source: &SourceArgs, output: &OutputArgs) -> Result<bool, Failure> {
    let loaded = load_family(source)?;
    let fam = FamilyAlgebra::build(loaded.datum)?;
    let doc = BuildDoc {
        convention: FOLD_CONVENTION.into(),
        dimension: fam.dim(),
        structure: to_document(fam.hopf()),
    };
    let text = serde_json::to_string_pretty(&doc)
        .map_err(|e| Failure::Verify(format!("cannot serialize the structure: {e}")))?;
    write_text(&format!("{text}\n"), output.out.as_deref())?;
    if !output.json {
        let dest = match &output.out {
            Some(p) => p.display().to_string(),
            None => "stdout".into(),
        };
        eprintln!(
            "built {}: dimension {}, structure written to {dest}",
            loaded.desc.line(),
            fam.dim()
        );
    }
    Ok(true)
}

fn cmd_verify_family(source: &SourceArgs, output: &OutputArgs) -> Result<bool, Failure> {
    let loaded = load_family(source)?;
    let fam = FamilyAlgebra::build(loaded.datum)?;
    let datum = fam.datum();
    let mut sections = Vec::new();

    let oracle = datum.coproduct_oracle_check()?;
    sections.push(Section {
        name: "coproduct identity".into(),
        pass: oracle,
        detail: if oracle {
            format!("all {} basis elements", fam.dim())
        } else {
            "J⁻¹Δ(x)J differs from Δ(x)·exp(B − Bᵍ) on some basis element".into()
        },
    });

    let sup = datum.supergroup_hopf()?;
    let twist = datum.super_twist()?;
    sections.push(Section::from_verify(
        "twist equation",
        &twist_equation_check(&sup, &twist),
        &sup,
    ));

    sections.push(Section::from_verify(
        "hopf axioms",
        &verify_hopf(fam.hopf()),
        fam.hopf(),
    ));
    sections.push(Section::from_verify(
        "triangularity",
        &verify_triangular(fam.hopf()),
        fam.hopf(),
    ));

    let blocks = fam.block_decomposition()?;
    let sizes_ok = blocks
        .iter()
        .all(|b| b.members.len() == (1 << (datum.nv() + 1)));
    sections.push(Section {
        name: "blocks".into(),
        pass: sizes_ok,
        detail: format!(
            "{} blocks of dimension {}",
            blocks.len(),
            1 << (datum.nv() + 1)
        ),
    });

    let clifford = verify_clifford_blocks(&fam)?;
    let mut ranks: Vec<usize> = clifford.blocks.iter().map(|b| b.rank).collect();
    ranks.sort_unstable();
    let rank_list: Vec<String> = ranks.iter().map(usize::to_string).collect();
    sections.push(Section {
        name: "clifford relations".into(),
        pass: clifford.is_ok(),
        detail: match clifford.failures().next() {
            Some(f) => f.clone(),
            None => format!("ranks {{{}}}", rank_list.join(", ")),
        },
    });

    let pass = sections.iter().all(|s| s.pass);
    let doc = VerifyDoc {
        command: "verify",
        source: Some(loaded.desc),
        dimension: fam.dim(),
        sections,
        pass,
    };
    let plain = doc.plain();
    emit(&doc, plain, output)?;
    Ok(pass)
}

fn cmd_verify_structure(path: &Path, output: &OutputArgs) -> Result<bool, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
    let doc: BuildDoc = serde_json::from_str(&text)
        .map_err(|e| Failure::Parse(format!("structure {}: {e}", path.display())))?;
    let h = to_structure(&doc.structure)?;

    let mut sections = Vec::new();
    if h.antipode_table().is_some() {
        sections.push(Section::from_verify("hopf axioms", &verify_hopf(&h), &h));
    } else {
        sections.push(Section::from_verify(
            "bialgebra axioms",
            &verify_bialgebra(&h),
            &h,
        ));
    }
    if h.rmatrix().is_some() {
        sections.push(Section::from_verify(
            "triangularity",
            &verify_triangular(&h),
            &h,
        ));
    }

    let pass = sections.iter().all(|s| s.pass);
    let doc = VerifyDoc {
        command: "verify",
        source: None,
        dimension: h.dim(),
        sections,
        pass,
    };
    let plain = doc.plain();
    emit(&doc, plain, output)?;
    Ok(pass)
}

fn cmd_invariants(source: &SourceArgs, output: &OutputArgs) -> Result<bool, Failure> {
    let loaded = load_family(source)?;
    let ctype = coalgebra_type(&loaded.datum);
    let pointed = is_pointed(&loaded.datum)?;
    let fam = FamilyAlgebra::build(loaded.datum)?;
    let mut grouplikes = Vec::new();
    for g in grouplike_census(&fam)? {
        grouplikes.push(GrouplikeEntry {
            label: fam.hopf().label(g).to_owned(),
            skew_primitive_dimension: skew_primitive_space(fam.hopf(), g).len(),
        });
    }
    let doc = InvariantsDoc {
        command: "invariants",
        source: loaded.desc,
        coalgebra_type: ctype.to_string(),
        ranks: ctype.ranks().to_vec(),
        pointed,
        grouplikes,
    };
    let plain = doc.plain();
    emit(&doc, plain, output)?;
    Ok(true)
}

fn cmd_moduli(lambdas: &[String], output: &OutputArgs) -> Result<bool, Failure> {
    let mut points = Vec::with_capacity(lambdas.len());
    for text in lambdas {
        let [l1, l2, l3] = parse_lambda(text)?;
        points.push(ModuliPoint::new(l1, l2, l3));
    }
    let triples: Vec<TripleEntry> = points
        .iter()
        .map(|p| TripleEntry {
            lambda: p.lambda.iter().map(|c| c.to_string()).collect(),
            canonical: p
                .canonical()
                .lambda
                .iter()
                .map(|c| c.to_string())
                .collect(),
            invariant: p.scale_invariant().map(|v| v.to_string()),
        })
        .collect();
    let mut pairs = Vec::new();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let equivalent = points[i].equivalent_to(&points[j]);
            let reason = if equivalent {
                String::new()
            } else {
                match (points[i].scale_invariant(), points[j].scale_invariant()) {
                    (Some(a), Some(b)) if a != b => {
                        format!("invariants {a} vs {b}")
                    }
                    _ => "canonical forms differ".into(),
                }
            };
            pairs.push(PairEntry {
                left: i + 1,
                right: j + 1,
                equivalent,
                reason,
            });
        }
    }
    let doc = ModuliDoc {
        command: "moduli",
        triples,
        pairs,
    };
    let plain = doc.plain();
    emit(&doc, plain, output)?;
    Ok(true)
}

fn cmd_cohomology(
    source: &SourceArgs,
    max_degree: usize,
    output: &OutputArgs,
) -> Result<bool, Failure> {
    let loaded = load_family(source)?;
    let cap = loaded.capacity.unwrap_or(HOCHSCHILD_CAP);
    let h = loaded.datum.supergroup_hopf()?;
    let table = hochschild_table_capped(&h, max_degree, cap)?;
    let dual = loaded.datum.rep().dual();
    let mut rows = Vec::with_capacity(table.len());
    for (i, &hdim) in table.iter().enumerate() {
        let expected = dual.symmetric_power(i).invariant_subspace().len();
        rows.push(CohomologyRow {
            degree: i,
            hochschild: hdim,
            symmetric_invariants: expected,
            matches: hdim == expected,
        });
    }
    let pass = rows.iter().all(|r| r.matches);
    let doc = CohomologyDoc {
        command: "cohomology",
        source: loaded.desc,
        bound: max_degree,
        rows,
        pass,
    };
    let plain = doc.plain();
    emit(&doc, plain, output)?;
    Ok(pass)
}

fn dispatch(cli: &Cli) -> Result<bool, Failure> {
    match &cli.command {
        Command::Build { source, output } => cmd_build(source, output),
        Command::Verify {
            source,
            structure,
            output,
        } => match structure {
            Some(path) => cmd_verify_structure(path, output),
            None => cmd_verify_family(source, output),
        },
        Command::Invariants { source, output } => cmd_invariants(source, output),
        Command::Moduli { lambdas, output } => cmd_moduli(lambdas, output),
        Command::Cohomology {
            source,
            max_degree,
            output,
        } => cmd_cohomology(source, *max_degree, output),
    }
}

/// Parse the command line, run the pipeline, and map the outcome to the
/// exit-code contract.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(f) => {
            eprintln!("error: {f}");
            f.exit_code()
        }
    }
}
