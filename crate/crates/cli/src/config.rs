//! The TOML config format shared by every subcommand that needs family
//! data, and its translation into a validated `FamilyDatum`.
//!
//! ```toml
//! [group]
//! factors = [8]        # cyclic factor orders, G = Z8
//! u = [4]              # exponents of the central involution, u = a^4
//!
//! [representation]
//! weights = [[1], [3]] # one character weight row per odd generator
//! # ...or explicit generator matrices with scalar-expression entries:
//! # matrices = [[["0", "1"], ["1", "0"]]]
//!
//! [form]               # optional; omitted means B = 0
//! lambda = ["1", "1", "1"]            # two-generator shorthand
//! # entries = [["1", "1/2"], ["1/2", "1"]]
//!
//! [limits]             # optional
//! capacity = 1048576   # cochain-coordinate budget for cohomology
//! ```
//!
//! Scalar entries accept the full expression grammar of the engine:
//! rationals, roots of unity `z8`, `z8^3`, sums, products and parens.

use serde::Deserialize;

use supertwist_core::family::{presets, FamilyDatum};
use supertwist_core::group::FiniteGroup;
use supertwist_core::linalg::Mat;
use supertwist_core::rep::Rep;
use supertwist_core::scalar::{parse_scalar, CycScalar};

use crate::Failure;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub group: GroupSection,
    pub representation: RepSection,
    #[serde(default)]
    pub form: FormSection,
    #[serde(default)]
    pub limits: LimitsSection,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSection {
    /// Cyclic factor orders; the group is their direct product.
    pub factors: Vec<u32>,
    /// The central involution, as one exponent per factor.
    pub u: Vec<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSection {
    /// Character weights, one row of per-factor weights per odd generator.
    #[serde(default)]
    pub weights: Option<Vec<Vec<i64>>>,
    /// Explicit generator matrices, one per cyclic factor.
    #[serde(default)]
    pub matrices: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSection {
    /// Lifting triple (λ₁, λ₂, λ₃); only meaningful for two generators.
    #[serde(default)]
    pub lambda: Option<Vec<String>>,
    /// The full symmetric matrix, entry by entry.
    #[serde(default)]
    pub entries: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimitsSection {
    /// Ceiling on dim(H)^(degree+1) for the cohomology pipeline.
    #[serde(default)]
    pub capacity: Option<usize>,
}

/// Parse one scalar expression, naming where it sat on failure.
fn scalar_at(text: &str, place: &str) -> Result<CycScalar, Failure> {
    parse_scalar(text)
        .map_err(|e| Failure::Parse(format!("in {place}, entry '{text}': {e}")))
}

/// Parse a `--lambda` style triple "l1,l2,l3".
pub fn parse_lambda(text: &str) -> Result<[CycScalar; 3], Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Failure::Parse(format!(
            "a lifting triple needs exactly three comma-separated entries, got {} in '{text}'",
            parts.len()
        )));
    }
    Ok([
        scalar_at(parts[0].trim(), "the lifting triple")?,
        scalar_at(parts[1].trim(), "the lifting triple")?,
        scalar_at(parts[2].trim(), "the lifting triple")?,
    ])
}

impl RunConfig {
    /// Read and deserialize a config file; TOML errors keep their
    /// line/column location.
    pub fn load(path: &std::path::Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Failure::Parse(format!("cannot read config {}: {e}", path.display()))
        })?;
        toml::from_str(&text).map_err(|e| {
            Failure::Parse(format!("config {}: {e}", path.display()))
        })
    }

    /// Build the validated datum, optionally replacing the form section
    /// with a command-line lifting triple.
    pub fn to_datum(&self, lambda: Option<&[CycScalar; 3]>) -> Result<FamilyDatum, Failure> {
        let group = FiniteGroup::product_of_cyclics(&self.group.factors)?;
        if self.group.u.len() != self.group.factors.len() {
            return Err(Failure::Parse(format!(
                "[group] u needs one exponent per factor: got {} for {} factors",
                self.group.u.len(),
                self.group.factors.len()
            )));
        }
        let u = group.from_exponents(&self.group.u);

        let rep = match (&self.representation.weights, &self.representation.matrices) {
            (Some(w), None) => Rep::from_character_weights(&group, w)?,
            (None, Some(mats)) => {
                let mut gens = Vec::with_capacity(mats.len());
                for (k, rows) in mats.iter().enumerate() {
                    gens.push(parse_matrix(rows, &format!("[representation] matrix {k}"))?);
                }
                Rep::from_generator_matrices(&group, &gens)?
            }
            (Some(_), Some(_)) => {
                return Err(Failure::Parse(
                    "[representation] takes weights or matrices, not both".into(),
                ))
            }
            (None, None) => {
                return Err(Failure::Parse(
                    "[representation] needs either weights or matrices".into(),
                ))
            }
        };
        let nv = rep.dim();

        let bform = if let Some(l) = lambda {
            require_two_generators(nv)?;
            presets::lambda_form(l)
        } else {
            match (&self.form.lambda, &self.form.entries) {
                (Some(_), Some(_)) => {
                    return Err(Failure::Parse(
                        "[form] takes lambda or entries, not both".into(),
                    ))
                }
                (Some(l), None) => {
                    if l.len() != 3 {
                        return Err(Failure::Parse(format!(
                            "[form] lambda needs three entries, got {}",
                            l.len()
                        )));
                    }
                    require_two_generators(nv)?;
                    let triple = [
                        scalar_at(&l[0], "[form] lambda")?,
                        scalar_at(&l[1], "[form] lambda")?,
                        scalar_at(&l[2], "[form] lambda")?,
                    ];
                    presets::lambda_form(&triple)
                }
                (None, Some(rows)) => parse_matrix(rows, "[form] entries")?,
                (None, None) => Mat::zeros(nv, nv),
            }
        };

        Ok(FamilyDatum::new(rep, u, bform)?)
    }
}

fn require_two_generators(nv: usize) -> Result<(), Failure> {
    if nv != 2 {
        return Err(Failure::Parse(format!(
            "a lifting triple describes a form on two odd generators; this family has {nv}"
        )));
    }
    Ok(())
}

fn parse_matrix(rows: &[Vec<String>], place: &str) -> Result<Mat, Failure> {
    let n = rows.len();
    let mut m = Mat::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Failure::Parse(format!(
                "{place} must be square: row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (j, text) in row.iter().enumerate() {
            m.set(i, j, scalar_at(text, &format!("{place} row {i}"))?);
        }
    }
    Ok(m)
}
