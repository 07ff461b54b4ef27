//! Report documents. Every subcommand produces one struct here; `--json`
//! serializes it, otherwise the `plain` renderer prints the same facts as
//! fixed-format text. Both forms iterate sorted containers only, so a
//! given input always produces the same bytes.

use serde::Serialize;

use supertwist_core::family::FamilyDatum;
use supertwist_core::hopf::verify::VerifyReport;
use supertwist_core::hopf::HopfStructure;

/// Where the family data came from, echoed back so a report is
/// self-describing without referencing file paths.
#[derive(Debug, Serialize)]
pub struct SourceDesc {
    pub preset: Option<String>,
    pub lambda: Option<Vec<String>>,
    pub group_factors: Vec<u32>,
    pub u: String,
    pub odd_generators: usize,
    pub bform: Vec<Vec<String>>,
}

impl SourceDesc {
    pub fn new(
        datum: &FamilyDatum,
        preset: Option<&str>,
        lambda: Option<&[supertwist_core::scalar::CycScalar; 3]>,
    ) -> Self {
        let b = datum.bform();
        SourceDesc {
            preset: preset.map(str::to_owned),
            lambda: lambda.map(|l| l.iter().map(|c| c.to_string()).collect()),
            group_factors: datum.group().factor_orders().to_vec(),
            u: datum.group().element_name(datum.u()),
            odd_generators: datum.nv(),
            bform: (0..b.nrows())
                .map(|i| (0..b.ncols()).map(|j| b.at(i, j).to_string()).collect())
                .collect(),
        }
    }

    /// One-line rendering for report headers.
    pub fn line(&self) -> String {
        if let Some(name) = &self.preset {
            let l = self.lambda.as_ref().expect("presets always carry a triple");
            format!("preset {name}, lambda = ({}, {}, {})", l[0], l[1], l[2])
        } else {
            let rows: Vec<String> = self
                .bform
                .iter()
                .map(|r| format!("[{}]", r.join(", ")))
                .collect();
            let plural = if self.odd_generators == 1 { "" } else { "s" };
            format!(
                "group {:?}, u = {}, {} odd generator{plural}, B = [{}]",
                self.group_factors,
                self.u,
                self.odd_generators,
                rows.join(", ")
            )
        }
    }
}

/// One named check with its verdict; `detail` carries counts on success
/// and the witness on failure.
#[derive(Debug, Serialize)]
pub struct Section {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Section {
    pub fn plain(&self) -> String {
        let verdict = if self.pass { "pass" } else { "FAIL" };
        if self.detail.is_empty() {
            format!("{}: {verdict}", self.name)
        } else {
            format!("{}: {verdict} — {}", self.name, self.detail)
        }
    }

    /// Fold an axiom-verifier report into a section, rendering the first
    /// failure with basis labels as the witness.
    pub fn from_verify(name: &str, report: &VerifyReport, h: &HopfStructure) -> Self {
        match report.first_failure() {
            None => Section {
                name: name.into(),
                pass: true,
                detail: format!("{} checks", report.results.len()),
            },
            Some(f) => {
                let at: Vec<&str> =
                    f.location.iter().map(|&i| h.label(i)).collect();
                let place = if at.is_empty() {
                    String::new()
                } else {
                    format!(" at ({})", at.join(", "))
                };
                Section {
                    name: name.into(),
                    pass: false,
                    detail: format!("{}{place}: {}", f.check.name(), f.detail),
                }
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyDoc {
    pub command: &'static str,
    pub source: Option<SourceDesc>,
    pub dimension: usize,
    pub sections: Vec<Section>,
    pub pass: bool,
}

impl VerifyDoc {
    pub fn plain(&self) -> String {
        let mut out = String::new();
        match &self.source {
            Some(s) => out.push_str(&format!("verify: {}\n", s.line())),
            None => out.push_str(&format!(
                "verify: serialized structure, dimension {}\n",
                self.dimension
            )),
        }
        for s in &self.sections {
            out.push_str(&s.plain());
            out.push('\n');
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.pass { "pass" } else { "FAIL" }
        ));
        out
    }
}

#[derive(Debug, Serialize)]
pub struct GrouplikeEntry {
    pub label: String,
    pub skew_primitive_dimension: usize,
}

#[derive(Debug, Serialize)]
pub struct InvariantsDoc {
    pub command: &'static str,
    pub source: SourceDesc,
    pub coalgebra_type: String,
    pub ranks: Vec<usize>,
    pub pointed: bool,
    pub grouplikes: Vec<GrouplikeEntry>,
}

impl InvariantsDoc {
    pub fn plain(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("invariants: {}\n", self.source.line()));
        out.push_str(&format!("coalgebra type: {}\n", self.coalgebra_type));
        out.push_str(&format!(
            "pointed: {}\n",
            if self.pointed { "yes" } else { "no" }
        ));
        out.push_str(&format!("grouplikes ({}):\n", self.grouplikes.len()));
        for g in &self.grouplikes {
            out.push_str(&format!(
                "  {}: skew-primitive dimension {}\n",
                g.label, g.skew_primitive_dimension
            ));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct TripleEntry {
    pub lambda: Vec<String>,
    pub canonical: Vec<String>,
    pub invariant: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct PairEntry {
    pub left: usize,
    pub right: usize,
    pub equivalent: bool,
    pub reason: String,
}

#[derive(Debug, Serialize)]
pub struct ModuliDoc {
    pub command: &'static str,
    pub triples: Vec<TripleEntry>,
    pub pairs: Vec<PairEntry>,
}

fn triple_text(parts: &[String]) -> String {
    format!("({}, {}, {})", parts[0], parts[1], parts[2])
}

impl ModuliDoc {
    pub fn plain(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("moduli: {} triples\n", self.triples.len()));
        for (k, t) in self.triples.iter().enumerate() {
            let inv = match &t.invariant {
                Some(v) => format!(", invariant = {v}"),
                None => ", no cross-term invariant".into(),
            };
            out.push_str(&format!(
                "{}: lambda = {}, canonical = {}{inv}\n",
                k + 1,
                triple_text(&t.lambda),
                triple_text(&t.canonical),
            ));
        }
        for p in &self.pairs {
            let verdict = if p.equivalent { "equivalent" } else { "distinct" };
            if p.reason.is_empty() {
                out.push_str(&format!("pair ({}, {}): {verdict}\n", p.left, p.right));
            } else {
                out.push_str(&format!(
                    "pair ({}, {}): {verdict} — {}\n",
                    p.left, p.right, p.reason
                ));
            }
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct CohomologyRow {
    pub degree: usize,
    pub hochschild: usize,
    pub symmetric_invariants: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Serialize)]
pub struct CohomologyDoc {
    pub command: &'static str,
    pub source: SourceDesc,
    pub bound: usize,
    pub rows: Vec<CohomologyRow>,
    pub pass: bool,
}

impl CohomologyDoc {
    pub fn plain(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("cohomology: {}\n", self.source.line()));
        out.push_str(&format!("bound: {}\n", self.bound));
        for r in &self.rows {
            out.push_str(&format!(
                "degree {}: H = {}, (S^{} V*)^G = {} — {}\n",
                r.degree,
                r.hochschild,
                r.degree,
                r.symmetric_invariants,
                if r.matches { "match" } else { "MISMATCH" }
            ));
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.pass { "pass" } else { "FAIL" }
        ));
        out
    }
}
