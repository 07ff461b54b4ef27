//! Flat-file form of a structure-constant table. Scalars travel as the
//! expression text their `Display` produces, which the engine's parser
//! reads back verbatim, so a document round-trips exactly.

use serde::{Deserialize, Serialize};

use supertwist_core::hopf::{HopfStructure, Tensor2};
use supertwist_core::linalg::SparseVec;
use supertwist_core::scalar::parse_scalar;

use crate::Failure;

/// The serialized structure: basis labels, parities, and every table with
/// sparse entries as `(index..., scalar text)` tuples in basis order.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub labels: Vec<String>,
    pub parity: Vec<bool>,
    pub unit: Vec<(usize, String)>,
    pub counit: Vec<String>,
    /// Row-major: entry `i * dim + j` is the product of basis i and j.
    pub mult: Vec<Vec<(usize, String)>>,
    pub comult: Vec<Vec<(usize, usize, String)>>,
    pub antipode: Option<Vec<Vec<(usize, String)>>>,
    pub rmatrix: Option<Vec<(usize, usize, String)>>,
}

/// A build artifact: the structure plus the orientation note that fixes
/// how the folded coproduct was read off.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildDoc {
    pub convention: String,
    pub dimension: usize,
    pub structure: StructureDoc,
}

fn vec_out(v: &SparseVec) -> Vec<(usize, String)> {
    v.iter().map(|(&i, c)| (i, c.to_string())).collect()
}

fn tensor_out(t: &Tensor2) -> Vec<(usize, usize, String)> {
    t.iter().map(|(&[i, j], c)| (i, j, c.to_string())).collect()
}

fn vec_in(entries: &[(usize, String)], place: &str) -> Result<SparseVec, Failure> {
    let mut v = SparseVec::new();
    for (i, text) in entries {
        let c = parse_scalar(text)
            .map_err(|e| Failure::Parse(format!("in {place}: {e}")))?;
        v.insert(*i, c);
    }
    Ok(v)
}

fn tensor_in(entries: &[(usize, usize, String)], place: &str) -> Result<Tensor2, Failure> {
    let mut t = Tensor2::new();
    for (i, j, text) in entries {
        let c = parse_scalar(text)
            .map_err(|e| Failure::Parse(format!("in {place}: {e}")))?;
        t.insert([*i, *j], c);
    }
    Ok(t)
}

pub fn to_document(h: &HopfStructure) -> StructureDoc {
    let dim = h.dim();
    let mut mult = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            mult.push(vec_out(h.mul_basis(i, j)));
        }
    }
    StructureDoc {
        labels: h.labels().to_vec(),
        parity: (0..dim).map(|i| h.parity(i)).collect(),
        unit: vec_out(h.unit()),
        counit: (0..dim).map(|i| h.counit_basis(i).to_string()).collect(),
        mult,
        comult: (0..dim).map(|i| tensor_out(h.comul_basis(i))).collect(),
        antipode: h
            .antipode_table()
            .map(|t| t.iter().map(vec_out).collect()),
        rmatrix: h.rmatrix().map(tensor_out),
    }
}

pub fn to_structure(doc: &StructureDoc) -> Result<HopfStructure, Failure> {
    let mut counit = Vec::with_capacity(doc.counit.len());
    for (i, text) in doc.counit.iter().enumerate() {
        counit.push(
            parse_scalar(text)
                .map_err(|e| Failure::Parse(format!("in counit entry {i}: {e}")))?,
        );
    }
    let mut mult = Vec::with_capacity(doc.mult.len());
    for (k, entries) in doc.mult.iter().enumerate() {
        mult.push(vec_in(entries, &format!("product table entry {k}"))?);
    }
    let mut comult = Vec::with_capacity(doc.comult.len());
    for (i, entries) in doc.comult.iter().enumerate() {
        comult.push(tensor_in(entries, &format!("coproduct of basis {i}"))?);
    }
    let antipode = match &doc.antipode {
        None => None,
        Some(rows) => {
            let mut table = Vec::with_capacity(rows.len());
            for (i, entries) in rows.iter().enumerate() {
                table.push(vec_in(entries, &format!("antipode of basis {i}"))?);
            }
            Some(table)
        }
    };
    let rmatrix = match &doc.rmatrix {
        None => None,
        Some(entries) => Some(tensor_in(entries, "the R-matrix")?),
    };
    Ok(HopfStructure::new(
        doc.labels.clone(),
        doc.parity.clone(),
        vec_in(&doc.unit, "the unit")?,
        counit,
        mult,
        comult,
        antipode,
        rmatrix,
    )?)
}
