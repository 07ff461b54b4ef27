//! A canonical, line-oriented text form for Hopf structure tables.
//!
//! The writer is deterministic — tables are held in ordered maps and the
//! sections come out in a fixed order — so equal structures serialize to
//! identical bytes, which makes golden-file tests and external diffing
//! honest. The reader accepts exactly this grammar and rebuilds the
//! structure through the same shape checks as any other constructor.
//!
//! ```text
//! hopf v1
//! dim 4
//! mode ordinary            (or: super)
//! label 0 1                (index, then the label verbatim)
//! parity 0000              (one bit per basis element)
//! unit 0:1                 (sparse index:scalar pairs, ';'-separated)
//! counit 0:1;1:1
//! mult 0 1 1:1             (product of basis 0 and 1; zero rows omitted)
//! comult 0 0,0:1           (pairs are leg indices "i,j")
//! antipode 0 0:1           (present only when the table is)
//! rmatrix 0,0:1            (present only when attached)
//! end
//! ```

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::hopf::{HopfStructure, Tensor2};
use crate::linalg::SparseVec;
use crate::scalar::{parse_scalar, CycScalar};
use crate::{domain_err, Result};

fn push_sv_pairs(out: &mut String, v: &SparseVec) {
    let mut first = true;
    for (i, c) in v {
        if !first {
            out.push(';');
        }
        first = false;
        out.push_str(&format!("{i}:{c}"));
    }
}

fn push_t2_pairs(out: &mut String, t: &Tensor2) {
    let mut first = true;
    for ([i, j], c) in t {
        if !first {
            out.push(';');
        }
        first = false;
        out.push_str(&format!("{i},{j}:{c}"));
    }
}

/// Render the structure tables in the canonical text form.
pub fn serialize_hopf(h: &HopfStructure) -> String {
    let dim = h.dim();
    let mut out = String::from("hopf v1\n");
    out.push_str(&format!("dim {dim}\n"));
    out.push_str(if h.is_super() { "mode super\n" } else { "mode ordinary\n" });
    for i in 0..dim {
        let clean: String = h
            .label(i)
            .chars()
            .map(|c| if c.is_control() { '_' } else { c })
            .collect();
        out.push_str(&format!("label {i} {clean}\n"));
    }
    out.push_str("parity ");
    for i in 0..dim {
        out.push(if h.parity(i) { '1' } else { '0' });
    }
    out.push('\n');
    out.push_str("unit");
    if !h.unit().is_empty() {
        out.push(' ');
        push_sv_pairs(&mut out, h.unit());
    }
    out.push('\n');
    let counit: SparseVec = (0..dim)
        .filter(|&i| !h.counit_basis(i).is_zero())
        .map(|i| (i, h.counit_basis(i).clone()))
        .collect();
    out.push_str("counit");
    if !counit.is_empty() {
        out.push(' ');
        push_sv_pairs(&mut out, &counit);
    }
    out.push('\n');
    for i in 0..dim {
        for j in 0..dim {
            let p = h.mul_basis(i, j);
            if p.is_empty() {
                continue;
            }
            out.push_str(&format!("mult {i} {j} "));
            push_sv_pairs(&mut out, p);
            out.push('\n');
        }
    }
    for k in 0..dim {
        let t = h.comul_basis(k);
        if t.is_empty() {
            continue;
        }
        out.push_str(&format!("comult {k} "));
        push_t2_pairs(&mut out, t);
        out.push('\n');
    }
    if let Some(table) = h.antipode_table() {
        for (i, row) in table.iter().enumerate() {
            out.push_str(&format!("antipode {i}"));
            if !row.is_empty() {
                out.push(' ');
                push_sv_pairs(&mut out, row);
            }
            out.push('\n');
        }
    }
    if let Some(r) = h.rmatrix() {
        out.push_str("rmatrix");
        if !r.is_empty() {
            out.push(' ');
            push_t2_pairs(&mut out, r);
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

fn parse_index(s: &str, what: &str, line: usize) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| crate::Error::Domain(format!("line {line}: bad {what} '{s}'")))
}

fn parse_sv_pairs(s: &str, line: usize) -> Result<SparseVec> {
    let mut v = SparseVec::new();
    if s.is_empty() {
        return Ok(v);
    }
    for part in s.split(';') {
        let Some((idx, scalar)) = part.split_once(':') else {
            return domain_err(format!("line {line}: expected index:scalar, got '{part}'"));
        };
        let i = parse_index(idx, "index", line)?;
        let c = parse_scalar(scalar)?;
        if v.insert(i, c).is_some() {
            return domain_err(format!("line {line}: duplicate index {i}"));
        }
    }
    Ok(v)
}

fn parse_t2_pairs(s: &str, line: usize) -> Result<Tensor2> {
    let mut t = Tensor2::new();
    if s.is_empty() {
        return Ok(t);
    }
    for part in s.split(';') {
        let Some((key, scalar)) = part.split_once(':') else {
            return domain_err(format!("line {line}: expected i,j:scalar, got '{part}'"));
        };
        let Some((is, js)) = key.split_once(',') else {
            return domain_err(format!("line {line}: expected leg pair i,j in '{part}'"));
        };
        let i = parse_index(is, "first leg", line)?;
        let j = parse_index(js, "second leg", line)?;
        let c = parse_scalar(scalar)?;
        if t.insert([i, j], c).is_some() {
            return domain_err(format!("line {line}: duplicate pair {i},{j}"));
        }
    }
    Ok(t)
}

/// Parse the canonical text form back into a structure. The same shape
/// checks as [`HopfStructure::new`] apply, so out-of-range indices and
/// arity mismatches are rejected here too.
pub fn parse_hopf(text: &str) -> Result<HopfStructure> {
    let mut dim: Option<usize> = None;
    let mut mode: Option<bool> = None; // true = super
    let mut labels: BTreeMap<usize, String> = BTreeMap::new();
    let mut parity: Option<Vec<bool>> = None;
    let mut unit: Option<SparseVec> = None;
    let mut counit: Option<SparseVec> = None;
    let mut mult: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    let mut comult: BTreeMap<usize, Tensor2> = BTreeMap::new();
    let mut antipode: BTreeMap<usize, SparseVec> = BTreeMap::new();
    let mut rmatrix: Option<Tensor2> = None;
    let mut saw_header = false;
    let mut saw_end = false;

    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let l = raw.trim_end_matches('\r');
        if l.trim().is_empty() {
            continue;
        }
        if !saw_header {
            if l != "hopf v1" {
                return domain_err(format!("line {line}: expected 'hopf v1' header"));
            }
            saw_header = true;
            continue;
        }
        if saw_end {
            return domain_err(format!("line {line}: content after 'end'"));
        }
        if l == "end" {
            saw_end = true;
            continue;
        }
        let (key, rest) = l.split_once(' ').unwrap_or((l, ""));
        match key {
            "dim" => {
                dim = Some(parse_index(rest, "dimension", line)?);
            }
            "mode" => {
                mode = Some(match rest {
                    "ordinary" => false,
                    "super" => true,
                    other => {
                        return domain_err(format!("line {line}: unknown mode '{other}'"))
                    }
                });
            }
            "label" => {
                let Some((idx, name)) = rest.split_once(' ') else {
                    return domain_err(format!("line {line}: label needs index and text"));
                };
                let i = parse_index(idx, "label index", line)?;
                if labels.insert(i, name.to_string()).is_some() {
                    return domain_err(format!("line {line}: duplicate label {i}"));
                }
            }
            "parity" => {
                let mut bits = Vec::with_capacity(rest.len());
                for ch in rest.chars() {
                    match ch {
                        '0' => bits.push(false),
                        '1' => bits.push(true),
                        other => {
                            return domain_err(format!(
                                "line {line}: parity bits must be 0/1, got '{other}'"
                            ))
                        }
                    }
                }
                parity = Some(bits);
            }
            "unit" => unit = Some(parse_sv_pairs(rest, line)?),
            "counit" => counit = Some(parse_sv_pairs(rest, line)?),
            "mult" => {
                let Some((is, tail)) = rest.split_once(' ') else {
                    return domain_err(format!("line {line}: mult needs two indices"));
                };
                let (js, pairs) = tail.split_once(' ').unwrap_or((tail, ""));
                let i = parse_index(is, "row index", line)?;
                let j = parse_index(js, "column index", line)?;
                if mult.insert((i, j), parse_sv_pairs(pairs, line)?).is_some() {
                    return domain_err(format!("line {line}: duplicate mult row {i} {j}"));
                }
            }
            "comult" => {
                let (ks, pairs) = rest.split_once(' ').unwrap_or((rest, ""));
                let k = parse_index(ks, "basis index", line)?;
                if comult.insert(k, parse_t2_pairs(pairs, line)?).is_some() {
                    return domain_err(format!("line {line}: duplicate comult row {k}"));
                }
            }
            "antipode" => {
                let (is, pairs) = rest.split_once(' ').unwrap_or((rest, ""));
                let i = parse_index(is, "basis index", line)?;
                if antipode.insert(i, parse_sv_pairs(pairs, line)?).is_some() {
                    return domain_err(format!("line {line}: duplicate antipode row {i}"));
                }
            }
            "rmatrix" => {
                if rmatrix.is_some() {
                    return domain_err(format!("line {line}: duplicate rmatrix"));
                }
                rmatrix = Some(parse_t2_pairs(rest, line)?);
            }
            other => {
                return domain_err(format!("line {line}: unknown section '{other}'"));
            }
        }
    }

    if !saw_header {
        return domain_err("empty input: expected 'hopf v1' header");
    }
    if !saw_end {
        return domain_err("truncated input: no 'end' line");
    }
    let Some(dim) = dim else {
        return domain_err("missing 'dim' line");
    };
    let mut label_vec = Vec::with_capacity(dim);
    for i in 0..dim {
        match labels.remove(&i) {
            Some(l) => label_vec.push(l),
            None => return domain_err(format!("missing label for basis {i}")),
        }
    }
    if let Some((&i, _)) = labels.iter().next() {
        return domain_err(format!("label index {i} out of range for dim {dim}"));
    }
    let parity = parity.unwrap_or_else(|| alloc::vec![false; dim]);
    if parity.len() != dim {
        return domain_err("parity bitstring length differs from dim");
    }
    if let Some(is_super) = mode {
        if is_super != parity.iter().any(|&p| p) {
            return domain_err("mode line contradicts the parity bits");
        }
    }
    let counit_sparse = counit.unwrap_or_default();
    let mut counit_vec = alloc::vec![CycScalar::zero(); dim];
    for (i, c) in counit_sparse {
        if i >= dim {
            return domain_err(format!("counit index {i} out of range"));
        }
        counit_vec[i] = c;
    }
    let mut mult_vec = alloc::vec![SparseVec::new(); dim * dim];
    for ((i, j), v) in mult {
        if i >= dim || j >= dim {
            return domain_err(format!("mult row {i} {j} out of range"));
        }
        mult_vec[i * dim + j] = v;
    }
    let mut comult_vec = alloc::vec![Tensor2::new(); dim];
    for (k, t) in comult {
        if k >= dim {
            return domain_err(format!("comult row {k} out of range"));
        }
        comult_vec[k] = t;
    }
    let antipode_vec = if antipode.is_empty() {
        None
    } else {
        let mut table = alloc::vec![SparseVec::new(); dim];
        for (i, v) in antipode {
            if i >= dim {
                return domain_err(format!("antipode row {i} out of range"));
            }
            table[i] = v;
        }
        Some(table)
    };

    HopfStructure::new(
        label_vec,
        parity,
        unit.unwrap_or_default(),
        counit_vec,
        mult_vec,
        comult_vec,
        antipode_vec,
        rmatrix,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::group_algebra;
    use crate::scalar::rat;

    #[test]
    fn golden_form_of_the_order_two_group_algebra() {
        let g = FiniteGroup::product_of_cyclics(&[2]).unwrap();
        let h = group_algebra(&g);
        let text = serialize_hopf(&h);
        let expect = "hopf v1\n\
                      dim 2\n\
                      mode ordinary\n\
                      label 0 1\n\
                      label 1 a\n\
                      parity 00\n\
                      unit 0:1\n\
                      counit 0:1;1:1\n\
                      mult 0 0 0:1\n\
                      mult 0 1 1:1\n\
                      mult 1 0 1:1\n\
                      mult 1 1 0:1\n\
                      comult 0 0,0:1\n\
                      comult 1 1,1:1\n\
                      antipode 0 0:1\n\
                      antipode 1 1:1\n\
                      end\n";
        assert_eq!(text, expect);
    }

    #[test]
    fn round_trips_preserve_every_table() {
        let g = FiniteGroup::product_of_cyclics(&[4, 2]).unwrap();
        let mut h = group_algebra(&g);
        // Attach an R-matrix with a cyclotomic coefficient to exercise the
        // scalar grammar end to end.
        let mut r = Tensor2::new();
        r.insert([0, 0], CycScalar::one());
        r.insert([1, 2], CycScalar::root_of_unity(8, 1).scale(&rat(-3, 7)));
        h = h.with_rmatrix(r).unwrap();
        let text = serialize_hopf(&h);
        let back = parse_hopf(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(serialize_hopf(&back), text);
    }

    #[test]
    fn super_mode_round_trips() {
        let g = FiniteGroup::product_of_cyclics(&[2]).unwrap();
        let h = group_algebra(&g);
        let odd = HopfStructure::new(
            h.labels().to_vec(),
            alloc::vec![false, true],
            h.unit().clone(),
            (0..2).map(|i| h.counit_basis(i).clone()).collect(),
            (0..4).map(|k| h.mul_basis(k / 2, k % 2).clone()).collect(),
            (0..2).map(|i| h.comul_basis(i).clone()).collect(),
            None,
            None,
        )
        .unwrap();
        let text = serialize_hopf(&odd);
        assert!(text.contains("mode super\n"));
        assert!(text.contains("parity 01\n"));
        let back = parse_hopf(&text).unwrap();
        assert_eq!(back, odd);
    }

    #[test]
    fn malformed_inputs_are_rejected_with_context() {
        let g = FiniteGroup::product_of_cyclics(&[2]).unwrap();
        let good = serialize_hopf(&group_algebra(&g));

        let cases: [(String, &str); 6] = [
            (String::new(), "header"),
            (String::from("hopf v1\ndim 2\n"), "end"),
            (good.replace("mode ordinary", "mode super"), "parity"),
            (good.replace("mult 1 1 0:1", "mult 1 1 9:1"), "out-of-range"),
            (good.replace("counit 0:1;1:1", "counit 0:1;0:2"), "duplicate"),
            (good.replace("unit 0:1", "unit 0:z0"), "scalar"),
        ];
        for (input, why) in &cases {
            assert!(parse_hopf(input).is_err(), "should reject case: {why}");
        }
    }
}
