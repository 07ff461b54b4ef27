//! Hopf algebras as explicit structure constants, with exact verification.
//!
//! A [`HopfStructure`] stores everything on a chosen basis: the product of
//! every basis pair, the coproduct, counit and antipode of every basis
//! element, and the unit vector. Nothing is assumed; [`verify::verify_hopf`]
//! re-derives every axiom from these tables and reports the first
//! counterexample when one fails.
//!
//! A parity vector rides along. When every element is even the checks are
//! the classical ones; odd elements switch the tensor-square multiplication
//! to the signed rule, so the same verifier handles the supergroup algebras
//! that the folded constructions start from.
//!
//! Submodules: [`verify`] (axiom audits, triangularity), [`twist`] (Drinfeld
//! twists and Hopf 2-cocycles), [`dual`] (the dual Hopf algebra), and
//! [`serial`] (a canonical line-oriented text form).

pub mod dual;
pub mod serial;
pub mod twist;
pub mod verify;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::group::FiniteGroup;
use crate::linalg::SparseVec;
use crate::scalar::CycScalar;
use crate::{domain_err, Result};

/// Sparse element of H ⊗ H.
pub type Tensor2 = BTreeMap<[usize; 2], CycScalar>;

/// Sparse element of H ⊗ H ⊗ H.
pub type Tensor3 = BTreeMap<[usize; 3], CycScalar>;

/// Add `k * src` into a keyed map, dropping cancellations.
pub(crate) fn map_add_scaled<K: Ord + Clone>(
    dst: &mut BTreeMap<K, CycScalar>,
    src: &BTreeMap<K, CycScalar>,
    k: &CycScalar,
) {
    if k.is_zero() {
        return;
    }
    for (key, v) in src {
        let add = v * k;
        match dst.get_mut(key) {
            Some(cur) => {
                *cur = &*cur + &add;
                if cur.is_zero() {
                    dst.remove(key);
                }
            }
            None => {
                dst.insert(key.clone(), add);
            }
        }
    }
}

pub(crate) fn map_insert_add<K: Ord>(
    dst: &mut BTreeMap<K, CycScalar>,
    key: K,
    add: CycScalar,
) {
    if add.is_zero() {
        return;
    }
    match dst.get_mut(&key) {
        Some(cur) => {
            *cur = &*cur + &add;
            if cur.is_zero() {
                dst.remove(&key);
            }
        }
        None => {
            dst.insert(key, add);
        }
    }
}

/// A (super) Hopf algebra presented by structure constants on a fixed basis.
///
/// The antipode is optional so that bialgebras can be expressed and an
/// antipode solved for afterwards; an optional R-matrix rides along for
/// (quasi)triangular structures.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfStructure {
    dim: usize,
    labels: Vec<String>,
    parity: Vec<bool>,
    unit: SparseVec,
    counit: Vec<CycScalar>,
    /// Product of basis i and j at index `i * dim + j`.
    mult: Vec<SparseVec>,
    comult: Vec<Tensor2>,
    antipode: Option<Vec<SparseVec>>,
    rmatrix: Option<Tensor2>,
}

impl HopfStructure {
    /// Assemble and shape-check. This validates arities and index ranges
    /// only; the axioms are a separate, explicit verification step.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        labels: Vec<String>,
        parity: Vec<bool>,
        unit: SparseVec,
        counit: Vec<CycScalar>,
        mult: Vec<SparseVec>,
        comult: Vec<Tensor2>,
        antipode: Option<Vec<SparseVec>>,
        rmatrix: Option<Tensor2>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return domain_err("a Hopf algebra needs at least one basis element");
        }
        if parity.len() != dim || counit.len() != dim || comult.len() != dim {
            return domain_err("structure table arity mismatch");
        }
        if mult.len() != dim * dim {
            return domain_err("multiplication table must have dim^2 entries");
        }
        if let Some(s) = &antipode {
            if s.len() != dim {
                return domain_err("antipode table arity mismatch");
            }
        }
        let h = HopfStructure {
            dim,
            labels,
            parity,
            unit,
            counit,
            mult,
            comult,
            antipode,
            rmatrix,
        };
        h.check_indices()?;
        Ok(h)
    }

    fn check_indices(&self) -> Result<()> {
        let ok_idx = |i: usize| i < self.dim;
        if !self.unit.keys().all(|&i| ok_idx(i)) {
            return domain_err("unit refers to an out-of-range basis index");
        }
        for v in &self.mult {
            if !v.keys().all(|&i| ok_idx(i)) {
                return domain_err("multiplication refers to an out-of-range index");
            }
        }
        for t in &self.comult {
            if !t.keys().all(|k| ok_idx(k[0]) && ok_idx(k[1])) {
                return domain_err("comultiplication refers to an out-of-range index");
            }
        }
        if let Some(s) = &self.antipode {
            for v in s {
                if !v.keys().all(|&i| ok_idx(i)) {
                    return domain_err("antipode refers to an out-of-range index");
                }
            }
        }
        if let Some(r) = &self.rmatrix {
            if !r.keys().all(|k| ok_idx(k[0]) && ok_idx(k[1])) {
                return domain_err("R-matrix refers to an out-of-range index");
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn parity(&self, i: usize) -> bool {
        self.parity[i]
    }

    /// Any odd basis element makes the structure a superalgebra.
    pub fn is_super(&self) -> bool {
        self.parity.iter().any(|&p| p)
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn counit_basis(&self, i: usize) -> &CycScalar {
        &self.counit[i]
    }

    pub fn counit_of(&self, x: &SparseVec) -> CycScalar {
        let mut acc = CycScalar::zero();
        for (&i, c) in x {
            if !self.counit[i].is_zero() {
                acc = &acc + &(c * &self.counit[i]);
            }
        }
        acc
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, a) in x {
            for (&j, b) in y {
                let ab = a * b;
                map_add_scaled(&mut out, self.mul_basis(i, j), &ab);
            }
        }
        out
    }

    pub fn comul_basis(&self, i: usize) -> &Tensor2 {
        &self.comult[i]
    }

    pub fn comul(&self, x: &SparseVec) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&i, c) in x {
            map_add_scaled(&mut out, &self.comult[i], c);
        }
        out
    }

    pub fn antipode_table(&self) -> Option<&Vec<SparseVec>> {
        self.antipode.as_ref()
    }

    pub fn antipode_basis(&self, i: usize) -> Option<&SparseVec> {
        self.antipode.as_ref().map(|s| &s[i])
    }

    pub fn antipode(&self, x: &SparseVec) -> Option<SparseVec> {
        let table = self.antipode.as_ref()?;
        let mut out = SparseVec::new();
        for (&i, c) in x {
            map_add_scaled(&mut out, &table[i], c);
        }
        Some(out)
    }

    pub fn rmatrix(&self) -> Option<&Tensor2> {
        self.rmatrix.as_ref()
    }

    pub fn with_antipode(mut self, antipode: Vec<SparseVec>) -> Result<Self> {
        if antipode.len() != self.dim {
            return domain_err("antipode table arity mismatch");
        }
        self.antipode = Some(antipode);
        self.check_indices()?;
        Ok(self)
    }

    pub fn with_rmatrix(mut self, r: Tensor2) -> Result<Self> {
        self.rmatrix = Some(r);
        self.check_indices()?;
        Ok(self)
    }

    pub fn without_rmatrix(mut self) -> Self {
        self.rmatrix = None;
        self
    }

    /// Signed multiplication in H ⊗ H: (a⊗b)(c⊗d) = ±(ac⊗bd), the sign
    /// being (-1)^{p(b)p(c)}; trivial in the all-even case.
    pub fn tensor2_mul(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&[a, b], ca) in x {
            for (&[c, d], cb) in y {
                let mut coeff = ca * cb;
                if self.parity[b] && self.parity[c] {
                    coeff = -coeff;
                }
                for (&i, v1) in self.mul_basis(a, c) {
                    for (&j, v2) in self.mul_basis(b, d) {
                        map_insert_add(&mut out, [i, j], &(&coeff * v1) * v2);
                    }
                }
            }
        }
        out
    }

    /// Signed multiplication in H ⊗ H ⊗ H.
    pub fn tensor3_mul(&self, x: &Tensor3, y: &Tensor3) -> Tensor3 {
        let mut out = Tensor3::new();
        for (bs, ca) in x {
            for (cs, cb) in y {
                let mut sign = false;
                for j in 1..3 {
                    if self.parity[bs[j]] {
                        for i in 0..j {
                            if self.parity[cs[i]] {
                                sign = !sign;
                            }
                        }
                    }
                }
                let mut coeff = ca * cb;
                if sign {
                    coeff = -coeff;
                }
                for (&i0, v0) in self.mul_basis(bs[0], cs[0]) {
                    let c0 = &coeff * v0;
                    for (&i1, v1) in self.mul_basis(bs[1], cs[1]) {
                        let c1 = &c0 * v1;
                        for (&i2, v2) in self.mul_basis(bs[2], cs[2]) {
                            map_insert_add(&mut out, [i0, i1, i2], &c1 * v2);
                        }
                    }
                }
            }
        }
        out
    }

    /// The unit of H ⊗ H.
    pub fn tensor2_unit(&self) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&i, a) in &self.unit {
            for (&j, b) in &self.unit {
                map_insert_add(&mut out, [i, j], a * b);
            }
        }
        out
    }

    /// The unit of H ⊗ H ⊗ H.
    pub fn tensor3_unit(&self) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&i, a) in &self.unit {
            for (&j, b) in &self.unit {
                for (&k, c) in &self.unit {
                    map_insert_add(&mut out, [i, j, k], &(a * b) * c);
                }
            }
        }
        out
    }

    /// (Δ ⊗ id)(t) for a 2-tensor.
    pub fn comul_first_leg(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&[x, y], c) in t {
            for (&[a, b], d) in &self.comult[x] {
                map_insert_add(&mut out, [a, b, y], c * d);
            }
        }
        out
    }

    /// (id ⊗ Δ)(t) for a 2-tensor.
    pub fn comul_second_leg(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&[x, y], c) in t {
            for (&[a, b], d) in &self.comult[y] {
                map_insert_add(&mut out, [x, a, b], c * d);
            }
        }
        out
    }

    /// Iterated coproduct of a basis element with `legs` output legs
    /// (coassociativity makes the expansion order immaterial — which the
    /// verifier checks separately).
    pub fn sweedler(&self, i: usize, legs: usize) -> BTreeMap<Vec<usize>, CycScalar> {
        let mut acc: BTreeMap<Vec<usize>, CycScalar> = BTreeMap::new();
        acc.insert(alloc::vec![i], CycScalar::one());
        for _ in 1..legs {
            let mut next: BTreeMap<Vec<usize>, CycScalar> = BTreeMap::new();
            for (key, c) in &acc {
                let last = *key.last().expect("keys are never empty");
                for (&[a, b], d) in &self.comult[last] {
                    let mut nk = key.clone();
                    nk.pop();
                    nk.push(a);
                    nk.push(b);
                    map_insert_add(&mut next, nk, c * d);
                }
            }
            acc = next;
        }
        acc
    }

    /// Flip the two legs of a 2-tensor, with the Koszul sign when both legs
    /// are odd.
    pub fn tensor2_flip(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&[a, b], c) in t {
            let mut coeff = c.clone();
            if self.parity[a] && self.parity[b] {
                coeff = -coeff;
            }
            map_insert_add(&mut out, [b, a], coeff);
        }
        out
    }

    /// Opposite coproduct of a basis element.
    pub fn comul_op_basis(&self, i: usize) -> Tensor2 {
        self.tensor2_flip(&self.comult[i])
    }

    /// True when x y = y x for all basis pairs.
    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.mul_basis(i, j) != self.mul_basis(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// True when the coproduct equals its opposite on every basis element.
    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| self.comul_op_basis(i) == self.comult[i])
    }

    /// Embeddings of 2-tensors into three legs, for the hexagon and twist
    /// equations: positions name which legs carry the tensor.
    pub fn embed_12(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&[a, b], c) in t {
            for (&u, cu) in &self.unit {
                map_insert_add(&mut out, [a, b, u], c * cu);
            }
        }
        out
    }

    pub fn embed_23(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&[a, b], c) in t {
            for (&u, cu) in &self.unit {
                map_insert_add(&mut out, [u, a, b], c * cu);
            }
        }
        out
    }

    pub fn embed_13(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&[a, b], c) in t {
            for (&u, cu) in &self.unit {
                map_insert_add(&mut out, [a, u, b], c * cu);
            }
        }
        out
    }
}

/// The group algebra C[G] with its classical Hopf structure: grouplike
/// basis, S(g) = g⁻¹.
pub fn group_algebra(group: &FiniteGroup) -> HopfStructure {
    let dim = group.order();
    let labels = group.elements().map(|g| group.element_name(g)).collect();
    let parity = alloc::vec![false; dim];
    let mut unit = SparseVec::new();
    unit.insert(group.identity(), CycScalar::one());
    let counit = alloc::vec![CycScalar::one(); dim];
    let mut mult = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut v = SparseVec::new();
            v.insert(group.mul(i, j), CycScalar::one());
            mult.push(v);
        }
    }
    let comult = (0..dim)
        .map(|i| {
            let mut t = Tensor2::new();
            t.insert([i, i], CycScalar::one());
            t
        })
        .collect();
    let antipode = (0..dim)
        .map(|i| {
            let mut v = SparseVec::new();
            v.insert(group.inv(i), CycScalar::one());
            v
        })
        .collect();
    HopfStructure::new(labels, parity, unit, counit, mult, comult, Some(antipode), None)
        .expect("group algebra tables are well-formed by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycScalar;
    use alloc::vec;

    #[test]
    fn group_algebra_tables() {
        let g = FiniteGroup::product_of_cyclics(&[4]).unwrap();
        let h = group_algebra(&g);
        assert_eq!(h.dim(), 4);
        assert!(!h.is_super());
        assert!(h.is_commutative());
        assert!(h.is_cocommutative());
        let prod = h.mul_basis(1, 3);
        assert_eq!(prod.len(), 1);
        assert_eq!(prod[&0], CycScalar::one());
        assert_eq!(h.label(1), "a");
        assert_eq!(h.counit_basis(2), &CycScalar::one());
    }

    #[test]
    fn sweedler_expansion_of_grouplikes() {
        let g = FiniteGroup::product_of_cyclics(&[3]).unwrap();
        let h = group_algebra(&g);
        let quad = h.sweedler(2, 4);
        assert_eq!(quad.len(), 1);
        assert_eq!(quad[&vec![2, 2, 2, 2]], CycScalar::one());
    }

    #[test]
    fn tensor_embeddings_commute_when_disjoint() {
        let g = FiniteGroup::product_of_cyclics(&[2, 2]).unwrap();
        let h = group_algebra(&g);
        let mut r = Tensor2::new();
        r.insert([1, 2], CycScalar::from_int(2));
        r.insert([0, 0], CycScalar::one());
        // r12 and r23 overlap in the middle leg; r13 and flipped copies
        // exercise the embeddings. Just check shapes and a product.
        let r12 = h.embed_12(&r);
        let r23 = h.embed_23(&r);
        let r13 = h.embed_13(&r);
        assert!(r12.contains_key(&[1, 2, 0]));
        assert!(r23.contains_key(&[0, 1, 2]));
        assert!(r13.contains_key(&[1, 0, 2]));
        let p = h.tensor3_mul(&r12, &r23);
        assert!(!p.is_empty());
    }

    #[test]
    fn shape_validation_rejects_bad_tables() {
        let g = FiniteGroup::product_of_cyclics(&[2]).unwrap();
        let h = group_algebra(&g);
        // Out-of-range index in the unit.
        let mut bad_unit = SparseVec::new();
        bad_unit.insert(7, CycScalar::one());
        let r = HopfStructure::new(
            h.labels().to_vec(),
            vec![false; 2],
            bad_unit,
            vec![CycScalar::one(); 2],
            (0..4).map(|_| SparseVec::new()).collect(),
            (0..2).map(|_| Tensor2::new()).collect(),
            None,
            None,
        );
        assert!(r.is_err());
    }
}
