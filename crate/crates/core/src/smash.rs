//! The supergroup algebra C[G] ⋉ ΛV and its tensor powers.
//!
//! Basis elements are pairs (g, S): a group element and a subset of the
//! exterior generators, encoded as `g * 2^n + mask`. Group elements are even,
//! each e_i is odd, and the product rule
//!
//! ```text
//! (g, α)(h, β) = (gh, ρ(h⁻¹)(α) ∧ β)
//! ```
//!
//! makes the group action internal: h e_i h⁻¹ = ρ(h)(e_i). For non-diagonal
//! representations the exterior action expands through minors of ρ(h⁻¹).
//!
//! On top of the algebra this module provides the untwisted Hopf
//! superstructure (group elements grouplike, generators primitive), and
//! Koszul-signed arithmetic in tensor powers: products, nilpotent
//! exponentials and unipotent inverses. Those are the raw materials for the
//! twisted coproducts built elsewhere.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::group::FiniteGroup;
use crate::linalg::{Mat, SparseVec};
use crate::rep::Rep;
use crate::scalar::{rat, CycScalar, Rat};
use crate::{capacity_err, domain_err, Result};

/// Sparse element of the smash algebra: basis index to coefficient.
pub type SuperVec = SparseVec;

/// Sparse element of the K-th tensor power, keyed by basis index tuples.
pub type TensorElem<const K: usize> = BTreeMap<[usize; K], CycScalar>;

/// Total dimension cap for a smash algebra; everything downstream holds
/// structure constants of this size squared.
pub const SMASH_DIM_CAP: usize = 4096;

/// Wedge two disjoint index masks: returns the joined mask and the sign from
/// sorting the concatenation of the two ascending runs, or `None` when the
/// masks overlap (the product is zero).
pub fn wedge_masks(a: u32, b: u32) -> Option<(i32, u32)> {
    if a & b != 0 {
        return None;
    }
    // Inversions: pairs i in a, j in b with i > j.
    let mut inversions = 0u32;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    Some((if inversions % 2 == 0 { 1 } else { -1 }, a | b))
}

/// Action of a matrix on the exterior power monomial e_mask: the coefficient
/// of e_target is the minor of rows `target`, columns `mask`.
fn exterior_action(m: &Mat, mask: u32, nv: usize) -> Vec<(u32, CycScalar)> {
    let k = mask.count_ones() as usize;
    if k == 0 {
        return alloc::vec![(0, CycScalar::one())];
    }
    let cols: Vec<usize> = (0..nv).filter(|i| mask >> i & 1 == 1).collect();
    let mut out = Vec::new();
    // All targets of the same size; for diagonal matrices only target ==
    // mask survives, and the minor degenerates to a product of entries.
    for target in 0u32..(1 << nv) {
        if target.count_ones() as usize != k {
            continue;
        }
        let rows: Vec<usize> = (0..nv).filter(|i| target >> i & 1 == 1).collect();
        let mut sub = Mat::zeros(k, k);
        let mut any = false;
        for (r, &i) in rows.iter().enumerate() {
            for (c, &j) in cols.iter().enumerate() {
                let v = m.at(i, j).clone();
                any |= !v.is_zero();
                sub.set(r, c, v);
            }
        }
        if !any {
            continue;
        }
        let det = sub.determinant();
        if !det.is_zero() {
            out.push((target, det));
        }
    }
    out
}

/// C[G] ⋉ ΛV with its basis codec and structure maps.
#[derive(Clone, Debug)]
pub struct SmashAlgebra {
    rep: Rep,
    nv: usize,
    dim: usize,
}

impl SmashAlgebra {
    /// Build from a representation; the group comes with it.
    pub fn new(rep: Rep) -> Result<Self> {
        let nv = rep.dim();
        if nv >= usize::BITS as usize - 1 {
            return domain_err("too many exterior generators");
        }
        let dim = rep
            .group()
            .order()
            .checked_mul(1usize << nv)
            .filter(|&d| d <= SMASH_DIM_CAP)
            .ok_or_else(|| {
                crate::Error::Capacity(format!(
                    "smash algebra dimension exceeds the cap {SMASH_DIM_CAP}"
                ))
            })?;
        Ok(SmashAlgebra { rep, nv, dim })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.rep.group()
    }

    pub fn rep(&self) -> &Rep {
        &self.rep
    }

    /// Number of exterior generators.
    pub fn gens(&self) -> usize {
        self.nv
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index(&self, g: usize, mask: u32) -> usize {
        debug_assert!(g < self.group().order());
        debug_assert!((mask as usize) < (1 << self.nv));
        (g << self.nv) | mask as usize
    }

    pub fn decode(&self, idx: usize) -> (usize, u32) {
        (idx >> self.nv, (idx & ((1 << self.nv) - 1)) as u32)
    }

    /// Parity: true for odd elements (odd number of exterior generators).
    pub fn parity(&self, idx: usize) -> bool {
        let (_, mask) = self.decode(idx);
        mask.count_ones() % 2 == 1
    }

    pub fn unit_index(&self) -> usize {
        self.index(self.group().identity(), 0)
    }

    /// Index of a plain group element (g, ∅).
    pub fn group_index(&self, g: usize) -> usize {
        self.index(g, 0)
    }

    pub fn basis_name(&self, idx: usize) -> String {
        let (g, mask) = self.decode(idx);
        let gname = self.group().element_name(g);
        if mask == 0 {
            return gname;
        }
        let mut ename = String::new();
        for i in 0..self.nv {
            if mask >> i & 1 == 1 {
                ename.push_str(&format!("e{}", i + 1));
            }
        }
        if g == self.group().identity() {
            ename
        } else {
            format!("{gname}*{ename}")
        }
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> SuperVec {
        let (g, s) = self.decode(i);
        let (h, t) = self.decode(j);
        let gh = self.group().mul(g, h);
        let m = self.rep.matrix(self.group().inv(h));
        let mut out: SuperVec = BTreeMap::new();
        for (target, minor) in exterior_action(m, s, self.nv) {
            if let Some((sign, joined)) = wedge_masks(target, t) {
                let mut coeff = minor;
                if sign < 0 {
                    coeff = -coeff;
                }
                let idx = self.index(gh, joined);
                match out.get_mut(&idx) {
                    Some(cur) => {
                        *cur = &*cur + &coeff;
                        if cur.is_zero() {
                            out.remove(&idx);
                        }
                    }
                    None => {
                        out.insert(idx, coeff);
                    }
                }
            }
        }
        out
    }

    /// Product of sparse elements.
    pub fn mul(&self, x: &SuperVec, y: &SuperVec) -> SuperVec {
        let mut out: SuperVec = BTreeMap::new();
        for (&i, a) in x {
            for (&j, b) in y {
                let ab = a * b;
                for (idx, c) in self.mul_basis(i, j) {
                    let add = &ab * &c;
                    match out.get_mut(&idx) {
                        Some(cur) => {
                            *cur = &*cur + &add;
                            if cur.is_zero() {
                                out.remove(&idx);
                            }
                        }
                        None => {
                            out.insert(idx, add);
                        }
                    }
                }
            }
        }
        out
    }

    /// Untwisted coproduct: group elements are grouplike, generators are
    /// primitive, and the extension to products is multiplicative in the
    /// signed tensor square.
    pub fn comul_untwisted(&self, idx: usize) -> TensorElem<2> {
        let (g, mask) = self.decode(idx);
        let gg = self.group_index(g);
        let mut acc: TensorElem<2> = BTreeMap::new();
        acc.insert([gg, gg], CycScalar::one());
        for i in 0..self.nv {
            if mask >> i & 1 == 0 {
                continue;
            }
            let ei = self.index(self.group().identity(), 1 << i);
            let one = self.unit_index();
            let mut prim: TensorElem<2> = BTreeMap::new();
            prim.insert([ei, one], CycScalar::one());
            prim.insert([one, ei], CycScalar::one());
            acc = tensor_mul(self, &acc, &prim);
        }
        acc
    }

    /// Counit: 1 on (g, ∅), 0 on anything carrying exterior generators.
    pub fn counit(&self, idx: usize) -> CycScalar {
        let (_, mask) = self.decode(idx);
        if mask == 0 {
            CycScalar::one()
        } else {
            CycScalar::zero()
        }
    }

    /// Untwisted antipode: S(g) = g⁻¹, S(e_i) = -e_i, extended as a signed
    /// anti-homomorphism. Closed form: S(g, e_S) = (-1)^|S| e_S · g⁻¹.
    pub fn antipode_untwisted(&self, idx: usize) -> SuperVec {
        let (g, mask) = self.decode(idx);
        let es = self.index(self.group().identity(), mask);
        let ginv = self.group_index(self.group().inv(g));
        let mut out = self.mul_basis(es, ginv);
        if mask.count_ones() % 2 == 1 {
            for v in out.values_mut() {
                *v = -&*v;
            }
        }
        out
    }
}

/// Koszul-signed product in the K-th tensor power:
/// (b_1 ⊗ ... ⊗ b_K)(c_1 ⊗ ... ⊗ c_K) picks up (-1)^{p(b_j) p(c_i)} for
/// every pair j > i.
pub fn tensor_mul<const K: usize>(
    alg: &SmashAlgebra,
    x: &TensorElem<K>,
    y: &TensorElem<K>,
) -> TensorElem<K> {
    let mut out: TensorElem<K> = BTreeMap::new();
    for (bs, a) in x {
        for (cs, b) in y {
            let mut sign = false;
            for j in 1..K {
                if alg.parity(bs[j]) {
                    for i in 0..j {
                        if alg.parity(cs[i]) {
                            sign = !sign;
                        }
                    }
                }
            }
            let mut coeff = a * b;
            if sign {
                coeff = -coeff;
            }
            // Expand the componentwise products term by term.
            let mut partial: Vec<([usize; K], CycScalar)> =
                alloc::vec![([0usize; K], coeff)];
            for k in 0..K {
                let factor = alg.mul_basis(bs[k], cs[k]);
                let mut next = Vec::with_capacity(partial.len() * factor.len());
                for (key, c) in &partial {
                    for (&idx, f) in &factor {
                        let mut nk = *key;
                        nk[k] = idx;
                        next.push((nk, c * f));
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            for (key, c) in partial {
                match out.get_mut(&key) {
                    Some(cur) => {
                        *cur = &*cur + &c;
                        if cur.is_zero() {
                            out.remove(&key);
                        }
                    }
                    None => {
                        if !c.is_zero() {
                            out.insert(key, c);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The identity of the K-th tensor power: 1 ⊗ ... ⊗ 1.
pub fn tensor_unit<const K: usize>(alg: &SmashAlgebra) -> TensorElem<K> {
    let mut t = BTreeMap::new();
    t.insert([alg.unit_index(); K], CycScalar::one());
    t
}

/// `dst += k * src` on tensor elements.
pub fn tensor_add_scaled<const K: usize>(
    dst: &mut TensorElem<K>,
    src: &TensorElem<K>,
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
                dst.insert(*key, add);
            }
        }
    }
}

/// exp of a nilpotent tensor: Σ t^k / k!. Errors if the powers have not
/// vanished after `max_pow` steps.
pub fn tensor_exp_nilpotent<const K: usize>(
    alg: &SmashAlgebra,
    t: &TensorElem<K>,
    max_pow: usize,
) -> Result<TensorElem<K>> {
    let mut acc = tensor_unit::<K>(alg);
    let mut power = tensor_unit::<K>(alg);
    let mut factorial = Rat::from_integer(1.into());
    for k in 1..=max_pow {
        power = tensor_mul(alg, &power, t);
        if power.is_empty() {
            return Ok(acc);
        }
        factorial = factorial * Rat::from_integer(BigInt::from(k));
        let inv_fact = CycScalar::from_rat(rat(1, 1) / &factorial);
        tensor_add_scaled(&mut acc, &power, &inv_fact);
    }
    capacity_err(format!("tensor is not nilpotent within {max_pow} powers"))
}

/// Inverse of c·(1⊗...⊗1) + N with N nilpotent, via the geometric series.
pub fn tensor_inv_unipotent<const K: usize>(
    alg: &SmashAlgebra,
    j: &TensorElem<K>,
    max_pow: usize,
) -> Result<TensorElem<K>> {
    let unit_key = [alg.unit_index(); K];
    let Some(c) = j.get(&unit_key).cloned() else {
        return domain_err("tensor has no unit component; cannot invert by series");
    };
    let c_inv = c.try_inv()?;
    // n = 1 - j/c, so j/c = 1 - n and (j/c)⁻¹ = Σ n^k.
    let mut n = tensor_unit::<K>(alg);
    tensor_add_scaled(&mut n, j, &-&c_inv);
    let mut acc = tensor_unit::<K>(alg);
    let mut power = tensor_unit::<K>(alg);
    for _ in 0..max_pow {
        power = tensor_mul(alg, &power, &n);
        if power.is_empty() {
            for v in acc.values_mut() {
                *v = &*v * &c_inv;
            }
            return Ok(acc);
        }
        tensor_add_scaled(&mut acc, &power, &CycScalar::one());
    }
    capacity_err(format!("tensor is not unipotent within {max_pow} powers"))
}

/// Apply a coproduct-like map to the first leg of a 2-tensor, producing a
/// 3-tensor: x ⊗ y ↦ f(x) ⊗ y.
pub fn expand_first_leg(
    t: &TensorElem<2>,
    mut f: impl FnMut(usize) -> TensorElem<2>,
) -> TensorElem<3> {
    let mut out: TensorElem<3> = BTreeMap::new();
    for (&[x, y], c) in t {
        for (&[a, b], d) in &f(x) {
            let add = c * d;
            let key = [a, b, y];
            match out.get_mut(&key) {
                Some(cur) => {
                    *cur = &*cur + &add;
                    if cur.is_zero() {
                        out.remove(&key);
                    }
                }
                None => {
                    out.insert(key, add);
                }
            }
        }
    }
    out
}

/// Apply a coproduct-like map to the second leg: x ⊗ y ↦ x ⊗ f(y).
pub fn expand_second_leg(
    t: &TensorElem<2>,
    mut f: impl FnMut(usize) -> TensorElem<2>,
) -> TensorElem<3> {
    let mut out: TensorElem<3> = BTreeMap::new();
    for (&[x, y], c) in t {
        for (&[a, b], d) in &f(y) {
            let add = c * d;
            let key = [x, a, b];
            match out.get_mut(&key) {
                Some(cur) => {
                    *cur = &*cur + &add;
                    if cur.is_zero() {
                        out.remove(&key);
                    }
                }
                None => {
                    out.insert(key, add);
                }
            }
        }
    }
    out
}

/// Widen a 2-tensor to a 3-tensor as t ⊗ 1.
pub fn widen_right(alg: &SmashAlgebra, t: &TensorElem<2>) -> TensorElem<3> {
    t.iter().map(|(&[a, b], c)| ([a, b, alg.unit_index()], c.clone())).collect()
}

/// Widen a 2-tensor to a 3-tensor as 1 ⊗ t.
pub fn widen_left(alg: &SmashAlgebra, t: &TensorElem<2>) -> TensorElem<3> {
    t.iter().map(|(&[a, b], c)| ([alg.unit_index(), a, b], c.clone())).collect()
}
