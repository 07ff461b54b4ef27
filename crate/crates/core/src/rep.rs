//! Representations of finite abelian groups on exact vector spaces.
//!
//! The common case is a direct sum of characters: each basis line carries a
//! weight vector against the cyclic factors, and every image matrix is
//! diagonal in roots of unity. Arbitrary invertible generator images are also
//! supported; both paths produce the same table-of-matrices representation.
//!
//! Beyond the images themselves, this module computes the derived objects the
//! rest of the engine needs: dual representations, symmetric powers on the
//! monomial basis, invariant subspaces via the averaging projector, and
//! intertwiner spaces between representations.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::group::FiniteGroup;
use crate::linalg::{Mat, RowReducer, SparseVec};
use crate::scalar::{rat, CycScalar};
use crate::{domain_err, Result};

/// A representation of a [`FiniteGroup`]: one invertible matrix per element.
#[derive(Clone, Debug)]
pub struct Rep {
    group: FiniteGroup,
    mats: Vec<Mat>,
}

impl Rep {
    /// Direct sum of characters. `weights[k]` is the weight vector of the
    /// k-th basis line: the generator of factor j acts on it by
    /// ζ_{m_j}^{weights[k][j]}.
    pub fn from_character_weights(group: &FiniteGroup, weights: &[Vec<i64>]) -> Result<Self> {
        let nfac = group.factor_orders().len();
        for w in weights {
            if w.len() != nfac {
                return domain_err("weight vector arity must match the cyclic factors");
            }
        }
        let dim = weights.len();
        let mut mats = Vec::with_capacity(group.order());
        for g in group.elements() {
            let exps = group.exponents(g);
            let mut m = Mat::zeros(dim, dim);
            for (k, w) in weights.iter().enumerate() {
                let mut entry = CycScalar::one();
                for (j, (&wj, &xj)) in w.iter().zip(&exps).enumerate() {
                    let order = group.factor_orders()[j];
                    let wj = wj.rem_euclid(order as i64);
                    let root =
                        CycScalar::try_root_of_unity(order, wj * xj as i64)?;
                    entry = &entry * &root;
                }
                m.set(k, k, entry);
            }
            mats.push(m);
        }
        Ok(Rep { group: group.clone(), mats })
    }

    /// Representation from one invertible matrix per cyclic generator. The
    /// images must commute pairwise and satisfy the factor-order relations;
    /// on an abelian product that is exactly what makes the extension to the
    /// whole group a homomorphism.
    pub fn from_generator_matrices(group: &FiniteGroup, gens: &[Mat]) -> Result<Self> {
        let nfac = group.factor_orders().len();
        if gens.len() != nfac {
            return domain_err("need one generator image per cyclic factor");
        }
        let dim = gens.first().map_or(0, Mat::nrows);
        for m in gens {
            if m.nrows() != dim || m.ncols() != dim {
                return domain_err("generator images must be square of equal size");
            }
            if m.try_inverse().is_none() {
                return domain_err("generator images must be invertible");
            }
        }
        for (j, m) in gens.iter().enumerate() {
            let order = group.factor_orders()[j];
            let mut p = Mat::identity(dim);
            for _ in 0..order {
                p = &p * m;
            }
            if p != Mat::identity(dim) {
                return domain_err("generator image violates its factor order");
            }
            for other in &gens[j + 1..] {
                if &(m * other) != &(other * m) {
                    return domain_err("generator images must commute");
                }
            }
        }
        let mut mats = Vec::with_capacity(group.order());
        for g in group.elements() {
            let exps = group.exponents(g);
            let mut m = Mat::identity(dim);
            for (j, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    m = &m * &gens[j];
                }
            }
            mats.push(m);
        }
        Ok(Rep { group: group.clone(), mats })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.mats.first().map_or(0, Mat::nrows)
    }

    pub fn matrix(&self, g: usize) -> &Mat {
        &self.mats[g]
    }

    /// Full audit that g ↦ ρ(g) is multiplicative with ρ(1) = I. Quadratic
    /// in the group order; the constructors already guarantee it, this is
    /// for validation reports.
    pub fn verify_homomorphism(&self) -> Result<()> {
        if self.mats[self.group.identity()] != Mat::identity(self.dim()) {
            return domain_err("identity does not act as the identity matrix");
        }
        for a in self.group.elements() {
            for b in self.group.elements() {
                let prod = self.matrix(a) * self.matrix(b);
                if prod != *self.matrix(self.group.mul(a, b)) {
                    return domain_err("representation is not multiplicative");
                }
            }
        }
        Ok(())
    }

    /// Dual (contragredient) representation, g ↦ transpose of ρ(g⁻¹).
    pub fn dual(&self) -> Self {
        let mats = self
            .group
            .elements()
            .map(|g| self.matrix(self.group.inv(g)).transpose())
            .collect();
        Rep { group: self.group.clone(), mats }
    }

    /// Precompose with a group automorphism given as a permutation:
    /// the result sends g to ρ(φ(g)).
    pub fn pullback(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.group.order(), "permutation arity mismatch");
        let mats = self.group.elements().map(|g| self.mats[perm[g]].clone()).collect();
        Rep { group: self.group.clone(), mats }
    }

    /// If g acts by a scalar matrix λI, return λ.
    pub fn acts_as_scalar(&self, g: usize) -> Option<CycScalar> {
        let m = self.matrix(g);
        let dim = self.dim();
        if dim == 0 {
            return Some(CycScalar::one());
        }
        let lambda = m.at(0, 0).clone();
        for i in 0..dim {
            for j in 0..dim {
                let expect = if i == j { lambda.clone() } else { CycScalar::zero() };
                if *m.at(i, j) != expect {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    /// The induced representation on the degree-d symmetric power, written
    /// on the monomial basis from [`multiset_basis`].
    pub fn symmetric_power(&self, degree: usize) -> Self {
        let dim = self.dim();
        let basis = multiset_basis(dim, degree);
        let index: BTreeMap<Vec<u32>, usize> =
            basis.iter().cloned().zip(0..).collect();
        let mats = self
            .group
            .elements()
            .map(|g| {
                let a = self.matrix(g);
                let mut out = Mat::zeros(basis.len(), basis.len());
                for (col, mono) in basis.iter().enumerate() {
                    // Expand prod_i (A e_i)^{mono_i} as a polynomial in the
                    // target monomial basis.
                    let mut poly: BTreeMap<Vec<u32>, CycScalar> = BTreeMap::new();
                    poly.insert(vec![0u32; dim], CycScalar::one());
                    for (i, &mult) in mono.iter().enumerate() {
                        for _ in 0..mult {
                            let mut next: BTreeMap<Vec<u32>, CycScalar> = BTreeMap::new();
                            for (mexp, c) in &poly {
                                for m in 0..dim {
                                    let aij = a.at(m, i);
                                    if aij.is_zero() {
                                        continue;
                                    }
                                    let mut e = mexp.clone();
                                    e[m] += 1;
                                    let add = c * aij;
                                    match next.get_mut(&e) {
                                        Some(cur) => *cur = &*cur + &add,
                                        None => {
                                            next.insert(e, add);
                                        }
                                    }
                                }
                            }
                            poly = next;
                        }
                    }
                    for (mexp, c) in poly {
                        if !c.is_zero() {
                            out.set(index[&mexp], col, c);
                        }
                    }
                }
                out
            })
            .collect();
        Rep { group: self.group.clone(), mats }
    }

    /// Basis of the fixed space V^G, computed from the averaging projector
    /// P = (1/|G|) Σ ρ(g) as the kernel of I - P.
    pub fn invariant_subspace(&self) -> Vec<Vec<CycScalar>> {
        let dim = self.dim();
        let mut p = Mat::zeros(dim, dim);
        for g in self.group.elements() {
            p = p.add(self.matrix(g));
        }
        p = p.scale(&CycScalar::from_rat(rat(1, self.group.order() as i64)));
        Mat::identity(dim).sub(&p).nullspace()
    }
}

/// Exponent vectors of length `dim` summing to `degree`, lexicographically
/// ordered: the monomial basis of the degree-d symmetric power.
pub fn multiset_basis(dim: usize, degree: usize) -> Vec<Vec<u32>> {
    fn rec(dim: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if dim == 1 {
            let mut v = prefix.clone();
            v.push(degree);
            out.push(v);
            return;
        }
        for take in 0..=degree {
            prefix.push(take);
            rec(dim - 1, degree - take, prefix, out);
            prefix.pop();
        }
    }
    if dim == 0 {
        return if degree == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(dim, degree as u32, &mut Vec::new(), &mut out);
    out
}

/// Basis of the intertwiner space { T : T ρ_from(g) = ρ_to(g) T for all g },
/// as matrices of shape dim(to) x dim(from).
pub fn intertwiners(from: &Rep, to: &Rep) -> Vec<Mat> {
    assert_eq!(from.group(), to.group(), "representations of different groups");
    let (df, dt) = (from.dim(), to.dim());
    let unknowns = dt * df;
    let mut red = RowReducer::new();
    for g in from.group().elements() {
        let a = to.matrix(g);
        let b = from.matrix(g);
        // Equation (i, j): sum_k a_{ik} T_{kj} - T_{ik} b_{kj} = 0.
        for i in 0..dt {
            for j in 0..df {
                let mut row: SparseVec = BTreeMap::new();
                for k in 0..dt {
                    let c = a.at(i, k);
                    if !c.is_zero() {
                        let idx = k * df + j;
                        let cur = row.remove(&idx).unwrap_or_else(CycScalar::zero);
                        let v = &cur + c;
                        if !v.is_zero() {
                            row.insert(idx, v);
                        }
                    }
                }
                for k in 0..df {
                    let c = b.at(k, j);
                    if !c.is_zero() {
                        let idx = i * df + k;
                        let cur = row.remove(&idx).unwrap_or_else(CycScalar::zero);
                        let v = &cur - c;
                        if !v.is_zero() {
                            row.insert(idx, v);
                        }
                    }
                }
                red.insert(row);
            }
        }
    }
    red.kernel_basis(unknowns)
        .into_iter()
        .map(|sv| {
            let mut t = Mat::zeros(dt, df);
            for (idx, v) in sv {
                t.set(idx / df, idx % df, v);
            }
            t
        })
        .collect()
}
