//! Structural invariants of built family members: the rank profile that
//! pins the coalgebra type, pointedness, grouplike and skew-primitive
//! censuses, the Clifford relations of the dual blocks, Hochschild
//! cohomology of the underlying algebra, and the orbit analysis of
//! lifting triples.
//!
//! Everything here is exact. The only floating point in the crate lives in
//! [`fp::fp_dimension`], and there only as a cross-check against an exact
//! eigenvector identity.

pub mod clifford;
pub mod cohomology;
pub mod fp;
pub mod moduli;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::family::{FamilyAlgebra, FamilyDatum};
use crate::hopf::{HopfStructure, Tensor2};
use crate::linalg::{RowReducer, SparseVec};
use crate::rep::multiset_basis;
use crate::scalar::{rat, CycScalar};
use crate::{internal_err, Result};

/// The multiset of ranks of B − Bʰ over the cosets of the central
/// involution. It is constant across equivalent lifting data and separates
/// coalgebra structures that raw dimension counts cannot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraType(Vec<usize>);

impl CoalgebraType {
    /// The ranks in increasing order, one per coset.
    pub fn ranks(&self) -> &[usize] {
        &self.0
    }
}

impl core::fmt::Display for CoalgebraType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

/// The rank of B − Bʰ for one representative of every coset, identity
/// coset first. The difference is insensitive to which representative is
/// chosen because conjugating by the central involution negates ρ(g) and
/// B is quadratic.
pub fn coset_ranks(d: &FamilyDatum) -> Vec<(usize, usize)> {
    d.coset_reps()
        .iter()
        .map(|&g| (g, d.bform().sub(&d.b_conj(g)).rank()))
        .collect()
}

/// The sorted rank multiset of [`coset_ranks`]. Computable straight from
/// the datum — no 2^(dim V)·|G|-dimensional structure is ever built.
pub fn coalgebra_type(d: &FamilyDatum) -> CoalgebraType {
    let mut ranks: Vec<usize> = coset_ranks(d).into_iter().map(|(_, r)| r).collect();
    ranks.sort_unstable();
    CoalgebraType(ranks)
}

/// Whether the member's coradical is a group algebra. True exactly when B
/// lies in the invariant part of the symmetric square of V. Decided twice
/// — once by membership of B in the fixed space of S²V, once from the
/// rank profile — and the two routes must agree.
pub fn is_pointed(d: &FamilyDatum) -> Result<bool> {
    let nv = d.nv();
    let monos = multiset_basis(nv, 2);
    let fixed = d.rep().symmetric_power(2).invariant_subspace();
    // Polarization dictionary from quadratic monomials to symmetric
    // matrices: xᵢ² sits on the diagonal, xᵢxⱼ splits across (i,j) and
    // (j,i). Matrices are flattened row-major for the span test.
    let half = CycScalar::from_rat(rat(1, 2));
    let mut span = RowReducer::new();
    for w in &fixed {
        let mut flat = SparseVec::new();
        for (k, mono) in monos.iter().enumerate() {
            if w[k].is_zero() {
                continue;
            }
            let support: Vec<usize> = mono
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect();
            match support.as_slice() {
                [i] => {
                    flat.insert(i * nv + i, w[k].clone());
                }
                [i, j] => {
                    let c = &w[k] * &half;
                    flat.insert(i * nv + j, c.clone());
                    flat.insert(j * nv + i, c);
                }
                _ => {
                    return internal_err("a degree-2 monomial touching 3+ variables")
                }
            }
        }
        span.insert(flat);
    }
    let mut b_flat = SparseVec::new();
    for i in 0..nv {
        for j in 0..nv {
            let c = d.bform().at(i, j);
            if !c.is_zero() {
                b_flat.insert(i * nv + j, c.clone());
            }
        }
    }
    let direct = span.contains(&b_flat);
    let profile = coset_ranks(d).iter().all(|&(_, r)| r == 0);
    if direct != profile {
        return internal_err("the two pointedness computations disagree");
    }
    Ok(direct)
}

/// Every grouplike basis element of a built member, each verified by
/// Δg = g⊗g and ε(g) = 1 on the finished tables. The census is checked
/// complete against the rank profile: the dual of the block over a coset
/// h is a Clifford algebra whose scalar characters exist precisely when
/// B − Bʰ vanishes, two per such coset, so nothing outside the basis can
/// hide.
pub fn grouplike_census(fam: &FamilyAlgebra) -> Result<Vec<usize>> {
    let h = fam.hopf();
    let one = CycScalar::one();
    let mut found = Vec::new();
    for i in 0..h.dim() {
        if h.counit_basis(i) != &one {
            continue;
        }
        let mut expect = Tensor2::new();
        expect.insert([i, i], one.clone());
        if h.comul_basis(i) == &expect {
            found.push(i);
        }
    }
    let predicted = 2 * coset_ranks(fam.datum())
        .iter()
        .filter(|&&(_, r)| r == 0)
        .count();
    if found.len() != predicted {
        return internal_err(alloc::format!(
            "{} grouplike basis elements where the rank profile predicts {predicted}",
            found.len()
        ));
    }
    Ok(found)
}

/// A basis of { x : Δx = x⊗1 + g⊗x } for a grouplike basis element g,
/// from one exact nullspace computation. The span of 1 − g always
/// qualifies; dimensions beyond that are genuinely skew-primitive
/// directions.
pub fn skew_primitive_space(h: &HopfStructure, g: usize) -> Vec<SparseVec> {
    let dim = h.dim();
    let mut rows: BTreeMap<[usize; 2], SparseVec> = BTreeMap::new();
    let mut touch = |key: [usize; 2], col: usize, c: CycScalar| {
        let row = rows.entry(key).or_default();
        let cur = row.remove(&col).unwrap_or_else(CycScalar::zero);
        let new = &cur + &c;
        if !new.is_zero() {
            row.insert(col, new);
        }
    };
    // One linear condition per tensor position (i, j):
    //   Σ_b x_b Δ(b)[i,j]  −  xᵢ·1ⱼ  −  [i = g]·xⱼ  = 0.
    for b in 0..dim {
        for (&k, c) in h.comul_basis(b) {
            touch(k, b, c.clone());
        }
    }
    for i in 0..dim {
        for (&j, c) in h.unit() {
            touch([i, j], i, -c);
        }
    }
    for j in 0..dim {
        touch([g, j], j, -CycScalar::one());
    }
    let mut reducer = RowReducer::new();
    for row in rows.into_values() {
        reducer.insert(row);
    }
    reducer.kernel_basis(dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{presets, FamilyAlgebra};
    use crate::group::FiniteGroup;
    use crate::linalg::Mat;
    use crate::rep::Rep;
    use alloc::format;
    use alloc::vec;

    fn lam(l1: i64, l2: i64, l3: i64) -> [CycScalar; 3] {
        [
            CycScalar::from_int(l1),
            CycScalar::from_int(l2),
            CycScalar::from_int(l3),
        ]
    }

    fn line_datum(b: i64) -> FamilyDatum {
        let g = FiniteGroup::product_of_cyclics(&[2]).unwrap();
        let rep = Rep::from_character_weights(&g, &[vec![1]]).unwrap();
        let mut bform = Mat::zeros(1, 1);
        bform.set(0, 0, CycScalar::from_int(b));
        FamilyDatum::new(rep, 1, bform).unwrap()
    }

    #[test]
    fn rank_profiles_of_the_first_family() {
        let t = |l: [CycScalar; 3]| coalgebra_type(&presets::case1(&l).unwrap());
        assert_eq!(t(lam(1, 0, 0)).ranks(), &[0, 1, 1, 1]);
        assert_eq!(t(lam(1, 1, 1)).ranks(), &[0, 2, 2, 2]);
        assert_eq!(t(lam(0, 0, 0)).ranks(), &[0, 0, 0, 0]);
        assert_eq!(format!("{}", t(lam(1, 0, 0))), "{0, 1, 1, 1}");
    }

    #[test]
    fn pointedness_follows_the_invariant_form_locus() {
        // No invariant symmetric square here, so only B = 0 is pointed.
        assert!(is_pointed(&presets::case1(&lam(0, 0, 0)).unwrap()).unwrap());
        assert!(!is_pointed(&presets::case1(&lam(1, 1, 1)).unwrap()).unwrap());
        assert!(!is_pointed(&presets::case1(&lam(0, 1, 0)).unwrap()).unwrap());
        // On the line, S²V is all invariant: every B stays pointed.
        assert!(is_pointed(&line_datum(0)).unwrap());
        assert!(is_pointed(&line_datum(3)).unwrap());
    }

    #[test]
    fn grouplikes_pair_off_over_rigid_cosets() {
        let fam = FamilyAlgebra::build(presets::case1(&lam(1, 1, 1)).unwrap()).unwrap();
        let gl = grouplike_census(&fam).unwrap();
        // Only the identity coset survives a full-rank twist difference:
        // the grouplikes are 1 and u.
        assert_eq!(gl.len(), 2);
        assert_eq!(fam.hopf().label(gl[0]), "1");
        assert_eq!(fam.hopf().label(gl[1]), "a^4");
        // At B = 0 every coset survives and the census is the whole group.
        let flat = FamilyAlgebra::build(presets::case1(&lam(0, 0, 0)).unwrap()).unwrap();
        assert_eq!(grouplike_census(&flat).unwrap().len(), 8);
    }

    #[test]
    fn skew_primitives_concentrate_at_the_involution() {
        let fam = FamilyAlgebra::build(presets::case1(&lam(1, 1, 1)).unwrap()).unwrap();
        let h = fam.hopf();
        let u = fam.datum().u_index();
        let unit = fam.smash().unit_index();
        // At u: the trivial direction 1 − u plus one per generator of V.
        assert_eq!(skew_primitive_space(h, u).len(), 3);
        // At the identity: no primitives at all.
        assert!(skew_primitive_space(h, unit).is_empty());
    }

    #[test]
    fn skew_primitive_count_is_one_elsewhere() {
        let fam = FamilyAlgebra::build(presets::case1(&lam(0, 0, 0)).unwrap()).unwrap();
        let h = fam.hopf();
        for &g in grouplike_census(&fam).unwrap().iter() {
            let expect = match h.label(g) {
                "1" => 0,
                "a^4" => 3,
                _ => 1,
            };
            assert_eq!(skew_primitive_space(h, g).len(), expect, "at {}", h.label(g));
        }
    }
}
