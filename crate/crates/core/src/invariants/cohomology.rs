//! Hochschild cohomology of the underlying algebra with coefficients in
//! the ground field, both module actions factoring through the counit.
//!
//! The normalized bar cochain complex does the work: degree-i cochains are
//! functionals on the i-th tensor power of the augmentation ideal, and
//! because the coefficients are trivial the differential keeps only the
//! interior terms
//!
//! ```text
//! (δf)(a₁,…,aᵢ₊₁) = Σⱼ (−1)ʲ f(a₁,…,aⱼaⱼ₊₁,…,aᵢ₊₁).
//! ```
//!
//! All ranks are computed exactly over the cyclotomics. The products of
//! augmentation-ideal basis vectors are sparse for the algebras built
//! here, and the sparsity means columns from different graded pieces never
//! interact during elimination, so no explicit grading bookkeeping is
//! needed to keep the reduction fast.

use alloc::vec::Vec;

use crate::hopf::HopfStructure;
use crate::linalg::{RowReducer, SparseVec};
use crate::scalar::CycScalar;
use crate::{capacity_err, domain_err, Result};

/// Default ceiling on dim(H)^(i+1), the number of cochain coordinates the
/// top differential touches.
pub const HOCHSCHILD_CAP: usize = 1 << 20;

/// dim Hⁱ(H, k) under the default capacity.
pub fn hochschild_dim(h: &HopfStructure, i: usize) -> Result<usize> {
    hochschild_dim_capped(h, i, HOCHSCHILD_CAP)
}

/// dim Hⁱ(H, k) under an explicit capacity.
pub fn hochschild_dim_capped(h: &HopfStructure, i: usize, cap: usize) -> Result<usize> {
    let table = hochschild_table_capped(h, i, cap)?;
    Ok(*table.last().expect("the table carries degrees 0..=i"))
}

/// (H⁰, …, Hᵐᵃˣ) in one pass, sharing the differential ranks between
/// neighboring degrees.
pub fn hochschild_table(h: &HopfStructure, max: usize) -> Result<Vec<usize>> {
    hochschild_table_capped(h, max, HOCHSCHILD_CAP)
}

/// [`hochschild_table`] under an explicit capacity.
pub fn hochschild_table_capped(
    h: &HopfStructure,
    max: usize,
    cap: usize,
) -> Result<Vec<usize>> {
    let mut size: u128 = 1;
    for _ in 0..=max {
        size = size.saturating_mul(h.dim() as u128);
        if size > cap as u128 {
            return capacity_err(alloc::format!(
                "degree {max} needs dim^{} = {} cochain coordinates, over the cap {cap}",
                max + 1,
                size
            ));
        }
    }
    let complex = BarComplex::new(h)?;
    let ranks: Vec<usize> = (0..=max).map(|k| complex.rank_d(k)).collect();
    let mut out = Vec::with_capacity(max + 1);
    for i in 0..=max {
        let cochains = complex.m.pow(i as u32);
        let below = if i == 0 { 0 } else { ranks[i - 1] };
        out.push(cochains - ranks[i] - below);
    }
    Ok(out)
}

/// The reduced multiplication data of the augmentation ideal. Its basis is
/// āᵦ = b − ε(b)·1 over the non-unit basis elements b, and `hits[d]` lists
/// every pair (x, y) whose product āₓā_y has a nonzero ā_d-coefficient,
/// with that coefficient. (The constant term of such a product vanishes
/// because the ideal is closed under multiplication.)
struct BarComplex {
    m: usize,
    hits: Vec<Vec<(usize, usize, CycScalar)>>,
}

impl BarComplex {
    fn new(h: &HopfStructure) -> Result<Self> {
        let dim = h.dim();
        if h.unit().len() != 1 || h.unit().values().next() != Some(&CycScalar::one()) {
            return domain_err(
                "the bar complex needs the unit to be a single basis element",
            );
        }
        let p = *h.unit().keys().next().expect("checked nonempty");
        let reduced: Vec<usize> = (0..dim).filter(|&b| b != p).collect();
        let mut back = alloc::vec![usize::MAX; dim];
        for (r, &b) in reduced.iter().enumerate() {
            back[b] = r;
        }
        let m = dim - 1;
        let mut hits = alloc::vec![Vec::new(); m];
        for (rx, &x) in reduced.iter().enumerate() {
            for (ry, &y) in reduced.iter().enumerate() {
                let mut row = SparseVec::new();
                for (&d, c) in h.mul_basis(x, y) {
                    if d != p {
                        add_at(&mut row, back[d], c.clone());
                    }
                }
                let ey = h.counit_basis(y);
                if !ey.is_zero() {
                    add_at(&mut row, rx, -ey);
                }
                let ex = h.counit_basis(x);
                if !ex.is_zero() {
                    add_at(&mut row, ry, -ex);
                }
                for (&rd, c) in &row {
                    hits[rd].push((rx, ry, c.clone()));
                }
            }
        }
        Ok(BarComplex { m, hits })
    }

    /// Exact rank of the degree-k differential Cᵏ → Cᵏ⁺¹. Each basis
    /// functional's image is assembled from the product table and fed to a
    /// sparse row reduction; tuples are encoded base-m.
    fn rank_d(&self, k: usize) -> usize {
        if k == 0 {
            // C⁰ is the scalars, and δ of a constant functional vanishes
            // termwise with trivial coefficients.
            return 0;
        }
        let m = self.m;
        let mut reducer = RowReducer::new();
        let mut t = alloc::vec![0usize; k];
        loop {
            let mut col = SparseVec::new();
            for j in 0..k {
                // slot j of the (k+1)-tuple gets replaced by a product
                // pair; the summand sign is (−1)^(j+1).
                for &(x, y, ref c) in &self.hits[t[j]] {
                    let mut code = 0usize;
                    for pos in 0..=k {
                        let v = match pos.cmp(&j) {
                            core::cmp::Ordering::Less => t[pos],
                            core::cmp::Ordering::Equal => x,
                            core::cmp::Ordering::Greater => {
                                if pos == j + 1 {
                                    y
                                } else {
                                    t[pos - 1]
                                }
                            }
                        };
                        code = code * m + v;
                    }
                    let signed = if j % 2 == 0 { -c } else { c.clone() };
                    add_at(&mut col, code, signed);
                }
            }
            reducer.insert(col);
            // advance the tuple odometer
            let mut pos = k;
            loop {
                if pos == 0 {
                    return reducer.rank();
                }
                pos -= 1;
                t[pos] += 1;
                if t[pos] < m {
                    break;
                }
                t[pos] = 0;
            }
        }
    }
}

fn add_at(v: &mut SparseVec, k: usize, c: CycScalar) {
    let cur = v.remove(&k).unwrap_or_else(CycScalar::zero);
    let new = &cur + &c;
    if !new.is_zero() {
        v.insert(k, new);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{FamilyAlgebra, FamilyDatum};
    use crate::group::FiniteGroup;
    use crate::hopf::group_algebra;
    use crate::linalg::Mat;
    use crate::rep::Rep;
    use alloc::vec;

    #[test]
    fn group_algebras_are_rigid_in_low_degree() {
        // Semisimple algebra: the augmentation ideal squares to itself and
        // everything above degree zero dies.
        let g = FiniteGroup::product_of_cyclics(&[4]).unwrap();
        let h = group_algebra(&g);
        assert_eq!(hochschild_table(&h, 2).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn the_eight_dimensional_smash_product_matches_its_invariants() {
        let g = FiniteGroup::product_of_cyclics(&[4]).unwrap();
        let rep = Rep::from_character_weights(&g, &[vec![1]]).unwrap();
        let datum = FamilyDatum::new(rep, 2, Mat::zeros(1, 1)).unwrap();
        let fam = FamilyAlgebra::build(datum).unwrap();
        assert_eq!(hochschild_table(fam.hopf(), 2).unwrap(), vec![1, 0, 0]);
        // The comparison column computed independently: dim (SⁱV*)^G.
        let dual = fam.datum().rep().dual();
        for i in 0..=2usize {
            let fixed = dual.symmetric_power(i).invariant_subspace().len();
            assert_eq!(hochschild_dim(fam.hopf(), i).unwrap(), fixed);
        }
    }

    #[test]
    fn the_capacity_gate_names_the_degree() {
        let g = FiniteGroup::product_of_cyclics(&[4]).unwrap();
        let h = group_algebra(&g);
        let err = hochschild_table_capped(&h, 3, 100).unwrap_err();
        let msg = alloc::format!("{err}");
        assert!(msg.contains("degree 3"), "{msg}");
    }

    #[test]
    fn functional_algebras_without_basis_units_are_rejected() {
        let g = FiniteGroup::product_of_cyclics(&[3]).unwrap();
        let dual = crate::hopf::dual::dualize(&group_algebra(&g)).unwrap();
        assert!(hochschild_dim(&dual, 1).is_err());
    }
}
