//! The dual Hopf algebra on the dual basis.
//!
//! Finite dimension makes this pure bookkeeping: multiplication of dual
//! functionals transposes the coproduct tables, comultiplication transposes
//! the product, and the unit/counit swap roles. Only ordinary (all-even)
//! algebras are handled — dualizing a superalgebra would land in a different
//! category, and nothing downstream needs it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::hopf::{HopfStructure, Tensor2};
use crate::linalg::SparseVec;
use crate::scalar::CycScalar;
use crate::{domain_err, Result};

/// Build H* on the basis of dual functionals δᵢ (labeled `d_` + the original
/// label). The antipode dualizes to the transpose when present; an attached
/// R-matrix has no canonical image here and is dropped.
pub fn dualize(h: &HopfStructure) -> Result<HopfStructure> {
    if h.is_super() {
        return domain_err("dualization is implemented for ordinary Hopf algebras only");
    }
    let dim = h.dim();
    let labels: Vec<String> = h.labels().iter().map(|l| format!("d_{l}")).collect();

    // Unit of H* is the counit of H.
    let mut unit = SparseVec::new();
    for i in 0..dim {
        let c = h.counit_basis(i);
        if !c.is_zero() {
            unit.insert(i, c.clone());
        }
    }
    // Counit of H* evaluates at the unit of H.
    let counit: Vec<CycScalar> = (0..dim)
        .map(|i| h.unit().get(&i).cloned().unwrap_or_else(CycScalar::zero))
        .collect();

    // (δᵢ δⱼ)(x) = (δᵢ⊗δⱼ)(Δx): transpose the coproduct tables.
    let mut mult = alloc::vec![SparseVec::new(); dim * dim];
    for k in 0..dim {
        for (&[i, j], c) in h.comul_basis(k) {
            mult[i * dim + j].insert(k, c.clone());
        }
    }
    // Δ(δₖ)(x⊗y) = δₖ(xy): transpose the product tables.
    let mut comult = alloc::vec![Tensor2::new(); dim];
    for i in 0..dim {
        for j in 0..dim {
            for (&k, c) in h.mul_basis(i, j) {
                comult[k].insert([i, j], c.clone());
            }
        }
    }
    let antipode = h.antipode_table().map(|table| {
        let mut out = alloc::vec![SparseVec::new(); dim];
        for (j, row) in table.iter().enumerate() {
            for (&i, c) in row {
                out[i].insert(j, c.clone());
            }
        }
        out
    });

    let dual = HopfStructure::new(
        labels,
        alloc::vec![false; dim],
        unit,
        counit,
        mult,
        comult,
        antipode,
        None,
    )?;
    crate::hopf::verify::expect_verified(&dual, "the dual structure")?;
    Ok(dual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::group_algebra;
    use crate::hopf::verify::verify_hopf;

    #[test]
    fn dual_of_a_group_algebra_is_the_function_algebra() {
        let g = FiniteGroup::product_of_cyclics(&[4]).unwrap();
        let h = group_algebra(&g);
        let d = dualize(&h).unwrap();
        assert!(verify_hopf(&d).is_ok());
        // Functions multiply pointwise: δᵢ δⱼ = 0 for i ≠ j, δᵢ² = δᵢ.
        for i in 0..4 {
            for j in 0..4 {
                let p = d.mul_basis(i, j);
                if i == j {
                    assert_eq!(p.len(), 1);
                    assert_eq!(p[&i], CycScalar::one());
                } else {
                    assert!(p.is_empty());
                }
            }
        }
        // The unit of the function algebra is the constant function 1.
        assert_eq!(d.unit().len(), 4);
        assert_eq!(d.label(1), "d_a");
        // Dual of a cocommutative algebra is commutative and vice versa.
        assert!(d.is_commutative());
        assert!(d.is_cocommutative()); // abelian group
    }

    #[test]
    fn double_dual_restores_the_tables() {
        let g = FiniteGroup::product_of_cyclics(&[4, 2]).unwrap();
        let h = group_algebra(&g);
        let dd = dualize(&dualize(&h).unwrap()).unwrap();
        assert_eq!(dd.unit(), h.unit());
        for i in 0..h.dim() {
            assert_eq!(dd.comul_basis(i), h.comul_basis(i));
            assert_eq!(dd.counit_basis(i), h.counit_basis(i));
            for j in 0..h.dim() {
                assert_eq!(dd.mul_basis(i, j), h.mul_basis(i, j));
            }
            assert_eq!(
                dd.antipode_table().unwrap()[i],
                h.antipode_table().unwrap()[i]
            );
        }
    }

    #[test]
    fn super_input_is_rejected() {
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
        assert!(dualize(&odd).is_err());
    }
}
