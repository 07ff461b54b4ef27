//! Orbit analysis of lifting triples (λ₁, λ₂, λ₃).
//!
//! Rescaling the two generators of V by t and s replaces the triple with
//! (t²λ₁, s²λ₂, tsλ₃), and swapping the generators exchanges λ₁ with λ₂.
//! Over an algebraically closed field every orbit of this action contains
//! exactly one of the representatives produced by [`ModuliPoint::canonical`]:
//! the zero pattern of the triple (up to the swap) is invariant, and inside
//! the fully supported stratum the single scalar λ₁λ₂/λ₃² separates orbits.
//! Equality of canonical forms therefore decides equivalence exactly, even
//! though the witnessing scalars t, s may live outside every cyclotomic
//! field.
//!
//! The same scaling action—and so the same decision procedure—applies to
//! each of the three named two-character presets.

use crate::family::presets::lambda_form;
use crate::linalg::Mat;
use crate::scalar::CycScalar;

/// A lifting triple. The entries are the two diagonal values and the
/// doubled off-diagonal value of the symmetric form they lift to.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuliPoint {
    pub lambda: [CycScalar; 3],
}

impl ModuliPoint {
    pub fn new(l1: CycScalar, l2: CycScalar, l3: CycScalar) -> Self {
        ModuliPoint {
            lambda: [l1, l2, l3],
        }
    }

    /// The symmetric form the triple lifts to: [[λ₁, λ₃/2], [λ₃/2, λ₂]].
    pub fn to_form(&self) -> Mat {
        lambda_form(&self.lambda)
    }

    /// λ₁λ₂/λ₃², the one continuous invariant; defined when λ₃ ≠ 0.
    pub fn scale_invariant(&self) -> Option<CycScalar> {
        let [l1, l2, l3] = &self.lambda;
        if l3.is_zero() {
            return None;
        }
        let sq = l3 * l3;
        Some(&(l1 * l2) * &sq.inv())
    }

    /// The canonical orbit representative.
    pub fn canonical(&self) -> ModuliPoint {
        let one = CycScalar::one;
        let zero = CycScalar::zero;
        let [l1, l2, l3] = &self.lambda;
        let triple = match (l1.is_zero(), l2.is_zero(), l3.is_zero()) {
            (true, true, true) => [zero(), zero(), zero()],
            (false, true, true) | (true, false, true) => [one(), zero(), zero()],
            (false, false, true) => [one(), one(), zero()],
            (true, true, false) => [zero(), zero(), one()],
            (false, true, false) | (true, false, false) => [one(), zero(), one()],
            (false, false, false) => {
                let r = self.scale_invariant().expect("λ₃ ≠ 0 on this branch");
                [one(), r, one()]
            }
        };
        ModuliPoint { lambda: triple }
    }

    /// Whether two triples lie on the same orbit.
    pub fn equivalent_to(&self, other: &ModuliPoint) -> bool {
        self.canonical() == other.canonical()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(l1: i64, l2: i64, l3: i64) -> ModuliPoint {
        ModuliPoint::new(
            CycScalar::from_int(l1),
            CycScalar::from_int(l2),
            CycScalar::from_int(l3),
        )
    }

    #[test]
    fn the_reference_orbit_pairs() {
        assert!(p(1, 1, 1).equivalent_to(&p(4, 1, 2)));
        assert!(p(1, 2, 0).equivalent_to(&p(2, 1, 0)));
        assert!(!p(1, 1, 1).equivalent_to(&p(1, 1, 2)));
        // The distinguishing invariant values behind the last verdict.
        assert_eq!(
            p(1, 1, 1).scale_invariant().unwrap(),
            CycScalar::one()
        );
        assert_eq!(
            p(1, 1, 2).scale_invariant().unwrap(),
            CycScalar::from_rat(rat(1, 4))
        );
    }

    #[test]
    fn zero_patterns_are_orbit_walls() {
        assert!(p(0, 0, 0).equivalent_to(&p(0, 0, 0)));
        assert!(p(5, 0, 0).equivalent_to(&p(0, 7, 0)));
        assert!(!p(5, 0, 0).equivalent_to(&p(0, 0, 0)));
        assert!(p(0, 0, 3).equivalent_to(&p(0, 0, 11)));
        assert!(!p(0, 0, 3).equivalent_to(&p(1, 0, 3)));
        assert!(p(2, 0, 3).equivalent_to(&p(0, 1, 5)));
        assert!(!p(1, 1, 0).equivalent_to(&p(1, 0, 0)));
        // Full support with matching invariant but different entries.
        assert!(p(2, 2, 2).equivalent_to(&p(1, 1, 1)));
        assert!(p(3, 3, 3).equivalent_to(&p(9, 1, 3)));
    }

    #[test]
    fn the_lift_splits_the_cross_term() {
        let form = p(1, 2, 3).to_form();
        assert_eq!(form.at(0, 0), &CycScalar::from_int(1));
        assert_eq!(form.at(1, 1), &CycScalar::from_int(2));
        assert_eq!(form.at(0, 1), &CycScalar::from_rat(rat(3, 2)));
        assert_eq!(form.at(1, 0), &CycScalar::from_rat(rat(3, 2)));
        // Reference lifts: zero, identity, and the antidiagonal.
        assert!(p(0, 0, 0).to_form().is_zero());
        assert_eq!(p(1, 1, 0).to_form(), Mat::identity(2));
        let anti = p(0, 0, 2).to_form();
        assert_eq!(anti.at(0, 1), &CycScalar::one());
        assert_eq!(anti.at(1, 0), &CycScalar::one());
        assert!(anti.at(0, 0).is_zero() && anti.at(1, 1).is_zero());
    }
}
