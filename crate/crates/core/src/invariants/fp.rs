//! The largest eigenvalue of a fusion matrix, established two ways: an
//! exact eigenvector identity over the rationals, and an independent
//! floating-point power iteration that must land within 1e-9 of it. The
//! float never feeds back into anything exact — it exists purely to catch
//! a wrong claimed eigenvector/eigenvalue pair from a different angle.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::scalar::Rat;
use crate::{domain_err, internal_err, Result};

/// The agreed-upon eigenvalue and the trail that produced it.
#[derive(Clone, Debug)]
pub struct FpReport {
    /// The exact eigenvalue of the dimension vector.
    pub exact: Rat,
    /// The spectral radius estimate from power iteration.
    pub estimate: f64,
    /// How many iterations the estimate took to settle.
    pub iterations: usize,
}

/// Verify that `dims` is an exact eigenvector of the fusion matrix and
/// return its eigenvalue, cross-checked against a floating-point spectral
/// radius estimate.
///
/// For the fusion matrix of tensoring by an object, a positive integer
/// eigenvector pins the eigenvalue to the spectral radius, so the exact
/// value really is the largest one — the float agreeing within 1e-9 is
/// evidence the inputs describe the matrix they claim to.
pub fn fp_dimension(fusion: &[Vec<i64>], dims: &[i64]) -> Result<FpReport> {
    let n = fusion.len();
    if n == 0 {
        return domain_err("the fusion matrix must be nonempty");
    }
    if fusion.iter().any(|row| row.len() != n) {
        return domain_err("the fusion matrix must be square");
    }
    if dims.len() != n {
        return domain_err("the dimension vector must match the matrix size");
    }
    if fusion.iter().any(|row| row.iter().any(|&e| e < 0)) {
        return domain_err("fusion coefficients must be non-negative");
    }
    if dims.iter().any(|&d| d <= 0) {
        return domain_err("the dimension vector must be strictly positive");
    }

    let big = |x: i64| Rat::from_integer(BigInt::from(x));
    let row_dot = |i: usize| -> Rat {
        fusion[i]
            .iter()
            .zip(dims)
            .fold(Rat::from_integer(BigInt::from(0)), |acc, (&a, &d)| {
                acc + big(a) * big(d)
            })
    };
    let exact = row_dot(0) / big(dims[0]);
    for i in 1..n {
        if row_dot(i) != &exact * &big(dims[i]) {
            return domain_err("the dimension vector is not an eigenvector");
        }
    }

    // Power-iterate on (L + I): the shift keeps periodic matrices (e.g.
    // permutations) from cycling, and only moves the target by 1.
    let a: Vec<Vec<f64>> = fusion
        .iter()
        .map(|row| row.iter().map(|&e| e as f64).collect())
        .collect();
    let mut v = alloc::vec![1.0f64; n];
    let mut lam = 0.0f64;
    let mut iterations = 0usize;
    for it in 1..=100_000usize {
        let mut w = alloc::vec![0.0f64; n];
        for i in 0..n {
            let mut s = v[i];
            for j in 0..n {
                s += a[i][j] * v[j];
            }
            w[i] = s;
        }
        let mx = w.iter().fold(0.0f64, |acc, &x| if x > acc { x } else { acc });
        if !(mx > 0.0) {
            return internal_err("the power iteration collapsed to zero");
        }
        for x in &mut w {
            *x /= mx;
        }
        v = w;
        let drift = fabs(mx - lam);
        lam = mx;
        iterations = it;
        if drift <= 1e-13 {
            break;
        }
    }
    let estimate = lam - 1.0;
    let exact_f = exact
        .to_f64()
        .ok_or(crate::Error::Internal("eigenvalue does not fit in a float".into()))?;
    if fabs(estimate - exact_f) > 1e-9 {
        return internal_err(alloc::format!(
            "power iteration reached {estimate} but the exact eigenvalue is {exact}"
        ));
    }
    Ok(FpReport {
        exact,
        estimate,
        iterations,
    })
}

fn fabs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn permutation_matrices_have_unit_radius() {
        let fusion = vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]];
        let report = fp_dimension(&fusion, &[1, 1, 1]).unwrap();
        assert_eq!(report.exact, Rat::from_integer(1.into()));
        assert!(fabs(report.estimate - 1.0) <= 1e-9);
    }

    #[test]
    fn the_regular_object_sees_the_full_dimension() {
        let fusion = vec![vec![1; 4]; 4];
        let report = fp_dimension(&fusion, &[1, 1, 1, 1]).unwrap();
        assert_eq!(report.exact, Rat::from_integer(4.into()));
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(fp_dimension(&[], &[]).is_err());
        assert!(fp_dimension(&[vec![0, -1], vec![1, 0]], &[1, 1]).is_err());
        assert!(fp_dimension(&[vec![1, 0], vec![0, 2]], &[1, 1]).is_err());
        assert!(fp_dimension(&[vec![1, 0], vec![0, 1]], &[1, 0]).is_err());
        assert!(fp_dimension(&[vec![1, 1], vec![1, 1]], &[1]).is_err());
    }
}
