//! Exact linear algebra over cyclotomic scalars.
//!
//! Two families of tools live here. [`Mat`] is a dense matrix for the small
//! systems that show up in representation theory (group images, projectors,
//! intertwiners): products, inverses, ranks, kernels, solving. For the large
//! sparse systems (antipode equations, cocycle convolution inverses,
//! cohomology differentials) there are [`RowReducer`], an incremental reduced
//! row-echelon accumulator giving ranks and span-membership tests without
//! materializing a matrix, and [`LinearSystem`], the same machinery with a
//! right-hand side attached.
//!
//! Everything eliminates with exact field division in Q(ζ_n); there is no
//! pivoting heuristic to tune and no numerical error to track.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use crate::scalar::CycScalar;

/// Sparse vector: column index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, CycScalar>;

/// `dst += k * src`, dropping entries that cancel to zero.
pub fn sv_add_scaled(dst: &mut SparseVec, src: &SparseVec, k: &CycScalar) {
    if k.is_zero() {
        return;
    }
    for (col, v) in src {
        let add = v * k;
        match dst.get_mut(col) {
            Some(cur) => {
                *cur = &*cur + &add;
                if cur.is_zero() {
                    dst.remove(col);
                }
            }
            None => {
                dst.insert(*col, add);
            }
        }
    }
}

/// Scale a sparse vector in place by a nonzero factor.
pub fn sv_scale(v: &mut SparseVec, k: &CycScalar) {
    for entry in v.values_mut() {
        *entry = &*entry * k;
    }
}

/// Dense matrix over Q(ζ_n), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    nrows: usize,
    ncols: usize,
    data: Vec<CycScalar>,
}

impl Mat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Mat { nrows, ncols, data: vec![CycScalar::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, CycScalar::one());
        }
        m
    }

    /// Build from rows; panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<CycScalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged matrix rows");
            data.extend(row);
        }
        Mat { nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let data =
            self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Mat { nrows: self.nrows, ncols: self.ncols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let data =
            self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Mat { nrows: self.nrows, ncols: self.ncols, data }
    }

    pub fn scale(&self, k: &CycScalar) -> Self {
        Mat {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(v.len(), self.ncols);
        (0..self.nrows)
            .map(|i| {
                let mut acc = CycScalar::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self.at(i, j).is_zero() {
                        acc = &acc + &(self.at(i, j) * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn try_inverse(&self) -> Option<Self> {
        assert_eq!(self.nrows, self.ncols, "inverse needs a square matrix");
        let n = self.nrows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a.at(pivot, j).clone();
                    a.set(pivot, j, a.at(col, j).clone());
                    a.set(col, j, tmp);
                    let tmp = inv.at(pivot, j).clone();
                    inv.set(pivot, j, inv.at(col, j).clone());
                    inv.set(col, j, tmp);
                }
            }
            let lead = a.at(col, col).inv();
            for j in 0..n {
                a.set(col, j, a.at(col, j) * &lead);
                inv.set(col, j, inv.at(col, j) * &lead);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    let na = a.at(r, j) - &(a.at(col, j) * &factor);
                    a.set(r, j, na);
                    let ni = inv.at(r, j) - &(inv.at(col, j) * &factor);
                    inv.set(r, j, ni);
                }
            }
        }
        Some(inv)
    }

    /// Determinant by elimination with row swaps.
    pub fn determinant(&self) -> CycScalar {
        assert_eq!(self.nrows, self.ncols, "determinant needs a square matrix");
        let n = self.nrows;
        let mut a = self.clone();
        let mut det = CycScalar::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.at(r, col).is_zero()) else {
                return CycScalar::zero();
            };
            if pivot != col {
                for j in 0..n {
                    let tmp = a.at(pivot, j).clone();
                    a.set(pivot, j, a.at(col, j).clone());
                    a.set(col, j, tmp);
                }
                det = -det;
            }
            let lead = a.at(col, col).clone();
            det = &det * &lead;
            let inv = lead.inv();
            for r in col + 1..n {
                if a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col) * &inv;
                for j in col..n {
                    let v = a.at(r, j) - &(a.at(col, j) * &factor);
                    a.set(r, j, v);
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new();
        for i in 0..self.nrows {
            let row: SparseVec = self
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect();
            red.insert(row);
        }
        red.rank()
    }

    /// Basis of the right kernel { x : A x = 0 }, as dense vectors.
    pub fn nullspace(&self) -> Vec<Vec<CycScalar>> {
        let mut red = RowReducer::new();
        for i in 0..self.nrows {
            let row: SparseVec = self
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect();
            red.insert(row);
        }
        red.kernel_basis(self.ncols)
            .into_iter()
            .map(|sv| {
                let mut dense = vec![CycScalar::zero(); self.ncols];
                for (j, v) in sv {
                    dense[j] = v;
                }
                dense
            })
            .collect()
    }

    /// Any solution of A x = b, free variables set to zero; `None` when
    /// inconsistent.
    pub fn solve(&self, b: &[CycScalar]) -> Option<Vec<CycScalar>> {
        assert_eq!(b.len(), self.nrows);
        let mut sys = LinearSystem::new();
        for i in 0..self.nrows {
            let row: SparseVec = self
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect();
            sys.add_equation(row, b[i].clone());
        }
        sys.solve().map(|sv| {
            let mut dense = vec![CycScalar::zero(); self.ncols];
            for (j, v) in sv {
                dense[j] = v;
            }
            dense
        })
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.ncols, rhs.nrows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        let v = out.at(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }
}

/// Incremental reduced row echelon accumulator over sparse rows.
///
/// Maintains the invariant that each stored pivot row has coefficient 1 at
/// its pivot column and zeros at every other pivot column, so reduction of an
/// incoming row is a single pass and span-membership is "reduces to zero".
#[derive(Clone, Debug, Default)]
pub struct RowReducer {
    pivots: BTreeMap<usize, SparseVec>,
}

impl RowReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Subtract pivot rows until `row` has no entries at pivot columns.
    pub fn reduce(&self, row: &mut SparseVec) {
        // Subtracting a pivot row never reintroduces a pivot column, so each
        // step strictly removes one.
        loop {
            let hit = row.keys().find(|c| self.pivots.contains_key(c)).copied();
            match hit {
                Some(col) => {
                    let coef = -&row[&col];
                    let pivot = self.pivots[&col].clone();
                    sv_add_scaled(row, &pivot, &coef);
                }
                None => return,
            }
        }
    }

    /// Is the row already in the span of the inserted rows?
    pub fn contains(&self, row: &SparseVec) -> bool {
        let mut r = row.clone();
        self.reduce(&mut r);
        r.is_empty()
    }

    /// Add a row; returns true when it was independent (rank grew).
    pub fn insert(&mut self, mut row: SparseVec) -> bool {
        self.reduce(&mut row);
        let Some((&lead, coeff)) = row.iter().next() else {
            return false;
        };
        let inv = coeff.inv();
        sv_scale(&mut row, &inv);
        // Restore full reduction in the existing pivots.
        for pivot in self.pivots.values_mut() {
            if let Some(c) = pivot.get(&lead) {
                let coef = -c;
                sv_add_scaled(pivot, &row, &coef);
            }
        }
        self.pivots.insert(lead, row);
        true
    }

    /// Basis of { x : R x = 0 } for the inserted rows, over `ncols` columns.
    pub fn kernel_basis(&self, ncols: usize) -> Vec<SparseVec> {
        let mut basis = Vec::new();
        for free in 0..ncols {
            if self.pivots.contains_key(&free) {
                continue;
            }
            // Free column: x_free = 1, pivot columns balance their rows.
            let mut v: SparseVec = BTreeMap::new();
            v.insert(free, CycScalar::one());
            for (&pc, row) in &self.pivots {
                if let Some(c) = row.get(&free) {
                    v.insert(pc, -c);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Sparse linear system A x = b accumulated one equation at a time.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    /// pivot column -> (row, rhs), kept fully reduced as in [`RowReducer`].
    pivots: BTreeMap<usize, (SparseVec, CycScalar)>,
    inconsistent: bool,
}

impl LinearSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    pub fn add_equation(&mut self, mut row: SparseVec, mut rhs: CycScalar) {
        loop {
            let hit = row.keys().find(|c| self.pivots.contains_key(c)).copied();
            match hit {
                Some(col) => {
                    let coef = -&row[&col];
                    let (prow, prhs) = self.pivots[&col].clone();
                    sv_add_scaled(&mut row, &prow, &coef);
                    rhs = &rhs + &(&prhs * &coef);
                }
                None => break,
            }
        }
        match row.iter().next() {
            None => {
                if !rhs.is_zero() {
                    self.inconsistent = true;
                }
            }
            Some((&lead, coeff)) => {
                let inv = coeff.inv();
                sv_scale(&mut row, &inv);
                rhs = &rhs * &inv;
                for (prow, prhs) in self.pivots.values_mut() {
                    if let Some(c) = prow.get(&lead) {
                        let coef = -c;
                        sv_add_scaled(prow, &row, &coef);
                        *prhs = &*prhs + &(&rhs * &coef);
                    }
                }
                self.pivots.insert(lead, (row, rhs));
            }
        }
    }

    /// A solution with free variables at zero; `None` when inconsistent.
    pub fn solve(&self) -> Option<SparseVec> {
        if self.inconsistent {
            return None;
        }
        let mut x: SparseVec = BTreeMap::new();
        for (&col, (_, rhs)) in &self.pivots {
            if !rhs.is_zero() {
                x.insert(col, rhs.clone());
            }
        }
        Some(x)
    }
}
