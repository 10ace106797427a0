//! Finite-dimensional shadows of derived kernels: exact rational kernel
//! computations, the block-triangular cancellation criterion, and the
//! closed product formula for alternating sums over exterior powers.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::{MPoly, RationalChar};
use crate::quiver::ShiftTriple;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DkernelError {
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("weight lists have lengths {targets}/{sources}, matrix is {rows}x{cols}")]
    WeightMismatch {
        rows: usize,
        cols: usize,
        targets: usize,
        sources: usize,
    },
    #[error("matrices do not assemble into the required block-triangular form: {0}")]
    BlockMismatch(String),
    #[error("nonzero entry at ({row},{col}) between incompatible weights")]
    EquivarianceViolated { row: usize, col: usize },
}

/// Dense exact-rational matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self, DkernelError> {
        if data.len() != rows * cols {
            return Err(DkernelError::Shape {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| rat(x)))
            .collect();
        RatMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    /// Assembles [[s1, b], [0, s3]].
    pub fn block_upper(
        s1: &RatMatrix,
        b: &RatMatrix,
        s3: &RatMatrix,
    ) -> Result<Self, DkernelError> {
        if b.rows != s1.rows || b.cols != s3.cols {
            return Err(DkernelError::BlockMismatch(format!(
                "bridge block is {}x{}, needs {}x{}",
                b.rows, b.cols, s1.rows, s3.cols
            )));
        }
        let mut m = RatMatrix::zeros(s1.rows + s3.rows, s1.cols + s3.cols);
        for i in 0..s1.rows {
            for j in 0..s1.cols {
                m.set(i, j, s1.get(i, j).clone());
            }
            for j in 0..b.cols {
                m.set(i, s1.cols + j, b.get(i, j).clone());
            }
        }
        for i in 0..s3.rows {
            for j in 0..s3.cols {
                m.set(s1.rows + i, s1.cols + j, s3.get(i, j).clone());
            }
        }
        Ok(m)
    }

    /// Row-reduced echelon form; returns the pivot columns.
    fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(row * m.cols + j, pivot_row * m.cols + j);
            }
            let inv = m.get(row, col).recip();
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r, j) - &(m.get(row, j) * &factor);
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A monomial equivariant character with its shift.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    pub character: MPoly,
    pub shift: ShiftTriple,
}

impl Weight {
    pub fn new(character: MPoly, shift: ShiftTriple) -> Self {
        Weight { character, shift }
    }

    pub fn trivial() -> Self {
        Weight {
            character: MPoly::one(),
            shift: ShiftTriple::zero(),
        }
    }

    fn compatible(&self, other: &Weight) -> bool {
        self.character == other.character
            && self.shift.koszul_normalize() == other.shift.koszul_normalize()
    }
}

/// A linear map between weighted spaces. When built with equivariance
/// checking, every nonzero entry must connect equal weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedMap {
    matrix: RatMatrix,
    source: Vec<Weight>,
    target: Vec<Weight>,
}

impl WeightedMap {
    pub fn new(
        matrix: RatMatrix,
        source: Vec<Weight>,
        target: Vec<Weight>,
    ) -> Result<Self, DkernelError> {
        if source.len() != matrix.cols() || target.len() != matrix.rows() {
            return Err(DkernelError::WeightMismatch {
                rows: matrix.rows(),
                cols: matrix.cols(),
                targets: target.len(),
                sources: source.len(),
            });
        }
        Ok(WeightedMap {
            matrix,
            source,
            target,
        })
    }

    pub fn with_equivariance(
        matrix: RatMatrix,
        source: Vec<Weight>,
        target: Vec<Weight>,
    ) -> Result<Self, DkernelError> {
        let m = Self::new(matrix, source, target)?;
        for i in 0..m.matrix.rows() {
            for j in 0..m.matrix.cols() {
                if !m.matrix.get(i, j).is_zero() && !m.target[i].compatible(&m.source[j]) {
                    return Err(DkernelError::EquivarianceViolated { row: i, col: j });
                }
            }
        }
        Ok(m)
    }

    /// Wraps a bare matrix with trivial weights everywhere.
    pub fn from_matrix(matrix: RatMatrix) -> Self {
        let source = vec![Weight::trivial(); matrix.cols()];
        let target = vec![Weight::trivial(); matrix.rows()];
        WeightedMap {
            matrix,
            source,
            target,
        }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn source_weights(&self) -> &[Weight] {
        &self.source
    }

    pub fn target_weights(&self) -> &[Weight] {
        &self.target
    }
}

/// Exact basis of the classical kernel.
pub fn classical_kernel(s: &WeightedMap) -> Vec<Vec<BigRational>> {
    s.matrix().kernel_basis()
}

/// Cancellation criterion for a block-triangular map: s2 must literally be
/// [[s1, B], [0, s3]]. Returns whether the kernel of s2 projects
/// bijectively onto the kernel of s3, which is forced when s1 is
/// invertible and can fail when it is not.
pub fn cancel_check(
    s1: &WeightedMap,
    s2: &WeightedMap,
    s3: &WeightedMap,
) -> Result<bool, DkernelError> {
    let (m1, m2, m3) = (s1.matrix(), s2.matrix(), s3.matrix());
    if m1.rows() != m1.cols() {
        return Err(DkernelError::BlockMismatch(format!(
            "leading block is {}x{}, must be square",
            m1.rows(),
            m1.cols()
        )));
    }
    let (p, r, c) = (m1.rows(), m3.rows(), m3.cols());
    if m2.rows() != p + r || m2.cols() != p + c {
        return Err(DkernelError::BlockMismatch(format!(
            "composite is {}x{}, needs {}x{}",
            m2.rows(),
            m2.cols(),
            p + r,
            p + c
        )));
    }
    for i in 0..p {
        for j in 0..p {
            if m2.get(i, j) != m1.get(i, j) {
                return Err(DkernelError::BlockMismatch("leading block differs".into()));
            }
        }
    }
    for i in 0..r {
        for j in 0..p {
            if !m2.get(p + i, j).is_zero() {
                return Err(DkernelError::BlockMismatch(
                    "lower-left block is not zero".into(),
                ));
            }
        }
        for j in 0..c {
            if m2.get(p + i, p + j) != m3.get(i, j) {
                return Err(DkernelError::BlockMismatch("trailing block differs".into()));
            }
        }
    }

    let k2 = m2.kernel_basis();
    let k3 = m3.kernel_basis();
    if k2.len() != k3.len() {
        return Ok(false);
    }
    // each kernel vector of s2 ends in a kernel vector of s3; the
    // projection is a bijection exactly when those tails stay independent
    let tails: Vec<BigRational> = k2.iter().flat_map(|v| v[p..].iter().cloned()).collect();
    let proj = RatMatrix::new(k2.len(), c, tails)?;
    Ok(proj.rank() == k2.len())
}

/// Alternating sum over the exterior powers of a dual bundle with the
/// given weight decomposition, as a closed product: each weight w with
/// shift (c, l, s) contributes a factor 1 - q^l t^s w. The cohomological
/// component records the filtration level of the linear term; its sign is
/// the alternation itself and therefore enters the sum exactly once.
pub fn koszul_sum(dual_weights: &[Weight]) -> RationalChar {
    let mut acc = MPoly::one();
    for w in dual_weights {
        let image = w.character.shifted([w.shift.l, w.shift.s, 0, 0, 0, 0]);
        acc = &acc * &(&MPoly::one() - &image);
    }
    RationalChar::from_mpoly(acc)
}
