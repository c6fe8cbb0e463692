//! Extended exchange matrices with principal coefficients.
//!
//! An extended exchange matrix stacks an `n x n` skew-symmetric *principal*
//! part on top of an `n x n` *complementary* part whose columns are the
//! c-vectors. The initial Markov matrix has the weight-2 cyclic principal
//! part and the identity below it; mutation follows the standard matrix
//! mutation rule and is implemented for any size, while the helpers tied to
//! the Markov tree (column classes, the cyclic relabeling action, g-matrices)
//! are specific to `n = 3`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::farey::{FareyError, FareyTriple, ParityClass};

/// Errors from matrix construction and transformation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExchangeError {
    /// A mutation column index outside `0..n`.
    #[error("column {column} out of range for a matrix with {n} columns")]
    BadColumn { column: usize, n: usize },

    /// A matrix whose complementary part is singular or non-unimodular
    /// cannot be inverted over the integers.
    #[error("matrix is not unimodular: determinant {det}")]
    NotUnimodular { det: BigInt },

    /// An extended matrix must have exactly twice as many rows as columns.
    #[error("expected {expected} rows of width {cols}, found {found} rows")]
    BadShape { expected: usize, found: usize, cols: usize },

    /// The principal (top) part must be skew-symmetric.
    #[error("principal part is not skew-symmetric at ({row},{col})")]
    NotSkewSymmetric { row: usize, col: usize },

    /// An integer field failed to parse during deserialization.
    #[error("cannot parse {input:?} as an integer matrix entry")]
    ParseEntry { input: String },
}

/// The two cyclic relabelings of the three Markov directions, written as the
/// index substitution `new[i][j] = old[sigma(i)][sigma(j)]` applied to rows
/// and columns simultaneously.
///
/// `CycA` uses `sigma = (0 1 2) <- (2 0 1)` and matches what `phi` does to
/// matrices; `CycB` uses the opposite 3-cycle and matches `psi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexCycle {
    CycA,
    CycB,
}

impl VertexCycle {
    /// For each new index `i`, the old index `sigma(i)` it reads from.
    fn sigma(self) -> [usize; 3] {
        match self {
            VertexCycle::CycA => [2, 0, 1],
            VertexCycle::CycB => [1, 2, 0],
        }
    }
}

/// A dense 3x3 integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat3 {
    rows: [[BigInt; 3]; 3],
}

impl Mat3 {
    pub fn new(rows: [[BigInt; 3]; 3]) -> Self {
        Mat3 { rows }
    }

    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Mat3 { rows: rows.map(|r| r.map(BigInt::from)) }
    }

    pub fn identity() -> Self {
        Mat3::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.rows[row][col]
    }

    pub fn rows(&self) -> &[[BigInt; 3]; 3] {
        &self.rows
    }

    pub fn column(&self, col: usize) -> [BigInt; 3] {
        [self.rows[0][col].clone(), self.rows[1][col].clone(), self.rows[2][col].clone()]
    }

    pub fn transpose(&self) -> Self {
        let mut rows: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                rows[j][i] = entry.clone();
            }
        }
        Mat3 { rows }
    }

    pub fn det(&self) -> BigInt {
        let m = &self.rows;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// The adjugate, satisfying `self * adjugate = det * identity` exactly.
    pub fn adjugate(&self) -> Self {
        let m = &self.rows;
        let cof = |r1: usize, c1: usize, r2: usize, c2: usize| &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1];
        Mat3::new([
            [cof(1, 1, 2, 2), -cof(0, 1, 2, 2), cof(0, 1, 1, 2)],
            [-cof(1, 0, 2, 2), cof(0, 0, 2, 2), -cof(0, 0, 1, 2)],
            [cof(1, 0, 2, 1), -cof(0, 0, 2, 1), cof(0, 0, 1, 1)],
        ])
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut rows: [[BigInt; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                rows[i][j] = (0..3).map(|k| &self.rows[i][k] * &other.rows[k][j]).sum();
            }
        }
        Mat3 { rows }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Mat3 { rows: self.rows.clone().map(|r| r.map(|entry| entry * factor)) }
    }

    /// Applies a cyclic relabeling to rows and columns simultaneously.
    pub fn act(&self, cycle: VertexCycle) -> Self {
        let sigma = cycle.sigma();
        let mut rows: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = self.rows[sigma[i]][sigma[j]].clone();
            }
        }
        Mat3 { rows }
    }

    /// The sum of each column, in column order.
    pub fn column_sums(&self) -> [BigInt; 3] {
        let mut sums: [BigInt; 3] = Default::default();
        for row in &self.rows {
            for (j, entry) in row.iter().enumerate() {
                sums[j] += entry;
            }
        }
        sums
    }
}

/// Writes rows with entries right-aligned to the widest entry, one row per
/// line; shared by the matrix `Display` impls.
fn fmt_rows_aligned<'a>(
    f: &mut fmt::Formatter<'_>,
    rows: impl Iterator<Item = &'a [BigInt]>,
) -> fmt::Result {
    let rendered: Vec<Vec<String>> =
        rows.map(|row| row.iter().map(BigInt::to_string).collect()).collect();
    let width = rendered.iter().flatten().map(String::len).max().unwrap_or(1);
    for (i, row) in rendered.iter().enumerate() {
        if i > 0 {
            writeln!(f)?;
        }
        for (j, entry) in row.iter().enumerate() {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{entry:>width$}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows_aligned(f, self.rows.iter().map(|r| r.as_slice()))
    }
}

/// A c-vector: one column of the complementary part of an extended matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CVector(pub Vec<BigInt>);

impl CVector {
    /// Whether the entries are all `>= 0` or all `<= 0`.
    pub fn is_sign_coherent(&self) -> bool {
        self.0.iter().all(|e| !e.is_negative()) || self.0.iter().all(|e| !e.is_positive())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// A 3x3 integer matrix whose columns are g-vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMatrix(pub Mat3);

impl GMatrix {
    pub fn det(&self) -> BigInt {
        self.0.det()
    }

    /// The g-vector of the given column class.
    pub fn column(&self, class: ParityClass) -> [BigInt; 3] {
        self.0.column(class.column())
    }

    pub fn column_sums(&self) -> [BigInt; 3] {
        self.0.column_sums()
    }

    pub fn act(&self, cycle: VertexCycle) -> Self {
        GMatrix(self.0.act(cycle))
    }
}

impl fmt::Display for GMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The inverse transpose `(Cᵀ)⁻¹` of a unimodular matrix, computed exactly
/// through the adjugate: for `det = ±1` the inverse is `det * adjugate`.
pub fn g_from_c(c: &Mat3) -> Result<GMatrix, ExchangeError> {
    let det = c.det();
    if !det.abs().is_one() {
        return Err(ExchangeError::NotUnimodular { det });
    }
    Ok(GMatrix(c.transpose().adjugate().scale(&det)))
}

/// A `2n x n` exchange matrix with principal coefficients: a skew-symmetric
/// principal part stacked over a complementary part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedMatrix {
    n: usize,
    rows: Vec<Vec<BigInt>>,
}

impl ExtendedMatrix {
    /// Validates and wraps `2n` rows of width `n` whose top half is
    /// skew-symmetric.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, ExchangeError> {
        let n = rows.first().map_or(0, Vec::len);
        if n == 0 || rows.len() != 2 * n || rows.iter().any(|r| r.len() != n) {
            return Err(ExchangeError::BadShape { expected: 2 * n, found: rows.len(), cols: n });
        }
        for i in 0..n {
            for j in 0..n {
                if rows[i][j] != -&rows[j][i] {
                    return Err(ExchangeError::NotSkewSymmetric { row: i, col: j });
                }
            }
        }
        Ok(ExtendedMatrix { n, rows })
    }

    fn from_i64(rows: &[[i64; 3]; 6]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&e| BigInt::from(e)).collect()).collect();
        ExtendedMatrix::from_rows(rows).expect("static matrix is well formed")
    }

    /// The initial Markov matrix: principal part [`markov_b_plus`] over the
    /// identity, columns in class order `(Zero, MinusOne, Infinity)`.
    pub fn markov_initial() -> Self {
        ExtendedMatrix::from_i64(&[
            [0, -2, 2],
            [2, 0, -2],
            [-2, 2, 0],
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
        ])
    }

    /// Assembles a Markov-sized matrix from 3x3 principal and complementary
    /// parts.
    pub fn from_parts(principal: Mat3, complementary: Mat3) -> Result<Self, ExchangeError> {
        let rows = principal.rows().iter().chain(complementary.rows().iter()).map(|r| r.to_vec()).collect();
        ExtendedMatrix::from_rows(rows)
    }

    /// The number of columns `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// All `2n` rows, principal part first.
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// The top `n` rows.
    pub fn principal_rows(&self) -> &[Vec<BigInt>] {
        &self.rows[..self.n]
    }

    /// The bottom `n` rows.
    pub fn complementary_rows(&self) -> &[Vec<BigInt>] {
        &self.rows[self.n..]
    }

    fn part_mat3(&self, offset: usize) -> Mat3 {
        assert_eq!(self.n, 3, "3x3 parts exist only for Markov-sized matrices");
        let mut rows: [[BigInt; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                rows[i][j] = self.rows[offset + i][j].clone();
            }
        }
        Mat3::new(rows)
    }

    /// The principal part as a [`Mat3`] (Markov-sized matrices only).
    pub fn principal_mat3(&self) -> Mat3 {
        self.part_mat3(0)
    }

    /// The complementary part as a [`Mat3`] (Markov-sized matrices only).
    pub fn complementary_mat3(&self) -> Mat3 {
        self.part_mat3(self.n)
    }

    /// Mutation at column `k`: entries in row or column `k` flip sign, and
    /// every other entry `b[i][j]` gains `sgn(b[i][k]) * max(b[i][k]*b[k][j], 0)`.
    /// Mutating twice at the same column restores the original matrix.
    pub fn mutate(&self, k: usize) -> Result<Self, ExchangeError> {
        if k >= self.n {
            return Err(ExchangeError::BadColumn { column: k, n: self.n });
        }
        let mut rows = self.rows.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                if i == k || j == k {
                    *entry = -entry.clone();
                } else {
                    let product = &self.rows[i][k] * &self.rows[k][j];
                    if product.is_positive() {
                        match self.rows[i][k].sign() {
                            num_bigint::Sign::Plus => *entry += product,
                            num_bigint::Sign::Minus => *entry -= product,
                            num_bigint::Sign::NoSign => {}
                        }
                    }
                }
            }
        }
        Ok(ExtendedMatrix { n: self.n, rows })
    }

    /// Mutation in a Markov direction, using the class's column.
    pub fn mutate_class(&self, k: ParityClass) -> Self {
        assert_eq!(self.n, 3, "class columns exist only for Markov-sized matrices");
        self.mutate(k.column()).expect("class column is in range")
    }

    /// The c-vectors: the columns of the complementary part.
    pub fn c_vectors(&self) -> Vec<CVector> {
        (0..self.n)
            .map(|j| CVector(self.complementary_rows().iter().map(|row| row[j].clone()).collect()))
            .collect()
    }

    /// Applies a cyclic relabeling to the principal part, the complementary
    /// part, and the columns simultaneously (Markov-sized matrices only).
    pub fn act(&self, cycle: VertexCycle) -> Self {
        ExtendedMatrix::from_parts(self.principal_mat3().act(cycle), self.complementary_mat3().act(cycle))
            .expect("relabeling preserves skew-symmetry")
    }

}

impl fmt::Display for ExtendedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows_aligned(f, self.rows.iter().map(|r| r.as_slice()))
    }
}

/// The weight-2 cyclic skew-symmetric matrix: the principal part of every
/// even-distance Markov matrix.
pub fn markov_b_plus() -> Mat3 {
    Mat3::from_i64([[0, -2, 2], [2, 0, -2], [-2, 2, 0]])
}

/// The opposite orientation, reached at odd distance.
pub fn markov_b_minus() -> Mat3 {
    Mat3::from_i64([[0, 2, -2], [-2, 0, 2], [2, -2, 0]])
}

/// Computes a triple's extended matrix from first principles: descend to the
/// root, then replay the reversed descent word on the initial matrix.
///
/// This is the ground truth the closed forms are judged against.
pub fn matrix_by_path(triple: &FareyTriple) -> Result<ExtendedMatrix, FareyError> {
    let root_to_triple = triple.path_to_initial()?.reversed();
    Ok(root_to_triple
        .iter()
        .fold(ExtendedMatrix::markov_initial(), |m, letter| m.mutate_class(letter)))
}

/// The wire form of a Markov extended matrix: row-major parts with every
/// integer as a decimal string, plus the fixed column labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub principal: Vec<Vec<String>>,
    pub complementary: Vec<Vec<String>>,
    pub columns: Vec<String>,
}

impl From<&ExtendedMatrix> for MatrixJson {
    fn from(m: &ExtendedMatrix) -> Self {
        let render = |rows: &[Vec<BigInt>]| {
            rows.iter().map(|row| row.iter().map(BigInt::to_string).collect()).collect()
        };
        MatrixJson {
            principal: render(m.principal_rows()),
            complementary: render(m.complementary_rows()),
            columns: ParityClass::ALL.iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<&MatrixJson> for ExtendedMatrix {
    type Error = ExchangeError;

    fn try_from(json: &MatrixJson) -> Result<Self, ExchangeError> {
        let parse = |rows: &[Vec<String>]| -> Result<Vec<Vec<BigInt>>, ExchangeError> {
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|e| e.parse().map_err(|_| ExchangeError::ParseEntry { input: e.clone() }))
                        .collect()
                })
                .collect()
        };
        let mut rows = parse(&json.principal)?;
        rows.extend(parse(&json.complementary)?);
        ExtendedMatrix::from_rows(rows)
    }
}
