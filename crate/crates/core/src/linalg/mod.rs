//! Dense real matrices, SVD, symmetric eigendecomposition and the counting
//! Laplacian.

mod eigen;
mod laplacian;
mod svd;

pub use eigen::{symmetric_eigen, SymmetricEigen};
pub use laplacian::{adjacency_matrix, counting_laplacian, hermitian_embedding, max_norm_bounds};
pub use svd::{svd, SvdDecomposition};

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Row-major dense matrix of finite doubles.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major data. Panics on a shape mismatch or a
    /// non-finite entry; finiteness is a type invariant.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "shape mismatch");
        assert!(
            data.iter().all(|x| x.is_finite()),
            "matrix entries must be finite"
        );
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Builds a square-or-tall matrix from equal-length columns.
    pub fn from_columns(columns: &[Vec<f64>]) -> Self {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        assert!(columns.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = Self::zeros(r, c);
        for (j, col) in columns.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        debug_assert!(value.is_finite());
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols, "vector length must match columns");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn scale(&self, factor: f64) -> DenseMatrix {
        DenseMatrix::new(
            self.rows,
            self.cols,
            self.data.iter().map(|x| x * factor).collect(),
        )
    }

    pub fn sub(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        DenseMatrix::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Largest entry in absolute value.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    /// Debug interchange format: `rows cols` on the first line, then one row
    /// per line in shortest round-trip decimal.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x}")).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut header: Option<(usize, usize)> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            if header.is_none() {
                let parse = |field: Option<&str>| -> Result<usize> {
                    field
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| Error::Parse {
                            line: lineno + 1,
                            msg: "expected `rows cols` header".into(),
                        })
                };
                header = Some((parse(fields.next())?, parse(fields.next())?));
                continue;
            }
            for field in fields {
                let x: f64 = field.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("invalid number {field:?}"),
                })?;
                if !x.is_finite() {
                    return Err(Error::NonFiniteEntry {
                        row: values.len() / header.unwrap().1,
                        col: values.len() % header.unwrap().1,
                    });
                }
                values.push(x);
            }
        }
        let (rows, cols) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        if values.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries, found {}",
                rows * cols,
                values.len()
            )));
        }
        Ok(Self::new(rows, cols, values))
    }
}
