//! Dense matrices over a finite field: rank, kernel dimension, minors.

use std::fmt;

use crate::field::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    /// Panics on ragged input or elements of another field.
    pub fn from_rows(field: &Field, rows: &[Vec<FieldElement>]) -> Matrix {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (c, e) in row.iter().enumerate() {
                assert!(e.field() == field, "entry from another field");
                m.data[r * cols + c] = e.value();
            }
        }
        m
    }

    pub(crate) fn from_raw(field: &Field, rows: usize, cols: usize, data: Vec<u64>) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.field.wrap(self.data[r * self.cols + c])
    }

    pub(crate) fn get_raw(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: &FieldElement) {
        assert!(value.field() == &self.field);
        self.data[r * self.cols + c] = value.value();
    }

    pub fn row(&self, r: usize) -> Vec<FieldElement> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn select_columns(&self, columns: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * columns.len());
        for r in 0..self.rows {
            data.extend(columns.iter().map(|&c| self.data[r * self.cols + c]));
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols: columns.len(), data }
    }

    /// `v M` for a row vector `v` of length `rows`.
    pub fn left_multiply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        (0..self.cols)
            .map(|c| {
                let acc = v.iter().enumerate().fold(0u64, |acc, (r, x)| f.add(acc, f.mul(x.value(), self.data[r * self.cols + c])));
                f.wrap(acc)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank_raw(&self.field, self.rows, self.cols, self.data.clone())
    }

    pub fn kernel_dimension(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn is_nonsingular(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// Gaussian elimination on a row-major buffer, consumed in place.
pub(crate) fn rank_raw(f: &Field, rows: usize, cols: usize, mut a: Vec<u64>) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + c] != 0) else { continue };
        if pivot != rank {
            for k in 0..cols {
                a.swap(pivot * cols + k, rank * cols + k);
            }
        }
        let inv = f.inv(a[rank * cols + c]).expect("nonzero pivot");
        for r in rank + 1..rows {
            let factor = f.mul(a[r * cols + c], inv);
            if factor == 0 {
                continue;
            }
            for k in c..cols {
                a[r * cols + k] = f.sub(a[r * cols + k], f.mul(factor, a[rank * cols + k]));
            }
        }
        rank += 1;
    }
    rank
}
