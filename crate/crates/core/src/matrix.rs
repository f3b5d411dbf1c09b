use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major `rows x cols` matrix.
///
/// Columns are read as points of tropical projective space; rows index the
/// coordinate directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch {
                expected: c,
                found: rows.iter().map(Vec::len).find(|&l| l != c).unwrap_or(0),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<T>]) -> Result<Self> {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|col| col.len() != r) {
            return Err(Error::DimensionMismatch(r, columns.iter().map(Vec::len).find(|&l| l != r).unwrap_or(0)));
        }
        let mut entries = Vec::with_capacity(r * c);
        for i in 0..r {
            for col in columns {
                entries.push(col[i].clone());
            }
        }
        Self::new(r, c, entries)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|row| row.iter().map(|&v| T::from_i64(v)).collect()).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Columns as canonical points of tropical projective space.
    pub fn points(&self) -> Vec<ProjectivePoint<T>> {
        (0..self.cols).map(|j| ProjectivePoint::new(self.column(j))).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, entries }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn add_to_row(&mut self, i: usize, c: &T) {
        for j in 0..self.cols {
            let v = self.get(i, j).clone() + c.clone();
            self.set(i, j, v);
        }
    }

    pub fn add_to_column(&mut self, j: usize, c: &T) {
        for i in 0..self.rows {
            let v = self.get(i, j).clone() + c.clone();
            self.set(i, j, v);
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|v| v.clone() * k.clone())
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Point of tropical projective space `R^d / R(1,...,1)`, stored with its
/// first coordinate pinned to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint<T> {
    coords: Vec<T>,
}

impl<T: Scalar> ProjectivePoint<T> {
    /// Canonicalizes an affine representative.
    pub fn new(mut coords: Vec<T>) -> Self {
        if let Some(first) = coords.first().cloned() {
            for c in coords.iter_mut() {
                *c = c.clone() - first.clone();
            }
        }
        Self { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Self { coords: vec![T::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    /// `self + t * 1_support`, re-canonicalized.
    pub fn step(&self, support: Support, t: &T) -> Self {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| if support.contains(i) { c.clone() + t.clone() } else { c.clone() })
            .collect();
        Self::new(coords)
    }

    pub fn translate(&self, by: &ProjectivePoint<T>) -> Self {
        Self::new(self.coords.iter().zip(&by.coords).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn difference(&self, other: &ProjectivePoint<T>) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self { coords: self.coords.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    /// If `other - self` is a positive multiple of a 0/1 vector, returns that
    /// support together with the multiplier.
    pub fn direction_to(&self, other: &ProjectivePoint<T>) -> Option<(Support, T)> {
        let diff = other.difference(self);
        let coords = diff.coords();
        let lo = coords.iter().min()?.clone();
        let hi = coords.iter().max()?.clone();
        if lo == hi {
            return None;
        }
        let mut support = Support::EMPTY;
        for (i, c) in coords.iter().enumerate() {
            if *c == hi {
                support = support.with(i);
            } else if *c != lo {
                return None;
            }
        }
        Some((support, hi - lo))
    }
}

impl<T: Scalar> fmt::Display for ProjectivePoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Subset of coordinate directions, stored as a bitmask (bit `i` is direction `i+1`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Support(pub u64);

impl Support {
    pub const EMPTY: Support = Support(0);

    pub fn full(dim: usize) -> Self {
        if dim >= 64 {
            Support(u64::MAX)
        } else {
            Support((1u64 << dim) - 1)
        }
    }

    pub fn single(i: usize) -> Self {
        Support(1u64 << i)
    }

    pub fn with(self, i: usize) -> Self {
        Support(self.0 | (1u64 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Support) -> Self {
        Support(self.0 | other.0)
    }

    pub fn intersect(self, other: Support) -> Self {
        Support(self.0 & other.0)
    }

    pub fn complement(self, dim: usize) -> Self {
        Support(!self.0 & Support::full(dim).0)
    }

    pub fn is_subset(self, other: Support) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// 0/1 vector of length `dim`.
    pub fn indicator(self, dim: usize) -> Vec<u8> {
        (0..dim).map(|i| u8::from(self.contains(i))).collect()
    }
}

impl serde::Serialize for Support {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|i| i + 1))
    }
}

impl<'de> serde::Deserialize<'de> for Support {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let dirs = Vec::<usize>::deserialize(deserializer)?;
        dirs.into_iter().try_fold(Support::EMPTY, |acc, i| {
            if (1..=64).contains(&i) {
                Ok(acc.with(i - 1))
            } else {
                Err(serde::de::Error::custom(format!("direction {i} out of range")))
            }
        })
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dirs: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", dirs.join(","))
    }
}
