//! Dense linear algebra over GF(p).
//!
//! Everything here is exact: plain Gauss-Jordan elimination with field
//! inverses for pivot normalisation. Sizes in this crate stay below 16x16 so
//! no blocking or fraction-free tricks are needed.

use std::fmt;

use crate::error::{Error, Result};
use crate::gfield::{FieldElement, Prime, Word};

/// Row-major matrix of residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    modulus: Prime,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

/// Reduced row-echelon form plus rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrefResult {
    pub rref: Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

impl Matrix {
    pub fn new(modulus: Prime, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= modulus.get()) {
            return Err(Error::MatrixFormat(format!(
                "entry {bad} out of range for GF({modulus})"
            )));
        }
        Ok(Self {
            modulus,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from signed integers, reducing each into the field.
    pub fn from_signed_rows<R: AsRef<[i64]>>(modulus: Prime, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: r.len(),
                });
            }
            entries.extend(r.iter().map(|&v| modulus.reduce(v)));
        }
        Self::new(modulus, rows.len(), cols, entries)
    }

    /// Stacks words as rows. All words must share length and field.
    pub fn from_words(words: &[Word]) -> Result<Self> {
        let first = words.first().ok_or(Error::EmptyMatrix)?;
        let mut entries = Vec::with_capacity(words.len() * first.len());
        for w in words {
            first.check_compatible(w)?;
            entries.extend_from_slice(w.symbols());
        }
        Self::new(first.modulus(), words.len(), first.len(), entries)
    }

    pub fn identity(modulus: Prime, n: usize) -> Result<Self> {
        let mut m = Self::zeros(modulus, n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        Ok(m)
    }

    pub fn zeros(modulus: Prime, rows: usize, cols: usize) -> Result<Self> {
        Self::new(modulus, rows, cols, vec![0; rows * cols])
    }

    #[inline]
    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn row_slice(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row(&self, r: usize) -> Word {
        Word::from_parts_unchecked(self.modulus, self.row_slice(r).to_vec())
    }

    pub fn row_words(&self) -> Vec<Word> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    /// Returns a copy with a single entry replaced.
    pub fn with_entry(&self, r: usize, c: usize, value: u32) -> Result<Self> {
        if r >= self.rows || c >= self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                actual: r * self.cols + c,
            });
        }
        let mut out = self.clone();
        out.entries[r * self.cols + c] = value % self.modulus.get();
        Ok(out)
    }

    fn check_field(&self, other: Prime) -> Result<()> {
        if self.modulus == other {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.get(),
            })
        }
    }

    /// `y_i = sum_j M[i][j] x_j mod p`.
    pub fn mat_vec(&self, x: &Word) -> Result<Word> {
        self.check_field(x.modulus())?;
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: x.len(),
            });
        }
        let p = self.modulus.get() as u64;
        let xs = x.symbols();
        let out = (0..self.rows)
            .map(|r| {
                let acc: u64 = self
                    .row_slice(r)
                    .iter()
                    .zip(xs)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (acc % p) as u32
            })
            .collect();
        Ok(Word::from_parts_unchecked(self.modulus, out))
    }

    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other.modulus)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: other.rows,
            });
        }
        let p = self.modulus.get() as u64;
        let mut entries = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            for j in 0..other.cols {
                let acc: u64 = (0..self.cols)
                    .map(|k| self.get(i, k) as u64 * other.get(k, j) as u64)
                    .sum();
                entries[i * other.cols + j] = (acc % p) as u32;
            }
        }
        Matrix::new(self.modulus, self.rows, other.cols, entries)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other.modulus)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                actual: other.rows * other.cols,
            });
        }
        let p = self.modulus;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| p.sub(a, b))
            .collect();
        Matrix::new(p, self.rows, self.cols, entries)
    }

    /// `M - lambda * I` for square `M`.
    pub fn shift(&self, lambda: FieldElement) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        self.check_field(lambda.modulus())?;
        let mut out = self.clone();
        for i in 0..self.rows {
            let e = &mut out.entries[i * self.cols + i];
            *e = self.modulus.sub(*e, lambda.value());
        }
        Ok(out)
    }

    /// Gauss-Jordan elimination. Pivot: first nonzero entry at or below the
    /// current row in the current column, columns scanned left to right.
    pub fn rref(&self) -> RrefResult {
        let p = self.modulus;
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.entries.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = p.inv(m[r * cols + c]).expect("pivot is nonzero");
            for j in 0..cols {
                m[r * cols + j] = p.mul(m[r * cols + j], inv);
            }
            for i in 0..rows {
                let f = m[i * cols + c];
                if i == r || f == 0 {
                    continue;
                }
                for j in 0..cols {
                    let v = p.mul(f, m[r * cols + j]);
                    m[i * cols + j] = p.sub(m[i * cols + j], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        RrefResult {
            rref: Matrix {
                modulus: p,
                rows,
                cols,
                entries: m,
            },
            rank: pivots.len(),
            pivot_columns: pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical kernel basis: one vector per free column in ascending order,
    /// with that free variable set to 1 and the other free variables 0.
    pub fn null_space(&self) -> Vec<Word> {
        let RrefResult {
            rref, pivot_columns, ..
        } = self.rref();
        let p = self.modulus;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_columns {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1;
                for (i, &pc) in pivot_columns.iter().enumerate() {
                    v[pc] = p.neg(rref.get(i, free));
                }
                Word::from_parts_unchecked(p, v)
            })
            .collect()
    }

    /// True iff both matrices span the same row space (equal canonical RREFs).
    pub fn same_row_space(&self, other: &Matrix) -> Result<bool> {
        self.check_field(other.modulus)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: other.cols,
            });
        }
        let a = self.rref();
        let b = other.rref();
        Ok(a.rank == b.rank
            && a.rref.entries[..a.rank * self.cols] == b.rref.entries[..b.rank * self.cols])
    }

    /// True iff `w` lies in the row space.
    pub fn spans(&self, w: &Word) -> Result<bool> {
        self.check_field(w.modulus())?;
        if w.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: w.len(),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(w.symbols());
        let stacked = Matrix::new(self.modulus, self.rows + 1, self.cols, entries)?;
        Ok(stacked.rank() == self.rank())
    }

    /// Parses the text format: a `p=<modulus>` header line, then rows
    /// separated by `;` with entries separated by whitespace.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::MatrixFormat("missing header".into()))?;
        let p = header
            .strip_prefix("p=")
            .and_then(|v| v.trim().parse::<u32>().ok())
            .ok_or_else(|| Error::MatrixFormat(format!("bad header {header:?}, expected p=<modulus>")))?;
        let modulus = Prime::new(p)?;
        let body: String = lines.collect::<Vec<_>>().join(" ");
        let rows: Vec<Vec<i64>> = body
            .split(';')
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.split_whitespace()
                    .map(|tok| {
                        tok.parse::<i64>()
                            .map_err(|_| Error::MatrixFormat(format!("bad entry {tok:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        if rows.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        for r in &rows {
            for &v in r {
                if v < 0 || v >= p as i64 {
                    return Err(Error::MatrixFormat(format!(
                        "entry {v} out of range for GF({p})"
                    )));
                }
            }
        }
        Self::from_signed_rows(modulus, &rows)
    }
}

impl fmt::Display for Matrix {
    /// The text format accepted by [`Matrix::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p={}", self.modulus)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row_slice(r).iter().map(u32::to_string).collect();
            f.write_str(&row.join(" "))?;
            if r + 1 < self.rows {
                f.write_str(";")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}
