//! The Hamming and ternary Golay number-theoretic transforms.
//!
//! Both transforms are stored as compile-time constants. The Golay matrix is
//! kept in signed `{-1, 0, +1}` form, which is what the addition-only kernel
//! consumes, and converted to residues `{0, 1, 2}` for the generic routines.
//!
//! The Golay matrix as commonly printed carries two entry errors in column 5
//! (rows 4 and 9). With those entries the invariant space is not the extended
//! ternary Golay code (it contains weight-5 words). [`GOLAY_EG1_CORRECTIONS`]
//! records the two fixes; [`golay_ntt_matrix`] applies them and
//! [`golay_ntt_matrix_as_printed`] keeps the literal for comparison. Every
//! published transform pair and invariant has `x_5 = 0`, so both versions
//! reproduce them.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gfield::{FieldElement, Prime, Word};
use crate::modlinalg::Matrix;

/// 7x7 binary Hamming NTT.
pub const HAMMING_NTT: [[u8; 7]; 7] = [
    [0, 1, 0, 1, 1, 0, 0],
    [1, 0, 1, 0, 0, 1, 0],
    [1, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
];

/// 12x12 ternary Golay NTT exactly as printed, signed form.
pub const GOLAY_EG1_PRINTED_SIGNED: [[i8; 12]; 12] = [
    [1, -1, -1, -1, -1, -1, 1, 0, 0, 0, 0, 0],
    [-1, 1, -1, 1, 1, -1, 0, 1, 0, 0, 0, 0],
    [-1, -1, 1, -1, 1, 1, 0, 0, 1, 0, 0, 0],
    [-1, 1, -1, 1, -1, 1, 0, 0, 0, 1, 0, 0],
    [-1, 1, 1, -1, 1, 1, 0, 0, 0, 0, 1, 0],
    [-1, -1, 1, 1, -1, 1, 0, 0, 0, 0, 0, 1],
    [-1, -1, 1, 0, 0, 1, -1, 1, 0, 0, 0, 0],
    [-1, 1, -1, 1, 0, 0, 1, 1, 1, 0, 0, 0],
    [-1, 0, 1, -1, 1, 0, 1, 0, 1, 1, 0, 0],
    [-1, 0, 0, 1, -1, 0, 1, 0, 0, 1, 1, 0],
    [-1, 1, 0, 0, 1, -1, 1, 0, 0, 0, 1, 1],
    [1, -1, -1, 0, -1, 0, 0, 1, 1, 0, 0, 1],
];

/// `(row, col, corrected signed value)` for the printed Golay matrix.
pub const GOLAY_EG1_CORRECTIONS: [(usize, usize, i8); 2] = [(4, 5, -1), (9, 5, 1)];

/// Canonical 12x12 Golay NTT, signed form. Its fixed space is the extended
/// ternary Golay code.
pub const GOLAY_EG1_SIGNED: [[i8; 12]; 12] =
    apply_corrections(GOLAY_EG1_PRINTED_SIGNED, &GOLAY_EG1_CORRECTIONS);

const fn apply_corrections(
    mut m: [[i8; 12]; 12],
    fixes: &[(usize, usize, i8)],
) -> [[i8; 12]; 12] {
    let mut i = 0;
    while i < fixes.len() {
        let (r, c, v) = fixes[i];
        m[r][c] = v;
        i += 1;
    }
    m
}

fn gf(p: u32) -> Prime {
    Prime::new(p).expect("built-in modulus is prime")
}

fn signed_to_matrix<const N: usize>(p: u32, rows: &[[i8; N]; N]) -> Matrix {
    let rows: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i64).collect())
        .collect();
    Matrix::from_signed_rows(gf(p), &rows).expect("built-in matrix is well formed")
}

pub fn hamming_ntt_matrix() -> &'static Matrix {
    static M: OnceLock<Matrix> = OnceLock::new();
    M.get_or_init(|| {
        let rows = HAMMING_NTT.map(|r| r.map(|v| v as i8));
        signed_to_matrix(2, &rows)
    })
}

/// The canonical Golay NTT over GF(3), entries in `{0, 1, 2}`.
pub fn golay_ntt_matrix() -> &'static Matrix {
    static M: OnceLock<Matrix> = OnceLock::new();
    M.get_or_init(|| signed_to_matrix(3, &GOLAY_EG1_SIGNED))
}

pub fn golay_ntt_matrix_as_printed() -> &'static Matrix {
    static M: OnceLock<Matrix> = OnceLock::new();
    M.get_or_init(|| signed_to_matrix(3, &GOLAY_EG1_PRINTED_SIGNED))
}

/// A transform selector: one of the built-ins or a user matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transform {
    Hamming,
    Golay,
    GolayAsPrinted,
    Custom(Matrix),
}

impl Transform {
    /// Looks up a built-in by its CLI name.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "hamming" => Some(Self::Hamming),
            "golay" => Some(Self::Golay),
            "golay-printed" => Some(Self::GolayAsPrinted),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Hamming => "hamming",
            Self::Golay => "golay",
            Self::GolayAsPrinted => "golay-printed",
            Self::Custom(_) => "custom",
        }
    }

    pub fn matrix(&self) -> &Matrix {
        match self {
            Self::Hamming => hamming_ntt_matrix(),
            Self::Golay => golay_ntt_matrix(),
            Self::GolayAsPrinted => golay_ntt_matrix_as_printed(),
            Self::Custom(m) => m,
        }
    }

    pub fn apply(&self, x: &Word) -> Result<Word> {
        self.matrix().mat_vec(x)
    }
}

/// Golay NTT using only additions and subtractions over the signed matrix.
pub fn apply_addition_only(x: &Word) -> Result<Word> {
    if x.modulus().get() != 3 {
        return Err(Error::ModulusMismatch {
            left: 3,
            right: x.modulus().get(),
        });
    }
    accumulate_signed(&GOLAY_EG1_SIGNED, x)
}

/// `y_i = sum_{j: s_ij = +1} x_j - sum_{j: s_ij = -1} x_j`, reduced once at the end.
pub fn accumulate_signed<const N: usize>(signed: &[[i8; N]; N], x: &Word) -> Result<Word> {
    if x.len() != N {
        return Err(Error::DimensionMismatch {
            expected: N,
            actual: x.len(),
        });
    }
    let p = x.modulus();
    let xs = x.symbols();
    let out = signed
        .iter()
        .map(|row| {
            let mut acc: i64 = 0;
            for (&s, &v) in row.iter().zip(xs) {
                match s {
                    1 => acc += v as i64,
                    -1 => acc -= v as i64,
                    _ => {}
                }
            }
            p.reduce(acc)
        })
        .collect();
    Word::new(p, out)
}

/// An eigenvalue and the canonical basis of its eigenvectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSpace {
    pub eigenvalue: FieldElement,
    pub basis: Vec<Word>,
}

impl EigenSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_matrix(&self) -> Result<Matrix> {
        Matrix::from_words(&self.basis)
    }
}

fn eigenspace(t: &Matrix, lambda: FieldElement) -> Result<EigenSpace> {
    let basis = t.shift(lambda)?.null_space();
    Ok(EigenSpace {
        eigenvalue: lambda,
        basis,
    })
}

/// Sweeps every `lambda` in GF(p) and keeps the nontrivial eigenspaces, ascending.
pub fn eigen_spectrum(t: &Matrix) -> Result<Vec<EigenSpace>> {
    let p = t.modulus();
    let mut out = Vec::new();
    for v in 0..p.get() {
        let space = eigenspace(t, FieldElement::in_field(v, p))?;
        if space.dimension() > 0 {
            out.push(space);
        }
    }
    Ok(out)
}

/// The `lambda = 1` eigenspace; the basis may be empty.
pub fn fixed_space(t: &Matrix) -> Result<EigenSpace> {
    eigenspace(t, FieldElement::one(t.modulus()))
}
