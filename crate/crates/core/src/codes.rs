//! Linear block codes over GF(p) with brute-force parameters.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gfield::{Prime, Word};
use crate::modlinalg::Matrix;
use crate::ntt::{fixed_space, golay_ntt_matrix, hamming_ntt_matrix};

/// Upper bound on `p^k` for exhaustive enumeration.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// A linear code given by a full-rank generator matrix (k x n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: Matrix,
}

impl LinearCode {
    pub fn new(generator: Matrix) -> Result<Self> {
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(Error::DegenerateCode(format!(
                "generator has {} rows but rank {rank}",
                generator.rows()
            )));
        }
        Ok(Self { generator })
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn modulus(&self) -> Prime {
        self.generator.modulus()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// `p^k`.
    pub fn size(&self) -> u128 {
        (self.modulus().get() as u128)
            .checked_pow(self.dimension() as u32)
            .unwrap_or(u128::MAX)
    }

    fn check_capacity(&self) -> Result<()> {
        let count = self.size();
        if count > ENUMERATION_LIMIT {
            Err(Error::Capacity {
                count,
                limit: ENUMERATION_LIMIT,
            })
        } else {
            Ok(())
        }
    }

    /// Every codeword `u G`, with messages `u` in lexicographic order
    /// (last coordinate fastest).
    pub fn codewords(&self) -> Result<Codewords<'_>> {
        self.check_capacity()?;
        Ok(Codewords {
            code: self,
            message: Some(vec![0; self.dimension()]),
        })
    }

    pub fn encode(&self, message: &[u32]) -> Result<Word> {
        if message.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                actual: message.len(),
            });
        }
        let p = self.modulus();
        let n = self.length();
        let mut out = vec![0u32; n];
        for (r, &u) in message.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (slot, &g) in out.iter_mut().zip(self.generator.row_slice(r)) {
                *slot = p.add(*slot, p.mul(u % p.get(), g));
            }
        }
        Word::new(p, out)
    }

    /// Smallest weight among the nonzero codewords.
    pub fn minimum_distance(&self) -> Result<usize> {
        Ok(self
            .codewords()?
            .map(|w| w.weight())
            .filter(|&wt| wt > 0)
            .min()
            .unwrap_or(0))
    }

    /// Entry `i` counts the codewords of Hamming weight `i`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.length() + 1];
        for w in self.codewords()? {
            dist[w.weight()] += 1;
        }
        Ok(dist)
    }

    pub fn is_codeword(&self, w: &Word) -> Result<bool> {
        self.generator.spans(w)
    }
}

/// Iterator returned by [`LinearCode::codewords`].
pub struct Codewords<'a> {
    code: &'a LinearCode,
    message: Option<Vec<u32>>,
}

impl Iterator for Codewords<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let msg = self.message.as_mut()?;
        let word = self.code.encode(msg).expect("message has code dimension");
        let p = self.code.modulus().get();
        let mut done = true;
        for d in msg.iter_mut().rev() {
            *d += 1;
            if *d < p {
                done = false;
                break;
            }
            *d = 0;
        }
        if done {
            self.message = None;
        }
        Some(word)
    }
}

/// Generator of the binary Hamming code H(7,4,3).
pub fn hamming_generator() -> &'static Matrix {
    static G: OnceLock<Matrix> = OnceLock::new();
    G.get_or_init(|| {
        let rows: Vec<Word> = ["1100001", "1110010", "1010100", "0111000"]
            .iter()
            .map(|s| Word::parse(s, 2).expect("literal"))
            .collect();
        Matrix::from_words(&rows).expect("literal")
    })
}

/// The code whose generator is the canonical invariant basis of `t`.
pub fn code_from_fixed_space(t: &Matrix) -> Result<LinearCode> {
    let space = fixed_space(t)?;
    if space.basis.is_empty() {
        return Err(Error::DegenerateCode(
            "transform has no nonzero invariant words".into(),
        ));
    }
    LinearCode::new(space.basis_matrix()?)
}

pub fn hamming_code() -> LinearCode {
    LinearCode::new(hamming_generator().clone()).expect("printed generator has full rank")
}

/// The extended ternary Golay code, recovered as the invariant space of the Golay NTT.
pub fn golay_code() -> LinearCode {
    code_from_fixed_space(golay_ntt_matrix()).expect("Golay NTT has invariants")
}

/// The code recovered from the Hamming NTT's invariants.
pub fn hamming_fixed_code() -> LinearCode {
    code_from_fixed_space(hamming_ntt_matrix()).expect("Hamming NTT has invariants")
}
