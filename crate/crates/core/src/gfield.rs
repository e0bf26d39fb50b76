//! Arithmetic in the prime field GF(p) and words (finite sequences) over it.
//!
//! Residues are stored as plain `u32` values in `0..p`. The modulus is carried
//! as a validated [`Prime`], so every [`FieldElement`] and [`Word`] knows the
//! field it lives in and mixing fields is reported as an error instead of
//! silently wrapping.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A prime modulus, checked by trial division at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(Self(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: u32) -> Result<u32> {
        let a = a % self.0;
        if a == 0 {
            return Err(Error::DivisionByZero(self.0));
        }
        let (mut r0, mut r1) = (self.0 as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce(t0))
    }

    fn check_symbol(self, value: u32, position: usize) -> Result<u32> {
        if value < self.0 {
            Ok(value)
        } else {
            Err(Error::InvalidDigit {
                symbol: value.to_string(),
                position,
                modulus: self.0,
            })
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn same_field(a: Prime, b: Prime) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ModulusMismatch {
            left: a.get(),
            right: b.get(),
        })
    }
}

/// A single residue of GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: Prime,
}

impl FieldElement {
    /// Builds `value mod p`. Fails if `p` is not prime.
    pub fn new(value: u32, p: u32) -> Result<Self> {
        let modulus = Prime::new(p)?;
        Ok(Self::in_field(value, modulus))
    }

    pub fn in_field(value: u32, modulus: Prime) -> Self {
        Self {
            value: value % modulus.get(),
            modulus,
        }
    }

    pub fn zero(modulus: Prime) -> Self {
        Self { value: 0, modulus }
    }

    pub fn one(modulus: Prime) -> Self {
        Self::in_field(1, modulus)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn try_add(self, other: Self) -> Result<Self> {
        same_field(self.modulus, other.modulus)?;
        Ok(Self {
            value: self.modulus.add(self.value, other.value),
            modulus: self.modulus,
        })
    }

    pub fn try_sub(self, other: Self) -> Result<Self> {
        self.try_add(-other)
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        same_field(self.modulus, other.modulus)?;
        Ok(Self {
            value: self.modulus.mul(self.value, other.value),
            modulus: self.modulus,
        })
    }

    pub fn inv(self) -> Result<Self> {
        Ok(Self {
            value: self.modulus.inv(self.value)?,
            modulus: self.modulus,
        })
    }
}

impl Neg for FieldElement {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// A finite sequence `[x_0, ..., x_{N-1}]` over GF(p). Immutable once built.
///
/// The canonical text form for `p <= 10` is one base-`p` digit per symbol with
/// `x_0` leftmost (`1011101`). Larger fields use comma-separated decimals
/// (`0,11,3`), which are also accepted for small fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    modulus: Prime,
    symbols: Vec<u32>,
}

impl Word {
    pub fn new(modulus: Prime, symbols: Vec<u32>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyWord);
        }
        for (k, &s) in symbols.iter().enumerate() {
            modulus.check_symbol(s, k)?;
        }
        Ok(Self { modulus, symbols })
    }

    /// Reduces arbitrary integers into the field. Used for signed inputs.
    pub fn from_signed(modulus: Prime, values: &[i64]) -> Result<Self> {
        Self::new(modulus, values.iter().map(|&v| modulus.reduce(v)).collect())
    }

    pub fn zeros(modulus: Prime, len: usize) -> Result<Self> {
        Self::new(modulus, vec![0; len])
    }

    /// Unit vector `e_k` of length `len`.
    pub fn unit(modulus: Prime, len: usize, k: usize) -> Result<Self> {
        if k >= len {
            return Err(Error::DimensionMismatch {
                expected: len,
                actual: k,
            });
        }
        let mut symbols = vec![0; len];
        symbols[k] = 1;
        Self::new(modulus, symbols)
    }

    /// The word whose digit string is `index` written in base `p` with `len`
    /// digits, `x_0` being the most significant digit.
    pub fn from_index(modulus: Prime, len: usize, mut index: u64) -> Result<Self> {
        let p = modulus.get() as u64;
        let mut symbols = vec![0u32; len];
        for slot in symbols.iter_mut().rev() {
            *slot = (index % p) as u32;
            index /= p;
        }
        if index != 0 {
            return Err(Error::Usage(format!(
                "index does not fit in {len} base-{p} digits"
            )));
        }
        Self::new(modulus, symbols)
    }

    /// Every word of length `len` over GF(p), in ascending [`Word::from_index`] order.
    pub fn all(modulus: Prime, len: usize) -> impl Iterator<Item = Word> {
        let total = (modulus.get() as u64).checked_pow(len as u32).unwrap_or(u64::MAX);
        (0..total).map(move |i| Word::from_index(modulus, len, i).expect("index in range"))
    }

    pub fn parse(text: &str, p: u32) -> Result<Self> {
        let modulus = Prime::new(p)?;
        parse_in_field(text, modulus)
    }

    #[inline]
    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false; words have at least one symbol.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    #[inline]
    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn get(&self, k: usize) -> Option<FieldElement> {
        self.symbols
            .get(k)
            .map(|&v| FieldElement::in_field(v, self.modulus))
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&s| s == 0)
    }

    /// Number of nonzero symbols.
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    pub fn distance(&self, other: &Word) -> Result<usize> {
        self.check_compatible(other)?;
        Ok(self
            .symbols
            .iter()
            .zip(&other.symbols)
            .filter(|(a, b)| a != b)
            .count())
    }

    pub fn add(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        let p = self.modulus;
        Ok(Word {
            modulus: p,
            symbols: self
                .symbols
                .iter()
                .zip(&other.symbols)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        let p = self.modulus;
        Ok(Word {
            modulus: p,
            symbols: self
                .symbols
                .iter()
                .zip(&other.symbols)
                .map(|(&a, &b)| p.sub(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: FieldElement) -> Result<Word> {
        same_field(self.modulus, c.modulus())?;
        let p = self.modulus;
        Ok(Word {
            modulus: p,
            symbols: self.symbols.iter().map(|&a| p.mul(a, c.value())).collect(),
        })
    }

    /// Cyclic rotation moving symbol `k` to position `(k + r) mod N`.
    pub fn rotate(&self, r: usize) -> Word {
        let mut symbols = self.symbols.clone();
        let n = symbols.len();
        symbols.rotate_right(r % n);
        Word {
            modulus: self.modulus,
            symbols,
        }
    }

    pub(crate) fn check_compatible(&self, other: &Word) -> Result<()> {
        same_field(self.modulus, other.modulus)?;
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn from_parts_unchecked(modulus: Prime, symbols: Vec<u32>) -> Word {
        debug_assert!(!symbols.is_empty());
        debug_assert!(symbols.iter().all(|&s| s < modulus.get()));
        Word { modulus, symbols }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus.get() <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (k, s) in self.symbols.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

fn parse_in_field(text: &str, modulus: Prime) -> Result<Word> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyWord);
    }
    let symbols = if text.contains(',') || modulus.get() > 10 {
        text.split(',')
            .enumerate()
            .map(|(k, tok)| {
                let tok = tok.trim();
                let v = u32::from_str(tok).map_err(|_| Error::InvalidDigit {
                    symbol: tok.to_string(),
                    position: k,
                    modulus: modulus.get(),
                })?;
                modulus.check_symbol(v, k)
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        text.chars()
            .enumerate()
            .map(|(k, ch)| match ch.to_digit(10) {
                Some(v) if v < modulus.get() => Ok(v),
                _ => Err(Error::InvalidDigit {
                    symbol: ch.to_string(),
                    position: k,
                    modulus: modulus.get(),
                }),
            })
            .collect::<Result<Vec<_>>>()?
    };
    Word::new(modulus, symbols)
}

/// Parses a word-list file: one word per line, `#` comments and blank lines skipped.
pub fn parse_word_list(text: &str, p: u32) -> Result<Vec<Word>> {
    let modulus = Prime::new(p)?;
    text.lines()
        .enumerate()
        .map(|(i, line)| (i, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .map(|(i, line)| {
            parse_in_field(line, modulus).map_err(|e| Error::Usage(format!("line {}: {e}", i + 1)))
        })
        .collect()
}

/// Serializes words in the word-list format, with optional leading comment lines.
pub fn format_word_list<'a>(comments: &[&str], words: impl IntoIterator<Item = &'a Word>) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    for w in words {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const PRIMES: [u32; 4] = [2, 3, 5, 7];

    fn fe(v: u32, p: u32) -> FieldElement {
        FieldElement::new(v, p).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(fe(1, 2).try_add(fe(1, 2)).unwrap().value(), 0);
        assert_eq!(fe(2, 3).try_add(fe(2, 3)).unwrap().value(), 4 % 3);
        for p in PRIMES {
            for x in 0..p {
                assert_eq!(fe(0, p).try_add(fe(x, p)).unwrap().value(), x);
            }
        }
    }

    #[test]
    fn neg_examples() {
        assert_eq!((-fe(1, 3)).value(), 2);
        assert_eq!((-fe(1, 2)).value(), 1);
        for p in PRIMES {
            assert_eq!((-fe(0, p)).value(), 0);
        }
    }

    #[test]
    fn mul_examples() {
        assert_eq!(fe(2, 3).try_mul(fe(2, 3)).unwrap().value(), 1);
        for p in PRIMES {
            for x in 0..p {
                assert_eq!(fe(1, p).try_mul(fe(x, p)).unwrap().value(), x);
                assert_eq!(fe(0, p).try_mul(fe(x, p)).unwrap().value(), 0);
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(fe(2, 3).inv().unwrap().value(), 2);
        assert_eq!(fe(2, 5).inv().unwrap().value(), 3);
        for p in PRIMES {
            assert_eq!(fe(1, p).inv().unwrap().value(), 1);
        }
        assert_eq!(fe(0, 5).inv(), Err(Error::DivisionByZero(5)));
    }

    #[test]
    fn inverse_matches_exhaustive_search() {
        for p in PRIMES {
            for a in 1..p {
                let brute = (1..p).find(|b| (a * b) % p == 1).unwrap();
                assert_eq!(fe(a, p).inv().unwrap().value(), brute);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in PRIMES {
            let els: Vec<_> = (0..p).map(|v| fe(v, p)).collect();
            let zero = fe(0, p);
            let one = fe(1, p);
            for &a in &els {
                assert_eq!(a.try_add(-a).unwrap(), zero);
                assert_eq!(a.try_add(zero).unwrap(), a);
                assert_eq!(a.try_mul(one).unwrap(), a);
                if !a.is_zero() {
                    assert_eq!(a.try_mul(a.inv().unwrap()).unwrap(), one);
                }
                for &b in &els {
                    assert_eq!(a.try_add(b).unwrap(), b.try_add(a).unwrap());
                    assert_eq!(a.try_mul(b).unwrap(), b.try_mul(a).unwrap());
                    for &c in &els {
                        let ab_c = a.try_add(b).unwrap().try_add(c).unwrap();
                        let a_bc = a.try_add(b.try_add(c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let ab_c = a.try_mul(b).unwrap().try_mul(c).unwrap();
                        let a_bc = a.try_mul(b.try_mul(c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let lhs = a.try_mul(b.try_add(c).unwrap()).unwrap();
                        let rhs = a.try_mul(b).unwrap().try_add(a.try_mul(c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn mismatched_moduli_rejected() {
        assert_eq!(
            fe(1, 2).try_add(fe(1, 3)),
            Err(Error::ModulusMismatch { left: 2, right: 3 })
        );
        assert!(fe(1, 2).try_mul(fe(1, 3)).is_err());
    }

    #[test]
    fn non_prime_modulus_rejected() {
        for n in [0, 1, 4, 6, 9, 12] {
            assert_eq!(Prime::new(n), Err(Error::NotPrime(n)));
        }
        assert!(Prime::new(11).is_ok());
    }

    #[test]
    fn parse_examples() {
        let w = Word::parse("1011101", 2).unwrap();
        assert_eq!(w.symbols(), &[1, 0, 1, 1, 1, 0, 1]);
        let w = Word::parse("102010022101", 3).unwrap();
        assert_eq!(w.len(), 12);
        assert_eq!(w.symbols()[..3], [1, 0, 2]);
        let w = Word::parse("0000000", 2).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Word::parse("", 2), Err(Error::EmptyWord));
        assert_eq!(
            Word::parse("1021", 2),
            Err(Error::InvalidDigit {
                symbol: "2".into(),
                position: 2,
                modulus: 2
            })
        );
        assert!(Word::parse("10x", 3).is_err());
        assert!(Word::parse("0,11,13", 13).is_err());
        assert!(Word::parse("101", 4).is_err());
    }

    #[test]
    fn comma_form() {
        let w = Word::parse("0,11,3", 13).unwrap();
        assert_eq!(w.symbols(), &[0, 11, 3]);
        assert_eq!(w.to_string(), "0,11,3");
        assert_eq!(Word::parse("1, 0, 2", 3).unwrap().to_string(), "102");
    }

    #[test]
    fn from_index_is_msd_first() {
        let p = Prime::new(2).unwrap();
        assert_eq!(Word::from_index(p, 7, 1).unwrap().to_string(), "0000001");
        assert_eq!(Word::from_index(p, 7, 93).unwrap().to_string(), "1011101");
        assert!(Word::from_index(p, 7, 128).is_err());
        assert_eq!(Word::all(p, 7).count(), 128);
    }

    #[test]
    fn rotate_moves_symbols_forward() {
        let w = Word::parse("1100000", 2).unwrap();
        assert_eq!(w.rotate(2).to_string(), "0011000");
        assert_eq!(w.rotate(6).to_string(), "1000001");
    }

    #[test]
    fn word_list_parsing() {
        let text = "# selected\n\n1011101\n  0000101 \n# trailing\n";
        let words = parse_word_list(text, 2).unwrap();
        assert_eq!(words.len(), 2);
        assert_eq!(words[1].to_string(), "0000101");
        assert!(matches!(parse_word_list("101\n12\n", 2), Err(Error::Usage(m)) if m.starts_with("line 2")));
        let out = format_word_list(&["two words"], &words);
        assert_eq!(out, "# two words\n1011101\n0000101\n");
        assert_eq!(parse_word_list(&out, 2).unwrap(), words);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn format_parse_round_trip(p in prop::sample::select(vec![2u32, 3, 5, 7, 11, 13]),
                                       raw in prop::collection::vec(any::<u32>(), 1..20)) {
                let modulus = Prime::new(p).unwrap();
                let w = Word::new(modulus, raw.iter().map(|v| v % p).collect()).unwrap();
                let s = w.to_string();
                let back = Word::parse(&s, p).unwrap();
                prop_assert_eq!(back.to_string(), s);
                prop_assert_eq!(back, w);
            }
        }
    }
}
