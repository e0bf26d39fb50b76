//! Self-contained checks of the published transform pairs, invariants and
//! code parameters. Used by the `verify` subcommand.

use std::fmt;

use crate::codes::{code_from_fixed_space, hamming_generator, LinearCode};
use crate::error::Result;
use crate::flowergeom::features;
use crate::gfield::{Prime, Word};
use crate::modlinalg::Matrix;
use crate::ntt::{
    apply_addition_only, fixed_space, golay_ntt_matrix, golay_ntt_matrix_as_printed,
    hamming_ntt_matrix,
};

pub const HAMMING_PAIR: (&str, &str) = ("0011000", "1111000");
pub const HAMMING_INVARIANT: &str = "1100001";
pub const GOLAY_PAIRS: [(&str, &str); 3] = [
    ("102010022101", "101021012210"),
    ("000000111221", "111221001210"),
    ("201100010110", "021220022122"),
];
pub const GOLAY_INVARIANTS: [&str; 3] = ["100000011111", "010000101221", "001000110122"];

/// Matrices under test. [`Subjects::default`] uses the built-ins.
#[derive(Debug, Clone)]
pub struct Subjects {
    pub hamming: Matrix,
    pub golay: Matrix,
    pub hamming_generator: Matrix,
}

impl Default for Subjects {
    fn default() -> Self {
        Self {
            hamming: hamming_ntt_matrix().clone(),
            golay: golay_ntt_matrix().clone(),
            hamming_generator: hamming_generator().clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.name)
        } else {
            write!(f, "{tag} {} ({})", self.name, self.detail)
        }
    }
}

fn check(name: impl Into<String>, body: impl FnOnce() -> Result<(bool, String)>) -> Check {
    let name = name.into();
    match body() {
        Ok((passed, detail)) => Check {
            name,
            passed,
            detail,
        },
        Err(e) => Check {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn pair_check(label: &str, t: &Matrix, p: u32, x: &str, y: &str) -> Check {
    check(format!("{label}: T*{x} = {y}"), || {
        let got = t.mat_vec(&Word::parse(x, p)?)?;
        Ok((got.to_string() == y, format!("got {got}")))
    })
}

fn fixed_code_check(label: &str, t: &Matrix, k: usize, d: usize) -> Check {
    check(format!("{label}: invariant code has k={k} d={d}"), || {
        let code = code_from_fixed_space(t)?;
        let got_d = code.minimum_distance()?;
        Ok((
            code.dimension() == k && got_d == d,
            format!("n={} k={} d={got_d}", code.length(), code.dimension()),
        ))
    })
}

fn isomorphism_check(label: &str, t: &Matrix, expected: u128) -> Check {
    check(format!("{label}: every invariant-code word is a fixed point"), || {
        let code = code_from_fixed_space(t)?;
        let mut count = 0u128;
        let mut bad = 0u128;
        for c in code.codewords()? {
            count += 1;
            if t.mat_vec(&c)? != c {
                bad += 1;
            }
        }
        Ok((
            bad == 0 && count == expected,
            format!("{count} codewords, {bad} moved"),
        ))
    })
}

/// Runs every check in a fixed order.
pub fn run(subjects: &Subjects) -> Vec<Check> {
    let h = &subjects.hamming;
    let g = &subjects.golay;
    let mut out = vec![
        pair_check("hamming", h, 2, HAMMING_PAIR.0, HAMMING_PAIR.1),
        pair_check("hamming", h, 2, HAMMING_INVARIANT, HAMMING_INVARIANT),
    ];
    out.extend(GOLAY_PAIRS.iter().map(|(x, y)| pair_check("golay", g, 3, x, y)));
    out.extend(GOLAY_INVARIANTS.iter().map(|x| pair_check("golay", g, 3, x, x)));

    out.push(check("hamming: fixed space has dim 4 and the row space of G", || {
        let fs = fixed_space(h)?;
        let same = match fs.basis_matrix() {
            Ok(b) => b.same_row_space(&subjects.hamming_generator)?,
            Err(_) => false,
        };
        Ok((fs.dimension() == 4 && same, format!("dim={}", fs.dimension())))
    }));
    out.push(check("hamming: each row of G is a fixed point", || {
        let mut moved = 0;
        for row in subjects.hamming_generator.row_words() {
            if h.mat_vec(&row)? != row {
                moved += 1;
            }
        }
        Ok((moved == 0, format!("{moved} of 4 rows moved")))
    }));
    out.push(check("hamming: generator code has d=3", || {
        let d = LinearCode::new(subjects.hamming_generator.clone())?.minimum_distance()?;
        Ok((d == 3, format!("d={d}")))
    }));
    out.push(fixed_code_check("golay", g, 6, 6));
    out.push(isomorphism_check("hamming", h, 16));
    out.push(isomorphism_check("golay", g, 729));

    out.push(check("golay: addition-only kernel agrees with the matrix product", || {
        let p3 = Prime::new(3)?;
        let mut inputs: Vec<Word> = Vec::new();
        for head in Word::all(p3, 6) {
            let mut a = head.symbols().to_vec();
            a.extend_from_slice(&[0; 6]);
            let mut b = vec![0; 6];
            b.extend_from_slice(head.symbols());
            inputs.push(Word::new(p3, a)?);
            inputs.push(Word::new(p3, b)?);
        }
        if let Ok(code) = code_from_fixed_space(g) {
            inputs.extend(code.codewords()?);
        }
        let mut mismatches = 0;
        for x in &inputs {
            if apply_addition_only(x)? != g.mat_vec(x)? {
                mismatches += 1;
            }
        }
        Ok((
            mismatches == 0,
            format!("{} words, {mismatches} mismatches", inputs.len()),
        ))
    }));

    out.push(check("geometry: 0000101 has only thorns (0 petals, 2 thorns)", || {
        let s = features(&Word::parse("0000101", 2)?);
        Ok((
            s.petals.is_empty() && s.thorns.len() == 2,
            format!("petals={} thorns={}", s.petals.len(), s.thorns.len()),
        ))
    }));
    out.push(check("geometry: 1010110 has thorns and petals (1 petal, 2 thorns)", || {
        let s = features(&Word::parse("1010110", 2)?);
        Ok((
            s.petals.len() == 1 && s.thorns.len() == 2,
            format!("petals={} thorns={}", s.petals.len(), s.thorns.len()),
        ))
    }));

    out.push(check("golay-printed: literal matrix reproduces all published pairs and invariants", || {
        let t = golay_ntt_matrix_as_printed();
        let mut ok = true;
        for (x, y) in GOLAY_PAIRS.iter().copied().chain(GOLAY_INVARIANTS.iter().map(|&x| (x, x))) {
            ok &= t.mat_vec(&Word::parse(x, 3)?)?.to_string() == y;
        }
        let d = code_from_fixed_space(t)?.minimum_distance()?;
        Ok((ok, format!("its invariant code has d={d}; canonical matrix corrects entries (4,5) and (9,5)")))
    }));
    out
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
