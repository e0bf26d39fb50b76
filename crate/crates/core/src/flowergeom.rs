//! Flower geometry: words over GF(p) as constellations on the complex plane.
//!
//! Symbol `x_k` becomes the point `z_k = x_k * exp(2 pi i k / N)`: one radial
//! axis per position, the symbol value as the radius. Position 0 sits on the
//! positive real axis and positions advance counterclockwise. Two cyclically
//! adjacent nonzero symbols form a petal (the triangle origin, `z_k`,
//! `z_{k+1}`); a nonzero symbol with zero neighbours on both sides is a thorn.

use std::f64::consts::TAU;

use crate::gfield::Word;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstellationPoint {
    pub index: usize,
    pub radius: u32,
    pub angle: f64,
    pub re: f64,
    pub im: f64,
}

impl ConstellationPoint {
    pub fn is_origin(&self) -> bool {
        self.radius == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shade {
    Light,
    Dark,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlowerShape {
    pub word: Word,
    pub points: Vec<ConstellationPoint>,
    /// `(k, (k + 1) mod N)` for each petal, ascending by `k`.
    pub petals: Vec<(usize, usize)>,
    /// Isolated nonzero positions, ascending.
    pub thorns: Vec<usize>,
    /// Closed polyline through `z_0, ..., z_{N-1}, z_0` as point indices.
    pub outline: Vec<usize>,
}

impl FlowerShape {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Positions that receive a marker: every nonzero symbol.
    pub fn markers(&self) -> impl Iterator<Item = &ConstellationPoint> {
        self.points.iter().filter(|pt| !pt.is_origin())
    }
}

pub fn angle_of(k: usize, n: usize) -> f64 {
    TAU * k as f64 / n as f64
}

pub fn constellation(w: &Word) -> Vec<ConstellationPoint> {
    let n = w.len();
    w.symbols()
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let angle = angle_of(k, n);
            let r = x as f64;
            ConstellationPoint {
                index: k,
                radius: x,
                angle,
                re: r * angle.cos(),
                im: r * angle.sin(),
            }
        })
        .collect()
}

pub fn features(w: &Word) -> FlowerShape {
    let n = w.len();
    let s = w.symbols();
    let nz = |k: usize| s[k % n] != 0;
    let petals = (0..n)
        .filter(|&k| nz(k) && nz(k + 1))
        .map(|k| (k, (k + 1) % n))
        .collect();
    let thorns = (0..n)
        .filter(|&k| nz(k) && !nz(k + n - 1) && !nz(k + 1))
        .collect();
    let mut outline: Vec<usize> = (0..n).collect();
    outline.push(0);
    FlowerShape {
        word: w.clone(),
        points: constellation(w),
        petals,
        thorns,
        outline,
    }
}

/// Alternating light/dark shades, one per entry of `shape.petals`.
///
/// Each maximal cyclic run of consecutive petals starts light at its first
/// petal. A run that wraps past position `N - 1` starts at its cyclic first
/// petal. When every symbol is nonzero the single run starts at position 0,
/// and an odd `N` leaves one same-shade pair across the seam.
pub fn petal_shades(shape: &FlowerShape) -> Vec<Shade> {
    let n = shape.len();
    let has_petal = {
        let mut v = vec![false; n];
        for &(k, _) in &shape.petals {
            v[k] = true;
        }
        v
    };
    let mut shade_at = vec![None; n];
    if shape.petals.len() == n {
        for (k, slot) in shade_at.iter_mut().enumerate() {
            *slot = Some(if k % 2 == 0 { Shade::Light } else { Shade::Dark });
        }
    } else {
        for start in (0..n).filter(|&k| has_petal[k] && !has_petal[(k + n - 1) % n]) {
            let mut k = start;
            let mut i = 0;
            while has_petal[k] {
                shade_at[k] = Some(if i % 2 == 0 { Shade::Light } else { Shade::Dark });
                i += 1;
                k = (k + 1) % n;
            }
        }
    }
    shape
        .petals
        .iter()
        .map(|&(k, _)| shade_at[k].expect("every petal belongs to a run"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfield::Prime;
    use Shade::{Dark as D, Light as L};

    fn shape(s: &str, p: u32) -> FlowerShape {
        features(&Word::parse(s, p).unwrap())
    }

    // direct oracles over the bit pattern
    fn adjacent_pairs(s: &[u32]) -> usize {
        let n = s.len();
        (0..n).filter(|&k| s[k] != 0 && s[(k + 1) % n] != 0).count()
    }

    fn isolated(s: &[u32]) -> usize {
        let n = s.len();
        (0..n)
            .filter(|&k| s[k] != 0 && s[(k + n - 1) % n] == 0 && s[(k + 1) % n] == 0)
            .count()
    }

    #[test]
    fn constellation_examples() {
        let pts = constellation(&Word::parse("0000000", 2).unwrap());
        assert!(pts.iter().all(|p| p.re == 0.0 && p.im == 0.0));
        let pts = constellation(&Word::parse("1000000", 2).unwrap());
        assert_eq!((pts[0].re, pts[0].im), (1.0, 0.0));
        let pts = constellation(&Word::parse("0100", 5).unwrap());
        assert!(pts[1].re.abs() < 1e-12 && (pts[1].im - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ternary_points_lie_on_dodecagons() {
        for w in ["102010022101", "000000111221", "201100010110", "021220022122"] {
            for pt in constellation(&Word::parse(w, 3).unwrap()) {
                let modulus = pt.re.hypot(pt.im);
                assert!(modulus.abs() < 1e-12 || (modulus - 1.0).abs() < 1e-12 || (modulus - 2.0).abs() < 1e-12);
                if pt.radius > 0 {
                    let vertex = angle_of(pt.index, 12);
                    let r = pt.radius as f64;
                    assert!((pt.re - r * vertex.cos()).abs() < 1e-12);
                    assert!((pt.im - r * vertex.sin()).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn figure_words() {
        let s = shape("0000101", 2);
        assert_eq!((s.petals.len(), s.thorns.len()), (0, 2));
        assert_eq!(s.thorns, vec![4, 6]);
        let s = shape("1010110", 2);
        assert_eq!((s.petals.len(), s.thorns.len()), (1, 2));
        assert_eq!(s.petals, vec![(4, 5)]);
        assert_eq!(s.thorns, vec![0, 2]);
        let s = shape("1011101", 2);
        assert_eq!((s.petals.len(), s.thorns.len()), (3, 0));
        assert_eq!(s.petals, vec![(2, 3), (3, 4), (6, 0)]);
        assert_eq!(s.outline, vec![0, 1, 2, 3, 4, 5, 6, 0]);
    }

    #[test]
    fn exhaustive_binary_counts() {
        let p = Prime::new(2).unwrap();
        for w in Word::all(p, 7) {
            let s = features(&w);
            let bits = w.symbols();
            assert_eq!(s.petals.len(), adjacent_pairs(bits));
            assert_eq!(s.thorns.len(), isolated(bits));
            for (k, &b) in bits.iter().enumerate() {
                if b != 0 {
                    let in_petal = s.petals.iter().any(|&(a, b)| a == k || b == k);
                    assert!(in_petal ^ s.thorns.contains(&k));
                }
            }
            // outline edges between adjacent ones are exactly the petal chords
            for win in s.outline.windows(2) {
                let (a, b) = (win[0], win[1]);
                let chord = bits[a] != 0 && bits[b] != 0;
                assert_eq!(chord, s.petals.contains(&(a, b)));
            }
        }
    }

    #[test]
    fn rotation_rotates_features() {
        let p = Prime::new(3).unwrap();
        for i in (0..531_441u64).step_by(997) {
            let w = Word::from_index(p, 12, i).unwrap();
            let base = features(&w);
            for r in [1, 5, 11] {
                let rot = features(&w.rotate(r));
                let mut petals: Vec<_> = base.petals.iter().map(|&(a, b)| ((a + r) % 12, (b + r) % 12)).collect();
                petals.sort();
                let mut thorns: Vec<_> = base.thorns.iter().map(|&k| (k + r) % 12).collect();
                thorns.sort();
                assert_eq!(rot.petals, petals);
                assert_eq!(rot.thorns, thorns);
            }
        }
    }

    #[test]
    fn radii_are_exact() {
        let p = Prime::new(7).unwrap();
        for i in (0..823_543u64).step_by(4099) {
            let w = Word::from_index(p, 7, i).unwrap();
            for pt in constellation(&w) {
                assert!((pt.re.hypot(pt.im) - pt.radius as f64).abs() < 1e-12);
                assert_eq!(pt.radius, w.symbols()[pt.index]);
            }
        }
    }

    #[test]
    fn shade_examples() {
        let s = shape("1111111", 2);
        assert_eq!(petal_shades(&s), vec![L, D, L, D, L, D, L]);
        let s = shape("0110000", 2);
        assert_eq!(petal_shades(&s), vec![L]);
        let s = shape("111011100000", 2);
        assert_eq!(s.petals.len(), 4);
        assert_eq!(petal_shades(&s), vec![L, D, L, D]);
        // run 5 -> 6 -> 0 wraps; it is anchored at 5
        let s = shape("1100011", 2);
        assert_eq!(s.petals, vec![(0, 1), (5, 6), (6, 0)]);
        assert_eq!(petal_shades(&s), vec![L, L, D]);
        assert!(petal_shades(&shape("0000101", 2)).is_empty());
    }

    #[test]
    fn shades_alternate_within_runs() {
        let p = Prime::new(2).unwrap();
        for w in Word::all(p, 7) {
            let s = features(&w);
            let shades = petal_shades(&s);
            assert_eq!(shades.len(), s.petals.len());
            let full = s.petals.len() == 7;
            let mut same = 0;
            for (i, &(k, _)) in s.petals.iter().enumerate() {
                if let Some(j) = s.petals.iter().position(|&(a, _)| a == (k + 1) % 7) {
                    if shades[i] == shades[j] {
                        same += 1;
                    }
                }
            }
            assert_eq!(same, usize::from(full));
        }
    }
}
