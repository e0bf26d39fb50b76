//! Deterministic SVG and TikZ output for flower shapes, polar grids and panels.
//!
//! Every primitive is emitted in a fixed order: grid, petals (ascending start
//! index), outline, thorns, markers (ascending k), label. Coordinates are
//! written with exactly six decimals so identical inputs give identical bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flowergeom::{angle_of, features, petal_shades, FlowerShape, Shade};
use crate::gfield::Word;

/// A 24-bit RGB colour, stored as six uppercase hex digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Color(String);

impl Color {
    pub fn hex(&self) -> &str {
        &self.0
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s.strip_prefix('#').unwrap_or(s);
        if digits.len() == 6 && digits.chars().all(|c| c.is_ascii_hexdigit()) {
            Ok(Color(digits.to_ascii_uppercase()))
        } else {
            Err(Error::RenderSpec(format!("colour {s:?} is not 6 hex digits")))
        }
    }
}

/// Visual settings. Lengths are in abstract user units (SVG px, TikZ pt).
#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    /// Side of the square cell.
    pub canvas: f64,
    /// Units per unit of symbol value.
    pub radius_scale: f64,
    pub stroke_width: f64,
    pub light: Color,
    pub dark: Color,
    pub marker_radius: f64,
    pub grid: bool,
    pub label: bool,
}

const OUTER_MARGIN: f64 = 0.8;

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            canvas: 200.0,
            radius_scale: 80.0,
            stroke_width: 1.5,
            light: Color("9ECAE1".into()),
            dark: Color("2171B5".into()),
            marker_radius: 4.0,
            grid: true,
            label: true,
        }
    }
}

impl RenderSpec {
    /// Defaults with the radius scale fitted so radius `p - 1` fills the cell.
    pub fn for_modulus(p: u32) -> Self {
        let spec = Self::default();
        let fitted = spec.canvas / 2.0 * OUTER_MARGIN / p.saturating_sub(1).max(1) as f64;
        Self {
            radius_scale: fitted,
            ..spec
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("canvas", self.canvas),
            ("radius scale", self.radius_scale),
            ("stroke width", self.stroke_width),
            ("marker radius", self.marker_radius),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::RenderSpec(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    fn shade(&self, s: Shade) -> &Color {
        match s {
            Shade::Light => &self.light,
            Shade::Dark => &self.dark,
        }
    }
}

/// Fixed six-decimal formatting; negative zero prints as zero.
fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

/// Maps a math-plane point (y up, origin at cell centre) to SVG coordinates.
struct SvgFrame {
    c: f64,
}

impl SvgFrame {
    fn pt(&self, x: f64, y: f64) -> String {
        format!("{},{}", num(self.c + x), num(self.c - y))
    }

    fn xy(&self, x: f64, y: f64) -> (String, String) {
        (num(self.c + x), num(self.c - y))
    }
}

fn polar(r: f64, angle: f64) -> (f64, f64) {
    (r * angle.cos(), r * angle.sin())
}

fn point_xy(shape: &FlowerShape, k: usize, scale: f64) -> (f64, f64) {
    let pt = &shape.points[k];
    (pt.re * scale, pt.im * scale)
}

fn outer_radius(p: u32, spec: &RenderSpec) -> f64 {
    p.saturating_sub(1).max(1) as f64 * spec.radius_scale
}

/// Arrow geometry shared by both back ends: arc radius, start/end angles, head triangle.
fn arrow_geometry(n: usize, p: u32, spec: &RenderSpec) -> (f64, f64, f64, [(f64, f64); 3]) {
    let r = outer_radius(p, spec) * 1.12;
    let step = angle_of(1, n);
    let (a0, a1) = (step * 0.15, step * 0.85);
    let (tip_x, tip_y) = polar(r, a1);
    // tangent of counterclockwise motion and the outward normal
    let (tx, ty) = (-a1.sin(), a1.cos());
    let (nx, ny) = (a1.cos(), a1.sin());
    let h = 2.0 * spec.stroke_width + 3.0;
    let base_x = tip_x - tx * h;
    let base_y = tip_y - ty * h;
    let head = [
        (tip_x, tip_y),
        (base_x + nx * h * 0.5, base_y + ny * h * 0.5),
        (base_x - nx * h * 0.5, base_y - ny * h * 0.5),
    ];
    (r, a0, a1, head)
}

fn svg_grid(out: &mut String, n: usize, p: u32, spec: &RenderSpec, f: &SvgFrame) {
    let outer = outer_radius(p, spec);
    let axis_len = outer * 1.05;
    let sw = num(spec.stroke_width * 0.5);
    out.push_str("<g class=\"grid\">\n");
    for k in 0..n {
        let (x, y) = polar(axis_len, angle_of(k, n));
        let (x1, y1) = f.xy(0.0, 0.0);
        let (x2, y2) = f.xy(x, y);
        let _ = writeln!(
            out,
            "<line class=\"axis\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#BDBDBD\" stroke-width=\"{sw}\"/>"
        );
    }
    for i in 1..p {
        let (cx, cy) = f.xy(0.0, 0.0);
        let _ = writeln!(
            out,
            "<circle class=\"ring\" cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" fill=\"none\" stroke=\"#BDBDBD\" stroke-width=\"{sw}\" stroke-dasharray=\"3,3\"/>",
            num(i as f64 * spec.radius_scale)
        );
    }
    let (r, a0, a1, head) = arrow_geometry(n, p, spec);
    let (sx, sy) = polar(r, a0);
    let (ex, ey) = polar(r, a1);
    let (sx, sy) = f.xy(sx, sy);
    let (ex, ey) = f.xy(ex, ey);
    let rs = num(r);
    let _ = writeln!(
        out,
        "<path class=\"arrow\" d=\"M {sx} {sy} A {rs} {rs} 0 0 0 {ex} {ey}\" fill=\"none\" stroke=\"#757575\" stroke-width=\"{sw}\"/>"
    );
    let pts: Vec<String> = head.iter().map(|&(x, y)| f.pt(x, y)).collect();
    let _ = writeln!(
        out,
        "<polygon class=\"arrowhead\" points=\"{}\" fill=\"#757575\"/>",
        pts.join(" ")
    );
    out.push_str("</g>\n");
}

fn svg_cell(out: &mut String, shape: &FlowerShape, spec: &RenderSpec) {
    let f = SvgFrame { c: spec.canvas / 2.0 };
    let scale = spec.radius_scale;
    let p = shape.word.modulus().get();
    let sw = num(spec.stroke_width);
    if spec.grid {
        svg_grid(out, shape.len(), p, spec, &f);
    }
    for (&(a, b), shade) in shape.petals.iter().zip(petal_shades(shape)) {
        let (ax, ay) = point_xy(shape, a, scale);
        let (bx, by) = point_xy(shape, b, scale);
        let _ = writeln!(
            out,
            "<polygon class=\"petal\" points=\"{} {} {}\" fill=\"#{}\" stroke=\"none\"/>",
            f.pt(0.0, 0.0),
            f.pt(ax, ay),
            f.pt(bx, by),
            spec.shade(shade).hex()
        );
    }
    if !shape.word.is_zero() {
        let pts: Vec<String> = shape
            .outline
            .iter()
            .map(|&k| {
                let (x, y) = point_xy(shape, k, scale);
                f.pt(x, y)
            })
            .collect();
        let _ = writeln!(
            out,
            "<polyline class=\"outline\" points=\"{}\" fill=\"none\" stroke=\"#{}\" stroke-width=\"{sw}\" stroke-linejoin=\"round\"/>",
            pts.join(" "),
            spec.dark.hex()
        );
    }
    for &k in &shape.thorns {
        let (x1, y1) = f.xy(0.0, 0.0);
        let (x, y) = point_xy(shape, k, scale);
        let (x2, y2) = f.xy(x, y);
        let _ = writeln!(
            out,
            "<line class=\"thorn\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#{}\" stroke-width=\"{sw}\"/>",
            spec.dark.hex()
        );
    }
    for pt in shape.markers() {
        let (cx, cy) = f.xy(pt.re * scale, pt.im * scale);
        let _ = writeln!(
            out,
            "<circle class=\"marker\" cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" fill=\"#{}\"/>",
            num(spec.marker_radius),
            spec.dark.hex()
        );
    }
    if spec.label {
        let _ = writeln!(
            out,
            "<text class=\"label\" x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">{}</text>",
            num(spec.canvas / 2.0),
            num(spec.canvas - 4.0),
            shape.word
        );
    }
}

fn svg_document(width: f64, height: f64, cells: &[String], columns: usize, canvas: f64) -> Vec<u8> {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let (w, h) = (num(width), num(height));
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    for (i, body) in cells.iter().enumerate() {
        let (row, col) = (i / columns, i % columns);
        let _ = writeln!(
            out,
            "<g class=\"cell\" transform=\"translate({},{})\">",
            num(col as f64 * canvas),
            num(row as f64 * canvas)
        );
        out.push_str(body);
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out.into_bytes()
}

fn svg_cell_string(shape: &FlowerShape, spec: &RenderSpec) -> String {
    let mut s = String::new();
    svg_cell(&mut s, shape, spec);
    s
}

/// Standalone SVG document for one shape.
pub fn to_svg(shape: &FlowerShape, spec: &RenderSpec) -> Result<Vec<u8>> {
    spec.validate()?;
    check_shape(shape)?;
    let cell = svg_cell_string(shape, spec);
    Ok(svg_document(spec.canvas, spec.canvas, &[cell], 1, spec.canvas))
}

fn check_shape(shape: &FlowerShape) -> Result<()> {
    if shape.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(())
    }
}

/// Standalone SVG with only the polar grid: `n` axes, `p - 1` rings, ordering arrow.
pub fn render_grid(n: usize, p: u32, spec: &RenderSpec) -> Result<Vec<u8>> {
    spec.validate()?;
    crate::gfield::Prime::new(p)?;
    if n < 2 {
        return Err(Error::Usage(format!("grid needs at least 2 axes, got {n}")));
    }
    let mut body = String::new();
    svg_grid(&mut body, n, p, spec, &SvgFrame { c: spec.canvas / 2.0 });
    Ok(svg_document(spec.canvas, spec.canvas, &[body], 1, spec.canvas))
}

fn check_panel(words: &[Word], columns: usize) -> Result<()> {
    let first = words
        .first()
        .ok_or_else(|| Error::Usage("panel needs at least one word".into()))?;
    if columns == 0 {
        return Err(Error::Usage("columns must be at least 1".into()));
    }
    for (i, w) in words.iter().enumerate() {
        if w.modulus() != first.modulus() || w.len() != first.len() {
            return Err(Error::Usage(format!(
                "word {} ({w}) does not match GF({})^{} of the first word",
                i + 1,
                first.modulus(),
                first.len()
            )));
        }
    }
    Ok(())
}

fn panel_svg(words: &[Word], columns: usize, spec: &RenderSpec, parallel: bool) -> Result<Vec<u8>> {
    spec.validate()?;
    check_panel(words, columns)?;
    let cell = |w: &Word| svg_cell_string(&features(w), spec);
    let cells: Vec<String> = if parallel {
        words.par_iter().map(cell).collect()
    } else {
        words.iter().map(cell).collect()
    };
    let columns = columns.min(words.len());
    let rows = words.len().div_ceil(columns);
    Ok(svg_document(
        columns as f64 * spec.canvas,
        rows as f64 * spec.canvas,
        &cells,
        columns,
        spec.canvas,
    ))
}

/// Grid of flower cells, row-major in list order. Cells render in parallel.
pub fn panel(words: &[Word], columns: usize, spec: &RenderSpec) -> Result<Vec<u8>> {
    panel_svg(words, columns, spec, true)
}

/// Same output as [`panel`], rendered on the calling thread.
pub fn panel_serial(words: &[Word], columns: usize, spec: &RenderSpec) -> Result<Vec<u8>> {
    panel_svg(words, columns, spec, false)
}

/// `(rows, columns)` of the layout [`panel`] produces.
pub fn panel_layout(count: usize, columns: usize) -> (usize, usize) {
    let columns = columns.min(count).max(1);
    (count.div_ceil(columns), columns)
}

fn tikz_pt(x: f64, y: f64) -> String {
    format!("({},{})", num(x), num(y))
}

fn tikz_cell(out: &mut String, shape: &FlowerShape, spec: &RenderSpec) {
    let scale = spec.radius_scale;
    let n = shape.len();
    let p = shape.word.modulus().get();
    let lw = num(spec.stroke_width);
    let thin = num(spec.stroke_width * 0.5);
    if spec.grid {
        let outer = outer_radius(p, spec);
        for k in 0..n {
            let (x, y) = polar(outer * 1.05, angle_of(k, n));
            let _ = writeln!(
                out,
                "\\draw[gray!50, line width={thin}pt] (0,0) -- {}; % axis",
                tikz_pt(x, y)
            );
        }
        for i in 1..p {
            let _ = writeln!(
                out,
                "\\draw[gray!50, dashed, line width={thin}pt] (0,0) circle[radius={}]; % ring",
                num(i as f64 * scale)
            );
        }
        let (r, a0, a1, head) = arrow_geometry(n, p, spec);
        let (sx, sy) = polar(r, a0);
        let _ = writeln!(
            out,
            "\\draw[gray, line width={thin}pt] {} arc[start angle={}, end angle={}, radius={}]; % arrow",
            tikz_pt(sx, sy),
            num(a0.to_degrees()),
            num(a1.to_degrees()),
            num(r)
        );
        let _ = writeln!(
            out,
            "\\fill[gray] {} -- {} -- {} -- cycle; % arrowhead",
            tikz_pt(head[0].0, head[0].1),
            tikz_pt(head[1].0, head[1].1),
            tikz_pt(head[2].0, head[2].1)
        );
    }
    for (&(a, b), shade) in shape.petals.iter().zip(petal_shades(shape)) {
        let (ax, ay) = point_xy(shape, a, scale);
        let (bx, by) = point_xy(shape, b, scale);
        let colour = match shade {
            Shade::Light => "flowerlight",
            Shade::Dark => "flowerdark",
        };
        let _ = writeln!(
            out,
            "\\fill[{colour}] (0,0) -- {} -- {} -- cycle; % petal",
            tikz_pt(ax, ay),
            tikz_pt(bx, by)
        );
    }
    if !shape.word.is_zero() {
        let pts: Vec<String> = shape
            .outline
            .iter()
            .take(n)
            .map(|&k| {
                let (x, y) = point_xy(shape, k, scale);
                tikz_pt(x, y)
            })
            .collect();
        let _ = writeln!(
            out,
            "\\draw[flowerdark, line width={lw}pt, line join=round] {} -- cycle; % outline",
            pts.join(" -- ")
        );
    }
    for &k in &shape.thorns {
        let (x, y) = point_xy(shape, k, scale);
        let _ = writeln!(
            out,
            "\\draw[flowerdark, line width={lw}pt] (0,0) -- {}; % thorn",
            tikz_pt(x, y)
        );
    }
    for pt in shape.markers() {
        let _ = writeln!(
            out,
            "\\fill[flowerdark] {} circle[radius={}]; % marker",
            tikz_pt(pt.re * scale, pt.im * scale),
            num(spec.marker_radius)
        );
    }
    if spec.label {
        let _ = writeln!(
            out,
            "\\node[font=\\ttfamily\\scriptsize] at {} {{{}}}; % label",
            tikz_pt(0.0, -(spec.canvas / 2.0 - 6.0)),
            shape.word
        );
    }
}

fn tikz_open(out: &mut String, spec: &RenderSpec) {
    out.push_str("\\begin{tikzpicture}[x=1pt,y=1pt]\n");
    let _ = writeln!(out, "\\definecolor{{flowerlight}}{{HTML}}{{{}}}", spec.light.hex());
    let _ = writeln!(out, "\\definecolor{{flowerdark}}{{HTML}}{{{}}}", spec.dark.hex());
}

/// A self-contained `tikzpicture` drawing the same primitives as [`to_svg`].
pub fn to_tikz(shape: &FlowerShape, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    check_shape(shape)?;
    let mut out = String::new();
    tikz_open(&mut out, spec);
    tikz_cell(&mut out, shape, spec);
    out.push_str("\\end{tikzpicture}\n");
    Ok(out)
}

/// TikZ counterpart of [`panel`]: each cell in a shifted scope.
pub fn panel_tikz(words: &[Word], columns: usize, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    check_panel(words, columns)?;
    let columns = columns.min(words.len());
    let cells: Vec<String> = words
        .par_iter()
        .map(|w| {
            let mut s = String::new();
            tikz_cell(&mut s, &features(w), spec);
            s
        })
        .collect();
    let mut out = String::new();
    tikz_open(&mut out, spec);
    for (i, body) in cells.iter().enumerate() {
        let (row, col) = (i / columns, i % columns);
        let _ = writeln!(
            out,
            "\\begin{{scope}}[shift={{{}}}]",
            tikz_pt(col as f64 * spec.canvas, -(row as f64) * spec.canvas)
        );
        out.push_str(body);
        out.push_str("\\end{scope}\n");
    }
    out.push_str("\\end{tikzpicture}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfield::Prime;

    fn shape(s: &str, p: u32) -> FlowerShape {
        features(&Word::parse(s, p).unwrap())
    }

    fn svg(s: &str, p: u32) -> String {
        String::from_utf8(to_svg(&shape(s, p), &RenderSpec::for_modulus(p)).unwrap()).unwrap()
    }

    fn count(doc: &str, needle: &str) -> usize {
        doc.matches(needle).count()
    }

    #[test]
    fn colour_parsing() {
        assert_eq!("#9ecae1".parse::<Color>().unwrap().hex(), "9ECAE1");
        assert_eq!("2171B5".parse::<Color>().unwrap().hex(), "2171B5");
        assert!("#12345".parse::<Color>().is_err());
        assert!("#GG0000".parse::<Color>().is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(RenderSpec::default().validate().is_ok());
        let bad = RenderSpec {
            stroke_width: 0.0,
            ..RenderSpec::default()
        };
        assert!(bad.validate().is_err());
        let bad = RenderSpec {
            canvas: f64::NAN,
            ..RenderSpec::default()
        };
        assert!(to_svg(&shape("1", 2), &bad).is_err());
        assert_eq!(RenderSpec::for_modulus(2).radius_scale, 80.0);
        assert_eq!(RenderSpec::for_modulus(3).radius_scale, 40.0);
    }

    #[test]
    fn number_formatting() {
        assert_eq!(num(-0.0), "0.000000");
        assert_eq!(num(-1e-9), "0.000000");
        assert_eq!(num(1.0 / 3.0), "0.333333");
        assert_eq!(num(-2.5), "-2.500000");
    }

    #[test]
    fn zero_word_has_grid_only() {
        let doc = svg("0000000", 2);
        assert_eq!(count(&doc, "class=\"axis\""), 7);
        assert_eq!(count(&doc, "class=\"petal\""), 0);
        assert_eq!(count(&doc, "class=\"thorn\""), 0);
        assert_eq!(count(&doc, "class=\"marker\""), 0);
        assert_eq!(count(&doc, "class=\"outline\""), 0);
        let doc = svg("000000000000", 3);
        assert_eq!(count(&doc, "class=\"petal\"") + count(&doc, "class=\"thorn\""), 0);
    }

    #[test]
    fn only_thorns_figure() {
        let doc = svg("0000101", 2);
        assert_eq!(count(&doc, "class=\"thorn\""), 2);
        assert_eq!(count(&doc, "class=\"petal\""), 0);
        assert_eq!(count(&doc, "class=\"marker\""), 2);
    }

    #[test]
    fn element_order_is_fixed() {
        let doc = svg("1010110", 2);
        let pos = |needle: &str| doc.find(needle).unwrap();
        assert!(pos("class=\"grid\"") < pos("class=\"petal\""));
        assert!(pos("class=\"petal\"") < pos("class=\"outline\""));
        assert!(pos("class=\"outline\"") < pos("class=\"thorn\""));
        assert!(pos("class=\"thorn\"") < pos("class=\"marker\""));
        assert!(pos("class=\"marker\"") < pos("class=\"label\""));
        assert!(doc.contains(">1010110</text>"));
    }

    #[test]
    fn known_coordinates() {
        // z_0 of a binary word sits at radius 80 right of the centre (100,100)
        let doc = svg("1000000", 2);
        assert!(doc.contains(
            "<circle class=\"marker\" cx=\"180.000000\" cy=\"100.000000\" r=\"4.000000\" fill=\"#2171B5\"/>"
        ));
        assert!(doc.contains(
            "<line class=\"thorn\" x1=\"100.000000\" y1=\"100.000000\" x2=\"180.000000\" y2=\"100.000000\""
        ));
    }

    #[test]
    fn rendering_is_deterministic() {
        let s = shape("1011101", 2);
        let spec = RenderSpec::for_modulus(2);
        assert_eq!(to_svg(&s, &spec).unwrap(), to_svg(&s, &spec).unwrap());
        assert_eq!(to_tikz(&s, &spec).unwrap(), to_tikz(&s, &spec).unwrap());
    }

    #[test]
    fn structural_counts_exhaustive_binary() {
        let p = Prime::new(2).unwrap();
        let spec = RenderSpec::for_modulus(2);
        for w in Word::all(p, 7) {
            let s = features(&w);
            let doc = String::from_utf8(to_svg(&s, &spec).unwrap()).unwrap();
            let tikz = to_tikz(&s, &spec).unwrap();
            assert_eq!(count(&doc, "class=\"petal\""), s.petals.len());
            assert_eq!(count(&doc, "class=\"thorn\""), s.thorns.len());
            assert_eq!(count(&doc, "class=\"marker\""), w.weight());
            assert_eq!(count(&tikz, "% petal"), s.petals.len());
            assert_eq!(count(&tikz, "% thorn"), s.thorns.len());
            assert_eq!(count(&tikz, "% marker"), w.weight());
        }
    }

    #[test]
    fn petal_fills_follow_shades() {
        let doc = svg("1111111", 2);
        assert_eq!(count(&doc, "fill=\"#9ECAE1\""), 4);
        let tikz = to_tikz(&shape("1111111", 2), &RenderSpec::for_modulus(2)).unwrap();
        assert_eq!(count(&tikz, "\\fill[flowerlight]"), 4);
        assert_eq!(count(&tikz, "\\fill[flowerdark] (0,0)"), 3);
        assert_eq!(count(&tikz, "% petal"), 7);
    }

    #[test]
    fn grid_examples() {
        let spec = RenderSpec::default();
        for (n, p, rings) in [(16, 5, 4), (7, 2, 1), (12, 3, 2)] {
            let doc = String::from_utf8(render_grid(n, p, &RenderSpec::for_modulus(p)).unwrap()).unwrap();
            assert_eq!(count(&doc, "class=\"axis\""), n);
            assert_eq!(count(&doc, "class=\"ring\""), rings);
            assert_eq!(count(&doc, "class=\"arrow\""), 1);
            assert_eq!(count(&doc, "class=\"arrowhead\""), 1);
        }
        assert!(render_grid(1, 2, &spec).is_err());
        assert!(render_grid(7, 4, &spec).is_err());
    }

    #[test]
    fn no_grid_no_label() {
        let spec = RenderSpec {
            grid: false,
            label: false,
            ..RenderSpec::for_modulus(2)
        };
        let doc = String::from_utf8(to_svg(&shape("1100000", 2), &spec).unwrap()).unwrap();
        assert!(!doc.contains("class=\"grid\""));
        assert!(!doc.contains("class=\"label\""));
        let tikz = to_tikz(&shape("1100000", 2), &spec).unwrap();
        assert!(!tikz.contains("% axis"));
        assert!(!tikz.contains("% label"));
    }

    #[test]
    fn single_word_panel_equals_svg() {
        let w = Word::parse("1011101", 2).unwrap();
        let spec = RenderSpec::for_modulus(2);
        let single = to_svg(&features(&w), &spec).unwrap();
        assert_eq!(panel(std::slice::from_ref(&w), 4, &spec).unwrap(), single);
    }

    #[test]
    fn panel_layout_and_errors() {
        let p = Prime::new(2).unwrap();
        let words: Vec<Word> = Word::all(p, 7).collect();
        let spec = RenderSpec::for_modulus(2);
        let doc = String::from_utf8(panel(&words, 16, &spec).unwrap()).unwrap();
        assert_eq!(count(&doc, "class=\"cell\""), 128);
        assert_eq!(panel_layout(128, 16), (8, 16));
        assert!(doc.contains("width=\"3200.000000\" height=\"1600.000000\""));
        assert_eq!(panel_layout(3, 8), (1, 3));
        assert!(panel(&[], 4, &spec).is_err());
        assert!(panel(&words, 0, &spec).is_err());
        let mixed = vec![words[3].clone(), Word::parse("102010022101", 3).unwrap()];
        assert!(matches!(panel(&mixed, 2, &spec), Err(Error::Usage(_))));
        let mixed = vec![words[3].clone(), Word::parse("10101", 2).unwrap()];
        assert!(panel(&mixed, 2, &spec).is_err());
    }

    #[test]
    fn parallel_and_serial_panels_agree() {
        let p = Prime::new(3).unwrap();
        let words: Vec<Word> = (0..300u64).map(|i| Word::from_index(p, 12, i * 1771).unwrap()).collect();
        let spec = RenderSpec::for_modulus(3);
        assert_eq!(panel(&words, 10, &spec).unwrap(), panel_serial(&words, 10, &spec).unwrap());
    }

    #[test]
    fn tikz_panel_scopes() {
        let words: Vec<Word> = ["1011101", "0000101", "1111000"]
            .iter()
            .map(|s| Word::parse(s, 2).unwrap())
            .collect();
        let t = panel_tikz(&words, 2, &RenderSpec::for_modulus(2)).unwrap();
        assert_eq!(count(&t, "\\begin{scope}"), 3);
        assert!(t.contains("\\begin{scope}[shift={(0.000000,-200.000000)}]"));
        assert_eq!(count(&t, "% petal"), 6);
    }
}
