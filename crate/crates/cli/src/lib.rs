//! Command-line front end for `flowerntt`.
//!
//! [`run`] parses arguments and executes one subcommand, returning a
//! [`CommandOutcome`] instead of exiting so the whole surface is testable
//! in-process. Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use flowerntt::codes::{code_from_fixed_space, hamming_code, LinearCode};
use flowerntt::gfield::{format_word_list, parse_word_list};
use flowerntt::render::{self, panel_layout};
use flowerntt::verify::{self, Subjects};
use flowerntt::{eigen_spectrum, features, fixed_space, Color, Matrix, Prime, RenderSpec, Transform, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: i32,
    pub report: String,
}

impl CommandOutcome {
    fn ok(report: String) -> Self {
        Self {
            code: EXIT_OK,
            report,
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            report: format!("error: {msg}\n"),
        }
    }
}

type CmdResult = std::result::Result<String, CommandOutcome>;

fn usage<E: std::fmt::Display>(e: E) -> CommandOutcome {
    CommandOutcome::usage(e)
}

#[derive(Debug, Parser)]
#[command(name = "flowerntt", version, about = "Hamming and Golay number-theoretic transforms and flower renderings over GF(p)")]
pub struct Cli {
    /// Matrix file for the `custom` transform (header `p=<modulus>`, rows split by `;`)
    #[arg(long, global = true, value_name = "PATH")]
    matrix_file: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransformName {
    Hamming,
    Golay,
    GolayPrinted,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CodeName {
    Hamming,
    Golay,
    GolayPrinted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Svg,
    Tikz,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Svg => "svg",
            Format::Tikz => "tikz",
        }
    }
}

#[derive(Debug, Args)]
struct StyleArgs {
    /// Cell side length
    #[arg(long)]
    canvas: Option<f64>,
    /// Length per unit of symbol value (default fits radius p-1 in the cell)
    #[arg(long)]
    radius_scale: Option<f64>,
    #[arg(long)]
    stroke_width: Option<f64>,
    /// Light petal colour, 6 hex digits
    #[arg(long)]
    light: Option<String>,
    /// Dark petal, outline and marker colour, 6 hex digits
    #[arg(long)]
    dark: Option<String>,
    #[arg(long)]
    marker_radius: Option<f64>,
    #[arg(long)]
    no_grid: bool,
    #[arg(long)]
    no_label: bool,
}

impl StyleArgs {
    fn spec(&self, p: u32) -> std::result::Result<RenderSpec, CommandOutcome> {
        let mut spec = RenderSpec::for_modulus(p);
        if let Some(c) = self.canvas {
            spec.canvas = c;
            if self.radius_scale.is_none() {
                spec.radius_scale *= c / 200.0;
            }
        }
        if let Some(v) = self.radius_scale {
            spec.radius_scale = v;
        }
        if let Some(v) = self.stroke_width {
            spec.stroke_width = v;
        }
        if let Some(v) = self.marker_radius {
            spec.marker_radius = v;
        }
        if let Some(c) = &self.light {
            spec.light = c.parse::<Color>().map_err(usage)?;
        }
        if let Some(c) = &self.dark {
            spec.dark = c.parse::<Color>().map_err(usage)?;
        }
        spec.grid = !self.no_grid;
        spec.label = !self.no_label;
        spec.validate().map_err(usage)?;
        Ok(spec)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply a transform to a word
    Transform {
        #[arg(value_enum)]
        name: TransformName,
        word: String,
    },
    /// Print the canonical basis of the invariant (lambda = 1) space
    Invariants {
        #[arg(value_enum)]
        name: Option<TransformName>,
    },
    /// Print every nontrivial eigenspace
    Spectrum {
        #[arg(value_enum)]
        name: Option<TransformName>,
    },
    /// Render one word as a flower
    Render {
        word: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        /// Output path (default `<word>.<format>`)
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        style: StyleArgs,
    },
    /// Render the empty polar grid for N positions over GF(p)
    Grid {
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        style: StyleArgs,
    },
    /// Render many words as a grid of flowers
    Panel {
        /// Word-list file, or `all-binary-7`
        list: String,
        /// Field of the word-list file
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value_t = 16)]
        columns: usize,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        /// Output path (default `panel.<format>`)
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        style: StyleArgs,
    },
    /// Check the published transform pairs, invariants and code parameters
    Verify,
    /// Brute-force code parameters
    Mindist {
        #[arg(value_enum)]
        name: Option<CodeName>,
        #[arg(long, value_enum)]
        code: Option<CodeName>,
    },
    /// Enumerate every codeword
    Codewords {
        #[arg(value_enum)]
        name: Option<CodeName>,
        #[arg(long, value_enum)]
        code: Option<CodeName>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => CommandOutcome {
            code: e.exit_code(),
            report: e.render().to_string(),
        },
    }
}

pub fn execute(cli: &Cli) -> CommandOutcome {
    let result = match &cli.command {
        Command::Transform { name, word } => cmd_transform(cli, *name, word),
        Command::Invariants { name } => cmd_invariants(cli, *name),
        Command::Spectrum { name } => cmd_spectrum(cli, *name),
        Command::Render {
            word,
            p,
            format,
            out,
            style,
        } => cmd_render(word, *p, *format, out.as_deref(), style),
        Command::Grid { n, p, out, style } => cmd_grid(*n, *p, out.as_deref(), style),
        Command::Panel {
            list,
            p,
            columns,
            format,
            out,
            style,
        } => cmd_panel(list, *p, *columns, *format, out.as_deref(), style),
        Command::Verify => return verify_with(&Subjects::default()),
        Command::Mindist { name, code } => cmd_mindist(cli, name.or(*code)),
        Command::Codewords { name, code, out } => cmd_codewords(cli, name.or(*code), out.as_deref()),
    };
    match result {
        Ok(report) => CommandOutcome::ok(report),
        Err(outcome) => outcome,
    }
}

fn load_matrix(path: &Path) -> std::result::Result<Matrix, CommandOutcome> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Matrix::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn resolve_transform(
    cli: &Cli,
    name: Option<TransformName>,
) -> std::result::Result<Transform, CommandOutcome> {
    match (name, &cli.matrix_file) {
        (Some(TransformName::Custom) | None, Some(path)) => {
            let m = load_matrix(path)?;
            if !m.is_square() {
                return Err(usage(format!(
                    "transform matrix must be square, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
            Ok(Transform::Custom(m))
        }
        (Some(TransformName::Custom) | None, None) => {
            Err(usage("a custom transform needs --matrix-file"))
        }
        (Some(_), Some(_)) => Err(usage("--matrix-file is only used with the `custom` transform")),
        (Some(TransformName::Hamming), None) => Ok(Transform::Hamming),
        (Some(TransformName::Golay), None) => Ok(Transform::Golay),
        (Some(TransformName::GolayPrinted), None) => Ok(Transform::GolayAsPrinted),
    }
}

fn cmd_transform(cli: &Cli, name: TransformName, word: &str) -> CmdResult {
    let t = resolve_transform(cli, Some(name))?;
    let x = Word::parse(word, t.matrix().modulus().get()).map_err(usage)?;
    let y = t.apply(&x).map_err(usage)?;
    Ok(format!("{y}\n"))
}

fn cmd_invariants(cli: &Cli, name: Option<TransformName>) -> CmdResult {
    let t = resolve_transform(cli, name)?;
    let fs = fixed_space(t.matrix()).map_err(usage)?;
    let mut out = format!("dim={}\n", fs.dimension());
    for v in &fs.basis {
        let _ = writeln!(out, "{v}");
    }
    Ok(out)
}

fn cmd_spectrum(cli: &Cli, name: Option<TransformName>) -> CmdResult {
    let t = resolve_transform(cli, name)?;
    let spaces = eigen_spectrum(t.matrix()).map_err(usage)?;
    let mut out = String::new();
    for s in &spaces {
        let _ = writeln!(out, "lambda={} dim={}", s.eigenvalue, s.dimension());
        for v in &s.basis {
            let _ = writeln!(out, "{v}");
        }
    }
    Ok(out)
}

fn write_output(path: &Path, bytes: &[u8]) -> std::result::Result<(), CommandOutcome> {
    fs::write(path, bytes).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn cmd_render(word: &str, p: u32, format: Format, out: Option<&Path>, style: &StyleArgs) -> CmdResult {
    let w = Word::parse(word, p).map_err(usage)?;
    let spec = style.spec(p)?;
    let shape = features(&w);
    let bytes = match format {
        Format::Svg => render::to_svg(&shape, &spec).map_err(usage)?,
        Format::Tikz => render::to_tikz(&shape, &spec).map_err(usage)?.into_bytes(),
    };
    let path = out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from(format!("{w}.{}", format.extension())));
    write_output(&path, &bytes)?;
    Ok(format!(
        "petals={} thorns={}\n",
        shape.petals.len(),
        shape.thorns.len()
    ))
}

fn cmd_grid(n: usize, p: u32, out: Option<&Path>, style: &StyleArgs) -> CmdResult {
    Prime::new(p).map_err(usage)?;
    let spec = style.spec(p)?;
    let bytes = render::render_grid(n, p, &spec).map_err(usage)?;
    let path = out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from(format!("grid-{n}-{p}.svg")));
    write_output(&path, &bytes)?;
    Ok(format!("axes={n} rings={}\n", p - 1))
}

pub const ALL_BINARY_7: &str = "all-binary-7";

/// Every binary 7-word in ascending integer order, `x_0` most significant.
pub fn all_binary_7() -> Vec<Word> {
    Word::all(Prime::new(2).expect("2 is prime"), 7).collect()
}

fn cmd_panel(
    list: &str,
    p: Option<u32>,
    columns: usize,
    format: Format,
    out: Option<&Path>,
    style: &StyleArgs,
) -> CmdResult {
    let (words, p) = if list == ALL_BINARY_7 {
        if p.is_some_and(|p| p != 2) {
            return Err(usage("all-binary-7 is a GF(2) list"));
        }
        (all_binary_7(), 2)
    } else {
        let p = p.ok_or_else(|| usage("--p is required for a word-list file"))?;
        let text = fs::read_to_string(list).map_err(|e| usage(format!("cannot read {list}: {e}")))?;
        (parse_word_list(&text, p).map_err(usage)?, p)
    };
    let spec = style.spec(p)?;
    let bytes = match format {
        Format::Svg => render::panel(&words, columns, &spec).map_err(usage)?,
        Format::Tikz => render::panel_tikz(&words, columns, &spec)
            .map_err(usage)?
            .into_bytes(),
    };
    let path = out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from(format!("panel.{}", format.extension())));
    write_output(&path, &bytes)?;
    let (rows, cols) = panel_layout(words.len(), columns);
    Ok(format!("cells={} rows={rows} columns={cols}\n", words.len()))
}

/// Runs the verification suite against the given matrices.
pub fn verify_with(subjects: &Subjects) -> CommandOutcome {
    let checks = verify::run(subjects);
    let mut report = String::new();
    for c in &checks {
        let _ = writeln!(report, "{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    if failed == 0 {
        let _ = writeln!(report, "all {} checks passed", checks.len());
        CommandOutcome {
            code: EXIT_OK,
            report,
        }
    } else {
        let _ = writeln!(report, "{failed} of {} checks failed", checks.len());
        CommandOutcome {
            code: EXIT_VERIFY_FAILED,
            report,
        }
    }
}

fn resolve_code(cli: &Cli, name: Option<CodeName>) -> std::result::Result<(String, LinearCode), CommandOutcome> {
    match (name, &cli.matrix_file) {
        (Some(_), Some(_)) => Err(usage("give either a code name or --matrix-file, not both")),
        (None, None) => Err(usage("missing code: hamming, golay or golay-printed")),
        (None, Some(path)) => {
            let m = load_matrix(path)?;
            Ok(("custom".into(), code_from_fixed_space(&m).map_err(usage)?))
        }
        (Some(CodeName::Hamming), None) => Ok(("hamming".into(), hamming_code())),
        (Some(CodeName::Golay), None) => Ok(("golay".into(), flowerntt::golay_code())),
        (Some(CodeName::GolayPrinted), None) => Ok((
            "golay-printed".into(),
            code_from_fixed_space(flowerntt::golay_ntt_matrix_as_printed()).map_err(usage)?,
        )),
    }
}

fn cmd_mindist(cli: &Cli, name: Option<CodeName>) -> CmdResult {
    let (_, code) = resolve_code(cli, name)?;
    let d = code.minimum_distance().map_err(usage)?;
    Ok(format!(
        "n={} k={} d={d}\n",
        code.length(),
        code.dimension()
    ))
}

fn cmd_codewords(cli: &Cli, name: Option<CodeName>, out: Option<&Path>) -> CmdResult {
    let (label, code) = resolve_code(cli, name)?;
    let words: Vec<Word> = code.codewords().map_err(usage)?.collect();
    let header = format!(
        "{label} code over GF({}), n={} k={}, {} codewords",
        code.modulus(),
        code.length(),
        code.dimension(),
        words.len()
    );
    let text = format_word_list(&[&header], &words);
    match out {
        Some(path) => {
            write_output(path, text.as_bytes())?;
            Ok(format!("{header}\n"))
        }
        None => Ok(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_binary_7_order() {
        let words = all_binary_7();
        assert_eq!(words.len(), 128);
        assert_eq!(words[0].to_string(), "0000000");
        assert_eq!(words[1].to_string(), "0000001");
        assert_eq!(words[64].to_string(), "1000000");
        assert_eq!(words[127].to_string(), "1111111");
    }

    #[test]
    fn canvas_override_scales_radius() {
        let cli = Cli::try_parse_from(["flowerntt", "render", "11", "--canvas", "400"]).unwrap();
        let Command::Render { style, .. } = &cli.command else {
            panic!("parsed wrong subcommand");
        };
        let spec = style.spec(2).unwrap();
        assert_eq!(spec.canvas, 400.0);
        assert_eq!(spec.radius_scale, 2.0 * RenderSpec::for_modulus(2).radius_scale);
    }
}
