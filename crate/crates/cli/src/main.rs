//! `tritile`: generate, verify, classify, compose, list and render triangle tilings.
//!
//! Exit status: 0 on success, 1 when a verification or classification is
//! negative, 2 for usage and input errors, 3 for I/O errors.

mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use tritile::classifier::{self, TargetDescriptor, TileDescriptor};
use tritile::exact::parse_rational;
use tritile::generators::{self, CATALOG_NAMES};
use tritile::tiling::verify;
use tritile::{Point, Tiling, Triangle};

#[derive(Parser)]
#[command(
    name = "tritile",
    version,
    about = "Exact tilings of a triangle by congruent triangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a tiling from one of the generator families.
    Generate(GenerateArgs),
    /// Check a tiling file and print its report.
    Verify {
        file: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a triangle can be N-tiled by a tile.
    Classify {
        /// Tile: right-tan E/F, 30-60-90, right-isosceles, right-other,
        /// 30-30-120, equilateral or oblique.
        #[arg(long, num_args = 1..=2, required = true)]
        tile: Vec<String>,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Replace every tile of BASE by a copy of SUB.
    Compose {
        base: PathBuf,
        sub: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// List or emit the built-in exemplar tilings.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Draw a tiling as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Mark every vertex.
        #[arg(long)]
        vertices: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Emit {
        name: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Quadratic,
    Biquadratic,
    Hexagonal,
    EquilateralSix,
    #[value(name = "right-30-60-90-three")]
    Right306090Three,
    BisectIsosceles,
    Pythagorean,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Similar,
    Equilateral,
    IsoscelesHalf,
    IsoscelesOther,
    Other,
}

#[derive(clap::Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    /// Side length or scale factor, as INT or INT/INT.
    #[arg(long, default_value = "1")]
    scale: String,
    /// Reference triangle as "x,y;x,y;x,y" in exact number syntax.
    #[arg(long)]
    triangle: Option<String>,
    #[arg(short, long)]
    output: PathBuf,
    /// Also write an SVG drawing.
    #[arg(long)]
    svg: Option<PathBuf>,
}

/// An error that maps to exit status 3.
#[derive(Debug)]
struct IoFailure(anyhow::Error);

impl std::fmt::Display for IoFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for IoFailure {}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(|e| IoFailure(e).into())
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(|e| IoFailure(e).into())
}

fn load(path: &Path) -> Result<Tiling> {
    let text = read(path)?;
    Tiling::from_json(&text)
        .with_context(|| format!("{} is not a valid tiling file", path.display()))
}

fn parse_triangle(s: &str) -> Result<Triangle> {
    let pts = s
        .split(';')
        .map(|pair| {
            let (x, y) = pair
                .trim()
                .split_once(',')
                .ok_or_else(|| anyhow!("expected x,y but found {pair:?}"))?;
            Ok(Point {
                x: x.trim().parse()?,
                y: y.trim().parse()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let [a, b, c]: [Point; 3] = pts
        .try_into()
        .map_err(|_| anyhow!("a triangle needs exactly three points"))?;
    Ok(Triangle::new(a, b, c))
}

fn need(v: Option<u32>, flag: &str) -> Result<u32> {
    v.ok_or_else(|| anyhow!("this family needs --{flag}"))
}

fn generate(args: &GenerateArgs) -> Result<Tiling> {
    let scale = parse_rational(&args.scale)?;
    let triangle = || -> Result<Triangle> {
        match &args.triangle {
            Some(s) => parse_triangle(s),
            None => parse_triangle("0,0;1,0;0,1"),
        }
    };
    let t = match args.family {
        Family::Quadratic => generators::quadratic(&triangle()?, need(args.n, "n")?)?,
        Family::Biquadratic => generators::biquadratic(need(args.m, "m")?, need(args.n, "n")?)?,
        Family::Hexagonal => generators::hexagonal(need(args.k, "k")?)?,
        Family::EquilateralSix => generators::equilateral_six(&scale)?,
        Family::Right306090Three => generators::right_306090_three(&scale)?,
        Family::BisectIsosceles => {
            let t = args
                .triangle
                .as_deref()
                .ok_or_else(|| anyhow!("this family needs --triangle"))?;
            generators::bisect_isosceles(&parse_triangle(t)?)?
        }
        Family::Pythagorean => {
            generators::pythagorean(need(args.p, "p")?, need(args.q, "q")?, need(args.r, "r")?)?
        }
    };
    Ok(t)
}

fn parse_tile(words: &[String]) -> Result<TileDescriptor> {
    let name = words[0].as_str();
    let tile = match name {
        "right-tan" => {
            let ratio = words
                .get(1)
                .ok_or_else(|| anyhow!("right-tan needs a tangent E/F"))?;
            let (e, f) = ratio.split_once('/').unwrap_or((ratio.as_str(), "1"));
            let (e, f): (u64, u64) = (e.parse()?, f.parse()?);
            if e == 0 || f == 0 {
                bail!("tangent must be positive");
            }
            TileDescriptor::right_tan(e, f)
        }
        "30-60-90" => TileDescriptor::Right306090,
        "right-isosceles" => TileDescriptor::RightIsosceles,
        "right-other" => TileDescriptor::RightOther,
        "30-30-120" => TileDescriptor::Isosceles3030120,
        "equilateral" => TileDescriptor::EquilateralTile,
        "oblique" => TileDescriptor::ObliqueOther,
        other => bail!("unknown tile {other:?}"),
    };
    if name != "right-tan" && words.len() > 1 {
        bail!("tile {name} takes no parameter");
    }
    Ok(tile)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Generate(args) => {
            let t = generate(&args)?;
            write(&args.output, &t.to_json())?;
            if let Some(svg_path) = &args.svg {
                write(svg_path, &svg::render(&t, false))?;
            }
            println!("wrote {} tiles to {}", t.n(), args.output.display());
        }
        Command::Verify { file, json } => {
            let t = load(&file)?;
            let report = verify(&t)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{report}");
            }
            if !report.all_ok() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Classify {
            tile,
            target,
            n,
            json,
        } => {
            let tile = parse_tile(&tile)?;
            let target = match target {
                Target::Similar => TargetDescriptor::SimilarToTile,
                Target::Equilateral => TargetDescriptor::Equilateral,
                Target::IsoscelesHalf => TargetDescriptor::IsoscelesWithTileAsHalf,
                Target::IsoscelesOther => TargetDescriptor::IsoscelesOther,
                Target::Other => TargetDescriptor::Other,
            };
            let verdict = classifier::classify(tile, target, n);
            if json {
                println!("{}", serde_json::to_string_pretty(&verdict)?);
            } else {
                println!("{verdict}");
            }
            if !verdict.is_admissible() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Compose { base, sub, output } => {
            let t = generators::compose(&load(&base)?, &load(&sub)?)?;
            write(&output, &t.to_json())?;
            println!("wrote {} tiles to {}", t.n(), output.display());
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for name in CATALOG_NAMES {
                    let entry = generators::catalog(name)?;
                    println!("{name}\t{}\t{}", entry.tiling.n(), entry.description);
                }
            }
            CatalogAction::Emit { name, output } => {
                let entry = generators::catalog(&name)?;
                write(&output, &entry.tiling.to_json())?;
            }
        },
        Command::Render {
            file,
            output,
            vertices,
        } => {
            let t = load(&file)?;
            write(&output, &svg::render(&t, vertices))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.downcast_ref::<IoFailure>().is_some() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
