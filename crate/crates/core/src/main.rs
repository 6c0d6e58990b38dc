use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use sublex::algebra::{prime_power, FieldSpec, Matrix};
use sublex::distance::{distance_fast, distance_rank};
use sublex::grassmann::{enumerate_idvecs, gaussian_binomial, FerrersDiagram, IdentifyingVector, Subspace};
use sublex::io::{parse_idvec_list, read_text, write_text, CodeFile, PermFile};
use sublex::rankmetric::dimension_bound;
use sublex::search::{
    default_ml_idvecs, lexicode, lexicode_with_seed, ml_construction, second_seed_idvec, verify_with_workers,
    CellProgress, CodeParams, DefaultBuilder, SearchError, SearchOptions, SearchReport, SeedConfig, SubspaceCode,
    Verification,
};

#[derive(Parser)]
#[command(name = "sublex", version, about = "Build, extend and verify constant dimension subspace codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Plain lexicode over the whole Grassmannian.
    Lexicode(BuildArgs),
    /// Lexicode seeded with rank-metric codes in the two largest cells.
    Seeded {
        #[command(flatten)]
        build: BuildArgs,
        /// Code file to extend instead of the rank-metric seeds.
        #[arg(long)]
        seed: Option<PathBuf>,
        /// Dot order for a seeded cell; repeatable. The file for the second
        /// seed cell replaces its default order, any other adds a cell.
        #[arg(long = "perm")]
        perms: Vec<PathBuf>,
        /// Sweep every cell, even those the seeds already rule out.
        #[arg(long)]
        no_prune: bool,
    },
    /// Multilevel construction: one lifted rank-metric code per cell.
    Ml {
        #[command(flatten)]
        build: BuildArgs,
        /// File of identifying vectors, one per line; defaults to a greedy
        /// constant weight code.
        #[arg(long)]
        idvecs: Option<PathBuf>,
        /// Dot order for the rank lexicode of one cell; repeatable.
        #[arg(long = "perm")]
        perms: Vec<PathBuf>,
    },
    /// Exact minimum distance of a code file; fails below the header's d.
    Verify {
        file: PathBuf,
        #[arg(long, env = "SUBLEX_WORKERS", default_value_t = 1)]
        workers: usize,
    },
    /// Subspace distance between two row spaces, rows separated by commas,
    /// e.g. `1000,0100`.
    Dist {
        a: String,
        b: String,
        #[arg(short, default_value_t = 2)]
        q: u32,
        /// Use the rank of the stacked generators instead of the fast formula.
        #[arg(long)]
        naive: bool,
    },
    /// Schubert cells of `G_q(n, k)` in search order.
    Stats {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        #[arg(short, default_value_t = 2)]
        q: u32,
    },
    /// Upper bound on the dimension of a rank-metric code in a diagram.
    Bound {
        /// Column heights from the rightmost column, e.g. `4,4,2,2`.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["idvec", "full"])]
        cols: Option<Vec<usize>>,
        /// The diagram of an identifying vector.
        #[arg(long, conflicts_with = "full")]
        idvec: Option<IdentifyingVector>,
        /// A full box, `ROWSxCOLS`.
        #[arg(long)]
        full: Option<String>,
        #[arg(long)]
        delta: usize,
        #[arg(short, default_value_t = 2)]
        q: u32,
    },
}

#[derive(Args)]
struct BuildArgs {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    k: usize,
    #[arg(short)]
    d: usize,
    #[arg(short, default_value_t = 2)]
    q: u32,
    /// Field modulus for `q = p^e`, coefficients lowest degree first.
    #[arg(long)]
    modulus: Option<String>,
    /// Where to write the code file.
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Threads for candidate checks and verification.
    #[arg(long, env = "SUBLEX_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Print progress to stderr after every N cells; 0 is silent.
    #[arg(long, default_value_t = 0)]
    progress_every: usize,
    /// Verify the result and fail if it falls below d.
    #[arg(long)]
    verify: bool,
}

type CliResult = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn emit(text: &str) -> Result<(), String> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.to_string()),
        _ => Ok(()),
    }
}

fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Lexicode(b) => {
            let params = b.params()?;
            let (c, r) = lexicode(&params, &b.options()).map_err(show)?;
            finish(&b, "lexicode", c, &r)
        }
        Command::Seeded { build, seed, perms, no_prune } => {
            let params = build.params()?;
            let mut config = SeedConfig { prune: !no_prune, ..SeedConfig::default() };
            if let Some(path) = seed {
                let f = CodeFile::parse(&read_text(&path).map_err(show)?).map_err(|e| at(&path, e))?;
                config.extra_seed = Some(f.code);
            }
            // dot orders name cells of the space actually searched
            let searched = if params.needs_dual() { params.dual() } else { params.clone() };
            let v2 = second_seed_idvec(&searched);
            for path in &perms {
                let p = read_perm(path)?;
                if Some(p.idvec) == v2 && config.step2_order.is_none() && config.extra_seed.is_none() {
                    config.step2_order = Some(p.order);
                } else {
                    config.extra_cells.push((p.idvec, p.order));
                }
            }
            match lexicode_with_seed(&params, &config, &build.options()) {
                Ok((c, r)) => finish(&build, "seeded", c, &r),
                Err(SearchError::SeedFailsVerify(dist, w)) => {
                    eprintln!("error: seed has minimum distance {dist}, below d={}", params.d());
                    eprintln!("witness: records {} and {}", w.i + 1, w.j + 1);
                    eprintln!("{}", rows(w.first.rref()));
                    eprintln!("{}", rows(w.second.rref()));
                    Ok(ExitCode::FAILURE)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Ml { build, idvecs, perms } => {
            let params = build.params()?;
            let vs = match idvecs {
                Some(path) => parse_idvec_list(&read_text(&path).map_err(show)?).map_err(|e| at(&path, e))?,
                None => default_ml_idvecs(params.n(), params.k(), params.d()).map_err(show)?,
            };
            let mut builder = DefaultBuilder::default();
            for path in &perms {
                let p = read_perm(path)?;
                builder.orders.insert(p.idvec, p.order);
            }
            let (c, r) = ml_construction(&params, &vs, &builder).map_err(show)?;
            finish(&build, "ml", c, &r)
        }
        Command::Verify { file, workers } => {
            let f = CodeFile::parse(&read_text(&file).map_err(show)?).map_err(|e| at(&file, e))?;
            let v = verify_with_workers(&f.code, workers);
            Ok(print_verification(&f.code, &v))
        }
        Command::Dist { a, b, q, naive } => {
            let field = FieldSpec::new(q).map_err(show)?;
            let (x, y) = (parse_subspace(&field, &a)?, parse_subspace(&field, &b)?);
            let d = if naive { distance_rank(&x, &y) } else { distance_fast(&x, &y) }.map_err(show)?;
            println!("{d}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { n, k, q } => {
            FieldSpec::new(q).map_err(show)?;
            let vs = enumerate_idvecs(n, k).map_err(show)?;
            let w = n.max(5);
            let mut out = format!("{:>5}  {:<w$}  {:<12}  {:>4}  {:>12}\n", "i", "idvec", "cols", "|F|", "cell size");
            for (i, v) in vs.iter().enumerate() {
                let d = FerrersDiagram::from_idvec(v);
                let cols: Vec<String> = d.cols().iter().map(usize::to_string).collect();
                let size = u128::from(q).checked_pow(d.size() as u32).ok_or("cell size overflows")?;
                let cols = format!("({})", cols.join(","));
                writeln!(out, "{:>5}  {:<w$}  {:<12}  {:>4}  {:>12}", i + 1, v.to_string(), cols, d.size(), size)
                    .map_err(show)?;
            }
            writeln!(out, "total {}", gaussian_binomial(n, k, q).map_err(show)?).map_err(show)?;
            emit(&out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound { cols, idvec, full, delta, q } => {
            let d = if let Some(cols) = cols {
                let rows = cols.first().copied().unwrap_or(0);
                FerrersDiagram::new(rows, cols).map_err(show)?
            } else if let Some(v) = idvec {
                FerrersDiagram::from_idvec(&v)
            } else if let Some(size) = full {
                let (r, c) = size.split_once('x').ok_or("--full takes ROWSxCOLS")?;
                let parse = |s: &str| s.parse::<usize>().map_err(|_| format!("bad box size {size:?}"));
                FerrersDiagram::full(parse(r)?, parse(c)?)
            } else {
                return Err("give one of --cols, --idvec, --full".into());
            };
            let nu = dimension_bound(&d, delta).map_err(show)?;
            let words = u128::from(q).checked_pow(nu as u32).ok_or("q^bound overflows")?;
            println!("{nu} / {words}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

impl BuildArgs {
    fn params(&self) -> Result<CodeParams, String> {
        let field = match &self.modulus {
            None => FieldSpec::new(self.q),
            Some(m) => {
                let (p, e) = prime_power(self.q).ok_or(format!("q={} is not a prime power", self.q))?;
                let coeffs: Option<Vec<u8>> = m.bytes().map(|b| b.checked_sub(b'0').filter(|&x| x < 10)).collect();
                FieldSpec::with_modulus(p, e, &coeffs.ok_or(format!("bad modulus {m:?}"))?)
            }
        }
        .map_err(show)?;
        CodeParams::with_field(self.n, self.k, self.d, &field).map_err(show)
    }

    fn options(&self) -> SearchOptions {
        let mut opts = SearchOptions { workers: self.workers.max(1), ..SearchOptions::default() };
        if self.progress_every > 0 {
            let every = self.progress_every;
            let count = AtomicUsize::new(0);
            opts.progress = Some(Arc::new(move |c: &CellProgress| {
                if (count.fetch_add(1, Ordering::Relaxed) + 1).is_multiple_of(every) {
                    eprintln!(
                        "cell {} +{} examined {} total {} at {:.1}s",
                        c.idvec,
                        c.accepted,
                        c.examined,
                        c.code_size,
                        c.elapsed.as_secs_f64()
                    );
                }
            }));
        }
        opts
    }
}

fn finish(b: &BuildArgs, what: &str, c: SubspaceCode, r: &SearchReport) -> CliResult {
    println!("{r}");
    let mut status = ExitCode::SUCCESS;
    if b.verify {
        status = print_verification(&c, &verify_with_workers(&c, b.workers.max(1)));
    }
    if let Some(path) = &b.out {
        let p = c.params();
        let comment = format!(" sublex {what} n={} k={} d={} q={}", p.n(), p.k(), p.d(), p.q());
        let text = CodeFile::with_comments(c, vec![comment]).render().map_err(show)?;
        write_text(path, &text).map_err(show)?;
    }
    Ok(status)
}

fn print_verification(c: &SubspaceCode, v: &Verification) -> ExitCode {
    let d = c.params().d();
    let min = v.min_distance.map_or("none".to_string(), |m| m.to_string());
    let verdict = if v.meets(d) { "OK" } else { "FAIL" };
    println!("min={min} {verdict} (d={d}, M={}, pairs {} of {} computed)", c.len(), v.pairs_computed, v.pairs);
    if let Some(w) = &v.witness {
        println!("witness: records {} and {} at distance {}", w.i + 1, w.j + 1, w.distance);
        println!("{}", rows(w.first.rref()));
        println!("{}", rows(w.second.rref()));
    }
    if v.meets(d) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn rows(m: &Matrix) -> String {
    let rs: Vec<String> = m.iter_rows().map(|r| r.iter().map(|&x| char::from(b'0' + x)).collect()).collect();
    format!("  {}", rs.join(" "))
}

fn parse_subspace(field: &FieldSpec, s: &str) -> Result<Subspace, String> {
    let rows: Vec<&str> = s.split(',').map(str::trim).filter(|r| !r.is_empty()).collect();
    let n = rows.first().map(|r| r.len()).ok_or(format!("no rows in {s:?}"))?;
    let mut data = Vec::with_capacity(rows.len());
    for r in &rows {
        let row: Option<Vec<u8>> = r.bytes().map(|b| b.checked_sub(b'0').filter(|&x| x < 10)).collect();
        data.push(row.ok_or(format!("bad digit in {r:?}"))?);
    }
    let m = Matrix::from_rows(n, &data).map_err(show)?;
    Subspace::from_generators(field, &m).map_err(show)
}

fn read_perm(path: &Path) -> Result<PermFile, String> {
    PermFile::parse(&read_text(path).map_err(show)?).map_err(|e| at(path, e))
}

fn show(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn at(path: &Path, e: impl std::fmt::Display) -> String {
    format!("{}: {e}", path.display())
}
