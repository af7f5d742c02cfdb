use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use alphanorm::limiting::{MetaRademacher, SignVector};
use alphanorm::multivariate::{CorrelationMatrix, McConfig, MultivariateAlphaNormal};
use alphanorm::verify::{self, VerifyConfig};
use alphanorm::weibull::{majorization_report, Weibull};
use alphanorm::{alpha_normal, AlphaNormal, Execution, RngStream};

use crate::table::Table;

#[derive(Debug, Parser)]
#[command(name = "alphanorm", version, about = "Alpha-normal distributions: tables, samples and checks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Density on an even grid.
    DensityTable(GridArgs),
    /// CDF on an even grid.
    CdfTable(GridArgs),
    /// Quantiles at the given probabilities.
    Quantile(QuantileArgs),
    /// Seeded random draws, one per row.
    Sample(SampleArgs),
    /// Absolute moments, closed form against quadrature.
    Moments(MomentArgs),
    /// Differential entropy, closed form against quadrature.
    Entropy(EntropyArgs),
    /// ψ_α Orlicz norm, closed form against the Orlicz root.
    PsiNorm(PsiArgs),
    /// Two-sided tail with its Weibull upper and lower bounds.
    Tails(TailArgs),
    /// Joint density of the multivariate law.
    MvDensity(MvDensityArgs),
    /// Joint CDF of the multivariate law.
    MvCdf(MvCdfArgs),
    /// Point masses of the limiting sign law.
    LimitPmf(LimitPmfArgs),
    /// Densities for α = 1, 2, 3, 5 on a common grid.
    Figure1(FigureArgs),
    /// Run the acceptance checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    AlphaNormal,
    Weibull,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SampleFamily {
    AlphaNormal,
    Weibull,
    Multivariate,
    Limit,
}

#[derive(Debug, Args)]
struct Mc {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    stream: u64,
    /// Run chunked Monte Carlo work on one thread.
    #[arg(long)]
    sequential: bool,
}

impl Mc {
    fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        }
    }
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    sigma: f64,
    #[arg(long, default_value_t = -3.0, allow_hyphen_values = true)]
    xmin: f64,
    #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
    xmax: f64,
    #[arg(long, default_value_t = 601)]
    steps: usize,
}

#[derive(Debug, Args)]
struct QuantileArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    sigma: f64,
    /// Comma-separated probabilities.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    u: Vec<f64>,
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[arg(long, value_enum, default_value = "alpha-normal")]
    dist: SampleFamily,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    /// Scale for the univariate law, or a correlation CSV for `multivariate` and `limit`.
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<String>,
    /// Weibull scale.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    lambda: f64,
    #[arg(long, default_value_t = 1000)]
    n: usize,
    #[command(flatten)]
    mc: Mc,
}

#[derive(Debug, Args)]
struct MomentArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    sigma: f64,
    #[arg(long, value_delimiter = ',', default_value = "0.5,1,2,4", allow_hyphen_values = true)]
    p: Vec<f64>,
}

#[derive(Debug, Args)]
struct EntropyArgs {
    #[arg(long, value_enum, default_value = "alpha-normal")]
    dist: Family,
    #[arg(long, value_delimiter = ',', default_value = "0.5,1,2,3,5", allow_hyphen_values = true)]
    alpha: Vec<f64>,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    lambda: f64,
}

#[derive(Debug, Args)]
struct PsiArgs {
    #[arg(long, value_enum, default_value = "alpha-normal")]
    dist: Family,
    #[arg(long, value_delimiter = ',', default_value = "0.5,1,2,4", allow_hyphen_values = true)]
    alpha: Vec<f64>,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    sigma: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    lambda: f64,
}

#[derive(Debug, Args)]
struct TailArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
    tmax: f64,
    #[arg(long, default_value_t = 0.25, allow_hyphen_values = true)]
    step: f64,
}

#[derive(Debug, Args)]
struct MvDensityArgs {
    /// Correlation matrix CSV: a line with d, then d rows.
    #[arg(long)]
    sigma: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    /// A comma-separated point; repeat for several.
    #[arg(long, required = true, allow_hyphen_values = true)]
    x: Vec<String>,
}

#[derive(Debug, Args)]
struct MvCdfArgs {
    #[arg(long)]
    sigma: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, required = true, allow_hyphen_values = true)]
    x: Vec<String>,
    /// Monte Carlo samples for d ≥ 3.
    #[arg(long, default_value_t = 200_000)]
    samples: usize,
    #[command(flatten)]
    mc: Mc,
}

#[derive(Debug, Args)]
struct LimitPmfArgs {
    /// Bivariate correlation.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "sigma")]
    rho: Option<f64>,
    #[arg(long)]
    sigma: Option<PathBuf>,
    #[arg(long, default_value_t = 200_000)]
    samples: usize,
    #[command(flatten)]
    mc: Mc,
}

#[derive(Debug, Args)]
struct FigureArgs {
    #[arg(long, default_value_t = -3.0, allow_hyphen_values = true)]
    xmin: f64,
    #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
    xmax: f64,
    #[arg(long, default_value_t = 601)]
    steps: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// `all` or comma-separated criterion numbers.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    sequential: bool,
}

pub struct Outcome {
    pub text: String,
    /// False only when `verify` found a failing criterion.
    pub verified: bool,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numeric(alphanorm::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Numeric(alphanorm::Error::Parse(_)) => 1,
            CliError::Numeric(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Numeric(e) => write!(f, "{e}"),
        }
    }
}

impl From<alphanorm::Error> for CliError {
    fn from(e: alphanorm::Error) -> Self {
        CliError::Numeric(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn run(cli: Cli) -> CliResult<Outcome> {
    let text = match cli.command {
        Command::DensityTable(a) => grid_table(&a, "pdf", |d, x| d.pdf(x))?,
        Command::CdfTable(a) => grid_table(&a, "cdf", |d, x| d.cdf(x))?,
        Command::Quantile(a) => quantile(&a)?,
        Command::Sample(a) => sample(&a)?,
        Command::Moments(a) => moments(&a)?,
        Command::Entropy(a) => entropy(&a)?,
        Command::PsiNorm(a) => psi_norm(&a)?,
        Command::Tails(a) => tails(&a)?,
        Command::MvDensity(a) => mv_density(&a)?,
        Command::MvCdf(a) => mv_cdf(&a)?,
        Command::LimitPmf(a) => limit_pmf(&a)?,
        Command::Figure1(a) => figure1(&a)?,
        Command::Verify(a) => return verify_cmd(&a),
    };
    Ok(Outcome { text, verified: true })
}

fn grid(xmin: f64, xmax: f64, steps: usize) -> CliResult<Vec<f64>> {
    if steps < 2 {
        return Err(usage("--steps must be at least 2"));
    }
    if !(xmin.is_finite() && xmax.is_finite() && xmin < xmax) {
        return Err(usage(format!("need finite --xmin < --xmax, got {xmin} and {xmax}")));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps).map(|i| xmin + (xmax - xmin) * i as f64 / last).collect())
}

fn grid_table(a: &GridArgs, col: &str, f: impl Fn(&AlphaNormal, f64) -> f64) -> CliResult<String> {
    let d = AlphaNormal::new(a.alpha, a.sigma)?;
    let mut t = Table::new(&["x", col]);
    for x in grid(a.xmin, a.xmax, a.steps)? {
        t.row(&[x, f(&d, x)]);
    }
    Ok(t.finish())
}

fn quantile(a: &QuantileArgs) -> CliResult<String> {
    let d = AlphaNormal::new(a.alpha, a.sigma)?;
    let mut t = Table::new(&["u", "quantile"]);
    for &u in &a.u {
        t.row(&[u, d.quantile(u)?]);
    }
    Ok(t.finish())
}

fn read_sigma(path: &PathBuf) -> CliResult<CorrelationMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(CorrelationMatrix::from_csv(&text)?)
}

fn need_alpha(alpha: Option<f64>) -> CliResult<f64> {
    alpha.ok_or_else(|| usage("--alpha is required for this distribution"))
}

fn coord_header(d: usize) -> Vec<String> {
    if d == 1 {
        vec!["x".into()]
    } else {
        (1..=d).map(|i| format!("x{i}")).collect()
    }
}

fn sample(a: &SampleArgs) -> CliResult<String> {
    let mut rng = RngStream::new(a.mc.seed, a.mc.stream);
    let exec = a.mc.exec();
    let comment = format!("seed={} stream={}", a.mc.seed, a.mc.stream);
    let scalar_sigma = || -> CliResult<f64> {
        match &a.sigma {
            None => Ok(1.0),
            Some(s) => s.parse().map_err(|_| usage(format!("--sigma {s:?} is not a number"))),
        }
    };
    let sigma_path = || -> CliResult<CorrelationMatrix> {
        let s = a.sigma.as_ref().ok_or_else(|| usage("--sigma <path> is required for this distribution"))?;
        read_sigma(&PathBuf::from(s))
    };
    let text = match a.dist {
        SampleFamily::AlphaNormal => {
            let d = AlphaNormal::new(need_alpha(a.alpha)?, scalar_sigma()?)?;
            let mut t = Table::with_comment(&comment, &["x"]);
            for x in d.sample_n(a.n, &mut rng, exec) {
                t.row(&[x]);
            }
            t.finish()
        }
        SampleFamily::Weibull => {
            let w = Weibull::new(need_alpha(a.alpha)?, a.lambda)?;
            let mut t = Table::with_comment(&comment, &["x"]);
            for x in w.sample_n(a.n, &mut rng, exec) {
                t.row(&[x]);
            }
            t.finish()
        }
        SampleFamily::Multivariate => {
            let m = MultivariateAlphaNormal::new(sigma_path()?, need_alpha(a.alpha)?)?;
            let header = coord_header(m.dim());
            let mut t = Table::with_comment(&comment, &header.iter().map(String::as_str).collect::<Vec<_>>());
            for v in m.sample_n(a.n, &mut rng, exec) {
                t.row(&v);
            }
            t.finish()
        }
        SampleFamily::Limit => {
            let m = MetaRademacher::new(sigma_path()?);
            let header = coord_header(m.dim());
            let mut t = Table::with_comment(&comment, &header.iter().map(String::as_str).collect::<Vec<_>>());
            for _ in 0..a.n {
                t.row(&m.sample(&mut rng).to_f64());
            }
            t.finish()
        }
    };
    Ok(text)
}

fn moments(a: &MomentArgs) -> CliResult<String> {
    let d = AlphaNormal::new(a.alpha, a.sigma)?;
    let mut t = Table::new(&["p", "closed_form", "quadrature"]);
    for &p in &a.p {
        t.row(&[p, d.absolute_moment(p)?, alpha_normal::numeric::absolute_moment(&d, p)?]);
    }
    Ok(t.finish())
}

fn entropy(a: &EntropyArgs) -> CliResult<String> {
    let mut t = Table::new(&["alpha", "closed_form", "quadrature"]);
    for &alpha in &a.alpha {
        let (closed, quad) = match a.dist {
            Family::AlphaNormal => {
                let d = AlphaNormal::standard(alpha)?;
                (d.entropy()?, alpha_normal::numeric::entropy(&d)?)
            }
            Family::Weibull => {
                let w = Weibull::new(alpha, a.lambda)?;
                (w.entropy(), w.entropy_numeric()?)
            }
        };
        t.row(&[alpha, closed, quad]);
    }
    Ok(t.finish())
}

fn psi_norm(a: &PsiArgs) -> CliResult<String> {
    let mut t = Table::new(&["alpha", "scale", "closed_form", "orlicz_root"]);
    for &alpha in &a.alpha {
        let row = match a.dist {
            Family::AlphaNormal => {
                let d = AlphaNormal::new(alpha, a.sigma)?;
                [alpha, a.sigma, d.psi_norm(), d.psi_norm_numeric()?]
            }
            Family::Weibull => {
                let w = Weibull::new(alpha, a.lambda)?;
                [alpha, a.lambda, w.psi_norm(), w.psi_norm_numeric()?]
            }
        };
        t.row(&row);
    }
    Ok(t.finish())
}

fn tails(a: &TailArgs) -> CliResult<String> {
    if !(a.step > 0.0 && a.tmax >= 0.0 && a.tmax.is_finite()) {
        return Err(usage("need --step > 0 and a finite --tmax >= 0"));
    }
    let n = (a.tmax / a.step + 1e-9).floor() as usize;
    let grid: Vec<f64> = (0..=n).map(|i| a.step * i as f64).collect();
    let r = majorization_report(a.alpha, &grid)?;
    let mut t = Table::new(&["t", "tail", "upper_bound", "lower_bound", "lower_bound_applies"]);
    for (i, &x) in grid.iter().enumerate() {
        let applies = if r.lower_ok[i].is_some() { 1.0 } else { 0.0 };
        t.row(&[x, r.tail[i], r.upper_bound[i], r.lower_bound[i], applies]);
    }
    Ok(t.finish())
}

fn parse_point(s: &str, d: usize) -> CliResult<Vec<f64>> {
    let v = s
        .split(',')
        .map(|c| c.trim().parse::<f64>().map_err(|_| usage(format!("bad coordinate {c:?} in --x {s:?}"))))
        .collect::<CliResult<Vec<f64>>>()?;
    if v.len() != d {
        return Err(usage(format!("--x {s:?} has {} coordinates, the matrix is {d}x{d}", v.len())));
    }
    Ok(v)
}

fn mv_density(a: &MvDensityArgs) -> CliResult<String> {
    let m = MultivariateAlphaNormal::new(read_sigma(&a.sigma)?, a.alpha)?;
    let mut header = coord_header(m.dim());
    header.push("pdf".into());
    let mut t = Table::new(&header);
    for s in &a.x {
        let mut x = parse_point(s, m.dim())?;
        let p = m.joint_pdf(&x)?;
        x.push(p);
        t.row(&x);
    }
    Ok(t.finish())
}

fn mv_cdf(a: &MvCdfArgs) -> CliResult<String> {
    let m = MultivariateAlphaNormal::new(read_sigma(&a.sigma)?, a.alpha)?;
    let mc = McConfig { seed: a.mc.seed, stream_id: a.mc.stream, samples: a.samples, exec: a.mc.exec() };
    let mut header = coord_header(m.dim());
    header.extend(["cdf".into(), "std_error".into()]);
    let mut t = Table::new(&header);
    for s in &a.x {
        let mut x = parse_point(s, m.dim())?;
        let est = m.joint_cdf(&x, &mc)?;
        x.extend([est.value, est.std_error]);
        t.row(&x);
    }
    Ok(t.finish())
}

fn limit_pmf(a: &LimitPmfArgs) -> CliResult<String> {
    let sigma = match (&a.rho, &a.sigma) {
        (Some(r), None) => CorrelationMatrix::bivariate(*r)?,
        (None, Some(p)) => read_sigma(p)?,
        _ => return Err(usage("give either --rho or --sigma")),
    };
    let m = MetaRademacher::new(sigma);
    let mc = McConfig { seed: a.mc.seed, stream_id: a.mc.stream, samples: a.samples, exec: a.mc.exec() };
    let mut header = coord_header(m.dim());
    header.extend(["pmf".into(), "std_error".into()]);
    let mut t = Table::new(&header);
    if m.dim() > alphanorm::limiting::MAX_PMF_DIM {
        return Err(alphanorm::Error::Resource(format!(
            "d = {} exceeds {}",
            m.dim(),
            alphanorm::limiting::MAX_PMF_DIM
        ))
        .into());
    }
    for s in SignVector::all(m.dim()) {
        let p = m.pmf(&s, &mc)?;
        let mut row = s.to_f64();
        row.extend([p.value, p.std_error]);
        t.row(&row);
    }
    Ok(t.finish())
}

fn figure1(a: &FigureArgs) -> CliResult<String> {
    let alphas = [1.0, 2.0, 3.0, 5.0];
    let laws = alphas.iter().map(|&al| AlphaNormal::standard(al)).collect::<alphanorm::Result<Vec<_>>>()?;
    let mut t = Table::new(&["x", "pdf_alpha_1", "pdf_alpha_2", "pdf_alpha_3", "pdf_alpha_5"]);
    for x in grid(a.xmin, a.xmax, a.steps)? {
        let mut row = vec![x];
        row.extend(laws.iter().map(|d| d.pdf(x)));
        t.row(&row);
    }
    Ok(t.finish())
}

fn verify_cmd(a: &VerifyArgs) -> CliResult<Outcome> {
    let ids: Vec<usize> = if a.suite == "all" {
        (1..=verify::CRITERIA).collect()
    } else {
        a.suite
            .split(',')
            .map(|s| match s.trim().parse::<usize>() {
                Ok(id) if (1..=verify::CRITERIA).contains(&id) => Ok(id),
                _ => Err(usage(format!("unknown criterion {s:?}; use all or 1..{}", verify::CRITERIA))),
            })
            .collect::<CliResult<_>>()?
    };
    let exec = if a.sequential { Execution::Sequential } else { Execution::default() };
    let cfg = VerifyConfig { seed: a.seed, exec };
    let reports = alphanorm::parallel::map_items(ids, exec, |id| verify::run_criterion(id, &cfg));
    let text = verify::format_report(&reports);
    Ok(Outcome { verified: reports.iter().all(|r| r.pass()), text })
}
