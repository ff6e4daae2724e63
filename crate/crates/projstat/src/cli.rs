//! Command-line interface.
//!
//! Exit codes: 0 when every verified identity matches (or a command simply
//! succeeds), 1 on a mismatch or a failed bijection check, 2 on any error.

use std::io::Write;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use projstat_core::bijections::{
    bipartite_from_tuple, nvec_decode, nvec_encode, order_involution, rs_correspondence, rs_inverse, rs_transpose_map,
    signed_window,
};
use projstat_core::group::{parse_element, parse_group};
use projstat_core::identities::{CarlitzCaps, HilbertCaps, SixStatsCaps};
use projstat_core::stats::{col_residues, des_set, flag_stats, neg_set, stat_record};
use projstat_core::{GroupDescriptor, Order, ProjectiveElement, VerificationReport};
use serde_json::json;

use crate::render::{self, Format};
use crate::{budget_from_env, distribution, parallel_verifier, timed, Parallel};

pub const EXIT_MATCH: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "projstat",
    version,
    about = "Statistics and identity checks for projective reflection groups G(r,p,s,n)"
)]
pub struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest group order to enumerate; overrides PROJSTAT_BUDGET.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Statistics of one element, or the (des, fmaj, col) distribution of a group.
    Stats(StatsArgs),
    /// Compare an identity's enumeration side against its closed form.
    Verify(VerifyArgs),
    /// Apply one of the bijections and check the statistics it transports.
    Bijection {
        #[command(subcommand)]
        kind: Bijection,
    },
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// Group, e.g. `G(6,2,3,8)`.
    pub group: String,
    /// Element in window notation, e.g. `[2^1,1]`.
    pub element: Option<String>,
    /// Print the distribution table even when an element is given.
    #[arg(long)]
    pub dist: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    /// One-dimensional character times q^fmaj, summed over the group.
    CharacterFmaj,
    /// Signed sums over multiset permutations.
    SignedMultinomial,
    /// sign(|g|) q^fmaj over G(r,n).
    SignedWreath,
    /// t^fdes q^fmaj summed over the lifts of each class.
    Lift,
    /// (des, fmaj, col) Carlitz identity.
    CarlitzDes,
    /// (fdes, fmaj) Carlitz identity.
    CarlitzFdes,
    /// (fdes, fmaj, col) identity.
    FdesTrivariate,
    /// des, fmaj, col of g and of g⁻¹.
    SixStats,
    /// Bivariate fmaj of g and g⁻¹ over the invariant denominators.
    Hilbert,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub identity: Identity,
    /// Group as `G(r,p,s,n)`; individual flags override its fields.
    #[arg(long)]
    pub group: Option<String>,
    /// Color count (default 1).
    #[arg(long)]
    pub r: Option<u32>,
    /// Color-sum divisor (default 1).
    #[arg(long)]
    pub p: Option<u32>,
    /// Order of the scalar quotient (default 1).
    #[arg(long)]
    pub s: Option<u32>,
    /// Rank.
    #[arg(long)]
    pub n: Option<u32>,
    /// Sign of the character, ±1.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub eps: i32,
    /// Color exponent of the character.
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    /// Sets both tmax and qmax.
    #[arg(long)]
    pub caps: Option<u32>,
    #[arg(long)]
    pub tmax: Option<u32>,
    #[arg(long)]
    pub qmax: Option<u32>,
    #[arg(long)]
    pub amax: Option<u32>,
    /// Cap on `u`, which is also the largest rank enumerated.
    #[arg(long, visible_alias = "nmax")]
    pub umax: Option<u32>,
    /// A single composition for signed-multinomial, e.g. `2,1,1`.
    #[arg(long, value_delimiter = ',')]
    pub composition: Option<Vec<u32>>,
    /// Number of parts in the signed-multinomial sweep (zeros allowed).
    #[arg(long, default_value_t = 4)]
    pub parts: usize,
}

#[derive(Debug, Subcommand)]
pub enum Bijection {
    /// Encode `f ∈ ℕⁿ(p)` as `(g, λ, h)`, or decode `(g, λ, h)` back to `f`.
    Nvec {
        #[arg(long)]
        group: String,
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["element", "lambda", "h"])]
        f: Option<Vec<u32>>,
        element: Option<String>,
        #[arg(long, value_delimiter = ',')]
        lambda: Option<Vec<u32>>,
        #[arg(long)]
        h: Option<u32>,
    },
    /// Map `(g, λ, μ, h, k)` to a 2-partite partition.
    Bipartite {
        #[arg(long)]
        group: String,
        element: String,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<u32>,
        #[arg(long, value_delimiter = ',')]
        mu: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        h: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// Relabel the window so `<'`-descents become `<`-descents.
    OrderInvolution {
        #[arg(long)]
        group: String,
        element: String,
    },
    /// Robinson–Schensted bitableaux of a signed permutation.
    Rs {
        element: String,
        /// Defaults to `G(2,1,1,n)` with `n` read from the window.
        #[arg(long)]
        group: Option<String>,
    },
    /// Transpose the colored tableaux and map back.
    RsTranspose {
        element: String,
        #[arg(long)]
        group: Option<String>,
    },
}

/// Parses arguments, runs, prints errors and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_MATCH };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_ERROR
        }
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<i32> {
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!("--threads must be positive");
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let budget = match cli.budget {
        Some(b) => b,
        None => budget_from_env().map_err(|e| anyhow!(e))?,
    };
    let format = if cli.json {
        Format::Json
    } else {
        cli.format.unwrap_or_default()
    };
    let mut out = std::io::stdout().lock();
    let code = match &cli.command {
        Command::Stats(a) => cmd_stats(a, budget, format, &mut out)?,
        Command::Verify(a) => cmd_verify(a, budget, format, &mut out)?,
        Command::Bijection { kind } => cmd_bijection(kind, format, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn group_arg(text: &str) -> anyhow::Result<GroupDescriptor> {
    parse_group(text).with_context(|| format!("bad group {text:?}"))
}

fn element_arg(text: &str, group: GroupDescriptor) -> anyhow::Result<ProjectiveElement> {
    parse_element(text, group).with_context(|| format!("bad element {text:?} for {group}"))
}

fn cmd_stats(a: &StatsArgs, budget: u64, format: Format, out: &mut impl Write) -> anyhow::Result<i32> {
    let group = group_arg(&a.group)?;
    if let Some(e) = &a.element {
        let g = element_arg(e, group)?;
        writeln!(out, "{}", render::stat_record(&stat_record(&g), format).trim_end())?;
        if !a.dist {
            return Ok(EXIT_MATCH);
        }
    }
    if group.order() > budget as u128 {
        return Err(projstat_core::Error::BudgetExceeded {
            order: group.order(),
            budget,
        }
        .into());
    }
    let rows = render::dist_rows(&distribution(&Parallel::default(), group));
    writeln!(
        out,
        "{}",
        render::distribution(&group.to_string(), &rows, format).trim_end()
    )?;
    Ok(EXIT_MATCH)
}

struct Resolved {
    r: u32,
    p: u32,
    s: u32,
    n: Option<u32>,
}

fn resolve(a: &VerifyArgs) -> anyhow::Result<Resolved> {
    let base = a.group.as_deref().map(group_arg).transpose()?;
    let pick = |flag: Option<u32>, from: fn(&GroupDescriptor) -> u32, default: Option<u32>| {
        flag.or(base.as_ref().map(from)).or(default)
    };
    Ok(Resolved {
        r: pick(a.r, GroupDescriptor::r, Some(1)).expect("defaulted"),
        p: pick(a.p, GroupDescriptor::p, Some(1)).expect("defaulted"),
        s: pick(a.s, GroupDescriptor::s, Some(1)).expect("defaulted"),
        n: pick(a.n, GroupDescriptor::n, None),
    })
}

fn positive(name: &str, v: u32) -> anyhow::Result<u32> {
    if v == 0 {
        bail!("--{name} must be positive");
    }
    Ok(v)
}

fn cmd_verify(a: &VerifyArgs, budget: u64, format: Format, out: &mut impl Write) -> anyhow::Result<i32> {
    let Resolved { r, p, s, n } = resolve(a)?;
    let need_n = || n.ok_or_else(|| anyhow!("--n is required for this identity"));
    let group = || -> anyhow::Result<GroupDescriptor> { Ok(GroupDescriptor::new(r, p, s, need_n()?)?) };
    let t = positive("tmax", a.tmax.or(a.caps).unwrap_or(6))?;
    let q = positive("qmax", a.qmax.or(a.caps).unwrap_or(6))?;
    let amax = a.amax.unwrap_or(6);
    let u = positive("umax", a.umax.unwrap_or(3))?;
    let v = parallel_verifier(budget);
    let carlitz = CarlitzCaps { t, q, a: amax };

    let reps: Vec<VerificationReport> = match a.identity {
        Identity::CharacterFmaj => {
            let g = group()?;
            vec![timed(|| v.character_fmaj(g, a.eps, a.k))?]
        }
        Identity::SignedMultinomial => match &a.composition {
            Some(c) => vec![timed(|| v.signed_multinomial(c))?],
            None => v.signed_multinomial_sweep(n.unwrap_or(8), a.parts)?,
        },
        Identity::SignedWreath => {
            let n = need_n()?;
            vec![timed(|| v.signed_wreath(r, n))?]
        }
        Identity::Lift => {
            let n = need_n()?;
            vec![timed(|| v.lift_identity(r, s, n))?]
        }
        Identity::CarlitzDes => {
            let g = group()?;
            vec![timed(|| v.carlitz_des(g, carlitz))?]
        }
        Identity::CarlitzFdes => {
            let g = group()?;
            vec![timed(|| v.carlitz_fdes(g, carlitz))?]
        }
        Identity::FdesTrivariate => {
            let g = group()?;
            vec![timed(|| v.fdes_trivariate(g, carlitz))?]
        }
        Identity::SixStats => {
            let caps = SixStatsCaps { u, t, q, a: a.amax };
            vec![timed(|| v.six_stats(r, p, s, caps))?]
        }
        Identity::Hilbert => vec![timed(|| v.hilbert(r, p, s, HilbertCaps { u, q }))?],
    };
    writeln!(out, "{}", render::reports(&reps, format).trim_end())?;
    Ok(exit_code(&reps))
}

/// 0 when every report matches, 1 otherwise.
pub fn exit_code(reps: &[VerificationReport]) -> i32 {
    if reps.iter().all(VerificationReport::is_match) {
        EXIT_MATCH
    } else {
        EXIT_MISMATCH
    }
}

/// One transported equality, printed as `name: lhs = rhs ok`.
struct Eq {
    name: String,
    lhs: String,
    rhs: String,
}

impl Eq {
    fn new(name: &str, lhs: impl std::fmt::Display, rhs: impl std::fmt::Display) -> Self {
        Self {
            name: name.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn tuple(xs: &[u32]) -> String {
    format!("({})", xs.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

fn set(xs: &[u32]) -> String {
    format!("{{{}}}", xs.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

fn emit(
    out: &mut impl Write,
    format: Format,
    kind: &str,
    extra: Option<serde_json::Value>,
    fields: &[(&str, String)],
    checks: &[Eq],
) -> anyhow::Result<i32> {
    if format == Format::Json {
        let mut fields: serde_json::Map<_, _> = fields.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        if let Some(serde_json::Value::Object(extra)) = extra {
            fields.extend(extra);
        }
        let checks: Vec<_> = checks
            .iter()
            .map(|c| json!({"name": c.name, "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds()}))
            .collect();
        writeln!(
            out,
            "{}",
            render::to_json(json!({"kind": kind, "fields": fields, "checks": checks}))
        )?;
    } else {
        let line: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "{}", line.join(", "))?;
        for c in checks {
            let verdict = if c.holds() { "ok" } else { "FAILED" };
            writeln!(out, "  {}: {} = {} {verdict}", c.name, c.lhs, c.rhs)?;
        }
    }
    Ok(if checks.iter().all(Eq::holds) {
        EXIT_MATCH
    } else {
        EXIT_MISMATCH
    })
}

/// `max f`, `|f|` and `col_{r/s}(f)` against the statistics of `(g, λ, h)`.
fn nvec_checks(f: &[u32], g: &ProjectiveElement, lambda: &[u32], h: u32) -> Vec<Eq> {
    let group = g.group();
    let (r, step, n) = (group.r(), group.step(), group.n());
    let st = flag_stats(g);
    vec![
        Eq::new(
            "max f = fdes(g) + r·λ₁ + h·r/s",
            f.iter().max().copied().unwrap_or(0),
            st.fdes + r * lambda.first().copied().unwrap_or(0) + h * step,
        ),
        Eq::new(
            "|f| = fmaj(g) + r·|λ| + h·n·r/s",
            f.iter().sum::<u32>(),
            st.fmaj + r * lambda.iter().sum::<u32>() + h * n * step,
        ),
        Eq::new("col(f) = col(g)", col_residues(f, step), st.col),
    ]
}

fn infer_bn(element: &str, group: &Option<String>) -> anyhow::Result<ProjectiveElement> {
    let group = match group {
        Some(g) => group_arg(g)?,
        None => {
            let n = element
                .trim()
                .trim_start_matches('[')
                .trim_end_matches(']')
                .split(',')
                .count();
            GroupDescriptor::wreath(2, n as u32)?
        }
    };
    element_arg(element, group)
}

fn cmd_bijection(kind: &Bijection, format: Format, out: &mut impl Write) -> anyhow::Result<i32> {
    match kind {
        Bijection::Nvec {
            group,
            f,
            element,
            lambda,
            h,
        } => {
            let group = group_arg(group)?;
            let (f, g, lambda, h) = match f {
                Some(f) => {
                    let (g, lambda, h) = nvec_encode(f, group)?;
                    (f.clone(), g, lambda, h)
                }
                None => {
                    let e = element
                        .as_deref()
                        .ok_or_else(|| anyhow!("give --f, or an element with --lambda and --h"))?;
                    let g = element_arg(e, group)?;
                    let lambda = lambda.clone().unwrap_or_else(|| vec![0; group.n() as usize]);
                    let h = h.unwrap_or(0);
                    (nvec_decode(&g, &lambda, h)?, g, lambda, h)
                }
            };
            let mut checks = nvec_checks(&f, &g, &lambda, h);
            let back = nvec_decode(&g, &lambda, h)?;
            checks.push(Eq::new("decode(encode(f)) = f", tuple(&back), tuple(&f)));
            emit(
                out,
                format,
                "nvec",
                None,
                &[
                    ("f", tuple(&f)),
                    ("g", g.to_string()),
                    ("λ", tuple(&lambda)),
                    ("h", h.to_string()),
                ],
                &checks,
            )
        }
        Bijection::Bipartite {
            group,
            element,
            lambda,
            mu,
            h,
            k,
        } => {
            let group = group_arg(group)?;
            let g = element_arg(element, group)?;
            let b = bipartite_from_tuple(&g, lambda, mu, *h, *k)?;
            let (r, step, n) = (group.r(), group.step(), group.n());
            let (a, ai) = (flag_stats(&g), flag_stats(&g.inverse()));
            let max = |v: &[u32]| v.iter().max().copied().unwrap_or(0);
            let sum = |v: &[u32]| v.iter().sum::<u32>();
            let checks = vec![
                Eq::new("2-partite", b.is_two_partite(), true),
                Eq::new("column sums in one class", b.column_class(r, group.s()).is_some(), true),
                Eq::new(
                    "max top = fdes(g) + r·λ₁ + h·r/s",
                    max(&b.top),
                    a.fdes + r * max(lambda) + h * step,
                ),
                Eq::new(
                    "|top| = fmaj(g) + r·|λ| + h·n·r/s",
                    sum(&b.top),
                    a.fmaj + r * sum(lambda) + h * n * step,
                ),
                Eq::new("col(top) = col(g)", col_residues(&b.top, step), a.col),
                Eq::new(
                    "max bottom = fdes(g⁻¹) + r·μ₁ + k·r/s",
                    max(&b.bottom),
                    ai.fdes + r * max(mu) + k * step,
                ),
                Eq::new(
                    "|bottom| = fmaj(g⁻¹) + r·|μ| + k·n·r/s",
                    sum(&b.bottom),
                    ai.fmaj + r * sum(mu) + k * n * step,
                ),
                Eq::new("col(bottom) = col(g⁻¹)", col_residues(&b.bottom, step), ai.col),
            ];
            emit(
                out,
                format,
                "bipartite",
                None,
                &[
                    ("g", g.to_string()),
                    ("top", tuple(&b.top)),
                    ("bottom", tuple(&b.bottom)),
                ],
                &checks,
            )
        }
        Bijection::OrderInvolution { group, element } => {
            let group = group_arg(group)?;
            let g = element_arg(element, group)?;
            let y = order_involution(&g)?;
            let checks = vec![
                Eq::new(
                    "Des(φ(g)) = Des'(g)",
                    set(&des_set(&y, Order::Color)?),
                    set(&des_set(&g, Order::Prime)?),
                ),
                Eq::new("col(φ(g)) = col(g)", flag_stats(&y).col, flag_stats(&g).col),
            ];
            emit(
                out,
                format,
                "order-involution",
                None,
                &[("g", g.to_string()), ("φ(g)", y.to_string())],
                &checks,
            )
        }
        Bijection::Rs { element, group } => {
            let g = infer_bn(element, group)?;
            let pair = rs_correspondence(&g)?;
            let back = rs_inverse(&pair)?;
            let checks = vec![Eq::new("RS⁻¹(P, Q) = g", signed_window(&back), signed_window(&g))];
            emit(
                out,
                format,
                "rs",
                Some(json!({"P": pair.p, "Q": pair.q})),
                &[
                    ("g", signed_window(&g)),
                    ("P", format!("({}, {})", pair.p.zero, pair.p.one)),
                    ("Q", format!("({}, {})", pair.q.zero, pair.q.one)),
                ],
                &checks,
            )
        }
        Bijection::RsTranspose { element, group } => {
            let g = infer_bn(element, group)?;
            let y = rs_transpose_map(&g)?;
            let checks = vec![
                Eq::new("Neg(φ(g)) = Neg(g)", set(&neg_set(&y)), set(&neg_set(&g))),
                Eq::new(
                    "Des'(φ(g)) = Des(g)",
                    set(&des_set(&y, Order::Prime)?),
                    set(&des_set(&g, Order::Color)?),
                ),
                Eq::new(
                    "Des'(φ(g)⁻¹) = Des(g⁻¹)",
                    set(&des_set(&y.inverse(), Order::Prime)?),
                    set(&des_set(&g.inverse(), Order::Color)?),
                ),
            ];
            if format == Format::Table {
                writeln!(out, "{}", signed_window(&y))?;
            }
            emit(
                out,
                format,
                "rs-transpose",
                None,
                &[("g", signed_window(&g)), ("φ(g)", signed_window(&y))],
                &checks,
            )
        }
    }
}
