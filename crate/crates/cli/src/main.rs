use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use promsieve::charge::{charge_and_cocharge, depth_sequence, standard_subwords};
use promsieve::planepart::Shst;
use promsieve::promotion::{decompose, promote, promote_inverse, promote_pow};
use promsieve::qpoly::{kostka_foulkes, macmahon, modified_kf};
use promsieve::ribbon::count_ribbon_tableaux;
use promsieve::sieve::{find_shift, named_instance, InstanceParams, Report, Sieve, Verdict, INSTANCE_NAMES};
use promsieve::skewrsk::{matrix_to_biword, rsk, tableau_to_matrix, Biword, Sm};
use promsieve::tableaux::{enumerate_ssyt, enumerate_syt_ribbon};
use promsieve::{Composition, Partition, QPoly, SkewShape, Tableau, Word};

#[derive(Parser)]
#[command(name = "promsieve", version, about = "Promotion, charge and cyclic sieving on tableaux")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// CSV output (orbit tables and enumerations).
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads for parallel censuses (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the semistandard tableaux of a shape and content.
    Enumerate {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        content: Composition,
    },
    /// Apply promotion (or its inverse for negative powers) to a tableau.
    Promote {
        /// Rows separated by `/`, entries by `,`, `.` for inner-shape cells.
        #[arg(long)]
        tableau: Tableau,
        /// Alphabet size.
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
    },
    /// Promotion orbit sizes and order on a family.
    Orbits {
        #[arg(long, value_enum)]
        family: Family,
        #[command(flatten)]
        p: Params,
        #[arg(long)]
        shape: Option<SkewShape>,
        #[arg(long)]
        content: Option<Composition>,
        /// Ribbon row lengths, top row first.
        #[arg(long)]
        alpha: Option<Composition>,
    },
    /// Charge, cocharge, depths and standard subwords of a word.
    Charge {
        #[arg(long)]
        word: Word,
    },
    /// Kostka-Foulkes polynomial via charge.
    Kf {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        content: Composition,
        /// Cocharge version instead.
        #[arg(long)]
        modified: bool,
    },
    /// Generating function of plane partitions in an a x b x n box.
    Macmahon {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        n: usize,
    },
    /// Number of k-ribbon tableaux of a shape and content.
    RibbonCount {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        content: Composition,
        #[arg(long)]
        k: usize,
    },
    /// RSK of a biword, or of the biword of a tableau in SM(nu, n).
    Rsk {
        /// Top row of the biword.
        #[arg(long, requires = "bottom", conflicts_with = "tableau")]
        top: Option<Word>,
        #[arg(long)]
        bottom: Option<Word>,
        #[arg(long, requires_all = ["nu", "n"])]
        tableau: Option<Tableau>,
        #[arg(long)]
        nu: Option<Partition>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Cyclic sieving check on a named instance.
    Csp {
        #[arg(long)]
        instance: String,
        #[command(flatten)]
        p: Params,
    },
    /// Bicyclic sieving check on a named instance.
    Bicsp {
        #[arg(long)]
        instance: String,
        #[command(flatten)]
        p: Params,
    },
    /// Least shift E with q^E f sieving-admissible at n-th roots of unity.
    Shift {
        /// Polynomial such as `4+3q+4q^2`.
        #[arg(long)]
        poly: QPoly,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Stretched hook tableaux SHST(a, b, n).
    Shst,
    /// Stretched skew tableaux SM(nu, n).
    Sm,
    /// SSYT of --shape and --content, alphabet the content length.
    Ssyt,
    /// Standard tableaux of ribbon shape --alpha.
    Ribbon,
}

#[derive(Args, Default, Clone)]
struct Params {
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    nu: Option<Partition>,
    #[arg(long)]
    gamma: Option<Composition>,
    /// Rectangles as `WxH,WxH,...`.
    #[arg(long)]
    rects: Option<String>,
}

impl Params {
    fn to_instance(&self) -> Result<InstanceParams> {
        let rects = match &self.rects {
            None => None,
            Some(s) => Some(
                s.split(',')
                    .map(|r| {
                        let (w, h) = r.split_once('x').with_context(|| format!("bad rectangle `{r}`"))?;
                        Ok((w.trim().parse()?, h.trim().parse()?))
                    })
                    .collect::<Result<Vec<(usize, usize)>>>()?,
            ),
        };
        Ok(InstanceParams {
            a: self.a,
            b: self.b,
            n: self.n,
            m: self.m,
            k: self.k,
            d: self.d,
            nu: self.nu.clone(),
            gamma: self.gamma.clone(),
            rects,
        })
    }

    fn need(v: Option<usize>, name: &str) -> Result<usize> {
        v.with_context(|| format!("missing --{name}"))
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Format {
    Human,
    Json,
    Csv,
}

/// A successful run either passes or reports a verification failure.
enum Outcome {
    Pass,
    Fail,
}

struct Ctx {
    fmt: Format,
    out: io::StdoutLock<'static>,
}

impl Ctx {
    fn json(&mut self, v: &impl serde::Serialize) -> Result<()> {
        serde_json::to_writer(&mut self.out, v)?;
        writeln!(self.out)?;
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let fmt = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Human
    };
    let mut ctx = Ctx { fmt, out: io::stdout().lock() };
    match run(cli.cmd, &mut ctx) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command, ctx: &mut Ctx) -> Result<Outcome> {
    match cmd {
        Command::Enumerate { shape, content } => {
            let ts = enumerate_ssyt(&shape, &content);
            match ctx.fmt {
                Format::Json => {
                    for t in &ts {
                        ctx.json(t)?;
                    }
                }
                Format::Csv => {
                    writeln!(ctx.out, "index,tableau")?;
                    for (i, t) in ts.iter().enumerate() {
                        writeln!(ctx.out, "{i},{}", csv_field(&t.compact()))?;
                    }
                }
                Format::Human => {
                    for t in &ts {
                        writeln!(ctx.out, "{t}\n")?;
                    }
                    writeln!(ctx.out, "count: {}", ts.len())?;
                }
            }
        }
        Command::Promote { tableau, m, power } => {
            let t = if power >= 0 {
                promote_pow(&tableau, m, power as usize)?
            } else {
                let mut t = tableau.clone();
                for _ in 0..power.unsigned_abs() {
                    t = promote_inverse(&t, m)?;
                }
                t
            };
            match ctx.fmt {
                Format::Json => ctx.json(&t)?,
                Format::Csv => writeln!(ctx.out, "{}", csv_field(&t.compact()))?,
                Format::Human => writeln!(ctx.out, "{t}")?,
            }
        }
        Command::Orbits { family, p, shape, content, alpha } => {
            let (xs, m) = family_elements(family, &p, shape, content, alpha)?;
            eprintln!("{} elements, computing orbits", xs.len());
            let dec = decompose(&xs, |t| promote(t, m))?;
            match ctx.fmt {
                Format::Json => ctx.json(&json!({
                    "size": xs.len(),
                    "sizes": dec.sizes(),
                    "order": dec.order.to_string().parse::<serde_json::Number>()?,
                    "representatives": dec.orbits.iter().map(|o| o.representative().compact()).collect::<Vec<_>>(),
                }))?,
                Format::Csv => {
                    writeln!(ctx.out, "orbit_index,size,representative")?;
                    for (i, o) in dec.orbits.iter().enumerate() {
                        writeln!(ctx.out, "{i},{},{}", o.len(), csv_field(&o.representative().compact()))?;
                    }
                }
                Format::Human => {
                    writeln!(ctx.out, "sizes: {}; order: {}", join(&dec.sizes()), dec.order)?;
                }
            }
        }
        Command::Charge { word } => {
            let (ch, co) = charge_and_cocharge(&word)?;
            let subs: Vec<String> = standard_subwords(&word)?.iter().map(Word::to_string).collect();
            let content = word.content();
            let k = content.parts().first().copied().unwrap_or(0);
            let rectangular = !content.is_empty() && content.parts().iter().all(|&c| c == k);
            let depths = rectangular.then(|| depth_sequence(&word));
            match ctx.fmt {
                Format::Json => ctx.json(&json!({
                    "word": word.to_string(),
                    "charge": ch,
                    "cocharge": co,
                    "depths": depths,
                    "subwords": subs,
                }))?,
                _ => {
                    writeln!(ctx.out, "charge: {ch}")?;
                    writeln!(ctx.out, "cocharge: {co}")?;
                    if let Some(d) = depths {
                        writeln!(ctx.out, "depths: {}", join(d.depths()))?;
                    }
                    writeln!(ctx.out, "subwords: {}", subs.join(" "))?;
                }
            }
        }
        Command::Kf { shape, content, modified } => {
            let f: QPoly = if modified { modified_kf(&shape, &content)? } else { kostka_foulkes(&shape, &content)? };
            poly_out(ctx, &f)?;
        }
        Command::Macmahon { a, b, n } => {
            let f: QPoly = macmahon(a, b, n);
            poly_out(ctx, &f)?;
        }
        Command::RibbonCount { shape, content, k } => {
            if k == 0 {
                bail!("--k must be positive");
            }
            let c = count_ribbon_tableaux(&shape, &content, k);
            match ctx.fmt {
                Format::Json => ctx.json(&json!({ "count": c.to_string().parse::<serde_json::Number>()? }))?,
                _ => writeln!(ctx.out, "{c}")?,
            }
        }
        Command::Rsk { top, bottom, tableau, nu, n } => {
            let (w, matrix) = match (top, bottom, tableau) {
                (Some(t), Some(b), None) => (Biword::new(t.0, b.0)?, None),
                (None, None, Some(t)) => {
                    let sm = Sm::new(nu.context("missing --nu")?, n.context("missing --n")?);
                    let mat = tableau_to_matrix(&t, &sm)?;
                    (matrix_to_biword(&mat), Some(mat))
                }
                _ => bail!("give either --top and --bottom, or --tableau with --nu and --n"),
            };
            let (pt, qt) = rsk(&w);
            match ctx.fmt {
                Format::Json => ctx.json(&json!({ "matrix": matrix, "p": pt, "q": qt }))?,
                _ => {
                    if let Some(mat) = matrix {
                        writeln!(ctx.out, "matrix:\n{mat}")?;
                    }
                    writeln!(ctx.out, "P:\n{pt}\nQ:\n{qt}")?;
                }
            }
        }
        Command::Csp { instance, p } => return sieve_cmd(ctx, &instance, &p, false),
        Command::Bicsp { instance, p } => return sieve_cmd(ctx, &instance, &p, true),
        Command::Shift { poly, n } => {
            if n == 0 {
                bail!("--n must be positive");
            }
            let e = find_shift(&poly, n);
            match ctx.fmt {
                Format::Json => ctx.json(&json!({ "shift": e }))?,
                _ => match e {
                    Some(e) => writeln!(ctx.out, "{e}")?,
                    None => writeln!(ctx.out, "none")?,
                },
            }
        }
    }
    Ok(Outcome::Pass)
}

fn family_elements(
    family: Family,
    p: &Params,
    shape: Option<SkewShape>,
    content: Option<Composition>,
    alpha: Option<Composition>,
) -> Result<(Vec<Tableau>, u32)> {
    Ok(match family {
        Family::Shst => {
            let fam = Shst::new(Params::need(p.a, "a")?, Params::need(p.b, "b")?, Params::need(p.n, "n")?);
            (fam.enumerate(), fam.alphabet() as u32)
        }
        Family::Sm => {
            let sm = Sm::new(p.nu.clone().context("missing --nu")?, Params::need(p.n, "n")?);
            (sm.enumerate(), sm.m() as u32)
        }
        Family::Ssyt => {
            let content = content.context("missing --content")?;
            let shape = shape.context("missing --shape")?;
            let m = content.len() as u32;
            (enumerate_ssyt(&shape, &content), m)
        }
        Family::Ribbon => {
            let alpha = alpha.context("missing --alpha")?;
            let xs = enumerate_syt_ribbon(&alpha)?;
            (xs, alpha.size() as u32)
        }
    })
}

fn sieve_cmd(ctx: &mut Ctx, name: &str, p: &Params, bicyclic: bool) -> Result<Outcome> {
    let mut inst = named_instance(name, &p.to_instance()?).map_err(|e| match e {
        promsieve::Error::UnknownInstance(_) => anyhow::anyhow!("{e} (known: {})", INSTANCE_NAMES.join(", ")),
        e => anyhow::Error::new(e).context(format!("instance `{name}`")),
    })?;
    inst.checks.retain(|c| matches!(c.sieve, Sieve::Bicyclic { .. }) == bicyclic);
    if inst.checks.is_empty() {
        let kind = if bicyclic { "bicyclic" } else { "cyclic" };
        bail!("instance `{name}` has no {kind} check");
    }
    eprintln!("{name}: {} elements", inst.size);
    let rep = inst.run()?;
    match ctx.fmt {
        Format::Json => ctx.json(&rep)?,
        Format::Csv => {
            writeln!(ctx.out, "check,d,fixed,eval,ok")?;
            for (ci, c) in rep.checks.iter().enumerate() {
                match &c.report {
                    Report::Cyclic(r) => {
                        for row in &r.rows {
                            writeln!(
                                ctx.out,
                                "{ci},{},{},{},{}",
                                row.d,
                                row.fixed,
                                csv_field(&row.eval.to_string()),
                                row.ok
                            )?;
                        }
                    }
                    Report::Bicyclic(r) => {
                        for row in &r.rows {
                            let d = format!("{};{}", row.i, row.j);
                            writeln!(
                                ctx.out,
                                "{ci},{d},{},{},{}",
                                row.fixed,
                                csv_field(&row.eval.to_string()),
                                row.ok
                            )?;
                        }
                    }
                }
            }
        }
        Format::Human => writeln!(ctx.out, "{rep}")?,
    }
    Ok(if rep.verdict == Verdict::Pass { Outcome::Pass } else { Outcome::Fail })
}

fn poly_out(ctx: &mut Ctx, f: &QPoly) -> Result<()> {
    match ctx.fmt {
        Format::Json => ctx.json(&json!({ "poly": f.to_string(), "coefficients": f }))?,
        _ => writeln!(ctx.out, "{f}")?,
    }
    Ok(())
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
