use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use troplectra::io::{format_matrix, matrix_from_json, matrix_to_json, parse_matrix, pretty_matrix, pretty_vector};
use troplectra::lab::{
    compare_eigenvalues, compare_eigenvectors, gershgorin_pd_bound, gram_experiment, random_gram_pd, random_tpd,
    MonomialMatrix, RealSymMatrix, ValuationReport,
};
use troplectra::spectral::{
    charpoly, charpoly_general, classify_eigenvector, eigvec_adjugate, eigvec_construct, eigvec_kleene, pd_class,
    smax_eigenvalues, sorted_diagonal, tmax_eigenvalues, uniqueness_and_strength,
};
use troplectra::{
    Error, Rational, Result, RootList, SMatrixQ, SPolyQ, SRootKind, SScalarQ, SpectralReport, TScalarQ,
};

#[derive(Parser)]
#[command(name = "troplectra", version, about = "Symmetrized tropical linear algebra and valuation experiments")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Print ⊖, ⊕, ° and 𝟘 instead of the ASCII forms.
    #[arg(long, global = true)]
    unicode: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// TPD / TPSD verdict with the first failing condition.
    Check { input: String },
    /// Characteristic polynomial.
    Charpoly {
        input: String,
        /// Always go through the k-th traces.
        #[arg(long)]
        general: bool,
    },
    /// Eigenvalues of a TPD matrix, or T_max eigenvalues of |A| with --tmax.
    Eig {
        input: String,
        #[arg(long)]
        tmax: bool,
    },
    /// Eigenvectors v^(k) from the adjugate and star formulas.
    Eigvec {
        input: String,
        /// Only this k (1-based).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Kleene star of γ^{-1} A (of A itself without --gamma).
    Star {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
    },
    /// Determinant, optionally with adjugate and permanent of |A|.
    Det {
        input: String,
        #[arg(long)]
        adj: bool,
        #[arg(long)]
        per: bool,
    },
    /// Roots of a polynomial given as tokens or in the pretty form.
    PolyRoots { input: String },
    /// Compare tropical predictions with classical spectra.
    Validate {
        /// Monomial family file or literal.
        input: Option<String>,
        #[arg(long, value_delimiter = ',', default_values_t = vec![10.0, 100.0])]
        t: Vec<f64>,
        /// Also compare eigenvectors.
        #[arg(long)]
        vectors: bool,
        /// Run the Gram pipeline on a random n×n matrix instead.
        #[arg(long, conflicts_with = "input")]
        gram: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Gershgorin-type containment for a family at one t, or a random Gram matrix.
    Gersh {
        input: Option<String>,
        #[arg(long, default_value_t = 10.0)]
        t: f64,
        #[arg(long, conflicts_with = "input")]
        gram: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded random matrices.
    Random {
        #[arg(value_enum)]
        kind: RandomKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
        hi: i64,
        #[arg(long, default_value_t = 1)]
        margin: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RandomKind {
    Tpd,
    Gram,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}

/// File contents when `arg` names a file, stdin for `-`, otherwise the
/// argument itself.
fn load(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::parse(format!("stdin: {e}")))?;
        return Ok(s);
    }
    if Path::new(arg).is_file() {
        return std::fs::read_to_string(arg).map_err(|e| Error::parse(format!("{arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn load_matrix(arg: &str) -> Result<SMatrixQ> {
    let text = load(arg)?;
    if text.trim_start().starts_with('{') {
        matrix_from_json(&text)
    } else {
        parse_matrix(&text)
    }
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("reports serialize"));
}

fn run(cli: &Cli) -> Result<()> {
    let (fmt, uni) = (cli.format, cli.unicode);
    match &cli.cmd {
        Cmd::Check { input } => {
            let class = pd_class(&load_matrix(input)?)?;
            if fmt == Format::Json {
                print_json(&class);
            } else {
                println!("{}", class.verdict);
                if let Some(w) = class.witness {
                    println!("witness: {w}");
                }
            }
        }
        Cmd::Charpoly { input, general } => {
            let a = load_matrix(input)?;
            let p = if *general { charpoly_general(&a)? } else { charpoly(&a)? };
            match fmt {
                Format::Json => print_json(&serde_json::json!({ "coeffs": p.coeffs(), "pretty": p.pretty(uni) })),
                Format::Csv => println!("{p}"),
                Format::Table => println!("{}", p.pretty(uni)),
            }
        }
        Cmd::Eig { input, tmax } => {
            let a = load_matrix(input)?;
            if *tmax {
                let roots = tmax_eigenvalues(&a.modulus())?;
                print_roots(fmt, &roots, |r| tscalar_pretty(r, uni));
            } else {
                let roots = smax_eigenvalues(&a)?;
                print_roots(fmt, &roots, |r| r.pretty(uni));
            }
        }
        Cmd::Eigvec { input, k } => eigvec(&load_matrix(input)?, *k, fmt, uni)?,
        Cmd::Star { input, gamma } => {
            let a = load_matrix(input)?;
            let scaled = match gamma {
                Some(g) => a.scale(SScalarQ::parse(g)?.inverse()?),
                None => a,
            };
            let star = scaled.kleene_star()?;
            match fmt {
                Format::Json => print_json(&matrix_to_json(&star)),
                Format::Csv => print!("{}", format_matrix(&star)),
                Format::Table => print!("{}", pretty_matrix(&star, uni)),
            }
        }
        Cmd::Det { input, adj, per } => {
            let a = load_matrix(input)?;
            let det = a.determinant()?;
            let adjugate = if *adj { Some(a.adjugate()?) } else { None };
            let permanent = if *per { Some(a.modulus().permanent()?) } else { None };
            if fmt == Format::Json {
                print_json(&serde_json::json!({
                    "det": det,
                    "adjugate": adjugate.as_ref().map(matrix_to_json),
                    "permanent": permanent.map(|p| p.to_string()),
                }));
                return Ok(());
            }
            println!("{}", det.pretty(uni));
            if let Some(p) = permanent {
                println!("per |A| = {}", tscalar_pretty(&p, uni));
            }
            if let Some(m) = adjugate {
                println!("adj:");
                print!("{}", pretty_matrix(&m, uni));
            }
        }
        Cmd::PolyRoots { input } => poly_roots(&SPolyQ::parse(&load(input)?)?, fmt, uni)?,
        Cmd::Validate { input, t, vectors, gram, seed } => match (input, gram) {
            (_, Some(n)) => {
                let t = t.first().copied().unwrap_or(10.0);
                let report = gram_experiment(*n, *seed, t)?;
                match fmt {
                    Format::Json => print_json(&report),
                    _ => {
                        eprintln!("verdict: {}", report.class.verdict);
                        println!("i,lambda,sv,gamma,rel_error");
                        for r in &report.rows {
                            println!("{},{:e},{:.6},{:.6},{:e}", r.i, r.lambda, r.sv, r.gamma, r.rel_error);
                        }
                    }
                }
            }
            (Some(path), None) => {
                let fam = MonomialMatrix::parse(&load(path)?)?;
                let report = if *vectors { compare_eigenvectors(&fam, t)? } else { compare_eigenvalues(&fam, t)? };
                print_validation(&report, fmt);
            }
            (None, None) => return Err(Error::BadParams("give a monomial family or --gram N".into())),
        },
        Cmd::Gersh { input, t, gram, seed } => {
            let b = match (input, gram) {
                (_, Some(n)) => random_gram_pd(*n, *seed)?,
                (Some(path), None) => MonomialMatrix::parse(&load(path)?)?.evaluate(*t)?,
                (None, None) => return Err(Error::BadParams("give a monomial family or --gram N".into())),
            };
            let r = gershgorin_pd_bound(&b)?;
            if fmt == Format::Json {
                print_json(&r);
                return Ok(());
            }
            println!("gamma {:.6}{}", r.gamma, if r.weak { " (weak: below 1)" } else { "" });
            println!("contained {}", r.contained);
            println!("center,radius");
            for ball in &r.balls {
                println!("{:e},{:e}", ball.center, ball.radius);
            }
            let eig: Vec<String> = r.eigenvalues.iter().map(|l| format!("{l:e}")).collect();
            println!("eigenvalues {}", eig.join(" "));
        }
        Cmd::Random { kind, n, seed, lo, hi, margin } => match kind {
            RandomKind::Tpd => {
                let a = random_tpd(*n, *seed, (*lo, *hi), Rational::from_integer(*margin))?;
                match fmt {
                    Format::Json => print_json(&matrix_to_json(&a)),
                    _ => print!("{}", format_matrix(&a)),
                }
            }
            RandomKind::Gram => print_real(&random_gram_pd(*n, *seed)?, fmt),
        },
    }
    Ok(())
}

fn tscalar_pretty(x: &TScalarQ, uni: bool) -> String {
    match x {
        TScalarQ::Bottom => if uni { "𝟘" } else { "z" }.to_string(),
        TScalarQ::Val(m) => SScalarQ::pos(*m).pretty(uni),
    }
}

fn print_roots<T: Copy + PartialEq + std::fmt::Display>(fmt: Format, roots: &RootList<T>, pretty: impl Fn(&T) -> String) {
    match fmt {
        Format::Json => print_json(
            &roots.roots.iter().map(|(r, m)| serde_json::json!({ "value": r.to_string(), "mult": m })).collect::<Vec<_>>(),
        ),
        Format::Csv => {
            println!("value,mult");
            for (r, m) in &roots.roots {
                println!("{r},{m}");
            }
        }
        Format::Table => {
            for (r, m) in &roots.roots {
                println!("{} (mult {m})", pretty(r));
            }
        }
    }
}

fn eigvec(a: &SMatrixQ, k: Option<usize>, fmt: Format, uni: bool) -> Result<()> {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=a.rows()).collect(),
    };
    if fmt == Format::Json {
        let mut report = SpectralReport::build(a)?;
        for &k in &ks {
            if k == 0 || k > a.rows() {
                return Err(Error::BadK { k, n: a.rows() });
            }
        }
        report.vectors.retain(|v| ks.contains(&v.k));
        print_json(&report);
        return Ok(());
    }
    let diag = sorted_diagonal(a);
    for k in ks {
        let v = eigvec_adjugate(a, k)?;
        let gamma = diag[k - 1].1;
        let class = classify_eigenvector(a, gamma, &v)?;
        println!("k = {k}  gamma = {}", gamma.pretty(uni));
        println!("  adjugate  {}", pretty_vector(&v, uni));
        match eigvec_kleene(a, k) {
            Ok(w) => {
                println!("  star      {}", pretty_vector(&w, uni));
                let u = uniqueness_and_strength(a, k)?;
                println!("  class {class}  unique {}  strong exists {}", u.unique_up_to_scalar, u.strong_exists);
                if class < troplectra::EigClass::Eigen {
                    match eigvec_construct(a, k) {
                        Ok(s) => println!("  signed    {}", pretty_vector(&s, uni)),
                        Err(e) => println!("  signed    none ({})", e.name()),
                    }
                }
            }
            Err(Error::NotSimple(_)) => println!("  class {class}  (eigenvalue not simple)"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn poly_roots(p: &SPolyQ, fmt: Format, uni: bool) -> Result<()> {
    let corners = p.modulus().tmax_roots()?;
    let factored = p.factor_smax().ok();
    let candidates: Vec<(SScalarQ, SRootKind)> =
        p.smax_root_candidates()?.into_iter().map(|r| (r, p.verify_smax_root(r))).collect();
    let kind = |k: SRootKind| match k {
        SRootKind::SVeeRoot => "signed-corner root",
        SRootKind::SRoot => "root",
        SRootKind::NotRoot => "not a root",
    };
    if fmt == Format::Json {
        print_json(&serde_json::json!({
            "poly": p.to_string(),
            "corner_roots": corners.roots.iter().map(|(r, m)| serde_json::json!({"value": r.to_string(), "mult": m})).collect::<Vec<_>>(),
            "factorization": factored.as_ref().map(|f| serde_json::json!({
                "roots": f.roots.roots.iter().map(|(r, m)| serde_json::json!({"value": r.to_string(), "mult": m})).collect::<Vec<_>>(),
                "unique": f.unique,
            })),
            "candidates": candidates.iter().map(|(r, k)| serde_json::json!({"value": r.to_string(), "kind": kind(*k)})).collect::<Vec<_>>(),
        }));
        return Ok(());
    }
    println!("P = {}", p.pretty(uni));
    let corner_text: Vec<String> =
        corners.roots.iter().map(|(r, m)| format!("{} (mult {m})", tscalar_pretty(r, uni))).collect();
    println!("corner roots of |P|: {}", corner_text.join(", "));
    match &factored {
        Some(f) => {
            let parts: Vec<String> = f.roots.expanded().iter().map(|r| r.pretty(uni)).collect();
            println!("signed roots: {}{}", parts.join(", "), if f.unique { "" } else { " (not unique)" });
        }
        None => println!("signed roots: no signed factorization"),
    }
    for (r, k) in candidates {
        println!("  {}  {}", r.pretty(uni), kind(k));
    }
    Ok(())
}

fn print_validation(report: &ValuationReport, fmt: Format) {
    match fmt {
        Format::Json => print_json(report),
        Format::Csv => {
            println!("k,t,gamma,sign,sv,residual");
            for r in &report.eigenvalues {
                println!("{},{},{},{},{:.6},{:.6}", r.k, r.t, r.gamma, r.sv.sign, r.sv.value, r.residual);
            }
            if !report.vectors.is_empty() {
                println!();
                println!("k,t,coord,predicted_sign,predicted,measured_sign,measured,sign_match,gap,ok");
                for r in &report.vectors {
                    let sm = r.sign_match.map_or("n/a".to_string(), |b| b.to_string());
                    println!(
                        "{},{},{},{},{},{},{:.6},{sm},{:.6},{}",
                        r.k, r.t, r.coord, r.predicted.sign, r.predicted.value, r.measured.sign, r.measured.value, r.gap, r.ok
                    );
                }
            }
        }
        Format::Table => {
            for &t in &report.t_values {
                println!("t = {t}");
                println!("  {:>3}  {:>8}  {:>10}  {:>9}", "k", "gamma", "sv(lambda)", "residual");
                for r in report.eigenvalues.iter().filter(|r| r.t == t) {
                    println!("  {:>3}  {:>8}  {:>10}  {:>9.2e}", r.k, r.gamma, r.sv.pretty(), r.residual);
                }
                let rows: Vec<_> = report.vectors.iter().filter(|r| r.t == t).collect();
                if rows.is_empty() {
                    continue;
                }
                let n = rows.iter().map(|r| r.k).max().unwrap_or(0);
                println!("  eigenvectors (column k, measured / predicted):");
                for i in 1..=n {
                    let cells: Vec<String> = (1..=n)
                        .map(|k| {
                            let r = rows.iter().find(|r| r.k == k && r.coord == i).expect("full grid");
                            format!("{:>11} / {:<9}", r.measured.pretty(), r.predicted.pretty())
                        })
                        .collect();
                    println!("  {}", cells.join("  "));
                }
            }
        }
    }
}

fn print_real(b: &RealSymMatrix, fmt: Format) {
    match fmt {
        Format::Json => print_json(&b.to_rows()),
        _ => {
            println!("{}", b.n());
            for row in b.to_rows() {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:e}")).collect();
                println!("{}", cells.join(" "));
            }
        }
    }
}
