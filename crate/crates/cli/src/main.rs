use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use foata_core::bijections::{psi_inverse_trace, psi_q_inverse_trace, psi_q_trace, psi_trace, PsiTrace};
use foata_core::canonical::{a_canonical, s_canonical};
use foata_core::covering::{f_presentation, f_q_presentation};
use foata_core::foata::{
    phi, phi_inverse, phi_trace, rtl_phi, rtl_phi_inverse, rtl_phi_trace, TraceRow, Word,
};
use foata_core::harness::{table, Filter, Group, Options, Request, Statistic, VerifyReport};
use foata_core::patterns::{enumerate_avoiders, pat_q_witness};
use foata_core::stats::{a_stats, q_stats, s_stats, PosSet};
use foata_core::{Error, Permutation};

#[derive(Parser)]
#[command(name = "foata", version, about = "Canonical presentations, Mahonian statistics and Foata-type bijections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// S-canonical and (for even permutations) A-canonical presentations.
    Canon {
        perm: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Statistics of a permutation; A-statistics are added for even input.
    Stats {
        perm: Vec<String>,
        /// Also report the q-statistics.
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Foata's second fundamental transformation of a word with distinct letters.
    Phi {
        word: Vec<String>,
        #[arg(long)]
        trace: bool,
    },
    PhiInverse { word: Vec<String> },
    /// Right-to-left Foata transformation.
    RtlPhi {
        perm: Vec<String>,
        #[arg(long)]
        trace: bool,
    },
    RtlPhiInverse { perm: Vec<String> },
    /// Covering maps: f on A_{n+1} (--a) or f_q on S_{n+q-1} (--q).
    Cover {
        #[arg(long, conflicts_with = "q", required_unless_present = "q")]
        a: bool,
        #[arg(long)]
        q: Option<usize>,
        perm: Vec<String>,
    },
    /// The bijection Psi on A_{n+1}.
    Psi {
        perm: Vec<String>,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// The bijection Psi_q on S_{n+q-1}.
    Psiq {
        #[arg(long)]
        q: usize,
        perm: Vec<String>,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Pat(q)-avoidance of one permutation, or all of Avoid_q(m).
    Avoid {
        #[arg(long)]
        q: usize,
        #[arg(long, conflicts_with = "perm")]
        enumerate: Option<usize>,
        perm: Vec<String>,
    },
    /// Run a theorem checker; the exit code is 0 iff every report passes.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// n of the theorem (for `lemmas`, the degree cap).
        #[arg(long)]
        n: usize,
        /// q of the theorem (for `lemmas`, the cap on q; default 3).
        #[arg(long)]
        q: Option<usize>,
        /// Sets are comma-separated, e.g. `--d1 1,3`; an empty string is the
        /// empty set. Omitted sets are swept over all admissible values.
        #[arg(long)]
        d1: Option<String>,
        #[arg(long)]
        d2: Option<String>,
        #[arg(long)]
        b1: Option<String>,
        #[arg(long)]
        b2: Option<String>,
        #[arg(long)]
        b: Option<String>,
        /// Allow degree 9.
        #[arg(long)]
        slow: bool,
        #[arg(long)]
        json: bool,
    },
    /// Distribution of a statistic over S_n or A_{n+1}.
    Table {
        #[arg(long)]
        group: String,
        /// One of ell, inv, maj, rmaj, des, del.
        #[arg(long)]
        stat: String,
        #[arg(long)]
        n: usize,
        /// Repeatable, e.g. `--filter des-inv-sub:1,2`.
        #[arg(long)]
        filter: Vec<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    AEq,
    Psi,
    PsiQ,
    Qst1,
    Qst2,
    Foata,
    Lemmas,
    Macmahon,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn perm_arg(tokens: &[String]) -> Result<Permutation, Error> {
    Permutation::parse(&tokens.join(" "))
}

fn word_arg(tokens: &[String]) -> Result<Word, Error> {
    let text = tokens.join(" ");
    let letters = text
        .trim_matches(|c| c == '[' || c == ']')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::MalformedToken(t.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Word::new(letters)
}

fn set_arg(text: &Option<String>) -> Result<Option<PosSet>, Error> {
    text.as_ref()
        .map(|s| {
            s.trim_matches(|c| c == '{' || c == '}')
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::MalformedToken(t.to_string())))
                .collect()
        })
        .transpose()
}

fn print_rows(rows: &[TraceRow]) {
    for (i, row) in rows.iter().enumerate() {
        println!("r'_{} = {row}", i + 1);
    }
}

fn print_psi(trace: &PsiTrace, show_trace: bool, as_json: bool) {
    if as_json {
        let value = if show_trace { json!(trace) } else { json!({ "output": trace.output }) };
        println!("{value}");
        return;
    }
    if show_trace {
        println!("input:               {}", trace.input);
        println!("presentation:        {}", trace.input_presentation);
        println!("f:                   {}", trace.f_image);
        let stage = if trace.inverse { "rtlPhi^-1" } else { "rtlPhi" };
        println!("{stage:<21}{}", trace.rtl_phi_image);
        println!("S-presentation:      {}", trace.s_presentation_of_image);
        println!("lifted:              {}", trace.lifted_presentation);
    }
    println!("{}", trace.output);
}

fn verify(
    theorem: Theorem,
    n: usize,
    q: Option<usize>,
    sets: [Option<PosSet>; 5],
    opts: &Options,
) -> Result<Vec<VerifyReport>, Error> {
    let [d1, d2, b1, b2, b] = sets;
    let need_q = || q.ok_or(Error::QOutOfRange { q: 0, degree: n });
    let request = match theorem {
        Theorem::AEq => Request::AEq { n, d1, d2 },
        Theorem::Psi => Request::Psi { n },
        Theorem::PsiQ => Request::PsiQ { n, q: need_q()? },
        Theorem::Qst1 => Request::Qst1 { n, q: need_q()?, b1, b2 },
        Theorem::Qst2 => Request::Qst2 { n, q: need_q()?, b },
        Theorem::Foata => Request::Foata { n },
        Theorem::Macmahon => Request::Macmahon { n },
        Theorem::Lemmas => Request::Lemmas { n_cap: n, q_cap: q.unwrap_or(3) },
    };
    request.run(opts)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Canon { perm, json } => {
            let w = perm_arg(&perm)?;
            let s = s_canonical(&w);
            let a = if w.is_even() && w.degree() >= 2 { Some(a_canonical(&w)?) } else { None };
            if json {
                println!("{}", json!({ "permutation": w, "s_canonical": s, "a_canonical": a }));
            } else {
                println!("S: {s}");
                if let Some(a) = a {
                    println!("A: {a}");
                }
            }
        }
        Command::Stats { perm, q, json } => {
            let w = perm_arg(&perm)?;
            let s = s_stats(&w);
            let a = if w.is_even() && w.degree() >= 2 { Some(a_stats(&w)?) } else { None };
            let qs = q.map(|q| q_stats(q, &w)).transpose()?;
            if json {
                println!("{}", json!({ "permutation": w, "s": s, "a": a, "q": qs }));
            } else {
                let set = |s: &PosSet| format!("{s:?}");
                println!("Des_S   {}", set(&s.des));
                println!("maj_S   {}", s.maj);
                println!("rmaj_S  {}", s.rmaj);
                println!("l_S     {}", s.ell);
                println!("Del_S   {}", set(&s.del_set));
                println!("ltrm    {}", set(&s.ltrm));
                if let Some(a) = a {
                    println!("Des_A   {}", set(&a.des));
                    println!("rmaj_A  {}", a.rmaj);
                    println!("l_A     {}", a.ell);
                    println!("Del_A   {}", set(&a.del_set));
                    println!("ltram   {}", set(&a.ltram));
                }
                if let Some(r) = qs {
                    println!("Des_q   {}", set(&r.des_q));
                    println!("rmaj_q  {}", r.rmaj_q);
                    println!("l_q     {}", r.ell_q);
                    println!("Del_q   {}", set(&r.del_q_set));
                    println!("ltrm_q  {}", set(&r.ltrm_q));
                }
            }
        }
        Command::Phi { word, trace } => {
            let r = word_arg(&word)?;
            if trace {
                print_rows(&phi_trace(&r)?);
            }
            println!("{}", phi(&r)?);
        }
        Command::PhiInverse { word } => println!("{}", phi_inverse(&word_arg(&word)?)?),
        Command::RtlPhi { perm, trace } => {
            let w = perm_arg(&perm)?;
            if trace {
                print_rows(&rtl_phi_trace(&w));
            }
            println!("{}", rtl_phi(&w));
        }
        Command::RtlPhiInverse { perm } => println!("{}", rtl_phi_inverse(&perm_arg(&perm)?)),
        Command::Cover { a, q, perm } => {
            let w = perm_arg(&perm)?;
            let image = if a {
                f_presentation(&a_canonical(&w)?)
            } else {
                f_q_presentation(q.expect("clap requires --a or --q"), &s_canonical(&w))?
            };
            println!("{}", image.expand());
            println!("{image}");
        }
        Command::Psi { perm, inverse, trace, json } => {
            let v = perm_arg(&perm)?;
            let t = if inverse { psi_inverse_trace(&v)? } else { psi_trace(&v)? };
            print_psi(&t, trace, json);
        }
        Command::Psiq { q, perm, inverse, trace, json } => {
            let v = perm_arg(&perm)?;
            let t = if inverse { psi_q_inverse_trace(q, &v)? } else { psi_q_trace(q, &v)? };
            print_psi(&t, trace, json);
        }
        Command::Avoid { q, enumerate, perm } => match enumerate {
            Some(m) => {
                for w in enumerate_avoiders(q, m)? {
                    println!("{w}");
                }
            }
            None => {
                let w = perm_arg(&perm)?;
                if q == 0 {
                    return Err(Error::QOutOfRange { q, degree: w.degree() });
                }
                match pat_q_witness(q, &w) {
                    None => println!("avoids"),
                    Some((pattern, positions)) => {
                        let values: Vec<String> = positions.iter().map(|&p| w.image(p).to_string()).collect();
                        println!("contains {pattern} at positions {positions:?} (values {})", values.join(","));
                    }
                }
            }
        },
        Command::Verify { theorem, n, q, d1, d2, b1, b2, b, slow, json } => {
            let sets = [set_arg(&d1)?, set_arg(&d2)?, set_arg(&b1)?, set_arg(&b2)?, set_arg(&b)?];
            let reports = verify(theorem, n, q, sets, &Options { slow })?;
            for report in &reports {
                if json {
                    println!("{}", serde_json::to_string(report).expect("reports serialize"));
                } else {
                    println!("{}", report.summary());
                }
            }
            return Ok(if reports.iter().all(VerifyReport::passed) { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Table { group, stat, n, filter, format, slow } => {
            let group: Group = group.parse()?;
            let stat: Statistic = stat.parse()?;
            let filters = filter.iter().map(|f| f.parse::<Filter>()).collect::<Result<Vec<_>, _>>()?;
            let poly = table(group, stat, n, &filters, &Options { slow })?;
            match format {
                Format::Csv => print!("{}", poly.to_csv()),
                Format::Json => println!("{}", serde_json::to_string(&poly).expect("polynomials serialize")),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
