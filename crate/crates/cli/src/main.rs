use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use bsl_core::bsclassic::{bs_is_trivial, bs_n_of_k, parse_bs_word, BSSpec};
use bsl_core::group::{are_conjugate, britton_reduce, is_trivial, normal_form, parse_word, GroupWord, WordMode};
use bsl_core::lattice::{EVec, GroupCtx};
use bsl_core::madic::{r_digits, MarkedGroupSpec, XiSpec};
use bsl_core::markedspace::{
    distance_bounds, isomorphic, oracle_for, recover_parameters, relator, shortest_distinguishing, RelatorKind,
    DEFAULT_ENUM_CAP,
};
use bsl_core::morphisms::{apply_automorphism, hom_check, wreath_image, AutSpec};

#[derive(Parser)]
#[command(name = "bsl", version, about = "Exact computation in limits of Baumslag-Solitar groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// First --count digits of xi
    Rdigits(Flags),
    /// Word problem for --word
    Wp(Flags),
    /// Normal form of --word
    Nf(Flags),
    /// Britton-reduced form of --word
    Reduce(Flags),
    /// Conjugacy of --word and --word2, with a witness g: g (word2) g^-1 = word
    Conj(Flags),
    /// Shortest word trivial in exactly one of (m, xi) and (m2, xi2)
    Dist(Flags),
    /// Distance bounds from the common digit prefix of xi and xi2
    Bounds(Flags),
    /// Isomorphism of (m, xi) and (m2, xi2)
    Iso(Flags),
    /// Recover |m| and --count digits from the word-problem oracle of (m, xi)
    Recover(Flags),
    /// Relator and certificate words
    Relator(Flags),
    /// Image of --word in the wreath product Z wr Z
    Wreath(Flags),
    /// Apply an automorphism or endomorphism to --word
    Aut(Flags),
    /// Word problem in the classical group BS(p, q)
    Bswp(Flags),
    /// N(k) and alpha(k) in BS(m, n)
    Nk(Flags),
    /// Truncated homomorphism check from (m, xi) to (m2, xi2)
    Hom(Flags),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Alphabet {
    Compact,
    Extended,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// [b, b_i] for --index i
    B,
    /// w(m, t)
    W,
    /// [a b^k a^-1, b]
    V,
    /// w(m, t) b w(-m, -t) b^-1
    WinE,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AutKind {
    J,
    /// a -> a e, with e from --e
    Phi,
    /// b -> b^k on the base group, with k from --k
    Theta,
    /// b -> b^d on words in a and b, with d from --k
    Embed,
}

#[derive(Args)]
struct Flags {
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i64>,
    #[arg(long)]
    xi: Option<String>,
    /// Second modulus; defaults to --m
    #[arg(long, allow_negative_numbers = true)]
    m2: Option<i64>,
    #[arg(long)]
    xi2: Option<String>,
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    word2: Option<String>,
    #[arg(long, value_enum, default_value_t = Alphabet::Compact)]
    alphabet: Alphabet,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    depth: Option<usize>,
    /// Longest word enumerated by dist
    #[arg(long)]
    max_len: Option<usize>,
    /// Digit budget per group: digits beyond it are reported as missing
    #[arg(long)]
    cap: Option<usize>,
    /// Permit --max-len above the default enumeration cap
    #[arg(long)]
    allow_long: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    #[arg(long)]
    index: Option<usize>,
    /// Comma-separated digits for relator words
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, value_enum)]
    aut: Option<AutKind>,
    /// Base element in e-token form, e.g. "e0^2 e3^-1"
    #[arg(long, allow_hyphen_values = true)]
    e: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    q: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long)]
    image_a: Option<String>,
    #[arg(long)]
    image_b: Option<String>,
}

enum Failure {
    Usage(String),
    Domain(bsl_core::Error),
}

impl From<bsl_core::Error> for Failure {
    fn from(e: bsl_core::Error) -> Self {
        Failure::Domain(e)
    }
}

type Out = Result<(String, Value), Failure>;

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, Failure> {
    v.clone().ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

fn num(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse().expect("decimal integer"))
}

fn show(w: &GroupWord) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.to_extended()
    }
}

impl Flags {
    fn mode(&self) -> WordMode {
        match self.alphabet {
            Alphabet::Compact => WordMode::Compact,
            Alphabet::Extended => WordMode::Extended,
        }
    }

    fn spec_from(&self, m: Option<i64>, xi: &Option<String>, mflag: &str, xflag: &str) -> Result<MarkedGroupSpec, Failure> {
        let m = need(&m, mflag)?;
        let xi: XiSpec = need(xi, xflag)?.parse()?;
        Ok(MarkedGroupSpec::new(m, xi)?)
    }

    fn spec(&self) -> Result<MarkedGroupSpec, Failure> {
        self.spec_from(self.m, &self.xi, "m", "xi")
    }

    fn spec2(&self) -> Result<MarkedGroupSpec, Failure> {
        self.spec_from(self.m2.or(self.m), &self.xi2, "m2", "xi2")
    }

    fn ctx_of(&self, spec: MarkedGroupSpec) -> GroupCtx {
        GroupCtx::with_budget(spec, self.cap)
    }

    fn ctx(&self) -> Result<GroupCtx, Failure> {
        Ok(self.ctx_of(self.spec()?))
    }

    fn word_in(&self, text: &Option<String>, flag: &str) -> Result<GroupWord, Failure> {
        Ok(parse_word(&need(text, flag)?, self.mode())?)
    }

    fn word(&self) -> Result<GroupWord, Failure> {
        self.word_in(&self.word, "word")
    }

    /// Words in the input alphabet when expressible there, extended otherwise.
    fn echo(&self, w: &GroupWord) -> String {
        match self.alphabet {
            Alphabet::Compact => w.to_compact().unwrap_or_else(|| show(w)),
            Alphabet::Extended => show(w),
        }
    }

    fn digits_t(&self) -> Result<Vec<i64>, Failure> {
        let t = need(&self.t, "t")?;
        if t.is_empty() {
            return Ok(Vec::new());
        }
        t.split(',')
            .map(|s| s.trim().parse::<i64>().map_err(|_| Failure::Usage(format!("--t: bad digit {s:?}"))))
            .collect()
    }
}

fn verdict(trivial: bool) -> (String, Value) {
    let text = if trivial { "trivial" } else { "nontrivial" };
    (text.into(), json!({ "trivial": trivial }))
}

fn run(cmd: &Cmd) -> Out {
    match cmd {
        Cmd::Rdigits(f) => {
            let count = f.count.unwrap_or(10);
            let spec = f.spec()?;
            let digits = match f.cap {
                Some(_) => f.ctx_of(spec).digits(count)?.to_vec(),
                None => r_digits(&spec, count)?,
            };
            let text = digits.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            Ok((text, json!({ "digits": digits })))
        }
        Cmd::Wp(f) => Ok(verdict(is_trivial(&f.ctx()?, &f.word()?)?)),
        Cmd::Nf(f) => {
            let ctx = f.ctx()?;
            let nf = normal_form(&ctx, &f.word()?)?;
            let text = show(&nf.form.to_word());
            let v = json!({ "normal_form": text, "sigma": nf.form.sigma(), "t_length": nf.form.t_length() });
            Ok((text, v))
        }
        Cmd::Reduce(f) => {
            let ctx = f.ctx()?;
            let red = britton_reduce(&ctx, &f.word()?)?;
            let text = show(&red.to_word());
            let v = json!({ "reduced": text, "sigma": red.sigma(), "t_length": red.t_length() });
            Ok((text, v))
        }
        Cmd::Conj(f) => {
            let ctx = f.ctx()?;
            let (v, w) = (f.word()?, f.word_in(&f.word2, "word2")?);
            Ok(match are_conjugate(&ctx, &v, &w)? {
                Some(g) => {
                    let g = show(&g);
                    (format!("conjugate via {g}"), json!({ "conjugate": true, "witness": g }))
                }
                None => ("not conjugate".into(), json!({ "conjugate": false, "witness": null })),
            })
        }
        Cmd::Dist(f) => {
            let max_len = f.max_len.unwrap_or(DEFAULT_ENUM_CAP);
            if max_len > DEFAULT_ENUM_CAP && !f.allow_long {
                return Err(Failure::Usage(format!(
                    "--max-len {max_len} exceeds {DEFAULT_ENUM_CAP}; pass --allow-long to enumerate further"
                )));
            }
            let (g1, g2) = (f.spec()?, f.spec2()?);
            let found = shortest_distinguishing(&g1, &g2, max_len)?;
            let bounds = distance_bounds(&g1, &g2).ok();
            let (nu, word) = match &found {
                Some(d) => (json!(d.len), json!(d.word.to_compact())),
                None => (Value::Null, Value::Null),
            };
            let mut text = match &found {
                Some(d) => format!("nu={} word={}", d.len, d.word.to_compact().unwrap_or_default()),
                None => format!("nu=none up to length {max_len}"),
            };
            if let Some(b) = bounds {
                text.push_str(&format!(" h={} lower=e^-{} upper=e^-{}", b.h, b.lower_exp, b.upper_exp));
            }
            let v = json!({
                "nu": nu,
                "word": word,
                "h": bounds.map(|b| b.h),
                "lower_exp": bounds.map(|b| b.lower_exp),
                "upper_exp": bounds.map(|b| b.upper_exp),
            });
            Ok((text, v))
        }
        Cmd::Bounds(f) => {
            let b = distance_bounds(&f.spec()?, &f.spec2()?)?;
            let text = format!("h={} lower=e^-{} upper=e^-{}", b.h, b.lower_exp, b.upper_exp);
            Ok((text, json!({ "h": b.h, "lower_exp": b.lower_exp, "upper_exp": b.upper_exp })))
        }
        Cmd::Iso(f) => {
            let iso = isomorphic(&f.spec()?, &f.spec2()?)?;
            let text = if iso { "isomorphic" } else { "not isomorphic" };
            Ok((text.into(), json!({ "isomorphic": iso })))
        }
        Cmd::Recover(f) => {
            let ctx = f.ctx()?;
            let (m, digits) = recover_parameters(oracle_for(&ctx), f.count.unwrap_or(6))?;
            let ds = digits.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            Ok((format!("m={m} digits={ds}"), json!({ "m": m, "digits": digits })))
        }
        Cmd::Relator(f) => {
            let w = match need(&f.kind, "kind")? {
                Kind::B => {
                    let ctx = f.ctx()?;
                    relator(&RelatorKind::B(need(&f.index, "index")?), Some(&ctx))?
                }
                Kind::W => relator(&RelatorKind::W { m: need(&f.m, "m")?, t: f.digits_t()? }, None)?,
                Kind::V => relator(&RelatorKind::V(need(&f.k, "k")?), None)?,
                Kind::WinE => relator(&RelatorKind::WinE { m: need(&f.m, "m")?, t: f.digits_t()? }, None)?,
            };
            let text = f.echo(&w);
            Ok((text.clone(), json!({ "word": text })))
        }
        Cmd::Wreath(f) => {
            let q = wreath_image(&f.ctx()?, &f.word()?)?;
            let coeffs: Vec<Value> = q.poly.coeffs().iter().map(num).collect();
            let v = json!({ "poly": { "offset": q.poly.offset(), "coeffs": coeffs }, "shift": q.shift });
            Ok((q.to_string(), v))
        }
        Cmd::Aut(f) => {
            let ctx = f.ctx()?;
            let spec = match need(&f.aut, "aut")? {
                AutKind::J => AutSpec::J,
                AutKind::Phi => AutSpec::PhiE(need(&f.e, "e")?.parse::<EVec>()?),
                AutKind::Theta => AutSpec::ThetaK(need(&f.k, "k")?),
                AutKind::Embed => {
                    let d = need(&f.k, "k")?;
                    let d = u64::try_from(d).map_err(|_| Failure::Usage("--k must be positive for embed".into()))?;
                    AutSpec::EmbedD(d)
                }
            };
            let w = apply_automorphism(&ctx, &spec, &f.word()?)?;
            let text = f.echo(&w);
            Ok((text.clone(), json!({ "word": text })))
        }
        Cmd::Bswp(f) => {
            let spec = BSSpec::new(need(&f.p, "p")?, need(&f.q, "q")?)?;
            let w = parse_bs_word(&need(&f.word, "word")?)?;
            Ok(verdict(bs_is_trivial(&spec, &w)))
        }
        Cmd::Nk(f) => {
            let k = need(&f.k, "k")?;
            let k = u32::try_from(k).map_err(|_| Failure::Usage("--k must be a natural number".into()))?;
            let (nk, alpha) = bs_n_of_k(need(&f.m, "m")?, need(&f.n, "n")?, k)?;
            Ok((format!("N={nk} alpha={alpha}"), json!({ "N": nk, "alpha": num(&alpha) })))
        }
        Cmd::Hom(f) => {
            let (src, dst) = (f.spec()?, f.spec2()?);
            let depth = f.depth.unwrap_or(5);
            let img_a = parse_word(f.image_a.as_deref().unwrap_or("a"), f.mode())?;
            let img_b = parse_word(f.image_b.as_deref().unwrap_or("b"), f.mode())?;
            let r = hom_check(&src, &dst, &img_a, &img_b, depth)?;
            let text = match r.failing_index {
                None => format!("pass: [b, b_i] maps to 1 for i = 1..{depth} (truncated check)"),
                Some(i) => format!("fail at i = {i} (truncated check)"),
            };
            let v = json!({ "passed": r.passed, "failing_index": r.failing_index, "depth": r.depth, "truncated": true });
            Ok((text, v))
        }
    }
}

fn json_flag(cmd: &Cmd) -> bool {
    match cmd {
        Cmd::Rdigits(f)
        | Cmd::Wp(f)
        | Cmd::Nf(f)
        | Cmd::Reduce(f)
        | Cmd::Conj(f)
        | Cmd::Dist(f)
        | Cmd::Bounds(f)
        | Cmd::Iso(f)
        | Cmd::Recover(f)
        | Cmd::Relator(f)
        | Cmd::Wreath(f)
        | Cmd::Aut(f)
        | Cmd::Bswp(f)
        | Cmd::Nk(f)
        | Cmd::Hom(f) => f.json,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok((text, value)) => {
            if json_flag(&cli.cmd) {
                println!("{value}");
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => Cli::command().error(ErrorKind::MissingRequiredArgument, msg).exit(),
        Err(Failure::Domain(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            // malformed flag values are usage errors
            if matches!(e, bsl_core::Error::Parse { .. }) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
