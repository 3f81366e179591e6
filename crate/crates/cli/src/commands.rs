//! Argument definitions and command dispatch.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use stabcat_core::balance::{
    check_hereditary, check_serre_balance, check_weak_balance_sufficient, serre_torsion, BalanceReport,
    HereditaryConclusion, SearchMode, SearchOptions, Verdict,
};
use stabcat_core::catalog::builtin;
use stabcat_core::module::{hom_basis, SubmoduleLimits};
use stabcat_core::quiver::DEFAULT_LENGTH_CAP;
use stabcat_core::stable::{
    approximation, decide, ideal_basis, is_in_add, loop_object, suspension_object, verify, ApproximationSide,
    Decision, StableVerdict, Subcategory,
};
use stabcat_core::{Field, Matrix, Morphism, Representation};

use crate::encode::{decode_morphism, decode_verdict, decode_witness, encode_certificate, encode_morphism, encode_witness};
use crate::encode::{CertificateJson, MorphismJson, VerdictJson, WitnessJson};
use crate::error::{CliError, Result};
use crate::search::parallel_check_balance;
use crate::workspace::{module_doc, LoadOptions, Workspace};

#[derive(Parser, Debug)]
#[command(name = "stabcat", version, about = "Exact computations in stable categories of quiver representations")]
pub struct Cli {
    /// Workspace JSON file, or `builtin:<name>` for a built-in scenario.
    #[arg(long, global = true)]
    pub workspace: Option<String>,
    /// Prime for the ground field; overrides the workspace's.
    #[arg(long = "field-p", global = true)]
    pub field_p: Option<u32>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximum number of candidates (searches) or coefficient vectors (enumerations).
    #[arg(long, global = true, default_value_t = 10_000)]
    pub budget: usize,
    /// Longest nonzero path allowed before an algebra counts as infinite-dimensional.
    #[arg(long = "len-cap", global = true, default_value_t = DEFAULT_LENGTH_CAP)]
    pub len_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Precover,
    Preenvelope,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Balance,
    Weak,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate the workspace and summarize it.
    Check,
    /// A basis of Hom(from, to).
    Hom {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Dimension of Hom(from, to) modulo maps factoring through T.
    StableHom {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long = "T")]
        t: Option<String>,
    },
    /// One decision procedure with its certificate.
    Decide {
        /// is-stable-mono, is-stable-epi, is-strong-mono, is-strong-epi, is-iso, is-stable-zero or in-add.
        decision: String,
        #[arg(long)]
        morphism: Option<String>,
        /// The object for in-add.
        #[arg(long)]
        module: Option<String>,
        #[arg(long = "T")]
        t: Option<String>,
        /// Exit with status 1 when the answer differs.
        #[arg(long)]
        expect: Option<bool>,
    },
    /// Canonical right or left approximation by T.
    Approx {
        #[arg(value_enum)]
        side: Side,
        #[arg(long)]
        module: String,
        #[arg(long = "T")]
        t: Option<String>,
    },
    /// Kernel of the canonical precover.
    Omega {
        #[arg(long)]
        module: String,
        #[arg(long = "T")]
        t: Option<String>,
    },
    /// Cokernel of the canonical preenvelope.
    Sigma {
        #[arg(long)]
        module: String,
        #[arg(long = "T")]
        t: Option<String>,
    },
    /// Torsion sequences and balance for a Serre class.
    Serre {
        #[command(subcommand)]
        op: SerreOp,
    },
    /// Per-summand restriction test for T built from projectives.
    WeakBalance {
        #[arg(long = "T")]
        t: Option<String>,
    },
    /// Certified counterexample search over a corpus of modules.
    Balance {
        #[arg(long = "T")]
        t: Option<String>,
        /// `all` or a comma-separated list of module names.
        #[arg(long, default_value = "all")]
        corpus: String,
        #[arg(long, value_enum, default_value_t = Mode::Balance)]
        mode: Mode,
    },
    /// Submodule closure of the left perpendicular class of T.
    Hereditary {
        #[arg(long = "T")]
        t: Option<String>,
        #[arg(long, default_value = "all")]
        corpus: String,
        /// Largest total dimension whose submodules are enumerated.
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        /// Enumerate submodules over fields larger than F_2.
        #[arg(long)]
        any_field: bool,
    },
    /// Evaluate the known facts of a built-in scenario.
    Example {
        /// a3, six_vertex, a2_serre or tn(N).
        name: String,
        /// Print the scenario as a workspace document instead.
        #[arg(long)]
        export: bool,
    },
    /// Re-check every certificate in a JSON report against the workspace.
    Verify { report: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum SerreOp {
    /// The sequence t(X) -> X -> X/t(X).
    Torsion {
        #[arg(long)]
        module: String,
        #[arg(long)]
        serre: Option<String>,
    },
    /// Splitting test over a corpus.
    Balance {
        #[arg(long)]
        serre: Option<String>,
        #[arg(long, default_value = "all")]
        corpus: String,
    },
}

/// A finished command: its JSON report, a text rendering and the exit
/// status.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub exit_code: i32,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
                s.push('\n');
                s
            }
        }
    }
}

struct Builder {
    fields: Map<String, Value>,
    lines: Vec<String>,
    exit_code: i32,
}

impl Builder {
    fn new(verdict: Value, route: &str) -> Builder {
        let mut fields = Map::new();
        fields.insert("verdict".into(), verdict);
        fields.insert("route".into(), Value::String(route.to_string()));
        Builder { fields, lines: Vec::new(), exit_code: 0 }
    }

    fn set(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), v.into());
        self
    }

    fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }
}

fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| format!("[{}]", m.row(r).iter().map(u32::to_string).collect::<Vec<_>>().join(" ")))
        .collect();
    format!("[{}]", rows.join(" "))
}

fn dims_text(m: &Representation) -> String {
    let d: Vec<String> = m.dims().iter().map(usize::to_string).collect();
    format!("({})", d.join(","))
}

fn morphism_text(f: &Morphism) -> String {
    let q = f.algebra().quiver();
    let parts: Vec<String> = f
        .maps()
        .iter()
        .enumerate()
        .filter(|(_, m)| m.rows() * m.cols() > 0)
        .map(|(v, m)| format!("{}: {}", q.vertex_label(v), matrix_text(m)))
        .collect();
    format!("{} -> {} {{{}}}", dims_text(f.source()), dims_text(f.target()), parts.join(", "))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report parts serialize")
}

/// Loads the workspace named by `--workspace`.
pub fn load_workspace(cli: &Cli) -> Result<Workspace> {
    let spec = cli
        .workspace
        .as_deref()
        .ok_or_else(|| CliError::Usage("this command needs --workspace <file|builtin:name>".into()))?;
    let options = LoadOptions { field: cli.field_p, length_cap: cli.len_cap };
    if let Some(name) = spec.strip_prefix("builtin:") {
        let field = Field::new(cli.field_p.unwrap_or(Field::DEFAULT_PRIME)).map_err(|e| CliError::validation("field", e))?;
        let sc = builtin(name, field)?;
        return Workspace::from_document(&Workspace::from_scenario(&sc).to_document(), &options);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| CliError::Io { path: spec.to_string(), message: e.to_string() })?;
    Workspace::parse(&text, &options)
}

/// Runs one command and assembles its report.
pub fn run(cli: &Cli) -> Result<Report> {
    let start = Instant::now();
    let (name, mut b, field) = match &cli.command {
        Command::Example { name, export } => {
            let p = cli.field_p.unwrap_or(Field::DEFAULT_PRIME);
            let field = Field::new(p).map_err(|e| CliError::validation("field", e))?;
            let sc = builtin(name, field)?;
            if *export {
                let ws = Workspace::from_scenario(&sc);
                let json = to_value(&ws.to_document());
                let text = format!("{}\n", ws.to_json());
                return Ok(Report { json, text, exit_code: 0 });
            }
            (format!("example {name}"), example(&sc)?, field)
        }
        cmd => {
            let ws = load_workspace(cli)?;
            let (name, b) = dispatch(cli, cmd, &ws)?;
            (name, b, ws.field())
        }
    };

    let mut fields = Map::new();
    fields.insert("command".into(), Value::String(name.clone()));
    fields.insert("field".into(), json!({ "p": field.prime() }));
    fields.insert("seed".into(), json!(cli.seed));
    fields.append(&mut b.fields);
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    fields.insert("timing_ms".into(), json!(elapsed));

    let mut text = format!("{name}: {}\n", verdict_text(&fields["verdict"]));
    if let Some(Value::String(route)) = fields.get("route") {
        text.push_str(&format!("  route: {route}\n"));
    }
    for l in &b.lines {
        text.push_str(&format!("  {l}\n"));
    }
    text.push_str(&format!("  field F_{}, seed {}, {elapsed:.1} ms\n", field.prime(), cli.seed));
    Ok(Report { json: Value::Object(fields), text, exit_code: b.exit_code })
}

fn verdict_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn dispatch(cli: &Cli, cmd: &Command, ws: &Workspace) -> Result<(String, Builder)> {
    Ok(match cmd {
        Command::Check => ("check".into(), check(ws)?),
        Command::Hom { from, to } => ("hom".into(), hom(ws, from, to)?),
        Command::StableHom { from, to, t } => ("stable-hom".into(), stable_hom(ws, from, to, t.as_deref())?),
        Command::Decide { decision, morphism, module, t, expect } => {
            let b = decide_cmd(ws, decision, morphism.as_deref(), module.as_deref(), t.as_deref(), *expect)?;
            (format!("decide {decision}"), b)
        }
        Command::Approx { side, module, t } => {
            let side = match side {
                Side::Precover => ApproximationSide::Precover,
                Side::Preenvelope => ApproximationSide::Preenvelope,
            };
            let name = match side {
                ApproximationSide::Precover => "approx precover",
                ApproximationSide::Preenvelope => "approx preenvelope",
            };
            (name.into(), approx(ws, side, module, t.as_deref())?)
        }
        Command::Omega { module, t } => ("omega".into(), shift(ws, module, t.as_deref(), true)?),
        Command::Sigma { module, t } => ("sigma".into(), shift(ws, module, t.as_deref(), false)?),
        Command::Serre { op: SerreOp::Torsion { module, serre } } => {
            ("serre torsion".into(), torsion(ws, module, serre.as_deref())?)
        }
        Command::Serre { op: SerreOp::Balance { serre, corpus } } => {
            ("serre balance".into(), serre_balance(ws, serre.as_deref(), corpus)?)
        }
        Command::WeakBalance { t } => ("weak-balance".into(), weak_balance(ws, t.as_deref())?),
        Command::Balance { t, corpus, mode } => ("balance".into(), balance(cli, ws, t.as_deref(), corpus, *mode)?),
        Command::Hereditary { t, corpus, max_dim, any_field } => {
            let limits = SubmoduleLimits { max_total_dim: *max_dim, allow_any_field: *any_field };
            ("hereditary".into(), hereditary(ws, t.as_deref(), corpus, &limits)?)
        }
        Command::Verify { report } => ("verify".into(), verify_report(ws, report)?),
        Command::Example { .. } => unreachable!("handled before loading a workspace"),
    })
}

fn check(ws: &Workspace) -> Result<Builder> {
    let q = ws.algebra.quiver();
    let mut b = Builder::new(json!("valid"), "every entity validated on load");
    b.set("vertices", q.vertex_count())
        .set("arrows", q.arrows().len())
        .set("relations", ws.algebra.relations().len())
        .set("algebra_dim", ws.algebra.dim());
    let modules: Vec<Value> = ws.modules.iter().map(|(n, m)| json!({ "name": n, "dims": m.dims() })).collect();
    b.set("modules", modules)
        .set("morphisms", ws.morphisms.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>())
        .set("subcategories", ws.subcategories.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>())
        .set("serre", ws.serre.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>());
    b.line(format!(
        "{} vertices, {} arrows, {} relations, algebra of dimension {}",
        q.vertex_count(),
        q.arrows().len(),
        ws.algebra.relations().len(),
        ws.algebra.dim()
    ));
    for (n, m) in &ws.modules {
        b.line(format!("module {n}: dims {}", dims_text(m)));
    }
    for (n, f) in &ws.morphisms {
        b.line(format!("morphism {n}: {}", morphism_text(f)));
    }
    for (n, gens) in &ws.subcategories {
        b.line(format!("subcategory {n} = add({})", gens.join(", ")));
    }
    for (n, vs) in &ws.serre {
        let labels: Vec<&str> = vs.iter().map(|&v| q.vertex_label(v)).collect();
        b.line(format!("Serre class {n} supported on {{{}}}", labels.join(", ")));
    }
    Ok(b)
}

fn hom(ws: &Workspace, from: &str, to: &str) -> Result<Builder> {
    let h = hom_basis(ws.module(from)?, ws.module(to)?)?;
    let mut b = Builder::new(json!(h.dim()), "kernel of the intertwining equations");
    b.set("from", from).set("to", to).set("dim", h.dim());
    b.set("basis", h.basis().iter().map(|f| to_value(&encode_morphism(f))).collect::<Vec<_>>());
    b.line(format!("dim Hom({from}, {to}) = {}", h.dim()));
    for (i, f) in h.basis().iter().enumerate() {
        b.line(format!("basis {i}: {}", morphism_text(f)));
    }
    Ok(b)
}

fn stable_hom(ws: &Workspace, from: &str, to: &str, t: Option<&str>) -> Result<Builder> {
    let ctx = ws.context(t)?;
    let (x, y) = (ws.module(from)?, ws.module(to)?);
    let h = hom_basis(x, y)?.dim();
    let ideal = ideal_basis(&ctx, x, y)?.dim();
    let mut b = Builder::new(json!(h - ideal), "dim Hom minus the dimension of the T-factoring ideal");
    b.set("from", from)
        .set("to", to)
        .set("subcategory", ws.subcategory_name(t)?)
        .set("hom_dim", h)
        .set("ideal_dim", ideal)
        .set("dim", h - ideal);
    b.line(format!("dim Hom({from}, {to}) = {h}, ideal {ideal}, stable {}", h - ideal));
    Ok(b)
}

fn verdict_fields(b: &mut Builder, v: &StableVerdict, subject: &Morphism) {
    b.set("answer", v.answer)
        .set("cross_check", v.cross_check.map_or(Value::Null, |c| json!(c)))
        .set("certificate", to_value(&encode_certificate(&v.certificate)))
        .set("subject", to_value(&encode_morphism(subject)));
}

fn decide_cmd(
    ws: &Workspace,
    decision: &str,
    morphism: Option<&str>,
    module: Option<&str>,
    t: Option<&str>,
    expect: Option<bool>,
) -> Result<Builder> {
    let d = Decision::from_name(decision).ok_or_else(|| {
        let names: Vec<&str> = Decision::ALL.iter().map(|d| d.name()).collect();
        CliError::Usage(format!("unknown decision `{decision}`; expected one of {}", names.join(", ")))
    })?;
    let ctx = ws.context(t)?;
    let (v, subject, label) = if d == Decision::InAdd {
        let name = module.ok_or_else(|| CliError::Usage("in-add needs --module".into()))?;
        let m = ws.module(name)?;
        (is_in_add(&ctx, m)?, Morphism::identity(m), name)
    } else {
        let name = morphism.ok_or_else(|| CliError::Usage(format!("{decision} needs --morphism")))?;
        let f = ws.morphism(name)?;
        (decide(&ctx, d, f)?, f.clone(), name)
    };
    let mut b = Builder::new(json!(v.answer), v.route);
    b.set("decision", d.name()).set("subcategory", ws.subcategory_name(t)?);
    if d == Decision::InAdd {
        b.set("module", label);
    } else {
        b.set("morphism", label);
    }
    verdict_fields(&mut b, &v, &subject);
    b.line(format!("{} {label}: {}", d.name(), v.answer));
    if let Some(c) = v.cross_check {
        b.line(format!("cross-check: {c}"));
    }
    b.line(format!("certificate: {}", certificate_text(&v)));
    if let Some(want) = expect {
        b.set("expected", want);
        if want != v.answer {
            b.exit_code = 1;
            b.line(format!("expected {want}"));
        }
    }
    Ok(b)
}

fn certificate_text(v: &StableVerdict) -> String {
    use stabcat_core::stable::Certificate as C;
    match &v.certificate {
        C::Factorization { first, .. } => format!("factors through an object of dims {}", dims_text(first.target())),
        C::NoFactorization { hom_dim, ideal_dim } => format!("outside the ideal (dim {ideal_dim} of {hom_dim})"),
        C::Section { .. } => "the precover has a section".into(),
        C::NoSection { .. } => "the precover has no section".into(),
        C::Square { square, inner, .. } => {
            format!("square with corner {}; inner {}: {}", dims_text(&square.corner), inner.decision.name(), inner.answer)
        }
        C::Inverse { .. } => "two-sided inverse modulo the ideal".into(),
        C::NoInverse { side } => format!("no {side:?} inverse modulo the ideal").to_lowercase(),
    }
}

fn approx(ws: &Workspace, side: ApproximationSide, module: &str, t: Option<&str>) -> Result<Builder> {
    let ctx = ws.context(t)?;
    let f = approximation(&ctx, ws.module(module)?, side)?;
    let route = match side {
        ApproximationSide::Precover => "sum of a basis of Hom(T_i, M) over the generators",
        ApproximationSide::Preenvelope => "sum of a basis of Hom(M, T_i) over the generators",
    };
    let mut b = Builder::new(to_value(&module_doc(match side {
        ApproximationSide::Precover => f.source(),
        ApproximationSide::Preenvelope => f.target(),
    })), route);
    b.set("module", module).set("subcategory", ws.subcategory_name(t)?).set("morphism", to_value(&encode_morphism(&f)));
    b.line(morphism_text(&f));
    Ok(b)
}

fn shift(ws: &Workspace, module: &str, t: Option<&str>, omega: bool) -> Result<Builder> {
    let ctx = ws.context(t)?;
    let m = ws.module(module)?;
    let (obj, route) = if omega {
        (loop_object(&ctx, m)?, "kernel of the canonical precover")
    } else {
        (suspension_object(&ctx, m)?, "cokernel of the canonical preenvelope")
    };
    let mut b = Builder::new(to_value(&module_doc(&obj)), route);
    b.set("module", module).set("subcategory", ws.subcategory_name(t)?).set("is_zero", obj.is_zero());
    b.line(format!("{}({module}) has dims {}", if omega { "omega" } else { "sigma" }, dims_text(&obj)));
    Ok(b)
}

fn torsion(ws: &Workspace, module: &str, serre: Option<&str>) -> Result<Builder> {
    let s = ws.serre_class(serre)?;
    let seq = serre_torsion(ws.module(module)?, &s)?;
    let mut b = Builder::new(to_value(&module_doc(seq.mono.source())), "largest submodule supported on the class");
    b.set("module", module)
        .set("serre", ws.serre_name(serre)?)
        .set("mono", to_value(&encode_morphism(&seq.mono)))
        .set("epi", to_value(&encode_morphism(&seq.epi)));
    b.line(format!(
        "t({module}) has dims {}, quotient {}",
        dims_text(seq.mono.source()),
        dims_text(seq.epi.target())
    ));
    Ok(b)
}

fn balance_fields(b: &mut Builder, r: &BalanceReport) {
    b.set("witness", r.witness.as_ref().map_or(Value::Null, |w| to_value(&encode_witness(w))));
    if let Some(s) = &r.stats {
        b.set(
            "stats",
            json!({
                "evaluated": s.evaluated,
                "hom_basis": s.hom_basis,
                "projections": s.projections,
                "extensions": s.extensions,
                "combinations": s.combinations,
                "budget": s.budget,
                "budget_exhausted": s.budget_exhausted,
            }),
        );
        b.line(format!(
            "evaluated {} candidates (hom basis {}, projections {}, extensions {}, combinations {})",
            s.evaluated, s.hom_basis, s.projections, s.extensions, s.combinations
        ));
        if s.budget_exhausted && r.verdict == Verdict::Undetermined {
            b.exit_code = 3;
            b.line(format!("budget of {} candidates exhausted", s.budget));
        }
    }
    b.set("log", r.log.clone());
    if let Some(w) = &r.witness {
        b.line(format!("witness ({}): {}", w.origin, morphism_text(&w.morphism)));
        for v in &w.verdicts {
            b.line(format!("  {}: {}", v.decision.name(), v.answer));
        }
    }
    for l in &r.log {
        b.line(l.clone());
    }
}

fn serre_balance(ws: &Workspace, serre: Option<&str>, corpus: &str) -> Result<Builder> {
    let s = ws.serre_class(serre)?;
    let r = check_serre_balance(&s, &ws.corpus(corpus)?)?;
    let mut b = Builder::new(json!(r.verdict.name()), r.route);
    b.set("serre", ws.serre_name(serre)?);
    balance_fields(&mut b, &r);
    Ok(b)
}

fn weak_balance(ws: &Workspace, t: Option<&str>) -> Result<Builder> {
    let ctx = ws.context(t)?;
    let r = check_weak_balance_sufficient(&ctx)?;
    let verdict = match r.weakly_balanced {
        Some(true) => "weakly_balanced",
        Some(false) => Verdict::NotWeaklyBalanced.name(),
        None => Verdict::Undetermined.name(),
    };
    let name = ws.subcategory_name(t)?;
    let gen_names = &ws.subcategories.iter().find(|(n, _)| n == name).expect("resolved").1;
    let q = ws.algebra.quiver();
    let mut b = Builder::new(json!(verdict), r.route);
    b.set("subcategory", name);
    let mut gens = Vec::new();
    for g in &r.generators {
        let mut summands = Vec::new();
        for s in &g.summands {
            let label = q.vertex_label(s.vertex);
            summands.push(json!({
                "vertex": label,
                "envelope": module_doc(&s.envelope.object),
                "envelope_projective": s.envelope_projective,
                "passes": s.passes(),
                "restriction": s.restriction.as_ref().map(|(j, m)| json!({
                    "generator": gen_names[*j],
                    "morphism": encode_morphism(m),
                })),
            }));
            let detail = match &s.restriction {
                Some((j, _)) => format!("nonzero restriction into {}", gen_names[*j]),
                None => "no nonzero restriction".into(),
            };
            b.line(format!(
                "{}: summand P({label}), envelope {}{}, {detail}",
                gen_names[g.index],
                dims_text(&s.envelope.object),
                if s.envelope_projective { " projective" } else { "" }
            ));
        }
        gens.push(json!({ "generator": gen_names[g.index], "passes": g.passes(), "summands": summands }));
    }
    b.set("generators", gens);
    b.set("witness", r.witness.as_ref().map_or(Value::Null, |w| to_value(&encode_witness(w))));
    if let Some(w) = &r.witness {
        b.line(format!("witness ({}): {}", w.origin, morphism_text(&w.morphism)));
    }
    Ok(b)
}

fn balance(cli: &Cli, ws: &Workspace, t: Option<&str>, corpus: &str, mode: Mode) -> Result<Builder> {
    let ctx = ws.context(t)?;
    let mode = match mode {
        Mode::Balance => SearchMode::Balance,
        Mode::Weak => SearchMode::WeakBalance,
    };
    let options = SearchOptions { mode, budget: cli.budget, seed: cli.seed, ..SearchOptions::default() };
    let r = parallel_check_balance(&ctx, &ws.corpus(corpus)?, &options)?;
    let mut b = Builder::new(json!(r.verdict.name()), r.route);
    b.set("subcategory", ws.subcategory_name(t)?).set("mode", mode.name());
    balance_fields(&mut b, &r);
    Ok(b)
}

fn hereditary(ws: &Workspace, t: Option<&str>, corpus: &str, limits: &SubmoduleLimits) -> Result<Builder> {
    let ctx = ws.context(t)?;
    let name = ws.subcategory_name(t)?;
    let gen_names = &ws.subcategories.iter().find(|(n, _)| n == name).expect("resolved").1;
    let r = check_hereditary(&ctx, &ws.corpus(corpus)?, limits)?;
    let (verdict, route) = match &r.conclusion {
        HereditaryConclusion::HypothesisFailed { .. } => {
            (Verdict::Undetermined, "a submodule of a generator is not projective")
        }
        HereditaryConclusion::NotBalanced { .. } => {
            (Verdict::NotBalanced, "a perpendicular module has a submodule mapping nonzero into T")
        }
        HereditaryConclusion::ClosureHoldsOnCorpus => {
            (Verdict::BalancedEvidence, "the perpendicular class is closed under submodules on the corpus")
        }
    };
    let mut b = Builder::new(json!(verdict.name()), route);
    b.set("subcategory", name);
    let hyp: Vec<Value> = r
        .hypothesis
        .iter()
        .map(|h| {
            json!({
                "generator": gen_names[h.generator],
                "submodules": h.submodules,
                "non_projective": h.non_projective.as_ref().map(encode_morphism),
            })
        })
        .collect();
    let closure: Vec<Value> = r
        .closure
        .iter()
        .map(|c| {
            json!({
                "module": c.module,
                "in_perp": c.in_perp,
                "submodules": c.submodules,
                "escape": c.escape.as_ref().map(encode_morphism),
            })
        })
        .collect();
    b.set("hypothesis", hyp).set("closure", closure);
    for h in &r.hypothesis {
        b.line(format!(
            "{}: {} submodules, {}",
            gen_names[h.generator],
            h.submodules,
            if h.non_projective.is_some() { "one is not projective" } else { "all projective" }
        ));
    }
    for c in &r.closure {
        let state = match (c.in_perp, &c.escape) {
            (false, _) => "not in the perpendicular class".to_string(),
            (true, None) => format!("closed ({} submodules)", c.submodules),
            (true, Some(e)) => format!("submodule {} maps nonzero into T", dims_text(e.source())),
        };
        b.line(format!("{}: {state}", c.module));
    }
    Ok(b)
}

fn example(sc: &stabcat_core::catalog::Scenario) -> Result<Builder> {
    let results = sc.evaluate()?;
    let failed = results.iter().filter(|(_, ok)| !ok).count();
    let verdict = if failed == 0 { "all facts hold" } else { "some facts fail" };
    let mut b = Builder::new(json!(verdict), "built-in scenario facts");
    b.set("scenario", sc.name.clone());
    b.set(
        "facts",
        results.iter().map(|(f, ok)| json!({ "fact": f.description, "holds": ok })).collect::<Vec<_>>(),
    );
    b.set("notes", sc.notes.clone());
    for (f, ok) in &results {
        b.line(format!("[{}] {}", if *ok { "ok" } else { "FAIL" }, f.description));
    }
    for n in &sc.notes {
        b.line(format!("note: {n}"));
    }
    if failed > 0 {
        b.exit_code = 1;
    }
    Ok(b)
}

fn field_of<T: serde::de::DeserializeOwned>(report: &Value, key: &str) -> Result<T> {
    let v = report.get(key).ok_or_else(|| CliError::validation("report", format!("missing `{key}`")))?;
    serde_json::from_value(v.clone()).map_err(|e| CliError::validation("report", format!("`{key}`: {e}")))
}

fn verify_report(ws: &Workspace, path: &PathBuf) -> Result<Builder> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let report: Value = serde_json::from_str(&text)?;
    let p: u32 = field_of(&report.get("field").cloned().unwrap_or(Value::Null), "p")?;
    if p != ws.field().prime() {
        return Err(CliError::validation("report", format!("report is over F_{p}, workspace over F_{}", ws.field().prime())));
    }
    let mut checks: Vec<(String, bool)> = Vec::new();
    let subject = report.get("subject").filter(|v| !v.is_null());
    let certificate = report.get("certificate").filter(|v| !v.is_null());
    let witness = report.get("witness").filter(|v| !v.is_null());
    let sub: Box<dyn Subcategory> = match report.get("serre").and_then(Value::as_str) {
        Some(s) => Box::new(ws.serre_class(Some(s))?),
        None => {
            let t: Option<String> = report.get("subcategory").and_then(Value::as_str).map(str::to_string);
            Box::new(ws.context(t.as_deref())?)
        }
    };
    if let (Some(subject), Some(certificate)) = (subject, certificate) {
        let f = decode_morphism(&ws.algebra, &serde_json::from_value::<MorphismJson>(subject.clone()).map_err(CliError::from)?)?;
        let vj = VerdictJson {
            decision: field_of(&report, "decision")?,
            answer: field_of(&report, "answer")?,
            route: String::new(),
            cross_check: None,
            certificate: serde_json::from_value::<CertificateJson>(certificate.clone()).map_err(CliError::from)?,
        };
        let v = decode_verdict(&ws.algebra, &vj)?;
        checks.push((format!("{} certificate", v.decision.name()), verify(sub.as_ref(), &f, &v)?));
    }
    if let Some(w) = witness {
        let w = decode_witness(&ws.algebra, &serde_json::from_value::<WitnessJson>(w.clone()).map_err(CliError::from)?)?;
        checks.push(("witness certificates".into(), w.reverify(sub.as_ref())?));
    }
    if checks.is_empty() {
        return Err(CliError::validation("report", "no certificate or witness to verify"));
    }
    let ok = checks.iter().all(|(_, c)| *c);
    let mut b = Builder::new(json!(if ok { "verified" } else { "rejected" }), "recomputation from the workspace");
    b.set("checks", checks.iter().map(|(n, c)| json!({ "check": n, "holds": c })).collect::<Vec<_>>());
    for (n, c) in &checks {
        b.line(format!("{n}: {}", if *c { "verified" } else { "rejected" }));
    }
    if !ok {
        b.exit_code = 1;
    }
    Ok(b)
}
