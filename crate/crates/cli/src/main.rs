mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use leibalg::algebra::{
    ann_subspace, centres, liesation, lower_central_series, nilpotency_class, Ideal,
};
use leibalg::catalog::{self, AlgebraDocument};
use leibalg::spaces::{centroid_decomposition, lookup, SpaceOptions};
use leibalg::suite::{
    any_refuted, run_pair_suite, run_suite, run_tensor_suite, AlgebraContext, Group,
    TheoremReport,
};
use leibalg::tensor::{tensor_algebra, tensor_centroid_compare};
use leibalg::{Error, FieldSpec, Result};

use render::{matrix_json, matrix_text, subspace_json, subspace_text};

#[derive(Parser)]
#[command(name = "leibalg", version, about = "Centroids and derivations of Leibniz algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Compute over `Q` or `fp:<p>` (p an odd prime).
    #[arg(long, global = true)]
    field: Option<String>,
    /// Seed for the sampled spaces; defaults to $LEIBALG_SEED, then 0.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, centres, lower central series, nilpotency, ann and liesation.
    Info { algebra: String },
    /// Basis of one operator space.
    Space {
        algebra: String,
        #[arg(long)]
        which: String,
    },
    /// Splitting of the Lie-centroid into Der_z and Ψ.
    Decompose { algebra: String },
    /// Lie-centroid of A ⊗ g.
    Tensor {
        #[arg(long)]
        assoc: String,
        #[arg(long)]
        leibniz: String,
        /// Compare with the embedded and Ψ-spans and run the tensor checks.
        #[arg(long)]
        compare: bool,
    },
    /// Run the theorem checks.
    Check {
        algebra: String,
        /// Also check the direct sum with this algebra.
        #[arg(long)]
        pair: Option<String>,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Associative factor for the tensor checks in s6.
        #[arg(long, default_value = "TK2")]
        assoc: String,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
    Export { name: String, path: PathBuf },
}

struct Env {
    format: Format,
    field: Option<FieldSpec>,
    opts: SpaceOptions,
}

/// What a command produced: the rendered text and whether a check failed.
struct Outcome {
    text: String,
    refuted: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, refuted: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::from(1),
        Ok(false) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn seed(flag: Option<u64>) -> Result<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("LEIBALG_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("LEIBALG_SEED must be a decimal integer, got `{v}`"))),
        Err(_) => Ok(0),
    }
}

fn run(cli: Cli) -> Result<bool> {
    let field = cli.field.as_deref().map(str::parse).transpose()?;
    let env = Env {
        format: cli.format,
        field,
        opts: SpaceOptions {
            seed: seed(cli.seed)?,
            certify: true,
        },
    };
    let out = match cli.command {
        Command::Info { algebra } => info(&env, &algebra)?,
        Command::Space { algebra, which } => space(&env, &algebra, &which)?,
        Command::Decompose { algebra } => decompose(&env, &algebra)?,
        Command::Tensor {
            assoc,
            leibniz,
            compare,
        } => tensor(&env, &assoc, &leibniz, compare)?,
        Command::Check {
            algebra,
            pair,
            suite,
            assoc,
        } => check(&env, &algebra, pair.as_deref(), &suite, &assoc)?,
        Command::Catalog { action } => catalog_cmd(&env, action)?,
    };
    let mut text = out.text;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match cli.output {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Error::Parse(format!("cannot write `{}`: {e}", path.display())))?,
        None => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
        }
    }
    Ok(out.refuted)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}

fn info(env: &Env, source: &str) -> Result<Outcome> {
    let (name, g) = input::leibniz(source, env.field)?;
    let c = centres(&g);
    let whole = Ideal::whole(&g);
    let series = lower_central_series(&g, &whole)?;
    let class = nilpotency_class(&g, &whole)?;
    let ann = ann_subspace(&g);
    let lie = liesation(&g)?;
    let lie_doc = AlgebraDocument::from_algebra(
        &format!("{name}_Lie"),
        &catalog::Algebra::Leibniz(lie.algebra.clone()),
    );
    let names = g.table().basis_names();
    if env.format == Format::Json {
        return Ok(Outcome::ok(pretty(&json!({
            "name": name,
            "field": g.field().to_string(),
            "dim": g.dim(),
            "basis": names,
            "z_lie": subspace_json(c.z_lie.carrier()),
            "z_right": subspace_json(c.z_right.carrier()),
            "z_left": subspace_json(&c.z_left),
            "z": subspace_json(c.z.carrier()),
            "lower_central_series": series.iter().map(subspace_json).collect::<Vec<_>>(),
            "nilpotency": class.to_string(),
            "ann": subspace_json(&ann),
            "liesation": serde_json::to_value(&lie_doc).expect("documents serialize"),
        }))));
    }
    let mut s = String::new();
    s += &format!("{name} over {}, dim {}\n", g.field(), g.dim());
    s += &format!("basis     {}\n", names.join(", "));
    s += &format!("Z_Lie     {}\n", subspace_text(c.z_lie.carrier(), names));
    s += &format!("Z^r       {}\n", subspace_text(c.z_right.carrier(), names));
    s += &format!("Z^l       {}\n", subspace_text(&c.z_left, names));
    s += &format!("Z         {}\n", subspace_text(c.z.carrier(), names));
    for (i, term) in series.iter().enumerate() {
        s += &format!("gamma_{:<3} {}\n", i + 1, subspace_text(term, names));
    }
    s += &format!("nilpotency {class}\n");
    s += &format!("ann       {}\n", subspace_text(&ann, names));
    s += &format!("liesation dim {}\n", lie.algebra.dim());
    s += &products_text(&lie_doc);
    Ok(Outcome::ok(s))
}

fn products_text(doc: &AlgebraDocument) -> String {
    let mut s = String::new();
    for p in &doc.table {
        let terms: Vec<String> = p
            .result
            .iter()
            .map(|(k, c)| {
                if c == "1" {
                    doc.basis[*k].clone()
                } else {
                    format!("{c}·{}", doc.basis[*k])
                }
            })
            .collect();
        s += &format!("  [{}, {}] = {}\n", doc.basis[p.left], doc.basis[p.right], terms.join(" + "));
    }
    if doc.table.is_empty() {
        s += "  all products zero\n";
    }
    s
}

fn space(env: &Env, source: &str, which: &str) -> Result<Outcome> {
    let kind = lookup(which)?;
    let (name, g) = input::leibniz(source, env.field)?;
    let cs = kind.compute(&g, &env.opts)?;
    if env.format == Format::Json {
        let witnesses: Vec<Value> = cs
            .witnesses
            .iter()
            .map(|w| json!(w.iter().map(matrix_json).collect::<Vec<_>>()))
            .collect();
        let mut v = json!({
            "algebra": name,
            "field": g.field().to_string(),
            "space": kind.name(),
            "dim": cs.dim(),
            "basis": cs.space.basis().iter().map(matrix_json).collect::<Vec<_>>(),
        });
        if cs.witnesses.iter().any(|w| !w.is_empty()) {
            v["witnesses"] = json!(witnesses);
        }
        if let Some(cert) = &cs.certificate {
            v["certificate"] = serde_json::to_value(cert).expect("certificates serialize");
        }
        return Ok(Outcome::ok(pretty(&v)));
    }
    let mut s = format!("{} of {name} over {}: dim {}\n", kind.title(), g.field(), cs.dim());
    for (i, e) in cs.elements().iter().enumerate() {
        s += &format!("#{}\n{}\n", i + 1, matrix_text(&e.map, 2));
        for (k, w) in e.witnesses.iter().enumerate() {
            s += &format!("  f{}\n{}\n", "'".repeat(k + 1), matrix_text(w, 4));
        }
    }
    if let Some(cert) = &cs.certificate {
        s += &format!("certificate: {cert}\n");
    }
    Ok(Outcome::ok(s))
}

fn decompose(env: &Env, source: &str) -> Result<Outcome> {
    let (name, g) = input::leibniz(source, env.field)?;
    let d = centroid_decomposition(&g)?;
    if env.format == Format::Json {
        return Ok(Outcome::ok(pretty(&json!({
            "algebra": name,
            "centroid_dim": d.centroid.dim(),
            "der_z_dim": d.der_z.dim(),
            "psi_dim": d.psi.len(),
            "der_z": d.der_z.basis().iter().map(matrix_json).collect::<Vec<_>>(),
            "psi": d.psi.iter().map(matrix_json).collect::<Vec<_>>(),
        }))));
    }
    let mut s = format!(
        "Lie-centroid of {name}: dim {} = {} (Der_z) + {} (Psi)\n",
        d.centroid.dim(),
        d.der_z.dim(),
        d.psi.len()
    );
    for m in d.der_z.basis() {
        s += &format!("Der_z\n{}\n", matrix_text(m, 2));
    }
    for m in &d.psi {
        s += &format!("Psi\n{}\n", matrix_text(m, 2));
    }
    Ok(Outcome::ok(s))
}

fn tensor(env: &Env, assoc: &str, leib: &str, compare: bool) -> Result<Outcome> {
    let (an, a) = input::associative(assoc, env.field)?;
    let (gn, g) = input::leibniz(leib, env.field)?;
    let t = tensor_algebra(&a, &g)?;
    let centroid = t.centroid();
    let mut v = json!({
        "assoc": an,
        "leibniz": gn,
        "dim": t.dim(),
        "centroid_dim": centroid.dim(),
    });
    let mut s = format!(
        "{an} ⊗ {gn}: dim {}, Lie-centroid dim {}\n",
        t.dim(),
        centroid.dim()
    );
    let mut refuted = false;
    if compare {
        let cmp = tensor_centroid_compare(&t)?;
        let reports = run_tensor_suite(&t)?;
        refuted = any_refuted(&reports);
        v["embedded_dim"] = json!(cmp.embedded.dim());
        v["psi_part_dim"] = json!(cmp.psi_part.dim());
        v["equality_hypotheses"] = json!(cmp.equality_hypotheses());
        v["equal"] = json!(cmp.equal());
        if let Some(w) = cmp.witness_outside() {
            v["witness_outside_embedded"] = matrix_json(&w);
        }
        v["reports"] = serde_json::to_value(&reports).expect("reports serialize");
        s += &format!(
            "embedded Γ(A) ⊗ Γ(g): dim {}; A ⊗ Psi + End(A) ⊗ Der_z: dim {}\n",
            cmp.embedded.dim(),
            cmp.psi_part.dim()
        );
        s += &format!(
            "equality hypotheses: {}; centroid = embedded: {}\n",
            cmp.equality_hypotheses(),
            cmp.equal()
        );
        s += &reports_text(&reports);
    } else {
        v["basis"] = json!(centroid.basis().iter().map(matrix_json).collect::<Vec<_>>());
        for (i, m) in centroid.basis().iter().enumerate() {
            s += &format!("#{}\n{}\n", i + 1, matrix_text(m, 2));
        }
    }
    let text = if env.format == Format::Json { pretty(&v) } else { s };
    Ok(Outcome { text, refuted })
}

fn reports_text(reports: &[TheoremReport]) -> String {
    reports.iter().map(|r| format!("{r}\n")).collect()
}

fn check(env: &Env, source: &str, pair: Option<&str>, suite: &str, assoc: &str) -> Result<Outcome> {
    let groups: Vec<Group> = if suite == "all" {
        Group::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let (name, g) = input::leibniz(source, env.field)?;
    let mut reports = Vec::new();
    if let Some(other) = pair {
        let (_, h) = input::leibniz(other, env.field)?;
        reports.extend(run_pair_suite(&g, &h)?);
    }
    if groups.contains(&Group::S6) {
        let (_, a) = input::associative(assoc, env.field)?;
        reports.extend(run_tensor_suite(&tensor_algebra(&a, &g)?)?);
    }
    let ctx = AlgebraContext::new(&name, g, env.opts);
    reports.extend(run_suite(&ctx, &groups));
    let text = if env.format == Format::Json {
        serde_json::to_string_pretty(&reports).expect("reports serialize")
    } else {
        reports_text(&reports)
    };
    Ok(Outcome {
        text,
        refuted: any_refuted(&reports),
    })
}

fn catalog_cmd(env: &Env, action: CatalogAction) -> Result<Outcome> {
    match action {
        CatalogAction::List => {
            if env.format == Format::Json {
                let list: Vec<Value> = catalog::ENTRIES
                    .iter()
                    .map(|e| json!({"name": e.name, "kind": e.kind, "description": e.description}))
                    .collect();
                return Ok(Outcome::ok(pretty(&json!(list))));
            }
            let s = catalog::ENTRIES
                .iter()
                .map(|e| format!("{:<6} {:<12} {}\n", e.name, e.kind, e.description))
                .collect();
            Ok(Outcome::ok(s))
        }
        CatalogAction::Show { name } => {
            let doc = document(env, &name)?;
            if env.format == Format::Json {
                return Ok(Outcome::ok(doc.to_json()));
            }
            let kind = serde_json::to_value(doc.kind).expect("kinds serialize");
            let mut s = format!(
                "{} ({}, dim {}, over {})\nbasis {}\n",
                doc.name,
                kind.as_str().unwrap_or_default(),
                doc.dim,
                doc.field,
                doc.basis.join(", ")
            );
            s += &products_text(&doc);
            if let Some(u) = &doc.unit {
                s += &format!("unit ({})\n", u.join(", "));
            }
            Ok(Outcome::ok(s))
        }
        CatalogAction::Export { name, path } => {
            let doc = document(env, &name)?;
            std::fs::write(&path, doc.to_json() + "\n")
                .map_err(|e| Error::Parse(format!("cannot write `{}`: {e}", path.display())))?;
            Ok(Outcome::ok(format!("wrote {} to {}", doc.name, path.display())))
        }
    }
}

fn document(env: &Env, name: &str) -> Result<AlgebraDocument> {
    let l = input::load(name, env.field)?;
    Ok(AlgebraDocument::from_algebra(&l.name, &l.algebra))
}
