//! The five subcommands. Each returns a [`Report`]; printing, file output
//! and exit codes are handled by the caller.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};
use terminal_cluster::cluster::mutate_seed_traced;
use terminal_cluster::euler::evaluate_phi;
use terminal_cluster::minors::{interval_minor_key, minor, one_param_product, unitriangular, w_minor, x_names};
use terminal_cluster::{
    adapted_word, build_category, g_module, initial_seed, make_schedule, pbw_expand, run_path, validate_quiver,
    AdaptedOrdering, CategoryModel, IntervalLabel, LaurentPoly, MeshVertex, Seed, TerminalData,
};

use crate::error::{CliError, CliResult};
use crate::input::Target;

/// Output format selected with `--format`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text.
    Text,
    /// Pretty-printed JSON.
    Json,
    /// Graphviz DOT (quiver-valued outputs only).
    Dot,
}

/// Which checks `minors` runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MinorsMode {
    /// Dual PBW expansions against interval minors.
    Eta,
    /// Evaluated generating functions against minors of one-parameter products.
    Phi,
    /// Both.
    All,
}

/// What a command produced.
#[derive(Debug, Default)]
pub struct Report {
    /// The complete output.
    pub full: String,
    /// A short replacement for stdout when `full` is too large to print.
    pub summary: Option<String>,
    /// Verification failures; nonempty means exit code 1.
    pub failures: Vec<String>,
}

impl Report {
    fn new(full: String) -> Self {
        Report {
            full,
            ..Report::default()
        }
    }
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::Input(format!("--format {format:?} is not available for `{command}`").to_lowercase())
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report values serialize");
    s.push('\n');
    s
}

fn vector_text(cat: Option<&CategoryModel>, v: &[i64]) -> String {
    match cat {
        Some(cat) if v.len() == cat.r() => cat.triangle(v),
        _ => format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
    }
}

/// `build`: vertices, dimension vectors, `Γ_M*`, hom table and `d_Δ`.
pub fn build(cat: &CategoryModel, ord: &AdaptedOrdering, format: Format) -> CliResult<Report> {
    let report = cat.report(ord)?;
    let full = match format {
        Format::Json => to_json(&report),
        Format::Dot => cat.to_dot(true),
        Format::Text => {
            let td = cat.terminal();
            let mut s = String::new();
            let t: Vec<String> = td.t().iter().map(|x| x.to_string()).collect();
            writeln!(
                s,
                "quiver: n = {}, t = ({}), r = {}",
                td.quiver().n(),
                t.join(","),
                cat.r()
            )
            .unwrap();
            writeln!(s, "vertices (i,a) and dimension vectors:").unwrap();
            for (v, d) in cat.vertices().iter().zip(cat.dims()) {
                writeln!(s, "  {v}  {}", vector_text(None, &d.0)).unwrap();
            }
            writeln!(s, "arrows of Γ_M*:").unwrap();
            for (a, b) in &report.gamma_m_star {
                writeln!(s, "  {a} -> {b}").unwrap();
            }
            writeln!(s, "hom table, row x, column z: dim Hom(M_x, M_z):").unwrap();
            for (v, row) in cat.vertices().iter().zip(cat.hom_table()) {
                let row: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                writeln!(s, "  {v} {}", row.join("")).unwrap();
            }
            writeln!(s, "ordering: {}", report.ordering.join(" < ")).unwrap();
            writeln!(s, "d_Δ: {}", cat.triangle(&report.d_delta)).unwrap();
            s
        }
    };
    Ok(Report::new(full))
}

fn resolve(seed: &Seed, target: Target) -> CliResult<usize> {
    match target {
        Target::Position(p) if p <= seed.size() => Ok(p - 1),
        Target::Position(p) => Err(CliError::Input(format!(
            "position {p} out of range 1..={}",
            seed.size()
        ))),
        Target::Label(l) => seed
            .position_of(l)
            .ok_or_else(|| CliError::Input(format!("no seed position is labelled {l}"))),
    }
}

fn seed_dot(seed: &Seed, names: &[String]) -> String {
    let mut s = String::from("digraph seed {\n");
    for (p, name) in names.iter().enumerate() {
        let shape = if seed.matrix.is_mutable(p) { "ellipse" } else { "box" };
        writeln!(s, "  p{} [label=\"{name}\", shape={shape}];", p + 1).unwrap();
    }
    for &(a, b) in seed.matrix.to_quiver().arrows() {
        writeln!(s, "  p{} -> p{};", a + 1, b + 1).unwrap();
    }
    s.push_str("}\n");
    s
}

/// `mutate`: mutates a seed along a sequence of targets and traces every
/// exchange relation, new variable and tracker update.
pub fn mutate(
    seed: Seed,
    cat: Option<&CategoryModel>,
    targets: &[Target],
    format: Format,
) -> CliResult<(Report, Seed)> {
    let r = seed.size();
    // Current cluster variables are named after the initial ones, with one
    // prime per mutation at that position.
    let mut names = seed.names.clone();
    let mut seed = seed;
    let mut text = String::new();
    let mut trace = Vec::new();
    for (n, &target) in targets.iter().enumerate() {
        let p = resolve(&seed, target)?;
        let (next, step) = mutate_seed_traced(&seed, p)?;
        let monomial = |e: &[u32]| LaurentPoly::monomial(1, e.iter().map(|&x| x as i32).collect());
        let numerator = &monomial(&step.relation.out_exponents) + &monomial(&step.relation.in_exponents);
        let mut new_name = names[p].clone();
        new_name.push('\'');
        let relation = format!("{new_name} = ({})/{}", numerator.to_text(&names), names[p]);
        let label = seed.labels[p].map(|l| format!(" [{l}]")).unwrap_or_default();
        writeln!(text, "step {}: mutate position {}{label}", n + 1, p + 1).unwrap();
        writeln!(text, "  relation: {relation}").unwrap();
        let variable = next.var_text(p);
        if let Some(v) = &variable {
            writeln!(text, "  variable: {v}").unwrap();
        }
        for (name, m) in [("dim", &step.dim), ("Δ-dim", &step.delta)] {
            if let Some(m) = m {
                let note = if m.dominance { "" } else { " (no dominance)" };
                writeln!(text, "  {name}: {}{note}", vector_text(cat, &m.vector)).unwrap();
            }
        }
        trace.push(json!({
            "position": p + 1,
            "label": seed.labels[p].map(|l| l.to_string()),
            "relation": relation,
            "variable": variable,
            "dim": step.dim,
            "delta": step.delta,
        }));
        names[p] = new_name;
        seed = next;
    }
    debug_assert_eq!(names.len(), r);
    let full = match format {
        Format::Text => text,
        Format::Json => to_json(&json!({ "steps": trace, "seed": seed })),
        Format::Dot => seed_dot(&seed, &names),
    };
    Ok((Report::new(full), seed))
}

fn labels_text(seed: &Seed) -> String {
    let mut labels: Vec<IntervalLabel> = seed.labels.iter().flatten().copied().collect();
    labels.sort();
    labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// `path`: runs the mutation schedule from the initial seed to its dual,
/// checking every step against its determinantal identity.
pub fn path(cat: &CategoryModel, ord: &AdaptedOrdering, expand: bool, format: Format) -> CliResult<Report> {
    let schedule = make_schedule(cat.terminal())?;
    let mut seed = initial_seed(cat, ord)?;
    if !expand {
        seed = seed.without_vars();
    }
    let res = run_path(cat, &seed, &schedule)?;
    let dominance = res.max_dominance_everywhere();
    let mut summary = String::new();
    writeln!(summary, "steps: {}", res.steps.len()).unwrap();
    writeln!(summary, "final labels: {}", labels_text(&res.seed)).unwrap();
    writeln!(
        summary,
        "max-dominance: {}",
        if dominance || res.steps.is_empty() { "yes" } else { "no" }
    )
    .unwrap();
    let full = match format {
        Format::Dot => return Err(unsupported(format, "path")),
        Format::Json => {
            let mut v = json!({
                "steps": res.steps.len(),
                "final_labels": labels_text(&res.seed).split_whitespace().collect::<Vec<_>>(),
                "max_dominance": dominance,
            });
            if expand {
                v["trace"] = serde_json::to_value(&res.steps).expect("steps serialize");
            }
            to_json(&v)
        }
        Format::Text if !expand => summary.clone(),
        Format::Text => {
            let mut s = String::new();
            for (n, step) in res.steps.iter().enumerate() {
                writeln!(
                    s,
                    "step {}: {} -> {} at position {}",
                    n + 1,
                    step.target,
                    step.new_label,
                    step.position + 1
                )
                .unwrap();
                writeln!(s, "  identity: {}", step.identity.to_text()).unwrap();
                if let Some(m) = &step.dim {
                    writeln!(s, "  dim: {}", cat.triangle(&m.vector)).unwrap();
                }
                if let Some(m) = &step.delta {
                    writeln!(s, "  Δ-dim: {}", cat.triangle(&m.vector)).unwrap();
                }
                if let Some(v) = &step.variable {
                    writeln!(s, "  variable: {v}").unwrap();
                }
            }
            s.push_str(&summary);
            s
        }
    };
    Ok(Report {
        full,
        summary: Some(summary),
        failures: Vec::new(),
    })
}

/// `euler`: the generating function `g_{T_k}` as a shuffle series.
pub fn euler(cat: &CategoryModel, ord: &AdaptedOrdering, k: usize, format: Format) -> CliResult<Report> {
    let g = g_module(cat, ord, k)?;
    let content = g
        .homogeneous_content(cat.terminal().quiver().n())
        .map(|c| vector_text(None, &c))
        .unwrap_or_else(|| "inhomogeneous".into());
    let summary = format!(
        "g_T{k}: {} words, content {content}, {}\n",
        g.len(),
        if g.is_integral() { "integral" } else { "non-integral" }
    );
    let full = match format {
        Format::Text => format!("{}\n", g.to_text()),
        Format::Json => to_json(&json!({
            "k": k,
            "words": g.len(),
            "integral": g.is_integral(),
            "series": g.to_json_map(),
        })),
        Format::Dot => return Err(unsupported(format, "euler")),
    };
    let failures = if g.is_integral() {
        Vec::new()
    } else {
        vec![format!("g_T{k} has non-integral coefficients")]
    };
    Ok(Report {
        full,
        summary: Some(summary),
        failures,
    })
}

/// The linear type-A category `n -> n−1 -> … -> 1` with `t = (0, 1, …, n−1)`.
pub fn linear_type_a(n: usize) -> CliResult<CategoryModel> {
    if n < 2 {
        return Err(CliError::Input(format!("minors needs n >= 2, got {n}")));
    }
    let arrows: Vec<(usize, usize)> = (1..n).map(|l| (l + 1, l)).collect();
    let q = validate_quiver(n, &arrows)?;
    Ok(build_category(&TerminalData::new(q, (0..n).collect())?)?)
}

/// Interval minors `T_{i,[a,b]} ↦ Δ` in text form, keyed by label.
pub type MinorTable = BTreeMap<String, String>;

/// `minors`: matches dual PBW expansions with unitriangular minors and
/// evaluated generating functions with minors of one-parameter products.
pub fn minors(n: usize, mode: MinorsMode, golden: Option<&MinorTable>, format: Format) -> CliResult<Report> {
    let cat = linear_type_a(n)?;
    let x = unitriangular(n + 1)?;
    let names = x_names(n + 1);
    let mut text = String::new();
    let mut failures = Vec::new();
    let mut table = MinorTable::new();
    let mut phi_rows = Vec::new();
    if mode != MinorsMode::Phi {
        let mut images = vec![LaurentPoly::zero(x.nvars()); cat.r()];
        for (p, v) in cat.vertices().iter().enumerate() {
            images[p] = minor(&x, &interval_minor_key(v.i, v.a, v.a, n)?)?;
        }
        writeln!(text, "η: dual PBW expansions against interval minors (n = {n})").unwrap();
        for i in 1..=n {
            for b in 0..i {
                for a in 0..=b {
                    let lbl = IntervalLabel::new(i, a as i64, b as i64);
                    let key = interval_minor_key(i, a, b, n)?;
                    let m = minor(&x, &key)?;
                    let image = pbw_expand(&cat, lbl)?.substitute(&images)?;
                    let got = m.to_text(&names);
                    let mut status = "ok";
                    if image != m {
                        status = "MISMATCH";
                        failures.push(format!("{lbl}: η gives {}, {key} = {got}", image.to_text(&names)));
                    }
                    if let Some(expected) = golden.and_then(|g| g.get(&lbl.to_string())) {
                        if *expected != got {
                            status = "MISMATCH";
                            failures.push(format!("{lbl} ({key}):\n- {expected}\n+ {got}"));
                        }
                    }
                    writeln!(text, "  {lbl} -> {key} = {got}  {status}").unwrap();
                    table.insert(lbl.to_string(), got);
                }
            }
        }
        if let Some(g) = golden {
            for missing in g.keys().filter(|k| !table.contains_key(*k)) {
                failures.push(format!("golden entry {missing} is not an interval of n = {n}"));
            }
        }
    }
    if mode != MinorsMode::Eta {
        let ord = cat.canonical_ordering();
        let word = adapted_word(&cat, &ord)?.letters;
        writeln!(text, "φ: evaluated generating functions against minors (n = {n})").unwrap();
        for k in 1..=word.len() {
            let g = g_module(&cat, &ord, k)?;
            let dim: i64 = g.homogeneous_content(n).map(|c| c.iter().sum()).unwrap_or(0);
            let mut eval = Vec::new();
            while (eval.len() as i64) < 2 * dim.max(1) {
                eval.extend_from_slice(&word);
            }
            let key = w_minor(&word[..k], word[k - 1], n + 1)?;
            let m = minor(&one_param_product(&eval, n + 1)?, &key)?;
            let ok = evaluate_phi(&g, &eval).to_integer_poly().as_ref() == Some(&m);
            if !ok {
                failures.push(format!("T_{k}: evaluated g_T{k} differs from {key}"));
            }
            let v: MeshVertex = ord.vertices()[k - 1];
            writeln!(text, "  T_{k} at {v} -> {key}  {}", if ok { "ok" } else { "MISMATCH" }).unwrap();
            phi_rows.push(json!({ "k": k, "vertex": v.to_string(), "minor": key.to_string(), "ok": ok }));
        }
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    writeln!(text, "{status}").unwrap();
    let full = match format {
        Format::Text => text,
        Format::Json => to_json(&json!({ "n": n, "eta": table, "phi": phi_rows, "status": status })),
        Format::Dot => return Err(unsupported(format, "minors")),
    };
    Ok(Report {
        full,
        summary: None,
        failures,
    })
}

/// Parses a golden minor table: either a plain label → minor map or the
/// JSON output of `minors`, whose `eta` field is such a map.
pub fn parse_golden(text: &str) -> CliResult<MinorTable> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("golden file: {e}")))?;
    let map = v.get("eta").cloned().unwrap_or(v);
    serde_json::from_value(map).map_err(|e| CliError::Input(format!("golden file: {e}")))
}
