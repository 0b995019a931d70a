//! The `su2cert` command line.
//!
//! Exit codes: 0 success or positive certificate, 1 abstention,
//! 2 contradiction or inconsistent input, 64 usage, 65 unparseable input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::Rational;
use crate::certs::{certify, Certificate, Query};
use crate::error::{Error, Result};
use crate::format::{from_toml, poly_to_triples, rational_json};
use crate::knots::{casson_plus_one_surgery, hoste_casson, phi1, y_mn_link, KnotEntry, KnotTable};
use crate::operators::{orthogonality_matrix, DonaldsonSeriesModel};
use crate::slopes::kb::{render, KbFile};
use crate::slopes::Slope;
use crate::stein::{seifert_stein_diagram, sfs_lspace_classify, Plumbing, SeifertData, SteinDiagram};
use crate::VERSION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ABSTAIN: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;

#[derive(Parser, Debug)]
#[command(name = "su2cert", version, about = "Exact certificates for SU(2) representations of 3-manifolds")]
struct Cli {
    /// Emit machine-readable JSON records.
    #[arg(long, global = true)]
    json: bool,
    /// Print derivation chains and rule citations.
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify a surgery, Seifert space, Stein boundary or raw rank data.
    Certify(CertifyArgs),
    /// Close an L-space knowledge base and answer its queries.
    Lspace { file: PathBuf },
    /// Casson invariants from Hoste's formula or of +1 surgery on a knot.
    Casson(CassonArgs),
    /// Describe a Seifert fibered space given as "M(e; q1/p1, ...)".
    Seifert { data: String },
    /// Orthogonality matrix of a family of Donaldson series models.
    DonaldsonCheck { file: PathBuf },
    /// Inspect the knot table.
    KnotTable {
        #[command(subcommand)]
        action: TableAction,
    },
}

#[derive(Args, Debug)]
struct CertifyArgs {
    /// Query file (TOML with [[query]] entries).
    file: Option<PathBuf>,
    /// Query file processed concurrently; output keeps input order.
    #[arg(long, conflicts_with = "file")]
    batch: Option<PathBuf>,
    #[arg(long, requires = "slope")]
    knot: Option<String>,
    #[arg(long, requires = "knot", allow_hyphen_values = true)]
    slope: Option<String>,
    #[arg(long, conflicts_with = "knot")]
    seifert: Option<String>,
    /// Extra knot records (TOML table file) added to the built-in table.
    #[arg(long)]
    knots: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CassonArgs {
    /// `Y-mn`, or a two-component link in the table.
    #[arg(long, conflicts_with = "knot", requires_all = ["m", "n"])]
    link: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    /// Report λ(S^3_{+1}(K)) = Δ''(1)/2.
    #[arg(long)]
    knot: Option<String>,
    #[arg(long)]
    knots: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum TableAction {
    List,
    /// Validate the built-in table, or a table file merged into it.
    Validate { file: Option<PathBuf> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QueryFile {
    #[allow(dead_code)]
    schema_version: u32,
    #[serde(default)]
    knot: Vec<KnotEntry>,
    #[serde(default)]
    query: Vec<Query>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    #[allow(dead_code)]
    schema_version: u32,
    model: Vec<DonaldsonSeriesModel>,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidSlope(_) | Error::NotCoprime(..) | Error::Unregistered(_) => EXIT_PARSE,
        _ => EXIT_INCONSISTENT,
    }
}

struct Out<'a> {
    out: &'a mut dyn Write,
    json: bool,
    trace: bool,
}

impl Out<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", s.as_ref());
    }

    fn emit_json(&mut self, v: &Value) {
        let _ = writeln!(self.out, "{}", serde_json::to_string_pretty(v).expect("json"));
    }
}

/// Runs the CLI with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut o = Out { out, json: cli.json, trace: cli.trace };
    let r = match cli.command {
        Command::Certify(a) => cmd_certify(&mut o, a),
        Command::Lspace { file } => cmd_lspace(&mut o, &file),
        Command::Casson(a) => cmd_casson(&mut o, a),
        Command::Seifert { data } => cmd_seifert(&mut o, &data),
        Command::DonaldsonCheck { file } => cmd_donaldson(&mut o, &file),
        Command::KnotTable { action } => cmd_knot_table(&mut o, action),
    };
    match r {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_table(extra: Option<&Path>) -> Result<KnotTable> {
    let mut t = KnotTable::builtin();
    if let Some(p) = extra {
        t.load_toml_str(&read(p)?)?;
    }
    Ok(t)
}

fn certificate_record(q: &Query, r: &Result<Certificate>) -> Value {
    let inputs = serde_json::to_value(q).expect("query serializes");
    match r {
        Ok(c) => {
            let mut v = c.to_json();
            v["inputs"] = inputs;
            v["version"] = json!(VERSION);
            v
        }
        Err(e) => json!({"conclusion": "inconsistent_input", "error": e.to_string(), "chain": [], "inputs": inputs, "version": VERSION}),
    }
}

fn cmd_certify(o: &mut Out, a: CertifyArgs) -> Result<i32> {
    let mut table = load_table(a.knots.as_deref())?;
    let (queries, parallel) = if let Some(path) = a.file.as_ref().or(a.batch.as_ref()) {
        let f: QueryFile = from_toml(&read(path)?)?;
        for k in f.knot {
            table.insert_knot(k.into_record()?)?;
        }
        (f.query, a.batch.is_some())
    } else if let (Some(knot), Some(slope)) = (a.knot, a.slope) {
        (vec![Query::Surgery { knot, slope: slope.parse()? }], false)
    } else if let Some(s) = a.seifert {
        (vec![Query::Seifert { data: s.parse()? }], false)
    } else {
        return Err(Error::Parse("certify needs a query file, --batch, --knot/--slope or --seifert".into()));
    };
    let results: Vec<Result<Certificate>> = if parallel {
        queries.par_iter().map(|q| certify(q, &table)).collect()
    } else {
        queries.iter().map(|q| certify(q, &table)).collect()
    };
    let mut code = EXIT_OK;
    for r in &results {
        let c = match r {
            Ok(c) if c.is_positive() => EXIT_OK,
            Ok(_) => EXIT_ABSTAIN,
            Err(e) => exit_code(e),
        };
        code = code.max(c);
    }
    if o.json {
        let records: Vec<Value> = queries.iter().zip(&results).map(|(q, r)| certificate_record(q, r)).collect();
        if records.len() == 1 {
            o.emit_json(&records[0]);
        } else {
            o.emit_json(&Value::Array(records));
        }
    } else {
        for (q, r) in queries.iter().zip(&results) {
            match r {
                Ok(c) => {
                    let _ = write!(o.out, "{}", c.report(o.trace));
                }
                Err(e) => o.line(format!("{}: inconsistent input: {e}", q.subject())),
            }
        }
    }
    Ok(code)
}

fn cmd_lspace(o: &mut Out, path: &Path) -> Result<i32> {
    let file: KbFile = from_toml(&read(path)?)?;
    let (mut kb, queries) = file.into_kb()?;
    kb.close();
    let answers: Vec<(Slope, Option<(bool, usize)>)> = queries.iter().map(|q| (*q, kb.status(q))).collect();
    let contradictions = kb.contradictions().to_vec();
    if o.json {
        let facts: Vec<Value> = kb
            .facts()
            .iter()
            .map(|f| {
                json!({"id": f.id, "statement": f.statement.to_string(), "rule": f.rule.code(),
                       "citation": f.rule.citation(), "premises": f.premises})
            })
            .collect();
        let contra: Vec<Value> = contradictions
            .iter()
            .map(|c| {
                let chain: Vec<String> = kb.contradiction_chain(c).into_iter().map(render).collect();
                json!({"rule": c.rule.code(), "citation": c.rule.citation(), "facts": c.facts,
                       "description": c.description, "chain": chain})
            })
            .collect();
        let ans: Vec<Value> = answers
            .iter()
            .map(|(s, a)| match a {
                Some((b, id)) => json!({"slope": s.to_string(), "lspace": b, "fact": id}),
                None => json!({"slope": s.to_string(), "lspace": Value::Null}),
            })
            .collect();
        let conclusion = if contradictions.is_empty() { "consistent" } else { "contradiction" };
        o.emit_json(&json!({"conclusion": conclusion, "chain": facts, "contradictions": contra,
                            "queries": ans, "inputs": path.display().to_string(), "version": VERSION}));
    } else {
        for f in kb.facts() {
            o.line(render(f));
            if o.trace {
                o.line(format!("    by: {}", f.rule.citation()));
            }
        }
        for (s, a) in &answers {
            match a {
                Some((true, id)) => o.line(format!("query {s}: L-space (#{id})")),
                Some((false, id)) => o.line(format!("query {s}: not an L-space (#{id})")),
                None => o.line(format!("query {s}: undetermined")),
            }
            if let (true, Some((_, id))) = (o.trace, a) {
                if *id != usize::MAX {
                    for line in kb.explain(*id) {
                        o.line(format!("    {line}"));
                    }
                }
            }
        }
        for c in &contradictions {
            o.line(format!("contradiction [{}]: {}", c.rule.code(), c.description));
            o.line(format!("    by: {}", c.rule.citation()));
            for f in kb.contradiction_chain(c) {
                o.line(format!("    {}", render(f)));
            }
        }
    }
    Ok(if contradictions.is_empty() { EXIT_OK } else { EXIT_INCONSISTENT })
}

fn component_phi1(table: &KnotTable, name: &str) -> Result<Rational> {
    phi1(&table.knot(name)?.conway, 1)
}

fn cmd_casson(o: &mut Out, a: CassonArgs) -> Result<i32> {
    let table = load_table(a.knots.as_deref())?;
    if let Some(name) = &a.knot {
        let k = table.knot(name)?;
        let l = casson_plus_one_surgery(&k.alexander);
        if o.json {
            o.emit_json(&json!({"conclusion": "computed", "lambda": rational_json(&l),
                "chain": [{"rule": "casson-surgery-formula", "claim": format!("λ(S^3_1({name})) = Δ''(1)/2")}],
                "inputs": {"knot": name, "alexander": poly_to_triples(&k.alexander)?}, "version": VERSION}));
        } else {
            o.line(format!("Δ_{name}(t) = {}", k.alexander));
            o.line(format!("λ(S^3_1({name})) = Δ''(1)/2 = {l}"));
        }
        return Ok(EXIT_OK);
    }
    let (Some(link), Some(m), Some(n)) = (a.link, a.m, a.n) else {
        return Err(Error::Parse("casson needs --knot, or --link with --m and --n".into()));
    };
    let (c1, c2, phi_l, conway_text) = if link == "Y-mn" {
        let v = y_mn_link().eval(&table)?;
        let phi_l = v
            .phi1_if_determined(2)
            .ok_or_else(|| Error::Inconsistent("φ1(L) is not determined by the skein recombination".into()))?;
        ("8_21m".to_string(), "11a20m".to_string(), phi_l, v.to_string())
    } else {
        let l = table.link(&link)?;
        if l.components.len() != 2 || l.linking != [0] {
            return Err(Error::Precondition(format!("{link} is not a two-component link with linking number 0")));
        }
        (l.components[0].clone(), l.components[1].clone(), l.phi1.clone(), l.conway.to_string())
    };
    let (p1, p2) = (component_phi1(&table, &c1)?, component_phi1(&table, &c2)?);
    let lambda = hoste_casson(m, n, &p1, &p2, &phi_l);
    if o.json {
        o.emit_json(&json!({
            "conclusion": "computed",
            "lambda": rational_json(&lambda),
            "chain": [
                {"rule": "skein-recombination", "claim": format!("∇_L = {conway_text}")},
                {"rule": "hoste-formula", "claim": "λ = -m φ1(K1) - n φ1(K2) + m n φ1(L)",
                 "phi1": [rational_json(&p1), rational_json(&p2), rational_json(&phi_l)]},
            ],
            "inputs": {"link": link, "m": m, "n": n},
            "version": VERSION,
        }));
    } else {
        o.line(format!("L = {c1} ∪ {c2}, linking number 0"));
        if o.trace {
            o.line(format!("∇_L = {conway_text}"));
        }
        o.line(format!("φ1({c1}) = {p1}, φ1({c2}) = {p2}, φ1(L) = {phi_l}"));
        o.line(format!("λ = {lambda}"));
    }
    Ok(EXIT_OK)
}

fn plumbing_lines(p: &Plumbing) -> Vec<String> {
    let mut v = vec![format!("  centre: {}", p.central)];
    for (i, c) in p.chains.iter().enumerate() {
        let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        v.push(format!("  arm {}: [{}]", i + 1, s.join(", ")));
    }
    v
}

fn cmd_seifert(o: &mut Out, text: &str) -> Result<i32> {
    let data: SeifertData = text.parse()?;
    let h1 = data.h1_order();
    let reversed = data.reverse();
    let diagram = seifert_stein_diagram(&data);
    let lspace = if h1 == 1 && data.num_fibers() >= 3 { Some(sfs_lspace_classify(&data)?) } else { None };
    let h1_text = if h1 == 0 { "infinite".to_string() } else { h1.to_string() };
    if o.json {
        let diag = match &diagram {
            Ok(SteinDiagram::Direct { plumbing, c1_nonzero }) => {
                json!({"orientation": data.to_string(), "plumbing": plumbing, "c1_nonzero": c1_nonzero})
            }
            Ok(SteinDiagram::Reversed { data: d, plumbing, c1_nonzero }) => {
                json!({"orientation": d.to_string(), "plumbing": plumbing, "c1_nonzero": c1_nonzero})
            }
            Err(e) => json!({"error": e.to_string()}),
        };
        let conclusion = match lspace {
            Some(true) => "instanton_l_space",
            Some(false) => "not_instanton_l_space",
            None => "unclassified",
        };
        o.emit_json(&json!({"conclusion": conclusion, "h1_order": h1, "reversal": reversed.to_string(),
            "chain": [{"rule": "stein-plumbing", "data": diag}], "inputs": data.to_string(), "version": VERSION}));
        return Ok(EXIT_OK);
    }
    o.line(data.to_string());
    o.line(format!("|H1| = {h1_text}"));
    o.line(format!("reversal: {reversed}"));
    match &diagram {
        Ok(SteinDiagram::Direct { plumbing, c1_nonzero }) => {
            o.line(format!("Legendrian plumbing for {data}:"));
            plumbing_lines(plumbing).into_iter().for_each(|l| o.line(l));
            o.line(format!("c1 != 0: {}", if *c1_nonzero { "yes" } else { "no" }));
        }
        Ok(SteinDiagram::Reversed { data: d, plumbing, c1_nonzero }) => {
            o.line(format!("Legendrian plumbing for {d}:"));
            plumbing_lines(plumbing).into_iter().for_each(|l| o.line(l));
            o.line(format!("c1 != 0: {}", if *c1_nonzero { "yes" } else { "no" }));
        }
        Err(e) => o.line(format!("plumbing: none ({e})")),
    }
    o.line(match lspace {
        Some(true) => "L-space: yes (±Σ(2,3,5))".to_string(),
        Some(false) => "L-space: no".to_string(),
        None if h1 == 1 => "L-space: yes (S^3)".to_string(),
        None => "L-space: not classified (not an integer homology sphere)".to_string(),
    });
    Ok(EXIT_OK)
}

fn cmd_donaldson(o: &mut Out, path: &Path) -> Result<i32> {
    let f: ModelFile = from_toml(&read(path)?)?;
    for m in &f.model {
        m.validate()?;
    }
    let mat = orthogonality_matrix(&f.model)?;
    let alphas: Vec<&Rational> = f.model.iter().map(|m| &m.canonical_class().alpha).collect();
    let diagonal = mat.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, x)| if i == j { x == alphas[i] } else { x.is_zero() })
    });
    if o.json {
        let rows: Vec<Vec<Value>> = mat.iter().map(|r| r.iter().map(rational_json).collect()).collect();
        o.emit_json(&json!({"conclusion": if diagonal { "diagonal" } else { "not_diagonal" }, "matrix": rows,
            "chain": [], "inputs": path.display().to_string(), "version": VERSION}));
    } else {
        for row in &mat {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            o.line(cells.join("\t"));
        }
        let a: Vec<String> = alphas.iter().map(|x| x.to_string()).collect();
        o.line(format!("diag(α) = [{}]: {}", a.join(", "), if diagonal { "yes" } else { "no" }));
    }
    Ok(if diagonal { EXIT_OK } else { EXIT_INCONSISTENT })
}

fn cmd_knot_table(o: &mut Out, action: TableAction) -> Result<i32> {
    match action {
        TableAction::List => {
            let t = KnotTable::builtin();
            if o.json {
                let rows: Vec<Value> = t
                    .knots()
                    .map(|k| {
                        json!({"name": k.name, "genus": k.genus, "alexander": k.alexander.to_string(),
                               "conway": k.conway.to_string(), "sl_bar_mirror": k.sl_bar_mirror,
                               "tb_bar_mirror": k.tb_bar_mirror, "mirror_positive": k.mirror_positive})
                    })
                    .collect();
                o.emit_json(&json!({"conclusion": "listed", "chain": [], "knots": rows, "inputs": null, "version": VERSION}));
            } else {
                for k in t.knots() {
                    let opt = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
                    o.line(format!(
                        "{:<12} g={:<2} sl={:<3} tb={:<3} Δ = {}",
                        k.name,
                        k.genus.map_or("-".to_string(), |g| g.to_string()),
                        opt(k.sl_bar_mirror),
                        opt(k.tb_bar_mirror),
                        k.alexander
                    ));
                }
                for l in t.links() {
                    o.line(format!("{:<12} link of {}, ∇ = {}", l.name, l.components.join(" ∪ "), l.conway));
                }
            }
        }
        TableAction::Validate { file } => {
            let t = load_table(file.as_deref())?;
            for k in t.knots() {
                k.validate()?;
            }
            for l in t.links() {
                l.validate()?;
            }
            let (nk, nl) = (t.knots().count(), t.links().count());
            if o.json {
                o.emit_json(&json!({"conclusion": "valid", "knots": nk, "links": nl, "chain": [],
                    "inputs": file.map(|p| p.display().to_string()), "version": VERSION}));
            } else {
                o.line(format!("ok: {nk} knots, {nl} links"));
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("su2cert").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn certify_five_two() {
        let (code, out, _) = run_capture(&["certify", "--knot", "5_2m", "--slope", "7/3"]);
        assert_eq!(code, 0);
        assert!(out.contains("irreducible_rep"));
    }

    #[test]
    fn casson_y_mn() {
        let (code, out, _) = run_capture(&["casson", "--link", "Y-mn", "--m", "3", "--n", "7"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("λ = 0"));
    }

    #[test]
    fn seifert_poincare() {
        let (code, out, _) = run_capture(&["seifert", "M(-2; 1/2, 2/3, 4/5)"]);
        assert_eq!(code, 0);
        assert!(out.contains("|H1| = 1"));
        assert!(out.contains("L-space: yes (±Σ(2,3,5))"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
        assert_eq!(run_capture(&["certify", "--knot", "5_2m", "--slope", "7/x"]).0, EXIT_PARSE);
        assert_eq!(run_capture(&["certify", "--knot", "4_1", "--slope", "1"]).0, EXIT_ABSTAIN);
        assert_eq!(run_capture(&["seifert", "M(-2; 1/2"]).0, EXIT_PARSE);
    }

    #[test]
    fn json_records() {
        let (_, out, _) = run_capture(&["--json", "certify", "--knot", "P(-2,3,7)m", "--slope", "-9/2"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["conclusion"], "irreducible_rep");
        assert_eq!(v["version"], VERSION);
        assert!(v["chain"].as_array().unwrap().len() >= 4);
        assert_eq!(v["inputs"]["slope"], "-9/2");
    }
}
