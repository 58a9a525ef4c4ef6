//! Batch front end over the tensaheyt library. Every verb maps to one
//! library pipeline and prints a fixed-order plain text report, one
//! finding per line; `--json` emits the same data structurally. Exit
//! codes: 0 when every check passed or the query was answered, 1 when
//! a check failed or the input is not the structure it claims to be,
//! 2 for usage and format problems.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use tensaheyt::bitset::ElemSet;
use tensaheyt::builders::{chain, ej2, extreme, frame_algebra, DEFAULT_MAX_ELEMENTS};
use tensaheyt::congruence::congruence_lattice;
use tensaheyt::duality::{
    check_morphism_equivalence, dual_morphism, dual_space, epsilon, sigma, DualityError,
};
use tensaheyt::filter::enumerate_filters;
use tensaheyt::formula::Formula;
use tensaheyt::logic::{
    countermodel_search, eval, frame_family, is_valid, lddt_check, standard_corpus, Assignment,
    EvalError, LddtOutcome, Validity,
};
use tensaheyt::morphism::{check_tense_homomorphism, AlgebraMorphism};
use tensaheyt::report::CheckReport;
use tensaheyt::tense::{check_axioms, check_derived_laws, TenseHAlgebra};
use tensaheyt::text::{
    parse_algebra, parse_assignment, parse_map, resolve_elements, serialize_algebra,
    serialize_space,
};
use tensaheyt::tfilter::{
    enumerate_tense_filters, generated_tense_filter, is_simple, is_subdirectly_irreducible,
};

#[derive(Parser)]
#[command(
    name = "tensaheyt",
    version,
    about = "Finite checks for Heyting algebras with negative tense operators"
)]
struct Cli {
    /// Emit the report as one JSON object instead of text lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Scan the axioms T1..T8 and the derived laws T9..T14.
    Check { file: PathBuf },
    /// List the lattice filters, or only the tense ones.
    Filters {
        file: PathBuf,
        /// Keep only the tense filters.
        #[arg(long)]
        tense: bool,
    },
    /// List the tense congruences beside their filters.
    Congruences { file: PathBuf },
    /// Decide simplicity and subdirect irreducibility.
    Simple { file: PathBuf },
    /// Tense filter generated by the listed elements.
    Generate {
        file: PathBuf,
        /// Comma-separated element names; empty generates the trivial filter.
        #[arg(long, value_name = "ELEMS", default_value = "")]
        from: String,
    },
    /// Dual space of an algebra, in the space text format.
    Dualize {
        file: PathBuf,
        /// Write to this file instead of standard output.
        #[arg(short, value_name = "SPACEFILE")]
        out: Option<PathBuf>,
    },
    /// Verify both canonical isomorphisms on an algebra.
    Roundtrip { file: PathBuf },
    /// Check a map between two algebras and its dual presentations.
    Morphism {
        alg1: PathBuf,
        alg2: PathBuf,
        mapfile: PathBuf,
        /// Run the homomorphism and dual morphism report.
        #[arg(long)]
        check: bool,
    },
    /// Evaluate a formula under an assignment.
    Eval {
        file: PathBuf,
        formula: String,
        /// Assignment like x1=a,x2=b over the algebra's element names.
        #[arg(long, value_name = "BINDINGS", default_value = "")]
        assign: String,
    },
    /// Scan every assignment for a countermodel in one algebra.
    Valid { file: PathBuf, formula: String },
    /// Search a family of algebras for a countermodel.
    Countermodel {
        formula: String,
        /// Search the standard corpus (the default).
        #[arg(long, conflicts_with = "frames")]
        corpus: bool,
        /// Search all frame algebras on up to N points instead.
        #[arg(long, value_name = "N")]
        frames: Option<usize>,
    },
    /// Local deduction detachment on explicit premise sets.
    Lddt {
        file: PathBuf,
        /// Comma-separated element names, may be empty.
        #[arg(long, value_name = "ELEMS", default_value = "")]
        gamma: String,
        /// Comma-separated element names, may be empty.
        #[arg(long, value_name = "ELEMS", default_value = "")]
        delta: String,
        /// Single element name.
        #[arg(long, value_name = "ELEM")]
        psi: String,
    },
    /// Write a stock algebra in the algebra text format.
    #[command(name = "gen-example")]
    GenExample {
        /// One of: ej2, extreme:CHAIN_N, frame:N or frame:N:EDGELIST
        /// with EDGELIST like 1>2,2>1 on 1-based points.
        which: String,
        #[arg(short, value_name = "FILE")]
        out: PathBuf,
    },
}

/// Early failures, split by exit code. Check failures are not errors;
/// they come back as FAIL lines inside a normal report.
enum CliError {
    /// Exit 2: unreadable files, malformed text, bad arguments, caps.
    Format(String),
    /// Exit 1: well-formed input that is not the structure it claims.
    Math(String),
}

struct Output {
    lines: Vec<String>,
    json: Value,
    code: i32,
}

/// Writes the report, swallowing a broken pipe: a consumer that closed
/// early already has what it wanted, and the exit code still stands.
fn emit(out: &Output, json: bool) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    let res = if json {
        writeln!(w, "{}", out.json)
    } else {
        out.lines.iter().try_for_each(|line| writeln!(w, "{line}"))
    };
    if let Err(e) = res {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(out) => {
            emit(&out, cli.json);
            out.code
        }
        Err(CliError::Format(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Math(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    };
    std::process::exit(code);
}

fn size_cap() -> Result<usize, CliError> {
    match std::env::var("TENSAHEYT_MAX_ELEMENTS") {
        Ok(v) => v.parse().map_err(|_| {
            CliError::Format(format!(
                "TENSAHEYT_MAX_ELEMENTS must be a nonnegative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_ELEMENTS),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

fn load_tense(path: &Path, cap: usize) -> Result<TenseHAlgebra, CliError> {
    let doc = parse_algebra(&read_file(path)?, cap)
        .map_err(|e| CliError::Format(format!("{}: {e}", path.display())))?;
    doc.tense()
        .map_err(|e| CliError::Math(format!("{}: {e}", path.display())))
}

fn parse_formula(src: &str) -> Result<Formula, CliError> {
    Formula::parse(src).map_err(|e| CliError::Format(e.to_string()))
}

fn eval_failure(e: EvalError) -> CliError {
    CliError::Format(e.to_string())
}

fn text_failure(e: tensaheyt::text::TextError) -> CliError {
    CliError::Format(e.to_string())
}

fn names_of(a: &TenseHAlgebra) -> Vec<String> {
    (0..a.n()).map(|i| a.name(i).to_string()).collect()
}

/// The whole carrier prints as `A`, anything else as braced names.
fn render_members(names: &[String], members: &ElemSet) -> String {
    if members.card() == names.len() {
        return "A".to_string();
    }
    let picked: Vec<&str> = members.iter().map(|i| names[i].as_str()).collect();
    format!("{{{}}}", picked.join(" "))
}

fn member_names<'a>(names: &'a [String], members: &ElemSet) -> Vec<&'a String> {
    members.iter().map(|i| &names[i]).collect()
}

fn render_assignment(a: &TenseHAlgebra, m: &Assignment) -> String {
    m.iter()
        .map(|(v, &e)| format!("x{v}={}", a.name(e)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn assignment_json(a: &TenseHAlgebra, m: &Assignment) -> Value {
    let entries: serde_json::Map<String, Value> = m
        .iter()
        .map(|(v, &e)| (format!("x{v}"), json!(a.name(e))))
        .collect();
    Value::Object(entries)
}

/// Flattens check reports into one line per clause; any FAIL sets the
/// exit code.
fn report_output(verb: &str, reports: &[CheckReport]) -> Output {
    let mut lines = Vec::new();
    let mut clauses = Vec::new();
    let mut pass = true;
    for r in reports {
        for c in &r.clauses {
            lines.push(c.render());
            clauses.push(json!({"id": c.id, "pass": c.passed(), "witness": c.witness}));
            pass &= c.passed();
        }
    }
    Output {
        lines,
        json: json!({"verb": verb, "clauses": clauses, "pass": pass}),
        code: if pass { 0 } else { 1 },
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let cap = size_cap()?;
    match &cli.verb {
        Verb::Check { file } => {
            let a = load_tense(file, cap)?;
            Ok(report_output("check", &[check_axioms(&a), check_derived_laws(&a)]))
        }
        Verb::Filters { file, tense } => {
            let a = load_tense(file, cap)?;
            let names = names_of(&a);
            let filters = if *tense {
                enumerate_tense_filters(&a).map_err(|e| CliError::Math(e.to_string()))?
            } else {
                enumerate_filters(a.alg.lattice())
            };
            let lines: Vec<String> =
                filters.iter().map(|f| render_members(&names, &f.members)).collect();
            let items: Vec<Value> = filters
                .iter()
                .map(|f| {
                    json!({
                        "generator": names[f.generator],
                        "elements": member_names(&names, &f.members),
                    })
                })
                .collect();
            Ok(Output {
                lines,
                json: json!({"verb": "filters", "tense": tense, "filters": items}),
                code: 0,
            })
        }
        Verb::Congruences { file } => {
            let a = load_tense(file, cap)?;
            let names = names_of(&a);
            let pairs = congruence_lattice(&a).map_err(|e| CliError::Math(e.to_string()))?;
            let mut lines = Vec::new();
            let mut items = Vec::new();
            for (f, c) in &pairs {
                let blocks: Vec<ElemSet> =
                    c.representatives().into_iter().map(|r| c.class_of(r)).collect();
                let rendered: Vec<String> = blocks
                    .iter()
                    .map(|b| {
                        let picked: Vec<&str> = b.iter().map(|i| names[i].as_str()).collect();
                        format!("{{{}}}", picked.join(" "))
                    })
                    .collect();
                lines.push(format!(
                    "{} : {}",
                    render_members(&names, &f.members),
                    rendered.join(" ")
                ));
                items.push(json!({
                    "filter": {
                        "generator": names[f.generator],
                        "elements": member_names(&names, &f.members),
                    },
                    "blocks": blocks
                        .iter()
                        .map(|b| member_names(&names, b))
                        .collect::<Vec<_>>(),
                }));
            }
            Ok(Output {
                lines,
                json: json!({"verb": "congruences", "entries": items}),
                code: 0,
            })
        }
        Verb::Simple { file } => {
            let a = load_tense(file, cap)?;
            let sv = is_simple(&a);
            let si = is_subdirectly_irreducible(&a);
            let mut lines = Vec::new();
            lines.push(match sv.witness {
                None => "SIMPLE PASS".to_string(),
                Some(w) => format!("SIMPLE FAIL x={}", a.name(w)),
            });
            lines.push(match si.bound {
                Some(b) => format!("SI PASS bound={}", a.name(b)),
                None => "SI FAIL".to_string(),
            });
            let code = if sv.simple && si.subdirectly_irreducible { 0 } else { 1 };
            Ok(Output {
                lines,
                json: json!({
                    "verb": "simple",
                    "simple": sv.simple,
                    "witness": sv.witness.map(|w| a.name(w).to_string()),
                    "subdirectly_irreducible": si.subdirectly_irreducible,
                    "bound": si.bound.map(|b| a.name(b).to_string()),
                }),
                code,
            })
        }
        Verb::Generate { file, from } => {
            let a = load_tense(file, cap)?;
            let names = names_of(&a);
            let elems = resolve_elements(from, &a).map_err(text_failure)?;
            let set = ElemSet::from_indices(a.n(), elems);
            let f = generated_tense_filter(&a, &set);
            Ok(Output {
                lines: vec![format!("GENERATED {}", render_members(&names, &f.members))],
                json: json!({
                    "verb": "generate",
                    "generator": names[f.generator],
                    "elements": member_names(&names, &f.members),
                }),
                code: 0,
            })
        }
        Verb::Dualize { file, out } => {
            let a = load_tense(file, cap)?;
            let d = dual_space(&a);
            let text = serialize_space(&d.space);
            let mut lines = Vec::new();
            if let Some(path) = out {
                write_file(path, &text)?;
            } else {
                lines.push(text.trim_end().to_string());
            }
            let x = &d.space;
            let name = |i: usize| x.name(i).to_string();
            Ok(Output {
                lines,
                json: json!({
                    "verb": "dualize",
                    "points": (0..x.n()).map(name).collect::<Vec<_>>(),
                    "covers": x.poset().covers().iter()
                        .map(|&(l, u)| [name(l), name(u)]).collect::<Vec<_>>(),
                    "rel": x.edges().iter()
                        .map(|&(s, t)| [name(s), name(t)]).collect::<Vec<_>>(),
                    "wrote": out.as_ref().map(|p| p.display().to_string()),
                }),
                code: 0,
            })
        }
        Verb::Roundtrip { file } => {
            let a = load_tense(file, cap)?;
            let mut lines = Vec::new();
            let mut verdicts = Vec::new();
            let sigma_result = sigma(&a, cap).map(|_| ());
            let eps_result = match &sigma_result {
                Err(DualityError::TooManyUpsets { cap }) => {
                    return Err(CliError::Format(format!("dual carrier exceeds cap {cap}")))
                }
                _ => epsilon(&dual_space(&a).space, cap).map(|_| ()),
            };
            for (tag, r) in [("SIGMA", sigma_result), ("EPSILON", eps_result)] {
                match r {
                    Ok(()) => {
                        lines.push(format!("{tag} PASS"));
                        verdicts.push(true);
                    }
                    Err(e) => {
                        lines.push(format!("{tag} FAIL {e}"));
                        verdicts.push(false);
                    }
                }
            }
            let pass = verdicts.iter().all(|&v| v);
            Ok(Output {
                lines,
                json: json!({"verb": "roundtrip", "sigma": verdicts[0], "epsilon": verdicts[1]}),
                code: if pass { 0 } else { 1 },
            })
        }
        Verb::Morphism { alg1, alg2, mapfile, check } => {
            if !check {
                return Err(CliError::Format(
                    "morphism only runs checks; pass --check".to_string(),
                ));
            }
            let a1 = load_tense(alg1, cap)?;
            let a2 = load_tense(alg2, cap)?;
            let map = parse_map(&read_file(mapfile)?, &names_of(&a1), &names_of(&a2))
                .map_err(text_failure)?;
            let k = AlgebraMorphism { map };
            let hom = check_tense_homomorphism(&a1, &a2, &k);
            if !hom.passed() {
                return Ok(report_output("morphism", &[hom]));
            }
            let dm = dual_morphism(&a1, &a2, &k).map_err(|e| CliError::Math(e.to_string()))?;
            let eq = check_morphism_equivalence(&dm.source.space, &dm.target.space, &dm.map);
            if !eq.verdicts_agree() {
                return Err(CliError::Math(
                    "pointwise and setwise morphism verdicts disagree".to_string(),
                ));
            }
            Ok(report_output("morphism", &[hom, eq.heyting, eq.pointwise, eq.setwise]))
        }
        Verb::Eval { file, formula, assign } => {
            let a = load_tense(file, cap)?;
            let f = parse_formula(formula)?;
            let m = parse_assignment(assign, &a).map_err(text_failure)?;
            let v = eval(&f, &a, &m).map_err(eval_failure)?;
            Ok(Output {
                lines: vec![a.name(v).to_string()],
                json: json!({"verb": "eval", "value": a.name(v)}),
                code: 0,
            })
        }
        Verb::Valid { file, formula } => {
            let a = load_tense(file, cap)?;
            let f = parse_formula(formula)?;
            match is_valid(&f, &a).map_err(eval_failure)? {
                Validity::Valid => Ok(Output {
                    lines: vec!["VALID PASS".to_string()],
                    json: json!({"verb": "valid", "valid": true, "witness": null}),
                    code: 0,
                }),
                Validity::Invalid { assignment } => {
                    let w = render_assignment(&a, &assignment);
                    let line = if w.is_empty() {
                        "VALID FAIL".to_string()
                    } else {
                        format!("VALID FAIL {w}")
                    };
                    Ok(Output {
                        lines: vec![line],
                        json: json!({
                            "verb": "valid",
                            "valid": false,
                            "witness": assignment_json(&a, &assignment),
                        }),
                        code: 1,
                    })
                }
            }
        }
        Verb::Countermodel { formula, corpus: _, frames } => {
            let f = parse_formula(formula)?;
            let entries = match frames {
                // 2^(N*N) relations and 2^N elements per frame; N >= 8
                // is out regardless of the element cap
                Some(points) => {
                    if *points >= 8 || (1usize << points) > cap {
                        return Err(CliError::Format(format!(
                            "cannot search frames on {points} points under cap {cap}"
                        )));
                    }
                    frame_family(*points)
                }
                None => standard_corpus(),
            };
            match countermodel_search(&f, &entries).map_err(eval_failure)? {
                Some((name, assignment)) => {
                    let entry = entries.iter().find(|e| e.name == name).expect("name from search");
                    let w = render_assignment(&entry.algebra, &assignment);
                    let line = if w.is_empty() {
                        format!("COUNTERMODEL FOUND {name}")
                    } else {
                        format!("COUNTERMODEL FOUND {name} {w}")
                    };
                    Ok(Output {
                        lines: vec![line],
                        json: json!({
                            "verb": "countermodel",
                            "algebra": name,
                            "witness": assignment_json(&entry.algebra, &assignment),
                        }),
                        code: 0,
                    })
                }
                None => Ok(Output {
                    lines: vec!["COUNTERMODEL NONE".to_string()],
                    json: json!({"verb": "countermodel", "algebra": null, "witness": null}),
                    code: 0,
                }),
            }
        }
        Verb::Lddt { file, gamma, delta, psi } => {
            let a = load_tense(file, cap)?;
            let g = resolve_elements(gamma, &a).map_err(text_failure)?;
            let d = resolve_elements(delta, &a).map_err(text_failure)?;
            let psis = resolve_elements(psi, &a).map_err(text_failure)?;
            let [target] = psis[..] else {
                return Err(CliError::Format("--psi must name exactly one element".to_string()));
            };
            match lddt_check(&a, &g, &d, target) {
                LddtOutcome::DegenerateEmptyDelta { lhs } => Ok(Output {
                    lines: vec![format!("LDDT DEGENERATE lhs={lhs}")],
                    json: json!({"verb": "lddt", "degenerate": true, "lhs": lhs}),
                    code: 0,
                }),
                LddtOutcome::Equivalent { lhs, witness } => {
                    let rhs = witness.is_some();
                    let mut line = format!("LDDT PASS lhs={lhs} rhs={rhs}");
                    let wj = witness.map(|w| {
                        let subset: Vec<&str> =
                            w.subset.iter().map(|&x| a.name(x)).collect();
                        line.push_str(&format!(" k={} subset={{{}}}", w.k, subset.join(" ")));
                        json!({"k": w.k, "subset": subset})
                    });
                    Ok(Output {
                        lines: vec![line],
                        json: json!({
                            "verb": "lddt",
                            "degenerate": false,
                            "lhs": lhs,
                            "rhs": rhs,
                            "witness": wj,
                        }),
                        code: 0,
                    })
                }
            }
        }
        Verb::GenExample { which, out } => {
            let a = build_example(which, cap)?;
            write_file(out, &serialize_algebra(&a))?;
            Ok(Output {
                lines: Vec::new(),
                json: json!({"verb": "gen-example", "wrote": out.display().to_string()}),
                code: 0,
            })
        }
    }
}

fn build_example(which: &str, cap: usize) -> Result<TenseHAlgebra, CliError> {
    if which == "ej2" {
        return Ok(ej2());
    }
    if let Some(rest) = which.strip_prefix("extreme:") {
        let k: usize = rest
            .parse()
            .map_err(|_| CliError::Format(format!("bad chain length {rest:?}")))?;
        if k < 2 {
            return Err(CliError::Format("chains need at least 2 elements".to_string()));
        }
        if k > cap {
            return Err(CliError::Format(format!("chain has {k} elements, cap is {cap}")));
        }
        return extreme(chain(k)).map_err(|e| CliError::Math(e.to_string()));
    }
    if let Some(rest) = which.strip_prefix("frame:") {
        let (points_str, edges_str) = match rest.split_once(':') {
            Some((p, e)) => (p, e),
            None => (rest, ""),
        };
        let points: usize = points_str
            .parse()
            .map_err(|_| CliError::Format(format!("bad point count {points_str:?}")))?;
        let mut edges = Vec::new();
        for tok in edges_str.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let parsed = tok.split_once('>').and_then(|(i, j)| {
                Some((i.trim().parse::<usize>().ok()?, j.trim().parse::<usize>().ok()?))
            });
            let Some(edge) = parsed else {
                return Err(CliError::Format(format!(
                    "bad edge {tok:?}, expected I>J with 1-based points"
                )));
            };
            edges.push(edge);
        }
        return frame_algebra(points, &edges, cap).map_err(|e| CliError::Format(e.to_string()));
    }
    Err(CliError::Format(format!(
        "unknown example {which:?}; use ej2, extreme:CHAIN_N, or frame:N:EDGELIST"
    )))
}
