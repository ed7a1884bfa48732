//! The `mc` command-line front end.
//!
//! Exit status is 0 on success, 1 when a reasoning question is answered
//! negatively (a check fails, a postulate is violated) and 2 on input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::change::{el_evict_deepening, el_receive, evict_alc, receive_alc, revise_alc, ChangeRequest};
use crate::characteristic::dagger;
use crate::concept::{Concept, Dialect};
use crate::error::{Error, Result};
use crate::interpretation::{
    canonical_model, concept_of_tree, el_bot_satisfiable, model_check, PointedInterpretation,
};
use crate::oracle::{
    check_postulates, mod_set, symmetric_differential_minima, FiniteUniverse, FrFamily, Operation, Run,
    UniverseLimits,
};
use crate::relations::{alc_entails, alc_satisfiable, bisimilar, el_subsumes, k_bisimilar_over};
use crate::scenarios::{run_demo, Demo, DEMO_NAMES};
use crate::signature::Signature;
use crate::syntax::parse_concept;

#[derive(Parser, Debug)]
#[command(name = "mc", version, about = "Model change for EL⊥ and ALC concepts")]
struct Cli {
    #[command(flatten)]
    inputs: Inputs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct Inputs {
    /// Signature file ({"concepts": [...], "roles": [...]})
    #[arg(long, global = true)]
    sig: Option<PathBuf>,
    /// Pointed interpretation file; repeatable
    #[arg(long = "model", global = true)]
    models: Vec<PathBuf>,
    /// Concept text; repeatable where two concepts are needed
    #[arg(long = "concept", global = true)]
    concepts: Vec<String>,
    /// File holding concept text, one concept per file
    #[arg(long = "concept-file", global = true)]
    concept_files: Vec<PathBuf>,
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and print a concept in normal form
    Parse,
    /// Evaluate a concept at the point of each model
    Eval,
    /// Decide (k-)bisimilarity of two models
    Bisim {
        #[arg(long)]
        k: Option<usize>,
    },
    /// Decide whether the first concept is subsumed by the second
    Subsume {
        /// Use the ALC tableau instead of the EL⊥ homomorphism test
        #[arg(long)]
        tableau: bool,
    },
    /// Decide satisfiability of a concept
    Sat,
    /// Decide whether the first concept entails the second (ALC)
    Entail,
    /// Print the canonical model of an EL⊥ concept
    Canonical,
    /// Print the EL concept describing a tree-shaped model
    Tree2concept,
    /// Print the characteristic ALC concept of an EL⊥ concept
    Dagger,
    /// Incorporate the positive models of a request
    Receive {
        #[arg(long)]
        request: PathBuf,
        /// Use the least-common-subsumer EL⊥ operator
        #[arg(long)]
        el: bool,
    },
    /// Remove the negative models of a request
    Evict {
        #[arg(long)]
        request: PathBuf,
        /// Use the deepening EL⊥ operator along this role
        #[arg(long)]
        el_role: Option<String>,
    },
    /// Incorporate the positive and remove the negative models at once
    Revise {
        #[arg(long)]
        request: PathBuf,
    },
    /// Brute-force finite-universe oracle
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Run the worked examples
    Demo {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(DEMO_NAMES), required_unless_present = "all")]
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        all: bool,
    },
}

#[derive(Args, Debug)]
struct UniverseArgs {
    /// Tree depth of the universe
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Number of generated concept names, when no signature is given
    #[arg(long)]
    nc: Option<usize>,
    /// Number of generated role names, when no signature is given
    #[arg(long)]
    nr: Option<usize>,
    /// Class budget; lifts the default signature and depth caps
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Fragment {
    Alc,
    El,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OpName {
    Receive,
    Evict,
    Revise,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// List one representative per class of the universe
    Enumerate {
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// The set of universe classes satisfying a concept
    Modset {
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Closest representable candidates for a request
    Chi {
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long)]
        request: PathBuf,
        #[arg(long, value_enum, default_value_t = Fragment::Alc)]
        fragment: Fragment,
    },
    /// Check the postulates of an ALC operator on a request
    Postulates {
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long)]
        request: PathBuf,
        #[arg(long, value_enum)]
        op: OpName,
    },
}

/// Runs `mc` with the given arguments (program name first) on the process's
/// standard streams and returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv.into_iter().map(Into::into).collect::<Vec<OsString>>()) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<bool> {
    let Cli { inputs, command } = cli;
    match command {
        Command::Parse => {
            let c = inputs.concept()?;
            if inputs.json {
                emit_json(
                    out,
                    &json!({
                        "concept": c.to_string(),
                        "depth": c.depth(),
                        "dialect": c.dialect().as_str(),
                        "signature": c.signature(),
                    }),
                )?;
            } else {
                writeln!(out, "{c}")?;
            }
            Ok(true)
        }
        Command::Eval => {
            let c = inputs.concept()?;
            let models = inputs.models()?;
            if models.is_empty() {
                return Err(Error::Usage("eval needs at least one --model".into()));
            }
            let answers: Vec<bool> = models.iter().map(|pi| model_check(pi, &c)).collect();
            if inputs.json {
                emit_json(out, &json!({ "concept": c.to_string(), "results": answers }))?;
            } else {
                for a in &answers {
                    writeln!(out, "{a}")?;
                }
            }
            Ok(answers.iter().all(|&a| a))
        }
        Command::Bisim { k } => {
            let models = inputs.models()?;
            let [p1, p2] = two(models, "--model")?;
            let sig = match inputs.signature()? {
                Some(sig) => sig,
                None => p1.signature().union(&p2.signature())?,
            };
            let answer = match k {
                Some(k) => k_bisimilar_over(&p1, &p2, k, &sig),
                None => bisimilar(&p1, &p2, &sig).is_some(),
            };
            answer_line(out, inputs.json, "bisimilar", answer)
        }
        Command::Subsume { tableau } => {
            let [c, d] = two(inputs.concept_list()?, "--concept")?;
            let answer = if tableau {
                alc_entails(&c, &d)
            } else {
                el_subsumes(&c, &d)?
            };
            answer_line(out, inputs.json, "subsumed", answer)
        }
        Command::Sat => {
            let c = inputs.concept()?;
            let answer = if c.dialect() <= Dialect::ElBot {
                el_bot_satisfiable(&c)?
            } else {
                alc_satisfiable(&c)
            };
            answer_line(out, inputs.json, "satisfiable", answer)
        }
        Command::Entail => {
            let [c, d] = two(inputs.concept_list()?, "--concept")?;
            answer_line(out, inputs.json, "entails", alc_entails(&c, &d))
        }
        Command::Canonical => {
            let pi = canonical_model(&inputs.concept()?)?;
            emit_json(out, &pi.to_json_value())?;
            Ok(true)
        }
        Command::Tree2concept => {
            let [pi] = exactly::<1, _>(inputs.models()?, "--model")?;
            concept_line(out, inputs.json, &concept_of_tree(&pi)?)
        }
        Command::Dagger => {
            let c = inputs.concept()?;
            let sig = inputs.signature()?.unwrap_or_else(|| c.signature());
            concept_line(out, inputs.json, &dagger(&c, &sig)?)
        }
        Command::Receive { request, el } => {
            let req = load_request(&request)?;
            let result = if el {
                el_receive(&req.base, &req.positives)?
            } else {
                receive_alc(&req.base, &req.positives, &req.signature)?
            };
            concept_line(out, inputs.json, &result)
        }
        Command::Evict { request, el_role } => {
            let req = load_request(&request)?;
            let result = match el_role {
                Some(role) => el_evict_deepening(&req.base, &req.negatives, &role)?,
                None => evict_alc(&req.base, &req.negatives, &req.signature)?,
            };
            concept_line(out, inputs.json, &result)
        }
        Command::Revise { request } => {
            let req = load_request(&request)?;
            concept_line(out, inputs.json, &revise_alc(&req)?)
        }
        Command::Oracle { command } => oracle(command, &inputs, out),
        Command::Demo { name, all } => {
            let names: Vec<&str> = if all {
                DEMO_NAMES.to_vec()
            } else {
                vec![name.as_deref().unwrap_or_default()]
            };
            let demos = names.into_iter().map(run_demo).collect::<Result<Vec<Demo>>>()?;
            if inputs.json {
                let reports: Vec<Value> = demos.iter().map(demo_json).collect();
                emit_json(out, &Value::Array(reports))?;
            } else {
                for (i, demo) in demos.iter().enumerate() {
                    if i > 0 {
                        writeln!(out)?;
                    }
                    write_demo(out, demo)?;
                }
            }
            Ok(demos.iter().all(Demo::passed))
        }
    }
}

fn oracle(command: OracleCommand, inputs: &Inputs, out: &mut dyn Write) -> Result<bool> {
    match command {
        OracleCommand::Enumerate { universe } => {
            let u = build_universe(&universe, inputs.signature()?)?;
            if inputs.json {
                let classes: Vec<Value> = (0..u.len())
                    .map(|i| json!({ "class": i, "description": u.description(i).to_string(), "model": u.model(i).to_json_value() }))
                    .collect();
                emit_json(
                    out,
                    &json!({ "signature": u.signature(), "k": u.depth(), "classes": classes }),
                )?;
            } else {
                writeln!(
                    out,
                    "{} classes over {}, depth {}",
                    u.len(),
                    u.signature(),
                    u.depth()
                )?;
                for i in 0..u.len() {
                    writeln!(out, "{i}: {}", u.description(i))?;
                }
            }
            Ok(true)
        }
        OracleCommand::Modset { universe } => {
            let c = inputs.concept()?;
            let sig = match inputs.signature()? {
                Some(sig) => sig,
                None if universe.nc.is_some() || universe.nr.is_some() => generated(&universe)?,
                None => c.signature(),
            };
            let u = build_universe(&universe, Some(sig))?;
            let set = mod_set(&c, &u)?;
            if inputs.json {
                emit_json(
                    out,
                    &json!({ "concept": c.to_string(), "classes": set.iter().collect::<Vec<_>>(), "bits": set.to_bit_string() }),
                )?;
            } else {
                writeln!(out, "{set}")?;
            }
            Ok(true)
        }
        OracleCommand::Chi {
            universe,
            request,
            fragment,
        } => {
            let req = load_request(&request)?;
            let u = build_universe(&universe, Some(req.signature.clone()))?;
            let fr = match fragment {
                Fragment::Alc => FrFamily::alc(&u),
                Fragment::El => FrFamily::el(&u, u.depth(), true),
            };
            let b = mod_set(&req.base, &u)?;
            let plus = u.set_of(&req.positives)?;
            let minus = u.set_of(&req.negatives)?;
            let (case, minima) = symmetric_differential_minima(&b, &plus, &minus, &fr)?;
            if inputs.json {
                let minima: Vec<Value> = minima
                    .iter()
                    .map(|m| {
                        json!({
                            "classes": m.iter().collect::<Vec<_>>(),
                            "concept": fr.witness(m).map(Concept::to_string),
                        })
                    })
                    .collect();
                emit_json(out, &json!({ "case": case.as_str(), "minima": minima }))?;
            } else {
                writeln!(out, "case ({})", case.as_str())?;
                for m in &minima {
                    match fr.witness(m) {
                        Some(w) => writeln!(out, "{m} {w}")?,
                        None => writeln!(out, "{m}")?,
                    }
                }
            }
            Ok(true)
        }
        OracleCommand::Postulates {
            universe,
            request,
            op,
        } => {
            let req = load_request(&request)?;
            let u = build_universe(&universe, Some(req.signature.clone()))?;
            let (operation, output) = match op {
                OpName::Receive => (
                    Operation::Reception,
                    receive_alc(&req.base, &req.positives, &req.signature)?,
                ),
                OpName::Evict => (
                    Operation::Eviction,
                    evict_alc(&req.base, &req.negatives, &req.signature)?,
                ),
                OpName::Revise => (Operation::Revision, revise_alc(&req)?),
            };
            let run = Run {
                base: mod_set(&req.base, &u)?,
                positives: u.set_of(&req.positives)?,
                negatives: u.set_of(&req.negatives)?,
                output: mod_set(&output, &u)?,
            };
            let verdicts = check_postulates(operation, &run, &FrFamily::alc(&u));
            if inputs.json {
                let reports: Vec<Value> = verdicts.iter().map(|v| v.to_json(&u)).collect();
                emit_json(out, &Value::Array(reports))?;
            } else {
                writeln!(out, "output: {output}")?;
                for v in &verdicts {
                    let status = if v.pass { "pass" } else { "fail" };
                    let scope = if v.postulate.fragment_relative() {
                        " (fragment-relative)"
                    } else {
                        ""
                    };
                    match v.witness {
                        Some(w) if !v.pass => writeln!(
                            out,
                            "{}: {status}{scope}, witness class {w}: {}",
                            v.postulate.as_str(),
                            u.description(w)
                        )?,
                        _ => writeln!(out, "{}: {status}{scope}", v.postulate.as_str())?,
                    }
                }
            }
            Ok(verdicts.iter().all(|v| v.pass))
        }
    }
}

impl Inputs {
    fn signature(&self) -> Result<Option<Signature>> {
        self.sig
            .as_deref()
            .map(|p| Signature::from_json(&read(p)?))
            .transpose()
    }

    fn concept_list(&self) -> Result<Vec<Concept>> {
        let sig = self.signature()?;
        let mut texts = self.concepts.clone();
        for path in &self.concept_files {
            texts.push(read(path)?);
        }
        texts
            .iter()
            .map(|t| match &sig {
                Some(sig) => parse_concept(t, sig),
                None => t.parse(),
            })
            .collect()
    }

    fn concept(&self) -> Result<Concept> {
        let [c] = exactly::<1, _>(self.concept_list()?, "--concept or --concept-file")?;
        Ok(c)
    }

    fn models(&self) -> Result<Vec<PointedInterpretation>> {
        let sig = self.signature()?;
        self.models
            .iter()
            .map(|path| {
                let pi = PointedInterpretation::from_json(&read(path)?)?;
                if let Some(sig) = &sig {
                    pi.interpretation().check_signature(sig)?;
                }
                Ok(pi)
            })
            .collect()
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_request(path: &Path) -> Result<ChangeRequest> {
    ChangeRequest::from_json(&read(path)?)
}

fn generated(args: &UniverseArgs) -> Result<Signature> {
    Signature::generated(args.nc.unwrap_or(0), args.nr.unwrap_or(0))
}

fn build_universe(args: &UniverseArgs, sig: Option<Signature>) -> Result<FiniteUniverse> {
    let sig = match sig {
        Some(sig) => sig,
        None => generated(args)?,
    };
    let limits = args
        .budget
        .map_or_else(UniverseLimits::default, UniverseLimits::budget);
    FiniteUniverse::new(&sig, args.k, &limits)
}

fn exactly<const N: usize, T>(items: Vec<T>, flag: &str) -> Result<[T; N]> {
    let len = items.len();
    items
        .try_into()
        .map_err(|_| Error::Usage(format!("expected {N} value(s) for {flag}, got {len}")))
}

fn two<T>(items: Vec<T>, flag: &str) -> Result<[T; 2]> {
    exactly::<2, T>(items, flag)
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn answer_line(out: &mut dyn Write, json: bool, key: &str, answer: bool) -> Result<bool> {
    if json {
        emit_json(out, &json!({ key: answer }))?;
    } else {
        writeln!(out, "{answer}")?;
    }
    Ok(answer)
}

fn concept_line(out: &mut dyn Write, json: bool, c: &Concept) -> Result<bool> {
    if json {
        emit_json(out, &json!({ "concept": c.to_string() }))?;
    } else {
        writeln!(out, "{c}")?;
    }
    Ok(true)
}

fn write_demo(out: &mut dyn Write, demo: &Demo) -> Result<()> {
    writeln!(out, "{}: {}", demo.name, demo.summary)?;
    for line in &demo.lines {
        writeln!(out, "  {line}")?;
    }
    for check in &demo.checks {
        writeln!(
            out,
            "  [{}] {}",
            if check.pass { "ok" } else { "FAIL" },
            check.label
        )?;
    }
    Ok(())
}

fn demo_json(demo: &Demo) -> Value {
    json!({
        "name": demo.name,
        "summary": demo.summary,
        "lines": demo.lines,
        "checks": demo.checks.iter().map(|c| json!({ "label": c.label, "pass": c.pass })).collect::<Vec<_>>(),
        "pass": demo.passed(),
    })
}
