//! `samod`: command line front end for finite semiring modules.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use samod_core::action::ActionTable;
use samod_core::algebra::ModuleDocument;
use samod_core::exchange::{exchange_partition, TupleSpace};
use samod_core::extensions::{extension_report, find_d_complements};
use samod_core::fixtures::{fixture, parse, retraction_spec, Expr};
use samod_core::harness::{
    closure_crosscheck, generate_instances, hierarchy_pipeline, run_suite, InstanceSpec, Report,
};
use samod_core::lattice::{enumerate_sa_in_v, enumerate_submodules, sa_closure, submodule, subtractive_hull, whole};
use samod_core::order::{coset_maximal, d_isolated, minimal_cosets, quotient, NaturalOrder};
use samod_core::retraction::build_from_retraction;
use samod_core::{FiniteModule, Mask, Submodule};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "samod", version, about = "Summand-absorbing submodules, exchange equivalence and amalgamation")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Default)]
struct Opts {
    /// Fixture expression (e.g. `B2`, `CHAIN(3)`) or a JSON module file.
    #[arg(long, global = true)]
    module: Option<String>,
    /// Factor submodules, e.g. `{0,1};{0,2}`.
    #[arg(long, global = true)]
    factors: Option<String>,
    #[arg(long = "A", global = true)]
    a: Option<String>,
    #[arg(long = "D", global = true)]
    d: Option<String>,
    #[arg(long = "T", global = true)]
    t: Option<String>,
    /// Additively closed sets `S₁;…;S_r` for `hierarchy`.
    #[arg(long = "S", global = true)]
    s: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    budget: usize,
    /// `all`, a suite name, a theorem id, or a comma list of these.
    #[arg(long, global = true, default_value = "all")]
    suite: String,
    #[arg(long, global = true)]
    json: bool,
    #[arg(long = "dump-classes", global = true)]
    dump_classes: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// Check the semiring and module axioms.
    Validate,
    /// List all submodules.
    Submodules,
    /// List the SA submodules, or test `--A`.
    Sa,
    /// Exchange classes and the amalgamation verdict of `--factors`.
    Am,
    /// Subtractive hull of `--D`.
    Hull,
    /// SA-closure of `--D`.
    Closure,
    /// All `D`-complements of `--A` in the module.
    Complement,
    /// Extension report for `--A ⊇ --D` against `--T`.
    Ext,
    /// Natural order, archimedean classes and, with `--D`, the coset structure.
    Order,
    /// Build the monoid of a set retraction `RETRACT([phi],[order])`.
    Retraction,
    /// Translation and quotient actions with their `C_α` sets.
    Action,
    /// Union-find against BFS and the congruence oracle on generated spaces.
    Fuzz,
    /// Run the theorem registry on generated or pinned instances.
    Suite,
    /// Amalgam of `--factors` and the `C̄` hierarchy of `--S`.
    Hierarchy,
}

/// A finished command: its output and whether it found a violation.
struct Done {
    value: Value,
    text: String,
    violation: bool,
}

impl Done {
    fn ok(value: Value, text: String) -> Self {
        Done { value, text, violation: false }
    }
}

fn load_module(src: &str) -> Result<FiniteModule> {
    let path = std::path::Path::new(src);
    if path.is_file() {
        let raw = std::fs::read_to_string(path).with_context(|| format!("reading {src}"))?;
        let doc: ModuleDocument = serde_json::from_str(&raw).with_context(|| format!("parsing {src}"))?;
        return Ok(doc.into_module()?);
    }
    Ok(fixture(src)?)
}

fn parse_set(src: &str) -> Result<Vec<usize>> {
    let src = src.trim();
    let wrapped = if src.starts_with('{') { src.to_string() } else { format!("{{{src}}}") };
    match parse(&wrapped)? {
        Expr::Set(v) => Ok(v),
        _ => bail!("expected a set such as {{0,1}}, got `{src}`"),
    }
}

fn parse_sets(src: &str) -> Result<Vec<Vec<usize>>> {
    src.split(';').filter(|s| !s.trim().is_empty()).map(parse_set).collect()
}

fn fmt_set(xs: impl IntoIterator<Item = usize>) -> String {
    format!("{{{}}}", xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn list(m: Mask) -> Vec<usize> {
    m.iter().collect()
}

struct Env {
    opts: Opts,
    module: Option<FiniteModule>,
}

impl Env {
    fn module(&self) -> Result<&FiniteModule> {
        self.module.as_ref().ok_or_else(|| anyhow!("--module is required"))
    }

    fn sub(&self, flag: &str, src: &Option<String>) -> Result<Submodule<'_>> {
        let src = src.as_deref().ok_or_else(|| anyhow!("--{flag} is required"))?;
        let m = self.module()?;
        let xs = parse_set(src)?;
        if let Some(x) = xs.iter().find(|&&x| x >= m.size()) {
            bail!("--{flag}: element {x} is out of range");
        }
        Ok(submodule(m, xs.into_iter().collect()).with_context(|| format!("--{flag}"))?)
    }

    fn opt_sub(&self, flag: &str, src: &Option<String>) -> Result<Option<Submodule<'_>>> {
        src.as_ref().map(|_| self.sub(flag, src)).transpose()
    }

    fn factors(&self) -> Result<Vec<Submodule<'_>>> {
        let src = self.opts.factors.as_deref().ok_or_else(|| anyhow!("--factors is required"))?;
        let m = self.module()?;
        parse_sets(src)?
            .into_iter()
            .enumerate()
            .map(|(k, xs)| {
                if xs.iter().any(|&x| x >= m.size()) {
                    bail!("factor {} has an out-of-range element", k + 1);
                }
                Ok(submodule(m, xs.into_iter().collect()).with_context(|| format!("factor {}", k + 1))?)
            })
            .collect()
    }
}

fn validate(env: &Env) -> Result<Done> {
    let m = env.module()?;
    let ring = m.ring().validate();
    let module = m.validate();
    let ok = ring.ok() && module.ok();
    let text = format!("semiring: {}\nmodule: {}", verdict(ring.ok()), verdict(module.ok()));
    Ok(Done { value: json!({"ok": ok, "semiring": ring, "module": module}), text, violation: !ok })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "violated"
    }
}

fn submodules(env: &Env) -> Result<Done> {
    let all = enumerate_submodules(env.module()?)?;
    let sets: Vec<Vec<usize>> = all.iter().map(|s| list(s.mask())).collect();
    let text = format!("{} submodules\n{}", sets.len(), lines(&sets));
    Ok(Done::ok(json!({"count": sets.len(), "submodules": sets}), text))
}

fn lines(sets: &[Vec<usize>]) -> String {
    sets.iter().map(|s| fmt_set(s.iter().copied())).collect::<Vec<_>>().join("\n")
}

fn sa(env: &Env) -> Result<Done> {
    let m = env.module()?;
    let v = whole(m);
    if let Some(a) = env.opt_sub("A", &env.opts.a)? {
        let witness = a.sa_witness(&v)?;
        let text = match witness {
            None => format!("{} is SA", fmt_set(a.mask().iter())),
            Some((x, y)) => format!("{} is not SA: {x} + {y} lies in it", fmt_set(a.mask().iter())),
        };
        return Ok(Done::ok(json!({"set": list(a.mask()), "is_sa": witness.is_none(), "witness": witness}), text));
    }
    let all = enumerate_submodules(m)?;
    let sa = enumerate_sa_in_v(&all, &v, &all[0])?;
    let sets: Vec<Vec<usize>> = sa.iter().map(|s| list(s.mask())).collect();
    let text = format!("{} of {} submodules are SA\n{}", sets.len(), all.len(), lines(&sets));
    Ok(Done::ok(json!({"submodules": all.len(), "count": sets.len(), "sa": sets}), text))
}

fn am(env: &Env) -> Result<Done> {
    let space = TupleSpace::new(env.factors()?)?;
    let part = exchange_partition(&space)?;
    let verdict = part.amalgamation();
    let mut text = format!(
        "amalgamation: {}\nclasses: {}",
        if verdict.has_am { "yes" } else { "no" },
        verdict.class_count
    );
    if let Some((a, b)) = &verdict.certificate {
        text += &format!("\ncertificate: {a:?} and {b:?} have the same sum");
    }
    let mut value = serde_json::to_value(&verdict)?;
    if env.opts.dump_classes {
        value["classes"] = serde_json::to_value(part.classes_as_tuples())?;
        for c in part.classes_as_tuples() {
            text += &format!("\n{c:?}");
        }
    }
    Ok(Done::ok(value, text))
}

fn hull(env: &Env, closure: bool) -> Result<Done> {
    let d = env.sub("D", &env.opts.d)?;
    let h = if closure { sa_closure(&d) } else { subtractive_hull(&d) };
    let text = fmt_set(h.mask().iter());
    Ok(Done::ok(json!({"D": list(d.mask()), "result": list(h.mask())}), text))
}

fn complement(env: &Env) -> Result<Done> {
    let w = env.sub("A", &env.opts.a)?;
    let d = env.sub("D", &env.opts.d)?;
    let all = enumerate_submodules(env.module()?)?;
    let found: Vec<Vec<usize>> = find_d_complements(&all, &w, &d)?.iter().map(|t| list(t.mask())).collect();
    let text = format!("{} D-complements\n{}", found.len(), lines(&found));
    Ok(Done::ok(json!({"W": list(w.mask()), "D": list(d.mask()), "complements": found}), text))
}

fn ext(env: &Env) -> Result<Done> {
    let a = env.sub("A", &env.opts.a)?;
    let d = env.sub("D", &env.opts.d)?;
    let t = env.opt_sub("T", &env.opts.t)?;
    let rep = extension_report(&a, &d, t.as_ref())?;
    let value = serde_json::to_value(&rep)?;
    Ok(Done::ok(value.clone(), serde_json::to_string_pretty(&value)?))
}

fn order(env: &Env) -> Result<Done> {
    let m = env.module()?;
    let no = NaturalOrder::new(m);
    let mut value = json!({
        "upper_bound": no.is_upper_bound(),
        "lacks_zero_sums": m.is_lzs(),
        "relation": no.relation(),
        "archimedean_classes": no.arch_partition(),
    });
    let mut text = format!(
        "upper bound: {}\nlacks zero sums: {}\narchimedean classes: {:?}",
        no.is_upper_bound(),
        m.is_lzs(),
        no.arch_partition()
    );
    if let Some(d) = env.opt_sub("D", &env.opts.d)? {
        let v = whole(m);
        let fix = coset_maximal(&v.as_set(), &d);
        let mins = minimal_cosets(&v, &d);
        let iso = d_isolated(&d);
        value["D"] = json!({
            "fix": fix.as_ref().ok().map(|f| list(f.mask())),
            "minimal_cosets": mins.as_ref().ok().map(|c| c.iter().map(|s| list(s.mask())).collect::<Vec<_>>()),
            "isolated": list(iso.mask()),
        });
        match (fix, mins) {
            (Ok(fix), Ok(mins)) => {
                text += &format!("\nFix_D(V): {}\nminimal D-cosets: {}", fmt_set(fix.mask().iter()), mins.len());
            }
            _ => text += "\n≤_D is not antisymmetric",
        }
        text += &format!("\nD-isolated: {}", fmt_set(iso.mask().iter()));
    }
    Ok(Done::ok(value, text))
}

fn retraction(env: &Env) -> Result<Done> {
    let src = env.opts.module.as_deref().ok_or_else(|| anyhow!("--module is required"))?;
    let spec = retraction_spec(src)?;
    let (m, rep) = build_from_retraction(&spec)?;
    let ok = rep.ok();
    let text = format!("{} elements\n{}", m.size(), serde_json::to_string_pretty(&rep)?);
    Ok(Done { value: json!({"size": m.size(), "report": rep}), text, violation: !ok })
}

fn action(env: &Env) -> Result<Done> {
    let m = env.module()?;
    let q = quotient(m).ok();
    let mut acts = Vec::new();
    if NaturalOrder::new(m).is_upper_bound() {
        acts.push(("translation", ActionTable::translation(m)));
    }
    if let Some(q) = &q {
        acts.push(("quotient", ActionTable::quotient_projection(m, q)));
    }
    let mut out = BTreeMap::new();
    let mut text = String::new();
    let mut violation = false;
    for (name, a) in &acts {
        let rep = a.validate();
        violation |= !rep.ok();
        let c: Vec<Vec<usize>> = a.target().elements().map(|s| list(a.c_alpha(s).mask())).collect();
        text += &format!("{name}: {}\n", verdict(rep.ok()));
        for (s, cs) in c.iter().enumerate() {
            text += &format!("  C({s}) = {}\n", fmt_set(cs.iter().copied()));
        }
        out.insert(*name, json!({"valid": rep, "c_alpha": c}));
    }
    if acts.is_empty() {
        text = "no action applies".into();
    }
    Ok(Done { value: serde_json::to_value(out)?, text: text.trim_end().to_string(), violation })
}

fn fuzz(env: &Env) -> Result<Done> {
    let rep = closure_crosscheck(env.opts.seed, env.opts.budget)?;
    let text = format!(
        "spaces: {} (largest {} tuples)\nBFS mismatches: {}\ncongruence checked: {}, mismatches: {}",
        rep.spaces,
        rep.largest,
        rep.bfs_mismatches.len(),
        rep.congruence_checked,
        rep.congruence_mismatches.len()
    );
    Ok(Done { value: serde_json::to_value(&rep)?, violation: !rep.ok(), text })
}

/// A single pinned instance from the command line selections.
fn pinned_spec(env: &Env, module: &str) -> Result<InstanceSpec> {
    let o = &env.opts;
    let mut sel = BTreeMap::new();
    for (name, src) in [("A", &o.a), ("D", &o.d), ("T", &o.t)] {
        if let Some(s) = src {
            sel.insert(name.to_string(), parse_set(s)?);
        }
    }
    let mut spaces = Vec::new();
    if let Some(f) = &o.factors {
        let names: Vec<String> = (1..=parse_sets(f)?.len()).map(|k| format!("A{k}")).collect();
        for (k, xs) in parse_sets(f)?.into_iter().enumerate() {
            sel.insert(names[k].clone(), xs);
        }
        spaces.push(names);
    }
    let mut spec = InstanceSpec::pinned(module, sel);
    spec.spaces = spaces;
    spec.seed = o.seed;
    if let Ok(r) = retraction_spec(module) {
        spec.retraction = r;
    }
    Ok(spec)
}

fn suite(env: &Env) -> Result<Done> {
    let o = &env.opts;
    let (specs, seed, budget) = match &o.module {
        Some(m) => (vec![pinned_spec(env, m)?], None, None),
        None => (generate_instances(o.seed, o.budget), Some(o.seed), Some(o.budget)),
    };
    for s in &specs {
        s.build()?;
    }
    let result = run_suite(&o.suite, &specs)?;
    let mut text = String::new();
    for t in &result.theorems {
        text += &format!(
            "{:<9} non-vacuous {:>4}  vacuous {:>4}  violations {:>4}{}\n",
            t.id,
            t.non_vacuous,
            t.vacuous,
            t.violations,
            if t.known_false { "  (known false)" } else { "" }
        );
    }
    text += &format!(
        "{} instances, {} violating theorems, {:.1}s",
        result.instances_run,
        result.violating_ids().len(),
        result.wall_time.as_secs_f64()
    );
    let violation = !result.passed();
    let report = Report::new(seed, budget, result);
    Ok(Done { value: serde_json::to_value(&report)?, text, violation })
}

fn hierarchy(env: &Env) -> Result<Done> {
    let m = env.module()?;
    let factors = parse_sets(env.opts.factors.as_deref().ok_or_else(|| anyhow!("--factors is required"))?)?;
    let gens = parse_sets(env.opts.s.as_deref().ok_or_else(|| anyhow!("--S is required"))?)?;
    let rep = hierarchy_pipeline(m, &factors, &gens)?;
    let value = serde_json::to_value(&rep)?;
    Ok(Done { text: serde_json::to_string_pretty(&value)?, value, violation: !rep.ok() })
}

fn run(cli: Cli) -> Result<Done> {
    let module = match (&cli.verb, &cli.opts.module) {
        (Verb::Retraction | Verb::Suite, _) | (_, None) => None,
        (_, Some(src)) => Some(load_module(src)?),
    };
    let env = Env { opts: cli.opts, module };
    match cli.verb {
        Verb::Validate => validate(&env),
        Verb::Submodules => submodules(&env),
        Verb::Sa => sa(&env),
        Verb::Am => am(&env),
        Verb::Hull => hull(&env, false),
        Verb::Closure => hull(&env, true),
        Verb::Complement => complement(&env),
        Verb::Ext => ext(&env),
        Verb::Order => order(&env),
        Verb::Retraction => retraction(&env),
        Verb::Action => action(&env),
        Verb::Fuzz => fuzz(&env),
        Verb::Suite => suite(&env),
        Verb::Hierarchy => hierarchy(&env),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.opts.json;
    match run(cli) {
        Ok(done) => {
            let out = if json { serde_json::to_string_pretty(&done.value).expect("plain JSON") } else { done.text };
            // a closed pipe (`samod ... | head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::from(u8::from(done.violation))
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
