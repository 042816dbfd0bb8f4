use std::path::Path;

use deformation_ladder::check_hypotheses;
use galois_rings::is_prime;
use local_tame::LocalCondition;
use root_data::RootDatum;

use crate::config::{Config, Params, Verb};
use crate::data::{designations, expected_similitudes, residual_data, residue_field, similitude_exponent, surrogate_ladder};
use crate::error::CliError;
use crate::example::{run_example, ExamplePlan};
use crate::local::local_checks;
use crate::oracle::{closure_oracle, commutator_identity, saturation_trials};
use crate::report::{Check, LadderStage, Report};

const DEFAULT_EXAMPLE_EXPONENTS: [i64; 4] = [3, 0, 6, 9];

/// Executes the verb named in `config`.
pub fn run(config: &Config) -> Result<Report, CliError> {
    match config.verb {
        Verb::CheckHypotheses => run_check_hypotheses(config),
        Verb::Gsp4Example => run_gsp4_example(config),
        Verb::Lift => run_lift(config),
        Verb::LocalTame => run_local_tame(config),
        Verb::Oracle => run_oracle(config),
    }
}

/// Loads a config file (flags in `overrides` win) and runs it.
pub fn run_path(path: &Path, default_verb: Option<Verb>, overrides: &Params) -> Result<Report, CliError> {
    run(&Config::load(path, default_verb)?.with_overrides(overrides))
}

fn prime(config: &Config, default: u64) -> Result<u64, CliError> {
    let p = config.params.p.unwrap_or(default);
    if !is_prime(p) || p == 2 {
        return Err(config.field_error("p", format!("{p} is not an odd prime")));
    }
    Ok(p)
}

fn rank(config: &Config, allowed: &[usize]) -> Result<usize, CliError> {
    let n = config.params.n.unwrap_or(2);
    if !allowed.contains(&n) {
        return Err(config.field_error("n", format!("n = {n} is not supported here (allowed: {allowed:?})")));
    }
    Ok(n)
}

fn prime_field_only(config: &Config) -> Result<(), CliError> {
    match config.params.q_degree {
        None | Some(1) => Ok(()),
        Some(k) => Err(config.field_error("q_degree", format!("this verb works over F_p only, got degree {k}"))),
    }
}

fn exponents(config: &Config, n: usize) -> Result<Vec<i64>, CliError> {
    let e = match &config.params.exponents {
        Some(e) => e.clone(),
        None if n == 2 => DEFAULT_EXAMPLE_EXPONENTS.to_vec(),
        None => return Err(config.field_error("exponents", format!("required for n = {n}"))),
    };
    if e.len() != 2 * n {
        return Err(config.field_error("exponents", format!("expected {} entries, got {}", 2 * n, e.len())));
    }
    similitude_exponent(&e).map_err(|err| config.field_error("exponents", err.to_string()))?;
    Ok(e)
}

fn precision(config: &Config, default: u32, range: std::ops::RangeInclusive<u32>) -> Result<u32, CliError> {
    let m = config.params.precision.unwrap_or(default);
    if !range.contains(&m) {
        return Err(config.field_error("precision", format!("{m} is outside {range:?}")));
    }
    Ok(m)
}

fn run_check_hypotheses(config: &Config) -> Result<Report, CliError> {
    let p = prime(config, 23)?;
    let n = rank(config, &[1, 2, 3])?;
    let e = exponents(config, n)?;
    let f = residue_field(p, config.params.q_degree.unwrap_or(1))?;
    let datum = RootDatum::new(n);
    let data = residual_data(&datum, &f, &e)?;
    let assumptions = config.params.assumptions.clone().unwrap_or_default();
    let h = check_hypotheses(&datum, &data, &designations(&f, n, data.len(), assumptions))?;
    let mut report = Report::new(config.verb.as_str(), config.params.clone());
    report.push(Check::new(
        "residual data",
        true,
        format!("F_{} with t = diag(g^e), e = {e:?}, unipotent generators exp(X) on simple roots", f.q()),
    ));
    report.add_hypotheses(&h);
    Ok(report)
}

fn run_gsp4_example(config: &Config) -> Result<Report, CliError> {
    prime_field_only(config)?;
    rank(config, &[2])?;
    let p = config.params.p.unwrap_or(23);
    let mut plan = ExamplePlan {
        p,
        regular_prime_assumed: config.params.regular_prime_assumed.unwrap_or(true),
        precision: config.params.precision.unwrap_or(3),
        exponents: DEFAULT_EXAMPLE_EXPONENTS,
        similitude_exponent: 9,
        kappa_k: config.params.kappa_k.unwrap_or(p.saturating_mul(p.saturating_sub(1))),
    };
    if let Some(e) = &config.params.exponents {
        let arr: [i64; 4] = e.as_slice().try_into().map_err(|_| config.field_error("exponents", "expected 4 entries"))?;
        plan.exponents = arr;
        plan.similitude_exponent = similitude_exponent(e).map_err(|err| config.field_error("exponents", err.to_string()))?;
    }
    let mut report = run_example(&plan)?.report;
    report.params = config.params.clone();
    for a in config.params.assumptions.clone().unwrap_or_default() {
        report.assume("user assumption", &a);
    }
    Ok(report)
}

fn run_lift(config: &Config) -> Result<Report, CliError> {
    prime_field_only(config)?;
    let p = prime(config, 23)?;
    let n = rank(config, &[1, 2, 3])?;
    let e = exponents(config, n)?;
    let m = precision(config, 3, 1..=8)?;
    let k = config.params.kappa_k.unwrap_or(p * (p - 1));
    if k % (p - 1) != 0 {
        return Err(config.field_error("kappa_k", format!("{k} is not a multiple of p - 1")));
    }
    let datum = RootDatum::new(n);
    let trace = surrogate_ladder(&datum, p, &e, m, k, None)?;
    let mut report = Report::new(config.verb.as_str(), config.params.clone());
    let mut sims_ok = true;
    for s in &trace.stages {
        sims_ok &= s.ladder.similitudes()? == expected_similitudes(&s.ladder)?;
        report.ladder.push(LadderStage::from_ladder(&s.name, &s.ladder));
    }
    report.push(Check::new("similitudes", sims_ok, "nu = kappa on every generator at every stage"));
    match &trace.obstruction {
        None => report.push(Check::new("ladder", trace.top().precision() == m, format!("reached precision {}", trace.top().precision()))),
        Some(w) => {
            let f = trace.top().ring().residue_field();
            report.push(
                Check::new("ladder", false, format!("obstructed at precision {}", w.precision)).with_certificate(vec![format!(
                    "functional {:?}",
                    w.certificate.iter().map(|x| f.render(x)).collect::<Vec<_>>()
                )]),
            )
        }
    }
    report.assume("surrogate cocycles", "global cocycles are realized on the surrogate group with f(u_i) = X_{alpha_i}");
    Ok(report)
}

fn run_local_tame(config: &Config) -> Result<Report, CliError> {
    prime_field_only(config)?;
    let p = prime(config, 5)?;
    let n = rank(config, &[1, 2])?;
    let v = config.params.v.unwrap_or_else(|| (2..).map(|k| 1 + k * p).find(|&v| is_prime(v) && v % (p * p) != 1).unwrap());
    let m = precision(config, 3, 2..=3)?;
    let kinds = match config.params.local_condition.as_deref().unwrap_or("both") {
        "both" => vec![LocalCondition::Unramified, LocalCondition::Ramified],
        s => vec![s.parse::<LocalCondition>().map_err(|_| config.field_error("local_condition", format!("expected nr, ram or both, got {s:?}")))?],
    };
    let checks = local_checks(n, p, v, &kinds, m).map_err(|e| match e {
        CliError::Config { field, message, .. } => config.field_error(&field, message),
        other => other,
    })?;
    let mut report = Report::new(config.verb.as_str(), config.params.clone());
    for c in checks {
        report.push(c);
    }
    Ok(report)
}

fn run_oracle(config: &Config) -> Result<Report, CliError> {
    prime_field_only(config)?;
    rank(config, &[2])?;
    let p = config.params.p.unwrap_or(5);
    if !is_prime(p) {
        return Err(config.field_error("p", format!("{p} is not prime")));
    }
    let seed = config.params.seed.unwrap_or(0);
    let trials = config.params.trials.unwrap_or(100);
    let mut report = Report::new(config.verb.as_str(), config.params.clone());
    let c = commutator_identity(p)?;
    report.push(
        Check::new("commutator identity", c.failures.is_empty(), format!("{} cases, {} failures", c.cases, c.failures.len()))
            .with_certificate(c.failures),
    );
    let s = saturation_trials(p, trials, seed)?;
    let short: Vec<String> = s.orders.iter().filter(|&&o| o != s.expected).map(|o| format!("order {o}")).collect();
    report.push(
        Check::new(
            "subgroup saturation",
            s.all_saturate(),
            format!("{} of {} trials reach |U1| = {}", trials - short.len(), trials, s.expected),
        )
        .with_certificate(short),
    );
    let cl = closure_oracle(p, &DEFAULT_EXAMPLE_EXPONENTS, trials.max(200), seed)?;
    report.push(Check::new(
        "stable closure",
        cl.failures.is_empty(),
        format!(
            "{} random and {} eigenvector seeds with nonzero X_{{-2L1}} coordinate; {} closures fall short of Ad0",
            cl.random_seeds,
            cl.eigen_seeds,
            cl.failures.len()
        ),
    ));
    Ok(report)
}
