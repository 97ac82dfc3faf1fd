//! One function per subcommand, generic over the coefficient field.

use std::path::PathBuf;
use std::time::Instant;

use counit_core::cogroupoid::{check_transport_diagrams, nonvanishing_precheck, Cogroupoid};
use counit_core::comod::FreeYDModule;
use counit_core::homology::{
    bialgebra_cohomology, closed_form_dims, ext_dims, homology_dims, poincare_check, tor_bar_oracle, twist_gamma,
    CharacterBimodule,
};
use counit_core::hopf::{bilinear_relations, AxiomCheck};
use counit_core::resolution::{build_counit_resolution, exactness_witness, Components, ExactnessStatus, FreeYDComplex, Position};
use counit_core::scalar::trace_invariant;
use counit_core::{Alphabet, BilinearFormHopf, Character, Error, Field, FieldMatrix};
use serde_json::{json, Value};

use crate::cache::complete_cached;
use crate::config::{parse_matrix, CharacterSpec, NegativeControl, RunConfig};
use crate::error::CliError;
use crate::report::{CheckResult, Report, Status};
use crate::Command;

/// Rough memory cost of one basis element in the linear algebra, in bytes.
const BYTES_PER_BASIS_ELEMENT: usize = 512;

pub struct Context {
    pub config: RunConfig,
    pub cache_dir: Option<PathBuf>,
    pub check: bool,
    pub warnings: Vec<String>,
}

impl Context {
    fn budget_elements(&self) -> usize {
        match self.config.budget_mb {
            Some(mb) => mb.saturating_mul(1 << 20) / BYTES_PER_BASIS_ELEMENT,
            None => usize::MAX,
        }
    }

    fn require_budget(&self, what: &str, elements: usize) -> Result<(), CliError> {
        let limit = self.budget_elements();
        if elements > limit {
            return Err(Error::ResourceBudgetExceeded(format!("{what} needs {elements} basis elements, budget allows {limit}")).into());
        }
        Ok(())
    }

    fn form<F: Field>(&self) -> Result<FieldMatrix<F>, CliError> {
        parse_matrix(&self.config.e, "E")
    }

    fn second_form<F: Field>(&self) -> Result<FieldMatrix<F>, CliError> {
        match &self.config.f {
            Some(f) => parse_matrix(f, "F"),
            None => Err(CliError::Validation("this command needs a second form F".into())),
        }
    }

    fn hopf<F: Field>(&mut self) -> Result<BilinearFormHopf<F>, CliError> {
        let e = self.form::<F>()?;
        let n = e.rows();
        let rels = bilinear_relations(&e, &e)?;
        let alg = complete_cached(
            self.cache_dir.as_deref(),
            Alphabet::matrix("u", n, n),
            rels,
            self.config.truncation_degree,
            &mut self.warnings,
        )?;
        let words: usize = alg.filtration_dims().iter().sum();
        self.require_budget("the filtration basis", words.saturating_mul(n * n))?;
        let h = BilinearFormHopf::from_algebra(e, alg)?;
        Ok(match self.config.negative_control {
            Some(NegativeControl::BrokenAntipode) => {
                let images = h.antipode_images().iter().map(|p| p.neg()).collect();
                h.with_antipode_images(images)
            }
            _ => h,
        })
    }

    fn resolution<F: Field>(&self, h: &BilinearFormHopf<F>) -> Result<FreeYDComplex<F>, CliError> {
        let c = build_counit_resolution(h)?;
        Ok(match self.config.negative_control {
            Some(NegativeControl::SignFlippedPhi2) => c.with_sign_flipped_phi2(),
            _ => c,
        })
    }

    fn characters<F: Field>(&self, h: &BilinearFormHopf<F>) -> Result<CharacterBimodule<F>, CliError> {
        let alpha = character(h, self.config.alpha.as_ref())?;
        let beta = character(h, self.config.beta.as_ref())?;
        Ok(CharacterBimodule::new(alpha, beta))
    }
}

fn character<F: Field>(h: &BilinearFormHopf<F>, spec: Option<&CharacterSpec>) -> Result<Character<F>, CliError> {
    match spec {
        None => Ok(h.counit_character()),
        Some(CharacterSpec::Matrix(m)) => Ok(h.character(parse_matrix(m, "character")?)?),
        Some(CharacterSpec::Named(name)) => {
            let k = CharacterSpec::sovereign_power(name)
                .ok_or_else(|| CliError::Validation(format!("unknown character `{name}`")))?;
            let step = if k >= 0 { h.sovereign() } else { h.char_inv(&h.sovereign()) };
            let mut c = h.counit_character();
            for _ in 0..k.unsigned_abs() {
                c = h.char_mul(&c, &step);
            }
            Ok(c)
        }
    }
}

fn axiom_result(prefix: &str, c: &AxiomCheck) -> CheckResult {
    CheckResult::new(
        format!("{prefix}{}", c.name),
        Status::from_bool(c.passed),
        json!({ "checked": c.checked, "detail": c.detail }),
    )
}

fn matrix_json<F: Field>(m: &FieldMatrix<F>) -> Value {
    Value::from((0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn certified_json(d: usize) -> Value {
    if d == usize::MAX {
        json!("all")
    } else {
        json!(d)
    }
}

/// Runs `cmd` and appends its results to `report`.
pub fn run_command<F: Field>(cmd: Command, ctx: &mut Context, report: &mut Report) -> Result<(), CliError> {
    let start = Instant::now();
    match cmd {
        Command::Cogroupoid => return cogroupoid::<F>(ctx, report, start),
        Command::Transport => return transport::<F>(ctx, report, start),
        _ => {}
    }
    let h = ctx.hopf::<F>()?;
    report.timings.insert("build".into(), start.elapsed().as_secs_f64());
    let start = Instant::now();
    let cfg = ctx.config.clone();
    match cmd {
        Command::Gb => {
            let alg = h.algebra();
            report.push(CheckResult::new(
                "groebner-basis",
                Status::Pass,
                json!({
                    "rules": alg.rules().len(),
                    "complete": alg.is_complete(),
                    "collapsed": alg.is_collapsed(),
                    "certified_degree": certified_json(alg.certified_degree()),
                    "truncation_degree": alg.truncation_degree(),
                    "filtration_dims": alg.filtration_dims(),
                }),
            ));
        }
        Command::VerifyHopf => {
            let r = h.verify_hopf_axioms(cfg.degree.unwrap_or(2))?;
            for c in &r.checks {
                report.push(axiom_result("hopf-", c));
            }
        }
        Command::Resolution => resolution(ctx, &h, report)?,
        Command::Exactness => {
            let complex = ctx.resolution(&h)?;
            let d = cfg.degree.unwrap_or(3);
            let slack = cfg.slack.unwrap_or(2);
            let top = (d + slack + 1).min(h.algebra().truncation_degree());
            let coords: usize = h.algebra().filtration_dims()[..=top].iter().sum();
            ctx.require_budget("the exactness slice", coords.saturating_mul(h.n() * h.n()))?;
            let positions: Vec<Position> = match cfg.position {
                Some(p) => vec![Position::from_number(p).expect("validated")],
                None => vec![Position::KerPhi2, Position::KerPhi3, Position::KerEpsilon],
            };
            for p in positions {
                let c = exactness_witness(&h, &complex, p, d, slack)?;
                let status = match c.status {
                    ExactnessStatus::Certified => Status::Certified,
                    ExactnessStatus::Inconclusive => Status::Inconclusive,
                    ExactnessStatus::Refuted => Status::Fail,
                };
                report.push(CheckResult::new(
                    format!("exactness-position-{}", p.number()),
                    status,
                    json!({
                        "statement": p.to_string(),
                        "through_degree": c.through_degree,
                        "slack_used": c.slack_used,
                        "max_slack": c.max_slack,
                        "kernel_dim": c.kernel_dim,
                        "image_dim": c.image_dim,
                        "image_inputs": c.image_inputs,
                        "coordinates": c.coordinates,
                    }),
                ));
            }
        }
        Command::Homology => {
            let complex = ctx.resolution(&h)?;
            let m = ctx.characters(&h)?;
            let closed = closed_form_dims(&h, &m)?;
            let res = homology_dims(&h, &complex, &m)?;
            let phi2 = h.char_mul(&h.sovereign(), &h.sovereign());
            let h3_expected = m.alpha == h.char_mul(&m.beta, &phi2);
            report.push(CheckResult::new(
                "homology",
                Status::from_bool(closed.dims == res.dims),
                json!({
                    "alpha": matrix_json(m.alpha.matrix()),
                    "beta": matrix_json(m.beta.matrix()),
                    "closed-form": closed.dims,
                    "resolution": res.dims,
                    "agree": closed.dims == res.dims,
                }),
            ));
            report.push(CheckResult::new(
                "top-degree-criterion",
                Status::from_bool((res.dims[3] == 1) == h3_expected),
                json!({ "alpha_is_beta_times_phi_squared": h3_expected, "h3": res.dims[3] }),
            ));
        }
        Command::Ext => {
            let complex = ctx.resolution(&h)?;
            let m = ctx.characters(&h)?;
            let dims = ext_dims(&h, &complex, &m)?;
            report.push(CheckResult::new("ext", Status::Pass, json!({ "dims": dims })));
        }
        Command::Poincare => {
            let complex = ctx.resolution(&h)?;
            let m = ctx.characters(&h)?;
            let r = poincare_check(&h, &complex, &m)?;
            report.push(CheckResult::new(
                "poincare-duality",
                Status::from_bool(r.passed()),
                json!({ "cohomology": r.cohomology, "twisted_homology_reversed": r.twisted_homology }),
            ));
        }
        Command::BialgebraCohomology => {
            let complex = ctx.resolution(&h)?;
            let r = bialgebra_cohomology(&h, &complex, cfg.assume_cosemisimple)?;
            report.push(CheckResult::new(
                "bialgebra-cohomology",
                Status::Pass,
                json!({ "dims": r.dims, "hom_dims": r.hom_dims }),
            ));
        }
        Command::Oracle => {
            let complex = ctx.resolution(&h)?;
            let m = ctx.characters(&h)?;
            let gamma = twist_gamma(&h, &m.alpha, &m.beta)?;
            let k_max = cfg.k_max.unwrap_or(2);
            let degree = cfg.degree.unwrap_or(4);
            let oracle = tor_bar_oracle(&h, &gamma, k_max, degree, ctx.budget_elements())?;
            let res = homology_dims(&h, &complex, &m)?;
            for k in 0..=k_max.min(3) {
                let stable = oracle.stabilized_at[k];
                let status = match stable {
                    None => Status::Inconclusive,
                    Some(_) => Status::from_bool(oracle.dims[k] == res.dims[k]),
                };
                report.push(CheckResult::new(
                    format!("tor-{k}"),
                    status,
                    json!({
                        "bar-oracle": oracle.dims[k],
                        "resolution": res.dims[k],
                        "stabilized_at": stable,
                        "history": oracle.history.iter().map(|v| v[k]).collect::<Vec<_>>(),
                    }),
                ));
            }
        }
        Command::Cogroupoid | Command::Transport => unreachable!(),
    }
    report.timings.insert("command".into(), start.elapsed().as_secs_f64());
    Ok(())
}

fn resolution<F: Field>(ctx: &Context, h: &BilinearFormHopf<F>, report: &mut Report) -> Result<(), CliError> {
    let complex = ctx.resolution(h)?;
    let shapes: Vec<String> = (1..=3).map(|k| format!("{}x{}", complex.phi(k).rows(), complex.phi(k).cols())).collect();
    let components = Components::build(h)?;
    let (first, second) = components.composite_relations(h)?;
    report.push(CheckResult::new(
        "component-relations",
        Status::from_bool(first && second),
        json!({ "phi2'.phi1' = phi1''": first, "phi2'.phi1'' = phi1'": second }),
    ));
    let assembled = components.assemble(h)?;
    let diff = complex.first_difference(h, &assembled);
    report.push(CheckResult::new(
        "closed-form-vs-assembly",
        Status::from_bool(diff.is_none()),
        json!({ "map_shapes": shapes, "first_difference": diff }),
    ));
    if !ctx.check {
        return Ok(());
    }
    let r = complex.check_complex_and_morphisms(h, ctx.config.degree.unwrap_or(2))?;
    for c in &r.checks {
        report.push(axiom_result("", c));
    }
    for (k, module) in complex.modules().iter().take(2).enumerate() {
        let module: FreeYDModule<F> = match ctx.config.negative_control {
            Some(NegativeControl::OmittedYdLeg) => module.clone().with_antipode_leg_omitted(),
            _ => module.clone(),
        };
        let yd = module.yd_axiom_check(h, 0)?;
        report.push(CheckResult::new(
            format!("yd-axiom-P{k}"),
            Status::from_bool(yd.passed()),
            json!({ "checked": yd.checked, "detail": yd.failures.first() }),
        ));
    }
    Ok(())
}

fn precheck_result<F: Field>(e: &FieldMatrix<F>, f: &FieldMatrix<F>, cg: Option<&Cogroupoid<F>>) -> Result<CheckResult, CliError> {
    let value = nonvanishing_precheck(e, f)?;
    let collapsed = cg.map(|c| c.algebra(0, 1).is_zero());
    let consistent = collapsed.is_none_or(|z| z != value);
    Ok(CheckResult::new(
        "nonvanishing-precheck",
        Status::from_bool(consistent),
        json!({
            "nonvanishing": value,
            "trace_E": trace_invariant(e)?.to_string(),
            "trace_F": trace_invariant(f)?.to_string(),
            "algebra_collapsed": collapsed,
        }),
    ))
}

fn cogroupoid<F: Field>(ctx: &mut Context, report: &mut Report, start: Instant) -> Result<(), CliError> {
    let (e, f) = (ctx.form::<F>()?, ctx.second_form::<F>()?);
    let cg = Cogroupoid::build(vec![e.clone(), f.clone()], ctx.config.truncation_degree)?;
    report.timings.insert("build".into(), start.elapsed().as_secs_f64());
    let start = Instant::now();
    report.push(precheck_result(&e, &f, Some(&cg))?);
    let r = cg.verify_axioms(ctx.config.degree.unwrap_or(1))?;
    for c in &r.checks {
        report.push(axiom_result("cogroupoid-", c));
    }
    report.timings.insert("command".into(), start.elapsed().as_secs_f64());
    Ok(())
}

fn transport<F: Field>(ctx: &mut Context, report: &mut Report, start: Instant) -> Result<(), CliError> {
    let (e, f) = (ctx.form::<F>()?, ctx.second_form::<F>()?);
    report.push(precheck_result(&e, &f, None)?);
    let (te, tf) = (trace_invariant(&e)?, trace_invariant(&f)?);
    if te != tf {
        return Err(Error::TraceMismatch(te.to_string(), tf.to_string()).into());
    }
    let cg = Cogroupoid::build(vec![e, f], ctx.config.truncation_degree)?;
    report.timings.insert("build".into(), start.elapsed().as_secs_f64());
    let start = Instant::now();
    let r = check_transport_diagrams(&cg, 0, 1, ctx.config.degree.unwrap_or(1))?;
    for c in &r.checks {
        report.push(axiom_result("transport-", c));
    }
    report.timings.insert("command".into(), start.elapsed().as_secs_f64());
    Ok(())
}
