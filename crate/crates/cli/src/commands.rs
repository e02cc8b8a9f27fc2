//! The four pipeline commands.

use std::time::Instant;

use serde_json::{json, Value};

use sympair_core::lie::Subspace;
use sympair_core::pbw::{commutativity_check, verify_rouviere_homomorphism, Defect};
use sympair_core::polarization::{
    construct_polarization, pukanszky_check, sample_generic_forms, verify_polarization, BaseCase,
    Polarization,
};
use sympair_core::poly::{j_half, j_series, TruncSeries};
use sympair_core::scalar::parse;
use sympair_core::sympair::{named_form, PForm, SymmetricPair};

use crate::error::CliError;
use crate::input::{resolve_target, Target};
use crate::report::{element, poly, scalar, vector, Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    CheckPair,
    Polarize,
    Rouviere,
    Jfunction,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckPair => "check-pair",
            Command::Polarize => "polarize",
            Command::Rouviere => "rouviere",
            Command::Jfunction => "jfunction",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: Option<u64>,
    pub count: usize,
    pub degree: usize,
    pub form: Option<String>,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: None,
            count: 20,
            degree: 4,
            form: None,
            timing: false,
        }
    }
}

pub fn run(command: Command, target: &str, opts: &Options) -> Result<Report, CliError> {
    let start = Instant::now();
    // Usage problems are reported before any input is read.
    if command == Command::Jfunction && opts.degree % 2 == 1 {
        return Err(CliError::Usage(format!(
            "--degree must be even for jfunction, got {}",
            opts.degree
        )));
    }
    let target = resolve_target(target)?;
    let mut report = match command {
        Command::CheckPair => check_pair(&target),
        Command::Polarize => polarize(&target, opts)?,
        Command::Rouviere => rouviere(&target, opts.degree),
        Command::Jfunction => jfunction(&target, opts.degree)?,
    };
    if opts.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

fn base_report(command: Command, target: &Target, seed: Option<u64>, parameters: Value) -> Report {
    Report {
        command: command.name().into(),
        target: target.name.clone(),
        input_digest: target.digest.clone(),
        seed,
        parameters,
        checks: Vec::new(),
        data: Value::Null,
        timing_ms: None,
    }
}

fn check_pair(target: &Target) -> Report {
    let pair = &target.pair;
    let mut report = base_report(Command::CheckPair, target, None, json!({}));
    for c in pair.structural_report().checks {
        report.checks.push(Check::new(c.id, c.passed).detail(c.detail));
    }
    report.data = json!({
        "dim": pair.dim(),
        "dim_k": pair.dim_k(),
        "dim_p": pair.dim_p(),
        "k_basis": pair.k_labels(),
        "p_basis": pair.p_labels(),
        "delta": vector(&pair.delta_character()),
        "has_form": pair.form().is_some(),
        "anti_invariant": pair.is_anti_invariant(),
    });
    report
}

fn parse_form(pair: &SymmetricPair, text: &str) -> Result<PForm, CliError> {
    if let Some(f) = named_form(pair, text) {
        return Ok(f);
    }
    let coords: Option<Vec<_>> = text.split(',').map(|s| parse(s.trim())).collect();
    match coords {
        Some(c) if c.len() == pair.dim_p() => Ok(PForm::new(c)),
        Some(c) => Err(CliError::Usage(format!(
            "--form has {} coordinates but dim p = {}",
            c.len(),
            pair.dim_p()
        ))),
        None => Err(CliError::Usage(format!(
            "--form {text:?} is neither a p label ({}) nor a coordinate list",
            pair.p_labels().join(", ")
        ))),
    }
}

fn subspace_json(pair: &SymmetricPair, s: &Subspace) -> Value {
    let g = pair.algebra();
    Value::Array(s.basis().iter().map(|v| element(g, v)).collect())
}

fn base_case_name(b: BaseCase) -> &'static str {
    match b {
        BaseCase::CentralSemisimplePart => "CentralSemisimplePart",
        BaseCase::AbelianIdealP => "AbelianIdealP",
    }
}

fn polarization_json(pair: &SymmetricPair, pol: &Polarization) -> Value {
    let g = pair.algebra();
    let trace: Vec<Value> = pol
        .trace
        .iter()
        .map(|s| {
            json!({
                "depth": s.depth,
                "dim": s.algebra.dim(),
                "x_f": element(g, s.x_f.coords()),
                "x_s": element(g, s.x_s.coords()),
                "x_u": element(g, s.x_u.coords()),
                "eigenvalues": s.eigenvalues.iter()
                    .map(|(l, d)| json!({ "value": scalar(l), "dim": d }))
                    .collect::<Vec<_>>(),
                "positive": s.positive.iter().map(scalar).collect::<Vec<_>>(),
                "dim_n": s.n.dim(),
                "sub_dim": s.sub_dim,
                "base_case": s.base_case.map(base_case_name),
            })
        })
        .collect();
    json!({
        "b": subspace_json(pair, &pol.b),
        "dim_b": pol.b.dim(),
        "base_case": base_case_name(pol.base_case),
        "trace": trace,
    })
}

fn polarize(target: &Target, opts: &Options) -> Result<Report, CliError> {
    let pair = &target.pair;
    if !pair.is_anti_invariant() {
        return Err(CliError::Validation {
            location: "B".into(),
            axiom: "form.present".into(),
            message: "polarize needs an anti-invariant form B".into(),
        });
    }
    let seed = opts.seed.unwrap_or(0);
    let (forms, sampling, report_seed, params) = match &opts.form {
        Some(text) => {
            let f = parse_form(pair, text)?;
            (vec![f], Value::Null, opts.seed, json!({ "form": text }))
        }
        None => {
            let sel = sample_generic_forms(pair, seed, opts.count)?;
            let info = json!({
                "requested": opts.count,
                "accepted": sel.forms.len(),
                "drawn": sel.drawn,
                "sampled_min_dim_gf": sel.sampled_min,
                "max_semisimple_rank": sel.max_semisimple_rank,
                "rejected_not_regular": sel.rejected_not_regular,
                "rejected_low_rank": sel.rejected_low_rank,
                "rejected_irrational": sel.rejected_irrational,
            });
            (sel.forms, info, Some(seed), json!({ "count": opts.count }))
        }
    };
    let mut report = base_report(Command::Polarize, target, report_seed, params);
    if opts.form.is_none() {
        report.checks.push(
            Check::new("polarize.sample.count", forms.len() == opts.count)
                .detail(format!("{} of {} forms accepted", forms.len(), opts.count)),
        );
    }
    let sampled_min = pair.sampled_minimum(seed);
    let mut per_form = Vec::new();
    for (k, f) in forms.iter().enumerate() {
        let id = |s: &str| format!("polarize.form[{k:02}].{s}");
        let pol = construct_polarization(pair, f)?;
        let cert = verify_polarization(pair, f, &pol.b);
        let puk = pukanszky_check(pair, f, &pol.b)?;
        let gf = pair.centralizer(f);
        let (kf, pf) = pair.centralizer_split(f);
        let steps_ok = pol.trace.iter().all(|s| s.checks.as_ref().is_none_or(|c| c.all_hold()));
        report.checks.push(
            Check::new(id("regular"), gf.dim() == sampled_min)
                .detail(format!("dim g^f = {}, sampled minimum {sampled_min}", gf.dim())),
        );
        let mut verify = Check::new(id("verify"), cert.passed()).detail(format!(
            "closed={} sigma_stable={} isotropic={} dim b={} (dim g={}, dim g^f={})",
            cert.closed, cert.sigma_stable, cert.isotropic, cert.dim_b, cert.dim_g, cert.dim_gf
        ));
        if cert.closure_witness.is_some() || cert.isotropy_witness.is_some() {
            verify = verify.witness(json!({
                "closure": cert.closure_witness,
                "isotropy": cert.isotropy_witness,
            }));
        }
        report.checks.push(verify);
        report.checks.push(
            Check::new(id("pukanszky"), puk.passed)
                .detail(format!("dim(g^f + b_u) = {}, dim b = {}", puk.dim_sum, puk.dim_b)),
        );
        report.checks.push(Check::new(id("recursion_steps"), steps_ok));
        report.checks.push(
            Check::new(id("centralizer_split"), kf.dim() == pf.dim() && pair.is_sigma_stable(&gf))
                .detail(format!("dim k^f = {}, dim p^f = {}", kf.dim(), pf.dim())),
        );
        let mut entry = polarization_json(pair, &pol);
        entry["index"] = json!(k);
        entry["form"] = vector(f.coords());
        entry["dim_gf"] = json!(gf.dim());
        entry["g_f"] = subspace_json(pair, &gf);
        entry["b_u"] = subspace_json(pair, &puk.b_u);
        per_form.push(entry);
    }
    report.data = json!({
        "p_basis": pair.p_labels(),
        "sampling": sampling,
        "forms": per_form,
    });
    Ok(report)
}

fn series_json(s: &TruncSeries, names: &[String]) -> Value {
    let mut v = poly(s.poly(), names);
    v["truncation"] = json!(s.truncation());
    v
}

fn xi_names(pair: &SymmetricPair) -> Vec<String> {
    pair.p_labels().iter().map(|l| format!("ξ[{l}]")).collect()
}

fn defects_json(defects: &[Defect], names: &[String]) -> Value {
    Value::Array(
        defects
            .iter()
            .map(|d| json!({ "i": d.i, "j": d.j, "value": poly(&d.value, names) }))
            .collect(),
    )
}

fn rouviere(target: &Target, degree: usize) -> Report {
    let pair = &target.pair;
    let names = pair.p_labels();
    let mut report = base_report(Command::Rouviere, target, None, json!({ "degree": degree }));
    let hom = verify_rouviere_homomorphism(pair, degree);
    let comm = commutativity_check(pair, degree);
    report.checks.push(
        Check::new("rouviere.homomorphism", hom.defects.is_empty())
            .detail(format!("{} products, {} defects", hom.products_checked, hom.defects.len())),
    );
    report.checks.push(Check::new("rouviere.images_invariant", hom.images_invariant));
    report.checks.push(Check::new("rouviere.top_symbol", hom.top_symbols_match));
    report.checks.push(Check::new("rouviere.injective", hom.injective));
    report.checks.push(
        Check::new("rouviere.graded_dimensions", hom.invariant_dims == hom.class_dims).detail(format!(
            "S[p]^k {:?}, invariant classes {:?}",
            hom.invariant_dims, hom.class_dims
        )),
    );
    report.checks.push(
        Check::new("rouviere.commutativity", comm.passed())
            .detail(format!("{} pairs, {} defects", comm.pairs_checked, comm.defects.len())),
    );
    let d = degree + degree % 2;
    let j = j_series(pair, d).expect("even truncation");
    let half = j_half(pair, d).expect("even truncation");
    let images: Vec<Value> = hom
        .invariants
        .iter()
        .zip(&hom.images)
        .map(|(p, c)| json!({ "P": poly(p, &names), "R(P)": poly(&c.rep, &names) }))
        .collect();
    report.data = json!({
        "p_basis": names,
        "invariant_dims": hom.invariant_dims,
        "class_dims": hom.class_dims,
        "images": images,
        "products_checked": hom.products_checked,
        "defects": defects_json(&hom.defects, &names),
        "commutativity_defects": defects_json(&comm.defects, &names),
        "j_series": series_json(&j, &xi_names(pair)),
        "j_half": series_json(&half, &xi_names(pair)),
        "plain_symmetrization": {
            "diagnostic": true,
            "defects": defects_json(&hom.plain_beta_defects, &names),
        },
    });
    report
}

fn jfunction(target: &Target, degree: usize) -> Result<Report, CliError> {
    let pair = &target.pair;
    let mut report = base_report(Command::Jfunction, target, None, json!({ "degree": degree }));
    let j = j_series(pair, degree)?;
    let half = j_half(pair, degree)?;
    let one = sympair_core::scalar::one();
    report
        .checks
        .push(Check::new("jfunction.constant_term", j.constant_term() == one && half.constant_term() == one));
    report.checks.push(Check::new("jfunction.even", j.is_even() && half.is_even()));
    report.checks.push(Check::new("jfunction.half_squared", half.mul(&half) == j));
    let names = xi_names(pair);
    report.data = json!({
        "variables": names,
        "J": series_json(&j, &names),
        "J_half": series_json(&half, &names),
    });
    Ok(report)
}
