//! The worked `GSp_4` example: `r̄ = diag(χ̄³, 1, χ̄⁶, χ̄⁹)` lifted inside the lattice
//! `H = D·GSp_4·D⁻¹ ∩ D⁻¹·GSp_4·D` with `D = diag(p, 1, p⁻², p⁻¹)`.

use deformation_ladder::{check_hypotheses, LiftLadder, ValuationPattern};
use galois_rings::{discrete_log, is_prime, Elem, GaloisRing, Mat};
use gmodules::{eigen_components, eigenspace_decomposition, GMod, GroupData};
use root_data::{Root, RootDatum};
use symplectic_core::similitude;

use crate::data::{designations, root_exponent, surrogate_ladder, LadderTrace};
use crate::error::CliError;
use crate::report::{Check, LadderStage, Report};

/// Exponents of `D = diag(p, 1, p⁻², p⁻¹)`.
pub const D_EXPONENTS: [i64; 4] = [1, 0, -2, -1];

/// Smallest prime the example is stated for.
pub const MIN_PRIME: u64 = 23;

/// Precision needed to read `D⁻¹·r·D` modulo `p`: the largest entry shift is 3.
pub const CONJUGATION_PRECISION: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExamplePlan {
    pub p: u64,
    /// Whether the class-group components `C(χ̄^{p−i})`, `i ∈ {±3, ±6, ±9}`, are taken to vanish.
    pub regular_prime_assumed: bool,
    pub precision: u32,
    pub exponents: [i64; 4],
    pub similitude_exponent: i64,
    /// `κ = κ₀·χ^k`; must be a multiple of `p − 1`.
    pub kappa_k: u64,
}

impl ExamplePlan {
    /// The standard plan at `p` and precision `m`, with `k = p(p − 1)`.
    pub fn new(p: u64, precision: u32) -> Result<Self, CliError> {
        let plan = ExamplePlan {
            p,
            regular_prime_assumed: true,
            precision,
            exponents: [3, 0, 6, 9],
            similitude_exponent: 9,
            kappa_k: p.saturating_mul(p.saturating_sub(1)),
        };
        plan.validate()?;
        Ok(plan)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: String| Err(CliError::PlanInvalid(m));
        if !is_prime(self.p) {
            return bad(format!("{} is not prime", self.p));
        }
        if self.p < MIN_PRIME {
            return bad(format!("p = {} is below {MIN_PRIME}", self.p));
        }
        if self.precision == 0 || self.precision > 12 {
            return bad(format!("precision {} is outside 1..=12", self.precision));
        }
        let e = self.exponents;
        if e[0] + e[2] != self.similitude_exponent || e[1] + e[3] != self.similitude_exponent {
            return bad(format!("exponents {e:?} do not give a similitude with exponent {}", self.similitude_exponent));
        }
        if self.kappa_k % (self.p - 1) != 0 {
            return bad(format!("k = {} is not a multiple of p - 1", self.kappa_k));
        }
        Ok(())
    }
}

/// The entry-wise valuation bounds of `H`.
pub fn h_pattern() -> ValuationPattern {
    ValuationPattern::from_exponents(&D_EXPONENTS)
}

/// `D⁻¹XD` modulo `p`; entry `(i, j)` is `p^{e_j − e_i}·x_ij`. `None` marks entries that need
/// more precision than `x` carries, and the whole result is `None` if some division is inexact.
fn d_conjugate_entries(x: &Mat) -> Option<Vec<Vec<Option<Elem>>>> {
    let r = x.ring();
    let f = r.residue_field();
    let m = r.precision();
    let mut out = Vec::with_capacity(4);
    for i in 0..4 {
        let mut row = Vec::with_capacity(4);
        for j in 0..4 {
            let s = D_EXPONENTS[j] - D_EXPONENTS[i];
            let a = x.get(i, j);
            let v = if s >= 0 {
                Some(r.reduce(&r.mul_p_pow(a, s as u32), &f).ok()?)
            } else {
                let k = (-s) as u32;
                match r.valuation(a) {
                    None => Some(f.zero()),
                    Some(v) if v < k => return None,
                    Some(_) if m <= k => None,
                    Some(_) => Some(r.shift_down(a, k, &f)),
                }
            };
            row.push(v);
        }
        out.push(row);
    }
    Some(out)
}

/// `D⁻¹XD mod p` when `x` carries enough precision to determine every entry.
pub fn d_conjugate_mod_p(x: &Mat) -> Option<Mat> {
    let f = x.ring().residue_field();
    let e = d_conjugate_entries(x)?;
    let data = e.into_iter().flatten().collect::<Option<Vec<Elem>>>()?;
    Some(Mat::from_elems(&f, 4, 4, data))
}

/// Positions that vanish in every element of the Borel subgroup of `GSp_4`.
const NON_BOREL: [(usize, usize); 6] = [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (2, 3)];

/// Membership in `H` at the available precision: the sixteen valuation bounds, and
/// `D⁻¹XD mod p` has Borel shape.
pub fn verify_h_pattern(x: &Mat) -> bool {
    if x.rows() != 4 || x.cols() != 4 || !h_pattern().admits(x) {
        return false;
    }
    let Some(e) = d_conjugate_entries(x) else {
        return false;
    };
    let f = x.ring().residue_field();
    NON_BOREL.iter().all(|&(i, j)| e[i][j].as_ref().is_some_and(|v| f.is_zero(v)))
}

/// `𝔥_m`: adjoint basis indices whose matrices satisfy the valuation bounds at level `m`.
pub fn h_filtration(datum: &RootDatum, m: u32) -> Vec<usize> {
    let pat = h_pattern();
    let f = GaloisRing::zp(MIN_PRIME, 1).expect("prime");
    datum.basis(&f).iter().enumerate().filter(|(_, b)| pat.supports(m, b)).map(|(i, _)| i).collect()
}

/// Labels `H1, H2, X_{λ}` of adjoint basis indices.
pub fn basis_label(datum: &RootDatum, i: usize) -> String {
    if i < datum.n() {
        format!("H{}", i + 1)
    } else {
        format!("X_{{{}}}", datum.roots()[i - datum.n()])
    }
}

/// Subscripts the index after each `L`: `2L1` becomes `2L₁`.
fn subscript(s: &str) -> String {
    let mut out = String::new();
    let mut after_l = false;
    for c in s.chars() {
        out.push(match (after_l, c) {
            (true, '1') => '₁',
            (true, '2') => '₂',
            (true, '3') => '₃',
            (true, '4') => '₄',
            _ => c,
        });
        after_l = c == 'L';
    }
    out
}

/// `±λ` in display form: `2L₁`, `(L₁+L₂)`, `(L₁−L₂)`.
fn pm_root_label(r: &Root) -> String {
    let plain = subscript(&r.to_string()).replace('-', "−");
    if plain.contains('+') || plain.contains('−') {
        format!("({plain})")
    } else {
        plain
    }
}

/// Exponent `k` with `σ_λ = χ̄^k`, for each positive root in the display order
/// `2L₁, 2L₂, L₁+L₂, L₁−L₂`.
pub fn eigencharacter_table(exponents: &[i64; 4]) -> Vec<(Root, i64)> {
    [Root::long(2, 1), Root::long(2, 2), Root::sum(2, 1, 2), Root::diff(2, 1, 2)]
        .into_iter()
        .map(|r| {
            let k = root_exponent(&r, exponents);
            (r, k)
        })
        .collect()
}

/// `σ_{±2L₁} = χ̄^{∓3}, σ_{±2L₂} = χ̄^{∓9}, σ_{±(L₁+L₂)} = χ̄^{∓6} and σ_{±(L₁−L₂)} = χ̄^{±3}`
/// for the standard exponents.
pub fn render_eigencharacter_table(table: &[(Root, i64)]) -> String {
    let parts: Vec<String> = table
        .iter()
        .map(|(r, k)| {
            let sign = if *k < 0 { "∓" } else { "±" };
            format!("σ_{{±{}}} = χ̄^{{{}{}}}", pm_root_label(r), sign, k.abs())
        })
        .collect();
    match parts.split_last() {
        Some((last, init)) if !init.is_empty() => format!("{} and {}", init.join(", "), last),
        _ => parts.join(""),
    }
}

/// Everything the example pipeline produces.
#[derive(Clone, Debug)]
pub struct ExampleOutcome {
    pub plan: ExamplePlan,
    /// `ρ̄ = D⁻¹·r·D mod p`, the residual data handed to the hypothesis checker.
    pub data: GroupData,
    /// The ladder at the plan's precision.
    pub ladder: LiftLadder,
    /// Every stage from `r̄` up to `max(precision, 4)`.
    pub trace: LadderTrace,
    pub report: Report,
}

/// Runs the example: eigencharacter table, `𝔥_m` filtration, the ladder
/// `r̄ → r₂' → r₂ → r₃ → …`, the `H` pattern on every image, `ρ̄ = D⁻¹ r D mod p`, the
/// hypothesis checker on `ρ̄` and the eigencomponents of `Φ(r₂)`.
pub fn build_example(plan: &ExamplePlan) -> Result<(GroupData, LiftLadder, Report), CliError> {
    let o = run_example(plan)?;
    Ok((o.data, o.ladder, o.report))
}

pub fn run_example(plan: &ExamplePlan) -> Result<ExampleOutcome, CliError> {
    plan.validate()?;
    let p = plan.p;
    let datum = RootDatum::new(2);
    let f = GaloisRing::zp(p, 1)?;
    let g = f.primitive_element();
    let mut report = Report::new("gsp4-example", crate::config::Params {
        p: Some(p),
        precision: Some(plan.precision),
        exponents: Some(plan.exponents.to_vec()),
        kappa_k: Some(plan.kappa_k),
        regular_prime_assumed: Some(plan.regular_prime_assumed),
        ..Default::default()
    });

    // Eigencharacter table, cross-checked against discrete logarithms of σ_λ(t).
    let table = eigencharacter_table(&plan.exponents);
    let display = render_eigencharacter_table(&table);
    let t_image = crate::data::torus_image(&f, &g, &plan.exponents)?;
    let mut cert = Vec::new();
    let mut logs_agree = true;
    for (r, k) in &table {
        let (i, j) = r.pivot();
        let val = f.div(t_image.get(i, i), t_image.get(j, j))?;
        let log = discrete_log(&f, &g, &val).map(|l| l as i64);
        logs_agree &= log == Some(k.rem_euclid(p as i64 - 1));
        cert.push(format!("sigma_{{{r}}}(t) = g^{}, exponent {k}", log.map_or("?".into(), |l| l.to_string())));
    }
    report.push(Check::new("eigencharacter table", logs_agree, display).with_certificate(cert));

    // 𝔥_m filtration.
    let dims: Vec<usize> = (1..=3).map(|m| h_filtration(&datum, m).len()).collect();
    let h1: Vec<String> = h_filtration(&datum, 1).iter().map(|&i| basis_label(&datum, i)).collect();
    report.push(
        Check::new(
            "h_m filtration",
            dims == [6, 8, 10],
            format!("dim h_1 = {}, dim h_2 = {}, dim h_m = {} for m >= 3", dims[0], dims[1], dims[2]),
        )
        .with_certificate(vec![format!("h_1 = F_p<{}>", h1.join(", "))]),
    );

    // The ladder, lifted far enough to read D⁻¹ r D mod p.
    let top = plan.precision.max(CONJUGATION_PRECISION);
    let trace = surrogate_ladder(&datum, p, &plan.exponents, top, plan.kappa_k, Some(h_pattern()))?;
    report.push(Check::new(
        "surrogate group",
        true,
        format!(
            "<t, u1, u2 | t^{}, t u_i t^-1 u_i^-a_i> with a = {:?}; f_i(u_i) = X_{{lambda_i}} on independent generators",
            p - 1,
            trace.conjugation_exponents
        ),
    ));
    match &trace.obstruction {
        None => report.push(Check::new("ladder", true, format!("lifted to precision {top}"))),
        Some(w) => report.push(
            Check::new("ladder", false, format!("obstructed at precision {}", w.precision))
                .with_certificate(vec![format!("certificate {:?}", w.certificate.iter().map(|x| f.render(x)).collect::<Vec<_>>())]),
        ),
    }
    let chi_t = |r: &GaloisRing| r.teichmuller(&g);
    let mut sim_ok = true;
    let mut pattern_ok = true;
    let mut sim_cert = Vec::new();
    for s in &trace.stages {
        let r = s.ladder.ring();
        let want = r.pow(&chi_t(r), plan.similitude_exponent as u64);
        let sims = s.ladder.images().iter().map(similitude).collect::<Result<Vec<_>, _>>()?;
        let ok = sims[0] == want && sims[1..].iter().all(|x| *x == r.one());
        sim_ok &= ok;
        pattern_ok &= s.ladder.images().iter().all(verify_h_pattern);
        sim_cert.push(format!("{} (mod p^{}): nu(t) = {}", s.name, r.precision(), r.render(&sims[0])));
        report.ladder.push(LadderStage::from_ladder(&s.name, &s.ladder));
    }
    report.push(
        Check::new("similitude chi^9", sim_ok, "nu(t) = chi(t)^9 and nu(u_i) = 1 at every stage").with_certificate(sim_cert),
    );
    report.push(Check::new("H pattern", pattern_ok, "every generator image at every stage satisfies verify_h_pattern"));

    // ρ̄ = D⁻¹ r D mod p.
    let top_ladder = trace.top();
    let rho: Vec<Mat> = match top_ladder.images().iter().map(d_conjugate_mod_p).collect::<Option<Vec<_>>>() {
        Some(v) if top_ladder.precision() >= CONJUGATION_PRECISION => v,
        _ => {
            return Err(CliError::PlanInvalid(format!(
                "ladder stopped at precision {}, below the {CONJUGATION_PRECISION} needed for D^-1 r D",
                top_ladder.precision()
            )))
        }
    };
    let s = plan.similitude_exponent;
    let data = GroupData::new(
        top_ladder.gamma().labels().to_vec(),
        rho.clone(),
        vec![0],
        vec![g.clone(), f.one(), f.one()],
        vec![f.pow_signed(&g, s)?, f.one(), f.one()],
    )?;
    let id = Mat::identity(&f, 4);
    let unip_ok = rho[1] == &id + &datum.root_vector(&f, &Root::diff(2, 1, 2))
        && rho[2] == &id + &datum.root_vector(&f, &Root::long(2, 2));
    report.push(
        Check::new(
            "residual conjugate",
            unip_ok && rho[0] == t_image,
            "D^-1 r D mod p sends t to r-bar(t), u1 to exp(X_{L1-L2}) and u2 to exp(X_{2L2})",
        )
        .with_certificate(rho.iter().map(|m| format!("{:?}", m.to_signed_rows())).collect()),
    );

    // Hypothesis checker on ρ̄.
    let mut assumptions = vec![
        "f_1, f_2 are realized as cocycles on the surrogate group with nonzero values on u1, u2".to_string(),
    ];
    if plan.regular_prime_assumed {
        assumptions.push("class group components C(chi^(p-i)) vanish for i in {+-3, +-6, +-9}".to_string());
    } else {
        report.push(Check::new(
            "class group input",
            false,
            "vanishing of C(chi^(p-i)) for i in {+-3, +-6, +-9} was not supplied",
        ));
    }
    let hyp = check_hypotheses(&datum, &data, &designations(&f, 2, 3, assumptions))?;
    report.add_hypotheses(&hyp);

    // Φ(r₂) and its eigencomponents under Ad r̄(t).
    let r2 = trace.stage("r2").ok_or_else(|| CliError::PlanInvalid("ladder did not reach r2".into()))?;
    let phi: Vec<Vec<Elem>> = r2.images()[1..]
        .iter()
        .map(|m| datum.coords(&(m - &Mat::identity(r2.ring(), 4)).shift_down(1, &f)))
        .collect::<Result<_, _>>()?;
    let rbar = trace.stages[0].ladder.images().to_vec();
    let pieces = eigenspace_decomposition(&GMod::adjoint(&datum, &rbar)?, &[0])?;
    let mut phi_ok = true;
    let mut phi_cert = Vec::new();
    for k in [3i64, -9] {
        let val = f.pow_signed(&g, k)?;
        let idx = pieces.iter().position(|pc| pc.values == [val.clone()]);
        let nonzero = idx.is_some_and(|i| {
            phi.iter().any(|v| eigen_components(&pieces, v)[i].iter().any(|x| !f.is_zero(x)))
        });
        phi_ok &= nonzero;
        phi_cert.push(format!("chi^{k} component {}", if nonzero { "nonzero" } else { "zero" }));
    }
    report.push(Check::new("Phi(r2) eigencomponents", phi_ok, "Phi(r2) = span of (r2(u_i) - Id)/p").with_certificate(phi_cert));

    let ladder = top_ladder.reduce_to(plan.precision)?;
    Ok(ExampleOutcome { plan: plan.clone(), data, ladder, trace, report })
}
