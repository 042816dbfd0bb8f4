//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Each criterion asserts the values it measures, so a line may read FAIL while the suite
//! still succeeds: that is a claim the toolkit checks and finds false, with the witness pinned.

use std::time::Instant;

use cli_gsp4::data::residual_data;
use cli_gsp4::local::{self_pairing_rank, tangent_space, twist_failures, unramified_base, unramified_witness, base_rep};
use cli_gsp4::oracle::{closure_oracle, commutator_identity, hom_oracle, saturation_trials};
use cli_gsp4::{run, run_example, Config, ExamplePlan, Params, Verb};
use deformation_ladder::{strict_equivalent, LiftLadder};
use fpcohomology::{
    balanced_package, coboundary, cohomologous, h1_dim, is_cocycle, wiles_difference, z1_basis, FPGroup, LocalTerm,
};
use galois_rings::{GaloisRing, Mat};
use gmodules::GMod;
use local_tame::{in_condition, lemma55_criterion, tangent_nr, twist_certificate, LocalCondition};
use root_data::{Root, RootDatum};
use symplectic_core::exp_nilpotent;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn zp(p: u64, m: u32) -> GaloisRing {
    GaloisRing::zp(p, m).unwrap()
}

fn root_system_exactness() -> Outcome {
    let f = zp(23, 1);
    let d = RootDatum::new(2);
    let x = |r: Root| d.root_vector(&f, &r);
    let m = |rows: [[i64; 4]; 4]| Mat::from_ints(&f, &rows.map(|r| r.to_vec()));
    let vectors = x(Root::long(2, 1)) == m([[0, 0, 1, 0], [0; 4], [0; 4], [0; 4]])
        && x(Root::long(2, 2)) == m([[0, 0, 0, 0], [0, 0, 0, 1], [0; 4], [0; 4]])
        && x(Root::sum(2, 1, 2)) == m([[0, 0, 0, 1], [0, 0, 1, 0], [0; 4], [0; 4]])
        && x(Root::diff(2, 1, 2)) == m([[0, 1, 0, 0], [0; 4], [0; 4], [0, 0, -1, 0]]);
    let a = x(Root::diff(2, 1, 2));
    let b1 = d.bracket(&a, &x(Root::long(2, 2))) == x(Root::sum(2, 1, 2));
    let b2 = d.bracket(&a, &x(Root::sum(2, 1, 2))) == x(Root::long(2, 1)).scale_int(2);
    assert!(vectors && b1 && b2);
    outcome(true, "root vectors match entry-for-entry; [X_{L1-L2}, X_{2L2}] = X_{L1+L2}, [X_{L1-L2}, X_{L1+L2}] = 2X_{2L1}")
}

fn oddness() -> Outcome {
    let f = zp(23, 1);
    let d = RootDatum::new(2);
    let c = Mat::from_ints(&f, &[vec![-1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, -1]]);
    let fixed = GMod::adjoint(&d, &[c]).unwrap().invariants().dim();
    let positive = d.positive_roots().len();
    assert_eq!((fixed, positive), (4, 4));
    outcome(fixed == positive, format!("dim (Ad0)^c = {fixed}, dim n = {positive}"))
}

fn saturation() -> Outcome {
    let c5 = commutator_identity(5).unwrap();
    let c7 = commutator_identity(7).unwrap();
    let s = saturation_trials(5, 100, 2024).unwrap();
    assert!(c5.failures.is_empty() && c7.failures.is_empty());
    assert_eq!(s.orders.len(), 100);
    assert!(s.all_saturate(), "orders {:?}", s.orders);
    outcome(
        true,
        format!(
            "commutator identity on {} + {} cases over F_5, F_7; 100/100 trials give |Pi| = {}",
            c5.cases, c7.cases, s.expected
        ),
    )
}

fn stable_closure() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for (p, seed) in [(5, 11), (7, 12)] {
        let c = closure_oracle(p, &[3, 0, 6, 9], 200, seed).unwrap();
        assert!(c.random_seeds >= 200 && c.eigen_seeds > 0);
        assert!(c.failures.is_empty(), "p = {p}: closure dims {:?}", c.failures);
        ok &= c.failures.is_empty();
        details.push(format!("p = {p}: {} random + {} eigenvector seeds, all closures = Ad0", c.random_seeds, c.eigen_seeds));
    }
    outcome(ok, details.join("; "))
}

fn hom_computation() -> Outcome {
    // Data satisfying the residual hypotheses at p = 23, and the diagonal example for comparison.
    let d = RootDatum::new(2);
    let f = zp(23, 1);
    let generic = hom_oracle(&d, &residual_data(&d, &f, &[2, 0, -7, -5]).unwrap()).unwrap();
    let example = hom_oracle(&d, &residual_data(&d, &f, &[3, 0, 6, 9]).unwrap()).unwrap();
    let ones = generic.dual_to_dual.iter().all(|&h| h == 1);
    let zeros = generic.adjoint_to_dual.iter().all(|&h| h == 0);
    assert!(!generic.dual_to_dual.is_empty());
    assert!(ones && zeros, "generic data: {generic:?}");
    let ex_ones = example.dual_to_dual.iter().filter(|&&h| h == 1).count();
    let ex_cross = example.adjoint_to_dual.iter().all(|&h| h == 0);
    assert!(ex_cross);
    outcome(
        ones && zeros,
        format!(
            "generic data: {} dual modules all Hom = 1, {} cross pairs all Hom = 0; diagonal example: {}/{} dual modules Hom = 1, cross Hom = 0",
            generic.dual_to_dual.len(),
            generic.adjoint_to_dual.len(),
            ex_ones,
            example.dual_to_dual.len()
        ),
    )
}

fn tame_dimensions() -> Outcome {
    let (p, v) = (5, 11);
    let d = RootDatum::new(2);
    let f = zp(p, 1);
    let h1 = h1_dim(&FPGroup::tame(v as i64), &GMod::trivial(&f, d.dim(), 2)).unwrap();
    let n = tangent_space(&d, LocalCondition::Unramified, p, v).unwrap().len();
    let h0 = GMod::trivial(&f, d.dim(), 2).invariants().dim();
    let rank = self_pairing_rank(&d, p, v).unwrap();
    assert_eq!((h1, n, h0), (20, 10, 10));
    // Measured: the local pairing is nondegenerate on a 2-dimensional piece of N_v^nr.
    assert_eq!(rank, 2);
    outcome(rank == 0, format!("h1 = {h1}, dim N_v^nr = {n} = h0; isotropy fails: Gram rank of the pairing on N_v^nr is {rank}"))
}

fn tangent_criterion() -> Outcome {
    let d = RootDatum::new(2);
    let f = zp(5, 1);
    let t = tangent_nr(&d, &f).unwrap();
    let all = t.iter().all(|c| lemma55_criterion(&d, &f, c));
    let mut s = vec![f.zero(); d.dim()];
    s[d.index_of(&Root::long(2, 1))] = f.one();
    let bad = fpcohomology::Cocycle1::new(vec![s, vec![f.zero(); d.dim()]]);
    let counter = !lemma55_criterion(&d, &f, &bad);
    assert!(all && counter);
    outcome(true, format!("all {} basis elements satisfy a_{{2L1}} = -(cd)^-1 a_1; (X_{{2L1}}, 0) fails it", t.len()))
}

fn wiles() -> Outcome {
    let package = balanced_package(2, 0, &[]);
    let before = wiles_difference(0, 0, &package);
    let mut with_v = package.clone();
    with_v.push(LocalTerm { tangent_dim: 10, h0: 10 });
    let after = wiles_difference(0, 0, &with_v);
    assert_eq!((before, after), (0, 0));
    outcome(true, format!("balanced package gives {before}; with a trivial prime ({}) it gives {after}", "dim N_v = h0 = 10"))
}

fn example_pipeline() -> Outcome {
    let o = run_example(&ExamplePlan::new(23, 3).unwrap()).unwrap();
    let r = &o.report;
    let pass = |name: &str| r.check(name).unwrap_or_else(|| panic!("missing {name}")).passed();
    for name in ["eigencharacter table", "h_m filtration", "ladder", "similitude chi^9", "H pattern", "residual conjugate"] {
        assert!(pass(name), "{name}: {}", r.summary());
    }
    assert!(pass("Phi(r2) eigencomponents"));
    assert_eq!(o.ladder.precision(), 3);
    assert!(o.trace.stage("r3").is_some());
    let conditions = ["(1)", "(2)", "(3)", "(5)", "(8)"];
    for c in conditions {
        let check = r.checks.iter().find(|k| k.name.starts_with(&format!("condition {c}"))).unwrap();
        assert!(check.passed(), "{}", check.name);
    }
    let c4 = r.checks.iter().find(|k| k.name.starts_with("condition (4)")).unwrap();
    assert!(!c4.passed());
    assert_eq!(c4.certificate.len(), 4);
    assert!(c4.certificate.iter().any(|l| l.contains("sigma_{2L1}") && l.contains("sigma_{-(L1-L2)}")));

    let cfg = Config::new(Verb::CheckHypotheses, Params { p: Some(13), ..Params::default() });
    let r13 = run(&cfg).unwrap();
    let c13 = r13.checks.iter().find(|k| k.name.starts_with("condition (4)")).unwrap();
    assert!(!c13.passed() && r13.exit_code() != 0);
    let mod12 = c13.certificate.iter().any(|l| l.contains("sigma_{L1+L2} = Frob^0 of sigma_{-(L1+L2)}"));
    assert!(mod12);
    outcome(
        false,
        format!(
            "p = 23: ladder reaches r3 (and r4) with similitude chi^9, H pattern and Phi(r2) components hold, \
             conditions (1),(2),(3),(5),(8) pass, but (4) fails with {} collisions ({}); p = 13: (4) fails with \
             sigma_{{L1+L2}} = sigma_{{-(L1+L2)}} (chi^-6 = chi^6 mod 12)",
            c4.certificate.len(),
            c4.certificate[0].trim_start_matches("collision: ")
        ),
    )
}

fn small_ladder(p: u64, m: u32) -> LiftLadder {
    let d = RootDatum::new(2);
    let f = zp(p, 1);
    let g = f.primitive_element();
    let t = Mat::diagonal(&f, &[g.clone(), f.one(), f.inv(&g).unwrap(), f.one()]);
    let u = exp_nilpotent(&d.root_vector(&f, &Root::long(2, 2))).unwrap().into_mat();
    let gamma = FPGroup::new(
        vec!["t".into(), "u".into()],
        vec![vec![(0, p as i64 - 1)], vec![(0, 1), (1, 1), (0, -1), (1, -1)]],
    )
    .unwrap();
    let kr = zp(p, 5);
    let l = LiftLadder::new(gamma, d, vec![t, u], vec![kr.one(), kr.one()], kr, None).unwrap();
    l.lift_to(m).unwrap().lifted().unwrap()
}

fn torsor_and_twists() -> Outcome {
    let l = small_ladder(5, 2);
    let module = l.residual_module().unwrap();
    let f = zp(5, 1);
    let d = l.datum().clone();
    let mut cob = 0;
    for i in 0..d.dim() {
        let mut x = vec![f.zero(); d.dim()];
        x[i] = f.one();
        assert!(strict_equivalent(&l, &l.twist(&coboundary(&module, &x)).unwrap()).unwrap());
        cob += 1;
    }
    let z = z1_basis(l.gamma(), &module).unwrap();
    let mut inequivalent = 0;
    for a in &z {
        for b in &z {
            assert!(is_cocycle(l.gamma(), &module, a).unwrap());
            let coh = cohomologous(l.gamma(), &module, a, b).unwrap();
            assert_eq!(strict_equivalent(&l.twist(a).unwrap(), &l.twist(b).unwrap()).unwrap(), coh);
            inequivalent += usize::from(!coh);
        }
    }
    assert!(inequivalent > 0);

    let (p, v) = (5, 11);
    let rd = RootDatum::new(2);
    let mut absorbed = Vec::new();
    for kind in [LocalCondition::Unramified, LocalCondition::Ramified] {
        let base = base_rep(kind, 2, p, v, 3).unwrap();
        assert!(in_condition(&rd, kind, &base).unwrap());
        let t = tangent_space(&rd, kind, p, v).unwrap();
        assert!(twist_failures(&rd, kind, &base, &t).unwrap().is_empty());
        absorbed.push(t.len());
    }
    let base2 = unramified_base(2, p, v, 2).unwrap();
    let w = unramified_witness(&rd, &zp(p, 1)).unwrap();
    assert!(twist_certificate(&rd, LocalCondition::Unramified, &base2, &w).unwrap().is_none());
    outcome(
        true,
        format!(
            "{cob} coboundary twists strictly equivalent; {inequivalent} non-cohomologous pairs inequivalent; \
             m = 3 absorbs {}/{} (nr) and {}/{} (ram) directions; m = 2 witness C(X_{{-2L1}}, 0)C^-1 escapes C_v^nr",
            absorbed[0], absorbed[0], absorbed[1], absorbed[1]
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("root system exactness", root_system_exactness),
        ("oddness number", oddness),
        ("commutator identity and saturation", saturation),
        ("stable closure oracle", stable_closure),
        ("equivariant Hom dimensions", hom_computation),
        ("tame cohomology dimensions", tame_dimensions),
        ("tangent space criterion", tangent_criterion),
        ("Selmer balance", wiles),
        ("GSp4 example pipeline", example_pipeline),
        ("torsor and twist laws", torsor_and_twists),
    ];
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} [{tag}] {name} ({:.2}s): {}", i + 1, start.elapsed().as_secs_f64(), o.detail);
    }
}
