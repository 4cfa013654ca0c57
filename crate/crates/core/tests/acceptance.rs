//! The acceptance criteria, one line of output per criterion.
//!
//! Run with `cargo test -p qbundle --test acceptance -- --nocapture`.

use std::io::Write;
use std::time::{Duration, Instant};

use qbundle::connection::ConnectionData;
use qbundle::dga::{check_d_squared, close_differential_ideal, differentiate};
use qbundle::freealg::{
    check_local_confluence, default_overlap_bound, ideal_membership_bounded, irreducible_words, parse_element,
    NCPoly, Presentation, Word,
};
use qbundle::hopf::HopfData;
use qbundle::monopole::{
    build_scenario, build_scenario_unchecked, classical_limit_check, verify_monopole, verify_monopole_curvature,
    MonopoleScenario, ScenarioConfig,
};
use qbundle::report::{Record, Status};
use qbundle::{Param, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn no_failures(recs: &[Record]) -> Result<(), String> {
    match recs.iter().find(|r| r.status == Status::Fail) {
        Some(r) => Err(format!("{}: {}", r.name, r.residue.as_deref().unwrap_or(""))),
        None => Ok(()),
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    if t > limit {
        Err(format!("took {t:?}, limit {limit:?}"))
    } else {
        Ok(t)
    }
}

fn symbolic() -> MonopoleScenario {
    build_scenario(ScenarioConfig::symbolic(1)).expect("symbolic scenario builds")
}

fn curvature_reproduction() -> Outcome {
    let start = Instant::now();
    let rep = verify_monopole(ScenarioConfig::symbolic(1), 4);
    let t = within(start, Duration::from_secs(5))?;
    for name in ["F_1(alpha)", "F_2(alpha)"] {
        let r = rep.find(name).ok_or(format!("{name} missing from the report"))?;
        if r.status != Status::Pass {
            return Err(format!("{name}: {:?}", r.residue));
        }
    }
    no_failures(&rep.records)?;
    Ok(format!("F_1(α), F_2(α) exact; full report passes in {t:?}"))
}

fn calculus_collapse() -> Outcome {
    let start = Instant::now();
    let s = build_scenario_unchecked(ScenarioConfig::symbolic(1)).map_err(|e| e.to_string())?;
    let gm = s.gamma_m();
    for g in ["dalpha", "dalphas"] {
        let v = gm.normal_form(&gm.g(g)).map_err(|e| e.to_string())?;
        if !v.is_zero() {
            return Err(format!("{g} ↦ {v}"));
        }
    }
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("dα ↦ 0 and dα* ↦ 0 in {} ({t:?})", gm.name()))
}

fn structure_equation() -> Outcome {
    let s = symbolic();
    let mut count = 0;
    for c in [s.connection().clone(), s.connection().right_from_left().map_err(|e| e.to_string())?] {
        for i in 0..2 {
            for e in s.structure_samples(i, 3).map_err(|e| e.to_string())? {
                let dd = c
                    .covariant_derivative(i, &c.covariant_derivative(i, &e).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let r = &dd - &c.curvature_pairing(i, &e).map_err(|e| e.to_string())?;
                if !r.is_zero() {
                    return Err(format!("chart {}, γ = {e}: residue {r}", i + 1));
                }
                count += 1;
            }
        }
    }
    if count < 24 {
        return Err(format!("only {count} identities"));
    }
    Ok(format!("{count} identities D² = curvature pairing, zero residues"))
}

fn bundle_reconstruction() -> Outcome {
    let s = symbolic();
    let recs = s.check_total_space().map_err(|e| e.to_string())?;
    no_failures(&recs)?;
    Ok(format!("{} checks: χ_p, χ_q well defined, compatibility, coaction", recs.len()))
}

fn coinvariants() -> Outcome {
    let start = Instant::now();
    let s = symbolic();
    let recs = s.check_coinvariants(4).map_err(|e| e.to_string())?;
    no_failures(&recs)?;
    let t = within(start, Duration::from_secs(30))?;
    let dims: Vec<String> = recs.iter().flat_map(|r| r.notes.first().cloned()).collect();
    Ok(format!("lengths 0..=4 agree ({t:?}); last: {}", dims.last().cloned().unwrap_or_default()))
}

fn transition_suite() -> Outcome {
    for n in 1..=3 {
        let s = build_scenario_unchecked(ScenarioConfig::symbolic(n)).map_err(|e| e.to_string())?;
        let mut recs = s.bundle().transition().check(4).map_err(|e| e.to_string())?;
        recs.push(s.bundle().check_phi_inverse(4).map_err(|e| e.to_string())?);
        no_failures(&recs).map_err(|e| format!("n = {n}: {e}"))?;
    }
    Ok("τ⁽ⁿ⁾ for n = 1, 2, 3 on |k| ≤ 4; φ_12 ∘ φ_21 = id up to length 4".into())
}

fn eta_properties(h: &HopfData, calc: &Presentation, samples: &[NCPoly]) -> Result<usize, String> {
    let err = |e: qbundle::Error| e.to_string();
    let mut n = 0;
    for x in samples {
        let mut sum = NCPoly::zero();
        for t in h.coproduct_terms(x, 2).map_err(err)? {
            sum.add_scaled(&t.leg(1).mul_raw(&h.eta(&t.leg(0), calc).map_err(err)?), &t.coeff);
        }
        let r = &differentiate(x, calc).map_err(err)? - &calc.normal_form(&sum).map_err(err)?;
        if !r.is_zero() {
            return Err(format!("dh = Σ h₂η(h₁) fails at {x}: {r}"));
        }
        let mut sum = NCPoly::zero();
        for t in h.coproduct_terms(x, 2).map_err(err)? {
            let a = h.eta(&t.leg(1), calc).map_err(err)?;
            let b = h.eta(&t.leg(0), calc).map_err(err)?;
            sum.add_scaled(&a.mul_raw(&b), &t.coeff);
        }
        let r = &differentiate(&h.eta(x, calc).map_err(err)?, calc).map_err(err)? + &calc.normal_form(&sum).map_err(err)?;
        if !r.is_zero() {
            return Err(format!("dη(h) = −Σ η(h₂)η(h₁) fails at {x}: {r}"));
        }
        n += 2;
    }
    Ok(n)
}

fn hopf_and_calculi() -> Outcome {
    let s = symbolic();
    let h = s.hopf();
    let words = s.hopf_words(5);
    no_failures(&h.check_axioms(&words).map_err(|e| e.to_string())?)?;
    let mut d2 = 0;
    for p in s.presentations() {
        if p.generators().iter().all(|g| g.degree == 0) {
            continue;
        }
        let samples: Vec<NCPoly> = irreducible_words(p, None, 3).into_iter().map(NCPoly::word).collect();
        let rep = check_d_squared(p, &samples).map_err(|e| e.to_string())?;
        if let Some((e, dd)) = rep.failures.first() {
            return Err(format!("d² ≠ 0 on {} at {e}: {dd}", p.name()));
        }
        d2 += rep.checked;
    }
    if d2 < 50 {
        return Err(format!("only {d2} d² cases"));
    }
    let universal = qbundle::hopf::universal_calculus(h.presentation(), "Ω(H)")
        .and_then(|u| close_differential_ideal(&u, &[]))
        .map_err(|e| e.to_string())?;
    let mut eta = eta_properties(h, &universal, &words)?;
    eta += eta_properties(h, s.connection().hopf_calc(), &words)?;
    Ok(format!("Hopf axioms on {} words; d² = 0 in {d2} cases; {eta} η identities", words.len()))
}

fn random_word(rng: &mut ChaCha8Rng, gens: &[qbundle::freealg::Sym], max: usize) -> Word {
    let len = rng.gen_range(0..=max);
    (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect()
}

fn random_coeff(rng: &mut ChaCha8Rng) -> Scalar {
    let c = Scalar::from_int(rng.gen_range(-3..=3));
    if rng.gen_bool(0.3) {
        &c * &Scalar::param(Param::P)
    } else {
        c
    }
}

fn random_element(rng: &mut ChaCha8Rng, gens: &[qbundle::freealg::Sym], max: usize) -> NCPoly {
    let mut e = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        e.add_scaled(&NCPoly::word(random_word(rng, gens, max)), &random_coeff(rng));
    }
    e
}

fn rewriting_soundness() -> Outcome {
    let s = symbolic();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    for p in s.presentations() {
        if p.is_relator_only() {
            continue;
        }
        let rep = check_local_confluence(p, default_overlap_bound(p)).map_err(|e| e.to_string())?;
        if !rep.is_confluent() {
            return Err(format!("{}: {}", p.name(), rep.summary(p)));
        }
        let gens: Vec<_> = p.generators().iter().map(|g| g.sym).collect();
        for _ in 0..200 {
            let a = random_element(&mut rng, &gens, 3);
            let b = random_element(&mut rng, &gens, 3);
            let na = p.nf(&a);
            if p.nf(&na) != na {
                return Err(format!("{}: NF not idempotent at {a}", p.name()));
            }
            if p.nf(&a.mul_raw(&b)) != p.nf(&na.mul_raw(&p.nf(&b))) {
                return Err(format!("{}: NF not multiplicative at {a}, {b}", p.name()));
            }
        }
        let free = Presentation::free(&format!("free {}", p.name()), p.generators().to_vec()).map_err(|e| e.to_string())?;
        let rels = p.relations();
        let bound = rels.iter().flat_map(|r| r.words().map(|w| free.weight(w) as usize)).max().unwrap_or(0) + 1;
        for k in 0..100 {
            let r = &rels[rng.gen_range(0..rels.len())];
            let u = NCPoly::word(random_word(&mut rng, &gens, 1));
            let mut e = NCPoly::zero();
            let used = u.max_len();
            let v = NCPoly::word(random_word(&mut rng, &gens, bound - used - r.max_len().min(bound - used)));
            e.add_scaled(&u.mul_raw(r).mul_raw(&v), &random_coeff(&mut rng));
            if k % 4 == 3 {
                e = &e + &NCPoly::word(random_word(&mut rng, &gens, 1));
            }
            let vanishes = p.nf(&e).is_zero();
            let member = ideal_membership_bounded(&e, &rels, &free, bound).map_err(|x| format!("{}: {x}", p.name()))?;
            if vanishes != member {
                return Err(format!("{}: membership {member} but NF vanishing {vanishes} at {e}", p.name()));
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} presentations: confluent, NF sound on 200 samples, membership agrees on 100"))
}

fn left_right() -> Outcome {
    let s = symbolic();
    let right: ConnectionData = s.connection().right_from_left().map_err(|e| e.to_string())?;
    let mut recs = right.check_connection(3).map_err(|e| e.to_string())?;
    for i in 0..2 {
        let samples = s.structure_samples(i, 3).map_err(|e| e.to_string())?;
        recs.push(right.check_structure_equation(i, &samples).map_err(|e| e.to_string())?);
        let v = ["x", "y"][i];
        let fs: Vec<NCPoly> = ["1".to_string(), v.to_string(), format!("{v}s")]
            .iter()
            .map(|x| s.chart_form(i, x).unwrap())
            .collect();
        let forms = vec![s.chart_form(i, &format!("d{v}")).unwrap()];
        recs.extend(right.check_derivative_properties(i, &fs, &forms, 2).map_err(|e| e.to_string())?);
    }
    no_failures(&recs)?;
    let kernel = recs.iter().find(|r| r.name == "kernel condition").ok_or("kernel record missing")?;
    if !kernel.anchor.contains("S⁻¹(R)") {
        return Err(format!("kernel condition checked against {}", kernel.anchor));
    }
    let c1 = s.calculus(0);
    let want = c1.nf(&parse_element("nu^-1*1/4*(x*dxs - xs*dx)", c1).unwrap());
    let got = right.a(0, &s.hopf().presentation().g("alpha")).map_err(|e| e.to_string())?;
    if got != want {
        return Err(format!("A_r(α) = {got}"));
    }
    Ok(format!("{} right-handed checks pass; A_r(α) = ν⁻¹¼(x dx* − x* dx)", recs.len()))
}

fn classical_limit() -> Outcome {
    let s = symbolic();
    let recs = classical_limit_check(&s).map_err(|e| e.to_string())?;
    no_failures(&recs)?;
    let f = verify_monopole_curvature(&s).map_err(|e| e.to_string())?;
    no_failures(&f)?;
    Ok("F_1(α) ↦ ½ dx dx*, F_2(α) ↦ −½ dy dy* by evaluation and by the classical scenario".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("curvature reproduction", curvature_reproduction),
        ("calculus collapse", calculus_collapse),
        ("structure equation", structure_equation),
        ("bundle reconstruction", bundle_reconstruction),
        ("coinvariants", coinvariants),
        ("transition suite", transition_suite),
        ("Hopf axioms, d² and η", hopf_and_calculi),
        ("rewriting soundness", rewriting_soundness),
        ("left-right bijection", left_right),
        ("classical limit", classical_limit),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stderr();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let line = match &res {
            Ok(detail) => format!("criterion {:>2} PASS  {name}: {detail} [{:?}]", k + 1, start.elapsed()),
            Err(e) => {
                failed.push(k + 1);
                format!("criterion {:>2} FAIL  {name}: {e} [{:?}]", k + 1, start.elapsed())
            }
        };
        writeln!(out, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
