//! Property tests over randomly generated elements of the monopole
//! presentations.

use std::sync::OnceLock;

use proptest::prelude::*;
use qbundle::dga::{differentiate, leibniz_residue};
use qbundle::freealg::{parse_element, NCPoly, Presentation, Sym, Word};
use qbundle::monopole::{build_scenario, MonopoleScenario, ScenarioConfig};
use qbundle::report::{Record, Report, Status};
use qbundle::{Param, Scalar};

fn scenario() -> &'static MonopoleScenario {
    static S: OnceLock<MonopoleScenario> = OnceLock::new();
    S.get_or_init(|| build_scenario(ScenarioConfig::symbolic(1)).unwrap())
}

type Terms = Vec<(Vec<usize>, i64, bool)>;

fn terms(max_len: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0usize..16, 0..=max_len), -4i64..=4, any::<bool>()), 1..4)
}

fn element(gens: &[Sym], t: &Terms) -> NCPoly {
    let mut e = NCPoly::zero();
    for (w, c, with_p) in t {
        let word: Word = w.iter().map(|i| gens[i % gens.len()]).collect();
        let mut s = Scalar::from_int(*c);
        if *with_p {
            s = &s * &Scalar::param(Param::P);
        }
        e.add_scaled(&NCPoly::word(word), &s);
    }
    e
}

fn gens_of(p: &Presentation, degree: Option<u32>) -> Vec<Sym> {
    p.generators()
        .iter()
        .filter(|g| degree.is_none_or(|d| g.degree == d))
        .map(|g| g.sym)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent_and_multiplicative(a in terms(4), b in terms(3)) {
        let p = scenario().calculus(0);
        let g = gens_of(p, None);
        let (a, b) = (element(&g, &a), element(&g, &b));
        let na = p.nf(&a);
        prop_assert_eq!(p.nf(&na), na.clone());
        prop_assert_eq!(p.nf(&a.mul_raw(&b)), p.nf(&na.mul_raw(&p.nf(&b))));
    }

    #[test]
    fn display_parses_back(a in terms(4)) {
        let p = scenario().calculus(1);
        let e = p.nf(&element(&gens_of(p, None), &a));
        let back = parse_element(&e.to_string(), p).unwrap();
        prop_assert_eq!(p.nf(&back), e);
    }

    #[test]
    fn d_squared_vanishes_and_leibniz_holds(a in terms(3), b in terms(3)) {
        for i in 0..2 {
            let p = scenario().calculus(i);
            let g0 = gens_of(p, Some(0));
            let (a, b) = (p.nf(&element(&g0, &a)), p.nf(&element(&g0, &b)));
            let da = differentiate(&a, p).unwrap();
            prop_assert!(differentiate(&da, p).unwrap().is_zero());
            prop_assert!(leibniz_residue(&a, &b, p).unwrap().is_zero());
            prop_assert!(leibniz_residue(&da, &b, p).unwrap().is_zero());
        }
    }

    #[test]
    fn hopf_counit_and_antipode_identities(k in -6i32..=6, j in -6i32..=6) {
        let h = scenario().hopf();
        let hp = h.presentation();
        let pw = |k: i32| if k >= 0 { hp.pow(&hp.g("alpha"), k as u32) } else { hp.pow(&hp.g("alphas"), (-k) as u32) };
        let x = &pw(k) + &pw(j).scale(&Scalar::param(Param::Q));
        let mut m = NCPoly::zero();
        for t in h.coproduct_terms(&x, 2).unwrap() {
            m.add_scaled(&h.antipode(&t.leg(0)).unwrap().mul_raw(&t.leg(1)), &t.coeff);
        }
        prop_assert_eq!(hp.nf(&m), NCPoly::scalar(h.counit(&x).unwrap()));
        prop_assert_eq!(h.inv_antipode(&h.antipode(&x).unwrap()).unwrap(), hp.nf(&x));
    }

    #[test]
    fn gluing_maps_are_inverse_and_members_multiply(e in terms(4), w in prop::collection::vec(0usize..4, 0..4)) {
        let s = scenario();
        let b = s.bundle();
        let t = s.total_space();
        let names = ["a", "as", "b", "bs"];
        let mut f = b.element(&NCPoly::one(), &NCPoly::one()).unwrap();
        for i in &w {
            let g = t.g(names[*i]);
            let gi = b.element(&s.chi(0).apply(&g).unwrap(), &s.chi(1).apply(&g).unwrap()).unwrap();
            f = b.mul(&f, &gi).unwrap();
        }
        prop_assert!(b.is_member(&f).unwrap().holds);
        let ov = b.overlap().presentation();
        let e = element(&gens_of(ov, None), &e);
        let back = b.phi(0).apply(&b.phi(1).apply(&e).unwrap()).unwrap();
        prop_assert_eq!(back, ov.nf(&e));
    }

    #[test]
    fn covariant_derivative_is_covariant(g in 0usize..4, k in -3i32..=3, chart in 0usize..2) {
        let s = scenario();
        let c = s.connection();
        let v = ["x", "y"][chart];
        let gammas = ["1".to_string(), v.to_string(), format!("{v}s"), format!("d{v}")];
        let gamma = s.chart_form(chart, &gammas[g]).unwrap();
        let hp = s.hopf().presentation();
        let h = if k >= 0 { hp.pow(&hp.g("alpha"), k as u32) } else { hp.pow(&hp.g("alphas"), (-k) as u32) };
        let e = c.tensor(chart, &gamma, &h).unwrap();
        let lhs = c.on_first_legs(chart, &c.coaction(chart, &e).unwrap(), |x| c.covariant_derivative(chart, x)).unwrap();
        let rhs = c.coaction(chart, &c.covariant_derivative(chart, &e).unwrap()).unwrap();
        let t3 = c.chart(chart).full3().presentation();
        prop_assert!(t3.nf(&(&lhs - &rhs)).is_zero());
        let dd = c.covariant_derivative(chart, &c.covariant_derivative(chart, &e).unwrap()).unwrap();
        prop_assert_eq!(dd, c.curvature_pairing(chart, &e).unwrap());
    }

    #[test]
    fn report_status_counts_partition(statuses in prop::collection::vec(0u8..4, 0..20)) {
        let mut rep = Report::new("r");
        for (i, s) in statuses.iter().enumerate() {
            let st = [Status::Pass, Status::Fail, Status::Skipped, Status::Vacuous][*s as usize];
            rep.push(Record::new(format!("c{i}"), "a = a", st));
        }
        let total: usize = [Status::Pass, Status::Fail, Status::Skipped, Status::Vacuous].iter().map(|s| rep.count(*s)).sum();
        prop_assert_eq!(total, statuses.len());
        prop_assert_eq!(rep.passed(), !statuses.contains(&1));
    }
}
