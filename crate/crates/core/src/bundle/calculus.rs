//! The differential ideal `J_m(B_12)` on the overlap and the calculus
//! `Γ_m(B_12)` it determines.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{BundleData, TransitionData};
use crate::dga::{close_differential_ideal, differential_extension, differentiate};
use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Presentation, Word};
use crate::hopf::{universal_calculus, RightIdeal};
use crate::report::Record;

/// Generators of `J_m(B_12) ⊂ Ω(B_12)`, grouped by origin.
#[derive(Clone, Debug)]
pub struct JmIdeal {
    pub omega: Arc<Presentation>,
    /// Chart calculus relations pushed to the overlap.
    pub from_charts: Vec<NCPoly>,
    /// `Σ τ_21(r₁) dτ_12(r₂)` for generators `r` of `R`.
    pub from_ideal: Vec<NCPoly>,
    /// `(dτ(h)) a − a dτ(h)` for Hopf generators `h` and overlap generators `a`.
    pub commutators: Vec<NCPoly>,
    /// `Σ τ_12(r₁) dτ_21(r₂)`, expected to lie in the ideal.
    pub swapped: Vec<NCPoly>,
}

impl JmIdeal {
    pub fn generators(&self) -> Vec<NCPoly> {
        let mut v = self.from_charts.clone();
        v.extend(self.from_ideal.iter().cloned());
        v.extend(self.commutators.iter().cloned());
        v.retain(|e| !e.is_zero());
        v
    }

    /// `Γ_m(B_12) = Ω(B_12) / J_m(B_12)`.
    pub fn gamma_m(&self, name: &str) -> Result<Presentation> {
        let mut g = close_differential_ideal(&self.omega, &self.generators())?;
        g.set_name(name);
        Ok(g)
    }
}

/// `Σ τ(S(r₁)r₃) ⊗ r₂ ∈ B_12 ⊗ R` for every generator `r` of `R` and both
/// transition functions.
pub fn check_jbij(t: &TransitionData, r: &RightIdeal, bound: usize) -> Result<Vec<Record>> {
    let hopf = t.hopf();
    let b12 = t.overlap();
    let mut recs = Vec::new();
    for ij in 0..2 {
        let tau = t.tau(ij);
        let mut res = None;
        for g in r.generators() {
            let mut by_word: BTreeMap<Word, NCPoly> = BTreeMap::new();
            for (left, right) in hopf.ad_terms(g)? {
                for (w, c) in b12.normal_form(&tau.apply(&left)?)?.terms() {
                    by_word.entry(w.clone()).or_default().add_scaled(&right, c);
                }
            }
            for (w, v) in by_word {
                if !v.is_zero() && !r.contains(hopf, &v, bound)? && res.is_none() {
                    res = Some(format!("r = {g}: component {v} at {} is not in R", NCPoly::word(w)));
                }
            }
        }
        recs.push(
            Record::check(
                format!("ideal compatible with {}", tau.name()),
                "Σ τ(S(r₁)r₃) ⊗ r₂ ∈ B_12 ⊗ R",
                res,
            )
            .note(format!("membership in R tested with right multiples up to length {bound}")),
        );
    }
    Ok(recs)
}

fn tau_d_tau(t: &TransitionData, left: usize, right: usize, r: &NCPoly, omega: &Presentation) -> Result<NCPoly> {
    let mut out = NCPoly::zero();
    for term in t.hopf().coproduct_terms(r, 2)? {
        let a = t.tau(left).apply(&term.leg(0))?;
        let b = differentiate(&t.tau(right).apply(&term.leg(1))?, omega)?;
        out.add_scaled(&a.mul_raw(&b), &term.coeff);
    }
    omega.normal_form(&out)
}

/// Generators of `J_m(B_12)` from the chart calculi, the right ideal and
/// the transition functions. Fails when the ideal is not compatible with
/// the transition functions, since the generating sets then do not apply.
pub fn jm_ideal(b: &BundleData, calculi: [&Arc<Presentation>; 2], r: &RightIdeal, bound: usize) -> Result<JmIdeal> {
    let t = b.transition();
    if let Some(bad) = check_jbij(t, r, bound)?.into_iter().find(|rec| rec.status == crate::report::Status::Fail) {
        return Err(Error::Unsupported(format!(
            "{}: {}; the general Γ_m construction is not implemented",
            bad.name,
            bad.residue.unwrap_or_default()
        )));
    }
    let b12 = b.covering().overlap();
    let omega = Arc::new(universal_calculus(b12, &format!("Ω({})", b12.name()))?);

    let mut from_charts = Vec::new();
    for (i, calc) in calculi.iter().enumerate() {
        let proj = &b.covering().projections()[i];
        let ext = differential_extension(&format!("{}_Γ", proj.name()), (*calc).clone(), omega.clone(), proj.images())?;
        for rel in calc.relations() {
            let img = ext.apply(&rel)?;
            if !img.is_zero() && !from_charts.contains(&img) {
                from_charts.push(img);
            }
        }
    }

    let mut from_ideal = Vec::new();
    let mut swapped = Vec::new();
    for g in r.generators() {
        from_ideal.push(tau_d_tau(t, 1, 0, g, &omega)?);
        swapped.push(tau_d_tau(t, 0, 1, g, &omega)?);
    }

    let mut commutators = Vec::new();
    for h in t.hopf().presentation().generators() {
        let hg = NCPoly::gen(h.sym);
        for ij in 0..2 {
            let dt = differentiate(&t.tau(ij).apply(&hg)?, &omega)?;
            for a in b12.generators() {
                let a = NCPoly::gen(a.sym);
                let c = omega.normal_form(&(&dt.mul_raw(&a) - &a.mul_raw(&dt)))?;
                if !c.is_zero() && !commutators.contains(&c) {
                    commutators.push(c);
                }
            }
        }
    }
    Ok(JmIdeal {
        omega,
        from_charts,
        from_ideal,
        commutators,
        swapped,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::sphere_bundle;
    use super::*;
    use crate::freealg::parse_element;
    use crate::hopf::HopfData;
    use crate::report::Status;

    pub(crate) fn disc_calc(x: &str, param: &str) -> Arc<Presentation> {
        let xs = format!("{x}s");
        let om = crate::freealg::Builder::new(&format!("Γ(D_{param})"))
            .calculus(&[x, &xs])
            .relation(&format!("{xs}*{x} - {param}*{x}*{xs} - (1-{param})"))
            .build_unchecked()
            .unwrap();
        let gens: Vec<NCPoly> = [
            format!("{x}*d{x} - {param}^-1*d{x}*{x}"),
            format!("{xs}*d{xs} - {param}*d{xs}*{xs}"),
            format!("{x}*d{xs} - {param}^-1*d{xs}*{x}"),
            format!("{xs}*d{x} - {param}*d{x}*{xs}"),
        ]
        .iter()
        .map(|s| parse_element(s, &om).unwrap())
        .collect();
        Arc::new(close_differential_ideal(&om, &gens).unwrap())
    }

    fn r(h: &HopfData) -> RightIdeal {
        RightIdeal::parse(h, &["alpha + nu*alphas - (1+nu)"]).unwrap()
    }

    #[test]
    fn jbij_holds_for_u1() {
        let b = sphere_bundle(1);
        for rec in check_jbij(b.transition(), &r(b.hopf()), 2).unwrap() {
            assert_eq!(rec.status, Status::Pass, "{rec:?}");
        }
    }

    #[test]
    fn ideal_generators_and_collapse() {
        let b = sphere_bundle(1);
        let c1 = disc_calc("x", "p");
        let c2 = disc_calc("y", "q");
        let jm = jm_ideal(&b, [&c1, &c2], &r(b.hopf()), 2).unwrap();
        let om = jm.omega.clone();
        let want = om.nf(&parse_element("alphas*dalpha + nu*alpha*dalphas", &om).unwrap());
        assert!(jm.from_ideal.contains(&want), "{:?}", jm.from_ideal);
        let comm = om.nf(&parse_element("dalpha*alpha - alpha*dalpha", &om).unwrap());
        assert!(jm.commutators.iter().any(|c| *c == comm || *c == comm.scale(&crate::scalars::Scalar::from_int(-1))));
        let g = jm.gamma_m("Γ_m(S1)").unwrap();
        assert!(g.nf(&g.g("dalpha")).is_zero());
        assert!(g.nf(&g.g("dalphas")).is_zero());
        for s in &jm.swapped {
            assert!(g.nf(s).is_zero());
        }
    }

    #[test]
    fn zero_ideal_has_no_ideal_generators() {
        let b = sphere_bundle(1);
        let c1 = disc_calc("x", "p");
        let c2 = disc_calc("y", "q");
        let zero = RightIdeal::new(b.hopf(), vec![]).unwrap();
        let jm = jm_ideal(&b, [&c1, &c2], &zero, 2).unwrap();
        assert!(jm.from_ideal.is_empty());
        assert!(!jm.from_charts.is_empty() && !jm.commutators.is_empty());
    }
}
