//! Connections on a two-chart bundle given by local connection forms
//! `A_i(h) = Y(h) ω_i`: covariant derivative, horizontal projection,
//! pre-connection and curvature forms and the local curvature.

mod checks;

use std::sync::Arc;

pub use checks::{check_difference_map, DifferenceMap};

use crate::bundle::BundleData;
use crate::dga::{differential_extension, differentiate, SkewTensor};
use crate::error::{Error, Result};
use crate::freealg::{Morphism, NCPoly, Presentation, Word};
use crate::hopf::{functionals_for_u1, FunctionalPair, RightIdeal};
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Handedness {
    Left,
    Right,
}

/// Per-chart calculus data: `Γ(B_i)`, the chart calculus
/// `Γ(B_i) ⊗̂ Γ(H)`, its coaction target `Γ(B_i) ⊗̂ Γ(H) ⊗̂ Γ(H)`, the
/// one-form `ω_i` and the restriction `Γ(B_i) → Γ_m(B_12)`.
#[derive(Clone, Debug)]
pub struct ChartCalculus {
    base: Arc<Presentation>,
    full: SkewTensor,
    full3: SkewTensor,
    form: NCPoly,
    restrict: Morphism,
}

impl ChartCalculus {
    pub fn base(&self) -> &Arc<Presentation> {
        &self.base
    }

    pub fn full(&self) -> &SkewTensor {
        &self.full
    }

    pub fn full3(&self) -> &SkewTensor {
        &self.full3
    }

    pub fn form(&self) -> &NCPoly {
        &self.form
    }

    pub fn restriction(&self) -> &Morphism {
        &self.restrict
    }
}

/// A connection on a bundle with one-dimensional `ker ε / R`: the local
/// maps are `A_i(h) = Y(h) ω_i` with `Y = X` for a left connection and
/// `Y = −X∘S` for a right one.
#[derive(Clone, Debug)]
pub struct ConnectionData {
    bundle: Arc<BundleData>,
    hopf_calc: Arc<Presentation>,
    ideal: RightIdeal,
    functionals: FunctionalPair,
    gamma_m: Arc<Presentation>,
    charts: [ChartCalculus; 2],
    handedness: Handedness,
}

impl ConnectionData {
    /// `calculi[i] = (Γ(B_i), ω_i)`; `hopf_calc` is the calculus on `H`
    /// determined by `ideal` and `gamma_m` the overlap calculus.
    pub fn new(
        bundle: Arc<BundleData>,
        hopf_calc: Arc<Presentation>,
        ideal: RightIdeal,
        gamma_m: Arc<Presentation>,
        calculi: [(Arc<Presentation>, NCPoly); 2],
        handedness: Handedness,
    ) -> Result<ConnectionData> {
        let functionals = functionals_for_u1(bundle.hopf(), &ideal)?;
        let mut charts = Vec::with_capacity(2);
        for (i, (base, form)) in calculi.into_iter().enumerate() {
            let form = base.normal_form(&form)?;
            if form.words().any(|w| base.word_degree(w) != 1) {
                return Err(Error::Degree {
                    expected: 1,
                    found: base.degrees(&form).into_iter().find(|d| *d != 1).unwrap_or(0) as usize,
                });
            }
            let proj = &bundle.covering().projections()[i];
            let restrict = differential_extension(
                &format!("{}_Γm", proj.name()),
                base.clone(),
                gamma_m.clone(),
                proj.images(),
            )?;
            let rep = restrict.check()?;
            if let Some((rel, res)) = rep.failures.first() {
                return Err(Error::Validation(format!("{}: {rel} maps to {res}", restrict.name())));
            }
            let full = SkewTensor::new(
                &format!("{}⊗{}", base.name(), hopf_calc.name()),
                &[base.clone(), hopf_calc.clone()],
            )?;
            let full3 = SkewTensor::new(
                &format!("{}⊗{}⊗{}", base.name(), hopf_calc.name(), hopf_calc.name()),
                &[base.clone(), hopf_calc.clone(), hopf_calc.clone()],
            )?;
            charts.push(ChartCalculus {
                base,
                full,
                full3,
                form,
                restrict,
            });
        }
        let charts: [ChartCalculus; 2] = charts.try_into().expect("two charts");
        Ok(ConnectionData {
            bundle,
            hopf_calc,
            ideal,
            functionals,
            gamma_m,
            charts,
            handedness,
        })
    }

    pub fn bundle(&self) -> &Arc<BundleData> {
        &self.bundle
    }

    pub fn hopf_calc(&self) -> &Arc<Presentation> {
        &self.hopf_calc
    }

    pub fn ideal(&self) -> &RightIdeal {
        &self.ideal
    }

    pub fn functionals(&self) -> &FunctionalPair {
        &self.functionals
    }

    pub fn gamma_m(&self) -> &Arc<Presentation> {
        &self.gamma_m
    }

    pub fn chart(&self, i: usize) -> &ChartCalculus {
        &self.charts[i]
    }

    pub fn handedness(&self) -> Handedness {
        self.handedness
    }

    /// The same data with other one-forms `ω_i`.
    pub fn with_forms(&self, forms: [NCPoly; 2]) -> Result<ConnectionData> {
        let mut c = self.clone();
        for (ch, f) in c.charts.iter_mut().zip(forms) {
            ch.form = ch.base.normal_form(&f)?;
        }
        Ok(c)
    }

    /// `A_r = −A_l ∘ S`.
    pub fn right_from_left(&self) -> Result<ConnectionData> {
        if self.handedness != Handedness::Left {
            return Err(Error::Validation("right_from_left needs a left connection".into()));
        }
        let mut c = self.clone();
        c.handedness = Handedness::Right;
        Ok(c)
    }

    /// The scalar `Y(h)` with `A_i(h) = Y(h) ω_i`.
    pub fn coefficient(&self, h: &NCPoly) -> Result<Scalar> {
        match self.handedness {
            Handedness::Left => self.functionals.x(h),
            Handedness::Right => Ok(-&self.functionals.x(&self.bundle.hopf().antipode(h)?)?),
        }
    }

    fn coefficient_word(&self, w: &Word) -> Result<Scalar> {
        self.coefficient(&NCPoly::word(w.clone()))
    }

    /// `A_i(h) ∈ Γ¹(B_i)`.
    pub fn a(&self, i: usize, h: &NCPoly) -> Result<NCPoly> {
        Ok(self.charts[i].form.scale(&self.coefficient(h)?))
    }

    /// `F_l(h) = dA(h) + Σ A(h₁)A(h₂)`, or `F_r(h) = dA(h) − Σ A(h₂)A(h₁)`.
    pub fn curvature_f(&self, i: usize, h: &NCPoly) -> Result<NCPoly> {
        let base = &self.charts[i].base;
        let w = &self.charts[i].form;
        let mut out = differentiate(&self.a(i, h)?, base)?;
        let ww = base.normal_form(&w.mul_raw(w))?;
        for t in self.bundle.hopf().coproduct_terms(h, 2)? {
            let c = &(&self.coefficient_word(&t.legs[0])? * &self.coefficient_word(&t.legs[1])?) * &t.coeff;
            let c = match self.handedness {
                Handedness::Left => c,
                Handedness::Right => -&c,
            };
            out.add_scaled(&ww, &c);
        }
        base.normal_form(&out)
    }

    fn full(&self, i: usize) -> &SkewTensor {
        &self.charts[i].full
    }

    /// `γ ⊗ h` in the chart calculus.
    pub fn tensor(&self, i: usize, gamma: &NCPoly, h: &NCPoly) -> Result<NCPoly> {
        self.full(i).assemble(&[gamma.clone(), h.clone()])
    }

    fn split(&self, i: usize, e: &NCPoly) -> Result<Vec<(NCPoly, NCPoly, Scalar)>> {
        Ok(self
            .full(i)
            .split(e)?
            .into_iter()
            .map(|(legs, c)| (NCPoly::word(legs[0].clone()), NCPoly::word(legs[1].clone()), c))
            .collect())
    }

    fn leg_degree(&self, i: usize, leg: usize, w: &NCPoly) -> u32 {
        let p = &self.full(i).factors()[leg];
        w.words().map(|w| p.word_degree(w)).max().unwrap_or(0)
    }

    /// Whether every Hopf leg has degree 0.
    pub fn is_horizontal(&self, i: usize, e: &NCPoly) -> Result<bool> {
        Ok(self.split(i, e)?.iter().all(|(_, h, _)| self.leg_degree(i, 1, h) == 0))
    }

    /// `D(γ ⊗ h) = dγ ⊗ h + (−1)^{n+1} Σ γ A(h₁) ⊗ h₂` (left) or
    /// `dγ ⊗ h − Σ A(h₁) γ ⊗ h₂` (right).
    pub fn covariant_derivative(&self, i: usize, e: &NCPoly) -> Result<NCPoly> {
        let base = &self.charts[i].base;
        let hopf = self.bundle.hopf();
        let mut out = NCPoly::zero();
        for (g, h, c) in self.split(i, e)? {
            if self.leg_degree(i, 1, &h) != 0 {
                return Err(Error::NotHorizontal(e.to_string()));
            }
            let n = self.leg_degree(i, 0, &g);
            out.add_scaled(&self.tensor(i, &differentiate(&g, base)?, &h)?, &c);
            for t in hopf.coproduct_terms(&h, 2)? {
                let a = self.a(i, &t.leg(0))?;
                let (ga, sign) = match self.handedness {
                    Handedness::Left => (g.mul_raw(&a), if n % 2 == 0 { -1 } else { 1 }),
                    Handedness::Right => (a.mul_raw(&g), -1),
                };
                let k = &(&c * &t.coeff) * &Scalar::from_int(sign);
                out.add_scaled(&self.tensor(i, &ga, &t.leg(1))?, &k);
            }
        }
        self.full(i).presentation().normal_form(&out)
    }

    /// `hor(γ ⊗ h) = γ ⊗ h` for `γ ∈ Γ¹(B_i)` and, writing a Hopf-leg word
    /// as `u·dg·v = u·d(gv) − ug·dv`, `hor(a ⊗ h dk) = −Σ a A(k₁) ⊗ h k₂`.
    /// Defined for left connections on degree-1 elements.
    pub fn hor(&self, i: usize, e: &NCPoly) -> Result<NCPoly> {
        if self.handedness != Handedness::Left {
            return Err(Error::Unsupported("the horizontal projection is implemented for left connections".into()));
        }
        let hopf = self.bundle.hopf();
        let hc = &self.hopf_calc;
        let mut out = NCPoly::zero();
        for (a, w, c) in self.split(i, e)? {
            let (da, dw) = (self.leg_degree(i, 0, &a), self.leg_degree(i, 1, &w));
            if da + dw != 1 {
                return Err(Error::Degree {
                    expected: 1,
                    found: (da + dw) as usize,
                });
            }
            if dw == 0 {
                out.add_scaled(&self.tensor(i, &a, &w)?, &c);
                continue;
            }
            let word = w.words().next().expect("one word").clone();
            let pos = word.iter().position(|s| hc.degree(*s) == 1).expect("one differential");
            let g = hc
                .generator(word[pos])
                .and_then(|g| g.base)
                .ok_or_else(|| Error::Presentation(format!("`{}` is not a differential", word[pos])))?;
            let u = NCPoly::word(word[..pos].to_vec());
            let v = NCPoly::word(word[pos + 1..].to_vec());
            let gv = NCPoly::gen(g).mul_raw(&v);
            let ug = u.mul_raw(&NCPoly::gen(g));
            for (k, pre, sign) in [(&gv, &u, -1), (&v, &ug, 1)] {
                for t in hopf.coproduct_terms(k, 2)? {
                    let term = self.tensor(i, &a.mul_raw(&self.a(i, &t.leg(0))?), &pre.mul_raw(&t.leg(1)))?;
                    out.add_scaled(&term, &(&(&c * &t.coeff) * &Scalar::from_int(sign)));
                }
            }
        }
        self.full(i).presentation().normal_form(&out)
    }

    /// The canonical projection: keeps the summands with Hopf legs of
    /// degree 0 and drops the rest.
    pub fn hor_c(&self, i: usize, e: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (a, w, c) in self.split(i, e)? {
            if self.leg_degree(i, 1, &w) == 0 {
                out.add_scaled(&self.tensor(i, &a, &w)?, &c);
            }
        }
        Ok(out)
    }

    /// `Σ 1 ⊗ S(h₁) dh₂`.
    pub fn maurer_cartan(&self, i: usize, h: &NCPoly) -> Result<NCPoly> {
        let hopf = self.bundle.hopf();
        let mut out = NCPoly::zero();
        for t in hopf.coproduct_terms(h, 2)? {
            let s = hopf.antipode(&t.leg(0))?;
            let dh = differentiate(&t.leg(1), &self.hopf_calc)?;
            out.add_scaled(&self.tensor(i, &NCPoly::one(), &s.mul_raw(&dh))?, &t.coeff);
        }
        self.full(i).presentation().normal_form(&out)
    }

    /// `χ_i(ω(h)) = −Σ 1 ⊗ S(h₁)dh₂ − Σ A(h₂) ⊗ S(h₁)h₃` (left connections).
    pub fn connection_form(&self, i: usize, h: &NCPoly) -> Result<NCPoly> {
        if self.handedness != Handedness::Left {
            return Err(Error::Unsupported("the connection form is implemented for left connections".into()));
        }
        let hopf = self.bundle.hopf();
        let mut out = self.maurer_cartan(i, h)?.scale(&Scalar::from_int(-1));
        for t in hopf.coproduct_terms(h, 3)? {
            let s = hopf.antipode(&t.leg(0))?;
            let term = self.tensor(i, &self.a(i, &t.leg(1))?, &s.mul_raw(&t.leg(2)))?;
            out.add_scaled(&term, &-&t.coeff);
        }
        self.full(i).presentation().normal_form(&out)
    }

    /// `Ω(h) = dω(h) − Σ ω(h₁) ω(h₂)` in the chart calculus.
    pub fn curvature_form(&self, i: usize, h: &NCPoly) -> Result<NCPoly> {
        let full = self.full(i).presentation();
        let mut out = differentiate(&self.connection_form(i, h)?, full)?;
        for t in self.bundle.hopf().coproduct_terms(h, 2)? {
            let prod = self.connection_form(i, &t.leg(0))?.mul_raw(&self.connection_form(i, &t.leg(1))?);
            out.add_scaled(&prod, &-&t.coeff);
        }
        full.normal_form(&out)
    }

    /// `−Σ F(h₂) ⊗ S(h₁)h₃` (left) or `−Σ F(h₂) ⊗ h₃S⁻¹(h₁)` (right).
    pub fn curvature_form_from_f(&self, i: usize, h: &NCPoly) -> Result<NCPoly> {
        let hopf = self.bundle.hopf();
        let mut out = NCPoly::zero();
        for t in hopf.coproduct_terms(h, 3)? {
            let f = self.curvature_f(i, &t.leg(1))?;
            let right = match self.handedness {
                Handedness::Left => hopf.antipode(&t.leg(0))?.mul_raw(&t.leg(2)),
                Handedness::Right => t.leg(2).mul_raw(&hopf.inv_antipode(&t.leg(0))?),
            };
            out.add_scaled(&self.tensor(i, &f, &right)?, &-&t.coeff);
        }
        self.full(i).presentation().normal_form(&out)
    }

    /// `Σ (γ ⊗ h₁) Ω(h₂)` (left) or `Σ Ω(h₂) (γ ⊗ h₁)` (right) on a
    /// horizontal element, with `Ω` from the local curvature.
    pub fn curvature_pairing(&self, i: usize, e: &NCPoly) -> Result<NCPoly> {
        let hopf = self.bundle.hopf();
        let mut out = NCPoly::zero();
        for (g, h, c) in self.split(i, e)? {
            for t in hopf.coproduct_terms(&h, 2)? {
                let lead = self.tensor(i, &g, &t.leg(0))?;
                let omega = match self.handedness {
                    Handedness::Left => self.curvature_form(i, &t.leg(1))?,
                    Handedness::Right => self.curvature_form_from_f(i, &t.leg(1))?,
                };
                let prod = match self.handedness {
                    Handedness::Left => lead.mul_raw(&omega),
                    Handedness::Right => omega.mul_raw(&lead),
                };
                out.add_scaled(&prod, &(&c * &t.coeff));
            }
        }
        self.full(i).presentation().normal_form(&out)
    }

    /// `Δ(dh) = Σ dh₁ ⊗ h₂` and `Δ(h)` on the Hopf calculus, as elements of
    /// legs 1 and 2 of the three-leg chart calculus.
    fn hopf_calc_coaction(&self, i: usize, w: &Word) -> Result<NCPoly> {
        let t3 = &self.charts[i].full3;
        let hopf = self.bundle.hopf();
        let mut acc = NCPoly::one();
        for s in w {
            let g = self
                .hopf_calc
                .generator(*s)
                .ok_or_else(|| Error::UnknownGenerator(s.name().to_string()))?;
            let (h, diff) = match (g.degree, g.base) {
                (0, _) => (NCPoly::gen(*s), false),
                (1, Some(b)) => (NCPoly::gen(b), true),
                _ => return Err(Error::Unsupported(format!("coaction on `{s}`"))),
            };
            let mut img = NCPoly::zero();
            for t in hopf.coproduct_terms(&h, 2)? {
                let first = if diff {
                    differentiate(&t.leg(0), &self.hopf_calc)?
                } else {
                    t.leg(0)
                };
                img.add_scaled(&t3.assemble(&[NCPoly::one(), first, t.leg(1)])?, &t.coeff);
            }
            acc = t3.presentation().normal_form(&acc.mul_raw(&img))?;
        }
        Ok(acc)
    }

    /// The right coaction `id ⊗ Δ` on the chart calculus.
    pub fn coaction(&self, i: usize, e: &NCPoly) -> Result<NCPoly> {
        let t3 = &self.charts[i].full3;
        let mut out = NCPoly::zero();
        for (legs, c) in self.full(i).split(e)? {
            let g = t3.assemble(&[NCPoly::word(legs[0].clone()), NCPoly::one(), NCPoly::one()])?;
            out.add_scaled(&g.mul_raw(&self.hopf_calc_coaction(i, &legs[1])?), &c);
        }
        t3.presentation().normal_form(&out)
    }

    /// `e ⊗ k` in the three-leg chart calculus.
    pub fn lift(&self, i: usize, e: &NCPoly, k: &NCPoly) -> Result<NCPoly> {
        let t3 = &self.charts[i].full3;
        let mut out = NCPoly::zero();
        for (g, h, c) in self.split(i, e)? {
            out.add_scaled(&t3.assemble(&[g, h, k.clone()])?, &c);
        }
        t3.presentation().normal_form(&out)
    }

    /// Applies a map on the chart calculus to the first two legs of a
    /// three-leg element.
    pub fn on_first_legs(&self, i: usize, e: &NCPoly, f: impl Fn(&NCPoly) -> Result<NCPoly>) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (legs, c) in self.charts[i].full3.split(e)? {
            let inner = self.tensor(i, &NCPoly::word(legs[0].clone()), &NCPoly::word(legs[1].clone()))?;
            out.add_scaled(&self.lift(i, &f(&inner)?, &NCPoly::word(legs[2].clone()))?, &c);
        }
        Ok(out)
    }

    /// `(id ⊗ ε)` on the Hopf leg of a chart calculus element with
    /// degree-0 Hopf legs.
    pub fn counit_leg(&self, i: usize, e: &NCPoly) -> Result<NCPoly> {
        let hopf = self.bundle.hopf();
        let mut out = NCPoly::zero();
        for (g, h, c) in self.split(i, e)? {
            if self.leg_degree(i, 1, &h) != 0 {
                continue;
            }
            out.add_scaled(&g, &(&c * &hopf.counit(&h)?));
        }
        self.charts[i].base.normal_form(&out)
    }

    /// `π(e)` in `Γ_m(B_12)`.
    pub fn restrict(&self, i: usize, e: &NCPoly) -> Result<NCPoly> {
        self.charts[i].restrict.apply(e)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::bundle::jm_ideal;
    use crate::freealg::parse_element;
    use crate::hopf::HopfData;

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
        Arc::new(crate::dga::close_differential_ideal(&om, &gens).unwrap())
    }

    pub(crate) fn monopole() -> ConnectionData {
        let b = Arc::new(crate::bundle::tests::sphere_bundle(1));
        let h: &HopfData = b.hopf();
        let r = RightIdeal::parse(h, &["alpha + nu*alphas - (1+nu)"]).unwrap();
        let gh = Arc::new(h.covariant_calculus(&r).unwrap());
        let c1 = disc_calc("x", "p");
        let c2 = disc_calc("y", "q");
        let jm = jm_ideal(&b, [&c1, &c2], &r, 2).unwrap();
        let gm = Arc::new(jm.gamma_m("Γ_m(S1)").unwrap());
        let w1 = parse_element("1/4*(x*dxs - xs*dx)", &c1).unwrap();
        let w2 = parse_element("1/4*(ys*dy - y*dys)", &c2).unwrap();
        ConnectionData::new(b, gh, r, gm, [(c1, w1), (c2, w2)], Handedness::Left).unwrap()
    }

    fn ps(c: &ConnectionData, i: usize, s: &str) -> NCPoly {
        let p = c.chart(i).full().presentation();
        p.nf(&parse_element(s, p).unwrap())
    }

    #[test]
    fn local_curvature_matches_closed_form() {
        let c = monopole();
        let hp = c.bundle().hopf().presentation().clone();
        let b1 = c.chart(0).base().clone();
        let want = b1.nf(&parse_element("1/4*(1+p)*dx*dxs + 1/16*(x*xs - p*xs*x)*dx*dxs", &b1).unwrap());
        assert_eq!(c.curvature_f(0, &hp.g("alpha")).unwrap(), want);
        let b2 = c.chart(1).base().clone();
        let want = b2.nf(&parse_element("-1/4*(1+q)*dy*dys + 1/16*(y*ys - q*ys*y)*dy*dys", &b2).unwrap());
        assert_eq!(c.curvature_f(1, &hp.g("alpha")).unwrap(), want);
        assert!(c.curvature_f(0, &NCPoly::one()).unwrap().is_zero());
    }

    #[test]
    fn covariant_derivative_examples() {
        let c = monopole();
        let d = |s: &str| c.covariant_derivative(0, &ps(&c, 0, s)).unwrap();
        assert_eq!(d("alpha"), ps(&c, 0, "-1/4*(x*dxs - xs*dx)*alpha"));
        assert!(d("1").is_zero());
        assert_eq!(d("x"), ps(&c, 0, "dx"));
        assert!(matches!(
            c.covariant_derivative(0, &ps(&c, 0, "dalpha")),
            Err(Error::NotHorizontal(_))
        ));
    }

    #[test]
    fn horizontal_projection_examples() {
        let c = monopole();
        let hor = |s: &str| c.hor(0, &ps(&c, 0, s)).unwrap();
        assert_eq!(hor("dx*alpha"), ps(&c, 0, "dx*alpha"));
        assert_eq!(hor("dalpha"), ps(&c, 0, "-1/4*(x*dxs - xs*dx)*alpha"));
        let e = ps(&c, 0, "x*alphas*dalpha + dxs*alpha*alpha + xs*dalphas");
        let h = c.hor(0, &e).unwrap();
        assert_eq!(c.hor(0, &h).unwrap(), h);
        assert!(matches!(c.hor(0, &ps(&c, 0, "x")), Err(Error::Degree { .. })));
    }

    #[test]
    fn connection_and_curvature_forms() {
        let c = monopole();
        let a = c.bundle().hopf().presentation().g("alpha");
        let w = c.connection_form(0, &a).unwrap();
        assert_eq!(w, ps(&c, 0, "-alphas*dalpha - 1/4*(x*dxs - xs*dx)"));
        assert_eq!(&w - &c.hor_c(0, &w).unwrap(), ps(&c, 0, "-alphas*dalpha"));
        assert!(c.connection_form(0, &NCPoly::one()).unwrap().is_zero());
        let om = c.curvature_form(0, &a).unwrap();
        let f = c.curvature_f(0, &a).unwrap();
        assert_eq!(om, c.tensor(0, &f, &NCPoly::one()).unwrap().scale(&Scalar::from_int(-1)));
        assert_eq!(om, c.curvature_form_from_f(0, &a).unwrap());
    }

    #[test]
    fn right_connection_values() {
        let c = monopole().right_from_left().unwrap();
        let a = c.bundle().hopf().presentation().g("alpha");
        let b1 = c.chart(0).base().clone();
        let want = b1.nf(&parse_element("nu^-1*1/4*(x*dxs - xs*dx)", &b1).unwrap());
        assert_eq!(c.a(0, &a).unwrap(), want);
        assert!(c.a(0, &NCPoly::one()).unwrap().is_zero());
    }
}
