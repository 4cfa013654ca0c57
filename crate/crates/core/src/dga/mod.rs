//! Differentials on presentations, differential-ideal closure and skew
//! tensor products of calculi.

mod tensor;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use tensor::SkewTensor;

use crate::error::{Error, Result};
use crate::freealg::{
    check_local_confluence, default_overlap_bound, Morphism, NCPoly, Presentation, Sym,
};
use crate::scalars::Scalar;

/// Rounds of differentiation and critical-pair resolution allowed when
/// closing a differential ideal.
pub const CLOSURE_ROUNDS: usize = 8;

fn d_gen(pres: &Presentation, s: Sym) -> Result<NCPoly> {
    let g = pres
        .generator(s)
        .ok_or_else(|| Error::UnknownGenerator(s.name().to_string()))?;
    if g.degree > 0 {
        return Ok(NCPoly::zero());
    }
    pres.differential()
        .and_then(|d| d.get(&s))
        .cloned()
        .ok_or_else(|| Error::Presentation(format!("no differential assigned to `{s}` in {}", pres.name())))
}

/// Graded Leibniz extension of the generator differentials, normal-formed.
pub fn differentiate(e: &NCPoly, pres: &Presentation) -> Result<NCPoly> {
    let mut out = NCPoly::zero();
    for (w, c) in e.terms() {
        let mut sign = 1i64;
        for i in 0..w.len() {
            let dg = d_gen(pres, w[i])?;
            if !dg.is_zero() {
                let term = NCPoly::word(w[..i].to_vec())
                    .mul_raw(&dg)
                    .mul_raw(&NCPoly::word(w[i + 1..].to_vec()));
                out.add_scaled(&term, &(c * &Scalar::from_int(sign)));
            }
            if pres.degree(w[i]) % 2 == 1 {
                sign = -sign;
            }
        }
    }
    pres.normal_form(&out)
}

pub fn d(e: &NCPoly, pres: &Presentation) -> NCPoly {
    differentiate(e, pres).unwrap_or_else(|err| panic!("{}: {err}", pres.name()))
}

/// Extends algebra images to a morphism of calculi by `dg ↦ d(image(g))`.
/// Degree-0 generators of `source` must all appear in `images`.
pub fn differential_extension(
    name: &str,
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    images: &BTreeMap<Sym, NCPoly>,
) -> Result<Morphism> {
    let mut all = images.clone();
    for g in source.generators() {
        if g.degree == 0 {
            if !all.contains_key(&g.sym) {
                return Err(Error::Presentation(format!("{name}: no image for `{}`", g.sym)));
            }
            continue;
        }
        let base = g.base.ok_or_else(|| {
            Error::Presentation(format!("{name}: `{}` is not the differential of a generator", g.sym))
        })?;
        let img = differentiate(&all[&base], &target)?;
        all.insert(g.sym, img);
    }
    Morphism::new(name, source, target, all)
}

/// Quotient by the differential ideal generated by `ideal`: the generators
/// and their differentials are oriented, and critical pairs and further
/// differentials are resolved for a bounded number of rounds.
pub fn close_differential_ideal(pres: &Presentation, ideal: &[NCPoly]) -> Result<Presentation> {
    let mut p = pres.clone();
    p.add_relations(ideal)?;
    for _ in 0..CLOSURE_ROUNDS {
        let mut new = Vec::new();
        for rule in p.rules() {
            let dr = differentiate(&rule.relation(), &p)?;
            if !dr.is_zero() {
                new.push(dr);
            }
        }
        let rep = check_local_confluence(&p, default_overlap_bound(&p))?;
        new.extend(rep.unresolved.iter().map(|cp| &cp.left - &cp.right));
        if new.is_empty() {
            return Ok(p);
        }
        p.add_relations(&new)?;
    }
    Err(Error::NotConfluent(format!(
        "{}: differential closure did not stabilise after {CLOSURE_ROUNDS} rounds",
        p.name()
    )))
}

#[derive(Clone, Debug, Default)]
pub struct DSquaredReport {
    pub checked: usize,
    pub failures: Vec<(NCPoly, NCPoly)>,
}

impl DSquaredReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `d(d(e)) = 0` on every generator and every sample.
pub fn check_d_squared(pres: &Presentation, samples: &[NCPoly]) -> Result<DSquaredReport> {
    let mut rep = DSquaredReport::default();
    let gens = pres.generators().iter().map(|g| NCPoly::gen(g.sym));
    for e in gens.chain(samples.iter().cloned()) {
        rep.checked += 1;
        let dd = differentiate(&differentiate(&e, pres)?, pres)?;
        if !dd.is_zero() {
            rep.failures.push((e, dd));
        }
    }
    Ok(rep)
}

/// Residue of the graded Leibniz rule on a homogeneous pair.
pub fn leibniz_residue(a: &NCPoly, b: &NCPoly, pres: &Presentation) -> Result<NCPoly> {
    let degs = pres.degrees(a);
    let sign = match degs.as_slice() {
        [] => 1,
        [k] => {
            if k % 2 == 0 {
                1
            } else {
                -1
            }
        }
        _ => return Err(Error::Validation("left factor is not homogeneous".into())),
    };
    let lhs = differentiate(&a.mul_raw(b), pres)?;
    let mut rhs = pres.normal_form(&differentiate(a, pres)?.mul_raw(b))?;
    let right = pres.normal_form(&a.mul_raw(&differentiate(b, pres)?))?;
    rhs.add_scaled(&right, &Scalar::from_int(sign));
    Ok(&lhs - &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{parse_element, Builder};
    use crate::scalars::Param;

    fn omega_disc() -> Presentation {
        Builder::new("omega_disc")
            .calculus(&["x", "xs"])
            .relation("xs*x - p*x*xs - (1-p)")
            .build_unchecked()
            .unwrap()
    }

    pub(crate) fn disc_calculus() -> Presentation {
        let om = omega_disc();
        let gens: Vec<NCPoly> = [
            "x*d(x) - p^-1*d(x)*x",
            "xs*d(xs) - p*d(xs)*xs",
            "x*d(xs) - p^-1*d(xs)*x",
            "xs*d(x) - p*d(x)*xs",
        ]
        .iter()
        .map(|s| parse_element(s, &om).unwrap())
        .collect();
        close_differential_ideal(&om, &gens).unwrap()
    }

    #[test]
    fn disc_closure_derives_square_rules() {
        let c = disc_calculus();
        let dx = c.g("dx");
        let dxs = c.g("dxs");
        assert!(c.nf(&dx.mul_raw(&dx)).is_zero());
        assert!(c.nf(&dxs.mul_raw(&dxs)).is_zero());
        let p = Scalar::param(Param::P);
        assert_eq!(c.nf(&dxs.mul_raw(&dx)), dx.mul_raw(&dxs).scale(&-p));
    }

    #[test]
    fn leibniz_example() {
        let c = disc_calculus();
        let e = parse_element("x*xs", &c).unwrap();
        let want = parse_element("dx*xs + p^-1*dxs*x", &c).unwrap();
        assert_eq!(d(&e, &c), c.nf(&want));
        assert!(d(&NCPoly::one(), &c).is_zero());
    }

    #[test]
    fn first_curvature_term() {
        let c = disc_calculus();
        let a = parse_element("1/4*(x*dxs - xs*dx)", &c).unwrap();
        let want = parse_element("(1+p)/4*dx*dxs", &c).unwrap();
        assert_eq!(d(&a, &c), want);
    }

    #[test]
    fn d_squared_vanishes() {
        let c = disc_calculus();
        let s = parse_element("x*xs", &c).unwrap();
        let rep = check_d_squared(&c, &[s, NCPoly::one()]).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn empty_ideal_changes_nothing() {
        let c = disc_calculus();
        let again = close_differential_ideal(&c, &[]).unwrap();
        assert_eq!(again.rules(), c.rules());
    }
}
