//! Hopf algebra files: a presentation file with the structure maps in the
//! extra sections `[coproduct]`, `[counit]`, `[antipode]` and, optionally,
//! `[inverse_antipode]`.
//!
//! Coproduct values are elements of the tensor square, whose generators
//! are named `g.1` and `g.2`:
//!
//! ```text
//! [coproduct]
//! alpha = alpha.1*alpha.2
//! [counit]
//! alpha = 1
//! [antipode]
//! alpha = alphas
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use super::HopfData;
use crate::dga::SkewTensor;
use crate::error::{Error, Result};
use crate::freealg::file::{at_line, key_value};
use crate::freealg::{load_presentation, parse_element, specialize, NCPoly, Sym};
use crate::scalars::{Assignment, Scalar};

const HOPF_SECTIONS: [&str; 4] = ["coproduct", "counit", "antipode", "inverse_antipode"];

type Lines = BTreeMap<&'static str, Vec<(usize, String)>>;

/// Moves the structure-map sections out of `text`, blanking their lines so
/// that line numbers in the remaining presentation stay valid.
fn split(text: &str) -> (String, Lines) {
    let mut pres = String::new();
    let mut maps = Lines::new();
    let mut current: Option<&'static str> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if let Some(name) = line.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            current = HOPF_SECTIONS.iter().copied().find(|s| *s == name.trim());
            if let Some(c) = current {
                maps.entry(c).or_default();
                pres.push('\n');
                continue;
            }
        }
        match current {
            Some(c) => {
                if !line.is_empty() {
                    maps.entry(c).or_default().push((i + 1, line.to_string()));
                }
                pres.push('\n');
            }
            None => {
                pres.push_str(raw);
                pres.push('\n');
            }
        }
    }
    (pres, maps)
}

/// Loads a Hopf algebra; the presentation must be confluent and the Hopf
/// axioms must hold on generators.
pub fn load_hopf(name: &str, text: &str, overrides: &Assignment) -> Result<HopfData> {
    let (pres_text, maps) = split(text);
    let file = load_presentation(name, &pres_text, overrides)?;
    let values = file.values;
    let pres = Arc::new(file.presentation);
    let square = SkewTensor::new(&format!("{0}⊗{0}", pres.name()), &[pres.clone(), pres.clone()])?;
    let section = |s: &str| maps.get(s).cloned().unwrap_or_default();

    let read = |s: &str, target: &crate::freealg::Presentation| -> Result<BTreeMap<Sym, NCPoly>> {
        let mut out = BTreeMap::new();
        for (line, l) in section(s) {
            let (k, v) = key_value(line, &l)?;
            let g = at_line(line, pres.sym(&k))?;
            let e = at_line(line, parse_element(&v, target).and_then(|e| specialize(&e, &values)))?;
            if out.insert(g, e).is_some() {
                return Err(Error::Format { line, msg: format!("`{k}` defined twice in [{s}]") });
            }
        }
        Ok(out)
    };
    let delta = read("coproduct", square.presentation())?;
    let antipode = read("antipode", &pres)?;
    let inv = if maps.contains_key("inverse_antipode") {
        Some(read("inverse_antipode", &pres)?)
    } else {
        None
    };
    let mut counit = BTreeMap::new();
    for (line, l) in section("counit") {
        let (k, v) = key_value(line, &l)?;
        let g = at_line(line, pres.sym(&k))?;
        let c = at_line(line, Scalar::parse(&v).and_then(|c| c.substitute(&values)))?;
        counit.insert(g, c);
    }
    HopfData::new(pres, delta, counit, antipode, inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    const U1: &str = "\
[generators]
alpha 0
alphas 0
[relations]
alpha*alphas - 1
alphas*alpha - 1
[coproduct]   # group-like
alpha = alpha.1*alpha.2
alphas = alphas.1*alphas.2
[counit]
alpha = 1
alphas = 1
[antipode]
alpha = alphas
alphas = alpha
";

    #[test]
    fn loads_u1_and_checks_axioms() {
        let h = load_hopf("U1", U1, &Assignment::new()).unwrap();
        let a = h.presentation().g("alpha");
        let samples = [h.presentation().pow(&a, 3)];
        for r in h.check_axioms(&samples).unwrap() {
            assert_ne!(r.status, Status::Fail, "{r:?}");
        }
        assert!(!h.has_inverse_antipode());
    }

    #[test]
    fn wrong_antipode_rejected() {
        let bad = U1.replace("alpha = alphas\nalphas = alpha", "alpha = alpha\nalphas = alphas");
        assert!(matches!(load_hopf("U1", &bad, &Assignment::new()), Err(Error::Validation(_))));
    }

    #[test]
    fn missing_map_and_bad_line() {
        let missing = U1.replace("alphas = 1\n", "");
        assert!(matches!(load_hopf("U1", &missing, &Assignment::new()), Err(Error::Presentation(_))));
        let bad = U1.replace("alpha = 1", "alpha 1");
        assert!(matches!(load_hopf("U1", &bad, &Assignment::new()), Err(Error::Format { line: 11, .. })));
    }
}
