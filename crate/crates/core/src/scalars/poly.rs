//! Sparse multivariate polynomials over the integers in the session parameters.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::param::Param;

/// Exponent vector indexed by parameter index, with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Mono(Vec<u32>);

impl Mono {
    pub fn one() -> Mono {
        Mono(Vec::new())
    }

    pub fn var(p: Param) -> Mono {
        let mut e = vec![0; p.index() + 1];
        e[p.index()] = 1;
        Mono(e)
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn trim(mut v: Vec<u32>) -> Mono {
        while v.last() == Some(&0) {
            v.pop();
        }
        Mono(v)
    }

    fn mul(&self, other: &Mono) -> Mono {
        let n = self.0.len().max(other.0.len());
        Mono::trim((0..n).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    fn div(&self, other: &Mono) -> Option<Mono> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut v = self.0.clone();
        for (i, &e) in other.0.iter().enumerate() {
            if v[i] < e {
                return None;
            }
            v[i] -= e;
        }
        Some(Mono::trim(v))
    }

    fn gcd_mono(&self, other: &Mono) -> Mono {
        let n = self.0.len().min(other.0.len());
        Mono::trim((0..n).map(|i| self.exp(i).min(other.exp(i))).collect())
    }

    fn with_exp(&self, i: usize, e: u32) -> Mono {
        let mut v = self.0.clone();
        if v.len() <= i {
            v.resize(i + 1, 0);
        }
        v[i] = e;
        Mono::trim(v)
    }

    pub(crate) fn vars(&self) -> impl Iterator<Item = (Param, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Param::from_index(i), e))
    }
}

/// Lexicographic order with the highest-indexed parameter most significant.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        for i in (0..n).rev() {
            match self.exp(i).cmp(&other.exp(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, e) in self.vars() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, BigInt>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms }
    }

    pub fn var(p: Param) -> Poly {
        Poly::term(Mono::var(p), BigInt::one())
    }

    pub fn term(m: Mono, c: BigInt) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<&BigInt> {
        match self.terms.len() {
            0 => None,
            1 => self.terms.get(&Mono::one()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.as_constant().is_some()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    /// Leading term under the lexicographic parameter order.
    pub fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff_sign(&self) -> Ordering {
        match self.leading() {
            None => Ordering::Equal,
            Some((_, c)) => c.sign().cmp(&num_bigint::Sign::NoSign),
        }
    }

    fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(c);
        }
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Mono, c: &BigInt) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m2, k)| (m2.mul(m), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if let Some(c) = divisor.as_constant() {
            let mut terms = BTreeMap::new();
            for (m, k) in &self.terms {
                let (q, r) = k.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                terms.insert(m.clone(), q);
            }
            return Some(Poly { terms });
        }
        let (lm_d, lc_d) = divisor.leading().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((lm_r, lc_r)) = rem.leading() {
            let m = lm_r.div(lm_d)?;
            let (c, r) = lc_r.div_rem(lc_d);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&divisor.mul_term(&m, &c));
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Positive gcd of the integer coefficients.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn max_var(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.0.len()).max().and_then(|n| n.checked_sub(1))
    }

    fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Coefficients as a univariate polynomial in `v`, lowest degree first.
    fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            out[e].add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    fn from_coeffs_in(v: usize, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, k) in &c.terms {
                out.add_term(m.with_exp(v, e as u32), k.clone());
            }
        }
        out
    }

    fn with_positive_leading(self) -> Poly {
        if self.leading_coeff_sign() == Ordering::Less {
            self.neg()
        } else {
            self
        }
    }

    /// Greatest common divisor with positive leading coefficient.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.clone().with_positive_leading();
        }
        if b.is_zero() {
            return a.clone().with_positive_leading();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::constant(a.integer_content().gcd(&b.integer_content()));
        }
        if a.len() == 1 || b.len() == 1 {
            let mut mono: Option<Mono> = None;
            for m in a.terms.keys().chain(b.terms.keys()) {
                mono = Some(match mono {
                    None => m.clone(),
                    Some(acc) => acc.gcd_mono(m),
                });
            }
            let c = a.integer_content().gcd(&b.integer_content());
            return Poly::term(mono.unwrap_or_default(), c);
        }
        if a == b {
            return a.clone().with_positive_leading();
        }
        let c = a.integer_content().gcd(&b.integer_content());
        let pa = a.div_int(&c);
        let pb = b.div_int(&c);
        let g = heuristic_gcd(&pa, &pb).unwrap_or_else(|| Poly::gcd_prs(&pa, &pb));
        g.scale(&c).with_positive_leading()
    }

    /// Primitive polynomial remainder sequence, recursive in the variables.
    fn gcd_prs(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant() || a.len() == 1 || b.len() == 1 {
            return Poly::gcd(a, b);
        }
        let v = a.max_var().max(b.max_var()).expect("nonconstant");
        let in_a = a.degree_in(v) > 0;
        let in_b = b.degree_in(v) > 0;
        if !in_a {
            return Poly::gcd_prs(a, &b.content_in(v));
        }
        if !in_b {
            return Poly::gcd_prs(&a.content_in(v), b);
        }
        let ca = a.content_in(v);
        let cb = b.content_in(v);
        let cont = Poly::gcd_prs(&ca, &cb);
        let pa = a.div_exact(&ca).expect("content divides");
        let pb = b.div_exact(&cb).expect("content divides");
        let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) {
            (pa, pb)
        } else {
            (pb, pa)
        };
        loop {
            let r = f.prem(&g, v);
            if r.is_zero() {
                break;
            }
            if r.degree_in(v) == 0 {
                g = Poly::one();
                break;
            }
            f = g;
            g = r.primitive_in(v);
        }
        let g = g.primitive_in(v);
        cont.mul(&g).with_positive_leading()
    }

    fn div_int(&self, c: &BigInt) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k / c)).collect(),
        }
    }

    fn max_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    fn eval_var(&self, v: usize, x: &BigInt) -> Poly {
        let mut out = Poly::zero();
        let mut powers: Vec<BigInt> = vec![BigInt::one()];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().expect("nonempty") * x;
                powers.push(next);
            }
            out.add_term(m.with_exp(v, 0), c * &powers[e]);
        }
        out
    }

    fn content_in(&self, v: usize) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = Poly::gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_in(&self, v: usize) -> Poly {
        let c = self.content_in(v);
        if c.is_zero() {
            return self.clone();
        }
        self.div_exact(&c).expect("content divides").with_positive_leading()
    }

    /// Pseudo-remainder of `self` by `g` as univariate polynomials in `v`.
    fn prem(&self, g: &Poly, v: usize) -> Poly {
        let gc = g.coeffs_in(v);
        let dg = gc.len() - 1;
        let lc = gc[dg].clone();
        let mut r = self.coeffs_in(v);
        while r.len() > dg && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            if lr.is_zero() {
                r.pop();
                continue;
            }
            for c in r.iter_mut() {
                *c = c.mul(&lc);
            }
            let shift = dr - dg;
            for (i, gi) in gc.iter().enumerate() {
                r[i + shift] = r[i + shift].sub(&gi.mul(&lr));
            }
            debug_assert!(r[dr].is_zero());
            r.pop();
            while r.last().is_some_and(Poly::is_zero) {
                r.pop();
            }
        }
        Poly::from_coeffs_in(v, &r)
    }

    pub fn eval(&self, value: &dyn Fn(Param) -> Option<BigRational>) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (p, e) in m.vars() {
                let x = value(p)?;
                t *= num_traits::pow(x, e as usize);
            }
            acc += t;
        }
        Some(acc)
    }

    pub fn params(&self) -> Vec<Param> {
        let mut out: Vec<Param> = self.terms.keys().flat_map(|m| m.vars().map(|(p, _)| p)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Terms in display order: ascending total degree, then by monomial.
    pub(crate) fn display_terms(&self) -> Vec<(&Mono, &BigInt)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| {
            a.0.total_degree()
                .cmp(&b.0.total_degree())
                .then_with(|| b.0.cmp(a.0))
        });
        t
    }
}

/// Heuristic gcd by evaluation at a large integer and balanced-digit
/// interpolation. Returns `None` when no evaluation point verifies.
fn heuristic_gcd(a: &Poly, b: &Poly) -> Option<Poly> {
    if a.is_zero() || b.is_zero() {
        return Some(Poly::gcd(a, b));
    }
    if a.is_constant() && b.is_constant() {
        return Some(Poly::constant(a.integer_content().gcd(&b.integer_content())));
    }
    let c = a.integer_content().gcd(&b.integer_content());
    let a = a.div_int(&c);
    let b = b.div_int(&c);
    let v = a.max_var().max(b.max_var()).expect("nonconstant");
    let (na, nb) = (a.max_norm(), b.max_norm());
    let bound: BigInt = BigInt::from(2) * (&na).min(&nb) + 29;
    let lca = a.leading().map(|(_, c)| c.abs()).unwrap_or_else(BigInt::one);
    let lcb = b.leading().map(|(_, c)| c.abs()).unwrap_or_else(BigInt::one);
    let mut xi = (&bound)
        .min(&(BigInt::from(99) * bound.sqrt()))
        .clone()
        .max(BigInt::from(2) * (&na / &lca).min(&nb / &lcb) + 2);
    for _ in 0..6 {
        let fa = a.eval_var(v, &xi);
        let fb = b.eval_var(v, &xi);
        if !fa.is_zero() && !fb.is_zero() {
            if let Some(h) = heuristic_gcd(&fa, &fb) {
                let g = interpolate(h, &xi, v);
                let g = g.div_int(&g.integer_content()).with_positive_leading();
                if !g.is_zero() && a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                    return Some(g.scale(&c));
                }
            }
        }
        xi = BigInt::from(73794) * &xi * xi.sqrt().sqrt() / BigInt::from(27011);
    }
    None
}

/// Reads the coefficients of `h` as balanced base-`xi` digits, giving the
/// coefficients of powers of variable `v`.
fn interpolate(mut h: Poly, xi: &BigInt, v: usize) -> Poly {
    let half = xi / 2;
    let mut out = Poly::zero();
    let mut e = 0u32;
    while !h.is_zero() {
        let mut digit = Poly::zero();
        for (m, c) in &h.terms {
            let mut r = c.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            digit.add_term(m.clone(), r);
        }
        h = h.sub(&digit);
        h = h.div_int(xi);
        for (m, c) in &digit.terms {
            out.add_term(m.with_exp(v, e), c.clone());
        }
        e += 1;
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
