//! Rational series in `T` over a coefficient ring `B`.
//!
//! A [`RationalSeries`] is kept in canonical form: a Laurent polynomial plus a
//! finite sum of arithmetic terms `Σ_{n≥0} f(n) L^{na} T^{nd+r}` with the
//! offset `r` normalized into `[1, d]`. In this form the expansion at `T = 0`,
//! the expansion at `T = ∞`, their difference `τ`, the Hadamard product and
//! the constant term `λ` at infinity are all computed term by term.

mod coeff;
mod npoly;
mod rational;

use std::collections::BTreeMap;

use num_integer::Integer;

pub use coeff::Coefficient;
pub use npoly::{binomial_poly, IndexPoly};
pub use rational::{rs_normalize, RationalFunction};

use crate::motive::MotiveFrac;

/// `Σ_{n≥0} f(n) L^{n·lexp} T^{n·step + offset}` with a `B`-valued polynomial `f`.
#[derive(Clone, Debug, PartialEq)]
pub struct ArithmeticTerm<B> {
    pub offset: i64,
    pub step: u64,
    pub lexp: i64,
    pub poly: IndexPoly<B>,
}

impl<B: Coefficient> ArithmeticTerm<B> {
    /// `c · Σ_{n≥0} f(n) L^{na} T^{nd+r}` with a rational polynomial `f`.
    pub fn new(offset: i64, step: u64, lexp: i64, c: &B, f: &[crate::motive::Q]) -> Self {
        assert!(step >= 1, "arithmetic term step must be positive");
        ArithmeticTerm { offset, step, lexp, poly: IndexPoly::from_rational(c, f) }
    }

    /// Contribution `f(n) L^{na}` of index `n` (any integer).
    pub fn value_at(&self, n: i64) -> B {
        self.poly.eval(n).shift_lefschetz(n * self.lexp)
    }

    /// Index `n` with `n·step + offset = i`, if any.
    pub fn index_of(&self, i: i64) -> Option<i64> {
        let diff = i - self.offset;
        (diff.rem_euclid(self.step as i64) == 0).then(|| diff.div_euclid(self.step as i64))
    }
}

type TermKey = (u64, i64, i64);

/// An element of `B[T, T⁻¹]_rat` in canonical arithmetic-term form.
///
/// Equality is semantic: both sides are refined to a common step first.
#[derive(Clone, Debug)]
pub struct RationalSeries<B> {
    poly: BTreeMap<i64, B>,
    terms: BTreeMap<TermKey, IndexPoly<B>>,
}

impl<B: Coefficient> Default for RationalSeries<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Coefficient> RationalSeries<B> {
    pub fn zero() -> Self {
        RationalSeries { poly: BTreeMap::new(), terms: BTreeMap::new() }
    }

    pub fn monomial(exp: i64, c: B) -> Self {
        let mut out = Self::zero();
        out.add_poly_coefficient(exp, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = ArithmeticTerm<B>>>(terms: I) -> Self {
        let mut out = Self::zero();
        for t in terms {
            out.add_term(t);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty() && self.terms.is_empty()
    }

    /// Laurent-polynomial part.
    pub fn poly(&self) -> &BTreeMap<i64, B> {
        &self.poly
    }

    pub fn terms(&self) -> impl Iterator<Item = ArithmeticTerm<B>> + '_ {
        self.terms.iter().map(|(&(step, offset, lexp), poly)| ArithmeticTerm {
            offset,
            step,
            lexp,
            poly: poly.clone(),
        })
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add_poly_coefficient(&mut self, exp: i64, c: B) {
        if c.is_zero() {
            return;
        }
        let next = match self.poly.remove(&exp) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if !next.is_zero() {
            self.poly.insert(exp, next);
        }
    }

    /// Adds a term, moving its offset into `[1, step]`; the finitely many
    /// indices that cross over are booked in the polynomial part.
    pub fn add_term(&mut self, term: ArithmeticTerm<B>) {
        if term.poly.is_zero() {
            return;
        }
        let d = term.step as i64;
        let shift = (term.offset - 1).div_euclid(d);
        let (offset, poly) = if shift == 0 {
            (term.offset, term.poly)
        } else {
            let r0 = term.offset - shift * d;
            // Σ_{n≥0} f(n) x^n T^{nd+r} = L^{-shift·a} Σ_{n'≥shift} f(n'-shift) x^{n'} T^{n'd+r0}
            if shift > 0 {
                for n in 0..shift {
                    let value = term.poly.eval(n - shift).shift_lefschetz((n - shift) * term.lexp);
                    self.add_poly_coefficient(n * d + r0, value.negate());
                }
            } else {
                for n in shift..0 {
                    let value = term.poly.eval(n - shift).shift_lefschetz((n - shift) * term.lexp);
                    self.add_poly_coefficient(n * d + r0, value);
                }
            }
            let moved = term.poly.compose_affine(-shift, 1).map(|c| c.shift_lefschetz(-shift * term.lexp));
            (r0, moved)
        };
        let key = (term.step, offset, term.lexp);
        let next = match self.terms.remove(&key) {
            Some(old) => old.plus(&poly),
            None => poly,
        };
        if !next.is_zero() {
            self.terms.insert(key, next);
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.poly {
            out.add_poly_coefficient(e, c.clone());
        }
        for t in other.terms() {
            out.add_term(t);
        }
        out
    }

    pub fn negate(&self) -> Self {
        RationalSeries {
            poly: self.poly.iter().map(|(e, c)| (*e, c.negate())).collect(),
            terms: self.terms.iter().map(|(k, p)| (*k, p.negate())).collect(),
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    /// Applies a `B`-linear map to every coefficient.
    pub fn map<C: Coefficient>(&self, f: impl Fn(&B) -> C) -> RationalSeries<C> {
        let mut out = RationalSeries::zero();
        for (&e, c) in &self.poly {
            out.add_poly_coefficient(e, f(c));
        }
        for (&(step, offset, lexp), p) in &self.terms {
            let poly = IndexPoly::new(p.coeffs().iter().map(&f).collect());
            out.add_term(ArithmeticTerm { offset, step, lexp, poly });
        }
        out
    }

    pub fn scale(&self, c: &B) -> Self {
        self.map(|x| x.times(c))
    }

    /// Coefficient of `T^i` in the expansion at `T = 0`.
    pub fn exp_t_coefficient(&self, i: i64) -> B {
        let mut acc = self.poly.get(&i).cloned().unwrap_or_else(B::zero);
        for t in self.terms() {
            if let Some(n) = t.index_of(i) {
                if n >= 0 {
                    acc = acc.plus(&t.value_at(n));
                }
            }
        }
        acc
    }

    /// Coefficient of `T^i` in the expansion at `T = ∞`.
    pub fn exp_t_inv_coefficient(&self, i: i64) -> B {
        let mut acc = self.poly.get(&i).cloned().unwrap_or_else(B::zero);
        for t in self.terms() {
            if let Some(n) = t.index_of(i) {
                if n < 0 {
                    acc = acc.minus(&t.value_at(n));
                }
            }
        }
        acc
    }

    /// Coefficient of `T^i` in `τ = exp_T - exp_{T⁻¹}`.
    pub fn tau_coefficient(&self, i: i64) -> B {
        let mut acc = B::zero();
        for t in self.terms() {
            if let Some(n) = t.index_of(i) {
                acc = acc.plus(&t.value_at(n));
            }
        }
        acc
    }

    /// Coefficients of `T^i`, `i_min ≤ i ≤ i_max`, of the expansion at `T = 0`.
    pub fn exp_t(&self, i_min: i64, i_max: i64) -> Vec<B> {
        (i_min..=i_max).map(|i| self.exp_t_coefficient(i)).collect()
    }

    pub fn exp_t_inv(&self, i_min: i64, i_max: i64) -> Vec<B> {
        (i_min..=i_max).map(|i| self.exp_t_inv_coefficient(i)).collect()
    }

    pub fn tau(&self, i_min: i64, i_max: i64) -> Vec<B> {
        (i_min..=i_max).map(|i| self.tau_coefficient(i)).collect()
    }

    /// Constant term of the expansion at `T = ∞`.
    pub fn lambda(&self) -> B {
        self.exp_t_inv_coefficient(0)
    }

    /// Coefficientwise product of the expansions at `T = 0`.
    pub fn hadamard(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.poly {
            out.add_poly_coefficient(e, c.times(&other.exp_t_coefficient(e)));
        }
        for (&e, c) in &other.poly {
            let mine = self.exp_t_coefficient(e);
            let from_terms = match self.poly.get(&e) {
                Some(p) => mine.minus(p),
                None => mine,
            };
            out.add_poly_coefficient(e, from_terms.times(c));
        }
        for t1 in self.terms() {
            for t2 in other.terms() {
                if let Some(t) = hadamard_terms(&t1, &t2) {
                    out.add_term(t);
                }
            }
        }
        out
    }

    /// Converts back to a numerator over powers of `(1 - L^a T^d)`.
    pub fn to_rational_function(&self) -> RationalFunction<B> {
        let mut out = RationalFunction::polynomial(self.poly.clone());
        for t in self.terms() {
            for (k, b) in t.poly.binomial_coordinates().into_iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut num = BTreeMap::new();
                num.insert(t.offset, b);
                let piece =
                    RationalFunction::new(num, vec![(t.lexp, t.step as i64); k + 1]).expect("positive step");
                out = out.plus(&piece);
            }
        }
        out
    }

    /// The same series with every term split to step `step`, which must be a
    /// multiple of every current step.
    pub fn refined(&self, step: u64) -> Self {
        let mut out = RationalSeries { poly: self.poly.clone(), terms: BTreeMap::new() };
        for t in self.terms() {
            assert!(step % t.step == 0, "refinement step must be a common multiple");
            let s = (step / t.step) as i64;
            for k in 0..s {
                // n = s·n' + k
                let poly = t.poly.compose_affine(k, s).map(|c| c.shift_lefschetz(k * t.lexp));
                out.add_term(ArithmeticTerm {
                    offset: t.offset + k * t.step as i64,
                    step,
                    lexp: s * t.lexp,
                    poly,
                });
            }
        }
        out
    }

    fn common_step(&self) -> u64 {
        self.terms.keys().fold(1u64, |acc, k| acc.lcm(&k.0))
    }

    /// Cauchy product, computed through the rational-function form.
    pub fn times(&self, other: &Self) -> Self {
        self.to_rational_function().times(&other.to_rational_function()).normalize()
    }

    /// True when both expansions agree on `i_min..=i_max`.
    pub fn agrees_on(&self, other: &Self, i_min: i64, i_max: i64) -> bool {
        (i_min..=i_max).all(|i| self.exp_t_coefficient(i) == other.exp_t_coefficient(i))
    }
}

impl<B: Coefficient> PartialEq for RationalSeries<B> {
    fn eq(&self, other: &Self) -> bool {
        if self.poly == other.poly && self.terms == other.terms {
            return true;
        }
        let step = self.common_step().lcm(&other.common_step());
        let (a, b) = (self.refined(step), other.refined(step));
        a.poly == b.poly && a.terms == b.terms
    }
}

impl RationalSeries<MotiveFrac> {
    /// Embeds a series over the motive ring into the Gauss-sum ring.
    pub fn to_u(&self) -> RationalSeries<crate::gauss::UElement> {
        self.map(|c| crate::gauss::UElement::from_scalar(c.clone()))
    }
}

/// Solves `e ≡ r1 (mod d1)`, `e ≡ r2 (mod d2)`; returns the least solution
/// `e ≥ floor` together with the modulus `lcm(d1, d2)`.
pub fn progression_intersection(r1: i64, d1: u64, r2: i64, d2: u64, floor: i64) -> Option<(i64, u64)> {
    let (d1i, d2i) = (d1 as i64, d2 as i64);
    let eg = d1i.extended_gcd(&d2i);
    let g = eg.gcd;
    if (r2 - r1).rem_euclid(g) != 0 {
        return None;
    }
    let lcm = d1i / g * d2i;
    // e = r1 + d1·t with d1·t ≡ r2 - r1 (mod d2)
    let m = d2i / g;
    let t = ((((r2 - r1) / g) as i128 * eg.x as i128).rem_euclid(m as i128)) as i64;
    let e = r1 + d1i * t;
    let shift = (floor - e).div_euclid(lcm) + i64::from((floor - e).rem_euclid(lcm) != 0);
    Some((e + shift * lcm, lcm as u64))
}

fn hadamard_terms<B: Coefficient>(t1: &ArithmeticTerm<B>, t2: &ArithmeticTerm<B>) -> Option<ArithmeticTerm<B>> {
    let floor = t1.offset.max(t2.offset);
    let (e0, lcm) = progression_intersection(t1.offset, t1.step, t2.offset, t2.step, floor)?;
    let s1 = (lcm / t1.step) as i64;
    let s2 = (lcm / t2.step) as i64;
    let n0 = (e0 - t1.offset) / t1.step as i64;
    let m0 = (e0 - t2.offset) / t2.step as i64;
    let p1 = t1.poly.compose_affine(n0, s1);
    let p2 = t2.poly.compose_affine(m0, s2);
    let shift = n0 * t1.lexp + m0 * t2.lexp;
    let poly = p1.times(&p2).map(|c| c.shift_lefschetz(shift));
    Some(ArithmeticTerm { offset: e0, step: lcm, lexp: s1 * t1.lexp + s2 * t2.lexp, poly })
}
