use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;

use super::coeff::Coefficient;
use super::npoly::{binomial_poly, IndexPoly};
use super::{ArithmeticTerm, RationalSeries};
use crate::error::{Error, Result};
use crate::motive::MotiveFrac;

/// `num(T) / Π (1 - L^a T^b)` with a Laurent-polynomial numerator.
///
/// Factors are stored with `b ≥ 1`; a factor with `b < 0` is rewritten on
/// construction through `1 - L^a T^b = -L^a T^b (1 - L^{-a} T^{-b})`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<B> {
    num: BTreeMap<i64, B>,
    den: Vec<(i64, i64)>,
}

fn add_into<B: Coefficient>(map: &mut BTreeMap<i64, B>, e: i64, c: B) {
    if c.is_zero() {
        return;
    }
    let next = match map.remove(&e) {
        Some(old) => old.plus(&c),
        None => c,
    };
    if !next.is_zero() {
        map.insert(e, next);
    }
}

fn poly_mul<B: Coefficient>(a: &BTreeMap<i64, B>, b: &BTreeMap<i64, B>) -> BTreeMap<i64, B> {
    let mut out = BTreeMap::new();
    for (&ea, ca) in a {
        for (&eb, cb) in b {
            add_into(&mut out, ea + eb, ca.times(cb));
        }
    }
    out
}

/// `1 - L^a T^b` as a Laurent polynomial.
fn factor_poly<B: Coefficient>(a: i64, b: i64) -> BTreeMap<i64, B> {
    let mut out = BTreeMap::new();
    add_into(&mut out, 0, B::from_frac(MotiveFrac::one()));
    add_into(&mut out, b, B::from_frac(MotiveFrac::lefschetz_pow(a)).negate());
    out
}

impl<B: Coefficient> RationalFunction<B> {
    pub fn polynomial(num: BTreeMap<i64, B>) -> Self {
        let num = num.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        RationalFunction { num, den: Vec::new() }
    }

    pub fn new(num: BTreeMap<i64, B>, den: Vec<(i64, i64)>) -> Result<Self> {
        let mut out = Self::polynomial(num);
        for (a, b) in den {
            match b.signum() {
                0 => return Err(Error::DivisionByZero(format!("factor 1 - L^{a} T^0"))),
                1 => out.den.push((a, b)),
                _ => {
                    let unit: BTreeMap<i64, B> =
                        [(-b, B::from_frac(MotiveFrac::lefschetz_pow(-a)).negate())].into_iter().collect();
                    out.num = poly_mul(&out.num, &unit);
                    out.den.push((-a, -b));
                }
            }
        }
        out.den.sort_unstable();
        Ok(out)
    }

    pub fn numerator(&self) -> &BTreeMap<i64, B> {
        &self.num
    }

    pub fn denominator(&self) -> &[(i64, i64)] {
        &self.den
    }

    fn multiset(&self) -> BTreeMap<(i64, i64), usize> {
        let mut m = BTreeMap::new();
        for f in &self.den {
            *m.entry(*f).or_insert(0) += 1;
        }
        m
    }

    /// Numerator after bringing `self` to the denominator `target ⊇ self.den`.
    fn lifted(&self, target: &BTreeMap<(i64, i64), usize>) -> BTreeMap<i64, B> {
        let own = self.multiset();
        let mut num = self.num.clone();
        for (&(a, b), &k) in target {
            for _ in own.get(&(a, b)).copied().unwrap_or(0)..k {
                num = poly_mul(&num, &factor_poly(a, b));
            }
        }
        num
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut target = self.multiset();
        for (f, k) in other.multiset() {
            let e = target.entry(f).or_insert(0);
            *e = (*e).max(k);
        }
        let mut num = self.lifted(&target);
        for (e, c) in other.lifted(&target) {
            add_into(&mut num, e, c);
        }
        let den = target.into_iter().flat_map(|(f, k)| std::iter::repeat(f).take(k)).collect();
        RationalFunction { num, den }
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        den.extend_from_slice(&other.den);
        den.sort_unstable();
        RationalFunction { num: poly_mul(&self.num, &other.num), den }
    }

    /// `T^0` coefficient of the expansion at `T = ∞`, read off the fraction
    /// directly: `1/(1 - cT^b) = -Σ_{k≥1} c^{-k} T^{-bk}` there.
    pub fn lambda(&self) -> B {
        let depth = self.num.keys().next_back().copied().unwrap_or(0);
        if depth < 0 {
            return B::zero();
        }
        // inv[s] is the coefficient of T^{-s} in 1/den, as a Laurent polynomial in L
        let mut inv: Vec<BTreeMap<i64, i64>> = vec![BTreeMap::new(); depth as usize + 1];
        inv[0].insert(0, 1);
        for &(a, b) in &self.den {
            let mut next: Vec<BTreeMap<i64, i64>> = vec![BTreeMap::new(); inv.len()];
            for (s, poly) in inv.iter().enumerate() {
                for k in 1.. {
                    let t = s as i64 + b * k;
                    if t > depth {
                        break;
                    }
                    for (&e, &c) in poly {
                        *next[t as usize].entry(e - a * k).or_insert(0) -= c;
                    }
                }
            }
            inv = next;
        }
        let mut out = B::zero();
        for (&e, c) in self.num.range(0..) {
            for (&k, &m) in &inv[e as usize] {
                if m != 0 {
                    out = out.plus(&c.shift_lefschetz(k).scale_q(&crate::motive::q(m)));
                }
            }
        }
        out
    }

    /// Expansion at `T = 0` up to `T^{i_max}` by plain long division.
    pub fn naive_expansion(&self, i_max: i64) -> BTreeMap<i64, B> {
        let mut acc = self.num.clone();
        for &(a, b) in &self.den {
            let mut geo = BTreeMap::new();
            let low = acc.keys().next().copied().unwrap_or(0);
            let mut j = 0;
            while low + j * b <= i_max {
                add_into(&mut geo, j * b, B::from_frac(MotiveFrac::lefschetz_pow(a * j)));
                j += 1;
            }
            acc = poly_mul(&acc, &geo).into_iter().filter(|(e, _)| *e <= i_max).collect();
        }
        acc
    }

    /// Canonical arithmetic-term form.
    pub fn normalize(&self) -> RationalSeries<B> {
        let mut out = RationalSeries::zero();
        if self.num.is_empty() {
            return out;
        }
        if self.den.is_empty() {
            for (&e, c) in &self.num {
                out.add_poly_coefficient(e, c.clone());
            }
            return out;
        }
        let step = self.den.iter().fold(1i64, |acc, &(_, b)| acc.lcm(&b));
        // bring every factor to 1 - L^{a·step/b} T^step
        let mut num = self.num.clone();
        let mut mult: BTreeMap<i64, u32> = BTreeMap::new();
        for &(a, b) in &self.den {
            let k = step / b;
            if k > 1 {
                let mut lifted = BTreeMap::new();
                for (&e, c) in &num {
                    for j in 0..k {
                        add_into(&mut lifted, e + b * j, c.shift_lefschetz(a * j));
                    }
                }
                num = lifted;
            }
            *mult.entry(a * k).or_insert(0) += 1;
        }
        let exps: Vec<i64> = mult.keys().copied().collect();
        let ks: Vec<u32> = mult.values().copied().collect();
        let mut memo = HashMap::new();
        let fractions = partial_fractions(&exps, &ks, &mut memo);
        for (&e, c) in &num {
            for (&(idx, j), coeff) in fractions.iter() {
                if coeff.is_zero() {
                    continue;
                }
                let b = c.scale(coeff);
                out.add_term(ArithmeticTerm {
                    offset: e,
                    step: step as u64,
                    lexp: exps[idx],
                    poly: IndexPoly::from_rational(&b, &binomial_poly(j)),
                });
            }
        }
        out
    }
}

type Fractions = BTreeMap<(usize, u32), MotiveFrac>;

/// `1 / Π_i (1 - L^{exps[i]} X)^{ks[i]} = Σ_{i,j} C_{i,j} / (1 - L^{exps[i]} X)^j`,
/// using `1/((1-αX)(1-βX)) = (α-β)⁻¹ (α/(1-αX) - β/(1-βX))`.
fn partial_fractions(exps: &[i64], ks: &[u32], memo: &mut HashMap<Vec<u32>, Fractions>) -> Fractions {
    if let Some(hit) = memo.get(ks) {
        return hit.clone();
    }
    let live: Vec<usize> = (0..ks.len()).filter(|&i| ks[i] > 0).collect();
    let out = match live.as_slice() {
        [] => unreachable!("empty denominator"),
        [only] => [((*only, ks[*only]), MotiveFrac::one())].into_iter().collect(),
        [i, j, ..] => {
            let (i, j) = (*i, *j);
            let inv = MotiveFrac::inv_lefschetz_difference(exps[i], exps[j]).expect("distinct exponents");
            let alpha = MotiveFrac::lefschetz_pow(exps[i]);
            let beta = MotiveFrac::lefschetz_pow(exps[j]);
            let mut drop_j = ks.to_vec();
            drop_j[j] -= 1;
            let mut drop_i = ks.to_vec();
            drop_i[i] -= 1;
            let mut acc = Fractions::new();
            let left = &inv * &alpha;
            for (key, c) in partial_fractions(exps, &drop_j, memo) {
                let v = &c * &left;
                let e = acc.entry(key).or_insert_with(MotiveFrac::zero);
                *e = &*e + &v;
            }
            let right = &inv * &beta;
            for (key, c) in partial_fractions(exps, &drop_i, memo) {
                let v = &c * &right;
                let e = acc.entry(key).or_insert_with(MotiveFrac::zero);
                *e = &*e - &v;
            }
            acc.retain(|_, c| !c.is_zero());
            acc
        }
    };
    memo.insert(ks.to_vec(), out.clone());
    out
}

/// `num / Π (1 - L^a T^b)` in canonical form.
pub fn rs_normalize<B: Coefficient>(num: BTreeMap<i64, B>, den: &[(i64, i64)]) -> Result<RationalSeries<B>> {
    Ok(RationalFunction::new(num, den.to_vec())?.normalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive::q;

    fn one() -> MotiveFrac {
        MotiveFrac::one()
    }

    fn mono(e: i64, c: MotiveFrac) -> BTreeMap<i64, MotiveFrac> {
        [(e, c)].into_iter().collect()
    }

    #[test]
    fn geometric_example() {
        let s = rs_normalize(mono(1, MotiveFrac::lefschetz_pow(3)), &[(3, 1)]).unwrap();
        let expected: Vec<MotiveFrac> = (1..6).map(|n| MotiveFrac::lefschetz_pow(3 * n)).collect();
        assert_eq!(s.exp_t(1, 5), expected);
        assert!(s.exp_t_coefficient(0).is_zero());
    }

    #[test]
    fn two_distinct_factors() {
        let (a, b) = (2, -1);
        let s = rs_normalize(mono(0, one()), &[(a, 1), (b, 1)]).unwrap();
        let inv = MotiveFrac::inv_lefschetz_difference(a, b).unwrap();
        for n in 0..8 {
            let expected = &inv
                * &(&MotiveFrac::lefschetz_pow(a * (n + 1)) - &MotiveFrac::lefschetz_pow(b * (n + 1)));
            assert_eq!(s.exp_t_coefficient(n), expected);
        }
    }

    #[test]
    fn double_pole_gives_linear_index() {
        let s = rs_normalize(mono(1, one()), &[(0, 1), (0, 1)]).unwrap();
        let expected: Vec<MotiveFrac> = (0..6).map(MotiveFrac::from_int).collect();
        assert_eq!(s.exp_t(0, 5), expected);
        let t = s.terms().next().unwrap();
        assert_eq!(t.poly, IndexPoly::from_rational(&one(), &[q(1), q(1)]));
    }

    #[test]
    fn lambda_at_infinity_matches_canonical_form() {
        let mut num = mono(0, one());
        num.insert(2, MotiveFrac::lefschetz_pow(-1));
        num.insert(5, MotiveFrac::from_int(-2));
        num.insert(-1, MotiveFrac::from_int(3));
        for den in [vec![], vec![(1, 2)], vec![(1, 2), (-1, 3), (1, 2), (0, 1)], vec![(2, 1), (2, 1), (2, 1)]] {
            let f = RationalFunction::new(num.clone(), den.clone()).unwrap();
            assert_eq!(f.lambda(), f.normalize().lambda(), "{den:?}");
        }
    }

    #[test]
    fn mixed_steps_match_long_division() {
        let mut num = mono(0, one());
        num.insert(2, MotiveFrac::lefschetz_pow(-1));
        num.insert(-1, MotiveFrac::from_int(3));
        let f = RationalFunction::new(num, vec![(1, 2), (-1, 3), (1, 2), (0, 1)]).unwrap();
        let s = f.normalize();
        let naive = f.naive_expansion(30);
        for i in -1..=30 {
            assert_eq!(s.exp_t_coefficient(i), naive.get(&i).cloned().unwrap_or_default(), "i={i}");
        }
    }

    #[test]
    fn negative_step_is_rescaled() {
        // 1/(1 - T^-1) = -T/(1 - T)
        let f = RationalFunction::new(mono(0, one()), vec![(0, -1)]).unwrap();
        assert_eq!(f.denominator(), &[(0, 1)]);
        assert_eq!(f.normalize().exp_t(0, 2), vec![MotiveFrac::zero(), -one(), -one()]);
    }

    #[test]
    fn rejects_zero_step() {
        assert!(RationalFunction::<MotiveFrac>::new(mono(0, one()), vec![(1, 0)]).is_err());
    }
}
