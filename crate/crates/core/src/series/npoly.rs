use num_traits::Zero;

use super::coeff::Coefficient;
use crate::motive::{q, Q};

/// Polynomial in the summation index `n` with coefficients in `B`
/// (`coeffs[k]` multiplies `n^k`).
#[derive(Clone, Debug, PartialEq)]
pub struct IndexPoly<B> {
    coeffs: Vec<B>,
}

/// Rational coefficients of `binom(n + k - 1, k - 1)` as a polynomial in `n`.
pub fn binomial_poly(k: u32) -> Vec<Q> {
    assert!(k >= 1);
    let mut out = vec![q(1)];
    for j in 1..k as i64 {
        // multiply by (n + j) / j
        let mut next = vec![Q::zero(); out.len() + 1];
        for (idx, c) in out.iter().enumerate() {
            next[idx] += c * q(j);
            next[idx + 1] += c;
        }
        let inv = Q::new(1.into(), j.into());
        out = next.into_iter().map(|c| c * &inv).collect();
    }
    out
}

impl<B: Coefficient> IndexPoly<B> {
    pub fn zero() -> Self {
        IndexPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: B) -> Self {
        Self::new(vec![c])
    }

    pub fn new(coeffs: Vec<B>) -> Self {
        let mut out = IndexPoly { coeffs };
        out.trim();
        out
    }

    /// `c · f(n)` for a rational polynomial `f`.
    pub fn from_rational(c: &B, f: &[Q]) -> Self {
        Self::new(f.iter().map(|r| c.scale_q(r)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[B] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, n: i64) -> B {
        let x = q(n);
        let mut acc = B::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale_q(&x).plus(c);
        }
        acc
    }

    pub fn plus(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for idx in 0..len {
            out.push(match (self.coeffs.get(idx), other.coeffs.get(idx)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }

    pub fn negate(&self) -> Self {
        IndexPoly { coeffs: self.coeffs.iter().map(|c| c.negate()).collect() }
    }

    pub fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![B::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::new(out)
    }

    pub fn map(&self, f: impl Fn(&B) -> B) -> Self {
        Self::new(self.coeffs.iter().map(f).collect())
    }

    /// `k ↦ f(base + stride·k)`.
    pub fn compose_affine(&self, base: i64, stride: i64) -> Self {
        let mut acc: Vec<B> = Vec::new();
        for c in self.coeffs.iter().rev() {
            // acc ← acc·(base + stride·k) + c
            let mut next = vec![B::zero(); acc.len() + 1];
            for (idx, a) in acc.iter().enumerate() {
                next[idx] = next[idx].plus(&a.scale_q(&q(base)));
                next[idx + 1] = next[idx + 1].plus(&a.scale_q(&q(stride)));
            }
            next[0] = next[0].plus(c);
            acc = next;
        }
        Self::new(acc)
    }

    /// Coefficients `b_k` with `f(n) = Σ_k b_k binom(n + k, k)`.
    pub fn binomial_coordinates(&self) -> Vec<B> {
        let mut rest = self.clone();
        let mut out = vec![B::zero(); self.coeffs.len()];
        while let Some(deg) = rest.degree() {
            // binom(n + deg, deg) has leading coefficient 1/deg!
            let fact: Q = (1..=deg as i64).fold(q(1), |acc, j| acc * q(j));
            let b = rest.coeffs[deg].scale_q(&fact);
            let basis = IndexPoly::from_rational(&b, &binomial_poly(deg as u32 + 1));
            rest = rest.plus(&basis.negate());
            out[deg] = b;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive::MotiveFrac;

    fn mf(n: i64) -> MotiveFrac {
        MotiveFrac::from_int(n)
    }

    fn binom(n: i64, k: i64) -> i64 {
        if k < 0 {
            return 0;
        }
        let mut num = 1i128;
        let mut den = 1i128;
        for j in 0..k {
            num *= (n - j) as i128;
            den *= (j + 1) as i128;
        }
        (num / den) as i64
    }

    #[test]
    fn binomial_poly_values() {
        for k in 1..=6u32 {
            let p = IndexPoly::from_rational(&mf(1), &binomial_poly(k));
            for n in -8..8i64 {
                assert_eq!(p.eval(n), mf(binom(n + k as i64 - 1, k as i64 - 1)), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn affine_composition() {
        // f(n) = n^2 + 1, f(3 + 2k) = 4k^2 + 12k + 10
        let f = IndexPoly::new(vec![mf(1), mf(0), mf(1)]);
        let g = f.compose_affine(3, 2);
        assert_eq!(g, IndexPoly::new(vec![mf(10), mf(12), mf(4)]));
        for k in -3..3 {
            assert_eq!(g.eval(k), f.eval(3 + 2 * k));
        }
    }

    #[test]
    fn binomial_coordinates_reconstruct() {
        let f = IndexPoly::new(vec![mf(3), mf(-2), mf(5), mf(1)]);
        let b = f.binomial_coordinates();
        let mut back = IndexPoly::zero();
        for (k, c) in b.iter().enumerate() {
            back = back.plus(&IndexPoly::from_rational(c, &binomial_poly(k as u32 + 1)));
        }
        assert_eq!(back, f);
    }
}
