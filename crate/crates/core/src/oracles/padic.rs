//! Exponential sums and character integrals over `Z_p`, evaluated as finite
//! sums over `(Z/p^N)^m`.

use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;

use super::poly_expr::IntPoly;
use crate::error::{Error, Result};
use crate::motive::Character;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Smallest primitive root mod `p²`, hence mod every `p^c`.
pub fn primitive_root(p: u64) -> u64 {
    let n = p * p;
    let order = p * (p - 1);
    let factors = prime_factors(order);
    (2..n)
        .find(|&g| g % p != 0 && factors.iter().all(|&q| pow_mod(g, order / q, n) != 1))
        .expect("odd prime powers have primitive roots")
}

fn e(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * x)
}

fn ord_p(v: u64, p: u64) -> u32 {
    let (mut v, mut k) = (v, 0);
    while v % p == 0 {
        v /= p;
        k += 1;
    }
    k
}

/// `(Z/p^level)^×` with a discrete-logarithm table for a fixed generator.
#[derive(Debug)]
pub struct UnitGroup {
    p: u64,
    level: u32,
    modulus: u64,
    order: u64,
    generator: u64,
    dlog: Vec<u64>,
}

impl UnitGroup {
    pub fn new(p: u64, level: u32) -> Result<Arc<Self>> {
        if p == 2 || !is_prime(p) {
            return Err(Error::Unsupported(format!("{p} is not an odd prime")));
        }
        if level == 0 {
            return Err(Error::Precision("character level must be at least 1".into()));
        }
        let modulus = p.pow(level);
        let order = modulus / p * (p - 1);
        let generator = primitive_root(p);
        let mut dlog = vec![u64::MAX; modulus as usize];
        let mut x = 1u64;
        for j in 0..order {
            dlog[x as usize] = j;
            x = x * generator % modulus;
        }
        Ok(Arc::new(UnitGroup { p, level, modulus, order, generator, dlog }))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Every character of the group.
    pub fn characters(self: &Arc<Self>) -> Vec<ResidueCharacter> {
        (0..self.order).map(|k| ResidueCharacter { group: Arc::clone(self), k }).collect()
    }
}

/// A character of `(Z/p^level)^×`, `g^j ↦ exp(2πi k j / φ(p^level))`.
#[derive(Clone, Debug)]
pub struct ResidueCharacter {
    group: Arc<UnitGroup>,
    k: u64,
}

impl PartialEq for ResidueCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.group.p == other.group.p && self.group.level == other.group.level && self.k == other.k
    }
}

impl ResidueCharacter {
    pub fn trivial(group: &Arc<UnitGroup>) -> Self {
        ResidueCharacter { group: Arc::clone(group), k: 0 }
    }

    /// The character of `μ_d` given by `a/d ∈ Q/Z`, pulled back along
    /// `(Z/p^level)^× → F_p^× → μ_{p-1}`; needs `d | p - 1`.
    pub fn from_character(group: &Arc<UnitGroup>, alpha: &Character) -> Option<Self> {
        let d = alpha.denom();
        let p = group.p;
        if (p - 1) % d != 0 {
            return None;
        }
        let k = alpha.numer() * (group.order / d);
        Some(ResidueCharacter { group: Arc::clone(group), k })
    }

    pub fn index(&self) -> u64 {
        self.k
    }

    pub fn is_trivial(&self) -> bool {
        self.k == 0
    }

    /// Smallest `c ≥ 1` with the character trivial on `1 + p^c Z_p`.
    pub fn conductor(&self) -> u32 {
        let p = self.group.p;
        (1..=self.group.level)
            .find(|&c| self.k % p.pow(self.group.level - c) == 0)
            .unwrap_or(self.group.level)
    }

    /// Value at an integer; zero at non-units.
    pub fn eval(&self, v: u64) -> Complex64 {
        let g = &self.group;
        let j = g.dlog[(v % g.modulus) as usize];
        if j == u64::MAX {
            return Complex64::new(0.0, 0.0);
        }
        e(((self.k as u128 * j as u128) % g.order as u128) as f64 / g.order as f64)
    }

    pub fn inverse(&self) -> Self {
        ResidueCharacter { group: Arc::clone(&self.group), k: (self.group.order - self.k) % self.group.order }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.group.p == other.group.p && self.group.level == other.group.level);
        ResidueCharacter { group: Arc::clone(&self.group), k: (self.k + other.k) % self.group.order }
    }
}

/// `Q_p` with arithmetic modulo `p^N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicContext {
    pub p: u64,
    pub precision: u32,
}

impl PadicContext {
    pub fn new(p: u64, precision: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::Unsupported(format!("{p} is not an odd prime")));
        }
        if precision == 0 {
            return Err(Error::Precision("precision must be at least 1".into()));
        }
        Ok(PadicContext { p, precision })
    }
}

/// A function on `(Z/p)^m`, read through reduction mod `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualFunction {
    p: u64,
    arity: usize,
    values: Vec<f64>,
}

impl ResidualFunction {
    pub fn from_fn(p: u64, arity: usize, f: impl Fn(&[u64]) -> f64) -> Self {
        let size = (p as usize).pow(arity as u32);
        let values = (0..size)
            .map(|idx| {
                let x: Vec<u64> = (0..arity).map(|i| (idx as u64 / p.pow(i as u32)) % p).collect();
                f(&x)
            })
            .collect();
        ResidualFunction { p, arity, values }
    }

    pub fn one(p: u64, arity: usize) -> Self {
        Self::from_fn(p, arity, |_| 1.0)
    }

    /// Indicator of `x ≡ 0 mod p`.
    pub fn origin(p: u64, arity: usize) -> Self {
        Self::from_fn(p, arity, |x| if x.iter().all(|&c| c == 0) { 1.0 } else { 0.0 })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, x: &[u64]) -> f64 {
        let idx = x.iter().take(self.arity).rev().fold(0u64, |acc, &c| acc * self.p + c % self.p);
        self.values[idx as usize]
    }

    /// `Φ ⊗ Φ'` on `(Z/p)^{m + m'}`.
    pub fn tensor(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let m = self.arity;
        Self::from_fn(self.p, m + other.arity, |x| self.eval(&x[..m]) * other.eval(&x[m..]))
    }
}

/// Push-forward of `Φ |dx|` along `x ↦ f(x) mod p^level`.
fn histogram(f: &IntPoly, phi: &ResidualFunction, p: u64, level: u32) -> Vec<f64> {
    let m = f.arity().max(phi.arity()).max(1);
    let modulus = p.pow(level);
    let mut out = vec![0.0; modulus as usize];
    let mut x = vec![0u64; m];
    let cell = (modulus as f64).powi(m as i32).recip();
    loop {
        let w = phi.eval(&x);
        if w != 0.0 {
            out[f.eval_mod(&x, modulus) as usize] += w * cell;
        }
        let mut i = 0;
        loop {
            if i == m {
                return out;
            }
            x[i] += 1;
            if x[i] < modulus {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

fn check_precision(ctx: &PadicContext, need: u32) -> Result<()> {
    if ctx.precision < need {
        return Err(Error::Precision(format!("need precision at least {need}, have {}", ctx.precision)));
    }
    Ok(())
}

/// `∫ Φ(x) Ψ(p^{-(i+1)} f(x)) |dx|`.
pub fn padic_exp_integral(f: &IntPoly, ctx: &PadicContext, phi: &ResidualFunction, i: u32) -> Result<Complex64> {
    check_precision(ctx, i + 1)?;
    let h = histogram(f, phi, ctx.p, ctx.precision);
    let q = ctx.p.pow(i + 1);
    Ok(h.iter().enumerate().map(|(v, w)| e((v as u64 % q) as f64 / q as f64) * w).sum())
}

/// `Σ_{ord f(x) = i} Φ(x) α(f(x)/p^i) |dx|` from a histogram at level `≥ i + c(α)`.
fn char_sum(h: &[f64], p: u64, alpha: &ResidueCharacter, i: u32) -> Complex64 {
    let c = alpha.conductor();
    let pi = p.pow(i);
    let pc = p.pow(c);
    let mut acc = Complex64::new(0.0, 0.0);
    for (v, w) in h.iter().enumerate() {
        let v = v as u64;
        if *w == 0.0 || v == 0 || ord_p(v, p) != i {
            continue;
        }
        acc += alpha.eval((v / pi) % pc) * w;
    }
    acc
}

/// `∫_{ord f = i} Φ(x) α(ac f(x)) |dx|`.
pub fn padic_char_integral(
    f: &IntPoly,
    ctx: &PadicContext,
    phi: &ResidualFunction,
    alpha: &ResidueCharacter,
    i: u32,
) -> Result<Complex64> {
    check_precision(ctx, i + alpha.conductor())?;
    let h = histogram(f, phi, ctx.p, ctx.precision);
    Ok(char_sum(&h, ctx.p, alpha, i))
}

/// `g(α) = p^{1-c} Σ_{v ∈ (Z/p^c)^×} α(v) Ψ(v / p^c)` with `c` the conductor.
pub fn gauss_sum_numeric(alpha: &ResidueCharacter) -> Complex64 {
    let c = alpha.conductor();
    let p = alpha.group.p;
    let pc = p.pow(c);
    let s: Complex64 = (1..pc).filter(|v| v % p != 0).map(|v| alpha.eval(v) * e(v as f64 / pc as f64)).sum();
    s * (p as f64).powi(1 - c as i32)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionReport {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residue: f64,
    pub pass: bool,
}

pub const TOLERANCE: f64 = 1e-9;

/// Both sides of the decomposition of `E_{Φ,f,i}` into the measure of
/// `ord f > i` and Gauss-weighted character integrals, with characters
/// running over `(Z/p^{i+1})^×`.
pub fn check_decomposition(f: &IntPoly, p: u64, phi: &ResidualFunction, i: u32) -> Result<DecompositionReport> {
    let level = i + 1;
    let group = UnitGroup::new(p, level)?;
    let h = histogram(f, phi, p, level);
    let q = p.pow(level);
    let lhs: Complex64 = h.iter().enumerate().map(|(v, w)| e(v as f64 / q as f64) * w).sum();
    let mut rhs = Complex64::new(h[0], 0.0);
    let scale = 1.0 / (p as f64 - 1.0);
    for alpha in group.characters() {
        let c = alpha.conductor();
        let j = i + 1 - c;
        rhs += gauss_sum_numeric(&alpha.inverse()) * char_sum(&h, p, &alpha, j) * scale;
    }
    let residue = (lhs - rhs).norm();
    Ok(DecompositionReport { lhs, rhs, residue, pass: residue <= TOLERANCE })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(3), 2);
        assert_eq!(primitive_root(5), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(29), 2);
    }

    #[test]
    fn conductors() {
        let g = UnitGroup::new(3, 3).unwrap();
        let counts = g.characters().iter().fold([0; 4], |mut acc, a| {
            acc[a.conductor() as usize] += 1;
            acc
        });
        // φ(3) = 2 characters of conductor 1, φ(9) - φ(3) = 4 of conductor 2, 12 of conductor 3
        assert_eq!(counts, [0, 2, 4, 12]);
    }

    #[test]
    fn exp_integral_examples() {
        let ctx = PadicContext::new(5, 1).unwrap();
        let v = padic_exp_integral(&poly("x"), &ctx, &ResidualFunction::one(5, 1), 0).unwrap();
        assert!(v.norm() < 1e-12);
        let v = padic_exp_integral(&poly("x^2"), &ctx, &ResidualFunction::one(5, 1), 0).unwrap();
        assert!((v.norm() - 5f64.powf(-0.5)).abs() < 1e-12);
        let ctx = PadicContext::new(3, 2).unwrap();
        let v = padic_exp_integral(&poly("x"), &ctx, &ResidualFunction::origin(3, 1), 1).unwrap();
        assert!(v.norm() < 1e-12);
        assert!(padic_exp_integral(&poly("x"), &ctx, &ResidualFunction::one(3, 1), 2).is_err());
    }

    #[test]
    fn char_integral_examples() {
        let ctx = PadicContext::new(3, 3).unwrap();
        let g = UnitGroup::new(3, 1).unwrap();
        let one = ResidualFunction::one(3, 1);
        let v = padic_char_integral(&poly("x"), &ctx, &one, &ResidueCharacter::trivial(&g), 2).unwrap();
        assert!((v - Complex64::new(2.0 / 27.0, 0.0)).norm() < 1e-12);

        let ctx = PadicContext::new(5, 4).unwrap();
        let g5 = UnitGroup::new(5, 1).unwrap();
        let quad = ResidueCharacter::from_character(&g5, &Character::new(1, 2).unwrap()).unwrap();
        let one5 = ResidualFunction::one(5, 1);
        assert!(padic_char_integral(&poly("x^2"), &ctx, &one5, &quad, 1).unwrap().norm() < 1e-12);
        let triv = ResidueCharacter::trivial(&g5);
        assert!(padic_char_integral(&poly("x^2"), &ctx, &one5, &triv, 3).unwrap().norm() < 1e-12);
    }

    #[test]
    fn gauss_sum_examples() {
        let g5 = UnitGroup::new(5, 1).unwrap();
        let v = gauss_sum_numeric(&ResidueCharacter::trivial(&g5));
        assert!((v - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        let quad = ResidueCharacter::from_character(&g5, &Character::new(1, 2).unwrap()).unwrap();
        assert!((gauss_sum_numeric(&quad).norm() - 5f64.sqrt()).abs() < 1e-12);
        // the raw sum of a primitive character mod p^c has modulus p^{c/2}, so the
        // normalized value has modulus p^{1 - c/2}
        let g27 = UnitGroup::new(3, 3).unwrap();
        for alpha in g27.characters().iter().filter(|a| !a.is_trivial()) {
            let c = alpha.conductor() as f64;
            assert!((gauss_sum_numeric(alpha).norm() - 3f64.powf(1.0 - c / 2.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn decomposition_examples() {
        let r = check_decomposition(&poly("x^2"), 5, &ResidualFunction::one(5, 1), 0).unwrap();
        assert!(r.pass, "{r:?}");
        let r = check_decomposition(&poly("x^3 + y^2"), 7, &ResidualFunction::one(7, 2), 1).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn stability_in_precision() {
        let f = poly("x^2 + y^3");
        let phi = ResidualFunction::one(3, 2);
        let base = padic_exp_integral(&f, &PadicContext::new(3, 2).unwrap(), &phi, 1).unwrap();
        let more = padic_exp_integral(&f, &PadicContext::new(3, 3).unwrap(), &phi, 1).unwrap();
        assert!((base - more).norm() < 1e-12);
    }

    #[test]
    fn direct_sum_factorizes() {
        let (f, g) = (poly("x^2"), poly("x^3"));
        let (pf, pg) = (ResidualFunction::one(5, 1), ResidualFunction::origin(5, 1));
        let ctx = PadicContext::new(5, 2).unwrap();
        let lhs = padic_exp_integral(&f.direct_sum(&g).unwrap(), &ctx, &pf.tensor(&pg), 1).unwrap();
        let rhs = padic_exp_integral(&f, &ctx, &pf, 1).unwrap() * padic_exp_integral(&g, &ctx, &pg, 1).unwrap();
        assert!((lhs - rhs).norm() < 1e-12);
    }
}
