//! The invariant suite behind `motivic selftest` and the acceptance target.
//! Each check returns an [`Outcome`]; sizes are parameters so tests can run
//! reduced versions.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use num_integer::{binomial, Integer};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arc::{DirectProduct, MonomialGeometry};
use crate::gauss::UElement;
use crate::motive::{jacobi, q, Character, MotiveClass, MotiveFrac};
use crate::oracles::{check_gauss_jacobi, check_decomposition, IntPoly, ResidualFunction};
use crate::series::{ArithmeticTerm, RationalFunction, RationalSeries};
use crate::spectra::{brieskorn_oracle, s_phi, sg, sg_product_direct, sp_brieskorn, SpectrumPoly};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub criterion: u8,
    pub name: &'static str,
    pub pass: bool,
    pub cases: usize,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    fn new(criterion: u8, name: &'static str, cases: usize, failure: Option<String>, started: Instant) -> Self {
        Outcome {
            criterion,
            name,
            pass: failure.is_none(),
            cases,
            detail: failure.unwrap_or_default(),
            elapsed: started.elapsed(),
        }
    }
}

/// Sizes for one run of the suite.
#[derive(Clone, Debug)]
pub struct Suite {
    pub seed: u64,
    pub ring_triples: usize,
    pub max_denominator: u64,
    pub primes: Vec<u64>,
    pub series_pairs: usize,
    pub tau_window: i64,
    pub tau_max_k: usize,
    pub padic_primes: Vec<u64>,
    pub padic_levels: Vec<u32>,
    pub ts_max_exponent: u32,
    pub ts_max_twist: u32,
    pub ts_i_max: usize,
    pub geometry_max_dim: usize,
    pub geometry_max_exponent: u32,
    pub canonical_dim: usize,
    pub brieskorn_max_exponent: u32,
    pub brieskorn_max_vars: usize,
    pub probes: usize,
}

impl Suite {
    pub fn full() -> Self {
        Suite {
            seed: 0x5eed,
            ring_triples: 1000,
            max_denominator: 12,
            primes: vec![5, 7, 11, 13],
            series_pairs: 200,
            tau_window: 50,
            tau_max_k: 6,
            padic_primes: vec![3, 5, 7],
            padic_levels: vec![0, 1, 2],
            ts_max_exponent: 6,
            ts_max_twist: 2,
            ts_i_max: 30,
            geometry_max_dim: 3,
            geometry_max_exponent: 6,
            canonical_dim: 2,
            brieskorn_max_exponent: 6,
            brieskorn_max_vars: 3,
            probes: 20,
        }
    }

    pub fn quick() -> Self {
        Suite {
            ring_triples: 50,
            max_denominator: 6,
            primes: vec![5, 7],
            series_pairs: 20,
            tau_window: 12,
            tau_max_k: 3,
            padic_primes: vec![3, 5],
            padic_levels: vec![0, 1],
            ts_max_exponent: 3,
            ts_max_twist: 1,
            ts_i_max: 10,
            geometry_max_dim: 2,
            geometry_max_exponent: 3,
            brieskorn_max_exponent: 4,
            brieskorn_max_vars: 2,
            probes: 5,
            ..Suite::full()
        }
    }

    pub fn run(&self) -> Vec<Outcome> {
        vec![
            ring_laws(self.ring_triples, self.max_denominator, self.seed),
            jacobi_relations(self.max_denominator),
            finite_field(&self.primes),
            lambda_multiplicativity(self.series_pairs, self.tau_window, self.tau_max_k, self.seed),
            padic_decomposition(&self.padic_primes, &self.padic_levels),
            thom_sebastiani(self.ts_max_exponent, self.ts_max_twist, self.ts_i_max),
            exp_lambda_identity(self.geometry_max_dim, self.geometry_max_exponent, self.canonical_dim),
            brieskorn_spectra(self.brieskorn_max_exponent, self.brieskorn_max_vars),
            degenerate(self.probes, self.seed),
        ]
    }
}

fn random_scalar(rng: &mut impl Rng) -> MotiveFrac {
    let mut c = MotiveClass::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let (p, q_) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        let coeff = MotiveClass::monomial(p.into(), q_.into(), q(rng.gen_range(-3..=3))).expect("integral bidegree");
        c = &c + &coeff;
    }
    let c = MotiveFrac::from(c);
    if rng.gen_bool(0.2) {
        let n = rng.gen_range(1..=3);
        &c * &MotiveFrac::inv_lefschetz_difference(n, 0).expect("n > 0")
    } else {
        c
    }
}

fn random_u(rng: &mut impl Rng, chars: &[Character]) -> UElement {
    let mut u = UElement::from_scalar(random_scalar(rng));
    for _ in 0..rng.gen_range(0..=3) {
        let alpha = chars[rng.gen_range(0..chars.len())];
        u.add_gauss(alpha, random_scalar(rng));
    }
    u
}

/// Associativity, commutativity and distributivity in `U`, plus the Hodge
/// realization being a ring map.
pub fn ring_laws(triples: usize, max_denominator: u64, seed: u64) -> Outcome {
    let start = Instant::now();
    let chars = Character::with_denominator_at_most(max_denominator);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inputs: Vec<[UElement; 3]> =
        (0..triples).map(|_| [random_u(&mut rng, &chars), random_u(&mut rng, &chars), random_u(&mut rng, &chars)]).collect();
    let failure = inputs.par_iter().find_map_any(|[x, y, z]| {
        let xy = x * y;
        if &(&xy * z) != &(x * &(y * z)) {
            return Some(format!("(xy)z != x(yz) for x = {x}, y = {y}, z = {z}"));
        }
        if xy != y * x {
            return Some(format!("xy != yx for x = {x}, y = {y}"));
        }
        if x * &(y + z) != &xy + &(x * z) {
            return Some(format!("x(y+z) != xy+xz for x = {x}, y = {y}, z = {z}"));
        }
        if xy.hodge_realize() != &x.hodge_realize() * &y.hodge_realize() {
            return Some(format!("realization is not multiplicative at x = {x}, y = {y}"));
        }
        None
    });
    Outcome::new(1, "U-ring laws", triples, failure, start)
}

fn j(a: &Character, b: &Character) -> MotiveClass {
    jacobi(a, b)
}

/// `J(α₁,α₂)(J(α₁α₂,α₃) - ε) + δ`, which is the symmetric `J(α₁,α₂,α₃)`.
fn triple_jacobi(a1: &Character, a2: &Character, a3: &Character) -> MotiveClass {
    let a12 = a1.mul(a2);
    let l = MotiveClass::lefschetz_pow(1);
    let (eps, delta) = if !a12.is_trivial() {
        (MotiveClass::zero(), MotiveClass::zero())
    } else if !a1.is_trivial() {
        (MotiveClass::one(), MotiveClass::lefschetz_minus_one())
    } else {
        (MotiveClass::one(), l)
    };
    &(&j(a1, a2) * &(&j(&a12, a3) - &eps)) + &delta
}

/// The Jacobi relations, exhaustively over characters with bounded denominator.
pub fn jacobi_relations(max_denominator: u64) -> Outcome {
    let start = Instant::now();
    let chars = Character::with_denominator_at_most(max_denominator);
    let one = Character::TRIVIAL;
    let mut failure = None;
    if j(&one, &one) != MotiveClass::lefschetz_pow(1) {
        failure = Some("J(1,1) != L".to_string());
    }
    for a in chars.iter().filter(|a| !a.is_trivial()) {
        if failure.is_some() {
            break;
        }
        if !j(&one, a).is_zero() || !j(a, &one).is_zero() {
            failure = Some(format!("J(1,{a}) != 0"));
        } else if j(a, &a.inverse()) != MotiveClass::from_int(-1) {
            failure = Some(format!("J({a},{a}⁻¹) != -[α(-1)]"));
        }
    }
    let n = chars.len();
    let values: HashMap<(usize, usize, usize), MotiveClass> = (0..n * n * n)
        .into_par_iter()
        .map(|k| {
            let (a, b, c) = (k / (n * n), (k / n) % n, k % n);
            ((a, b, c), triple_jacobi(&chars[a], &chars[b], &chars[c]))
        })
        .collect();
    if failure.is_none() {
        failure = values.par_iter().find_map_any(|(&(a, b, c), v)| {
            let perms = [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)];
            perms.iter().find(|p| &values[p] != v).map(|p| {
                format!(
                    "J(α₁,α₂,α₃) not symmetric: ({}, {}, {}) gives {v}, ({}, {}, {}) gives {}",
                    chars[a], chars[b], chars[c], chars[p.0], chars[p.1], chars[p.2], values[p]
                )
            })
        });
    }
    Outcome::new(2, "Jacobi relations", n + values.len(), failure, start)
}

/// Gauss and Jacobi sum identities over `F_p`.
pub fn finite_field(primes: &[u64]) -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    let mut failure = None;
    for &p in primes {
        match check_gauss_jacobi(p) {
            Ok(r) => {
                cases += r.pairs;
                if !r.pass() && failure.is_none() {
                    failure = Some(format!(
                        "p = {p}: product {:.2e}, inverse {:.2e}, weight {:.2e}",
                        r.product_residue, r.inverse_residue, r.weight_residue
                    ));
                }
            }
            Err(e) => failure = failure.or(Some(e.to_string())),
        }
    }
    Outcome::new(3, "finite-field shadow", cases, failure, start)
}

fn random_lefschetz(rng: &mut impl Rng) -> MotiveFrac {
    let mut c = MotiveClass::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let k = rng.gen_range(-2..=2);
        c = &c + &MotiveClass::lefschetz_pow(k).scale(&q(rng.gen_range(-3..=3)));
    }
    c.into()
}

/// A random rational series with no constant term: a polynomial part in
/// positive degrees plus terms, or a normalized fraction of degree `≤ 0`.
fn random_series(rng: &mut impl Rng) -> RationalSeries<MotiveFrac> {
    if rng.gen_bool(0.5) {
        let mut s = RationalSeries::zero();
        for _ in 0..rng.gen_range(0..=2) {
            s.add_poly_coefficient(rng.gen_range(1..=5), random_lefschetz(rng));
        }
        for _ in 0..rng.gen_range(1..=3) {
            let d = rng.gen_range(1..=4u64);
            let r = rng.gen_range(1..=d as i64);
            let f: Vec<_> = (0..rng.gen_range(1..=3)).map(|_| q(rng.gen_range(-3..=3))).collect();
            s.add_term(ArithmeticTerm::new(r, d, rng.gen_range(-3..=3), &random_lefschetz(rng), &f));
        }
        s
    } else {
        let den: Vec<(i64, i64)> = (0..rng.gen_range(1..=3)).map(|_| (rng.gen_range(-3..=3), rng.gen_range(1..=3))).collect();
        let total: i64 = den.iter().map(|&(_, b)| b).sum();
        let num: BTreeMap<i64, MotiveFrac> = (0..rng.gen_range(1..=3))
            .map(|_| (rng.gen_range(1..=total), random_lefschetz(rng)))
            .collect();
        RationalFunction::new(num, den).expect("positive steps").normalize()
    }
}

/// `T^r / (1 - L^a T^d)^k` against the binomial expansions at 0 and at infinity.
fn tau_mismatch(r: i64, d: i64, a: i64, k: usize, window: i64) -> Option<String> {
    let s = RationalFunction::new([(r, MotiveFrac::one())].into_iter().collect(), vec![(a, d); k])
        .expect("positive step")
        .normalize();
    let k = k as i64;
    for i in -window..=window {
        let (n, rem) = (i - r).div_mod_floor(&d);
        let lp = MotiveFrac::lefschetz_pow(n * a);
        let zero = MotiveFrac::zero();
        // 1/(1-X)^k = Σ_{n≥0} C(n+k-1,k-1) X^n at 0 and (-1)^k Σ_{n≤-k} C(-n-1,k-1) X^n at ∞
        let at_zero = if rem == 0 && n >= 0 { lp.scale(&q(binomial(n + k - 1, k - 1))) } else { zero.clone() };
        let at_inf = if rem == 0 && n <= -k {
            lp.scale(&q(if k % 2 == 0 { 1 } else { -1 } * binomial(-n - 1, k - 1)))
        } else {
            zero.clone()
        };
        // τ is the quasi-polynomial C(n+k-1,k-1) L^{na} for every n
        let poly: num_rational::BigRational = (1..k).fold(q(1), |acc, j| acc * q(n + j)) / q((1..k).product());
        let tau = if rem == 0 { lp.scale(&poly) } else { zero };
        if s.exp_t_coefficient(i) != at_zero
            || s.exp_t_inv_coefficient(i) != at_inf
            || s.tau_coefficient(i) != tau
            || &at_zero - &at_inf != tau
        {
            return Some(format!("T^{r}/(1 - L^{a}T^{d})^{k} at i = {i}"));
        }
    }
    None
}

/// `λ(φ ∗ ψ) = -λ(φ)λ(ψ)` on random series, and the `τ` claim for powers of
/// geometric denominators.
pub fn lambda_multiplicativity(pairs: usize, window: i64, max_k: usize, seed: u64) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4c);
    let inputs: Vec<_> = (0..pairs).map(|_| (random_series(&mut rng), random_series(&mut rng))).collect();
    let mut failure = inputs.par_iter().find_map_any(|(phi, psi)| {
        let lhs = phi.hadamard(psi).lambda();
        let rhs = -(&phi.lambda() * &psi.lambda());
        (lhs != rhs).then(|| format!("λ(φ∗ψ) = {lhs} but -λ(φ)λ(ψ) = {rhs}"))
    });
    let shapes: Vec<(i64, i64, i64, usize)> = (1..=max_k)
        .flat_map(|k| (1..=3).flat_map(move |d| (1..=d).flat_map(move |r| (-2..=2).map(move |a| (r, d, a, k)))))
        .collect();
    if failure.is_none() {
        failure = shapes.par_iter().find_map_any(|&(r, d, a, k)| tau_mismatch(r, d, a, k, window));
    }
    Outcome::new(4, "λ-multiplicativity and τ", pairs + shapes.len(), failure, start)
}

/// The `p`-adic decomposition of exponential sums into Gauss-weighted
/// character integrals.
pub fn padic_decomposition(primes: &[u64], levels: &[u32]) -> Outcome {
    let start = Instant::now();
    let polys = ["x", "x^2", "x^3", "x*y", "x^2+y^3"];
    let mut jobs = Vec::new();
    for f in polys {
        for &p in primes {
            for &i in levels {
                for origin in [false, true] {
                    jobs.push((f, p, i, origin));
                }
            }
        }
    }
    let failure = jobs.par_iter().find_map_any(|&(f, p, i, origin)| {
        let poly: IntPoly = f.parse().expect("fixed expressions parse");
        let m = poly.arity();
        let phi = if origin { ResidualFunction::origin(p, m) } else { ResidualFunction::one(p, m) };
        match check_decomposition(&poly, p, &phi, i) {
            Ok(r) if r.pass => None,
            Ok(r) => Some(format!("f = {f}, p = {p}, i = {i}, origin = {origin}: residue {:.3e}", r.residue)),
            Err(e) => Some(e.to_string()),
        }
    });
    Outcome::new(5, "p-adic decomposition", jobs.len(), failure, start)
}

/// Stratified direct computation of `E_{f ⊕ f'}` against the Hadamard product
/// `E_f ∗ E_{f'}`, for `f = x^a` twisted by `g = x^c`.
pub fn thom_sebastiani(max_exponent: u32, max_twist: u32, i_max: usize) -> Outcome {
    let start = Instant::now();
    let geoms: Vec<MonomialGeometry> = (1..=max_exponent)
        .flat_map(|a| (0..=max_twist).map(move |c| MonomialGeometry::new(vec![a], vec![c], &[1]).expect("x^a")))
        .collect();
    let series: Vec<RationalSeries<UElement>> = geoms.par_iter().map(MonomialGeometry::exp_series).collect();
    let pairs: Vec<(usize, usize)> = (0..geoms.len()).flat_map(|l| (0..geoms.len()).map(move |r| (l, r))).collect();
    let failure = pairs.par_iter().find_map_any(|&(l, r)| {
        let product = series[l].hadamard(&series[r]);
        let direct = DirectProduct::new(&geoms[l], &geoms[r], i_max);
        (1..=i_max).find_map(|i| {
            let (a, b) = (product.exp_t_coefficient(i as i64), direct.exp_coefficient(i));
            (a != b).then(|| {
                format!(
                    "f = x^{:?} g = x^{:?}, f' = y^{:?} g' = y^{:?} at T^{i}: product {a}, direct {b}",
                    geoms[l].f_exponents(),
                    geoms[l].g_exponents(),
                    geoms[r].f_exponents(),
                    geoms[r].g_exponents()
                )
            })
        })
    });
    let failure = failure.or_else(|| {
        let plain: Vec<&MonomialGeometry> = geoms.iter().filter(|g| g.g_exponents() == [0]).collect();
        let sgs: Vec<UElement> = plain.iter().map(|g| sg(g)).collect();
        let pairs: Vec<(usize, usize)> = (0..plain.len()).flat_map(|l| (l..plain.len()).map(move |r| (l, r))).collect();
        pairs.par_iter().find_map_any(|&(l, r)| {
            let (a, b) = (&sgs[l] * &sgs[r], sg_product_direct(plain[l], plain[r]));
            (a != b).then(|| format!("SG(x^{:?})·SG(y^{:?}) = {a}, direct {b}", plain[l].f_exponents(), plain[r].f_exponents()))
        })
    });
    Outcome::new(6, "Thom-Sebastiani", pairs.len() * i_max, failure, start)
}

/// Every monomial geometry with `m ≤ max_dim`, f-exponents `≤ max_exponent`,
/// and `W` a nonempty subset of the support of `f`.
pub fn monomial_geometries(max_dim: usize, max_exponent: u32) -> Vec<MonomialGeometry> {
    let mut out = Vec::new();
    for m in 1..=max_dim {
        let mut exps = vec![0u32; m];
        loop {
            let support: Vec<usize> = (0..m).filter(|&j| exps[j] > 0).map(|j| j + 1).collect();
            for mask in 1u32..(1 << support.len()) {
                let w: Vec<usize> =
                    support.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &j)| j).collect();
                out.push(MonomialGeometry::new(exps.clone(), vec![0; m], &w).expect("w inside the support"));
            }
            let Some(pos) = exps.iter().position(|&e| e < max_exponent) else { break };
            exps[pos] += 1;
            exps[..pos].iter_mut().for_each(|e| *e = 0);
        }
    }
    out
}

/// `λ(E_{W,f}) = -L^{-m} SG_{W,f}`. `λ(E)` is read at infinity from the
/// fraction; geometries with `m ≤ canonical_dim` also go through the
/// canonical series form.
pub fn exp_lambda_identity(max_dim: usize, max_exponent: u32, canonical_dim: usize) -> Outcome {
    let start = Instant::now();
    let geoms = monomial_geometries(max_dim, max_exponent);
    let failure = geoms.par_iter().find_map_any(|g| {
        let lhs = g.exp_rational_function().lambda();
        let rhs = -sg(g).scale(&MotiveFrac::lefschetz_pow(-(g.ambient_dim() as i64)));
        if lhs != rhs {
            return Some(format!("{g:?}: λ(E) = {lhs}, -L^-m SG = {rhs}"));
        }
        if g.ambient_dim() <= canonical_dim {
            let canonical = g.exp_series().lambda();
            if canonical != lhs {
                return Some(format!("{g:?}: λ of the canonical series is {canonical}, at infinity {lhs}"));
            }
        }
        None
    });
    Outcome::new(7, "λ(E) = -L^-m SG", geoms.len(), failure, start)
}

/// Spectra of Brieskorn sums through `SG` products against the Milnor-algebra
/// count.
pub fn brieskorn_spectra(max_exponent: u32, max_vars: usize) -> Outcome {
    let start = Instant::now();
    let mut shapes: Vec<Vec<u32>> = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..max_vars {
        shapes = shapes
            .iter()
            .flat_map(|s| {
                (2..=max_exponent).map(move |a| {
                    let mut t = s.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
        all.extend(shapes.iter().cloned());
    }
    let r = |n: i64, d: i64| num_rational::Rational64::new(n, d);
    let named = [
        (vec![2], SpectrumPoly::monomial(r(1, 2), 1)),
        (vec![2, 3], {
            let mut s = SpectrumPoly::monomial(r(5, 6), 1);
            s.add(r(7, 6), 1);
            s
        }),
        (vec![2, 2, 2], SpectrumPoly::monomial(r(3, 2), 1)),
    ];
    let mut failure = named.iter().find_map(|(e, want)| match sp_brieskorn(e) {
        Ok(got) if &got == want => None,
        Ok(got) => Some(format!("Sp{e:?} = {got}, expected {want}")),
        Err(err) => Some(err.to_string()),
    });
    if failure.is_none() {
        failure = all.par_iter().find_map_any(|e| match (sp_brieskorn(e), brieskorn_oracle(e)) {
            (Ok(a), Ok(b)) if a == b => None,
            (Ok(a), Ok(b)) => Some(format!("Sp{e:?}: product path {a}, oracle {b}")),
            (Err(err), _) | (_, Err(err)) => Some(err.to_string()),
        });
    }
    Outcome::new(8, "Brieskorn spectra", all.len() + named.len(), failure, start)
}

/// Vanishing results: `E` over the origin for `f = x`, `S^φ` of smooth linear
/// `f`, and character integrals at characters outside `big_d`.
pub fn degenerate(probes: usize, seed: u64) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xd9);
    let mut cases = 0;
    let mut failure = None;
    let origin = MonomialGeometry::at_origin(vec![1], vec![]).expect("x at the origin");
    let e = origin.exp_series();
    cases += 1;
    if !e.is_zero() || (1..=30).any(|i| !origin.exp_coefficient(i).is_zero()) {
        failure = Some(format!("E_{{0}},x = {e:?} is not zero"));
    }
    for m in 1..=3 {
        let mut f = vec![0; m];
        f[0] = 1;
        let linear = MonomialGeometry::new(f, vec![0; m], &[1]).expect("x_1");
        for alpha in Character::of_order_dividing(linear.big_d()) {
            cases += 1;
            let v = s_phi(&linear, &alpha);
            if !v.is_zero() && failure.is_none() {
                failure = Some(format!("S^φ_{alpha} of x_1 in dimension {m} is {v}"));
            }
        }
    }
    for g in monomial_geometries(2, 4) {
        let big_d = g.big_d();
        let mut found = 0;
        while found < probes {
            let d = rng.gen_range(2..=60i64);
            let alpha = Character::new(rng.gen_range(1..d), d).expect("d >= 2");
            if alpha.order_divides(big_d) {
                continue;
            }
            found += 1;
            cases += 1;
            let i = rng.gen_range(0..=20);
            let v = g.char_integral(&alpha, i);
            if !v.is_zero() && failure.is_none() {
                failure = Some(format!("{g:?}: char_integral({alpha}, {i}) = {v}"));
            }
        }
    }
    Outcome::new(9, "degenerate sanity", cases, failure, start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        for o in Suite::quick().run() {
            assert!(o.pass, "{}: {}", o.name, o.detail);
        }
    }

    #[test]
    fn enumeration_counts() {
        // per coordinate: exponent 0, or 1..=e in or out of W
        assert_eq!(monomial_geometries(1, 6).len(), 6);
        assert_eq!(monomial_geometries(2, 6).len(), 6 + 13 * 13 - 49);
    }

    #[test]
    fn triple_jacobi_all_trivial() {
        let one = Character::TRIVIAL;
        assert_eq!(triple_jacobi(&one, &one, &one), MotiveClass::lefschetz_pow(2));
    }
}
