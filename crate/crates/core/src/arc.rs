//! Character integrals over arc spaces for monomial normal-crossings data.
//!
//! A [`MonomialGeometry`] is `f = Π x_j^{n_j}`, `g = Π x_j^{m_j}` on affine
//! `m`-space with `W` the union of the hyperplanes `x_i = 0`, `i ∈ I`. Arcs are
//! sorted by the orders `γ_j = ord_t x_j`; the cell with orders `γ` has measure
//! `Π (L-1) L^{-γ_j-1}` and `ac f` is a monomial in the angular components, so
//! every integral reduces to a lattice sum.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gauss::UElement;
use crate::motive::{fermat_torus_class, q, Character, MotiveClass, MotiveFrac};
use crate::series::{RationalFunction, RationalSeries};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialGeometry {
    f_exp: Vec<u32>,
    g_exp: Vec<u32>,
    w: BTreeSet<usize>,
}

/// Per-level values of a geometry up to a fixed level.
#[derive(Clone, Debug)]
pub struct ArcTable {
    /// `∫_{ord f = i} L^{-ord g}` for every character of order dividing the gcd.
    pub char_values: Vec<MotiveFrac>,
    /// `∫_{ord f > i} L^{-ord g}`.
    pub measure_gt: Vec<MotiveFrac>,
    pub total: MotiveFrac,
}

/// `(1 - L^{-w})^{-1}`
fn inv_one_minus_lpow_neg(w: i64) -> MotiveFrac {
    MotiveFrac::inv_lefschetz_difference(0, -w).expect("positive weight")
}

/// Σ over `γ ∈ N^k` with `Σ n_j γ_j = i` of `L^{-Σ w_j γ_j}`, for `i ≤ i_max`,
/// as integer Laurent polynomials in `L`.
fn lattice_levels(coords: &[(u32, i64)], i_max: usize) -> Vec<BTreeMap<i64, i64>> {
    let mut levels = vec![BTreeMap::new(); i_max + 1];
    levels[0].insert(0, 1);
    for &(n, w) in coords {
        let n = n as usize;
        let mut next = vec![BTreeMap::new(); i_max + 1];
        for (i, level) in levels.iter().enumerate() {
            for (&e, &c) in level {
                let mut g = 0;
                while i + n * g <= i_max {
                    *next[i + n * g].entry(e - w * g as i64).or_insert(0) += c;
                    g += 1;
                }
            }
        }
        levels = next;
    }
    levels
}

/// `1 - L^a T^b`
fn one_minus(a: i64, b: i64) -> BTreeMap<i64, MotiveFrac> {
    [(0, MotiveFrac::one()), (b, -MotiveFrac::lefschetz_pow(a))].into_iter().collect()
}

fn poly_mul(x: &BTreeMap<i64, MotiveFrac>, y: &BTreeMap<i64, MotiveFrac>) -> BTreeMap<i64, MotiveFrac> {
    let mut out: BTreeMap<i64, MotiveFrac> = BTreeMap::new();
    for (ea, ca) in x {
        for (eb, cb) in y {
            let v = ca * cb;
            let slot = out.entry(ea + eb).or_insert_with(MotiveFrac::zero);
            *slot = &*slot + &v;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn laurent(map: &BTreeMap<i64, i64>) -> MotiveFrac {
    MotiveClass::lefschetz_poly(map.iter().filter(|(_, c)| **c != 0).map(|(e, c)| (*e, q(*c)))).into()
}

impl MonomialGeometry {
    /// `w_indices` are 1-based; an empty `g_exp` means `g = 1`.
    pub fn new(f_exp: Vec<u32>, g_exp: Vec<u32>, w_indices: &[usize]) -> Result<Self> {
        let m = f_exp.len();
        if m == 0 {
            return Err(Error::Geometry("ambient dimension must be at least 1".into()));
        }
        let g_exp = if g_exp.is_empty() { vec![0; m] } else { g_exp };
        if g_exp.len() != m {
            return Err(Error::Geometry(format!("g has {} exponents, expected {m}", g_exp.len())));
        }
        if f_exp.iter().all(|&n| n == 0) {
            return Err(Error::Geometry("f must not be constant".into()));
        }
        if w_indices.is_empty() {
            return Err(Error::Geometry("W needs at least one hyperplane".into()));
        }
        let mut w = BTreeSet::new();
        for &i in w_indices {
            if i == 0 || i > m {
                return Err(Error::Geometry(format!("hyperplane index {i} outside 1..={m}")));
            }
            if f_exp[i - 1] == 0 {
                return Err(Error::Geometry(format!("x_{i} = 0 is not contained in f = 0")));
            }
            w.insert(i - 1);
        }
        Ok(MonomialGeometry { f_exp, g_exp, w })
    }

    /// `f` near the origin: `W` is the union of all hyperplanes.
    pub fn at_origin(f_exp: Vec<u32>, g_exp: Vec<u32>) -> Result<Self> {
        let w: Vec<usize> = (1..=f_exp.len()).collect();
        Self::new(f_exp, g_exp, &w)
    }

    /// `x^a` on the line.
    pub fn power(a: u32) -> Result<Self> {
        Self::at_origin(vec![a], vec![])
    }

    pub fn ambient_dim(&self) -> usize {
        self.f_exp.len()
    }

    pub fn f_exponents(&self) -> &[u32] {
        &self.f_exp
    }

    pub fn g_exponents(&self) -> &[u32] {
        &self.g_exp
    }

    /// 1-based hyperplane indices.
    pub fn w_indices(&self) -> Vec<usize> {
        self.w.iter().map(|i| i + 1).collect()
    }

    /// True when `W` is the union of every coordinate hyperplane.
    pub fn w_is_full(&self) -> bool {
        self.w.len() == self.ambient_dim()
    }

    /// `gcd{n_j : n_j > 0}`: exactly the characters of order dividing it see `ac f`
    /// as trivial.
    pub fn exponent_gcd(&self) -> u64 {
        self.f_exp.iter().filter(|&&n| n > 0).fold(0u64, |acc, &n| acc.gcd(&(n as u64)))
    }

    /// `lcm{n_j : n_j > 0}`.
    pub fn big_d(&self) -> u64 {
        self.f_exp.iter().filter(|&&n| n > 0).fold(1u64, |acc, &n| acc.lcm(&(n as u64)))
    }

    /// Characters with a nonzero character integral.
    pub fn supporting_characters(&self) -> Vec<Character> {
        Character::of_order_dividing(self.exponent_gcd())
    }

    fn weight(&self, j: usize) -> i64 {
        1 + self.g_exp[j] as i64
    }

    /// `(L-1)^m L^{-m} Π_{n_j = 0} (1 - L^{-(1+m_j)})^{-1}`
    fn prefactor(&self) -> MotiveFrac {
        let m = self.ambient_dim();
        let mut out: MotiveFrac = MotiveClass::lefschetz_minus_one().pow(m as u32).shift_lefschetz(-(m as i64)).into();
        for j in 0..m {
            if self.f_exp[j] == 0 {
                out = &out * &inv_one_minus_lpow_neg(self.weight(j));
            }
        }
        out
    }

    /// Per-level values up to `i_max`, by direct lattice enumeration.
    pub fn table(&self, i_max: usize) -> ArcTable {
        let support: Vec<(u32, i64)> =
            (0..self.ambient_dim()).filter(|&j| self.f_exp[j] > 0).map(|j| (self.f_exp[j], self.weight(j))).collect();
        let off_w: Vec<(u32, i64)> = (0..self.ambient_dim())
            .filter(|&j| self.f_exp[j] > 0 && !self.w.contains(&j))
            .map(|j| (self.f_exp[j], self.weight(j)))
            .collect();
        let all = lattice_levels(&support, i_max);
        let outside = lattice_levels(&off_w, i_max);
        let pre = self.prefactor();
        let mut char_values = Vec::with_capacity(i_max + 1);
        for i in 0..=i_max {
            let mut diff = all[i].clone();
            for (e, c) in &outside[i] {
                *diff.entry(*e).or_insert(0) -= c;
            }
            char_values.push(&pre * &laurent(&diff));
        }
        let total = self.total_measure();
        let mut measure_gt = Vec::with_capacity(i_max + 1);
        let mut acc = total.clone();
        for c in &char_values {
            acc = &acc - c;
            measure_gt.push(acc.clone());
        }
        ArcTable { char_values, measure_gt, total }
    }

    /// `∫_{π₀⁻¹(W) ∩ {ord f = i}} α(ac f) L^{-ord g} dμ`.
    pub fn char_integral(&self, alpha: &Character, i: usize) -> MotiveFrac {
        if !alpha.order_divides(self.exponent_gcd()) {
            return MotiveFrac::zero();
        }
        self.table(i).char_values[i].clone()
    }

    /// Measure of `π₀⁻¹(W)` with the `g`-twist, by inclusion-exclusion.
    pub fn total_measure(&self) -> MotiveFrac {
        let lm1_over_l: MotiveFrac = MotiveClass::lefschetz_minus_one().shift_lefschetz(-1).into();
        let mut everything = MotiveFrac::one();
        let mut missing_w = MotiveFrac::one();
        for j in 0..self.ambient_dim() {
            let s_j = &lm1_over_l * &inv_one_minus_lpow_neg(self.weight(j));
            everything = &everything * &s_j;
            missing_w = if self.w.contains(&j) { &missing_w * &lm1_over_l } else { &missing_w * &s_j };
        }
        &everything - &missing_w
    }

    pub fn measure_gt(&self, i: usize) -> MotiveFrac {
        self.table(i).measure_gt[i].clone()
    }

    /// `Z_1` as `num / Π_{n_j>0} (1 - L^{-(1+m_j)} T^{n_j})` with
    /// `num = c·(1 - Π_{j∈I} (1 - L^{-(1+m_j)} T^{n_j}))`.
    fn zeta_fraction(&self) -> (BTreeMap<i64, MotiveFrac>, Vec<(i64, i64)>) {
        let pre = self.prefactor();
        let mut prod: BTreeMap<i64, MotiveFrac> = [(0, MotiveFrac::one())].into_iter().collect();
        for &j in &self.w {
            prod = poly_mul(&prod, &one_minus(-self.weight(j), self.f_exp[j] as i64));
        }
        let mut num = BTreeMap::new();
        for (e, c) in prod {
            let v = if e == 0 { &MotiveFrac::one() - &c } else { -c };
            if !v.is_zero() {
                num.insert(e, &v * &pre);
            }
        }
        let den: Vec<(i64, i64)> = (0..self.ambient_dim())
            .filter(|&j| self.f_exp[j] > 0)
            .map(|j| (-self.weight(j), self.f_exp[j] as i64))
            .collect();
        (num, den)
    }

    /// `Z_{W,f,α}(T) = Σ_{i>0} (∫_{ord f = i} α(ac f) L^{-ord g}) T^i` in closed form.
    pub fn zeta_series(&self, alpha: &Character) -> RationalSeries<MotiveFrac> {
        if !alpha.order_divides(self.exponent_gcd()) {
            return RationalSeries::zero();
        }
        let (num, den) = self.zeta_fraction();
        RationalFunction::new(num, den).expect("positive steps").normalize()
    }

    /// `Σ_{i>0} ∫_{ord f > i} L^{-ord g} T^i = (A T - Z_1(T)) / (1 - T)` with `A` the total measure.
    pub fn measure_series(&self) -> RationalSeries<MotiveFrac> {
        let (num, mut den) = self.zeta_fraction();
        let mut full: BTreeMap<i64, MotiveFrac> = [(1, self.total_measure())].into_iter().collect();
        for &(a, b) in &den {
            full = poly_mul(&full, &one_minus(a, b));
        }
        for (e, c) in num {
            let slot = full.entry(e).or_insert_with(MotiveFrac::zero);
            *slot = &*slot - &c;
        }
        full.retain(|_, c| !c.is_zero());
        den.push((0, 1));
        RationalFunction::new(full, den).expect("positive steps").normalize()
    }

    /// `Σ_{α | gcd} G_{α⁻¹} / (L - 1)`, the Gauss weight carried by every character integral.
    pub fn gauss_weight(&self) -> UElement {
        let mut out = UElement::zero();
        for alpha in self.supporting_characters() {
            out.add_gauss(alpha.inverse(), MotiveFrac::inv_lefschetz_minus_one());
        }
        out
    }

    /// Coefficient of `T^i` in the exponential-integral series.
    pub fn exp_coefficient(&self, i: usize) -> UElement {
        let t = self.table(i);
        exp_from_table(&t, &self.gauss_weight(), i)
    }

    /// `E_{W,f}(T) = Σ_{i>0} (∫ exp(t^{-(i+1)} f) L^{-ord g} dμ) T^i`.
    pub fn exp_series(&self) -> RationalSeries<UElement> {
        let weight = self.gauss_weight();
        let z = self.zeta_series(&Character::TRIVIAL).to_u().scale(&weight);
        self.measure_series().to_u().plus(&z)
    }

    /// `E_{W,f}` as one fraction `(A T D - N + G N (1 - T)) / (D (1 - T))`,
    /// where `Z_1 = N / D` and `G` is the Gauss weight.
    pub fn exp_rational_function(&self) -> RationalFunction<UElement> {
        let (num, mut den) = self.zeta_fraction();
        let weight = self.gauss_weight();
        let mut full: BTreeMap<i64, MotiveFrac> = [(1, self.total_measure())].into_iter().collect();
        for &(a, b) in &den {
            full = poly_mul(&full, &one_minus(a, b));
        }
        let mut out: BTreeMap<i64, UElement> = BTreeMap::new();
        let mut add = |e: i64, u: UElement| {
            let slot = out.entry(e).or_insert_with(UElement::zero);
            *slot = &*slot + &u;
        };
        for (e, c) in full {
            add(e, c.into());
        }
        for (e, c) in num {
            add(e, UElement::from_scalar(-&c) + weight.scale(&c));
            add(e + 1, -weight.scale(&c));
        }
        out.retain(|_, c| !c.is_zero());
        den.push((0, 1));
        RationalFunction::new(out, den).expect("positive steps")
    }

    /// `χ_c(W)` by inclusion-exclusion over coordinate subspaces.
    pub fn chi_c_w(&self) -> MotiveClass {
        let m = self.ambient_dim() as i64;
        let k = self.w.len() as u32;
        // Σ_{∅≠S⊆I} (-1)^{|S|+1} L^{m-|S|} = L^m - L^{m-k} (L-1)^k
        &MotiveClass::lefschetz_pow(m) - &MotiveClass::lefschetz_minus_one().pow(k).shift_lefschetz(m - k as i64)
    }
}

fn exp_from_table(t: &ArcTable, weight: &UElement, i: usize) -> UElement {
    let mut out = weight.scale(&t.char_values[i]);
    out.add_scalar(&t.measure_gt[i]);
    out
}

/// The integrals of `f(x) + f'(y)` on `W × W'`, stratified by the orders of
/// `f` and `f'` without using any multiplicativity.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    left: ArcTable,
    right: ArcTable,
    i_max: usize,
    gcds: (u64, u64),
    characters: Vec<Character>,
    /// `Σ_{α₁α₂ = α} χ_c(F̃², (α₁⁻¹, α₂⁻¹))` over supporting pairs.
    fermat: BTreeMap<Character, MotiveClass>,
    /// Diagonal part `ord f = ord f' = k` with `ac f + ac f' = 0`.
    cancelling: Vec<MotiveFrac>,
}

impl DirectProduct {
    pub fn new(left: &MonomialGeometry, right: &MonomialGeometry, i_max: usize) -> Self {
        let lt = left.table(i_max);
        let rt = right.table(i_max);
        let mut fermat: BTreeMap<Character, MotiveClass> = BTreeMap::new();
        for a1 in left.supporting_characters() {
            for a2 in right.supporting_characters() {
                let e = fermat.entry(a1.mul(&a2)).or_insert_with(MotiveClass::zero);
                *e += &fermat_torus_class(&a1.inverse(), &a2.inverse());
            }
        }
        let characters = Character::of_order_dividing(left.big_d().lcm(&right.big_d()));
        let mut out =
            DirectProduct {
            left: lt,
            right: rt,
            i_max,
            gcds: (left.exponent_gcd(), right.exponent_gcd()),
            characters,
            fermat,
            cancelling: Vec::new(),
        };
        out.cancelling = (0..=i_max)
            .map(|k| {
                let both = &out.left.char_values[k] * &out.right.char_values[k];
                &both - &out.diagonal(&Character::TRIVIAL, k)
            })
            .collect();
        out
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    /// Characters of order dividing the lcm of both `big_d`.
    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    /// `ord f = ord f' = i` and `ac f + ac f' ≠ 0`.
    fn diagonal(&self, alpha: &Character, i: usize) -> MotiveFrac {
        match self.fermat.get(alpha) {
            Some(cls) if !cls.is_zero() => {
                let both = &self.left.char_values[i] * &self.right.char_values[i];
                &both.mul_class(cls) * &MotiveFrac::inv_lefschetz_minus_one()
            }
            _ => MotiveFrac::zero(),
        }
    }

    /// Tail `Σ_{k<i} a_{k,i}` where `a_{k,k+1} = (1 - L⁻¹)·cancelling(k)` and
    /// `a_{k,j+1} = L⁻¹ a_{k,j}`.
    fn tails(&self, i: usize) -> MotiveFrac {
        let one_minus: MotiveFrac = MotiveClass::lefschetz_poly([(0, q(1)), (-1, q(-1))]).into();
        let mut acc = MotiveFrac::zero();
        for k in 0..i {
            let seed = &one_minus * &self.cancelling[k];
            acc = &acc + &seed.shift_lefschetz(-((i - k - 1) as i64));
        }
        acc
    }

    /// `∫_{ord(f⊕f') = i} α(ac(f⊕f')) L^{-ord gg'}`.
    pub fn zeta(&self, alpha: &Character, i: usize) -> MotiveFrac {
        assert!(i <= self.i_max, "level beyond the precomputed range");
        let left_ok = alpha.order_divides(self.gcds.0);
        let right_ok = alpha.order_divides(self.gcds.1);
        let mut out = MotiveFrac::zero();
        if left_ok {
            out = &out + &(&self.left.char_values[i] * &self.right.measure_gt[i]);
        }
        if right_ok {
            out = &out + &(&self.left.measure_gt[i] * &self.right.char_values[i]);
        }
        out = &out + &self.diagonal(alpha, i);
        if alpha.is_trivial() {
            out = &out + &self.tails(i);
        }
        out
    }

    /// Measure of `π₀⁻¹(W × W') ∩ {ord(f⊕f') > i}` with the twist.
    pub fn measure_gt(&self, i: usize) -> MotiveFrac {
        let mut acc = &self.left.total * &self.right.total;
        for k in 0..=i {
            acc = &acc - &self.zeta(&Character::TRIVIAL, k);
        }
        acc
    }

    /// Coefficient of `T^i` of the exponential series of `f ⊕ f'`.
    pub fn exp_coefficient(&self, i: usize) -> UElement {
        let mut out = UElement::from_scalar(self.measure_gt(i));
        for alpha in &self.characters {
            let z = self.zeta(alpha, i);
            out.add_gauss(alpha.inverse(), &z * &MotiveFrac::inv_lefschetz_minus_one());
        }
        out
    }
}

/// `Σ_{α₁α₂ = α} χ_c(F̃², (α₁⁻¹, α₂⁻¹))` over characters supported on each side.
fn fermat_sum(left: &MonomialGeometry, right: &MonomialGeometry, alpha: &Character) -> MotiveClass {
    let mut out = MotiveClass::zero();
    for a1 in left.supporting_characters() {
        for a2 in right.supporting_characters() {
            if a1.mul(&a2) == *alpha {
                out += &fermat_torus_class(&a1.inverse(), &a2.inverse());
            }
        }
    }
    out
}

/// The stratified zeta series of `f ⊕ f'` on `W × W'` as a rational series:
/// off-diagonal strata are Hadamard products with the measure series, the
/// nonvanishing diagonal carries the Fermat classes, and the cancelling
/// diagonal feeds geometric tails `(1 - L⁻¹) T / (1 - L⁻¹ T)`.
pub fn direct_zeta_series(left: &MonomialGeometry, right: &MonomialGeometry, alpha: &Character) -> RationalSeries<MotiveFrac> {
    let zl = left.zeta_series(&Character::TRIVIAL);
    let zr = right.zeta_series(&Character::TRIVIAL);
    let mut out = RationalSeries::zero();
    if alpha.order_divides(left.exponent_gcd()) {
        out = out.plus(&zl.hadamard(&right.measure_series()));
    }
    if alpha.order_divides(right.exponent_gcd()) {
        out = out.plus(&left.measure_series().hadamard(&zr));
    }
    let both = zl.hadamard(&zr);
    let inv_lm1 = MotiveFrac::inv_lefschetz_minus_one();
    let diag = |a: &Character| both.scale(&(&MotiveFrac::from(fermat_sum(left, right, a)) * &inv_lm1));
    out = out.plus(&diag(alpha));
    if alpha.is_trivial() {
        let cancelling = both.minus(&diag(&Character::TRIVIAL));
        let one_minus: MotiveFrac = MotiveClass::lefschetz_poly([(0, q(1)), (-1, q(-1))]).into();
        let tail = RationalFunction::new([(1, one_minus)].into_iter().collect(), vec![(-1, 1)])
            .expect("positive step")
            .normalize();
        out = out.plus(&cancelling.times(&tail));
    }
    out
}

/// Direct-path value of one character integral of `f ⊕ f'`.
pub fn ts_direct_zeta(left: &MonomialGeometry, right: &MonomialGeometry, alpha: &Character, i: usize) -> MotiveFrac {
    DirectProduct::new(left, right, i).zeta(alpha, i)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TsMismatch {
    pub level: usize,
    pub product: UElement,
    pub direct: UElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TsReport {
    pub i_max: usize,
    pub levels_checked: usize,
    pub first_mismatch: Option<TsMismatch>,
}

impl TsReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `E_f · E_{f'}` coefficientwise with the stratified computation for
/// `f ⊕ f'` on levels `1..=i_max`.
pub fn ts_check(left: &MonomialGeometry, right: &MonomialGeometry, i_max: usize) -> TsReport {
    let direct = DirectProduct::new(left, right, i_max);
    let (lt, rt) = (left.table(i_max), right.table(i_max));
    let (lw, rw) = (left.gauss_weight(), right.gauss_weight());
    let results: Vec<Option<TsMismatch>> = (1..=i_max)
        .into_par_iter()
        .map(|i| {
            let product = &exp_from_table(&lt, &lw, i) * &exp_from_table(&rt, &rw, i);
            let d = direct.exp_coefficient(i);
            (product != d).then_some(TsMismatch { level: i, product, direct: d })
        })
        .collect();
    TsReport { i_max, levels_checked: i_max, first_mismatch: results.into_iter().flatten().next() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(a: i64, d: i64) -> Character {
        Character::new(a, d).unwrap()
    }

    fn lm1() -> MotiveFrac {
        MotiveClass::lefschetz_minus_one().into()
    }

    fn l(k: i64) -> MotiveFrac {
        MotiveFrac::lefschetz_pow(k)
    }

    #[test]
    fn exp_fraction_matches_series() {
        for (f, g, w) in [(vec![2], vec![0], vec![1]), (vec![2, 3], vec![1, 0], vec![1, 2]), (vec![4, 0, 2], vec![0, 1, 1], vec![3])] {
            let geom = MonomialGeometry::new(f, g, &w).unwrap();
            let rf = geom.exp_rational_function();
            let s = geom.exp_series();
            assert_eq!(rf.normalize(), s);
            assert_eq!(rf.lambda(), s.lambda());
        }
    }

    #[test]
    fn validation() {
        assert!(MonomialGeometry::new(vec![0, 1], vec![], &[1]).is_err());
        assert!(MonomialGeometry::new(vec![0, 0], vec![], &[]).is_err());
        assert!(MonomialGeometry::new(vec![1], vec![], &[2]).is_err());
        assert!(MonomialGeometry::new(vec![1, 2], vec![1], &[1]).is_err());
        assert!(MonomialGeometry::new(vec![1, 0], vec![], &[1]).is_ok());
    }

    #[test]
    fn char_integral_examples() {
        let x2 = MonomialGeometry::power(2).unwrap();
        assert_eq!(x2.char_integral(&ch(1, 2), 4), &lm1() * &l(-3));
        assert!(x2.char_integral(&ch(1, 2), 3).is_zero());
        for i in 0..6 {
            assert!(x2.char_integral(&ch(1, 3), i).is_zero());
        }
    }

    #[test]
    fn zeta_examples() {
        let x2 = MonomialGeometry::power(2).unwrap();
        // (L-1) L^{-2} T^2 / (1 - L^{-1} T^2)
        let expected = RationalFunction::new([(2, &lm1() * &l(-2))].into_iter().collect(), vec![(-1, 2)])
            .unwrap()
            .normalize();
        assert_eq!(x2.zeta_series(&ch(1, 2)), expected);
        let x = MonomialGeometry::power(1).unwrap();
        let expected = RationalFunction::new([(1, &lm1() * &l(-2))].into_iter().collect(), vec![(-1, 1)])
            .unwrap()
            .normalize();
        assert_eq!(x.zeta_series(&Character::TRIVIAL), expected);
        assert!(x.zeta_series(&ch(1, 2)).is_zero());
    }

    #[test]
    fn zeta_matches_lattice_sums() {
        let geoms = [
            MonomialGeometry::new(vec![2, 3], vec![1, 0], &[1, 2]).unwrap(),
            MonomialGeometry::new(vec![2, 0, 4], vec![0, 2, 1], &[3]).unwrap(),
            MonomialGeometry::new(vec![1, 1], vec![], &[2]).unwrap(),
        ];
        for g in &geoms {
            let t = g.table(25);
            let z = g.zeta_series(&Character::TRIVIAL);
            for i in 0..=25 {
                assert_eq!(z.exp_t_coefficient(i as i64), t.char_values[i], "{g:?} i={i}");
            }
            let p = g.measure_series();
            for i in 1..=25 {
                assert_eq!(p.exp_t_coefficient(i as i64), t.measure_gt[i], "{g:?} i={i}");
            }
        }
    }

    #[test]
    fn measure_examples() {
        let x2 = MonomialGeometry::power(2).unwrap();
        assert_eq!(x2.measure_gt(3), l(-2));
        let x = MonomialGeometry::power(1).unwrap();
        assert_eq!(x.measure_gt(0), l(-1));
        assert_eq!(x.total_measure(), l(-1));
    }

    #[test]
    fn big_d_examples() {
        let g = |n: Vec<u32>| MonomialGeometry::at_origin(n, vec![]).unwrap().big_d();
        assert_eq!(g(vec![2, 3]), 6);
        assert_eq!(g(vec![4]), 4);
        assert_eq!(g(vec![1, 1]), 1);
    }

    #[test]
    fn exp_coefficient_examples() {
        let x = MonomialGeometry::power(1).unwrap();
        for i in 1..6 {
            assert!(x.exp_coefficient(i).is_zero());
        }
        let x2 = MonomialGeometry::power(2).unwrap();
        assert_eq!(x2.exp_coefficient(2), UElement::gauss_scaled(ch(1, 2), l(-2)));
        assert_eq!(x2.exp_coefficient(1), UElement::from_scalar(l(-1)));
        let e = x2.exp_series();
        for i in 1..12 {
            assert_eq!(e.exp_t_coefficient(i), x2.exp_coefficient(i as usize));
        }
    }

    #[test]
    fn direct_path_on_two_lines() {
        let x = MonomialGeometry::power(1).unwrap();
        for i in 1..8 {
            let v = ts_direct_zeta(&x, &x, &Character::TRIVIAL, i);
            assert_eq!(v, &lm1() * &l(-(i as i64) - 2), "i={i}");
        }
    }

    #[test]
    fn direct_path_parity() {
        let x2 = MonomialGeometry::power(2).unwrap();
        let d = DirectProduct::new(&x2, &x2, 9);
        for i in [1, 3, 5, 7, 9] {
            assert!(d.zeta(&ch(1, 2), i).is_zero());
        }
    }

    #[test]
    fn direct_series_matches_levels() {
        let x2 = MonomialGeometry::power(2).unwrap();
        let y3 = MonomialGeometry::new(vec![3], vec![1], &[1]).unwrap();
        let d = DirectProduct::new(&x2, &y3, 20);
        for alpha in d.characters().to_vec() {
            let s = direct_zeta_series(&x2, &y3, &alpha);
            for i in 0..=20 {
                assert_eq!(s.exp_t_coefficient(i as i64), d.zeta(&alpha, i), "alpha={alpha} i={i}");
            }
        }
    }

    #[test]
    fn ts_small_pairs() {
        let x = MonomialGeometry::power(1).unwrap();
        assert!(ts_check(&x, &x, 10).passed());
        let x2 = MonomialGeometry::power(2).unwrap();
        let y3 = MonomialGeometry::power(3).unwrap();
        assert!(ts_check(&x2, &x2, 10).passed());
        assert!(ts_check(&x2, &y3, 12).passed());
    }
}
