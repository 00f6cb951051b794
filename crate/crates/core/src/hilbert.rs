//! Hilbert series `numerator / (1-t)^n` of graded quotients, from leading-term
//! ideals (pivot recursion) or from free resolutions.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{BasisKind, GroebnerBasis};
use crate::ideal::Ideal;
use crate::monomial::{Monomial, MonomialOrder};

/// A Laurent polynomial numerator over `(1-t)^nvars`, stored unreduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HilbertSeries {
    nvars: usize,
    /// Exponent of the first coefficient.
    offset: i64,
    coeffs: Vec<i64>,
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl HilbertSeries {
    pub fn new(nvars: usize, offset: i64, coeffs: Vec<i64>) -> Self {
        let mut s = HilbertSeries { nvars, offset, coeffs };
        s.trim();
        s
    }

    pub fn zero(nvars: usize) -> Self {
        HilbertSeries { nvars, offset: 0, coeffs: Vec::new() }
    }

    /// The series of the free module `⊕ R(-d_i)`.
    pub fn free(nvars: usize, twists: &[i64]) -> Self {
        let mut s = Self::zero(nvars);
        for &d in twists {
            s = s.add(&Self::new(nvars, d, vec![1]));
        }
        s
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.offset = 0;
        } else {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(exponent, coefficient)` pairs of the numerator, ascending.
    pub fn numerator(&self) -> Vec<(i64, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (self.offset + k as i64, c))
            .collect()
    }

    pub fn coefficient(&self, e: i64) -> i64 {
        let k = e - self.offset;
        if k < 0 {
            0
        } else {
            self.coeffs.get(k as usize).copied().unwrap_or(0)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "series over different rings");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(other.offset);
        let hi = (self.offset + self.coeffs.len() as i64).max(other.offset + other.coeffs.len() as i64);
        let coeffs = (lo..hi).map(|e| self.coefficient(e) + other.coefficient(e)).collect();
        Self::new(self.nvars, lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        HilbertSeries { nvars: self.nvars, offset: self.offset, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiplies by `t^d` (the series of `M(-d)`).
    pub fn shift(&self, d: i64) -> Self {
        let mut s = self.clone();
        if !s.is_zero() {
            s.offset += d;
        }
        s
    }

    /// Numerator with all factors `(1-t)` cancelled, and the remaining
    /// denominator exponent (the Krull dimension; `-1` for the zero module).
    pub fn reduced(&self) -> (i64, Vec<i64>, i64) {
        if self.is_zero() {
            return (0, Vec::new(), -1);
        }
        let mut c = self.coeffs.clone();
        let mut dim = self.nvars as i64;
        while dim > 0 && c.iter().sum::<i64>() == 0 {
            // p = (1 - t) q  ⇒  q_k = p_0 + ... + p_k
            let mut acc = 0;
            for x in c.iter_mut() {
                acc += *x;
                *x = acc;
            }
            while c.last() == Some(&0) {
                c.pop();
            }
            dim -= 1;
        }
        (self.offset, c, dim)
    }

    pub fn dimension(&self) -> i64 {
        self.reduced().2
    }

    /// Multiplicity: the reduced numerator at `t = 1`.
    pub fn degree(&self) -> i64 {
        self.reduced().1.iter().sum()
    }

    /// Coefficient of `t^d` in the power series expansion.
    pub fn hilbert_function(&self, d: i64) -> i64 {
        let n = self.nvars as i128;
        let mut acc: i128 = 0;
        for (k, &c) in self.coeffs.iter().enumerate() {
            let e = self.offset + k as i64;
            if d < e || c == 0 {
                continue;
            }
            let m = (d - e) as i128;
            acc += c as i128 * if n == 0 { (m == 0) as i128 } else { binomial(m + n - 1, n - 1) };
        }
        acc as i64
    }

    pub fn numerator_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.numerator().into_iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let mon = match e {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{e}"),
            };
            if mon.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&mon);
            } else {
                out.push_str(&format!("{mag}*{mon}"));
            }
        }
        out
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator_string();
        if self.numerator().len() > 1 {
            write!(f, "({num}) / (1-t)^{}", self.nvars)
        } else {
            write!(f, "{num} / (1-t)^{}", self.nvars)
        }
    }
}

type Exps = Vec<u16>;

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Exps>) -> Vec<Exps> {
    gens.sort_by_key(|g| (g.iter().map(|&e| e as u32).sum::<u32>(), g.clone()));
    gens.dedup();
    let mut out: Vec<Exps> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| divides(m, &g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, &y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

/// Numerator `N` with `HS(R/(gens)) = N / (1-t)^n` for a monomial ideal.
pub struct MonomialNumerator {
    memo: HashMap<Vec<Exps>, Vec<i64>>,
}

impl Default for MonomialNumerator {
    fn default() -> Self {
        Self::new()
    }
}

impl MonomialNumerator {
    pub fn new() -> Self {
        MonomialNumerator { memo: HashMap::new() }
    }

    pub fn numerator(&mut self, gens: &[Exps]) -> Vec<i64> {
        let gens = minimalize(gens.to_vec());
        self.rec(gens)
    }

    fn rec(&mut self, gens: Vec<Exps>) -> Vec<i64> {
        if gens.is_empty() {
            return vec![1];
        }
        if let Some(v) = self.memo.get(&gens) {
            return v.clone();
        }
        let nv = gens[0].len();
        // pairwise coprime generators: a complete intersection
        let mut used = vec![false; nv];
        let mut coprime = true;
        'outer: for g in &gens {
            for (i, &e) in g.iter().enumerate() {
                if e > 0 {
                    if used[i] {
                        coprime = false;
                        break 'outer;
                    }
                    used[i] = true;
                }
            }
        }
        let result = if coprime {
            let mut acc = vec![1i64];
            for g in &gens {
                let d: usize = g.iter().map(|&e| e as usize).sum();
                let mut f = vec![0i64; d + 1];
                f[0] = 1;
                f[d] -= 1;
                acc = poly_mul(&acc, &f);
            }
            acc
        } else {
            // pivot on a power x^e taken from a generator that is not a pure
            // power; then x^e ∉ I and x^e ∤ that generator's cofactor, so both
            // I + (x^e) and I : x^e strictly contain I
            let mixed: Vec<&Exps> = gens.iter().filter(|g| g.iter().filter(|&&e| e > 0).count() > 1).collect();
            let mut counts = vec![0usize; nv];
            for g in &mixed {
                for (i, &e) in g.iter().enumerate() {
                    if e > 0 {
                        counts[i] += 1;
                    }
                }
            }
            let var = (0..nv).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
            let mut exps: Vec<u16> = mixed.iter().map(|g| g[var]).filter(|&e| e > 0).collect();
            exps.sort_unstable();
            let e = exps[(exps.len() - 1) / 2];
            let mut pivot = vec![0u16; nv];
            pivot[var] = e;
            // N(I) = N(I + (p)) + t^e N(I : p)
            let mut plus = gens.clone();
            plus.push(pivot);
            let colon: Vec<Exps> = gens
                .iter()
                .map(|g| {
                    let mut h = g.clone();
                    h[var] = h[var].saturating_sub(e);
                    h
                })
                .collect();
            let mut a = self.rec(minimalize(plus));
            let b = self.rec(minimalize(colon));
            poly_add_shifted(&mut a, &b, e as usize);
            a
        };
        self.memo.insert(gens, result.clone());
        result
    }
}

/// Series of `R/(monomials)`.
pub fn monomial_series(nvars: usize, gens: &[Monomial]) -> HilbertSeries {
    let exps: Vec<Exps> = gens.iter().map(|m| m.exponents().to_vec()).collect();
    HilbertSeries::new(nvars, 0, MonomialNumerator::new().numerator(&exps))
}

/// Series of `F / U` for a module Gröbner basis of `U ⊆ F` (or of `R/I`
/// for an ideal basis): `Σ t^{d_i} HS(R / in(U)_i)`.
pub fn series_of_quotient<F: Field>(gb: &GroebnerBasis<F>) -> HilbertSeries {
    let n = gb.ring().nvars();
    let twists = match gb.kind() {
        BasisKind::Ideal => vec![0],
        BasisKind::Module { twists } => twists.clone(),
    };
    let leads = gb.leading_monomials();
    let mut engine = MonomialNumerator::new();
    let mut total = HilbertSeries::zero(n);
    for (i, &d) in twists.iter().enumerate() {
        let comp: Vec<Exps> = leads.iter().filter(|m| m.comp() as usize == i).map(|m| m.exponents().to_vec()).collect();
        total = total.add(&HilbertSeries::new(n, d, engine.numerator(&comp)));
    }
    total
}

/// Hilbert series of `R/I` for homogeneous `I`.
pub fn hilbert_numerator<F: Field>(ideal: &Ideal<F>) -> Result<HilbertSeries> {
    if !ideal.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous(ideal.to_string()));
    }
    Ok(series_of_quotient(&ideal.gb_in(&MonomialOrder::GrevLex)))
}

/// Krull dimension of `R/I`.
pub fn dimension<F: Field>(ideal: &Ideal<F>) -> Result<i64> {
    Ok(hilbert_numerator(ideal)?.dimension())
}

/// Degree (multiplicity) of `R/I`.
pub fn degree<F: Field>(ideal: &Ideal<F>) -> Result<i64> {
    Ok(hilbert_numerator(ideal)?.degree())
}

/// Codimension of `I` (`nvars + 1` stands for the unit ideal).
pub fn codimension<F: Field>(ideal: &Ideal<F>) -> Result<i64> {
    let n = ideal.ring().nvars() as i64;
    let d = dimension(ideal)?;
    Ok(if d < 0 { n + 1 } else { n - d })
}

/// `dim_k (R/I)_d` from the series.
pub fn hilbert_function<F: Field>(ideal: &Ideal<F>, d: i64) -> Result<i64> {
    Ok(hilbert_numerator(ideal)?.hilbert_function(d))
}

/// `dim_k (R/I)_d` by counting standard monomials of degree `d`.
pub fn hilbert_function_by_count<F: Field>(ideal: &Ideal<F>, d: u32) -> Result<u64> {
    if !ideal.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous(ideal.to_string()));
    }
    let leads = ideal.gb_in(&MonomialOrder::GrevLex).leading_monomials();
    let n = ideal.ring().nvars();
    let mut count = 0u64;
    let mut exps = vec![0u16; n];
    count_standard(&leads, &mut exps, 0, d, &mut count);
    Ok(count)
}

fn count_standard(leads: &[Monomial], exps: &mut Vec<u16>, i: usize, left: u32, count: &mut u64) {
    let n = exps.len();
    if i == n - 1 {
        exps[i] = left as u16;
        if !leads.iter().any(|m| divides(m.exponents(), exps)) {
            *count += 1;
        }
        exps[i] = 0;
        return;
    }
    for e in 0..=left {
        exps[i] = e as u16;
        count_standard(leads, exps, i + 1, left - e, count);
    }
    exps[i] = 0;
}

/// `Σ_j (-1)^j Σ_{d ∈ F_j} t^d` for the twists of a complex of free modules.
pub fn series_from_twists(nvars: usize, modules: &[Vec<i64>]) -> HilbertSeries {
    let mut total = HilbertSeries::zero(nvars);
    for (j, twists) in modules.iter().enumerate() {
        let s = HilbertSeries::free(nvars, twists);
        total = if j % 2 == 0 { total.add(&s) } else { total.sub(&s) };
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::poly::Ring;

    #[test]
    fn free_ring_and_complete_intersection() {
        let r = Ring::new(Rationals, &["x", "y", "z", "t"]).unwrap();
        let zero = Ideal::zero(&r);
        let hs = hilbert_numerator(&zero).unwrap();
        assert_eq!(hs.numerator(), vec![(0, 1)]);
        assert_eq!(hs.to_string(), "1 / (1-t)^4");
        let ci = Ideal::parse(&r, &["y^2*z - x^2*t", "z^4 - x*t^3"]).unwrap();
        let hs = hilbert_numerator(&ci).unwrap();
        // (1 - t^3)(1 - t^4)
        assert_eq!(hs.numerator(), vec![(0, 1), (3, -1), (4, -1), (7, 1)]);
        assert_eq!(hs.dimension(), 2);
        assert_eq!(hs.degree(), 12);
    }

    #[test]
    fn hilbert_function_of_polynomial_ring() {
        let hs = HilbertSeries::new(4, 0, vec![1]);
        for d in 0..10 {
            assert_eq!(hs.hilbert_function(d) as i128, binomial(d as i128 + 3, 3));
        }
        assert_eq!(hs.hilbert_function(-1), 0);
    }

    #[test]
    fn series_agrees_with_count() {
        let r = Ring::new(Rationals, &["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["x^2*y", "y^3*z", "x*z^2", "x*y*z"]).unwrap();
        let hs = hilbert_numerator(&i).unwrap();
        for d in 0..12 {
            assert_eq!(hs.hilbert_function(d), hilbert_function_by_count(&i, d as u32).unwrap() as i64);
        }
    }

    #[test]
    fn laurent_shift_and_display() {
        let s = HilbertSeries::new(2, -1, vec![2, 0, -1]);
        assert_eq!(s.to_string(), "(2*t^-1 - t) / (1-t)^2");
        assert_eq!(s.shift(1).numerator(), vec![(0, 2), (2, -1)]);
        assert_eq!(HilbertSeries::zero(3).to_string(), "0 / (1-t)^3");
        assert_eq!(HilbertSeries::zero(3).dimension(), -1);
    }

    #[test]
    fn resolution_alternating_sum() {
        // Koszul complex on two quadrics in three variables
        let s = series_from_twists(3, &[vec![0], vec![2, 2], vec![4]]);
        assert_eq!(s.numerator(), vec![(0, 1), (2, -2), (4, 1)]);
        assert_eq!(s.dimension(), 1);
        assert_eq!(s.degree(), 4);
    }
}
