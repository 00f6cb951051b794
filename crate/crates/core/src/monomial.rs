//! Exponent vectors, monomial orders and their extension to free modules.
//!
//! A [`Monomial`] also carries a component index so that the same type
//! describes terms of polynomials (component 0) and of vectors in a free
//! module `R^r`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 8]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exponents,
    deg: u32,
    comp: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), deg: 0, comp: 0 }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), deg, comp: 0 }
    }

    /// `x_var^power` in a ring with `nvars` variables.
    pub fn var_power(nvars: usize, var: usize, power: u16) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[var] = power;
        m.deg = power as u32;
        m
    }

    pub fn with_comp(mut self, comp: u32) -> Self {
        self.comp = comp;
        self
    }

    pub fn set_comp(&mut self, comp: u32) {
        self.comp = comp;
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Total (standard) degree.
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> i64 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum()
    }

    pub fn comp(&self) -> u32 {
        self.comp
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Product; components add, so a ring monomial times a module monomial keeps
    /// the module component.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { exps, deg: self.deg + other.deg, comp: self.comp + other.comp }
    }

    /// `self | other`: same component and componentwise `<=`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.comp == other.comp
            && self.deg <= other.deg
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` as a ring monomial, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exponents = other.exps.iter().zip(&self.exps).map(|(&b, &a)| b - a).collect();
        Some(Monomial { exps, deg: other.deg - self.deg, comp: 0 })
    }

    /// Least common multiple; components must agree.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.comp, other.comp);
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg, comp: self.comp }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg, comp: 0 }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit signature with `a | b => mask(a) & !mask(b) == 0`.
    pub fn divmask(&self) -> u64 {
        let n = self.exps.len().max(1);
        let per = (64 / n).clamp(1, 16);
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate().take(64) {
            let base = (i * per) % 64;
            for t in 0..per.min(e as usize) {
                mask |= 1 << ((base + t) % 64);
            }
        }
        mask
    }

    /// Drops the variables `[start, start+count)`; used after elimination.
    pub fn without_vars(&self, keep: &[usize]) -> Monomial {
        let exps: Exponents = keep.iter().map(|&i| self.exps[i]).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg, comp: self.comp }
    }

    /// Re-embeds into a ring with `nvars` variables; `positions[i]` is the new
    /// index of old variable `i`.
    pub fn embed(&self, nvars: usize, positions: &[usize]) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            exps[positions[i]] = e;
        }
        Monomial { exps, deg: self.deg, comp: self.comp }
    }
}

/// Orders on the monomials of the ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Product of two graded reverse-lex orders: variables `[0, split)` form the
    /// first block and dominate. An elimination order for the first block.
    Block { split: usize },
    /// Weighted degree first, ties broken by graded reverse lex.
    Weighted { weights: Vec<u32> },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::GrevLex
    }
}

fn grevlex_slices(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

fn revlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Compares exponent vectors only (components ignored).
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => a.deg.cmp(&b.deg).then_with(|| revlex_tail(&a.exps, &b.exps)),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block { split } => {
                let s = (*split).min(a.exps.len());
                grevlex_slices(&a.exps[..s], &b.exps[..s])
                    .then_with(|| grevlex_slices(&a.exps[s..], &b.exps[s..]))
            }
            MonomialOrder::Weighted { weights } => a
                .weighted_degree(weights)
                .cmp(&b.weighted_degree(weights))
                .then_with(|| a.deg.cmp(&b.deg))
                .then_with(|| revlex_tail(&a.exps, &b.exps)),
        }
    }

    /// Whether every monomial of larger total degree is larger.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }

    pub fn parse(s: &str) -> Option<MonomialOrder> {
        match s {
            "grevlex" => Some(MonomialOrder::GrevLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }
}

/// How the ring order extends to terms `m * e_i` of a free module.
/// Lower component indices rank higher.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Term over position.
    Top,
    /// Position over term.
    Pot,
    /// Components below `split` dominate all others; term over position
    /// inside each block. Eliminates the first block of components.
    BlockTop { split: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    pub mono: MonomialOrder,
    pub module: ModuleOrder,
}

impl TermOrder {
    pub fn new(mono: MonomialOrder) -> Self {
        TermOrder { mono, module: ModuleOrder::Top }
    }

    pub fn with_module(mono: MonomialOrder, module: ModuleOrder) -> Self {
        TermOrder { mono, module }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let pos = || b.comp.cmp(&a.comp);
        match &self.module {
            ModuleOrder::Top => self.mono.cmp(a, b).then_with(pos),
            ModuleOrder::Pot => pos().then_with(|| self.mono.cmp(a, b)),
            ModuleOrder::BlockTop { split } => {
                let ba = a.comp >= *split;
                let bb = b.comp >= *split;
                bb.cmp(&ba).then_with(|| self.mono.cmp(a, b)).then_with(pos)
            }
        }
    }
}
