//! Buchberger's algorithm on sorted term lists, for ideals and for
//! submodules of free modules.
//!
//! Two scheduling modes share the same pair bookkeeping
//! (Gebauer–Möller update with the chain criterion, plus the coprime
//! criterion for ideals):
//!
//! * homogeneous: all pairs and inputs of one degree are handled before the
//!   next degree starts. Inputs come after the pairs of their degree, so an
//!   input with nonzero remainder is a minimal generator. With a component
//!   split, pairs among pure syzygy elements come first inside each degree,
//!   and every other element whose leading term lies in the syzygy block is a
//!   minimal syzygy.
//! * sugar: one pair at a time by smallest sugar degree; used for affine input.

use std::cmp::Ordering;

use crate::field::Field;
use crate::monomial::{Monomial, TermOrder};
use crate::terms::{self, Term, Terms};

#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub order: TermOrder,
    /// Variable weights for degrees; `None` means standard grading.
    pub weights: Option<Vec<u32>>,
    /// Degree of each free-module generator (missing entries count as zero).
    pub shifts: Vec<i64>,
    pub homogeneous: bool,
    /// Components `>= split` form the syzygy block.
    pub split: Option<u32>,
    /// Stop once the next degree to process exceeds this bound.
    pub max_degree: Option<i64>,
    /// Coprime-leading-term criterion; only sound for ideals.
    pub product_criterion: bool,
}

impl EngineConfig {
    pub fn new(order: TermOrder) -> Self {
        EngineConfig {
            order,
            weights: None,
            shifts: Vec::new(),
            homogeneous: false,
            split: None,
            max_degree: None,
            product_criterion: false,
        }
    }

    pub fn term_degree(&self, m: &Monomial) -> i64 {
        let base = match &self.weights {
            Some(w) => m.weighted_degree(w),
            None => m.degree() as i64,
        };
        base + self.shifts.get(m.comp() as usize).copied().unwrap_or(0)
    }

    fn mono_degree(&self, m: &Monomial) -> i64 {
        match &self.weights {
            Some(w) => m.weighted_degree(w),
            None => m.degree() as i64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Input(usize),
    Pair { pure: bool },
}

#[derive(Clone, Debug)]
pub struct Element<E> {
    pub terms: Terms<E>,
    /// Homogeneous degree, or sugar degree in sugar mode.
    pub degree: i64,
    pub origin: Origin,
    mask: u64,
    /// Leading term divisible by a later element's; no new pairs.
    retired: bool,
}

impl<E> Element<E> {
    pub fn lead(&self) -> &Monomial {
        &self.terms[0].mon
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: i64,
    pure: bool,
}

pub struct Engine<'a, F: Field> {
    field: &'a F,
    cfg: EngineConfig,
    elems: Vec<Element<F::Elem>>,
    pairs: Vec<Pair>,
    scratch: Terms<F::Elem>,
    reductions: usize,
}

impl<'a, F: Field> Engine<'a, F> {
    pub fn new(field: &'a F, cfg: EngineConfig) -> Self {
        Engine { field, cfg, elems: Vec::new(), pairs: Vec::new(), scratch: Vec::new(), reductions: 0 }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.cfg
    }

    pub fn elements(&self) -> &[Element<F::Elem>] {
        &self.elems
    }

    pub fn into_elements(self) -> Vec<Element<F::Elem>> {
        self.elems
    }

    fn sugar_of(&self, t: &[Term<F::Elem>]) -> i64 {
        t.iter().map(|t| self.cfg.term_degree(&t.mon)).max().unwrap_or(0)
    }

    /// Runs Buchberger on the inputs; returns the full (unreduced) basis.
    pub fn run(&mut self, inputs: Vec<Terms<F::Elem>>) {
        if self.cfg.homogeneous {
            self.run_homogeneous(inputs);
        } else {
            self.run_sugar(inputs);
        }
    }

    fn run_homogeneous(&mut self, inputs: Vec<Terms<F::Elem>>) {
        let mut queue: Vec<(i64, usize, Terms<F::Elem>)> = inputs
            .into_iter()
            .enumerate()
            .filter(|(_, t)| !t.is_empty())
            .map(|(k, t)| (self.cfg.term_degree(&t[0].mon), k, t))
            .collect();
        queue.sort_by_key(|(d, k, _)| (*d, *k));
        let mut queue = queue.into_iter().peekable();
        loop {
            let pd = self.pairs.iter().map(|p| p.degree).min();
            let id = queue.peek().map(|q| q.0);
            let d = match (pd, id) {
                (None, None) => break,
                (Some(a), None) | (None, Some(a)) => a,
                (Some(a), Some(b)) => a.min(b),
            };
            if self.cfg.max_degree.is_some_and(|m| d > m) {
                break;
            }
            let (mut batch, rest): (Vec<Pair>, Vec<Pair>) =
                std::mem::take(&mut self.pairs).into_iter().partition(|p| p.degree == d);
            self.pairs = rest;
            let order = self.cfg.order.clone();
            batch.sort_by(|a, b| {
                b.pure
                    .cmp(&a.pure)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            });
            for p in batch {
                let s = self.spoly(&p);
                let (r, _) = self.reduce(s, d);
                if !r.is_empty() {
                    self.insert(r, d, Origin::Pair { pure: p.pure });
                }
            }
            while queue.peek().is_some_and(|q| q.0 == d) {
                let (_, k, t) = queue.next().unwrap();
                let (r, _) = self.reduce(t, d);
                if !r.is_empty() {
                    self.insert(r, d, Origin::Input(k));
                }
            }
            log::trace!("degree {d} done: {} elements, {} pairs left", self.elems.len(), self.pairs.len());
        }
        log::debug!("basis with {} elements after {} reductions", self.elems.len(), self.reductions);
    }

    fn run_sugar(&mut self, inputs: Vec<Terms<F::Elem>>) {
        for (k, t) in inputs.into_iter().enumerate() {
            if t.is_empty() {
                continue;
            }
            let s = self.sugar_of(&t);
            let (r, s) = self.reduce(t, s);
            if !r.is_empty() {
                self.insert(r, s, Origin::Input(k));
            }
        }
        while !self.pairs.is_empty() {
            let order = &self.cfg.order;
            let best = (0..self.pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                    pa.degree
                        .cmp(&pb.degree)
                        .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                        .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
                })
                .unwrap();
            let p = self.pairs.swap_remove(best);
            if self.cfg.max_degree.is_some_and(|m| p.degree > m) {
                continue;
            }
            let s = self.spoly(&p);
            let (r, sugar) = self.reduce(s, p.degree);
            if !r.is_empty() {
                self.insert(r, sugar, Origin::Pair { pure: p.pure });
            }
        }
        log::debug!("basis with {} elements after {} reductions", self.elems.len(), self.reductions);
    }

    fn spoly(&mut self, p: &Pair) -> Terms<F::Elem> {
        let (gi, gj) = (&self.elems[p.i], &self.elems[p.j]);
        let qi = gi.lead().quotient_of(&p.lcm).expect("lcm divisible");
        let qj = gj.lead().quotient_of(&p.lcm).expect("lcm divisible");
        let one = self.field.one();
        let a = terms::mul_term(self.field, &gi.terms[1..], &one, &qi);
        let mut out = Vec::new();
        terms::sub_mul_into(self.field, &self.cfg.order, &a, &one, &qj, &gj.terms[1..], &mut out);
        out
    }

    /// Index of the best reducer for `m`, if any.
    fn find_reducer(&self, m: &Monomial) -> Option<usize> {
        let mask = m.divmask();
        let mut best: Option<usize> = None;
        for (k, e) in self.elems.iter().enumerate() {
            if e.mask & !mask != 0 || !e.lead().divides(m) {
                continue;
            }
            match best {
                Some(b) if self.elems[b].terms.len() <= e.terms.len() => {}
                _ => best = Some(k),
            }
        }
        best
    }

    /// Full reduction modulo the current basis. Returns the remainder and its
    /// sugar.
    pub fn reduce(&mut self, mut h: Terms<F::Elem>, mut sugar: i64) -> (Terms<F::Elem>, i64) {
        let mut idx = 0;
        while idx < h.len() {
            let Some(k) = self.find_reducer(&h[idx].mon) else {
                idx += 1;
                continue;
            };
            let g = &self.elems[k];
            let q = g.lead().quotient_of(&h[idx].mon).unwrap();
            if !self.cfg.homogeneous {
                sugar = sugar.max(g.degree + self.cfg.mono_degree(&q));
            }
            let c = h[idx].coef.clone();
            terms::sub_mul_into(self.field, &self.cfg.order, &h, &c, &q, &g.terms, &mut self.scratch);
            std::mem::swap(&mut h, &mut self.scratch);
            self.reductions += 1;
        }
        (h, sugar)
    }

    fn insert(&mut self, mut t: Terms<F::Elem>, degree: i64, origin: Origin) {
        terms::make_monic(self.field, &mut t);
        let mask = t[0].mon.divmask();
        let idx = self.elems.len();
        self.elems.push(Element { terms: t, degree, origin, mask, retired: false });
        self.update_pairs(idx);
    }

    fn pair_degree(&self, i: usize, j: usize, lcm: &Monomial) -> i64 {
        if self.cfg.homogeneous {
            self.cfg.term_degree(lcm)
        } else {
            let (gi, gj) = (&self.elems[i], &self.elems[j]);
            let di = gi.degree + self.cfg.mono_degree(lcm) - self.cfg.mono_degree(gi.lead());
            let dj = gj.degree + self.cfg.mono_degree(lcm) - self.cfg.mono_degree(gj.lead());
            di.max(dj)
        }
    }

    /// Gebauer–Möller update for the newly inserted element `h`.
    fn update_pairs(&mut self, h: usize) {
        let lead_h = self.elems[h].lead().clone();
        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for (g, e) in self.elems[..h].iter().enumerate() {
            if e.retired || e.lead().comp() != lead_h.comp() {
                continue;
            }
            let coprime = self.cfg.product_criterion && e.lead().is_coprime(&lead_h);
            cands.push((g, e.lead().lcm(&lead_h), coprime));
        }
        // criterion M: keep a candidate only if no other candidate's lcm
        // properly divides it; among equal lcms keep one, preferring a coprime one
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for k in 0..cands.len() {
            let (g, ref l, coprime) = cands[k];
            let dominated = cands.iter().enumerate().any(|(k2, (_, l2, c2))| {
                if k2 == k {
                    return false;
                }
                if l2 == l {
                    // equal lcm: a coprime candidate wins, otherwise the first
                    (*c2 && !coprime) || (*c2 == coprime && k2 < k)
                } else {
                    l2.divides(l)
                }
            });
            if !dominated {
                kept.push((g, l.clone(), coprime));
            }
        }
        // chain criterion on old pairs
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if !lead_h.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lead().lcm(&lead_h);
            let lj = elems[p.j].lead().lcm(&lead_h);
            li == p.lcm || lj == p.lcm
        });
        for (g, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            let degree = self.pair_degree(g, h, &lcm);
            let pure = self.cfg.split.is_some_and(|s| lcm.comp() >= s);
            self.pairs.push(Pair { i: g, j: h, lcm, degree, pure });
        }
        for e in self.elems[..h].iter_mut() {
            if !e.retired && lead_h.divides(e.lead()) {
                e.retired = true;
            }
        }
    }
}

/// Interreduces a basis: drops elements with redundant leading terms,
/// tail-reduces the rest, makes them monic and sorts them by ascending
/// leading term.
pub fn reduce_basis<F: Field>(field: &F, order: &TermOrder, basis: Vec<Terms<F::Elem>>) -> Vec<Terms<F::Elem>> {
    let mut basis: Vec<Terms<F::Elem>> = basis.into_iter().filter(|t| !t.is_empty()).collect();
    basis.sort_by(|a, b| order.cmp(&a[0].mon, &b[0].mon));
    let mut minimal: Vec<Terms<F::Elem>> = Vec::new();
    for t in basis {
        if !minimal.iter().any(|m| m[0].mon.divides(&t[0].mon)) {
            minimal.push(t);
        }
    }
    let cfg = EngineConfig::new(order.clone());
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Terms<F::Elem>> =
            minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, t)| t.clone()).collect();
        let mut t = minimal[k].clone();
        terms::make_monic(field, &mut t);
        let head = t[0].clone();
        let tail = reduce_by(field, &cfg, t[1..].to_vec(), &others);
        let mut full = vec![head];
        full.extend(tail);
        out.push(full);
    }
    out
}

/// Full reduction of `h` by an arbitrary list of monic-or-not divisors.
pub fn reduce_by<F: Field>(
    field: &F,
    cfg: &EngineConfig,
    mut h: Terms<F::Elem>,
    divisors: &[Terms<F::Elem>],
) -> Terms<F::Elem> {
    let masks: Vec<u64> = divisors.iter().map(|d| d[0].mon.divmask()).collect();
    let mut scratch = Vec::new();
    let mut idx = 0;
    while idx < h.len() {
        let m = &h[idx].mon;
        let mask = m.divmask();
        let found = divisors
            .iter()
            .enumerate()
            .filter(|(k, d)| masks[*k] & !mask == 0 && d[0].mon.divides(m))
            .min_by(|(_, a), (_, b)| a.len().cmp(&b.len()).then(Ordering::Equal))
            .map(|(k, _)| k);
        let Some(k) = found else {
            idx += 1;
            continue;
        };
        let d = &divisors[k];
        let q = d[0].mon.quotient_of(m).unwrap();
        let c = field.div(&h[idx].coef, &d[0].coef).unwrap();
        terms::sub_mul_into(field, &cfg.order, &h, &c, &q, d, &mut scratch);
        std::mem::swap(&mut h, &mut scratch);
    }
    h
}
