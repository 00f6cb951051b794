//! Sorted term lists: the shared representation of polynomials and of
//! vectors in free modules. Every list is sorted strictly descending in a
//! [`TermOrder`] and holds no zero coefficients.

use std::cmp::Ordering;

use crate::field::Field;
use crate::monomial::{Monomial, TermOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<E> {
    pub coef: E,
    pub mon: Monomial,
}

impl<E> Term<E> {
    pub fn new(coef: E, mon: Monomial) -> Self {
        Term { coef, mon }
    }
}

pub type Terms<E> = Vec<Term<E>>;

/// Sorts and combines an arbitrary list of terms.
pub fn normalize<F: Field>(field: &F, order: &TermOrder, mut terms: Terms<F::Elem>) -> Terms<F::Elem> {
    terms.sort_by(|a, b| order.cmp(&b.mon, &a.mon));
    let mut out: Terms<F::Elem> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.mon == t.mon => last.coef = field.add(&last.coef, &t.coef),
            _ => {
                if let Some(last) = out.last() {
                    if field.is_zero(&last.coef) {
                        out.pop();
                    }
                }
                out.push(t);
            }
        }
    }
    if let Some(last) = out.last() {
        if field.is_zero(&last.coef) {
            out.pop();
        }
    }
    out
}

/// `a + b`
pub fn add<F: Field>(field: &F, order: &TermOrder, a: &[Term<F::Elem>], b: &[Term<F::Elem>]) -> Terms<F::Elem> {
    combine(field, order, a, b, None::<&F::Elem>, false)
}

/// `a - b`
pub fn sub<F: Field>(field: &F, order: &TermOrder, a: &[Term<F::Elem>], b: &[Term<F::Elem>]) -> Terms<F::Elem> {
    combine(field, order, a, b, None::<&F::Elem>, true)
}

/// `a + s*b` (or `a - s*b` when `negate`) by merging.
fn combine<F: Field>(
    field: &F,
    order: &TermOrder,
    a: &[Term<F::Elem>],
    b: &[Term<F::Elem>],
    s: Option<&F::Elem>,
    negate: bool,
) -> Terms<F::Elem> {
    let scale = |c: &F::Elem| -> F::Elem {
        let c = match s {
            Some(s) => field.mul(s, c),
            None => c.clone(),
        };
        if negate {
            field.neg(&c)
        } else {
            c
        }
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].mon, &b[j].mon) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term::new(scale(&b[j].coef), b[j].mon.clone()));
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].coef, &scale(&b[j].coef));
                if !field.is_zero(&c) {
                    out.push(Term::new(c, a[i].mon.clone()));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push(Term::new(scale(&t.coef), t.mon.clone()));
    }
    out
}

/// `c * m * a`; the order is preserved because term orders are multiplicative.
pub fn mul_term<F: Field>(field: &F, a: &[Term<F::Elem>], c: &F::Elem, m: &Monomial) -> Terms<F::Elem> {
    if field.is_zero(c) {
        return Vec::new();
    }
    a.iter().map(|t| Term::new(field.mul(c, &t.coef), m.mul(&t.mon))).collect()
}

pub fn scale<F: Field>(field: &F, a: &[Term<F::Elem>], c: &F::Elem) -> Terms<F::Elem> {
    if field.is_zero(c) {
        return Vec::new();
    }
    a.iter().map(|t| Term::new(field.mul(c, &t.coef), t.mon.clone())).collect()
}

/// `a - c*m*b` in one merge pass, writing into `out` (cleared first).
pub fn sub_mul_into<F: Field>(
    field: &F,
    order: &TermOrder,
    a: &[Term<F::Elem>],
    c: &F::Elem,
    m: &Monomial,
    b: &[Term<F::Elem>],
    out: &mut Terms<F::Elem>,
) {
    out.clear();
    out.reserve(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bm = b.first().map(|t| m.mul(&t.mon));
    while i < a.len() && j < b.len() {
        let cur = bm.as_ref().unwrap();
        match order.cmp(&a[i].mon, cur) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term::new(field.neg(&field.mul(c, &b[j].coef)), bm.take().unwrap()));
                j += 1;
                bm = b.get(j).map(|t| m.mul(&t.mon));
            }
            Ordering::Equal => {
                let mut v = a[i].coef.clone();
                field.sub_mul_assign(&mut v, c, &b[j].coef);
                if !field.is_zero(&v) {
                    out.push(Term::new(v, bm.take().unwrap()));
                }
                i += 1;
                j += 1;
                bm = b.get(j).map(|t| m.mul(&t.mon));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    if j < b.len() {
        out.push(Term::new(field.neg(&field.mul(c, &b[j].coef)), bm.take().unwrap()));
        for t in &b[j + 1..] {
            out.push(Term::new(field.neg(&field.mul(c, &t.coef)), m.mul(&t.mon)));
        }
    }
}

/// Product of two term lists (at most one of them may carry components).
pub fn mul<F: Field>(field: &F, order: &TermOrder, a: &[Term<F::Elem>], b: &[Term<F::Elem>]) -> Terms<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut acc: Terms<F::Elem> = Vec::new();
    for t in short {
        let part = mul_term(field, long, &t.coef, &t.mon);
        acc = add(field, order, &acc, &part);
    }
    acc
}

/// Makes the leading coefficient one.
pub fn make_monic<F: Field>(field: &F, a: &mut [Term<F::Elem>]) {
    if let Some(first) = a.first() {
        if field.is_one(&first.coef) {
            return;
        }
        let inv = field.inv(&first.coef).expect("nonzero leading coefficient");
        for t in a.iter_mut() {
            t.coef = field.mul(&inv, &t.coef);
        }
    }
}

/// Re-sorts terms for another order.
pub fn resort<F: Field>(order: &TermOrder, a: &[Term<F::Elem>]) -> Terms<F::Elem> {
    let mut v = a.to_vec();
    v.sort_by(|x, y| order.cmp(&y.mon, &x.mon));
    v
}

pub fn is_sorted<E>(order: &TermOrder, a: &[Term<E>]) -> bool {
    a.windows(2).all(|w| order.cmp(&w[0].mon, &w[1].mon) == Ordering::Greater)
}
