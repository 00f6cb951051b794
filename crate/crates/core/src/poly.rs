//! Polynomial rings over a field and their elements.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder, TermOrder};
use crate::terms::{self, Term, Terms};

struct RingInner<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
    term_order: TermOrder,
}

/// A standard-graded polynomial ring `k[x_1, ..., x_n]` with an active
/// monomial order. Cheap to clone.
pub struct Ring<F: Field> {
    inner: Arc<RingInner<F>>,
}

impl<F: Field> Clone for Ring<F> {
    fn clone(&self) -> Self {
        Ring { inner: Arc::clone(&self.inner) }
    }
}

impl<F: Field> PartialEq for Ring<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.vars == other.inner.vars
                && self.inner.order == other.inner.order)
    }
}

impl<F: Field> fmt::Debug for Ring<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.inner.field.name(), self.inner.vars.join(","))
    }
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => chars.all(|c| c.is_alphanumeric() || c == '_'),
        _ => false,
    }
}

impl<F: Field> Ring<F> {
    pub fn new<S: AsRef<str>>(field: F, vars: &[S]) -> Result<Self> {
        Self::with_order(field, vars, MonomialOrder::GrevLex)
    }

    pub fn with_order<S: AsRef<str>>(field: F, vars: &[S], order: MonomialOrder) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.is_empty() {
            return Err(AlgebraError::InvalidRing("at least one variable is required".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(AlgebraError::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(AlgebraError::VariableCollision(v.clone()));
            }
        }
        match &order {
            MonomialOrder::Block { split } if *split > vars.len() => {
                return Err(AlgebraError::InvalidRing("block split exceeds variable count".into()))
            }
            MonomialOrder::Weighted { weights } if weights.len() != vars.len() => {
                return Err(AlgebraError::InvalidRing("weight vector length mismatch".into()))
            }
            _ => {}
        }
        let term_order = TermOrder::new(order.clone());
        Ok(Ring { inner: Arc::new(RingInner { field, vars, order, term_order }) })
    }

    /// Same variables and field under a different order.
    pub fn reordered(&self, order: MonomialOrder) -> Result<Self> {
        Self::with_order(self.inner.field.clone(), &self.inner.vars, order)
    }

    /// Appends fresh variables at the end.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S], order: MonomialOrder) -> Result<Self> {
        let mut vars = self.inner.vars.clone();
        vars.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Self::with_order(self.inner.field.clone(), &vars, order)
    }

    /// A variable name not yet used, derived from `base`.
    pub fn fresh_var(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.inner.vars.contains(&name) {
            k += 1;
            name = format!("{base}{k}");
        }
        name
    }

    pub fn field(&self) -> &F {
        &self.inner.field
    }

    pub fn vars(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn nvars(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.inner.order
    }

    pub fn term_order(&self) -> &TermOrder {
        &self.inner.term_order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn from_i64(&self, c: i64) -> Polynomial<F> {
        self.constant(self.field().from_i64(c))
    }

    pub fn term(&self, c: F::Elem, m: Monomial) -> Polynomial<F> {
        if self.field().is_zero(&c) {
            return self.zero();
        }
        Polynomial { ring: self.clone(), terms: vec![Term::new(c, m)] }
    }

    /// The monomial with the given exponent vector.
    pub fn monomial(&self, exps: &[u16]) -> Polynomial<F> {
        assert_eq!(exps.len(), self.nvars(), "exponent vector length");
        self.term(self.field().one(), Monomial::from_exponents(exps))
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        self.term(self.field().one(), Monomial::var_power(self.nvars(), i, 1))
    }

    /// Variable by name. Panics if absent; use [`Ring::var_index`] to check.
    pub fn gen(&self, name: &str) -> Polynomial<F> {
        let i = self.var_index(name).unwrap_or_else(|| panic!("no variable `{name}`"));
        self.var(i)
    }

    pub fn vars_polys(&self) -> Vec<Polynomial<F>> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    /// Builds a polynomial from unsorted terms.
    pub fn from_terms(&self, terms: Terms<F::Elem>) -> Polynomial<F> {
        let terms = terms::normalize(self.field(), self.term_order(), terms);
        Polynomial { ring: self.clone(), terms }
    }

    /// Wraps terms already sorted in this ring's order.
    pub(crate) fn from_sorted_terms(&self, terms: Terms<F::Elem>) -> Polynomial<F> {
        debug_assert!(terms::is_sorted(self.term_order(), &terms));
        Polynomial { ring: self.clone(), terms }
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial<F>> {
        crate::parse::parse_polynomial(self, s)
    }

    pub fn parse_many(&self, items: &[&str]) -> Result<Vec<Polynomial<F>>> {
        items.iter().map(|s| self.parse(s)).collect()
    }
}

/// An element of a polynomial ring, kept sorted in the ring's active order.
pub struct Polynomial<F: Field> {
    ring: Ring<F>,
    terms: Terms<F::Elem>,
}

impl<F: Field> Clone for Polynomial<F> {
    fn clone(&self) -> Self {
        Polynomial { ring: self.ring.clone(), terms: self.terms.clone() }
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> std::hash::Hash for Polynomial<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> Polynomial<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<F::Elem>] {
        &self.terms
    }

    pub fn into_terms(self) -> Terms<F::Elem> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mon.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mon.is_one()
    }

    /// Leading term in the ring's active order.
    pub fn leading_term(&self) -> Result<(&F::Elem, &Monomial)> {
        self.terms.first().map(|t| (&t.coef, &t.mon)).ok_or(AlgebraError::ZeroPolynomial)
    }

    /// Leading term under an arbitrary monomial order.
    pub fn leading_term_in(&self, order: &MonomialOrder) -> Result<(&F::Elem, &Monomial)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.mon, &b.mon))
            .map(|t| (&t.coef, &t.mon))
            .ok_or(AlgebraError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mon)
    }

    /// Maximal total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mon.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mon.degree() == t.mon.degree()),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let r = &self.ring;
        Ok(r.from_sorted_terms(terms::add(r.field(), r.term_order(), &self.terms, &other.terms)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let r = &self.ring;
        Ok(r.from_sorted_terms(terms::sub(r.field(), r.term_order(), &self.terms, &other.terms)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let r = &self.ring;
        Ok(r.from_sorted_terms(terms::mul(r.field(), r.term_order(), &self.terms, &other.terms)))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.ring.from_sorted_terms(terms::scale(self.ring.field(), &self.terms, c))
    }

    pub fn neg(&self) -> Self {
        let f = self.ring.field();
        let terms = self.terms.iter().map(|t| Term::new(f.neg(&t.coef), t.mon.clone())).collect();
        self.ring.from_sorted_terms(terms)
    }

    pub fn mul_monomial(&self, c: &F::Elem, m: &Monomial) -> Self {
        self.ring.from_sorted_terms(terms::mul_term(self.ring.field(), &self.terms, c, m))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        let mut t = self.terms.clone();
        terms::make_monic(self.ring.field(), &mut t);
        self.ring.from_sorted_terms(t)
    }

    /// The same polynomial viewed in `ring`, which must have the same
    /// variables and field (typically a different order).
    pub fn in_ring(&self, ring: &Ring<F>) -> Result<Self> {
        if ring.vars() != self.ring.vars() || ring.field() != self.ring.field() {
            return Err(AlgebraError::ContextMismatch);
        }
        Ok(ring.from_sorted_terms(terms::resort::<F>(ring.term_order(), &self.terms)))
    }

    /// Maps variable `i` to variable `positions[i]` of `ring`.
    pub fn embed(&self, ring: &Ring<F>, positions: &[usize]) -> Self {
        let n = ring.nvars();
        let t = self.terms.iter().map(|t| Term::new(t.coef.clone(), t.mon.embed(n, positions))).collect();
        ring.from_terms(t)
    }

    /// Embeds into a ring whose variable list extends ours.
    pub fn embed_prefix(&self, ring: &Ring<F>) -> Self {
        let positions: Vec<usize> = (0..self.ring.nvars()).collect();
        self.embed(ring, &positions)
    }

    /// Substitutes polynomials (all from `target`) for the variables.
    pub fn substitute(&self, target: &Ring<F>, images: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        if images.len() != self.ring.nvars() {
            return Err(AlgebraError::ShapeMismatch("one image per variable is required".into()));
        }
        let mut acc = target.zero();
        for t in &self.terms {
            let mut p = target.constant(t.coef.clone());
            for (i, &e) in t.mon.exponents().iter().enumerate() {
                if e > 0 {
                    p = p.mul(&images[i].pow(e as u32))?;
                }
            }
            acc = acc.add(&p)?;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn divide_exact(&self, d: &Polynomial<F>) -> Result<Option<Polynomial<F>>> {
        self.check(d)?;
        if d.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let r = &self.ring;
        let f = r.field();
        let order = r.term_order();
        let (dc, dm) = (&d.terms[0].coef, &d.terms[0].mon);
        let dinv = f.inv(dc).unwrap();
        let mut rem = self.terms.clone();
        let mut quot: Terms<F::Elem> = Vec::new();
        let mut buf = Vec::new();
        while let Some(lt) = rem.first() {
            let Some(q) = dm.quotient_of(&lt.mon) else {
                return Ok(None);
            };
            let c = f.mul(&lt.coef, &dinv);
            terms::sub_mul_into(f, order, &rem, &c, &q, &d.terms, &mut buf);
            std::mem::swap(&mut rem, &mut buf);
            quot.push(Term::new(c, q));
        }
        Ok(Some(r.from_terms(quot)))
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let t = self.terms.iter().filter(|t| t.mon.degree() == d).cloned().collect();
        self.ring.from_sorted_terms(t)
    }

    pub(crate) fn from_parts(ring: Ring<F>, terms: Terms<F::Elem>) -> Self {
        Polynomial { ring, terms }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<'a, F: Field> std::ops::$tr<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                self.$f(rhs).expect("polynomials from different rings")
            }
        }
    };
}
binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

pub(crate) fn format_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}

/// Writes a term list in canonical form: `coef*mon ± ...`.
pub(crate) fn format_terms<F: Field>(field: &F, vars: &[String], terms: &[Term<F::Elem>]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (k, t) in terms.iter().enumerate() {
        let neg = field.is_negative(&t.coef);
        let abs = if neg { field.neg(&t.coef) } else { t.coef.clone() };
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mon = format_monomial(vars, &t.mon);
        if mon.is_empty() {
            s.push_str(&field.format(&abs));
        } else if field.is_one(&abs) {
            s.push_str(&mon);
        } else {
            s.push_str(&field.format(&abs));
            s.push('*');
            s.push_str(&mon);
        }
    }
    s
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.ring.field(), self.ring.vars(), &self.terms))
    }
}

/// Compares monomials under an order; exposed for the public API.
pub fn compare_monomials(order: &MonomialOrder, a: &Monomial, b: &Monomial) -> Ordering {
    order.cmp(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn ring() -> Ring<Rationals> {
        Ring::new(Rationals, &["x", "y", "z", "t"]).unwrap()
    }

    #[test]
    fn cancellation() {
        let r = ring();
        let a = r.parse("y^2*z - x^2*t").unwrap();
        let b = r.parse("x^2*t").unwrap();
        assert_eq!((&a + &b).to_string(), "y^2*z");
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let p = &r.parse("z - t").unwrap() * &r.parse("z + t").unwrap();
        assert_eq!(p.to_string(), "z^2 - t^2");
    }

    #[test]
    fn square_expansion() {
        let r = ring();
        let p = r.parse("x^4*z^2 - x*y^4*t").unwrap().pow(2);
        assert_eq!(p.len(), 3);
        assert_eq!(p, r.parse("x^8*z^4 - 2*x^5*y^4*z^2*t + x^2*y^8*t^2").unwrap());
    }

    #[test]
    fn leading_terms() {
        let r = ring();
        let p = r.parse("z^4 - x*t^3").unwrap();
        assert_eq!(p.leading_term().unwrap().1, &Monomial::from_exponents(&[0, 0, 4, 0]));
        let c = r.from_i64(5);
        let (coef, mon) = c.leading_term().unwrap();
        assert_eq!(coef, &r.field().from_i64(5));
        assert!(mon.is_one());
        let q = r.parse("y^3*z - x^3*t").unwrap();
        let (coef, mon) = q.leading_term_in(&MonomialOrder::Lex).unwrap();
        assert_eq!(mon, &Monomial::from_exponents(&[3, 0, 0, 1]));
        assert_eq!(coef, &r.field().from_i64(-1));
        assert_eq!(r.zero().leading_term().unwrap_err(), AlgebraError::ZeroPolynomial);
    }

    #[test]
    fn context_mismatch() {
        let a = ring().parse("x").unwrap();
        let other = Ring::new(Rationals, &["x", "y"]).unwrap();
        let b = other.parse("x").unwrap();
        assert_eq!(a.add(&b).unwrap_err(), AlgebraError::ContextMismatch);
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let a = r.parse("x^2 - y^2").unwrap();
        let b = r.parse("x + y").unwrap();
        assert_eq!(a.divide_exact(&b).unwrap().unwrap(), r.parse("x - y").unwrap());
        assert_eq!(r.parse("x^2 + 1").unwrap().divide_exact(&b).unwrap(), None);
    }

    #[test]
    fn prime_field_printing() {
        let r = Ring::new(PrimeField::new(101).unwrap(), &["a", "b"]).unwrap();
        let p = r.parse("a - 100*b + 1/2").unwrap();
        assert_eq!(p.to_string(), "a + b - 50");
    }

    #[test]
    fn ring_validation() {
        assert!(Ring::new(Rationals, &["x", "x"]).is_err());
        assert!(Ring::new(Rationals, &[""]).is_err());
        assert!(Ring::<Rationals>::new(Rationals, &[] as &[&str]).is_err());
    }
}
