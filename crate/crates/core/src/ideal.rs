//! Ideals with cached Gröbner bases, and the standard constructions on them.

use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{self, BasisKind, EngineConfig, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder, TermOrder};
use crate::poly::{Polynomial, Ring};
use crate::terms::Term;

pub struct Ideal<F: Field> {
    ring: Ring<F>,
    gens: Vec<Polynomial<F>>,
    cache: Arc<Mutex<Vec<(MonomialOrder, Arc<GroebnerBasis<F>>)>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache: Arc::clone(&self.cache) }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Ring<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(AlgebraError::ContextMismatch);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, cache: Arc::new(Mutex::new(Vec::new())) })
    }

    pub fn parse(ring: &Ring<F>, gens: &[&str]) -> Result<Self> {
        Self::new(ring, ring.parse_many(gens)?)
    }

    pub fn zero(ring: &Ring<F>) -> Self {
        Self::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Ring<F>) -> Self {
        Self::new(ring, vec![ring.one()]).unwrap()
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &Ring<F>) -> Self {
        Self::new(ring, ring.vars_polys()).unwrap()
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Reduced Gröbner basis in the ring's order (cached).
    pub fn gb(&self) -> Arc<GroebnerBasis<F>> {
        self.gb_in(self.ring.order())
    }

    /// Reduced Gröbner basis in `order` (cached per order).
    pub fn gb_in(&self, order: &MonomialOrder) -> Arc<GroebnerBasis<F>> {
        if let Some((_, gb)) = self.cache.lock().unwrap().iter().find(|(o, _)| o == order) {
            return Arc::clone(gb);
        }
        let gb = Arc::new(groebner::buchberger(&self.ring, &self.gens, order).expect("generators share the ring"));
        self.cache.lock().unwrap().push((order.clone(), Arc::clone(&gb)));
        gb
    }

    /// Installs an externally computed basis (must be a reduced basis of this
    /// ideal in `gb`'s order).
    pub(crate) fn with_basis(self, gb: GroebnerBasis<F>) -> Self {
        self.cache.lock().unwrap().push((gb.order().mono.clone(), Arc::new(gb)));
        self
    }

    /// The ideal generated by its reduced Gröbner basis.
    pub fn canonical(&self) -> Self {
        let gb = self.gb();
        Ideal::new(&self.ring, gb.polynomials().iter().map(|p| p.in_ring(&self.ring).unwrap()).collect())
            .unwrap()
            .with_basis((*gb).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.gb().contains(f)
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.gb().normal_form(f)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        self.check(other)?;
        let gb = self.gb();
        for g in &other.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, decided by comparing reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        self.check(other)?;
        Ok(self.gb().polynomials() == other.gb().polynomials())
    }

    fn check(&self, other: &Ideal<F>) -> Result<()> {
        if self.ring != other.ring {
            Err(AlgebraError::ContextMismatch)
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Self> {
        self.check(other)?;
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn add_generators(&self, extra: &[Polynomial<F>]) -> Result<Self> {
        Ideal::new(&self.ring, self.gens.iter().chain(extra).cloned().collect())
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Self> {
        self.check(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `f · I`.
    pub fn scaled(&self, f: &Polynomial<F>) -> Result<Self> {
        let gens = self.gens.iter().map(|g| g.mul(f)).collect::<Result<_>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating a tag variable `w` from `w·I + (1 - w)·J`.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let tag = self.ring.fresh_var("w");
        let mut names = vec![tag];
        names.extend(self.ring.vars().iter().cloned());
        let big = Ring::with_order(self.ring.field().clone(), &names, MonomialOrder::Block { split: 1 })?;
        let shift: Vec<usize> = (1..=n).collect();
        let w = big.var(0);
        let one_minus_w = &big.one() - &w;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&w * &g.embed(&big, &shift));
        }
        for g in &other.gens {
            gens.push(&one_minus_w * &g.embed(&big, &shift));
        }
        let gb = groebner::buchberger(&big, &gens, big.order())?;
        let keep: Vec<usize> = (1..=n).collect();
        let out = gb
            .polynomials()
            .into_iter()
            .filter(|p| p.terms().iter().all(|t| t.mon.exponents()[0] == 0))
            .map(|p| restrict(&p, &self.ring, &keep))
            .collect();
        Ideal::new(&self.ring, out)
    }

    /// `I : (f)`.
    pub fn quotient_by(&self, f: &Polynomial<F>) -> Result<Self> {
        if f.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if f.is_unit() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            gens.push(g.divide_exact(f)?.expect("elements of (f) are multiples of f"));
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I : J`, the intersection of the colons by the generators of `J`.
    pub fn quotient(&self, other: &Ideal<F>) -> Result<Self> {
        self.check(other)?;
        if other.is_zero() {
            return Err(AlgebraError::ZeroIdeal);
        }
        let mut acc: Option<Ideal<F>> = None;
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// `I : J^∞` by iterating the colon until it stabilises; also returns the
    /// number of colon steps that enlarged the ideal.
    pub fn saturate(&self, other: &Ideal<F>) -> Result<(Self, usize)> {
        let mut cur = self.canonical();
        let mut steps = 0;
        loop {
            let next = cur.quotient(other)?.canonical();
            if cur.contains_ideal(&next)? {
                return Ok((cur, steps));
            }
            steps += 1;
            cur = next;
        }
    }

    pub fn is_saturated(&self, other: &Ideal<F>) -> Result<bool> {
        let (sat, steps) = self.saturate(other)?;
        debug_assert!(steps > 0 || sat.same_ideal(self)?);
        Ok(steps == 0)
    }

    /// `I ∩ k[remaining variables]`, as an ideal of the subring (variables in
    /// their original order).
    pub fn eliminate(&self, vars: &[&str]) -> Result<Self> {
        let mut elim = Vec::new();
        for v in vars {
            let i = self
                .ring
                .var_index(v)
                .ok_or_else(|| AlgebraError::InvalidRing(format!("unknown variable `{v}`")))?;
            if !elim.contains(&i) {
                elim.push(i);
            }
        }
        elim.sort_unstable();
        let keep: Vec<usize> = (0..self.ring.nvars()).filter(|i| !elim.contains(i)).collect();
        let sub_order = match self.ring.order() {
            MonomialOrder::Lex => MonomialOrder::Lex,
            _ => MonomialOrder::GrevLex,
        };
        let sub_names: Vec<&str> = keep.iter().map(|&i| self.ring.vars()[i].as_str()).collect();
        let sub = Ring::with_order(self.ring.field().clone(), &sub_names, sub_order)?;
        if elim.is_empty() {
            let gens = self.gens.iter().map(|g| restrict(g, &sub, &keep)).collect();
            return Ideal::new(&sub, gens);
        }
        let gb = elimination_basis(&self.ring, &self.gens, &elim, None)?;
        let out = gb
            .into_iter()
            .filter(|p| p.terms().iter().all(|t| elim.iter().all(|&i| t.mon.exponents()[i] == 0)))
            .map(|p| restrict(&p, &sub, &keep))
            .collect();
        Ideal::new(&sub, out)
    }

    /// Whether `f^k ∈ I` for some `k`, via `1 ∈ I + (1 - y f)`.
    pub fn radical_contains(&self, f: &Polynomial<F>) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(AlgebraError::ContextMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        let y = self.ring.fresh_var("y");
        let big = self.ring.extended(&[y], MonomialOrder::GrevLex)?;
        let yv = big.var(self.ring.nvars());
        let mut gens: Vec<Polynomial<F>> = self.gens.iter().map(|g| g.embed_prefix(&big)).collect();
        gens.push(&big.one() - &(&yv * &f.embed_prefix(&big)));
        Ok(groebner::buchberger(&big, &gens, big.order())?.is_unit())
    }

    /// `√I = √J`, certified by mutual radical membership of generators.
    pub fn same_radical(&self, other: &Ideal<F>) -> Result<bool> {
        self.check(other)?;
        for g in &self.gens {
            if !other.radical_contains(g)? {
                return Ok(false);
            }
        }
        for g in &other.gens {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `f` is a nonzerodivisor on `R/I`, i.e. `I : f = I`.
    pub fn is_nonzerodivisor(&self, f: &Polynomial<F>) -> Result<bool> {
        if f.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let q = self.quotient_by(f)?;
        self.contains_ideal(&q)
    }

    /// Homogenization with respect to a new last variable, applied to a
    /// degree-compatible Gröbner basis. Lives in the extended ring.
    pub fn homogenize(&self, var: &str) -> Result<Self> {
        if self.ring.var_index(var).is_some() {
            return Err(AlgebraError::VariableCollision(var.to_string()));
        }
        let big = self.ring.extended(&[var], MonomialOrder::GrevLex)?;
        let gb = self.gb_in(&MonomialOrder::GrevLex);
        let gens = gb.polynomials().iter().map(|p| homogenize_poly(p, &big)).collect();
        Ideal::new(&big, gens)
    }

    /// Minimal homogeneous generators, selected from the given generators
    /// (in the order the degree-by-degree engine accepts them).
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial<F>>> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous(self.to_string()));
        }
        let mut gens = self.gens.clone();
        gens.sort_by_key(|g| g.degree().unwrap());
        let inputs = gens.iter().map(|g| g.terms().to_vec()).collect();
        let idx = groebner::minimal_input_indices(self.ring.field(), self.ring.term_order(), &BasisKind::Ideal, inputs);
        Ok(idx.into_iter().map(|k| gens[k].clone()).collect())
    }

    /// The ideal generated by the elements of degree `< d` (for homogeneous
    /// ideals: by the basis elements of degree `< d`).
    pub fn below_degree(&self, d: u32) -> Result<Self> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous(self.to_string()));
        }
        let gb = self.gb_in(&MonomialOrder::GrevLex);
        let gens = gb
            .polynomials()
            .into_iter()
            .filter(|p| p.degree().unwrap() < d)
            .map(|p| p.in_ring(&self.ring))
            .collect::<Result<_>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// Whether homogeneous `f ∈ I` is not generated by elements of lower degree.
    pub fn is_minimal_generator(&self, f: &Polynomial<F>) -> Result<bool> {
        if !f.is_homogeneous() || f.is_zero() {
            return Err(AlgebraError::NotHomogeneous(f.to_string()));
        }
        if !self.contains(f)? {
            return Err(AlgebraError::NotInIdeal);
        }
        Ok(!self.below_degree(f.degree().unwrap())?.contains(f)?)
    }

    /// Generator degrees of a minimal generating set.
    pub fn generator_degrees(&self) -> Result<Vec<u32>> {
        Ok(self.minimal_generators()?.iter().map(|g| g.degree().unwrap()).collect())
    }
}

/// Reads a polynomial whose variables all lie in `keep` into `sub`.
fn restrict<F: Field>(p: &Polynomial<F>, sub: &Ring<F>, keep: &[usize]) -> Polynomial<F> {
    let terms = p.terms().iter().map(|t| Term::new(t.coef.clone(), t.mon.without_vars(keep))).collect();
    sub.from_terms(terms)
}

fn homogenize_poly<F: Field>(p: &Polynomial<F>, big: &Ring<F>) -> Polynomial<F> {
    let d = p.terms().iter().map(|t| t.mon.degree()).max().unwrap_or(0);
    let n = big.nvars();
    let terms = p
        .terms()
        .iter()
        .map(|t| {
            let mut e = t.mon.exponents().to_vec();
            e.push((d - t.mon.degree()) as u16);
            debug_assert_eq!(e.len(), n);
            Term::new(t.coef.clone(), Monomial::from_exponents(&e))
        })
        .collect();
    big.from_terms(terms)
}

/// Gröbner basis (as polynomials of `ring`) in an order eliminating the
/// variables `elim`; optional weights make the input homogeneous so the
/// degree-by-degree strategy applies.
pub(crate) fn elimination_basis<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F>],
    elim: &[usize],
    weights: Option<Vec<u32>>,
) -> Result<Vec<Polynomial<F>>> {
    let n = ring.nvars();
    let mut perm: Vec<usize> = elim.to_vec();
    perm.extend((0..n).filter(|i| !elim.contains(i)));
    // position of original variable i in the permuted ring
    let mut pos = vec![0; n];
    for (k, &i) in perm.iter().enumerate() {
        pos[i] = k;
    }
    let names: Vec<&str> = perm.iter().map(|&i| ring.vars()[i].as_str()).collect();
    let big = Ring::with_order(ring.field().clone(), &names, MonomialOrder::Block { split: elim.len() })?;
    let inputs: Vec<_> = gens.iter().map(|g| g.embed(&big, &pos).into_terms()).collect();
    let gb = match weights {
        None => groebner::buchberger(&big, &gens.iter().map(|g| g.embed(&big, &pos)).collect::<Vec<_>>(), big.order())?,
        Some(w) => {
            let permuted: Vec<u32> = perm.iter().map(|&i| w[i]).collect();
            let mut cfg = EngineConfig::new(TermOrder::new(big.order().clone()));
            cfg.weights = Some(permuted);
            cfg.product_criterion = true;
            cfg.homogeneous = true;
            groebner::compute_basis_with(&big, cfg, BasisKind::Ideal, inputs)
        }
    };
    Ok(gb.polynomials().iter().map(|p| p.embed(ring, &perm)).collect())
}

/// The ideal of `t × t` minors of a matrix given by rows.
pub fn minors_ideal<F: Field>(ring: &Ring<F>, rows: &[Vec<Polynomial<F>>], t: usize) -> Result<Ideal<F>> {
    let minors = crate::matrix::minors_of_rows(ring, rows, t)?;
    Ideal::new(ring, minors)
}

/// Ideal of the projective monomial curve `(1 : w^{a_1} : ... : w^{a_n})` in
/// a ring with `n + 1` variables, by eliminating `s, w` from
/// `x_0 - s^{a_n}`, `x_i - s^{a_n - a_i} w^{a_i}` (weighted-homogeneous, so the
/// elimination runs degree by degree).
pub fn monomial_curve_ideal<F: Field>(ring: &Ring<F>, degrees: &[u32]) -> Result<Ideal<F>> {
    if degrees.is_empty() || degrees.windows(2).any(|w| w[0] >= w[1]) || degrees[0] == 0 {
        return Err(AlgebraError::ParameterViolation("curve degrees must be positive and increasing".into()));
    }
    if ring.nvars() != degrees.len() + 1 {
        return Err(AlgebraError::ShapeMismatch(format!("need {} variables", degrees.len() + 1)));
    }
    let top = *degrees.last().unwrap();
    let mut exps = vec![(top, 0)];
    exps.extend(degrees.iter().map(|&a| (top - a, a)));
    toric_kernel(ring, &exps)
}

/// Kernel of `x_i ↦ s^{p_i} w^{q_i}` for the given exponent pairs.
pub(crate) fn toric_kernel<F: Field>(ring: &Ring<F>, exps: &[(u32, u32)]) -> Result<Ideal<F>> {
    let n = ring.nvars();
    if exps.len() != n {
        return Err(AlgebraError::ShapeMismatch("one exponent pair per variable".into()));
    }
    let s = ring.fresh_var("s");
    let w = ring.fresh_var("w");
    let big = ring.extended(&[s.as_str(), w.as_str()], MonomialOrder::GrevLex)?;
    let mut gens = Vec::with_capacity(n);
    for (i, &(p, q)) in exps.iter().enumerate() {
        let mut e = vec![0u16; n + 2];
        e[n] = p as u16;
        e[n + 1] = q as u16;
        gens.push(&big.var(i) - &big.monomial(&e));
    }
    let mut weights: Vec<u32> = exps.iter().map(|&(p, q)| p + q).collect();
    weights.extend([1, 1]);
    let basis = elimination_basis(&big, &gens, &[n, n + 1], Some(weights))?;
    let keep: Vec<usize> = (0..n).collect();
    let out = basis
        .into_iter()
        .filter(|p| p.terms().iter().all(|t| t.mon.exponents()[n] == 0 && t.mon.exponents()[n + 1] == 0))
        .map(|p| restrict(&p, ring, &keep))
        .collect();
    Ideal::new(ring, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn ring() -> Ring<Rationals> {
        Ring::new(Rationals, &["x", "y", "z", "t"]).unwrap()
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let r = ring();
        let a = Ideal::parse(&r, &["x"]).unwrap();
        let b = Ideal::parse(&r, &["y"]).unwrap();
        let want = Ideal::parse(&r, &["x*y"]).unwrap();
        assert!(a.intersect(&b).unwrap().same_ideal(&want).unwrap());
        let unit = Ideal::unit(&r);
        assert!(a.intersect(&unit).unwrap().same_ideal(&a).unwrap());
    }

    #[test]
    fn colon_and_saturation() {
        let r = ring();
        let i = Ideal::parse(&r, &["x^2*y", "x*y^2"]).unwrap();
        let q = i.quotient(&Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        assert!(q.same_ideal(&Ideal::parse(&r, &["x*y", "y^2"]).unwrap()).unwrap());
        let (sat, steps) = i.saturate(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap();
        assert!(sat.same_ideal(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap());
        assert_eq!(steps, 1);
        let (same, _) = i.saturate(&i).unwrap();
        assert!(same.is_unit());
    }

    #[test]
    fn cusp_elimination() {
        let r = Ring::new(Rationals, &["a", "x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x - a^2", "y - a^3"]).unwrap();
        let e = i.eliminate(&["a"]).unwrap();
        assert_eq!(e.ring().vars(), &["x".to_string(), "y".to_string()]);
        assert!(e.same_ideal(&Ideal::parse(e.ring(), &["x^3 - y^2"]).unwrap()).unwrap());
        let trivial = Ideal::parse(&r, &["a - 1"]).unwrap().eliminate(&["a"]).unwrap();
        assert!(trivial.is_zero() || trivial.gb().is_empty());
    }

    #[test]
    fn radical_membership_basics() {
        let r = ring();
        let f = r.parse("x*y - z^2").unwrap();
        let sq = Ideal::new(&r, vec![f.pow(2)]).unwrap();
        assert!(sq.radical_contains(&f).unwrap());
        let y = Ideal::parse(&r, &["y"]).unwrap();
        assert!(!y.radical_contains(&r.parse("x").unwrap()).unwrap());
        let a = Ideal::parse(&r, &["x"]).unwrap();
        let b = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(a.same_radical(&b).unwrap());
    }

    #[test]
    fn homogenize_single_generator() {
        let r = Ring::new(Rationals, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^3 - y^2"]).unwrap();
        let h = i.homogenize("h").unwrap();
        assert_eq!(h.gens(), &[h.ring().parse("x^3 - y^2*h").unwrap()]);
        assert!(i.homogenize("x").is_err());
    }

    #[test]
    fn twisted_cubic_matches_minors() {
        let r = ring();
        let c = monomial_curve_ideal(&r, &[1, 2, 3]).unwrap();
        let rows = vec![r.parse_many(&["x", "y", "z"]).unwrap(), r.parse_many(&["y", "z", "t"]).unwrap()];
        let m = minors_ideal(&r, &rows, 2).unwrap();
        assert!(c.same_ideal(&m).unwrap());
        assert_eq!(c.generator_degrees().unwrap(), vec![2, 2, 2]);
    }

    #[test]
    fn minimal_generators_drop_redundancy() {
        let r = ring();
        let i = Ideal::parse(&r, &["x*y", "x^2*y", "z^2", "x*y + z^2"]).unwrap();
        assert_eq!(i.generator_degrees().unwrap(), vec![2, 2]);
        let g = r.parse("x*y").unwrap();
        assert!(i.is_minimal_generator(&g).unwrap());
        assert!(!i.is_minimal_generator(&(&r.parse("x").unwrap() * &g)).unwrap());
        assert!(i.is_minimal_generator(&r.parse("x").unwrap()).is_err());
    }

    #[test]
    fn nonzerodivisors() {
        let r = ring();
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        assert!(!i.is_nonzerodivisor(&r.parse("x").unwrap()).unwrap());
        assert!(i.is_nonzerodivisor(&r.parse("z").unwrap()).unwrap());
        assert!(i.is_nonzerodivisor(&r.one()).unwrap());
    }
}
