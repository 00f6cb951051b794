//! Reduced Gröbner bases of ideals and of submodules of graded free modules.

pub mod engine;

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, ModuleOrder, MonomialOrder, TermOrder};
use crate::poly::{Polynomial, Ring};
use crate::terms::{self, Term, Terms};

pub use engine::{EngineConfig, Origin};

/// A vector in a graded free module `R(-d_1) ⊕ ... ⊕ R(-d_r)`, stored as one
/// polynomial per generator. `twists[i] = d_i` is the degree of generator `i`.
pub struct ModuleElement<F: Field> {
    entries: Vec<Polynomial<F>>,
    twists: Vec<i64>,
}

impl<F: Field> Clone for ModuleElement<F> {
    fn clone(&self) -> Self {
        ModuleElement { entries: self.entries.clone(), twists: self.twists.clone() }
    }
}

impl<F: Field> PartialEq for ModuleElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries && self.twists == other.twists
    }
}

impl<F: Field> fmt::Debug for ModuleElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl<F: Field> ModuleElement<F> {
    pub fn new(entries: Vec<Polynomial<F>>, twists: Vec<i64>) -> Result<Self> {
        if entries.is_empty() || entries.len() != twists.len() {
            return Err(AlgebraError::ShapeMismatch("one twist per entry is required".into()));
        }
        let ring = entries[0].ring().clone();
        if entries.iter().any(|e| *e.ring() != ring) {
            return Err(AlgebraError::ContextMismatch);
        }
        Ok(ModuleElement { entries, twists })
    }

    pub fn ring(&self) -> &Ring<F> {
        self.entries[0].ring()
    }

    pub fn entries(&self) -> &[Polynomial<F>] {
        &self.entries
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Degree when homogeneous: `deg(entry_i) + twist_i` for every nonzero entry.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut deg = None;
        for (e, &tw) in self.entries.iter().zip(&self.twists) {
            if e.is_zero() {
                continue;
            }
            if !e.is_homogeneous() {
                return None;
            }
            let d = e.degree().unwrap() as i64 + tw;
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub(crate) fn to_terms(&self, order: &TermOrder) -> Terms<F::Elem> {
        let mut out = Vec::new();
        for (r, e) in self.entries.iter().enumerate() {
            for t in e.terms() {
                out.push(Term::new(t.coef.clone(), t.mon.clone().with_comp(r as u32)));
            }
        }
        terms::normalize(self.ring().field(), order, out)
    }

    pub(crate) fn from_terms(ring: &Ring<F>, twists: &[i64], t: &[Term<F::Elem>]) -> Self {
        let mut per: Vec<Terms<F::Elem>> = vec![Vec::new(); twists.len()];
        for term in t {
            let c = term.mon.comp() as usize;
            per[c].push(Term::new(term.coef.clone(), term.mon.clone().with_comp(0)));
        }
        let entries = per.into_iter().map(|v| ring.from_terms(v)).collect();
        ModuleElement { entries, twists: twists.to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Ideal,
    Module { twists: Vec<i64> },
}

/// A reduced Gröbner basis together with the order it was computed in.
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    order: TermOrder,
    kind: BasisKind,
    elements: Vec<Terms<F::Elem>>,
}

impl<F: Field> Clone for GroebnerBasis<F> {
    fn clone(&self) -> Self {
        GroebnerBasis {
            ring: self.ring.clone(),
            order: self.order.clone(),
            kind: self.kind.clone(),
            elements: self.elements.clone(),
        }
    }
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.kind == other.kind && self.elements == other.elements
    }
}

impl<F: Field> fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .elements
            .iter()
            .map(|t| match self.kind {
                BasisKind::Ideal => crate::poly::format_terms(self.ring.field(), self.ring.vars(), t),
                BasisKind::Module { ref twists } => {
                    format!("{:?}", ModuleElement::from_terms(&self.ring, twists, t))
                }
            })
            .collect();
        write!(f, "GB{{{}}}", parts.join(", "))
    }
}

fn all_homogeneous<E>(cfg: &EngineConfig, inputs: &[Terms<E>]) -> bool {
    inputs.iter().all(|t| match t.first() {
        None => true,
        Some(first) => {
            let d = cfg.term_degree(&first.mon);
            t.iter().all(|s| cfg.term_degree(&s.mon) == d)
        }
    })
}

/// Runs the engine and interreduces. `ring` must already carry the basis
/// order; `inputs` must be sorted in `order`.
pub(crate) fn compute_basis<F: Field>(
    ring: &Ring<F>,
    order: &TermOrder,
    kind: BasisKind,
    inputs: Vec<Terms<F::Elem>>,
) -> GroebnerBasis<F> {
    let cfg = default_config(order, &kind, &inputs);
    compute_basis_with(ring, cfg, kind, inputs)
}

pub(crate) fn default_config<E>(order: &TermOrder, kind: &BasisKind, inputs: &[Terms<E>]) -> EngineConfig {
    let mut cfg = EngineConfig::new(order.clone());
    if let BasisKind::Module { twists } = kind {
        cfg.shifts = twists.clone();
    } else {
        cfg.product_criterion = true;
    }
    cfg.homogeneous = all_homogeneous(&cfg, inputs);
    cfg
}

/// Like [`compute_basis`] with an explicit engine configuration (e.g. weights
/// that make the input homogeneous).
pub(crate) fn compute_basis_with<F: Field>(
    ring: &Ring<F>,
    cfg: EngineConfig,
    kind: BasisKind,
    inputs: Vec<Terms<F::Elem>>,
) -> GroebnerBasis<F> {
    let order = cfg.order.clone();
    let field = ring.field();
    let mut engine = engine::Engine::new(field, cfg);
    engine.run(inputs);
    let raw = engine.into_elements().into_iter().map(|e| e.terms).collect();
    let elements = engine::reduce_basis(field, &order, raw);
    GroebnerBasis { ring: ring.clone(), order, kind, elements }
}

/// Indices of a minimal generating subset of homogeneous `inputs`, found by
/// the degree-by-degree engine: an input survives iff it is not in the span of
/// everything of lower degree and of the surviving inputs before it.
pub(crate) fn minimal_input_indices<F: Field>(
    field: &F,
    order: &TermOrder,
    kind: &BasisKind,
    inputs: Vec<Terms<F::Elem>>,
) -> Vec<usize> {
    let cfg = default_config(order, kind, &inputs);
    debug_assert!(cfg.homogeneous);
    let mut engine = engine::Engine::new(field, cfg);
    engine.run(inputs);
    let mut out: Vec<usize> = engine
        .elements()
        .iter()
        .filter_map(|e| match e.origin {
            Origin::Input(k) => Some(k),
            _ => None,
        })
        .collect();
    out.sort_unstable();
    out
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `order`.
///
/// The resulting basis lives in a copy of `ring` whose active order is `order`.
pub fn buchberger<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>], order: &MonomialOrder) -> Result<GroebnerBasis<F>> {
    if gens.iter().any(|g| g.ring().vars() != ring.vars() || g.ring().field() != ring.field()) {
        return Err(AlgebraError::ContextMismatch);
    }
    let basis_ring = if ring.order() == order { ring.clone() } else { ring.reordered(order.clone())? };
    let inputs: Vec<_> = gens.iter().map(|g| g.in_ring(&basis_ring).map(|p| p.into_terms())).collect::<Result<_>>()?;
    Ok(compute_basis(&basis_ring, basis_ring.term_order(), BasisKind::Ideal, inputs))
}

/// Reduced Gröbner basis of the submodule spanned by `cols`.
pub fn module_buchberger<F: Field>(
    cols: &[ModuleElement<F>],
    order: &MonomialOrder,
    module: ModuleOrder,
) -> Result<GroebnerBasis<F>> {
    let first = cols.first().ok_or_else(|| AlgebraError::ShapeMismatch("no columns given".into()))?;
    let twists = first.twists().to_vec();
    if cols.iter().any(|c| c.twists() != twists.as_slice()) {
        return Err(AlgebraError::ShapeMismatch("inconsistent twist data".into()));
    }
    let ring = first.ring();
    if cols.iter().any(|c| c.ring() != ring) {
        return Err(AlgebraError::ContextMismatch);
    }
    let basis_ring = if ring.order() == order { ring.clone() } else { ring.reordered(order.clone())? };
    let term_order = TermOrder::with_module(order.clone(), module);
    let inputs = cols
        .iter()
        .map(|c| {
            let entries = c.entries().iter().map(|e| e.in_ring(&basis_ring)).collect::<Result<Vec<_>>>()?;
            Ok(ModuleElement { entries, twists: twists.clone() }.to_terms(&term_order))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(compute_basis(&basis_ring, &term_order, BasisKind::Module { twists }, inputs))
}

impl<F: Field> GroebnerBasis<F> {
    /// Basis of the ideal generated by `gens` in the ring's own order.
    pub fn of(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Result<Self> {
        buchberger(ring, gens, ring.order())
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn kind(&self) -> &BasisKind {
        &self.kind
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether the basis generates the whole ring (or free module).
    pub fn is_unit(&self) -> bool {
        match &self.kind {
            BasisKind::Ideal => self.elements.iter().any(|t| t[0].mon.is_one()),
            BasisKind::Module { twists } => {
                (0..twists.len() as u32).all(|c| self.elements.iter().any(|t| t[0].mon.is_one() && t[0].mon.comp() == c))
            }
        }
    }

    /// Basis polynomials (ideal case) in the basis ring.
    pub fn polynomials(&self) -> Vec<Polynomial<F>> {
        self.elements.iter().map(|t| Polynomial::from_parts(self.ring.clone(), t.clone())).collect()
    }

    /// Basis vectors (module case).
    pub fn vectors(&self) -> Vec<ModuleElement<F>> {
        let twists = match &self.kind {
            BasisKind::Module { twists } => twists.clone(),
            BasisKind::Ideal => vec![0],
        };
        self.elements.iter().map(|t| ModuleElement::from_terms(&self.ring, &twists, t)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|t| t[0].mon.clone()).collect()
    }

    pub(crate) fn reduce_terms(&self, t: Terms<F::Elem>) -> Terms<F::Elem> {
        let cfg = EngineConfig::new(self.order.clone());
        engine::reduce_by(self.ring.field(), &cfg, t, &self.elements)
    }

    fn check_ring(&self, r: &Ring<F>) -> Result<()> {
        if r.vars() != self.ring.vars() || r.field() != self.ring.field() {
            Err(AlgebraError::ContextMismatch)
        } else {
            Ok(())
        }
    }

    /// Remainder of multivariate division, returned in the ring of `f`.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check_ring(f.ring())?;
        if self.kind != BasisKind::Ideal {
            return Err(AlgebraError::ShapeMismatch("polynomial reduced by a module basis".into()));
        }
        let t = self.reduce_terms(f.in_ring(&self.ring)?.into_terms());
        Polynomial::from_parts(self.ring.clone(), t).in_ring(f.ring())
    }

    pub fn normal_form_vector(&self, v: &ModuleElement<F>) -> Result<ModuleElement<F>> {
        self.check_ring(v.ring())?;
        let BasisKind::Module { twists } = &self.kind else {
            return Err(AlgebraError::ShapeMismatch("vector reduced by an ideal basis".into()));
        };
        if v.rank() != twists.len() {
            return Err(AlgebraError::ShapeMismatch("rank mismatch".into()));
        }
        let entries = v.entries().iter().map(|e| e.in_ring(&self.ring)).collect::<Result<Vec<_>>>()?;
        let t = ModuleElement { entries, twists: twists.clone() }.to_terms(&self.order);
        let r = ModuleElement::from_terms(&self.ring, twists, &self.reduce_terms(t));
        let entries = r.entries.iter().map(|e| e.in_ring(v.ring())).collect::<Result<Vec<_>>>()?;
        Ok(ModuleElement { entries, twists: twists.clone() })
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_vector(&self, v: &ModuleElement<F>) -> Result<bool> {
        Ok(self.normal_form_vector(v)?.is_zero())
    }
}

/// Remainder of `f` modulo a Gröbner basis.
pub fn normal_form<F: Field>(f: &Polynomial<F>, gb: &GroebnerBasis<F>) -> Result<Polynomial<F>> {
    gb.normal_form(f)
}

/// Whether `f` lies in the ideal generated by `gens`.
pub fn ideal_membership<F: Field>(f: &Polynomial<F>, gens: &[Polynomial<F>]) -> Result<bool> {
    GroebnerBasis::of(f.ring(), gens)?.contains(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn ring() -> Ring<Rationals> {
        Ring::new(Rationals, &["x", "y", "z", "t"]).unwrap()
    }

    #[test]
    fn circle_and_line() {
        let r = Ring::new(Rationals, &["x", "y"]).unwrap();
        let gens = r.parse_many(&["x^2 + y^2 - 1", "x - y"]).unwrap();
        let gb = GroebnerBasis::of(&r, &gens).unwrap();
        assert_eq!(gb.polynomials(), r.parse_many(&["x - y", "y^2 - 1/2"]).unwrap());
    }

    #[test]
    fn single_generator_becomes_monic() {
        let r = ring();
        let g = r.parse("3*x*y - 6*z^2").unwrap();
        let gb = GroebnerBasis::of(&r, std::slice::from_ref(&g)).unwrap();
        assert_eq!(gb.polynomials(), vec![g.monic()]);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring();
        let g = r.parse("x^3 - y*z + t").unwrap();
        let gb = GroebnerBasis::of(&r, std::slice::from_ref(&g)).unwrap();
        assert!(gb.normal_form(&g).unwrap().is_zero());
        let gbx = GroebnerBasis::of(&r, &[r.parse("x").unwrap()]).unwrap();
        assert_eq!(gbx.normal_form(&r.parse("x + 1").unwrap()).unwrap(), r.one());
    }

    #[test]
    fn membership_basics() {
        let r = ring();
        let gens = r.parse_many(&["x", "y"]).unwrap();
        assert!(!ideal_membership(&r.one(), &gens).unwrap());
        assert!(ideal_membership(&gens[0], &gens).unwrap());
    }

    #[test]
    fn empty_input_is_zero_ideal() {
        let r = ring();
        let gb = GroebnerBasis::of(&r, &[]).unwrap();
        assert!(gb.is_empty());
        assert!(!gb.contains(&r.one()).unwrap());
    }

    #[test]
    fn lex_basis_of_affine_input() {
        let r = Ring::with_order(Rationals, &["x", "y"], MonomialOrder::Lex).unwrap();
        let gens = r.parse_many(&["x^2 + y", "x*y - 1"]).unwrap();
        let gb = GroebnerBasis::of(&r, &gens).unwrap();
        // y^3 + 1 is the eliminant
        assert!(gb.polynomials().contains(&r.parse("y^3 + 1").unwrap()));
        assert!(gb.contains(&r.parse("x + y^2").unwrap()).unwrap());
    }

    #[test]
    fn module_basis_single_column() {
        let r = ring();
        let col = ModuleElement::new(r.parse_many(&["2*x", "y"]).unwrap(), vec![0, 0]).unwrap();
        let gb = module_buchberger(std::slice::from_ref(&col), r.order(), ModuleOrder::Top).unwrap();
        let v = gb.vectors();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].entries()[0], r.parse("x").unwrap());
        assert_eq!(v[0].entries()[1], r.parse("1/2*y").unwrap());
    }

    #[test]
    fn module_membership() {
        let r = ring();
        let a = ModuleElement::new(r.parse_many(&["x", "y"]).unwrap(), vec![0, 0]).unwrap();
        let b = ModuleElement::new(r.parse_many(&["z", "t"]).unwrap(), vec![0, 0]).unwrap();
        let gb = module_buchberger(&[a, b], r.order(), ModuleOrder::Top).unwrap();
        let combo = ModuleElement::new(r.parse_many(&["x*t + z^2", "y*t + z*t"]).unwrap(), vec![0, 0]).unwrap();
        assert!(gb.contains_vector(&combo).unwrap());
        let not = ModuleElement::new(r.parse_many(&["x", "0"]).unwrap(), vec![0, 0]).unwrap();
        assert!(!gb.contains_vector(&not).unwrap());
    }

    #[test]
    fn inconsistent_twists_rejected() {
        let r = ring();
        let a = ModuleElement::new(r.parse_many(&["x", "y"]).unwrap(), vec![0, 0]).unwrap();
        let b = ModuleElement::new(r.parse_many(&["x", "y"]).unwrap(), vec![0, 1]).unwrap();
        assert!(module_buchberger(&[a, b], r.order(), ModuleOrder::Top).is_err());
    }
}
