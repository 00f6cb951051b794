//! Finitely presented graded modules `coker(F_1 → F_0)`: Ext against a
//! twisted ring, torsion submodules, socles and graded local cohomology.

use std::collections::HashMap;
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{self, BasisKind, GroebnerBasis};
use crate::hilbert::{self, HilbertSeries};
use crate::ideal::Ideal;
use crate::matrix::GradedMatrix;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{Polynomial, Ring};
use crate::resolution::{self, FreeResolution};
use crate::terms::Term;

pub struct PresentedModule<F: Field> {
    ring: Ring<F>,
    relations: GradedMatrix<F>,
}

impl<F: Field> Clone for PresentedModule<F> {
    fn clone(&self) -> Self {
        PresentedModule { ring: self.ring.clone(), relations: self.relations.clone() }
    }
}

impl<F: Field> fmt::Debug for PresentedModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coker({:?} <- {:?})", self.relations.target(), self.relations.source())
    }
}

impl<F: Field> PresentedModule<F> {
    /// `coker(relations)`; generators sit in the degrees of the target.
    pub fn new(relations: GradedMatrix<F>) -> Self {
        PresentedModule { ring: relations.ring().clone(), relations }
    }

    pub fn free(ring: &Ring<F>, twists: Vec<i64>) -> Self {
        Self::new(GradedMatrix::zero(ring, twists, Vec::new()))
    }

    /// `R/I`.
    pub fn cyclic(ideal: &Ideal<F>) -> Result<Self> {
        let ring = ideal.ring();
        if ideal.is_zero() {
            return Ok(Self::free(ring, vec![0]));
        }
        Ok(Self::new(GradedMatrix::row_vector(ring, ideal.gens())?))
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn generator_degrees(&self) -> &[i64] {
        self.relations.target()
    }

    pub fn relations(&self) -> &GradedMatrix<F> {
        &self.relations
    }

    /// Minimal presentation (no unit entries, minimal relations).
    pub fn pruned(&self) -> Self {
        Self::new(resolution::prune(&self.relations))
    }

    /// `M(d)`: every degree lowered by `d`.
    pub fn twisted(&self, d: i64) -> Self {
        let m = &self.relations;
        let target = m.target().iter().map(|x| x - d).collect();
        let source = m.source().iter().map(|x| x - d).collect();
        Self::new(GradedMatrix::new(&self.ring, target, source, m.rows().to_vec()).expect("uniform shift"))
    }

    /// Module Gröbner basis of the relations.
    pub fn basis(&self) -> GroebnerBasis<F> {
        submodule_basis(&self.relations)
    }

    pub fn is_zero(&self) -> bool {
        self.generator_degrees().is_empty() || self.basis().is_unit()
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        hilbert::series_of_quotient(&self.basis())
    }

    pub fn resolution(&self) -> Result<FreeResolution<F>> {
        resolution::resolve(&self.relations)
    }

    pub fn regularity(&self) -> Result<Option<i64>> {
        Ok(self.resolution()?.regularity())
    }

    /// `Ext^q(M, R(-w))` as the homology of the dual of a minimal resolution.
    pub fn ext(&self, q: usize, w: i64) -> Result<PresentedModule<F>> {
        let n = self.ring.nvars();
        if q > n {
            return Err(AlgebraError::OutOfRange(format!("Ext^{q} over a ring with {n} variables")));
        }
        ext_of_resolution(&self.resolution()?, q, w)
    }

    /// `H^0_a(M)` (elements killed by a power of `a`) and `M / H^0_a(M)`.
    pub fn torsion(&self, a: &Ideal<F>) -> Result<(PresentedModule<F>, PresentedModule<F>)> {
        if a.is_zero() {
            return Err(AlgebraError::ZeroIdeal);
        }
        if a.ring() != &self.ring {
            return Err(AlgebraError::ContextMismatch);
        }
        let u = self.relations.clone();
        let mut cur = u.clone();
        loop {
            let next = colon_by_ideal(&cur, a.gens())?;
            if submodule_contains(&cur, &next) {
                break;
            }
            cur = next;
        }
        let torsion = subquotient(&cur, &u)?;
        let quotient = PresentedModule::new(cur).pruned();
        Ok((torsion, quotient))
    }

    /// Degrees of a basis of the socle `(0 :_M m)`, with multiplicity.
    pub fn socle_degrees(&self) -> Result<Vec<i64>> {
        let m = self.pruned();
        if m.generator_degrees().is_empty() {
            return Ok(Vec::new());
        }
        let Some(reg) = m.regularity()? else { return Ok(Vec::new()) };
        let lo = *m.generator_degrees().iter().min().unwrap();
        let gb = m.basis();
        let mut out = Vec::new();
        for d in lo..=reg {
            let k = socle_dimension(&gb, m.generator_degrees(), d);
            out.extend(std::iter::repeat(d).take(k));
        }
        Ok(out)
    }

    /// `dim_k M_d` for each `d` in the range.
    pub fn hilbert_function(&self, degrees: impl IntoIterator<Item = i64>) -> Vec<i64> {
        let hs = self.hilbert_series();
        degrees.into_iter().map(|d| hs.hilbert_function(d)).collect()
    }

    /// `dim_k H^i_m(M)_α` via graded local duality
    /// `H^i_m(M)_α ≅ Ext^{n-i}(M, R(-n))_{-α}^*`.
    pub fn local_cohomology_dims(&self, i: usize, degrees: impl IntoIterator<Item = i64>) -> Result<Vec<i64>> {
        let n = self.ring.nvars();
        if i > n {
            return Err(AlgebraError::OutOfRange(format!("H^{i} over a ring with {n} variables")));
        }
        let e = self.ext(n - i, n as i64)?;
        let hs = e.hilbert_series();
        Ok(degrees.into_iter().map(|a| hs.hilbert_function(-a)).collect())
    }
}

/// `Ext^q(R/I, R(-w))`.
pub fn ext_cyclic<F: Field>(ideal: &Ideal<F>, q: usize, w: i64) -> Result<PresentedModule<F>> {
    PresentedModule::cyclic(ideal)?.ext(q, w)
}

/// `dim_k H^i_m(R/I)_α` for `α` in the range.
pub fn local_cohomology_dims<F: Field>(
    ideal: &Ideal<F>,
    i: usize,
    degrees: impl IntoIterator<Item = i64>,
) -> Result<Vec<i64>> {
    PresentedModule::cyclic(ideal)?.local_cohomology_dims(i, degrees)
}

/// Homology at position `q` of `Hom(F_•, R(-w))`.
pub fn ext_of_resolution<F: Field>(res: &FreeResolution<F>, q: usize, w: i64) -> Result<PresentedModule<F>> {
    let ring = res.ring();
    let modules = res.modules();
    let Some(fq) = modules.get(q).filter(|m| !m.is_empty()) else {
        return Ok(PresentedModule::free(ring, Vec::new()));
    };
    let dual_q: Vec<i64> = fq.iter().map(|d| w - d).collect();
    // cycles: kernel of δ_{q+1} = d_{q+1}^*
    let cycles = match res.maps().get(q) {
        Some(d) if d.ncols() > 0 => resolution::syzygies(&d.dual(w))?,
        _ => GradedMatrix::identity(ring, dual_q.clone()),
    };
    if cycles.ncols() == 0 {
        return Ok(PresentedModule::free(ring, Vec::new()));
    }
    // boundaries: image of δ_q = d_q^*
    let boundaries = if q == 0 {
        GradedMatrix::zero(ring, dual_q, Vec::new())
    } else {
        res.maps()[q - 1].dual(w)
    };
    Ok(subquotient(&cycles, &boundaries)?.pruned())
}

/// `S / (S ∩ U)` for submodules `S, U` of one free module, presented on the
/// columns of `S`.
pub fn subquotient<F: Field>(s: &GradedMatrix<F>, u: &GradedMatrix<F>) -> Result<PresentedModule<F>> {
    let ring = s.ring();
    if s.ncols() == 0 {
        return Ok(PresentedModule::free(ring, Vec::new()));
    }
    let both = s.concat(u)?;
    let syz = resolution::syzygies(&both)?;
    let top: Vec<usize> = (0..s.ncols()).collect();
    let rel = if syz.ncols() == 0 {
        GradedMatrix::zero(ring, s.source().to_vec(), Vec::new())
    } else {
        syz.select_rows(&top).without_zero_columns()
    };
    Ok(PresentedModule::new(rel).pruned())
}

/// Reduced module basis of the column span of `m` (empty span allowed).
pub fn submodule_basis<F: Field>(m: &GradedMatrix<F>) -> GroebnerBasis<F> {
    let ring = m.ring();
    let order = TermOrder::new(ring.order().clone());
    let inputs = (0..m.ncols()).map(|c| m.column_element(c).to_terms(&order)).collect();
    groebner::compute_basis(ring, &order, BasisKind::Module { twists: m.target().to_vec() }, inputs)
}

/// Whether every column of `small` lies in the span of `big`'s columns.
pub fn submodule_contains<F: Field>(big: &GradedMatrix<F>, small: &GradedMatrix<F>) -> bool {
    let gb = submodule_basis(big);
    (0..small.ncols()).all(|c| gb.contains_vector(&small.column_element(c)).expect("same free module"))
}

/// `{v ∈ F : g v ∈ U}` for `U` the column span of `u`.
pub fn colon_by_element<F: Field>(u: &GradedMatrix<F>, g: &Polynomial<F>) -> Result<GradedMatrix<F>> {
    let ring = u.ring();
    let r = u.nrows();
    if g.is_zero() || !g.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous(g.to_string()));
    }
    let dg = g.degree().unwrap() as i64;
    let mut scaled = GradedMatrix::zero(ring, u.target().to_vec(), u.target().iter().map(|d| d + dg).collect());
    let mut rows = scaled.rows().to_vec();
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = g.clone();
    }
    scaled = GradedMatrix::new(ring, scaled.target().to_vec(), scaled.source().to_vec(), rows)?;
    let syz = resolution::syzygies(&scaled.concat(u)?)?;
    let top: Vec<usize> = (0..r).collect();
    let part = syz.select_rows(&top);
    let source = part.source().iter().map(|s| s - dg).collect();
    let cols = GradedMatrix::new(ring, u.target().to_vec(), source, part.rows().to_vec())?.without_zero_columns();
    let keep = resolution::minimal_columns(&cols);
    Ok(cols.select_columns(&keep))
}

/// `A ∩ B` for column spans in one free module.
pub fn intersect_submodules<F: Field>(a: &GradedMatrix<F>, b: &GradedMatrix<F>) -> Result<GradedMatrix<F>> {
    let ring = a.ring();
    if a.ncols() == 0 || b.ncols() == 0 {
        return Ok(GradedMatrix::zero(ring, a.target().to_vec(), Vec::new()));
    }
    let syz = resolution::syzygies(&a.concat(b)?)?;
    let top: Vec<usize> = (0..a.ncols()).collect();
    let x = syz.select_rows(&top);
    let cols = a.compose(&x)?.without_zero_columns();
    let keep = resolution::minimal_columns(&cols);
    Ok(cols.select_columns(&keep))
}

/// `U :_F (g_1, ..., g_k)`.
pub fn colon_by_ideal<F: Field>(u: &GradedMatrix<F>, gens: &[Polynomial<F>]) -> Result<GradedMatrix<F>> {
    let mut acc: Option<GradedMatrix<F>> = None;
    for g in gens {
        let c = colon_by_element(u, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect_submodules(&a, &c)?,
        });
    }
    acc.ok_or(AlgebraError::ZeroIdeal)
}

/// Standard monomials `m e_i` with `deg m + twists[i] = d`.
fn standard_basis(leads: &[Vec<Monomial>], twists: &[i64], nvars: usize, d: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for (i, &tw) in twists.iter().enumerate() {
        let e = d - tw;
        if e < 0 {
            continue;
        }
        let mut exps = vec![0u16; nvars];
        enumerate_monomials(&mut exps, 0, e as u32, &mut |x| {
            let m = Monomial::from_exponents(x).with_comp(i as u32);
            if !leads[i].iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
        });
    }
    out
}

fn enumerate_monomials(exps: &mut Vec<u16>, i: usize, left: u32, f: &mut impl FnMut(&[u16])) {
    let n = exps.len();
    if i == n - 1 {
        exps[i] = left as u16;
        f(exps);
        exps[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e as u16;
        enumerate_monomials(exps, i + 1, left - e, f);
    }
    exps[i] = 0;
}

/// Incremental row echelon form over a field on sparse vectors.
struct Echelon<'a, F: Field> {
    field: &'a F,
    pivots: HashMap<usize, Vec<(usize, F::Elem)>>,
}

impl<'a, F: Field> Echelon<'a, F> {
    fn new(field: &'a F) -> Self {
        Echelon { field, pivots: HashMap::new() }
    }

    /// Adds a vector (sorted by index); returns whether it was independent.
    fn insert(&mut self, mut v: Vec<(usize, F::Elem)>) -> bool {
        let f = self.field;
        loop {
            let Some((lead, c)) = v.first().cloned() else { return false };
            let Some(p) = self.pivots.get(&lead) else {
                let inv = f.inv(&c).unwrap();
                let v = v.into_iter().map(|(i, x)| (i, f.mul(&x, &inv))).collect();
                self.pivots.insert(lead, v);
                return true;
            };
            // v -= c * p
            let mut out = Vec::with_capacity(v.len() + p.len());
            let (mut a, mut b) = (0, 0);
            while a < v.len() || b < p.len() {
                let ia = v.get(a).map(|x| x.0);
                let ib = p.get(b).map(|x| x.0);
                match (ia, ib) {
                    (Some(x), Some(y)) if x == y => {
                        let val = f.sub(&v[a].1, &f.mul(&c, &p[b].1));
                        if !f.is_zero(&val) {
                            out.push((x, val));
                        }
                        a += 1;
                        b += 1;
                    }
                    (Some(x), Some(y)) if x < y => {
                        out.push(v[a].clone());
                        a += 1;
                    }
                    (Some(_), None) => {
                        out.push(v[a].clone());
                        a += 1;
                    }
                    _ => {
                        let (y, val) = &p[b];
                        out.push((*y, f.neg(&f.mul(&c, val))));
                        b += 1;
                    }
                }
            }
            v = out;
        }
    }
}

/// `dim_k (0 :_M m)_d` for `M = F/U` with module basis `gb`.
fn socle_dimension<F: Field>(gb: &GroebnerBasis<F>, twists: &[i64], d: i64) -> usize {
    let n = gb.ring().nvars();
    let field = gb.ring().field();
    let mut leads: Vec<Vec<Monomial>> = vec![Vec::new(); twists.len()];
    for l in gb.leading_monomials() {
        leads[l.comp() as usize].push(l);
    }
    let here = standard_basis(&leads, twists, n, d);
    if here.is_empty() {
        return 0;
    }
    let next = standard_basis(&leads, twists, n, d + 1);
    let index: HashMap<Monomial, usize> = next.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let width = next.len();
    let mut ech = Echelon::new(field);
    let mut rank = 0;
    for b in &here {
        let mut v: Vec<(usize, F::Elem)> = Vec::new();
        for k in 0..n {
            let xk = Monomial::var_power(n, k, 1);
            let prod = b.mul(&xk);
            let nf = gb.reduce_terms(vec![Term::new(field.one(), prod)]);
            for t in nf {
                let idx = index[&t.mon];
                v.push((k * width + idx, t.coef));
            }
        }
        v.sort_by_key(|(i, _)| *i);
        if ech.insert(v) {
            rank += 1;
        }
    }
    here.len() - rank
}
