//! Syzygies, minimal graded free resolutions and Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{self, engine, BasisKind, EngineConfig, Origin};
use crate::hilbert::{self, HilbertSeries};
use crate::ideal::Ideal;
use crate::matrix::GradedMatrix;
use crate::monomial::{ModuleOrder, TermOrder};
use crate::poly::{Polynomial, Ring};
use crate::terms::Term;

/// Minimal generators of the kernel of `m`, as the columns of a matrix into
/// `m`'s source.
///
/// The columns `v_j` are augmented to `(v_j, e_j)` and a module basis is
/// computed degree by degree in an order where the `v`-block dominates.
/// Elements that land entirely in the `e`-block are syzygies; those that do
/// not come from S-pairs of earlier syzygies are minimal generators.
pub fn syzygies<F: Field>(m: &GradedMatrix<F>) -> Result<GradedMatrix<F>> {
    let ring = m.ring();
    let r = m.nrows();
    let k = m.ncols();
    if k == 0 {
        return Ok(GradedMatrix::zero(ring, Vec::new(), Vec::new()));
    }
    let split = r as u32;
    let order = TermOrder::with_module(ring.order().clone(), ModuleOrder::BlockTop { split });
    let mut shifts: Vec<i64> = m.target().to_vec();
    shifts.extend_from_slice(m.source());
    let field = ring.field();
    let inputs: Vec<_> = (0..k)
        .map(|j| {
            let mut t = Vec::new();
            for (row, e) in m.rows().iter().enumerate() {
                for term in e[j].terms() {
                    t.push(Term::new(term.coef.clone(), term.mon.clone().with_comp(row as u32)));
                }
            }
            t.push(Term::new(field.one(), ring.one().terms()[0].mon.clone().with_comp(split + j as u32)));
            crate::terms::normalize(field, &order, t)
        })
        .collect();
    let mut cfg = EngineConfig::new(order.clone());
    cfg.shifts = shifts;
    cfg.homogeneous = true;
    cfg.split = Some(split);
    let mut eng = engine::Engine::new(field, cfg);
    eng.run(inputs);
    let mut found: Vec<(i64, Vec<Term<F::Elem>>)> = eng
        .elements()
        .iter()
        .filter(|e| e.lead().comp() >= split && e.origin != Origin::Pair { pure: true })
        .map(|e| (e.degree, e.terms.clone()))
        .collect();
    found.sort_by_key(|(d, _)| *d);
    let source: Vec<i64> = found.iter().map(|(d, _)| *d).collect();
    let mut cols = Vec::with_capacity(found.len());
    for (_, t) in &found {
        let mut per: Vec<Vec<Term<F::Elem>>> = vec![Vec::new(); k];
        for term in t {
            debug_assert!(term.mon.comp() >= split);
            let c = (term.mon.comp() - split) as usize;
            per[c].push(Term::new(term.coef.clone(), term.mon.clone().with_comp(0)));
        }
        cols.push(per.into_iter().map(|v| ring.from_terms(v)).collect::<Vec<_>>());
    }
    GradedMatrix::from_columns(ring, m.source().to_vec(), source, &cols)
}

/// Indices of a minimal generating subset of the columns of `m`.
pub fn minimal_columns<F: Field>(m: &GradedMatrix<F>) -> Vec<usize> {
    let ring = m.ring();
    let order = TermOrder::new(ring.order().clone());
    let inputs: Vec<_> = (0..m.ncols()).map(|c| m.column_element(c).to_terms(&order)).collect();
    groebner::minimal_input_indices(ring.field(), &order, &BasisKind::Module { twists: m.target().to_vec() }, inputs)
}

/// Removes generator/relation pairs linked by a unit entry until the
/// presentation `coker(m)` is minimal on generators, then keeps a minimal set
/// of relations.
pub fn prune<F: Field>(m: &GradedMatrix<F>) -> GradedMatrix<F> {
    let ring = m.ring().clone();
    let field = ring.field().clone();
    let mut target = m.target().to_vec();
    let mut source = m.source().to_vec();
    let mut rows: Vec<Vec<Polynomial<F>>> = m.rows().to_vec();
    loop {
        let mut pivot = None;
        'search: for (r, row) in rows.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if e.is_unit() {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((r, c)) = pivot else { break };
        let u = field.inv(&rows[r][c].terms()[0].coef).unwrap();
        for k in 0..source.len() {
            if k == c || rows[r][k].is_zero() {
                continue;
            }
            let factor = rows[r][k].scale(&u);
            for row in rows.iter_mut() {
                if !row[c].is_zero() {
                    let delta = &factor * &row[c];
                    row[k] = &row[k] - &delta;
                }
            }
        }
        rows.remove(r);
        target.remove(r);
        for row in rows.iter_mut() {
            row.remove(c);
        }
        source.remove(c);
    }
    let pruned = GradedMatrix::new(&ring, target, source, rows).expect("pruning preserves homogeneity");
    let pruned = pruned.without_zero_columns();
    let keep = minimal_columns(&pruned);
    pruned.select_columns(&keep)
}

/// A graded free resolution `0 ← F_0 ← F_1 ← ... ← F_p ← 0` of `coker(d_1)`.
pub struct FreeResolution<F: Field> {
    ring: Ring<F>,
    modules: Vec<Vec<i64>>,
    maps: Vec<GradedMatrix<F>>,
}

impl<F: Field> Clone for FreeResolution<F> {
    fn clone(&self) -> Self {
        FreeResolution { ring: self.ring.clone(), modules: self.modules.clone(), maps: self.maps.clone() }
    }
}

impl<F: Field> fmt::Debug for FreeResolution<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeResolution({:?})", self.modules)
    }
}

impl<F: Field> FreeResolution<F> {
    /// Assembles a complex; `maps[i]` goes `F_{i+1} → F_i`.
    pub fn from_maps(ring: &Ring<F>, base: Vec<i64>, maps: Vec<GradedMatrix<F>>) -> Result<Self> {
        let mut modules = vec![base];
        for m in &maps {
            if m.target() != modules.last().unwrap().as_slice() {
                return Err(AlgebraError::ShapeMismatch("maps do not chain".into()));
            }
            modules.push(m.source().to_vec());
        }
        Ok(FreeResolution { ring: ring.clone(), modules, maps })
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    /// Generator degrees of each `F_j`.
    pub fn modules(&self) -> &[Vec<i64>] {
        &self.modules
    }

    pub fn maps(&self) -> &[GradedMatrix<F>] {
        &self.maps
    }

    /// Projective dimension: the last nonzero position (`-1` for zero).
    pub fn length(&self) -> i64 {
        self.modules.iter().rposition(|m| !m.is_empty()).map_or(-1, |p| p as i64)
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| !m.has_unit_entry())
    }

    /// Whether consecutive maps compose to zero.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].compose(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_modules(&self.modules)
    }

    /// `max_j (deg F_j - j)`; `None` for the zero module.
    pub fn regularity(&self) -> Option<i64> {
        self.betti().regularity()
    }

    /// Hilbert series of the resolved module (alternating sum of twists).
    pub fn hilbert_series(&self) -> HilbertSeries {
        hilbert::series_from_twists(self.ring.nvars(), &self.modules)
    }

    /// Drops `F_0`: a resolution of `im(d_1)` from one of `coker(d_1)`.
    pub fn shifted_left(&self) -> FreeResolution<F> {
        if self.maps.is_empty() {
            return FreeResolution { ring: self.ring.clone(), modules: vec![Vec::new()], maps: Vec::new() };
        }
        FreeResolution { ring: self.ring.clone(), modules: self.modules[1..].to_vec(), maps: self.maps[1..].to_vec() }
    }
}

/// Minimal free resolution of `coker(presentation)`.
pub fn resolve<F: Field>(presentation: &GradedMatrix<F>) -> Result<FreeResolution<F>> {
    let ring = presentation.ring().clone();
    let first = prune(presentation);
    let base = first.target().to_vec();
    let mut maps = Vec::new();
    let mut cur = first;
    let limit = ring.nvars() + 1;
    while cur.ncols() > 0 {
        if maps.len() > limit {
            return Err(AlgebraError::OutOfRange("resolution longer than the number of variables".into()));
        }
        log::debug!("resolution step {}: {} generators", maps.len() + 1, cur.ncols());
        let next = syzygies(&cur)?;
        maps.push(cur);
        cur = next;
    }
    FreeResolution::from_maps(&ring, base, maps)
}

/// Minimal free resolution of `R/I`.
pub fn resolve_quotient<F: Field>(ideal: &Ideal<F>) -> Result<FreeResolution<F>> {
    if !ideal.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous(ideal.to_string()));
    }
    let ring = ideal.ring();
    if ideal.is_zero() {
        return FreeResolution::from_maps(ring, vec![0], Vec::new());
    }
    let row = GradedMatrix::row_vector(ring, ideal.gens())?;
    resolve(&row)
}

/// Minimal free resolution of `I` as a module.
pub fn minimal_free_resolution<F: Field>(ideal: &Ideal<F>) -> Result<FreeResolution<F>> {
    Ok(resolve_quotient(ideal)?.shifted_left())
}

/// Castelnuovo–Mumford regularity of the ideal `I` (`= reg(R/I) + 1`).
pub fn regularity<F: Field>(ideal: &Ideal<F>) -> Result<Option<i64>> {
    Ok(minimal_free_resolution(ideal)?.regularity())
}

/// `depth(R/I) = nvars - pd(R/I)`.
pub fn depth_of_quotient<F: Field>(ideal: &Ideal<F>) -> Result<i64> {
    let res = resolve_quotient(ideal)?;
    Ok(ideal.ring().nvars() as i64 - res.length())
}

/// Graded Betti numbers `β_{j,d}`: generators of degree `d` in `F_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    entries: BTreeMap<usize, BTreeMap<i64, usize>>,
}

impl BettiTable {
    pub fn from_modules(modules: &[Vec<i64>]) -> Self {
        let mut entries = BTreeMap::new();
        for (j, twists) in modules.iter().enumerate() {
            if twists.is_empty() {
                continue;
            }
            let row: &mut BTreeMap<i64, usize> = entries.entry(j).or_default();
            for &d in twists {
                *row.entry(d).or_default() += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, j: usize, d: i64) -> usize {
        self.entries.get(&j).and_then(|r| r.get(&d)).copied().unwrap_or(0)
    }

    /// Sorted generator degrees (with multiplicity) at position `j`.
    pub fn twists(&self, j: usize) -> Vec<i64> {
        let mut out = Vec::new();
        if let Some(row) = self.entries.get(&j) {
            for (&d, &m) in row {
                out.extend(std::iter::repeat(d).take(m));
            }
        }
        out
    }

    pub fn positions(&self) -> impl Iterator<Item = (usize, &BTreeMap<i64, usize>)> {
        self.entries.iter().map(|(j, r)| (*j, r))
    }

    pub fn regularity(&self) -> Option<i64> {
        self.entries.iter().flat_map(|(j, r)| r.keys().map(move |d| d - *j as i64)).max()
    }

    pub fn length(&self) -> i64 {
        self.entries.keys().last().map_or(-1, |&j| j as i64)
    }

    /// One line per position: `j: {degree: multiplicity, ...}`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (j, row) in &self.entries {
            let cells: Vec<String> = row.iter().map(|(d, m)| format!("{d}: {m}")).collect();
            out.push_str(&format!("{j}: {{{}}}\n", cells.join(", ")));
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
