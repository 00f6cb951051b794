//! Explicit graded complexes `F_s → ... → F_1 → F_0`: composition checks,
//! ranks over the fraction field, and the Buchsbaum–Eisenbud exactness
//! criterion.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::hilbert;
use crate::ideal::Ideal;
use crate::matrix::{subsets, GradedMatrix};
use crate::poly::Polynomial;
use crate::resolution::FreeResolution;

/// `maps[k - 1] = φ_k : F_k → F_{k-1}`.
pub struct GradedComplex<F: Field> {
    maps: Vec<GradedMatrix<F>>,
}

impl<F: Field> Clone for GradedComplex<F> {
    fn clone(&self) -> Self {
        GradedComplex { maps: self.maps.clone() }
    }
}

impl<F: Field> fmt::Debug for GradedComplex<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shapes: Vec<String> = self.maps.iter().map(|m| format!("{}x{}", m.nrows(), m.ncols())).collect();
        write!(f, "GradedComplex[{}]", shapes.join(", "))
    }
}

impl<F: Field> GradedComplex<F> {
    /// Maps listed from `φ_1` upwards; adjacent twists must agree.
    pub fn new(maps: Vec<GradedMatrix<F>>) -> Result<Self> {
        if maps.is_empty() {
            return Err(AlgebraError::ShapeMismatch("a complex needs at least one map".into()));
        }
        for k in 1..maps.len() {
            if maps[k].target() != maps[k - 1].source() {
                return Err(AlgebraError::ShapeMismatch(format!(
                    "target of φ_{} does not match source of φ_{}",
                    k + 1,
                    k
                )));
            }
            if maps[k].ring() != maps[0].ring() {
                return Err(AlgebraError::ContextMismatch);
            }
        }
        Ok(GradedComplex { maps })
    }

    pub fn from_resolution(res: &FreeResolution<F>) -> Result<Self> {
        Self::new(res.maps().to_vec())
    }

    pub fn maps(&self) -> &[GradedMatrix<F>] {
        &self.maps
    }

    /// Generator degrees of `F_0, ..., F_s`.
    pub fn modules(&self) -> Vec<Vec<i64>> {
        let mut out = vec![self.maps[0].target().to_vec()];
        out.extend(self.maps.iter().map(|m| m.source().to_vec()));
        out
    }
}

/// Whether all adjacent products vanish.
pub fn check_composition_zero<F: Field>(c: &GradedComplex<F>) -> Result<bool> {
    for w in c.maps.windows(2) {
        if !w[0].compose(&w[1])?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank over the fraction field with its certificate: a nonzero minor of
/// size `rank` (rows, columns) and the fact that every larger minor vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

/// Largest size of a nonvanishing minor, by ascending search with early exit.
pub fn matrix_rank<F: Field>(m: &GradedMatrix<F>) -> Result<RankCertificate> {
    let max = m.nrows().min(m.ncols());
    let mut best = RankCertificate { rank: 0, witness: None };
    for t in 1..=max {
        let mut found = None;
        'outer: for rs in subsets(m.nrows(), t) {
            for cs in subsets(m.ncols(), t) {
                let rows: Vec<Vec<Polynomial<F>>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| m.entry(r, c).clone()).collect()).collect();
                if !crate::matrix::determinant(m.ring(), &rows)?.is_zero() {
                    found = Some((rs.clone(), cs.clone()));
                    break 'outer;
                }
            }
        }
        match found {
            Some(w) => best = RankCertificate { rank: t, witness: Some(w) },
            None => break,
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BEPosition {
    /// Homological position `k` of `φ_k : F_k → F_{k-1}`.
    pub k: usize,
    pub rank_free: usize,
    pub rank_map: usize,
    pub rank_next: usize,
    pub rank_ok: bool,
    /// Codimension of `I_{r_k}(φ_k)`; `None` when it is the unit ideal.
    pub codim: Option<i64>,
    pub required: usize,
    pub codim_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BEReport {
    pub composition_zero: bool,
    pub positions: Vec<BEPosition>,
    pub verdict: bool,
}

impl BEReport {
    pub fn to_text(&self) -> String {
        let mark = |b: bool| if b { "ok" } else { "FAIL" };
        let mut out = format!("composition zero: {}\n", mark(self.composition_zero));
        for p in &self.positions {
            let codim = p.codim.map_or("inf".to_string(), |c| c.to_string());
            out.push_str(&format!(
                "k={}: rank F_{} = {} = r_{} + r_{} = {} + {} [{}]; codim I_{}(phi_{}) = {} >= {} [{}]\n",
                p.k,
                p.k,
                p.rank_free,
                p.k,
                p.k + 1,
                p.rank_map,
                p.rank_next,
                mark(p.rank_ok),
                p.rank_map,
                p.k,
                codim,
                p.required,
                mark(p.codim_ok)
            ));
        }
        out.push_str(&format!("verdict: {}\n", if self.verdict { "exact" } else { "not certified" }));
        out
    }
}

/// Codimension of the ideal of `r × r` minors (`None` for the unit ideal).
pub fn determinantal_codim<F: Field>(m: &GradedMatrix<F>, r: usize) -> Result<Option<i64>> {
    if r == 0 {
        return Ok(None);
    }
    let minors = m.minors(r)?;
    let ideal = Ideal::new(m.ring(), minors)?;
    if ideal.is_unit() {
        return Ok(None);
    }
    let n = m.ring().nvars() as i64;
    Ok(Some(n - hilbert::dimension(&ideal)?))
}

/// The Buchsbaum–Eisenbud criterion for `0 → F_s → ... → F_1 → F_0`:
/// exact iff `rank F_k = r_k + r_{k+1}` and `codim I_{r_k}(φ_k) ≥ k` for
/// every `k ≥ 1` (grade equals codimension over a polynomial ring).
pub fn buchsbaum_eisenbud<F: Field>(c: &GradedComplex<F>) -> Result<BEReport> {
    let composition_zero = check_composition_zero(c)?;
    let ranks: Vec<usize> = c.maps.iter().map(|m| matrix_rank(m).map(|r| r.rank)).collect::<Result<_>>()?;
    let mut positions = Vec::new();
    for k in 1..=c.maps.len() {
        let phi = &c.maps[k - 1];
        let r = ranks[k - 1];
        let next = ranks.get(k).copied().unwrap_or(0);
        let rank_free = phi.ncols();
        let codim = determinantal_codim(phi, r)?;
        let codim_ok = codim.is_none_or(|cd| cd >= k as i64);
        positions.push(BEPosition {
            k,
            rank_free,
            rank_map: r,
            rank_next: next,
            rank_ok: rank_free == r + next,
            codim,
            required: k,
            codim_ok,
        });
    }
    let verdict = composition_zero && positions.iter().all(|p| p.rank_ok && p.codim_ok);
    Ok(BEReport { composition_zero, positions, verdict })
}

/// Greatest common divisor (monic), via `(f) ∩ (g) = (lcm(f, g))`.
pub fn gcd<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    let ring = f.ring();
    let a = Ideal::new(ring, vec![f.clone()])?;
    let b = Ideal::new(ring, vec![g.clone()])?;
    let meet = a.intersect(&b)?.canonical();
    let lcm = meet.gens().first().ok_or(AlgebraError::ZeroIdeal)?.clone();
    let prod = f.mul(g)?;
    Ok(prod.divide_exact(&lcm)?.expect("lcm divides the product").monic())
}

/// Shortcut for the codimension-two condition: two minors without a common
/// factor generate an ideal of codimension at least two.
pub fn coprime_minors<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<bool> {
    Ok(gcd(f, g)?.is_unit())
}
