//! Homogeneous matrices between graded free modules.
//!
//! Twists follow the convention `R(-d)` ↔ a generator in degree `d`; a
//! matrix `F → G` has entry `(r, c)` zero or homogeneous of degree
//! `source[c] - target[r]`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::ModuleElement;
use crate::poly::{Polynomial, Ring};

/// `⊕ R(-d_i)`, recorded by its generator degrees `d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// `R[-6]^2 + R[-5]`-style rendering, descending twists.
    pub fn display(&self) -> String {
        if self.twists.is_empty() {
            return "0".into();
        }
        let mut sorted = self.twists.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts = Vec::new();
        let mut k = 0;
        while k < sorted.len() {
            let d = sorted[k];
            let count = sorted[k..].iter().take_while(|&&e| e == d).count();
            let base = if d == 0 { "R".to_string() } else { format!("R[{}]", -d) };
            parts.push(if count > 1 { format!("{base}^{count}") } else { base });
            k += count;
        }
        parts.join(" + ")
    }
}

pub struct GradedMatrix<F: Field> {
    ring: Ring<F>,
    target: Vec<i64>,
    source: Vec<i64>,
    rows: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> Clone for GradedMatrix<F> {
    fn clone(&self) -> Self {
        GradedMatrix {
            ring: self.ring.clone(),
            target: self.target.clone(),
            source: self.source.clone(),
            rows: self.rows.clone(),
        }
    }
}

impl<F: Field> PartialEq for GradedMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.target == other.target && self.source == other.source && self.rows == other.rows
    }
}

impl<F: Field> fmt::Debug for GradedMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for GradedMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> GradedMatrix<F> {
    pub fn new(ring: &Ring<F>, target: Vec<i64>, source: Vec<i64>, rows: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        if rows.len() != target.len() || rows.iter().any(|r| r.len() != source.len()) {
            return Err(AlgebraError::ShapeMismatch(format!(
                "expected a {}x{} entry grid",
                target.len(),
                source.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if e.ring() != ring {
                    return Err(AlgebraError::ContextMismatch);
                }
                if e.is_zero() {
                    continue;
                }
                let want = source[c] - target[r];
                if !e.is_homogeneous() || e.degree().map(|d| d as i64) != Some(want) {
                    return Err(AlgebraError::NotHomogeneous(format!(
                        "entry ({r}, {c}) = {e} should be homogeneous of degree {want}"
                    )));
                }
            }
        }
        Ok(GradedMatrix { ring: ring.clone(), target, source, rows })
    }

    /// Infers source twists from the first nonzero entry of each column.
    pub fn with_target(ring: &Ring<F>, target: Vec<i64>, rows: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut source = Vec::with_capacity(ncols);
        for c in 0..ncols {
            let (r, e) = rows
                .iter()
                .enumerate()
                .find_map(|(r, row)| row.get(c).filter(|e| !e.is_zero()).map(|e| (r, e)))
                .ok_or_else(|| AlgebraError::ShapeMismatch(format!("column {c} is zero; its degree is ambiguous")))?;
            let d = e.degree().unwrap() as i64;
            source.push(d + target[r]);
        }
        Self::new(ring, target, source, rows)
    }

    pub fn from_columns(ring: &Ring<F>, target: Vec<i64>, source: Vec<i64>, cols: &[Vec<Polynomial<F>>]) -> Result<Self> {
        let rows = (0..target.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        Self::new(ring, target, source, rows)
    }

    /// `1 × k` matrix `R(-deg g_1) ⊕ ... → R` sending basis vectors to `gens`.
    pub fn row_vector(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Result<Self> {
        let mut source = Vec::with_capacity(gens.len());
        for g in gens {
            if g.is_zero() || !g.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous(g.to_string()));
            }
            source.push(g.degree().unwrap() as i64);
        }
        Self::new(ring, vec![0], source, vec![gens.to_vec()])
    }

    pub fn identity(ring: &Ring<F>, twists: Vec<i64>) -> Self {
        let n = twists.len();
        let rows = (0..n).map(|r| (0..n).map(|c| if r == c { ring.one() } else { ring.zero() }).collect()).collect();
        GradedMatrix { ring: ring.clone(), target: twists.clone(), source: twists, rows }
    }

    pub fn zero(ring: &Ring<F>, target: Vec<i64>, source: Vec<i64>) -> Self {
        let rows = vec![vec![ring.zero(); source.len()]; target.len()];
        GradedMatrix { ring: ring.clone(), target, source, rows }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn target(&self) -> &[i64] {
        &self.target
    }

    pub fn source(&self) -> &[i64] {
        &self.source
    }

    pub fn nrows(&self) -> usize {
        self.target.len()
    }

    pub fn ncols(&self) -> usize {
        self.source.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial<F> {
        &self.rows[r][c]
    }

    pub fn rows(&self) -> &[Vec<Polynomial<F>>] {
        &self.rows
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial<F>> {
        self.rows.iter().map(|r| r[c].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial<F>>> {
        (0..self.ncols()).map(|c| self.column(c)).collect()
    }

    pub fn column_element(&self, c: usize) -> ModuleElement<F> {
        ModuleElement::new(self.column(c), self.target.clone()).expect("well-formed column")
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|e| e.is_zero()))
    }

    /// Whether some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.rows.iter().any(|r| r.iter().any(|e| e.is_unit()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMatrix<F>) -> Result<GradedMatrix<F>> {
        if self.source != other.target {
            return Err(AlgebraError::ShapeMismatch(format!(
                "cannot compose: source twists {:?} vs target twists {:?}",
                self.source, other.target
            )));
        }
        if self.ring != other.ring {
            return Err(AlgebraError::ContextMismatch);
        }
        let mut rows = Vec::with_capacity(self.nrows());
        for r in 0..self.nrows() {
            let mut row = Vec::with_capacity(other.ncols());
            for c in 0..other.ncols() {
                let mut acc = self.ring.zero();
                for k in 0..self.ncols() {
                    let (a, b) = (&self.rows[r][k], &other.rows[k][c]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                row.push(acc);
            }
            rows.push(row);
        }
        Ok(GradedMatrix { ring: self.ring.clone(), target: self.target.clone(), source: other.source.clone(), rows })
    }

    /// The transpose, read as `Hom(-, R(-w))`: generator degrees become
    /// `w - d`.
    pub fn dual(&self, w: i64) -> GradedMatrix<F> {
        let rows = (0..self.ncols()).map(|c| self.column(c)).collect();
        GradedMatrix {
            ring: self.ring.clone(),
            target: self.source.iter().map(|d| w - d).collect(),
            source: self.target.iter().map(|d| w - d).collect(),
            rows,
        }
    }

    /// Columns of `self` followed by those of `other` (same target).
    pub fn concat(&self, other: &GradedMatrix<F>) -> Result<GradedMatrix<F>> {
        if self.target != other.target {
            return Err(AlgebraError::ShapeMismatch("concatenation needs equal targets".into()));
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.iter().chain(b).cloned().collect()).collect();
        let source = self.source.iter().chain(&other.source).copied().collect();
        Ok(GradedMatrix { ring: self.ring.clone(), target: self.target.clone(), source, rows })
    }

    pub fn select_columns(&self, cols: &[usize]) -> GradedMatrix<F> {
        let rows = self.rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        GradedMatrix {
            ring: self.ring.clone(),
            target: self.target.clone(),
            source: cols.iter().map(|&c| self.source[c]).collect(),
            rows,
        }
    }

    pub fn select_rows(&self, sel: &[usize]) -> GradedMatrix<F> {
        GradedMatrix {
            ring: self.ring.clone(),
            target: sel.iter().map(|&r| self.target[r]).collect(),
            source: self.source.clone(),
            rows: sel.iter().map(|&r| self.rows[r].clone()).collect(),
        }
    }

    /// Drops zero columns.
    pub fn without_zero_columns(&self) -> GradedMatrix<F> {
        let keep: Vec<usize> = (0..self.ncols()).filter(|&c| self.rows.iter().any(|r| !r[c].is_zero())).collect();
        self.select_columns(&keep)
    }

    /// All nonzero `t × t` minors, row subsets outer, column subsets inner,
    /// both in lexicographic order.
    pub fn minors(&self, t: usize) -> Result<Vec<Polynomial<F>>> {
        let mut out = Vec::new();
        self.for_each_minor(t, |m| {
            if !m.is_zero() {
                out.push(m);
            }
            true
        })?;
        Ok(out)
    }

    /// Visits every `t × t` minor in lexicographic order until `visit`
    /// returns `false`. Returns whether the enumeration ran to completion.
    pub fn for_each_minor(&self, t: usize, mut visit: impl FnMut(Polynomial<F>) -> bool) -> Result<bool> {
        if t == 0 || t > self.nrows().min(self.ncols()) {
            return Err(AlgebraError::OutOfRange(format!(
                "minor size {t} for a {}x{} matrix",
                self.nrows(),
                self.ncols()
            )));
        }
        if self.ncols() > 64 {
            return Err(AlgebraError::OutOfRange("minors need at most 64 columns".into()));
        }
        for rsel in subsets(self.nrows(), t) {
            let mut memo = HashMap::new();
            for csel in subsets(self.ncols(), t) {
                let mask = csel.iter().fold(0u64, |m, &c| m | (1 << c));
                if !visit(self.det_memo(&rsel, 0, mask, &mut memo)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Laplace expansion along row `rsel[k]` over the columns in `mask`.
    fn det_memo(&self, rsel: &[usize], k: usize, mask: u64, memo: &mut HashMap<u64, Polynomial<F>>) -> Polynomial<F> {
        if k == rsel.len() {
            return self.ring.one();
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let row = &self.rows[rsel[k]];
        let mut acc = self.ring.zero();
        let mut sign_positive = true;
        for c in 0..self.ncols() {
            if mask & (1 << c) == 0 {
                continue;
            }
            if !row[c].is_zero() {
                let sub = self.det_memo(rsel, k + 1, mask & !(1 << c), memo);
                if !sub.is_zero() {
                    let term = &row[c] * &sub;
                    acc = if sign_positive { &acc + &term } else { &acc - &term };
                }
            }
            sign_positive = !sign_positive;
        }
        memo.insert(mask, acc.clone());
        acc
    }
}

/// Determinant of a square grid of polynomials (cofactor expansion).
pub fn determinant<F: Field>(ring: &Ring<F>, rows: &[Vec<Polynomial<F>>]) -> Result<Polynomial<F>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::ShapeMismatch("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(ring.one());
    }
    let m = GradedMatrix { ring: ring.clone(), target: vec![0; n], source: vec![0; n], rows: rows.to_vec() };
    let sel: Vec<usize> = (0..n).collect();
    Ok(m.det_memo(&sel, 0, if n == 64 { u64::MAX } else { (1u64 << n) - 1 }, &mut HashMap::new()))
}

/// All nonzero `t × t` minors of an arbitrary (not necessarily graded) grid.
pub fn minors_of_rows<F: Field>(ring: &Ring<F>, rows: &[Vec<Polynomial<F>>], t: usize) -> Result<Vec<Polynomial<F>>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(AlgebraError::ShapeMismatch("ragged matrix".into()));
    }
    let m = GradedMatrix { ring: ring.clone(), target: vec![0; rows.len()], source: vec![0; ncols], rows: rows.to_vec() };
    m.minors(t)
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
