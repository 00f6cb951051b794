//! Named ideals and explicit complexes: a complete intersection of two
//! curves meeting along lines, the `(1,6,8)` curve, two families of curves
//! whose radicals have much larger regularity, two monomial surfaces in
//! `P^5`, and the sumset counts behind the Hilbert function of
//! `(1, mn², mn(n+1), m(n+1)²)`.

use serde::Serialize;

use crate::complex::GradedComplex;
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::ideal::{monomial_curve_ideal, toric_kernel, Ideal};
use crate::matrix::GradedMatrix;
use crate::modules::ext_cyclic;
use crate::poly::{Polynomial, Ring};
use crate::resolution::syzygies;

fn mono<F: Field>(r: &Ring<F>, exps: &[u64]) -> Result<Polynomial<F>> {
    let e: Vec<u16> = exps
        .iter()
        .map(|&v| u16::try_from(v).map_err(|_| AlgebraError::ParameterViolation(format!("exponent {v} too large"))))
        .collect::<Result<_>>()?;
    Ok(r.monomial(&e))
}

fn binom<F: Field>(r: &Ring<F>, a: &[u64], b: &[u64]) -> Result<Polynomial<F>> {
    mono(r, a)?.sub(&mono(r, b)?)
}

/// The generator row `g` with `g · m = 0`, i.e. the presented ideal when `m`
/// is a first syzygy matrix. Normalized so that its first entry is monic.
pub fn generator_row<F: Field>(m: &GradedMatrix<F>) -> Result<GradedMatrix<F>> {
    let kernel = syzygies(&m.dual(0))?;
    if kernel.ncols() != 1 {
        return Err(AlgebraError::ShapeMismatch(format!(
            "left kernel has {} generators, expected one",
            kernel.ncols()
        )));
    }
    let mut entries = kernel.column(0);
    let lead = entries.iter().find(|p| !p.is_zero()).ok_or(AlgebraError::ZeroPolynomial)?;
    let (c, _) = lead.leading_term()?;
    let inv = m.ring().field().inv(c).expect("nonzero leading coefficient");
    for e in &mut entries {
        *e = e.scale(&inv);
    }
    GradedMatrix::new(m.ring(), vec![0], m.target().to_vec(), vec![entries])
}

/// The ideal generated by the entries of a `1 × k` matrix.
pub fn ideal_of_row<F: Field>(row: &GradedMatrix<F>) -> Result<Ideal<F>> {
    Ideal::new(row.ring(), row.rows()[0].clone())
}

/// `I = (y²z − x²t, z⁴ − xt³)`: the `(1,6,8)` curve, the line `x = z = 0` and a
/// triple structure on `z = t = 0`.
pub struct ThreeComponentCi<F: Field> {
    pub ring: Ring<F>,
    pub i: Ideal<F>,
    /// `I : (z, t)`.
    pub j: Ideal<F>,
    /// The radical, `J + (x⁴z² − xy⁴t)`.
    pub k: Ideal<F>,
    /// Hilbert–Burch matrix of the residual to the line `x = z = 0`.
    pub residual_xz: GradedMatrix<F>,
    /// Hilbert–Burch matrix of `J`.
    pub eta: GradedMatrix<F>,
    /// `γ_J, η`.
    pub j_complex: GradedComplex<F>,
    /// `γ_K, ψ, φ` with `ψ` 4×4 and `φ` 4×1.
    pub k_complex: GradedComplex<F>,
}

pub fn three_component_ci<F: Field>(field: F) -> Result<ThreeComponentCi<F>> {
    let r = Ring::new(field, &["x", "y", "z", "t"])?;
    let p = |s: &str| r.parse(s);
    let i = Ideal::parse(&r, &["y^2*z - x^2*t", "z^4 - x*t^3"])?;
    let j = i.add_generators(&[p("x*y^2*t^2 - x^2*z^3")?])?;
    let k = j.add_generators(&[p("x^4*z^2 - x*y^4*t")?])?;
    let rows = |m: &[[&str; 2]]| -> Result<Vec<Vec<Polynomial<F>>>> {
        m.iter().map(|row| row.iter().map(|s| p(s)).collect()).collect()
    };
    let residual_xz = GradedMatrix::new(&r, vec![3, 4, 5], vec![6, 6], rows(&[["z^3", "t^3"], ["y^2", "x*t"], ["x", "z"]])?)?;
    let eta = GradedMatrix::new(&r, vec![3, 4, 5], vec![6, 6], rows(&[["x*t^2", "z^3"], ["x^2", "y^2"], ["z", "t"]])?)?;
    let psi_rows: Vec<Vec<Polynomial<F>>> = [
        ["x*t^2", "-z^3", "x*y^2*t", "-x^2*z^2"],
        ["-x^2", "y^2", "0", "0"],
        ["z", "-t", "-x^2", "y^2"],
        ["0", "0", "z", "-t"],
    ]
    .iter()
    .map(|row| row.iter().map(|s| p(s)).collect())
    .collect::<Result<_>>()?;
    let psi = GradedMatrix::new(&r, vec![3, 4, 5, 6], vec![6, 6, 7, 7], psi_rows)?;
    let phi = GradedMatrix::new(&r, vec![6, 6, 7, 7], vec![8], vec![vec![p("-y^2")?], vec![p("-x^2")?], vec![p("t")?], vec![p("z")?]])?;
    let j_complex = GradedComplex::new(vec![generator_row(&eta)?, eta.clone()])?;
    let k_complex = GradedComplex::new(vec![generator_row(&psi)?, psi, phi])?;
    Ok(ThreeComponentCi { ring: r, i, j, k, residual_xz, eta, j_complex, k_complex })
}

/// The `(1,6,8)` curve with its displayed minimal resolution, together with
/// `zJ` built from [`three_component_ci`].
pub struct Curve168<F: Field> {
    pub ring: Ring<F>,
    pub b: Ideal<F>,
    pub psi: GradedMatrix<F>,
    pub phi: GradedMatrix<F>,
    /// Generator row, `ψ`, `φ`.
    pub complex: GradedComplex<F>,
    pub z_j: Ideal<F>,
}

pub fn curve_168<F: Field>(field: F) -> Result<Curve168<F>> {
    let base = three_component_ci(field)?;
    let r = base.ring.clone();
    let p = |s: &str| r.parse(s);
    let b = monomial_curve_ideal(&r, &[1, 6, 8])?;
    let psi_rows: Vec<Vec<Polynomial<F>>> = [
        ["t^2", "-y^2*t", "x*z^2", "z^3", "y^4", "x^3*z"],
        ["z", "x^2", "-y^2", "x*t", "0", "0"],
        ["x", "0", "0", "y^2", "0", "0"],
        ["0", "z", "-t", "0", "x^2", "y^2"],
        ["0", "0", "0", "0", "z", "t"],
    ]
    .iter()
    .map(|row| row.iter().map(|s| p(s)).collect())
    .collect::<Result<_>>()?;
    let psi = GradedMatrix::new(&r, vec![3, 4, 4, 5, 6], vec![5, 6, 6, 6, 7, 7], psi_rows)?;
    let phi_rows: Vec<Vec<Polynomial<F>>> = [["y^2", "0"], ["t", "y^2"], ["z", "x^2"], ["-x", "0"], ["0", "t"], ["0", "-z"]]
        .iter()
        .map(|row| row.iter().map(|s| p(s)).collect())
        .collect::<Result<_>>()?;
    let phi = GradedMatrix::new(&r, vec![5, 6, 6, 6, 7, 7], vec![7, 8], phi_rows)?;
    let complex = GradedComplex::new(vec![generator_row(&psi)?, psi.clone(), phi.clone()])?;
    let z_j = base.j.scaled(&p("z")?)?;
    Ok(Curve168 { ring: r, b, psi, phi, complex, z_j })
}

/// Closed-form values a family instance is expected to satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmExpectations {
    pub reg_ideal: i64,
    pub reg_radical: i64,
    pub degree_radical: i64,
    pub reg_z_ideal: i64,
    pub curve: [u32; 3],
}

/// `I_{m,n} = (x^m t − y^m z, z^{n+2} − x t^{n+1})` and the explicit
/// resolution `γ, ψ, φ` of its radical `I_C ∩ (x,z) ∩ (z,t)`.
pub struct CmFamily<F: Field> {
    pub m: u64,
    pub n: u64,
    pub ring: Ring<F>,
    pub ideal: Ideal<F>,
    /// `Im γ`, the candidate radical.
    pub radical: Ideal<F>,
    pub curve: Ideal<F>,
    pub line_xz: Ideal<F>,
    pub line_zt: Ideal<F>,
    pub gamma: GradedMatrix<F>,
    pub psi: GradedMatrix<F>,
    /// `None` when `n = 1` (the resolution has length two).
    pub phi: Option<GradedMatrix<F>>,
    pub complex: GradedComplex<F>,
    pub expected: CmExpectations,
}

pub fn cm_family<F: Field>(field: F, m: u64, n: u64) -> Result<CmFamily<F>> {
    if m < 1 || n < 1 {
        return Err(AlgebraError::ParameterViolation(format!("need m, n >= 1, got ({m}, {n})")));
    }
    let r = Ring::new(field, &["x", "y", "z", "t"])?;
    let mo = |e: [u64; 4]| mono(&r, &e);
    let bi = |a: [u64; 4], b: [u64; 4]| binom(&r, &a, &b);
    let ideal = Ideal::new(&r, vec![bi([m, 0, 0, 1], [0, m, 1, 0])?, bi([0, 0, n + 2, 0], [1, 0, 0, n + 1])?])?;

    // f_i = x^{im} z^{n+2-i} − x y^{im} t^{n-i+1}
    let f = |i: u64| bi([i * m, 0, n + 2 - i, 0], [1, i * m, 0, n - i + 1]);
    let mut gens = vec![bi([0, m, 1, 0], [m, 0, 0, 1])?];
    let mut gen_twists = vec![(m + 1) as i64];
    for i in 0..=n {
        gens.push(f(i)?);
        gen_twists.push((m * i + n - i + 2) as i64);
    }
    let gamma = GradedMatrix::new(&r, vec![0], gen_twists.clone(), vec![gens.clone()])?;

    let zero = r.zero();
    let (c, c_m) = ([mo([0, 0, 0, 1])?, mo([0, 0, 1, 0])?], [mo([0, m, 0, 0])?.neg(), mo([m, 0, 0, 0])?.neg()]);
    let (l, l_m) = ([mo([0, 0, 1, 0])?, mo([0, 0, 0, 1])?.neg()], [mo([m, 0, 0, 0])?.neg(), mo([0, m, 0, 0])?]);
    let nn = n as usize;
    let mut psi_rows = vec![vec![zero.clone(); 2 * nn]; nn + 2];
    let mut psi_src = Vec::with_capacity(2 * nn);
    for i in 1..=n {
        let col = 2 * (i as usize - 1);
        psi_rows[0][col] = mo([1, (i - 1) * m, 0, n - i + 1])?;
        psi_rows[0][col + 1] = mo([(i - 1) * m, 0, n + 2 - i, 0])?.neg();
        for (k, block) in [(i as usize, &l_m), (i as usize + 1, &l)] {
            psi_rows[k][col] = block[0].clone();
            psi_rows[k][col + 1] = block[1].clone();
        }
        let tw = (m * i + n - i + 3) as i64;
        psi_src.extend([tw, tw]);
    }
    let psi = GradedMatrix::new(&r, gen_twists, psi_src.clone(), psi_rows)?;

    let phi = if n >= 2 {
        let mut rows = vec![vec![zero.clone(); nn - 1]; 2 * nn];
        let mut src = Vec::with_capacity(nn - 1);
        for j in 0..nn - 1 {
            for s in 0..2 {
                rows[2 * j + s][j] = c_m[s].clone();
                rows[2 * (j + 1) + s][j] = c[s].clone();
            }
            let i = j as u64 + 2;
            src.push((m * i + n - i + 4) as i64);
        }
        Some(GradedMatrix::new(&r, psi_src, src, rows)?)
    } else {
        None
    };
    let mut maps = vec![gamma.clone(), psi.clone()];
    maps.extend(phi.clone());
    let complex = GradedComplex::new(maps)?;

    let curve_degrees = [1, (m * (n + 1)) as u32, (m * (n + 2)) as u32];
    let curve = monomial_curve_ideal(&r, &curve_degrees)?;
    let mi = m as i64;
    let ni = n as i64;
    Ok(CmFamily {
        m,
        n,
        radical: Ideal::new(&r, gens)?,
        curve,
        line_xz: Ideal::parse(&r, &["x", "z"])?,
        line_zt: Ideal::parse(&r, &["z", "t"])?,
        ring: r,
        ideal,
        gamma,
        psi,
        phi,
        complex,
        expected: CmExpectations {
            reg_ideal: mi + ni + 2,
            reg_radical: mi * ni + 2,
            degree_radical: mi * (ni + 2) + 2,
            reg_z_ideal: mi + ni + 3,
            curve: curve_degrees,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P4Expectations {
    pub reg_j: i64,
    pub reg_ci: i64,
    pub degree_j: i64,
    /// Multiplicity of the `(z,u,v)`-primary component, `2n(n+1)`.
    pub mu: i64,
    pub reg_curve: i64,
    pub reg_radical: i64,
    pub reg_z_j: i64,
    pub curve: [u32; 4],
}

/// The curve `(1, mn², mn(n+1), m(n+1)²)` in `P^4` together with the complete
/// intersection `𝔍 ⊂ I_C`, the colon `J_{m,n}` and the two special binomials.
pub struct P4Family<F: Field> {
    pub m: u64,
    pub n: u64,
    pub ring: Ring<F>,
    pub ci: Ideal<F>,
    /// `(x, z^{n+1}, u²)`, the ideal `J = 𝔍 : colon_by`.
    pub colon_by: Ideal<F>,
    /// `𝔍 + (y^m v^n − x^{m−1} z u^{n−1} v)`.
    pub j: Ideal<F>,
    pub curve: Ideal<F>,
    pub m1: Polynomial<F>,
    pub m2: Polynomial<F>,
    /// `(z, u, v)`.
    pub l: Ideal<F>,
    pub expected: P4Expectations,
}

pub fn p4_family<F: Field>(field: F, m: u64, n: u64) -> Result<P4Family<F>> {
    if m < 1 || n < 3 {
        return Err(AlgebraError::ParameterViolation(format!("need m >= 1, n >= 3, got ({m}, {n})")));
    }
    let r = Ring::new(field, &["x", "y", "z", "u", "v"])?;
    let bi = |a: [u64; 5], b: [u64; 5]| binom(&r, &a, &b);
    let ci = Ideal::new(
        &r,
        vec![
            bi([0, m, 0, 2, 0], [m, 0, 1, 0, 1])?,
            bi([0, 0, n + 1, 0, 0], [1, 0, 0, n, 0])?,
            bi([0, 0, 0, n + 1, 0], [1, 0, 0, 0, n])?,
        ],
    )?;
    let colon_by = Ideal::new(&r, vec![mono(&r, &[1, 0, 0, 0, 0])?, mono(&r, &[0, 0, n + 1, 0, 0])?, mono(&r, &[0, 0, 0, 2, 0])?])?;
    let j = ci.add_generators(&[bi([0, m, 0, 0, n], [m - 1, 0, 1, n - 1, 1])?])?;
    let curve_degrees = [1, (m * n * n) as u32, (m * n * (n + 1)) as u32, (m * (n + 1) * (n + 1)) as u32];
    let curve = monomial_curve_ideal(&r, &curve_degrees)?;
    let e1 = m * n * n;
    let e2 = m * (n * n - 2 * n - 1);
    let m1 = bi([0, e1, 0, 0, 0], [e1 - 1, 0, 1, 0, 0])?;
    let m2 = bi([0, e2, 0, 0, 1], [e2 - 1, 0, 2, 0, 0])?;
    let l = Ideal::parse(&r, &["z", "u", "v"])?;
    let (mi, ni) = (m as i64, n as i64);
    Ok(P4Family {
        m,
        n,
        ring: r,
        ci,
        colon_by,
        j,
        curve,
        m1,
        m2,
        l,
        expected: P4Expectations {
            reg_j: mi + 2 * ni + 1,
            reg_ci: mi + 2 * ni + 2,
            degree_j: (mi + 2) * (ni + 1) * (ni + 1) - 2 * (ni + 1),
            mu: 2 * ni * (ni + 1),
            reg_curve: mi * ni * ni,
            reg_radical: mi * (ni * ni - 2 * ni - 1) + 1,
            reg_z_j: mi + 2 * ni + 2,
            curve: curve_degrees,
        },
    })
}

/// Two monomial surfaces in `P^5`, given by their affine parametrizations
/// `(x₁, …, x₅) = (a^p b^q, …)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Surface {
    /// `(a⁵, b⁶, a⁴b, ab², a²b⁵)`: `H²_m(ω)` has socle in degrees −1, −1, 0, 1.
    SocleWitness,
    /// `(a¹², b⁸, ab⁷, a⁵b, a⁹b⁴)`: regularity 32, and truncating in degree
    /// ≤ 21 raises the depth.
    DepthJump,
}

impl Surface {
    pub fn parametrization(self) -> [(u32, u32); 5] {
        match self {
            Surface::SocleWitness => [(5, 0), (0, 6), (4, 1), (1, 2), (2, 5)],
            Surface::DepthJump => [(12, 0), (0, 8), (1, 7), (5, 1), (9, 4)],
        }
    }
}

/// The homogeneous prime of the projective closure, in `k[X0, …, X5]`: the
/// affine toric kernel homogenized with respect to `X0`.
pub fn surface_ideal<F: Field>(field: F, which: Surface) -> Result<Ideal<F>> {
    let ch = field.characteristic();
    if ch != 0 && ch != 101 {
        return Err(AlgebraError::InvalidCharacteristic(ch));
    }
    let affine_ring = Ring::new(field.clone(), &["X1", "X2", "X3", "X4", "X5"])?;
    let affine = toric_kernel(&affine_ring, &which.parametrization())?;
    let proj = affine.homogenize("X0")?;
    let target = Ring::new(field, &["X0", "X1", "X2", "X3", "X4", "X5"])?;
    // The homogenizing variable was appended last.
    let positions = [1, 2, 3, 4, 5, 0];
    Ideal::new(&target, proj.gens().iter().map(|g| g.embed(&target, &positions)).collect())
}

/// The ideal generated by the elements of degree `≤ d`.
pub fn truncate_ideal<F: Field>(ideal: &Ideal<F>, d: u32) -> Result<Ideal<F>> {
    ideal.below_degree(d + 1)
}

/// Parameters of the sumset `α · {0, 1, mn², mn(n+1), m(n+1)²}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SumsetParams {
    pub m: u64,
    pub n: u64,
}

impl SumsetParams {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(AlgebraError::ParameterViolation(format!("need m, n >= 1, got ({m}, {n})")));
        }
        Ok(SumsetParams { m, n })
    }

    pub fn base(&self) -> [u64; 5] {
        let (m, n) = (self.m, self.n);
        [0, 1, m * n * n, m * n * (n + 1), m * (n + 1) * (n + 1)]
    }

    /// Smallest `α` where the closed form applies: `mn + m + 2n`.
    pub fn threshold(&self) -> u64 {
        self.m * self.n + self.m + 2 * self.n
    }

    /// `|S_α| = 0` from `mn² − 1` on.
    pub fn vanishing_from(&self) -> u64 {
        self.m * self.n * self.n - 1
    }

    /// The curve whose Hilbert function these sumsets count.
    pub fn curve_degrees(&self) -> [u32; 4] {
        let b = self.base();
        [b[1] as u32, b[2] as u32, b[3] as u32, b[4] as u32]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CountMode {
    Oracle,
    Closed,
}

/// Number of distinct sums of `alpha` elements of `base` (with repetition),
/// by iterated shift-or over a bitset of reachable sums.
pub fn sumset_size(base: &[u64], alpha: u64) -> u64 {
    let max = base.iter().copied().max().unwrap_or(0);
    let bits = (alpha * max + 1) as usize;
    let words = bits.div_ceil(64);
    let mut cur = vec![0u64; words];
    cur[0] = 1;
    for _ in 0..alpha {
        let mut next = vec![0u64; words];
        for &b in base {
            let (ws, bs) = ((b / 64) as usize, (b % 64) as u32);
            for i in (0..words).rev() {
                if i < ws {
                    break;
                }
                let lo = cur[i - ws] << bs;
                let hi = if bs > 0 && i > ws { cur[i - ws - 1] >> (64 - bs) } else { 0 };
                next[i] |= lo | hi;
            }
        }
        cur = next;
    }
    cur.iter().map(|w| w.count_ones() as u64).sum()
}

/// `|S_α|`, the number of missing exponents: `(a+1)μ − C(a+1, 2)(m(2n+1) − 1)`
/// with `μ = mn² − 1 − α`, `a = ⌊μ / (m(2n+1) − 1)⌋`, and `0` once `μ ≤ 0`.
pub fn gap_count(params: &SumsetParams, alpha: u64) -> u64 {
    let (m, n) = (params.m, params.n);
    if alpha >= params.vanishing_from() {
        return 0;
    }
    let mu = params.vanishing_from() - alpha;
    let step = m * (2 * n + 1) - 1;
    let a = mu / step;
    (a + 1) * mu - (a + 1) * a / 2 * step
}

pub fn sumset_count(params: &SumsetParams, alpha: u64, mode: CountMode) -> Result<u64> {
    match mode {
        CountMode::Oracle => Ok(sumset_size(&params.base(), alpha)),
        CountMode::Closed => {
            if alpha < params.threshold() {
                return Err(AlgebraError::OutOfRange(format!(
                    "closed form needs alpha >= {}, got {alpha}",
                    params.threshold()
                )));
            }
            let (m, n) = (params.m as i128, params.n as i128);
            let a = alpha as i128;
            let sq = (n + 1) * (n + 1);
            let v = m * sq * a - (m * (m - 1) / 2 * sq + m * (n * n - 1)) - gap_count(params, alpha) as i128;
            Ok(v as u64)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapRow {
    pub alpha: u64,
    pub formula: u64,
    pub h1: i64,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub m: u64,
    pub n: u64,
    pub rows: Vec<GapRow>,
    /// `Σ_α dim H¹_m(R/I_C)_α`.
    pub total_h1_length: i64,
    /// `⌈m² n⁵ / 4⌉`.
    pub length_bound: i64,
    pub bound_holds: bool,
}

/// Compares `|S_α|` with `dim H¹_m(R/I_C)_α` computed through local duality,
/// and the total length of `H¹_m(R/I_C)` with `m²n⁵/4`.
pub fn s_alpha_vs_h1<F: Field>(field: F, m: u64, n: u64, alphas: impl IntoIterator<Item = u64>) -> Result<GapReport> {
    let params = SumsetParams::new(m, n)?;
    let r = Ring::new(field, &["x", "y", "z", "u", "v"])?;
    let curve = monomial_curve_ideal(&r, &params.curve_degrees())?;
    let nv = r.nvars();
    let ext = ext_cyclic(&curve, nv - 1, nv as i64)?;
    let hs = ext.hilbert_series();
    let rows = alphas
        .into_iter()
        .map(|alpha| {
            let formula = gap_count(&params, alpha);
            let h1 = hs.hilbert_function(-(alpha as i64));
            GapRow { alpha, formula, h1, agree: formula as i64 == h1 }
        })
        .collect();
    let (_, coeffs, dim) = hs.reduced();
    if dim > 0 {
        return Err(AlgebraError::ParameterViolation("H^1 of the curve does not have finite length".into()));
    }
    let total: i64 = coeffs.iter().sum();
    let bound = (m * m * n.pow(5)).div_ceil(4) as i64;
    Ok(GapReport { m, n, rows, total_h1_length: total, length_bound: bound, bound_holds: total >= bound })
}
