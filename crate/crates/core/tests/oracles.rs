//! Derived values against computations that avoid Gröbner bases entirely:
//! semigroup counts for monomial curves, substitution into parametrizations,
//! and product formulas for complete intersections.

use gradedalg::families::{sumset_size, SumsetParams};
use gradedalg::hilbert::{hilbert_function, hilbert_numerator};
use gradedalg::modules::PresentedModule;
use gradedalg::resolution::{regularity, resolve_quotient};
use gradedalg::{buchsbaum_eisenbud, monomial_curve_ideal, GradedComplex, GradedMatrix, HilbertSeries, Ideal, Rationals, Ring};

fn semigroup(gens: &[u64], up_to: u64) -> Vec<bool> {
    let mut member = vec![false; up_to as usize + 1];
    member[0] = true;
    for k in 1..=up_to as usize {
        member[k] = gens.iter().any(|&g| g as usize <= k && member[k - g as usize]);
    }
    member
}

/// `dim H⁰(O_C(α))` for the monomial curve `(s^d : s^{d−a_i} t^{a_i})`: exponents
/// `j ∈ [0, dα]` with `j` in the semigroup of the `a_i` and `dα − j` in the
/// semigroup of the `d − a_i`.
fn sections(degrees: &[u64], alpha: u64) -> i64 {
    let d = *degrees.last().unwrap();
    let top = d * alpha;
    let near = semigroup(degrees, top);
    let far_gens: Vec<u64> = degrees.iter().map(|&a| d - a).filter(|&g| g > 0).chain([d]).collect();
    let far = semigroup(&far_gens, top);
    (0..=top).filter(|&j| near[j as usize] && far[(top - j) as usize]).count() as i64
}

fn curve_ring(n: usize) -> Ring<Rationals> {
    let vars: &[&str] = if n == 4 { &["x", "y", "z", "t"] } else { &["x", "y", "z", "u", "v"] };
    Ring::new(Rationals, vars).unwrap()
}

#[test]
fn hilbert_function_of_monomial_curves_is_a_sumset_count() {
    for degrees in [vec![1u32, 6, 8], vec![1, 9, 12, 16], vec![2, 3, 7]] {
        let r = curve_ring(degrees.len() + 1);
        let c = monomial_curve_ideal(&r, &degrees).unwrap();
        let mut base = vec![0u64];
        base.extend(degrees.iter().map(|&a| a as u64));
        for alpha in 0..=14u64 {
            assert_eq!(hilbert_function(&c, alpha as i64).unwrap(), sumset_size(&base, alpha) as i64, "{degrees:?} at {alpha}");
        }
    }
}

#[test]
fn curve_generators_vanish_on_the_parametrization() {
    let degrees = [1u32, 6, 8];
    let r = curve_ring(4);
    let st = Ring::new(Rationals, &["s", "t"]).unwrap();
    let images: Vec<_> = ["s^8", "s^7*t", "s^2*t^6", "t^8"].iter().map(|p| st.parse(p).unwrap()).collect();
    for g in monomial_curve_ideal(&r, &degrees).unwrap().gens() {
        assert!(g.substitute(&st, &images).unwrap().is_zero(), "{g}");
    }
}

/// `H¹_m(R/I_C)` for the `(1,9,12,16)` curve: sections minus Hilbert function,
/// both from semigroup counts, against the local-duality computation.
#[test]
fn first_local_cohomology_of_the_p4_curve() {
    let degrees = [1u64, 9, 12, 16];
    let params = SumsetParams::new(1, 3).unwrap();
    assert_eq!(params.curve_degrees(), [1, 9, 12, 16]);
    let oracle: Vec<i64> = (0..=10u64)
        .map(|a| sections(&degrees, a) - sumset_size(&params.base(), a) as i64)
        .collect();
    assert_eq!(oracle, [0, 4, 9, 8, 4, 3, 2, 1, 0, 0, 0]);
    assert_eq!(oracle.iter().sum::<i64>(), 31);

    let r = curve_ring(5);
    let c = monomial_curve_ideal(&r, &[1, 9, 12, 16]).unwrap();
    let computed = PresentedModule::cyclic(&c).unwrap().local_cohomology_dims(1, 0..=10).unwrap();
    assert_eq!(computed, oracle);
}

/// With `L = (z,u,v)`, `R/(I_C + L) = k[x,y]/(y⁹)`, whose `H¹` in degree 3 is
/// 5-dimensional while `H¹(R/I_C)_3` is 8-dimensional; so `H¹(R/(I_C ∩ L))_3 ≠ 0`
/// and `reg(I_C ∩ L) ≥ 5`.
#[test]
fn intersection_with_the_plane_has_regularity_five() {
    let r = curve_ring(5);
    let c = monomial_curve_ideal(&r, &[1, 9, 12, 16]).unwrap();
    let l = Ideal::parse(&r, &["z", "u", "v"]).unwrap();
    let sum = c.sum(&l).unwrap();
    assert!(sum.same_ideal(&Ideal::parse(&r, &["z", "u", "v", "y^9"]).unwrap()).unwrap());
    let h1 = |i: &Ideal<Rationals>| PresentedModule::cyclic(i).unwrap().local_cohomology_dims(1, [3]).unwrap()[0];
    assert_eq!((h1(&c), h1(&sum)), (8, 5));
    let meet = c.intersect(&l).unwrap();
    assert!(h1(&meet) > 0);
    assert_eq!(regularity(&meet).unwrap(), Some(5));
}

#[test]
fn complete_intersection_series_is_a_product() {
    let r = curve_ring(4);
    let i = Ideal::parse(&r, &["y^2*z - x^2*t", "z^4 - x*t^3"]).unwrap();
    // (1 - t^3)(1 - t^4)
    assert_eq!(hilbert_numerator(&i).unwrap(), HilbertSeries::new(4, 0, vec![1, 0, 0, -1, -1, 0, 0, 1]));
    let res = resolve_quotient(&i).unwrap();
    assert_eq!(res.modules(), [vec![0], vec![3, 4], vec![7]]);
}

#[test]
fn koszul_complex_is_exact() {
    let r = Ring::new(Rationals, &["x", "y", "z"]).unwrap();
    let p = |s: &str| r.parse(s).unwrap();
    let d1 = GradedMatrix::new(&r, vec![0], vec![1, 1, 1], vec![vec![p("x"), p("y"), p("z")]]).unwrap();
    let d2 = GradedMatrix::new(
        &r,
        vec![1, 1, 1],
        vec![2, 2, 2],
        vec![vec![p("-y"), p("-z"), p("0")], vec![p("x"), p("0"), p("-z")], vec![p("0"), p("x"), p("y")]],
    )
    .unwrap();
    let d3 = GradedMatrix::new(&r, vec![2, 2, 2], vec![3], vec![vec![p("z")], vec![p("-y")], vec![p("x")]]).unwrap();
    let report = buchsbaum_eisenbud(&GradedComplex::new(vec![d1, d2, d3]).unwrap()).unwrap();
    assert!(report.composition_zero && report.verdict);
    let ranks: Vec<usize> = report.positions.iter().map(|p| p.rank_map).collect();
    assert_eq!(ranks, [1, 2, 1]);
}

/// `depth R/I` from the resolution agrees with the first nonvanishing local
/// cohomology.
#[test]
fn depth_is_first_nonvanishing_local_cohomology() {
    let r = curve_ring(4);
    let cases = [
        (vec!["y^2*z - x^2*t", "z^4 - x*t^3"], 2),
        (vec!["x*z", "y*z"], 2),
        // embedded primes (x,y) and (x,y,z)
        (vec!["x^2", "x*y"], 2),
        (vec!["x^2", "x*y", "x*z"], 1),
    ];
    for (gens, depth) in cases {
        let i = Ideal::parse(&r, &gens).unwrap();
        assert_eq!(gradedalg::resolution::depth_of_quotient(&i).unwrap(), depth, "{gens:?}");
        let m = PresentedModule::cyclic(&i).unwrap();
        let first = (0..=4)
            .find(|&k| m.local_cohomology_dims(k, -10..=10).unwrap().iter().any(|&d| d != 0))
            .unwrap();
        assert_eq!(first as i64, depth, "{gens:?}");
    }
}
