mod common;

use common::{form, homogeneous_ideal, poly, raw_form, raw_ideal, raw_poly, ring};
use gradedalg::complex::matrix_rank;
use gradedalg::families::{gap_count, sumset_count, sumset_size, CountMode, SumsetParams};
use gradedalg::hilbert::{hilbert_function, hilbert_function_by_count};
use gradedalg::modules::PresentedModule;
use gradedalg::{Field, GradedMatrix, Ideal, Monomial, MonomialOrder, Polynomial, PrimeField, Ring};
use proptest::prelude::*;

fn mono(exps: &[u16]) -> Monomial {
    Monomial::from_exponents(exps)
}

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::GrevLex,
        MonomialOrder::Lex,
        MonomialOrder::Block { split: 1 },
        MonomialOrder::Weighted { weights: vec![3, 1, 2] },
    ]
}

/// Rank over `F_p` of a constant matrix, by elimination.
fn constant_rank(field: &PrimeField, mut rows: Vec<Vec<u32>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = field.inv(&rows[rank][c]).unwrap();
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let factor = field.mul(&rows[r][c], &inv);
                for k in 0..ncols {
                    let sub = field.mul(&factor, &rows[rank][k]);
                    rows[r][k] = field.sub(&rows[r][k], &sub);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn evaluate(field: &PrimeField, p: &Polynomial<PrimeField>, point: &[u32]) -> u32 {
    p.terms().iter().fold(0, |acc, t| {
        let v = t.mon.exponents().iter().zip(point).fold(t.coef, |v, (&e, &x)| {
            (0..e).fold(v, |v, _| field.mul(&v, &x))
        });
        field.add(&acc, &v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in raw_poly(3, 4), b in raw_poly(3, 4), c in raw_poly(3, 4)) {
        let r = ring(&["x", "y", "z"]);
        let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b.mul(&c).unwrap()).unwrap(), a.mul(&b).unwrap().mul(&c).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.mul(&r.one()).unwrap(), a.clone());
        prop_assert_eq!(a.pow(2), a.mul(&a).unwrap());
    }

    #[test]
    fn display_parses_back(a in raw_poly(3, 5)) {
        let r = ring(&["x", "y", "z"]);
        let p = poly(&r, &a);
        prop_assert_eq!(r.parse(&p.to_string()).unwrap(), p.clone());
        let fp = Ring::new(PrimeField::new(101).unwrap(), &["x", "y", "z"]).unwrap();
        let q = poly(&fp, &a);
        prop_assert_eq!(fp.parse(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn monomial_orders_are_admissible(a in prop::collection::vec(0u16..5, 3), b in prop::collection::vec(0u16..5, 3), c in prop::collection::vec(0u16..5, 3)) {
        let (a, b, c) = (mono(&a), mono(&b), mono(&c));
        for o in orders() {
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            prop_assert_ne!(o.cmp(&mono(&[0, 0, 0]), &a), std::cmp::Ordering::Greater);
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
            if a != b {
                prop_assert_ne!(o.cmp(&a, &b), std::cmp::Ordering::Equal);
            }
        }
    }

    #[test]
    fn monomial_membership_is_divisibility(gens in prop::collection::vec(prop::collection::vec(0u16..4, 3), 1..4), probe in prop::collection::vec(0u16..6, 3)) {
        let r = ring(&["x", "y", "z"]);
        let ideal = Ideal::new(&r, gens.iter().map(|e| r.monomial(e)).collect()).unwrap();
        let divides = gens.iter().any(|g| mono(g).divides(&mono(&probe)));
        prop_assert_eq!(ideal.contains(&r.monomial(&probe)).unwrap(), divides);
    }

    #[test]
    fn normal_form_is_a_reduced_representative(raw in prop::collection::vec(raw_poly(3, 3), 1..3), f in raw_poly(3, 4)) {
        let r = ring(&["x", "y", "z"]);
        let gens: Vec<_> = raw.iter().map(|g| poly(&r, g)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(&r, gens).unwrap();
        let f = poly(&r, &f);
        let nf = ideal.normal_form(&f).unwrap();
        prop_assert!(ideal.contains(&f.sub(&nf).unwrap()).unwrap());
        prop_assert_eq!(ideal.normal_form(&nf).unwrap(), nf.clone());
        let leads = ideal.gb().leading_monomials();
        for t in nf.terms() {
            prop_assert!(!leads.iter().any(|m| m.divides(&t.mon)));
        }
    }

    #[test]
    fn hilbert_series_agrees_with_monomial_count(raw in raw_ideal(3, 3, 3, 3)) {
        let r = ring(&["x", "y", "z"]);
        let Some(i) = homogeneous_ideal(&r, &raw) else { return Ok(()) };
        for d in 0..=7u32 {
            prop_assert_eq!(hilbert_function(&i, d as i64).unwrap(), hilbert_function_by_count(&i, d).unwrap() as i64);
        }
    }

    #[test]
    fn intersection_and_product_are_nested(a in raw_ideal(3, 2, 2, 2), b in raw_ideal(3, 2, 2, 2)) {
        let r = ring(&["x", "y", "z"]);
        let (Some(i), Some(j)) = (homogeneous_ideal(&r, &a), homogeneous_ideal(&r, &b)) else { return Ok(()) };
        let meet = i.intersect(&j).unwrap();
        prop_assert!(i.contains_ideal(&meet).unwrap() && j.contains_ideal(&meet).unwrap());
        prop_assert!(meet.contains_ideal(&i.product(&j).unwrap()).unwrap());
        let colon = meet.quotient(&j).unwrap();
        prop_assert!(colon.contains_ideal(&i).unwrap());
    }

    #[test]
    fn resolutions_are_minimal_complexes(raw in raw_ideal(4, 3, 3, 3)) {
        let r = ring(&["x", "y", "z", "t"]);
        let Some(i) = homogeneous_ideal(&r, &raw) else { return Ok(()) };
        let res = gradedalg::resolution::resolve_quotient(&i).unwrap();
        prop_assert!(res.is_complex().unwrap());
        prop_assert!(res.is_minimal());
        prop_assert!(res.length() <= 4);
        let gens = i.generator_degrees().unwrap().len();
        prop_assert_eq!(res.modules()[1].len(), gens);
    }

    #[test]
    fn rank_matches_generic_evaluation(
        target in prop::collection::vec(0i64..2, 1..4),
        source in prop::collection::vec(1i64..4, 1..4),
        raw in prop::collection::vec(raw_poly(3, 2), 9),
        points in prop::collection::vec(prop::collection::vec(1u32..32000, 3), 3),
        zero_mask in prop::collection::vec(any::<bool>(), 9),
    ) {
        let field = PrimeField::new(32003).unwrap();
        let r = Ring::new(field.clone(), &["x", "y", "z"]).unwrap();
        let rows: Vec<Vec<_>> = target.iter().enumerate().map(|(i, &t)| {
            source.iter().enumerate().map(|(j, &s)| {
                let k = (i * 3 + j) % 9;
                if zero_mask[k] || s < t { r.zero() } else { form(&r, &raw[k], (s - t) as u16) }
            }).collect()
        }).collect();
        let m = GradedMatrix::new(&r, target.clone(), source.clone(), rows.clone()).unwrap();
        let generic = points.iter().map(|pt| {
            constant_rank(&field, rows.iter().map(|row| row.iter().map(|p| evaluate(&field, p, pt)).collect()).collect())
        }).max().unwrap();
        prop_assert_eq!(matrix_rank(&m).unwrap().rank, generic);
    }

    /// For a plane curve `f` of degree `d`, `H¹_m(R/f)_α` has dimension
    /// `d − HF(R/f, α)`: the curve is a 0-dimensional scheme of degree `d`.
    #[test]
    fn local_cohomology_of_plane_curves((d, raw) in raw_form(2, 3, 5)) {
        let r = ring(&["x", "y"]);
        let f = form(&r, &raw, d);
        prop_assume!(!f.is_zero());
        let i = Ideal::new(&r, vec![f]).unwrap();
        let dims = PresentedModule::cyclic(&i).unwrap().local_cohomology_dims(1, -3..=d as i64 + 1).unwrap();
        let expected: Vec<i64> = (-3..=d as i64 + 1).map(|a| d as i64 - hilbert_function(&i, a).unwrap()).collect();
        prop_assert_eq!(dims, expected);
    }

    #[test]
    fn sumset_closed_form_matches_count(m in 1u64..4, n in 1u64..5, offset in 0u64..30) {
        let params = SumsetParams::new(m, n).unwrap();
        let alpha = params.threshold() + offset;
        prop_assert_eq!(
            sumset_count(&params, alpha, CountMode::Closed).unwrap(),
            sumset_count(&params, alpha, CountMode::Oracle).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn gb_is_canonical(
        gens in prop::collection::vec(raw_poly(3, 3), 1..=3),
        k in 0usize..5,
        scales in prop::collection::vec(prop_oneof![-7i64..=-1, 1i64..=7], 3),
    ) {
        common::gb_is_canonical(&gens, k, &scales)?;
    }

    #[test]
    fn series_matches_resolution(raw in raw_ideal(4, 3, 3, 3)) {
        common::series_matches_resolution(&raw)?;
    }

    #[test]
    fn regularity_shifts(raw in raw_ideal(4, 3, 3, 3), f in raw_form(4, 3, 2)) {
        common::regularity_shifts(&raw, &f)?;
    }

    #[test]
    fn torsion_does_not_raise_regularity(raw in raw_ideal(4, 3, 3, 3), lin in prop::collection::vec(raw_poly(4, 3), 3..=4)) {
        common::torsion_does_not_raise_regularity(&raw, &lin)?;
    }
}

/// Brute-force gap count: exponents in `[0, α·max]` reachable by the
/// "interval" bound but missing from the sumset, compared with the closed form
/// below the vanishing point.
#[test]
fn gap_count_matches_brute_force() {
    let mut nonzero = 0;
    for (m, n) in [(1, 4), (1, 5), (1, 6), (2, 4), (3, 5)] {
        let params = SumsetParams::new(m, n).unwrap();
        let (mi, ni) = (m as i64, n as i64);
        let sq = (ni + 1) * (ni + 1);
        for alpha in params.threshold()..params.vanishing_from() + 5 {
            let full = mi * sq * alpha as i64 - (mi * (mi - 1) / 2 * sq + mi * (ni * ni - 1));
            let missing = full - sumset_size(&params.base(), alpha) as i64;
            assert_eq!(missing, gap_count(&params, alpha) as i64, "({m},{n}) alpha={alpha}");
            nonzero += (missing > 0) as usize;
        }
    }
    assert!(nonzero > 20);
}
