use foam_core::exactalg::{
    certified_rank, invariant_factors, kernel_basis, rank_over_fraction_field, smith_normal_form, solve,
    specialized_rank, sum_factored, BigInt, BigRational, FactoredTerm, IntMatrix, Matrix, Monomial, Poly,
    PolyMatrix, RingSpec, Specialized,
};
use foam_core::Error;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn p(ring: RingSpec, s: &str) -> Poly {
    Poly::parse(ring, s).unwrap()
}

fn a(s: &str) -> Poly {
    p(RingSpec::ALPHA, s)
}

fn x(s: &str) -> Poly {
    p(RingSpec::X_INT, s)
}

fn x2(s: &str) -> Poly {
    p(RingSpec::X_MOD2, s)
}

#[test]
fn canonical_text_round_trip() {
    let q = x("x3^3 - x1^2*x2");
    assert_eq!(q.to_string(), "-x1^2*x2 + x3^3");
    assert_eq!(x(&q.to_string()), q);
    assert_eq!(a("3*a1 - a2^2 + 1").to_string(), "-a2^2 + 3*a1 + 1");
    assert_eq!(a("a1^2*a2").pretty(), "α₁²α₂");
    assert_eq!(Poly::zero(RingSpec::ALPHA).to_string(), "0");
    assert!(Poly::parse(RingSpec::ALPHA, "x1").is_err());
    assert!(Poly::parse(RingSpec::ALPHA, "").is_err());
}

#[test]
fn mod2_coefficients_reduce() {
    let q = x2("x1 + x1 + x2");
    assert_eq!(q, x2("x2"));
    let s = &x2("x1 + x2") * &x2("x1 + x2");
    assert_eq!(s, x2("x1^2 + x2^2"));
    assert!(s.terms().all(|(_, c)| *c == 1));
}

#[test]
fn exact_divide_examples() {
    assert_eq!(x("x1^2 - x2^2").exact_divide(&x("x1 - x2")).unwrap(), x("x1 + x2"));
    let num = &x2("x1 + x2") * &x2("x2 + x3");
    assert_eq!(num.exact_divide(&x2("x1 + x2")).unwrap(), x2("x2 + x3"));
    assert_eq!(a("a1^2 - a2^2").exact_divide(&a("a1 + a2")).unwrap(), a("a1 - a2"));
    assert_eq!(x("x1^2 + 1").exact_divide(&x("x1 - x2")), Err(Error::NonExactDivision));
    assert_eq!(x("x1").exact_divide(&Poly::zero(RingSpec::X_INT)), Err(Error::NonExactDivision));
}

fn sphere_term(sign: i8, color: usize, d: u32) -> FactoredTerm {
    // Dotted sphere colored `color`: F_ij is the sphere when color ∈ {i, j}.
    let pairs = RingSpec::X_INT.pairs();
    let exps = pairs.iter().map(|&(i, j)| if i == color || j == color { -1 } else { 0 }).collect();
    let mut dots = [0; 3];
    dots[color] = d;
    FactoredTerm::new(sign, dots, exps)
}

#[test]
fn sum_factored_examples() {
    let terms = [sphere_term(-1, 0, 2), sphere_term(1, 1, 2), sphere_term(-1, 2, 2)];
    assert_eq!(sum_factored(&terms, RingSpec::X_INT).unwrap(), x("-1"));

    let torus = FactoredTerm::new(1, [0; 3], vec![0]);
    assert_eq!(sum_factored(&[torus.clone(), torus], RingSpec::ALPHA).unwrap(), a("2"));

    let pole = FactoredTerm::new(1, [0; 3], vec![-1, 0, 0]);
    assert_eq!(sum_factored(&[pole], RingSpec::X_INT), Err(Error::NonIntegral));
}

#[test]
fn specialize_examples() {
    let r = |n: i64| Some(BigRational::from_integer(n.into()));
    assert_eq!(
        a("a1^2 + a1*a2").specialize(&[r(1), r(2)]).unwrap(),
        Specialized::Scalar(BigRational::from_integer(3.into()))
    );
    assert_eq!(
        RingSpec::ALPHA.elementary(1).specialize(&[r(0), r(0)]).unwrap(),
        Specialized::Scalar(BigRational::zero())
    );
    assert_eq!(
        x2("x1*x2*x3").specialize(&[r(1), r(1), r(1)]).unwrap(),
        Specialized::Scalar(BigRational::from_integer(1.into()))
    );
    assert_eq!(
        x("x1*x2 + x3").specialize(&[r(2), None, r(5)]).unwrap(),
        Specialized::Poly(x("2*x2 + 5"))
    );
    let half = Some(BigRational::new(1.into(), 2.into()));
    assert_eq!(
        a("a1^2").specialize(&[half.clone(), None]),
        Err(Error::NonIntegral)
    );
    assert_eq!(
        a("4*a1^2 + a2").specialize(&[half, r(1)]).unwrap(),
        Specialized::Scalar(BigRational::from_integer(2.into()))
    );
}

fn int(rows: Vec<Vec<i64>>) -> IntMatrix {
    IntMatrix::from_i64(rows)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&n| BigInt::from(n)).collect()
}

#[test]
fn snf_examples() {
    assert_eq!(smith_normal_form(&int(vec![vec![2, 0], vec![0, 3]]), false).diagonal, ints(&[1, 6]));
    assert_eq!(smith_normal_form(&IntMatrix::zeros(2, 3), false).diagonal, ints(&[0, 0]));
    assert_eq!(smith_normal_form(&int(vec![vec![2, 4], vec![6, 8]]), false).diagonal, ints(&[2, 4]));
}

fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Oracle: d_k = D_k / D_{k-1}, with D_k the gcd of all k×k minors.
fn determinantal_divisors(m: &IntMatrix) -> Vec<BigInt> {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..(1 << n))
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
            .collect()
    }
    let rows = m.to_rows();
    let n = m.rows().min(m.cols());
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=n {
        let mut g = BigInt::zero();
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let sub: Vec<Vec<BigInt>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect()).collect();
                g = g.gcd(&cofactor_det(&sub));
            }
        }
        if g.is_zero() {
            out.resize(n, BigInt::zero());
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn small_int_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(-9i64..=9, r * c)
            .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(BigInt::from).collect()))
    })
}

proptest! {
    #[test]
    fn snf_reconstructs_and_divides(m in small_int_matrix()) {
        let snf = smith_normal_form(&m, true);
        let l = snf.left.clone().unwrap();
        let r = snf.right.clone().unwrap();
        let d = l.mul(&m).mul(&r);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expect = if i == j { snf.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(d.get(i, j), &expect);
            }
        }
        for w in snf.diagonal.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
        prop_assert!(snf.diagonal.iter().all(|v| !v.is_negative()));
        prop_assert_eq!(snf.diagonal.clone(), determinantal_divisors(&m));
        let ld = determinant(&l);
        let rd = determinant(&r);
        prop_assert_eq!(ld.abs(), BigInt::from(1));
        prop_assert_eq!(rd.abs(), BigInt::from(1));
    }
}

fn determinant(m: &IntMatrix) -> BigInt {
    cofactor_det(&m.to_rows())
}

#[test]
fn invariant_factors_drop_zeros() {
    assert_eq!(invariant_factors(&int(vec![vec![0, 2], vec![0, 0]])), ints(&[2]));
}

fn poly_matrix(ring: RingSpec, rows: &[&[&str]]) -> PolyMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| p(ring, s)).collect()).collect())
}

#[test]
fn rank_examples() {
    let e1 = RingSpec::ALPHA.elementary(1).to_string();
    let gram = poly_matrix(RingSpec::ALPHA, &[&["0", "1"], &["1", &e1]]);
    assert_eq!(rank_over_fraction_field(&gram), 2);
    let id = poly_matrix(RingSpec::ALPHA, &[&["1", "0"], &["0", "1"]]);
    assert_eq!(rank_over_fraction_field(&id), 2);
    let m = poly_matrix(RingSpec::X_INT, &[&["x1 - x2", "x1 - x2"], &["x1 - x2", "x1 - x2"]]);
    assert_eq!(rank_over_fraction_field(&m), 1);
    assert_eq!(kernel_basis(&m), vec![vec![x("1"), x("-1")]]);
    let cert = certified_rank(&m, 7).unwrap();
    assert_eq!(cert.rank, 1);
    for (vals, r) in cert.specializations.iter() {
        assert!(vals.iter().all(|v| (2..=97).contains(v)));
        assert_eq!(*r, 1);
    }
}

#[test]
fn kernel_of_symbolic_matrix_annihilates() {
    let m = poly_matrix(
        RingSpec::X_INT,
        &[&["x1", "x2", "x1 + x2"], &["x1*x2", "x2^2", "x1*x2 + x2^2"]],
    );
    let ker = kernel_basis(&m);
    assert_eq!(ker.len(), 2);
    for v in ker {
        for i in 0..m.rows() {
            let mut acc = Poly::zero(RingSpec::X_INT);
            for j in 0..m.cols() {
                acc += m.get(i, j) * &v[j];
            }
            assert!(acc.is_zero());
        }
    }
}

#[test]
fn solve_recovers_polynomial_solution() {
    let g = poly_matrix(RingSpec::ALPHA, &[&["0", "1"], &["1", "a1 + a2"]]);
    let want = poly_matrix(RingSpec::ALPHA, &[&["a1"], &["-a2 + 3"]]);
    let b = g.mul_with(&want, &Poly::zero(RingSpec::ALPHA));
    assert_eq!(solve(&g, &b).unwrap(), want);
    let g2 = poly_matrix(RingSpec::ALPHA, &[&["2", "0"], &["0", "1"]]);
    let b2 = poly_matrix(RingSpec::ALPHA, &[&["1"], &["0"]]);
    assert_eq!(solve(&g2, &b2), Err(Error::NonIntegral));
}

fn arb_poly(ring: RingSpec) -> impl Strategy<Value = Poly> {
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0u32..3, n), -4i128..=4), 0..5).prop_map(move |terms| {
        Poly::from_terms(
            ring,
            terms.into_iter().map(|(e, c)| {
                let mut m = [0u32; 3];
                m[..e.len()].copy_from_slice(&e);
                (Monomial(m), c)
            }),
        )
    })
}

fn arb_ring() -> impl Strategy<Value = RingSpec> {
    prop_oneof![Just(RingSpec::ALPHA), Just(RingSpec::X_INT), Just(RingSpec::X_MOD2)]
}

fn arb_term(ring: RingSpec) -> impl Strategy<Value = FactoredTerm> {
    let np = ring.pairs().len();
    let nv = ring.nvars();
    (any::<bool>(), prop::collection::vec(0u32..3, nv), prop::collection::vec(-2i64..=2, np)).prop_map(
        move |(s, d, e)| {
            let mut dots = [0u32; 3];
            dots[..nv].copy_from_slice(&d);
            FactoredTerm::new(if s && !ring.is_mod2() { -1 } else { 1 }, dots, e)
        },
    )
}

proptest! {
    #[test]
    fn division_inverts_multiplication((ring, f, g) in arb_ring().prop_flat_map(|r| (Just(r), arb_poly(r), arb_poly(r)))) {
        prop_assume!(!g.is_zero());
        let prod = &f * &g;
        prop_assert_eq!(prod.exact_divide(&g).unwrap(), f);
        prop_assert_eq!(prod.ring(), ring);
    }

    #[test]
    fn text_form_round_trips((ring, f) in arb_ring().prop_flat_map(|r| (Just(r), arb_poly(r)))) {
        prop_assert_eq!(Poly::parse(ring, &f.to_string()).unwrap(), f);
    }

    #[test]
    fn sum_factored_order_free_and_homogeneous(
        (ring, terms) in arb_ring().prop_flat_map(|r| (Just(r), prop::collection::vec(arb_term(r), 1..5))),
        rot in 0usize..5,
    ) {
        let sum = sum_factored(&terms, ring);
        let mut rotated = terms.clone();
        rotated.rotate_left(rot % terms.len());
        rotated.swap(0, terms.len() - 1);
        prop_assert_eq!(sum_factored(&rotated, ring), sum.clone());
        let degs: Vec<i64> = terms.iter().map(FactoredTerm::degree).collect();
        if let Ok(s) = sum {
            if degs.iter().all(|&d| d == degs[0]) && !s.is_zero() {
                prop_assert_eq!(s.homogeneous_degree().map(i64::from), Some(degs[0]));
            }
        }
    }

    #[test]
    fn sum_factored_matches_cleared_division(
        (ring, terms) in arb_ring().prop_flat_map(|r| (Just(r), prop::collection::vec(arb_term(r), 1..4))),
    ) {
        // Oracle: multiply the sum by a generous power of every form; the
        // product must equal the factored sum times that power whenever the
        // sum is integral.
        let big: Vec<i64> = vec![3; ring.pairs().len()];
        let mut lifted_sum = Poly::zero(ring);
        for t in &terms {
            let mut part = Poly::monomial(ring, Monomial(t.dots), if ring.is_mod2() { 1 } else { t.sign as i128 });
            for (k, &(i, j)) in ring.pairs().iter().enumerate() {
                part = &part * &ring.linear_form(i, j).pow((t.exps[k] + big[k]) as u32);
            }
            lifted_sum += &part;
        }
        match sum_factored(&terms, ring) {
            Ok(s) => {
                let mut scaled = s;
                for (k, &(i, j)) in ring.pairs().iter().enumerate() {
                    scaled = &scaled * &ring.linear_form(i, j).pow(big[k] as u32);
                }
                prop_assert_eq!(scaled, lifted_sum);
            }
            Err(e) => prop_assert_eq!(e, Error::NonIntegral),
        }
    }
}

fn small_poly_matrix() -> impl Strategy<Value = PolyMatrix> {
    (1usize..=4, 1usize..=4, arb_ring()).prop_flat_map(|(r, c, ring)| {
        prop::collection::vec(arb_poly(ring), r * c).prop_map(move |v| Matrix::from_vec(r, c, v))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn symbolic_rank_bounds_specializations(m in small_poly_matrix(), vals in prop::collection::vec(-50i64..50, 3)) {
        let rank = rank_over_fraction_field(&m);
        let ring = m.get(0, 0).ring();
        let vals: Vec<i64> = if ring.is_mod2() { vals.iter().map(|v| v.rem_euclid(2)).collect() } else { vals };
        prop_assert!(specialized_rank(&m, &vals[..ring.nvars()]) <= rank);
        prop_assert!(certified_rank(&m, 1).is_ok());
        prop_assert_eq!(kernel_basis(&m).len(), m.cols() - rank);
    }
}
