use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use crate::exactnum::rational::{frac, int, pow2_neg};
use crate::exactnum::{
    isolate_real_roots, sign_at_algebraic, sturm_count, AlgElem, AlgebraicNumber, Interval, Poly, Rational,
    Scalar, Sign,
};
use crate::game::{
    classify, fire, pattern_state, play, GameConfig, GameState, Node, Outcome, Strategy as Play,
};
use crate::gibonacci::{binet_eval, build_sa_poly, eval_at_four, gib_entry, GibParams, GibonacciArray};
use crate::posets::{build_poset, check_lattice, triangle_row, QPolynomial, SGPoset};
use crate::roots::roots_of;

fn rational() -> impl Strategy<Value = Rational> {
    (-200i64..=200, 1i64..=60).prop_map(|(n, d)| frac(n, d))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=12).prop_map(|(n, d)| frac(n, d))
}

fn params() -> impl Strategy<Value = GibParams> {
    (positive(), positive()).prop_map(|(a, b)| GibParams::new(a, b).unwrap())
}

fn int_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..=9, 1..=max_deg + 1)
        .prop_map(|c| Poly::from_ints(&c))
        .prop_filter("nonconstant", |p| p.degree().unwrap_or(0) >= 1)
}

fn lowest_terms(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arithmetic_stays_in_lowest_terms(a in rational(), b in rational()) {
        prop_assert!(lowest_terms(&(&a + &b)));
        prop_assert!(lowest_terms(&(&a - &b)));
        prop_assert!(lowest_terms(&(&a * &b)));
        if !Zero::is_zero(&b) {
            prop_assert!(lowest_terms(&(&a / &b)));
        }
    }

    #[test]
    fn isolation_is_sound(p in int_poly(7)) {
        let r = p.root_bound() + frac(1, 3);
        let within = Interval::new(-r.clone(), r).unwrap();
        let ivs = isolate_real_roots(&p, &within).unwrap();
        let total = sturm_count(&p.square_free_part(), &within).unwrap();
        prop_assert_eq!(ivs.len(), total);
        for iv in &ivs {
            if iv.lo != iv.hi {
                prop_assert_eq!(sturm_count(&p.square_free_part(), iv).unwrap(), 1);
            }
        }
        prop_assert!(ivs.windows(2).all(|w| w[0].hi <= w[1].lo));
    }

    #[test]
    fn algebraic_sign_agrees_with_refinement(p in int_poly(5), q in int_poly(4)) {
        let r = p.root_bound() + frac(1, 3);
        let within = Interval::new(-r.clone(), r).unwrap();
        for theta in AlgebraicNumber::roots_in(&p, &within).unwrap() {
            let s = sign_at_algebraic(&q, &theta);
            if let Some(x) = theta.as_rational() {
                prop_assert_eq!(s, q.sign_at(&x));
                continue;
            }
            let mut cur = theta.clone();
            for _ in 0..60 {
                cur = cur.refine();
            }
            let v = cur.enclosure().eval_poly(&q);
            match s {
                Sign::Zero => prop_assert!(v.contains_zero()),
                Sign::Positive => prop_assert!(v.hi > Rational::zero()),
                Sign::Negative => prop_assert!(v.lo < Rational::zero()),
            }
            if !v.contains_zero() {
                prop_assert_eq!(s, Sign::of(&v.lo));
            }
        }
    }

    #[test]
    fn polynomial_coefficients_are_signed_array_entries(p in params(), k in 0i64..=60) {
        let g = build_sa_poly(&p, k).unwrap().poly;
        let d = (k / 2) as usize;
        prop_assert_eq!(g.degree(), Some(d));
        prop_assert_eq!(g.leading(), if k == 0 { p.alpha().clone() } else { p.beta().clone() });
        for j in 0..=d {
            let e = gib_entry(&p, k as usize, j as i64);
            let want = if j % 2 == 0 { e } else { -e };
            prop_assert_eq!(g.coeff(d - j), want);
        }
    }

    #[test]
    fn eval_at_four_matches_the_polynomial(p in params(), k in 0usize..=100) {
        let g = build_sa_poly(&p, k as i64).unwrap().poly;
        prop_assert_eq!(eval_at_four(&p, k), g.eval(&int(4)));
    }

    #[test]
    fn eigenvalue_evaluation_is_close(p in params(), k in 0usize..=30, x in rational()) {
        prop_assume!(x != int(0) && x != int(4));
        let want = build_sa_poly(&p, k as i64).unwrap().poly.eval(&x);
        let got = binet_eval(&p, k, &x, 100).unwrap();
        prop_assert!(got.within(&want, &pow2_neg(100)));
    }

    #[test]
    fn firings_are_legal(
        p in params(), pp in positive(), qq in positive(),
        a in 0i64..=9, b in 0i64..=9, first_g1 in any::<bool>(), which in 0usize..3,
    ) {
        prop_assume!(a + b > 0);
        let first = if first_g1 { Node::G1 } else { Node::G2 };
        prop_assume!(if first_g1 { a > 0 } else { b > 0 });
        let c = GameConfig::rational(&p, pp, qq).unwrap();
        let strategy = [Play::GreedyG1, Play::GreedyG2, Play::Alternate][which].clone();
        let t = play(&int(a), &int(b), first, &c, &strategy, 60).unwrap();
        let mut prev = t.firings[0].clone();
        for f in &t.firings[1..] {
            let before = if f.node == Node::G1 { &prev.u } else { &prev.v };
            prop_assert!(before.is_positive());
            let next = fire(&GameState::new(prev.u.clone(), prev.v.clone()), f.node, &c).unwrap();
            prop_assert_eq!((&next.u, &next.v), (&f.u, &f.v));
            prev = f.clone();
        }
        if let Outcome::Terminated { moves } = t.outcome {
            prop_assert_eq!(moves, t.moves());
            let (u, v) = t.final_pair();
            prop_assert!(!u.is_positive() && !v.is_positive());
        }
    }

    #[test]
    fn traces_follow_the_symbolic_pattern(
        p in params(), pp in positive(), qq in positive(), a in 1i64..=9, b in 0i64..=9, first_g1 in any::<bool>(),
    ) {
        let first = if first_g1 { Node::G1 } else { Node::G2 };
        prop_assume!(first_g1 || b > 0);
        prop_assume!(p.alpha() >= p.beta());
        let c = GameConfig::rational(&p, pp, qq).unwrap();
        prop_assume!(classify(&c).is_ok());
        let (x, y) = (int(a), int(b));
        let t = play(&x, &y, first, &c, &Play::Alternate, 40).unwrap();
        for (m, f) in t.firings.iter().enumerate() {
            let (u, v) = pattern_state(&c, first, m + 1).unwrap();
            prop_assert_eq!(u.at(&x, &y), f.u.clone());
            prop_assert_eq!(v.at(&x, &y), f.v.clone());
        }
    }

    #[test]
    fn poset_structure(n in 2u32..=5, k in 0usize..=5, alpha_off in 1u32..=4) {
        prop_assume!(alpha_off < n);
        let alpha = alpha_off;
        let poset = build_poset(n, k, alpha).unwrap();
        let rgf = poset.rank_generating_function();
        prop_assert!(rgf.is_palindromic());
        prop_assert_eq!(rgf.at_one(), BigInt::from(poset.len()));
        prop_assert!(poset.edges_are_graded());
        prop_assert!(poset.is_self_dual());
        if k >= 1 {
            prop_assert!(poset.is_connected());
            prop_assert_eq!(poset.ranks.iter().max().copied(), Some(k as u32 * (n - 1)));
            prop_assert_eq!(poset.ranks.iter().min().copied(), Some(0));
        }
        if k >= 2 {
            let l = check_lattice(&poset);
            prop_assert_eq!(l.distributive, alpha <= 2);
            if alpha >= 3 {
                prop_assert!(l.maximal_count >= 2);
            }
        }
    }

    #[test]
    fn triangle_rows_are_symmetric(alpha in 1u32..=6, n in 1u32..=6, k in 0usize..=7) {
        let row = triangle_row(alpha, n, k);
        prop_assert!(row.iter().eq(row.iter().rev()));
        prop_assert_eq!(row.len(), k * (n as usize - 1) + 1);
        if n > alpha {
            prop_assert!(row.iter().all(|v| v > &BigInt::zero()));
        }
    }

    #[test]
    fn json_round_trips(p in params(), k in 0i64..=12, c in prop::collection::vec(-50i64..=50, 0..8)) {
        let g = build_sa_poly(&p, k).unwrap();
        let s = serde_json::to_string(&g.poly).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), g.poly);
        let arr = GibonacciArray::new(&p, k as usize);
        let s = serde_json::to_string(&arr).unwrap();
        prop_assert_eq!(serde_json::from_str::<GibonacciArray>(&s).unwrap(), arr);
        let q = QPolynomial::from_ints(&c);
        let s = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<QPolynomial>(&s).unwrap(), q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// At `pq = r_k` the game takes `k + 1` moves from strongly dominant
    /// pairs and `k` otherwise, whatever the strategy and first node.
    #[test]
    fn strong_convergence_at_largest_roots(
        ab in prop::sample::select(vec![(1i64, 1i64), (2, 1), (5, 2), (3, 1)]),
        k in 2i64..=8, p in positive(), a in 0i64..=5, b in 0i64..=5,
    ) {
        prop_assume!(a + b > 0);
        let params = GibParams::from_ints(ab.0, ab.1).unwrap();
        let c = GameConfig::at_largest_root(&params, k, p).unwrap();
        let (x, y) = (AlgElem::rational(int(a)), AlgElem::rational(int(b)));
        let want = if a > 0 && b > 0 { k as usize + 1 } else { k as usize };
        let mut finals: Vec<(AlgElem, AlgElem)> = Vec::new();
        for first in [Node::G1, Node::G2] {
            if (first == Node::G1 && a == 0) || (first == Node::G2 && b == 0) {
                continue;
            }
            for s in [Play::GreedyG1, Play::GreedyG2, Play::Alternate] {
                let t = play(&x, &y, first, &c, &s, 100).unwrap();
                prop_assert_eq!(t.outcome, Outcome::Terminated { moves: want });
                finals.push(t.final_pair());
            }
        }
        prop_assert!(finals.windows(2).all(|w| w[0].0.value_eq(&w[1].0) && w[0].1.value_eq(&w[1].1)));
    }

    #[test]
    fn root_sets_serialize(ab in prop::sample::select(vec![(1i64, 1i64), (2, 1), (7, 2)]), k in 2i64..=12) {
        let s = roots_of(&GibParams::from_ints(ab.0, ab.1).unwrap(), k).unwrap();
        for z in &s.roots {
            let text = serde_json::to_string(z).unwrap();
            let back: AlgebraicNumber = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back.defining(), z.defining());
            prop_assert_eq!(back.enclosure(), z.enclosure());
        }
        let text = serde_json::to_string(&build_poset(3, (k as usize).min(4), 1).unwrap()).unwrap();
        let back: SGPoset = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, build_poset(3, (k as usize).min(4), 1).unwrap());
    }
}

#[test]
fn row_sums_are_fibonacci_and_lucas() {
    let fib = GibonacciArray::new(&GibParams::fibonacci(), 60);
    let luc = GibonacciArray::new(&GibParams::lucas(), 60);
    let (mut f0, mut f1) = (int(1), int(1));
    let (mut l0, mut l1) = (int(2), int(1));
    for k in 0..=60 {
        assert_eq!(fib.row_sum(k).unwrap(), f0);
        assert_eq!(luc.row_sum(k).unwrap(), l0);
        let f2 = &f0 + &f1;
        let l2 = &l0 + &l1;
        f0 = std::mem::replace(&mut f1, f2);
        l0 = std::mem::replace(&mut l1, l2);
    }
}
