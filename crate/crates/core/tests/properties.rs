use num_bigint::BigUint;
use proptest::prelude::*;

use sympow_core::decomposition::{
    associated_primes, big_height, intersect_all, irreducible_decomposition, localize, max_associated_primes,
};
use sympow_core::geometry::{
    caratheodory_decompose, enumerate_vertices, rational, to_point, EnumerationBudget, NewtonPolyhedron,
    Rational,
};
use sympow_core::invariants::{check_alphaslope, check_chudnovsky, InvariantReport};
use sympow_core::monomial::{containment_with_m, minimalize};
use sympow_core::random::{random_squarefree, SplitRng};
use sympow_core::symbolic::{symbolic_power, symbolic_power_oracle_sqfree};
use sympow_core::{CheckKind, Monomial, MonomialIdeal, SymbolicContext, SymbolicPolyhedron};

fn exponent_rows(dim: usize, max_gens: usize, max_exp: u64) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, dim), 1..=max_gens)
        .prop_map(|rows| rows.into_iter().filter(|r| r.iter().any(|&x| x > 0)).collect::<Vec<_>>())
        .prop_filter("at least one non-constant generator", |rows| !rows.is_empty())
}

fn ideal_in(dim: usize, max_gens: usize, max_exp: u64) -> impl Strategy<Value = MonomialIdeal> {
    exponent_rows(dim, max_gens, max_exp).prop_map(move |rows| MonomialIdeal::from_rows(dim, rows).unwrap())
}

fn ideal(max_dim: usize, max_gens: usize, max_exp: u64) -> impl Strategy<Value = MonomialIdeal> {
    (2..=max_dim).prop_flat_map(move |d| ideal_in(d, max_gens, max_exp))
}

fn ideal_pair(max_dim: usize) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (2..=max_dim).prop_flat_map(|d| (ideal_in(d, 4, 3), ideal_in(d, 4, 3)))
}

fn squarefree(max_dim: usize) -> impl Strategy<Value = MonomialIdeal> {
    (3..=max_dim, any::<u64>()).prop_map(|(d, seed)| {
        random_squarefree(&mut SplitRng::new(seed, 0), d, 4, d - 1).unwrap().ideal
    })
}

fn monomials_of_degree(dim: usize, s: u64) -> Vec<Monomial> {
    fn rec(dim: usize, left: u64, prefix: &mut Vec<u64>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == dim {
            prefix.push(left);
            out.push(Monomial::from_exponents(prefix));
            prefix.pop();
            return;
        }
        for k in 0..=left {
            prefix.push(k);
            rec(dim, left - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, s, &mut Vec::new(), &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_is_idempotent_and_order_free(rows in exponent_rows(4, 8, 3), seed in any::<u64>()) {
        let monos: Vec<Monomial> = rows.iter().map(|r| Monomial::from_exponents(r)).collect();
        let once = minimalize(monos.clone()).unwrap();
        prop_assert_eq!(&minimalize(once.clone()).unwrap(), &once);
        let mut shuffled = monos;
        let n = shuffled.len();
        for i in 0..n {
            shuffled.swap(i, (seed as usize).wrapping_mul(31).wrapping_add(i * 7) % n);
        }
        prop_assert_eq!(minimalize(shuffled).unwrap(), once);
    }

    #[test]
    fn intersect_and_multiply_laws((i, j) in ideal_pair(4)) {
        let dim = i.dim();
        prop_assert_eq!(i.intersect(&j).unwrap(), j.intersect(&i).unwrap());
        prop_assert_eq!(i.multiply(&j).unwrap(), j.multiply(&i).unwrap());
        prop_assert_eq!(i.intersect(&i).unwrap(), i.clone());
        prop_assert_eq!(i.multiply(&MonomialIdeal::unit(dim)).unwrap(), i.clone());
        let meet = i.intersect(&j).unwrap();
        prop_assert!(i.multiply(&j).unwrap().subset(&meet).unwrap());
        prop_assert!(meet.subset(&i).unwrap() && meet.subset(&j).unwrap());
        let k = i.sum(&j).unwrap();
        prop_assert_eq!(
            i.intersect(&j).unwrap().intersect(&k).unwrap(),
            i.intersect(&j.intersect(&k).unwrap()).unwrap()
        );
        prop_assert_eq!(
            i.multiply(&j).unwrap().multiply(&k).unwrap(),
            i.multiply(&j.multiply(&k).unwrap()).unwrap()
        );
    }

    #[test]
    fn power_is_additive(i in ideal(4, 5, 2), a in 0u32..=3, b in 0u32..=2) {
        prop_assert_eq!(i.power(a + b).unwrap(), i.power(a).unwrap().multiply(&i.power(b).unwrap()).unwrap());
    }

    #[test]
    fn containment_with_m_matches_brute_force(j in ideal_in(3, 4, 3), f in prop::collection::vec(0u64..=5, 3), s in 0u64..=3) {
        let f = Monomial::from_exponents(&f);
        let brute = monomials_of_degree(3, s)
            .iter()
            .flat_map(|u| j.gens().iter().map(move |g| u.mul(g).unwrap()))
            .any(|g| g.divides(&f).unwrap());
        prop_assert_eq!(containment_with_m(&f, &j, s).unwrap(), brute);
    }

    #[test]
    fn decomposition_reconstructs(i in ideal(4, 5, 3)) {
        let comps = irreducible_decomposition(&i).unwrap();
        prop_assert_eq!(intersect_all(i.dim(), comps.iter().map(|c| c.to_ideal())).unwrap(), i.clone());
        for p in max_associated_primes(&i).unwrap() {
            let l = localize(&i, &p).unwrap();
            for g in l.ideal.gens() {
                prop_assert!(g.support().iter().all(|v| p.contains_var(*v)));
            }
            prop_assert_eq!(localize(&l.ideal, &p).unwrap().ideal, l.ideal.clone());
        }
    }

    #[test]
    fn squarefree_primes_are_minimal_primes(i in squarefree(5)) {
        let ass = associated_primes(&i).unwrap();
        prop_assert_eq!(&max_associated_primes(&i).unwrap(), &ass);
        let comps: Vec<_> = irreducible_decomposition(&i).unwrap().iter().map(|c| c.radical()).collect();
        let mut comps_sorted = comps.clone();
        comps_sorted.sort();
        prop_assert_eq!(comps_sorted, ass.clone());
        prop_assert_eq!(sympow_core::symbolic::minimal_primes_bruteforce(&i).unwrap(), ass);
    }

    #[test]
    fn full_big_height_means_symbolic_equals_ordinary(i in ideal(4, 5, 3), m in 1u32..=3) {
        prop_assume!(big_height(&i).unwrap() == i.dim());
        prop_assert_eq!(symbolic_power(&i, m).unwrap(), i.power(m).unwrap());
    }

    #[test]
    fn symbolic_matches_squarefree_oracle(i in squarefree(5), m in 1u32..=3) {
        prop_assert_eq!(symbolic_power(&i, m).unwrap(), symbolic_power_oracle_sqfree(&i, m).unwrap());
    }

    #[test]
    fn symbolic_power_chain(i in ideal(4, 4, 2), m in 1u32..=3) {
        let ctx = SymbolicContext::new(&i).unwrap();
        let sm = ctx.symbolic_power(m).unwrap();
        prop_assert!(i.power(m).unwrap().subset(&sm).unwrap());
        let next = ctx.symbolic_power(m + 1).unwrap();
        for g in next.gens() {
            prop_assert!(containment_with_m(g, &sm, 1).unwrap());
        }
    }

    #[test]
    fn newton_membership_is_up_closed(i in ideal_in(3, 4, 3), a in prop::collection::vec((0i64..=6, 1i64..=3), 3), bump in prop::collection::vec(0i64..=2, 3)) {
        let n = NewtonPolyhedron::of(&i).unwrap();
        let a: Vec<Rational> = a.iter().map(|&(p, q)| rational(p, q)).collect();
        let b: Vec<Rational> = a.iter().zip(&bump).map(|(x, &d)| x + rational(d, 1)).collect();
        if n.contains(&a).unwrap() {
            prop_assert!(n.contains(&b).unwrap());
        }
    }

    #[test]
    fn scaled_membership_is_homogeneous(i in ideal_in(3, 4, 2), a in prop::collection::vec(0i64..=6, 3), m in 1i64..=3, t in (1i64..=4, 1i64..=3)) {
        let q = SymbolicPolyhedron::of(&i).unwrap();
        let a: Vec<Rational> = a.iter().map(|&x| rational(x, 1)).collect();
        let t = rational(t.0, t.1);
        let ta: Vec<Rational> = a.iter().map(|x| x * &t).collect();
        prop_assert_eq!(
            q.member_scaled(&a, &rational(m, 1)).unwrap(),
            q.member_scaled(&ta, &(rational(m, 1) * &t)).unwrap()
        );
    }

    #[test]
    fn caratheodory_reconstructs(i in ideal(4, 5, 3), w in prop::collection::vec(0i64..=4, 5), extra in prop::collection::vec(0i64..=2, 4)) {
        let ctx = SymbolicContext::new(&i).unwrap();
        for (p, local) in ctx.localized() {
            let n = NewtonPolyhedron::of(local).unwrap();
            let total: i64 = w.iter().take(n.points().len()).sum::<i64>().max(1);
            let mut a = vec![Rational::from_integer(0.into()); i.dim()];
            for (pt, &wi) in n.points().iter().zip(&w) {
                for (x, c) in a.iter_mut().zip(pt) {
                    *x += rational(wi, total) * c;
                }
            }
            if w.iter().take(n.points().len()).all(|&x| x == 0) {
                a = n.points()[0].clone();
            }
            for (x, &e) in a.iter_mut().zip(&extra) {
                *x += rational(e, 2);
            }
            let d = caratheodory_decompose(&n, p, &a).unwrap();
            prop_assert!(d.weights.len() <= p.height());
            let mut back = d.orthant.clone();
            for (k, lam) in &d.weights {
                for (x, c) in back.iter_mut().zip(&n.points()[*k]) {
                    *x += lam * c;
                }
            }
            prop_assert_eq!(back, a);
            prop_assert!(d.orthant.iter().all(|c| *c >= Rational::from_integer(0.into())));
        }
    }

    #[test]
    fn alpha_matches_vertex_minimum(i in ideal(4, 4, 2)) {
        let q = SymbolicPolyhedron::of(&i).unwrap();
        if let Ok(vertices) = enumerate_vertices(&q, &EnumerationBudget::default()) {
            let min = vertices.iter().map(|v| v.iter().sum::<Rational>()).min().unwrap();
            prop_assert_eq!(&q.alpha().unwrap().value, &min);
        }
    }

    #[test]
    fn waldschmidt_bounds(i in ideal(4, 4, 2)) {
        let ctx = SymbolicContext::new(&i).unwrap();
        let q = SymbolicPolyhedron::from_context(&ctx).unwrap();
        let gamma = q.alpha().unwrap().value.clone();
        let rep = InvariantReport::compute(&ctx, &q).unwrap();
        prop_assert!(gamma >= Rational::new(rep.alpha_i.clone().into(), rep.e.into()));
        prop_assert!(gamma <= Rational::from_integer(rep.alpha_i.clone().into()));
        prop_assert!(rep.alpha_i <= rep.beta_i);
        prop_assert!(BigUint::from(rep.e) % BigUint::from(rep.chudnovsky_bound.denom().magnitude().clone()) == BigUint::from(0u32));
        for m in 1..=3u32 {
            let am = ctx.symbolic_power(m).unwrap().min_degree().unwrap().clone();
            prop_assert!(Rational::from_integer(am.into()) >= &gamma * rational(m.into(), 1));
        }
        for g in i.gens() {
            prop_assert!(q.contains(&to_point(g)).unwrap());
        }
    }

    #[test]
    fn alphaslope_holds_in_hypothesis(i in ideal(4, 4, 2), r in 1u32..=2, extra in 0u32..=2) {
        let ctx = SymbolicContext::new(&i).unwrap();
        let q = SymbolicPolyhedron::from_context(&ctx).unwrap();
        let m = ctx.big_height() as u32 * r + extra;
        let res = check_alphaslope(&ctx, &q, r, m).unwrap();
        prop_assert!(!res.is_bug(), "{:?}", res);
    }

    #[test]
    fn chudnovsky_holds_for_squarefree(i in squarefree(5)) {
        let ctx = SymbolicContext::new(&i).unwrap();
        let q = SymbolicPolyhedron::from_context(&ctx).unwrap();
        let res = check_chudnovsky(&ctx, &q).unwrap();
        prop_assert_eq!(res.kind, CheckKind::Theorem);
        prop_assert!(res.holds(), "{:?}", res);
    }
}
