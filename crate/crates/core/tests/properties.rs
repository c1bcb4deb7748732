//! Randomized algebraic laws; every case is derived from a proptest-chosen seed.

mod common;

use cherednik::algebra::{MultiPoly, RatFunc};
use cherednik::cyclotomic::CycNum;
use cherednik::diffop::{DiffOp, ShiftMonomial};
use cherednik::dsl::parse;
use cherednik::weyl::Permutation;
use common::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn polynomial_ring_axioms(seed in any::<u64>()) {
        let (mut r, ctx) = (rng(seed), small_ctx());
        let (a, b, c) = (poly(&mut r, &ctx, 4), poly(&mut r, &ctx, 4), poly(&mut r, &ctx, 4));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&MultiPoly::one(&ctx)), a.clone());
        prop_assert_eq!(a.pow(2), a.mul(&a));
    }

    #[test]
    fn exact_division_recovers_the_quotient(seed in any::<u64>()) {
        let (mut r, ctx) = (rng(seed), small_ctx());
        let p = poly(&mut r, &ctx, 4);
        let q = nonzero_poly(&mut r, &ctx, 3);
        prop_assert_eq!(p.mul(&q).exact_divide(&q).unwrap(), p.clone());
        // Adding a unit breaks divisibility by any non-constant divisor.
        if q.total_degree().unwrap_or(0) > 0 {
            prop_assert!(p.mul(&q).add(&MultiPoly::one(&ctx)).exact_divide(&q).is_err());
        }
    }

    #[test]
    fn rational_function_field_axioms(seed in any::<u64>()) {
        let (mut r, ctx) = (rng(seed), small_ctx());
        let (f, g, h) = (ratfunc(&mut r, &ctx), ratfunc(&mut r, &ctx), nonzero_ratfunc(&mut r, &ctx));
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.div(&h).unwrap().mul(&h), f.clone());
        prop_assert!(h.mul(&h.inv().unwrap()).is_one());
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn permutations_act_as_a_group(seed in any::<u64>()) {
        let (mut r, ctx) = (rng(seed), rank_three_ctx());
        let (s, u) = (permutation(&mut r, 3), permutation(&mut r, 3));
        let f = ratfunc(&mut r, &ctx);
        prop_assert_eq!(s.compose(&u).act_on_ratfunc(&f), s.act_on_ratfunc(&u.act_on_ratfunc(&f)));
        prop_assert_eq!(s.inverse().act_on_ratfunc(&s.act_on_ratfunc(&f)), f.clone());
        prop_assert!(s.compose(&s.inverse()).is_identity());
    }

    #[test]
    fn operator_product_is_associative(seed in any::<u64>()) {
        let (mut r, ctx) = (rng(seed), small_ctx());
        let rational_a = r.gen_bool(0.5);
        let a = diffop(&mut r, &ctx, 3, rational_a);
        let b = diffop(&mut r, &ctx, 3, false);
        let c = diffop(&mut r, &ctx, 3, false);
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn application_is_an_algebra_action(seed in any::<u64>()) {
        let (mut r, ctx) = (rng(seed), small_ctx());
        let (ra, rb) = (r.gen_bool(0.3), r.gen_bool(0.3));
        let a = diffop(&mut r, &ctx, 2, ra);
        let b = diffop(&mut r, &ctx, 2, rb);
        let f = RatFunc::from_poly(poly(&mut r, &ctx, 3));
        prop_assert_eq!(a.mul(&b).apply_rat(&f), a.apply_rat(&b.apply_rat(&f)));
        prop_assert_eq!(DiffOp::identity(&ctx).apply_rat(&f), f.clone());
    }

    #[test]
    fn shifts_conjugate_multiplication_operators(seed in any::<u64>()) {
        let (mut r, ctx) = (rng(seed), small_ctx());
        let g = ratfunc(&mut r, &ctx);
        let lambda: Vec<i32> = (0..ctx.n()).map(|_| r.gen_range(-2..=2)).collect();
        let id = Permutation::identity(ctx.n());
        let u = DiffOp::term(RatFunc::one(&ctx), ShiftMonomial(lambda.clone()), id.clone());
        let u_inv = DiffOp::term(RatFunc::one(&ctx), ShiftMonomial(lambda.iter().map(|e| -e).collect()), id);
        prop_assert_eq!(u.mul(&u_inv), DiffOp::identity(&ctx));
        let h = MultiPoly::hbar(&ctx);
        let moved: Vec<(usize, MultiPoly)> = (1..=ctx.n())
            .map(|i| (ctx.w(i), MultiPoly::w(&ctx, i).add(&h.scale(&cherednik::algebra::Q::int(lambda[i - 1] as i64)))))
            .collect();
        let shifted = g.substitute(&moved).unwrap();
        prop_assert_eq!(u.mul(&DiffOp::scalar(g)).mul(&u_inv), DiffOp::scalar(shifted));
    }

    #[test]
    fn cyclotomic_field_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = r.gen_range(1..=8);
        let (a, b, c) = (cyc(&mut r, l), cyc(&mut r, l), cyc(&mut r, l));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), CycNum::one(l));
        }
        prop_assert_eq!(CycNum::eps_pow(l, 1).pow(l as u32), CycNum::one(l));
    }

    #[test]
    fn parse_inverts_render(seed in any::<u64>()) {
        let mut r = rng(seed);
        let e = expr(&mut r, 4);
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e, "rendered as {}", text);
    }
}

/// `ħ, t, w_1, w_2, w_3`.
fn rank_three_ctx() -> cherednik::algebra::Ctx {
    cherednik::algebra::VarContext::new(3, 0).unwrap()
}
