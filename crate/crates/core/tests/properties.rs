use g2cubics::braid::{braid_p, braid_xyz, BraidGen};
use g2cubics::fricke::{
    alpha_beta_from_p, c_from_surface, covering_check, fricke_residual, phi, phi_inv, pr, PInvariants, SurfaceParams,
    SurfacePoint,
};
use g2cubics::{Rational, Scalar};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::from_ratio(n, d))
}

fn p_inv() -> impl Strategy<Value = PInvariants<Rational>> {
    (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, d)| PInvariants::new(a, b, c, d))
}

fn gens() -> impl Strategy<Value = Vec<BraidGen>> {
    prop::collection::vec(prop::sample::select(BraidGen::ALL.to_vec()), 0..12)
}

proptest! {
    #[test]
    fn phi_round_trip(p in p_inv()) {
        let (pt, b) = phi(&p);
        prop_assert_eq!(phi_inv(&pt, &b), p);
    }

    #[test]
    fn phi_lands_on_surface(p in p_inv()) {
        let (pt, b) = phi(&p);
        let c = c_from_surface(&pt, &b);
        prop_assert_eq!(fricke_residual(&pt, &SurfaceParams::new(b.clone(), c.clone())), Rational::zero());
        // the two routes to (alpha, beta) agree exactly
        prop_assert_eq!(pr(&SurfaceParams::new(b, c)), alpha_beta_from_p(&p));
    }

    #[test]
    fn words_preserve_invariants(p in p_inv(), word in gens()) {
        let q = word.iter().fold(p.clone(), |s, &g| braid_p(g, &s));
        prop_assert_eq!(alpha_beta_from_p(&q), alpha_beta_from_p(&p));
        prop_assert_eq!(q.p4.clone() + q.s1(), p.p4.clone() + p.s1());
        let back = word.iter().rev().fold(q, |s, &g| braid_p(g.inverse(), &s));
        prop_assert_eq!(back, p);
    }

    #[test]
    fn xyz_moves_stay_on_surface(x in rational(), y in rational(), z in rational(), b in rational(), word in gens()) {
        let pt = SurfacePoint::new(x, y, z);
        let params = SurfaceParams::new(b.clone(), c_from_surface(&pt, &b));
        let end = word.iter().fold(pt, |s, &g| braid_xyz(g, &s, &b));
        prop_assert_eq!(fricke_residual(&end, &params), Rational::zero());
    }

    #[test]
    fn braid_relation(p in p_inv()) {
        use BraidGen::*;
        let w = |word: &[BraidGen]| word.iter().fold(p.clone(), |s, &g| braid_p(g, &s));
        prop_assert_eq!(w(&[B1, B2, B1]), w(&[B2, B1, B2]));
    }

    #[test]
    fn covering(b in rational(), x in rational(), y in rational(), z in rational()) {
        let (l, r) = covering_check(&b, &x, &y, &z);
        prop_assert_eq!(l, r);
    }
}
