//! Randomized structural properties of the three formulations: chart round
//! trips, symmetry equivariance, field-level conservation, and total
//! classification.

use proptest::prelude::*;
use trivortex::{
    admissibility, classify, from_regularized, m_invariant, shape_field, shape_of, t_region,
    to_regularized, Admissibility, CollapseDirection, CyclicShift, OrbitKind, RegularizedState,
    ShapeState, Vorticities,
};

const TAU: f64 = core::f64::consts::TAU;

/// Interior chart coordinates kept away from the binary-collision points and
/// the equilateral axis, so every draw maps to a valid shape.
fn chart_coords() -> impl Strategy<Value = RegularizedState> {
    (0.05f64..0.9, prop::bool::ANY, 0.5f64..20.0, 0.0f64..TAU).prop_filter_map(
        "off the binary-collision points",
        |(a, neg, l, t)| {
            let alpha = if neg { -a } else { a };
            let state = RegularizedState::new(alpha, l, t).ok()?;
            from_regularized(&state).ok()?;
            Some(state)
        },
    )
}

fn interior_shape() -> impl Strategy<Value = ShapeState> {
    chart_coords().prop_map(|c| from_regularized(&c).unwrap())
}

fn signed_strength() -> impl Strategy<Value = f64> {
    (0.2f64..2.0, prop::bool::ANY).prop_map(|(v, neg)| if neg { -v } else { v })
}

fn strengths() -> impl Strategy<Value = Vorticities> {
    (signed_strength(), signed_strength(), signed_strength())
        .prop_map(|(a, b, c)| Vorticities::new(a, b, c).unwrap())
}

fn mixed_strengths() -> impl Strategy<Value = Vorticities> {
    (0.2f64..2.0, 0.2f64..2.0, 0.2f64..2.0)
        .prop_map(|(a, b, c)| Vorticities::new(a, b, -c).unwrap())
}

proptest! {
    #[test]
    fn chart_round_trips_from_random_coords(c in chart_coords()) {
        let s = from_regularized(&c).unwrap();
        let back = to_regularized(&s).unwrap();
        prop_assert!((back.alpha() - c.alpha()).abs() < 1e-9);
        prop_assert!((back.lambda() - c.lambda()).abs() < 1e-9 * c.lambda());
        let dt = (back.theta() - c.theta()).abs();
        prop_assert!(dt < 1e-9 || (dt - TAU).abs() < 1e-9);
    }

    #[test]
    fn realized_triangles_project_back(s in interior_shape()) {
        let round = shape_of(&s.realize()).unwrap();
        prop_assert_eq!(round.eps(), s.eps());
        for i in 0..3 {
            prop_assert!((round.b()[i] - s.b()[i]).abs() < 1e-9 * s.lambda());
        }
    }

    #[test]
    fn side_field_commutes_with_relabeling(
        g in strengths(),
        s in interior_shape(),
        k in 0usize..3,
    ) {
        let shift = CyclicShift::moving_third(k);
        let f = shape_field(&g, &s).unwrap();
        let f_shifted = shape_field(&shift.apply_vorticities(&g), &shift.apply_shape(&s)).unwrap();
        let expect = shift.apply_array(f);
        for i in 0..3 {
            prop_assert!((f_shifted[i] - expect[i]).abs() < 1e-12 * (1.0 + expect[i].abs()));
        }
    }

    #[test]
    fn reflection_negates_the_side_field(g in strengths(), s in interior_shape()) {
        let f = shape_field(&g, &s).unwrap();
        let f_mirror = shape_field(&g, &s.reflected()).unwrap();
        for i in 0..3 {
            prop_assert_eq!(f_mirror[i], -f[i]);
        }
    }

    #[test]
    fn side_field_is_scale_invariant(
        g in strengths(),
        s in interior_shape(),
        scale in 0.1f64..10.0,
    ) {
        let b = s.b();
        let scaled =
            ShapeState::new(scale * b[0], scale * b[1], scale * b[2], s.eps()).unwrap();
        let f = shape_field(&g, &s).unwrap();
        let f_scaled = shape_field(&g, &scaled).unwrap();
        for i in 0..3 {
            prop_assert!((f_scaled[i] - f[i]).abs() < 1e-10 * (1.0 + f[i].abs()));
        }
    }

    #[test]
    fn conserved_gradients_annihilate_the_field(g in strengths(), s in interior_shape()) {
        let f = shape_field(&g, &s).unwrap();
        let b = s.b();
        let (g1, g2, g3) = (g.g1(), g.g2(), g.g3());
        // M = g2 g3 b1 + g3 g1 b2 + g1 g2 b3 and H = -(1/4pi) sum g_j g_k ln b_i
        // are first integrals, so their gradients contract to zero.
        let m_dot = g2 * g3 * f[0] + g3 * g1 * f[1] + g1 * g2 * f[2];
        let h_dot = g2 * g3 * f[0] / b[0] + g3 * g1 * f[1] / b[1] + g1 * g2 * f[2] / b[2];
        let scale: f64 = (0..3).map(|i| (f[i] / b[i]).abs()).sum::<f64>() + 1e-300;
        prop_assert!(m_dot.abs() < 1e-12 * scale * s.lambda());
        prop_assert!(h_dot.abs() < 1e-12 * scale);
    }

    #[test]
    fn classification_is_total_and_internally_consistent(
        g in strengths(),
        s in interior_shape(),
    ) {
        let c = classify(&g, &s);
        match c.collapse_direction {
            Some(CollapseDirection::Collapse) | Some(CollapseDirection::Ejection) => {
                prop_assert_eq!(c.kind, OrbitKind::SelfSimilarFamily);
                prop_assert!(!c.non_collision);
            }
            Some(CollapseDirection::RelativeEquilibrium) | None => {
                prop_assert!(c.non_collision);
            }
        }
        if g.same_sign() {
            prop_assert_eq!(c.kind, OrbitKind::BoundedCurve);
        }
    }

    #[test]
    fn zero_virial_ray_states_are_self_similar(a in 0.3f64..3.0, u in 0.1f64..0.9) {
        // g3 = -a/(1+a) makes the virial vanish for (1, a, g3).
        let g = Vorticities::new(1.0, a, -a / (1.0 + a)).unwrap();
        let region = t_region(&g).unwrap();
        prop_assume!(region.exists && !region.degenerate && region.p_hi.is_finite());
        let p = region.p_lo + u * (region.p_hi - region.p_lo);
        let (m, n) = {
            let (gc, _) = g.canonicalized().unwrap();
            (gc.m(), gc.n())
        };
        let b = region.shift.inverse().apply_array([1.0, p, m + n * p]);
        let s = ShapeState::new(b[0], b[1], b[2], trivortex::Orientation::Positive).unwrap();
        prop_assert!(m_invariant(&g, s.b()).abs() < 1e-12 * s.lambda());
        let c = classify(&g, &s);
        prop_assert_eq!(c.kind, OrbitKind::SelfSimilarFamily);
        prop_assert!(c.collapse_direction.is_some());
    }

    #[test]
    fn ratio_window_roots_sit_on_the_cone_boundary(g in mixed_strengths()) {
        let region = t_region(&g).unwrap();
        prop_assume!(region.exists && !region.degenerate);
        prop_assume!(region.p_lo > 1e-6 && region.p_hi.is_finite());
        let (gc, _) = g.canonicalized().unwrap();
        let (m, n) = (gc.m(), gc.n());
        for p in [region.p_lo, region.p_hi] {
            let b = [1.0, p, m + n * p];
            prop_assert_eq!(admissibility(b[0], b[1], b[2]), Admissibility::Boundary);
        }
        let mid = 0.5 * (region.p_lo + region.p_hi);
        prop_assert_eq!(
            admissibility(1.0, mid, m + n * mid),
            Admissibility::Interior
        );
    }
}
