use std::f64::consts::PI;
use std::sync::Arc;

use hardyops_core::kernel::{exact_model_space, product_rank, szego_gram, KernelPoint, TensorModelSpace};
use hardyops_core::truncated::{model_projection, range_projection, tail_bound, BoxBasis};
use hardyops_core::verdict::{commuting_verdict, finite_rank_verdict, tto_isometry_verdict};
use hardyops_core::{Complex, DiskZero, InnerSymbol, VariableFactor};
use proptest::prelude::*;

fn disc_point(max_modulus: f64) -> impl Strategy<Value = Complex> {
    (0.0..max_modulus, 0.0..2.0 * PI).prop_map(|(r, t)| Complex::from_polar(r, t))
}

fn phase() -> impl Strategy<Value = Complex> {
    (0.0..2.0 * PI).prop_map(|t| Complex::from_polar(1.0, t))
}

fn factor(var: usize) -> impl Strategy<Value = VariableFactor> {
    (0..=2u32, prop::collection::vec((disc_point(0.7), 1..=2u32), 0..3)).prop_map(
        move |(exp, zeros)| {
            let zeros = zeros
                .into_iter()
                .map(|(a, m)| DiskZero::new(a, m).unwrap())
                .collect::<Vec<_>>();
            VariableFactor::new(var, exp, zeros)
        },
    )
}

/// Symbol in `n` variables; each variable carries a factor with
/// probability one half (possibly trivial).
fn symbol(n: usize) -> impl Strategy<Value = InnerSymbol> {
    let factors = (0..n)
        .map(|v| prop::option::of(factor(v)))
        .collect::<Vec<_>>();
    (phase(), factors).prop_map(move |(c, fs)| {
        InnerSymbol::new(n, c, fs.into_iter().flatten()).unwrap()
    })
}

fn single_variable(n: usize, var: usize) -> impl Strategy<Value = InnerSymbol> {
    (phase(), factor(var)).prop_map(move |(c, f)| InnerSymbol::new(n, c, [f]).unwrap())
}

fn interior_point(n: usize) -> impl Strategy<Value = Vec<Complex>> {
    prop::collection::vec(disc_point(0.95), n)
}

fn close(a: Complex, b: Complex, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_pointwise(a in symbol(2), b in symbol(2), p in interior_point(2)) {
        let ab = a.multiply(&b).unwrap();
        let lhs = ab.evaluate(&p).unwrap();
        let rhs = a.evaluate(&p).unwrap() * b.evaluate(&p).unwrap();
        prop_assert!(close(lhs, rhs, 1e-12), "{lhs} vs {rhs}");
    }

    #[test]
    fn division_undoes_multiplication(a in symbol(2), b in symbol(2)) {
        let ab = a.multiply(&b).unwrap();
        let q = ab.try_divide(&b).unwrap().expect("b divides ab");
        prop_assert!(q.same_up_to_constant(&a));
        prop_assert!(b.divides(&ab).unwrap());
        prop_assert!(a.divides(&ab).unwrap());
    }

    #[test]
    fn gcd_is_a_greatest_common_divisor(a in symbol(2), b in symbol(2), c in symbol(2)) {
        let (ac, bc) = (a.multiply(&c).unwrap(), b.multiply(&c).unwrap());
        let g = ac.gcd(&bc).unwrap();
        prop_assert!(g.divides(&ac).unwrap());
        prop_assert!(g.divides(&bc).unwrap());
        prop_assert!(c.divides(&g).unwrap());
        // after removing g the cofactors share nothing
        let ra = ac.try_divide(&g).unwrap().unwrap();
        let rb = bc.try_divide(&g).unwrap().unwrap();
        prop_assert!(ra.gcd(&rb).unwrap().is_constant());
    }

    #[test]
    fn constructed_decompositions_are_found(
        psi in symbol(3),
        x in single_variable(3, 0),
        y in single_variable(3, 2),
    ) {
        let (phi1, phi2) = (psi.multiply(&x).unwrap(), psi.multiply(&y).unwrap());
        let w = phi1.separated_decomposition(&phi2).unwrap().expect("decomposition exists");
        let back1 = w.common_factor.multiply(&w.first_cofactor).unwrap();
        let back2 = w.common_factor.multiply(&w.second_cofactor).unwrap();
        prop_assert!(back1.same_up_to_constant(&phi1));
        prop_assert!(back2.same_up_to_constant(&phi2));
        prop_assert!(w.first_cofactor.is_separated(&w.second_cofactor).unwrap());
        // the common factor is maximal: psi always divides it
        prop_assert!(psi.divides(&w.common_factor).unwrap());
        prop_assert!(commuting_verdict(&phi1, &phi2).unwrap().commutes);
    }

    #[test]
    fn commuting_witnesses_are_sound(a in symbol(2), b in symbol(2)) {
        let v = commuting_verdict(&a, &b).unwrap();
        prop_assert_eq!(v.commutes, a.separated_decomposition(&b).unwrap().is_some());
        if let Some(w) = &v.witness {
            let back1 = w.common_factor.multiply(&w.first_cofactor).unwrap();
            let back2 = w.common_factor.multiply(&w.second_cofactor).unwrap();
            prop_assert!(back1.same_up_to_constant(&a));
            prop_assert!(back2.same_up_to_constant(&b));
            prop_assert!(w.first_cofactor.is_separated(&w.second_cofactor).unwrap());
        }
    }

    #[test]
    fn symbols_are_unimodular_on_the_torus(
        s in symbol(2),
        angles in prop::collection::vec(0.0..2.0 * PI, 2),
    ) {
        let p: Vec<Complex> = angles.iter().map(|&t| Complex::from_polar(1.0, t)).collect();
        let v = s.evaluate(&p).unwrap();
        prop_assert!((v.norm() - 1.0).abs() < 1e-12, "|phi| = {}", v.norm());
    }

    #[test]
    fn taylor_mass_and_tail_account_for_the_norm(s in symbol(2), cap in 0usize..12) {
        let mass = s.taylor_coefficients(cap).norm_sqr();
        prop_assert!(mass <= 1.0 + 1e-12);
        // compare squares: a square root would magnify rounding in 1 - mass
        let tail = tail_bound(&s, cap);
        prop_assert!(1.0 - mass <= tail * tail + 1e-12, "{} vs {tail}", 1.0 - mass);
    }

    #[test]
    fn verdicts_are_symmetric(a in symbol(2), b in symbol(2)) {
        prop_assert_eq!(
            commuting_verdict(&a, &b).unwrap().commutes,
            commuting_verdict(&b, &a).unwrap().commutes
        );
        let (f, g) = (finite_rank_verdict(&a, &b).unwrap(), finite_rank_verdict(&b, &a).unwrap());
        prop_assert_eq!((f.is_projection, f.finite, f.rank), (g.is_projection, g.finite, g.rank));
    }

    #[test]
    fn isometry_implies_partial_isometry(n in 1usize..4, seed in any::<u64>()) {
        let mut sampler = hardyops_core::generate::SymbolSampler::new(seed);
        let (a, b, _) = sampler.pair(n);
        for (x, y) in [(&a, &b), (&b, &a)] {
            let v = tto_isometry_verdict(x, y).unwrap();
            prop_assert!(!v.isometry || v.partial_isometry);
            prop_assert_eq!(v.partial_isometry, commuting_verdict(x, y).unwrap().commutes);
        }
        let f = finite_rank_verdict(&a, &b).unwrap();
        prop_assert!(f.rank.is_none() || f.finite);
        prop_assert!(!f.finite || f.is_projection);
    }

    #[test]
    fn rank_verdict_matches_tensor_dimension(
        z1 in prop::collection::vec(disc_point(0.8), 1..4),
        z2 in prop::collection::vec(disc_point(0.8), 1..4),
    ) {
        let phi1 = InnerSymbol::blaschke_product(2, 0, &z1).unwrap();
        let phi2 = InnerSymbol::blaschke_product(2, 1, &z2).unwrap();
        let verdict = finite_rank_verdict(&phi1, &phi2).unwrap();
        prop_assert_eq!(verdict.rank, Some(z1.len() * z2.len()));
        // nearly coincident random zeros can make the kernel basis singular
        let (Ok(s1), Ok(s2)) = (exact_model_space(&phi1), exact_model_space(&phi2)) else {
            return Ok(());
        };
        let tensor = TensorModelSpace::new(vec![s1, s2]).unwrap();
        prop_assert_eq!(tensor.dimension(), z1.len() * z2.len());
        prop_assert_eq!(product_rank(&phi1, &phi2).unwrap().rank, tensor.dimension());
    }

    #[test]
    fn szego_gram_is_positive_definite(points in prop::collection::vec(disc_point(0.9), 1..6)) {
        let kernel_points: Vec<KernelPoint> =
            points.iter().map(|&a| KernelPoint::new(a).unwrap()).collect();
        let g = szego_gram(&kernel_points).unwrap();
        let eig = g.self_adjoint_eigenvalues(faer::Side::Lower).unwrap();
        prop_assert!(eig.iter().all(|&e| e > 0.0), "{eig:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn projections_are_complementary_and_self_adjoint(s in symbol(2), cap in 2usize..7) {
        let basis = Arc::new(BoxBasis::new(2, cap).unwrap());
        let p = range_projection(&s, &basis).unwrap();
        let q = model_projection(&s, &basis).unwrap();
        let size = basis.size();
        for i in 0..size {
            for j in 0..size {
                let pij = p.matrix()[(i, j)];
                prop_assert_eq!(pij, p.matrix()[(j, i)].conj());
                let id = if i == j { 1.0 } else { 0.0 };
                let sum = pij + q.matrix()[(i, j)];
                prop_assert!((sum - Complex::new(id, 0.0)).norm() < 1e-14);
            }
        }
    }
}
