//! Cross-module gates for the invariants layer: cohomology against the
//! symmetric-invariant yardstick at full family size, orbit closure of
//! lifting triples under the rational torus, pointedness over random
//! forms, and the grouplike census on freshly built members.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use supertwist_core::family::{presets, FamilyAlgebra, FamilyDatum};
use supertwist_core::group::FiniteGroup;
use supertwist_core::invariants::cohomology::hochschild_table;
use supertwist_core::invariants::moduli::ModuliPoint;
use supertwist_core::invariants::{coalgebra_type, coset_ranks, grouplike_census, is_pointed};
use supertwist_core::linalg::Mat;
use supertwist_core::rep::Rep;
use supertwist_core::scalar::CycScalar;

/// The expected Hochschild dimensions with trivial coefficients: the
/// invariants of the symmetric powers of the dual representation.
fn symmetric_invariant_dims(rep: &Rep, max: usize) -> Vec<usize> {
    (0..=max)
        .map(|i| rep.dual().symmetric_power(i).invariant_subspace().len())
        .collect()
}

fn lam(l1: i64, l2: i64, l3: i64) -> [CycScalar; 3] {
    [
        CycScalar::from_int(l1),
        CycScalar::from_int(l2),
        CycScalar::from_int(l3),
    ]
}

fn character_datum(orders: &[u32], u_exps: &[i64], weights: &[Vec<i64>], b: Mat) -> FamilyDatum {
    let group = FiniteGroup::product_of_cyclics(orders).unwrap();
    let u = group.from_exponents(u_exps);
    let rep = Rep::from_character_weights(&group, &weights.to_vec()).unwrap();
    FamilyDatum::new(rep, u, b).unwrap()
}

#[test]
fn degree_two_cohomology_at_dimension_thirty_two() {
    // Twisting moves only the coproduct, so the algebra underlying the
    // built member coincides with the plain smash product and the
    // symmetric-invariant count applies verbatim.
    let fam = FamilyAlgebra::build(presets::case1(&lam(1, 1, 1)).unwrap()).unwrap();
    for i in 0..fam.dim() {
        for j in 0..fam.dim() {
            assert_eq!(fam.hopf().mul_basis(i, j), fam.untwisted().mul_basis(i, j));
        }
    }
    let table = hochschild_table(fam.hopf(), 2).unwrap();
    assert_eq!(table, vec![1, 0, 0]);
    assert_eq!(
        table,
        symmetric_invariant_dims(fam.datum().rep(), 2),
        "cohomology disagrees with the invariants of the dual symmetric powers"
    );
}

#[test]
fn cohomology_matches_symmetric_invariants_on_small_smash_products() {
    // The four-dimensional member: one odd generator over Z2. Its square
    // in the dual symmetric algebra is invariant, so degree two jumps
    // back up to one.
    let line = character_datum(&[2], &[1], &[vec![1]], Mat::zeros(1, 1));
    let table = hochschild_table(&line.supergroup_hopf().unwrap(), 2).unwrap();
    assert_eq!(table, vec![1, 0, 1]);
    assert_eq!(table, symmetric_invariant_dims(line.rep(), 2));

    // Sixteen dimensions: Z4 acting on two characters whose weights sum
    // to zero, so exactly the cross term survives in degree two.
    let pair = character_datum(&[4], &[2], &[vec![1], vec![3]], Mat::zeros(2, 2));
    let table = hochschild_table(&pair.supergroup_hopf().unwrap(), 2).unwrap();
    assert_eq!(table, vec![1, 0, 1]);
    assert_eq!(table, symmetric_invariant_dims(pair.rep(), 2));
}

fn draw_rational(rng: &mut ChaCha8Rng) -> CycScalar {
    CycScalar::rational(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

fn draw_nonzero(rng: &mut ChaCha8Rng) -> CycScalar {
    loop {
        let t = draw_rational(rng);
        if !t.is_zero() {
            return t;
        }
    }
}

#[test]
fn lifting_orbits_are_closed_under_the_rational_torus() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let p = ModuliPoint::new(
            draw_rational(&mut rng),
            draw_rational(&mut rng),
            draw_rational(&mut rng),
        );
        // Act by a rational point of the torus, optionally composed with
        // the swap of the two characters.
        let t = draw_nonzero(&mut rng);
        let s = draw_nonzero(&mut rng);
        let scaled = [
            &(&t * &t) * &p.lambda[0],
            &(&s * &s) * &p.lambda[1],
            &(&t * &s) * &p.lambda[2],
        ];
        let q = if rng.gen_bool(0.5) {
            ModuliPoint::new(scaled[1].clone(), scaled[0].clone(), scaled[2].clone())
        } else {
            ModuliPoint::new(scaled[0].clone(), scaled[1].clone(), scaled[2].clone())
        };
        assert!(p.equivalent_to(&q), "torus translate left the orbit: {p:?} vs {q:?}");
        assert_eq!(p.canonical(), p.canonical().canonical(), "canonical form not idempotent");

        // Equivalent triples produce members with the same rank profile.
        let dp = presets::case1(&p.lambda).unwrap();
        let dq = presets::case1(&q.lambda).unwrap();
        assert_eq!(coalgebra_type(&dp), coalgebra_type(&dq));
        match (p.scale_invariant(), q.scale_invariant()) {
            (Some(a), Some(b)) => assert_eq!(a, b),
            (None, None) => {}
            _ => panic!("one translate lost the cross term"),
        }
    }
}

#[test]
fn pointedness_tracks_the_invariant_locus() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    // Z4 on two copies of the weight-one character: the symmetric square
    // is weight two throughout, so nothing but zero is invariant and any
    // nonzero form must break pointedness.
    for _ in 0..25 {
        let mut b = Mat::zeros(2, 2);
        for i in 0..2 {
            for j in i..2 {
                let v = CycScalar::rational(rng.gen_range(-2..=2), rng.gen_range(1..=2));
                b.set(i, j, v.clone());
                b.set(j, i, v);
            }
        }
        let zero = b.is_zero();
        let d = character_datum(&[4], &[2], &[vec![1], vec![1]], b);
        assert_eq!(is_pointed(&d).unwrap(), zero);
        assert_eq!(coset_ranks(&d).iter().all(|&(_, r)| r == 0), zero);
    }

    // One character over Z2: the symmetric square is invariant, so every
    // form keeps the member pointed.
    for k in -3i64..=3 {
        let mut b = Mat::zeros(1, 1);
        b.set(0, 0, CycScalar::rational(k, 2));
        let d = character_datum(&[2], &[1], &[vec![1]], b);
        assert!(is_pointed(&d).unwrap());
    }
}

#[test]
fn rank_profiles_are_constant_on_involution_cosets() {
    let d = presets::case1(&lam(1, 1, 1)).unwrap();
    let u = d.u();
    for g in 0..d.group().order() {
        let gu = d.group().mul(g, u);
        assert_eq!(d.b_conj(g), d.b_conj(gu), "conjugate forms differ inside a coset");
    }
}

#[test]
fn the_census_counts_two_grouplikes_per_rigid_coset() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..3 {
        let lambda = [
            CycScalar::from_int(rng.gen_range(-2..=2)),
            CycScalar::from_int(rng.gen_range(-2..=2)),
            CycScalar::from_int(rng.gen_range(-2..=2)),
        ];
        let datum = presets::case1(&lambda).unwrap();
        let rigid = coset_ranks(&datum).iter().filter(|&&(_, r)| r == 0).count();
        let fam = FamilyAlgebra::build(datum).unwrap();
        let census = grouplike_census(&fam).unwrap();
        assert_eq!(census.len(), 2 * rigid);
    }
}
