//! The acceptance battery: one test per release criterion, each ending in
//! a single `criterion N: PASS` line. Everything is exact except the
//! spectral estimate in criterion 10, which must sit within 1e-9 of the
//! exact eigenvalue.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use supertwist_core::family::{presets, FamilyAlgebra, FamilyDatum};
use supertwist_core::group::FiniteGroup;
use supertwist_core::hopf::twist::{
    cocycle_twist, twist_equation_check, verify_cocycle, PairForm,
};
use supertwist_core::hopf::verify::{verify_hopf, verify_triangular, Check};
use supertwist_core::hopf::group_algebra;
use supertwist_core::invariants::clifford::verify_clifford_blocks;
use supertwist_core::invariants::cohomology::hochschild_table;
use supertwist_core::invariants::fp::fp_dimension;
use supertwist_core::invariants::moduli::ModuliPoint;
use supertwist_core::invariants::{coalgebra_type, is_pointed};
use supertwist_core::linalg::Mat;
use supertwist_core::rep::Rep;
use supertwist_core::scalar::{rat, CycScalar};

const PRESETS: [&str; 3] = ["case1", "case2", "case3"];

fn lam(l1: i64, l2: i64, l3: i64) -> [CycScalar; 3] {
    [
        CycScalar::from_int(l1),
        CycScalar::from_int(l2),
        CycScalar::from_int(l3),
    ]
}

fn random_lambda(rng: &mut ChaCha8Rng) -> [CycScalar; 3] {
    [
        CycScalar::rational(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
        CycScalar::rational(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
        CycScalar::rational(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
    ]
}

fn random_nonzero_lambda(rng: &mut ChaCha8Rng) -> [CycScalar; 3] {
    loop {
        let l = random_lambda(rng);
        if l.iter().any(|c| !c.is_zero()) {
            return l;
        }
    }
}

/// The involution family on a single odd line over Z2.
fn line_datum(b: CycScalar) -> FamilyDatum {
    let group = FiniteGroup::product_of_cyclics(&[2]).unwrap();
    let rep = Rep::from_character_weights(&group, &[vec![1]]).unwrap();
    let mut bform = Mat::zeros(1, 1);
    bform.set(0, 0, b);
    FamilyDatum::new(rep, 1, bform).unwrap()
}

#[test]
fn criterion_01_presets_build_and_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut builds = 0;
    let mut slowest = 0.0f64;
    for name in PRESETS {
        for round in 0..6 {
            let lambda = if round == 0 {
                lam(1, 1, 1)
            } else {
                random_lambda(&mut rng)
            };
            let t0 = Instant::now();
            let fam = FamilyAlgebra::build(presets::by_name(name, &lambda).unwrap()).unwrap();
            assert_eq!(fam.dim(), 32);
            let report = verify_hopf(fam.hopf());
            assert!(report.is_ok(), "{name}: {:?}", report.first_failure());
            let dt = t0.elapsed().as_secs_f64();
            assert!(dt < 60.0, "{name} took {dt:.1}s to build and verify");
            slowest = slowest.max(dt);
            builds += 1;
        }
    }
    println!(
        "criterion 1: PASS — {builds} preset builds at dimension 32, every axiom exact, \
         slowest {slowest:.2}s"
    );
}

#[test]
fn criterion_02_coproduct_identity_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut checked = 0;
    for name in PRESETS {
        for round in 0..2 {
            let lambda = if round == 0 {
                lam(1, 1, 1)
            } else {
                random_lambda(&mut rng)
            };
            let datum = presets::by_name(name, &lambda).unwrap();
            assert!(datum.coproduct_oracle_check().unwrap(), "{name} failed");
            checked += datum.smash().dim();
        }
    }
    for _ in 0..5 {
        let b = CycScalar::rational(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        let datum = line_datum(b);
        assert!(datum.coproduct_oracle_check().unwrap());
        checked += datum.smash().dim();
    }
    println!(
        "criterion 2: PASS — J⁻¹Δ(x)J = Δ(x)·exp(B − Bᵍ) exactly on {checked} basis \
         elements across presets and the involution line"
    );
}

#[test]
fn criterion_03_exponential_twist_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let mut runs = 0;
    for name in PRESETS {
        for round in 0..3 {
            let lambda = if round == 0 {
                lam(1, 1, 1)
            } else {
                random_lambda(&mut rng)
            };
            let datum = presets::by_name(name, &lambda).unwrap();
            let h = datum.supergroup_hopf().unwrap();
            let j = datum.super_twist().unwrap();
            let report = twist_equation_check(&h, &j);
            assert!(report.is_ok(), "{name}: {:?}", report.first_failure());
            runs += 1;
        }
    }
    for _ in 0..3 {
        let datum = line_datum(CycScalar::rational(
            rng.gen_range(-6..=6),
            rng.gen_range(1..=3),
        ));
        let report =
            twist_equation_check(&datum.supergroup_hopf().unwrap(), &datum.super_twist().unwrap());
        assert!(report.is_ok(), "failure: {:?}", report.first_failure());
        runs += 1;
    }
    println!(
        "criterion 3: PASS — e^B satisfied invertibility, counit normalization and the \
         cocycle equation in {runs} supergroup algebras"
    );
}

#[test]
fn criterion_04_clifford_block_decomposition() {
    for name in PRESETS {
        let fam = FamilyAlgebra::build(presets::by_name(name, &lam(1, 1, 1)).unwrap()).unwrap();
        let blocks = fam.block_decomposition().unwrap();
        assert_eq!(blocks.len(), 4, "{name}: expected |G|/2 = 4 blocks");
        assert!(blocks.iter().all(|b| b.members.len() == 8));

        let report = verify_clifford_blocks(&fam).unwrap();
        assert!(report.is_ok(), "{name}: {:?}", report.failures().next());
        assert_eq!(report.block_dim, 8);
        let d = fam.datum();
        for block in &report.blocks {
            // The audited form is diag(B − Bʰ, 1) for the block's coset.
            let diff = d.bform().sub(&d.b_conj(block.coset_rep));
            let nv = d.nv();
            let mut expected = Mat::zeros(nv + 1, nv + 1);
            for i in 0..nv {
                for j in 0..nv {
                    expected.set(i, j, diff.at(i, j).clone());
                }
            }
            expected.set(nv, nv, CycScalar::one());
            assert_eq!(block.form.matrix, expected, "{name}: form mismatch");
        }
        assert_eq!(report.blocks[0].coset_rep, d.group().identity());
        assert_eq!(report.blocks[0].rank, 0, "{name}: identity coset deformed");
    }
    println!(
        "criterion 4: PASS — every preset splits into 4 coalgebra blocks of dimension 8 \
         obeying the Clifford relations for diag(B − Bʰ, 1), identity coset rank 0"
    );
}

#[test]
fn criterion_05_coalgebra_type_values() {
    let expected: [([CycScalar; 3], Vec<usize>); 3] = [
        (lam(1, 0, 0), vec![0, 1, 1, 1]),
        (lam(1, 1, 1), vec![0, 2, 2, 2]),
        (lam(0, 0, 0), vec![0, 0, 0, 0]),
    ];
    for (lambda, ranks) in &expected {
        // The rank profile comes straight off the datum, before and
        // independently of the full 32-dimensional construction.
        let datum = presets::case1(lambda).unwrap();
        assert_eq!(coalgebra_type(&datum).ranks(), &ranks[..]);
        // Stable across runs and across the build.
        assert_eq!(coalgebra_type(&datum).ranks(), &ranks[..]);
        let fam = FamilyAlgebra::build(datum).unwrap();
        assert_eq!(coalgebra_type(fam.datum()).ranks(), &ranks[..]);
    }
    println!(
        "criterion 5: PASS — case 1 rank multisets {{0,1,1,1}}, {{0,2,2,2}}, {{0,0,0,0}} \
         at λ = (1,0,0), (1,1,1), (0,0,0)"
    );
}

#[test]
fn criterion_06_pointedness_locus() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let mut grid = 0;
    for name in PRESETS {
        // 20 forms per preset: the origin plus 19 nonzero triples. The
        // invariant part of S²V is zero in all three families, so only
        // B = 0 may be pointed.
        for round in 0..20 {
            let lambda = if round == 0 {
                lam(0, 0, 0)
            } else {
                random_nonzero_lambda(&mut rng)
            };
            let zero = lambda.iter().all(|c| c.is_zero());
            let datum = presets::by_name(name, &lambda).unwrap();
            // `is_pointed` runs the membership test and the rank-profile
            // test and refuses to answer if they disagree.
            assert_eq!(is_pointed(&datum).unwrap(), zero, "{name} at round {round}");
            grid += 1;
        }
    }
    // One odd line over Z2: S²V is the trivial character, so every form
    // is invariant and the member stays pointed.
    for k in -3i64..=3 {
        assert!(is_pointed(&line_datum(CycScalar::rational(k, 2))).unwrap());
        grid += 1;
    }
    println!(
        "criterion 6: PASS — pointedness matched the (S²V)^G locus on {grid} forms with \
         both decision procedures agreeing"
    );
}

#[test]
fn criterion_07_hochschild_cohomology() {
    // The 8-dimensional smash product over Z4: both columns computed
    // independently, equal degree by degree.
    let group = FiniteGroup::product_of_cyclics(&[4]).unwrap();
    let rep = Rep::from_character_weights(&group, &[vec![1]]).unwrap();
    let small = FamilyDatum::new(rep, 2, Mat::zeros(1, 1)).unwrap();
    let table = hochschild_table(&small.supergroup_hopf().unwrap(), 2).unwrap();
    assert_eq!(table, vec![1, 0, 0]);
    let yardstick: Vec<usize> = (0..=2)
        .map(|i| {
            small
                .rep()
                .dual()
                .symmetric_power(i)
                .invariant_subspace()
                .len()
        })
        .collect();
    assert_eq!(table, yardstick);

    // Degree 2 at dimension 32, exact sparse elimination, minutes at most.
    let big = presets::case1(&lam(1, 1, 1)).unwrap();
    let t0 = Instant::now();
    let table32 = hochschild_table(&big.supergroup_hopf().unwrap(), 2).unwrap();
    let dt = t0.elapsed().as_secs_f64();
    assert!(dt < 300.0, "degree-2 cohomology took {dt:.0}s");
    assert_eq!(table32[2], 0);
    let s2_invariants = big
        .rep()
        .dual()
        .symmetric_power(2)
        .invariant_subspace()
        .len();
    assert_eq!(table32[2], s2_invariants);
    println!(
        "criterion 7: PASS — (H⁰,H¹,H²) = (1,0,0) twice over on the Z4 smash product; \
         H² = 0 = dim (S²V*)^G at dimension 32 in {dt:.1}s"
    );
}

#[test]
fn criterion_08_moduli_classification() {
    let point = |a: i64, b: i64, c: i64| {
        ModuliPoint::new(
            CycScalar::from_int(a),
            CycScalar::from_int(b),
            CycScalar::from_int(c),
        )
    };
    assert!(point(1, 1, 1).equivalent_to(&point(4, 1, 2)));
    assert!(point(1, 2, 0).equivalent_to(&point(2, 1, 0)));
    assert!(!point(1, 1, 1).equivalent_to(&point(1, 1, 2)));
    assert_eq!(
        point(1, 1, 1).scale_invariant().unwrap(),
        CycScalar::one()
    );
    assert_eq!(
        point(1, 1, 2).scale_invariant().unwrap(),
        CycScalar::rational(1, 4)
    );

    // 100 random pairs, half constructed inside an orbit, half arbitrary:
    // wherever equivalence holds, the rank profile and the cross-term
    // invariant must agree.
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let mut equivalents = 0;
    for round in 0..100 {
        let p_lambda = random_lambda(&mut rng);
        let p = ModuliPoint::new(
            p_lambda[0].clone(),
            p_lambda[1].clone(),
            p_lambda[2].clone(),
        );
        let q = if round % 2 == 0 {
            let t = nonzero_scalar(&mut rng);
            let s = nonzero_scalar(&mut rng);
            let scaled = [
                &(&t * &t) * &p.lambda[0],
                &(&s * &s) * &p.lambda[1],
                &(&t * &s) * &p.lambda[2],
            ];
            if rng.gen_bool(0.5) {
                ModuliPoint::new(scaled[1].clone(), scaled[0].clone(), scaled[2].clone())
            } else {
                ModuliPoint::new(scaled[0].clone(), scaled[1].clone(), scaled[2].clone())
            }
        } else {
            let l = random_lambda(&mut rng);
            ModuliPoint::new(l[0].clone(), l[1].clone(), l[2].clone())
        };
        if !p.equivalent_to(&q) {
            continue;
        }
        equivalents += 1;
        let dp = presets::case1(&p.lambda).unwrap();
        let dq = presets::case1(&q.lambda).unwrap();
        assert_eq!(coalgebra_type(&dp), coalgebra_type(&dq));
        match (p.scale_invariant(), q.scale_invariant()) {
            (Some(a), Some(b)) => assert_eq!(a, b),
            (None, None) => {}
            _ => panic!("equivalent triples disagree on whether λ₁λ₂/λ₃² is defined"),
        }
    }
    assert!(equivalents >= 40, "only {equivalents} equivalent pairs sampled");

    // The three families differ already in their (G, weights) data.
    let summaries: Vec<_> = PRESETS
        .iter()
        .map(|name| family_signature(&presets::by_name(name, &lam(1, 1, 1)).unwrap()))
        .collect();
    assert_ne!(summaries[0], summaries[1]);
    assert_ne!(summaries[0], summaries[2]);
    assert_ne!(summaries[1], summaries[2]);
    println!(
        "criterion 8: PASS — reference orbits reproduced, {equivalents} equivalent pairs \
         kept type and invariant, three families separated by (G, weights)"
    );
}

fn nonzero_scalar(rng: &mut ChaCha8Rng) -> CycScalar {
    loop {
        let t = CycScalar::rational(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        if !t.is_zero() {
            return t;
        }
    }
}

/// The discrete datum behind a family: factor orders plus the multiset of
/// character weight columns, read off the generator matrices.
fn family_signature(d: &FamilyDatum) -> (Vec<u32>, Vec<Vec<String>>) {
    let group = d.group();
    let orders = group.factor_orders().to_vec();
    let mut characters: Vec<Vec<String>> = (0..d.nv())
        .map(|i| {
            (0..orders.len())
                .map(|k| {
                    let mut exps = vec![0i64; orders.len()];
                    exps[k] = 1;
                    let gen = group.from_exponents(&exps);
                    d.rep().matrix(gen).at(i, i).to_string()
                })
                .collect()
        })
        .collect();
    characters.sort();
    (orders, characters)
}

#[test]
fn criterion_09_cocycle_twisting() {
    let group = FiniteGroup::product_of_cyclics(&[4]).unwrap();
    let h = group_algebra(&group);
    let zi = CycScalar::root_of_unity(4, 1);

    let trivial: PairForm = (0..4)
        .flat_map(|i| (0..4).map(move |j| ([i, j], CycScalar::one())))
        .collect();
    let mut bicharacter = PairForm::new();
    for i in 0..4usize {
        for j in 0..4usize {
            bicharacter.insert([i, j], zi.pow((i * j) as i64));
        }
    }

    for (name, sigma) in [("trivial", &trivial), ("bicharacter", &bicharacter)] {
        let audit = verify_cocycle(&h, sigma).unwrap();
        assert!(audit.is_ok(), "{name}: {:?}", audit.first_failure());
        let twisted = cocycle_twist(&h, sigma).unwrap();
        assert!(verify_hopf(&twisted).is_ok(), "{name} output failed the axioms");
        // A cocycle moves multiplication only: the coalgebra tables come
        // through untouched.
        for i in 0..h.dim() {
            assert_eq!(twisted.comul_basis(i), h.comul_basis(i), "{name}");
            assert_eq!(twisted.counit_basis(i), h.counit_basis(i), "{name}");
        }
    }
    println!(
        "criterion 9: PASS — trivial and bicharacter cocycles audited and twisted on \
         C[Z4]; outputs are Hopf, coalgebra constants byte-identical"
    );
}

#[test]
fn criterion_10_frobenius_perron_dimensions() {
    let snapshots: [&[u32]; 10] = [
        &[2],
        &[3],
        &[4],
        &[5],
        &[6],
        &[7],
        &[8],
        &[2, 2],
        &[2, 4],
        &[2, 2, 2],
    ];
    let mut objects = 0;
    for orders in snapshots {
        let group = FiniteGroup::product_of_cyclics(orders).unwrap();
        let n = group.order();
        let dims = vec![1i64; n];
        // Every simple character permutes the basis: exact eigenvalue 1.
        for g in 0..n {
            let mut fusion = vec![vec![0i64; n]; n];
            for x in 0..n {
                fusion[x][group.mul(g, x)] = 1;
            }
            let report = fp_dimension(&fusion, &dims).unwrap();
            assert_eq!(report.exact, rat(1, 1));
            assert!((report.estimate - 1.0).abs() <= 1e-9);
            objects += 1;
        }
        // The regular element sees the full dimension |G|.
        let fusion = vec![vec![1i64; n]; n];
        let report = fp_dimension(&fusion, &dims).unwrap();
        assert_eq!(report.exact, rat(n as i64, 1));
        assert!((report.estimate - n as f64).abs() <= 1e-9);
        objects += 1;
    }
    println!(
        "criterion 10: PASS — fusion·dims = d·dims exact and the spectral estimate \
         within 1e-9 on {objects} objects over groups of order ≤ 8"
    );
}

#[test]
fn criterion_11_triangularity_verifier() {
    let fam = FamilyAlgebra::build(line_datum(CycScalar::zero())).unwrap();
    let report = verify_triangular(fam.hopf());
    assert!(report.is_ok(), "failure: {:?}", report.first_failure());
    for check in [
        Check::QuasiCocommutative,
        Check::HexagonFirst,
        Check::HexagonSecond,
        Check::Unitarity,
    ] {
        let entry = report.results.iter().find(|(c, _)| *c == check);
        assert!(
            matches!(entry, Some((_, None))),
            "{} missing or failed",
            check.name()
        );
    }

    // Swapping in R = 1⊗1 must break quasi-cocommutativity, with the
    // witness naming where the two coproducts part ways.
    let degenerate = fam
        .hopf()
        .clone()
        .with_rmatrix(fam.hopf().tensor2_unit())
        .unwrap();
    let report = verify_triangular(&degenerate);
    let f = report.first_failure().expect("1⊗1 cannot be quasi-cocommutative here");
    assert_eq!(f.check, Check::QuasiCocommutative);
    assert!(!f.location.is_empty(), "no witness reported");
    assert!(!f.detail.is_empty(), "no witness reported");
    println!(
        "criterion 11: PASS — R_u passed all four triangularity checks on the involution \
         line; R = 1⊗1 failed quasi-cocommutativity at {}",
        fam.hopf().label(f.location[0])
    );
}
