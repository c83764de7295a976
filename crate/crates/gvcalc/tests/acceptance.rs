//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Expected values are either exact reference values or recomputed here by
//! oracles that do not share code with the implementation path they check
//! (long division on raw coefficient vectors, Möbius sums, brute-force
//! divisor enumeration).

use std::time::Instant;

use gvcalc::ade::{
    euler_char_chain, quotient_degree_check, symbolic_power, vanishing_order, ChartOverrides,
    ContractionCase,
};
use gvcalc::rational::{frac, rat, Rational};
use gvcalc::series::{CurveClass, DegreeFunctional};
use gvcalc::sheaf::lemma_iv_audit;
use gvcalc::transform::{
    gv_from_gw_all_genus, gv_from_gw_genus0, gw_from_gv, integrality_check, local_contribution,
    InvariantTable, LocalMultiplicities,
};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn rank1(d: u64) -> CurveClass {
    CurveClass::new(vec![d])
}

fn unit_functional() -> DegreeFunctional {
    DegreeFunctional::new(vec![1]).unwrap()
}

#[test]
fn criterion_01_a1_appendix_table() {
    let start = Instant::now();
    let expected_gens: [&[(u32, u32)]; 5] = [
        &[(1, 0), (0, 1)], // (x, z)
        &[(1, 0)],         // (x)
        &[(2, 0), (1, 1)], // (x², xz)
        &[(2, 0)],         // (x²)
        &[(3, 0), (2, 1)], // (x³, x²z)
    ];
    let expected_orders = [1u32, 1, 2, 2, 3];
    for j in 1..=5u32 {
        let ideal = symbolic_power(1, j);
        let gens: Vec<(u32, u32)> = ideal.generators.iter().map(|g| (g.a, g.c)).collect();
        assert_eq!(gens, expected_gens[j as usize - 1], "j={j}");
        assert_eq!(vanishing_order(1, j), expected_orders[j as usize - 1], "j={j}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_micros() < 1000, "took {elapsed:?}, budget 1 ms");
    println!("criterion 1: PASS (A1 table, {elapsed:?})");
}

#[test]
fn criterion_02_a2_vanishing_orders() {
    let orders: Vec<u32> = (1..=5).map(|j| vanishing_order(2, j)).collect();
    assert_eq!(orders, vec![1, 2, 2, 3, 4]);
    println!("criterion 2: PASS (A2 orders 1,2,2,3,4)");
}

#[test]
fn criterion_03_degree_theorem() {
    let start = Instant::now();
    let mut checks = 0;
    for case in [
        ContractionCase::D4L2,
        ContractionCase::E6L3,
        ContractionCase::E7L4,
        ContractionCase::E8L6,
    ] {
        for j in 1..case.length() {
            let check = quotient_degree_check(case, j, None).unwrap();
            assert_eq!(check.degree, -1, "{} j={j}", case.name());
            assert!(!check.uses_override);
            checks += 1;
        }
    }
    // the two worked instances, with their exact breakdowns
    let d4 = quotient_degree_check(ContractionCase::D4L2, 1, None).unwrap();
    assert_eq!(
        (d4.smooth_degree, d4.terms.iter().map(|t| t.order).collect::<Vec<_>>()),
        (2, vec![1, 1, 1])
    );
    let e6 = quotient_degree_check(ContractionCase::E6L3, 2, None).unwrap();
    assert_eq!(
        (e6.smooth_degree, e6.terms.iter().map(|t| t.order).collect::<Vec<_>>()),
        (4, vec![2, 2, 1])
    );
    // E8_5 passes only with the constraint-derived override and is flagged
    let overrides = ChartOverrides::e8_length5_default();
    for j in 1..5 {
        let check = quotient_degree_check(ContractionCase::E8L5, j, Some(&overrides)).unwrap();
        assert_eq!(check.degree, -1);
        assert!(check.uses_override, "E8_5 must be flagged non-independent");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_millis() < 10, "took {elapsed:?}, budget 10 ms");
    println!("criterion 3: PASS (degree -1 for {checks} standard checks + E8_5 flagged, {elapsed:?})");
}

#[test]
fn criterion_04_multiple_cover_cube_weights() {
    let mut gv = InvariantTable::new(1, 20, 0);
    gv.insert(rank1(1), 0, rat(1)).unwrap();
    let gw = gw_from_gv(&gv, &unit_functional()).unwrap();
    for d in 1..=20i64 {
        assert_eq!(gw.get(&rank1(d as u64), 0), frac(1, d * d * d), "d={d}");
    }
    println!("criterion 4: PASS (N⁰ = 1/d³ for d = 1..20)");
}

/// Long-division oracle on raw coefficient vectors: the coefficient of λ⁰
/// in (2 sin(dλ/2))⁻², computed without the series module.
fn genus1_kernel_constant_oracle(d: i64) -> Rational {
    // (2 sin(dλ/2))² = Σ_i q_i λ^(2+2i) by convolving the odd sine
    // coefficients s_k = (-1)^k d^(2k+1) / (4^k (2k+1)!)
    let terms = 4usize;
    let mut sine = Vec::with_capacity(terms);
    let mut fact = rat(1);
    let mut n = 1i64;
    for k in 0..terms as i64 {
        // fact = (2k+1)! built incrementally
        while n < 2 * k + 1 {
            n += 1;
            fact *= rat(n);
        }
        let mut c = rat(d.pow(2 * k as u32 + 1)) / (rat(4i64.pow(k as u32)) * fact.clone());
        if k % 2 == 1 {
            c = -c;
        }
        sine.push(c);
    }
    let mut square = vec![Rational::zero(); terms];
    for i in 0..terms {
        for j in 0..terms - i {
            square[i + j] += &sine[i] * &sine[j];
        }
    }
    // invert 1/(q_0 + q_1 x + ...) with x = λ²; the λ⁰ coefficient of the
    // kernel is the x¹ coefficient of the inverse
    let mut inv = vec![Rational::zero(); terms];
    inv[0] = rat(1) / &square[0];
    for m in 1..terms {
        let mut acc = Rational::zero();
        for i in 1..=m {
            acc += &square[i] * &inv[m - i];
        }
        inv[m] = -acc / &square[0];
    }
    inv[1].clone()
}

#[test]
fn criterion_05_genus_one_covers() {
    let mut gv = InvariantTable::new(1, 10, 1);
    gv.insert(rank1(1), 0, rat(1)).unwrap();
    let gw = gw_from_gv(&gv, &unit_functional()).unwrap();
    for d in 1..=10i64 {
        let expected = genus1_kernel_constant_oracle(d) / rat(d);
        assert_eq!(expected, frac(1, 12 * d), "oracle disagrees with 1/(12d)");
        assert_eq!(gw.get(&rank1(d as u64), 1), expected, "d={d}");
    }
    println!("criterion 5: PASS (N¹ = 1/(12d) for d = 1..10, oracle-checked)");
}

fn random_gv_table(rng: &mut StdRng) -> (InvariantTable, DegreeFunctional) {
    let rank = rng.gen_range(1..=2usize);
    let degree_cap = rng.gen_range(2..=8u64);
    let genus_cap = rng.gen_range(0..=3u32);
    let functional = DegreeFunctional::new(vec![1; rank]).unwrap();
    let mut table = InvariantTable::new(rank, degree_cap, genus_cap);
    for _ in 0..rng.gen_range(1..=6) {
        let coords: Vec<u64> = (0..rank).map(|_| rng.gen_range(0..=degree_cap / 2)).collect();
        let class = CurveClass::new(coords);
        if class.is_zero() || functional.degree(&class) > degree_cap {
            continue;
        }
        let genus = rng.gen_range(0..=genus_cap);
        let value = rat(rng.gen_range(-5..=5i64));
        let _ = table.insert(class, genus, value);
    }
    (table, functional)
}

#[test]
fn criterion_06_all_genus_round_trip() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x6176);
    let mut nonempty = 0;
    for trial in 0..120 {
        let (gv, functional) = random_gv_table(&mut rng);
        if !gv.is_empty() {
            nonempty += 1;
        }
        let gw = gw_from_gv(&gv, &functional).unwrap();
        let back = gv_from_gw_all_genus(&gw);
        assert!(back.same_values(&gv), "round trip failed on trial {trial}");
    }
    assert!(nonempty >= 100, "only {nonempty} nonempty tables generated");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5, "took {elapsed:?}, budget 5 s");
    println!("criterion 6: PASS (round trip on {nonempty} random tables, {elapsed:?})");
}

/// Möbius function on 1..=n.
fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

#[test]
fn criterion_07_moebius_oracle_equivalence() {
    let mut rng = StdRng::seed_from_u64(0x4d6f);
    for trial in 0..50 {
        let mut gw = InvariantTable::new(1, 12, 0);
        for d in 1..=12u64 {
            let value = frac(rng.gen_range(-20..=20i64), rng.gen_range(1..=9i64));
            gw.insert(rank1(d), 0, value).unwrap();
        }
        let gv = gv_from_gw_genus0(&gw);
        // independent route: n⁰_d = Σ_{k|d} μ(k) N⁰_{d/k} / k³
        for d in 1..=12u64 {
            let mut expected = Rational::zero();
            for k in 1..=d {
                if d % k == 0 {
                    let mu = moebius(k);
                    if mu != 0 {
                        expected += rat(mu) * gw.get(&rank1(d / k), 0) / rat((k * k * k) as i64);
                    }
                }
            }
            assert_eq!(gv.get(&rank1(d), 0), expected, "trial {trial} d={d}");
        }
    }
    println!("criterion 7: PASS (Möbius oracle, 50 random rank-1 tables)");
}

#[test]
fn criterion_08_integrality_audit() {
    let mut gw = InvariantTable::new(1, 2, 0);
    gw.insert(rank1(1), 0, rat(2)).unwrap();
    gw.insert(rank1(2), 0, rat(1)).unwrap();
    let gv = gv_from_gw_genus0(&gw);
    assert_eq!(gv.get(&rank1(2), 0), frac(3, 4));
    let report = integrality_check(&gv);
    assert!(!report.is_pass());
    assert!(report
        .failures
        .iter()
        .any(|f| f.class == vec![2] && f.genus == 0 && f.value == "3/4"));

    // any forward image of an integer table inverts to an integer table
    let mut rng = StdRng::seed_from_u64(0x696e);
    for _ in 0..25 {
        let (gv, functional) = random_gv_table(&mut rng);
        let gw = gw_from_gv(&gv, &functional).unwrap();
        let back = gv_from_gw_all_genus(&gw);
        assert!(integrality_check(&back).is_pass());
    }
    println!("criterion 8: PASS (3/4 flagged; integer images audit clean)");
}

#[test]
fn criterion_09_stability_margins() {
    let mut count = 0;
    for i in 1..=6u32 {
        assert_eq!(euler_char_chain(i).unwrap(), 1);
        for lc in 1..=5u64 {
            let report = lemma_iv_audit(i, lc).unwrap();
            assert!(report.all_strict());
            for row in &report.rows {
                let expected = frac(1, (i as u64 * lc) as i64);
                assert_eq!(row.margin, gvcalc::rational::format_rational(&expected));
                count += 1;
            }
        }
    }
    assert_eq!(count, 75);
    println!("criterion 9: PASS (75 strict margins of 1/(i·LC); χ = 1 throughout)");
}

#[test]
fn criterion_10_local_contribution_bridge() {
    let mut rng = StdRng::seed_from_u64(0x6c63);
    for trial in 0..20 {
        let len = rng.gen_range(1..=6usize);
        let values: Vec<i64> = (0..len).map(|_| rng.gen_range(-9..=9i64)).collect();
        let mult = LocalMultiplicities::new(values.clone()).unwrap();
        // rank-1 GV table {i·[C] ↦ n_i}
        let mut gv = InvariantTable::new(1, 12, 0);
        for (i, &n) in values.iter().enumerate() {
            gv.insert(rank1(i as u64 + 1), 0, rat(n)).unwrap();
        }
        let gw = gw_from_gv(&gv, &unit_functional()).unwrap();
        for d in 1..=12u64 {
            assert_eq!(
                local_contribution(&mult, d),
                gw.get(&rank1(d), 0),
                "trial {trial} d={d}"
            );
        }
    }
    println!("criterion 10: PASS (divisor sum matches genus-0 expansion)");
}
