//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Every comparison is exact.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lee_core::criteria::{
    general_tiling_criterion, pk_condition, residue_scan, zg_classify, capital_f, eta,
    zhang_ge_condition, Verdict, Witness, ZGStatus,
};
use lee_core::exactarith::{
    binomial, binomial_mod_p2_davis_webb, lucas_binomial_mod_p, residue,
};
use lee_core::leeball::{
    delta3, enumerate_ball, lee_ball_size, p1, p2, polynomial_in_n, regularity_report,
    scaled_size_polynomial_in_e, Delta3, Norm, Quantity,
};
use lee_core::partitions::{merca_expand, partitions_of, IntPartition};
use lee_core::qpoly::{moment_sum_enumerated, p3, pk_lee, pk_regular, q_eval_direct, q_expansion};

fn report(number: u32, name: &str) {
    // reached only after every assertion in the test held
    println!("criterion {number:2} ({name}): pass");
}

#[test]
fn criterion_01_cubic_golden_values() {
    let f = scaled_size_polynomial_in_e(3);
    assert_eq!(format!("{f}"), "8e^3 + 12e^2 + 16e + 6");
    assert_eq!(f.eval_i64(4), BigInt::from(774));
    assert_eq!(f.eval_i64(22), BigInt::from(91350));
    assert_eq!(p1(3, 4), BigInt::from(276));
    report(1, "degree-3 golden values");
}

#[test]
fn criterion_02_degree_twelve_golden_values() {
    let f = scaled_size_polynomial_in_e(12);
    let expect: Vec<BigInt> = [
        479001600i64,
        1799331840,
        3130103808,
        2940850176,
        2188865536,
        919142400,
        402980864,
        85966848,
        25479168,
        2703360,
        585728,
        24576,
        4096,
    ]
    .into_iter()
    .map(BigInt::from)
    .collect();
    assert_eq!(f.coeffs(), expect.as_slice());
    assert_eq!(p1(12, 3), BigInt::from(732));
    assert_eq!(p1(12, 5), BigInt::from(45870));

    let m37 = 3u64.pow(7);
    let (lo, hi) = (3u64.pow(6), 2 * 3u64.pow(6));
    let mut count = 0;
    for b in 0..243i64 {
        for a in [3i64, 5] {
            let r = residue(&f.eval_i64(a + 9 * b), m37);
            assert!(r == lo || r == hi, "e={}", a + 9 * b);
            count += 1;
        }
    }
    assert_eq!(count, 486);
    report(2, "degree-12 golden values");
}

#[test]
fn criterion_03_shifted_radius_family() {
    let f = scaled_size_polynomial_in_e(12);
    let m37 = 3u64.pow(7);
    let (lo, hi) = (3u64.pow(6), 2 * 3u64.pow(6));
    let mut count = 0;
    for b in 0..27i64 {
        for a in (9..18i64).chain(63..72) {
            let r = residue(&f.eval_i64(a + 81 * b), m37);
            assert!(r == lo || r == hi, "e={}", a + 81 * b);
            count += 1;
        }
    }
    assert_eq!(count, 486);
    for a in 9..18i64 {
        assert_eq!(residue(&p1(12, a), 3), 0, "a={a}");
    }
    report(3, "shifted radius family");
}

#[test]
fn criterion_04_folded_residue_table() {
    for t in (27..=35i64).chain(207..=215) {
        assert_eq!(capital_f(t), 3, "e~={t}");
    }
    for t in (36..=53i64).chain(189..=206) {
        assert_eq!(capital_f(t), 6, "e~={t}");
    }
    report(4, "folded residue table");
}

#[test]
fn criterion_05_eta_table_and_binomial_profile() {
    let table: [(u64, u64, u64, u64); 13] = [
        (0, 0, 0, 1),
        (0, 0, 1, 3),
        (0, 0, 2, 3),
        (0, 1, 0, 4),
        (0, 1, 1, 0),
        (0, 1, 2, 0),
        (0, 2, 0, 6),
        (0, 2, 1, 0),
        (0, 2, 2, 0),
        (1, 0, 0, 4),
        (1, 0, 1, 3),
        (1, 0, 2, 3),
        (1, 1, 0, 1),
    ];
    for (a, b, c, expect) in table {
        assert_eq!(eta(a, b, c).unwrap(), expect, "eta({a},{b},{c})");
    }

    // full C(n,i) mod 9 profile for n = 3^{m+1} + 3^m
    for m in [2u32, 3] {
        let n = 3i64.pow(m + 1) + 3i64.pow(m);
        let step = 3i64.pow(m - 1);
        for i in 0..=n {
            let got = residue(&binomial(n, i), 9);
            let expect = if i % step != 0 {
                0
            } else {
                match i / step {
                    0 | 12 => 1,
                    1 | 2 | 10 | 11 => 3,
                    3 | 9 => 4,
                    6 => 6,
                    _ => 0,
                }
            };
            assert_eq!(got, expect, "m={m} i={i}");
        }
    }
    report(5, "eta table and binomial profile");
}

#[test]
fn criterion_06_euclidean_ball_certificate() {
    let ball = enumerate_ball(3, 8, Norm::L(2)).unwrap();
    assert_eq!(ball.len(), 2109);
    let j1 = IntPartition::new(vec![1]).unwrap();
    assert_eq!(moment_sum_enumerated(&ball, &j1), BigInt::from(26688));
    let cert = general_tiling_criterion(&ball, 3).unwrap();
    assert_eq!(cert.verdict, Verdict::NonExistence);
    report(6, "euclidean ball certificate");
}

#[test]
fn criterion_07_scaled_polynomials_and_scans() {
    let cases: [(Quantity, u32, i64, &[i64]); 6] = [
        (Quantity::K, 6, 45, &[45, 138, 196, 120, 70, 12, 4]),
        (Quantity::P1, 6, 15, &[630, 1032, 720, 280, 60, 8]),
        (Quantity::P2, 6, 15, &[13230, 14232, 6360, 1480, 180, 8]),
        (Quantity::K, 7, 315, &[315, 1056, 1372, 1232, 490, 224, 28, 8]),
        (Quantity::P1, 7, 45, &[2520, 4488, 3512, 1560, 440, 72, 8]),
        (Quantity::P2, 7, 45, &[70560, 85704, 44912, 13080, 2240, 216, 8]),
    ];
    for (q, e, scale, coeffs) in cases {
        let (s, poly) = polynomial_in_n(q, e).unwrap();
        assert_eq!(s, BigInt::from(scale), "{} e={e}", q.name());
        let expect: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(poly.coeffs(), expect.as_slice(), "{} e={e}", q.name());
    }

    let hits = residue_scan(6, 5, 125).unwrap();
    let expect: BTreeSet<u64> = [22, 47, 72, 97, 122].into_iter().collect();
    assert_eq!(hits, expect);

    let hits = residue_scan(7, 5, 125).unwrap();
    let expect: BTreeSet<u64> =
        [13, 23, 38, 48, 63, 73, 88, 98, 113, 123].into_iter().collect();
    assert_eq!(hits, expect);
    report(7, "scaled polynomials and residue scans");
}

#[test]
fn criterion_08_residue_class_coverage() {
    for n in 1..=500i64 {
        if n % 27 == 12 || n % 27 == 21 {
            assert_eq!(zhang_ge_condition(n, 3).verdict, Verdict::NonExistence, "n={n} e=3");
        }
        if matches!(n % 27, 3 | 5 | 21 | 23) {
            assert_eq!(zhang_ge_condition(n, 4).verdict, Verdict::NonExistence, "n={n} e=4");
        }
    }
    report(8, "residue class coverage");
}

#[test]
fn criterion_09_oracle_suite() {
    // ball size vs enumeration
    for n in 1..=4u32 {
        for e in 0..=5u32 {
            let ball = enumerate_ball(n, e, Norm::L(1)).unwrap();
            assert_eq!(BigInt::from(ball.len()), lee_ball_size(n as i64, e as i64));
            assert!(regularity_report(&ball).is_regular());
        }
    }

    // expansion vs direct evaluation, and the two p_k routes
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in 1..=4u32 {
        for e in 1..=4u32 {
            let ball = enumerate_ball(n, e, Norm::L(1)).unwrap();
            for k in 1..=3u64 {
                assert_eq!(pk_lee(k, n as i64, e as i64).unwrap(), pk_regular(k, &ball).unwrap());
                let q = q_expansion(k, &ball).unwrap();
                for _ in 0..20 {
                    let x: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
                    assert_eq!(q.eval(&x), q_eval_direct(k, &ball, &x).unwrap());
                }
            }
        }
    }

    // radius-2 closed form (valid from n = 2; see the pinned n = 1 values)
    for k in 1..=5u64 {
        for n in 2..=10i64 {
            assert_eq!(
                pk_lee(k, n, 2).unwrap(),
                BigInt::from(4).pow(k as u32) + 4 * n + 2
            );
        }
    }
    assert_eq!(pk_lee(2, 1, 2).unwrap(), BigInt::from(34));

    // explicit low-order formulas vs the partition-sum engine
    for n in 1..=8i64 {
        for e in 1..=6i64 {
            assert_eq!(pk_lee(1, n, e).unwrap(), p1(n, e));
            assert_eq!(pk_lee(2, n, e).unwrap(), p2(n, e));
            assert_eq!(pk_lee(3, n, e).unwrap(), p3(n, e));
        }
    }
    report(9, "oracle suite");
}

#[test]
fn criterion_10_modular_arithmetic_suite() {
    // digit-product rule vs a Pascal triangle mod p, all a <= 3000
    for p in [3u64, 5, 7] {
        let mut row: Vec<u64> = vec![1];
        for a in 0..=3000u64 {
            for b in 0..=a {
                assert_eq!(
                    lucas_binomial_mod_p(a, b, p).unwrap(),
                    row[b as usize],
                    "a={a} b={b} p={p}"
                );
            }
            // next Pascal row mod p
            let mut next = vec![1u64; row.len() + 1];
            for i in 1..row.len() {
                next[i] = (row[i - 1] + row[i]) % p;
            }
            if !row.is_empty() {
                next[row.len()] = 1 % p;
                next[0] = 1 % p;
            }
            row = next;
        }
    }

    // two-digit congruence vs a Pascal triangle mod p², >= 10^4 pairs per prime
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for p in [3u64, 5, 7] {
        let p2m = p * p;
        let max_a = 1500u64;
        let mut samples: Vec<Vec<u64>> = vec![Vec::new(); max_a as usize + 1];
        for _ in 0..10_000 {
            let a = rng.gen_range(0..=max_a);
            // go past a occasionally to exercise the vanishing case
            let b = rng.gen_range(0..=a + 3);
            samples[a as usize].push(b);
        }
        let mut row: Vec<u64> = vec![1];
        for a in 0..=max_a {
            for &b in &samples[a as usize] {
                let exact = if b > a { 0 } else { row[b as usize] };
                assert_eq!(
                    binomial_mod_p2_davis_webb(a, b, p).unwrap(),
                    exact,
                    "a={a} b={b} p={p}"
                );
            }
            let mut next = vec![1u64; row.len() + 1];
            for i in 1..row.len() {
                next[i] = (row[i - 1] + row[i]) % p2m;
            }
            row = next;
        }
    }

    // mod-3 multiplicativity over base-3 digits
    for n in 0..81i64 {
        for e in 0..81i64 {
            let mut rhs = 1u64;
            let (mut a, mut b) = (n, e);
            for _ in 0..4 {
                rhs = rhs * residue(&lee_ball_size(a % 3, b % 3), 3) % 3;
                a /= 3;
                b /= 3;
            }
            assert_eq!(residue(&lee_ball_size(n, e), 3), rhs, "n={n} e={e}");
        }
    }

    // periodicity in n: shifting by multiples of 3^{h+1} fixes k mod 9 and p mod 3
    for m in [0u32, 1] {
        let h = m + 2;
        let period = 3i64.pow(h + 1);
        for n in 3i64.pow(m + 1)..2 * 3i64.pow(m + 1) {
            for e in 0..3i64.pow(h) {
                for a in 1..=3i64 {
                    let shifted = a * period + n;
                    assert_eq!(
                        residue(&lee_ball_size(shifted, e), 9),
                        residue(&lee_ball_size(n, e), 9),
                        "k m={m} n={n} e={e} a={a}"
                    );
                    assert_eq!(
                        residue(&p1(shifted, e), 3),
                        residue(&p1(n, e), 3),
                        "p m={m} n={n} e={e} a={a}"
                    );
                }
            }
        }
    }
    report(10, "modular arithmetic suite");
}

#[test]
fn criterion_11_classification_suite() {
    for e in 1..=100u64 {
        let c = zg_classify(e).unwrap();
        match delta3(e).unwrap() {
            Delta3::Infinite | Delta3::Finite(0) => {
                assert_eq!(c.status, ZGStatus::Empty, "e={e}");
                assert!(c.witness.is_none());
            }
            Delta3::Finite(1) => {
                let expect = match e % 9 {
                    3 | 5 => Witness { n0: 12, modulus_exponent: len3(e).max(4) },
                    4 => Witness { n0: 3, modulus_exponent: len3(e).max(3) },
                    _ => unreachable!(),
                };
                assert_eq!(c.witness, Some(expect), "e={e}");
            }
            Delta3::Finite(2) => {
                assert_eq!(
                    c.witness,
                    Some(Witness { n0: 12, modulus_exponent: len3(e).max(4) }),
                    "e={e}"
                );
            }
            Delta3::Finite(d) => {
                let m = d - 1;
                assert_eq!(
                    c.witness,
                    Some(Witness {
                        n0: 3u64.pow(m + 1) + 3u64.pow(m),
                        modulus_exponent: len3(e).max(m + 3),
                    }),
                    "e={e}"
                );
            }
        }
        // witness soundness at three representatives
        if let Some(w) = c.witness {
            let modulus = 3i64.pow(w.modulus_exponent);
            for t in 0..3i64 {
                assert_eq!(
                    zhang_ge_condition(w.n0 as i64 + t * modulus, e as i64).verdict,
                    Verdict::NonExistence,
                    "e={e} t={t}"
                );
            }
        }
    }

    for n in 1..=60i64 {
        for e in 1..=60i64 {
            assert_eq!(
                pk_condition(n, e, 3).unwrap().verdict,
                zhang_ge_condition(n, e).verdict,
                "n={n} e={e}"
            );
        }
    }
    report(11, "classification suite");
}

fn len3(e: u64) -> u32 {
    let mut len = 0;
    let mut m = e;
    while m > 0 {
        len += 1;
        m /= 3;
    }
    len.max(1)
}

/// augmented monomial by definition: sum over ordered tuples of distinct
/// indices of ∏ x_{i_s}^{j_s}
fn augmented_monomial_direct(j: &IntPartition, x: &[i64]) -> BigInt {
    fn rec(parts: &[u64], used: &mut Vec<bool>, x: &[i64], prod: &BigInt) -> BigInt {
        let Some((&part, rest)) = parts.split_first() else {
            return prod.clone();
        };
        let mut acc = BigInt::zero();
        for i in 0..x.len() {
            if !used[i] {
                used[i] = true;
                let p = prod * BigInt::from(x[i]).pow(part as u32);
                acc += rec(rest, used, x, &p);
                used[i] = false;
            }
        }
        acc
    }
    let mut used = vec![false; x.len()];
    rec(j.parts(), &mut used, x, &BigInt::one())
}

#[test]
fn criterion_12_monomial_expansion_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for k in 1..=6u64 {
        for j in partitions_of(k, k as usize) {
            let expansion = merca_expand(&j);
            for _ in 0..10 {
                let len = rng.gen_range(j.len()..=7);
                let x: Vec<i64> = (0..len).map(|_| rng.gen_range(-3..=3)).collect();
                assert_eq!(
                    expansion.eval(&x),
                    augmented_monomial_direct(&j, &x),
                    "j={j} x={x:?}"
                );
            }
        }
    }
    report(12, "monomial expansion suite");
}
