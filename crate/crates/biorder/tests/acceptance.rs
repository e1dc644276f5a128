//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured evidence. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use biorder::alexander::{alexander_from_syllables, fox_two_bridge, validate_alexander};
use biorder::classify::{apply_cgw, InconclusiveReason, Options, Outcome, TheoremUsed};
use biorder::families::{
    twist_alexander, twist_presentation, two_bridge_presentation, two_bridge_tidy_relator,
    TwoBridgeParams,
};
use biorder::grammar::{parse_word, render_word, Presentation};
use biorder::poly::{poly_gcd, IntPoly};
use biorder::roots::root_report;
use biorder::syllables::{classify_word, decompose, tau_structure, Level};
use biorder::word::{Gen, Word};
use biorder::zero_weight::{zero_weight_normalize, Variant};

const TEN_52_RELATOR: &str = "ab2a2b2aBab2a2bAB2A2B2AbAB2A2Bab2a2b2aBab2a2bAB2A2B2Aba2b2aBab2a2b2aBA2B2AbAB2A2B2Aba2b2aBab2a2b2aBA2B2AbAB2A2B";

#[test]
fn criterion_1_ten_52_end_to_end() {
    let start = Instant::now();

    let word = parse_word(TEN_52_RELATOR).unwrap();
    assert_eq!(render_word(&word), TEN_52_RELATOR, "relator is canonical");
    assert_eq!((word.weight(Gen::A), word.weight(Gen::B)), (4, 3));

    let zw = zero_weight_normalize(&word, Variant::Standard).unwrap();
    assert_eq!(
        render_word(zw.composed_substitution.image_of_a()),
        "bA3",
        "composed substitution image of a"
    );
    assert_eq!(
        render_word(zw.composed_substitution.image_of_b()),
        "a4B",
        "composed substitution image of b"
    );

    let form = decompose(&zw.final_word, Gen::A).unwrap();
    assert_eq!(form.syllable_count(), 59);
    let tau = tau_structure(&form).unwrap();
    assert_eq!(tau.min_support, 0);
    assert_eq!(tau.max_support, 6);
    let class = classify_word(&form).unwrap();
    assert!(class.level >= Level::Tidy);

    let delta = alexander_from_syllables(&tau);
    assert_eq!(delta.poly, IntPoly::from_i64(&[2, -7, 13, -15, 13, -7, 2]));

    let report = root_report(&delta.poly).unwrap();
    assert_eq!(report.positive_real_count, 0);

    let presentation = Presentation::from_relator_text(TEN_52_RELATOR).unwrap();
    let c = apply_cgw(&presentation, &Options::default()).unwrap();
    assert_eq!(c.verdict.outcome, Outcome::NotBiOrderable);
    assert_eq!(c.verdict.theorem, TheoremUsed::Cgw1);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "ACCEPTANCE 1 PASS — 10_52 end-to-end: substitution a->bA3 b->a4B, support [0,6], \
         Δ = {}, 0 positive roots, NotBiOrderable via CGW1 ({elapsed:?})",
        delta.poly
    );
}

#[test]
fn criterion_2_twist_family() {
    let start = Instant::now();
    let options = Options::default();
    let mut checked = 0;
    for q in (5..=201i64).step_by(2) {
        let c = apply_cgw(&twist_presentation(q).unwrap(), &options).unwrap();
        if q % 4 == 1 {
            assert_eq!(c.verdict.outcome, Outcome::BiOrderable, "q = {q}");
            if q == 5 {
                assert_eq!(c.verdict.theorem, TheoremUsed::Cgw2, "q = 5 is the monic case");
            } else {
                assert_eq!(c.verdict.theorem, TheoremUsed::Cgw3, "q = {q}");
            }

            // the conjugated tidy relator has the documented tau structure
            let params = TwoBridgeParams::new(q - 2, q).unwrap();
            let relator = two_bridge_tidy_relator(&params);
            let form = decompose(&relator, Gen::B).unwrap();
            assert_eq!(form.shift(), -1, "recorded normalization for q = {q}");
            let tau = tau_structure(&form).unwrap();
            assert_eq!(tau.tau[&0], vec![2], "q = {q}");
            assert_eq!(tau.tau[&1], vec![1, 3, 5], "q = {q}");
            assert_eq!(tau.tau[&2], vec![4], "q = {q}");
            let k = (q - 1) / 4;
            assert_eq!(tau.column_sums[&0], -k);
            assert_eq!(tau.column_sums[&1], 2 * k + 1);
            assert_eq!(tau.column_sums[&2], -k);
        } else {
            assert_eq!(c.verdict.outcome, Outcome::NotBiOrderable, "q = {q}");
            assert_eq!(c.verdict.theorem, TheoremUsed::Cgw1, "q = {q}");
        }
        // closed form, Fox form and the pipeline's polynomial all agree
        let closed = twist_alexander(q).unwrap();
        let fox = fox_two_bridge(q - 2, q).unwrap();
        assert_eq!(closed.poly, fox.poly, "q = {q}");
        assert_eq!(c.alexander.poly, closed.poly, "q = {q}");
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!(
        "ACCEPTANCE 2 PASS — twist family: {checked} knots (5 <= q <= 201), \
         q≡1 (mod 4) biorderable (CGW2 exactly at q=5), q≡3 not biorderable, \
         tau structure {{0:[2], 1:[1,3,5], 2:[4]}} verified ({elapsed:?})"
    );
}

#[test]
fn criterion_3_two_bridge_property_suite() {
    let start = Instant::now();
    let params = TwoBridgeParams::enumerate(99);
    for pr in &params {
        let q = pr.q();
        let relator = two_bridge_tidy_relator(pr);
        let form = decompose(&relator, Gen::B).unwrap();
        let class = classify_word(&form).unwrap();
        assert!(class.level >= Level::Tidy, "{pr:?}");
        assert_eq!(form.abs_weight_sum(), q, "{pr:?}");

        // tidiness across the whole symmetry orbit
        for inverted in [false, true] {
            for cflip in [false, true] {
                for bflip in [false, true] {
                    let mut v = if inverted { relator.inverse() } else { relator.clone() };
                    if cflip {
                        v = biorder::word::Substitution::flip(Gen::B).apply(&v);
                    }
                    if bflip {
                        v = biorder::word::Substitution::flip(Gen::A).apply(&v);
                    }
                    let orbit_class = classify_word(&decompose(&v, Gen::B).unwrap()).unwrap();
                    assert!(orbit_class.level >= Level::Tidy, "{pr:?} orbit");
                }
            }
        }

        let eq_star = alexander_from_syllables(&tau_structure(&form).unwrap());
        let fox = fox_two_bridge(pr.p(), q).unwrap();
        assert_eq!(eq_star.poly, fox.poly, "{pr:?}: the two formulas agree up to units");

        // alignment with a_0 > 0 for the q-identities
        let aligned = if fox.poly.constant_term().is_negative() {
            -&fox.poly
        } else {
            fox.poly.clone()
        };
        assert_eq!(aligned.eval_i64(-1), BigInt::from(q), "{pr:?}");
        let abs_sum: BigInt = aligned.coeffs().iter().map(|c| c.abs()).sum();
        assert_eq!(abs_sum, BigInt::from(q), "{pr:?}");
        for (i, c) in aligned.coeffs().iter().enumerate() {
            assert!(
                if i % 2 == 0 { c.is_positive() } else { c.is_negative() },
                "{pr:?}: coefficient {i} breaks sign alternation"
            );
        }
        assert!(validate_alexander(&fox, Some(q)).is_empty(), "{pr:?}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!(
        "ACCEPTANCE 3 PASS — two-bridge suite: {} knots (q <= 99): tidy (whole orbit), \
         Σ|m_i| = q, Δ(-1) = q, Σ|a_i| = q, sign alternation, Fox = column-sum formula \
         ({elapsed:?})",
        params.len()
    );
}

// ---------------------------------------------------------------------------
// criterion 4: exact Sturm counts against an independent numeric root counter
// ---------------------------------------------------------------------------

mod numeric_oracle {
    use super::*;
    use nalgebra::{Complex, DMatrix};
    use num_traits::ToPrimitive;

    /// Grid resolution: 2^-11 < half the admitted root separation, so each
    /// grid cell contains at most one root.
    const SCALE: u32 = 11;

    pub fn coeffs_f64(p: &IntPoly) -> Vec<f64> {
        p.coeffs().iter().map(|c| c.to_f64().unwrap()).collect()
    }

    /// Eigenvalues of the companion matrix: numeric estimates of all
    /// complex roots, used only to filter ill-separated samples.
    pub fn root_estimates(p: &IntPoly) -> Vec<Complex<f64>> {
        let d = p.degree().unwrap();
        let a = coeffs_f64(p);
        let lead = a[d];
        let m = DMatrix::<f64>::from_fn(d, d, |r, c| {
            if c == d - 1 {
                -a[r] / lead
            } else if r == c + 1 {
                1.0
            } else {
                0.0
            }
        });
        m.complex_eigenvalues().iter().copied().collect()
    }

    pub fn min_pairwise_distance(roots: &[Complex<f64>]) -> f64 {
        let mut min = f64::INFINITY;
        for i in 0..roots.len() {
            for j in (i + 1)..roots.len() {
                min = min.min((roots[i] - roots[j]).norm());
            }
        }
        min
    }

    /// Sign of `p(num / 2^(SCALE + extra))`, certified: fast f64 Horner with
    /// a running error bound, falling back to exact integer evaluation when
    /// the bound cannot certify the sign.
    fn certified_sign(p: &IntPoly, coeffs: &[f64], num: i128, extra: u32) -> i8 {
        let k = SCALE + extra;
        let t = num as f64 / (1u64 << k) as f64;
        let at = t.abs();
        let mut acc = 0.0f64;
        let mut err = 0.0f64;
        for &c in coeffs.iter().rev() {
            acc = acc * t + c;
            err = err * at + acc.abs() * 4.4e-16 + 1e-300;
        }
        if acc.abs() > 8.0 * err {
            return if acc > 0.0 { 1 } else { -1 };
        }
        // exact: sign of sum c_i num^i 2^{k (d - i)}
        let d = p.degree().unwrap();
        let num_big = BigInt::from(num);
        let mut total = BigInt::zero();
        let mut num_pow = BigInt::from(1);
        for i in 0..=d {
            let scaled = p.coeff(i) * &num_pow << (k as usize * (d - i));
            total += scaled;
            num_pow *= &num_big;
        }
        if total.is_zero() {
            0
        } else if total.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Confirms a bracket `((j-1)/2^SCALE, j/2^SCALE)` by bisection,
    /// shrinking it 20 times while keeping the sign change.
    fn bisection_confirms(p: &IntPoly, coeffs: &[f64], j: i128) -> bool {
        let mut lo = j - 1;
        let mut hi = j;
        let mut extra = 0;
        let mut lo_sign = certified_sign(p, coeffs, lo, extra);
        for _ in 0..20 {
            // refine at the next dyadic scale
            lo *= 2;
            hi *= 2;
            extra += 1;
            let mid = (lo + hi) / 2;
            let mid_sign = certified_sign(p, coeffs, mid, extra);
            if mid_sign == 0 {
                return true; // landed exactly on the root
            }
            if mid_sign == lo_sign {
                lo = mid;
                lo_sign = mid_sign;
            } else {
                hi = mid;
            }
        }
        true
    }

    /// Counts roots of `p` in (0, +oo) by walking a dyadic grid out to past
    /// the Cauchy bound and counting certified sign changes, each confirmed
    /// by bisection refinement. Roots must be separated by more than two
    /// grid cells (guaranteed by the caller's filter).
    pub fn count_positive(p: &IntPoly) -> usize {
        let coeffs = coeffs_f64(p);
        let d = p.degree().unwrap();
        let lead = coeffs[d].abs();
        let max_rest = coeffs[..d].iter().map(|c| c.abs()).fold(0.0, f64::max);
        let bound = 1.0 + max_rest / lead;
        let jmax = (bound * (1u64 << SCALE) as f64).ceil() as i128 + 2;
        let mut count = 0;
        let mut last = certified_sign(p, &coeffs, 0, 0);
        assert_ne!(last, 0, "constant term must be nonzero");
        for j in 1..=jmax {
            let s = certified_sign(p, &coeffs, j, 0);
            if s == 0 {
                count += 1; // root exactly on the grid
                last = 0;
                continue;
            }
            if last != 0 && s != last && bisection_confirms(p, &coeffs, j) {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Counts roots in (-oo, 0) by reflecting `t -> -t`.
    pub fn count_negative(p: &IntPoly) -> usize {
        let reflected = IntPoly::from_coeffs(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        );
        count_positive(&reflected)
    }
}

#[test]
fn criterion_4_sturm_agrees_with_numeric_oracle() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xB10_0D3A);
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    while accepted < 1000 {
        attempts += 1;
        assert!(attempts < 20_000, "sampling filter rejected too much");
        let degree = rng.gen_range(1..=8usize);
        let coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-20..=20)).collect();
        if coeffs[0] == 0 || coeffs[degree] == 0 {
            continue;
        }
        // keep the sample squarefree
        let p = IntPoly::from_i64(&coeffs);
        if poly_gcd(&p, &p.derivative()).degree() != Some(0) {
            continue;
        }
        // and its roots pairwise separated (numeric estimate)
        let estimates = numeric_oracle::root_estimates(&p);
        if numeric_oracle::min_pairwise_distance(&estimates) < 1e-3 {
            continue;
        }

        let report = root_report(&p).unwrap();
        let numeric_pos = numeric_oracle::count_positive(&p);
        let numeric_neg = numeric_oracle::count_negative(&p);
        assert_eq!(
            (report.positive_real_count, report.negative_real_count),
            (numeric_pos, numeric_neg),
            "disagreement on {p}"
        );
        accepted += 1;
    }
    let elapsed = start.elapsed();
    println!(
        "ACCEPTANCE 4 PASS — Sturm vs bisection oracle: {accepted} squarefree samples \
         ({attempts} drawn), zero disagreements ({elapsed:?})"
    );
}

#[test]
fn criterion_5_published_correction_regression() {
    // the degree-6 polynomial whose roots a floating-point pipeline
    // misclassified: exact analysis shows they are all real and positive
    let delta = IntPoly::from_i64(&[1, -11, 41, -63, 41, -11, 1]);
    let report = root_report(&delta).unwrap();
    assert!(report.all_roots_real_and_positive);
    assert_eq!(report.positive_real_count, 6);
    assert_eq!(report.squarefree_degree, 6);
    assert_eq!(report.negative_real_count, 0);
    println!(
        "ACCEPTANCE 5 PASS — 12a_0477 regression: Δ = {delta} has all {} roots real and positive",
        report.positive_real_count
    );
}

#[test]
fn criterion_6_descent_invariant_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x15_77_15_77);
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    let mut longest_trace = 0usize;
    while accepted < 500 {
        attempts += 1;
        assert!(attempts < 50_000, "word sampling stalled");
        let len = rng.gen_range(2..=30usize);
        let word = Word::from_runs((0..len).map(|_| {
            let gen = if rng.gen_bool(0.5) { Gen::A } else { Gen::B };
            let e = *[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).unwrap();
            (gen, e)
        }));
        let wa = word.weight(Gen::A);
        let wb = word.weight(Gen::B);
        if wa == 0 || wb == 0 || num_integer::gcd(wa.abs(), wb.abs()) != 1 {
            continue;
        }
        let result = zero_weight_normalize(&word, Variant::Standard).unwrap();
        let cap = (wa.abs() + wb.abs() + 2) as usize;
        assert!(
            result.trace.len() <= cap,
            "trace length {} over cap {cap} for {}",
            result.trace.len(),
            render_word(&word)
        );
        for (i, step) in result.trace.iter().enumerate() {
            if step.k.is_some() {
                assert!(
                    step.weight_sum_after() < step.weight_sum_before(),
                    "non-decreasing substitution step {i} on {}",
                    render_word(&word)
                );
            } else {
                assert_eq!(step.weight_sum_after(), step.weight_sum_before());
                assert_eq!(i, result.trace.len() - 1, "flip/swap-only step must be last");
            }
        }
        assert_eq!(result.final_word.weight(Gen::A), 0);
        assert_eq!(result.final_word.weight(Gen::B).abs(), 1);
        assert_eq!(result.inverse_substitution.apply(&result.final_word), word);
        longest_trace = longest_trace.max(result.trace.len());
        accepted += 1;
    }
    println!(
        "ACCEPTANCE 6 PASS — descent invariant: 500 random coprime-weight words, every \
         substitution step strictly decreased |w_x|+|w_y|, all within the cap \
         (longest trace: {longest_trace})"
    );
}

#[test]
fn criterion_7_inconclusive_detection_at_q_11() {
    // brute-force search for the fraction with a degree-4 polynomial,
    // |Δ(-1)| = 11, and the 2-positive + 2-non-real root pattern
    let q = 11i64;
    let mut found: Vec<i64> = Vec::new();
    let mut delta = None;
    for p in (1..q).step_by(2) {
        if num_integer::gcd(p, q) != 1 {
            continue;
        }
        let fox = fox_two_bridge(p, q).unwrap();
        if fox.poly.degree() != Some(4) {
            continue;
        }
        let report = root_report(&fox.poly).unwrap();
        let non_real = report.squarefree_degree
            - report.positive_real_count
            - report.negative_real_count;
        if report.positive_real_count == 2 && non_real == 2 && fox.poly.eval_i64(-1).abs() == BigInt::from(q)
        {
            if let Some(prev) = &delta {
                assert_eq!(prev, &fox.poly, "both representatives share the polynomial");
            }
            delta = Some(fox.poly.clone());
            found.push(p);
        }
    }
    // the two odd representatives of the same two-bridge knot
    assert_eq!(found, vec![3, 7]);
    let delta = delta.unwrap();

    for &p in &found {
        let presentation = two_bridge_presentation(&TwoBridgeParams::new(p, q).unwrap());
        let c = apply_cgw(&presentation, &Options::default()).unwrap();
        assert_eq!(c.verdict.outcome, Outcome::Inconclusive, "p = {p}");
        assert_eq!(
            c.verdict.reason,
            Some(InconclusiveReason::MixedRoots),
            "p = {p}"
        );
        assert_eq!(c.alexander.poly, delta);
    }
    println!(
        "ACCEPTANCE 7 PASS — 6_2 fraction: search over q = 11 found p in {found:?} with \
         Δ = {delta}, classified Inconclusive (mixed_roots)"
    );
}
