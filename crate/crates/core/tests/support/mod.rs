//! Independent oracles shared by the integration and acceptance tests.
//! Nothing here calls into the code paths it is used to check.

#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigInt;
use qshape_core::exactnum::{RatPoly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coefficients of `[n+k choose k]_q` by listing every partition with at
/// most `n` parts, each at most `k`.
pub fn enumerate_box_partitions(n: usize, k: usize) -> Vec<u64> {
    fn walk(parts_left: usize, max_part: usize, size: usize, out: &mut [u64]) {
        out[size] += 1;
        if parts_left == 0 {
            return;
        }
        for part in 1..=max_part {
            walk(parts_left - 1, part, size + part, out);
        }
    }
    let mut out = vec![0u64; n * k + 1];
    walk(n, k, 0, &mut out);
    out
}

/// Number of `sub`-dimensional subspaces of the `dim`-dimensional vector
/// space over the two-element field, by listing spans of vector tuples.
pub fn count_gf2_subspaces(dim: u32, sub: u32) -> usize {
    let vectors: Vec<u32> = (1..(1u32 << dim)).collect();
    let mut spans: HashSet<Vec<u32>> = HashSet::new();
    let mut stack: Vec<u32> = Vec::new();

    fn span(basis: &[u32]) -> Vec<u32> {
        let mut set = vec![0u32];
        for &b in basis {
            let shifted: Vec<u32> = set.iter().map(|v| v ^ b).collect();
            set.extend(shifted);
        }
        set.sort_unstable();
        set.dedup();
        set
    }

    fn extend(vectors: &[u32], stack: &mut Vec<u32>, sub: usize, spans: &mut HashSet<Vec<u32>>) {
        if stack.len() == sub {
            let s = span(stack);
            if s.len() == 1 << sub {
                spans.insert(s);
            }
            return;
        }
        let start = stack.last().map_or(0, |last| vectors.iter().position(|v| v == last).unwrap() + 1);
        for i in start..vectors.len() {
            stack.push(vectors[i]);
            extend(vectors, stack, sub, spans);
            stack.pop();
        }
    }

    extend(&vectors, &mut stack, sub as usize, &mut spans);
    if sub == 0 {
        return 1;
    }
    spans.len()
}

fn binom_f64(n: usize, r: usize) -> f64 {
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// CDF of the sum of `k` uniform `[0, 1]` variables, by the alternating
/// closed form `1/k! sum_j (-1)^j C(k, j) (t - j)^k`.
pub fn irwin_hall_cdf(k: usize, t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    if t >= k as f64 {
        return 1.0;
    }
    let fact: f64 = (1..=k).map(|i| i as f64).product();
    let mut acc = 0.0;
    for j in 0..=(t.floor() as usize) {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom_f64(k, j) * (t - j as f64).powi(k as i32);
    }
    acc / fact
}

/// `sup |F_em - F_L|` by scanning a uniform grid of at least `min_points`
/// points that contains every atom location `i / d`, checking both one-sided
/// limits of the step function at each grid point.
pub fn grid_scan_ks(coeffs: &[BigInt], k: usize, min_points: usize) -> f64 {
    let d = coeffs.len() - 1;
    let total: f64 = coeffs.iter().map(|c| c.to_string().parse::<f64>().unwrap()).sum();
    let masses: Vec<f64> = coeffs
        .iter()
        .map(|c| c.to_string().parse::<f64>().unwrap() / total)
        .collect();
    let refine = min_points.div_ceil(d.max(1));
    let steps = d.max(1) * refine;
    let mut sup: f64 = 0.0;
    for g in 0..=steps {
        let x = g as f64 / steps as f64;
        // atoms strictly left of x, and at or left of x
        let mut strict = 0.0;
        let mut weak = 0.0;
        for (i, m) in masses.iter().enumerate() {
            let loc_num = if d == 0 { 0 } else { i * refine };
            if loc_num < g {
                strict += m;
            }
            if loc_num <= g {
                weak += m;
            }
        }
        let target = irwin_hall_cdf(k, k as f64 * x);
        sup = sup.max((strict - target).abs()).max((weak - target).abs());
    }
    sup
}

/// The `k`-fold uniform convolution density on `[0, k]`, as one polynomial
/// per unit interval, built by integrating `f(s)` over `s in [t-1, t]` one
/// factor at a time.
pub fn convolve_uniform(k: usize) -> Vec<RatPoly> {
    let mut pieces = vec![RatPoly::one()];
    for _ in 1..k {
        let len = pieces.len();
        let mut next = Vec::with_capacity(len + 1);
        for i in 0..=len {
            let at = |x: i64| Rational::from_integer(BigInt::from(x));
            let mut acc = RatPoly::zero();
            // part of [t-1, t] inside [i-1, i]: from t-1 to i
            if i >= 1 {
                let anti = pieces[i - 1].antiderivative();
                let upper = anti.eval(&at(i as i64));
                acc = &acc + &RatPoly::constant(upper);
                acc = &acc - &anti.translate(&at(-1));
            }
            // part inside [i, i+1]: from i to t
            if i < len {
                let anti = pieces[i].antiderivative();
                acc = &acc + &anti;
                acc = &acc - &RatPoly::constant(anti.eval(&at(i as i64)));
            }
            next.push(acc);
        }
        pieces = next;
    }
    pieces
}

/// Estimates the area of `[0,1]^3 ∩ {x + y + z = t}` from a slab of width
/// `width` around the plane. For each sampled `(x, y)` the fraction of the
/// slab's `z` range that lies in `[0, 1]` is integrated exactly.
pub fn monte_carlo_cube_slice(t: f64, samples: usize, width: f64, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = 0.0;
    for _ in 0..samples {
        let s: f64 = rng.gen::<f64>() + rng.gen::<f64>();
        let lo = (t - width / 2.0 - s).max(0.0);
        let hi = (t + width / 2.0 - s).min(1.0);
        if hi > lo {
            acc += hi - lo;
        }
    }
    // slab volume / slab thickness measured along the unit normal
    let slab_volume = acc / samples as f64;
    slab_volume / (width / 3f64.sqrt())
}
