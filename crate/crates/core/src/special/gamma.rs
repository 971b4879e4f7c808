//! Log-gamma and Beta.
//!
//! `ln Γ` is evaluated three ways depending on the argument:
//! a Taylor expansion about 1 (and about 2 through `Γ(2 + e) = (1 + e) Γ(1 + e)`)
//! so the zeros at 1 and 2 keep full relative precision, the Stirling series
//! for large arguments, and upward recurrence into the Stirling range for
//! everything else.

use once_cell::sync::Lazy;

use crate::error::{check_positive, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Below this the Stirling series is entered through recurrence.
const STIRLING_MIN: f64 = 12.0;
const TAYLOR_RADIUS: f64 = 0.25;
const ZETA_TERMS: usize = 40;
/// Integer arguments up to this use the finite product form of `B(a, b)`.
const SMALL_INT_MAX: f64 = 30.0;

/// `B_{2k} / (2k (2k - 1))` for k = 1..=8.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// `zeta(k) - 1` for k = 0..ZETA_TERMS (entries 0 and 1 unused).
static ZETA_MINUS_ONE: Lazy<[f64; ZETA_TERMS]> = Lazy::new(|| {
    let mut out = [0.0; ZETA_TERMS];
    for (k, slot) in out.iter_mut().enumerate().skip(2) {
        *slot = zeta_minus_one(k as f64);
    }
    out
});

/// `sum_{n >= 2} n^-s` by direct summation to N then Euler-Maclaurin.
fn zeta_minus_one(s: f64) -> f64 {
    const N: f64 = 16.0;
    // B_2j / (2j)!
    const B_OVER_FACT: [f64; 6] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30_240.0,
        -1.0 / 1_209_600.0,
        1.0 / 47_900_160.0,
        -691.0 / 1_307_674_368_000.0,
    ];
    let mut head = 0.0;
    for n in 2..(N as usize) {
        head += (n as f64).powf(-s);
    }
    let mut tail = N.powf(1.0 - s) / (s - 1.0) + 0.5 * N.powf(-s);
    // rising factorial s (s+1) ... (s + 2j - 2)
    let mut rising = s;
    let mut power = N.powf(-s - 1.0);
    for (j, coeff) in B_OVER_FACT.iter().enumerate() {
        if j > 0 {
            let m = (2 * j) as f64;
            rising *= (s + m - 1.0) * (s + m);
            power /= N * N;
        }
        tail += coeff * rising * power;
    }
    head + tail
}

/// `ln Γ(1 + e)` for `|e| <= TAYLOR_RADIUS`.
fn ln_gamma_1p(e: f64) -> f64 {
    let z = &*ZETA_MINUS_ONE;
    let mut sum = 0.0;
    // (-e)^k
    let mut pow = -e;
    for (k, zk) in z.iter().enumerate().skip(2) {
        pow *= -e;
        let term = zk * pow / k as f64;
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    // ln Γ(1+e) = -γe + (e - ln(1+e)) + sum_{k>=2} (-1)^k (ζ(k)-1) e^k / k
    -EULER_GAMMA * e + (e - e.ln_1p()) + sum
}

fn ln_gamma_stirling(z: f64) -> f64 {
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut pow = inv;
    for c in STIRLING_COEFFS {
        series += c * pow;
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_2PI + series
}

/// `ln Γ(z)` for `z > 0`.
pub fn log_gamma(z: f64) -> Result<f64> {
    check_positive("z", z)?;
    Ok(ln_gamma_unchecked(z))
}

pub(crate) fn ln_gamma_unchecked(z: f64) -> f64 {
    if (z - 1.0).abs() <= TAYLOR_RADIUS {
        return ln_gamma_1p(z - 1.0);
    }
    if (z - 2.0).abs() <= TAYLOR_RADIUS {
        let e = z - 2.0;
        return e.ln_1p() + ln_gamma_1p(e);
    }
    if z < TAYLOR_RADIUS {
        // Γ(z) = Γ(1 + z) / z
        return ln_gamma_1p(z) - z.ln();
    }
    if z >= STIRLING_MIN {
        return ln_gamma_stirling(z);
    }
    let mut shifted = z;
    let mut product = 1.0;
    while shifted < STIRLING_MIN {
        product *= shifted;
        shifted += 1.0;
    }
    ln_gamma_stirling(shifted) - product.ln()
}

/// `ln B(a, b)`.
pub fn ln_beta(a: f64, b: f64) -> Result<f64> {
    check_positive("a", a)?;
    check_positive("b", b)?;
    Ok(ln_gamma_unchecked(a) + ln_gamma_unchecked(b) - ln_gamma_unchecked(a + b))
}

/// The Beta function `B(a, b) = Γ(a) Γ(b) / Γ(a + b)`.
///
/// When either argument is a small integer `m` the finite product
/// `(m-1)! / (b (b+1) ... (b+m-1))` is used; it is exact for `m = 1`.
pub fn beta_fn(a: f64, b: f64) -> Result<f64> {
    check_positive("a", a)?;
    check_positive("b", b)?;
    let small_int = |v: f64| v.fract() == 0.0 && v <= SMALL_INT_MAX;
    let (m, other) = match (small_int(a), small_int(b)) {
        (true, true) => (a.min(b), a.max(b)),
        (true, false) => (a, b),
        (false, true) => (b, a),
        _ => return ln_beta(a, b).map(f64::exp),
    };
    let mut r = 1.0 / other;
    for k in 1..m as u32 {
        let k = f64::from(k);
        r *= k / (other + k);
    }
    Ok(r)
}
