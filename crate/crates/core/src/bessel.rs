//! Bessel functions `J_m` of integer order and their positive zeros.

use crate::error::{Error, Result};

pub const MAX_ORDER: u32 = 64;
pub const MAX_ARG: f64 = 1.0e3;

fn check_args(m: u32, x: f64) -> Result<()> {
    if m > MAX_ORDER {
        return Err(Error::OutOfRange(format!("order {m} exceeds {MAX_ORDER}")));
    }
    if !(0.0..=MAX_ARG).contains(&x) {
        return Err(Error::OutOfRange(format!("argument {x} outside [0, {MAX_ARG}]")));
    }
    Ok(())
}

/// `J_m(x)` for `0 <= m <= 64`, `0 <= x <= 1000`.
pub fn bessel_j(m: u32, x: f64) -> Result<f64> {
    check_args(m, x)?;
    Ok(if x <= 1.0 { series(m, x) } else { miller(m, x) })
}

/// Ascending series; all terms after the first shrink by at least `x²/4`.
fn series(m: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if m == 0 { 1.0 } else { 0.0 };
    }
    let h = 0.5 * x;
    let mut term = 1.0;
    for k in 1..=m {
        term *= h / k as f64;
    }
    let mut sum = term;
    let q = -h * h;
    for k in 1..60 {
        term *= q / (k as f64 * (k + m) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// Downward recurrence from far above `max(m, x)`, normalised by
/// `J_0 + 2 Σ J_{2k} = 1`.
fn miller(m: u32, x: f64) -> f64 {
    let top = (m as f64).max(x);
    let mut n = (top + 30.0 + 12.0 * top.sqrt()) as usize;
    n += n % 2;
    let (mut jp, mut j) = (0.0f64, 1.0e-30f64);
    let mut norm = 0.0;
    let mut out = 0.0;
    for k in (0..n).rev() {
        // j holds J_{k+1}, jp holds J_{k+2}
        let jm = 2.0 * (k + 1) as f64 / x * j - jp;
        jp = j;
        j = jm;
        if k % 2 == 0 {
            norm += if k == 0 { jm } else { 2.0 * jm };
        }
        if k == m as usize {
            out = jm;
        }
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            out *= 1e-250;
        }
    }
    out / norm
}

/// Zeros of `J_m` in `(0, upper]`, increasing, each to about `1e-12`.
///
/// Sign changes are scanned on a grid of step 1 (consecutive zeros are more
/// than 2.9 apart) starting just below Watson's bound `√(m(m+2))`, then each
/// bracket is refined by the Illinois method.
pub fn bessel_zeros(m: u32, upper: f64) -> Result<Vec<f64>> {
    check_args(m, upper)?;
    let start = watson_bound(m).max(0.0) * 0.999;
    let mut out = Vec::new();
    let mut a = if start > 0.0 { start } else { 0.5 };
    let mut fa = bessel_j(m, a)?;
    while a < upper {
        let b = (a + 1.0).min(upper);
        let fb = bessel_j(m, b)?;
        if fb == 0.0 {
            out.push(b);
        } else if fa != 0.0 && fa.signum() != fb.signum() {
            out.push(refine(m, a, b, fa, fb)?);
        }
        a = b;
        fa = fb;
    }
    Ok(out)
}

fn refine(m: u32, mut a: f64, mut b: f64, mut fa: f64, mut fb: f64) -> Result<f64> {
    let mut side = 0i8;
    for _ in 0..200 {
        let c = (a * fb - b * fa) / (fb - fa);
        let fc = bessel_j(m, c)?;
        if fc == 0.0 || (b - a).abs() < 1e-14 * b.max(1.0) {
            return Ok(c);
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = c;
            fa = fc;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
        if (b - a).abs() < 1e-13 {
            return Ok(0.5 * (a + b));
        }
    }
    Ok(0.5 * (a + b))
}

/// Watson's lower bound `√(m(m+2))` for the first positive zero of `J_m`.
pub fn watson_bound(m: u32) -> f64 {
    ((m as f64) * (m as f64 + 2.0)).sqrt()
}

/// Checks that the zeros of `J_m` and `J_{m+1}` below `upper` strictly
/// interlace, starting with a zero of `J_m`. A missed or duplicated zero in
/// either list breaks this, so it certifies both scans.
pub fn interlacing_holds(lower: &[f64], higher: &[f64]) -> bool {
    if lower.len() < higher.len() || lower.len() > higher.len() + 1 {
        return false;
    }
    let mut merged: Vec<(f64, bool)> = lower.iter().map(|&z| (z, false)).collect();
    merged.extend(higher.iter().map(|&z| (z, true)));
    merged.sort_by(|a, b| a.0.total_cmp(&b.0));
    merged
        .iter()
        .enumerate()
        .all(|(i, &(_, hi))| hi == (i % 2 == 1))
}

/// Zeros `s_{n,m}` for modes `0..=max_m` below `upper`, certified by
/// interlacing against the next order.
#[derive(Clone, Debug)]
pub struct ZeroTable {
    pub upper: f64,
    zeros: Vec<Vec<f64>>,
}

impl ZeroTable {
    pub fn build(max_m: u32, upper: f64) -> Result<ZeroTable> {
        if max_m >= MAX_ORDER {
            return Err(Error::OutOfRange(format!("mode {max_m} needs order {}", max_m + 1)));
        }
        let zeros: Vec<Vec<f64>> = (0..=max_m + 1)
            .map(|m| bessel_zeros(m, upper))
            .collect::<Result<_>>()?;
        for m in 0..=max_m as usize {
            if !interlacing_holds(&zeros[m], &zeros[m + 1]) {
                return Err(Error::InconsistentCharacter(format!(
                    "zeros of J_{m} and J_{} below {upper} do not interlace",
                    m + 1
                )));
            }
        }
        let mut zeros = zeros;
        zeros.pop();
        Ok(ZeroTable { upper, zeros })
    }

    pub fn max_mode(&self) -> u32 {
        self.zeros.len() as u32 - 1
    }

    /// Zeros of `J_m` below the table bound.
    pub fn mode(&self, m: u32) -> &[f64] {
        self.zeros.get(m as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `s_{n,m}` with `n` starting at 1.
    pub fn get(&self, n: usize, m: u32) -> Option<f64> {
        n.checked_sub(1).and_then(|i| self.mode(m).get(i).copied())
    }
}
