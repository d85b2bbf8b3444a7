//! Rounding to a fixed number of significant digits for reproducible output.

/// Significant digits used for every printed real.
pub const SIG_DIGITS: usize = 12;

/// Rounds `x` to [`SIG_DIGITS`] significant digits. Negative zero becomes zero.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let s = format!("{:.*e}", SIG_DIGITS - 1, x);
    let y: f64 = s.parse().expect("formatted float parses");
    if y == 0.0 {
        0.0
    } else {
        y
    }
}

/// Shortest decimal text of `round_sig(x)`.
pub fn fmt_sig(x: f64) -> String {
    format!("{}", round_sig(x))
}
