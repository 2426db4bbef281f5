//! Plain-text rendering of sequence periods.

use cyclemod_core::sequence::SequenceSpec;

/// Terms shown before a rendered period is cut short.
pub const DISPLAY_LIMIT: usize = 240;

/// One period of `spec` written as digits when `m <= 10` (like `011235`),
/// otherwise as space separated residues. Periods longer than
/// [`DISPLAY_LIMIT`] are truncated with a count of the omitted terms.
pub fn render_period(spec: &SequenceSpec, period: u64) -> String {
    let period = period as usize;
    let sep = if spec.modulus().get() <= 10 { "" } else { " " };
    let mut out = spec
        .terms()
        .take(period.min(DISPLAY_LIMIT))
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep);
    if period > DISPLAY_LIMIT {
        out.push_str(&format!(" ... ({} more)", period - DISPLAY_LIMIT));
    }
    out
}
