//! Pisano period tables as CSV or JSON.

use std::io::Write;

use cyclemod_core::fibonacci::{pisano, PisanoRecord};
use cyclemod_core::Modulus;
use rayon::prelude::*;

pub const CSV_HEADER: [&str; 3] = ["m", "pi", "ratio6m_equal"];

/// `π(m)` for every `m` in `lo..=hi`, computed in parallel on the current
/// rayon pool and returned in order of `m`.
pub fn pisano_table(lo: Modulus, hi: Modulus) -> Vec<PisanoRecord> {
    (lo.get()..=hi.get())
        .into_par_iter()
        .map(|m| pisano(Modulus::new(m).expect("range endpoints are valid moduli")))
        .collect()
}

pub fn write_csv<W: Write>(records: &[PisanoRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([r.m.to_string(), r.pi.to_string(), r.ratio_times_6m.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_json(records: &[PisanoRecord]) -> String {
    serde_json::to_string(records).expect("records serialize")
}
