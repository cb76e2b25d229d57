//! Serialized hit tables.

use std::io::Write;

use palwild::CenteredRadiusArray;
use serde::Serialize;

use crate::{Algo, CliError, Format, RunConfig};

/// One maximal palindrome; `start` and `end` are 1-based inclusive and
/// `center = start + end - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HitRecord {
    pub center: usize,
    pub start: usize,
    pub end: usize,
    pub length: usize,
    pub mismatches: usize,
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    id: &'a str,
    n: usize,
    #[serde(rename = "G")]
    fragments: usize,
    k: usize,
    algo: Algo,
    #[serde(skip_serializing_if = "Option::is_none")]
    epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    guarantee: Option<f64>,
    hits: &'a [HitRecord],
}

/// Hits in center order after the zero-length and `--longest` filters.
pub fn hits(radii: &CenteredRadiusArray, all_centers: bool, longest_only: bool) -> Vec<HitRecord> {
    let mut hits: Vec<HitRecord> = radii
        .iter()
        .filter(|(_, e)| all_centers || e.length > 0)
        .map(|(c, e)| {
            let (start, end) = c.span(e.length);
            HitRecord {
                center: c.get(),
                start,
                end,
                length: e.length,
                mismatches: e.mismatches,
            }
        })
        .collect();
    if longest_only {
        let best = hits.iter().map(|h| h.length).max().unwrap_or(0);
        hits.retain(|h| h.length == best);
    }
    hits
}

pub const TSV_HEADER: &str = "record\tcenter\tstart\tend\tlength\tmismatches";

/// Writes the hits of one record: TSV rows, or one JSON line.
pub fn write_record(
    out: &mut impl Write,
    config: &RunConfig,
    id: &str,
    n: usize,
    fragments: usize,
    hits: &[HitRecord],
) -> Result<(), CliError> {
    match config.format {
        Format::Tsv => {
            for h in hits {
                writeln!(
                    out,
                    "{id}\t{}\t{}\t{}\t{}\t{}",
                    h.center, h.start, h.end, h.length, h.mismatches
                )?;
            }
        }
        Format::Json => {
            let epsilon = (config.algo == Algo::Approx).then_some(config.epsilon).flatten();
            let record = JsonRecord {
                id,
                n,
                fragments,
                k: config.k,
                algo: config.algo,
                epsilon,
                guarantee: epsilon.map(|e| 1.0 + e),
                hits,
            };
            serde_json::to_writer(&mut *out, &record)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}
