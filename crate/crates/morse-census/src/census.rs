//! The summary table: one row per order with every class count.

use crate::combinat::odd_double_factorial;
use crate::geometric::GeomCountTable;
use crate::homology::count_homology_classes;
use crate::profiles::profile_count_closed;
use crate::topology::{count_closed_paths, MoveSet};
use num_bigint::BigInt;

/// Largest order for which the census fills in the exact closed-path count
/// of the partition move graph (the column stays cheap up to here).
pub const TOPOLOGICAL_EXACT_MAX_ORDER: usize = 11;

/// One census row: all counts for Morse functions with `2n + 2` critical
/// points.
#[derive(Clone, Debug)]
pub struct CensusRow {
    pub order: usize,
    pub critical_points: usize,
    pub profiles: BigInt,
    pub homology: BigInt,
    pub geometric: BigInt,
    pub topological_lower_bound: BigInt,
    pub topological_exact: Option<BigInt>,
}

/// Rows for orders `0 ..= max_order`.
pub fn census(max_order: usize) -> Vec<CensusRow> {
    let geom = GeomCountTable::build(max_order);
    (0..=max_order)
        .map(|n| CensusRow {
            order: n,
            critical_points: 2 * n + 2,
            profiles: profile_count_closed(n as u64),
            homology: count_homology_classes(n as u64),
            geometric: geom.geometric_classes(n).clone(),
            topological_lower_bound: odd_double_factorial(n as u64),
            topological_exact: (n <= TOPOLOGICAL_EXACT_MAX_ORDER)
                .then(|| count_closed_paths(2 * n + 2, MoveSet::Simplified)),
        })
        .collect()
}

/// Output format of the census table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub const CSV_HEADER: &str =
    "n,critical_points,profiles,homology,geometric,topological_lower_bound,topological_exact";

/// Render rows in the requested format. Output is byte-deterministic; JSON
/// emits the counts as decimal strings since they exceed 2^53.
pub fn render(rows: &[CensusRow], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in rows {
                let exact = r
                    .topological_exact
                    .as_ref()
                    .map(BigInt::to_string)
                    .unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.order,
                    r.critical_points,
                    r.profiles,
                    r.homology,
                    r.geometric,
                    r.topological_lower_bound,
                    exact
                ));
            }
            out
        }
        Format::Json => {
            let mut out = String::from("[\n");
            for (i, r) in rows.iter().enumerate() {
                let exact = r
                    .topological_exact
                    .as_ref()
                    .map(|v| format!("\"{v}\""))
                    .unwrap_or_else(|| "null".to_string());
                out.push_str(&format!(
                    "  {{\"n\": {}, \"critical_points\": {}, \"profiles\": \"{}\", \
                     \"homology\": \"{}\", \"geometric\": \"{}\", \
                     \"topological_lower_bound\": \"{}\", \"topological_exact\": {}}}{}\n",
                    r.order,
                    r.critical_points,
                    r.profiles,
                    r.homology,
                    r.geometric,
                    r.topological_lower_bound,
                    exact,
                    if i + 1 < rows.len() { "," } else { "" }
                ));
            }
            out.push_str("]\n");
            out
        }
        Format::Text => {
            let headers = [
                "n",
                "crit",
                "profiles",
                "homology",
                "geometric",
                "topo>=",
                "topo=",
            ];
            let mut cells: Vec<[String; 7]> = Vec::with_capacity(rows.len());
            for r in rows {
                cells.push([
                    r.order.to_string(),
                    r.critical_points.to_string(),
                    r.profiles.to_string(),
                    r.homology.to_string(),
                    r.geometric.to_string(),
                    r.topological_lower_bound.to_string(),
                    r.topological_exact
                        .as_ref()
                        .map(BigInt::to_string)
                        .unwrap_or_default(),
                ]);
            }
            let mut widths = [0usize; 7];
            for (i, h) in headers.iter().enumerate() {
                widths[i] = h.len();
            }
            for row in &cells {
                for (i, c) in row.iter().enumerate() {
                    widths[i] = widths[i].max(c.len());
                }
            }
            let mut out = String::new();
            for (i, h) in headers.iter().enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                out.push_str(&format!("{h:>width$}", width = widths[i]));
            }
            out.push('\n');
            for row in &cells {
                for (i, c) in row.iter().enumerate() {
                    if i > 0 {
                        out.push_str("  ");
                    }
                    out.push_str(&format!("{c:>width$}", width = widths[i]));
                }
                out.push('\n');
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts_for_small_orders() {
        let rows = census(3);
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[3].critical_points, 8);
        assert_eq!(rows[3].profiles, BigInt::from(30));
        assert_eq!(rows[3].homology, BigInt::from(70));
        assert_eq!(rows[3].geometric, BigInt::from(428));
        assert_eq!(rows[3].topological_lower_bound, BigInt::from(105));
        assert_eq!(rows[3].topological_exact, Some(BigInt::from(107)));
    }

    #[test]
    fn csv_shape() {
        let out = render(&census(1), Format::Csv);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert_eq!(lines.next(), Some("0,2,1,1,1,1,1"));
        assert_eq!(lines.next(), Some("1,4,2,2,2,3,3"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let rows = census(4);
        for f in [Format::Text, Format::Csv, Format::Json] {
            assert_eq!(render(&rows, f), render(&rows, f));
        }
    }
}
