//! Reproduce the classification tables from the enumerator: the
//! (K², n) cells for p_g = 0, for p_g = 1 with q = 0, and the two
//! irregular rows, with warnings for cells beyond the tables.
//!
//! ```sh
//! cargo run --example classification_tables
//! ```

use std::collections::BTreeMap;

use duval_planes::duval::{enumerate_classification, DuValConfig};
use duval_planes::verify::classification_extras;

fn print_table(pg: i64, q: i64) -> duval_planes::Result<()> {
    println!("p_g = {pg}, q = {q}:");
    let rows = enumerate_classification(pg, q, None)?;
    let mut by_ksq: BTreeMap<i64, Vec<String>> = BTreeMap::new();
    for (config, report) in &rows {
        let DuValConfig::TypeDn {
            n,
            delta1,
            delta2,
            gamma_infinitely_near,
            ..
        } = config
        else {
            continue;
        };
        let mut tag = format!("D_{n}({delta1},{delta2})");
        if *gamma_infinitely_near {
            tag.push('\'');
        }
        by_ksq.entry(report.ksq_minimal).or_default().push(tag);
    }
    for (ksq, tags) in &by_ksq {
        println!("  K² = {ksq}: {}", tags.join(", "));
    }
    for cell in classification_extras(pg, q)? {
        println!(
            "  warning: (K² = {}, n = {}) is realized but not listed",
            cell.0, cell.1
        );
    }
    println!();
    Ok(())
}

fn main() -> duval_planes::Result<()> {
    print_table(0, 0)?;
    print_table(1, 0)?;
    print_table(1, 1)?;
    Ok(())
}
