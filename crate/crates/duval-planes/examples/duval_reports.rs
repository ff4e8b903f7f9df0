//! Surface reports for Du Val double-plane configurations, and what the
//! admissibility rules reject.
//!
//! ```sh
//! cargo run --example duval_reports
//! ```

use duval_planes::duval::{check_admissible, surface_report, DuValConfig};

fn show(label: &str, config: &DuValConfig) {
    match surface_report(config) {
        Ok(report) => println!(
            "{label:<28} p_g = {}, q = {}, K² = {} (resolution {}), chi = {}, k = {}, \
             torsion rank ≥ {}, bicanonical degree {}{}",
            report.pg,
            report.q,
            report.ksq_minimal,
            report.ksq_resolution,
            report.chi,
            report.k_isolated,
            report.torsion_rank_lower,
            report.bicanonical_degree,
            match &report.pencil {
                Some(p) => format!(
                    ", genus-{} pencil with {} base point(s) and {} double fibre(s)",
                    p.genus, p.base_points, p.double_fibres
                ),
                None => ", K ample".to_string(),
            }
        ),
        Err(e) => println!("{label:<28} rejected: {e}"),
    }
}

fn main() {
    show("type B", &DuValConfig::TypeB);
    show("type D", &DuValConfig::TypeD);
    show("type D_0 smooth", &DuValConfig::dn(0, 0, 0));
    show("type D_2", &DuValConfig::dn(2, 0, 0));
    show("type D_2, three 4-tuples", &DuValConfig::dn(2, 0, 3));
    show(
        "type D_5 + [3,3], on conic",
        &DuValConfig::dn_on_conic(5, 1, 0),
    );
    show("type D_6, on conic", &DuValConfig::dn_on_conic(6, 0, 0));

    println!();
    for config in [DuValConfig::dn(0, 0, 1), DuValConfig::dn(4, 2, 2)] {
        let report = check_admissible(&config);
        println!("inadmissible: {}", report.reasons.join("; "));
    }
}
