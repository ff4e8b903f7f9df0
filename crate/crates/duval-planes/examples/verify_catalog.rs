//! Run the verification catalog from the library and summarize it by
//! section; the `duval-planes verify-paper` subcommand prints the same
//! records as JSON.
//!
//! ```sh
//! cargo run --example verify_catalog
//! ```

use std::collections::BTreeMap;

use duval_planes::verify::{run_catalog, tally, Status};

fn main() {
    let records = run_catalog();
    let mut sections: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for record in &records {
        let section = record
            .id
            .split(['-', '('])
            .next()
            .unwrap_or("misc")
            .to_string();
        let entry = sections.entry(section).or_insert((0, 0));
        match record.status {
            Status::Pass => entry.0 += 1,
            Status::Fail => entry.1 += 1,
        }
    }
    for (section, (pass, fail)) in &sections {
        println!("{section:<12} {pass:>4} passed  {fail:>2} failed");
    }
    let (passed, failed) = tally(&records);
    println!("total        {passed:>4} passed  {failed:>2} failed");

    if let Some(sample) = records.iter().find(|r| r.id == "prop2.5-siii") {
        println!(
            "\nsample record: {} — computed {}, expected {} [{}]",
            sample.id,
            sample.computed,
            sample.expected,
            serde_json::to_string(&sample.provenance).unwrap()
        );
    }
}
