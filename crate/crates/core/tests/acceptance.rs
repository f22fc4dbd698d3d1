//! One line per acceptance criterion, each followed by its claim table; exits
//! non-zero when any criterion fails or overruns its time budget.

use g2disc_core::verify::all_criteria;

fn main() {
    let reports = all_criteria();
    for r in &reports {
        println!("{}", r.summary_line());
    }
    println!();
    for r in &reports {
        println!("{}", r.table());
    }
    let failed: Vec<u32> = reports.iter().filter(|r| !r.passed()).map(|r| r.id).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", reports.len());
    } else {
        println!("acceptance: {} of {} criteria fail: {failed:?}", failed.len(), reports.len());
        std::process::exit(1);
    }
}
