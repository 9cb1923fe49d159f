//! Per-group, per-check timings over a corpus, slowest first.
//!
//! ```text
//! cargo run --release -p galblock --example profile -- builtin [limit]
//! ```

use std::time::Instant;

use galblock::corpus::load;
use galblock_core::theorems::{run_check, GroupContext, SweepBudget, CHECK_NAMES};

fn main() {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "builtin".into());
    let limit: usize = args.next().map(|s| s.parse().unwrap()).unwrap_or(40);
    let budget = SweepBudget::default();
    let mut timings = Vec::new();
    let start = Instant::now();
    for rec in load(&spec).unwrap() {
        let t0 = Instant::now();
        let Ok(ctx) = GroupContext::new(rec.id.clone(), rec.group.clone(), 3, rec.flags) else {
            eprintln!("{}: context failed", rec.id);
            continue;
        };
        timings.push((t0.elapsed().as_millis(), rec.id.clone(), rec.order(), "context"));
        for c in CHECK_NAMES {
            let t = Instant::now();
            let r = run_check(&ctx, c, &budget);
            if r.status.is_fail() {
                eprintln!("FAIL {} {c}: {:?}", rec.id, r.witness);
            }
            timings.push((t.elapsed().as_millis(), rec.id.clone(), rec.order(), c));
        }
        let total = t0.elapsed().as_millis();
        if total > 2000 {
            eprintln!("slow: {} (order {}) {total} ms", rec.id, rec.order());
        }
    }
    timings.sort_by(|a, b| b.0.cmp(&a.0));
    for (ms, id, order, what) in timings.iter().take(limit) {
        println!("{ms:>8} ms  {id} (order {order})  {what}");
    }
    println!("total {:.1} s", start.elapsed().as_secs_f64());
}
