use std::time::Instant;

use decomp_core::engine::ClassPoset;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    for n in 1..=max {
        let t = Instant::now();
        let poset = ClassPoset::build(n);
        let h = poset.hasse();
        println!("n={n:2} classes={:5} covers={:6} {:?}", h.nodes.len(), h.covers.len(), t.elapsed());
    }
}
