use chidelta::enumerate::generate_connected_graphs;
use chidelta::sweep::{theorem_sweep, Method, SweepOptions};

fn main() {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(7);

    for n in 1..=max_n.min(7) {
        println!(
            "order {n}: {} connected graphs",
            generate_connected_graphs(n).unwrap().len()
        );
    }

    let report = theorem_sweep(&SweepOptions::new(max_n, Method::Both)).unwrap();
    print!("{report}");
    println!("exceptional graphs: {}", report.total_exceptional());
}
