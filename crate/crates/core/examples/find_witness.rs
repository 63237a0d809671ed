use chidelta::certificate::verify_certificate;
use chidelta::graph::Graph;
use chidelta::named;
use chidelta::witness::{find_witness_report, ProbeLog};

fn main() {
    let mut k4_tail: Vec<_> = (0..4)
        .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
        .collect();
    k4_tail.extend([(0, 4), (4, 5)]);
    let graphs = [
        (
            "P4",
            Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap(),
        ),
        ("Petersen", named::petersen()),
        ("K4 + tail", Graph::from_edges(6, k4_tail).unwrap()),
        ("Chvátal", named::chvatal()),
        ("C11^2", Graph::cycle_power(11, 2).unwrap()),
        ("C16^2", Graph::cycle_power(16, 2).unwrap()),
        ("C7 complement", named::c7_complement()),
        ("K5", Graph::complete(5).unwrap()),
    ];
    for (name, g) in &graphs {
        let mut log = ProbeLog::recording();
        match find_witness_report(g, &mut log) {
            Ok(r) => {
                assert!(verify_certificate(g, &r.certificate).is_accept());
                println!(
                    "{name:>13}: {:?} via {:?} ({} probe events)",
                    r.certificate,
                    r.route,
                    log.events().len()
                );
            }
            Err(e) => println!("{name:>13}: {e}"),
        }
    }
}
