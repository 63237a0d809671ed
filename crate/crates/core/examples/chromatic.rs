use chidelta::coloring::{chromatic_number, extract_vertex_critical, find_k_coloring};
use chidelta::graph::Graph;
use chidelta::named;

fn main() {
    let graphs = [
        ("C5", Graph::cycle(5).unwrap()),
        ("K4", Graph::complete(4).unwrap()),
        ("Petersen", named::petersen()),
        ("Grötzsch", named::grotzsch()),
        ("C7^2", Graph::cycle_power(7, 2).unwrap()),
        ("C8^2", Graph::cycle_power(8, 2).unwrap()),
        ("C9^2", Graph::cycle_power(9, 2).unwrap()),
    ];
    for (name, g) in &graphs {
        let chi = chromatic_number(g);
        let critical = extract_vertex_critical(g);
        println!(
            "{name:>9}: chi {chi}, Delta {}, critical subgraph on {} of {} vertices",
            g.max_degree().unwrap(),
            critical.len(),
            g.order()
        );
    }

    // An optimal coloring, and a proof that one color fewer fails.
    let g = named::petersen();
    let c = find_k_coloring(&g, 3, g.vertices()).unwrap();
    println!("Petersen 3-coloring: {:?}", c.as_slice());
    assert!(find_k_coloring(&g, 2, g.vertices()).is_none());
}
