use chidelta::graph::Graph;
use chidelta::graph6::{decode_graph6, encode_graph6};

fn main() {
    let c5 = Graph::cycle(5).unwrap();
    let line = encode_graph6(&c5).unwrap();
    println!("C5 -> {line}");

    for text in ["C~", "Dhc", ">>graph6<<C~\n", "BA", "~?@@"] {
        match decode_graph6(text) {
            Ok(g) => println!("{text:?}: {} vertices, {} edges", g.order(), g.edge_count()),
            Err(e) => println!("{text:?}: error: {e}"),
        }
    }

    let big = Graph::cycle_power(64, 2).unwrap();
    let line = encode_graph6(&big).unwrap();
    println!("C64^2 uses the long size prefix: {}...", &line[..4]);
    assert_eq!(decode_graph6(&line).unwrap(), big);
}
