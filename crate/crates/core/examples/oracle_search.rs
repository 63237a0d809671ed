use chidelta::graph::Graph;
use chidelta::named;
use chidelta::oracle::{find_clique, find_high_odd_hole, is_c7_complement, oracle_witness};

fn main() {
    let k5 = Graph::complete(5).unwrap();
    println!("K5, least 4-clique: {:?}", find_clique(&k5, 4));

    let p = named::petersen();
    println!("Petersen triangle: {:?}", find_clique(&p, 3));
    println!("Petersen high odd hole: {:?}", find_high_odd_hole(&p));

    let c7c = named::c7_complement();
    println!(
        "complement of C7: K4 {:?}, hole {:?}",
        find_clique(&c7c, 4),
        find_high_odd_hole(&c7c)
    );
    println!("  position map: {:?}", is_c7_complement(&c7c));

    for n in [7, 10, 11] {
        let g = Graph::cycle_power(n, 2).unwrap();
        println!("C{n}^2 oracle: {:?}", oracle_witness(&g));
    }
}
