use chidelta::certificate::{verify_certificate, Certificate};
use chidelta::graph::Graph;
use chidelta::witness::{
    forced_coloring_conflict, sequence_three_coloring, squared_cycle_hole, trace_squared_cycle,
    Step,
};

fn main() {
    // Scramble C16^2 and recover its cyclic order from local structure alone.
    let n = 16;
    let perm: Vec<usize> = (0..n).map(|i| (i * 5 + 3) % n).collect();
    let base = Graph::cycle_power(n, 2).unwrap();
    let g = Graph::from_edges(n, base.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
    let Step::Done(labeling) = trace_squared_cycle(&g).unwrap() else {
        unreachable!("C16^2 has no K4 and no short hole around a vertex")
    };
    let order: Vec<usize> = (0..n).map(|p| labeling.vertex_at(p)).collect();
    println!("cyclic order: {order:?}");

    let positions = squared_cycle_hole(n).unwrap();
    let cycle: Vec<usize> = positions.iter().map(|&p| labeling.vertex_at(p)).collect();
    println!("hole positions {positions:?} -> vertices {cycle:?}");
    assert!(verify_certificate(&g, &Certificate::HighOddHole { cycle }).is_accept());

    for n in 7..=14 {
        if n % 3 == 0 {
            let c = sequence_three_coloring(n).unwrap();
            println!("C{n}^2: 3-colored by residues {:?}", c.as_slice());
        } else {
            let fc = forced_coloring_conflict(n).unwrap();
            println!(
                "C{n}^2: forced coloring {:?} clashes on {:?}{}",
                fc.coloring.as_slice(),
                fc.edge,
                fc.removed
                    .map_or(String::new(), |r| format!(" even without {r}"))
            );
        }
    }
}
