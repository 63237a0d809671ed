use chidelta::bitset::VertexSet;
use chidelta::coloring::{is_proper, Coloring};
use chidelta::graph::Graph;
use chidelta::kempe::{kempe_chain, kempe_swap, shortest_path_in_chain};

fn main() {
    // A 6-cycle colored 1,2,1,2,1,2 plus a pendant vertex 6 colored 3.
    let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6)]).unwrap();
    let c = Coloring::from_colors(3, vec![1, 2, 1, 2, 1, 2, 3]).unwrap();

    let chain = kempe_chain(&g, &c, 0, 1, 3).unwrap();
    println!("(1,3) chain at 0: {:?}", chain.members);
    let swapped = kempe_swap(&c, &chain);
    println!("after swap: {:?}", swapped.as_slice());
    assert_eq!(is_proper(&g, &swapped, g.vertices()), Ok(true));

    let whole = kempe_chain(&g, &c, 0, 1, 2).unwrap();
    let path = shortest_path_in_chain(&g, &whole, 0, VertexSet::singleton(3)).unwrap();
    println!("shortest path 0 -> 3 inside the (1,2) chain: {path:?}");
}
