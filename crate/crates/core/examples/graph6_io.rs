//! graph6 and edge-list round trips.

use perfect_coalition::graph::{encode_graph6, format_edge_list, parse_edge_list, parse_graph6};

fn main() {
    let g = parse_edge_list("# C_5\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let g6 = encode_graph6(&g).unwrap();
    println!("C_5 as graph6: {g6}");
    let back = parse_graph6(&g6).unwrap();
    assert_eq!(back, g);
    print!("back as edge list:\n{}", format_edge_list(&back));
    println!("girth {:?}, connected {}", back.girth(), back.is_connected());
    for bad in ["", "C~~~~", "?x"] {
        println!("{bad:?}: {}", parse_graph6(bad).unwrap_err());
    }
}
