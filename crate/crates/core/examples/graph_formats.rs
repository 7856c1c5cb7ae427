//! graph6 and edge-list round trips plus basic metrics.

use pp2::Graph;

fn main() {
    let petersen = "p10".parse::<pp2::FamilySpec>().unwrap().construct().unwrap();
    let g6 = petersen.to_graph6();
    println!("graph6: {g6}");
    print!("edge list:\n{}", petersen.to_edge_list_text());

    let back = Graph::from_graph6(&g6).unwrap();
    assert_eq!(back, petersen);
    let again = Graph::from_edge_list_text(&petersen.to_edge_list_text()).unwrap();
    assert_eq!(again, petersen);

    println!("{:?}", petersen.metrics());
    println!("maximal triangle-free: {}", petersen.is_maximal_triangle_free().unwrap());
}
