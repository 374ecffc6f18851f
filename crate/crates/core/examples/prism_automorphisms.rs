//! Automorphisms of the triangular prism, read from the sample file and
//! computed through the initiator product and the Leibniz expansion.
//!
//! cargo run --example prism_automorphisms

use hyperaut::format::{read_hypergraph, two_row};
use hyperaut::group::{aut, AutOptions, DetMethod};
use hyperaut::matrix::{canonical_matrix, greedy_row_order, initiator};
use hyperaut::Caps;

fn main() -> hyperaut::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/prism.txt");
    let g = read_hypergraph(path)?;
    let x = g.ground();

    let m = canonical_matrix(&g, &Caps::default())?;
    println!("canonical matrix is {0}x{0}", m.dim());
    let order = greedy_row_order(&m);
    let edges: Vec<String> = order.iter().map(|&i| g.fmt_edge(i)).collect();
    println!("greedy row order: {}", edges.join(" "));
    println!(
        "initiator of {} has {} terms",
        g.fmt_edge(0),
        initiator(&m, 0).len()
    );

    for method in [DetMethod::Initiators, DetMethod::Leibniz] {
        let r = aut(
            &g,
            &AutOptions {
                method,
                ..AutOptions::default()
            },
        )?;
        println!("{method:?}: |Aut| = {}", r.order);
    }
    let r = aut(&g, &AutOptions::default())?;
    for p in &r.elements(1_000)? {
        println!("  {}", two_row(p, x, x));
    }
    Ok(())
}
