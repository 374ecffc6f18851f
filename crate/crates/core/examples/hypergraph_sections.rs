//! A hypergraph with edges of several sizes: one block per size, and the
//! automorphism group is the intersection over the sections.
//!
//! cargo run --example hypergraph_sections

use hyperaut::format::{cycles, read_hypergraph};
use hyperaut::group::{aut, AutOptions};
use hyperaut::matrix::section_blocks;
use hyperaut::Caps;

fn main() -> hyperaut::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/mixed.txt");
    let g = read_hypergraph(path)?;
    let opts = AutOptions::default();

    let blocks = section_blocks(&g, &Caps::default())?;
    for ((k, s), b) in g.sections().iter().zip(&blocks) {
        let r = aut(s, &opts)?;
        println!(
            "{k}-section: {} edge(s), block {}x{}, |Aut| = {}",
            s.num_edges(),
            b.dim(),
            b.dim(),
            r.order
        );
    }

    let r = aut(&g, &opts)?;
    println!("whole hypergraph: |Aut| = {}", r.order);
    for p in &r.elements(1_000)? {
        println!("  {}", cycles(p, g.ground()));
    }

    let fano = read_hypergraph(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/fano.txt"
    ))?;
    println!("Fano plane: |Aut| = {}", aut(&fano, &opts)?.order);
    Ok(())
}
