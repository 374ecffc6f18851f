//! Isomorphisms between two hypergraphs via the canonical transformation.
//!
//! cargo run --example isomorphism

use hyperaut::format::{mapping, read_hypergraph};
use hyperaut::group::{iso, AutOptions};

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn main() -> hyperaut::Result<()> {
    let opts = AutOptions::default();

    let g = read_hypergraph(data("prism.txt"))?;
    let h = read_hypergraph(data("prism_relabelled.txt"))?;
    let r = iso(&g, &h, &opts)?;
    println!("prism -> relabelled prism: {} isomorphism(s)", r.order);
    if let Some(first) = r.bijections(1_000)?.iter().next() {
        println!("  e.g. {}", mapping(first, g.ground(), h.ground()));
    }

    let p4 = read_hypergraph(data("path4.txt"))?;
    let star = read_hypergraph(data("star4.txt"))?;
    let r = iso(&p4, &star, &opts)?;
    println!("path -> star: isomorphic = {}", r.is_isomorphic());
    Ok(())
}
