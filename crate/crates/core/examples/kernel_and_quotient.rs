//! How automorphisms act on the edges: the kernel of that action, the
//! radicals that generate it, and the cosets it splits the group into.
//!
//! cargo run --example kernel_and_quotient

use hyperaut::format::cycles;
use hyperaut::group::{aut, kernel, quotient_embedding, radicals, AutOptions};
use hyperaut::Hypergraph;

fn main() -> hyperaut::Result<()> {
    // A triangle with two pendant edges and one isolated edge {6,7}.
    let g = Hypergraph::from_labels(8, &[&[1, 2], &[2, 3], &[1, 3], &[3, 4], &[4, 5], &[6, 7]])?;
    let x = g.ground();

    let rads = radicals(&g)?;
    let shown: Vec<String> = rads.iter().map(|&i| g.fmt_edge(i)).collect();
    println!("radicals: {}", shown.join(" "));

    let k = kernel(&g, 1_000)?;
    println!("kernel ({} elements):", k.len());
    for p in &k {
        println!("  {}", cycles(p, x));
    }

    let auts = aut(&g, &AutOptions::default())?.elements(10_000)?;
    let q = quotient_embedding(&g, &auts)?;
    println!(
        "|Aut| = {}, edge permutations realised = {}",
        auts.len(),
        q.image_len()
    );
    for (j, fibre) in &q.fibers {
        let moved: Vec<String> = (0..g.num_edges())
            .filter(|&e| j.0.apply(e) != e)
            .map(|e| format!("{}->{}", g.fmt_edge(e), g.fmt_edge(j.0.apply(e))))
            .collect();
        let shown = if moved.is_empty() {
            "identity".to_string()
        } else {
            moved.join(" ")
        };
        println!("  {shown}: {} automorphism(s)", fibre.len());
    }
    Ok(())
}
