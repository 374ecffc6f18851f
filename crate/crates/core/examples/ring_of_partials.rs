//! Sums and products of partial permutations, and what they evaluate to.
//!
//! cargo run --example ring_of_partials

use hyperaut::{GroundSet, Partial, Polypartial};

fn main() {
    let m = 4;
    let x = GroundSet::numbered(m);
    let p = |d: &[usize], i: &[usize]| Partial::from_indices(d, i).unwrap();

    // Both bijections of {1,2} onto itself, and onto {2,3}.
    let k = Polypartial::from_terms([p(&[0, 1], &[0, 1]), p(&[0, 1], &[1, 0])]);
    let l = Polypartial::from_terms([p(&[1, 2], &[1, 2]), p(&[1, 2], &[2, 1])]);

    println!("k =\n{}", hyperaut::format::polypartial(&k, &x, &x));
    println!(
        "k + k = {}",
        hyperaut::format::polypartial(&k.add(&k), &x, &x)
    );
    println!("k * k == k: {}", k.mul(&k) == k);

    let kl = k.mul(&l);
    println!("k * l =\n{}", hyperaut::format::polypartial(&kl, &x, &x));

    let ev = kl.eval(m, 1_000).unwrap();
    println!("k * l evaluates to {} permutations:", ev.len());
    for g in &ev {
        println!("  {}", hyperaut::format::cycles(g, &x));
    }
    println!("counted without expanding: {}", kl.order(3, m).unwrap());
}
