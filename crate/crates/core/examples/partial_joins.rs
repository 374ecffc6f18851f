//! Joining partial permutations and extending them to full permutations.
//!
//! cargo run --example partial_joins

use hyperaut::{transversal, GroundSet, Partial};

fn p(domain: &[usize], image: &[usize]) -> Partial {
    let d: Vec<usize> = domain.iter().map(|x| x - 1).collect();
    let i: Vec<usize> = image.iter().map(|x| x - 1).collect();
    Partial::from_indices(&d, &i).expect("valid partial")
}

fn main() {
    let x = GroundSet::numbered(40);
    let show = |q: &Partial| hyperaut::format::partial(q, &x, &x);

    let a = p(&[1, 2], &[1, 2]);
    let b = p(&[3, 4], &[3, 4]);
    let ab = a.join(&b).unwrap();
    println!("{} v {} = {}", show(&a), show(&b), show(&ab));

    // Agreeing on the overlap is enough.
    let c = p(&[1, 5], &[1, 7]);
    println!(
        "{} v {} = {}",
        show(&ab),
        show(&c),
        show(&ab.join(&c).unwrap())
    );

    // Two points sent to one image: no common extension.
    let d = p(&[6], &[2]);
    match ab.join(&d) {
        Some(j) => println!("unexpected join {}", show(&j)),
        None => println!("{} v {} = 0 (image 2 is hit twice)", show(&ab), show(&d)),
    }

    let f = p(&[1, 2, 3], &[12, 22, 31]);
    let g = f.extend_to_permutation(40).unwrap();
    println!(
        "{} extends to {}",
        show(&f),
        hyperaut::format::cycles(&g, &x)
    );

    let a = x.indices_of(&[1, 2, 3, 4, 7, 8]).unwrap();
    let b = x.indices_of(&[3, 4, 1, 5, 34, 17]).unwrap();
    let s = transversal(&a, &b, 40).unwrap();
    println!(
        "transversal {{1,2,3,4,7,8}} -> {{1,3,4,5,17,34}}: {}",
        hyperaut::format::cycles(&s, &x)
    );
}
