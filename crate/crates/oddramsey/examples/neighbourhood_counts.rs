//! Counting diagnostics: even s-neighbourhoods of a vertex against the
//! guaranteed lower bound, and vertex type vectors with zero-sum subsets.
//!
//! ```bash
//! cargo run --example neighbourhood_counts
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use oddramsey::codes::build_task;
use oddramsey::colorings::hamiltonian_path_coloring;
use oddramsey::verify::{
    check_odd_ramsey_spanning, count_even_s_neighbourhoods, find_zero_sum_subset, random_coloring,
    type_vectors,
};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let col = random_coloring(12, 3, &mut rng);
    println!("random 3-colouring of K_12, counts for vertex 1:");
    for s in 1..=4 {
        let out = count_even_s_neighbourhoods(&col, 1, s);
        let (num, den) = out.bound.unwrap();
        println!(
            "  s = {s}: {} even neighbourhoods, guaranteed at least {num}/{den} ≈ {:.1}",
            out.count,
            num as f64 / den as f64
        );
    }

    // Type vectors: XOR over a vertex set gives the crossing parities of
    // the bipartition it spans, so a zero-sum set is an all-even copy.
    println!("\ntype vectors of a random 2-colouring of K_8:");
    let col = random_coloring(8, 2, &mut rng);
    for (v, tau) in type_vectors(&col).iter().enumerate() {
        println!("  vertex {}: {tau}", v + 1);
    }
    match find_zero_sum_subset(&type_vectors(&col), 2) {
        Some(pair) => println!("zero-sum pair {pair:?} -> even K_{{2,6}} on that split"),
        None => println!("no zero-sum pair"),
    }

    // A colouring handling part size 2 cannot have one.
    let col = hamiltonian_path_coloring(6).unwrap();
    let task = build_task(6, [2]).unwrap();
    assert!(check_odd_ramsey_spanning(&col, &task).pass);
    assert_eq!(find_zero_sum_subset(&type_vectors(&col), 2), None);
    println!("\npath colouring of K_6 handles t = 2, and indeed no zero-sum pair exists");
}
