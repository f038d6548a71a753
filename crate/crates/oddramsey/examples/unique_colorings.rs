//! Unique-chromatic colourings: every copy must contain a colour appearing
//! on exactly one edge. Includes the iterative clique extraction showing
//! that n - 2 colours never suffice for the family of all cliques.
//!
//! ```bash
//! cargo run --example unique_colorings
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use oddramsey::colorings::{clique_unique_coloring, unique_spanning_coloring};
use oddramsey::verify::{
    check_unique_cliques, check_unique_spanning, find_clique_without_unique, random_coloring,
};

fn main() {
    for n in [4usize, 6, 8, 10] {
        let col = unique_spanning_coloring(n).unwrap();
        let report = check_unique_spanning(&col);
        println!(
            "unique-spanning K_{n}: {} colours, {} bipartitions checked, pass = {}",
            col.num_colors(),
            report.checked,
            report.pass
        );
    }
    println!();
    for n in [5usize, 8, 12] {
        let col = clique_unique_coloring(n).unwrap();
        let report = check_unique_cliques(&col);
        println!(
            "clique-unique K_{n}: {} colours, {} cliques checked, pass = {}",
            col.num_colors(),
            report.checked,
            report.pass
        );
    }

    // With n - 2 colours a clique without a unique colour always exists;
    // the extraction walks down from the full vertex set.
    println!();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..5 {
        let col = random_coloring(8, 6, &mut rng);
        let clique = find_clique_without_unique(&col).unwrap();
        println!("random 6-colouring of K_8: unique-free clique {clique:?}");
    }
}
