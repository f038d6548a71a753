//! The full spanning family: n - 1 colours suffice for even n and n for odd
//! n, and one colour fewer always leaves some spanning complete bipartite
//! graph meeting every colour class evenly.
//!
//! ```bash
//! cargo run --example spanning_family
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use oddramsey::codes::build_task;
use oddramsey::colorings::hamiltonian_path_coloring;
use oddramsey::verify::{check_odd_ramsey_spanning, even_bipartition_witness, random_coloring};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 4..=10 {
        let col = hamiltonian_path_coloring(n).unwrap();
        let family: Vec<usize> = (1..=n / 2).collect();
        let task = build_task(n, family).unwrap();
        let report = check_odd_ramsey_spanning(&col, &task);
        println!(
            "K_{n}: {} colours handle every spanning bipartition ({} checked, vacuous part sizes {:?})",
            col.num_colors(),
            report.checked,
            report.vacuous
        );
        assert!(report.pass);

        // One colour down, a random colouring always has an all-even copy.
        let fewer = col.num_colors() - 1;
        let random = random_coloring(n, fewer, &mut rng);
        match even_bipartition_witness(&random) {
            Some(w) => println!(
                "  with {fewer} colours: all-even bipartition A = {:?} (|A| = {})",
                w.a, w.t
            ),
            None => println!("  with {fewer} colours: no witness (not expected)"),
        }
    }
}
