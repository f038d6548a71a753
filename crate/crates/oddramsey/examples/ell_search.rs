//! Exact computation of ell(n, S): the largest dimension of a length-n
//! binary linear code with no codeword weight in S.
//!
//! ```bash
//! cargo run --example ell_search
//! ```

use oddramsey::codes::{ell_exact, SearchBudget, WeightSet};

fn main() {
    let budget = SearchBudget::unlimited();
    for (n, s) in [
        (7usize, vec![3usize, 4, 7]),
        (9, vec![3, 6, 9]),
        (8, vec![4, 8]),
        (10, vec![2, 8, 10]),
    ] {
        let weights = WeightSet::new(n, s.iter().copied()).unwrap();
        let result = ell_exact(&weights, &budget).unwrap();
        println!(
            "ell({n}, {s:?}) = {} ({} nodes, exhaustive: {})",
            result.value, result.nodes, result.exhaustive
        );
        println!("  witness basis:");
        for row in result.witness.basis().rows() {
            println!("    {row}");
        }
        let dist = result.witness.weight_distribution().unwrap();
        println!("  weight distribution: {dist:?}\n");
    }

    // Budgets make long searches give up cleanly: the result is then a
    // lower bound, flagged non-exhaustive.
    let weights = WeightSet::new(12, [6, 12]).unwrap();
    let tight = SearchBudget {
        max_nodes: 10_000,
        ..SearchBudget::default()
    };
    let partial = ell_exact(&weights, &tight).unwrap();
    println!(
        "ell(12, {{6,12}}) within 10k nodes: >= {} (exhaustive: {})",
        partial.value, partial.exhaustive
    );
}
