//! End to end: odd-Ramsey numbers of spanning complete bipartite families,
//! exact where the search finishes and bracketed (often collapsing) where
//! it does not.
//!
//! ```bash
//! cargo run --example odd_ramsey_numbers
//! ```

use oddramsey::codes::{build_task, rodd_from_codes, RoddValue, SearchBudget};

fn main() {
    let budget = SearchBudget {
        max_nodes: 50_000_000,
        max_time: None,
        max_length: 13,
    };
    println!("n    T            odd-Ramsey  method");
    for (n, t_set) in [
        (7usize, vec![1usize]),
        (9, vec![1, 3]),
        (11, vec![3]),
        (13, vec![1, 3, 5]),
        (4, vec![2]),
        (8, vec![2]),
        (10, vec![2]),
        (12, vec![2, 4]),
    ] {
        let task = build_task(n, t_set.iter().copied()).unwrap();
        let out = rodd_from_codes(&task, &budget).unwrap();
        let value = match out.value {
            RoddValue::Exact { value } => value.to_string(),
            RoddValue::Interval { lo, hi } => format!("[{lo}, {hi}]"),
        };
        println!(
            "{:<4} {:<12} {:<11} {:?} (witness dimension {})",
            n,
            format!("{t_set:?}"),
            value,
            out.method,
            out.witness.dim()
        );
    }
}
