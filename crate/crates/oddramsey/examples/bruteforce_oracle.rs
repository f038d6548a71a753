//! Desk-scale ground truth: the brute-force search over edge partitions
//! agrees with n - ell(n, W_T) on every family that fits.
//!
//! ```bash
//! cargo run --example bruteforce_oracle
//! ```

use oddramsey::codes::{build_task, ell_exact, SearchBudget};
use oddramsey::verify::{rodd_bruteforce, OracleBudget};

fn main() {
    let search = SearchBudget::unlimited();
    let oracle_budget = OracleBudget::default();
    for (n, t_set) in [
        (4usize, vec![2usize]),
        (5, vec![1]),
        (5, vec![2]),
        (5, vec![1, 2]),
        (6, vec![2]),
        (6, vec![1, 2, 3]),
    ] {
        let task = build_task(n, t_set.iter().copied()).unwrap();
        let oracle = rodd_bruteforce(&task, &oracle_budget).unwrap();
        let ell = ell_exact(task.weights(), &search).unwrap();
        println!(
            "n = {n}, T = {t_set:?}: oracle = {oracle}, n - ell(n, {:?}) = {}",
            task.weights().forbidden(),
            n - ell.value
        );
        assert_eq!(oracle, n - ell.value);
    }
    println!("\nboth routes agree on every family above");
}
