//! From a weight-avoiding code to an edge colouring: a code of length n and
//! dimension k avoiding W_T yields an (n - k)-colouring in which every
//! K_{t,n-t} with t in T meets some colour class oddly.
//!
//! ```bash
//! cargo run --example code_to_coloring
//! ```

use oddramsey::codes::{build_task, ell_exact, SearchBudget};
use oddramsey::colorings::coloring_from_code;
use oddramsey::verify::check_odd_ramsey_spanning;

fn main() {
    let task = build_task(9, [1, 3]).unwrap();
    println!(
        "task: n = 9, T = {{1, 3}}, forbidden weights {:?}",
        task.weights().forbidden()
    );

    let ell = ell_exact(task.weights(), &SearchBudget::unlimited()).unwrap();
    println!(
        "optimal avoiding code has dimension {} -> {} colours suffice",
        ell.value,
        9 - ell.value
    );

    let out = coloring_from_code(&ell.witness, &task).unwrap();
    println!("coordinate permutation to systematic form: {:?}", out.sigma);
    println!("colour class sizes: {:?}", out.coloring.class_sizes());

    // The first classes are odd stars; print them.
    for c in 0..out.coloring.num_colors() - 1 {
        let edges: Vec<String> = out
            .coloring
            .edges()
            .filter(|&(_, _, color)| color == c as u32)
            .map(|(i, j, _)| format!("({i},{j})"))
            .collect();
        println!("  colour {c}: {}", edges.join(" "));
    }

    let report = check_odd_ramsey_spanning(&out.coloring, &task);
    println!(
        "exhaustive verification over {} bipartitions: pass = {}",
        report.checked, report.pass
    );
    assert!(report.pass);
}
