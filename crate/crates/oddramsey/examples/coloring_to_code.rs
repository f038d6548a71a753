//! From an edge colouring back to a code: the odd-degree vertex sets of the
//! colour classes span an even code whose dual, with the all-one vector
//! split off, avoids the weights the colouring handles.
//!
//! ```bash
//! cargo run --example coloring_to_code
//! ```

use oddramsey::colorings::{code_from_coloring, hamiltonian_path_coloring};

fn main() {
    for n in [5usize, 6, 7] {
        let col = hamiltonian_path_coloring(n).unwrap();
        println!(
            "path colouring of K_{n}: {} colours, class sizes {:?}",
            col.num_colors(),
            col.class_sizes()
        );
        let out = code_from_coloring(&col).unwrap();
        for (c, set) in out.profile.sets.iter().enumerate() {
            println!("  colour {c}: odd-degree set {:?}", set.support());
        }
        println!(
            "  parity span: [{}, {}], derived avoiding code: [{}, {}]",
            out.parity_span.length(),
            out.parity_span.dim(),
            out.avoiding.length(),
            out.avoiding.dim()
        );
        if out.avoiding.dim() > 0 {
            let dist = out.avoiding.weight_distribution().unwrap();
            println!("  avoiding-code weights: {:?}", dist.keys().collect::<Vec<_>>());
        }
        println!();
    }
}
