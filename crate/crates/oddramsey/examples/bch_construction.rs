//! The BCH pipeline behind the constructive bounds: build a narrow-sense
//! BCH code, shorten it, pad with zeros, and pass to the even subcode to
//! avoid a whole weight set.
//!
//! ```bash
//! cargo run --example bch_construction
//! ```

use std::collections::BTreeSet;

use oddramsey::codes::{bch_code, build_task, construct_avoiding, even_subcode, extend_zeros, shorten};

fn main() {
    // Narrow-sense BCH codes of length 2^s - 1, designed distance 2d + 1.
    for (s, d) in [(3usize, 1usize), (4, 1), (4, 2), (5, 2)] {
        let code = bch_code(s, d).unwrap();
        let min = code.min_nonzero_weight().unwrap().unwrap();
        println!(
            "bch(s={s}, d={d}): [{}, {}] code, minimum weight {min} (designed {})",
            code.length(),
            code.dim(),
            2 * d + 1
        );
    }

    // Step through the pipeline by hand for length 20, part size 2.
    println!("\npipeline for n = 20, T = {{2}} (forbidden weights {{2, 18, 20}}):");
    let bch = bch_code(5, 1).unwrap();
    println!("  start:   [{}, {}] BCH", bch.length(), bch.dim());
    let drop: BTreeSet<usize> = (18..=31).collect();
    let shortened = shorten(&bch, &drop).unwrap();
    println!(
        "  shorten: [{}, {}] after removing the last 14 coordinates",
        shortened.length(),
        shortened.dim()
    );
    let padded = extend_zeros(&shortened, 3);
    println!("  pad:     [{}, {}] with three zero coordinates", padded.length(), padded.dim());
    let even = even_subcode(&padded);
    println!("  even:    [{}, {}] even subcode", even.length(), even.dim());

    // construct_avoiding performs the same steps and checks avoidance.
    let task = build_task(20, [2]).unwrap();
    let code = construct_avoiding(&task).unwrap();
    let dist = code.weight_distribution().unwrap();
    println!(
        "\nconstruct_avoiding: [{}, {}], weights present: {:?}",
        code.length(),
        code.dim(),
        dist.keys().collect::<Vec<_>>()
    );
    assert!(!dist.contains_key(&2) && !dist.contains_key(&18) && !dist.contains_key(&20));
}
