//! Walks through the construction on `abracadabrarabia`: the group forest
//! after every refinement round, the sorted forest, and the stack trace of
//! the final traversal.
//!
//! cargo run --example running_example

use sparse_ssa::driver::floor_log2;
use sparse_ssa::emitter::output_arrays_traced;
use sparse_ssa::grouper::{refine_observed, sort_groups};
use sparse_ssa::{FingerprintIndex, PositionSet, Text};

fn main() -> sparse_ssa::Result<()> {
    let text = Text::try_from("abracadabrarabia")?;
    let a = PositionSet::new(vec![1, 3, 8, 10, 11, 13], text.len())?;
    let fpi = FingerprintIndex::preprocess(&text, a.len(), 0)?;

    let (mut forest, _) = refine_observed(&a, &fpi, floor_log2(text.len()), 0, |j, f| {
        println!("after window 2^{j} = {}:", 1 << j);
        print!("{}", f.dump());
    });

    sort_groups(&mut forest, &text);
    println!("sorted:");
    print!("{}", forest.dump());

    let (out, _, trace) = output_arrays_traced(&forest, text.len())?;
    println!("\ntraversal:");
    for (step, row) in trace.iter().enumerate() {
        println!(
            "{:>2}  stack {:?}  ssa {:?}  slcp {:?}",
            step + 1,
            row.stack,
            row.ssa,
            row.slcp
        );
    }
    println!("\nSSA  = {:?}\nSLCP = {:?}", out.ssa, out.slcp);
    for &p in &out.ssa {
        println!("  {:>2}  {}", p, String::from_utf8_lossy(text.suffix(p)));
    }
    Ok(())
}
