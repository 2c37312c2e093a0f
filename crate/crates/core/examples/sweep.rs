//! Extended pipeline-vs-oracle sweep beyond the acceptance boxes:
//! exhaustive on G(2,6) and G(3,7), strided on G(4,8).
//!
//! Run with `cargo run --release -p ecodim --example sweep`.

use ecodim::*;

fn agree(l: &Partition, m: &Partition, k: usize, n: usize) {
    let oracle = schur_product_in_box(l, m, k, n);
    match lr_expand(l, m, k, n) {
        Ok((e, _)) => assert_eq!(e, oracle, "mismatch at {l} x {m} in G({k},{n})"),
        Err(IrmError::EmptyIntersection) => {
            assert!(oracle.is_empty(), "pipeline empty, oracle not, at {l} x {m} in G({k},{n})")
        }
        Err(e) => panic!("pipeline error at {l} x {m} in G({k},{n}): {e}"),
    }
}

fn main() {
    for (k, n) in [(2usize, 6usize), (3, 7)] {
        let shapes = Partition::all_in_box(k, n - k);
        let mut pairs = 0;
        for l in &shapes {
            for m in &shapes {
                agree(l, m, k, n);
                pairs += 1;
            }
        }
        println!("G({k},{n}): {pairs} pairs agree");
    }

    let shapes = Partition::all_in_box(4, 4);
    let mut pairs = 0;
    for (i, l) in shapes.iter().enumerate() {
        for m in shapes.iter().skip(i).step_by(7) {
            agree(l, m, 4, 8);
            pairs += 1;
        }
    }
    println!("G(4,8): {pairs} sampled pairs agree");
}
