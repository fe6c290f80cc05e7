//! Reading single symbols far out in both directions with the 3-state
//! automaton, without building any prefix.
//!
//! cargo run --example random_access -- -17 8 1000000000000

use sqfw::balanced_ternary::encode;
use sqfw::{b_at, b_range, decode, Symbol};

fn main() -> sqfw::Result<()> {
    let mut indices: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if indices.is_empty() {
        indices = vec![-17, 8, 0, 13, -13, 1_000_000_007, i64::MIN + 1, i64::MAX];
    }

    for i in indices {
        let digits = encode(i);
        assert_eq!(decode(&digits)?, i);
        println!("b[{i}] = {:>2}   ({} trits: {digits})", b_at(i).label(), digits.len());
    }

    // a window anywhere is as cheap as one near the origin
    let far = 10_i64.pow(15);
    println!("b[{far}..{}] = {}", far + 26, b_range(far, far + 26)?);
    Ok(())
}
