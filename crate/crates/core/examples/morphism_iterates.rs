//! Iterates of the tripling morphism from the seed 2, their block structure,
//! and center extraction stepping back down.
//!
//! cargo run --example morphism_iterates -- 5

use sqfw::morphism::{first_non_permutation_block, iterates};
use sqfw::{center_extract, phi_window, Symbol, Ternary};

fn main() -> sqfw::Result<()> {
    let depth: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);

    for (n, w) in iterates(Ternary::Two).take(depth + 1).enumerate() {
        let shown = if w.len() <= 81 { w.to_spaced() } else { format!("{:.60}...", w.to_string()) };
        println!("phi^{n}(2) [{}]: {shown}", w.len());
        if n > 0 {
            assert_eq!(first_non_permutation_block(&w), None);
        }
    }

    // walk back down
    let mut w = iterates(Ternary::Two).nth(depth).unwrap();
    while w.len() > 1 {
        w = center_extract(&w)?;
        println!("center_extract -> {} symbols", w.len());
    }

    let win = phi_window(3)?;
    print!("phi^3(2) on [{}, {}]:", win.lo(), win.hi());
    for (i, s) in win.indexed().filter(|(i, _)| i.abs() <= 4) {
        print!(" {i}:{}", s.label());
    }
    println!();
    Ok(())
}
