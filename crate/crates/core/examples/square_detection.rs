//! Square detection on a few words: the divide-and-conquer detector, the
//! quadratic oracle, and a square planted into an otherwise square-free word.

use std::time::Instant;

use sqfw::{find_square, find_square_naive, is_squarefree, phi_power};

fn main() -> sqfw::Result<()> {
    for text in ["abcacb", "banana", "0110100110010110", "abcbacbcabcba"] {
        let w = text.as_bytes();
        match find_square(w) {
            Some(sq) => println!("{text:>18}: {sq} ({:?})", &text[sq.position..sq.position + sq.len()]),
            None => println!("{text:>18}: square-free"),
        }
        assert_eq!(find_square(w).is_some(), find_square_naive(w).is_some());
    }

    for n in [6, 9, 11] {
        let w = phi_power(n)?;
        let t = Instant::now();
        let free = is_squarefree(&w);
        println!("phi^{n}(2): {} symbols, square-free = {free}, {:?}", w.len(), t.elapsed());
    }

    let mut w = phi_power(7)?.to_vec();
    let c = w.len() / 2;
    w[c + 1] = w[c];
    let sq = find_square(&w).expect("planted square");
    assert!(sq.validate(&w));
    println!("after planting w[{}] = w[{c}]: {sq}", c + 1);
    Ok(())
}
