//! Thue-Morse three ways (morphism, binary digit sum, 2-state automaton) and
//! the square-free ternary word obtained from its run lengths.

use sqfw::reference_sequences::{binary_digits, derive_v, thue_morse_dfao, thue_morse_direct, thue_morse_psi};
use sqfw::{is_squarefree, Dfao};

fn main() -> sqfw::Result<()> {
    let t = thue_morse_psi(10)?;
    let tm: Dfao<_, _> = thue_morse_dfao();
    for (i, &bit) in t.iter().enumerate() {
        let i = i as u64;
        assert_eq!(bit, thue_morse_direct(i));
        assert_eq!(bit, tm.run(binary_digits(i).into_iter().rev()));
    }
    println!("t = {:.64}...", t.to_string());
    println!("t has a square: {}", !is_squarefree(&t));

    let v = derive_v(&thue_morse_psi(12)?)?;
    println!("v = {:.64}... ({} symbols)", v.to_string(), v.len());
    println!("v square-free: {}", is_squarefree(&v));
    Ok(())
}
