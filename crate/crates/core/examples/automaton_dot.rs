//! Prints the balanced-ternary automaton in Graphviz form and traces one run.
//!
//! cargo run --example automaton_dot | dot -Tsvg > dfao.svg

use sqfw::balanced_ternary::encode;
use sqfw::{squarefree_dfao, to_dot, Symbol};

fn main() {
    let m = squarefree_dfao();
    print!("{}", to_dot(&m));

    let i = -17;
    let mut state = m.initial();
    let mut trace = vec![m.label(state).to_string()];
    for &d in encode(i).digits().iter().rev() {
        state = m.step(state, d);
        trace.push(format!("--[{}]--> {}", d.label(), m.label(state)));
    }
    eprintln!("run on {i}: {}", trace.join(" "));
    eprintln!("group automaton: {}", m.is_group_automaton());
}
