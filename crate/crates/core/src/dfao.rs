//! Deterministic finite automata with output, and the three-state machine
//! that reads balanced ternary digits low-to-high and emits the square-free
//! sequence `b_i` directly.

use std::fmt::Write as _;
use std::marker::PhantomData;
use std::sync::OnceLock;

use crate::alphabet::{Balanced, Symbol, TwoSidedWindow, Word};
use crate::balanced_ternary::{encode, increment};
use crate::error::{Error, Result};
use crate::limits::{half_width, Limits};

/// A DFAO reading digits of type `D` and emitting symbols of type `O`.
///
/// States are dense indices. The transition table is total by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfao<D, O> {
    labels: Vec<String>,
    outputs: Vec<O>,
    table: Vec<usize>,
    initial: usize,
    _digits: PhantomData<D>,
}

impl<D: Symbol, O: Symbol> Dfao<D, O> {
    /// Builds a machine from `(label, output)` pairs and a transition
    /// function, which is evaluated once per `(state, digit)` pair.
    pub fn new(
        states: Vec<(String, O)>,
        initial: usize,
        transition: impl Fn(usize, D) -> usize,
    ) -> Result<Self> {
        if states.is_empty() {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        if initial >= states.len() {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of {} states",
                states.len()
            )));
        }
        let n = states.len();
        let mut table = Vec::with_capacity(n * D::ALL.len());
        for q in 0..n {
            for &d in D::ALL {
                let next = transition(q, d);
                if next >= n {
                    return Err(Error::InvalidAutomaton(format!(
                        "transition ({q}, {}) -> {next} leaves the state set",
                        d.label()
                    )));
                }
                table.push(next);
            }
        }
        let (labels, outputs) = states.into_iter().unzip();
        Ok(Dfao {
            labels,
            outputs,
            table,
            initial,
            _digits: PhantomData,
        })
    }

    pub fn state_count(&self) -> usize {
        self.outputs.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn label(&self, state: usize) -> &str {
        &self.labels[state]
    }

    pub fn output(&self, state: usize) -> O {
        self.outputs[state]
    }

    pub fn step(&self, state: usize, digit: D) -> usize {
        self.table[state * D::ALL.len() + digit.index()]
    }

    /// State reached after reading `input` from the initial state.
    pub fn final_state<I: IntoIterator<Item = D>>(&self, input: I) -> usize {
        input
            .into_iter()
            .fold(self.initial, |q, d| self.step(q, d))
    }

    /// Output of the state reached after `input`; the empty input yields the
    /// initial state's output.
    pub fn run<I: IntoIterator<Item = D>>(&self, input: I) -> O {
        self.output(self.final_state(input))
    }

    /// Like [`Dfao::run`] on raw integer digits, rejecting values outside the
    /// input alphabet.
    pub fn run_values(&self, digits: &[i64]) -> Result<O> {
        let typed = digits
            .iter()
            .map(|&v| {
                i8::try_from(v)
                    .ok()
                    .and_then(D::from_value)
                    .ok_or(Error::InvalidDigit {
                        digit: v,
                        alphabet: D::ALPHABET,
                    })
            })
            .collect::<Result<Vec<D>>>()?;
        Ok(self.run(typed))
    }

    /// True when every digit acts on the states as a permutation.
    pub fn is_group_automaton(&self) -> bool {
        D::ALL.iter().all(|&d| {
            let mut seen = vec![false; self.state_count()];
            (0..self.state_count()).all(|q| !std::mem::replace(&mut seen[self.step(q, d)], true))
        })
    }
}

/// Renders the machine as a GraphViz digraph.
///
/// Nodes are the state labels; the initial state is drawn bold. Parallel
/// transitions between the same pair of states share one edge whose label
/// lists the digits in alphabet order, e.g. `"-1,0"`.
pub fn to_dot<D: Symbol, O: Symbol>(d: &Dfao<D, O>) -> String {
    let mut out = String::from("digraph dfao {\n  rankdir=LR;\n  node [shape=circle];\n");
    for q in 0..d.state_count() {
        if q == d.initial() {
            let _ = writeln!(out, "  \"{}\" [style=bold, xlabel=\"initial\"];", d.label(q));
        } else {
            let _ = writeln!(out, "  \"{}\";", d.label(q));
        }
    }
    for q in 0..d.state_count() {
        let mut edges: Vec<(usize, Vec<&str>)> = Vec::new();
        for &digit in D::ALL {
            let target = d.step(q, digit);
            match edges.iter_mut().find(|(t, _)| *t == target) {
                Some((_, labels)) => labels.push(digit.label()),
                None => edges.push((target, vec![digit.label()])),
            }
        }
        for (target, labels) in edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                d.label(q),
                d.label(target),
                labels.join(",")
            );
        }
    }
    out.push_str("}\n");
    out
}

/// The permutation attached to digit `digit`: `-1` exchanges -1 and 0,
/// `0` is the identity, `+1` exchanges 0 and +1.
pub fn pi(digit: Balanced, a: Balanced) -> Balanced {
    use Balanced::*;
    match (digit, a) {
        (Minus, Minus) => Zero,
        (Minus, Zero) => Minus,
        (Plus, Zero) => Plus,
        (Plus, Plus) => Zero,
        (_, a) => a,
    }
}

/// States `q-1/-1`, `q0/0`, `q+1/+1` (indices 0, 1, 2), initial `q0/0`; the
/// state `q_a` outputs `a` and digit `d` moves `q_a` to `q_{pi_d(a)}`.
pub fn squarefree_dfao() -> Dfao<Balanced, Balanced> {
    let states = Balanced::ALL
        .iter()
        .map(|&a| (format!("q{}/{}", a.label(), a.label()), a))
        .collect();
    Dfao::new(states, Balanced::Zero.index(), |q, d| {
        pi(d, Balanced::ALL[q]).index()
    })
    .expect("three-state machine is well formed")
}

fn shared_machine() -> &'static Dfao<Balanced, Balanced> {
    static MACHINE: OnceLock<Dfao<Balanced, Balanced>> = OnceLock::new();
    MACHINE.get_or_init(squarefree_dfao)
}

/// `b_i`, in `O(log |i|)`.
pub fn b_at(i: i64) -> Balanced {
    shared_machine().run(encode(i).digits().iter().copied())
}

/// `b_lo ... b_hi` under the default size cap.
pub fn b_range(lo: i64, hi: i64) -> Result<Word<Balanced>> {
    b_range_with(lo, hi, &Limits::default())
}

/// `b_lo ... b_hi`, refusing more than `limits.range_cap()` symbols.
pub fn b_range_with(lo: i64, hi: i64, limits: &Limits) -> Result<Word<Balanced>> {
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let len = (hi as i128 - lo as i128 + 1) as u128;
    let cap = limits.range_cap();
    if len > cap as u128 {
        return Err(Error::RangeTooLarge { len, cap });
    }
    let machine = shared_machine();
    let mut digits = encode(lo).digits().to_vec();
    let mut out = Vec::with_capacity(len as usize);
    for k in 0..len {
        out.push(machine.run(digits.iter().copied()));
        if k + 1 < len {
            increment(&mut digits);
        }
    }
    Ok(Word::new(out))
}

/// `b_i` for `|i| <= (3^n-1)/2`, numbered two-sidedly.
pub fn b_window(n: u32, limits: &Limits) -> Result<TwoSidedWindow<Balanced>> {
    limits.check_depth(n)?;
    let h = half_width(n);
    TwoSidedWindow::centered(b_range_with(-h, h, limits)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{relabel_to_balanced, Bit};
    use crate::morphism::{phi_power, phi_window};
    use proptest::prelude::*;
    use Balanced::{Minus as M, Plus as P, Zero as Z};

    fn state(a: Balanced) -> usize {
        a.index()
    }

    #[test]
    fn squarefree_transitions() {
        let m = squarefree_dfao();
        assert_eq!(m.state_count(), 3);
        assert_eq!(m.label(m.initial()), "q0/0");
        assert_eq!(m.step(state(Z), M), state(M));
        assert_eq!(m.step(state(P), Z), state(P));
        assert_eq!(m.step(state(M), P), state(M));
        for a in Balanced::ALL.iter().copied() {
            assert_eq!(m.output(state(a)), a);
        }
        assert!(m.is_group_automaton());
    }

    #[test]
    fn run_examples() {
        let m = squarefree_dfao();
        assert_eq!(m.run(encode(8).digits().iter().copied()), M);
        assert_eq!(m.run(encode(-17).digits().iter().copied()), M);
        assert_eq!(m.run(std::iter::empty()), Z);
    }

    #[test]
    fn run_values_rejects_foreign_digits() {
        let m = squarefree_dfao();
        assert_eq!(m.run_values(&[-1, 0, 1]).unwrap(), M);
        assert_eq!(
            m.run_values(&[0, 2]).unwrap_err(),
            Error::InvalidDigit {
                digit: 2,
                alphabet: "{-1,0,+1}"
            }
        );
    }

    #[test]
    fn construction_errors() {
        let bad = Dfao::<Bit, Bit>::new(vec![("a".into(), Bit::Zero)], 0, |_, _| 1);
        assert!(matches!(bad, Err(Error::InvalidAutomaton(_))));
        let bad = Dfao::<Bit, Bit>::new(vec![("a".into(), Bit::Zero)], 3, |_, _| 0);
        assert!(matches!(bad, Err(Error::InvalidAutomaton(_))));
        let bad = Dfao::<Bit, Bit>::new(vec![], 0, |_, _| 0);
        assert!(matches!(bad, Err(Error::InvalidAutomaton(_))));
    }

    #[test]
    fn non_permutation_machine_is_not_group() {
        let m = Dfao::<Bit, Bit>::new(
            vec![("a".into(), Bit::Zero), ("b".into(), Bit::One)],
            0,
            |_, d| d.index(),
        )
        .unwrap();
        assert!(!m.is_group_automaton());
    }

    #[test]
    fn b_at_examples() {
        assert_eq!(b_at(8), M);
        assert_eq!(b_at(-17), M);
        assert_eq!(b_at(0), Z);
        // oracle: the depth-3 morphism window at index 5
        let oracle = relabel_to_balanced(phi_window(3).unwrap().word());
        assert_eq!(oracle[13 + 5], P);
        assert_eq!(b_at(5), P);
    }

    #[test]
    fn b_range_examples() {
        assert_eq!(b_range(-1, 1).unwrap().to_spaced(), "-1 0 +1");
        assert_eq!(
            b_range(-4, 4).unwrap(),
            relabel_to_balanced(&"213123132".parse().unwrap())
        );
        assert_eq!(b_range(7, 7).unwrap().as_slice(), &[b_at(7)]);
    }

    #[test]
    fn b_range_errors() {
        assert_eq!(b_range(3, 2).unwrap_err(), Error::InvalidRange { lo: 3, hi: 2 });
        let tight = Limits::with_max_depth(2);
        assert_eq!(
            b_range_with(0, 9, &tight).unwrap_err(),
            Error::RangeTooLarge { len: 10, cap: 9 }
        );
        assert!(b_range_with(0, 8, &tight).is_ok());
        assert!(b_range(i64::MIN, i64::MAX).is_err());
    }

    #[test]
    fn b_range_equals_pointwise() {
        for (lo, hi) in [(-1000, 1000), (i64::MAX - 50, i64::MAX), (i64::MIN, i64::MIN + 50)] {
            let word = b_range(lo, hi).unwrap();
            for (k, &s) in word.iter().enumerate() {
                assert_eq!(s, b_at(lo + k as i64));
            }
        }
    }

    #[test]
    fn dfao_window_equals_relabeled_iterate() {
        let limits = Limits::default();
        for n in 1..=9 {
            let win = b_window(n, &limits).unwrap();
            assert_eq!(win.word(), &relabel_to_balanced(&phi_power(n).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn window_is_antisymmetric() {
        for n in 1..=6 {
            let w = b_window(n, &Limits::default()).unwrap().into_word();
            let mirrored: Word<Balanced> = w.iter().rev().map(|s| -*s).collect();
            assert_eq!(mirrored, w);
        }
    }

    #[test]
    fn dot_structure() {
        let dot = to_dot(&squarefree_dfao());
        let nodes = dot.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("->") && l.trim_start().starts_with("\"q")).count();
        assert_eq!(nodes, 3);
        let edge_lines: Vec<_> = dot.lines().filter(|l| l.contains("->")).collect();
        assert_eq!(edge_lines.len(), 7);
        let digit_entries: usize = edge_lines
            .iter()
            .map(|l| l.split("label=\"").nth(1).unwrap().split('"').next().unwrap().split(',').count())
            .sum();
        assert_eq!(digit_entries, 9);
        assert!(dot.contains("\"q0/0\" -> \"q-1/-1\" [label=\"-1\"];"));
        assert!(dot.contains("\"q+1/+1\" -> \"q+1/+1\" [label=\"-1,0\"];"));
        assert!(dot.contains("\"q-1/-1\" -> \"q-1/-1\" [label=\"0,+1\"];"));
        assert!(dot.contains("\"q0/0\" [style=bold, xlabel=\"initial\"];"));
    }

    #[test]
    fn dot_single_state_has_only_self_loops() {
        let m = Dfao::<Bit, Bit>::new(vec![("s/0".into(), Bit::Zero)], 0, |_, _| 0).unwrap();
        let dot = to_dot(&m);
        let edges: Vec<_> = dot.lines().filter(|l| l.contains("->")).collect();
        assert_eq!(edges, vec!["  \"s/0\" -> \"s/0\" [label=\"0,1\"];"]);
    }

    #[test]
    fn pi_matches_the_state_machine() {
        let m = squarefree_dfao();
        for &d in Balanced::ALL {
            for &a in Balanced::ALL {
                assert_eq!(Balanced::ALL[m.step(a.index(), d)], pi(d, a));
                assert_eq!(pi(d, pi(d, a)), a);
            }
        }
    }

    proptest! {
        #[test]
        fn b_at_is_odd(i in (i64::MIN + 1)..=i64::MAX) {
            prop_assert_eq!(b_at(-i), -b_at(i));
        }

        #[test]
        fn short_ranges_are_pointwise(lo in any::<i32>(), len in 1i64..64) {
            let lo = lo as i64;
            let word = b_range(lo, lo + len - 1).unwrap();
            for (k, &s) in word.iter().enumerate() {
                prop_assert_eq!(s, b_at(lo + k as i64));
            }
        }
    }
}
