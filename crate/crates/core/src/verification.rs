//! Empirical checks of the construction's properties over a finite range of
//! depths, collected into a report with one JSON line per check.
//!
//! Results hold only for the depths actually tested; each record carries its
//! bound in `params`. A fault-injection switch corrupts one symbol of every
//! morphism iterate fed to the two theorem checks, as a negative control.

use std::fmt;
use std::io::{self, Write};
use std::path::Path;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::alphabet::{relabel_to_balanced, Balanced, Symbol, Ternary, Word};
use crate::balanced_ternary::{decode, encode};
use crate::dfao::b_window;
use crate::error::Result;
use crate::limits::{half_width, Limits};
use crate::morphism::{center_extract, first_non_permutation_block, phi, phi_power_with, phi_window_with};
use crate::reference_sequences::{binary_digits, derive_v, thue_morse_dfao, thue_morse_direct, thue_morse_psi_with};
use crate::repetition::{check_boundary_squares, find_square, find_square_naive, SquareWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Nothing was in range to test.
    Vacuous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
        })
    }
}

/// One line of the report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub params: Value,
    pub status: Status,
    /// Counterexample for failures, `null` otherwise.
    pub witness: Value,
    pub detail: String,
    /// Exploratory checks are reported but never fail the run.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub exploratory: bool,
    pub ms: f64,
}

impl CheckRecord {
    fn fails_run(&self) -> bool {
        self.status == Status::Fail && !self.exploratory
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub vacuous: usize,
    pub exploratory: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn from_checks(checks: Vec<CheckRecord>) -> Self {
        let mut summary = Summary {
            total: checks.len(),
            ..Summary::default()
        };
        for c in &checks {
            if c.exploratory {
                summary.exploratory += 1;
            }
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Vacuous => summary.vacuous += 1,
            }
        }
        VerificationReport { checks, summary }
    }

    /// True when no non-exploratory check failed.
    pub fn all_passed(&self) -> bool {
        !self.checks.iter().any(CheckRecord::fails_run)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.fails_run())
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn write_jsonl<W: Write>(&self, mut sink: W) -> io::Result<()> {
        sink.write_all(self.to_jsonl().as_bytes())?;
        sink.flush()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> io::Result<()> {
        self.write_jsonl(io::BufWriter::new(std::fs::File::create(path)?))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.exploratory { " (exploratory)" } else { "" };
            writeln!(f, "[{}] {} {}{} {:.1} ms", c.status, c.name, c.params, tag, c.ms)?;
            if c.status == Status::Fail {
                writeln!(f, "       witness: {}", c.witness)?;
            }
        }
        write!(f, "{}", self.summary)
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} checks: {} passed, {} failed, {} vacuous ({} exploratory)",
            self.total, self.passed, self.failed, self.vacuous, self.exploratory
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    /// Deepest iterate for the theorem sweeps.
    pub n_max: u32,
    /// Deepest iterate for the per-depth lemma checks.
    pub lemma_n_max: u32,
    /// The naive square oracle only runs up to this depth.
    pub oracle_n_max: u32,
    pub seed: u64,
    /// Random words of length at most 64 compared between detectors; a tenth
    /// as many of length at most 512 are added.
    pub random_words: usize,
    /// Codec round trip runs exhaustively for `|i|` up to this bound.
    pub codec_exhaustive: i64,
    pub codec_samples: usize,
    /// Thue-Morse depth for the definition-equivalence checks.
    pub thue_morse_n: u32,
    /// Thue-Morse depth of the prefix the word `v` is derived from.
    pub v_depth: u32,
    pub fault_inject: bool,
    /// Seed symbol of the morphism iterates. Anything but `Two` is exploratory.
    pub start_symbol: Ternary,
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 9,
            lemma_n_max: 9,
            oracle_n_max: 6,
            seed: 0x5eed,
            random_words: 10_000,
            codec_exhaustive: 100_000,
            codec_samples: 100_000,
            thue_morse_n: 16,
            v_depth: 14,
            fault_inject: false,
            start_symbol: Ternary::Two,
            limits: Limits::default(),
        }
    }
}

impl VerifyConfig {
    /// Depth 1 everywhere and small sample counts.
    pub fn minimal() -> Self {
        VerifyConfig {
            n_max: 1,
            lemma_n_max: 1,
            oracle_n_max: 1,
            random_words: 100,
            codec_exhaustive: 1_000,
            codec_samples: 1_000,
            thue_morse_n: 6,
            v_depth: 6,
            ..VerifyConfig::default()
        }
    }

    /// Same config with every depth set to `n_max`, oracle capped at 6.
    pub fn with_n_max(n_max: u32) -> Self {
        VerifyConfig {
            n_max,
            lemma_n_max: n_max,
            oracle_n_max: n_max.min(6),
            ..VerifyConfig::default()
        }
    }
}

const PHI_LISTINGS: [&str; 3] = ["123", "213123132", "123213231213123132312132123"];

struct Outcome {
    status: Status,
    witness: Value,
    detail: String,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Outcome {
            status: Status::Pass,
            witness: Value::Null,
            detail: detail.into(),
        }
    }

    fn fail(witness: Value, detail: impl Into<String>) -> Self {
        Outcome {
            status: Status::Fail,
            witness,
            detail: detail.into(),
        }
    }

    fn vacuous(detail: impl Into<String>) -> Self {
        Outcome {
            status: Status::Vacuous,
            witness: Value::Null,
            detail: detail.into(),
        }
    }

    fn from_result(r: Result<Outcome>) -> Self {
        r.unwrap_or_else(|e| Outcome::fail(json!({ "error": e.to_string() }), "check could not run"))
    }
}

fn timed(name: &str, params: Value, body: impl FnOnce() -> Outcome) -> CheckRecord {
    let start = Instant::now();
    let outcome = body();
    let ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    CheckRecord {
        name: name.to_string(),
        params,
        status: outcome.status,
        witness: outcome.witness,
        detail: outcome.detail,
        exploratory: false,
        ms,
    }
}

fn square_json<S: Symbol>(n: u32, w: &[S], sq: SquareWitness) -> Value {
    let factor: Word<S> = w[sq.position..sq.position + sq.len()].iter().copied().collect();
    json!({
        "n": n,
        "position": sq.position,
        "half_length": sq.half_length,
        "factor": factor.to_string(),
    })
}

/// Runs individual checks against one configuration.
#[derive(Debug, Clone, Default)]
pub struct Verifier {
    config: VerifyConfig,
}

impl Verifier {
    pub fn new(config: VerifyConfig) -> Self {
        Verifier { config }
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.config
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.config.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn start_label(&self) -> &'static str {
        self.config.start_symbol.label()
    }

    /// Iterate fed to the theorem checks; corrupted when fault injection is on.
    pub fn theorem_word(&self, n: u32) -> Result<Word<Ternary>> {
        let word = phi_power_with(self.config.start_symbol, n, &self.config.limits)?;
        if !self.config.fault_inject || word.len() < 3 {
            return Ok(word);
        }
        let mut symbols = word.into_vec();
        let c = symbols.len() / 2;
        symbols[c + 1] = symbols[c];
        Ok(Word::new(symbols))
    }

    fn clean_word(&self, n: u32) -> Result<Word<Ternary>> {
        phi_power_with(self.config.start_symbol, n, &self.config.limits)
    }

    pub fn phi_fixtures(&self) -> CheckRecord {
        let upto = self.config.n_max.min(3);
        timed("phi_fixtures", json!({ "n_max": upto }), || {
            if upto == 0 {
                return Outcome::vacuous("no depth in range");
            }
            Outcome::from_result((|| {
                for n in 1..=upto {
                    let got = phi_power_with(Ternary::Two, n, &self.config.limits)?.to_string();
                    let want = PHI_LISTINGS[n as usize - 1];
                    if got != want {
                        return Ok(Outcome::fail(json!({ "n": n, "got": got, "want": want }), "listing mismatch"));
                    }
                }
                Ok(Outcome::pass(format!("phi^n(2) matches the listings for 1 <= n <= {upto}")))
            })())
        })
    }

    /// `phi^n(seed)` is square-free for every `1 <= n <= n_max`; the naive
    /// oracle concurs up to `oracle_n_max`.
    pub fn theorem1(&self, n_max: u32) -> CheckRecord {
        let oracle = self.config.oracle_n_max.min(n_max);
        let params = json!({ "n_max": n_max, "oracle_n_max": oracle, "start": self.start_label() });
        timed("theorem1_squarefree", params, || {
            if n_max == 0 {
                return Outcome::vacuous("n_max = 0: no depth tested");
            }
            Outcome::from_result((|| {
                for n in 1..=n_max {
                    let w = self.theorem_word(n)?;
                    let fast = find_square(&w);
                    if n <= oracle {
                        let slow = find_square_naive(&w);
                        if fast.is_some() != slow.is_some() {
                            return Ok(Outcome::fail(
                                json!({ "n": n, "efficient": fast, "naive": slow }),
                                "detectors disagree",
                            ));
                        }
                    }
                    if let Some(sq) = fast {
                        return Ok(Outcome::fail(square_json(n, &w, sq), format!("square in phi^{n}")));
                    }
                }
                Ok(Outcome::pass(format!(
                    "square-free for 1 <= n <= {n_max} only; larger n not tested"
                )))
            })())
        })
    }

    /// Every aligned 3-block of `phi^n` is a permutation of 123.
    pub fn lemma1(&self, n: u32) -> CheckRecord {
        timed("lemma1_blocks", json!({ "n": n, "start": self.start_label() }), || {
            if n == 0 {
                return Outcome::vacuous("n = 0 has no 3-blocks");
            }
            Outcome::from_result(self.clean_word(n).map(|w| match first_non_permutation_block(&w) {
                None => Outcome::pass(format!("{} blocks checked", w.len() / 3)),
                Some(k) => Outcome::fail(
                    json!({ "n": n, "block": k, "symbols": w[3 * k..(3 * k + 3).min(w.len())].iter().map(|s| s.value()).collect::<Vec<_>>() }),
                    "block is not a permutation",
                ),
            }))
        })
    }

    /// Center extraction of `phi^n` gives back `phi^(n-1)`.
    pub fn lemma2(&self, n: u32) -> CheckRecord {
        timed("lemma2_center_extract", json!({ "n": n, "start": self.start_label() }), || {
            if n == 0 {
                return Outcome::vacuous("n = 0 has no predecessor");
            }
            Outcome::from_result((|| {
                let extracted = center_extract(&self.clean_word(n)?)?;
                let previous = self.clean_word(n - 1)?;
                Ok(match extracted.iter().zip(previous.iter()).position(|(a, b)| a != b) {
                    None if extracted.len() == previous.len() => {
                        Outcome::pass(format!("{} symbols equal", previous.len()))
                    }
                    None => Outcome::fail(
                        json!({ "n": n, "extracted_len": extracted.len(), "previous_len": previous.len() }),
                        "length mismatch",
                    ),
                    Some(k) => Outcome::fail(
                        json!({ "n": n, "position": k, "extracted": extracted[k].value(), "previous": previous[k].value() }),
                        "symbol mismatch",
                    ),
                })
            })())
        })
    }

    /// The automaton window `b_{-h..h}`, `h = (3^n-1)/2`, equals the relabeled
    /// iterate for every `1 <= n <= n_max`.
    pub fn theorem2(&self, n_max: u32) -> CheckRecord {
        timed("theorem2_dfao_equals_morphism", json!({ "n_max": n_max, "start": self.start_label() }), || {
            if n_max == 0 {
                return Outcome::vacuous("n_max = 0: no depth tested");
            }
            Outcome::from_result((|| {
                let mut indices = 0u64;
                for n in 1..=n_max {
                    let automaton = b_window(n, &self.config.limits)?;
                    let morphism = relabel_to_balanced(&self.theorem_word(n)?);
                    if let Some((i, b)) = automaton
                        .indexed()
                        .find(|&(i, b)| morphism[(i + half_width(n)) as usize] != b)
                    {
                        let m = morphism[(i + half_width(n)) as usize];
                        return Ok(Outcome::fail(
                            json!({ "n": n, "index": i, "digits": encode(i).to_string(), "dfao": b.label(), "morphism": m.label() }),
                            format!("windows differ at index {i}"),
                        ));
                    }
                    indices += automaton.word().len() as u64;
                }
                Ok(Outcome::pass(format!("{indices} indices compared for 1 <= n <= {n_max}")))
            })())
        })
    }

    /// Start and end of each iterate, and no square of length 2 or 4.
    pub fn boundary_forms(&self, n_max: u32) -> CheckRecord {
        timed("boundary_forms", json!({ "n_max": n_max, "start": self.start_label() }), || {
            if n_max == 0 {
                return Outcome::vacuous("n_max = 0");
            }
            Outcome::from_result((|| {
                for n in 1..=n_max {
                    let w = self.clean_word(n)?;
                    let text = w.to_string();
                    let (head, tail) = if n % 2 == 1 { ("123", "123") } else { ("213", "132") };
                    if !text.starts_with(head) || !text.ends_with(tail) {
                        return Ok(Outcome::fail(
                            json!({ "n": n, "head": &text[..3], "tail": &text[text.len() - 3..] }),
                            "unexpected boundary form",
                        ));
                    }
                    if let Some(sq) = check_boundary_squares(&w, 2) {
                        return Ok(Outcome::fail(square_json(n, &w, sq), "short square"));
                    }
                }
                Ok(Outcome::pass("boundary forms hold and no square of length 2 or 4"))
            })())
        })
    }

    /// The depth-`n` window agrees with depth `n+1` on shared indices.
    pub fn window_nesting(&self, n_max: u32) -> CheckRecord {
        timed("window_nesting", json!({ "n_max": n_max }), || {
            if n_max == 0 {
                return Outcome::vacuous("n_max = 0");
            }
            Outcome::from_result((|| {
                let mut inner = phi_window_with(0, &self.config.limits)?;
                for n in 1..=n_max {
                    let outer = phi_window_with(n, &self.config.limits)?;
                    for i in inner.lo()..=inner.hi() {
                        if inner.at(i)? != outer.at(i)? {
                            return Ok(Outcome::fail(json!({ "n": n - 1, "index": i }), "windows do not nest"));
                        }
                    }
                    inner = outer;
                }
                Ok(Outcome::pass(format!("nested for 0 <= n < {n_max}")))
            })())
        })
    }

    /// `f(phi(w)) = phi(f(w))` on random words of length divisible by 3.
    pub fn commutation(&self) -> CheckRecord {
        let samples = (self.config.random_words / 10).max(10);
        timed("center_extract_commutes_with_phi", json!({ "samples": samples, "seed": self.config.seed }), || {
            let mut rng = self.rng(1);
            for _ in 0..samples {
                let len = 3 * rng.gen_range(0..=40);
                let w: Word<Ternary> = (0..len).map(|_| Ternary::ALL[rng.gen_range(0..3)]).collect();
                let lhs = center_extract(&phi(&w)).expect("3 | len");
                let rhs = phi(&center_extract(&w).expect("3 | len"));
                if lhs != rhs {
                    return Outcome::fail(json!({ "word": w.to_string() }), "f and phi do not commute");
                }
            }
            Outcome::pass(format!("{samples} random words"))
        })
    }

    /// `decode(encode(i)) = i`, exhaustively and on random samples, with no
    /// two integers sharing digits in the exhaustive range.
    pub fn codec(&self) -> CheckRecord {
        let bound = self.config.codec_exhaustive;
        let samples = self.config.codec_samples;
        timed("balanced_ternary_codec", json!({ "exhaustive_bound": bound, "samples": samples, "seed": self.config.seed }), || {
            let mut seen = std::collections::HashSet::with_capacity(2 * bound as usize + 1);
            for i in -bound..=bound {
                let d = encode(i);
                if decode(&d) != Ok(i) {
                    return Outcome::fail(json!({ "i": i, "digits": d.to_string() }), "round trip failed");
                }
                if !seen.insert(d.to_string()) {
                    return Outcome::fail(json!({ "i": i, "digits": d.to_string() }), "digits not unique");
                }
            }
            let mut rng = self.rng(2);
            for _ in 0..samples {
                let i: i64 = rng.gen();
                if decode(&encode(i)) != Ok(i) {
                    return Outcome::fail(json!({ "i": i }), "round trip failed");
                }
            }
            Outcome::pass(format!("{} exhaustive and {samples} random integers", 2 * bound + 1))
        })
    }

    pub fn thue_morse(&self) -> CheckRecord {
        let n = self.config.thue_morse_n;
        timed("thue_morse_definitions", json!({ "n": n }), || {
            Outcome::from_result((|| {
                let t = thue_morse_psi_with(n, &self.config.limits)?;
                let machine = thue_morse_dfao();
                for (i, &b) in t.iter().enumerate() {
                    let i = i as u64;
                    if b != thue_morse_direct(i) {
                        return Ok(Outcome::fail(json!({ "i": i }), "doubling and digit sum differ"));
                    }
                    if machine.run(binary_digits(i)) != b {
                        return Ok(Outcome::fail(json!({ "i": i }), "automaton differs"));
                    }
                }
                let shorter = thue_morse_psi_with(n.saturating_sub(1), &self.config.limits)?;
                if !t.starts_with(&shorter) {
                    return Ok(Outcome::fail(json!({ "n": n }), "psi^(n-1)(0) is not a prefix of psi^n(0)"));
                }
                Ok(Outcome::pass(format!("{} indices agree", t.len())))
            })())
        })
    }

    pub fn v_sequence(&self) -> CheckRecord {
        let depth = self.config.v_depth;
        timed("v_squarefree", json!({ "thue_morse_depth": depth }), || {
            Outcome::from_result((|| {
                let v = derive_v(&thue_morse_psi_with(depth, &self.config.limits)?)?;
                let text = v.to_string();
                let expected = "21020121012";
                if !text.starts_with(&expected[..expected.len().min(text.len())]) {
                    return Ok(Outcome::fail(json!({ "prefix": &text[..text.len().min(11)] }), "unexpected prefix"));
                }
                if let Some(sq) = find_square(&v) {
                    return Ok(Outcome::fail(square_json(depth, &v, sq), "square in v"));
                }
                Ok(Outcome::pass(format!("{} symbols of v square-free", v.len())))
            })())
        })
    }

    /// Efficient detector against the naive oracle on random words.
    pub fn detector_agreement(&self) -> CheckRecord {
        let short = self.config.random_words;
        let long = short / 10;
        timed("detector_agreement", json!({ "short_words": short, "long_words": long, "seed": self.config.seed }), || {
            let mut rng = self.rng(3);
            let batches = [(short, 64usize), (long, 512usize)];
            for (count, max_len) in batches {
                for _ in 0..count {
                    let len = rng.gen_range(0..=max_len);
                    let w: Vec<u8> = (0..len).map(|_| rng.gen_range(1..=3)).collect();
                    let fast = find_square(&w);
                    let slow = find_square_naive(&w);
                    let valid = fast.is_none_or(|f| f.validate(&w)) && slow.is_none_or(|s| s.validate(&w));
                    if fast.is_some() != slow.is_some() || !valid {
                        let word: String = w.iter().map(|d| char::from(b'0' + d)).collect();
                        return Outcome::fail(json!({ "word": word, "efficient": fast, "naive": slow }), "detectors disagree");
                    }
                }
            }
            Outcome::pass(format!("{} random words agree", short + long))
        })
    }

    /// Whether `b_{-i} = -b_i` on the depth-`n` windows. Not a gating check.
    pub fn antisymmetry(&self, n_max: u32) -> CheckRecord {
        let mut record = timed("exploratory_antisymmetry", json!({ "n_max": n_max }), || {
            if n_max == 0 {
                return Outcome::vacuous("n_max = 0");
            }
            Outcome::from_result((|| {
                for n in 1..=n_max {
                    let w = b_window(n, &self.config.limits)?.into_word();
                    let mirrored: Word<Balanced> = w.iter().rev().map(|s| -*s).collect();
                    if let Some(k) = w.iter().zip(mirrored.iter()).position(|(a, b)| a != b) {
                        return Ok(Outcome::fail(json!({ "n": n, "index": k as i64 - half_width(n) }), "not antisymmetric"));
                    }
                }
                Ok(Outcome::pass(format!("reversed and negated window equals itself for 1 <= n <= {n_max}")))
            })())
        });
        record.exploratory = true;
        record
    }

    /// Every check, run concurrently; order of records is fixed.
    pub fn run_all(&self) -> VerificationReport {
        let c = &self.config;
        type Job<'a> = Box<dyn Fn() -> CheckRecord + Send + Sync + 'a>;
        let mut jobs: Vec<Job<'_>> = vec![
            Box::new(|| self.phi_fixtures()),
            Box::new(|| self.theorem1(c.n_max)),
        ];
        for n in 1..=c.lemma_n_max {
            jobs.push(Box::new(move || self.lemma1(n)));
        }
        for n in 1..=c.lemma_n_max {
            jobs.push(Box::new(move || self.lemma2(n)));
        }
        jobs.push(Box::new(|| self.theorem2(c.n_max)));
        jobs.push(Box::new(|| self.boundary_forms(c.n_max)));
        jobs.push(Box::new(|| self.window_nesting(c.n_max)));
        jobs.push(Box::new(|| self.commutation()));
        jobs.push(Box::new(|| self.codec()));
        jobs.push(Box::new(|| self.thue_morse()));
        jobs.push(Box::new(|| self.v_sequence()));
        jobs.push(Box::new(|| self.detector_agreement()));
        jobs.push(Box::new(|| self.antisymmetry(c.n_max.min(6))));
        VerificationReport::from_checks(jobs.par_iter().map(|job| job()).collect())
    }
}

pub fn verify_theorem1(n_max: u32) -> CheckRecord {
    Verifier::default().theorem1(n_max)
}

pub fn verify_lemma1(n: u32) -> CheckRecord {
    Verifier::default().lemma1(n)
}

pub fn verify_lemma2(n: u32) -> CheckRecord {
    Verifier::default().lemma2(n)
}

pub fn verify_theorem2(n_max: u32) -> CheckRecord {
    Verifier::default().theorem2(n_max)
}

pub fn verify_all(config: VerifyConfig) -> VerificationReport {
    Verifier::new(config).run_all()
}
