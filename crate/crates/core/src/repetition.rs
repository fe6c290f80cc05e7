//! Square detection. A square is a factor `ww` with `w` nonempty.
//!
//! [`find_square_naive`] is the direct double loop and serves as the oracle.
//! [`find_square`] is a Main-Lorentz divide and conquer: squares inside either
//! half are found recursively, squares crossing the split are found in linear
//! time from two Z-arrays, for `O(n log n)` overall.

use std::fmt;

use serde::Serialize;

/// A square of length `2 * half_length` starting at `position`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SquareWitness {
    pub position: usize,
    pub half_length: usize,
}

impl SquareWitness {
    pub fn new(position: usize, half_length: usize) -> Self {
        SquareWitness {
            position,
            half_length,
        }
    }

    /// Total length of the square.
    pub fn len(&self) -> usize {
        2 * self.half_length
    }

    pub fn is_empty(&self) -> bool {
        self.half_length == 0
    }

    /// True when `w[position..position + 2 * half_length]` really is a square.
    pub fn validate<T: PartialEq>(&self, w: &[T]) -> bool {
        let (p, l) = (self.position, self.half_length);
        l >= 1
            && l
                .checked_mul(2)
                .and_then(|len| p.checked_add(len))
                .is_some_and(|end| end <= w.len())
            && w[p..p + l] == w[p + l..p + 2 * l]
    }
}

impl fmt::Display for SquareWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "square at p={} len={}", self.position, self.len())
    }
}

/// First square by smallest position, then smallest half-length.
pub fn find_square_naive<T: PartialEq>(w: &[T]) -> Option<SquareWitness> {
    let n = w.len();
    for p in 0..n {
        for l in 1..=(n - p) / 2 {
            if (0..l).all(|k| w[p + k] == w[p + l + k]) {
                return Some(SquareWitness::new(p, l));
            }
        }
    }
    None
}

/// Any square of `w`, found in `O(n log n)`.
pub fn find_square<T: Eq + Sync>(w: &[T]) -> Option<SquareWitness> {
    search(w, 0)
}

pub fn is_squarefree<T: Eq + Sync>(w: &[T]) -> bool {
    find_square(w).is_none()
}

/// First square with half-length at most `max_half_length`, by smallest
/// position then smallest half-length. Returns `None` for an empty word or a
/// zero bound.
pub fn check_boundary_squares<T: PartialEq>(
    w: &[T],
    max_half_length: usize,
) -> Option<SquareWitness> {
    let n = w.len();
    for p in 0..n {
        for l in 1..=max_half_length.min((n - p) / 2) {
            if w[p..p + l] == w[p + l..p + 2 * l] {
                return Some(SquareWitness::new(p, l));
            }
        }
    }
    None
}

const NAIVE_CUTOFF: usize = 12;
const PARALLEL_CUTOFF: usize = 1 << 14;

fn search<T: Eq + Sync>(s: &[T], offset: usize) -> Option<SquareWitness> {
    let n = s.len();
    if n <= NAIVE_CUTOFF {
        return find_square_naive(s).map(|w| SquareWitness::new(w.position + offset, w.half_length));
    }
    let mid = n / 2;
    let (left, right) = s.split_at(mid);
    let (in_left, in_right) = if n >= PARALLEL_CUTOFF {
        rayon::join(|| search(left, offset), || search(right, offset + mid))
    } else {
        (search(left, offset), search(right, offset + mid))
    };
    in_left
        .or(in_right)
        .or_else(|| crossing(s).map(|w| SquareWitness::new(w.position + offset, w.half_length)))
}

/// A square of `s` that contains both `s[mid - 1]` and `s[mid]`, `mid = n / 2`.
fn crossing<T: Eq>(s: &[T]) -> Option<SquareWitness> {
    let n = s.len();
    let mid = n / 2;
    let forward: Vec<&T> = s.iter().collect();
    if let Some(w) = crossing_left_centered(&forward, mid) {
        return Some(w);
    }
    let reversed: Vec<&T> = s.iter().rev().collect();
    crossing_left_centered(&reversed, n - mid).map(|w| SquareWitness::new(n - w.position - w.len(), w.half_length))
}

/// Squares `s[p..p + 2l]` with `p < mid < p + 2l` whose second half starts at
/// or before `mid`.
///
/// For such a square let `q = mid - l`, which lies in the first half. Then
/// `s[q - j] == s[mid - j]` going left for `j` up to `q - p` and
/// `s[q + j] == s[mid + j]` going right for `j` below `p + l - q`. Conversely a
/// backward match of length `k1` and a forward match of length `k2 >= 1` with
/// `k1 + k2 >= l` yield the square starting at `q - max(0, l - k2)`.
fn crossing_left_centered<T: Eq>(s: &[T], mid: usize) -> Option<SquareWitness> {
    let (u, v) = s.split_at(mid);
    if u.is_empty() || v.is_empty() {
        return None;
    }
    let u_rev: Vec<&T> = u.iter().rev().collect();
    let backward = z_function(&u_rev);
    let forward = match_lengths(v, u);
    for l in 1..=mid {
        let q = mid - l;
        let k1 = backward.get(l).copied().unwrap_or(0);
        let k2 = forward[q];
        if k2 >= 1 && k1 + k2 >= l {
            return Some(SquareWitness::new(q - l.saturating_sub(k2), l));
        }
    }
    None
}

/// `z[i]` is the length of the longest common prefix of `s` and `s[i..]`.
pub(crate) fn z_function<T: Eq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        let mut k = if i < r { z[i - l].min(r - i) } else { 0 };
        while i + k < n && s[k] == s[i + k] {
            k += 1;
        }
        if i + k > r {
            l = i;
            r = i + k;
        }
        z[i] = k;
    }
    z
}

/// `m[i]` is the length of the longest common prefix of `pattern` and
/// `text[i..]`.
pub(crate) fn match_lengths<T: Eq>(pattern: &[T], text: &[T]) -> Vec<usize> {
    let z = z_function(pattern);
    let (pm, tn) = (pattern.len(), text.len());
    let mut m = vec![0; tn];
    let (mut l, mut r) = (0, 0);
    for i in 0..tn {
        let mut k = if i < r { z[i - l].min(r - i) } else { 0 };
        if i >= r || k == r - i {
            while k < pm && i + k < tn && pattern[k] == text[i + k] {
                k += 1;
            }
            if i + k > r {
                l = i;
                r = i + k;
            }
        }
        m[i] = k;
    }
    m
}
