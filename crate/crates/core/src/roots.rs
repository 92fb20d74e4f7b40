//! Affine D_n root data: simple roots, the null root, the extended root set,
//! simple reflections, and bounded Weyl-orbit search.
//!
//! A root is an integer vector over the simple roots a_0..a_n of the affine
//! diagram with nodes 0 and 1 attached to node 2 and nodes n-1 and n attached
//! to node n-2. Membership tests go through the finite-weight picture: writing
//! a vector as (finite part in e-coordinates, delta multiplicity) makes the
//! extended set a finite menu of finite parts.

use std::collections::{BTreeSet, VecDeque};

pub type RootVector = Vec<i64>;

/// Edges of the affine diagram for n >= 4; nodes 0..=n.
fn edges(n: usize) -> Vec<(usize, usize)> {
    assert!(n >= 4, "affine D root data needs n >= 4");
    let mut e = vec![(0, 2), (1, 2)];
    for j in 2..n - 2 {
        e.push((j, j + 1));
    }
    e.push((n - 2, n - 1));
    e.push((n - 2, n));
    e
}

/// The even Cartan matrix (the Cartan matrix of the affine diagram).
pub fn cartan_even(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n + 1]; n + 1];
    for i in 0..=n {
        a[i][i] = 2;
    }
    for (i, j) in edges(n) {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    a
}

/// The odd-level Cartan rows, defined for 1 <= i <= n-1: rows agree with the
/// even matrix except at the fork rows i = 1 and i = n-1, where the partner
/// fork node contributes +2 instead of 0.
pub fn cartan_odd(n: usize) -> Vec<Vec<i64>> {
    let even = cartan_even(n);
    let mut a = vec![vec![0i64; n + 1]; n + 1];
    for (i, row) in a.iter_mut().enumerate() {
        if i == 0 || i == n {
            continue;
        }
        row.copy_from_slice(&even[i]);
        if i == 1 {
            row[0] = 2;
        }
        if i == n - 1 {
            row[n] = 2;
        }
    }
    a
}

/// The null root: (1, 1, 2, ..., 2, 1, 1); fixed by every simple reflection.
pub fn delta(n: usize) -> RootVector {
    let mut d = vec![2i64; n + 1];
    d[0] = 1;
    d[1] = 1;
    d[n - 1] = 1;
    d[n] = 1;
    d
}

/// Simple reflection s_i acting through the even Cartan matrix.
pub fn reflect(i: usize, beta: &RootVector, cartan: &[Vec<i64>]) -> RootVector {
    let pair: i64 = (0..beta.len()).map(|j| cartan[i][j] * beta[j]).sum();
    let mut out = beta.clone();
    out[i] -= pair;
    out
}

pub fn simple_root(i: usize, n: usize) -> RootVector {
    let mut v = vec![0i64; n + 1];
    v[i] = 1;
    v
}

pub fn add(a: &RootVector, b: &RootVector) -> RootVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn negate(a: &RootVector) -> RootVector {
    a.iter().map(|x| -x).collect()
}

pub fn scale(a: &RootVector, c: i64) -> RootVector {
    a.iter().map(|x| c * x).collect()
}

/// Finite-weight decomposition: beta = (finite part in e-coordinates, m) with
/// m the a_0 coefficient, using a_0 -> delta - e_1 - e_2, a_i -> e_i - e_{i+1}
/// for 1 <= i <= n-1 and a_n -> e_{n-1} + e_n.
pub fn finite_decomposition(beta: &RootVector, n: usize) -> (Vec<i64>, i64) {
    let mut e = vec![0i64; n];
    let m = beta[0];
    e[0] -= m;
    e[1] -= m;
    for i in 1..n {
        e[i - 1] += beta[i];
        e[i] -= beta[i];
    }
    e[n - 2] += beta[n];
    e[n - 1] += beta[n];
    (e, m)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum FiniteKind {
    Zero,
    DnRoot,
    Doubled,
    Other,
}

fn classify_finite(e: &[i64]) -> FiniteKind {
    let nz: Vec<(usize, i64)> = e
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != 0)
        .map(|(i, v)| (i, *v))
        .collect();
    match nz.len() {
        0 => FiniteKind::Zero,
        1 => {
            if nz[0].1.abs() == 2 {
                FiniteKind::Doubled
            } else {
                FiniteKind::Other
            }
        }
        2 => {
            if nz[0].1.abs() == 1 && nz[1].1.abs() == 1 {
                FiniteKind::DnRoot
            } else {
                FiniteKind::Other
            }
        }
        _ => FiniteKind::Other,
    }
}

/// Membership in the extended root set: affine roots (real +-e_i +- e_j + m
/// delta and imaginary m delta with m != 0) together with the doubled
/// families +-2 e_i + m delta.
pub fn in_delta_ex(beta: &RootVector, n: usize) -> bool {
    let (e, _m) = finite_decomposition(beta, n);
    match classify_finite(&e) {
        FiniteKind::DnRoot | FiniteKind::Doubled => true,
        FiniteKind::Zero => beta.iter().any(|&c| c != 0),
        FiniteKind::Other => false,
    }
}

/// All extended roots whose a_0 coefficient lies in [-s_bound, s_bound],
/// by direct enumeration of the finite menu.
pub fn delta_ex_window(n: usize, s_bound: i64) -> BTreeSet<RootVector> {
    let d = delta(n);
    let mut finite_parts: Vec<Vec<i64>> = Vec::new();
    // +- e_i +- e_j, i < j
    for i in 0..n {
        for j in (i + 1)..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut e = vec![0i64; n];
                e[i] = si;
                e[j] = sj;
                finite_parts.push(e);
            }
        }
    }
    // +- 2 e_i
    for i in 0..n {
        for s in [2i64, -2] {
            let mut e = vec![0i64; n];
            e[i] = s;
            finite_parts.push(e);
        }
    }
    let mut out = BTreeSet::new();
    // real / doubled families: beta = lift(e) + m delta, with a_0 coeff = m
    for e in &finite_parts {
        if let Some(base) = lift_finite(e, n) {
            for m in -s_bound..=s_bound {
                let mut beta = add(&base, &scale(&d, m));
                // base has a_0 coefficient 0, so the window is exactly m
                out.insert(std::mem::take(&mut beta));
            }
        }
    }
    // imaginary m delta, m != 0
    for m in -s_bound..=s_bound {
        if m != 0 {
            out.insert(scale(&d, m));
        }
    }
    out
}

/// The window without the imaginary multiples of the null root. Those are
/// fixed by every reflection, so this is the part an orbit search can reach.
pub fn delta_ex_window_real(n: usize, s_bound: i64) -> BTreeSet<RootVector> {
    delta_ex_window(n, s_bound)
        .into_iter()
        .filter(|b| {
            let (e, _) = finite_decomposition(b, n);
            e.iter().any(|&x| x != 0)
        })
        .collect()
}

/// Express a finite integer e-vector in the basis a_1..a_n, a_0 = 0 slot;
/// returns None when the coordinates are not integral (odd total sum).
fn lift_finite(e: &[i64], n: usize) -> Option<RootVector> {
    // solve c_1..c_n with e = sum c_i finite(a_i):
    // partial sums: finite(a_i) = e_i - e_{i+1} (i < n), finite(a_n) = e_{n-1} + e_n
    // c_i - prefix structure: let t_k = e_1 + ... + e_k.
    // For D_n: c_i (i <= n-2) = t_i; c_{n-1} = (t_{n-1} - e_n ... ) standard:
    // c_{n-1} = (t_{n-2} + e_{n-1} - e_n)/2, c_n = (t_{n-2} + e_{n-1} + e_n)/2
    let mut t = vec![0i64; n + 1];
    for k in 1..=n {
        t[k] = t[k - 1] + e[k - 1];
    }
    let mut c = vec![0i64; n + 1];
    for i in 1..=n.saturating_sub(2) {
        c[i] = t[i];
    }
    let x = t[n - 2] + e[n - 2] - e[n - 1];
    let y = t[n - 2] + e[n - 2] + e[n - 1];
    if x % 2 != 0 || y % 2 != 0 {
        return None;
    }
    c[n - 1] = x / 2;
    c[n] = y / 2;
    Some(c)
}

/// BFS closure of the seed set under all simple reflections, explored inside
/// a slightly padded window and intersected with the requested one at the
/// end so boundary members reachable only from outside are still found.
pub fn orbit_generate(seeds: &[RootVector], s_bound: i64, n: usize) -> BTreeSet<RootVector> {
    let cartan = cartan_even(n);
    let pad = s_bound + 3;
    let mut seen: BTreeSet<RootVector> = BTreeSet::new();
    let mut queue: VecDeque<RootVector> = VecDeque::new();
    for s in seeds {
        if seen.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..=n {
            let r = reflect(i, &b, &cartan);
            if r[0].abs() <= pad && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    seen.into_iter().filter(|b| b[0].abs() <= s_bound).collect()
}

/// The seed set of the orbit lemma: simple roots plus
/// +-(a_{n-1} - a_n) and +-(a_0 - a_1).
pub fn lemma_seeds(n: usize) -> Vec<RootVector> {
    let mut seeds: Vec<RootVector> = (0..=n).map(|j| simple_root(j, n)).collect();
    let fork_hi = add(&simple_root(n - 1, n), &negate(&simple_root(n, n)));
    let fork_lo = add(&simple_root(0, n), &negate(&simple_root(1, n)));
    seeds.push(fork_hi.clone());
    seeds.push(negate(&fork_hi));
    seeds.push(fork_lo.clone());
    seeds.push(negate(&fork_lo));
    seeds
}
