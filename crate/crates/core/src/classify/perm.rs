//! Small permutation-group utilities: orbits, closure enumeration, and
//! group order. The groups arising from Levi graphs at desk scale are tiny
//! (a few hundred elements, occasionally a few hundred thousand for
//! disconnected unions), so plain breadth-first closure is the right tool.

use std::collections::HashSet;

use crate::tree::UnionFind;

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    // (f . g)(x) = f(g(x))
    g.iter().map(|&x| f[x]).collect()
}

pub fn invert(f: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; f.len()];
    for (x, &fx) in f.iter().enumerate() {
        inv[fx] = x;
    }
    inv
}

/// Orbit partition of `0..n` under the group generated by `gens`,
/// as sorted orbits ordered by smallest element.
pub fn orbits(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    for g in gens {
        for x in 0..n {
            uf.union(x, g[x]);
        }
    }
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n {
        let r = uf.find(x);
        buckets[r].push(x);
    }
    let mut out: Vec<Vec<usize>> = buckets.into_iter().filter(|b| !b.is_empty()).collect();
    out.sort_by_key(|b| b[0]);
    out
}

/// Orbit partition of an arbitrary finite point set under an action given as
/// a function `act(gen_index, point) -> point`.
pub fn orbits_by<F>(count: usize, gen_count: usize, act: F) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> usize,
{
    let mut uf = UnionFind::new(count);
    for gi in 0..gen_count {
        for x in 0..count {
            uf.union(x, act(gi, x));
        }
    }
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); count];
    for x in 0..count {
        let r = uf.find(x);
        buckets[r].push(x);
    }
    let mut out: Vec<Vec<usize>> = buckets.into_iter().filter(|b| !b.is_empty()).collect();
    out.sort_by_key(|b| b[0]);
    out
}

/// All elements of the generated group, or `None` if more than `cap`
/// elements are reached.
pub fn enumerate_group(n: usize, gens: &[Vec<usize>], cap: usize) -> Option<Vec<Vec<usize>>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier = vec![identity(n)];
    seen.insert(identity(n));
    let mut out = vec![identity(n)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = compose(g, &p);
            if !seen.contains(&q) {
                if seen.len() >= cap {
                    return None;
                }
                seen.insert(q.clone());
                out.push(q.clone());
                frontier.push(q);
            }
        }
    }
    out.sort_unstable();
    Some(out)
}

/// Order of the generated group (closure size). Panics past `10^7` elements,
/// far beyond anything a valid Levi graph produces here.
pub fn group_order(n: usize, gens: &[Vec<usize>]) -> u128 {
    enumerate_group(n, gens, 10_000_000)
        .expect("automorphism group unexpectedly large")
        .len() as u128
}
