//! The census table: per order v, the number of configurations (a), the
//! self-dual (b), self-polar (c), point-transitive (d), cyclic (e),
//! flag-transitive (f), and weakly flag-transitive (g) ones, the number of
//! connected blocking-set-free configurations (h), and the number of
//! disconnected configurations (i). Disconnected configurations — unions of
//! smaller ones, first possible at v = 14 — count toward a through g; only
//! column h is restricted to connected ones, and i reports how many of the
//! a classes are disconnected.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify;
use crate::enumerate::generate_configs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub v: usize,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub e: u64,
    pub f: u64,
    pub g: u64,
    pub h: u64,
    pub i: u64,
    /// False when a generation budget cut the row short.
    pub complete: bool,
}

impl TableRow {
    pub fn counts(&self) -> [u64; 9] {
        [
            self.a, self.b, self.c, self.d, self.e, self.f, self.g, self.h, self.i,
        ]
    }
}

/// Multiset coefficient C(a + m - 1, m): the number of multisets of size m
/// drawn from a classes.
fn multiset_coeff(a: u64, m: u64) -> u64 {
    let mut num = 1u128;
    let mut den = 1u128;
    for t in 0..m {
        num *= (a + m - 1 - t) as u128;
        den *= (t + 1) as u128;
    }
    (num / den) as u64
}

/// Number of disconnected configurations of order v: unordered multisets of
/// at least two connected configurations, with orders at least 7, summing to
/// v. Only keys `7 <= v' <= v - 7` of the map are consulted, so every
/// listed multiset really has two or more parts.
pub fn count_disconnected(v: usize, connected_counts: &BTreeMap<usize, u64>) -> u64 {
    fn rec(remaining: usize, min_order: usize, max_order: usize, counts: &BTreeMap<usize, u64>) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0u64;
        for order in min_order..=max_order.min(remaining) {
            let classes = *counts.get(&order).unwrap_or(&0);
            if classes == 0 {
                continue;
            }
            let mut mult = 1u64;
            while order * (mult as usize) <= remaining {
                total += multiset_coeff(classes, mult)
                    * rec(remaining - order * mult as usize, order + 1, max_order, counts);
                mult += 1;
            }
        }
        total
    }
    if v < 14 {
        return 0;
    }
    rec(v, 7, v - 7, connected_counts)
}

/// Builds row v by generating and classifying every configuration.
/// `known_connected` supplies the *connected* class counts of smaller
/// orders, from which column i is derived combinatorially.
pub fn table_row(
    v: usize,
    budget: Option<u64>,
    known_connected: &BTreeMap<usize, u64>,
) -> TableRow {
    let generated = generate_configs(v, budget);
    let preds: Vec<classify::Predicates> = generated
        .all_configs()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|cfg| classify::predicates(cfg))
        .collect();
    let count = |sel: fn(&classify::Predicates) -> bool| preds.iter().filter(|p| sel(p)).count() as u64;
    TableRow {
        v,
        a: preds.len() as u64,
        b: count(|p| p.self_dual),
        c: count(|p| p.self_polar),
        d: count(|p| p.point_transitive),
        e: count(|p| p.cyclic),
        f: count(|p| p.flag_transitive),
        g: count(|p| p.weakly_flag_transitive),
        h: count(|p| p.connected && p.blocking_set_free),
        i: count_disconnected(v, known_connected),
        complete: generated.complete,
    }
}

/// Rows 7..=v_max in order, threading the connected counts into column i.
pub fn table(v_max: usize, budget: Option<u64>) -> Vec<TableRow> {
    let mut known = BTreeMap::new();
    let mut rows = Vec::new();
    for v in 7..=v_max {
        let row = table_row(v, budget, &known);
        known.insert(v, row.a);
        rows.push(row);
    }
    rows
}

pub fn to_csv(rows: &[TableRow]) -> String {
    let mut s = String::from("v,a,b,c,d,e,f,g,h,i\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.v, r.a, r.b, r.c, r.d, r.e, r.f, r.g, r.h, r.i
        ));
    }
    s
}

pub fn parse_csv(text: &str) -> Result<Vec<TableRow>, String> {
    let mut rows = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('v') {
            continue;
        }
        let fields: Vec<u64> = line
            .split(',')
            .map(|f| f.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|e| format!("line {}: {e}", ln + 1))?;
        if fields.len() != 10 {
            return Err(format!("line {}: expected 10 fields", ln + 1));
        }
        rows.push(TableRow {
            v: fields[0] as usize,
            a: fields[1],
            b: fields[2],
            c: fields[3],
            d: fields[4],
            e: fields[5],
            f: fields[6],
            g: fields[7],
            h: fields[8],
            i: fields[9],
            complete: true,
        });
    }
    Ok(rows)
}

pub fn format_table(rows: &[TableRow]) -> String {
    let mut s = String::from(
        "     v          a        b        c      d      e      f      g      h      i\n",
    );
    for r in rows {
        s.push_str(&format!(
            "{:>6} {:>10} {:>8} {:>8} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}{}\n",
            r.v,
            r.a,
            r.b,
            r.c,
            r.d,
            r.e,
            r.f,
            r.g,
            r.h,
            r.i,
            if r.complete { "" } else { "  (partial)" }
        ));
    }
    s
}
