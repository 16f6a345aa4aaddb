//! The Hurwitz-Radon function and the existence criterion for skew fibrations.
//!
//! A skew `(p, n)`-fibration of `R^n` (fibers pairwise skew affine `p`-planes)
//! exists iff `p <= rho(n - p) - 1`. Everything in this module is integer
//! arithmetic on that inequality: single queries, dominance, the existence
//! table and finite-range scans of the consequences drawn from it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// `q = 2^k (2m + 1)` together with `rho(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RhoDecomposition {
    pub q: u64,
    pub k: u32,
    pub m: u64,
    pub rho: u64,
}

impl RhoDecomposition {
    pub fn new(q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroDimension);
        }
        let k = q.trailing_zeros();
        let m = (q >> k) / 2;
        Ok(Self {
            q,
            k,
            m,
            rho: rho_of_valuation(k),
        })
    }
}

/// `rho(2^k)`, which is also `rho(2^k * odd)`.
pub fn rho_of_valuation(k: u32) -> u64 {
    let k = u64::from(k);
    match k % 4 {
        0 => 2 * k + 1,
        1 | 2 => 2 * k,
        _ => 2 * k + 2,
    }
}

/// The Hurwitz-Radon number of `q`.
pub fn rho(q: u64) -> Result<u64> {
    RhoDecomposition::new(q).map(|d| d.rho)
}

fn rho_unchecked(q: u64) -> u64 {
    debug_assert!(q > 0);
    rho_of_valuation(q.trailing_zeros())
}

/// Whether `R^n` is fibered by pairwise skew affine `p`-planes.
pub fn exists_fibration(p: u64, n: u64) -> Result<bool> {
    if p >= n {
        return Err(Error::NoBase { p, n });
    }
    Ok(admissible(p, n))
}

// p < n assumed
fn admissible(p: u64, n: u64) -> bool {
    p < rho_unchecked(n - p)
}

/// All `p >= 1` admissible in dimension `n`, ascending.
pub fn fiber_dims(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok((1..n).filter(|&p| admissible(p, n)).collect())
}

/// `(p, n)` is admissible but `(p + 1, n + 1)` is not.
pub fn is_dominant(p: u64, n: u64) -> bool {
    p < n && admissible(p, n) && !admissible(p + 1, n + 1)
}

/// Dominant, and `p` is the largest admissible fiber dimension for `n`.
pub fn is_doubly_dominant(p: u64, n: u64) -> bool {
    is_dominant(p, n) && ((p + 1)..n).all(|p2| !admissible(p2, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub p: u64,
    pub dominant: bool,
    pub doubly_dominant: bool,
}

/// Admissible fiber dimensions for every `n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceTable {
    pub n_max: u64,
    pub rows: BTreeMap<u64, Vec<TableEntry>>,
}

pub fn generate_table(n_max: u64) -> Result<ExistenceTable> {
    if n_max == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut rows = BTreeMap::new();
    for n in 1..=n_max {
        let dims = fiber_dims(n)?;
        let top = dims.last().copied();
        let entries = dims
            .iter()
            .map(|&p| {
                let dominant = is_dominant(p, n);
                TableEntry {
                    p,
                    dominant,
                    doubly_dominant: dominant && Some(p) == top,
                }
            })
            .collect();
        rows.insert(n, entries);
    }
    Ok(ExistenceTable { n_max, rows })
}

impl ExistenceTable {
    pub fn row(&self, n: u64) -> Option<Vec<u64>> {
        self.rows.get(&n).map(|r| r.iter().map(|e| e.p).collect())
    }

    /// All dominant `(p, n)` pairs, ordered by `n` then `p`.
    pub fn dominant_pairs(&self) -> Vec<(u64, u64, bool)> {
        self.rows
            .iter()
            .flat_map(|(&n, row)| {
                row.iter()
                    .filter(|e| e.dominant)
                    .map(move |e| (e.p, n, e.doubly_dominant))
            })
            .collect()
    }

    /// `n<TAB>p_list` with a header line; `p_list` is comma separated.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tp_list\n");
        for (n, row) in &self.rows {
            let list: Vec<String> = row.iter().map(|e| e.p.to_string()).collect();
            let _ = writeln!(out, "{n}\t{}", list.join(","));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut rows = serde_json::Map::new();
        for (n, row) in &self.rows {
            rows.insert(
                n.to_string(),
                serde_json::to_value(row).expect("plain data"),
            );
        }
        let doc = serde_json::json!({ "n_max": self.n_max, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("plain data");
        s.push('\n');
        s
    }

    /// Tabular blocks in the printed layout: one column per `n`, first row
    /// holds the largest `p`, lower rows the remaining values in descending
    /// order. Dominant entries are set in bold.
    pub fn to_latex(&self) -> String {
        const BLOCK: usize = 20;
        let ns: Vec<u64> = self.rows.keys().copied().collect();
        let mut out = String::new();
        for chunk in ns.chunks(BLOCK) {
            let depth = chunk.iter().map(|n| self.rows[n].len()).max().unwrap_or(0);
            let _ = writeln!(
                out,
                "\\begin{{tabular}}{{c||{}}}",
                vec!["c"; chunk.len()].join("|")
            );
            let header: Vec<String> = chunk
                .iter()
                .map(|n| {
                    if self.rows[n].iter().any(|e| e.doubly_dominant) {
                        format!("{{\\bf {n}}}")
                    } else {
                        n.to_string()
                    }
                })
                .collect();
            let _ = writeln!(out, "$n$ & {} \\\\", header.join(" & "));
            out.push_str("\\hline\\hline\n");
            for level in 0..depth {
                let cells: Vec<String> = chunk
                    .iter()
                    .map(|n| {
                        let row = &self.rows[n];
                        match row.len().checked_sub(level + 1).map(|i| row[i]) {
                            Some(e) if e.dominant => format!("{{\\bf {}}}", e.p),
                            Some(e) => e.p.to_string(),
                            None => String::new(),
                        }
                    })
                    .collect();
                let lead = if level == 0 { "$p$" } else { "" };
                let _ = writeln!(out, "{lead} & {} \\\\", cells.join(" & "));
            }
            out.push_str("\\end{tabular}\n\n");
        }
        out
    }
}

/// One verdict per consequence of the existence criterion, each obtained by
/// exhaustive evaluation over `1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub n_max: u64,
    /// `p1 > p2` both admissible in dimension `n` implies a `(p2, p1)`-fibration.
    pub vertical_heredity: bool,
    /// `(rho(2^k)-1, 2^k+rho(2^k)-1)` is doubly dominant whenever it fits.
    pub power_of_two_doubly_dominant: bool,
    /// Doubly dominant with `n >= 8` forces `n - p = 0 mod 8`.
    pub doubly_dominant_base_mod_8: bool,
    /// Unfibered `n` lie in `{1,2,4,8}` or are divisible by 16.
    pub unfibered_classified: bool,
    /// `p = q - 1` (with `p >= 0`) happens exactly for `n` in `{1,3,7,15}`.
    pub maximal_fiber_classified: bool,
    pub unfibered: Vec<u64>,
    pub maximal_fiber_witnesses: Vec<u64>,
    pub first_failure: Option<String>,
}

impl PropositionReport {
    pub fn all_pass(&self) -> bool {
        self.vertical_heredity
            && self.power_of_two_doubly_dominant
            && self.doubly_dominant_base_mod_8
            && self.unfibered_classified
            && self.maximal_fiber_classified
    }

    pub fn render(&self) -> String {
        let verdict = |b: bool| if b { "pass" } else { "FAIL" };
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let mut out = String::new();
        let _ = writeln!(out, "n_max\t{}", self.n_max);
        let _ = writeln!(
            out,
            "vertical_heredity\t{}",
            verdict(self.vertical_heredity)
        );
        let _ = writeln!(
            out,
            "power_of_two_doubly_dominant\t{}",
            verdict(self.power_of_two_doubly_dominant)
        );
        let _ = writeln!(
            out,
            "doubly_dominant_base_mod_8\t{}",
            verdict(self.doubly_dominant_base_mod_8)
        );
        let _ = writeln!(
            out,
            "unfibered_classified\t{}",
            verdict(self.unfibered_classified)
        );
        let _ = writeln!(
            out,
            "maximal_fiber_classified\t{}",
            verdict(self.maximal_fiber_classified)
        );
        let _ = writeln!(out, "unfibered\t{}", list(&self.unfibered));
        let _ = writeln!(
            out,
            "maximal_fiber_witnesses\t{}",
            list(&self.maximal_fiber_witnesses)
        );
        if let Some(f) = &self.first_failure {
            let _ = writeln!(out, "first_failure\t{f}");
        }
        out
    }
}

pub fn scan_propositions(n_max: u64) -> Result<PropositionReport> {
    let table = generate_table(n_max)?;
    let mut failure: Option<String> = None;
    let mut note = |cond: bool, msg: &dyn Fn() -> String| {
        if !cond && failure.is_none() {
            failure = Some(msg());
        }
        cond
    };

    let mut vertical_heredity = true;
    for (&n, row) in &table.rows {
        for (i, hi) in row.iter().enumerate() {
            for lo in &row[..i] {
                let ok = admissible(lo.p, hi.p);
                vertical_heredity &= note(ok, &|| {
                    format!(
                        "vertical heredity: ({},{n}) and ({},{n}) but no ({},{})",
                        hi.p, lo.p, lo.p, hi.p
                    )
                });
            }
        }
    }

    let mut power_of_two_doubly_dominant = true;
    for k in 0..63u32 {
        let q = 1u64 << k;
        let p = rho_of_valuation(k) - 1;
        let n = q + p;
        if n > n_max {
            break;
        }
        let ok = is_doubly_dominant(p, n);
        power_of_two_doubly_dominant &= note(ok, &|| format!("({p},{n}) is not doubly dominant"));
    }

    let mut doubly_dominant_base_mod_8 = true;
    for (p, n, doubly) in table.dominant_pairs() {
        if doubly && n >= 8 {
            let ok = (n - p) % 8 == 0;
            doubly_dominant_base_mod_8 &= note(ok, &|| {
                format!("doubly dominant ({p},{n}) has n-p = {} mod 8", (n - p) % 8)
            });
        }
    }

    let unfibered: Vec<u64> = table
        .rows
        .iter()
        .filter(|(_, r)| r.is_empty())
        .map(|(&n, _)| n)
        .collect();
    let mut unfibered_classified = true;
    for &n in &unfibered {
        let ok = matches!(n, 1 | 2 | 4 | 8) || n % 16 == 0;
        unfibered_classified &= note(ok, &|| format!("R^{n} is unfibered"));
    }

    // p = q - 1 means n = 2q - 1; p = 0 is allowed so n = 1 shows up
    let maximal_fiber_witnesses: Vec<u64> = (1..=n_max)
        .filter(|n| n % 2 == 1)
        .filter(|&n| {
            let q = n.div_ceil(2);
            admissible(q - 1, n)
        })
        .collect();
    let expected: Vec<u64> = [1, 3, 7, 15].into_iter().filter(|&n| n <= n_max).collect();
    let maximal_fiber_classified = note(maximal_fiber_witnesses == expected, &|| {
        format!("p = q-1 witnesses {maximal_fiber_witnesses:?}")
    });

    Ok(PropositionReport {
        n_max,
        vertical_heredity,
        power_of_two_doubly_dominant,
        doubly_dominant_base_mod_8,
        unfibered_classified,
        maximal_fiber_classified,
        unfibered,
        maximal_fiber_witnesses,
        first_failure: failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // straight from the piecewise definition, without trailing_zeros
    fn rho_by_division(mut q: u64) -> u64 {
        let mut k = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            k += 1;
        }
        match k % 4 {
            0 => 2 * k + 1,
            3 => 2 * k + 2,
            _ => 2 * k,
        }
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(8).unwrap(), 8);
        assert_eq!(rho(1).unwrap(), 1);
        assert_eq!(rho(16).unwrap(), 9);
        assert_eq!(rho(32).unwrap(), 10);
        assert_eq!(rho(40).unwrap(), 8);
        assert_eq!(rho(0), Err(Error::ZeroDimension));
    }

    #[test]
    fn decomposition_fields() {
        let d = RhoDecomposition::new(40).unwrap();
        assert_eq!((d.k, d.m, d.rho), (3, 2, 8));
        assert_eq!(d.q, (1 << d.k) * (2 * d.m + 1));
    }

    #[test]
    fn existence_examples() {
        assert!(exists_fibration(7, 15).unwrap());
        assert!(exists_fibration(8, 24).unwrap());
        assert!(exists_fibration(0, 1).unwrap());
        assert!((1..16).all(|p| !exists_fibration(p, 16).unwrap()));
        assert_eq!(exists_fibration(3, 3), Err(Error::NoBase { p: 3, n: 3 }));
    }

    #[test]
    fn fiber_dims_examples() {
        assert_eq!(fiber_dims(15).unwrap(), vec![1, 3, 7]);
        assert_eq!(fiber_dims(6).unwrap(), vec![2]);
        assert_eq!(fiber_dims(4).unwrap(), Vec::<u64>::new());
        assert_eq!(fiber_dims(41).unwrap(), vec![1, 9]);
        assert_eq!(fiber_dims(11).unwrap(), vec![1, 3]);
        assert!(fiber_dims(0).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(is_dominant(3, 7));
        assert!(!is_dominant(2, 6));
        assert!(is_dominant(8, 24));
        assert!(is_doubly_dominant(8, 24));
        assert!(is_doubly_dominant(7, 15));
        assert!(!is_doubly_dominant(1, 11));
        // printed in bold, but (4,76) exists
        assert!(!is_dominant(3, 75));
        assert!(is_dominant(11, 75));
        // inadmissible pairs are never dominant
        assert!(!is_dominant(2, 5));
    }

    #[test]
    fn small_tables() {
        let t = generate_table(7).unwrap();
        let nonempty: Vec<(u64, Vec<u64>)> = t
            .rows
            .keys()
            .filter_map(|&n| t.row(n).filter(|r| !r.is_empty()).map(|r| (n, r)))
            .collect();
        assert_eq!(
            nonempty,
            vec![(3, vec![1]), (5, vec![1]), (6, vec![2]), (7, vec![1, 3])]
        );
        let dom: Vec<(u64, u64)> = t.dominant_pairs().iter().map(|&(p, n, _)| (p, n)).collect();
        assert_eq!(dom, vec![(1, 3), (1, 7), (3, 7)]);

        let t = generate_table(2).unwrap();
        assert!(t.rows.values().all(Vec::is_empty));
        assert!(generate_table(0).is_err());
    }

    #[test]
    fn table_formats_are_stable() {
        let t = generate_table(7).unwrap();
        assert_eq!(
            t.to_tsv(),
            "n\tp_list\n1\t\n2\t\n3\t1\n4\t\n5\t1\n6\t2\n7\t1,3\n"
        );
        let json: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(json["n_max"], 7);
        assert_eq!(json["rows"]["7"][1]["p"], 3);
        assert_eq!(json["rows"]["7"][1]["doubly_dominant"], true);
        assert_eq!(json["rows"]["4"].as_array().unwrap().len(), 0);
        assert_eq!(t.to_latex(), generate_table(7).unwrap().to_latex());
        assert!(t.to_latex().contains("{\\bf 3}"));
    }

    #[test]
    fn scans() {
        let r = scan_propositions(512).unwrap();
        assert!(r.all_pass(), "{:?}", r.first_failure);
        let r = scan_propositions(84).unwrap();
        assert_eq!(r.unfibered, vec![1, 2, 4, 8, 16, 32, 48, 64, 80]);
        let r = scan_propositions(15).unwrap();
        assert_eq!(r.maximal_fiber_witnesses, vec![1, 3, 7, 15]);
        assert!(r.all_pass());
    }

    #[test]
    fn rho_fixed_points_small() {
        for q in 1..=4096u64 {
            let r = rho(q).unwrap();
            assert_eq!(r == q, matches!(q, 1 | 2 | 4 | 8), "q={q}");
            assert!(r <= q);
        }
    }

    proptest! {
        #[test]
        fn rho_matches_definition(q in 1u64..(1 << 40)) {
            prop_assert_eq!(rho(q).unwrap(), rho_by_division(q));
        }

        #[test]
        fn rho_sees_only_two_adic_part(k in 0u32..40, m in 0u64..10_000) {
            prop_assert_eq!(rho((1u64 << k) * (2 * m + 1)).unwrap(), rho(1u64 << k).unwrap());
        }

        #[test]
        fn rho_period_sixteen(k in 0u32..50) {
            prop_assert_eq!(rho(1u64 << (k + 4)).unwrap(), rho(1u64 << k).unwrap() + 8);
        }

        #[test]
        fn diagonal_shift_preserves_admissibility(n in 2u64..3000, p in 1u64..3000) {
            prop_assume!(p < n);
            if exists_fibration(p, n).unwrap() {
                prop_assert!(exists_fibration(p - 1, n - 1).unwrap());
                prop_assert!(p < n - p);
            }
        }
    }
}
