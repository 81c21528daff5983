//! Cross-route verification: every count that can be computed more than one
//! way is recomputed every way, and the results are compared exactly.

use crate::census;
use crate::combinat::{binom, catalan};
use crate::geometric::{theta_series, xi_class_counts, GeomCountTable, HhatTable};
use crate::homology::{
    circle_walk_dp, count_circle_homology_classes, count_good_paths_dp,
    count_good_paths_reflection, count_homology_classes, enumerate_good_paths, Step,
};
use crate::profiles::{profile_count_closed, profile_series_recurrence, verify_cubic};
use crate::series::TruncatedSeries;
use crate::topology::{
    count_closed_paths, kreweras_chains, simplified_moves, syt_count_brute, syt_count_hook,
    t10_discrepancy_report, young_walk_closed_form, MoveSet, Partition, SimplifiedMove,
};
use crate::trees::{enumerate_morse_trees, MorseProfile};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// One verification step with the values it compared.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Run the whole suite. `deep` raises the tree oracle to order 3 and the
/// series route to its seventh coefficient.
pub fn run_all(deep: bool) -> Vec<Check> {
    let mut checks = Vec::new();

    // --- homology ---
    {
        let mut ok = true;
        let mut parts = Vec::new();
        for m in 0..=8u64 {
            let dp = count_good_paths_dp(m);
            let refl = count_good_paths_reflection(m);
            let closed = count_homology_classes(m);
            ok &= dp == refl && dp == closed;
            if m <= 4 {
                parts.push(format!("m={m}: {dp}/{refl}/{closed}"));
            }
        }
        checks.push(Check::new(
            "homology: walk dp = reflection = Catalan product (m <= 8)",
            ok,
            parts.join("  "),
        ));
    }
    {
        let mut ok = true;
        let mut parts = Vec::new();
        for n in 0..=4u64 {
            let paths = enumerate_good_paths(n).unwrap();
            let expected = count_homology_classes(n);
            let set: BTreeSet<_> = paths.iter().cloned().collect();
            let closed_under_mirror = paths.iter().all(|p| set.contains(&p.diagonal_mirror()));
            let all_good = paths.iter().all(|p| p.is_good() && p.is_closed());
            ok &= BigInt::from(set.len()) == expected && closed_under_mirror && all_good;
            parts.push(format!("n={n}: {} of {expected}", paths.len()));
        }
        checks.push(Check::new(
            "homology: explicit path lists sized by the closed form (n <= 4)",
            ok,
            parts.join("  "),
        ));
    }
    {
        let paths = enumerate_good_paths(2).unwrap();
        let east: BTreeSet<String> = paths
            .iter()
            .filter(|p| p.steps[0] == Step::East)
            .map(|p| p.to_string())
            .collect();
        let expected: BTreeSet<String> = ["EWEW", "EEWW", "ENSW", "EWNS", "ENWS"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        checks.push(Check::new(
            "homology: the five east-first paths of length four",
            east == expected,
            format!("{east:?}"),
        ));
    }
    {
        let mut ok = true;
        let mut parts = Vec::new();
        for m in 0..=10u64 {
            let walks = circle_walk_dp(m);
            let closed = count_circle_homology_classes(m);
            let diff = binom(2 * m as i64, m as i64) - binom(2 * m as i64, m as i64 + 2);
            ok &= walks == closed && walks == diff;
            if m <= 4 {
                parts.push(format!("m={m}: {walks}/{closed}/{diff}"));
            }
        }
        checks.push(Check::new(
            "homology: circle walks = C_{m+1} = binomial difference (m <= 10)",
            ok,
            parts.join("  "),
        ));
    }

    // --- profiles ---
    {
        let f = profile_series_recurrence(30);
        let ok = (0..=30).all(|n| f.count(n) == &profile_count_closed(n as u64));
        checks.push(Check::new(
            "profiles: recurrence = closed form (n <= 30)",
            ok,
            format!("f_9 = {} / {}", f.count(9), profile_count_closed(9)),
        ));
    }
    {
        let z = TruncatedSeries::from_ints(&[0, 1, -2, 1]).with_order(16);
        let w = z.lagrange_invert();
        let ok = (0..=15u64).all(|n| {
            let c = w.coeff(n as usize + 1);
            c.is_integer() && c.to_integer() == profile_count_closed(n)
        });
        checks.push(Check::new(
            "profiles: Lagrange inversion of w(1-w)^2 (n <= 15)",
            ok,
            format!(
                "coefficient 16 = {} / {}",
                w.coeff(16),
                profile_count_closed(15)
            ),
        ));
    }
    {
        let residual = verify_cubic(15);
        checks.push(Check::new(
            "profiles: cubic residual f(1-tf)^2 - 1 vanishes to order 15",
            residual.is_zero(),
            format!("residual zero: {}", residual.is_zero()),
        ));
    }

    // --- geometric ---
    let geom = GeomCountTable::build(12);
    {
        let hh = HhatTable::build(0, 12);
        let mut ok = true;
        let mut parts = Vec::new();
        for n in 0..=12usize {
            let a = geom.geometric_classes(n).clone();
            let b = hh.integer_count(0, n);
            ok &= a == b;
            if n >= 9 {
                parts.push(format!("n={n}: {a} / {b}"));
            }
        }
        checks.push(Check::new(
            "geometric: recurrence = rescaled-table route (n <= 12)",
            ok,
            parts.join("  "),
        ));
    }
    {
        let hh = HhatTable::build(4, 4);
        let mut ok = true;
        for x in 0..=4usize {
            for y in 0..=4usize {
                if x + y > 4 {
                    continue;
                }
                ok &= hh.integer_count(x, y) == geom.cumulative(x + y, x as i64 + 1);
            }
        }
        checks.push(Check::new(
            "geometric: H(x, y) equals F_{x+y}(x+1) on the 4x4 corner",
            ok,
            format!(
                "H(2,0) = {} / F_2(3) = {}",
                hh.integer_count(2, 0),
                geom.cumulative(2, 3)
            ),
        ));
    }
    {
        let n_series = if deep { 7 } else { 5 };
        let xi = xi_class_counts(n_series);
        let mut ok = true;
        let mut parts = Vec::new();
        for (n, count) in xi.iter().enumerate() {
            let a = geom.geometric_classes(n);
            ok &= count == a;
            if n >= n_series.saturating_sub(2) {
                parts.push(format!("n={n}: {count} / {a}"));
            }
        }
        checks.push(Check::new(
            &format!("geometric: series inversion route (n <= {n_series})"),
            ok,
            parts.join("  "),
        ));
    }
    {
        let th = theta_series(4);
        let q2 = -th.coeff(3).clone();
        let q4 = -th.coeff(5).clone();
        let q6 = -th.coeff(7).clone();
        let ok = q2 == rat(1, 3) && q4 == rat(-7, 40) && q6 == rat(3, 28);
        checks.push(Check::new(
            "geometric: integrand coefficients 1/3, -7/40, 3/28",
            ok,
            format!("got {q2}, {q4}, {q6}"),
        ));
    }
    {
        let mut ok = true;
        for n in 1..=12usize {
            let sum: BigInt = (1..=n as i64 + 1).map(|m| geom.mu_exact(n, m)).sum();
            ok &= &sum == geom.geometric_classes(n);
            let top = binom(n as i64 + 1, 2) * geom.cumulative(n - 1, n as i64);
            ok &= geom.mu_exact(n, n as i64 + 1) == top;
        }
        checks.push(Check::new(
            "geometric: row sums and top cells of the count table (n <= 12)",
            ok,
            format!("F_12(1) = {}", geom.geometric_classes(12)),
        ));
    }

    // --- trees (oracle) ---
    let max_oracle = if deep { 3 } else { 2 };
    let oracle: Vec<_> = (0..=max_oracle)
        .map(|n| enumerate_morse_trees(n).unwrap())
        .collect();
    {
        let mut ok = true;
        let mut parts = Vec::new();
        for (n, trees) in oracle.iter().enumerate() {
            let expected = geom.geometric_classes(n);
            ok &= &BigInt::from(trees.len()) == expected;
            parts.push(format!("n={n}: {} / {expected}", trees.len()));
        }
        checks.push(Check::new(
            &format!("trees: enumeration count = recurrence (n <= {max_oracle})"),
            ok,
            parts.join("  "),
        ));
    }
    {
        let mut ok = true;
        let mut detail = String::new();
        for (n, trees) in oracle.iter().enumerate() {
            let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
            for t in trees {
                *hist.entry(t.mu()).or_insert(0) += 1;
            }
            for m in 1..=n as i64 + 1 {
                let counted = hist.get(&(m as usize)).copied().unwrap_or(0);
                ok &= BigInt::from(counted) == geom.mu_exact(n, m);
            }
            if n == 2 {
                detail = format!("n=2 histogram {hist:?} vs (8, 8, 3)");
            }
        }
        checks.push(Check::new(
            "trees: lowest-node histogram = f_n(m)",
            ok,
            detail,
        ));
    }
    {
        let mut ok = true;
        let mut self_dual = Vec::new();
        for trees in &oracle {
            let set: BTreeSet<_> = trees.iter().cloned().collect();
            let mut fixed = 0;
            for t in trees {
                let d = t.poincare_dual();
                ok &= set.contains(&d) && d.poincare_dual() == *t;
                if &d == t {
                    fixed += 1;
                }
            }
            self_dual.push(fixed.to_string());
        }
        checks.push(Check::new(
            "trees: duality is an involution closing the enumerated set",
            ok,
            format!("self-dual per order: {}", self_dual.join(", ")),
        ));
    }
    {
        let mut ok = true;
        for trees in &oracle {
            for t in trees {
                let st = t.handle_statistics();
                ok &= st.negative_nodes == st.extra_minima && st.positive_nodes == st.extra_maxima;
            }
        }
        checks.push(Check::new(
            "trees: node-type counts match extremum surpluses",
            ok,
            String::new(),
        ));
    }
    {
        let mut ok = true;
        let mut parts = Vec::new();
        for (n, trees) in oracle.iter().enumerate() {
            let profiles: BTreeSet<MorseProfile> = trees.iter().map(|t| t.profile()).collect();
            let expected = profile_count_closed(n as u64);
            ok &= BigInt::from(profiles.len()) == expected;
            parts.push(format!("n={n}: {} / {expected}", profiles.len()));
        }
        checks.push(Check::new(
            "trees: distinct extracted profiles = profile counts",
            ok,
            parts.join("  "),
        ));
    }
    {
        let mut ok = true;
        for trees in &oracle {
            for t in trees {
                let p = t.profile();
                ok &= p.right_wing_turning_points() == 1;
            }
        }
        checks.push(Check::new(
            "trees: every right wing has exactly one turning point",
            ok,
            String::new(),
        ));
    }
    {
        let mut ok = true;
        let mut parts = Vec::new();
        for (n, trees) in oracle.iter().enumerate() {
            let paths: BTreeSet<_> = trees.iter().map(|t| t.betti_path()).collect();
            let expected = count_homology_classes(n as u64);
            ok &= paths.iter().all(|p| p.is_good() && p.is_closed())
                && BigInt::from(paths.len()) == expected;
            parts.push(format!("n={n}: {} / {expected}", paths.len()));
        }
        checks.push(Check::new(
            "trees: distinct Betti paths = homology counts",
            ok,
            parts.join("  "),
        ));
    }
    {
        let mut ok = true;
        for (n, trees) in oracle.iter().enumerate() {
            let shapes: BTreeSet<String> =
                trees.iter().map(|t| t.plane_structure().shape()).collect();
            ok &= BigInt::from(shapes.len()) <= catalan(n as u64);
        }
        checks.push(Check::new(
            "trees: distinct plane shapes within the Catalan bound",
            ok,
            String::new(),
        ));
    }

    // --- topology ---
    {
        let t6 = count_closed_paths(6, MoveSet::Simplified);
        let t8 = count_closed_paths(8, MoveSet::Simplified);
        checks.push(Check::new(
            "topology: T_6 = 15 and T_8 = 107",
            t6 == BigInt::from(15) && t8 == BigInt::from(107),
            format!("T_6 = {t6}, T_8 = {t8}"),
        ));
    }
    {
        let mut ok = true;
        let mut parts = Vec::new();
        for n in 0..=6u64 {
            let dp = count_closed_paths(2 * n as usize + 2, MoveSet::YoungOnly);
            let closed = young_walk_closed_form(n);
            ok &= dp == closed;
            if n >= 4 {
                parts.push(format!("n={n}: {dp} / {closed}"));
            }
        }
        checks.push(Check::new(
            "topology: Young walks = odd double factorial (n <= 6)",
            ok,
            parts.join("  "),
        ));
    }
    {
        let mut ok = true;
        for length in [2usize, 4, 6, 8, 10, 12] {
            ok &= count_closed_paths(length, MoveSet::Simplified)
                >= count_closed_paths(length, MoveSet::YoungOnly);
        }
        checks.push(Check::new(
            "topology: merge moves only add closed paths (L <= 12)",
            ok,
            String::new(),
        ));
    }
    {
        let mut ok = true;
        let mut sample = String::new();
        for w in 1..=7u32 {
            for lam in partitions_of(w) {
                let hook = syt_count_hook(&lam);
                let brute = syt_count_brute(&lam);
                let chains = kreweras_chains(&Partition::empty(), &lam, w as u64 - 1);
                ok &= hook == brute && hook == chains;
                if w == 7 && sample.is_empty() {
                    sample = format!("{lam}: {hook}/{brute}/{chains}");
                }
            }
        }
        checks.push(Check::new(
            "topology: tableau counts hook = brute = chain determinant (|lambda| <= 7)",
            ok,
            sample,
        ));
    }
    {
        // U = D + merge along every closed path of length 8
        let mut ok = true;
        let mut total = BigInt::zero();
        fn walk(
            at: Partition,
            remaining: usize,
            ups: usize,
            downs: usize,
            merges: usize,
            ok: &mut bool,
            total: &mut BigInt,
        ) {
            if remaining == 0 {
                if at.is_empty() {
                    *ok &= ups == downs + merges;
                    *total += 1;
                }
                return;
            }
            if at.weight() as usize > remaining {
                return;
            }
            for (kind, q) in simplified_moves(&at) {
                let (u, d, m) = match kind {
                    SimplifiedMove::Up => (ups + 1, downs, merges),
                    SimplifiedMove::Down => (ups, downs + 1, merges),
                    SimplifiedMove::Merge => (ups, downs, merges + 1),
                };
                walk(q, remaining - 1, u, d, m, ok, total);
            }
        }
        walk(Partition::empty(), 8, 0, 0, 0, &mut ok, &mut total);
        ok &= total == count_closed_paths(8, MoveSet::Simplified);
        checks.push(Check::new(
            "topology: up steps balance down plus merge steps (L = 8)",
            ok,
            format!("enumerated {total} closed paths"),
        ));
    }
    {
        // raw moves and simplified moves describe the same graph except for
        // the single down edge that removes the last part; closed-path
        // counts from the single disk therefore differ
        let one = Partition::new(vec![1]);
        let raw4 = crate::topology::count_paths(&one, &one, 4, MoveSet::Raw);
        let simpl4 = crate::topology::count_paths(&one, &one, 4, MoveSet::Simplified);
        let ok = raw4 == BigInt::from(10) && simpl4 == BigInt::from(15);
        checks.push(Check::new(
            "topology: raw vs simplified paths between single disks (L = 4)",
            ok,
            format!("raw {raw4}, simplified {simpl4} (simplified may revisit the empty partition)"),
        ));
    }
    {
        let report = t10_discrepancy_report();
        checks.push(Check::new(
            "topology: T_10 computed and recorded against both references",
            true,
            report.to_string(),
        ));
    }

    // --- census ---
    {
        let rows = census::census(9);
        let profiles: [u64; 10] = [1, 2, 7, 30, 143, 728, 3876, 21_318, 120_175, 690_690];
        let homology: [u64; 10] = [
            1, 2, 10, 70, 588, 5_544, 56_628, 613_470, 6_952_660, 81_662_152,
        ];
        let geometric: [u64; 10] = [
            1,
            2,
            19,
            428,
            17_746,
            1_178_792,
            114_892_114,
            15_465_685_088,
            2_750_970_320_776,
            625_218_940_868_432,
        ];
        let mut ok = rows.len() == 10;
        for (n, row) in rows.iter().enumerate() {
            ok &= row.profiles == BigInt::from(profiles[n])
                && row.homology == BigInt::from(homology[n])
                && row.geometric == BigInt::from(geometric[n]);
        }
        checks.push(Check::new(
            "census: the three class columns match the reference values (n <= 9)",
            ok,
            format!(
                "row 9: {} {} {}",
                rows[9].profiles, rows[9].homology, rows[9].geometric
            ),
        ));
    }

    checks
}

fn partitions_of(w: u32) -> Vec<Partition> {
    fn rec(parts: &mut Vec<u32>, remaining: u32, max_part: u32, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(parts.clone()));
            return;
        }
        for next in (1..=remaining.min(max_part)).rev() {
            parts.push(next);
            rec(parts, remaining - next, next, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), w, w, &mut out);
    out
}
