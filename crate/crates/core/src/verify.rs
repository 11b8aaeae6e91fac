//! Exhaustive property suites over enumerated tableaux.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crystals::{enumerate_zero_par, Family, TableauSeq};
use crate::growth::{
    blowup, cell_backward, cell_forward, growth_inverse, growth_matrix, matrix_to_triangle, ChainDir, RuleSet,
};
use crate::promotion::{chord_matrix, promote, promote_fan_virtual, rotate_matrix, ChordMap};
use crate::virtualize::{iota_f_to_o, iota_v_to_o};
use crate::weights::{is_horizontal_strip, is_vertical_strip, union_parts, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    OscMain,
    FansMain,
    VacMain,
    Rotation,
    Order,
    BlowupLemmas,
    RuleInversion,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "osc-main" => Suite::OscMain,
            "fans-main" => Suite::FansMain,
            "vac-main" => Suite::VacMain,
            "rotation" => Suite::Rotation,
            "order" => Suite::Order,
            "blowup-lemmas" => Suite::BlowupLemmas,
            "rule-inversion" => Suite::RuleInversion,
            _ => return Err(format!("unknown suite {s:?}")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub passed: bool,
    /// At most ten, in enumeration order.
    pub counterexamples: Vec<String>,
}

fn collect(suite: Suite, results: Vec<Option<String>>) -> SuiteReport {
    let checked = results.len();
    let counterexamples: Vec<String> = results.into_iter().flatten().take(10).collect();
    SuiteReport { suite, checked, passed: counterexamples.is_empty(), counterexamples }
}

/// Every (rank, length) pair with rank in 1..=r and length in 0..=n.
pub fn box_ranges(r: usize, n: usize) -> Vec<(usize, usize)> {
    (1..=r).flat_map(|rr| (0..=n).map(move |nn| (rr, nn))).collect()
}

/// All tableaux of the family over the given (rank, length) pairs.
pub fn domain(family: Family, ranges: &[(usize, usize)]) -> Vec<TableauSeq> {
    ranges.iter().flat_map(|&(r, n)| enumerate_zero_par(family, r, n)).collect()
}

fn over(suite: Suite, xs: &[TableauSeq], check: impl Fn(&TableauSeq) -> Result<(), String> + Sync) -> SuiteReport {
    let results = xs.par_iter().map(|t| check(t).err().map(|e| format!("{t} (r={}): {e}", t.rank))).collect();
    collect(suite, results)
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, a: T, b: T) -> Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what}: {a:?} != {b:?}"))
    }
}

pub fn growth_equals_promotion(t: &TableauSeq) -> Result<(), String> {
    let g = growth_matrix(t).map_err(|e| e.to_string())?;
    match t.family {
        Family::Vacillating => {
            let vo = chord_matrix(ChordMap::MVO, t).map_err(|e| e.to_string())?;
            let vf = chord_matrix(ChordMap::MVF, t).map_err(|e| e.to_string())?;
            eq("G_V vs M_VO", &g, &vo)?;
            eq("M_VO vs M_VF", &vo, &vf)?;
        }
        f => eq("growth vs promotion", &g, &chord_matrix(ChordMap::for_family(f), t).map_err(|e| e.to_string())?)?,
    }
    let tri = matrix_to_triangle(&g).map_err(|e| e.to_string())?;
    eq("growth inverse", &growth_inverse(t.family, t.rank, &tri).map_err(|e| e.to_string())?, t)
}

pub fn order_divides_length(t: &TableauSeq) -> Result<(), String> {
    let mut u = t.clone();
    for _ in 0..t.len() {
        u = promote(&u).map_err(|e| e.to_string())?;
    }
    eq("pr^n", &u, t)
}

pub fn rotation_and_shape(t: &TableauSeq) -> Result<(), String> {
    let map = ChordMap::for_family(t.family);
    let m = chord_matrix(map, t).map_err(|e| e.to_string())?;
    let p = promote(t).map_err(|e| e.to_string())?;
    eq("chord(pr T) vs rotate(chord T)", &chord_matrix(map, &p).map_err(|e| e.to_string())?, &rotate_matrix(&m))?;
    if !m.is_symmetric() || !m.has_zero_diagonal() {
        return Err("chord matrix is not symmetric with zero diagonal".into());
    }
    if t.family == Family::Oscillating && !t.is_empty() && !m.is_perfect_matching() {
        return Err("M_O is not a perfect matching".into());
    }
    if t.family == Family::Fan {
        eq("local vs virtual fan promotion", &p, &promote_fan_virtual(t).map_err(|e| e.to_string())?)?;
        let o = iota_f_to_o(t).map_err(|e| e.to_string())?;
        let mut ro = o;
        for _ in 0..t.rank {
            ro = promote(&ro).map_err(|e| e.to_string())?;
        }
        eq("ι(pr F) vs pr^r ι(F)", iota_f_to_o(&p).map_err(|e| e.to_string())?, ro)?;
    }
    Ok(())
}

pub fn blowup_intertwines(t: &TableauSeq) -> Result<(), String> {
    let err = |e: &dyn std::fmt::Display| e.to_string();
    match t.family {
        Family::Fan => {
            let m = chord_matrix(ChordMap::MF, t).map_err(|e| err(&e))?;
            let o = iota_f_to_o(t).map_err(|e| err(&e))?;
            let mo = chord_matrix(ChordMap::MO, &o).map_err(|e| err(&e))?;
            if !t.is_empty() {
                eq("blowup_SE(M_F) vs M_O(ι F)", blowup(ChainDir::SE, &m, t.rank).map_err(|e| err(&e))?, mo.clone())?;
                let g = growth_matrix(t).map_err(|e| err(&e))?;
                eq(
                    "blowup_SE(G_F) vs G_O(ι F)",
                    blowup(ChainDir::SE, &g, t.rank).map_err(|e| err(&e))?,
                    growth_matrix(&o).map_err(|e| err(&e))?,
                )?;
            }
            Ok(())
        }
        Family::Vacillating => {
            let m = chord_matrix(ChordMap::MVO, t).map_err(|e| err(&e))?;
            let o = iota_v_to_o(t).map_err(|e| err(&e))?;
            if !t.is_empty() {
                let mo = chord_matrix(ChordMap::MO, &o).map_err(|e| err(&e))?;
                eq("blowup_NE(M_VO) vs M_O(ι V)", blowup(ChainDir::NE, &m, 2).map_err(|e| err(&e))?, mo)?;
                let g = growth_matrix(t).map_err(|e| err(&e))?;
                eq(
                    "blowup_NE(G_V) vs G_O(ι V)",
                    blowup(ChainDir::NE, &g, 2).map_err(|e| err(&e))?,
                    growth_matrix(&o).map_err(|e| err(&e))?,
                )?;
            }
            Ok(())
        }
        Family::Oscillating => Ok(()),
    }
}

fn random_partition(rng: &mut StdRng, max_len: usize, max_part: i32) -> Partition {
    let len = rng.gen_range(0..=max_len);
    let mut v: Vec<i32> = (0..len).map(|_| rng.gen_range(0..=max_part)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(v).unwrap()
}

/// A random `outer` with `outer / inner` allowed by the rule set.
fn random_step(rng: &mut StdRng, rule: RuleSet, inner: &Partition) -> Partition {
    loop {
        let cand = match rule {
            RuleSet::ZeroOne => {
                if rng.gen_bool(0.3) {
                    return inner.clone();
                }
                let row = rng.gen_range(0..=inner.len());
                let mut v = inner.padded(row + 1);
                v[row] += 1;
                match Partition::new(v) {
                    Ok(p) => p,
                    Err(_) => continue,
                }
            }
            _ => union_parts(inner, &random_partition(rng, 4, 2)),
        };
        let ok = match rule {
            RuleSet::ZeroOne => true,
            RuleSet::Burge => is_vertical_strip(inner, &cand),
            RuleSet::Rsk => is_horizontal_strip(inner, &cand),
        };
        if ok && cand.len() <= 5 {
            return cand;
        }
    }
}

/// One randomly generated cell: forward then backward must return (γ, m), and backward then forward β.
pub fn check_random_cell(rng: &mut StdRng, rule: RuleSet) -> Result<(), String> {
    let g = random_partition(rng, 4, 4);
    let d = random_step(rng, rule, &g);
    let a = random_step(rng, rule, &g);
    let m = match rule {
        RuleSet::ZeroOne => u32::from(g == d && d == a && rng.gen_bool(0.5)),
        _ => rng.gen_range(0..=3),
    };
    let b = cell_forward(rule, &g, &d, &a, m).map_err(|e| e.to_string())?;
    let back = cell_backward(rule, &b, &d, &a).map_err(|e| e.to_string())?;
    eq(&format!("{rule:?} backward∘forward on γ={g} δ={d} α={a} m={m}"), &back, &(g.clone(), m))?;
    let again = cell_forward(rule, &back.0, &d, &a, back.1).map_err(|e| e.to_string())?;
    eq(&format!("{rule:?} forward∘backward on β={b}"), again, b)
}

pub fn rule_inversion(cases: usize, seed: u64) -> SuiteReport {
    let results = [RuleSet::ZeroOne, RuleSet::Burge, RuleSet::Rsk]
        .par_iter()
        .enumerate()
        .flat_map_iter(|(k, &rule)| {
            let mut rng = StdRng::seed_from_u64(seed.wrapping_add(k as u64));
            let share = cases / 3 + usize::from(k < cases % 3);
            (0..share).map(move |_| check_random_cell(&mut rng, rule).err()).collect::<Vec<_>>()
        })
        .collect();
    collect(Suite::RuleInversion, results)
}

/// Runs a suite on ranks 1..=r and lengths 0..=n; `family` selects the domain where the suite needs one.
pub fn run_suite(suite: Suite, family: Family, r: usize, n: usize, cases: usize) -> SuiteReport {
    run_suite_on(suite, family, &box_ranges(r, n), cases)
}

pub fn run_suite_on(suite: Suite, family: Family, ranges: &[(usize, usize)], cases: usize) -> SuiteReport {
    let dom = |f: Family| domain(f, ranges);
    match suite {
        Suite::OscMain => over(suite, &dom(Family::Oscillating), growth_equals_promotion),
        Suite::FansMain => over(suite, &dom(Family::Fan), growth_equals_promotion),
        Suite::VacMain => over(suite, &dom(Family::Vacillating), growth_equals_promotion),
        Suite::Rotation => over(suite, &dom(family), rotation_and_shape),
        Suite::Order => over(suite, &dom(family), order_divides_length),
        Suite::BlowupLemmas => {
            let mut xs = dom(Family::Fan);
            xs.extend(dom(Family::Vacillating));
            over(suite, &xs, blowup_intertwines)
        }
        Suite::RuleInversion => rule_inversion(cases, 0x5eed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small() {
        for suite in [Suite::OscMain, Suite::FansMain, Suite::VacMain, Suite::BlowupLemmas] {
            let rep = run_suite(suite, Family::Oscillating, 2, 4, 0);
            assert!(rep.passed, "{rep:?}");
            assert!(rep.checked > 0);
        }
        for f in [Family::Oscillating, Family::Fan, Family::Vacillating] {
            assert!(run_suite(Suite::Rotation, f, 2, 4, 0).passed);
            assert!(run_suite(Suite::Order, f, 2, 4, 0).passed);
        }
        let rep = run_suite(Suite::RuleInversion, Family::Fan, 1, 1, 300);
        assert!(rep.passed && rep.checked == 300, "{rep:?}");
    }

    #[test]
    fn suite_names() {
        assert_eq!("fans-main".parse::<Suite>().unwrap(), Suite::FansMain);
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(serde_json::to_string(&Suite::RuleInversion).unwrap(), "\"rule-inversion\"");
    }
}
