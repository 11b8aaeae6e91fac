use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crystals::{CrystalError, Family, TableauSeq};
use crate::growth::blocksum;
use crate::virtualize::{iota_f_to_o, iota_inverse, iota_v_to_f, iota_v_to_o, Embedding, VirtualError};
use crate::weights::{dominant_representative, Partition, WeightError, WeightVec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PromotionError {
    #[error("tableau does not have weight zero")]
    NotWeightZero,
    #[error("{map:?} does not apply to {family:?} tableaux")]
    WrongFamily { map: ChordMap, family: Family },
    #[error("matrix is not square")]
    NotSquare,
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Virtual(#[from] VirtualError),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
}

/// Square matrix of nonnegative integers; the adjacency matrix of a chord diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FilledMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl FilledMatrix {
    pub fn zeros(n: usize) -> FilledMatrix {
        FilledMatrix { entries: vec![vec![0; n]; n] }
    }

    pub fn from_rows(entries: Vec<Vec<i64>>) -> Result<FilledMatrix, PromotionError> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(PromotionError::NotSquare);
        }
        Ok(FilledMatrix { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i][j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n()).all(|i| self.get(i, i) == 0)
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.n()).map(|j| self.entries.iter().map(|r| r[j]).sum()).collect()
    }

    /// Every row and column holds exactly one 1 and zeros elsewhere.
    pub fn is_perfect_matching(&self) -> bool {
        let zero_one = self.entries.iter().flatten().all(|&x| x == 0 || x == 1);
        zero_one && self.row_sums().iter().all(|&s| s == 1) && self.col_sums().iter().all(|&s| s == 1)
    }

    /// Chords (i, j, multiplicity), 1-based, i < j.
    pub fn chords(&self) -> Vec<(usize, usize, i64)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.get(i, j) != 0 {
                    out.push((i + 1, j + 1, self.get(i, j)));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FillRule {
    Osc,
    Fan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChordMap {
    #[serde(rename = "M_O")]
    MO,
    #[serde(rename = "M_F")]
    MF,
    #[serde(rename = "M_VO")]
    MVO,
    #[serde(rename = "M_VF")]
    MVF,
}

impl ChordMap {
    pub fn family(self) -> Family {
        match self {
            ChordMap::MO => Family::Oscillating,
            ChordMap::MF => Family::Fan,
            _ => Family::Vacillating,
        }
    }

    /// The natural map for a family.
    pub fn for_family(f: Family) -> ChordMap {
        match f {
            Family::Oscillating => ChordMap::MO,
            Family::Fan => ChordMap::MF,
            Family::Vacillating => ChordMap::MVO,
        }
    }
}

/// dom(κ + ν − λ).
pub fn local_rule(lambda: &WeightVec, kappa: &WeightVec, nu: &WeightVec) -> Result<Partition, PromotionError> {
    Ok(dominant_representative(&kappa.add(nu)?.sub(lambda)?))
}

pub fn fill_value(
    rule: FillRule,
    lambda: &WeightVec,
    kappa: &WeightVec,
    nu: &WeightVec,
) -> Result<i64, PromotionError> {
    let neg = kappa.add(nu)?.sub(lambda)?.negative_count() as i64;
    Ok(match rule {
        FillRule::Osc => neg.min(1),
        FillRule::Fan => neg,
    })
}

fn weight(p: &Partition, r: usize) -> WeightVec {
    WeightVec(p.padded(r))
}

fn local_promote(t: &TableauSeq) -> TableauSeq {
    let n = t.len();
    let r = t.rank;
    let mut hat = Vec::with_capacity(n + 1);
    hat.push(Partition::empty());
    for j in 1..n {
        let next = local_rule(&weight(&t.steps[j], r), &weight(&hat[j - 1], r), &weight(&t.steps[j + 1], r))
            .expect("equal ranks");
        hat.push(next);
    }
    if n > 0 {
        hat.push(Partition::empty());
    }
    TableauSeq { family: t.family, rank: r, steps: hat }
}

pub fn promote(t: &TableauSeq) -> Result<TableauSeq, PromotionError> {
    if !t.is_weight_zero() {
        return Err(PromotionError::NotWeightZero);
    }
    match t.family {
        Family::Oscillating | Family::Fan => Ok(local_promote(t)),
        Family::Vacillating => {
            let o = iota_v_to_o(t)?;
            let o2 = local_promote(&local_promote(&o));
            Ok(iota_inverse(Embedding::VacToOsc, &o2)?)
        }
    }
}

/// Fan promotion routed through oscillating tableaux: ι⁻¹ ∘ pr^r ∘ ι.
pub fn promote_fan_virtual(f: &TableauSeq) -> Result<TableauSeq, PromotionError> {
    let mut o = iota_f_to_o(f)?;
    for _ in 0..f.rank {
        o = local_promote(&o);
    }
    Ok(iota_inverse(Embedding::FanToOsc, &o)?)
}

/// Promotion orbit of `t`, starting with `t` itself.
pub fn orbit(t: &TableauSeq) -> Result<Vec<TableauSeq>, PromotionError> {
    let mut out = vec![t.clone()];
    loop {
        let next = promote(out.last().unwrap())?;
        if &next == t {
            return Ok(out);
        }
        out.push(next);
        if out.len() > t.len().max(1) {
            return Ok(out);
        }
    }
}

/// Rows pr^0(T), …, pr^{n-1}(T); entry (i, j) is entry j − i of row i, indices mod n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromotionGrid {
    pub n: usize,
    pub rank: usize,
    pub rows: Vec<TableauSeq>,
}

impl PromotionGrid {
    pub fn entry(&self, i: usize, j: usize) -> &Partition {
        if self.n == 0 {
            return &self.rows[0].steps[0];
        }
        let row = &self.rows[i % self.n];
        &row.steps[(j + self.n - i % self.n) % self.n]
    }

    /// The (n+1)×(n+1) corner table.
    pub fn corners(&self) -> Vec<Vec<Partition>> {
        (0..=self.n).map(|i| (0..=self.n).map(|j| self.entry(i, j).clone()).collect()).collect()
    }
}

pub fn promotion_grid(t: &TableauSeq) -> Result<PromotionGrid, PromotionError> {
    let n = t.len();
    let mut rows = vec![t.clone()];
    for _ in 1..n {
        let next = promote(rows.last().unwrap())?;
        rows.push(next);
    }
    Ok(PromotionGrid { n, rank: t.rank, rows })
}

fn filled_from_grid(g: &PromotionGrid, rule: FillRule) -> FilledMatrix {
    let n = g.n;
    let r = g.rank;
    let mut m = FilledMatrix::zeros(n);
    for i in 1..=n {
        for j in 1..=n {
            let v = fill_value(
                rule,
                &weight(g.entry(i - 1, j - 1), r),
                &weight(g.entry(i, j - 1), r),
                &weight(g.entry(i - 1, j), r),
            )
            .expect("equal ranks");
            m.set(i - 1, j - 1, v);
        }
    }
    m
}

pub fn chord_matrix(map: ChordMap, t: &TableauSeq) -> Result<FilledMatrix, PromotionError> {
    if t.family != map.family() {
        return Err(PromotionError::WrongFamily { map, family: t.family });
    }
    if !t.is_weight_zero() {
        return Err(PromotionError::NotWeightZero);
    }
    match map {
        ChordMap::MO => Ok(filled_from_grid(&promotion_grid(t)?, FillRule::Osc)),
        ChordMap::MF => Ok(filled_from_grid(&promotion_grid(t)?, FillRule::Fan)),
        ChordMap::MVO => {
            let o = iota_v_to_o(t)?;
            Ok(blocksum(&chord_matrix(ChordMap::MO, &o)?, 2).expect("even dimension"))
        }
        ChordMap::MVF => {
            let f = iota_v_to_f(t)?;
            let mut m = blocksum(&chord_matrix(ChordMap::MF, &f)?, 2).expect("even dimension");
            let shift = 2 * (t.rank as i64 - 1);
            for i in 0..m.n() {
                let v = m.get(i, i) - shift;
                m.set(i, i, v);
            }
            Ok(m)
        }
    }
}

/// Toroidal shift: entry (i, j) moves to (i−1, j−1) mod n.
pub fn rotate_matrix(m: &FilledMatrix) -> FilledMatrix {
    let n = m.n();
    let mut out = FilledMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, m.get((i + 1) % n, (j + 1) % n));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystals::enumerate_zero;

    fn w(s: &str) -> WeightVec {
        Partition::parse_compact(s).unwrap().to_weight(s.len()).unwrap()
    }

    fn tab(f: Family, r: usize, s: &str) -> TableauSeq {
        TableauSeq::parse_compact(f, r, s).unwrap()
    }

    #[test]
    fn local_rule_examples() {
        assert_eq!(local_rule(&w("111"), &w("000"), &w("222")).unwrap().compact(3), "111");
        assert_eq!(local_rule(&w("222"), &w("111"), &w("311")).unwrap().compact(3), "200");
        assert_eq!(local_rule(&w("111"), &w("000"), &w("000")).unwrap().compact(3), "111");
        assert!(local_rule(&w("11"), &w("000"), &w("000")).is_err());
    }

    #[test]
    fn fill_examples() {
        assert_eq!(fill_value(FillRule::Fan, &w("111"), &w("000"), &w("000")).unwrap(), 3);
        assert_eq!(fill_value(FillRule::Osc, &w("1"), &w("0"), &w("0")).unwrap(), 1);
        assert_eq!(fill_value(FillRule::Osc, &w("0"), &w("0"), &w("0")).unwrap(), 0);
        assert_eq!(fill_value(FillRule::Fan, &w("0"), &w("0"), &w("0")).unwrap(), 0);
    }

    #[test]
    fn two_step_oscillating() {
        let t = tab(Family::Oscillating, 1, "0,1,0");
        let g = promotion_grid(&t).unwrap();
        assert_eq!(g.entry(0, 1).compact(1), "1");
        assert_eq!(g.entry(1, 2).compact(1), "1");
        for i in 0..3 {
            assert!(g.entry(i, i).is_empty());
        }
        let m = chord_matrix(ChordMap::MO, &t).unwrap();
        assert_eq!(m.entries, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn rotation_examples() {
        let m = FilledMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(rotate_matrix(&m), m);
        assert_eq!(rotate_matrix(&FilledMatrix::zeros(4)), FilledMatrix::zeros(4));
        let mut a = FilledMatrix::zeros(3);
        a.set(0, 1, 1);
        let mut b = FilledMatrix::zeros(3);
        b.set(2, 0, 1);
        assert_eq!(rotate_matrix(&a), b);
    }

    #[test]
    fn wrong_inputs() {
        let t = tab(Family::Oscillating, 1, "0,1");
        assert_eq!(promote(&t), Err(PromotionError::NotWeightZero));
        let t = tab(Family::Oscillating, 1, "0,1,0");
        assert!(matches!(chord_matrix(ChordMap::MF, &t), Err(PromotionError::WrongFamily { .. })));
        assert!(FilledMatrix::from_rows(vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn fan_promotion_matches_virtual_route() {
        for r in 1..=3 {
            for n in 0..=6 {
                for f in enumerate_zero(Family::Fan, r, n) {
                    assert_eq!(promote(&f).unwrap(), promote_fan_virtual(&f).unwrap(), "{f}");
                }
            }
        }
    }

    #[test]
    fn order_and_rotation_small() {
        for f in [Family::Oscillating, Family::Fan, Family::Vacillating] {
            for n in 0..=5 {
                for t in enumerate_zero(f, 2, n) {
                    let mut u = t.clone();
                    for _ in 0..n {
                        u = promote(&u).unwrap();
                    }
                    assert_eq!(u, t);
                    let map = ChordMap::for_family(f);
                    let m = chord_matrix(map, &t).unwrap();
                    assert!(m.is_symmetric() && m.has_zero_diagonal());
                    assert_eq!(chord_matrix(map, &promote(&t).unwrap()).unwrap(), rotate_matrix(&m));
                    let o = orbit(&t).unwrap();
                    assert!(n == 0 || n % o.len() == 0);
                }
            }
        }
    }
}
