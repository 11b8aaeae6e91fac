use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crystals::{CrystalError, Family, TableauSeq};
use crate::promotion::FilledMatrix;
use crate::weights::{
    intersect_parts, is_horizontal_strip, is_vertical_strip, step_classify, union_parts, Partition, StepKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error("malformed cell for {rule:?}: {detail}")]
    Malformed { rule: RuleSet, detail: String },
    #[error("tableau does not have weight zero")]
    NotWeightZero,
    #[error("filling does not produce a valid tableau: {0}")]
    InvalidOutput(String),
    #[error("matrix dimension {n} is not divisible by {k}")]
    Dimension { n: usize, k: usize },
    #[error("row or column sums differ from {0}")]
    LineSum(i64),
    #[error("filling is not a staircase")]
    NotStaircase,
    #[error(transparent)]
    Crystal(#[from] CrystalError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleSet {
    ZeroOne,
    Burge,
    Rsk,
}

impl RuleSet {
    pub fn for_family(f: Family) -> RuleSet {
        match f {
            Family::Oscillating => RuleSet::ZeroOne,
            Family::Fan => RuleSet::Burge,
            Family::Vacillating => RuleSet::Rsk,
        }
    }

    /// Whether `outer` may follow `inner` along an edge of a cell.
    fn edge_ok(self, inner: &Partition, outer: &Partition) -> bool {
        match self {
            RuleSet::ZeroOne => matches!(step_classify(inner, outer), StepKind::Equal | StepKind::AddBox(_)),
            RuleSet::Burge => is_vertical_strip(inner, outer),
            RuleSet::Rsk => is_horizontal_strip(inner, outer),
        }
    }
}

fn malformed(rule: RuleSet, detail: String) -> GrowthError {
    GrowthError::Malformed { rule, detail }
}

fn diagram_union(p: &Partition, q: &Partition) -> Partition {
    let n = p.len().max(q.len());
    Partition::new((0..n).map(|i| p.part(i).max(q.part(i))).collect()).unwrap()
}

fn with_box(p: &Partition, row: usize, d: i32) -> Option<Partition> {
    let mut v = p.padded(row + 1);
    v[row] += d;
    Partition::new(v).ok()
}

/// The single row (0-based) where `p` and `q` differ.
fn differing_row(p: &Partition, q: &Partition) -> Option<usize> {
    let n = p.len().max(q.len());
    let rows: Vec<usize> = (0..n).filter(|&i| p.part(i) != q.part(i)).collect();
    (rows.len() == 1).then(|| rows[0])
}

/// β from γ (SW), δ (SE), α (NW) and the filling m.
pub fn cell_forward(
    rule: RuleSet,
    gamma: &Partition,
    delta: &Partition,
    alpha: &Partition,
    m: u32,
) -> Result<Partition, GrowthError> {
    if !rule.edge_ok(gamma, delta) || !rule.edge_ok(gamma, alpha) {
        return Err(malformed(rule, format!("γ={gamma} δ={delta} α={alpha}")));
    }
    match rule {
        RuleSet::ZeroOne => forward_01(gamma, delta, alpha, m),
        RuleSet::Burge => Ok(forward_carry(gamma, delta, alpha, m, true)),
        RuleSet::Rsk => Ok(forward_carry(gamma, delta, alpha, m, false)),
    }
}

fn forward_01(gamma: &Partition, delta: &Partition, alpha: &Partition, m: u32) -> Result<Partition, GrowthError> {
    let all_equal = gamma == delta && delta == alpha;
    if m > 1 || (m == 1 && !all_equal) {
        return Err(malformed(RuleSet::ZeroOne, format!("filling {m} with γ={gamma} δ={delta} α={alpha}")));
    }
    Ok(if all_equal {
        if m == 0 {
            gamma.clone()
        } else {
            with_box(gamma, 0, 1).unwrap()
        }
    } else if gamma == delta {
        alpha.clone()
    } else if gamma == alpha {
        delta.clone()
    } else if delta != alpha {
        diagram_union(delta, alpha)
    } else {
        let k = differing_row(gamma, delta).expect("single box step");
        with_box(delta, k + 1, 1)
            .ok_or_else(|| malformed(RuleSet::ZeroOne, format!("cannot add a box below row {}", k + 1)))?
    })
}

fn forward_carry(gamma: &Partition, delta: &Partition, alpha: &Partition, m: u32, burge: bool) -> Partition {
    let mut carry = m as i32;
    let mut beta = Vec::new();
    let mut i = 0;
    loop {
        let (g, d, a) = (gamma.part(i), delta.part(i), alpha.part(i));
        let (hi, lo) = (d.max(a), d.min(a));
        let b = if burge {
            let bump = i32::from(g == d && d == a).min(carry);
            carry = carry - bump + lo - g;
            hi + bump
        } else {
            let b = hi + carry;
            carry = lo - g;
            b
        };
        if b == 0 {
            break;
        }
        beta.push(b);
        i += 1;
    }
    Partition::new(beta).expect("forward rules produce partitions")
}

/// (γ, m) from β (NE), δ (SE), α (NW).
pub fn cell_backward(
    rule: RuleSet,
    beta: &Partition,
    delta: &Partition,
    alpha: &Partition,
) -> Result<(Partition, u32), GrowthError> {
    if !rule.edge_ok(delta, beta) || !rule.edge_ok(alpha, beta) {
        return Err(malformed(rule, format!("β={beta} δ={delta} α={alpha}")));
    }
    let out = match rule {
        RuleSet::ZeroOne => backward_01(beta, delta, alpha),
        RuleSet::Burge => backward_carry(beta, delta, alpha, true),
        RuleSet::Rsk => backward_carry(beta, delta, alpha, false),
    };
    out.ok_or_else(|| malformed(rule, format!("no preimage for β={beta} δ={delta} α={alpha}")))
}

fn backward_01(beta: &Partition, delta: &Partition, alpha: &Partition) -> Option<(Partition, u32)> {
    Some(if beta == delta && delta == alpha {
        (beta.clone(), 0)
    } else if beta == delta {
        (alpha.clone(), 0)
    } else if beta == alpha {
        (delta.clone(), 0)
    } else if delta != alpha {
        (intersect_parts(delta, alpha), 0)
    } else {
        let k = differing_row(beta, delta)?;
        if k == 0 {
            (delta.clone(), 1)
        } else {
            (with_box(delta, k - 1, -1)?, 0)
        }
    })
}

fn backward_carry(beta: &Partition, delta: &Partition, alpha: &Partition, burge: bool) -> Option<(Partition, u32)> {
    let len = beta.len();
    let mut gamma = vec![0; len];
    let mut carry = 0i32;
    for i in (0..len).rev() {
        let (b, d, a) = (beta.part(i), delta.part(i), alpha.part(i));
        let (hi, lo) = (d.max(a), d.min(a));
        if burge {
            let drop = i32::from(b == d && d == a).min(carry);
            gamma[i] = lo - drop;
            carry = carry - drop + b - hi;
        } else {
            gamma[i] = lo - carry;
            carry = b - hi;
        }
    }
    if carry < 0 {
        return None;
    }
    Some((Partition::new(gamma).ok()?, carry as u32))
}

/// Corner labels α_{i,j} for 0 ≤ j ≤ i ≤ n; row i counted from the top, the tableau on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerGrid {
    pub n: usize,
    pub corners: Vec<Vec<Partition>>,
    /// fillings[i][j] is the cell with SE corner (i, j+1), for j + 1 < i.
    pub fillings: Vec<Vec<u32>>,
}

impl CornerGrid {
    pub fn corner(&self, i: usize, j: usize) -> &Partition {
        &self.corners[i][j]
    }

    /// Lower-triangle filling, row k (0-based) holding k entries.
    pub fn triangle(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|k| (0..k).map(|j| self.fillings[k + 1][j]).collect()).collect()
    }

    pub fn matrix(&self) -> FilledMatrix {
        triangle_to_matrix(&self.triangle())
    }

    /// Labels along anti-diagonal i + (n − i) … read from the left border upward, one line per diagonal k.
    pub fn diagonals(&self, width: usize) -> Vec<String> {
        let n = self.n;
        (0..=n)
            .rev()
            .map(|k| {
                // corners (i, j) with i − j = n − k, listed from the left column
                let d = n - k;
                let labels: Vec<String> = (0..=k).map(|j| self.corners[j + d][j].compact(width)).collect();
                labels.join(",")
            })
            .collect()
    }
}

pub fn triangle_to_matrix(tri: &[Vec<u32>]) -> FilledMatrix {
    let n = tri.len();
    let mut m = FilledMatrix::zeros(n);
    for (i, row) in tri.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            m.set(i, j, v as i64);
            m.set(j, i, v as i64);
        }
    }
    m
}

pub fn matrix_to_triangle(m: &FilledMatrix) -> Result<Vec<Vec<u32>>, GrowthError> {
    let n = m.n();
    (0..n)
        .map(|i| (0..i).map(|j| u32::try_from(m.get(i, j)).map_err(|_| GrowthError::NotStaircase)).collect())
        .collect()
}

fn doubled(p: &Partition) -> Partition {
    union_parts(p, p)
}

/// Labels seeded on the diagonal and just below it.
fn seeds(t: &TableauSeq) -> (Vec<Partition>, Vec<Partition>) {
    let n = t.len();
    if t.family == Family::Vacillating {
        let diag: Vec<Partition> = t.steps.iter().map(doubled).collect();
        let sub = (0..n)
            .map(|k| {
                let (a, b) = (&t.steps[k], &t.steps[k + 1]);
                if a == b {
                    let last = a.len() - 1;
                    with_box(&doubled(a), last, -1).unwrap()
                } else {
                    doubled(&intersect_parts(a, b))
                }
            })
            .collect();
        (diag, sub)
    } else {
        let sub = (0..n).map(|k| intersect_parts(&t.steps[k], &t.steps[k + 1])).collect();
        (t.steps.clone(), sub)
    }
}

/// Backward sweep from the diagonal to the empty borders.
pub fn growth_diagram(t: &TableauSeq) -> Result<CornerGrid, GrowthError> {
    if !t.is_weight_zero() {
        return Err(GrowthError::NotWeightZero);
    }
    let n = t.len();
    let rule = RuleSet::for_family(t.family);
    let (diag, sub) = seeds(t);
    let mut corners: Vec<Vec<Partition>> = (0..=n).map(|i| vec![Partition::empty(); i + 1]).collect();
    for k in 0..=n {
        corners[k][k] = diag[k].clone();
    }
    for k in 0..n {
        corners[k + 1][k] = sub[k].clone();
    }
    let mut fillings: Vec<Vec<u32>> = (0..=n).map(|i| vec![0; i]).collect();
    for d in 2..=n {
        for j in 0..=n - d {
            let i = j + d;
            let beta = &corners[i - 1][j + 1];
            let delta = &corners[i][j + 1];
            let alpha = &corners[i - 1][j];
            let (gamma, m) = cell_backward(rule, beta, delta, alpha)?;
            corners[i][j] = gamma;
            fillings[i][j] = m;
        }
    }
    Ok(CornerGrid { n, corners, fillings })
}

/// G_O, G_F or G_V depending on the family.
pub fn growth_matrix(t: &TableauSeq) -> Result<FilledMatrix, GrowthError> {
    Ok(growth_diagram(t)?.matrix())
}

/// Forward sweep from empty borders; reads the tableau off the diagonal.
pub fn growth_inverse(family: Family, rank: usize, tri: &[Vec<u32>]) -> Result<TableauSeq, GrowthError> {
    let n = tri.len();
    if tri.iter().enumerate().any(|(k, row)| row.len() != k) {
        return Err(GrowthError::NotStaircase);
    }
    let rule = RuleSet::for_family(family);
    let mut corners: Vec<Vec<Partition>> = (0..=n).map(|i| vec![Partition::empty(); i + 1]).collect();
    let mut fillings: Vec<Vec<u32>> = (0..=n).map(|i| vec![0; i]).collect();
    for (k, row) in tri.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            fillings[k + 1][j] = v;
        }
    }
    for d in (2..=n).rev() {
        for j in 0..=n - d {
            let i = j + d;
            let beta = cell_forward(rule, &corners[i][j], &corners[i][j + 1], &corners[i - 1][j], fillings[i][j])?;
            corners[i - 1][j + 1] = beta;
        }
    }
    let diag: Vec<Partition> = (0..=n).map(|k| corners[k][k].clone()).collect();
    let steps = if family == Family::Vacillating {
        diag.iter()
            .map(|p| {
                if p.parts().iter().any(|x| x % 2 != 0) {
                    return Err(GrowthError::InvalidOutput(format!("{p} has an odd part")));
                }
                Ok(Partition::new(p.parts().iter().map(|x| x / 2).collect()).unwrap())
            })
            .collect::<Result<Vec<_>, _>>()?
    } else {
        diag
    };
    let t = TableauSeq::new(family, rank, steps).map_err(|e| GrowthError::InvalidOutput(e.to_string()))?;
    if !t.is_weight_zero() {
        return Err(GrowthError::InvalidOutput("does not end at the empty partition".into()));
    }
    let (_, sub) = seeds(&t);
    for k in 0..n {
        if corners[k + 1][k] != sub[k] {
            return Err(GrowthError::InvalidOutput(format!("label below the diagonal at step {}", k + 1)));
        }
    }
    Ok(t)
}

/// k×k block sums of a kn×kn matrix.
pub fn blocksum(m: &FilledMatrix, k: usize) -> Result<FilledMatrix, GrowthError> {
    let big = m.n();
    if k == 0 || !big.is_multiple_of(k) {
        return Err(GrowthError::Dimension { n: big, k });
    }
    let n = big / k;
    let mut out = FilledMatrix::zeros(n);
    for i in 0..big {
        for j in 0..big {
            let v = out.get(i / k, j / k) + m.get(i, j);
            out.set(i / k, j / k, v);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChainDir {
    SE,
    NE,
}

/// The zero-one kn×kn matrix with block sums `m` whose ones form SE or NE chains.
pub fn blowup(dir: ChainDir, m: &FilledMatrix, k: usize) -> Result<FilledMatrix, GrowthError> {
    let n = m.n();
    let kk = k as i64;
    if m.entries.iter().flatten().any(|&x| x < 0) || m.row_sums().iter().chain(m.col_sums().iter()).any(|&s| s != kk) {
        return Err(GrowthError::LineSum(kk));
    }
    // skewed partial sums, both starting from the diagonal block
    let mut rs = vec![vec![0i64; n]; n];
    let mut cs = vec![vec![0i64; n]; n];
    for (i, row) in rs.iter_mut().enumerate() {
        let mut acc = 0;
        for t in 0..n {
            let j = (i + t) % n;
            row[j] = acc;
            acc += m.get(i, j);
        }
    }
    #[allow(clippy::needless_range_loop)]
    for j in 0..n {
        let mut acc = 0;
        for t in 0..n {
            let i = (j + t) % n;
            cs[i][j] = acc;
            acc += m.get(i, j);
        }
    }
    let mut out = FilledMatrix::zeros(k * n);
    for i in 0..n {
        for j in 0..n {
            let (r, c, a) = (rs[i][j], cs[i][j], m.get(i, j));
            for s in 0..a {
                let (p, q) = match dir {
                    ChainDir::SE => (r + s, c + s),
                    ChainDir::NE => (kk - r - 1 - s, kk - c - a + s),
                };
                out.set(k * i + p as usize, k * j + q as usize, 1);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(s: &str) -> Partition {
        Partition::parse_compact(s).unwrap()
    }

    #[test]
    fn forward_examples() {
        assert_eq!(cell_forward(RuleSet::ZeroOne, &p("1"), &p("1"), &p("1"), 1).unwrap(), p("2"));
        let e = Partition::empty();
        assert_eq!(cell_forward(RuleSet::Burge, &e, &e, &e, 2).unwrap(), p("11"));
        assert_eq!(cell_forward(RuleSet::Rsk, &e, &e, &e, 2).unwrap(), p("2"));
        assert_eq!(cell_forward(RuleSet::ZeroOne, &p("1"), &p("2"), &p("11"), 0).unwrap(), p("21"));
        assert_eq!(cell_forward(RuleSet::ZeroOne, &p("1"), &p("2"), &p("2"), 0).unwrap(), p("21"));
        assert!(cell_forward(RuleSet::ZeroOne, &p("1"), &p("2"), &p("11"), 1).is_err());
        assert!(cell_forward(RuleSet::Burge, &e, &p("2"), &e, 0).is_err());
    }

    #[test]
    fn backward_examples() {
        assert_eq!(cell_backward(RuleSet::ZeroOne, &p("21"), &p("11"), &p("11")).unwrap(), (p("11"), 1));
        assert_eq!(cell_backward(RuleSet::Burge, &p("11"), &p("1"), &p("1")).unwrap(), (Partition::empty(), 0));
        let e = Partition::empty();
        assert_eq!(cell_backward(RuleSet::Rsk, &p("2"), &e, &e).unwrap(), (e.clone(), 2));
        assert!(cell_backward(RuleSet::Rsk, &p("11"), &e, &e).is_err());
    }

    #[test]
    fn blocksum_examples() {
        let m = FilledMatrix::from_rows(vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![1, 0, 0, 0], vec![0, 1, 0, 0]])
            .unwrap();
        let b = FilledMatrix::from_rows(vec![vec![0, 2], vec![2, 0]]).unwrap();
        assert_eq!(blocksum(&m, 2).unwrap(), b);
        assert_eq!(blocksum(&FilledMatrix::zeros(6), 3).unwrap(), FilledMatrix::zeros(2));
        assert!(blocksum(&FilledMatrix::zeros(5), 2).is_err());
        assert_eq!(blowup(ChainDir::SE, &b, 2).unwrap(), m);
        let ne = FilledMatrix::from_rows(vec![vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![1, 0, 0, 0]])
            .unwrap();
        assert_eq!(blowup(ChainDir::NE, &b, 2).unwrap(), ne);
        assert!(blowup(ChainDir::SE, &b, 3).is_err());
    }

    #[test]
    fn tiny_growth() {
        let t = TableauSeq::parse_compact(Family::Oscillating, 1, "0,1,0").unwrap();
        let m = growth_matrix(&t).unwrap();
        assert_eq!(m.entries, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(growth_inverse(Family::Oscillating, 1, &[vec![], vec![1]]).unwrap(), t);
        assert!(matches!(
            growth_inverse(Family::Oscillating, 1, &[vec![], vec![0]]),
            Err(GrowthError::InvalidOutput(_))
        ));
    }

    fn random_partition(rng: &mut StdRng) -> Partition {
        let len = rng.gen_range(0..=4);
        let mut v: Vec<i32> = (0..len).map(|_| rng.gen_range(0..=4)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    }

    fn random_strip(rng: &mut StdRng, rule: RuleSet, inner: &Partition) -> Partition {
        loop {
            let q = random_partition(rng);
            let cand = union_parts(inner, &q);
            let cand = match rule {
                RuleSet::ZeroOne => {
                    if rng.gen_bool(0.3) {
                        inner.clone()
                    } else {
                        let row = rng.gen_range(0..=inner.len());
                        match with_box(inner, row, 1) {
                            Some(x) => x,
                            None => continue,
                        }
                    }
                }
                _ => cand,
            };
            if rule.edge_ok(inner, &cand) {
                return cand;
            }
        }
    }

    #[test]
    fn random_cells_invert() {
        let mut rng = StdRng::seed_from_u64(7);
        for rule in [RuleSet::ZeroOne, RuleSet::Burge, RuleSet::Rsk] {
            for _ in 0..3000 {
                let g = random_partition(&mut rng);
                let d = random_strip(&mut rng, rule, &g);
                let a = random_strip(&mut rng, rule, &g);
                let m = if rule == RuleSet::ZeroOne {
                    u32::from(g == d && d == a && rng.gen_bool(0.5))
                } else {
                    rng.gen_range(0..=3)
                };
                let b = cell_forward(rule, &g, &d, &a, m).unwrap();
                assert!(rule.edge_ok(&d, &b) && rule.edge_ok(&a, &b));
                assert_eq!(cell_backward(rule, &b, &d, &a).unwrap(), (g, m), "{rule:?}");
            }
        }
    }
}
