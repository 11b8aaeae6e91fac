use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::weights::{Partition, WeightVec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("operator index {i} out of range 1..={r}")]
    IndexOutOfRange { i: usize, r: usize },
    #[error("{0} is not an element of this crystal")]
    NotInCrystal(String),
    #[error("word is not highest weight")]
    NotHighest,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("bad word: {0}")]
    BadWord(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Spin,
    Cvec,
    Bvec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Raise,
    Lower,
}

/// Spin letters are sign tuples (true = +); vector letters use i for i, -i for ī and 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Letter {
    Spin(Vec<bool>),
    C(i32),
    B(i32),
}

impl Letter {
    pub fn kind(&self) -> Kind {
        match self {
            Letter::Spin(_) => Kind::Spin,
            Letter::C(_) => Kind::Cvec,
            Letter::B(_) => Kind::Bvec,
        }
    }

    pub fn spin_from_str(s: &str) -> Result<Letter, CrystalError> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(true),
                '-' | '−' => Ok(false),
                _ => Err(CrystalError::NotInCrystal(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Letter::Spin)
    }

    pub fn belongs(&self, r: usize) -> bool {
        let r = r as i32;
        match *self {
            Letter::Spin(ref s) => s.len() == r as usize,
            Letter::C(a) => a != 0 && a.abs() <= r,
            Letter::B(a) => a.abs() <= r,
        }
    }

    /// Position in 1 < … < r (< 0) < r̄ < … < 1̄.
    pub fn order_key(&self, r: usize) -> i32 {
        let r = r as i32;
        match *self {
            Letter::C(a) if a > 0 => a,
            Letter::C(a) => 2 * r + 1 + a,
            Letter::B(a) if a > 0 => a,
            Letter::B(0) => r + 1,
            Letter::B(a) => 2 * r + 2 + a,
            Letter::Spin(_) => panic!("spin letters are not totally ordered"),
        }
    }

    /// Weight, doubled for spin letters.
    pub fn weight(&self, r: usize) -> WeightVec {
        let mut v = vec![0; r];
        match *self {
            Letter::Spin(ref s) => {
                for (k, &plus) in s.iter().enumerate() {
                    v[k] = if plus { 1 } else { -1 };
                }
            }
            Letter::C(a) | Letter::B(a) => {
                if a != 0 {
                    v[a.unsigned_abs() as usize - 1] = a.signum();
                }
            }
        }
        WeightVec(v)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Spin(s) => {
                let t: String = s.iter().map(|&p| if p { '+' } else { '-' }).collect();
                write!(f, "({t})")
            }
            Letter::C(a) | Letter::B(a) => {
                if *a < 0 {
                    write!(f, "{}\u{0304}", -a)
                } else {
                    write!(f, "{a}")
                }
            }
        }
    }
}

fn check_index(r: usize, i: usize) -> Result<(), CrystalError> {
    if i == 0 || i > r {
        return Err(CrystalError::IndexOutOfRange { i, r });
    }
    Ok(())
}

/// e_i or f_i on a single letter.
pub fn apply_letter_op(r: usize, i: usize, dir: Dir, x: &Letter) -> Result<Option<Letter>, CrystalError> {
    check_index(r, i)?;
    if !x.belongs(r) {
        return Err(CrystalError::NotInCrystal(x.to_string()));
    }
    Ok(letter_op(r, i, dir, x))
}

fn letter_op(r: usize, i: usize, dir: Dir, x: &Letter) -> Option<Letter> {
    let (ri, ii) = (r as i32, i as i32);
    match (x, dir) {
        (Letter::Spin(s), _) => {
            let mut s = s.clone();
            if i < r {
                let want = dir == Dir::Lower;
                if s[i - 1] == want && s[i] != want {
                    s.swap(i - 1, i);
                    return Some(Letter::Spin(s));
                }
                None
            } else {
                let want = dir == Dir::Lower;
                if s[r - 1] == want {
                    s[r - 1] = !want;
                    return Some(Letter::Spin(s));
                }
                None
            }
        }
        (&Letter::C(a), Dir::Lower) | (&Letter::B(a), Dir::Lower) if i < r => {
            let b = if a == ii {
                ii + 1
            } else if a == -(ii + 1) {
                -ii
            } else {
                return None;
            };
            Some(rebuild(x, b))
        }
        (&Letter::C(a), Dir::Raise) | (&Letter::B(a), Dir::Raise) if i < r => {
            let b = if a == ii + 1 {
                ii
            } else if a == -ii {
                -(ii + 1)
            } else {
                return None;
            };
            Some(rebuild(x, b))
        }
        (&Letter::C(a), Dir::Lower) => (a == ri).then_some(Letter::C(-ri)),
        (&Letter::C(a), Dir::Raise) => (a == -ri).then_some(Letter::C(ri)),
        (&Letter::B(a), Dir::Lower) => {
            if a == ri {
                Some(Letter::B(0))
            } else if a == 0 {
                Some(Letter::B(-ri))
            } else {
                None
            }
        }
        (&Letter::B(a), Dir::Raise) => {
            if a == -ri {
                Some(Letter::B(0))
            } else if a == 0 {
                Some(Letter::B(ri))
            } else {
                None
            }
        }
    }
}

fn rebuild(x: &Letter, a: i32) -> Letter {
    match x {
        Letter::C(_) => Letter::C(a),
        _ => Letter::B(a),
    }
}

/// (ε_i, φ_i) of a single letter.
pub fn letter_string_stats(r: usize, i: usize, x: &Letter) -> (usize, usize) {
    let count = |dir| {
        let mut k = 0;
        let mut cur = x.clone();
        while let Some(y) = letter_op(r, i, dir, &cur) {
            cur = y;
            k += 1;
        }
        k
    };
    (count(Dir::Raise), count(Dir::Lower))
}

/// A tensor word. `letters[0]` is the rightmost tensor factor u_1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    pub kind: Kind,
    pub rank: usize,
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(kind: Kind, rank: usize, letters: Vec<Letter>) -> Result<Word, CrystalError> {
        if rank == 0 {
            return Err(CrystalError::BadWord("rank must be positive".into()));
        }
        for x in &letters {
            if x.kind() != kind || !x.belongs(rank) {
                return Err(CrystalError::NotInCrystal(x.to_string()));
            }
        }
        Ok(Word { kind, rank, letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> WeightVec {
        let mut w = WeightVec::zero(self.rank);
        for x in &self.letters {
            w = w.add(&x.weight(self.rank)).unwrap();
        }
        w
    }

    /// (ε_i, φ_i) of each left part u_n ⊗ … ⊗ u_k, indexed by k-1.
    fn left_stats(&self, i: usize) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = vec![(0, 0); n];
        for k in (0..n).rev() {
            let (ec, pc) = letter_string_stats(self.rank, i, &self.letters[k]);
            out[k] = if k + 1 == n {
                (ec, pc)
            } else {
                let (eb, pb) = out[k + 1];
                (ec + eb.saturating_sub(pc), pb + pc.saturating_sub(eb))
            };
        }
        out
    }

    pub fn string_stats(&self, i: usize) -> Result<(usize, usize), CrystalError> {
        check_index(self.rank, i)?;
        Ok(self.left_stats(i).first().copied().unwrap_or((0, 0)))
    }

    /// e_i or f_i on the whole tensor product.
    pub fn apply(&self, i: usize, dir: Dir) -> Result<Option<Word>, CrystalError> {
        check_index(self.rank, i)?;
        let n = self.len();
        if n == 0 {
            return Ok(None);
        }
        let stats = self.left_stats(i);
        let mut k = 0;
        while k + 1 < n {
            let (_, pc) = letter_string_stats(self.rank, i, &self.letters[k]);
            let (eb, _) = stats[k + 1];
            let on_right = match dir {
                Dir::Lower => pc > eb,
                Dir::Raise => pc >= eb,
            };
            if on_right {
                break;
            }
            k += 1;
        }
        Ok(letter_op(self.rank, i, dir, &self.letters[k]).map(|y| {
            let mut letters = self.letters.clone();
            letters[k] = y;
            Word { kind: self.kind, rank: self.rank, letters }
        }))
    }

    pub fn is_highest(&self) -> bool {
        (1..=self.rank).all(|i| self.apply(i, Dir::Raise).unwrap().is_none())
    }

    /// Every prefix u_1 + … + u_q has dominant weight.
    pub fn prefix_dominant(&self) -> bool {
        let mut w = WeightVec::zero(self.rank);
        for x in &self.letters {
            w = w.add(&x.weight(self.rank)).unwrap();
            if !w.is_dominant() {
                return false;
            }
        }
        true
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LetterRepr {
    Int(i32),
    Str(String),
}

#[derive(Serialize, Deserialize)]
struct WordRepr {
    kind: Kind,
    r: usize,
    letters: Vec<LetterRepr>,
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let letters = self
            .letters
            .iter()
            .map(|x| match x {
                Letter::Spin(v) => LetterRepr::Str(v.iter().map(|&p| if p { '+' } else { '-' }).collect()),
                Letter::C(a) | Letter::B(a) => LetterRepr::Int(*a),
            })
            .collect();
        WordRepr { kind: self.kind, r: self.rank, letters }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = WordRepr::deserialize(d)?;
        let letters = repr
            .letters
            .into_iter()
            .map(|l| match (repr.kind, l) {
                (Kind::Spin, LetterRepr::Str(s)) => Letter::spin_from_str(&s),
                (Kind::Cvec, LetterRepr::Int(a)) => Ok(Letter::C(a)),
                (Kind::Bvec, LetterRepr::Int(a)) => Ok(Letter::B(a)),
                _ => Err(CrystalError::BadWord("letter does not match kind".into())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Word::new(repr.kind, repr.r, letters).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    #[serde(alias = "osc")]
    Oscillating,
    Fan,
    #[serde(alias = "vac")]
    Vacillating,
}

impl Family {
    pub fn kind(self) -> Kind {
        match self {
            Family::Oscillating => Kind::Cvec,
            Family::Fan => Kind::Spin,
            Family::Vacillating => Kind::Bvec,
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            Family::Oscillating => "osc",
            Family::Fan => "fan",
            Family::Vacillating => "vac",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "osc" | "oscillating" => Ok(Family::Oscillating),
            "fan" | "fans" => Ok(Family::Fan),
            "vac" | "vacillating" => Ok(Family::Vacillating),
            _ => Err(format!("unknown family {s:?}")),
        }
    }
}

/// Sequence of partitions starting at ∅. Fan entries are doubled weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct TableauSeq {
    pub family: Family,
    pub rank: usize,
    pub steps: Vec<Partition>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    family: Family,
    r: usize,
    steps: Vec<Partition>,
}

impl TryFrom<TableauRepr> for TableauSeq {
    type Error = CrystalError;
    fn try_from(t: TableauRepr) -> Result<Self, Self::Error> {
        TableauSeq::new(t.family, t.r, t.steps)
    }
}

impl From<TableauSeq> for TableauRepr {
    fn from(t: TableauSeq) -> Self {
        TableauRepr { family: t.family, r: t.rank, steps: t.steps }
    }
}

/// Whether `a -> b` is an allowed step for the family in rank r.
pub fn valid_step(family: Family, r: usize, a: &Partition, b: &Partition) -> bool {
    if a.len() > r || b.len() > r {
        return false;
    }
    let diffs: Vec<i32> = (0..r).map(|k| b.part(k) - a.part(k)).collect();
    let moved = diffs.iter().filter(|&&d| d != 0).count();
    let unit = moved == 1 && diffs.iter().all(|d| d.abs() <= 1);
    match family {
        Family::Oscillating => unit,
        Family::Fan => diffs.iter().all(|d| d.abs() == 1),
        Family::Vacillating => unit || (moved == 0 && a.len() == r),
    }
}

impl TableauSeq {
    pub fn new(family: Family, rank: usize, steps: Vec<Partition>) -> Result<TableauSeq, CrystalError> {
        let t = TableauSeq { family, rank, steps };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<(), CrystalError> {
        if self.rank == 0 {
            return Err(CrystalError::InvalidTableau("rank must be positive".into()));
        }
        match self.steps.first() {
            Some(p) if p.is_empty() => {}
            _ => return Err(CrystalError::InvalidTableau("must start at the empty partition".into())),
        }
        for (q, w) in self.steps.windows(2).enumerate() {
            if !valid_step(self.family, self.rank, &w[0], &w[1]) {
                return Err(CrystalError::InvalidTableau(format!(
                    "step {} -> {} at position {} is not a {} step",
                    w[0],
                    w[1],
                    q + 1,
                    self.family.short()
                )));
            }
        }
        Ok(())
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_weight_zero(&self) -> bool {
        self.steps.last().is_some_and(|p| p.is_empty())
    }

    /// Compact notation, e.g. "000,111,220,111,000".
    pub fn compact(&self) -> String {
        let v: Vec<String> = self.steps.iter().map(|p| p.compact(self.rank)).collect();
        v.join(",")
    }

    pub fn parse_compact(family: Family, rank: usize, s: &str) -> Result<TableauSeq, CrystalError> {
        let steps = s
            .split(',')
            .map(|t| Partition::parse_compact(t).map_err(|e| CrystalError::InvalidTableau(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        TableauSeq::new(family, rank, steps)
    }
}

impl fmt::Display for TableauSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact())
    }
}

pub fn word_to_tableau(w: &Word) -> Result<TableauSeq, CrystalError> {
    if !w.is_highest() {
        return Err(CrystalError::NotHighest);
    }
    let family = match w.kind {
        Kind::Cvec => Family::Oscillating,
        Kind::Spin => Family::Fan,
        Kind::Bvec => Family::Vacillating,
    };
    let mut cur = WeightVec::zero(w.rank);
    let mut steps = vec![Partition::empty()];
    for x in &w.letters {
        cur = cur.add(&x.weight(w.rank)).unwrap();
        steps.push(cur.to_partition().map_err(|_| CrystalError::NotHighest)?);
    }
    TableauSeq::new(family, w.rank, steps)
}

pub fn tableau_to_word(t: &TableauSeq) -> Result<Word, CrystalError> {
    t.validate()?;
    let r = t.rank;
    let letters = t
        .steps
        .windows(2)
        .map(|w| {
            let d: Vec<i32> = (0..r).map(|k| w[1].part(k) - w[0].part(k)).collect();
            match t.family {
                Family::Fan => Letter::Spin(d.iter().map(|&x| x > 0).collect()),
                _ => {
                    let a = d.iter().enumerate().find(|(_, &x)| x != 0).map(|(k, &x)| (k as i32 + 1) * x).unwrap_or(0);
                    if t.family == Family::Oscillating {
                        Letter::C(a)
                    } else {
                        Letter::B(a)
                    }
                }
            }
        })
        .collect();
    Word::new(t.family.kind(), r, letters)
}

/// Allowed next partitions in increasing lexicographic order.
fn successors(family: Family, r: usize, p: &[i32]) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let ok = |q: &[i32]| q.iter().all(|&x| x >= 0) && q.windows(2).all(|w| w[0] >= w[1]);
    match family {
        Family::Fan => {
            for mask in 0..(1u32 << r) {
                let q: Vec<i32> = (0..r).map(|k| p[k] + if mask >> k & 1 == 1 { 1 } else { -1 }).collect();
                if ok(&q) {
                    out.push(q);
                }
            }
        }
        _ => {
            for k in 0..r {
                for s in [1, -1] {
                    let mut q = p.to_vec();
                    q[k] += s;
                    if ok(&q) {
                        out.push(q);
                    }
                }
            }
            if family == Family::Vacillating && p[r - 1] > 0 {
                out.push(p.to_vec());
            }
        }
    }
    out.sort();
    out
}

fn can_close(family: Family, p: &[i32], remaining: usize) -> bool {
    let need = match family {
        Family::Fan => p.first().copied().unwrap_or(0),
        _ => p.iter().sum(),
    };
    need as usize <= remaining
}

fn extend(family: Family, r: usize, n: usize, path: &mut Vec<Vec<i32>>, out: &mut Vec<TableauSeq>) {
    if path.len() == n + 1 {
        if path.last().unwrap().iter().all(|&x| x == 0) {
            let steps = path.iter().map(|p| Partition::new(p.clone()).unwrap()).collect();
            out.push(TableauSeq { family, rank: r, steps });
        }
        return;
    }
    let remaining = n + 1 - path.len();
    for q in successors(family, r, path.last().unwrap()) {
        if can_close(family, &q, remaining - 1) {
            path.push(q);
            extend(family, r, n, path, out);
            path.pop();
        }
    }
}

fn prefixes(family: Family, r: usize, n: usize, depth: usize) -> Vec<Vec<Vec<i32>>> {
    let mut layer = vec![vec![vec![0; r]]];
    for _ in 0..depth.min(n) {
        let mut next = Vec::new();
        for path in layer {
            let remaining = n + 1 - path.len();
            for q in successors(family, r, path.last().unwrap()) {
                if can_close(family, &q, remaining - 1) {
                    let mut p = path.clone();
                    p.push(q);
                    next.push(p);
                }
            }
        }
        layer = next;
    }
    layer
}

/// All weight-zero members of a family of length n, in lexicographic order of steps.
pub fn enumerate_zero(family: Family, r: usize, n: usize) -> Vec<TableauSeq> {
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    extend(family, r, n, &mut vec![vec![0; r]], &mut out);
    out
}

/// Same result as `enumerate_zero`, split over workers by fixing a step prefix.
pub fn enumerate_zero_par(family: Family, r: usize, n: usize) -> Vec<TableauSeq> {
    if r == 0 {
        return Vec::new();
    }
    prefixes(family, r, n, 4)
        .into_par_iter()
        .flat_map_iter(|mut path| {
            let mut out = Vec::new();
            extend(family, r, n, &mut path, &mut out);
            out
        })
        .collect()
}

/// Every word of length n over the crystal, for brute-force checks.
pub fn all_words(kind: Kind, r: usize, n: usize) -> Vec<Word> {
    let alphabet = alphabet(kind, r);
    let mut words = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w: Vec<Letter>| {
                alphabet.iter().map(move |x| {
                    let mut v = w.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    words.into_iter().map(|letters| Word { kind, rank: r, letters }).collect()
}

pub fn alphabet(kind: Kind, r: usize) -> Vec<Letter> {
    let ri = r as i32;
    match kind {
        Kind::Spin => (0..(1u32 << r)).map(|m| Letter::Spin((0..r).map(|k| m >> k & 1 == 0).collect())).collect(),
        Kind::Cvec => (1..=ri).chain((1..=ri).rev().map(|a| -a)).map(Letter::C).collect(),
        Kind::Bvec => (1..=ri).chain([0]).chain((1..=ri).rev().map(|a| -a)).map(Letter::B).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{RootSystemData, RootType};

    fn spin(s: &str) -> Letter {
        Letter::spin_from_str(s).unwrap()
    }

    fn tab(f: Family, r: usize, s: &str) -> TableauSeq {
        TableauSeq::parse_compact(f, r, s).unwrap()
    }

    #[test]
    fn letter_operators() {
        assert_eq!(apply_letter_op(2, 2, Dir::Lower, &Letter::C(2)).unwrap(), Some(Letter::C(-2)));
        assert_eq!(apply_letter_op(2, 2, Dir::Lower, &Letter::B(0)).unwrap(), Some(Letter::B(-2)));
        assert_eq!(apply_letter_op(3, 1, Dir::Lower, &spin("+-+")).unwrap(), Some(spin("-++")));
        assert_eq!(apply_letter_op(2, 1, Dir::Lower, &Letter::C(-2)).unwrap(), Some(Letter::C(-1)));
        assert!(apply_letter_op(2, 3, Dir::Lower, &Letter::C(1)).is_err());
        assert!(apply_letter_op(2, 1, Dir::Lower, &Letter::C(3)).is_err());
    }

    #[test]
    fn string_lengths() {
        assert_eq!(letter_string_stats(2, 1, &Letter::C(1)), (0, 1));
        assert_eq!(letter_string_stats(2, 2, &Letter::B(2)), (0, 2));
        assert_eq!(letter_string_stats(2, 2, &spin("++")), (0, 1));
    }

    #[test]
    fn tensor_rule_acts_on_the_right_factor() {
        let w = Word::new(Kind::Cvec, 1, vec![Letter::C(1), Letter::C(1)]).unwrap();
        let got = w.apply(1, Dir::Lower).unwrap().unwrap();
        assert_eq!(got.letters, vec![Letter::C(-1), Letter::C(1)]);
    }

    #[test]
    fn example_fan_word() {
        // u_1 = (+,+,+) is the rightmost factor
        let w = Word::new(Kind::Spin, 3, vec![spin("+++"), spin("++-"), spin("--+"), spin("---")]).unwrap();
        assert_eq!(w.weight(), WeightVec::zero(3));
        assert!(w.is_highest());
        assert_eq!(word_to_tableau(&w).unwrap(), tab(Family::Fan, 3, "000,111,220,111,000"));
        // weight zero and highest: a one-element component
        for i in 1..=3 {
            assert_eq!(w.apply(i, Dir::Lower).unwrap(), None);
        }
        let v = Word::new(Kind::Spin, 3, vec![spin("+++"), spin("++-"), spin("--+"), spin("+++")]).unwrap();
        let low = v.apply(3, Dir::Lower).unwrap().unwrap();
        let changed = low.letters.iter().zip(&v.letters).filter(|(a, b)| a != b).count();
        assert_eq!(changed, 1);
        assert_eq!(low.apply(3, Dir::Raise).unwrap().unwrap(), v);
    }

    #[test]
    fn small_highest_checks() {
        assert!(Word::new(Kind::Cvec, 2, vec![Letter::C(1)]).unwrap().is_highest());
        assert!(!Word::new(Kind::Cvec, 2, vec![Letter::C(2)]).unwrap().is_highest());
        assert_eq!(Word::new(Kind::Cvec, 2, vec![]).unwrap().weight(), WeightVec::zero(2));
        assert_eq!(Letter::C(-1).weight(2).0, vec![-1, 0]);
    }

    #[test]
    fn tableau_word_round_trip() {
        let w = Word::new(Kind::Cvec, 1, vec![Letter::C(1), Letter::C(-1)]).unwrap();
        assert_eq!(word_to_tableau(&w).unwrap(), tab(Family::Oscillating, 1, "0,1,0"));
        let v = tab(Family::Vacillating, 3, "000,100,200,210,211,111,111,110,100,000");
        let vw = tableau_to_word(&v).unwrap();
        assert_eq!(vw.len(), 9);
        assert_eq!(word_to_tableau(&vw).unwrap(), v);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_zero(Family::Fan, 2, 4).len(), 3);
        assert_eq!(enumerate_zero(Family::Fan, 2, 8).len(), 84);
        let v = enumerate_zero(Family::Vacillating, 1, 2);
        assert_eq!(v, vec![tab(Family::Vacillating, 1, "0,1,0")]);
        for f in [Family::Oscillating, Family::Fan, Family::Vacillating] {
            for n in 0..=6 {
                assert_eq!(enumerate_zero(f, 2, n), enumerate_zero_par(f, 2, n));
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        for f in [Family::Oscillating, Family::Fan, Family::Vacillating] {
            let all = enumerate_zero(f, 2, 6);
            for t in &all {
                t.validate().unwrap();
                assert!(t.is_weight_zero());
            }
            let keys: Vec<Vec<Vec<i32>>> = all.iter().map(|t| t.steps.iter().map(|p| p.padded(2)).collect()).collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn partial_inverses_and_weight_shift() {
        for (kind, rt) in [(Kind::Spin, RootType::B), (Kind::Cvec, RootType::C), (Kind::Bvec, RootType::B)] {
            for r in 1..=3 {
                let roots = RootSystemData::new(rt, r);
                for n in 1..=if kind == Kind::Spin { 3 } else { 4 } {
                    for w in all_words(kind, r, n) {
                        for i in 1..=r {
                            if let Some(y) = w.apply(i, Dir::Lower).unwrap() {
                                assert_eq!(y.apply(i, Dir::Raise).unwrap().as_ref(), Some(&w));
                                let mut shift = roots.simple_root(i).clone();
                                if kind == Kind::Spin {
                                    shift = shift.scale(2);
                                }
                                assert_eq!(y.weight(), w.weight().sub(&shift).unwrap());
                            }
                            if let Some(y) = w.apply(i, Dir::Raise).unwrap() {
                                assert_eq!(y.apply(i, Dir::Lower).unwrap().as_ref(), Some(&w));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn string_stats_match_iteration() {
        for r in 1..=2 {
            for w in all_words(Kind::Bvec, r, 3) {
                for i in 1..=r {
                    let (e, p) = w.string_stats(i).unwrap();
                    let count = |dir| {
                        let mut k = 0;
                        let mut cur = w.clone();
                        while let Some(y) = cur.apply(i, dir).unwrap() {
                            cur = y;
                            k += 1;
                        }
                        k
                    };
                    assert_eq!((e, p), (count(Dir::Raise), count(Dir::Lower)));
                }
            }
        }
    }

    #[test]
    fn minuscule_highest_is_prefix_dominance() {
        for r in 1..=3 {
            for n in 0..=4 {
                for kind in [Kind::Cvec, Kind::Spin] {
                    if kind == Kind::Spin && n > 3 {
                        continue;
                    }
                    for w in all_words(kind, r, n) {
                        assert_eq!(w.is_highest(), w.prefix_dominant(), "{:?}", w);
                    }
                }
            }
        }
    }

    #[test]
    fn vacillating_highest_words_match_tableaux() {
        for r in 1..=2 {
            for n in 0..=6 {
                let mut from_words: Vec<TableauSeq> = all_words(Kind::Bvec, r, n)
                    .iter()
                    .filter(|w| w.is_highest() && w.weight() == WeightVec::zero(r))
                    .map(|w| word_to_tableau(w).unwrap())
                    .collect();
                from_words.sort_by_key(|t| t.steps.iter().map(|p| p.padded(r)).collect::<Vec<_>>());
                assert_eq!(from_words, enumerate_zero(Family::Vacillating, r, n), "r={r} n={n}");
            }
        }
    }

    #[test]
    fn invalid_tableaux_rejected() {
        assert!(TableauSeq::parse_compact(Family::Oscillating, 1, "0,1,1").is_err());
        assert!(TableauSeq::parse_compact(Family::Vacillating, 2, "00,10,10").is_err());
        assert!(TableauSeq::parse_compact(Family::Vacillating, 1, "0,1,1,0").is_ok());
        assert!(TableauSeq::parse_compact(Family::Fan, 2, "00,10").is_err());
        assert!(TableauSeq::parse_compact(Family::Fan, 2, "1").is_err());
    }

    #[test]
    fn json_forms() {
        let w = Word::new(Kind::Spin, 2, vec![spin("++"), spin("--")]).unwrap();
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"kind":"spin","r":2,"letters":["++","--"]}"#);
        assert_eq!(serde_json::from_str::<Word>(&s).unwrap(), w);
        let b: Word = serde_json::from_str(r#"{"kind":"bvec","r":2,"letters":[1,0,-1]}"#).unwrap();
        assert_eq!(b.letters, vec![Letter::B(1), Letter::B(0), Letter::B(-1)]);
        let t = tab(Family::Vacillating, 1, "0,1,0");
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"family":"vacillating","r":1,"steps":[[],[1],[]]}"#);
        assert_eq!(serde_json::from_str::<TableauSeq>(&s).unwrap(), t);
        assert!(serde_json::from_str::<TableauSeq>(r#"{"family":"osc","r":1,"steps":[[],[]]}"#).is_err());
    }
}
