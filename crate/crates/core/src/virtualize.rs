use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crystals::{CrystalError, Dir, Family, Kind, Letter, TableauSeq, Word};
use crate::weights::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VirtualError {
    #[error("expected a {expected:?} tableau, got {found:?}")]
    WrongFamily { expected: Family, found: Family },
    #[error("tableau does not have weight zero")]
    NotWeightZero,
    #[error("not in the image of the embedding: {0}")]
    NotInImage(String),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Embedding {
    FanToOsc,
    VacToOsc,
    VacToFan,
}

impl Embedding {
    pub fn source(self) -> Family {
        match self {
            Embedding::FanToOsc => Family::Fan,
            _ => Family::Vacillating,
        }
    }

    pub fn target(self) -> Family {
        match self {
            Embedding::VacToFan => Family::Fan,
            _ => Family::Oscillating,
        }
    }
}

/// How many target steps one source step becomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualImage {
    pub source_family: Family,
    pub target_family: Family,
    pub factor: usize,
}

impl VirtualImage {
    pub fn of(e: Embedding, r: usize) -> VirtualImage {
        let factor = match e {
            Embedding::FanToOsc => r,
            _ => 2,
        };
        VirtualImage { source_family: e.source(), target_family: e.target(), factor }
    }
}

/// Image of a spin letter, listed from the rightmost factor (increasing in the C order).
pub fn psi_spin(e: &Letter, r: usize) -> Result<Vec<Letter>, VirtualError> {
    let Letter::Spin(signs) = e else {
        return Err(CrystalError::NotInCrystal(e.to_string()).into());
    };
    if signs.len() != r {
        return Err(CrystalError::NotInCrystal(e.to_string()).into());
    }
    let mut out: Vec<Letter> = signs
        .iter()
        .enumerate()
        .map(|(k, &plus)| Letter::C(if plus { k as i32 + 1 } else { -(k as i32 + 1) }))
        .collect();
    out.sort_by_key(|x| x.order_key(r));
    Ok(out)
}

/// Image of a B letter as two C letters, rightmost factor first.
pub fn psi_vec(b: &Letter, r: usize) -> Result<[Letter; 2], VirtualError> {
    match *b {
        Letter::B(0) => Ok([Letter::C(-(r as i32)), Letter::C(r as i32)]),
        Letter::B(a) if b.belongs(r) => Ok([Letter::C(a), Letter::C(a)]),
        _ => Err(CrystalError::NotInCrystal(b.to_string()).into()),
    }
}

/// Letterwise image of a spin or B word inside the C vector crystal.
pub fn psi_word(w: &Word) -> Result<Word, VirtualError> {
    let mut letters = Vec::new();
    for x in &w.letters {
        match w.kind {
            Kind::Spin => letters.extend(psi_spin(x, w.rank)?),
            Kind::Bvec => letters.extend(psi_vec(x, w.rank)?),
            Kind::Cvec => return Err(CrystalError::BadWord("already a C word".into()).into()),
        }
    }
    Ok(Word::new(Kind::Cvec, w.rank, letters)?)
}

/// The squared operator below the last index, the plain one at the last index.
pub fn virtual_apply(w: &Word, i: usize, dir: Dir) -> Result<Option<Word>, VirtualError> {
    let once = w.apply(i, dir)?;
    if i == w.rank {
        return Ok(once);
    }
    Ok(match once {
        Some(x) => x.apply(i, dir)?,
        None => None,
    })
}

fn expect(t: &TableauSeq, family: Family) -> Result<(), VirtualError> {
    if t.family != family {
        return Err(VirtualError::WrongFamily { expected: family, found: t.family });
    }
    Ok(())
}

fn add_to(p: &[i32], k: usize, d: i32) -> Vec<i32> {
    let mut q = p.to_vec();
    q[k] += d;
    q
}

pub fn iota_f_to_o(f: &TableauSeq) -> Result<TableauSeq, VirtualError> {
    expect(f, Family::Fan)?;
    f.validate()?;
    let r = f.rank;
    let mut steps = vec![Partition::empty()];
    for w in f.steps.windows(2) {
        let (a, b) = (w[0].padded(r), w[1].padded(r));
        let mut letters: Vec<i32> = (0..r).map(|k| if b[k] > a[k] { k as i32 + 1 } else { -(k as i32 + 1) }).collect();
        letters.sort_by_key(|&x| Letter::C(x).order_key(r));
        let mut cur = a;
        for x in letters {
            cur = add_to(&cur, x.unsigned_abs() as usize - 1, x.signum());
            steps.push(Partition::new(cur.clone()).map_err(|e| VirtualError::NotInImage(e.to_string()))?);
        }
    }
    Ok(TableauSeq::new(Family::Oscillating, r, steps)?)
}

pub fn iota_v_to_o(v: &TableauSeq) -> Result<TableauSeq, VirtualError> {
    expect(v, Family::Vacillating)?;
    if !v.is_weight_zero() {
        return Err(VirtualError::NotWeightZero);
    }
    let r = v.rank;
    let mut steps = vec![Partition::empty()];
    for w in v.steps.windows(2) {
        let (a, b) = (w[0].padded(r), w[1].padded(r));
        let mut mid: Vec<i32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        if a == b {
            mid[r - 1] -= 1;
        }
        steps.push(Partition::new(mid).unwrap());
        steps.push(Partition::new(b.iter().map(|x| 2 * x).collect()).unwrap());
    }
    Ok(TableauSeq::new(Family::Oscillating, r, steps)?)
}

pub fn iota_v_to_f(v: &TableauSeq) -> Result<TableauSeq, VirtualError> {
    expect(v, Family::Vacillating)?;
    if !v.is_weight_zero() {
        return Err(VirtualError::NotWeightZero);
    }
    let r = v.rank;
    let mut steps = vec![Partition::empty()];
    for w in v.steps.windows(2) {
        let (a, b) = (w[0].padded(r), w[1].padded(r));
        let (sa, sb) = (w[0].size(), w[1].size());
        let base = if sa < sb { &a } else { &b };
        let mut mid: Vec<i32> = base.iter().map(|x| 2 * x + 1).collect();
        if sa == sb {
            mid[r - 1] -= 2;
        }
        steps.push(Partition::new(mid).unwrap());
        steps.push(Partition::new(b.iter().map(|x| 2 * x).collect()).unwrap());
    }
    Ok(TableauSeq::new(Family::Fan, r, steps)?)
}

pub fn iota(e: Embedding, t: &TableauSeq) -> Result<TableauSeq, VirtualError> {
    match e {
        Embedding::FanToOsc => iota_f_to_o(t),
        Embedding::VacToOsc => iota_v_to_o(t),
        Embedding::VacToFan => iota_v_to_f(t),
    }
}

/// The S with ι(S) = T, if there is one.
pub fn iota_inverse(e: Embedding, t: &TableauSeq) -> Result<TableauSeq, VirtualError> {
    expect(t, e.target())?;
    let r = t.rank;
    let k = VirtualImage::of(e, r).factor;
    if !t.len().is_multiple_of(k) {
        return Err(VirtualError::NotInImage(format!("length {} is not a multiple of {k}", t.len())));
    }
    let halve = e != Embedding::FanToOsc;
    let mut steps = Vec::new();
    for p in t.steps.iter().step_by(k) {
        if halve {
            if p.parts().iter().any(|x| x % 2 != 0) {
                return Err(VirtualError::NotInImage(format!("{p} has an odd part")));
            }
            steps.push(Partition::new(p.parts().iter().map(|x| x / 2).collect()).unwrap());
        } else {
            steps.push(p.clone());
        }
    }
    let s = TableauSeq::new(e.source(), r, steps).map_err(|err| VirtualError::NotInImage(err.to_string()))?;
    if iota(e, &s).ok().as_ref() != Some(t) {
        return Err(VirtualError::NotInImage("recovered tableau does not map back".into()));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystals::{all_words, alphabet, enumerate_zero, tableau_to_word, word_to_tableau};
    use std::collections::HashSet;

    fn tab(f: Family, r: usize, s: &str) -> TableauSeq {
        TableauSeq::parse_compact(f, r, s).unwrap()
    }

    fn spin(s: &str) -> Letter {
        Letter::spin_from_str(s).unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_spin(&spin("+++"), 3).unwrap(), vec![Letter::C(1), Letter::C(2), Letter::C(3)]);
        assert_eq!(psi_spin(&spin("---"), 3).unwrap(), vec![Letter::C(-3), Letter::C(-2), Letter::C(-1)]);
        assert_eq!(psi_spin(&spin("++-"), 3).unwrap(), vec![Letter::C(1), Letter::C(2), Letter::C(-3)]);
        assert_eq!(psi_vec(&Letter::B(1), 2).unwrap(), [Letter::C(1), Letter::C(1)]);
        assert_eq!(psi_vec(&Letter::B(0), 2).unwrap(), [Letter::C(-2), Letter::C(2)]);
        assert_eq!(psi_vec(&Letter::B(-2), 2).unwrap(), [Letter::C(-2), Letter::C(-2)]);
    }

    #[test]
    fn embeddings_on_examples() {
        assert_eq!(
            iota_f_to_o(&tab(Family::Fan, 2, "00,11,00")).unwrap(),
            tab(Family::Oscillating, 2, "00,10,11,10,00")
        );
        assert_eq!(iota_f_to_o(&tab(Family::Fan, 2, "00")).unwrap(), tab(Family::Oscillating, 2, "00"));
        let v = tab(Family::Vacillating, 3, "000,100,200,210,211,111,111,110,100,000");
        let o = iota_v_to_o(&v).unwrap();
        assert_eq!(o.compact(), "000,100,200,300,400,410,420,421,422,322,222,221,222,221,220,210,200,100,000");
        assert_eq!(iota_inverse(Embedding::VacToOsc, &o).unwrap(), v);
        assert_eq!(
            iota_v_to_o(&tab(Family::Vacillating, 1, "0,1,0")).unwrap(),
            tab(Family::Oscillating, 1, "0,1,2,1,0")
        );
        assert_eq!(
            iota_v_to_f(&tab(Family::Vacillating, 3, "000,100,000")).unwrap(),
            tab(Family::Fan, 3, "000,111,200,111,000")
        );
        let eq = tab(Family::Vacillating, 3, "000,100,110,111,111,110,100,000");
        assert_eq!(iota_v_to_f(&eq).unwrap().steps[7].compact(3), "331");
        assert_eq!(iota_v_to_o(&tab(Family::Vacillating, 2, "00,10,11,11,10,00")).unwrap().steps[5].compact(2), "21");
        assert_eq!(iota_v_to_f(&tab(Family::Vacillating, 2, "00")).unwrap(), tab(Family::Fan, 2, "00"));
    }

    #[test]
    fn not_in_image() {
        let o = tab(Family::Oscillating, 2, "00,10,00");
        assert!(matches!(iota_inverse(Embedding::FanToOsc, &o), Err(VirtualError::NotInImage(_))));
        let o = tab(Family::Oscillating, 1, "0,1,0");
        assert!(matches!(iota_inverse(Embedding::VacToOsc, &o), Err(VirtualError::NotInImage(_))));
        let v = tab(Family::Vacillating, 1, "0,1");
        assert_eq!(iota_v_to_o(&v), Err(VirtualError::NotWeightZero));
    }

    #[test]
    fn virtual_operators_intertwine() {
        for r in 1..=4 {
            for kind in [Kind::Spin, Kind::Bvec] {
                let image: HashSet<Word> = alphabet(kind, r)
                    .iter()
                    .map(|x| psi_word(&Word::new(kind, r, vec![x.clone()]).unwrap()).unwrap())
                    .collect();
                for x in alphabet(kind, r) {
                    let w = Word::new(kind, r, vec![x]).unwrap();
                    let pw = psi_word(&w).unwrap();
                    for i in 1..=r {
                        for dir in [Dir::Lower, Dir::Raise] {
                            let direct = w.apply(i, dir).unwrap().map(|y| psi_word(&y).unwrap());
                            let virt = virtual_apply(&pw, i, dir).unwrap();
                            assert_eq!(direct, virt);
                            if let Some(v) = virt {
                                assert!(image.contains(&v));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fan_embedding_agrees_with_letter_images() {
        for r in 1..=3 {
            for n in 0..=6 {
                for f in enumerate_zero(Family::Fan, r, n) {
                    let via_psi = word_to_tableau(&psi_word(&tableau_to_word(&f).unwrap()).unwrap()).unwrap();
                    assert_eq!(iota_f_to_o(&f).unwrap(), via_psi);
                }
            }
        }
    }

    #[test]
    fn embeddings_are_valid_injective_and_invertible() {
        for r in 1..=3 {
            for n in 0..=6 {
                let mut seen = HashSet::new();
                for f in enumerate_zero(Family::Fan, r, n) {
                    let o = iota_f_to_o(&f).unwrap();
                    assert_eq!(o.len(), r * n);
                    assert!(seen.insert(o.clone()));
                    assert_eq!(iota_inverse(Embedding::FanToOsc, &o).unwrap(), f);
                }
                let (mut so, mut sf) = (HashSet::new(), HashSet::new());
                for v in enumerate_zero(Family::Vacillating, r, n) {
                    let o = iota_v_to_o(&v).unwrap();
                    let f = iota_v_to_f(&v).unwrap();
                    assert!(so.insert(o.clone()) && sf.insert(f.clone()));
                    assert_eq!(iota_inverse(Embedding::VacToOsc, &o).unwrap(), v);
                    assert_eq!(iota_inverse(Embedding::VacToFan, &f).unwrap(), v);
                }
            }
        }
    }

    #[test]
    fn psi_preserves_highest_weight() {
        for r in 1..=2 {
            for w in all_words(Kind::Bvec, r, 3) {
                assert_eq!(w.is_highest(), psi_word(&w).unwrap().is_highest());
            }
        }
    }
}
