use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crystals::{enumerate_zero, tableau_to_word, CrystalError, Dir, Family, Kind, Letter, TableauSeq, Word};
use crate::promotion::{promote, PromotionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SievingError {
    #[error("polynomial division left a remainder")]
    Remainder,
    #[error("coefficient overflow")]
    Overflow,
    #[error("letters do not match the crystal")]
    LetterMismatch,
    #[error("n must be at least 1")]
    EmptyProduct,
    #[error("promotion does not have order dividing {order} on {tableau}")]
    ActionOrder { order: usize, tableau: String },
    #[error(transparent)]
    Crystal(#[from] CrystalError),
    #[error(transparent)]
    Promotion(#[from] PromotionError),
}

/// Exact polynomial in q; `coeffs[k]` is the coefficient of q^k.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::new(vec![1])
    }

    pub fn monomial(c: i64, e: usize) -> Self {
        let mut v = vec![0; e + 1];
        v[e] = c;
        IntPolynomial::new(v)
    }

    /// [k]_q = 1 + q + … + q^{k-1}.
    pub fn q_integer(k: usize) -> Self {
        IntPolynomial::new(vec![1; k])
    }

    /// Sparse form: (exponent, coefficient) pairs.
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut v = vec![0; deg + 1];
        for &(e, c) in terms {
            v[e] += c;
        }
        IntPolynomial::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> i64 {
        self.coeffs.get(e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0; e];
        v.extend_from_slice(&self.coeffs);
        IntPolynomial::new(v)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SievingError> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let mut v = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(SievingError::Overflow)?;
                v[i + j] = v[i + j].checked_add(t).ok_or(SievingError::Overflow)?;
            }
        }
        Ok(IntPolynomial::new(v))
    }

    /// Quotient and remainder by a divisor whose leading coefficient is ±1.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), SievingError> {
        let dd = d.degree().ok_or(SievingError::Remainder)?;
        let lead = d.coeffs[dd];
        assert!(lead == 1 || lead == -1, "divisor must be monic up to sign");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((IntPolynomial::zero(), self.clone()));
        }
        let mut q = vec![0i64; rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = rem[k + dd] * lead;
            q[k] = c;
            if c != 0 {
                for (j, &b) in d.coeffs.iter().enumerate() {
                    let t = c.checked_mul(b).ok_or(SievingError::Overflow)?;
                    rem[k + j] = rem[k + j].checked_sub(t).ok_or(SievingError::Overflow)?;
                }
            }
        }
        Ok((IntPolynomial::new(q), IntPolynomial::new(rem)))
    }

    pub fn div_exact(&self, d: &Self) -> Result<Self, SievingError> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(SievingError::Remainder);
        }
        Ok(q)
    }

    /// Residue modulo q^n − 1, as n coefficients.
    pub fn mod_cyclic(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        if n == 0 {
            return v;
        }
        for (k, &c) in self.coeffs.iter().enumerate() {
            v[k % n] += c;
        }
        v
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{e}")?,
                _ => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

fn raise_to_highest(w: &Word) -> Word {
    let r = w.rank;
    let bound = 4 * r * r + 4;
    let mut cur = w.clone();
    let mut steps = 0;
    'outer: loop {
        for i in 1..=r {
            if let Some(next) = cur.apply(i, Dir::Raise).unwrap() {
                cur = next;
                steps += 1;
                assert!(steps <= bound, "raising did not terminate");
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Local energy H(a ⊗ b), a the left factor.
pub fn local_energy(kind: Kind, r: usize, a: &Letter, b: &Letter) -> Result<i64, SievingError> {
    if a.kind() != kind || b.kind() != kind || !a.belongs(r) || !b.belongs(r) {
        return Err(SievingError::LetterMismatch);
    }
    Ok(match kind {
        Kind::Cvec => i64::from(a.order_key(r) > b.order_key(r)),
        Kind::Bvec => {
            if *a == Letter::B(0) && *b == Letter::B(0) {
                1
            } else if *a == Letter::B(-1) && *b == Letter::B(1) {
                2
            } else {
                i64::from(a.order_key(r) > b.order_key(r))
            }
        }
        Kind::Spin => {
            let top = raise_to_highest(&Word::new(kind, r, vec![b.clone(), a.clone()])?);
            let Letter::Spin(right) = &top.letters[0] else { unreachable!() };
            assert!(right.iter().all(|&s| s), "classical highest weight has an all-plus right factor");
            let Letter::Spin(left) = &top.letters[1] else { unreachable!() };
            let minus = left.iter().filter(|&&s| !s).count() as i64;
            (minus + 1) / 2
        }
    })
}

/// Σ i·H(b_i ⊗ b_{i+1}) with b_1 the leftmost tensor factor.
pub fn energy(w: &Word) -> Result<i64, SievingError> {
    let b: Vec<&Letter> = w.letters.iter().rev().collect();
    let mut e = 0;
    for i in 0..b.len().saturating_sub(1) {
        e += (i as i64 + 1) * local_energy(w.kind, w.rank, b[i], b[i + 1])?;
    }
    Ok(e)
}

/// Exponent shift c for the energy generating function.
pub fn energy_constant(kind: Kind, r: usize, n: usize) -> usize {
    match kind {
        Kind::Bvec => 0,
        Kind::Cvec => n / 2,
        Kind::Spin => {
            if matches!(r % 4, 0 | 3) {
                0
            } else {
                n / 2
            }
        }
    }
}

fn sum_exponents(exps: Vec<usize>) -> IntPolynomial {
    let deg = exps.iter().copied().max().unwrap_or(0);
    let mut v = vec![0i64; deg + 1];
    for e in &exps {
        v[*e] += 1;
    }
    if exps.is_empty() {
        return IntPolynomial::zero();
    }
    IntPolynomial::new(v)
}

/// q^c Σ q^{E(b)} over the weight-zero highest words of the family.
pub fn f_poly(family: Family, r: usize, n: usize) -> Result<IntPolynomial, SievingError> {
    let c = energy_constant(family.kind(), r, n);
    let exps = enumerate_zero(family, r, n)
        .par_iter()
        .map(|t| Ok((energy(&tableau_to_word(t)?)? as usize) + c))
        .collect::<Result<Vec<_>, SievingError>>()?;
    Ok(sum_exponents(exps))
}

/// ∏_{1≤i≤j≤n−1} [i+j+2r]_q / [i+j]_q.
pub fn g_poly(n: usize, r: usize) -> Result<IntPolynomial, SievingError> {
    if n == 0 {
        return Err(SievingError::EmptyProduct);
    }
    let mut acc = IntPolynomial::one();
    let mut pending: Vec<IntPolynomial> = Vec::new();
    for i in 1..n {
        for j in i..n {
            acc = acc.mul(&IntPolynomial::q_integer(i + j + 2 * r))?;
            pending.push(IntPolynomial::q_integer(i + j));
            // divide out whatever already goes in exactly, to keep coefficients small
            let mut k = 0;
            while k < pending.len() {
                let (q, rem) = acc.div_rem(&pending[k])?;
                if rem.is_zero() {
                    acc = q;
                    pending.swap_remove(k);
                } else {
                    k += 1;
                }
            }
        }
    }
    if !pending.is_empty() {
        return Err(SievingError::Remainder);
    }
    Ok(acc)
}

/// Descent positions and their sum for a highest-weight B word.
pub fn descent_major(w: &Word) -> Result<(Vec<usize>, usize), SievingError> {
    if w.kind != Kind::Bvec {
        return Err(SievingError::LetterMismatch);
    }
    if !w.is_highest() {
        return Err(CrystalError::NotHighest.into());
    }
    let r = w.rank;
    let u = &w.letters;
    let mut des = Vec::new();
    for i in 1..u.len() {
        let (hi, lo) = (&u[i], &u[i - 1]);
        if hi.order_key(r) <= lo.order_key(r) {
            continue;
        }
        if let (&Letter::B(a), &Letter::B(j)) = (hi, lo) {
            if j > 0 && a == -j {
                let suffix = &u[..i - 1];
                let plain = suffix.iter().filter(|&x| *x == Letter::B(j)).count();
                let barred = suffix.iter().filter(|&x| *x == Letter::B(-j)).count();
                if plain == barred {
                    continue;
                }
            }
        }
        des.push(i);
    }
    let maj = des.iter().sum();
    Ok((des, maj))
}

/// Σ q^maj over weight-zero highest words of B_□^{⊗n}.
pub fn h_poly(n: usize, r: usize) -> Result<IntPolynomial, SievingError> {
    let exps = enumerate_zero(Family::Vacillating, r, n)
        .par_iter()
        .map(|t| Ok(descent_major(&tableau_to_word(t)?)?.1))
        .collect::<Result<Vec<_>, SievingError>>()?;
    Ok(sum_exponents(exps))
}

fn partitions_of(n: usize, max_part: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=n.min(max_part)).rev() {
        cur.push(p);
        partitions_of(n - p, p, out, cur);
        cur.pop();
    }
}

/// Σ q^maj(T) over standard Young tableaux of shape λ.
pub fn syt_major_poly(shape: &[usize]) -> Result<IntPolynomial, SievingError> {
    let total: usize = shape.iter().sum();
    // state: filled row lengths and the row holding the largest entry so far
    let mut layer: HashMap<(Vec<usize>, usize), IntPolynomial> = HashMap::new();
    layer.insert((vec![0; shape.len()], usize::MAX), IntPolynomial::one());
    for k in 0..total {
        let mut next: HashMap<(Vec<usize>, usize), IntPolynomial> = HashMap::new();
        for ((filled, last), poly) in layer {
            for row in 0..shape.len() {
                let fits = filled[row] < shape[row] && (row == 0 || filled[row - 1] > filled[row]);
                if !fits {
                    continue;
                }
                let mut f = filled.clone();
                f[row] += 1;
                let p = if last != usize::MAX && row > last { poly.shift(k) } else { poly.clone() };
                let e = next.entry((f, row)).or_default();
                *e = e.add(&p);
            }
        }
        layer = next;
    }
    Ok(layer.into_values().fold(IntPolynomial::zero(), |a, p| a.add(&p)))
}

/// h_{n,r} computed from standard Young tableaux of even (n even) or odd (n odd) parts.
pub fn syt_h_poly(n: usize, r: usize) -> Result<IntPolynomial, SievingError> {
    let mut shapes = Vec::new();
    partitions_of(n, n, &mut shapes, &mut Vec::new());
    let mut acc = IntPolynomial::zero();
    for s in shapes {
        let ok = if n.is_multiple_of(2) {
            s.iter().all(|p| p % 2 == 0) && s.len() <= 2 * r + 1
        } else {
            s.iter().all(|p| p % 2 == 1) && s.len() == 2 * r + 1
        };
        if ok {
            acc = acc.add(&syt_major_poly(&s)?);
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub orbits: Vec<(TableauSeq, usize)>,
}

impl OrbitDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.orbits.iter().map(|o| o.1).collect();
        v.sort_unstable();
        v
    }

    /// Points fixed by the d-th power of the generator.
    pub fn fixed_points(&self, d: usize) -> usize {
        self.orbits.iter().filter(|o| d.is_multiple_of(o.1)).map(|o| o.1).sum()
    }

    /// Σ over orbits of size s of Σ_{j<s} q^{jn/s}, reduced mod q^n − 1.
    pub fn expected_residue(&self, order: usize) -> Vec<i64> {
        let mut v = vec![0; order];
        for &(_, s) in &self.orbits {
            for j in 0..s {
                v[j * order / s] += 1;
            }
        }
        v
    }
}

/// Orbits of promotion on `xs`, checking that its order divides `order`.
pub fn orbit_decomposition(xs: &[TableauSeq], order: usize) -> Result<OrbitDecomposition, SievingError> {
    let mut seen: HashSet<TableauSeq> = HashSet::new();
    let mut orbits = Vec::new();
    for t in xs {
        if seen.contains(t) {
            continue;
        }
        let mut size = 0;
        let mut cur = t.clone();
        loop {
            seen.insert(cur.clone());
            cur = promote(&cur)?;
            size += 1;
            if &cur == t {
                break;
            }
            if size > order {
                return Err(SievingError::ActionOrder { order, tableau: t.to_string() });
            }
        }
        if !order.is_multiple_of(size) {
            return Err(SievingError::ActionOrder { order, tableau: t.to_string() });
        }
        orbits.push((t.clone(), size));
    }
    Ok(OrbitDecomposition { orbits })
}

/// The m-th cyclotomic polynomial.
pub fn cyclotomic(m: usize) -> IntPolynomial {
    let mut p = IntPolynomial::monomial(1, m).sub(&IntPolynomial::one());
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = p.div_exact(&cyclotomic(d)).expect("cyclotomic factors divide q^m - 1");
        }
    }
    p
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CspReport {
    pub holds: bool,
    pub order: usize,
    pub orbit_sizes: Vec<usize>,
    pub residue: Vec<i64>,
    pub expected_residue: Vec<i64>,
    pub first_mismatch_d: Option<usize>,
}

pub fn csp_check(xs: &[TableauSeq], order: usize, f: &IntPolynomial) -> Result<CspReport, SievingError> {
    let orbits = orbit_decomposition(xs, order.max(1))?;
    let order_eff = order.max(1);
    let residue = f.mod_cyclic(order_eff);
    let expected = orbits.expected_residue(order_eff);
    let holds = residue == expected;
    let first_mismatch_d = if holds {
        None
    } else {
        // f(ζ^d) = fix(c^d) iff the primitive (n/gcd)-th cyclotomic factor divides the difference
        let diff = IntPolynomial::new(residue.clone()).sub(&IntPolynomial::new(expected.clone()));
        (0..order_eff).find(|&d| {
            let m = order_eff / gcd(d, order_eff);
            !diff.div_rem(&cyclotomic(m)).unwrap().1.is_zero()
        })
    };
    Ok(CspReport {
        holds,
        order: order_eff,
        orbit_sizes: orbits.sizes(),
        residue,
        expected_residue: expected,
        first_mismatch_d,
    })
}
