//! Exact polynomials in q and x₁..xₙ with big-integer coefficients, and the
//! generating functions built from queues, tableaux and fillings.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use serde::{Deserialize, Serialize};

use crate::base::{is_lattice, Composition, Partition};
use crate::collapse::{mrsk, rot_inv, rotate90};
use crate::error::{Error, Result};
use crate::fillings::{enumerate_coquinv_free, maj_filling};
use crate::mlq::{enumerate_by_row_sizes, enumerate_gmlq, enumerate_matrices, enumerate_mlq, maj, maj_g, row_word};
use crate::tableaux::{enumerate_ssyt, enumerate_ssyt_content, ssyt_charge};

const DEFAULT_MAX_TERMS: usize = 1_000_000;
const MAX_VARS: usize = 1024;

/// Term limit from MLQKIT_MAX_TERMS.
pub fn max_terms() -> usize {
    std::env::var("MLQKIT_MAX_TERMS").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_TERMS)
}

/// Monomial q^e x^v with v of length n.
pub type Monomial = (u32, Vec<u32>);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QXPolynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl QXPolynomial {
    pub fn zero(n: usize) -> Self {
        QXPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, vec![0; n], BigInt::from(1))
    }

    pub fn monomial(n: usize, q: u32, x: Vec<u32>, c: BigInt) -> Self {
        assert_eq!(x.len(), n, "exponent vector length");
        let mut p = Self::zero(n);
        p.add_term(q, x, c);
        p
    }

    /// x_i, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        let mut x = vec![0; n];
        x[i - 1] = 1;
        Self::monomial(n, 0, x, BigInt::from(1))
    }

    pub fn q_power(n: usize, e: u32) -> Self {
        Self::monomial(n, e, vec![0; n], BigInt::from(1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, q: u32, x: Vec<u32>, c: BigInt) {
        if c.sign() == Sign::NoSign {
            return;
        }
        match self.terms.entry((q, x)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().sign() == Sign::NoSign {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableCountMismatch(self.n, other.n));
        }
        Ok(())
    }

    fn bounded(self) -> Result<Self> {
        let limit = max_terms();
        if self.terms.len() > limit {
            return Err(Error::BoundExceeded(format!("{} terms exceeds MLQKIT_MAX_TERMS={limit}", self.terms.len())));
        }
        Ok(self)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for ((q, x), c) in &other.terms {
            out.add_term(*q, x.clone(), c.clone());
        }
        out.bounded()
    }

    pub fn neg(&self) -> Self {
        QXPolynomial { n: self.n, terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for ((q1, x1), c1) in &self.terms {
            for ((q2, x2), c2) in &other.terms {
                let x: Vec<u32> = x1.iter().zip(x2).map(|(a, b)| a + b).collect();
                *out.entry((q1 + q2, x)).or_insert(BigInt::ZERO) += c1 * c2;
            }
            if out.len() > max_terms() {
                return Err(Error::BoundExceeded(format!("product exceeds MLQKIT_MAX_TERMS={}", max_terms())));
            }
        }
        out.retain(|_, c| c.sign() != Sign::NoSign);
        QXPolynomial { n: self.n, terms: out }.bounded()
    }

    /// Sets q = value.
    pub fn eval_q(&self, value: i64) -> Self {
        let mut out = Self::zero(self.n);
        for ((q, x), c) in &self.terms {
            out.add_term(0, x.clone(), c * BigInt::from(value).pow(*q));
        }
        out
    }

    /// Coefficient of x^v as a polynomial in q alone.
    pub fn coefficient_of_x(&self, x: &[u32]) -> QXPolynomial {
        let mut out = Self::zero(0);
        for ((q, v), c) in &self.terms {
            if v == x {
                out.add_term(*q, vec![], c.clone());
            }
        }
        out
    }

    /// Embeds into n + extra variables, shifting indices by `offset`.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        let mut out = Self::zero(total);
        for ((q, x), c) in &self.terms {
            let mut v = vec![0; total];
            v[offset..offset + self.n].copy_from_slice(x);
            out.add_term(*q, v, c.clone());
        }
        out
    }

    fn swapped(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for ((q, x), c) in &self.terms {
            let mut v = x.clone();
            v.swap(i, i + 1);
            out.add_term(*q, v, c.clone());
        }
        out
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.sign() != Sign::Minus)
    }

    /// Terms in display order: higher x-degree first, then lexicographically
    /// larger x-exponents, then increasing powers of q.
    pub fn ordered_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|((qa, xa), _), ((qb, xb), _)| {
            let da: u32 = xa.iter().sum();
            let db: u32 = xb.iter().sum();
            db.cmp(&da).then_with(|| xb.cmp(xa)).then_with(|| qa.cmp(qb))
        });
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if j.n > MAX_VARS {
            return Err(Error::Parse(format!("{} variables above {MAX_VARS}", j.n)));
        }
        let mut p = Self::zero(j.n);
        for t in j.terms {
            if t.x.len() != j.n {
                return Err(Error::VariableCountMismatch(t.x.len(), j.n));
            }
            let c: BigInt = t.c.parse().map_err(|e| Error::Parse(format!("coefficient {:?}: {e}", t.c)))?;
            p.add_term(t.q, t.x, c);
        }
        Ok(p)
    }

    /// Parses the text form with a fixed number of x variables.
    pub fn parse_with_n(s: &str, n: usize) -> Result<Self> {
        parse_poly(s, Some(n))
    }
}

pub fn poly_add(a: &QXPolynomial, b: &QXPolynomial) -> Result<QXPolynomial> {
    a.add(b)
}

pub fn poly_mul(a: &QXPolynomial, b: &QXPolynomial) -> Result<QXPolynomial> {
    a.mul(b)
}

pub fn poly_eq(a: &QXPolynomial, b: &QXPolynomial) -> Result<bool> {
    a.check(b)?;
    Ok(a == b)
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    c: String,
    q: u32,
    x: Vec<u32>,
}

impl From<&QXPolynomial> for PolyJson {
    fn from(p: &QXPolynomial) -> Self {
        PolyJson {
            n: p.n,
            terms: p
                .ordered_terms()
                .into_iter()
                .map(|((q, x), c)| TermJson { c: c.to_string(), q: *q, x: x.clone() })
                .collect(),
        }
    }
}

impl fmt::Display for QXPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((q, x), c)) in self.ordered_terms().into_iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            let mag = c.magnitude();
            if mag != &1u32.into() {
                factors.push(mag.to_string());
            }
            match q {
                0 => {}
                1 => factors.push("q".into()),
                e => factors.push(format!("q^{e}")),
            }
            for (i, &e) in x.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    e => factors.push(format!("x{}^{e}", i + 1)),
                }
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            let sign = if c.sign() == Sign::Minus { "-" } else { "+" };
            match (k, sign) {
                (0, "+") => {}
                (0, _) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for QXPolynomial {
    type Err = Error;
    /// The number of variables is the largest index that appears.
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s, None)
    }
}

fn parse_exp(s: &str) -> Result<u32> {
    s.parse().map_err(|e| Error::Parse(format!("exponent {s:?}: {e}")))
}

fn parse_poly(s: &str, n: Option<usize>) -> Result<QXPolynomial> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (k, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && !(k > 0 && cur.ends_with('^')) {
            if k > 0 {
                if cur.is_empty() {
                    return Err(Error::Parse("dangling sign".into()));
                }
                pieces.push((neg, std::mem::take(&mut cur)));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(Error::Parse("dangling sign".into()));
    }
    pieces.push((neg, cur));
    let mut parsed: Vec<(BigInt, u32, BTreeMap<usize, u32>)> = Vec::new();
    let mut top = 0;
    for (neg, body) in pieces {
        let mut c = BigInt::from(1);
        let mut q = 0u32;
        let mut xs: BTreeMap<usize, u32> = BTreeMap::new();
        for factor in body.split('*') {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b, parse_exp(e)?),
                None => (factor, 1),
            };
            if base == "q" {
                q = q.checked_add(exp).ok_or_else(|| Error::Parse("exponent overflow".into()))?;
            } else if let Some(idx) = base.strip_prefix('x') {
                let i: usize = idx.parse().map_err(|e| Error::Parse(format!("variable {base:?}: {e}")))?;
                if i == 0 {
                    return Err(Error::Parse("variables start at x1".into()));
                }
                if i > MAX_VARS {
                    return Err(Error::Parse(format!("variable index {i} above {MAX_VARS}")));
                }
                top = top.max(i);
                let e = xs.entry(i).or_insert(0);
                *e = e.checked_add(exp).ok_or_else(|| Error::Parse("exponent overflow".into()))?;
            } else if factor.contains('^') {
                return Err(Error::Parse(format!("bad factor {factor:?}")));
            } else {
                let v: BigInt = base.parse().map_err(|e| Error::Parse(format!("factor {base:?}: {e}")))?;
                if base.starts_with(['+', '-']) {
                    return Err(Error::Parse(format!("bad factor {base:?}")));
                }
                c *= v;
            }
        }
        if neg {
            c = -c;
        }
        parsed.push((c, q, xs));
    }
    let n = match n {
        Some(n) if top > n => return Err(Error::VariableCountMismatch(top, n)),
        Some(n) => n,
        None => top,
    };
    let mut p = QXPolynomial::zero(n);
    for (c, q, xs) in parsed {
        let mut v = vec![0; n];
        for (i, e) in xs {
            v[i - 1] = e;
        }
        p.add_term(q, v, c);
    }
    p.bounded()
}

fn x_weight(content: &Composition) -> Vec<u32> {
    content.parts().iter().map(|&c| c as u32).collect()
}

fn collect(n: usize, items: impl Iterator<Item = (u32, Vec<u32>)>) -> Result<QXPolynomial> {
    collect_limited(n, items, max_terms())
}

fn collect_limited(n: usize, items: impl Iterator<Item = (u32, Vec<u32>)>, limit: usize) -> Result<QXPolynomial> {
    let mut p = QXPolynomial::zero(n);
    for (q, x) in items {
        p.add_term(q, x, BigInt::from(1));
        if p.len() > limit {
            return Err(Error::BoundExceeded(format!("more than {limit} terms (MLQKIT_MAX_TERMS)")));
        }
    }
    Ok(p)
}

/// s_λ(x₁..xₙ) as a sum over nonwrapping queues.
pub fn schur(lam: &Partition, n: usize) -> Result<QXPolynomial> {
    if lam.len() > n {
        return Ok(QXPolynomial::zero(n));
    }
    let items = enumerate_mlq(lam, n)?.filter(|m| maj(m) == Ok(0)).map(|m| (0, x_weight(&m.column_content())));
    collect(n, items)
}

/// s_λ(x₁..xₙ) as a sum over semistandard tableaux.
pub fn schur_ssyt(lam: &Partition, n: usize) -> Result<QXPolynomial> {
    let items = enumerate_ssyt(lam, n).into_iter().map(|t| {
        let mut c = t.content().parts().to_vec();
        c.resize(n, 0);
        (0, c.into_iter().map(|v| v as u32).collect())
    });
    collect(n, items)
}

pub fn q_whittaker_mlq(lam: &Partition, n: usize) -> Result<QXPolynomial> {
    if lam.len() > n {
        return Ok(QXPolynomial::zero(n));
    }
    let items = enumerate_mlq(lam, n)?.map(|m| (maj(&m).expect("straight") as u32, x_weight(&m.column_content())));
    collect(n, items)
}

pub fn q_whittaker_gmlq(alpha: &Composition, n: usize) -> Result<QXPolynomial> {
    if alpha.parts().iter().any(|&a| a > n) {
        return Ok(QXPolynomial::zero(n));
    }
    let mut p = QXPolynomial::zero(n);
    for m in enumerate_gmlq(alpha, n)? {
        let e = maj_g(&m);
        let e = u32::try_from(e).map_err(|_| Error::IdentityViolation(format!("negative maj_G {e} at {m}")))?;
        p.add_term(e, x_weight(&m.column_content()), BigInt::from(1));
    }
    p.bounded()
}

/// K_{λμ}(q) = Σ_{T ∈ SSYT(λ, μ)} q^{charge(T)}.
pub fn kostka_charge(lam: &Partition, mu: &Partition) -> Result<QXPolynomial> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lam}| ≠ |{mu}|")));
    }
    let mut p = QXPolynomial::zero(0);
    for t in enumerate_ssyt_content(lam, mu.parts()) {
        p.add_term(ssyt_charge(&t)? as u32, vec![], BigInt::from(1));
    }
    Ok(p)
}

/// Queues with row sizes μ and column content λ′ whose row word is lattice.
pub fn kostka_lattice_mlq(lam: &Partition, mu: &Partition) -> Result<QXPolynomial> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lam}| ≠ |{mu}|")));
    }
    let conj = lam.conjugate();
    let n = conj.len();
    let mut p = QXPolynomial::zero(0);
    if mu.first() > n {
        return Ok(p);
    }
    for m in enumerate_by_row_sizes(mu.parts(), n)? {
        if m.column_content().parts() == conj.parts() && is_lattice(row_word(&m).letters()) {
            p.add_term(maj(&m)? as u32, vec![], BigInt::from(1));
        }
    }
    Ok(p)
}

/// Nonwrapping queues of shape λ and column content μ, weighted by the maj
/// of their rotation.
pub fn kostka_rotated(lam: &Partition, mu: &Partition) -> Result<QXPolynomial> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lam}| ≠ |{mu}|")));
    }
    let n = mu.len();
    let mut p = QXPolynomial::zero(0);
    if lam.len() > n {
        return Ok(p);
    }
    for m in enumerate_mlq(lam, n)? {
        if m.column_content().parts() == mu.parts() && maj(&m)? == 0 {
            p.add_term(maj(&rotate90(&m))? as u32, vec![], BigInt::from(1));
        }
    }
    Ok(p)
}

/// K_{λμ}(q) computed three ways; disagreement is an error.
pub fn kostka_foulkes(lam: &Partition, mu: &Partition) -> Result<QXPolynomial> {
    let a = kostka_charge(lam, mu)?;
    let b = kostka_lattice_mlq(lam, mu)?;
    let c = kostka_rotated(lam, mu)?;
    if a != b || a != c {
        return Err(Error::IdentityViolation(format!("K_{{{lam},{mu}}}: {a} | {b} | {c}")));
    }
    Ok(a)
}

/// Σ_λ K_{λ′μ′}(q) s_λ(x₁..xₙ).
pub fn q_whittaker_charge_expansion(mu: &Partition, n: usize) -> Result<QXPolynomial> {
    let mut total = QXPolynomial::zero(n);
    let mu_c = mu.conjugate();
    for lam in Partition::all_of_size(mu.size()) {
        if lam.len() > n {
            continue;
        }
        let k = kostka_charge(&lam.conjugate(), &mu_c)?;
        if k.is_zero() {
            continue;
        }
        total = total.add(&k.embed(n, 0).mul(&schur_ssyt(&lam, n)?)?)?;
    }
    Ok(total)
}

pub fn q_whittaker_coquinv(lam: &Partition, n: usize) -> Result<QXPolynomial> {
    if lam.len() > n {
        return Ok(QXPolynomial::zero(n));
    }
    let items = enumerate_coquinv_free(lam, n)?.into_iter().map(|f| {
        let mut w = vec![0u32; n];
        for &x in f.rows().iter().flatten() {
            w[x - 1] += 1;
        }
        (maj_filling(&f) as u32, w)
    });
    collect(n, items)
}

pub fn is_symmetric(p: &QXPolynomial) -> bool {
    (0..p.n.saturating_sub(1)).all(|i| &p.swapped(i) == p)
}

/// Σ_λ s_λ(x) s_λ′(y) = Π (1 + xᵢyⱼ) in n + L variables, and mRSK as a
/// weight-preserving bijection from 𝕄(L, n) onto the pairs.
pub fn dual_cauchy_check(n: usize, l: usize) -> Result<bool> {
    let total = n + l;
    let mut lhs = QXPolynomial::zero(total);
    for size in 0..=n * l {
        for lam in Partition::all_of_size(size) {
            if lam.len() > n || lam.first() > l {
                continue;
            }
            let sx = schur(&lam, n)?.embed(total, 0);
            let sy = schur(&lam.conjugate(), l)?.embed(total, n);
            lhs = lhs.add(&sx.mul(&sy)?)?;
        }
    }
    let mut rhs = QXPolynomial::one(total);
    for i in 1..=n {
        for j in 1..=l {
            let f = QXPolynomial::one(total).add(&QXPolynomial::var(total, i).mul(&QXPolynomial::var(total, n + j))?)?;
            rhs = rhs.mul(&f)?;
        }
    }
    if lhs != rhs {
        return Ok(false);
    }
    let mut seen = std::collections::BTreeSet::new();
    for b in enumerate_matrices(l, n) {
        let pair = mrsk(&b);
        if maj(&pair.down) != Ok(0) || maj(&pair.left) != Ok(0) || pair.left.shape() != pair.down.shape().conjugate() {
            return Ok(false);
        }
        let left = rot_inv(&pair.left);
        if pair.down.column_content() != b.column_content() || left.row_sizes() != b.row_sizes() {
            return Ok(false);
        }
        seen.insert((pair.left, pair.down));
    }
    let mut pairs: u128 = 0;
    for size in 0..=n * l {
        for lam in Partition::all_of_size(size) {
            if lam.len() > n || lam.first() > l {
                continue;
            }
            let a = enumerate_mlq(&lam, n)?.filter(|m| maj(m) == Ok(0)).count() as u128;
            let b = enumerate_mlq(&lam.conjugate(), l)?.filter(|m| maj(m) == Ok(0)).count() as u128;
            pairs += a * b;
        }
    }
    Ok(seen.len() as u128 == 1u128 << (n * l) && pairs == seen.len() as u128)
}
