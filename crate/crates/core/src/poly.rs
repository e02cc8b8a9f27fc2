//! Polynomials on `p` and truncated power series on `p*`.
//!
//! `S[p]` is modelled as polynomials in variables `y_1..y_m`, one per `p`
//! basis vector. Series on `p*` use variables `ξ_1..ξ_m` (the coordinates of
//! `X ∈ p`). Both share the sparse [`MultiPoly`] representation.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::Subspace;
use crate::exactla::Mat;
use crate::scalar::{factorial, Scalar};
use crate::sympair::SymmetricPair;

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Scalar>,
}

fn total_degree(e: &[u32]) -> usize {
    e.iter().map(|&a| a as usize).sum()
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        MultiPoly::monomial(vec![0; nvars], c)
    }

    /// `c·y^e`; the variable count is `e.len()`.
    pub fn monomial(e: Exponents, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(e.len());
        p.add_term(e, c);
        p
    }

    /// The variable `y_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MultiPoly::monomial(e, Scalar::one())
    }

    /// `Σ c_i y_i`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut p = MultiPoly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, Scalar)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exponents, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.len(), self.nvars);
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, e: &[u32]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&vec![0; self.nvars])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| total_degree(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: usize) -> MultiPoly {
        self.filter(|e| total_degree(e) == d)
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: usize) -> MultiPoly {
        self.filter(|e| total_degree(e) <= d)
    }

    fn filter(&self, keep: impl Fn(&[u32]) -> bool) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Product with every term of total degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &MultiPoly, max_degree: usize) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars, "variable count");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let da = total_degree(ea);
            if da > max_degree {
                continue;
            }
            for (eb, cb) in &other.terms {
                if da + total_degree(eb) > max_degree {
                    continue;
                }
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `∂/∂y_i`.
    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, c * Scalar::from_integer(e[i].into()));
            }
        }
        out
    }

    /// `∂^α` with `∂^α(y^β) = β!/(β−α)!·y^{β−α}`.
    pub fn partial_multi(&self, alpha: &[u32]) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().zip(alpha).any(|(b, a)| b < a) {
                continue;
            }
            let mut w = c.clone();
            let mut f = e.clone();
            for (i, &a) in alpha.iter().enumerate() {
                for r in 0..a {
                    w *= Scalar::from_integer((e[i] - r).into());
                }
                f[i] -= a;
            }
            out.add_term(f, w);
        }
        out
    }

    /// Substitutes `y_i = v_i·t` and returns the coefficients of the
    /// resulting univariate polynomial in `t` up to `max_degree`.
    pub fn along(&self, v: &[Scalar], max_degree: usize) -> Vec<Scalar> {
        assert_eq!(v.len(), self.nvars, "variable count");
        let mut out = vec![Scalar::zero(); max_degree + 1];
        for (e, c) in &self.terms {
            let d = total_degree(e);
            if d > max_degree {
                continue;
            }
            let mut w = c.clone();
            for (x, &a) in v.iter().zip(e) {
                for _ in 0..a {
                    w *= x;
                }
            }
            out[d] += w;
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars, "variable count");
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut w = c.clone();
            for (x, &a) in point.iter().zip(e) {
                for _ in 0..a {
                    w *= x;
                }
            }
            acc += w;
        }
        acc
    }

    /// Coefficients on `basis` (a list of exponent vectors). Terms outside
    /// `basis` are ignored.
    pub fn coefficients_on(&self, basis: &[Exponents]) -> Vec<Scalar> {
        basis.iter().map(|e| self.coeff(e)).collect()
    }

    /// Terms sorted by descending total degree, then descending exponents.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| total_degree(b).cmp(&total_degree(a)).then_with(|| b.cmp(a)));
        v
    }

    /// Renders with the given variable names, e.g. `2*H-^2 - 1/2*E-*F- + 1`.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c < &Scalar::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(alloc::format!("{}^{a}", names[i])),
                }
            }
            if factors.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| alloc::format!("y{i}")).collect();
        f.write_str(&self.to_string_with(&names))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Scalar::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_truncated(rhs, usize::MAX)
    }
}

/// All exponent vectors in `nvars` variables of total degree `d`, in
/// descending lexicographic order (`y_1^d` first).
pub fn monomials_of_degree(nvars: usize, d: usize) -> Vec<Exponents> {
    fn go(i: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a;
            go(i + 1, left - a, cur, out);
        }
    }
    if nvars == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(0, d as u32, &mut vec![0; nvars], &mut out);
    out
}

/// Power series truncated at total degree `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    poly: MultiPoly,
    truncation: usize,
}

impl TruncSeries {
    pub fn new(poly: &MultiPoly, truncation: usize) -> Self {
        TruncSeries {
            poly: poly.truncate(truncation),
            truncation,
        }
    }

    pub fn zero(nvars: usize, truncation: usize) -> Self {
        TruncSeries::new(&MultiPoly::zero(nvars), truncation)
    }

    pub fn one(nvars: usize, truncation: usize) -> Self {
        TruncSeries::new(&MultiPoly::one(nvars), truncation)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn coeff(&self, e: &[u32]) -> Scalar {
        self.poly.coeff(e)
    }

    pub fn constant_term(&self) -> Scalar {
        self.poly.constant_term()
    }

    /// True when only even total degrees occur.
    pub fn is_even(&self) -> bool {
        self.poly.terms().all(|(e, _)| total_degree(e).is_multiple_of(2))
    }

    pub fn scale(&self, c: &Scalar) -> TruncSeries {
        TruncSeries {
            poly: self.poly.scale(c),
            truncation: self.truncation,
        }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let t = self.truncation.min(other.truncation);
        TruncSeries::new(&(&self.poly + &other.poly), t)
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        let t = self.truncation.min(other.truncation);
        TruncSeries::new(&(&self.poly - &other.poly), t)
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let t = self.truncation.min(other.truncation);
        TruncSeries {
            poly: self.poly.mul_truncated(&other.poly, t),
            truncation: t,
        }
    }

    /// `exp(s)` for `s` without constant term.
    pub fn exp(&self) -> TruncSeries {
        assert!(self.constant_term().is_zero(), "exp needs a zero constant term");
        let n = self.nvars();
        let mut acc = TruncSeries::one(n, self.truncation);
        let mut power = TruncSeries::one(n, self.truncation);
        for k in 1..=self.truncation {
            power = power.mul(self);
            if power.poly.is_zero() {
                break;
            }
            acc = acc.add(&power.scale(&factorial(k).recip()));
        }
        acc
    }

    /// `log(s)` for `s` with constant term 1.
    pub fn log(&self) -> TruncSeries {
        assert!(self.constant_term().is_one(), "log needs constant term 1");
        let n = self.nvars();
        let x = self.sub(&TruncSeries::one(n, self.truncation));
        let mut acc = TruncSeries::zero(n, self.truncation);
        let mut power = TruncSeries::one(n, self.truncation);
        for k in 1..=self.truncation {
            power = power.mul(&x);
            if power.poly.is_zero() {
                break;
            }
            let c = Scalar::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, k.into());
            acc = acc.add(&power.scale(&c));
        }
        acc
    }
}

/// The derivation of `S[p]` extending `y_j ↦ [X, p_j]` (in `p` coordinates)
/// for `X ∈ k` given in `g` coordinates.
pub fn k_derivation(pair: &SymmetricPair, x: &[Scalar], p: &MultiPoly) -> MultiPoly {
    let images = derivation_images(pair, x);
    apply_derivation(&images, p)
}

fn derivation_images(pair: &SymmetricPair, x: &[Scalar]) -> Vec<MultiPoly> {
    let g = pair.algebra();
    (0..pair.dim_p())
        .map(|j| MultiPoly::linear(&pair.p_coords(&g.bracket_vec(x, pair.p_vector(j)))))
        .collect()
}

fn apply_derivation(images: &[MultiPoly], p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars());
    for (j, img) in images.iter().enumerate() {
        if img.is_zero() {
            continue;
        }
        let d = p.partial(j);
        if !d.is_zero() {
            out = &out + &(&d * img);
        }
    }
    out
}

/// True when every `k` basis derivation kills `p`.
pub fn is_k_invariant(pair: &SymmetricPair, p: &MultiPoly) -> bool {
    (0..pair.dim_k()).all(|a| k_derivation(pair, pair.k_vector(a), p).is_zero())
}

/// Basis of the homogeneous degree-`d` part of `S[p]^k`.
///
/// The basis is the reduced row echelon basis of the kernel, with monomials
/// ordered as in [`monomials_of_degree`], so the output is deterministic.
pub fn invariants_of_degree(pair: &SymmetricPair, d: usize) -> Vec<MultiPoly> {
    let m = pair.dim_p();
    let monos = monomials_of_degree(m, d);
    let index: BTreeMap<&Exponents, usize> = monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for a in 0..pair.dim_k() {
        let images = derivation_images(pair, pair.k_vector(a));
        let mut block = vec![vec![Scalar::zero(); monos.len()]; monos.len()];
        for (col, e) in monos.iter().enumerate() {
            let img = apply_derivation(&images, &MultiPoly::monomial(e.clone(), Scalar::one()));
            for (f, c) in img.terms() {
                block[index[f]][col] = c.clone();
            }
        }
        rows.extend(block);
    }
    let kernel = if rows.is_empty() {
        Subspace::full(monos.len())
    } else {
        Subspace::kernel_of(&Mat::from_rows(rows))
    };
    kernel
        .basis()
        .iter()
        .map(|v| MultiPoly::from_terms(m, monos.iter().cloned().zip(v.iter().cloned())))
        .collect()
}

/// Basis of `S[p]^k` in degrees `0..=d`, grouped by ascending degree.
pub fn invariants_up_to_degree(pair: &SymmetricPair, d: usize) -> Vec<MultiPoly> {
    (0..=d).flat_map(|e| invariants_of_degree(pair, e)).collect()
}

/// Square matrix of series.
type SeriesMat = Vec<Vec<TruncSeries>>;

fn series_mat_mul(a: &SeriesMat, b: &SeriesMat, n: usize, zero: &TruncSeries) -> SeriesMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(zero.clone(), |acc, l| acc.add(&a[i][l].mul(&b[l][j]))))
                .collect()
        })
        .collect()
}

/// `trace log M` with `M = Σ_n A^n/(2n+1)!` and `A(ξ) = ad(X)²|_p` for
/// `X = Σ ξ_j p_j`, all truncated at degree `d`.
fn trace_log_m(pair: &SymmetricPair, d: usize) -> TruncSeries {
    let g = pair.algebra();
    let m = pair.dim_p();
    let nk = pair.dim_k();
    // pk[l]: p → k block of ad(p_l); kp[j]: k → p block of ad(p_j).
    let pk: Vec<Mat> = (0..m)
        .map(|l| {
            Mat::from_columns(
                nk,
                &(0..m)
                    .map(|c| pair.k_coords(&g.bracket_vec(pair.p_vector(l), pair.p_vector(c))))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let kp: Vec<Mat> = (0..m)
        .map(|j| {
            Mat::from_columns(
                m,
                &(0..nk)
                    .map(|a| pair.p_coords(&g.bracket_vec(pair.p_vector(j), pair.k_vector(a))))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let zero = TruncSeries::zero(m, d);
    let mut a_entries = vec![vec![MultiPoly::zero(m); m]; m];
    for j in 0..m {
        for l in 0..m {
            let prod = &kp[j] * &pk[l];
            if prod.is_zero() {
                continue;
            }
            let mut e = vec![0u32; m];
            e[j] += 1;
            e[l] += 1;
            let mono = MultiPoly::monomial(e, Scalar::one());
            for r in 0..m {
                for c in 0..m {
                    let x = &prod[(r, c)];
                    if !x.is_zero() {
                        a_entries[r][c] = &a_entries[r][c] + &mono.scale(x);
                    }
                }
            }
        }
    }
    let a: SeriesMat = a_entries
        .iter()
        .map(|row| row.iter().map(|p| TruncSeries::new(p, d)).collect())
        .collect();
    // N = M − I = Σ_{n≥1} A^n/(2n+1)!
    let mut nmat: SeriesMat = vec![vec![zero.clone(); m]; m];
    let mut power = a.clone();
    for n in 1..=d / 2 {
        let c = factorial(2 * n + 1).recip();
        for r in 0..m {
            for s in 0..m {
                nmat[r][s] = nmat[r][s].add(&power[r][s].scale(&c));
            }
        }
        power = series_mat_mul(&power, &a, m, &zero);
    }
    // trace log(I + N) = Σ_k (−1)^{k+1} tr(N^k)/k
    let mut acc = zero.clone();
    let mut power = nmat.clone();
    for k in 1..=d / 2 {
        let tr = (0..m).fold(zero.clone(), |t, i| t.add(&power[i][i]));
        if tr.poly().is_zero() && power.iter().flatten().all(|s| s.poly().is_zero()) {
            break;
        }
        let c = Scalar::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, k.into());
        acc = acc.add(&tr.scale(&c));
        power = series_mat_mul(&power, &nmat, m, &zero);
    }
    acc
}

fn check_even(d: usize) -> Result<()> {
    if d % 2 == 1 {
        Err(Error::OddTruncation(d))
    } else {
        Ok(())
    }
}

/// `J(X) = det_p(sinh ad X / ad X)` on `p`, truncated at even degree `d`.
pub fn j_series(pair: &SymmetricPair, d: usize) -> Result<TruncSeries> {
    check_even(d)?;
    Ok(trace_log_m(pair, d).exp())
}

/// `J^{1/2}`, truncated at even degree `d`.
pub fn j_half(pair: &SymmetricPair, d: usize) -> Result<TruncSeries> {
    check_even(d)?;
    Ok(trace_log_m(pair, d).scale(&Scalar::new(1.into(), 2.into())).exp())
}

/// Applies the constant-coefficient operator `∂_S` to `p`: each series
/// monomial `ξ^α` acts as `∂^α`.
///
/// Terms of `p` above the truncation of `s` receive no contribution from the
/// dropped part of the series, so callers should truncate at `deg p` or
/// higher.
pub fn apply_cc_operator(s: &TruncSeries, p: &MultiPoly) -> Result<MultiPoly> {
    if s.nvars() != p.nvars() {
        return Err(Error::VariableCountMismatch {
            left: s.nvars(),
            right: p.nvars(),
        });
    }
    let deg = p.degree().unwrap_or(0);
    let mut out = MultiPoly::zero(p.nvars());
    for (alpha, c) in s.poly().terms() {
        if total_degree(alpha) > deg {
            continue;
        }
        let d = p.partial_multi(alpha);
        if !d.is_zero() {
            out = &out + &d.scale(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use crate::sympair::builtin_pair;

    fn y(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &(&y(2, 0) * &y(2, 0)) - &MultiPoly::constant(2, frac(1, 2));
        assert_eq!(p.to_string(), "y1^2 - 1/2");
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.partial(0), y(2, 0).scale(&int(2)));
        assert!((&p - &p).is_zero());
        assert_eq!(monomials_of_degree(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
    }

    #[test]
    fn cc_operator_examples() {
        let p = &y(1, 0) * &y(1, 0);
        let one = TruncSeries::one(1, 4);
        assert_eq!(apply_cc_operator(&one, &p).unwrap(), p);
        let xi = TruncSeries::new(&y(1, 0), 4);
        assert_eq!(apply_cc_operator(&xi, &p).unwrap(), y(1, 0).scale(&int(2)));
        let s = TruncSeries::new(&(&MultiPoly::one(1) + &p), 4);
        assert_eq!(
            apply_cc_operator(&s, &p).unwrap(),
            &p + &MultiPoly::constant(1, int(2))
        );
        assert_eq!(
            apply_cc_operator(&TruncSeries::one(2, 2), &p),
            Err(Error::VariableCountMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn cotangent_aff1_derivations() {
        let pair = builtin_pair("cotangent:aff1").unwrap();
        let (e1, e2) = (pair.k_vector(0).to_vec(), pair.k_vector(1).to_vec());
        assert_eq!(k_derivation(&pair, &e1, &y(2, 1)), -&y(2, 1));
        assert_eq!(k_derivation(&pair, &e2, &y(2, 1)), y(2, 0));
        assert!(k_derivation(&pair, &e1, &y(2, 0)).is_zero());
        assert!(k_derivation(&pair, &e2, &y(2, 0)).is_zero());
        assert!(k_derivation(&pair, &e1, &MultiPoly::one(2)).is_zero());
    }

    #[test]
    fn invariant_examples() {
        let pair = builtin_pair("cotangent:abelian2").unwrap();
        assert_eq!(invariants_up_to_degree(&pair, 2).len(), 6);

        let pair = builtin_pair("cotangent:aff1").unwrap();
        let inv = invariants_up_to_degree(&pair, 2);
        let y1 = y(2, 0);
        assert_eq!(inv, vec![MultiPoly::one(2), y1.clone(), &y1 * &y1]);

        let pair = builtin_pair("swap:sl2").unwrap();
        let inv = invariants_up_to_degree(&pair, 2);
        assert_eq!(inv.len(), 2);
        // p basis order H-, E-, F-.
        let c = &(&y(3, 0) * &y(3, 0)) + &(&y(3, 1) * &y(3, 2)).scale(&int(4));
        assert_eq!(inv[1], c);
        assert!(is_k_invariant(&pair, &inv[1]));
    }

    #[test]
    fn j_is_one_on_cotangent_pairs() {
        for name in ["cotangent:abelian2", "cotangent:aff1", "cotangent:heis3", "cotangent:sl2"] {
            let pair = builtin_pair(name).unwrap();
            let m = pair.dim_p();
            assert_eq!(j_series(&pair, 6).unwrap(), TruncSeries::one(m, 6), "{name}");
            assert_eq!(j_half(&pair, 6).unwrap(), TruncSeries::one(m, 6), "{name}");
        }
    }

    #[test]
    fn j_swap_sl2_cartan_direction() {
        let pair = builtin_pair("swap:sl2").unwrap();
        let j = j_series(&pair, 4).unwrap();
        let h = [int(1), int(0), int(0)];
        let line = j.poly().along(&h, 4);
        assert_eq!(line, vec![int(1), int(0), frac(4, 3), int(0), frac(32, 45)]);
        let half = j_half(&pair, 2).unwrap().poly().along(&h, 2);
        assert_eq!(half[2], frac(2, 3));
        assert!(j.is_even());
        assert_eq!(j_series(&pair, 3), Err(Error::OddTruncation(3)));
        assert_eq!(j_half(&pair, 0).unwrap(), TruncSeries::one(3, 0));
    }
}
