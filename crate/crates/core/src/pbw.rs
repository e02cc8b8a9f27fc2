//! The enveloping algebra in PBW normal form and the quotient
//! `U(g)/U(g)·k^{−δ}`.
//!
//! Generators are ordered `p_1 < … < p_m < k_1 < … < k_n` (the adapted basis
//! of the pair). A normal monomial `p^α k^β` is stored as the exponent vector
//! `(α, β)`. Because every `k` factor sits on the right, reducing modulo the
//! left ideal generated by `X − δ(X)` replaces each `k_a` by `δ(k_a)`, which
//! identifies the quotient with `S[p]` linearly.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::exactla::Mat;
use crate::lie::Subspace;
use crate::poly::{
    apply_cc_operator, invariants_up_to_degree, is_k_invariant, j_half, monomials_of_degree, Exponents,
    MultiPoly, TruncSeries,
};
use crate::scalar::{factorial, Scalar};
use crate::sympair::SymmetricPair;

/// Element of `U(g)` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PBWElement {
    poly: MultiPoly,
}

impl PBWElement {
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.poly.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Filtration degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    /// Top-degree component, read as a commutative polynomial on `g`
    /// (adapted order).
    pub fn symbol(&self) -> MultiPoly {
        match self.poly.degree() {
            None => self.poly.clone(),
            Some(d) => self.poly.homogeneous_part(d),
        }
    }

    pub fn scale(&self, c: &Scalar) -> PBWElement {
        PBWElement {
            poly: self.poly.scale(c),
        }
    }

    pub fn add(&self, other: &PBWElement) -> PBWElement {
        PBWElement {
            poly: &self.poly + &other.poly,
        }
    }

    pub fn sub(&self, other: &PBWElement) -> PBWElement {
        PBWElement {
            poly: &self.poly - &other.poly,
        }
    }

    /// The normal-form coefficients as a polynomial in all generators.
    pub fn as_poly(&self) -> &MultiPoly {
        &self.poly
    }
}

/// A class in `U(g)/U(g)·k^{−δ}`, stored by its canonical representative in
/// `S[p]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientClass {
    pub rep: MultiPoly,
}

impl QuotientClass {
    pub fn new(rep: MultiPoly) -> Self {
        QuotientClass { rep }
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn sub(&self, other: &QuotientClass) -> QuotientClass {
        QuotientClass::new(&self.rep - &other.rep)
    }
}

/// Structure constants of a pair in the PBW generator order, with a memo for
/// straightening.
pub struct Pbw {
    m: usize,
    n: usize,
    /// `c[i][j]`: coordinates of `[x_i, x_j]` in generator order.
    c: Vec<Vec<Vec<Scalar>>>,
    delta: Vec<Scalar>,
    labels: Vec<String>,
    memo: RefCell<BTreeMap<(Exponents, usize), MultiPoly>>,
}

impl Pbw {
    pub fn new(pair: &SymmetricPair) -> Self {
        let g = pair.algebra();
        let basis = pair.adapted_basis();
        let total = pair.dim();
        let cols: Vec<Vec<Scalar>> = (0..total).map(|i| basis.column(i)).collect();
        let c = (0..total)
            .map(|i| {
                (0..total)
                    .map(|j| pair.adapted_coords(&g.bracket_vec(&cols[i], &cols[j])))
                    .collect()
            })
            .collect();
        let mut labels = pair.p_labels();
        labels.extend(pair.k_labels());
        Pbw {
            m: pair.dim_p(),
            n: pair.dim_k(),
            c,
            delta: pair.delta_character(),
            labels,
            memo: RefCell::new(BTreeMap::new()),
        }
    }

    /// Number of generators.
    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    pub fn dim_p(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero(&self) -> PBWElement {
        PBWElement {
            poly: MultiPoly::zero(self.dim()),
        }
    }

    pub fn one(&self) -> PBWElement {
        PBWElement {
            poly: MultiPoly::one(self.dim()),
        }
    }

    /// Generator `x_i` (`i < dim_p` for `p`, then `k`).
    pub fn generator(&self, i: usize) -> PBWElement {
        PBWElement {
            poly: MultiPoly::var(self.dim(), i),
        }
    }

    /// The element of `g` with given adapted coordinates, as a degree-1
    /// element.
    pub fn from_adapted(&self, coords: &[Scalar]) -> PBWElement {
        PBWElement {
            poly: MultiPoly::linear(coords),
        }
    }

    /// The ordered `p`-monomials of `p` read as an element of `U(g)`.
    pub fn from_p_poly(&self, p: &MultiPoly) -> PBWElement {
        assert_eq!(p.nvars(), self.m, "variable count");
        let mut out = MultiPoly::zero(self.dim());
        for (e, c) in p.terms() {
            let mut f = e.clone();
            f.resize(self.dim(), 0);
            out.add_term(f, c.clone());
        }
        PBWElement { poly: out }
    }

    /// Builds a normal-form element from raw terms; each exponent vector is
    /// an ordered monomial.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Exponents, Scalar)>) -> PBWElement {
        PBWElement {
            poly: MultiPoly::from_terms(self.dim(), terms),
        }
    }

    /// Normal form of `x^e · x_i` for a normal monomial `x^e`.
    fn monomial_times_generator(&self, e: &Exponents, i: usize) -> MultiPoly {
        let last = e.iter().rposition(|&a| a > 0);
        match last {
            Some(j) if j > i => {}
            _ => {
                let mut f = e.clone();
                f[i] += 1;
                return MultiPoly::monomial(f, Scalar::one());
            }
        }
        let key = (e.clone(), i);
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        let j = last.unwrap();
        let mut head = e.clone();
        head[j] -= 1;
        // x^e·x_i = (x^{e'}·x_i)·x_j + x^{e'}·[x_j, x_i]
        let swapped = self.poly_times_generator(&self.monomial_times_generator(&head, i), j);
        let mut out = swapped;
        for (l, coef) in self.c[j][i].iter().enumerate() {
            if !coef.is_zero() {
                out = &out + &self.monomial_times_generator(&head, l).scale(coef);
            }
        }
        self.memo.borrow_mut().insert(key, out.clone());
        out
    }

    fn poly_times_generator(&self, p: &MultiPoly, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.dim());
        for (e, c) in p.terms() {
            out = &out + &self.monomial_times_generator(e, i).scale(c);
        }
        out
    }

    /// `u · v` in normal form.
    pub fn multiply(&self, u: &PBWElement, v: &PBWElement) -> PBWElement {
        let mut out = MultiPoly::zero(self.dim());
        for (e, c) in v.terms() {
            let mut acc = u.poly.clone();
            for (i, &a) in e.iter().enumerate() {
                for _ in 0..a {
                    acc = self.poly_times_generator(&acc, i);
                }
            }
            out = &out + &acc.scale(c);
        }
        PBWElement { poly: out }
    }

    /// Product of a word of generators.
    pub fn word(&self, word: &[usize]) -> PBWElement {
        let mut acc = MultiPoly::one(self.dim());
        for &i in word {
            acc = self.poly_times_generator(&acc, i);
        }
        PBWElement { poly: acc }
    }

    /// `p^α k^β ↦ δ(k)^β · y^α`.
    pub fn reduce_mod_ideal(&self, u: &PBWElement) -> QuotientClass {
        let mut rep = MultiPoly::zero(self.m);
        for (e, c) in u.terms() {
            let mut w = c.clone();
            for (a, &b) in e[self.m..].iter().enumerate() {
                for _ in 0..b {
                    w *= &self.delta[a];
                }
            }
            rep.add_term(e[..self.m].to_vec(), w);
        }
        QuotientClass::new(rep)
    }

    /// `u · (k_a − δ(k_a))`, an element of the left ideal.
    pub fn ideal_element(&self, u: &PBWElement, a: usize) -> PBWElement {
        let gen = self.generator(self.m + a);
        let shifted = gen.sub(&self.one().scale(&self.delta[a]));
        self.multiply(u, &shifted)
    }

    /// Symmetrization `y^α ↦ (1/|α|!) Σ` over orderings of the `p`-word,
    /// computed as the average over distinct orderings with weight
    /// `α!/|α|!`.
    pub fn symmetrize(&self, p: &MultiPoly) -> PBWElement {
        assert_eq!(p.nvars(), self.m, "variable count");
        let mut out = self.zero();
        for (e, c) in p.terms() {
            let d: usize = e.iter().map(|&a| a as usize).sum();
            let mut weight = factorial(d).recip();
            for &a in e {
                weight *= factorial(a as usize);
            }
            let mut sum = self.zero();
            for word in distinct_orderings(e) {
                sum = sum.add(&self.word(&word));
            }
            out = out.add(&sum.scale(&(c * &weight)));
        }
        out
    }

    /// `(X·u − u·X)` reduced, with `X ∈ k` given by its `k` coordinates.
    fn k_action_on_rep(&self, x_k: &[Scalar], rep: &MultiPoly) -> QuotientClass {
        let mut coords = vec![Scalar::zero(); self.m];
        coords.extend_from_slice(x_k);
        let x = self.from_adapted(&coords);
        let u = self.from_p_poly(rep);
        let comm = self.multiply(&x, &u).sub(&self.multiply(&u, &x));
        self.reduce_mod_ideal(&comm)
    }

    fn unit_k(&self, a: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.n];
        v[a] = Scalar::one();
        v
    }

    pub fn class_k_action(&self, pair: &SymmetricPair, x: &[Scalar], c: &QuotientClass) -> QuotientClass {
        self.k_action_on_rep(&pair.k_coords(x), &c.rep)
    }

    pub fn is_invariant_class(&self, c: &QuotientClass) -> bool {
        (0..self.n).all(|a| self.k_action_on_rep(&self.unit_k(a), &c.rep).is_zero())
    }

    /// Product of invariant classes.
    pub fn class_multiply(&self, c1: &QuotientClass, c2: &QuotientClass) -> Result<QuotientClass> {
        if !self.is_invariant_class(c1) || !self.is_invariant_class(c2) {
            return Err(Error::NotInvariant);
        }
        Ok(self.multiply_reps(c1, c2))
    }

    fn multiply_reps(&self, c1: &QuotientClass, c2: &QuotientClass) -> QuotientClass {
        let u = self.multiply(&self.from_p_poly(&c1.rep), &self.from_p_poly(&c2.rep));
        self.reduce_mod_ideal(&u)
    }

    /// Invariant classes with representatives of degree `≤ d`, as a basis
    /// adapted to the filtration: entries are sorted by ascending degree and
    /// each one's degree is returned alongside.
    pub fn invariant_classes(&self, d: usize) -> Vec<(usize, QuotientClass)> {
        // Columns ordered with the highest degree first, so each kernel
        // basis vector is supported in degrees up to that of its pivot.
        let columns: Vec<(usize, Exponents)> = (0..=d)
            .rev()
            .flat_map(|e| monomials_of_degree(self.m, e).into_iter().map(move |x| (e, x)))
            .collect();
        let index: BTreeMap<&Exponents, usize> =
            columns.iter().enumerate().map(|(i, (_, e))| (e, i)).collect();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for a in 0..self.n {
            let x = self.unit_k(a);
            let mut block = vec![vec![Scalar::zero(); columns.len()]; columns.len()];
            for (col, (_, e)) in columns.iter().enumerate() {
                let img = self.k_action_on_rep(&x, &MultiPoly::monomial(e.clone(), Scalar::one()));
                for (f, c) in img.rep.terms() {
                    let r = *index.get(f).expect("k-action raises the filtration degree");
                    block[r][col] = c.clone();
                }
            }
            rows.extend(block);
        }
        let kernel = if rows.is_empty() {
            Subspace::full(columns.len())
        } else {
            Subspace::kernel_of(&Mat::from_rows(rows))
        };
        let mut out: Vec<(usize, QuotientClass)> = kernel
            .basis()
            .iter()
            .map(|v| {
                let pivot = v.iter().position(|x| !x.is_zero()).unwrap();
                let rep = MultiPoly::from_terms(
                    self.m,
                    columns.iter().map(|(_, e)| e.clone()).zip(v.iter().cloned()),
                );
                (columns[pivot].0, QuotientClass::new(rep))
            })
            .collect();
        out.reverse();
        out
    }

    /// A random element with at most `terms` terms of degree `≤ max_degree`
    /// and small integer coefficients.
    pub fn random_element<R: Rng>(&self, rng: &mut R, max_degree: usize, terms: usize) -> PBWElement {
        let mut out = MultiPoly::zero(self.dim());
        for _ in 0..terms {
            let d = rng.gen_range(0..=max_degree);
            let mut e = vec![0u32; self.dim()];
            for _ in 0..d {
                e[rng.gen_range(0..self.dim())] += 1;
            }
            let c: i64 = rng.gen_range(-3..=3);
            out.add_term(e, Scalar::from_integer(c.into()));
        }
        PBWElement { poly: out }
    }
}

/// Distinct orderings of the multiset with multiplicities `e`, in
/// lexicographic order.
fn distinct_orderings(e: &[u32]) -> Vec<Vec<usize>> {
    fn go(left: &mut Vec<u32>, cur: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i);
                go(left, cur, len, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let len = e.iter().map(|&a| a as usize).sum();
    let mut out = Vec::new();
    go(&mut e.to_vec(), &mut Vec::new(), len, &mut out);
    out
}

/// Smallest even number `≥ d`.
fn even_ceiling(d: usize) -> usize {
    d + d % 2
}

/// `R(P) = β(∂_{J^{1/2}} P)` reduced to the quotient.
pub fn rouviere(pair: &SymmetricPair, pbw: &Pbw, p: &MultiPoly) -> Result<QuotientClass> {
    if !is_k_invariant(pair, p) {
        return Err(Error::NotInvariant);
    }
    Ok(rouviere_unchecked(pair, pbw, p))
}

fn rouviere_unchecked(pair: &SymmetricPair, pbw: &Pbw, p: &MultiPoly) -> QuotientClass {
    let d = even_ceiling(p.degree().unwrap_or(0));
    let half = j_half(pair, d).expect("even truncation");
    let corrected = apply_cc_operator(&half, p).expect("matching variable count");
    pbw.reduce_mod_ideal(&pbw.symmetrize(&corrected))
}

/// A failed product identity `lhs(i, j) ≠ rhs(i, j)` with `value = lhs − rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub i: usize,
    pub j: usize,
    pub value: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub degree: usize,
    /// Invariant basis `{P_i}` by ascending degree.
    pub invariants: Vec<MultiPoly>,
    pub images: Vec<QuotientClass>,
    pub products_checked: usize,
    /// `R(P_i)·R(P_j) − R(P_i P_j)` for every failing pair.
    pub defects: Vec<Defect>,
    pub images_invariant: bool,
    /// The top-degree part of each `R(P_i)` is `P_i`.
    pub top_symbols_match: bool,
    pub injective: bool,
    /// `dim S^e[p]^k` for `e = 0..=degree`.
    pub invariant_dims: Vec<usize>,
    /// `dim` of invariant classes of filtration degree exactly `e`.
    pub class_dims: Vec<usize>,
    /// Same products with plain symmetrization in place of `R`. Diagnostic.
    pub plain_beta_defects: Vec<Defect>,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.defects.is_empty()
            && self.images_invariant
            && self.top_symbols_match
            && self.injective
            && self.invariant_dims == self.class_dims
    }
}

fn poly_degree(p: &MultiPoly) -> usize {
    p.degree().unwrap_or(0)
}

/// Checks that `R` is an injective algebra map on invariants of degree `≤ d`
/// and compares graded dimensions of `S[p]^k` and invariant classes.
pub fn verify_rouviere_homomorphism(pair: &SymmetricPair, d: usize) -> HomomorphismReport {
    let pbw = Pbw::new(pair);
    let invariants = invariants_up_to_degree(pair, d);
    let images: Vec<QuotientClass> = invariants
        .iter()
        .map(|p| rouviere_unchecked(pair, &pbw, p))
        .collect();
    let images_invariant = images.iter().all(|c| pbw.is_invariant_class(c));
    let top_symbols_match = invariants
        .iter()
        .zip(&images)
        .all(|(p, c)| c.rep.degree() == p.degree() && c.rep.homogeneous_part(poly_degree(p)) == *p);
    let injective = {
        let monos: Vec<Exponents> = (0..=d).flat_map(|e| monomials_of_degree(pair.dim_p(), e)).collect();
        let rows: Vec<Vec<Scalar>> = images.iter().map(|c| c.rep.coefficients_on(&monos)).collect();
        rows.is_empty() || Mat::from_rows(rows).rank() == images.len()
    };

    let plain: Vec<QuotientClass> = invariants
        .iter()
        .map(|p| pbw.reduce_mod_ideal(&pbw.symmetrize(p)))
        .collect();
    let mut defects = Vec::new();
    let mut plain_beta_defects = Vec::new();
    let mut products_checked = 0;
    for (i, pi) in invariants.iter().enumerate() {
        for (j, pj) in invariants.iter().enumerate() {
            if poly_degree(pi) + poly_degree(pj) > d {
                continue;
            }
            products_checked += 1;
            let prod = pi * pj;
            let lhs = pbw.multiply_reps(&images[i], &images[j]);
            let rhs = rouviere_unchecked(pair, &pbw, &prod);
            let value = lhs.sub(&rhs).rep;
            if !value.is_zero() {
                defects.push(Defect { i, j, value });
            }
            let lhs = pbw.multiply_reps(&plain[i], &plain[j]);
            let rhs = pbw.reduce_mod_ideal(&pbw.symmetrize(&prod));
            let value = lhs.sub(&rhs).rep;
            if !value.is_zero() {
                plain_beta_defects.push(Defect { i, j, value });
            }
        }
    }

    let mut invariant_dims = vec![0; d + 1];
    for p in &invariants {
        invariant_dims[poly_degree(p)] += 1;
    }
    let mut class_dims = vec![0; d + 1];
    for (e, _) in pbw.invariant_classes(d) {
        class_dims[e] += 1;
    }
    HomomorphismReport {
        degree: d,
        invariants,
        images,
        products_checked,
        defects,
        images_invariant,
        top_symbols_match,
        injective,
        invariant_dims,
        class_dims,
        plain_beta_defects,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativityReport {
    pub degree: usize,
    /// Filtration-adapted basis of invariant classes with their degrees.
    pub classes: Vec<(usize, QuotientClass)>,
    pub pairs_checked: usize,
    /// `c_i·c_j − c_j·c_i` for every failing pair.
    pub defects: Vec<Defect>,
}

impl CommutativityReport {
    pub fn passed(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Checks that invariant classes of degree `≤ d` commute pairwise.
pub fn commutativity_check(pair: &SymmetricPair, d: usize) -> CommutativityReport {
    let pbw = Pbw::new(pair);
    let classes = pbw.invariant_classes(d);
    let mut defects = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            pairs_checked += 1;
            let a = pbw.multiply_reps(&classes[i].1, &classes[j].1);
            let b = pbw.multiply_reps(&classes[j].1, &classes[i].1);
            let value = a.sub(&b).rep;
            if !value.is_zero() {
                defects.push(Defect { i, j, value });
            }
        }
    }
    CommutativityReport {
        degree: d,
        classes,
        pairs_checked,
        defects,
    }
}

/// Constant term `c₀` of `R(P) − β(P)` in the quotient for a quadratic `P`:
/// the pairing of the degree-2 part of `J^{1/2}` with `P`.
pub fn quadratic_correction(pair: &SymmetricPair, p: &MultiPoly) -> Scalar {
    let half = j_half(pair, 2).expect("even truncation");
    let quadratic = TruncSeries::new(&half.poly().homogeneous_part(2), 2);
    apply_cc_operator(&quadratic, p)
        .expect("matching variable count")
        .constant_term()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use crate::sympair::builtin_pair;

    fn cot_aff() -> (SymmetricPair, Pbw) {
        let pair = builtin_pair("cotangent:aff1").unwrap();
        let pbw = Pbw::new(&pair);
        (pair, pbw)
    }

    #[test]
    fn straightening_examples() {
        // Generator order: f1, f2, e1, e2.
        let (_, pbw) = cot_aff();
        let e1 = pbw.generator(2);
        let f2 = pbw.generator(1);
        let prod = pbw.multiply(&e1, &f2);
        let expected = pbw.from_terms([(vec![0, 1, 1, 0], int(1)), (vec![0, 1, 0, 0], int(-1))]);
        assert_eq!(prod, expected);
        let f1 = pbw.generator(0);
        assert_eq!(pbw.multiply(&f2, &f1), pbw.from_terms([(vec![1, 1, 0, 0], int(1))]));
        assert_eq!(pbw.multiply(&pbw.one(), &prod), prod);
    }

    #[test]
    fn reduction_examples() {
        let (_, pbw) = cot_aff();
        assert_eq!(pbw.reduce_mod_ideal(&pbw.generator(2)).rep, MultiPoly::constant(2, frac(-1, 2)));
        assert!(pbw.reduce_mod_ideal(&pbw.generator(3)).is_zero());
        let f1e1 = pbw.from_terms([(vec![1, 0, 1, 0], int(1))]);
        assert_eq!(pbw.reduce_mod_ideal(&f1e1).rep, MultiPoly::var(2, 0).scale(&frac(-1, 2)));
        let f1 = MultiPoly::var(2, 0);
        assert_eq!(pbw.reduce_mod_ideal(&pbw.from_p_poly(&f1)).rep, f1);
    }

    #[test]
    fn symmetrization_examples() {
        let pair = builtin_pair("swap:sl2").unwrap();
        let pbw = Pbw::new(&pair);
        let y = |i| MultiPoly::var(3, i);
        assert_eq!(pbw.symmetrize(&y(0)), pbw.generator(0));
        assert_eq!(pbw.symmetrize(&(&y(0) * &y(0))), pbw.word(&[0, 0]));
        // β(H⁻E⁻) = H⁻E⁻ + ½[E⁻, H⁻] = H⁻E⁻ − E⁺.
        let sym = pbw.symmetrize(&(&y(0) * &y(1)));
        let expected = pbw.word(&[0, 1]).add(&pbw.generator(4).scale(&int(-1)));
        assert_eq!(sym, expected);
    }

    #[test]
    fn class_actions() {
        let (pair, pbw) = cot_aff();
        let y1 = QuotientClass::new(MultiPoly::var(2, 0));
        let y2 = QuotientClass::new(MultiPoly::var(2, 1));
        let one = QuotientClass::new(MultiPoly::one(2));
        let e1 = pair.k_vector(0).to_vec();
        assert!(pbw.class_k_action(&pair, &e1, &one).is_zero());
        assert!(pbw.is_invariant_class(&y1));
        assert!(!pbw.is_invariant_class(&y2));
        assert_eq!(pbw.class_k_action(&pair, &e1, &y2).rep, -&y2.rep);
        assert_eq!(
            pbw.class_multiply(&y1, &y1).unwrap().rep,
            &y1.rep * &y1.rep
        );
        assert_eq!(pbw.class_multiply(&one, &y1).unwrap(), y1);
        assert_eq!(pbw.class_multiply(&y2, &y1), Err(Error::NotInvariant));
    }

    #[test]
    fn rouviere_swap_sl2_casimir() {
        let pair = builtin_pair("swap:sl2").unwrap();
        let pbw = Pbw::new(&pair);
        let inv = invariants_up_to_degree(&pair, 2);
        let c = &inv[1];
        let r = rouviere(&pair, &pbw, c).unwrap();
        assert!(pbw.is_invariant_class(&r));
        let plain = pbw.reduce_mod_ideal(&pbw.symmetrize(c));
        let c0 = quadratic_correction(&pair, c);
        assert_eq!(r.rep, &plain.rep + &MultiPoly::constant(3, c0.clone()));
        assert_eq!(r.rep.homogeneous_part(2), *c);
        assert_eq!(rouviere(&pair, &pbw, &MultiPoly::one(3)).unwrap().rep, MultiPoly::one(3));
        assert_eq!(
            rouviere(&pair, &pbw, &MultiPoly::var(3, 1)),
            Err(Error::NotInvariant)
        );
    }

    #[test]
    fn homomorphism_small_degree() {
        for name in ["cotangent:aff1", "swap:sl2"] {
            let pair = builtin_pair(name).unwrap();
            assert!(verify_rouviere_homomorphism(&pair, 0).passed());
            let rep = verify_rouviere_homomorphism(&pair, 2);
            assert!(rep.passed(), "{name}: {rep:?}");
            assert!(commutativity_check(&pair, 2).passed());
        }
    }
}
