//! σ-stable polarizations of regular forms on `p`.
//!
//! The construction recurses on dimension. With `x_f = x_s + x_u` the Jordan
//! decomposition of the element of `k` dual to `f`:
//!
//! * if `ad(x_s) ≠ 0`, split `g` into `ad(x_s)` eigenspaces, take `n` as the
//!   sum of the eigenspaces with positive eigenvalue, polarize the
//!   restriction of `f` to the centralizer `g_0` of `x_s` (a smaller pair of
//!   the same kind) and return `b_0 ⊕ n`;
//! * if `ad(x_s) = 0`, a base case: `p ⊕ k^f` when `p` is an abelian ideal,
//!   or all of `g` when `B_f` vanishes identically.
//!
//! Results are certified independently by [`verify_polarization`] and
//! [`pukanszky_check`].

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{charpoly, jordan_chevalley, rational_roots, solve, vector, Mat};
use crate::lie::{Element, EigenSplit, Subspace};
use crate::scalar::Scalar;
use crate::sympair::{FormSampler, PForm, SymmetricPair, DEFAULT_SAMPLE_SIZE};

/// How the recursion bottomed out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseCase {
    /// `ad(x_s) = 0` and `B_f ≡ 0` on the current algebra: `b` is the whole
    /// algebra.
    CentralSemisimplePart,
    /// `ad(x_s) = 0` and `p` is an abelian ideal: `b = p ⊕ k^f`.
    AbelianIdealP,
}

/// Invariants checked while building one recursion level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepChecks {
    /// Every eigenspace is σ-stable.
    pub sigma_stable: bool,
    /// `B(g_λ, g_μ) = 0` whenever `λ + μ ≠ 0`.
    pub b_orthogonal: bool,
    /// `[g_λ, g_μ] ⊆ g_{λ+μ}` (zero when `λ + μ` is not an eigenvalue).
    pub graded: bool,
    /// `n` is a subalgebra.
    pub n_closed: bool,
    /// `B_f(n, n) = 0`.
    pub n_isotropic: bool,
    /// `B_f(b_0, n) = 0`.
    pub b0_perp_n: bool,
    /// `dim g_0 < dim g`.
    pub dim_decreases: bool,
}

impl StepChecks {
    pub fn all_hold(&self) -> bool {
        self.sigma_stable
            && self.b_orthogonal
            && self.graded
            && self.n_closed
            && self.n_isotropic
            && self.b0_perp_n
            && self.dim_decreases
    }
}

/// One level of the recursion. Elements and subspaces are expressed in the
/// coordinates of the top-level algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionStep {
    pub depth: usize,
    /// Basis of the algebra at this level.
    pub algebra: Subspace,
    pub x_f: Element,
    pub x_s: Element,
    pub x_u: Element,
    /// `(λ, dim g_λ)` ascending, including `λ = 0`; empty at a base case.
    pub eigenvalues: Vec<(Scalar, usize)>,
    /// The chosen positive system `Δ = {λ > 0}`.
    pub positive: Vec<Scalar>,
    pub n: Subspace,
    /// Dimension of the sub-pair recursed into.
    pub sub_dim: Option<usize>,
    /// `None` at a base case.
    pub checks: Option<StepChecks>,
    pub base_case: Option<BaseCase>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub b: Subspace,
    pub trace: Vec<RecursionStep>,
    pub base_case: BaseCase,
}

/// Splits `x ∈ k` as `x_s + x_u` with `ad(x_s)`, `ad(x_u)` the semisimple
/// and nilpotent parts of `ad(x)`.
///
/// `x_s` is found by solving `ad(y) = S` over `y ∈ k` (free variables zero);
/// no solution is [`Error::AdjointNotInK`]. The result is checked to satisfy
/// `[x_s, x_u] = 0`.
pub fn jordan_parts(pair: &SymmetricPair, x: &Element) -> Result<(Element, Element)> {
    let g = pair.algebra();
    let (s, _) = jordan_chevalley(&g.ad_matrix(x));
    if s.is_zero() {
        return Ok((Element::zero(g.dim()), x.clone()));
    }
    let columns: Vec<Vec<Scalar>> = pair
        .k()
        .basis()
        .iter()
        .map(|v| g.ad_matrix_vec(v).vectorize())
        .collect();
    let system = Mat::from_columns(g.dim() * g.dim(), &columns);
    let c = solve(&system, &s.vectorize()).ok_or(Error::AdjointNotInK)?;
    let xs = Element::new(pair.k().combine(&c));
    let xu = x - &xs;
    if !g.bracket(&xs, &xu).is_zero() {
        return Err(Error::NotSemisimple(
            "recovered Jordan parts do not commute".into(),
        ));
    }
    Ok((xs, xu))
}

/// Builds a σ-stable polarization of `f` by the recursion described in the
/// module docs.
pub fn construct_polarization(pair: &SymmetricPair, f: &PForm) -> Result<Polarization> {
    if !pair.is_anti_invariant() {
        return Err(Error::MissingForm);
    }
    let mut trace = Vec::new();
    let to_top = Mat::identity(pair.dim());
    let (b, base_case) = polarize_level(pair, f, 0, &to_top, &mut trace)?;
    Ok(Polarization {
        b,
        trace,
        base_case,
    })
}

fn polarize_level(
    pair: &SymmetricPair,
    f: &PForm,
    depth: usize,
    to_top: &Mat,
    trace: &mut Vec<RecursionStep>,
) -> Result<(Subspace, BaseCase)> {
    let g = pair.algebra();
    let dim = pair.dim();
    let full = Subspace::full(dim);
    let lift = |x: &Element| Element::new(to_top.mul_vec(x.coords()));
    let xf = pair.xf_of_form(f)?;
    let (xs, xu) = jordan_parts(pair, &xf)?;
    let bf = pair.bf_matrix(f);
    let step_index = trace.len();
    trace.push(RecursionStep {
        depth,
        algebra: full.image(to_top),
        x_f: lift(&xf),
        x_s: lift(&xs),
        x_u: lift(&xu),
        eigenvalues: Vec::new(),
        positive: Vec::new(),
        n: Subspace::zero(to_top.rows()),
        sub_dim: None,
        checks: None,
        base_case: None,
    });

    if g.ad_matrix(&xs).is_zero() {
        let p = pair.p();
        let (b, tag) = if g.bracket_space(p, p).is_zero() && g.is_ideal_in(p, &full) {
            let kf = pair.centralizer(f).intersection(pair.k());
            (p.sum(&kf), BaseCase::AbelianIdealP)
        } else if bf.is_zero() {
            (full, BaseCase::CentralSemisimplePart)
        } else {
            return Err(Error::BaseCaseUnsupported(format!(
                "ad(x_s) = 0 on a {dim}-dimensional pair where p is not an abelian ideal"
            )));
        };
        trace[step_index].base_case = Some(tag);
        return Ok((b, tag));
    }

    let split = g.eigensplit(&xs)?;
    let spaces = split.all();
    let form = pair.form().ok_or(Error::MissingForm)?;
    let sigma_stable = spaces.iter().all(|(_, s)| pair.is_sigma_stable(s));
    let b_orthogonal = spaces.iter().all(|(l, a)| {
        spaces.iter().all(|(m, c)| {
            (l + m).is_zero()
                || a.basis()
                    .iter()
                    .all(|x| c.basis().iter().all(|y| vector::dot(x, &form.mul_vec(y)).is_zero()))
        })
    });
    let graded = graded_brackets(pair, &split);
    let positive: Vec<Scalar> = split
        .parts
        .iter()
        .filter(|(l, _)| l.is_positive())
        .map(|(l, _)| l.clone())
        .collect();
    let n = split
        .parts
        .iter()
        .filter(|(l, _)| l.is_positive())
        .fold(Subspace::zero(dim), |acc, (_, s)| acc.sum(s));
    let n_closed = g.is_subalgebra(&n);
    let n_isotropic = isotropic_between(&bf, &n, &n);

    let (sub, embed) = pair.restrict(&split.zero)?;
    let f_g = pair.form_on_g(f);
    let k0 = sub.dim_k();
    let f_sub = PForm::new(
        (0..sub.dim_p())
            .map(|j| vector::dot(&f_g, &embed.column(k0 + j)))
            .collect(),
    );
    {
        let step = &mut trace[step_index];
        step.eigenvalues = spaces.iter().map(|(l, s)| (l.clone(), s.dim())).collect();
        step.positive = positive;
        step.n = n.image(to_top);
        step.sub_dim = Some(sub.dim());
    }
    let sub_to_top = to_top * &embed;
    let (b0_sub, tag) = polarize_level(&sub, &f_sub, depth + 1, &sub_to_top, trace)?;
    let b0 = b0_sub.image(&embed);
    trace[step_index].checks = Some(StepChecks {
        sigma_stable,
        b_orthogonal,
        graded,
        n_closed,
        n_isotropic,
        b0_perp_n: isotropic_between(&bf, &b0, &n),
        dim_decreases: sub.dim() < dim,
    });
    Ok((b0.sum(&n), tag))
}

fn graded_brackets(pair: &SymmetricPair, split: &EigenSplit) -> bool {
    let g = pair.algebra();
    let spaces = split.all();
    spaces.iter().all(|(l, a)| {
        spaces.iter().all(|(m, c)| {
            let target = split.space(&(l + m));
            a.basis().iter().all(|x| {
                c.basis().iter().all(|y| {
                    let z = g.bracket_vec(x, y);
                    match target {
                        Some(t) => t.contains(&z),
                        None => vector::is_zero(&z),
                    }
                })
            })
        })
    })
}

fn isotropic_between(bf: &Mat, a: &Subspace, c: &Subspace) -> bool {
    a.basis()
        .iter()
        .all(|x| c.basis().iter().all(|y| vector::dot(x, &bf.mul_vec(y)).is_zero()))
}

/// Independent check that `b` is a σ-stable polarization at `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationCertificate {
    pub closed: bool,
    /// Basis indices `(i, j)` of `b` whose bracket leaves `b`.
    pub closure_witness: Option<(usize, usize)>,
    pub sigma_stable: bool,
    pub isotropic: bool,
    /// Basis indices `(i, j)` of `b` with `f([b_i, b_j]) ≠ 0`.
    pub isotropy_witness: Option<(usize, usize)>,
    pub dim_g: usize,
    pub dim_gf: usize,
    pub dim_b: usize,
    /// `2·dim b = dim g + dim g^f`.
    pub maximal: bool,
}

impl PolarizationCertificate {
    pub fn passed(&self) -> bool {
        self.closed && self.sigma_stable && self.isotropic && self.maximal
    }
}

/// Checks bracket closure, σ-stability, `B_f`-isotropy and maximal dimension
/// of `b`, recomputing `g^f` from the brackets.
pub fn verify_polarization(pair: &SymmetricPair, f: &PForm, b: &Subspace) -> PolarizationCertificate {
    let g = pair.algebra();
    let f_g = pair.form_on_g(f);
    let basis = b.basis();
    let mut closure_witness = None;
    let mut isotropy_witness = None;
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate().skip(i + 1) {
            let z = g.bracket_vec(x, y);
            if closure_witness.is_none() && !b.contains(&z) {
                closure_witness = Some((i, j));
            }
            if isotropy_witness.is_none() && !vector::dot(&f_g, &z).is_zero() {
                isotropy_witness = Some((i, j));
            }
        }
    }
    let n = g.dim();
    let bf = Mat::from_fn(n, n, |i, j| {
        let z = g.bracket_vec(&vector::unit(n, i), &vector::unit(n, j));
        vector::dot(&f_g, &z)
    });
    let dim_gf = Subspace::kernel_of(&bf).dim();
    PolarizationCertificate {
        closed: closure_witness.is_none(),
        closure_witness,
        sigma_stable: b.image(pair.sigma()) == *b,
        isotropic: isotropy_witness.is_none(),
        isotropy_witness,
        dim_g: n,
        dim_gf,
        dim_b: b.dim(),
        maximal: 2 * b.dim() == n + dim_gf,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PukanszkyCertificate {
    pub gf: Subspace,
    pub b_u: Subspace,
    /// `g^f ⊆ b`.
    pub gf_in_b: bool,
    pub dim_sum: usize,
    pub dim_b: usize,
    /// `g^f + b_u = b`.
    pub passed: bool,
}

/// Checks `b = g^f + b_u` with `b_u` the nilradical of `b`.
pub fn pukanszky_check(pair: &SymmetricPair, f: &PForm, b: &Subspace) -> Result<PukanszkyCertificate> {
    let g = pair.algebra();
    let gf = pair.centralizer(f);
    let b_u = g.nilradical(b)?;
    let sum = gf.sum(&b_u);
    let gf_in_b = b.contains_space(&gf);
    Ok(PukanszkyCertificate {
        passed: gf_in_b && sum == *b,
        dim_sum: sum.dim(),
        dim_b: b.dim(),
        gf,
        b_u,
        gf_in_b,
    })
}

/// Forms drawn for polarization runs, with bookkeeping on rejections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSelection {
    pub forms: Vec<PForm>,
    /// Minimal `dim g^f` over the regularity sample.
    pub sampled_min: usize,
    /// Largest `rank ad(x_s)` among regular sample forms.
    pub max_semisimple_rank: usize,
    pub drawn: usize,
    pub rejected_not_regular: usize,
    pub rejected_low_rank: usize,
    pub rejected_irrational: usize,
}

/// Upper bound on candidate draws in [`sample_generic_forms`].
pub const MAX_DRAWS: usize = 20_000;

/// Draws up to `count` forms that are regular, generic in the sense that
/// `rank ad(x_s)` is as large as anywhere in the seeded sample, and have
/// rational `ad(x_f)` spectrum (so the eigenspace split exists over ℚ).
pub fn sample_generic_forms(pair: &SymmetricPair, seed: u64, count: usize) -> Result<FormSelection> {
    if !pair.is_anti_invariant() {
        return Err(Error::MissingForm);
    }
    let g = pair.algebra();
    let semisimple_rank = |f: &PForm| -> Result<usize> {
        let xf = pair.xf_of_form(f)?;
        let (s, _) = jordan_chevalley(&g.ad_matrix(&xf));
        Ok(s.rank())
    };
    let sampled_min = pair.sampled_minimum(seed);
    let mut sampler = FormSampler::new(seed);
    let mut max_semisimple_rank = 0;
    for _ in 0..DEFAULT_SAMPLE_SIZE {
        let f = sampler.next_form(pair.dim_p());
        if pair.centralizer(&f).dim() == sampled_min {
            max_semisimple_rank = max_semisimple_rank.max(semisimple_rank(&f)?);
        }
    }
    let mut sel = FormSelection {
        forms: Vec::new(),
        sampled_min,
        max_semisimple_rank,
        drawn: 0,
        rejected_not_regular: 0,
        rejected_low_rank: 0,
        rejected_irrational: 0,
    };
    let mut sampler = FormSampler::new(seed.wrapping_add(1));
    while sel.forms.len() < count && sel.drawn < MAX_DRAWS {
        sel.drawn += 1;
        let f = sampler.next_form(pair.dim_p());
        if pair.centralizer(&f).dim() != sampled_min {
            sel.rejected_not_regular += 1;
            continue;
        }
        if semisimple_rank(&f)? != max_semisimple_rank {
            sel.rejected_low_rank += 1;
            continue;
        }
        let xf = pair.xf_of_form(&f)?;
        if rational_roots(&charpoly(&g.ad_matrix(&xf))).is_err() {
            sel.rejected_irrational += 1;
            continue;
        }
        sel.forms.push(f);
    }
    Ok(sel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use crate::sympair::{builtin_pair, named_form};
    use alloc::vec;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn abelian_pair_polarizes_to_everything() {
        let pair = builtin_pair("cotangent:abelian2").unwrap();
        let f = PForm::new(v(&[2, -3]));
        let pol = construct_polarization(&pair, &f).unwrap();
        assert_eq!(pol.b, Subspace::full(4));
        assert_eq!(pol.base_case, BaseCase::AbelianIdealP);
        assert!(verify_polarization(&pair, &f, &pol.b).passed());
        assert!(pukanszky_check(&pair, &f, &pol.b).unwrap().passed);
    }

    #[test]
    fn cotangent_aff1_trace() {
        let pair = builtin_pair("cotangent:aff1").unwrap();
        let f = named_form(&pair, "f1").unwrap();
        let pol = construct_polarization(&pair, &f).unwrap();
        assert_eq!(
            pol.b,
            Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])])
        );
        assert_eq!(pol.trace.len(), 2);
        let top = &pol.trace[0];
        assert_eq!(top.x_s, Element::basis(4, 0));
        assert!(top.x_u.is_zero());
        assert_eq!(top.positive, vec![int(1)]);
        assert_eq!(top.n, Subspace::span(4, [v(&[0, 1, 0, 0])]));
        assert_eq!(top.eigenvalues, vec![(int(-1), 1), (int(0), 2), (int(1), 1)]);
        assert_eq!(top.sub_dim, Some(2));
        assert!(top.checks.as_ref().unwrap().all_hold());
        let base = &pol.trace[1];
        assert_eq!(base.base_case, Some(BaseCase::AbelianIdealP));
        assert_eq!(
            base.algebra,
            Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0])])
        );
        assert_eq!(pol.base_case, BaseCase::AbelianIdealP);

        let cert = verify_polarization(&pair, &f, &pol.b);
        assert!(cert.passed(), "{cert:?}");
        let puk = pukanszky_check(&pair, &f, &pol.b).unwrap();
        assert!(puk.passed);
        assert_eq!(puk.gf, Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0])]));
        assert_eq!(puk.b_u, Subspace::span(4, [v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])]));
    }

    #[test]
    fn cotangent_aff1_nilpotent_form() {
        // f = f2*: x_f = e2 is ad-nilpotent, so the base case applies at once.
        let pair = builtin_pair("cotangent:aff1").unwrap();
        let f = named_form(&pair, "f2").unwrap();
        let pol = construct_polarization(&pair, &f).unwrap();
        assert_eq!(pol.trace.len(), 1);
        assert_eq!(
            pol.b,
            Subspace::span(4, [v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])])
        );
        assert!(verify_polarization(&pair, &f, &pol.b).passed());
        assert!(pukanszky_check(&pair, &f, &pol.b).unwrap().passed);
    }

    #[test]
    fn swap_sl2_cartan_direction() {
        let pair = builtin_pair("swap:sl2").unwrap();
        let f = named_form(&pair, "H-").unwrap();
        let pol = construct_polarization(&pair, &f).unwrap();
        assert_eq!(pol.b.dim(), 4);
        let top = &pol.trace[0];
        // x_s = H⁺/16, ad-eigenvalues 0 and ±1/8 (= ±2t with t = 1/16).
        assert_eq!(
            top.eigenvalues,
            vec![(frac(-1, 8), 2), (int(0), 2), (frac(1, 8), 2)]
        );
        let (kf, _) = pair.centralizer_split(&f);
        assert!(pol.b.contains_space(&kf));
        assert!(pol.b.contains_space(&top.n));
        assert!(top.checks.as_ref().unwrap().all_hold());
        assert!(verify_polarization(&pair, &f, &pol.b).passed());
        assert!(pukanszky_check(&pair, &f, &pol.b).unwrap().passed);
    }

    #[test]
    fn swap_sl2_nilpotent_form_is_unsupported() {
        // f dual to E⁻ gives x_f ∝ F⁺, nilpotent; p is not an abelian ideal.
        let pair = builtin_pair("swap:sl2").unwrap();
        let f = named_form(&pair, "E-").unwrap();
        assert!(matches!(
            construct_polarization(&pair, &f),
            Err(Error::BaseCaseUnsupported(_))
        ));
    }

    #[test]
    fn irrational_spectrum_is_reported() {
        // x_f ∝ E⁺ − F⁺ up to scaling has ad-eigenvalues ±2i·c.
        let pair = builtin_pair("cotangent:sl2").unwrap();
        let f = PForm::new(v(&[0, 1, -1]));
        assert_eq!(construct_polarization(&pair, &f), Err(Error::NonRationalSpectrum));
    }

    #[test]
    fn certificates_reject_bad_subspaces() {
        let pair = builtin_pair("cotangent:aff1").unwrap();
        let f = named_form(&pair, "f1").unwrap();
        let cert = verify_polarization(&pair, &f, pair.k());
        assert!(!cert.passed());
        assert_eq!((cert.dim_b, cert.dim_gf), (2, 2));
        assert!(!cert.maximal);
        let cert = verify_polarization(&pair, &f, &Subspace::full(4));
        assert!(!cert.isotropic);
        assert!(cert.isotropy_witness.is_some());
    }

    #[test]
    fn pairs_without_form_are_rejected() {
        let g = crate::lie::builtin::aff1();
        let pair = SymmetricPair::new(g, Mat::identity(2), None, false).unwrap();
        assert_eq!(
            construct_polarization(&pair, &PForm::zero(0)),
            Err(Error::MissingForm)
        );
    }

    #[test]
    fn generic_sampling_on_catalog() {
        for name in crate::sympair::BUILTIN_PAIRS {
            let pair = builtin_pair(name).unwrap();
            let sel = sample_generic_forms(&pair, 7, 5).unwrap();
            assert_eq!(sel.forms.len(), 5, "{name}");
            for f in &sel.forms {
                let pol = construct_polarization(&pair, f).unwrap();
                assert!(verify_polarization(&pair, f, &pol.b).passed(), "{name}");
                assert!(pukanszky_check(&pair, f, &pol.b).unwrap().passed, "{name}");
            }
        }
    }
}
