//! Symmetric pairs `(g, σ)` with an optional invariant form `B`.
//!
//! When `B` is anti-invariant (`B(σx, σy) = −B(x, y)`), `k` and `p` are
//! isotropic and `B` pairs them perfectly; every linear form `f` on `p`
//! (extended by zero on `k`) then corresponds to a unique `x_f ∈ k`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{solve, vector, Mat};
use crate::lie::{builtin, AxiomViolation, Element, LieAlgebra, Subspace};
use crate::scalar::{frac, Scalar};

/// Number of random forms used to estimate the minimal `dim g^f`.
pub const DEFAULT_SAMPLE_SIZE: usize = 200;

/// A linear form on `p`, by its values on the `p` basis. It is extended by
/// zero on `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PForm {
    coords: Vec<Scalar>,
}

impl PForm {
    pub fn new(coords: Vec<Scalar>) -> Self {
        PForm { coords }
    }

    pub fn zero(dim_p: usize) -> Self {
        PForm::new(vector::zeros(dim_p))
    }

    /// The dual form `p_j*`.
    pub fn unit(dim_p: usize, j: usize) -> Self {
        PForm::new(vector::unit(dim_p, j))
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }
}

/// One structural check on a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub id: &'static str,
    pub passed: bool,
    /// Empty on success, otherwise a witness.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairReport {
    pub checks: Vec<PairCheck>,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&PairCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn push(&mut self, id: &'static str, witness: Option<String>) {
        self.checks.push(PairCheck {
            id,
            passed: witness.is_none(),
            detail: witness.unwrap_or_default(),
        });
    }
}

/// Outcome of the two regularity conditions at `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityConditions {
    /// `[k^f, p^f] = 0`.
    pub cond1: bool,
    /// The subalgebra generated by `p^f` is nilpotent.
    pub cond2: bool,
    /// A pair `(x ∈ k^f, y ∈ p^f)` with nonzero bracket.
    pub cond1_witness: Option<(Element, Element)>,
    /// The last term of the lower central series of the generated
    /// subalgebra, when it is not zero.
    pub cond2_witness: Option<Subspace>,
}

/// Seeded source of small random rational forms: numerators in `[-9, 9]`,
/// denominators in `{1, 2, 3}`.
pub struct FormSampler {
    rng: ChaCha8Rng,
}

impl FormSampler {
    pub fn new(seed: u64) -> Self {
        FormSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_form(&mut self, dim_p: usize) -> PForm {
        PForm::new(
            (0..dim_p)
                .map(|_| {
                    let n: i64 = self.rng.gen_range(-9..=9);
                    let d: i64 = self.rng.gen_range(1..=3);
                    frac(n, d)
                })
                .collect(),
        )
    }
}

/// A symmetric pair with its cached `k ⊕ p` split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPair {
    g: LieAlgebra,
    sigma: Mat,
    form: Option<Mat>,
    anti_invariant: bool,
    k: Subspace,
    p: Subspace,
    // Columns: p basis then k basis.
    adapted: Mat,
    adapted_inv: Mat,
}

impl SymmetricPair {
    /// Validates every structural invariant and builds the pair; the first
    /// failing check becomes [`Error::InvalidPair`].
    pub fn new(g: LieAlgebra, sigma: Mat, form: Option<Mat>, anti_invariant: bool) -> Result<Self> {
        let report = Self::validate(&g, &sigma, form.as_ref(), anti_invariant);
        if let Some(bad) = report.first_failure() {
            return Err(Error::InvalidPair {
                axiom: bad.id.to_string(),
                detail: bad.detail.clone(),
            });
        }
        Ok(Self::assemble(g, sigma, form, anti_invariant))
    }

    fn assemble(g: LieAlgebra, sigma: Mat, form: Option<Mat>, anti_invariant: bool) -> Self {
        let n = g.dim();
        let id = Mat::identity(n);
        let k = Subspace::kernel_of(&(&sigma - &id));
        let p = Subspace::kernel_of(&(&sigma + &id));
        let columns: Vec<Vec<Scalar>> = p.basis().iter().chain(k.basis()).cloned().collect();
        let adapted = Mat::from_columns(n, &columns);
        let adapted_inv = adapted.inverse().expect("σ involutive, eigenspaces span g");
        SymmetricPair {
            g,
            sigma,
            form,
            anti_invariant,
            k,
            p,
            adapted,
            adapted_inv,
        }
    }

    /// Runs every structural check without building the pair.
    pub fn validate(g: &LieAlgebra, sigma: &Mat, form: Option<&Mat>, anti_invariant: bool) -> PairReport {
        let n = g.dim();
        let mut report = PairReport::default();
        let axioms = g.check_axioms();
        let anti = axioms.violations.iter().find_map(|v| match v {
            AxiomViolation::Antisymmetry { i, j } => Some(format!("[b{i}, b{j}]")),
            _ => None,
        });
        report.push("lie.antisymmetry", anti);
        let jac = axioms.violations.iter().find_map(|v| match v {
            AxiomViolation::Jacobi { i, j, k, .. } => Some(format!("(b{i}, b{j}, b{k})")),
            _ => None,
        });
        report.push("lie.jacobi", jac);

        if sigma.rows() != n || sigma.cols() != n {
            report.push("sigma.shape", Some(format!("{}x{} for dim {n}", sigma.rows(), sigma.cols())));
            return report;
        }
        report.push("sigma.shape", None);
        let id = Mat::identity(n);
        let sq = sigma * sigma;
        report.push(
            "sigma.involution",
            (sq != id).then(|| "sigma^2 != identity".to_string()),
        );
        report.push("sigma.automorphism", first_pair(n, |i, j| {
            let lhs = sigma.mul_vec(g.structure(i, j));
            let rhs = g.bracket_vec(&sigma.column(i), &sigma.column(j));
            lhs != rhs
        }));
        if sq != id {
            return report;
        }
        let k = Subspace::kernel_of(&(sigma - &id));
        let p = Subspace::kernel_of(&(sigma + &id));
        report.push("split.kk_in_k", bracket_witness(g, &k, &k, &k));
        report.push("split.kp_in_p", bracket_witness(g, &k, &p, &p));
        report.push("split.pp_in_k", bracket_witness(g, &p, &p, &k));

        let Some(b) = form else {
            return report;
        };
        if b.rows() != n || b.cols() != n {
            report.push("form.shape", Some(format!("{}x{} for dim {n}", b.rows(), b.cols())));
            return report;
        }
        report.push("form.shape", None);
        report.push("form.symmetric", (b != &b.transpose()).then(|| "B != B^T".to_string()));
        report.push(
            "form.nondegenerate",
            b.determinant().is_zero().then(|| "det B = 0".to_string()),
        );
        report.push("form.invariant", first_triple(n, |i, j, l| {
            // B([b_i, b_j], b_l) = B(b_i, [b_j, b_l])
            let lhs = vector::dot(g.structure(i, j), &b.column(l));
            let rhs = vector::dot(b.row(i), g.structure(j, l));
            lhs != rhs
        }));
        if anti_invariant {
            let bs = &(&sigma.transpose() * b) * sigma;
            report.push(
                "form.anti_invariant",
                first_pair(n, |i, j| bs[(i, j)] != -b[(i, j)].clone()),
            );
            report.push("form.k_isotropic", isotropy_witness(b, &k));
            report.push("form.p_isotropic", isotropy_witness(b, &p));
            let duality = if k.dim() != p.dim() {
                Some(format!("dim k = {} but dim p = {}", k.dim(), p.dim()))
            } else {
                let pairing = pairing_matrix(b, &k, &p);
                (k.dim() > 0 && pairing.determinant().is_zero())
                    .then(|| "B restricted to k x p is degenerate".to_string())
            };
            report.push("form.kp_duality", duality);
        }
        report
    }

    /// Re-runs all structural checks on an existing pair.
    pub fn structural_report(&self) -> PairReport {
        Self::validate(&self.g, &self.sigma, self.form.as_ref(), self.anti_invariant)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn sigma(&self) -> &Mat {
        &self.sigma
    }

    pub fn form(&self) -> Option<&Mat> {
        self.form.as_ref()
    }

    pub fn is_anti_invariant(&self) -> bool {
        self.anti_invariant && self.form.is_some()
    }

    pub fn k(&self) -> &Subspace {
        &self.k
    }

    pub fn p(&self) -> &Subspace {
        &self.p
    }

    pub fn dim_k(&self) -> usize {
        self.k.dim()
    }

    pub fn dim_p(&self) -> usize {
        self.p.dim()
    }

    /// Basis of `g` with the `p` basis first and the `k` basis after it, as
    /// matrix columns.
    pub fn adapted_basis(&self) -> &Mat {
        &self.adapted
    }

    /// Coordinates of `v` in the adapted basis (`p` part first).
    pub fn adapted_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.adapted_inv.mul_vec(v)
    }

    pub fn p_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut c = self.adapted_coords(v);
        c.truncate(self.dim_p());
        c
    }

    pub fn k_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.adapted_coords(v).split_off(self.dim_p())
    }

    pub fn p_vector(&self, j: usize) -> &[Scalar] {
        &self.p.basis()[j]
    }

    pub fn k_vector(&self, a: usize) -> &[Scalar] {
        &self.k.basis()[a]
    }

    /// Human-readable names for the `p` basis.
    pub fn p_labels(&self) -> Vec<String> {
        basis_labels(&self.g, &self.p, "p")
    }

    pub fn k_labels(&self) -> Vec<String> {
        basis_labels(&self.g, &self.k, "k")
    }

    pub fn b(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        let form = self.form.as_ref().ok_or(Error::MissingForm)?;
        Ok(vector::dot(x, &form.mul_vec(y)))
    }

    /// `f` as a linear form on all of `g`, by its values on the basis of `g`.
    pub fn form_on_g(&self, f: &PForm) -> Vec<Scalar> {
        assert_eq!(f.coords().len(), self.dim_p(), "form length must equal dim p");
        (0..self.dim())
            .map(|i| {
                (0..self.dim_p())
                    .map(|j| &f.coords()[j] * &self.adapted_inv[(j, i)])
                    .fold(Scalar::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// The unique `x_f ∈ k` with `B(x_f, Y) = f(Y)` for every `Y ∈ p`.
    pub fn xf_of_form(&self, f: &PForm) -> Result<Element> {
        if !self.is_anti_invariant() {
            return Err(Error::MissingForm);
        }
        let form = self.form.as_ref().expect("checked above");
        let pairing = pairing_matrix(form, &self.p, &self.k);
        // pairing[(j, a)] = B(p_j, k_a); solve Σ_a c_a B(k_a, p_j) = f_j.
        let c = solve(&pairing, f.coords()).ok_or(Error::FormDegenerate)?;
        Ok(Element::new(self.k.combine(&c)))
    }

    /// `B_f(b_i, b_j) = f([b_i, b_j])`.
    pub fn bf_matrix(&self, f: &PForm) -> Mat {
        self.g.form_matrix(&self.form_on_g(f))
    }

    /// `g^f`, the kernel of `B_f`.
    pub fn centralizer(&self, f: &PForm) -> Subspace {
        self.g.centralizer_of_form(&self.form_on_g(f))
    }

    /// `(k^f, p^f)`.
    pub fn centralizer_split(&self, f: &PForm) -> (Subspace, Subspace) {
        let gf = self.centralizer(f);
        (gf.intersection(&self.k), gf.intersection(&self.p))
    }

    pub fn is_sigma_stable(&self, s: &Subspace) -> bool {
        s.image(&self.sigma) == *s
    }

    /// `δ(X) = ½ tr(ad X |_p)` on the `k` basis.
    pub fn delta_character(&self) -> Vec<Scalar> {
        let half = frac(1, 2);
        self.k
            .basis()
            .iter()
            .map(|x| {
                let tr = (0..self.dim_p())
                    .map(|j| {
                        let y = self.g.bracket_vec(x, self.p_vector(j));
                        self.p_coords(&y)[j].clone()
                    })
                    .fold(Scalar::zero(), |a, b| a + b);
                tr * &half
            })
            .collect()
    }

    /// Smallest `dim g^f` over the seeded sample.
    pub fn sampled_minimum(&self, seed: u64) -> usize {
        let mut sampler = FormSampler::new(seed);
        (0..DEFAULT_SAMPLE_SIZE)
            .map(|_| self.centralizer(&sampler.next_form(self.dim_p())).dim())
            .min()
            .unwrap_or(self.dim())
    }

    /// Whether `dim g^f` is no larger than the sampled minimum.
    pub fn is_regular(&self, f: &PForm, seed: u64) -> bool {
        self.centralizer(f).dim() <= self.sampled_minimum(seed)
    }

    /// The first sampled form achieving the sampled minimum.
    pub fn sample_regular(&self, seed: u64) -> PForm {
        let mut sampler = FormSampler::new(seed);
        let forms: Vec<PForm> = (0..DEFAULT_SAMPLE_SIZE.max(1))
            .map(|_| sampler.next_form(self.dim_p()))
            .collect();
        let dims: Vec<usize> = forms.iter().map(|f| self.centralizer(f).dim()).collect();
        let min = dims.iter().copied().min().unwrap_or(0);
        let idx = dims.iter().position(|&d| d == min).unwrap_or(0);
        forms[idx].clone()
    }

    pub fn regularity_conditions(&self, f: &PForm) -> RegularityConditions {
        let (kf, pf) = self.centralizer_split(f);
        let mut cond1_witness = None;
        'outer: for x in kf.basis() {
            for y in pf.basis() {
                if !vector::is_zero(&self.g.bracket_vec(x, y)) {
                    cond1_witness = Some((Element::new(x.clone()), Element::new(y.clone())));
                    break 'outer;
                }
            }
        }
        let generated = self.g.subalgebra_generated(&pf);
        let last = self
            .g
            .lower_central_series(&generated)
            .pop()
            .expect("nonempty series");
        let cond2_witness = (!last.is_zero()).then_some(last);
        RegularityConditions {
            cond1: cond1_witness.is_none(),
            cond2: cond2_witness.is_none(),
            cond1_witness,
            cond2_witness,
        }
    }

    /// The σ-stable subalgebra `sub` as a pair in its own right, with the
    /// restricted involution and form. Returns the pair together with the
    /// `dim g × dim sub` embedding matrix whose columns are the new basis
    /// (`sub ∩ k` first, then `sub ∩ p`).
    pub fn restrict(&self, sub: &Subspace) -> Result<(SymmetricPair, Mat)> {
        if !self.is_sigma_stable(sub) {
            return Err(Error::InvalidPair {
                axiom: "restrict.sigma_stable".into(),
                detail: "subspace is not σ-stable".into(),
            });
        }
        let k0 = sub.intersection(&self.k);
        let p0 = sub.intersection(&self.p);
        let columns: Vec<Vec<Scalar>> = k0.basis().iter().chain(p0.basis()).cloned().collect();
        let r = columns.len();
        let embed = Mat::from_columns(self.dim(), &columns);
        let gram = &embed.transpose() * &embed;
        let left = &gram.inverse().expect("independent columns") * &embed.transpose();
        let coords = |w: &[Scalar]| -> Result<Vec<Scalar>> {
            let c = left.mul_vec(w);
            if embed.mul_vec(&c) != w {
                return Err(Error::NotASubalgebra);
            }
            Ok(c)
        };
        let mut table = Vec::with_capacity(r);
        for x in &columns {
            let mut row = Vec::with_capacity(r);
            for y in &columns {
                row.push(coords(&self.g.bracket_vec(x, y))?);
            }
            table.push(row);
        }
        let labels = columns
            .iter()
            .enumerate()
            .map(|(a, v)| self.g.describe(v).unwrap_or_else(|| format!("u{}", a + 1)))
            .collect();
        let g0 = LieAlgebra::new(labels, table)?;
        let signs: Vec<Scalar> = (0..r)
            .map(|a| if a < k0.dim() { Scalar::one() } else { -Scalar::one() })
            .collect();
        let sigma0 = Mat::diagonal(&signs);
        let form0 = self
            .form
            .as_ref()
            .map(|b| &(&embed.transpose() * b) * &embed);
        let pair = SymmetricPair::new(g0, sigma0, form0, self.anti_invariant)?;
        Ok((pair, embed))
    }
}

fn basis_labels(g: &LieAlgebra, s: &Subspace, prefix: &str) -> Vec<String> {
    s.basis()
        .iter()
        .enumerate()
        .map(|(j, v)| g.describe(v).unwrap_or_else(|| format!("{prefix}{}", j + 1)))
        .collect()
}

/// `(B(a_i, b_j))_{ij}` for bases of `a` and `b`.
fn pairing_matrix(form: &Mat, a: &Subspace, b: &Subspace) -> Mat {
    Mat::from_fn(a.dim(), b.dim(), |i, j| {
        vector::dot(&a.basis()[i], &form.mul_vec(&b.basis()[j]))
    })
}

fn first_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<String> {
    for i in 0..n {
        for j in 0..n {
            if bad(i, j) {
                return Some(format!("(b{i}, b{j})"));
            }
        }
    }
    None
}

fn first_triple(n: usize, mut bad: impl FnMut(usize, usize, usize) -> bool) -> Option<String> {
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                if bad(i, j, l) {
                    return Some(format!("(b{i}, b{j}, b{l})"));
                }
            }
        }
    }
    None
}

fn bracket_witness(g: &LieAlgebra, a: &Subspace, b: &Subspace, target: &Subspace) -> Option<String> {
    for (i, x) in a.basis().iter().enumerate() {
        for (j, y) in b.basis().iter().enumerate() {
            if !target.contains(&g.bracket_vec(x, y)) {
                return Some(format!("basis pair ({i}, {j})"));
            }
        }
    }
    None
}

fn isotropy_witness(form: &Mat, s: &Subspace) -> Option<String> {
    let m = pairing_matrix(form, s, s);
    (!m.is_zero()).then(|| "B does not vanish on the subspace".to_string())
}

fn dual_label(label: &str) -> String {
    match label.strip_prefix('e') {
        Some(rest) if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) => {
            format!("f{rest}")
        }
        _ => format!("{label}*"),
    }
}

/// `g = h ⋉ h*` with `k = h`, `p = h*` under the coadjoint action
/// `(x·ξ)(y) = −ξ([x, y])`, `[p, p] = 0`, and `B(x, ξ) = ξ(x)`.
///
/// Basis: `h` basis, then the dual basis. Dual labels replace a leading `e`
/// by `f` (`e1 → f1`) or append `*`.
pub fn make_cotangent_pair(h: &LieAlgebra) -> Result<SymmetricPair> {
    let n = h.dim();
    let dim = 2 * n;
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vector::zeros(dim);
            v[..n].clone_from_slice(h.structure(i, j));
            brackets.push((i, j, v));
        }
    }
    for i in 0..n {
        for j in 0..n {
            // [e_i, f_j] = −Σ_l c_{il}^j f_l
            let mut v = vector::zeros(dim);
            for l in 0..n {
                v[n + l] = -h.structure(i, l)[j].clone();
            }
            if !vector::is_zero(&v) {
                brackets.push((i, n + j, v));
            }
        }
    }
    let mut labels: Vec<String> = h.labels().to_vec();
    labels.extend(h.labels().iter().map(|l| dual_label(l)));
    let g = LieAlgebra::from_brackets(labels, &brackets);
    let signs: Vec<Scalar> = (0..dim)
        .map(|a| if a < n { Scalar::one() } else { -Scalar::one() })
        .collect();
    let form = Mat::from_fn(dim, dim, |a, b| {
        if (a < n && b == a + n) || (b < n && a == b + n) {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    SymmetricPair::new(g, Mat::diagonal(&signs), Some(form), true)
}

/// `g = h ⊕ h` with `σ(a, b) = (b, a)` and `B((a, b), (c, d)) = q(a, c) − q(b, d)`.
///
/// Basis: `X⁺ = (X, X)` for each basis element of `h` (spanning `k`), then
/// `X⁻ = (X, −X)` (spanning `p`). In this basis `[X⁺, Y⁺] = [X, Y]⁺`,
/// `[X^±, Y^∓] = [X, Y]⁻`, `[X⁻, Y⁻] = [X, Y]⁺`, and `B(X⁺, Y⁻) = 2q(X, Y)`
/// with `k`, `p` isotropic.
pub fn make_swap_pair(h: &LieAlgebra, q: &Mat) -> Result<SymmetricPair> {
    let n = h.dim();
    if q.rows() != n || q.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: q.rows(),
        });
    }
    if q != &q.transpose() {
        return Err(Error::FormNotInvariant);
    }
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let lhs = vector::dot(h.structure(i, j), &q.column(l));
                let rhs = vector::dot(q.row(i), h.structure(j, l));
                if lhs != rhs {
                    return Err(Error::FormNotInvariant);
                }
            }
        }
    }
    if q.determinant().is_zero() {
        return Err(Error::FormDegenerate);
    }
    let dim = 2 * n;
    let lift = |c: &[Scalar], offset: usize| {
        let mut v = vector::zeros(dim);
        v[offset..offset + n].clone_from_slice(c);
        v
    };
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = h.structure(i, j);
            if i < j {
                brackets.push((i, j, lift(c, 0)));
                brackets.push((n + i, n + j, lift(c, 0)));
            }
            brackets.push((i, n + j, lift(c, n)));
        }
    }
    let mut labels: Vec<String> = h.labels().iter().map(|l| format!("{l}+")).collect();
    labels.extend(h.labels().iter().map(|l| format!("{l}-")));
    let g = LieAlgebra::from_brackets(labels, &brackets);
    let signs: Vec<Scalar> = (0..dim)
        .map(|a| if a < n { Scalar::one() } else { -Scalar::one() })
        .collect();
    let two = Scalar::from_integer(2.into());
    let form = Mat::from_fn(dim, dim, |a, b| match (a < n, b < n) {
        (true, false) => &q[(a, b - n)] * &two,
        (false, true) => &q[(a - n, b)] * &two,
        _ => Scalar::zero(),
    });
    SymmetricPair::new(g, Mat::diagonal(&signs), Some(form), true)
}

/// Catalog names accepted by [`builtin_pair`].
pub const BUILTIN_PAIRS: [&str; 5] = [
    "cotangent:abelian2",
    "cotangent:aff1",
    "cotangent:heis3",
    "cotangent:sl2",
    "swap:sl2",
];

/// Builds a catalog pair addressed as `family:base`.
pub fn builtin_pair(name: &str) -> Option<SymmetricPair> {
    let (family, base) = name.split_once(':')?;
    let h = builtin::by_name(base)?;
    match family {
        "cotangent" => make_cotangent_pair(&h).ok(),
        "swap" => make_swap_pair(&h, &h.killing_form()).ok(),
        _ => None,
    }
}

/// Convenience for tests and examples: the dual form of the `p` basis
/// vector labelled `label`.
pub fn named_form(pair: &SymmetricPair, label: &str) -> Option<PForm> {
    let j = pair.p_labels().iter().position(|l| l == label)?;
    Some(PForm::unit(pair.dim_p(), j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use alloc::vec;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn cot_aff() -> SymmetricPair {
        builtin_pair("cotangent:aff1").unwrap()
    }

    #[test]
    fn catalog_pairs_are_valid() {
        for name in BUILTIN_PAIRS {
            let pair = builtin_pair(name).unwrap();
            let report = pair.structural_report();
            assert!(report.passed(), "{name}: {:?}", report.first_failure());
            assert_eq!(pair.dim_k(), pair.dim_p());
        }
    }

    #[test]
    fn cotangent_aff1_brackets() {
        let pair = cot_aff();
        let g = pair.algebra();
        assert_eq!(g.dim(), 4);
        assert_eq!(g.labels(), &["e1", "e2", "f1", "f2"]);
        // Coadjoint-formula oracle: [e_i, f_j] = −Σ_l c_il^j f_l.
        assert_eq!(g.structure(0, 3), v(&[0, 0, 0, -1]).as_slice());
        assert_eq!(g.structure(1, 3), v(&[0, 0, 1, 0]).as_slice());
        assert!(vector::is_zero(g.structure(0, 2)));
        assert!(vector::is_zero(g.structure(1, 2)));
        assert!(vector::is_zero(g.structure(2, 3)));
    }

    #[test]
    fn cotangent_abelian_and_heis() {
        let ab = builtin_pair("cotangent:abelian2").unwrap();
        assert_eq!(ab.dim(), 4);
        assert!(ab.algebra().check_axioms().is_valid());
        let full = Subspace::full(4);
        assert!(ab.algebra().bracket_space(&full, &full).is_zero());

        let heis = builtin_pair("cotangent:heis3").unwrap();
        assert_eq!(heis.dim(), 6);
        let series = heis.algebra().lower_central_series(&Subspace::full(6));
        // g ⊋ [g, g] ⊋ [g, [g, g]] = 0
        assert_eq!(series.len(), 3);
        assert!(series[2].is_zero());
    }

    #[test]
    fn swap_pair_construction() {
        let sl2 = builtin::sl2();
        let pair = make_swap_pair(&sl2, &sl2.killing_form()).unwrap();
        assert_eq!(pair.dim(), 6);
        let k_alg = pair.algebra().restrict(pair.k()).unwrap();
        // k ≅ sl2: same structure constants in the X⁺ basis.
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k_alg.structure(i, j), sl2.structure(i, j));
            }
        }
        let ab = builtin::abelian2();
        let abpair = make_swap_pair(&ab, &Mat::identity(2)).unwrap();
        let full = Subspace::full(4);
        assert!(abpair.algebra().bracket_space(&full, &full).is_zero());
        assert_eq!(
            make_swap_pair(&sl2, &Mat::zeros(3, 3)),
            Err(Error::FormDegenerate)
        );
        assert_eq!(
            make_swap_pair(&sl2, &Mat::identity(3)),
            Err(Error::FormNotInvariant)
        );
    }

    #[test]
    fn invalid_sigma_is_rejected() {
        let g = builtin::aff1();
        let sigma = Mat::diagonal(&[int(2), int(1)]);
        match SymmetricPair::new(g, sigma, None, false) {
            Err(Error::InvalidPair { axiom, .. }) => assert_eq!(axiom, "sigma.involution"),
            other => panic!("unexpected {other:?}"),
        }
        // Swapping e1 and e2 is involutive but not an automorphism of aff1.
        let g = builtin::aff1();
        let sigma = Mat::from_rows(vec![v(&[0, 1]), v(&[1, 0])]);
        match SymmetricPair::new(g, sigma, None, false) {
            Err(Error::InvalidPair { axiom, .. }) => assert_eq!(axiom, "sigma.automorphism"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn xf_examples() {
        let pair = cot_aff();
        assert!(pair.xf_of_form(&PForm::zero(2)).unwrap().is_zero());
        assert_eq!(
            pair.xf_of_form(&named_form(&pair, "f1").unwrap()).unwrap(),
            Element::basis(4, 0)
        );
        // Swap sl2: B(X⁺, Y⁻) = 2K(X, Y); the form dual to H⁻ has
        // x_f = H⁺ / 16 since K(H, H) = 8.
        let swap = builtin_pair("swap:sl2").unwrap();
        let xf = swap.xf_of_form(&named_form(&swap, "H-").unwrap()).unwrap();
        assert_eq!(xf.coords(), &[frac(1, 16), int(0), int(0), int(0), int(0), int(0)]);
        // f(E⁻) = 1 pairs with F: K(E, F) = 4, so x_f = F⁺ / 8.
        let xf = swap.xf_of_form(&named_form(&swap, "E-").unwrap()).unwrap();
        assert_eq!(xf.coords(), &[int(0), int(0), frac(1, 8), int(0), int(0), int(0)]);
    }

    #[test]
    fn bf_matrix_examples() {
        let pair = cot_aff();
        assert!(pair.bf_matrix(&PForm::zero(2)).is_zero());
        let ab = builtin_pair("cotangent:abelian2").unwrap();
        assert!(ab.bf_matrix(&PForm::new(v(&[3, -2]))).is_zero());
        let m = pair.bf_matrix(&named_form(&pair, "f1").unwrap());
        for i in 0..4 {
            for j in 0..4 {
                let expected = match (i, j) {
                    (1, 3) => int(1),
                    (3, 1) => int(-1),
                    _ => int(0),
                };
                assert_eq!(m[(i, j)], expected, "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let pair = cot_aff();
        let f1 = named_form(&pair, "f1").unwrap();
        assert_eq!(
            pair.centralizer(&f1),
            Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0])])
        );
        let f2 = named_form(&pair, "f2").unwrap();
        assert_eq!(pair.centralizer(&f2).dim(), 2);
        assert!(pair.is_regular(&f1, 0));
        assert!(pair.is_regular(&f2, 0));
        assert!(!pair.is_regular(&PForm::zero(2), 0));
        assert_eq!(pair.sampled_minimum(0), 2);
        let ab = builtin_pair("cotangent:abelian2").unwrap();
        assert!(ab.is_regular(&PForm::zero(2), 3));
    }

    #[test]
    fn delta_examples() {
        let pair = cot_aff();
        assert_eq!(pair.delta_character(), vec![frac(-1, 2), int(0)]);
        let ab = builtin_pair("cotangent:abelian2").unwrap();
        assert_eq!(ab.delta_character(), vec![int(0), int(0)]);
        let swap = builtin_pair("swap:sl2").unwrap();
        assert_eq!(swap.delta_character(), vec![int(0); 3]);
    }

    #[test]
    fn regularity_condition_examples() {
        let pair = cot_aff();
        let rc = pair.regularity_conditions(&named_form(&pair, "f1").unwrap());
        assert!(rc.cond1 && rc.cond2);
        let (kf, pf) = pair.centralizer_split(&named_form(&pair, "f1").unwrap());
        assert_eq!(kf, Subspace::span(4, [v(&[1, 0, 0, 0])]));
        assert_eq!(pf, Subspace::span(4, [v(&[0, 0, 1, 0])]));

        let ab = builtin_pair("cotangent:abelian2").unwrap();
        let rc = ab.regularity_conditions(&PForm::new(v(&[1, 5])));
        assert!(rc.cond1 && rc.cond2);

        // f = 0 on swap sl2: p^f = p generates all of g ≅ sl2 ⊕ sl2.
        let swap = builtin_pair("swap:sl2").unwrap();
        let rc = swap.regularity_conditions(&PForm::zero(3));
        assert!(!rc.cond2);
        assert!(rc.cond2_witness.is_some());
        assert!(!rc.cond1);
    }

    #[test]
    fn restriction_to_centralizer() {
        let pair = cot_aff();
        let g0 = Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0])]);
        let (sub, embed) = pair.restrict(&g0).unwrap();
        assert_eq!(sub.dim(), 2);
        assert_eq!(sub.algebra().labels(), &["e1", "f1"]);
        assert_eq!(embed.column(1), v(&[0, 0, 1, 0]));
        assert!(sub.is_anti_invariant());
    }
}
