//! The `AlgebraSpec` input document and target resolution.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use sympair_core::exactla::{vector, Mat};
use sympair_core::lie::LieAlgebra;
use sympair_core::scalar::{parse, to_fraction_string};
use sympair_core::sympair::{builtin_pair, SymmetricPair, BUILTIN_PAIRS};
use sympair_core::Scalar;

use crate::error::{location_of, CliError};
use crate::report::SCHEMA_VERSION;

/// A rational written either as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawScalar {
    Int(i64),
    Str(String),
}

impl RawScalar {
    fn to_scalar(&self, location: &str) -> Result<Scalar, CliError> {
        match self {
            RawScalar::Int(n) => Ok(Scalar::from_integer((*n).into())),
            RawScalar::Str(s) => parse(s).ok_or_else(|| CliError::parse(location, format!("not a rational: {s:?}"))),
        }
    }

    pub fn from_scalar(x: &Scalar) -> Self {
        RawScalar::Str(to_fraction_string(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    pub coords: Vec<RawScalar>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    #[serde(default)]
    pub anti_invariant: bool,
}

/// Input document describing an algebra, optionally with `σ` and `B`.
///
/// Each bracket entry gives `[b_i, b_j]`; `[b_j, b_i]` is filled in by
/// antisymmetry unless listed too. A missing `sigma` means the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub schema_version: u32,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<Vec<RawScalar>>>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Vec<RawScalar>>>,
    #[serde(default)]
    pub flags: Flags,
}

fn matrix(rows: &[Vec<RawScalar>], dim: usize, field: &str) -> Result<Mat, CliError> {
    if rows.len() != dim {
        return Err(CliError::parse(field, format!("expected {dim} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(CliError::parse(
                format!("{field}[{r}]"),
                format!("expected {dim} entries, found {}", row.len()),
            ));
        }
        out.push(
            row.iter()
                .enumerate()
                .map(|(c, x)| x.to_scalar(&format!("{field}[{r}][{c}]")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(Mat::from_rows(out))
}

impl AlgebraSpec {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let spec: AlgebraSpec = serde_json::from_str(text)
            .map_err(|e| CliError::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
        if spec.schema_version != SCHEMA_VERSION {
            return Err(CliError::parse(
                "schema_version",
                format!("unsupported schema version {}", spec.schema_version),
            ));
        }
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Builds the pair, running every structural check. The first failing
    /// check becomes a validation error naming it.
    pub fn to_pair(&self) -> Result<SymmetricPair, CliError> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(CliError::parse("basis", format!("expected {n} labels, found {}", self.basis.len())));
        }
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (k, b) in self.brackets.iter().enumerate() {
            let loc = format!("brackets[{k}]");
            if b.i >= n || b.j >= n {
                return Err(CliError::parse(&loc, format!("index out of range for dim {n}")));
            }
            if b.coords.len() != n {
                return Err(CliError::parse(
                    format!("{loc}.coords"),
                    format!("expected {n} coordinates, found {}", b.coords.len()),
                ));
            }
            let coords = b
                .coords
                .iter()
                .enumerate()
                .map(|(c, x)| x.to_scalar(&format!("{loc}.coords[{c}]")))
                .collect::<Result<Vec<_>, _>>()?;
            brackets.push((b.i, b.j, coords));
        }
        let g = LieAlgebra::from_raw_brackets(self.basis.clone(), &brackets);
        let sigma = match &self.sigma {
            Some(rows) => matrix(rows, n, "sigma")?,
            None => Mat::identity(n),
        };
        let form = self.b.as_ref().map(|rows| matrix(rows, n, "B")).transpose()?;
        let report = SymmetricPair::validate(&g, &sigma, form.as_ref(), self.flags.anti_invariant);
        if let Some(bad) = report.first_failure() {
            return Err(CliError::Validation {
                location: location_of(bad.id).into(),
                axiom: bad.id.into(),
                message: bad.detail.clone(),
            });
        }
        Ok(SymmetricPair::new(g, sigma, form, self.flags.anti_invariant)?)
    }

    /// The document describing an existing pair.
    pub fn from_pair(name: &str, pair: &SymmetricPair) -> Self {
        let g = pair.algebra();
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = g.structure(i, j);
                if !vector::is_zero(v) {
                    brackets.push(BracketSpec {
                        i,
                        j,
                        coords: v.iter().map(RawScalar::from_scalar).collect(),
                    });
                }
            }
        }
        let rows = |m: &Mat| -> Vec<Vec<RawScalar>> {
            m.to_rows()
                .iter()
                .map(|r| r.iter().map(RawScalar::from_scalar).collect())
                .collect()
        };
        AlgebraSpec {
            schema_version: SCHEMA_VERSION,
            name: name.into(),
            dim: n,
            basis: g.labels().to_vec(),
            brackets,
            sigma: Some(rows(pair.sigma())),
            b: pair.form().map(rows),
            flags: Flags {
                anti_invariant: pair.is_anti_invariant(),
            },
        }
    }
}

/// A resolved command target.
pub struct Target {
    pub name: String,
    pub pair: SymmetricPair,
    /// `sha256:` digest of the input document bytes (for builtins, of the
    /// canonical document).
    pub digest: String,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// Resolves a `family:base` builtin or reads an `AlgebraSpec` file.
pub fn resolve_target(target: &str) -> Result<Target, CliError> {
    if let Some(pair) = builtin_pair(target) {
        let doc = AlgebraSpec::from_pair(target, &pair).to_json();
        return Ok(Target {
            name: target.into(),
            pair,
            digest: digest(doc.as_bytes()),
        });
    }
    let path = std::path::Path::new(target);
    if !path.exists() {
        if target.contains(':') {
            return Err(CliError::Usage(format!(
                "unknown builtin {target:?}; available: {}",
                BUILTIN_PAIRS.join(", ")
            )));
        }
        return Err(CliError::Io(format!("cannot read {target:?}: no such file")));
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {target:?}: {e}")))?;
    let spec = AlgebraSpec::from_json(&text)?;
    Ok(Target {
        name: target.into(),
        pair: spec.to_pair()?,
        digest: digest(text.as_bytes()),
    })
}
