//! Map specifications for `isocheck`, e.g. `scale(g=id, m=2)` or `inner(a=i, z=1, conjugate=false)`.

use std::fmt;

use dickson_core::isomaps::{inner_automorphism, iso_inner, iso_nonassoc_quat, iso_octonion_double, iso_scale};
use dickson_core::{AlgElement, Algebra, AlgebraMap, Error, FieldValue, Matrix, MapParams, Provenance};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseMapSpec {
    Identity,
    /// `u ↦ a u a⁻¹`
    Inner(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixSpec {
    Identity,
    Rows(Vec<Vec<String>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapSpec {
    Scale { g: BaseMapSpec, m: String },
    Inner { a: String, z: String, conjugate: bool },
    NonAssoc { z: String, conjugate: bool },
    OctDouble { g: BaseMapSpec, m: String },
    Explicit(MatrixSpec),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapSpecError {
    Malformed(String),
    Math(Error),
}

impl fmt::Display for MapSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapSpecError::Malformed(m) => write!(f, "malformed map specification: {m}"),
            MapSpecError::Math(e) => write!(f, "cannot build map: {e}"),
        }
    }
}

impl std::error::Error for MapSpecError {}

impl From<Error> for MapSpecError {
    fn from(e: Error) -> MapSpecError {
        MapSpecError::Math(e)
    }
}

fn malformed(msg: impl Into<String>) -> MapSpecError {
    MapSpecError::Malformed(msg.into())
}

/// Splits at top-level commas.
fn split_top(text: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() || !parts.is_empty() {
        parts.push(cur.trim().to_string());
    }
    parts
}

/// `name(inner)` → `(name, inner)`.
fn call(text: &str) -> Option<(&str, &str)> {
    let text = text.trim();
    let open = text.find('(')?;
    let inner = text.strip_suffix(')')?;
    Some((text[..open].trim(), &inner[open + 1..]))
}

/// Binds positional and `key=value` arguments to `names`, filling `defaults`.
fn bind(args: &str, names: &[&str], defaults: &[(&str, &str)]) -> Result<Vec<String>, MapSpecError> {
    let mut out: Vec<Option<String>> = vec![None; names.len()];
    for (pos, part) in split_top(args).into_iter().enumerate() {
        if part.is_empty() {
            return Err(malformed("empty argument"));
        }
        let (slot, value) = match part.split_once('=') {
            Some((k, v)) if !k.contains('(') => {
                let k = k.trim();
                let idx = names.iter().position(|n| *n == k).ok_or_else(|| malformed(format!("unknown parameter '{k}'")))?;
                (idx, v.trim().to_string())
            }
            _ if pos < names.len() => (pos, part),
            _ => return Err(malformed(format!("too many arguments; expected {}", names.join(", ")))),
        };
        if out[slot].is_some() {
            return Err(malformed(format!("parameter '{}' given twice", names[slot])));
        }
        out[slot] = Some(value);
    }
    names
        .iter()
        .zip(out)
        .map(|(n, v)| {
            v.or_else(|| defaults.iter().find(|(k, _)| k == n).map(|(_, d)| d.to_string()))
                .ok_or_else(|| malformed(format!("missing parameter '{n}'")))
        })
        .collect()
}

fn boolean(s: &str) -> Result<bool, MapSpecError> {
    match s {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(malformed(format!("expected true or false, found '{s}'"))),
    }
}

fn base_map(s: &str) -> Result<BaseMapSpec, MapSpecError> {
    match s {
        "id" | "identity" => Ok(BaseMapSpec::Identity),
        _ => match call(s) {
            Some(("inner", a)) if !a.trim().is_empty() => Ok(BaseMapSpec::Inner(a.trim().to_string())),
            _ => Err(malformed(format!("base map must be id or inner(a), found '{s}'"))),
        },
    }
}

fn matrix(s: &str) -> Result<MatrixSpec, MapSpecError> {
    if s == "identity" || s == "id" {
        return Ok(MatrixSpec::Identity);
    }
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| malformed("matrix must be identity or [[row], [row], ...]"))?;
    let rows = split_top(inner)
        .into_iter()
        .map(|row| {
            let r = row.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(|| malformed("matrix row must be [..]"))?;
            Ok(split_top(r))
        })
        .collect::<Result<Vec<_>, MapSpecError>>()?;
    Ok(MatrixSpec::Rows(rows))
}

pub fn parse_map_spec(text: &str) -> Result<MapSpec, MapSpecError> {
    let (family, args) = call(text).ok_or_else(|| malformed(format!("expected family(parameters), found '{text}'")))?;
    match family {
        "scale" | "octdouble" => {
            let v = bind(args, &["g", "m"], &[("g", "id"), ("m", "1")])?;
            let g = base_map(&v[0])?;
            let m = v[1].clone();
            Ok(if family == "scale" { MapSpec::Scale { g, m } } else { MapSpec::OctDouble { g, m } })
        }
        "inner" => {
            let v = bind(args, &["a", "z", "conjugate"], &[("z", "1"), ("conjugate", "false")])?;
            Ok(MapSpec::Inner { a: v[0].clone(), z: v[1].clone(), conjugate: boolean(&v[2])? })
        }
        "nonassoc" => {
            let v = bind(args, &["z", "conjugate"], &[("conjugate", "false")])?;
            Ok(MapSpec::NonAssoc { z: v[0].clone(), conjugate: boolean(&v[1])? })
        }
        "explicit" => {
            let v = bind(args, &["matrix"], &[])?;
            Ok(MapSpec::Explicit(matrix(&v[0])?))
        }
        other => Err(malformed(format!("unknown family '{other}'; expected scale, inner, nonassoc, octdouble or explicit"))),
    }
}

/// The algebra `D` of a doubling `Cay(D, c)` or of its opposite.
pub fn doubling_base(alg: &Algebra) -> Option<Algebra> {
    match alg.provenance() {
        Some(Provenance::Doubling(spec)) => Some(spec.base.clone()),
        Some(Provenance::Opposite(o)) => doubling_base(o),
        _ => None,
    }
}

fn element(alg: &Algebra, text: &str) -> Result<AlgElement, MapSpecError> {
    alg.parse_element(text).map_err(|e| malformed(format!("'{text}': {e}")))
}

fn scalar(alg: &Algebra, text: &str) -> Result<FieldValue, MapSpecError> {
    alg.field().parse_value(text).map_err(|e| malformed(format!("'{text}': {e}")))
}

fn base_automorphism(base: &Algebra, g: &BaseMapSpec) -> Result<AlgebraMap, MapSpecError> {
    Ok(match g {
        BaseMapSpec::Identity => AlgebraMap::identity(base),
        BaseMapSpec::Inner(a) => inner_automorphism(base, &element(base, a)?)?,
    })
}

/// Builds the candidate map. With a `target`, the map's matrix is aimed at it and
/// the homomorphism check runs against the target's table.
pub fn build_map(spec: &MapSpec, source: &Algebra, target: Option<&Algebra>) -> Result<AlgebraMap, MapSpecError> {
    let base = || doubling_base(source).ok_or_else(|| malformed("source is not a doubling"));
    let map = match spec {
        MapSpec::Scale { g, m } => {
            let base = base()?;
            iso_scale(source, &base_automorphism(&base, g)?, &scalar(source, m)?)?
        }
        MapSpec::OctDouble { g, m } => {
            let base = base()?;
            iso_octonion_double(source, &base_automorphism(&base, g)?, &scalar(source, m)?)?
        }
        MapSpec::Inner { a, z, conjugate } => {
            let base = base()?;
            iso_inner(source, &element(&base, a)?, &element(&base, z)?, *conjugate)?
        }
        MapSpec::NonAssoc { z, conjugate } => {
            let base = base()?;
            iso_nonassoc_quat(source, &element(&base, z)?, *conjugate)?
        }
        MapSpec::Explicit(MatrixSpec::Identity) => match target {
            Some(t) => AlgebraMap::identity_shaped(source, t)?,
            None => AlgebraMap::identity(source),
        },
        MapSpec::Explicit(MatrixSpec::Rows(rows)) => {
            let t = target.ok_or_else(|| malformed("explicit(matrix) needs a target algebra"))?;
            let values = rows
                .iter()
                .map(|r| r.iter().map(|x| scalar(source, x)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            let m = Matrix::from_rows(source.field(), values)?;
            return Ok(AlgebraMap::new(source, t, m, MapParams::Explicit)?);
        }
    };
    match target {
        Some(t) if !map.target().same_instance(t) => Ok(map.retarget(t)?),
        _ => Ok(map),
    }
}
