//! Background files: a TOML description with every number written as an
//! exact scalar expression over the `[params]` table.

use std::collections::BTreeMap;
use std::path::Path;

use exactnum::Scalar;
use geometry::{ConstCurvBlock, ProductGeometry};
use liealg::{algebra_by_id, canonical_three_form, CwData};
use multilinear::KForm;
use serde::Deserialize;
use sugra::{BackgroundSpec, Dilaton, Geometry, Theory};

use crate::expr::{eval, Bindings};
use crate::CatalogError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BackgroundFile {
    id: String,
    theory: Theory,
    #[serde(default)]
    params: BTreeMap<String, String>,
    geometry: GeometryEntry,
    #[serde(default)]
    flux: Vec<FluxEntry>,
    dilaton: Option<DilatonEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum GeometryEntry {
    Flat {
        dim: usize,
    },
    CahenWallach {
        #[serde(default = "plus_one")]
        orientation: i32,
        matrix: Option<Vec<Vec<String>>>,
        diagonal: Option<Vec<String>>,
    },
    Product {
        #[serde(default = "plus_one")]
        orientation: i32,
        blocks: Vec<BlockEntry>,
    },
    Group {
        algebra: String,
        orientation: Option<i32>,
    },
}

fn plus_one() -> i32 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockEntry {
    #[serde(rename = "type")]
    kind: BlockKind,
    dim: usize,
    #[serde(default)]
    curvature: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum BlockKind {
    Ads,
    Sphere,
    Flat,
    FlatLorentzian,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FluxEntry {
    name: String,
    degree: usize,
    #[serde(default)]
    terms: Vec<TermEntry>,
    /// Adds this multiple of `⟨X, [Y, Z]⟩` on group geometries.
    canonical: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermEntry {
    indices: Vec<usize>,
    coefficient: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DilatonEntry {
    #[serde(default)]
    constant: Option<String>,
    #[serde(default)]
    gradient: Vec<TermEntry>,
}

pub fn load_background(path: &Path, overrides: &Bindings) -> Result<BackgroundSpec, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Malformed(format!("{}: {e}", path.display())))?;
    parse_background(&text, overrides)
}

/// Parses a background file; `overrides` replace the file's parameters.
pub fn parse_background(text: &str, overrides: &Bindings) -> Result<BackgroundSpec, CatalogError> {
    let file: BackgroundFile = toml::from_str(text).map_err(|e| CatalogError::Malformed(e.to_string()))?;
    let params = bind_params(&file.params, overrides)?;
    let ev = |s: &str| eval(s, &params);

    let geometry = match &file.geometry {
        GeometryEntry::Flat { dim } => Geometry::flat(*dim)?,
        GeometryEntry::CahenWallach { orientation, matrix, diagonal } => {
            let data = match (matrix, diagonal) {
                (Some(m), None) => CwData::new(m.iter().map(|r| r.iter().map(|x| ev(x)).collect()).collect::<Result<_, _>>()?)?,
                (None, Some(d)) => CwData::diagonal(&d.iter().map(|x| ev(x)).collect::<Result<Vec<_>, _>>()?),
                _ => return Err(CatalogError::Malformed("cahen-wallach geometry needs exactly one of `matrix` and `diagonal`".into())),
            };
            Geometry::cahen_wallach(&data, *orientation)?
        }
        GeometryEntry::Product { orientation, blocks } => {
            let blocks = blocks
                .iter()
                .map(|b| {
                    let curvature = b.curvature.as_deref().map(ev).transpose()?.unwrap_or_else(Scalar::zero);
                    let block = match b.kind {
                        BlockKind::Ads => ConstCurvBlock::anti_de_sitter(b.dim, curvature),
                        BlockKind::Sphere => ConstCurvBlock::sphere(b.dim, curvature),
                        BlockKind::Flat => ConstCurvBlock::flat(b.dim, false),
                        BlockKind::FlatLorentzian => ConstCurvBlock::flat(b.dim, true),
                    };
                    block.map_err(|e| CatalogError::Malformed(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Geometry::Product(ProductGeometry::from_blocks(blocks, *orientation).map_err(|e| CatalogError::Malformed(e.to_string()))?)
        }
        GeometryEntry::Group { algebra, orientation } => {
            let g = algebra_by_id(algebra)?;
            Geometry::Group(match orientation {
                Some(o) => g.with_orientation(*o)?,
                None => g,
            })
        }
    };
    let dim = geometry.dim();
    let index_check = |indices: &[usize]| -> Result<(), CatalogError> {
        match indices.iter().find(|&&i| i >= dim) {
            Some(i) => Err(CatalogError::Malformed(format!("index {i} out of range for dimension {dim}"))),
            None => Ok(()),
        }
    };

    let mut spec = BackgroundSpec::new(file.id.clone(), file.theory, geometry);
    for (k, v) in &params {
        spec = spec.with_param(k, v.clone());
    }
    for f in &file.flux {
        let mut form: KForm<Scalar> = KForm::zero(dim, f.degree);
        for t in &f.terms {
            if t.indices.len() != f.degree {
                return Err(CatalogError::Malformed(format!("{} term {:?} has the wrong degree", f.name, t.indices)));
            }
            index_check(&t.indices)?;
            form = form.add(&KForm::basis(dim, &t.indices).scale(&ev(&t.coefficient)?));
        }
        if let Some(c) = &f.canonical {
            let Geometry::Group(g) = &spec.geometry else {
                return Err(CatalogError::Malformed("`canonical` needs a group geometry".into()));
            };
            if f.degree != 3 {
                return Err(CatalogError::Malformed("`canonical` is a three-form".into()));
            }
            form = form.add(&canonical_three_form(g)?.scale(&ev(c)?));
        }
        spec = spec.with_constant_flux(&f.name, &form);
    }
    if let Some(d) = &file.dilaton {
        let mut gradient = vec![Scalar::zero(); dim];
        for t in &d.gradient {
            index_check(&t.indices)?;
            let [i] = t.indices[..] else {
                return Err(CatalogError::Malformed("dilaton gradient terms carry one index".into()));
            };
            gradient[i] = &gradient[i] + &ev(&t.coefficient)?;
        }
        let constant = d.constant.as_deref().map(ev).transpose()?.unwrap_or_else(Scalar::zero);
        spec = spec.with_dilaton(Dilaton { constant, gradient });
    }
    Ok(spec)
}

/// Parameters may refer to each other in any order, without cycles;
/// overridden ones keep the override and feed the others.
fn bind_params(raw: &BTreeMap<String, String>, overrides: &Bindings) -> Result<Bindings, CatalogError> {
    let mut params = overrides.clone();
    let mut pending: Vec<(&String, &String)> = raw.iter().filter(|(k, _)| !overrides.contains_key(*k)).collect();
    while !pending.is_empty() {
        let before = pending.len();
        let mut last_error = None;
        pending.retain(|(k, v)| match eval(v, &params) {
            Ok(value) => {
                params.insert((*k).clone(), value);
                false
            }
            Err(e) => {
                last_error = Some(e);
                true
            }
        });
        if pending.len() == before {
            return Err(last_error.expect("a pending parameter failed"));
        }
    }
    Ok(params)
}
