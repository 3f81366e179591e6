//! The JSON workspace document: a bound quiver over `F_p` with named
//! modules, morphisms, subcategories and Serre supports.
//!
//! Matrices are lists of rows; entry `[r][c]` multiplies source coordinate
//! `c`. Entries may be any integers and are reduced mod `p`. A missing
//! vertex in `dims` means dimension 0, a missing arrow or vertex in `maps`
//! means the zero matrix.

use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use stabcat_core::catalog::Scenario;
use stabcat_core::quiver::DEFAULT_LENGTH_CAP;
use stabcat_core::stable::{SerreClass, StableContext};
use stabcat_core::{Field, Matrix, Morphism, PathAlgebra, Quiver, Representation};

use crate::error::{CliError, Result};

pub type Rows = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub field: FieldDoc,
    pub quiver: QuiverDoc,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
    #[serde(default)]
    pub modules: IndexMap<String, ModuleDoc>,
    #[serde(default)]
    pub morphisms: IndexMap<String, MorphismDoc>,
    #[serde(default)]
    pub subcategories: IndexMap<String, Vec<String>>,
    #[serde(default)]
    pub serre: IndexMap<String, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDoc {
    pub p: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDoc {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    #[serde(default)]
    pub dims: IndexMap<String, usize>,
    #[serde(default)]
    pub maps: IndexMap<String, Rows>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub from: String,
    pub to: String,
    #[serde(default)]
    pub maps: IndexMap<String, Rows>,
}

/// A validated workspace. Entities keep their declaration order.
#[derive(Clone, Debug, PartialEq)]
pub struct Workspace {
    pub algebra: Arc<PathAlgebra>,
    pub modules: Vec<(String, Representation)>,
    pub morphisms: Vec<(String, Morphism)>,
    pub subcategories: Vec<(String, Vec<String>)>,
    /// Supports as vertex indices.
    pub serre: Vec<(String, Vec<usize>)>,
}

/// How a workspace is loaded.
#[derive(Clone, Copy, Debug)]
pub struct LoadOptions {
    /// Replaces the document's prime when set.
    pub field: Option<u32>,
    pub length_cap: usize,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions { field: None, length_cap: DEFAULT_LENGTH_CAP }
    }
}

fn rows_to_matrix(k: Field, rows: usize, cols: usize, doc: Option<&Rows>, entity: &str, at: &str) -> Result<Matrix> {
    let Some(doc) = doc else {
        return Ok(Matrix::zeros(k, rows, cols));
    };
    if doc.len() != rows || doc.iter().any(|r| r.len() != cols) {
        let found_cols = doc.first().map_or(0, Vec::len);
        return Err(CliError::validation(
            entity,
            format!("{at} needs a {rows}x{cols} matrix, found {}x{found_cols}", doc.len()),
        ));
    }
    Ok(Matrix::from_fn(k, rows, cols, |r, c| k.reduce(doc[r][c])))
}

fn matrix_to_rows(m: &Matrix) -> Rows {
    (0..m.rows()).map(|r| m.row(r).iter().map(|&e| i64::from(e)).collect()).collect()
}

/// The document form of a module, listing every vertex and arrow.
pub fn module_doc(m: &Representation) -> ModuleDoc {
    let q = m.algebra().quiver();
    ModuleDoc {
        dims: q.vertices().iter().cloned().zip(m.dims().iter().copied()).collect(),
        maps: q.arrows().iter().zip(m.maps()).map(|(a, mat)| (a.name.clone(), matrix_to_rows(mat))).collect(),
    }
}

/// Per-vertex matrices of a morphism, keyed by vertex label.
pub fn maps_doc(f: &Morphism) -> IndexMap<String, Rows> {
    let q = f.algebra().quiver();
    q.vertices().iter().cloned().zip(f.maps().iter().map(matrix_to_rows)).collect()
}

/// Builds and validates a module; errors name `entity`.
pub fn module_from_doc(alg: &Arc<PathAlgebra>, doc: &ModuleDoc, entity: &str) -> Result<Representation> {
    let q = alg.quiver();
    for v in doc.dims.keys() {
        if q.vertex_index(v).is_none() {
            return Err(CliError::unknown("vertex", v, entity));
        }
    }
    for a in doc.maps.keys() {
        if q.arrow_index(a).is_none() {
            return Err(CliError::unknown("arrow", a, entity));
        }
    }
    let dims: Vec<usize> = q.vertices().iter().map(|v| doc.dims.get(v).copied().unwrap_or(0)).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|a| rows_to_matrix(alg.field(), dims[a.target], dims[a.source], doc.maps.get(&a.name), entity, &format!("arrow {}", a.name)))
        .collect::<Result<Vec<_>>>()?;
    Representation::new(alg.clone(), dims, maps).map_err(|e| CliError::validation(entity, e))
}

/// Builds and validates a morphism between known modules.
pub fn morphism_from_maps(
    source: &Representation,
    target: &Representation,
    maps: &IndexMap<String, Rows>,
    entity: &str,
) -> Result<Morphism> {
    let q = source.algebra().quiver();
    for v in maps.keys() {
        if q.vertex_index(v).is_none() {
            return Err(CliError::unknown("vertex", v, entity));
        }
    }
    let mats = q
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| rows_to_matrix(source.field(), target.dim_at(i), source.dim_at(i), maps.get(v), entity, &format!("vertex {v}")))
        .collect::<Result<Vec<_>>>()?;
    Morphism::new(source.clone(), target.clone(), mats).map_err(|e| CliError::validation(entity, e))
}

impl Workspace {
    pub fn parse(text: &str, options: &LoadOptions) -> Result<Workspace> {
        let doc: Document = serde_json::from_str(text)?;
        Workspace::from_document(&doc, options)
    }

    pub fn from_document(doc: &Document, options: &LoadOptions) -> Result<Workspace> {
        let p = options.field.unwrap_or(doc.field.p);
        let field = Field::new(p).map_err(|e| CliError::validation("field", e))?;
        let arrows = doc.quiver.arrows.iter().map(|a| (a.name.clone(), a.from.clone(), a.to.clone()));
        let quiver = Quiver::new(doc.quiver.vertices.iter().cloned(), arrows).map_err(|e| CliError::validation("quiver", e))?;
        let algebra = PathAlgebra::with_length_cap(quiver, &doc.relations, field, options.length_cap)
            .map_err(|e| CliError::validation("relations", e))?;
        let algebra = Arc::new(algebra);

        let mut modules: Vec<(String, Representation)> = Vec::with_capacity(doc.modules.len());
        for (name, m) in &doc.modules {
            modules.push((name.clone(), module_from_doc(&algebra, m, &format!("module {name}"))?));
        }
        let find = |name: &str, context: &str| -> Result<Representation> {
            modules
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, m)| m.clone())
                .ok_or_else(|| CliError::unknown("module", name, context))
        };

        let mut morphisms = Vec::with_capacity(doc.morphisms.len());
        for (name, f) in &doc.morphisms {
            let entity = format!("morphism {name}");
            let (x, y) = (find(&f.from, &entity)?, find(&f.to, &entity)?);
            morphisms.push((name.clone(), morphism_from_maps(&x, &y, &f.maps, &entity)?));
        }

        let mut subcategories = Vec::with_capacity(doc.subcategories.len());
        for (name, gens) in &doc.subcategories {
            let entity = format!("subcategory {name}");
            let ms = gens.iter().map(|g| find(g, &entity)).collect::<Result<Vec<_>>>()?;
            StableContext::new(&algebra, ms).map_err(|e| CliError::validation(&entity, e))?;
            subcategories.push((name.clone(), gens.clone()));
        }

        let mut serre = Vec::with_capacity(doc.serre.len());
        for (name, support) in &doc.serre {
            let entity = format!("Serre class {name}");
            let vs = support
                .iter()
                .map(|v| algebra.quiver().vertex_index(v).ok_or_else(|| CliError::unknown("vertex", v, &entity)))
                .collect::<Result<Vec<_>>>()?;
            serre.push((name.clone(), vs));
        }

        Ok(Workspace { algebra, modules, morphisms, subcategories, serre })
    }

    pub fn from_scenario(sc: &Scenario) -> Workspace {
        Workspace {
            algebra: sc.algebra.clone(),
            modules: sc.modules.clone(),
            morphisms: sc.morphisms.clone(),
            subcategories: sc.subcategories.clone(),
            serre: sc.serre.clone(),
        }
    }

    pub fn to_document(&self) -> Document {
        let q = self.algebra.quiver();
        let name_of = |m: &Representation| {
            self.modules.iter().find(|(_, x)| x == m).map(|(n, _)| n.clone()).unwrap_or_default()
        };
        Document {
            field: FieldDoc { p: self.algebra.field().prime() },
            quiver: QuiverDoc {
                vertices: q.vertices().to_vec(),
                arrows: q
                    .arrows()
                    .iter()
                    .map(|a| ArrowDoc {
                        name: a.name.clone(),
                        from: q.vertex_label(a.source).to_string(),
                        to: q.vertex_label(a.target).to_string(),
                    })
                    .collect(),
            },
            relations: self.algebra.relation_names(),
            modules: self.modules.iter().map(|(n, m)| (n.clone(), module_doc(m))).collect(),
            morphisms: self
                .morphisms
                .iter()
                .map(|(n, f)| {
                    (n.clone(), MorphismDoc { from: name_of(f.source()), to: name_of(f.target()), maps: maps_doc(f) })
                })
                .collect(),
            subcategories: self.subcategories.iter().cloned().collect(),
            serre: self
                .serre
                .iter()
                .map(|(n, vs)| (n.clone(), vs.iter().map(|&v| q.vertex_label(v).to_string()).collect()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("documents serialize")
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn module(&self, name: &str) -> Result<&Representation> {
        self.modules
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| CliError::unknown("module", name, "command"))
    }

    pub fn morphism(&self, name: &str) -> Result<&Morphism> {
        self.morphisms
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| CliError::unknown("morphism", name, "command"))
    }

    /// The named subcategory, or the only one when `name` is `None`.
    pub fn subcategory_name<'a>(&'a self, name: Option<&'a str>) -> Result<&'a str> {
        pick(name, self.subcategories.iter().map(|(n, _)| n.as_str()), "subcategory")
    }

    pub fn context(&self, name: Option<&str>) -> Result<StableContext> {
        let name = self.subcategory_name(name)?;
        let (_, gens) = self.subcategories.iter().find(|(n, _)| n == name).expect("name resolved");
        let ms = gens.iter().map(|g| self.module(g).cloned()).collect::<Result<Vec<_>>>()?;
        Ok(StableContext::new(&self.algebra, ms)?)
    }

    pub fn serre_name<'a>(&'a self, name: Option<&'a str>) -> Result<&'a str> {
        pick(name, self.serre.iter().map(|(n, _)| n.as_str()), "Serre class")
    }

    pub fn serre_class(&self, name: Option<&str>) -> Result<SerreClass> {
        let name = self.serre_name(name)?;
        let (_, support) = self.serre.iter().find(|(n, _)| n == name).expect("name resolved");
        Ok(SerreClass::new(&self.algebra, support)?)
    }

    /// `all` or a comma-separated list of module names.
    pub fn corpus(&self, spec: &str) -> Result<Vec<(String, Representation)>> {
        if spec == "all" {
            return Ok(self.modules.clone());
        }
        spec.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|n| Ok((n.to_string(), self.module(n)?.clone())))
            .collect()
    }
}

fn pick<'a>(name: Option<&'a str>, mut names: impl Iterator<Item = &'a str> + Clone, kind: &'static str) -> Result<&'a str> {
    match name {
        Some(n) => names.find(|m| *m == n).ok_or_else(|| CliError::unknown(kind, n, "command")),
        None => {
            let mut it = names.clone();
            match (it.next(), it.next()) {
                (Some(only), None) => Ok(only),
                (None, _) => Err(CliError::Usage(format!("the workspace declares no {kind}"))),
                _ => Err(CliError::Usage(format!("more than one {kind} is declared; name one"))),
            }
        }
    }
}
