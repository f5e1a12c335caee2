//! Versioned on-disk documents: codebooks and designs as JSON with a
//! schema field, plus helpers to rebuild implicit codebooks from their
//! construction parameters.

use serde::{Deserialize, Serialize};

use crate::codebook::{Codebook, Metric};
use crate::constructions::GroupingParams;
use crate::designs::ResolvableDesign;
use crate::error::{Error, Result};
use crate::perm::OrderedSetPartition;

pub const CODEBOOK_SCHEMA: &str = "mpcodes.codebook/1";
pub const DESIGN_SCHEMA: &str = "mpcodes.design/1";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub name: String,
    #[serde(default)]
    pub params: serde_json::Value,
}

impl ConstructionSpec {
    pub fn new(name: &str, params: serde_json::Value) -> Self {
        ConstructionSpec {
            name: name.to_string(),
            params,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodebookFile {
    pub schema: String,
    pub n: u32,
    pub r: u32,
    pub claimed_distance: u32,
    pub metric: String,
    pub construction: ConstructionSpec,
    /// Partition text forms; absent for implicit codebooks, which
    /// serialize their construction parameters only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DesignFile {
    pub schema: String,
    pub n: u32,
    pub r: u32,
    pub classes: Vec<Vec<Vec<u32>>>,
}

pub fn design_to_json(design: &ResolvableDesign) -> String {
    let file = DesignFile {
        schema: DESIGN_SCHEMA.to_string(),
        n: design.n,
        r: design.r,
        classes: design.classes().to_vec(),
    };
    serde_json::to_string_pretty(&file).expect("design serializes")
}

pub fn design_from_json(text: &str) -> Result<ResolvableDesign> {
    let file: DesignFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if file.schema != DESIGN_SCHEMA {
        return Err(Error::Format(format!("unknown schema {:?}", file.schema)));
    }
    ResolvableDesign::new(file.n, file.r, file.classes)
}

pub fn codebook_to_json(code: &Codebook, construction: &ConstructionSpec) -> String {
    let mut construction = construction.clone();
    let words = match code.words() {
        Some(words) => Some(words.iter().map(|w| w.to_string()).collect()),
        None => {
            // implicit codebooks carry the backing design inline
            let design = code.design().expect("implicit stores are design-backed");
            if let serde_json::Value::Object(map) = &mut construction.params {
                map.insert(
                    "design".to_string(),
                    serde_json::from_str(&design_to_json(design)).expect("valid json"),
                );
            } else {
                construction.params = serde_json::json!({
                    "design": serde_json::from_str::<serde_json::Value>(
                        &design_to_json(design)
                    )
                    .expect("valid json"),
                });
            }
            None
        }
    };
    let file = CodebookFile {
        schema: CODEBOOK_SCHEMA.to_string(),
        n: code.n,
        r: code.r,
        claimed_distance: code.claimed_distance,
        metric: code.metric.to_string(),
        construction,
        words,
    };
    serde_json::to_string_pretty(&file).expect("codebook serializes")
}

pub fn codebook_from_json(text: &str) -> Result<(Codebook, ConstructionSpec)> {
    let file: CodebookFile =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if file.schema != CODEBOOK_SCHEMA {
        return Err(Error::Format(format!("unknown schema {:?}", file.schema)));
    }
    let metric: Metric = file.metric.parse()?;
    let code = match &file.words {
        Some(words) => {
            let words = words
                .iter()
                .map(|w| w.parse::<OrderedSetPartition>())
                .collect::<Result<Vec<_>>>()?;
            Codebook::new_explicit(file.n, file.r, file.claimed_distance, metric, words)?
        }
        None => {
            let design_value = file
                .construction
                .params
                .get("design")
                .ok_or_else(|| Error::Format("implicit codebook without design".into()))?;
            let design =
                design_from_json(&serde_json::to_string(design_value).expect("valid json"))?;
            Codebook::new_from_design(design, file.claimed_distance, metric)?
        }
    };
    Ok((code, file.construction))
}

/// Recover grouping parameters from a codebook's construction record.
pub fn grouping_params_from(construction: &ConstructionSpec) -> Result<GroupingParams> {
    if construction.name != "grouping" {
        return Err(Error::Format(format!(
            "construction {:?} carries no grouping parameters",
            construction.name
        )));
    }
    #[derive(Deserialize)]
    struct Params {
        n: u32,
        r: u32,
        t: u32,
        groups: Vec<Vec<u32>>,
    }
    let params: Params = serde_json::from_value(construction.params.clone())
        .map_err(|e| Error::Format(e.to_string()))?;
    GroupingParams::new(params.n, params.r, params.t, params.groups)
}

/// The construction record written alongside a grouping code.
pub fn grouping_construction(params: &GroupingParams) -> ConstructionSpec {
    ConstructionSpec::new(
        "grouping",
        serde_json::json!({
            "n": params.n,
            "r": params.r,
            "t": params.t,
            "groups": params.groups(),
        }),
    )
}
