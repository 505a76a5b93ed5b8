use super::{RigCategory, RigTable};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// JSON presentation `{"kind": .., "params": {..}, "bound": N}`.
///
/// Discrete params: `{"rig": "naturals"}`, `{"rig": "zmod", "k": 6}` or
/// `{"rig": "table", "add": [[..]], "mul": [[..]], "zero": 0, "one": 1}`.
/// Free-module params: `{"modulus": k}`. Finite sets take no params.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Presentation {
    pub kind: String,
    #[serde(default)]
    pub params: Value,
    #[serde(default)]
    pub bound: Option<u64>,
}

fn param_u64(params: &Value, key: &str) -> Result<u64> {
    params
        .get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Presentation(format!("missing integer parameter `{key}`")))
}

impl Presentation {
    pub fn parse(text: &str) -> Result<Presentation> {
        serde_json::from_str(text).map_err(|e| Error::Presentation(e.to_string()))
    }

    pub fn build(&self) -> Result<RigCategory> {
        let bound = self.bound;
        let need_bound = || bound.ok_or_else(|| Error::Presentation("missing `bound`".into()));
        match self.kind.as_str() {
            "discrete" => match self.params.get("rig").and_then(Value::as_str) {
                Some("naturals") => Ok(RigCategory::discrete_naturals(need_bound()?)),
                Some("zmod") => RigCategory::discrete_zmod(param_u64(&self.params, "k")?),
                Some("table") => {
                    let table: RigTable = serde_json::from_value(self.params.clone())
                        .or_else(|_| {
                            let mut v = self.params.clone();
                            let size = v.get("add").and_then(Value::as_array).map_or(0, Vec::len);
                            v["size"] = Value::from(size);
                            serde_json::from_value(v)
                        })
                        .map_err(|e| Error::Presentation(e.to_string()))?;
                    RigCategory::discrete_table(table)
                }
                other => Err(Error::Presentation(format!("unknown discrete rig {other:?}"))),
            },
            "finite-sets" => RigCategory::finite_sets(need_bound()?),
            "free-modules" => RigCategory::free_modules(param_u64(&self.params, "modulus")?, need_bound()?),
            other => Err(Error::Presentation(format!("unknown kind `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_kinds() {
        let cases = [
            r#"{"kind":"discrete","params":{"rig":"naturals"},"bound":20}"#,
            r#"{"kind":"discrete","params":{"rig":"zmod","k":6}}"#,
            r#"{"kind":"discrete","params":{"rig":"table","add":[[0,1],[1,0]],"mul":[[0,0],[0,1]],"zero":0,"one":1}}"#,
            r#"{"kind":"finite-sets","bound":4}"#,
            r#"{"kind":"free-modules","params":{"modulus":2},"bound":3}"#,
        ];
        for c in cases {
            Presentation::parse(c).unwrap().build().unwrap();
        }
    }

    #[test]
    fn rejects_bad_table() {
        let p = Presentation::parse(
            r#"{"kind":"discrete","params":{"rig":"table","add":[[0,1],[1,0]],"mul":[[0,1],[0,1]],"zero":0,"one":1}}"#,
        )
        .unwrap();
        assert!(matches!(p.build(), Err(Error::RigAxiom { .. })));
        assert!(Presentation::parse(r#"{"kind":"nope"}"#).unwrap().build().is_err());
    }
}
