use crate::error::{Error, Result};
use crate::perm::Perm;
use serde_json::Value;

/// Parses a group input file: {"degree": n, "generators": [...]} where each
/// generator is either a 0-based image array or a cycle notation string.
pub fn parse_group_json(text: &str) -> Result<(usize, Vec<Perm>)> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    let degree = obj
        .get("degree")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing or non-integer \"degree\"".into()))? as usize;
    if degree == 0 {
        return Err(Error::Parse("degree must be at least 1".into()));
    }
    let gens_val = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"generators\" array".into()))?;
    let mut gens = Vec::with_capacity(gens_val.len());
    for (i, g) in gens_val.iter().enumerate() {
        let perm = match g {
            Value::String(s) => Perm::parse_cycles(s, degree)?,
            Value::Array(images) => {
                let images: Vec<usize> = images
                    .iter()
                    .map(|x| {
                        x.as_u64().map(|n| n as usize).ok_or_else(|| {
                            Error::Parse(format!("generator {i}: non-integer image"))
                        })
                    })
                    .collect::<Result<_>>()?;
                if images.len() != degree {
                    return Err(Error::Parse(format!(
                        "generator {i}: {} images for degree {degree}",
                        images.len()
                    )));
                }
                Perm::from_images(images)?
            }
            _ => {
                return Err(Error::Parse(format!(
                    "generator {i}: expected an image array or a cycle string"
                )))
            }
        };
        gens.push(perm);
    }
    Ok((degree, gens))
}
