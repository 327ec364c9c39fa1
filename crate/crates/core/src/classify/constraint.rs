//! Constrainedness: whether the system has a normal centric subgroup. The
//! scan over the classification and the direct test on O_p must agree, since
//! any normal centric subgroup lies inside O_p and forces O_p itself to be
//! centric.

use serde::Serialize;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::fusion::status::classify_subgroups;
use crate::fusion::system::FusionSystem;
use crate::group::subgroup::Subgroup;

#[derive(Debug, Clone, Serialize)]
pub struct Constraint {
    pub constrained: bool,
    /// The largest normal centric subgroup, which is O_p when one exists.
    pub witness: Option<Subgroup>,
}

pub fn is_constrained(f: &FusionSystem, bounds: &Bounds) -> Result<Constraint> {
    let cls = classify_subgroups(f, bounds)?;
    let witness = cls
        .statuses
        .iter()
        .filter(|s| s.normal_in_f && s.centric)
        .max_by_key(|s| s.subgroup.order())
        .map(|s| s.subgroup.clone());

    let o_p = crate::fusion::status::o_p(f, bounds)?;
    let o_p_centric = cls
        .object_indices
        .iter()
        .position(|&qi| f.object(qi).members == o_p.members)
        .map(|k| cls.statuses[k].centric)
        .ok_or_else(|| Error::InternalInvariant("o_p is not a classified object".into()))?;

    if witness.is_some() != o_p_centric {
        return Err(Error::InternalInvariant(
            "normal-centric scan disagrees with the centricity of o_p".into(),
        ));
    }
    if let Some(w) = &witness {
        if w.members != o_p.members {
            return Err(Error::InternalInvariant(
                "largest normal centric subgroup is not o_p".into(),
            ));
        }
    }
    Ok(Constraint {
        constrained: witness.is_some(),
        witness,
    })
}
