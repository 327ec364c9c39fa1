/// Search and enumeration limits. Closure and subgroup enumeration abort
/// (with OrderBoundExceeded / SearchBoundExceeded) rather than run away.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    /// Largest group order `generate` will close to.
    pub max_group_order: usize,
    /// Largest group order subgroup enumeration will accept.
    pub max_enumeration: usize,
    /// Largest |Q| accepted as the domain of a hom search.
    pub max_hom_domain: usize,
    /// Largest number of candidate states a subsystem census will visit.
    pub max_census_states: usize,
}

pub const DEFAULT_MAX_GROUP_ORDER: usize = 10_000;
pub const DEFAULT_MAX_ENUMERATION: usize = 2_000;
pub const DEFAULT_MAX_HOM_DOMAIN: usize = 64;
pub const DEFAULT_MAX_CENSUS_STATES: usize = 10_000;

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_group_order: DEFAULT_MAX_GROUP_ORDER,
            max_enumeration: DEFAULT_MAX_ENUMERATION,
            max_hom_domain: DEFAULT_MAX_HOM_DOMAIN,
            max_census_states: DEFAULT_MAX_CENSUS_STATES,
        }
    }
}

impl Bounds {
    /// Default bounds, overridden by the FUSIONKIT_MAX_ORDER environment
    /// variable when it is set and parses. The variable raises (or lowers)
    /// both order bounds; the hom-domain cap is unaffected.
    pub fn from_env() -> Self {
        let mut b = Bounds::default();
        if let Ok(v) = std::env::var("FUSIONKIT_MAX_ORDER") {
            if let Ok(n) = v.trim().parse::<usize>() {
                b.max_group_order = n;
                b.max_enumeration = n;
            }
        }
        b
    }

    pub fn with_max_order(mut self, n: usize) -> Self {
        self.max_group_order = n;
        self.max_enumeration = n;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let b = Bounds::default();
        assert_eq!(b.max_group_order, 10_000);
        assert_eq!(b.max_enumeration, 2_000);
        assert_eq!(b.max_hom_domain, 64);
        assert_eq!(b.max_census_states, 10_000);
    }

    #[test]
    fn with_max_order_sets_both_order_bounds() {
        let b = Bounds::default().with_max_order(50_000);
        assert_eq!(b.max_group_order, 50_000);
        assert_eq!(b.max_enumeration, 50_000);
        assert_eq!(b.max_hom_domain, 64);
    }
}
