//! The built-in object catalog used by the property suite and the tests:
//! a small family of dimension sequences covering dimensions 0 through 4,
//! plus the wreath objects assembled from them.

use crate::rep::DimensionSequence;
use crate::simple::{Convention, SimpleAdc};
use crate::wreath::WreathObject;

pub struct CatalogEntry {
    pub name: &'static str,
    pub dims: &'static [i64],
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "point", dims: &[0] },
    CatalogEntry { name: "arrow", dims: &[0, 1, 0] },
    CatalogEntry { name: "arrow-pair", dims: &[0, 1, 0, 1, 0] },
    CatalogEntry { name: "globe2", dims: &[0, 1, 2, 1, 0] },
    CatalogEntry { name: "globe2-pair", dims: &[0, 1, 2, 1, 2, 1, 0] },
    CatalogEntry { name: "globe3", dims: &[0, 1, 2, 3, 2, 1, 0] },
    CatalogEntry {
        name: "mixed4",
        dims: &[0, 1, 2, 1, 2, 3, 4, 3, 2, 3, 4, 3, 2, 1, 0, 1, 0],
    },
];

pub fn sequences() -> Vec<(&'static str, DimensionSequence)> {
    ENTRIES
        .iter()
        .map(|e| {
            (
                e.name,
                DimensionSequence::new(e.dims.to_vec()).expect("catalog entries are valid"),
            )
        })
        .collect()
}

pub fn simple_objects(convention: Convention) -> Vec<(&'static str, SimpleAdc)> {
    sequences()
        .into_iter()
        .map(|(name, dims)| (name, SimpleAdc::from_dims(&dims, convention)))
        .collect()
}

fn by_name(name: &str, convention: Convention) -> SimpleAdc {
    let entry = ENTRIES.iter().find(|e| e.name == name).expect("known name");
    SimpleAdc::from_dims(
        &DimensionSequence::new(entry.dims.to_vec()).unwrap(),
        convention,
    )
}

/// Small wreath objects over catalog components, used for the suspension
/// functor checks.
pub fn wreath_objects(convention: Convention) -> Vec<(String, WreathObject)> {
    let point = by_name("point", convention);
    let arrow = by_name("arrow", convention);
    let pair = by_name("arrow-pair", convention);
    let globe = by_name("globe2", convention);
    vec![
        ("()".to_string(), WreathObject::new(Vec::new())),
        ("(point)".to_string(), WreathObject::from_simple(&[point.clone()])),
        (
            "(point,point)".to_string(),
            WreathObject::from_simple(&[point.clone(), point.clone()]),
        ),
        ("(arrow)".to_string(), WreathObject::from_simple(&[arrow.clone()])),
        (
            "(point,arrow)".to_string(),
            WreathObject::from_simple(&[point.clone(), arrow.clone()]),
        ),
        (
            "(arrow,point)".to_string(),
            WreathObject::from_simple(&[arrow.clone(), point.clone()]),
        ),
        ("(arrow-pair)".to_string(), WreathObject::from_simple(&[pair])),
        ("(globe2)".to_string(), WreathObject::from_simple(&[globe])),
        (
            "(point,point,point)".to_string(),
            WreathObject::from_simple(&[point.clone(), point.clone(), point]),
        ),
    ]
}

/// All wreath objects with catalog components whose suspension has at most
/// `max_basis` basis elements; the population for the desk-scale
/// full-faithfulness checks.
pub fn wreath_population(convention: Convention, max_basis: usize) -> Vec<(String, WreathObject)> {
    let components: Vec<(&str, SimpleAdc)> = simple_objects(convention)
        .into_iter()
        .filter(|(_, s)| s.adc().basis_len() + 2 <= max_basis)
        .collect();
    let mut out = Vec::new();
    fn extend(
        components: &[(&str, SimpleAdc)],
        max_basis: usize,
        used: usize,
        current: &mut Vec<(String, SimpleAdc)>,
        out: &mut Vec<(String, WreathObject)>,
    ) {
        if used <= max_basis {
            let name = format!(
                "({})",
                current.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(",")
            );
            let object =
                WreathObject::from_simple(&current.iter().map(|(_, s)| s.clone()).collect::<Vec<_>>());
            out.push((name, object));
        }
        for (name, component) in components {
            let extra = component.adc().basis_len() + 1;
            if used + extra > max_basis {
                continue;
            }
            current.push((name.to_string(), component.clone()));
            extend(components, max_basis, used + extra, current, out);
            current.pop();
        }
    }
    let mut current = Vec::new();
    extend(&components, max_basis, 1, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_valid_and_low_dimensional() {
        for (name, dims) in sequences() {
            assert!(dims.max_dim() <= 4, "{name}");
        }
        assert_eq!(ENTRIES.len(), 7);
    }

    #[test]
    fn population_sizes() {
        // with a cap of 10 the population stays comfortably enumerable
        let population = wreath_population(Convention::Std, 10);
        assert!(population.len() >= 15 && population.len() <= 40, "{}", population.len());
        for (_, object) in &population {
            let v = crate::wreath::v_object(object, Convention::Std);
            assert!(v.basis_len() <= 10);
        }
    }
}
