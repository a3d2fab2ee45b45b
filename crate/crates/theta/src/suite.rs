//! The property-check runner behind the `suite` subcommand: every module
//! invariant, executed over the built-in catalog, one outcome per property.


use crate::catalog;
use crate::cells::{self, Cell, Sign};
use crate::disc;
use crate::oracle::{enumerate_hom_matrix_search, AugmentationMode};
use crate::rep::{DimensionSequence, GradedOrderedSet};
use crate::simple::{enumerate_hom, image_is_separated, Convention, SimpleAdc};
use crate::wreath::{
    check_fully_faithful, enumerate_wreath_hom, iterated_wreath_objects, v_morphism, v_object,
    WreathObject,
};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(Convention, u32) -> Result<String, String>;

const CHECKS: &[(&str, Check)] = &[
    ("representation round-trips", representation_round_trips),
    ("boundary globularity", boundary_globularity),
    ("consecutive dimensions step by one", consecutive_dimensions),
    ("generated complexes are exact", generated_complexes_are_exact),
    ("catalog bases are unital", catalog_bases_are_unital),
    ("catalog bases are loop-free both ways", catalog_bases_are_loop_free),
    ("unital complexes have augmentation-1 points", unital_points_augment_to_one),
    ("zero-augmentation chain maps vanish", zero_augmentation_maps_vanish),
    ("hom enumeration matches matrix search", hom_matches_matrix_search),
    ("matrix search stable at bound 2", matrix_search_stable_at_two),
    ("morphism images are separated", morphism_images_are_separated),
    ("separated order characterizations agree", separated_order_agrees),
    ("bridging characterizations agree", bridging_agrees),
    ("hom-sets close under composition", hom_closed_under_composition),
    ("cell counts and cap stability", cell_counts),
    ("truncation laws", truncation_laws),
    ("cells are identities at their top level", cells_are_identities),
    ("composition laws", composition_laws),
    ("atom boundaries", atom_boundaries),
    ("cells push forward functorially", cells_push_forward),
    ("double transpose identity", double_transpose),
    ("duality preserves hom counts", duality_hom_counts),
    ("window coboundary matches the transpose", window_coboundary_matches),
    ("duals of morphisms validate", duals_validate),
    ("suspension preserves basis predicates", suspension_preserves_predicates),
    ("suspension dimension sequences interleave", suspension_interleaves),
    ("suspension is functorial", suspension_is_functorial),
    ("wreath full faithfulness", wreath_full_faithfulness),
    ("wreath boundary-case hom counts", wreath_boundary_counts),
    ("filtration levels match bounded sequences", filtration_levels),
];

/// Run every check under one convention; `cap` is the cell-coefficient cap
/// (stability is always verified against `cap + 1`).
pub fn run(convention: Convention, cap: u32) -> Vec<SuiteOutcome> {
    CHECKS
        .iter()
        .map(|&(name, check)| match check(convention, cap) {
            Ok(detail) => SuiteOutcome { name, passed: true, detail },
            Err(detail) => SuiteOutcome { name, passed: false, detail },
        })
        .collect()
}

fn catalog_pairs_within(
    convention: Convention,
    max_total: usize,
) -> Vec<(SimpleAdc, SimpleAdc)> {
    let objects = catalog::simple_objects(convention);
    let mut out = Vec::new();
    for (_, a) in &objects {
        for (_, b) in &objects {
            if a.adc().basis_len() + b.adc().basis_len() <= max_total {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn representation_round_trips(_: Convention, _: u32) -> Result<String, String> {
    let all = DimensionSequence::enumerate(13);
    // closed-form cross-check: balanced nonnegative walks are counted by
    // Catalan numbers
    fn catalan(k: u64) -> u64 {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num *= 2 * k - i;
            den *= i + 1;
        }
        num / den / (k + 1)
    }
    let expected: u64 = (0..=6).map(catalan).sum();
    if all.len() as u64 != expected {
        return Err(format!("expected {expected} sequences, enumerated {}", all.len()));
    }
    for s in &all {
        let u = s.to_updown();
        if &u.to_seq() != s {
            return Err(format!("sequence round trip fails for {s}"));
        }
        if u.to_tree().to_updown() != u {
            return Err(format!("tree round trip fails for {u}"));
        }
    }
    Ok(format!("{} sequences", all.len()))
}

fn boundary_globularity(_: Convention, _: u32) -> Result<String, String> {
    for (name, dims) in catalog::sequences() {
        let g = GradedOrderedSet::new(dims);
        for x in 0..g.len() {
            if g.dim(x) < 2 {
                continue;
            }
            let (lo, hi) = g.boundaries(x).map_err(|e| e.to_string())?;
            if g.boundaries(lo) != g.boundaries(hi) {
                return Err(format!("{name}: globularity fails at element {x}"));
            }
        }
    }
    Ok(String::new())
}

fn consecutive_dimensions(_: Convention, _: u32) -> Result<String, String> {
    for (name, dims) in catalog::sequences() {
        for w in dims.dims().windows(2) {
            if w[0].abs_diff(w[1]) != 1 {
                return Err(format!("{name}: dimensions jump"));
            }
        }
    }
    Ok(String::new())
}

fn generated_complexes_are_exact(convention: Convention, _: u32) -> Result<String, String> {
    for (name, k) in catalog::simple_objects(convention) {
        k.adc().check_structure().map_err(|e| format!("{name}: {e}"))?;
    }
    for (name, w) in catalog::wreath_objects(convention) {
        v_object(&w, convention)
            .check_structure()
            .map_err(|e| format!("suspension of {name}: {e}"))?;
    }
    Ok(String::new())
}

fn catalog_bases_are_unital(convention: Convention, _: u32) -> Result<String, String> {
    for (name, k) in catalog::simple_objects(convention) {
        if !k.adc().is_unital() {
            return Err(format!("{name} is not unital"));
        }
    }
    Ok(String::new())
}

fn catalog_bases_are_loop_free(convention: Convention, _: u32) -> Result<String, String> {
    for (name, k) in catalog::simple_objects(convention) {
        if !k.adc().is_strongly_loop_free() {
            return Err(format!("{name} is not strongly loop-free"));
        }
        if !k.adc().is_loop_free() {
            return Err(format!("{name} is strongly loop-free but not loop-free"));
        }
    }
    Ok(String::new())
}

fn unital_points_augment_to_one(convention: Convention, _: u32) -> Result<String, String> {
    let mut complexes: Vec<(String, Arc<crate::adc::AugmentedDirectedComplex>)> =
        catalog::simple_objects(convention)
            .into_iter()
            .map(|(n, k)| (n.to_string(), k.adc().clone()))
            .collect();
    for (name, w) in catalog::wreath_objects(convention) {
        complexes.push((format!("suspension of {name}"), v_object(&w, convention)));
    }
    for (name, k) in complexes {
        if k.basis_len() == 0 || !k.is_unital() {
            continue;
        }
        if k.elements_of_degree(0).is_empty() {
            return Err(format!("{name}: no degree-0 basis element"));
        }
        for &b in k.elements_of_degree(0) {
            if k.augmentation(b) != &crate::adc::coeff(1) {
                return Err(format!("{name}: element {b} has augmentation != 1"));
            }
        }
    }
    Ok(String::new())
}

fn zero_augmentation_maps_vanish(convention: Convention, _: u32) -> Result<String, String> {
    for (a, b) in catalog_pairs_within(convention, 10) {
        let maps = enumerate_hom_matrix_search(a.adc(), b.adc(), 1, AugmentationMode::Zero);
        if maps.len() != 1 || !maps[0].is_zero_map() {
            return Err(format!(
                "{} -> {}: {} nonzero chain maps with vanishing augmentation",
                a.dims(),
                b.dims(),
                maps.len().saturating_sub(1)
            ));
        }
    }
    Ok(String::new())
}

fn hom_matches_matrix_search(convention: Convention, _: u32) -> Result<String, String> {
    let mut total = 0;
    for (a, b) in catalog_pairs_within(convention, 10) {
        let combinatorial = enumerate_hom(&a, &b);
        let searched = enumerate_hom_matrix_search(a.adc(), b.adc(), 1, AugmentationMode::Preserve);
        if combinatorial != searched {
            return Err(format!("{} -> {}: enumerations disagree", a.dims(), b.dims()));
        }
        total += combinatorial.len();
    }
    Ok(format!("{total} morphisms cross-checked"))
}

fn matrix_search_stable_at_two(convention: Convention, _: u32) -> Result<String, String> {
    for (a, b) in catalog_pairs_within(convention, 8) {
        let one = enumerate_hom_matrix_search(a.adc(), b.adc(), 1, AugmentationMode::Preserve);
        let two = enumerate_hom_matrix_search(a.adc(), b.adc(), 2, AugmentationMode::Preserve);
        if one != two {
            return Err(format!("{} -> {}: bound 2 finds extra morphisms", a.dims(), b.dims()));
        }
    }
    Ok(String::new())
}

fn morphism_images_are_separated(convention: Convention, _: u32) -> Result<String, String> {
    let mut total = 0;
    for (a, b) in catalog_pairs_within(convention, 10) {
        for f in enumerate_hom(&a, &b) {
            total += 1;
            for e in 0..a.adc().basis_len() {
                if !image_is_separated(&b, &f, e) {
                    return Err(format!(
                        "{} -> {}: image of element {e} is not separated",
                        a.dims(),
                        b.dims()
                    ));
                }
            }
        }
    }
    Ok(format!("{total} morphisms checked"))
}

fn separated_sequences_of(k: &SimpleAdc, degree: usize) -> Vec<Vec<usize>> {
    let elements = k.adc().elements_of_degree(degree);
    let mut out = Vec::new();
    for mask in 0u32..(1 << elements.len()) {
        let seq: Vec<usize> = elements
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        if matches!(k.is_separated(&seq), Ok(true)) {
            out.push(seq);
        }
    }
    out
}

fn separated_order_agrees(convention: Convention, _: u32) -> Result<String, String> {
    let mut total = 0;
    for (name, k) in catalog::simple_objects(convention) {
        for degree in 0..=k.dims().max_dim() {
            let seqs = separated_sequences_of(&k, degree);
            for lo in &seqs {
                for hi in &seqs {
                    total += 1;
                    let combinatorial = k.separated_leq(lo, hi);
                    let chain = k.leq_by_boundary_search(lo, hi, 2);
                    if combinatorial != chain {
                        return Err(format!(
                            "{name}: order characterizations disagree on {lo:?} vs {hi:?}"
                        ));
                    }
                }
            }
        }
    }
    Ok(format!("{total} pairs compared"))
}

fn bridging_agrees(convention: Convention, _: u32) -> Result<String, String> {
    let mut total = 0;
    for (name, k) in catalog::simple_objects(convention) {
        for degree in 0..k.dims().max_dim() {
            let seqs = separated_sequences_of(&k, degree);
            let candidates: Vec<Vec<usize>> = {
                let elements = k.adc().elements_of_degree(degree + 1);
                let mut out = Vec::new();
                for mask in 0u32..(1 << elements.len()) {
                    out.push(
                        elements
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask & (1 << i) != 0)
                            .map(|(_, &e)| e)
                            .collect(),
                    );
                }
                out
            };
            for lo in &seqs {
                for hi in &seqs {
                    for b in &candidates {
                        total += 1;
                        let via_chain = k.bridges(b, lo, hi);
                        let via_interleaving = k.bridges_by_interleaving(b, lo, hi);
                        if via_chain != via_interleaving {
                            return Err(format!(
                                "{name}: bridge characterizations disagree on {b:?} between {lo:?} and {hi:?}"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{total} candidate bridges compared"))
}

fn hom_closed_under_composition(convention: Convention, _: u32) -> Result<String, String> {
    let objects: Vec<SimpleAdc> = catalog::simple_objects(convention)
        .into_iter()
        .map(|(_, k)| k)
        .filter(|k| k.adc().basis_len() <= 5)
        .collect();
    for a in &objects {
        for b in &objects {
            for c in &objects {
                let hom_ab = enumerate_hom(a, b);
                let hom_bc = enumerate_hom(b, c);
                let hom_ac = enumerate_hom(a, c);
                for f in &hom_ab {
                    for g in &hom_bc {
                        let gf = g.compose(f).map_err(|e| e.to_string())?;
                        if !hom_ac.contains(&gf) {
                            return Err(format!(
                                "{} -> {} -> {}: composite escapes the hom-set",
                                a.dims(),
                                b.dims(),
                                c.dims()
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(String::new())
}

fn catalog_cells(convention: Convention, cap: u32) -> Vec<(&'static str, SimpleAdc, Vec<Cell>)> {
    catalog::simple_objects(convention)
        .into_iter()
        .map(|(name, k)| {
            let cells = cells::enumerate(k.adc(), cap);
            (name, k, cells)
        })
        .collect()
}

fn cell_counts(convention: Convention, cap: u32) -> Result<String, String> {
    // hand-enumerated free-category cell counts for the small catalog objects
    let expected = [("point", 1usize), ("arrow", 3), ("arrow-pair", 6), ("globe2", 5)];
    let mut counts = Vec::new();
    for (name, k, cells_now) in catalog_cells(convention, cap) {
        if let Some(&(_, want)) = expected.iter().find(|(n, _)| *n == name) {
            if cells_now.len() != want {
                return Err(format!("{name}: {} cells, expected {want}", cells_now.len()));
            }
        }
        let more = cells::enumerate(k.adc(), cap + 1);
        if more.len() != cells_now.len() {
            return Err(format!(
                "{name}: cap {} gives {} cells but cap {} gives {}",
                cap,
                cells_now.len(),
                cap + 1,
                more.len()
            ));
        }
        counts.push(format!("{name}={}", cells_now.len()));
    }
    Ok(counts.join(" "))
}

fn truncation_laws(convention: Convention, cap: u32) -> Result<String, String> {
    for (name, k, cells) in catalog_cells(convention, cap) {
        let maxd = k.dims().max_dim();
        for x in &cells {
            for n in 0..=maxd {
                for m in 0..n {
                    for s1 in [Sign::Minus, Sign::Plus] {
                        for s2 in [Sign::Minus, Sign::Plus] {
                            if x.truncate(n, s1).truncate(m, s2) != x.truncate(m, s2) {
                                return Err(format!("{name}: truncation law fails"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(String::new())
}

fn cells_are_identities(convention: Convention, cap: u32) -> Result<String, String> {
    for (name, _, cells) in catalog_cells(convention, cap) {
        for x in &cells {
            let top = x.top_level();
            if x.truncate(top, Sign::Minus) != *x || x.truncate(top, Sign::Plus) != *x {
                return Err(format!("{name}: a cell is not an identity at its top level"));
            }
        }
    }
    Ok(String::new())
}

fn composition_laws(convention: Convention, cap: u32) -> Result<String, String> {
    let mut composites = 0usize;
    for (name, k, cells) in catalog_cells(convention, cap) {
        let maxd = k.dims().max_dim();
        // unit laws
        for x in &cells {
            for m in 0..=maxd {
                let right = cells::compose(m, x, &x.truncate(m, Sign::Plus)).map_err(|e| e.to_string())?;
                let left = cells::compose(m, &x.truncate(m, Sign::Minus), x).map_err(|e| e.to_string())?;
                if &right != x || &left != x {
                    return Err(format!("{name}: unit law fails"));
                }
            }
        }
        // composable pairs per level
        let mut pairs: Vec<Vec<(usize, usize)>> = Vec::new();
        for m in 0..=maxd {
            let mut level_pairs = Vec::new();
            for (i, x) in cells.iter().enumerate() {
                for (j, y) in cells.iter().enumerate() {
                    if x.truncate(m, Sign::Plus) == y.truncate(m, Sign::Minus) {
                        level_pairs.push((i, j));
                    }
                }
            }
            pairs.push(level_pairs);
        }
        // associativity
        for m in 0..=maxd {
            for &(i, j) in &pairs[m] {
                for &(j2, l) in &pairs[m] {
                    if j2 != j {
                        continue;
                    }
                    let xy = cells::compose(m, &cells[i], &cells[j]).map_err(|e| e.to_string())?;
                    let yz = cells::compose(m, &cells[j], &cells[l]).map_err(|e| e.to_string())?;
                    let left = cells::compose(m, &xy, &cells[l]).map_err(|e| e.to_string())?;
                    let right = cells::compose(m, &cells[i], &yz).map_err(|e| e.to_string())?;
                    if left != right {
                        return Err(format!("{name}: associativity fails at level {m}"));
                    }
                    composites += 1;
                }
            }
        }
        // interchange
        for m in 0..=maxd {
            for n in m + 1..=maxd {
                for &(xi, yi) in &pairs[m] {
                    for &(ui, vi) in &pairs[m] {
                        let (x, y) = (&cells[xi], &cells[yi]);
                        let (u, v) = (&cells[ui], &cells[vi]);
                        let xu = match cells::compose(n, x, u) {
                            Ok(c) => c,
                            Err(_) => continue,
                        };
                        let yv = match cells::compose(n, y, v) {
                            Ok(c) => c,
                            Err(_) => continue,
                        };
                        let xy = cells::compose(m, x, y).map_err(|e| e.to_string())?;
                        let uv = cells::compose(m, u, v).map_err(|e| e.to_string())?;
                        let left = cells::compose(n, &xy, &uv).map_err(|e| e.to_string())?;
                        let right = cells::compose(m, &xu, &yv).map_err(|e| e.to_string())?;
                        if left != right {
                            return Err(format!("{name}: interchange fails at levels {m},{n}"));
                        }
                        composites += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{composites} composite identities"))
}

fn atom_boundaries(convention: Convention, _: u32) -> Result<String, String> {
    for (name, k) in catalog::simple_objects(convention) {
        for e in 0..k.adc().basis_len() {
            if k.degree(e) == 0 {
                continue;
            }
            if !cells::atom_respects_boundaries(&k, e) {
                return Err(format!("{name}: atom boundary identities fail at element {e}"));
            }
        }
    }
    Ok(String::new())
}

fn cells_push_forward(convention: Convention, cap: u32) -> Result<String, String> {
    let objects: Vec<SimpleAdc> = catalog::simple_objects(convention)
        .into_iter()
        .map(|(_, k)| k)
        .filter(|k| k.adc().basis_len() <= 5)
        .collect();
    for a in &objects {
        for b in &objects {
            let cells_a = cells::enumerate(a.adc(), cap);
            for f in enumerate_hom(a, b) {
                for x in &cells_a {
                    let fx = cells::push_forward(&f, x);
                    // truncations commute with the push-forward
                    for n in 0..=a.dims().max_dim() {
                        for s in [Sign::Minus, Sign::Plus] {
                            if cells::push_forward(&f, &x.truncate(n, s)) != fx.truncate(n, s) {
                                return Err(format!(
                                    "{} -> {}: push-forward does not commute with truncation",
                                    a.dims(),
                                    b.dims()
                                ));
                            }
                        }
                    }
                    // and with composition
                    for y in &cells_a {
                        for m in 0..=a.dims().max_dim() {
                            if let Ok(xy) = cells::compose(m, x, y) {
                                let lhs = cells::push_forward(&f, &xy);
                                let rhs = cells::compose(
                                    m,
                                    &fx,
                                    &cells::push_forward(&f, y),
                                )
                                .map_err(|e| e.to_string())?;
                                if lhs != rhs {
                                    return Err(format!(
                                        "{} -> {}: push-forward does not commute with composition",
                                        a.dims(),
                                        b.dims()
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(String::new())
}

fn double_transpose(convention: Convention, _: u32) -> Result<String, String> {
    for (name, k) in catalog::simple_objects(convention) {
        let back = disc::undualize(&disc::dualize(k.adc())).map_err(|e| e.to_string())?;
        if &back != k.adc().as_ref() {
            return Err(format!("{name}: double transpose changes the complex"));
        }
    }
    Ok(String::new())
}

fn duality_hom_counts(convention: Convention, _: u32) -> Result<String, String> {
    for (a, b) in catalog_pairs_within(convention, 10) {
        let hom = enumerate_hom(&a, &b);
        let dual_b = Arc::new(disc::dualize(b.adc()));
        let dual_a = Arc::new(disc::dualize(a.adc()));
        let cochain = disc::enumerate_cochain_hom_matrix_search(&dual_b, &dual_a, 1);
        if hom.len() != cochain.len() {
            return Err(format!(
                "{} -> {}: {} morphisms but {} cochain morphisms",
                a.dims(),
                b.dims(),
                hom.len(),
                cochain.len()
            ));
        }
        let mut dual_keys: Vec<_> = hom.iter().map(|f| disc::dualize_morphism(f).sort_key()).collect();
        dual_keys.sort();
        let expected: Vec<_> = cochain.iter().map(|m| m.sort_key()).collect();
        if dual_keys != expected {
            return Err(format!("{} -> {}: dual contents differ", a.dims(), b.dims()));
        }
    }
    Ok(String::new())
}

fn window_coboundary_matches(convention: Convention, _: u32) -> Result<String, String> {
    for (name, k) in catalog::simple_objects(convention) {
        let transposed = disc::dualize(k.adc());
        let windowed = disc::window_coboundary(&k);
        for e in 0..k.adc().basis_len() {
            if transposed.coboundary(e) != &windowed[e] {
                return Err(format!("{name}: window formula disagrees at element {e}"));
            }
        }
    }
    Ok(String::new())
}

fn duals_validate(convention: Convention, _: u32) -> Result<String, String> {
    for (a, b) in catalog_pairs_within(convention, 10) {
        for f in enumerate_hom(&a, &b) {
            // the constructor inside revalidates the cochain conditions
            let _ = disc::dualize_morphism(&f);
        }
    }
    Ok(String::new())
}

fn suspension_preserves_predicates(convention: Convention, _: u32) -> Result<String, String> {
    for (name, w) in catalog::wreath_objects(convention) {
        let v = v_object(&w, convention);
        if !v.is_unital() {
            return Err(format!("suspension of {name} is not unital"));
        }
        if !v.is_loop_free() {
            return Err(format!("suspension of {name} is not loop-free"));
        }
        if !v.is_strongly_loop_free() {
            return Err(format!("suspension of {name} is not strongly loop-free"));
        }
    }
    Ok(String::new())
}

fn suspension_interleaves(convention: Convention, _: u32) -> Result<String, String> {
    for (name, w) in catalog::wreath_objects(convention) {
        let v = v_object(&w, convention);
        let mut expected = vec![0i64];
        for component in w.components() {
            for &d in component.degrees() {
                expected.push(d as i64 + 1);
            }
            expected.push(0);
        }
        let got: Vec<i64> = v.degrees().iter().map(|&d| d as i64).collect();
        if got != expected {
            return Err(format!("suspension of {name}: dimensions are {got:?}"));
        }
    }
    Ok(String::new())
}

fn simple_components(w: &WreathObject, convention: Convention) -> Vec<SimpleAdc> {
    w.components()
        .iter()
        .map(|c| SimpleAdc::try_from_adc_with(c, convention).expect("catalog components are simple"))
        .collect()
}

fn suspension_is_functorial(convention: Convention, _: u32) -> Result<String, String> {
    let objects: Vec<WreathObject> = catalog::wreath_objects(convention)
        .into_iter()
        .map(|(_, w)| w)
        .filter(|w| v_object(w, convention).basis_len() <= 7)
        .collect();
    let mut pairs_checked = 0usize;
    for a in &objects {
        for b in &objects {
            for c in &objects {
                let sa = simple_components(a, convention);
                let sb = simple_components(b, convention);
                let sc = simple_components(c, convention);
                let hom_ab = enumerate_wreath_hom(a, b, |i, j| enumerate_hom(&sa[i], &sb[j]));
                let hom_bc = enumerate_wreath_hom(b, c, |i, j| enumerate_hom(&sb[i], &sc[j]));
                for f in &hom_ab {
                    for g in &hom_bc {
                        let composite = g.compose(f).map_err(|e| e.to_string())?;
                        let lhs = v_morphism(&composite, convention);
                        let rhs = v_morphism(g, convention)
                            .compose(&v_morphism(f, convention))
                            .map_err(|e| e.to_string())?;
                        if lhs != rhs {
                            return Err("suspension breaks a composite".to_string());
                        }
                        pairs_checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs_checked} composable pairs"))
}

fn wreath_full_faithfulness(convention: Convention, _: u32) -> Result<String, String> {
    let population = catalog::wreath_population(convention, 10);
    let mut pairs = 0usize;
    for (name_a, a) in &population {
        for (name_b, b) in &population {
            let report = check_fully_faithful(a, b, convention).map_err(|e| e.to_string())?;
            if !report.bijective {
                return Err(format!(
                    "{name_a} -> {name_b}: {} wreath morphisms vs {} suspension morphisms",
                    report.wreath_hom, report.suspension_hom
                ));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs bijective"))
}

fn wreath_boundary_counts(convention: Convention, _: u32) -> Result<String, String> {
    let point = SimpleAdc::from_dims(&DimensionSequence::new(vec![0]).unwrap(), convention);
    let one = WreathObject::from_simple(&[point.clone()]);
    let report = check_fully_faithful(&one, &one, convention).map_err(|e| e.to_string())?;
    if report.wreath_hom != 3 || report.suspension_hom != 3 {
        return Err(format!("endomorphisms of the one-point object: {report:?}"));
    }
    let empty = WreathObject::new(Vec::new());
    for n in 0..=3 {
        let target = WreathObject::from_simple(&vec![point.clone(); n]);
        let report = check_fully_faithful(&empty, &target, convention).map_err(|e| e.to_string())?;
        if report.wreath_hom != n + 1 || report.suspension_hom != n + 1 {
            return Err(format!("empty object into {n} points: {report:?}"));
        }
    }
    Ok(String::new())
}

fn filtration_levels(convention: Convention, _: u32) -> Result<String, String> {
    let cap = 9;
    let mut previous: Vec<DimensionSequence> = Vec::new();
    for level in 0..=3usize {
        let generated: Vec<DimensionSequence> = iterated_wreath_objects(level, cap, convention)
            .into_iter()
            .map(|s| s.dims().clone())
            .collect();
        let mut expected = DimensionSequence::enumerate_bounded(cap, level);
        expected.sort_by_key(|s| (s.len(), s.clone()));
        if generated != expected {
            return Err(format!(
                "level {level}: generated {} objects, expected {}",
                generated.len(),
                expected.len()
            ));
        }
        if !previous.iter().all(|s| generated.contains(s)) {
            return Err(format!("level {level} does not contain level {}", level - 1));
        }
        previous = generated;
    }
    // the union over levels covers the catalog
    let level4 = iterated_wreath_objects(4, 17, convention);
    for (name, dims) in catalog::sequences() {
        if !level4.iter().any(|s| s.dims() == &dims) {
            return Err(format!("{name} is not reached by iterated suspensions"));
        }
    }
    Ok(String::new())
}
