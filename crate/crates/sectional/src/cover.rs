//! Exact minimum set cover.

use fixedbitset::FixedBitSet;

/// The lexicographically least minimum cover of `0..universe` by `sets`,
/// as sorted indices, or `None` when the union falls short.
pub fn min_set_cover(universe: usize, sets: &[FixedBitSet]) -> Option<Vec<usize>> {
    let mut all = FixedBitSet::with_capacity(universe);
    all.insert_range(..);
    let mut union = FixedBitSet::with_capacity(universe);
    for s in sets {
        union.union_with(s);
    }
    if !all.is_subset(&union) {
        return None;
    }
    if universe == 0 {
        return Some(Vec::new());
    }
    let greedy = greedy_cover(&all, sets);
    let everything: Vec<usize> = (0..sets.len()).collect();
    let size = (1..greedy.len())
        .find(|&k| feasible(&all, sets, &everything, k))
        .unwrap_or(greedy.len());

    let mut chosen = Vec::with_capacity(size);
    let mut uncovered = all;
    let mut start = 0;
    while !uncovered.is_clear() {
        let slot = chosen.len();
        let pick = (start..sets.len())
            .find(|&i| {
                if sets[i].intersection_count(&uncovered) == 0 {
                    return false;
                }
                let mut rest = uncovered.clone();
                rest.difference_with(&sets[i]);
                let later: Vec<usize> = (i + 1..sets.len()).collect();
                feasible(&rest, sets, &later, size - slot - 1)
            })
            .expect("a cover of the optimal size exists");
        uncovered.difference_with(&sets[pick]);
        chosen.push(pick);
        start = pick + 1;
    }
    Some(chosen)
}

fn greedy_cover(all: &FixedBitSet, sets: &[FixedBitSet]) -> Vec<usize> {
    let mut uncovered = all.clone();
    let mut chosen = Vec::new();
    while !uncovered.is_clear() {
        let best = (0..sets.len())
            .max_by_key(|&i| (sets[i].intersection_count(&uncovered), std::cmp::Reverse(i)))
            .expect("union covers the universe");
        uncovered.difference_with(&sets[best]);
        chosen.push(best);
    }
    chosen
}

/// Whether `uncovered` can be covered by at most `budget` of the `allowed`
/// sets. Branches on the uncovered element with the fewest options.
fn feasible(uncovered: &FixedBitSet, sets: &[FixedBitSet], allowed: &[usize], budget: usize) -> bool {
    if uncovered.is_clear() {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let widest = allowed
        .iter()
        .map(|&i| sets[i].intersection_count(uncovered))
        .max()
        .unwrap_or(0);
    if widest == 0 || uncovered.count_ones(..) > budget * widest {
        return false;
    }
    let (_, options) = uncovered
        .ones()
        .map(|e| {
            let opts: Vec<usize> = allowed.iter().copied().filter(|&i| sets[i].contains(e)).collect();
            (opts.len(), opts)
        })
        .min_by_key(|(n, _)| *n)
        .expect("uncovered is nonempty");
    let mut options = options;
    options.sort_by_key(|&i| std::cmp::Reverse(sets[i].intersection_count(uncovered)));
    options.iter().any(|&i| {
        let mut rest = uncovered.clone();
        rest.difference_with(&sets[i]);
        feasible(&rest, sets, allowed, budget - 1)
    })
}

/// Keeps the sets not strictly contained in another, and the first of any
/// group of equal sets. Returns the surviving indices.
pub fn maximal_sets(sets: &[FixedBitSet]) -> Vec<usize> {
    (0..sets.len())
        .filter(|&i| !(0..sets.len()).any(|j| j != i && sets[i].is_subset(&sets[j]) && (sets[i] != sets[j] || j < i)))
        .collect()
}
