//! Greedy sunflower search over indexed set families.

use std::collections::BTreeMap;

/// Members are indices into the input family; every two members intersect
/// exactly in `core`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sunflower {
    pub core: Vec<usize>,
    pub members: Vec<usize>,
}

impl Sunflower {
    /// Checks the pairwise-intersection property against `family`.
    pub fn validates(&self, family: &[Vec<usize>]) -> bool {
        let sets: Vec<Vec<usize>> = self
            .members
            .iter()
            .map(|&i| {
                let mut s = family[i].clone();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        let mut distinct = self.members.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != self.members.len() {
            return false;
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                let inter: Vec<usize> = sets[i].iter().copied().filter(|x| sets[j].binary_search(x).is_ok()).collect();
                if inter != self.core {
                    return false;
                }
            }
        }
        true
    }
}

/// Looks for a sunflower with at least `k` members. Picks pairwise disjoint
/// sets greedily in index order; when fewer than `k` are found, recurses on
/// the sets containing the most frequent element (smallest element on ties).
/// Always succeeds on families of more than `λ!·(k−1)^λ` distinct nonempty
/// sets of size at most `λ`.
pub fn find_sunflower(family: &[Vec<usize>], k: usize) -> Option<Sunflower> {
    let sets: Vec<Vec<usize>> = family
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    let mut idx: Vec<usize> = (0..sets.len()).collect();
    let mut core: Vec<usize> = Vec::new();
    loop {
        if idx.len() < k {
            return None;
        }
        let mut taken = std::collections::BTreeSet::new();
        let mut members = Vec::new();
        for &i in &idx {
            let petal: Vec<usize> = sets[i].iter().copied().filter(|x| core.binary_search(x).is_err()).collect();
            if petal.iter().all(|x| !taken.contains(x)) {
                taken.extend(petal);
                members.push(i);
            }
        }
        if members.len() >= k {
            return Some(Sunflower { core, members });
        }
        let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
        for &i in &idx {
            for &x in &sets[i] {
                if core.binary_search(&x).is_err() {
                    *freq.entry(x).or_default() += 1;
                }
            }
        }
        let best = freq.iter().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))?;
        let x = *best.0;
        idx.retain(|&i| sets[i].binary_search(&x).is_ok());
        let pos = core.binary_search(&x).unwrap_err();
        core.insert(pos, x);
    }
}
