use std::collections::BTreeMap;

use num_traits::Zero;

use super::potential::canonical_rotation;
use super::{Coeff, QuiverWithPotential};

/// Vertex and arrow correspondence witnessing `left ≅ right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QpIsomorphism {
    pub vertices: BTreeMap<String, String>,
    pub arrows: BTreeMap<String, String>,
}

/// Searches for a vertex bijection preserving arrow counts, then an arrow
/// bijection (within each bundle of parallel arrows) carrying one potential
/// onto the other. Exhaustive backtracking; intended for small quivers.
pub fn isomorphism(left: &QuiverWithPotential, right: &QuiverWithPotential) -> Option<QpIsomorphism> {
    let (ql, qr) = (left.quiver(), right.quiver());
    if ql.len() != qr.len() || ql.arrows().len() != qr.arrows().len() {
        return None;
    }
    if left.potential().len() != right.potential().len() {
        return None;
    }
    let al = ql.adjacency();
    let ar = qr.adjacency();
    let n = al.len();
    let degree = |q: &Vec<Vec<usize>>, v: usize| -> (usize, usize) {
        ((0..n).map(|w| q[w][v]).sum(), (0..n).map(|w| q[v][w]).sum())
    };

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = None;
    search(0, &al, &ar, &degree, &mut map, &mut used, &mut |map: &[usize]| {
        if let Some(arrows) = match_arrows(left, right, map) {
            found = Some(QpIsomorphism {
                vertices: (0..n)
                    .map(|i| (ql.vertices()[i].clone(), qr.vertices()[map[i]].clone()))
                    .collect(),
                arrows,
            });
            true
        } else {
            false
        }
    });
    found
}

type Degree<'a> = dyn Fn(&Vec<Vec<usize>>, usize) -> (usize, usize) + 'a;

fn search(
    i: usize,
    al: &Vec<Vec<usize>>,
    ar: &Vec<Vec<usize>>,
    degree: &Degree<'_>,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let n = al.len();
    if i == n {
        return accept(map);
    }
    for j in 0..n {
        if used[j] || degree(al, i) != degree(ar, j) {
            continue;
        }
        let consistent = (0..i).all(|k| al[i][k] == ar[j][map[k]] && al[k][i] == ar[map[k]][j]);
        if !consistent {
            continue;
        }
        map[i] = j;
        used[j] = true;
        if search(i + 1, al, ar, degree, map, used, accept) {
            return true;
        }
        used[j] = false;
        map[i] = usize::MAX;
    }
    false
}

fn match_arrows(
    left: &QuiverWithPotential,
    right: &QuiverWithPotential,
    vmap: &[usize],
) -> Option<BTreeMap<String, String>> {
    let (ql, qr) = (left.quiver(), right.quiver());
    // bundles of parallel arrows, keyed by (source index, target index) on the right
    let mut bundles: BTreeMap<(usize, usize), (Vec<String>, Vec<String>)> = BTreeMap::new();
    for a in ql.arrows() {
        let s = vmap[ql.vertex_index(&a.src)?];
        let t = vmap[ql.vertex_index(&a.tgt)?];
        bundles.entry((s, t)).or_default().0.push(a.id.clone());
    }
    for a in qr.arrows() {
        let s = qr.vertex_index(&a.src)?;
        let t = qr.vertex_index(&a.tgt)?;
        bundles.entry((s, t)).or_default().1.push(a.id.clone());
    }
    let bundles: Vec<(Vec<String>, Vec<String>)> = bundles.into_values().collect();
    if bundles.iter().any(|(l, r)| l.len() != r.len()) {
        return None;
    }

    let target: BTreeMap<Vec<String>, Coeff> = right
        .potential()
        .terms()
        .map(|(w, c)| (w.clone(), *c))
        .collect();
    let mut choice: Vec<Vec<usize>> = bundles.iter().map(|(l, _)| (0..l.len()).collect()).collect();
    loop {
        let mut amap = BTreeMap::new();
        for ((l, r), perm) in bundles.iter().zip(&choice) {
            for (k, id) in l.iter().enumerate() {
                amap.insert(id.clone(), r[perm[k]].clone());
            }
        }
        if potential_maps_onto(left, &amap, &target) {
            return Some(amap);
        }
        if !advance(&mut choice) {
            return None;
        }
    }
}

fn potential_maps_onto(
    left: &QuiverWithPotential,
    amap: &BTreeMap<String, String>,
    target: &BTreeMap<Vec<String>, Coeff>,
) -> bool {
    let mut image: BTreeMap<Vec<String>, Coeff> = BTreeMap::new();
    for (word, c) in left.potential().terms() {
        let mapped: Vec<String> = word.iter().map(|a| amap[a].clone()).collect();
        *image.entry(canonical_rotation(&mapped)).or_insert_with(Coeff::zero) += *c;
    }
    image.retain(|_, c| !c.is_zero());
    image == *target
}

/// Steps to the next tuple of permutations; false once all were visited.
fn advance(choice: &mut [Vec<usize>]) -> bool {
    for perm in choice.iter_mut() {
        if next_permutation(perm) {
            return true;
        }
        perm.sort_unstable();
    }
    false
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
