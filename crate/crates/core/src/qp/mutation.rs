use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::potential::canonical_rotation;
use super::quiver::fresh_id;
use super::{Arrow, Coeff, Potential, QpError, Quiver, QuiverWithPotential};

/// Reduction gives up after this many 2-cycle cancellations.
pub const MAX_REDUCTION_ROUNDS: usize = 100;

type RawPotential = BTreeMap<Vec<String>, Coeff>;

fn add_raw(w: &mut RawPotential, word: Vec<String>, c: Coeff) {
    if c.is_zero() {
        return;
    }
    let key = canonical_rotation(&word);
    let entry = w.entry(key.clone()).or_insert_with(Coeff::zero);
    *entry += c;
    if entry.is_zero() {
        w.remove(&key);
    }
}

fn reversed_id(id: &str) -> String {
    match id.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{id}*"),
    }
}

/// Mutation of a quiver with potential at `vertex`.
///
/// Composite arrows `[ab]` are added for every pair `a` into and `b` out of
/// the vertex, arrows at the vertex are reversed, the potential becomes
/// `W' + Σ [ab] b* a*`, and 2-cycles are then cancelled against their
/// quadratic terms.
pub fn mutate(qp: &QuiverWithPotential, vertex: &str) -> Result<QuiverWithPotential, QpError> {
    let q = qp.quiver();
    if !q.has_vertex(vertex) {
        return Err(QpError::UnknownVertex(vertex.to_string()));
    }

    let incoming: Vec<&Arrow> = q.arrows().iter().filter(|a| a.tgt == vertex).collect();
    let outgoing: Vec<&Arrow> = q.arrows().iter().filter(|a| a.src == vertex).collect();

    let mut taken: BTreeSet<String> = q.arrows().iter().map(|a| a.id.clone()).collect();
    let mut arrows: Vec<Arrow> = Vec::with_capacity(q.arrows().len());
    let mut reversed: BTreeMap<&str, String> = BTreeMap::new();
    for a in q.arrows() {
        if a.src == vertex || a.tgt == vertex {
            taken.remove(&a.id);
            let id = fresh_id(reversed_id(&a.id), &taken);
            taken.insert(id.clone());
            reversed.insert(&a.id, id.clone());
            arrows.push(Arrow::new(id, a.tgt.clone(), a.src.clone()));
        } else {
            arrows.push(a.clone());
        }
    }
    let mut composite: BTreeMap<(&str, &str), String> = BTreeMap::new();
    for a in &incoming {
        for b in &outgoing {
            let id = fresh_id(format!("[{}{}]", a.id, b.id), &taken);
            taken.insert(id.clone());
            composite.insert((&a.id, &b.id), id.clone());
            arrows.push(Arrow::new(id, a.src.clone(), b.tgt.clone()));
        }
    }

    let source_of = |id: &str| q.arrow(id).map(|a| a.src.as_str());
    let target_of = |id: &str| q.arrow(id).map(|a| a.tgt.as_str());

    let mut w = RawPotential::new();
    for (word, coeff) in qp.potential().terms() {
        let mut word = word.clone();
        // rotate so the word does not open in the middle of a pass through `vertex`
        let mut guard = 0;
        while source_of(&word[0]) == Some(vertex) && guard < word.len() {
            word.rotate_left(1);
            guard += 1;
        }
        let mut out = Vec::with_capacity(word.len());
        let mut k = 0;
        while k < word.len() {
            if target_of(&word[k]) == Some(vertex) {
                let next = &word[(k + 1) % word.len()];
                out.push(composite[&(word[k].as_str(), next.as_str())].clone());
                k += 2;
            } else {
                out.push(word[k].clone());
                k += 1;
            }
        }
        add_raw(&mut w, out, *coeff);
    }
    for a in &incoming {
        for b in &outgoing {
            let word = vec![
                composite[&(a.id.as_str(), b.id.as_str())].clone(),
                reversed[b.id.as_str()].clone(),
                reversed[a.id.as_str()].clone(),
            ];
            add_raw(&mut w, word, Coeff::from_integer(1));
        }
    }

    let (arrows, w) = reduce(arrows, w)?;
    let quiver = Quiver::new(q.vertices().to_vec(), arrows)?;
    for word in w.keys() {
        if word.len() < 3 {
            return Err(QpError::NonReducible(format!(
                "quadratic term `{}` survived reduction",
                word.join(" ")
            )));
        }
    }
    QuiverWithPotential::new(quiver, Potential::from_canonical_map(w))
}

/// Cancels 2-cycles `c: x→y`, `d: y→x` whose quadratic term `λ·cd` occurs in
/// the potential. Writing the remaining terms through `c` as `c·U` and through
/// `d` as `d·V`, the reduced potential is `R − (1/λ)·VU`, obtained by
/// substituting `c = −V/λ`, `d = −U/λ` (the solutions of `∂_d W = ∂_c W = 0`).
fn reduce(mut arrows: Vec<Arrow>, mut w: RawPotential) -> Result<(Vec<Arrow>, RawPotential), QpError> {
    for _ in 0..MAX_REDUCTION_ROUNDS {
        let Some((x, y)) = first_two_cycle(&arrows) else {
            return Ok((arrows, w));
        };
        let forward: BTreeSet<&str> = arrows
            .iter()
            .filter(|a| a.src == x && a.tgt == y)
            .map(|a| a.id.as_str())
            .collect();
        let backward: BTreeSet<&str> = arrows
            .iter()
            .filter(|a| a.src == y && a.tgt == x)
            .map(|a| a.id.as_str())
            .collect();
        let quadratic = w.iter().find_map(|(word, c)| {
            if word.len() != 2 {
                return None;
            }
            let (p, q) = (word[0].as_str(), word[1].as_str());
            if forward.contains(p) && backward.contains(q) {
                Some((p.to_string(), q.to_string(), *c))
            } else if forward.contains(q) && backward.contains(p) {
                Some((q.to_string(), p.to_string(), *c))
            } else {
                None
            }
        });
        let Some((c, d, lambda)) = quadratic else {
            return Err(QpError::NonReducible(format!(
                "2-cycle between `{x}` and `{y}` has no quadratic term in the potential"
            )));
        };

        let quad_key = canonical_rotation(&[c.clone(), d.clone()]);
        let mut u_parts: Vec<(Coeff, Vec<String>)> = Vec::new();
        let mut v_parts: Vec<(Coeff, Vec<String>)> = Vec::new();
        let mut rest = RawPotential::new();
        for (word, coeff) in &w {
            if *word == quad_key {
                continue;
            }
            let hits: Vec<usize> = word
                .iter()
                .enumerate()
                .filter(|(_, a)| **a == c || **a == d)
                .map(|(k, _)| k)
                .collect();
            match hits.as_slice() {
                [] => {
                    rest.insert(word.clone(), *coeff);
                }
                [k] => {
                    let mut rotated = word.clone();
                    rotated.rotate_left(*k);
                    let head = rotated.remove(0);
                    if head == c {
                        u_parts.push((*coeff, rotated));
                    } else {
                        v_parts.push((*coeff, rotated));
                    }
                }
                _ => {
                    return Err(QpError::NonReducible(format!(
                        "term `{}` meets the 2-cycle `{c}`,`{d}` more than once",
                        word.join(" ")
                    )))
                }
            }
        }
        for (mu, u) in &u_parts {
            for (nu, v) in &v_parts {
                let mut word = v.clone();
                word.extend(u.iter().cloned());
                add_raw(&mut rest, word, -(*mu * *nu) / lambda);
            }
        }
        arrows.retain(|a| a.id != c && a.id != d);
        w = rest;
    }
    Err(QpError::NonReducible(format!(
        "reduction did not reach a fixed point within {MAX_REDUCTION_ROUNDS} rounds"
    )))
}

fn first_two_cycle(arrows: &[Arrow]) -> Option<(String, String)> {
    arrows.iter().find_map(|a| {
        arrows
            .iter()
            .any(|b| b.src == a.tgt && b.tgt == a.src)
            .then(|| (a.src.clone(), a.tgt.clone()))
    })
}

/// Bounded non-degeneracy certificate: every mutation word of length at most
/// `depth` succeeds without producing loops or 2-cycles.
pub fn is_nondegenerate_to_depth(qp: &QuiverWithPotential, depth: usize) -> bool {
    fn walk(qp: &QuiverWithPotential, depth: usize) -> bool {
        if depth == 0 {
            return true;
        }
        qp.quiver().vertices().iter().all(|v| match mutate(qp, v) {
            Ok(next) => walk(&next, depth - 1),
            Err(_) => false,
        })
    }
    walk(qp, depth)
}
