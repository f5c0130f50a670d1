use super::field::Subspace;
use super::representation::Representation;
use super::RepError;

/// Default ceiling on the total dimension of a representation whose
/// subobjects are enumerated.
pub const DEFAULT_BOUND: usize = 8;

/// A subrepresentation, given by one subspace per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subrep {
    spaces: Vec<Subspace>,
}

impl Subrep {
    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    pub fn contains(&self, other: &Subrep, p: u32) -> bool {
        self.spaces
            .iter()
            .zip(&other.spaces)
            .all(|(a, b)| a.contains_subspace(b, p))
    }
}

/// All subrepresentations of `v` in a deterministic order (vertex by vertex,
/// each vertex running through its subspaces by dimension). With
/// `proper_nonzero` the zero and the whole representation are dropped.
pub fn subrepresentations(v: &Representation, proper_nonzero: bool) -> Result<Vec<Subrep>, RepError> {
    subrepresentations_with_bound(v, proper_nonzero, DEFAULT_BOUND)
}

pub fn subrepresentations_with_bound(
    v: &Representation,
    proper_nonzero: bool,
    bound: usize,
) -> Result<Vec<Subrep>, RepError> {
    let p = v.characteristic();
    if p > 3 {
        return Err(RepError::FieldTooLarge(p));
    }
    if v.total_dim() > bound {
        return Err(RepError::TooLarge(format!(
            "total dimension {} exceeds the bound {bound}",
            v.total_dim()
        )));
    }
    let q = v.qp().quiver();
    let candidates: Vec<Vec<Subspace>> = v.dims().iter().map(|&d| Subspace::enumerate(d, p)).collect();
    // arrows checkable once both endpoints are chosen, keyed by the later endpoint
    let mut checks: Vec<Vec<(usize, usize, &str)>> = vec![Vec::new(); q.len()];
    for a in q.arrows() {
        let s = q.vertex_index(&a.src).expect("validated");
        let t = q.vertex_index(&a.tgt).expect("validated");
        checks[s.max(t)].push((s, t, a.id.as_str()));
    }

    let mut out = Vec::new();
    let mut chosen: Vec<Subspace> = Vec::with_capacity(q.len());
    extend(v, &candidates, &checks, &mut chosen, &mut out);
    if proper_nonzero {
        let total = v.total_dim();
        out.retain(|s| s.total_dim() != 0 && s.total_dim() != total);
    }
    Ok(out)
}

fn extend(
    v: &Representation,
    candidates: &[Vec<Subspace>],
    checks: &[Vec<(usize, usize, &str)>],
    chosen: &mut Vec<Subspace>,
    out: &mut Vec<Subrep>,
) {
    let i = chosen.len();
    if i == candidates.len() {
        out.push(Subrep { spaces: chosen.clone() });
        return;
    }
    let p = v.characteristic();
    for w in &candidates[i] {
        chosen.push(w.clone());
        let closed = checks[i].iter().all(|&(s, t, id)| {
            let m = v.matrix(id).expect("every arrow has a matrix");
            chosen[s].basis().iter().all(|b| chosen[t].contains(&m.apply(b, p), p))
        });
        if closed {
            extend(v, candidates, checks, chosen, out);
        }
        chosen.pop();
    }
}
