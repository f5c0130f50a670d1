use std::cmp::Ordering;

use num_rational::Rational64;

use super::charge::{CentralCharge, ChargeScalar};
use super::field::rank;
use super::representation::Representation;
use super::subrep::{subrepresentations_with_bound, Subrep, DEFAULT_BOUND};
use super::RepError;

/// `μ_a(V) = Σ a_i dim V_i / Σ dim V_i`.
pub fn slope(v: &Representation, a: &[i64]) -> Result<Rational64, RepError> {
    if v.is_zero() {
        return Err(RepError::ZeroRepresentation);
    }
    let num = pairing(a, v.dims())?;
    Ok(Rational64::new(num, v.total_dim() as i64))
}

fn pairing(a: &[i64], dims: &[usize]) -> Result<i64, RepError> {
    if a.len() != dims.len() {
        return Err(RepError::Shape(format!(
            "weight has {} entries for {} vertices",
            a.len(),
            dims.len()
        )));
    }
    Ok(a.iter().zip(dims).map(|(x, &d)| x * d as i64).sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KingVerdict {
    Stable,
    Semistable,
    Unstable,
    /// `Σ a_i dim V_i ≠ 0`: the weight is not a stability for this vector.
    UnstableByConvention,
}

/// King's criterion: semistable iff every subrepresentation pairs
/// non-negatively with `a`, stable iff only `0` and `V` pair to zero.
pub fn king_classify(v: &Representation, a: &[i64]) -> Result<KingVerdict, RepError> {
    if pairing(a, v.dims())? != 0 {
        return Ok(KingVerdict::UnstableByConvention);
    }
    let mut stable = true;
    for w in subrepresentations_with_bound(v, true, DEFAULT_BOUND)? {
        match pairing(a, &w.dims())?.cmp(&0) {
            Ordering::Less => return Ok(KingVerdict::Unstable),
            Ordering::Equal => stable = false,
            Ordering::Greater => {}
        }
    }
    Ok(if stable {
        KingVerdict::Stable
    } else {
        KingVerdict::Semistable
    })
}

/// One Harder–Narasimhan factor: its class and phase.
#[derive(Clone, Debug, PartialEq)]
pub struct HnFactor {
    pub class: Vec<usize>,
    pub phase: f64,
}

fn signed(d: &[usize]) -> Vec<i64> {
    d.iter().map(|&x| x as i64).collect()
}

fn difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// The full lattice of subrepresentations of `V`, including `0` and `V`,
/// with containment precomputed.
#[derive(Clone, Debug)]
pub struct SubrepLattice {
    subs: Vec<Subrep>,
    dims: Vec<Vec<usize>>,
    below: Vec<Vec<bool>>,
    bottom: usize,
    top: usize,
}

impl SubrepLattice {
    pub fn new(v: &Representation) -> Result<Self, RepError> {
        Self::with_bound(v, DEFAULT_BOUND)
    }

    pub fn with_bound(v: &Representation, bound: usize) -> Result<Self, RepError> {
        if v.is_zero() {
            return Err(RepError::ZeroRepresentation);
        }
        let p = v.characteristic();
        let subs = subrepresentations_with_bound(v, false, bound)?;
        let dims: Vec<Vec<usize>> = subs.iter().map(Subrep::dims).collect();
        let below = subs
            .iter()
            .map(|big| subs.iter().map(|small| big.contains(small, p)).collect())
            .collect();
        let bottom = subs.iter().position(|s| s.total_dim() == 0).expect("zero subrep");
        let top = subs
            .iter()
            .position(|s| s.total_dim() == v.total_dim())
            .expect("whole subrep");
        Ok(Self {
            subs,
            dims,
            below,
            bottom,
            top,
        })
    }

    pub fn subreps(&self) -> &[Subrep] {
        &self.subs
    }

    /// `k ⊆ u`.
    fn le(&self, k: usize, u: usize) -> bool {
        self.below[u][k]
    }

    fn quotient(&self, u: usize, k: usize) -> Vec<i64> {
        signed(&difference(&self.dims[u], &self.dims[k]))
    }

    /// Is `U/K` semistable? Checked on every `K ⊊ B ⊊ U`.
    fn quotient_semistable<S: ChargeScalar>(
        &self,
        z: &CentralCharge<S>,
        u: usize,
        k: usize,
    ) -> Result<bool, RepError> {
        let whole = self.quotient(u, k);
        for b in 0..self.subs.len() {
            if b == u || b == k || !self.le(k, b) || !self.le(b, u) {
                continue;
            }
            if self.dims[b] == self.dims[k] || self.dims[b] == self.dims[u] {
                continue;
            }
            if z.cmp_phase(&self.quotient(b, k), &whole)? == Ordering::Greater {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_semistable<S: ChargeScalar>(&self, z: &CentralCharge<S>) -> Result<bool, RepError> {
        self.quotient_semistable(z, self.top, self.bottom)
    }

    /// HN filtration by repeatedly splitting off the maximally destabilizing
    /// quotient. Ties in phase go to the larger quotient, then to the
    /// lexicographically smaller dimension vector. Factors are returned in
    /// order of decreasing phase.
    pub fn hn_filtration<S: ChargeScalar>(&self, z: &CentralCharge<S>) -> Result<Vec<HnFactor>, RepError> {
        let mut factors = Vec::new();
        let mut u = self.top;
        while u != self.bottom {
            let mut best: Option<(usize, Vec<i64>)> = None;
            for k in 0..self.subs.len() {
                if k == u || !self.le(k, u) {
                    continue;
                }
                let q = self.quotient(u, k);
                let better = match &best {
                    None => true,
                    Some((_, bq)) => match z.cmp_phase(&q, bq)? {
                        Ordering::Less => true,
                        Ordering::Greater => false,
                        Ordering::Equal => {
                            let (tq, tb): (i64, i64) = (q.iter().sum(), bq.iter().sum());
                            tq > tb || (tq == tb && q < *bq)
                        }
                    },
                };
                if better {
                    best = Some((k, q));
                }
            }
            let (k, q) = best.expect("a proper subobject exists below a nonzero one");
            factors.push(HnFactor {
                phase: z.phase(&q)?,
                class: q.iter().map(|&x| x as usize).collect(),
            });
            u = k;
        }
        factors.reverse();
        Ok(factors)
    }

    /// Every chain `0 = A₀ ⊊ ⋯ ⊊ Aₙ = V` with semistable quotients of
    /// strictly decreasing phase.
    pub fn hn_chains<S: ChargeScalar>(&self, z: &CentralCharge<S>) -> Result<Vec<Vec<HnFactor>>, RepError> {
        let mut found = Vec::new();
        let mut chain: Vec<Vec<i64>> = Vec::new();
        self.grow(z, self.bottom, &mut chain, &mut found)?;
        Ok(found)
    }

    fn grow<S: ChargeScalar>(
        &self,
        z: &CentralCharge<S>,
        a: usize,
        chain: &mut Vec<Vec<i64>>,
        found: &mut Vec<Vec<HnFactor>>,
    ) -> Result<(), RepError> {
        if a == self.top {
            let factors = chain
                .iter()
                .map(|q| {
                    Ok(HnFactor {
                        phase: z.phase(q)?,
                        class: q.iter().map(|&x| x as usize).collect(),
                    })
                })
                .collect::<Result<Vec<_>, RepError>>()?;
            found.push(factors);
            return Ok(());
        }
        for b in 0..self.subs.len() {
            if b == a || !self.le(a, b) || self.dims[a] == self.dims[b] {
                continue;
            }
            let q = self.quotient(b, a);
            if let Some(prev) = chain.last() {
                if z.cmp_phase(&q, prev)? != Ordering::Less {
                    continue;
                }
            }
            if !self.quotient_semistable(z, b, a)? {
                continue;
            }
            chain.push(q);
            self.grow(z, b, chain, found)?;
            chain.pop();
        }
        Ok(())
    }
}

pub fn is_semistable<S: ChargeScalar>(v: &Representation, z: &CentralCharge<S>) -> Result<bool, RepError> {
    check_arity(v, z)?;
    SubrepLattice::new(v)?.is_semistable(z)
}

pub fn hn_filtration<S: ChargeScalar>(v: &Representation, z: &CentralCharge<S>) -> Result<Vec<HnFactor>, RepError> {
    check_arity(v, z)?;
    SubrepLattice::new(v)?.hn_filtration(z)
}

/// Brute-force HN filtration: enumerates every admissible chain and insists
/// there is exactly one.
pub fn hn_oracle<S: ChargeScalar>(v: &Representation, z: &CentralCharge<S>) -> Result<Vec<HnFactor>, RepError> {
    check_arity(v, z)?;
    let mut chains = SubrepLattice::new(v)?.hn_chains(z)?;
    if chains.len() != 1 {
        return Err(RepError::HnNotUnique(chains.len()));
    }
    Ok(chains.pop().expect("one chain"))
}

fn check_arity<S: ChargeScalar>(v: &Representation, z: &CentralCharge<S>) -> Result<(), RepError> {
    if z.len() != v.dims().len() {
        return Err(RepError::Shape(format!(
            "charge has {} values for {} vertices",
            z.len(),
            v.dims().len()
        )));
    }
    Ok(())
}

/// `dim Hom(A, B)`: the solution space of `φ_t f^A_a = f^B_a φ_s` over all arrows.
pub fn hom_dimension(a: &Representation, b: &Representation) -> Result<usize, RepError> {
    if a.qp() != b.qp() || a.characteristic() != b.characteristic() {
        return Err(RepError::Shape("representations live over different algebras".into()));
    }
    let p = a.characteristic();
    let q = a.qp().quiver();
    // unknown (v, r, c) is entry (r, c) of φ_v: B_v × A_v
    let mut offset = Vec::with_capacity(q.len());
    let mut n = 0;
    for v in 0..q.len() {
        offset.push(n);
        n += a.dims()[v] * b.dims()[v];
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * a.dims()[v] + c;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for arrow in q.arrows() {
        let s = q.vertex_index(&arrow.src).expect("validated");
        let t = q.vertex_index(&arrow.tgt).expect("validated");
        let fa = a.matrix(&arrow.id).expect("matrix");
        let fb = b.matrix(&arrow.id).expect("matrix");
        // (φ_t f^A)_{r,c} − (f^B φ_s)_{r,c} = 0 for r < dim B_t, c < dim A_s
        for r in 0..b.dims()[t] {
            for c in 0..a.dims()[s] {
                let mut row = vec![0u32; n];
                for k in 0..a.dims()[t] {
                    let x = &mut row[var(t, r, k)];
                    *x = (*x + fa.get(k, c)) % p;
                }
                for k in 0..b.dims()[s] {
                    let x = &mut row[var(s, k, c)];
                    *x = (*x + (p - fb.get(r, k)) % p) % p;
                }
                rows.push(row);
            }
        }
    }
    Ok(n - rank(rows, p))
}
