//! Combinatorial model of a Grassmannian `G(k, N)` of k-planes (projective
//! space is the case `k = 1`) under a diagonal one-parameter subgroup: torus
//! fixed points, tangent weights, restriction weights of the bundles the
//! formulas use, linearization shifts, and a Pieri-rule degree oracle.

use crate::error::Error;
use crate::{rat_int, Rat, Result};
use itertools::Itertools;
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;

/// Ambient variety: a Grassmannian of k-planes or a projective space.
/// Internally `P^n` is the Grassmannian `G(1, n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Grassmannian { k: usize, n_big: usize },
    Projective { dim: usize },
}

impl Ambient {
    pub fn grassmannian(k: usize, n_big: usize) -> Result<Self> {
        if k == 0 || k >= n_big {
            return Err(Error::invalid(format!(
                "grassmannian needs 1 <= k < N, got k={k}, N={n_big}"
            )));
        }
        Ok(Ambient::Grassmannian { k, n_big })
    }

    pub fn projective(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("projective space needs dimension >= 1"));
        }
        Ok(Ambient::Projective { dim })
    }

    /// `(k, N)` of the underlying Grassmannian of k-planes.
    pub fn plane_params(&self) -> (usize, usize) {
        match *self {
            Ambient::Grassmannian { k, n_big } => (k, n_big),
            Ambient::Projective { dim } => (1, dim + 1),
        }
    }

    pub fn dim(&self) -> usize {
        let (k, n) = self.plane_params();
        k * (n - k)
    }

    pub fn is_projective(&self) -> bool {
        self.plane_params().0 == 1
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Ambient::Grassmannian { k, n_big } => write!(f, "G({k},{n_big})"),
            Ambient::Projective { dim } => write!(f, "P^{dim}"),
        }
    }
}

/// Integer weights of a diagonalized one-parameter subgroup of `GL(N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePs {
    weights: Vec<i64>,
    sl: bool,
}

impl OnePs {
    pub fn new(weights: Vec<i64>, sl: bool) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::invalid("one-parameter subgroup needs weights"));
        }
        if sl && weights.iter().sum::<i64>() != 0 {
            return Err(Error::invalid(format!(
                "sl flag set but weights {weights:?} have nonzero trace"
            )));
        }
        Ok(OnePs { weights, sl })
    }

    /// Trace-zero weights.
    pub fn sl(weights: Vec<i64>) -> Result<Self> {
        Self::new(weights, true)
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn is_sl(&self) -> bool {
        self.sl
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Not all weights equal.
    pub fn is_nontrivial(&self) -> bool {
        self.weights.iter().any(|&w| w != self.weights[0])
    }

    pub fn is_distinct(&self) -> bool {
        (0..self.weights.len())
            .all(|i| (i + 1..self.weights.len()).all(|j| self.weights[i] != self.weights[j]))
    }
}

/// Torus fixed point of `G(k, N)`: the coordinate plane spanned by
/// `{e_i : i in I}` for a strictly increasing index set `I` (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedPoint {
    indices: Vec<usize>,
}

impl FixedPoint {
    pub fn new(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        FixedPoint { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Complement of the index set in `{1, ..., N}`.
    pub fn complement(&self, n_big: usize) -> Vec<usize> {
        (1..=n_big).filter(|i| !self.contains(*i)).collect()
    }
}

/// All `C(N, k)` fixed points in lexicographic order.
pub fn fixed_points(k: usize, n_big: usize) -> Result<Vec<FixedPoint>> {
    if k == 0 || k >= n_big {
        return Err(Error::invalid(format!("need 1 <= k < N, got k={k}, N={n_big}")));
    }
    Ok((1..=n_big).combinations(k).map(FixedPoint::new).collect())
}

/// Weights of the torus action on the tangent space `Hom(S, Q)` at a fixed
/// point: the multiset `{nu_j - nu_i : i in I, j not in I}`.
pub fn tangent_weights(point: &FixedPoint, one_ps: &OnePs) -> Vec<Rat> {
    let nu = one_ps.weights();
    let n_big = nu.len();
    let mut out = Vec::with_capacity(point.indices.len() * (n_big - point.indices.len()));
    for &i in &point.indices {
        for j in 1..=n_big {
            if !point.contains(j) {
                out.push(rat_int(nu[j - 1] - nu[i - 1]));
            }
        }
    }
    out
}

/// Bundle atoms whose restriction weights at fixed points are known in closed
/// form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BundleKind {
    /// Tautological subbundle `S` (rank k).
    TautSub,
    /// Universal quotient `Q` (rank N-k).
    Quotient,
    /// Exterior power of the quotient, `wedge^l Q`.
    ExteriorQuotient(usize),
    /// `(det Q)^a`; for `a = 1` this is the Plücker polarization.
    DetQuotientPower(i64),
    /// Anticanonical bundle with the linearization induced by the tangent
    /// action, so its weight is the sum of the tangent weights.
    AntiCanonical,
    /// `O(r)` on projective space.
    LinePower(i64),
}

/// A bundle atom together with a global linearization shift: twisting by a
/// trivial line bundle adds the same rational to every restriction weight.
#[derive(Debug, Clone, PartialEq)]
pub struct BundleExpr {
    pub kind: BundleKind,
    pub shift: Rat,
}

impl BundleExpr {
    pub fn new(kind: BundleKind) -> Self {
        BundleExpr { kind, shift: Rat::zero() }
    }

    pub fn shifted(kind: BundleKind, shift: Rat) -> Self {
        BundleExpr { kind, shift }
    }

    pub fn with_shift(&self, shift: Rat) -> Self {
        BundleExpr { kind: self.kind.clone(), shift }
    }

    pub fn unshifted(&self) -> Self {
        BundleExpr { kind: self.kind.clone(), shift: Rat::zero() }
    }

    pub fn rank(&self, ambient: &Ambient) -> Result<usize> {
        let (k, n_big) = ambient.plane_params();
        let u = n_big - k;
        match self.kind {
            BundleKind::TautSub => Ok(k),
            BundleKind::Quotient => Ok(u),
            BundleKind::ExteriorQuotient(l) => {
                if l == 0 || l > u {
                    Err(Error::invalid(format!("exterior power {l} outside 1..={u}")))
                } else {
                    Ok(crate::binomial(u, l) as usize)
                }
            }
            BundleKind::DetQuotientPower(_) | BundleKind::AntiCanonical => Ok(1),
            BundleKind::LinePower(_) => {
                if ambient.is_projective() {
                    Ok(1)
                } else {
                    Err(Error::invalid("O(r) only lives on projective ambients"))
                }
            }
        }
    }

    /// `r`-th tensor power of a line bundle expression; the shift scales.
    pub fn power(&self, r: i64) -> Result<Self> {
        let shift = Rat::from_integer(r.into()) * self.shift.clone();
        let kind = match self.kind {
            BundleKind::LinePower(a) => BundleKind::LinePower(a * r),
            BundleKind::DetQuotientPower(a) => BundleKind::DetQuotientPower(a * r),
            BundleKind::AntiCanonical if r == 1 => BundleKind::AntiCanonical,
            BundleKind::ExteriorQuotient(l) if r == 1 => BundleKind::ExteriorQuotient(l),
            _ => {
                return Err(Error::invalid(format!(
                    "cannot take tensor power {r} of {:?}",
                    self.kind
                )))
            }
        };
        Ok(BundleExpr { kind, shift })
    }
}

/// Restriction weights of the bundle at a fixed point, shift included.
pub fn bundle_weights(bundle: &BundleExpr, point: &FixedPoint, one_ps: &OnePs) -> Result<Vec<Rat>> {
    let nu = one_ps.weights();
    let n_big = nu.len();
    let raw: Vec<Rat> = match bundle.kind {
        BundleKind::TautSub => point.indices.iter().map(|&i| rat_int(nu[i - 1])).collect(),
        BundleKind::Quotient => point
            .complement(n_big)
            .iter()
            .map(|&j| rat_int(nu[j - 1]))
            .collect(),
        BundleKind::ExteriorQuotient(l) => {
            let comp = point.complement(n_big);
            if l == 0 || l > comp.len() {
                return Err(Error::invalid(format!(
                    "exterior power {l} outside 1..={}",
                    comp.len()
                )));
            }
            comp.iter()
                .combinations(l)
                .map(|ix| rat_int(ix.iter().map(|&&j| nu[j - 1]).sum::<i64>()))
                .collect()
        }
        BundleKind::DetQuotientPower(a) => {
            let s: i64 = point.complement(n_big).iter().map(|&j| nu[j - 1]).sum();
            vec![rat_int(a * s)]
        }
        BundleKind::AntiCanonical => {
            vec![tangent_weights(point, one_ps).into_iter().sum()]
        }
        BundleKind::LinePower(r) => {
            if point.indices.len() != 1 {
                return Err(Error::invalid("O(r) only lives on projective ambients"));
            }
            vec![rat_int(-r * nu[point.indices[0] - 1])]
        }
    };
    Ok(raw
        .into_iter()
        .map(|w| w + bundle.shift.clone())
        .collect())
}

/// Sum of the restriction weights (the equivariant first Chern class at the
/// point).
pub fn weight_sum(bundle: &BundleExpr, point: &FixedPoint, one_ps: &OnePs) -> Result<Rat> {
    Ok(bundle_weights(bundle, point, one_ps)?.into_iter().sum())
}

/// Whether `(det E)^q` and `L^p` agree as linearized bundles: at every fixed
/// point `q * sum(E weights) = p * sum(L weights)`.
pub fn linearization_compat(
    e_bundle: &BundleExpr,
    l_bundle: &BundleExpr,
    p: i64,
    q: i64,
    ambient: &Ambient,
    one_ps: &OnePs,
) -> Result<bool> {
    if q == 0 {
        return Err(Error::invalid("compatibility exponent q must be nonzero"));
    }
    let (k, n_big) = ambient.plane_params();
    for point in fixed_points(k, n_big)? {
        let ew = weight_sum(e_bundle, &point, one_ps)?;
        let lw = weight_sum(l_bundle, &point, one_ps)?;
        if rat_int(q) * ew != rat_int(p) * lw {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree of `G(k, N)` in the Plücker embedding, computed by iterated Pieri
/// multiplication: walk up the lattice of partitions inside the `k x (N-k)`
/// box adding one cell at a time and count paths to the full box.
pub fn pieri_degree(k: usize, n_big: usize) -> Result<u64> {
    if k == 0 || k >= n_big {
        return Err(Error::invalid(format!("need 1 <= k < N, got k={k}, N={n_big}")));
    }
    let cols = n_big - k;
    let dim = k * cols;
    let mut layer: HashMap<Vec<usize>, u64> = HashMap::new();
    layer.insert(vec![0; k], 1);
    for _ in 0..dim {
        let mut next: HashMap<Vec<usize>, u64> = HashMap::new();
        for (shape, count) in layer {
            for row in 0..k {
                let cap = if row == 0 { cols } else { shape[row - 1] };
                if shape[row] < cap {
                    let mut grown = shape.clone();
                    grown[row] += 1;
                    *next.entry(grown).or_insert(0) += count;
                }
            }
        }
        layer = next;
    }
    Ok(layer.get(&vec![cols; k]).copied().unwrap_or(0))
}
