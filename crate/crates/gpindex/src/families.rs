//! Tadpole graphs: an odd cycle with an even path attached, the family whose
//! GP index has a closed form and a mod-8 non-integrality criterion.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// An odd cycle of `cycle_len` edges with a path of `tail_len` edges (and as
/// many new vertices) attached at one cycle vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TadpoleSpec {
    cycle_len: usize,
    tail_len: usize,
}

impl TadpoleSpec {
    pub fn new(cycle_len: usize, tail_len: usize) -> Result<TadpoleSpec> {
        if cycle_len < 3 || cycle_len % 2 == 0 {
            return Err(Error::Tadpole(format!(
                "cycle length must be odd and at least 3, got {cycle_len}"
            )));
        }
        if tail_len < 2 || tail_len % 2 == 1 {
            return Err(Error::Tadpole(format!(
                "tail length must be even and at least 2, got {tail_len}"
            )));
        }
        Ok(TadpoleSpec {
            cycle_len,
            tail_len,
        })
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle_len
    }

    pub fn tail_len(&self) -> usize {
        self.tail_len
    }

    pub fn vertex_count(&self) -> usize {
        self.cycle_len + self.tail_len
    }

    /// The degree-3 attachment vertex.
    pub fn attachment_vertex(&self) -> usize {
        self.cycle_len - 1
    }
}

/// Builds the tadpole: vertices `0..l` form the cycle, vertices `l..l+t`
/// form the tail attached at vertex `l-1`.
pub fn tadpole(spec: TadpoleSpec) -> Result<Graph> {
    let l = spec.cycle_len;
    let t = spec.tail_len;
    let mut edges = Vec::with_capacity(l + t);
    for i in 0..l {
        edges.push((i, (i + 1) % l));
    }
    let mut prev = spec.attachment_vertex();
    for i in 0..t {
        edges.push((prev, l + i));
        prev = l + i;
    }
    Graph::from_edges(l + t, &edges)
}

/// Closed form `(l + t) * (1/2) * C((l+1)/2, 2)`: within-orbit distances are
/// exactly `1..=(l-1)/2`.
pub fn tadpole_gp_closed_form(spec: TadpoleSpec) -> Result<Rational> {
    let half = ((spec.cycle_len + 1) / 2) as i128;
    let binom = half * (half - 1) / 2;
    let n = spec.vertex_count() as i128;
    Rational::new(n.checked_mul(binom).ok_or(Error::Overflow)?, 2)
}

/// True iff the tadpole GP is not an integer: `l = 3 or 5 (mod 8)`.
pub fn tadpole_is_noninteger(cycle_len: usize) -> Result<bool> {
    if cycle_len < 3 || cycle_len % 2 == 0 {
        return Err(Error::Tadpole(format!(
            "cycle length must be odd and at least 3, got {cycle_len}"
        )));
    }
    Ok(matches!(cycle_len % 8, 3 | 5))
}
