//! The Graovac-Pisanski index by three independent routes, plus the
//! integrality guarantees.
//!
//! Production path is the orbit-representative formula (one distance row per
//! orbit); the orbit-Wiener form and the raw double-sum definition serve as
//! cross-checks.

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::symmetry::{self, Analysis};

/// Why a GP value is known to be an integer before computing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegerGuarantee {
    /// Even vertex count.
    EvenOrder,
    /// Connected bipartite graph.
    Bipartite,
    /// No a-priori guarantee (the value may still be an integer).
    None,
}

impl std::fmt::Display for IntegerGuarantee {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            IntegerGuarantee::EvenOrder => "even-order",
            IntegerGuarantee::Bipartite => "bipartite",
            IntegerGuarantee::None => "none",
        };
        f.write_str(s)
    }
}

/// Integer / half-integer classification of a GP value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GpClass {
    Integer,
    HalfInteger,
}

/// GP value plus the context a consumer usually wants alongside it.
#[derive(Debug, Clone)]
pub struct GpReport {
    pub gp: Rational,
    pub aut_order: u128,
    pub orbit_count: usize,
    pub orbits: Vec<Vec<usize>>,
    pub wiener: u64,
    pub is_integer: bool,
    pub guarantee: IntegerGuarantee,
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// GP by the defining double sum over vertices and automorphisms,
/// `|V| / (2 |Aut|) * sum_u sum_a d(u, a(u))`.
pub fn gp_definition(g: &Graph) -> Result<Rational> {
    require_connected(g)?;
    let n = g.vertex_count();
    let dm = DistanceMatrix::new(g)?;
    let autos = symmetry::all_automorphisms(g)?;
    let mut total: i128 = 0;
    for a in &autos {
        for u in 0..n {
            total += dm.get(u, a.apply(u)) as i128;
        }
    }
    let num = total.checked_mul(n as i128).ok_or(Error::Overflow)?;
    Rational::new(num, 2 * autos.len() as i128)
}

/// GP as `|V| * sum_i W_G(V_i) / |V_i|` over the vertex orbits.
pub fn gp_orbit_wiener(g: &Graph) -> Result<Rational> {
    require_connected(g)?;
    let dm = DistanceMatrix::new(g)?;
    let orbits = symmetry::orbits(g)?;
    gp_orbit_wiener_with(g, &dm, &orbits)
}

fn gp_orbit_wiener_with(g: &Graph, dm: &DistanceMatrix, orbits: &[Vec<usize>]) -> Result<Rational> {
    let mut sum = Rational::ZERO;
    for orbit in orbits {
        let w = dm.set_wiener(orbit) as i128;
        sum = sum.checked_add(&Rational::new(w, orbit.len() as i128)?)?;
    }
    sum.checked_mul_int(g.vertex_count() as i128)
}

/// GP as `|V| * sum_i (1/2) w_{V_i}(v_i)` with one representative per orbit.
pub fn gp_orbit_representative(g: &Graph) -> Result<Rational> {
    require_connected(g)?;
    let dm = DistanceMatrix::new(g)?;
    let orbits = symmetry::orbits(g)?;
    gp_orbit_representative_with(g, &dm, &orbits)
}

pub(crate) fn gp_orbit_representative_with(
    g: &Graph,
    dm: &DistanceMatrix,
    orbits: &[Vec<usize>],
) -> Result<Rational> {
    let mut total: i128 = 0;
    for orbit in orbits {
        // minimum-id representative; any choice gives the same sum
        let rep = orbit[0];
        total += dm.distance_sum(rep, orbit) as i128;
    }
    let num = total.checked_mul(g.vertex_count() as i128).ok_or(Error::Overflow)?;
    Rational::new(num, 2)
}

/// Integer / half-integer split; any other denominator is an internal
/// consistency failure.
pub fn classify_gp(x: &Rational) -> Result<GpClass> {
    match x.denominator() {
        1 => Ok(GpClass::Integer),
        2 => Ok(GpClass::HalfInteger),
        d => Err(Error::BadDenominator(d)),
    }
}

/// A-priori integrality guarantee: even vertex count, else bipartiteness.
/// `None` does not mean the value is non-integer.
pub fn integer_guarantee(g: &Graph) -> Result<IntegerGuarantee> {
    require_connected(g)?;
    if g.vertex_count() % 2 == 0 {
        return Ok(IntegerGuarantee::EvenOrder);
    }
    if g.bipartition()?.is_some() {
        return Ok(IntegerGuarantee::Bipartite);
    }
    Ok(IntegerGuarantee::None)
}

/// Full report. On graphs small enough to enumerate the group, all three
/// formulas are cross-checked and any mismatch is a hard error.
pub fn gp_report(g: &Graph) -> Result<GpReport> {
    require_connected(g)?;
    let analysis = symmetry::analyze(g)?;
    let dm = DistanceMatrix::new(g)?;
    report_from_analysis(g, &dm, &analysis, true)
}

pub(crate) fn report_from_analysis(
    g: &Graph,
    dm: &DistanceMatrix,
    analysis: &Analysis,
    cross_check: bool,
) -> Result<GpReport> {
    let orbits = &analysis.group.orbits;
    let gp = gp_orbit_representative_with(g, dm, orbits)?;
    if cross_check && g.vertex_count() <= symmetry::ENUMERATION_CAP {
        let by_wiener = gp_orbit_wiener_with(g, dm, orbits)?;
        let by_definition = gp_definition(g)?;
        assert_eq!(
            gp, by_wiener,
            "GP formula mismatch (representative vs orbit-Wiener)"
        );
        assert_eq!(
            gp, by_definition,
            "GP formula mismatch (representative vs definition)"
        );
    }
    let class = classify_gp(&gp)?;
    let guarantee = integer_guarantee(g)?;
    let is_integer = class == GpClass::Integer;
    if guarantee != IntegerGuarantee::None {
        assert!(is_integer, "integrality guarantee violated");
    }
    Ok(GpReport {
        gp,
        aut_order: analysis.group.order,
        orbit_count: orbits.len(),
        orbits: orbits.clone(),
        wiener: dm.wiener(),
        is_integer,
        guarantee,
    })
}
