//! All-pairs shortest paths by level BFS, and Wiener-type distance sums.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hop-count distance matrix of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Runs one BFS per vertex. Errors on disconnected input.
    pub fn new(g: &Graph) -> Result<DistanceMatrix> {
        let n = g.vertex_count();
        let mut d = vec![0u32; n * n];
        for src in 0..n {
            let row = &mut d[src * n..(src + 1) * n];
            let mut seen = 1u64 << src;
            let mut frontier = seen;
            let mut level = 0u32;
            while frontier != 0 {
                let mut m = frontier;
                let mut next = 0u64;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    row[v] = level;
                    next |= g.neighbors(v);
                    m &= m - 1;
                }
                frontier = next & !seen;
                seen |= frontier;
                level += 1;
            }
            if seen.count_ones() as usize != n {
                return Err(Error::Disconnected);
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// `w_S(u)`: sum of distances from `u` to every vertex of `S`.
    pub fn distance_sum(&self, u: usize, s: &[usize]) -> u64 {
        s.iter().map(|&v| self.get(u, v) as u64).sum()
    }

    /// `W_G(S)`: sum of distances over unordered pairs within `S`.
    pub fn set_wiener(&self, s: &[usize]) -> u64 {
        let mut total = 0u64;
        for (i, &u) in s.iter().enumerate() {
            for &v in &s[i + 1..] {
                total += self.get(u, v) as u64;
            }
        }
        total
    }

    /// Wiener index: `W_G(V)`.
    pub fn wiener(&self) -> u64 {
        let mut total = 0u64;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                total += self.get(u, v) as u64;
            }
        }
        total
    }
}

fn check_subset(g: &Graph, s: &[usize]) -> Result<()> {
    for &v in s {
        g.check_vertex(v)?;
    }
    Ok(())
}

/// Distance matrix of `g`; errors on disconnected input.
pub fn bfs_distances(g: &Graph) -> Result<DistanceMatrix> {
    DistanceMatrix::new(g)
}

pub fn wiener_index(g: &Graph) -> Result<u64> {
    Ok(DistanceMatrix::new(g)?.wiener())
}

pub fn set_wiener(g: &Graph, s: &[usize]) -> Result<u64> {
    check_subset(g, s)?;
    Ok(DistanceMatrix::new(g)?.set_wiener(s))
}

pub fn distance_sum(g: &Graph, u: usize, s: &[usize]) -> Result<u64> {
    g.check_vertex(u)?;
    check_subset(g, s)?;
    Ok(DistanceMatrix::new(g)?.distance_sum(u, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn k2_matrix() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let d = DistanceMatrix::new(&g).unwrap();
        assert_eq!((d.get(0, 0), d.get(0, 1), d.get(1, 0), d.get(1, 1)), (0, 1, 1, 0));
    }

    #[test]
    fn c5_matrix() {
        let d = DistanceMatrix::new(&c5()).unwrap();
        for u in 0..5 {
            let mut row_sum = 0;
            for v in 0..5 {
                assert_eq!(d.get(u, v), d.get(v, u));
                if u != v {
                    assert!(matches!(d.get(u, v), 1 | 2));
                }
                row_sum += d.get(u, v);
            }
            assert_eq!(row_sum, 6);
        }
    }

    #[test]
    fn p3_distances() {
        let d = DistanceMatrix::new(&p3()).unwrap();
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(wiener_index(&p3()).unwrap(), 4);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(DistanceMatrix::new(&g).unwrap_err(), Error::Disconnected);
        assert_eq!(wiener_index(&g).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn wiener_values() {
        assert_eq!(wiener_index(&c5()).unwrap(), 15);
        assert_eq!(
            wiener_index(&Graph::from_edges(2, &[(0, 1)]).unwrap()).unwrap(),
            1
        );
    }

    #[test]
    fn set_wiener_cases() {
        let g = c5();
        assert_eq!(set_wiener(&g, &[]).unwrap(), 0);
        assert_eq!(set_wiener(&g, &[3]).unwrap(), 0);
        assert_eq!(set_wiener(&g, &[0, 1, 2, 3, 4]).unwrap(), 15);
        // star-plus-edge from the 5-vertex fixtures: vertices 2,3 adjacent
        let f = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 3)]).unwrap();
        assert_eq!(set_wiener(&f, &[2, 3]).unwrap(), 1);
    }

    #[test]
    fn distance_sum_cases() {
        let g = c5();
        assert_eq!(distance_sum(&g, 2, &[2]).unwrap(), 0);
        for u in 0..5 {
            assert_eq!(distance_sum(&g, u, &[0, 1, 2, 3, 4]).unwrap(), 6);
        }
        assert_eq!(distance_sum(&p3(), 0, &[0, 1, 2]).unwrap(), 3);
        assert!(matches!(
            distance_sum(&g, 9, &[0]).unwrap_err(),
            Error::VertexOutOfRange { .. }
        ));
    }

    #[test]
    fn pair_sum_identity_small_sweep() {
        // 2*W_G(S) == sum over u in S of w_S(u), for assorted graphs and subsets
        let graphs = [
            c5(),
            p3(),
            Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 3)]).unwrap(),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(),
        ];
        for g in &graphs {
            let n = g.vertex_count();
            let d = DistanceMatrix::new(g).unwrap();
            for mask in 0u32..(1 << n) {
                let s: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                let lhs = 2 * d.set_wiener(&s);
                let rhs: u64 = s.iter().map(|&u| d.distance_sum(u, &s)).sum();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
