use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Graph families that can be generated from a short inline spec such as
/// `cycle:5`, `complete_bipartite:3,4` or `random:20,0.3,7`.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Empty(usize),
    Path(usize),
    /// `Cycle(2)` collapses to a single edge, the simple graph underlying a
    /// 2-cycle.
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    /// Erdős–Rényi G(n, p).
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// Each edge between the parts `0..left` and `left..left+right` is kept
    /// with probability `p`.
    RandomBipartite {
        left: usize,
        right: usize,
        p: f64,
        seed: u64,
    },
    /// Uniform random recursive tree: vertex `v` attaches to a uniformly
    /// chosen earlier vertex.
    Tree {
        n: usize,
        seed: u64,
    },
    /// The 14-vertex running example,
    /// with `a_k` stored at id `k - 1`.
    Figure1,
}

fn nonzero(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!(
            "{what} needs at least one vertex"
        )))
    } else {
        Ok(())
    }
}

fn probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "edge probability {p} is outside [0, 1]"
        )))
    }
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::Empty(n) => {
                nonzero(n, "empty")?;
                Ok(Graph::empty(n))
            }
            Family::Path(n) => {
                nonzero(n, "path")?;
                Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
            }
            Family::Cycle(n) => match n {
                0 | 1 => Err(Error::InvalidParameter(format!(
                    "cycle needs at least 2 vertices, got {n}"
                ))),
                2 => Graph::from_edges(2, [(0, 1)]),
                _ => Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))),
            },
            Family::Complete(n) => {
                nonzero(n, "complete")?;
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Family::CompleteBipartite(a, b) => {
                nonzero(a, "complete_bipartite left part")?;
                nonzero(b, "complete_bipartite right part")?;
                Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            }
            Family::Star(k) => Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))),
            Family::Random { n, p, seed } => {
                nonzero(n, "random")?;
                probability(p)?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, edges)
            }
            Family::RandomBipartite {
                left,
                right,
                p,
                seed,
            } => {
                nonzero(left + right, "bipartite")?;
                probability(p)?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut edges = Vec::new();
                for u in 0..left {
                    for v in left..left + right {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(left + right, edges)
            }
            Family::Tree { n, seed } => {
                nonzero(n, "tree")?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
                Graph::from_edges(n, edges)
            }
            Family::Figure1 => Ok(figure1()),
        }
    }

    /// Parses an inline spec; randomized families without an explicit seed
    /// use `default_seed`.
    pub fn parse_with_seed(spec: &str, default_seed: u64) -> Result<Self> {
        let spec = spec.trim();
        let (name, args) = match spec.split_once(':') {
            Some((name, args)) => (name, args.split(',').map(str::trim).collect::<Vec<_>>()),
            None => (spec, Vec::new()),
        };
        let bad = |why: &str| Error::InvalidParameter(format!("generator spec `{spec}`: {why}"));
        let int = |i: usize| -> Result<usize> {
            args.get(i)
                .ok_or_else(|| bad("missing argument"))?
                .parse()
                .map_err(|_| bad("expected a non-negative integer"))
        };
        let float = |i: usize| -> Result<f64> {
            args.get(i)
                .ok_or_else(|| bad("missing probability"))?
                .parse()
                .map_err(|_| bad("expected a probability"))
        };
        let seed = |i: usize| -> Result<u64> {
            match args.get(i) {
                None => Ok(default_seed),
                Some(s) => s.parse().map_err(|_| bad("expected an integer seed")),
            }
        };
        let arity = |lo: usize, hi: usize| -> Result<()> {
            if (lo..=hi).contains(&args.len()) {
                Ok(())
            } else {
                Err(bad("wrong number of arguments"))
            }
        };

        let family = match name {
            "empty" => {
                arity(1, 1)?;
                Family::Empty(int(0)?)
            }
            "path" => {
                arity(1, 1)?;
                Family::Path(int(0)?)
            }
            "cycle" => {
                arity(1, 1)?;
                Family::Cycle(int(0)?)
            }
            "complete" => {
                arity(1, 1)?;
                Family::Complete(int(0)?)
            }
            "complete_bipartite" => {
                arity(2, 2)?;
                Family::CompleteBipartite(int(0)?, int(1)?)
            }
            "star" => {
                arity(1, 1)?;
                Family::Star(int(0)?)
            }
            "random" => {
                arity(2, 3)?;
                Family::Random {
                    n: int(0)?,
                    p: float(1)?,
                    seed: seed(2)?,
                }
            }
            "bipartite" => {
                arity(3, 4)?;
                Family::RandomBipartite {
                    left: int(0)?,
                    right: int(1)?,
                    p: float(2)?,
                    seed: seed(3)?,
                }
            }
            "tree" => {
                arity(1, 2)?;
                Family::Tree {
                    n: int(0)?,
                    seed: seed(1)?,
                }
            }
            "figure1" => {
                arity(0, 0)?;
                Family::Figure1
            }
            _ => return Err(bad("unknown family")),
        };
        Ok(family)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::parse_with_seed(s, 0)
    }
}

/// Vertex id of `a_k` in [`figure1`].
pub(crate) const fn a(k: usize) -> usize {
    k - 1
}

/// The worked example graph on `a_1..a_14`, rebuilt from the stars of the
/// five greedy picks plus the six edges found inside their neighborhoods.
pub fn figure1() -> Graph {
    const STARS: [(usize, &[usize]); 5] = [
        (3, &[2, 4, 5, 6, 11]),
        (12, &[2, 6, 9, 11, 13]),
        (7, &[1, 2, 8, 11]),
        (10, &[8, 9, 11]),
        (14, &[4, 5, 13]),
    ];
    const INNER: [(usize, usize); 6] = [(4, 5), (5, 6), (1, 2), (1, 8), (8, 9), (5, 13)];

    let edges = STARS
        .iter()
        .flat_map(|&(c, leaves)| leaves.iter().map(move |&l| Edge::new(a(c), a(l))))
        .chain(INNER.iter().map(|&(x, y)| Edge::new(a(x), a(y))));
    Graph::from_edges(14, edges).expect("figure1 edge list is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure1_shape() {
        let g = figure1();
        assert_eq!(g.n(), 14);
        assert_eq!(g.m(), 26);
        assert_eq!(g.max_degree(), 5);
        let top: Vec<_> = g
            .vertices()
            .filter(|&v| g.degree(v).unwrap() == 5)
            .collect();
        assert_eq!(top, vec![a(3), a(5), a(12)]);
        assert_eq!(
            g.degree_sequence(),
            vec![3, 4, 5, 3, 5, 3, 4, 4, 3, 3, 4, 5, 3, 3]
        );
    }

    #[test]
    fn figure1_neighborhoods() {
        let g = figure1();
        let ids = |ks: &[usize]| ks.iter().map(|&k| a(k)).collect();
        assert_eq!(g.degree(a(3)).unwrap(), 5);
        assert_eq!(g.open_neighborhood(a(3)).unwrap(), ids(&[2, 4, 5, 6, 11]));
        assert_eq!(g.open_neighborhood(a(10)).unwrap(), ids(&[8, 9, 11]));
        assert_eq!(g.closed_neighborhood(a(14)).unwrap(), ids(&[4, 5, 13, 14]));
        assert!(g.is_independent(&ids(&[3, 12, 7, 10, 14])));
    }

    #[test]
    fn small_families() {
        assert_eq!(
            Family::Path(2).generate().unwrap().edges(),
            &[Edge::new(0, 1)]
        );
        assert_eq!(Family::Complete(4).generate().unwrap().m(), 6);
        assert_eq!(Family::Cycle(2).generate().unwrap().m(), 1);
        assert_eq!(Family::CompleteBipartite(3, 4).generate().unwrap().m(), 12);
        assert_eq!(Family::Star(4).generate().unwrap().degree(0).unwrap(), 4);
        let t = Family::Tree { n: 15, seed: 3 }.generate().unwrap();
        assert_eq!(t.m(), 14);
    }

    #[test]
    fn random_is_seeded() {
        let f = Family::Random {
            n: 20,
            p: 0.3,
            seed: 11,
        };
        assert_eq!(f.generate().unwrap(), f.generate().unwrap());
        let other = Family::Random {
            n: 20,
            p: 0.3,
            seed: 12,
        };
        assert_ne!(f.generate().unwrap(), other.generate().unwrap());
        assert_eq!(
            Family::Random {
                n: 6,
                p: 1.0,
                seed: 0
            }
            .generate()
            .unwrap()
            .m(),
            15
        );
        assert_eq!(
            Family::Random {
                n: 6,
                p: 0.0,
                seed: 0
            }
            .generate()
            .unwrap()
            .m(),
            0
        );
    }

    #[test]
    fn invalid_parameters() {
        assert!(Family::Path(0).generate().is_err());
        assert!(Family::Cycle(1).generate().is_err());
        assert!(Family::Random {
            n: 4,
            p: 1.5,
            seed: 0
        }
        .generate()
        .is_err());
        assert!(Family::CompleteBipartite(0, 3).generate().is_err());
    }

    #[test]
    fn parse_specs() {
        assert_eq!("cycle:5".parse::<Family>().unwrap(), Family::Cycle(5));
        assert_eq!(
            "complete_bipartite:3,4".parse::<Family>().unwrap(),
            Family::CompleteBipartite(3, 4)
        );
        assert_eq!(
            "random:20,0.3,9".parse::<Family>().unwrap(),
            Family::Random {
                n: 20,
                p: 0.3,
                seed: 9
            }
        );
        assert_eq!(
            Family::parse_with_seed("random:20,0.3", 42).unwrap(),
            Family::Random {
                n: 20,
                p: 0.3,
                seed: 42
            }
        );
        assert_eq!("figure1".parse::<Family>().unwrap(), Family::Figure1);
        for bad in ["cycle", "cycle:x", "hypercube:3", "path:1,2", "figure1:3"] {
            assert!(bad.parse::<Family>().is_err(), "{bad}");
        }
    }
}
