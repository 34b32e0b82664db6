use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::families::{building, clique, cycle, diamond, domino, grid, half_grid, hole, house, path, star};
use super::random::{random_block, random_chordal, random_connected, random_interval};

/// A named graph family with its parameters, written `name:params` (for
/// example `grid:3,4` or `random:9,0.25`).
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Clique(usize),
    Star(usize),
    Grid(usize, usize),
    HalfGrid(usize),
    Building(usize),
    House,
    Domino,
    Diamond,
    Hole(usize),
    Random(usize, f64),
    Chordal(usize, usize),
    Block(usize, usize),
    Interval(usize),
}

impl FamilySpec {
    /// Whether the generated graph depends on the seed.
    pub fn is_random(&self) -> bool {
        matches!(
            self,
            FamilySpec::Random(..) | FamilySpec::Chordal(..) | FamilySpec::Block(..) | FamilySpec::Interval(_)
        )
    }

    pub fn generate(&self, seed: u64) -> Result<Graph> {
        match *self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Clique(n) => clique(n),
            FamilySpec::Star(n) => star(n),
            FamilySpec::Grid(p, q) => grid(p, q),
            FamilySpec::HalfGrid(k) => half_grid(k),
            FamilySpec::Building(k) => Ok(building(k)),
            FamilySpec::House => Ok(house()),
            FamilySpec::Domino => Ok(domino()),
            FamilySpec::Diamond => Ok(diamond()),
            FamilySpec::Hole(n) => hole(n),
            FamilySpec::Random(n, p) => random_connected(n, p, seed),
            FamilySpec::Chordal(n, k) => random_chordal(n, k, seed),
            FamilySpec::Block(n, c) => random_block(n, c, seed),
            FamilySpec::Interval(n) => random_interval(n, seed),
        }
    }
}

fn parse_params<T: FromStr>(name: &str, params: Option<&str>, count: usize) -> Result<Vec<T>> {
    let raw = params.ok_or_else(|| Error::input(format!("family {name:?} needs {count} parameter(s)")))?;
    let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
    if parts.len() != count {
        return Err(Error::input(format!(
            "family {name:?} needs {count} parameter(s), got {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| p.parse().map_err(|_| Error::input(format!("bad parameter {p:?} for family {name:?}"))))
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = match s.split_once(':') {
            Some((name, params)) => (name.trim(), Some(params)),
            None => (s.trim(), None),
        };
        let one = |params| -> Result<usize> { Ok(parse_params::<usize>(name, params, 1)?[0]) };
        let two = |params| -> Result<(usize, usize)> {
            let v = parse_params::<usize>(name, params, 2)?;
            Ok((v[0], v[1]))
        };
        let bare = |spec: FamilySpec| -> Result<FamilySpec> {
            match params {
                None => Ok(spec),
                Some(_) => Err(Error::input(format!("family {name:?} takes no parameters"))),
            }
        };
        match name {
            "path" => Ok(FamilySpec::Path(one(params)?)),
            "cycle" => Ok(FamilySpec::Cycle(one(params)?)),
            "clique" => Ok(FamilySpec::Clique(one(params)?)),
            "star" => Ok(FamilySpec::Star(one(params)?)),
            "grid" => two(params).map(|(p, q)| FamilySpec::Grid(p, q)),
            "halfgrid" => Ok(FamilySpec::HalfGrid(one(params)?)),
            "building" => Ok(FamilySpec::Building(one(params)?)),
            "house" => bare(FamilySpec::House),
            "domino" => bare(FamilySpec::Domino),
            "diamond" => bare(FamilySpec::Diamond),
            "hole" => Ok(FamilySpec::Hole(one(params)?)),
            "random" => {
                let raw = params.ok_or_else(|| Error::input("family \"random\" needs n,p"))?;
                let (n, p) = raw
                    .split_once(',')
                    .ok_or_else(|| Error::input("family \"random\" needs n,p"))?;
                let n = n.trim().parse().map_err(|_| Error::input(format!("bad vertex count {n:?}")))?;
                let p: f64 = p.trim().parse().map_err(|_| Error::input(format!("bad probability {p:?}")))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::input(format!("probability {p} outside [0, 1]")));
                }
                Ok(FamilySpec::Random(n, p))
            }
            "chordal" => two(params).map(|(n, k)| FamilySpec::Chordal(n, k)),
            "block" => two(params).map(|(n, c)| FamilySpec::Block(n, c)),
            "interval" => Ok(FamilySpec::Interval(one(params)?)),
            _ => Err(Error::input(format!("unknown graph family {name:?}"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Clique(n) => write!(f, "clique:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Grid(p, q) => write!(f, "grid:{p},{q}"),
            FamilySpec::HalfGrid(k) => write!(f, "halfgrid:{k}"),
            FamilySpec::Building(k) => write!(f, "building:{k}"),
            FamilySpec::House => write!(f, "house"),
            FamilySpec::Domino => write!(f, "domino"),
            FamilySpec::Diamond => write!(f, "diamond"),
            FamilySpec::Hole(n) => write!(f, "hole:{n}"),
            FamilySpec::Random(n, p) => write!(f, "random:{n},{p}"),
            FamilySpec::Chordal(n, k) => write!(f, "chordal:{n},{k}"),
            FamilySpec::Block(n, c) => write!(f, "block:{n},{c}"),
            FamilySpec::Interval(n) => write!(f, "interval:{n}"),
        }
    }
}
