use super::ar::Indecomposables;
use super::module::{cokernel, Module};
use super::presentation::{injective_envelope, is_projective, projective_dimension};
use super::standard::{projective, simple};
use crate::algebra::Algebra;
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

/// A homological dimension computed up to a cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Bounded {
    Exactly(usize),
    AtLeast(usize),
}

impl Bounded {
    pub fn from_option(v: Option<usize>, cutoff: usize) -> Bounded {
        v.map_or(Bounded::AtLeast(cutoff), Bounded::Exactly)
    }

    /// True when the value is certainly `>= n`.
    pub fn at_least(self, n: usize) -> bool {
        match self {
            Bounded::Exactly(v) => v >= n,
            Bounded::AtLeast(v) => v >= n,
        }
    }

    /// True when the value is certainly `<= n`.
    pub fn at_most(self, n: usize) -> bool {
        matches!(self, Bounded::Exactly(v) if v <= n)
    }
}

impl fmt::Display for Bounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounded::Exactly(v) => write!(f, "{v}"),
            Bounded::AtLeast(v) => write!(f, "≥ {v}"),
        }
    }
}

pub fn global_dimension(alg: &Arc<Algebra>, cutoff: usize) -> Bounded {
    let mut g = 0;
    for v in 0..alg.num_vertices() {
        match projective_dimension(&simple(alg, v), cutoff) {
            Some(d) => g = g.max(d),
            None => return Bounded::AtLeast(cutoff),
        }
    }
    Bounded::Exactly(g)
}

/// Number of leading projective terms in a minimal injective coresolution of `m`.
pub fn projective_injective_coresolution_length(m: &Module, cutoff: usize) -> Bounded {
    let mut cur = m.clone();
    for k in 0..cutoff {
        if cur.is_zero() {
            return Bounded::AtLeast(cutoff);
        }
        let (i, incl) = injective_envelope(&cur).expect("envelope");
        if !is_projective(&i) {
            return Bounded::Exactly(k);
        }
        cur = cokernel(&incl).module;
    }
    Bounded::AtLeast(cutoff)
}

pub fn dominant_dimension(alg: &Arc<Algebra>, cutoff: usize) -> Bounded {
    let mut best = Bounded::AtLeast(cutoff);
    for v in 0..alg.num_vertices() {
        let d = projective_injective_coresolution_length(&projective(alg, v), cutoff);
        if let Bounded::Exactly(x) = d {
            best = match best {
                Bounded::Exactly(y) => Bounded::Exactly(x.min(y)),
                Bounded::AtLeast(_) => Bounded::Exactly(x),
            };
        }
    }
    best
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologicalDims {
    pub proj_dims: Vec<Bounded>,
    pub global_dimension: Bounded,
    pub dominant_dimension: Bounded,
}

pub fn homological_dims(ind: &Indecomposables, cutoff: usize) -> HomologicalDims {
    HomologicalDims {
        proj_dims: ind.modules.iter().map(|m| Bounded::from_option(projective_dimension(m, cutoff), cutoff)).collect(),
        global_dimension: global_dimension(&ind.alg, cutoff),
        dominant_dimension: dominant_dimension(&ind.alg, cutoff),
    }
}
