use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize};

use super::matching::Matching;
use crate::error::{Error, Result};
use crate::exactmath::{LinComb, Ring};
use crate::json::rational_string;
use crate::Rational;

/// A Kauffman diagram on `l` strands: a non-crossing matching of `2l` points, with top
/// point `i` numbered `i` and bottom point `j` numbered `2l + 1 - j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Matching", into = "Matching")]
pub struct TLDiagram {
    matching: Matching,
}

impl TryFrom<Matching> for TLDiagram {
    type Error = Error;

    fn try_from(m: Matching) -> Result<Self> {
        TLDiagram::new(m)
    }
}

impl From<TLDiagram> for Matching {
    fn from(d: TLDiagram) -> Self {
        d.matching
    }
}

pub type TLElement<R> = LinComb<TLDiagram, R>;

impl TLDiagram {
    pub fn new(matching: Matching) -> Result<Self> {
        if !matching.is_noncrossing() {
            return Err(Error::MalformedTableau(format!("{matching} is not planar")));
        }
        Ok(TLDiagram { matching })
    }

    pub fn identity(l: u32) -> Self {
        let arcs: Vec<(u32, u32)> = (1..=l).map(|i| (i, 2 * l + 1 - i)).collect();
        TLDiagram { matching: Matching::new(&arcs).expect("nested arcs") }
    }

    /// The generator `t_i`: a cap on top strands `i, i+1` and a cup below them.
    pub fn generator(i: u32, l: u32) -> Result<Self> {
        if i == 0 || i >= l {
            return Err(Error::OutOfRange(format!("t_{i} in TL_{l}")));
        }
        let mut arcs = vec![(i, i + 1), (2 * l - i, 2 * l + 1 - i)];
        arcs.extend((1..=l).filter(|&k| k != i && k != i + 1).map(|k| (k, 2 * l + 1 - k)));
        Ok(TLDiagram { matching: Matching::new(&arcs)? })
    }

    pub fn strands(&self) -> u32 {
        self.matching.points() / 2
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    /// `self` stacked on top of `other`; returns the diagram and the number of closed loops.
    pub fn compose(&self, other: &TLDiagram) -> Result<(TLDiagram, u32)> {
        let l = self.strands();
        if other.strands() != l {
            return Err(Error::DimensionMismatch(format!("TL_{l} times TL_{}", other.strands())));
        }
        let n = 2 * l;
        let mut partner = vec![0u32; n as usize];
        let mut seen_middle = vec![false; l as usize + 1];
        // walk from each outer point of the result: tops live in `self`, bottoms in `other`
        for start in 1..=n {
            if partner[start as usize - 1] != 0 {
                continue;
            }
            let (mut upper, mut p) = (start <= l, start);
            let end = loop {
                if upper {
                    let q = self.matching.partner(p);
                    if q <= l {
                        break q;
                    }
                    let j = n + 1 - q;
                    seen_middle[j as usize] = true;
                    upper = false;
                    p = j;
                } else {
                    let q = other.matching.partner(p);
                    if q > l {
                        break q;
                    }
                    seen_middle[q as usize] = true;
                    upper = true;
                    p = n + 1 - q;
                }
            };
            partner[start as usize - 1] = end;
            partner[end as usize - 1] = start;
        }
        let mut loops = 0;
        for j in 1..=l {
            if seen_middle[j as usize] {
                continue;
            }
            loops += 1;
            let mut p = j;
            loop {
                seen_middle[p as usize] = true;
                let q = other.matching.partner(p);
                let next = n + 1 - self.matching.partner(n + 1 - q);
                seen_middle[q as usize] = true;
                if next == j {
                    break;
                }
                p = next;
            }
        }
        Ok((TLDiagram { matching: Matching::from_partner(partner) }, loops))
    }
}

impl fmt::Display for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matching.fmt(f)
    }
}

/// Product of two diagrams in `TL_l(xi)`.
pub fn tl_multiply<R: Ring>(a: &TLDiagram, b: &TLDiagram, xi: &R) -> Result<TLElement<R>> {
    let (d, loops) = a.compose(b)?;
    let mut c = R::one();
    for _ in 0..loops {
        c = c * xi.clone();
    }
    Ok(LinComb::single(d, c))
}

/// Bilinear extension of [`tl_multiply`].
pub fn tl_product<R: Ring>(a: &TLElement<R>, b: &TLElement<R>, xi: &R) -> Result<TLElement<R>> {
    let mut out = LinComb::zero();
    for (da, ca) in a {
        for (db, cb) in b {
            for (d, c) in tl_multiply(da, db, xi)? {
                out.add_term(d, ca.clone() * cb.clone() * c);
            }
        }
    }
    Ok(out)
}

/// JSON wrapper: a list of `{"coeff","arcs"}`.
pub struct TLElementJson<'a>(pub &'a TLElement<Rational>);

impl Serialize for TLElementJson<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (d, c) in self.0 {
            let arcs: Vec<[u32; 2]> = d.matching().arcs().into_iter().map(|(a, b)| [a, b]).collect();
            seq.serialize_element(&serde_json::json!({"coeff": rational_string(c), "arcs": arcs}))?;
        }
        seq.end()
    }
}
