use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Tableau;
use crate::error::{Error, Result};

/// A perfect matching of the points `1..=2l`, stored as a partner table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MatchingJson", into = "MatchingJson")]
pub struct Matching {
    partner: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct MatchingJson {
    arcs: Vec<[u32; 2]>,
}

impl TryFrom<MatchingJson> for Matching {
    type Error = Error;

    fn try_from(j: MatchingJson) -> Result<Self> {
        Matching::new(&j.arcs.iter().map(|a| (a[0], a[1])).collect::<Vec<_>>())
    }
}

impl From<Matching> for MatchingJson {
    fn from(m: Matching) -> Self {
        MatchingJson { arcs: m.arcs().into_iter().map(|(a, b)| [a, b]).collect() }
    }
}

impl Matching {
    /// Arcs may be given in any order and orientation; they must cover `1..=2l` exactly once.
    pub fn new(arcs: &[(u32, u32)]) -> Result<Self> {
        let n = 2 * arcs.len();
        let mut partner = vec![0u32; n];
        for &(a, b) in arcs {
            for v in [a, b] {
                if v == 0 || v as usize > n || partner[v as usize - 1] != 0 {
                    return Err(Error::MalformedTableau(format!("arcs {arcs:?} are not a perfect matching of 1..{n}")));
                }
                partner[v as usize - 1] = u32::MAX;
            }
            if a == b {
                return Err(Error::MalformedTableau(format!("loop arc ({a},{a})")));
            }
            partner[a as usize - 1] = b;
            partner[b as usize - 1] = a;
        }
        Ok(Matching { partner })
    }

    pub(crate) fn from_partner(partner: Vec<u32>) -> Self {
        Matching { partner }
    }

    /// Columns of a two-row tableau as arcs.
    pub fn from_tableau(t: &Tableau) -> Result<Self> {
        if t.columns().iter().any(|c| c.len() != 2) {
            return Err(Error::UnsupportedShape(format!("{t} is not a two-row tableau of shape (l,l)")));
        }
        Matching::new(&t.columns().iter().map(|c| (c[0], c[1])).collect::<Vec<_>>())
    }

    /// The two-row tableau with one column per arc, in canonical order.
    pub fn to_tableau(&self) -> Tableau {
        Tableau::new(self.arcs().into_iter().map(|(a, b)| vec![a, b]).collect()).expect("arcs are increasing pairs").canonical()
    }

    /// Number of points `2l`.
    pub fn points(&self) -> u32 {
        self.partner.len() as u32
    }

    pub fn partner(&self, v: u32) -> u32 {
        self.partner[v as usize - 1]
    }

    /// Arcs `(a, b)` with `a < b`, sorted by left end.
    pub fn arcs(&self) -> Vec<(u32, u32)> {
        (1..=self.points()).filter(|&v| v < self.partner(v)).map(|v| (v, self.partner(v))).collect()
    }

    /// Pairs of arcs `((a, c), (b, d))` with `a < b < c < d`.
    pub fn crossings(&self) -> Vec<((u32, u32), (u32, u32))> {
        let arcs = self.arcs();
        let mut out = Vec::new();
        for (i, &(a, c)) in arcs.iter().enumerate() {
            for &(b, d) in &arcs[i + 1..] {
                if b < c && c < d {
                    out.push(((a, c), (b, d)));
                }
            }
        }
        out
    }

    pub fn is_noncrossing(&self) -> bool {
        self.crossings().is_empty()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs().iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "{{{}}}", arcs.join(","))
    }
}

/// All non-crossing perfect matchings of `1..=2l`, sorted.
pub fn noncrossing_matchings(l: u32) -> Vec<Matching> {
    fn rec(points: &[u32]) -> Vec<Vec<(u32, u32)>> {
        let Some((&first, rest)) = points.split_first() else {
            return vec![Vec::new()];
        };
        let mut out = Vec::new();
        // the partner of the first point splits the rest into an inside and an outside
        for k in (0..rest.len()).step_by(2) {
            for inside in rec(&rest[..k]) {
                for outside in rec(&rest[k + 1..]) {
                    let mut arcs = vec![(first, rest[k])];
                    arcs.extend(inside.iter().copied());
                    arcs.extend(outside);
                    out.push(arcs);
                }
            }
        }
        out
    }
    let points: Vec<u32> = (1..=2 * l).collect();
    let mut out: Vec<Matching> = rec(&points).iter().map(|a| Matching::new(a).expect("perfect matching")).collect();
    out.sort();
    out
}

/// Number of non-crossing perfect matchings on `2l` points, by enumeration.
pub fn catalan_dimension(l: u32) -> u64 {
    noncrossing_matchings(l).len() as u64
}

/// `binom(2l, l) / (l + 1)`.
pub fn catalan(l: u32) -> u64 {
    let mut c: u64 = 1;
    for k in 0..l as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}
