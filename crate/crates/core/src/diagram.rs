//! Oriented planar diagrams in PD form for pretzel knots and `T(2, 2k)`.
//!
//! A crossing `X(a,b,c,d)` lists its four arcs counterclockwise, starting
//! from the incoming under-strand. The under-strand runs `a → c`. The
//! over-strand runs `d → b` at a positive crossing and `b → d` at a negative
//! one. Every arc occurs in exactly two crossing slots, once incoming and
//! once outgoing.
//!
//! Handedness conventions are frozen by two constants below. They are the
//! choices under which the diagram pipeline reproduces the Hopf value
//! `-t^(-5/2) - t^(-1/2)` and the pretzel value at `P(-3,3,7)`; the
//! `calibration` tests pin both.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::alexander::{PretzelSpec, SpecError};
use crate::laurent::Sign;
use crate::union_find::UnionFind;

pub type ArcId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("arc {arc} occurs {incoming} time(s) incoming and {outgoing} time(s) outgoing")]
    ArcDegree { arc: ArcId, incoming: usize, outgoing: usize },
    #[error("diagram has no crossings and no loops")]
    Empty,
    #[error("arc {0} does not occur in the diagram")]
    UnknownArc(ArcId),
}

/// One crossing in PD form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PdCrossing {
    pub arcs: [ArcId; 4],
    pub sign: Sign,
}

impl PdCrossing {
    /// Slot indices of the incoming arcs: under first, then over.
    pub fn incoming_slots(&self) -> [usize; 2] {
        match self.sign {
            Sign::Plus => [0, 3],
            Sign::Minus => [0, 1],
        }
    }

    /// Slot indices of the outgoing arcs: under first, then over.
    pub fn outgoing_slots(&self) -> [usize; 2] {
        match self.sign {
            Sign::Plus => [2, 1],
            Sign::Minus => [2, 3],
        }
    }
}

impl fmt::Display for PdCrossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.arcs;
        write!(f, "X({a},{b},{c},{d}){}", self.sign)
    }
}

/// `T(2, 2k)`: the closure of a two-strand braid with `2k` crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusSpec {
    half_twists: i64,
}

impl TorusSpec {
    pub fn new(half_twists: i64) -> Result<Self, SpecError> {
        if half_twists < 2 || half_twists % 2 != 0 {
            return Err(SpecError::TorusTwists(half_twists));
        }
        Ok(TorusSpec { half_twists })
    }

    pub fn from_k(k: i64) -> Result<Self, SpecError> {
        Self::new(2 * k)
    }

    pub fn half_twists(&self) -> i64 {
        self.half_twists
    }

    pub fn k(&self) -> i64 {
        self.half_twists / 2
    }
}

impl fmt::Display for TorusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T(2,{})", self.half_twists)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorusOrientation {
    /// Both strands of the twist region run the same way.
    Parallel,
    /// The strands run in opposite directions; this is the orientation for
    /// which smoothing one crossing of `T(2, 2k)` yields the unknot.
    Antiparallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramSource {
    Pretzel(PretzelSpec),
    Torus(TorusSpec),
    Unknot,
    Pd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedDiagram {
    crossings: Vec<PdCrossing>,
    /// Closed loops that pass through no crossing.
    free_loops: usize,
    source: DiagramSource,
}

impl OrientedDiagram {
    /// The crossingless unknot.
    pub fn unknot() -> Self {
        OrientedDiagram { crossings: Vec::new(), free_loops: 1, source: DiagramSource::Unknot }
    }

    /// Validates the arc-degree invariant.
    pub fn from_pd(crossings: Vec<PdCrossing>, free_loops: usize) -> Result<Self, DiagramError> {
        let d = OrientedDiagram { crossings, free_loops, source: DiagramSource::Pd };
        d.check_arc_degrees()?;
        if d.crossings.is_empty() && d.free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        Ok(d)
    }

    pub fn crossings(&self) -> &[PdCrossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn source(&self) -> DiagramSource {
        self.source
    }

    /// Sorted, deduplicated arc labels.
    pub fn arcs(&self) -> Vec<ArcId> {
        let mut arcs: Vec<ArcId> = self.crossings.iter().flat_map(|c| c.arcs).collect();
        arcs.sort_unstable();
        arcs.dedup();
        arcs
    }

    pub fn check_arc_degrees(&self) -> Result<(), DiagramError> {
        let mut degree: BTreeMap<ArcId, (usize, usize)> = BTreeMap::new();
        for c in &self.crossings {
            for slot in c.incoming_slots() {
                degree.entry(c.arcs[slot]).or_default().0 += 1;
            }
            for slot in c.outgoing_slots() {
                degree.entry(c.arcs[slot]).or_default().1 += 1;
            }
        }
        match degree.into_iter().find(|&(_, d)| d != (1, 1)) {
            Some((arc, (incoming, outgoing))) => Err(DiagramError::ArcDegree { arc, incoming, outgoing }),
            None => Ok(()),
        }
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub fn component_count(&self) -> usize {
        let arcs = self.arcs();
        let index = |a: ArcId| arcs.binary_search(&a).expect("arc listed") as u32;
        let mut uf = UnionFind::new(arcs.len());
        for c in &self.crossings {
            let [a, b, cc, d] = c.arcs;
            uf.union(index(a), index(cc));
            uf.union(index(b), index(d));
        }
        uf.components() + self.free_loops
    }

    /// Applies an arc relabelling; the map must be injective.
    pub fn relabel(&self, map: impl Fn(ArcId) -> ArcId) -> Self {
        let crossings = self.crossings.iter().map(|c| PdCrossing { arcs: c.arcs.map(&map), sign: c.sign }).collect();
        OrientedDiagram { crossings, free_loops: self.free_loops, source: self.source }
    }

    /// The same diagram with its crossings listed in a different order.
    pub fn permute_crossings(&self, order: &[usize]) -> Self {
        let crossings = order.iter().map(|&i| self.crossings[i]).collect();
        OrientedDiagram { crossings, free_loops: self.free_loops, source: self.source }
    }

    /// Adds a curl of the given sign on the lowest-labelled arc, or on a
    /// free loop when the diagram has no crossings.
    pub fn add_kink(&self, sign: Sign) -> Self {
        match self.arcs().first() {
            Some(&arc) => self.add_kink_on(arc, sign).expect("arc exists"),
            None => self.kink_free_loop(sign),
        }
    }

    /// Adds a Reidemeister-I curl of the given sign on `arc`.
    pub fn add_kink_on(&self, arc: ArcId, sign: Sign) -> Result<Self, DiagramError> {
        let mut crossings = self.crossings.clone();
        let head = crossings
            .iter()
            .enumerate()
            .find_map(|(i, c)| c.incoming_slots().into_iter().find(|&s| c.arcs[s] == arc).map(|s| (i, s)))
            .ok_or(DiagramError::UnknownArc(arc))?;
        let next = self.arcs().last().copied().unwrap_or(0) + 1;
        let (curl, tail) = (next, next + 1);
        crossings[head.0].arcs[head.1] = tail;
        crossings.push(Self::curl(arc, curl, tail, sign));
        Ok(OrientedDiagram { crossings, free_loops: self.free_loops, source: self.source })
    }

    fn kink_free_loop(&self, sign: Sign) -> Self {
        assert!(self.free_loops > 0, "diagram is empty");
        let (arc, curl) = (1, 2);
        OrientedDiagram {
            crossings: vec![Self::curl(arc, curl, arc, sign)],
            free_loops: self.free_loops - 1,
            source: self.source,
        }
    }

    /// The strand arrives on `arc`, crosses itself via the loop `curl`, and
    /// leaves on `tail`; `curl` joins two adjacent slots.
    fn curl(arc: ArcId, curl: ArcId, tail: ArcId, sign: Sign) -> PdCrossing {
        match sign {
            // second pass under: enters on curl, leaves on tail; over runs arc → curl (d → b)
            Sign::Plus => PdCrossing { arcs: [curl, curl, tail, arc], sign },
            // first pass under: enters on arc, leaves on curl; over runs curl → tail (b → d)
            Sign::Minus => PdCrossing { arcs: [arc, curl, curl, tail], sign },
        }
    }

    /// One `X(a,b,c,d)±` line per crossing.
    pub fn to_pd_string(&self) -> String {
        self.crossings.iter().map(|c| format!("{c}\n")).collect()
    }
}

// Geometric construction. Crossing ports are numbered counterclockwise:
// SW, SE, NE, NW. The over-strand is either SW–NE or SE–NW.
const SW: usize = 0;
const SE: usize = 1;
const NE: usize = 2;
const NW: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OverStrand {
    Slash,
    Backslash,
}

impl OverStrand {
    fn flip(self) -> Self {
        match self {
            OverStrand::Slash => OverStrand::Backslash,
            OverStrand::Backslash => OverStrand::Slash,
        }
    }

    fn under_ports(self) -> [usize; 2] {
        match self {
            OverStrand::Slash => [SE, NW],
            OverStrand::Backslash => [SW, NE],
        }
    }
}

/// Over-strand used for the crossings of a tassel with a positive entry.
const POSITIVE_TASSEL: OverStrand = OverStrand::Slash;

/// Over-strand used for the crossings of the `T(2, 2k)` twist region.
const TORUS_TWIST: OverStrand = OverStrand::Slash;

type Port = (usize, usize);

#[derive(Debug, Default)]
struct PortGraph {
    over: Vec<OverStrand>,
    link: Vec<[Option<Port>; 4]>,
}

impl PortGraph {
    fn connect(&mut self, a: Port, b: Port) {
        debug_assert!(self.link[a.0][a.1].is_none() && self.link[b.0][b.1].is_none());
        self.link[a.0][a.1] = Some(b);
        self.link[b.0][b.1] = Some(a);
    }

    /// A vertical stack of `n ≥ 1` crossings. Returns the bottom ports
    /// `(left, right)` and top ports `(left, right)`.
    fn twist_region(&mut self, n: usize, over: OverStrand) -> ([Port; 2], [Port; 2]) {
        assert!(n > 0);
        let first = self.over.len();
        for _ in 0..n {
            self.over.push(over);
            self.link.push([None; 4]);
        }
        for c in first..first + n - 1 {
            self.connect((c, NW), (c + 1, SW));
            self.connect((c, NE), (c + 1, SE));
        }
        let last = first + n - 1;
        ([(first, SW), (first, SE)], [(last, NW), (last, NE)])
    }

    /// Walks every component, starting with the given seeds (a port at which
    /// the strand enters its crossing), labels arcs in traversal order from 1,
    /// and emits PD crossings.
    fn into_pd(self, seeds: &[Port]) -> Vec<PdCrossing> {
        let n = self.over.len();
        let mut label = vec![[0usize; 4]; n];
        let mut incoming = vec![[false; 4]; n];
        let mut visited = vec![[false; 4]; n];
        let mut next_label = 1;
        let defaults = (0..n).flat_map(|c| (0..4).map(move |p| (c, p)));
        for start in seeds.iter().copied().chain(defaults) {
            if visited[start.0][start.1] {
                continue;
            }
            let mut at = start;
            loop {
                let (c, enter) = at;
                let exit = (enter + 2) % 4;
                visited[c][enter] = true;
                visited[c][exit] = true;
                incoming[c][enter] = true;
                let to = self.link[c][exit].expect("port connected");
                label[c][exit] = next_label;
                label[to.0][to.1] = next_label;
                next_label += 1;
                at = to;
                if at == start {
                    break;
                }
            }
        }
        (0..n)
            .map(|c| {
                let [u1, u2] = self.over[c].under_ports();
                let u_in = if incoming[c][u1] { u1 } else { u2 };
                let arcs = [0, 1, 2, 3].map(|k| label[c][(u_in + k) % 4]);
                let sign = if incoming[c][(u_in + 3) % 4] { Sign::Plus } else { Sign::Minus };
                PdCrossing { arcs, sign }
            })
            .collect()
    }
}

/// Three vertical tassels side by side, joined pairwise along the top and
/// bottom with the outer strands closing around the back.
pub fn pretzel_diagram(spec: &PretzelSpec) -> OrientedDiagram {
    let mut g = PortGraph::default();
    let regions: Vec<([Port; 2], [Port; 2])> = spec
        .tassels()
        .iter()
        .map(|&n| {
            let over = if n > 0 { POSITIVE_TASSEL } else { POSITIVE_TASSEL.flip() };
            g.twist_region(n.unsigned_abs() as usize, over)
        })
        .collect();
    for j in 0..3 {
        let (bottom, top) = regions[j];
        let (next_bottom, next_top) = regions[(j + 1) % 3];
        g.connect(top[1], next_top[0]);
        g.connect(bottom[1], next_bottom[0]);
    }
    let start = regions[0].0[0];
    OrientedDiagram { crossings: g.into_pd(&[start]), free_loops: 0, source: DiagramSource::Pretzel(*spec) }
}

/// `T(2, 2k)` with the calibrated antiparallel orientation.
pub fn torus2_diagram(spec: &TorusSpec) -> OrientedDiagram {
    torus2_diagram_oriented(spec, TorusOrientation::Antiparallel)
}

pub fn torus2_diagram_oriented(spec: &TorusSpec, orientation: TorusOrientation) -> OrientedDiagram {
    let mut g = PortGraph::default();
    let (bottom, top) = g.twist_region(spec.half_twists as usize, TORUS_TWIST);
    g.connect(top[0], bottom[0]);
    g.connect(top[1], bottom[1]);
    // The strand entering the bottom crossing at SW goes up; the other
    // component enters at SE (up) or NW (down).
    let first = bottom[0];
    let second = match orientation {
        TorusOrientation::Parallel => bottom[1],
        TorusOrientation::Antiparallel => (first.0, NW),
    };
    OrientedDiagram { crossings: g.into_pd(&[first, second]), free_loops: 0, source: DiagramSource::Torus(*spec) }
}
