//! Weighted resolution dual graphs of surface singularities.
//!
//! Vertices are exceptional curves (all rational: genus markings are
//! rejected at parse time), a vertex of weight `w` has self-intersection
//! `-w`, and edges are transverse intersections. The intersection matrix
//! drives everything: negative definiteness by sign-alternating leading
//! principal minors (integer Bareiss elimination), discrepancies as the
//! exact solution of the adjunction system
//! `sum_i a_i (E_i . E_j) = -2 - E_j^2`, DuVal recognition by shape, and
//! branch determinants for the standard coefficients of the different on a
//! central curve.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::curve::CurvePair;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexSpec {
    id: String,
    weight: u64,
}

/// On-disk graph format: `{"vertices": [{"id", "weight"}], "edges":
/// [[a, b]], "center": optional}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    vertices: Vec<VertexSpec>,
    edges: Vec<[String; 2]>,
    #[serde(default)]
    center: Option<String>,
}

impl GraphFile {
    pub fn into_parts(self) -> Result<(DualGraph, Option<String>)> {
        let graph = DualGraph::new(
            self.vertices.into_iter().map(|v| (v.id, v.weight)),
            self.edges.iter().map(|[a, b]| (a.clone(), b.clone())),
        )?;
        if let Some(center) = &self.center {
            if !graph.contains(center) {
                return Err(Error::UnknownVertex(center.clone()));
            }
        }
        Ok((graph, self.center))
    }
}

/// A connected simple weighted graph of rational curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    ids: Vec<String>,
    weights: Vec<u64>,
    adj: Vec<Vec<usize>>,
}

/// Exact discrepancies `a(E_i)`, keyed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyVector(pub BTreeMap<String, Rational>);

/// The ADE type of a DuVal dual graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DuValType {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

/// Result of the full DuVal analysis: shape, branch collection at the
/// canonical center, exceptionality, and the minimal index of a non-klt
/// complement of the singularity (the minimal complement index of the
/// branch collection on the central curve).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DuValClassification {
    #[serde(rename = "type")]
    pub duval_type: DuValType,
    pub center: String,
    pub collection: Vec<u64>,
    pub exceptional: bool,
    #[serde(rename = "compl")]
    pub compll: u64,
}

impl std::fmt::Display for DuValType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DuValType::A(n) => write!(f, "A{n}"),
            DuValType::D(n) => write!(f, "D{n}"),
            DuValType::E6 => write!(f, "E6"),
            DuValType::E7 => write!(f, "E7"),
            DuValType::E8 => write!(f, "E8"),
        }
    }
}

impl Serialize for DuValType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl DualGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = (String, u64)>,
        edges: impl IntoIterator<Item = (String, String)>,
    ) -> Result<Self> {
        let mut ids = Vec::new();
        let mut weights = Vec::new();
        let mut index = BTreeMap::new();
        for (id, weight) in vertices {
            if weight == 0 {
                return Err(Error::InvalidGraph(format!(
                    "vertex {id:?} has weight 0; weights are positive (self-intersection -w)"
                )));
            }
            if index.insert(id.clone(), ids.len()).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {id:?}")));
            }
            ids.push(id);
            weights.push(weight);
        }
        if ids.is_empty() {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut adj = vec![Vec::new(); ids.len()];
        let mut seen = std::collections::BTreeSet::new();
        for (a, b) in edges {
            let &i = index.get(&a).ok_or_else(|| Error::UnknownVertex(a.clone()))?;
            let &j = index.get(&b).ok_or_else(|| Error::UnknownVertex(b.clone()))?;
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at {a:?}")));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {a:?} -- {b:?}")));
            }
            adj[i].push(j);
            adj[j].push(i);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        let graph = DualGraph { ids, weights, adj };
        if !graph.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        Ok(graph)
    }

    pub fn from_json(text: &str) -> Result<(Self, Option<String>)> {
        let file: GraphFile = serde_json::from_str(text)
            .map_err(|e| Error::InvalidGraph(e.to_string()))?;
        file.into_parts()
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn contains(&self, id: &str) -> bool {
        self.ids.iter().any(|v| v == id)
    }

    pub fn weight(&self, id: &str) -> Option<u64> {
        self.position(id).map(|i| self.weights[i])
    }

    fn position(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|v| v == id)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &self.adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `M[i][i] = -w_i`, `M[i][j] = 1` iff `i -- j`.
    pub fn intersection_matrix(&self) -> Vec<Vec<BigInt>> {
        let n = self.len();
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            m[i][i] = -BigInt::from(self.weights[i]);
            for &j in &self.adj[i] {
                m[i][j] = BigInt::from(1);
            }
        }
        m
    }

    /// Sign-alternation of the leading principal minors: `(-1)^k m_k > 0`.
    pub fn is_negative_definite(&self) -> bool {
        match bareiss_leading_minors(self.intersection_matrix()) {
            None => false,
            Some(minors) => minors.iter().enumerate().all(|(k, m)| {
                if k % 2 == 0 {
                    m.is_negative()
                } else {
                    m.is_positive()
                }
            }),
        }
    }

    /// Exact discrepancies from the adjunction system for rational curves:
    /// `sum_i a_i (E_i . E_j) = -2 + w_j` for every `j`. Unique once the
    /// matrix is negative definite.
    pub fn discrepancies(&self) -> Result<DiscrepancyVector> {
        if !self.is_negative_definite() {
            return Err(Error::NotNegativeDefinite);
        }
        let n = self.len();
        let m = self.intersection_matrix();
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational::from_integer(m[i][j].clone()))
                    .collect()
            })
            .collect();
        let mut rhs: Vec<Rational> = (0..n)
            .map(|j| Rational::from_integer(BigInt::from(self.weights[j]) - 2))
            .collect();
        // Gaussian elimination with exact rationals
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("nonsingular by negative definiteness");
            a.swap(col, pivot_row);
            rhs.swap(col, pivot_row);
            let pivot = a[col][col].clone();
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &pivot;
                for c in col..n {
                    a[r][c] = &a[r][c] - &(&factor * &a[col][c]);
                }
                rhs[r] = &rhs[r] - &(&factor * &rhs[col]);
            }
        }
        let mut values = BTreeMap::new();
        for i in 0..n {
            values.insert(self.ids[i].clone(), &rhs[i] / &a[i][i]);
        }
        Ok(DiscrepancyVector(values))
    }

    /// Connected components left after deleting `id`.
    pub fn remove_vertex(&self, id: &str) -> Result<Vec<DualGraph>> {
        let removed = self
            .position(id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))?;
        let n = self.len();
        let mut seen = vec![false; n];
        seen[removed] = true;
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(i) = stack.pop() {
                comp.push(i);
                for &j in &self.adj[i] {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            let vertices: Vec<(String, u64)> = comp
                .iter()
                .map(|&i| (self.ids[i].clone(), self.weights[i]))
                .collect();
            let mut edges = Vec::new();
            for &i in &comp {
                for &j in &self.adj[i] {
                    if j > i && comp.contains(&j) {
                        edges.push((self.ids[i].clone(), self.ids[j].clone()));
                    }
                }
            }
            components.push(DualGraph::new(vertices, edges).expect("component is valid"));
        }
        Ok(components)
    }

    /// Branch collection `(m_1, ..., m_r)` at `center`: the determinants of
    /// `-M` over the branches, sorted ascending. These are the standard
    /// multiplicities of the different on the central curve.
    pub fn central_branch_collection(&self, center: &str) -> Result<Vec<u64>> {
        let mut collection = Vec::new();
        for branch in self.remove_vertex(center)? {
            if !branch.is_negative_definite() {
                return Err(Error::BranchNotNegativeDefinite(
                    branch.ids[0].clone(),
                ));
            }
            let minors = bareiss_leading_minors(branch.intersection_matrix())
                .expect("negative definite matrices have nonzero leading minors");
            let det = minors.last().expect("branch is nonempty");
            // det(-M) = (-1)^k det(M) > 0 for a negative definite M
            let det_neg = if branch.len() % 2 == 0 {
                det.clone()
            } else {
                -det.clone()
            };
            collection.push(u64::try_from(&det_neg).expect("branch determinant is positive"));
        }
        collection.sort_unstable();
        Ok(collection)
    }

    /// ADE recognition. Requires all discrepancies zero; the shape is then
    /// forced to be a chain or a three-legged star by negative definiteness.
    pub fn duval_type(&self) -> Result<DuValType> {
        let disc = self.discrepancies()?;
        if let Some((vertex, value)) = disc.0.iter().find(|(_, a)| !a.is_zero()) {
            return Err(Error::NotDuVal {
                vertex: vertex.clone(),
                value: value.clone(),
            });
        }
        Ok(self.ade_shape())
    }

    fn ade_shape(&self) -> DuValType {
        let n = self.len();
        let forks: Vec<usize> = (0..n).filter(|&i| self.adj[i].len() >= 3).collect();
        match forks.as_slice() {
            [] => DuValType::A(n as u32),
            [fork] => {
                assert!(
                    self.adj[*fork].len() == 3,
                    "negative definite all-(-2) graphs have no vertex of degree > 3"
                );
                let mut legs: Vec<usize> = self.adj[*fork]
                    .iter()
                    .map(|&nb| self.leg_length(*fork, nb))
                    .collect();
                legs.sort_unstable();
                match legs.as_slice() {
                    [1, 1, k] => DuValType::D(*k as u32 + 3),
                    [1, 2, 2] => DuValType::E6,
                    [1, 2, 3] => DuValType::E7,
                    [1, 2, 4] => DuValType::E8,
                    other => unreachable!(
                        "leg profile {other:?} is impossible for a negative definite \
                         all-(-2) star"
                    ),
                }
            }
            _ => unreachable!(
                "negative definite all-(-2) graphs have at most one fork"
            ),
        }
    }

    fn leg_length(&self, fork: usize, first: usize) -> usize {
        let mut prev = fork;
        let mut cur = first;
        let mut len = 1;
        loop {
            let next: Vec<usize> = self.adj[cur].iter().copied().filter(|&v| v != prev).collect();
            match next.as_slice() {
                [] => return len,
                [v] => {
                    prev = cur;
                    cur = *v;
                    len += 1;
                }
                _ => panic!("leg branches again; not a star"),
            }
        }
    }

    /// The canonical center for the DuVal correspondence: the fork of a
    /// D/E graph; for chains, the interior vertex adjacent to an end
    /// (smallest id in shortlex order), falling back to the smallest id
    /// when the chain has no interior.
    pub fn canonical_center(&self) -> String {
        if let Some(i) = (0..self.len()).find(|&i| self.adj[i].len() >= 3) {
            return self.ids[i].clone();
        }
        let shortlex = |a: &String, b: &String| a.len().cmp(&b.len()).then_with(|| a.cmp(b));
        let mut candidates: Vec<&String> = (0..self.len())
            .filter(|&i| {
                self.adj[i].len() == 2 && self.adj[i].iter().any(|&nb| self.adj[nb].len() == 1)
            })
            .map(|i| &self.ids[i])
            .collect();
        if candidates.is_empty() {
            candidates = self.ids.iter().collect();
        }
        candidates.sort_by(|a, b| shortlex(a, b));
        candidates[0].clone()
    }

    /// DuVal classification: exceptional iff the shape is E6, E7 or E8,
    /// which must agree with global exceptionality of the branch collection
    /// on the central curve. The reported index is the minimal complement
    /// index of that collection.
    pub fn classify_exceptional_duval(&self) -> Result<DuValClassification> {
        let duval_type = self.duval_type()?;
        let center = self.canonical_center();
        let collection = self.central_branch_collection(&center)?;
        let curve = CurvePair::from_collection(&collection)?;
        let exceptional = matches!(duval_type, DuValType::E6 | DuValType::E7 | DuValType::E8);
        assert_eq!(
            exceptional,
            curve.is_exceptional(),
            "shape route and branch-collection route disagree for {duval_type} at {center}"
        );
        let compll = curve.compl(crate::curve::STANDARD_SEARCH_BOUND)?.n;
        Ok(DuValClassification {
            duval_type,
            center,
            collection,
            exceptional,
            compll,
        })
    }
}

impl DiscrepancyVector {
    pub fn get(&self, id: &str) -> Option<&Rational> {
        self.0.get(id)
    }

    pub fn all_zero(&self) -> bool {
        self.0.values().all(|a| a.is_zero())
    }

    /// klt: all discrepancies `> -1`.
    pub fn is_klt(&self) -> bool {
        self.0.values().all(|a| a > &Rational::ratio(-1, 1))
    }

    /// lc: all discrepancies `>= -1`.
    pub fn is_lc(&self) -> bool {
        self.0.values().all(|a| a >= &Rational::ratio(-1, 1))
    }
}

/// Leading principal minors by fraction-free Bareiss elimination. `None`
/// when a zero pivot appears before the last step (some proper leading
/// minor vanishes, which already rules out definiteness).
fn bareiss_leading_minors(mut m: Vec<Vec<BigInt>>) -> Option<Vec<BigInt>> {
    let n = m.len();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        minors.push(m[k][k].clone());
        if k + 1 == n {
            break;
        }
        if m[k][k].is_zero() {
            return None;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    Some(minors)
}

/// Builders for the standard ADE graphs (all weights 2) and the central
/// fiber of the two-point log terminal fibration example.
pub mod builders {
    use super::DualGraph;

    fn chain_ids(n: u32) -> Vec<String> {
        (1..=n).map(|i| format!("v{i}")).collect()
    }

    /// Chain of `n >= 1` (-2)-curves.
    pub fn a_n(n: u32) -> DualGraph {
        assert!(n >= 1);
        let ids = chain_ids(n);
        let edges: Vec<(String, String)> = ids
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        DualGraph::new(ids.into_iter().map(|id| (id, 2)), edges).expect("valid chain")
    }

    /// Star with legs (1, 1, n-3) of (-2)-curves, `n >= 4`. The fork is
    /// `v2`, with ends `v1` and `v3`, and the long leg `v4..vn`.
    pub fn d_n(n: u32) -> DualGraph {
        assert!(n >= 4);
        let ids = chain_ids(n);
        let mut edges = vec![
            ("v1".to_string(), "v2".to_string()),
            ("v2".to_string(), "v3".to_string()),
            ("v2".to_string(), "v4".to_string()),
        ];
        for i in 4..n {
            edges.push((format!("v{i}"), format!("v{}", i + 1)));
        }
        DualGraph::new(ids.into_iter().map(|id| (id, 2)), edges).expect("valid star")
    }

    fn e_star(legs: [u32; 3]) -> DualGraph {
        let n = 1 + legs.iter().sum::<u32>();
        let ids = chain_ids(n);
        let mut edges = Vec::new();
        let mut next = 2;
        for &leg in &legs {
            let mut prev = 1; // fork is v1
            for _ in 0..leg {
                edges.push((format!("v{prev}"), format!("v{next}")));
                prev = next;
                next += 1;
            }
        }
        DualGraph::new(ids.into_iter().map(|id| (id, 2)), edges).expect("valid star")
    }

    pub fn e6() -> DualGraph {
        e_star([1, 2, 2])
    }

    pub fn e7() -> DualGraph {
        e_star([1, 2, 3])
    }

    pub fn e8() -> DualGraph {
        e_star([1, 2, 4])
    }

    /// Central fiber of the fibration obtained by blowing up a fiber of
    /// `P^1 x C`: a (-1)-curve `m` between a chain through the weight-`b`
    /// curve (with a (-3)-curve on top) and a tail starting with a
    /// (-3)-curve followed by `b - 3` (-2)-curves. Requires `b >= 2`. The
    /// full graph supports the fiber class, so its intersection matrix is
    /// only negative semidefinite; the components left after removing `m`
    /// are negative definite.
    pub fn fibration_fiber(b: u64) -> DualGraph {
        assert!(b >= 2);
        let mut vertices: Vec<(String, u64)> = vec![
            ("l1".into(), 2),
            ("l2".into(), 2),
            ("c".into(), b),
            ("t".into(), 3),
            ("r".into(), 2),
            ("m".into(), 1),
        ];
        let mut edges: Vec<(String, String)> = vec![
            ("l1".into(), "l2".into()),
            ("l2".into(), "c".into()),
            ("c".into(), "t".into()),
            ("c".into(), "r".into()),
            ("r".into(), "m".into()),
        ];
        let tail = b - 2;
        for i in 1..=tail {
            vertices.push((format!("u{i}"), if i == 1 { 3 } else { 2 }));
            let prev = if i == 1 { "m".to_string() } else { format!("u{}", i - 1) };
            edges.push((prev, format!("u{i}")));
        }
        DualGraph::new(vertices, edges).expect("valid fiber graph")
    }
}
