//! Faces of the polytope of magic labelings (the magic-sum-one slice of the
//! cone), each identified with the positive subgraph it is supported on.

mod iso;

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cone::{extreme_rays, hilbert_basis_with};
use crate::ehrhart::{bipartite_component_count, expected_degree};
use crate::graph::{
    build_constraints, complete_bipartite, complete_general_graph, digraph_to_bipartite, Host,
    Labeling,
};
use crate::{Error, Limits, Result};

pub use iso::{are_isomorphic, canonical_form, CanonicalForm};

/// A face, keyed by its support: the edges not forced to zero on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    /// Ascending edge indices.
    pub support: Vec<usize>,
    /// Indices into [`FacePoset::rays`] of the vertices of this face.
    pub rays: Vec<usize>,
    /// -1 for the empty face.
    pub dim: i64,
}

impl Face {
    /// The edges set to zero on this face, E_0.
    pub fn zero_set(&self, edge_count: usize) -> Vec<usize> {
        (0..edge_count)
            .filter(|e| self.support.binary_search(e).is_err())
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    fn contains(&self, other: &Face) -> bool {
        other
            .support
            .iter()
            .all(|e| self.support.binary_search(e).is_ok())
    }
}

/// All faces with their Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePoset {
    pub host: Host,
    /// Extreme rays of the cone; the polytope vertices are these divided by
    /// their magic sums.
    pub rays: Vec<Labeling>,
    /// Sorted by `(dim, support)`.
    pub faces: Vec<Face>,
    /// `(lower, upper)` face indices with `lower` a facet of `upper`.
    pub covers: Vec<(usize, usize)>,
}

impl FacePoset {
    pub fn dimension(&self) -> i64 {
        self.faces.last().map_or(-1, |f| f.dim)
    }

    pub fn faces_of_dim(&self, d: i64) -> impl Iterator<Item = (usize, &Face)> {
        self.faces
            .iter()
            .enumerate()
            .filter(move |(_, f)| f.dim == d)
    }

    /// Number of faces of each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.dimension();
        (0..=top).map(|d| self.faces_of_dim(d).count()).collect()
    }

    /// The polytope vertex of a 0-dimensional face.
    pub fn vertex_of(&self, face: &Face) -> Option<PolytopeVertex> {
        match face.rays.as_slice() {
            [r] if face.dim == 0 => Some(PolytopeVertex::from_ray(&self.rays[*r])),
            _ => None,
        }
    }
}

type EdgeSet = u128;

fn to_set(support: &[usize]) -> EdgeSet {
    support.iter().fold(0, |s, &e| s | (1u128 << e))
}

fn from_set(s: EdgeSet) -> Vec<usize> {
    (0..128).filter(|&e| s & (1u128 << e) != 0).collect()
}

pub fn enumerate_faces(host: &Host) -> Result<FacePoset> {
    enumerate_faces_with(host, &Limits::default())
}

/// Faces are the closed sets of the operator `S -> {rays with support inside
/// the union of supports of S}`. They are generated breadth first from the
/// empty face by joining one ray at a time and deduplicated by support.
pub fn enumerate_faces_with(host: &Host, limits: &Limits) -> Result<FacePoset> {
    Limits::check("edge count", host.edge_count() as u64, 128)?;
    let cs = build_constraints(host)?;
    let hb = hilbert_basis_with(&cs, limits)?;
    let rays = extreme_rays(&hb)?;
    Limits::check(
        "extreme ray count",
        rays.len() as u64,
        limits.max_rays as u64,
    )?;
    let ray_sets: Vec<EdgeSet> = rays.iter().map(|r| to_set(&r.support())).collect();

    let mut seen: HashSet<EdgeSet> = HashSet::new();
    let mut queue = VecDeque::from([0 as EdgeSet]);
    seen.insert(0);
    while let Some(u) = queue.pop_front() {
        for &rs in &ray_sets {
            let joined = u | rs;
            if joined != u && seen.insert(joined) {
                queue.push_back(joined);
            }
        }
    }

    let mut faces = seen
        .into_iter()
        .map(|u| {
            let support = from_set(u);
            let members: Vec<usize> = (0..rays.len()).filter(|&i| ray_sets[i] & !u == 0).collect();
            let dim = face_dimension(&support, host)?;
            Ok(Face {
                support,
                rays: members,
                dim,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    faces.sort_by(|a, b| (a.dim, &a.support).cmp(&(b.dim, &b.support)));

    let n = host.vertex_count() as i64;
    let b = bipartite_component_count(host) as i64;
    let slack = if host.is_directed() { 2 * n - b } else { n - b };
    for f in &faces {
        if f.dim >= 0 && f.support.len() as i64 > slack + f.dim {
            return Err(Error::internal(format!(
                "{}-face with {} edges exceeds the bound {}",
                f.dim,
                f.support.len(),
                slack + f.dim
            )));
        }
    }

    let mut covers = Vec::new();
    for (i, lo) in faces.iter().enumerate() {
        for (j, hi) in faces.iter().enumerate().skip(i + 1) {
            if hi.dim == lo.dim + 1 && hi.contains(lo) {
                covers.push((i, j));
            }
        }
    }
    Ok(FacePoset {
        host: host.clone(),
        rays,
        faces,
        covers,
    })
}

/// Dimension of the face supported on `support`, computed as `q' - n + b'`
/// (graphs) or `q' - 2n + b'` (digraphs) on the support subgraph and as
/// `|support| - rank - 1` from the constraint columns. The two must agree.
pub fn face_dimension(support: &[usize], host: &Host) -> Result<i64> {
    if support.is_empty() {
        return Ok(-1);
    }
    let sub = host.subhost(support);
    let by_formula = expected_degree(&sub);
    let cs = build_constraints(host)?;
    let by_rank = support.len() as i64 - cs.support_rank(support) as i64 - 1;
    if by_formula != by_rank {
        return Err(Error::internal(format!(
            "face dimension disagrees: formula gives {by_formula}, rank gives {by_rank}"
        )));
    }
    Ok(by_rank)
}

/// A vertex of the polytope: an extreme ray scaled to magic sum one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolytopeVertex {
    pub coordinates: Vec<BigRational>,
}

impl PolytopeVertex {
    fn from_ray(ray: &Labeling) -> PolytopeVertex {
        let s = BigInt::from(ray.magic_sum().expect("rays are magic"));
        PolytopeVertex {
            coordinates: ray
                .values()
                .iter()
                .map(|&x| BigRational::new(BigInt::from(x), s.clone()))
                .collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coordinates.iter().all(|c| c.is_integer())
    }
}

pub fn polytope_vertices(host: &Host) -> Result<Vec<PolytopeVertex>> {
    polytope_vertices_with(host, &Limits::default())
}

pub fn polytope_vertices_with(host: &Host, limits: &Limits) -> Result<Vec<PolytopeVertex>> {
    let hb = hilbert_basis_with(&build_constraints(host)?, limits)?;
    let mut out: Vec<PolytopeVertex> = Vec::new();
    for ray in extreme_rays(&hb)? {
        let v = PolytopeVertex::from_ray(&ray);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

/// The graph of vertices and edges of the polytope. Vertex `v{k}` is the
/// k-th 0-dimensional face of the poset.
pub fn edge_graph(poset: &FacePoset) -> Host {
    let vertex_faces: Vec<&Face> = poset.faces_of_dim(0).map(|(_, f)| f).collect();
    let by_ray: BTreeMap<usize, usize> = vertex_faces
        .iter()
        .enumerate()
        .map(|(k, f)| (f.rays[0], k))
        .collect();
    let edges: Vec<(usize, usize)> = poset
        .faces_of_dim(1)
        .map(|(_, f)| {
            debug_assert_eq!(f.rays.len(), 2);
            (by_ray[&f.rays[0]], by_ray[&f.rays[1]])
        })
        .collect();
    let names: Vec<String> = (0..vertex_faces.len()).map(|k| format!("v{k}")).collect();
    Host::graph(names, &edges).expect("endpoints are vertex faces")
}

/// One isomorphism class of d-faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    /// Face index of the first member.
    pub representative: usize,
    /// All member face indices, ascending.
    pub members: Vec<usize>,
}

impl IsoClass {
    pub fn count(&self) -> usize {
        self.members.len()
    }
}

/// What "isomorphic" means when comparing face supports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IsoMode {
    /// Isomorphism of the support (di)graphs themselves, loops and
    /// directions respected.
    #[default]
    Support,
    /// For digraph hosts, isomorphism of the supports' images in G_D. Under
    /// this mode all vertices of B_n fall into one class. Same as
    /// [`IsoMode::Support`] for graph hosts.
    BipartiteImage,
}

/// Partition of the d-faces by isomorphism type of their support
/// subgraphs, in order of first appearance.
pub fn isomorphism_classes(poset: &FacePoset, d: i64) -> Vec<IsoClass> {
    isomorphism_classes_by(poset, d, IsoMode::Support)
}

pub fn isomorphism_classes_by(poset: &FacePoset, d: i64, mode: IsoMode) -> Vec<IsoClass> {
    let image = match mode {
        IsoMode::BipartiteImage if poset.host.is_directed() => {
            Some(digraph_to_bipartite(&poset.host).expect("host is a digraph"))
        }
        _ => None,
    };
    let form_of = |f: &Face| match &image {
        Some(img) => {
            let mapped: Vec<usize> = f.support.iter().map(|&e| img.edge_map[e]).collect();
            canonical_form(&img.graph, &mapped)
        }
        None => canonical_form(&poset.host, &f.support),
    };
    let mut classes: Vec<(CanonicalForm, IsoClass)> = Vec::new();
    for (i, f) in poset.faces_of_dim(d) {
        let form = form_of(f);
        match classes.iter_mut().find(|(c, _)| *c == form) {
            Some((_, class)) => class.members.push(i),
            None => classes.push((
                form,
                IsoClass {
                    representative: i,
                    members: vec![i],
                },
            )),
        }
    }
    classes.into_iter().map(|(_, c)| c).collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn birkhoff_faces_in_gamma(n: usize) -> Result<Vec<Face>> {
    birkhoff_faces_in_gamma_with(n, &Limits::default())
}

/// Faces of P_{Γ_{2n}} whose support is a copy of K_{n,n}. There must be
/// `C(2n-1, n)` of them, each of dimension `(n-1)^2`.
pub fn birkhoff_faces_in_gamma_with(n: usize, limits: &Limits) -> Result<Vec<Face>> {
    if n == 0 {
        return Err(Error::precondition("n must be at least 1"));
    }
    let gamma = complete_general_graph(2 * n)?;
    let poset = enumerate_faces_with(&gamma, limits)?;
    let knn = complete_bipartite(n, n)?;
    let target = canonical_form(&knn, &(0..knn.edge_count()).collect::<Vec<_>>());
    let found: Vec<Face> = poset
        .faces
        .into_iter()
        .filter(|f| canonical_form(&gamma, &f.support) == target)
        .collect();
    let expected = binomial(2 * n as u64 - 1, n as u64);
    if found.len() as u64 != expected {
        return Err(Error::internal(format!(
            "found {} copies of B_{n}, expected {expected}",
            found.len()
        )));
    }
    let dim = ((n - 1) * (n - 1)) as i64;
    if let Some(f) = found.iter().find(|f| f.dim != dim) {
        return Err(Error::internal(format!(
            "copy of B_{n} has dimension {}, expected {dim}",
            f.dim
        )));
    }
    Ok(found)
}
