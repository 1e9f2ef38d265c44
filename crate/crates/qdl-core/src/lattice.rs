//! Oriented square lattices on a bounded planar patch or a torus, with the
//! cartesian orientation convention: horizontal edges point right, vertical
//! edges point up.
//!
//! A *site* is a pair (vertex, face) with the vertex on the face boundary;
//! the cilium is the vertex's corner position on the face and fixes the
//! ordering conventions for face and vertex operators. Ribbons are ordered
//! triangle lists, classified as closed / open / strongly open.

use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("bad lattice dimensions: {0}")]
    BadDimensions(String),
    #[error("site is invalid: vertex not on face boundary")]
    NonAdjacentSite,
    #[error("not a ribbon: {0}")]
    NotARibbon(String),
    #[error("ribbon endpoints do not match for concatenation")]
    EndpointMismatch,
    #[error("boundary of the patch is too close for this construction")]
    BoundaryTooClose,
    #[error("invalid triangle: {0}")]
    BadTriangle(String),
    #[error("bad definition: {0}")]
    BadDefinition(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Topology {
    Plane,
    Torus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
    pub orient: Orientation,
}

/// Corner position of a vertex on a face (the face extends to the NE of its
/// SW corner).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corner {
    SW,
    SE,
    NE,
    NW,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Site {
    pub vertex: VertexId,
    pub face: FaceId,
}

impl Site {
    pub fn disjoint(&self, other: &Site) -> bool {
        self.vertex != other.vertex && self.face != other.face
    }
}

/// Incident edge of a vertex together with whether it points away from it.
#[derive(Clone, Copy, Debug)]
pub struct StarEdge {
    pub edge: EdgeId,
    pub outgoing: bool,
}

#[derive(Clone, Debug)]
pub struct Lattice {
    pub topology: Topology,
    /// vertex grid dimensions
    pub width: usize,
    pub height: usize,
    pub edges: Vec<Edge>,
    h_edges: Vec<Option<EdgeId>>,
    v_edges: Vec<Option<EdgeId>>,
    /// face grid, indexed by SW corner
    faces: Vec<(usize, usize)>,
    face_lookup: Vec<Option<FaceId>>,
}

impl Lattice {
    pub fn build(topology: Topology, width: usize, height: usize) -> Result<Self, LatticeError> {
        if width < 2 || height < 2 {
            return Err(LatticeError::BadDimensions(format!(
                "need at least 2x2 vertices, got {width}x{height}"
            )));
        }
        let mut lat = Lattice {
            topology,
            width,
            height,
            edges: Vec::new(),
            h_edges: vec![None; width * height],
            v_edges: vec![None; width * height],
            faces: Vec::new(),
            face_lookup: vec![None; width * height],
        };
        for y in 0..height {
            for x in 0..width {
                if topology == Topology::Torus || x + 1 < width {
                    let id = lat.edges.len();
                    lat.edges.push(Edge {
                        src: lat.vertex_id(x, y),
                        dst: lat.vertex_id((x + 1) % width, y),
                        orient: Orientation::Horizontal,
                    });
                    lat.h_edges[y * width + x] = Some(id);
                }
                if topology == Topology::Torus || y + 1 < height {
                    let id = lat.edges.len();
                    lat.edges.push(Edge {
                        src: lat.vertex_id(x, y),
                        dst: lat.vertex_id(x, (y + 1) % height),
                        orient: Orientation::Vertical,
                    });
                    lat.v_edges[y * width + x] = Some(id);
                }
            }
        }
        for y in 0..height {
            for x in 0..width {
                let exists = topology == Topology::Torus || (x + 1 < width && y + 1 < height);
                if exists {
                    lat.face_lookup[y * width + x] = Some(lat.faces.len());
                    lat.faces.push((x, y));
                }
            }
        }
        Ok(lat)
    }

    pub fn num_vertices(&self) -> usize {
        self.width * self.height
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    #[inline]
    pub fn vertex_id(&self, x: usize, y: usize) -> VertexId {
        (y % self.height) * self.width + (x % self.width)
    }

    pub fn vertex_xy(&self, v: VertexId) -> (usize, usize) {
        (v % self.width, v / self.width)
    }

    pub fn h_edge(&self, x: usize, y: usize) -> Option<EdgeId> {
        self.h_edges[(y % self.height) * self.width + (x % self.width)]
    }

    pub fn v_edge(&self, x: usize, y: usize) -> Option<EdgeId> {
        self.v_edges[(y % self.height) * self.width + (x % self.width)]
    }

    pub fn face_at(&self, x: usize, y: usize) -> Option<FaceId> {
        self.face_lookup[(y % self.height) * self.width + (x % self.width)]
    }

    pub fn face_sw(&self, f: FaceId) -> (usize, usize) {
        self.faces[f]
    }

    /// Star of a vertex in anticlockwise order E, N, W, S; absent entries are
    /// boundary truncations on plane patches.
    pub fn star(&self, v: VertexId) -> Vec<StarEdge> {
        let (x, y) = self.vertex_xy(v);
        let torus = self.topology == Topology::Torus;
        let mut out = Vec::with_capacity(4);
        // E: h(x, y) outgoing
        if let Some(e) = self.h_edge(x, y) {
            out.push(StarEdge { edge: e, outgoing: true });
        }
        // N: v(x, y) outgoing
        if let Some(e) = self.v_edge(x, y) {
            out.push(StarEdge { edge: e, outgoing: true });
        }
        // W: h(x-1, y) incoming
        if torus || x > 0 {
            if let Some(e) = self.h_edge((x + self.width - 1) % self.width, y) {
                out.push(StarEdge { edge: e, outgoing: false });
            }
        }
        // S: v(x, y-1) incoming
        if torus || y > 0 {
            if let Some(e) = self.v_edge(x, (y + self.height - 1) % self.height) {
                out.push(StarEdge { edge: e, outgoing: false });
            }
        }
        out
    }

    /// Star in strict anticlockwise cyclic order starting from the cilium of
    /// site (v, p): entries are None where the plane patch truncates. The
    /// cilium points into the face, so the first edge is the one met
    /// immediately anticlockwise of that diagonal.
    pub fn star_from_cilium(&self, site: Site) -> Result<Vec<Option<StarEdge>>, LatticeError> {
        let (x, y) = self.vertex_xy(site.vertex);
        let torus = self.topology == Topology::Torus;
        let w = self.width;
        let h = self.height;
        let slot = |dir: usize| -> Option<StarEdge> {
            match dir {
                0 => self.h_edge(x, y).map(|e| StarEdge { edge: e, outgoing: true }), // E
                1 => self.v_edge(x, y).map(|e| StarEdge { edge: e, outgoing: true }), // N
                2 => {
                    if torus || x > 0 {
                        self.h_edge((x + w - 1) % w, y).map(|e| StarEdge { edge: e, outgoing: false })
                    } else {
                        None
                    }
                } // W
                3 => {
                    if torus || y > 0 {
                        self.v_edge(x, (y + h - 1) % h).map(|e| StarEdge { edge: e, outgoing: false })
                    } else {
                        None
                    }
                } // S
                _ => unreachable!(),
            }
        };
        // first slot anticlockwise of the cilium diagonal
        let first = match self.corner_of(site)? {
            Corner::SW => 1, // cilium NE -> N, W, S, E
            Corner::SE => 2, // cilium NW -> W, S, E, N
            Corner::NE => 3, // cilium SW -> S, E, N, W
            Corner::NW => 0, // cilium SE -> E, N, W, S
        };
        Ok((0..4).map(|i| slot((first + i) % 4)).collect())
    }

    /// Which corner of the face the site's vertex sits at.
    pub fn corner_of(&self, site: Site) -> Result<Corner, LatticeError> {
        let (fx, fy) = self.face_sw(site.face);
        let (vx, vy) = self.vertex_xy(site.vertex);
        let dx = (vx + self.width - fx) % self.width;
        let dy = (vy + self.height - fy) % self.height;
        match (dx, dy) {
            (0, 0) => Ok(Corner::SW),
            (1, 0) => Ok(Corner::SE),
            (1, 1) => Ok(Corner::NE),
            (0, 1) => Ok(Corner::NW),
            _ => Err(LatticeError::NonAdjacentSite),
        }
    }

    /// Face corners in clockwise order starting at the site's vertex
    /// (y-up convention: SW -> NW -> NE -> SE is clockwise).
    fn corners_cw_from(&self, site: Site) -> Result<Vec<(usize, usize)>, LatticeError> {
        let (fx, fy) = self.face_sw(site.face);
        let w = self.width;
        let h = self.height;
        let cycle = [
            (fx, fy),
            (fx, (fy + 1) % h),
            ((fx + 1) % w, (fy + 1) % h),
            ((fx + 1) % w, fy),
        ];
        let start = match self.corner_of(site)? {
            Corner::SW => 0,
            Corner::NW => 1,
            Corner::NE => 2,
            Corner::SE => 3,
        };
        Ok((0..4).map(|i| cycle[(start + i) % 4]).collect())
    }

    /// Boundary word of the face, clockwise starting at the site's vertex:
    /// (edge, sign) with sign +1 when the arrow agrees with the traversal.
    pub fn face_word(&self, site: Site) -> Result<Vec<(EdgeId, i8)>, LatticeError> {
        let corners = self.corners_cw_from(site)?;
        let mut word = Vec::with_capacity(4);
        for i in 0..4 {
            let (ax, ay) = corners[i];
            let (bx, by) = corners[(i + 1) % 4];
            word.push(self.connecting_edge(ax, ay, bx, by)?);
        }
        Ok(word)
    }

    /// Edge from (ax, ay) to (bx, by) where the two are lattice neighbours;
    /// sign is +1 if the edge is oriented along that direction of travel.
    fn connecting_edge(&self, ax: usize, ay: usize, bx: usize, by: usize) -> Result<(EdgeId, i8), LatticeError> {
        let w = self.width;
        let h = self.height;
        let e = if by == ay && (ax + 1) % w == bx {
            (self.h_edge(ax, ay), 1)
        } else if by == ay && (bx + 1) % w == ax {
            (self.h_edge(bx, by), -1)
        } else if bx == ax && (ay + 1) % h == by {
            (self.v_edge(ax, ay), 1)
        } else if bx == ax && (by + 1) % h == ay {
            (self.v_edge(ax, by), -1)
        } else {
            (None, 0)
        };
        match e {
            (Some(id), s) => Ok((id, s)),
            _ => Err(LatticeError::BadTriangle(format!(
                "no edge between ({ax},{ay}) and ({bx},{by})"
            ))),
        }
    }

    /// The four faces around an interior vertex in anticlockwise order
    /// NE, NW, SW, SE; `None` where missing on a plane patch.
    pub fn faces_around(&self, v: VertexId) -> Vec<Option<FaceId>> {
        let (x, y) = self.vertex_xy(v);
        let w = self.width;
        let h = self.height;
        let torus = self.topology == Topology::Torus;
        let get = |fx: isize, fy: isize| -> Option<FaceId> {
            if torus {
                let fx = ((fx % w as isize) + w as isize) as usize % w;
                let fy = ((fy % h as isize) + h as isize) as usize % h;
                self.face_at(fx, fy)
            } else if fx >= 0 && fy >= 0 {
                self.face_at(fx as usize, fy as usize)
            } else {
                None
            }
        };
        let (xi, yi) = (x as isize, y as isize);
        vec![get(xi, yi), get(xi - 1, yi), get(xi - 1, yi - 1), get(xi, yi - 1)]
    }

    /// Shared boundary edge of two adjacent faces that is incident to `v`.
    pub fn shared_edge_at(&self, v: VertexId, f1: FaceId, f2: FaceId) -> Option<EdgeId> {
        let s1 = Site { vertex: v, face: f1 };
        let word1: Vec<EdgeId> = self.face_word(s1).ok()?.iter().map(|&(e, _)| e).collect();
        let s2 = Site { vertex: v, face: f2 };
        let word2: Vec<EdgeId> = self.face_word(s2).ok()?.iter().map(|&(e, _)| e).collect();
        let star: Vec<EdgeId> = self.star(v).iter().map(|s| s.edge).collect();
        word1
            .iter()
            .find(|e| word2.contains(e) && star.contains(e))
            .copied()
    }

    pub fn is_interior_vertex(&self, v: VertexId) -> bool {
        self.topology == Topology::Torus || {
            let (x, y) = self.vertex_xy(v);
            x > 0 && y > 0 && x + 1 < self.width && y + 1 < self.height
        }
    }
}

// ---------------------------------------------------------------------------
// Triangles and ribbons
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleKind {
    Direct,
    Dual,
}

/// One triangle of a ribbon: the single acted-on edge plus start/end sites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub kind: TriangleKind,
    pub edge: EdgeId,
    pub from: Site,
    pub to: Site,
}

impl Triangle {
    /// Direct triangle: both sites share the face; the edge joins the two
    /// vertices along that face's boundary.
    pub fn direct(lat: &Lattice, from: Site, to: Site) -> Result<Triangle, LatticeError> {
        if from.face != to.face || from.vertex == to.vertex {
            return Err(LatticeError::BadTriangle("direct triangle must change the vertex only".into()));
        }
        lat.corner_of(from)?;
        lat.corner_of(to)?;
        let (ax, ay) = lat.vertex_xy(from.vertex);
        let (bx, by) = lat.vertex_xy(to.vertex);
        let (edge, _) = lat.connecting_edge(ax, ay, bx, by)?;
        let on_face = lat.face_word(from)?.iter().any(|&(e, _)| e == edge);
        if !on_face {
            return Err(LatticeError::BadTriangle("edge not on the shared face".into()));
        }
        Ok(Triangle { kind: TriangleKind::Direct, edge, from, to })
    }

    /// Dual triangle: both sites share the vertex; the edge is the one the
    /// dual path crosses between the two faces.
    pub fn dual(lat: &Lattice, from: Site, to: Site) -> Result<Triangle, LatticeError> {
        if from.vertex != to.vertex || from.face == to.face {
            return Err(LatticeError::BadTriangle("dual triangle must change the face only".into()));
        }
        lat.corner_of(from)?;
        lat.corner_of(to)?;
        let edge = lat
            .shared_edge_at(from.vertex, from.face, to.face)
            .ok_or_else(|| LatticeError::BadTriangle("faces do not share an edge at the vertex".into()))?;
        Ok(Triangle { kind: TriangleKind::Dual, edge, from, to })
    }

    /// +1 if the edge arrow agrees with the direction of travel from the
    /// start vertex (direct triangles only).
    pub fn traversal_sign(&self, lat: &Lattice) -> i8 {
        debug_assert_eq!(self.kind, TriangleKind::Direct);
        if lat.edges[self.edge].src == self.from.vertex {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RibbonClass {
    Closed,
    Open,
    StronglyOpen,
    Other,
}

#[derive(Clone, Debug)]
pub struct Ribbon {
    pub triangles: Vec<Triangle>,
}

impl Ribbon {
    pub fn new(triangles: Vec<Triangle>) -> Result<Ribbon, LatticeError> {
        if triangles.is_empty() {
            return Err(LatticeError::NotARibbon("empty triangle list".into()));
        }
        for pair in triangles.windows(2) {
            if pair[0].to != pair[1].from {
                return Err(LatticeError::NotARibbon("triangles do not chain".into()));
            }
        }
        Ok(Ribbon { triangles })
    }

    pub fn start(&self) -> Site {
        self.triangles[0].from
    }

    pub fn end(&self) -> Site {
        self.triangles.last().unwrap().to
    }

    /// Ordered site list s_0 .. s_n.
    pub fn sites(&self) -> Vec<Site> {
        let mut out = vec![self.start()];
        out.extend(self.triangles.iter().map(|t| t.to));
        out
    }

    pub fn classify(&self) -> RibbonClass {
        classify_sites(&self.sites()).expect("constructed ribbons have valid site chains")
    }

    pub fn reversed(&self) -> Ribbon {
        let triangles = self
            .triangles
            .iter()
            .rev()
            .map(|t| Triangle { kind: t.kind, edge: t.edge, from: t.to, to: t.from })
            .collect();
        Ribbon { triangles }
    }
}

/// Classification straight from a site chain, usable on raw site lists.
pub fn classify_sites(sites: &[Site]) -> Result<RibbonClass, LatticeError> {
    if sites.len() < 2 {
        return Err(LatticeError::NotARibbon("fewer than two sites".into()));
    }
    for pair in sites.windows(2) {
        let dv = pair[0].vertex != pair[1].vertex;
        let dp = pair[0].face != pair[1].face;
        if dv == dp {
            return Err(LatticeError::NotARibbon(
                "consecutive sites must differ in exactly one of vertex/face".into(),
            ));
        }
    }
    let first = sites[0];
    let last = *sites.last().unwrap();
    if first == last {
        return Ok(RibbonClass::Closed);
    }
    if !first.disjoint(&last) {
        return Ok(RibbonClass::Other);
    }
    // strongly open: repeats of a vertex (or face) only in contiguous runs
    let contiguous = |key: fn(&Site) -> usize| -> bool {
        for i in 0..sites.len() {
            for j in (i + 2)..sites.len() {
                if key(&sites[i]) == key(&sites[j]) {
                    if !(i..j).all(|k| key(&sites[k]) == key(&sites[i])) {
                        return false;
                    }
                }
            }
        }
        true
    };
    if contiguous(|s| s.vertex) && contiguous(|s| s.face) {
        Ok(RibbonClass::StronglyOpen)
    } else {
        Ok(RibbonClass::Open)
    }
}

pub fn concat_ribbons(r1: &Ribbon, r2: &Ribbon) -> Result<Ribbon, LatticeError> {
    if r1.end() != r2.start() {
        return Err(LatticeError::EndpointMismatch);
    }
    let mut triangles = r1.triangles.clone();
    triangles.extend(r2.triangles.iter().cloned());
    Ribbon::new(triangles)
}

/// Closed anticlockwise ribbon from a site around its vertex and then its
/// face: four dual triangles rotating through the faces at the vertex,
/// followed by four direct triangles around the face boundary.
pub fn boundary_ribbon(lat: &Lattice, site: Site) -> Result<Ribbon, LatticeError> {
    lat.corner_of(site)?;
    let v = site.vertex;
    let around = lat.faces_around(v);
    if around.iter().any(|f| f.is_none()) {
        return Err(LatticeError::BoundaryTooClose);
    }
    let around: Vec<FaceId> = around.into_iter().map(|f| f.unwrap()).collect();
    let start_pos = around
        .iter()
        .position(|&f| f == site.face)
        .ok_or(LatticeError::NonAdjacentSite)?;
    let mut triangles = Vec::with_capacity(8);
    let mut cur = site;
    for i in 0..4 {
        let next_face = around[(start_pos + i + 1) % 4];
        let to = Site { vertex: v, face: next_face };
        triangles.push(Triangle::dual(lat, cur, to)?);
        cur = to;
    }
    debug_assert_eq!(cur, site);
    // anticlockwise around the face: reverse of the clockwise corner cycle
    let corners = lat.corners_cw_from(site)?;
    let acw = [corners[0], corners[3], corners[2], corners[1]];
    for i in 0..4 {
        let (bx, by) = acw[(i + 1) % 4];
        let to = Site { vertex: lat.vertex_id(bx, by), face: site.face };
        triangles.push(Triangle::direct(lat, cur, to)?);
        cur = to;
    }
    Ribbon::new(triangles)
}

/// Rotates the face coordinate of a site to `target` by consecutive dual
/// triangles around the vertex (shortest direction), appending to `out`.
fn rotate_to_face(
    lat: &Lattice,
    cur: &mut Site,
    target: FaceId,
    out: &mut Vec<Triangle>,
) -> Result<(), LatticeError> {
    if cur.face == target {
        return Ok(());
    }
    let around = lat.faces_around(cur.vertex);
    let ring: Vec<Option<FaceId>> = around.clone();
    let pos_of = |f: FaceId| ring.iter().position(|&x| x == Some(f));
    let (a, b) = match (pos_of(cur.face), pos_of(target)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(LatticeError::BoundaryTooClose),
    };
    // try anticlockwise then clockwise, requiring all intermediate faces
    let acw_len = (b + 4 - a) % 4;
    let path_ok = |step: isize, len: usize| -> bool {
        (1..=len).all(|k| ring[((a as isize + step * k as isize).rem_euclid(4)) as usize].is_some())
    };
    let (step, len) = if path_ok(1, acw_len) {
        (1isize, acw_len)
    } else if path_ok(-1, 4 - acw_len) {
        (-1isize, 4 - acw_len)
    } else {
        return Err(LatticeError::BoundaryTooClose);
    };
    for k in 1..=len {
        let f = ring[((a as isize + step * k as isize).rem_euclid(4)) as usize].unwrap();
        let to = Site { vertex: cur.vertex, face: f };
        out.push(Triangle::dual(lat, *cur, to)?);
        *cur = to;
    }
    Ok(())
}

/// Simple L-shaped routing helper: walks the vertex horizontally then
/// vertically along direct triangles, rotating with dual triangles as
/// needed, ending exactly at `to`. Intended for fixtures and CLI demos;
/// acceptance geometry is specified as explicit triangle lists.
pub fn l_shaped_ribbon(lat: &Lattice, from: Site, to: Site) -> Result<Ribbon, LatticeError> {
    if from == to {
        return Err(LatticeError::NotARibbon("identical endpoints".into()));
    }
    let mut triangles = Vec::new();
    let mut cur = from;
    let (tx, ty) = lat.vertex_xy(to.vertex);
    // horizontal leg
    loop {
        let (x, y) = lat.vertex_xy(cur.vertex);
        if x == tx {
            break;
        }
        let step_right = if lat.topology == Topology::Torus {
            (tx + lat.width - x) % lat.width <= lat.width / 2
        } else {
            tx > x
        };
        let nx = if step_right { (x + 1) % lat.width } else { (x + lat.width - 1) % lat.width };
        // face holding both (x,y) and (nx,y): prefer the one below the row
        let fy = if lat.topology == Topology::Torus {
            (y + lat.height - 1) % lat.height
        } else if y > 0 {
            y - 1
        } else {
            y
        };
        let fx = if step_right { x } else { nx };
        let face = lat
            .face_at(fx, fy)
            .or_else(|| lat.face_at(fx, y))
            .ok_or(LatticeError::BoundaryTooClose)?;
        rotate_to_face(lat, &mut cur, face, &mut triangles)?;
        let next = Site { vertex: lat.vertex_id(nx, y), face };
        triangles.push(Triangle::direct(lat, cur, next)?);
        cur = next;
    }
    // vertical leg
    loop {
        let (x, y) = lat.vertex_xy(cur.vertex);
        if y == ty {
            break;
        }
        let step_up = if lat.topology == Topology::Torus {
            (ty + lat.height - y) % lat.height <= lat.height / 2
        } else {
            ty > y
        };
        let ny = if step_up { (y + 1) % lat.height } else { (y + lat.height - 1) % lat.height };
        let fx = if lat.topology == Topology::Torus {
            (x + lat.width - 1) % lat.width
        } else if x > 0 {
            x - 1
        } else {
            x
        };
        let fy = if step_up { y } else { ny };
        let face = lat
            .face_at(fx, fy)
            .or_else(|| lat.face_at(x, fy))
            .ok_or(LatticeError::BoundaryTooClose)?;
        rotate_to_face(lat, &mut cur, face, &mut triangles)?;
        let next = Site { vertex: lat.vertex_id(x, ny), face };
        triangles.push(Triangle::direct(lat, cur, next)?);
        cur = next;
    }
    rotate_to_face(lat, &mut cur, to.face, &mut triangles)?;
    Ribbon::new(triangles)
}

// ---------------------------------------------------------------------------
// JSON specs
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct LatticeSpecJson {
    topology: String,
    width: usize,
    height: usize,
}

pub fn load_lattice(json: &str) -> Result<Lattice, LatticeError> {
    let spec: LatticeSpecJson =
        serde_json::from_str(json).map_err(|e| LatticeError::BadDefinition(e.to_string()))?;
    let topology = match spec.topology.as_str() {
        "torus" => Topology::Torus,
        "plane" => Topology::Plane,
        other => return Err(LatticeError::BadDefinition(format!("unknown topology {other}"))),
    };
    Lattice::build(topology, spec.width, spec.height)
}

#[derive(Deserialize)]
struct SiteJson {
    v: [usize; 2],
    p: [usize; 2],
}

#[derive(Deserialize)]
struct TriangleJson {
    kind: String,
    from: SiteJson,
    to: SiteJson,
}

fn site_from_json(lat: &Lattice, s: &SiteJson) -> Result<Site, LatticeError> {
    let face = lat
        .face_at(s.p[0], s.p[1])
        .ok_or_else(|| LatticeError::BadDefinition(format!("no face at ({}, {})", s.p[0], s.p[1])))?;
    let site = Site { vertex: lat.vertex_id(s.v[0], s.v[1]), face };
    lat.corner_of(site)?;
    Ok(site)
}

/// Ribbon spec: a JSON list of triangle records.
pub fn load_ribbon(lat: &Lattice, json: &str) -> Result<Ribbon, LatticeError> {
    let spec: Vec<TriangleJson> =
        serde_json::from_str(json).map_err(|e| LatticeError::BadDefinition(e.to_string()))?;
    let mut triangles = Vec::new();
    for t in &spec {
        let from = site_from_json(lat, &t.from)?;
        let to = site_from_json(lat, &t.to)?;
        let tri = match t.kind.as_str() {
            "direct" => Triangle::direct(lat, from, to)?,
            "dual" => Triangle::dual(lat, from, to)?,
            other => return Err(LatticeError::BadDefinition(format!("unknown triangle kind {other}"))),
        };
        triangles.push(tri);
    }
    Ribbon::new(triangles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn site(lat: &Lattice, vx: usize, vy: usize, fx: usize, fy: usize) -> Site {
        Site { vertex: lat.vertex_id(vx, vy), face: lat.face_at(fx, fy).unwrap() }
    }

    #[test]
    fn counts_torus_and_plane() {
        let t = Lattice::build(Topology::Torus, 2, 2).unwrap();
        assert_eq!((t.num_vertices(), t.num_edges(), t.num_faces()), (4, 8, 4));
        let t3 = Lattice::build(Topology::Torus, 3, 3).unwrap();
        assert_eq!((t3.num_vertices(), t3.num_edges(), t3.num_faces()), (9, 18, 9));
        let p = Lattice::build(Topology::Plane, 3, 3).unwrap();
        assert_eq!((p.num_vertices(), p.num_edges(), p.num_faces()), (9, 12, 4));
        assert!(Lattice::build(Topology::Torus, 1, 3).is_err());
    }

    #[test]
    fn face_word_is_cyclic_in_the_corner() {
        let lat = Lattice::build(Topology::Torus, 3, 3).unwrap();
        let f = lat.face_at(1, 1).unwrap();
        // all four corner sites give the same cyclic word, rotated
        let words: Vec<Vec<(EdgeId, i8)>> = [(1, 1), (2, 1), (2, 2), (1, 2)]
            .iter()
            .map(|&(vx, vy)| lat.face_word(Site { vertex: lat.vertex_id(vx, vy), face: f }).unwrap())
            .collect();
        for w in &words {
            assert_eq!(w.len(), 4);
        }
        let doubled: Vec<(EdgeId, i8)> = words[0].iter().chain(words[0].iter()).copied().collect();
        for w in &words[1..] {
            assert!(doubled.windows(4).any(|win| win == w.as_slice()));
        }
    }

    #[test]
    fn triangle_validity() {
        let lat = Lattice::build(Topology::Plane, 3, 3).unwrap();
        let s0 = site(&lat, 0, 0, 0, 0);
        let s1 = site(&lat, 1, 0, 0, 0);
        let t = Triangle::direct(&lat, s0, s1).unwrap();
        assert_eq!(t.edge, lat.h_edge(0, 0).unwrap());
        assert_eq!(t.traversal_sign(&lat), 1);

        let s2 = site(&lat, 1, 0, 1, 0);
        let d = Triangle::dual(&lat, s1, s2).unwrap();
        assert_eq!(d.edge, lat.v_edge(1, 0).unwrap());

        assert!(Triangle::direct(&lat, s0, s2).is_err());
        assert!(Triangle::dual(&lat, s0, s1).is_err());
    }

    #[test]
    fn classification_cases() {
        let lat = Lattice::build(Topology::Plane, 3, 3).unwrap();
        let s0 = site(&lat, 0, 0, 0, 0);
        let s1 = site(&lat, 1, 0, 0, 0);
        let s2 = site(&lat, 1, 0, 1, 0);
        let s3 = site(&lat, 2, 0, 1, 0);
        let r = Ribbon::new(vec![
            Triangle::direct(&lat, s0, s1).unwrap(),
            Triangle::dual(&lat, s1, s2).unwrap(),
            Triangle::direct(&lat, s2, s3).unwrap(),
        ])
        .unwrap();
        assert_eq!(r.classify(), RibbonClass::StronglyOpen);

        // single dual triangle: endpoints share the vertex -> Other
        let rd = Ribbon::new(vec![Triangle::dual(&lat, s1, s2).unwrap()]).unwrap();
        assert_eq!(rd.classify(), RibbonClass::Other);

        // there and back again -> closed
        let back = concat_ribbons(&r, &r.reversed()).unwrap();
        assert_eq!(back.classify(), RibbonClass::Closed);

        // disjoint ribbons refuse to concatenate
        let far = Ribbon::new(vec![Triangle::direct(
            &lat,
            site(&lat, 0, 2, 0, 1),
            site(&lat, 1, 2, 0, 1),
        )
        .unwrap()])
        .unwrap();
        assert!(matches!(concat_ribbons(&r, &far), Err(LatticeError::EndpointMismatch)));
    }

    #[test]
    fn strongly_open_requires_contiguous_runs() {
        // fabricate a site chain that returns to a previously seen vertex
        let lat = Lattice::build(Topology::Torus, 4, 4).unwrap();
        let f = |x: usize, y: usize| lat.face_at(x, y).unwrap();
        let v = |x: usize, y: usize| lat.vertex_id(x, y);
        let chain = vec![
            Site { vertex: v(0, 0), face: f(0, 0) },
            Site { vertex: v(1, 0), face: f(0, 0) },
            Site { vertex: v(1, 0), face: f(1, 0) },
            Site { vertex: v(2, 0), face: f(1, 0) },
            Site { vertex: v(2, 0), face: f(2, 0) },
        ];
        assert_eq!(classify_sites(&chain).unwrap(), RibbonClass::StronglyOpen);
        // same chain revisiting vertex 1,0 later is merely open
        let mut bad = chain.clone();
        bad.push(Site { vertex: v(2, 1), face: f(2, 0) });
        bad.push(Site { vertex: v(2, 1), face: f(1, 0) });
        assert_eq!(classify_sites(&bad).unwrap(), RibbonClass::Open);
        // chains must change exactly one coordinate per step
        let broken = vec![chain[0], chain[3]];
        assert!(classify_sites(&broken).is_err());
    }

    #[test]
    fn boundary_ribbon_shapes() {
        let t = Lattice::build(Topology::Torus, 3, 3).unwrap();
        let s = site(&t, 1, 1, 1, 1);
        let r = boundary_ribbon(&t, s).unwrap();
        assert_eq!(r.classify(), RibbonClass::Closed);
        assert_eq!(r.triangles.len(), 8);

        let p = Lattice::build(Topology::Plane, 3, 3).unwrap();
        let corner = site(&p, 0, 0, 0, 0);
        assert!(matches!(boundary_ribbon(&p, corner), Err(LatticeError::BoundaryTooClose)));
    }

    #[test]
    fn l_shaped_routes_connect() {
        let lat = Lattice::build(Topology::Plane, 4, 4).unwrap();
        let a = site(&lat, 0, 0, 0, 0);
        let b = site(&lat, 2, 2, 2, 2);
        let r = l_shaped_ribbon(&lat, a, b).unwrap();
        assert_eq!(r.start(), a);
        assert_eq!(r.end(), b);
        for pair in r.triangles.windows(2) {
            assert_eq!(pair[0].to, pair[1].from);
        }
    }

    #[test]
    fn json_specs_parse() {
        let lat = load_lattice(r#"{"topology":"torus","width":3,"height":3}"#).unwrap();
        assert_eq!(lat.num_edges(), 18);
        let rib = load_ribbon(
            &lat,
            r#"[{"kind":"direct","from":{"v":[0,0],"p":[0,0]},"to":{"v":[1,0],"p":[0,0]}}]"#,
        )
        .unwrap();
        assert_eq!(rib.triangles.len(), 1);
    }
}
