//! Finite groups as dense index tables, plus the representation-theoretic
//! data every other module consumes: conjugacy classes, centralizers,
//! transversal sections, irreps and character checks.
//!
//! Elements are indices `0..order` with precomputed multiplication and
//! inverse tables, so group arithmetic is O(1) everywhere downstream.

use crate::linalg::{CMatrix, C64, ONE, ZERO};
use serde::Deserialize;
use std::f64::consts::PI;
use thiserror::Error;

/// Element index inside a [`GroupTable`].
pub type GIdx = usize;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group table is invalid: {0}")]
    InvalidTable(String),
    #[error("no irrep data available for this group")]
    UnsupportedGroup,
    #[error("irrep set incomplete: sum of dim^2 is {got}, group order is {want}")]
    IncompleteIrrepSet { got: usize, want: usize },
    #[error("bad group definition: {0}")]
    BadDefinition(String),
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub order: usize,
    mul: Vec<GIdx>,
    inv: Vec<GIdx>,
    pub id: GIdx,
    pub labels: Vec<String>,
    /// Set for the shipped groups so irrep tables can be attached.
    pub kind: GroupKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(usize),
    S3,
    Custom,
}

impl GroupTable {
    #[inline(always)]
    pub fn mul(&self, a: GIdx, b: GIdx) -> GIdx {
        self.mul[a * self.order + b]
    }

    #[inline(always)]
    pub fn inv(&self, a: GIdx) -> GIdx {
        self.inv[a]
    }

    pub fn conj(&self, g: GIdx, x: GIdx) -> GIdx {
        // g x g^{-1}
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<GIdx> {
        0..self.order
    }

    pub fn label(&self, g: GIdx) -> &str {
        &self.labels[g]
    }

    fn from_mul_table(mul: Vec<Vec<GIdx>>, labels: Option<Vec<String>>, kind: GroupKind) -> Result<Self, GroupError> {
        let order = mul.len();
        if order == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in &mul {
            if row.len() != order {
                return Err(GroupError::InvalidTable("non-square table".into()));
            }
            for &v in row {
                if v >= order {
                    return Err(GroupError::InvalidTable("entry out of range".into()));
                }
                flat.push(v);
            }
        }
        // locate two-sided identity
        let mut id = None;
        for e in 0..order {
            if (0..order).all(|a| mul[e][a] == a && mul[a][e] == a) {
                id = Some(e);
                break;
            }
        }
        let id = id.ok_or_else(|| GroupError::InvalidTable("no identity".into()))?;
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a][b] == id && mul[b][a] == id {
                    inv[a] = b;
                }
            }
            if inv[a] == usize::MAX {
                return Err(GroupError::InvalidTable(format!("element {a} has no inverse")));
            }
        }
        let labels = labels.unwrap_or_else(|| (0..order).map(|i| format!("g{i}")).collect());
        let table = GroupTable { order, mul: flat, inv, id, labels, kind };
        table.validate()?;
        Ok(table)
    }

    /// Exhaustive associativity / identity / inverse / permutation checks,
    /// run once at construction.
    fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        for a in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for b in 0..n {
                seen_row[self.mul(a, b)] = true;
                seen_col[self.mul(b, a)] = true;
            }
            if !(seen_row.iter().all(|&x| x) && seen_col.iter().all(|&x| x)) {
                return Err(GroupError::InvalidTable(format!("row/col {a} not a permutation")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::InvalidTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Z_n with `mul(i, j) = (i + j) mod n`.
pub fn build_cyclic(n: usize) -> GroupTable {
    assert!(n >= 1, "cyclic group needs n >= 1");
    let mul: Vec<Vec<GIdx>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    GroupTable::from_mul_table(mul, Some(labels), GroupKind::Cyclic(n)).expect("Z_n table is valid")
}

/// S_3 generated by the transpositions u = (12) and v = (23), with
/// w = uvu = vuv = (13). Element order: e, u, v, w, uv, vu.
pub fn build_s3() -> GroupTable {
    // permutations of {0,1,2}; p[i] is the image of i
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2], // e
        [1, 0, 2], // u = (12)
        [0, 2, 1], // v = (23)
        [2, 1, 0], // w = (13)
        [1, 2, 0], // uv
        [2, 0, 1], // vu
    ];
    let compose = |a: &[usize; 3], b: &[usize; 3]| -> [usize; 3] {
        // (a b)(x) = a(b(x))
        [a[b[0]], a[b[1]], a[b[2]]]
    };
    let find = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    let mul: Vec<Vec<GIdx>> = (0..6)
        .map(|i| (0..6).map(|j| find(&compose(&perms[i], &perms[j]))).collect())
        .collect();
    let labels = ["e", "u", "v", "w", "uv", "vu"].iter().map(|s| s.to_string()).collect();
    GroupTable::from_mul_table(mul, Some(labels), GroupKind::S3).expect("S_3 table is valid")
}

/// Conjugacy classes with chosen representatives, centralizers and a
/// section `q: C -> G` satisfying `q_c r q_c^{-1} = c` and `q_r = e`.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<GIdx>>,
    pub reps: Vec<GIdx>,
    pub centralizers: Vec<Vec<GIdx>>,
    /// `sections[k][i]` is q_c for c = classes[k][i].
    pub sections: Vec<Vec<GIdx>>,
}

impl ConjugacyData {
    pub fn class_of(&self, g: GIdx) -> usize {
        self.classes.iter().position(|c| c.contains(&g)).unwrap()
    }

    pub fn section_for(&self, class: usize, c: GIdx) -> GIdx {
        let i = self.classes[class].iter().position(|&x| x == c).unwrap();
        self.sections[class][i]
    }
}

pub fn conjugacy(g: &GroupTable) -> ConjugacyData {
    let n = g.order;
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for a in 0..n {
        if assigned[a] {
            continue;
        }
        let mut class: Vec<GIdx> = (0..n).map(|h| g.conj(h, a)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            assigned[c] = true;
        }
        classes.push(class);
    }
    // representative: smallest index; for the shipped groups this matches the
    // paper's choices (e, u, uv for S_3).
    let reps: Vec<GIdx> = classes.iter().map(|c| c[0]).collect();
    let centralizers: Vec<Vec<GIdx>> = reps
        .iter()
        .map(|&r| (0..n).filter(|&x| g.mul(x, r) == g.mul(r, x)).collect())
        .collect();
    let mut sections = Vec::new();
    for (k, class) in classes.iter().enumerate() {
        let r = reps[k];
        let section: Vec<GIdx> = class
            .iter()
            .map(|&c| {
                if g.kind == GroupKind::S3 {
                    // ship the choices used in the worked S_3 material:
                    // q_u = e, q_v = w, q_w = v; q_uv = e, q_vu = v
                    match (r, c) {
                        (1, 1) => 0,
                        (1, 2) => 3,
                        (1, 3) => 2,
                        (4, 4) => 0,
                        (4, 5) => 2,
                        _ => smallest_conjugator(g, r, c),
                    }
                } else {
                    smallest_conjugator(g, r, c)
                }
            })
            .collect();
        sections.push(section);
    }
    ConjugacyData { classes, reps, centralizers, sections }
}

/// Smallest-index h with h r h^{-1} = c. Right-normalization to q_r = e is
/// automatic since h = e works for c = r.
fn smallest_conjugator(g: &GroupTable, r: GIdx, c: GIdx) -> GIdx {
    (0..g.order).find(|&h| g.conj(h, r) == c).expect("elements are conjugate")
}

/// Cocycle zeta_c(g) = q_{g c g^{-1}}^{-1} g q_c, valued in the centralizer.
pub struct Cocycle<'a> {
    pub group: &'a GroupTable,
    pub conj: &'a ConjugacyData,
    pub class: usize,
}

impl<'a> Cocycle<'a> {
    pub fn eval(&self, c: GIdx, g: GIdx) -> GIdx {
        let gr = self.group;
        let gcg = gr.conj(g, c);
        let q_gcg = self.conj.section_for(self.class, gcg);
        let q_c = self.conj.section_for(self.class, c);
        gr.mul(gr.mul(gr.inv(q_gcg), g), q_c)
    }

    /// Exhaustively checks membership in C_G and the law
    /// zeta_c(gh) = zeta_{h c h^{-1}}(g) zeta_c(h).
    pub fn check(&self) -> Result<(), GroupError> {
        let gr = self.group;
        let cls = &self.conj.classes[self.class];
        let cent = &self.conj.centralizers[self.class];
        for &c in cls {
            for g in gr.elements() {
                let z = self.eval(c, g);
                if !cent.contains(&z) {
                    return Err(GroupError::InvalidTable(format!(
                        "cocycle value not in centralizer at c={c}, g={g}"
                    )));
                }
                for h in gr.elements() {
                    let lhs = self.eval(c, gr.mul(g, h));
                    let rhs = gr.mul(self.eval(gr.conj(h, c), g), self.eval(c, h));
                    if lhs != rhs {
                        return Err(GroupError::InvalidTable(format!(
                            "cocycle law fails at c={c}, g={g}, h={h}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A unitary irrep as explicit matrices per group element.
#[derive(Clone, Debug)]
pub struct IrrepTable {
    pub dim: usize,
    pub matrices: Vec<CMatrix>,
    pub name: String,
}

impl IrrepTable {
    pub fn mat(&self, g: GIdx) -> &CMatrix {
        &self.matrices[g]
    }

    pub fn character(&self, g: GIdx) -> C64 {
        self.matrices[g].trace()
    }

    /// Homomorphism + unitarity check against a subgroup's induced table.
    pub fn check_on(&self, g: &GroupTable, elements: &[GIdx], tol: f64) -> f64 {
        let pos = |x: GIdx| elements.iter().position(|&y| y == x).unwrap();
        let mut dev: f64 = 0.0;
        for (i, &a) in elements.iter().enumerate() {
            dev = dev.max(self.matrices[i].mul(&self.matrices[i].dagger()).dev_from_identity());
            for (j, &b) in elements.iter().enumerate() {
                let prod = g.mul(a, b);
                let got = self.matrices[i].mul(&self.matrices[j]);
                dev = dev.max(got.max_dev(&self.matrices[pos(prod)]));
            }
        }
        let _ = tol;
        dev
    }
}

fn cyclic_irreps(n: usize) -> Vec<IrrepTable> {
    (0..n)
        .map(|j| {
            let matrices = (0..n)
                .map(|k| {
                    let theta = 2.0 * PI * (j * k % n) as f64 / n as f64;
                    CMatrix::from_rows(vec![vec![C64::from_polar(1.0, theta)]])
                })
                .collect();
            IrrepTable { dim: 1, matrices, name: format!("chi{j}") }
        })
        .collect()
}

fn s3_irreps() -> Vec<IrrepTable> {
    let g = build_s3();
    let trivial = IrrepTable {
        dim: 1,
        matrices: (0..6).map(|_| CMatrix::identity(1)).collect(),
        name: "1".into(),
    };
    let sign_of = |x: GIdx| if (1..=3).contains(&x) { -1.0 } else { 1.0 };
    let sigma = IrrepTable {
        dim: 1,
        matrices: (0..6)
            .map(|x| CMatrix::from_rows(vec![vec![C64::new(sign_of(x), 0.0)]]))
            .collect(),
        name: "sigma".into(),
    };
    // 2-dim irrep: rotations for the 3-cycles, reflections for the 2-cycles
    let rot = |theta: f64| {
        CMatrix::from_rows(vec![
            vec![C64::new(theta.cos(), 0.0), C64::new(-theta.sin(), 0.0)],
            vec![C64::new(theta.sin(), 0.0), C64::new(theta.cos(), 0.0)],
        ])
    };
    let refl = CMatrix::from_rows(vec![
        vec![C64::new(1.0, 0.0), ZERO],
        vec![ZERO, C64::new(-1.0, 0.0)],
    ]);
    let mut mats = vec![CMatrix::identity(2); 6];
    mats[4] = rot(2.0 * PI / 3.0); // uv
    mats[5] = rot(4.0 * PI / 3.0); // vu
    mats[1] = refl.clone(); // u
    mats[2] = refl.mul(&mats[4]); // v = u * uv
    mats[3] = refl.mul(&mats[5]); // w = u * vu
    debug_assert_eq!(g.mul(1, 4), 2);
    debug_assert_eq!(g.mul(1, 5), 3);
    let tau = IrrepTable { dim: 2, matrices: mats, name: "tau".into() };
    vec![trivial, sigma, tau]
}

/// Complete list of inequivalent unitary irreps of the centralizer
/// C_G(r_C) for a shipped group, as tables indexed by the centralizer's
/// own element order.
pub fn centralizer_irreps(g: &GroupTable, conj: &ConjugacyData, class: usize) -> Result<Vec<IrrepTable>, GroupError> {
    let cent = &conj.centralizers[class];
    match &g.kind {
        GroupKind::Cyclic(_) => Ok(cyclic_irreps(cent.len())),
        GroupKind::S3 => {
            match cent.len() {
                6 => Ok(s3_irreps()),
                // centralizer {e, u}-type: Z_2 irreps in centralizer element order
                2 => Ok(cyclic_irreps(2)),
                // centralizer {e, uv, vu}: Z_3 with uv mapping to omega;
                // centralizer order is e < uv < vu so the cyclic table lines up
                3 => Ok(cyclic_irreps(3)),
                _ => Err(GroupError::UnsupportedGroup),
            }
        }
        GroupKind::Custom => Err(GroupError::UnsupportedGroup),
    }
}

/// Full irrep list of G itself (the class of the identity).
pub fn group_irreps(g: &GroupTable) -> Result<Vec<IrrepTable>, GroupError> {
    match &g.kind {
        GroupKind::Cyclic(n) => Ok(cyclic_irreps(*n)),
        GroupKind::S3 => Ok(s3_irreps()),
        GroupKind::Custom => Err(GroupError::UnsupportedGroup),
    }
}

/// Checks centralizer irreps multiply correctly inside the centralizer.
/// Irrep tables returned by [`centralizer_irreps`] are indexed by position
/// in the centralizer list; this wires the two index schemes together.
pub fn check_centralizer_irreps(g: &GroupTable, cent: &[GIdx], irreps: &[IrrepTable]) -> f64 {
    let mut dev: f64 = 0.0;
    let sub = cent.to_vec();
    let pos = |x: GIdx| sub.iter().position(|&y| y == x).unwrap();
    for irr in irreps {
        for (i, &a) in sub.iter().enumerate() {
            dev = dev.max(irr.matrices[i].mul(&irr.matrices[i].dagger()).dev_from_identity());
            for (j, &b) in sub.iter().enumerate() {
                let got = irr.matrices[i].mul(&irr.matrices[j]);
                dev = dev.max(got.max_dev(&irr.matrices[pos(g.mul(a, b))]));
            }
        }
    }
    dev
}

/// Report from the character-orthogonality checks.
#[derive(Debug, Clone)]
pub struct OrthogonalityReport {
    pub max_deviation: f64,
    pub passed: bool,
}

/// Verifies both character orthogonality relations and the stronger
/// matrix-entry relation on a complete irrep list of G.
pub fn check_character_orthogonality(g: &GroupTable, irreps: &[IrrepTable]) -> Result<OrthogonalityReport, GroupError> {
    let n = g.order;
    let dim_sq: usize = irreps.iter().map(|r| r.dim * r.dim).sum();
    if dim_sq != n {
        return Err(GroupError::IncompleteIrrepSet { got: dim_sq, want: n });
    }
    let conj_data = conjugacy(g);
    let mut dev: f64 = 0.0;

    // sum_h Tr_pi(h^{-1}) Tr_pi'(h g) = delta_{pi,pi'} |G|/dim Tr_pi(g)
    for (a, pa) in irreps.iter().enumerate() {
        for (b, pb) in irreps.iter().enumerate() {
            for x in g.elements() {
                let mut sum = ZERO;
                for h in g.elements() {
                    sum += pa.character(g.inv(h)) * pb.character(g.mul(h, x));
                }
                let expect = if a == b {
                    pa.character(x) * C64::new(n as f64 / pa.dim as f64, 0.0)
                } else {
                    ZERO
                };
                dev = dev.max((sum - expect).norm());
            }
        }
    }

    // sum_pi Tr_pi(g^{-1}) Tr_pi(h) = delta_{class} |C_G(g)|
    for x in g.elements() {
        for y in g.elements() {
            let mut sum = ZERO;
            for irr in irreps {
                sum += irr.character(g.inv(x)) * irr.character(y);
            }
            let same_class = conj_data.class_of(x) == conj_data.class_of(y);
            let cent_size = (0..n).filter(|&z| g.mul(z, x) == g.mul(x, z)).count();
            let expect = if same_class { C64::new(cent_size as f64, 0.0) } else { ZERO };
            dev = dev.max((sum - expect).norm());
        }
    }

    // (dim/|G|) sum_g pi(g^{-1})_{ji} pi'(g)_{kl} = delta_{pi,pi'} delta_ki delta_jl
    for (a, pa) in irreps.iter().enumerate() {
        for (b, pb) in irreps.iter().enumerate() {
            for j in 0..pa.dim {
                for i in 0..pa.dim {
                    for k in 0..pb.dim {
                        for l in 0..pb.dim {
                            let mut sum = ZERO;
                            for x in g.elements() {
                                sum += pa.mat(g.inv(x))[(j, i)] * pb.mat(x)[(k, l)];
                            }
                            sum *= C64::new(pa.dim as f64 / n as f64, 0.0);
                            let expect = if a == b && k == i && j == l { ONE } else { ZERO };
                            dev = dev.max((sum - expect).norm());
                        }
                    }
                }
            }
        }
    }

    Ok(OrthogonalityReport { max_deviation: dev, passed: dev < 1e-10 })
}

/// Unique-factorization check: {q_c n : c in C, n in C_G} enumerates G once.
pub fn check_unique_factorization(g: &GroupTable, conj: &ConjugacyData) -> bool {
    for (k, class) in conj.classes.iter().enumerate() {
        let mut seen = vec![false; g.order];
        for (i, _) in class.iter().enumerate() {
            let q = conj.sections[k][i];
            for &nc in &conj.centralizers[k] {
                let x = g.mul(q, nc);
                if seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        if !seen.iter().all(|&x| x) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// JSON group definitions
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum GroupSpecJson {
    Cyclic { n: usize },
    S3 {},
    Table {
        mul: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
        #[serde(default)]
        irreps: Option<Vec<IrrepJson>>,
    },
}

#[derive(Deserialize)]
struct IrrepJson {
    name: String,
    /// matrices[g][i][j] = [re, im]
    matrices: Vec<Vec<Vec<[f64; 2]>>>,
}

/// Parses `{"kind":"cyclic","n":N} | {"kind":"s3"} | {"kind":"table",...}`.
/// Returns the group and any user-supplied irreps.
pub fn load_group(json: &str) -> Result<(GroupTable, Option<Vec<IrrepTable>>), GroupError> {
    let spec: GroupSpecJson =
        serde_json::from_str(json).map_err(|e| GroupError::BadDefinition(e.to_string()))?;
    match spec {
        GroupSpecJson::Cyclic { n } => {
            if n == 0 {
                return Err(GroupError::BadDefinition("cyclic n must be >= 1".into()));
            }
            Ok((build_cyclic(n), None))
        }
        GroupSpecJson::S3 {} => Ok((build_s3(), None)),
        GroupSpecJson::Table { mul, labels, irreps } => {
            let table = GroupTable::from_mul_table(mul, labels, GroupKind::Custom)?;
            let irreps = irreps.map(|list| {
                list.into_iter()
                    .map(|ir| {
                        let matrices: Vec<CMatrix> = ir
                            .matrices
                            .iter()
                            .map(|m| {
                                CMatrix::from_rows(
                                    m.iter()
                                        .map(|row| {
                                            row.iter().map(|&[re, im]| C64::new(re, im)).collect()
                                        })
                                        .collect(),
                                )
                            })
                            .collect();
                        let dim = matrices.first().map(|m| m.rows).unwrap_or(0);
                        IrrepTable { dim, matrices, name: ir.name }
                    })
                    .collect()
            });
            Ok((table, irreps))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = build_cyclic(1);
        assert_eq!(g.order, 1);
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn z4_arithmetic() {
        let g = build_cyclic(4);
        assert_eq!(g.inv(3), 1);
        assert_eq!(g.mul(2, 3), 1);
    }

    #[test]
    fn z3_singleton_classes() {
        let g = build_cyclic(3);
        let c = conjugacy(&g);
        assert_eq!(c.classes.len(), 3);
        assert!(c.classes.iter().all(|cl| cl.len() == 1));
        assert!(c.sections.iter().all(|s| s.iter().all(|&q| q == 0)));
        assert!(c.centralizers.iter().all(|z| z.len() == 3));
    }

    #[test]
    fn s3_relations() {
        let g = build_s3();
        let (e, u, v, w, uv, vu) = (0, 1, 2, 3, 4, 5);
        assert_eq!(g.mul(u, v), uv);
        assert_eq!(g.mul(v, u), vu);
        assert_eq!(g.mul(u, u), e);
        assert_eq!(g.mul(g.mul(u, v), u), g.mul(g.mul(v, u), v)); // uvu = vuv
        assert_eq!(g.mul(g.mul(u, v), u), w);
        assert_eq!(g.inv(uv), vu);
    }

    #[test]
    fn s3_classes_and_sections_match_worked_choices() {
        let g = build_s3();
        let c = conjugacy(&g);
        let mut sizes: Vec<usize> = c.classes.iter().map(|cl| cl.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        // class {u, v, w} with rep u: q_u = e, q_v = w, q_w = v
        let k = c.classes.iter().position(|cl| cl == &vec![1, 2, 3]).unwrap();
        assert_eq!(c.reps[k], 1);
        assert_eq!(c.section_for(k, 1), 0);
        assert_eq!(c.section_for(k, 2), 3);
        assert_eq!(c.section_for(k, 3), 2);

        // class {uv, vu} with rep uv: q_uv = e, q_vu = v
        let k2 = c.classes.iter().position(|cl| cl == &vec![4, 5]).unwrap();
        assert_eq!(c.reps[k2], 4);
        assert_eq!(c.section_for(k2, 4), 0);
        assert_eq!(c.section_for(k2, 5), 2);

        // section property q_c r q_c^{-1} = c everywhere
        for (k, class) in c.classes.iter().enumerate() {
            for &x in class {
                let q = c.section_for(k, x);
                assert_eq!(g.conj(q, c.reps[k]), x);
            }
        }
        assert!(check_unique_factorization(&g, &c));
    }

    #[test]
    fn s3_centralizer_irreps() {
        let g = build_s3();
        let c = conjugacy(&g);
        let k_e = c.classes.iter().position(|cl| cl == &vec![0]).unwrap();
        let irr = centralizer_irreps(&g, &c, k_e).unwrap();
        let mut dims: Vec<usize> = irr.iter().map(|r| r.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 2]);
        assert!(check_centralizer_irreps(&g, &c.centralizers[k_e], &irr) < 1e-12);

        let k_u = c.classes.iter().position(|cl| cl == &vec![1, 2, 3]).unwrap();
        let irr_u = centralizer_irreps(&g, &c, k_u).unwrap();
        assert_eq!(irr_u.len(), 2);
        // pi_{-1}(u) = -1: u is the second element of the centralizer {e, u}
        assert!((irr_u[1].matrices[1][(0, 0)] - C64::new(-1.0, 0.0)).norm() < 1e-12);
        assert!(check_centralizer_irreps(&g, &c.centralizers[k_u], &irr_u) < 1e-12);

        let k_uv = c.classes.iter().position(|cl| cl == &vec![4, 5]).unwrap();
        let irr_uv = centralizer_irreps(&g, &c, k_uv).unwrap();
        assert_eq!(irr_uv.len(), 3);
        let omega = C64::from_polar(1.0, 2.0 * PI / 3.0);
        // centralizer of uv is {e, uv, vu}; pi_omega(uv) = omega
        assert_eq!(c.centralizers[k_uv], vec![0, 4, 5]);
        assert!((irr_uv[1].matrices[1][(0, 0)] - omega).norm() < 1e-12);
        assert!(check_centralizer_irreps(&g, &c.centralizers[k_uv], &irr_uv) < 1e-12);
    }

    #[test]
    fn orthogonality_s3_and_z4() {
        let g = build_s3();
        let irr = group_irreps(&g).unwrap();
        let rep = check_character_orthogonality(&g, &irr).unwrap();
        assert!(rep.passed, "S_3 deviation {}", rep.max_deviation);

        let z4 = build_cyclic(4);
        let irr4 = group_irreps(&z4).unwrap();
        let rep4 = check_character_orthogonality(&z4, &irr4).unwrap();
        assert!(rep4.passed, "Z_4 deviation {}", rep4.max_deviation);
    }

    #[test]
    fn orthogonality_rejects_incomplete_set() {
        let g = build_s3();
        let mut irr = group_irreps(&g).unwrap();
        irr.retain(|r| r.name != "tau");
        match check_character_orthogonality(&g, &irr) {
            Err(GroupError::IncompleteIrrepSet { got: 2, want: 6 }) => {}
            other => panic!("expected IncompleteIrrepSet, got {other:?}"),
        }
    }

    #[test]
    fn cocycle_law_small_groups() {
        for g in [build_cyclic(4), build_s3()] {
            let conj = conjugacy(&g);
            for k in 0..conj.classes.len() {
                let z = Cocycle { group: &g, conj: &conj, class: k };
                z.check().unwrap();
            }
        }
    }

    #[test]
    fn json_loader_roundtrip() {
        let (g, _) = load_group(r#"{"kind":"cyclic","n":5}"#).unwrap();
        assert_eq!(g.order, 5);
        let (s3, _) = load_group(r#"{"kind":"s3"}"#).unwrap();
        assert_eq!(s3.order, 6);
        let (t, _) = load_group(r#"{"kind":"table","mul":[[0,1],[1,0]]}"#).unwrap();
        assert_eq!(t.order, 2);
        assert!(load_group(r#"{"kind":"table","mul":[[0,1],[0,1]]}"#).is_err());
    }
}
