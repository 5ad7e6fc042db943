//! The regular branched cover attached to `(G, signature, generating vector)`
//! as a combinatorial surface, and the integer symplectic representation of
//! its deck group on first homology.
//!
//! Construction: sheets are the elements of `G`; the monodromy of the loop
//! attached to a generating-vector entry acts by right multiplication, and a
//! deck transformation `h` acts by left multiplication, so the deck action is
//! cellular. The 2-cells are one disc per cycle of each branch rotation plus
//! one disc per sheet carrying the surface relator. A spanning tree of the
//! 1-skeleton is collapsed to a single vertex, 2-cells are merged along a
//! spanning tree of the dual graph (eliminating one edge per merged face, with
//! unit pivots, so homology comes out as a free lattice on the surviving
//! edges), and intersection numbers are read off the rotation system at the
//! vertex. A symplectic Gram-Schmidt over `Z` then produces a basis with the
//! canonical pairing `J`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::intmat::{column_lattice_basis, unimodular_inverse, IntMatrix};
use crate::perm::{Perm, PermGroup};
use crate::ramification::{rh_genus, Signature};
use crate::theta::{canonical_j, is_symplectic, AffineMapGF2};
use crate::{Error, Result};

/// A generating vector `(alpha_1, beta_1, ..., alpha_g0, beta_g0, gamma_1,
/// ..., gamma_r)` with `prod [alpha_i, beta_i] prod gamma_j = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratingVector {
    #[serde(default)]
    pub handles: Vec<(Perm, Perm)>,
    pub branch: Vec<Perm>,
}

impl GeneratingVector {
    pub fn from_branch(branch: Vec<Perm>) -> Self {
        GeneratingVector { handles: Vec::new(), branch }
    }

    /// All entries, handles flattened first.
    pub fn entries(&self) -> Vec<Perm> {
        let mut out = Vec::new();
        for (a, b) in &self.handles {
            out.push(a.clone());
            out.push(b.clone());
        }
        out.extend(self.branch.iter().cloned());
        out
    }

    /// `prod [alpha_i, beta_i] prod gamma_j`.
    pub fn total_product(&self, degree: usize) -> Perm {
        let mut p = Perm::identity(degree);
        for (a, b) in &self.handles {
            p = p
                .compose(a)
                .compose(b)
                .compose(&a.inverse())
                .compose(&b.inverse());
        }
        for g in &self.branch {
            p = p.compose(g);
        }
        p
    }
}

/// Group, signature, generating vector.
#[derive(Clone, Debug)]
pub struct RamificationData {
    pub group: PermGroup,
    pub signature: Signature,
    pub vector: GeneratingVector,
}

impl RamificationData {
    pub fn new(group: PermGroup, signature: Signature, vector: GeneratingVector) -> Self {
        RamificationData { group, signature, vector }
    }
}

/// Checks every invariant of the data and returns the genus of the cover.
pub fn validate(data: &RamificationData) -> Result<u64> {
    let g = &data.group;
    let sig = &data.signature;
    let vec = &data.vector;
    if vec.handles.len() != sig.quotient_genus {
        return Err(Error::InvalidRamification(format!(
            "signature has quotient genus {} but the vector carries {} handle pairs",
            sig.quotient_genus,
            vec.handles.len()
        )));
    }
    if vec.branch.len() != sig.r() {
        return Err(Error::InvalidRamification(format!(
            "signature has {} branch orders but the vector has {} branch entries",
            sig.r(),
            vec.branch.len()
        )));
    }
    for p in vec.entries() {
        if !g.contains(&p) {
            return Err(Error::InvalidRamification(
                "generating-vector entry is not an element of the group".into(),
            ));
        }
    }
    for (gamma, &c) in vec.branch.iter().zip(&sig.branch_orders) {
        if c < 2 {
            return Err(Error::InvalidRamification("branch orders must be >= 2".into()));
        }
        if gamma.order() != c {
            return Err(Error::InvalidRamification(format!(
                "branch entry has order {} but the signature requires {}",
                gamma.order(),
                c
            )));
        }
    }
    if !vec.total_product(g.degree()).is_identity() {
        return Err(Error::InvalidRamification(
            "generating vector does not have product one".into(),
        ));
    }
    let generated = PermGroup::from_generators(&vec.entries())?;
    if generated.order() != g.order() {
        return Err(Error::InvalidRamification(format!(
            "vector generates a subgroup of order {} inside a group of order {}",
            generated.order(),
            g.order()
        )));
    }
    rh_genus(g.order() as u64, sig)
}

/// The rational representation `rho_r : G -> Sp_{2g}(Z)` of a built cover.
pub struct SymplecticRep {
    genus: u64,
    group: PermGroup,
    matrices: Vec<IntMatrix>,
}

impl SymplecticRep {
    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn matrix_by_index(&self, idx: usize) -> &IntMatrix {
        &self.matrices[idx]
    }

    pub fn matrix(&self, h: &Perm) -> Result<&IntMatrix> {
        let idx = self
            .group
            .element_index(h)
            .ok_or_else(|| Error::InvalidInput("element is not in the group".into()))?;
        Ok(&self.matrices[idx])
    }

    pub fn affine_map(&self, h: &Perm) -> Result<AffineMapGF2> {
        AffineMapGF2::from_symplectic(self.matrix(h)?)
    }

    /// Affine maps of the given elements, deduplicated, identity dropped.
    pub fn affine_maps_of(&self, elements: &[Perm]) -> Result<Vec<AffineMapGF2>> {
        let mut seen = BTreeSet::new();
        let mut maps = Vec::new();
        for h in elements {
            let idx = self
                .group
                .element_index(h)
                .ok_or_else(|| Error::InvalidInput("element is not in the group".into()))?;
            if seen.insert(idx) {
                let m = AffineMapGF2::from_symplectic(&self.matrices[idx])?;
                if !m.is_identity() {
                    maps.push(m);
                }
            }
        }
        Ok(maps)
    }
}

/// Deck-transformation fixed points: over the `i`-th branch point the fiber
/// is the coset space `G/<gamma_i>`, and `h` fixes `x<gamma_i>` iff
/// `x^-1 h x` lies in `<gamma_i>`. Off the branch fibers the action is free.
pub fn fixed_point_count(h: &Perm, data: &RamificationData) -> Result<u64> {
    if h.is_identity() {
        return Err(Error::InvalidInput(
            "fixed points of the identity are the whole curve".into(),
        ));
    }
    if !data.group.contains(h) {
        return Err(Error::InvalidInput("element is not in the group".into()));
    }
    let mut count = 0u64;
    for gamma in &data.vector.branch {
        let stab = cyclic_set(gamma);
        for x in coset_reps(&data.group, gamma) {
            let conj = x.inverse().compose(h).compose(&x);
            if stab.contains(&conj) {
                count += 1;
            }
        }
    }
    Ok(count)
}

fn cyclic_set(g: &Perm) -> BTreeSet<Perm> {
    let mut set = BTreeSet::new();
    let mut p = Perm::identity(g.degree());
    loop {
        let inserted = set.insert(p.clone());
        debug_assert!(inserted);
        p = p.compose(g);
        if p.is_identity() {
            break;
        }
    }
    set
}

/// One representative per left coset `x<gamma>` in `G`.
fn coset_reps(group: &PermGroup, gamma: &Perm) -> Vec<Perm> {
    let mut seen = vec![false; group.order()];
    let mut reps = Vec::new();
    for idx in 0..group.order() {
        if seen[idx] {
            continue;
        }
        let x = group.element(idx).clone();
        reps.push(x.clone());
        let mut p = x;
        loop {
            seen[group.element_index(&p).expect("closed")] = true;
            p = p.compose(gamma);
            if seen[group.element_index(&p).expect("closed")] {
                break;
            }
        }
    }
    reps
}

/// Quotient data of a subgroup `H <= G` acting on the same cover: the genus
/// of `C/H` and the branch orders (> 1) of `C -> C/H`, ascending.
pub fn subgroup_action(h: &PermGroup, data: &RamificationData) -> Result<(u64, Vec<u64>)> {
    if !h.is_subgroup_of(&data.group) {
        return Err(Error::NotASubgroup(
            "subgroup_action needs H contained in the acting group".into(),
        ));
    }
    let genus = validate(data)?;
    let mut branch = Vec::new();
    for gamma in &data.vector.branch {
        let stab_cycle = cyclic_set(gamma);
        // H-orbits on the fiber of cosets x<gamma>.
        let reps = coset_reps(&data.group, gamma);
        let mut key_of = HashMap::new(); // least element of the coset -> fiber point id
        for (pt, x) in reps.iter().enumerate() {
            let mut least = None::<Perm>;
            let mut p = x.clone();
            loop {
                least = Some(match least {
                    None => p.clone(),
                    Some(l) => l.min(p.clone()),
                });
                p = p.compose(gamma);
                if &p == x {
                    break;
                }
            }
            key_of.insert(least.unwrap(), pt);
        }
        let coset_key = |y: &Perm| -> Perm {
            let mut least = y.clone();
            let mut p = y.compose(gamma);
            while &p != y {
                if p < least {
                    least = p.clone();
                }
                p = p.compose(gamma);
            }
            least
        };
        let mut visited = vec![false; reps.len()];
        for (pt, x) in reps.iter().enumerate() {
            if visited[pt] {
                continue;
            }
            // BFS the H-orbit of this fiber point.
            let mut queue = vec![pt];
            visited[pt] = true;
            while let Some(q) = queue.pop() {
                for k in h.generators() {
                    let moved = coset_key(&k.compose(&reps[q]));
                    let j = key_of[&moved];
                    if !visited[j] {
                        visited[j] = true;
                        queue.push(j);
                    }
                }
            }
            // stabilizer order |H meet x<gamma>x^-1|
            let stab_order = stab_cycle
                .iter()
                .filter(|s| h.contains(&x.compose(s).compose(&x.inverse())))
                .count() as u64;
            if stab_order > 1 {
                branch.push(stab_order);
            }
        }
    }
    branch.sort_unstable();
    // 2g_C - 2 = |H| (2g' - 2) + sum over branch points of |H|(1 - 1/s)
    let order = h.order() as i128;
    let mut num = 2 * genus as i128 - 2;
    for &s in &branch {
        num -= order - order / s as i128;
    }
    let two_gp = num / order + 2;
    if num % order != 0 || two_gp % 2 != 0 || two_gp < 0 {
        return Err(Error::Internal(format!(
            "subgroup quotient genus is not a nonnegative integer ({num}/{order})"
        )));
    }
    Ok(((two_gp / 2) as u64, branch))
}

// ---------------------------------------------------------------------------
// Cover complex and homology basis
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum End {
    Tail,
    Head,
}

struct CoverComplex {
    sheets: usize,
    labels: usize,
    /// one-line sheet action per label: x -> x * step
    rmul: Vec<Vec<usize>>,
    rinv: Vec<Vec<usize>>,
    /// faces as signed edge words; edge id = sheet * labels + label
    faces: Vec<Vec<(usize, i8)>>,
}

impl CoverComplex {
    fn edge_tail(&self, e: usize) -> usize {
        e / self.labels
    }

    fn edge_label(&self, e: usize) -> usize {
        e % self.labels
    }

    fn edge_head(&self, e: usize) -> usize {
        self.rmul[self.edge_label(e)][self.edge_tail(e)]
    }

    fn edge_count(&self) -> usize {
        self.sheets * self.labels
    }
}

fn build_complex(data: &RamificationData) -> Result<CoverComplex> {
    let group = &data.group;
    let n = group.order();
    let g0 = data.signature.quotient_genus;
    let steps: Vec<Perm> = data.vector.entries();
    let labels = steps.len();

    let mut rmul = Vec::with_capacity(labels);
    let mut rinv = Vec::with_capacity(labels);
    for step in &steps {
        let mut fwd = vec![0usize; n];
        let mut bwd = vec![0usize; n];
        #[allow(clippy::needless_range_loop)]
        for x in 0..n {
            let y = group
                .element_index(&group.element(x).compose(step))
                .expect("group is closed");
            fwd[x] = y;
            bwd[y] = x;
        }
        rmul.push(fwd);
        rinv.push(bwd);
    }

    let mut faces = Vec::new();

    // One disc per cycle of the branch rotation x -> x * gamma_j.
    for (j, &c) in data.signature.branch_orders.iter().enumerate() {
        let label = 2 * g0 + j;
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut word = Vec::new();
            let mut x = start;
            loop {
                seen[x] = true;
                word.push((x * labels + label, 1i8));
                x = rmul[label][x];
                if x == start {
                    break;
                }
            }
            if word.len() as u64 != c {
                return Err(Error::Internal(format!(
                    "branch rotation cycle of length {} for order {}",
                    word.len(),
                    c
                )));
            }
            faces.push(word);
        }
    }

    // Relator word W = [a1,b1]...[ag,bg] e_1 ... e_r as signed labels; the
    // global disc at each sheet carries W^-1 so every edge is traversed once
    // forwards (in its branch disc or in W) and once backwards.
    let mut relator: Vec<(usize, i8)> = Vec::new();
    for i in 0..g0 {
        relator.extend([(2 * i, 1), (2 * i + 1, 1), (2 * i, -1), (2 * i + 1, -1)]);
    }
    for j in 0..data.signature.r() {
        relator.push((2 * g0 + j, 1));
    }
    let inverse_word: Vec<(usize, i8)> =
        relator.iter().rev().map(|&(l, s)| (l, -s)).collect();
    for start in 0..n {
        let mut word = Vec::new();
        let mut x = start;
        for &(label, sign) in &inverse_word {
            if sign > 0 {
                word.push((x * labels + label, 1i8));
                x = rmul[label][x];
            } else {
                let from = rinv[label][x];
                word.push((from * labels + label, -1i8));
                x = from;
            }
        }
        if x != start {
            return Err(Error::Internal("relator lift did not close".into()));
        }
        if !word.is_empty() {
            faces.push(word);
        }
    }

    let complex = CoverComplex { sheets: n, labels, rmul, rinv, faces };

    // Orientability bookkeeping: every edge appears exactly once with each sign.
    let mut signs = vec![(0u32, 0u32); complex.edge_count()];
    for face in &complex.faces {
        for &(e, s) in face {
            if s > 0 {
                signs[e].0 += 1;
            } else {
                signs[e].1 += 1;
            }
        }
    }
    if signs.iter().any(|&(p, m)| p != 1 || m != 1) {
        return Err(Error::Internal("face words are not a closed oriented surface".into()));
    }
    Ok(complex)
}

/// The homology data extracted from a complex: 2g surviving edges, the class
/// map on all contracted edges, the rotation order, and the tree chains.
struct HomologyBasis {
    /// contracted index per original edge (tree edges: None)
    contracted: Vec<Option<usize>>,
    /// class of each contracted edge in the surviving-edge basis
    classes: Vec<Vec<BigInt>>,
    /// tree path chains root -> vertex, as signed original edges
    tree_path: Vec<Vec<(usize, i8)>>,
    /// surviving (basis) edges, as contracted indices
    basis_edges: Vec<usize>,
    /// intersection matrix of the surviving-edge classes
    omega: IntMatrix,
}

fn homology_basis(complex: &CoverComplex, expected_genus: u64) -> Result<HomologyBasis> {
    let n = complex.sheets;
    let e0 = complex.edge_count();

    // Spanning tree of the 1-skeleton by BFS from sheet 0.
    let mut tree_edge = vec![false; e0];
    let mut tree_path: Vec<Vec<(usize, i8)>> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for label in 0..complex.labels {
            let e = v * complex.labels + label;
            let w = complex.rmul[label][v];
            if !seen[w] {
                seen[w] = true;
                tree_edge[e] = true;
                let mut path = tree_path[v].clone();
                path.push((e, 1));
                tree_path[w] = path;
                queue.push_back(w);
            }
            let u = complex.rinv[label][v];
            let eb = u * complex.labels + label;
            if !seen[u] {
                seen[u] = true;
                tree_edge[eb] = true;
                let mut path = tree_path[v].clone();
                path.push((eb, -1));
                tree_path[u] = path;
                queue.push_back(u);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Internal("cover is not connected".into()));
    }

    // Contract the tree.
    let mut contracted = vec![None; e0];
    let mut non_tree = Vec::new();
    for e in 0..e0 {
        if !tree_edge[e] {
            contracted[e] = Some(non_tree.len());
            non_tree.push(e);
        }
    }
    let ep = non_tree.len();
    let words: Vec<Vec<(usize, i8)>> = complex
        .faces
        .iter()
        .map(|face| {
            face.iter()
                .filter_map(|&(e, s)| contracted[e].map(|c| (c, s)))
                .collect()
        })
        .collect();
    if words.iter().any(Vec::is_empty) {
        return Err(Error::Internal("a face collapsed into the spanning tree".into()));
    }

    // Occurrences of each contracted edge: exactly one + and one -.
    let mut occ = vec![[(usize::MAX, usize::MAX); 2]; ep];
    for (f, word) in words.iter().enumerate() {
        for (p, &(e, s)) in word.iter().enumerate() {
            occ[e][usize::from(s < 0)] = (f, p);
        }
    }

    // Rotation system at the single vertex: walk the corners. The corner
    // after position p leaves through the tail of word[p+1]; the next corner
    // sits just past the opposite occurrence of that letter.
    let total_corners: usize = words.iter().map(Vec::len).sum();
    let mut rot_pos: HashMap<(usize, End), usize> = HashMap::new();
    let (mut f, mut p) = (0usize, 0usize);
    for step in 0..total_corners {
        let len = words[f].len();
        let (e, s) = words[f][(p + 1) % len];
        let end = if s > 0 { End::Tail } else { End::Head };
        if rot_pos.insert((e, end), step).is_some() {
            return Err(Error::Internal("half-edge visited twice in the vertex link".into()));
        }
        let (nf, np) = occ[e][usize::from(s > 0)];
        (f, p) = (nf, np);
    }
    if (f, p) != (0, 0) || rot_pos.len() != 2 * ep {
        return Err(Error::Internal("vertex link is not a single circle".into()));
    }

    // Chord-crossing intersection numbers of edge classes.
    let circle = 2 * ep;
    let between = |a: usize, b: usize, x: usize| -> bool {
        // strictly between a and b walking forward around the circle
        if a == b {
            return false;
        }
        let fwd = |from: usize, to: usize| (to + circle - from) % circle;
        fwd(a, x) > 0 && fwd(a, x) < fwd(a, b)
    };
    let crossing = |e: usize, fe: usize| -> i64 {
        if e == fe {
            return 0;
        }
        let he = rot_pos[&(e, End::Head)];
        let te = rot_pos[&(e, End::Tail)];
        let hf = rot_pos[&(fe, End::Head)];
        let tf = rot_pos[&(fe, End::Tail)];
        let tf_in = between(he, te, tf);
        let hf_in = between(he, te, hf);
        match (tf_in, hf_in) {
            (true, false) => 1,
            (false, true) => -1,
            _ => 0,
        }
    };

    // Boundaries must pair to zero with every edge class.
    for word in &words {
        for x in 0..ep {
            let mut acc = 0i64;
            for &(e, s) in word {
                acc += i64::from(s) * crossing(e, x);
            }
            if acc != 0 {
                return Err(Error::Internal("a 2-cell boundary has nonzero pairing".into()));
            }
        }
    }

    // Merge faces along a spanning tree of the dual graph: each non-root face
    // is discovered through a parent edge occurring once in it and once in an
    // earlier face; eliminating that edge with a unit pivot solves the face
    // relation. Homology is then free on the surviving edges.
    let fcount = words.len();
    let mut parent_edge: Vec<Option<usize>> = vec![None; fcount];
    let mut depth = vec![usize::MAX; fcount];
    depth[0] = 0;
    let mut order_found = vec![0usize];
    let mut queue = VecDeque::from([0usize]);
    let mut eliminated = vec![false; ep];
    while let Some(fi) = queue.pop_front() {
        for &(e, _) in &words[fi] {
            let (fa, _) = occ[e][0];
            let (fb, _) = occ[e][1];
            let other = if fa == fi { fb } else { fa };
            if other != fi && depth[other] == usize::MAX && !eliminated[e] {
                depth[other] = depth[fi] + 1;
                parent_edge[other] = Some(e);
                eliminated[e] = true;
                order_found.push(other);
                queue.push_back(other);
            }
        }
    }
    if depth.contains(&usize::MAX) {
        return Err(Error::Internal("dual graph is not connected".into()));
    }

    let basis_edges: Vec<usize> = (0..ep).filter(|&e| !eliminated[e]).collect();
    let genus2 = basis_edges.len();
    if genus2 != 2 * expected_genus as usize {
        return Err(Error::Internal(format!(
            "homology rank {genus2} does not match 2g = {}",
            2 * expected_genus
        )));
    }
    let mut basis_index = vec![usize::MAX; ep];
    for (i, &e) in basis_edges.iter().enumerate() {
        basis_index[e] = i;
    }

    // Back-substitute deepest-first: a face's relation involves its own
    // parent edge (unit pivot), parent edges of already-processed children,
    // and surviving edges.
    let mut classes: Vec<Option<Vec<BigInt>>> = vec![None; ep];
    for &e in &basis_edges {
        let mut v = vec![BigInt::zero(); genus2];
        v[basis_index[e]] = BigInt::one();
        classes[e] = Some(v);
    }
    let mut by_depth = order_found;
    by_depth.sort_by_key(|&fi| std::cmp::Reverse(depth[fi]));
    for fi in by_depth {
        let Some(pe) = parent_edge[fi] else {
            continue; // root face handled below
        };
        let mut pivot_sign = 0i8;
        let mut acc = vec![BigInt::zero(); genus2];
        for &(e, s) in &words[fi] {
            if e == pe {
                pivot_sign = s;
                continue;
            }
            let class = classes[e]
                .as_ref()
                .ok_or_else(|| Error::Internal("elimination order broke".into()))?;
            for (a, c) in acc.iter_mut().zip(class) {
                if s > 0 {
                    *a += c;
                } else {
                    *a -= c;
                }
            }
        }
        if pivot_sign == 0 {
            return Err(Error::Internal("parent edge missing from its face".into()));
        }
        if pivot_sign > 0 {
            for a in &mut acc {
                *a = -a.clone();
            }
        }
        classes[pe] = Some(acc);
    }
    // The root face relation must now be implied: its class sum vanishes.
    let mut acc = vec![BigInt::zero(); genus2];
    for &(e, s) in &words[0] {
        let class = classes[e].as_ref().expect("all classes resolved");
        for (a, c) in acc.iter_mut().zip(class) {
            if s > 0 {
                *a += c;
            } else {
                *a -= c;
            }
        }
    }
    if acc.iter().any(|x| !x.is_zero()) {
        return Err(Error::Internal("root face relation is not implied".into()));
    }
    let classes: Vec<Vec<BigInt>> = classes.into_iter().map(Option::unwrap).collect();

    // Intersection form on the surviving-edge classes.
    let mut omega = IntMatrix::zeros(genus2, genus2);
    for (i, &ei) in basis_edges.iter().enumerate() {
        for (j, &ej) in basis_edges.iter().enumerate() {
            omega[(i, j)] = crossing(ei, ej).into();
        }
    }

    Ok(HomologyBasis {
        contracted,
        classes,
        tree_path,
        basis_edges,
        omega,
    })
}

/// Symplectic Gram-Schmidt over `Z`: returns `W` with `W^T omega W = J`
/// (columns `a_1..a_g, b_1..b_g`).
fn symplectic_basis(omega: &IntMatrix) -> Result<IntMatrix> {
    let dim = omega.rows();
    if !dim.is_multiple_of(2) {
        return Err(Error::Internal("odd-dimensional intersection lattice".into()));
    }
    let g = dim / 2;
    let pair = |x: &[BigInt], y: &[BigInt]| -> BigInt {
        let mut acc = BigInt::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !omega[(i, j)].is_zero() {
                    acc += xi * yj * &omega[(i, j)];
                }
            }
        }
        acc
    };

    let mut basis: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut a_cols: Vec<Vec<BigInt>> = Vec::new();
    let mut b_cols: Vec<Vec<BigInt>> = Vec::new();

    for _ in 0..g {
        let a = basis[0].clone();
        // integer combination of the basis pairing to gcd 1 with a
        let ts: Vec<BigInt> = basis.iter().map(|v| pair(&a, v)).collect();
        let mut gcd = BigInt::zero();
        let mut coeffs = vec![BigInt::zero(); basis.len()];
        for (k, t) in ts.iter().enumerate() {
            if t.is_zero() {
                continue;
            }
            if gcd.is_zero() {
                gcd = t.abs();
                coeffs[k] = if t.is_negative() { -BigInt::one() } else { BigInt::one() };
            } else {
                let e = num_integer::Integer::extended_gcd(&gcd, t);
                for c in &mut coeffs {
                    *c = &*c * &e.x;
                }
                coeffs[k] = e.y.clone();
                gcd = e.gcd;
            }
        }
        if !gcd.is_one() {
            return Err(Error::Internal(format!(
                "intersection form is not unimodular (gcd {gcd})"
            )));
        }
        let mut b = vec![BigInt::zero(); dim];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (bi, vi) in b.iter_mut().zip(&basis[k]) {
                *bi += c * vi;
            }
        }
        debug_assert!(pair(&a, &b).is_one());

        // project the remaining basis into the orthogonal complement:
        // v' = v + <b,v> a - <a,v> b
        let mut projected = IntMatrix::zeros(dim, basis.len().saturating_sub(1));
        for (k, v) in basis.iter().enumerate().skip(1) {
            let pb = pair(&b, v);
            let pa = pair(&a, v);
            for i in 0..dim {
                projected[(i, k - 1)] = &v[i] + &pb * &a[i] - &pa * &b[i];
            }
        }
        basis = column_lattice_basis(&projected);
        a_cols.push(a);
        b_cols.push(b);
    }

    let mut w = IntMatrix::zeros(dim, dim);
    for (k, col) in a_cols.iter().chain(b_cols.iter()).enumerate() {
        for i in 0..dim {
            w[(i, k)] = col[i].clone();
        }
    }
    let j = canonical_j(g);
    if w.transpose().mul(omega).mul(&w) != j {
        return Err(Error::Internal("symplectic normalization failed".into()));
    }
    Ok(w)
}

/// Builds the cover, extracts a canonical symplectic homology basis, and
/// returns the integer matrix of every deck transformation. The result is
/// verified: symplectic, `R_id = I`, and the Lefschetz trace
/// `tr R_h = 2 - |Fix h|` for every nontrivial `h`.
pub fn build_symplectic_rep(data: &RamificationData) -> Result<SymplecticRep> {
    let genus = validate(data)?;
    let group = &data.group;
    let n = group.order();

    if genus == 0 {
        let matrices = vec![IntMatrix::zeros(0, 0); n];
        let rep = SymplecticRep { genus, group: group.clone(), matrices };
        verify_rep(&rep, data)?;
        return Ok(rep);
    }

    let complex = build_complex(data)?;
    let euler = n as i64 - complex.edge_count() as i64 + complex.faces.len() as i64;
    if euler != 2 - 2 * genus as i64 {
        return Err(Error::Internal(format!(
            "Euler characteristic {euler} does not match genus {genus}"
        )));
    }
    let basis = homology_basis(&complex, genus)?;
    let w = symplectic_basis(&basis.omega)?;
    let w_inv = unimodular_inverse(&w)
        .ok_or_else(|| Error::Internal("symplectic base change is not unimodular".into()))?;
    let dim = 2 * genus as usize;

    // T: original-edge -> final coordinates (class map composed with W^-1);
    // Psi: final basis vectors as cycles in the original complex.
    let e0 = complex.edge_count();
    let mut t_cols: Vec<Option<Vec<BigInt>>> = vec![None; e0];
    #[allow(clippy::needless_range_loop)]
    for e in 0..e0 {
        if let Some(c) = basis.contracted[e] {
            let class = &basis.classes[c];
            let col = (0..dim)
                .map(|i| {
                    let mut acc = BigInt::zero();
                    for (k, cl) in class.iter().enumerate() {
                        if !cl.is_zero() {
                            acc += &w_inv[(i, k)] * cl;
                        }
                    }
                    acc
                })
                .collect();
            t_cols[e] = Some(col);
        }
    }
    let mut psi = IntMatrix::zeros(e0, dim);
    {
        // original edge behind each contracted index
        let mut orig_of = vec![usize::MAX; basis.classes.len()];
        for (orig, c) in basis.contracted.iter().enumerate() {
            if let Some(c) = c {
                orig_of[*c] = orig;
            }
        }
        // fundamental cycle of a non-tree edge e: path(root->tail) + e - path(root->head)
        let mut add_chain = |e: usize, k: usize, scale: &BigInt| {
            let tail = complex.edge_tail(e);
            let head = complex.edge_head(e);
            for &(te, s) in &basis.tree_path[tail] {
                let v = BigInt::from(i64::from(s)) * scale;
                psi[(te, k)] += v;
            }
            psi[(e, k)] += scale.clone();
            for &(te, s) in &basis.tree_path[head] {
                let v = BigInt::from(-i64::from(s)) * scale;
                psi[(te, k)] += v;
            }
        };
        for k in 0..dim {
            for (j, &ce) in basis.basis_edges.iter().enumerate() {
                let coeff = w[(j, k)].clone();
                if coeff.is_zero() {
                    continue;
                }
                add_chain(orig_of[ce], k, &coeff);
            }
        }
    }

    // Matrices of the generating-vector entries by pushing each basis cycle
    // through the deck permutation of edges.
    let entries = data.vector.entries();
    let mut gen_matrices: HashMap<usize, IntMatrix> = HashMap::new();
    for entry in &entries {
        let h_idx = group.element_index(entry).expect("validated");
        if gen_matrices.contains_key(&h_idx) {
            continue;
        }
        let h = group.element(h_idx);
        // sheet map x -> h * x
        let mut sheet_to = vec![0usize; n];
        #[allow(clippy::needless_range_loop)]
        for x in 0..n {
            sheet_to[x] = group
                .element_index(&h.compose(group.element(x)))
                .expect("closed");
        }
        let mut r = IntMatrix::zeros(dim, dim);
        for e in 0..e0 {
            // h_* moves the mass on e to the edge (h tail, same label)
            let target = sheet_to[complex.edge_tail(e)] * complex.labels + complex.edge_label(e);
            let Some(t_col) = &t_cols[target] else {
                continue; // tree edge: class zero
            };
            for k in 0..dim {
                let m = &psi[(e, k)];
                if m.is_zero() {
                    continue;
                }
                for (i, ti) in t_col.iter().enumerate() {
                    if !ti.is_zero() {
                        r[(i, k)] += ti * m;
                    }
                }
            }
        }
        gen_matrices.insert(h_idx, r);
    }

    // Extend to the whole group by the homomorphism property.
    let mut matrices: Vec<Option<IntMatrix>> = vec![None; n];
    let id_idx = group.element_index(&Perm::identity(group.degree())).expect("identity");
    matrices[id_idx] = Some(IntMatrix::identity(dim));
    let mut queue = VecDeque::from([id_idx]);
    while let Some(w_idx) = queue.pop_front() {
        let w_mat = matrices[w_idx].clone().expect("visited");
        for entry in &entries {
            let s_idx = group.element_index(entry).expect("validated");
            let u_idx = group
                .element_index(&group.element(w_idx).compose(entry))
                .expect("closed");
            if matrices[u_idx].is_none() {
                matrices[u_idx] = Some(w_mat.mul(&gen_matrices[&s_idx]));
                queue.push_back(u_idx);
            }
        }
    }
    let matrices: Vec<IntMatrix> = matrices
        .into_iter()
        .map(|m| m.ok_or_else(|| Error::Internal("group not reached by generators".into())))
        .collect::<Result<_>>()?;

    let rep = SymplecticRep { genus, group: group.clone(), matrices };
    verify_rep(&rep, data)?;
    Ok(rep)
}

/// Always-on verification of a built representation.
fn verify_rep(rep: &SymplecticRep, data: &RamificationData) -> Result<()> {
    let group = &rep.group;
    let dim = 2 * rep.genus as usize;
    let id_idx = group
        .element_index(&Perm::identity(group.degree()))
        .expect("identity");
    if !rep.matrices[id_idx].is_identity() {
        return Err(Error::Internal("identity element has a nontrivial matrix".into()));
    }
    let mut mod2_trivial = Vec::new();
    for (idx, m) in rep.matrices.iter().enumerate() {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::Internal("matrix of wrong shape".into()));
        }
        if dim > 0 && !is_symplectic(m) {
            return Err(Error::Internal(format!(
                "matrix of element {idx} does not preserve the pairing"
            )));
        }
        let h = group.element(idx);
        let trace = m.trace();
        if h.is_identity() {
            if trace != BigInt::from(2 * rep.genus) {
                return Err(Error::Internal("identity trace != 2g".into()));
            }
        } else {
            let fix = fixed_point_count(h, data)?;
            if trace != BigInt::from(2i64 - fix as i64) {
                return Err(Error::Internal(format!(
                    "Lefschetz check failed for element {idx}: trace {trace}, |Fix| {fix}"
                )));
            }
        }
        if dim > 0 && m.mod2().is_identity() && !h.is_identity() {
            mod2_trivial.push(idx);
        }
    }
    // Only the hyperelliptic involution may act trivially mod 2 (genus >= 2).
    if rep.genus >= 2 {
        if mod2_trivial.len() > 1 {
            return Err(Error::Internal(
                "more than one nontrivial element acts trivially mod 2".into(),
            ));
        }
        if let Some(&idx) = mod2_trivial.first() {
            let m = &rep.matrices[idx];
            if *m != IntMatrix::identity(dim).neg() || group.element(idx).order() != 2 {
                return Err(Error::Internal(
                    "a non-hyperelliptic element acts trivially mod 2".into(),
                ));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Generating-vector search
// ---------------------------------------------------------------------------

/// Exhaustive search for generating vectors with the prescribed signature,
/// deduplicated up to simultaneous conjugation. Deterministic: candidates are
/// enumerated in element order and each class is represented by its least
/// conjugate.
pub fn find_generating_vectors(
    group: &PermGroup,
    signature: &Signature,
    max_candidates: u64,
) -> Result<Vec<GeneratingVector>> {
    if signature.r() > 8 {
        return Err(Error::InvalidInput("signatures with r > 8 are out of range".into()));
    }
    // Quick Riemann-Hurwitz rejection (also needed so searches for
    // impossible signatures return empty rather than scanning).
    if rh_genus(group.order() as u64, signature).is_err() {
        return Ok(Vec::new());
    }
    let n = group.order();
    let g0 = signature.quotient_genus;
    let r = signature.r();

    // candidate element indices per branch position
    let mut by_order: HashMap<u64, Vec<usize>> = HashMap::new();
    for idx in 0..n {
        by_order.entry(group.element(idx).order()).or_default().push(idx);
    }
    let branch_candidates: Vec<&[usize]> = signature
        .branch_orders
        .iter()
        .map(|c| by_order.get(c).map_or(&[][..], Vec::as_slice))
        .collect();
    if branch_candidates.iter().any(|c| c.is_empty()) {
        return Ok(Vec::new());
    }

    // enumeration size guard: free slots are the handles and all but the
    // last branch entry (determined by the product condition)
    let mut space = 1u128;
    for _ in 0..2 * g0 {
        space = space.saturating_mul(n as u128);
    }
    for cands in branch_candidates.iter().take(r.saturating_sub(1)) {
        space = space.saturating_mul(cands.len() as u128);
    }
    if space > max_candidates as u128 {
        return Err(Error::SearchCapExceeded { cap: max_candidates as usize });
    }

    let mut canonical: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();

    let mut slots = vec![0usize; 2 * g0 + r.saturating_sub(1)];
    let slot_size = |k: usize| -> usize {
        if k < 2 * g0 {
            n
        } else {
            branch_candidates[k - 2 * g0].len()
        }
    };
    let total_slots = slots.len();

    let mut cursor = vec![0usize; total_slots];
    'enumerate: loop {
        // materialize the candidate: handle slots range over the whole
        // group, branch slots over the elements of the right order
        for k in 0..total_slots {
            slots[k] = if k < 2 * g0 {
                cursor[k]
            } else {
                branch_candidates[k - 2 * g0][cursor[k]]
            };
        }
        // determine the last branch entry (or validate the empty case)
        let mut prefix = Perm::identity(group.degree());
        for i in 0..g0 {
            let a = group.element(slots[2 * i]);
            let b = group.element(slots[2 * i + 1]);
            prefix = prefix
                .compose(a)
                .compose(b)
                .compose(&a.inverse())
                .compose(&b.inverse());
        }
        for k in 0..r.saturating_sub(1) {
            prefix = prefix.compose(group.element(slots[2 * g0 + k]));
        }
        let candidate: Option<Vec<usize>> = if r == 0 {
            prefix.is_identity().then(|| slots.clone())
        } else {
            let last = prefix.inverse();
            (last.order() == signature.branch_orders[r - 1]).then(|| {
                let mut full = slots.clone();
                full.push(group.element_index(&last).expect("closed"));
                full
            })
        };
        if let Some(tuple) = candidate {
            // generation check
            let elems: Vec<Perm> = tuple.iter().map(|&i| group.element(i).clone()).collect();
            if PermGroup::closure(&elems, n + 1)?.order() == n {
                // least simultaneous conjugate
                let mut least: Option<Vec<usize>> = None;
                for c in 0..n {
                    let conj = group.element(c);
                    let image: Vec<usize> = elems
                        .iter()
                        .map(|e| group.element_index(&e.conjugate_by(conj)).expect("closed"))
                        .collect();
                    if least.as_ref().is_none_or(|l| image < *l) {
                        least = Some(image);
                    }
                }
                let key = least.expect("nonempty group");
                if canonical.insert(key.clone()) {
                    let perms: Vec<Perm> = key.iter().map(|&i| group.element(i).clone()).collect();
                    out.push(GeneratingVector {
                        handles: (0..g0).map(|i| (perms[2 * i].clone(), perms[2 * i + 1].clone())).collect(),
                        branch: perms[2 * g0..].to_vec(),
                    });
                }
            }
        }
        // advance cursor
        for k in (0..total_slots).rev() {
            cursor[k] += 1;
            if cursor[k] < slot_size(k) {
                continue 'enumerate;
            }
            cursor[k] = 0;
        }
        break;
    }
    // canonical tuples are already minimal; sort for deterministic output
    out.sort_by_key(|v| {
        v.entries()
            .iter()
            .map(|p| group.element_index(p).expect("closed"))
            .collect::<Vec<_>>()
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::standard;
    use crate::theta::{invariant_count, orbit_decomposition, translation_vector};

    fn c5_genus2() -> RamificationData {
        let group = PermGroup::from_generators(&standard::cyclic(5)).unwrap();
        let gamma = group.generators()[0].clone();
        RamificationData::new(
            group,
            Signature::genus_zero(vec![5, 5, 5]).unwrap(),
            GeneratingVector::from_branch(vec![gamma.clone(), gamma.clone(), gamma.pow(3)]),
        )
    }

    fn hyperelliptic_genus2() -> RamificationData {
        let group = PermGroup::from_generators(&standard::cyclic(2)).unwrap();
        let c = group.generators()[0].clone();
        RamificationData::new(
            group,
            Signature::genus_zero(vec![2; 6]).unwrap(),
            GeneratingVector::from_branch(vec![c; 6]),
        )
    }

    #[test]
    fn validate_examples() {
        assert_eq!(validate(&c5_genus2()).unwrap(), 2);
        assert_eq!(validate(&hyperelliptic_genus2()).unwrap(), 2);

        let klein_group = PermGroup::from_generators(&standard::psl2(7)).unwrap();
        let vectors = find_generating_vectors(
            &klein_group,
            &Signature::genus_zero(vec![2, 3, 7]).unwrap(),
            10_000_000,
        )
        .unwrap();
        assert!(!vectors.is_empty());
        let data = RamificationData::new(
            klein_group,
            Signature::genus_zero(vec![2, 3, 7]).unwrap(),
            vectors[0].clone(),
        );
        assert_eq!(validate(&data).unwrap(), 3);
    }

    #[test]
    fn validate_rejects_bad_data() {
        let group = PermGroup::from_generators(&standard::cyclic(5)).unwrap();
        let gamma = group.generators()[0].clone();
        // product not one
        let bad = RamificationData::new(
            group.clone(),
            Signature::genus_zero(vec![5, 5, 5]).unwrap(),
            GeneratingVector::from_branch(vec![gamma.clone(), gamma.clone(), gamma.clone()]),
        );
        assert!(validate(&bad).is_err());
        // wrong order
        let bad = RamificationData::new(
            group.clone(),
            Signature::genus_zero(vec![5, 5, 4]).unwrap(),
            GeneratingVector::from_branch(vec![gamma.clone(), gamma.clone(), gamma.pow(3)]),
        );
        assert!(validate(&bad).is_err());
        // non-generating: trivial entries in C5
        let id = Perm::identity(5);
        let bad = RamificationData::new(
            group,
            Signature::genus_zero(vec![]).unwrap(),
            GeneratingVector::from_branch(vec![]),
        );
        let _ = id;
        assert!(validate(&bad).is_err());
    }

    #[test]
    fn hyperelliptic_involution_is_minus_identity() {
        let data = hyperelliptic_genus2();
        let rep = build_symplectic_rep(&data).unwrap();
        let c = data.group.generators()[0].clone();
        // one point over each of the six branch points, all fixed
        assert_eq!(fixed_point_count(&c, &data).unwrap(), 6);
        assert!(fixed_point_count(&Perm::identity(2), &data).is_err());
        let m = rep.matrix(&c).unwrap();
        assert_eq!(*m, IntMatrix::identity(4).neg());
        // translation vector of -I is zero; the map fixes all 16 vectors
        assert!(translation_vector(m).is_zero());
        let maps = rep.affine_maps_of(&[c]).unwrap();
        assert_eq!(invariant_count(&maps, 2).unwrap(), 16);
    }

    #[test]
    fn c5_genus2_rep_and_orbits() {
        let data = c5_genus2();
        let rep = build_symplectic_rep(&data).unwrap();
        let f = data.group.generators()[0].clone();
        // Lefschetz: 3 totally ramified points, trace = 2 - 3 = -1
        assert_eq!(fixed_point_count(&f, &data).unwrap(), 3);
        let m = rep.matrix(&f).unwrap();
        assert_eq!(m.trace(), BigInt::from(-1));
        // genus-zero quotient: the integer kernel of R_f - I is trivial
        assert_eq!(
            crate::intmat::int_kernel_rank(&m.sub(&IntMatrix::identity(4))),
            0
        );
        // characteristic polynomial is 1 + t + t^2 + t^3 + t^4: check by
        // m^4 + m^3 + m^2 + m + I = 0
        let mut acc = IntMatrix::identity(4);
        let mut pw = IntMatrix::identity(4);
        for _ in 0..4 {
            pw = pw.mul(m);
            acc = acc.add(&pw);
        }
        assert!(acc.diagonal().iter().all(Zero::is_zero));
        assert_eq!(acc, IntMatrix::zeros(4, 4));

        // Table-1 C5 row: odd 1_1, 5_1; even 5_2; I = 1.
        let maps = rep.affine_maps_of(&data.vector.branch).unwrap();
        let table = orbit_decomposition(&maps, 2).unwrap();
        assert_eq!(table.odd, vec![(1, 1), (5, 1)]);
        assert_eq!(table.even, vec![(5, 2)]);
        assert_eq!(table.invariant_count, 1);
        assert_eq!(invariant_count(&maps, 2).unwrap(), 1);
    }

    #[test]
    fn subgroup_action_examples() {
        let data = c5_genus2();
        // H = G: the original signature
        let (g0, sig) = subgroup_action(&data.group, &data).unwrap();
        assert_eq!((g0, sig), (0, vec![5, 5, 5]));
        // H trivial: the curve itself
        let trivial = PermGroup::trivial(5);
        let (gc, sig) = subgroup_action(&trivial, &data).unwrap();
        assert_eq!((gc, sig), (2, vec![]));
    }

    #[test]
    fn genus_zero_cover() {
        // (C2, (0; 2, 2)) covers the sphere by a sphere.
        let group = PermGroup::from_generators(&standard::cyclic(2)).unwrap();
        let c = group.generators()[0].clone();
        let data = RamificationData::new(
            group,
            Signature::genus_zero(vec![2, 2]).unwrap(),
            GeneratingVector::from_branch(vec![c.clone(), c.clone()]),
        );
        assert_eq!(validate(&data).unwrap(), 0);
        let rep = build_symplectic_rep(&data).unwrap();
        assert_eq!(rep.genus(), 0);
        assert_eq!(fixed_point_count(&c, &data).unwrap(), 2);
    }

    #[test]
    fn unramified_torus_double_cover() {
        // (C2, g0 = 1, r = 0): a genus-1 cover of the torus; the deck
        // transformation is a translation, so it acts trivially on homology.
        let group = PermGroup::from_generators(&standard::cyclic(2)).unwrap();
        let c = group.generators()[0].clone();
        let data = RamificationData::new(
            group,
            Signature::new(1, vec![]).unwrap(),
            GeneratingVector { handles: vec![(c.clone(), Perm::identity(2))], branch: vec![] },
        );
        assert_eq!(validate(&data).unwrap(), 1);
        let rep = build_symplectic_rep(&data).unwrap();
        assert_eq!(*rep.matrix(&c).unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn genus2_base_with_trivial_group() {
        // Trivial deck group over a genus-2 base exercises the homology
        // machinery on a one-sheet complex.
        let group = PermGroup::trivial(1);
        let id = Perm::identity(1);
        let data = RamificationData::new(
            group,
            Signature::new(2, vec![]).unwrap(),
            GeneratingVector {
                handles: vec![(id.clone(), id.clone()), (id.clone(), id.clone())],
                branch: vec![],
            },
        );
        assert_eq!(validate(&data).unwrap(), 2);
        let rep = build_symplectic_rep(&data).unwrap();
        assert_eq!(rep.genus(), 2);
        let table = orbit_decomposition(&rep.affine_maps_of(&[]).unwrap(), 2).unwrap();
        assert_eq!(table.invariant_count, 16);
    }

    #[test]
    fn find_generating_vectors_examples() {
        // (C5, (5,5,5)): vectors exist, and gamma_3 = (gamma_1 gamma_2)^-1
        let c5 = PermGroup::from_generators(&standard::cyclic(5)).unwrap();
        let found =
            find_generating_vectors(&c5, &Signature::genus_zero(vec![5, 5, 5]).unwrap(), 1_000_000)
                .unwrap();
        assert!(!found.is_empty());
        for v in &found {
            let prod = v.branch[0].compose(&v.branch[1]).compose(&v.branch[2]);
            assert!(prod.is_identity());
        }

        // (C2, (2,2,2)): Riemann-Hurwitz fails, empty
        let c2 = PermGroup::from_generators(&standard::cyclic(2)).unwrap();
        let found =
            find_generating_vectors(&c2, &Signature::genus_zero(vec![2, 2, 2]).unwrap(), 1_000_000)
                .unwrap();
        assert!(found.is_empty());

        // (PSL2(7), (2,3,7)): nonempty
        let psl = PermGroup::from_generators(&standard::psl2(7)).unwrap();
        let found =
            find_generating_vectors(&psl, &Signature::genus_zero(vec![2, 3, 7]).unwrap(), 10_000_000)
                .unwrap();
        assert!(!found.is_empty());
    }

    #[test]
    fn lefschetz_holds_across_s3_fixture() {
        // S3 acting with signature (0; 2, 2, 3, 3) on a genus-2 curve.
        let s3 = PermGroup::from_generators(&standard::symmetric(3)).unwrap();
        let sig = Signature::genus_zero(vec![2, 2, 3, 3]).unwrap();
        let vectors = find_generating_vectors(&s3, &sig, 1_000_000).unwrap();
        assert!(!vectors.is_empty());
        let data = RamificationData::new(s3.clone(), sig, vectors[0].clone());
        assert_eq!(validate(&data).unwrap(), 2);
        // build_symplectic_rep verifies Lefschetz internally for every h
        let rep = build_symplectic_rep(&data).unwrap();
        // homomorphism spot-check
        for (i, j) in [(1, 2), (3, 4), (2, 5), (0, 3)] {
            let a = s3.element(i % s3.order()).clone();
            let b = s3.element(j % s3.order()).clone();
            let ab = a.compose(&b);
            assert_eq!(
                rep.matrix(&a).unwrap().mul(rep.matrix(&b).unwrap()),
                *rep.matrix(&ab).unwrap()
            );
        }
    }
}
