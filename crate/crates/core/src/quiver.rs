//! Quivers, the Dynkin/Euclidean/wild trichotomy and path algebras.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::algebra::{Peirce, SCAlgebra, Sparse};
use crate::exactalg::field::{Field, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::InvalidQuiver("a quiver needs at least one vertex".into()));
        }
        for &(s, t) in &arrows {
            if s >= vertices || t >= vertices {
                return Err(Error::InvalidQuiver(format!("arrow {s}->{t} has an endpoint out of range")));
            }
            if s == t {
                return Err(Error::InvalidQuiver(format!("loop at vertex {s}")));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// `0 -> 1 -> ... -> n-1`.
    pub fn linear(n: usize) -> Self {
        Quiver::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    pub fn kronecker() -> Self {
        Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap()
    }

    /// Stock quivers by name: `t2`, `t3`, `kronecker`, `a2tilde`, `d4tilde`,
    /// `d4`, `e6`, `e7`, `e8`, `e6tilde`, `e7tilde`, `e8tilde`, `aN`.
    pub fn named(name: &str) -> Option<Self> {
        let star = |legs: &[usize]| {
            let mut arrows = Vec::new();
            let mut next = 1;
            for &l in legs {
                let mut prev = 0;
                for _ in 0..l {
                    arrows.push((next, prev));
                    prev = next;
                    next += 1;
                }
            }
            Quiver::new(next, arrows).unwrap()
        };
        let q = match name.to_ascii_lowercase().as_str() {
            "t2" => Quiver::linear(2),
            "t3" => Quiver::linear(3),
            "kronecker" => Quiver::kronecker(),
            "a2tilde" => Quiver::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap(),
            "d4tilde" => star(&[1, 1, 1, 1]),
            "d4" => star(&[1, 1, 1]),
            "e6" => star(&[1, 2, 2]),
            "e7" => star(&[1, 2, 3]),
            "e8" => star(&[1, 2, 4]),
            "e6tilde" => star(&[2, 2, 2]),
            "e7tilde" => star(&[1, 3, 3]),
            "e8tilde" => star(&[1, 2, 5]),
            other => {
                let n: usize = other.strip_prefix('a')?.parse().ok()?;
                if n == 0 {
                    return None;
                }
                Quiver::linear(n)
            }
        };
        Some(q)
    }

    /// Every connected Dynkin and Euclidean diagram with at most `max`
    /// vertices, each with a fixed acyclic orientation.
    pub fn diagrams_up_to(max: usize) -> Vec<(String, Quiver)> {
        let mut out = Vec::new();
        let star = |legs: &[usize]| {
            let mut arrows = Vec::new();
            let mut next = 1;
            for &l in legs {
                let mut prev = 0;
                for _ in 0..l {
                    arrows.push((next, prev));
                    prev = next;
                    next += 1;
                }
            }
            Quiver::new(next, arrows).unwrap()
        };
        for n in 1..=max {
            out.push((format!("A{n}"), Quiver::linear(n)));
        }
        for n in 4..=max {
            out.push((format!("D{n}"), star(&[1, 1, n - 3])));
        }
        for (name, legs) in [("E6", [1, 2, 2]), ("E7", [1, 2, 3]), ("E8", [1, 2, 4])] {
            if legs.iter().sum::<usize>() < max {
                out.push((name.to_string(), star(&legs)));
            }
        }
        for n in 1..max {
            let mut arrows: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
            arrows.push((0, n));
            out.push((format!("A~{n}"), Quiver::new(n + 1, arrows).unwrap()));
        }
        for n in 4..max {
            let q = if n == 4 {
                star(&[1, 1, 1, 1])
            } else {
                let mut arrows = vec![(0, 2), (1, 2)];
                arrows.extend((2..n - 2).map(|i| (i, i + 1)));
                arrows.push((n - 1, n - 2));
                arrows.push((n, n - 2));
                Quiver::new(n + 1, arrows).unwrap()
            };
            out.push((format!("D~{n}"), q));
        }
        for (name, legs) in [("E~6", [2, 2, 2]), ("E~7", [1, 3, 3]), ("E~8", [1, 2, 5])] {
            if legs.iter().sum::<usize>() < max {
                out.push((name.to_string(), star(&legs)));
            }
        }
        out
    }

    pub fn opposite(&self) -> Self {
        Quiver { vertices: self.vertices, arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect() }
    }

    /// Reverses the listed arrows.
    pub fn reorient(&self, flip: &[bool]) -> Self {
        let arrows = self
            .arrows
            .iter()
            .zip(flip.iter().chain(std::iter::repeat(&false)))
            .map(|(&(s, t), &f)| if f { (t, s) } else { (s, t) })
            .collect();
        Quiver { vertices: self.vertices, arrows }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        Quiver {
            vertices: self.vertices,
            arrows: self.arrows.iter().map(|&(s, t)| (perm[s], perm[t])).collect(),
        }
    }

    /// Undirected edge multiplicities.
    fn multigraph(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.vertices]; self.vertices];
        for &(s, t) in &self.arrows {
            m[s][t] += 1;
            m[t][s] += 1;
        }
        m
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let m = self.multigraph();
        (0..self.vertices)
            .map(|i| (0..self.vertices).filter(|&j| m[i][j] > 0).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().iter().all(|&c| c == 0)
    }

    fn component_labels(&self) -> Vec<usize> {
        let nb = self.neighbours();
        let mut label = vec![usize::MAX; self.vertices];
        let mut next = 0;
        for start in 0..self.vertices {
            if label[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            label[start] = next;
            while let Some(v) = queue.pop_front() {
                for &w in &nb[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Connected subquivers (vertices renumbered in increasing order) with
    /// the original vertex indices of each.
    pub fn connected_components(&self) -> Vec<(Quiver, Vec<usize>)> {
        let label = self.component_labels();
        let count = label.iter().max().map_or(0, |m| m + 1);
        (0..count)
            .map(|c| {
                let verts: Vec<usize> = (0..self.vertices).filter(|&v| label[v] == c).collect();
                let pos: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
                let arrows = self
                    .arrows
                    .iter()
                    .filter(|(s, _)| label[*s] == c)
                    .map(|(s, t)| (pos[s], pos[t]))
                    .collect();
                (Quiver { vertices: verts.len(), arrows }, verts)
            })
            .collect()
    }

    /// Vertices in an order where every arrow goes forward, if acyclic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0; self.vertices];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::new();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        (order.len() == self.vertices).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertices).filter(|&v| self.arrows.iter().all(|&(_, t)| t != v)).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertices).filter(|&v| self.arrows.iter().all(|&(s, _)| s != v)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

/// Euclidean types indexed so that the diagram has `n + 1` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EuclideanType {
    ATilde(usize),
    DTilde(usize),
    E6Tilde,
    E7Tilde,
    E8Tilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphTag {
    Dynkin(DynkinType),
    Euclidean(EuclideanType),
    Wild,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClass {
    pub tag: GraphTag,
    /// `relabeling[v]` is the standard-diagram label of vertex `v`; empty for `Wild`.
    pub relabeling: Vec<usize>,
}

impl GraphClass {
    pub fn is_dynkin(&self) -> bool {
        matches!(self.tag, GraphTag::Dynkin(_))
    }

    pub fn is_euclidean(&self) -> bool {
        matches!(self.tag, GraphTag::Euclidean(_))
    }
}

impl fmt::Display for GraphTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphTag::Dynkin(DynkinType::A(n)) => write!(f, "Dynkin A{n}"),
            GraphTag::Dynkin(DynkinType::D(n)) => write!(f, "Dynkin D{n}"),
            GraphTag::Dynkin(DynkinType::E6) => write!(f, "Dynkin E6"),
            GraphTag::Dynkin(DynkinType::E7) => write!(f, "Dynkin E7"),
            GraphTag::Dynkin(DynkinType::E8) => write!(f, "Dynkin E8"),
            GraphTag::Euclidean(EuclideanType::ATilde(n)) => write!(f, "Euclidean A~{n}"),
            GraphTag::Euclidean(EuclideanType::DTilde(n)) => write!(f, "Euclidean D~{n}"),
            GraphTag::Euclidean(EuclideanType::E6Tilde) => write!(f, "Euclidean E~6"),
            GraphTag::Euclidean(EuclideanType::E7Tilde) => write!(f, "Euclidean E~7"),
            GraphTag::Euclidean(EuclideanType::E8Tilde) => write!(f, "Euclidean E~8"),
            GraphTag::Wild => write!(f, "Wild"),
        }
    }
}

fn wild() -> GraphClass {
    GraphClass { tag: GraphTag::Wild, relabeling: Vec::new() }
}

/// The vertices of a leg walked outward from `centre` through `first`.
fn walk_leg(nb: &[Vec<usize>], centre: usize, first: usize) -> Vec<usize> {
    let mut leg = vec![first];
    let (mut prev, mut cur) = (centre, first);
    loop {
        let next: Vec<usize> = nb[cur].iter().copied().filter(|&w| w != prev).collect();
        if next.len() != 1 {
            return leg;
        }
        prev = cur;
        cur = next[0];
        leg.push(cur);
    }
}

fn labels_from_order(n: usize, order: &[usize]) -> Vec<usize> {
    let mut lab = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        lab[v] = k;
    }
    lab
}

/// Pattern match of the underlying graph against the standard diagrams.
fn match_diagram(q: &Quiver) -> GraphClass {
    let n = q.vertex_count();
    let m = q.multigraph();
    let nb = q.neighbours();
    if m.iter().flatten().any(|&x| x >= 3) {
        return wild();
    }
    if m.iter().flatten().any(|&x| x == 2) {
        return if n == 2 {
            GraphClass { tag: GraphTag::Euclidean(EuclideanType::ATilde(1)), relabeling: vec![0, 1] }
        } else {
            wild()
        };
    }
    let edges: usize = nb.iter().map(|x| x.len()).sum::<usize>() / 2;
    let deg: Vec<usize> = nb.iter().map(|x| x.len()).collect();
    if edges == n {
        if deg.iter().all(|&d| d == 2) && n >= 3 {
            let mut order = vec![0];
            let mut prev = usize::MAX;
            let mut cur = 0;
            while order.len() < n {
                let next = *nb[cur].iter().filter(|&&w| w != prev).min().unwrap();
                prev = cur;
                cur = next;
                order.push(cur);
            }
            return GraphClass {
                tag: GraphTag::Euclidean(EuclideanType::ATilde(n - 1)),
                relabeling: labels_from_order(n, &order),
            };
        }
        return wild();
    }
    if edges != n - 1 {
        return wild();
    }
    // a tree
    if deg.iter().all(|&d| d <= 2) {
        if n == 1 {
            return GraphClass { tag: GraphTag::Dynkin(DynkinType::A(1)), relabeling: vec![0] };
        }
        let end = (0..n).find(|&v| deg[v] == 1).unwrap();
        let mut order = vec![end];
        order.extend(walk_leg(&nb, usize::MAX, nb[end][0]));
        return GraphClass { tag: GraphTag::Dynkin(DynkinType::A(n)), relabeling: labels_from_order(n, &order) };
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    if deg.iter().any(|&d| d >= 5) {
        return wild();
    }
    if let Some(&c) = branch.iter().find(|&&v| deg[v] == 4) {
        if n == 5 {
            let mut order = vec![c];
            order.extend(nb[c].iter().copied());
            return GraphClass {
                tag: GraphTag::Euclidean(EuclideanType::DTilde(4)),
                relabeling: labels_from_order(n, &order),
            };
        }
        return wild();
    }
    match branch.len() {
        1 => {
            let c = branch[0];
            let mut legs: Vec<Vec<usize>> = nb[c].iter().map(|&f| walk_leg(&nb, c, f)).collect();
            legs.sort_by_key(|l| l.len());
            let lens: Vec<usize> = legs.iter().map(|l| l.len()).collect();
            let tag = match (lens[0], lens[1], lens[2]) {
                (1, 1, k) => GraphTag::Dynkin(DynkinType::D(k + 3)),
                (1, 2, 2) => GraphTag::Dynkin(DynkinType::E6),
                (1, 2, 3) => GraphTag::Dynkin(DynkinType::E7),
                (1, 2, 4) => GraphTag::Dynkin(DynkinType::E8),
                (2, 2, 2) => GraphTag::Euclidean(EuclideanType::E6Tilde),
                (1, 3, 3) => GraphTag::Euclidean(EuclideanType::E7Tilde),
                (1, 2, 5) => GraphTag::Euclidean(EuclideanType::E8Tilde),
                _ => return wild(),
            };
            let mut order = vec![c];
            for l in &legs {
                order.extend(l.iter().copied());
            }
            GraphClass { tag, relabeling: labels_from_order(n, &order) }
        }
        2 => {
            let leaves = |b: usize| -> Vec<usize> { nb[b].iter().copied().filter(|&w| deg[w] == 1).collect() };
            let (b1, b2) = (branch[0], branch[1]);
            let (l1, l2) = (leaves(b1), leaves(b2));
            if l1.len() != 2 || l2.len() != 2 {
                return wild();
            }
            let mut order = vec![l1[0], l1[1], b1];
            let inner = nb[b1].iter().copied().find(|w| !l1.contains(w)).unwrap();
            if inner != b2 {
                let path = walk_leg(&nb, b1, inner);
                order.extend(path.into_iter().filter(|&w| w != b2));
            }
            order.push(b2);
            order.extend(l2);
            GraphClass {
                tag: GraphTag::Euclidean(EuclideanType::DTilde(n - 1)),
                relabeling: labels_from_order(n, &order),
            }
        }
        _ => wild(),
    }
}

/// Signature `(positive, negative, zero)` of the symmetrised Tits form by exact
/// symmetric elimination.
pub fn tits_inertia(q: &Quiver) -> (usize, usize, usize) {
    let n = q.vertex_count();
    let mm = q.multigraph();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::from_i64(if i == j { 2 } else { -(mm[i][j] as i64) }))
                .collect()
        })
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0, 0);
    while !alive.is_empty() {
        let Some(&p) = alive.iter().find(|&&i| !a[i][i].is_zero()) else {
            let off = alive.iter().any(|&i| alive.iter().any(|&j| !a[i][j].is_zero()));
            if off {
                // a hyperbolic plane: one positive and one negative direction
                let i = *alive.iter().find(|&&i| alive.iter().any(|&j| !a[i][j].is_zero())).unwrap();
                let j = *alive.iter().find(|&&j| !a[i][j].is_zero()).unwrap();
                let add: Vec<Rational> = a[j].clone();
                for k in 0..n {
                    a[i][k] = a[i][k].clone() + add[k].clone();
                }
                for k in 0..n {
                    a[k][i] = a[k][i].clone() + a[k][j].clone();
                }
                continue;
            }
            break;
        };
        let d = a[p][p].clone();
        if d > Rational::zero() {
            pos += 1;
        } else {
            neg += 1;
        }
        let inv = d.inv().unwrap();
        alive.retain(|&x| x != p);
        for &i in &alive {
            let f = a[i][p].clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            for &j in &alive {
                let v = a[p][j].clone();
                a[i][j] = a[i][j].clone() - f.clone() * v;
            }
        }
    }
    (pos, neg, n - pos - neg)
}

/// Classifies the underlying graph, cross-checked against the inertia of the
/// symmetrised Tits form.
pub fn classify(q: &Quiver) -> Result<GraphClass> {
    if !q.is_connected() {
        return Err(Error::Disconnected);
    }
    let class = match_diagram(q);
    let n = q.vertex_count();
    let (pos, neg, zero) = tits_inertia(q);
    let consistent = match class.tag {
        GraphTag::Dynkin(_) => pos == n,
        GraphTag::Euclidean(_) => pos == n - 1 && neg == 0 && zero == 1,
        GraphTag::Wild => neg > 0 || zero > 1,
    };
    if !consistent {
        return Err(Error::Internal(format!(
            "diagram match {} disagrees with form inertia ({pos},{neg},{zero})",
            class.tag
        )));
    }
    Ok(class)
}

/// Basis path: `arrows` in traversal order from `source` to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathBasis {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

/// The path algebra of an acyclic quiver, with basis: vertex idempotents,
/// then arrows, then longer paths by length. Path `p: s -> t` lies in
/// `e_t A e_s` and `p q` means "first `q`, then `p`".
#[derive(Clone, Debug)]
pub struct PathAlgebra<F> {
    pub quiver: Quiver,
    pub algebra: Arc<SCAlgebra<F>>,
    pub paths: Vec<PathBasis>,
}

impl<F: Field> PathAlgebra<F> {
    pub fn new(q: &Quiver) -> Result<Self> {
        if !q.is_acyclic() {
            return Err(Error::InvalidQuiver(
                "oriented cycle: the path algebra is infinite-dimensional".into(),
            ));
        }
        let n = q.vertex_count();
        let mut paths: Vec<PathBasis> = (0..n)
            .map(|v| PathBasis { source: v, target: v, arrows: Vec::new() })
            .collect();
        let mut frontier: Vec<PathBasis> = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| PathBasis { source: s, target: t, arrows: vec![a] })
            .collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for (a, &(s, t)) in q.arrows().iter().enumerate() {
                    if s == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        next.push(PathBasis { source: p.source, target: t, arrows });
                    }
                }
            }
            paths.extend(frontier);
            frontier = next;
        }
        let index: BTreeMap<(usize, Vec<usize>), usize> = paths
            .iter()
            .enumerate()
            .map(|(k, p)| ((p.source, p.arrows.clone()), k))
            .collect();
        let d = paths.len();
        let mut table: Vec<Sparse<F>> = Vec::with_capacity(d * d);
        for pi in &paths {
            for pj in &paths {
                // pi * pj: first pj, then pi
                if pj.target != pi.source {
                    table.push(Vec::new());
                    continue;
                }
                let mut arrows = pj.arrows.clone();
                arrows.extend(pi.arrows.iter().copied());
                table.push(vec![(index[&(pj.source, arrows)], F::one())]);
            }
        }
        let mut unit = vec![F::zero(); d];
        for u in unit.iter_mut().take(n) {
            *u = F::one();
        }
        let blocks = paths.iter().map(|p| (p.target, p.source)).collect();
        let alg = SCAlgebra::from_sparse_unchecked(d, table, unit)?
            .with_peirce_unchecked(Peirce { idempotents: (0..n).collect(), blocks });
        let gens: Vec<usize> = (n..n + q.arrows().len()).collect();
        let alg = alg.with_generators(gens)?;
        Ok(PathAlgebra { quiver: q.clone(), algebra: Arc::new(alg), paths })
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    /// Basis index of arrow `a`.
    pub fn arrow_index(&self, a: usize) -> usize {
        self.quiver.vertex_count() + a
    }

    /// Basis index of the path with the given arrows from `source`.
    pub fn path_index(&self, source: usize, arrows: &[usize]) -> Option<usize> {
        self.paths.iter().position(|p| p.source == source && p.arrows == arrows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::F5;
    use proptest::prelude::*;

    #[test]
    fn stock_classes() {
        let cases = [
            ("a1", GraphTag::Dynkin(DynkinType::A(1))),
            ("t3", GraphTag::Dynkin(DynkinType::A(3))),
            ("kronecker", GraphTag::Euclidean(EuclideanType::ATilde(1))),
            ("a2tilde", GraphTag::Euclidean(EuclideanType::ATilde(2))),
            ("d4tilde", GraphTag::Euclidean(EuclideanType::DTilde(4))),
            ("d4", GraphTag::Dynkin(DynkinType::D(4))),
            ("e6", GraphTag::Dynkin(DynkinType::E6)),
            ("e7", GraphTag::Dynkin(DynkinType::E7)),
            ("e8", GraphTag::Dynkin(DynkinType::E8)),
            ("e6tilde", GraphTag::Euclidean(EuclideanType::E6Tilde)),
            ("e7tilde", GraphTag::Euclidean(EuclideanType::E7Tilde)),
            ("e8tilde", GraphTag::Euclidean(EuclideanType::E8Tilde)),
        ];
        for (name, tag) in cases {
            assert_eq!(classify(&Quiver::named(name).unwrap()).unwrap().tag, tag, "{name}");
        }
    }

    #[test]
    fn dtilde_and_wild() {
        // D~5: leaves 0,1 on 2; 2 - 3; leaves 4,5 on 3
        let q = Quiver::new(6, vec![(0, 2), (1, 2), (2, 3), (4, 3), (5, 3)]).unwrap();
        let c = classify(&q).unwrap();
        assert_eq!(c.tag, GraphTag::Euclidean(EuclideanType::DTilde(5)));
        let mut labels = c.relabeling.clone();
        labels.sort();
        assert_eq!(labels, (0..6).collect::<Vec<_>>());
        let wild_star = Quiver::new(5, vec![(1, 0), (2, 0), (3, 1), (4, 2)]).unwrap();
        assert_eq!(classify(&wild_star).unwrap().tag, GraphTag::Dynkin(DynkinType::A(5)));
        let triple = Quiver::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(classify(&triple).unwrap().tag, GraphTag::Wild);
        let star5 = Quiver::new(6, (1..6).map(|i| (i, 0)).collect()).unwrap();
        assert_eq!(classify(&star5).unwrap().tag, GraphTag::Wild);
        let t1_2_6 = Quiver::named("e8tilde").unwrap();
        assert_eq!(t1_2_6.vertex_count(), 9);
    }

    #[test]
    fn diagram_list() {
        let all = Quiver::diagrams_up_to(9);
        // 9 + 6 + 3 Dynkin, 8 + 5 + 3 Euclidean
        assert_eq!(all.len(), 34);
        for (name, q) in &all {
            assert!(q.is_acyclic(), "{name}");
            let c = classify(q).unwrap();
            assert_eq!(c.is_euclidean(), name.contains('~'), "{name}");
            assert!(c.tag != GraphTag::Wild, "{name}");
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(Quiver::new(2, vec![(1, 1)]), Err(Error::InvalidQuiver(_))));
        assert!(Quiver::new(2, vec![(0, 2)]).is_err());
        let disj = Quiver::new(2, vec![]).unwrap();
        assert_eq!(classify(&disj), Err(Error::Disconnected));
        let cyc = Quiver::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(classify(&cyc).unwrap().tag, GraphTag::Euclidean(EuclideanType::ATilde(2)));
        assert!(PathAlgebra::<F5>::new(&cyc).is_err());
    }

    #[test]
    fn components() {
        let single = Quiver::linear(3);
        assert_eq!(single.connected_components().len(), 1);
        let two = Quiver::new(2, vec![]).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|(q, _)| q.vertex_count() == 1));
        // A2 on {0,1} and Kronecker on {2,3}
        let mixed = Quiver::new(4, vec![(0, 1), (2, 3), (2, 3)]).unwrap();
        let comps = mixed.connected_components();
        assert_eq!(comps[0].0, Quiver::linear(2));
        assert_eq!(comps[1].0, Quiver::kronecker());
        assert_eq!(comps[1].1, vec![2, 3]);
    }

    #[test]
    fn path_algebra_dimensions() {
        assert_eq!(PathAlgebra::<F5>::new(&Quiver::kronecker()).unwrap().dim(), 4);
        assert_eq!(PathAlgebra::<F5>::new(&Quiver::linear(3)).unwrap().dim(), 6);
        assert_eq!(PathAlgebra::<F5>::new(&Quiver::named("a2tilde").unwrap()).unwrap().dim(), 7);
        // validated constructor agrees with the unchecked one
        let pa = PathAlgebra::<F5>::new(&Quiver::named("d4tilde").unwrap()).unwrap();
        let a = &pa.algebra;
        let table: Vec<_> = (0..a.dim())
            .flat_map(|i| (0..a.dim()).map(move |j| (i, j)))
            .map(|(i, j)| a.product(i, j).clone())
            .collect();
        assert!(SCAlgebra::from_sparse(a.dim(), table, a.unit().to_vec()).is_ok());
    }

    fn stock() -> Vec<Quiver> {
        ["t2", "t3", "a5", "kronecker", "a2tilde", "d4tilde", "d4", "e6", "e7", "e8", "e6tilde", "e7tilde", "e8tilde"]
            .iter()
            .map(|n| Quiver::named(n).unwrap())
            .collect()
    }

    proptest! {
        #[test]
        fn orientation_and_labelling_independent(idx in 0usize..13, flips in proptest::collection::vec(any::<bool>(), 8), seed in any::<u64>()) {
            let q = &stock()[idx];
            let base = classify(q).unwrap().tag;
            prop_assert_eq!(classify(&q.reorient(&flips)).unwrap().tag, base);
            let mut perm: Vec<usize> = (0..q.vertex_count()).collect();
            let mut s = seed;
            for i in (1..perm.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let c = classify(&q.permute(&perm)).unwrap();
            prop_assert_eq!(c.tag, base);
        }
    }
}
