//! Apery posets: `(Ap_1, ≤_1)` over the integers and `(AP_S, ≤_S)` over `ℕ²`.
//!
//! Cover relations are adding one non-top generator, so the Hasse diagram is
//! built directly instead of from a transitive reduction.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Display, Write as _};
use std::hash::Hash;

use crate::homog::{rank2, HomogeneousMonoid, Point2, ProjectiveAperySet};
use crate::numsg::{AperySet, NumericalSemigroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyPoset<T> {
    elements: Vec<T>,
    /// Index pairs `(y, z)` with `y ≺ z`.
    hasse_edges: Vec<(usize, usize)>,
    graded: bool,
    rank: Option<Vec<u32>>,
}

impl<T: Clone + Ord + Hash> AperyPoset<T> {
    /// Builds a poset whose covers are `z = y + step` for the given steps.
    fn from_steps(elements: Vec<T>, add: impl Fn(&T) -> Vec<T>) -> Self {
        let index: HashMap<T, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let mut hasse_edges = Vec::new();
        for (i, y) in elements.iter().enumerate() {
            for z in add(y) {
                if let Some(&j) = index.get(&z) {
                    hasse_edges.push((i, j));
                }
            }
        }
        hasse_edges.sort_unstable();
        hasse_edges.dedup();
        Self {
            elements,
            hasse_edges,
            graded: false,
            rank: None,
        }
    }
}

impl<T> AperyPoset<T> {
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse_edges
    }

    pub fn edges(&self) -> impl Iterator<Item = (&T, &T)> {
        self.hasse_edges
            .iter()
            .map(|&(i, j)| (&self.elements[i], &self.elements[j]))
    }

    pub fn graded(&self) -> bool {
        self.graded
    }

    pub fn rank(&self) -> Option<&[u32]> {
        self.rank.as_deref()
    }

    fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.len()];
        for &(i, _) in &self.hasse_edges {
            deg[i] += 1;
        }
        deg
    }

    fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.len()];
        for &(_, j) in &self.hasse_edges {
            deg[j] += 1;
        }
        deg
    }

    /// Length of the longest chain from a minimal element to each node.
    pub fn heights(&self) -> Vec<u32> {
        let order = self.topological_order();
        let mut succ = vec![Vec::new(); self.len()];
        for &(i, j) in &self.hasse_edges {
            succ[i].push(j);
        }
        let mut h = vec![0u32; self.len()];
        for i in order {
            for &j in &succ[i] {
                h[j] = h[j].max(h[i] + 1);
            }
        }
        h
    }

    fn topological_order(&self) -> Vec<usize> {
        let mut indeg = self.in_degrees();
        let mut succ = vec![Vec::new(); self.len()];
        for &(i, j) in &self.hasse_edges {
            succ[i].push(j);
        }
        let mut stack: Vec<usize> = (0..self.len()).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some(i) = stack.pop() {
            order.push(i);
            for &j in &succ[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    stack.push(j);
                }
            }
        }
        order
    }

    /// Reflexive-transitive closure of the cover relation, as `le[i][j]` for `i ≤ j`.
    pub fn order_relation(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut le = vec![vec![false; n]; n];
        let mut succ = vec![Vec::new(); n];
        for &(i, j) in &self.hasse_edges {
            succ[i].push(j);
        }
        for (start, row) in le.iter_mut().enumerate() {
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                if !row[i] {
                    row[i] = true;
                    stack.extend(succ[i].iter().copied());
                }
            }
        }
        le
    }
}

/// Hasse diagram of `(Ap_1, ≤_1)`: `y ≺ z` iff `z = y + g` with `g` a minimal
/// generator other than the modulus of `ap`.
pub fn hasse_affine(s: &NumericalSemigroup, ap: &AperySet) -> AperyPoset<u64> {
    let d = ap.modulus();
    let steps: Vec<u64> = s.msg().iter().copied().filter(|&g| g != d).collect();
    let mut poset = AperyPoset::from_steps(ap.sorted(), |&y| {
        steps.iter().map(|g| y + g).collect()
    });
    let (graded, rank) = is_graded(s, ap);
    poset.graded = graded;
    poset.rank = rank.map(|r| poset.elements.iter().map(|e| r[e]).collect());
    poset
}

/// Hasse diagram of `(AP_S, ≤_S)`, graded by `(y1 + y2) / d`.
pub fn hasse_projective(
    monoid: &HomogeneousMonoid,
    aps: &ProjectiveAperySet,
) -> AperyPoset<Point2> {
    let vectors = monoid.vectors();
    let inner = vectors[1..vectors.len() - 1].to_vec();
    let d = monoid.d();
    let mut poset = AperyPoset::from_steps(aps.elements.iter().copied().collect(), |y| {
        inner.iter().map(|v| Point2(y.0 + v.0, y.1 + v.1)).collect()
    });
    poset.graded = true;
    poset.rank = Some(
        poset
            .elements
            .iter()
            .map(|&p| rank2(p, d).expect("AP_S points have integral degree") as u32)
            .collect(),
    );
    poset
}

/// `Ap_1` is graded iff every element has a single factorization length over
/// the minimal generators; the rank is that length.
pub fn is_graded(s: &NumericalSemigroup, ap: &AperySet) -> (bool, Option<BTreeMap<u64, u32>>) {
    let lengths = s.length_table(ap.max());
    let mut rank = BTreeMap::new();
    for &y in ap.elements() {
        let set = &lengths[y as usize];
        if set.len() != 1 {
            return (false, None);
        }
        rank.insert(y, *set.iter().next().unwrap());
    }
    (true, Some(rank))
}

/// `Σ_s |Ap_1 ∩ s·A_1'| == d`, with `A_1'` the minimal generators minus `a_n`.
pub fn graded_via_sumsets(s: &NumericalSemigroup, ap: &AperySet) -> bool {
    let d = ap.modulus();
    let steps: Vec<u64> = s.msg().iter().copied().filter(|&g| g != d).collect();
    let cap = ap.max();
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    let mut total = 0u64;
    while !level.is_empty() {
        total += level.iter().filter(|&&y| ap.contains(y)).count() as u64;
        level = level
            .iter()
            .flat_map(|&y| steps.iter().map(move |g| y + g))
            .filter(|&y| y <= cap)
            .collect();
    }
    total == ap.modulus()
}

/// Order isomorphism between two finite posets given by Hasse diagrams.
/// Returns the witness map from indices of `p` to indices of `q`.
pub fn are_isomorphic<A, B>(p: &AperyPoset<A>, q: &AperyPoset<B>) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.hasse_edges.len() != q.hasse_edges.len() {
        return None;
    }
    let n = p.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let (cp, cq) = refine_colors(p, q)?;
    let mut p_adj = vec![BTreeSet::new(); n];
    for &(i, j) in &p.hasse_edges {
        p_adj[i].insert(j);
    }
    let mut q_adj = vec![BTreeSet::new(); n];
    for &(i, j) in &q.hasse_edges {
        q_adj[i].insert(j);
    }
    let order = p.topological_order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(0, &order, &cp, &cq, &p_adj, &q_adj, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    k: usize,
    order: &[usize],
    cp: &[usize],
    cq: &[usize],
    p_adj: &[BTreeSet<usize>],
    q_adj: &[BTreeSet<usize>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    // same index first, so a poset compared with itself maps by the identity
    let candidates = std::iter::once(v).chain((0..cq.len()).filter(|&w| w != v));
    for w in candidates {
        if w >= cq.len() || used[w] || cq[w] != cp[v] {
            continue;
        }
        let consistent = order[..k].iter().all(|&u| {
            let fu = map[u];
            p_adj[u].contains(&v) == q_adj[fu].contains(&w)
                && p_adj[v].contains(&u) == q_adj[w].contains(&fu)
        });
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if backtrack(k + 1, order, cp, cq, p_adj, q_adj, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Joint color refinement on (height, in-degree, out-degree) followed by the
/// multisets of neighbor colors. Returns `None` when the color histograms differ.
fn refine_colors<A, B>(p: &AperyPoset<A>, q: &AperyPoset<B>) -> Option<(Vec<usize>, Vec<usize>)> {
    fn initial<T>(x: &AperyPoset<T>) -> Vec<(u32, usize, usize)> {
        let h = x.heights();
        let i = x.in_degrees();
        let o = x.out_degrees();
        (0..x.len()).map(|k| (h[k], i[k], o[k])).collect()
    }
    fn relabel<K: Ord + Clone>(a: &[K], b: &[K]) -> (Vec<usize>, Vec<usize>) {
        let keys: BTreeSet<K> = a.iter().chain(b).cloned().collect();
        let id: BTreeMap<K, usize> = keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
        (
            a.iter().map(|k| id[k]).collect(),
            b.iter().map(|k| id[k]).collect(),
        )
    }
    fn step<T>(x: &AperyPoset<T>, c: &[usize]) -> Vec<(usize, Vec<usize>, Vec<usize>)> {
        let mut up = vec![Vec::new(); x.len()];
        let mut down = vec![Vec::new(); x.len()];
        for &(i, j) in &x.hasse_edges {
            up[i].push(c[j]);
            down[j].push(c[i]);
        }
        (0..x.len())
            .map(|k| {
                up[k].sort_unstable();
                down[k].sort_unstable();
                (c[k], std::mem::take(&mut up[k]), std::mem::take(&mut down[k]))
            })
            .collect()
    }
    fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &x in c {
            *h.entry(x).or_insert(0) += 1;
        }
        h
    }
    let (mut cp, mut cq) = relabel(&initial(p), &initial(q));
    loop {
        if histogram(&cp) != histogram(&cq) {
            return None;
        }
        let classes = histogram(&cp).len();
        let (np, nq) = relabel(&step(p, &cp), &step(q, &cq));
        let done = histogram(&np).len() == classes;
        cp = np;
        cq = nq;
        if done {
            if histogram(&cp) != histogram(&cq) {
                return None;
            }
            return Some((cp, cq));
        }
    }
}

/// Graphviz digraph with nodes ordered by `(rank, value)`; graded posets get
/// one `rank=same` layer per rank.
pub fn to_dot<T: Display + Ord>(poset: &AperyPoset<T>, name: &str) -> String {
    let rank: Vec<u32> = match poset.rank() {
        Some(r) => r.to_vec(),
        None => poset.heights(),
    };
    let mut order: Vec<usize> = (0..poset.len()).collect();
    order.sort_by(|&a, &b| {
        rank[a]
            .cmp(&rank[b])
            .then_with(|| poset.elements[a].cmp(&poset.elements[b]))
    });
    let label = |i: usize| format!("\"{}\"", poset.elements[i]);
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{name}\" {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=plaintext];");
    for &i in &order {
        let _ = writeln!(out, "  {};", label(i));
    }
    if poset.graded() {
        let mut layers: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for &i in &order {
            layers.entry(rank[i]).or_default().push(i);
        }
        for (r, nodes) in layers {
            let names: Vec<String> = nodes.iter().map(|&i| label(i)).collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }} // rank {r}", names.join("; "));
        }
    }
    let position: HashMap<usize, usize> = order.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut edges = poset.hasse_edges.clone();
    edges.sort_by_key(|&(i, j)| (position[&i], position[&j]));
    for (i, j) in edges {
        let _ = writeln!(out, "  {} -> {};", label(i), label(j));
    }
    out.push_str("}\n");
    out
}

/// Summary used by reports and invariant checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetProfile {
    pub ranks: BTreeMap<u32, usize>,
    pub cover_degrees: Vec<(usize, usize)>,
}

impl<T> AperyPoset<T> {
    pub fn profile(&self) -> PosetProfile {
        let rank = self.rank.clone().unwrap_or_else(|| self.heights());
        let mut ranks = BTreeMap::new();
        for r in rank {
            *ranks.entry(r).or_insert(0) += 1;
        }
        let ins = self.in_degrees();
        let outs = self.out_degrees();
        let mut cover_degrees: Vec<(usize, usize)> = ins.into_iter().zip(outs).collect();
        cover_degrees.sort_unstable();
        PosetProfile {
            ranks,
            cover_degrees,
        }
    }
}

impl fmt::Display for PosetProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ranks {:?}, covers {:?}", self.ranks, self.cover_degrees)
    }
}
