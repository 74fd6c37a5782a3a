//! Second, deliberately naive generator: edge subsets of K_n, every rotation
//! system on each, genus-0 filter by face counting, and deduplication by the
//! least relabeled/reflected rotation listing over all vertex permutations.

use std::collections::BTreeSet;

use plancol_core::io::graphs_with_order;

type Rot = Vec<Vec<usize>>;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn connected(n: usize, adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn face_count(rot: &Rot) -> usize {
    let mut darts = BTreeSet::new();
    for (v, l) in rot.iter().enumerate() {
        for &u in l {
            darts.insert((v, u));
        }
    }
    let mut faces = 0;
    while let Some(&start) = darts.iter().next() {
        faces += 1;
        let mut d = start;
        loop {
            darts.remove(&d);
            let (u, v) = d;
            let l = &rot[v];
            let p = l.iter().position(|&x| x == u).unwrap();
            d = (v, l[(p + l.len() - 1) % l.len()]);
            if d == start {
                break;
            }
        }
    }
    faces.max(1)
}

/// Cyclic lists rotated to start at their minimum.
fn normalize(rot: &Rot) -> Rot {
    rot.iter()
        .map(|l| {
            if l.is_empty() {
                return Vec::new();
            }
            let m = (0..l.len()).min_by_key(|&i| l[i]).unwrap();
            (0..l.len()).map(|k| l[(m + k) % l.len()]).collect()
        })
        .collect()
}

fn oracle_canonical(rot: &Rot, perms: &[Vec<usize>]) -> Rot {
    let n = rot.len();
    let mut best: Option<Rot> = None;
    for p in perms {
        for mirror in [false, true] {
            let mut r = vec![Vec::new(); n];
            for v in 0..n {
                let mut l: Vec<usize> = rot[v].iter().map(|&u| p[u]).collect();
                if mirror {
                    l.reverse();
                }
                r[p[v]] = l;
            }
            let r = normalize(&r);
            if best.as_ref().map_or(true, |b| r < *b) {
                best = Some(r);
            }
        }
    }
    best.unwrap()
}

/// All cyclic orders of each neighborhood (first neighbor fixed).
fn rotation_systems(adj: &[Vec<usize>], f: &mut impl FnMut(&Rot)) {
    fn orders(l: &[usize]) -> Vec<Vec<usize>> {
        if l.len() <= 2 {
            return vec![l.to_vec()];
        }
        let rest = permutations(l.len() - 1);
        rest.iter().map(|p| std::iter::once(l[0]).chain(p.iter().map(|&i| l[i + 1])).collect()).collect()
    }
    let choices: Vec<Vec<Vec<usize>>> = adj.iter().map(|l| orders(l)).collect();
    let mut idx = vec![0; adj.len()];
    loop {
        let rot: Rot = idx.iter().enumerate().map(|(v, &i)| choices[v][i].clone()).collect();
        f(&rot);
        let mut v = 0;
        loop {
            if v == idx.len() {
                return;
            }
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

fn oracle(n: usize) -> BTreeSet<Rot> {
    let perms = permutations(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    // One edge set per labeled-graph isomorphism class is enough.
    let mut classes = BTreeSet::new();
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let e = mask.count_ones() as usize;
        if n > 2 && e > 3 * n - 6 || e + 1 < n {
            continue;
        }
        let mut adj = vec![Vec::new(); n];
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        if !connected(n, &adj) {
            continue;
        }
        let class = perms
            .iter()
            .map(|p| {
                let mut es: Vec<(usize, usize)> =
                    pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &(u, v))| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                es.sort_unstable();
                es
            })
            .min()
            .unwrap();
        if !classes.insert(class) {
            continue;
        }
        rotation_systems(&adj, &mut |rot| {
            if n + face_count(rot) == e + 2 {
                out.insert(oracle_canonical(rot, &perms));
            }
        });
    }
    out
}

#[test]
fn generator_matches_oracle_up_to_six_vertices() {
    for n in 1..=6 {
        let perms = permutations(n);
        let expected = oracle(n);
        let got: Vec<Rot> = graphs_with_order(n).unwrap().iter().map(|g| oracle_canonical(&g.rotation().to_vec(), &perms)).collect();
        let got_set: BTreeSet<Rot> = got.iter().cloned().collect();
        assert_eq!(got.len(), got_set.len(), "duplicate embeddings at n={n}");
        assert_eq!(got_set, expected, "n={n}");
    }
}
