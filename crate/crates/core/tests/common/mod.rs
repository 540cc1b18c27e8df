#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::path::PathBuf;

use forge_core::{Graph, Letter, Presentation, Word};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data")
}

pub fn load(name: &str) -> Presentation {
    let path = data_dir().join(format!("{name}.grp"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    Presentation::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn corpus() -> Vec<(String, Presentation)> {
    let mut names: Vec<String> = std::fs::read_dir(data_dir())
        .unwrap()
        .filter_map(|e| {
            let p = e.ok()?.path();
            (p.extension()? == "grp").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), load(&n))).collect()
}

/// Calls `f` on every freely reduced word of length `<= max_len` over `rank` generators.
pub fn for_each_reduced_word(rank: usize, max_len: usize, mut f: impl FnMut(&Word)) {
    fn go(rank: usize, max_len: usize, cur: &mut Vec<Letter>, f: &mut dyn FnMut(&Word)) {
        f(&Word::reduce(cur.iter().copied()));
        if cur.len() == max_len {
            return;
        }
        for col in 0..2 * rank {
            let l = Letter::from_column(col);
            if cur.last().is_some_and(|&p| p.cancels(l)) {
                continue;
            }
            cur.push(l);
            go(rank, max_len, cur, f);
            cur.pop();
        }
    }
    go(rank, max_len, &mut Vec::new(), &mut f);
}

pub fn reduced_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for_each_reduced_word(rank, max_len, |w| out.push(w.clone()));
    out
}

// ---- permutation groups ----

pub type Perm = Vec<usize>;

pub fn perm_mul(x: &Perm, y: &Perm) -> Perm {
    // right action: first x, then y
    x.iter().map(|&i| y[i]).collect()
}

pub fn perm_inv(x: &Perm) -> Perm {
    let mut out = vec![0; x.len()];
    for (i, &j) in x.iter().enumerate() {
        out[j] = i;
    }
    out
}

pub fn perm_eval(w: &Word, gens: &[Perm]) -> Perm {
    let n = gens[0].len();
    w.letters().iter().fold((0..n).collect(), |acc, l| {
        let g = &gens[l.generator()];
        if l.is_positive() {
            perm_mul(&acc, g)
        } else {
            perm_mul(&acc, &perm_inv(g))
        }
    })
}

pub fn closure(gens: &[Perm], n: usize) -> HashSet<Perm> {
    let id: Perm = (0..n).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = perm_mul(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Number of right cosets `H g` of `H = <sub>` in `G = <gens>`, by listing them.
pub fn brute_coset_count(gens: &[Perm], sub: &[Perm], n: usize) -> usize {
    let g = closure(gens, n);
    let h = closure(sub, n);
    let cosets: HashSet<BTreeSet<Perm>> = g
        .iter()
        .map(|x| h.iter().map(|y| perm_mul(y, x)).collect())
        .collect();
    cosets.len()
}

fn cycle(points: std::ops::Range<usize>, n: usize) -> Perm {
    let mut p: Perm = (0..n).collect();
    let v: Vec<usize> = points.collect();
    for k in 0..v.len() {
        p[v[k]] = v[(k + 1) % v.len()];
    }
    p
}

fn dihedral(m: usize) -> (Perm, Perm) {
    let r = (0..m).map(|x| (x + 1) % m).collect();
    let s = (0..m).map(|x| (m - x) % m).collect();
    (r, s)
}

fn quaternion() -> (Perm, Perm) {
    // element 4 s + u is (-1)^s u, u in {1, i, j, k}
    const TABLE: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let right = |g: usize| -> Perm {
        (0..8)
            .map(|x| {
                let (s, u) = (x / 4, x % 4);
                let (t, v) = TABLE[u][g];
                4 * ((s + t) % 2) + v
            })
            .collect()
    };
    (right(1), right(2))
}

/// Faithful permutation representations of the finite corpus groups, with
/// the group order.
pub fn finite_models() -> Vec<(&'static str, Vec<Perm>, usize)> {
    let (r3, s3) = dihedral(3);
    let (r4, s4) = dihedral(4);
    let (r24, s24) = dihedral(24);
    let (qi, qj) = quaternion();
    let mut s3xz8_a: Perm = (0..11).collect();
    let mut s3xz8_b: Perm = (0..11).collect();
    s3xz8_a[..3].copy_from_slice(&s3);
    s3xz8_b[..3].copy_from_slice(&r3);
    vec![
        ("trivial", vec![vec![0]], 1),
        ("c2", vec![cycle(0..2, 2)], 2),
        ("c6", vec![cycle(0..6, 6)], 6),
        ("c7", vec![cycle(0..7, 7)], 7),
        ("s3", vec![s3.clone(), r3.clone()], 6),
        ("d4", vec![r4, s4], 8),
        ("q8", vec![qi, qj], 8),
        ("a4", vec![vec![1, 0, 3, 2], vec![1, 2, 0, 3]], 12),
        ("s4", vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]], 24),
        ("z4xz12", vec![cycle(0..4, 16), cycle(4..16, 16)], 48),
        ("d24", vec![r24, s24], 48),
        ("s3xz8", vec![s3xz8_a, s3xz8_b, cycle(3..11, 11)], 48),
    ]
}

// ---- RAAG equality by exhaustive moves ----

/// Least-length, then least, word reachable from `w` by swapping adjacent
/// commuting letters and deleting adjacent inverse pairs.
pub fn raag_move_key(w: &Word, g: &Graph) -> Vec<Letter> {
    let commute = |x: Letter, y: Letter| x.generator() != y.generator() && g.has_edge(x.generator(), y.generator());
    let start = w.letters().to_vec();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut best: Option<Vec<Letter>> = None;
    while let Some(u) = queue.pop_front() {
        if best.as_ref().map_or(true, |b| (u.len(), &u) < (b.len(), b)) {
            best = Some(u.clone());
        }
        for i in 0..u.len().saturating_sub(1) {
            let (x, y) = (u[i], u[i + 1]);
            let next = if x.cancels(y) {
                let mut v = u.clone();
                v.drain(i..i + 2);
                v
            } else if commute(x, y) {
                let mut v = u.clone();
                v.swap(i, i + 1);
                v
            } else {
                continue;
            };
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    best.unwrap()
}

/// Twice the signed area enclosed by the lattice path of a word in `a`, `b`.
pub fn doubled_shoelace_area(w: &Word) -> i64 {
    let (mut x, mut y, mut acc) = (0i64, 0i64, 0i64);
    for l in w.letters() {
        let (dx, dy) = if l.generator() == 0 { (1, 0) } else { (0, 1) };
        let s = l.sign().as_i64();
        let (nx, ny) = (x + s * dx, y + s * dy);
        acc += x * ny - nx * y;
        (x, y) = (nx, ny);
    }
    acc
}
