use crate::groupkit::{FiniteGroup, Perm};

#[cfg(test)]
use crate::groupkit::GroupElement;

use super::{PicClass, PicardError};

/// The full pairing matrix of a list of classes (diagonal included, so
/// automorphisms are required to preserve self-intersections too).
pub fn intersection_graph(classes: &[PicClass]) -> Result<Vec<Vec<i64>>, PicardError> {
    let n = classes.len();
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            adj[i][j] = classes[i].pairing(&classes[j])?;
        }
    }
    Ok(adj)
}

/// All permutations of the vertices preserving every entry of the (labelled,
/// symmetric) adjacency matrix, as a permutation group.
///
/// Plain backtracking over images, pruning on a per-vertex invariant (the
/// diagonal entry together with the multiset of incident labels).  The sizes
/// here are tiny (at most 16 vertices), so this is instant.
pub fn graph_automorphisms(adj: &[Vec<i64>]) -> Result<FiniteGroup<Perm>, PicardError> {
    let n = adj.len();
    if n > 16 {
        return Err(PicardError::TooManyVertices(n));
    }
    if adj.iter().any(|row| row.len() != n) {
        return Err(PicardError::BadAdjacency);
    }
    for (i, row) in adj.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if *entry != adj[j][i] {
                return Err(PicardError::BadAdjacency);
            }
        }
    }

    let key = |v: usize| -> (i64, Vec<i64>) {
        let mut sorted = adj[v].clone();
        sorted.sort();
        (adj[v][v], sorted)
    };
    let keys: Vec<(i64, Vec<i64>)> = (0..n).map(key).collect();

    let mut found = Vec::new();
    let mut images: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    backtrack(adj, &keys, &mut images, &mut used, &mut found);

    // The automorphisms of a graph always form a group, but run the closure
    // verification anyway: it is cheap and catches search bugs.
    Ok(FiniteGroup::from_closed_set(found).expect("automorphism set is closed"))
}

fn backtrack(
    adj: &[Vec<i64>],
    keys: &[(i64, Vec<i64>)],
    images: &mut Vec<usize>,
    used: &mut [bool],
    found: &mut Vec<Perm>,
) {
    let v = images.len();
    if v == adj.len() {
        found.push(Perm::from_images(images.iter().map(|&w| w as u8).collect()));
        return;
    }
    'candidates: for w in 0..adj.len() {
        if used[w] || keys[v] != keys[w] {
            continue;
        }
        for (u, &wu) in images.iter().enumerate() {
            if adj[v][u] != adj[w][wu] {
                continue 'candidates;
            }
        }
        images.push(w);
        used[w] = true;
        backtrack(adj, keys, images, used, found);
        images.pop();
        used[w] = false;
    }
}

/// The permutation that `sigma` (acting on class indices) induces on a list
/// of index quadruples.  Fails if some quadruple is not mapped to another
/// quadruple in the list.
pub fn action_on_quadruples(
    sigma: &Perm,
    quads: &[[usize; 4]],
) -> Result<Perm, PicardError> {
    let deg = sigma.degree();
    for q in quads {
        if q.iter().any(|&i| i >= deg) {
            let want = q.iter().max().unwrap() + 1;
            return Err(PicardError::DegreeMismatch { want, got: deg });
        }
    }
    let mut images = Vec::with_capacity(quads.len());
    for q in quads {
        let mut image = [0usize; 4];
        for (slot, &i) in q.iter().enumerate() {
            image[slot] = sigma.image(i);
        }
        image.sort();
        match quads.iter().position(|other| *other == image) {
            Some(idx) => images.push(idx as u8),
            None => return Err(PicardError::QuadruplesNotPreserved),
        }
    }
    Ok(Perm::from_images(images))
}
