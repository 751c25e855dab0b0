//! Bottleneck distance between persistence diagrams of one degree.

fn linf(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).abs().max((a.1 - b.1).abs())
}

fn half_persistence(a: (f64, f64)) -> f64 {
    0.5 * (a.1 - a.0)
}

/// Kuhn's augmenting path search.
fn try_augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
    for &v in &adj[u] {
        if !seen[v] {
            seen[v] = true;
            if match_right[v].is_none_or(|w| try_augment(w, adj, seen, match_right)) {
                match_right[v] = Some(u);
                return true;
            }
        }
    }
    false
}

/// Whether the finite diagrams admit a matching (with the diagonal) of cost at most `eps`.
fn feasible(a: &[(f64, f64)], b: &[(f64, f64)], eps: f64) -> bool {
    let (n, m) = (a.len(), b.len());
    // left: a_0..a_n, then diagonal copies of b; right: b_0..b_m, then diagonal copies of a
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + m];
    for i in 0..n {
        for j in 0..m {
            if linf(a[i], b[j]) <= eps {
                adj[i].push(j);
            }
        }
        if half_persistence(a[i]) <= eps {
            adj[i].push(m + i);
        }
    }
    for j in 0..m {
        if half_persistence(b[j]) <= eps {
            adj[n + j].push(j);
        }
        adj[n + j].extend(m..m + n);
    }
    let mut match_right = vec![None; n + m];
    (0..n + m).all(|u| try_augment(u, &adj, &mut vec![false; n + m], &mut match_right))
}

/// Bottleneck distance between two diagrams of `(birth, death)` pairs. Bars
/// with infinite death are matched among themselves by sorted birth; the
/// distance is infinite if their counts differ.
pub fn bottleneck_distance(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let mut ea: Vec<f64> = a.iter().filter(|p| p.1 == f64::INFINITY).map(|p| p.0).collect();
    let mut eb: Vec<f64> = b.iter().filter(|p| p.1 == f64::INFINITY).map(|p| p.0).collect();
    if ea.len() != eb.len() {
        return f64::INFINITY;
    }
    ea.sort_by(f64::total_cmp);
    eb.sort_by(f64::total_cmp);
    let essential = ea.iter().zip(&eb).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    let fa: Vec<(f64, f64)> = a.iter().copied().filter(|p| p.1 < f64::INFINITY && p.0 < p.1).collect();
    let fb: Vec<(f64, f64)> = b.iter().copied().filter(|p| p.1 < f64::INFINITY && p.0 < p.1).collect();
    let mut cands: Vec<f64> = vec![0.0];
    cands.extend(fa.iter().chain(&fb).map(|&p| half_persistence(p)));
    for &p in &fa {
        cands.extend(fb.iter().map(|&q| linf(p, q)));
    }
    cands.sort_by(f64::total_cmp);
    cands.dedup();
    // the largest candidate (matching everything to the diagonal) is always feasible
    let (mut lo, mut hi) = (0, cands.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(&fa, &fb, cands[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    essential.max(cands[lo])
}
