//! Integer kernel bases and LLL reduction for small lattices.

/// A basis of `{u ∈ ℤ^n : A u = 0}` from unimodular column operations.
pub fn kernel_basis(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i128>> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    // u is stored column-major: u[c] is column c.
    let mut pivot = 0;
    for r in 0..a.len() {
        if pivot == n {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (pivot..n).filter(|&c| a[r][c] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            let best = *nonzero.iter().min_by_key(|&&c| a[r][c].abs()).unwrap();
            swap_columns(&mut a, &mut u, pivot, best);
            let mut done = true;
            for c in pivot + 1..n {
                let q = a[r][c].div_euclid(a[r][pivot]);
                if q != 0 {
                    add_column(&mut a, &mut u, c, pivot, -q);
                }
                if a[r][c] != 0 {
                    done = false;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    u.drain(pivot..).collect()
}

fn swap_columns(a: &mut [Vec<i128>], u: &mut [Vec<i128>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    u.swap(i, j);
}

/// Column `dst += k * column src`.
fn add_column(a: &mut [Vec<i128>], u: &mut [Vec<i128>], dst: usize, src: usize, k: i128) {
    for row in a.iter_mut() {
        row[dst] += k * row[src];
    }
    let s = u[src].clone();
    for (x, y) in u[dst].iter_mut().zip(s) {
        *x += k * y;
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gram_schmidt(basis: &[Vec<i128>]) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let m = basis.len();
    let mut star: Vec<Vec<f64>> = Vec::with_capacity(m);
    let mut mu = vec![vec![0.0; m]; m];
    for i in 0..m {
        let b: Vec<f64> = basis[i].iter().map(|&x| x as f64).collect();
        let mut v = b.clone();
        for j in 0..i {
            let denom = dot(&star[j], &star[j]);
            mu[i][j] = if denom == 0.0 { 0.0 } else { dot(&b, &star[j]) / denom };
            for (x, y) in v.iter_mut().zip(&star[j]) {
                *x -= mu[i][j] * y;
            }
        }
        star.push(v);
    }
    (star, mu)
}

/// LLL with `δ = 3/4`. Only integer row operations are applied, so the output
/// spans the same lattice whatever the floating-point accuracy.
pub fn lll(mut basis: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let m = basis.len();
    if m < 2 {
        return basis;
    }
    let mut k = 1;
    let mut guard = 0usize;
    while k < m && guard < 100_000 {
        guard += 1;
        for j in (0..k).rev() {
            let (_, mu) = gram_schmidt(&basis);
            let q = mu[k][j].round();
            if q != 0.0 {
                let q = q as i128;
                let bj = basis[j].clone();
                for (x, y) in basis[k].iter_mut().zip(bj) {
                    *x -= q * y;
                }
            }
        }
        let (star, mu) = gram_schmidt(&basis);
        let bk = dot(&star[k], &star[k]);
        let bk1 = dot(&star[k - 1], &star[k - 1]);
        if bk >= (0.75 - mu[k][k - 1] * mu[k][k - 1]) * bk1 {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    basis
}
