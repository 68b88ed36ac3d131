//! Named arrangements resolvable without input files.

use super::Arrangement;
use crate::error::ArrangementError;

/// Names used by the test suites and `verify` when no source is given.
pub const STANDARD: &[&str] = &[
    "boolean:1",
    "boolean:2",
    "boolean:3",
    "boolean:4",
    "braid:3",
    "braid:4",
    "coxeter:B2",
    "coxeter:B3",
    "u34",
    "u45",
    "k4me",
    "k5me",
    "bracelet",
    "nearpencil:4",
    "nearpencil:5",
];

fn unit(d: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

fn labelled(d: usize, rows: Vec<(Vec<i64>, String)>) -> Arrangement {
    let (normals, labels): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    let mut a = Arrangement::from_integers(d, &normals).expect("catalog rows are valid");
    a.labels = labels;
    a
}

fn linear_form(v: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let var = format!("x{}", i + 1);
        match (s.is_empty(), c) {
            (true, 1) => s.push_str(&var),
            (true, -1) => s.push_str(&format!("-{var}")),
            (true, c) => s.push_str(&format!("{c}{var}")),
            (false, 1) => s.push_str(&format!("+{var}")),
            (false, -1) => s.push_str(&format!("-{var}")),
            (false, c) if c > 0 => s.push_str(&format!("+{c}{var}")),
            (false, c) => s.push_str(&format!("{c}{var}")),
        }
    }
    s
}

fn from_forms(d: usize, rows: Vec<Vec<i64>>) -> Arrangement {
    labelled(d, rows.into_iter().map(|r| {
        let l = linear_form(&r);
        (r, l)
    }).collect())
}

pub fn boolean(d: usize) -> Arrangement {
    from_forms(d, (0..d).map(|i| unit(d, i)).collect())
}

/// Graphic arrangement of `K_n` (type `A_{n-1}`), not essentialized.
pub fn braid(n: usize) -> Arrangement {
    graphic(n, &all_edges(n))
}

fn all_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Hyperplanes `x_i - x_j` for the given edges of a graph on `n` vertices.
pub fn graphic(n: usize, edges: &[(usize, usize)]) -> Arrangement {
    from_forms(
        n,
        edges
            .iter()
            .map(|&(i, j)| {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = -1;
                v
            })
            .collect(),
    )
}

pub fn coxeter_b(n: usize) -> Arrangement {
    let mut rows: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    for (i, j) in all_edges(n) {
        for s in [1, -1] {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = s;
            rows.push(v);
        }
    }
    from_forms(n, rows)
}

pub fn coxeter_d(n: usize) -> Arrangement {
    let mut rows = Vec::new();
    for (i, j) in all_edges(n) {
        for s in [1, -1] {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = s;
            rows.push(v);
        }
    }
    from_forms(n, rows)
}

/// `n` hyperplanes in general position in `Q^r` (Vandermonde rows).
pub fn uniform(r: usize, n: usize) -> Arrangement {
    from_forms(
        r,
        (0..n as i64).map(|t| (0..r as u32).map(|k| t.pow(k)).collect()).collect(),
    )
}

/// `n - 1` planes through a common line plus one plane in general position.
pub fn near_pencil(n: usize) -> Arrangement {
    let mut rows: Vec<Vec<i64>> = (0..n as i64 - 1).map(|k| vec![1, k, 0]).collect();
    rows.push(vec![0, 0, 1]);
    from_forms(3, rows)
}

pub fn u34() -> Arrangement {
    from_forms(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]])
}

pub fn u45() -> Arrangement {
    from_forms(
        4,
        vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![1, 1, 1, 1]],
    )
}

/// `xyz(x+z)(y+z)`, the graphic arrangement of `K_4` minus an edge.
pub fn k4me() -> Arrangement {
    from_forms(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1]])
}

/// Graphic arrangement of `K_5` minus an edge.
pub fn k5me() -> Arrangement {
    let edges: Vec<(usize, usize)> = all_edges(5).into_iter().filter(|&e| e != (3, 4)).collect();
    graphic(5, &edges)
}

pub fn bracelet() -> Arrangement {
    from_forms(
        4,
        vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![1, 0, 0, 1],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 1],
            vec![1, 1, 0, 1],
            vec![1, 0, 1, 1],
            vec![0, 1, 1, 1],
        ],
    )
}

/// Resolves a catalog name such as `boolean:3`, `braid:4`, `coxeter:B3`.
pub fn resolve(name: &str) -> Result<Arrangement, ArrangementError> {
    let unknown = || ArrangementError::UnknownCatalog(name.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let a = match (head.to_ascii_lowercase().as_str(), arg) {
        ("boolean", Some(d)) => boolean(num(d)?),
        ("braid", Some(n)) if num(n)? >= 1 => braid(num(n)?),
        ("coxeter", Some(t)) if t.len() >= 2 => {
            let rank = num(&t[1..])?;
            match &t[..1] {
                "A" | "a" => braid(rank + 1),
                "B" | "b" | "C" | "c" => coxeter_b(rank),
                "D" | "d" if rank >= 2 => coxeter_d(rank),
                _ => return Err(unknown()),
            }
        }
        ("uniform", Some(rn)) => {
            let (r, n) = rn.split_once(',').ok_or_else(unknown)?;
            let (r, n) = (num(r)?, num(n)?);
            if r == 0 || (n > r && r == 1) {
                return Err(unknown());
            }
            uniform(r, n)
        }
        ("nearpencil", Some(n)) if num(n)? >= 3 => near_pencil(num(n)?),
        ("u34", None) => u34(),
        ("u45", None) => u45(),
        ("k4me", None) => k4me(),
        ("k5me", None) => k5me(),
        ("bracelet", None) => bracelet(),
        _ => return Err(unknown()),
    };
    if a.len() > super::MAX_HYPERPLANES {
        return Err(ArrangementError::TooManyHyperplanes(a.len()));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        for name in STANDARD {
            resolve(name).unwrap();
        }
        assert_eq!(resolve("coxeter:A3").unwrap(), braid(4));
        assert_eq!(resolve("braid:4").unwrap().len(), 6);
        assert_eq!(resolve("coxeter:B3").unwrap().len(), 9);
        assert_eq!(resolve("k5me").unwrap().len(), 9);
        assert!(resolve("nope").is_err());
        assert!(resolve("boolean:x").is_err());
    }

    #[test]
    fn labels_are_linear_forms() {
        assert_eq!(k4me().labels()[3], "x1+x3");
        assert_eq!(braid(3).labels()[0], "x1-x2");
    }
}
