use std::collections::{HashSet, VecDeque};

use galois_rings::{GaloisRing, Mat};
use root_data::RootDatum;

use crate::error::SympError;
use crate::unipotent::exp_nilpotent;

/// `{x, y} = x y x^{-1} y^{-1}`.
pub fn commutator(x: &Mat, y: &Mat) -> Result<Mat, SympError> {
    Ok(&(&(x * y) * &x.inverse()?) * &y.inverse()?)
}

/// All `q^{n^2}` elements of `U_1(F_q)`, as ordered products of root-group elements.
pub fn enumerate_u1(datum: &RootDatum, f: &GaloisRing) -> Result<Vec<Mat>, SympError> {
    let pos = datum.positive_roots();
    let els = f.elements();
    let mut out = vec![Mat::identity(f, 2 * datum.n())];
    for r in &pos {
        let x = datum.root_vector(f, r);
        let factors: Vec<Mat> = els
            .iter()
            .map(|c| exp_nilpotent(&x.scale(c)).map(|s| s.into_mat()))
            .collect::<Result<_, _>>()?;
        out = out.iter().flat_map(|u| factors.iter().map(move |g| u * g)).collect();
    }
    Ok(out)
}

fn bfs(gens: &[Mat], cap: usize, mut visit: impl FnMut(&Mat)) -> Result<usize, SympError> {
    let Some(first) = gens.first() else {
        return Ok(1);
    };
    let id = Mat::identity(first.ring(), first.rows());
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.flat_key());
    visit(&id);
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = &x * g;
            if seen.insert(y.flat_key()) {
                if seen.len() > cap {
                    return Err(SympError::CapExceeded(cap));
                }
                visit(&y);
                queue.push_back(y);
            }
        }
    }
    Ok(seen.len())
}

/// Order of the finite group generated by `gens`, by breadth-first closure.
pub fn group_order(gens: &[Mat], cap: usize) -> Result<usize, SympError> {
    bfs(gens, cap, |_| {})
}

/// Every element of the finite group generated by `gens`.
pub fn enumerate_group(gens: &[Mat], cap: usize) -> Result<Vec<Mat>, SympError> {
    let mut out = Vec::new();
    bfs(gens, cap, |m| out.push(m.clone()))?;
    Ok(out)
}
