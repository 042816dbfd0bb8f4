/// Local contribution at one place: `dim 𝒩_v` and `h⁰(G_v, Ad⁰)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalTerm {
    pub tangent_dim: i64,
    pub h0: i64,
}

/// `h¹_𝒩 − h¹_{𝒩^⊥} = h⁰ − h⁰_dual + Σ_v (dim 𝒩_v − h⁰(G_v, Ad⁰))`.
///
/// The list must include the archimedean place with `tangent_dim = 0`.
pub fn wiles_difference(h0: i64, h0_dual: i64, locals: &[LocalTerm]) -> i64 {
    h0 - h0_dual + locals.iter().map(|l| l.tangent_dim - l.h0).sum::<i64>()
}

/// The balanced odd package for rank `n`: ordinary at `p` with `dim 𝒩_p = h⁰_p + n²`,
/// `dim 𝒩_v = h⁰_v` at the other finite places, and `h⁰(G_∞) = n²`.
pub fn balanced_package(n: i64, h0_p: i64, others: &[i64]) -> Vec<LocalTerm> {
    let mut v = vec![LocalTerm { tangent_dim: h0_p + n * n, h0: h0_p }];
    v.extend(others.iter().map(|&h| LocalTerm { tangent_dim: h, h0: h }));
    v.push(LocalTerm { tangent_dim: 0, h0: n * n });
    v
}
