use fpcohomology::Cocycle1;
use galois_rings::{linalg, Elem, Mat};
use root_data::RootDatum;

use crate::conditions::{in_condition, nr_conjugator, unconjugate_nr, LocalCondition};
use crate::error::LocalError;
use crate::rep::TameRep;
use crate::tangent::conjugate_cochain;

/// Cayley transform `(Id + Z/2)(Id − Z/2)⁻¹`, which stays in `Sp_2n` for `Z ∈ sp_2n`.
fn cayley(z: &Mat) -> Result<Mat, LocalError> {
    let r = z.ring();
    let half = r.inv(&r.from_int(2))?;
    let h = z.scale(&half);
    let id = Mat::identity(r, z.rows());
    Ok(&(&id + &h) * &(&id - &h).inverse()?)
}

/// Twists `base` by `(Id + p^{m−1}X)` and looks for a strict conjugator putting the
/// result back into the condition's shape.
///
/// Returns the conjugator `K ≡ Id mod p` with `K·ϱ_X·K⁻¹` passing [`in_condition`], or
/// `None` if no such `K` exists. At `m = 2` strict conjugation acts trivially on a
/// residually trivial `ϱ`, so only `K = Id` is tried; at `m = 3` every strict
/// conjugator acts through its `p`-linear term, so the linear search is exhaustive.
pub fn twist_certificate(
    datum: &RootDatum,
    kind: LocalCondition,
    base: &TameRep,
    x: &Cocycle1,
) -> Result<Option<Mat>, LocalError> {
    let r = base.ring().clone();
    let f = r.residue_field();
    let m = r.precision();
    let twisted = base.twist(&datum.from_coords(&f, x.value(0)), &datum.from_coords(&f, x.value(1)))?;
    let id = Mat::identity(&r, 2 * datum.n());
    if m <= 2 {
        return Ok(in_condition(datum, kind, &twisted)?.then_some(id));
    }
    let (frame, x0) = match kind {
        LocalCondition::Unramified => {
            let ci = nr_conjugator(datum, &f).inverse()?;
            (unconjugate_nr(datum, base)?, conjugate_cochain(datum, &ci, x)?)
        }
        LocalCondition::Ramified => (base.clone(), x.clone()),
    };
    let (a1, b1) = frame.first_order()?;
    let alpha = kind.alpha(datum.n());
    let xa = datum.root_vector(&f, &alpha);
    let ia = datum.index_of(&alpha);
    let d = datum.dim();
    let co = |y: &Mat| datum.coords(y).expect("sp element");
    let drop_alpha = |mut v: Vec<Elem>| {
        v[ia] = f.zero();
        v
    };
    let cols: Vec<Vec<Elem>> = datum
        .basis(&f)
        .iter()
        .map(|y| {
            let mut c = co(&y.bracket(&a1).bracket(&xa));
            c.extend(drop_alpha(co(&y.bracket(&b1))));
            c
        })
        .collect();
    let xs = datum.from_coords(&f, x0.value(0));
    let mut rhs = co(&xs.bracket(&xa));
    rhs.extend(drop_alpha(x0.value(1).to_vec()));
    let rhs: Vec<Elem> = rhs.iter().map(|e| f.neg(e)).collect();
    let Some(y) = linalg::solve(&linalg::cols_to_mat(&f, 2 * d, &cols), &rhs) else {
        return Ok(None);
    };
    let z = datum.from_coords(&f, &y).lift_to(&r)?.mul_p_pow(m - 2);
    let mut k = cayley(&z)?;
    if kind == LocalCondition::Unramified {
        let c = nr_conjugator(datum, &r);
        k = &(&c * &k) * &c.inverse()?;
    }
    let candidate = twisted.conjugate(&k)?;
    Ok(in_condition(datum, kind, &candidate)?.then_some(k))
}
