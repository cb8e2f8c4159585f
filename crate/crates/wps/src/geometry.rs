//! Points of `P(a)`, the two notions of equality, affine patches, and the
//! action of `μ_{a_0} × … × μ_{a_n}` on straight projective space.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{Field, Scalar};
use crate::weights::Weight;

/// A point `|x_0 : … : x_n|` given by an affine-cone representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WPoint {
    coords: Vec<Scalar>,
    weight: Weight,
    field: Field,
}

impl WPoint {
    pub fn new(weight: Weight, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != weight.len() {
            return Err(Error::ArityMismatch { expected: weight.len(), got: coords.len() });
        }
        let field = coords[0].field();
        for c in &coords {
            field.ensure_same(c.field())?;
        }
        if coords.iter().all(Scalar::is_zero) {
            return Err(Error::NotAConePoint);
        }
        Ok(WPoint { coords, weight, field })
    }

    pub fn from_i64s(weight: Weight, field: Field, coords: &[i64]) -> Result<Self> {
        Self::new(weight, coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// Colon-separated coordinates such as `1:0:2` or `1/2:3`.
    pub fn parse(text: &str, weight: &Weight, field: Field) -> Result<Self> {
        let coords = text
            .split(':')
            .map(|t| {
                let t = t.trim();
                let q = parse_rational(t).ok_or_else(|| Error::Parse {
                    pos: 0,
                    msg: format!("`{t}` is not a number"),
                })?;
                field.from_rational(&q)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(weight.clone(), coords)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&i| !self.coords[i].is_zero()).collect()
    }

    /// `λ · x = (λ^{a_0} x_0, …, λ^{a_n} x_n)`.
    pub fn scale(&self, lambda: &Scalar) -> WPoint {
        let coords = self
            .coords
            .iter()
            .zip(self.weight.entries())
            .map(|(x, &a)| x * &lambda.pow(a))
            .collect();
        WPoint { coords, weight: self.weight.clone(), field: self.field }
    }

    fn residues(&self) -> Vec<u64> {
        self.coords.iter().map(Scalar::sort_key).collect()
    }

    fn ensure_comparable(&self, other: &WPoint) -> Result<()> {
        if self.weight != other.weight {
            return Err(Error::Mismatch(format!("weights {} and {}", self.weight, other.weight)));
        }
        if self.field != other.field {
            return Err(Error::Mismatch(format!("fields {} and {}", self.field, other.field)));
        }
        Ok(())
    }
}

fn parse_rational(t: &str) -> Option<crate::Rational> {
    use num_bigint::BigInt;
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (t.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return None;
    }
    Some(crate::Rational::new(num, den))
}

impl fmt::Display for WPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "|")
    }
}

impl Serialize for WPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// Equality over the algebraic closure: supports agree and every binomial
/// `p_i^{a_k} q_k^{a_i} − p_k^{a_i} q_i^{a_k}` vanishes.
pub fn eq_geometric(p: &WPoint, q: &WPoint) -> Result<bool> {
    p.ensure_comparable(q)?;
    if p.support() != q.support() {
        return Ok(false);
    }
    let a = p.weight.entries();
    let n = a.len();
    for i in 0..n {
        for k in i + 1..n {
            let lhs = &p.coords[i].pow(a[k]) * &q.coords[k].pow(a[i]);
            let rhs = &p.coords[k].pow(a[i]) * &q.coords[i].pow(a[k]);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Equality over the base field: some `λ ≠ 0` in the field itself scales
/// `p` to `q`.
///
/// Over `F_p` this scans all of `F_p^*`. Over the rationals it needs a
/// nonzero coordinate of weight one to solve for `λ`.
pub fn eq_rational(p: &WPoint, q: &WPoint) -> Result<bool> {
    p.ensure_comparable(q)?;
    match p.field {
        Field::Prime(_) => Ok(p
            .field
            .elements()
            .iter()
            .skip(1)
            .any(|lam| &p.scale(lam) == q)),
        Field::Rational => {
            let a = p.weight.entries();
            let anchor = (0..a.len())
                .find(|&i| a[i] == 1 && !p.coords[i].is_zero())
                .ok_or_else(|| Error::Unsupported("no nonzero coordinate of weight 1".into()))?;
            match q.coords[anchor].div(&p.coords[anchor]) {
                Some(lam) if !lam.is_zero() => Ok(&p.scale(&lam) == q),
                _ => Ok(false),
            }
        }
    }
}

/// A representative together with whether it is a canonical one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub point: WPoint,
    pub canonical: bool,
}

/// Canonical representative where one is available.
///
/// Over the rationals the first nonzero weight-one coordinate is scaled to
/// 1; without such a coordinate the input comes back flagged
/// non-canonical. Over `F_p` the result is the lexicographically smallest
/// member of the `F_p^*`-orbit.
pub fn normalize(p: &WPoint) -> Normalized {
    match p.field {
        Field::Prime(_) => {
            let best = p
                .field
                .elements()
                .iter()
                .skip(1)
                .map(|lam| p.scale(lam))
                .min_by_key(WPoint::residues)
                .expect("F_p^* is nonempty");
            Normalized { point: best, canonical: true }
        }
        Field::Rational => {
            let a = p.weight.entries();
            match (0..a.len()).find(|&i| a[i] == 1 && !p.coords[i].is_zero()) {
                Some(i) => Normalized {
                    point: p.scale(&p.coords[i].inv().expect("nonzero")),
                    canonical: true,
                },
                None => Normalized { point: p.clone(), canonical: false },
            }
        }
    }
}

/// `π: [y_0 : … : y_n] ↦ |y_0^{a_0} : … : y_n^{a_n}|`.
pub fn cover_project(y: &WPoint, target: &Weight) -> Result<WPoint> {
    if !y.weight.is_straight() {
        return Err(Error::Mismatch(format!("source weight {} is not straight", y.weight)));
    }
    if target.len() != y.weight.len() {
        return Err(Error::ArityMismatch { expected: y.weight.len(), got: target.len() });
    }
    let coords = y
        .coords
        .iter()
        .zip(target.entries())
        .map(|(c, &a)| c.pow(a))
        .collect();
    Ok(WPoint { coords, weight: target.clone(), field: y.field })
}

/// The `order`-th roots of unity in `F_p`, requiring all of them to exist.
pub fn roots_of_unity(order: u64, p: u64) -> Result<Vec<Scalar>> {
    if !(p - 1).is_multiple_of(order) {
        return Err(Error::PrimeUnsuitable { p, modulus: order });
    }
    let field = Field::prime(p)?;
    Ok(field
        .elements()
        .into_iter()
        .skip(1)
        .filter(|x| x.pow(order).is_one())
        .collect())
}

/// An element `(σ_0, …, σ_n)` of `μ_{a_0} × … × μ_{a_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElem {
    pub components: Vec<Scalar>,
}

impl GroupElem {
    /// `g · y = [σ_0 y_0 : … : σ_n y_n]`.
    pub fn act(&self, y: &WPoint) -> WPoint {
        let coords = self.components.iter().zip(&y.coords).map(|(s, c)| s * c).collect();
        WPoint { coords, weight: y.weight.clone(), field: y.field }
    }
}

/// Every element of `μ_{a_0} × … × μ_{a_n} ⊂ (F_p^*)^{n+1}`.
pub fn group_elements(a: &Weight, p: u64) -> Result<Vec<GroupElem>> {
    let factors = a
        .entries()
        .iter()
        .map(|&ai| roots_of_unity(ai, p))
        .collect::<Result<Vec<_>>>()?;
    let mut out = vec![GroupElem { components: Vec::new() }];
    for roots in &factors {
        out = out
            .into_iter()
            .flat_map(|g| {
                roots.iter().map(move |r| {
                    let mut c = g.components.clone();
                    c.push(r.clone());
                    GroupElem { components: c }
                })
            })
            .collect();
    }
    Ok(out)
}

fn straight_prime(y: &WPoint) -> Result<u64> {
    if !y.weight.is_straight() {
        return Err(Error::Mismatch(format!("expected a straight point, got weight {}", y.weight)));
    }
    y.field
        .modulus()
        .ok_or_else(|| Error::Unsupported("group action needs a prime field".into()))
}

/// Equality in straight projective space (proportional vectors).
pub fn eq_straight(u: &WPoint, v: &WPoint) -> bool {
    let n = u.coords.len();
    (0..n).all(|i| (0..n).all(|k| &u.coords[i] * &v.coords[k] == &u.coords[k] * &v.coords[i]))
}

/// `|G_y|` for the action of `μ_{a_0} × μ_{a_1} × μ_{a_2}` on a point of
/// straight projective space over `F_p`.
pub fn stabilizer_order(y: &WPoint, a: &Weight) -> Result<usize> {
    let p = straight_prime(y)?;
    Ok(group_elements(a, p)?
        .iter()
        .filter(|g| eq_straight(&g.act(y), y))
        .count())
}

/// The distinct straight points in the orbit of `y`, normalized and sorted.
pub fn orbit(y: &WPoint, a: &Weight) -> Result<Vec<WPoint>> {
    let p = straight_prime(y)?;
    let set: BTreeSet<Vec<u64>> = group_elements(a, p)?
        .iter()
        .map(|g| normalize(&g.act(y)).point.residues())
        .collect();
    let field = y.field;
    Ok(set
        .into_iter()
        .map(|r| WPoint {
            coords: r.into_iter().map(|x| field.from_i64(x as i64)).collect(),
            weight: y.weight.clone(),
            field,
        })
        .collect())
}

/// Affine coordinates on the patch `x_i ≠ 0`: scale coordinate `i` to 1 and
/// drop it. The result is defined up to the type `1/a_i` action of
/// `μ_{a_i}`, see [`patch_equivalent`].
pub fn patch_representative(x: &WPoint, i: usize) -> Result<Vec<Scalar>> {
    let a = x.weight.entries();
    if i >= a.len() {
        return Err(Error::IndexOutOfRange { index: i, len: a.len() });
    }
    if x.coords[i].is_zero() {
        return Err(Error::NotOnPatch(i));
    }
    let target = x.coords[i].inv().expect("nonzero");
    let lambda = match x.field {
        Field::Rational if a[i] == 1 => target,
        Field::Rational => {
            return Err(Error::Unsupported(format!(
                "patch {i} has weight {} over the rationals",
                a[i]
            )))
        }
        Field::Prime(p) => {
            if (p - 1) % a[i] != 0 {
                return Err(Error::PrimeUnsuitable { p, modulus: a[i] });
            }
            x.field
                .elements()
                .into_iter()
                .skip(1)
                .find(|l| l.pow(a[i]) == target)
                .ok_or_else(|| Error::Unsupported(format!("{} has no {}-th root in F_{p}", target, a[i])))?
        }
    };
    let scaled = x.scale(&lambda);
    Ok(scaled
        .coords
        .into_iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, c)| c)
        .collect())
}

/// Whether two patch-`i` representatives differ by some `ε ∈ μ_{a_i}`
/// acting with weights `(a_0, …, â_i, …, a_n)`.
pub fn patch_equivalent(u: &[Scalar], v: &[Scalar], a: &Weight, i: usize) -> Result<bool> {
    let rest: Vec<u64> = a
        .entries()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, &w)| w)
        .collect();
    if u.len() != rest.len() || v.len() != rest.len() {
        return Err(Error::ArityMismatch { expected: rest.len(), got: u.len().min(v.len()) });
    }
    let field = u.first().map(Scalar::field).unwrap_or(Field::Rational);
    let roots = match field {
        Field::Rational if a.entries()[i] == 1 => vec![field.one()],
        Field::Rational => {
            vec![field.one(), field.from_i64(-1)]
                .into_iter()
                .filter(|r| r.pow(a.entries()[i]).is_one())
                .collect()
        }
        Field::Prime(p) => roots_of_unity(a.entries()[i], p)?,
    };
    Ok(roots.iter().any(|eps| {
        u.iter()
            .zip(v)
            .zip(&rest)
            .all(|((x, y), &w)| &(x * &eps.pow(w)) == y)
    }))
}
