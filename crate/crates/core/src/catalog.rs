//! Named base manifolds: `point`, `ppN` (projective N-space), `curve(g)`,
//! `abelian(d)`, `dolgachev(w,t[,q])`, and products written `a x b`.

use std::sync::Arc;

use crate::charclass::ChernData;
use crate::error::{Error, Result};
use crate::pbundle::Base;
use crate::ring::{product_ring, pull_left, pull_right, BasisSymbol, RingElement, RingPresentation};
use crate::scalar::Scalar;

pub fn point<S: Scalar>() -> Base<S> {
    let ring = RingPresentation::new(0, vec![BasisSymbol::new("1", 0)], vec![], Some(0)).expect("point ring");
    Base::parallelizable(Arc::new(ring)).expect("point base")
}

/// `ℙ^m` with hyperplane class `h` and `c(T) = (1 + h)^{m+1}`.
pub fn projective_space<S: Scalar>(m: u32) -> Result<Base<S>> {
    if m == 0 {
        return Ok(point());
    }
    let name = |i: u32| match i {
        0 => "1".to_string(),
        1 => "h".to_string(),
        _ => format!("h^{i}"),
    };
    let basis = (0..=m).map(|i| BasisSymbol::new(name(i), 2 * i)).collect();
    let mut products = Vec::new();
    for i in 1..=m as usize {
        for j in 1..=m as usize {
            if i + j <= m as usize {
                products.push((i, j, vec![(i + j, S::one())]));
            }
        }
    }
    let ring = Arc::new(RingPresentation::new(m, basis, products, Some(m as usize))?);
    let h = RingElement::symbol(&ring, "h")?;
    let total = (&RingElement::one(&ring) + &h).pow(m + 1);
    let classes = (1..=m).map(|i| total.homogeneous(2 * i)).collect();
    let tangent = ChernData::new(&ring, m, classes)?;
    Base::new(ring, tangent)
}

/// Even cohomology `⟨1, F⟩` of a genus-`g` curve, `c_1 = (2 - 2g) F`.
pub fn curve<S: Scalar>(genus: u32) -> Result<Base<S>> {
    let basis = vec![BasisSymbol::new("1", 0), BasisSymbol::new("F", 2)];
    let ring = Arc::new(RingPresentation::new(1, basis, vec![], Some(1))?);
    let c1 = RingElement::symbol(&ring, "F")?.scale(&S::from_int(2 - 2 * genus as i64));
    let tangent = ChernData::new(&ring, 1, vec![c1])?;
    Base::new(ring, tangent)
}

/// Even part `⟨1, theta, pt⟩` of an abelian surface with `theta^2 = d pt`.
pub fn abelian_surface<S: Scalar>(polarization: S) -> Result<Base<S>> {
    let basis = vec![BasisSymbol::new("1", 0), BasisSymbol::new("theta", 2), BasisSymbol::new("pt", 4)];
    let ring = RingPresentation::new(2, basis, vec![(1, 1, vec![(2, polarization)])], Some(2))?;
    Base::parallelizable(Arc::new(ring))
}

/// Subring `⟨1, omega, G, pt⟩` of a Dolgachev surface `S_q`:
/// `omega^2 = w pt`, `omega G = t pt`, `G^2 = 0`, `c_1 = (q - 2) G`,
/// `c_2 = 12 pt`.
pub fn dolgachev<S: Scalar>(w: S, t: S, q: i64) -> Result<Base<S>> {
    if w <= S::zero() {
        return Err(Error::pre("Dolgachev model needs omega^2 > 0"));
    }
    if t.is_zero() {
        return Err(Error::pre("Dolgachev model needs omega.G != 0"));
    }
    let basis = vec![
        BasisSymbol::new("1", 0),
        BasisSymbol::new("omega", 2),
        BasisSymbol::new("G", 2),
        BasisSymbol::new("pt", 4),
    ];
    let products = vec![(1, 1, vec![(3, w)]), (1, 2, vec![(3, t)])];
    let ring = Arc::new(RingPresentation::new(2, basis, products, Some(3))?);
    let c1 = RingElement::symbol(&ring, "G")?.scale(&S::from_int(q - 2));
    let c2 = RingElement::symbol(&ring, "pt")?.scale(&S::from_int(12));
    let tangent = ChernData::new(&ring, 2, vec![c1, c2])?;
    Base::new(ring, tangent)
}

/// Product manifold with `c(X × Y) = c(X) c(Y)`.
pub fn product<S: Scalar>(x: &Base<S>, y: &Base<S>) -> Result<Base<S>> {
    let ring = Arc::new(product_ring(x.ring(), y.ring())?);
    let cx = pull_left(&x.tangent().total(), y.ring(), &ring);
    let cy = pull_right(x.ring(), &y.tangent().total(), &ring);
    let total = &cx * &cy;
    let n = ring.dimension();
    let classes = (1..=n).map(|i| total.homogeneous(2 * i)).collect();
    let tangent = ChernData::new(&ring, n.max(1), classes)?;
    Base::new(ring, tangent)
}

/// Resolves a catalog expression such as `pp1 x curve(2)`.
pub fn parse<S: Scalar>(expr: &str) -> Result<Base<S>> {
    let mut factors = expr.split('x').map(str::trim);
    let first = factors.next().ok_or_else(|| Error::Parse("empty catalog name".into()))?;
    let mut acc = parse_factor(first)?;
    for f in factors {
        acc = product(&acc, &parse_factor(f)?)?;
    }
    Ok(acc)
}

fn parse_factor<S: Scalar>(term: &str) -> Result<Base<S>> {
    let (name, args) = match term.split_once('(') {
        Some((name, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in `{term}`")))?;
            let args: Vec<&str> = inner.split(',').map(str::trim).filter(|a| !a.is_empty()).collect();
            (name.trim(), args)
        }
        None => (term, Vec::new()),
    };
    let int_arg = |i: usize, default: i64| -> Result<i64> {
        match args.get(i) {
            Some(a) => a.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer argument `{a}`"))),
            None => Ok(default),
        }
    };
    let ratio_arg = |i: usize, default: i64| -> Result<S> {
        match args.get(i) {
            Some(a) => S::parse_ratio(a).ok_or_else(|| Error::Parse(format!("bad rational argument `{a}`"))),
            None => Ok(S::from_int(default)),
        }
    };
    match name {
        "point" => Ok(point()),
        "curve" => {
            let g = int_arg(0, 0)?;
            if g < 0 {
                return Err(Error::Parse("curve genus must be nonnegative".into()));
            }
            curve(g as u32)
        }
        "abelian" => abelian_surface(ratio_arg(0, 2)?),
        "dolgachev" => dolgachev(ratio_arg(0, 1)?, ratio_arg(1, 1)?, int_arg(2, 3)?),
        _ => match name.strip_prefix("pp").map(str::parse::<u32>) {
            Some(Ok(m)) => projective_space(m),
            _ => Err(Error::Parse(format!("unknown catalog space `{name}`"))),
        },
    }
}
