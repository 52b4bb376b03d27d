//! Built-in Hopf algebra catalog: truncated polynomial (p-complex) algebras,
//! abelian group algebras, and Taft/Sweedler algebras.

use std::collections::BTreeMap;

use crate::error::HopfError;
use crate::exactla::{FieldSpec, Matrix, Scalar};

use super::presentation::{validate_hopf, HopfPresentation, RawHopf};

/// Identity of a catalog algebra, kept on the presentation so family-specific
/// oracles (like the Jordan decomposition) can check their precondition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CatalogId {
    DividedPower { p: u64 },
    GroupAlgebra { factors: Vec<u64>, field: FieldSpec },
    Taft { n: u64, p: u64 },
    Sweedler { p: u64 },
}

impl std::fmt::Display for CatalogId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogId::DividedPower { p } => write!(f, "divided_power:{p}"),
            CatalogId::GroupAlgebra { factors, field } => {
                let fs: Vec<String> = factors.iter().map(|n| n.to_string()).collect();
                match field {
                    FieldSpec::Prime(p) => write!(f, "group:{}:{}", fs.join("x"), p),
                    FieldSpec::Rational => write!(f, "group:{}:q", fs.join("x")),
                }
            }
            CatalogId::Taft { n, p } => write!(f, "taft:{n}:{p}"),
            CatalogId::Sweedler { p } => write!(f, "sweedler:{p}"),
        }
    }
}

/// `F_p[d]/(d^p)` with `d` primitive: the ground algebra of p-complexes.
pub fn divided_power(p: u64) -> Result<HopfPresentation, HopfError> {
    let field = FieldSpec::prime(p).map_err(|_| {
        HopfError::UnsupportedCatalog(format!("divided_power needs a prime, got {p}"))
    })?;
    let dim = p as usize;
    let labels: Vec<String> = (0..dim)
        .map(|a| match a {
            0 => "1".to_string(),
            1 => "d".to_string(),
            a => format!("d{a}"),
        })
        .collect();

    let mut mult = Vec::new();
    for a in 0..dim {
        for b in 0..dim {
            if a + b < dim {
                mult.push((a, b, a + b, field.one()));
            }
        }
    }

    // Pascal's triangle mod p for Δ(d^a) = Σ C(a,j) d^j ⊗ d^(a-j).
    let mut binom = vec![vec![field.zero(); dim]; dim];
    for a in 0..dim {
        binom[a][0] = field.one();
        for j in 1..=a {
            let up = binom[a - 1][j - 1].clone();
            let left = if j <= a - 1 {
                binom[a - 1][j].clone()
            } else {
                field.zero()
            };
            binom[a][j] = up.add(&left);
        }
    }
    let mut comult = Vec::new();
    for a in 0..dim {
        for j in 0..=a {
            if !binom[a][j].is_zero() {
                comult.push((a, j, a - j, binom[a][j].clone()));
            }
        }
    }

    let counit: Vec<Scalar> = (0..dim)
        .map(|a| if a == 0 { field.one() } else { field.zero() })
        .collect();
    let antipode = Matrix::from_fn(field, dim, dim, |i, j| {
        if i == j {
            // S(d^a) = (-d)^a
            if j % 2 == 0 {
                field.one()
            } else {
                field.from_i64(-1)
            }
        } else {
            field.zero()
        }
    });
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();

    let mut h = validate_hopf(RawHopf {
        field,
        dim,
        basis_labels: labels,
        unit,
        mult,
        comult,
        counit,
        antipode,
    })?;
    h.set_catalog_id(CatalogId::DividedPower { p });
    Ok(h)
}

/// Group algebra of the abelian group with the given invariant factors.
pub fn group_algebra(factors: &[u64], field: FieldSpec) -> Result<HopfPresentation, HopfError> {
    if factors.is_empty() || factors.iter().any(|&n| n < 2) {
        return Err(HopfError::UnsupportedCatalog(
            "group factors must all be at least 2".into(),
        ));
    }
    let dim: usize = factors.iter().map(|&n| n as usize).product();
    let k = factors.len();

    let index_of = |tuple: &[u64]| -> usize {
        let mut idx = 0usize;
        for (t, &n) in tuple.iter().zip(factors) {
            idx = idx * n as usize + *t as usize;
        }
        idx
    };
    let tuple_of = |mut idx: usize| -> Vec<u64> {
        let mut out = vec![0u64; k];
        for i in (0..k).rev() {
            out[i] = (idx % factors[i] as usize) as u64;
            idx /= factors[i] as usize;
        }
        out
    };

    let labels: Vec<String> = (0..dim)
        .map(|idx| {
            let t = tuple_of(idx);
            if t.iter().all(|&x| x == 0) {
                "1".to_string()
            } else if k == 1 {
                if t[0] == 1 {
                    "g".to_string()
                } else {
                    format!("g{}", t[0])
                }
            } else {
                let coords: Vec<String> = t.iter().map(|x| x.to_string()).collect();
                format!("g({})", coords.join(","))
            }
        })
        .collect();

    let mut mult = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let (ti, tj) = (tuple_of(i), tuple_of(j));
            let sum: Vec<u64> = ti
                .iter()
                .zip(&tj)
                .zip(factors)
                .map(|((a, b), n)| (a + b) % n)
                .collect();
            mult.push((i, j, index_of(&sum), field.one()));
        }
    }
    let comult: Vec<(usize, usize, usize, Scalar)> =
        (0..dim).map(|i| (i, i, i, field.one())).collect();
    let counit = vec![field.one(); dim];
    let mut antipode = Matrix::zeros(field, dim, dim);
    for i in 0..dim {
        let t = tuple_of(i);
        let inv: Vec<u64> = t.iter().zip(factors).map(|(a, n)| (n - a) % n).collect();
        antipode.set(index_of(&inv), i, field.one());
    }
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();

    let mut h = validate_hopf(RawHopf {
        field,
        dim,
        basis_labels: labels,
        unit,
        mult,
        comult,
        counit,
        antipode,
    })?;
    h.set_catalog_id(CatalogId::GroupAlgebra {
        factors: factors.to_vec(),
        field,
    });
    Ok(h)
}

/// Taft algebra T_n over GF(p): generated by a grouplike g (gⁿ = 1) and a
/// (1, g)-skew primitive x (xⁿ = 0, xg = q·gx) for q the smallest element of
/// multiplicative order n in GF(p). Requires n | p−1.
pub fn taft(n: u64, p: u64) -> Result<HopfPresentation, HopfError> {
    let field = FieldSpec::prime(p)
        .map_err(|_| HopfError::UnsupportedCatalog(format!("taft needs a prime, got {p}")))?;
    if n < 2 || (p - 1) % n != 0 {
        return Err(HopfError::UnsupportedCatalog(format!(
            "taft({n},{p}) needs n >= 2 and n | p-1"
        )));
    }
    let q = (2..p)
        .find(|&c| multiplicative_order(c, p) == n)
        .ok_or_else(|| {
            HopfError::UnsupportedCatalog(format!("no element of order {n} in GF({p})"))
        })?;
    let nn = n as usize;
    let dim = nn * nn;
    // Basis monomials g^a x^b at index a·n + b.
    let idx = |a: usize, b: usize| a * nn + b;

    let labels: Vec<String> = (0..dim)
        .map(|t| {
            let (a, b) = (t / nn, t % nn);
            let mut s = String::new();
            match a {
                0 => {}
                1 => s.push('g'),
                a => s.push_str(&format!("g{a}")),
            }
            match b {
                0 => {}
                1 => s.push('x'),
                b => s.push_str(&format!("x{b}")),
            }
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        })
        .collect();

    // (g^a x^b)(g^c x^d) = q^(bc) g^(a+c) x^(b+d), zero past x^n.
    let qpow = |e: u64| -> Scalar {
        let mut out = field.one();
        let qs = field.from_i64(q as i64);
        for _ in 0..e {
            out = out.mul(&qs);
        }
        out
    };
    let mut mult = Vec::new();
    for a in 0..nn {
        for b in 0..nn {
            for c in 0..nn {
                for d in 0..nn {
                    if b + d < nn {
                        mult.push((
                            idx(a, b),
                            idx(c, d),
                            idx((a + c) % nn, b + d),
                            qpow((b * c) as u64),
                        ));
                    }
                }
            }
        }
    }

    // Multiply sparse elements of H⊗H using the monomial rule directly.
    type Tensor = BTreeMap<(usize, usize), Scalar>;
    let mono_mul = |s: usize, t: usize| -> Option<(usize, Scalar)> {
        let (a, b) = (s / nn, s % nn);
        let (c, d) = (t / nn, t % nn);
        if b + d >= nn {
            return None;
        }
        Some((idx((a + c) % nn, b + d), qpow((b * c) as u64)))
    };
    let tensor_mul = |x: &Tensor, y: &Tensor| -> Tensor {
        let mut out: Tensor = BTreeMap::new();
        for ((a1, b1), c1) in x {
            for ((a2, b2), c2) in y {
                let (Some((l, cl)), Some((r, cr))) = (mono_mul(*a1, *a2), mono_mul(*b1, *b2))
                else {
                    continue;
                };
                let e = out.entry((l, r)).or_insert_with(|| field.zero());
                *e = e.add(&c1.mul(c2).mul(&cl).mul(&cr));
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    };

    // Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x; extend multiplicatively.
    let delta_g: Tensor = BTreeMap::from([((idx(1, 0), idx(1, 0)), field.one())]);
    let delta_x: Tensor = BTreeMap::from([
        ((idx(0, 1), idx(0, 0)), field.one()),
        ((idx(1, 0), idx(0, 1)), field.one()),
    ]);
    let mut comult = Vec::new();
    for a in 0..nn {
        for b in 0..nn {
            let mut acc: Tensor = BTreeMap::from([((idx(0, 0), idx(0, 0)), field.one())]);
            for _ in 0..a {
                acc = tensor_mul(&acc, &delta_g);
            }
            for _ in 0..b {
                acc = tensor_mul(&acc, &delta_x);
            }
            for ((l, r), c) in acc {
                comult.push((idx(a, b), l, r, c));
            }
        }
    }

    let counit: Vec<Scalar> = (0..dim)
        .map(|t| {
            if t % nn == 0 {
                field.one() // ε(g^a) = 1
            } else {
                field.zero() // ε(g^a x^b) = 0 for b > 0
            }
        })
        .collect();

    // S(g) = g^(n-1), S(x) = -g^(n-1) x; S(g^a x^b) = S(x)^b S(g)^a since S
    // is an algebra antihomomorphism.
    let mut antipode = Matrix::zeros(field, dim, dim);
    for a in 0..nn {
        for b in 0..nn {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::from([(idx(0, 0), field.one())]);
            let mul_by = |acc: &BTreeMap<usize, Scalar>,
                              m: usize,
                              coeff: &Scalar|
             -> BTreeMap<usize, Scalar> {
                let mut out = BTreeMap::new();
                for (s, c) in acc {
                    if let Some((t, ct)) = mono_mul(*s, m) {
                        let e = out.entry(t).or_insert_with(|| field.zero());
                        *e = (*e).add(&c.mul(&ct).mul(coeff));
                    }
                }
                out
            };
            for _ in 0..b {
                acc = mul_by(&acc, idx(nn - 1, 1), &field.from_i64(-1));
            }
            for _ in 0..a {
                acc = mul_by(&acc, idx(nn - 1, 0), &field.one());
            }
            for (t, c) in acc {
                antipode.set(t, idx(a, b), c);
            }
        }
    }

    let mut unit = vec![field.zero(); dim];
    unit[idx(0, 0)] = field.one();

    let mut h = validate_hopf(RawHopf {
        field,
        dim,
        basis_labels: labels,
        unit,
        mult,
        comult,
        counit,
        antipode,
    })?;
    h.set_catalog_id(CatalogId::Taft { n, p });
    Ok(h)
}

/// Sweedler's 4-dimensional Hopf algebra over GF(p), p odd: the Taft algebra
/// with n = 2.
pub fn sweedler(p: u64) -> Result<HopfPresentation, HopfError> {
    if p == 2 {
        return Err(HopfError::UnsupportedCatalog(
            "sweedler needs an odd prime".into(),
        ));
    }
    let mut h = taft(2, p)?;
    h.set_catalog_id(CatalogId::Sweedler { p });
    Ok(h)
}

fn multiplicative_order(c: u64, p: u64) -> u64 {
    let mut x = c % p;
    let mut ord = 1;
    while x != 1 {
        x = x * c % p;
        ord += 1;
    }
    ord
}

/// Parse a catalog shorthand: `divided_power:3`, `group:2:q`, `group:2x4:3`,
/// `taft:2:3`, `sweedler:3`.
pub fn by_name(name: &str) -> Result<HopfPresentation, HopfError> {
    let parts: Vec<&str> = name.split(':').collect();
    let bad = || HopfError::UnsupportedCatalog(format!("cannot parse catalog name `{name}`"));
    match parts.as_slice() {
        ["divided_power", p] => divided_power(p.parse().map_err(|_| bad())?),
        ["group", factors, fld] => {
            let factors: Vec<u64> = factors
                .split('x')
                .map(|s| s.parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            let field = if *fld == "q" {
                FieldSpec::Rational
            } else {
                FieldSpec::prime(fld.parse().map_err(|_| bad())?)
                    .map_err(|_| HopfError::UnsupportedCatalog(format!("{fld} is not prime")))?
            };
            group_algebra(&factors, field)
        }
        ["taft", n, p] => taft(n.parse().map_err(|_| bad())?, p.parse().map_err(|_| bad())?),
        ["sweedler", p] => sweedler(p.parse().map_err(|_| bad())?),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_power_small() {
        let h = divided_power(2).unwrap();
        assert_eq!(h.dim(), 2);
        // λ = d (the top power).
        assert_eq!(h.left_integral()[0], h.field().zero());
        assert_eq!(h.left_integral()[1], h.field().one());
    }

    #[test]
    fn sweedler_is_dim_four_and_non_involutive() {
        let h = sweedler(3).unwrap();
        assert_eq!(h.dim(), 4);
        let s2 = h.antipode().matmul(h.antipode());
        assert!(!s2.is_identity());
        assert!(s2.matmul(&s2).is_identity()); // S⁴ = 1 for Taft n = 2
    }

    #[test]
    fn taft_needs_compatible_parameters() {
        assert!(taft(2, 3).is_ok());
        assert!(taft(4, 5).is_ok());
        assert!(matches!(
            taft(3, 5),
            Err(HopfError::UnsupportedCatalog(_))
        ));
    }

    #[test]
    fn catalog_names_parse() {
        assert_eq!(by_name("divided_power:3").unwrap().dim(), 3);
        assert_eq!(by_name("group:2:q").unwrap().dim(), 2);
        assert_eq!(by_name("group:2x2:3").unwrap().dim(), 4);
        assert_eq!(by_name("taft:2:3").unwrap().dim(), 4);
        assert!(by_name("nope:1").is_err());
    }

    #[test]
    fn semisimplicity_flags() {
        assert!(group_algebra(&[2], FieldSpec::Rational).unwrap().is_semisimple());
        assert!(!divided_power(3).unwrap().is_semisimple());
        assert!(!sweedler(3).unwrap().is_semisimple());
        // C2 over GF(2): dividing characteristic, not semisimple.
        let c2 = group_algebra(&[2], FieldSpec::prime(2).unwrap()).unwrap();
        assert!(!c2.is_semisimple());
    }
}
