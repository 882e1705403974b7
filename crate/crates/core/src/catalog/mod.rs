//! Built-in exactly-specified algebras: the Iwasawa realification, the
//! (8,2) and (6,3) one-parameter complex families, Will's (6,3) curve of
//! soliton-free algebras, plus Heisenberg, abelian and affine controls.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::acs::{anticomplexify, classify_acs, complexify, AlmostComplexStructure, ClassificationFlags};
use crate::exact::{Field, GaussianRational, Rational};
use crate::lie::{Bracket, LieAlgebra};
use crate::metric::InnerProduct;

#[derive(Clone, Debug)]
pub enum CatalogAlgebra {
    Rational(LieAlgebra<Rational>),
    Gaussian(LieAlgebra<GaussianRational>),
}

impl CatalogAlgebra {
    pub fn dim(&self) -> usize {
        match self {
            CatalogAlgebra::Rational(a) => a.dim(),
            CatalogAlgebra::Gaussian(a) => a.dim(),
        }
    }

    pub fn as_rational(&self) -> Option<&LieAlgebra<Rational>> {
        match self {
            CatalogAlgebra::Rational(a) => Some(a),
            CatalogAlgebra::Gaussian(_) => None,
        }
    }

    pub fn as_gaussian(&self) -> LieAlgebra<GaussianRational> {
        match self {
            CatalogAlgebra::Rational(a) => {
                LieAlgebra::validate(a.bracket().promote()).expect("promotion preserves Jacobi")
            }
            CatalogAlgebra::Gaussian(a) => a.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub params: BTreeMap<String, GaussianRational>,
    pub algebra: CatalogAlgebra,
    pub j: Option<AlmostComplexStructure>,
    pub ip: InnerProduct,
    pub provenance: String,
    pub basis_names: Vec<String>,
    /// classification the entry is constructed to have; checked in tests
    pub expected_flags: Option<ClassificationFlags>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("entry `{name}` requires parameter `{param}`")]
    MissingParam { name: String, param: String },
    #[error("entry `{name}` does not take parameter `{param}`")]
    UnexpectedParam { name: String, param: String },
    #[error("invalid parameter for `{name}`: {reason}")]
    InvalidParam { name: String, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogInfo {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub summary: &'static str,
}

pub fn catalog_list() -> Vec<CatalogInfo> {
    vec![
        CatalogInfo {
            name: "heisenberg3",
            params: &[],
            summary: "3-dimensional Heisenberg algebra [X1,X2] = X3",
        },
        CatalogInfo {
            name: "iwasawa",
            params: &[],
            summary: "realified complex Heisenberg algebra (Iwasawa manifold), bi-invariant J",
        },
        CatalogInfo {
            name: "iwasawa_anti",
            params: &[],
            summary: "anti-complexification of heisenberg3, anti-bi-invariant J",
        },
        CatalogInfo {
            name: "aff_c",
            params: &[],
            summary: "realified complex affine algebra [X,Y] = Y; non-nilpotent control",
        },
        CatalogInfo {
            name: "abelian2",
            params: &[],
            summary: "abelian algebra of dimension 2",
        },
        CatalogInfo {
            name: "abelian4",
            params: &[],
            summary: "abelian algebra of dimension 4",
        },
        CatalogInfo {
            name: "abelian6",
            params: &[],
            summary: "abelian algebra of dimension 6",
        },
        CatalogInfo {
            name: "lambda82",
            params: &["t"],
            summary: "complex 2-step family of type (8,2); Pfaffian form x^4 + t x^2 y^2 + y^4",
        },
        CatalogInfo {
            name: "lambda63",
            params: &["t"],
            summary: "complex 2-step family of type (6,3); Pfaffian form (t^3+2)xyz - t(x^3+y^3+z^3)",
        },
        CatalogInfo {
            name: "will63",
            params: &["t"],
            summary: "Will's curve of real type-(6,3) algebras without nilsoliton metrics (t in (1,oo))",
        },
    ]
}

fn names(prefix: &str, count: usize, start: usize) -> Vec<String> {
    (start..start + count).map(|i| format!("{prefix}{i}")).collect()
}

fn flags(in_int: bool, in_ab: bool, in_c: bool, in_ch: bool, in_cbar: bool) -> ClassificationFlags {
    ClassificationFlags {
        in_int,
        in_ab,
        in_c,
        in_ch,
        in_cbar,
    }
}

fn require_no_params(name: &str, params: &BTreeMap<String, GaussianRational>) -> Result<(), CatalogError> {
    if let Some(p) = params.keys().next() {
        return Err(CatalogError::UnexpectedParam {
            name: name.to_string(),
            param: p.clone(),
        });
    }
    Ok(())
}

fn take_t(name: &str, params: &BTreeMap<String, GaussianRational>) -> Result<GaussianRational, CatalogError> {
    for p in params.keys() {
        if p != "t" {
            return Err(CatalogError::UnexpectedParam {
                name: name.to_string(),
                param: p.clone(),
            });
        }
    }
    params.get("t").cloned().ok_or(CatalogError::MissingParam {
        name: name.to_string(),
        param: "t".to_string(),
    })
}

fn heisenberg3() -> LieAlgebra<Rational> {
    let mut b = Bracket::zero(3);
    b.add_to_pair(0, 1, 2, Rational::from_int(1));
    LieAlgebra::validate(b).expect("h3 satisfies Jacobi")
}

fn lambda82(t: &GaussianRational) -> LieAlgebra<GaussianRational> {
    let one = GaussianRational::one();
    let mut b = Bracket::zero(10);
    // bases X1..X8 of W1 (slots 0..7) and Z1, Z2 of W2 (slots 8, 9)
    b.add_to_pair(0, 4, 8, one.clone()); // [X1,X5] = Z1
    b.add_to_pair(1, 5, 8, one.clone()); // [X2,X6] = Z1
    b.add_to_pair(2, 6, 8, one.clone()); // [X3,X7] = Z1
    b.add_to_pair(3, 7, 8, one.clone()); // [X4,X8] = Z1
    b.add_to_pair(1, 4, 9, one.clone()); // [X2,X5] = Z2
    b.add_to_pair(2, 5, 9, one.clone()); // [X3,X6] = Z2
    b.add_to_pair(3, 6, 9, one.clone()); // [X4,X7] = Z2
    b.add_to_pair(0, 7, 9, -one.clone()); // [X1,X8] = -Z2
    b.add_to_pair(1, 6, 9, -t.clone()); // [X2,X7] = -t Z2
    LieAlgebra::validate(b).expect("2-step bracket satisfies Jacobi")
}

fn lambda63(t: &GaussianRational) -> LieAlgebra<GaussianRational> {
    let one = GaussianRational::one();
    let mut b = Bracket::zero(9);
    // bases X1..X6 of W1 (slots 0..5) and Z1..Z3 of W2 (slots 6..8)
    b.add_to_pair(0, 1, 6, t.clone()); // [X1,X2] = t Z1
    b.add_to_pair(2, 3, 7, t.clone()); // [X3,X4] = t Z2
    b.add_to_pair(4, 5, 8, t.clone()); // [X5,X6] = t Z3
    b.add_to_pair(4, 3, 6, one.clone()); // [X5,X4] = Z1
    b.add_to_pair(0, 5, 7, one.clone()); // [X1,X6] = Z2
    b.add_to_pair(2, 1, 8, one.clone()); // [X3,X2] = Z3
    b.add_to_pair(2, 5, 6, one.clone()); // [X3,X6] = Z1
    b.add_to_pair(4, 1, 7, one.clone()); // [X5,X2] = Z2
    b.add_to_pair(0, 3, 8, one.clone()); // [X1,X4] = Z3
    LieAlgebra::validate(b).expect("2-step bracket satisfies Jacobi")
}

fn will63(t: &Rational) -> LieAlgebra<Rational> {
    let one = Rational::from_int(1);
    let mut b = Bracket::zero(9);
    b.add_to_pair(4, 3, 6, one.clone()); // [X5,X4] = X7
    b.add_to_pair(0, 5, 7, one.clone()); // [X1,X6] = X8
    b.add_to_pair(2, 1, 8, one.clone()); // [X3,X2] = X9
    b.add_to_pair(2, 5, 6, t.clone()); // [X3,X6] = t X7
    b.add_to_pair(4, 1, 7, t.clone()); // [X5,X2] = t X8
    b.add_to_pair(0, 3, 8, t.clone()); // [X1,X4] = t X9
    b.add_to_pair(0, 1, 6, one); // [X1,X2] = X7
    LieAlgebra::validate(b).expect("2-step bracket satisfies Jacobi")
}

fn aff_c() -> LieAlgebra<Rational> {
    let one = Rational::from_int(1);
    let mut b = Bracket::zero(4);
    b.add_to_pair(0, 2, 2, one.clone()); // [X1,X3] = X3
    b.add_to_pair(0, 3, 3, one.clone()); // [X1,X4] = X4
    b.add_to_pair(1, 2, 3, one.clone()); // [X2,X3] = X4
    b.add_to_pair(1, 3, 2, -one); // [X2,X4] = -X3
    LieAlgebra::validate(b).expect("realified affine algebra satisfies Jacobi")
}

pub fn catalog_get(
    name: &str,
    params: &BTreeMap<String, GaussianRational>,
) -> Result<CatalogEntry, CatalogError> {
    match name {
        "heisenberg3" => {
            require_no_params(name, params)?;
            Ok(CatalogEntry {
                name: name.to_string(),
                params: BTreeMap::new(),
                algebra: CatalogAlgebra::Rational(heisenberg3()),
                j: None,
                ip: InnerProduct::standard(3),
                provenance: "3-dimensional Heisenberg algebra; nilsoliton metric at the identity"
                    .to_string(),
                basis_names: names("X", 3, 1),
                expected_flags: None,
            })
        }
        "iwasawa" => {
            require_no_params(name, params)?;
            let (a, j) = complexify(&heisenberg3()).expect("complexification is valid");
            Ok(CatalogEntry {
                name: name.to_string(),
                params: BTreeMap::new(),
                algebra: CatalogAlgebra::Rational(a),
                j: Some(j),
                ip: InnerProduct::standard(6),
                provenance: "realification of the complex Heisenberg algebra [Z1,Z2] = Z3 on the \
                             interleaved basis (Iwasawa manifold); the coframe presentation \
                             de5 = e13 + e42, de6 = e14 + e23 is recovered by the basis change \
                             (e5, e6) -> (-e5, -e6) under the convention da(X, Y) = -a([X, Y])"
                    .to_string(),
                basis_names: names("e", 6, 1),
                expected_flags: Some(flags(true, false, true, true, false)),
            })
        }
        "iwasawa_anti" => {
            require_no_params(name, params)?;
            let (a, j) = anticomplexify(&heisenberg3()).expect("h3 is 2-step");
            Ok(CatalogEntry {
                name: name.to_string(),
                params: BTreeMap::new(),
                algebra: CatalogAlgebra::Rational(a),
                j: Some(j),
                ip: InnerProduct::standard(6),
                provenance: "anti-complexification of the Heisenberg algebra; the quasi-Kahler \
                             Chern-flat partner of the Iwasawa entry"
                    .to_string(),
                basis_names: names("e", 6, 1),
                expected_flags: Some(flags(false, false, false, true, true)),
            })
        }
        "aff_c" => {
            require_no_params(name, params)?;
            Ok(CatalogEntry {
                name: name.to_string(),
                params: BTreeMap::new(),
                algebra: CatalogAlgebra::Rational(aff_c()),
                j: Some(AlmostComplexStructure::standard_interleaved(4)),
                ip: InnerProduct::standard(4),
                provenance: "realification of the complex affine algebra [X,Y] = Y; \
                             non-nilpotent negative control"
                    .to_string(),
                basis_names: names("X", 4, 1),
                expected_flags: Some(flags(true, false, true, true, false)),
            })
        }
        "abelian2" | "abelian4" | "abelian6" => {
            require_no_params(name, params)?;
            let n: usize = name["abelian".len()..].parse().expect("literal dimension");
            let a = LieAlgebra::validate(Bracket::zero(n)).expect("zero bracket");
            Ok(CatalogEntry {
                name: name.to_string(),
                params: BTreeMap::new(),
                algebra: CatalogAlgebra::Rational(a),
                j: Some(AlmostComplexStructure::standard_interleaved(n)),
                ip: InnerProduct::standard(n),
                provenance: format!("abelian algebra of dimension {n}; flat torus control"),
                basis_names: names("X", n, 1),
                expected_flags: Some(flags(true, true, true, true, true)),
            })
        }
        "lambda82" => {
            let t = take_t(name, params)?;
            let a = lambda82(&t);
            let mut p = BTreeMap::new();
            p.insert("t".to_string(), t);
            let mut basis = names("X", 8, 1);
            basis.extend(names("Z", 2, 1));
            Ok(CatalogEntry {
                name: name.to_string(),
                params: p,
                algebra: CatalogAlgebra::Gaussian(a),
                j: None,
                ip: InnerProduct::standard(10),
                provenance: "one-parameter family of complex 2-step algebras of type (8,2); \
                             Pfaffian form x^4 + t x^2 y^2 + y^4"
                    .to_string(),
                basis_names: basis,
                expected_flags: None,
            })
        }
        "lambda63" => {
            let t = take_t(name, params)?;
            let a = lambda63(&t);
            let mut p = BTreeMap::new();
            p.insert("t".to_string(), t);
            let mut basis = names("X", 6, 1);
            basis.extend(names("Z", 3, 1));
            Ok(CatalogEntry {
                name: name.to_string(),
                params: p,
                algebra: CatalogAlgebra::Gaussian(a),
                j: None,
                ip: InnerProduct::standard(9),
                provenance: "one-parameter family of complex 2-step algebras of type (6,3); \
                             Pfaffian form (t^3+2)xyz - t(x^3+y^3+z^3)"
                    .to_string(),
                basis_names: basis,
                expected_flags: None,
            })
        }
        "will63" => {
            let t = take_t(name, params)?;
            if !t.is_real() {
                return Err(CatalogError::InvalidParam {
                    name: name.to_string(),
                    reason: "t must be rational (the curve is real)".to_string(),
                });
            }
            let a = will63(&t.re);
            let mut p = BTreeMap::new();
            p.insert("t".to_string(), t);
            Ok(CatalogEntry {
                name: name.to_string(),
                params: p,
                algebra: CatalogAlgebra::Rational(a),
                j: None,
                ip: InnerProduct::standard(9),
                provenance: "Will's curve of pairwise non-isomorphic type-(6,3) algebras; for \
                             t in (1, oo) none admits a nilsoliton metric (values outside the \
                             interval are legitimate algebras, just outside that theorem)"
                    .to_string(),
                basis_names: names("X", 9, 1),
                expected_flags: None,
            })
        }
        other => Err(CatalogError::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, Matrix};
    use crate::lie::Bracket;

    fn get(name: &str) -> CatalogEntry {
        catalog_get(name, &BTreeMap::new()).unwrap()
    }

    fn get_t(name: &str, re: i64, im: i64) -> CatalogEntry {
        let mut p = BTreeMap::new();
        p.insert("t".to_string(), GaussianRational::from_ints(re, im));
        catalog_get(name, &p).unwrap()
    }

    #[test]
    fn declared_flags_match_classification() {
        for info in catalog_list() {
            let entry = if info.params.is_empty() {
                get(info.name)
            } else {
                get_t(info.name, 2, 0)
            };
            if let (Some(expected), Some(j)) = (entry.expected_flags, &entry.j) {
                let a = entry.algebra.as_rational().expect("flagged entries are real");
                assert_eq!(classify_acs(a, j), expected, "{}", info.name);
            }
        }
    }

    #[test]
    fn param_arity_enforced() {
        assert!(matches!(
            catalog_get("lambda82", &BTreeMap::new()),
            Err(CatalogError::MissingParam { .. })
        ));
        let mut p = BTreeMap::new();
        p.insert("s".to_string(), GaussianRational::one());
        assert!(matches!(
            catalog_get("heisenberg3", &p),
            Err(CatalogError::UnexpectedParam { .. })
        ));
        let mut q = BTreeMap::new();
        q.insert("t".to_string(), GaussianRational::from_ints(0, 1));
        assert!(matches!(
            catalog_get("will63", &q),
            Err(CatalogError::InvalidParam { .. })
        ));
        assert!(matches!(
            catalog_get("nope", &BTreeMap::new()),
            Err(CatalogError::UnknownName(_))
        ));
    }

    #[test]
    fn iwasawa_is_complexified_heisenberg() {
        let entry = get("iwasawa");
        let (a, _) = complexify(&heisenberg3()).unwrap();
        let stored = entry.algebra.as_rational().unwrap();
        assert_eq!(stored, &a);
    }

    #[test]
    fn iwasawa_matches_coframe_presentation() {
        // coframe equations de5 = e13 + e42, de6 = e14 + e23 under the
        // convention da(X, Y) = -a([X, Y]) give the bracket below; the basis
        // change (e5, e6) -> (-e5, -e6) carries it onto the stored entry.
        let mut b = Bracket::zero(6);
        b.add_to_pair(0, 2, 4, rat_int(-1)); // de5(e1, e3) = 1
        b.add_to_pair(3, 1, 4, rat_int(-1)); // de5(e4, e2) = 1
        b.add_to_pair(0, 3, 5, rat_int(-1)); // de6(e1, e4) = 1
        b.add_to_pair(1, 2, 5, rat_int(-1)); // de6(e2, e3) = 1
        let coframe = LieAlgebra::validate(b).unwrap();
        let sign = Matrix::diagonal(&[
            rat_int(1),
            rat_int(1),
            rat_int(1),
            rat_int(1),
            rat_int(-1),
            rat_int(-1),
        ]);
        let transported = coframe.act_gl(&sign).unwrap();
        assert_eq!(&transported, get("iwasawa").algebra.as_rational().unwrap());
    }

    #[test]
    fn lambda_types() {
        let e82 = get_t("lambda82", 2, 0);
        let a = e82.algebra.as_gaussian();
        assert!(a.is_two_step());
        assert_eq!(a.derived_subalgebra().dim(), 2);
        let e63 = get_t("lambda63", 1, 1);
        let b = e63.algebra.as_gaussian();
        assert!(b.is_two_step());
        assert_eq!(b.derived_subalgebra().dim(), 3);
    }

    #[test]
    fn will_curve_is_two_step() {
        let e = get_t("will63", 2, 0);
        let a = e.algebra.as_rational().unwrap();
        assert!(a.is_two_step());
        assert_eq!(a.derived_subalgebra().dim(), 3);
    }

    #[test]
    fn aff_c_is_not_nilpotent() {
        let e = get("aff_c");
        assert!(!e.algebra.as_rational().unwrap().is_nilpotent());
    }
}
