//! JSON schemas for configurations and raw branch models, chosen for
//! hand-editability in fixtures:
//!
//! ```json
//! {"type": "Dn", "n": 2, "delta1": 0, "delta2": 3,
//!  "gamma_infinitely_near": false, "conic": "generic"}
//! {"type": "B"}
//! {"type": "Dn", "n": 6, "conic": {"points": [[1, 0, 1], [[1, 2], 0, 1], ...]}}
//! ```
//!
//! Rational coordinates are integers, `[numerator, denominator]` pairs, or
//! strings (`"3/4"`, `"1.25"`).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use serde::{Deserialize, Serialize};

use crate::conic::PlanePoint;
use crate::duval::{ConicEvidence, DuValConfig};
use crate::error::{Error, Result};
use crate::lattice::{CenterId, SurfaceModel};
use crate::resolution::{BranchModel, SingularityAssignment};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type")]
pub enum ConfigDoc {
    B,
    D,
    Dn {
        n: u32,
        #[serde(default)]
        delta1: u32,
        #[serde(default)]
        delta2: u32,
        #[serde(default)]
        gamma_infinitely_near: bool,
        #[serde(default)]
        conic: ConicDoc,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ConicDoc {
    Keyword(ConicKeyword),
    Points { points: Vec<[CoordDoc; 3]> },
}

impl Default for ConicDoc {
    fn default() -> Self {
        ConicDoc::Keyword(ConicKeyword::Generic)
    }
}

#[derive(Copy, Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum ConicKeyword {
    Generic,
    OnConic,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum CoordDoc {
    Int(i64),
    Pair([i64; 2]),
    Text(String),
}

impl CoordDoc {
    fn to_rational(&self) -> Result<BigRational> {
        match self {
            CoordDoc::Int(n) => Ok(BigRational::from_integer((*n).into())),
            CoordDoc::Pair([n, d]) => {
                if *d == 0 {
                    return Err(Error::BadEvidence("zero denominator".into()));
                }
                Ok(BigRational::new((*n).into(), (*d).into()))
            }
            CoordDoc::Text(s) => parse_rational_text(s),
        }
    }

    fn from_rational(r: &BigRational) -> Self {
        let to_i64 = |x: &BigInt| -> Option<i64> { x.try_into().ok() };
        match (to_i64(r.numer()), to_i64(r.denom())) {
            (Some(n), Some(1)) => CoordDoc::Int(n),
            (Some(n), Some(d)) => CoordDoc::Pair([n, d]),
            _ => CoordDoc::Text(format!("{}/{}", r.numer(), r.denom())),
        }
    }
}

fn parse_rational_text(s: &str) -> Result<BigRational> {
    let bad = |msg: &str| Error::BadEvidence(format!("cannot parse {s:?} as a rational: {msg}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad("bad numerator"))?;
        let den: BigInt = den.trim().parse().map_err(|_| bad("bad denominator"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let sign = if whole.trim_start().starts_with('-') {
            -1
        } else {
            1
        };
        let whole: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| bad("bad integer part"))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("bad fractional part"));
        }
        let scale = num::pow::pow(BigInt::from(10), frac.len());
        let frac: BigInt = frac.parse().map_err(|_| bad("bad fractional part"))?;
        let numer = &whole * &scale + BigInt::from(sign) * frac;
        return Ok(BigRational::new(numer, scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad("not an integer"))?;
    Ok(BigRational::from_integer(n))
}

impl ConfigDoc {
    pub fn to_config(&self) -> Result<DuValConfig> {
        Ok(match self {
            ConfigDoc::B => DuValConfig::TypeB,
            ConfigDoc::D => DuValConfig::TypeD,
            ConfigDoc::Dn {
                n,
                delta1,
                delta2,
                gamma_infinitely_near,
                conic,
            } => {
                let points_on_conic = match conic {
                    ConicDoc::Keyword(ConicKeyword::Generic) => ConicEvidence::Generic,
                    ConicDoc::Keyword(ConicKeyword::OnConic) => ConicEvidence::OnConic,
                    ConicDoc::Points { points } => {
                        let mut out = Vec::with_capacity(points.len());
                        for [x, y, z] in points {
                            out.push(PlanePoint::new(
                                x.to_rational()?,
                                y.to_rational()?,
                                z.to_rational()?,
                            )?);
                        }
                        ConicEvidence::Coordinates(out)
                    }
                };
                DuValConfig::TypeDn {
                    n: *n,
                    delta1: *delta1,
                    delta2: *delta2,
                    gamma_infinitely_near: *gamma_infinitely_near,
                    points_on_conic,
                }
            }
        })
    }

    pub fn from_config(config: &DuValConfig) -> Self {
        match config {
            DuValConfig::TypeB => ConfigDoc::B,
            DuValConfig::TypeD => ConfigDoc::D,
            DuValConfig::TypeDn {
                n,
                delta1,
                delta2,
                gamma_infinitely_near,
                points_on_conic,
            } => {
                let conic = match points_on_conic {
                    ConicEvidence::Generic => ConicDoc::Keyword(ConicKeyword::Generic),
                    ConicEvidence::OnConic => ConicDoc::Keyword(ConicKeyword::OnConic),
                    ConicEvidence::Coordinates(points) => ConicDoc::Points {
                        points: points
                            .iter()
                            .map(|p| {
                                let [x, y, z] = p.coords();
                                [
                                    CoordDoc::from_rational(x),
                                    CoordDoc::from_rational(y),
                                    CoordDoc::from_rational(z),
                                ]
                            })
                            .collect(),
                    },
                };
                ConfigDoc::Dn {
                    n: *n,
                    delta1: *delta1,
                    delta2: *delta2,
                    gamma_infinitely_near: *gamma_infinitely_near,
                    conic,
                }
            }
        }
    }
}

/// A raw branch for `resolve`: base surface, class coefficients, and the
/// singularity list (all first points honest surface points; the
/// infinitely-near placement of a configuration's `γ` is available through
/// the config schema).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BranchDoc {
    pub surface: SurfaceDoc,
    pub class: Vec<i64>,
    #[serde(default)]
    pub singularities: Vec<SingularityDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum SurfaceDoc {
    Keyword(String),
    Hirzebruch { hirzebruch: i64 },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum SingularityDoc {
    Mtuple { mtuple: i64 },
    Rr { rr: i64 },
}

impl BranchDoc {
    pub fn to_branch(&self) -> Result<BranchModel> {
        let model = match &self.surface {
            SurfaceDoc::Keyword(word) if word == "plane" => SurfaceModel::projective_plane(),
            SurfaceDoc::Keyword(word) => {
                return Err(Error::InvalidParameter(format!(
                    "unknown surface {word:?}; use \"plane\" or {{\"hirzebruch\": e}}"
                )))
            }
            SurfaceDoc::Hirzebruch { hirzebruch } => SurfaceModel::hirzebruch(*hirzebruch)?,
        };
        let class = model.class(self.class.clone())?;
        let mut next = 0u32;
        let mut fresh = || {
            let id = CenterId(next);
            next += 1;
            id
        };
        let singularities = self
            .singularities
            .iter()
            .map(|doc| match doc {
                SingularityDoc::Mtuple { mtuple } => {
                    SingularityAssignment::mtuple(fresh(), *mtuple)
                }
                SingularityDoc::Rr { rr } => {
                    let first = fresh();
                    let second = fresh();
                    SingularityAssignment::rr_point(first, second, *rr)
                }
            })
            .collect();
        BranchModel::new(model, class, singularities)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    #[test]
    fn parses_the_sample_configs() {
        let doc: ConfigDoc =
            serde_json::from_str(r#"{"type": "Dn", "n": 2, "delta1": 0, "delta2": 3}"#).unwrap();
        assert_eq!(doc.to_config().unwrap(), DuValConfig::dn(2, 0, 3));

        let doc: ConfigDoc = serde_json::from_str(r#"{"type": "B"}"#).unwrap();
        assert_eq!(doc.to_config().unwrap(), DuValConfig::TypeB);

        let doc: ConfigDoc =
            serde_json::from_str(r#"{"type": "Dn", "n": 5, "delta1": 1, "conic": "on_conic"}"#)
                .unwrap();
        assert_eq!(doc.to_config().unwrap(), DuValConfig::dn_on_conic(5, 1, 0));
    }

    #[test]
    fn coordinate_forms() {
        let doc: ConfigDoc = serde_json::from_str(
            r#"{"type": "Dn", "n": 6,
                "conic": {"points": [[1,0,1],[0,1,1],[-1,0,1],[0,-1,1],["3/5","0.8",1],[5,12,13]]}}"#,
        )
        .unwrap();
        let config = doc.to_config().unwrap();
        let DuValConfig::TypeDn {
            points_on_conic: ConicEvidence::Coordinates(pts),
            ..
        } = &config
        else {
            panic!("expected coordinates");
        };
        assert_eq!(pts.len(), 6);
        // (3/5, 4/5, 1) really is the parsed fifth point.
        assert_eq!(pts[4].coords()[1], BigRational::new(4.into(), 5.into()));
        assert_eq!(crate::duval::irregularity(&config).unwrap(), (1, 1));
    }

    #[test]
    fn config_round_trip() {
        let configs = vec![
            DuValConfig::TypeB,
            DuValConfig::TypeD,
            DuValConfig::dn(3, 2, 1),
            DuValConfig::dn_on_conic(6, 0, 0),
            DuValConfig::TypeDn {
                n: 6,
                delta1: 0,
                delta2: 0,
                gamma_infinitely_near: false,
                points_on_conic: ConicEvidence::Coordinates(vec![
                    PlanePoint::new(
                        BigRational::new(1.into(), 3.into()),
                        BigRational::from_integer(0.into()),
                        BigRational::one(),
                    )
                    .unwrap();
                    6
                ]),
            },
        ];
        for config in configs {
            let doc = ConfigDoc::from_config(&config);
            let text = serde_json::to_string(&doc).unwrap();
            let back: ConfigDoc = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_config().unwrap(), config);
        }
    }

    #[test]
    fn raw_branch_document() {
        let doc: BranchDoc = serde_json::from_str(
            r#"{"surface": "plane", "class": [14],
                "singularities": [{"mtuple": 6}, {"rr": 5}, {"rr": 5}]}"#,
        )
        .unwrap();
        let branch = doc.to_branch().unwrap();
        assert_eq!(branch.class().coeffs(), &[14]);
        assert_eq!(branch.singularities().len(), 3);

        let doc: BranchDoc =
            serde_json::from_str(r#"{"surface": {"hirzebruch": 2}, "class": [8, 14]}"#).unwrap();
        assert_eq!(doc.to_branch().unwrap().class().coeffs(), &[8, 14]);
    }

    #[test]
    fn rational_text_forms() {
        assert_eq!(
            parse_rational_text("3/4").unwrap(),
            BigRational::new(3.into(), 4.into())
        );
        assert_eq!(
            parse_rational_text("1.25").unwrap(),
            BigRational::new(5.into(), 4.into())
        );
        assert_eq!(
            parse_rational_text("-0.5").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert_eq!(
            parse_rational_text("7").unwrap(),
            BigRational::from_integer(7.into())
        );
        assert!(parse_rational_text("1/0").is_err());
        assert!(parse_rational_text("x").is_err());
    }
}
