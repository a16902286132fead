//! JSON instance and report files.
//!
//! Scalars are JSON integers or strings `"p/q"` in lowest terms with
//! `q > 0` (a bare integer string `"p"` is also accepted, and is how
//! integers beyond 64 bits are written).

use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::family::{Families, HyperplaneFamily, SubsetFamily};
use crate::geometry::{Point, Scalar};
use crate::instance::Instance;
use crate::verify::Report;

pub fn bigint_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(v.to_string()),
    }
}

pub fn scalar_to_json(v: &Scalar) -> Value {
    if v.denom().is_one() {
        bigint_to_json(v.numer())
    } else {
        Value::String(format!("{}/{}", v.numer(), v.denom()))
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Scalar::from_integer(u.into()))
            } else {
                Err(Error::Parse(format!("non-integer number {n}; use \"p/q\"")))
            }
        }
        Value::String(s) => match s.split_once('/') {
            None => Ok(Scalar::from_integer(parse_int(s)?)),
            Some((p, q)) => {
                let p = parse_int(p)?;
                let q = parse_int(q)?;
                if !q.is_positive() {
                    return Err(Error::Parse(format!("denominator must be positive in {s:?}")));
                }
                if !p.gcd(&q).is_one() {
                    return Err(Error::Parse(format!("{s:?} is not in lowest terms")));
                }
                Ok(Scalar::new(p, q))
            }
        },
        other => Err(Error::Parse(format!("expected a scalar, got {other}"))),
    }
}

fn point_to_json(p: &Point) -> Value {
    Value::Array(p.coords().iter().map(scalar_to_json).collect())
}

fn point_from_json(v: &[Value]) -> Result<Point> {
    v.iter()
        .map(scalar_from_json)
        .collect::<Result<Vec<_>>>()
        .map(Point::new)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    d: usize,
    points: Vec<Vec<Value>>,
    z: Vec<Value>,
}

pub fn instance_to_json(inst: &Instance) -> Value {
    json!({
        "d": inst.dim(),
        "points": inst.points().iter().map(point_to_json).collect::<Vec<_>>(),
        "z": point_to_json(inst.z()),
    })
}

pub fn instance_from_json(v: Value) -> Result<Instance> {
    let file: InstanceFile =
        serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
    let points = file
        .points
        .iter()
        .map(|p| point_from_json(p))
        .collect::<Result<Vec<_>>>()?;
    Instance::new(file.d, points, point_from_json(&file.z)?)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    instance_from_json(v)
}

pub fn instance_to_string(inst: &Instance) -> String {
    serde_json::to_string_pretty(&instance_to_json(inst)).expect("json values serialize")
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_instance(&text)
}

pub fn write_json(path: &Path, value: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn subset_family_to_json(f: &SubsetFamily) -> Value {
    serde_json::to_value(f).expect("index lists serialize")
}

pub fn hyperplane_family_to_json(h: &HyperplaneFamily) -> Value {
    Value::Array(
        h.members()
            .iter()
            .map(|e| {
                json!({
                    "normal": e.hyperplane.normal().iter().map(bigint_to_json).collect::<Vec<_>>(),
                    "offset": bigint_to_json(e.hyperplane.offset()),
                    "essential": e.essential,
                })
            })
            .collect(),
    )
}

pub fn families_to_json(f: &Families) -> Value {
    json!({
        "C": subset_family_to_json(&f.minimal_containing),
        "A": subset_family_to_json(&f.maximal_avoiding),
        "Smpl": subset_family_to_json(&f.simplices),
        "F": subset_family_to_json(&f.facets),
        "H": hyperplane_family_to_json(&f.hyperplanes),
    })
}

pub fn report_to_json(r: &Report) -> Value {
    json!({
        "instance": instance_to_json(&r.instance),
        "position": r.position,
        "counts": r.counts,
        "families": families_to_json(&r.families),
        "verdicts": r.verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn scalars() {
        assert_eq!(scalar_from_json(&json!(3)).unwrap(), Scalar::from_integer(3.into()));
        assert_eq!(
            scalar_from_json(&json!("-1/2")).unwrap(),
            Scalar::new((-1).into(), 2.into())
        );
        assert!(scalar_from_json(&json!("2/4")).is_err());
        assert!(scalar_from_json(&json!("1/-2")).is_err());
        assert!(scalar_from_json(&json!("1/0")).is_err());
        assert!(scalar_from_json(&json!(1.5)).is_err());
        assert!(scalar_from_json(&json!(null)).is_err());
        let big = "123456789012345678901234567890";
        let v = scalar_from_json(&json!(big)).unwrap();
        assert_eq!(scalar_to_json(&v), json!(big));
        assert_eq!(scalar_to_json(&Scalar::new(3.into(), 6.into())), json!("1/2"));
    }

    #[test]
    fn instance_file() {
        let text = r#"{"z": [0, "1/3"], "d": 2, "points": [[0, 2], [-2, -1], [3, -1]]}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.dim(), 2);
        assert_eq!(inst.len(), 3);
        assert_eq!(parse_instance(&instance_to_string(&inst)).unwrap(), inst);
    }

    #[test]
    fn instance_file_rejections() {
        assert!(parse_instance(r#"{"d": 1, "points": [[1]], "z": [0], "extra": 1}"#).is_err());
        assert!(parse_instance(r#"{"d": 2, "points": [[1]], "z": [0, 0]}"#).is_err());
        assert!(parse_instance(r#"{"d": 1, "points": [[0]], "z": [0]}"#).is_err());
        assert!(parse_instance(r#"{"d": 1, "points": [[1], [1]], "z": [0]}"#).is_err());
        assert!(parse_instance("not json").is_err());
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        (-1000i64..1000, 1i64..50).prop_map(|(p, q)| Scalar::new(p.into(), q.into()))
    }

    proptest! {
        #[test]
        fn instance_round_trip(
            pts in prop::collection::btree_set(prop::collection::vec(scalar(), 3), 1..6),
        ) {
            let points: Vec<Point> = pts.into_iter().map(Point::new).collect();
            let z = Point::new(vec![Scalar::new(7919.into(), 7.into()); 3]);
            prop_assume!(!points.contains(&z));
            let inst = Instance::new(3, points, z).unwrap();
            let text = instance_to_string(&inst);
            let back = parse_instance(&text).unwrap();
            prop_assert_eq!(&back, &inst);
            prop_assert_eq!(instance_to_string(&back), text);
        }
    }
}
