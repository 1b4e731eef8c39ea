//! Named algebras, fields and modules accepted on the command line.

use hopfad::finmod::{KzModule, KzSummand};
use hopfad::groups::{small, Group};
use hopfad::hopf::{self, HopfAlgebraData};
use hopfad::pbw::PresentedAlgebra;
use hopfad::{Error, Field, FieldDescriptor, Result, Scalar};

pub fn parse_field(s: &str) -> Result<Field> {
    Field::new(s.parse::<FieldDescriptor>()?)
}

/// A field and, for `fp:p,root`, the chosen root.
pub fn parse_field_with_root(s: &str) -> Result<(Field, Option<Scalar>)> {
    match s.split_once(',') {
        Some((f, root)) => {
            let f = parse_field(f)?;
            let r = f.parse_scalar(root)?;
            Ok((f, Some(r)))
        }
        None => Ok((parse_field(s)?, None)),
    }
}

fn arg<'a>(name: &'a str, prefix: &str) -> Option<&'a str> {
    name.strip_prefix(prefix)
}

fn order(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::parse(1, format!("expected a positive integer, got {s:?}")))
}

/// `sweedler`, `taft:n`, `small-quantum:n`, `group:<group>` or
/// `dual:<builtin>`. Without `field` each family uses its natural field.
pub fn algebra(name: &str, field: Option<&Field>) -> Result<HopfAlgebraData> {
    if let Some(inner) = arg(name, "dual:") {
        return hopf::dual_hopf(&algebra(inner, field)?);
    }
    if name == "sweedler" {
        return hopf::sweedler(field.unwrap_or(&Field::rationals()));
    }
    if let Some(n) = arg(name, "taft:") {
        let n = order(n)?;
        let f = match field {
            Some(f) => f.clone(),
            None => Field::cyclotomic(n as u32)?,
        };
        return hopf::taft(n, &f);
    }
    if let Some(n) = arg(name, "small-quantum:") {
        let n = order(n)?;
        let f = match field {
            Some(f) => f.clone(),
            None => Field::cyclotomic(n as u32)?,
        };
        return hopf::small_quantum_sl2(n, &f);
    }
    if let Some(g) = arg(name, "group:") {
        let group = Group::parse(g)?;
        let table = small::table_of(&group)
            .ok_or_else(|| Error::Unsupported(format!("{group} is not a finite group")))?;
        return hopf::group_algebra(&table, field.unwrap_or(&Field::rationals()));
    }
    Err(Error::parse(1, format!("unknown algebra {name:?}")))
}

/// `uq-sl2` or `uq-sl2-quotient:n` over `ratfunc`, `cyclotomic:n` or
/// `fp:p,root`.
pub fn presented(name: &str, field: Option<&str>) -> Result<PresentedAlgebra> {
    let quotient = match name {
        "uq-sl2" => None,
        _ => match arg(name, "uq-sl2-quotient:") {
            Some(n) => Some(order(n)? as u32),
            None => return Err(Error::parse(1, format!("unknown algebra {name:?}"))),
        },
    };
    let default = match quotient {
        Some(n) => format!("cyclotomic:{n}"),
        None => "ratfunc".to_string(),
    };
    let (f, root) = parse_field_with_root(field.unwrap_or(&default))?;
    let q = match (root, f.variable_element(), quotient) {
        (Some(r), _, _) => r,
        (None, Some(q), None) => q,
        (None, _, Some(n)) => f.primitive_root(n as u64)?,
        (None, None, None) => match f.cyclotomic_generator() {
            Some(z) => z,
            None => return Err(Error::PreconditionViolated(format!("no distinguished q in {f}"))),
        },
    };
    match quotient {
        Some(n) => PresentedAlgebra::quotient(q, n),
        None => PresentedAlgebra::uq_sl2(q),
    }
}

/// A `kZ`-module as `+`-separated summands: `regular`, `trivial`, `sign`
/// or `char:<scalar>`.
pub fn kz_module(spec: &str, field: &Field) -> Result<KzModule> {
    let summands = spec
        .split('+')
        .map(|s| match s.trim() {
            "regular" => Ok(KzSummand::Regular),
            "trivial" => Ok(KzSummand::Character(field.one())),
            "sign" => Ok(KzSummand::Character(field.from_int(-1))),
            other => match other.strip_prefix("char:") {
                Some(c) => Ok(KzSummand::Character(field.parse_scalar(c)?)),
                None => Err(Error::parse(1, format!("unknown kZ summand {other:?}"))),
            },
        })
        .collect::<Result<Vec<_>>>()?;
    KzModule::new(field, summands)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_resolve() {
        assert_eq!(algebra("sweedler", None).unwrap().dim, 4);
        assert_eq!(algebra("taft:3", None).unwrap().dim, 9);
        assert_eq!(algebra("group:perm:(123),(12)", None).unwrap().dim, 6);
        assert_eq!(algebra("dual:group:S3", None).unwrap().dim, 6);
        assert!(algebra("group:dinf", None).is_err());
        assert!(algebra("nonsense", None).is_err());
    }

    #[test]
    fn presented_fields() {
        let a = presented("uq-sl2-quotient:3", None).unwrap();
        assert_eq!(a.truncation(), Some(3));
        let b = presented("uq-sl2", None).unwrap();
        assert_eq!(b.field().characteristic(), 0);
        let c = presented("uq-sl2-quotient:3", Some("fp:7,2")).unwrap();
        assert_eq!(c.field().characteristic(), 7);
    }

    #[test]
    fn kz_specs() {
        let q = Field::rationals();
        assert_eq!(kz_module("regular+sign", &q).unwrap().summands().len(), 2);
        assert!(kz_module("regular+char:0", &q).is_err());
        assert!(kz_module("bogus", &q).is_err());
    }
}
