//! JSON file formats and output encodings. Every number is an exact
//! `num/den` string; object keys keep insertion order.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use valdist_core::algebra::{AffineMap, DiffPoly, OperatorFamily, OperatorSpec, UniPoly};
use valdist_core::check::{ClunieInstance, DegreeInstance, MokhonkoInstance, Verdict};
use valdist_core::nevanlinna::{CharacteristicRow, DecayTable};
use valdist_core::scalar::{approx, format_rational, parse_rational};
use valdist_core::{LogValue, Poly, Prime, RatFunc, Rational};

use crate::dsl::{elaborate_diffpoly, elaborate_poly, elaborate_ratfunc};
use crate::CliError;

pub fn rational(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn log_value(x: &LogValue) -> Value {
    Value::String(x.to_string())
}

pub fn poly(f: &Poly) -> Value {
    json!({ "coeffs": f.coeffs().iter().map(rational).collect::<Vec<_>>() })
}

pub fn ratfunc(f: &RatFunc) -> Value {
    json!({ "num": poly(f.num()), "den": poly(f.den()) })
}

fn monomials(p: &DiffPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!({ "coeff": ratfunc(c), "exp": e.as_slice() }))
            .collect(),
    )
}

fn operator(op: &OperatorSpec) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), op.kind().into());
    if let Some(map) = op.map() {
        m.insert("a".into(), rational(map.a()));
        m.insert("b".into(), rational(map.b()));
    }
    if let Some(order) = op.order() {
        m.insert("order".into(), order.into());
    }
    Value::Object(m)
}

fn family(f: &OperatorFamily) -> Value {
    Value::Array(f.ops().iter().map(operator).collect())
}

pub fn clunie_instance(inst: &ClunieInstance) -> Value {
    json!({
        "prime": inst.prime.get(),
        "f": ratfunc(&inst.f),
        "ops": family(&inst.family),
        "B": inst.b.coeffs().iter().map(ratfunc).collect::<Vec<_>>(),
        "Omega": monomials(&inst.omega),
        "Phi": monomials(&inst.phi),
    })
}

pub fn mokhonko_instance(inst: &MokhonkoInstance) -> Value {
    json!({
        "prime": inst.prime.get(),
        "f": ratfunc(&inst.f),
        "ops": family(&inst.family),
        "P": monomials(&inst.p),
        "a": ratfunc(&inst.a),
    })
}

pub fn degree_instance(inst: &DegreeInstance) -> Value {
    let coeffs = |f: &Poly| f.coeffs().iter().map(rational).collect::<Vec<_>>();
    json!({
        "prime": inst.prime.get(),
        "f": ratfunc(&inst.f),
        "Phi": coeffs(inst.phi()),
        "B": coeffs(inst.b()),
    })
}

pub fn verdict(v: &Verdict, with_approx: bool) -> Value {
    let mut out = json!({
        "instance": v.instance,
        "claim": v.claim.as_str(),
        "s": rational(v.s.value()),
        "lhs": rational(&v.lhs),
        "rhs": rational(&v.rhs),
        "holds": v.holds,
        "slack": rational(&v.slack),
    });
    if with_approx {
        out["approx"] = json!({ "lhs": approx(&v.lhs), "rhs": approx(&v.rhs), "slack": approx(&v.slack) });
    }
    out
}

pub fn characteristic_row(r: &CharacteristicRow, with_approx: bool) -> Value {
    let mut out = json!({
        "s": rational(r.s.value()),
        "m": rational(&r.m),
        "N": rational(&r.n),
        "T": rational(&r.t),
    });
    if with_approx {
        out["approx"] = json!({ "m": approx(&r.m), "N": approx(&r.n), "T": approx(&r.t) });
    }
    out
}

pub fn decay_table(t: &DecayTable) -> Value {
    json!({
        "trend": t.trend.as_str(),
        "rows": t.rows.iter().map(|r| json!({
            "s": rational(r.s.value()),
            "numerator": rational(&r.numerator),
            "denominator": rational(&r.denominator),
            "ratio": r.ratio.as_ref().map_or(Value::Null, rational),
        })).collect::<Vec<_>>(),
    })
}

/// A polynomial given as `{"coeffs": [...]}` or as an expression.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
pub enum PolySpec {
    Text(String),
    Coeffs { coeffs: Vec<String> },
}

impl PolySpec {
    pub fn build(&self) -> Result<Poly, CliError> {
        match self {
            PolySpec::Text(t) => Ok(elaborate_poly(t)?),
            PolySpec::Coeffs { coeffs } => Ok(Poly::new(
                coeffs.iter().map(|c| parse_rational(c)).collect::<Result<_, _>>()?,
            )),
        }
    }
}

/// A rational function given as `{"num", "den"}` (normalized on input) or as
/// an expression.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
pub enum RatFuncSpec {
    Text(String),
    Parts { num: PolySpec, den: Option<PolySpec> },
}

impl RatFuncSpec {
    pub fn build(&self) -> Result<RatFunc, CliError> {
        match self {
            RatFuncSpec::Text(t) => Ok(elaborate_ratfunc(t)?),
            RatFuncSpec::Parts { num, den } => {
                let den = match den {
                    Some(d) => d.build()?,
                    None => Poly::one(),
                };
                Ok(RatFunc::new(num.build()?, den)?)
            }
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorEntry {
    pub kind: String,
    pub a: Option<String>,
    pub b: Option<String>,
    pub order: Option<u32>,
}

impl OperatorEntry {
    pub fn build(&self) -> Result<OperatorSpec, CliError> {
        let map = || -> Result<AffineMap, CliError> {
            let field = |v: &Option<String>, name: &str| {
                v.as_deref()
                    .ok_or_else(|| CliError::Usage(format!("operator `{}` needs field `{name}`", self.kind)))
                    .and_then(|t| Ok(parse_rational(t)?))
            };
            Ok(AffineMap::new(field(&self.a, "a")?, field(&self.b, "b")?)?)
        };
        match self.kind.as_str() {
            "shift" => Ok(OperatorSpec::shift(map()?)),
            "delta" => Ok(OperatorSpec::delta(map()?, self.order.unwrap_or(1))),
            "derivative" => Ok(OperatorSpec::derivative(self.order.unwrap_or(1))),
            other => Err(CliError::Usage(format!(
                "unknown operator kind `{other}` (expected shift, delta or derivative)"
            ))),
        }
    }
}

/// A monomial `coeff · X^exp`, or a whole polynomial as an expression.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
pub enum DiffPolySpec {
    Text(String),
    Terms(Vec<MonomialEntry>),
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialEntry {
    pub coeff: RatFuncSpec,
    pub exp: Vec<u32>,
}

impl DiffPolySpec {
    pub fn build(&self, nvars: usize) -> Result<DiffPoly, CliError> {
        match self {
            DiffPolySpec::Text(t) => Ok(elaborate_diffpoly(t, Some(nvars))?),
            DiffPolySpec::Terms(terms) => {
                let mut out = Vec::with_capacity(terms.len());
                for t in terms {
                    if t.exp.len() != nvars {
                        return Err(CliError::Usage(format!(
                            "exponent vector {:?} has length {}, expected {nvars}",
                            t.exp,
                            t.exp.len()
                        )));
                    }
                    out.push((t.coeff.build()?, t.exp.clone()));
                }
                Ok(DiffPoly::from_terms(nvars, out)?)
            }
        }
    }
}

fn build_family(prime: Prime, ops: &[OperatorEntry]) -> Result<OperatorFamily, CliError> {
    let ops = ops.iter().map(OperatorEntry::build).collect::<Result<Vec<_>, _>>()?;
    Ok(OperatorFamily::new(ops, prime)?)
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ClunieFile {
    pub prime: u64,
    pub f: RatFuncSpec,
    pub ops: Vec<OperatorEntry>,
    #[serde(rename = "B")]
    pub b: Vec<RatFuncSpec>,
    #[serde(rename = "Omega")]
    pub omega: DiffPolySpec,
    #[serde(rename = "Phi")]
    pub phi: DiffPolySpec,
}

impl ClunieFile {
    pub fn build(&self) -> Result<ClunieInstance, CliError> {
        let prime = Prime::new(self.prime)?;
        let family = build_family(prime, &self.ops)?;
        let n = family.arity();
        let b = UniPoly::new(self.b.iter().map(RatFuncSpec::build).collect::<Result<_, _>>()?);
        Ok(ClunieInstance::new(
            prime,
            self.f.build()?,
            family,
            b,
            self.omega.build(n)?,
            self.phi.build(n)?,
        )?)
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct MokhonkoFile {
    pub prime: u64,
    pub f: RatFuncSpec,
    pub ops: Vec<OperatorEntry>,
    #[serde(rename = "P")]
    pub p: DiffPolySpec,
    pub a: RatFuncSpec,
}

impl MokhonkoFile {
    pub fn build(&self) -> Result<MokhonkoInstance, CliError> {
        let prime = Prime::new(self.prime)?;
        let family = build_family(prime, &self.ops)?;
        let p = self.p.build(family.arity())?;
        Ok(MokhonkoInstance::new(
            prime,
            p,
            family,
            self.f.build()?,
            self.a.build()?,
        )?)
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeFile {
    pub prime: u64,
    pub f: RatFuncSpec,
    #[serde(rename = "Phi")]
    pub phi: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
}

impl DegreeFile {
    pub fn build(&self) -> Result<DegreeInstance, CliError> {
        let prime = Prime::new(self.prime)?;
        let constants = |cs: &[String]| -> Result<UniPoly, CliError> {
            Ok(UniPoly::new(
                cs.iter()
                    .map(|c| Ok(RatFunc::constant(parse_rational(c)?)))
                    .collect::<Result<_, CliError>>()?,
            ))
        };
        Ok(DegreeInstance::new(
            prime,
            self.f.build()?,
            &constants(&self.phi)?,
            &constants(&self.b)?,
        )?)
    }
}

/// One instance per JSON value; a file may hold a single object, an array,
/// or a sequence of objects (JSON lines).
pub fn read_instances<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>, CliError> {
    let mut out = Vec::new();
    for value in serde_json::Deserializer::from_str(text).into_iter::<Value>() {
        match value? {
            Value::Array(items) => {
                for item in items {
                    out.push(serde_json::from_value(item)?);
                }
            }
            v => out.push(serde_json::from_value(v)?),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use valdist_core::check::gen::{generate_degree_instance, generate_mokhonko_instance, GeneratorConfig};
    use valdist_core::check::generate_clunie_instance;

    fn cfg() -> GeneratorConfig {
        GeneratorConfig::new(3, 4, Prime::new(5).unwrap())
    }

    #[test]
    fn instances_survive_a_round_trip() {
        let c = cfg();
        for t in 0..c.trials {
            let inst = generate_clunie_instance(&c, t).unwrap();
            let file: ClunieFile = serde_json::from_value(clunie_instance(&inst)).unwrap();
            assert_eq!(file.build().unwrap(), inst);

            let inst = generate_mokhonko_instance(&c, t).unwrap();
            let file: MokhonkoFile = serde_json::from_value(mokhonko_instance(&inst)).unwrap();
            assert_eq!(file.build().unwrap(), inst);

            let inst = generate_degree_instance(&c, t).unwrap();
            let file: DegreeFile = serde_json::from_value(degree_instance(&inst)).unwrap();
            assert_eq!(file.build().unwrap(), inst);
        }
    }

    #[test]
    fn expressions_are_accepted_in_place_of_objects() {
        let file: ClunieFile = serde_json::from_str(
            r#"{"prime": 5, "f": "z", "ops": [{"kind": "shift", "a": "1", "b": "1"}],
                "B": ["0", "1"], "Omega": "X1", "Phi": [{"coeff": "z^2 + z", "exp": [0, 0]}]}"#,
        )
        .unwrap();
        let inst = file.build().unwrap();
        assert!(inst.require_solution().is_ok());
    }

    #[test]
    fn unnormalized_input_is_normalized() {
        let spec: RatFuncSpec =
            serde_json::from_str(r#"{"num": {"coeffs": ["-2", "2"]}, "den": {"coeffs": ["-1", "0", "1"]}}"#).unwrap();
        let f = spec.build().unwrap();
        assert_eq!(
            ratfunc(&f),
            json!({"num": {"coeffs": ["2/1"]}, "den": {"coeffs": ["1/1", "1/1"]}})
        );
    }

    #[test]
    fn several_layouts() {
        let one = r#"{"prime": 5, "f": "z^2", "Phi": ["0", "1"], "B": ["1"]}"#;
        assert_eq!(read_instances::<DegreeFile>(one).unwrap().len(), 1);
        assert_eq!(
            read_instances::<DegreeFile>(&format!("{one}\n{one}\n")).unwrap().len(),
            2
        );
        assert_eq!(
            read_instances::<DegreeFile>(&format!("[{one}, {one}, {one}]"))
                .unwrap()
                .len(),
            3
        );
    }
}
