use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use hopfad::dietzmann::{
    product_filtration, straightened_span, AlgebraHost, CoidealFamily, FiltrationReport, GroupHost,
    Stability,
};
use hopfad::finmod::{
    orbit_closure, sparse_u_double_prime, sparse_u_prime, ComputableModule, KzKey, KzModule, Pair,
    TensorModule,
};
use hopfad::groups::{self, ConjugacyClass, Group};
use hopfad::hopf::{label_index, HopfAlgebraData, IdentityChecker};
use hopfad::linalg::SparseVec;
use hopfad::pbw::{adfin_probe, Letter, PresentedAlgebra};
use hopfad::{Error, Field, Result};

use crate::builtin;
use crate::report::{Check, Status};

fn pass_or_fail(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Axioms, then the adjoint-action identities on `samples` random tuples.
/// The identities are skipped if an axiom fails.
pub fn verify(h: &HopfAlgebraData, seed: u64, samples: usize) -> Result<Vec<Check>> {
    let report = h.verify_axioms()?;
    let mut checks: Vec<Check> = report
        .checks
        .iter()
        .map(|c| {
            let summary = match &c.witness {
                None => format!("{} holds", c.name),
                Some(w) => format!("{} fails: {w}", c.name),
            };
            Check::new(
                format!("axiom/{}", c.name),
                "hopf-axioms",
                pass_or_fail(c.passed),
                summary,
                json!({ "witness": c.witness }),
            )
        })
        .collect();
    if !report.all_pass() {
        return Ok(checks);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for r in IdentityChecker::new(h).run_random(&mut rng, samples, 4) {
        let tag = match r.name {
            "comult-of-adjoint" => "adjoint-comultiplication",
            "multiplication-recovery" => "multiplication-from-adjoint",
            "module-algebra" => "adjoint-module-algebra",
            _ => "cocommutative-equivariance",
        };
        checks.push(Check::new(
            format!("identity/{}", r.name),
            tag,
            pass_or_fail(r.passed()),
            format!("{} of {} random cases hold", r.checked - r.failed, r.checked),
            json!({ "seed": seed, "checked": r.checked, "failed": r.failed }),
        ));
    }
    Ok(checks)
}

/// Truncated algebras: every window monomial, each second coproduct leg and
/// each antipode image must be locally finite. Untruncated algebras: the
/// orbits of the generators are probed and reported as evidence.
pub fn adfin(alg: &PresentedAlgebra, window: i64, budget: usize) -> Result<Vec<Check>> {
    let f = alg.field();
    if alg.truncation().is_none() {
        let mut checks = Vec::new();
        for l in [Letter::E, Letter::F, Letter::K] {
            let t = adfin_probe(alg, &alg.generator(l), budget)?;
            let status = if t.verdict.is_finite() { Status::Pass } else { Status::Evidence };
            checks.push(Check::new(
                format!("probe/{l}"),
                "adfin-probe",
                status,
                format!("ad-orbit of {l}: {} after dims {:?}", t.verdict, t.dims),
                json!({ "verdict": t.verdict.kind(), "dims": t.dims, "budget": budget }),
            ));
        }
        return Ok(checks);
    }
    let mut verdicts = Vec::new();
    let mut all_finite = true;
    for m in alg.window(window)? {
        let t = adfin_probe(alg, &SparseVec::unit(m, f), budget)?;
        all_finite &= t.verdict.is_finite();
        verdicts.push(json!({ "monomial": m.to_string(), "verdict": t.verdict.to_string() }));
    }
    let finite_status = if all_finite { Status::Pass } else { Status::BudgetExceeded };
    let mut checks = vec![Check::new(
        "window/finite",
        "adfin-is-everything",
        finite_status,
        format!("{} window monomials probed, all finite: {all_finite}", verdicts.len()),
        json!({ "b_max": window, "budget": budget, "elements": verdicts }),
    )];
    let coideal = alg.check_window_coideal(window, budget)?;
    let antipode = alg.check_window_antipode(window, budget)?;
    for (id, tag, r) in [
        ("window/coideal", "adfin-left-coideal", coideal),
        ("window/antipode", "adfin-antipode-stable", antipode),
    ] {
        let status = if r.passed() { Status::Pass } else { Status::BudgetExceeded };
        checks.push(Check::new(
            id,
            tag,
            status,
            format!("{} elements, {} not shown finite", r.checked, r.failures.len()),
            json!({ "checked": r.checked, "failures": r.failures }),
        ));
    }
    Ok(checks)
}

/// Orbit closure in the adjoint module of `kG` against the conjugacy oracle
/// on every element of word length at most `length`.
pub fn fc(group: &Group, length: usize, budget: usize, field: &Field) -> Result<Vec<Check>> {
    let m = groups::group_ad_module(group, field);
    let mut rows = Vec::new();
    let mut members = Vec::new();
    let mut agree = true;
    for g in group.enumerate(length) {
        let v = orbit_closure(&m, &[SparseVec::unit(g.clone(), field)], budget)?;
        let class = group.conjugacy_class(&g);
        let ok = match (&class, v.finite_dim()) {
            (ConjugacyClass::Finite(c), Some(d)) => c.len() == d,
            (ConjugacyClass::Infinite(_), None) => true,
            _ => false,
        };
        agree &= ok;
        let oracle = match &class {
            ConjugacyClass::Finite(c) => {
                members.push(g.to_string());
                json!(c.len())
            }
            ConjugacyClass::Infinite(_) => json!("infinite"),
        };
        rows.push(json!({ "element": g.to_string(), "orbit": v.to_string(), "class": oracle }));
    }
    Ok(vec![Check::new(
        "fc/correspondence",
        "adfin-of-group-algebra",
        pass_or_fail(agree),
        format!(
            "{} elements of length ≤ {length}, FC-center members: {}",
            rows.len(),
            members.join(" ")
        ),
        json!({ "group": group.to_string(), "budget": budget, "members": members, "elements": rows }),
    )])
}

/// A Dietzmann family description.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    /// A builtin algebra name; `group:<infinite group>` uses a window.
    pub algebra: String,
    #[serde(default)]
    pub field: Option<String>,
    /// Word-length window for infinite groups.
    #[serde(default)]
    pub window: Option<usize>,
    /// Spanning elements of each part: a basis label, or a map from
    /// labels to scalar literals.
    pub parts: Vec<Vec<ElementSpec>>,
    #[serde(default)]
    pub assume_stable: bool,
    #[serde(default)]
    pub max_steps: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Label(String),
    Combination(BTreeMap<String, String>),
}

impl ElementSpec {
    fn terms(&self) -> Vec<(&str, &str)> {
        match self {
            ElementSpec::Label(l) => vec![(l.as_str(), "1")],
            ElementSpec::Combination(m) => m.iter().map(|(l, c)| (l.as_str(), c.as_str())).collect(),
        }
    }
}

fn build_parts<K: Ord + Clone>(
    spec: &FamilySpec,
    field: &Field,
    lookup: impl Fn(&str) -> Option<K>,
) -> Result<Vec<Vec<SparseVec<K>>>> {
    spec.parts
        .iter()
        .map(|part| {
            part.iter()
                .map(|e| {
                    let mut v = SparseVec::new();
                    for (label, c) in e.terms() {
                        let k = lookup(label)
                            .ok_or_else(|| Error::parse(1, format!("unknown basis label {label:?}")))?;
                        v.add_term(k, field.parse_scalar(c)?);
                    }
                    Ok(v)
                })
                .collect()
        })
        .collect()
}

pub fn dietzmann(spec: &FamilySpec, budget: usize) -> Result<Vec<Check>> {
    let field = match &spec.field {
        Some(f) => Some(builtin::parse_field(f)?),
        None => None,
    };
    if let Some(g) = spec.algebra.strip_prefix("group:") {
        let group = Group::parse(g)?;
        if !group.is_finite() {
            let f = field.unwrap_or_else(Field::rationals);
            let host = GroupHost::with_window(&group, &f, spec.window.unwrap_or(6));
            let parts = build_parts(spec, &f, |l| host.lookup(l))?;
            return run_family(&host, &parts, spec, budget);
        }
    }
    let h = builtin::algebra(&spec.algebra, field.as_ref())?;
    let index = label_index(&h);
    let parts = build_parts(spec, &h.field, |l| index.get(l).copied())?;
    run_family(&h, &parts, spec, budget)
}

fn filtration_json<K: Ord + Clone>(r: &FiltrationReport<K>) -> Value {
    json!({
        "dims": r.dims,
        "stabilization": r.stabilization,
        "closure_dim": r.closure_dim(),
    })
}

/// Monomials of length `k + 1` above which the straightening check is skipped.
const STRAIGHTEN_LIMIT: usize = 200_000;

fn run_family<H: AlgebraHost>(
    host: &H,
    parts: &[Vec<SparseVec<H::Key>>],
    spec: &FamilySpec,
    budget: usize,
) -> Result<Vec<Check>> {
    let mut family = CoidealFamily::new(host, parts)?;
    let hypotheses_ok = family.all_verified()
        && matches!(family.stability, Stability::Verified | Stability::SubBialgebras);
    let mut checks = vec![Check::new(
        "dietzmann/hypotheses",
        "dietzmann-closure",
        pass_or_fail(hypotheses_ok),
        format!(
            "left coideal subalgebras: {:?}; ad-stability: {}",
            family.coideal_verified, family.stability
        ),
        json!({
            "coideal_verified": family.coideal_verified,
            "sub_bialgebra": family.sub_bialgebra,
            "stability": family.stability.to_string(),
        }),
    )];
    if spec.assume_stable {
        family = family.assume_stable();
    }
    let k = family.k();
    let report = match product_filtration(&family, spec.max_steps.unwrap_or(10), budget) {
        Ok(r) => r,
        Err(e @ (Error::BudgetExceeded { .. } | Error::WindowOverflow(_))) => {
            checks.push(Check::new(
                "dietzmann/filtration",
                "dietzmann-closure",
                Status::BudgetExceeded,
                e.to_string(),
                json!({ "error": e.to_string() }),
            ));
            return Ok(checks);
        }
        Err(e) => return Err(e),
    };
    let (status, summary) = match report.stabilization {
        Some(s) => (
            pass_or_fail(s <= k),
            format!("dims {:?}, stable at s* = {s} (k = {k}), closure dim {}", report.dims, report.closure_dim()),
        ),
        None => (Status::BudgetExceeded, format!("dims {:?}, not yet stable", report.dims)),
    };
    checks.push(Check::new(
        "dietzmann/filtration",
        "dietzmann-closure",
        status,
        summary,
        filtration_json(&report),
    ));
    let monomials: usize = (0..k)
        .map(|i| family.part(i).dim())
        .sum::<usize>()
        .saturating_pow(k as u32 + 1);
    if report.stabilization.is_some() && monomials <= STRAIGHTEN_LIMIT {
        let s = k + 1;
        let check = match straightened_span(&family, s) {
            Ok(span) => {
                let level = report.level(s - 1).expect("stable filtration");
                Check::new(
                    "dietzmann/straightening",
                    "dietzmann-straightening",
                    pass_or_fail(span.same_span(level)),
                    format!("length-{s} monomials straighten into C^({}) of dim {}", s - 1, level.dim()),
                    json!({ "length": s, "span_dim": span.dim(), "level_dim": level.dim() }),
                )
            }
            Err(e) => Check::new(
                "dietzmann/straightening",
                "dietzmann-straightening",
                Status::Fail,
                e.to_string(),
                json!({ "length": s, "error": e.to_string() }),
            ),
        };
        checks.push(check);
    }
    Ok(checks)
}

/// Membership of `x` in `fin(V ⊗ W)` and in `fin V ⊗ fin W`.
fn tensor_verdicts<M: ComputableModule<Key = KzKey>>(
    vw: &TensorModule<'_, M, M>,
    v: &M,
    w: &M,
    x: &SparseVec<Pair<KzKey, KzKey>>,
    budget: usize,
) -> Result<(bool, bool)> {
    let lhs = orbit_closure(vw, std::slice::from_ref(x), budget)?.is_finite();
    let pairs = TensorModule::<M, M>::as_pairs(x);
    let mut rhs = true;
    for s in sparse_u_prime(&pairs) {
        rhs &= orbit_closure(v, &[s], budget)?.is_finite();
    }
    for s in sparse_u_double_prime(&pairs) {
        rhs &= orbit_closure(w, &[s], budget)?.is_finite();
    }
    Ok((lhs, rhs))
}

fn fin_label(b: bool) -> &'static str {
    if b {
        "finite"
    } else {
        "budget-exceeded"
    }
}

/// Compares `fin(V ⊗ W)` with `fin V ⊗ fin W` over `kZ` on every pure
/// tensor of window keys and on `samples` random combinations.
pub fn tensorfin(
    v: &KzModule,
    w: &KzModule,
    window: usize,
    budget: usize,
    seed: u64,
    samples: usize,
) -> Result<Vec<Check>> {
    let f = v.field().clone();
    let vw = TensorModule::new(v, w)?;
    let (kv, kw) = (v.window(window), w.window(window));
    let mut rows = Vec::new();
    let mut disagreements = 0;
    let mut finite = 0;
    let mut record = |x: &SparseVec<Pair<KzKey, KzKey>>, rows: &mut Vec<Value>| -> Result<()> {
        let (lhs, rhs) = tensor_verdicts(&vw, v, w, x, budget)?;
        disagreements += usize::from(lhs != rhs);
        finite += usize::from(lhs);
        rows.push(json!({ "vector": x.to_string(), "tensor": fin_label(lhs), "product": fin_label(rhs) }));
        Ok(())
    };
    for a in &kv {
        for b in &kw {
            record(&SparseVec::unit(Pair(*a, *b), &f), &mut rows)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let mut x = SparseVec::new();
        for _ in 0..rng.gen_range(1..=4) {
            let a = kv[rng.gen_range(0..kv.len())];
            let b = kw[rng.gen_range(0..kw.len())];
            x.add_term(Pair(a, b), f.from_int(rng.gen_range(-3..=3)));
        }
        record(&x, &mut rows)?;
    }
    Ok(vec![Check::new(
        "tensorfin/agreement",
        "fin-of-tensor-product",
        pass_or_fail(disagreements == 0),
        format!(
            "{} vectors, {finite} locally finite, {disagreements} disagreements",
            rows.len()
        ),
        json!({ "window": window, "budget": budget, "seed": seed, "elements": rows }),
    )])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_spec_accepts_labels_and_combinations() {
        let spec: FamilySpec = serde_json::from_str(
            r#"{"algebra": "sweedler", "parts": [["1", {"g": "1", "1": "1"}]]}"#,
        )
        .unwrap();
        let checks = dietzmann(&spec, 50).unwrap();
        assert_eq!(checks[0].status, Status::Pass);
        assert!(serde_json::from_str::<FamilySpec>(r#"{"algebra": "x", "parts": [], "bogus": 1}"#).is_err());
    }

    #[test]
    fn kz_defaults_agree() {
        let q = Field::rationals();
        let v = builtin::kz_module("regular+trivial", &q).unwrap();
        let w = builtin::kz_module("regular+sign", &q).unwrap();
        let checks = tensorfin(&v, &w, 6, 20, 0, 10).unwrap();
        assert_eq!(checks[0].status, Status::Pass);
    }
}
