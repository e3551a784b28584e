//! The full verification suite as one JSON document.
//!
//! Checks run in a fixed order and are serialized in that order. Output is
//! byte-identical across runs with the same options unless `timings` is on.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::extension::{
    extend, generator_f, generator_g, generator_h, m24_test, multiplication_matrix, search_beta, ExtensionCandidate,
};
use crate::field::{FieldError, FieldSpec};
use crate::group::{
    bfs_closure, element_order, min_faithful_dimension, preserves_c, restriction_to_c, spin_all, ElementOrder,
};
use crate::perm::{group_order, orbit, Permutation};
use crate::poly::{irreducibility_witness, Gf2Poly, Irreducibility};
use crate::subgroup::{doubling_orbit, CExponent, CSubgroup, SubgroupError, SubgroupSpec};
use crate::tables::{diff_against_paper, only_known_errata, Construction, TableId};

pub const SCHEMA_VERSION: &str = "1.0";

/// Published images `g(beta^j) = beta^k` as `(j, k)`.
pub const G_PROOF_OUTPUTS: [(u32, u32); 12] =
    [(16, 15), (7, 9), (21, 16), (12, 23), (3, 17), (17, 10), (8, 18), (22, 21), (13, 14), (4, 13), (18, 11), (9, 3)];

/// The transposition candidate of the failed-extension example and its
/// witness in basis A.
pub const TRANSPOSITION: &str = "(1,2)";
pub const TRANSPOSITION_WITNESS: &str = "a9+a7+a6+a5+a2+1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Section {
    Field,
    Tables,
    Extension,
    Orders,
    Closure,
    Irreducibility,
    BetaSearch,
    M24,
}

impl Section {
    pub const ALL: [Section; 8] = [
        Section::Field,
        Section::Tables,
        Section::Extension,
        Section::Orders,
        Section::Closure,
        Section::Irreducibility,
        Section::BetaSearch,
        Section::M24,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Field => "field",
            Section::Tables => "tables",
            Section::Extension => "extension",
            Section::Orders => "orders",
            Section::Closure => "closure",
            Section::Irreducibility => "irreducibility",
            Section::BetaSearch => "beta-search",
            Section::M24 => "m24",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Section {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Section::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| ConfigError::UnknownSection(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown section {0:?}")]
    UnknownSection(String),
    #[error("the field section cannot be disabled: every other check depends on it")]
    FieldRequired,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error("closure cap must be positive")]
    ZeroCap,
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub modulus: Gf2Poly,
    pub subgroup: SubgroupSpec,
    pub closure_cap: u64,
    pub disabled: Vec<Section>,
    pub timings: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            modulus: FieldSpec::PAPER_MODULUS,
            subgroup: SubgroupSpec::paper(),
            closure_cap: crate::group::DEFAULT_CLOSURE_CAP,
            disabled: Vec::new(),
            timings: false,
        }
    }
}

impl ReportOptions {
    fn enabled(&self, s: Section) -> bool {
        !self.disabled.contains(&s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A computed result reported as data rather than judged.
    Finding,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub section: Section,
    /// Whether the expected value comes from the published results.
    pub anchored: bool,
    pub status: Status,
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub findings: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub config: Value,
    pub sections: Vec<Section>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Finding => "NOTE",
            };
            out.push_str(&format!("{tag} {}", c.id));
            if let Some(ms) = c.elapsed_ms {
                out.push_str(&format!(" ({ms:.1} ms)"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} findings\n",
            self.summary.passed, self.summary.failed, self.summary.findings
        ));
        out
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

struct Runner<'a> {
    opts: &'a ReportOptions,
    checks: Vec<Check>,
}

impl Runner<'_> {
    fn run(&mut self, section: Section, id: &str, anchored: bool, f: impl FnOnce() -> (Status, Value)) {
        let start = Instant::now();
        let (status, detail) = f();
        let elapsed_ms = self.opts.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
        self.checks.push(Check { id: id.to_string(), section, anchored, status, detail, elapsed_ms });
    }
}

/// Runs every enabled section. Configuration problems are returned as
/// errors; check failures are recorded in the report.
pub fn verification_report(opts: &ReportOptions, mut progress: impl FnMut(&str)) -> Result<Report, ConfigError> {
    if !opts.enabled(Section::Field) {
        return Err(ConfigError::FieldRequired);
    }
    if opts.closure_cap == 0 {
        return Err(ConfigError::ZeroCap);
    }
    let field = FieldSpec::new(opts.modulus)?;
    let c = CSubgroup::new(field, opts.subgroup)?;
    let k = Construction::new(c.clone()).map_err(|e| match e {
        crate::extension::ExtensionError::Subgroup(s) => ConfigError::Subgroup(s),
        other => unreachable!("generators have degree 23: {other}"),
    })?;
    let beta_exp = opts.subgroup.beta_exp;
    let mut r = Runner { opts, checks: Vec::new() };

    progress("field");
    field_checks(&mut r, field);

    if opts.enabled(Section::Tables) {
        progress("tables");
        for id in TableId::ALL {
            let name = format!("tables.{id}");
            if id.is_matrix() {
                r.run(Section::Tables, &name, false, || match diff_against_paper(&k, id) {
                    Ok(d) => {
                        let published_invertible =
                            crate::tables::parse_table(&c, id, id.fixture()).ok().and_then(|t| match t {
                                crate::tables::ParsedTable::Matrix(m) => Some(m.is_invertible()),
                                _ => None,
                            });
                        let detail = json!({
                            "verdict": d.verdict,
                            "mismatch_count": d.mismatches.len(),
                            "published_invertible": published_invertible,
                            "mismatches": d.mismatches,
                        });
                        (Status::Finding, detail)
                    }
                    Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
                });
            } else {
                r.run(Section::Tables, &name, true, || match diff_against_paper(&k, id) {
                    Ok(d) => {
                        let ok = only_known_errata(&k, &d);
                        let detail = json!({
                            "rows": d.rows_compared,
                            "verdict": d.verdict,
                            "all_mismatches_documented_errata": ok,
                            "mismatches": d.mismatches,
                        });
                        (pass_if(ok), detail)
                    }
                    Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
                });
            }
        }
    }

    if opts.enabled(Section::Extension) {
        progress("extension");
        extension_checks(&mut r, &k);
    }

    let mut ss_order = None;
    if opts.enabled(Section::Orders) {
        progress("orders");
        r.run(Section::Orders, "orders.element", true, || {
            let f = k.f_a.map(|m| element_order(&m, 1000));
            let g = k.g_a.map(|m| element_order(&m, 1000));
            let ok = f == Some(Ok(ElementOrder::Exact(23))) && g == Some(Ok(ElementOrder::Exact(5)));
            (pass_if(ok), json!({ "f": f.and_then(Result::ok), "g": g.and_then(Result::ok) }))
        });
        r.run(Section::Orders, "orders.schreier-sims", true, || {
            let n = group_order(&[generator_f(), generator_g()]).ok();
            ss_order = n;
            (pass_if(n == Some(crate::group::M23_ORDER)), json!({ "order": n.map(|n| n as u64) }))
        });
    }

    if opts.enabled(Section::Closure) {
        progress("closure");
        r.run(Section::Closure, "closure.bfs", true, || {
            let (Some(f), Some(g)) = (k.f_a, k.g_a) else {
                return (Status::Fail, json!({ "error": "generator matrices unavailable" }));
            };
            match bfs_closure(&[f, g], opts.closure_cap, |_, _| {}) {
                Ok(res) => {
                    let expected = ss_order.unwrap_or(crate::group::M23_ORDER);
                    let ok = !res.cap_hit && u128::from(res.element_count) == expected;
                    (
                        pass_if(ok),
                        json!({
                            "element_count": res.element_count,
                            "cap_hit": res.cap_hit,
                            "frontier_generations": res.frontier_generations,
                            "cap": opts.closure_cap,
                            "expected": expected as u64,
                        }),
                    )
                }
                Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
            }
        });
    }

    if opts.enabled(Section::Irreducibility) {
        progress("irreducibility");
        r.run(Section::Irreducibility, "irreducibility.spin-all", true, || {
            let (Some(f), Some(g)) = (k.f_a, k.g_a) else {
                return (Status::Fail, json!({ "error": "generator matrices unavailable" }));
            };
            match spin_all(&[f, g]) {
                Ok(s) => (pass_if(s.irreducible), serde_json::to_value(s).expect("serializable")),
                Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
            }
        });
        r.run(Section::Irreducibility, "irreducibility.min-dimension", true, || {
            let d = min_faithful_dimension(23).ok();
            (pass_if(d == Some(11)), json!({ "order": 23, "dimension": d }))
        });
    }

    if opts.enabled(Section::BetaSearch) {
        progress("beta-search");
        match search_beta(&c, &generator_g()) {
            Ok(s) => {
                r.run(Section::BetaSearch, "beta-search.anchors", true, || {
                    let ok5 = s.verdict(5).is_some_and(|v| v.success);
                    let fail1 = s.verdict(1).is_some_and(|v| !v.success);
                    (pass_if(ok5 && fail1), json!({ "beta_5_extends": ok5, "beta_1_fails": fail1 }))
                });
                r.run(Section::BetaSearch, "beta-search.success-set", false, || {
                    let union = s.is_union_of_orbits();
                    let status = if union { Status::Finding } else { Status::Fail };
                    (
                        status,
                        json!({
                            "success_set": s.success_set,
                            "union_of_doubling_orbits": union,
                            "orbits": s.orbits,
                        }),
                    )
                });
            }
            Err(e) => r.run(Section::BetaSearch, "beta-search.anchors", true, || {
                (Status::Fail, json!({ "error": e.to_string() }))
            }),
        }
    }

    if opts.enabled(Section::M24) {
        progress("m24");
        r.run(Section::M24, "m24.orbit-of-5", true, || {
            let h = generator_h();
            let mut all_inconsistent = true;
            let verdicts: Vec<Value> = doubling_orbit(5)
                .into_iter()
                .map(|b| match m24_test(&c, &h, i64::from(b)) {
                    Ok(v) => {
                        all_inconsistent &= !v.consistent;
                        serde_json::to_value(v).expect("serializable")
                    }
                    Err(e) => {
                        all_inconsistent = false;
                        json!({ "beta_exp": b, "error": e.to_string() })
                    }
                })
                .collect();
            (pass_if(all_inconsistent), json!({ "all_inconsistent": all_inconsistent, "verdicts": verdicts }))
        });
    }

    let summary = Summary {
        passed: r.checks.iter().filter(|c| c.status == Status::Pass).count(),
        failed: r.checks.iter().filter(|c| c.status == Status::Fail).count(),
        findings: r.checks.iter().filter(|c| c.status == Status::Finding).count(),
    };
    let sections = Section::ALL.into_iter().filter(|&s| opts.enabled(s)).collect();
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        config: json!({
            "modulus": opts.modulus.to_string(),
            "alpha_exp": opts.subgroup.alpha_exp,
            "beta_exp": beta_exp,
            "closure_cap": opts.closure_cap,
        }),
        sections,
        checks: r.checks,
        summary,
    })
}

fn field_checks(r: &mut Runner<'_>, field: FieldSpec) {
    r.run(Section::Field, "field.modulus-irreducible", true, || {
        let ok = irreducibility_witness(field.modulus()) == Irreducibility::Irreducible;
        (pass_if(ok), json!({ "modulus": field.modulus().to_string() }))
    });
    r.run(Section::Field, "field.reducible-witness", true, || {
        let p = Gf2Poly::from_exponents(&[11, 1, 0]);
        let w = irreducibility_witness(p);
        let ok = w == Irreducibility::Factor(Gf2Poly::from_exponents(&[2, 1, 0]));
        let factor = match w {
            Irreducibility::Factor(q) => Some(q.to_string()),
            Irreducibility::Irreducible => None,
        };
        (pass_if(ok), json!({ "polynomial": p.to_string(), "factor": factor }))
    });
    r.run(Section::Field, "field.primitive", true, || {
        (pass_if(field.verify_primitive()), json!({ "order": field.multiplicative_order() }))
    });
    r.run(Section::Field, "field.inverses", false, || {
        let bad =
            field.elements().filter(|a| !a.is_zero()).filter(|&a| !a.inv().is_ok_and(|b| (a * b).is_one())).count();
        (pass_if(bad == 0), json!({ "checked": field.multiplicative_order(), "failures": bad }))
    });
    r.run(Section::Field, "field.laws", false, || {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let samples = 10_000;
        let mut bad = 0;
        for _ in 0..samples {
            let mut pick = || field.element(rng.gen_range(0..field.size())).expect("in range");
            let (a, b, d) = (pick(), pick(), pick());
            let ok = a * (b + d) == a * b + a * d && (a * b) * d == a * (b * d) && a * b == b * a;
            bad += usize::from(!ok);
        }
        (pass_if(bad == 0), json!({ "samples": samples, "failures": bad }))
    });
}

fn extension_checks(r: &mut Runner<'_>, k: &Construction) {
    let c = &k.c;
    r.run(Section::Extension, "extension.g-proof-outputs", true, || {
        let Some(g) = k.g_a else {
            return (Status::Fail, json!({ "extended": false }));
        };
        let wrong: Vec<Value> = G_PROOF_OUTPUTS
            .iter()
            .filter_map(|&(j, want)| {
                let img = g.mul_vec(c.beta_coords(CExponent::new(i64::from(j))));
                let got = c.beta_log(c.basis_a().reconstruct(img)).map(|e| e.value());
                (got != Some(want)).then(|| json!({ "input": j, "expected": want, "computed": got }))
            })
            .collect();
        (pass_if(wrong.is_empty()), json!({ "extended": true, "checked": 12, "wrong": wrong }))
    });
    r.run(Section::Extension, "extension.f-is-multiplication", true, || {
        let Some(f) = k.f_a else {
            return (Status::Fail, json!({ "extended": false }));
        };
        let mult = multiplication_matrix(c.beta(), c.basis_a()).ok();
        (pass_if(mult == Some(f)), json!({ "extended": true }))
    });
    r.run(Section::Extension, "extension.transposition-fails", true, || {
        let sigma = Permutation::parse_cycles(TRANSPOSITION, 23).expect("valid literal");
        let report = ExtensionCandidate::new(sigma, 1).and_then(|cand| extend(c, &cand));
        match report.as_ref().ok().and_then(|r| r.witness()) {
            Some(w) => {
                let ok = w.alpha_exp == 11 && !w.computed_in_c && w.computed_in_a == TRANSPOSITION_WITNESS;
                (pass_if(ok), serde_json::to_value(w).expect("serializable"))
            }
            None => (Status::Fail, json!({ "extended": true })),
        }
    });
    r.run(Section::Extension, "extension.conjugation", false, || {
        let p = c.a_to_chi();
        let ok = [(k.f_a, k.f_chi()), (k.g_a, k.g_chi())]
            .iter()
            .all(|&(a, chi)| matches!((a, chi), (Some(a), Some(chi)) if p.mul(&a) == chi.mul(&p)));
        (pass_if(ok), json!({}))
    });
    r.run(Section::Extension, "extension.c-preservation", true, || {
        let (Some(f), Some(g)) = (k.f_a, k.g_a) else {
            return (Status::Fail, json!({ "extended": false }));
        };
        let rf = restriction_to_c(c, &f).map(|p| p.to_string());
        let rg = restriction_to_c(c, &g).map(|p| p.to_string());
        let transitive = orbit(&[1], &[generator_f(), generator_g()]).len() == 23;
        let ok = preserves_c(c, &f)
            && preserves_c(c, &g)
            && rf.as_deref() == Some(generator_f().to_string().as_str())
            && rg.as_deref() == Some(crate::extension::G_CYCLES)
            && transitive;
        (pass_if(ok), json!({ "f_on_c": rf, "g_on_c": rg, "orbit_of_1_is_everything": transitive }))
    });
}
