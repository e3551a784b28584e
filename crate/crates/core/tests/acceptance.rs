//! Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each.
//! Runs without the libtest harness so the lines always print.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use m23_core::extension::{
    extend, generator_f, generator_g, generator_h, m24_test, matrix_in_chi, multiplication_matrix, search_beta,
    ExtensionCandidate,
};
use m23_core::group::{
    bfs_closure, element_order, min_faithful_dimension, preserves_c, restriction_to_c, spin_all, ElementOrder,
    M23_ORDER,
};
use m23_core::perm::{group_order, orbit};
use m23_core::poly::{irreducibility_witness, Gf2Poly, Irreducibility};
use m23_core::report::G_PROOF_OUTPUTS;
use m23_core::subgroup::doubling_orbit;
use m23_core::tables::{diff_against_paper, only_known_errata, Construction, TableId};
use m23_core::{CExponent, FieldSpec, Permutation};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("{what} took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn table_regeneration(k: &Construction) -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for id in [TableId::XPowers, TableId::AlphaPowers, TableId::CrossTable, TableId::XInA, TableId::AlphaInA] {
        let d = diff_against_paper(k, id).map_err(|e| e.to_string())?;
        ensure(d.rows_compared == id.published_rows(), format!("{id}: {} rows", d.rows_compared))?;
        ensure(only_known_errata(k, &d), format!("{id}: undocumented mismatch\n{}", d.to_text()))?;
        for m in &d.mismatches {
            notes.push(format!("{id} {} is a documented erratum", m.locator.label));
        }
    }
    let t = within(start, Duration::from_secs(1), "table diff")?;
    Ok(format!("90+24+23+11+13 rows, {} ({t:.1?})", if notes.is_empty() { "clean".into() } else { notes.join("; ") }))
}

fn extension_theorem(k: &Construction) -> Outcome {
    let c = &k.c;
    let g = k.g_a.ok_or("g does not extend for beta = alpha^5")?;
    for (j, want) in G_PROOF_OUTPUTS {
        let img = c.basis_a().reconstruct(g.mul_vec(c.beta_coords(CExponent::new(j.into()))));
        let got = c.beta_log(img).map(|e| e.value());
        ensure(got == Some(want), format!("g(b^{j}) = {got:?}, expected b^{want}"))?;
    }
    Ok("g extends; all 12 worked images agree".into())
}

fn proposition(k: &Construction) -> Outcome {
    let c = &k.c;
    let f = k.f_a.ok_or("f does not extend")?;
    let g = k.g_a.ok_or("g does not extend")?;
    ensure(
        f == multiplication_matrix(c.beta(), c.basis_a()).map_err(|e| e.to_string())?,
        "[f]_A is not multiplication by beta",
    )?;
    let of = element_order(&f, 1000).map_err(|e| e.to_string())?;
    let og = element_order(&g, 1000).map_err(|e| e.to_string())?;
    ensure(of == ElementOrder::Exact(23) && og == ElementOrder::Exact(5), format!("orders {of:?}, {og:?}"))?;
    Ok("[f]_A = mult(beta); orders 23 and 5".into())
}

fn matrix_cross_check(k: &Construction) -> Outcome {
    let c = &k.c;
    let p = c.a_to_chi();
    for (a, chi) in [(k.f_a, k.f_chi()), (k.g_a, k.g_chi())] {
        let (a, chi) = (a.ok_or("missing generator")?, chi.ok_or("missing generator")?);
        ensure(p.mul(&a) == chi.mul(&p), "P*M_A != M_chi*P")?;
        ensure(chi == matrix_in_chi(c, &a), "matrix_in_chi disagrees")?;
    }
    ensure(
        k.f_chi() == multiplication_matrix(c.beta(), c.basis_chi()).ok(),
        "[f]_chi is not multiplication by beta in chi",
    )?;
    let mut errata = Vec::new();
    for id in [TableId::MatrixFA, TableId::MatrixGA, TableId::MatrixFChi, TableId::MatrixGChi] {
        let d = diff_against_paper(k, id).map_err(|e| e.to_string())?;
        errata.push(format!("{id}: {} entries differ", d.mismatches.len()));
    }
    Ok(format!("conjugation holds; errata: {}", errata.join(", ")))
}

/// Peak resident set size in bytes, where the platform reports it.
fn peak_rss() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

fn group_order_two_ways(k: &Construction) -> Outcome {
    let start = Instant::now();
    let ss = group_order(&[generator_f(), generator_g()]).map_err(|e| e.to_string())?;
    let t_ss = within(start, Duration::from_secs(1), "Schreier-Sims")?;
    let gens = [k.f_a.ok_or("missing f")?, k.g_a.ok_or("missing g")?];
    let start = Instant::now();
    let res = bfs_closure(&gens, m23_core::group::DEFAULT_CLOSURE_CAP, |_, _| {}).map_err(|e| e.to_string())?;
    let t_bfs = within(start, Duration::from_secs(120), "BFS closure")?;
    ensure(!res.cap_hit, "closure hit the cap")?;
    ensure(u128::from(res.element_count) == ss, format!("BFS {} vs Schreier-Sims {ss}", res.element_count))?;
    ensure(ss == M23_ORDER, format!("order {ss}"))?;
    let mem = match peak_rss() {
        Some(b) => {
            ensure(b < 2 << 30, format!("peak memory {} MiB", b >> 20))?;
            format!(", peak {} MiB", b >> 20)
        }
        None => String::new(),
    };
    Ok(format!("both {ss} (SS {t_ss:.1?}, BFS {t_bfs:.1?}{mem})"))
}

fn c_preservation(k: &Construction) -> Outcome {
    let c = &k.c;
    let f = k.f_a.ok_or("missing f")?;
    let g = k.g_a.ok_or("missing g")?;
    ensure(preserves_c(c, &f) && preserves_c(c, &g), "a generator leaves C")?;
    let rf = restriction_to_c(c, &f).ok_or("f does not permute C")?.to_string();
    let rg = restriction_to_c(c, &g).ok_or("g does not permute C")?.to_string();
    ensure(rf == "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)", format!("f|C = {rf}"))?;
    ensure(rg == "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)", format!("g|C = {rg}"))?;
    let o = orbit(&[1], &[generator_f(), generator_g()]);
    ensure(o.len() == 23, format!("orbit of 1 has {} points", o.len()))?;
    Ok(format!("f|C = {rf}; g|C = {rg}; transitive"))
}

fn irreducibility(k: &Construction) -> Outcome {
    let start = Instant::now();
    let s = spin_all(&[k.f_a.ok_or("missing f")?, k.g_a.ok_or("missing g")?]).map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(1), "spin")?;
    ensure(s.irreducible && s.vectors_checked == 2047 && s.min_dimension == 11, format!("{s:?}"))?;
    let d = min_faithful_dimension(23).map_err(|e| e.to_string())?;
    ensure(d == 11, format!("min dimension {d}"))?;
    Ok(format!("2047 spins reach 11 ({t:.1?}); minimal dimension 11"))
}

fn beta_search(k: &Construction) -> Outcome {
    let start = Instant::now();
    let s = search_beta(&k.c, &generator_g()).map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(1), "beta search")?;
    ensure(s.verdicts.len() == 22, "not all exponents tried")?;
    ensure(s.verdict(5).is_some_and(|v| v.success), "beta = alpha^5 fails")?;
    ensure(s.verdict(1).is_some_and(|v| !v.success), "beta = alpha should fail")?;
    ensure(s.is_union_of_orbits(), format!("success set {:?} is not a union of orbits", s.success_set))?;
    let orbit5: BTreeSet<u32> = doubling_orbit(5).into_iter().collect();
    let found: BTreeSet<u32> = s.success_set.iter().copied().collect();
    let verdict = if found == orbit5 { "exactly the doubling orbit of 5" } else { "a union of orbits" };
    Ok(format!("success set {:?}: {verdict} ({t:.1?})", s.success_set))
}

fn negative_cases(k: &Construction) -> Outcome {
    let c = &k.c;
    let sigma = Permutation::parse_cycles("(1,2)", 23).map_err(|e| e.to_string())?;
    let cand = ExtensionCandidate::new(sigma, 1).map_err(|e| e.to_string())?;
    let report = extend(c, &cand).map_err(|e| e.to_string())?;
    let w = report.witness().ok_or("transposition extended")?;
    ensure(w.alpha_exp == 11, format!("failed at alpha^{}", w.alpha_exp))?;
    ensure(w.computed_in_a == "a9+a7+a6+a5+a2+1" && !w.computed_in_c, format!("witness {}", w.computed_in_a))?;
    let h = generator_h();
    for b in doubling_orbit(5) {
        let v = m24_test(c, &h, b.into()).map_err(|e| e.to_string())?;
        ensure(!v.consistent, format!("h is consistent for beta = alpha^{b}"))?;
    }
    Ok("witness a9+a7+a6+a5+a2+1 outside C at alpha^11; h inconsistent for all 11 betas".into())
}

fn field_substrate() -> Outcome {
    let start = Instant::now();
    let f = FieldSpec::paper();
    for a in f.elements().filter(|a| !a.is_zero()) {
        let inv = a.inv().map_err(|e| e.to_string())?;
        ensure((a * inv).is_one(), format!("{a} has no inverse"))?;
    }
    ensure(f.verify_primitive() && !f.x_pow(23).is_one() && !f.x_pow(89).is_one(), "X is not primitive")?;
    ensure(irreducibility_witness(f.modulus()) == Irreducibility::Irreducible, "modulus reducible")?;
    let w = irreducibility_witness(Gf2Poly::from_exponents(&[11, 1, 0]));
    ensure(w == Irreducibility::Factor(Gf2Poly::from_exponents(&[2, 1, 0])), format!("{w:?}"))?;
    let t = within(start, Duration::from_secs(1), "field checks")?;
    Ok(format!("2047 inverses, primitive, x^2+x+1 | x^11+x+1 ({t:.1?})"))
}

fn main() -> ExitCode {
    let k = Construction::paper();
    let criteria: [Criterion; 10] = [
        ("table regeneration", Box::new(|| table_regeneration(&k))),
        ("extension theorem", Box::new(|| extension_theorem(&k))),
        ("proposition", Box::new(|| proposition(&k))),
        ("matrix cross-check", Box::new(|| matrix_cross_check(&k))),
        ("group order", Box::new(|| group_order_two_ways(&k))),
        ("C-preservation", Box::new(|| c_preservation(&k))),
        ("irreducibility", Box::new(|| irreducibility(&k))),
        ("beta search", Box::new(|| beta_search(&k))),
        ("negative cases", Box::new(|| negative_cases(&k))),
        ("field substrate", Box::new(field_substrate)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
