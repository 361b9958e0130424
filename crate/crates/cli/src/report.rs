//! Report rendering: the JSON object documented in
//! `docs/report-schema.json` and a human-readable text form. Identical
//! inputs and seeds produce byte-identical output.

use serde_json::{json, Value};

use polyconj_core::arith::{PrimeField, Rationals};
use polyconj_core::conjtheorem::{ConjugateSetting, CorollaryStatus, VerificationReport};
use polyconj_core::numfield::QuotientField;

use crate::print;

fn corollary_string(status: &CorollaryStatus) -> String {
    match status {
        CorollaryStatus::NotChecked => "not_checked".into(),
        CorollaryStatus::Holds => "holds".into(),
        CorollaryStatus::Failed => "failed".into(),
        CorollaryStatus::NotApplicable(reason) => format!("not_applicable: {reason}"),
    }
}

fn assertions_json<F: polyconj_core::arith::Field>(report: &VerificationReport<F>) -> Value {
    json!({
        "m_equals_L_degree": report.assertions.m_equals_l_degree,
        "h_in_base_field": report.assertions.h_in_base_field,
        "n_integral": report.assertions.n_integral,
        "h_equals_c_f_n": report.assertions.h_equals_c_f_n,
        "c_is_one_for_monic": report.assertions.c_is_one_for_monic,
    })
}

pub fn verify_json_q(
    setting: &ConjugateSetting<Rationals>,
    report: &VerificationReport<Rationals>,
) -> Value {
    let field = setting.extension();
    json!({
        "base_field": {"kind": "q"},
        "f": print::q_poly_string(setting.f(), "x"),
        "g": print::nf_poly_string(field, setting.g(), "x"),
        "m": report.m,
        "L_degree": report.l_degree,
        "n": report.n,
        "c": report.c.to_string(),
        "h": print::q_poly_string(&report.h, "x"),
        "conjugates": report
            .conjugates
            .iter()
            .map(|g| print::nf_poly_string(field, g, "x"))
            .collect::<Vec<_>>(),
        "assertions": assertions_json(report),
        "corollary_status": corollary_string(&report.corollary),
    })
}

pub fn verify_json_fp(
    p: u64,
    setting: &ConjugateSetting<PrimeField>,
    report: &VerificationReport<PrimeField>,
) -> Value {
    let field = setting.extension();
    json!({
        "base_field": {"kind": "fp", "p": p},
        "f": print::fp_poly_string(setting.f(), "x"),
        "g": print::fp_ext_poly_string(field, setting.g(), "x"),
        "m": report.m,
        "L_degree": report.l_degree,
        "n": report.n,
        "c": report.c.residue().to_string(),
        "h": print::fp_poly_string(&report.h, "x"),
        "conjugates": report
            .conjugates
            .iter()
            .map(|g| print::fp_ext_poly_string(field, g, "x"))
            .collect::<Vec<_>>(),
        "assertions": assertions_json(report),
        "corollary_status": corollary_string(&report.corollary),
    })
}

fn push_assertion(out: &mut String, name: &str, ok: bool) {
    out.push_str(&format!("  {name}: {}\n", if ok { "pass" } else { "FAIL" }));
}

pub fn verify_text_q(
    setting: &ConjugateSetting<Rationals>,
    report: &VerificationReport<Rationals>,
) -> String {
    let field = setting.extension();
    let mut out = String::new();
    out.push_str("base field: Q\n");
    out.push_str(&format!("f = {}\n", print::q_poly_string(setting.f(), "x")));
    out.push_str(&format!(
        "splitting field degree [M:Q] = {}, |G| = {}\n",
        field.degree(),
        setting.group_order()
    ));
    out.push_str("roots of f in M:\n");
    for (i, r) in setting.roots().iter().enumerate() {
        out.push_str(&format!("  [{i}] {}\n", print::nf_elem_string(field, r)));
    }
    out.push_str(&format!("g = {}\n", print::nf_poly_string(field, setting.g(), "x")));
    out.push_str(&format!("distinct conjugates (m = {}):\n", report.m));
    for g in &report.conjugates {
        out.push_str(&format!("  {}\n", print::nf_poly_string(field, g, "x")));
    }
    out.push_str(&format!("[L:K] = {}\n", report.l_degree));
    out.push_str(&format!("n = {}, c = {}\n", report.n, report.c));
    out.push_str(&format!("h = {}\n", print::q_poly_string(&report.h, "x")));
    out.push_str(&verify_text_tail(report));
    out
}

pub fn verify_text_fp(
    p: u64,
    setting: &ConjugateSetting<PrimeField>,
    report: &VerificationReport<PrimeField>,
) -> String {
    let field = setting.extension();
    let mut out = String::new();
    out.push_str(&format!("base field: F_{p}\n"));
    out.push_str(&format!("f = {}\n", print::fp_poly_string(setting.f(), "x")));
    out.push_str(&format!(
        "M = {}, [M:K] = {}, |G| = {}\n",
        fp_quotient_string(field),
        field.degree(),
        setting.group_order()
    ));
    out.push_str("roots of f in M (Frobenius orbit of g):\n");
    for (i, r) in setting.roots().iter().enumerate() {
        out.push_str(&format!("  [{i}] {}\n", print::fp_elem_string(field, r)));
    }
    out.push_str(&format!(
        "g = {}\n",
        print::fp_ext_poly_string(field, setting.g(), "x")
    ));
    out.push_str(&format!("distinct conjugates (m = {}):\n", report.m));
    for g in &report.conjugates {
        out.push_str(&format!("  {}\n", print::fp_ext_poly_string(field, g, "x")));
    }
    out.push_str(&format!("[L:K] = {}\n", report.l_degree));
    out.push_str(&format!("n = {}, c = {}\n", report.n, report.c.residue()));
    out.push_str(&format!("h = {}\n", print::fp_poly_string(&report.h, "x")));
    out.push_str(&verify_text_tail(report));
    out
}

fn verify_text_tail<F: polyconj_core::arith::Field>(report: &VerificationReport<F>) -> String {
    let mut out = String::from("assertions:\n");
    push_assertion(&mut out, "m = [L:K]", report.assertions.m_equals_l_degree);
    push_assertion(&mut out, "h in K[X]", report.assertions.h_in_base_field);
    push_assertion(&mut out, "n integral", report.assertions.n_integral);
    push_assertion(&mut out, "h = c*f^n", report.assertions.h_equals_c_f_n);
    if let Some(ok) = report.assertions.c_is_one_for_monic {
        push_assertion(&mut out, "c = 1 (monic g)", ok);
    }
    out.push_str(&format!("corollary: {}\n", corollary_string(&report.corollary)));
    out.push_str(&format!(
        "result: {}\n",
        if report.pass() { "PASS" } else { "FAIL" }
    ));
    out
}

/// Cycle notation for an automorphism's root permutation; "id" when the
/// permutation is trivial.
pub fn cycles_string(cycles: &[Vec<usize>]) -> String {
    if cycles.is_empty() {
        return "id".into();
    }
    cycles
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            format!("({})", inner.join(" "))
        })
        .collect::<Vec<_>>()
        .join("")
}

pub fn fp_quotient_string(field: &QuotientField<PrimeField>) -> String {
    format!(
        "F_{}[g]/({})",
        field.base().modulus(),
        print::fp_poly_string(field.modulus(), "g")
    )
}
