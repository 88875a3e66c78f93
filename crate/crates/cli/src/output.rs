//! Rendering of command results as deterministic tables or JSON.

use basechange::error::{Error, Result};
use basechange::hida::{HeckeRoots, HidaFamilyTable, StabilizedForm};
use basechange::lfunction;
use basechange::lift::{LiftedEigenvalue, SearchOutcome};
use basechange::newform::{AlgebraicNumber, NewformSpec};
use basechange::numberfield::{NumberFieldSpec, PrimeSplit};
use serde_json::json;

fn emit_json(value: serde_json::Value) -> Result<()> {
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("serializable value")
    );
    Ok(())
}

pub fn decompose(field: &NumberFieldSpec, primes: &[u64], as_json: bool) -> Result<()> {
    let has_abelian = field.abelian_data().is_some();
    let mut rows = Vec::new();
    for &p in primes {
        let ramified = match field.decompose_prime(p) {
            Ok(split) => {
                let abelian = if has_abelian {
                    let s = field.decompose_abelian(p)?;
                    Some((s.f, s == split))
                } else {
                    None
                };
                rows.push((split, abelian, false));
                continue;
            }
            Err(Error::RamifiedOrIndex { .. }) if has_abelian => true,
            Err(e) => return Err(e),
        };
        if ramified {
            let split = field.decompose_conductor_prime(p)?;
            rows.push((split, None, true));
        }
    }
    if as_json {
        return emit_json(json!({
            "field": field.label(),
            "degree": field.degree(),
            "rows": rows.iter().map(|(s, ab, ram)| {
                json!({
                    "p": s.p, "e": s.e, "f": s.f, "g": s.g,
                    "norm": s.norm().to_string(),
                    "ramified": ram,
                    "abelian_r": ab.map(|(r, _)| r),
                    "agree": ab.map(|(_, ok)| ok),
                })
            }).collect::<Vec<_>>(),
        }));
    }
    println!("field {} (degree {})", field.label(), field.degree());
    if has_abelian {
        println!("p e f g norm abelian_r agree");
    } else {
        println!("p e f g norm");
    }
    for (s, abelian, _) in &rows {
        let base = format!("{} {} {} {} {}", s.p, s.e, s.f, s.g, s.norm());
        match abelian {
            Some((r, ok)) => println!("{base} {r} {}", if *ok { "yes" } else { "NO" }),
            None if has_abelian => println!("{base} - -"),
            None => println!("{base}"),
        }
    }
    Ok(())
}

pub fn lift(
    form: &NewformSpec,
    field: &NumberFieldSpec,
    rows: &[LiftedEigenvalue],
    as_json: bool,
) -> Result<()> {
    if as_json {
        return emit_json(json!({
            "newform": form.label(),
            "field": field.label(),
            "rows": rows.iter().map(|r| {
                json!({
                    "norm": r.norm.to_string(),
                    "p": r.split.p,
                    "r": r.split.f,
                    "g": r.split.g,
                    "value": r.value.to_string(),
                    "nebentypus": r.nebentypus_value.to_string(),
                })
            }).collect::<Vec<_>>(),
        }));
    }
    println!(
        "newform {} (level {}, weight {})",
        form.label(),
        form.level(),
        form.weight()
    );
    println!("field {} (degree {})", field.label(), field.degree());
    println!("norm p r C");
    for row in rows {
        println!("{} {} {} {}", row.norm, row.split.p, row.split.f, row.value);
    }
    Ok(())
}

pub fn search(outcome: &SearchOutcome, as_json: bool) -> Result<()> {
    for (label, p, r) in &outcome.skipped {
        eprintln!("warning: {label}: no eigenvalue at class (p={p}, r={r}); comparison skipped");
    }
    for label in &outcome.incompatible {
        eprintln!(
            "warning: {label}: no usable coefficient-field embedding; candidate not compared"
        );
    }
    if as_json {
        return emit_json(json!({
            "matches": outcome.matches.iter().map(|c| json!({
                "label": c.label,
                "field_label": c.field_label,
                "level_norm": c.level_norm,
            })).collect::<Vec<_>>(),
            "multiple": outcome.multiple,
            "skipped": outcome.skipped,
            "incompatible": outcome.incompatible,
        }));
    }
    if outcome.matches.is_empty() {
        println!("no matching candidate");
        return Ok(());
    }
    for m in &outcome.matches {
        println!("match {} (level norm {})", m.label, m.level_norm);
    }
    if outcome.multiple {
        println!(
            "found {} possible lifts; try increasing --norm-bound",
            outcome.matches.len()
        );
    }
    Ok(())
}

enum EulerRow {
    Skip(u64, &'static str),
    Check(lfunction::LocalFactorCheck),
}

pub fn euler_check(
    form: &NewformSpec,
    field: &NumberFieldSpec,
    primes: &[u64],
    as_json: bool,
) -> Result<()> {
    let conductor = field.abelian_data().map(|d| d.conductor).unwrap_or(1);
    let mut rows = Vec::new();
    for &p in primes {
        if form.level() % p == 0 {
            rows.push(EulerRow::Skip(p, "level"));
            continue;
        }
        let disc_divides = field.decompose_prime(p).is_err();
        if disc_divides || (conductor > 1 && conductor % p == 0) {
            rows.push(EulerRow::Skip(p, "ramified"));
            continue;
        }
        rows.push(EulerRow::Check(lfunction::verify_local_factorization(
            form, field, p,
        )?));
    }
    if as_json {
        let coeff_strings = |poly: &lfunction::EulerFactorPoly| -> Vec<String> {
            poly.coeffs().iter().map(|c| c.to_string()).collect()
        };
        return emit_json(json!({
            "newform": form.label(),
            "field": field.label(),
            "rows": rows.iter().map(|row| match row {
                EulerRow::Skip(p, why) => json!({"p": p, "skip": why}),
                EulerRow::Check(c) => json!({
                    "p": c.p,
                    "r": c.split.f,
                    "g": c.split.g,
                    "lhs_coeffs": coeff_strings(&c.lhs),
                    "rhs_coeffs": coeff_strings(&c.rhs),
                    "equal": c.equal,
                }),
            }).collect::<Vec<_>>(),
        }));
    }
    println!("newform {}; field {}", form.label(), field.label());
    println!("p r g equal");
    for row in &rows {
        match row {
            EulerRow::Skip(p, why) => println!("{p} - - skip({why})"),
            EulerRow::Check(c) => {
                println!("{} {} {} {}", c.p, c.split.f, c.split.g, c.equal)
            }
        }
    }
    Ok(())
}

pub fn ordinary_check(form: &NewformSpec, p: u64, ordinary: bool, as_json: bool) -> Result<()> {
    if as_json {
        return emit_json(json!({
            "newform": form.label(),
            "p": p,
            "ordinary": ordinary,
        }));
    }
    println!("{} ordinary at {}: {}", form.label(), p, ordinary);
    Ok(())
}

pub fn stabilize(form: &NewformSpec, stabilized: &StabilizedForm, as_json: bool) -> Result<()> {
    let data = stabilized.data();
    let checks = stabilized.identity_checks()?;
    let (alpha_str, beta_str, kind) = match &data.roots {
        HeckeRoots::Exact { alpha, beta } => (alpha.to_string(), beta.to_string(), "exact"),
        HeckeRoots::Padic {
            alpha,
            beta_unit,
            beta_valuation,
        } => (
            alpha.to_string(),
            format!("{}^{} * ({})", data.p, beta_valuation, beta_unit),
            "p-adic",
        ),
    };
    if as_json {
        return emit_json(json!({
            "newform": form.label(),
            "p": data.p,
            "precision": data.precision,
            "kind": kind,
            "alpha": alpha_str,
            "beta": beta_str,
            "checks": {
                "trace": checks.trace,
                "det": checks.det,
                "unit_coefficient": checks.unit_coefficient,
            },
        }));
    }
    println!(
        "newform {} at p={} ({}, precision {}^{})",
        form.label(),
        data.p,
        kind,
        data.p,
        data.precision
    );
    println!("alpha = {alpha_str}");
    println!("beta = {beta_str}");
    println!("alpha + beta = a_p: {}", checks.trace);
    println!("alpha * beta = chi(p) p^(k-1): {}", checks.det);
    println!("a_p(stabilized) = alpha: {}", checks.unit_coefficient);
    Ok(())
}

pub fn family_lift(
    family: &HidaFamilyTable,
    split: &PrimeSplit,
    weight: u32,
    value: &AlgebraicNumber,
    as_json: bool,
) -> Result<()> {
    if as_json {
        return emit_json(json!({
            "family": family.label(),
            "tame_level": family.tame_level(),
            "p": family.p(),
            "ell": split.p,
            "r": split.f,
            "weight": weight,
            "value": value.to_string(),
        }));
    }
    println!(
        "family {} (tame level {}, p={})",
        family.label(),
        family.tame_level(),
        family.p()
    );
    println!(
        "C at class (ell={}, r={}), weight {} = {}",
        split.p, split.f, weight, value
    );
    Ok(())
}
