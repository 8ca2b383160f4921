use std::fmt::Write as _;
use std::path::Path;

use mckay_core::adequiver::{identify_affine_ade, mckay_partner, quiver_checks, quiver_of_group};
use mckay_core::chartab::character_table;
use mckay_core::groups::{build_named_group, GroupName};
use mckay_core::mckaycheck::{builder_battery, mckay_check_named, run_battery, McKayReport};
use mckay_core::moonshine::{
    enumerate_decompositions, j_coefficient, load_irrep_dims, meaning_of_life as residue,
    monster_order_check, window_coefficients, CoefficientSource, CoefficientWindow, DimsSpec,
    IrrepDims, MONSTER_FACTORIZATION, MONSTER_ORDER,
};
use mckay_core::qseries::{cube_root_of_q_j, discriminant, eisenstein, j_invariant};
use mckay_core::selfcheck::{all_passed, run_all};
use mckay_core::{Error, Result};
use serde_json::{json, Value};

use crate::render::{matrix_text, series_json, series_text, table_json, table_text, Output};

fn series(command: &str, s: mckay_core::QSeries) -> Result<Output> {
    Ok(Output::new(command, series_text(&s), series_json(&s)))
}

pub fn series_j(order: i64) -> Result<Output> {
    series("series j", j_invariant(order)?)
}

pub fn series_eisenstein(weight: i64, order: i64) -> Result<Output> {
    series("series eisenstein", eisenstein(weight, order)?)
}

pub fn series_delta(order: i64) -> Result<Output> {
    series("series delta", discriminant(order)?)
}

pub fn series_cube_root(order: i64) -> Result<Output> {
    series("series cube-root", cube_root_of_q_j(order)?)
}

pub fn group_info(name: GroupName) -> Result<Output> {
    let g = build_named_group(name)?;
    let classes = g.conjugacy_classes();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{name}: order {}, exponent {}",
        g.order(),
        g.exponent()
    );
    let _ = writeln!(text, "abelian: {}", g.is_abelian());
    let _ = writeln!(text, "classes: {}", classes.count());
    let _ = writeln!(text, "class sizes:  {:?}", classes.sizes);
    let _ = writeln!(text, "class orders: {:?}", classes.orders);
    let result = json!({
        "name": name.to_string(),
        "order": g.order(),
        "exponent": g.exponent(),
        "abelian": g.is_abelian(),
        "class_count": classes.count(),
        "class_sizes": classes.sizes,
        "class_orders": classes.orders,
    });
    Ok(Output::new("group info", text, result))
}

pub fn chartab(name: GroupName) -> Result<Output> {
    let g = build_named_group(name)?;
    let table = character_table(&g)?;
    let orders = table.classes().map(|c| c.orders.clone());
    let mut text = format!("{name}: order {}, {} classes\n", g.order(), table.count());
    if let Some(prime) = table.prime() {
        let _ = writeln!(text, "computed modulo {prime}");
    }
    text.push_str(&table_text(&table, orders.as_deref()));
    let mut result = table_json(&table);
    result["name"] = json!(name.to_string());
    result["prime"] = json!(table.prime());
    let mut out = Output::new("chartab", text, result);
    if !table.rows_orthonormal() {
        out.diagnostics.push("rows are not orthonormal".into());
        out.success = false;
    }
    Ok(out)
}

pub fn quiver(name: GroupName, dot: Option<&Path>) -> Result<Output> {
    let g = build_named_group(name)?;
    let (_, q) = quiver_of_group(&g)?;
    let report = quiver_checks(&q, g.order() as u64);
    let found = identify_affine_ade(&q);
    let expected = mckay_partner(name);
    let mut diagnostics: Vec<String> = report.failures.clone();
    match (&found, expected) {
        (Ok(t), Some(e)) if *t != e => diagnostics.push(format!("found {t}, expected {e}")),
        (Err(e), _) => diagnostics.push(e.to_string()),
        _ => {}
    }
    if let Some(path) = dot {
        std::fs::write(path, q.to_dot(&name.to_string()))
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    let type_name = found.as_ref().ok().map(|t| t.to_string());
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{name}: {} nodes, affine node {}",
        q.len(),
        q.affine_node()
    );
    let _ = writeln!(text, "dimensions: {:?}", q.node_dims());
    text.push_str("adjacency:\n");
    text.push_str(&matrix_text(q.adjacency()));
    let _ = writeln!(
        text,
        "type: {}",
        type_name.as_deref().unwrap_or("not affine A-D-E")
    );
    let _ = writeln!(
        text,
        "checks: sum d^2 = {} (|G| = {}), A d = 2 d: {}",
        report.dims_square_sum,
        report.group_order,
        report.passed()
    );
    let result = json!({
        "name": name.to_string(),
        "order": g.order(),
        "node_dims": q.node_dims(),
        "affine_node": q.affine_node(),
        "adjacency": q.adjacency(),
        "type": type_name,
        "expected_type": expected.map(|t| t.to_string()),
        "checks": {
            "passed": report.passed(),
            "dims_square_sum": report.dims_square_sum,
            "adjacency_times_dims": report.adjacency_times_dims,
            "failures": report.failures,
        },
    });
    let mut out = Output::new("quiver", text, result);
    out.success = diagnostics.is_empty();
    out.diagnostics = diagnostics;
    Ok(out)
}

fn monster_dims(path: Option<&Path>) -> Result<IrrepDims> {
    match path {
        Some(p) => load_irrep_dims(p, &DimsSpec::monster()),
        None => Ok(IrrepDims::monster()),
    }
}

pub fn decompose(
    dims_path: Option<&Path>,
    index: i64,
    max_irreps: usize,
    max_mult: u32,
) -> Result<Output> {
    let dims = monster_dims(dims_path)?;
    let target = j_coefficient(index)?;
    let found = enumerate_decompositions(&target, &dims, max_irreps, max_mult)?;
    let mut text = format!("c({index}) = {target}\n");
    for d in &found {
        let _ = writeln!(text, "  = {}", d.render());
    }
    let _ = writeln!(
        text,
        "{} decomposition(s) with at most {max_irreps} irreps and multiplicity {max_mult}",
        found.len()
    );
    let result = json!({
        "coeff_index": index,
        "target": target.to_string(),
        "max_irreps": max_irreps,
        "max_mult": max_mult,
        "decompositions": found
            .iter()
            .map(|d| json!({
                "rendered": d.render(),
                "multiplicities": d.multiplicities(max_irreps),
            }))
            .collect::<Vec<Value>>(),
    });
    Ok(Output::new("moonshine decompose", text, result))
}

pub fn meaning_of_life(j: bool, start: Option<i64>, count: Option<u64>) -> Result<Output> {
    let source = if j {
        CoefficientSource::J
    } else {
        CoefficientSource::Tau
    };
    let default = CoefficientWindow::default_for(source);
    let window = CoefficientWindow::new(
        start.unwrap_or(default.start),
        count.map_or(default.count, |c| c as usize),
    );
    let value = residue(source, window)?;
    let coefficients = window_coefficients(source, window)?;
    let name = if j { "j" } else { "tau" };
    let last = window.start + window.count as i64 - 1;
    let text = format!(
        "sum of squares of {name} coefficients at q^{}..q^{last} mod 70 = {value}\n",
        window.start
    );
    let result = json!({
        "source": name,
        "start": window.start,
        "count": window.count,
        "coefficients": coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "residue": value,
    });
    Ok(Output::new("moonshine meaning-of-life", text, result))
}

pub fn order_check(dims_path: Option<&Path>) -> Result<Output> {
    let dims = monster_dims(dims_path)?;
    let identity = monster_order_check();
    let squares = dims.square_sum();
    let squares_match = squares.to_string() == MONSTER_ORDER;
    let factors: Vec<String> = MONSTER_FACTORIZATION
        .iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect();
    let mut text = String::new();
    let _ = writeln!(text, "|M| = {MONSTER_ORDER}");
    let _ = writeln!(text, "    = {}", factors.join(" * "));
    let _ = writeln!(text, "factorization and 196883 = 47 * 59 * 71: {identity}");
    let _ = writeln!(
        text,
        "sum of squared irrep dimensions equals |M|: {squares_match}"
    );
    let result = json!({
        "order": MONSTER_ORDER,
        "factorization": MONSTER_FACTORIZATION
            .iter()
            .map(|(p, e)| json!([p.to_string(), e.to_string()]))
            .collect::<Vec<_>>(),
        "identity_holds": identity,
        "irrep_count": dims.len(),
        "dims_square_sum": squares.to_string(),
        "square_sum_matches": squares_match,
    });
    let mut out = Output::new("moonshine order-check", text, result);
    out.success = identity && squares_match;
    Ok(out)
}

fn report_json(r: &McKayReport) -> Value {
    json!({
        "group": r.group,
        "p": r.p,
        "group_order": r.group_order,
        "sylow_size": r.sylow_size,
        "normalizer_size": r.normalizer_size,
        "sylow_is_quaternion8": r.sylow_is_quaternion8,
        "count_g": r.count_g,
        "count_n": r.count_n,
        "degrees_g": r.degrees_g,
        "degrees_n": r.degrees_n,
        "holds": r.holds,
    })
}

fn reports(command: &str, reports: Vec<McKayReport>) -> Output {
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "{}", r.summary());
    }
    let failures: Vec<String> = reports
        .iter()
        .filter(|r| !r.holds)
        .map(|r| format!("counts differ: {}", r.summary()))
        .collect();
    let result = if reports.len() == 1 {
        report_json(&reports[0])
    } else {
        Value::Array(reports.iter().map(report_json).collect())
    };
    let mut out = Output::new(command, text, result);
    out.success = failures.is_empty();
    out.diagnostics = failures;
    out
}

pub fn conjecture(name: GroupName, p: u64) -> Result<Output> {
    Ok(reports("conjecture", vec![mckay_check_named(name, p)?]))
}

pub fn conjecture_all() -> Result<Output> {
    Ok(reports("conjecture", run_battery(&builder_battery())?))
}

pub fn selfcheck() -> Result<Output> {
    let results = run_all();
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(text, "{}", r.line());
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(text, "{passed}/{} criteria passed", results.len());
    let result = Value::Array(
        results
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                    "seconds": r.elapsed.as_secs_f64(),
                })
            })
            .collect(),
    );
    let mut out = Output::new("selfcheck", text, result);
    out.success = all_passed(&results);
    Ok(out)
}
