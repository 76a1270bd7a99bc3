//! `module`, `perm` and `quad` subcommands.

use herbrand::{
    brute_force_cohomology, burnside_orbit_count, cf_expand, field_data, fundamental_unit, h1,
    h1_from_norm_index, herbrand_quotient, ok_module, orbit_decomposition, orbit_h1_formula,
    orbit_herbrand_formula, order2_profile, pell_solve, permutation_module, remark_formula_h1,
    splitting_type, sunit_herbrand, tate_groups, trace_index, unit_group_h1, unit_module,
    CyclicModule, GSet, Omega, PellVariant, Place, QuadraticField,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::render::{json_factors, json_int, Rendered, Table};

pub fn module_compute(m: &CyclicModule) -> Rendered {
    let r = herbrand_quotient(m);
    let table = Table::new()
        .row("n", m.n())
        .row("generators", m.rank_generators())
        .row("H^0", &r.tate.h0)
        .row("H^1", &r.tate.h1)
        .row("#H^0", &r.tate.h0_order)
        .row("#H^1", &r.tate.h1_order)
        .row("herbrand", &r.quotient);
    let json = json!({
        "n": m.n(),
        "generators": m.rank_generators(),
        "h0": json_factors(&r.tate.h0),
        "h1": json_factors(&r.tate.h1),
        "h0_order": json_int(&r.tate.h0_order),
        "h1_order": json_int(&r.tate.h1_order),
        "herbrand": r.quotient.to_string(),
    });
    Rendered::new(table, json)
}

pub fn module_brute(m: &CyclicModule, bound: u64) -> Result<Rendered, CliError> {
    let brute = brute_force_cohomology(m, bound)?;
    let tate = tate_groups(m);
    let agree = tate.h0_order == BigInt::from(brute.h0_order)
        && tate.h1_order == BigInt::from(brute.h1_order);
    let table = Table::new()
        .row("bound", bound)
        .row("#H^0 brute", brute.h0_order)
        .row("#H^1 brute", brute.h1_order)
        .row("#H^0", &tate.h0_order)
        .row("#H^1", &tate.h1_order)
        .row("agree", agree);
    let json = json!({
        "bound": bound,
        "brute": { "h0_order": brute.h0_order, "h1_order": brute.h1_order },
        "structural": {
            "h0_order": json_int(&tate.h0_order),
            "h1_order": json_int(&tate.h1_order),
        },
        "agree": agree,
    });
    let out = Rendered::new(table, json);
    Ok(if agree { out } else { out.failed() })
}

pub fn module_profile(m: &CyclicModule) -> Rendered {
    let mut table = Table::new().row("n", m.n());
    let mut json = json!({ "n": m.n() });
    if let Ok(p) = order2_profile(m) {
        let exprs: Vec<String> = p.h1_expressions.iter().map(ToString::to_string).collect();
        table = table
            .row("r+", p.r_plus)
            .row("r-", p.r_minus)
            .row("r", p.r)
            .row("#A+[2]", &p.two_torsion_plus)
            .row("(A : A+ + A-)", &p.index_sum)
            .row("(NA : 2A+)", &p.index_norm_two)
            .row("(N-A : 2A-)", &p.index_anti_two)
            .row("(A+ : NA)", &p.index_norm)
            .row("#H^1 forms", exprs.join(", "))
            .row("predicted h", &p.predicted_h);
        json["order_two"] = json!({
            "r_plus": p.r_plus,
            "r_minus": p.r_minus,
            "r": p.r,
            "two_torsion_plus": json_int(&p.two_torsion_plus),
            "index_sum": json_int(&p.index_sum),
            "index_norm_two": json_int(&p.index_norm_two),
            "index_anti_two": json_int(&p.index_anti_two),
            "index_norm": json_int(&p.index_norm),
            "h1_expressions": exprs,
            "predicted_h1": json_int(&p.predicted_h1),
            "predicted_h": p.predicted_h.to_string(),
        });
    }
    let r = remark_formula_h1(m);
    let direct = herbrand_quotient(m);
    table = table
        .row("(_NA : (1-s)_NA)", &r.numerator)
        .row("(NA : nA^G)", &r.denominator)
        .row("(A : A^G + _NA)", &r.index_fixed_plus_kernel)
        .row("((1-s)A : (1-s)_NA)", &r.index_augmentation)
        .row("#H^1 by index", &r.h1_order)
        .row("#H^1", &direct.tate.h1_order)
        .row("herbrand", &direct.quotient);
    json["norm_index"] = json!({
        "numerator": json_int(&r.numerator),
        "denominator": json_int(&r.denominator),
        "index_fixed_plus_kernel": json_int(&r.index_fixed_plus_kernel),
        "index_augmentation": json_int(&r.index_augmentation),
        "h1_order": r.h1_order.to_string(),
        "chain_holds": r.chain_holds(),
    });
    json["h1_order"] = json_int(&direct.tate.h1_order);
    json["herbrand"] = json!(direct.quotient.to_string());
    Rendered::new(table, json)
}

fn orbit_text(orbits: &[Vec<usize>]) -> String {
    orbits
        .iter()
        .map(|o| {
            let pts: Vec<String> = o.iter().map(ToString::to_string).collect();
            format!("{{{}}}", pts.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn perm_orbits(x: &GSet) -> Rendered {
    let d = orbit_decomposition(x);
    let burnside = burnside_orbit_count(x);
    let table = Table::new()
        .row("n", x.n())
        .row("points", x.points())
        .row("orbits", orbit_text(&d.orbits))
        .row("representatives", list(&d.representatives))
        .row("stabilizers", list(&d.stabilizer_orders))
        .row("burnside count", burnside);
    let json = json!({
        "n": x.n(),
        "points": x.points(),
        "orbits": d.orbits,
        "representatives": d.representatives,
        "stabilizer_orders": d.stabilizer_orders,
        "burnside_count": burnside,
    });
    Rendered::new(table, json)
}

pub fn perm_verify(x: &GSet) -> Rendered {
    let direct = herbrand_quotient(&permutation_module(x));
    let product = orbit_herbrand_formula(x);
    let by_index = orbit_h1_formula(x);
    let h_ok = direct.quotient.is_integer() && direct.quotient.to_integer() == product;
    let h1_ok = by_index == direct.tate.h1_order;
    let table = Table::new()
        .row("orbit product", &product)
        .row("herbrand", &direct.quotient)
        .row("#H^1 by index", &by_index)
        .row("#H^1", &direct.tate.h1_order)
        .row("holds", h_ok && h1_ok);
    let json = json!({
        "orbit_product": json_int(&product),
        "herbrand": direct.quotient.to_string(),
        "h1_by_index": json_int(&by_index),
        "h1_order": json_int(&direct.tate.h1_order),
        "holds": h_ok && h1_ok,
    });
    let out = Rendered::new(table, json);
    if h_ok && h1_ok {
        out
    } else {
        out.failed()
    }
}

pub fn parse_int(text: &str, what: &str) -> Result<BigInt, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{what} must be an integer, got {text:?}")))
}

pub fn parse_field(text: &str) -> Result<QuadraticField, CliError> {
    Ok(field_data(&parse_int(text, "D")?)?)
}

pub fn parse_place(text: &str) -> Result<Place, CliError> {
    match text.trim().to_ascii_lowercase().as_str() {
        "inf" | "infinity" | "oo" => Ok(Place::Infinite),
        _ => Ok(Place::Prime(parse_int(text, "place")?)),
    }
}

fn omega_name(k: &QuadraticField) -> &'static str {
    match k.omega() {
        Omega::Whole => "sqrt(D)",
        Omega::Half => "(-1+sqrt(D))/2",
    }
}

pub fn quad_unit(k: &QuadraticField) -> Rendered {
    let u = fundamental_unit(k);
    let cf = cf_expand(k.d());
    let table = Table::new()
        .row("D", k.d())
        .row("disc", k.disc())
        .row("omega", omega_name(k))
        .row("epsilon", u.epsilon.display(k))
        .row(
            "a + b omega",
            format!("{} + {} omega", u.epsilon.a, u.epsilon.b),
        )
        .row("norm", u.unit_norm)
        .row(
            "cf sqrt(D)",
            format!("[{}; {}]", cf.a0, list(&cf.periodic_part)),
        )
        .row("period", cf.period_length);
    let json = json!({
        "d": json_int(k.d()),
        "disc": json_int(k.disc()),
        "omega": omega_name(k),
        "epsilon": u.epsilon.display(k),
        "a": json_int(&u.epsilon.a),
        "b": json_int(&u.epsilon.b),
        "norm": u.unit_norm,
        "cf": {
            "a0": json_int(&cf.a0),
            "period": cf.periodic_part.iter().map(json_int).collect::<Vec<_>>(),
        },
    });
    Rendered::new(table, json)
}

pub fn quad_pell(d: &BigInt, variant: PellVariant) -> Result<Rendered, CliError> {
    let sol = pell_solve(d, variant)?;
    let shown = match &sol {
        Some((x, y)) => format!("x = {x}, y = {y}"),
        None => "none".to_string(),
    };
    let table = Table::new()
        .row("D", d)
        .row("variant", variant)
        .row("solution", shown);
    let json = json!({
        "d": json_int(d),
        "variant": variant.name(),
        "solution": sol.as_ref().map(|(x, y)| json!({ "x": json_int(x), "y": json_int(y) })),
    });
    Ok(Rendered::new(table, json))
}

pub fn quad_h1(k: &QuadraticField) -> Rendered {
    let direct = unit_group_h1(k);
    let by_norm = h1_from_norm_index(k);
    let m = unit_module(k);
    let by_module = h1(&m).torsion_order();
    let h = herbrand_quotient(&m).quotient;
    let agree = direct == by_norm && direct == by_module;
    let table = Table::new()
        .row("D", k.d())
        .row("#H^1(U_K)", &direct)
        .row("by norm index", &by_norm)
        .row("by module", &by_module)
        .row("herbrand", &h);
    let json = json!({
        "d": json_int(k.d()),
        "h1_order": json_int(&direct),
        "h1_by_norm_index": json_int(&by_norm),
        "h1_by_module": json_int(&by_module),
        "herbrand": h.to_string(),
    });
    let out = Rendered::new(table, json);
    if agree {
        out
    } else {
        out.failed()
    }
}

pub fn quad_split(k: &QuadraticField, place: &Place) -> Result<Rendered, CliError> {
    let t = splitting_type(k, place)?;
    let table = Table::new()
        .row("D", k.d())
        .row("place", place)
        .row("type", t)
        .row("n_v", t.local_degree());
    let json = json!({
        "d": json_int(k.d()),
        "place": place.to_string(),
        "type": t.to_string(),
        "n_v": t.local_degree(),
    });
    Ok(Rendered::new(table, json))
}

pub fn quad_sunit(k: &QuadraticField, places: &[Place]) -> Result<Rendered, CliError> {
    let r = sunit_herbrand(k, places)?;
    let table = Table::new()
        .row("D", k.d())
        .row("S_F", list(&r.s_f))
        .row("#S_F", r.s_f_size)
        .row("#S_K", r.s_k_size)
        .row("prod n_v", &r.nv_product)
        .row("herbrand", &r.herbrand)
        .row("closed form", &r.closed_form);
    let json = json!({
        "d": json_int(k.d()),
        "s_f": r.s_f.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "s_f_size": r.s_f_size,
        "s_k_size": r.s_k_size,
        "nv_product": json_int(&r.nv_product),
        "herbrand": r.herbrand.to_string(),
        "closed_form": r.closed_form.to_string(),
    });
    let out = Rendered::new(table, json);
    Ok(if r.consistent() { out } else { out.failed() })
}

pub fn quad_trace(k: &QuadraticField) -> Rendered {
    let index = trace_index(k);
    let r = herbrand_quotient(&ok_module(k));
    let table = Table::new()
        .row("D", k.d())
        .row("(Z : Tr O_K)", &index)
        .row("#H^0(O_K)", &r.tate.h0_order)
        .row("#H^1(O_K)", &r.tate.h1_order)
        .row("herbrand", &r.quotient);
    let json: Value = json!({
        "d": json_int(k.d()),
        "trace_index": json_int(&index),
        "h0_order": json_int(&r.tate.h0_order),
        "h1_order": json_int(&r.tate.h1_order),
        "herbrand": r.quotient.to_string(),
    });
    Rendered::new(table, json)
}
