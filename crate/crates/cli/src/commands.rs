//! One function per subcommand.

use goldman_core::*;
use serde_json::{json, Value};

use crate::render::{self, big, matrix};
use crate::{Input, Output};

fn out(text: String, inputs: &[&Input], result: Value) -> Output {
    Output { text, inputs: inputs.iter().map(|i| render::input(i)).collect(), result, file: None }
}

fn class_name(m: &ProjectiveMatrix, spec: &SubgroupSpec) -> Result<Option<ConjugacyClass>> {
    match conjugacy_class(m, spec) {
        Ok(c) => Ok(Some(c)),
        Err(Error::UnsupportedClassKind) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn eval(i: &Input, spec: &SubgroupSpec) -> Result<Output> {
    let m = &i.matrix;
    let class = class_name(m, spec)?;
    let tau = translation_length(m).ok();
    let class_str = class.as_ref().map(|c| c.to_string());
    let mut text = format!("matrix  {m}\ntrace   {}\nkind    {}\n", m.trace(), m.classify());
    if let Some(c) = &class_str {
        text.push_str(&format!("class   ⟨{c}⟩\n"));
    }
    if let Some(t) = tau {
        text.push_str(&format!("tau     {t:.12}\n"));
    }
    let result = json!({
        "matrix": matrix(m),
        "trace": big(&m.trace()),
        "kind": m.classify().to_string(),
        "class": class_str,
        "translation_length": tau,
    });
    Ok(out(text, &[i], result))
}

pub fn nf(i: &Input, spec: &SubgroupSpec) -> Result<Output> {
    let m = &i.matrix;
    let class = conjugacy_class(m, spec)?;
    let conjugator = if m.is_hyperbolic() {
        let (_, h) = rl_normal_form(m)?;
        h
    } else {
        are_conjugate(m, &class.representative(), &SubgroupSpec::Full)?.expect("a class contains its representative")
    };
    let rep = class.representative();
    let text = format!("class       ⟨{class}⟩\nconjugator  {conjugator}\nrepresentative {rep}\n");
    let result = json!({ "class": class.to_string(), "conjugator": matrix(&conjugator), "representative": matrix(&rep) });
    Ok(out(text, &[i], result))
}

pub fn conj(ins: &[Input], spec: &SubgroupSpec) -> Result<Output> {
    let (a, b) = (&ins[0], &ins[1]);
    let w = are_conjugate(&a.matrix, &b.matrix, spec)?;
    let text = match &w {
        Some(g) => format!("conjugate: yes\nwitness    {g}  (g·M·g⁻¹ = N)\n"),
        None => "conjugate: no\n".to_string(),
    };
    let result = json!({ "conjugate": w.is_some(), "witness": w.as_ref().map(matrix) });
    Ok(out(text, &[a, b], result))
}

pub fn bracket(ins: &[Input], p: u32, q: u32, spec: &SubgroupSpec) -> Result<Output> {
    let (a, b) = (&ins[0], &ins[1]);
    let (x, y) = (&a.matrix, &b.matrix);
    let sum = bracket_of_powers(x, y, p, q, spec)?;
    let cosets = if x.is_hyperbolic() && y.is_hyperbolic() { crossing_double_cosets(x, y, spec)? } else { Vec::new() };
    let power = |w: &str, n: u32| if n == 1 { w.to_string() } else { format!("({w})^{n}") };
    let lhs = format!("[⟨{}⟩,⟨{}⟩]", power(&a.text, p), power(&b.text, q));
    let text = format!(
        "{lhs} = {}\n  manhattan norm {}, {} terms before grouping, {} crossing double cosets\n",
        render::sum_text(&sum),
        manhattan_norm(&sum),
        sum.pre_grouping.len(),
        cosets.len()
    );
    let mut result = render::bracket_json(&sum, &cosets);
    if p != 1 || q != 1 {
        result["p"] = json!(p);
        result["q"] = json!(q);
    }
    Ok(out(text, &[a, b], result))
}

pub fn intersect(ins: &[Input], pmax: u32, spec: &SubgroupSpec) -> Result<Output> {
    let r = intersection_number_capped(&ins[0].matrix, &ins[1].matrix, spec, pmax)?;
    Ok(out(render::report_text("intersection", &r), &[&ins[0], &ins[1]], render::report_json(&r)))
}

pub fn self_intersect(i: &Input, pmax: u32, spec: &SubgroupSpec) -> Result<Output> {
    let r = self_intersection_number_capped(&i.matrix, spec, pmax)?;
    Ok(out(render::report_text("self-intersection", &r), &[i], render::report_json(&r)))
}

pub fn oracle(ins: &[Input], spec: &SubgroupSpec) -> Result<Output> {
    let (n, refs): (u64, Vec<&Input>) = match ins {
        [a] => (geometric_self_intersection_oracle(&a.matrix, spec)?, vec![a]),
        [a, b, ..] => (geometric_intersection_oracle(&a.matrix, &b.matrix, spec)?, vec![a, b]),
        [] => unreachable!("clap requires one word"),
    };
    Ok(out(format!("{n}\n"), &refs, json!({ "count": n })))
}

pub fn jacobi(ins: &[Input], spec: &SubgroupSpec) -> Result<Output> {
    let d = jacobi_defect(&ins[0].matrix, &ins[1].matrix, &ins[2].matrix, spec)?;
    let text = format!("jacobi defect = {}\n", render::sum_text(&d));
    let result = json!({ "defect": render::bracket_json(&d, &[]), "zero": d.is_zero() });
    Ok(out(text, &[&ins[0], &ins[1], &ins[2]], result))
}
