//! Text and LaTeX rendering of elements and tensors.

use super::linear::{Basis, LinComb, Mono, Tensor};
use crate::coeff::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

pub fn mono<const N: usize>(m: &Mono<N>, names: &[&str], style: Style) -> String {
    if m.is_one() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = names[i];
        parts.push(match (e, style) {
            (1, _) => name.to_string(),
            (e, Style::Text) => format!("{name}^{e}"),
            (e, Style::Latex) => format!("{name}^{{{e}}}"),
        });
    }
    parts.join(if style == Style::Text { "*" } else { " " })
}

fn coeff(c: &Coefficient, style: Style) -> String {
    match style {
        Style::Text => c.to_string(),
        Style::Latex => c.to_latex(),
    }
}

fn join_terms(terms: Vec<(Coefficient, String)>, style: Style) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, body)) in terms.iter().enumerate() {
        let neg = c.is_negative_display() && !c.is_compound();
        let abs = if neg { -c } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let cs = coeff(&abs, style);
        let cs = if abs.is_compound() { format!("({cs})") } else { cs };
        let sep = if style == Style::Text { "*" } else { "\\," };
        if body == "1" {
            out.push_str(&cs);
        } else if abs.is_one() {
            out.push_str(body);
        } else {
            out.push_str(&format!("{cs}{sep}{body}"));
        }
    }
    out
}

/// Renders an element or tensor; slots are separated by `⊗`.
pub fn render<B: Basis<N>, const N: usize>(x: &LinComb<B>, names: &[&str], style: Style) -> String {
    let sep = if style == Style::Text { " ⊗ " } else { "\\otimes " };
    let mut entries: Vec<_> = x.iter().collect();
    entries.sort_by(|p, q| q.0.cmp(p.0));
    let terms = entries
        .into_iter()
        .map(|(b, c)| {
            let slots: Vec<String> = (0..B::ARITY).map(|i| mono(&b.slot(i), names, style)).collect();
            let body = if B::ARITY == 1 { slots[0].clone() } else { slots.join(sep) };
            (c.clone(), body)
        })
        .collect();
    join_terms(terms, style)
}

/// Renders an antisymmetric two-slot tensor in the wedge basis, or `None`
/// when the tensor is not antisymmetric.
pub fn render_wedge<const N: usize>(t: &Tensor<N, 2>, names: &[&str], style: Style) -> Option<String> {
    let mut terms = Vec::new();
    // generator order A, A+, A-, M is reverse lexicographic on exponents
    let mut entries: Vec<_> = t.iter().collect();
    entries.sort_by(|x, y| y.0.cmp(x.0));
    for ([a, b], c) in entries {
        if a == b {
            return None;
        }
        let partner = t.coeff(&[*b, *a]);
        if partner != -c {
            return None;
        }
        if a > b {
            let w = if style == Style::Text { " ∧ " } else { "\\wedge " };
            terms.push((c.clone(), format!("{}{w}{}", mono(a, names, style), mono(b, names, style))));
        }
    }
    Some(join_terms(terms, style))
}
