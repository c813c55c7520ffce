use std::fmt::Write;

use super::Dfa;

/// GraphViz rendering. Accepting states are double circles and the initial
/// state has an arrow from an invisible point node. Parallel edges are
/// merged into one edge with a comma-separated label.
///
/// `labels`, when given, names states by index; otherwise states are `q0`,
/// `q1`, ...
pub fn to_dot(a: &Dfa, labels: Option<&[String]>) -> String {
    let name = |q: usize| match labels.and_then(|l| l.get(q)) {
        Some(l) => l.clone(),
        None => format!("q{q}"),
    };
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    out.push_str("  start [shape=point];\n");
    for q in 0..a.state_count() {
        let shape = if a.is_accepting(q) {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(
            out,
            "  s{q} [label=\"{}\", shape={shape}];",
            escape(&name(q))
        );
    }
    let _ = writeln!(out, "  start -> s{};", a.initial());
    for q in 0..a.state_count() {
        let mut targets: Vec<(usize, Vec<&str>)> = Vec::new();
        for x in 0..a.alphabet().len() {
            let t = a.step(q, x);
            let sym = a.alphabet().symbol(x);
            match targets.iter_mut().find(|(s, _)| *s == t) {
                Some((_, syms)) => syms.push(sym),
                None => targets.push((t, vec![sym])),
            }
        }
        for (t, syms) in targets {
            let _ = writeln!(
                out,
                "  s{q} -> s{t} [label=\"{}\"];",
                escape(&syms.join(","))
            );
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
