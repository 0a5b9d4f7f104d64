use std::fmt::Write as _;

use clap::ValueEnum;

use crate::mackey::MackeyFunctor;
use crate::Int;

use super::render_machine;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// ASCII Lewis diagram.
    Text,
    /// The parseable document format.
    Machine,
}

/// Text: a two-tier diagram labelled by invariant factors, followed by the
/// structure matrices on the presented generators. Machine: the document format.
pub fn render_lewis(m: &MackeyFunctor<Int>, format: Format) -> String {
    match format {
        Format::Machine => render_machine(m),
        Format::Text => render_text(m),
    }
}

fn render_text(m: &MackeyFunctor<Int>) -> String {
    let (top, bottom) = m.tier_invariants();
    let action = if m.has_trivial_action() { "trivial action" } else { "gamma acts" };
    let mut out = String::new();
    let _ = writeln!(out, "C_{} Mackey functor", m.p());
    let _ = writeln!(out);
    let _ = writeln!(out, "  M(C_p/C_p)   {top}");
    let _ = writeln!(out, "                |   ^");
    let _ = writeln!(out, "            res |   | tr");
    let _ = writeln!(out, "                v   |");
    let _ = writeln!(out, "  M(C_p/e)     {bottom}    ({action})");
    let _ = writeln!(out);
    let _ = writeln!(out, "generators: top {}, bottom {}", m.top().ngens(), m.bottom().ngens());
    let _ = writeln!(out, "res: {}", m.res());
    let _ = writeln!(out, "tr: {}", m.tr());
    let _ = writeln!(out, "gamma: {}", m.action());
    out
}
