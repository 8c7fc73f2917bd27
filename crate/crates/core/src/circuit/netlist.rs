//! Text netlist:
//!
//! ```text
//! QUBITS <total>
//! REGISTERS a=<s>:<e> b=<s>:<e> c=<s>:<e> anc=<s>:<e>
//! PHASEWIRES <i>,<j>,...
//! CNOT <ctl> <tgt> | CCZ <q1> <q2> <q3> | TOF <c1> <c2> <tgt> | H <q> | X <q>
//! ```
//!
//! `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;
use std::ops::Range;

use thiserror::Error;

use super::{Circuit, Gate, RegisterLayout};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("netlist line {line}: {message}")]
pub struct NetlistError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> NetlistError {
    NetlistError {
        line,
        message: message.into(),
    }
}

pub fn emit_netlist(circuit: &Circuit) -> String {
    let l = circuit.layout();
    let mut out = String::new();
    let range = |r: Range<usize>| format!("{}:{}", r.start, r.end);
    writeln!(out, "QUBITS {}", l.total()).unwrap();
    writeln!(
        out,
        "REGISTERS a={} b={} c={} anc={}",
        range(l.a()),
        range(l.b()),
        range(l.c()),
        range(l.anc())
    )
    .unwrap();
    let phase: Vec<String> = l.phase_wires().iter().map(|w| w.to_string()).collect();
    if phase.is_empty() {
        out.push_str("PHASEWIRES\n");
    } else {
        writeln!(out, "PHASEWIRES {}", phase.join(",")).unwrap();
    }
    for g in circuit.gates() {
        writeln!(out, "{g}").unwrap();
    }
    out
}

pub fn parse_netlist(text: &str) -> Result<Circuit, NetlistError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, qubits_line) = lines
        .next()
        .ok_or_else(|| err(1, "missing QUBITS header"))?;
    let total = match qubits_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["QUBITS", t] => t
            .parse::<usize>()
            .map_err(|_| err(ln, format!("bad qubit count `{t}`")))?,
        _ => return Err(err(ln, "expected `QUBITS <total>`")),
    };

    let (ln, reg_line) = lines
        .next()
        .ok_or_else(|| err(ln + 1, "missing REGISTERS header"))?;
    let mut toks = reg_line.split_whitespace();
    if toks.next() != Some("REGISTERS") {
        return Err(err(ln, "expected `REGISTERS ...`"));
    }
    let mut ranges: [Option<Range<usize>>; 4] = Default::default();
    for tok in toks {
        let (name, span) = tok
            .split_once('=')
            .ok_or_else(|| err(ln, format!("bad register `{tok}`")))?;
        let slot = match name {
            "a" => 0,
            "b" => 1,
            "c" => 2,
            "anc" => 3,
            _ => return Err(err(ln, format!("unknown register `{name}`"))),
        };
        let (s, e) = span
            .split_once(':')
            .ok_or_else(|| err(ln, format!("bad range `{span}`")))?;
        let parse = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| err(ln, format!("bad range bound `{v}`")))
        };
        if ranges[slot].replace(parse(s)?..parse(e)?).is_some() {
            return Err(err(ln, format!("register `{name}` given twice")));
        }
    }
    let [a, b, c, anc] = ranges;
    let missing = || err(ln, "REGISTERS must name a, b, c and anc");
    let (a, b, c, anc) = (
        a.ok_or_else(missing)?,
        b.ok_or_else(missing)?,
        c.ok_or_else(missing)?,
        anc.ok_or_else(missing)?,
    );

    let (pln, phase_line) = lines
        .next()
        .ok_or_else(|| err(ln + 1, "missing PHASEWIRES header"))?;
    let rest = phase_line
        .strip_prefix("PHASEWIRES")
        .ok_or_else(|| err(pln, "expected `PHASEWIRES ...`"))?
        .trim();
    let phase = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| err(pln, format!("bad phase wire `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?
    };

    let layout =
        RegisterLayout::from_ranges(a, b, c, anc, phase).map_err(|e| err(ln, e.to_string()))?;
    if layout.total() != total {
        return Err(err(
            ln,
            format!(
                "registers cover {} wires, QUBITS says {total}",
                layout.total()
            ),
        ));
    }

    let mut circuit = Circuit::new(layout);
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let nums = |k: usize| -> Result<Vec<usize>, NetlistError> {
            if toks.len() != k + 1 {
                return Err(err(ln, format!("`{}` takes {k} operands", toks[0])));
            }
            toks[1..]
                .iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| err(ln, format!("bad operand `{t}`")))
                })
                .collect()
        };
        let gate = match toks[0] {
            "CNOT" => {
                let v = nums(2)?;
                Gate::cnot(v[0], v[1])
            }
            "CCZ" => {
                let v = nums(3)?;
                Gate::ccz(v[0], v[1], v[2])
            }
            "TOF" => {
                let v = nums(3)?;
                Gate::toffoli(v[0], v[1], v[2])
            }
            "H" => Gate::H(nums(1)?[0]),
            "X" => Gate::X(nums(1)?[0]),
            other => return Err(err(ln, format!("unknown gate `{other}`"))),
        };
        circuit.append(gate).map_err(|e| err(ln, e.to_string()))?;
    }
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_cnot() {
        let mut c = Circuit::with_wires(2);
        c.append(Gate::cnot(0, 1)).unwrap();
        let text = emit_netlist(&c);
        assert_eq!(
            text,
            "QUBITS 2\nREGISTERS a=0:2 b=2:2 c=2:2 anc=2:2\nPHASEWIRES\nCNOT 0 1\n"
        );
        assert_eq!(parse_netlist(&text).unwrap(), c);
    }

    #[test]
    fn comments_and_errors() {
        let text = "# header\nQUBITS 3 # three\nREGISTERS a=0:1 b=1:2 c=2:3 anc=3:3\nPHASEWIRES 2\n\nTOF 0 1 2 # go\n";
        let c = parse_netlist(text).unwrap();
        assert_eq!(c.gates(), &[Gate::toffoli(0, 1, 2)]);

        let bad = "QUBITS 3\nREGISTERS a=0:1 b=1:2 c=2:3 anc=3:3\nPHASEWIRES 2\nCNOTT 0 1\n";
        assert_eq!(parse_netlist(bad).unwrap_err().line, 4);
        let overflow = "QUBITS 3\nREGISTERS a=0:1 b=1:2 c=2:3 anc=3:3\nPHASEWIRES\nCNOT 0 3\n";
        assert_eq!(parse_netlist(overflow).unwrap_err().line, 4);
        let arity = "QUBITS 3\nREGISTERS a=0:1 b=1:2 c=2:3 anc=3:3\nPHASEWIRES\nH 0 1\n";
        assert!(parse_netlist(arity).is_err());
        let mismatch = "QUBITS 4\nREGISTERS a=0:1 b=1:2 c=2:3 anc=3:3\nPHASEWIRES\n";
        assert_eq!(parse_netlist(mismatch).unwrap_err().line, 2);
    }

    fn arb_circuit() -> impl Strategy<Value = Circuit> {
        (1usize..4, 0usize..4).prop_flat_map(|(n, m)| {
            let wires = 3 * n + m;
            let gate = (0..wires, 0..wires, 0..wires, 0..5u8).prop_filter_map(
                "distinct",
                |(p, q, r, k)| match k {
                    0 if p != q => Some(Gate::cnot(p, q)),
                    1 if p != q && q != r && p != r => Some(Gate::ccz(p, q, r)),
                    2 if p != q && q != r && p != r => Some(Gate::toffoli(p, q, r)),
                    3 => Some(Gate::H(p)),
                    4 => Some(Gate::X(p)),
                    _ => None,
                },
            );
            prop::collection::vec(gate, 0..30).prop_map(move |gates| {
                Circuit::from_gates(RegisterLayout::multiplier(n, m), gates).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(c in arb_circuit()) {
            prop_assert_eq!(parse_netlist(&emit_netlist(&c)).unwrap(), c);
        }
    }
}
