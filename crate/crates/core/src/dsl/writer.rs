use std::fmt::Write;

use super::{FiltrationFile, LevelSpec, PresentationFile};

/// Canonical text of a presentation file; parsing it back gives an equal
/// value.
pub fn write_presentation(f: &PresentationFile) -> String {
    let a = &f.presentation;
    let mut out = String::new();
    writeln!(out, "field {}", a.field()).unwrap();
    writeln!(out, "cutoff {}", a.cutoff()).unwrap();
    if a.is_bigraded() {
        writeln!(out, "bigraded").unwrap();
    }
    for (i, g) in a.generators().iter().enumerate() {
        write!(out, "gen {}", g.name).unwrap();
        match g.bidegree {
            Some((p, q)) => write!(out, " ({p},{q})").unwrap(),
            None => write!(out, " {}", g.degree).unwrap(),
        }
        let j = a.conjugate_index(i);
        if j > i {
            write!(out, " conj {}", a.generator(j).name).unwrap();
        }
        out.push('\n');
    }
    for r in a.relations() {
        writeln!(out, "relation {}", a.format_monomial(r)).unwrap();
    }
    for (i, g) in a.generators().iter().enumerate() {
        if !a.d_of(i).is_zero() {
            writeln!(out, "d {} = {}", g.name, a.format(a.d_of(i))).unwrap();
        }
    }
    for (name, (s, t)) in &f.types {
        writeln!(out, "type {name} ({s},{t})").unwrap();
    }
    if let Some((k, ext)) = &f.extension {
        for (name, beta) in ext {
            writeln!(out, "extend {k} {name} = {}", a.format(beta)).unwrap();
        }
    }
    for (name, p) in &f.w {
        writeln!(out, "w {name} = {}", a.format(p)).unwrap();
    }
    for (u, v) in &f.wpairs {
        writeln!(out, "wpair {u} {v}").unwrap();
    }
    out
}

fn level(spec: &LevelSpec) -> String {
    match spec {
        LevelSpec::Zero => "zero".into(),
        LevelSpec::Full => "full".into(),
        LevelSpec::Span(vs) => vs
            .iter()
            .map(|v| {
                let cells: Vec<String> = v
                    .iter()
                    .map(|c| {
                        let s = c.to_string();
                        if s.contains('+') || s[1..].contains('-') { format!("({s})") } else { s }
                    })
                    .collect();
                format!("({})", cells.join(", "))
            })
            .collect::<Vec<_>>()
            .join(";"),
    }
}

pub fn write_filtration(f: &FiltrationFile) -> String {
    let mut out = String::new();
    writeln!(out, "field {}", f.field).unwrap();
    writeln!(out, "space {}", f.space).unwrap();
    for (l, s) in &f.weight {
        writeln!(out, "W {l} = {}", level(s)).unwrap();
    }
    for (l, s) in &f.hodge {
        writeln!(out, "F {l} = {}", level(s)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{parse_filtration, parse_presentation};
    use super::*;

    #[test]
    fn round_trip_presentation() {
        let src = "field Q(i)\ncutoff 5\nbigraded\ngen e (1,1)\ngen z (1,0) conj zb\ngen zb (0,1)\nrelation e^3\nd z = (1+i)*e\ntype e (1,1)\nw x = e\nw y = 0\nwpair x y\n";
        let f = parse_presentation(src).unwrap();
        let text = write_presentation(&f);
        assert_eq!(text, src);
        assert_eq!(parse_presentation(&text).unwrap(), f);
    }

    #[test]
    fn round_trip_filtration() {
        let src = "field Q(i)\nspace 2\nW 0 = zero\nW 1 = full\nF 0 = full\nF 1 = (1, -i);(0, 2-i)\n";
        let f = parse_filtration(src).unwrap();
        let text = write_filtration(&f);
        assert_eq!(parse_filtration(&text).unwrap(), f);
    }
}
