use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::lexer::{tokenize, Tok, Token};
use super::{DslError, Pos};
use crate::exactfield::{Field, Scalar};
use crate::gca::{GcaError, Polynomial, Presentation};

/// A parsed presentation file with its optional annotation blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationFile {
    pub presentation: Presentation,
    /// `type NAME (s,t)` annotations in file order.
    pub types: Vec<(String, (u32, u32))>,
    /// Hirsch extension block: degree and `(name, β)` pairs.
    pub extension: Option<(u32, Vec<(String, Polynomial)>)>,
    /// `w NAME = EXPR` lines: real degree-1 generators and their `d`.
    pub w: Vec<(String, Polynomial)>,
    pub wpairs: Vec<(String, String)>,
}

impl PresentationFile {
    pub fn plain(presentation: Presentation) -> Self {
        PresentationFile { presentation, types: Vec::new(), extension: None, w: Vec::new(), wpairs: Vec::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelSpec {
    Zero,
    Full,
    Span(Vec<Vec<Scalar>>),
}

/// A vector space `field^space` with an increasing filtration `W` and a
/// decreasing filtration `F`, each listed by level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationFile {
    pub field: Field,
    pub space: usize,
    pub weight: Vec<(i32, LevelSpec)>,
    pub hodge: Vec<(i32, LevelSpec)>,
}

#[derive(Clone, Debug)]
enum Expr {
    Num(Scalar),
    Gen(String, Pos),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug)]
enum Grading {
    Single(u32),
    Double(u32, u32),
}

#[derive(Clone, Debug)]
enum Stmt {
    Field(Field),
    Cutoff(u32),
    Bigraded,
    Gen { name: String, grading: Grading, conj: Option<(String, Pos)> },
    Relation(Expr),
    D { name: String, expr: Expr },
    Type { name: String, bideg: (u32, u32) },
    Extend { degree: u32, name: String, expr: Expr },
    W { name: String, expr: Expr },
    WPair(String, String),
    Space(usize),
    Level { weight: bool, level: i32, spec: Vec<Vec<Expr>>, full: Option<bool> },
}

struct Cursor {
    toks: Vec<Token>,
    k: usize,
}

impl Cursor {
    fn peek(&self) -> &Token {
        &self.toks[self.k]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.k].clone();
        if self.k + 1 < self.toks.len() {
            self.k += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, DslError> {
        let t = self.peek();
        Err(DslError::syntax(t.pos, format!("unexpected {}", t.tok), expected.iter().map(|s| s.to_string()).collect()))
    }

    fn expect(&mut self, tok: Tok, label: &str) -> Result<Pos, DslError> {
        if self.peek().tok == tok {
            Ok(self.next().pos)
        } else {
            self.fail(&[label])
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), DslError> {
        match &self.peek().tok {
            Tok::Ident(s) if s != "i" => {
                let s = s.clone();
                Ok((s, self.next().pos))
            }
            _ => self.fail(&["generator name"]),
        }
    }

    fn uint(&mut self) -> Result<u32, DslError> {
        match &self.peek().tok {
            Tok::Int(s) => {
                let pos = self.peek().pos;
                let v = s.parse::<u32>().map_err(|_| DslError::semantic(pos, "integer out of range"))?;
                self.next();
                Ok(v)
            }
            _ => self.fail(&["integer"]),
        }
    }

    fn int(&mut self) -> Result<i32, DslError> {
        let neg = if self.peek().tok == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        let v = self.uint()? as i32;
        Ok(if neg { -v } else { v })
    }

    fn bideg(&mut self) -> Result<(u32, u32), DslError> {
        self.expect(Tok::LParen, "`(`")?;
        let p = self.uint()?;
        self.expect(Tok::Comma, "`,`")?;
        let q = self.uint()?;
        self.expect(Tok::RParen, "`)`")?;
        Ok((p, q))
    }

    fn end_of_line(&mut self) -> Result<(), DslError> {
        match self.peek().tok {
            Tok::Newline => {
                self.next();
                Ok(())
            }
            Tok::Eof => Ok(()),
            _ => self.fail(&["end of line"]),
        }
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = if self.peek().tok == Tok::Minus {
            self.next();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    let pos = self.next().pos;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?), pos);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, DslError> {
        let base = self.atom()?;
        if self.peek().tok == Tok::Caret {
            self.next();
            let e = self.uint()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(s) => {
                self.next();
                let n: BigInt = s.parse().expect("digits");
                Ok(Expr::Num(Scalar::from(BigRational::from_integer(n))))
            }
            Tok::Ident(s) if s == "i" => {
                self.next();
                Ok(Expr::Num(Scalar::i()))
            }
            Tok::Ident(s) => {
                self.next();
                Ok(Expr::Gen(s, t.pos))
            }
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Minus => {
                self.next();
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            _ => self.fail(&["number", "`i`", "generator name", "`(`"]),
        }
    }

    fn vector(&mut self) -> Result<Vec<Expr>, DslError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut v = vec![self.expr()?];
        while self.peek().tok == Tok::Comma {
            self.next();
            v.push(self.expr()?);
        }
        self.expect(Tok::RParen, "`)`")?;
        Ok(v)
    }

    fn statement(&mut self) -> Result<Option<(Pos, Stmt)>, DslError> {
        while self.peek().tok == Tok::Newline {
            self.next();
        }
        let t = self.peek().clone();
        let kw = match &t.tok {
            Tok::Eof => return Ok(None),
            Tok::Ident(s) => s.clone(),
            _ => return self.fail(&["statement keyword"]),
        };
        self.next();
        let stmt = match kw.as_str() {
            "field" => {
                let (name, pos) = match &self.peek().tok {
                    Tok::Ident(s) => (s.clone(), self.next().pos),
                    _ => return self.fail(&["`Q`", "`Q(i)`"]),
                };
                if name != "Q" {
                    return Err(DslError::syntax(pos, format!("unknown field `{name}`"), vec!["`Q`".into(), "`Q(i)`".into()]));
                }
                if self.peek().tok == Tok::LParen {
                    self.next();
                    match &self.peek().tok {
                        Tok::Ident(s) if s == "i" => {
                            self.next();
                        }
                        _ => return self.fail(&["`i`"]),
                    }
                    self.expect(Tok::RParen, "`)`")?;
                    Stmt::Field(Field::Gaussian)
                } else {
                    Stmt::Field(Field::Rational)
                }
            }
            "cutoff" => Stmt::Cutoff(self.uint()?),
            "bigraded" => Stmt::Bigraded,
            "gen" => {
                let (name, _) = self.ident()?;
                let grading = match self.peek().tok {
                    Tok::LParen => {
                        let (p, q) = self.bideg()?;
                        Grading::Double(p, q)
                    }
                    Tok::Int(_) => Grading::Single(self.uint()?),
                    _ => return self.fail(&["degree", "bidegree `(p,q)`"]),
                };
                let conj = match &self.peek().tok {
                    Tok::Ident(s) if s == "conj" => {
                        self.next();
                        Some(self.ident()?)
                    }
                    _ => None,
                };
                Stmt::Gen { name, grading, conj }
            }
            "relation" => Stmt::Relation(self.expr()?),
            "d" => {
                let (name, _) = self.ident()?;
                self.expect(Tok::Eq, "`=`")?;
                Stmt::D { name, expr: self.expr()? }
            }
            "type" => {
                let (name, _) = self.ident()?;
                Stmt::Type { name, bideg: self.bideg()? }
            }
            "extend" => {
                let degree = self.uint()?;
                let (name, _) = self.ident()?;
                self.expect(Tok::Eq, "`=`")?;
                Stmt::Extend { degree, name, expr: self.expr()? }
            }
            "w" => {
                let (name, _) = self.ident()?;
                self.expect(Tok::Eq, "`=`")?;
                Stmt::W { name, expr: self.expr()? }
            }
            "wpair" => {
                let (a, _) = self.ident()?;
                let (b, _) = self.ident()?;
                Stmt::WPair(a, b)
            }
            "space" => Stmt::Space(self.uint()? as usize),
            "W" | "F" => {
                let level = self.int()?;
                self.expect(Tok::Eq, "`=`")?;
                let weight = kw == "W";
                match &self.peek().tok {
                    Tok::Ident(s) if s == "full" || s == "zero" => {
                        let full = s == "full";
                        self.next();
                        Stmt::Level { weight, level, spec: Vec::new(), full: Some(full) }
                    }
                    Tok::LParen => {
                        let mut spec = vec![self.vector()?];
                        while self.peek().tok == Tok::Semicolon {
                            self.next();
                            spec.push(self.vector()?);
                        }
                        Stmt::Level { weight, level, spec, full: None }
                    }
                    _ => return self.fail(&["`full`", "`zero`", "vector list"]),
                }
            }
            _ => {
                return Err(DslError::syntax(
                    t.pos,
                    format!("unknown statement `{kw}`"),
                    ["field", "cutoff", "bigraded", "gen", "relation", "d", "type", "extend", "w", "wpair"]
                        .iter()
                        .map(|s| format!("`{s}`"))
                        .collect(),
                ))
            }
        };
        self.end_of_line()?;
        Ok(Some((t.pos, stmt)))
    }
}

fn statements(src: &str) -> Result<Vec<(Pos, Stmt)>, DslError> {
    let mut c = Cursor { toks: tokenize(src)?, k: 0 };
    let mut out = Vec::new();
    while let Some(s) = c.statement()? {
        out.push(s);
    }
    Ok(out)
}

fn eval(e: &Expr, a: &Presentation) -> Result<Polynomial, DslError> {
    Ok(match e {
        Expr::Num(c) => Polynomial::constant(c.clone()),
        Expr::Gen(name, pos) => {
            a.gen(name).map_err(|_| DslError::semantic(*pos, format!("unknown generator `{name}`")))?
        }
        Expr::Add(x, y) => eval(x, a)?.plus(&eval(y, a)?),
        Expr::Sub(x, y) => eval(x, a)?.minus(&eval(y, a)?),
        Expr::Neg(x) => eval(x, a)?.neg(),
        Expr::Mul(x, y) => a.multiply(&eval(x, a)?, &eval(y, a)?),
        Expr::Div(x, y, pos) => {
            let den = eval(y, a)?;
            let c = constant_of(&den).ok_or_else(|| DslError::semantic(*pos, "division by a non-constant"))?;
            if c.is_zero() {
                return Err(DslError::semantic(*pos, "division by zero"));
            }
            eval(x, a)?.scale(&c.inv())
        }
        Expr::Pow(x, n) => {
            let b = eval(x, a)?;
            let mut acc = Polynomial::one();
            for _ in 0..*n {
                acc = a.multiply(&acc, &b);
            }
            acc
        }
    })
}

fn constant_of(p: &Polynomial) -> Option<Scalar> {
    if p.is_zero() {
        return Some(Scalar::zero());
    }
    let mut it = p.terms();
    let (m, c) = it.next()?;
    (m.is_one() && it.next().is_none()).then(|| c.clone())
}

fn check_field(field: Field, p: &Polynomial, pos: Pos) -> Result<(), DslError> {
    match p.terms().find(|(_, c)| !field.admits(c)) {
        Some((_, c)) => Err(DslError::semantic(pos, format!("coefficient {c} is not in {field}"))),
        None => Ok(()),
    }
}

fn check_degree(a: &Presentation, p: &Polynomial, expected: u32, pos: Pos, what: &str) -> Result<(), DslError> {
    match a.homogeneous_degree(p) {
        Some(None) => Ok(()),
        Some(Some(d)) if d == expected => Ok(()),
        Some(Some(d)) => Err(DslError::semantic(pos, format!("{what} must have degree {expected}, found degree {d}"))),
        None => Err(DslError::semantic(pos, format!("{what} is not homogeneous"))),
    }
}

/// Parses and validates a presentation file.
pub fn parse_presentation(src: &str) -> Result<PresentationFile, DslError> {
    let stmts = statements(src)?;
    let mut field = Field::Rational;
    let mut cutoff = None;
    let mut bigraded = false;
    for (pos, s) in &stmts {
        match s {
            Stmt::Field(f) => field = *f,
            Stmt::Cutoff(n) => cutoff = Some(*n),
            Stmt::Bigraded => bigraded = true,
            Stmt::Space(_) | Stmt::Level { .. } => {
                return Err(DslError::semantic(*pos, "filtration statement in a presentation file"))
            }
            _ => {}
        }
    }
    let cutoff = cutoff.ok_or_else(|| DslError::semantic(Pos { line: 1, col: 1 }, "missing `cutoff` declaration"))?;
    let mut a = Presentation::new(field, cutoff, bigraded);
    let mut sites: HashMap<String, Pos> = HashMap::new();
    for (pos, s) in &stmts {
        if let Stmt::Gen { name, grading, .. } = s {
            let (deg, bideg) = match *grading {
                Grading::Single(d) => (d, None),
                Grading::Double(p, q) => (p + q, Some((p, q))),
            };
            a.add_generator(name, deg, bideg).map_err(|e| DslError::semantic(*pos, e.to_string()))?;
            sites.insert(name.clone(), *pos);
        }
    }
    for (pos, s) in &stmts {
        if let Stmt::Gen { name, conj: Some((other, opos)), .. } = s {
            let i = a.index_of(name).expect("declared");
            let j = a.index_of(other).ok_or_else(|| DslError::semantic(*opos, format!("unknown generator `{other}`")))?;
            if a.conjugate_index(i) != i || (a.conjugate_index(j) != j && a.conjugate_index(j) != i) {
                return Err(DslError::semantic(*pos, format!("`{name}` already has a conjugate")));
            }
            a.set_conjugate(i, j);
        }
    }
    for (pos, s) in &stmts {
        if let Stmt::Relation(e) = s {
            let free = Presentation::new(field, cutoff, bigraded).clone_generators_from(&a);
            let p = eval(e, &free)?;
            let mut terms = p.terms();
            match (terms.next(), terms.next()) {
                (Some((m, _)), None) if !m.is_one() => a.add_relation(m.clone()),
                _ => return Err(DslError::semantic(*pos, "a relation must be a single monomial")),
            }
        }
    }
    let mut assigned: HashMap<usize, Pos> = HashMap::new();
    for (pos, s) in &stmts {
        if let Stmt::D { name, expr } = s {
            let i = a.index_of(name).ok_or_else(|| DslError::semantic(*pos, format!("unknown generator `{name}`")))?;
            if assigned.insert(i, *pos).is_some() {
                return Err(DslError::semantic(*pos, format!("d({name}) assigned twice")));
            }
            let p = eval(expr, &a)?;
            check_field(field, &p, *pos)?;
            check_degree(&a, &p, a.generator(i).degree + 1, *pos, &format!("d({name})"))?;
            a.set_d(i, p);
            sites.insert(name.clone(), *pos);
        }
    }
    a.validate().map_err(|e| {
        let pos = match &e {
            GcaError::InvalidGenerator { generator, .. }
            | GcaError::FieldViolation { generator, .. }
            | GcaError::InhomogeneousDifferential { generator, .. }
            | GcaError::BidegreeViolation { generator, .. }
            | GcaError::NotADifferential { generator, .. } => sites.get(generator).copied(),
            _ => None,
        };
        DslError::semantic(pos.unwrap_or(Pos { line: 1, col: 1 }), e.to_string())
    })?;

    let mut file = PresentationFile::plain(a);
    let a = &file.presentation;
    let mut ext_degree = None;
    let mut extension: Vec<(String, Polynomial)> = Vec::new();
    for (pos, s) in &stmts {
        match s {
            Stmt::Type { name, bideg } => file.types.push((name.clone(), *bideg)),
            Stmt::Extend { degree, name, expr } => {
                if *ext_degree.get_or_insert(*degree) != *degree {
                    return Err(DslError::semantic(*pos, "all extension generators must share one degree"));
                }
                if a.index_of(name).is_some() || extension.iter().any(|(n, _)| n == name) {
                    return Err(DslError::semantic(*pos, format!("duplicate generator `{name}`")));
                }
                let p = eval(expr, a)?;
                check_field(a.field(), &p, *pos)?;
                check_degree(a, &p, degree + 1, *pos, &format!("beta({name})"))?;
                if !a.d(&p).is_zero() {
                    return Err(DslError::semantic(*pos, format!("beta({name}) is not a cocycle")));
                }
                extension.push((name.clone(), p));
            }
            Stmt::W { name, expr } => {
                if a.index_of(name).is_some() || file.w.iter().any(|(n, _)| n == name) {
                    return Err(DslError::semantic(*pos, format!("duplicate generator `{name}`")));
                }
                let p = eval(expr, a)?;
                check_field(a.field(), &p, *pos)?;
                check_degree(a, &p, 2, *pos, &format!("d({name})"))?;
                file.w.push((name.clone(), p));
            }
            Stmt::WPair(u, v) => {
                for n in [u, v] {
                    if !file.w.iter().any(|(m, _)| m == n) {
                        return Err(DslError::semantic(*pos, format!("`{n}` is not a declared `w` generator")));
                    }
                }
                file.wpairs.push((u.clone(), v.clone()));
            }
            _ => {}
        }
    }
    for (pos, s) in &stmts {
        if let Stmt::Type { name, .. } = s {
            if a.index_of(name).is_none() && !extension.iter().any(|(n, _)| n == name) && !file.w.iter().any(|(n, _)| n == name) {
                return Err(DslError::semantic(*pos, format!("unknown generator `{name}`")));
            }
        }
    }
    if let Some(k) = ext_degree {
        file.extension = Some((k, extension));
    }
    Ok(file)
}

impl Presentation {
    /// Copy of the generators and conjugation of `other`, without
    /// differential or relations.
    pub(crate) fn clone_generators_from(mut self, other: &Presentation) -> Presentation {
        for (i, g) in other.generators().iter().enumerate() {
            self.add_generator(&g.name, g.degree, g.bidegree).expect("fresh presentation");
            let j = other.conjugate_index(i);
            if j < i {
                self.set_conjugate(j, i);
            }
        }
        self
    }
}

/// Parses a filtration file.
pub fn parse_filtration(src: &str) -> Result<FiltrationFile, DslError> {
    let stmts = statements(src)?;
    let mut field = Field::Rational;
    let mut space = None;
    for (_, s) in &stmts {
        match s {
            Stmt::Field(f) => field = *f,
            Stmt::Space(n) => space = Some(*n),
            _ => {}
        }
    }
    let space = space.ok_or_else(|| DslError::semantic(Pos { line: 1, col: 1 }, "missing `space` declaration"))?;
    let empty = Presentation::ground(field, 0);
    let mut file = FiltrationFile { field, space, weight: Vec::new(), hodge: Vec::new() };
    for (pos, s) in &stmts {
        match s {
            Stmt::Field(_) | Stmt::Space(_) => {}
            Stmt::Level { weight, level, spec, full } => {
                let ls = match full {
                    Some(true) => LevelSpec::Full,
                    Some(false) => LevelSpec::Zero,
                    None => {
                        let mut vs = Vec::new();
                        for v in spec {
                            if v.len() != space {
                                return Err(DslError::semantic(*pos, format!("vector of length {} in a space of dimension {space}", v.len())));
                            }
                            let mut row = Vec::new();
                            for e in v {
                                let p = eval(e, &empty)?;
                                let c = constant_of(&p).ok_or_else(|| DslError::semantic(*pos, "vector entries must be constants"))?;
                                if !field.admits(&c) {
                                    return Err(DslError::semantic(*pos, format!("coefficient {c} is not in {field}")));
                                }
                                row.push(c);
                            }
                            vs.push(row);
                        }
                        LevelSpec::Span(vs)
                    }
                };
                let list = if *weight { &mut file.weight } else { &mut file.hodge };
                if list.iter().any(|(l, _)| l == level) {
                    return Err(DslError::semantic(*pos, format!("level {level} given twice")));
                }
                list.push((*level, ls));
            }
            _ => return Err(DslError::semantic(*pos, "presentation statement in a filtration file")),
        }
    }
    file.weight.sort_by_key(|(l, _)| *l);
    file.hodge.sort_by_key(|(l, _)| *l);
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_file() {
        let f = parse_presentation("field Q\ncutoff 4\ngen x 1\ngen y 1\n").unwrap();
        assert_eq!(f.presentation.ngens(), 2);
        assert_eq!(f.presentation.cutoff(), 4);
    }

    #[test]
    fn bigraded_with_conjugates() {
        let src = "field Q(i)\ncutoff 5\nbigraded\ngen z (1,0) conj zb\ngen zb (0,1)\ngen e (1,1)\nrelation e^2\nd z = 2*i*e\n";
        let f = parse_presentation(src).unwrap();
        let a = &f.presentation;
        assert_eq!(a.conjugate_index(0), 1);
        assert_eq!(a.relations().len(), 1);
        assert_eq!(a.format(a.d_of(0)), "2*i*e");
    }

    #[test]
    fn degree_violation_is_positioned() {
        let err = parse_presentation("cutoff 4\ngen x 1\ngen z 1\nd z = x\n").unwrap_err();
        assert_eq!(err.pos().line, 4);
        assert!(err.to_string().contains("degree 2"));
    }

    #[test]
    fn syntax_error_lists_expectations() {
        let err = parse_presentation("cutoff 4\ngen x 1\nd x = (x*\n").unwrap_err();
        match err {
            DslError::Syntax { pos, expected, .. } => {
                assert_eq!(pos.line, 3);
                assert!(expected.iter().any(|e| e.contains("generator")));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_generator_in_expression() {
        let err = parse_presentation("cutoff 4\ngen x 1\ngen y 1\nd x = 0\nd y = x*q\n").unwrap_err();
        assert_eq!(err.pos(), Pos { line: 5, col: 9 });
    }

    #[test]
    fn filtration_file() {
        let f = parse_filtration("field Q(i)\nspace 2\nW 0 = zero\nW 1 = full\nF 1 = (1, i)\nF 0 = full\nF 2 = zero\n").unwrap();
        assert_eq!(f.weight.len(), 2);
        assert_eq!(f.hodge[0].0, 0);
        assert_eq!(f.hodge[1].1, LevelSpec::Span(vec![vec![Scalar::from_int(1), Scalar::i()]]));
    }
}
