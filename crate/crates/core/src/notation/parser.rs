use std::collections::HashMap;
use std::sync::Arc;

use super::lexer::{lex, Tok};
use super::ParseError;
use crate::engine::{OrthExpr, Side, Step};
use crate::fintop::{FiniteSpace, SpaceError, SpaceMap, MAX_POINTS};

/// How a map's codomain relates to its domain labels.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MapMode {
    /// Domain labels, identifications and arrows are added to the codomain.
    #[default]
    LabelUnion,
    /// Every domain label must be written in the codomain; nothing is carried over.
    Strict,
}

/// A space as written, before identification.
#[derive(Default)]
struct RawSpace {
    labels: Vec<String>,
    offsets: Vec<usize>,
    index: HashMap<String, usize>,
    merges: Vec<(usize, usize)>,
    arrows: Vec<(usize, usize)>,
}

impl RawSpace {
    fn intern(&mut self, label: &str, offset: usize) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.offsets.push(offset);
        self.index.insert(label.to_string(), i);
        i
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Identifies labels and builds the space; returns it with the point of every label.
fn build(
    labels: &[String],
    merges: &[(usize, usize)],
    arrows: &[(usize, usize)],
    offset: usize,
) -> Result<(FiniteSpace, Vec<usize>), ParseError> {
    let mut uf = UnionFind::new(labels.len());
    for &(a, b) in merges {
        uf.union(a, b);
    }
    let mut point_of_root = HashMap::new();
    let mut names: Vec<Vec<&str>> = Vec::new();
    let mut point = vec![0; labels.len()];
    for (i, l) in labels.iter().enumerate() {
        let r = uf.find(i);
        let p = *point_of_root.entry(r).or_insert_with(|| {
            names.push(Vec::new());
            names.len() - 1
        });
        names[p].push(l);
        point[i] = p;
    }
    if names.len() > MAX_POINTS {
        return Err(ParseError::new(offset, format!("at most {MAX_POINTS} points"), format!("{} points", names.len())));
    }
    let mut succ = vec![0u64; names.len()];
    for &(a, b) in arrows {
        succ[point[a]] |= 1 << point[b];
    }
    let space = FiniteSpace::from_relation(names.iter().map(|n| n.join("=")).collect(), succ)
        .map_err(|e| ParseError::new(offset, "a well-formed space", e.to_string()))?;
    Ok((space, point))
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self, ParseError> {
        Ok(Parser { text, toks: lex(text)?, pos: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.text.len(), |(o, _)| *o)
    }

    fn found(&self) -> String {
        self.peek().map_or_else(|| "end of input".to_string(), Tok::describe)
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError::new(self.offset(), expected, self.found())
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.error(&tok.describe()))
        }
    }

    fn label(&mut self, expected: &str) -> Result<(usize, String), ParseError> {
        match self.toks.get(self.pos) {
            Some((o, Tok::Label(l))) => {
                let out = (*o, l.clone());
                self.pos += 1;
                Ok(out)
            }
            _ => Err(self.error(expected)),
        }
    }

    fn end(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    fn raw_space(&mut self) -> Result<RawSpace, ParseError> {
        self.expect(Tok::LBrace)?;
        let mut raw = RawSpace::default();
        if self.eat(&Tok::RBrace) {
            return Ok(raw);
        }
        loop {
            let (o, l) = self.label("a point label")?;
            let mut prev = raw.intern(&l, o);
            loop {
                let link = match self.peek() {
                    Some(t @ (Tok::Right | Tok::Left | Tok::Both | Tok::Eq)) => t.clone(),
                    _ => break,
                };
                self.pos += 1;
                let (o, l) = self.label("a point label after the link")?;
                let next = raw.intern(&l, o);
                match link {
                    Tok::Right => raw.arrows.push((prev, next)),
                    Tok::Left => raw.arrows.push((next, prev)),
                    Tok::Both => {
                        raw.arrows.push((prev, next));
                        raw.arrows.push((next, prev));
                    }
                    _ => raw.merges.push((prev, next)),
                }
                prev = next;
            }
            if self.eat(&Tok::Comma) {
                continue;
            }
            self.expect(Tok::RBrace)?;
            return Ok(raw);
        }
    }

    fn space(&mut self) -> Result<FiniteSpace, ParseError> {
        let start = self.offset();
        let raw = self.raw_space()?;
        Ok(build(&raw.labels, &raw.merges, &raw.arrows, start)?.0)
    }

    fn map(&mut self, mode: MapMode) -> Result<SpaceMap, ParseError> {
        let start = self.offset();
        let dom_raw = self.raw_space()?;
        self.expect(Tok::Right)?;
        let cod_start = self.offset();
        let mut cod_raw = self.raw_space()?;
        let (dom, dom_point) = build(&dom_raw.labels, &dom_raw.merges, &dom_raw.arrows, start)?;
        // codomain index of every domain label
        let mut carried = Vec::with_capacity(dom_raw.labels.len());
        // `X -> {*}` is the map to the point: labels are not carried into a bare `{*}`
        let terminal = cod_raw.labels.len() == 1
            && cod_raw.labels[0] == "*"
            && cod_raw.merges.is_empty()
            && cod_raw.arrows.is_empty()
            && !dom_raw.labels.iter().any(|l| l == "*");
        for (i, l) in dom_raw.labels.iter().enumerate() {
            if terminal {
                carried.push(0);
                continue;
            }
            match (mode, cod_raw.index.get(l)) {
                (_, Some(&j)) => carried.push(j),
                (MapMode::LabelUnion, None) => carried.push(cod_raw.intern(l, dom_raw.offsets[i])),
                (MapMode::Strict, None) => {
                    return Err(ParseError::new(
                        dom_raw.offsets[i],
                        format!("label `{l}` to appear in the codomain"),
                        "a label missing from the codomain",
                    ))
                }
            }
        }
        let mut merges = cod_raw.merges.clone();
        let mut arrows = cod_raw.arrows.clone();
        if mode == MapMode::LabelUnion {
            merges.extend(dom_raw.merges.iter().map(|&(a, b)| (carried[a], carried[b])));
            arrows.extend(dom_raw.arrows.iter().map(|&(a, b)| (carried[a], carried[b])));
        }
        let (cod, cod_point) = build(&cod_raw.labels, &merges, &arrows, cod_start)?;
        let mut points = vec![usize::MAX; dom.len()];
        for (i, &p) in dom_point.iter().enumerate() {
            let target = cod_point[carried[i]];
            if points[p] != usize::MAX && points[p] != target {
                return Err(ParseError::new(
                    dom_raw.offsets[i],
                    "identified domain labels to be identified in the codomain",
                    format!("label `{}` in a different class", dom_raw.labels[i]),
                ));
            }
            points[p] = target;
        }
        SpaceMap::new(Arc::new(dom), Arc::new(cod), points).map_err(|e| match e {
            SpaceError::NotMonotone => ParseError::new(start, "a continuous map", "an arrow that is not preserved"),
            other => ParseError::new(start, "a well-formed map", other.to_string()),
        })
    }

    fn steps(&mut self) -> Result<Vec<Step>, ParseError> {
        let mut steps = Vec::new();
        while self.eat(&Tok::Caret) {
            let braced = self.eat(&Tok::LBrace);
            let (o, letters) = self.label("side letters `l`/`r`")?;
            if letters.is_empty() || !letters.chars().all(|c| c == 'l' || c == 'r') {
                return Err(ParseError::new(o, "side letters `l`/`r`", format!("`{letters}`")));
            }
            if braced {
                self.expect(Tok::RBrace)?;
            }
            for c in letters.chars() {
                let side = if c == 'l' { Side::Left } else { Side::Right };
                steps.push(Step { side, bound: None });
            }
            if self.eat(&Tok::Underscore) {
                let braced = self.eat(&Tok::LBrace);
                self.expect(Tok::Lt)?;
                let (o, n) = self.label("a size bound")?;
                let n: usize = n.parse().map_err(|_| ParseError::new(o, "a decimal size bound", format!("`{n}`")))?;
                if braced {
                    self.expect(Tok::RBrace)?;
                }
                steps.last_mut().expect("at least one letter").bound = Some(n);
            }
        }
        if steps.is_empty() {
            return Err(self.error("`^` and at least one step"));
        }
        Ok(steps)
    }

    fn expr(&mut self, mode: MapMode) -> Result<OrthExpr<SpaceMap>, ParseError> {
        self.expect(Tok::LParen)?;
        // `((G)^r_{<5})^lr` nests an expression; its steps come first
        if self.peek() == Some(&Tok::LParen) {
            let mut inner = self.expr(mode)?;
            self.expect(Tok::RParen)?;
            inner.steps.extend(self.steps()?);
            return Ok(inner);
        }
        if self.peek() == Some(&Tok::RParen) {
            return Err(self.error("at least one generator map"));
        }
        let mut generators = vec![self.map(mode)?];
        while self.eat(&Tok::Comma) {
            generators.push(self.map(mode)?);
        }
        self.expect(Tok::RParen)?;
        let steps = self.steps()?;
        Ok(OrthExpr { generators, steps })
    }
}

pub fn parse_space(text: &str) -> Result<FiniteSpace, ParseError> {
    let mut p = Parser::new(text)?;
    let s = p.space()?;
    p.end()?;
    Ok(s)
}

pub fn parse_map(text: &str) -> Result<SpaceMap, ParseError> {
    parse_map_with(text, MapMode::LabelUnion)
}

pub fn parse_map_with(text: &str, mode: MapMode) -> Result<SpaceMap, ParseError> {
    let mut p = Parser::new(text)?;
    let m = p.map(mode)?;
    p.end()?;
    Ok(m)
}

pub fn parse_class_expr(text: &str) -> Result<OrthExpr<SpaceMap>, ParseError> {
    parse_class_expr_with(text, MapMode::LabelUnion)
}

pub fn parse_class_expr_with(text: &str, mode: MapMode) -> Result<OrthExpr<SpaceMap>, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.expr(mode)?;
    p.end()?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_expressions_flatten() {
        let nested = parse_class_expr("(({a}->{a->b})^r_{<5})^lr").unwrap();
        let flat = parse_class_expr("({a}->{a->b})^r_{<5}^lr").unwrap();
        assert_eq!(nested.steps, flat.steps);
        assert_eq!(nested.steps.len(), 3);
        assert_eq!(nested.steps[0].bound, Some(5));
        assert!(parse_class_expr("(({a}->{b}))^l").is_err());
    }

    #[test]
    fn sierpinski_and_antidiscrete() {
        let s = parse_space("{a->b}").unwrap();
        assert_eq!(s.open_sets(), vec![0b00, 0b01, 0b11]);
        let a = parse_space("{a<->b}").unwrap();
        assert_eq!(a.open_sets(), vec![0b00, 0b11]);
        assert_eq!(parse_space("{}").unwrap().len(), 0);
        assert_eq!(parse_space("{*}").unwrap().label(0), "*");
    }

    #[test]
    fn normality_space() {
        let s = parse_space("{a<-U->x<-V->b}").unwrap();
        let expected = FiniteSpace::from_arrows(
            &["a", "U", "x", "V", "b"],
            &[("U", "a"), ("U", "x"), ("V", "x"), ("V", "b")],
        )
        .unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn identification_merges_points() {
        let s = parse_space("{a=b, b->c}").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.label(0), "a=b");
        assert!(s.arrow(0, 1));
    }

    #[test]
    fn label_union_maps() {
        let f = parse_map("{a} -> {a->b}").unwrap();
        assert_eq!(f.points(), &[0]);
        assert_eq!(f.codomain().len(), 2);
        let g = parse_map("{a} -> {b}").unwrap();
        assert_eq!(g.codomain().len(), 2);
        assert_eq!(g.codomain().arrow_count(), 2);
        assert_eq!(g.points(), &[1]);
        let h = parse_map("{a<->b} -> {a=b}").unwrap();
        assert_eq!(h.codomain().len(), 1);
        assert!(h.is_surjective());
        let e = parse_map("{}->{*}").unwrap();
        assert_eq!((e.domain().len(), e.codomain().len()), (0, 1));
    }

    #[test]
    fn strict_mode() {
        assert!(parse_map_with("{a} -> {b}", MapMode::Strict).is_err());
        assert!(parse_map_with("{a} -> {a,b}", MapMode::Strict).is_ok());
        // arrows are not carried in strict mode, so this is not continuous
        assert!(parse_map_with("{a->b} -> {a,b}", MapMode::Strict).is_err());
        assert!(parse_map_with("{a=b} -> {a,b}", MapMode::Strict).is_err());
    }

    #[test]
    fn class_expressions() {
        let e = parse_class_expr("({a}->{a->b})^r_{<5}^lr").unwrap();
        assert_eq!(e.generators.len(), 1);
        assert_eq!(
            e.steps,
            vec![
                Step { side: Side::Right, bound: Some(5) },
                Step { side: Side::Left, bound: None },
                Step { side: Side::Right, bound: None },
            ]
        );
        let e = parse_class_expr("({}->{*})^r").unwrap();
        assert_eq!(e.steps.len(), 1);
        let e = parse_class_expr("({a<->b}->{a=b}, {a->b}->{a=b}, {b}->{a->b}, {a<-o->b}->{a=o=b})^lr").unwrap();
        assert_eq!(e.generators.len(), 4);
        let e = parse_class_expr("({}->{*})^{lr}").unwrap();
        assert_eq!(e.steps.len(), 2);
    }

    #[test]
    fn errors_carry_offsets() {
        let err = parse_space("{a->}").unwrap_err();
        assert_eq!(err.offset, 4);
        let err = parse_class_expr("()^r").unwrap_err();
        assert_eq!(err.offset, 1);
        let err = parse_class_expr("({}->{*})").unwrap_err();
        assert_eq!(err.offset, 9);
        let err = parse_class_expr("({}->{*})^x").unwrap_err();
        assert_eq!(err.offset, 10);
        let err = parse_space("{a, a=}").unwrap_err();
        assert_eq!(err.offset, 6);
    }
}
