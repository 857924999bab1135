use std::collections::HashSet;
use std::fmt::Display;

use super::lexer::is_label_char;
use crate::engine::{OrthExpr, Side};
use crate::fintop::{default_label, FiniteSpace, SpaceMap};

fn plain(label: &str) -> bool {
    !label.is_empty() && label.chars().all(is_label_char)
}

/// Labels are usable verbatim when every `=`-part is a plain label and no part repeats.
fn usable(labels: &[String]) -> bool {
    let mut seen = HashSet::new();
    labels
        .iter()
        .all(|l| l.split('=').all(|part| plain(part) && seen.insert(part.to_string())))
}

fn display_labels(space: &FiniteSpace) -> Vec<String> {
    if usable(space.labels()) {
        space.labels().to_vec()
    } else {
        (0..space.len()).map(default_label).collect()
    }
}

fn rep(space: &FiniteSpace, x: usize) -> usize {
    (0..x).find(|&q| space.arrow(q, x) && space.arrow(x, q)).unwrap_or(x)
}

/// Links of point `k` to earlier points, lowest partner first: a non-first member of a
/// `↔`-class links to the first member only; first members link along cover relations.
fn links_to_earlier(space: &FiniteSpace, k: usize) -> Vec<(usize, &'static str)> {
    let r = rep(space, k);
    if r != k {
        return vec![(r, "<->")];
    }
    let reps: Vec<usize> = (0..space.len()).filter(|&m| rep(space, m) == m).collect();
    let strictly = |x: usize, y: usize| space.arrow(x, y) && !space.arrow(y, x);
    let covers = |x: usize, y: usize| strictly(x, y) && !reps.iter().any(|&m| m != x && m != y && strictly(x, m) && strictly(m, y));
    reps.iter()
        .filter(|&&p| p < k)
        .filter_map(|&p| {
            if covers(p, k) {
                Some((p, "->"))
            } else if covers(k, p) {
                Some((p, "<-"))
            } else {
                None
            }
        })
        .collect()
}

fn render_with(space: &FiniteSpace, labels: &[String]) -> String {
    // items in order of their largest point keep first appearances in index order
    let mut items: Vec<(usize, Option<&'static str>, usize)> = Vec::new();
    for k in 0..space.len() {
        let links = links_to_earlier(space, k);
        if links.is_empty() {
            items.push((k, None, k));
        }
        for (p, link) in links {
            items.push((p, Some(link), k));
        }
    }
    let mut chains: Vec<String> = Vec::new();
    let mut tail: Option<usize> = None;
    for (p, link, k) in items {
        match link {
            None => {
                chains.push(labels[k].clone());
                tail = Some(k);
            }
            Some(link) => {
                if tail == Some(p) {
                    let last = chains.last_mut().expect("chain to extend");
                    last.push_str(link);
                    last.push_str(&labels[k]);
                } else {
                    chains.push(format!("{}{}{}", labels[p], link, labels[k]));
                }
                tail = Some(k);
            }
        }
    }
    format!("{{{}}}", chains.join(", "))
}

/// Renders a space so that parsing gives back the same relation with points in the same order.
pub fn render_space(space: &FiniteSpace) -> String {
    render_with(space, &display_labels(space))
}

/// Renders `A -> B` with every codomain point in the image named by its fibre.
pub fn render_map(f: &SpaceMap) -> String {
    let (a, b) = (f.domain(), f.codomain());
    let dom_labels = display_labels(a);
    let mut taken: HashSet<String> = dom_labels.iter().flat_map(|l| l.split('=').map(str::to_string)).collect();
    let mut fresh = {
        let own = b.labels().to_vec();
        let own_ok = usable(&own);
        let mut counter = 0usize;
        move |y: usize, taken: &mut HashSet<String>| -> String {
            if own_ok && own[y].split('=').all(|part| !taken.contains(part)) {
                for part in own[y].split('=') {
                    taken.insert(part.to_string());
                }
                return own[y].clone();
            }
            loop {
                let cand = format!("y{counter}");
                counter += 1;
                if !taken.contains(&cand) {
                    taken.insert(cand.clone());
                    return cand;
                }
            }
        }
    };
    let cod_labels: Vec<String> = (0..b.len())
        .map(|y| {
            let fibre: Vec<&str> = (0..a.len()).filter(|&x| f.apply(x) == y).map(|x| dom_labels[x].as_str()).collect();
            if fibre.is_empty() {
                fresh(y, &mut taken)
            } else {
                fibre.join("=")
            }
        })
        .collect();
    format!("{}->{}", render_with(a, &dom_labels), render_with(b, &cod_labels))
}

/// Renders an expression; a bounded step always closes its `^` group.
pub fn render_expr<M: Display>(expr: &OrthExpr<M>) -> String {
    let gens: Vec<String> = expr.generators.iter().map(|g| g.to_string()).collect();
    let mut out = format!("({})", gens.join(", "));
    let mut open = false;
    for step in &expr.steps {
        if !open {
            out.push('^');
            open = true;
        }
        out.push(match step.side {
            Side::Left => 'l',
            Side::Right => 'r',
        });
        if let Some(n) = step.bound {
            out.push_str(&format!("_{{<{n}}}"));
            open = false;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::{parse_class_expr, parse_map, parse_space};

    #[test]
    fn renders_standard_spaces() {
        for text in ["{a->b}", "{a<->b}", "{a<-U->x<-V->b}", "{a, b}", "{}", "{*}", "{a->b, a->c}"] {
            let s = parse_space(text).unwrap();
            assert_eq!(render_space(&s), text);
        }
    }

    #[test]
    fn renders_maps() {
        for text in ["{a}->{a->b}", "{a<->b}->{a=b}", "{}->{*}", "{b}->{a->b}", "{a, b}->{a=b}"] {
            let f = parse_map(text).unwrap();
            assert_eq!(render_map(&f), text);
        }
        // domain-only labels show up in the codomain
        assert_eq!(render_map(&parse_map("{a}->{b}").unwrap()), "{a}->{b, a}");
    }

    #[test]
    fn renders_expressions() {
        let text = "({a}->{a->b})^r_{<5}^lr";
        assert_eq!(render_expr(&parse_class_expr(text).unwrap()), text);
    }

    #[test]
    fn transitive_edges_are_omitted() {
        let s = parse_space("{a->b->c, a->c}").unwrap();
        assert_eq!(render_space(&s), "{a->b->c}");
        let s = parse_space("{a<->b, b->c}").unwrap();
        assert_eq!(parse_space(&render_space(&s)).unwrap(), s);
    }
}
