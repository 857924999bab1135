//! Backtracking over monotone point assignments with forward checking.
//!
//! Points of the domain are assigned in index order and each point tries its
//! candidate values in increasing order, so visits happen in lexicographic
//! order of the assignment vector.

use std::ops::ControlFlow;

use super::space::{bit, points_of, FiniteSpace};

struct Search<'a> {
    dom: &'a FiniteSpace,
    cod: &'a FiniteSpace,
    n: usize,
    assign: Vec<usize>,
    // level `p` occupies `stack[p*n .. (p+1)*n]`
    stack: Vec<u64>,
}

impl Search<'_> {
    fn go<F>(&mut self, p: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.n;
        if p == n {
            return visit(&self.assign);
        }
        let base = p * n;
        let mut choices = self.stack[base + p];
        let above = if p >= 63 { 0 } else { !((bit(p) << 1) - 1) };
        let later_succ = self.dom.succ(p) & above;
        let later_pred = self.dom.pred(p) & above;
        while choices != 0 {
            let v = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            let next = base + n;
            let mut ok = true;
            for q in p + 1..n {
                let mut c = self.stack[base + q];
                if later_succ & bit(q) != 0 {
                    c &= self.cod.succ(v);
                }
                if later_pred & bit(q) != 0 {
                    c &= self.cod.pred(v);
                }
                if c == 0 {
                    ok = false;
                    break;
                }
                self.stack[next + q] = c;
            }
            if ok {
                self.assign[p] = v;
                self.go(p + 1, visit)?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Visits every monotone map `dom → cod` whose value at `x` lies in `cands[x]`.
pub(crate) fn for_each_monotone<F>(
    dom: &FiniteSpace,
    cod: &FiniteSpace,
    cands: &[u64],
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = dom.len();
    debug_assert_eq!(cands.len(), n);
    if n == 0 {
        return visit(&[]);
    }
    let all = cod.all();
    let mut stack = vec![0u64; n * (n + 1)];
    for (x, c) in cands.iter().enumerate() {
        let c = c & all;
        if c == 0 {
            return ControlFlow::Continue(());
        }
        stack[x] = c;
    }
    let mut search = Search { dom, cod, n, assign: vec![0; n], stack };
    search.go(0, &mut visit)
}

/// First monotone map (lexicographically) respecting the candidate masks.
pub(crate) fn find_monotone(dom: &FiniteSpace, cod: &FiniteSpace, cands: &[u64]) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = for_each_monotone(dom, cod, cands, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found
}

pub(crate) fn all_monotone(dom: &FiniteSpace, cod: &FiniteSpace) -> Vec<Vec<usize>> {
    let cands = vec![cod.all(); dom.len()];
    let mut out = Vec::new();
    let _ = for_each_monotone(dom, cod, &cands, |m| {
        out.push(m.to_vec());
        ControlFlow::Continue(())
    });
    out
}

pub(crate) fn is_monotone(dom: &FiniteSpace, cod: &FiniteSpace, points: &[usize]) -> bool {
    (0..dom.len()).all(|x| points_of(dom.succ(x)).all(|y| cod.arrow(points[x], points[y])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(dom: &FiniteSpace, cod: &FiniteSpace) -> Vec<Vec<usize>> {
        let (n, m) = (dom.len(), cod.len());
        let total = m.pow(n as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut c = code;
            let mut f = vec![0; n];
            for x in (0..n).rev() {
                f[x] = c % m;
                c /= m;
            }
            if is_monotone(dom, cod, &f) {
                out.push(f);
            }
        }
        if n == 0 {
            out = vec![vec![]];
        }
        out
    }

    #[test]
    fn matches_brute_force_on_small_spaces() {
        let spaces: Vec<_> = (0..=3).flat_map(|n| crate::fintop::spaces_of_size(n, false).unwrap()).collect();
        for a in &spaces {
            for b in &spaces {
                assert_eq!(all_monotone(a, b), brute_force(a, b), "{a} -> {b}");
            }
        }
    }

    #[test]
    fn candidate_masks_restrict_values() {
        let s = FiniteSpace::sierpinski();
        let maps = {
            let mut out = Vec::new();
            let _ = for_each_monotone(&s, &s, &[0b10, 0b11], |m| {
                out.push(m.to_vec());
                ControlFlow::Continue(())
            });
            out
        };
        assert_eq!(maps, vec![vec![1, 1]]);
    }
}
