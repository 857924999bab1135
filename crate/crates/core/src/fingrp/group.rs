use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use super::GroupError;

/// Largest group accepted by the table constructor.
pub const MAX_ORDER: usize = 256;

/// A finite group given by its Cayley table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    identity: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.n)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl FiniteGroup {
    /// Validates associativity, identity and inverses. `table[a * n + b]` is `ab`.
    pub fn from_table(name: &str, n: usize, table: Vec<usize>) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::NotAGroup("a group has at least one element".into()));
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge { order: n, limit: MAX_ORDER });
        }
        if table.len() != n * n {
            return Err(GroupError::NotAGroup(format!("expected {} entries, found {}", n * n, table.len())));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= n) {
            return Err(GroupError::NotAGroup(format!("entry {bad} out of range")));
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| GroupError::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for (x, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                .ok_or_else(|| GroupError::NotAGroup(format!("element {x} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(GroupError::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.to_string(), n, identity, table, inverse })
    }

    /// Reads `n` followed by the `n × n` table, whitespace separated.
    pub fn parse_table(name: &str, text: &str) -> Result<Self, GroupError> {
        let mut nums = text.split_whitespace().map(|t| {
            t.parse::<usize>().map_err(|_| GroupError::Parse(format!("not a number: {t:?}")))
        });
        let n = nums.next().ok_or_else(|| GroupError::Parse("empty table".into()))??;
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge { order: n, limit: MAX_ORDER });
        }
        let table = nums.collect::<Result<Vec<_>, _>>()?;
        if table.len() != n * n {
            return Err(GroupError::Parse(format!("expected {} table entries, found {}", n * n, table.len())));
        }
        Self::from_table(name, n, table)
    }

    /// The subgroup of `T` generated by `gens`, with elements numbered in breadth-first
    /// order from the identity.
    pub(crate) fn generated<T: Clone + Eq + Hash>(
        name: &str,
        identity: T,
        gens: &[T],
        mul: impl Fn(&T, &T) -> T,
    ) -> Self {
        let mut elems = vec![identity];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut next = 0;
        while next < elems.len() {
            for g in gens {
                let y = mul(&elems[next], g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            next += 1;
        }
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                table.push(index[&mul(a, b)]);
            }
        }
        Self::from_table(name, n, table).unwrap_or_else(|e| panic!("catalog group {name}: {e}"))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: &str) -> Self {
        FiniteGroup { name: name.to_string(), ..self.clone() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders, an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements of the subgroup generated by `gens`, as a sorted list.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.n).filter(|&x| seen[x]).collect()
    }

    /// A generating set, chosen greedily by decreasing element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = self.elements().filter(|&a| a != self.identity).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in by_order {
            if span.len() == self.n {
                break;
            }
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.subgroup(&gens);
            }
        }
        gens
    }

    /// `[a, b] = a⁻¹b⁻¹ab`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `[H, K]` for subgroups given as element lists.
    pub fn commutator_subgroup(&self, h: &[usize], k: &[usize]) -> Vec<usize> {
        let mut gens: Vec<usize> = h.iter().flat_map(|&a| k.iter().map(move |&b| (a, b))).map(|(a, b)| self.commutator(a, b)).collect();
        gens.sort_unstable();
        gens.dedup();
        self.subgroup(&gens)
    }

    pub fn all(&self) -> Vec<usize> {
        self.elements().collect()
    }
}

/// `G × H` with `(g, h)` at index `g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (n, m) = (g.order(), h.order());
    let mut table = Vec::with_capacity(n * m * n * m);
    for a in 0..n * m {
        for b in 0..n * m {
            let (a1, a2) = (a / m, a % m);
            let (b1, b2) = (b / m, b % m);
            table.push(g.mul(a1, b1) * m + h.mul(a2, b2));
        }
    }
    FiniteGroup::from_table(&format!("{}x{}", g.name(), h.name()), n * m, table).expect("products of groups are groups")
}

fn cyclic(n: usize) -> FiniteGroup {
    let gens: &[usize] = if n > 1 { &[1] } else { &[] };
    FiniteGroup::generated(&format!("Z{n}"), 0, gens, |a, b| (a + b) % n)
}

fn abelian(name: &str, moduli: &[usize]) -> FiniteGroup {
    let gens: Vec<Vec<usize>> = (0..moduli.len())
        .map(|i| (0..moduli.len()).map(|j| usize::from(i == j)).collect())
        .collect();
    FiniteGroup::generated(name, vec![0; moduli.len()], &gens, |a, b| {
        a.iter().zip(b).zip(moduli).map(|((x, y), m)| (x + y) % m).collect()
    })
}

/// Permutations composed left to right: apply `p`, then `q`.
fn permutations(name: &str, gens: &[Vec<usize>]) -> FiniteGroup {
    let id: Vec<usize> = (0..gens[0].len()).collect();
    FiniteGroup::generated(name, id, gens, |p, q| p.iter().map(|&i| q[i]).collect())
}

fn dihedral(k: usize) -> FiniteGroup {
    let rot: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    let refl: Vec<usize> = (0..k).map(|i| (k - i) % k).collect();
    permutations(&format!("D{k}"), &[rot, refl])
}

fn quaternion() -> FiniteGroup {
    // (sign, unit) with units 1, i, j, k
    fn unit(u: usize, v: usize) -> (i8, usize) {
        match (u, v) {
            (0, v) => (1, v),
            (u, 0) => (1, u),
            (u, v) if u == v => (-1, 0),
            (u, v) => {
                let w = 6 - u - v;
                let cyclic = matches!((u, v), (1, 2) | (2, 3) | (3, 1));
                (if cyclic { 1 } else { -1 }, w)
            }
        }
    }
    FiniteGroup::generated("Q8", (1i8, 0usize), &[(1, 1), (1, 2)], |&(s, u), &(t, v)| {
        let (r, w) = unit(u, v);
        (s * t * r, w)
    })
}

fn dicyclic3() -> FiniteGroup {
    // a^k x^e, with x a x⁻¹ = a⁻¹ and x² = a³
    FiniteGroup::generated("Dic3", (0usize, 0usize), &[(1, 0), (0, 1)], |&(k1, e1), &(k2, e2)| {
        if e1 == 0 {
            ((k1 + k2) % 6, e2)
        } else if e2 == 0 {
            ((k1 + 6 - k2) % 6, 1)
        } else {
            ((k1 + 6 - k2 + 3) % 6, 0)
        }
    })
}

/// Named groups of order at most `max_order` (and at most 16), ordered by order then
/// by listing position. Complete up to isomorphism for orders below 16.
pub fn catalog(max_order: usize) -> Vec<FiniteGroup> {
    let mut out = vec![cyclic(1).renamed("0")];
    for n in 2..=16 {
        out.push(cyclic(n));
        match n {
            4 => out.push(abelian("V4", &[2, 2])),
            6 => out.push(permutations("S3", &[vec![1, 2, 0], vec![1, 0, 2]])),
            8 => {
                out.push(abelian("Z2xZ4", &[2, 4]));
                out.push(abelian("Z2xZ2xZ2", &[2, 2, 2]));
                out.push(dihedral(4));
                out.push(quaternion());
            }
            9 => out.push(abelian("Z3xZ3", &[3, 3])),
            10 => out.push(dihedral(5)),
            12 => {
                out.push(abelian("Z2xZ6", &[2, 6]));
                out.push(permutations("A4", &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]));
                out.push(dihedral(6));
                out.push(dicyclic3());
            }
            14 => out.push(dihedral(7)),
            _ => {}
        }
    }
    out.retain(|g| g.order() <= max_order);
    out
}

/// Looks a catalog group up by name. `Z1` and `1` are accepted for the trivial group,
/// `Z2xZ2` for `V4`.
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    let canonical = match name {
        "Z1" | "1" | "trivial" => "0",
        "Z2xZ2" => "V4",
        "Z2^3" => "Z2xZ2xZ2",
        "D3" => "S3",
        other => other,
    };
    catalog(16).into_iter().find(|g| g.name() == canonical)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let orders: HashMap<String, usize> = catalog(16).iter().map(|g| (g.name().to_string(), g.order())).collect();
        for (name, n) in [("0", 1), ("S3", 6), ("D4", 8), ("Q8", 8), ("A4", 12), ("D6", 12), ("Dic3", 12), ("Z16", 16), ("Z3xZ3", 9)] {
            assert_eq!(orders[name], n, "{name}");
        }
    }

    #[test]
    fn q8_has_one_involution() {
        let q8 = by_name("Q8").unwrap();
        assert_eq!(q8.elements().filter(|&a| q8.element_order(a) == 2).count(), 1);
        assert!(!q8.is_abelian());
    }

    #[test]
    fn z4_and_v4_differ() {
        assert_ne!(by_name("Z4").unwrap().order_profile(), by_name("V4").unwrap().order_profile());
    }

    #[test]
    fn rejects_non_groups() {
        assert!(matches!(FiniteGroup::from_table("x", 2, vec![0, 0, 0, 0]), Err(GroupError::NotAGroup(_))));
        assert!(FiniteGroup::parse_table("z2", "2\n0 1\n1 0\n").is_ok());
        assert!(matches!(FiniteGroup::parse_table("z2", "2 0 1 1"), Err(GroupError::Parse(_))));
    }

    #[test]
    fn generators_generate() {
        for g in catalog(16) {
            assert_eq!(g.subgroup(&g.generators()).len(), g.order(), "{}", g.name());
        }
    }
}
