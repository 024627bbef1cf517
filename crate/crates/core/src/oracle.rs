//! Independent checks used by the test suite and by `--verify`.
//!
//! Each check recomputes a quantity by a second route (breadth-first
//! search, literal subword products, affine-root counting, R-polynomials)
//! and reports the first disagreement.

use std::collections::{HashMap, HashSet};

use crate::affine_weyl::{AffineWeylGroup, IwElement};
use crate::flag_cells::{self, Facet};
use crate::kl_hecke::KazhdanLusztig;

/// Elements reached by breadth-first search over `S` from length-zero
/// seeds, with word lengths and parent pointers.
pub struct BfsBall {
    pub layers: Vec<Vec<IwElement>>,
    dist: HashMap<IwElement, usize>,
    /// `w = s * parent`
    parent: HashMap<IwElement, (usize, IwElement)>,
}

impl BfsBall {
    pub fn new(g: &AffineWeylGroup, radius: usize, seeds: &[IwElement]) -> Self {
        let mut dist = HashMap::new();
        let mut parent = HashMap::new();
        let mut layer: Vec<IwElement> = Vec::new();
        for tau in seeds {
            if dist.insert(tau.clone(), 0).is_none() {
                layer.push(tau.clone());
            }
        }
        layer.sort();
        let mut layers = vec![layer];
        for k in 0..radius {
            let mut next = Vec::new();
            for u in &layers[k] {
                for s in 0..g.num_generators() {
                    let y = g.left_mul(s, u);
                    if !dist.contains_key(&y) {
                        dist.insert(y.clone(), k + 1);
                        parent.insert(y.clone(), (s, u.clone()));
                        next.push(y);
                    }
                }
            }
            next.sort();
            layers.push(next);
        }
        BfsBall { layers, dist, parent }
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn distance(&self, w: &IwElement) -> Option<usize> {
        self.dist.get(w).copied()
    }

    pub fn elements(&self) -> impl Iterator<Item = &IwElement> {
        self.layers.iter().flatten()
    }

    /// Word `s_1 .. s_q` and seed `tau` with `w = s_1 .. s_q tau`.
    pub fn word(&self, w: &IwElement) -> Option<(Vec<usize>, IwElement)> {
        self.dist.get(w)?;
        let mut word = Vec::new();
        let mut cur = w.clone();
        while let Some((s, p)) = self.parent.get(&cur) {
            word.push(*s);
            cur = p.clone();
        }
        Some((word, cur))
    }
}

/// Closed-form length against breadth-first distance for every element of
/// the ball. Returns the number of elements compared.
pub fn check_lengths(g: &AffineWeylGroup, ball: &BfsBall) -> Result<usize, String> {
    for w in ball.elements() {
        let (d, l) = (ball.distance(w).unwrap(), g.length(w));
        if d != l {
            return Err(format!("length {l} but word length {d} for {}", g.display(w)));
        }
    }
    Ok(ball.len())
}

/// All products of subwords of `s_1 .. s_q`, times `tau`.
pub fn subword_products(g: &AffineWeylGroup, word: &[usize], tau: &IwElement) -> HashSet<IwElement> {
    let mut set: HashSet<IwElement> = HashSet::from([tau.clone()]);
    for &s in word.iter().rev() {
        let more: Vec<IwElement> = set.iter().map(|x| g.left_mul(s, x)).collect();
        set.extend(more);
    }
    set
}

/// Recursive Bruhat order against subword search, over all pairs in the
/// ball with `l(w) <= max_len`. Returns the number of pairs compared.
pub fn check_bruhat(g: &AffineWeylGroup, ball: &BfsBall, max_len: usize) -> Result<usize, String> {
    let mut pairs = 0;
    let elems: Vec<&IwElement> = ball.elements().collect();
    for w in &elems {
        if ball.distance(w).unwrap() > max_len {
            continue;
        }
        let (word, tau) = ball.word(w).unwrap();
        let below = subword_products(g, &word, &tau);
        for v in &elems {
            let expect = below.contains(*v);
            if g.bruhat_leq(v, w) != expect {
                return Err(format!("order of {} and {}: subwords say {expect}", g.display(v), g.display(w)));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

/// Affine-root count, orbit length and breadth-first distance for every
/// minimal representative in `W/W_J` of length at most `max_len`.
pub fn check_root_counts(
    g: &AffineWeylGroup,
    f: &Facet,
    max_len: usize,
    seeds: &[IwElement],
    ball: &BfsBall,
) -> Result<usize, String> {
    let reps = flag_cells::min_reps_by_length(g, f, max_len, seeds).map_err(|e| e.to_string())?;
    for w in &reps {
        let c = flag_cells::double_coset_of(g, w, &Facet::alcove(), f);
        let by_roots = flag_cells::cell_dimension_by_roots(g, w, f);
        let len = flag_cells::coset_length(g, &c);
        let dist = ball.distance(w);
        if by_roots != len || dist.is_some_and(|d| d != len) {
            return Err(format!(
                "facet {}: {} has root count {by_roots}, coset length {len}, word length {dist:?}",
                f.name(g),
                g.display(w)
            ));
        }
    }
    Ok(reps.len())
}

/// `sum over v in w W_J of q^{l(v)} = q^{l(w_min)} W_J(q)`, with the left
/// side summed over the fibers of `Fl -> Fl_J`.
pub fn check_fiber_identity(g: &AffineWeylGroup, w: &IwElement, f: &Facet) -> Result<(), String> {
    let fibers = flag_cells::projection_fiber_decomposition(g, w, &Facet::alcove(), f).map_err(|e| e.to_string())?;
    let wmin = flag_cells::coset_min_rep(g, w, f);
    let base = g.length(&wmin);
    let mut lhs = Vec::new();
    for (v, d) in &fibers {
        let l = g.length(v);
        if l != base + d {
            return Err(format!("fiber {} has length {l}, expected {}", g.display(v), base + d));
        }
        if lhs.len() <= l {
            lhs.resize(l + 1, 0u64);
        }
        lhs[l] += 1;
    }
    let mut rhs = vec![0u64; base];
    rhs.extend(flag_cells::parabolic_poincare(g, f));
    if lhs != rhs {
        return Err(format!("coset of {}: {lhs:?} != {rhs:?}", g.display(w)));
    }
    if fibers.iter().filter(|(_, d)| *d == 0).count() != 1 {
        return Err("expected exactly one fiber of dimension 0".into());
    }
    Ok(())
}

/// R-polynomials `R_{x,y}` (as coefficient vectors in `q`) by the descent
/// recursion.
pub struct RPolynomials<'a> {
    g: &'a AffineWeylGroup,
    memo: HashMap<(IwElement, IwElement), Vec<i64>>,
}

impl<'a> RPolynomials<'a> {
    pub fn new(g: &'a AffineWeylGroup) -> Self {
        RPolynomials { g, memo: HashMap::new() }
    }

    pub fn get(&mut self, x: &IwElement, y: &IwElement) -> Vec<i64> {
        if let Some(r) = self.memo.get(&(x.clone(), y.clone())) {
            return r.clone();
        }
        let g = self.g;
        let r = match g.first_left_descent(y) {
            None => {
                if x == y {
                    vec![1]
                } else {
                    Vec::new()
                }
            }
            Some(s) => {
                let sy = g.left_mul(s, y);
                let sx = g.left_mul(s, x);
                if g.is_left_descent(x, s) {
                    self.get(&sx, &sy)
                } else {
                    // (q - 1) R_{x,sy} + q R_{sx,sy}
                    let a = self.get(x, &sy);
                    let b = self.get(&sx, &sy);
                    let mut out = vec![0i64; a.len().max(b.len()) + 1];
                    for (i, c) in a.iter().enumerate() {
                        out[i + 1] += c;
                        out[i] -= c;
                    }
                    for (i, c) in b.iter().enumerate() {
                        out[i + 1] += c;
                    }
                    while out.last() == Some(&0) {
                        out.pop();
                    }
                    out
                }
            }
        };
        self.memo.insert((x.clone(), y.clone()), r.clone());
        r
    }
}

/// `q^{l(w)-l(x)} P_{x,w}(q^-1) = sum over x <= y <= w of R_{x,y} P_{y,w}`
/// for every `x <= w`. Returns the number of pairs checked.
pub fn check_kl_inversion(kl: &KazhdanLusztig<'_>, rp: &mut RPolynomials<'_>, w: &IwElement) -> Result<usize, String> {
    let g = kl.group();
    let column = kl.column_of(w).map_err(|e| e.to_string())?;
    let lw = g.length(w);
    for (x, p) in &column {
        let d = lw - g.length(x);
        let mut lhs = vec![0i64; d + 1];
        for (i, c) in p.0.iter().enumerate() {
            if i > d {
                return Err(format!("degree of P too large for {}", g.display(x)));
            }
            lhs[d - i] += c;
        }
        let mut rhs = vec![0i64; d + 1];
        for (y, py) in &column {
            let r = rp.get(x, y);
            for (i, a) in r.iter().enumerate() {
                for (j, b) in py.0.iter().enumerate() {
                    if i + j > d {
                        return Err(format!("identity overflows degree at {}", g.display(x)));
                    }
                    rhs[i + j] += a * b;
                }
            }
        }
        if lhs != rhs {
            return Err(format!("inversion identity fails for x = {}, w = {}", g.display(x), g.display(w)));
        }
    }
    Ok(column.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_group;

    #[test]
    fn small_oracles_agree() {
        let g = AffineWeylGroup::new(parse_group("SL3").unwrap());
        let ball = BfsBall::new(&g, 4, &[g.identity()]);
        assert_eq!(check_lengths(&g, &ball).unwrap(), 1 + 3 + 6 + 9 + 12);
        assert!(check_bruhat(&g, &ball, 3).is_ok());
        for f in Facet::all(&g) {
            check_root_counts(&g, &f, 3, &[g.identity()], &ball).unwrap();
        }
    }

    #[test]
    fn bfs_words_multiply_back() {
        let g = AffineWeylGroup::new(parse_group("C2").unwrap());
        let ball = BfsBall::new(&g, 3, &[g.identity()]);
        for w in ball.elements() {
            let (word, tau) = ball.word(w).unwrap();
            assert_eq!(&g.multiply(&g.product(&word), &tau), w);
        }
    }

    #[test]
    fn r_polynomials_of_a_reflection() {
        let g = AffineWeylGroup::new(parse_group("SL2").unwrap());
        let mut rp = RPolynomials::new(&g);
        let s = g.product(&[0]);
        assert_eq!(rp.get(&g.identity(), &s), vec![-1, 1]);
        assert_eq!(rp.get(&s, &g.identity()), Vec::<i64>::new());
    }
}
