//! Permutations of `1..=N`, cycle notation, and a deterministic
//! Schreier-Sims stabilizer chain for exact group orders.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("at {position}: point {point} outside 1..={degree}")]
    OutOfRange { position: usize, point: usize, degree: usize },
    #[error("at {position}: point {point} appears more than once")]
    Repeated { position: usize, point: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image list is not a bijection on 1..={0}")]
    NotBijection(usize),
    #[error("empty generator list")]
    NoGenerators,
}

/// A bijection on `1..=degree`. Points are 1-indexed throughout.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i - 1] = image of point i
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation { images: (1..=degree as u16).collect() }
    }

    /// `images[i - 1]` is the image of point `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation, PermError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &p in &images {
            if p == 0 || p > n || seen[p] {
                return Err(PermError::NotBijection(n));
            }
            seen[p] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|p| p as u16).collect() })
    }

    /// The cycle `(1, 2, ..., n)`.
    pub fn full_cycle(n: usize) -> Permutation {
        Permutation { images: (1..=n as u16).map(|i| i % n as u16 + 1).collect() }
    }

    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Permutation, PermError> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut used = vec![false; degree + 1];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(PermError::OutOfRange { position: k, point: p, degree });
                }
                if used[p] {
                    return Err(PermError::Repeated { position: k, point: p });
                }
                used[p] = true;
                images[p - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// Parses disjoint cycles such as `(3,17,10,7,9)(4,13,14,19,5)`.
    /// Whitespace is ignored; `""` and `"()"` are the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, PermError> {
        CycleParser { chars: text.char_indices().collect(), pos: 0, degree }.parse()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of point `i` (1-indexed).
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        usize::from(self.images[i - 1])
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&p| usize::from(p)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| usize::from(p) == i + 1)
    }

    /// `compose(p, q)(i) = p(q(i))`: `q` acts first.
    pub fn compose(&self, q: &Permutation) -> Permutation {
        assert_eq!(self.degree(), q.degree(), "degree mismatch");
        Permutation { images: q.images.iter().map(|&j| self.images[usize::from(j) - 1]).collect() }
    }

    pub fn try_compose(&self, q: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != q.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(self.compose(q))
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        next.compose(self)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[usize::from(p) - 1] = (i + 1) as u16;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles of length >= 2, each starting at its smallest point,
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn moved_points(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.degree()).filter(move |&i| self.apply(i) != i)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

struct CycleParser {
    chars: Vec<(usize, char)>,
    pos: usize,
    degree: usize,
}

impl CycleParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or_else(|| self.chars.last().map_or(0, |&(i, c)| i + c.len_utf8()), |&(i, _)| i)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn syntax<T>(&self, message: &str) -> Result<T, PermError> {
        Err(PermError::Syntax { position: self.offset(), message: message.to_string() })
    }

    fn parse(mut self) -> Result<Permutation, PermError> {
        let n = self.degree;
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('(') => self.pos += 1,
                Some(_) => return self.syntax("expected '('"),
            }
            let mut cycle: Vec<usize> = Vec::new();
            self.skip_ws();
            if self.peek() == Some(')') {
                self.pos += 1;
                continue;
            }
            loop {
                self.skip_ws();
                let start = self.offset();
                let mut digits = String::new();
                while let Some(c) = self.peek().filter(char::is_ascii_digit) {
                    digits.push(c);
                    self.pos += 1;
                }
                if digits.is_empty() {
                    return self.syntax("expected a point");
                }
                let point: usize = match digits.parse() {
                    Ok(p) => p,
                    Err(_) => return Err(PermError::OutOfRange { position: start, point: usize::MAX, degree: n }),
                };
                if point == 0 || point > n {
                    return Err(PermError::OutOfRange { position: start, point, degree: n });
                }
                if used[point] {
                    return Err(PermError::Repeated { position: start, point });
                }
                used[point] = true;
                cycle.push(point);
                self.skip_ws();
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    None => return self.syntax("unterminated cycle"),
                    Some(_) => return self.syntax("expected ',' or ')'"),
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    /// Canonical cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [deg {}]", self.degree())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses at degree 23, the size of `C`. `"f"` is the full 23-cycle.
impl FromStr for Permutation {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "f" {
            return Ok(Permutation::full_cycle(23));
        }
        Permutation::parse_cycles(s, 23)
    }
}

/// Closure of `start` under the generators.
pub fn orbit(start: &[usize], generators: &[Permutation]) -> BTreeSet<usize> {
    let mut seen: BTreeSet<usize> = start.iter().copied().collect();
    let mut stack: Vec<usize> = seen.iter().copied().collect();
    while let Some(p) = stack.pop() {
        for g in generators {
            let q = g.apply(p);
            if seen.insert(q) {
                stack.push(q);
            }
        }
    }
    seen
}

/// One level of a stabilizer chain.
#[derive(Debug, Clone)]
pub struct ChainLevel {
    pub base_point: usize,
    pub generators: Vec<Permutation>,
    // transversal[p - 1] maps base_point to p
    transversal: Vec<Option<Permutation>>,
}

impl ChainLevel {
    fn new(base_point: usize, degree: usize) -> ChainLevel {
        let mut transversal = vec![None; degree];
        transversal[base_point - 1] = Some(Permutation::identity(degree));
        ChainLevel { base_point, generators: Vec::new(), transversal }
    }

    pub fn orbit_len(&self) -> usize {
        self.transversal.iter().filter(|t| t.is_some()).count()
    }

    pub fn orbit(&self) -> Vec<usize> {
        (1..=self.transversal.len()).filter(|&p| self.transversal[p - 1].is_some()).collect()
    }

    /// Coset representative sending the base point to `p`.
    pub fn representative(&self, p: usize) -> Option<&Permutation> {
        self.transversal[p - 1].as_ref()
    }

    fn add_generator(&mut self, g: Permutation) {
        self.generators.push(g);
        // rebuild the orbit from the representatives already present
        let mut queue: Vec<usize> = self.orbit();
        while let Some(p) = queue.pop() {
            let rep = self.transversal[p - 1].clone().expect("orbit point");
            for x in &self.generators {
                let q = x.apply(p);
                if self.transversal[q - 1].is_none() {
                    self.transversal[q - 1] = Some(rep.then(x));
                    queue.push(q);
                }
            }
        }
    }
}

/// Base, strong generators and transversals of a permutation group.
#[derive(Debug, Clone)]
pub struct StrongGeneratingData {
    degree: usize,
    levels: Vec<ChainLevel>,
}

impl StrongGeneratingData {
    /// Deterministic Schreier-Sims. New base points are the smallest point
    /// moved by the residue that created the level.
    pub fn new(generators: &[Permutation]) -> Result<StrongGeneratingData, PermError> {
        let first = generators.first().ok_or(PermError::NoGenerators)?;
        let degree = first.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch(degree, g.degree()));
        }
        let mut sgd = StrongGeneratingData { degree, levels: Vec::new() };
        for g in generators {
            if g.is_identity() {
                continue;
            }
            if sgd.levels.is_empty() {
                let b = g.moved_points().next().expect("non-identity");
                sgd.levels.push(ChainLevel::new(b, degree));
            }
            sgd.levels[0].add_generator(g.clone());
        }
        sgd.complete();
        Ok(sgd)
    }

    /// Sifts `g` through the chain starting at `level`. Returns the residue
    /// and the level at which sifting stopped (`levels.len()` if it passed
    /// every level).
    fn sift_from(&self, mut g: Permutation, level: usize) -> (Permutation, usize) {
        for (i, lvl) in self.levels.iter().enumerate().skip(level) {
            let p = g.apply(lvl.base_point);
            match lvl.representative(p) {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    fn complete(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        'outer: loop {
            let lvl = &self.levels[i];
            let orbit = lvl.orbit();
            let gens = lvl.generators.clone();
            for &p in &orbit {
                let u_p = lvl.representative(p).expect("orbit point").clone();
                for x in &gens {
                    let q = x.apply(p);
                    let u_q = self.levels[i].representative(q).expect("closed orbit");
                    let schreier = u_p.then(x).then(&u_q.inverse());
                    let (h, j) = self.sift_from(schreier, i + 1);
                    if !h.is_identity() {
                        if j == self.levels.len() {
                            let b = h.moved_points().next().expect("non-identity");
                            self.levels.push(ChainLevel::new(b, self.degree));
                        }
                        for l in i + 1..=j {
                            self.levels[l].add_generator(h.clone());
                        }
                        i = j;
                        continue 'outer;
                    }
                }
            }
            if i == 0 {
                break;
            }
            i -= 1;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn levels(&self) -> &[ChainLevel] {
        &self.levels
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(ChainLevel::orbit_len).collect()
    }

    /// Product of the transversal sizes.
    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit_len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(g.clone(), 0).0.is_identity()
    }
}

/// Exact order of the group generated by `generators`.
pub fn group_order(generators: &[Permutation]) -> Result<u128, PermError> {
    Ok(StrongGeneratingData::new(generators)?.order())
}
