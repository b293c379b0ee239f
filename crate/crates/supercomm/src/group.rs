//! Finite groups built from presentations by coset enumeration, plus the
//! element partitions (equality, conjugacy, same-order) the super graphs are
//! defined over.

use std::fmt;

use thiserror::Error;

use crate::presentation::{Letter, Presentation};

pub const DEFAULT_MAX_COSETS: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("coset enumeration did not close within {max_cosets} cosets")]
    BudgetExceeded { max_cosets: usize },
    #[error("enumerated group has {found} elements, expected {expected}")]
    OrderMismatch { found: usize, expected: usize },
}

/// A finite group as a full multiplication table over elements `0..size`,
/// with `0` the identity.
#[derive(Clone, Debug)]
pub struct Group {
    size: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    generators: Vec<(String, usize)>,
}

/// Enumerates the group defined by `p` over the trivial subgroup with the
/// default coset budget.
pub fn enumerate_group(
    p: &Presentation,
    expected: Option<usize>,
) -> Result<Group, EnumerationError> {
    enumerate_group_with_budget(p, expected, DEFAULT_MAX_COSETS)
}

/// As [`enumerate_group`], with an explicit bound on the total number of
/// cosets (live plus collapsed) the enumeration may define.
pub fn enumerate_group_with_budget(
    p: &Presentation,
    expected: Option<usize>,
    max_cosets: usize,
) -> Result<Group, EnumerationError> {
    let cosets = coset::enumerate(p, max_cosets)?;
    let group = Group::from_coset_table(&cosets, p);
    if let Some(expected) = expected {
        if group.size != expected {
            return Err(EnumerationError::OrderMismatch {
                found: group.size,
                expected,
            });
        }
    }
    Ok(group)
}

impl Group {
    /// Builds the multiplication table from the regular action on cosets of
    /// the trivial subgroup. Cosets are renumbered breadth-first from the
    /// identity so that every element has a definition `j = parent * letter`
    /// with `parent < j`, which lets the table fill in one pass.
    fn from_coset_table(cosets: &coset::Table, p: &Presentation) -> Group {
        let n = cosets.rows();
        let ncols = cosets.cols();
        let mut bfs_order = Vec::with_capacity(n);
        let mut pos = vec![usize::MAX; n];
        let mut definition = vec![(0usize, 0usize); n];
        bfs_order.push(0);
        pos[0] = 0;
        let mut head = 0;
        while head < bfs_order.len() {
            let c = bfs_order[head];
            head += 1;
            for col in 0..ncols {
                let d = cosets.get(c, col);
                if pos[d] == usize::MAX {
                    pos[d] = bfs_order.len();
                    definition[bfs_order.len()] = (pos[c], col);
                    bfs_order.push(d);
                }
            }
        }
        assert_eq!(bfs_order.len(), n, "coset table must be connected");

        let act = |elem: usize, col: usize| pos[cosets.get(bfs_order[elem], col)];
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            table[i * n] = i as u32;
        }
        for j in 1..n {
            let (parent, col) = definition[j];
            for i in 0..n {
                let via = table[i * n + parent] as usize;
                table[i * n + j] = act(via, col) as u32;
            }
        }

        let mut inverses = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] == 0 {
                    inverses[i] = j as u32;
                }
            }
        }
        let generators = p
            .generators()
            .iter()
            .enumerate()
            .map(|(g, name)| (name.clone(), act(0, 2 * g)))
            .collect();
        Group {
            size: n,
            table,
            inverses,
            generators,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y] as usize
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x] as usize
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// Element index of a named generator.
    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators
            .iter()
            .find(|(g, _)| g == name)
            .map(|&(_, e)| e)
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    /// Least `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Elements commuting with the whole group, in index order.
    pub fn center(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&z| (0..self.size).all(|g| self.commutes(z, g)))
            .collect()
    }

    pub fn equality_partition(&self) -> Partition {
        Partition::from_blocks((0..self.size).map(|x| vec![x]).collect(), self.size)
            .expect("singletons cover the element set")
    }

    /// Orbits of the conjugation action.
    pub fn conjugacy_partition(&self) -> Partition {
        let mut block_of = vec![usize::MAX; self.size];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.size {
            if block_of[x] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut orbit: Vec<usize> = Vec::new();
            for g in 0..self.size {
                let c = self.mul(self.mul(g, x), self.inverse(g));
                if block_of[c] == usize::MAX {
                    block_of[c] = id;
                    orbit.push(c);
                }
            }
            orbit.sort_unstable();
            blocks.push(orbit);
        }
        Partition { blocks, block_of }
    }

    /// Blocks of elements sharing an element order, ordered by order.
    pub fn order_partition(&self) -> Partition {
        let mut by_order: Vec<(usize, Vec<usize>)> = Vec::new();
        for x in 0..self.size {
            let ord = self.element_order(x);
            match by_order.binary_search_by_key(&ord, |&(o, _)| o) {
                Ok(i) => by_order[i].1.push(x),
                Err(i) => by_order.insert(i, (ord, vec![x])),
            }
        }
        let blocks: Vec<Vec<usize>> = by_order.into_iter().map(|(_, b)| b).collect();
        let mut block_of = vec![0; self.size];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = i;
            }
        }
        Partition { blocks, block_of }
    }

    /// Confirms closure, the identity law, unique two-sided inverses, and
    /// associativity: exhaustively up to 512 elements, on 100000 fixed
    /// pseudo-random triples above that.
    pub fn check_axioms(&self) -> Result<(), String> {
        let n = self.size;
        for i in 0..n {
            for j in 0..n {
                if self.table[i * n + j] as usize >= n {
                    return Err(format!("product {i}*{j} out of range"));
                }
            }
        }
        for i in 0..n {
            if self.mul(0, i) != i || self.mul(i, 0) != i {
                return Err(format!("identity law fails at {i}"));
            }
        }
        for i in 0..n {
            let mut inverses = (0..n).filter(|&j| self.mul(i, j) == 0);
            let inv = inverses.next().ok_or_else(|| format!("{i} has no inverse"))?;
            if inverses.next().is_some() {
                return Err(format!("{i} has multiple right inverses"));
            }
            if self.mul(inv, i) != 0 {
                return Err(format!("inverse of {i} is one-sided"));
            }
        }
        let check = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= 512 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !check(a, b, c) {
                            return Err(format!("associativity fails at ({a},{b},{c})"));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            for _ in 0..100_000 {
                let (a, b, c) = (next(), next(), next());
                if !check(a, b, c) {
                    return Err(format!("associativity fails at ({a},{b},{c})"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("block element {element} is out of range for {n_elements} elements")]
    OutOfRange { element: usize, n_elements: usize },
    #[error("element {element} appears in more than one block")]
    Overlap { element: usize },
    #[error("element {element} is not covered by any block")]
    Uncovered { element: usize },
    #[error("partition contains an empty block")]
    EmptyBlock,
}

/// A partition of `0..n` into disjoint non-empty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn from_blocks(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self, PartitionError> {
        let mut block_of = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &x in block {
                if x >= n {
                    return Err(PartitionError::OutOfRange {
                        element: x,
                        n_elements: n,
                    });
                }
                if block_of[x] != usize::MAX {
                    return Err(PartitionError::Overlap { element: x });
                }
                block_of[x] = i;
            }
        }
        if let Some(x) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(PartitionError::Uncovered { element: x });
        }
        Ok(Partition { blocks, block_of })
    }

    pub fn n_elements(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// Block sizes in ascending order.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.block_of.len() == other.block_of.len()
            && self.blocks.iter().all(|block| {
                let target = other.block_of[block[0]];
                block.iter().all(|&x| other.block_of[x] == target)
            })
    }
}

/// The three equivalence relations the super commuting graphs are taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Equality,
    Conjugacy,
    Order,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::Equality, Relation::Conjugacy, Relation::Order];

    pub fn partition(self, g: &Group) -> Partition {
        match self {
            Relation::Equality => g.equality_partition(),
            Relation::Conjugacy => g.conjugacy_partition(),
            Relation::Order => g.order_partition(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Relation::Equality => "equality",
            Relation::Conjugacy => "conjugacy",
            Relation::Order => "order",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Todd-Coxeter coset enumeration (HLT strategy) over the trivial subgroup.
mod coset {
    use super::{EnumerationError, Letter, Presentation};

    const UNDEF: u32 = u32::MAX;

    pub struct Table {
        ncols: usize,
        rows: Vec<u32>,
    }

    impl Table {
        pub fn rows(&self) -> usize {
            self.rows.len() / self.ncols
        }

        pub fn cols(&self) -> usize {
            self.ncols
        }

        pub fn get(&self, row: usize, col: usize) -> usize {
            self.rows[row * self.ncols + col] as usize
        }
    }

    /// Column encoding: generator `g` acts via column `2g`, its inverse via
    /// `2g + 1`, so `col ^ 1` is the inverse action.
    fn column(l: &Letter) -> usize {
        2 * l.gen + usize::from(l.inverse)
    }

    struct Enumerator {
        ncols: usize,
        table: Vec<u32>,
        parent: Vec<u32>,
        pending: Vec<u32>,
        max_cosets: usize,
    }

    impl Enumerator {
        fn entry(&self, c: u32, col: usize) -> u32 {
            self.table[c as usize * self.ncols + col]
        }

        fn set_entry(&mut self, c: u32, col: usize, d: u32) {
            self.table[c as usize * self.ncols + col] = d;
        }

        fn rep(&mut self, mut c: u32) -> u32 {
            while self.parent[c as usize] != c {
                let up = self.parent[c as usize];
                self.parent[c as usize] = self.parent[up as usize];
                c = self.parent[c as usize];
            }
            c
        }

        fn is_live(&mut self, c: u32) -> bool {
            self.rep(c) == c
        }

        fn merge(&mut self, x: u32, y: u32) {
            let (x, y) = (self.rep(x), self.rep(y));
            if x != y {
                let (keep, drop) = if x < y { (x, y) } else { (y, x) };
                self.parent[drop as usize] = keep;
                self.pending.push(drop);
            }
        }

        fn coincidence(&mut self, a: u32, b: u32) {
            self.merge(a, b);
            while let Some(dead) = self.pending.pop() {
                for col in 0..self.ncols {
                    let d = self.entry(dead, col);
                    if d == UNDEF {
                        continue;
                    }
                    self.set_entry(dead, col, UNDEF);
                    if self.entry(d, col ^ 1) == dead {
                        self.set_entry(d, col ^ 1, UNDEF);
                    }
                    let mu = self.rep(dead);
                    let nu = self.rep(d);
                    let mu_entry = self.entry(mu, col);
                    if mu_entry != UNDEF {
                        self.merge(nu, mu_entry);
                    } else {
                        let nu_entry = self.entry(nu, col ^ 1);
                        if nu_entry != UNDEF {
                            self.merge(mu, nu_entry);
                        } else {
                            self.set_entry(mu, col, nu);
                            self.set_entry(nu, col ^ 1, mu);
                        }
                    }
                }
            }
        }

        fn define(&mut self, c: u32, col: usize) -> Result<(), EnumerationError> {
            let n = self.parent.len();
            if n >= self.max_cosets {
                return Err(EnumerationError::BudgetExceeded {
                    max_cosets: self.max_cosets,
                });
            }
            self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
            self.parent.push(n as u32);
            self.set_entry(c, col, n as u32);
            self.set_entry(n as u32, col ^ 1, c);
            Ok(())
        }

        fn scan_and_fill(&mut self, c: u32, word: &[usize]) -> Result<(), EnumerationError> {
            if word.is_empty() {
                return Ok(());
            }
            let mut f = c;
            let mut i = 0usize;
            let mut b = c;
            let mut j = word.len() - 1;
            loop {
                while i <= j && self.entry(f, word[i]) != UNDEF {
                    f = self.entry(f, word[i]);
                    if i == j {
                        if f != b {
                            self.coincidence(f, b);
                        }
                        return Ok(());
                    }
                    i += 1;
                }
                while j >= i && self.entry(b, word[j] ^ 1) != UNDEF {
                    b = self.entry(b, word[j] ^ 1);
                    if j == i {
                        self.coincidence(f, b);
                        return Ok(());
                    }
                    j -= 1;
                }
                if i == j {
                    self.set_entry(f, word[i], b);
                    self.set_entry(b, word[i] ^ 1, f);
                    return Ok(());
                }
                self.define(f, word[i])?;
            }
        }
    }

    pub fn enumerate(p: &Presentation, max_cosets: usize) -> Result<Table, EnumerationError> {
        let ncols = 2 * p.generators().len().max(1);
        let relators: Vec<Vec<usize>> = p
            .relators()
            .iter()
            .map(|w| w.iter().map(column).collect())
            .collect();
        let mut e = Enumerator {
            ncols,
            table: vec![UNDEF; ncols],
            parent: vec![0],
            pending: Vec::new(),
            max_cosets,
        };
        let mut alpha: u32 = 0;
        while (alpha as usize) < e.parent.len() {
            if e.is_live(alpha) {
                for rel in &relators {
                    e.scan_and_fill(alpha, rel)?;
                    if !e.is_live(alpha) {
                        break;
                    }
                }
                if e.is_live(alpha) {
                    for col in 0..ncols {
                        if e.entry(alpha, col) == UNDEF {
                            e.define(alpha, col)?;
                        }
                    }
                }
            }
            alpha += 1;
        }

        let live: Vec<u32> = (0..e.parent.len() as u32).filter(|&c| e.rep(c) == c).collect();
        let mut renumber = vec![UNDEF; e.parent.len()];
        for (i, &c) in live.iter().enumerate() {
            renumber[c as usize] = i as u32;
        }
        let mut rows = Vec::with_capacity(live.len() * ncols);
        for &c in &live {
            for col in 0..ncols {
                let d = e.entry(c, col);
                assert_ne!(d, UNDEF, "closed table has no undefined entries");
                let d = e.rep(d);
                rows.push(renumber[d as usize]);
            }
        }
        Ok(Table { ncols, rows })
    }
}
