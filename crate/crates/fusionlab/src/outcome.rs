use std::collections::BTreeMap;
use std::fmt;

/// Finite multiset of labels with positive multiplicities.
///
/// Entries keep the order in which they were first produced, which is the
/// order the fusion formulas list them in. Equality ignores that order.
#[derive(Debug, Clone)]
pub struct FusionOutcome<L> {
    entries: Vec<(L, u32)>,
}

impl<L> Default for FusionOutcome<L> {
    fn default() -> Self {
        FusionOutcome {
            entries: Vec::new(),
        }
    }
}

impl<L: Clone + Ord> FusionOutcome<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(l: L) -> Self {
        let mut o = Self::new();
        o.add(l, 1);
        o
    }

    /// Add `m` copies of `l`.
    pub fn add(&mut self, l: L, m: u32) {
        if m == 0 {
            return;
        }
        match self.entries.iter_mut().find(|(x, _)| *x == l) {
            Some((_, n)) => *n += m,
            None => self.entries.push((l, m)),
        }
    }

    pub fn push(&mut self, l: L) {
        self.add(l, 1);
    }

    /// Multiplicity of `l` (zero when absent).
    pub fn mult(&self, l: &L) -> u32 {
        self.entries
            .iter()
            .find(|(x, _)| x == l)
            .map_or(0, |(_, n)| *n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, u32)> {
        self.entries.iter().map(|(l, n)| (l, *n))
    }

    /// Number of distinct labels.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u32 {
        self.entries.iter().map(|(_, n)| n).sum()
    }

    /// Remove one copy of `l`; returns whether anything was removed.
    pub fn remove_one(&mut self, l: &L) -> bool {
        let Some(pos) = self.entries.iter().position(|(x, _)| x == l) else {
            return false;
        };
        self.entries[pos].1 -= 1;
        if self.entries[pos].1 == 0 {
            self.entries.remove(pos);
        }
        true
    }

    /// Sorted view, the canonical form used for comparisons.
    pub fn sorted(&self) -> BTreeMap<L, u32> {
        self.entries.iter().cloned().collect()
    }

    pub fn map<M: Clone + Ord>(&self, mut f: impl FnMut(&L) -> M) -> FusionOutcome<M> {
        let mut o = FusionOutcome::new();
        for (l, n) in self.iter() {
            o.add(f(l), n);
        }
        o
    }

    pub fn extend(&mut self, other: &FusionOutcome<L>) {
        for (l, n) in other.iter() {
            self.add(l.clone(), n);
        }
    }

    pub fn scaled(&self, m: u32) -> Self {
        FusionOutcome {
            entries: self
                .entries
                .iter()
                .filter(|_| m > 0)
                .map(|(l, n)| (l.clone(), n * m))
                .collect(),
        }
    }
}

impl<L: Clone + Ord> PartialEq for FusionOutcome<L> {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl<L: Clone + Ord> Eq for FusionOutcome<L> {}

impl<L: Clone + Ord> FromIterator<L> for FusionOutcome<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        let mut o = FusionOutcome::new();
        for l in iter {
            o.push(l);
        }
        o
    }
}

impl<L: Clone + Ord> FromIterator<(L, u32)> for FusionOutcome<L> {
    fn from_iter<I: IntoIterator<Item = (L, u32)>>(iter: I) -> Self {
        let mut o = FusionOutcome::new();
        for (l, n) in iter {
            o.add(l, n);
        }
        o
    }
}

/// Space separated, with `n*` prefixes for multiplicities above one.
impl<L: fmt::Display> fmt::Display for FusionOutcome<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (l, n)) in self.entries.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            if *n > 1 {
                write!(f, "{n}*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
