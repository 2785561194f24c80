//! Deterministic single-edit mutations of a certificate, for negative tests.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Exchange entries `i` and `i + 1` (cyclically).
    Swap(usize),
    /// Exchange two arbitrary entries.
    SwapPair(usize, usize),
    /// Overwrite entry `to` with a copy of entry `from`.
    Duplicate { from: usize, to: usize },
    /// Insert a second copy of entry `i` right after it.
    Repeat(usize),
    Delete(usize),
}

impl Mutation {
    pub fn apply<T: Clone>(self, seq: &[T]) -> Vec<T> {
        let mut out = seq.to_vec();
        let len = out.len();
        match self {
            Mutation::Swap(i) => out.swap(i % len, (i + 1) % len),
            Mutation::SwapPair(i, j) => out.swap(i % len, j % len),
            Mutation::Duplicate { from, to } => out[to % len] = seq[from % len].clone(),
            Mutation::Repeat(i) => out.insert(i % len + 1, seq[i % len].clone()),
            Mutation::Delete(i) => {
                out.remove(i % len);
            }
        }
        out
    }
}

/// Every adjacent swap, every deletion, every repeat, and for each entry one
/// overwrite by the entry halfway around the cycle.
pub fn all_single_mutations(len: usize) -> Vec<Mutation> {
    let mut out = Vec::with_capacity(4 * len);
    for i in 0..len {
        out.push(Mutation::Swap(i));
        out.push(Mutation::Delete(i));
        out.push(Mutation::Repeat(i));
        out.push(Mutation::Duplicate {
            from: (i + len / 2) % len,
            to: i,
        });
    }
    out
}
