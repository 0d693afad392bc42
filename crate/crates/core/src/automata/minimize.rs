use super::Dfa;

/// Minimal complete DFA by Hopcroft partition refinement.
///
/// Unreachable states are dropped first; the dead state, when the language
/// needs one, is kept. The result is numbered canonically (breadth-first
/// from the start state), so minimizing equal languages over the same
/// alphabet yields identical values.
pub fn minimize(d: &Dfa) -> Dfa {
    let d = d.canonical();
    let n = d.state_count();
    let k = d.alphabet().len();

    // preds[q * k + c] = { p | δ(p, c) = q }
    let mut preds = vec![Vec::new(); n * k];
    for (p, c, q) in d.transitions() {
        preds[q * k + c].push(p);
    }

    let mut part = Partition::new(n, |q| d.is_final(q));
    let mut pending = vec![false; part.block_count() * k];
    let mut worklist = Vec::new();
    for b in 0..part.block_count() {
        for c in 0..k {
            pending[b * k + c] = true;
            worklist.push((b, c));
        }
    }

    let mut touched = Vec::new();
    while let Some((splitter, c)) = worklist.pop() {
        pending[splitter * k + c] = false;
        let members = part.members(splitter).to_vec();
        for q in members {
            for &p in &preds[q * k + c] {
                if part.mark(p) {
                    touched.push(part.block_of[p]);
                }
            }
        }
        for b in touched.drain(..) {
            let Some(nb) = part.split(b) else { continue };
            pending.resize(part.block_count() * k, false);
            for c2 in 0..k {
                if pending[b * k + c2] {
                    pending[nb * k + c2] = true;
                    worklist.push((nb, c2));
                } else {
                    let smaller = if part.size(nb) <= part.size(b) { nb } else { b };
                    pending[smaller * k + c2] = true;
                    worklist.push((smaller, c2));
                }
            }
        }
    }

    let blocks = part.block_count();
    let mut delta = Vec::with_capacity(blocks * k);
    let mut finals = Vec::with_capacity(blocks);
    for b in 0..blocks {
        let rep = part.members(b)[0];
        finals.push(d.is_final(rep));
        delta.extend((0..k).map(|c| part.block_of[d.next(rep, c)]));
    }
    let start = part.block_of[d.start()];
    Dfa::from_raw(d.alphabet().clone(), start, finals, delta).canonical()
}

/// Refinable partition: blocks are contiguous ranges of `elems`, and the
/// marked members of a block sit at the front of its range.
struct Partition {
    elems: Vec<usize>,
    loc: Vec<usize>,
    block_of: Vec<usize>,
    first: Vec<usize>,
    end: Vec<usize>,
    marked_end: Vec<usize>,
}

impl Partition {
    fn new(n: usize, class: impl Fn(usize) -> bool) -> Self {
        let mut elems: Vec<usize> = (0..n).filter(|&q| class(q)).collect();
        let split = elems.len();
        elems.extend((0..n).filter(|&q| !class(q)));
        let mut first = Vec::new();
        let mut end = Vec::new();
        for (lo, hi) in [(0, split), (split, n)] {
            if lo < hi {
                first.push(lo);
                end.push(hi);
            }
        }
        let mut loc = vec![0; n];
        let mut block_of = vec![0; n];
        for (i, &q) in elems.iter().enumerate() {
            loc[q] = i;
            block_of[q] = first.iter().rposition(|&f| f <= i).unwrap();
        }
        let marked_end = first.clone();
        Partition {
            elems,
            loc,
            block_of,
            first,
            end,
            marked_end,
        }
    }

    fn block_count(&self) -> usize {
        self.first.len()
    }

    fn size(&self, b: usize) -> usize {
        self.end[b] - self.first[b]
    }

    fn members(&self, b: usize) -> &[usize] {
        &self.elems[self.first[b]..self.end[b]]
    }

    /// Marks `q`; returns true when it is the first mark in its block.
    fn mark(&mut self, q: usize) -> bool {
        let b = self.block_of[q];
        let i = self.loc[q];
        let m = self.marked_end[b];
        if i < m {
            return false;
        }
        let other = self.elems[m];
        self.elems.swap(i, m);
        self.loc[other] = i;
        self.loc[q] = m;
        self.marked_end[b] = m + 1;
        m == self.first[b]
    }

    /// Splits the marked part of `b` off into a new block, unless every
    /// member is marked. Clears the marks either way.
    fn split(&mut self, b: usize) -> Option<usize> {
        let m = self.marked_end[b];
        if m == self.end[b] {
            self.marked_end[b] = self.first[b];
            return None;
        }
        let nb = self.first.len();
        self.first.push(self.first[b]);
        self.end.push(m);
        self.marked_end.push(self.first[b]);
        self.first[b] = m;
        self.marked_end[b] = m;
        for i in self.first[nb]..self.end[nb] {
            self.block_of[self.elems[i]] = nb;
        }
        Some(nb)
    }
}
