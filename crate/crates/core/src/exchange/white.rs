//! Symmetric-exchange walks between multisets (and tuples) of bases with the
//! same multiset union.
//!
//! Both endpoints are walked towards each other. Each round picks the closest
//! pair `(A1, B1)` across the two sides and moves the side whose `B1 - A1`
//! carries the smaller multiplicity, shrinking `|A1 △ B1|`. Once the pair
//! meets, it is frozen and the rest of the collection is handled the same way.

use super::{bpg_path, BasisCollection, BasisPairVertex, ExchangeError, ExchangeMove, Multiset};
use crate::matroid::SparsePavingMatroid;
use crate::set::ElementSet;

/// A move on slot indices (stable positions), before canonical renumbering.
#[derive(Debug, Clone, Copy)]
struct SlotMove {
    i: usize,
    j: usize,
    x: usize,
    y: usize,
}

struct Side<'a> {
    m: &'a SparsePavingMatroid,
    slots: Vec<ElementSet>,
    moves: Vec<SlotMove>,
}

impl Side<'_> {
    fn basis(&self, s: ElementSet) -> bool {
        self.m.is_basis(s)
    }

    /// Slot `i` gives `x` to slot `j` and receives `y`.
    fn exchange(&mut self, i: usize, j: usize, x: usize, y: usize) -> Result<(), ExchangeError> {
        let (bi, bj) = (self.slots[i], self.slots[j]);
        if !(bi - bj).contains(x) || !(bj - bi).contains(y) {
            return Err(ExchangeError::Stuck("exchange elements are not in the differences"));
        }
        let (ni, nj) = (bi.exchange(x, y), bj.exchange(y, x));
        if !self.basis(ni) || !self.basis(nj) {
            return Err(ExchangeError::Stuck("exchange leaves a non-basis"));
        }
        self.slots[i] = ni;
        self.slots[j] = nj;
        self.moves.push(SlotMove { i, j, x, y });
        Ok(())
    }

    fn symmetric_ok(&self, i: usize, j: usize, x: usize, y: usize) -> bool {
        self.basis(self.slots[i].exchange(x, y)) && self.basis(self.slots[j].exchange(y, x))
    }

    /// Finds `y ∈ slots[j] - slots[i]` completing a symmetric exchange with `x`.
    fn partner(&self, i: usize, j: usize, x: usize) -> Option<usize> {
        (self.slots[j] - self.slots[i])
            .iter()
            .find(|&y| self.symmetric_ok(i, j, x, y))
    }

    /// Moves the member in slot `b1` strictly closer to `a1`. `active` lists the
    /// slots still in play on this side.
    fn close_in(&mut self, active: &[usize], b1: usize, a1: ElementSet) -> Result<(), ExchangeError> {
        let toward = a1 - self.slots[b1];
        let away = self.slots[b1] - a1;
        // some other member holds more of A1 - B1 than of B1 - A1
        let b2 = active
            .iter()
            .copied()
            .filter(|&h| h != b1)
            .find(|&h| (self.slots[h] & toward).len() > (self.slots[h] & away).len())
            .ok_or(ExchangeError::Stuck("no member leans towards A1"))?;
        match toward.len() {
            0 => Ok(()),
            1 => self.close_in_single(active, b1, b2, a1),
            2 => self.close_in_pair(b1, b2, a1),
            _ => self.close_in_wide(b1, b2, a1),
        }
    }

    /// `|A1 - B1| ≥ 3`.
    fn close_in_wide(&mut self, b1: usize, b2: usize, a1: ElementSet) -> Result<(), ExchangeError> {
        let (set1, set2) = (self.slots[b1], self.slots[b2]);
        let toward = a1 - set1;
        let away = set1 - a1;
        let held = set2 & toward;
        if (set2 & away).is_empty() {
            let a = held.first().expect("B2 leans towards A1");
            let w = self.m.swap_witnesses(set2, set1, a, away)?;
            let bh = w.first().ok_or(ExchangeError::Stuck("swap lemma gave no witness"))?;
            return self.exchange(b2, b1, a, bh);
        }
        if held.len() >= 3 {
            let b = (away - set2).first().expect("B2 misses part of B1 - A1");
            let w = self.m.swap_witnesses(set1, set2, b, held)?;
            let ah = w.first().ok_or(ExchangeError::Stuck("swap lemma gave no witness"))?;
            return self.exchange(b1, b2, b, ah);
        }
        // B2 ∩ (A1 △ B1) = {a1, a2, b3}
        let a = held.to_vec();
        let b: Vec<_> = (away - set2).iter().take(2).collect();
        if b.len() < 2 || a.len() != 2 {
            return Err(ExchangeError::Stuck("unexpected overlap pattern with B2"));
        }
        for &bi in &b {
            for &ai in &a {
                if self.symmetric_ok(b1, b2, bi, ai) {
                    return self.exchange(b1, b2, bi, ai);
                }
            }
        }
        // relabel so that (B1-b1)+a1, (B2-a2)+b1, (B2-a1)+b2, (B1-b2)+a2 are circuit-hyperplanes
        let (bb1, bb2, aa1) = labelings(b[0], b[1], a[0], a[1])
            .find(|&(b_1, b_2, a_1, a_2)| {
                !self.basis(set1.exchange(b_1, a_1))
                    && !self.basis(set2.exchange(a_2, b_1))
                    && !self.basis(set2.exchange(a_1, b_2))
                    && !self.basis(set1.exchange(b_2, a_2))
            })
            .map(|(b_1, b_2, a_1, _)| (b_1, b_2, a_1))
            .ok_or(ExchangeError::Stuck("circuit-hyperplane pattern not found"))?;
        let y = (set2 - (a1 | set1))
            .first()
            .ok_or(ExchangeError::Stuck("B2 has no element outside A1 ∪ B1"))?;
        self.exchange(b1, b2, bb1, y)?;
        self.exchange(b1, b2, bb2, aa1)
    }

    /// `|A1 - B1| = 2`.
    fn close_in_pair(&mut self, b1: usize, b2: usize, a1: ElementSet) -> Result<(), ExchangeError> {
        let (set1, set2) = (self.slots[b1], self.slots[b2]);
        let toward = a1 - set1;
        let away = set1 - a1;
        if (set2 & away).is_empty() {
            let a = (set2 & toward).first().expect("B2 leans towards A1");
            for bi in away.iter() {
                if self.symmetric_ok(b1, b2, bi, a) {
                    return self.exchange(b1, b2, bi, a);
                }
            }
            let (bb1, bb2) = pairs(away)
                .find(|&(u, v)| !self.basis(set1.exchange(u, a)) && !self.basis(set2.exchange(a, v)))
                .ok_or(ExchangeError::Stuck("circuit-hyperplane pattern not found"))?;
            let z = (set2 - a1)
                .iter()
                .find(|&z| self.basis(set2.exchange(z, bb1)))
                .ok_or(ExchangeError::Stuck("neither candidate completes B2"))?;
            self.exchange(b1, b2, bb1, z)?;
            return self.exchange(b1, b2, bb2, a);
        }
        // B2 ∩ (B1 - A1) = {b1} and B2 ⊇ A1 - B1
        let bb2 = (away - set2).first().expect("one element of B1 - A1 outside B2");
        for ai in toward.iter() {
            if self.symmetric_ok(b1, b2, bb2, ai) {
                return self.exchange(b1, b2, bb2, ai);
            }
        }
        let (x1, x2) = pairs(toward)
            .find(|&(u, v)| !self.basis(set1.exchange(bb2, u)) && !self.basis(set2.exchange(v, bb2)))
            .ok_or(ExchangeError::Stuck("circuit-hyperplane pattern not found"))?;
        let x = ((a1 & set1) - set2)
            .iter()
            .find(|&x| self.basis(set2.exchange(x1, x)))
            .ok_or(ExchangeError::Stuck("neither candidate completes B2"))?;
        self.exchange(b2, b1, x1, x)?;
        self.exchange(b1, b2, bb2, x2)
    }

    /// `|A1 - B1| = 1`.
    fn close_in_single(&mut self, active: &[usize], b1: usize, b2: usize, a1: ElementSet) -> Result<(), ExchangeError> {
        let a = (a1 - self.slots[b1]).first().expect("one element");
        let b = (self.slots[b1] - a1).first().expect("one element");
        let rest = self.slots[b2].without(a);
        if self.basis(rest.with(b)) {
            return self.exchange(b1, b2, b, a);
        }
        // rest + b is a circuit-hyperplane from here on
        let others: Vec<usize> = active.iter().copied().filter(|&h| h != b1 && h != b2).collect();
        loop {
            // each other member contains b or all of rest
            for &h in &others {
                let bh = self.slots[h];
                if bh.contains(b) {
                    continue;
                }
                for y in (rest - bh).iter() {
                    if let Some(z) = self.partner(b2, h, y) {
                        self.exchange(b2, h, y, z)?;
                        return self.exchange(b1, b2, b, a);
                    }
                }
            }
            // whenever b is in a member, so is a
            let only_b = others
                .iter()
                .copied()
                .find(|&h| self.slots[h].contains(b) && !self.slots[h].contains(a));
            if let Some(h) = only_b {
                let h_prime = others
                    .iter()
                    .copied()
                    .find(|&g| self.slots[g].contains(a) && !self.slots[g].contains(b))
                    .ok_or(ExchangeError::Stuck("multiplicity of a below that of b"))?;
                let z = self
                    .partner(h_prime, h, a)
                    .ok_or(ExchangeError::Stuck("no exchange partner for a"))?;
                if z == b {
                    return Err(ExchangeError::Stuck("exchange partner collides with b"));
                }
                self.exchange(h_prime, h, a, z)?;
                continue;
            }
            // members holding both a and b are next to B2
            for &h in &others {
                let bh = self.slots[h];
                if bh.contains(a) && bh.contains(b) && bh.distance(self.slots[b2]) >= 4 {
                    let x = (bh.without(b) - self.slots[b2]).first().expect("distance at least 4");
                    let y = self
                        .partner(h, b2, x)
                        .ok_or(ExchangeError::Stuck("no exchange partner in B2"))?;
                    self.exchange(h, b2, x, y)?;
                    return self.exchange(b1, b2, b, a);
                }
            }
            return Err(ExchangeError::Stuck("statements (A)-(D) all hold"));
        }
    }
}

/// The four relabelings `(b1, b2, a1, a2)` of two pairs, identity first.
fn labelings(b: usize, b_: usize, a: usize, a_: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    [(b, b_, a, a_), (b, b_, a_, a), (b_, b, a, a_), (b_, b, a_, a)].into_iter()
}

/// Both orderings of a two-element set.
fn pairs(set: ElementSet) -> impl Iterator<Item = (usize, usize)> {
    let v = set.to_vec();
    let (p, q) = (v[0], v[1]);
    [(p, q), (q, p)].into_iter()
}

/// Runs the two-sided walk and returns moves on the slots of `from`, together
/// with the final slot contents.
fn slot_walk(
    m: &SparsePavingMatroid,
    from: &[ElementSet],
    to: &[ElementSet],
) -> Result<(Vec<SlotMove>, Vec<ElementSet>), ExchangeError> {
    let k = from.len();
    let mut fwd = Side {
        m,
        slots: from.to_vec(),
        moves: Vec::new(),
    };
    let mut bwd = Side {
        m,
        slots: to.to_vec(),
        moves: Vec::new(),
    };
    let mut active_f: Vec<usize> = (0..k).collect();
    let mut active_t: Vec<usize> = (0..k).collect();
    // to-slot -> from-slot
    let mut pairing = vec![usize::MAX; k];

    while !active_f.is_empty() {
        let (pf, pt) = closest_pair(&fwd.slots, &active_f, &bwd.slots, &active_t);
        let (hf, jt) = (active_f[pf], active_t[pt]);
        let (set_f, set_t) = (fwd.slots[hf], bwd.slots[jt]);
        if set_f == set_t {
            pairing[jt] = hf;
            active_f.remove(pf);
            active_t.remove(pt);
            continue;
        }
        if active_f.len() == 1 {
            return Err(ExchangeError::Stuck("last members differ"));
        }
        let mut remaining = Multiset::new(m.n());
        for &h in &active_f {
            remaining.add_set(fwd.slots[h]);
        }
        if remaining.weight(set_t - set_f) >= remaining.weight(set_f - set_t) {
            fwd.close_in(&active_f, hf, set_t)?;
        } else {
            bwd.close_in(&active_t, jt, set_f)?;
        }
    }

    let mut moves = fwd.moves;
    moves.extend(bwd.moves.iter().rev().map(|mv| SlotMove {
        i: pairing[mv.i],
        j: pairing[mv.j],
        x: mv.y,
        y: mv.x,
    }));
    let mut slots = from.to_vec();
    for mv in &moves {
        slots[mv.i] = slots[mv.i].exchange(mv.x, mv.y);
        slots[mv.j] = slots[mv.j].exchange(mv.y, mv.x);
    }
    Ok((moves, slots))
}

/// Indices into the two active lists minimizing the symmetric difference,
/// lowest indices first on ties.
fn closest_pair(f: &[ElementSet], active_f: &[usize], t: &[ElementSet], active_t: &[usize]) -> (usize, usize) {
    let mut best = (usize::MAX, 0, 0);
    for (pf, &h) in active_f.iter().enumerate() {
        for (pt, &j) in active_t.iter().enumerate() {
            let d = f[h].distance(t[j]);
            if d < best.0 {
                best = (d, pf, pt);
            }
        }
    }
    (best.1, best.2)
}

fn check_endpoints(m: &SparsePavingMatroid, from: &BasisCollection, to: &BasisCollection) -> Result<(), ExchangeError> {
    if from.k() != to.k() {
        return Err(ExchangeError::CountMismatch {
            from: from.k(),
            to: to.k(),
        });
    }
    for &b in from.members().iter().chain(to.members()) {
        if !m.is_basis(b) {
            return Err(ExchangeError::NotBases(b));
        }
    }
    if !from.union().same_as(to.union()) {
        return Err(ExchangeError::UnionMismatch);
    }
    Ok(())
}

/// Symmetric exchanges turning the multiset `from` into `to`. Move indices
/// refer to the members sorted by encoding at the time of the move.
pub fn white_moves(
    m: &SparsePavingMatroid,
    from: &BasisCollection,
    to: &BasisCollection,
) -> Result<Vec<ExchangeMove>, ExchangeError> {
    check_endpoints(m, from, to)?;
    if from.k() == 1 {
        return Ok(Vec::new());
    }
    let (slot_moves, _) = slot_walk(m, from.members(), to.members())?;
    let mut slots = from.members().to_vec();
    let mut out = Vec::with_capacity(slot_moves.len());
    for mv in slot_moves {
        let mut order: Vec<usize> = (0..slots.len()).collect();
        order.sort_by_key(|&s| (slots[s], s));
        let mut canon = vec![0; slots.len()];
        for (c, &s) in order.iter().enumerate() {
            canon[s] = c;
        }
        out.push(ExchangeMove::normalized(canon[mv.i], canon[mv.j], mv.x, mv.y));
        slots[mv.i] = slots[mv.i].exchange(mv.x, mv.y);
        slots[mv.j] = slots[mv.j].exchange(mv.y, mv.x);
    }
    Ok(out)
}

/// Symmetric exchanges on positions turning the tuple `from` into `to`
/// exactly. The multisets are matched first; each transposition of the
/// residual permutation is then carried out by a basis pair path in the minor
/// obtained by restricting to the two members' union and contracting their
/// intersection.
pub fn white2_path(
    m: &SparsePavingMatroid,
    from: &BasisCollection,
    to: &BasisCollection,
) -> Result<Vec<ExchangeMove>, ExchangeError> {
    check_endpoints(m, from, to)?;
    let target = to.members();
    let (slot_moves, mut cur) = if from.k() == 1 {
        (Vec::new(), from.members().to_vec())
    } else {
        slot_walk(m, from.members(), target)?
    };
    let mut moves: Vec<ExchangeMove> = slot_moves
        .into_iter()
        .map(|mv| ExchangeMove::normalized(mv.i, mv.j, mv.x, mv.y))
        .collect();

    for p in 0..cur.len() {
        if cur[p] == target[p] {
            continue;
        }
        let q = (p + 1..cur.len())
            .filter(|&q| cur[q] == target[p])
            .min_by_key(|&q| cur[q] == target[q])
            .ok_or(ExchangeError::Stuck("tuple contents do not match the target"))?;
        for (x, y) in transposition(m, cur[p], cur[q])? {
            moves.push(ExchangeMove::normalized(p, q, x, y));
        }
        cur.swap(p, q);
    }
    Ok(moves)
}

/// Exchanges `(x, y)` that swap the contents of two positions holding `ap`
/// and `aq`: in each, the position of `ap` gives `x` and receives `y`.
fn transposition(
    m: &SparsePavingMatroid,
    ap: ElementSet,
    aq: ElementSet,
) -> Result<Vec<(usize, usize)>, ExchangeError> {
    let common = ap & aq;
    let minor = m.restrict_contract(ap | aq, common)?;
    let mut local_of = vec![usize::MAX; m.n()];
    for (local, &global) in minor.labels.iter().enumerate() {
        local_of[global] = local;
    }
    let localize = |s: ElementSet| -> ElementSet { s.iter().map(|e| local_of[e]).collect() };
    let (only_p, only_q) = (localize(ap - aq), localize(aq - ap));
    let u = BasisPairVertex::new(&minor.matroid, only_p, only_q)?;
    let v = BasisPairVertex::new(&minor.matroid, only_q, only_p)?;
    let path = bpg_path(&minor.matroid, &u, &v)?;
    Ok(path
        .windows(2)
        .map(|w| {
            let x = (w[0].first() - w[1].first()).first().expect("adjacent vertices");
            let y = (w[1].first() - w[0].first()).first().expect("adjacent vertices");
            (minor.labels[x], minor.labels[y])
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::{verify_moves, CollectionKind};

    fn s<const K: usize>(e: [usize; K]) -> ElementSet {
        ElementSet::from(e)
    }

    fn p44() -> SparsePavingMatroid {
        SparsePavingMatroid::new(4, 2, vec![s([0, 3]), s([1, 2])]).unwrap()
    }

    #[test]
    fn white_examples() {
        let m = p44();
        let from = BasisCollection::multiset(&m, vec![s([0, 1]), s([2, 3])]).unwrap();
        let to = BasisCollection::multiset(&m, vec![s([0, 2]), s([1, 3])]).unwrap();
        let moves = white_moves(&m, &from, &to).unwrap();
        assert_eq!(moves.len(), 1);
        assert_eq!((moves[0].x.min(moves[0].y), moves[0].x.max(moves[0].y)), (1, 2));
        verify_moves(&m, CollectionKind::Multiset, from.members(), &moves, to.members()).unwrap();
        assert!(white_moves(&m, &from, &from).unwrap().is_empty());

        let other = BasisCollection::multiset(&m, vec![s([0, 1]), s([0, 2])]).unwrap();
        assert_eq!(white_moves(&m, &from, &other), Err(ExchangeError::UnionMismatch));
    }

    #[test]
    fn white2_examples() {
        let m = p44();
        let from = BasisCollection::tuple(&m, vec![s([0, 1]), s([2, 3])]).unwrap();
        let to = BasisCollection::tuple(&m, vec![s([2, 3]), s([0, 1])]).unwrap();
        let moves = white2_path(&m, &from, &to).unwrap();
        assert_eq!(moves.len(), 2);
        verify_moves(&m, CollectionKind::Tuple, from.members(), &moves, to.members()).unwrap();
        assert!(white2_path(&m, &from, &from).unwrap().is_empty());
        let same = BasisCollection::tuple(&m, vec![s([0, 1]), s([3, 2])]).unwrap();
        assert!(white2_path(&m, &from, &same).unwrap().is_empty());
    }

    #[test]
    fn single_member_is_trivial() {
        let m = p44();
        let a = BasisCollection::multiset(&m, vec![s([0, 1])]).unwrap();
        assert!(white_moves(&m, &a, &a).unwrap().is_empty());
    }

    fn side(m: &SparsePavingMatroid, slots: Vec<ElementSet>) -> Side<'_> {
        Side {
            m,
            slots,
            moves: Vec::new(),
        }
    }

    #[test]
    fn wide_case_with_four_circuit_hyperplanes() {
        // b1..b3 = 0..2, x = 3,4, a1..a3 = 5..7, y = 8,9
        let chs = vec![
            s([1, 2, 3, 4, 5]),
            s([0, 2, 5, 8, 9]),
            s([1, 2, 6, 8, 9]),
            s([0, 2, 3, 4, 6]),
        ];
        let m = SparsePavingMatroid::new(10, 5, chs).unwrap();
        let a1 = s([3, 4, 5, 6, 7]);
        let mut w = side(&m, vec![s([0, 1, 2, 3, 4]), s([2, 5, 6, 8, 9])]);
        w.close_in(&[0, 1], 0, a1).unwrap();
        assert_eq!(w.moves.len(), 2);
        assert_eq!(w.slots[0].distance(a1), 4);
    }

    #[test]
    fn pair_case_sharing_one_element() {
        // b1 = 0, b2 = 1, x = 2,3, a1 = 4, a2 = 5, w = 6
        let m = SparsePavingMatroid::new(7, 4, vec![s([0, 2, 3, 4]), s([0, 1, 4, 6])]).unwrap();
        let a1 = s([2, 3, 4, 5]);
        let mut w = side(&m, vec![s([0, 1, 2, 3]), s([0, 4, 5, 6])]);
        w.close_in(&[0, 1], 0, a1).unwrap();
        assert_eq!(w.moves.len(), 2);
        assert_eq!(w.slots[0].distance(a1), 2);
    }
}
