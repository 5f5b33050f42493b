//! Explicit paths in the basis pair graph of a sparse paving matroid.
//!
//! The walk first moves elements between the third block and the bases until
//! the third blocks agree, then works inside the deletion of that common third
//! block, where the two bases partition what is left.

use super::{BasisPairVertex, ExchangeError};
use crate::matroid::SparsePavingMatroid;
use crate::set::ElementSet;

struct Walk<'a> {
    m: &'a SparsePavingMatroid,
    cur: [ElementSet; 3],
    path: Vec<BasisPairVertex>,
}

impl Walk<'_> {
    fn is_basis(&self, s: ElementSet) -> bool {
        self.m.is_basis(s)
    }

    /// Moves `x` from block `p` to block `q` and `y` from `q` to `p`.
    fn transpose(&mut self, p: usize, q: usize, x: usize, y: usize) -> Result<(), ExchangeError> {
        let mut next = self.cur;
        if !next[p].contains(x) || !next[q].contains(y) {
            return Err(ExchangeError::Stuck("transposed elements are not in their blocks"));
        }
        next[p] = next[p].exchange(x, y);
        next[q] = next[q].exchange(y, x);
        if !self.is_basis(next[0]) || !self.is_basis(next[1]) {
            return Err(ExchangeError::Stuck("transposition leaves a non-basis"));
        }
        self.cur = next;
        self.path.push(BasisPairVertex::from_blocks_unchecked(next));
        Ok(())
    }

    /// Both `(A_p - x) + y` and `(A_q - y) + x` are bases, where blocks `p` and `q`
    /// are the two bases.
    fn symmetric_ok(&self, p: usize, q: usize, x: usize, y: usize) -> bool {
        self.is_basis(self.cur[p].exchange(x, y)) && self.is_basis(self.cur[q].exchange(y, x))
    }

    fn align_rest(&mut self, target: ElementSet) -> Result<(), ExchangeError> {
        while self.cur[2].distance(target) >= 4 {
            let incoming = target - self.cur[2];
            let outgoing = self.cur[2] - target;
            let block = (0..2)
                .find(|&j| !(self.cur[j] & incoming).is_empty())
                .ok_or(ExchangeError::Stuck("third-block target not covered by the bases"))?;
            let a1 = (self.cur[block] & incoming).first().expect("nonempty");
            // cl(A_j - a1) is a hyperplane meeting A3 - B3 in at most one element
            let a3 = outgoing
                .iter()
                .find(|&e| self.is_basis(self.cur[block].exchange(a1, e)))
                .ok_or(ExchangeError::Stuck("no element of A3 - B3 completes the basis"))?;
            self.transpose(block, 2, a1, a3)?;
        }
        if self.cur[2] == target {
            return Ok(());
        }
        let a3 = (self.cur[2] - target).first().expect("distance 2");
        let b3 = (target - self.cur[2]).first().expect("distance 2");
        let block = if self.cur[0].contains(b3) { 0 } else { 1 };
        if self.is_basis(self.cur[block].exchange(b3, a3)) {
            return self.transpose(block, 2, b3, a3);
        }
        // (A_j - b3) + a3 is a circuit-hyperplane: perturb A_j by one symmetric
        // exchange with the other basis, after which b3 and a3 can be swapped.
        let other = 1 - block;
        let detour = (self.cur[block].without(b3))
            .iter()
            .flat_map(|a1| self.cur[other].iter().map(move |a2| (a1, a2)))
            .find(|&(a1, a2)| self.symmetric_ok(block, other, a1, a2))
            .ok_or(ExchangeError::Stuck("no symmetric exchange for the detour"))?;
        self.transpose(block, other, detour.0, detour.1)?;
        self.transpose(block, 2, b3, a3)
    }

    /// Third blocks already agree, so `A1 ⊔ A2 = B1 ⊔ B2`.
    fn align_bases(&mut self, target: ElementSet) -> Result<(), ExchangeError> {
        loop {
            let ahead = self.cur[0] - target;
            let behind = target - self.cur[0];
            match ahead.len() {
                0 => return Ok(()),
                1 => {
                    // the target vertex is adjacent
                    let x = ahead.first().expect("one element");
                    let y = behind.first().expect("one element");
                    self.transpose(0, 1, x, y)?;
                }
                2 => return self.finish_at_distance_four(ahead, behind, target),
                _ => {
                    let x = ahead.first().expect("nonempty");
                    let witnesses = self.m.swap_witnesses(self.cur[0], self.cur[1], x, behind)?;
                    let y = witnesses
                        .first()
                        .ok_or(ExchangeError::Stuck("swap lemma produced no witness"))?;
                    self.transpose(0, 1, x, y)?;
                }
            }
        }
    }

    fn finish_at_distance_four(
        &mut self,
        ahead: ElementSet,
        behind: ElementSet,
        target: ElementSet,
    ) -> Result<(), ExchangeError> {
        let b = ahead.to_vec();
        let a = behind.to_vec();
        // exchanges (a)-(d), lowest incoming element first
        for &ai in &a {
            for &bi in &b {
                if self.symmetric_ok(0, 1, bi, ai) {
                    self.transpose(0, 1, bi, ai)?;
                    return self.align_bases(target);
                }
            }
        }
        // Every pair holds a circuit-hyperplane; relabel so that (B1 - b1) + a1 is one.
        let (b1, b2, a1, a2) = [(b[0], b[1]), (b[1], b[0])]
            .into_iter()
            .flat_map(|(b1, b2)| [(a[0], a[1]), (a[1], a[0])].map(|(a1, a2)| (b1, b2, a1, a2)))
            .find(|&(b1, _, a1, _)| !self.is_basis(self.cur[0].exchange(b1, a1)))
            .ok_or(ExchangeError::Stuck("no circuit-hyperplane among exchanges (a)-(d)"))?;
        let x = (self.cur[0] & target)
            .first()
            .ok_or(ExchangeError::Stuck("rank too small for four circuit-hyperplanes"))?;
        // (e), then (f), which lands next to the target
        self.transpose(0, 1, x, a1)?;
        self.transpose(0, 1, b2, a2)?;
        self.transpose(0, 1, b1, x)?;
        debug_assert_eq!(self.cur[0], target);
        Ok(())
    }
}

/// A path `u = w0, w1, ..., wt = v` in the basis pair graph of `m`, every step
/// transposing one element between two blocks. The length is at most `n + 2`.
pub fn bpg_path(
    m: &SparsePavingMatroid,
    u: &BasisPairVertex,
    v: &BasisPairVertex,
) -> Result<Vec<BasisPairVertex>, ExchangeError> {
    if u.ground() != m.ground() || v.ground() != m.ground() {
        return Err(ExchangeError::GroundSetMismatch);
    }
    let u = BasisPairVertex::from_blocks(m, u.blocks())?;
    let v = BasisPairVertex::from_blocks(m, v.blocks())?;
    let mut walk = Walk {
        m,
        cur: u.blocks(),
        path: vec![u],
    };
    walk.align_rest(v.rest())?;
    walk.align_bases(v.first())?;
    if walk.cur != v.blocks() {
        return Err(ExchangeError::Stuck("walk ended away from the target"));
    }
    Ok(walk.path)
}
