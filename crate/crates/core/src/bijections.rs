//! The bridge/lattice-path correspondence and the cyclic-shift map from
//! (graphical bridge, shift) pairs onto bridges with `sigma = 0 mod n`.

use crate::bridges::{
    enumerate_graphical_bridges, irreducible_decomposition, is_graphical, Bridge,
};
use crate::error::{Error, Result};
use crate::trees::{LatticePath, Step};

fn step_of(d: i8) -> Step {
    if d > 0 {
        Step::Up
    } else {
        Step::Right
    }
}

fn increment_of(s: Step) -> i8 {
    match s {
        Step::Up => 1,
        Step::Right => -1,
    }
}

/// Maps a bridge of length `2n` to a lattice path `(0,0) -> (n,n)`.
///
/// The odd increments form the first `n` steps and the even increments the
/// last `n`, with `+1` read as up and `-1` as right. Also returns `l`, the
/// number of `+1` odd increments; the path area is `sigma(B) + l n`.
pub fn bridge_to_path(bridge: &Bridge) -> (LatticePath, usize) {
    let inc = bridge.increments();
    let odd = inc.iter().step_by(2);
    let even = inc.iter().skip(1).step_by(2);
    let ell = odd.clone().filter(|&&d| d > 0).count();
    let steps = odd.chain(even).map(|&d| step_of(d)).collect();
    (LatticePath::new(steps), ell)
}

/// Inverse of [`bridge_to_path`].
pub fn path_to_bridge(path: &LatticePath) -> Result<Bridge> {
    let (rights, ups) = path.end();
    if rights != ups {
        return Err(Error::PathEndpoint {
            expected: path.steps().len() / 2,
            ups,
            rights,
        });
    }
    let n = ups;
    let (first, second) = path.steps().split_at(n);
    let inc = first
        .iter()
        .zip(second)
        .flat_map(|(&a, &b)| [increment_of(a), increment_of(b)])
        .collect();
    Ok(Bridge::from_trusted(inc))
}

/// Length `2j` of the first irreducible part of a graphical bridge.
pub fn first_irreducible_length(bridge: &Bridge) -> Result<usize> {
    Ok(irreducible_decomposition(bridge)?
        .first()
        .map_or(0, |p| p.increments().len()))
}

/// A graphical bridge with a shift `0 <= i < j`, where `2j` is the length of
/// its first irreducible part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedPair {
    bridge: Bridge,
    shift: usize,
}

impl ShiftedPair {
    pub fn new(bridge: Bridge, shift: usize) -> Result<Self> {
        if !is_graphical(&bridge) {
            return Err(Error::NotGraphical);
        }
        let limit = first_irreducible_length(&bridge)? / 2;
        if shift >= limit.max(1) {
            return Err(Error::ShiftTooLarge { shift, limit });
        }
        Ok(Self { bridge, shift })
    }

    pub fn bridge(&self) -> &Bridge {
        &self.bridge
    }

    pub fn shift(&self) -> usize {
        self.shift
    }
}

/// Cyclic rotation moving the first `by` increments to the end.
fn rotate_left(inc: &[i8], by: usize) -> Vec<i8> {
    let mut out = inc.to_vec();
    if !out.is_empty() {
        out.rotate_left(by % inc.len());
    }
    out
}

/// Cyclic shift of `pair.bridge` by `2 * pair.shift`: the first
/// `2 * pair.shift` increments, all inside the first irreducible part, move
/// to the end, so the walk picture slides left and wraps.
pub fn phi_shift(pair: &ShiftedPair) -> Bridge {
    Bridge::from_trusted(rotate_left(pair.bridge.increments(), 2 * pair.shift))
}

/// Every legal pair at half-length `n`; there are `2 T_n` of them.
pub fn all_shifted_pairs(n: usize) -> Result<Vec<ShiftedPair>> {
    let mut out = Vec::new();
    for b in enumerate_graphical_bridges(n)? {
        let j = first_irreducible_length(&b)? / 2;
        for i in 0..j {
            out.push(ShiftedPair {
                bridge: b.clone(),
                shift: i,
            });
        }
    }
    Ok(out)
}

/// The unique pair that [`phi_shift`] sends to `target`.
///
/// Scans the `n` even rotations of `target` for graphical bridges whose
/// first irreducible part is longer than twice the rotation. Any count other
/// than one is reported as [`Error::PreimageCount`].
pub fn phi_inverse(target: &Bridge) -> Result<ShiftedPair> {
    let n = target.half_len();
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let sigma = target.sigma();
    if sigma.rem_euclid(n as i64) != 0 {
        return Err(Error::AreaNotDivisible { sigma, n });
    }
    let len = 2 * n;
    let mut found = Vec::new();
    for shift in 0..n {
        let candidate = Bridge::from_trusted(rotate_left(target.increments(), len - 2 * shift));
        if !is_graphical(&candidate) {
            continue;
        }
        if shift < first_irreducible_length(&candidate)? / 2 {
            found.push(ShiftedPair {
                bridge: candidate,
                shift,
            });
        }
    }
    match found.len() {
        1 => Ok(found.pop().expect("one element")),
        k => Err(Error::PreimageCount(k)),
    }
}
