use std::sync::OnceLock;

use rug::Integer;

use super::{BigCount, IndexKind};
use crate::graph::{AttachmentSequence, AttachmentType};

/// Conditional counts over one hexagon with a marked entry vertex (position
/// 0) and exit vertex (position `d`).
///
/// `entry(x, y)` is the number of matchings (resp. independent sets) of the
/// hexagon in which the entry vertex has status `x` and the exit vertex has
/// status `y`, where status 1 means covered by a hexagon edge (resp. in the
/// set).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    entries: [[u32; 2]; 2],
}

impl TransferMatrix {
    pub fn entry(&self, entry_status: usize, exit_status: usize) -> u32 {
        self.entries[entry_status][exit_status]
    }

    pub fn entries(&self) -> [[u32; 2]; 2] {
        self.entries
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().flatten().sum()
    }

    pub fn row_sum(&self, entry_status: usize) -> u32 {
        self.entries[entry_status].iter().sum()
    }

    fn compute(distance: usize, kind: IndexKind) -> Self {
        let mut entries = [[0u32; 2]; 2];
        match kind {
            IndexKind::Hosoya => {
                // Edge i joins vertices i and i + 1 (mod 6).
                for subset in 0u32..64 {
                    let mut covered = 0u32;
                    let mut valid = true;
                    for i in 0..6 {
                        if subset >> i & 1 == 1 {
                            let ends = 1 << i | 1 << ((i + 1) % 6);
                            valid &= covered & ends == 0;
                            covered |= ends;
                        }
                    }
                    if valid {
                        entries[(covered & 1) as usize][(covered >> distance & 1) as usize] += 1;
                    }
                }
            }
            IndexKind::MerrifieldSimmons => {
                for subset in 0u32..64 {
                    let rotated = (subset << 1 | subset >> 5) & 0x3f;
                    if subset & rotated == 0 {
                        entries[(subset & 1) as usize][(subset >> distance & 1) as usize] += 1;
                    }
                }
            }
        }
        Self { entries }
    }
}

fn slot(d: AttachmentType, kind: IndexKind) -> usize {
    let k = match kind {
        IndexKind::Hosoya => 0,
        IndexKind::MerrifieldSimmons => 3,
    };
    k + d.distance() - 1
}

/// Transfer matrix of a hexagon whose cut vertices sit at cyclic distance
/// `d.distance()`. The six matrices are enumerated once and shared.
pub fn hexagon_transfer(d: AttachmentType, kind: IndexKind) -> &'static TransferMatrix {
    static CACHE: OnceLock<[TransferMatrix; 6]> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        let mut all = [TransferMatrix { entries: [[0; 2]; 2] }; 6];
        for kind in IndexKind::ALL {
            for d in AttachmentType::ALL {
                all[slot(d, kind)] = TransferMatrix::compute(d.distance(), kind);
            }
        }
        all
    });
    &cache[slot(d, kind)]
}

/// Weight of the left part when the next hexagon's entry (the shared cut
/// vertex) has status `status` on the hexagon side.
///
/// For matchings the shared vertex may be covered by at most one side; for
/// independent sets both sides must agree on membership.
fn glue(kind: IndexKind, left: &[Integer; 2], status: usize) -> Integer {
    match (kind, status) {
        (IndexKind::Hosoya, 0) => Integer::from(&left[0] + &left[1]),
        (IndexKind::Hosoya, _) => left[0].clone(),
        (IndexKind::MerrifieldSimmons, s) => left[s].clone(),
    }
}

/// Index of `build_chain(seq)` in `O(n)` big-integer steps.
///
/// The state is a pair of counts for the current cut vertex being unused or
/// used. The first hexagon is entered through a phantom vertex that imposes
/// no constraint: `(1, 0)` for matchings (nothing on the left covers it) and
/// `(1, 1)` for independent sets (either membership is allowed).
pub fn count_chain(seq: &AttachmentSequence, kind: IndexKind) -> BigCount {
    let n = seq.n();
    if n == 0 {
        return BigCount::one();
    }
    let mut state = match kind {
        IndexKind::Hosoya => [Integer::from(1), Integer::from(0)],
        IndexKind::MerrifieldSimmons => [Integer::from(1), Integer::from(1)],
    };
    // Hexagon k (1-based, k < n) hands over to hexagon k + 1. For k = 1 the
    // exit position is immaterial because the phantom entry is summed out.
    for k in 1..n {
        let d = if k == 1 {
            AttachmentType::Para
        } else {
            seq.choices()[k - 2]
        };
        let t = hexagon_transfer(d, kind);
        let in0 = glue(kind, &state, 0);
        let in1 = glue(kind, &state, 1);
        state = [
            Integer::from(&in0 * t.entry(0, 0)) + Integer::from(&in1 * t.entry(1, 0)),
            Integer::from(&in0 * t.entry(0, 1)) + Integer::from(&in1 * t.entry(1, 1)),
        ];
    }
    let last = hexagon_transfer(AttachmentType::Para, kind);
    let total = glue(kind, &state, 0) * last.row_sum(0) + glue(kind, &state, 1) * last.row_sum(1);
    BigCount::from(total)
}
