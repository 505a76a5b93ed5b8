//! Per-thread call counters used by the symmetry audit.
//!
//! Every call to the additive symmetry of a rig category bumps
//! `symmetry`. Calls made while a structural matrix isomorphism (matrix
//! associator, matrix distributivity) is being assembled are credited to
//! that isomorphism instead, so `symmetry` counts only direct uses.

use std::cell::Cell;

thread_local! {
    static SYMMETRY: Cell<u64> = const { Cell::new(0) };
    static SYMMETRY_IN_STRUCTURE: Cell<u64> = const { Cell::new(0) };
    static MAT_ASSOC: Cell<u64> = const { Cell::new(0) };
    static MAT_DIST: Cell<u64> = const { Cell::new(0) };
    static DEPTH: Cell<u32> = const { Cell::new(0) };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
pub struct Snapshot {
    /// Direct uses of the additive symmetry.
    pub symmetry: u64,
    /// Symmetry uses inside structural matrix isomorphisms.
    pub symmetry_in_structure: u64,
    pub mat_assoc: u64,
    pub mat_dist: u64,
}

impl Snapshot {
    pub fn since(&self, earlier: &Snapshot) -> Snapshot {
        Snapshot {
            symmetry: self.symmetry - earlier.symmetry,
            symmetry_in_structure: self.symmetry_in_structure - earlier.symmetry_in_structure,
            mat_assoc: self.mat_assoc - earlier.mat_assoc,
            mat_dist: self.mat_dist - earlier.mat_dist,
        }
    }
}

pub fn snapshot() -> Snapshot {
    Snapshot {
        symmetry: SYMMETRY.with(Cell::get),
        symmetry_in_structure: SYMMETRY_IN_STRUCTURE.with(Cell::get),
        mat_assoc: MAT_ASSOC.with(Cell::get),
        mat_dist: MAT_DIST.with(Cell::get),
    }
}

pub(crate) fn record_symmetry() {
    if DEPTH.with(Cell::get) > 0 {
        SYMMETRY_IN_STRUCTURE.with(|c| c.set(c.get() + 1));
    } else {
        SYMMETRY.with(|c| c.set(c.get() + 1));
    }
}

pub(crate) fn record_mat_assoc() {
    MAT_ASSOC.with(|c| c.set(c.get() + 1));
}

pub(crate) fn record_mat_dist() {
    MAT_DIST.with(|c| c.set(c.get() + 1));
}

/// Marks the current thread as assembling a structural matrix isomorphism
/// until dropped.
pub(crate) struct StructureScope(());

impl StructureScope {
    pub(crate) fn enter() -> Self {
        DEPTH.with(|d| d.set(d.get() + 1));
        StructureScope(())
    }
}

impl Drop for StructureScope {
    fn drop(&mut self) {
        DEPTH.with(|d| d.set(d.get() - 1));
    }
}
