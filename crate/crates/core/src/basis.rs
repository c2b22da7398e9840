//! Computational-basis conventions shared by every module.
//!
//! The three-qubit basis is ordered `|1> = |111>, |2> = |110>, ..., |8> = |000>`,
//! i.e. zero-based index `k` carries the logical qubit values
//! `(A, B, C) = complement of the binary digits of k`. Each single-qubit
//! factor is therefore ordered `(|1>, |0>)`, and Kronecker products taken in
//! the order `A (x) B (x) C` land on exactly this ordering.
//!
//! The dephasing decay classes and the state constructors both read from
//! this module so that the coherence index sets and the kets they act on
//! cannot drift apart.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One of the three qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Qubit {
    A,
    B,
    C,
}

impl Qubit {
    pub const ALL: [Qubit; 3] = [Qubit::A, Qubit::B, Qubit::C];

    /// Position of the qubit in the tensor product (A is outermost).
    pub fn position(self) -> usize {
        match self {
            Qubit::A => 0,
            Qubit::B => 1,
            Qubit::C => 2,
        }
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Qubit::A => "A",
            Qubit::B => "B",
            Qubit::C => "C",
        };
        f.write_str(s)
    }
}

/// Kets in basis order, written as logical values of `A B C`.
pub const BASIS_LABELS: [&str; 8] = ["111", "110", "101", "100", "011", "010", "001", "000"];

/// Bit mask selecting `qubit`'s slot in an index of an `n_qubits` register.
pub fn slot_mask(qubit: Qubit, n_qubits: usize) -> usize {
    1 << (n_qubits - 1 - qubit.position())
}

/// Zero-based basis index of the ket with logical values `(a, b, c)`.
pub const fn basis_index(a: u8, b: u8, c: u8) -> usize {
    debug_assert!(a <= 1 && b <= 1 && c <= 1);
    4 * (1 - a as usize) + 2 * (1 - b as usize) + (1 - c as usize)
}

/// Logical values `(A, B, C)` of the ket at zero-based `index`.
pub fn logical_values(index: usize) -> [u8; 3] {
    debug_assert!(index < 8);
    [
        1 - ((index >> 2) & 1) as u8,
        1 - ((index >> 1) & 1) as u8,
        1 - (index & 1) as u8,
    ]
}

/// Number of qubits on which kets `i` and `j` differ. A coherence
/// `rho_ij` under independent dephasing decays as `exp(-order * f(t))`.
pub const fn decay_order(i: usize, j: usize) -> u32 {
    ((i ^ j) & 7).count_ones()
}

/// One-based index pairs whose coherence decays as `exp(-f)`.
pub const SINGLE_DECAY: [(usize, usize); 12] = [
    (1, 2),
    (1, 3),
    (1, 5),
    (2, 4),
    (2, 6),
    (3, 4),
    (3, 7),
    (4, 8),
    (5, 6),
    (5, 7),
    (6, 8),
    (7, 8),
];

/// One-based index pairs whose coherence decays as `exp(-2f)`.
pub const DOUBLE_DECAY: [(usize, usize); 12] = [
    (1, 4),
    (1, 6),
    (1, 7),
    (2, 3),
    (2, 5),
    (2, 8),
    (3, 5),
    (3, 8),
    (4, 6),
    (4, 7),
    (5, 8),
    (6, 7),
];

/// One-based index pairs whose coherence decays as `exp(-3f)`.
pub const TRIPLE_DECAY: [(usize, usize); 4] = [(1, 8), (2, 7), (3, 6), (4, 5)];
