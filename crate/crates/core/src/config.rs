use crate::perm::factorial;

/// Resource caps. Exceeding any of them is reported as an error, never by
/// truncating the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Largest edge size for which brackets (k! terms each) are built.
    pub max_arity: usize,
    /// Largest number of permutations materialised by any expansion.
    pub max_expand: u128,
    /// Largest matrix (or section block) handled by the Leibniz expansion.
    pub max_leibniz_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_arity: 6,
            max_expand: factorial(10),
            max_leibniz_dim: 9,
        }
    }
}
