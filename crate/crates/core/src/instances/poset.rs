use crate::value::ExtValue;

/// Largest supported carrier.
pub const MAX_ATOMS: usize = 16;

/// A finite poset on named atoms, stored as its order matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    atoms: Vec<String>,
    le: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the reflexive-transitive closure of the strict relations
    /// `(a, b)` meaning `a < b`, and rejects cycles.
    pub fn new(atoms: Vec<String>, less: &[(usize, usize)]) -> Result<Self, String> {
        let n = atoms.len();
        if n > MAX_ATOMS {
            return Err(format!("poset has {n} atoms, at most {MAX_ATOMS} are supported"));
        }
        for (i, a) in atoms.iter().enumerate() {
            if atoms[..i].contains(a) {
                return Err(format!("atom `{a}` listed twice"));
            }
        }
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in less {
            if a >= n || b >= n {
                return Err(format!("relation refers to atom index {} outside the carrier", a.max(b)));
            }
            le[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    let row = le[k].clone();
                    for (cell, &kj) in le[i].iter_mut().zip(&row) {
                        *cell |= kj;
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if le[i][j] && le[j][i] {
                    return Err(format!(
                        "relations make `{}` and `{}` equal; the order must be antisymmetric",
                        atoms[i], atoms[j]
                    ));
                }
            }
        }
        Ok(Poset { atoms, le })
    }

    pub fn antichain(names: &[&str]) -> Self {
        Poset::new(names.iter().map(|s| s.to_string()).collect(), &[]).expect("antichain is valid")
    }

    /// `names[0] < names[1] < …`.
    pub fn chain(names: &[&str]) -> Self {
        let less: Vec<_> = (1..names.len()).map(|i| (i - 1, i)).collect();
        Poset::new(names.iter().map(|s| s.to_string()).collect(), &less).expect("chain is valid")
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == atom)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && self.le[a][b]
                    && !(0..n).any(|c| c != a && c != b && self.le[a][c] && self.le[c][b])
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Atoms ordered so that every atom comes after all atoms below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| (0..self.len()).filter(|&j| self.le[j][i]).count());
        idx
    }

    /// Order-preserving maps are exactly the lower semicontinuous ones for
    /// the Alexandrov topology whose opens are up-sets.
    pub fn is_monotone(&self, values: &[ExtValue]) -> bool {
        values.len() == self.len()
            && (0..self.len())
                .all(|i| (0..self.len()).all(|j| !self.le[i][j] || values[i] <= values[j]))
    }

    pub fn is_up_set(&self, mask: u32) -> bool {
        (0..self.len()).all(|i| {
            mask & (1 << i) == 0 || (0..self.len()).all(|j| !self.le[i][j] || mask & (1 << j) != 0)
        })
    }

    /// A bijection of the carrier that preserves and reflects the order.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.len();
        if perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.le[i][j] == self.le[perm[i]][perm[j]]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_is_transitive() {
        let p = Poset::chain(&["a", "b", "c"]);
        assert!(p.le(0, 2));
        assert!(!p.le(2, 0));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn cycles_are_rejected() {
        let atoms = vec!["a".to_string(), "b".to_string()];
        assert!(Poset::new(atoms, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn up_sets_of_a_chain() {
        let p = Poset::chain(&["a", "b"]);
        let ups: Vec<u32> = (0..4).filter(|&m| p.is_up_set(m)).collect();
        assert_eq!(ups, vec![0, 2, 3]);
    }

    #[test]
    fn swap_is_an_automorphism_of_an_antichain_only() {
        assert!(Poset::antichain(&["a", "b"]).is_automorphism(&[1, 0]));
        assert!(!Poset::chain(&["a", "b"]).is_automorphism(&[1, 0]));
    }
}
