use std::collections::{BTreeSet, VecDeque};

use crate::element::Element;

/// A finite group acting by permutations: of poset atoms for Lsc instances,
/// of summands for direct sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    degree: usize,
    generators: Vec<Vec<usize>>,
    group: Vec<Vec<usize>>,
}

/// Largest group closure we are willing to build.
const MAX_ORDER: usize = 50_000;

impl GroupAction {
    /// `generators[g][i]` is the image of point `i` under generator `g`.
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self, String> {
        for g in &generators {
            if !is_permutation(g, degree) {
                return Err(format!("{g:?} is not a permutation of {degree} points"));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut seen = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(h) = queue.pop_front() {
            for g in &generators {
                let gh: Vec<usize> = h.iter().map(|&i| g[i]).collect();
                if seen.insert(gh.clone()) {
                    if seen.len() > MAX_ORDER {
                        return Err(format!("generated group exceeds {MAX_ORDER} elements"));
                    }
                    queue.push_back(gh);
                }
            }
        }
        Ok(GroupAction {
            degree,
            generators,
            group: seen.into_iter().collect(),
        })
    }

    /// Builds a permutation from cycles such as `(a b)(c)`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Vec<usize>, String> {
        let mut perm: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(format!("point {p} outside a carrier of size {degree}"));
                }
                if used[p] {
                    return Err("a point appears in two cycles".to_string());
                }
                used[p] = true;
                perm[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(perm)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// Every group element, the identity included.
    pub fn group(&self) -> &[Vec<usize>] {
        &self.group
    }

    /// `α_g(x)`: moves the value at point `i` to point `g(i)`.
    pub fn apply(&self, g: &[usize], x: &Element) -> Element {
        match x {
            Element::Lsc(vs) => {
                let mut out = vs.clone();
                for (i, v) in vs.iter().enumerate() {
                    out[g[i]] = *v;
                }
                Element::Lsc(out)
            }
            Element::Tuple(xs) => {
                let mut out = xs.clone();
                for (i, v) in xs.iter().enumerate() {
                    out[g[i]] = v.clone();
                }
                Element::Tuple(out)
            }
            other => other.clone(),
        }
    }

    pub fn fixes(&self, x: &Element) -> bool {
        self.generators.iter().all(|g| self.apply(g, x) == *x)
    }

    pub fn orbit(&self, x: &Element) -> Vec<Element> {
        let set: BTreeSet<Element> = self.group.iter().map(|g| self.apply(g, x)).collect();
        set.into_iter().collect()
    }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n
        && p.iter().all(|&i| {
            let fresh = i < n && !seen[i];
            if fresh {
                seen[i] = true;
            }
            fresh
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::ExtValue;

    #[test]
    fn closure_of_a_three_cycle() {
        let g = GroupAction::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let action = GroupAction::new(3, vec![g]).unwrap();
        assert_eq!(action.group().len(), 3);
    }

    #[test]
    fn swap_moves_values() {
        let action = GroupAction::new(2, vec![vec![1, 0]]).unwrap();
        let f = Element::Lsc(vec![ExtValue::nat(3), ExtValue::nat(5)]);
        assert_eq!(
            action.apply(&[1, 0], &f),
            Element::Lsc(vec![ExtValue::nat(5), ExtValue::nat(3)])
        );
        assert!(!action.fixes(&f));
        assert_eq!(action.orbit(&f).len(), 2);
    }
}
