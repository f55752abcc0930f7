//! The concrete catalog: posets, group actions and grid enumeration.

mod action;
mod poset;

pub use action::GroupAction;
pub use poset::{Poset, MAX_ATOMS};

use crate::element::Element;
use crate::error::{CuError, Result};
use crate::sample::{SampleSpec, ValueGrid};
use crate::semigroup::{Kind, Semigroup};
use crate::value::ExtValue;

impl Semigroup {
    /// All elements whose values lie on the grid of `sample`, in a fixed
    /// order, starting with zero.
    pub fn enumerate(&self, sample: &SampleSpec) -> Result<Vec<Element>> {
        sample.validate()?;
        self.enumerate_grid(&sample.grid())
    }

    /// Like [`Semigroup::enumerate`] over an explicit value grid.
    pub fn enumerate_grid(&self, grid: &ValueGrid) -> Result<Vec<Element>> {
        let bound = grid.bound();
        let too_large = |count: u128| CuError::GridTooLarge { count, bound };
        let out = match self.kind() {
            Kind::ExtNat => grid.naturals().iter().map(|v| Element::Scalar(*v)).collect(),
            Kind::ExtQ => grid.rationals().iter().map(|v| Element::Scalar(*v)).collect(),
            Kind::TwoPoint => vec![Element::Scalar(ExtValue::zero()), Element::infinity()],
            Kind::JiangSu => {
                let cap = grid.naturals().len() as u64 - 2;
                let mut out: Vec<Element> = (0..=cap).map(Element::compact).collect();
                out.extend(grid.positive_rationals().map(|q| Element::soft(*q)));
                out
            }
            Kind::LscNat(p) => monotone_maps(p, grid.naturals(), bound)?,
            Kind::LscQ(p) => monotone_maps(p, grid.rationals(), bound)?,
            Kind::Sum(cs) => {
                let parts = cs.iter().map(|c| c.enumerate_grid(grid)).collect::<Result<Vec<_>>>()?;
                let count = parts.iter().map(|p| p.len() as u128).product::<u128>();
                if count > bound as u128 {
                    return Err(too_large(count));
                }
                product(&parts)
            }
            Kind::Fixed { ambient, action } => ambient
                .enumerate_grid(grid)?
                .into_iter()
                .filter(|x| action.fixes(x))
                .collect(),
            Kind::SoftPart(ambient) => ambient
                .enumerate_grid(grid)?
                .into_iter()
                .filter(|x| crate::soft::closed_form(ambient, x))
                .collect(),
        };
        if out.len() as u64 > bound {
            return Err(too_large(out.len() as u128));
        }
        Ok(out)
    }
}

fn monotone_maps(p: &Poset, values: &[ExtValue], bound: u64) -> Result<Vec<Element>> {
    let order = p.linear_extension();
    let mut out = Vec::new();
    let mut current = vec![ExtValue::zero(); p.len()];
    let mut count: u64 = 0;
    fill(p, &order, 0, values, &mut current, &mut out, &mut count, bound)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    p: &Poset,
    order: &[usize],
    depth: usize,
    values: &[ExtValue],
    current: &mut Vec<ExtValue>,
    out: &mut Vec<Element>,
    count: &mut u64,
    bound: u64,
) -> Result<()> {
    if depth == order.len() {
        *count += 1;
        if *count > bound {
            return Err(CuError::GridTooLarge { count: *count as u128, bound });
        }
        out.push(Element::Lsc(current.clone()));
        return Ok(());
    }
    let atom = order[depth];
    let floor = order[..depth]
        .iter()
        .filter(|&&b| p.le(b, atom))
        .map(|&b| current[b])
        .max()
        .unwrap_or_default();
    for v in values.iter().filter(|v| **v >= floor) {
        current[atom] = *v;
        fill(p, order, depth + 1, values, current, out, count, bound)?;
    }
    Ok(())
}

fn product(parts: &[Vec<Element>]) -> Vec<Element> {
    let mut out: Vec<Vec<Element>> = vec![Vec::new()];
    for part in parts {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                part.iter().map(move |x| {
                    let mut t = prefix.clone();
                    t.push(x.clone());
                    t
                })
            })
            .collect();
    }
    out.into_iter().map(Element::Tuple).collect()
}
