use std::cmp::Ordering;

use crate::bounds::RootBounds;
use crate::number::Surd;
use crate::resolvents::ResolventSet;

use super::{Endpoint, EndpointTag};

/// `L`, `U`, zero, and the real resolvent roots strictly inside `(L, U)`,
/// sorted, with coincident values merged into one endpoint.
pub fn endpoint_lattice(r: &ResolventSet, bounds: &RootBounds) -> Vec<Endpoint> {
    let lower = Endpoint::surd(Surd::from_rational(bounds.lower.clone()), EndpointTag::LowerBound);
    let upper = Endpoint::surd(Surd::from_rational(bounds.upper.clone()), EndpointTag::UpperBound);
    let mut inner = vec![Endpoint::surd(Surd::zero(), EndpointTag::Zero)];
    let mut push = |v: &Option<Surd>, tag| {
        if let Some(v) = v {
            inner.push(Endpoint::surd(v.clone(), tag));
        }
    };
    if r.phi.is_real() {
        push(&r.phi.larger, EndpointTag::Phi1);
        push(&r.phi.smaller, EndpointTag::Phi2);
    }
    if r.psi.is_real() || r.psi.status == crate::resolvents::RootStatus::Linear {
        push(&r.psi.larger, EndpointTag::Psi1);
        push(&r.psi.smaller, EndpointTag::Psi2);
    }
    insert_points(vec![lower, upper], inner)
}

/// Adds the points strictly inside the first and last endpoints of a
/// lattice, keeping it sorted and merged. Existing endpoints keep their tag.
pub(crate) fn insert_points(lattice: Vec<Endpoint>, extra: Vec<Endpoint>) -> Vec<Endpoint> {
    let first = lattice.first().expect("empty lattice").value.clone();
    let last = lattice.last().unwrap().value.clone();
    let mut all = lattice;
    all.extend(extra.into_iter().filter(|e| {
        e.value.compare(&first) == Ordering::Greater && e.value.compare(&last) == Ordering::Less
    }));
    // stable: earlier entries win ties
    all.sort_by(|a, b| a.value.compare(&b.value));
    let mut out: Vec<Endpoint> = Vec::with_capacity(all.len());
    for e in all {
        match out.last_mut() {
            Some(prev) if prev.value == e.value => {
                for t in std::iter::once(e.tag).chain(e.aliases) {
                    if !prev.has_tag(t) {
                        prev.aliases.push(t);
                    }
                }
            }
            _ => out.push(e),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::root_bounds;
    use crate::quintic::MonicQuintic;
    use crate::rational::{int, rat};

    fn tags(q: &MonicQuintic) -> Vec<EndpointTag> {
        endpoint_lattice(&ResolventSet::compute(q), &root_bounds(q))
            .iter()
            .map(|e| e.tag)
            .collect()
    }

    #[test]
    fn reference_order() {
        let q = MonicQuintic::new(int(1), int(-2), rat(5, 6), rat(-1, 10), rat(-1, 2));
        use EndpointTag::*;
        assert_eq!(tags(&q), vec![LowerBound, Phi2, Psi2, Zero, Psi1, Phi1, UpperBound]);
    }

    #[test]
    fn complex_resolvents() {
        let q = MonicQuintic::new(int(0), int(1), int(1), int(0), int(1));
        use EndpointTag::*;
        assert_eq!(tags(&q), vec![LowerBound, Zero, UpperBound]);
    }

    #[test]
    fn coincident_roots_merge() {
        // q1 = x^2 + x - 2 has root 1; q2 = x^2 - 1 shares it
        let q = MonicQuintic::new(int(1), int(-2), int(1), int(0), int(-1));
        let lat = endpoint_lattice(&ResolventSet::compute(&q), &root_bounds(&q));
        let one: Vec<_> = lat.iter().filter(|e| e.has_tag(EndpointTag::Phi1)).collect();
        assert_eq!(one.len(), 1);
        assert!(one[0].has_tag(EndpointTag::Psi1));
    }
}
