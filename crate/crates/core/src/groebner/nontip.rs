use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::pathalg::Path;

/// All paths containing no tip of `g`, in increasing order. Fails once more
/// than `max_basis` paths have been found.
pub fn nontip_enumerate(g: &GroebnerBasis, max_basis: usize) -> Result<Vec<Path>> {
    let quiver = g.quiver().clone();
    let mut level: Vec<Path> = (0..quiver.vertex_count()).map(Path::trivial).collect();
    let mut out: Vec<Path> = Vec::new();
    while !level.is_empty() {
        out.extend(level.iter().cloned());
        if out.len() > max_basis {
            return Err(Error::InfiniteDimensional { cap: max_basis });
        }
        let mut next = Vec::new();
        for p in &level {
            for a in quiver.arrows_from(p.end()) {
                let q = p.then_arrow(a, &quiver).expect("arrow leaves p's end");
                // p has no tip, so only occurrences ending at the new arrow matter.
                if g.tip_written_prefix(&q).is_none() {
                    next.push(q);
                }
            }
        }
        level = next;
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exactla::FieldSpec;
    use crate::groebner::complete;
    use crate::pathalg::{parse_element, Quiver};

    fn basis(arrows: &[&str], rels: &[&str]) -> Result<Vec<String>> {
        let mut q = Quiver::new();
        q.add_vertex("v").unwrap();
        for a in arrows {
            q.add_arrow(a, 0, 0).unwrap();
        }
        let q = Arc::new(q);
        let f = FieldSpec::rationals();
        let gens: Vec<_> = rels.iter().map(|r| parse_element(&q, f, r).unwrap()).collect();
        let gb = complete(q.clone(), f, &gens, 50).unwrap();
        Ok(nontip_enumerate(&gb, 1000)?.iter().map(|p| q.format_path(p)).collect())
    }

    #[test]
    fn monomial_two_loops() {
        assert_eq!(basis(&["y", "x"], &["x*y", "x^2", "y^2"]).unwrap(), vec!["e_v", "y", "x", "y*x"]);
    }

    #[test]
    fn truncated_polynomial() {
        assert_eq!(basis(&["x"], &["x^3"]).unwrap(), vec!["e_v", "x", "x^2"]);
    }

    #[test]
    fn free_loop_is_infinite() {
        assert!(matches!(basis(&["x"], &[]), Err(Error::InfiniteDimensional { cap: 1000 })));
    }
}
