use super::{Algebra, AlgebraElement, AlgebraError, AlgebraOptions, Generator, Letter, Path};
use crate::graph::{GraphError, VertexSet};

/// The surjection `L_k(E, w) → L_k(E/H, w)` killing a hereditary saturated
/// set `H`: vertices of `H` and letters of edges ending in `H` go to zero,
/// everything else goes to the generator of the same name.
#[derive(Debug, Clone)]
pub struct Quotient {
    target: Algebra,
    vertex_map: Vec<Option<u32>>,
    edge_map: Vec<Option<u32>>,
}

impl Quotient {
    /// The quotient algebra uses the same field and fuel, and its own default
    /// `α`.
    pub fn new(source: &Algebra, h: &VertexSet) -> Result<Quotient, AlgebraError> {
        let g = source.graph();
        if !g.is_hereditary(h)? {
            return Err(GraphError::NotHereditary.into());
        }
        if !g.is_saturated(h)? {
            return Err(GraphError::NotSaturated.into());
        }
        let qg = g.quotient_graph(h)?;
        let target = Algebra::build(
            &qg,
            AlgebraOptions {
                alpha: None,
                ..source.options()
            },
        )?;
        let vertex_map = g
            .vertices()
            .iter()
            .map(|id| qg.vertex(id).map(|v| v as u32))
            .collect();
        let edge_map = g
            .edges()
            .iter()
            .map(|e| qg.edge_by_id(&e.id).map(|e| e as u32))
            .collect();
        Ok(Quotient {
            target,
            vertex_map,
            edge_map,
        })
    }

    /// `L_k(E/H, w)`. Its graph may be empty, in which case it is zero.
    pub fn algebra(&self) -> &Algebra {
        &self.target
    }

    /// Image of a single generator of the source.
    pub fn map_generator(&self, g: Generator) -> AlgebraElement {
        let image = match g {
            Generator::Vertex(v) => self.vertex_map[v as usize].map(Generator::Vertex),
            Generator::Letter(l) => {
                self.edge_map[l.edge as usize].map(|e| Generator::Letter(Letter { edge: e, ..l }))
            }
        };
        match image {
            Some(x) => self.target.generator(x),
            None => self.target.zero(),
        }
    }

    /// Image of an element of the source, reduced in the quotient.
    pub fn map(&self, x: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let mut raw = Vec::with_capacity(x.len());
        'terms: for (p, c) in x.terms() {
            let path = match p {
                Path::Vertex(v) => match self.vertex_map[*v as usize] {
                    Some(v) => Path::Vertex(v),
                    None => continue,
                },
                Path::Word(w) => {
                    let mut out = Vec::with_capacity(w.len());
                    for l in w {
                        match self.edge_map[l.edge as usize] {
                            Some(e) => out.push(Letter { edge: e, ..*l }),
                            None => continue 'terms,
                        }
                    }
                    Path::Word(out)
                }
            };
            raw.push((c.clone(), path));
        }
        self.target.reduce_paths(raw, &mut super::Leftmost)
    }

    /// Image of a formal combination of source words, such as a relation
    /// instance, evaluated in the quotient.
    pub fn map_formal(
        &self,
        terms: &[(i64, Vec<Generator>)],
    ) -> Result<AlgebraElement, AlgebraError> {
        self.target
            .evaluate_formal(terms, |g| Ok(self.map_generator(g)))
    }
}

impl Algebra {
    /// Shorthand for [`Quotient::new`] followed by [`Quotient::map`].
    pub fn quotient_map(
        &self,
        x: &AlgebraElement,
        h: &VertexSet,
    ) -> Result<AlgebraElement, AlgebraError> {
        Quotient::new(self, h)?.map(x)
    }
}
