use super::{Algebra, AlgebraElement, AlgebraError, Generator, Letter};

/// One defining relation `lhs = rhs`, stored formally as the signed words of
/// `lhs − rhs` in the free algebra on the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub label: String,
    pub terms: Vec<(i64, Vec<Generator>)>,
}

/// A relation instance evaluated in some algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub relation: String,
    pub value: AlgebraElement,
}

impl Algebra {
    /// Every instance of the defining relations (i)–(iv).
    pub fn relation_instances(&self) -> Vec<RelationInstance> {
        let g = &self.graph;
        let vx = |v: usize| Generator::Vertex(v as u32);
        let lt = |e: usize, i: u32, star: bool| Generator::Letter(Letter::new(e, i, star));
        let mut out = Vec::new();

        // (i) uv = δ_uv u
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                let mut terms = vec![(1, vec![vx(u), vx(v)])];
                if u == v {
                    terms.push((-1, vec![vx(u)]));
                }
                out.push(RelationInstance {
                    label: format!("(i) {}·{}", g.vertex_id(u), g.vertex_id(v)),
                    terms,
                });
            }
        }

        // (ii) s(e)e_i = e_i = e_i r(e), r(e)e_i* = e_i* = e_i* s(e)
        for (ei, e) in g.edges().iter().enumerate() {
            for i in 1..=e.weight {
                let (x, xs) = (lt(ei, i, false), lt(ei, i, true));
                let (s, r) = (vx(e.src), vx(e.dst));
                let cases = [
                    ("s(e)e_i", vec![s, x], x),
                    ("e_i r(e)", vec![x, r], x),
                    ("r(e)e_i*", vec![r, xs], xs),
                    ("e_i* s(e)", vec![xs, s], xs),
                ];
                for (name, lhs, rhs) in cases {
                    out.push(RelationInstance {
                        label: format!("(ii) {name} e={} i={i}", e.id),
                        terms: vec![(1, lhs), (-1, vec![rhs])],
                    });
                }
            }
        }

        for v in 0..g.vertex_count() {
            let Ok(wv) = g.vertex_weight(v) else { continue };
            let out_edges = g.out_edges(v);

            // (iii) Σ_{e ∈ s⁻¹(v)} e_i e_j* = δ_ij v, letters beyond w(e) omitted
            for i in 1..=wv {
                for j in 1..=wv {
                    let mut terms: Vec<_> = out_edges
                        .iter()
                        .filter(|&&e| g.edge(e).weight >= i.max(j))
                        .map(|&e| (1, vec![lt(e, i, false), lt(e, j, true)]))
                        .collect();
                    if i == j {
                        terms.push((-1, vec![vx(v)]));
                    }
                    out.push(RelationInstance {
                        label: format!("(iii) v={} i={i} j={j}", g.vertex_id(v)),
                        terms,
                    });
                }
            }

            // (iv) Σ_{i ≤ w(v)} e_i* f_i = δ_ef r(e), letters beyond w(e) omitted
            for &e in out_edges {
                for &f in out_edges {
                    let top = g.edge(e).weight.min(g.edge(f).weight);
                    let mut terms: Vec<_> = (1..=top)
                        .map(|i| (1, vec![lt(e, i, true), lt(f, i, false)]))
                        .collect();
                    if e == f {
                        terms.push((-1, vec![vx(g.edge(e).dst)]));
                    }
                    out.push(RelationInstance {
                        label: format!(
                            "(iv) v={} e={} f={}",
                            g.vertex_id(v),
                            g.edge(e).id,
                            g.edge(f).id
                        ),
                        terms,
                    });
                }
            }
        }
        out
    }

    /// Evaluates a formal combination of words in this algebra, sending each
    /// generator through `image` and multiplying. Non-composable products
    /// vanish.
    pub fn evaluate_formal(
        &self,
        terms: &[(i64, Vec<Generator>)],
        mut image: impl FnMut(Generator) -> Result<AlgebraElement, AlgebraError>,
    ) -> Result<AlgebraElement, AlgebraError> {
        let mut total = self.zero();
        for (c, word) in terms {
            let mut prod: Option<AlgebraElement> = None;
            for &gen in word {
                let x = image(gen)?;
                prod = Some(match prod {
                    None => x,
                    Some(p) => self.multiply(&p, &x)?,
                });
            }
            if let Some(p) = prod {
                let scaled = self.scalar_mul(&self.field.from_i64(*c), &p)?;
                total = self.add(&total, &scaled)?;
            }
        }
        Ok(total)
    }

    /// Each defining relation evaluated with this algebra's own arithmetic as
    /// `lhs − rhs`. A consistent rewriting system makes all of them zero.
    pub fn relation_residuals(&self) -> Result<Vec<Residual>, AlgebraError> {
        self.relation_instances()
            .into_iter()
            .map(|r| {
                let value = self.evaluate_formal(&r.terms, |g| Ok(self.generator(g)))?;
                Ok(Residual {
                    relation: r.label,
                    value,
                })
            })
            .collect()
    }
}
