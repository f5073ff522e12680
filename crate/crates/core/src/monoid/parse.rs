//! `element := term ('+' term)* | "0"`, `term := [integer '*'] vertexId`.

use num_traits::ToPrimitive;

use super::{GraphMonoid, MonoidElement, MonoidError};
use crate::algebra::expr::{Cursor, Token};
use crate::graph::GraphError;

impl GraphMonoid {
    /// Parses a nonnegative combination of vertices such as `2*v1 + v2`.
    pub fn parse(&self, input: &str) -> Result<MonoidElement, MonoidError> {
        let mut cur = Cursor::new(input)?;
        let mut x = self.zero();
        if cur.is_lone_zero() {
            return Ok(x);
        }
        loop {
            let mut coeff = 1u64;
            if let Some(Token::Int(n)) = cur.peek() {
                coeff = n.to_u64().ok_or_else(|| {
                    cur.error("coefficient must be a nonnegative integer below 2^64")
                })?;
                cur.next();
                cur.expect(Token::Star, "`*`")?;
            }
            let at = cur.position();
            let id = match cur.next() {
                Some(Token::Ident(id)) => id,
                _ => {
                    return Err(crate::algebra::ParseError::new(at, "expected a vertex id").into());
                }
            };
            let v = self
                .graph
                .vertex(&id)
                .ok_or(GraphError::UnknownVertex(id))?;
            x.counts[v] = x.counts[v]
                .checked_add(coeff)
                .ok_or(MonoidError::Overflow)?;
            if cur.at_end() {
                return Ok(x);
            }
            match cur.peek() {
                Some(Token::Plus) => {
                    cur.next();
                }
                Some(Token::Minus) => {
                    return Err(cur.error("monoid elements have no subtraction").into());
                }
                _ => return Err(cur.unexpected("`+`").into()),
            }
        }
    }
}
