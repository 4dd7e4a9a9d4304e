//! Parser for polynomial expressions and affine 1-forms over `Q(i, sqrt3)`.
//!
//! Grammar (usual precedence, `^` binds tightest, unary minus tighter than `+`):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' INT)?
//! atom  := INT | IDENT | '(' expr ')'
//! ```
//!
//! `i` and `sqrt3` are constants, `dx` and `dy` are differentials. Division
//! is only allowed by nonzero constants.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::ParseError;
use crate::exactfield::{FieldElem, Rational};
use crate::multipoly::{MPoly, VarSet};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < b.len() {
        let c = b[k] as char;
        if c.is_ascii_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let st = k;
            while k < b.len() && (b[k] as char).is_ascii_digit() {
                k += 1;
            }
            out.push((st, Tok::Int(s[st..k].parse().unwrap())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = k;
            while k < b.len() && ((b[k] as char).is_ascii_alphanumeric() || b[k] == b'_') {
                k += 1;
            }
            out.push((st, Tok::Ident(s[st..k].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((k, Tok::Op(c)));
            k += 1;
        } else {
            return Err(ParseError::Syntax { pos: k, msg: format!("unexpected character `{}`", c) });
        }
    }
    Ok(out)
}

fn is_reserved(n: &str) -> bool {
    matches!(n, "i" | "sqrt3" | "dx" | "dy")
}

/// Identifiers used as variables, in order of first appearance.
fn collect_vars(toks: &[(usize, Tok)]) -> Vec<String> {
    let mut v: Vec<String> = Vec::new();
    for (_, t) in toks {
        if let Tok::Ident(n) = t {
            if !is_reserved(n) && !v.contains(n) {
                v.push(n.clone());
            }
        }
    }
    v
}

/// Value with an optional linear dependence on `dx`, `dy`.
#[derive(Clone)]
struct Val {
    s: MPoly,
    dx: MPoly,
    dy: MPoly,
}

impl Val {
    fn scalar(s: MPoly) -> Self {
        let z = MPoly::zero(s.ring());
        Val { s, dx: z.clone(), dy: z }
    }
    fn has_diff(&self) -> bool {
        !self.dx.is_zero() || !self.dy.is_zero()
    }
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    k: usize,
    ring: VarSet,
    end: usize,
}

impl<'a> Parser<'a> {
    fn pos(&self) -> usize {
        self.toks.get(self.k).map(|t| t.0).unwrap_or(self.end)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.k).map(|t| &t.1)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.k += 1;
            let t = self.term()?;
            acc = if c == '+' {
                Val { s: &acc.s + &t.s, dx: &acc.dx + &t.dx, dy: &acc.dy + &t.dy }
            } else {
                Val { s: &acc.s - &t.s, dx: &acc.dx - &t.dx, dy: &acc.dy - &t.dy }
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            let at = self.pos();
            self.k += 1;
            let t = self.unary()?;
            if c == '*' {
                if acc.has_diff() && t.has_diff() {
                    return Err(ParseError::NonLinearDifferential { pos: at });
                }
                acc = Val {
                    s: &acc.s * &t.s,
                    dx: &(&acc.dx * &t.s) + &(&acc.s * &t.dx),
                    dy: &(&acc.dy * &t.s) + &(&acc.s * &t.dy),
                };
            } else {
                let c = match (t.has_diff(), t.s.constant_value()) {
                    (false, Some(c)) if !c.is_zero() => c,
                    _ => return Err(ParseError::Syntax { pos: at, msg: "division only by nonzero constants".into() }),
                };
                let inv = c.inv().expect("nonzero");
                acc = Val { s: acc.s.scale(&inv), dx: acc.dx.scale(&inv), dy: acc.dy.scale(&inv) };
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Val, ParseError> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.k += 1;
                let v = self.unary()?;
                Ok(Val { s: -&v.s, dx: -&v.dx, dy: -&v.dy })
            }
            Some(Tok::Op('+')) => {
                self.k += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Val, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            let at = self.pos();
            self.k += 1;
            let e = match self.peek() {
                Some(Tok::Int(n)) => {
                    let n = n.clone();
                    self.k += 1;
                    u32::try_from(n).map_err(|_| ParseError::Syntax { pos: at, msg: "exponent too large".into() })?
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            };
            if base.has_diff() {
                return match e {
                    1 => Ok(base),
                    _ => Err(ParseError::NonLinearDifferential { pos: at }),
                };
            }
            return Ok(Val::scalar(base.s.pow(e)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Val, ParseError> {
        let ring = self.ring.clone();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.k += 1;
                Ok(Val::scalar(MPoly::constant(&ring, FieldElem::from_rational(Rational::from_integer(n)))))
            }
            Some(Tok::Ident(n)) => {
                self.k += 1;
                let z = MPoly::zero(&ring);
                let one = MPoly::one(&ring);
                Ok(match n.as_str() {
                    "i" => Val::scalar(MPoly::constant(&ring, FieldElem::i())),
                    "sqrt3" => Val::scalar(MPoly::constant(&ring, FieldElem::sqrt3())),
                    "dx" => Val { s: z.clone(), dx: one, dy: z },
                    "dy" => Val { s: z.clone(), dx: z, dy: one },
                    _ => Val::scalar(MPoly::var(&ring, &n).expect("collected variable")),
                })
            }
            Some(Tok::Op('(')) => {
                self.k += 1;
                let v = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.k += 1;
                        Ok(v)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn run(text: &str, leading: &[&str]) -> Result<Val, ParseError> {
    let toks = tokenize(text)?;
    let mut names: Vec<String> = leading.iter().map(|s| s.to_string()).collect();
    for n in collect_vars(&toks) {
        if !names.contains(&n) {
            names.push(n);
        }
    }
    let ring = VarSet::new(&names).map_err(|e| ParseError::Syntax { pos: 0, msg: e.to_string() })?;
    let mut p = Parser { toks: &toks, k: 0, ring, end: text.len() };
    if toks.is_empty() {
        return p.err("empty expression");
    }
    let v = p.expr()?;
    if p.k != toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parse a polynomial. The ring starts with `leading` and continues with the
/// remaining identifiers in order of appearance.
pub fn parse_poly(text: &str, leading: &[&str]) -> Result<MPoly, ParseError> {
    let v = run(text, leading)?;
    if v.has_diff() {
        return Err(ParseError::Syntax { pos: 0, msg: "unexpected differential in polynomial".into() });
    }
    Ok(v.s)
}

/// Parse `P*dx + Q*dy`, returning `(P, Q)` in the ring `(x, y, params...)`.
pub fn parse_oneform_parts(text: &str) -> Result<(MPoly, MPoly), ParseError> {
    let v = run(text, &["x", "y"])?;
    if !v.s.is_zero() {
        return Err(ParseError::Syntax { pos: 0, msg: "term without differential".into() });
    }
    if !v.has_diff() {
        return Err(ParseError::Syntax { pos: 0, msg: "the 1-form is zero".into() });
    }
    Ok((v.dx, v.dy))
}

/// Parse a single field constant such as `-3/2 + i*sqrt3`.
pub fn parse_constant(text: &str) -> Result<FieldElem, ParseError> {
    let p = parse_poly(text, &["_"])?;
    p.constant_value().ok_or(ParseError::Syntax { pos: 0, msg: "not a constant".into() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oneform_examples() {
        let (p, q) = parse_oneform_parts("y^3*dx - x^3*dy").unwrap();
        assert_eq!(p.to_string(), "y^3");
        assert_eq!(q.to_string(), "-x^3");
        let (p, q) = parse_oneform_parts("y^2*(y*dx+2*x*dy)+x^3*(x*dy-y*dx)").unwrap();
        assert_eq!(p.to_string(), "-x^3*y + y^3");
        assert_eq!(q.to_string(), "x^4 + 2*x*y^2");
        let (p, _) = parse_oneform_parts("(-3+i*sqrt3)*x*y^2*dx").unwrap();
        let c = p.leading_coeff();
        assert_eq!(c, FieldElem::from_int(-3) + FieldElem::i_sqrt3());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_oneform_parts("dx*dy"), Err(ParseError::NonLinearDifferential { .. })));
        assert!(matches!(parse_oneform_parts("dx^2"), Err(ParseError::NonLinearDifferential { .. })));
        assert_eq!(parse_poly("x + * y", &[]), Err(ParseError::Syntax { pos: 4, msg: "unexpected token".into() }));
        assert!(matches!(parse_poly("x $", &[]), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("(x", &[]), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(parse_poly("x/y", &[]).is_err());
    }

    #[test]
    fn print_parse_roundtrip() {
        let f = parse_poly("1/2*x^2*y - (1 + i)*y + i*sqrt3 - 3*sqrt3*x", &["x", "y"]).unwrap();
        let g = parse_poly(&f.to_string(), &["x", "y"]).unwrap();
        assert_eq!(f, g);
        assert_eq!(parse_constant("-3/2 - i*sqrt3/2").unwrap().to_string(), "-3/2 - 1/2*i*sqrt3");
        assert!(parse_constant("x").is_err());
    }
}
